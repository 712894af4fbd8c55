//! Exhaustive verification of the enumerative statements for small `n`.
//!
//! Every closed form is compared against a count obtained by brute force
//! over diagrams or permutations. Failures are recorded, never raised.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arc::{all_arcs, Side};
use crate::congruence::{ArcSet, Congruence, NamedCongruence};
use crate::counting::{baxter, catalan, count_by_arcs, eulerian, narayana, prodmin};
use crate::diagram::{delta, for_each_diagram, Diagram};
use crate::error::{Error, Result};
use crate::permutation::{all_permutations, Permutation};

/// Largest `n_max` accepted by [`verify_report`].
pub const DEFAULT_VERIFY_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub n: usize,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
    ) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let status = if expected == observed {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckRecord {
            name: name.into(),
            n,
            expected,
            observed,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Adds closure and quotient checks for an arbitrary uncontracted set.
    pub fn check_arc_set(&mut self, label: &str, set: &ArcSet) {
        let n = set.n();
        let closure = set.check_subarc_closed();
        let observed = match &closure {
            Ok(()) => "closed".to_string(),
            Err(e) => e.to_string(),
        };
        self.checks.push(CheckRecord::new(
            format!("{label}: closed under subarcs"),
            n,
            "closed",
            observed,
        ));
        if closure.is_ok() {
            let c = Congruence::new(set.clone()).expect("closed set");
            self.checks.push(agreement(label, &c));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut current = None;
        for c in &self.checks {
            if current != Some(c.n) {
                writeln!(f, "== n = {} ==", c.n)?;
                current = Some(c.n);
            }
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            if c.passed() {
                writeln!(f, "  [{tag}] {}: {}", c.name, c.observed)?;
            } else {
                writeln!(
                    f,
                    "  [{tag}] {}: expected {}, observed {}",
                    c.name, c.expected, c.observed
                )?;
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

pub fn verify_report(n_max: usize) -> Result<Report> {
    verify_report_with_limit(n_max, DEFAULT_VERIFY_LIMIT)
}

/// Runs every check for `n = 1..=n_max`; sections run on separate threads
/// and are merged in ascending `n`.
pub fn verify_report_with_limit(n_max: usize, limit: usize) -> Result<Report> {
    if n_max > limit {
        return Err(Error::LimitExceeded { n: n_max, limit });
    }
    let sections: Vec<Vec<CheckRecord>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=n_max)
            .map(|n| scope.spawn(move || section(n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("section thread"))
            .collect()
    });
    Ok(Report {
        checks: sections.into_iter().flatten().collect(),
    })
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn row_string<T: fmt::Display>(row: &[T]) -> String {
    let parts: Vec<String> = row.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn agreement(label: &str, c: &Congruence) -> CheckRecord {
    let by_delta = c.uncontracted_by_delta();
    let by_patterns = c.uncontracted_by_patterns();
    let observed = if by_delta == by_patterns {
        format!("{} permutations", by_delta.len())
    } else {
        format!(
            "delta filter {} vs pattern avoidance {}",
            by_delta.len(),
            by_patterns.len()
        )
    };
    CheckRecord::new(
        format!("{label}: delta filter = pattern avoidance"),
        c.n(),
        format!("{} permutations", by_delta.len()),
        observed,
    )
}

fn no_consecutive_321(x: &Permutation) -> bool {
    x.entries()
        .windows(3)
        .all(|w| !(w[0] > w[1] && w[1] > w[2]))
}

fn is_alternating(x: &Permutation) -> bool {
    x.entries()
        .windows(2)
        .enumerate()
        .all(|(i, w)| (i % 2 == 0) == (w[0] > w[1]))
}

fn section(n: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let fact = factorial(n);

    // Diagrams versus permutations.
    let mut diagrams: Vec<Diagram> = Vec::new();
    let mut by_size = vec![0u64; n];
    let mut matchings = 0u64;
    let mut perfect = 0u64;
    let mut left_perfect = 0u64;
    for_each_diagram(
        n,
        |_| true,
        |d| {
            diagrams.push(d.clone());
            by_size[d.len()] += 1;
            let class = d.classify();
            if class.is_matching {
                matchings += 1;
            }
            if class.is_perfect_matching {
                perfect += 1;
                if d.arcs().iter().all(|a| a.is_left()) {
                    left_perfect += 1;
                }
            }
        },
    );
    out.push(CheckRecord::new("diagrams = n!", n, &fact, diagrams.len()));

    let images: HashSet<Diagram> = all_permutations(n).map(|x| delta(&x)).collect();
    out.push(CheckRecord::new(
        "|delta(S_n)| = n!",
        n,
        &fact,
        images.len(),
    ));
    let enumerated: HashSet<Diagram> = diagrams.iter().cloned().collect();
    out.push(CheckRecord::new(
        "delta(S_n) = enumerated diagrams",
        n,
        "equal",
        if images == enumerated {
            "equal"
        } else {
            "different"
        },
    ));

    let bad_forward = all_permutations(n)
        .filter(|x| delta(x).to_permutation() != *x)
        .count();
    out.push(CheckRecord::new(
        "delta_inverse(delta(x)) = x",
        n,
        "0 failures",
        format!("{bad_forward} failures"),
    ));
    let bad_backward = diagrams
        .iter()
        .filter(|d| delta(&d.to_permutation()) != **d)
        .count();
    out.push(CheckRecord::new(
        "delta(delta_inverse(D)) = D",
        n,
        "0 failures",
        format!("{bad_backward} failures"),
    ));

    let arcs = all_arcs(n).len();
    let irreducibles = all_permutations(n)
        .filter(|x| x.is_join_irreducible())
        .count();
    out.push(CheckRecord::new(
        "arcs = join-irreducibles = 2^n - n - 1",
        n,
        (1u64 << n) - n as u64 - 1,
        if arcs == irreducibles {
            arcs.to_string()
        } else {
            format!("{arcs} arcs vs {irreducibles} join-irreducibles")
        },
    ));

    let euler: Vec<BigUint> = (0..n).map(|k| eulerian(n, k)).collect();
    out.push(CheckRecord::new(
        "diagrams by arc count = Eulerian row",
        n,
        row_string(&euler),
        row_string(&by_size),
    ));

    // Matchings and consecutive 321 avoidance.
    let avoiders: HashSet<Permutation> = all_permutations(n).filter(no_consecutive_321).collect();
    let matched: HashSet<Permutation> = diagrams
        .iter()
        .filter(|d| d.classify().is_matching)
        .map(Diagram::to_permutation)
        .collect();
    out.push(CheckRecord::new(
        "matchings = consecutive-321 avoiders",
        n,
        format!("{} permutations, same set", avoiders.len()),
        if matched == avoiders {
            format!("{matchings} permutations, same set")
        } else {
            format!("{matchings} permutations, different set")
        },
    ));
    if n.is_multiple_of(2) {
        let alternating = all_permutations(n).filter(is_alternating).count();
        out.push(CheckRecord::new(
            "perfect matchings = alternating permutations",
            n,
            alternating,
            perfect,
        ));
        out.push(CheckRecord::new(
            "left perfect matchings = Catalan(n/2)",
            n,
            catalan(n / 2),
            left_perfect,
        ));
    }

    // Quotients.
    let tamari = Congruence::named(n, &NamedCongruence::Tamari).expect("tamari");
    let table = count_by_arcs(&tamari, "tamari");
    out.push(CheckRecord::new(
        "left diagrams = Catalan",
        n,
        catalan(n),
        table.total,
    ));
    let row: Vec<BigUint> = (0..n).map(|k| narayana(n, k + 1).unwrap()).collect();
    out.push(CheckRecord::new(
        "left diagrams by arc count = Narayana row",
        n,
        row_string(&row),
        row_string(&table.counts),
    ));

    let bax = Congruence::named(n, &NamedCongruence::Baxter).expect("baxter");
    out.push(CheckRecord::new(
        "left and right diagrams = Baxter",
        n,
        baxter(n).unwrap(),
        count_by_arcs(&bax, "baxter").total,
    ));

    for k in 1..=n {
        let c = Congruence::named(n, &NamedCongruence::MaxLen(k)).expect("maxlen");
        out.push(CheckRecord::new(
            format!("arcs of length < {k}: prod min(i, {k})"),
            n,
            prodmin(n, k).unwrap(),
            count_by_arcs(&c, "maxlen").total,
        ));
    }

    let clumped = Congruence::named(n, &NamedCongruence::Clumped(1)).expect("clumped");
    out.push(agreement("at most one inflection", &clumped));

    for orientation in cambrian_samples(n) {
        let name = NamedCongruence::Cambrian(orientation);
        let c = Congruence::named(n, &name).expect("cambrian");
        out.push(CheckRecord::new(
            format!("{name} by arc count = Narayana row"),
            n,
            row_string(&row),
            row_string(&count_by_arcs(&c, "cambrian").counts),
        ));
    }
    out
}

fn cambrian_samples(n: usize) -> Vec<Vec<Side>> {
    let alternating = (0..n)
        .map(|i| if i % 2 == 0 { Side::Left } else { Side::Right })
        .collect();
    vec![vec![Side::Left; n], alternating]
}
