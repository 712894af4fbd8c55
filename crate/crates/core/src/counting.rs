//! Closed-form counting sequences and per-arc-count tables.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::congruence::Congruence;
use crate::diagram::for_each_diagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Catalan,
    Narayana,
    Eulerian,
    Baxter,
    ProdMin,
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan" => Ok(SequenceKind::Catalan),
            "narayana" => Ok(SequenceKind::Narayana),
            "eulerian" => Ok(SequenceKind::Eulerian),
            "baxter" => Ok(SequenceKind::Baxter),
            "prodmin" => Ok(SequenceKind::ProdMin),
            other => Err(Error::OutOfRange(format!("unknown sequence `{other}`"))),
        }
    }
}

pub fn sequence_value(kind: SequenceKind, n: usize, k: Option<usize>) -> Result<BigUint> {
    let need_k = || k.ok_or_else(|| Error::OutOfRange(format!("{kind:?} needs a second index")));
    match kind {
        SequenceKind::Catalan => Ok(catalan(n)),
        SequenceKind::Narayana => narayana(n, need_k()?),
        SequenceKind::Eulerian => Ok(eulerian(n, need_k()?)),
        SequenceKind::Baxter => baxter(n),
        SequenceKind::ProdMin => prodmin(n, need_k()?),
    }
}

fn big_binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        BigUint::from(0u32)
    } else {
        binomial(BigUint::from(n), BigUint::from(k))
    }
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    big_binomial(2 * n, n) / BigUint::from(n + 1)
}

/// `binom(n, k) binom(n, k - 1) / n` for `1 <= k <= n`. The number of
/// left diagrams on `n` points with `j` arcs is `narayana(n, j + 1)`.
pub fn narayana(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "narayana({n}, {k}) needs 1 <= k <= n"
        )));
    }
    Ok(big_binomial(n, k) * big_binomial(n, k - 1) / BigUint::from(n))
}

/// Permutations of `n` with exactly `k` descents, via
/// `E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1)` with `E(0,0) = 1`.
pub fn eulerian(n: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for m in 1..=n {
        let mut next = vec![BigUint::from(0u32); m];
        for (j, slot) in next.iter_mut().enumerate() {
            let stay = row.get(j).map(|v| v * BigUint::from(j + 1));
            let rise = j
                .checked_sub(1)
                .and_then(|i| row.get(i))
                .map(|v| v * BigUint::from(m - j));
            *slot = stay.unwrap_or_default() + rise.unwrap_or_default();
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// `sum_{k=0}^{n-1} binom(n+1,k) binom(n+1,k+1) binom(n+1,k+2)`, divided
/// by `binom(n+1,1) binom(n+1,2)`.
pub fn baxter(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange("baxter(n) needs n >= 1".into()));
    }
    let m = n + 1;
    let sum: BigUint = (0..n)
        .map(|k| big_binomial(m, k) * big_binomial(m, k + 1) * big_binomial(m, k + 2))
        .sum();
    Ok(sum / (big_binomial(m, 1) * big_binomial(m, 2)))
}

/// `prod_{i=1}^{n} min(i, k)`.
pub fn prodmin(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::OutOfRange("prodmin(n, k) needs k >= 1".into()));
    }
    Ok((1..=n).map(|i| BigUint::from(i.min(k))).product())
}

/// Diagram counts indexed by number of arcs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub n: usize,
    pub label: String,
    /// `counts[k]` diagrams have exactly `k` arcs; trailing zeros trimmed.
    pub counts: Vec<u64>,
    pub total: u64,
}

impl CountTable {
    pub fn from_counts(n: usize, label: impl Into<String>, mut counts: Vec<u64>) -> CountTable {
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        if counts.is_empty() {
            counts.push(0);
        }
        let total = counts.iter().sum();
        CountTable {
            n,
            label: label.into(),
            counts,
            total,
        }
    }
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (n={})", self.label, self.n)?;
        for (k, c) in self.counts.iter().enumerate() {
            writeln!(f, "k={k} {c}")?;
        }
        write!(f, "total {}", self.total)
    }
}

/// Counts diagrams whose arcs all lie in the uncontracted set, by size.
pub fn count_by_arcs(congruence: &Congruence, label: &str) -> CountTable {
    let n = congruence.n();
    let members = congruence.uncontracted();
    let mut counts = vec![0u64; n.max(1)];
    for_each_diagram(n, |a| members.contains(a), |d| counts[d.len()] += 1);
    CountTable::from_counts(n, label, counts)
}
