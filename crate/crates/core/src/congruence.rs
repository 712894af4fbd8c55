//! Lattice congruences of the weak order, described by arcs.
//!
//! A congruence is determined by the join-irreducibles it leaves
//! uncontracted. In arc language these form a set `U` closed under taking
//! subarcs, and one arc forces another exactly when it is a subarc of it.
//! The permutations at the bottom of their congruence classes are those
//! whose diagrams use only arcs of `U`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arc::{all_arcs, Arc, Side};
use crate::diagram::delta;
use crate::error::{Error, Result};
use crate::permutation::{all_permutations, bit, check_same_n, InversionSet, Permutation};

/// A set of arcs on `n` points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcSet {
    n: usize,
    members: BTreeSet<Arc>,
}

impl ArcSet {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<ArcSet> {
        let mut members = BTreeSet::new();
        for arc in arcs {
            check_same_n(n, arc.n())?;
            members.insert(arc);
        }
        Ok(ArcSet { n, members })
    }

    pub fn empty(n: usize) -> ArcSet {
        ArcSet {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn all(n: usize) -> ArcSet {
        ArcSet::filtered(n, |_| true)
    }

    pub fn filtered(n: usize, keep: impl Fn(&Arc) -> bool) -> ArcSet {
        ArcSet {
            n,
            members: all_arcs(n).into_iter().filter(|a| keep(a)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.members.contains(arc)
    }

    /// Members in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Arc> + '_ {
        self.members.iter()
    }

    pub fn complement(&self) -> ArcSet {
        ArcSet::filtered(self.n, |a| !self.contains(a))
    }

    /// Members with no other member as a proper subarc.
    pub fn subarc_minimal(&self) -> Vec<Arc> {
        self.members
            .iter()
            .filter(|&m| !self.members.iter().any(|o| o != m && o.subarc_unchecked(m)))
            .copied()
            .collect()
    }

    pub fn check_subarc_closed(&self) -> Result<()> {
        for member in &self.members {
            if let Some(missing) = member.subarcs().into_iter().find(|s| !self.contains(s)) {
                return Err(Error::NotSubarcClosed {
                    member: member.to_string(),
                    missing: missing.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn is_subarc_closed(&self) -> bool {
        self.check_subarc_closed().is_ok()
    }
}

impl<'a> IntoIterator for &'a ArcSet {
    type Item = &'a Arc;
    type IntoIter = std::collections::btree_set::Iter<'a, Arc>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// The data `(b, a, R)` of a pattern: a descent with top at least `b` and
/// bottom at most `a`, with `R` after it and the rest of `(a, b)` before it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PatternTriple {
    b: usize,
    a: usize,
    right: u64,
}

impl PatternTriple {
    pub fn new(b: usize, a: usize, right: impl IntoIterator<Item = usize>) -> Result<Self> {
        // Arc validation covers the interior constraints; n = b is enough.
        let arc = Arc::new(b, a, b, right)?;
        Ok(PatternTriple::from(&arc))
    }

    pub fn upper(&self) -> usize {
        self.b
    }

    pub fn lower(&self) -> usize {
        self.a
    }

    fn left_mask(&self) -> u64 {
        crate::arc::interior_mask(self.a, self.b) & !self.right
    }
}

impl From<&Arc> for PatternTriple {
    fn from(arc: &Arc) -> Self {
        PatternTriple {
            b: arc.upper(),
            a: arc.lower(),
            right: arc.right_mask(),
        }
    }
}

pub fn has_pattern(x: &Permutation, t: &PatternTriple) -> bool {
    if t.b > x.n() {
        return false;
    }
    let entries = x.entries();
    let mut seen_before = 0u64;
    for i in 0..entries.len().saturating_sub(1) {
        let (top, bottom) = (entries[i], entries[i + 1]);
        if top > bottom && top >= t.b && bottom <= t.a {
            let after = entries[i + 2..].iter().fold(0u64, |m, &v| m | bit(v));
            if t.left_mask() & !seen_before == 0 && t.right & !after == 0 {
                return true;
            }
        }
        seen_before |= bit(top);
    }
    false
}

/// A congruence of the weak order on `S_n`, given by its uncontracted arcs.
#[derive(Clone, Debug)]
pub struct Congruence {
    uncontracted: ArcSet,
    joinands: Vec<InversionSet>,
}

impl Congruence {
    /// Fails unless `uncontracted` is closed under subarcs.
    pub fn new(uncontracted: ArcSet) -> Result<Congruence> {
        uncontracted.check_subarc_closed()?;
        let joinands = uncontracted
            .iter()
            .map(|a| a.to_join_irreducible().inversions())
            .collect();
        Ok(Congruence {
            uncontracted,
            joinands,
        })
    }

    /// The smallest congruence contracting the join-irreducibles of `gens`:
    /// every arc having some generator as a subarc is contracted.
    pub fn from_contracted(n: usize, gens: &[Arc]) -> Result<Congruence> {
        for g in gens {
            check_same_n(n, g.n())?;
        }
        let kept = ArcSet::filtered(n, |a| !gens.iter().any(|g| g.subarc_unchecked(a)));
        Congruence::new(kept)
    }

    pub fn named(n: usize, name: &NamedCongruence) -> Result<Congruence> {
        Congruence::new(name.arc_set(n)?)
    }

    pub fn n(&self) -> usize {
        self.uncontracted.n()
    }

    pub fn uncontracted(&self) -> &ArcSet {
        &self.uncontracted
    }

    /// Subarc-minimal contracted arcs; they generate the congruence.
    pub fn generators(&self) -> Vec<Arc> {
        self.uncontracted.complement().subarc_minimal()
    }

    pub fn pattern_triples(&self) -> Vec<PatternTriple> {
        self.generators().iter().map(PatternTriple::from).collect()
    }

    pub fn is_uncontracted(&self, x: &Permutation) -> bool {
        delta(x)
            .arcs()
            .iter()
            .all(|a| self.uncontracted.contains(a))
    }

    /// Uncontracted permutations, by filtering `S_n` through `delta`.
    pub fn uncontracted_by_delta(&self) -> Vec<Permutation> {
        all_permutations(self.n())
            .filter(|x| self.is_uncontracted(x))
            .collect()
    }

    /// Uncontracted permutations, by avoidance of every generator pattern.
    pub fn uncontracted_by_patterns(&self) -> Vec<Permutation> {
        let triples = self.pattern_triples();
        all_permutations(self.n())
            .filter(|x| !triples.iter().any(|t| has_pattern(x, t)))
            .collect()
    }

    /// Both characterizations, required to agree. Lexicographic order.
    pub fn uncontracted_permutations(&self) -> Result<Vec<Permutation>> {
        let by_delta = self.uncontracted_by_delta();
        let by_patterns = self.uncontracted_by_patterns();
        if by_delta != by_patterns {
            let stray = by_delta
                .iter()
                .chain(&by_patterns)
                .find(|x| by_delta.contains(x) != by_patterns.contains(x))
                .map(|x| x.to_string())
                .unwrap_or_default();
            return Err(Error::CrossCheck(format!(
                "delta filter found {} permutations, pattern avoidance found {}; first disagreement at {stray}",
                by_delta.len(),
                by_patterns.len()
            )));
        }
        Ok(by_delta)
    }

    /// The bottom of the congruence class of `x`: the join of every
    /// uncontracted join-irreducible below `x`.
    pub fn project_down(&self, x: &Permutation) -> Result<Permutation> {
        check_same_n(self.n(), x.n())?;
        let inv = x.inversions();
        let mut acc = InversionSet::empty(x.n());
        for j in self.joinands.iter().filter(|j| j.is_subset(&inv)) {
            acc.union_with(j);
        }
        let closed = acc.transitive_closure();
        assert!(closed.is_cotransitive());
        Ok(closed.to_permutation().expect("closed union decodes"))
    }
}

/// The congruences with names, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedCongruence {
    /// Left arcs only.
    Tamari,
    /// One side per point; arcs may not pass right of a right point nor
    /// left of a left point.
    Cambrian(Vec<Side>),
    /// Arcs without inflections.
    Baxter,
    /// Arcs with at most `k` inflections.
    Clumped(usize),
    /// Arcs of length less than `k`.
    MaxLen(usize),
}

impl NamedCongruence {
    pub fn arc_set(&self, n: usize) -> Result<ArcSet> {
        Ok(match self {
            NamedCongruence::Tamari => ArcSet::filtered(n, Arc::is_left),
            NamedCongruence::Cambrian(orientation) => {
                if orientation.len() != n {
                    return Err(Error::InvalidCongruence(format!(
                        "cambrian orientation has {} points, expected {n}",
                        orientation.len()
                    )));
                }
                ArcSet::filtered(n, |arc| {
                    (arc.lower() + 1..arc.upper())
                        .all(|p| arc.side_of(p) != Some(orientation[p - 1]))
                })
            }
            NamedCongruence::Baxter => ArcSet::filtered(n, |a| a.inflections() == 0),
            NamedCongruence::Clumped(k) => ArcSet::filtered(n, |a| a.inflections() <= *k),
            NamedCongruence::MaxLen(k) => {
                if *k == 0 {
                    return Err(Error::InvalidCongruence("maxlen needs k >= 1".into()));
                }
                ArcSet::filtered(n, |a| a.length() < *k)
            }
        })
    }
}

impl FromStr for NamedCongruence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((name, param)) => (name, Some(param)),
            None => (s, None),
        };
        let number = |param: Option<&str>| -> Result<usize> {
            let text = param.ok_or_else(|| {
                Error::InvalidCongruence(format!("`{name}` needs a parameter, as in `{name}:2`"))
            })?;
            text.parse()
                .map_err(|_| Error::InvalidCongruence(format!("`{text}` is not a count")))
        };
        let no_param = |value: NamedCongruence| match param {
            None => Ok(value),
            Some(_) => Err(Error::InvalidCongruence(format!(
                "`{name}` takes no parameter"
            ))),
        };
        match name {
            "tamari" => no_param(NamedCongruence::Tamari),
            "baxter" => no_param(NamedCongruence::Baxter),
            "clumped" => Ok(NamedCongruence::Clumped(number(param)?)),
            "maxlen" => Ok(NamedCongruence::MaxLen(number(param)?)),
            "cambrian" => {
                let text = param.ok_or_else(|| {
                    Error::InvalidCongruence(
                        "cambrian needs an orientation such as `cambrian:LRRL`".into(),
                    )
                })?;
                let sides = text
                    .chars()
                    .map(|c| match c {
                        'L' => Ok(Side::Left),
                        'R' => Ok(Side::Right),
                        other => Err(Error::InvalidCongruence(format!(
                            "orientation letter `{other}` is not L or R"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(NamedCongruence::Cambrian(sides))
            }
            other => Err(Error::InvalidCongruence(format!(
                "unknown congruence `{other}`"
            ))),
        }
    }
}

impl fmt::Display for NamedCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedCongruence::Tamari => f.write_str("tamari"),
            NamedCongruence::Cambrian(sides) => {
                f.write_str("cambrian:")?;
                sides.iter().try_for_each(|s| write!(f, "{}", s.letter()))
            }
            NamedCongruence::Baxter => f.write_str("baxter"),
            NamedCongruence::Clumped(k) => write!(f, "clumped:{k}"),
            NamedCongruence::MaxLen(k) => write!(f, "maxlen:{k}"),
        }
    }
}

/// All pairs `(α, β)` with `α` a proper subarc of `β`. Forcing runs from
/// `β` down to `α`.
pub fn forcing_edges(n: usize) -> Vec<(Arc, Arc)> {
    let arcs = all_arcs(n);
    let mut edges = Vec::new();
    for small in &arcs {
        for big in &arcs {
            if small != big && small.subarc_unchecked(big) {
                edges.push((*small, *big));
            }
        }
    }
    edges
}
