//! Permutations of `1..=n` and the weak order on them.
//!
//! The weak order compares permutations by containment of inversion sets.
//! It is a lattice, and every permutation `x` has a canonical join
//! representation made of one join-irreducible `λ(x, i)` per descent `i`.
//!
//! Positions and values are 1-based throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` supported. Inversion sets store one `u64` row per value.
pub const MAX_N: usize = 64;

/// A permutation `x_1 x_2 ... x_n` of `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        }
        if n > MAX_N {
            return Err(Error::InvalidPermutation(format!(
                "n = {n} exceeds the maximum {MAX_N}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    /// The bottom element `12...n`.
    pub fn identity(n: usize) -> Self {
        Permutation::from_vec_unchecked((1..=n).collect())
    }

    /// The top element `n...21`.
    pub fn longest(n: usize) -> Self {
        Permutation::from_vec_unchecked((1..=n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The entry `x_i` at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// `pos[v]` is the 1-based position of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n() + 1];
        for (i, &v) in self.entries.iter().enumerate() {
            pos[v] = i + 1;
        }
        pos
    }

    /// Reads the one-line notation backwards. This is an anti-automorphism
    /// of the weak order: it complements inversion sets.
    pub fn reverse(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Permutation { entries }
    }

    pub fn inversions(&self) -> InversionSet {
        let n = self.n();
        let mut rows = vec![0u64; n];
        // Scan right to left: `seen` holds the values to the right.
        let mut seen = 0u64;
        for &v in self.entries.iter().rev() {
            let smaller = seen & low_mask(v - 1);
            rows[v - 1] = smaller;
            seen |= bit(v);
        }
        InversionSet { n, rows }
    }

    /// 1-based positions `i` with `x_i > x_{i+1}`, increasing.
    pub fn descents(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.at(i) > self.at(i + 1)
    }

    pub fn is_join_irreducible(&self) -> bool {
        self.descents().len() == 1
    }

    /// The join-irreducible `λ(x, i)`: the unique minimal permutation below
    /// `x` that still inverts the descent `(x_i, x_{i+1})`.
    pub fn lambda(&self, i: usize) -> Result<Permutation> {
        if !self.is_descent(i) {
            return Err(Error::NotADescent {
                permutation: self.to_string(),
                position: i,
            });
        }
        let n = self.n();
        let top = self.at(i);
        let bottom = self.at(i + 1);
        let between = |v: usize| bottom < v && v < top;

        let mut before: Vec<usize> = self.entries[..i - 1]
            .iter()
            .copied()
            .filter(|&v| between(v))
            .collect();
        let mut after: Vec<usize> = self.entries[i + 1..]
            .iter()
            .copied()
            .filter(|&v| between(v))
            .collect();
        before.sort_unstable();
        after.sort_unstable();

        let mut entries = Vec::with_capacity(n);
        entries.extend(1..bottom);
        entries.extend(before);
        entries.push(top);
        entries.push(bottom);
        entries.extend(after);
        entries.extend(top + 1..=n);
        Ok(Permutation::from_vec_unchecked(entries))
    }

    /// Canonical joinands, one per descent, in order of descent position.
    pub fn canonical_join_representation(&self) -> Vec<Permutation> {
        self.descents()
            .into_iter()
            .map(|i| self.lambda(i).expect("descent position"))
            .collect()
    }

    pub fn weak_leq(&self, other: &Permutation) -> Result<bool> {
        check_same_n(self.n(), other.n())?;
        Ok(self.inversions().is_subset(&other.inversions()))
    }

    /// Permutations covering `self`: swap an adjacent ascent.
    pub fn upper_covers(&self) -> Vec<Permutation> {
        self.adjacent_swaps(|a, b| a < b)
    }

    /// Permutations covered by `self`: swap an adjacent descent.
    pub fn lower_covers(&self) -> Vec<Permutation> {
        self.adjacent_swaps(|a, b| a > b)
    }

    fn adjacent_swaps(&self, pick: impl Fn(usize, usize) -> bool) -> Vec<Permutation> {
        (0..self.n().saturating_sub(1))
            .filter(|&i| pick(self.entries[i], self.entries[i + 1]))
            .map(|i| {
                let mut entries = self.entries.clone();
                entries.swap(i, i + 1);
                Permutation { entries }
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.entries
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// Bits for values `1..=k`.
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

pub(crate) fn check_same_n(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::SizeMismatch { expected, found })
    }
}

/// Iterates bits of a mask as 1-based values, ascending.
pub(crate) fn mask_values(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize + 1;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A set of value pairs `(b, a)` with `b > a`.
///
/// Row `b - 1` holds a bit for every `a < b` such that `(b, a)` is a member.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InversionSet {
    n: usize,
    rows: Vec<u64>,
}

impl InversionSet {
    pub fn empty(n: usize) -> Self {
        InversionSet {
            n,
            rows: vec![0; n],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = InversionSet::empty(n);
        for (b, a) in pairs {
            if !(1 <= a && a < b && b <= n) {
                return Err(Error::InvalidInversionSet(format!(
                    "pair ({b},{a}) is not of the form 1 <= a < b <= {n}"
                )));
            }
            set.insert(b, a);
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, b: usize, a: usize) -> bool {
        a < b && b <= self.n && self.rows[b - 1] & bit(a) != 0
    }

    pub fn insert(&mut self, b: usize, a: usize) {
        debug_assert!(1 <= a && a < b && b <= self.n);
        self.rows[b - 1] |= bit(a);
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Pairs `(b, a)` sorted by `b`, then `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| mask_values(row).map(move |a| (i + 1, a)))
            .collect()
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.n == other.n
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(&mine, &theirs)| mine & !theirs == 0)
    }

    pub fn union_with(&mut self, other: &InversionSet) {
        debug_assert_eq!(self.n, other.n);
        for (mine, theirs) in self.rows.iter_mut().zip(&other.rows) {
            *mine |= theirs;
        }
    }

    /// `(c,b)` and `(b,a)` imply `(c,a)`.
    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|c| {
            let row = self.rows[c];
            mask_values(row).all(|b| self.rows[b - 1] & !row == 0)
        })
    }

    /// For `a < b < c`, `(c,a)` implies `(c,b)` or `(b,a)`.
    pub fn is_cotransitive(&self) -> bool {
        for c in 1..=self.n {
            let row = self.rows[c - 1];
            for a in mask_values(row) {
                for b in a + 1..c {
                    if row & bit(b) == 0 && self.rows[b - 1] & bit(a) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff this is the inversion set of some permutation.
    pub fn is_valid(&self) -> bool {
        self.is_transitive() && self.is_cotransitive()
    }

    /// Saturates the transitivity rule to a fixed point.
    pub fn transitive_closure(&self) -> InversionSet {
        let mut rows = self.rows.clone();
        loop {
            let mut changed = false;
            for c in 0..self.n {
                let mut row = rows[c];
                for b in mask_values(rows[c]) {
                    row |= rows[b - 1];
                }
                if row != rows[c] {
                    rows[c] = row;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        InversionSet { n: self.n, rows }
    }

    /// Decodes to the unique permutation with this inversion set.
    ///
    /// Value `u` precedes `v` (for `u < v`) iff `(v, u)` is not a member, so
    /// the position of `v` is one plus the number of values preceding it.
    /// The comparator is total exactly when the positions form a bijection.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidInversionSet("n = 0".into()));
        }
        let mut entries = vec![0usize; n];
        for v in 1..=n {
            let smaller_before = (v - 1) - self.rows[v - 1].count_ones() as usize;
            let larger_before = (v + 1..=n).filter(|&u| self.contains(u, v)).count();
            let pos = smaller_before + larger_before;
            if entries[pos] != 0 {
                return Err(Error::InvalidInversionSet(format!(
                    "values {} and {v} both decode to position {}",
                    entries[pos],
                    pos + 1
                )));
            }
            entries[pos] = v;
        }
        Ok(Permutation::from_vec_unchecked(entries))
    }
}

/// The least upper bound in the weak order. The empty join is the identity.
pub fn join(n: usize, items: &[Permutation]) -> Result<Permutation> {
    let mut acc = InversionSet::empty(n);
    for x in items {
        check_same_n(n, x.n())?;
        acc.union_with(&x.inversions());
    }
    let closed = acc.transitive_closure();
    assert!(
        closed.is_cotransitive(),
        "closure of a union of inversion sets lost co-transitivity"
    );
    Ok(closed
        .to_permutation()
        .expect("closed union of inversion sets decodes"))
}

/// The greatest lower bound in the weak order. The empty meet is `n...21`.
pub fn meet(n: usize, items: &[Permutation]) -> Result<Permutation> {
    let reversed: Vec<Permutation> = items.iter().map(Permutation::reverse).collect();
    Ok(join(n, &reversed)?.reverse())
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Permutations {
    Permutations {
        next: (n >= 1).then(|| (1..=n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if let Some(i) = (0..succ.len().saturating_sub(1))
            .rev()
            .find(|&i| succ[i] < succ[i + 1])
        {
            let j = (i + 1..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[i])
                .unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}
