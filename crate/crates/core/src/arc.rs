//! Arcs on `n` points and the arc / join-irreducible bijection.
//!
//! An arc joins a lower point `a` to an upper point `b` and records, for
//! every interior point `a < c < b`, whether `c` lies on its left or its
//! right. Only the right set is stored; the left set is its complement in
//! the interior.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::{bit, check_same_n, low_mask, mask_values, Permutation, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    n: usize,
    a: usize,
    b: usize,
    right: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcStats {
    pub length: usize,
    pub inflections: usize,
    pub is_left: bool,
    pub is_right: bool,
}

/// Outcome of comparing two arcs for membership in a common diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    SharedLower(usize),
    SharedUpper(usize),
    /// `first_right` forces the first arc right of the second and
    /// `second_right` forces the reverse.
    Crossing {
        first_right: usize,
        second_right: usize,
    },
}

impl Compatibility {
    pub fn is_compatible(self) -> bool {
        self == Compatibility::Compatible
    }
}

impl fmt::Display for Compatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Compatibility::Compatible => f.write_str("compatible"),
            Compatibility::SharedLower(p) => write!(f, "both arcs have lower endpoint {p}"),
            Compatibility::SharedUpper(p) => write!(f, "both arcs have upper endpoint {p}"),
            Compatibility::Crossing {
                first_right,
                second_right,
            } => write!(
                f,
                "point {first_right} forces the first arc right of the second, \
                 point {second_right} forces the reverse"
            ),
        }
    }
}

impl Arc {
    /// The arc from `a` to `b` on `n` points with `right` on its right and
    /// every other interior point on its left.
    pub fn new(
        n: usize,
        a: usize,
        b: usize,
        right: impl IntoIterator<Item = usize>,
    ) -> Result<Arc> {
        if n > MAX_N {
            return Err(Error::InvalidArc(format!("n = {n} exceeds {MAX_N}")));
        }
        if !(1 <= a && a < b && b <= n) {
            return Err(Error::InvalidArc(format!(
                "endpoints {a}-{b} must satisfy 1 <= a < b <= {n}"
            )));
        }
        let mut mask = 0;
        for p in right {
            if !(a < p && p < b) {
                return Err(Error::InvalidArc(format!(
                    "point {p} is not strictly between {a} and {b}"
                )));
            }
            mask |= bit(p);
        }
        Ok(Arc {
            n,
            a,
            b,
            right: mask,
        })
    }

    /// Builds an arc from the sides of the interior points `a+1, ..., b-1`.
    pub fn from_sides(n: usize, a: usize, b: usize, sides: &[Side]) -> Result<Arc> {
        if b > a && sides.len() != b - a - 1 {
            return Err(Error::InvalidArc(format!(
                "arc {a}-{b} has {} interior points, got {} sides",
                b - a - 1,
                sides.len()
            )));
        }
        let right = sides
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Side::Right)
            .map(|(k, _)| a + 1 + k);
        Arc::new(n, a, b, right)
    }

    pub(crate) fn from_mask(n: usize, a: usize, b: usize, right: u64) -> Arc {
        debug_assert!(1 <= a && a < b && b <= n);
        debug_assert_eq!(right & !interior_mask(a, b), 0);
        Arc { n, a, b, right }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lower(&self) -> usize {
        self.a
    }

    pub fn upper(&self) -> usize {
        self.b
    }

    pub fn right_mask(&self) -> u64 {
        self.right
    }

    pub fn left_mask(&self) -> u64 {
        self.interior_mask() & !self.right
    }

    pub fn interior_mask(&self) -> u64 {
        interior_mask(self.a, self.b)
    }

    fn endpoint_mask(&self) -> u64 {
        bit(self.a) | bit(self.b)
    }

    pub fn left_points(&self) -> Vec<usize> {
        mask_values(self.left_mask()).collect()
    }

    pub fn right_points(&self) -> Vec<usize> {
        mask_values(self.right).collect()
    }

    /// Side of an interior point; `None` outside the open interval.
    pub fn side_of(&self, p: usize) -> Option<Side> {
        if self.a < p && p < self.b {
            Some(if self.right & bit(p) != 0 {
                Side::Right
            } else {
                Side::Left
            })
        } else {
            None
        }
    }

    pub fn sides(&self) -> impl Iterator<Item = Side> + '_ {
        (self.a + 1..self.b).map(|p| self.side_of(p).unwrap())
    }

    pub fn length(&self) -> usize {
        self.b - self.a
    }

    pub fn inflections(&self) -> usize {
        (self.a + 1..self.b.saturating_sub(1))
            .filter(|&c| self.side_of(c) != self.side_of(c + 1))
            .count()
    }

    pub fn is_left(&self) -> bool {
        self.right == 0
    }

    pub fn is_right(&self) -> bool {
        self.left_mask() == 0
    }

    pub fn stats(&self) -> ArcStats {
        ArcStats {
            length: self.length(),
            inflections: self.inflections(),
            is_left: self.is_left(),
            is_right: self.is_right(),
        }
    }

    /// The arc of a join-irreducible permutation: its unique descent
    /// `b > a`, with `c` on the left iff `c` occurs before the descent.
    pub fn from_join_irreducible(x: &Permutation) -> Result<Arc> {
        let descents = x.descents();
        let [i] = descents[..] else {
            return Err(Error::NotJoinIrreducible(x.to_string()));
        };
        let (b, a) = (x.at(i), x.at(i + 1));
        let right = x.entries()[i + 1..]
            .iter()
            .filter(|&&c| a < c && c < b)
            .fold(0u64, |m, &c| m | bit(c));
        Ok(Arc::from_mask(x.n(), a, b, right))
    }

    /// The join-irreducible `1..a-1, L ascending, b, a, R ascending, b+1..n`.
    pub fn to_join_irreducible(&self) -> Permutation {
        let mut entries = Vec::with_capacity(self.n);
        entries.extend(1..self.a);
        entries.extend(mask_values(self.left_mask()));
        entries.push(self.b);
        entries.push(self.a);
        entries.extend(mask_values(self.right));
        entries.extend(self.b + 1..=self.n);
        Permutation::from_vec_unchecked(entries)
    }

    /// A point forcing `self` to be drawn right of `other`: it is left of
    /// (or an endpoint of) `self`, right of (or an endpoint of) `other`, and
    /// not an endpoint of both. Returns the lowest such point.
    pub fn forced_right_of(&self, other: &Arc) -> Option<usize> {
        let witnesses = (self.left_mask() | self.endpoint_mask())
            & (other.right | other.endpoint_mask())
            & !(self.endpoint_mask() & other.endpoint_mask());
        mask_values(witnesses).next()
    }

    pub fn compatibility(&self, other: &Arc) -> Result<Compatibility> {
        check_same_n(self.n, other.n)?;
        if self.a == other.a {
            return Ok(Compatibility::SharedLower(self.a));
        }
        if self.b == other.b {
            return Ok(Compatibility::SharedUpper(self.b));
        }
        Ok(
            match (self.forced_right_of(other), other.forced_right_of(self)) {
                (Some(first_right), Some(second_right)) => Compatibility::Crossing {
                    first_right,
                    second_right,
                },
                _ => Compatibility::Compatible,
            },
        )
    }

    pub fn compatible(&self, other: &Arc) -> Result<bool> {
        Ok(self.compatibility(other)?.is_compatible())
    }

    /// True iff `self` is obtained from `other` by cutting it at two heights:
    /// the span of `self` lies inside that of `other` and the two arcs agree
    /// on every interior point of `self`.
    pub fn is_subarc_of(&self, other: &Arc) -> Result<bool> {
        check_same_n(self.n, other.n)?;
        Ok(self.subarc_unchecked(other))
    }

    pub(crate) fn subarc_unchecked(&self, other: &Arc) -> bool {
        other.a <= self.a && self.b <= other.b && self.right == other.right & self.interior_mask()
    }

    /// Every subarc of `self`, including `self`, in canonical order.
    pub fn subarcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        for a in self.a..self.b {
            for b in a + 1..=self.b {
                out.push(Arc::from_mask(
                    self.n,
                    a,
                    b,
                    self.right & interior_mask(a, b),
                ));
            }
        }
        out.sort();
        out
    }
}

/// Bits for the open interval `(a, b)`.
pub(crate) fn interior_mask(a: usize, b: usize) -> u64 {
    if b <= a + 1 {
        0
    } else {
        low_mask(b - 1) & !low_mask(a)
    }
}

/// Every arc on `n` points, ascending by `(a, b, sides)` with `L < R`.
pub fn all_arcs(n: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in a + 1..=n {
            let interior = b - a - 1;
            for code in 0..(1u64 << interior) {
                out.push(Arc::from_mask(n, a, b, code << a));
            }
        }
    }
    out.sort();
    out
}

impl Ord for Arc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
            .then_with(|| {
                // Lexicographic on the side string, where L sorts before R.
                let diff = self.right ^ other.right;
                if diff == 0 {
                    Ordering::Equal
                } else {
                    let lowest = diff & diff.wrapping_neg();
                    if self.right & lowest != 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
            })
    }
}

impl PartialOrd for Arc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)?;
        if self.b > self.a + 1 {
            f.write_str(":")?;
            for s in self.sides() {
                write!(f, "{}", s.letter())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arc({self}; n={})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::new(s.bytes().map(|c| (c - b'0') as usize).collect()).unwrap()
    }

    fn arc(n: usize, a: usize, b: usize, right: &[usize]) -> Arc {
        Arc::new(n, a, b, right.iter().copied()).unwrap()
    }

    #[test]
    fn make_arc() {
        let x = arc(9, 4, 8, &[6]);
        assert_eq!(x.left_points(), vec![5, 7]);
        assert_eq!(x.to_string(), "4-8:LRL");
        assert_eq!(arc(2, 1, 2, &[]).to_string(), "1-2");
        let r = arc(4, 1, 4, &[2, 3]);
        assert!(r.left_points().is_empty());
        assert!(r.is_right());
        assert!(Arc::new(4, 3, 2, []).is_err());
        assert!(Arc::new(4, 1, 5, []).is_err());
        assert!(Arc::new(4, 1, 3, [3]).is_err());
    }

    #[test]
    fn join_irreducible_round_trip_examples() {
        assert_eq!(
            Arc::from_join_irreducible(&p("123578469")).unwrap(),
            arc(9, 4, 8, &[6])
        );
        assert_eq!(
            Arc::from_join_irreducible(&p("142356789")).unwrap(),
            arc(9, 2, 4, &[3])
        );
        assert_eq!(
            Arc::from_join_irreducible(&p("21")).unwrap(),
            arc(2, 1, 2, &[])
        );
        assert_eq!(arc(9, 4, 8, &[6]).to_join_irreducible(), p("123578469"));
        assert_eq!(arc(2, 1, 2, &[]).to_join_irreducible(), p("21"));
        assert!(matches!(
            Arc::from_join_irreducible(&p("3421")),
            Err(Error::NotJoinIrreducible(_))
        ));
        assert!(Arc::from_join_irreducible(&p("123")).is_err());
    }

    #[test]
    fn compatibility_examples() {
        assert!(arc(3, 1, 2, &[]).compatible(&arc(3, 2, 3, &[])).unwrap());
        assert_eq!(
            arc(3, 1, 3, &[])
                .compatibility(&arc(3, 1, 3, &[2]))
                .unwrap(),
            Compatibility::SharedLower(1)
        );
        assert!(arc(4, 1, 4, &[]).compatible(&arc(4, 2, 3, &[])).unwrap());
        // 1-3 with 2 on its left and 2-4 with 3 on its left must cross.
        assert!(matches!(
            arc(4, 1, 3, &[]).compatibility(&arc(4, 2, 4, &[])).unwrap(),
            Compatibility::Crossing { .. }
        ));
        assert!(arc(3, 1, 2, &[]).compatible(&arc(4, 2, 3, &[])).is_err());
    }

    #[test]
    fn subarc_examples() {
        let full = arc(4, 1, 4, &[]);
        assert!(full.is_subarc_of(&full).unwrap());
        assert!(arc(4, 2, 3, &[]).is_subarc_of(&full).unwrap());
        assert!(!arc(4, 1, 3, &[])
            .is_subarc_of(&arc(4, 1, 4, &[2, 3]))
            .unwrap());
        assert!(!full.is_subarc_of(&arc(4, 2, 3, &[])).unwrap());
        assert_eq!(full.subarcs().len(), 6);
    }

    #[test]
    fn stats() {
        let unit = arc(2, 1, 2, &[]).stats();
        assert_eq!(
            unit,
            ArcStats {
                length: 1,
                inflections: 0,
                is_left: true,
                is_right: true
            }
        );
        let s = arc(9, 4, 8, &[6]).stats();
        assert_eq!((s.length, s.inflections), (4, 2));
        let r = arc(4, 1, 4, &[2, 3]).stats();
        assert_eq!(
            (r.length, r.inflections, r.is_right, r.is_left),
            (3, 0, true, false)
        );
    }

    #[test]
    fn canonical_order_and_counts() {
        let names: Vec<String> = all_arcs(4).iter().map(|a| a.to_string()).collect();
        assert_eq!(
            names,
            [
                "1-2", "1-3:L", "1-3:R", "1-4:LL", "1-4:LR", "1-4:RL", "1-4:RR", "2-3", "2-4:L",
                "2-4:R", "3-4"
            ]
        );
        for n in 1..=10 {
            assert_eq!(all_arcs(n).len(), (1usize << n) - n - 1);
        }
    }
}
