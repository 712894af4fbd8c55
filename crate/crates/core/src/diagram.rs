//! Noncrossing arc diagrams and the bijection with permutations.
//!
//! A diagram is a set of pairwise compatible arcs. `delta` sends a
//! permutation to the arcs of its canonical joinands; `Diagram::to_permutation`
//! inverts it by repeatedly peeling off the lowest "left component".

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::arc::{all_arcs, Arc};
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::permutation::{bit, check_same_n, mask_values, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    arcs: Vec<Arc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramClass {
    pub arc_count: usize,
    pub is_matching: bool,
    pub is_perfect_matching: bool,
}

impl Diagram {
    /// Validates pairwise compatibility. Duplicate arcs collapse.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Diagram> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        for arc in &arcs {
            check_same_n(n, arc.n())?;
        }
        arcs.sort();
        arcs.dedup();
        for (i, first) in arcs.iter().enumerate() {
            for second in &arcs[i + 1..] {
                let verdict = first.compatibility(second)?;
                if !verdict.is_compatible() {
                    return Err(Error::IncompatibleArcs {
                        first: first.to_string(),
                        second: second.to_string(),
                        conflict: verdict.to_string(),
                    });
                }
            }
        }
        Ok(Diagram { n, arcs })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, arcs: Vec<Arc>) -> Diagram {
        Diagram { n, arcs }
    }

    pub fn empty(n: usize) -> Diagram {
        Diagram {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs in canonical order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.binary_search(arc).is_ok()
    }

    pub fn classify(&self) -> DiagramClass {
        let mut touched = 0u64;
        let mut is_matching = true;
        for arc in &self.arcs {
            let ends = bit(arc.lower()) | bit(arc.upper());
            if touched & ends != 0 {
                is_matching = false;
            }
            touched |= ends;
        }
        DiagramClass {
            arc_count: self.arcs.len(),
            is_matching,
            is_perfect_matching: is_matching && touched.count_ones() as usize == self.n,
        }
    }

    /// The unique permutation whose canonical joinands are these arcs.
    ///
    /// Points are grouped into connected components by the arcs. Component
    /// `A` is right of component `B` when some point is left of (or an
    /// endpoint of) an element of `A` and right of (or an endpoint of) an
    /// element of `B`, without being an endpoint of both; an isolated point
    /// counts as an element whose only endpoint is itself. Repeatedly the
    /// left component with the smallest label is removed and its labels
    /// written in decreasing order.
    ///
    /// Panics if the "right of" relation has a cycle or if two left
    /// components have overlapping label ranges; neither can happen for a
    /// validated diagram.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.n;
        let components = self.components();
        let count = components.len();

        let mut right_of = vec![vec![false; count]; count];
        for (i, a) in components.iter().enumerate() {
            for (j, b) in components.iter().enumerate() {
                if i != j {
                    right_of[i][j] = a
                        .pieces
                        .iter()
                        .any(|x| b.pieces.iter().any(|y| x.forced_right_of(y)));
                }
            }
        }

        let mut alive = vec![true; count];
        let mut entries = Vec::with_capacity(n);
        for _ in 0..count {
            let mut left: Vec<usize> = (0..count)
                .filter(|&i| alive[i] && !(0..count).any(|j| alive[j] && right_of[i][j]))
                .collect();
            assert!(
                !left.is_empty(),
                "components of {self} are cyclically ordered"
            );
            left.sort_by_key(|&i| components[i].min);
            for w in left.windows(2) {
                assert!(
                    components[w[0]].max < components[w[1]].min,
                    "left components of {self} have overlapping label ranges"
                );
            }
            let chosen = left[0];
            alive[chosen] = false;
            entries.extend(
                mask_values(components[chosen].points)
                    .collect::<Vec<_>>()
                    .into_iter()
                    .rev(),
            );
        }
        Permutation::from_vec_unchecked(entries)
    }

    fn components(&self) -> Vec<Component> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for arc in &self.arcs {
            let (ra, rb) = (
                find(&mut parent, arc.lower()),
                find(&mut parent, arc.upper()),
            );
            parent[ra] = rb;
        }

        let mut by_root: Vec<Option<usize>> = vec![None; n + 1];
        let mut out: Vec<Component> = Vec::new();
        for p in 1..=n {
            let root = find(&mut parent, p);
            let idx = *by_root[root].get_or_insert_with(|| {
                out.push(Component {
                    points: 0,
                    min: p,
                    max: p,
                    pieces: Vec::new(),
                });
                out.len() - 1
            });
            let c = &mut out[idx];
            c.points |= bit(p);
            c.max = p;
        }
        for arc in &self.arcs {
            let root = find(&mut parent, arc.lower());
            out[by_root[root].unwrap()].pieces.push(Piece::of_arc(arc));
        }
        for c in &mut out {
            if c.pieces.is_empty() {
                c.pieces.push(Piece::of_point(c.min));
            }
        }
        out
    }
}

struct Component {
    points: u64,
    min: usize,
    max: usize,
    pieces: Vec<Piece>,
}

/// An arc, or an isolated point viewed as a degenerate arc.
struct Piece {
    left_or_end: u64,
    right_or_end: u64,
    ends: u64,
}

impl Piece {
    fn of_arc(arc: &Arc) -> Piece {
        let ends = bit(arc.lower()) | bit(arc.upper());
        Piece {
            left_or_end: arc.left_mask() | ends,
            right_or_end: arc.right_mask() | ends,
            ends,
        }
    }

    fn of_point(p: usize) -> Piece {
        Piece {
            left_or_end: bit(p),
            right_or_end: bit(p),
            ends: bit(p),
        }
    }

    fn forced_right_of(&self, other: &Piece) -> bool {
        self.left_or_end & other.right_or_end & !(self.ends & other.ends) != 0
    }
}

/// The diagram of the canonical join representation of `x`: one arc per
/// descent.
pub fn delta(x: &Permutation) -> Diagram {
    let mut arcs: Vec<Arc> = x
        .canonical_join_representation()
        .iter()
        .map(|j| Arc::from_join_irreducible(j).expect("canonical joinands are join-irreducible"))
        .collect();
    arcs.sort();
    Diagram::from_sorted_unchecked(x.n(), arcs)
}

/// Calls `visit` on every diagram on `n` points whose arcs all satisfy
/// `keep`, exactly once each, in a fixed order: a depth-first search that
/// adds arcs in canonical order and prunes on the first incompatible pair.
pub fn for_each_diagram(n: usize, keep: impl Fn(&Arc) -> bool, mut visit: impl FnMut(&Diagram)) {
    let arcs: Vec<Arc> = all_arcs(n).into_iter().filter(|a| keep(a)).collect();
    let m = arcs.len();
    let mut compat = vec![FixedBitSet::with_capacity(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if arcs[i].compatible(&arcs[j]).expect("same n") {
                compat[i].insert(j);
                compat[j].insert(i);
            }
        }
    }

    let mut all = FixedBitSet::with_capacity(m);
    all.insert_range(..);
    let mut chosen: Vec<usize> = Vec::new();
    extend(n, &arcs, &compat, &all, 0, &mut chosen, &mut visit);
}

fn extend(
    n: usize,
    arcs: &[Arc],
    compat: &[FixedBitSet],
    candidates: &FixedBitSet,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&Diagram),
) {
    let diagram = Diagram::from_sorted_unchecked(n, chosen.iter().map(|&i| arcs[i]).collect());
    visit(&diagram);
    for i in candidates.ones().filter(|&i| i >= start) {
        let mut next = candidates.clone();
        next.intersect_with(&compat[i]);
        chosen.push(i);
        extend(n, arcs, compat, &next, i + 1, chosen, visit);
        chosen.pop();
    }
}

pub fn enumerate_diagrams(n: usize, keep: impl Fn(&Arc) -> bool) -> Vec<Diagram> {
    let mut out = Vec::new();
    for_each_diagram(n, keep, |d| out.push(d.clone()));
    out
}

/// Faces of the complex of noncrossing diagrams using only the
/// uncontracted arcs of `congruence`.
pub fn complex_faces(congruence: &Congruence) -> Vec<Diagram> {
    let members = congruence.uncontracted();
    enumerate_diagrams(members.n(), |a| members.contains(a))
}

impl fmt::Display for Diagram {
    /// Arcs in canonical order joined by `;`, without the `n=` header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, arc) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{arc}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(n={}; {self})", self.n)
    }
}
