//! Graphviz export of the forcing order on arcs and of the weak order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::arc::all_arcs;
use crate::congruence::{forcing_edges, Congruence};
use crate::permutation::{all_permutations, Permutation};

/// Cover pairs of the order generated by `edges` on nodes `0..count`.
/// The input must be acyclic; it need not be transitively closed.
pub fn transitive_reduction(count: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut succ = vec![Vec::new(); count];
    for &(u, v) in edges {
        succ[u].push(v);
    }
    // reach[u]: nodes reachable from u by a path of length >= 1.
    let mut reach = vec![FixedBitSet::with_capacity(count); count];
    let mut state = vec![0u8; count];
    fn visit(u: usize, succ: &[Vec<usize>], reach: &mut [FixedBitSet], state: &mut [u8]) {
        if state[u] == 2 {
            return;
        }
        assert!(state[u] == 0, "cycle through node {u}");
        state[u] = 1;
        let mut acc = FixedBitSet::with_capacity(reach.len());
        for &v in &succ[u] {
            visit(v, succ, reach, state);
            acc.insert(v);
            acc.union_with(&reach[v]);
        }
        reach[u] = acc;
        state[u] = 2;
    }
    for u in 0..count {
        visit(u, &succ, &mut reach, &mut state);
    }

    let mut covers = BTreeSet::new();
    for &(u, v) in edges {
        let implied = succ[u].iter().any(|&w| w != v && reach[w].contains(v));
        if !implied && u != v {
            covers.insert((u, v));
        }
    }
    covers.into_iter().collect()
}

/// Covers of the subarc order on arcs of `n` points, drawn upward from a
/// subarc to the arcs containing it.
pub fn export_forcing(n: usize) -> String {
    let arcs = all_arcs(n);
    let index = |a| arcs.binary_search(a).expect("arc in list");
    let edges: Vec<(usize, usize)> = forcing_edges(n)
        .iter()
        .map(|(small, big)| (index(small), index(big)))
        .collect();
    let covers = transitive_reduction(arcs.len(), &edges);

    let mut out = String::from("digraph forcing {\n  rankdir=BT;\n");
    for arc in &arcs {
        let _ = writeln!(out, "  \"{arc}\";");
    }
    for (u, v) in covers {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", arcs[u], arcs[v]);
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the weak order on `S_n`, or of the quotient realized
/// on its uncontracted permutations. Quotient covers are the images of the
/// covers of `S_n` whose endpoints project to different class bottoms.
pub fn export_weak(n: usize, congruence: Option<&Congruence>) -> String {
    let nodes: Vec<Permutation>;
    let mut edges: BTreeSet<(Permutation, Permutation)> = BTreeSet::new();
    match congruence {
        None => {
            nodes = all_permutations(n).collect();
            for x in &nodes {
                for y in x.upper_covers() {
                    edges.insert((x.clone(), y));
                }
            }
        }
        Some(c) => {
            nodes = c.uncontracted_by_delta();
            for x in all_permutations(n) {
                let bottom = c.project_down(&x).expect("same n");
                for y in x.upper_covers() {
                    let top = c.project_down(&y).expect("same n");
                    if top != bottom {
                        edges.insert((bottom.clone(), top));
                    }
                }
            }
        }
    }

    let mut out = String::from("digraph weak {\n  rankdir=BT;\n");
    for x in &nodes {
        let _ = writeln!(out, "  \"{x}\";");
    }
    for (x, y) in &edges {
        let _ = writeln!(out, "  \"{x}\" -> \"{y}\";");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::NamedCongruence;

    fn count_edges(dot: &str) -> usize {
        dot.matches(" -> ").count()
    }

    fn count_nodes(dot: &str) -> usize {
        dot.lines()
            .filter(|l| l.trim_start().starts_with('"') && !l.contains("->"))
            .count()
    }

    #[test]
    fn reduction_of_a_chain() {
        let edges = [(0, 1), (1, 2), (0, 2)];
        assert_eq!(transitive_reduction(3, &edges), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn forcing_exports() {
        let dot = export_forcing(4);
        assert_eq!(count_nodes(&dot), 11);
        let two = export_forcing(2);
        assert_eq!((count_nodes(&two), count_edges(&two)), (1, 0));
    }

    #[test]
    fn weak_exports() {
        let dot = export_weak(3, None);
        assert_eq!((count_nodes(&dot), count_edges(&dot)), (6, 6));
        let dot = export_weak(4, None);
        assert_eq!((count_nodes(&dot), count_edges(&dot)), (24, 36));
    }

    #[test]
    fn quotient_hasse_matches_brute_force() {
        for n in 2..=4 {
            for name in ["tamari", "baxter", "maxlen:2", "clumped:0"] {
                let c = Congruence::named(n, &name.parse::<NamedCongruence>().unwrap()).unwrap();
                let nodes = c.uncontracted_by_delta();
                let mut order = Vec::new();
                for (i, x) in nodes.iter().enumerate() {
                    for (j, y) in nodes.iter().enumerate() {
                        if i != j && x.weak_leq(y).unwrap() {
                            order.push((i, j));
                        }
                    }
                }
                let mut expected: Vec<String> = transitive_reduction(nodes.len(), &order)
                    .into_iter()
                    .map(|(i, j)| format!("  \"{}\" -> \"{}\";", nodes[i], nodes[j]))
                    .collect();
                expected.sort();
                let dot = export_weak(n, Some(&c));
                let mut got: Vec<String> = dot
                    .lines()
                    .filter(|l| l.contains("->"))
                    .map(str::to_string)
                    .collect();
                got.sort();
                assert_eq!(got, expected, "n={n} {name}");
            }
        }
    }
}
