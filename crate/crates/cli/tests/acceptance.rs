//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the summary is always printed; exits nonzero if any criterion fails.
//! All comparisons are exact.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::process::Command;
use std::time::Instant;

use noncrossing::counting::{baxter, catalan, eulerian, narayana, prodmin};
use noncrossing::{
    all_arcs, all_permutations, count_by_arcs, delta, enumerate_diagrams, for_each_diagram, Arc,
    BigUint, Congruence, Diagram, NamedCongruence, Permutation, Side,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest `n` for the exhaustive criteria.
const N_MAX: usize = 8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small(v: BigUint) -> u64 {
    u64::try_from(v).expect("fits in u64")
}

fn named(n: usize, spec: &str) -> Congruence {
    Congruence::named(n, &spec.parse::<NamedCongruence>().unwrap()).unwrap()
}

fn narayana_row(n: usize) -> Vec<u64> {
    (1..=n).map(|k| small(narayana(n, k).unwrap())).collect()
}

fn random_generators(rng: &mut ChaCha8Rng, n: usize) -> Vec<Arc> {
    let arcs = all_arcs(n);
    let k = rng.gen_range(0..=4.min(arcs.len()));
    arcs.choose_multiple(rng, k).copied().collect()
}

fn diagrams_equal_factorial() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=N_MAX {
        let diagrams = enumerate_diagrams(n, |_| true);
        let image: HashSet<Diagram> = all_permutations(n).map(|x| delta(&x)).collect();
        ensure(
            diagrams.len() == factorial(n) && image.len() == factorial(n),
            || format!("n={n}: {} diagrams, image {}", diagrams.len(), image.len()),
        )?;
        ensure(diagrams.iter().all(|d| image.contains(d)), || {
            format!("n={n}: enumerated diagram outside the image")
        })?;
        counts.push(diagrams.len());
    }
    ensure(counts == [1, 2, 6, 24, 120, 720, 5040, 40320], || {
        format!("{counts:?}")
    })?;
    Ok(format!("{counts:?}"))
}

fn round_trips() -> Outcome {
    let mut checked = (0, 0);
    for n in 1..=N_MAX {
        for x in all_permutations(n) {
            ensure(delta(&x).to_permutation() == x, || format!("x={x}"))?;
            checked.0 += 1;
        }
    }
    for n in 1..=7 {
        for d in enumerate_diagrams(n, |_| true) {
            ensure(delta(&d.to_permutation()) == d, || format!("D={d}"))?;
            checked.1 += 1;
        }
    }
    Ok(format!(
        "{} permutations, {} diagrams",
        checked.0, checked.1
    ))
}

fn eulerian_rows() -> Outcome {
    for n in 1..=N_MAX {
        let mut by_arcs = vec![0u64; n];
        for_each_diagram(n, |_| true, |d| by_arcs[d.len()] += 1);
        let mut by_descents = vec![0u64; n];
        for x in all_permutations(n) {
            by_descents[x.descents().len()] += 1;
        }
        let formula: Vec<u64> = (0..n).map(|k| small(eulerian(n, k))).collect();
        ensure(by_arcs == by_descents && by_arcs == formula, || {
            format!("n={n}: arcs {by_arcs:?}, descents {by_descents:?}, formula {formula:?}")
        })?;
        if n == 4 {
            ensure(by_arcs == [1, 11, 11, 1], || format!("n=4 row {by_arcs:?}"))?;
        }
    }
    Ok(format!("rows match for n = 1..={N_MAX}"))
}

fn catalan_narayana() -> Outcome {
    let mut totals = Vec::new();
    for n in 1..=N_MAX {
        let table = count_by_arcs(&named(n, "tamari"), "tamari");
        ensure(table.total == small(catalan(n)), || {
            format!("n={n}: {}", table.total)
        })?;
        ensure(table.counts == narayana_row(n), || {
            format!("n={n}: {:?} vs {:?}", table.counts, narayana_row(n))
        })?;
        totals.push(table.total);
    }
    ensure(totals == [1, 2, 5, 14, 42, 132, 429, 1430], || {
        format!("{totals:?}")
    })?;
    Ok(format!("totals {totals:?}"))
}

fn baxter_totals() -> Outcome {
    let mut totals = Vec::new();
    for n in 1..=N_MAX {
        let total = count_by_arcs(&named(n, "baxter"), "baxter").total;
        ensure(total == small(baxter(n).unwrap()), || {
            format!("n={n}: {total}")
        })?;
        totals.push(total);
    }
    ensure(totals == [1, 2, 6, 22, 92, 422, 2074, 10754], || {
        format!("{totals:?}")
    })?;
    Ok(format!("totals {totals:?}"))
}

fn matchings() -> Outcome {
    for n in 1..=N_MAX {
        let avoiders: BTreeSet<Permutation> = all_permutations(n)
            .filter(|x| {
                x.entries()
                    .windows(3)
                    .all(|w| !(w[0] > w[1] && w[1] > w[2]))
            })
            .collect();
        let matched: BTreeSet<Permutation> = all_permutations(n)
            .filter(|x| delta(x).classify().is_matching)
            .collect();
        ensure(avoiders == matched, || {
            format!(
                "n={n}: {} avoiders vs {} matchings",
                avoiders.len(),
                matched.len()
            )
        })?;
    }
    let mut perfect = Vec::new();
    for n in [2, 4, 6, 8] {
        let mut count = 0u64;
        for_each_diagram(
            n,
            |_| true,
            |d| {
                if d.classify().is_perfect_matching {
                    count += 1;
                }
            },
        );
        let alternating = all_permutations(n)
            .filter(|x| {
                x.entries()
                    .windows(2)
                    .enumerate()
                    .all(|(i, w)| (i % 2 == 0) == (w[0] > w[1]))
            })
            .count() as u64;
        ensure(count == alternating, || {
            format!("{n} points: {count} vs {alternating}")
        })?;
        perfect.push(count);
    }
    ensure(perfect == [1, 5, 61, 1385], || {
        format!("perfect {perfect:?}")
    })?;
    let mut left = Vec::new();
    for half in 1..=5 {
        let mut count = 0u64;
        for_each_diagram(2 * half, Arc::is_left, |d| {
            if d.classify().is_perfect_matching {
                count += 1;
            }
        });
        ensure(count == small(catalan(half)), || {
            format!("{} points: {count}", 2 * half)
        })?;
        left.push(count);
    }
    Ok(format!("perfect {perfect:?}, left perfect {left:?}"))
}

fn bounded_length() -> Outcome {
    let mut checked = 0;
    for n in 1..=N_MAX {
        for k in 1..=n + 1 {
            let total = count_by_arcs(&named(n, &format!("maxlen:{k}")), "maxlen").total;
            ensure(total == small(prodmin(n, k).unwrap()), || {
                format!("n={n} k={k}: {total}")
            })?;
            checked += 1;
        }
    }
    let spot = count_by_arcs(&named(5, "maxlen:3"), "maxlen").total;
    ensure(spot == 54, || format!("n=5 k=3: {spot}"))?;
    Ok(format!("{checked} (n, k) pairs, n=5 k=3 gives {spot}"))
}

fn clumped_agreement() -> Outcome {
    let mut totals = Vec::new();
    for n in 1..=N_MAX {
        let c = named(n, "clumped:1");
        let by_delta = c.uncontracted_by_delta();
        let by_patterns = c.uncontracted_by_patterns();
        let by_arcs = count_by_arcs(&c, "clumped:1").total;
        ensure(
            by_delta == by_patterns && by_arcs as usize == by_delta.len(),
            || {
                format!(
                    "n={n}: delta {}, patterns {}, diagrams {by_arcs}",
                    by_delta.len(),
                    by_patterns.len()
                )
            },
        )?;
        totals.push(by_arcs);
    }
    Ok(format!("totals {totals:?}"))
}

fn flagness() -> Outcome {
    let mut report = Vec::new();
    for n in 2..=5 {
        let arcs = all_arcs(n);
        let m = arcs.len();
        let index: HashMap<Arc, usize> = arcs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let valid: HashSet<u32> = all_permutations(n)
            .map(|x| delta(&x).arcs().iter().map(|a| 1u32 << index[a]).sum())
            .collect();
        let mut pair_ok = vec![0u32; m];
        for (i, row) in pair_ok.iter_mut().enumerate() {
            for j in 0..m {
                if i != j && valid.contains(&(1 << i | 1 << j)) {
                    *row |= 1 << j;
                }
            }
        }
        let mut cliques = 0usize;
        for mask in 0u32..(1u32 << m) {
            let mut rest = mask;
            let mut ok = true;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if mask & !(1 << i) & !pair_ok[i] != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                cliques += 1;
                ensure(valid.contains(&mask), || {
                    format!("n={n}: pairwise valid set {mask:#x} is not a diagram")
                })?;
            }
        }
        ensure(cliques == valid.len(), || {
            format!("n={n}: {cliques} vs {}", valid.len())
        })?;
        report.push(format!("n={n}: 2^{m} subsets"));
    }

    let n = 6;
    let arcs = all_arcs(n);
    let m = arcs.len();
    let index: HashMap<Arc, usize> = arcs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let mask_of = |d: &Diagram| d.arcs().iter().map(|a| 1u64 << index[a]).sum::<u64>();
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let valid: HashSet<u64> = perms.iter().map(|x| mask_of(&delta(x))).collect();
    let mut pair_ok = vec![0u64; m];
    for (i, row) in pair_ok.iter_mut().enumerate() {
        for j in 0..m {
            if i != j && valid.contains(&(1 << i | 1 << j)) {
                *row |= 1 << j;
            }
        }
    }
    let clique =
        |mask: u64| (0..m).all(|i| mask >> i & 1 == 0 || mask & !(1 << i) & !pair_ok[i] == 0);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut sampled, mut positive) = (0usize, 0usize);
    for round in 0..200_000 {
        let mask = match round % 3 {
            0 => {
                // A diagram with arcs toggled.
                let mut mask = mask_of(&delta(perms.choose(&mut rng).unwrap()));
                for _ in 0..rng.gen_range(1..=3) {
                    mask ^= 1 << rng.gen_range(0..m);
                }
                mask
            }
            1 => {
                // A maximal pairwise-valid set grown greedily.
                let mut order: Vec<usize> = (0..m).collect();
                order.shuffle(&mut rng);
                let mut mask = 0u64;
                for i in order {
                    if mask & !pair_ok[i] == 0 {
                        mask |= 1 << i;
                    }
                }
                mask
            }
            _ => {
                let mut mask = 0u64;
                for _ in 0..rng.gen_range(0..=6) {
                    mask |= 1 << rng.gen_range(0..m);
                }
                mask
            }
        };
        sampled += 1;
        if clique(mask) {
            positive += 1;
            ensure(valid.contains(&mask), || {
                format!("n=6: pairwise valid set {mask:#x} is not a diagram")
            })?;
        }
    }
    report.push(format!("n=6: {sampled} samples, {positive} pairwise valid"));
    Ok(report.join(", "))
}

fn pattern_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut sizes = Vec::new();
    for n in 1..=6 {
        for _ in 0..100 {
            let gens = random_generators(&mut rng, n);
            let c = Congruence::from_contracted(n, &gens).unwrap();
            let (a, b) = (c.uncontracted_by_delta(), c.uncontracted_by_patterns());
            ensure(a == b, || {
                format!("n={n} generators {gens:?}: {} vs {}", a.len(), b.len())
            })?;
            sizes.push(a.len());
        }
    }
    Ok(format!(
        "600 generator sets, quotient sizes {}..={}",
        sizes.iter().min().unwrap(),
        sizes.iter().max().unwrap()
    ))
}

/// Lattice congruence generated by contracting each `j` onto its unique
/// lower cover, by closing under joins and meets on the weak order.
struct WeakLattice {
    elems: Vec<Permutation>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
}

impl WeakLattice {
    fn new(n: usize) -> WeakLattice {
        let elems: Vec<Permutation> = all_permutations(n).collect();
        let masks: Vec<u64> = elems
            .iter()
            .map(|x| {
                let inv = x.inversions();
                let mut mask = 0u64;
                let mut k = 0;
                for b in 2..=n {
                    for a in 1..b {
                        if inv.contains(b, a) {
                            mask |= 1 << k;
                        }
                        k += 1;
                    }
                }
                mask
            })
            .collect();
        let m = elems.len();
        let leq = |i: usize, j: usize| masks[i] & !masks[j] == 0;
        let mut join = vec![vec![0; m]; m];
        let mut meet = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                let up: Vec<usize> = (0..m).filter(|&k| leq(i, k) && leq(j, k)).collect();
                let down: Vec<usize> = (0..m).filter(|&k| leq(k, i) && leq(k, j)).collect();
                let lub = *up.iter().min_by_key(|&&k| masks[k].count_ones()).unwrap();
                let glb = *down.iter().max_by_key(|&&k| masks[k].count_ones()).unwrap();
                assert!(up.iter().all(|&k| leq(lub, k)) && down.iter().all(|&k| leq(k, glb)));
                join[i][j] = lub;
                meet[i][j] = glb;
            }
        }
        WeakLattice { elems, join, meet }
    }

    fn index(&self, x: &Permutation) -> usize {
        self.elems.binary_search(x).unwrap()
    }

    /// Class label of each element.
    fn generated(&self, gens: &[Arc]) -> Vec<usize> {
        let m = self.elems.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| -> bool {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
                true
            } else {
                false
            }
        };
        for g in gens {
            let j = g.to_join_irreducible();
            let below = j.lower_covers();
            assert_eq!(below.len(), 1);
            union(&mut parent, self.index(&j), self.index(&below[0]));
        }
        loop {
            let mut changed = false;
            for x in 0..m {
                let r = find(&mut parent, x);
                if r == x {
                    continue;
                }
                for z in 0..m {
                    changed |= union(&mut parent, self.join[x][z], self.join[r][z]);
                    changed |= union(&mut parent, self.meet[x][z], self.meet[r][z]);
                }
            }
            if !changed {
                break;
            }
        }
        (0..m).map(|x| find(&mut parent, x)).collect()
    }
}

fn congruence_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for n in 2..=5 {
        let lattice = WeakLattice::new(n);
        let perms = &lattice.elems;
        for _ in 0..40 {
            let gens = random_generators(&mut rng, n);
            let c = Congruence::from_contracted(n, &gens).unwrap();
            let bottoms: Vec<Permutation> =
                perms.iter().map(|x| c.project_down(x).unwrap()).collect();

            // The brute-force congruence has the same classes.
            let labels = lattice.generated(&gens);
            for i in 0..perms.len() {
                for j in 0..perms.len() {
                    ensure(
                        (labels[i] == labels[j]) == (bottoms[i] == bottoms[j]),
                        || {
                            format!(
                                "n={n} generators {gens:?}: {} and {} classified differently",
                                perms[i], perms[j]
                            )
                        },
                    )?;
                }
            }

            // Classes are intervals with order-preserving extremal maps.
            let mut classes: BTreeMap<&Permutation, Vec<usize>> = BTreeMap::new();
            for (i, b) in bottoms.iter().enumerate() {
                classes.entry(b).or_default().push(i);
            }
            let mut top = vec![0usize; perms.len()];
            for (bottom, members) in &classes {
                let t = *members
                    .iter()
                    .max_by_key(|&&i| perms[i].inversions().len())
                    .unwrap();
                let interval: Vec<usize> = (0..perms.len())
                    .filter(|&z| {
                        bottom.weak_leq(&perms[z]).unwrap() && perms[z].weak_leq(&perms[t]).unwrap()
                    })
                    .collect();
                ensure(&interval == members, || {
                    format!("n={n}: class of {bottom} is not an interval")
                })?;
                for &i in members {
                    top[i] = t;
                }
            }
            for (i, x) in perms.iter().enumerate() {
                for y in x.upper_covers() {
                    let j = lattice.index(&y);
                    ensure(bottoms[i].weak_leq(&bottoms[j]).unwrap(), || {
                        format!("down map at {x} < {y}")
                    })?;
                    ensure(perms[top[i]].weak_leq(&perms[top[j]]).unwrap(), || {
                        format!("up map at {x} < {y}")
                    })?;
                }
            }

            // Contracted join-irreducibles are the arcs above a generator.
            let contracted: BTreeSet<Arc> = all_arcs(n)
                .into_iter()
                .filter(|a| {
                    let j = a.to_join_irreducible();
                    labels[lattice.index(&j)] == labels[lattice.index(&j.lower_covers()[0])]
                })
                .collect();
            let up_closure: BTreeSet<Arc> = all_arcs(n)
                .into_iter()
                .filter(|a| gens.iter().any(|g| g.is_subarc_of(a).unwrap()))
                .collect();
            ensure(contracted == up_closure, || {
                format!("n={n} generators {gens:?}: contracted set differs")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} random congruences"))
}

fn cambrian_narayana() -> Outcome {
    let mut orientations = 0;
    for n in 1..=6 {
        let row = narayana_row(n);
        for bits in 0u32..(1 << n) {
            let orientation: Vec<Side> = (0..n)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Side::Right
                    } else {
                        Side::Left
                    }
                })
                .collect();
            let name = NamedCongruence::Cambrian(orientation);
            let c = Congruence::named(n, &name).unwrap();
            let counts = count_by_arcs(&c, "cambrian").counts;
            ensure(counts == row, || {
                format!("{name} n={n}: {counts:?} vs {row:?}")
            })?;
            orientations += 1;
        }
    }
    Ok(format!("{orientations} orientations"))
}

fn ncarc(args: &[&str], stdin: &str) -> (i32, String) {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_ncarc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ncarc");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn worked_examples() -> Outcome {
    let (status, out) = ncarc(&["delta", "157842936"], "");
    let arcs: BTreeSet<&str> = out.lines().skip(1).flat_map(|l| l.split(';')).collect();
    let expected: BTreeSet<&str> = ["2-4:R", "4-8:LRL", "3-9:LLRLL"].into_iter().collect();
    ensure(status == 0 && arcs == expected, || {
        format!("delta gave {out:?}")
    })?;

    let (status, out) = ncarc(&["inverse"], "n=8\n1-3:R;2-5:LL;3-7:LRL\n");
    ensure(status == 0 && out.trim() == "46731528", || {
        format!("inverse gave {out:?}")
    })?;

    let (status, out) = ncarc(&["enumerate", "--n", "3", "--congruence", "tamari"], "");
    let perms: BTreeSet<&str> = out
        .lines()
        .filter(|l| !l.starts_with("total"))
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    let tamari: BTreeSet<&str> = ["123", "213", "231", "132", "321"].into_iter().collect();
    ensure(status == 0 && perms == tamari, || {
        format!("tamari gave {out:?}")
    })?;

    let (status, out) = ncarc(&["enumerate", "--n", "4", "--congruence", "baxter"], "");
    ensure(
        status == 0 && out.lines().last() == Some("total 22"),
        || format!("baxter gave {out:?}"),
    )?;
    Ok("delta, inverse, tamari(3), baxter(4)".into())
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("diagrams are counted by n!", diagrams_equal_factorial),
        ("delta and its inverse round trip", round_trips),
        ("arc counts follow the Eulerian numbers", eulerian_rows),
        (
            "left diagrams follow Catalan and Narayana",
            catalan_narayana,
        ),
        ("inflection-free diagrams follow Baxter", baxter_totals),
        ("matchings and perfect matchings", matchings),
        (
            "bounded length quotients follow prod min(i,k)",
            bounded_length,
        ),
        (
            "one-inflection quotient agrees across methods",
            clumped_agreement,
        ),
        ("pairwise compatible arc sets are diagrams", flagness),
        (
            "pattern avoidance equals the delta filter",
            pattern_equivalence,
        ),
        (
            "projections realize the generated congruence",
            congruence_oracle,
        ),
        ("Cambrian rows follow Narayana", cambrian_narayana),
        ("CLI worked examples", worked_examples),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {title}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {title}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
