//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test -- --nocapture`). Random sweeps use fixed
//! seeds so the fixture sets are reproducible.

use std::collections::BTreeSet;
use std::io::Write;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use earcolor::acyclic::{
    acyclic_color, assert_abc, backward_class_counts, directional_class_counts, AcyclicBuilder,
    AcyclicStepKind,
};
use earcolor::bounds::{color_by_odd_circumference, erdos_hajnal, gyarfas, mihok_schiermeyer, tuza};
use earcolor::clique_cycle::cycle_through_clique;
use earcolor::coloring::{check_acyclic, check_proper};
use earcolor::digraph::{
    bidirect, induced_subdigraph, is_acyclic, strongly_connected, underlying_graph, Digraph,
    UndirectedGraph,
};
use earcolor::fixtures;
use earcolor::oracle::{
    clique_number, cycle_stats, enumerate_cycles, exact_acyclic_chromatic, exact_chromatic,
    residue_census,
};
use earcolor::proper::{assert_ab, color_mod1, ear_class_counts, next_class, Mod1Builder};
use earcolor::Limits;

fn lim() -> Limits {
    Limits::default()
}

fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).unwrap()
}

fn random_strong_digraph(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Digraph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let p = rng.gen_range(0.25..0.95);
        let d = random_digraph(rng, n, p);
        if d.n() >= 2 && strongly_connected(&d) {
            return d;
        }
    }
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> UndirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, &edges).unwrap()
}

#[test]
fn acceptance_1_mod1_oracle_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let instances = 10_000;
    let mut runs = 0usize;
    for _ in 0..instances {
        let d = random_strong_digraph(&mut rng, 2, 6);
        for k in 2..=4usize {
            let census = residue_census(&d, k, lim().max_cycles).unwrap();
            if census.realized(1) {
                continue;
            }
            let run = color_mod1(&d, k, false, lim())
                .unwrap_or_else(|e| panic!("construction failed on {:?}: {e}", d));
            assert!(run.coloring.colors.iter().all(|&c| c < k));
            assert!(
                check_proper(&underlying_graph(&d), &run.coloring.colors).is_none(),
                "improper coloring on {:?}",
                d
            );
            runs += 1;
        }
    }
    println!("acceptance 1 (mod-1 oracle sweep): PASS — {instances} strong digraphs, {runs} verified runs");
}

#[test]
fn acceptance_2_acyclic_oracle_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let instances = 10_000;
    let mut runs = 0usize;
    for _ in 0..instances {
        let n = rng.gen_range(1..=5usize);
        let p = rng.gen_range(0.15..0.9);
        let d = random_digraph(&mut rng, n, p);
        for k in 2..=4usize {
            let census = residue_census(&d, k, lim().max_cycles).unwrap();
            for r in 0..k {
                if census.realized(r) {
                    continue;
                }
                let run = acyclic_color(&d, k, r, false, lim())
                    .unwrap_or_else(|e| panic!("construction failed on {:?} k={k} r={r}: {e}", d));
                assert!(run.coloring.colors.iter().all(|&c| c < k));
                assert!(
                    check_acyclic(&d, &run.coloring.colors).is_none(),
                    "cyclic class on {:?} k={k} r={r}",
                    d
                );
                runs += 1;
            }
        }
    }
    println!("acceptance 2 (acyclic oracle sweep): PASS — {instances} digraphs, {runs} verified runs");
}

#[test]
fn acceptance_3_invariants_after_every_step() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let max_paths = lim().max_ear_paths;
    let mut mod1_instances = 0usize;
    let mut mod1_steps = 0usize;
    while mod1_instances < 60 {
        let d = random_strong_digraph(&mut rng, 3, 6);
        let k = rng.gen_range(2..=4usize);
        let census = residue_census(&d, k, lim().max_cycles).unwrap();
        if census.realized(1) {
            continue;
        }
        let mut builder = Mod1Builder::seed(&d, k, lim()).unwrap();
        assert_eq!(assert_ab(builder.state(), max_paths).unwrap(), None);
        while !builder.is_complete() {
            let counts = ear_class_counts(builder.state(), max_paths).unwrap();
            let step = builder.step().unwrap();
            let class = step.class;
            assert_eq!(
                counts[next_class(class, k)],
                0,
                "class above the chosen one must be empty"
            );
            assert_eq!(assert_ab(builder.state(), max_paths).unwrap(), None);
            mod1_steps += 1;
        }
        builder.finish().unwrap();
        mod1_instances += 1;
    }

    let mut acyclic_instances = 0usize;
    let mut acyclic_steps = 0usize;
    let mut backward_steps = 0usize;
    while acyclic_instances < 60 {
        let d = random_strong_digraph(&mut rng, 3, 6);
        let k = rng.gen_range(2..=4usize);
        let r = rng.gen_range(0..k);
        let census = residue_census(&d, k, lim().max_cycles).unwrap();
        if census.realized(r) {
            continue;
        }
        let mut builder = AcyclicBuilder::seed(&d, k, r, lim()).unwrap();
        assert_eq!(
            assert_abc(builder.state(), builder.order(), builder.alpha(), max_paths).unwrap(),
            None
        );
        while !builder.is_complete() {
            let directional =
                directional_class_counts(builder.state(), builder.order(), max_paths).unwrap();
            // Snapshot the state before the step mutates it.
            let pre_state = builder.state().clone();
            let step = builder.step().unwrap().clone();
            let s_next = next_class(step.class, k);
            match step.kind {
                AcyclicStepKind::Forward => {
                    assert_eq!(directional.forward[s_next], 0, "forward class above chosen");
                }
                AcyclicStepKind::Cyclic => {
                    assert_eq!(directional.forward[s_next], 0, "forward class above chosen");
                    assert_eq!(directional.cyclic[s_next], 0, "cyclic class above chosen");
                }
                AcyclicStepKind::Backward { x, y, .. } => {
                    let counts = backward_class_counts(&pre_state, x, y, max_paths).unwrap();
                    assert_eq!(counts[s_next], 0, "return class above chosen");
                    backward_steps += 1;
                }
            }
            assert_eq!(
                assert_abc(builder.state(), builder.order(), builder.alpha(), max_paths).unwrap(),
                None
            );
            acyclic_steps += 1;
        }
        builder.finish().unwrap();
        acyclic_instances += 1;
    }
    assert!(backward_steps > 0, "fixture set never exercised the backward branch");
    println!(
        "acceptance 3 (stepwise invariants): PASS — {} instances, {} steps ({} backward)",
        mod1_instances + acyclic_instances,
        mod1_steps + acyclic_steps,
        backward_steps
    );
}

#[test]
fn acceptance_4_counterexample_digraph() {
    let d = fixtures::alternating_wheel(2);
    assert_eq!(d.n(), 6);
    let stats = cycle_stats(&d, lim().max_cycles).unwrap();
    assert_eq!(stats.odd_circumference, 3);
    let g = underlying_graph(&d);
    assert_eq!(exact_chromatic(&g).unwrap(), 4);
    assert_eq!(clique_number(&g).unwrap(), 3);

    let report = color_by_odd_circumference(&d, lim()).unwrap();
    assert_eq!(report.bound, 4);
    assert_eq!(report.coloring.color_count(), 4);
    assert!(check_proper(&g, &report.coloring.colors).is_none());

    // Same through the binary.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let mut text = format!("{} {}\n", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        text.push_str(&format!("{u} {v}\n"));
    }
    file.write_all(text.as_bytes()).unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_earcolor"))
        .args(["bound", "--theorem", "odd-circ"])
        .arg(file.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["bound"]["bound"], serde_json::json!(4));
    assert_eq!(report["color_count"], serde_json::json!(4));
    assert_eq!(report["verified"], serde_json::json!(true));
    println!("acceptance 4 (six-vertex counterexample): PASS — odd circumference 3, chromatic number 4, clique number 3");
}

#[test]
fn acceptance_5_sharpness() {
    for k in 2..=6usize {
        let d = fixtures::bidirected_complete(k);
        let census = residue_census(&d, k, lim().max_cycles).unwrap();
        assert!(!census.realized(1 % k), "bidirected K{k} realizes 1 mod {k}");
        let run = color_mod1(&d, k, true, lim()).unwrap();
        assert_eq!(run.coloring.color_count(), k, "bidirected K{k}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for n in 3..=8usize {
        let mut tournaments = vec![fixtures::strong_tournament(n)];
        while tournaments.len() < 4 {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        arcs.push((u, v));
                    } else {
                        arcs.push((v, u));
                    }
                }
            }
            let t = Digraph::new(n, &arcs).unwrap();
            if strongly_connected(&t) {
                tournaments.push(t);
            }
        }
        for t in tournaments {
            let run = color_mod1(&t, n, true, lim()).unwrap();
            assert_eq!(run.coloring.color_count(), n, "strong tournament on {n}");
        }
    }
    println!("acceptance 5 (sharpness): PASS — complete digraphs K2..K6 and strong tournaments n=3..8 use exactly k colors");
}

#[test]
fn acceptance_6_petersen_theorem4() {
    let g = fixtures::petersen();
    let d = bidirect(&g);
    let census = residue_census(&d, 4, lim().max_cycles).unwrap();
    assert_eq!(census.realized_residues(), vec![0, 1, 2]);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    let mut text = format!("mode undirected\n{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        text.push_str(&format!("{u} {v}\n"));
    }
    file.write_all(text.as_bytes()).unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_earcolor"))
        .args(["undirected", "--k", "4", "--r", "3"])
        .arg(file.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verified"], serde_json::json!(true));
    let colors: Vec<usize> = report["coloring"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    assert!(colors.iter().all(|&c| c < 4));
    assert!(check_proper(&g, &colors).is_none());
    println!("acceptance 6 (Petersen, modulus 4, residue 3): PASS — verified proper 4-coloring");
}

#[test]
fn acceptance_7_corollary_bounds_dominate_chromatic() {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let instances = 1_000;
    let mut gyarfas_equalities = 0usize;
    for _ in 0..instances {
        let n = rng.gen_range(1..=9usize);
        let p = rng.gen_range(0.15..0.85);
        let g = random_graph(&mut rng, n, p);
        let chi = exact_chromatic(&g).unwrap();

        let eh = erdos_hajnal(&g, lim()).unwrap();
        assert!(eh.bound >= chi, "erdos-hajnal bound {} < chi {chi}", eh.bound);
        assert!(eh.coloring.color_count() <= eh.bound);
        assert!(check_proper(&g, &eh.coloring.colors).is_none());

        let gy = gyarfas(&g, lim()).unwrap();
        assert!(gy.bound >= chi, "gyarfas bound {} < chi {chi}", gy.bound);
        assert!(gy.coloring.color_count() <= gy.bound);
        assert!(check_proper(&g, &gy.coloring.colors).is_none());
        if gy.bound == chi {
            gyarfas_equalities += 1;
        }

        let ms = mihok_schiermeyer(&g, lim()).unwrap();
        assert!(ms.bound >= chi, "mihok-schiermeyer bound {} < chi {chi}", ms.bound);
        assert!(ms.coloring.color_count() <= ms.bound);
        assert!(check_proper(&g, &ms.coloring.colors).is_none());

        // A valid modulus for the mod-1 hypothesis: the circumference (no
        // cycle is longer, so none has length 1 mod it), or 2 for forests.
        let lengths: Vec<usize> = enumerate_cycles(&bidirect(&g), None)
            .cycles
            .iter()
            .map(|c| c.len())
            .filter(|&l| l >= 3)
            .collect();
        let k = lengths.iter().copied().max().unwrap_or(2).max(2);
        let tz = tuza(&g, k, lim()).unwrap();
        assert!(tz.bound >= chi, "tuza bound {} < chi {chi}", tz.bound);
        assert!(tz.coloring.color_count() <= tz.bound);
        assert!(check_proper(&g, &tz.coloring.colors).is_none());
    }
    println!(
        "acceptance 7 (corollary bounds dominate): PASS — {instances} graphs, gyarfas equality observed {gyarfas_equalities} times"
    );
}

#[test]
fn acceptance_8_clique_cycle_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let instances = 1_000;
    let mut non_strong_sets = 0usize;
    for _ in 0..instances {
        let base = random_strong_digraph(&mut rng, 4, 10);
        let n = base.n();
        let set_size = rng.gen_range(2..=5.min(n));
        let mut covered: BTreeSet<usize> = BTreeSet::new();
        while covered.len() < set_size {
            covered.insert(rng.gen_range(0..n));
        }
        let covered: Vec<usize> = covered.into_iter().collect();

        // Plant adjacency: add one arc per non-adjacent pair.
        let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
        for (i, &u) in covered.iter().enumerate() {
            for &v in &covered[i + 1..] {
                if !base.has_arc(u, v) && !base.has_arc(v, u) {
                    if rng.gen_bool(0.5) {
                        arcs.push((u, v));
                    } else {
                        arcs.push((v, u));
                    }
                }
            }
        }
        let d = Digraph::new(n, &arcs).unwrap();

        let cert = cycle_through_clique(&d, &covered)
            .unwrap_or_else(|e| panic!("certificate failed on {:?} U={:?}: {e}", d, covered));
        // Simplicity and arc validity are re-checked by reconstruction.
        earcolor::digraph::VertexCycle::new(&d, cert.cycle.vertices().to_vec()).unwrap();
        for &v in &covered {
            assert!(cert.cycle.contains(v), "cycle misses {v}");
        }
        let sub = induced_subdigraph(&d, &covered).unwrap();
        if !strongly_connected(&sub.digraph) {
            non_strong_sets += 1;
            assert!(
                cert.cycle.len() >= covered.len() + 1,
                "non-strong set must force a longer cycle"
            );
        }
    }
    assert!(non_strong_sets > 0, "sweep never hit a non-strong covered set");
    println!(
        "acceptance 8 (clique cycles): PASS — {instances} certificates, {non_strong_sets} with non-strong covered sets"
    );
}

#[test]
fn acceptance_9_oracle_self_consistency() {
    // Johnson enumeration count equals the naive rotation count.
    let mut rng = StdRng::seed_from_u64(909);
    let enumeration_instances = 1_000;
    for _ in 0..enumeration_instances {
        let n = rng.gen_range(1..=5usize);
        let p = rng.gen_range(0.1..0.95);
        let d = random_digraph(&mut rng, n, p);
        let fast = enumerate_cycles(&d, None);
        assert!(!fast.truncated);
        let naive = naive_cycle_count(&d);
        assert_eq!(fast.cycles.len(), naive, "count mismatch on {:?}", d);
        // Canonical cycles are pairwise distinct.
        let set: BTreeSet<Vec<usize>> = fast
            .cycles
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect();
        assert_eq!(set.len(), naive);
        assert_eq!(is_acyclic(&d), fast.cycles.is_empty());
    }

    // Acyclic chromatic number decomposes over strong components.
    let decomposition_instances = 300;
    for _ in 0..decomposition_instances {
        let n = rng.gen_range(1..=7usize);
        let p = rng.gen_range(0.1..0.7);
        let d = random_digraph(&mut rng, n, p);
        let whole = exact_acyclic_chromatic(&d).unwrap();
        let by_parts = earcolor::oracle::acyclic_chromatic_by_components(&d, 12).unwrap();
        assert_eq!(whole, by_parts, "decomposition identity fails on {:?}", d);
    }
    println!(
        "acceptance 9 (oracle self-consistency): PASS — {enumeration_instances} enumeration checks, {decomposition_instances} decomposition checks"
    );
}

/// Independent cycle counter: every vertex subset, every rotation with the
/// minimum vertex first.
fn naive_cycle_count(d: &Digraph) -> usize {
    let n = d.n();
    let mut count = 0usize;
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if subset.len() < 2 {
            continue;
        }
        let first = subset[0];
        let mut rest: Vec<usize> = subset[1..].to_vec();
        permutations(&mut rest, 0, &mut |perm| {
            if d.has_arc(first, perm[0])
                && perm.windows(2).all(|w| d.has_arc(w[0], w[1]))
                && d.has_arc(*perm.last().unwrap(), first)
            {
                count += 1;
            }
        });
    }
    count
}

fn permutations(items: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permutations(items, at + 1, visit);
        items.swap(at, i);
    }
}
