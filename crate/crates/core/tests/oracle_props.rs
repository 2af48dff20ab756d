//! Cross-checks between independent implementations: the fast paths must
//! agree with brute-force re-derivations on everything small.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use earcolor::acyclic::acyclic_color;
use earcolor::clique_cycle::hamiltonian_semicomplete;
use earcolor::digraph::{
    is_acyclic, strongly_connected, underlying_graph, Digraph, UndirectedGraph,
};
use earcolor::ear::{enumerate_ears, Ear, EarState};
use earcolor::oracle::{
    enumerate_cycles, exact_acyclic_chromatic, exact_chromatic, residue_census,
};
use earcolor::{Error, Limits};

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

#[test]
fn acyclicity_iff_no_enumerated_cycles() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=5usize);
        let p = rng.gen_range(0.05..0.95);
        let d = random_digraph(&mut rng, n, p);
        let cycles = enumerate_cycles(&d, None);
        assert!(!cycles.truncated);
        assert_eq!(is_acyclic(&d), cycles.cycles.is_empty(), "{:?}", d);
    }
}

#[test]
fn census_flags_match_enumerated_residues() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..500 {
        let n = rng.gen_range(2..=5usize);
        let p = rng.gen_range(0.2..0.9);
        let d = random_digraph(&mut rng, n, p);
        for k in 2..=4usize {
            let census = residue_census(&d, k, 1_000_000).unwrap();
            let mut expected = vec![false; k];
            for c in enumerate_cycles(&d, None).cycles {
                expected[c.len() % k] = true;
            }
            for j in 0..k {
                assert_eq!(census.realized(j), expected[j]);
                if let Some(w) = &census.witnesses[j] {
                    assert_eq!(w.len() % k, j);
                }
            }
        }
    }
}

/// Every ear, by brute force: all member pairs joined by a new single arc,
/// plus every arc-valid arrangement of outside vertices between members.
fn brute_force_ears(state: &EarState) -> BTreeSet<Vec<usize>> {
    let host = state.host();
    let members: Vec<usize> = state.members().collect();
    let outside: Vec<usize> = (0..host.n()).filter(|&v| !state.contains(v)).collect();
    let mut found = BTreeSet::new();
    for &a in &members {
        for &b in &members {
            if a != b && host.has_arc(a, b) && !state.has_arc_in(a, b) {
                found.insert(vec![a, b]);
            }
        }
    }
    for mask in 1u32..(1 << outside.len()) {
        let chosen: Vec<usize> = outside
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        let mut perm = chosen.clone();
        permutations(&mut perm, 0, &mut |interior| {
            if !interior.windows(2).all(|w| host.has_arc(w[0], w[1])) {
                return;
            }
            for &a in &members {
                if !host.has_arc(a, interior[0]) {
                    continue;
                }
                for &b in &members {
                    if host.has_arc(*interior.last().unwrap(), b) {
                        let mut seq = vec![a];
                        seq.extend_from_slice(interior);
                        seq.push(b);
                        found.insert(seq);
                    }
                }
            }
        });
    }
    found
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

#[test]
fn ear_enumeration_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(17);
    let mut states_checked = 0usize;
    while states_checked < 400 {
        let n = rng.gen_range(2..=6usize);
        let p = rng.gen_range(0.3..0.9);
        let d = random_digraph(&mut rng, n, p);
        if !strongly_connected(&d) || d.n() < 2 {
            continue;
        }
        let census = residue_census(&d, 3, 1_000_000).unwrap();
        let Some(seed) = census.realized_residues().first().map(|&j| {
            census.witnesses[j].clone().unwrap()
        }) else {
            continue;
        };
        let mut state = EarState::seed(&d, 3, seed).unwrap();
        loop {
            let fast: BTreeSet<Vec<usize>> = enumerate_ears(&state, 1_000_000)
                .unwrap()
                .iter()
                .map(|e| e.vertices().to_vec())
                .collect();
            let brute = brute_force_ears(&state);
            assert_eq!(fast, brute, "ear sets differ on {:?}", d);
            states_checked += 1;
            if state.is_complete() {
                break;
            }
            // Extend by the first ear; the potential values are irrelevant
            // to enumeration.
            let seq = fast.iter().next().unwrap().clone();
            let ear = Ear::new(seq).unwrap();
            let zeros = vec![0; ear.interior().len()];
            state = state.extend(&ear, &zeros).unwrap();
        }
    }
}

#[test]
fn acyclic_chromatic_below_chromatic() {
    let mut rng = StdRng::seed_from_u64(19);
    for _ in 0..300 {
        let n = rng.gen_range(1..=7usize);
        let p = rng.gen_range(0.1..0.9);
        let d = random_digraph(&mut rng, n, p);
        let chi_a = exact_acyclic_chromatic(&d).unwrap();
        let chi = exact_chromatic(&underlying_graph(&d)).unwrap();
        assert!(chi_a <= chi, "chi_a={chi_a} > chi={chi} on {:?}", d);
    }
}

fn has_hamiltonian_cycle_brute(d: &Digraph) -> bool {
    let n = d.n();
    if n < 2 {
        return false;
    }
    let mut order: Vec<usize> = (1..n).collect();
    let mut found = false;
    permutations(&mut order, 0, &mut |perm| {
        if found {
            return;
        }
        let mut ok = d.has_arc(0, perm[0]);
        ok &= perm.windows(2).all(|w| d.has_arc(w[0], w[1]));
        ok &= d.has_arc(*perm.last().unwrap(), 0);
        if ok {
            found = true;
        }
    });
    found
}

#[test]
fn hamiltonian_construction_matches_existence() {
    let mut rng = StdRng::seed_from_u64(23);
    let mut checked = 0usize;
    while checked < 400 {
        let n = rng.gen_range(2..=7usize);
        // Random semicomplete digraph: orient every pair, sometimes both ways.
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                match rng.gen_range(0..3) {
                    0 => arcs.push((u, v)),
                    1 => arcs.push((v, u)),
                    _ => {
                        arcs.push((u, v));
                        arcs.push((v, u));
                    }
                }
            }
        }
        let h = Digraph::new(n, &arcs).unwrap();
        let exists = has_hamiltonian_cycle_brute(&h);
        match hamiltonian_semicomplete(&h) {
            Ok(cycle) => {
                assert!(exists, "constructed a cycle the brute force misses");
                assert_eq!(cycle.len(), n);
            }
            Err(Error::NotStrong) => {
                // A Hamiltonian cycle would make the digraph strong.
                assert!(!exists, "missed a Hamiltonian cycle on {:?}", h);
            }
            Err(e) => panic!("unexpected error {e:?}"),
        }
        checked += 1;
    }
}

#[test]
fn monochromatic_arcs_point_backward_in_final_order() {
    let mut rng = StdRng::seed_from_u64(29);
    let mut checked = 0usize;
    while checked < 200 {
        let n = rng.gen_range(2..=6usize);
        let p = rng.gen_range(0.2..0.8);
        let d = random_digraph(&mut rng, n, p);
        let k = rng.gen_range(2..=4usize);
        let census = residue_census(&d, k, 1_000_000).unwrap();
        let Some(r) = (0..k).find(|&r| !census.realized(r)) else {
            continue;
        };
        let run = acyclic_color(&d, k, r, false, Limits::default()).unwrap();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in run.final_order.iter().enumerate() {
            pos[v] = i;
        }
        for (u, v) in d.arcs() {
            if run.coloring.colors[u] == run.coloring.colors[v] {
                assert!(pos[u] > pos[v], "monochromatic arc ({u},{v}) not backward");
            }
        }
        checked += 1;
    }
}

#[test]
fn chromatic_oracle_agrees_with_greedy_free_search() {
    // Decision search cross-check: chi is the least k admitting a coloring.
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8usize);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = UndirectedGraph::new(n, &edges).unwrap();
        let chi = exact_chromatic(&g).unwrap();
        if g.edge_count() == 0 {
            assert!(chi <= 1);
            continue;
        }
        assert!(earcolor::oracle::proper_coloring_with(&g, chi).is_some());
        assert!(earcolor::oracle::proper_coloring_with(&g, chi - 1).is_none());
    }
}
