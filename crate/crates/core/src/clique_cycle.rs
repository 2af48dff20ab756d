//! Routing a cycle through a set of pairwise adjacent vertices of a strong
//! digraph.
//!
//! The set induces a semicomplete subdigraph whose condensation is a total
//! order; a shortest return path from the last component to the first
//! supplies, per detour of two or more arcs, a direct arc back (otherwise
//! the path could be shortcut). Adding the shortcut arcs in the forward
//! direction makes the induced subdigraph strongly connected, a
//! Hamiltonian cycle of it exists, and splicing each used shortcut back
//! into its detour yields the certificate cycle. Every fact that argument
//! guarantees is asserted at runtime and raises a defect if false.

use serde::Serialize;

use crate::digraph::{
    induced_subdigraph, strong_components, strongly_connected, Digraph, VertexCycle,
};
use crate::error::{Error, Result};

/// A detour of the return path standing in for the arc `(from, to)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Detour {
    pub from: usize,
    pub to: usize,
    /// Full vertex sequence from `from` to `to`; the interior avoids the
    /// covered set.
    pub path: Vec<usize>,
}

/// A verified cycle through all covered vertices.
#[derive(Clone, Debug, Serialize)]
pub struct CliqueCycleCertificate {
    pub cycle: VertexCycle,
    pub covered: Vec<usize>,
    pub detours: Vec<Detour>,
    /// Hamiltonian cycle of the shortcut-augmented induced subdigraph, in
    /// host vertex ids.
    pub hamiltonian_core: VertexCycle,
}

/// Builds a simple cycle containing every vertex of `u_set`. Requires a
/// strong host, at least two covered vertices, and pairwise adjacency.
/// The cycle has at least `|u_set| + 1` vertices whenever the induced
/// subdigraph is not strong.
pub fn cycle_through_clique(d: &Digraph, u_set: &[usize]) -> Result<CliqueCycleCertificate> {
    let mut covered: Vec<usize> = u_set.to_vec();
    covered.sort_unstable();
    covered.dedup();
    if covered.len() != u_set.len() {
        return Err(Error::Precondition("covered set repeats a vertex".into()));
    }
    if covered.len() < 2 {
        return Err(Error::Precondition(
            "covered set needs at least two vertices".into(),
        ));
    }
    if let Some(&v) = covered.iter().find(|&&v| v >= d.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: d.n() });
    }
    if !strongly_connected(d) {
        return Err(Error::NotStrong);
    }
    for (i, &u) in covered.iter().enumerate() {
        for &v in &covered[i + 1..] {
            if !d.has_arc(u, v) && !d.has_arc(v, u) {
                return Err(Error::NotAdjacent { u, v });
            }
        }
    }

    let sub = induced_subdigraph(d, &covered)?;
    let comps = strong_components(&sub.digraph);
    let in_covered = |v: usize| sub.local_id(v).is_some();

    let mut detours: Vec<Detour> = Vec::new();
    let mut core_arcs: Vec<(usize, usize)> = sub.digraph.arcs().collect();

    if comps.len() > 1 {
        // Shortest return path from the sink component to the source one,
        // in host ids; interior touches neither end component again.
        let sources: Vec<usize> = comps.last().unwrap().iter().map(|&v| sub.original_id(v)).collect();
        let targets: Vec<usize> = comps[0].iter().map(|&v| sub.original_id(v)).collect();
        let path = lex_shortest_path(d, &sources, &targets)?;

        // Split the path at covered vertices; multi-arc segments become
        // detours whose reverse arc must exist by minimality.
        let mut segment_start = 0;
        for i in 1..path.len() {
            if in_covered(path[i]) {
                if i - segment_start >= 2 {
                    let from = path[segment_start];
                    let to = path[i];
                    if !d.has_arc(to, from) {
                        return Err(Error::Defect(format!(
                            "shortest return path lacks the reverse arc ({to}, {from})"
                        )));
                    }
                    if d.has_arc(from, to) {
                        return Err(Error::Defect(format!(
                            "detour ({from}, {to}) could have been shortcut"
                        )));
                    }
                    detours.push(Detour {
                        from,
                        to,
                        path: path[segment_start..=i].to_vec(),
                    });
                    let (lf, lt) = (
                        sub.local_id(from).unwrap(),
                        sub.local_id(to).unwrap(),
                    );
                    core_arcs.push((lf, lt));
                }
                segment_start = i;
            }
        }
    }

    let core = Digraph::new(sub.digraph.n(), &core_arcs)?;
    if !strongly_connected(&core) {
        return Err(Error::Defect(
            "shortcut-augmented induced subdigraph is not strong".into(),
        ));
    }
    let ham_local = hamiltonian_semicomplete(&core)?;
    let ham_host: Vec<usize> = ham_local
        .vertices()
        .iter()
        .map(|&v| sub.original_id(v))
        .collect();

    // Splice each shortcut arc the Hamiltonian cycle uses back into its
    // detour.
    let detour_of = |from: usize, to: usize| detours.iter().find(|dt| dt.from == from && dt.to == to);
    let mut cycle_verts: Vec<usize> = Vec::new();
    for i in 0..ham_host.len() {
        let from = ham_host[i];
        let to = ham_host[(i + 1) % ham_host.len()];
        cycle_verts.push(from);
        if !d.has_arc(from, to) {
            let dt = detour_of(from, to).ok_or_else(|| {
                Error::Defect(format!("core arc ({from}, {to}) has no detour and is not in the host"))
            })?;
            cycle_verts.extend_from_slice(&dt.path[1..dt.path.len() - 1]);
        }
    }
    let cycle = VertexCycle::new(d, cycle_verts)?;
    for &v in &covered {
        if !cycle.contains(v) {
            return Err(Error::Defect(format!("cycle misses covered vertex {v}")));
        }
    }
    if comps.len() > 1 && cycle.len() < covered.len() + 1 {
        return Err(Error::Defect(
            "non-strong induced subdigraph must force a strictly longer cycle".into(),
        ));
    }
    Ok(CliqueCycleCertificate {
        cycle,
        covered,
        detours,
        hamiltonian_core: VertexCycle::canonical(ham_host),
    })
}

/// Lexicographically least shortest path from any source to any target.
fn lex_shortest_path(d: &Digraph, sources: &[usize], targets: &[usize]) -> Result<Vec<usize>> {
    let n = d.n();
    // Distance to the target set, by reverse BFS.
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for &t in targets {
        dist[t] = 0;
        queue.push_back(t);
    }
    while let Some(v) = queue.pop_front() {
        for &w in d.in_neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let len = sources
        .iter()
        .map(|&s| dist[s])
        .min()
        .ok_or_else(|| Error::Precondition("empty source set".into()))?;
    if len == usize::MAX {
        return Err(Error::Defect(
            "strong host offers no path between component extremes".into(),
        ));
    }
    let mut current = sources
        .iter()
        .copied()
        .filter(|&s| dist[s] == len)
        .min()
        .unwrap();
    let mut path = vec![current];
    while dist[current] > 0 {
        let next = d
            .out_neighbors(current)
            .iter()
            .copied()
            .filter(|&w| dist[w] + 1 == dist[current])
            .min()
            .expect("distance decreases along some arc");
        path.push(next);
        current = next;
    }
    Ok(path)
}

/// Hamiltonian cycle of a strong semicomplete digraph: start from a
/// shortest cycle, then repeatedly either insert an outside vertex between
/// consecutive cycle vertices, or, when every outside vertex dominates or
/// is dominated by the whole cycle, splice a dominated-to-dominating arc.
pub fn hamiltonian_semicomplete(h: &Digraph) -> Result<VertexCycle> {
    let n = h.n();
    if n < 2 {
        return Err(Error::Precondition(
            "hamiltonian cycle needs at least two vertices".into(),
        ));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !h.has_arc(u, v) && !h.has_arc(v, u) {
                return Err(Error::NotAdjacent { u, v });
            }
        }
    }
    if !strongly_connected(h) {
        return Err(Error::NotStrong);
    }

    let mut cycle = shortest_cycle(h).ok_or_else(|| {
        Error::Defect("strong nontrivial digraph without a cycle".into())
    })?;

    while cycle.len() < n {
        let on_cycle = |v: usize| cycle.contains(&v);
        let outside: Vec<usize> = (0..n).filter(|&v| !on_cycle(v)).collect();

        let mut inserted = false;
        'insertion: for &v in &outside {
            let has_in = cycle.iter().any(|&c| h.has_arc(c, v));
            let has_out = cycle.iter().any(|&c| h.has_arc(v, c));
            if !has_in || !has_out {
                continue;
            }
            for i in 0..cycle.len() {
                let a = cycle[i];
                let b = cycle[(i + 1) % cycle.len()];
                if h.has_arc(a, v) && h.has_arc(v, b) {
                    cycle.insert(i + 1, v);
                    inserted = true;
                    break 'insertion;
                }
            }
            return Err(Error::Defect(
                "vertex with arcs both ways admits no insertion point".into(),
            ));
        }
        if inserted {
            continue;
        }

        // Everyone outside either dominates the cycle or is dominated by
        // it; strongness forces an arc from the dominated side to the
        // dominating side, which splices in two vertices at once.
        let dominated: Vec<usize> = outside
            .iter()
            .copied()
            .filter(|&v| cycle.iter().all(|&c| !h.has_arc(v, c)))
            .collect();
        let dominating: Vec<usize> = outside
            .iter()
            .copied()
            .filter(|&v| cycle.iter().all(|&c| !h.has_arc(c, v)))
            .collect();
        if dominated.len() + dominating.len() != outside.len() {
            return Err(Error::Defect(
                "outside vertex classification is not a partition".into(),
            ));
        }
        let mut spliced = false;
        'splice: for &t in &dominated {
            for &s in &dominating {
                if h.has_arc(t, s) {
                    // cycle[0] -> t -> s -> cycle[1].
                    cycle.insert(1, s);
                    cycle.insert(1, t);
                    spliced = true;
                    break 'splice;
                }
            }
        }
        if !spliced {
            return Err(Error::Defect(
                "no arc from the dominated side to the dominating side".into(),
            ));
        }
    }
    VertexCycle::new(h, cycle)
}

/// Shortest directed cycle, lexicographically least among the shortest.
/// In a semicomplete digraph it has two or three vertices.
fn shortest_cycle(h: &Digraph) -> Option<Vec<usize>> {
    let n = h.n();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        // BFS back to start.
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([start]);
        dist[start] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in h.out_neighbors(v) {
                if w == start && v != start {
                    // Parent chain runs back to start, which has no parent.
                    let mut path = vec![v];
                    let mut cur = v;
                    while parent[cur] != usize::MAX {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    let better = match &best {
                        None => true,
                        Some(b) => path.len() < b.len() || (path.len() == b.len() && path < *b),
                    };
                    if better {
                        best = Some(path);
                    }
                } else if dist[w] == usize::MAX && w != start {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bidirected_k3_through_all() {
        let d = fixtures::bidirected_complete(3);
        let cert = cycle_through_clique(&d, &[0, 1, 2]).unwrap();
        assert_eq!(cert.cycle.len(), 3);
        assert!(cert.detours.is_empty());
    }

    #[test]
    fn strong_tournament_yields_hamiltonian_cycle() {
        let d = fixtures::strong_tournament(4);
        let cert = cycle_through_clique(&d, &[0, 1, 2, 3]).unwrap();
        assert_eq!(cert.cycle.len(), 4);
    }

    #[test]
    fn non_strong_induced_set_forces_longer_cycle() {
        // Directed 6-cycle plus the arc (2, 0): the covered pair {0, 2}
        // induces a single arc, so the certificate needs a detour.
        let mut arcs: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        arcs.push((2, 0));
        let d = Digraph::new(6, &arcs).unwrap();
        let cert = cycle_through_clique(&d, &[0, 2]).unwrap();
        assert!(cert.cycle.len() >= 3);
        assert!(cert.cycle.contains(0) && cert.cycle.contains(2));
        assert_eq!(cert.detours.len(), 1);
        assert_eq!(cert.detours[0].path, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_adjacent_sets() {
        let d = fixtures::directed_cycle(4);
        assert!(matches!(
            cycle_through_clique(&d, &[0, 2]),
            Err(Error::NotAdjacent { u: 0, v: 2 })
        ));
    }

    #[test]
    fn rejects_non_strong_hosts_and_tiny_sets() {
        let d = Digraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            cycle_through_clique(&d, &[0, 1]),
            Err(Error::NotStrong)
        ));
        let strong = fixtures::bidirected_complete(3);
        assert!(cycle_through_clique(&strong, &[0]).is_err());
    }

    #[test]
    fn hamiltonian_on_small_semicomplete_digraphs() {
        let triangle = fixtures::directed_cycle(3);
        let c = hamiltonian_semicomplete(&triangle).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2]);

        let k2 = fixtures::bidirected_complete(2);
        assert_eq!(hamiltonian_semicomplete(&k2).unwrap().len(), 2);

        for n in [4, 5, 6, 7] {
            let t = fixtures::strong_tournament(n);
            assert_eq!(hamiltonian_semicomplete(&t).unwrap().len(), n);
        }
    }

    #[test]
    fn hamiltonian_rejects_bad_inputs() {
        let path = Digraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            hamiltonian_semicomplete(&path),
            Err(Error::NotStrong)
        ));
        let sparse = fixtures::directed_cycle(4);
        assert!(matches!(
            hamiltonian_semicomplete(&sparse),
            Err(Error::NotAdjacent { .. })
        ));
    }
}
