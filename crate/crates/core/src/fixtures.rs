//! Deterministic fixture graphs shared by tests and examples. Random
//! generators live in test code, not here.

use crate::digraph::{bidirect, Digraph, UndirectedGraph};

/// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Digraph {
    assert!(n >= 2);
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::new(n, &arcs).unwrap()
}

pub fn cycle_graph(n: usize) -> UndirectedGraph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    UndirectedGraph::new(n, &edges).unwrap()
}

pub fn path_graph(n: usize) -> UndirectedGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    UndirectedGraph::new(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> UndirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    UndirectedGraph::new(n, &edges).unwrap()
}

pub fn bidirected_cycle(n: usize) -> Digraph {
    bidirect(&cycle_graph(n))
}

pub fn bidirected_path(n: usize) -> Digraph {
    bidirect(&path_graph(n))
}

pub fn bidirected_complete(n: usize) -> Digraph {
    bidirect(&complete_graph(n))
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes
/// `i -- i+5`. Its cycle lengths are exactly {5, 6, 8, 9}.
pub fn petersen() -> UndirectedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + ((i + 2) % 5)));
    }
    UndirectedGraph::new(10, &edges).unwrap()
}

/// A strong digraph on `2n + 2` vertices with chromatic number 4, odd
/// circumference 3, and clique number 3 (no four pairwise adjacent
/// vertices): an alternating orientation of a `(2n+1)`-cycle whose odd
/// positions dominate their neighbors, plus a hub joined to every rim
/// vertex by opposite arcs.
pub fn alternating_wheel(n: usize) -> Digraph {
    assert!(n >= 1);
    let rim = 2 * n + 1;
    let hub = rim;
    let mut arcs = Vec::new();
    for e in (0..rim).step_by(2) {
        if e + 1 < rim {
            arcs.push((e, e + 1));
        }
        if e > 0 {
            arcs.push((e, e - 1));
        }
    }
    arcs.push((rim - 1, 0));
    for v in 0..rim {
        arcs.push((hub, v));
        arcs.push((v, hub));
    }
    Digraph::new(rim + 1, &arcs).unwrap()
}

/// A deterministic strong tournament: the Hamiltonian path `0 -> 1 -> ...`
/// plus all remaining pairs oriented backwards, which closes the cycle.
pub fn strong_tournament(n: usize) -> Digraph {
    assert!(n >= 3);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if j == i + 1 {
                arcs.push((i, j));
            } else {
                arcs.push((j, i));
            }
        }
    }
    Digraph::new(n, &arcs).unwrap()
}
