//! Digraph and undirected-graph containers plus the structural queries
//! everything else builds on: strong connectivity, components in
//! condensation order, acyclicity, bidirection and induced subgraphs.
//!
//! Vertices are dense indices `0..n`. Graphs are immutable once built and
//! reject loops and parallel arcs/edges at construction. Adjacency is kept
//! sorted in both directions so traversals are deterministic.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite simple digraph: no loops, no parallel arcs. Opposite arcs
/// `(u, v)` and `(v, u)` may coexist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    m: usize,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate arc ({u}, {v})")));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            out,
            inn,
            m: seen.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].iter().map(move |&v| (u, v)))
    }
}

/// A finite simple undirected graph: no self-edges, no duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-edge at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {{{u}, {v}}}"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            adj,
            m: seen.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }
}

/// A simple directed path, stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexPath {
    vertices: Vec<usize>,
}

impl VertexPath {
    /// Validates that the sequence is a simple path of `host`.
    pub fn new(host: &Digraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidGraph("empty path".into()));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if v >= host.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: host.n(),
                });
            }
            if !seen.insert(v) {
                return Err(Error::InvalidGraph(format!(
                    "path repeats vertex {v}"
                )));
            }
        }
        for w in vertices.windows(2) {
            if !host.has_arc(w[0], w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "missing arc ({}, {})",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A simple directed cycle, stored in canonical rotation: the minimum
/// vertex comes first and the direction is preserved, so equal cycles
/// compare equal. The closing arc from the last vertex back to the first
/// is implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexCycle {
    vertices: Vec<usize>,
}

impl VertexCycle {
    pub fn new(host: &Digraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidGraph(
                "cycle needs at least two vertices".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if v >= host.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: host.n(),
                });
            }
            if !seen.insert(v) {
                return Err(Error::InvalidGraph(format!(
                    "cycle repeats vertex {v}"
                )));
            }
        }
        for w in vertices.windows(2) {
            if !host.has_arc(w[0], w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "missing arc ({}, {})",
                    w[0], w[1]
                )));
            }
        }
        let last = *vertices.last().unwrap();
        if !host.has_arc(last, vertices[0]) {
            return Err(Error::InvalidGraph(format!(
                "missing closing arc ({}, {})",
                last, vertices[0]
            )));
        }
        Ok(Self::canonical(vertices))
    }

    /// Rotates so the minimum vertex comes first. The caller asserts the
    /// sequence already is a simple cycle of some host.
    pub(crate) fn canonical(vertices: Vec<usize>) -> Self {
        let min_at = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .unwrap();
        let mut rotated = Vec::with_capacity(vertices.len());
        rotated.extend_from_slice(&vertices[min_at..]);
        rotated.extend_from_slice(&vertices[..min_at]);
        Self { vertices: rotated }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Cycle length = number of arcs = number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// True iff every ordered vertex pair is joined by a directed path.
/// Vacuously true for `n <= 1`.
pub fn strongly_connected(d: &Digraph) -> bool {
    let n = d.n();
    if n <= 1 {
        return true;
    }
    reaches_all(n, 0, |v| d.out_neighbors(v)) && reaches_all(n, 0, |v| d.in_neighbors(v))
}

fn reaches_all<'a>(n: usize, start: usize, adj: impl Fn(usize) -> &'a [usize]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in adj(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Strongly connected components in condensation order: every arc between
/// distinct components goes from an earlier to a later component. Each
/// component is sorted ascending.
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    // Iterative Tarjan. Components pop in reverse topological order, so the
    // final list is reversed.
    let n = d.n();
    let mut index = vec![usize::MAX; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0usize;

    // Explicit DFS frames: (vertex, next out-neighbor position).
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            if *pos < d.out_neighbors(v).len() {
                let w = d.out_neighbors(v)[*pos];
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    let mut component = Vec::new();
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    component.sort_unstable();
                    components.push(component);
                }
            }
        }
    }
    components.reverse();
    components
}

/// True iff `d` has no directed cycle (equivalently, admits a topological
/// order).
pub fn is_acyclic(d: &Digraph) -> bool {
    let n = d.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_neighbors(v).len()).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut processed = 0;
    while let Some(v) = queue.pop() {
        processed += 1;
        for &w in d.out_neighbors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    processed == n
}

/// Replaces each edge `{u, v}` with the pair of opposite arcs.
pub fn bidirect(g: &UndirectedGraph) -> Digraph {
    let mut arcs = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Digraph::new(g.n(), &arcs).expect("bidirection of a valid graph is valid")
}

/// Replaces each arc with an edge on the same ends; opposite arcs merge.
pub fn underlying_graph(d: &Digraph) -> UndirectedGraph {
    let mut edges = BTreeSet::new();
    for (u, v) in d.arcs() {
        edges.insert((u.min(v), u.max(v)));
    }
    let edges: Vec<_> = edges.into_iter().collect();
    UndirectedGraph::new(d.n(), &edges).expect("underlying graph of a valid digraph is valid")
}

/// An induced subdigraph together with the vertex renaming, so results
/// computed on it can be pulled back to the host.
#[derive(Clone, Debug)]
pub struct InducedSubdigraph {
    pub digraph: Digraph,
    /// `original_ids[local]` is the host vertex behind local vertex `local`;
    /// sorted ascending.
    pub original_ids: Vec<usize>,
}

impl InducedSubdigraph {
    pub fn local_id(&self, original: usize) -> Option<usize> {
        self.original_ids.binary_search(&original).ok()
    }

    pub fn original_id(&self, local: usize) -> usize {
        self.original_ids[local]
    }
}

/// Subdigraph induced by the vertex set `s`: vertices are re-indexed
/// `0..s.len()` in ascending original order.
pub fn induced_subdigraph(d: &Digraph, s: &[usize]) -> Result<InducedSubdigraph> {
    let mut ids: Vec<usize> = s.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != s.len() {
        return Err(Error::InvalidGraph("duplicate vertex in subset".into()));
    }
    if let Some(&v) = ids.iter().find(|&&v| v >= d.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: d.n() });
    }
    let mut arcs = Vec::new();
    for (new_u, &u) in ids.iter().enumerate() {
        for &v in d.out_neighbors(u) {
            if let Ok(new_v) = ids.binary_search(&v) {
                arcs.push((new_u, new_v));
            }
        }
    }
    Ok(InducedSubdigraph {
        digraph: Digraph::new(ids.len(), &arcs)?,
        original_ids: ids,
    })
}
