//! Exact, brute-force-grade facts about cycles, paths and chromatic
//! numbers. This is the verification bedrock: every hypothesis check and
//! every emitted coloring is validated against these oracles, which refuse
//! or abort rather than approximate.
//!
//! Cycle enumeration is Johnson's algorithm (Finding all the elementary
//! circuits of a directed graph, SIAM J. Comput. 1975): for each start
//! vertex `s` in increasing order it explores the subgraph induced by
//! vertices `>= s`, so each simple cycle is produced exactly once, already
//! in canonical rotation, in a deterministic order.

use std::collections::HashMap;

use serde::Serialize;

use crate::digraph::{is_acyclic, strong_components, Digraph, UndirectedGraph, VertexCycle};
use crate::error::{Error, Result};

/// Largest instance the exact coloring searches accept.
pub const DEFAULT_ORACLE_BOUND: usize = 12;
/// Largest instance the exact longest-path search accepts.
pub const LONGEST_PATH_BOUND: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Search {
    Continue,
    Stop,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VisitOutcome {
    Completed,
    StoppedByVisitor,
    CapHit,
}

/// Visits every simple directed cycle of `d` exactly once, as a vertex
/// slice in canonical rotation. Stops early if the visitor says so or
/// after `cap` cycles.
fn visit_cycles(d: &Digraph, cap: usize, mut visit: impl FnMut(&[usize]) -> Search) -> VisitOutcome {
    let n = d.n();
    let mut emitted = 0usize;
    for start in 0..n {
        let admissible =
            |v: usize| -> Vec<usize> { d.out_neighbors(v).iter().copied().filter(|&w| w >= start).collect() };
        if admissible(start).is_empty() {
            continue;
        }
        let mut blocked = vec![false; n];
        let mut block_list: Vec<Vec<usize>> = vec![Vec::new(); n];
        blocked[start] = true;

        struct Frame {
            v: usize,
            neighbors: Vec<usize>,
            pos: usize,
            found: bool,
        }
        let mut path = vec![start];
        let mut stack = vec![Frame {
            v: start,
            neighbors: admissible(start),
            pos: 0,
            found: false,
        }];

        fn unblock(v: usize, blocked: &mut [bool], block_list: &mut [Vec<usize>]) {
            let mut work = vec![v];
            while let Some(u) = work.pop() {
                if blocked[u] {
                    blocked[u] = false;
                    work.append(&mut block_list[u]);
                }
            }
        }

        while let Some(frame) = stack.last_mut() {
            if frame.pos < frame.neighbors.len() {
                let w = frame.neighbors[frame.pos];
                frame.pos += 1;
                if w == start {
                    frame.found = true;
                    if visit(&path) == Search::Stop {
                        return VisitOutcome::StoppedByVisitor;
                    }
                    emitted += 1;
                    if emitted >= cap {
                        return VisitOutcome::CapHit;
                    }
                } else if !blocked[w] {
                    blocked[w] = true;
                    path.push(w);
                    stack.push(Frame {
                        v: w,
                        neighbors: admissible(w),
                        pos: 0,
                        found: false,
                    });
                }
            } else {
                let done = stack.pop().unwrap();
                path.pop();
                if done.found {
                    unblock(done.v, &mut blocked, &mut block_list);
                    if let Some(parent) = stack.last_mut() {
                        parent.found = true;
                    }
                } else {
                    for w in done.neighbors {
                        if !block_list[w].contains(&done.v) {
                            block_list[w].push(done.v);
                        }
                    }
                }
            }
        }
    }
    VisitOutcome::Completed
}

/// The result of enumerating cycles with an optional count limit.
/// Truncation is flagged, not an error.
#[derive(Clone, Debug)]
pub struct CycleEnumeration {
    pub cycles: Vec<VertexCycle>,
    pub truncated: bool,
}

/// Every simple directed cycle exactly once, in canonical rotation, in a
/// deterministic order. Stops after `limit` cycles if given.
pub fn enumerate_cycles(d: &Digraph, limit: Option<usize>) -> CycleEnumeration {
    let cap = limit.unwrap_or(usize::MAX);
    let mut cycles = Vec::new();
    let outcome = visit_cycles(d, cap, |verts| {
        cycles.push(VertexCycle::canonical(verts.to_vec()));
        Search::Continue
    });
    CycleEnumeration {
        cycles,
        truncated: outcome == VisitOutcome::CapHit,
    }
}

/// Which residues mod `k` are realized by simple cycle lengths.
#[derive(Clone, Debug, Serialize)]
pub struct ResidueCensus {
    pub modulus: usize,
    /// One witness cycle per realized residue, indexed by residue.
    pub witnesses: Vec<Option<VertexCycle>>,
    /// Cycle counts per residue; present only when the enumeration ran to
    /// completion.
    pub counts: Option<Vec<u64>>,
    /// True iff every cycle of the digraph was inspected.
    pub complete: bool,
}

impl ResidueCensus {
    pub fn realized(&self, residue: usize) -> bool {
        self.witnesses[residue].is_some()
    }

    pub fn realized_residues(&self) -> Vec<usize> {
        (0..self.modulus).filter(|&j| self.realized(j)).collect()
    }
}

/// Census of cycle-length residues mod `k`. Short-circuits once all `k`
/// residues are witnessed; errors if the cycle cap is hit before the
/// emptiness of the unwitnessed residues is settled.
pub fn residue_census(d: &Digraph, k: usize, max_cycles: usize) -> Result<ResidueCensus> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    let mut witnesses: Vec<Option<VertexCycle>> = vec![None; k];
    let mut counts = vec![0u64; k];
    let mut unwitnessed = k;
    let outcome = visit_cycles(d, max_cycles, |verts| {
        let j = verts.len() % k;
        counts[j] += 1;
        if witnesses[j].is_none() {
            witnesses[j] = Some(VertexCycle::canonical(verts.to_vec()));
            unwitnessed -= 1;
            if unwitnessed == 0 {
                return Search::Stop;
            }
        }
        Search::Continue
    });
    match outcome {
        VisitOutcome::Completed => Ok(ResidueCensus {
            modulus: k,
            witnesses,
            counts: Some(counts),
            complete: true,
        }),
        VisitOutcome::StoppedByVisitor => Ok(ResidueCensus {
            modulus: k,
            witnesses,
            counts: None,
            complete: false,
        }),
        VisitOutcome::CapHit => Err(Error::CycleCapExceeded(max_cycles)),
    }
}

/// Whether the digraph avoids cycles of length `residue` mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HypothesisVerdict {
    Holds,
    Violated { witness: VertexCycle },
}

impl HypothesisVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, HypothesisVerdict::Holds)
    }
}

/// Decides whether `d` has no simple cycle of length `r` mod `k`.
/// `r` is reduced mod `k`. Stops at the first witness.
pub fn hypothesis_holds(d: &Digraph, k: usize, r: usize, max_cycles: usize) -> Result<HypothesisVerdict> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    let r = r % k;
    let mut witness = None;
    let outcome = visit_cycles(d, max_cycles, |verts| {
        if verts.len() % k == r {
            witness = Some(VertexCycle::canonical(verts.to_vec()));
            Search::Stop
        } else {
            Search::Continue
        }
    });
    match (outcome, witness) {
        (_, Some(w)) => Ok(HypothesisVerdict::Violated { witness: w }),
        (VisitOutcome::Completed, None) => Ok(HypothesisVerdict::Holds),
        (VisitOutcome::CapHit, None) => Err(Error::CycleCapExceeded(max_cycles)),
        (VisitOutcome::StoppedByVisitor, None) => unreachable!("visitor only stops on a witness"),
    }
}

/// Exact cycle and path statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleStats {
    /// Length of a longest cycle, 0 if none.
    pub circumference: usize,
    /// Length of a longest odd cycle, 1 if none.
    pub odd_circumference: usize,
    /// Vertex count of a longest path.
    pub longest_path_vertices: usize,
}

/// Exact statistics by exhaustive search. Errors if the cycle cap is hit
/// or the instance exceeds the longest-path bound.
pub fn cycle_stats(d: &Digraph, max_cycles: usize) -> Result<CycleStats> {
    let mut circumference = 0usize;
    let mut odd = 1usize;
    let outcome = visit_cycles(d, max_cycles, |verts| {
        circumference = circumference.max(verts.len());
        if verts.len() % 2 == 1 {
            odd = odd.max(verts.len());
        }
        Search::Continue
    });
    if outcome == VisitOutcome::CapHit {
        return Err(Error::CycleCapExceeded(max_cycles));
    }
    Ok(CycleStats {
        circumference,
        odd_circumference: odd,
        longest_path_vertices: longest_path_vertices(d)?,
    })
}

/// Vertex count of a longest simple path, by memoized DFS over
/// (vertex, visited-set) states. Refuses above [`LONGEST_PATH_BOUND`].
pub fn longest_path_vertices(d: &Digraph) -> Result<usize> {
    let n = d.n();
    if n == 0 {
        return Ok(0);
    }
    if n > LONGEST_PATH_BOUND {
        return Err(Error::OracleBound {
            n,
            bound: LONGEST_PATH_BOUND,
        });
    }
    fn go(d: &Digraph, v: usize, mask: u32, memo: &mut HashMap<(usize, u32), usize>) -> usize {
        if let Some(&cached) = memo.get(&(v, mask)) {
            return cached;
        }
        let mut best = 1;
        for &w in d.out_neighbors(v) {
            if mask & (1 << w) == 0 {
                best = best.max(1 + go(d, w, mask | (1 << w), memo));
            }
        }
        memo.insert((v, mask), best);
        best
    }
    let mut memo = HashMap::new();
    Ok((0..n)
        .map(|v| go(d, v, 1 << v, &mut memo))
        .max()
        .unwrap())
}

/// Exact chromatic number of `g`, refusing instances larger than
/// [`DEFAULT_ORACLE_BOUND`].
pub fn exact_chromatic(g: &UndirectedGraph) -> Result<usize> {
    exact_chromatic_bounded(g, DEFAULT_ORACLE_BOUND)
}

/// Exact chromatic number via branch and bound: greedy upper bound, clique
/// lower bound, then a decision search per candidate count.
pub fn exact_chromatic_bounded(g: &UndirectedGraph, vertex_bound: usize) -> Result<usize> {
    let n = g.n();
    if n > vertex_bound {
        return Err(Error::OracleBound {
            n,
            bound: vertex_bound,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let lower = max_clique(g).len();
    let upper = greedy_coloring_count(g);
    for k in lower..upper {
        if proper_coloring_with(g, k).is_some() {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Size of a largest clique, refusing instances larger than
/// [`DEFAULT_ORACLE_BOUND`].
pub fn clique_number(g: &UndirectedGraph) -> Result<usize> {
    let n = g.n();
    if n > DEFAULT_ORACLE_BOUND {
        return Err(Error::OracleBound {
            n,
            bound: DEFAULT_ORACLE_BOUND,
        });
    }
    Ok(max_clique(g).len())
}

fn max_clique(g: &UndirectedGraph) -> Vec<usize> {
    fn extend(
        g: &UndirectedGraph,
        current: &mut Vec<usize>,
        candidates: &[usize],
        best: &mut Vec<usize>,
    ) {
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        if candidates.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + (candidates.len() - i) <= best.len() {
                break;
            }
            current.push(v);
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            extend(g, current, &next, best);
            current.pop();
        }
    }
    let mut best = Vec::new();
    let all: Vec<usize> = (0..g.n()).collect();
    extend(g, &mut Vec::new(), &all, &mut best);
    best
}

fn degree_order(g: &UndirectedGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
    order
}

fn greedy_coloring_count(g: &UndirectedGraph) -> usize {
    let mut colors = vec![usize::MAX; g.n()];
    let mut used = 0;
    for v in degree_order(g) {
        let mut taken = vec![false; used + 1];
        for &w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                taken[colors[w]] = true;
            }
        }
        let c = (0..=used).find(|&c| !taken[c]).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Searches for a proper coloring with at most `num_colors` colors.
/// Exhaustive with symmetry breaking; intended for desk-scale instances.
pub fn proper_coloring_with(g: &UndirectedGraph, num_colors: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if num_colors == 0 {
        return None;
    }
    let order = degree_order(g);
    let mut colors = vec![usize::MAX; n];
    fn assign(
        g: &UndirectedGraph,
        order: &[usize],
        i: usize,
        max_used: usize,
        num_colors: usize,
        colors: &mut Vec<usize>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let top = num_colors.min(max_used + 2);
        for c in 0..top {
            if g.neighbors(v).iter().any(|&w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if assign(g, order, i + 1, max_used.max(c), num_colors, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }
    colors[order[0]] = 0;
    if assign(g, &order, 1, 0, num_colors, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

/// Exact acyclic chromatic number: the minimum number of classes each
/// inducing an acyclic subdigraph. Refuses instances larger than
/// [`DEFAULT_ORACLE_BOUND`].
pub fn exact_acyclic_chromatic(d: &Digraph) -> Result<usize> {
    exact_acyclic_chromatic_bounded(d, DEFAULT_ORACLE_BOUND)
}

pub fn exact_acyclic_chromatic_bounded(d: &Digraph, vertex_bound: usize) -> Result<usize> {
    let n = d.n();
    if n > vertex_bound {
        return Err(Error::OracleBound {
            n,
            bound: vertex_bound,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    if is_acyclic(d) {
        return Ok(1);
    }
    for k in 2..=n {
        if acyclic_coloring_with(d, k).is_some() {
            return Ok(k);
        }
    }
    unreachable!("singleton classes are always acyclic")
}

/// Searches for a coloring with at most `num_colors` classes, each
/// inducing an acyclic subdigraph.
pub fn acyclic_coloring_with(d: &Digraph, num_colors: usize) -> Option<Vec<usize>> {
    let n = d.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if num_colors == 0 {
        return None;
    }
    fn class_stays_acyclic(d: &Digraph, colors: &[usize], c: usize, just_added: usize) -> bool {
        // A new cycle in the class must pass through the vertex just added.
        let members: Vec<usize> = (0..d.n())
            .filter(|&v| colors[v] == c || v == just_added)
            .collect();
        let sub = crate::digraph::induced_subdigraph(d, &members)
            .expect("class members are in range");
        is_acyclic(&sub.digraph)
    }
    fn assign(d: &Digraph, v: usize, max_used: usize, num_colors: usize, colors: &mut Vec<usize>) -> bool {
        if v == d.n() {
            return true;
        }
        let top = num_colors.min(max_used + 2);
        for c in 0..top {
            if !class_stays_acyclic(d, colors, c, v) {
                continue;
            }
            colors[v] = c;
            if assign(d, v + 1, max_used.max(c), num_colors, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }
    let mut colors = vec![usize::MAX; n];
    colors[0] = 0;
    if assign(d, 1, 0, num_colors, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

/// The acyclic chromatic number of a digraph equals the maximum over its
/// strong components; exposed for cross-checking.
pub fn acyclic_chromatic_by_components(d: &Digraph, vertex_bound: usize) -> Result<usize> {
    let mut best = if d.n() > 0 { 1 } else { 0 };
    for comp in strong_components(d) {
        let sub = crate::digraph::induced_subdigraph(d, &comp)?;
        best = best.max(exact_acyclic_chromatic_bounded(&sub.digraph, vertex_bound)?);
    }
    Ok(best)
}
