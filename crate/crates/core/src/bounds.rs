//! Colorings derived from classical graph parameters. Each operation
//! computes a parameter (odd circumference, circumference, longest path,
//! odd/even cycle-length counts), finds a residue class the cycle lengths
//! provably avoid, and dispatches to one of the constructive colorings.
//! Every returned witness is re-verified before it leaves this module.

use serde::Serialize;

use crate::acyclic::acyclic_color;
use crate::coloring::{check_proper, Coloring, ColoringKind};
use crate::digraph::{bidirect, underlying_graph, Digraph, UndirectedGraph, VertexCycle};
use crate::error::{Error, Result};
use crate::oracle::{
    cycle_stats, enumerate_cycles, hypothesis_holds, proper_coloring_with, HypothesisVerdict,
    DEFAULT_ORACLE_BOUND,
};
use crate::proper::color_mod1;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremTag {
    OddCirc,
    Circ,
    LongestPath,
    ErdosHajnal,
    Tuza,
    Gyarfas,
    MihokSchiermeyer,
}

/// A computed bound with its verified coloring witness.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub theorem: TheoremTag,
    pub parameter_name: String,
    pub parameter: usize,
    pub bound: usize,
    pub coloring: Coloring,
    pub method: String,
}

/// Result of the undirected reduction.
#[derive(Clone, Debug, Serialize)]
pub struct UndirectedRun {
    pub k: usize,
    pub r: usize,
    /// `k`, or `k + 1` when the avoided residue is 2.
    pub bound: usize,
    pub coloring: Coloring,
    pub method: String,
}

/// Decides whether `g` avoids cycles of length `r` mod `k`. Undirected
/// cycles have length at least 3; the 2-cycles of the bidirection are
/// artifacts and are ignored.
pub fn undirected_hypothesis(
    g: &UndirectedGraph,
    k: usize,
    r: usize,
    limits: Limits,
) -> Result<HypothesisVerdict> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    let r = r % k;
    let d = bidirect(g);
    let found = enumerate_cycles(&d, Some(limits.max_cycles));
    if found.truncated {
        return Err(Error::CycleCapExceeded(limits.max_cycles));
    }
    for c in found.cycles {
        if c.len() >= 3 && c.len() % k == r {
            return Ok(HypothesisVerdict::Violated { witness: c });
        }
    }
    Ok(HypothesisVerdict::Holds)
}

/// Distinct cycle lengths of `g` (each undirected cycle traversed both
/// ways by the bidirection; lengths below 3 discarded).
fn undirected_cycle_lengths(g: &UndirectedGraph, limits: Limits) -> Result<Vec<usize>> {
    let d = bidirect(g);
    let found = enumerate_cycles(&d, Some(limits.max_cycles));
    if found.truncated {
        return Err(Error::CycleCapExceeded(limits.max_cycles));
    }
    let mut lengths: Vec<usize> = found
        .cycles
        .iter()
        .map(|c| c.len())
        .filter(|&l| l >= 3)
        .collect();
    lengths.sort_unstable();
    lengths.dedup();
    Ok(lengths)
}

/// Census of undirected cycle-length residues (cycles of length >= 3).
pub fn undirected_residue_census(
    g: &UndirectedGraph,
    k: usize,
    limits: Limits,
) -> Result<crate::oracle::ResidueCensus> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    let d = bidirect(g);
    let found = enumerate_cycles(&d, Some(limits.max_cycles));
    if found.truncated {
        return Err(Error::CycleCapExceeded(limits.max_cycles));
    }
    let mut witnesses: Vec<Option<VertexCycle>> = vec![None; k];
    let mut counts = vec![0u64; k];
    for c in found.cycles {
        if c.len() < 3 {
            continue;
        }
        let j = c.len() % k;
        counts[j] += 1;
        if witnesses[j].is_none() {
            witnesses[j] = Some(c);
        }
    }
    // The bidirection walks each undirected cycle in both directions.
    debug_assert!(counts.iter().all(|c| c % 2 == 0));
    for c in counts.iter_mut() {
        *c /= 2;
    }
    Ok(crate::oracle::ResidueCensus {
        modulus: k,
        witnesses,
        counts: Some(counts),
        complete: true,
    })
}

/// Cycle and path statistics of an undirected graph: cycles of length at
/// least 3, longest path by vertex count.
pub fn undirected_cycle_stats(
    g: &UndirectedGraph,
    limits: Limits,
) -> Result<crate::oracle::CycleStats> {
    let lengths = undirected_cycle_lengths(g, limits)?;
    Ok(crate::oracle::CycleStats {
        circumference: lengths.iter().copied().max().unwrap_or(0),
        odd_circumference: lengths
            .iter()
            .rev()
            .find(|&&l| l % 2 == 1)
            .copied()
            .unwrap_or(1),
        longest_path_vertices: crate::oracle::longest_path_vertices(&bidirect(g))?,
    })
}

/// Colors an undirected graph with no cycle of length `r` mod `k` using
/// `k` colors, or `k + 1` when `r` is 2 (the bidirection's 2-cycles make
/// the acyclic route unusable there, and complete graphs show `k` colors
/// do not suffice).
pub fn color_undirected(
    g: &UndirectedGraph,
    k: usize,
    r: usize,
    limits: Limits,
) -> Result<UndirectedRun> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    let r = r % k;
    if let HypothesisVerdict::Violated { witness } = undirected_hypothesis(g, k, r, limits)? {
        return Err(Error::HypothesisViolated {
            modulus: k,
            residue: r,
            witness,
        });
    }

    let (colors, bound, method) = if k == 2 && r == 1 {
        // No odd cycle: bipartite.
        (bipartite_two_coloring(g)?, 2, "bipartite")
    } else if k == 2 && r == 0 {
        // No even cycle: every block is an edge or an odd cycle.
        (odd_block_three_coloring(g)?, 3, "odd-blocks")
    } else if r == 2 {
        // Exact search; the hypothesis guarantees k + 1 colors suffice.
        if g.n() > DEFAULT_ORACLE_BOUND {
            return Err(Error::OracleBound {
                n: g.n(),
                bound: DEFAULT_ORACLE_BOUND,
            });
        }
        let colors = proper_coloring_with(g, k + 1).ok_or_else(|| {
            Error::Defect(format!("no proper coloring with {} colors found", k + 1))
        })?;
        (colors, k + 1, "exact-fallback")
    } else {
        // Acyclic classes of the bidirection are independent sets: a
        // monochromatic edge would be a monochromatic 2-cycle.
        let run = acyclic_color(&bidirect(g), k, r, false, limits)?;
        (run.coloring.colors, k, "acyclic-ears")
    };

    if let Some(v) = check_proper(g, &colors) {
        return Err(Error::Defect(format!(
            "classes are not independent: edge ({}, {}) is monochromatic",
            v.u, v.v
        )));
    }
    Ok(UndirectedRun {
        k,
        r,
        bound,
        coloring: Coloring {
            kind: ColoringKind::Proper,
            colors,
        },
        method: method.to_string(),
    })
}

fn bipartite_two_coloring(g: &UndirectedGraph) -> Result<Vec<usize>> {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    for root in 0..n {
        if colors[root] != usize::MAX {
            continue;
        }
        colors[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if colors[w] == usize::MAX {
                    colors[w] = 1 - colors[v];
                    queue.push_back(w);
                } else if colors[w] == colors[v] {
                    return Err(Error::Defect(
                        "odd cycle found in a graph assumed bipartite".into(),
                    ));
                }
            }
        }
    }
    Ok(colors)
}

/// Biconnected components as edge lists, via lowpoint DFS with an edge
/// stack. Isolated vertices contribute no blocks.
fn biconnected_blocks(g: &UndirectedGraph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a UndirectedGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        edge_stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn explore(&mut self, v: usize, parent: Option<usize>) {
            self.disc[v] = self.time;
            self.low[v] = self.time;
            self.time += 1;
            let mut parent_skipped = false;
            for &w in self.g.neighbors(v) {
                if Some(w) == parent && !parent_skipped {
                    parent_skipped = true;
                    continue;
                }
                if self.disc[w] == usize::MAX {
                    self.edge_stack.push((v, w));
                    self.explore(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = self.edge_stack.pop() {
                            block.push(e);
                            if e == (v, w) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if self.disc[w] < self.disc[v] {
                    self.edge_stack.push((v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        disc: vec![usize::MAX; g.n()],
        low: vec![0; g.n()],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.n() {
        if dfs.disc[v] == usize::MAX {
            dfs.explore(v, None);
        }
    }
    dfs.blocks
}

/// 3-coloring of a graph with no even cycle: every block is an edge or an
/// odd cycle, so each block is colored around its anchor vertex with two
/// fresh colors.
fn odd_block_three_coloring(g: &UndirectedGraph) -> Result<Vec<usize>> {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut blocks = biconnected_blocks(g);
    let mut remaining: Vec<bool> = vec![true; blocks.len()];
    let mut left = blocks.len();

    while left > 0 {
        // A block anchored in already-colored territory, else a fresh root.
        let pick = (0..blocks.len())
            .filter(|&i| remaining[i])
            .find(|&i| blocks[i].iter().any(|&(u, v)| colors[u] != usize::MAX || colors[v] != usize::MAX))
            .or_else(|| (0..blocks.len()).find(|&i| remaining[i]))
            .unwrap();
        remaining[pick] = false;
        left -= 1;
        let block = std::mem::take(&mut blocks[pick]);
        color_block(&block, &mut colors)?;
    }
    for c in colors.iter_mut() {
        if *c == usize::MAX {
            *c = 0;
        }
    }
    Ok(colors)
}

fn color_block(block: &[(usize, usize)], colors: &mut [usize]) -> Result<()> {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let colored: Vec<usize> = verts
        .iter()
        .copied()
        .filter(|&v| colors[v] != usize::MAX)
        .collect();
    if colored.len() > 1 {
        return Err(Error::Defect(
            "block shares more than one vertex with colored territory".into(),
        ));
    }
    let anchor = colored.first().copied().unwrap_or_else(|| verts[0]);
    if colors[anchor] == usize::MAX {
        colors[anchor] = 0;
    }
    let anchor_color = colors[anchor];

    if block.len() == 1 {
        let (u, v) = block[0];
        let other = if u == anchor { v } else { u };
        colors[other] = if anchor_color == 0 { 1 } else { 0 };
        return Ok(());
    }

    // Cycle block: walk it from the anchor and alternate two colors that
    // differ from the anchor's.
    let mut adj: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    for &(u, v) in block {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    if adj.values().any(|l| l.len() != 2) || block.len() != verts.len() || block.len() % 2 == 0 {
        return Err(Error::Defect(
            "block of a graph without even cycles is neither an edge nor an odd cycle".into(),
        ));
    }
    let mut walk = vec![anchor];
    let mut prev = anchor;
    let mut cur = *adj[&anchor].iter().min().unwrap();
    while cur != anchor {
        walk.push(cur);
        let next = adj[&cur]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cycle block vertices have two neighbors");
        prev = cur;
        cur = next;
    }
    let (a, b) = match anchor_color {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    for (i, &v) in walk.iter().enumerate().skip(1) {
        colors[v] = if i % 2 == 1 { a } else { b };
    }
    Ok(())
}

/// Colors a strong digraph with one more color than its odd circumference:
/// cycle lengths then avoid 1 mod (l + 1), and the ear construction
/// applies.
pub fn color_by_odd_circumference(d: &Digraph, limits: Limits) -> Result<BoundReport> {
    require_strong_nontrivial(d)?;
    let stats = cycle_stats(d, limits.max_cycles)?;
    let l = stats.odd_circumference;
    let k = l + 1;
    assert_guaranteed_hypothesis(d, k, limits)?;
    let run = color_mod1(d, k, false, limits)?;
    Ok(BoundReport {
        theorem: TheoremTag::OddCirc,
        parameter_name: "odd_circumference".into(),
        parameter: l,
        bound: k,
        coloring: run.coloring,
        method: "mod1-ears".into(),
    })
}

/// Colors a strong digraph with as many colors as its circumference.
pub fn color_by_circumference(d: &Digraph, limits: Limits) -> Result<BoundReport> {
    require_strong_nontrivial(d)?;
    let stats = cycle_stats(d, limits.max_cycles)?;
    let k = stats.circumference;
    assert_guaranteed_hypothesis(d, k, limits)?;
    let run = color_mod1(d, k, false, limits)?;
    Ok(BoundReport {
        theorem: TheoremTag::Circ,
        parameter_name: "circumference".into(),
        parameter: k,
        bound: k,
        coloring: run.coloring,
        method: "mod1-ears".into(),
    })
}

/// Colors any digraph with as many colors as a longest path has vertices,
/// by adjoining a dominating bidirected hub and coloring the extension.
pub fn color_by_longest_path(d: &Digraph, limits: Limits) -> Result<BoundReport> {
    if d.n() == 0 {
        return Err(Error::TrivialInput);
    }
    let stats = cycle_stats(d, limits.max_cycles)?;
    let k = stats.longest_path_vertices;
    let n = d.n();
    let mut arcs: Vec<(usize, usize)> = d.arcs().collect();
    for v in 0..n {
        arcs.push((n, v));
        arcs.push((v, n));
    }
    let extended = Digraph::new(n + 1, &arcs)?;
    // A cycle of length 1 mod (k+1) in the extension would contain a path
    // with more than k vertices of the original digraph.
    assert_guaranteed_hypothesis(&extended, k + 1, limits)?;
    let run = color_mod1(&extended, k + 1, false, limits)?;
    let mut colors = run.coloring.colors;
    colors.truncate(n);
    let colors = compact_colors(&colors);
    let coloring = Coloring {
        kind: ColoringKind::Proper,
        colors,
    };
    if coloring.color_count() > k {
        return Err(Error::Defect(
            "hub restriction uses more colors than the longest path".into(),
        ));
    }
    if let Some(v) = check_proper(&underlying_graph(d), &coloring.colors) {
        return Err(Error::Defect(format!(
            "restricted coloring has monochromatic edge ({}, {})",
            v.u, v.v
        )));
    }
    Ok(BoundReport {
        theorem: TheoremTag::LongestPath,
        parameter_name: "longest_path_vertices".into(),
        parameter: k,
        bound: k,
        coloring,
        method: "mod1-ears-hub".into(),
    })
}

/// Relabels colors densely by first occurrence.
fn compact_colors(colors: &[usize]) -> Vec<usize> {
    let mut map: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut next = 0;
    colors
        .iter()
        .map(|&c| {
            *map.entry(c).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        })
        .collect()
}

/// Bound by odd circumference of an undirected graph: one more color than
/// the longest odd cycle length.
pub fn erdos_hajnal(g: &UndirectedGraph, limits: Limits) -> Result<BoundReport> {
    let lengths = undirected_cycle_lengths(g, limits)?;
    let l = lengths.iter().rev().find(|&&x| x % 2 == 1).copied().unwrap_or(1);
    let k = l + 1;
    // Odd cycles longer than l would be needed to realize 1 mod (l + 1).
    let run = promote_violation(color_undirected(g, k, 1, limits))?;
    Ok(BoundReport {
        theorem: TheoremTag::ErdosHajnal,
        parameter_name: "odd_circumference".into(),
        parameter: l,
        bound: k,
        coloring: run.coloring,
        method: run.method,
    })
}

/// Bound `k` for a graph with no cycle of length 1 mod `k`; the caller
/// supplies `k` and a violation is an ordinary error.
pub fn tuza(g: &UndirectedGraph, k: usize, limits: Limits) -> Result<BoundReport> {
    let run = color_undirected(g, k, 1, limits)?;
    Ok(BoundReport {
        theorem: TheoremTag::Tuza,
        parameter_name: "k".into(),
        parameter: k,
        bound: k,
        coloring: run.coloring,
        method: run.method,
    })
}

/// Bound by the number of distinct odd cycle lengths: with modulus
/// `2|L_o| + 2`, one of the odd residues must be unrealized.
pub fn gyarfas(g: &UndirectedGraph, limits: Limits) -> Result<BoundReport> {
    let lengths = undirected_cycle_lengths(g, limits)?;
    let odd_count = lengths.iter().filter(|&&x| x % 2 == 1).count();
    let modulus = 2 * odd_count + 2;
    let realized: std::collections::BTreeSet<usize> =
        lengths.iter().map(|&x| x % modulus).collect();
    let r = (0..=(2 * odd_count + 1))
        .step_by(2)
        .map(|i| i + 1)
        .find(|&r| !realized.contains(&r))
        .ok_or_else(|| {
            Error::Defect("all odd residues realized by fewer odd lengths".into())
        })?;
    let run = promote_violation(color_undirected(g, modulus, r, limits))?;
    Ok(BoundReport {
        theorem: TheoremTag::Gyarfas,
        parameter_name: "odd_cycle_lengths".into(),
        parameter: odd_count,
        bound: modulus,
        coloring: run.coloring,
        method: run.method,
    })
}

/// Bound by the number of distinct even cycle lengths: with modulus
/// `2|L_e| + 2`, one of the even residues must be unrealized. If the only
/// unrealized even residue is 2, the exact fallback pays one extra color;
/// the reported bound is `2|L_e| + 3` either way.
pub fn mihok_schiermeyer(g: &UndirectedGraph, limits: Limits) -> Result<BoundReport> {
    let lengths = undirected_cycle_lengths(g, limits)?;
    let even_count = lengths.iter().filter(|&&x| x % 2 == 0).count();
    let modulus = 2 * even_count + 2;
    let realized: std::collections::BTreeSet<usize> =
        lengths.iter().map(|&x| x % modulus).collect();
    // Prefer any even residue other than 2; fall back to 2 last.
    let candidates: Vec<usize> = (0..modulus)
        .step_by(2)
        .filter(|&r| r != 2)
        .chain([2].into_iter().filter(|_| modulus > 2))
        .collect();
    let r = candidates
        .into_iter()
        .find(|&r| !realized.contains(&r))
        .ok_or_else(|| {
            Error::Defect("all even residues realized by fewer even lengths".into())
        })?;
    let run = promote_violation(color_undirected(g, modulus, r, limits))?;
    Ok(BoundReport {
        theorem: TheoremTag::MihokSchiermeyer,
        parameter_name: "even_cycle_lengths".into(),
        parameter: even_count,
        bound: 2 * even_count + 3,
        coloring: run.coloring,
        method: run.method,
    })
}

fn require_strong_nontrivial(d: &Digraph) -> Result<()> {
    if d.n() < 2 {
        return Err(Error::TrivialInput);
    }
    if !crate::digraph::strongly_connected(d) {
        return Err(Error::NotStrong);
    }
    Ok(())
}

/// Checks a residue emptiness the surrounding argument guarantees; a
/// violation here is a defect, not a user error.
fn assert_guaranteed_hypothesis(d: &Digraph, k: usize, limits: Limits) -> Result<()> {
    if k < 2 {
        return Err(Error::Defect(format!(
            "derived modulus {k} is too small for the construction"
        )));
    }
    match hypothesis_holds(d, k, 1, limits.max_cycles)? {
        HypothesisVerdict::Holds => Ok(()),
        HypothesisVerdict::Violated { witness } => Err(Error::Defect(format!(
            "guaranteed-empty residue 1 mod {k} is realized by {:?}",
            witness.vertices()
        ))),
    }
}

/// For dispatches whose hypothesis the parameter computation guarantees.
fn promote_violation(result: Result<UndirectedRun>) -> Result<UndirectedRun> {
    result.map_err(|e| match e {
        Error::HypothesisViolated {
            modulus, residue, ..
        } => Error::Defect(format!(
            "guaranteed-empty residue {residue} mod {modulus} is realized"
        )),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::exact_chromatic;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn c5_mod2_r2_routes_through_odd_blocks() {
        // C5 has no even cycle; r = 2 reduces to 0 mod 2.
        let g = fixtures::cycle_graph(5);
        let run = color_undirected(&g, 2, 2, lim()).unwrap();
        assert_eq!(run.method, "odd-blocks");
        assert_eq!(run.bound, 3);
        assert!(run.coloring.color_count() <= 3);
    }

    #[test]
    fn petersen_mod4_r3_gets_four_colors() {
        let g = fixtures::petersen();
        let run = color_undirected(&g, 4, 3, lim()).unwrap();
        assert_eq!(run.bound, 4);
        assert!(run.coloring.color_count() <= 4);
        assert!(check_proper(&g, &run.coloring.colors).is_none());
    }

    #[test]
    fn complete_graph_mod_k_r1_needs_all_colors() {
        for k in [4usize, 5] {
            let g = fixtures::complete_graph(k);
            let run = color_undirected(&g, k, 1, lim()).unwrap();
            assert_eq!(run.coloring.color_count(), k);
        }
    }

    #[test]
    fn bipartite_route() {
        let g = fixtures::cycle_graph(6);
        let run = color_undirected(&g, 2, 1, lim()).unwrap();
        assert_eq!(run.method, "bipartite");
        assert_eq!(run.coloring.color_count(), 2);
    }

    #[test]
    fn r2_fallback_on_complete_graph() {
        // K5 has cycle lengths {3, 4, 5}: no cycle of length 2 mod 4.
        let g = fixtures::complete_graph(5);
        let run = color_undirected(&g, 4, 2, lim()).unwrap();
        assert_eq!(run.method, "exact-fallback");
        assert_eq!(run.bound, 5);
        assert_eq!(run.coloring.color_count(), 5);
    }

    #[test]
    fn undirected_hypothesis_ignores_bidirection_artifacts() {
        let g = fixtures::cycle_graph(5);
        // Residue 2 mod 3 is realized by the 5-cycle itself.
        assert!(!undirected_hypothesis(&g, 3, 2, lim()).unwrap().holds());
        // Residue 2 mod 4 is not: 2-cycles do not count.
        assert!(undirected_hypothesis(&g, 4, 2, lim()).unwrap().holds());
    }

    #[test]
    fn odd_circumference_of_directed_triangle() {
        let d = fixtures::directed_cycle(3);
        let report = color_by_odd_circumference(&d, lim()).unwrap();
        assert_eq!(report.parameter, 3);
        assert_eq!(report.bound, 4);
        assert!(report.coloring.color_count() <= 3);
    }

    #[test]
    fn odd_circumference_of_alternating_wheel_is_tight() {
        let d = fixtures::alternating_wheel(2);
        let report = color_by_odd_circumference(&d, lim()).unwrap();
        assert_eq!(report.parameter, 3);
        assert_eq!(report.bound, 4);
        assert_eq!(report.coloring.color_count(), 4);
    }

    #[test]
    fn odd_circumference_of_bidirected_even_cycle() {
        // All cycles even: parameter 1, bound 2.
        let d = fixtures::bidirected_cycle(4);
        let report = color_by_odd_circumference(&d, lim()).unwrap();
        assert_eq!(report.parameter, 1);
        assert_eq!(report.bound, 2);
        assert_eq!(report.coloring.color_count(), 2);
    }

    #[test]
    fn circumference_bounds() {
        let d = fixtures::directed_cycle(6);
        let report = color_by_circumference(&d, lim()).unwrap();
        assert_eq!(report.bound, 6);

        let k4 = fixtures::bidirected_complete(4);
        let report = color_by_circumference(&k4, lim()).unwrap();
        assert_eq!(report.bound, 4);
        assert_eq!(report.coloring.color_count(), 4);

        let t5 = fixtures::strong_tournament(5);
        let report = color_by_circumference(&t5, lim()).unwrap();
        assert_eq!(report.bound, 5);
        assert_eq!(report.coloring.color_count(), 5);
    }

    #[test]
    fn longest_path_bounds() {
        let dag = Digraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let report = color_by_longest_path(&dag, lim()).unwrap();
        assert_eq!(report.bound, 4);
        assert!(report.coloring.color_count() <= 4);

        let five = fixtures::directed_cycle(5);
        let report = color_by_longest_path(&five, lim()).unwrap();
        assert_eq!(report.bound, 5);

        let k3 = fixtures::bidirected_complete(3);
        let report = color_by_longest_path(&k3, lim()).unwrap();
        assert_eq!(report.bound, 3);
        assert_eq!(report.coloring.color_count(), 3);
    }

    #[test]
    fn longest_path_bound_on_tiny_inputs() {
        let single = Digraph::new(1, &[]).unwrap();
        let report = color_by_longest_path(&single, lim()).unwrap();
        assert_eq!(report.bound, 1);
        assert_eq!(report.coloring.colors, vec![0]);

        let arcless = Digraph::new(3, &[]).unwrap();
        let report = color_by_longest_path(&arcless, lim()).unwrap();
        assert_eq!(report.bound, 1);
        assert_eq!(report.coloring.color_count(), 1);
    }

    #[test]
    fn classical_bounds_dominate_exact_chromatic() {
        let g = fixtures::cycle_graph(5);
        let chi = exact_chromatic(&g).unwrap();
        let gy = gyarfas(&g, lim()).unwrap();
        assert_eq!(gy.parameter, 1);
        assert_eq!(gy.bound, 4);
        assert!(gy.bound >= chi);

        let k4 = fixtures::complete_graph(4);
        let eh = erdos_hajnal(&k4, lim()).unwrap();
        assert_eq!(eh.parameter, 3);
        assert_eq!(eh.bound, 4);
        assert_eq!(eh.coloring.color_count(), 4);

        let tree = fixtures::path_graph(5);
        let ms = mihok_schiermeyer(&tree, lim()).unwrap();
        assert_eq!(ms.parameter, 0);
        assert_eq!(ms.bound, 3);
        assert!(ms.coloring.color_count() <= 2);
    }

    #[test]
    fn tuza_accepts_valid_k_and_rejects_invalid() {
        let g = fixtures::cycle_graph(5);
        // Circumference 5: no cycle length is 1 mod 5.
        let report = tuza(&g, 5, lim()).unwrap();
        assert_eq!(report.bound, 5);
        assert!(report.coloring.color_count() <= 5);
        // 5 = 1 mod 4: k = 4 is invalid for C5.
        assert!(matches!(
            tuza(&g, 4, lim()),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn block_coloring_handles_shared_cut_vertices() {
        // Two triangles sharing vertex 2 plus a pendant edge.
        let g = UndirectedGraph::new(
            6,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)],
        )
        .unwrap();
        let run = color_undirected(&g, 2, 0, lim()).unwrap();
        assert!(run.coloring.color_count() <= 3);
        assert!(check_proper(&g, &run.coloring.colors).is_none());
    }

    #[test]
    fn disconnected_graphs_work() {
        // Two components: a triangle and an edge.
        let g = UndirectedGraph::new(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let run = color_undirected(&g, 3, 1, lim()).unwrap();
        assert!(check_proper(&g, &run.coloring.colors).is_none());
        assert!(run.coloring.color_count() <= 3);
    }
}
