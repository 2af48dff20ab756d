//! Vertex colorings and the independent checkers used to validate them.
//! Every coloring the constructions emit is re-verified through these
//! functions; verdicts are never copied from the algorithm that produced
//! the coloring.

use serde::Serialize;

use crate::digraph::{induced_subdigraph, Digraph, UndirectedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringKind {
    Proper,
    Acyclic,
}

/// A vertex-to-color map with its intended interpretation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub kind: ColoringKind,
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn color_count(&self) -> usize {
        let mut distinct: Vec<usize> = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len()
    }

    /// Vertices grouped by color, indexed `0..=max_color`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let max = self.colors.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); max];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// An edge whose endpoints share a color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperViolation {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

/// First monochromatic edge in lexicographic order, if any.
/// `colors.len()` must equal `g.n()`.
pub fn check_proper(g: &UndirectedGraph, colors: &[usize]) -> Option<ProperViolation> {
    assert_eq!(colors.len(), g.n(), "coloring must cover every vertex");
    g.edges()
        .find(|&(u, v)| colors[u] == colors[v])
        .map(|(u, v)| ProperViolation {
            u,
            v,
            color: colors[u],
        })
}

/// A color class that induces a directed cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicViolation {
    pub color: usize,
    /// A cycle inside the class, in host vertex ids.
    pub cycle: Vec<usize>,
}

/// First color class (by color) inducing a cycle, if any, with a witness
/// cycle. `colors.len()` must equal `d.n()`.
pub fn check_acyclic(d: &Digraph, colors: &[usize]) -> Option<AcyclicViolation> {
    assert_eq!(colors.len(), d.n(), "coloring must cover every vertex");
    let max = colors.iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..max {
        let members: Vec<usize> = (0..d.n()).filter(|&v| colors[v] == c).collect();
        if members.len() < 2 {
            continue;
        }
        let sub = induced_subdigraph(d, &members).expect("class members are in range");
        if let Some(local_cycle) = find_cycle(&sub.digraph) {
            let cycle = local_cycle.into_iter().map(|v| sub.original_id(v)).collect();
            return Some(AcyclicViolation { color: c, cycle });
        }
    }
    None
}

/// Some directed cycle of `d`, or `None` if acyclic. DFS back-arc
/// extraction; deterministic.
fn find_cycle(d: &Digraph) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        White,
        Gray,
        Black,
    }
    let n = d.n();
    let mut mark = vec![Mark::White; n];
    let mut path: Vec<usize> = Vec::new();
    // Frames: (vertex, next neighbor index).
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if mark[root] != Mark::White {
            continue;
        }
        mark[root] = Mark::Gray;
        path.push(root);
        stack.push((root, 0));
        while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
            if *pos < d.out_neighbors(v).len() {
                let w = d.out_neighbors(v)[*pos];
                *pos += 1;
                match mark[w] {
                    Mark::Gray => {
                        let at = path.iter().position(|&x| x == w).unwrap();
                        return Some(path[at..].to_vec());
                    }
                    Mark::White => {
                        mark[w] = Mark::Gray;
                        path.push(w);
                        stack.push((w, 0));
                    }
                    Mark::Black => {}
                }
            } else {
                mark[v] = Mark::Black;
                path.pop();
                stack.pop();
            }
        }
    }
    None
}
