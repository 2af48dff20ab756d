//! Graph file parsing and serialization.
//!
//! Format: an optional directive line `mode directed|undirected` (directed
//! by default), a header `n m`, then `m` lines `u v` with 0-based vertex
//! ids. Lines starting with `#` are ignored.

use earcolor::digraph::{Digraph, UndirectedGraph};

#[derive(Clone, Debug)]
pub enum GraphInput {
    Directed(Digraph),
    Undirected(UndirectedGraph),
}

impl GraphInput {
    pub fn mode(&self) -> &'static str {
        match self {
            GraphInput::Directed(_) => "directed",
            GraphInput::Undirected(_) => "undirected",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            GraphInput::Directed(d) => d.n(),
            GraphInput::Undirected(g) => g.n(),
        }
    }

    pub fn pair_count(&self) -> usize {
        match self {
            GraphInput::Directed(d) => d.arc_count(),
            GraphInput::Undirected(g) => g.edge_count(),
        }
    }

    /// Canonical text form; parsing it back reproduces the pair multiset.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("mode {}\n", self.mode()));
        out.push_str(&format!("{} {}\n", self.n(), self.pair_count()));
        match self {
            GraphInput::Directed(d) => {
                for (u, v) in d.arcs() {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
            GraphInput::Undirected(g) => {
                for (u, v) in g.edges() {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }
}

pub fn parse_graph(text: &str) -> Result<GraphInput, String> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let mut first = lines.next().ok_or("empty graph file")?;
    let mut directed = true;
    if let Some(rest) = first.strip_prefix("mode ") {
        directed = match rest.trim() {
            "directed" => true,
            "undirected" => false,
            other => return Err(format!("unknown mode '{other}'")),
        };
        first = lines.next().ok_or("missing header line")?;
    }

    let header: Vec<&str> = first.split_whitespace().collect();
    if header.len() != 2 {
        return Err(format!("header must be 'n m', got '{first}'"));
    }
    let n: usize = header[0]
        .parse()
        .map_err(|_| format!("bad vertex count '{}'", header[0]))?;
    let m: usize = header[1]
        .parse()
        .map_err(|_| format!("bad pair count '{}'", header[1]))?;

    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(format!("expected 'u v', got '{line}'"));
        }
        let u: usize = toks[0].parse().map_err(|_| format!("bad vertex '{}'", toks[0]))?;
        let v: usize = toks[1].parse().map_err(|_| format!("bad vertex '{}'", toks[1]))?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(format!("header promises {m} pairs, found {}", pairs.len()));
    }
    if directed {
        Digraph::new(n, &pairs)
            .map(GraphInput::Directed)
            .map_err(|e| e.to_string())
    } else {
        UndirectedGraph::new(n, &pairs)
            .map(GraphInput::Undirected)
            .map_err(|e| e.to_string())
    }
}

/// Parses a coloring file of `vertex color` lines covering each vertex of
/// `0..n` exactly once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<usize>, String> {
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(format!("expected 'vertex color', got '{line}'"));
        }
        let v: usize = toks[0].parse().map_err(|_| format!("bad vertex '{}'", toks[0]))?;
        let c: usize = toks[1].parse().map_err(|_| format!("bad color '{}'", toks[1]))?;
        if v >= n {
            return Err(format!("vertex {v} out of range for {n} vertices"));
        }
        if colors[v].is_some() {
            return Err(format!("vertex {v} colored twice"));
        }
        colors[v] = Some(c);
    }
    colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or(format!("vertex {v} has no color")))
        .collect()
}
