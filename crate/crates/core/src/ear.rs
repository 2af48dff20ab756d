//! Ear decomposition machinery shared by both coloring constructions: the
//! growing subdigraph, exhaustive ear discovery, and the residue of an ear
//! against the partial vertex potential.
//!
//! An ear of the current subdigraph is either a path whose two ends lie in
//! it but whose interior does not, or a cycle meeting it in exactly one
//! vertex (origin = terminus). Single arcs between current vertices count
//! as length-1 ears only when the arc itself is not absorbed yet.

use std::collections::BTreeSet;

use crate::digraph::{Digraph, VertexCycle};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EarKind {
    /// Origin and terminus are distinct.
    Path,
    /// Origin equals terminus; the ear is a cycle meeting the subdigraph
    /// in exactly that vertex.
    Cycle,
}

/// A candidate ear, stored as its full vertex sequence from origin to
/// terminus. For a cycle ear the shared vertex appears at both ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ear {
    vertices: Vec<usize>,
}

impl Ear {
    /// Shape-checks the sequence: at least one arc, interior repeats
    /// nothing, ends repeat only each other (cycle ear).
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidGraph("ear needs at least one arc".into()));
        }
        let cyclic = vertices[0] == *vertices.last().unwrap();
        if cyclic && vertices.len() < 3 {
            return Err(Error::InvalidGraph("cycle ear needs length >= 2".into()));
        }
        let mut seen = BTreeSet::new();
        let distinct_prefix = if cyclic {
            &vertices[..vertices.len() - 1]
        } else {
            &vertices[..]
        };
        for &v in distinct_prefix {
            if !seen.insert(v) {
                return Err(Error::InvalidGraph(format!("ear repeats vertex {v}")));
            }
        }
        Ok(Self { vertices })
    }

    pub fn origin(&self) -> usize {
        self.vertices[0]
    }

    pub fn terminus(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn kind(&self) -> EarKind {
        if self.origin() == self.terminus() {
            EarKind::Cycle
        } else {
            EarKind::Path
        }
    }

    /// Number of arcs.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Vertices strictly between origin and terminus.
    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// The growing subdigraph of an ear decomposition plus the partial vertex
/// potential. A state is a value: `extend` returns a new one.
#[derive(Clone, Debug)]
pub struct EarState<'a> {
    host: &'a Digraph,
    k: usize,
    member: Vec<bool>,
    member_count: usize,
    arcs_in: BTreeSet<(usize, usize)>,
    color: Vec<Option<usize>>,
    seed: VertexCycle,
    log: Vec<Ear>,
}

impl<'a> EarState<'a> {
    /// Starts a decomposition from a seed cycle, assigning potentials
    /// `0, 1, 2, ...` (mod k) along it starting at its canonical rotation
    /// start.
    pub fn seed(host: &'a Digraph, k: usize, seed: VertexCycle) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidModulus(k));
        }
        let mut member = vec![false; host.n()];
        let mut color = vec![None; host.n()];
        let mut arcs_in = BTreeSet::new();
        let verts = seed.vertices();
        for (p, &v) in verts.iter().enumerate() {
            if v >= host.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: host.n(),
                });
            }
            member[v] = true;
            color[v] = Some(p % k);
        }
        for i in 0..verts.len() {
            let u = verts[i];
            let v = verts[(i + 1) % verts.len()];
            if !host.has_arc(u, v) {
                return Err(Error::InvalidGraph(format!(
                    "seed cycle uses missing arc ({u}, {v})"
                )));
            }
            arcs_in.insert((u, v));
        }
        Ok(Self {
            host,
            k,
            member_count: verts.len(),
            member,
            arcs_in,
            color,
            seed,
            log: Vec::new(),
        })
    }

    pub fn host(&self) -> &'a Digraph {
        self.host
    }

    pub fn modulus(&self) -> usize {
        self.k
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.member.len() && self.member[v]
    }

    pub fn member_count(&self) -> usize {
        self.member_count
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.member.len()).filter(move |&v| self.member[v])
    }

    pub fn has_arc_in(&self, u: usize, v: usize) -> bool {
        self.arcs_in.contains(&(u, v))
    }

    pub fn arcs_in(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs_in.iter().copied()
    }

    pub fn arc_in_count(&self) -> usize {
        self.arcs_in.len()
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.color.get(v).copied().flatten()
    }

    pub fn seed_cycle(&self) -> &VertexCycle {
        &self.seed
    }

    pub fn log(&self) -> &[Ear] {
        &self.log
    }

    /// True once every vertex and every arc of the host is absorbed.
    pub fn is_complete(&self) -> bool {
        self.member_count == self.host.n() && self.arcs_in.len() == self.host.arc_count()
    }

    /// The residue of an ear against the current potential:
    /// `(length - (color(terminus) - color(origin))) mod k`. For a cycle
    /// ear this is just the length mod k.
    pub fn ear_residue(&self, ear: &Ear) -> Result<usize> {
        let o = self
            .color_of(ear.origin())
            .ok_or(Error::Precondition(format!(
                "ear origin {} is outside the subdigraph",
                ear.origin()
            )))?;
        let t = self
            .color_of(ear.terminus())
            .ok_or(Error::Precondition(format!(
                "ear terminus {} is outside the subdigraph",
                ear.terminus()
            )))?;
        Ok(modk(ear.length() as i64 - (t as i64 - o as i64), self.k))
    }

    /// Absorbs an ear, assigning `interior_colors` to its interior in
    /// order. Checks the ear is valid for this state and that the grown
    /// subdigraph stays strongly connected.
    pub fn extend(&self, ear: &Ear, interior_colors: &[usize]) -> Result<Self> {
        if !self.contains(ear.origin()) || !self.contains(ear.terminus()) {
            return Err(Error::Precondition(
                "ear endpoints must belong to the subdigraph".into(),
            ));
        }
        if interior_colors.len() != ear.interior().len() {
            return Err(Error::Precondition(format!(
                "expected {} interior colors, got {}",
                ear.interior().len(),
                interior_colors.len()
            )));
        }
        if let Some(&c) = interior_colors.iter().find(|&&c| c >= self.k) {
            return Err(Error::Precondition(format!(
                "color {c} out of range for modulus {}",
                self.k
            )));
        }
        for &v in ear.interior() {
            if v >= self.host.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.host.n(),
                });
            }
            if self.contains(v) {
                return Err(Error::Precondition(format!(
                    "ear interior vertex {v} is already in the subdigraph"
                )));
            }
        }
        for w in ear.vertices().windows(2) {
            if !self.host.has_arc(w[0], w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "ear uses missing arc ({}, {})",
                    w[0], w[1]
                )));
            }
        }
        if ear.length() == 1 && self.has_arc_in(ear.origin(), ear.terminus()) {
            return Err(Error::Precondition(
                "single-arc ear already absorbed".into(),
            ));
        }

        let mut next = self.clone();
        for (&v, &c) in ear.interior().iter().zip(interior_colors) {
            next.member[v] = true;
            next.member_count += 1;
            next.color[v] = Some(c);
        }
        for w in ear.vertices().windows(2) {
            if !next.arcs_in.insert((w[0], w[1])) && ear.length() > 1 {
                return Err(Error::Defect(format!(
                    "ear arc ({}, {}) was already absorbed",
                    w[0], w[1]
                )));
            }
        }
        next.log.push(ear.clone());
        if !next.is_strong() {
            return Err(Error::Defect(
                "extension broke strong connectivity of the subdigraph".into(),
            ));
        }
        Ok(next)
    }

    /// Test-only backdoor to corrupt a potential value, for exercising the
    /// invariant checkers.
    #[cfg(test)]
    pub(crate) fn force_color(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
    }

    /// Strong connectivity of the current subdigraph (members and absorbed
    /// arcs only).
    pub fn is_strong(&self) -> bool {
        if self.member_count <= 1 {
            return true;
        }
        let start = self.members().next().unwrap();
        let mut fwd = vec![Vec::new(); self.member.len()];
        let mut bwd = vec![Vec::new(); self.member.len()];
        for &(u, v) in &self.arcs_in {
            fwd[u].push(v);
            bwd[v].push(u);
        }
        let count = |adj: &Vec<Vec<usize>>| {
            let mut seen = vec![false; self.member.len()];
            let mut stack = vec![start];
            seen[start] = true;
            let mut c = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        c += 1;
                        stack.push(w);
                    }
                }
            }
            c
        };
        count(&fwd) == self.member_count && count(&bwd) == self.member_count
    }

    /// The subdigraph as a standalone digraph on the host's vertex ids
    /// (non-members isolated). Used to replay the decomposition log.
    pub fn partial_digraph(&self) -> Digraph {
        let arcs: Vec<_> = self.arcs_in.iter().copied().collect();
        Digraph::new(self.host.n(), &arcs).expect("absorbed arcs form a valid digraph")
    }
}

pub(crate) fn modk(x: i64, k: usize) -> usize {
    x.rem_euclid(k as i64) as usize
}

/// Every ear of the current subdigraph, exactly once, in lexicographic
/// order of vertex sequences: new single arcs between members, plus every
/// simple detour through outside vertices (including cycle ears returning
/// to their origin). Errors out, rather than truncating, when more than
/// `max_paths` search nodes are expanded: class-emptiness decisions must
/// be exact.
pub fn enumerate_ears(state: &EarState, max_paths: usize) -> Result<Vec<Ear>> {
    let host = state.host();
    let mut ears = Vec::new();
    let mut expanded = 0usize;

    let mut path: Vec<usize> = Vec::new();
    for a in state.members() {
        path.clear();
        path.push(a);
        // Frames: next out-neighbor index per path position.
        let mut stack: Vec<usize> = vec![0];
        while !stack.is_empty() {
            let depth = stack.len() - 1;
            let v = path[depth];
            let pos = &mut stack[depth];
            if *pos < host.out_neighbors(v).len() {
                let w = host.out_neighbors(v)[*pos];
                *pos += 1;
                if state.contains(w) {
                    if depth == 0 {
                        // Single arc between members; only new arcs count.
                        if !state.has_arc_in(a, w) {
                            let mut verts = path.clone();
                            verts.push(w);
                            ears.push(Ear::new(verts)?);
                        }
                    } else {
                        // Detour terminates; w may equal a (cycle ear).
                        let mut verts = path.clone();
                        verts.push(w);
                        ears.push(Ear::new(verts)?);
                    }
                } else if !path.contains(&w) {
                    expanded += 1;
                    if expanded > max_paths {
                        return Err(Error::EarCapExceeded(max_paths));
                    }
                    path.push(w);
                    stack.push(0);
                }
            } else {
                stack.pop();
                path.pop();
            }
        }
        path.clear();
    }
    Ok(ears)
}

/// The residue scan order used throughout: all residues except `skipped`,
/// starting just below it and descending cyclically. The class right after
/// the chosen one in this order is therefore always the skipped (provably
/// empty) one or an already-rejected one.
pub fn residue_priority(k: usize, skipped: usize) -> Vec<usize> {
    (1..k).map(|d| modk(skipped as i64 - d as i64, k)).collect()
}

/// Scans `priority` in order and returns the first residue having an ear,
/// together with the lexicographically least such ear. `class_of` returns
/// an ear's class, or `None` to exclude it from the scan.
pub fn first_nonempty_class<'e>(
    ears: &'e [Ear],
    priority: &[usize],
    class_of: impl Fn(&Ear) -> Option<usize>,
) -> Option<(usize, &'e Ear)> {
    let classed: Vec<(usize, &Ear)> = ears
        .iter()
        .filter_map(|e| class_of(e).map(|c| (c, e)))
        .collect();
    for &s in priority {
        if let Some(&(_, ear)) = classed
            .iter()
            .filter(|&&(c, _)| c == s)
            .min_by_key(|&&(_, e)| e.vertices())
        {
            return Some((s, ear));
        }
    }
    None
}
