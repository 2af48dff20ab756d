//! Acyclic k-coloring of a digraph none of whose cycle lengths is
//! congruent to r mod k: every color class induces an acyclic subdigraph.
//!
//! The construction again grows an ear decomposition with a vertex
//! potential, but additionally maintains a linear order on the absorbed
//! vertices and an alpha table over ordered vertex pairs. Invariants:
//! no absorbed arc pointing forward in the order is monochromatic, no
//! forward ear has residue 1, and for every ordered pair `(u, v)` no
//! backward ear from `v` to `u` has length `alpha(u, v)` mod k. Classes
//! then contain no forward arcs, so they are acyclic.
//!
//! Non-strong inputs reduce to their strong components: each nontrivial
//! component is colored independently with the same parameters, trivial
//! components get color 0, and the per-component orders concatenate in
//! reverse condensation order so that every monochromatic arc of the whole
//! digraph is backward.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::coloring::{check_acyclic, Coloring, ColoringKind};
use crate::digraph::{
    induced_subdigraph, strong_components, strongly_connected, Digraph, VertexCycle,
};
use crate::ear::{enumerate_ears, first_nonempty_class, modk, residue_priority, Ear, EarState};
use crate::error::{Error, Result};
use crate::oracle::{hypothesis_holds, residue_census, HypothesisVerdict};
use crate::Limits;

/// A total order over the absorbed vertices, supporting block insertion
/// next to an anchor. Inserting never reorders existing vertices.
#[derive(Clone, Debug)]
pub struct LinearOrder {
    seq: Vec<usize>,
    pos: Vec<Option<usize>>,
}

impl LinearOrder {
    pub fn new(host_n: usize, initial: &[usize]) -> Self {
        let mut order = Self {
            seq: initial.to_vec(),
            pos: vec![None; host_n],
        };
        order.reindex();
        order
    }

    fn reindex(&mut self) {
        for p in self.pos.iter_mut() {
            *p = None;
        }
        for (i, &v) in self.seq.iter().enumerate() {
            self.pos[v] = Some(i);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.pos.len() && self.pos[v].is_some()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(v).copied().flatten()
    }

    /// True iff `u` comes strictly before `v`. Both must be present.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.position(u).expect("vertex in order") < self.position(v).expect("vertex in order")
    }

    pub fn successor(&self, v: usize) -> Option<usize> {
        self.position(v)
            .and_then(|i| self.seq.get(i + 1))
            .copied()
    }

    pub fn predecessor(&self, v: usize) -> Option<usize> {
        match self.position(v) {
            Some(0) | None => None,
            Some(i) => Some(self.seq[i - 1]),
        }
    }

    /// Inserts the block immediately after `anchor`, preserving its order.
    pub fn insert_after(&mut self, anchor: usize, block: &[usize]) {
        let at = self.position(anchor).expect("anchor in order") + 1;
        self.seq.splice(at..at, block.iter().copied());
        self.reindex();
    }

    /// Inserts the block immediately before `anchor`. If the anchor is the
    /// minimum, the block lands at the very front.
    pub fn insert_before(&mut self, anchor: usize, block: &[usize]) {
        let at = self.position(anchor).expect("anchor in order");
        self.seq.splice(at..at, block.iter().copied());
        self.reindex();
    }

    /// Number of order members in the closed interval `[x, y]`.
    pub fn span_size(&self, x: usize, y: usize) -> usize {
        let px = self.position(x).expect("vertex in order");
        let py = self.position(y).expect("vertex in order");
        py - px + 1
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

/// Write-once residue table over ordered vertex pairs `(a, b)` with
/// `a` before `b`: no backward ear from `b` to `a` may have length
/// `alpha(a, b)` mod k.
#[derive(Clone, Debug, Default)]
pub struct AlphaTable {
    table: HashMap<(usize, usize), usize>,
}

impl AlphaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.table.get(&(a, b)).copied()
    }

    pub fn set(&mut self, a: usize, b: usize, value: usize) -> Result<()> {
        if self.table.insert((a, b), value).is_some() {
            return Err(Error::Defect(format!(
                "alpha entry ({a}, {b}) written twice"
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// Classification of an ear by the order of its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EarDirection {
    Forward,
    Backward,
    Cyclic,
}

pub fn classify_ear(order: &LinearOrder, ear: &Ear) -> Result<EarDirection> {
    let (o, t) = (ear.origin(), ear.terminus());
    if !order.contains(o) || !order.contains(t) {
        return Err(Error::Precondition(
            "ear endpoints must be in the order".into(),
        ));
    }
    Ok(if o == t {
        EarDirection::Cyclic
    } else if order.precedes(o, t) {
        EarDirection::Forward
    } else {
        EarDirection::Backward
    })
}

/// Which branch an extension step took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AcyclicStepKind {
    Forward,
    Cyclic,
    /// All ears were backward; the step served the chosen pair `(x, y)`
    /// whose stored alpha anchored the class scan.
    Backward {
        x: usize,
        y: usize,
        pair_alpha: usize,
    },
}

#[derive(Clone, Debug)]
pub struct AcyclicStep {
    pub kind: AcyclicStepKind,
    pub class: usize,
    pub ear: Ear,
}

/// The per-component result of the construction, in the component's own
/// vertex ids until remapped.
#[derive(Clone, Debug)]
pub struct StrongRun {
    pub k: usize,
    pub r: usize,
    pub seed_residue: usize,
    pub seed_cycle: VertexCycle,
    pub steps: Vec<AcyclicStep>,
    pub order: Vec<usize>,
    pub colors: Vec<usize>,
}

/// Stepwise driver over one strong nontrivial digraph; exposed so tests
/// can check the invariants between extensions.
pub struct AcyclicBuilder<'a> {
    state: EarState<'a>,
    order: LinearOrder,
    alpha: AlphaTable,
    r: usize,
    seed_residue: usize,
    steps: Vec<AcyclicStep>,
    limits: Limits,
}

impl<'a> AcyclicBuilder<'a> {
    pub fn seed(host: &'a Digraph, k: usize, r: usize, limits: Limits) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidModulus(k));
        }
        let r = r % k;
        if host.n() < 2 {
            return Err(Error::TrivialInput);
        }
        if !strongly_connected(host) {
            return Err(Error::NotStrong);
        }
        let census = residue_census(host, k, limits.max_cycles)?;
        let priority = residue_priority(k, r);
        let seed_residue = priority.iter().copied().find(|&t| census.realized(t));
        let Some(seed_residue) = seed_residue else {
            return match census.witnesses[r].clone() {
                Some(witness) => Err(Error::HypothesisViolated {
                    modulus: k,
                    residue: r,
                    witness,
                }),
                None => Err(Error::Defect(
                    "strong nontrivial digraph without any cycle".into(),
                )),
            };
        };
        let seed_cycle = census.witnesses[seed_residue]
            .clone()
            .expect("realized residue carries a witness");
        let order = LinearOrder::new(host.n(), seed_cycle.vertices());
        let state = EarState::seed(host, k, seed_cycle)?;
        let mut alpha = AlphaTable::new();
        let verts = state.seed_cycle().vertices().to_vec();
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                alpha.set(verts[i], verts[j], modk(i as i64 - j as i64 + r as i64, k))?;
            }
        }
        Ok(Self {
            state,
            order,
            alpha,
            r,
            seed_residue,
            steps: Vec::new(),
            limits,
        })
    }

    pub fn state(&self) -> &EarState<'a> {
        &self.state
    }

    pub fn order(&self) -> &LinearOrder {
        &self.order
    }

    pub fn alpha(&self) -> &AlphaTable {
        &self.alpha
    }

    pub fn residue(&self) -> usize {
        self.r
    }

    pub fn seed_residue(&self) -> usize {
        self.seed_residue
    }

    pub fn steps(&self) -> &[AcyclicStep] {
        &self.steps
    }

    pub fn is_complete(&self) -> bool {
        self.state.is_complete()
    }

    pub fn step(&mut self) -> Result<&AcyclicStep> {
        let k = self.state.modulus();
        let ears = enumerate_ears(&self.state, self.limits.max_ear_paths)?;
        if ears.is_empty() {
            return Err(Error::Defect(
                "incomplete decomposition of a strong digraph has no ears".into(),
            ));
        }
        let mut has_forward_or_cyclic = false;
        for e in &ears {
            if classify_ear(&self.order, e)? != EarDirection::Backward {
                has_forward_or_cyclic = true;
                break;
            }
        }

        if has_forward_or_cyclic {
            self.forward_or_cyclic_step(&ears, k)
        } else {
            self.backward_step(&ears, k)
        }?;
        Ok(self.steps.last().unwrap())
    }

    fn forward_or_cyclic_step(&mut self, ears: &[Ear], k: usize) -> Result<()> {
        let dir_of =
            |e: &Ear| classify_ear(&self.order, e).expect("enumerated ears have ordered ends");
        let residue_of = |e: &Ear| self.state.ear_residue(e).expect("ears have colored ends");

        // Forward classes are scanned first (skipping residue 1), then
        // cyclic ones (skipping r).
        let forward_pick = first_nonempty_class(ears, &residue_priority(k, 1 % k), |e| {
            (dir_of(e) == EarDirection::Forward).then(|| residue_of(e))
        });
        let (kind, class, ear) = match forward_pick {
            Some((s, ear)) => (AcyclicStepKind::Forward, s, ear),
            None => {
                let cyclic_pick = first_nonempty_class(ears, &residue_priority(k, self.r), |e| {
                    (dir_of(e) == EarDirection::Cyclic).then(|| residue_of(e))
                });
                match cyclic_pick {
                    Some((s, ear)) => (AcyclicStepKind::Cyclic, s, ear),
                    None => {
                        return Err(Error::Defect(
                            "every forward or cyclic ear has a forbidden residue".into(),
                        ))
                    }
                }
            }
        };
        let ear = ear.clone();

        let u0 = ear.origin();
        let uh = ear.terminus();
        let h = ear.length();
        let origin_color = self.state.color_of(u0).unwrap();
        let interior_colors: Vec<usize> =
            (1..h).map(|j| (origin_color + j) % k).collect();
        let old_members: Vec<usize> = self.state.members().collect();
        self.state = self.state.extend(&ear, &interior_colors)?;
        self.order.insert_after(u0, ear.interior());

        // Alpha values for every pair gaining a new vertex. Position map
        // along the ear; for a cyclic ear the shared endpoint keeps
        // position 0.
        let mut pos_on_ear: HashMap<usize, usize> = HashMap::new();
        pos_on_ear.insert(u0, 0);
        for (idx, &w) in ear.vertices().iter().enumerate().skip(1) {
            if w != u0 {
                pos_on_ear.insert(w, idx);
            }
        }
        let color = |v: usize| self.state.color_of(v).unwrap() as i64;
        for &w in ear.interior() {
            for &z in &old_members {
                let (a, b) = if self.order.precedes(w, z) { (w, z) } else { (z, w) };
                let value = if let (Some(&p), Some(&q)) = (pos_on_ear.get(&a), pos_on_ear.get(&b)) {
                    // Both ends on the ear: forbid closing it into a cycle
                    // of residue r.
                    if p >= q {
                        return Err(Error::Defect(
                            "order along the ear disagrees with path positions".into(),
                        ));
                    }
                    modk(self.r as i64 - (q - p) as i64, k)
                } else if a == w {
                    let p = pos_on_ear[&a];
                    if self.order.precedes(uh, b) {
                        // Route a hypothetical return ear through the rest
                        // of this ear to the terminus.
                        let base = self.alpha.get(uh, b).ok_or_else(|| {
                            Error::Defect(format!("missing alpha ({uh}, {b})"))
                        })?;
                        modk(base as i64 - (h - p) as i64, k)
                    } else {
                        modk(color(a) - color(b) + 1, k)
                    }
                } else {
                    // Old vertex before a new one: route through the origin.
                    let base = self.alpha.get(a, u0).ok_or_else(|| {
                        Error::Defect(format!("missing alpha ({a}, {u0})"))
                    })?;
                    modk(base as i64 - color(b) + color(u0), k)
                };
                self.alpha.set(a, b, value)?;
            }
        }
        let interior = ear.interior();
        for i in 0..interior.len() {
            for j in (i + 1)..interior.len() {
                let value = modk(self.r as i64 - (j - i) as i64, k);
                self.alpha.set(interior[i], interior[j], value)?;
            }
        }
        self.steps.push(AcyclicStep { kind, class, ear });
        Ok(())
    }

    fn backward_step(&mut self, ears: &[Ear], k: usize) -> Result<()> {
        // Choose the backward pair spanning the fewest order positions;
        // ties break to the earliest endpoints.
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for e in ears {
            pairs.insert((e.terminus(), e.origin()));
        }
        let (x, y) = pairs
            .into_iter()
            .min_by_key(|&(x, y)| {
                (
                    self.order.span_size(x, y),
                    self.order.position(x).unwrap(),
                    self.order.position(y).unwrap(),
                )
            })
            .expect("backward step requires at least one ear");
        let pair_alpha = self
            .alpha
            .get(x, y)
            .ok_or_else(|| Error::Defect(format!("missing alpha ({x}, {y})")))?;

        let pick = first_nonempty_class(ears, &residue_priority(k, pair_alpha), |e| {
            (e.origin() == y && e.terminus() == x).then(|| e.length() % k)
        });
        let Some((class, ear)) = pick else {
            return Err(Error::Defect(
                "every return ear for the chosen pair has the forbidden residue".into(),
            ));
        };
        let ear = ear.clone();

        let h = ear.length();
        // Interior colors descend from the terminus potential: the vertex
        // at sequence position idx is the (h - idx)-th before x.
        let x_color = self.state.color_of(x).unwrap() as i64;
        let interior_colors: Vec<usize> = (1..h)
            .map(|idx| modk(x_color - (h - idx) as i64, k))
            .collect();
        let old_members: Vec<usize> = self.state.members().collect();
        self.state = self.state.extend(&ear, &interior_colors)?;
        self.order.insert_before(x, ear.interior());

        let on_ear: BTreeSet<usize> = ear.vertices().iter().copied().collect();
        let color = |v: usize| self.state.color_of(v).unwrap() as i64;
        for &w in ear.interior() {
            for &z in &old_members {
                let (a, b) = if self.order.precedes(w, z) { (w, z) } else { (z, w) };
                let value = if b == y {
                    // Return ears to the new vertex extend into return ears
                    // for the served pair.
                    modk(pair_alpha as i64 - color(x) + color(a), k)
                } else if on_ear.contains(&a) && on_ear.contains(&b) {
                    // Both on the ear: forbid closing a cycle of residue r.
                    modk(color(a) - color(b) + self.r as i64, k)
                } else if a == w {
                    // New vertex before an old off-ear vertex (x precedes b).
                    let base = self.alpha.get(x, b).ok_or_else(|| {
                        Error::Defect(format!("missing alpha ({x}, {b})"))
                    })?;
                    modk(base as i64 - color(x) + color(a), k)
                } else {
                    // Old vertex before a new one: route through the origin y.
                    let base = self.alpha.get(a, y).ok_or_else(|| {
                        Error::Defect(format!("missing alpha ({a}, {y})"))
                    })?;
                    modk(base as i64 - h as i64 + color(x) - color(b), k)
                };
                self.alpha.set(a, b, value)?;
            }
        }
        let interior = ear.interior();
        for i in 0..interior.len() {
            for j in (i + 1)..interior.len() {
                let value = modk(color(interior[i]) - color(interior[j]) + self.r as i64, k);
                self.alpha.set(interior[i], interior[j], value)?;
            }
        }
        self.steps.push(AcyclicStep {
            kind: AcyclicStepKind::Backward { x, y, pair_alpha },
            class,
            ear,
        });
        Ok(())
    }

    /// Verifies the finished component coloring and packages the run.
    pub fn finish(self) -> Result<StrongRun> {
        if !self.is_complete() {
            return Err(Error::Precondition("decomposition is not complete".into()));
        }
        let host = self.state.host();
        let colors: Vec<usize> = (0..host.n())
            .map(|v| self.state.color_of(v).expect("complete state colors all"))
            .collect();
        // Monochromatic arcs must all point backward in the final order.
        for (u, v) in host.arcs() {
            if colors[u] == colors[v] && self.order.precedes(u, v) {
                return Err(Error::Defect(format!(
                    "monochromatic forward arc ({u}, {v}) survived"
                )));
            }
        }
        if let Some(violation) = check_acyclic(host, &colors) {
            return Err(Error::Defect(format!(
                "class {} induces the cycle {:?}",
                violation.color, violation.cycle
            )));
        }
        Ok(StrongRun {
            k: self.state.modulus(),
            r: self.r,
            seed_residue: self.seed_residue,
            seed_cycle: self.state.seed_cycle().clone(),
            steps: self.steps,
            order: self.order.as_slice().to_vec(),
            colors,
        })
    }
}

/// Trace of one strong component inside a full run, in host vertex ids.
#[derive(Clone, Debug)]
pub struct ComponentTrace {
    pub vertices: Vec<usize>,
    /// `None` for trivial (single-vertex) components.
    pub run: Option<StrongRun>,
}

/// A completed acyclic coloring run over an arbitrary digraph.
#[derive(Clone, Debug)]
pub struct AcyclicColoringRun {
    pub digraph: Digraph,
    pub k: usize,
    pub r: usize,
    pub coloring: Coloring,
    /// Global order in which every monochromatic arc points backward:
    /// components in reverse condensation order, each ordered by its run.
    pub final_order: Vec<usize>,
    pub components: Vec<ComponentTrace>,
}

fn remap_cycle(cycle: &VertexCycle, ids: &[usize]) -> VertexCycle {
    VertexCycle::canonical(cycle.vertices().iter().map(|&v| ids[v]).collect())
}

fn remap_run(run: StrongRun, ids: &[usize]) -> StrongRun {
    StrongRun {
        k: run.k,
        r: run.r,
        seed_residue: run.seed_residue,
        seed_cycle: remap_cycle(&run.seed_cycle, ids),
        steps: run
            .steps
            .into_iter()
            .map(|s| AcyclicStep {
                kind: match s.kind {
                    AcyclicStepKind::Backward { x, y, pair_alpha } => AcyclicStepKind::Backward {
                        x: ids[x],
                        y: ids[y],
                        pair_alpha,
                    },
                    other => other,
                },
                class: s.class,
                ear: Ear::new(s.ear.vertices().iter().map(|&v| ids[v]).collect())
                    .expect("remapping preserves ear shape"),
            })
            .collect(),
        order: run.order.into_iter().map(|v| ids[v]).collect(),
        colors: run.colors,
    }
}

/// Builds an acyclic k-coloring of `d` under the hypothesis that no cycle
/// has length `r` mod k. `r` is reduced mod k. The input need not be
/// strong: strong components are colored independently and combined.
pub fn acyclic_color(
    d: &Digraph,
    k: usize,
    r: usize,
    check_hypothesis: bool,
    limits: Limits,
) -> Result<AcyclicColoringRun> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    let r = r % k;
    if check_hypothesis {
        if let HypothesisVerdict::Violated { witness } = hypothesis_holds(d, k, r, limits.max_cycles)? {
            return Err(Error::HypothesisViolated {
                modulus: k,
                residue: r,
                witness,
            });
        }
    }
    let mut colors = vec![0usize; d.n()];
    let mut components = Vec::new();
    for comp in strong_components(d) {
        if comp.len() == 1 {
            components.push(ComponentTrace {
                vertices: comp,
                run: None,
            });
            continue;
        }
        let sub = induced_subdigraph(d, &comp)?;
        let run = color_strong_component(&sub.digraph, k, r, limits).map_err(|e| match e {
            Error::HypothesisViolated {
                modulus,
                residue,
                witness,
            } => Error::HypothesisViolated {
                modulus,
                residue,
                witness: remap_cycle(&witness, &sub.original_ids),
            },
            other => other,
        })?;
        let run = remap_run(run, &sub.original_ids);
        for (local, &original) in sub.original_ids.iter().enumerate() {
            colors[original] = run.colors[local];
        }
        components.push(ComponentTrace {
            vertices: comp,
            run: Some(run),
        });
    }

    let mut final_order = Vec::with_capacity(d.n());
    for trace in components.iter().rev() {
        match &trace.run {
            Some(run) => final_order.extend_from_slice(&run.order),
            None => final_order.extend_from_slice(&trace.vertices),
        }
    }

    if let Some(violation) = check_acyclic(d, &colors) {
        return Err(Error::Defect(format!(
            "class {} induces the cycle {:?}",
            violation.color, violation.cycle
        )));
    }
    Ok(AcyclicColoringRun {
        digraph: d.clone(),
        k,
        r,
        coloring: Coloring {
            kind: ColoringKind::Acyclic,
            colors,
        },
        final_order,
        components,
    })
}

fn color_strong_component(host: &Digraph, k: usize, r: usize, limits: Limits) -> Result<StrongRun> {
    let mut builder = AcyclicBuilder::seed(host, k, r, limits)?;
    while !builder.is_complete() {
        builder.step()?;
    }
    builder.finish()
}

/// A violated invariant found by [`assert_abc`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AbcViolation {
    /// An absorbed forward arc whose endpoints share a potential value.
    MonochromaticForwardArc { u: usize, v: usize },
    /// A forward ear with the forbidden residue 1.
    ForwardEarResidueOne { ear: Vec<usize> },
    /// An ordered pair without an alpha entry despite a backward ear.
    MissingAlpha { u: usize, v: usize },
    /// A backward ear whose length hits the pair's alpha value.
    BackwardEarHitsAlpha { ear: Vec<usize>, alpha: usize },
}

/// Re-derives all ears and checks the three construction invariants.
/// Returns the first violation, or `None` on a clean pass.
pub fn assert_abc(
    state: &EarState,
    order: &LinearOrder,
    alpha: &AlphaTable,
    max_ear_paths: usize,
) -> Result<Option<AbcViolation>> {
    let k = state.modulus();
    for (u, v) in state.arcs_in() {
        if order.precedes(u, v) && state.color_of(u) == state.color_of(v) {
            return Ok(Some(AbcViolation::MonochromaticForwardArc { u, v }));
        }
    }
    for ear in enumerate_ears(state, max_ear_paths)? {
        match classify_ear(order, &ear)? {
            EarDirection::Forward => {
                if state.ear_residue(&ear)? == 1 % k {
                    return Ok(Some(AbcViolation::ForwardEarResidueOne {
                        ear: ear.vertices().to_vec(),
                    }));
                }
            }
            EarDirection::Backward => {
                let (u, v) = (ear.terminus(), ear.origin());
                match alpha.get(u, v) {
                    None => return Ok(Some(AbcViolation::MissingAlpha { u, v })),
                    Some(a) => {
                        if ear.length() % k == a {
                            return Ok(Some(AbcViolation::BackwardEarHitsAlpha {
                                ear: ear.vertices().to_vec(),
                                alpha: a,
                            }));
                        }
                    }
                }
            }
            EarDirection::Cyclic => {}
        }
    }
    Ok(None)
}

/// Per-direction ear class censuses, used by tests to check the emptiness
/// side conditions after each step.
pub struct DirectionalClassCounts {
    pub forward: Vec<usize>,
    pub cyclic: Vec<usize>,
}

pub fn directional_class_counts(
    state: &EarState,
    order: &LinearOrder,
    max_ear_paths: usize,
) -> Result<DirectionalClassCounts> {
    let k = state.modulus();
    let mut counts = DirectionalClassCounts {
        forward: vec![0; k],
        cyclic: vec![0; k],
    };
    for ear in enumerate_ears(state, max_ear_paths)? {
        match classify_ear(order, &ear)? {
            EarDirection::Forward => counts.forward[state.ear_residue(&ear)?] += 1,
            EarDirection::Cyclic => counts.cyclic[state.ear_residue(&ear)?] += 1,
            EarDirection::Backward => {}
        }
    }
    Ok(counts)
}

/// Length-residue census of backward ears from `y` to `x`.
pub fn backward_class_counts(
    state: &EarState,
    x: usize,
    y: usize,
    max_ear_paths: usize,
) -> Result<Vec<usize>> {
    let k = state.modulus();
    let mut counts = vec![0; k];
    for ear in enumerate_ears(state, max_ear_paths)? {
        if ear.origin() == y && ear.terminus() == x {
            counts[ear.length() % k] += 1;
        }
    }
    Ok(counts)
}
