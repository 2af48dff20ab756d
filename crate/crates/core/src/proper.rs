//! Proper k-coloring of a strong digraph none of whose cycle lengths is
//! congruent to 1 mod k.
//!
//! The construction grows an ear decomposition from a seed cycle while
//! maintaining a vertex potential with two invariants: no absorbed arc is
//! monochromatic, and no available ear has residue 1. Seeding uses the
//! first nonempty residue cycle class in [`residue_priority`] order (with
//! residue 1 skipped); each step absorbs an ear from the first nonempty
//! ear class in the same order and extends the potential arithmetically
//! along it. Both scans skip exactly the class that the invariants prove
//! empty, which is what keeps the invariants alive after each step.

use serde::Serialize;

use crate::coloring::{check_proper, Coloring, ColoringKind};
use crate::digraph::{strongly_connected, underlying_graph, Digraph, VertexCycle};
use crate::ear::{enumerate_ears, first_nonempty_class, modk, residue_priority, Ear, EarState};
use crate::error::{Error, Result};
use crate::oracle::{hypothesis_holds, residue_census, HypothesisVerdict};
use crate::Limits;

/// One ear absorption: the residue class it was chosen from and the ear.
#[derive(Clone, Debug)]
pub struct Mod1Step {
    pub class: usize,
    pub ear: Ear,
}

/// A completed run: the verified coloring plus the full decomposition
/// trace.
#[derive(Clone, Debug)]
pub struct ProperColoringRun {
    pub digraph: Digraph,
    pub k: usize,
    pub seed_residue: usize,
    pub seed_cycle: VertexCycle,
    pub steps: Vec<Mod1Step>,
    pub coloring: Coloring,
}

/// Stepwise driver for the construction; exposed so tests can check the
/// invariants between extensions.
pub struct Mod1Builder<'a> {
    state: EarState<'a>,
    priority: Vec<usize>,
    seed_residue: usize,
    steps: Vec<Mod1Step>,
    limits: Limits,
}

impl<'a> Mod1Builder<'a> {
    /// Runs the residue census and seeds the decomposition from the
    /// witness of the first nonempty cycle class.
    pub fn seed(host: &'a Digraph, k: usize, limits: Limits) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidModulus(k));
        }
        if host.n() < 2 {
            return Err(Error::TrivialInput);
        }
        if !strongly_connected(host) {
            return Err(Error::NotStrong);
        }
        let census = residue_census(host, k, limits.max_cycles)?;
        let priority = residue_priority(k, 1 % k);
        let seed_residue = priority.iter().copied().find(|&t| census.realized(t));
        let Some(seed_residue) = seed_residue else {
            // Every cycle sits in the skipped class: the hypothesis fails.
            return match census.witnesses[1 % k].clone() {
                Some(witness) => Err(Error::HypothesisViolated {
                    modulus: k,
                    residue: 1 % k,
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
        let state = EarState::seed(host, k, seed_cycle)?;
        Ok(Self {
            state,
            priority,
            seed_residue,
            steps: Vec::new(),
            limits,
        })
    }

    pub fn state(&self) -> &EarState<'a> {
        &self.state
    }

    pub fn seed_residue(&self) -> usize {
        self.seed_residue
    }

    pub fn steps(&self) -> &[Mod1Step] {
        &self.steps
    }

    pub fn is_complete(&self) -> bool {
        self.state.is_complete()
    }

    /// Absorbs one ear from the first nonempty class and extends the
    /// potential along it.
    pub fn step(&mut self) -> Result<&Mod1Step> {
        let ears = enumerate_ears(&self.state, self.limits.max_ear_paths)?;
        if ears.is_empty() {
            return Err(Error::Defect(
                "incomplete decomposition of a strong digraph has no ears".into(),
            ));
        }
        let residue_of = |e: &Ear| Some(self.state.ear_residue(e).expect("ears have colored ends"));
        let Some((class, ear)) = first_nonempty_class(&ears, &self.priority, residue_of) else {
            return Err(Error::Defect(
                "every available ear has the forbidden residue".into(),
            ));
        };
        let origin_color = self.state.color_of(ear.origin()).unwrap();
        let interior_colors: Vec<usize> = (1..ear.length())
            .map(|j| (origin_color + j) % self.state.modulus())
            .collect();
        let ear = ear.clone();
        self.state = self.state.extend(&ear, &interior_colors)?;
        self.steps.push(Mod1Step { class, ear });
        Ok(self.steps.last().unwrap())
    }

    /// Verifies and packages the finished coloring.
    pub fn finish(self) -> Result<ProperColoringRun> {
        if !self.is_complete() {
            return Err(Error::Precondition("decomposition is not complete".into()));
        }
        let host = self.state.host();
        let colors: Vec<usize> = (0..host.n())
            .map(|v| self.state.color_of(v).expect("complete state colors all"))
            .collect();
        if let Some(&c) = colors.iter().find(|&&c| c >= self.state.modulus()) {
            return Err(Error::Defect(format!("color {c} out of range")));
        }
        if let Some(v) = check_proper(&underlying_graph(host), &colors) {
            return Err(Error::Defect(format!(
                "construction produced a monochromatic arc between {} and {}",
                v.u, v.v
            )));
        }
        Ok(ProperColoringRun {
            digraph: host.clone(),
            k: self.state.modulus(),
            seed_residue: self.seed_residue,
            seed_cycle: self.state.seed_cycle().clone(),
            steps: self.steps,
            coloring: Coloring {
                kind: ColoringKind::Proper,
                colors,
            },
        })
    }
}

/// Builds a proper k-coloring of a strong digraph with no cycle of length
/// 1 mod k. With `check_hypothesis` the census verifies the hypothesis up
/// front and returns a witness on violation; without it, a false
/// hypothesis surfaces as a defect error mid-run or at final verification,
/// never as an invalid coloring.
pub fn color_mod1(
    d: &Digraph,
    k: usize,
    check_hypothesis: bool,
    limits: Limits,
) -> Result<ProperColoringRun> {
    if k < 2 {
        return Err(Error::InvalidModulus(k));
    }
    if d.n() < 2 {
        return Err(Error::TrivialInput);
    }
    if !strongly_connected(d) {
        return Err(Error::NotStrong);
    }
    if check_hypothesis {
        if let HypothesisVerdict::Violated { witness } =
            hypothesis_holds(d, k, 1, limits.max_cycles)?
        {
            return Err(Error::HypothesisViolated {
                modulus: k,
                residue: 1 % k,
                witness,
            });
        }
    }
    let mut builder = Mod1Builder::seed(d, k, limits)?;
    while !builder.is_complete() {
        builder.step()?;
    }
    builder.finish()
}

/// A violated invariant found by [`assert_ab`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AbViolation {
    /// An absorbed arc whose endpoints share a potential value.
    MonochromaticArc { u: usize, v: usize },
    /// An available ear whose residue is the forbidden 1.
    ForbiddenEarResidue { ear: Vec<usize> },
}

/// Re-derives all ears and checks the two construction invariants on the
/// current state: no absorbed arc is monochromatic and no ear has residue
/// 1. Returns the first violation, or `None` on a clean pass.
pub fn assert_ab(state: &EarState, max_ear_paths: usize) -> Result<Option<AbViolation>> {
    for (u, v) in state.arcs_in() {
        if state.color_of(u) == state.color_of(v) {
            return Ok(Some(AbViolation::MonochromaticArc { u, v }));
        }
    }
    let forbidden = 1 % state.modulus();
    for ear in enumerate_ears(state, max_ear_paths)? {
        if state.ear_residue(&ear)? == forbidden {
            return Ok(Some(AbViolation::ForbiddenEarResidue {
                ear: ear.vertices().to_vec(),
            }));
        }
    }
    Ok(None)
}

/// Class census of the currently available ears, for checking the
/// emptiness side conditions after a step.
pub fn ear_class_counts(state: &EarState, max_ear_paths: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0usize; state.modulus()];
    for ear in enumerate_ears(state, max_ear_paths)? {
        counts[state.ear_residue(&ear)?] += 1;
    }
    Ok(counts)
}

/// The residue class right above `class`, for checking the emptiness side
/// condition after a step.
pub fn next_class(class: usize, k: usize) -> usize {
    modk(class as i64 + 1, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn five_cycle_mod3_colors_along_the_cycle() {
        let d = fixtures::directed_cycle(5);
        let run = color_mod1(&d, 3, true, lim()).unwrap();
        assert_eq!(run.coloring.colors, vec![0, 1, 2, 0, 1]);
        assert_eq!(run.seed_residue, 2);
        assert!(run.steps.is_empty());
    }

    #[test]
    fn bidirected_k4_uses_exactly_four_colors() {
        let d = fixtures::bidirected_complete(4);
        let run = color_mod1(&d, 4, true, lim()).unwrap();
        assert_eq!(run.coloring.color_count(), 4);
        assert!(check_proper(&underlying_graph(&d), &run.coloring.colors).is_none());
    }

    #[test]
    fn strong_tournaments_need_all_colors() {
        for n in 3..=7 {
            let t = fixtures::strong_tournament(n);
            let run = color_mod1(&t, n, true, lim()).unwrap();
            assert_eq!(run.coloring.color_count(), n, "tournament on {n} vertices");
        }
    }

    #[test]
    fn bidirected_k3_mod3_trace() {
        // Seeded from a 3-cycle; the remaining unit ears all sit in class
        // 2, absorbed one by one without recoloring.
        let d = fixtures::bidirected_complete(3);
        let run = color_mod1(&d, 3, true, lim()).unwrap();
        assert_eq!(run.seed_residue, 0);
        assert_eq!(run.seed_cycle.len(), 3);
        assert_eq!(run.steps.len(), 3);
        assert!(run.steps.iter().all(|s| s.class == 2 && s.ear.length() == 1));
        assert_eq!(run.coloring.colors, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(color_mod1(&path, 3, true, lim()), Err(Error::NotStrong)));

        let single = Digraph::new(1, &[]).unwrap();
        assert!(matches!(
            color_mod1(&single, 2, true, lim()),
            Err(Error::TrivialInput)
        ));

        let d = fixtures::directed_cycle(3);
        assert!(matches!(
            color_mod1(&d, 1, true, lim()),
            Err(Error::InvalidModulus(1))
        ));
    }

    #[test]
    fn hypothesis_violation_carries_witness() {
        // A 3-cycle has length 1 mod 2.
        let d = fixtures::directed_cycle(3);
        match color_mod1(&d, 2, true, lim()) {
            Err(Error::HypothesisViolated { witness, .. }) => assert_eq!(witness.len(), 3),
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn skipping_the_check_never_yields_an_invalid_coloring() {
        let d = fixtures::directed_cycle(3);
        match color_mod1(&d, 2, false, lim()) {
            Ok(run) => {
                assert!(check_proper(&underlying_graph(&d), &run.coloring.colors).is_none())
            }
            Err(Error::Defect(_)) | Err(Error::HypothesisViolated { .. }) => {}
            Err(other) => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn assert_ab_passes_on_seed_and_catches_corruption() {
        let d = fixtures::bidirected_complete(3);
        let mut builder = Mod1Builder::seed(&d, 3, lim()).unwrap();
        assert_eq!(assert_ab(builder.state(), 10_000).unwrap(), None);

        // Corrupt one potential value: some invariant must break.
        let mut corrupted = builder.state().clone();
        let v = corrupted.members().next().unwrap();
        {
            // Rotating a single potential makes the seed arc monochromatic
            // or an ear residue land on 1.
            let old = corrupted.color_of(v).unwrap();
            set_color_for_test(&mut corrupted, v, (old + 1) % 3);
        }
        assert!(assert_ab(&corrupted, 10_000).unwrap().is_some());

        // A completed run passes with zero ears.
        while !builder.is_complete() {
            builder.step().unwrap();
        }
        assert_eq!(assert_ab(builder.state(), 10_000).unwrap(), None);
    }

    fn set_color_for_test(state: &mut EarState, v: usize, c: usize) {
        // Test-only backdoor: EarState fields are private to the crate.
        state.force_color(v, c);
    }

    #[test]
    fn after_each_step_the_next_class_up_is_empty() {
        let d = fixtures::bidirected_complete(4);
        let mut builder = Mod1Builder::seed(&d, 4, lim()).unwrap();
        while !builder.is_complete() {
            let counts_before = ear_class_counts(builder.state(), 10_000).unwrap();
            let step = builder.step().unwrap();
            let s_next = next_class(step.class, 4);
            assert_eq!(
                counts_before[s_next], 0,
                "class above the chosen one must be empty"
            );
            assert_eq!(assert_ab(builder.state(), 10_000).unwrap(), None);
        }
        builder.finish().unwrap();
    }
}
