//! Dense real statevector simulation of the Grover iteration: prepare
//! the uniform state, apply the selective sign-flip and the inversion
//! about the average, and read success probability from amplitudes.
//!
//! The dynamics never leave the real span of the uniform and target
//! states, so amplitudes are real.

use std::collections::BTreeSet;

use crate::error::Error;

/// Refuse dense states above this size.
pub const MAX_DENSE_SIZE: u64 = 1 << 24;

/// A database of `size` entries with a set of 1-based target indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchSpec {
    size: usize,
    targets: BTreeSet<usize>,
}

impl SearchSpec {
    pub fn new(size: usize, targets: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        if size == 0 {
            return Err(Error::EmptyDatabase);
        }
        if size as u64 > MAX_DENSE_SIZE {
            return Err(Error::StateTooLarge(size as u64));
        }
        let mut set = BTreeSet::new();
        for index in targets {
            if index == 0 || index > size {
                return Err(Error::TargetOutOfRange { index, size });
            }
            if !set.insert(index) {
                return Err(Error::DuplicateTarget(index));
            }
        }
        Ok(SearchSpec { size, targets: set })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Target indices, 1-based.
    pub fn targets(&self) -> &BTreeSet<usize> {
        &self.targets
    }

    pub fn target_count(&self) -> usize {
        self.targets.len()
    }
}

/// Dense real amplitude vector.
#[derive(Clone, PartialEq, Debug)]
pub struct StateVector {
    amplitudes: Vec<f64>,
}

impl StateVector {
    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }
}

/// One row of the per-step trace: the state's split between the target
/// and non-target subspaces after `step` iterations.
#[derive(Clone, PartialEq, Debug)]
pub struct TraceStep {
    pub step: u64,
    pub success_probability: f64,
    pub target_amplitude: f64,
    pub nontarget_amplitude: f64,
}

/// Per-step records of a run; step 0 is the initial state.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct IterationTrace {
    pub steps: Vec<TraceStep>,
}

/// The uniform superposition: every amplitude 1/√N.
pub fn uniform_state(size: usize) -> Result<StateVector, Error> {
    if size == 0 {
        return Err(Error::EmptyDatabase);
    }
    if size as u64 > MAX_DENSE_SIZE {
        return Err(Error::StateTooLarge(size as u64));
    }
    let amp = 1.0 / (size as f64).sqrt();
    Ok(StateVector { amplitudes: vec![amp; size] })
}

fn check_dims(state: &StateVector, spec: &SearchSpec) -> Result<(), Error> {
    if state.len() != spec.size() {
        return Err(Error::DimensionMismatch { state: state.len(), size: spec.size() });
    }
    Ok(())
}

/// Selective sign flip: negates the amplitude at every target index.
pub fn apply_oracle(state: &StateVector, spec: &SearchSpec) -> Result<StateVector, Error> {
    check_dims(state, spec)?;
    let mut amplitudes = state.amplitudes.clone();
    for &index in spec.targets() {
        amplitudes[index - 1] = -amplitudes[index - 1];
    }
    Ok(StateVector { amplitudes })
}

/// Inversion about the average: each amplitude v becomes 2m - v where m
/// is the mean amplitude. O(N); never materialized as a matrix.
pub fn apply_diffusion(state: &StateVector) -> StateVector {
    let mean = state.amplitudes.iter().sum::<f64>() / state.len() as f64;
    let amplitudes = state.amplitudes.iter().map(|v| 2.0 * mean - v).collect();
    StateVector { amplitudes }
}

/// One Grover iteration: oracle first, then diffusion.
pub fn grover_step(state: &StateVector, spec: &SearchSpec) -> Result<StateVector, Error> {
    Ok(apply_diffusion(&apply_oracle(state, spec)?))
}

/// Probability of measuring a target: sum of squared amplitudes over
/// target indices.
pub fn success_probability(state: &StateVector, spec: &SearchSpec) -> Result<f64, Error> {
    check_dims(state, spec)?;
    // fold from +0.0: an empty target set must report 0.0, not Sum's -0.0
    Ok(spec.targets().iter().fold(0.0, |acc, &i| acc + state.amplitudes[i - 1].powi(2)))
}

fn trace_step(step: u64, state: &StateVector, spec: &SearchSpec) -> TraceStep {
    let p = success_probability(state, spec).expect("dimensions checked by caller");
    let target_amplitude = spec
        .targets()
        .iter()
        .next()
        .map(|&i| state.amplitudes[i - 1] * (spec.target_count() as f64).sqrt())
        .unwrap_or(0.0);
    let nontarget_count = spec.size() - spec.target_count();
    let nontarget_amplitude = (1..=spec.size())
        .find(|i| !spec.targets().contains(i))
        .map(|i| state.amplitudes[i - 1] * (nontarget_count as f64).sqrt())
        .unwrap_or(0.0);
    TraceStep { step, success_probability: p, target_amplitude, nontarget_amplitude }
}

/// Runs n Grover iterations from the uniform state, optionally
/// recording a per-step trace (step 0 is the initial state).
pub fn run(
    spec: &SearchSpec,
    iterations: u64,
    with_trace: bool,
) -> Result<(StateVector, Option<IterationTrace>), Error> {
    let mut state = uniform_state(spec.size())?;
    let mut trace = with_trace.then(IterationTrace::default);
    if let Some(t) = trace.as_mut() {
        t.steps.push(trace_step(0, &state, spec));
    }
    for step in 1..=iterations {
        state = grover_step(&state, spec)?;
        if let Some(t) = trace.as_mut() {
            t.steps.push(trace_step(step, &state, spec));
        }
    }
    Ok((state, trace))
}
