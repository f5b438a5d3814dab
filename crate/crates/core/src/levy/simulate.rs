//! Series simulation of the cone subordinator.
//!
//! Jumps are generated by inverting the radial tail function at the arrival
//! times of a unit-rate Poisson process: with `Γ_1 < Γ_2 < …` cumulative
//! sums of unit exponentials, the magnitude of the i-th largest jump over a
//! horizon `T` is `r_i = (Λ T / (c_α α Γ_i))^{1/α}`. Magnitudes decrease in
//! `i`, so truncation below `eps` stops the series after finitely many
//! terms. Jump times are independent uniform marks on `(0, T]` and angular
//! atoms are drawn proportionally to their weights.
//!
//! The generator stream is consumed in a fixed documented order (arrival
//! increment, then time mark, then atom mark per kept jump), which makes
//! trajectories bit-reproducible given `(triplet, T, eps, seed)`.

use super::{LevyError, LevyModel, LevyTriplet};
use crate::embedding::{invert, lp_norm, EmbeddedFunction, EmbeddingError};
use crate::fuzzy::FuzzyVector;
use crate::rng::CounterRng;

/// One jump of the truncated series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jump {
    pub time: f64,
    pub magnitude: f64,
    pub atom: usize,
}

/// Piecewise-affine càdlàg path: drift `γ0 t` plus the kept jumps.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub gamma0: EmbeddedFunction,
    pub horizon: f64,
    pub eps: f64,
    pub seed: u64,
    /// Sorted by time, all magnitudes strictly above `eps`.
    pub jumps: Vec<Jump>,
}

/// Simulates one trajectory. Fails if the triplet violates the
/// subordination conditions.
pub fn simulate(
    triplet: &LevyTriplet,
    horizon: f64,
    eps: f64,
    seed: u64,
) -> Result<Trajectory, LevyError> {
    if !(horizon > 0.0) || !(eps > 0.0) {
        return Err(LevyError::InvalidParameter(
            "horizon and eps must be positive".into(),
        ));
    }
    let report = triplet.require_valid()?;
    let model = &triplet.model;
    let total = model.total_weight();

    let mut jumps = Vec::new();
    if total > 0.0 {
        let mut rng = CounterRng::new(seed);
        let rate = total * horizon / (model.c_alpha() * model.alpha());
        let mut arrival = 0.0;
        loop {
            arrival += rng.exponential();
            let magnitude = (rate / arrival).powf(1.0 / model.alpha());
            if magnitude <= eps {
                break;
            }
            let time = horizon * rng.uniform(); // uniform on (0, T]
            let mark = rng.uniform() * total;
            let mut atom = model.atoms().len() - 1;
            let mut acc = 0.0;
            for (j, a) in model.atoms().iter().enumerate() {
                acc += a.weight;
                if mark <= acc {
                    atom = j;
                    break;
                }
            }
            jumps.push(Jump {
                time,
                magnitude,
                atom,
            });
        }
        jumps.sort_by(|a, b| a.time.total_cmp(&b.time));
    }

    Ok(Trajectory {
        gamma0: report.gamma0,
        horizon,
        eps,
        seed,
        jumps,
    })
}

impl Trajectory {
    /// Rebuilds a trajectory from exported parts (used by file readers).
    pub fn from_parts(
        gamma0: EmbeddedFunction,
        horizon: f64,
        eps: f64,
        seed: u64,
        mut jumps: Vec<Jump>,
    ) -> Self {
        jumps.sort_by(|a, b| a.time.total_cmp(&b.time));
        Self {
            gamma0,
            horizon,
            eps,
            seed,
            jumps,
        }
    }

    /// State at time `t` (right-continuous: jumps at `t` are included).
    pub fn state_at(&self, model: &LevyModel, t: f64) -> EmbeddedFunction {
        assert!(
            (0.0..=self.horizon + 1e-12).contains(&t),
            "t must lie in [0, horizon]"
        );
        let mut state = self.gamma0.scale(t);
        for jump in &self.jumps {
            if jump.time <= t {
                state = &state + &model.atoms()[jump.atom].direction.scale(jump.magnitude);
            }
        }
        state
    }

    /// Left limit at `t`: jumps exactly at `t` are excluded.
    pub fn state_before(&self, model: &LevyModel, t: f64) -> EmbeddedFunction {
        let mut state = self.gamma0.scale(t);
        for jump in &self.jumps {
            if jump.time < t {
                state = &state + &model.atoms()[jump.atom].direction.scale(jump.magnitude);
            }
        }
        state
    }

    /// Fuzzy state: the reconstructed cut stack of the current state. An
    /// inversion failure signals numerical degeneracy and must not occur
    /// for trajectories of valid triplets.
    pub fn fuzzy_state(&self, model: &LevyModel, t: f64) -> Result<FuzzyVector, EmbeddingError> {
        invert(&self.state_at(model, t))
    }

    /// Sum and count of jumps of size above `eps_class` occurring strictly
    /// before `t`. Only classes at or above the simulation truncation are
    /// meaningful; finer requests are rejected.
    pub fn jump_sum(
        &self,
        model: &LevyModel,
        eps_class: f64,
        t: f64,
    ) -> Result<(EmbeddedFunction, usize), LevyError> {
        if eps_class < self.eps {
            return Err(LevyError::BelowTruncation {
                requested: eps_class,
                truncation: self.eps,
            });
        }
        let mut acc = EmbeddedFunction::zeros(model.agrid().clone(), model.sgrid().clone());
        let mut count = 0;
        for jump in &self.jumps {
            if jump.time < t {
                let size = jump.magnitude * lp_norm(&model.atoms()[jump.atom].direction, model.p_model());
                if size > eps_class {
                    acc = &acc + &model.atoms()[jump.atom].direction.scale(jump.magnitude);
                    count += 1;
                }
            }
        }
        Ok((acc, count))
    }
}
