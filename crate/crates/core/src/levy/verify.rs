//! Pathwise verification of simulated trajectories.
//!
//! Checks, for a sampled time grid: cone membership of every state, cone
//! membership of every consecutive state difference (monotonicity in the
//! induced order), the bounded-variation identity, and right-continuity
//! between jumps. Tolerances scale with the state magnitude so that the
//! occasional very large stable jump is judged at the same relative
//! precision as small ones.

use super::simulate::Trajectory;
use super::LevyModel;
use crate::embedding::{in_embedded_cone, lp_distance, lp_norm};
use crate::geometry::DEFAULT_TOL;

#[derive(Clone, Debug)]
pub struct PathReport {
    pub states_checked: usize,
    /// Times whose state failed the embedded-cone membership test.
    pub cone_failures: Vec<f64>,
    /// Consecutive pairs `(s, t)` whose difference left the cone.
    pub increment_failures: Vec<(f64, f64)>,
    /// Total variation from the closed formula `T ||γ0|| + Σ r_i ||y||`.
    pub tv_formula: f64,
    /// Total variation measured by accumulating distances along the path,
    /// splitting at every jump.
    pub tv_measured: f64,
    pub tv_relative_error: f64,
    /// Times where the forward distance exceeded the drift bound.
    pub right_continuity_failures: Vec<f64>,
}

impl PathReport {
    pub fn passed(&self) -> bool {
        self.cone_failures.is_empty()
            && self.increment_failures.is_empty()
            && self.tv_relative_error <= 1e-6
            && self.right_continuity_failures.is_empty()
    }
}

/// Runs all pathwise checks on one trajectory at the given sample times
/// (clamped to `[0, horizon]`, sorted internally).
pub fn verify_path(traj: &Trajectory, model: &LevyModel, times: &[f64]) -> PathReport {
    let p = model.p_model();
    let mut ts: Vec<f64> = times
        .iter()
        .copied()
        .filter(|t| (0.0..=traj.horizon).contains(t))
        .collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();

    let mut cone_failures = Vec::new();
    let mut increment_failures = Vec::new();
    let mut right_continuity_failures = Vec::new();

    let mut prev: Option<(f64, crate::embedding::EmbeddedFunction)> = None;
    for &t in &ts {
        let state = traj.state_at(model, t);
        if !in_embedded_cone(&state, model.cone(), DEFAULT_TOL) {
            cone_failures.push(t);
        }
        if let Some((s, prev_state)) = &prev {
            let diff = &state - prev_state;
            if !in_embedded_cone(&diff, model.cone(), DEFAULT_TOL) {
                increment_failures.push((*s, t));
            }
        }
        // Right-continuity: within half the gap to the next jump the path
        // moves by drift alone.
        let next_jump = traj
            .jumps
            .iter()
            .map(|j| j.time)
            .find(|&jt| jt > t)
            .unwrap_or(traj.horizon);
        let delta = 0.5 * (next_jump - t).min(traj.horizon - t);
        if delta > 0.0 {
            let forward = traj.state_at(model, t + delta);
            let dist = lp_distance(&forward, &state, p).expect("same grids");
            let drift_norm = lp_norm(&traj.gamma0, p);
            let slack = DEFAULT_TOL * state.max_abs().max(1.0);
            if dist > drift_norm * delta + slack {
                right_continuity_failures.push(t);
            }
        }
        prev = Some((t, state));
    }

    // Bounded variation: formula route vs measured route. The measured
    // route telescopes lp-distances over the drift segments and jump
    // instants using exact left limits.
    let unit_norms: Vec<f64> = model
        .atoms()
        .iter()
        .map(|a| lp_norm(&a.direction, p))
        .collect();
    let tv_formula = traj.horizon * lp_norm(&traj.gamma0, p)
        + traj
            .jumps
            .iter()
            .map(|j| j.magnitude * unit_norms[j.atom])
            .sum::<f64>();
    let mut tv_measured = 0.0;
    let mut cursor = 0.0;
    let mut cursor_state = traj.state_at(model, 0.0);
    for j in &traj.jumps {
        if j.time > cursor {
            let left = traj.state_before(model, j.time);
            tv_measured += lp_distance(&left, &cursor_state, p).expect("same grids");
            let post = traj.state_at(model, j.time);
            tv_measured += lp_distance(&post, &left, p).expect("same grids");
            cursor = j.time;
            cursor_state = post;
        } else {
            // Simultaneous jump times: account for the extra jump alone.
            let post = traj.state_at(model, j.time);
            tv_measured += lp_distance(&post, &cursor_state, p).expect("same grids");
            cursor_state = post;
        }
    }
    let end = traj.state_at(model, traj.horizon);
    tv_measured += lp_distance(&end, &cursor_state, p).expect("same grids");
    let _ = cursor;
    let tv_relative_error = if tv_formula > 0.0 {
        (tv_formula - tv_measured).abs() / tv_formula
    } else {
        tv_measured.abs()
    };

    PathReport {
        states_checked: ts.len(),
        cone_failures,
        increment_failures,
        tv_formula,
        tv_measured,
        tv_relative_error,
        right_continuity_failures,
    }
}
