//! Characteristic functional of the subordinator.
//!
//! For a finite-rank functional `ℓ` the log-characteristic function at time
//! `t` is `t c_α^{-1} Σ_j w_j R(ℓ(y_j)) + i t ℓ(γ0)` with the radial
//! integral
//!
//! ```text
//! R(s) = ∫_0^∞ (e^{irs} - 1) r^{-1-α} dr.
//! ```
//!
//! `R` is evaluated numerically. Substituting `x = rs` factors out `s^α`
//! and splits the integral at `r = 1/|s|`: the inner part becomes a rapidly
//! converging power series, the outer part a fixed oscillatory integral
//! `∫_1^∞ e^{ix} x^{-1-α} dx` handled by adaptive quadrature on `[1, X]`
//! plus an integration-by-parts asymptotic tail, minus the elementary
//! `∫ r^{-1-α}` piece. Target absolute error 1e-8.

use super::{LevyError, LevyTriplet};
use crate::embedding::{probe, DualProbe};
use num_complex::Complex64;

const TARGET_ABS_ERROR: f64 = 1e-8;
/// Switch point between adaptive quadrature and the asymptotic tail.
const TAIL_SPLIT: f64 = 32.0 * std::f64::consts::PI;
const TAIL_TERMS: usize = 12;
const MAX_DEPTH: usize = 28;

/// `R(s)` for real `s`: the jump part of the Lévy exponent per unit angular
/// mass. `R(0) = 0`, `R(-s) = conj(R(s))`, and `Re R <= 0` always.
pub fn radial_exponent_integral(alpha: f64, s: f64) -> Result<Complex64, LevyError> {
    assert!(alpha > 0.0 && alpha < 1.0);
    if s == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if s < 0.0 {
        return Ok(radial_exponent_integral(alpha, -s)?.conj());
    }
    let factor = exponent_factor(alpha)?;
    Ok(factor * s.powf(alpha))
}

/// The `s`-independent factor: `R(s) = s^α (series + oscillatory - 1/α)`.
fn exponent_factor(alpha: f64) -> Result<Complex64, LevyError> {
    // Inner part, x in (0,1]: sum_{k>=1} i^k / (k! (k-α)).
    let mut series = Complex64::new(0.0, 0.0);
    let mut ik = Complex64::new(0.0, 1.0);
    let mut kfact = 1.0;
    for k in 1..=40 {
        kfact *= k as f64;
        series += ik / (kfact * (k as f64 - alpha));
        ik *= Complex64::new(0.0, 1.0);
    }
    let oscillatory = oscillatory_tail_integral(alpha)?;
    Ok(series + oscillatory - Complex64::new(1.0 / alpha, 0.0))
}

/// `∫_1^∞ e^{ix} x^{-1-α} dx`.
fn oscillatory_tail_integral(alpha: f64) -> Result<Complex64, LevyError> {
    let f = |x: f64| Complex64::new(0.0, x).exp() * x.powf(-1.0 - alpha);
    let (finite, err) = adaptive_simpson(&f, 1.0, TAIL_SPLIT, TARGET_ABS_ERROR / 4.0);
    if err > TARGET_ABS_ERROR / 2.0 {
        return Err(LevyError::QuadratureNonConvergence {
            achieved: err,
            target: TARGET_ABS_ERROR / 2.0,
        });
    }
    // Repeated integration by parts from X: with g_0 = x^{-1-α} and
    // g_{m+1} = g_m', one gets A = Σ_m i^{m+1} e^{iX} g_m(X) + i^K A_K,
    // and |A_K| <= ∫ |g_K| which is astronomically small for X ~ 100.
    let x = TAIL_SPLIT;
    let eix = Complex64::new(0.0, x).exp();
    let mut tail = Complex64::new(0.0, 0.0);
    let mut g = x.powf(-1.0 - alpha);
    let mut i_pow = Complex64::new(0.0, 1.0);
    for m in 0..TAIL_TERMS {
        tail += i_pow * eix * g;
        g *= -(1.0 + alpha + m as f64) / x;
        i_pow *= Complex64::new(0.0, 1.0);
    }
    Ok(finite + tail)
}

/// Adaptive Simpson for complex integrands; returns the estimate and an
/// error estimate.
fn adaptive_simpson<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64) -> (Complex64, f64) {
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

fn simpson(a: f64, b: f64, fa: Complex64, fm: Complex64, fb: Complex64) -> Complex64 {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
    whole: Complex64,
    tol: f64,
    depth: usize,
) -> (Complex64, f64) {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.norm() <= 15.0 * tol || depth == 0 {
        return (left + right + delta / 15.0, delta.norm() / 15.0);
    }
    let (lv, le) = recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1);
    let (rv, re) = recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
    (lv + rv, le + re)
}

/// Characteristic functional `E exp(i ℓ(X_t))` in closed form (up to the
/// radial quadrature). The modulus never exceeds one.
pub fn char_functional(
    triplet: &LevyTriplet,
    l: &DualProbe,
    t: f64,
) -> Result<Complex64, LevyError> {
    assert!(t >= 0.0);
    let report = triplet.require_valid()?;
    let model = &triplet.model;
    let mut jump_part = Complex64::new(0.0, 0.0);
    for atom in model.atoms() {
        let s = probe(l, &atom.direction)?;
        jump_part += radial_exponent_integral(model.alpha(), s)? * atom.weight;
    }
    let drift_phase = probe(l, &report.gamma0)?;
    let exponent = jump_part * (t / model.c_alpha()) + Complex64::new(0.0, t * drift_phase);
    Ok(exponent.exp())
}
