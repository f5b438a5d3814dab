//! Support-function embedding of fuzzy vectors.
//!
//! A fuzzy vector embeds into the space of real functions on
//! `(0,1] × S¹` by sampling its support function on the product of the
//! α-grid and a uniform direction grid. The ambient space carries the
//! `L^p` metrics built from left-step weights in α and the normalized
//! counting measure on directions. Inversion reconstructs the cut stack by
//! halfspace intersection.
//!
//! Arbitrary matrices are representable — most are not support functions.
//! [`validate_support`] checks the sampled necessary conditions and
//! [`in_embedded_cone`] combines them with inversion and a cone-membership
//! test of the reconstructed stack.

use crate::fuzzy::{AlphaGrid, FuzzyError, FuzzyVector};
use crate::geometry::{
    halfspace_intersection, ConeSpec, ConvexPolygon, Direction, RegionResult, Vec2, DEFAULT_TOL,
};
use std::io::{self, Write};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EmbeddingError {
    #[error("direction count must be even and at least 8, got {0}")]
    BadSphereGrid(usize),
    #[error("value matrix shape {rows}x{cols} does not match grids {m}x{n}")]
    BadShape {
        rows: usize,
        cols: usize,
        m: usize,
        n: usize,
    },
    #[error("non-finite entry at level {level}, direction {direction}")]
    NonFinite { level: usize, direction: usize },
    #[error("operands live on different grids")]
    GridMismatch,
    #[error("exponent must be >= 1 (or infinite), got {0}")]
    InvalidExponent(f64),
    #[error("inversion failed at level index {level}: no bounded non-empty region")]
    InversionFailed { level: usize },
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// Uniform direction grid `u_k = (cos 2πk/n, sin 2πk/n)`, `n` even.
///
/// The second half is stored as the exact negation of the first, so
/// `u_{k+n/2} = -u_k` holds bitwise.
#[derive(Clone, Debug)]
pub struct SphereGrid {
    directions: Vec<Direction>,
}

impl SphereGrid {
    pub fn new(n: usize) -> Result<Self, EmbeddingError> {
        if n < 8 || n % 2 != 0 {
            return Err(EmbeddingError::BadSphereGrid(n));
        }
        let mut directions = Vec::with_capacity(n);
        for k in 0..n / 2 {
            directions.push(Direction::from_angle(
                std::f64::consts::TAU * k as f64 / n as f64,
            ));
        }
        for k in 0..n / 2 {
            directions.push(directions[k].opposite());
        }
        Ok(Self { directions })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.directions.len()
    }

    #[inline]
    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    #[inline]
    pub fn direction(&self, k: usize) -> Direction {
        self.directions[k]
    }

    #[inline]
    pub fn antipode(&self, k: usize) -> usize {
        (k + self.n() / 2) % self.n()
    }
}

impl PartialEq for SphereGrid {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n()
    }
}

/// Real-valued function sampled on the (α, direction) grid. Row `i` holds
/// the values at level `α_i`, column `k` those at direction `u_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedFunction {
    agrid: AlphaGrid,
    sgrid: SphereGrid,
    values: Vec<f64>, // row-major m x n
}

impl EmbeddedFunction {
    pub fn zeros(agrid: AlphaGrid, sgrid: SphereGrid) -> Self {
        let len = agrid.len() * sgrid.n();
        Self {
            agrid,
            sgrid,
            values: vec![0.0; len],
        }
    }

    pub fn from_rows(
        agrid: AlphaGrid,
        sgrid: SphereGrid,
        rows: &[Vec<f64>],
    ) -> Result<Self, EmbeddingError> {
        let (m, n) = (agrid.len(), sgrid.n());
        if rows.len() != m || rows.iter().any(|r| r.len() != n) {
            return Err(EmbeddingError::BadShape {
                rows: rows.len(),
                cols: rows.first().map_or(0, |r| r.len()),
                m,
                n,
            });
        }
        let mut values = Vec::with_capacity(m * n);
        for (i, row) in rows.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(EmbeddingError::NonFinite {
                        level: i,
                        direction: k,
                    });
                }
                values.push(x);
            }
        }
        Ok(Self {
            agrid,
            sgrid,
            values,
        })
    }

    /// Constant matrix; handy for building counterexamples.
    pub fn constant(agrid: AlphaGrid, sgrid: SphereGrid, c: f64) -> Self {
        let len = agrid.len() * sgrid.n();
        Self {
            agrid,
            sgrid,
            values: vec![c; len],
        }
    }

    #[inline]
    pub fn agrid(&self) -> &AlphaGrid {
        &self.agrid
    }

    #[inline]
    pub fn sgrid(&self) -> &SphereGrid {
        &self.sgrid
    }

    #[inline]
    pub fn value(&self, level: usize, direction: usize) -> f64 {
        self.values[level * self.sgrid.n() + direction]
    }

    #[inline]
    pub fn row(&self, level: usize) -> &[f64] {
        let n = self.sgrid.n();
        &self.values[level * n..(level + 1) * n]
    }

    pub fn same_grids(&self, other: &Self) -> bool {
        self.agrid == other.agrid && self.sgrid == other.sgrid
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, EmbeddingError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, EmbeddingError> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self, EmbeddingError> {
        if !self.same_grids(other) {
            return Err(EmbeddingError::GridMismatch);
        }
        Ok(Self {
            agrid: self.agrid.clone(),
            sgrid: self.sgrid.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            agrid: self.agrid.clone(),
            sgrid: self.sgrid.clone(),
            values: self.values.iter().map(|&x| x * c).collect(),
        }
    }

    /// Largest absolute entry difference; the entrywise metric used by most
    /// algebraic identity tests.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert!(self.same_grids(other), "grids must match");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0.0)
    }
}

impl std::ops::Add for &EmbeddedFunction {
    type Output = EmbeddedFunction;
    fn add(self, rhs: &EmbeddedFunction) -> EmbeddedFunction {
        self.try_add(rhs).expect("grid mismatch in +")
    }
}

impl std::ops::Sub for &EmbeddedFunction {
    type Output = EmbeddedFunction;
    fn sub(self, rhs: &EmbeddedFunction) -> EmbeddedFunction {
        self.try_sub(rhs).expect("grid mismatch in -")
    }
}

/// Samples the support function of every cut on the direction grid.
pub fn embed(x: &FuzzyVector, sgrid: &SphereGrid) -> EmbeddedFunction {
    let m = x.grid().len();
    let n = sgrid.n();
    let mut values = Vec::with_capacity(m * n);
    for cut in x.cuts() {
        for &u in sgrid.directions() {
            values.push(cut.support(u));
        }
    }
    EmbeddedFunction {
        agrid: x.grid().clone(),
        sgrid: sgrid.clone(),
        values,
    }
}

/// `L^p` norm with left-step α-weights and normalized direction weights.
/// `p = f64::INFINITY` gives the sup norm over grid entries.
pub fn lp_norm(f: &EmbeddedFunction, p: f64) -> f64 {
    if p == f64::INFINITY {
        return f.max_abs();
    }
    assert!(p >= 1.0, "exponent must be >= 1");
    let n = f.sgrid.n() as f64;
    let mut acc = 0.0;
    for (i, w) in f.agrid.weights().iter().enumerate() {
        let row_sum: f64 = f.row(i).iter().map(|x| x.abs().powf(p)).sum();
        acc += w * row_sum / n;
    }
    acc.powf(1.0 / p)
}

/// `L^p` distance between two functions on the same grids.
pub fn lp_distance(f: &EmbeddedFunction, g: &EmbeddedFunction, p: f64) -> Result<f64, EmbeddingError> {
    if !(p >= 1.0 || p == f64::INFINITY) {
        return Err(EmbeddingError::InvalidExponent(p));
    }
    let diff = f.try_sub(g)?;
    Ok(lp_norm(&diff, p))
}

/// Metric on fuzzy vectors pulled back through the embedding:
/// `d_p(x, y) = ||embed(x) - embed(y)||_p`. Same code path as
/// [`lp_distance`] by construction.
pub fn fuzzy_dp(
    x: &FuzzyVector,
    y: &FuzzyVector,
    p: f64,
    sgrid: &SphereGrid,
) -> Result<f64, EmbeddingError> {
    if x.grid() != y.grid() {
        return Err(EmbeddingError::GridMismatch);
    }
    lp_distance(&embed(x, sgrid), &embed(y, sgrid), p)
}

/// Kind of support-function defect found by [`validate_support`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `f(α,u) + f(α,-u) < 0`: no non-empty set has such support values.
    Antipodal,
    /// Discrete subadditivity fails at a direction: the constraint at that
    /// direction cuts strictly inside the corner formed by its neighbours.
    Subadditivity,
    /// A column increases in α: cuts would have to grow with the level.
    AlphaMonotonicity,
    /// The halfspace intersection at some level is empty or unbounded.
    EmptyInversion,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub level: usize,
    pub direction: usize,
    pub magnitude: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Antipodal positivity, discrete subadditivity and α-monotonicity scans.
/// These are the cheap necessary conditions; inversion non-emptiness is the
/// operative guarantee and is checked separately.
fn structural_violations(f: &EmbeddedFunction, tol: f64) -> Vec<Violation> {
    let m = f.agrid.len();
    let n = f.sgrid.n();
    let mut out = Vec::new();
    for i in 0..m {
        let row = f.row(i);
        for k in 0..n {
            let s = row[k] + row[f.sgrid.antipode(k)];
            if s < -tol {
                out.push(Violation {
                    kind: ViolationKind::Antipodal,
                    level: i,
                    direction: k,
                    magnitude: -s,
                });
            }
            // Subadditivity at the grid direction u_k against its
            // neighbours: |u_{k-1} + u_{k+1}| f(u_k) <= f(u_{k-1}) + f(u_{k+1}).
            let prev = (k + n - 1) % n;
            let next = (k + 1) % n;
            let w = f.sgrid.direction(prev).as_vec() + f.sgrid.direction(next).as_vec();
            let lhs = w.norm() * row[k];
            let rhs = row[prev] + row[next];
            if lhs > rhs + tol {
                out.push(Violation {
                    kind: ViolationKind::Subadditivity,
                    level: i,
                    direction: k,
                    magnitude: lhs - rhs,
                });
            }
        }
    }
    for k in 0..n {
        for i in 0..m - 1 {
            let delta = f.value(i + 1, k) - f.value(i, k);
            if delta > tol {
                out.push(Violation {
                    kind: ViolationKind::AlphaMonotonicity,
                    level: i + 1,
                    direction: k,
                    magnitude: delta,
                });
            }
        }
    }
    out
}

fn row_is_tight(f: &EmbeddedFunction, level: usize, tol: f64) -> bool {
    let n = f.sgrid.n();
    let row = f.row(level);
    for k in 0..n {
        if row[k] + row[f.sgrid.antipode(k)] < -tol {
            return false;
        }
        let prev = (k + n - 1) % n;
        let next = (k + 1) % n;
        let w = f.sgrid.direction(prev).as_vec() + f.sgrid.direction(next).as_vec();
        if w.norm() * row[k] > row[prev] + row[next] + tol {
            return false;
        }
    }
    true
}

/// Reconstructs the cut at one level.
///
/// When the row passes the antipodal and subadditivity checks, every
/// constraint is tight and the region's boundary visits the constraint
/// lines in angular order, so the vertices are exactly the intersections of
/// angularly adjacent lines. Otherwise the general halfspace intersection
/// handles loose or infeasible rows.
fn row_polygon(f: &EmbeddedFunction, level: usize, tol: f64) -> Option<ConvexPolygon> {
    let n = f.sgrid.n();
    let row = f.row(level);
    if row_is_tight(f, level, tol) {
        let mut candidates = Vec::with_capacity(n);
        for k in 0..n {
            let next = (k + 1) % n;
            let a = f.sgrid.direction(k).as_vec();
            let b = f.sgrid.direction(next).as_vec();
            let det = a.cross(b); // sin(2π/n) > 0 for adjacent grid directions
            candidates.push(Vec2::new(
                (row[k] * b.y - row[next] * a.y) / det,
                (a.x * row[next] - b.x * row[k]) / det,
            ));
        }
        return ConvexPolygon::hull(&candidates);
    }
    let offsets: Vec<f64> = row.to_vec();
    match halfspace_intersection(f.sgrid.directions(), &offsets, tol) {
        RegionResult::Bounded(p) => Some(p),
        RegionResult::Empty | RegionResult::Unbounded => None,
    }
}

fn scaled_tol(f: &EmbeddedFunction, tol: f64) -> f64 {
    tol * f.max_abs().max(1.0)
}

/// Full validity scan with an absolute tolerance `tol` (scale it to your
/// data; [`in_embedded_cone`] does so automatically).
pub fn validate_support(f: &EmbeddedFunction, tol: f64) -> ValidityReport {
    let mut violations = structural_violations(f, tol);
    for i in 0..f.agrid.len() {
        if row_polygon(f, i, tol).is_none() {
            violations.push(Violation {
                kind: ViolationKind::EmptyInversion,
                level: i,
                direction: 0,
                magnitude: 0.0,
            });
        }
    }
    ValidityReport { violations }
}

/// Reconstructs a fuzzy vector from sampled support values by halfspace
/// intersection at every level.
pub fn invert(f: &EmbeddedFunction) -> Result<FuzzyVector, EmbeddingError> {
    let tol = scaled_tol(f, DEFAULT_TOL);
    let mut cuts = Vec::with_capacity(f.agrid.len());
    for i in 0..f.agrid.len() {
        match row_polygon(f, i, tol) {
            Some(p) => cuts.push(p),
            None => return Err(EmbeddingError::InversionFailed { level: i }),
        }
    }
    Ok(FuzzyVector::new(f.agrid.clone(), cuts)?)
}

/// Computable membership test for the embedded cone: the matrix must be a
/// valid sampled support function whose reconstruction is K-positive.
///
/// `tol` is an entrywise absolute tolerance; it is scaled internally by the
/// magnitude of `f` so that states of any size are judged at the same
/// relative precision.
pub fn in_embedded_cone(f: &EmbeddedFunction, cone: &ConeSpec, tol: f64) -> bool {
    let t = tol * f.max_abs().max(1.0);
    if !structural_violations(f, t).is_empty() {
        return false;
    }
    match invert(f) {
        Ok(x) => {
            let cone_tol = tol * x.max_coord().max(1.0);
            x.is_k_positive(cone, cone_tol)
        }
        Err(_) => false,
    }
}

/// Finite-rank linear functional: a weight per grid entry, evaluated with
/// the same quadrature weights as the `L^p` norms.
#[derive(Clone, Debug, PartialEq)]
pub struct DualProbe {
    weights: Vec<f64>, // row-major m x n
    m: usize,
    n: usize,
}

impl DualProbe {
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        assert!(m > 0 && n > 0 && rows.iter().all(|r| r.len() == n));
        Self {
            weights: rows.iter().flatten().copied().collect(),
            m,
            n,
        }
    }

    /// Point mass at a single grid entry.
    pub fn point_mass(m: usize, n: usize, level: usize, direction: usize) -> Self {
        let mut weights = vec![0.0; m * n];
        weights[level * n + direction] = 1.0;
        Self { weights, m, n }
    }

    pub fn weight(&self, level: usize, direction: usize) -> f64 {
        self.weights[level * self.n + direction]
    }

    /// `ℓ(f) = Σ_{i,k} w_{ik} f(α_i,u_k) Δα_i / n`.
    pub fn apply(&self, f: &EmbeddedFunction) -> Result<f64, EmbeddingError> {
        if self.m != f.agrid.len() || self.n != f.sgrid.n() {
            return Err(EmbeddingError::GridMismatch);
        }
        let n = self.n as f64;
        let mut acc = 0.0;
        for (i, w) in f.agrid.weights().iter().enumerate() {
            let mut row_acc = 0.0;
            for k in 0..self.n {
                row_acc += self.weight(i, k) * f.value(i, k);
            }
            acc += row_acc * w / n;
        }
        Ok(acc)
    }

    /// Operator norm on `L^p`: the `L^q` norm of the weight matrix with
    /// `1/p + 1/q = 1`.
    pub fn operator_norm(&self, agrid: &AlphaGrid, p: f64) -> f64 {
        assert_eq!(self.m, agrid.len());
        let q = if p == f64::INFINITY {
            1.0
        } else if p == 1.0 {
            f64::INFINITY
        } else {
            p / (p - 1.0)
        };
        if q == f64::INFINITY {
            return self.weights.iter().map(|w| w.abs()).fold(0.0, f64::max);
        }
        let n = self.n as f64;
        let mut acc = 0.0;
        for (i, w) in agrid.weights().iter().enumerate() {
            let row_sum: f64 = (0..self.n)
                .map(|k| self.weight(i, k).abs().powf(q))
                .sum();
            acc += w * row_sum / n;
        }
        acc.powf(1.0 / q)
    }
}

/// Convenience alias matching the operational name.
pub fn probe(l: &DualProbe, f: &EmbeddedFunction) -> Result<f64, EmbeddingError> {
    l.apply(f)
}

/// Snapshot export: header row of direction angles (radians), then one row
/// per α level with the level in the first column. All numbers carry 17
/// significant digits so the file is bit-exact reproducible.
pub fn write_snapshot_csv<W: Write>(f: &EmbeddedFunction, mut out: W) -> io::Result<()> {
    write!(out, "alpha")?;
    for u in f.sgrid.directions() {
        write!(out, ",{:.16e}", u.angle())?;
    }
    writeln!(out)?;
    for (i, &a) in f.agrid.levels().iter().enumerate() {
        write!(out, "{:.16e}", a)?;
        for k in 0..f.sgrid.n() {
            write!(out, ",{:.16e}", f.value(i, k))?;
        }
        writeln!(out)?;
    }
    Ok(())
}
