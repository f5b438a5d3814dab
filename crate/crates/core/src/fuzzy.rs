//! Fuzzy vectors as nested stacks of α-cuts.
//!
//! A fuzzy vector is stored through its cuts on a fixed grid of levels
//! `0 < α_1 < … < α_m = 1`; the membership function is reconstructed as a
//! left-continuous step function taking values on the grid. Arithmetic is
//! levelwise Minkowski arithmetic; vectors on different grids are rejected
//! rather than resampled.

use crate::geometry::{ConeSpec, ConvexPolygon, Vec2, DEFAULT_TOL};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FuzzyError {
    #[error("alpha grid must be strictly increasing inside (0,1] and end at 1")]
    BadGrid,
    #[error("alpha grid needs at least two levels")]
    GridTooSmall,
    #[error("number of cuts ({cuts}) does not match grid size ({levels})")]
    LengthMismatch { cuts: usize, levels: usize },
    #[error("cut at level index {0} is not contained in the previous level")]
    NestednessViolation(usize),
    #[error("cut at level index {0} is empty")]
    EmptyCut(usize),
    #[error("operands live on different alpha grids")]
    GridMismatch,
}

/// Strictly increasing membership levels `α_1 < … < α_m` with `α_m = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaGrid {
    levels: Vec<f64>,
}

impl AlphaGrid {
    pub fn new(levels: Vec<f64>) -> Result<Self, FuzzyError> {
        if levels.len() < 2 {
            return Err(FuzzyError::GridTooSmall);
        }
        let increasing = levels.windows(2).all(|w| w[0] < w[1]);
        if !increasing || levels[0] <= 0.0 || *levels.last().unwrap() != 1.0 {
            return Err(FuzzyError::BadGrid);
        }
        Ok(Self { levels })
    }

    /// The uniform grid `{1/m, 2/m, …, 1}`.
    pub fn uniform(m: usize) -> Self {
        assert!(m >= 2);
        let levels = (1..=m).map(|i| i as f64 / m as f64).collect();
        Self { levels }
    }

    #[inline]
    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Left-step quadrature weights: `Δα_1 = α_1`, `Δα_i = α_i − α_{i−1}`.
    pub fn weights(&self) -> Vec<f64> {
        let mut w = Vec::with_capacity(self.levels.len());
        let mut prev = 0.0;
        for &a in &self.levels {
            w.push(a - prev);
            prev = a;
        }
        w
    }
}

/// Fuzzy vector: one convex cut per grid level, nested downward.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyVector {
    grid: AlphaGrid,
    cuts: Vec<ConvexPolygon>,
}

impl FuzzyVector {
    /// Validates nestedness: every vertex of the cut at level `i` must lie
    /// in the cut at level `i-1`. The containment tolerance scales with the
    /// coordinate magnitude so that large simulated states validate cleanly.
    pub fn new(grid: AlphaGrid, cuts: Vec<ConvexPolygon>) -> Result<Self, FuzzyError> {
        if cuts.len() != grid.len() {
            return Err(FuzzyError::LengthMismatch {
                cuts: cuts.len(),
                levels: grid.len(),
            });
        }
        for i in 1..cuts.len() {
            let tol = nest_tol(&cuts[i - 1], &cuts[i]);
            if !cuts[i - 1].contains_polygon(&cuts[i], tol) {
                return Err(FuzzyError::NestednessViolation(i));
            }
        }
        Ok(Self { grid, cuts })
    }

    /// Builds from raw vertex lists, hulling each level.
    pub fn from_point_lists(grid: AlphaGrid, lists: &[Vec<Vec2>]) -> Result<Self, FuzzyError> {
        if lists.len() != grid.len() {
            return Err(FuzzyError::LengthMismatch {
                cuts: lists.len(),
                levels: grid.len(),
            });
        }
        let mut cuts = Vec::with_capacity(lists.len());
        for (i, pts) in lists.iter().enumerate() {
            match ConvexPolygon::hull(pts) {
                Some(p) => cuts.push(p),
                None => return Err(FuzzyError::EmptyCut(i)),
            }
        }
        Self::new(grid, cuts)
    }

    /// The crisp vector: every cut is the singleton `{x}`.
    pub fn crisp(grid: AlphaGrid, x: Vec2) -> Self {
        let cuts = vec![ConvexPolygon::singleton(x); grid.len()];
        Self { grid, cuts }
    }

    #[inline]
    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    #[inline]
    pub fn cuts(&self) -> &[ConvexPolygon] {
        &self.cuts
    }

    /// The cut of the smallest grid level `α_i >= α` (left-continuous step
    /// rule).
    pub fn alpha_cut(&self, alpha: f64) -> &ConvexPolygon {
        assert!(alpha > 0.0 && alpha <= 1.0, "alpha must be in (0,1]");
        let idx = self
            .grid
            .levels()
            .iter()
            .position(|&l| l >= alpha - 1e-12)
            .expect("grid ends at 1");
        &self.cuts[idx]
    }

    /// Reconstructed membership value: the largest grid level whose cut
    /// contains `p`, or zero.
    pub fn membership(&self, p: Vec2) -> f64 {
        for i in (0..self.cuts.len()).rev() {
            if self.cuts[i].contains(p, DEFAULT_TOL) {
                return self.grid.levels()[i];
            }
        }
        0.0
    }

    /// Levelwise Minkowski sum. Requires equal grids.
    pub fn add(&self, other: &FuzzyVector) -> Result<FuzzyVector, FuzzyError> {
        if self.grid != other.grid {
            return Err(FuzzyError::GridMismatch);
        }
        let cuts = self
            .cuts
            .iter()
            .zip(&other.cuts)
            .map(|(a, b)| a.minkowski_sum(b))
            .collect();
        // Nestedness is preserved by Minkowski sums of nested operands.
        Ok(FuzzyVector {
            grid: self.grid.clone(),
            cuts,
        })
    }

    /// Levelwise scaling by an arbitrary real.
    pub fn scalar_mul(&self, lambda: f64) -> FuzzyVector {
        FuzzyVector {
            grid: self.grid.clone(),
            cuts: self.cuts.iter().map(|c| c.scale(lambda)).collect(),
        }
    }

    /// Levelwise set product (componentwise): hull of pairwise vertex
    /// products. Not used by the Lévy construction.
    pub fn mul(&self, other: &FuzzyVector) -> Result<FuzzyVector, FuzzyError> {
        if self.grid != other.grid {
            return Err(FuzzyError::GridMismatch);
        }
        let cuts = self
            .cuts
            .iter()
            .zip(&other.cuts)
            .map(|(a, b)| {
                let mut prods = Vec::with_capacity(a.vertices().len() * b.vertices().len());
                for &x in a.vertices() {
                    for &y in b.vertices() {
                        prods.push(Vec2::new(x.x * y.x, x.y * y.y));
                    }
                }
                ConvexPolygon::hull(&prods).expect("product of non-empty sets")
            })
            .collect();
        Ok(FuzzyVector {
            grid: self.grid.clone(),
            cuts,
        })
    }

    /// Whether the widest retained cut (level `α_1`, standing in for the
    /// support of the membership function) lies in the cone.
    pub fn is_k_positive(&self, cone: &ConeSpec, tol: f64) -> bool {
        self.cuts[0]
            .vertices()
            .iter()
            .all(|&p| cone.contains(p, tol))
    }

    /// Supremum over levels of the Hausdorff distance between cuts.
    pub fn d_infty(&self, other: &FuzzyVector) -> Result<f64, FuzzyError> {
        if self.grid != other.grid {
            return Err(FuzzyError::GridMismatch);
        }
        Ok(self
            .cuts
            .iter()
            .zip(&other.cuts)
            .map(|(a, b)| a.hausdorff(b))
            .fold(0.0, f64::max))
    }

    /// Largest coordinate magnitude over all cuts.
    pub fn max_coord(&self) -> f64 {
        self.cuts.iter().map(|c| c.max_coord()).fold(0.0, f64::max)
    }
}

fn nest_tol(outer: &ConvexPolygon, inner: &ConvexPolygon) -> f64 {
    DEFAULT_TOL * outer.max_coord().max(inner.max_coord()).max(1.0)
}
