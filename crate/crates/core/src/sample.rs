//! Random generators for model inputs and verification suites.
//!
//! Everything draws from [`CounterRng`] so that sampled scenarios are
//! reproducible across runs and platforms.

use crate::embedding::{DualProbe, SphereGrid};
use crate::fuzzy::{AlphaGrid, FuzzyVector};
use crate::geometry::{ConeSpec, ConvexPolygon, Vec2};
use crate::rng::CounterRng;

/// Uniform point in the disc of the given center and radius (rejection from
/// the bounding square).
pub fn point_in_disc(rng: &mut CounterRng, center: Vec2, radius: f64) -> Vec2 {
    loop {
        let p = Vec2::new(
            rng.uniform_in(-radius, radius),
            rng.uniform_in(-radius, radius),
        );
        if p.norm() <= radius {
            return center + p;
        }
    }
}

/// Hull of `k` uniform points in a disc. Generic shapes, possibly with long
/// edges.
pub fn blob_polygon(rng: &mut CounterRng, center: Vec2, radius: f64, k: usize) -> ConvexPolygon {
    let pts: Vec<Vec2> = (0..k).map(|_| point_in_disc(rng, center, radius)).collect();
    ConvexPolygon::hull(&pts).expect("k >= 1")
}

/// Hull of `k` points on a radially jittered circle. Rich vertex count and
/// short edges; useful where direction-grid error bounds assume smooth
/// support peaks.
pub fn ring_polygon(
    rng: &mut CounterRng,
    center: Vec2,
    radius: f64,
    k: usize,
    jitter: f64,
) -> ConvexPolygon {
    let pts: Vec<Vec2> = (0..k)
        .map(|i| {
            let theta = std::f64::consts::TAU * (i as f64 + rng.uniform_in(-0.3, 0.3)) / k as f64;
            let r = radius * (1.0 - jitter * rng.uniform());
            center + Vec2::new(theta.cos(), theta.sin()) * r
        })
        .collect();
    ConvexPolygon::hull(&pts).expect("k >= 1")
}

/// Nested stack built by shrinking a base polygon toward its vertex
/// centroid with strictly decreasing factors. Nestedness holds by
/// convexity.
pub fn homothet_stack(rng: &mut CounterRng, grid: &AlphaGrid, base: ConvexPolygon) -> FuzzyVector {
    let c = base.vertex_centroid();
    let m = grid.len();
    let mut factors: Vec<f64> = (0..m).map(|_| rng.uniform_in(0.05, 1.0)).collect();
    factors.sort_by(|a, b| b.total_cmp(a));
    factors[0] = 1.0;
    let cuts: Vec<ConvexPolygon> = factors
        .iter()
        .map(|&s| {
            let shifted = base.translate(-c).scale(s).translate(c);
            shifted
        })
        .collect();
    FuzzyVector::new(grid.clone(), cuts).expect("homothets are nested")
}

/// Nested stack with independently shaped levels: each cut is the hull of
/// points sampled inside the previous cut.
pub fn nested_stack(
    rng: &mut CounterRng,
    grid: &AlphaGrid,
    base: ConvexPolygon,
    points_per_cut: usize,
) -> FuzzyVector {
    let mut cuts = vec![base];
    for _ in 1..grid.len() {
        let prev = cuts.last().unwrap();
        let pts = sample_inside(rng, prev, points_per_cut);
        cuts.push(ConvexPolygon::hull(&pts).expect("points_per_cut >= 1"));
    }
    FuzzyVector::new(grid.clone(), cuts).expect("construction is nested")
}

fn sample_inside(rng: &mut CounterRng, poly: &ConvexPolygon, count: usize) -> Vec<Vec2> {
    let verts = poly.vertices();
    if verts.len() == 1 {
        return vec![verts[0]; count];
    }
    // Convex combination of all vertices with random nonnegative weights.
    (0..count)
        .map(|_| {
            let ws: Vec<f64> = verts.iter().map(|_| rng.uniform()).collect();
            let total: f64 = ws.iter().sum();
            verts
                .iter()
                .zip(&ws)
                .fold(Vec2::ZERO, |acc, (&p, &w)| acc + p * (w / total))
        })
        .collect()
}

/// Generic random fuzzy vector inside a disc.
pub fn random_fuzzy(
    rng: &mut CounterRng,
    grid: &AlphaGrid,
    center: Vec2,
    radius: f64,
) -> FuzzyVector {
    let base = blob_polygon(rng, center, radius, 10);
    nested_stack(rng, grid, base, 8)
}

/// Random fuzzy vector with short-edged, near-circular cuts.
pub fn random_smooth_fuzzy(
    rng: &mut CounterRng,
    grid: &AlphaGrid,
    center: Vec2,
    radius: f64,
    boundary_points: usize,
) -> FuzzyVector {
    let base = ring_polygon(rng, center, radius, boundary_points, 0.15);
    homothet_stack(rng, grid, base)
}

/// A disc wholly inside the cone: centered along the bisector of the
/// generators, with radius limited by the clearance to the facets.
pub fn disc_inside_cone(cone: &ConeSpec, depth: f64) -> (Vec2, f64) {
    let mut bisector = Vec2::ZERO;
    for g in cone.generators() {
        let n = g.norm();
        if n > 0.0 {
            bisector = bisector + *g * (1.0 / n);
        }
    }
    let b = bisector.norm();
    assert!(b > 0.0, "cone generators must not cancel");
    let center = bisector * (depth / b);
    let clearance = cone
        .normals()
        .iter()
        .map(|n| n.dot(center) / n.norm())
        .fold(f64::INFINITY, f64::min);
    let clearance = if clearance.is_finite() { clearance } else { depth };
    (center, 0.8 * clearance.max(depth * 0.05))
}

/// Random K-positive fuzzy vector: every cut inside a disc that itself lies
/// in the cone.
pub fn random_k_positive(
    rng: &mut CounterRng,
    grid: &AlphaGrid,
    cone: &ConeSpec,
    depth: f64,
) -> FuzzyVector {
    let (center, radius) = disc_inside_cone(cone, depth);
    random_fuzzy(rng, grid, center, radius)
}

/// Random finite-rank functional with entries uniform in `[-amplitude,
/// amplitude]`.
pub fn random_probe(
    rng: &mut CounterRng,
    agrid: &AlphaGrid,
    sgrid: &SphereGrid,
    amplitude: f64,
) -> DualProbe {
    let rows: Vec<Vec<f64>> = (0..agrid.len())
        .map(|_| {
            (0..sgrid.n())
                .map(|_| rng.uniform_in(-amplitude, amplitude))
                .collect()
        })
        .collect();
    DualProbe::from_rows(&rows)
}
