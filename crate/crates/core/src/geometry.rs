//! Exact 2-D convex geometry.
//!
//! Compact convex sets are stored as canonical vertex lists: counterclockwise
//! order, starting at the lexicographically smallest vertex, with duplicate
//! and collinear vertices removed. Points and segments are first-class
//! polygons with one or two vertices, so degenerate sets flow through the
//! same operations as full-dimensional ones.
//!
//! All values are immutable after construction and every operation is a pure
//! function.

use thiserror::Error;

/// Default absolute tolerance for membership and feasibility predicates.
/// Callers working at large coordinate scales should scale it by the
/// magnitude of their data.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Cross-product threshold under which three points count as collinear.
pub(crate) const COLLINEAR_EPS: f64 = 1e-12;

/// Euclidean distance under which two points count as duplicates.
pub(crate) const DEDUP_EPS: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("direction must have unit length, got norm {0}")]
    NotUnit(f64),
    #[error("cannot normalize a zero vector")]
    ZeroVector,
    #[error("generator #{0} violates a halfspace constraint of the cone")]
    GeneratorOutsideCone(usize),
    #[error("cone is not proper (contains a line)")]
    ImproperCone,
    #[error("cone spec needs at least one generator")]
    NoGenerators,
}

/// Point / vector in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// Signed area of the parallelogram spanned by `self` and `o`.
    #[inline]
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Counterclockwise rotation by 90 degrees.
    #[inline]
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

/// Unit vector in the plane (`l²` norm 1 within 1e-12).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction(Vec2);

impl Direction {
    /// Wraps a vector that is already unit length.
    pub fn new(v: Vec2) -> Result<Self, GeometryError> {
        let n = v.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(GeometryError::NotUnit(n));
        }
        Ok(Self(v))
    }

    /// Unit vector at the given angle from the positive x-axis.
    pub fn from_angle(theta: f64) -> Self {
        Self(Vec2::new(theta.cos(), theta.sin()))
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(v: Vec2) -> Result<Self, GeometryError> {
        let n = v.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(GeometryError::ZeroVector);
        }
        Ok(Self(Vec2::new(v.x / n, v.y / n)))
    }

    #[inline]
    pub fn as_vec(self) -> Vec2 {
        self.0
    }

    #[inline]
    pub fn angle(self) -> f64 {
        self.0.y.atan2(self.0.x)
    }

    /// Exact antipode (component-wise negation, no rounding).
    #[inline]
    pub fn opposite(self) -> Self {
        Self(-self.0)
    }
}

#[inline]
fn cross3(o: Vec2, a: Vec2, b: Vec2) -> f64 {
    (a - o).cross(b - o)
}

/// Non-empty compact convex set in canonical vertex form.
///
/// The vertex list is exactly the extreme-point set: re-hulling it is a
/// no-op. One vertex encodes a point, two a segment.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

/// Convex hull of a point set. `None` iff the input is empty: the empty set
/// is never represented as a polygon.
pub fn convex_hull(points: &[Vec2]) -> Option<ConvexPolygon> {
    ConvexPolygon::hull(points)
}

impl ConvexPolygon {
    pub fn singleton(p: Vec2) -> Self {
        assert!(p.is_finite());
        Self { vertices: vec![p] }
    }

    /// Andrew's monotone chain with duplicate and collinear cleanup.
    pub fn hull(points: &[Vec2]) -> Option<Self> {
        for p in points {
            assert!(p.is_finite(), "non-finite point in hull input");
        }
        if points.is_empty() {
            return None;
        }
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup_by(|a, b| (*a - *b).norm() <= DEDUP_EPS);
        if pts.len() == 1 {
            return Some(Self::singleton(pts[0]));
        }
        // Pop when the middle point lies right of, or within COLLINEAR_EPS
        // distance of, the chord to the incoming point. Normalizing the
        // cross product by the chord length keeps the test meaningful when
        // near-duplicate points interleave with genuine vertices.
        let pops = |o: Vec2, a: Vec2, p: Vec2| cross3(o, a, p) <= COLLINEAR_EPS * (p - o).norm();
        let mut lower: Vec<Vec2> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2 && pops(lower[lower.len() - 2], lower[lower.len() - 1], p) {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Vec2> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && pops(upper[upper.len() - 2], upper[upper.len() - 1], p) {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        let mut hull = lower;
        hull.extend(upper);
        if hull.len() == 2 {
            // Fully collinear input: keep the two lexicographic extremes.
            hull.dedup_by(|a, b| (*a - *b).norm() <= DEDUP_EPS);
            if hull.len() == 1 {
                return Some(Self::singleton(hull[0]));
            }
        }
        Some(Self { vertices: hull })
    }

    #[inline]
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Support value `max over the set of <u, .>`.
    pub fn support(&self, u: Direction) -> f64 {
        self.support_along(u.as_vec())
    }

    /// Support along an arbitrary (not necessarily unit) vector.
    pub fn support_along(&self, v: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|&p| p.dot(v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Minkowski sum: hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &ConvexPolygon) -> ConvexPolygon {
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for &a in &self.vertices {
            for &b in &other.vertices {
                sums.push(a + b);
            }
        }
        ConvexPolygon::hull(&sums).expect("sum of non-empty sets is non-empty")
    }

    /// Pointwise scaling. Negative factors reflect through the origin; the
    /// result is re-canonicalized.
    pub fn scale(&self, lambda: f64) -> ConvexPolygon {
        let scaled: Vec<Vec2> = self.vertices.iter().map(|&p| p * lambda).collect();
        ConvexPolygon::hull(&scaled).expect("scaling preserves non-emptiness")
    }

    pub fn translate(&self, t: Vec2) -> ConvexPolygon {
        // Translation preserves canonical order.
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&p| p + t).collect(),
        }
    }

    /// Euclidean distance from a point to the set (zero inside).
    pub fn distance_to(&self, p: Vec2) -> f64 {
        match self.vertices.len() {
            1 => (p - self.vertices[0]).norm(),
            2 => segment_distance(p, self.vertices[0], self.vertices[1]),
            n => {
                let inside = (0..n).all(|i| {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    cross3(a, b, p) >= 0.0
                });
                if inside {
                    return 0.0;
                }
                (0..n)
                    .map(|i| segment_distance(p, self.vertices[i], self.vertices[(i + 1) % n]))
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }

    /// Membership within an absolute tolerance.
    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        self.distance_to(p) <= tol
    }

    /// Whether every vertex of `other` lies in `self` within `tol`.
    pub fn contains_polygon(&self, other: &ConvexPolygon, tol: f64) -> bool {
        other.vertices.iter().all(|&p| self.contains(p, tol))
    }

    /// Hausdorff distance. For convex polygons the suprema are attained at
    /// vertices, so vertex-to-set distances are exact.
    pub fn hausdorff(&self, other: &ConvexPolygon) -> f64 {
        let a = self
            .vertices
            .iter()
            .map(|&p| other.distance_to(p))
            .fold(0.0, f64::max);
        let b = other
            .vertices
            .iter()
            .map(|&p| self.distance_to(p))
            .fold(0.0, f64::max);
        a.max(b)
    }

    /// Largest pairwise vertex distance (zero for a point).
    pub fn diameter(&self) -> f64 {
        let n = self.vertices.len();
        let mut d = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                d = d.max((self.vertices[i] - self.vertices[j]).norm());
            }
        }
        d
    }

    /// Largest coordinate magnitude; used to scale tolerances.
    pub fn max_coord(&self) -> f64 {
        self.vertices
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(0.0, f64::max)
    }

    /// Mean of the vertices. Lies inside the set by convexity.
    pub fn vertex_centroid(&self) -> Vec2 {
        let n = self.vertices.len() as f64;
        let s = self
            .vertices
            .iter()
            .fold(Vec2::ZERO, |acc, &p| acc + p);
        Vec2::new(s.x / n, s.y / n)
    }
}

fn segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Intersection of the boundary lines `<n1,x> = c1`, `<n2,x> = c2`.
fn line_intersection(n1: Vec2, c1: f64, n2: Vec2, c2: f64) -> Option<Vec2> {
    let det = n1.cross(n2);
    if det.abs() <= COLLINEAR_EPS {
        return None;
    }
    Some(Vec2::new(
        (c1 * n2.y - c2 * n1.y) / det,
        (n1.x * c2 - n2.x * c1) / det,
    ))
}

/// Outcome of a halfspace intersection.
#[derive(Clone, Debug, PartialEq)]
pub enum RegionResult {
    Bounded(ConvexPolygon),
    Empty,
    /// The direction set does not positively span the plane, so the feasible
    /// region recedes to infinity (for support data: the direction grid is
    /// too coarse to close the region).
    Unbounded,
}

/// Exact intersection of the halfplanes `<u_k, x> <= c_k`.
///
/// Feasibility of candidate vertices is tested within the absolute slack
/// `tol`. Classification order: contradictory antipodal slabs are reported
/// as `Empty` before the receding-direction test reports `Unbounded`.
pub fn halfspace_intersection(
    normals: &[Direction],
    offsets: &[f64],
    tol: f64,
) -> RegionResult {
    assert_eq!(normals.len(), offsets.len(), "one offset per normal");
    assert!(!normals.is_empty(), "need at least one constraint");

    // Coalesce identical directions, keeping the most restrictive offset.
    let mut classes: Vec<(f64, Vec2, f64)> = Vec::new(); // (angle, normal, offset)
    'outer: for (u, &c) in normals.iter().zip(offsets) {
        let v = u.as_vec();
        let ang = u.angle();
        for cls in classes.iter_mut() {
            if (v - cls.1).norm() <= DEDUP_EPS {
                cls.2 = cls.2.min(c);
                continue 'outer;
            }
        }
        classes.push((ang, v, c));
    }
    classes.sort_by(|a, b| a.0.total_cmp(&b.0));

    // Antipodal slab contradiction: <u,x> <= c_plus and <-u,x> <= c_minus
    // force -c_minus <= <u,x> <= c_plus.
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            if (classes[i].1 + classes[j].1).norm() <= DEDUP_EPS
                && classes[i].2 + classes[j].2 < -tol
            {
                return RegionResult::Empty;
            }
        }
    }

    // Receding direction exists iff some angular gap between consecutive
    // normals reaches pi.
    if classes.len() < 3 {
        return RegionResult::Unbounded;
    }
    let mut max_gap = 0.0f64;
    for i in 0..classes.len() {
        let next = if i + 1 == classes.len() {
            classes[0].0 + std::f64::consts::TAU
        } else {
            classes[i + 1].0
        };
        max_gap = max_gap.max(next - classes[i].0);
    }
    if max_gap >= std::f64::consts::PI - 1e-12 {
        return RegionResult::Unbounded;
    }

    // Bounded case: every vertex of the region is a pairwise boundary
    // intersection, so enumerating feasible candidates is exact.
    let mut candidates: Vec<Vec2> = Vec::new();
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            if let Some(p) = line_intersection(classes[i].1, classes[i].2, classes[j].1, classes[j].2)
            {
                if classes.iter().all(|&(_, n, c)| n.dot(p) <= c + tol) {
                    candidates.push(p);
                }
            }
        }
    }
    match ConvexPolygon::hull(&candidates) {
        Some(poly) => RegionResult::Bounded(poly),
        None => RegionResult::Empty,
    }
}

/// Polyhedral convex cone `K = {x : <n_i, x> >= 0 for all i}` with an
/// explicit (redundant) list of extreme rays used for sampling and for the
/// properness test.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSpec {
    normals: Vec<Vec2>,
    generators: Vec<Vec2>,
}

impl ConeSpec {
    /// Validates that every generator satisfies every halfspace constraint.
    /// Properness is not required here; see [`ConeSpec::is_proper`].
    pub fn new(normals: Vec<Vec2>, generators: Vec<Vec2>) -> Result<Self, GeometryError> {
        if generators.is_empty() {
            return Err(GeometryError::NoGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            let scale = g.norm().max(1.0);
            for n in &normals {
                if n.dot(*g) < -DEFAULT_TOL * scale * n.norm().max(1.0) {
                    return Err(GeometryError::GeneratorOutsideCone(i));
                }
            }
        }
        Ok(Self { normals, generators })
    }

    /// Construction that additionally rejects cones containing a line.
    pub fn new_proper(normals: Vec<Vec2>, generators: Vec<Vec2>) -> Result<Self, GeometryError> {
        let cone = Self::new(normals, generators)?;
        if !cone.is_proper() {
            return Err(GeometryError::ImproperCone);
        }
        Ok(cone)
    }

    /// `{x >= 0, y >= 0}`.
    pub fn first_quadrant() -> Self {
        Self {
            normals: vec![Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)],
            generators: vec![Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)],
        }
    }

    /// Cone spanned by two rays at an angle strictly between 0 and pi.
    pub fn spanned_by(g1: Vec2, g2: Vec2) -> Result<Self, GeometryError> {
        let (g1, g2) = if g1.cross(g2) >= 0.0 { (g1, g2) } else { (g2, g1) };
        let c = g1.cross(g2);
        if c <= COLLINEAR_EPS * g1.norm().max(1.0) * g2.norm().max(1.0) {
            return Err(GeometryError::ImproperCone);
        }
        // Inward normals: rotate the right ray left and the left ray right.
        let n1 = g1.perp();
        let n2 = -(g2.perp());
        Self::new(vec![n1, n2], vec![g1, g2])
    }

    #[inline]
    pub fn normals(&self) -> &[Vec2] {
        &self.normals
    }

    #[inline]
    pub fn generators(&self) -> &[Vec2] {
        &self.generators
    }

    /// Membership within an absolute tolerance on each (non-normalized)
    /// constraint value.
    pub fn contains(&self, x: Vec2, tol: f64) -> bool {
        self.normals.iter().all(|n| n.dot(x) >= -tol)
    }

    /// A cone is proper iff it contains no line: no nonzero generator may
    /// have its negation inside the cone.
    pub fn is_proper(&self) -> bool {
        self.generators.iter().all(|&g| {
            let n = g.norm();
            n <= DEDUP_EPS || !self.contains(-g, DEFAULT_TOL * n.max(1.0))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::CounterRng;

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::new(x, y)
    }

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::hull(&[v(0.0, 0.0), v(1.0, 0.0), v(1.0, 1.0), v(0.0, 1.0)]).unwrap()
    }

    fn square(side: f64) -> ConvexPolygon {
        ConvexPolygon::hull(&[v(0.0, 0.0), v(side, 0.0), v(side, side), v(0.0, side)]).unwrap()
    }

    #[test]
    fn hull_of_empty_input_is_none() {
        assert!(ConvexPolygon::hull(&[]).is_none());
    }

    #[test]
    fn hull_of_singleton() {
        let p = ConvexPolygon::hull(&[v(0.0, 0.0)]).unwrap();
        assert_eq!(p.vertices(), &[v(0.0, 0.0)]);
    }

    #[test]
    fn hull_drops_interior_point() {
        let p =
            ConvexPolygon::hull(&[v(0.0, 0.0), v(1.0, 0.0), v(0.0, 1.0), v(0.2, 0.2)]).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert!(p.vertices().contains(&v(0.0, 0.0)));
        assert!(p.vertices().contains(&v(1.0, 0.0)));
        assert!(p.vertices().contains(&v(0.0, 1.0)));
    }

    #[test]
    fn hull_of_collinear_points_is_segment() {
        let p = ConvexPolygon::hull(&[v(0.0, 0.0), v(2.0, 0.0), v(1.0, 0.0)]).unwrap();
        assert_eq!(p.vertices(), &[v(0.0, 0.0), v(2.0, 0.0)]);
    }

    #[test]
    fn hull_contains_all_inputs() {
        let mut rng = CounterRng::new(11);
        let pts: Vec<Vec2> = (0..100)
            .map(|_| loop {
                let p = v(rng.uniform_in(-1.0, 1.0), rng.uniform_in(-1.0, 1.0));
                if p.norm() <= 1.0 {
                    break p;
                }
            })
            .collect();
        let hull = ConvexPolygon::hull(&pts).unwrap();
        for p in &pts {
            assert!(hull.contains(*p, 1e-9));
        }
    }

    #[test]
    fn hull_is_idempotent() {
        let mut rng = CounterRng::new(5);
        for _ in 0..50 {
            let pts: Vec<Vec2> = (0..12)
                .map(|_| v(rng.uniform_in(-3.0, 3.0), rng.uniform_in(-3.0, 3.0)))
                .collect();
            let h = ConvexPolygon::hull(&pts).unwrap();
            let rehulled = ConvexPolygon::hull(h.vertices()).unwrap();
            assert_eq!(h, rehulled);
        }
    }

    #[test]
    fn minkowski_sum_of_squares() {
        let s = unit_square();
        let sum = s.minkowski_sum(&s);
        assert_eq!(sum, square(2.0));
    }

    #[test]
    fn minkowski_identity_element() {
        let s = unit_square();
        let origin = ConvexPolygon::singleton(Vec2::ZERO);
        assert_eq!(s.minkowski_sum(&origin), s);
    }

    #[test]
    fn minkowski_against_bruteforce_oracle() {
        let mut rng = CounterRng::new(21);
        for _ in 0..25 {
            let a: Vec<Vec2> = (0..5)
                .map(|_| v(rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0)))
                .collect();
            let b: Vec<Vec2> = (0..4)
                .map(|_| v(rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0)))
                .collect();
            let pa = ConvexPolygon::hull(&a).unwrap();
            let pb = ConvexPolygon::hull(&b).unwrap();
            let sum = pa.minkowski_sum(&pb);
            // Every pairwise sum of the raw inputs is inside, every result
            // vertex is a pairwise sum of hull vertices, and support values
            // add along arbitrary directions.
            for &x in &a {
                for &y in &b {
                    assert!(sum.contains(x + y, 1e-9));
                }
            }
            for &p in sum.vertices() {
                let hit = pa.vertices().iter().any(|&x| {
                    pb.vertices().iter().any(|&y| ((x + y) - p).norm() <= 1e-9)
                });
                assert!(hit);
            }
            for k in 0..16 {
                let u = Direction::from_angle(std::f64::consts::TAU * k as f64 / 16.0);
                let lhs = sum.support(u);
                let rhs = pa.support(u) + pb.support(u);
                assert!((lhs - rhs).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn scale_doubles_square() {
        assert_eq!(unit_square().scale(2.0), square(2.0));
    }

    #[test]
    fn scale_by_zero_collapses_to_origin() {
        let p = unit_square().translate(v(3.0, 4.0)).scale(0.0);
        assert_eq!(p, ConvexPolygon::singleton(Vec2::ZERO));
    }

    #[test]
    fn scale_by_minus_one_reflects() {
        let t = ConvexPolygon::hull(&[v(1.0, 0.0), v(0.0, 1.0), v(1.0, 1.0)]).unwrap();
        let r = t.scale(-1.0);
        let expected =
            ConvexPolygon::hull(&[v(-1.0, 0.0), v(0.0, -1.0), v(-1.0, -1.0)]).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn support_of_unit_square() {
        let u = Direction::new(v(1.0, 0.0)).unwrap();
        assert_eq!(unit_square().support(u), 1.0);
    }

    #[test]
    fn support_of_singleton_is_inner_product() {
        let p = ConvexPolygon::singleton(v(1.0, 2.0));
        let u = Direction::new(v(0.0, 1.0)).unwrap();
        assert_eq!(p.support(u), 2.0);
    }

    #[test]
    fn support_matches_dense_boundary_sampling() {
        let mut rng = CounterRng::new(33);
        for _ in 0..10 {
            let pts: Vec<Vec2> = (0..9)
                .map(|_| v(rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0)))
                .collect();
            let poly = ConvexPolygon::hull(&pts).unwrap();
            let u = Direction::from_angle(rng.uniform_in(0.0, std::f64::consts::TAU));
            // Dense samples along each edge, endpoints included.
            let mut best = f64::NEG_INFINITY;
            let n = poly.vertices().len();
            for i in 0..n {
                let a = poly.vertices()[i];
                let b = poly.vertices()[(i + 1) % n];
                for s in 0..=200 {
                    let t = s as f64 / 200.0;
                    let q = a + (b - a) * t;
                    best = best.max(q.dot(u.as_vec()));
                }
            }
            assert!((poly.support(u) - best).abs() <= 1e-9);
        }
    }

    #[test]
    fn hausdorff_of_identical_sets_is_zero() {
        let s = unit_square();
        assert_eq!(s.hausdorff(&s), 0.0);
    }

    #[test]
    fn hausdorff_of_singletons_is_euclidean() {
        let a = ConvexPolygon::singleton(v(0.0, 0.0));
        let b = ConvexPolygon::singleton(v(3.0, 4.0));
        assert!((a.hausdorff(&b) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn hausdorff_of_nested_squares() {
        let d = unit_square().hausdorff(&square(2.0));
        assert!((d - 2.0f64.sqrt()).abs() < 1e-12);
        // Dense-grid brute force over both sup-inf terms.
        let step = 0.05;
        let grid = |side: f64| -> Vec<Vec2> {
            let n = (side / step).round() as i64;
            (0..=n)
                .flat_map(|i| (0..=n).map(move |j| v(i as f64 * step, j as f64 * step)))
                .collect()
        };
        let a = grid(1.0);
        let b = grid(2.0);
        let sup_inf = |xs: &[Vec2], ys: &[Vec2]| -> f64 {
            xs.iter()
                .map(|&x| {
                    ys.iter()
                        .map(|&y| (x - y).norm())
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max)
        };
        let oracle = sup_inf(&a, &b).max(sup_inf(&b, &a));
        assert!((d - oracle).abs() <= step * 1.5);
    }

    #[test]
    fn hausdorff_is_symmetric_nonnegative() {
        let mut rng = CounterRng::new(8);
        for _ in 0..20 {
            let a: Vec<Vec2> = (0..6)
                .map(|_| v(rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0)))
                .collect();
            let b: Vec<Vec2> = (0..6)
                .map(|_| v(rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0)))
                .collect();
            let pa = ConvexPolygon::hull(&a).unwrap();
            let pb = ConvexPolygon::hull(&b).unwrap();
            let d1 = pa.hausdorff(&pb);
            let d2 = pb.hausdorff(&pa);
            assert!(d1 >= 0.0);
            assert!((d1 - d2).abs() < 1e-12);
        }
    }

    #[test]
    fn cone_first_quadrant_membership() {
        let k = ConeSpec::first_quadrant();
        assert!(k.contains(v(1.0, 2.0), 1e-9));
        assert!(!k.contains(v(-1.0, 0.5), 1e-9));
    }

    #[test]
    fn cone_spanned_membership_matches_nonneg_combination() {
        let k = ConeSpec::spanned_by(v(1.0, 0.0), v(1.0, 1.0)).unwrap();
        let g1 = v(1.0, 0.0);
        let g2 = v(1.0, 1.0);
        let mut rng = CounterRng::new(19);
        for _ in 0..200 {
            let p = v(rng.uniform_in(-3.0, 3.0), rng.uniform_in(-3.0, 3.0));
            // Solve p = a g1 + b g2 exactly (2x2 system).
            let det = g1.cross(g2);
            let a = p.cross(g2) / det;
            let b = g1.cross(p) / det;
            let expected = a >= -1e-9 && b >= -1e-9;
            assert_eq!(k.contains(p, 1e-9), expected, "point {p:?}");
        }
        assert!(k.contains(v(2.0, 1.0), 1e-9));
    }

    #[test]
    fn cone_properness() {
        assert!(ConeSpec::first_quadrant().is_proper());
        let halfplane =
            ConeSpec::new(vec![v(0.0, 1.0)], vec![v(1.0, 0.0), v(-1.0, 0.0)]).unwrap();
        assert!(!halfplane.is_proper());
        let plane = ConeSpec::new(
            vec![],
            vec![v(1.0, 0.0), v(-1.0, 0.0), v(0.0, 1.0), v(0.0, -1.0)],
        )
        .unwrap();
        assert!(!plane.is_proper());
    }

    #[test]
    fn cone_rejects_generator_outside() {
        let err = ConeSpec::new(
            vec![v(1.0, 0.0), v(0.0, 1.0)],
            vec![v(1.0, 0.0), v(-1.0, 0.0)],
        )
        .unwrap_err();
        assert_eq!(err, GeometryError::GeneratorOutsideCone(1));
    }

    #[test]
    fn cone_closed_under_addition_and_scaling() {
        let k = ConeSpec::spanned_by(v(2.0, 1.0), v(-1.0, 3.0)).unwrap();
        let mut rng = CounterRng::new(77);
        let mut sampled = 0;
        while sampled < 100 {
            let x = v(rng.uniform_in(-3.0, 3.0), rng.uniform_in(-3.0, 3.0));
            let y = v(rng.uniform_in(-3.0, 3.0), rng.uniform_in(-3.0, 3.0));
            if !(k.contains(x, 1e-9) && k.contains(y, 1e-9)) {
                continue;
            }
            sampled += 1;
            assert!(k.contains(x + y, 1e-8));
            let lambda = rng.uniform_in(0.0, 5.0);
            assert!(k.contains(x * lambda, 1e-8));
        }
    }

    #[test]
    fn halfspace_intersection_unit_square() {
        let normals = vec![
            Direction::new(v(1.0, 0.0)).unwrap(),
            Direction::new(v(-1.0, 0.0)).unwrap(),
            Direction::new(v(0.0, 1.0)).unwrap(),
            Direction::new(v(0.0, -1.0)).unwrap(),
        ];
        let offsets = vec![1.0, 0.0, 1.0, 0.0];
        match halfspace_intersection(&normals, &offsets, 1e-9) {
            RegionResult::Bounded(p) => assert_eq!(p, unit_square()),
            other => panic!("expected bounded square, got {other:?}"),
        }
    }

    #[test]
    fn halfspace_intersection_contradictory_slabs() {
        let normals = vec![
            Direction::new(v(1.0, 0.0)).unwrap(),
            Direction::new(v(-1.0, 0.0)).unwrap(),
        ];
        let offsets = vec![-1.0, -1.0];
        assert_eq!(
            halfspace_intersection(&normals, &offsets, 1e-9),
            RegionResult::Empty
        );
    }

    #[test]
    fn halfspace_intersection_wedge_is_unbounded() {
        let normals = vec![
            Direction::new(v(-1.0, 0.0)).unwrap(),
            Direction::new(v(0.0, -1.0)).unwrap(),
        ];
        let offsets = vec![0.0, 0.0];
        assert_eq!(
            halfspace_intersection(&normals, &offsets, 1e-9),
            RegionResult::Unbounded
        );
    }

    #[test]
    fn halfspace_intersection_from_support_data() {
        let mut rng = CounterRng::new(101);
        for _ in 0..20 {
            let pts: Vec<Vec2> = (0..3)
                .map(|_| v(rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0)))
                .collect();
            let tri = ConvexPolygon::hull(&pts).unwrap();
            let normals: Vec<Direction> = (0..16)
                .map(|k| Direction::from_angle(std::f64::consts::TAU * k as f64 / 16.0))
                .collect();
            let offsets: Vec<f64> = normals.iter().map(|&u| tri.support(u)).collect();
            match halfspace_intersection(&normals, &offsets, 1e-9) {
                RegionResult::Bounded(p) => {
                    assert!(p.contains_polygon(&tri, 1e-9));
                    for (u, c) in normals.iter().zip(&offsets) {
                        assert!((p.support(*u) - c).abs() <= 1e-9);
                    }
                }
                other => panic!("expected bounded region, got {other:?}"),
            }
        }
    }

    #[test]
    fn direction_rejects_non_unit() {
        assert!(Direction::new(v(1.0, 1.0)).is_err());
        assert!(Direction::normalized(Vec2::ZERO).is_err());
        let d = Direction::normalized(v(3.0, 4.0)).unwrap();
        assert!((d.as_vec().norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn support_additivity_and_homogeneity() {
        let mut rng = CounterRng::new(55);
        for _ in 0..40 {
            let a: Vec<Vec2> = (0..7)
                .map(|_| v(rng.uniform_in(-3.0, 3.0), rng.uniform_in(-3.0, 3.0)))
                .collect();
            let b: Vec<Vec2> = (0..7)
                .map(|_| v(rng.uniform_in(-3.0, 3.0), rng.uniform_in(-3.0, 3.0)))
                .collect();
            let pa = ConvexPolygon::hull(&a).unwrap();
            let pb = ConvexPolygon::hull(&b).unwrap();
            let sum = pa.minkowski_sum(&pb);
            let u = Direction::from_angle(rng.uniform_in(0.0, std::f64::consts::TAU));
            assert!((sum.support(u) - pa.support(u) - pb.support(u)).abs() <= 1e-9);
            let lambda = rng.uniform_in(0.01, 4.0);
            assert!((pa.scale(lambda).support(u) - lambda * pa.support(u)).abs() <= 1e-9);
        }
    }
}
