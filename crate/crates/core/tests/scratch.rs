use fuzzy_levy::embedding::{embed, SphereGrid};
use fuzzy_levy::fuzzy::AlphaGrid;
use fuzzy_levy::geometry::{ConvexPolygon, Vec2};
use fuzzy_levy::rng::CounterRng;
use fuzzy_levy::sample;

#[test]
fn debug_candidates() {
    let mut rng = CounterRng::new(304);
    let g = AlphaGrid::uniform(6);
    let s = SphereGrid::new(48).unwrap();
    for trial in 0..59 {
        let x = sample::random_fuzzy(&mut rng, &g, Vec2::new(0.0, 0.0), 4.0);
        if trial < 58 {
            continue;
        }
        let f = embed(&x, &s);
        let row: Vec<f64> = (0..48).map(|k| f.value(3, k)).collect();
        let dirs: Vec<Vec2> = s.directions().iter().map(|d| d.as_vec()).collect();
        // candidate from adjacent pair (24, 25)
        let (i, j) = (24usize, 25usize);
        let (n1, n2) = (dirs[i], dirs[j]);
        let det = n1.cross(n2);
        let p = Vec2::new(
            (row[i] * n2.y - row[j] * n1.y) / det,
            (n1.x * row[j] - n2.x * row[i]) / det,
        );
        println!("pair(24,25) candidate: {p:?}");
        let worst = (0..48)
            .map(|k| dirs[k].dot(p) - row[k])
            .fold(f64::NEG_INFINITY, f64::max);
        println!("worst constraint violation of that candidate: {worst:.3e}");
        // all feasible candidates sorted by proximity to p
        let mut cands: Vec<Vec2> = Vec::new();
        for a in 0..48 {
            for b in (a + 1)..48 {
                let (na, nb) = (dirs[a], dirs[b]);
                let d = na.cross(nb);
                if d.abs() <= 1e-12 {
                    continue;
                }
                let q = Vec2::new(
                    (row[a] * nb.y - row[b] * na.y) / d,
                    (na.x * row[b] - nb.x * row[a]) / d,
                );
                if (0..48).all(|k| dirs[k].dot(q) <= row[k] + 1e-9) {
                    cands.push(q);
                }
            }
        }
        let hull = ConvexPolygon::hull(&cands).unwrap();
        println!("hull {} verts from {} candidates", hull.vertices().len(), cands.len());
        println!("distance of candidate p to hull: {:.3e}", hull.distance_to(p));
        let mut near: Vec<Vec2> = cands
            .iter()
            .copied()
            .filter(|q| (*q - p).norm() < 0.01)
            .collect();
        near.sort_by(|a, b| a.y.total_cmp(&b.y));
        println!("candidates near p: {near:?}");
    }
}
