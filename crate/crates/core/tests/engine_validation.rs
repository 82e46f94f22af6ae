//! Cross-validation of the persistence engine against the exact homology
//! oracle, plus the diagram-stability smoke check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ttda::embed::{distance_matrix, enclosing_radius, DistanceMatrix, PointCloud};
use ttda::homology::{betti, betti_curve, rips_persistence, SimplicialComplex};
use ttda::wasserstein::diagram_distance;

fn random_cloud(rng: &mut ChaCha8Rng, n: usize) -> PointCloud {
    PointCloud::from_rows(
        (0..n)
            .map(|_| vec![rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)])
            .collect(),
    )
    .unwrap()
}

/// The exact Rips 2-skeleton at radius `r`.
fn rips_complex_at(m: &DistanceMatrix, r: f64) -> SimplicialComplex {
    let n = m.size();
    let mut maximal: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if m.get(i, j) <= r {
                maximal.push(vec![i, j]);
            }
            for k in (j + 1)..n {
                if m.get(i, j) <= r && m.get(i, k) <= r && m.get(j, k) <= r {
                    maximal.push(vec![i, j, k]);
                }
            }
        }
    }
    SimplicialComplex::from_maximal(maximal).unwrap()
}

#[test]
fn betti_curves_match_exact_oracle_on_small_clouds() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..25 {
        let n = rng.random_range(2..=10);
        let cloud = random_cloud(&mut rng, n);
        let m = distance_matrix(&cloud);
        let diagram = rips_persistence(&m, None).unwrap();
        let enclosing = enclosing_radius(&m);
        for _ in 0..20 {
            let r = rng.random_range(0.0..enclosing * 1.05);
            let complex = rips_complex_at(&m, r);
            for dim in [0u8, 1] {
                assert_eq!(
                    betti_curve(&diagram, dim, r),
                    betti(&complex, dim as usize).unwrap(),
                    "dim {dim} at r = {r} on {n} points"
                );
            }
        }
    }
}

#[test]
fn small_perturbations_move_the_diagram_slightly() {
    // coarse stability bound: each point moves by <= eps per coordinate,
    // so every pairwise distance moves by <= 2 eps and the dim-1 diagrams
    // stay within n * 2 eps in Wasserstein-1
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 50;
    let eps = 1e-3;
    let points: Vec<Vec<f64>> = (0..n)
        .map(|_| vec![rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)])
        .collect();
    let perturbed: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            vec![
                p[0] + rng.random_range(-eps..eps),
                p[1] + rng.random_range(-eps..eps),
            ]
        })
        .collect();
    let diagram = |pts: Vec<Vec<f64>>| {
        let cloud = PointCloud::from_rows(pts).unwrap();
        rips_persistence(&distance_matrix(&cloud), None)
            .unwrap()
            .restrict_finite(1)
    };
    let before = diagram(points);
    let after = diagram(perturbed);
    let moved = diagram_distance(&before, &after).unwrap();
    let bound = n as f64 * 2.0 * eps;
    assert!(
        moved <= bound,
        "diagram moved {moved} under eps = {eps}, bound {bound}"
    );
}
