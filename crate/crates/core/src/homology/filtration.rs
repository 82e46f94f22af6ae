//! Explicit Vietoris–Rips filtrations up to dimension 2.

use crate::embed::{enclosing_radius, DistanceMatrix};
use crate::{Error, Result};

/// A simplex of dimension <= 2 tagged with its filtration value.
#[derive(Debug, Clone, PartialEq)]
pub struct FilteredSimplex {
    /// Strictly increasing vertex ids; length 1, 2 or 3.
    pub vertices: Vec<u32>,
    /// Radius at which the simplex enters the complex.
    pub value: f64,
}

impl FilteredSimplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A Rips filtration: simplices sorted by `(value, dimension, vertex
/// tuple)` so that faces appear no later than cofaces.
#[derive(Debug, Clone)]
pub struct Filtration {
    simplices: Vec<FilteredSimplex>,
    vertex_count: usize,
}

impl Filtration {
    /// Wraps a pre-built simplex list after sorting it into filtration
    /// order. Face values are validated lazily by [`super::persistence`].
    pub fn new(mut simplices: Vec<FilteredSimplex>, vertex_count: usize) -> Self {
        simplices.sort_by(|a, b| {
            a.value
                .total_cmp(&b.value)
                .then(a.vertices.len().cmp(&b.vertices.len()))
                .then_with(|| a.vertices.cmp(&b.vertices))
        });
        Self {
            simplices,
            vertex_count,
        }
    }

    pub fn simplices(&self) -> &[FilteredSimplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }
}

/// Builds the Rips filtration of a distance matrix up to dimension 2.
///
/// Every vertex enters at value 0; an edge enters at its pairwise distance
/// when that distance is within the threshold; a triangle enters at the
/// maximum of its three edge values. The default threshold (pass `None`)
/// is the enclosing radius, beyond which the complex is a cone and carries
/// no further 1-dimensional homology.
pub fn rips_filtration(m: &DistanceMatrix, threshold: Option<f64>) -> Result<Filtration> {
    let n = m.size();
    if n == 0 {
        return Err(Error::Domain("cannot build a filtration on zero points".into()));
    }
    let threshold = match threshold {
        Some(t) if t.is_nan() || t <= 0.0 => {
            return Err(Error::Domain(format!("threshold must be > 0, got {t}")))
        }
        Some(t) => t,
        None => enclosing_radius(m).max(0.0),
    };

    let mut simplices: Vec<FilteredSimplex> = (0..n)
        .map(|v| FilteredSimplex {
            vertices: vec![v as u32],
            value: 0.0,
        })
        .collect();

    for i in 0..n {
        for j in (i + 1)..n {
            let d = m.get(i, j);
            if d <= threshold {
                simplices.push(FilteredSimplex {
                    vertices: vec![i as u32, j as u32],
                    value: d,
                });
            }
        }
    }

    for i in 0..n {
        for j in (i + 1)..n {
            let dij = m.get(i, j);
            if dij > threshold {
                continue;
            }
            for k in (j + 1)..n {
                let dik = m.get(i, k);
                let djk = m.get(j, k);
                let value = dij.max(dik).max(djk);
                if value <= threshold {
                    simplices.push(FilteredSimplex {
                        vertices: vec![i as u32, j as u32, k as u32],
                        value,
                    });
                }
            }
        }
    }

    Ok(Filtration::new(simplices, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{distance_matrix, PointCloud};

    fn matrix(points: &[[f64; 2]]) -> DistanceMatrix {
        let pc = PointCloud::from_rows(points.iter().map(|p| p.to_vec()).collect()).unwrap();
        distance_matrix(&pc)
    }

    #[test]
    fn two_points_one_edge() {
        let m = matrix(&[[0.0, 0.0], [1.0, 0.0]]);
        let f = rips_filtration(&m, Some(2.0)).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.simplices()[2].vertices, vec![0, 1]);
        assert_eq!(f.simplices()[2].value, 1.0);
    }

    #[test]
    fn unit_square_full_filtration() {
        let m = matrix(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]);
        let f = rips_filtration(&m, Some(2.0_f64.sqrt())).unwrap();
        let by_dim = |d: usize| f.simplices().iter().filter(|s| s.dim() == d).count();
        assert_eq!(by_dim(0), 4);
        assert_eq!(by_dim(1), 6);
        assert_eq!(by_dim(2), 4);
        let sqrt2 = 2.0_f64.sqrt();
        let unit_edges = f
            .simplices()
            .iter()
            .filter(|s| s.dim() == 1 && (s.value - 1.0).abs() < 1e-12)
            .count();
        let diag_edges = f
            .simplices()
            .iter()
            .filter(|s| s.dim() == 1 && (s.value - sqrt2).abs() < 1e-12)
            .count();
        assert_eq!((unit_edges, diag_edges), (4, 2));
        assert!(f
            .simplices()
            .iter()
            .filter(|s| s.dim() == 2)
            .all(|s| (s.value - sqrt2).abs() < 1e-12));
    }

    #[test]
    fn low_threshold_drops_all_edges() {
        let m = matrix(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]);
        let f = rips_filtration(&m, Some(0.5)).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.simplices().iter().all(|s| s.dim() == 0));
    }

    #[test]
    fn faces_never_follow_cofaces() {
        let m = matrix(&[[0.0, 0.0], [1.0, 0.0], [0.3, 0.9], [1.2, 1.1]]);
        let f = rips_filtration(&m, None).unwrap();
        for (idx, s) in f.simplices().iter().enumerate() {
            if s.dim() == 0 {
                continue;
            }
            for omit in 0..s.vertices.len() {
                let mut face: Vec<u32> = s.vertices.clone();
                face.remove(omit);
                let face_idx = f
                    .simplices()
                    .iter()
                    .position(|c| c.vertices == face)
                    .expect("face present");
                assert!(face_idx < idx, "face after coface");
                assert!(f.simplices()[face_idx].value <= s.value);
            }
        }
    }
}
