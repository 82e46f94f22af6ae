//! Exact simplicial homology over the integers.
//!
//! This is the small-scale oracle: signed boundary operators, Hodge
//! Laplacians, and Betti numbers by exact rank. Nothing here is meant for
//! point clouds beyond a few hundred simplices; the persistence engine
//! covers that regime and is checked against this module.

use crate::{Error, Result};

use super::simplex::SimplicialComplex;

/// Dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank over the rationals.
    ///
    /// Fraction-free (Bareiss) elimination in `i128` for matrices up to
    /// 500×500; larger matrices fall back to floating-point elimination
    /// with pivot tolerance 1e-8.
    pub fn rank(&self) -> usize {
        if self.rows.max(self.cols) <= 500 {
            self.rank_bareiss()
        } else {
            self.rank_float(1e-8)
        }
    }

    fn rank_bareiss(&self) -> usize {
        let mut a: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as i128).collect())
            .collect();
        let mut rank = 0;
        let mut prev_pivot: i128 = 1;
        let mut row = 0;
        for col in 0..self.cols {
            let pivot_row = (row..self.rows).find(|&r| a[r][col] != 0);
            let Some(p) = pivot_row else { continue };
            a.swap(row, p);
            let pivot = a[row][col];
            for r in (row + 1)..self.rows {
                for c in (col + 1)..self.cols {
                    a[r][c] = (pivot * a[r][c] - a[r][col] * a[row][c]) / prev_pivot;
                }
                a[r][col] = 0;
            }
            prev_pivot = pivot;
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    fn rank_float(&self, tol: f64) -> usize {
        let mut a: Vec<Vec<f64>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as f64).collect())
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.cols {
            let pivot_row = (row..self.rows)
                .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()));
            let Some(p) = pivot_row else { break };
            if a[p][col].abs() <= tol {
                continue;
            }
            a.swap(row, p);
            let (upper, lower) = a.split_at_mut(row + 1);
            let pivot_row = &upper[row];
            for below in lower.iter_mut() {
                let factor = below[col] / pivot_row[col];
                for (x, &p) in below[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= factor * p;
                }
            }
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }
}

/// Signed boundary operator, rows indexed by (k-1)-simplices and columns
/// by k-simplices of the complex, both in lexicographic order.
pub type BoundaryMatrix = IntMatrix;

/// The boundary operator `B_k` of a complex.
///
/// Entry `(i, j)` is `(-1)^p` when the i-th (k-1)-simplex is the face of
/// the j-th k-simplex obtained by omitting its vertex at position `p`, and
/// 0 otherwise. For `k = 0` the matrix has zero rows (the boundary of a
/// vertex is empty); `k` beyond the complex dimension is a domain error.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> Result<BoundaryMatrix> {
    let max_dim = complex
        .max_dim()
        .ok_or_else(|| Error::Domain("empty complex has no boundary operators".into()))?;
    if k > max_dim + 1 {
        return Err(Error::Domain(format!(
            "dimension {k} out of range for a complex of dimension {max_dim}"
        )));
    }
    let rows = if k == 0 { 0 } else { complex.count(k - 1) };
    let cols = complex.count(k);
    let mut b = IntMatrix::zeros(rows, cols);
    if k == 0 {
        return Ok(b);
    }
    for (j, simplex) in complex.simplices(k).enumerate() {
        for (omit, face) in simplex.faces().iter().enumerate() {
            let i = complex
                .index_of(face)
                .expect("closure property guarantees every face is present");
            let sign = if omit % 2 == 0 { 1 } else { -1 };
            b.set(i, j, sign);
        }
    }
    Ok(b)
}

/// The Hodge Laplacian `L_k = B_{k+1} B_{k+1}ᵀ + B_kᵀ B_k`, with absent
/// boundary operators treated as zero maps.
pub fn hodge_laplacian(complex: &SimplicialComplex, k: usize) -> Result<IntMatrix> {
    let n_k = complex.count(k);
    let mut l = IntMatrix::zeros(n_k, n_k);
    if n_k == 0 {
        return Ok(l);
    }
    if complex.count(k + 1) > 0 {
        let up = boundary_matrix(complex, k + 1)?;
        l = l.add(&up.mul(&up.transpose()));
    }
    if k > 0 {
        let down = boundary_matrix(complex, k)?;
        l = l.add(&down.transpose().mul(&down));
    }
    Ok(l)
}

/// The Betti number `β_k`: the kernel dimension of the Hodge Laplacian,
/// evaluated through the rank-nullity identity
/// `β_k = N_k - rank B_k - rank B_{k+1}`.
pub fn betti(complex: &SimplicialComplex, k: usize) -> Result<usize> {
    let n_k = complex.count(k);
    if n_k == 0 {
        return Ok(0);
    }
    let rank_down = if k == 0 {
        0
    } else {
        boundary_matrix(complex, k)?.rank()
    };
    let rank_up = if complex.count(k + 1) == 0 {
        0
    } else {
        boundary_matrix(complex, k + 1)?.rank()
    };
    Ok(n_k - rank_down - rank_up)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The running example: 6 vertices, edges 01 02 12 13 23 34, one
    /// triangle 012, and vertex 5 isolated. Two components, one hole.
    fn two_component_complex() -> SimplicialComplex {
        SimplicialComplex::from_maximal(vec![
            vec![0, 1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![3, 4],
            vec![5],
        ])
        .unwrap()
    }

    fn tetrahedron_boundary() -> SimplicialComplex {
        SimplicialComplex::from_maximal(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ])
        .unwrap()
    }

    #[test]
    fn boundary_of_single_edge() {
        let k = SimplicialComplex::from_maximal(vec![vec![0, 1]]).unwrap();
        let b1 = boundary_matrix(&k, 1).unwrap();
        assert_eq!((b1.rows(), b1.cols()), (2, 1));
        // ∂[v0,v1] = v1 - v0
        assert_eq!(b1.get(0, 0), -1);
        assert_eq!(b1.get(1, 0), 1);
    }

    #[test]
    fn boundary_composition_vanishes_on_triangle() {
        let k = SimplicialComplex::from_maximal(vec![vec![0, 1, 2]]).unwrap();
        let b1 = boundary_matrix(&k, 1).unwrap();
        let b2 = boundary_matrix(&k, 2).unwrap();
        assert!(b1.mul(&b2).is_zero());
    }

    #[test]
    fn two_component_complex_shapes() {
        let k = two_component_complex();
        let b1 = boundary_matrix(&k, 1).unwrap();
        let b2 = boundary_matrix(&k, 2).unwrap();
        assert_eq!((b1.rows(), b1.cols()), (6, 6));
        assert_eq!((b2.rows(), b2.cols()), (6, 1));
    }

    #[test]
    fn graph_laplacian_of_path() {
        let k = SimplicialComplex::from_maximal(vec![vec![0, 1]]).unwrap();
        let l0 = hodge_laplacian(&k, 0).unwrap();
        assert_eq!(l0.get(0, 0), 1);
        assert_eq!(l0.get(0, 1), -1);
        assert_eq!(l0.get(1, 0), -1);
        assert_eq!(l0.get(1, 1), 1);
    }

    #[test]
    fn laplacian_of_isolated_vertices_is_zero() {
        let k = SimplicialComplex::from_maximal(vec![vec![0], vec![1]]).unwrap();
        let l0 = hodge_laplacian(&k, 0).unwrap();
        assert_eq!((l0.rows(), l0.cols()), (2, 2));
        assert!(l0.is_zero());
    }

    #[test]
    fn l1_rank_deficiency_matches_beta_1() {
        let k = two_component_complex();
        let l1 = hodge_laplacian(&k, 1).unwrap();
        assert_eq!((l1.rows(), l1.cols()), (6, 6));
        // independent elimination oracle over floats
        assert_eq!(l1.rank_float(1e-8), 5);
        assert_eq!(l1.rank(), 5);
        assert_eq!(betti(&k, 1).unwrap(), 1);
    }

    #[test]
    fn betti_numbers_of_reference_complexes() {
        let k = two_component_complex();
        assert_eq!(betti(&k, 0).unwrap(), 2);
        assert_eq!(betti(&k, 1).unwrap(), 1);
        assert_eq!(betti(&k, 2).unwrap(), 0);

        let hollow = SimplicialComplex::from_maximal(vec![vec![0, 1], vec![0, 2], vec![1, 2]])
            .unwrap();
        assert_eq!(betti(&hollow, 0).unwrap(), 1);
        assert_eq!(betti(&hollow, 1).unwrap(), 1);

        let sphere = tetrahedron_boundary();
        assert_eq!(betti(&sphere, 0).unwrap(), 1);
        assert_eq!(betti(&sphere, 1).unwrap(), 0);
        assert_eq!(betti(&sphere, 2).unwrap(), 1);
    }

    #[test]
    fn solid_tetrahedron_fills_the_void() {
        let k = SimplicialComplex::from_maximal(vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(betti(&k, 0).unwrap(), 1);
        assert_eq!(betti(&k, 1).unwrap(), 0);
        assert_eq!(betti(&k, 2).unwrap(), 0);
    }

    #[test]
    fn boundary_matrix_rejects_out_of_range_dim() {
        let k = SimplicialComplex::from_maximal(vec![vec![0, 1]]).unwrap();
        assert!(boundary_matrix(&k, 5).is_err());
    }

    /// Strategy: a handful of random maximal simplices over <= 8 vertices.
    fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
        proptest::collection::vec(
            proptest::collection::btree_set(0usize..8, 1..=4),
            1..6,
        )
        .prop_map(|maximal| {
            SimplicialComplex::from_maximal(
                maximal.into_iter().map(|s| s.into_iter().collect()),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn boundary_of_boundary_is_zero(k in random_complex()) {
            let max_dim = k.max_dim().unwrap();
            for dim in 1..=max_dim {
                let lower = boundary_matrix(&k, dim).unwrap();
                let upper = boundary_matrix(&k, dim + 1).unwrap();
                if upper.cols() > 0 {
                    prop_assert!(lower.mul(&upper).is_zero(), "B_{} ∘ B_{} != 0", dim, dim + 1);
                }
            }
        }

        #[test]
        fn euler_characteristic_equals_alternating_betti_sum(k in random_complex()) {
            let max_dim = k.max_dim().unwrap();
            let mut betti_sum = 0i64;
            for dim in 0..=max_dim {
                let b = betti(&k, dim).unwrap() as i64;
                betti_sum += if dim % 2 == 0 { b } else { -b };
            }
            prop_assert_eq!(k.euler_characteristic(), betti_sum);
        }
    }
}
