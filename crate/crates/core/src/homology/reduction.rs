//! Persistent homology of an explicit filtration.
//!
//! Textbook column reduction of the filtration boundary matrix over the
//! two-element field, processed with the twist/clearing optimization:
//! triangle columns are reduced first, and every edge that shows up as a
//! triangle's pivot is cleared — its own column is known to reduce to zero
//! and is never touched in dimension 1.

use std::collections::HashMap;

use crate::{Error, Result};

use super::diagram::{Feature, PersistenceDiagram};
use super::filtration::Filtration;

/// Sparse GF(2) column: strictly increasing row indices.
type Column = Vec<usize>;

/// Symmetric difference of two sorted index sets.
fn add_columns(a: &[usize], b: &[usize]) -> Column {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Computes the persistence diagram of a Rips-style filtration
/// (dimensions 0–2; dimension-2 simplices serve only to kill
/// dimension-1 classes).
///
/// Fails with an integrity error when a simplex precedes one of its faces
/// or carries a smaller filtration value.
pub fn persistence(filtration: &Filtration) -> Result<PersistenceDiagram> {
    let simplices = filtration.simplices();
    let n = simplices.len();

    // column index of every vertex and edge, plus face-order validation
    let mut vertex_col: HashMap<u32, usize> = HashMap::new();
    let mut edge_col: HashMap<(u32, u32), usize> = HashMap::new();
    let mut boundaries: Vec<Column> = vec![Vec::new(); n];

    for (idx, s) in simplices.iter().enumerate() {
        match s.vertices.as_slice() {
            [v] => {
                vertex_col.insert(*v, idx);
            }
            [u, v] => {
                let mut col = Vec::with_capacity(2);
                for vertex in [u, v] {
                    let face = *vertex_col.get(vertex).ok_or_else(|| {
                        Error::Integrity(format!("edge ({u},{v}) precedes vertex {vertex}"))
                    })?;
                    col.push(face);
                }
                col.sort_unstable();
                edge_col.insert((*u, *v), idx);
                boundaries[idx] = col;
            }
            [u, v, w] => {
                let mut col = Vec::with_capacity(3);
                for pair in [(*u, *v), (*u, *w), (*v, *w)] {
                    let face = *edge_col.get(&pair).ok_or_else(|| {
                        Error::Integrity(format!(
                            "triangle ({u},{v},{w}) precedes edge {pair:?}"
                        ))
                    })?;
                    if simplices[face].value > s.value {
                        return Err(Error::Integrity(format!(
                            "edge {pair:?} enters at {} after its coface at {}",
                            simplices[face].value, s.value
                        )));
                    }
                    col.push(face);
                }
                col.sort_unstable();
                boundaries[idx] = col;
            }
            other => {
                return Err(Error::Integrity(format!(
                    "simplex of unsupported dimension: {other:?}"
                )));
            }
        }
    }

    let mut features = Vec::new();
    let mut cleared = vec![false; n];
    // pivot row -> reduced column index, one map per dimension
    let mut pivot_dim2: HashMap<usize, usize> = HashMap::new();
    let mut pivot_dim1: HashMap<usize, usize> = HashMap::new();
    let mut reduced: Vec<Column> = vec![Vec::new(); n];

    // dimension 2 first, then dimension 1 (the twist)
    for dim in [2usize, 1] {
        let pivots = if dim == 2 {
            &mut pivot_dim2
        } else {
            &mut pivot_dim1
        };
        for idx in 0..n {
            if simplices[idx].dim() != dim || cleared[idx] {
                continue;
            }
            let mut col = boundaries[idx].clone();
            while let Some(&pivot) = col.last() {
                match pivots.get(&pivot) {
                    Some(&other) => col = add_columns(&col, &reduced[other]),
                    None => break,
                }
            }
            if let Some(&pivot) = col.last() {
                pivots.insert(pivot, idx);
                cleared[pivot] = true;
                features.push(Feature {
                    birth: simplices[pivot].value,
                    death: simplices[idx].value,
                    dim: (dim - 1) as u8,
                });
                reduced[idx] = col;
            } else if dim == 1 {
                // positive edge never killed by a triangle: essential class
                features.push(Feature {
                    birth: simplices[idx].value,
                    death: f64::INFINITY,
                    dim: 1,
                });
            }
        }
    }

    // vertices that never died are essential components
    for (idx, s) in simplices.iter().enumerate() {
        if s.dim() == 0 && !cleared[idx] {
            features.push(Feature {
                birth: 0.0,
                death: f64::INFINITY,
                dim: 0,
            });
        }
    }

    Ok(PersistenceDiagram::from_features(features))
}
