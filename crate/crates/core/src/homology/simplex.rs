//! Simplices and closure-complete simplicial complexes.

use std::collections::BTreeSet;

use crate::{Error, Result};

/// A k-simplex, stored as its strictly increasing vertex tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<usize>,
}

impl Simplex {
    /// Builds a simplex from arbitrary vertex ids; sorts them and rejects
    /// duplicates.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Domain("a simplex needs at least one vertex".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!(
                "repeated vertex in simplex {vertices:?}"
            )));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Dimension k = vertex count - 1.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The (k-1)-faces in omitted-vertex order: face `i` omits vertex `i`.
    pub fn faces(&self) -> Vec<Simplex> {
        (0..self.vertices.len())
            .map(|omit| {
                let vertices = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != omit)
                    .map(|(_, v)| *v)
                    .collect();
                Simplex { vertices }
            })
            .collect()
    }
}

/// A closure-complete set of simplices, grouped and sorted by dimension.
///
/// Every face of every member simplex is itself a member; `BTreeSet`
/// storage keeps each dimension's simplices in lexicographic vertex order,
/// which fixes the row/column order of every matrix derived from the
/// complex.
#[derive(Debug, Clone, Default)]
pub struct SimplicialComplex {
    by_dim: Vec<BTreeSet<Simplex>>,
}

impl SimplicialComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds the closure of a set of maximal simplices.
    pub fn from_maximal<I>(maximal: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut complex = Self::new();
        for vertices in maximal {
            complex.insert(Simplex::new(vertices)?);
        }
        Ok(complex)
    }

    /// Inserts a simplex together with all of its faces.
    pub fn insert(&mut self, simplex: Simplex) {
        let dim = simplex.dim();
        if self.by_dim.len() <= dim {
            self.by_dim.resize_with(dim + 1, BTreeSet::new);
        }
        if self.by_dim[dim].contains(&simplex) {
            return;
        }
        if dim > 0 {
            for face in simplex.faces() {
                self.insert(face);
            }
        }
        self.by_dim[dim].insert(simplex);
    }

    /// Highest dimension with at least one simplex, or `None` when empty.
    pub fn max_dim(&self) -> Option<usize> {
        (0..self.by_dim.len()).rev().find(|&d| !self.by_dim[d].is_empty())
    }

    /// The k-simplices in lexicographic order.
    pub fn simplices(&self, dim: usize) -> impl Iterator<Item = &Simplex> {
        self.by_dim.get(dim).into_iter().flatten()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.by_dim.get(dim).map(|s| s.len()).unwrap_or(0)
    }

    /// Position of a simplex within its dimension's lexicographic order.
    pub fn index_of(&self, simplex: &Simplex) -> Option<usize> {
        self.by_dim
            .get(simplex.dim())?
            .iter()
            .position(|s| s == simplex)
    }

    /// Euler characteristic `Σ (-1)^k N_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }
}
