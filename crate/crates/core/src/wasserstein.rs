//! Wasserstein distance between persistence diagrams.
//!
//! Order-1 Wasserstein with the L∞ ground metric and orthogonal diagonal
//! projection: each diagram is augmented with one diagonal slot per
//! feature of the other diagram, diagonal-to-diagonal transport is free,
//! and the minimum-cost perfect matching on the augmented square matrix is
//! found by an exact Hungarian solver with potentials. Matching a feature
//! `(b, d)` to the diagonal costs `(d - b) / 2`, the L∞ distance to its
//! projection `((b+d)/2, (b+d)/2)`.

use crate::homology::{Feature, PersistenceDiagram};
use crate::{Error, Result};

/// One side of a matched pair: a real feature or a diagonal projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatchedPoint {
    Feature { birth: f64, death: f64 },
    /// The orthogonal projection `((b+d)/2, (b+d)/2)` of the partner.
    Diagonal { birth: f64, death: f64 },
}

/// An optimal augmented matching between two diagrams.
#[derive(Debug, Clone)]
pub struct Matching {
    /// Pairs touching at least one real feature, sorted lexicographically.
    /// Every finite feature of both diagrams appears exactly once.
    pub pairs: Vec<(MatchedPoint, MatchedPoint)>,
    pub total_cost: f64,
}

/// The Wasserstein distance between two diagrams of finite same-dimension
/// features.
///
/// Infinite features are the caller's responsibility to filter (see
/// [`PersistenceDiagram::restrict_finite`]); their presence is an error,
/// as is mixing homology dimensions. Two empty diagrams are at distance 0.
pub fn diagram_distance(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> Result<f64> {
    let (a, b) = canonical_order(d1, d2)?;
    let (cost, _) = solve(a, b);
    Ok(cost)
}

/// The matching realizing [`diagram_distance`], with deterministic,
/// lexicographically sorted pair order.
pub fn optimal_matching(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> Result<Matching> {
    let (a, b) = canonical_order(d1, d2)?;
    let swapped = !std::ptr::eq(a, d1);
    let (total_cost, assignment) = solve(a, b);
    let (fa, fb) = (a.features(), b.features());
    let n1 = fa.len();
    let n2 = fb.len();
    let mut pairs = Vec::new();
    for (row, col) in assignment.iter().enumerate() {
        let left = if row < n1 {
            Some(fa[row])
        } else {
            None // diagonal slot on the first side
        };
        let right = if *col < n2 { Some(fb[*col]) } else { None };
        let pair = match (left, right) {
            (Some(f), Some(g)) => (feature_point(&f), feature_point(&g)),
            (Some(f), None) => (feature_point(&f), diagonal_point(&f)),
            (None, Some(g)) => (diagonal_point(&g), feature_point(&g)),
            (None, None) => continue, // diagonal-to-diagonal carries nothing
        };
        let pair = if swapped { (pair.1, pair.0) } else { pair };
        pairs.push(pair);
    }
    pairs.sort_by(|x, y| pair_key(x).partial_cmp(&pair_key(y)).unwrap());
    Ok(Matching { pairs, total_cost })
}

fn feature_point(f: &Feature) -> MatchedPoint {
    MatchedPoint::Feature {
        birth: f.birth,
        death: f.death,
    }
}

fn diagonal_point(f: &Feature) -> MatchedPoint {
    let mid = (f.birth + f.death) / 2.0;
    MatchedPoint::Diagonal {
        birth: mid,
        death: mid,
    }
}

fn pair_key(p: &(MatchedPoint, MatchedPoint)) -> [f64; 4] {
    let coords = |m: &MatchedPoint| match m {
        MatchedPoint::Feature { birth, death } | MatchedPoint::Diagonal { birth, death } => {
            [*birth, *death]
        }
    };
    let a = coords(&p.0);
    let b = coords(&p.1);
    [a[0], a[1], b[0], b[1]]
}

/// Validates both diagrams and orders the pair canonically so the distance
/// is exactly symmetric in its arguments.
fn canonical_order<'a>(
    d1: &'a PersistenceDiagram,
    d2: &'a PersistenceDiagram,
) -> Result<(&'a PersistenceDiagram, &'a PersistenceDiagram)> {
    let mut dims: Option<u8> = None;
    for f in d1.features().iter().chain(d2.features()) {
        if f.is_infinite() {
            return Err(Error::InfiniteFeature);
        }
        match dims {
            None => dims = Some(f.dim),
            Some(d) if d != f.dim => {
                return Err(Error::Domain(format!(
                    "diagrams mix homology dimensions {d} and {}; restrict to one dimension",
                    f.dim
                )))
            }
            _ => {}
        }
    }
    let key = |d: &PersistenceDiagram| {
        d.features()
            .iter()
            .flat_map(|f| [f.birth, f.death])
            .collect::<Vec<f64>>()
    };
    if key(d2) < key(d1) {
        Ok((d2, d1))
    } else {
        Ok((d1, d2))
    }
}

/// L∞ distance between two features seen as plane points.
fn ground(f: &Feature, g: &Feature) -> f64 {
    (f.birth - g.birth).abs().max((f.death - g.death).abs())
}

fn diagonal_cost(f: &Feature) -> f64 {
    (f.death - f.birth) / 2.0
}

/// Builds the augmented cost matrix and solves the assignment exactly.
/// Returns the total cost and the column assigned to each row.
fn solve(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> (f64, Vec<usize>) {
    let fa = d1.features();
    let fb = d2.features();
    let n1 = fa.len();
    let n2 = fb.len();
    let n = n1 + n2;
    if n == 0 {
        return (0.0, Vec::new());
    }
    let cost = |i: usize, j: usize| -> f64 {
        match (i < n1, j < n2) {
            (true, true) => ground(&fa[i], &fb[j]),
            (true, false) => diagonal_cost(&fa[i]),
            (false, true) => diagonal_cost(&fb[j]),
            (false, false) => 0.0,
        }
    };
    let assignment = hungarian(n, &cost);
    // canonical summation order keeps the total independent of the
    // solver's internal tie-breaking
    let mut costs: Vec<f64> = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| cost(i, j))
        .collect();
    costs.sort_by(|a, b| a.total_cmp(b));
    (costs.iter().sum(), assignment)
}

/// Exact minimum-cost perfect assignment on an `n × n` cost matrix
/// (Hungarian algorithm with potentials, O(n³)).
fn hungarian(n: usize, cost: &dyn Fn(usize, usize) -> f64) -> Vec<usize> {
    // 1-based arrays; column 0 is the virtual staging column, row value 0
    // in `p` means "unmatched".
    let mut u = vec![0.0_f64; n + 1];
    let mut v = vec![0.0_f64; n + 1];
    let mut p = vec![0_usize; n + 1];
    let mut way = vec![0_usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0_usize;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0_usize; n];
    for j in 1..=n {
        if p[j] != 0 {
            assignment[p[j] - 1] = j - 1;
        }
    }
    assignment
}
