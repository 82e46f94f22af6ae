//! Time delay embedding and distance-matrix preparation.
//!
//! A scalar signal `x` becomes a cloud of d-dimensional points
//! `(x[k], x[k+τ], ..., x[k+(d-1)τ])`, one per admissible start index `k`.
//! The cloud's pairwise Euclidean distances feed the Rips filtration in
//! [`crate::homology`].

use crate::sigsynth::Signal;
use crate::{Error, Result};

/// Dimension and delay of a time delay embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingConfig {
    /// Embedding dimension `d ≥ 2`.
    pub dimension: usize,
    /// Delay in whole samples, `τ ≥ 1`.
    pub delay_samples: usize,
    /// Start-index step between consecutive points. 1 (the default) keeps
    /// every raw sample; larger values exist for performance experiments
    /// only.
    pub stride: usize,
}

impl EmbeddingConfig {
    pub fn new(dimension: usize, delay_samples: usize) -> Result<Self> {
        Self::with_stride(dimension, delay_samples, 1)
    }

    pub fn with_stride(dimension: usize, delay_samples: usize, stride: usize) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::Config(format!(
                "embedding dimension must be >= 2, got {dimension}"
            )));
        }
        if delay_samples < 1 {
            return Err(Error::Config("delay must be >= 1 sample".into()));
        }
        if stride < 1 {
            return Err(Error::Config("stride must be >= 1".into()));
        }
        Ok(Self {
            dimension,
            delay_samples,
            stride,
        })
    }

    /// Delay in seconds at the given sample rate.
    pub fn delay_seconds(&self, sample_rate: f64) -> f64 {
        self.delay_samples as f64 / sample_rate
    }
}

/// An ordered list of d-dimensional points, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    coords: Vec<f64>,
    dimension: usize,
}

impl PointCloud {
    pub fn from_rows(points: Vec<Vec<f64>>) -> Result<Self> {
        let dimension = points.first().map(|p| p.len()).unwrap_or(0);
        if dimension == 0 {
            return Err(Error::Domain("point cloud must be non-empty".into()));
        }
        let mut coords = Vec::with_capacity(points.len() * dimension);
        for p in &points {
            if p.len() != dimension {
                return Err(Error::Domain(format!(
                    "inconsistent point dimensions: {} vs {}",
                    p.len(),
                    dimension
                )));
            }
            coords.extend_from_slice(p);
        }
        Ok(Self { coords, dimension })
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dimension
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dimension)
    }

    /// Keeps only the first `n` points. No-op if the cloud is shorter.
    pub fn truncate(&mut self, n: usize) {
        self.coords.truncate(n * self.dimension);
    }

    /// Scales every coordinate by `c`.
    pub fn scale(&mut self, c: f64) {
        for x in &mut self.coords {
            *x *= c;
        }
    }
}

/// Symmetric Euclidean distance matrix, stored as the strict upper
/// triangle in row-major condensed form.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    size: usize,
    upper: Vec<f64>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Distance between points `i` and `j`; zero on the diagonal.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.upper[condensed_index(a, b, self.size)]
    }

    /// Builds a matrix from explicit upper-triangle entries
    /// (`(0,1), (0,2), ..., (n-2,n-1)` order).
    pub fn from_condensed(size: usize, upper: Vec<f64>) -> Result<Self> {
        if size == 0 {
            return Err(Error::Domain("distance matrix must have size >= 1".into()));
        }
        let expected = size * (size - 1) / 2;
        if upper.len() != expected {
            return Err(Error::Domain(format!(
                "expected {expected} condensed entries for size {size}, got {}",
                upper.len()
            )));
        }
        if upper.iter().any(|d| !d.is_finite() || *d < 0.0) {
            return Err(Error::Domain(
                "distances must be finite and non-negative".into(),
            ));
        }
        Ok(Self { size, upper })
    }
}

#[inline]
fn condensed_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Embeds a signal as the point cloud
/// `p_k = (s[k], s[k+τ], ..., s[k+(d-1)τ])`, `k = 0..len - (d-1)τ`.
pub fn delay_embed(s: &Signal, cfg: &EmbeddingConfig) -> Result<PointCloud> {
    let len = s.samples.len();
    let span = (cfg.dimension - 1) * cfg.delay_samples;
    if span >= len {
        let max_tau = (len - 1) / (cfg.dimension - 1);
        return Err(Error::Embedding {
            len,
            dim: cfg.dimension,
            tau: cfg.delay_samples,
            max_tau,
        });
    }
    let n = len - span;
    let mut coords = Vec::with_capacity(n.div_ceil(cfg.stride) * cfg.dimension);
    for k in (0..n).step_by(cfg.stride) {
        for j in 0..cfg.dimension {
            coords.push(s.samples[k + j * cfg.delay_samples]);
        }
    }
    Ok(PointCloud {
        coords,
        dimension: cfg.dimension,
    })
}

/// Pairwise Euclidean distances of a point cloud.
pub fn distance_matrix(pc: &PointCloud) -> DistanceMatrix {
    let n = pc.len();
    let mut upper = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        let pi = pc.point(i);
        for j in (i + 1)..n {
            let pj = pc.point(j);
            let d2: f64 = pi
                .iter()
                .zip(pj)
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            upper.push(d2.sqrt());
        }
    }
    DistanceMatrix { size: n, upper }
}

/// The enclosing radius `min_i max_j d(i, j)`.
///
/// Beyond this radius the Rips complex is a cone over the minimizing point,
/// so every 1-dimensional homology class has died; it is the default
/// filtration truncation.
pub fn enclosing_radius(m: &DistanceMatrix) -> f64 {
    (0..m.size())
        .map(|i| {
            (0..m.size())
                .map(|j| m.get(i, j))
                .fold(0.0_f64, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Converts a fraction of the fundamental period to a delay in samples:
/// `round(num/den · sample_rate / f0)`, rounding half away from zero.
///
/// Errors when the result rounds to zero samples.
pub fn delay_from_period(f0: f64, fraction: (u32, u32), sample_rate: f64) -> Result<usize> {
    let (num, den) = fraction;
    if den == 0 {
        return Err(Error::Domain("fraction denominator must be nonzero".into()));
    }
    if f0.is_nan() || f0 <= 0.0 || sample_rate.is_nan() || sample_rate <= 0.0 {
        return Err(Error::Domain(format!(
            "f0 and sample_rate must be positive, got {f0} and {sample_rate}"
        )));
    }
    let tau = (num as f64 * sample_rate / (den as f64 * f0)).round();
    if tau < 1.0 {
        return Err(Error::Domain(format!(
            "period fraction {num}/{den} of f0 = {f0} Hz rounds to 0 samples at {sample_rate} Hz"
        )));
    }
    Ok(tau as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigsynth::{sine, SynthesisConfig};
    use proptest::prelude::*;

    fn cloud(points: &[&[f64]]) -> PointCloud {
        PointCloud::from_rows(points.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn delay_embed_small_example() {
        let s = Signal::new(vec![0.0, 1.0, 2.0, 3.0, 4.0], 1.0, None).unwrap();
        let cfg = EmbeddingConfig::new(2, 2).unwrap();
        let pc = delay_embed(&s, &cfg).unwrap();
        assert_eq!(pc.len(), 3);
        assert_eq!(pc.point(0), &[0.0, 2.0]);
        assert_eq!(pc.point(1), &[1.0, 3.0]);
        assert_eq!(pc.point(2), &[2.0, 4.0]);
    }

    #[test]
    fn delay_embed_constant_signal_collapses() {
        let s = Signal::new(vec![0.7; 10], 1.0, None).unwrap();
        let pc = delay_embed(&s, &EmbeddingConfig::new(2, 3).unwrap()).unwrap();
        assert!(pc.iter().all(|p| p == [0.7, 0.7]));
    }

    #[test]
    fn delay_embed_sine_quarter_period_is_circle() {
        // τ = T0/4 turns (sin θ, sin(θ + π/2)) into (sin θ, cos θ)
        let cfg = SynthesisConfig::new(150.0, 48_000.0, 2.0 / 150.0, 10, 0).unwrap();
        let s = sine(&cfg).unwrap();
        let pc = delay_embed(&s, &EmbeddingConfig::new(2, 80).unwrap()).unwrap();
        let max_dev = pc
            .iter()
            .map(|p| ((p[0] * p[0] + p[1] * p[1]).sqrt() - 1.0).abs())
            .fold(0.0_f64, f64::max);
        assert!(max_dev < 1e-9, "max radial deviation {max_dev}");
    }

    #[test]
    fn delay_embed_full_period_lies_on_diagonal() {
        let cfg = SynthesisConfig::new(150.0, 48_000.0, 3.0 / 150.0, 10, 0).unwrap();
        let s = sine(&cfg).unwrap();
        let pc = delay_embed(&s, &EmbeddingConfig::new(2, 320).unwrap()).unwrap();
        let max_dev = pc
            .iter()
            .map(|p| (p[0] - p[1]).abs())
            .fold(0.0_f64, f64::max);
        assert!(max_dev < 1e-9, "max off-diagonal deviation {max_dev}");
    }

    #[test]
    fn delay_embed_stride_subsamples_start_indices() {
        let s = Signal::new((0..11).map(|k| k as f64).collect(), 1.0, None).unwrap();
        let cfg = EmbeddingConfig::with_stride(2, 1, 3).unwrap();
        let pc = delay_embed(&s, &cfg).unwrap();
        assert_eq!(pc.len(), 4); // ceil(10 / 3)
        assert_eq!(pc.point(0), &[0.0, 1.0]);
        assert_eq!(pc.point(1), &[3.0, 4.0]);
        assert_eq!(pc.point(3), &[9.0, 10.0]);
    }

    #[test]
    fn delay_embed_reports_max_feasible_tau() {
        let s = Signal::new(vec![0.0; 10], 1.0, None).unwrap();
        let err = delay_embed(&s, &EmbeddingConfig::new(2, 10).unwrap()).unwrap_err();
        match err {
            Error::Embedding { max_tau, .. } => assert_eq!(max_tau, 9),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn distance_matrix_three_four_five() {
        let m = distance_matrix(&cloud(&[&[0.0, 0.0], &[3.0, 4.0]]));
        assert_eq!(m.get(0, 1), 5.0);
        assert_eq!(m.get(1, 0), 5.0);
        assert_eq!(m.get(0, 0), 0.0);
    }

    #[test]
    fn distance_matrix_single_point() {
        let m = distance_matrix(&cloud(&[&[1.0, 2.0]]));
        assert_eq!(m.size(), 1);
        assert_eq!(m.get(0, 0), 0.0);
    }

    #[test]
    fn enclosing_radius_square_and_pairs() {
        let square = cloud(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]]);
        let r = enclosing_radius(&distance_matrix(&square));
        assert!((r - 2.0_f64.sqrt()).abs() < 1e-12);

        let pair = cloud(&[&[0.0], &[1.0]]);
        assert_eq!(enclosing_radius(&distance_matrix(&pair)), 1.0);

        let single = cloud(&[&[0.0]]);
        assert_eq!(enclosing_radius(&distance_matrix(&single)), 0.0);
    }

    #[test]
    fn delay_from_period_examples() {
        assert_eq!(delay_from_period(150.0, (1, 2), 48_000.0).unwrap(), 160);
        assert_eq!(delay_from_period(261.6, (1, 4), 16_000.0).unwrap(), 15);
        assert!(matches!(
            delay_from_period(150.0, (1, 1000), 48_000.0),
            Err(Error::Domain(_))
        ));
    }

    proptest! {
        #[test]
        fn point_count_law(len in 3usize..200, dim in 2usize..4, tau in 1usize..50) {
            prop_assume!((dim - 1) * tau < len);
            let s = Signal::new((0..len).map(|k| (k as f64).sin()).collect(), 1.0, None).unwrap();
            let pc = delay_embed(&s, &EmbeddingConfig::new(dim, tau).unwrap()).unwrap();
            prop_assert_eq!(pc.len(), len - (dim - 1) * tau);
        }

        #[test]
        fn distances_match_recomputation(points in proptest::collection::vec(
            proptest::collection::vec(-10.0..10.0f64, 2), 2..10)) {
            let pc = PointCloud::from_rows(points.clone()).unwrap();
            let m = distance_matrix(&pc);
            for i in 0..points.len() {
                for j in 0..points.len() {
                    let expected = ((points[i][0] - points[j][0]).powi(2)
                        + (points[i][1] - points[j][1]).powi(2)).sqrt();
                    prop_assert!((m.get(i, j) - expected).abs() < 1e-12);
                }
            }
        }

        #[test]
        fn triangle_inequality(points in proptest::collection::vec(
            proptest::collection::vec(-10.0..10.0f64, 3), 3..12)) {
            let pc = PointCloud::from_rows(points).unwrap();
            let m = distance_matrix(&pc);
            let n = m.size();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        prop_assert!(m.get(i, j) <= m.get(i, k) + m.get(k, j) + 1e-9);
                    }
                }
            }
        }
    }
}
