//! Persistence diagrams.

use std::io::{BufRead, Write};

use crate::{Error, Result};

/// One topological feature: born at radius `birth`, dead at `death`
/// (`f64::INFINITY` for essential classes), in homology dimension `dim`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Feature {
    pub birth: f64,
    pub death: f64,
    pub dim: u8,
}

impl Feature {
    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    pub fn is_infinite(&self) -> bool {
        self.death.is_infinite()
    }
}

/// A multiset of features across homology dimensions 0 and 1.
///
/// Zero-persistence pairs are dropped at construction: they are invisible
/// in a diagram and would only inflate Wasserstein matchings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PersistenceDiagram {
    features: Vec<Feature>,
}

impl PersistenceDiagram {
    /// Collects features, dropping zero-persistence pairs and sorting by
    /// `(dim, birth, death)` for deterministic output.
    pub fn from_features(features: Vec<Feature>) -> Self {
        let mut features: Vec<Feature> = features
            .into_iter()
            .filter(|f| f.death > f.birth)
            .collect();
        features.sort_by(|a, b| {
            a.dim
                .cmp(&b.dim)
                .then(a.birth.total_cmp(&b.birth))
                .then(a.death.total_cmp(&b.death))
        });
        Self { features }
    }

    pub fn features(&self) -> &[Feature] {
        &self.features
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    /// Features of one homology dimension.
    pub fn dim_features(&self, dim: u8) -> impl Iterator<Item = &Feature> {
        self.features.iter().filter(move |f| f.dim == dim)
    }

    /// A new diagram holding only the *finite* features of one dimension —
    /// the form consumed by the Wasserstein distance.
    pub fn restrict_finite(&self, dim: u8) -> PersistenceDiagram {
        PersistenceDiagram {
            features: self
                .features
                .iter()
                .filter(|f| f.dim == dim && !f.is_infinite())
                .copied()
                .collect(),
        }
    }

    /// Writes `dim,birth,death` CSV; infinite deaths serialize as `inf`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "dim,birth,death")?;
        for f in &self.features {
            if f.death.is_infinite() {
                writeln!(w, "{},{},inf", f.dim, f.birth)?;
            } else {
                writeln!(w, "{},{},{}", f.dim, f.birth, f.death)?;
            }
        }
        Ok(())
    }

    /// Parses the CSV format produced by [`Self::write_csv`].
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self> {
        let mut features = Vec::new();
        for (lineno, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || (lineno == 0 && line == "dim,birth,death") {
                continue;
            }
            let mut parts = line.split(',');
            let parse = |field: Option<&str>, name: &str| -> Result<f64> {
                let text = field.ok_or_else(|| {
                    Error::Format(format!("line {}: missing {name}", lineno + 1))
                })?;
                if text == "inf" {
                    return Ok(f64::INFINITY);
                }
                text.parse::<f64>().map_err(|_| {
                    Error::Format(format!("line {}: bad {name} value {text:?}", lineno + 1))
                })
            };
            let dim = parse(parts.next(), "dim")? as u8;
            let birth = parse(parts.next(), "birth")?;
            let death = parse(parts.next(), "death")?;
            features.push(Feature { dim, birth, death });
        }
        Ok(Self::from_features(features))
    }
}

/// Betti curve readout: the number of dim-k features alive at radius `r`,
/// i.e. with `birth <= r < death`.
pub fn betti_curve(diagram: &PersistenceDiagram, dim: u8, r: f64) -> usize {
    diagram
        .dim_features(dim)
        .filter(|f| f.birth <= r && r < f.death)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_diagram() -> PersistenceDiagram {
        // unit-square corner cloud: one infinite component, three merges
        // at 1, one hole over [1, √2)
        let sqrt2 = 2.0_f64.sqrt();
        PersistenceDiagram::from_features(vec![
            Feature { birth: 0.0, death: f64::INFINITY, dim: 0 },
            Feature { birth: 0.0, death: 1.0, dim: 0 },
            Feature { birth: 0.0, death: 1.0, dim: 0 },
            Feature { birth: 0.0, death: 1.0, dim: 0 },
            Feature { birth: 1.0, death: sqrt2, dim: 1 },
        ])
    }

    #[test]
    fn betti_curve_of_square() {
        let d = square_diagram();
        assert_eq!(betti_curve(&d, 1, 1.2), 1);
        // below the first edge every point is its own component
        assert_eq!(betti_curve(&d, 0, 0.5), 4);
        // at and beyond the enclosing radius the cone is acyclic
        assert_eq!(betti_curve(&d, 1, 2.0_f64.sqrt()), 0);
    }

    #[test]
    fn zero_persistence_features_are_dropped() {
        let d = PersistenceDiagram::from_features(vec![
            Feature { birth: 0.5, death: 0.5, dim: 1 },
            Feature { birth: 0.2, death: 0.7, dim: 1 },
        ]);
        assert_eq!(d.len(), 1);
        assert_eq!(d.features()[0].birth, 0.2);
    }

    #[test]
    fn csv_round_trip_preserves_features() {
        let d = square_diagram();
        let mut buf = Vec::new();
        d.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("dim,birth,death\n"));
        assert!(text.contains("0,0,inf"));
        let back = PersistenceDiagram::read_csv(buf.as_slice()).unwrap();
        assert_eq!(back, d);
    }
}
