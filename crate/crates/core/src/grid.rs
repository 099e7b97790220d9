//! Momentum sample grids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the grid points were generated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GridKind {
    Linear { min: f64, max: f64, count: usize },
    /// `0` plus `count` log-spaced points in `[min, max]`, optionally mirrored.
    Log { min: f64, max: f64, count: usize, mirrored: bool },
    Explicit,
}

/// Ordered radial momenta in units of `unit` (`ħβ` for scaled grids).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationGrid {
    pub kind: GridKind,
    pub unit: f64,
    pub points: Vec<f64>,
}

impl EvaluationGrid {
    /// `count` equally spaced points from `min` to `max` inclusive.
    pub fn linear(min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::Grid(format!("need min < max, got [{min}, {max}]")));
        }
        if count < 2 {
            return Err(Error::Grid(format!("need at least 2 points, got {count}")));
        }
        let span = max - min;
        let last = (count - 1) as f64;
        let points = (0..count)
            .map(|i| {
                // upper half counted down from max, so symmetric ranges mirror exactly
                if 2 * i <= count - 1 {
                    min + span * i as f64 / last
                } else {
                    max - span * (count - 1 - i) as f64 / last
                }
            })
            .collect();
        Ok(EvaluationGrid {
            kind: GridKind::Linear { min, max, count },
            unit: 1.0,
            points,
        })
    }

    /// `0` followed by `count` log-spaced points of `p/ħβ` in `[min, max]`, times `hbar_beta`.
    pub fn log(min: f64, max: f64, count: usize, hbar_beta: f64) -> Result<Self> {
        Self::log_impl(min, max, count, hbar_beta, false)
    }

    /// [`log`](Self::log) with every positive point mirrored to `-p`; sorted ascending.
    pub fn log_mirrored(min: f64, max: f64, count: usize, hbar_beta: f64) -> Result<Self> {
        Self::log_impl(min, max, count, hbar_beta, true)
    }

    fn log_impl(min: f64, max: f64, count: usize, hbar_beta: f64, mirrored: bool) -> Result<Self> {
        if !(min > 0.0 && max.is_finite() && min < max) {
            return Err(Error::Grid(format!("log grid needs 0 < min < max, got [{min}, {max}]")));
        }
        if count < 2 {
            return Err(Error::Grid(format!("need at least 2 points, got {count}")));
        }
        if !(hbar_beta > 0.0 && hbar_beta.is_finite()) {
            return Err(Error::Grid(format!("momentum unit must be positive, got {hbar_beta}")));
        }
        let (lo, hi) = (min.log10(), max.log10());
        let positive: Vec<f64> = (0..count)
            .map(|i| hbar_beta * 10f64.powf(lo + (hi - lo) * i as f64 / (count - 1) as f64))
            .collect();
        let mut points = Vec::with_capacity(2 * count + 1);
        if mirrored {
            points.extend(positive.iter().rev().map(|p| -p));
        }
        points.push(0.0);
        points.extend(positive);
        Ok(EvaluationGrid {
            kind: GridKind::Log { min, max, count, mirrored },
            unit: hbar_beta,
            points,
        })
    }

    /// Default verification grid: `0` plus 60 log-spaced points over `[1e-3, 1e3] ħβ`.
    pub fn default_log(hbar_beta: f64) -> Self {
        Self::log(1e-3, 1e3, 60, hbar_beta).expect("default grid parameters are valid")
    }

    /// The default grid mirrored to negative momenta (121 points).
    pub fn default_mirrored(hbar_beta: f64) -> Self {
        Self::log_mirrored(1e-3, 1e3, 60, hbar_beta).expect("default grid parameters are valid")
    }

    /// Grid from explicit points, which must be finite and strictly increasing.
    pub fn explicit(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Grid("empty grid".into()));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::Grid("grid contains non-finite points".into()));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Grid("grid points must be strictly increasing".into()));
        }
        Ok(EvaluationGrid {
            kind: GridKind::Explicit,
            unit: 1.0,
            points,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Only the nonnegative points.
    pub fn nonnegative(&self) -> Vec<f64> {
        self.points.iter().copied().filter(|&p| p >= 0.0).collect()
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            GridKind::Linear { min, max, count } => format!("linear [{min}, {max}] x {count}"),
            GridKind::Log {
                min,
                max,
                count,
                mirrored,
            } => format!(
                "{}0 + log [{min}, {max}] x {count} (unit {})",
                if *mirrored { "mirrored " } else { "" },
                self.unit
            ),
            GridKind::Explicit => format!("explicit, {} points", self.points.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grids() {
        let g = EvaluationGrid::default_log(1.0);
        assert_eq!(g.len(), 61);
        assert_eq!(g.points[0], 0.0);
        assert!((g.points[1] - 1e-3).abs() < 1e-18);
        assert!((g.points[60] - 1e3).abs() < 1e-10);
        let m = EvaluationGrid::default_mirrored(2.0);
        assert_eq!(m.len(), 121);
        assert!(m.points.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(m.points[60], 0.0);
        assert_eq!(m.points[0], -m.points[120]);
        assert_eq!(m.nonnegative().len(), 61);
    }

    #[test]
    fn linear_grid() {
        let g = EvaluationGrid::linear(-5.0, 5.0, 11).unwrap();
        assert_eq!(g.points, (-5..=5).map(|i| i as f64).collect::<Vec<_>>());
        let s = EvaluationGrid::linear(-5.0, 5.0, 201).unwrap();
        assert!((0..201).all(|i| s.points[i] == -s.points[200 - i]));
        assert_eq!(s.points[120], 1.0);
        assert!(EvaluationGrid::linear(1.0, 1.0, 5).is_err());
        assert!(EvaluationGrid::linear(0.0, 1.0, 1).is_err());
        assert!(EvaluationGrid::linear(f64::NAN, 1.0, 3).is_err());
    }

    #[test]
    fn explicit_validation() {
        assert!(EvaluationGrid::explicit(vec![]).is_err());
        assert!(EvaluationGrid::explicit(vec![1.0, 1.0]).is_err());
        assert!(EvaluationGrid::explicit(vec![0.0, f64::INFINITY]).is_err());
        assert_eq!(EvaluationGrid::explicit(vec![0.5]).unwrap().len(), 1);
        assert!(EvaluationGrid::log(0.0, 1.0, 5, 1.0).is_err());
    }
}
