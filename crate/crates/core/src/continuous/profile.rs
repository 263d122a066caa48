//! Period-1 profiles `g`, periodic by construction.

use std::f64::consts::TAU;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    /// Integer frequency, so the term has period 1.
    pub freq: u32,
    pub cos: f64,
    pub sin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    Constant(f64),
    /// `offset + sum(cos_j cos(2 pi f_j u) + sin_j sin(2 pi f_j u))`
    Series {
        offset: f64,
        harmonics: Vec<Harmonic>,
    },
    /// Linear interpolation through `(u_i, g_i)` with `0 <= u_0 < ... < 1`,
    /// wrapping from the last sample to `u_0 + 1`.
    Samples(Vec<(f64, f64)>),
}

/// Grid used to check series profiles for nonnegativity.
const NONNEG_GRID: usize = 4096;

impl Profile {
    /// `offset + amp sin(2 pi freq u)`
    pub fn sine(offset: f64, amp: f64, freq: u32) -> Result<Self> {
        Self::Series {
            offset,
            harmonics: vec![Harmonic {
                freq,
                cos: 0.0,
                sin: amp,
            }],
        }
        .validated()
    }

    /// Samples at `u = i / len`.
    pub fn uniform(values: Vec<f64>) -> Result<Self> {
        let m = values.len() as f64;
        Self::Samples(values.into_iter().enumerate().map(|(i, v)| (i as f64 / m, v)).collect()).validated()
    }

    pub fn samples(points: Vec<(f64, f64)>) -> Result<Self> {
        Self::Samples(points).validated()
    }

    pub fn validated(self) -> Result<Self> {
        match &self {
            Profile::Constant(v) => {
                if !(v.is_finite() && *v >= 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "constant profile must be finite and nonnegative, got {v}"
                    )));
                }
            }
            Profile::Series { offset, harmonics } => {
                if !offset.is_finite()
                    || harmonics
                        .iter()
                        .any(|h| h.freq == 0 || !h.cos.is_finite() || !h.sin.is_finite())
                {
                    return Err(Error::InvalidParameter(
                        "series profile needs finite coefficients and positive frequencies".into(),
                    ));
                }
                let min = (0..NONNEG_GRID)
                    .map(|i| self.eval(i as f64 / NONNEG_GRID as f64))
                    .fold(f64::INFINITY, f64::min);
                if min < 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "series profile takes negative value {min}"
                    )));
                }
            }
            Profile::Samples(points) => {
                if points.is_empty() {
                    return Err(Error::InvalidParameter("profile needs at least one sample".into()));
                }
                if points
                    .iter()
                    .any(|&(u, g)| !(0.0..1.0).contains(&u) || !(g.is_finite() && g >= 0.0))
                {
                    return Err(Error::InvalidParameter(
                        "samples need abscissae in [0, 1) and finite nonnegative values".into(),
                    ));
                }
                if points.windows(2).any(|w| w[0].0 >= w[1].0) {
                    return Err(Error::InvalidParameter(
                        "sample abscissae must be strictly increasing".into(),
                    ));
                }
            }
        }
        Ok(self)
    }

    pub fn eval(&self, u: f64) -> f64 {
        match self {
            Profile::Constant(v) => *v,
            Profile::Series { offset, harmonics } => {
                let w = u - u.floor();
                offset
                    + harmonics
                        .iter()
                        .map(|h| {
                            let phase = TAU * f64::from(h.freq) * w;
                            h.cos * phase.cos() + h.sin * phase.sin()
                        })
                        .sum::<f64>()
            }
            Profile::Samples(points) => interpolate(points, u - u.floor()),
        }
    }

    /// Upper bound on `g` over a period.
    pub fn max_bound(&self) -> f64 {
        match self {
            Profile::Constant(v) => *v,
            Profile::Series { offset, harmonics } => {
                offset + harmonics.iter().map(|h| h.cos.abs() + h.sin.abs()).sum::<f64>()
            }
            Profile::Samples(points) => points.iter().map(|p| p.1).fold(0.0, f64::max),
        }
    }

    /// Points in `[0, 1)` where `g` may fail to be smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Profile::Samples(points) => points.iter().map(|p| p.0).collect(),
            _ => Vec::new(),
        }
    }
}

fn interpolate(points: &[(f64, f64)], w: f64) -> f64 {
    let last = points.len() - 1;
    let (left, right) = match points.partition_point(|p| p.0 <= w) {
        0 => ((points[last].0 - 1.0, points[last].1), points[0]),
        i if i > last => (points[last], (points[0].0 + 1.0, points[0].1)),
        i => (points[i - 1], points[i]),
    };
    if right.0 == left.0 {
        return left.1;
    }
    let t = (w - left.0) / (right.0 - left.0);
    left.1 + t * (right.1 - left.1)
}
