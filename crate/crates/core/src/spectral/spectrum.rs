use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
}

/// Relative pairing tolerance used unless overridden.
pub const DEFAULT_REL_TOL: f64 = 1e-7;

/// A sorted multiset of real eigenvalues with a pairing tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
    kind: SpectrumKind,
}

/// Outcome of a greedy containment test.
#[derive(Clone, Debug, PartialEq)]
pub enum Containment {
    /// `pairs[i] = (index in small, index in big)`.
    Contained {
        pairs: Vec<(usize, usize)>,
        max_gap: f64,
    },
    /// First value of `small` with no unmatched partner within tolerance,
    /// and its distance to the nearest unmatched value of `big`.
    Unmatched { witness: f64, gap: f64 },
}

impl Containment {
    pub fn holds(&self) -> bool {
        matches!(self, Containment::Contained { .. })
    }
}

impl Spectrum {
    /// Sorts `values`; tolerance defaults to `1e-7·max(1, max |value|)`.
    pub fn new(mut values: Vec<f64>, kind: SpectrumKind) -> Self {
        values.sort_by(f64::total_cmp);
        let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        Spectrum {
            values,
            tol: DEFAULT_REL_TOL * scale,
            kind,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// Replaces the tolerance by `rel·max(1, max |value|)`.
    pub fn with_rel_tol(mut self, rel: f64) -> Self {
        self.tol = rel * self.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Distinct values with multiplicities, clustering consecutive values
    /// whose gap is at most `gap`. Each group reports its mean.
    pub fn grouped(&self, gap: f64) -> Vec<(f64, usize)> {
        group_sorted(&self.values, gap)
            .into_iter()
            .map(|r| {
                let slice = &self.values[r];
                (slice.iter().sum::<f64>() / slice.len() as f64, slice.len())
            })
            .collect()
    }

    /// Number of values within `tol` of `x`.
    pub fn multiplicity_of(&self, x: f64) -> usize {
        self.values
            .iter()
            .filter(|v| (*v - x).abs() <= self.tol)
            .count()
    }

    /// Elementwise comparison of two equally sized spectra.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    /// Largest elementwise deviation, `∞` when the lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Greedy sorted-order matching of `small` into `self`, using `self`'s
    /// tolerance: each value of `small` takes the nearest unmatched value of
    /// `self` within tolerance.
    pub fn contains(&self, small: &Spectrum) -> Result<Containment> {
        if self.kind != small.kind {
            return Err(Error::KindMismatch {
                big: self.kind,
                small: small.kind,
            });
        }
        let big = &self.values;
        let tol = self.tol;
        let mut matched = vec![false; big.len()];
        let mut lo = 0;
        let mut pairs = Vec::with_capacity(small.len());
        let mut max_gap = 0.0f64;
        for (si, &s) in small.values.iter().enumerate() {
            while lo < big.len() && (matched[lo] || big[lo] < s - tol) {
                lo += 1;
            }
            let mut best: Option<(usize, f64)> = None;
            for (bi, &b) in big.iter().enumerate().skip(lo) {
                if b > s + tol {
                    break;
                }
                if matched[bi] {
                    continue;
                }
                let gap = (b - s).abs();
                if best.is_none_or(|(_, g)| gap < g) {
                    best = Some((bi, gap));
                }
            }
            match best {
                Some((bi, gap)) => {
                    matched[bi] = true;
                    pairs.push((si, bi));
                    max_gap = max_gap.max(gap);
                }
                None => {
                    let gap = big
                        .iter()
                        .zip(&matched)
                        .filter(|(_, m)| !**m)
                        .map(|(b, _)| (b - s).abs())
                        .fold(f64::INFINITY, f64::min);
                    return Ok(Containment::Unmatched { witness: s, gap });
                }
            }
        }
        Ok(Containment::Contained { pairs, max_gap })
    }

    /// `self ∖ small`, after a successful containment test.
    pub fn difference(&self, small: &Spectrum) -> Result<Spectrum> {
        match self.contains(small)? {
            Containment::Contained { pairs, .. } => {
                let mut removed = vec![false; self.len()];
                for (_, bi) in pairs {
                    removed[bi] = true;
                }
                let values = self
                    .values
                    .iter()
                    .zip(removed)
                    .filter(|(_, r)| !r)
                    .map(|(v, _)| *v)
                    .collect();
                Ok(Spectrum {
                    values,
                    tol: self.tol,
                    kind: self.kind,
                })
            }
            Containment::Unmatched { witness, gap } => Err(Error::ContainmentFailure {
                witness,
                gap,
                tol: self.tol,
            }),
        }
    }
}

/// Index ranges of consecutive runs in a sorted slice with gaps `<= gap`.
pub(crate) fn group_sorted(values: &[f64], gap: f64) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] - values[i - 1] > gap {
            if i > start {
                out.push(start..i);
            }
            start = i;
        }
    }
    out
}
