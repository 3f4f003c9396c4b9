use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A real polynomial with coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    /// Trailing exact zeros are dropped.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![0.0, 1.0])
    }

    /// `∏ (x − r)`.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots.iter().fold(Poly::constant(1.0), |p, &r| {
            p.mul(&Poly::new(vec![-r, 1.0]))
        })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// `p(M)` by Horner's scheme.
    pub fn eval_matrix(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let n = m.nrows();
        let mut acc = DMatrix::zeros(n, n);
        for &c in self.coeffs.iter().rev() {
            acc = &acc * m + DMatrix::identity(n, n) * c;
        }
        acc
    }

    pub fn scale(&self, s: f64) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        self.scale(1.0 / self.leading())
    }

    pub fn add(&self, other: &Poly) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Largest coefficient difference.
    pub fn max_coeff_diff(&self, other: &Poly) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|i| (self.coeff(i) - other.coeff(i)).abs())
            .fold(0.0, f64::max)
    }

    /// The unique polynomial of degree `< nodes.len()` through the points,
    /// in Lagrange form expanded to the monomial basis.
    pub fn lagrange(nodes: &[f64], values: &[f64]) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: nodes.len(),
                got: values.len(),
            });
        }
        let mut out = Poly::zero();
        for (i, (&xi, &yi)) in nodes.iter().zip(values).enumerate() {
            let mut basis = Poly::constant(1.0);
            let mut denom = 1.0;
            for (j, &xj) in nodes.iter().enumerate() {
                if j != i {
                    basis = basis.mul(&Poly::new(vec![-xj, 1.0]));
                    denom *= xi - xj;
                }
            }
            if denom == 0.0 {
                return Err(Error::InvalidIntersectionArray(format!(
                    "repeated interpolation node {xi}"
                )));
            }
            out = out.add(&basis.scale(yi / denom));
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a != 1.0 => write!(f, "{a}")?,
                _ => {}
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let p = Poly::new(vec![-1.0, 0.0, 1.0, 0.0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(3.0), 8.0);
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_roots(&[1.0, -1.0]), p);
        assert_eq!(p.to_string(), "x^2 - 1");
        assert_eq!(Poly::new(vec![0.0, -2.0, 0.5]).to_string(), "0.5x^2 - 2x");
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert!(p.eval_matrix(&m).iter().all(|&v| v == 0.0));
    }

    proptest! {
        #[test]
        fn lagrange_reproduces_polynomials(
            coeffs in proptest::collection::vec(-5.0f64..5.0, 1..6),
        ) {
            let p = Poly::new(coeffs);
            let d = p.coeffs().len();
            let nodes: Vec<f64> = (0..d).map(|i| i as f64 - 1.5).collect();
            let values: Vec<f64> = nodes.iter().map(|&x| p.eval(x)).collect();
            let q = Poly::lagrange(&nodes, &values).unwrap();
            prop_assert!(q.max_coeff_diff(&p) < 1e-9);
        }
    }
}
