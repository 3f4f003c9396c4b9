use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

/// Row-sum norm `‖M‖_∞`.
pub fn inf_norm(m: &DMatrix<f64>) -> f64 {
    m.row_iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Eigenpairs of a real symmetric matrix, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub eigenvalues: DVector<f64>,
    /// Orthonormal eigenvectors as columns, in eigenvalue order.
    pub eigenvectors: DMatrix<f64>,
    /// `max_i ‖M v_i − λ_i v_i‖₂` measured after the solve.
    pub residual_bound: f64,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues_vec(&self) -> Vec<f64> {
        self.eigenvalues.iter().copied().collect()
    }
}

const ITERATIONS_PER_ROW: usize = 200;

/// Dense symmetric eigensolver (Householder tridiagonalisation plus implicit
/// QR, via nalgebra). Input must be symmetric to `1e-12·‖M‖_∞`.
pub fn sym_eigen(m: &DMatrix<f64>) -> Result<EigenDecomposition> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.ncols(),
        });
    }
    let norm = inf_norm(m);
    let sym_tol = 1e-12 * norm.max(f64::MIN_POSITIVE);
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (m[(i, j)] - m[(j, i)]).abs();
            if gap > sym_tol {
                return Err(Error::NotSymmetric {
                    row: i,
                    col: j,
                    gap,
                });
            }
        }
    }
    if n == 0 {
        return Ok(EigenDecomposition {
            eigenvalues: DVector::zeros(0),
            eigenvectors: DMatrix::zeros(0, 0),
            residual_bound: 0.0,
        });
    }
    let cap = ITERATIONS_PER_ROW * n.max(1);
    let eig = SymmetricEigen::try_new(m.clone(), f64::EPSILON, cap)
        .ok_or(Error::NoConvergence { dim: n, cap })?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = DVector::from_iterator(n, order.iter().map(|&i| eig.eigenvalues[i]));
    let mut eigenvectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut col = eig.eigenvectors.column(src).clone_owned();
        // fix the sign so output is reproducible: largest-magnitude entry positive
        let pivot = col.iamax();
        if col[pivot] < 0.0 {
            col.neg_mut();
        }
        eigenvectors.set_column(dst, &col);
    }
    let residual = m * &eigenvectors - &eigenvectors * DMatrix::from_diagonal(&eigenvalues);
    let residual_bound = residual.column_iter().map(|c| c.norm()).fold(0.0, f64::max);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
        residual_bound,
    })
}

/// Eigenvalues only, ascending.
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    Ok(sym_eigen(m)?.eigenvalues_vec())
}
