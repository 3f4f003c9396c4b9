use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{sym_eigen, Containment, Spectrum, SpectrumKind};

/// A partition of `0..n` into `r` nonempty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cell_of: Vec<usize>,
    sizes: Vec<usize>,
}

impl Partition {
    /// Cells must be numbered `0..r` with none empty.
    pub fn new(cell_of: Vec<usize>) -> Result<Self> {
        let r = cell_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut sizes = vec![0; r];
        for &c in &cell_of {
            sizes[c] += 1;
        }
        if let Some(empty) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidPartition(format!("cell {empty} is empty")));
        }
        Ok(Partition { cell_of, sizes })
    }

    /// Builds from explicit cells, which must be disjoint and cover `0..n`.
    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Result<Self> {
        let mut cell_of = vec![usize::MAX; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if cell_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} lies in cells {} and {i}",
                        cell_of[v]
                    )));
                }
                cell_of[v] = i;
            }
        }
        if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no cell")));
        }
        Self::new(cell_of)
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            cell_of: (0..n).collect(),
            sizes: vec![1; n],
        }
    }

    /// One cell holding every vertex (no cells when `n = 0`).
    pub fn trivial(n: usize) -> Self {
        Partition {
            cell_of: vec![0; n],
            sizes: if n == 0 { vec![] } else { vec![n] },
        }
    }

    pub fn order(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cell_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut cells = vec![Vec::new(); self.cell_count()];
        for (v, &c) in self.cell_of.iter().enumerate() {
            cells[c].push(v);
        }
        cells
    }

    /// The `n × r` 0/1 matrix whose columns indicate the cells.
    pub fn characteristic_matrix(&self) -> DMatrix<f64> {
        let mut s = DMatrix::zeros(self.order(), self.cell_count());
        for (v, &c) in self.cell_of.iter().enumerate() {
            s[(v, c)] = 1.0;
        }
        s
    }
}

/// Outcome of [`is_equitable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equitability {
    /// `b[i][j]` neighbours in cell `j` of any vertex of cell `i`.
    Equitable { b: Vec<Vec<usize>> },
    /// `u` and `v` share cell `cell` but see different counts in cell `into`.
    NotEquitable {
        cell: usize,
        u: usize,
        v: usize,
        into: usize,
    },
}

impl Equitability {
    pub fn holds(&self) -> bool {
        matches!(self, Equitability::Equitable { .. })
    }
}

fn check_order(g: &Graph, pi: &Partition) -> Result<()> {
    if g.order() != pi.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            got: pi.order(),
        });
    }
    Ok(())
}

fn counts_into_cells(g: &Graph, pi: &Partition, u: usize) -> Vec<usize> {
    let mut row = vec![0; pi.cell_count()];
    for &w in g.neighbors(u) {
        row[pi.cell_of(w)] += 1;
    }
    row
}

pub fn is_equitable(g: &Graph, pi: &Partition) -> Result<Equitability> {
    check_order(g, pi)?;
    let r = pi.cell_count();
    let mut b: Vec<Option<(usize, Vec<usize>)>> = vec![None; r];
    for u in 0..g.order() {
        let cell = pi.cell_of(u);
        let row = counts_into_cells(g, pi, u);
        match &b[cell] {
            None => b[cell] = Some((u, row)),
            Some((first, seen)) => {
                if let Some(into) = (0..r).find(|&j| seen[j] != row[j]) {
                    return Ok(Equitability::NotEquitable {
                        cell,
                        u: *first,
                        v: u,
                        into,
                    });
                }
            }
        }
    }
    Ok(Equitability::Equitable {
        b: b.into_iter()
            .map(|x| x.map(|(_, row)| row).unwrap_or_default())
            .collect(),
    })
}

/// Quotient matrices of an equitable partition (row convention:
/// `q_a[i][j] = b_ij`, `q_l = diag(row sums) − q_a`).
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientPair {
    pub q_a: DMatrix<f64>,
    pub q_l: DMatrix<f64>,
    pub b: Vec<Vec<usize>>,
    pub cell_sizes: Vec<usize>,
}

impl QuotientPair {
    /// Builds the pair directly from an intersection table.
    pub fn from_table(b: Vec<Vec<usize>>, cell_sizes: Vec<usize>) -> Self {
        let r = b.len();
        let q_a = DMatrix::from_fn(r, r, |i, j| b[i][j] as f64);
        let q_l = laplacian_quotient(&q_a);
        QuotientPair {
            q_a,
            q_l,
            b,
            cell_sizes,
        }
    }

    pub fn adjacency_spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum::new(
            quotient_eigenvalues(&self.q_a, &self.cell_sizes)?,
            SpectrumKind::Adjacency,
        ))
    }

    pub fn laplacian_spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum::new(
            quotient_eigenvalues(&self.q_l, &self.cell_sizes)?,
            SpectrumKind::Laplacian,
        ))
    }
}

/// `diag(row sums of q_a) − q_a`.
pub fn laplacian_quotient(q_a: &DMatrix<f64>) -> DMatrix<f64> {
    let mut q_l = -q_a.clone();
    for i in 0..q_a.nrows() {
        q_l[(i, i)] += q_a.row(i).sum();
    }
    q_l
}

/// Eigenvalues (ascending) of a quotient matrix `Q = D⁻¹M` with `M`
/// symmetric and `D = diag(cell_sizes)`, via the symmetric matrix
/// `D^{1/2} Q D^{-1/2}`.
pub fn quotient_eigenvalues(q: &DMatrix<f64>, cell_sizes: &[usize]) -> Result<Vec<f64>> {
    let r = q.nrows();
    if q.ncols() != r || cell_sizes.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: cell_sizes.len(),
        });
    }
    let root: Vec<f64> = cell_sizes.iter().map(|&s| (s as f64).sqrt()).collect();
    let sym = DMatrix::from_fn(r, r, |i, j| q[(i, j)] * root[i] / root[j]);
    let scale = sym.abs().max().max(1.0);
    for i in 0..r {
        for j in 0..i {
            let gap = (sym[(i, j)] - sym[(j, i)]).abs();
            if gap > 1e-9 * scale {
                return Err(Error::NotSymmetric {
                    row: i,
                    col: j,
                    gap,
                });
            }
        }
    }
    let sym = (&sym + sym.transpose()) * 0.5;
    Ok(sym_eigen(&sym)?.eigenvalues_vec())
}

pub fn quotient_matrices(g: &Graph, pi: &Partition) -> Result<QuotientPair> {
    match is_equitable(g, pi)? {
        Equitability::Equitable { b } => Ok(QuotientPair::from_table(b, pi.cell_sizes().to_vec())),
        Equitability::NotEquitable { cell, u, v, into } => {
            Err(Error::NotEquitable { cell, u, v, into })
        }
    }
}

pub const QUOTIENT_IDENTITY_TOL: f64 = 1e-9;
pub const QUOTIENT_PINV_TOL: f64 = 1e-7;

/// Deviations measured by [`verify_quotient`].
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientCheck {
    /// `max |A S − S Q_A|`
    pub adjacency_intertwining: f64,
    /// `max |L S − S Q_L|`
    pub laplacian_intertwining: f64,
    /// `max |(SᵀS)⁻¹SᵀAS − Q_A|`
    pub adjacency_pinv: f64,
    /// `max |(SᵀS)⁻¹SᵀLS − Q_L|`
    pub laplacian_pinv: f64,
    /// Largest pairing gap of `spec Q_A ⊆ spec A`.
    pub adjacency_containment_gap: f64,
    /// Largest pairing gap of `spec Q_L ⊆ spec L`.
    pub laplacian_containment_gap: f64,
}

fn max_abs_at(m: &DMatrix<f64>) -> (f64, usize, usize) {
    let mut best = (0.0, 0, 0);
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            if m[(i, j)].abs() > best.0 {
                best = (m[(i, j)].abs(), i, j);
            }
        }
    }
    best
}

fn within(what: &'static str, m: &DMatrix<f64>, tol: f64) -> Result<f64> {
    let (dev, row, col) = max_abs_at(m);
    if dev > tol {
        return Err(Error::IdentityViolated {
            what,
            deviation: dev,
            row,
            col,
        });
    }
    Ok(dev)
}

fn containment_gap(big: &Spectrum, small: &Spectrum) -> Result<f64> {
    match big.contains(small)? {
        Containment::Contained { max_gap, .. } => Ok(max_gap),
        Containment::Unmatched { witness, gap } => Err(Error::ContainmentFailure {
            witness,
            gap,
            tol: big.tol(),
        }),
    }
}

/// Checks intertwining, both pseudo-inverse formulas and spectral
/// containment for the quotients of an equitable partition.
pub fn verify_quotient(g: &Graph, pi: &Partition, q: &QuotientPair) -> Result<QuotientCheck> {
    check_order(g, pi)?;
    let a = g.adjacency_matrix();
    let l = g.laplacian_matrix();
    let s = pi.characteristic_matrix();
    let st = s.transpose();
    let gram_inv = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        pi.cell_count(),
        pi.cell_sizes().iter().map(|&c| 1.0 / c as f64),
    ));

    let adjacency_intertwining = within(
        "A S = S Q_A",
        &(&a * &s - &s * &q.q_a),
        QUOTIENT_IDENTITY_TOL,
    )?;
    let laplacian_intertwining = within(
        "L S = S Q_L",
        &(&l * &s - &s * &q.q_l),
        QUOTIENT_IDENTITY_TOL,
    )?;
    let adjacency_pinv = within(
        "Q_A = (S^T S)^-1 S^T A S",
        &(&gram_inv * &st * &a * &s - &q.q_a),
        QUOTIENT_PINV_TOL,
    )?;
    let laplacian_pinv = within(
        "Q_L = (S^T S)^-1 S^T L S",
        &(&gram_inv * &st * &l * &s - &q.q_l),
        QUOTIENT_PINV_TOL,
    )?;

    let spec_a = crate::spectral::spectrum(g, SpectrumKind::Adjacency)?;
    let spec_l = crate::spectral::spectrum(g, SpectrumKind::Laplacian)?;
    let adjacency_containment_gap = containment_gap(&spec_a, &q.adjacency_spectrum()?)?;
    let laplacian_containment_gap = containment_gap(&spec_l, &q.laplacian_spectrum()?)?;

    Ok(QuotientCheck {
        adjacency_intertwining,
        laplacian_intertwining,
        adjacency_pinv,
        laplacian_pinv,
        adjacency_containment_gap,
        laplacian_containment_gap,
    })
}

/// The partition of `g` by distance from `root`.
pub fn distance_partition(g: &Graph, root: usize) -> Result<Partition> {
    if root >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: g.order(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dm = g.distance_matrix();
    Partition::new(
        (0..g.order())
            .map(|v| dm.get(root, v).unwrap_or(0))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};
    use crate::token::{lift_eigenvector, token_graph};

    fn gen(f: Family, p: &[usize]) -> Graph {
        generate(f, p).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![0, 2, 2]).is_err());
        assert!(Partition::from_cells(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_cells(3, &[vec![0, 1]]).is_err());
        assert!(Partition::from_cells(3, &[vec![0, 4], vec![1, 2]]).is_err());
        let p = Partition::from_cells(4, &[vec![3, 1], vec![0, 2]]).unwrap();
        assert_eq!(p.cell_sizes(), &[2, 2]);
        let s = p.characteristic_matrix();
        assert!(s.column_iter().all(|c| c.sum() == 2.0));
        assert!(s.row_iter().all(|r| r.sum() == 1.0));
    }

    #[test]
    fn singleton_partition_gives_adjacency() {
        let g = crate::io::parse_graph6("F?~vw").unwrap();
        let q = quotient_matrices(&g, &Partition::singletons(7)).unwrap();
        assert_eq!(q.q_a, g.adjacency_matrix());
        assert_eq!(q.q_l, g.laplacian_matrix());
        verify_quotient(&g, &Partition::singletons(7), &q).unwrap();
    }

    #[test]
    fn one_cell_partition() {
        let c = gen(Family::Cycle, &[8]);
        let q = quotient_matrices(&c, &Partition::trivial(8)).unwrap();
        assert_eq!(q.q_a, DMatrix::from_element(1, 1, 2.0));
        assert_eq!(q.q_l, DMatrix::from_element(1, 1, 0.0));
        let p = gen(Family::Path, &[4]);
        match is_equitable(&p, &Partition::trivial(4)).unwrap() {
            Equitability::NotEquitable { cell, u, v, into } => {
                assert_eq!((cell, u, v, into), (0, 0, 1, 0));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            quotient_matrices(&p, &Partition::trivial(4)),
            Err(Error::NotEquitable { .. })
        ));
    }

    #[test]
    fn complete_bipartite_bipartition() {
        let g = gen(Family::CompleteBipartite, &[2, 4]);
        let pi = Partition::new(vec![0, 0, 1, 1, 1, 1]).unwrap();
        let q = quotient_matrices(&g, &pi).unwrap();
        assert_eq!(q.q_a, DMatrix::from_row_slice(2, 2, &[0.0, 4.0, 2.0, 0.0]));
        let spec = q.adjacency_spectrum().unwrap();
        let r = 8f64.sqrt();
        assert!((spec.values()[0] + r).abs() < 1e-12 && (spec.values()[1] - r).abs() < 1e-12);
        let check = verify_quotient(&g, &pi, &q).unwrap();
        assert_eq!(check.adjacency_intertwining, 0.0);
        for row in 0..2 {
            assert!(q.q_l.row(row).sum().abs() < 1e-15);
        }
    }

    #[test]
    fn cycle_distance_pairs_in_token_graph() {
        let c9 = gen(Family::Cycle, &[9]);
        let f = token_graph(&c9, 2).unwrap();
        let dm = c9.distance_matrix();
        let pi = Partition::new(
            (0..36)
                .map(|v| {
                    let l = f.label(v);
                    dm.get(l[0], l[1]).unwrap() - 1
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(pi.cell_count(), 4);
        let q = quotient_matrices(f.graph(), &pi).unwrap();
        verify_quotient(f.graph(), &pi, &q).unwrap();
    }

    #[test]
    fn distance_partitions_of_drgs_are_equitable() {
        for g in [
            gen(Family::Heawood, &[]),
            gen(Family::Petersen, &[]),
            gen(Family::Johnson, &[6, 2]),
        ] {
            let pi = distance_partition(&g, 0).unwrap();
            let q = quotient_matrices(&g, &pi).unwrap();
            let check = verify_quotient(&g, &pi, &q).unwrap();
            assert!(check.laplacian_pinv < 1e-12);
        }
        let p5 = gen(Family::Path, &[5]);
        assert!(!is_equitable(&p5, &distance_partition(&p5, 1).unwrap())
            .unwrap()
            .holds());
    }

    #[test]
    fn quotient_eigenvectors_lift() {
        let g = gen(Family::Heawood, &[]);
        let pi = distance_partition(&g, 0).unwrap();
        let q = quotient_matrices(&g, &pi).unwrap();
        let s = pi.characteristic_matrix();
        let a = g.adjacency_matrix();
        for lambda in q.adjacency_spectrum().unwrap().values() {
            // kernel vector of Q_A − λI via the symmetrized problem
            let shifted = &q.q_a - DMatrix::identity(4, 4) * *lambda;
            let svd = shifted.svd(false, true);
            let vt = svd.v_t.unwrap();
            let idx = svd.singular_values.imin();
            let v = vt.row(idx).transpose();
            lift_eigenvector(&s, &q.q_a, &a, &v, *lambda).unwrap();
        }
    }
}
