//! k-token graphs `F_k(G)`, the (k,h)-binomial matrix, and eigenvector
//! lifting between operators intertwined by a 0/1 matrix.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::inf_norm;
use crate::subsets::{binomial, colex_masks, SubsetIndexer};

/// Largest token graph order accepted for construction.
pub const TOKEN_ORDER_LIMIT: u64 = 20_000;

/// `F_k(G)` with its k-subset labelling.
///
/// Vertex `r` of `graph` is the k-subset `labels.unrank(r)`; two subsets are
/// adjacent when they differ in exactly one element each and those two
/// elements are adjacent in `base`.
#[derive(Clone, Debug)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    graph: Graph,
    labels: SubsetIndexer,
}

impl TokenGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn labels(&self) -> &SubsetIndexer {
        &self.labels
    }

    pub fn label(&self, vertex: usize) -> Vec<usize> {
        self.labels.unrank(vertex)
    }
}

/// Refuses orders above [`TOKEN_ORDER_LIMIT`].
pub fn check_guard(n: usize, k: usize) -> Result<()> {
    let order = binomial(n, k);
    if order > TOKEN_ORDER_LIMIT {
        return Err(Error::GuardExceeded {
            n,
            k,
            order,
            limit: TOKEN_ORDER_LIMIT,
        });
    }
    Ok(())
}

/// Places the low bits of `bits` onto the set positions of `slots`.
fn deposit(mut bits: u64, mut slots: u64) -> u64 {
    let mut out = 0;
    while slots != 0 {
        let low = slots & slots.wrapping_neg();
        if bits & 1 == 1 {
            out |= low;
        }
        bits >>= 1;
        slots ^= low;
    }
    out
}

/// Builds `F_k(G)` for `0 <= k <= n`. `F_0` and `F_n` are single vertices.
///
/// Edges are generated from each edge `{a,b}` of `G` and each (k−1)-subset
/// `R` of `V ∖ {a,b}` as `R ∪ {a} ~ R ∪ {b}`, so the work is
/// `|E|·C(n−2, k−1)` rather than quadratic in `C(n,k)`.
pub fn token_graph(g: &Graph, k: usize) -> Result<TokenGraph> {
    let n = g.order();
    if k > n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    if n >= 64 {
        return Err(Error::BadParameters {
            family: "token graph".into(),
            reason: format!("base graph has {n} vertices, at most 63 supported"),
        });
    }
    check_guard(n, k)?;
    let labels = SubsetIndexer::new(n, k)?;
    let all: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut edges = Vec::new();
    if k >= 1 {
        for (a, b) in g.edges() {
            let others = all & !(1 << a) & !(1 << b);
            for r in colex_masks(n - 2, k - 1) {
                let rest = deposit(r, others);
                let from = labels.rank_mask(rest | (1 << a));
                let to = labels.rank_mask(rest | (1 << b));
                edges.push((from.min(to), from.max(to)));
            }
        }
    }
    let order = labels.count();
    let mut graph = Graph::from_edges(order, edges)?;
    if let Some(name) = g.name() {
        graph = graph.with_name(format!("F_{k}({name})"));
    }
    Ok(TokenGraph {
        base: g.clone(),
        k,
        graph,
        labels,
    })
}

/// The 0/1 inclusion matrix between k-subsets (rows) and h-subsets (columns).
#[derive(Clone, Debug)]
pub struct BinomialMatrix {
    rows: SubsetIndexer,
    cols: SubsetIndexer,
}

impl BinomialMatrix {
    pub fn new(n: usize, k: usize, h: usize) -> Result<Self> {
        if h > k || k > n {
            return Err(Error::BinomialOrder { n, k, h });
        }
        check_guard(n, k)?;
        check_guard(n, h)?;
        Ok(BinomialMatrix {
            rows: SubsetIndexer::new(n, k)?,
            cols: SubsetIndexer::new(n, h)?,
        })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.count(), self.cols.count())
    }

    pub fn row_indexer(&self) -> &SubsetIndexer {
        &self.rows
    }

    pub fn col_indexer(&self) -> &SubsetIndexer {
        &self.cols
    }

    /// Column indices of the ones in row `a`: every h-subset of the k-subset `a`.
    pub fn row_support(&self, a: usize) -> Vec<usize> {
        let mask = self.rows.unrank_mask(a);
        colex_masks(self.rows.k(), self.cols.k())
            .map(|sub| self.cols.rank_mask(deposit(sub, mask)))
            .collect()
    }

    pub fn to_matrix(&self) -> DMatrix<f64> {
        let (r, c) = self.shape();
        let mut m = DMatrix::zeros(r, c);
        for a in 0..r {
            for x in self.row_support(a) {
                m[(a, x)] = 1.0;
            }
        }
        m
    }
}

pub fn binomial_matrix(n: usize, k: usize, h: usize) -> Result<BinomialMatrix> {
    BinomialMatrix::new(n, k, h)
}

/// Deviations measured by [`verify_commutation`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CommutationReport {
    /// `max |L_k S_b − S_b L_h|`
    pub commutation: f64,
    /// `max |(S_bᵀS_b)⁻¹ S_bᵀ L_k S_b − L_h|`
    pub pseudo_inverse: f64,
    /// `max |L_k P − P L_k P|` for the projector `P` onto the column space
    /// of `S_b`.
    pub invariance: f64,
}

pub const COMMUTATION_TOL: f64 = 1e-9;
pub const PSEUDO_INVERSE_TOL: f64 = 1e-7;

fn max_entry(m: &DMatrix<f64>) -> (f64, usize, usize) {
    let mut best = (0.0, 0, 0);
    for (j, col) in m.column_iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            if v.abs() > best.0 {
                best = (v.abs(), i, j);
            }
        }
    }
    best
}

/// Checks `L_k S_b = S_b L_h`, `L_h = (S_bᵀS_b)⁻¹ S_bᵀ L_k S_b`, and that
/// the column space of `S_b` is `L_k`-invariant.
pub fn verify_commutation(g: &Graph, h: usize, k: usize) -> Result<CommutationReport> {
    let n = g.order();
    if h < 1 || h > k || k > n {
        return Err(Error::BinomialOrder { n, k, h });
    }
    let lk = token_graph(g, k)?.graph.laplacian_matrix();
    let lh = token_graph(g, h)?.graph.laplacian_matrix();
    let sb = binomial_matrix(n, k, h)?.to_matrix();

    let (commutation, row, col) = max_entry(&(&lk * &sb - &sb * &lh));
    if commutation > COMMUTATION_TOL {
        return Err(Error::IdentityViolated {
            what: "L_k S_b = S_b L_h",
            deviation: commutation,
            row,
            col,
        });
    }
    let gram = sb.transpose() * &sb;
    let chol = gram.cholesky().ok_or(Error::SingularGram)?;
    let recovered = chol.solve(&(sb.transpose() * &lk * &sb));
    let (pseudo_inverse, row, col) = max_entry(&(recovered - &lh));
    if pseudo_inverse > PSEUDO_INVERSE_TOL {
        return Err(Error::IdentityViolated {
            what: "L_h = (S_b^T S_b)^-1 S_b^T L_k S_b",
            deviation: pseudo_inverse,
            row,
            col,
        });
    }
    let proj = &sb * chol.solve(&sb.transpose());
    let lp = &lk * &proj;
    let (invariance, row, col) = max_entry(&(&lp - &proj * &lp));
    if invariance > PSEUDO_INVERSE_TOL {
        return Err(Error::IdentityViolated {
            what: "column space of S_b is L_k-invariant",
            deviation: invariance,
            row,
            col,
        });
    }
    Ok(CommutationReport {
        commutation,
        pseudo_inverse,
        invariance,
    })
}

/// Relative tolerance for eigenvector residuals during lifting.
pub const LIFT_TOL: f64 = 1e-7;

/// `‖M x − λ x‖ / (max(1, ‖M‖_∞)·‖x‖)`
pub fn relative_residual(m: &DMatrix<f64>, x: &DVector<f64>, lambda: f64) -> f64 {
    let r = m * x - x * lambda;
    r.norm() / (inf_norm(m).max(1.0) * x.norm())
}

/// `S·v`.
pub fn lift_vector(s: &DMatrix<f64>, v: &DVector<f64>) -> Result<DVector<f64>> {
    if v.len() != s.ncols() {
        return Err(Error::DimensionMismatch {
            expected: s.ncols(),
            got: v.len(),
        });
    }
    Ok(s * v)
}

/// Lifts an eigenvector `v` of `small` (eigenvalue `lambda`) through `s`
/// and checks that `S v` is an eigenvector of `large` with the same
/// eigenvalue. Holds whenever `large · S = S · small`.
pub fn lift_eigenvector(
    s: &DMatrix<f64>,
    small: &DMatrix<f64>,
    large: &DMatrix<f64>,
    v: &DVector<f64>,
    lambda: f64,
) -> Result<DVector<f64>> {
    let r = relative_residual(small, v, lambda);
    if r > LIFT_TOL {
        return Err(Error::NotEigenvector { residual: r });
    }
    let lifted = lift_vector(s, v)?;
    if lifted.norm() <= 1e-12 * v.norm().max(1.0) {
        return Err(Error::ZeroLift);
    }
    let r = relative_residual(large, &lifted, lambda);
    if r > LIFT_TOL {
        return Err(Error::NotEigenvector { residual: r });
    }
    Ok(lifted)
}

/// Projects an eigenvector `w` of `large` through `sᵀ` and checks that a
/// nonzero `Sᵀ w` is an eigenvector of `small`.
pub fn project_eigenvector(
    s: &DMatrix<f64>,
    large: &DMatrix<f64>,
    small: &DMatrix<f64>,
    w: &DVector<f64>,
    lambda: f64,
) -> Result<DVector<f64>> {
    let r = relative_residual(large, w, lambda);
    if r > LIFT_TOL {
        return Err(Error::NotEigenvector { residual: r });
    }
    if w.len() != s.nrows() {
        return Err(Error::DimensionMismatch {
            expected: s.nrows(),
            got: w.len(),
        });
    }
    let projected = s.transpose() * w;
    if projected.norm() <= 1e-9 * w.norm().max(1.0) {
        return Err(Error::ZeroLift);
    }
    let r = relative_residual(small, &projected, lambda);
    if r > LIFT_TOL {
        return Err(Error::NotEigenvector { residual: r });
    }
    Ok(projected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family};
    use crate::spectral::{spectrum, sym_eigen, SpectrumKind};

    fn gen(f: Family, p: &[usize]) -> Graph {
        generate(f, p).unwrap()
    }

    #[test]
    fn singleton_token_graph_is_base() {
        for g in [gen(Family::Petersen, &[]), gen(Family::Path, &[5])] {
            let f1 = token_graph(&g, 1).unwrap();
            assert_eq!(
                f1.graph().edges().collect::<Vec<_>>(),
                g.edges().collect::<Vec<_>>()
            );
            for v in 0..g.order() {
                assert_eq!(f1.label(v), vec![v]);
            }
        }
    }

    #[test]
    fn extreme_k() {
        let g = gen(Family::Cycle, &[5]);
        for k in [0, 5] {
            let f = token_graph(&g, k).unwrap();
            assert_eq!((f.graph().order(), f.graph().size()), (1, 0));
        }
        assert!(matches!(
            token_graph(&g, 6),
            Err(Error::TokenCountOutOfRange { .. })
        ));
    }

    #[test]
    fn c3_and_c9() {
        let f = token_graph(&gen(Family::Cycle, &[3]), 2).unwrap();
        let s = spectrum(f.graph(), SpectrumKind::Adjacency).unwrap();
        assert!(s.approx_eq(
            &crate::spectral::Spectrum::new(vec![-1.0, -1.0, 2.0], SpectrumKind::Adjacency),
            1e-10
        ));
        let f = token_graph(&gen(Family::Cycle, &[9]), 2).unwrap();
        assert_eq!((f.graph().order(), f.graph().size()), (36, 63));
        // a pair of adjacent tokens has two blocked moves
        for v in 0..36 {
            let lab = f.label(v);
            let gap = lab[1] - lab[0];
            let adjacent = gap == 1 || gap == 8;
            assert_eq!(f.graph().degree(v), if adjacent { 2 } else { 4 });
        }
    }

    #[test]
    fn cycle_token_edge_count() {
        for n in 3..=12 {
            let f = token_graph(&gen(Family::Cycle, &[n]), 2).unwrap();
            assert_eq!(f.graph().size(), n * (n - 2));
        }
    }

    #[test]
    fn complementary_k_cospectral() {
        let g = crate::io::parse_graph6("F?~vw").unwrap();
        for k in 0..=7 {
            let a = spectrum(token_graph(&g, k).unwrap().graph(), SpectrumKind::Adjacency).unwrap();
            let b = spectrum(
                token_graph(&g, 7 - k).unwrap().graph(),
                SpectrumKind::Adjacency,
            )
            .unwrap();
            assert!(a.approx_eq(&b, 1e-9));
        }
    }

    #[test]
    fn guard() {
        let g = gen(Family::Empty, &[40]);
        assert!(matches!(
            token_graph(&g, 4),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(token_graph(&g, 2).is_ok());
    }

    #[test]
    fn deterministic_edges() {
        let g = gen(Family::Petersen, &[]);
        let a = token_graph(&g, 3).unwrap();
        let b = token_graph(&g, 3).unwrap();
        assert_eq!(a.graph(), b.graph());
    }

    #[test]
    fn binomial_matrix_shapes() {
        let m = binomial_matrix(4, 2, 1).unwrap().to_matrix();
        assert_eq!(m.shape(), (6, 4));
        assert!(m.row_iter().all(|r| r.sum() == 2.0));
        assert!(m.column_iter().all(|c| c.sum() == 3.0));

        let m = binomial_matrix(5, 2, 0).unwrap().to_matrix();
        assert_eq!(m, DMatrix::from_element(10, 1, 1.0));

        let m = binomial_matrix(6, 3, 2).unwrap().to_matrix();
        let gram = m.transpose() * &m;
        assert!(gram.diagonal().iter().all(|&d| d == 4.0));

        assert!(binomial_matrix(4, 1, 2).is_err());
        assert!(binomial_matrix(3, 4, 1).is_err());
    }

    #[test]
    fn binomial_entries_are_inclusions() {
        let b = binomial_matrix(6, 3, 2).unwrap();
        let m = b.to_matrix();
        for a in 0..b.shape().0 {
            let big = b.row_indexer().unrank(a);
            for x in 0..b.shape().1 {
                let small = b.col_indexer().unrank(x);
                let subset = small.iter().all(|s| big.contains(s));
                assert_eq!(m[(a, x)] == 1.0, subset);
            }
        }
    }

    #[test]
    fn commutation_holds() {
        for g in [gen(Family::Path, &[4]), gen(Family::Petersen, &[])] {
            let r = verify_commutation(&g, 1, 2).unwrap();
            assert!(r.commutation <= COMMUTATION_TOL);
            assert!(r.pseudo_inverse <= PSEUDO_INVERSE_TOL);
            assert!(r.invariance <= PSEUDO_INVERSE_TOL);
        }
        let r = verify_commutation(&gen(Family::Cycle, &[6]), 2, 2).unwrap();
        assert_eq!(r.commutation, 0.0);
        let r = verify_commutation(&gen(Family::Cycle, &[7]), 1, 3).unwrap();
        assert!(r.pseudo_inverse <= PSEUDO_INVERSE_TOL);
        // C(4,3) < C(4,2): the Gram matrix has rank 4 < 6
        assert!(matches!(
            verify_commutation(&gen(Family::Cycle, &[4]), 2, 3),
            Err(Error::SingularGram)
        ));
    }

    #[test]
    fn lifting_and_projection() {
        let p4 = gen(Family::Path, &[4]);
        let l1 = p4.laplacian_matrix();
        let l2 = token_graph(&p4, 2).unwrap().graph().laplacian_matrix();
        let sb = binomial_matrix(4, 2, 1).unwrap().to_matrix();

        let eig = sym_eigen(&l1).unwrap();
        let alpha = eig.eigenvalues[1];
        let fiedler = eig.eigenvectors.column(1).clone_owned();
        let lifted = lift_eigenvector(&sb, &l1, &l2, &fiedler, alpha).unwrap();
        assert_eq!(lifted.len(), 6);

        let ones = DVector::from_element(4, 1.0);
        let lifted = lift_eigenvector(&sb, &l1, &l2, &ones, 0.0).unwrap();
        assert!(lifted.iter().all(|&x| x == 2.0));

        // projection of every eigenvector of L_2 with nonzero image
        let eig2 = sym_eigen(&l2).unwrap();
        let mut projected = 0;
        for i in 0..6 {
            let w = eig2.eigenvectors.column(i).clone_owned();
            match project_eigenvector(&sb, &l2, &l1, &w, eig2.eigenvalues[i]) {
                Ok(_) => projected += 1,
                Err(Error::ZeroLift) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(projected >= 4);

        assert!(matches!(
            lift_vector(&sb, &DVector::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
        let not_eig = DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            lift_eigenvector(&sb, &l1, &l2, &not_eig, 1.0),
            Err(Error::NotEigenvector { .. })
        ));
    }
}
