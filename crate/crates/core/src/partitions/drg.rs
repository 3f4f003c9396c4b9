use nalgebra::DMatrix;
use serde::Serialize;

use super::equitable::{quotient_eigenvalues, quotient_matrices, Partition, QuotientPair};
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::sym_eigen;
use crate::token::{token_graph, TokenGraph};

/// `{b_0, .., b_{d−1}; c_1, .., c_d}` of a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    b: Vec<usize>,
    c: Vec<usize>,
}

impl IntersectionArray {
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidIntersectionArray(m));
        let d = b.len();
        if d == 0 || c.len() != d {
            return bad(format!(
                "need d >= 1 entries on both sides, got {} and {}",
                b.len(),
                c.len()
            ));
        }
        if c[0] != 1 {
            return bad(format!("c_1 must be 1, got {}", c[0]));
        }
        let delta = b[0];
        for i in 1..=d {
            let bi = if i < d { b[i] } else { 0 };
            let ci = c[i - 1];
            if i < d && bi == 0 {
                return bad(format!("b_{i} must be positive"));
            }
            if ci == 0 {
                return bad(format!("c_{i} must be positive"));
            }
            if bi + ci > delta {
                return bad(format!(
                    "b_{i} + c_{i} = {} exceeds degree {delta}",
                    bi + ci
                ));
            }
        }
        let ia = IntersectionArray { b, c };
        // vertex counts must be integral
        let mut k = 1u128;
        for i in 1..=d {
            let num = k * ia.b(i - 1) as u128;
            if !num.is_multiple_of(ia.c(i) as u128) {
                return bad(format!("k_{i} = {num}/{} is not an integer", ia.c(i)));
            }
            k = num / ia.c(i) as u128;
        }
        Ok(ia)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn degree(&self) -> usize {
        self.b[0]
    }

    /// `b_i`, with `b_d = 0`.
    pub fn b(&self, i: usize) -> usize {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = δ − b_i − c_i`.
    pub fn a(&self, i: usize) -> usize {
        self.degree() - self.b(i) - self.c(i)
    }

    pub fn b_list(&self) -> &[usize] {
        &self.b
    }

    pub fn c_list(&self) -> &[usize] {
        &self.c
    }

    /// `k_i = |G_i(u)|` for `i = 0..=d`.
    pub fn vertex_counts(&self) -> Vec<usize> {
        let mut k = vec![1usize];
        for i in 1..=self.diameter() {
            k.push(k[i - 1] * self.b(i - 1) / self.c(i));
        }
        k
    }

    pub fn order(&self) -> usize {
        self.vertex_counts().iter().sum()
    }

    /// The tridiagonal `(d+1) × (d+1)` matrix with row `i` equal to
    /// `(c_i, a_i, b_i)` around the diagonal.
    pub fn intersection_matrix(&self) -> DMatrix<f64> {
        let d = self.diameter();
        let mut m = DMatrix::zeros(d + 1, d + 1);
        for i in 0..=d {
            m[(i, i)] = self.a(i) as f64;
            if i > 0 {
                m[(i, i - 1)] = self.c(i) as f64;
            }
            if i < d {
                m[(i, i + 1)] = self.b(i) as f64;
            }
        }
        m
    }

    /// Distinct adjacency eigenvalues `θ_0 > .. > θ_d`, from the symmetric
    /// tridiagonal matrix similar to the intersection matrix.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let d = self.diameter();
        let mut t = DMatrix::zeros(d + 1, d + 1);
        for i in 0..=d {
            t[(i, i)] = self.a(i) as f64;
            if i < d {
                let off = ((self.b(i) * self.c(i + 1)) as f64).sqrt();
                t[(i, i + 1)] = off;
                t[(i + 1, i)] = off;
            }
        }
        let mut v = sym_eigen(&t)?.eigenvalues_vec();
        v.reverse();
        Ok(v)
    }
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

/// Outcome of [`drg_intersection_array`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrgVerdict {
    DistanceRegular(IntersectionArray),
    /// The pair `(u, v)` at `distance` whose counts differ from those of
    /// the first pair seen at that distance.
    NotDistanceRegular {
        u: usize,
        v: usize,
        distance: usize,
    },
}

impl DrgVerdict {
    pub fn array(&self) -> Option<&IntersectionArray> {
        match self {
            DrgVerdict::DistanceRegular(ia) => Some(ia),
            DrgVerdict::NotDistanceRegular { .. } => None,
        }
    }
}

/// Detects distance-regularity by counting, for every pair `(u, v)` at
/// distance `i`, the neighbours of `v` at distances `i−1, i, i+1` from `u`.
pub fn drg_intersection_array(g: &Graph) -> Result<DrgVerdict> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooSmall { needed: 2, n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_regular() {
        return Err(Error::NotRegular);
    }
    let dm = g.distance_matrix();
    let d = dm.diameter().unwrap_or(0);
    // counts[i] = (c_i, a_i, b_i) as first observed
    let mut counts: Vec<Option<(usize, usize, usize)>> = vec![None; d + 1];
    for u in 0..n {
        for v in 0..n {
            let i = dm.get(u, v).expect("connected");
            let mut cab = (0, 0, 0);
            for &w in g.neighbors(v) {
                let j = dm.get(u, w).expect("connected");
                if j + 1 == i {
                    cab.0 += 1;
                } else if j == i {
                    cab.1 += 1;
                } else {
                    cab.2 += 1;
                }
            }
            match counts[i] {
                None => counts[i] = Some(cab),
                Some(seen) if seen != cab => {
                    return Ok(DrgVerdict::NotDistanceRegular { u, v, distance: i })
                }
                Some(_) => {}
            }
        }
    }
    let counts: Vec<_> = counts
        .into_iter()
        .map(|x| x.expect("every distance occurs"))
        .collect();
    let b = (0..d).map(|i| counts[i].2).collect();
    let c = (1..=d).map(|i| counts[i].0).collect();
    Ok(DrgVerdict::DistanceRegular(IntersectionArray::new(b, c)?))
}

/// `A(F_2/π)` and `L(F_2/π)` for the partition of 2-subsets by distance
/// `1..d`, in the row convention: row `i` holds the neighbour counts of a
/// pair at distance `i` into the classes `i−1, i, i+1`, namely
/// `2c_i, 2a_i, 2b_i` (no `c` term for `i = 1`, since the tokens cannot
/// coincide).
pub fn drg_f2_quotients(ia: &IntersectionArray) -> (DMatrix<f64>, DMatrix<f64>) {
    let d = ia.diameter();
    let mut a = DMatrix::zeros(d, d);
    let mut l = DMatrix::zeros(d, d);
    for r in 0..d {
        let i = r + 1;
        a[(r, r)] = 2.0 * ia.a(i) as f64;
        if r > 0 {
            a[(r, r - 1)] = 2.0 * ia.c(i) as f64;
            l[(r, r - 1)] = -2.0 * ia.c(i) as f64;
        }
        if r + 1 < d {
            a[(r, r + 1)] = 2.0 * ia.b(i) as f64;
            l[(r, r + 1)] = -2.0 * ia.b(i) as f64;
        }
        let c_term = if i > 1 { ia.c(i) } else { 0 };
        l[(r, r)] = 2.0 * (c_term + ia.b(i)) as f64;
    }
    (a, l)
}

/// Class sizes `|C_i| = n·k_i/2` of the distance-pair partition of `F_2`.
pub fn drg_f2_cell_sizes(ia: &IntersectionArray) -> Vec<usize> {
    let n = ia.order();
    ia.vertex_counts()[1..].iter().map(|k| n * k / 2).collect()
}

/// Eigenvalues of both F_2 quotients, ascending, via symmetrization.
pub fn drg_f2_quotient_spectra(ia: &IntersectionArray) -> Result<(Vec<f64>, Vec<f64>)> {
    let (a, l) = drg_f2_quotients(ia);
    let sizes = drg_f2_cell_sizes(ia);
    let mut sl = quotient_eigenvalues(&l, &sizes)?;
    for v in &mut sl {
        if *v < 0.0 && *v > -1e-9 {
            *v = 0.0;
        }
    }
    Ok((quotient_eigenvalues(&a, &sizes)?, sl))
}

/// The partition of `F_2(G)` by the distance in `G` of the two tokens,
/// with cell `i−1` holding the pairs at distance `i`.
pub fn distance_pair_partition(f2: &TokenGraph) -> Result<Partition> {
    if f2.k() != 2 {
        return Err(Error::BadParameters {
            family: "distance-pair partition".into(),
            reason: format!("needs a 2-token graph, got k = {}", f2.k()),
        });
    }
    let base = f2.base();
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let dm = base.distance_matrix();
    Partition::new(
        (0..f2.graph().order())
            .map(|v| {
                let l = f2.label(v);
                dm.get(l[0], l[1]).expect("connected") - 1
            })
            .collect(),
    )
}

/// Builds `F_2(G)` explicitly, computes the quotients of its distance-pair
/// partition and compares them with [`drg_f2_quotients`] entrywise.
pub fn drg_f2_cross_check(g: &Graph, ia: &IntersectionArray) -> Result<QuotientPair> {
    let f2 = token_graph(g, 2)?;
    let pi = distance_pair_partition(&f2)?;
    let explicit = quotient_matrices(f2.graph(), &pi)?;
    let (a, l) = drg_f2_quotients(ia);
    if explicit.q_a != a || explicit.q_l != l {
        return Err(Error::CheckFailed(format!(
            "F_2 distance-pair quotients differ from the intersection-array formula: \
             explicit A = {:?}, formula A = {:?}",
            explicit.q_a.as_slice(),
            a.as_slice()
        )));
    }
    if explicit.cell_sizes != drg_f2_cell_sizes(ia) {
        return Err(Error::CheckFailed(
            "distance-pair class sizes differ".into(),
        ));
    }
    Ok(explicit)
}

/// `p_0, .., p_d` from `x p_i = b_{i−1} p_{i−1} + a_i p_i + c_{i+1} p_{i+1}`.
pub fn distance_polynomials(ia: &IntersectionArray) -> Vec<Poly> {
    let d = ia.diameter();
    let mut p = vec![Poly::constant(1.0), Poly::x()];
    for i in 1..d {
        let shifted = Poly::x().mul(&p[i]).sub(&p[i].scale(ia.a(i) as f64));
        let next = shifted
            .sub(&p[i - 1].scale(ia.b(i - 1) as f64))
            .scale(1.0 / ia.c(i + 1) as f64);
        p.push(next);
    }
    p.truncate(d + 1);
    p
}

/// Maximum entrywise deviation of `p_i(A)` from the distance matrices `A_i`.
pub fn verify_distance_polynomials(g: &Graph, polys: &[Poly]) -> f64 {
    let a = g.adjacency_matrix();
    let dm = g.distance_matrix();
    polys
        .iter()
        .enumerate()
        .map(|(i, p)| (p.eval_matrix(&a) - dm.distance_indicator(i)).abs().max())
        .fold(0.0, f64::max)
}

/// Result of [`conjugate_polynomial_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugateCheck {
    /// `p̄_d`, interpolating `1/p_d(θ_i)` on the mesh.
    pub conjugate: Poly,
    pub mesh: Vec<f64>,
    /// Eigenvalues of `½ A(F_2/π)`, ascending.
    pub half_quotient_eigenvalues: Vec<f64>,
    /// Largest coefficient gap between `monic(p̄_d)` and `∏ (x − μ)`.
    pub max_deviation: f64,
}

pub const CONJUGATE_TOL: f64 = 1e-6;

/// Interpolates `p̄_d` and checks that its roots are the eigenvalues of
/// `½ A(F_2/π)`. `mesh` holds the `d+1` distinct eigenvalues of `G`.
pub fn conjugate_polynomial_check(ia: &IntersectionArray, mesh: &[f64]) -> Result<ConjugateCheck> {
    let d = ia.diameter();
    if mesh.len() != d + 1 {
        return Err(Error::MeshSize {
            expected: d + 1,
            found: mesh.len(),
        });
    }
    let pd = distance_polynomials(ia).pop().expect("d >= 1");
    let mut values = Vec::with_capacity(d + 1);
    for &t in mesh {
        let v = pd.eval(t);
        if v.abs() <= 1e-9 * t.abs().max(1.0).powi(d as i32) {
            return Err(Error::VanishingDistancePolynomial(t));
        }
        values.push(1.0 / v);
    }
    let conjugate = Poly::lagrange(mesh, &values)?;
    let (a, _) = drg_f2_quotients(ia);
    let half: Vec<f64> = quotient_eigenvalues(&a, &drg_f2_cell_sizes(ia))?
        .into_iter()
        .map(|x| x / 2.0)
        .collect();
    let expected = Poly::from_roots(&half);
    let max_deviation = if conjugate.degree() == Some(d) {
        conjugate.monic().max_coeff_diff(&expected)
    } else {
        f64::INFINITY
    };
    let scale = expected.coeffs().iter().fold(1.0f64, |m, c| m.max(c.abs()));
    if max_deviation > CONJUGATE_TOL * scale {
        return Err(Error::CheckFailed(format!(
            "conjugate polynomial {conjugate} does not vanish on the half-quotient eigenvalues \
             (coefficient gap {max_deviation:e})"
        )));
    }
    Ok(ConjugateCheck {
        conjugate,
        mesh: mesh.to_vec(),
        half_quotient_eigenvalues: half,
        max_deviation,
    })
}

/// One row of the interlacing sandwich `2θ_{i+1} ≤ μ_i ≤ 2θ_i`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InterlacingRow {
    pub i: usize,
    pub lower: f64,
    pub mu: f64,
    pub upper: f64,
}

/// The eigenvalues `μ_0 > .. > μ_{d−1}` of `A(F_2/π)` against twice the
/// distinct eigenvalues of `G`.
pub fn drg_interlacing(ia: &IntersectionArray) -> Result<Vec<InterlacingRow>> {
    let theta = ia.eigenvalues()?;
    let (mut mu, _) = drg_f2_quotient_spectra(ia)?;
    mu.reverse();
    Ok(mu
        .into_iter()
        .enumerate()
        .map(|(i, mu)| InterlacingRow {
            i,
            lower: 2.0 * theta[i + 1],
            mu,
            upper: 2.0 * theta[i],
        })
        .collect())
}
