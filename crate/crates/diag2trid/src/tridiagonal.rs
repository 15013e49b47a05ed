//! Symmetric tridiagonal matrices: characteristic-polynomial recurrences,
//! a Sturm-sequence bisection eigensolver, and eigenvector recovery by
//! inverse iteration.
//!
//! The eigensolver is deliberately self-contained. Bisection on the Sturm
//! count is deterministic, returns the spectrum already sorted, and is
//! testable directly against the same three-term recurrence that defines
//! the characteristic polynomial, so the accuracy benchmark does not lean
//! on any external decomposition.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::poly::Polynomial;

/// Absolute bisection tolerance, as a fraction of the Gershgorin radius.
const EIG_TOL_ABS_REL: f64 = 1e-14;
/// Relative bisection tolerance per eigenvalue.
const EIG_TOL_REL: f64 = 4.0 * f64::EPSILON;
/// Hard cap on bisection steps; the tolerance is reached long before this.
const MAX_BISECTION_STEPS: usize = 200;
/// Inverse-iteration steps per eigenvector.
const INVERSE_ITERATIONS: usize = 2;

/// A symmetric tridiagonal matrix, stored as its diagonal `a₁..aₙ` and
/// off-diagonal `b₂..bₙ` (so `offdiag()[i]` couples rows `i` and `i + 1`
/// in 0-based terms).
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymmetricTridiagonal {
    /// Builds the matrix, checking `|offdiag| = |diag| − 1` and `n ≥ 1`.
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        if offdiag.len() != diag.len() - 1 {
            return Err(Error::DimensionMismatch {
                expected: diag.len() - 1,
                actual: offdiag.len(),
            });
        }
        Ok(SymmetricTridiagonal { diag, offdiag })
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// True iff every off-diagonal entry is nonzero (vacuously true for
    /// n = 1). Unreduced matrices have simple eigenvalues.
    pub fn is_unreduced(&self) -> bool {
        self.offdiag.iter().all(|&b| b != 0.0)
    }

    /// The trailing principal submatrix dropping the first `k` rows and
    /// columns (so `k = 0` is the matrix itself).
    pub fn trailing_submatrix(&self, k: usize) -> Result<Self> {
        if k >= self.n() {
            return Err(Error::EmptySpectrum);
        }
        SymmetricTridiagonal::new(self.diag[k..].to_vec(), self.offdiag[k..].to_vec())
    }

    /// Leading-principal-minor characteristic polynomials `p₀..pₙ`:
    ///
    /// ```text
    /// p₀ = 1,  p₁ = x − a₁,  p_k = (x − a_k)·p_{k−1} − b_k²·p_{k−2}
    /// ```
    ///
    /// `result[k]` is det(xI − T(1:k,1:k)); the last element is the full
    /// characteristic polynomial.
    pub fn charpoly_top_down(&self) -> Vec<Polynomial> {
        let n = self.n();
        let mut ps = Vec::with_capacity(n + 1);
        ps.push(Polynomial::constant(1.0));
        ps.push(Polynomial::new(vec![-self.diag[0], 1.0]));
        for k in 2..=n {
            let b2 = self.offdiag[k - 2] * self.offdiag[k - 2];
            let next = ps[k - 1]
                .mul_linear(self.diag[k - 1])
                .sub_scaled(b2, &ps[k - 2]);
            ps.push(next);
        }
        ps
    }

    /// The same recurrence run from the bottom of the diagonal to the top.
    ///
    /// `result[k]` is the characteristic polynomial of the trailing
    /// submatrix obtained by deleting the first `k` rows and columns:
    /// `result[0]` is the full characteristic polynomial, `result[1]` the
    /// one of T(2:n,2:n), and `result[n]` the empty-matrix convention `1`.
    pub fn charpoly_bottom_up(&self) -> Vec<Polynomial> {
        let n = self.n();
        let mut fs = vec![Polynomial::constant(1.0); n + 1];
        fs[n - 1] = Polynomial::new(vec![-self.diag[n - 1], 1.0]);
        for k in (0..n.saturating_sub(1)).rev() {
            let b2 = self.offdiag[k] * self.offdiag[k];
            fs[k] = fs[k + 1].mul_linear(self.diag[k]).sub_scaled(b2, &fs[k + 2]);
        }
        fs
    }

    /// det(xI − T), via the bottom-up recurrence.
    pub fn charpoly(&self) -> Polynomial {
        self.charpoly_bottom_up().swap_remove(0)
    }

    /// Evaluates the characteristic polynomial and its derivative at `x`
    /// in value space (no coefficient formation), by differentiating the
    /// bottom-up recurrence.
    pub fn charpoly_value_and_derivative_at(&self, x: f64) -> (f64, f64) {
        let n = self.n();
        // (f, f') pairs for indices k+2, k+1 while sweeping k downwards.
        let mut f_above = (1.0, 0.0);
        let mut f_cur = (x - self.diag[n - 1], 1.0);
        for k in (0..n - 1).rev() {
            let b2 = self.offdiag[k] * self.offdiag[k];
            let v = (x - self.diag[k]) * f_cur.0 - b2 * f_above.0;
            let d = f_cur.0 + (x - self.diag[k]) * f_cur.1 - b2 * f_above.1;
            f_above = f_cur;
            f_cur = (v, d);
        }
        f_cur
    }

    /// Value of the characteristic polynomial of T(2:n,2:n) at `x`
    /// (the empty-matrix convention gives 1 for n = 1).
    pub fn trailing_charpoly_value_at(&self, x: f64) -> f64 {
        let n = self.n();
        if n == 1 {
            return 1.0;
        }
        let mut above = 1.0;
        let mut cur = x - self.diag[n - 1];
        for k in (1..n - 1).rev() {
            let b2 = self.offdiag[k] * self.offdiag[k];
            let v = (x - self.diag[k]) * cur - b2 * above;
            above = cur;
            cur = v;
        }
        cur
    }

    /// Interval `[lo, hi]` containing the whole spectrum, from the union of
    /// the Gershgorin discs `|x − a_k| ≤ |b_k| + |b_{k+1}|`.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let n = self.n();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i < n - 1 { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    fn gershgorin_radius(&self) -> f64 {
        let (lo, hi) = self.gershgorin_bounds();
        lo.abs().max(hi.abs())
    }

    /// Number of eigenvalues strictly less than `x`.
    ///
    /// Runs the pivot recurrence of the LDLᵀ factorization of T − xI,
    ///
    /// ```text
    /// d₁ = a₁ − x,   d_k = (a_k − x) − b_k² / d_{k−1},
    /// ```
    ///
    /// and counts negative pivots. Pivots are floored in magnitude at
    /// ε · (Gershgorin radius) before dividing, which keeps the recurrence
    /// finite when `x` hits a Ritz value exactly; the raw three-term
    /// polynomial values would overflow for n ≳ 50, the quotient form does
    /// not.
    pub fn sturm_count(&self, x: f64) -> usize {
        let floor = f64::EPSILON * self.gershgorin_radius() + f64::MIN_POSITIVE;
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if d < 0.0 {
            count += 1;
        }
        for k in 1..self.n() {
            let d_safe = if d.abs() < floor {
                if d < 0.0 { -floor } else { floor }
            } else {
                d
            };
            d = (self.diag[k] - x) - self.offdiag[k - 1] * self.offdiag[k - 1] / d_safe;
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// All eigenvalues in ascending order, by bisection on
    /// [`SymmetricTridiagonal::sturm_count`] inside the Gershgorin bracket.
    ///
    /// Each eigenvalue is bracketed to width `tol_abs + tol_rel·|λ|` with
    /// `tol_abs = 1e−14 · (Gershgorin radius)` and `tol_rel = 4ε`.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.n();
        if n == 1 {
            return vec![self.diag[0]];
        }
        let (lo, hi) = self.gershgorin_bounds();
        let radius = lo.abs().max(hi.abs());
        // Nudge the bracket outwards so eigenvalues sitting exactly on a
        // Gershgorin endpoint stay strictly inside.
        let pad = 4.0 * f64::EPSILON * radius.max(1.0) + f64::MIN_POSITIVE;
        let (lo, hi) = (lo - pad, hi + pad);
        let tol_abs = EIG_TOL_ABS_REL * radius;

        let mut eigenvalues = Vec::with_capacity(n);
        for k in 0..n {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..MAX_BISECTION_STEPS {
                let mid = 0.5 * (a + b);
                if b - a <= tol_abs + EIG_TOL_REL * mid.abs() {
                    break;
                }
                if self.sturm_count(mid) <= k {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            eigenvalues.push(0.5 * (a + b));
        }
        eigenvalues
    }

    /// Full eigendecomposition of an unreduced matrix with well-separated
    /// eigenvalues: bisection for the values, two rounds of inverse
    /// iteration per vector, columns sorted by ascending eigenvalue, each
    /// vector's first significant component made positive.
    pub fn eigen_decomposition(&self) -> Result<EigenDecomposition> {
        if let Some(index) = self.offdiag.iter().position(|&b| b == 0.0) {
            return Err(Error::ReducedMatrix { index });
        }
        let n = self.n();
        let values = self.eigenvalues();
        let radius = self.gershgorin_radius();
        let tol_abs = EIG_TOL_ABS_REL * radius;
        for i in 0..n - 1 {
            let gap = values[i + 1] - values[i];
            let tol = tol_abs + EIG_TOL_REL * values[i].abs().max(values[i + 1].abs());
            if gap <= 4.0 * tol {
                return Err(Error::ClusteredSpectrum { index: i, gap });
            }
        }

        let mut vectors = SquareMatrix::zeros(n);
        for (i, &lambda) in values.iter().enumerate() {
            let v = self.inverse_iteration_vector(lambda);
            for r in 0..n {
                vectors[(r, i)] = v[r];
            }
        }
        Ok(EigenDecomposition { values, vectors })
    }

    fn inverse_iteration_vector(&self, lambda: f64) -> Vec<f64> {
        let lu = ShiftedTridiagonalLu::factor(self, lambda);
        let mut v = deterministic_start(self.n());
        normalize(&mut v);
        for _ in 0..INVERSE_ITERATIONS {
            lu.solve_in_place(&mut v);
            normalize(&mut v);
        }
        fix_sign(&mut v);
        v
    }
}

/// Sorted eigenvalues plus the orthogonal matrix of eigenvectors
/// (column `i` belongs to `values[i]`).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    vectors: SquareMatrix,
}

impl EigenDecomposition {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &SquareMatrix {
        &self.vectors
    }

    /// The eigenvector for `values()[i]`.
    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.vectors.column(i)
    }
}

/// LU factorization of T − λI with partial pivoting. Pivoting fills in a
/// second superdiagonal; exact zero pivots (λ equal to an eigenvalue to the
/// last bit) are perturbed by ε·scale so inverse iteration can proceed.
struct ShiftedTridiagonalLu {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper1: Vec<f64>,
    upper2: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedTridiagonalLu {
    fn factor(t: &SymmetricTridiagonal, shift: f64) -> Self {
        let n = t.n();
        let mut diag: Vec<f64> = t.diag.iter().map(|&a| a - shift).collect();
        let mut lower = t.offdiag.clone();
        let mut upper1 = t.offdiag.clone();
        let mut upper2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        let tiny = f64::EPSILON * (t.gershgorin_radius() + shift.abs()) + f64::MIN_POSITIVE;

        for i in 0..n.saturating_sub(1) {
            if diag[i].abs() >= lower[i].abs() {
                if diag[i].abs() < tiny {
                    diag[i] = if diag[i] < 0.0 { -tiny } else { tiny };
                }
                let fact = lower[i] / diag[i];
                lower[i] = fact;
                diag[i + 1] -= fact * upper1[i];
                if i + 2 < n {
                    upper2[i] = 0.0;
                }
            } else {
                let fact = diag[i] / lower[i];
                diag[i] = lower[i];
                lower[i] = fact;
                let temp = upper1[i];
                upper1[i] = diag[i + 1];
                diag[i + 1] = temp - fact * diag[i + 1];
                if i + 2 < n {
                    upper2[i] = upper1[i + 1];
                    upper1[i + 1] = -fact * upper1[i + 1];
                }
                swapped[i] = true;
            }
        }
        if diag[n - 1].abs() < tiny {
            diag[n - 1] = if diag[n - 1] < 0.0 { -tiny } else { tiny };
        }
        ShiftedTridiagonalLu { lower, diag, upper1, upper2, swapped }
    }

    fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.diag.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.lower[i] * b[i];
            } else {
                b[i + 1] -= self.lower[i] * b[i];
            }
        }
        b[n - 1] /= self.diag[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.upper1[n - 2] * b[n - 1]) / self.diag[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.upper1[i] * b[i + 1] - self.upper2[i] * b[i + 2]) / self.diag[i];
        }
    }
}

/// Fixed pseudo-random start for inverse iteration: deterministic for a
/// given n, with no structural alignment to any particular eigenvector.
fn deterministic_start(n: usize) -> Vec<f64> {
    let mut state = 0x9E37_79B9_7F4A_7C15_u64 ^ (n as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    (0..n)
        .map(|_| {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^= z >> 31;
            (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        })
        .collect()
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

/// Flips the vector so its first significant component is positive, making
/// decompositions comparable across runs.
fn fix_sign(v: &mut [f64]) {
    let scale = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if let Some(lead) = v.iter().find(|x| x.abs() > 1e-8 * scale)
        && *lead < 0.0
    {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}
