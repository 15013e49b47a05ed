//! The stable route: conjugate diag(λ) by a reflection that spreads e₁
//! uniformly, then reduce back to tridiagonal form with Householder
//! similarity transforms, accumulating the orthogonal factor.
//!
//! The one idea that makes this work: the reflection Q is chosen with
//! Qe₁ = e/√n, and Householder tridiagonalization leaves e₁ alone
//! (H(:,1) = H(1,:)ᵀ = e₁), so the matrix that diagonalizes the result has
//! first row e ᵀ/√n, exactly the signature of the matrices the polynomial
//! route produces. Everything else is standard dense linear algebra.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::tridiagonal::SymmetricTridiagonal;
use crate::validate_strictly_increasing;

/// A full symmetric matrix; symmetry is enforced by construction
/// (symmetrization after updates, never raw asymmetric storage).
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetric {
    mat: SquareMatrix,
}

impl DenseSymmetric {
    /// Wraps `(M + Mᵀ)/2`, squeezing out rounding asymmetry.
    pub fn symmetrized(m: SquareMatrix) -> Self {
        let n = m.n();
        let mat = SquareMatrix::from_fn(n, |i, j| 0.5 * (m.get(i, j) + m.get(j, i)));
        DenseSymmetric { mat }
    }

    pub fn n(&self) -> usize {
        self.mat.n()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.mat.get(i, j)
    }

    pub fn as_matrix(&self) -> &SquareMatrix {
        &self.mat
    }
}

/// An explicitly accumulated orthogonal matrix (a product of reflectors).
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalAccumulator {
    mat: SquareMatrix,
}

impl OrthogonalAccumulator {
    pub fn identity(n: usize) -> Self {
        OrthogonalAccumulator { mat: SquareMatrix::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.mat.n()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.mat.get(i, j)
    }

    pub fn as_matrix(&self) -> &SquareMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.mat
    }

    /// ‖QᵀQ − I‖_max.
    pub fn orthogonality_defect(&self) -> f64 {
        self.mat.orthogonality_defect()
    }
}

/// The Householder reflection Q = I − 2vvᵀ/vᵀv with v = e₁ − e/√n, so that
/// Qe₁ = e/√n. Symmetric and orthogonal; Q = [1] for n = 1.
pub fn reflection_to_uniform(n: usize) -> OrthogonalAccumulator {
    assert!(n >= 1, "reflection needs n ≥ 1");
    if n == 1 {
        return OrthogonalAccumulator::identity(1);
    }
    let inv_sqrt_n = 1.0 / (n as f64).sqrt();
    let mut v = vec![-inv_sqrt_n; n];
    v[0] += 1.0;
    let vtv: f64 = v.iter().map(|x| x * x).sum();
    let scale = 2.0 / vtv;
    let mat = SquareMatrix::from_fn(n, |i, j| {
        let delta = if i == j { 1.0 } else { 0.0 };
        delta - scale * v[i] * v[j]
    });
    OrthogonalAccumulator { mat }
}

/// A = Qᵀ·diag(λ)·Q without forming the diagonal matrix: scale the rows of
/// Q by λ, multiply, then symmetrize.
pub fn conjugate_diagonal(
    lambdas: &[f64],
    q: &OrthogonalAccumulator,
) -> Result<DenseSymmetric> {
    let n = q.n();
    if lambdas.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: lambdas.len() });
    }
    let mut prod = SquareMatrix::zeros(n);
    for i in 0..n {
        for k in 0..n {
            // (Qᵀ D Q)_{ij} = Σ_k Q_{ki} λ_k Q_{kj}
            let qki_lk = q.get(k, i) * lambdas[k];
            if qki_lk == 0.0 {
                continue;
            }
            for j in 0..n {
                prod[(i, j)] += qki_lk * q.get(k, j);
            }
        }
    }
    Ok(DenseSymmetric::symmetrized(prod))
}

/// Householder tridiagonalization with explicit accumulation: returns
/// (T̂, H) with HᵀAH = T̂, H orthogonal, and H(:,1) = H(1,:)ᵀ = e₁.
///
/// Reflector signs follow the usual cancellation-avoiding choice, so the
/// off-diagonal signs of T̂ are implementation-defined; compare magnitudes.
/// A zero column below the subdiagonal is not an error — it just leaves a
/// zero off-diagonal entry, i.e. a reduced T̂, which downstream consumers
/// flag themselves.
pub fn tridiagonalize(a: &DenseSymmetric) -> (SymmetricTridiagonal, OrthogonalAccumulator) {
    let n = a.n();
    let mut work = a.as_matrix().clone();
    let mut h = SquareMatrix::identity(n);

    // n ≤ 2 is already tridiagonal; the loop below would not execute.
    if n > 2 {
        let mut v = vec![0.0; n];
        for k in 0..n - 2 {
            let m = n - k - 1; // active length of the column below row k
            let norm_sq: f64 = (k + 1..n).map(|i| work[(i, k)] * work[(i, k)]).sum();
            if norm_sq == 0.0 {
                continue; // nothing to annihilate; off-diagonal entry is 0
            }
            let x0 = work[(k + 1, k)];
            let alpha = if x0 >= 0.0 { -norm_sq.sqrt() } else { norm_sq.sqrt() };
            // v = x − α e₁ on the active window
            v[0] = x0 - alpha;
            for i in 1..m {
                v[i] = work[(k + 1 + i, k)];
            }
            let vtv = alpha * (alpha - x0) * 2.0; // = ‖x − αe₁‖² for this α
            if vtv == 0.0 {
                continue;
            }
            let beta = 2.0 / vtv;

            // Symmetric rank-2 update of the trailing block:
            // p = β·A₂₂·v, w = p − (β·pᵀv/2)·v, A₂₂ ← A₂₂ − vwᵀ − wvᵀ.
            let mut p = vec![0.0; m];
            for i in 0..m {
                let mut s = 0.0;
                for j in 0..m {
                    s += work[(k + 1 + i, k + 1 + j)] * v[j];
                }
                p[i] = beta * s;
            }
            let ptv: f64 = p.iter().zip(&v[..m]).map(|(pi, vi)| pi * vi).sum();
            let half_beta_ptv = 0.5 * beta * ptv;
            for i in 0..m {
                let wi = p[i] - half_beta_ptv * v[i];
                for j in 0..m {
                    let wj = p[j] - half_beta_ptv * v[j];
                    work[(k + 1 + i, k + 1 + j)] -= v[i] * wj + wi * v[j];
                }
            }

            // The pivot column collapses to (α, 0, …, 0); mirror the row.
            work[(k + 1, k)] = alpha;
            work[(k, k + 1)] = alpha;
            for i in k + 2..n {
                work[(i, k)] = 0.0;
                work[(k, i)] = 0.0;
            }

            // Accumulate H ← H·P on columns k+1..n. Row 0 of H is never
            // touched: every reflector fixes e₁.
            for r in 0..n {
                let mut s = 0.0;
                for j in 0..m {
                    s += h[(r, k + 1 + j)] * v[j];
                }
                let bs = beta * s;
                if bs != 0.0 {
                    for j in 0..m {
                        h[(r, k + 1 + j)] -= bs * v[j];
                    }
                }
            }
        }
    }

    let diag = (0..n).map(|i| work[(i, i)]).collect();
    let offdiag = (0..n.saturating_sub(1)).map(|i| work[(i + 1, i)]).collect();
    let t = SymmetricTridiagonal::new(diag, offdiag).expect("lengths consistent by construction");
    (t, OrthogonalAccumulator { mat: h })
}

/// The whole stable construction. Given strictly increasing eigenvalues,
/// returns `(T̂, W)` where
///
/// ```text
/// T̂ = (QH)ᵀ · diag(λ) · (QH),    W = (QH)ᵀ,
/// ```
///
/// so W is orthogonal, Wᵀ·T̂·W = diag(λ), the columns of W are the
/// eigenvectors of T̂ in ascending-eigenvalue order, and — because H fixes
/// e₁ and Qe₁ = e/√n — the first row of W is exactly e ᵀ/√n. T̂ is
/// unreduced for distinct λ.
pub fn diag2trid(
    lambdas: &[f64],
) -> Result<(SymmetricTridiagonal, OrthogonalAccumulator)> {
    validate_strictly_increasing(lambdas)?;
    let n = lambdas.len();
    let q = reflection_to_uniform(n);
    let a = conjugate_diagonal(lambdas, &q)?;
    let (t, h) = tridiagonalize(&a);
    let w = q.as_matrix().mul(h.as_matrix()).transpose();
    Ok((t, OrthogonalAccumulator { mat: w }))
}
