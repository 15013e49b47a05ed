//! Construct an unreduced symmetric tridiagonal matrix with a prescribed
//! set of distinct real eigenvalues — two ways.
//!
//! Given λ₁ < λ₂ < … < λₙ, both routes produce a matrix
//!
//! ```text
//!     ⎡ a₁  b₂          ⎤
//! T = ⎢ b₂  a₂  b₃      ⎥        with all bₖ ≠ 0
//!     ⎢     ⋱   ⋱   ⋱   ⎥
//!     ⎣         bₙ  aₙ  ⎦
//! ```
//!
//! whose eigenvalues are exactly the λᵢ in exact arithmetic:
//!
//! * [`schmeisser::naive_solve`] expands ∏(x − λᵢ) into monomial
//!   coefficients and runs a polynomial division chain. Elegant, and
//!   numerically doomed as n grows — the expansion is the classic
//!   ill-conditioned step, and the computed matrix's eigenvalues drift off
//!   the prescribed ones past n ≈ 26 even though its characteristic
//!   polynomial stays accurate.
//! * [`householder::diag2trid`] conjugates diag(λ) by a reflection that
//!   maps e₁ to e/√n and reduces the result back to tridiagonal form with
//!   Householder similarity transforms. Backward stable at any n.
//!
//! The two are mathematically equivalent: an unreduced symmetric
//! tridiagonal matrix is determined, up to off-diagonal signs, by its
//! spectrum and the first row of its orthogonal diagonalizer — and both
//! constructions pin that first row to e ᵀ/√n. The [`verify`] module turns
//! this equivalence and the identities behind it into executable residual
//! checks, and [`bench`] measures the accuracy collapse of the polynomial
//! route against the stable one.
//!
//! ```
//! use diag2trid::{diag2trid, naive_solve, verify};
//!
//! let lambdas = [-1.0, 0.0, 1.0];
//! let t_poly = naive_solve(&lambdas).unwrap();
//! let (t_house, w) = diag2trid(&lambdas).unwrap();
//!
//! // Same diagonal, same off-diagonal magnitudes, eigenvalues recovered.
//! assert!(t_poly.diag().iter().all(|a| a.abs() < 1e-12));
//! assert!((t_poly.offdiag()[0] - (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
//! assert!((t_house.offdiag()[0].abs() - (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
//! assert!(verify::first_row_uniform_residual(&w) < 1e-14);
//! let recovered = t_house.eigenvalues();
//! assert!((recovered[0] + 1.0).abs() < 1e-12);
//! ```

pub mod bench;
pub mod cli;
pub mod error;
pub mod householder;
pub mod matrix;
pub mod poly;
pub mod schmeisser;
pub mod tridiagonal;
pub mod verify;

pub use bench::{Algorithm, ExperimentConfig, ExperimentRecord};
pub use error::{Error, Result};
pub use householder::{DenseSymmetric, OrthogonalAccumulator, diag2trid};
pub use matrix::SquareMatrix;
pub use poly::Polynomial;
pub use schmeisser::{SchmeisserSequence, naive_solve};
pub use tridiagonal::{EigenDecomposition, SymmetricTridiagonal};

/// Checks λ₁ < λ₂ < … < λₙ and n ≥ 1, reporting the first offending index.
pub(crate) fn validate_strictly_increasing(lambdas: &[f64]) -> Result<()> {
    if lambdas.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    for i in 1..lambdas.len() {
        if !(lambdas[i] > lambdas[i - 1]) {
            return Err(Error::NotStrictlyIncreasing { index: i });
        }
    }
    Ok(())
}

/// The guide chapters from `book/`, embedded here so `cargo test --doc`
/// compiles and runs every code snippet in the book.
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    pub mod polynomials {}
    #[doc = include_str!("../../../book/src/division_chain.md")]
    pub mod division_chain {}
    #[doc = include_str!("../../../book/src/householder_route.md")]
    pub mod householder_route {}
    #[doc = include_str!("../../../book/src/eigensolver.md")]
    pub mod eigensolver {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
    #[doc = include_str!("../../../book/src/benchmark.md")]
    pub mod benchmark {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli_reference {}
}
