//! The polynomial route: build the tridiagonal matrix from a monic
//! polynomial by a chain of Euclidean divisions, then assemble
//!
//! ```text
//!         ⎡ −q₁(0)   √γ₁                ⎤
//!     T = ⎢  √γ₁    −q₂(0)  √γ₂         ⎥
//!         ⎢          ⋱       ⋱     ⋱    ⎥
//!         ⎣                 √γ_{n−1} −qₙ(0) ⎦
//! ```
//!
//! For distinct real roots every γ_ν is positive in exact arithmetic, so a
//! non-positive γ or a degenerating remainder is a *finite-precision failure
//! signal*, not a bug. The full pipeline [`naive_solve`] (roots → monic
//! polynomial → division chain → matrix) is expected to lose eigenvalue
//! accuracy as the dimension grows; nothing here tries to stabilize it,
//! because quantifying that loss is half the point of this crate.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::tridiagonal::SymmetricTridiagonal;
use crate::validate_strictly_increasing;

/// The chain produced by the division algorithm: monic linear quotients
/// `q₁..qₙ` and positive remainder leading coefficients `γ₁..γ_{n−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmeisserSequence {
    quotients: Vec<Polynomial>,
    gammas: Vec<f64>,
}

impl SchmeisserSequence {
    pub fn n(&self) -> usize {
        self.quotients.len()
    }

    /// Monic linear quotients `q₁..qₙ`.
    pub fn quotients(&self) -> &[Polynomial] {
        &self.quotients
    }

    /// Remainder leading coefficients `γ₁..γ_{n−1}`; positive when the chain
    /// succeeded.
    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }
}

/// Runs the division chain on a monic polynomial `u` of degree n ≥ 1:
///
/// ```text
/// f₁ = u,  f₂ = u′/n,
/// f_ν = q_ν·f_{ν+1} − r_ν,   γ_ν = γ(r_ν),   f_{ν+2} = r_ν/γ_ν
/// ```
///
/// for ν = 1..n−1, and finally qₙ = fₙ. Each f_{ν+2} is renormalized to
/// monic exactly as the recurrence prescribes, which bounds coefficient
/// growth along the chain.
///
/// Fails with [`Error::DegenerateRemainder`] when a remainder vanishes or
/// drops degree (repeated or clustered roots, or cancellation), and with
/// [`Error::NonPositiveGamma`] when a γ_ν is not positive in floating
/// point. Both are reported with their 1-based step ν so breakdown
/// locations can be compared across dimensions.
pub fn schmeisser_sequence(u: &Polynomial) -> Result<SchmeisserSequence> {
    let n = u.degree();
    assert!(
        n >= 1 && !u.is_zero(),
        "schmeisser_sequence needs a monic polynomial of degree ≥ 1"
    );
    debug_assert!(
        (u.leading_coefficient().expect("nonzero") - 1.0).abs() <= 1e-12,
        "input polynomial must be monic"
    );

    let mut quotients = Vec::with_capacity(n);
    let mut gammas = Vec::with_capacity(n - 1);
    let mut f_cur = u.clone();
    let mut f_next = u.derivative().scale(1.0 / n as f64);

    for nu in 1..n {
        let (q, r) = f_cur.divide_negated(&f_next)?;
        if r.is_zero() || r.degree() + 1 < f_next.degree() {
            return Err(Error::DegenerateRemainder { step: nu });
        }
        let gamma = r.leading_coefficient()?;
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::NonPositiveGamma { step: nu, value: gamma });
        }
        quotients.push(q);
        gammas.push(gamma);
        let f_after = r.scale(1.0 / gamma);
        f_cur = std::mem::replace(&mut f_next, f_after);
    }
    // qₙ = fₙ; after the loop f_cur holds fₙ (for n = 1 that is u itself).
    quotients.push(f_cur);

    Ok(SchmeisserSequence { quotients, gammas })
}

/// Assembles the tridiagonal matrix from a chain: diagonal `−q_ν(0)`,
/// off-diagonal `√γ_ν`. The result is unreduced since every γ_ν > 0.
pub fn build_t(seq: &SchmeisserSequence) -> Result<SymmetricTridiagonal> {
    for (i, &gamma) in seq.gammas.iter().enumerate() {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::NonPositiveGamma { step: i + 1, value: gamma });
        }
    }
    let diag = seq.quotients.iter().map(|q| -q.evaluate(0.0)).collect();
    let offdiag = seq.gammas.iter().map(|&g| g.sqrt()).collect();
    SymmetricTridiagonal::new(diag, offdiag)
}

/// The full polynomial route: expand `∏(x − λᵢ)` and feed it through the
/// division chain.
///
/// Exact in exact arithmetic; in `f64` the eigenvalues of the result drift
/// off the prescribed ones as n grows, even though its characteristic
/// polynomial stays close to the expanded one. Propagates the chain's
/// breakdown errors; rejects inputs that are not strictly increasing.
pub fn naive_solve(lambdas: &[f64]) -> Result<SymmetricTridiagonal> {
    validate_strictly_increasing(lambdas)?;
    let u = Polynomial::from_roots(lambdas);
    build_t(&schmeisser_sequence(&u)?)
}
