//! Dense polynomial arithmetic in the monomial basis.
//!
//! Just enough to run the root-expansion / division-chain construction:
//! building a monic polynomial from its roots, Horner evaluation,
//! differentiation, and Euclidean division with the negated-remainder
//! convention `f = q·g − r`.
//!
//! All arithmetic is plain `f64`. That is deliberate: the whole point of the
//! accuracy experiment is the finite-precision behaviour of this basis, so
//! there is no extended-precision escape hatch here.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Relative threshold under which a trailing remainder coefficient is taken
/// to be structurally zero, scaled per coefficient by the magnitudes that
/// entered its computation. Distinguishes genuine degree drop (cancellation
/// to rounding noise, as with repeated roots) from legitimately small
/// coefficients: characteristic-polynomial coefficients span dozens of
/// orders of magnitude at moderate degree, so a single global scale would
/// wrongly zero genuine leading remainder coefficients.
const REMAINDER_TRIM_REL: f64 = 1e-14;

/// A dense real polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// Invariants: `coeffs` is never empty; the zero polynomial is the single
/// coefficient `[0.0]`; otherwise the last coefficient is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients in ascending degree order,
    /// trimming exact trailing zeros.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![0.0] }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: f64) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// The monic polynomial `∏ᵢ (x − rᵢ)`, multiplied out one linear factor
    /// at a time, in the order given.
    ///
    /// An empty slice yields the empty product `1`. Callers that need a
    /// deterministic result for a set of roots must sort first; the
    /// construction pipelines in this crate only ever pass ascending roots.
    ///
    /// ```
    /// use diag2trid::Polynomial;
    ///
    /// let p = Polynomial::from_roots(&[1.0, 2.0, 3.0]);
    /// assert_eq!(p.coeffs(), &[-6.0, 11.0, -6.0, 1.0]); // x³ − 6x² + 11x − 6
    /// ```
    pub fn from_roots(roots: &[f64]) -> Self {
        let mut p = Polynomial::constant(1.0);
        for &r in roots {
            p = p.mul_linear(r);
        }
        p
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Index of the last stored coefficient. The zero polynomial reports
    /// degree 0 like any other constant; use [`Polynomial::is_zero`] to tell
    /// them apart.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    /// Horner evaluation at `x`.
    pub fn evaluate(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient-wise derivative; the derivative of a constant is the zero
    /// polynomial.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Polynomial::zero();
        }
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        Polynomial::new(d)
    }

    /// The leading coefficient γ(p); `p.scale(1.0 / γ)` is monic.
    ///
    /// Errors with [`Error::ZeroPolynomial`] on the zero polynomial, which
    /// has no leading coefficient.
    pub fn leading_coefficient(&self) -> Result<f64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(*self.coeffs.last().expect("coeffs is never empty"))
    }

    /// The polynomial scaled by `c`.
    pub fn scale(&self, c: f64) -> Self {
        Polynomial::new(self.coeffs.iter().map(|&a| c * a).collect())
    }

    /// `(x − root) · self`, the building block of [`Polynomial::from_roots`].
    pub(crate) fn mul_linear(&self, root: f64) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0.0; n + 1];
        out[n] = self.coeffs[n - 1];
        for k in (1..n).rev() {
            out[k] = self.coeffs[k - 1] - root * self.coeffs[k];
        }
        out[0] = -root * self.coeffs[0];
        Polynomial::new(out)
    }

    /// `self − c · other`, padded to the longer length.
    pub(crate) fn sub_scaled(&self, c: f64, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len)
            .map(|k| self.coeff(k) - c * other.coeff(k))
            .collect();
        Polynomial::new(out)
    }

    /// Divides `self` by `g` with the negated-remainder convention
    ///
    /// ```text
    /// self = q·g − r,   deg r < deg g
    /// ```
    ///
    /// so `r` is the negation of the standard Euclidean remainder. A
    /// trailing remainder coefficient is trimmed as a structural zero when
    /// it is no larger than `1e-13` times the largest term that entered its
    /// own computation — i.e. when it is cancellation noise. That is how a
    /// genuine degree drop (repeated roots upstream) becomes observable
    /// without zeroing the legitimately small leading coefficients that
    /// ill-scaled characteristic polynomials produce.
    ///
    /// The division chain only ever divides a polynomial by one of degree
    /// exactly one less; that case runs as a two-step synthetic division.
    /// Anything else falls back to ordinary long division.
    pub fn divide_negated(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivideByZeroPoly);
        }
        if !self.is_zero() && self.degree() == g.degree() + 1 {
            Ok(self.divide_synthetic_step(g))
        } else {
            Ok(self.divide_long(g))
        }
    }

    /// Two-step synthetic division for `deg self = deg g + 1`: the quotient
    /// is `αx + β` and the remainder needs no elimination loop.
    fn divide_synthetic_step(&self, g: &Self) -> (Self, Self) {
        let m = g.degree();
        let gl = g.coeffs[m];
        let alpha = self.coeffs[m + 1] / gl;
        let g_below = if m >= 1 { g.coeffs[m - 1] } else { 0.0 };
        let beta = (self.coeffs[m] - alpha * g_below) / gl;
        let mut rem = Vec::with_capacity(m.max(1));
        let mut mag = Vec::with_capacity(m.max(1));
        for k in 0..m {
            let above = if k >= 1 { g.coeffs[k - 1] } else { 0.0 };
            rem.push(self.coeffs[k] - alpha * above - beta * g.coeffs[k]);
            mag.push(
                self.coeffs[k]
                    .abs()
                    .max((alpha * above).abs())
                    .max((beta * g.coeffs[k]).abs()),
            );
        }
        let q = Polynomial::new(vec![beta, alpha]);
        (q, negate_and_trim(rem, &mag))
    }

    /// Ordinary long division, kept general for completeness and as the
    /// reference the synthetic step is tested against.
    fn divide_long(&self, g: &Self) -> (Self, Self) {
        let dg = g.degree();
        if self.is_zero() || self.degree() < dg {
            // q = 0 and f = 0·g − (−f) hold trivially.
            let mag: Vec<f64> = self.coeffs.iter().map(|c| c.abs()).collect();
            return (Polynomial::zero(), negate_and_trim(self.coeffs.clone(), &mag));
        }
        let gl = g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut mag: Vec<f64> = self.coeffs.iter().map(|c| c.abs()).collect();
        let mut q = vec![0.0; self.degree() - dg + 1];
        for k in (0..q.len()).rev() {
            let c = rem[k + dg] / gl;
            q[k] = c;
            if c != 0.0 {
                for j in 0..dg {
                    rem[k + j] -= c * g.coeffs[j];
                    mag[k + j] = mag[k + j].max((c * g.coeffs[j]).abs());
                }
            }
            // The leading term cancels by construction of c.
            rem[k + dg] = 0.0;
        }
        rem.truncate(dg.max(1));
        mag.truncate(dg.max(1));
        (Polynomial::new(q), negate_and_trim(rem, &mag))
    }
}

fn negate_and_trim(mut rem: Vec<f64>, mag: &[f64]) -> Polynomial {
    while rem.len() > 1
        && rem
            .last()
            .is_some_and(|c| c.abs() <= REMAINDER_TRIM_REL * mag[rem.len() - 1])
    {
        rem.pop();
    }
    if rem.len() == 1 && rem[0].abs() <= REMAINDER_TRIM_REL * mag[0] {
        rem[0] = 0.0;
    }
    for c in &mut rem {
        *c = -*c;
    }
    Polynomial::new(rem)
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 && self.coeffs.len() > 1 {
                continue;
            }
            let sign = if first {
                if c < 0.0 { "-" } else { "" }
            } else if c < 0.0 {
                " - "
            } else {
                " + "
            };
            let mag = c.abs();
            match k {
                0 => write!(f, "{sign}{mag}")?,
                _ => {
                    if mag == 1.0 {
                        write!(f, "{sign}")?;
                    } else {
                        write!(f, "{sign}{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}
