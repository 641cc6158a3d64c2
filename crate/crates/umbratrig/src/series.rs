//! Series families, truncated evaluation and diagonal derivative operators.
//!
//! Every function in this crate is an entire function given by a power
//! series whose nonzero coefficients sit on an arithmetic progression of
//! indices (the family's *support*). Coefficients are generated by a
//! closed-form ratio recurrence along the support instead of fresh
//! factorial/gamma evaluations, which avoids overflow and keeps the
//! coefficient-level operator identities exact to a few ulp.

use crate::error::{Error, Result};
use crate::gamma::gamma;
use num_complex::Complex64;

/// A power-series family, tagged with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesFamily {
    /// Laguerre exponential: sum of x^r / (r!)^2 (0-order Bessel-Tricomi).
    LaguerreExp,
    /// Alpha-order Bessel-Tricomi: sum of x^r / (r! Gamma(r+alpha+1)).
    LaguerreExpAlpha { alpha: f64 },
    /// Humbert (two-index) Bessel form: x^r / (r! Gamma(r+a+1) Gamma(r+b+1)).
    HumbertExp { alpha: f64, beta: f64 },
    /// Laguerre cosine: (-1)^r x^(2r) / ((2r)!)^2.
    LaguerreCos,
    /// Laguerre sine: (-1)^r x^(2r+1) / ((2r+1)!)^2.
    LaguerreSin,
    /// Laguerre hyperbolic cosine: x^(2r) / ((2r)!)^2.
    LaguerreCosh,
    /// Laguerre hyperbolic sine: x^(2r+1) / ((2r+1)!)^2.
    LaguerreSinh,
    /// Alpha-order cosine: (-1)^r x^(2r) / ((2r)! Gamma(alpha+2r+1)).
    LaguerreCosAlpha { alpha: f64 },
    /// Alpha-order sine: (-1)^r x^(2r+1) / ((2r+1)! Gamma(alpha+2r+2)).
    LaguerreSinAlpha { alpha: f64 },
    /// Humbert cosine: (-1)^r x^(2r) / ((2r)! Gamma(a+2r+1) Gamma(b+2r+1)).
    HumbertCos { alpha: f64, beta: f64 },
    /// Humbert sine: (-1)^r x^(2r+1) / ((2r+1)! Gamma(a+2r+2) Gamma(b+2r+2)).
    HumbertSin { alpha: f64, beta: f64 },
    /// Pseudo-hyperbolic function: sum of x^(m r + k) / (m r + k)!.
    PseudoHyp { k: u32, m: u32 },
    /// Even pseudo-hyperbolic combination: x^(6r) / (6r)!.
    PseudoHypCosh,
    /// Odd pseudo-hyperbolic combination: x^(6r+3) / (6r+3)!.
    PseudoHypSinh,
    /// Beta-weighted order-3 series:
    /// (1/B(2/3, alpha)) sum of B(r+2/3, alpha) x^(3r) / (3r)!.
    AiryG { alpha: f64 },
}

/// Index set carrying a family's nonzero coefficients: offset + j * stride.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Support {
    pub offset: u32,
    pub stride: u32,
}

impl SeriesFamily {
    pub fn validate(&self) -> Result<()> {
        use SeriesFamily::*;
        let check_shape = |name: &str, a: f64| -> Result<()> {
            if a > -1.0 && a.is_finite() {
                Ok(())
            } else {
                Err(Error::Domain(format!("{name} requires alpha > -1, got {a}")))
            }
        };
        match *self {
            LaguerreExp | LaguerreCos | LaguerreSin | LaguerreCosh | LaguerreSinh
            | PseudoHypCosh | PseudoHypSinh => Ok(()),
            LaguerreExpAlpha { alpha } | LaguerreCosAlpha { alpha } | LaguerreSinAlpha { alpha } => {
                check_shape("alpha-order family", alpha)
            }
            HumbertExp { alpha, beta }
            | HumbertCos { alpha, beta }
            | HumbertSin { alpha, beta } => {
                check_shape("Humbert family", alpha)?;
                check_shape("Humbert family", beta)
            }
            PseudoHyp { k, m } => {
                if m < 2 {
                    Err(Error::Domain(format!(
                        "pseudo-hyperbolic order m must be >= 2, got {m}"
                    )))
                } else if k >= m {
                    Err(Error::Domain(format!(
                        "pseudo-hyperbolic residue k must satisfy 0 <= k < m, got k={k}, m={m}"
                    )))
                } else {
                    Ok(())
                }
            }
            AiryG { alpha } => {
                if alpha > 0.0 && alpha.is_finite() {
                    Ok(())
                } else {
                    Err(Error::Domain(format!(
                        "Airy-type family requires alpha > 0, got {alpha}"
                    )))
                }
            }
        }
    }

    pub fn support(&self) -> Support {
        use SeriesFamily::*;
        match *self {
            LaguerreExp | LaguerreExpAlpha { .. } | HumbertExp { .. } => Support {
                offset: 0,
                stride: 1,
            },
            LaguerreCos | LaguerreCosh | LaguerreCosAlpha { .. } | HumbertCos { .. } => Support {
                offset: 0,
                stride: 2,
            },
            LaguerreSin | LaguerreSinh | LaguerreSinAlpha { .. } | HumbertSin { .. } => Support {
                offset: 1,
                stride: 2,
            },
            PseudoHyp { k, m } => Support { offset: k, stride: m },
            PseudoHypCosh => Support { offset: 0, stride: 6 },
            PseudoHypSinh => Support { offset: 3, stride: 6 },
            AiryG { .. } => Support { offset: 0, stride: 3 },
        }
    }

    /// Coefficient at the first support index.
    pub(crate) fn first_coeff(&self) -> Result<f64> {
        use SeriesFamily::*;
        Ok(match *self {
            LaguerreExp | LaguerreCos | LaguerreSin | LaguerreCosh | LaguerreSinh
            | PseudoHypCosh | AiryG { .. } => 1.0,
            LaguerreExpAlpha { alpha } | LaguerreCosAlpha { alpha } => {
                1.0 / gamma(alpha + 1.0)?
            }
            LaguerreSinAlpha { alpha } => 1.0 / gamma(alpha + 2.0)?,
            HumbertExp { alpha, beta } | HumbertCos { alpha, beta } => {
                1.0 / (gamma(alpha + 1.0)? * gamma(beta + 1.0)?)
            }
            HumbertSin { alpha, beta } => 1.0 / (gamma(alpha + 2.0)? * gamma(beta + 2.0)?),
            PseudoHyp { k, .. } => {
                let mut f = 1.0;
                for i in 2..=k as u64 {
                    f *= i as f64;
                }
                1.0 / f
            }
            PseudoHypSinh => 1.0 / 6.0,
        })
    }

    /// Ratio between consecutive support coefficients,
    /// c(offset + (j+1) stride) / c(offset + j stride).
    pub(crate) fn coeff_ratio(&self, j: u64) -> f64 {
        use SeriesFamily::*;
        let jf = j as f64;
        match *self {
            LaguerreExp => {
                let p = jf + 1.0;
                1.0 / (p * p)
            }
            LaguerreExpAlpha { alpha } => 1.0 / ((jf + 1.0) * (jf + 1.0 + alpha)),
            HumbertExp { alpha, beta } => {
                1.0 / ((jf + 1.0) * (jf + 1.0 + alpha) * (jf + 1.0 + beta))
            }
            LaguerreCos => {
                let p = (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
                -1.0 / (p * p)
            }
            LaguerreSin => {
                let p = (2.0 * jf + 2.0) * (2.0 * jf + 3.0);
                -1.0 / (p * p)
            }
            LaguerreCosh => {
                let p = (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
                1.0 / (p * p)
            }
            LaguerreSinh => {
                let p = (2.0 * jf + 2.0) * (2.0 * jf + 3.0);
                1.0 / (p * p)
            }
            LaguerreCosAlpha { alpha } => {
                -1.0 / ((2.0 * jf + 1.0)
                    * (2.0 * jf + 2.0)
                    * (alpha + 2.0 * jf + 1.0)
                    * (alpha + 2.0 * jf + 2.0))
            }
            LaguerreSinAlpha { alpha } => {
                -1.0 / ((2.0 * jf + 2.0)
                    * (2.0 * jf + 3.0)
                    * (alpha + 2.0 * jf + 2.0)
                    * (alpha + 2.0 * jf + 3.0))
            }
            HumbertCos { alpha, beta } => {
                -1.0 / ((2.0 * jf + 1.0)
                    * (2.0 * jf + 2.0)
                    * (alpha + 2.0 * jf + 1.0)
                    * (alpha + 2.0 * jf + 2.0)
                    * (beta + 2.0 * jf + 1.0)
                    * (beta + 2.0 * jf + 2.0))
            }
            HumbertSin { alpha, beta } => {
                -1.0 / ((2.0 * jf + 2.0)
                    * (2.0 * jf + 3.0)
                    * (alpha + 2.0 * jf + 2.0)
                    * (alpha + 2.0 * jf + 3.0)
                    * (beta + 2.0 * jf + 2.0)
                    * (beta + 2.0 * jf + 3.0))
            }
            PseudoHyp { k, m } => {
                let base = m as u64 * j + k as u64;
                let mut p = 1.0;
                for i in 1..=m as u64 {
                    p *= (base + i) as f64;
                }
                1.0 / p
            }
            PseudoHypCosh => {
                let base = 6 * j;
                let mut p = 1.0;
                for i in 1..=6u64 {
                    p *= (base + i) as f64;
                }
                1.0 / p
            }
            PseudoHypSinh => {
                let base = 6 * j + 3;
                let mut p = 1.0;
                for i in 1..=6u64 {
                    p *= (base + i) as f64;
                }
                1.0 / p
            }
            AiryG { alpha } => {
                // Next true index is n = 3j + 3; the Beta-ratio telescopes to
                // 1 / (n (n-2) (n + 3 alpha - 1)).
                let n = 3.0 * jf + 3.0;
                1.0 / (n * (n - 2.0) * (n + 3.0 * alpha - 1.0))
            }
        }
    }

    /// n-th power-series coefficient; zero off the family's support.
    pub fn coeff(&self, n: u64) -> Result<f64> {
        self.validate()?;
        let sup = self.support();
        if n < sup.offset as u64 || !(n - sup.offset as u64).is_multiple_of(sup.stride as u64) {
            return Ok(0.0);
        }
        let steps = (n - sup.offset as u64) / sup.stride as u64;
        let mut c = self.first_coeff()?;
        for j in 0..steps {
            c *= self.coeff_ratio(j);
        }
        Ok(c)
    }
}

/// Coefficients 0..=up_to as a dense vector (zeros off support).
pub fn coeff_sequence(family: SeriesFamily, up_to: u64) -> Result<Vec<f64>> {
    family.validate()?;
    let sup = family.support();
    let mut out = vec![0.0; up_to as usize + 1];
    let mut c = family.first_coeff()?;
    let mut n = sup.offset as u64;
    let mut j = 0u64;
    while n <= up_to {
        out[n as usize] = c;
        c *= family.coeff_ratio(j);
        j += 1;
        n += sup.stride as u64;
    }
    Ok(out)
}

/// Stopping rule for truncated series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// A term counts as negligible when |term| <= rel_tol * |partial sum|.
    pub rel_tol: f64,
    /// Cap on the number of support terms summed.
    pub max_terms: usize,
    /// Consecutive negligible terms required before stopping.
    pub stop_streak: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-15,
            max_terms: 200,
            stop_streak: 3,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rel_tol.is_nan() || self.rel_tol <= 0.0 {
            return Err(Error::Domain(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if self.max_terms < 1 {
            return Err(Error::Domain("max_terms must be >= 1".into()));
        }
        if self.stop_streak < 1 {
            return Err(Error::Domain("stop_streak must be >= 1".into()));
        }
        Ok(())
    }
}

fn sum_support_terms<T>(cfg: &EvalConfig, mut term_at: T) -> (Complex64, bool, usize)
where
    T: FnMut(usize) -> Complex64,
{
    let mut sum = Complex64::new(0.0, 0.0);
    let mut streak = 0usize;
    for j in 0..cfg.max_terms {
        let term = term_at(j);
        sum += term;
        if term.norm() <= cfg.rel_tol * sum.norm() {
            streak += 1;
            if streak >= cfg.stop_streak {
                return (sum, true, j + 1);
            }
        } else {
            streak = 0;
        }
    }
    (sum, false, cfg.max_terms)
}

/// Truncated series value at a complex argument.
///
/// Terms are walked along the family's support; the sum stops once
/// `stop_streak` consecutive terms are negligible relative to the partial
/// sum, and fails with [`Error::Convergence`] if `max_terms` support terms
/// were consumed first.
pub fn eval(family: SeriesFamily, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    let (value, converged, terms) = eval_with_status(family, z, cfg)?;
    if converged {
        Ok(value)
    } else {
        Err(Error::Convergence { terms })
    }
}

/// Like [`eval`] but reports the partial value together with a convergence
/// flag instead of failing on truncation.
pub fn eval_with_status(
    family: SeriesFamily,
    z: Complex64,
    cfg: &EvalConfig,
) -> Result<(Complex64, bool, usize)> {
    family.validate()?;
    cfg.validate()?;
    let sup = family.support();
    let step = z.powu(sup.stride);
    let mut zp = z.powu(sup.offset);
    let mut c = family.first_coeff()?;
    let mut j = 0u64;
    Ok(sum_support_terms(cfg, |_| {
        let term = zp * c;
        c *= family.coeff_ratio(j);
        j += 1;
        zp *= step;
        term
    }))
}

/// Real-argument convenience wrapper around [`eval`].
pub fn eval_real(family: SeriesFamily, x: f64, cfg: &EvalConfig) -> Result<f64> {
    eval(family, Complex64::new(x, 0.0), cfg).map(|v| v.re)
}

/// Term-wise ordinary derivative of the series, sum of n c_n z^(n-1).
pub fn eval_derivative(family: SeriesFamily, z: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
    family.validate()?;
    cfg.validate()?;
    let sup = family.support();
    let step = z.powu(sup.stride);
    let mut c = family.first_coeff()?;
    let mut j = 0u64;
    let mut n = sup.offset as u64;
    // zp tracks z^(n-1); the constant term (n = 0) differentiates to zero,
    // so skip straight to the next support index in that case.
    let mut zp = if sup.offset == 0 {
        c *= family.coeff_ratio(0);
        j = 1;
        n = sup.stride as u64;
        z.powu(sup.stride - 1)
    } else {
        z.powu(sup.offset - 1)
    };
    let (value, converged, terms) = sum_support_terms(cfg, |_| {
        let term = zp * (c * n as f64);
        c *= family.coeff_ratio(j);
        j += 1;
        n += sup.stride as u64;
        zp *= step;
        term
    });
    if converged {
        Ok(value)
    } else {
        Err(Error::Convergence { terms })
    }
}

/// Ordinary Bessel J0 power series; reference value for the asymptotic
/// limit checks, deliberately kept independent of the umbral path.
pub fn bessel_j0(x: f64) -> f64 {
    let q = -x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for r in 1..200u64 {
        term *= q / ((r * r) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// A generalized derivative acting diagonally on monomials:
/// x^n -> multiplier(n) * x^(n - shift).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DerivOp {
    /// d/dx.
    Ordinary,
    /// (d/dx)^3.
    Cubic,
    /// Laguerre derivative d/dx x d/dx, x^n -> n^2 x^(n-1).
    Laguerre,
    /// Alpha-order Laguerre derivative, x^n -> n (n + alpha) x^(n-1).
    LaguerreAlpha { alpha: f64 },
    /// Two-index Laguerre derivative, x^n -> n (n+alpha)(n+beta) x^(n-1).
    LaguerreAlphaBeta { alpha: f64, beta: f64 },
    /// Airy-type operator d/dx x^(-3a) d/dx x^(3a) d/dx,
    /// x^n -> n (n-2) (n + 3 alpha - 1) x^(n-3).
    AiryTheta { alpha: f64 },
}

impl DerivOp {
    /// How many index positions the operator shifts a monomial down.
    pub fn shift(&self) -> usize {
        match self {
            DerivOp::Ordinary | DerivOp::Laguerre => 1,
            DerivOp::LaguerreAlpha { .. } | DerivOp::LaguerreAlphaBeta { .. } => 1,
            DerivOp::Cubic | DerivOp::AiryTheta { .. } => 3,
        }
    }

    /// Diagonal factor on x^n. Monomials below the shift are annihilated.
    pub fn multiplier(&self, n: u64) -> f64 {
        if (n as usize) < self.shift() {
            return 0.0;
        }
        let nf = n as f64;
        match *self {
            DerivOp::Ordinary => nf,
            DerivOp::Cubic => nf * (nf - 1.0) * (nf - 2.0),
            DerivOp::Laguerre => nf * nf,
            DerivOp::LaguerreAlpha { alpha } => nf * (nf + alpha),
            DerivOp::LaguerreAlphaBeta { alpha, beta } => nf * (nf + alpha) * (nf + beta),
            DerivOp::AiryTheta { alpha } => nf * (nf - 2.0) * (nf + 3.0 * alpha - 1.0),
        }
    }
}

/// Apply a diagonal derivative to a coefficient sequence:
/// out(j) = multiplier(j + shift) * coeffs(j + shift).
///
/// Sequences shorter than the shift come back empty.
pub fn apply_derivative<T>(coeffs: &[T], op: DerivOp) -> Vec<T>
where
    T: Copy + std::ops::Mul<f64, Output = T>,
{
    let s = op.shift();
    if coeffs.len() <= s {
        return Vec::new();
    }
    (0..coeffs.len() - s)
        .map(|j| coeffs[j + s] * op.multiplier((j + s) as u64))
        .collect()
}
