//! Gaussian quadrature rules (Golub-Welsch) and composite Simpson.

use crate::error::{Error, Result};
use crate::gamma::gamma;

/// Quadrature rule selector carried by the transform operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureSpec {
    /// Nodes/weights for the weight e^(-t) on (0, inf).
    GaussLaguerre { nodes: usize },
    /// Nodes/weights for the weight t^exp_at_zero (1-t)^exp_at_one on (0, 1).
    GaussJacobi {
        nodes: usize,
        exp_at_one: f64,
        exp_at_zero: f64,
    },
    /// Composite Simpson with the given number of panels on a finite
    /// interval.
    Simpson { panels: usize },
}

impl QuadratureSpec {
    pub fn default_laguerre() -> Self {
        QuadratureSpec::GaussLaguerre { nodes: 96 }
    }

    /// Default Jacobi rule matching the Beta-weighted integral transform:
    /// exponent alpha-1 at t = 1 and -1/3 at t = 0.
    pub fn default_jacobi(alpha: f64) -> Self {
        QuadratureSpec::GaussJacobi {
            nodes: 64,
            exp_at_one: alpha - 1.0,
            exp_at_zero: -1.0 / 3.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            QuadratureSpec::GaussLaguerre { nodes } => {
                if nodes < 2 {
                    return Err(Error::Domain(format!(
                        "Gauss-Laguerre needs at least 2 nodes, got {nodes}"
                    )));
                }
            }
            QuadratureSpec::GaussJacobi {
                nodes,
                exp_at_one,
                exp_at_zero,
            } => {
                if nodes < 2 {
                    return Err(Error::Domain(format!(
                        "Gauss-Jacobi needs at least 2 nodes, got {nodes}"
                    )));
                }
                if exp_at_one <= -1.0 || exp_at_zero <= -1.0 {
                    return Err(Error::Domain(format!(
                        "Jacobi exponents must exceed -1, got ({exp_at_one}, {exp_at_zero})"
                    )));
                }
            }
            QuadratureSpec::Simpson { panels } => {
                if panels < 1 {
                    return Err(Error::Domain("Simpson needs at least 1 panel".into()));
                }
            }
        }
        Ok(())
    }
}

/// Node/weight table for a fixed Gaussian rule.
#[derive(Debug, Clone)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }
}

/// Symmetric tridiagonal eigenvalues by the implicit QL method, tracking
/// the first component of each eigenvector in `z`. On return `d` holds the
/// ascending eigenvalues.
fn tridiagonal_eigen(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    const MAX_SWEEPS: usize = 30;
    e[n - 1] = 0.0;
    for l in 1..=n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m < n {
                if e[m - 1].abs() <= f64::EPSILON * (d[m - 1].abs() + d[m].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if sweeps >= MAX_SWEEPS {
                return Err(Error::Quadrature(
                    "tridiagonal eigenvalue iteration did not converge".into(),
                ));
            }
            sweeps += 1;
            let mut p = d[l - 1];
            let mut g = (d[l] - p) / (2.0 * e[l - 1]);
            let mut r = (g * g + 1.0).sqrt();
            g = d[m - 1] - p + e[l - 1] / (g + r.abs().copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            p = 0.0;
            for ii in 1..=(m - l) {
                let i = m - ii;
                let mut f = s * e[i - 1];
                let b = c * e[i - 1];
                if g.abs() <= f.abs() {
                    c = g / f;
                    r = (c * c + 1.0).sqrt();
                    e[i] = f * r;
                    s = 1.0 / r;
                    c *= s;
                } else {
                    s = f / g;
                    r = (s * s + 1.0).sqrt();
                    e[i] = g * r;
                    c = 1.0 / r;
                    s *= c;
                }
                g = d[i] - p;
                r = (d[i - 1] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i] = g + p;
                g = c * r - b;
                f = z[i];
                z[i] = s * z[i - 1] + c * f;
                z[i - 1] = c * z[i - 1] - s * f;
            }
            d[l - 1] -= p;
            e[l - 1] = g;
            e[m - 1] = 0.0;
        }
    }
    // Insertion sort keeping z aligned.
    for i in 1..n {
        let (dv, zv) = (d[i], z[i]);
        let mut j = i;
        while j > 0 && d[j - 1] > dv {
            d[j] = d[j - 1];
            z[j] = z[j - 1];
            j -= 1;
        }
        d[j] = dv;
        z[j] = zv;
    }
    Ok(())
}

fn golub_welsch(mut diag: Vec<f64>, mut offdiag: Vec<f64>, mu0: f64) -> Result<QuadRule> {
    let n = diag.len();
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    tridiagonal_eigen(&mut diag, &mut offdiag, &mut z)?;
    let weights = z.iter().map(|v| mu0 * v * v).collect();
    Ok(QuadRule {
        nodes: diag,
        weights,
    })
}

/// Gauss-Laguerre rule: sum of w_i f(t_i) approximates the integral of
/// e^(-t) f(t) over (0, inf).
pub fn gauss_laguerre(n: usize) -> Result<QuadRule> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "Gauss-Laguerre needs at least 2 nodes, got {n}"
        )));
    }
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + 1.0).collect();
    // offdiag[k] couples rows k and k+1; the symmetrized recurrence gives k+1.
    let mut offdiag = vec![0.0; n];
    for (k, o) in offdiag.iter_mut().enumerate().take(n - 1) {
        *o = (k + 1) as f64;
    }
    golub_welsch(diag, offdiag, 1.0)
}

/// Gauss-Jacobi rule remapped to (0, 1): sum of w_i f(t_i) approximates the
/// integral of t^b (1-t)^a f(t) over (0, 1), with a = `exp_at_one` and
/// b = `exp_at_zero`, both > -1.
pub fn gauss_jacobi01(n: usize, exp_at_one: f64, exp_at_zero: f64) -> Result<QuadRule> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "Gauss-Jacobi needs at least 2 nodes, got {n}"
        )));
    }
    let (a, b) = (exp_at_one, exp_at_zero);
    if a <= -1.0 || b <= -1.0 || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "Jacobi exponents must exceed -1, got ({a}, {b})"
        )));
    }
    let mut diag = vec![0.0; n];
    let mut offdiag = vec![0.0; n];
    diag[0] = (b - a) / (a + b + 2.0);
    for k in 1..n {
        let kf = k as f64;
        let denom = 2.0 * kf + a + b;
        diag[k] = (b * b - a * a) / (denom * (denom + 2.0));
        let num = 4.0 * kf * (kf + a) * (kf + b) * (kf + a + b);
        offdiag[k - 1] = (num / (denom * denom * (denom + 1.0) * (denom - 1.0))).sqrt();
    }
    // Total mass of (1-x)^a (1+x)^b on (-1, 1).
    let mu0 = 2f64.powf(a + b + 1.0) * gamma(a + 1.0)? * gamma(b + 1.0)?
        / gamma(a + b + 2.0)?;
    let rule = golub_welsch(diag, offdiag, mu0)?;
    // Map x in (-1, 1) to t = (x+1)/2; the weight picks up 2^-(a+b+1).
    let shrink = 2f64.powf(-(a + b + 1.0));
    Ok(QuadRule {
        nodes: rule.nodes.iter().map(|x| 0.5 * (x + 1.0)).collect(),
        weights: rule.weights.iter().map(|w| w * shrink).collect(),
    })
}

/// Composite Simpson rule with `panels` panels on [a, b].
pub fn simpson<F>(f: F, a: f64, b: f64, panels: usize) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if panels < 1 {
        return Err(Error::Domain("Simpson needs at least 1 panel".into()));
    }
    if a == b {
        return Ok(0.0);
    }
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for i in 0..panels {
        let left = a + i as f64 * h;
        let right = left + h;
        let mid = 0.5 * (left + right);
        acc += (h / 6.0) * (f(left)? + 4.0 * f(mid)? + f(right)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn laguerre_moments_are_factorials() {
        let rule = gauss_laguerre(24).unwrap();
        let mut fact = 1.0;
        for k in 0..12u32 {
            if k > 0 {
                fact *= k as f64;
            }
            let m: f64 = rule.iter().map(|(t, w)| w * t.powi(k as i32)).sum();
            assert_relative_eq!(m, fact, max_relative = 1e-12);
        }
    }

    #[test]
    fn laguerre_integrates_transcendental_targets() {
        let rule = gauss_laguerre(96).unwrap();
        // int e^-t cos t = 1/2.
        let c: f64 = rule.iter().map(|(t, w)| w * t.cos()).sum();
        assert_abs_diff_eq!(c, 0.5, epsilon = 1e-13);
        // int e^-t e^(-2t) = 1/3.
        let g: f64 = rule.iter().map(|(t, w)| w * (-2.0 * t).exp()).sum();
        assert_relative_eq!(g, 1.0 / 3.0, max_relative = 1e-12);
        assert_eq!(rule.nodes.len(), 96);
        assert!(rule.weights.iter().all(|w| *w > 0.0));
        assert!(rule.nodes.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn jacobi_moments_match_beta_values() {
        for &(a, b) in &[(0.0, -1.0 / 3.0), (1.0, -1.0 / 3.0), (-0.5, -1.0 / 3.0), (2.5, 0.5)] {
            let rule = gauss_jacobi01(32, a, b).unwrap();
            for k in 0..8u32 {
                let m: f64 = rule.iter().map(|(t, w)| w * t.powi(k as i32)).sum();
                let want = crate::gamma::beta(b + 1.0 + k as f64, a + 1.0).unwrap();
                assert_relative_eq!(m, want, max_relative = 1e-11, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn jacobi_handles_near_endpoint_singularities() {
        // alpha -> 0 concentrates the mass at t = 1.
        let a = 1e-3 - 1.0;
        let rule = gauss_jacobi01(64, a, -1.0 / 3.0).unwrap();
        let total: f64 = rule.weights.iter().sum();
        let want = crate::gamma::beta(2.0 / 3.0, 1e-3).unwrap();
        assert_relative_eq!(total, want, max_relative = 1e-10);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gauss_laguerre(1).is_err());
        assert!(gauss_jacobi01(10, -1.0, 0.0).is_err());
        assert!(gauss_jacobi01(10, 0.0, -1.5).is_err());
        assert!(QuadratureSpec::GaussLaguerre { nodes: 0 }.validate().is_err());
        assert!(QuadratureSpec::Simpson { panels: 0 }.validate().is_err());
        assert!(QuadratureSpec::default_jacobi(0.5).validate().is_ok());
    }

    #[test]
    fn simpson_constant_and_cubic_are_exact() {
        let one = simpson(|_| Ok(1.0), 0.0, 2.0, 5).unwrap();
        assert_abs_diff_eq!(one, 2.0, epsilon = 1e-15);
        // Simpson integrates cubics exactly.
        let cubic = simpson(|t| Ok(t * t * t), 0.0, 1.0, 7).unwrap();
        assert_relative_eq!(cubic, 0.25, max_relative = 1e-14);
        let empty = simpson(Ok, 1.0, 1.0, 4).unwrap();
        assert_eq!(empty, 0.0);
    }
}
