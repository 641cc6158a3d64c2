//! Borel-type integral transforms and spectral solvers for the heat-type
//! evolution equations driven by the generalized derivative operators.

use crate::error::{Error, Result};
use crate::gamma::beta;
use crate::quadrature::{gauss_jacobi01, gauss_laguerre, QuadRule, QuadratureSpec};
use crate::series::{eval_real, EvalConfig, SeriesFamily};
use crate::umbral::{embed, umbral_sum, SumFamily};
use num_complex::Complex64;

/// Spectral measure on (0, inf): a continuous density plus discrete atoms.
pub struct SpectralDensity {
    continuous: Option<Box<dyn Fn(f64) -> f64 + Send + Sync>>,
    atoms: Vec<(f64, f64)>,
}

impl SpectralDensity {
    /// Purely continuous density.
    pub fn continuous<F>(f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        SpectralDensity {
            continuous: Some(Box::new(f)),
            atoms: Vec::new(),
        }
    }

    /// Purely atomic measure; locations must be positive.
    pub fn from_atoms(atoms: Vec<(f64, f64)>) -> Result<Self> {
        for &(loc, _) in &atoms {
            if loc.is_nan() || loc <= 0.0 {
                return Err(Error::Domain(format!(
                    "spectral atoms need positive locations, got {loc}"
                )));
            }
        }
        Ok(SpectralDensity {
            continuous: None,
            atoms,
        })
    }

    /// Attach atoms to an existing density.
    pub fn with_atoms(mut self, atoms: Vec<(f64, f64)>) -> Result<Self> {
        for &(loc, _) in &atoms {
            if loc.is_nan() || loc <= 0.0 {
                return Err(Error::Domain(format!(
                    "spectral atoms need positive locations, got {loc}"
                )));
            }
        }
        self.atoms = atoms;
        Ok(self)
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    fn density_at(&self, t: f64) -> Result<f64> {
        match &self.continuous {
            Some(f) => {
                let v = f(t);
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::Quadrature(format!(
                        "spectral density is not finite at node {t}"
                    )))
                }
            }
            None => Ok(0.0),
        }
    }

    fn has_continuous(&self) -> bool {
        self.continuous.is_some()
    }
}

impl std::fmt::Debug for SpectralDensity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralDensity")
            .field("continuous", &self.continuous.is_some())
            .field("atoms", &self.atoms)
            .finish()
    }
}

fn laguerre_rule(quad: &QuadratureSpec, context: &str) -> Result<QuadRule> {
    match quad {
        QuadratureSpec::GaussLaguerre { nodes } => gauss_laguerre(*nodes),
        other => Err(Error::Domain(format!(
            "{context} requires a Gauss-Laguerre rule, got {other:?}"
        ))),
    }
}

/// Tail heuristic: contributions from the last nodes must not keep growing.
fn check_tail(contribs: &[f64], total: f64) -> Result<()> {
    const WINDOW: usize = 8;
    if contribs.len() < WINDOW {
        return Ok(());
    }
    let tail = &contribs[contribs.len() - WINDOW..];
    let growing = tail.windows(2).all(|p| p[1].abs() >= p[0].abs());
    let significant = tail[WINDOW - 1].abs() > 1e-12 * total.abs().max(f64::MIN_POSITIVE);
    if growing && significant {
        return Err(Error::Divergence(
            "node contributions are non-decreasing at the integration boundary".into(),
        ));
    }
    Ok(())
}

/// Borel-type transform: integral of e^(-t) f(x t) over (0, inf), which
/// maps the Laguerre-type functions onto their elementary counterparts.
pub fn borel_transform(family: SeriesFamily, x: f64, quad: &QuadratureSpec) -> Result<f64> {
    family.validate()?;
    if x.abs() > 10.0 {
        return Err(Error::Domain(format!(
            "Borel transform accuracy contract covers |x| <= 10, got {x}"
        )));
    }
    let rule = laguerre_rule(quad, "Borel transform")?;
    let cfg = EvalConfig::default();
    let mut acc = 0.0;
    for (t, w) in rule.iter() {
        if w == 0.0 {
            continue;
        }
        acc += w * eval_real(family, x * t, &cfg)?;
    }
    Ok(acc)
}

/// Beta-weighted integral representation of the AiryG function:
/// (1/B(2/3, alpha)) integral of t^(-1/3) (1-t)^(alpha-1) e_03(eta t^(1/3)).
pub fn g_alpha_integral(eta: f64, alpha: f64, quad: &QuadratureSpec) -> Result<f64> {
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "the integral representation requires alpha > 0, got {alpha}"
        )));
    }
    let (nodes, a1, a0) = match quad {
        QuadratureSpec::GaussJacobi {
            nodes,
            exp_at_one,
            exp_at_zero,
        } => (*nodes, *exp_at_one, *exp_at_zero),
        other => {
            return Err(Error::Domain(format!(
                "the Beta-weighted transform requires a Gauss-Jacobi rule, got {other:?}"
            )))
        }
    };
    // The rule must absorb exactly the weight the transform is defined with.
    if (a1 - (alpha - 1.0)).abs() > 1e-12 || (a0 + 1.0 / 3.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "Jacobi exponents ({a1}, {a0}) do not match the transform weight ({}, {})",
            alpha - 1.0,
            -1.0 / 3.0
        )));
    }
    let rule = gauss_jacobi01(nodes, a1, a0)?;
    let fam = SeriesFamily::PseudoHyp { k: 0, m: 3 };
    let cfg = EvalConfig::default();
    let mut acc = 0.0;
    for (t, w) in rule.iter() {
        acc += w * eval_real(fam, eta * t.cbrt(), &cfg)?;
    }
    Ok(acc / beta(2.0 / 3.0, alpha)?)
}

/// Closed-form solution of the Laguerre heat problem with exponential
/// initial data: F(x, tau) = e^(x/(1-tau)) / (1-tau), valid for tau < 1.
pub fn laguerre_heat_closed(x: f64, tau: f64) -> Result<f64> {
    if tau >= 1.0 {
        return Err(Error::Domain(format!(
            "the closed-form solution blows up at tau = 1, got {tau}"
        )));
    }
    Ok((x / (1.0 - tau)).exp() / (1.0 - tau))
}

/// Spectral solution of the first-order-in-time evolution driven by a
/// Laguerre-type operator: integral of ftilde(t) e^(t tau) phi(x t) plus
/// the same combination over discrete atoms, where phi is the eigenfamily.
pub fn heat_spectral(
    density: &SpectralDensity,
    eigenfamily: SeriesFamily,
    x: f64,
    tau: f64,
    quad: &QuadratureSpec,
) -> Result<f64> {
    match eigenfamily {
        SeriesFamily::LaguerreExp | SeriesFamily::HumbertExp { .. } => {}
        other => {
            return Err(Error::Domain(format!(
                "spectral heat solver expects the Laguerre or Humbert exponential, got {other:?}"
            )))
        }
    }
    eigenfamily.validate()?;
    let cfg = EvalConfig::default();
    let mut total = 0.0;
    if density.has_continuous() {
        let rule = laguerre_rule(quad, "spectral heat solver")?;
        let mut contribs = Vec::with_capacity(rule.nodes.len());
        for (t, w) in rule.iter() {
            let d = density.density_at(t)?;
            if d == 0.0 || w == 0.0 {
                continue;
            }
            // The Gauss-Laguerre weight already carries e^(-t); re-weight by
            // e^t in stages so the density's decay cancels the growth first.
            let contrib = w * (d * t.exp()) * (t * tau).exp() * eval_real(eigenfamily, x * t, &cfg)?;
            if !contrib.is_finite() {
                return Err(Error::Divergence(format!(
                    "contribution overflowed at node t = {t}"
                )));
            }
            contribs.push(contrib);
            total += contrib;
        }
        check_tail(&contribs, total)?;
    }
    for &(loc, wt) in density.atoms() {
        total += wt * (loc * tau).exp() * eval_real(eigenfamily, x * loc, &cfg)?;
    }
    Ok(total)
}

/// Umbral solution of the evolution that carries the Laguerre derivative on
/// both sides: F(x, tau) = f(x (+) tau) under the Laguerre sum, expanded on
/// the initial power-series coefficients.
pub fn ll_heat_umbral(init_coeffs: &[f64], x: f64, tau: f64, order: usize) -> Result<f64> {
    if init_coeffs.is_empty() {
        return Err(Error::Domain("initial coefficient sequence is empty".into()));
    }
    let seq = umbral_sum(
        &embed(Complex64::new(x, 0.0), order),
        &embed(Complex64::new(tau, 0.0), order),
        SumFamily::Laguerre,
    )?;
    let cfg = EvalConfig::default();
    let top = init_coeffs.len() - 1;
    if top <= order {
        // Polynomial initial data: the expansion is finite and exact.
        let mut acc = 0.0;
        for (n, c) in init_coeffs.iter().enumerate() {
            acc += c * seq.entry(n).re;
        }
        return Ok(acc);
    }
    // Truncated series initial data: apply the standard stopping rule.
    let mut acc = 0.0;
    let mut streak = 0usize;
    let span = order.min(cfg.max_terms - 1) + 1;
    for (n, c) in init_coeffs.iter().enumerate().take(span) {
        let term = c * seq.entry(n).re;
        acc += term;
        if term.abs() <= cfg.rel_tol * acc.abs() {
            streak += 1;
            if streak >= cfg.stop_streak {
                return Ok(acc);
            }
        } else {
            streak = 0;
        }
    }
    Err(Error::Convergence { terms: order + 1 })
}

/// Spectral solution of the Airy-type evolution, built from the
/// eigenrelation theta_alpha G(lambda x) = lambda^3 G(lambda x):
/// integral of ftilde(lambda) e^(lambda^3 t) G(lambda x) plus atoms.
///
/// The growth factor e^(lambda^3 t) makes unbounded continuous densities
/// meaningful only for t <= 0; for t > 0 use compactly supported densities
/// or atoms.
pub fn airy_heat_spectral(
    density: &SpectralDensity,
    alpha: f64,
    x: f64,
    t: f64,
    quad: &QuadratureSpec,
) -> Result<f64> {
    let fam = SeriesFamily::AiryG { alpha };
    fam.validate()?;
    let cfg = EvalConfig::default();
    let mut total = 0.0;
    if density.has_continuous() {
        let rule = laguerre_rule(quad, "Airy spectral solver")?;
        let mut contribs = Vec::with_capacity(rule.nodes.len());
        for (lam, w) in rule.iter() {
            let d = density.density_at(lam)?;
            if d == 0.0 || w == 0.0 {
                continue;
            }
            let growth = (lam * lam * lam * t + lam).exp();
            let contrib = w * d * growth * eval_real(fam, x * lam, &cfg)?;
            if !contrib.is_finite() {
                return Err(Error::Divergence(format!(
                    "contribution overflowed at node lambda = {lam}"
                )));
            }
            contribs.push(contrib);
            total += contrib;
        }
        check_tail(&contribs, total)?;
    }
    for &(loc, wt) in density.atoms() {
        total += wt * (loc * loc * loc * t).exp() * eval_real(fam, x * loc, &cfg)?;
    }
    Ok(total)
}

/// Evolution operator driving a diffusion problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiffusionOperator {
    /// d/dx x d/dx on the space side, first order in time.
    Laguerre,
    /// The two-index Laguerre operator, first order in time.
    LaguerreAlphaBeta { alpha: f64, beta: f64 },
    /// The Airy-type operator, first order in time.
    AiryTheta { alpha: f64 },
}

/// Initial data accepted by [`DiffusionProblem`].
pub enum InitialCondition {
    /// Eigen-superposition with the given spectral measure.
    Spectral(SpectralDensity),
    /// Power-series coefficients of f(x); solved umbrally with the
    /// Laguerre derivative on both sides.
    PowerSeries(Vec<f64>),
    /// f(x) = e^x with the closed-form solution.
    ExpClosedForm,
}

impl std::fmt::Debug for InitialCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InitialCondition::Spectral(d) => f.debug_tuple("Spectral").field(d).finish(),
            InitialCondition::PowerSeries(c) => {
                f.debug_tuple("PowerSeries").field(&c.len()).finish()
            }
            InitialCondition::ExpClosedForm => f.write_str("ExpClosedForm"),
        }
    }
}

/// A first-order-in-time evolution problem with one of the generalized
/// operators on the space side.
#[derive(Debug)]
pub struct DiffusionProblem {
    pub operator: DiffusionOperator,
    pub init: InitialCondition,
    pub tau: f64,
}

impl DiffusionProblem {
    pub fn new(operator: DiffusionOperator, init: InitialCondition, tau: f64) -> Result<Self> {
        if tau.is_nan() || tau < 0.0 {
            return Err(Error::Domain(format!("time must be >= 0, got {tau}")));
        }
        if matches!(init, InitialCondition::ExpClosedForm)
            && !matches!(operator, DiffusionOperator::Laguerre)
        {
            return Err(Error::Domain(
                "the closed-form exponential solution only applies to the Laguerre operator"
                    .into(),
            ));
        }
        Ok(DiffusionProblem {
            operator,
            init,
            tau,
        })
    }

    /// Solution value F(x, tau).
    pub fn solve(&self, x: f64, quad: &QuadratureSpec) -> Result<f64> {
        match (&self.operator, &self.init) {
            (DiffusionOperator::Laguerre, InitialCondition::ExpClosedForm) => {
                laguerre_heat_closed(x, self.tau)
            }
            (DiffusionOperator::Laguerre, InitialCondition::Spectral(d)) => {
                heat_spectral(d, SeriesFamily::LaguerreExp, x, self.tau, quad)
            }
            (DiffusionOperator::Laguerre, InitialCondition::PowerSeries(c)) => {
                ll_heat_umbral(c, x, self.tau, 64)
            }
            (
                DiffusionOperator::LaguerreAlphaBeta { alpha, beta },
                InitialCondition::Spectral(d),
            ) => heat_spectral(
                d,
                SeriesFamily::HumbertExp {
                    alpha: *alpha,
                    beta: *beta,
                },
                x,
                self.tau,
                quad,
            ),
            (DiffusionOperator::AiryTheta { alpha }, InitialCondition::Spectral(d)) => {
                airy_heat_spectral(d, *alpha, x, self.tau, quad)
            }
            (op, init) => Err(Error::Domain(format!(
                "no solver for operator {op:?} with initial condition {init:?}"
            ))),
        }
    }
}
