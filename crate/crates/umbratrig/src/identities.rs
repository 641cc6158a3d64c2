//! User-facing generalized trigonometric functions and the residual suite
//! that turns each structural identity into a computable defect.
//!
//! Addition-theorem left-hand sides f(x (+) y) are computed by evaluating
//! the series on the umbral sum of the scalar embeddings; the right-hand
//! sides are plain products of scalar evaluations. A correct implementation
//! drives every residual to rounding level, except the Pythagorean defect,
//! which is genuinely nonzero for these functions.

use crate::error::{Error, Result};
use crate::quadrature::simpson;
use crate::series::{eval, eval_derivative, eval_real, EvalConfig, SeriesFamily};
use crate::umbral::{embed, embed_block3, eval_on_sequence, scale, umbral_sum, SumFamily, UnityRoots};
use num_complex::Complex64;

/// Sequence order used when turning scalars into umbral sequences; ample
/// for arguments up to |x| = 2 and repetition counts up to 5.
pub const UMBRAL_ORDER: usize = 48;
const BLOCK_ORDER: usize = 24;

/// Laguerre cosine.
pub fn lc(x: f64) -> Result<f64> {
    eval_real(SeriesFamily::LaguerreCos, x, &EvalConfig::default())
}

/// Laguerre sine.
pub fn ls(x: f64) -> Result<f64> {
    eval_real(SeriesFamily::LaguerreSin, x, &EvalConfig::default())
}

/// Laguerre hyperbolic cosine.
pub fn lch(x: f64) -> Result<f64> {
    eval_real(SeriesFamily::LaguerreCosh, x, &EvalConfig::default())
}

/// Laguerre hyperbolic sine.
pub fn lsh(x: f64) -> Result<f64> {
    eval_real(SeriesFamily::LaguerreSinh, x, &EvalConfig::default())
}

/// Alpha-order cosine.
pub fn lc_alpha(x: f64, alpha: f64) -> Result<f64> {
    eval_real(
        SeriesFamily::LaguerreCosAlpha { alpha },
        x,
        &EvalConfig::default(),
    )
}

/// Alpha-order sine.
pub fn ls_alpha(x: f64, alpha: f64) -> Result<f64> {
    eval_real(
        SeriesFamily::LaguerreSinAlpha { alpha },
        x,
        &EvalConfig::default(),
    )
}

/// Two-index (Humbert) cosine.
pub fn lc_ab(x: f64, alpha: f64, beta: f64) -> Result<f64> {
    eval_real(
        SeriesFamily::HumbertCos { alpha, beta },
        x,
        &EvalConfig::default(),
    )
}

/// Two-index (Humbert) sine.
pub fn ls_ab(x: f64, alpha: f64, beta: f64) -> Result<f64> {
    eval_real(
        SeriesFamily::HumbertSin { alpha, beta },
        x,
        &EvalConfig::default(),
    )
}

/// Pseudo-hyperbolic function of residue k and order m.
pub fn phf_e(x: f64, k: u32, m: u32) -> Result<f64> {
    eval_real(SeriesFamily::PseudoHyp { k, m }, x, &EvalConfig::default())
}

/// Even combination of the order-3 pseudo-hyperbolic functions.
pub fn phf_ch(x: f64) -> Result<f64> {
    eval_real(SeriesFamily::PseudoHypCosh, x, &EvalConfig::default())
}

/// Odd combination of the order-3 pseudo-hyperbolic functions.
pub fn phf_sh(x: f64) -> Result<f64> {
    eval_real(SeriesFamily::PseudoHypSinh, x, &EvalConfig::default())
}

/// Beta-weighted order-3 series.
pub fn g_alpha(x: f64, alpha: f64) -> Result<f64> {
    eval_real(SeriesFamily::AiryG { alpha }, x, &EvalConfig::default())
}

/// Identity checked by [`identity_residual`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IdentityKind {
    /// le(ix) = lc(x) + i ls(x).
    Euler,
    /// lc(x (+) y) = lc lc - ls ls under the Laguerre sum.
    AdditionCos,
    /// ls(x (+) y) = lc ls + ls lc under the Laguerre sum.
    AdditionSin,
    /// Alpha-order cosine addition under the alpha kernel.
    AdditionCosAlpha,
    /// Alpha-order sine addition under the alpha kernel.
    AdditionSinAlpha,
    /// Humbert cosine addition under the two-index kernel.
    AdditionCosAlphaBeta,
    /// Humbert sine addition under the two-index kernel.
    AdditionSinAlphaBeta,
    /// ch(x (+) y) = ch ch + sh sh under the block-3 sum.
    AdditionCoshPhf,
    /// sh(x (+) y) = ch sh + sh ch under the block-3 sum.
    AdditionSinhPhf,
    /// le(x) le(y) = le(x (+) y).
    SemigroupLaguerre,
    /// Alpha-order exponential semigroup.
    SemigroupAlpha,
    /// Order-3 pseudo-hyperbolic semigroup.
    SemigroupPhf,
    /// lc(2 (x) x) = lc^2 - ls^2 and ls(2 (x) x) = 2 lc ls.
    Duplication,
    /// (lc + i ls)^n = lc(n (x) x) + i ls(n (x) x).
    DeMoivre { n: u32 },
    /// exp(w x) = sum_k w^k e(k,m)(x) over every m-th root of unity w.
    EulerDecompPhf { m: u32 },
    /// Signed defect lc^2 + ls^2 - 1 (nonzero by construction).
    PythagorasDefect,
}

/// Argument bundle for [`identity_residual`]; kinds ignore the fields they
/// do not use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualArgs {
    pub x: f64,
    pub y: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl Default for ResidualArgs {
    fn default() -> Self {
        ResidualArgs {
            x: 0.0,
            y: 0.0,
            alpha: 1.0,
            beta: 1.0,
        }
    }
}

impl ResidualArgs {
    pub fn x(x: f64) -> Self {
        ResidualArgs {
            x,
            ..Default::default()
        }
    }

    pub fn xy(x: f64, y: f64) -> Self {
        ResidualArgs {
            x,
            y,
            ..Default::default()
        }
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }
}

fn addition_residual(
    cos_fam: SeriesFamily,
    sin_fam: SeriesFamily,
    sum: SumFamily,
    cos_side: bool,
    x: f64,
    y: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    let seq = umbral_sum(
        &embed(Complex64::new(x, 0.0), UMBRAL_ORDER),
        &embed(Complex64::new(y, 0.0), UMBRAL_ORDER),
        sum,
    )?;
    let cx = eval_real(cos_fam, x, cfg)?;
    let cy = eval_real(cos_fam, y, cfg)?;
    let sx = eval_real(sin_fam, x, cfg)?;
    let sy = eval_real(sin_fam, y, cfg)?;
    let (fam, rhs) = if cos_side {
        (cos_fam, cx * cy - sx * sy)
    } else {
        (sin_fam, cx * sy + sx * cy)
    };
    let lhs = eval_on_sequence(fam, &seq, cfg)?;
    Ok((lhs - rhs).norm())
}

/// Defect of one structural identity at the given arguments. Residuals are
/// nonnegative except for [`IdentityKind::PythagorasDefect`], which reports
/// the signed value of lc^2 + ls^2 - 1.
pub fn identity_residual(kind: IdentityKind, args: &ResidualArgs, cfg: &EvalConfig) -> Result<f64> {
    let ResidualArgs { x, y, alpha, beta } = *args;
    match kind {
        IdentityKind::Euler => {
            let lhs = eval(SeriesFamily::LaguerreExp, Complex64::new(0.0, x), cfg)?;
            let rhs = Complex64::new(
                eval_real(SeriesFamily::LaguerreCos, x, cfg)?,
                eval_real(SeriesFamily::LaguerreSin, x, cfg)?,
            );
            Ok((lhs - rhs).norm())
        }
        IdentityKind::AdditionCos => addition_residual(
            SeriesFamily::LaguerreCos,
            SeriesFamily::LaguerreSin,
            SumFamily::Laguerre,
            true,
            x,
            y,
            cfg,
        ),
        IdentityKind::AdditionSin => addition_residual(
            SeriesFamily::LaguerreCos,
            SeriesFamily::LaguerreSin,
            SumFamily::Laguerre,
            false,
            x,
            y,
            cfg,
        ),
        IdentityKind::AdditionCosAlpha => addition_residual(
            SeriesFamily::LaguerreCosAlpha { alpha },
            SeriesFamily::LaguerreSinAlpha { alpha },
            SumFamily::Alpha { alpha },
            true,
            x,
            y,
            cfg,
        ),
        IdentityKind::AdditionSinAlpha => addition_residual(
            SeriesFamily::LaguerreCosAlpha { alpha },
            SeriesFamily::LaguerreSinAlpha { alpha },
            SumFamily::Alpha { alpha },
            false,
            x,
            y,
            cfg,
        ),
        IdentityKind::AdditionCosAlphaBeta => addition_residual(
            SeriesFamily::HumbertCos { alpha, beta },
            SeriesFamily::HumbertSin { alpha, beta },
            SumFamily::AlphaBeta { alpha, beta },
            true,
            x,
            y,
            cfg,
        ),
        IdentityKind::AdditionSinAlphaBeta => addition_residual(
            SeriesFamily::HumbertCos { alpha, beta },
            SeriesFamily::HumbertSin { alpha, beta },
            SumFamily::AlphaBeta { alpha, beta },
            false,
            x,
            y,
            cfg,
        ),
        IdentityKind::AdditionCoshPhf | IdentityKind::AdditionSinhPhf => {
            let seq = umbral_sum(
                &embed_block3(Complex64::new(x, 0.0), BLOCK_ORDER),
                &embed_block3(Complex64::new(y, 0.0), BLOCK_ORDER),
                SumFamily::PseudoHyp3,
            )?;
            let chx = eval_real(SeriesFamily::PseudoHypCosh, x, cfg)?;
            let chy = eval_real(SeriesFamily::PseudoHypCosh, y, cfg)?;
            let shx = eval_real(SeriesFamily::PseudoHypSinh, x, cfg)?;
            let shy = eval_real(SeriesFamily::PseudoHypSinh, y, cfg)?;
            let (fam, rhs) = if kind == IdentityKind::AdditionCoshPhf {
                (SeriesFamily::PseudoHypCosh, chx * chy + shx * shy)
            } else {
                (SeriesFamily::PseudoHypSinh, chx * shy + shx * chy)
            };
            let lhs = eval_on_sequence(fam, &seq, cfg)?;
            Ok((lhs - rhs).norm())
        }
        IdentityKind::SemigroupLaguerre => {
            let seq = umbral_sum(
                &embed(Complex64::new(x, 0.0), UMBRAL_ORDER),
                &embed(Complex64::new(y, 0.0), UMBRAL_ORDER),
                SumFamily::Laguerre,
            )?;
            let lhs = eval_on_sequence(SeriesFamily::LaguerreExp, &seq, cfg)?;
            let rhs = eval_real(SeriesFamily::LaguerreExp, x, cfg)?
                * eval_real(SeriesFamily::LaguerreExp, y, cfg)?;
            Ok((lhs - rhs).norm())
        }
        IdentityKind::SemigroupAlpha => {
            let fam = SeriesFamily::LaguerreExpAlpha { alpha };
            let seq = umbral_sum(
                &embed(Complex64::new(x, 0.0), UMBRAL_ORDER),
                &embed(Complex64::new(y, 0.0), UMBRAL_ORDER),
                SumFamily::Alpha { alpha },
            )?;
            let lhs = eval_on_sequence(fam, &seq, cfg)?;
            let rhs = eval_real(fam, x, cfg)? * eval_real(fam, y, cfg)?;
            Ok((lhs - rhs).norm())
        }
        IdentityKind::SemigroupPhf => {
            let fam = SeriesFamily::PseudoHyp { k: 0, m: 3 };
            let seq = umbral_sum(
                &embed_block3(Complex64::new(x, 0.0), BLOCK_ORDER),
                &embed_block3(Complex64::new(y, 0.0), BLOCK_ORDER),
                SumFamily::PseudoHyp3,
            )?;
            let lhs = eval_on_sequence(fam, &seq, cfg)?;
            let rhs = eval_real(fam, x, cfg)? * eval_real(fam, y, cfg)?;
            Ok((lhs - rhs).norm())
        }
        IdentityKind::Duplication => {
            let doubled = scale(2, Complex64::new(x, 0.0), SumFamily::Laguerre, UMBRAL_ORDER)?;
            let c = eval_real(SeriesFamily::LaguerreCos, x, cfg)?;
            let s = eval_real(SeriesFamily::LaguerreSin, x, cfg)?;
            let cos_lhs = eval_on_sequence(SeriesFamily::LaguerreCos, &doubled, cfg)?;
            let sin_lhs = eval_on_sequence(SeriesFamily::LaguerreSin, &doubled, cfg)?;
            let rc = (cos_lhs - (c * c - s * s)).norm();
            let rs = (sin_lhs - 2.0 * c * s).norm();
            Ok(rc.max(rs))
        }
        IdentityKind::DeMoivre { n } => {
            if n < 1 {
                return Err(Error::Domain("De Moivre exponent must be >= 1".into()));
            }
            let c = eval_real(SeriesFamily::LaguerreCos, x, cfg)?;
            let s = eval_real(SeriesFamily::LaguerreSin, x, cfg)?;
            let lhs = Complex64::new(c, s).powu(n);
            let folded = scale(n, Complex64::new(x, 0.0), SumFamily::Laguerre, UMBRAL_ORDER)?;
            let rhs = Complex64::new(
                eval_on_sequence(SeriesFamily::LaguerreCos, &folded, cfg)?.re,
                eval_on_sequence(SeriesFamily::LaguerreSin, &folded, cfg)?.re,
            );
            Ok((lhs - rhs).norm())
        }
        IdentityKind::EulerDecompPhf { m } => {
            if m < 2 {
                return Err(Error::Domain(
                    "Euler decomposition order must be >= 2".into(),
                ));
            }
            let roots = UnityRoots::new(m)?;
            let mut worst = 0.0f64;
            for w in roots.values() {
                let lhs = (w * x).exp();
                let mut rhs = Complex64::new(0.0, 0.0);
                for k in 0..m {
                    rhs += w.powu(k)
                        * eval(SeriesFamily::PseudoHyp { k, m }, Complex64::new(x, 0.0), cfg)?;
                }
                worst = worst.max((lhs - rhs).norm());
            }
            Ok(worst)
        }
        IdentityKind::PythagorasDefect => {
            let c = eval_real(SeriesFamily::LaguerreCos, x, cfg)?;
            let s = eval_real(SeriesFamily::LaguerreSin, x, cfg)?;
            Ok(c * c + s * s - 1.0)
        }
    }
}

/// One row of the certification sweep.
#[derive(Debug, Clone)]
pub struct SuiteRow {
    pub label: String,
    /// Largest residual over the sweep (for the Pythagorean defect, the
    /// smallest |defect|, which must stay away from zero).
    pub worst: f64,
    pub threshold: f64,
    pub pass: bool,
}

/// Shape parameters swept for the alpha and alpha-beta identities.
pub const SUITE_SHAPE_PARAMS: [f64; 3] = [0.5, 1.0, 2.0];
/// De Moivre exponents covered by the sweep.
pub const SUITE_DEMOIVRE_MAX: u32 = 5;
/// Euler-decomposition orders covered by the sweep.
pub const SUITE_EULER_ORDERS: [u32; 4] = [2, 3, 4, 5];
/// Points at which the Pythagorean defect must stay above 0.01.
pub const SUITE_DEFECT_POINTS: [f64; 3] = [0.5, 1.0, 2.0];
const SUITE_DEFECT_MIN: f64 = 0.01;

/// Run every identity kind over the grid, recording the worst residual per
/// kind. `grid` supplies the x (and y, where used) values; shape parameters
/// come from [`SUITE_SHAPE_PARAMS`].
pub fn run_identity_suite(grid: &[f64], tol: f64, cfg: &EvalConfig) -> Result<Vec<SuiteRow>> {
    let mut rows = Vec::new();
    let mut push = |label: &str, worst: f64, threshold: f64, pass: bool| {
        rows.push(SuiteRow {
            label: label.to_string(),
            worst,
            threshold,
            pass,
        });
    };

    let max_over_x = |kind: IdentityKind, cfg: &EvalConfig| -> Result<f64> {
        let mut worst = 0.0f64;
        for &x in grid {
            worst = worst.max(identity_residual(kind, &ResidualArgs::x(x), cfg)?);
        }
        Ok(worst)
    };
    let max_over_xy = |kind: IdentityKind, alpha: f64, beta: f64, cfg: &EvalConfig| -> Result<f64> {
        let mut worst = 0.0f64;
        for &x in grid {
            for &y in grid {
                let args = ResidualArgs::xy(x, y).with_alpha(alpha).with_beta(beta);
                worst = worst.max(identity_residual(kind, &args, cfg)?);
            }
        }
        Ok(worst)
    };

    let w = max_over_x(IdentityKind::Euler, cfg)?;
    push("euler split", w, tol, w < tol);

    for (label, kind) in [
        ("addition cos", IdentityKind::AdditionCos),
        ("addition sin", IdentityKind::AdditionSin),
        ("semigroup laguerre", IdentityKind::SemigroupLaguerre),
        ("addition cosh phf", IdentityKind::AdditionCoshPhf),
        ("addition sinh phf", IdentityKind::AdditionSinhPhf),
        ("semigroup phf", IdentityKind::SemigroupPhf),
    ] {
        let w = max_over_xy(kind, 1.0, 1.0, cfg)?;
        push(label, w, tol, w < tol);
    }

    for (label, kind) in [
        ("addition cos alpha", IdentityKind::AdditionCosAlpha),
        ("addition sin alpha", IdentityKind::AdditionSinAlpha),
        ("semigroup alpha", IdentityKind::SemigroupAlpha),
    ] {
        let mut worst = 0.0f64;
        for &alpha in &SUITE_SHAPE_PARAMS {
            worst = worst.max(max_over_xy(kind, alpha, 1.0, cfg)?);
        }
        push(label, worst, tol, worst < tol);
    }

    for (label, kind) in [
        ("addition cos alpha-beta", IdentityKind::AdditionCosAlphaBeta),
        ("addition sin alpha-beta", IdentityKind::AdditionSinAlphaBeta),
    ] {
        let mut worst = 0.0f64;
        for &alpha in &SUITE_SHAPE_PARAMS {
            for &beta in &SUITE_SHAPE_PARAMS {
                worst = worst.max(max_over_xy(kind, alpha, beta, cfg)?);
            }
        }
        push(label, worst, tol, worst < tol);
    }

    let w = max_over_x(IdentityKind::Duplication, cfg)?;
    push("duplication", w, tol, w < tol);

    let mut worst = 0.0f64;
    for n in 1..=SUITE_DEMOIVRE_MAX {
        for &x in grid {
            worst = worst.max(identity_residual(
                IdentityKind::DeMoivre { n },
                &ResidualArgs::x(x),
                cfg,
            )?);
        }
    }
    push("de moivre", worst, tol, worst < tol);

    let mut worst = 0.0f64;
    for &m in &SUITE_EULER_ORDERS {
        for &x in grid {
            worst = worst.max(identity_residual(
                IdentityKind::EulerDecompPhf { m },
                &ResidualArgs::x(x),
                cfg,
            )?);
        }
    }
    push("euler decomposition phf", worst, tol, worst < tol);

    let mut least = f64::INFINITY;
    for &x in &SUITE_DEFECT_POINTS {
        let d = identity_residual(IdentityKind::PythagorasDefect, &ResidualArgs::x(x), cfg)?;
        least = least.min(d.abs());
    }
    push(
        "pythagoras defect (must stay > 0.01)",
        least,
        SUITE_DEFECT_MIN,
        least > SUITE_DEFECT_MIN,
    );

    Ok(rows)
}

/// Sampled Lissajous curve (x, lc(x), ls(x)) on [0, x_max] with both
/// endpoints included.
pub fn lissajous_points(x_max: f64, steps: usize) -> Result<Vec<(f64, f64, f64)>> {
    if steps < 2 {
        return Err(Error::Domain(format!(
            "lissajous needs at least 2 samples, got {steps}"
        )));
    }
    if x_max.is_nan() || x_max <= 0.0 {
        return Err(Error::Domain(format!("x_max must be positive, got {x_max}")));
    }
    let cfg = EvalConfig::default();
    let mut pts = Vec::with_capacity(steps);
    for i in 0..steps {
        let x = x_max * i as f64 / (steps - 1) as f64;
        pts.push((
            x,
            eval_real(SeriesFamily::LaguerreCos, x, &cfg)?,
            eval_real(SeriesFamily::LaguerreSin, x, &cfg)?,
        ));
    }
    Ok(pts)
}

/// Area swept by a parametric curve (f, g) from parameter 0 to `x`:
/// (1/2) integral of f g' - g f'. Composite Simpson with `panels` panels.
pub fn swept_area<F, DF, G, DG>(f: F, df: DF, g: G, dg: DG, x: f64, panels: usize) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
    DF: Fn(f64) -> Result<f64>,
    G: Fn(f64) -> Result<f64>,
    DG: Fn(f64) -> Result<f64>,
{
    simpson(
        |t| Ok(0.5 * (f(t)? * dg(t)? - g(t)? * df(t)?)),
        0.0,
        x,
        panels,
    )
}

/// Sector area enclosed by the (lc, ls) curve between parameters 0 and x.
/// Returns (A, 2A); the doubled value is reported alongside because the
/// parameter/area normalization of the generalized angle is ambiguous.
pub fn sector_area(x: f64, quad_panels: usize) -> Result<(f64, f64)> {
    if x < 0.0 {
        return Err(Error::Domain(format!(
            "sector area parameter must be >= 0, got {x}"
        )));
    }
    let cfg = EvalConfig::default();
    let a = swept_area(
        |t| eval_real(SeriesFamily::LaguerreCos, t, &cfg),
        |t| eval_derivative(SeriesFamily::LaguerreCos, Complex64::new(t, 0.0), &cfg).map(|v| v.re),
        |t| eval_real(SeriesFamily::LaguerreSin, t, &cfg),
        |t| eval_derivative(SeriesFamily::LaguerreSin, Complex64::new(t, 0.0), &cfg).map(|v| v.re),
        x,
        quad_panels,
    )?;
    Ok((a, 2.0 * a))
}
