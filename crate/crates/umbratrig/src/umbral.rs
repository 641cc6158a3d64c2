//! Umbral sequences and weighted-binomial composition rules.
//!
//! A sequence a_0..a_N stands for the powers of a formal symbol; the sum of
//! two symbols becomes a weighted convolution of their sequences,
//! (a (+) b)_n = sum_r w(n, r) a_(n-r) b_r, with one weight kernel per
//! composition family. Kernels whose values are integers go through a
//! 128-bit integer path for small n so the combinatorial identities hold
//! without rounding.

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::series::{EvalConfig, SeriesFamily};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Weight kernel defining a composition rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SumFamily {
    /// Newton binomial, w(n, r) = C(n, r).
    Ordinary,
    /// Squared binomial, w(n, r) = C(n, r)^2.
    Laguerre,
    /// Alpha-order kernel,
    /// w(n, r) = C(n, r) Gamma(n+a+1) / (Gamma(n-r+a+1) Gamma(r+a+1)).
    Alpha { alpha: f64 },
    /// Two-index kernel with independent alpha and beta Gamma ratios.
    AlphaBeta { alpha: f64, beta: f64 },
    /// Block rule on cubed powers, w(n, r) = C(3n, 3r); entry j of a
    /// block-indexed sequence stands for the power x^(3j).
    PseudoHyp3,
    /// Airy-type block kernel on cubed powers.
    Airy { alpha: f64 },
}

/// How a sequence's entries map onto powers of the underlying symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indexing {
    /// Entry j stands for the power x^j.
    Plain,
    /// Entry j stands for the power x^(3j).
    Block3,
}

impl SumFamily {
    pub fn validate(&self) -> Result<()> {
        let check = |name: &str, a: f64| -> Result<()> {
            if a > -1.0 && a.is_finite() {
                Ok(())
            } else {
                Err(Error::Domain(format!("{name} requires alpha > -1, got {a}")))
            }
        };
        match *self {
            SumFamily::Ordinary | SumFamily::Laguerre | SumFamily::PseudoHyp3 => Ok(()),
            SumFamily::Alpha { alpha } => check("alpha kernel", alpha),
            SumFamily::AlphaBeta { alpha, beta } => {
                check("alpha-beta kernel", alpha)?;
                check("alpha-beta kernel", beta)
            }
            SumFamily::Airy { alpha } => {
                if alpha > 0.0 && alpha.is_finite() {
                    Ok(())
                } else {
                    Err(Error::Domain(format!(
                        "Airy kernel requires alpha > 0, got {alpha}"
                    )))
                }
            }
        }
    }

    /// Indexing convention the kernel expects of its operand sequences.
    pub fn indexing(&self) -> Indexing {
        match self {
            SumFamily::PseudoHyp3 | SumFamily::Airy { .. } => Indexing::Block3,
            _ => Indexing::Plain,
        }
    }
}

/// Binomial coefficient, exact through a u128 path whenever the running
/// product fits, falling back to floating point.
pub(crate) fn binomial(n: u64, r: u64) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        match acc.checked_mul((n - r + i) as u128) {
            Some(v) => acc = v / i as u128,
            None => return binomial_f64(n, r),
        }
    }
    acc as f64
}

fn binomial_f64(n: u64, r: u64) -> f64 {
    let mut acc = 1.0;
    for i in 1..=r {
        acc *= (n - r + i) as f64 / i as f64;
    }
    acc
}

/// Rising product a (a+1) ... (a+k-1).
fn rising(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// Kernel value w(n, r). For the block families n and r are block indices
/// (true powers 3n and 3r).
pub fn weight(family: SumFamily, n: usize, r: usize) -> Result<f64> {
    family.validate()?;
    if r > n {
        return Err(Error::Domain(format!(
            "weight index r = {r} exceeds n = {n}"
        )));
    }
    let (n64, r64) = (n as u64, r as u64);
    Ok(match family {
        SumFamily::Ordinary => binomial(n64, r64),
        SumFamily::Laguerre => {
            let c = binomial(n64, r64);
            c * c
        }
        SumFamily::PseudoHyp3 => binomial(3 * n64, 3 * r64),
        SumFamily::Alpha { alpha } => {
            binomial(n64, r64) * rising((n - r) as f64 + alpha + 1.0, r)
                / gamma(r as f64 + alpha + 1.0)?
        }
        SumFamily::AlphaBeta { alpha, beta } => {
            binomial(n64, r64)
                * rising((n - r) as f64 + alpha + 1.0, r)
                * rising((n - r) as f64 + beta + 1.0, r)
                / (gamma(r as f64 + alpha + 1.0)? * gamma(r as f64 + beta + 1.0)?)
        }
        SumFamily::Airy { alpha } => {
            let third = 1.0 / 3.0;
            binomial(n64, r64) * rising((n - r) as f64 + third, r)
                / rising(third, r)
                * (rising((n - r) as f64 + alpha + 2.0 * third, r)
                    / rising(alpha + 2.0 * third, r))
        }
    })
}

/// Finite sequence of umbral powers.
#[derive(Debug, Clone, PartialEq)]
pub struct UmbralSequence {
    entries: Vec<Complex64>,
    indexing: Indexing,
}

impl UmbralSequence {
    pub fn from_entries(entries: Vec<Complex64>, indexing: Indexing) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("umbral sequence needs at least entry 0".into()));
        }
        Ok(UmbralSequence { entries, indexing })
    }

    pub fn order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn indexing(&self) -> Indexing {
        self.indexing
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entry(&self, n: usize) -> Complex64 {
        self.entries[n]
    }
}

/// Scalar embedding: entry n is x^n (with 0^0 = 1 by umbral convention).
pub fn embed(x: Complex64, order: usize) -> UmbralSequence {
    let mut entries = Vec::with_capacity(order + 1);
    let mut p = Complex64::new(1.0, 0.0);
    entries.push(p);
    for _ in 0..order {
        p *= x;
        entries.push(p);
    }
    UmbralSequence {
        entries,
        indexing: Indexing::Plain,
    }
}

/// Block-indexed scalar embedding: entry j is x^(3j).
pub fn embed_block3(x: Complex64, order: usize) -> UmbralSequence {
    let cube = x * x * x;
    let mut entries = Vec::with_capacity(order + 1);
    let mut p = Complex64::new(1.0, 0.0);
    entries.push(p);
    for _ in 0..order {
        p *= cube;
        entries.push(p);
    }
    UmbralSequence {
        entries,
        indexing: Indexing::Block3,
    }
}

/// Weighted convolution (a (+) b)_n = sum_r w(n, r) a_(n-r) b_r, truncated
/// at the smaller input order.
pub fn umbral_sum(
    a: &UmbralSequence,
    b: &UmbralSequence,
    family: SumFamily,
) -> Result<UmbralSequence> {
    family.validate()?;
    let idx = family.indexing();
    if a.indexing() != idx || b.indexing() != idx {
        return Err(Error::SupportMismatch(format!(
            "{family:?} expects {idx:?}-indexed sequences"
        )));
    }
    let order = a.order().min(b.order());
    let mut entries = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = Complex64::new(0.0, 0.0);
        for r in 0..=n {
            acc += a.entry(n - r) * b.entry(r) * weight(family, n, r)?;
        }
        entries.push(acc);
    }
    Ok(UmbralSequence {
        entries,
        indexing: idx,
    })
}

/// k-fold umbral sum of a scalar with itself, x (+) (... (+) (x (+) x));
/// k = 1 is the plain embedding.
pub fn scale(k: u32, x: Complex64, family: SumFamily, order: usize) -> Result<UmbralSequence> {
    if k == 0 {
        return Err(Error::Domain("scale repetition count must be >= 1".into()));
    }
    family.validate()?;
    let base = match family.indexing() {
        Indexing::Plain => embed(x, order),
        Indexing::Block3 => embed_block3(x, order),
    };
    let mut acc = base.clone();
    for _ in 1..k {
        acc = umbral_sum(&base, &acc, family)?;
    }
    Ok(acc)
}

/// Series family evaluated on an umbral sequence: sum of c_n a_n, with the
/// same stopping rule as scalar evaluation.
pub fn eval_on_sequence(
    family: SeriesFamily,
    seq: &UmbralSequence,
    cfg: &EvalConfig,
) -> Result<Complex64> {
    family.validate()?;
    cfg.validate()?;
    let sup = family.support();
    let (start, step) = match seq.indexing() {
        Indexing::Plain => (sup.offset as usize, sup.stride as usize),
        Indexing::Block3 => {
            if !sup.offset.is_multiple_of(3) || !sup.stride.is_multiple_of(3) {
                return Err(Error::SupportMismatch(format!(
                    "{family:?} has support offset {} stride {}, not representable on a block-3 sequence",
                    sup.offset, sup.stride
                )));
            }
            ((sup.offset / 3) as usize, (sup.stride / 3) as usize)
        }
    };
    let mut c = family.first_coeff()?;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut streak = 0usize;
    let mut pos = start;
    for j in 0..cfg.max_terms {
        if pos > seq.order() {
            return Err(Error::Convergence { terms: j });
        }
        let term = seq.entry(pos) * c;
        sum += term;
        if term.norm() <= cfg.rel_tol * sum.norm() {
            streak += 1;
            if streak >= cfg.stop_streak {
                return Ok(sum);
            }
        } else {
            streak = 0;
        }
        c *= family.coeff_ratio(j as u64);
        pos += step;
    }
    Err(Error::Convergence {
        terms: cfg.max_terms,
    })
}

/// lambda_n(1, y) = sum_r C(n, r)^2 y^r by a term recurrence that never
/// materializes the large binomials.
fn lambda_at_one(y: f64, n: u32) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for r in 0..n {
        let f = (n - r) as f64 / (r + 1) as f64;
        term *= f * f * y;
        sum += term;
    }
    sum
}

/// n-th member of the limit sequence converging to the Laguerre
/// exponential: (1 (+) x/n^2)^n.
pub fn napier_term(x: f64, n: u32) -> f64 {
    assert!(n >= 1, "napier_term needs n >= 1");
    let nf = n as f64;
    lambda_at_one(x / (nf * nf), n)
}

/// n-th member of the limit sequence converging to Bessel J0:
/// (1 (+) -(x/2n)^2)^n.
pub fn j0_term(x: f64, n: u32) -> f64 {
    assert!(n >= 1, "j0_term needs n >= 1");
    let h = x / (2.0 * n as f64);
    lambda_at_one(-(h * h), n)
}

/// Cubic-roots-of-unity average (1/3) sum_p (x + w_p y)^(3n), the operator
/// form of the block-3 composition rule.
pub fn phf_roots_average(x: Complex64, y: Complex64, n: u32) -> Complex64 {
    let roots = UnityRoots::new(3).expect("order 3 is valid");
    let mut acc = Complex64::new(0.0, 0.0);
    for w in roots.values() {
        acc += (x + w * y).powu(3 * n);
    }
    acc / 3.0
}

/// The m-th roots of unity.
#[derive(Debug, Clone, PartialEq)]
pub struct UnityRoots {
    m: u32,
    values: Vec<Complex64>,
}

impl UnityRoots {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!("unity roots need m >= 2, got {m}")));
        }
        let values = (0..m)
            .map(|p| Complex64::from_polar(1.0, TAU * p as f64 / m as f64))
            .collect();
        Ok(UnityRoots { m, values })
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn root(&self, p: u32) -> Complex64 {
        self.values[(p % self.m) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{apply_derivative, eval, eval_real, DerivOp};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn weight_spot_values() {
        // C(4,2)^2 = 36.
        assert_eq!(weight(SumFamily::Laguerre, 4, 2).unwrap(), 36.0);
        // Block kernel: C(6,3) = 20.
        assert_eq!(weight(SumFamily::PseudoHyp3, 2, 1).unwrap(), 20.0);
        // w(n, 0) = 1 for the integral kernels and the Airy telescoping.
        for n in 0..8 {
            assert_eq!(weight(SumFamily::Ordinary, n, 0).unwrap(), 1.0);
            assert_eq!(weight(SumFamily::Laguerre, n, 0).unwrap(), 1.0);
            assert_eq!(weight(SumFamily::PseudoHyp3, n, 0).unwrap(), 1.0);
            assert_relative_eq!(
                weight(SumFamily::Airy { alpha: 0.7 }, n, 0).unwrap(),
                1.0,
                max_relative = 1e-13
            );
        }
        // Alpha kernel at r = 0 carries the printed 1/Gamma(alpha+1).
        assert_relative_eq!(
            weight(SumFamily::Alpha { alpha: 1.0 }, 5, 0).unwrap(),
            1.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            weight(SumFamily::Alpha { alpha: 2.0 }, 5, 0).unwrap(),
            0.5,
            max_relative = 1e-13
        );
        assert!(weight(SumFamily::Laguerre, 2, 3).is_err());
        assert!(weight(SumFamily::Airy { alpha: -1.0 }, 2, 1).is_err());
    }

    #[test]
    fn weight_symmetry() {
        let fams = [
            SumFamily::Ordinary,
            SumFamily::Laguerre,
            SumFamily::Alpha { alpha: 0.5 },
            SumFamily::AlphaBeta { alpha: 0.5, beta: 2.0 },
            SumFamily::PseudoHyp3,
            SumFamily::Airy { alpha: 1.5 },
        ];
        for fam in fams {
            for n in 0..12usize {
                for r in 0..=n {
                    let w1 = weight(fam, n, r).unwrap();
                    let w2 = weight(fam, n, n - r).unwrap();
                    assert_relative_eq!(w1, w2, max_relative = 1e-12);
                }
            }
        }
    }

    #[test]
    fn embed_spot_values() {
        let s = embed(c(2.0), 3);
        assert_eq!(s.entries(), &[c(1.0), c(2.0), c(4.0), c(8.0)]);
        let z = embed(c(0.0), 2);
        assert_eq!(z.entries(), &[c(1.0), c(0.0), c(0.0)]);
        let i = embed(Complex64::new(0.0, 1.0), 2);
        assert_eq!(
            i.entries(),
            &[c(1.0), Complex64::new(0.0, 1.0), c(-1.0)]
        );
        let b = embed_block3(c(2.0), 2);
        assert_eq!(b.entries(), &[c(1.0), c(8.0), c(64.0)]);
        assert_eq!(b.indexing(), Indexing::Block3);
    }

    #[test]
    fn laguerre_sum_integer_identities() {
        // (1 (+) 1)^n = (2n)! / (n!)^2, exactly, n <= 15.
        let one = embed(c(1.0), 15);
        let s = umbral_sum(&one, &one, SumFamily::Laguerre).unwrap();
        for n in 0..=15usize {
            let want = binomial(2 * n as u64, n as u64);
            assert_eq!(s.entry(n).re, want, "n = {n}");
            assert_eq!(s.entry(n).im, 0.0);
        }
        // (1 (+) -1)^n vanishes at odd n and equals i^n n!/((n/2)!)^2 at
        // even n; i^n = (-1)^(n/2) and n!/((n/2)!)^2 = C(n, n/2).
        let neg = embed(c(-1.0), 15);
        let d = umbral_sum(&one, &neg, SumFamily::Laguerre).unwrap();
        for n in 0..=15usize {
            if n % 2 == 1 {
                assert_eq!(d.entry(n).re, 0.0, "odd n = {n}");
            } else {
                let k = n / 2;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let want = sign * binomial(n as u64, k as u64);
                assert_eq!(d.entry(n).re, want, "even n = {n}");
            }
        }
        // (i (+) -i)^n: zero at odd n, n!/((n/2)!)^2 at even n.
        let iseq = embed(Complex64::new(0.0, 1.0), 15);
        let mseq = embed(Complex64::new(0.0, -1.0), 15);
        let im = umbral_sum(&iseq, &mseq, SumFamily::Laguerre).unwrap();
        for n in 0..=15usize {
            let want = if n % 2 == 1 {
                0.0
            } else {
                binomial(n as u64, (n / 2) as u64)
            };
            assert_eq!(im.entry(n).re, want, "n = {n}");
            assert_eq!(im.entry(n).im, 0.0, "n = {n}");
        }
    }

    #[test]
    fn ordinary_sum_is_newton_binomial() {
        let a = embed(c(2.0), 10);
        let b = embed(c(3.0), 10);
        let s = umbral_sum(&a, &b, SumFamily::Ordinary).unwrap();
        let mut p = 1.0;
        for n in 0..=10usize {
            assert_eq!(s.entry(n).re, p, "n = {n}");
            p *= 5.0;
        }
    }

    #[test]
    fn sum_truncates_at_the_smaller_order() {
        let a = embed(c(1.0), 5);
        let b = embed(c(1.0), 9);
        let s = umbral_sum(&a, &b, SumFamily::Laguerre).unwrap();
        assert_eq!(s.order(), 5);
    }

    #[test]
    fn block_sum_matches_roots_of_unity_average() {
        let pts = [
            c(1.0),
            c(-1.0),
            c(2.0),
            c(0.5),
            Complex64::new(1.0, 1.0),
            Complex64::new(-0.3, 0.9),
        ];
        for &x in &pts {
            for &y in &pts {
                let s = umbral_sum(
                    &embed_block3(x, 8),
                    &embed_block3(y, 8),
                    SumFamily::PseudoHyp3,
                )
                .unwrap();
                for n in 0..=8usize {
                    let avg = phf_roots_average(x, y, n as u32);
                    // Relative to the natural magnitude of the average's
                    // terms, (|x| + |y|)^(3n): the value itself can cancel
                    // to zero (x = 1, y = -1).
                    let scale = (x.norm() + y.norm()).powi(3 * n as i32).max(1.0);
                    assert_abs_diff_eq!(s.entry(n).re, avg.re, epsilon = 1e-12 * scale);
                    assert_abs_diff_eq!(s.entry(n).im, avg.im, epsilon = 1e-12 * scale);
                }
            }
        }
        // Footnote values: (1 (+) 1)^3 = 2, (1 (+) 1)^6 = 22 on blocks 1, 2.
        assert_abs_diff_eq!(
            phf_roots_average(c(1.0), c(1.0), 1).re,
            2.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            phf_roots_average(c(1.0), c(1.0), 2).re,
            22.0,
            epsilon = 1e-11
        );
        // (x (+) 0)^(3n) = x^(3n).
        let x = c(1.3);
        for n in 0..5u32 {
            assert_relative_eq!(
                phf_roots_average(x, c(0.0), n).re,
                1.3f64.powi(3 * n as i32),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn pseudo_hyp_block_integer_identity() {
        // (1 (+) 1)^(3n) = (2^(3n) + 2 (-1)^n)/3 exactly for n <= 15.
        let one = embed_block3(c(1.0), 15);
        let s = umbral_sum(&one, &one, SumFamily::PseudoHyp3).unwrap();
        for n in 0..=15usize {
            let want = ((1u128 << (3 * n)) as f64 + 2.0 * if n % 2 == 0 { 1.0 } else { -1.0 }) / 3.0;
            assert_eq!(s.entry(n).re, want, "block n = {n}");
        }
    }

    #[test]
    fn scale_spot_values() {
        // (2 (x) 1)_3 = 6!/(3!)^2 = 20.
        let s2 = scale(2, c(1.0), SumFamily::Laguerre, 8).unwrap();
        assert_eq!(s2.entry(3).re, 20.0);
        // (2 (x) x)_n = (2n)!/(n!)^2 x^n exactly for dyadic x.
        for &x in &[1.0, 2.0, 0.5] {
            let s = scale(2, c(x), SumFamily::Laguerre, 15).unwrap();
            for n in 0..=15usize {
                let want = binomial(2 * n as u64, n as u64) * x.powi(n as i32);
                assert_eq!(s.entry(n).re, want, "x = {x}, n = {n}");
            }
        }
        // k = 1 is the embedding.
        let s1 = scale(1, c(1.7), SumFamily::Laguerre, 6).unwrap();
        assert_eq!(s1, embed(c(1.7), 6));
        // Three-fold sum at order 1: coefficient 3.
        let s3 = scale(3, c(1.0), SumFamily::Laguerre, 4).unwrap();
        assert_eq!(s3.entry(1).re, 3.0);
        assert!(scale(0, c(1.0), SumFamily::Laguerre, 4).is_err());
    }

    #[test]
    fn scale_fold_direction_is_immaterial() {
        let x = c(0.8);
        let base = embed(x, 24);
        let mut left = base.clone();
        for _ in 1..4 {
            left = umbral_sum(&left, &base, SumFamily::Laguerre).unwrap();
        }
        let right = scale(4, x, SumFamily::Laguerre, 24).unwrap();
        for n in 0..=24usize {
            assert_relative_eq!(left.entry(n).re, right.entry(n).re, max_relative = 1e-12);
        }
    }

    #[test]
    fn eval_on_sequence_embedding_consistency() {
        let x = Complex64::new(0.83, 0.21);
        let via_seq =
            eval_on_sequence(SeriesFamily::LaguerreExp, &embed(x, 60), &cfg()).unwrap();
        let direct = eval(SeriesFamily::LaguerreExp, x, &cfg()).unwrap();
        assert_eq!(via_seq.re.to_bits(), direct.re.to_bits());
        assert_eq!(via_seq.im.to_bits(), direct.im.to_bits());
    }

    #[test]
    fn semigroup_laws() {
        // Laguerre exponential: le(x (+) y) = le(x) le(y).
        let (x, y) = (0.4, 0.7);
        let s = umbral_sum(&embed(c(x), 48), &embed(c(y), 48), SumFamily::Laguerre).unwrap();
        let lhs = eval_on_sequence(SeriesFamily::LaguerreExp, &s, &cfg()).unwrap();
        let rhs = eval_real(SeriesFamily::LaguerreExp, x, &cfg()).unwrap()
            * eval_real(SeriesFamily::LaguerreExp, y, &cfg()).unwrap();
        assert_relative_eq!(lhs.re, rhs, max_relative = 1e-12);

        // Alpha-order version under the alpha kernel.
        for alpha in [0.5, 1.0, 2.0] {
            let fam = SeriesFamily::LaguerreExpAlpha { alpha };
            let s = umbral_sum(
                &embed(c(x), 48),
                &embed(c(y), 48),
                SumFamily::Alpha { alpha },
            )
            .unwrap();
            let lhs = eval_on_sequence(fam, &s, &cfg()).unwrap();
            let rhs =
                eval_real(fam, x, &cfg()).unwrap() * eval_real(fam, y, &cfg()).unwrap();
            assert_relative_eq!(lhs.re, rhs, max_relative = 1e-11);
        }

        // Pseudo-hyperbolic version on blocks.
        let fam = SeriesFamily::PseudoHyp { k: 0, m: 3 };
        let s = umbral_sum(
            &embed_block3(c(x), 24),
            &embed_block3(c(y), 24),
            SumFamily::PseudoHyp3,
        )
        .unwrap();
        let lhs = eval_on_sequence(fam, &s, &cfg()).unwrap();
        let rhs = eval_real(fam, x, &cfg()).unwrap() * eval_real(fam, y, &cfg()).unwrap();
        assert_relative_eq!(lhs.re, rhs, max_relative = 1e-12);
    }

    #[test]
    fn duplication_value() {
        let x = 1.0;
        let s2 = scale(2, c(x), SumFamily::Laguerre, 48).unwrap();
        let lhs = eval_on_sequence(SeriesFamily::LaguerreCos, &s2, &cfg()).unwrap();
        let lc = eval_real(SeriesFamily::LaguerreCos, x, &cfg()).unwrap();
        let ls = eval_real(SeriesFamily::LaguerreSin, x, &cfg()).unwrap();
        assert_relative_eq!(lhs.re, lc * lc - ls * ls, max_relative = 1e-11);
    }

    #[test]
    fn support_mismatch_is_a_type_error() {
        let blocks = embed_block3(c(1.0), 10);
        let plain = embed(c(1.0), 10);
        assert!(matches!(
            eval_on_sequence(SeriesFamily::LaguerreCos, &blocks, &cfg()),
            Err(Error::SupportMismatch(_))
        ));
        assert!(matches!(
            umbral_sum(&plain, &blocks, SumFamily::Laguerre),
            Err(Error::SupportMismatch(_))
        ));
        assert!(matches!(
            umbral_sum(&plain, &plain, SumFamily::PseudoHyp3),
            Err(Error::SupportMismatch(_))
        ));
        // Pseudo-hyperbolic cosh/sinh do land on blocks (longer sequence:
        // their support strides two blocks at a time).
        let blocks = embed_block3(c(1.0), 20);
        assert!(eval_on_sequence(SeriesFamily::PseudoHypCosh, &blocks, &cfg()).is_ok());
        assert!(eval_on_sequence(SeriesFamily::PseudoHypSinh, &blocks, &cfg()).is_ok());
    }

    #[test]
    fn eval_on_short_sequence_fails_to_converge() {
        let s = embed(c(2.0), 3);
        assert!(matches!(
            eval_on_sequence(SeriesFamily::LaguerreExp, &s, &cfg()),
            Err(Error::Convergence { .. })
        ));
    }

    #[test]
    fn napier_terms() {
        assert_eq!(napier_term(1.0, 1), 2.0);
        for n in [1, 7, 80] {
            assert_eq!(napier_term(0.0, n), 1.0);
        }
        let limit = eval_real(SeriesFamily::LaguerreExp, 1.0, &cfg()).unwrap();
        assert_abs_diff_eq!(napier_term(1.0, 100), limit, epsilon = 2e-2);
        let errs: Vec<f64> = [10u32, 100, 1000]
            .iter()
            .map(|&n| (napier_term(1.0, n) - limit).abs())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2]);
        assert!(errs[2] < 3e-3);
    }

    #[test]
    fn j0_terms() {
        for n in [1, 13, 400] {
            assert_eq!(j0_term(0.0, n), 1.0);
        }
        let j0 = crate::series::bessel_j0(1.0);
        assert_abs_diff_eq!(j0_term(1.0, 400), j0, epsilon = 5e-3);
        // Halving the step shrinks the deviation.
        let j2 = crate::series::bessel_j0(2.0);
        let mut prev = f64::INFINITY;
        for n in [25u32, 50, 100, 200] {
            let err = (j0_term(2.0, n) - j2).abs();
            assert!(err < prev, "n = {n}");
            prev = err;
        }
    }

    #[test]
    fn unity_roots_properties() {
        for m in 2..=6u32 {
            let roots = UnityRoots::new(m).unwrap();
            for w in roots.values() {
                let p = w.powu(m);
                assert_abs_diff_eq!(p.re, 1.0, epsilon = 1e-12);
                assert_abs_diff_eq!(p.im, 0.0, epsilon = 1e-12);
            }
            for k in 0..(2 * m) {
                let s: Complex64 = roots.values().iter().map(|w| w.powu(k)).sum();
                let want = if k % m == 0 { m as f64 } else { 0.0 };
                assert_abs_diff_eq!(s.re, want, epsilon = 1e-12);
                assert_abs_diff_eq!(s.im, 0.0, epsilon = 1e-12);
            }
        }
        assert!(UnityRoots::new(1).is_err());
    }

    #[test]
    fn hybrid_polynomial_satisfies_the_two_variable_equation() {
        // lambda_n(x, y) = sum_r C(n,r)^2 x^(n-r) y^r solves
        // LD_x F = LD_y F; check the coefficient action at random points.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let x: f64 = rng.gen_range(0.0..2.0);
            let y: f64 = rng.gen_range(0.0..2.0);
            for n in 1..=10usize {
                // Coefficients in x for fixed y, and in y for fixed x.
                let cx: Vec<f64> = (0..=n)
                    .map(|j| {
                        let w = weight(SumFamily::Laguerre, n, n - j).unwrap();
                        w * y.powi((n - j) as i32)
                    })
                    .collect();
                let cy: Vec<f64> = (0..=n)
                    .map(|r| {
                        let w = weight(SumFamily::Laguerre, n, r).unwrap();
                        w * x.powi((n - r) as i32)
                    })
                    .collect();
                let dx = apply_derivative(&cx, DerivOp::Laguerre);
                let dy = apply_derivative(&cy, DerivOp::Laguerre);
                let vx: f64 = dx
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * x.powi(j as i32))
                    .sum();
                let vy: f64 = dy
                    .iter()
                    .enumerate()
                    .map(|(r, c)| c * y.powi(r as i32))
                    .sum();
                let denom = vx.abs().max(vy.abs()).max(1e-30);
                assert!(
                    ((vx - vy) / denom).abs() < 1e-10,
                    "n = {n}, x = {x}, y = {y}: {vx} vs {vy}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn umbral_sum_commutes(
            xr in -2.0..2.0f64, xi in -1.0..1.0f64,
            yr in -2.0..2.0f64, yi in -1.0..1.0f64,
            pick in 0..6usize,
        ) {
            let fam = [
                SumFamily::Ordinary,
                SumFamily::Laguerre,
                SumFamily::Alpha { alpha: 0.5 },
                SumFamily::AlphaBeta { alpha: 0.5, beta: 2.0 },
                SumFamily::PseudoHyp3,
                SumFamily::Airy { alpha: 1.0 },
            ][pick];
            let x = Complex64::new(xr, xi);
            let y = Complex64::new(yr, yi);
            let (a, b) = match fam.indexing() {
                Indexing::Plain => (embed(x, 12), embed(y, 12)),
                Indexing::Block3 => (embed_block3(x, 12), embed_block3(y, 12)),
            };
            let ab = umbral_sum(&a, &b, fam).unwrap();
            let ba = umbral_sum(&b, &a, fam).unwrap();
            for n in 0..=12usize {
                // Tolerance scaled by the magnitude sum: the convolution can
                // cancel heavily for mixed-sign entries.
                let mag: f64 = (0..=n)
                    .map(|r| {
                        weight(fam, n, r).unwrap() * a.entry(n - r).norm() * b.entry(r).norm()
                    })
                    .sum();
                let d = (ab.entry(n) - ba.entry(n)).norm();
                prop_assert!(d <= 1e-13 * mag.max(1.0), "n={} d={} mag={}", n, d, mag);
            }
        }

        #[test]
        fn umbral_sum_associates(
            x in 0.0..2.0f64, y in 0.0..2.0f64, z in 0.0..2.0f64,
            pick in 0..5usize,
        ) {
            let fam = [
                SumFamily::Ordinary,
                SumFamily::Laguerre,
                SumFamily::Alpha { alpha: 1.0 },
                SumFamily::AlphaBeta { alpha: 0.5, beta: 1.0 },
                SumFamily::PseudoHyp3,
            ][pick];
            let mk = |v: f64| match fam.indexing() {
                Indexing::Plain => embed(c(v), 10),
                Indexing::Block3 => embed_block3(c(v), 10),
            };
            let (a, b, cc) = (mk(x), mk(y), mk(z));
            let left = umbral_sum(&umbral_sum(&a, &b, fam).unwrap(), &cc, fam).unwrap();
            let right = umbral_sum(&a, &umbral_sum(&b, &cc, fam).unwrap(), fam).unwrap();
            for n in 0..=10usize {
                let scale = left.entry(n).norm().max(1.0);
                prop_assert!((left.entry(n) - right.entry(n)).norm() <= 1e-12 * scale);
            }
        }

        #[test]
        fn embed_entries_are_powers(x in -3.0..3.0f64, order in 1..20usize) {
            let s = embed(c(x), order);
            prop_assert_eq!(s.order(), order);
            for n in 0..=order {
                prop_assert!((s.entry(n).re - x.powi(n as i32)).abs() <= 1e-12 * x.powi(n as i32).abs().max(1.0));
            }
        }
    }
}
