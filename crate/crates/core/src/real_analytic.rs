//! Real-variable probes: the coordinatewise Runge family, whose radii of
//! convergence shrink like `1/n`, and `f(t) = (sin nt)_n`, which has a
//! global Taylor expansion in every coordinate yet leaves the
//! polynomial-growth space once `t` is made imaginary.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::logspace::{ln_sinh, LogComplex};
use crate::report::{Certified, Check, Verdict};
use crate::scalar::{lit, to_f64, Real};
use crate::sequence::{FormalSequence, TruncatedVector};

/// Allowed increase of the log-sup when the probe range doubles.
pub const SUP_STABILITY: f64 = 0.1;
/// Minimum growth of the octave slope that counts as acceleration.
pub const SLOPE_ACCELERATION: f64 = 0.5;
/// A root-test sequence that grows by more than this factor across the
/// window is read as divergent.
pub const DIVERGENCE_FACTOR: f64 = 1.5;
/// Slack on the radius bound `1/n_max` in the product demo.
pub const RADIUS_SLACK: f64 = 1.1;

/// `1 / (1 + (nt)^2)`.
pub fn runge_component<T: Real>(n: u64, t: T) -> T {
    let nt = T::from_u64(n).expect("index") * t;
    (T::one() + nt * nt).recip()
}

/// Taylor coefficients `c_j = f^{(j)}(t0) / j!` of a scalar function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaylorSeries1D<T> {
    pub center: T,
    pub coefficients: Vec<T>,
}

impl<T: Real> TaylorSeries1D<T> {
    pub fn new(center: T, coefficients: Vec<T>) -> Result<Self> {
        if let Some(j) = coefficients.iter().position(|c| !c.is_finite()) {
            return Err(Error::Precondition {
                index: j,
                reason: "coefficient is not finite".into(),
            });
        }
        Ok(Self { center, coefficients })
    }

    /// Series of `1/(1+(nt)^2)` at 0: `c_{2j} = (−1)^j n^{2j}`, odd terms 0.
    pub fn runge(n: u64, len: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange(0));
        }
        let n2 = T::from_u64(n).expect("index").powi(2);
        let mut coefficients = Vec::with_capacity(len);
        let mut even = T::one();
        for j in 0..len {
            if j % 2 == 0 {
                coefficients.push(even);
                even = -even * n2;
            } else {
                coefficients.push(T::zero());
            }
        }
        Self::new(T::zero(), coefficients)
    }

    /// Series of `sin(n·)` at `t0`: `c_j = n^j sin(n t0 + jπ/2) / j!`.
    pub fn sine(n: u64, center: T, len: usize) -> Result<Self> {
        let nn = T::from_u64(n).expect("index");
        let (s, c) = (nn * center).sin_cos();
        let mut scale = T::one();
        let mut coefficients = Vec::with_capacity(len);
        for j in 0..len {
            if j > 0 {
                scale = scale * nn / T::from_usize(j).expect("small");
            }
            let phase = match j % 4 {
                0 => s,
                1 => c,
                2 => -s,
                _ => -c,
            };
            coefficients.push(scale * phase);
        }
        Self::new(center, coefficients)
    }
}

/// Root-test radius `1 / max |c_j|^{1/j}` over the tail window.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusEstimate {
    /// Infinite when the window holds no nonzero coefficient.
    pub radius: f64,
    pub flag: Option<String>,
    /// Indices `j` of the nonzero coefficients in `[K/2, K)`.
    pub window: Vec<usize>,
    /// `|c_j|^{1/j}` for each index in the window.
    pub roots: Vec<f64>,
}

/// Root-test estimate from the first `terms` coefficients.
///
/// The window is the nonzero `c_j` with `K/2 <= j < K`; the estimate uses the
/// upper half of that window, where the root test has settled furthest. If
/// `|c_j|^{1/j}` increases through the window by more than
/// [`DIVERGENCE_FACTOR`], the radius is reported as 0 with a flag.
pub fn taylor_radius_estimate<T: Real>(series: &TaylorSeries1D<T>, terms: usize) -> Result<RadiusEstimate> {
    if terms < 8 {
        return Err(Error::InvalidParameter(format!("need at least 8 coefficients, got {terms}")));
    }
    if terms > series.coefficients.len() {
        return Err(Error::TruncationTooShort {
            got: series.coefficients.len(),
            need: terms,
        });
    }
    let window: Vec<usize> = (terms / 2..terms)
        .filter(|&j| j > 0 && !series.coefficients[j].is_zero())
        .collect();
    let roots: Vec<f64> = window
        .iter()
        .map(|&j| (to_f64(series.coefficients[j].abs()).ln() / j as f64).exp())
        .collect();
    if roots.is_empty() {
        return Ok(RadiusEstimate {
            radius: f64::INFINITY,
            flag: Some("no nonzero coefficient in the window".into()),
            window,
            roots,
        });
    }
    let increasing = roots.windows(2).all(|w| w[1] > w[0]);
    if increasing && roots[roots.len() - 1] > DIVERGENCE_FACTOR * roots[0] {
        return Ok(RadiusEstimate {
            radius: 0.0,
            flag: Some("divergent at center".into()),
            window,
            roots,
        });
    }
    let upper = &roots[roots.len() / 2..];
    let peak = upper.iter().copied().fold(0.0f64, f64::max);
    Ok(RadiusEstimate {
        radius: peak.recip(),
        flag: None,
        window,
        roots,
    })
}

/// Per-coordinate radii of the Runge family and their infimum.
#[derive(Debug, Clone, Serialize)]
pub struct ProductRadiusReport {
    pub claim: String,
    pub n_max: u64,
    pub terms: usize,
    pub radii: Vec<f64>,
    pub infimum: f64,
    pub bound: f64,
    pub note: String,
    pub verdict: Verdict,
}

impl Certified for ProductRadiusReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Radii of `t ↦ 1/(1+(nt)^2)` for `n <= n_max`; passes when the infimum is
/// at most `1.1 / n_max`, so no common radius serves every coordinate.
pub fn product_radius_demo<T: Real>(n_max: u64, terms: usize) -> Result<ProductRadiusReport> {
    if n_max < 2 {
        return Err(Error::InvalidParameter(format!("n_max must be >= 2, got {n_max}")));
    }
    let radii = (1..=n_max)
        .map(|n| Ok(taylor_radius_estimate(&TaylorSeries1D::<T>::runge(n, terms)?, terms)?.radius))
        .collect::<Result<Vec<f64>>>()?;
    let infimum = radii.iter().copied().fold(f64::INFINITY, f64::min);
    let bound = RADIUS_SLACK / n_max as f64;
    Ok(ProductRadiusReport {
        claim: "the coordinatewise Runge map has no common radius of convergence".into(),
        n_max,
        terms,
        radii,
        infimum,
        bound,
        note: "radii are per coordinate; no single radius is assigned to the product map".into(),
        verdict: Verdict::from_bool(infimum <= bound),
    })
}

/// `j`-th derivative of `t ↦ (sin nt)_n` truncated at `N`: coordinate `n`
/// is `n^j (−1)^{⌊j/2⌋}` times `sin(nt)` for even `j`, `cos(nt)` for odd `j`.
pub fn sin_family_derivative<T: Real>(j: u32, t: T, n_len: usize) -> Result<TruncatedVector<T>> {
    if n_len == 0 {
        return Err(Error::TruncationTooShort { got: 0, need: 1 });
    }
    let sign = if (j / 2).is_multiple_of(2) { T::one() } else { -T::one() };
    let coords = (1..=n_len as u64)
        .map(|n| {
            let nn = T::from_u64(n).expect("index");
            let (s, c) = (nn * t).sin_cos();
            let trig = if j.is_multiple_of(2) { s } else { c };
            let v = sign * nn.powi(j as i32) * trig;
            if v.is_finite() {
                Ok(Complex::new(v, T::zero()))
            } else {
                Err(Error::Overflow {
                    index: n,
                    log_magnitude: j as f64 * (n as f64).ln(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedVector::new(coords))
}

/// `ln(x^{K+1} / (K+1)!)`, the log of the Lagrange bound on the sine
/// remainder after the degree-`K` Taylor polynomial.
pub fn ln_sine_remainder_bound(x: f64, terms: usize) -> f64 {
    if x == 0.0 {
        return f64::NEG_INFINITY;
    }
    let k1 = terms + 1;
    let ln_fact: f64 = (2..=k1).map(|i| (i as f64).ln()).sum();
    k1 as f64 * x.abs().ln() - ln_fact
}

/// Smallest degree `K >= 2x` with `x^{K+1}/(K+1)! <= tol`.
pub fn remainder_oracle_terms(x: f64, tol: f64) -> Result<usize> {
    if !(tol > 0.0) || !x.is_finite() {
        return Err(Error::InvalidParameter("need tol > 0 and finite x".into()));
    }
    let ln_tol = tol.ln();
    let mut k = (2.0 * x.abs()).ceil() as usize;
    while ln_sine_remainder_bound(x, k) > ln_tol {
        k += 1;
    }
    Ok(k)
}

/// Exact even and odd parts `Σ (−1)^i x^{2i}/(2i)!` and
/// `Σ (−1)^i x^{2i+1}/(2i+1)!` through degree `terms`.
fn sine_partial_parts(x: &BigRational, terms: usize) -> (BigRational, BigRational) {
    let mut even = BigRational::zero();
    let mut odd = BigRational::zero();
    let mut term = BigRational::from_integer(BigInt::from(1));
    for j in 0..=terms {
        if j > 0 {
            term = term * x / BigRational::from_integer(BigInt::from(j));
        }
        let signed = if (j / 2) % 2 == 0 { term.clone() } else { -term.clone() };
        if j % 2 == 0 {
            even += signed;
        } else {
            odd += signed;
        }
    }
    (even, odd)
}

/// One coordinate of a Taylor partial-sum comparison.
#[derive(Debug, Clone, Serialize)]
pub struct TaylorCoordinate {
    pub n: u64,
    pub terms: usize,
    pub partial_sum: f64,
    pub exact: f64,
    pub abs_error: f64,
    pub remainder_bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TaylorCheckReport {
    pub claim: String,
    pub t0: f64,
    pub t: f64,
    pub tolerance: f64,
    /// `Some(K)` when the caller fixed the degree, `None` for the oracle.
    pub fixed_terms: Option<usize>,
    pub coordinates: Vec<TaylorCoordinate>,
    pub verdict: Verdict,
}

impl Certified for TaylorCheckReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Compares the degree-`K` Taylor polynomial of `sin(n·)` at `t0`,
/// evaluated at `t`, with `sin(nt)` for every `n` in `coords`.
///
/// The polynomial is summed in exact rational arithmetic: with
/// `x = n(t − t0)` it equals `sin(n t0)·E(x) + cos(n t0)·O(x)` where `E` and
/// `O` are the even and odd partial sums of the cosine and sine series.
/// Summing in floating point instead loses about `e^x·ε` to cancellation.
/// When `terms` is `None`, `K` comes from [`remainder_oracle_terms`].
pub fn taylor_partial_sum_check<T: Real>(
    t0: T,
    t: T,
    coords: &[u64],
    terms: Option<usize>,
    tol: T,
) -> Result<TaylorCheckReport> {
    if coords.is_empty() {
        return Err(Error::InvalidParameter("no coordinates".into()));
    }
    let tol64 = to_f64(tol);
    let (t0_64, t_64) = (to_f64(t0), to_f64(t));
    let rat = |v: f64| BigRational::from_float(v).ok_or_else(|| Error::InvalidParameter(format!("{v} is not finite")));
    let delta = rat(t_64)? - rat(t0_64)?;
    let delta_abs = (t_64 - t0_64).abs();
    let mut out = Vec::with_capacity(coords.len());
    for &n in coords {
        if n == 0 {
            return Err(Error::IndexOutOfRange(0));
        }
        let x = n as f64 * delta_abs;
        let k = match terms {
            Some(k) => {
                if 2.0 * x > k as f64 {
                    return Err(Error::Precondition {
                        index: n as usize,
                        reason: format!("n|t - t0| = {x} exceeds K/2 = {}; remainder not dominated", k as f64 / 2.0),
                    });
                }
                k
            }
            None => remainder_oracle_terms(x, tol64)?,
        };
        let xr = &delta * BigRational::from_integer(BigInt::from(n));
        let (even, odd) = sine_partial_parts(&xr, k);
        let nn = T::from_u64(n).expect("index");
        let (s0, c0) = (nn * t0).sin_cos();
        let e = T::from_f64(even.to_f64().unwrap_or(f64::NAN)).expect("f64 converts");
        let o = T::from_f64(odd.to_f64().unwrap_or(f64::NAN)).expect("f64 converts");
        let partial = s0 * e + c0 * o;
        let exact = (nn * t).sin();
        let err = (partial - exact).abs();
        out.push(TaylorCoordinate {
            n,
            terms: k,
            partial_sum: to_f64(partial),
            exact: to_f64(exact),
            abs_error: to_f64(err),
            remainder_bound: ln_sine_remainder_bound(x, k).exp(),
            pass: err <= tol,
        });
    }
    let ok = out.iter().all(|c| c.pass);
    Ok(TaylorCheckReport {
        claim: "the Taylor series of (sin nt)_n at t0 converges to f(t) in every coordinate".into(),
        t0: t0_64,
        t: t_64,
        tolerance: tol64,
        fixed_terms: terms,
        coordinates: out,
        verdict: Verdict::from_bool(ok),
    })
}

/// Outcome of a growth probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthClass {
    /// Least `m` at which `|x_n| n^{-m}` looks bounded.
    Exponent(u32),
    SuperPolynomial,
    Inconclusive,
}

impl Serialize for GrowthClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GrowthClass::Exponent(m) => s.serialize_u32(*m),
            GrowthClass::SuperPolynomial => s.serialize_str("super-polynomial"),
            GrowthClass::Inconclusive => s.serialize_str("inconclusive"),
        }
    }
}

/// Diagnostics for one trial exponent.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentTrial {
    pub m: u32,
    /// `sup_{n<=max} − sup_{n<=max/2}` of `log|x_n| − m log n`.
    pub sup_increase: f64,
    /// `log` growth across the top octave minus `m log 2`.
    pub top_octave_excess: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthProfile {
    pub claim: String,
    pub indices: Vec<u64>,
    pub log_magnitudes: Vec<f64>,
    pub exponent_or_flag: GrowthClass,
    /// Least-squares slope of `log|x_n|` against `log n`.
    pub fitted_exponent: Option<f64>,
    /// `(sup log|x| on octave i − sup on octave i+1) / log 2`, top first.
    pub octave_slopes: Vec<f64>,
    pub trials: Vec<ExponentTrial>,
    pub thresholds: BTreeMap<String, f64>,
    pub verdict: Verdict,
}

impl Certified for GrowthProfile {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

fn sup_over<I: Iterator<Item = f64>>(it: I) -> f64 {
    it.fold(f64::NEG_INFINITY, f64::max)
}

fn ls_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs.iter().zip(ys).filter(|(_, y)| y.is_finite()).map(|(&x, &y)| (x, y)).collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Probes `|x_n| <= C n^m` over `n ∈ [lo, hi]` in log space.
///
/// Exponent `m` passes when both hold:
/// the sup of `log|x_n| − m log n` rises by at most [`SUP_STABILITY`] when
/// the range is doubled from `hi/2` to `hi`; and the sup of `log|x_n|` over
/// the top octave `(hi/2, hi]` exceeds that of `(hi/4, hi/2]` by at most
/// `m log 2 + SUP_STABILITY`. The second test catches sequences whose early
/// terms dominate the first sup long after they have started to grow.
/// When no `m <= m_max` passes, the sequence is flagged super-polynomial if
/// the octave slope is still accelerating at the top of the range (or only
/// one slope is available), and inconclusive otherwise.
pub fn growth_exponent_probe<T: Real>(seq: &FormalSequence<T>, m_max: u32, n_range: (u64, u64)) -> Result<GrowthProfile> {
    let (lo, hi) = n_range;
    if lo == 0 {
        return Err(Error::IndexOutOfRange(0));
    }
    if hi < 4 * lo {
        return Err(Error::InvalidParameter(format!(
            "range [{lo}, {hi}] covers fewer than two octaves (need max >= 4 min)"
        )));
    }
    let indices: Vec<u64> = (lo..=hi).collect();
    let logs = indices
        .iter()
        .map(|&n| Ok(to_f64(seq.eval_log(n)?.ln_abs)))
        .collect::<Result<Vec<f64>>>()?;
    let ln_n: Vec<f64> = indices.iter().map(|&n| (n as f64).ln()).collect();

    // octave i covers (hi/2^{i+1}, hi/2^i], kept while it lies inside [lo, hi]
    let mut octave_sups = Vec::new();
    let mut upper = hi;
    loop {
        let lower = upper / 2;
        if lower + 1 < lo || lower == 0 {
            break;
        }
        octave_sups.push(sup_over(
            indices.iter().zip(&logs).filter(|(&n, _)| n > lower && n <= upper).map(|(_, &l)| l),
        ));
        upper = lower;
    }
    let ln2 = std::f64::consts::LN_2;
    let octave_slopes: Vec<f64> = octave_sups.windows(2).map(|w| (w[0] - w[1]) / ln2).collect();
    let top_growth = octave_sups[0] - octave_sups[1];

    let half = hi / 2;
    let trials: Vec<ExponentTrial> = (0..=m_max)
        .map(|m| {
            let adj = |i: usize| logs[i] - m as f64 * ln_n[i];
            let full = sup_over((0..indices.len()).map(adj));
            let lower = sup_over((0..indices.len()).filter(|&i| indices[i] <= half).map(adj));
            let sup_increase = (full - lower).max(0.0);
            let top_octave_excess = top_growth - m as f64 * ln2;
            ExponentTrial {
                m,
                sup_increase,
                top_octave_excess,
                pass: sup_increase <= SUP_STABILITY && top_octave_excess <= SUP_STABILITY,
            }
        })
        .collect();

    let exponent_or_flag = match trials.iter().find(|t| t.pass) {
        Some(t) => GrowthClass::Exponent(t.m),
        None if octave_slopes.len() < 2 || octave_slopes[0] - octave_slopes[1] >= SLOPE_ACCELERATION => {
            GrowthClass::SuperPolynomial
        }
        None => GrowthClass::Inconclusive,
    };
    let thresholds = BTreeMap::from([
        ("sup_stability".to_string(), SUP_STABILITY),
        ("slope_acceleration".to_string(), SLOPE_ACCELERATION),
        ("m_max".to_string(), m_max as f64),
    ]);
    Ok(GrowthProfile {
        claim: format!("growth class of {}", seq.label()),
        fitted_exponent: ls_slope(&ln_n, &logs),
        indices,
        log_magnitudes: logs,
        verdict: if exponent_or_flag == GrowthClass::Inconclusive {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        },
        exponent_or_flag,
        octave_slopes,
        trials,
        thresholds,
    })
}

/// `a* = ln(2)/2`: `sinh(a) >= e^a/4` exactly when `a >= a*`.
pub fn sinh_bound_threshold() -> f64 {
    std::f64::consts::LN_2 / 2.0
}

/// Sign of `sinh(a) − e^a/4 = (e^{2a} − 2) / (4 e^a)`.
pub fn sinh_bound_margin_sign(a: f64) -> f64 {
    // e^{2a} − 2 = expm1(2a) − 1
    (2.0 * a).exp_m1() - 1.0
}

/// Grid cells `[a_i, a_{i+1}]` on which `sinh(a) − e^a/4` changes sign.
pub fn sinh_bound_sign_changes(lo: f64, hi: f64, steps: usize) -> Vec<(f64, f64)> {
    let h = (hi - lo) / steps as f64;
    (0..steps)
        .map(|i| (lo + i as f64 * h, lo + (i + 1) as f64 * h))
        .filter(|&(a, b)| sinh_bound_margin_sign(a).signum() != sinh_bound_margin_sign(b).signum())
        .collect()
}

/// `(sin(i n t))_n` in log form: `|sin(i n t)| = sinh(nt)`, argument π/2.
pub fn imaginary_sine_sequence<T: Real>(t: T) -> FormalSequence<T> {
    FormalSequence::from_log_fn(format!("|sin(i n t)|, t = {}", to_f64(t)), move |n| {
        LogComplex::new(ln_sinh(T::from_u64(n).expect("index") * t), T::FRAC_PI_2())
    })
}

/// `(sin(nt))_n`.
pub fn real_sine_sequence<T: Real>(t: T) -> FormalSequence<T> {
    FormalSequence::from_fn(format!("sin(n t), t = {}", to_f64(t)), move |n| {
        Complex::new((T::from_u64(n).expect("index") * t).sin(), T::zero())
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexificationReport {
    pub claim: String,
    pub t: f64,
    pub n_range: (u64, u64),
    pub threshold: f64,
    /// Smallest probed `n` with `nt >= ln(2)/2`.
    pub first_bound_index: Option<u64>,
    pub bound_checked: usize,
    pub bound_failures: Vec<u64>,
    /// `min (ln sinh(nt) − (nt − ln 4))` over the checked indices.
    pub min_log_margin: Option<f64>,
    /// Largest relative gap between `|sin(i n t)|` from complex arithmetic
    /// and `exp(ln sinh(nt))` where both are representable.
    pub cross_check_error: f64,
    pub growth: GrowthProfile,
    pub real_axis_control: GrowthProfile,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl Certified for ComplexificationReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Evaluates `h(it) = (sin(int))_n` through `|sin(int)| = sinh(nt)`,
/// checks `sinh(nt) >= e^{nt}/4` wherever `nt >= ln(2)/2`, and runs the
/// growth probe on it and on the real-axis control `(sin nt)_n`.
pub fn complexification_failure_demo<T: Real>(t: T, n_range: (u64, u64), m_max: u32) -> Result<ComplexificationReport> {
    if !(t > T::zero()) || !t.is_finite() {
        return Err(Error::InvalidParameter(format!("t must be positive, got {}", to_f64(t))));
    }
    let (lo, hi) = n_range;
    let threshold = sinh_bound_threshold();
    let t64 = to_f64(t);
    let ln4 = lit::<T>(4.0).ln();

    let mut first_bound_index = None;
    let mut bound_checked = 0;
    let mut bound_failures = Vec::new();
    let mut min_log_margin: Option<f64> = None;
    let mut cross_check_error = 0.0f64;
    for n in lo..=hi {
        let a = T::from_u64(n).expect("index") * t;
        let ls = ln_sinh(a);
        if a <= lit(30.0) {
            let direct = Complex::new(T::zero(), a).sin().norm();
            cross_check_error = cross_check_error.max(to_f64((direct - ls.exp()).abs() / direct));
        }
        if to_f64(a) >= threshold {
            first_bound_index.get_or_insert(n);
            bound_checked += 1;
            let margin = to_f64(ls - (a - ln4));
            min_log_margin = Some(min_log_margin.map_or(margin, |m| m.min(margin)));
            // rounding near the threshold, where the margin is exactly 0
            if margin < -4.0 * f64::from(T::epsilon().to_f32().unwrap_or(f32::EPSILON)) {
                bound_failures.push(n);
            }
        }
    }

    let growth = growth_exponent_probe(&imaginary_sine_sequence(t), m_max, n_range)?;
    let real_axis_control = growth_exponent_probe(&real_sine_sequence(t), m_max, n_range)?;

    let bound_verdict = if bound_checked == 0 {
        Verdict::Inconclusive
    } else {
        Verdict::from_bool(bound_failures.is_empty())
    };
    let growth_verdict = match growth.exponent_or_flag {
        GrowthClass::SuperPolynomial => Verdict::Pass,
        GrowthClass::Inconclusive => Verdict::Inconclusive,
        // the exponential regime never entered the probed range
        GrowthClass::Exponent(_) if bound_checked == 0 => Verdict::Inconclusive,
        GrowthClass::Exponent(_) => Verdict::Fail,
    };
    let control_verdict = match real_axis_control.exponent_or_flag {
        GrowthClass::Exponent(0) => Verdict::Pass,
        GrowthClass::Inconclusive => Verdict::Inconclusive,
        _ => Verdict::Fail,
    };
    let cross_tol = 1e3 * to_f64(T::epsilon());
    let checks = vec![
        Check::new(
            "sinh_lower_bound",
            bound_verdict,
            format!("sinh(nt) >= e^(nt)/4 at {bound_checked} indices with nt >= ln(2)/2"),
        ),
        Check::new(
            "imaginary_axis_growth",
            growth_verdict,
            format!("growth class {:?}", growth.exponent_or_flag),
        ),
        Check::new(
            "real_axis_control",
            control_verdict,
            format!("growth class {:?}", real_axis_control.exponent_or_flag),
        ),
        Check::new(
            "log_space_cross_check",
            Verdict::from_bool(cross_check_error <= cross_tol),
            format!("max relative gap {cross_check_error:e}"),
        ),
    ];
    let verdict = Verdict::combine(checks.iter().map(|c| c.verdict));
    Ok(ComplexificationReport {
        claim: "t -> (sin nt)_n does not extend to the imaginary axis inside the polynomial-growth space".into(),
        t: t64,
        n_range,
        threshold,
        first_bound_index,
        bound_checked,
        bound_failures,
        min_log_margin,
        cross_check_error,
        growth,
        real_axis_control,
        checks,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runge_examples() {
        assert_eq!(runge_component(1, 0.0f64), 1.0);
        assert!((runge_component(2, 1.0f64) - 0.2).abs() < 1e-15);
        assert!((runge_component(10, 0.1f64) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn series_coefficients() {
        let s = TaylorSeries1D::<f64>::runge(3, 6).unwrap();
        assert_eq!(s.coefficients, vec![1.0, 0.0, -9.0, 0.0, 81.0, 0.0]);
        let s = TaylorSeries1D::<f64>::sine(1, 0.0, 4).unwrap();
        assert_eq!(s.coefficients, vec![0.0, 1.0, 0.0, -1.0 / 6.0]);
        assert!(TaylorSeries1D::<f32>::runge(50, 40).is_err());
    }

    #[test]
    fn radius_examples() {
        let r1 = taylor_radius_estimate(&TaylorSeries1D::<f64>::runge(1, 40).unwrap(), 40).unwrap();
        assert!((r1.radius - 1.0).abs() <= 0.1);
        let r10 = taylor_radius_estimate(&TaylorSeries1D::<f64>::runge(10, 40).unwrap(), 40).unwrap();
        assert!((r10.radius - 0.1).abs() <= 0.01);
        let rs = taylor_radius_estimate(&TaylorSeries1D::<f64>::sine(1, 0.0, 40).unwrap(), 40).unwrap();
        assert!(rs.radius >= 10.0, "{}", rs.radius);
        assert!(taylor_radius_estimate(&TaylorSeries1D::<f64>::runge(1, 40).unwrap(), 6).is_err());
    }

    #[test]
    fn radius_divergent_flag() {
        // c_j = j!: root test grows like j/e
        let mut c = vec![1.0f64];
        for j in 1..40 {
            c.push(c[j - 1] * j as f64);
        }
        let r = taylor_radius_estimate(&TaylorSeries1D::new(0.0, c).unwrap(), 40).unwrap();
        assert_eq!(r.radius, 0.0);
        assert_eq!(r.flag.as_deref(), Some("divergent at center"));
    }

    #[test]
    fn product_radius_examples() {
        let r10 = product_radius_demo::<f64>(10, 40).unwrap();
        assert_eq!(r10.verdict, Verdict::Pass);
        assert!(r10.infimum <= 0.11);
        let r2 = product_radius_demo::<f64>(2, 40).unwrap();
        assert!((r2.infimum - 0.5).abs() < 1e-12);
        let r20 = product_radius_demo::<f64>(20, 40).unwrap();
        assert!(r20.infimum < r10.infimum);
        assert!(product_radius_demo::<f64>(1, 40).is_err());
    }

    #[test]
    fn sin_derivative_examples() {
        let v = sin_family_derivative(0, 0.0f64, 3).unwrap();
        assert!(v.coords().iter().all(|c| c.norm() == 0.0));
        let v = sin_family_derivative(1, 0.0f64, 4).unwrap();
        assert_eq!(v.coords().iter().map(|c| c.re).collect::<Vec<_>>(), vec![1.0, 2.0, 3.0, 4.0]);
        let v = sin_family_derivative(2, std::f64::consts::FRAC_PI_2, 2).unwrap();
        assert!((v.coords()[0].re + 1.0).abs() < 1e-15);
        assert!(v.coords()[1].re.abs() < 1e-14);
    }

    #[test]
    fn taylor_examples() {
        let r = taylor_partial_sum_check(0.0, 0.5, &[1, 2, 3, 4, 5], Some(30), 1e-12).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let r = taylor_partial_sum_check(1.0, 1.0, &[1, 2, 3], Some(8), 0.0).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        for c in &r.coordinates {
            assert_eq!(c.partial_sum, c.exact);
        }
        let r = taylor_partial_sum_check(0.0, 3.0, &[10], None, 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.coordinates[0].abs_error <= 1e-8);
    }

    #[test]
    fn taylor_degree_eighty_is_short_at_thirty() {
        // x = 30: the degree-80 remainder is about 30^81/81! ≈ 0.08
        let r = taylor_partial_sum_check(0.0, 3.0, &[10], Some(80), 1e-8).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let c = &r.coordinates[0];
        assert!(c.abs_error <= c.remainder_bound);
        assert!(c.abs_error > 1e-3);
    }

    #[test]
    fn taylor_refuses_outside_domination() {
        assert!(matches!(
            taylor_partial_sum_check(0.0, 3.0, &[10], Some(50), 1e-8),
            Err(Error::Precondition { index: 10, .. })
        ));
    }

    #[test]
    fn oracle_terms() {
        assert_eq!(remainder_oracle_terms(0.0, 1e-10).unwrap(), 0);
        let k = remainder_oracle_terms(30.0, 1e-8).unwrap();
        assert!(ln_sine_remainder_bound(30.0, k) <= 1e-8f64.ln());
        assert!(ln_sine_remainder_bound(30.0, k - 1) > 1e-8f64.ln());
    }

    #[test]
    fn growth_examples() {
        let s = FormalSequence::from_fn("sin(0.7n)", |n| Complex::new((0.7 * n as f64).sin(), 0.0));
        assert_eq!(growth_exponent_probe(&s, 5, (1, 300)).unwrap().exponent_or_flag, GrowthClass::Exponent(0));
        let s = FormalSequence::from_fn("n^2", |n| Complex::new((n as f64).powi(2), 0.0));
        let p = growth_exponent_probe(&s, 5, (1, 300)).unwrap();
        assert_eq!(p.exponent_or_flag, GrowthClass::Exponent(2));
        assert!((p.fitted_exponent.unwrap() - 2.0).abs() < 1e-12);
        let p = growth_exponent_probe(&imaginary_sine_sequence(0.5f64), 20, (1, 400)).unwrap();
        assert_eq!(p.exponent_or_flag, GrowthClass::SuperPolynomial);
        assert!(growth_exponent_probe(&s, 5, (10, 39)).is_err());
    }

    #[test]
    fn growth_serializes_flag() {
        assert_eq!(serde_json::to_string(&GrowthClass::Exponent(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&GrowthClass::SuperPolynomial).unwrap(), "\"super-polynomial\"");
    }

    #[test]
    fn threshold_bracketing() {
        let a = sinh_bound_threshold();
        assert!((a - 0.34657359027997264).abs() < 1e-16);
        let cells = sinh_bound_sign_changes(0.01, 2.0, 2_000_000);
        assert_eq!(cells.len(), 1);
        assert!(cells[0].0 <= a && a <= cells[0].1 && cells[0].1 - cells[0].0 <= 1e-6);
    }

    #[test]
    fn complexification_examples() {
        let r = complexification_failure_demo(0.1f64, (1, 300), 20).unwrap();
        assert_eq!(r.first_bound_index, Some(4));
        assert!(r.bound_failures.is_empty());
        assert_eq!(r.growth.exponent_or_flag, GrowthClass::SuperPolynomial);
        assert_eq!(r.real_axis_control.exponent_or_flag, GrowthClass::Exponent(0));
        assert_eq!(r.verdict, Verdict::Pass);

        let r = complexification_failure_demo(1.0f64, (1, 100), 20).unwrap();
        assert_eq!(r.first_bound_index, Some(1));
        assert_eq!(r.verdict, Verdict::Pass);

        let r = complexification_failure_demo(0.001f64, (1, 300), 20).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }
}
