//! The map `g(x) = Σ_k 2^k x_k^{2k}` on `ℓ¹(N, C)` and the product-valued
//! `f(x) = (g(nx))_n`.
//!
//! Vectors are finitely supported, so `g` is a finite sum. Infinite tails
//! enter only through [`TailBound`], a geometric envelope on the omitted
//! terms.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::logspace::LogComplex;
use crate::report::{Certified, Verdict};
use crate::scalar::{lit, overflow_log_threshold, to_f64, to_pair, Real};

/// Radius of the balls on which the partial sums of `g` converge uniformly.
pub const BALL_RADIUS: f64 = 0.25;

/// Finitely supported element of `ℓ¹`; unlisted coordinates are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SummableVector<T> {
    support: BTreeMap<u64, Complex<T>>,
    norm1: T,
}

impl<T: Real> Default for SummableVector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> SummableVector<T> {
    pub fn zero() -> Self {
        Self {
            support: BTreeMap::new(),
            norm1: T::zero(),
        }
    }

    /// Builds a vector from `(index, value)` pairs. Zero values are dropped;
    /// repeated indices are rejected.
    pub fn from_pairs<I: IntoIterator<Item = (u64, Complex<T>)>>(pairs: I) -> Result<Self> {
        let mut support = BTreeMap::new();
        for (k, v) in pairs {
            if k == 0 {
                return Err(Error::IndexOutOfRange(0));
            }
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::InvalidParameter(format!("coordinate {k} is not finite")));
            }
            if support.contains_key(&k) {
                return Err(Error::InvalidParameter(format!("index {k} given twice")));
            }
            if !v.is_zero() {
                support.insert(k, v);
            }
        }
        Ok(Self::from_map(support))
    }

    /// The unit vector `e_k`.
    pub fn basis(k: u64) -> Result<Self> {
        Self::from_pairs([(k, Complex::new(T::one(), T::zero()))])
    }

    fn from_map(support: BTreeMap<u64, Complex<T>>) -> Self {
        let norm1 = support.values().fold(T::zero(), |acc, v| acc + v.norm());
        Self { support, norm1 }
    }

    pub fn get(&self, k: u64) -> Complex<T> {
        self.support.get(&k).copied().unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    /// Returns a copy with coordinate `k` set to `v`.
    pub fn with(&self, k: u64, v: Complex<T>) -> Result<Self> {
        if k == 0 {
            return Err(Error::IndexOutOfRange(0));
        }
        let mut support = self.support.clone();
        if v.is_zero() {
            support.remove(&k);
        } else {
            support.insert(k, v);
        }
        Ok(Self::from_map(support))
    }

    pub fn norm1(&self) -> T {
        self.norm1
    }

    /// Nonzero coordinates in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Complex<T>)> + '_ {
        self.support.iter().map(|(&k, &v)| (k, v))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn max_index(&self) -> Option<u64> {
        self.support.keys().next_back().copied()
    }

    pub fn scale(&self, lambda: Complex<T>) -> Self {
        Self::from_map(
            self.support
                .iter()
                .map(|(&k, &v)| (k, v * lambda))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut support = self.support.clone();
        for (&k, &v) in &other.support {
            let d = self.get(k) - v;
            if d.is_zero() {
                support.remove(&k);
            } else {
                support.insert(k, d);
            }
        }
        Self::from_map(support)
    }

    pub fn distance(&self, other: &Self) -> T {
        self.sub(other).norm1()
    }

    /// `(index, (re, im))` pairs for reports.
    pub fn to_pairs(&self) -> Vec<(u64, (f64, f64))> {
        self.iter().map(|(k, v)| (k, to_pair(v))).collect()
    }
}

/// Envelope `Σ_{k>=m} ratio^k = ratio^m / (1 − ratio)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailBound {
    pub m: u64,
    pub ratio: f64,
    pub bound: f64,
}

impl TailBound {
    pub fn new(m: u64, ratio: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&ratio) {
            return Err(Error::InvalidParameter(format!("tail ratio {ratio} not in [0, 1)")));
        }
        let bound = if ratio == 0.0 {
            0.0
        } else {
            (m as f64 * ratio.ln()).exp() / (1.0 - ratio)
        };
        Ok(Self { m, ratio, bound })
    }
}

/// `|2^k x_k^{2k}| = (2|x_k|²)^k` and the term itself in log form.
fn log_term<T: Real>(k: u64, x: Complex<T>) -> LogComplex<T> {
    let kk = T::from_u64(k).expect("index fits");
    let lx = LogComplex::from_complex(x);
    let two = lit::<T>(2.0);
    LogComplex::new(kk * T::LN_2() + two * kk * lx.ln_abs, two * kk * lx.arg)
}

fn sum_terms<T: Real>(terms: impl Iterator<Item = (u64, Complex<T>)>) -> Result<Complex<T>> {
    let terms: Vec<(u64, Complex<T>)> = terms.collect();
    let logs: Vec<(u64, LogComplex<T>)> = terms.iter().map(|&(k, x)| (k, log_term(k, x))).collect();
    let (peak_index, peak) = logs
        .iter()
        .map(|&(k, l)| (k, l.ln_abs))
        .fold((0, T::neg_infinity()), |a, b| if b.1 > a.1 { b } else { a });
    if peak < overflow_log_threshold::<T>() {
        let two = Complex::new(lit::<T>(2.0), T::zero());
        return Ok(terms.iter().fold(Complex::new(T::zero(), T::zero()), |acc, &(k, x)| {
            let k32 = u32::try_from(k).expect("term below the overflow threshold has a small index");
            acc + two.powu(k32) * x.powu(2 * k32)
        }));
    }
    // some term is out of range: sum relative to the largest one
    let shifted = logs.iter().fold(Complex::new(T::zero(), T::zero()), |acc, &(_, l)| {
        acc + l.rescale(peak).to_complex().unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    });
    let total = LogComplex::from_complex(shifted).rescale(-peak);
    let value = Complex::from_polar(total.ln_abs.exp(), total.arg);
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow {
            index: peak_index,
            log_magnitude: to_f64(total.ln_abs),
        })
    }
}

/// `g(x)` for finitely supported `x`; exact up to rounding. Terms whose
/// magnitude would overflow are combined in log space first.
pub fn g_eval<T: Real>(x: &SummableVector<T>) -> Result<Complex<T>> {
    sum_terms(x.iter())
}

/// `Σ_{k<m} 2^k x_k^{2k}` together with a [`TailBound`] on the omitted
/// terms `k >= m`, whose ratio is `max_{k>=m} 2|x_k|²`.
pub fn g_eval_tail<T: Real>(x: &SummableVector<T>, m: u64) -> Result<(Complex<T>, TailBound)> {
    if m == 0 {
        return Err(Error::IndexOutOfRange(0));
    }
    let mut ratio = 0.0f64;
    for (k, v) in x.iter().filter(|&(k, _)| k >= m) {
        let r = 2.0 * to_f64(v.norm_sqr());
        if r >= 1.0 {
            return Err(Error::Precondition {
                index: k as usize,
                reason: format!("2|x_k|^2 = {r} >= 1: no geometric tail envelope"),
            });
        }
        ratio = ratio.max(r);
    }
    let partial = sum_terms(x.iter().filter(|&(k, _)| k < m))?;
    Ok((partial, TailBound::new(m, ratio)?))
}

/// `sup_{y ∈ B_{1/4}(x)} Σ_{k>=m} |2^k y_k^{2k}| <= Σ_{k>=m} 2^{-k} = 2^{1-m}`,
/// valid when `|x_k| < 1/4` for every `k >= m`: then `|y_k| < 1/2`.
pub fn uniform_ball_bound<T: Real>(x: &SummableVector<T>, radius: T, m: u64) -> Result<TailBound> {
    if m == 0 {
        return Err(Error::IndexOutOfRange(0));
    }
    if !(radius > T::zero() && radius <= lit(BALL_RADIUS)) {
        return Err(Error::InvalidParameter(format!(
            "ball radius must lie in (0, 1/4], got {}",
            to_f64(radius)
        )));
    }
    if let Some((k, v)) = x.iter().find(|&(k, v)| k >= m && v.norm() >= lit(BALL_RADIUS)) {
        return Err(Error::Precondition {
            index: k as usize,
            reason: format!("|x_{k}| = {} is not below 1/4", to_f64(v.norm())),
        });
    }
    TailBound::new(m, 0.5)
}

/// The estimate `|g(y)| >= 2^m − |g(x)| − 2^m |x_m|^{2m}` and whether it
/// reaches `N`.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub lower_bound: f64,
    pub target: f64,
    pub holds: bool,
}

/// A point `y` within `ℓ¹` distance 2 of `x` where `|g(y)| >= N`.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub claim: String,
    pub x: Vec<(u64, (f64, f64))>,
    #[serde(rename = "N")]
    pub n_target: f64,
    pub m: u64,
    pub y: Vec<(u64, (f64, f64))>,
    pub g_of_y: (f64, f64),
    pub norm1_distance: f64,
    pub inequality_check: InequalityCheck,
    pub verdict: Verdict,
}

impl Certified for WitnessReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Witness together with the vector it produced, for callers that keep
/// computing with `y`.
#[derive(Debug, Clone)]
pub struct Witness<T> {
    pub m: u64,
    pub y: SummableVector<T>,
    pub g_of_y: Complex<T>,
    pub report: WitnessReport,
}

/// Smallest `m` with `|2 x_m| < 1` and `2^m >= N + |g(x)| + 1`; `y` is `x`
/// with `y_m := 1`.
pub fn unboundedness_witness<T: Real>(x: &SummableVector<T>, n_target: T) -> Result<Witness<T>> {
    if !(n_target >= T::zero()) || !n_target.is_finite() {
        return Err(Error::InvalidParameter(format!("N must be finite and >= 0, got {}", to_f64(n_target))));
    }
    let gx = g_eval(x)?.norm();
    let need = n_target + gx + T::one();
    let two = lit::<T>(2.0);
    let half = lit::<T>(0.5);
    let mut m: u64 = 1;
    let mut pow = two;
    while pow < need || x.get(m).norm() >= half {
        m += 1;
        pow = pow * two;
        if !pow.is_finite() {
            return Err(Error::Overflow {
                index: m,
                log_magnitude: m as f64 * std::f64::consts::LN_2,
            });
        }
    }
    let xm = x.get(m);
    let one = Complex::new(T::one(), T::zero());
    let y = x.with(m, one)?;
    let g_of_y = g_eval(&y)?;
    let m32 = i32::try_from(m).expect("m bounded by the float exponent range");
    let lower = pow - gx - pow * xm.norm().powi(2 * m32);
    let inequality_check = InequalityCheck {
        lower_bound: to_f64(lower),
        target: to_f64(n_target),
        holds: lower >= n_target,
    };
    let norm1_distance = y.distance(x);
    let ok = norm1_distance <= two && g_of_y.norm() >= n_target && inequality_check.holds;
    let report = WitnessReport {
        claim: "g is unbounded on the l1 ball of radius 2 around x".into(),
        x: x.to_pairs(),
        n_target: to_f64(n_target),
        m,
        y: y.to_pairs(),
        g_of_y: to_pair(g_of_y),
        norm1_distance: to_f64(norm1_distance),
        inequality_check,
        verdict: Verdict::from_bool(ok),
    };
    Ok(Witness { m, y, g_of_y, report })
}

/// The `n`-th coordinate of `f(x) = (g(nx))_n`.
pub fn f_component_eval<T: Real>(x: &SummableVector<T>, n: u64) -> Result<Complex<T>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange(0));
    }
    g_eval(&x.scale(Complex::new(T::from_u64(n).expect("index"), T::zero())))
}

/// A point of `B_radius(x)` where the `n`-th coordinate of `f` is at least `N`.
#[derive(Debug, Clone, Serialize)]
pub struct LocalUnboundednessReport {
    pub claim: String,
    pub x: Vec<(u64, (f64, f64))>,
    pub radius: f64,
    #[serde(rename = "N")]
    pub n_target: f64,
    pub n: u64,
    pub y: Vec<(u64, (f64, f64))>,
    pub distance: f64,
    /// `g(y')` from the witness at `nx`.
    pub value: (f64, f64),
    /// `f_n(y) = g(n·y)` recomputed from the returned `y`.
    pub component_value: (f64, f64),
    pub witness: WitnessReport,
    pub verdict: Verdict,
}

impl Certified for LocalUnboundednessReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// With `n = ceil(2 / radius)`, a witness `y'` near `nx` scales back to
/// `y = y'/n` with `‖y − x‖₁ <= 2/n <= radius` and `f_n(y) = g(y')`.
pub fn local_unboundedness_demo<T: Real>(
    x: &SummableVector<T>,
    radius: T,
    n_target: T,
) -> Result<LocalUnboundednessReport> {
    if !(radius > T::zero()) || !radius.is_finite() {
        return Err(Error::InvalidParameter(format!("radius must be positive, got {}", to_f64(radius))));
    }
    let n = (lit::<T>(2.0) / radius)
        .ceil()
        .max(T::one())
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("radius too small".into()))?;
    let nn = T::from_u64(n).expect("index");
    let witness = unboundedness_witness(&x.scale(Complex::new(nn, T::zero())), n_target)?;
    let y = witness.y.scale(Complex::new(nn.recip(), T::zero()));
    let distance = y.distance(x);
    let component = f_component_eval(&y, n)?;
    // y'/n rescaled by n need not reproduce y' bit for bit, so the
    // recomputed component is held to N with a small relative allowance
    let slack = lit::<T>(1e-12) * n_target;
    let ok = distance <= radius * (T::one() + lit(1e-12))
        && witness.g_of_y.norm() >= n_target
        && component.norm() >= n_target - slack
        && witness.report.verdict.is_pass();
    Ok(LocalUnboundednessReport {
        claim: "f = (g(nx))_n is unbounded on every ball around x".into(),
        x: x.to_pairs(),
        radius: to_f64(radius),
        n_target: to_f64(n_target),
        n,
        y: y.to_pairs(),
        distance: to_f64(distance),
        value: to_pair(witness.g_of_y),
        component_value: to_pair(component),
        witness: witness.report,
        verdict: Verdict::from_bool(ok),
    })
}
