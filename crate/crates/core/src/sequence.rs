//! Elements of the sequence space `C^N`: the generator family
//! `h_{k,z}(n) = n^k z^n`, computable sequences, finite truncations and the
//! shift operator.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::logspace::LogComplex;
use crate::scalar::{overflow_log_threshold, to_pair, Real};

/// The sequence `n ↦ n^k z^n`, named by the pair `(k, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec<T> {
    k: i32,
    z: Complex<T>,
}

impl<T: Real> GeneratorSpec<T> {
    pub fn new(k: i32, z: Complex<T>) -> Result<Self> {
        if z.re.is_zero() && z.im.is_zero() {
            return Err(Error::ZeroBase);
        }
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidParameter("generator base must be finite".into()));
        }
        Ok(Self { k, z })
    }

    pub fn real(k: i32, z: T) -> Result<Self> {
        Self::new(k, Complex::new(z, T::zero()))
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn z(&self) -> Complex<T> {
        self.z
    }

    /// `(k, re z, im z)` as plain floats, the form used in certificates.
    pub fn triple(&self) -> (i32, f64, f64) {
        let (re, im) = to_pair(self.z);
        (self.k, re, im)
    }

    pub fn eval(&self, n: u64) -> Result<Complex<T>> {
        eval_h(self, n)
    }

    pub fn eval_log(&self, n: u64) -> Result<LogComplex<T>> {
        eval_h_log(self, n)
    }
}

impl<T: Real> fmt::Display for GeneratorSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h[{}, {}{:+}i]", self.k, self.z.re, self.z.im)
    }
}

fn check_index(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::IndexOutOfRange(n))
    } else {
        Ok(())
    }
}

/// `log|n^k z^n|` and `arg(n^k z^n)`.
pub fn eval_h_log<T: Real>(spec: &GeneratorSpec<T>, n: u64) -> Result<LogComplex<T>> {
    check_index(n)?;
    let nf = T::from_u64(n).expect("index representable");
    let k = T::from_i32(spec.k).expect("exponent representable");
    let ln_abs = k * nf.ln() + nf * spec.z.re.hypot(spec.z.im).ln();
    let arg = nf * spec.z.im.atan2(spec.z.re);
    Ok(LogComplex::new(ln_abs, arg))
}

/// `n^k z^n`. Fails with [`Error::Overflow`] when the magnitude exceeds the
/// linear range; callers then switch to [`eval_h_log`].
pub fn eval_h<T: Real>(spec: &GeneratorSpec<T>, n: u64) -> Result<Complex<T>> {
    let log = eval_h_log(spec, n)?;
    if log.ln_abs > overflow_log_threshold::<T>() {
        return Err(Error::Overflow {
            index: n,
            log_magnitude: log.ln_abs.to_f64().unwrap_or(f64::INFINITY),
        });
    }
    let nf = T::from_u64(n).expect("index representable");
    let power = match u32::try_from(n) {
        Ok(e) => spec.z.powu(e),
        Err(_) => Complex::from_polar(log.ln_abs.exp(), log.arg),
    };
    Ok(power * nf.powi(spec.k))
}

type EvalFn<T> = dyn Fn(u64) -> Result<Complex<T>> + Send + Sync;
type LogFn<T> = dyn Fn(u64) -> Result<LogComplex<T>> + Send + Sync;

/// A computable element of `C^N`, evaluated on demand at indices `n >= 1`.
///
/// Every sequence carries both a linear and a log-magnitude evaluator; the
/// latter stays finite where `|x_n|` leaves the floating range.
#[derive(Clone)]
pub struct FormalSequence<T> {
    label: String,
    eval: Arc<EvalFn<T>>,
    log_eval: Arc<LogFn<T>>,
}

impl<T: Real> fmt::Debug for FormalSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FormalSequence").field("label", &self.label).finish()
    }
}

impl<T: Real> FormalSequence<T> {
    /// Sequence given by a linear-space closure. The log path is derived.
    pub fn from_fn<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(u64) -> Complex<T> + Send + Sync + 'static,
    {
        let f = Arc::new(f);
        let g = Arc::clone(&f);
        Self {
            label: label.into(),
            eval: Arc::new(move |n| Ok(f(n))),
            log_eval: Arc::new(move |n| Ok(LogComplex::from_complex(g(n)))),
        }
    }

    /// Sequence given in log-magnitude form; the linear path reports
    /// overflow instead of returning infinities.
    pub fn from_log_fn<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(u64) -> LogComplex<T> + Send + Sync + 'static,
    {
        let f = Arc::new(f);
        let g = Arc::clone(&f);
        Self {
            label: label.into(),
            eval: Arc::new(move |n| {
                let l = g(n);
                l.to_complex().ok_or(Error::Overflow {
                    index: n,
                    log_magnitude: l.ln_abs.to_f64().unwrap_or(f64::INFINITY),
                })
            }),
            log_eval: Arc::new(move |n| Ok(f(n))),
        }
    }

    pub fn generator(spec: GeneratorSpec<T>) -> Self {
        Self {
            label: spec.to_string(),
            eval: Arc::new(move |n| eval_h(&spec, n)),
            log_eval: Arc::new(move |n| eval_h_log(&spec, n)),
        }
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::from_fn(format!("const {}{:+}i", c.re, c.im), move |_| c)
    }

    pub fn zero() -> Self {
        Self::from_fn("zero", |_| Complex::new(T::zero(), T::zero()))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn eval(&self, n: u64) -> Result<Complex<T>> {
        check_index(n)?;
        (self.eval)(n)
    }

    pub fn eval_log(&self, n: u64) -> Result<LogComplex<T>> {
        check_index(n)?;
        (self.log_eval)(n)
    }

    /// Pointwise product `(f·g)(n) = f(n) g(n)`.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (Arc::clone(&self.eval), Arc::clone(&other.eval));
        let (la, lb) = (Arc::clone(&self.log_eval), Arc::clone(&other.log_eval));
        Self {
            label: format!("({})·({})", self.label, other.label),
            eval: Arc::new(move |n| Ok(a(n)? * b(n)?)),
            log_eval: Arc::new(move |n| Ok(la(n)?.mul(lb(n)?))),
        }
    }

    /// Pointwise scalar multiple.
    pub fn scale(&self, c: Complex<T>) -> Self {
        let a = Arc::clone(&self.eval);
        let la = Arc::clone(&self.log_eval);
        let lc = LogComplex::from_complex(c);
        Self {
            label: format!("{}{:+}i·({})", c.re, c.im, self.label),
            eval: Arc::new(move |n| Ok(a(n)? * c)),
            log_eval: Arc::new(move |n| Ok(la(n)?.mul(lc))),
        }
    }
}

/// The shift operator `S(f)(n) = f(n + 1)`.
pub fn shift_apply<T: Real>(seq: &FormalSequence<T>) -> FormalSequence<T> {
    let a = Arc::clone(&seq.eval);
    let la = Arc::clone(&seq.log_eval);
    FormalSequence {
        label: format!("S({})", seq.label),
        eval: Arc::new(move |n| a(n + 1)),
        log_eval: Arc::new(move |n| la(n + 1)),
    }
}

/// The first `N` coordinates of a sequence; `coords[n - 1]` holds index `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedVector<T> {
    coords: Vec<Complex<T>>,
}

impl<T: Real> TruncatedVector<T> {
    pub fn new(coords: Vec<Complex<T>>) -> Self {
        Self { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Complex<T>] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Complex<T>> {
        self.coords
    }

    /// Coordinate at 1-based index `n`.
    pub fn get(&self, n: usize) -> Option<Complex<T>> {
        n.checked_sub(1).and_then(|i| self.coords.get(i)).copied()
    }

    pub fn sup_norm(&self) -> T {
        self.coords.iter().map(|c| c.norm()).fold(T::zero(), T::max)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "truncation lengths differ");
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self::new(self.coords.iter().map(|a| a * c).collect())
    }
}

/// Truncation of `seq` to its first `n_len` coordinates.
pub fn truncate<T: Real>(seq: &FormalSequence<T>, n_len: usize) -> Result<TruncatedVector<T>> {
    if n_len == 0 {
        return Err(Error::InvalidParameter("truncation length must be >= 1".into()));
    }
    (1..=n_len as u64)
        .map(|n| seq.eval(n))
        .collect::<Result<Vec<_>>>()
        .map(TruncatedVector::new)
}

/// Truncation in log-magnitude form; never overflows.
pub fn truncate_log<T: Real>(seq: &FormalSequence<T>, n_len: usize) -> Result<Vec<LogComplex<T>>> {
    if n_len == 0 {
        return Err(Error::InvalidParameter("truncation length must be >= 1".into()));
    }
    (1..=n_len as u64).map(|n| seq.eval_log(n)).collect()
}

/// `h_{0,1}`-style shorthand used throughout the tests and demos.
pub fn h<T: Real>(k: i32, z: Complex<T>) -> Result<FormalSequence<T>> {
    GeneratorSpec::new(k, z).map(FormalSequence::generator)
}

#[cfg(test)]
pub(crate) fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(crate::scalar::lit(re), crate::scalar::lit(im))
}
