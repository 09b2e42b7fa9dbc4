//! Coordinatewise probes of complex differentiability for curves
//! `z ↦ (value(z, n))_n` into `C^N`, centred on `f(z) = (e^{nz})_n`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::logspace::LogComplex;
use crate::quadrature::{circle_integral, GaussLegendre};
use crate::report::{Certified, Check, Verdict};
use crate::scalar::{lit, to_f64, to_pair, Real};
use crate::sequence::{truncate, truncate_log, FormalSequence, GeneratorSpec, TruncatedVector};
use crate::span::{default_schedule, span_membership_of, Membership, MembershipCertificate, SpanningFamily};

pub const DEFAULT_QUAD_ORDER: usize = 32;
pub const DEFAULT_TRAPEZOID_NODES: usize = 256;
pub const DEFAULT_COORDS: usize = 10;
/// Quadrature probes refuse more coordinates than this.
pub const MAX_COORDS: usize = 20;
/// Below this step the central quotient is dominated by cancellation.
pub const MIN_STEP: f64 = 1e-12;
/// Accepted window for the error ratio when the step is halved.
pub const RATE_WINDOW: (f64, f64) = (3.5, 4.5);

/// Open subset of `C` on which a curve family is defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain<T> {
    Rectangle { re: (T, T), im: (T, T) },
    Disk { center: Complex<T>, radius: T },
    Plane,
}

impl<T: Real> Domain<T> {
    /// The default `U = (−1, 1) × (−1, 1)i`.
    pub fn default_u() -> Self {
        Domain::Rectangle {
            re: (-T::one(), T::one()),
            im: (-T::one(), T::one()),
        }
    }

    pub fn contains(&self, z: Complex<T>) -> bool {
        match *self {
            Domain::Rectangle { re, im } => re.0 < z.re && z.re < re.1 && im.0 < z.im && z.im < im.1,
            Domain::Disk { center, radius } => (z - center).norm() < radius,
            Domain::Plane => z.re.is_finite() && z.im.is_finite(),
        }
    }

    /// Whether the closed disk `z0 + r·D` lies inside the domain.
    pub fn contains_closed_disk(&self, z0: Complex<T>, r: T) -> bool {
        match *self {
            Domain::Rectangle { re, im } => {
                re.0 < z0.re - r && z0.re + r < re.1 && im.0 < z0.im - r && z0.im + r < im.1
            }
            Domain::Disk { center, radius } => (z0 - center).norm() + r < radius,
            Domain::Plane => true,
        }
    }

    fn require(&self, z: Complex<T>) -> Result<()> {
        if self.contains(z) {
            Ok(())
        } else {
            let (re, im) = to_pair(z);
            Err(Error::OutsideDomain { re, im })
        }
    }
}

type ValueFn<T> = dyn Fn(Complex<T>, u64) -> Complex<T> + Send + Sync;
type DerivFn<T> = dyn Fn(u32, Complex<T>) -> Result<FormalSequence<T>> + Send + Sync;

/// A curve `U → C^N`, given coordinatewise, with an optional closed form for
/// its complex derivatives.
#[derive(Clone)]
pub struct CurveFamily<T> {
    label: String,
    domain: Domain<T>,
    value: Arc<ValueFn<T>>,
    derivative: Option<Arc<DerivFn<T>>>,
}

impl<T: Real> fmt::Debug for CurveFamily<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CurveFamily")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .finish()
    }
}

impl<T: Real> CurveFamily<T> {
    /// `f(z) = (e^{nz})_n` with `f^{(j)}(z) = h_{j, e^z}`.
    pub fn exponential(domain: Domain<T>) -> Self {
        Self {
            label: "f(z) = (e^{nz})_n".into(),
            domain,
            value: Arc::new(|z, n| (z * T::from_u64(n).expect("index")).exp()),
            derivative: Some(Arc::new(|j, z| {
                let spec = GeneratorSpec::new(j as i32, z.exp())?;
                Ok(FormalSequence::generator(spec).with_label(format!("f^({j})(z) = h[{j}, e^z]")))
            })),
        }
    }

    pub fn from_fn<F>(label: impl Into<String>, domain: Domain<T>, f: F) -> Self
    where
        F: Fn(Complex<T>, u64) -> Complex<T> + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            domain,
            value: Arc::new(f),
            derivative: None,
        }
    }

    pub fn constant(c: Complex<T>) -> Self {
        let mut fam = Self::from_fn("constant", Domain::Plane, move |_, _| c);
        fam.derivative = Some(Arc::new(move |j, _| {
            Ok(if j == 0 {
                FormalSequence::constant(c)
            } else {
                FormalSequence::zero()
            })
        }));
        fam
    }

    /// Every coordinate equals `conj(ζ)`: a non-holomorphic control.
    pub fn conjugate() -> Self {
        Self::from_fn("conj(z)", Domain::Plane, |z, _| z.conj())
    }

    /// Replaces coordinate `n` by `g`; the closed-form derivative is dropped.
    pub fn with_coordinate<F>(&self, n: u64, g: F) -> Self
    where
        F: Fn(Complex<T>) -> Complex<T> + Send + Sync + 'static,
    {
        let base = Arc::clone(&self.value);
        Self {
            label: format!("{} with coordinate {n} replaced", self.label),
            domain: self.domain,
            value: Arc::new(move |z, k| if k == n { g(z) } else { base(z, k) }),
            derivative: None,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> Domain<T> {
        self.domain
    }

    pub fn value(&self, z: Complex<T>, n: u64) -> Complex<T> {
        (self.value)(z, n)
    }

    /// The truncation of the curve at `z`.
    pub fn at(&self, z: Complex<T>, n_len: usize) -> Result<TruncatedVector<T>> {
        self.domain.require(z)?;
        Ok(TruncatedVector::new((1..=n_len as u64).map(|n| self.value(z, n)).collect()))
    }

    /// `f^{(j)}(z)` as a sequence, when a closed form is known.
    pub fn derivative_sequence(&self, j: u32, z: Complex<T>) -> Result<FormalSequence<T>> {
        self.domain.require(z)?;
        let d = self.derivative.as_ref().ok_or(Error::NoDerivative)?;
        d(j, z)
    }
}

/// `f^{(j)}(z)` truncated at `N`; for the exponential family coordinate `n`
/// is `n^j e^{nz}`.
pub fn derivative_exact<T: Real>(fam: &CurveFamily<T>, j: u32, z: Complex<T>, n_len: usize) -> Result<TruncatedVector<T>> {
    truncate(&fam.derivative_sequence(j, z)?, n_len)
}

/// Log-magnitude form of [`derivative_exact`], for `n·Re z` beyond range.
pub fn derivative_exact_log<T: Real>(
    fam: &CurveFamily<T>,
    j: u32,
    z: Complex<T>,
    n_len: usize,
) -> Result<Vec<LogComplex<T>>> {
    truncate_log(&fam.derivative_sequence(j, z)?, n_len)
}

/// Central quotient `(g(z+h) − g(z−h)) / 2h` of `g = f^{(j−1)}`, computed in
/// the ambient product space. `j = 0` returns `f(z)` itself.
pub fn difference_quotient<T: Real>(
    fam: &CurveFamily<T>,
    j: u32,
    z: Complex<T>,
    h: Complex<T>,
    n_len: usize,
) -> Result<TruncatedVector<T>> {
    if j == 0 {
        return fam.at(z, n_len);
    }
    if h.norm() < lit(MIN_STEP) {
        return Err(Error::StepTooSmall(to_f64(h.norm())));
    }
    fam.domain.require(z)?;
    let (plus, minus) = (z + h, z - h);
    let (a, b) = if j == 1 {
        (fam.at(plus, n_len)?, fam.at(minus, n_len)?)
    } else {
        (derivative_exact(fam, j - 1, plus, n_len)?, derivative_exact(fam, j - 1, minus, n_len)?)
    };
    let two_h = h * lit::<T>(2.0);
    Ok(TruncatedVector::new(
        a.coords().iter().zip(b.coords()).map(|(x, y)| (x - y) / two_h).collect(),
    ))
}

/// Error of the central quotient at steps `h` and `h/2`.
#[derive(Debug, Clone, Serialize)]
pub struct RateReport {
    pub j: u32,
    pub z: (f64, f64),
    pub h: (f64, f64),
    /// `|DQ_n(h) − f^{(j)}_n(z)| / |f^{(j)}_n(z)|` per coordinate.
    pub errors: Vec<f64>,
    pub errors_half: Vec<f64>,
    pub ratios: Vec<f64>,
    pub window: (f64, f64),
    pub verdict: Verdict,
}

/// Checks second-order convergence of the central quotient towards
/// `f^{(j)}(z)`: halving `h` must shrink every coordinate's error by a
/// factor inside [`RATE_WINDOW`].
pub fn rate_check<T: Real>(fam: &CurveFamily<T>, j: u32, z: Complex<T>, h: Complex<T>, n_len: usize) -> Result<RateReport> {
    if j == 0 {
        return Err(Error::InvalidParameter("rate check needs j >= 1".into()));
    }
    let exact = derivative_exact(fam, j, z, n_len)?;
    let rel_err = |dq: &TruncatedVector<T>| -> Vec<T> {
        dq.coords()
            .iter()
            .zip(exact.coords())
            .map(|(a, e)| (a - e).norm() / e.norm())
            .collect()
    };
    let half = h / lit::<T>(2.0);
    let e1 = rel_err(&difference_quotient(fam, j, z, h, n_len)?);
    let e2 = rel_err(&difference_quotient(fam, j, z, half, n_len)?);
    let ratios: Vec<T> = e1.iter().zip(&e2).map(|(a, b)| *a / *b).collect();
    let (lo, hi) = (lit::<T>(RATE_WINDOW.0), lit::<T>(RATE_WINDOW.1));
    let ok = ratios.iter().all(|&r| r >= lo && r <= hi);
    Ok(RateReport {
        j,
        z: to_pair(z),
        h: to_pair(h),
        errors: e1.into_iter().map(to_f64).collect(),
        errors_half: e2.into_iter().map(to_f64).collect(),
        ratios: ratios.into_iter().map(to_f64).collect(),
        window: RATE_WINDOW,
        verdict: Verdict::from_bool(ok),
    })
}

/// Membership tolerance used by the escape demo.
pub const ESCAPE_TOL: f64 = 1e-12;
/// Imaginary parts of the extra points sampled for `M` alongside `z`.
pub const ESCAPE_SAMPLE_IM: [f64; 2] = [-0.9, 0.9];

/// Sample of `M` for the escape demo at `z`: `e^z` itself and `e^w` for
/// `w = Re z ± 0.9i`. Keeping `Re w = Re z` puts every base on the circle
/// `|w| = e^{Re z}`, so no column swamps the target after row rescaling.
pub fn escape_sample_points<T: Real>(z: Complex<T>) -> Vec<Complex<T>> {
    let mut pts = vec![z];
    pts.extend(ESCAPE_SAMPLE_IM.iter().map(|&im| Complex::new(z.re, lit(im))));
    pts
}

/// `E_k` sampled at [`escape_sample_points`].
pub fn escape_family<T: Real>(k: u32, z: Complex<T>) -> Result<SpanningFamily<T>> {
    SpanningFamily::sample_e_k(k, &escape_sample_points(z))
}

/// Composite evidence that `f_k : U → E_k` is `C^k` but not `C^{k+1}`.
#[derive(Debug, Clone, Serialize)]
pub struct EscapeReport {
    pub claim: String,
    pub k: u32,
    pub z: (f64, f64),
    pub family: String,
    pub schedule: Vec<usize>,
    /// Membership of `f^{(j)}(z)` in the family span, `j = 0..=k`.
    pub members: Vec<MembershipCertificate>,
    /// Membership of `f^{(k+1)}(z)`; expected to be `non_member`.
    pub escape: MembershipCertificate,
    pub rate: RateReport,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl Certified for EscapeReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Runs the three-part escape verification at `z`:
/// (i) `f^{(j)}(z)` is a member of `span(family)` for `j <= k`;
/// (ii) `f^{(k+1)}(z)` is a non-member;
/// (iii) central quotients of `f^{(k)}` converge to `f^{(k+1)}(z)` at
/// second order in the ambient product space.
pub fn escape_demo<T: Real>(
    k: u32,
    z: Complex<T>,
    family: &SpanningFamily<T>,
    schedule: Option<&[usize]>,
    tol: T,
) -> Result<EscapeReport> {
    let fam = CurveFamily::exponential(Domain::default_u());
    fam.domain.require(z)?;
    let schedule = schedule.map_or_else(|| default_schedule(family.len()), <[usize]>::to_vec);

    let members = (0..=k)
        .map(|j| span_membership_of(&fam.derivative_sequence(j, z)?, family, &schedule, tol))
        .collect::<Result<Vec<_>>>()?;
    let escape = span_membership_of(&fam.derivative_sequence(k + 1, z)?, family, &schedule, tol)?;

    // keep z ± h inside U
    let rate = rate_check(&fam, k + 1, z, Complex::new(lit(1e-3), T::zero()), DEFAULT_COORDS)?;

    let member_verdict = Verdict::combine(members.iter().map(|c| match c.status() {
        Membership::Member => Verdict::Pass,
        Membership::NonMember => Verdict::Fail,
        Membership::Inconclusive => Verdict::Inconclusive,
    }));
    let escape_verdict = match escape.status() {
        Membership::NonMember => Verdict::Pass,
        Membership::Member => Verdict::Fail,
        Membership::Inconclusive => Verdict::Inconclusive,
    };
    let checks = vec![
        Check::new(
            "derivatives_in_subspace",
            member_verdict,
            format!("f^(j)(z) in span for j = 0..={k}"),
        ),
        Check::new(
            "derivative_escapes",
            escape_verdict,
            format!("f^({})(z) residuals {:?}", k + 1, escape.residuals),
        ),
        Check::new(
            "quotient_rate",
            rate.verdict,
            format!("error ratios under step halving {:?}", rate.ratios),
        ),
    ];
    let verdict = Verdict::combine(checks.iter().map(|c| c.verdict));
    Ok(EscapeReport {
        claim: format!("f_{k} = (e^(nz))_n into E_{k} is C^{k} but not C^{}", k + 1),
        k,
        z: to_pair(z),
        family: family.label().to_string(),
        schedule,
        members,
        escape,
        rate,
        checks,
        verdict,
    })
}

/// A triangle in `C` with vertices in counter-clockwise order or not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle<T> {
    vertices: [Complex<T>; 3],
}

impl<T: Real> Triangle<T> {
    pub fn new(a: Complex<T>, b: Complex<T>, c: Complex<T>) -> Result<Self> {
        let t = Self { vertices: [a, b, c] };
        if t.signed_area().is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(t)
    }

    /// Accepts zero-area triangles (whose boundary integral is still zero).
    pub fn new_allow_degenerate(a: Complex<T>, b: Complex<T>, c: Complex<T>) -> Self {
        Self { vertices: [a, b, c] }
    }

    pub fn vertices(&self) -> [Complex<T>; 3] {
        self.vertices
    }

    pub fn signed_area(&self) -> T {
        let [a, b, c] = self.vertices;
        ((b - a).conj() * (c - a)).im / lit(2.0)
    }

    fn edges(&self) -> [(Complex<T>, Complex<T>); 3] {
        let [a, b, c] = self.vertices;
        [(a, b), (b, c), (c, a)]
    }
}

fn check_coords(n_len: usize) -> Result<()> {
    if n_len == 0 || n_len > MAX_COORDS {
        return Err(Error::InvalidParameter(format!(
            "quadrature probes take 1..={MAX_COORDS} coordinates, got {n_len}"
        )));
    }
    Ok(())
}

/// `∮_{∂Δ} f(ζ) dζ` per coordinate, with `quad_order` Gauss–Legendre nodes
/// per edge. The summation order is fixed, so results are reproducible.
pub fn triangle_integral<T: Real>(
    fam: &CurveFamily<T>,
    tri: &Triangle<T>,
    quad_order: usize,
    n_len: usize,
) -> Result<TruncatedVector<T>> {
    check_coords(n_len)?;
    if quad_order == 0 {
        return Err(Error::InvalidParameter("quadrature order must be positive".into()));
    }
    for v in tri.vertices() {
        fam.domain.require(v)?;
    }
    let rule = GaussLegendre::new(quad_order);
    let coords = (1..=n_len as u64)
        .map(|n| {
            tri.edges()
                .iter()
                .fold(Complex::new(T::zero(), T::zero()), |acc, &(a, b)| {
                    acc + rule.integrate_segment(a, b, |zeta| fam.value(zeta, n))
                })
        })
        .collect();
    Ok(TruncatedVector::new(coords))
}

/// `max |f_n(ζ)|` over the quadrature points and vertices of `∂Δ`: the
/// scale against which a vanishing boundary integral is judged.
pub fn boundary_sup<T: Real>(fam: &CurveFamily<T>, tri: &Triangle<T>, quad_order: usize, n_len: usize) -> Vec<T> {
    let rule = GaussLegendre::new(quad_order.max(1));
    let points: Vec<Complex<T>> = tri
        .edges()
        .iter()
        .flat_map(|&(a, b)| rule.segment_points(a, b).into_iter().chain([a]))
        .collect();
    (1..=n_len as u64)
        .map(|n| points.iter().map(|&p| fam.value(p, n).norm()).fold(T::zero(), T::max))
        .collect()
}

/// Outcome of comparing `f(z)` with its Cauchy integral.
#[derive(Debug, Clone, Serialize)]
pub struct CauchyReport {
    pub claim: String,
    pub z0: (f64, f64),
    pub r: f64,
    pub z: (f64, f64),
    pub nodes: usize,
    /// Relative error per coordinate (absolute where `f_n(z) = 0`).
    pub per_coordinate_errors: Vec<f64>,
    pub tolerance: f64,
    pub warnings: Vec<String>,
    pub verdict: Verdict,
}

impl Certified for CauchyReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

fn cauchy_preconditions<T: Real>(fam: &CurveFamily<T>, z0: Complex<T>, r: T, z: Complex<T>) -> Result<Vec<String>> {
    if r <= T::zero() {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    if !fam.domain.contains_closed_disk(z0, r) {
        let (re, im) = to_pair(z0);
        return Err(Error::OutsideDomain { re, im });
    }
    let d = (z - z0).norm();
    if d >= r {
        return Err(Error::NotInsideCircle {
            distance: to_f64(d),
            radius: to_f64(r),
        });
    }
    let mut warnings = Vec::new();
    if d > r * lit(0.95) {
        warnings.push(format!(
            "z is within 0.05 r of the circle (|z - z0| = {}); trapezoid accuracy degrades",
            to_f64(d)
        ));
    }
    Ok(warnings)
}

/// `(1/2πi) ∮ g(ζ)/(ζ − z) dζ` on the circle by the trapezoid rule.
pub fn cauchy_integral<T, G>(g: G, z0: Complex<T>, r: T, z: Complex<T>, nodes: usize) -> Complex<T>
where
    T: Real,
    G: Fn(Complex<T>) -> Complex<T>,
{
    let two_pi_i = Complex::new(T::zero(), T::TAU());
    circle_integral(z0, r, nodes, |zeta| g(zeta) / (zeta - z)) / two_pi_i
}

fn relative_error<T: Real>(approx: Complex<T>, exact: Complex<T>) -> T {
    let e = (approx - exact).norm();
    let s = exact.norm();
    if s.is_zero() {
        e
    } else {
        e / s
    }
}

/// Checks `f(z) = (1/2πi) ∮_{|ζ−z0|=r} f(ζ)/(ζ−z) dζ` on each of the first
/// `N` coordinates.
pub fn cauchy_formula_check<T: Real>(
    fam: &CurveFamily<T>,
    z0: Complex<T>,
    r: T,
    z: Complex<T>,
    nodes: usize,
    n_len: usize,
    tol: T,
) -> Result<CauchyReport> {
    check_coords(n_len)?;
    if nodes == 0 {
        return Err(Error::InvalidParameter("node count must be positive".into()));
    }
    let warnings = cauchy_preconditions(fam, z0, r, z)?;
    let errors: Vec<T> = (1..=n_len as u64)
        .map(|n| relative_error(cauchy_integral(|w| fam.value(w, n), z0, r, z, nodes), fam.value(z, n)))
        .collect();
    let ok = errors.iter().all(|&e| e <= tol);
    Ok(CauchyReport {
        claim: format!("Cauchy integral formula reproduces {} coordinatewise", fam.label()),
        z0: to_pair(z0),
        r: to_f64(r),
        z: to_pair(z),
        nodes,
        per_coordinate_errors: errors.into_iter().map(to_f64).collect(),
        tolerance: to_f64(tol),
        warnings,
        verdict: Verdict::from_bool(ok),
    })
}

/// Per-coordinate Cauchy checks standing in for weak analyticity.
#[derive(Debug, Clone, Serialize)]
pub struct WeakAnalyticityReport {
    pub claim: String,
    pub z0: (f64, f64),
    pub r: f64,
    pub points: Vec<(f64, f64)>,
    pub nodes: usize,
    pub coordinates: Vec<u64>,
    /// Worst error over the sample points, per coordinate.
    pub per_coordinate_errors: Vec<f64>,
    pub failing_coordinates: Vec<u64>,
    pub tolerance: f64,
    pub warnings: Vec<String>,
    pub verdict: Verdict,
}

impl Certified for WeakAnalyticityReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Runs the Cauchy check for every coordinate functional `λ_n`, `n ∈ coords`,
/// at every sample point. Coordinate projections separate the points of
/// `E_k`, so this is the computable surrogate for weak analyticity.
pub fn weak_analyticity_check<T: Real>(
    fam: &CurveFamily<T>,
    coords: &[u64],
    z0: Complex<T>,
    r: T,
    points: &[Complex<T>],
    nodes: usize,
    tol: T,
) -> Result<WeakAnalyticityReport> {
    if coords.is_empty() || points.is_empty() {
        return Err(Error::InvalidParameter("need at least one coordinate and one point".into()));
    }
    if let Some(&bad) = coords.iter().find(|&&n| n == 0) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let mut warnings = Vec::new();
    for &p in points {
        warnings.extend(cauchy_preconditions(fam, z0, r, p)?);
    }
    let errors: Vec<T> = coords
        .iter()
        .map(|&n| {
            points
                .iter()
                .map(|&p| relative_error(cauchy_integral(|w| fam.value(w, n), z0, r, p, nodes), fam.value(p, n)))
                .fold(T::zero(), T::max)
        })
        .collect();
    let failing: Vec<u64> = coords
        .iter()
        .zip(&errors)
        .filter(|(_, &e)| !(e <= tol))
        .map(|(&n, _)| n)
        .collect();
    Ok(WeakAnalyticityReport {
        claim: format!("{} is weakly analytic through coordinate functionals", fam.label()),
        z0: to_pair(z0),
        r: to_f64(r),
        points: points.iter().map(|&p| to_pair(p)).collect(),
        nodes,
        coordinates: coords.to_vec(),
        per_coordinate_errors: errors.into_iter().map(to_f64).collect(),
        verdict: Verdict::from_bool(failing.is_empty()),
        failing_coordinates: failing,
        tolerance: to_f64(tol),
        warnings,
    })
}

/// Sample points `w ∈ U` on a `side × side` grid strictly inside the
/// rectangle domain, used to sample `M ⊇ e^U`.
pub fn grid_points<T: Real>(domain: &Domain<T>, side: usize) -> Vec<Complex<T>> {
    let Domain::Rectangle { re, im } = *domain else {
        return Vec::new();
    };
    let step = |lo: T, hi: T, i: usize| {
        lo + (hi - lo) * T::from_usize(i + 1).expect("small") / T::from_usize(side + 1).expect("small")
    };
    (0..side)
        .flat_map(|a| (0..side).map(move |b| Complex::new(step(re.0, re.1, a), step(im.0, im.1, b))))
        .collect()
}
