//! Linear-algebra certificates over generator families: generalized
//! eigenspace membership under the shift, independence rank of confluent
//! Vandermonde truncations, and span membership by least squares over a
//! truncation schedule.

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, ExactGenerator, GaussianRational};
use crate::linalg::{self, Matrix};
use crate::logspace::LogComplex;
use crate::report::{Certified, Verdict};
use crate::scalar::{lit, overflow_log_threshold, to_f64, to_pair, Real};
use crate::sequence::{FormalSequence, GeneratorSpec};

/// Singular values below `DEFAULT_TOL_REL · σ_max` count as zero.
pub const DEFAULT_TOL_REL: f64 = 1e-10;
/// A floating rank is confident when `σ_r / σ_{r+1}` reaches this ratio.
pub const CONFIDENCE_RATIO: f64 = 1e4;
/// Pseudo-inverse cutoff used inside membership least squares.
pub const LSTSQ_TOL_REL: f64 = 1e-13;
/// Non-membership requires residuals at least this multiple of `tol`.
pub const NONMEMBER_FACTOR: f64 = 10.0;

/// An ordered set of pairwise-distinct generators spanning a subspace of
/// `C^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningFamily<T> {
    label: String,
    generators: Vec<GeneratorSpec<T>>,
}

impl<T: Real> SpanningFamily<T> {
    pub fn new(label: impl Into<String>, generators: Vec<GeneratorSpec<T>>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                let (k, re, im) = g.triple();
                return Err(Error::DuplicateGenerator { k, re, im });
            }
        }
        Ok(Self {
            label: label.into(),
            generators,
        })
    }

    pub fn empty(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            generators: Vec::new(),
        }
    }

    /// Sample of `E_k`: every `h_{j, e^w}` with `0 <= j <= k` and `w` from
    /// `points` (duplicate points are skipped).
    pub fn sample_e_k(k: u32, points: &[Complex<T>]) -> Result<Self> {
        let mut bases: Vec<Complex<T>> = Vec::new();
        for p in points {
            let w = p.exp();
            if !bases.contains(&w) {
                bases.push(w);
            }
        }
        let generators = bases
            .iter()
            .flat_map(|&w| (0..=k as i32).map(move |j| GeneratorSpec::new(j, w)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(format!("E_{k} over {} sampled points of M", bases.len()), generators)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> &[GeneratorSpec<T>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn position(&self, g: &GeneratorSpec<T>) -> Option<usize> {
        self.generators.iter().position(|x| x == g)
    }

    pub fn without(&self, g: &GeneratorSpec<T>) -> Self {
        Self {
            label: format!("{} without {g}", self.label),
            generators: self.generators.iter().filter(|x| *x != g).copied().collect(),
        }
    }

    fn triples(&self) -> Vec<(i32, f64, f64)> {
        self.generators.iter().map(GeneratorSpec::triple).collect()
    }
}

/// Default truncation schedule `(m+1, 2m, 4m, 8m)`, bumped to stay strictly
/// increasing for tiny families.
pub fn default_schedule(m: usize) -> Vec<usize> {
    let mut out = vec![m + 1];
    for f in [2, 4, 8] {
        let prev = *out.last().expect("nonempty");
        out.push((f * m).max(prev + 1));
    }
    out
}

// ---------------------------------------------------------------------------
// Nilpotency of (S - z) on h_{k,z}

/// Outcome of applying `(S − z)^p` to a truncated generator.
#[derive(Debug, Clone, Serialize)]
pub struct NilpotencyReport {
    pub claim: String,
    pub generator: (i32, f64, f64),
    pub power: u32,
    pub truncation: usize,
    /// `|residual_n| / scale_n` for each surviving coordinate.
    pub relative_residuals: Vec<f64>,
    pub tolerance: f64,
    /// First coordinate (1-based) whose residual exceeds the tolerance.
    pub violating_coordinate: Option<usize>,
    pub verdict: Verdict,
}

impl Certified for NilpotencyReport {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Checks `h_{k,z} ∈ ker (S − z)^{k+1}`, i.e. membership in the generalized
/// eigenspace `V^z` of the shift.
pub fn nilpotency_check<T: Real>(spec: &GeneratorSpec<T>, n_len: usize, tol: T) -> Result<NilpotencyReport> {
    if spec.k() < 0 {
        return Err(Error::InvalidParameter("nilpotency needs k >= 0".into()));
    }
    nilpotency_check_with_power(spec, spec.k() as u32 + 1, n_len, tol)
}

/// Applies `(S − z)^power` to the first `n_len` coordinates of `h_{k,z}`.
/// The surviving `n_len − power` coordinates must vanish relative to the
/// largest intermediate magnitude feeding each of them.
pub fn nilpotency_check_with_power<T: Real>(
    spec: &GeneratorSpec<T>,
    power: u32,
    n_len: usize,
    tol: T,
) -> Result<NilpotencyReport> {
    let need = power as usize + 1;
    if n_len < need {
        return Err(Error::TruncationTooShort { got: n_len, need });
    }
    let z = spec.z();
    let mut v: Vec<Complex<T>> = (1..=n_len as u64).map(|n| spec.eval(n)).collect::<Result<_>>()?;
    let mut scale: Vec<T> = v.iter().map(|x| x.norm()).collect();
    for _ in 0..power {
        let next: Vec<Complex<T>> = v.windows(2).map(|w| w[1] - z * w[0]).collect();
        let next_scale: Vec<T> = (0..next.len())
            .map(|i| {
                scale[i]
                    .max(scale[i + 1])
                    .max(v[i + 1].norm())
                    .max((z * v[i]).norm())
            })
            .collect();
        v = next;
        scale = next_scale;
    }
    let rel: Vec<T> = v
        .iter()
        .zip(&scale)
        .map(|(x, &s)| if s.is_zero() { x.norm() } else { x.norm() / s })
        .collect();
    let violating = rel.iter().position(|&r| r > tol).map(|i| i + 1);
    Ok(NilpotencyReport {
        claim: format!("(S - z)^{power} annihilates h_{{k,z}} (generalized eigenspace of the shift)"),
        generator: spec.triple(),
        power,
        truncation: n_len,
        relative_residuals: rel.into_iter().map(to_f64).collect(),
        tolerance: to_f64(tol),
        violating_coordinate: violating,
        verdict: Verdict::from_bool(violating.is_none()),
    })
}

// ---------------------------------------------------------------------------
// Independence rank

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMode {
    Exact,
    Floating,
}

impl std::str::FromStr for RankMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(RankMode::Exact),
            "floating" => Ok(RankMode::Floating),
            other => Err(Error::InvalidParameter(format!("unknown rank mode {other:?}"))),
        }
    }
}

/// Rank certificate for a generator family truncated at `N`.
#[derive(Debug, Clone, Serialize)]
pub struct RankCertificate {
    pub claim: String,
    pub generators: Vec<(i32, f64, f64)>,
    pub truncations: Vec<usize>,
    pub residuals: Vec<f64>,
    pub rank: usize,
    pub mode: RankMode,
    pub tolerances: BTreeMap<String, f64>,
    pub verdict: Verdict,
    pub row_rescaled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singular_values: Option<Vec<f64>>,
    /// `σ_r / σ_{r+1}`; infinite when the rank is full.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub confident: Option<bool>,
    /// Exact determinant `(re, im)` as rational strings, square case only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<(String, String)>,
}

impl Certified for RankCertificate {
    fn claim(&self) -> &str {
        &self.claim
    }
    fn verdict(&self) -> Verdict {
        self.verdict
    }
}

const RANK_CLAIM: &str = "the generators n^k z^n are linearly independent in C^N";

fn log_row_scaled<T: Real>(logs: &[Vec<LogComplex<T>>], n_len: usize) -> Result<Matrix<T>> {
    let cols = logs.len();
    let mut a = Matrix::zeros(n_len, cols);
    for i in 0..n_len {
        let s = logs
            .iter()
            .map(|col| col[i].ln_abs)
            .fold(T::neg_infinity(), T::max);
        let s = if s.is_finite() { s } else { T::zero() };
        for (j, col) in logs.iter().enumerate() {
            let v = col[i].rescale(s).to_complex().ok_or(Error::Overflow {
                index: i as u64 + 1,
                log_magnitude: to_f64(col[i].ln_abs),
            })?;
            a.set(i, j, v);
        }
    }
    Ok(a)
}

/// Rank of the `N × m` evaluation matrix `A[n][i] = h_i(n)`.
///
/// Floating mode rescales every row by its largest magnitude (computed in
/// log space, so no entry overflows), equilibrates columns and counts
/// singular values `>= tol_rel · σ_max`. Since the family is pairwise
/// distinct its true rank is `m`; a smaller numerical rank is reported as
/// [`Error::IllConditioned`]. Exact mode converts every base to a Gaussian
/// rational and eliminates without rounding.
pub fn independence_rank<T: Real>(
    family: &SpanningFamily<T>,
    n_len: usize,
    mode: RankMode,
    tol_rel: T,
) -> Result<RankCertificate> {
    let m = family.len();
    if n_len < m.max(1) {
        return Err(Error::TruncationTooShort { got: n_len, need: m.max(1) });
    }
    match mode {
        RankMode::Exact => {
            let gens = family
                .generators()
                .iter()
                .map(ExactGenerator::from_spec)
                .collect::<Result<Vec<_>>>()?;
            independence_rank_exact(&gens, n_len, true)
        }
        RankMode::Floating => {
            let logs = family
                .generators()
                .iter()
                .map(|g| (1..=n_len as u64).map(|n| g.eval_log(n)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let a = log_row_scaled(&logs, n_len)?;
            let ls = linalg::least_squares(&a, &vec![Complex::new(T::zero(), T::zero()); n_len], tol_rel);
            let sigma = ls.sigma;
            let smax = sigma.first().copied().unwrap_or_else(T::zero);
            let rank = sigma.iter().filter(|&&s| s > T::zero() && s >= tol_rel * smax).count();
            let separation = if rank == 0 {
                0.0
            } else if rank == sigma.len() || sigma[rank].is_zero() {
                f64::INFINITY
            } else {
                to_f64(sigma[rank - 1] / sigma[rank])
            };
            if rank < m {
                return Err(Error::IllConditioned {
                    rank,
                    expected: m,
                    separation,
                });
            }
            let mut tolerances = BTreeMap::new();
            tolerances.insert("tol_rel".to_string(), to_f64(tol_rel));
            tolerances.insert("confidence_ratio".to_string(), CONFIDENCE_RATIO);
            Ok(RankCertificate {
                claim: RANK_CLAIM.into(),
                generators: family.triples(),
                truncations: vec![n_len],
                residuals: Vec::new(),
                rank,
                mode: RankMode::Floating,
                tolerances,
                verdict: Verdict::from_bool(rank == m),
                row_rescaled: true,
                singular_values: Some(sigma.into_iter().map(to_f64).collect()),
                separation: Some(separation),
                confident: Some(separation >= CONFIDENCE_RATIO),
                determinant: None,
            })
        }
    }
}

/// Exact rank over `Q(i)`. With `rescale_rows` each row is divided by its
/// largest component, denominators are cleared and Bareiss elimination runs
/// over `Z[i]`; otherwise plain field elimination is used. The determinant
/// reported in the square case is always that of the unscaled matrix.
pub fn independence_rank_exact(gens: &[ExactGenerator], n_len: usize, rescale_rows: bool) -> Result<RankCertificate> {
    for (i, g) in gens.iter().enumerate() {
        if gens[..i].contains(g) {
            let (k, re, im) = g.triple();
            return Err(Error::DuplicateGenerator { k, re, im });
        }
    }
    let m = gens.len();
    if n_len < m.max(1) {
        return Err(Error::TruncationTooShort { got: n_len, need: m.max(1) });
    }
    let rows: Vec<Vec<GaussianRational>> = (1..=n_len as u64)
        .map(|n| gens.iter().map(|g| g.eval(n)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let (rank, det) = if rescale_rows {
        let int_rows = rows
            .iter()
            .map(|r| exact::clear_denominators(&exact::rescale_row(r)))
            .collect();
        let rank = exact::bareiss(int_rows).rank;
        let det = (n_len == m).then(|| exact::field_elimination(rows.clone()).1).flatten();
        (rank, det)
    } else {
        exact::field_elimination(rows)
    };
    let mut tolerances = BTreeMap::new();
    tolerances.insert("tol_rel".to_string(), 0.0);
    Ok(RankCertificate {
        claim: RANK_CLAIM.into(),
        generators: gens.iter().map(ExactGenerator::triple).collect(),
        truncations: vec![n_len],
        residuals: Vec::new(),
        rank,
        mode: RankMode::Exact,
        tolerances,
        verdict: Verdict::from_bool(rank == m),
        row_rescaled: rescale_rows,
        singular_values: None,
        separation: None,
        confident: None,
        determinant: det.map(|d| (d.re.to_string(), d.im.to_string())),
    })
}

// ---------------------------------------------------------------------------
// Span membership

/// Membership status of a target sequence in the span of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Member,
    NonMember,
    Inconclusive,
}

/// Evidence for or against `target ∈ span(family)` over a schedule of
/// truncations. A `NonMember` status rests on residual non-decay across
/// finite windows; it is evidence, not a proof.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipCertificate {
    pub claim: String,
    pub generators: Vec<(i32, f64, f64)>,
    pub target: String,
    pub truncations: Vec<usize>,
    pub residuals: Vec<f64>,
    /// Numerical rank of the equilibrated family at each truncation.
    pub rank: Vec<usize>,
    pub mode: &'static str,
    pub tolerances: BTreeMap<String, f64>,
    pub verdict: Membership,
    /// Least-squares coefficients at the largest truncation, `(re, im)`.
    pub coefficients: Vec<(f64, f64)>,
    /// Relative change of the coefficients between the last two truncations.
    pub coefficient_drift: f64,
    pub notes: Vec<String>,
}

impl MembershipCertificate {
    pub fn status(&self) -> Membership {
        self.verdict
    }
}

/// Least-squares membership test of `target` in `span(family)`.
///
/// For each `N` in `schedule` the system `A c ≈ b` is row-rescaled by the
/// largest family magnitude in each row (the target shares the scale) and
/// solved; the relative residual is `‖Ac − b‖ / ‖b‖`. The verdict is
/// `Member` when the last residual and the last coefficient drift are both
/// `<= tol`, `NonMember` when every residual is `>= 10·tol` and the sequence
/// is non-decreasing (up to a relative slack of `1e-9`), otherwise
/// `Inconclusive`.
pub fn span_membership_of<T: Real>(
    target: &FormalSequence<T>,
    family: &SpanningFamily<T>,
    schedule: &[usize],
    tol: T,
) -> Result<MembershipCertificate> {
    let m = family.len();
    if schedule.len() < 2 {
        return Err(Error::InvalidParameter("schedule needs at least two truncations".into()));
    }
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("schedule must be strictly increasing".into()));
    }
    if schedule[0] < m + 1 {
        return Err(Error::TruncationTooShort { got: schedule[0], need: m + 1 });
    }
    let n_max = *schedule.last().expect("nonempty");
    let col_logs = family
        .generators()
        .iter()
        .map(|g| (1..=n_max as u64).map(|n| g.eval_log(n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let target_logs = (1..=n_max as u64).map(|n| target.eval_log(n)).collect::<Result<Vec<_>>>()?;

    // Row scales depend only on the row, so nested truncations share them.
    let mut a_full = Matrix::zeros(n_max, m);
    let mut b_full = Vec::with_capacity(n_max);
    for i in 0..n_max {
        let mut s = col_logs.iter().map(|c| c[i].ln_abs).fold(T::neg_infinity(), T::max);
        if !s.is_finite() {
            s = if target_logs[i].ln_abs.is_finite() { target_logs[i].ln_abs } else { T::zero() };
        }
        for (j, col) in col_logs.iter().enumerate() {
            a_full.set(i, j, col[i].rescale(s).to_complex().expect("entries are <= 1 after rescaling"));
        }
        let b = target_logs[i].rescale(s);
        if b.ln_abs > overflow_log_threshold::<T>() {
            return Err(Error::Overflow {
                index: i as u64 + 1,
                log_magnitude: to_f64(b.ln_abs),
            });
        }
        b_full.push(b.to_complex().expect("checked above"));
    }

    let zero = Complex::new(T::zero(), T::zero());
    let mut residuals = Vec::new();
    let mut ranks = Vec::new();
    let mut coeffs: Vec<Vec<Complex<T>>> = Vec::new();
    for &n_len in schedule {
        let rows = (0..n_len)
            .map(|i| (0..m).map(|j| a_full.get(i, j)).collect())
            .collect();
        let a = Matrix::from_rows(rows);
        let b = &b_full[..n_len];
        let bnorm = linalg::norm2(b);
        if bnorm.is_zero() {
            residuals.push(T::zero());
            ranks.push(0);
            coeffs.push(vec![zero; m]);
            continue;
        }
        let ls = if m == 0 {
            linalg::LeastSquares {
                coefficients: Vec::new(),
                residual_norm: bnorm,
                sigma: Vec::new(),
                rank: 0,
            }
        } else {
            linalg::least_squares(&a, b, lit(LSTSQ_TOL_REL))
        };
        residuals.push(ls.residual_norm / bnorm);
        ranks.push(ls.rank);
        coeffs.push(ls.coefficients);
    }

    let last = coeffs.len() - 1;
    let cnorm = linalg::norm2(&coeffs[last]);
    let diff: Vec<Complex<T>> = coeffs[last].iter().zip(&coeffs[last - 1]).map(|(a, b)| a - b).collect();
    let drift = if cnorm.is_zero() {
        linalg::norm2(&diff)
    } else {
        linalg::norm2(&diff) / cnorm
    };

    let slack = lit::<T>(1e-9);
    let factor = lit::<T>(NONMEMBER_FACTOR);
    let verdict = if residuals[last] <= tol && drift <= tol {
        Membership::Member
    } else if residuals.iter().all(|&r| r >= factor * tol)
        && residuals.windows(2).all(|w| w[1] >= w[0] * (T::one() - slack))
    {
        Membership::NonMember
    } else {
        Membership::Inconclusive
    };

    let mut tolerances = BTreeMap::new();
    tolerances.insert("tol".to_string(), to_f64(tol));
    tolerances.insert("lstsq_tol_rel".to_string(), LSTSQ_TOL_REL);
    tolerances.insert("nonmember_factor".to_string(), NONMEMBER_FACTOR);
    tolerances.insert("monotonicity_slack".to_string(), 1e-9);
    Ok(MembershipCertificate {
        claim: format!("membership of {} in span of {}", target.label(), family.label()),
        generators: family.triples(),
        target: target.label().to_string(),
        truncations: schedule.to_vec(),
        residuals: residuals.into_iter().map(to_f64).collect(),
        rank: ranks,
        mode: "least-squares",
        tolerances,
        verdict,
        coefficients: coeffs[last].iter().map(|&c| to_pair(c)).collect(),
        coefficient_drift: to_f64(drift),
        notes: vec![
            "non-membership is inferred from residual non-decay over finite truncations; it is evidence, not a proof"
                .into(),
        ],
    })
}

/// [`span_membership_of`] for a generator target.
pub fn span_membership<T: Real>(
    target: &GeneratorSpec<T>,
    family: &SpanningFamily<T>,
    schedule: &[usize],
    tol: T,
) -> Result<MembershipCertificate> {
    span_membership_of(&FormalSequence::generator(*target), family, schedule, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: i32, re: f64, im: f64) -> GeneratorSpec<f64> {
        GeneratorSpec::new(k, Complex::new(re, im)).unwrap()
    }

    #[test]
    fn schedule_defaults() {
        assert_eq!(default_schedule(3), vec![4, 6, 12, 24]);
        assert_eq!(default_schedule(1), vec![2, 3, 4, 8]);
        assert_eq!(default_schedule(0), vec![1, 2, 3, 4]);
    }

    #[test]
    fn duplicates_rejected() {
        let err = SpanningFamily::new("dup", vec![g(0, 2.0, 0.0), g(0, 2.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateGenerator { k: 0, .. }));
    }

    #[test]
    fn nilpotency_examples() {
        let r = nilpotency_check(&g(0, 2.0, 0.0), 10, 1e-12).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.relative_residuals.iter().all(|&x| x == 0.0));
        assert_eq!(r.relative_residuals.len(), 9);

        // (n+2) - 2(n+1) + n = 0
        let r = nilpotency_check(&g(1, 1.0, 0.0), 10, 1e-12).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.relative_residuals.iter().all(|&x| x == 0.0));

        // ((n+1) - n) z^{n+1} = z^{n+1} != 0
        let r = nilpotency_check_with_power(&g(1, 0.5, 0.5), 1, 10, 1e-12).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.violating_coordinate, Some(1));
    }

    #[test]
    fn nilpotency_preconditions() {
        assert!(matches!(
            nilpotency_check(&g(3, 2.0, 0.0), 4, 1e-12),
            Err(Error::TruncationTooShort { got: 4, need: 5 })
        ));
        assert!(nilpotency_check(&g(-1, 2.0, 0.0), 10, 1e-12).is_err());
    }

    #[test]
    fn rank_examples_exact_and_floating() {
        let fam = SpanningFamily::new("a", vec![g(0, 2.0, 0.0)]).unwrap();
        assert_eq!(independence_rank(&fam, 1, RankMode::Exact, 0.0).unwrap().rank, 1);
        assert_eq!(independence_rank(&fam, 1, RankMode::Floating, 1e-10).unwrap().rank, 1);

        let fam = SpanningFamily::new("b", vec![g(0, 2.0, 0.0), g(1, 2.0, 0.0)]).unwrap();
        let cert = independence_rank(&fam, 2, RankMode::Exact, 0.0).unwrap();
        assert_eq!(cert.rank, 2);
        assert_eq!(cert.determinant, Some(("8".into(), "0".into())));

        let fam = SpanningFamily::new("c", vec![g(0, 1.0, 0.0), g(0, -1.0, 0.0), g(1, 1.0, 0.0)]).unwrap();
        let cert = independence_rank(&fam, 3, RankMode::Exact, 0.0).unwrap();
        assert_eq!(cert.rank, 3);
        assert_eq!(cert.determinant, Some(("4".into(), "0".into())));
        let fl = independence_rank(&fam, 3, RankMode::Floating, 1e-10).unwrap();
        assert_eq!(fl.rank, 3);
        assert_eq!(fl.confident, Some(true));
    }

    #[test]
    fn rank_preconditions() {
        let fam = SpanningFamily::new("b", vec![g(0, 2.0, 0.0), g(1, 2.0, 0.0)]).unwrap();
        assert!(matches!(
            independence_rank(&fam, 1, RankMode::Exact, 0.0),
            Err(Error::TruncationTooShort { .. })
        ));
    }

    #[test]
    fn floating_rank_survives_huge_magnitudes() {
        // |z|^n far beyond f64 range at n = 400 without log-space assembly
        let fam = SpanningFamily::new("big", vec![g(0, 10.0, 0.0), g(1, 10.0, 0.0), g(0, 0.1, 0.0)]).unwrap();
        let cert = independence_rank(&fam, 400, RankMode::Floating, 1e-10).unwrap();
        assert_eq!(cert.rank, 3);
    }

    #[test]
    fn floating_ill_conditioning_is_signalled() {
        // nearly equal bases at N = m: numerically rank deficient
        let fam = SpanningFamily::new("close", vec![g(0, 1.0, 0.0), g(0, 1.0 + 1e-13, 0.0)]).unwrap();
        let err = independence_rank(&fam, 2, RankMode::Floating, 1e-10).unwrap_err();
        assert!(matches!(err, Error::IllConditioned { rank: 1, expected: 2, .. }));
        // exact mode still certifies independence
        assert_eq!(independence_rank(&fam, 2, RankMode::Exact, 0.0).unwrap().rank, 2);
    }

    #[test]
    fn member_example() {
        let fam = SpanningFamily::new("f", vec![g(0, 2.0, 0.0), g(0, 3.0, 0.0)]).unwrap();
        let cert = span_membership(&g(0, 2.0, 0.0), &fam, &default_schedule(2), 1e-8).unwrap();
        assert_eq!(cert.status(), Membership::Member);
        assert!((cert.coefficients[0].0 - 1.0).abs() < 1e-10);
        assert!(cert.coefficients[1].0.abs() < 1e-10);
    }

    #[test]
    fn nonmember_example_matches_closed_form() {
        // Row-rescaled target is b_n = n and the family column is constant,
        // so the residual is that of fitting a mean:
        // sqrt(N(N²-1)/12) / sqrt(N(N+1)(2N+1)/6).
        let oracle = |n: f64| (n * (n * n - 1.0) / 12.0).sqrt() / (n * (n + 1.0) * (2.0 * n + 1.0) / 6.0).sqrt();
        let fam = SpanningFamily::new("f", vec![g(0, 2.0, 0.0)]).unwrap();
        let cert = span_membership(&g(1, 2.0, 0.0), &fam, &[2, 4, 8], 1e-8).unwrap();
        assert_eq!(cert.status(), Membership::NonMember);
        for (r, n) in cert.residuals.iter().zip([2.0, 4.0, 8.0]) {
            assert!((r - oracle(n)).abs() < 1e-12, "{r} vs {}", oracle(n));
        }
        assert!((cert.residuals[0] - 0.316_227_766_016_838).abs() < 1e-12);
    }

    #[test]
    fn empty_family_spans_zero() {
        let fam = SpanningFamily::<f64>::empty("none");
        let cert = span_membership(&g(0, 2.0, 0.0), &fam, &[1, 2], 1e-8).unwrap();
        assert_eq!(cert.status(), Membership::NonMember);
        let zero = FormalSequence::<f64>::zero();
        let cert = span_membership_of(&zero, &fam, &[1, 2], 1e-8).unwrap();
        assert_eq!(cert.status(), Membership::Member);
    }

    #[test]
    fn membership_schedule_validation() {
        let fam = SpanningFamily::new("f", vec![g(0, 2.0, 0.0), g(0, 3.0, 0.0)]).unwrap();
        let t = g(0, 2.0, 0.0);
        assert!(span_membership(&t, &fam, &[4], 1e-8).is_err());
        assert!(span_membership(&t, &fam, &[4, 4], 1e-8).is_err());
        assert!(matches!(
            span_membership(&t, &fam, &[2, 4], 1e-8),
            Err(Error::TruncationTooShort { got: 2, need: 3 })
        ));
    }

    #[test]
    fn sample_e_k_layout() {
        let pts = [Complex::new(0.0, 0.0), Complex::new(0.5, 0.5), Complex::new(0.0, 0.0)];
        let fam = SpanningFamily::sample_e_k(2, &pts).unwrap();
        assert_eq!(fam.len(), 6);
        assert_eq!(fam.generators()[1], g(1, 1.0, 0.0));
    }
}
