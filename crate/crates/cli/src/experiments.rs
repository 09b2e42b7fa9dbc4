//! The eight named experiments. Each one turns its parameters into a
//! [`VerificationReport`] plus a flat series for CSV export.

use holoseq_core::ell1::{local_unboundedness_demo, unboundedness_witness, SummableVector};
use holoseq_core::exact::ExactGenerator;
use holoseq_core::holomorphy::{
    boundary_sup, cauchy_formula_check, escape_demo, escape_family, triangle_integral, weak_analyticity_check,
    CurveFamily, Domain, Triangle,
};
use holoseq_core::real_analytic::{complexification_failure_demo, product_radius_demo, taylor_partial_sum_check};
use holoseq_core::sequence::GeneratorSpec;
use holoseq_core::span::{independence_rank, independence_rank_exact, Membership, RankMode, SpanningFamily};
use holoseq_core::{Check, Error, Verdict, VerificationReport};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::args::{
    CauchyParams, EscapeControl, EscapeParams, GrowthFailureParams, IndependenceParams, Integrand, ModeArg,
    RadiusParams, TaylorGlobalParams, UnboundedParams, WeakAnalyticParams, WeakControl,
};
use crate::CliError;

/// One row of the experiment listing.
pub struct ExperimentInfo {
    pub id: &'static str,
    pub claim: &'static str,
    pub defaults: &'static str,
}

pub const EXPERIMENTS: [ExperimentInfo; 8] = [
    ExperimentInfo {
        id: "independence",
        claim: "the sequences h_{k,z}(n) = n^k z^n are linearly independent in C^N",
        defaults: "m=6 trunc=m mode=exact k-max=3 trials=1",
    },
    ExperimentInfo {
        id: "escape",
        claim: "f_k(z) = (e^{nz})_n into E_k is C^k but not C^{k+1}",
        defaults: "k=1 z=0.2 tol=1e-12 control=none",
    },
    ExperimentInfo {
        id: "weak-analytic",
        claim: "f_0 is weakly analytic: coordinate Cauchy formulas hold and triangle integrals vanish",
        defaults: "coords=10 z0=0 r=0.5 nodes=256 quad-order=32 tol=1e-10 control=none",
    },
    ExperimentInfo {
        id: "cauchy",
        claim: "f(z) = (1/2 pi i) * integral of f(w)/(w - z) over |w - z0| = r",
        defaults: "z=0.1 z0=0 r=0.5 nodes=256 coords=10 tol=1e-10 integrand=exp",
    },
    ExperimentInfo {
        id: "unbounded",
        claim: "g(x) = sum 2^k x_k^{2k} is unbounded near every x in l1, and so is f(x) = (g(nx))_n",
        defaults: "x=0 radius=0.5 bound=1e6 fuzz=0",
    },
    ExperimentInfo {
        id: "radius",
        claim: "t -> (1/(1+(nt)^2))_n has coordinate radii 1/n and no common radius of convergence",
        defaults: "n-max=10 terms=40",
    },
    ExperimentInfo {
        id: "taylor-global",
        claim: "the Taylor series of (sin nt)_n at t0 converges to it for all real t and t0",
        defaults: "grid=5 lo=-2 hi=2 coords=10 tol=1e-10 terms=oracle",
    },
    ExperimentInfo {
        id: "growth-failure",
        claim: "(sin nt)_n is smooth but not real analytic into the polynomial-growth space",
        defaults: "t=0.1 n-max=300 m-max=20",
    },
];

/// Header plus rows, already formatted.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Series {
    fn new(headers: &[&'static str]) -> Self {
        Self {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }
}

pub struct Outcome {
    pub report: VerificationReport,
    pub series: Series,
}

fn claim_of(id: &str) -> &'static str {
    EXPERIMENTS.iter().find(|e| e.id == id).map(|e| e.claim).expect("known id")
}

fn failed(id: &str, err: &Error, headers: &[&'static str]) -> Outcome {
    Outcome {
        report: VerificationReport::from_error(claim_of(id), err),
        series: Series::new(headers),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn random_family(rng: &mut ChaCha8Rng, m: usize, k_max: i32) -> Vec<(i32, i64, i64, i64)> {
    let mut out: Vec<(i32, i64, i64, i64)> = Vec::with_capacity(m);
    while out.len() < m {
        let k = rng.gen_range(0..=k_max);
        let q = rng.gen_range(1..=4i64);
        let (a, b) = (rng.gen_range(-16..=16i64), rng.gen_range(-16..=16i64));
        let r2 = (a * a + b * b) as f64 / (q * q) as f64;
        if !(1.0 / 16.0..=16.0).contains(&r2) {
            continue;
        }
        if out.iter().any(|&(k2, a2, b2, q2)| k2 == k && a2 * q == a * q2 && b2 * q == b * q2) {
            continue;
        }
        out.push((k, a, b, q));
    }
    out
}

pub fn independence(p: &IndependenceParams, seed: u64) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 5] = ["trial", "m", "truncation", "rank", "verdict"];
    if p.m == 0 || p.trials == 0 {
        return Err(usage("--m and --trials must be positive"));
    }
    if p.k_max < 0 {
        return Err(usage("--k-max must be >= 0"));
    }
    let n_len = p.trunc.unwrap_or(p.m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut series = Series::new(&HEADERS);
    let mut checks = Vec::new();
    let mut certs = Vec::new();
    for trial in 0..p.trials {
        let raw = random_family(&mut rng, p.m, p.k_max);
        let cert = match p.mode {
            ModeArg::Exact => {
                let gens: Vec<ExactGenerator> = raw
                    .iter()
                    .map(|&(k, a, b, q)| {
                        let z = num_complex::Complex::new(
                            BigRational::new(BigInt::from(a), BigInt::from(q)),
                            BigRational::new(BigInt::from(b), BigInt::from(q)),
                        );
                        ExactGenerator::new(k, z)
                    })
                    .collect::<Result<_, _>>()
                    .expect("bases are nonzero");
                independence_rank_exact(&gens, n_len, true)
            }
            ModeArg::Floating => {
                let gens = raw
                    .iter()
                    .map(|&(k, a, b, q)| GeneratorSpec::new(k, Complex64::new(a as f64 / q as f64, b as f64 / q as f64)))
                    .collect::<Result<Vec<_>, _>>()
                    .expect("bases are nonzero");
                SpanningFamily::new(format!("random family {trial}"), gens)
                    .and_then(|fam| independence_rank(&fam, n_len, RankMode::Floating, 1e-10))
            }
        };
        let cert = match cert {
            Ok(c) => c,
            Err(e) => return Ok(failed("independence", &e, &HEADERS)),
        };
        let verdict = Verdict::combine([Verdict::from_bool(cert.rank == p.m), cert.verdict]);
        series.push([
            trial.to_string(),
            p.m.to_string(),
            n_len.to_string(),
            cert.rank.to_string(),
            verdict.to_string(),
        ]);
        checks.push(Check::new(
            format!("trial_{trial}"),
            verdict,
            format!("rank {} of {} at N = {n_len}", cert.rank, p.m),
        ));
        certs.push(cert);
    }
    let verdict = Verdict::combine(checks.iter().map(|c| c.verdict));
    Ok(Outcome {
        report: VerificationReport {
            claim: claim_of("independence").into(),
            verdict,
            checks,
            measurements: json!({ "certificates": certs }),
        },
        series,
    })
}

pub fn escape(p: &EscapeParams) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 3] = ["N", "residual", "verdict"];
    let run = || -> Result<_, Error> {
        let mut fam = escape_family(p.k, p.z)?;
        if p.control == EscapeControl::Underfull {
            fam = fam.without(&GeneratorSpec::new(p.k as i32, p.z.exp())?);
        }
        escape_demo(p.k, p.z, &fam, None, p.tol)
    };
    let rep = match run() {
        Ok(r) => r,
        Err(e) => return Ok(failed("escape", &e, &HEADERS)),
    };
    let mut series = Series::new(&HEADERS);
    for (n, r) in rep.escape.truncations.iter().zip(&rep.escape.residuals) {
        let row_verdict = if *r <= p.tol {
            Membership::Member
        } else if *r >= 10.0 * p.tol {
            Membership::NonMember
        } else {
            Membership::Inconclusive
        };
        series.push([n.to_string(), r.to_string(), membership_str(row_verdict).to_string()]);
    }
    let report = VerificationReport::from_certificate(&rep, rep.checks.clone());
    Ok(Outcome { report, series })
}

fn membership_str(m: Membership) -> &'static str {
    match m {
        Membership::Member => "member",
        Membership::NonMember => "non_member",
        Membership::Inconclusive => "inconclusive",
    }
}

pub fn weak_analytic(p: &WeakAnalyticParams) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 3] = ["n", "cauchy_error", "triangle_relative"];
    if p.coords == 0 {
        return Err(usage("--coords must be positive"));
    }
    let mut fam = CurveFamily::exponential(Domain::default_u());
    if p.control == WeakControl::Conj {
        fam = fam.with_coordinate(3, |z: Complex64| z.conj());
    }
    let coords: Vec<u64> = (1..=p.coords).collect();
    let points = [p.z0, p.z0 + Complex64::new(0.1, 0.0), p.z0 + Complex64::new(0.0, 0.1)];
    let run = || -> Result<_, Error> {
        let weak = weak_analyticity_check(&fam, &coords, p.z0, p.r, &points, p.nodes, p.tol)?;
        let tri = Triangle::new(p.z0, p.z0 + Complex64::new(0.3, 0.0), p.z0 + Complex64::new(0.0, 0.3))?;
        let integral = triangle_integral(&fam, &tri, p.quad_order, p.coords as usize)?;
        let sup = boundary_sup(&fam, &tri, p.quad_order, p.coords as usize);
        let relative: Vec<f64> = integral.coords().iter().zip(&sup).map(|(v, s)| v.norm() / s).collect();
        Ok((weak, tri, integral, relative))
    };
    let (weak, tri, integral, relative) = match run() {
        Ok(v) => v,
        Err(e) => return Ok(failed("weak-analytic", &e, &HEADERS)),
    };
    let tri_ok = relative.iter().all(|&r| r <= p.tol);
    let checks = vec![
        Check::new(
            "coordinate_cauchy",
            weak.verdict,
            format!("failing coordinates {:?}", weak.failing_coordinates),
        ),
        Check::new(
            "triangle_integral",
            Verdict::from_bool(tri_ok),
            format!("max relative boundary integral {:e}", relative.iter().copied().fold(0.0, f64::max)),
        ),
    ];
    let mut series = Series::new(&HEADERS);
    for (i, n) in coords.iter().enumerate() {
        series.push([n.to_string(), weak.per_coordinate_errors[i].to_string(), relative[i].to_string()]);
    }
    let vertices: Vec<(f64, f64)> = tri.vertices().iter().map(|v| (v.re, v.im)).collect();
    let integral: Vec<(f64, f64)> = integral.coords().iter().map(|v| (v.re, v.im)).collect();
    Ok(Outcome {
        report: VerificationReport {
            claim: claim_of("weak-analytic").into(),
            verdict: Verdict::combine(checks.iter().map(|c| c.verdict)),
            checks,
            measurements: json!({
                "cauchy": weak,
                "triangle": { "vertices": vertices, "integral": integral, "relative": relative },
            }),
        },
        series,
    })
}

pub fn cauchy(p: &CauchyParams) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 2] = ["n", "relative_error"];
    let fam = match p.integrand {
        Integrand::Exp => CurveFamily::exponential(Domain::default_u()),
        Integrand::Conj => CurveFamily::conjugate(),
    };
    let rep = match cauchy_formula_check(&fam, p.z0, p.r, p.z, p.nodes, p.coords, p.tol) {
        Ok(r) => r,
        Err(e) => return Ok(failed("cauchy", &e, &HEADERS)),
    };
    let mut series = Series::new(&HEADERS);
    for (i, e) in rep.per_coordinate_errors.iter().enumerate() {
        series.push([(i + 1).to_string(), e.to_string()]);
    }
    let checks = vec![Check::new(
        "cauchy_formula",
        rep.verdict,
        format!("max relative error {:e}", rep.per_coordinate_errors.iter().copied().fold(0.0, f64::max)),
    )];
    Ok(Outcome {
        report: VerificationReport::from_certificate(&rep, checks),
        series,
    })
}

fn random_sparse(rng: &mut ChaCha8Rng) -> SummableVector<f64> {
    let support = rng.gen_range(0..=20usize);
    let mut pairs = Vec::with_capacity(support);
    for _ in 0..support {
        let k = rng.gen_range(1..=40u64);
        if pairs.iter().any(|&(j, _)| j == k) {
            continue;
        }
        let r = rng.gen_range(0.0..=3.0);
        let a = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        pairs.push((k, Complex64::from_polar(r, a)));
    }
    SummableVector::from_pairs(pairs).expect("distinct indices")
}

pub fn unbounded(p: &UnboundedParams, seed: u64) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 6] = ["case", "n", "m", "norm1_distance", "abs_value", "verdict"];
    let x = SummableVector::from_pairs(p.x.0.iter().copied()).map_err(|e| usage(e.to_string()))?;
    let run = || -> Result<_, Error> {
        let witness = unboundedness_witness(&x, p.bound)?;
        let local = local_unboundedness_demo(&x, p.radius, p.bound)?;
        Ok((witness, local))
    };
    let (witness, local) = match run() {
        Ok(v) => v,
        Err(e) => return Ok(failed("unbounded", &e, &HEADERS)),
    };
    let mut series = Series::new(&HEADERS);
    series.push([
        "witness".into(),
        "1".into(),
        witness.m.to_string(),
        witness.report.norm1_distance.to_string(),
        witness.g_of_y.norm().to_string(),
        witness.report.verdict.to_string(),
    ]);
    series.push([
        "local".into(),
        local.n.to_string(),
        local.witness.m.to_string(),
        local.distance.to_string(),
        Complex64::new(local.value.0, local.value.1).norm().to_string(),
        local.verdict.to_string(),
    ]);
    let mut checks = vec![
        Check::new(
            "witness",
            witness.report.verdict,
            format!("m = {}, |g(y)| = {}", witness.m, witness.g_of_y.norm()),
        ),
        Check::new(
            "local_witness",
            local.verdict,
            format!("n = {}, ||y - x||_1 = {} <= {}", local.n, local.distance, p.radius),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let targets = [10.0, 1e3, 1e6];
    let mut fuzz_failures = 0usize;
    for i in 0..p.fuzz {
        let xi = random_sparse(&mut rng);
        let target = targets[i % targets.len()];
        let (m, dist, val, verdict) = match unboundedness_witness(&xi, target) {
            Ok(w) => (w.m, w.report.norm1_distance, w.g_of_y.norm(), w.report.verdict),
            Err(_) => (0, f64::NAN, f64::NAN, Verdict::Fail),
        };
        if !verdict.is_pass() {
            fuzz_failures += 1;
        }
        series.push([
            format!("fuzz-{i}"),
            "1".into(),
            m.to_string(),
            dist.to_string(),
            val.to_string(),
            verdict.to_string(),
        ]);
    }
    if p.fuzz > 0 {
        checks.push(Check::new(
            "fuzz",
            Verdict::from_bool(fuzz_failures == 0),
            format!("{} of {} random centres sound", p.fuzz - fuzz_failures, p.fuzz),
        ));
    }
    Ok(Outcome {
        report: VerificationReport {
            claim: claim_of("unbounded").into(),
            verdict: Verdict::combine(checks.iter().map(|c| c.verdict)),
            checks,
            measurements: json!({ "witness": witness.report, "local": local }),
        },
        series,
    })
}

pub fn radius(p: &RadiusParams) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 2] = ["n", "radius"];
    let rep = match product_radius_demo::<f64>(p.n_max, p.terms) {
        Ok(r) => r,
        Err(e) => return Ok(failed("radius", &e, &HEADERS)),
    };
    let mut series = Series::new(&HEADERS);
    for (i, r) in rep.radii.iter().enumerate() {
        series.push([(i + 1).to_string(), r.to_string()]);
    }
    let checks = vec![Check::new(
        "infimum_below_bound",
        rep.verdict,
        format!("inf radius {} <= {}", rep.infimum, rep.bound),
    )];
    Ok(Outcome {
        report: VerificationReport::from_certificate(&rep, checks),
        series,
    })
}

pub fn taylor_global(p: &TaylorGlobalParams) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 5] = ["t0", "t", "n", "terms", "abs_error"];
    if p.grid == 0 || p.coords == 0 || !(p.lo <= p.hi) {
        return Err(usage("need --grid >= 1, --coords >= 1 and --lo <= --hi"));
    }
    let axis: Vec<f64> = if p.grid == 1 {
        vec![p.lo]
    } else {
        (0..p.grid)
            .map(|i| p.lo + (p.hi - p.lo) * i as f64 / (p.grid - 1) as f64)
            .collect()
    };
    let coords: Vec<u64> = (1..=p.coords).collect();
    let mut series = Series::new(&HEADERS);
    let mut checks = Vec::new();
    let mut points = Vec::new();
    for &t0 in &axis {
        for &t in &axis {
            let rep = match taylor_partial_sum_check(t0, t, &coords, p.terms, p.tol) {
                Ok(r) => r,
                Err(e) => return Ok(failed("taylor-global", &e, &HEADERS)),
            };
            let max_err = rep.coordinates.iter().map(|c| c.abs_error).fold(0.0, f64::max);
            let max_terms = rep.coordinates.iter().map(|c| c.terms).max().unwrap_or(0);
            for c in &rep.coordinates {
                series.push([
                    t0.to_string(),
                    t.to_string(),
                    c.n.to_string(),
                    c.terms.to_string(),
                    c.abs_error.to_string(),
                ]);
            }
            checks.push(Check::new(
                format!("t0={t0},t={t}"),
                rep.verdict,
                format!("max error {max_err:e} with K <= {max_terms}"),
            ));
            points.push(json!({
                "t0": t0, "t": t, "verdict": rep.verdict, "max_abs_error": max_err, "max_terms": max_terms,
            }));
        }
    }
    Ok(Outcome {
        report: VerificationReport {
            claim: claim_of("taylor-global").into(),
            verdict: Verdict::combine(checks.iter().map(|c| c.verdict)),
            checks,
            measurements: json!({ "points": points, "tolerance": p.tol }),
        },
        series,
    })
}

pub fn growth_failure(p: &GrowthFailureParams) -> Result<Outcome, CliError> {
    const HEADERS: [&str; 2] = ["n", "log_magnitude"];
    let rep = match complexification_failure_demo(p.t, (1, p.n_max), p.m_max) {
        Ok(r) => r,
        Err(e) => return Ok(failed("growth-failure", &e, &HEADERS)),
    };
    let mut series = Series::new(&HEADERS);
    for (n, l) in rep.growth.indices.iter().zip(&rep.growth.log_magnitudes) {
        series.push([n.to_string(), l.to_string()]);
    }
    Ok(Outcome {
        report: VerificationReport::from_certificate(&rep, rep.checks.clone()),
        series,
    })
}
