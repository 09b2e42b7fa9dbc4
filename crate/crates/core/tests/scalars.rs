use holoseq_core::ell1::{g_eval, unboundedness_witness, SummableVector};
use holoseq_core::holomorphy::{cauchy_formula_check, derivative_exact, CurveFamily, Domain};
use holoseq_core::real_analytic::{complexification_failure_demo, growth_exponent_probe, real_sine_sequence, GrowthClass};
use holoseq_core::scalar::{lit, Real};
use holoseq_core::sequence::{truncate, GeneratorSpec, FormalSequence};
use holoseq_core::span::{independence_rank, RankMode, SpanningFamily};
use holoseq_core::Verdict;
use num_complex::Complex;

fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(lit(re), lit(im))
}

fn pipeline<T: Real>(tol: f64) {
    let g = GeneratorSpec::<T>::new(2, c(2.0, 0.0)).unwrap();
    let v = truncate(&FormalSequence::generator(g), 3).unwrap();
    assert_eq!(v.coords(), &[c(2.0, 0.0), c(16.0, 0.0), c(72.0, 0.0)]);

    let fam = SpanningFamily::<T>::new(
        "pair",
        vec![GeneratorSpec::new(0, c(2.0, 0.0)).unwrap(), GeneratorSpec::new(1, c(2.0, 0.0)).unwrap()],
    )
    .unwrap();
    assert_eq!(independence_rank(&fam, 2, RankMode::Floating, lit(1e-5)).unwrap().rank, 2);
    assert_eq!(independence_rank(&fam, 2, RankMode::Exact, lit(1e-5)).unwrap().rank, 2);

    let f = CurveFamily::<T>::exponential(Domain::default_u());
    let d = derivative_exact(&f, 1, c(0.0, 0.0), 4).unwrap();
    assert_eq!(d.coords()[3], c(4.0, 0.0));
    let r = cauchy_formula_check(&f, c(0.0, 0.0), lit(0.5), c(0.1, 0.0), 256, 5, lit(tol)).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.per_coordinate_errors);

    let x = SummableVector::<T>::from_pairs([(1, c(0.5, 0.0))]).unwrap();
    assert_eq!(g_eval(&x).unwrap(), c(0.5, 0.0));
    assert_eq!(unboundedness_witness(&x, lit(100.0)).unwrap().m, 7);

    let p = growth_exponent_probe(&real_sine_sequence::<T>(lit(0.7)), 4, (1, 200)).unwrap();
    assert_eq!(p.exponent_or_flag, GrowthClass::Exponent(0));
    let demo = complexification_failure_demo::<T>(lit(0.1), (1, 300), 20).unwrap();
    assert_eq!(demo.verdict, Verdict::Pass);
}

#[test]
fn f64_pipeline() {
    pipeline::<f64>(1e-10);
}

#[test]
fn f32_pipeline() {
    pipeline::<f32>(1e-5);
}
