use holoseq_core::exact::ExactGenerator;
use holoseq_core::sequence::{FormalSequence, GeneratorSpec};
use holoseq_core::span::{
    default_schedule, independence_rank, independence_rank_exact, span_membership, span_membership_of, Membership,
    RankMode, SpanningFamily,
};
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use proptest::prelude::*;

/// Pairwise-distinct generators with Gaussian-rational bases `(a + bi)/q`,
/// `1/4 <= |z| <= 4`, exponents `0..=3`.
fn family(max_len: usize) -> impl Strategy<Value = Vec<(i32, i64, i64, i64)>> {
    prop::collection::vec((0i32..=3, -16i64..=16, -16i64..=16, 1i64..=4), 1..=max_len).prop_map(|raw| {
        let mut out: Vec<(i32, i64, i64, i64)> = Vec::new();
        for (k, a, b, q) in raw {
            let r2 = (a * a + b * b) as f64 / (q * q) as f64;
            if !(1.0 / 16.0..=16.0).contains(&r2) {
                continue;
            }
            let dup = out.iter().any(|&(k2, a2, b2, q2)| k2 == k && a2 * q == a * q2 && b2 * q == b * q2);
            if !dup {
                out.push((k, a, b, q));
            }
        }
        out
    })
}

fn exact_gens(raw: &[(i32, i64, i64, i64)]) -> Vec<ExactGenerator> {
    raw.iter()
        .map(|&(k, a, b, q)| {
            let z = Complex::new(
                BigRational::new(BigInt::from(a), BigInt::from(q)),
                BigRational::new(BigInt::from(b), BigInt::from(q)),
            );
            ExactGenerator::new(k, z).unwrap()
        })
        .collect()
}

fn float_family(raw: &[(i32, i64, i64, i64)]) -> SpanningFamily<f64> {
    let gens = raw
        .iter()
        .map(|&(k, a, b, q)| GeneratorSpec::new(k, Complex::new(a as f64 / q as f64, b as f64 / q as f64)).unwrap())
        .collect();
    SpanningFamily::new("random", gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn confluent_vandermonde_exact(raw in family(12)) {
        prop_assume!(!raw.is_empty());
        let gens = exact_gens(&raw);
        let cert = independence_rank_exact(&gens, gens.len(), true).unwrap();
        prop_assert_eq!(cert.rank, gens.len());
    }

    #[test]
    fn row_rescaling_preserves_exact_rank(raw in family(8), extra in 0usize..4) {
        prop_assume!(!raw.is_empty());
        let gens = exact_gens(&raw);
        let n = gens.len() + extra;
        let scaled = independence_rank_exact(&gens, n, true).unwrap();
        let plain = independence_rank_exact(&gens, n, false).unwrap();
        prop_assert_eq!(scaled.rank, plain.rank);
    }

    #[test]
    fn confluent_vandermonde_floating(raw in family(12)) {
        prop_assume!(!raw.is_empty());
        let fam = float_family(&raw);
        let cert = independence_rank(&fam, fam.len(), RankMode::Floating, 1e-10).unwrap();
        prop_assert_eq!(cert.rank, fam.len());
        let sv = cert.singular_values.unwrap();
        prop_assert!(sv[sv.len() - 1] >= 1e-10 * sv[0]);
    }

    #[test]
    fn membership_is_order_independent(raw in family(6), pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        prop_assume!(!raw.is_empty());
        let fam = float_family(&raw);
        let target = fam.generators()[pick.index(fam.len())];
        let mut shuffled = fam.generators().to_vec();
        // deterministic permutation from the seed
        let len = shuffled.len();
        for i in (1..len).rev() {
            let j = ((seed >> (i % 48)) as usize ^ i.wrapping_mul(2654435761)) % (i + 1);
            shuffled.swap(i, j);
        }
        let fam2 = SpanningFamily::new("shuffled", shuffled).unwrap();
        let schedule = default_schedule(len);
        for f in [&fam, &fam2] {
            let cert = span_membership(&target, f, &schedule, 1e-8).unwrap();
            prop_assert_eq!(cert.status(), Membership::Member);
            let pos = f.position(&target).unwrap();
            for (i, c) in cert.coefficients.iter().enumerate() {
                let want = if i == pos { 1.0 } else { 0.0 };
                prop_assert!((c.0 - want).abs() < 1e-6 && c.1.abs() < 1e-6, "{:?}", cert.coefficients);
            }
        }
    }
}

#[test]
fn spec_rank_examples() {
    let r = |re: f64| Complex::new(re, 0.0);
    let fam = SpanningFamily::new("a", vec![GeneratorSpec::new(0, r(2.0)).unwrap()]).unwrap();
    assert_eq!(independence_rank(&fam, 1, RankMode::Exact, 1e-10).unwrap().rank, 1);
    let fam = SpanningFamily::new(
        "b",
        vec![
            GeneratorSpec::new(0, r(1.0)).unwrap(),
            GeneratorSpec::new(0, r(-1.0)).unwrap(),
            GeneratorSpec::new(1, r(1.0)).unwrap(),
        ],
    )
    .unwrap();
    let cert = independence_rank(&fam, 3, RankMode::Exact, 1e-10).unwrap();
    assert_eq!(cert.rank, 3);
    assert_eq!(cert.determinant, Some(("4".to_string(), "0".to_string())));
}

#[test]
fn membership_scale_invariance() {
    let z = Complex::new(0.2f64, 0.1).exp();
    let fam = SpanningFamily::sample_e_k(1, &[Complex::new(0.2, 0.1), Complex::new(0.2, 0.9)]).unwrap();
    let target = GeneratorSpec::new(2, z).unwrap();
    let schedule = default_schedule(fam.len());
    let base = span_membership(&target, &fam, &schedule, 1e-12).unwrap();
    for s in [Complex::new(1e-6, 0.0), Complex::new(-3.0, 4.0), Complex::new(0.0, 1e5)] {
        let scaled = FormalSequence::generator(target).scale(s);
        let cert = span_membership_of(&scaled, &fam, &schedule, 1e-12).unwrap();
        assert_eq!(cert.status(), base.status());
        for (a, b) in cert.residuals.iter().zip(&base.residuals) {
            assert!((a - b).abs() <= 1e-12 * b.max(1e-300), "{a} vs {b}");
        }
    }
}
