use holoseq_core::ell1::{
    f_component_eval, g_eval, g_eval_tail, local_unboundedness_demo, unboundedness_witness, uniform_ball_bound,
    SummableVector,
};
use holoseq_core::Verdict;
use num_complex::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sparse(max_support: usize, max_abs: f64) -> impl Strategy<Value = SummableVector<f64>> {
    prop::collection::btree_map(1u64..=40, (0.0..max_abs, -std::f64::consts::PI..std::f64::consts::PI), 0..=max_support)
        .prop_map(|m| SummableVector::from_pairs(m.into_iter().map(|(k, (r, a))| (k, Complex::from_polar(r, a)))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn witness_is_sound(x in sparse(20, 3.0), which in 0usize..3) {
        let n_target = [10.0, 1e3, 1e6][which];
        let w = unboundedness_witness(&x, n_target).unwrap();
        prop_assert!(w.report.norm1_distance <= 2.0);
        prop_assert!(w.g_of_y.norm() >= n_target);
        prop_assert!(w.report.inequality_check.holds);
        prop_assert_eq!(w.report.verdict, Verdict::Pass);
    }

    #[test]
    fn witness_index_is_monotone_in_n(x in sparse(10, 3.0), a in 0.0f64..1e6, b in 0.0f64..1e6) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(unboundedness_witness(&x, lo).unwrap().m <= unboundedness_witness(&x, hi).unwrap().m);
    }

    #[test]
    fn tail_bound_certifies_truncation(x in sparse(30, 0.2499), m in 1u64..40) {
        let exact = g_eval(&x).unwrap();
        let (partial, tail) = g_eval_tail(&x, m).unwrap();
        prop_assert!((exact - partial).norm() <= tail.bound * (1.0 + 1e-12) + 1e-300);
    }

    #[test]
    fn scaling_identity(x in sparse(10, 0.5), n in 1u64..8) {
        let lhs = f_component_eval(&x, n).unwrap();
        let rhs = g_eval(&x.scale(Complex::new(n as f64, 0.0))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contracted_points_stay_in_envelope(x in sparse(15, 0.2499), re in -1.0f64..1.0, im in -1.0f64..1.0) {
        let lambda = Complex::new(re, im);
        prop_assume!(lambda.norm() <= 1.0);
        let y = x.scale(lambda);
        let bound = uniform_ball_bound(&x, 0.25, 1).unwrap().bound;
        prop_assert!(g_eval(&y).unwrap().norm() <= bound);
    }
}

#[test]
fn monte_carlo_ball_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let center = SummableVector::from_pairs((1..=6).map(|k| (k, Complex::new(0.2 / k as f64, -0.1)))).unwrap();
    for m in [1u64, 3, 5] {
        let bound = uniform_ball_bound(&center, 0.25, m).unwrap().bound;
        for _ in 0..100 {
            // a random direction scaled to l1 norm just under 1/4
            let raw: Vec<(u64, Complex<f64>)> = (1..=12)
                .map(|k| (k, Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
                .collect();
            let total: f64 = raw.iter().map(|p| p.1.norm()).sum();
            let r = rng.gen_range(0.0..0.2499);
            let delta = SummableVector::from_pairs(raw.into_iter().map(|(k, v)| (k, v * (r / total)))).unwrap();
            let y = center.sub(&delta.scale(Complex::new(-1.0, 0.0)));
            assert!(y.distance(&center) < 0.25);
            let tail: Vec<(u64, Complex<f64>)> = y.iter().filter(|&(k, _)| k >= m).collect();
            let g_tail = g_eval(&SummableVector::from_pairs(tail).unwrap()).unwrap();
            let abs_sum: f64 = y.iter().filter(|&(k, _)| k >= m).map(|(k, v)| (2.0 * v.norm_sqr()).powi(k as i32)).sum();
            assert!(g_tail.norm() <= abs_sum + 1e-15 && abs_sum <= bound, "m={m}: {abs_sum} > {bound}");
        }
    }
}

#[test]
fn local_demo_respects_radius() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let x = SummableVector::from_pairs(
            (1..=rng.gen_range(0..8u64)).map(|k| (k * 3, Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)))),
        )
        .unwrap();
        for radius in [2.0, 0.5, 0.01] {
            let rep = local_unboundedness_demo(&x, radius, 1e6).unwrap();
            assert!(rep.distance <= radius * (1.0 + 1e-12));
            assert_eq!(rep.verdict, Verdict::Pass);
        }
    }
}
