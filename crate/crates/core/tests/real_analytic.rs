use holoseq_core::real_analytic::{
    growth_exponent_probe, product_radius_demo, sin_family_derivative, sinh_bound_sign_changes, sinh_bound_threshold,
    taylor_partial_sum_check, taylor_radius_estimate, GrowthClass, TaylorSeries1D,
};
use holoseq_core::sequence::FormalSequence;
use holoseq_core::Verdict;
use num_complex::Complex;
use proptest::prelude::*;

#[test]
fn root_test_tracks_inverse_index() {
    for n in 1..=50u64 {
        let est = taylor_radius_estimate(&TaylorSeries1D::<f64>::runge(n, 40).unwrap(), 40).unwrap();
        let target = 1.0 / n as f64;
        assert!((0.9 * target..=1.1 * target).contains(&est.radius), "n={n}: {}", est.radius);
    }
}

#[test]
fn product_infimum_shrinks() {
    for n_max in [10, 50] {
        let r = product_radius_demo::<f64>(n_max, 40).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.infimum <= 1.1 / n_max as f64);
    }
}

#[test]
fn taylor_expansion_is_global_on_a_grid() {
    let coords: Vec<u64> = (1..=10).collect();
    let grid: Vec<f64> = (0..9).map(|i| -2.0 + 0.5 * i as f64).collect();
    for &t0 in &grid {
        for &t in &grid {
            let r = taylor_partial_sum_check(t0, t, &coords, None, 1e-10).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "t0={t0} t={t}");
        }
    }
}

#[test]
fn derivatives_match_central_differences() {
    let h = 1e-3;
    for t in [-1.3, 0.0, 0.4, 2.1] {
        for j in 1..=3u32 {
            let exact = sin_family_derivative(j, t, 10).unwrap();
            let err = |h: f64| {
                let up = sin_family_derivative(j - 1, t + h, 10).unwrap();
                let dn = sin_family_derivative(j - 1, t - h, 10).unwrap();
                up.coords()
                    .iter()
                    .zip(dn.coords())
                    .zip(exact.coords())
                    .enumerate()
                    .map(|(i, ((a, b), e))| ((a - b) / (2.0 * h) - e).norm() / ((i + 1) as f64).powi(j as i32))
                    .fold(0.0, f64::max)
            };
            let (e1, e2) = (err(h), err(h / 2.0));
            assert!(e1 <= 1e-4, "j={j} t={t}: {e1}");
            // symmetric points can make both quotients exact
            if e1 > 1e-12 {
                assert!((3.5..=4.5).contains(&(e1 / e2)), "j={j} t={t}: ratio {}", e1 / e2);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exponent_passes_are_monotone(p in 0.0f64..6.0, amp in 0.1f64..10.0, osc in 0.0f64..1.0) {
        let seq = FormalSequence::from_fn("n^p", move |n| {
            let nf = n as f64;
            Complex::new(amp * nf.powf(p) * (1.5 + (osc * nf).sin()), 0.0)
        });
        let prof = growth_exponent_probe(&seq, 10, (1, 256)).unwrap();
        let first = prof.trials.iter().position(|t| t.pass);
        if let Some(i) = first {
            prop_assert!(prof.trials[i..].iter().all(|t| t.pass));
            prop_assert_eq!(prof.exponent_or_flag, GrowthClass::Exponent(i as u32));
        }
    }
}

#[test]
fn sinh_threshold_is_bracketed_once() {
    let cells = sinh_bound_sign_changes(0.0, 3.0, 4_000_000);
    assert_eq!(cells.len(), 1);
    let (a, b) = cells[0];
    assert!(b - a <= 1e-6);
    assert!(a <= sinh_bound_threshold() && sinh_bound_threshold() <= b);
}
