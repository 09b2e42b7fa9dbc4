use holoseq_core::holomorphy::{
    cauchy_formula_check, derivative_exact, difference_quotient, escape_demo, escape_family, grid_points, rate_check,
    triangle_integral, CurveFamily, Domain, Triangle, ESCAPE_TOL,
};
use holoseq_core::sequence::FormalSequence;
use holoseq_core::span::{span_membership_of, Membership};
use holoseq_core::Verdict;
use num_complex::Complex;
use proptest::prelude::*;

fn f() -> CurveFamily<f64> {
    CurveFamily::exponential(Domain::default_u())
}

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

#[test]
fn difference_quotients_are_second_order_on_a_grid() {
    for z in grid_points(&Domain::default_u(), 4) {
        for j in 1..=3 {
            let r = rate_check(&f(), j, z, c(1e-3, 0.0), 10).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "j={j} z={z} ratios={:?}", r.ratios);
        }
    }
}

#[test]
fn sup_norm_error_shrinks_fourfold() {
    let z = c(0.2, -0.3);
    let err = |h: f64| {
        let exact = derivative_exact(&f(), 2, z, 10).unwrap();
        let dq = difference_quotient(&f(), 2, z, c(h, 0.0), 10).unwrap();
        dq.coords()
            .iter()
            .zip(exact.coords())
            .map(|(a, e)| (a - e).norm() / e.norm())
            .fold(0.0, f64::max)
    };
    let ratio = err(1e-3) / err(5e-4);
    assert!((3.5..=4.5).contains(&ratio), "{ratio}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangle_additivity(
        a in (-0.8f64..0.8, -0.8f64..0.8),
        b in (-0.8f64..0.8, -0.8f64..0.8),
        d in (-0.8f64..0.8, -0.8f64..0.8),
        s in 0.1f64..0.9,
    ) {
        let (a, b, d) = (c(a.0, a.1), c(b.0, b.1), c(d.0, d.1));
        let parent = Triangle::new(a, b, d);
        prop_assume!(parent.is_ok());
        let parent = parent.unwrap();
        prop_assume!(parent.signed_area().abs() > 1e-3);
        // split along the segment from d to a point on [a, b]
        let p = a + (b - a) * s;
        let left = Triangle::new(a, p, d).unwrap();
        let right = Triangle::new(p, b, d).unwrap();
        // the conjugate integrand gives a nonzero parent integral to compare
        let fam = CurveFamily::conjugate();
        let whole = triangle_integral(&fam, &parent, 32, 1).unwrap().coords()[0];
        let parts = triangle_integral(&fam, &left, 32, 1).unwrap().coords()[0]
            + triangle_integral(&fam, &right, 32, 1).unwrap().coords()[0];
        prop_assert!((whole - parts).norm() <= 1e-12 * whole.norm().max(1e-3));
        let ex = f();
        let w = triangle_integral(&ex, &parent, 32, 10).unwrap();
        let l = triangle_integral(&ex, &left, 32, 10).unwrap();
        let r = triangle_integral(&ex, &right, 32, 10).unwrap();
        for i in 0..10 {
            let scale = (i as f64 + 1.0 * 0.8).exp();
            prop_assert!((w.coords()[i] - l.coords()[i] - r.coords()[i]).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn cauchy_result_is_radius_independent(x in -0.1f64..0.1, y in -0.1f64..0.1) {
        let z = c(x, y);
        let small = cauchy_formula_check(&f(), c(0.0, 0.0), 0.3, z, 256, 10, 1e-10).unwrap();
        let large = cauchy_formula_check(&f(), c(0.0, 0.0), 0.5, z, 256, 10, 1e-10).unwrap();
        prop_assert_eq!(small.verdict, Verdict::Pass);
        prop_assert_eq!(large.verdict, Verdict::Pass);
        for (a, b) in small.per_coordinate_errors.iter().zip(&large.per_coordinate_errors) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }
}

#[test]
fn trapezoid_converges_geometrically() {
    let z = c(0.1, 0.05);
    let mut prev: Option<Vec<f64>> = None;
    for nodes in [8usize, 16, 32, 64, 128, 256] {
        let r = cauchy_formula_check(&f(), c(0.0, 0.0), 0.5, z, nodes, 10, 1.0).unwrap();
        if let Some(p) = &prev {
            for (old, new) in p.iter().zip(&r.per_coordinate_errors) {
                // floor: a few hundred ulps of the coordinate
                assert!(*new <= old / 100.0 || *new <= 1e-13, "nodes {nodes}: {old:e} -> {new:e}");
            }
        }
        prev = Some(r.per_coordinate_errors);
    }
}

#[test]
fn escape_verdicts_survive_target_scaling() {
    let z = c(-0.3, 0.4);
    for k in 0..=2 {
        let fam = escape_family(k, z).unwrap();
        let report = escape_demo(k, z, &fam, None, ESCAPE_TOL).unwrap();
        let target = f().derivative_sequence(k + 1, z).unwrap();
        for s in [c(1e-8, 0.0), c(0.0, -7.0), c(1e6, 1e6)] {
            let cert = span_membership_of(&target.scale(s), &fam, &report.schedule, ESCAPE_TOL).unwrap();
            assert_eq!(cert.status(), Membership::NonMember);
            for (a, b) in cert.residuals.iter().zip(&report.escape.residuals) {
                assert!((a - b).abs() <= 1e-9 * b, "{a:e} vs {b:e}");
            }
        }
        // members stay members when scaled
        let member: FormalSequence<f64> = f().derivative_sequence(k, z).unwrap().scale(c(2.5, -1.0));
        let cert = span_membership_of(&member, &fam, &report.schedule, ESCAPE_TOL).unwrap();
        assert_eq!(cert.status(), Membership::Member);
    }
}

#[test]
fn underfull_family_reports_escape_at_order_k() {
    // dropping the order-k generator at e^z turns f^(k)(z) into a non-member
    let z = c(0.2, 0.0);
    let full = escape_family(1, z).unwrap();
    let target = full.generators().iter().find(|g| g.k() == 1 && (g.z() - z.exp()).norm() < 1e-15).copied().unwrap();
    let under = full.without(&target);
    let report = escape_demo(1, z, &under, None, ESCAPE_TOL).unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert_eq!(report.members[1].status(), Membership::NonMember);
}
