//! Gauss–Legendre rules on segments and the uniform trapezoid rule on
//! circles, both for complex-valued integrands along complex paths.

use num_complex::Complex;

use crate::scalar::{from_usize, lit, Real};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    /// Computes the rule by Newton iteration on `P_n`. Panics if `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss-Legendre order must be positive");
        let nf = from_usize::<T>(n);
        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        let half = n.div_ceil(2);
        for i in 0..half {
            let mut x = (T::PI() * (from_usize::<T>(i) + lit(0.75)) / (nf + lit(0.5))).cos();
            let mut dp = T::one();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x = x - dx;
                if dx.abs() <= T::epsilon() * lit(4.0) {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if !d.is_zero() {
                dp = d;
            }
            let w = lit::<T>(2.0) / ((T::one() - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = T::zero();
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// `∫_a^b f(ζ) dζ` along the straight segment from `a` to `b`.
    pub fn integrate_segment<F>(&self, a: Complex<T>, b: Complex<T>, mut f: F) -> Complex<T>
    where
        F: FnMut(Complex<T>) -> Complex<T>,
    {
        let half = (b - a) / lit::<T>(2.0);
        let mid = (a + b) / lit::<T>(2.0);
        let sum = self
            .nodes
            .iter()
            .zip(&self.weights)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (&x, &w)| acc + f(mid + half * x) * w);
        sum * half
    }

    /// Points on the segment where the integrand is sampled.
    pub fn segment_points(&self, a: Complex<T>, b: Complex<T>) -> Vec<Complex<T>> {
        let half = (b - a) / lit::<T>(2.0);
        let mid = (a + b) / lit::<T>(2.0);
        self.nodes.iter().map(|&x| mid + half * x).collect()
    }
}

fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = from_usize::<T>(k);
        let p2 = ((lit::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = from_usize::<T>(n);
    let d = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, d)
}

/// Uniform trapezoid rule for `∮_{|ζ − z0| = r} f(ζ) dζ`, counter-clockwise.
pub fn circle_integral<T, F>(z0: Complex<T>, r: T, nodes: usize, mut f: F) -> Complex<T>
where
    T: Real,
    F: FnMut(Complex<T>) -> Complex<T>,
{
    let step = T::TAU() / from_usize::<T>(nodes);
    let i = Complex::new(T::zero(), T::one());
    let sum = (0..nodes).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
        let offset = Complex::from_polar(r, step * from_usize(j));
        acc + f(z0 + offset) * i * offset
    });
    sum * step
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_rules_match_tables() {
        let r = GaussLegendre::<f64>::new(2);
        assert!((r.nodes()[1] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((r.weights()[0] - 1.0).abs() < 1e-15);
        let r = GaussLegendre::<f64>::new(3);
        assert!((r.nodes()[2] - (0.6f64).sqrt()).abs() < 1e-15);
        assert!((r.weights()[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn weights_sum_to_two_and_polys_exact() {
        for n in [1, 5, 16, 32, 64] {
            let r = GaussLegendre::<f64>::new(n);
            let s: f64 = r.weights().iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n}: {s}");
            // degree 2n-1 monomial integrates exactly
            let deg = 2 * n as i32 - 2;
            let approx: f64 = r.nodes().iter().zip(r.weights()).map(|(x, w)| w * x.powi(deg)).sum();
            assert!((approx - 2.0 / (deg as f64 + 1.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn f32_rule_is_usable() {
        let r = GaussLegendre::<f32>::new(8);
        let s: f32 = r.weights().iter().sum();
        assert!((s - 2.0).abs() < 1e-5);
    }

    #[test]
    fn segment_integral_of_exp() {
        let r = GaussLegendre::<f64>::new(16);
        let (a, b) = (Complex::new(0.0, 0.0), Complex::new(0.3, 0.7));
        let got = r.integrate_segment(a, b, |z| z.exp());
        assert!((got - (b.exp() - a.exp())).norm() < 1e-14);
    }

    #[test]
    fn circle_integral_residue() {
        // ∮ 1/ζ dζ = 2πi
        let got = circle_integral(Complex::new(0.0, 0.0), 0.5, 64, |z: Complex<f64>| z.inv());
        assert!((got - Complex::new(0.0, std::f64::consts::TAU)).norm() < 1e-13);
    }
}
