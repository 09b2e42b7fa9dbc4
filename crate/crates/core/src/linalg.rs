//! Dense complex linear algebra: one-sided Jacobi SVD and truncated
//! least squares.

use num_complex::Complex;

use crate::scalar::{lit, Real};

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Complex::new(T::zero(), T::zero()), |acc, j| acc + self.get(i, j) * x[j])
            })
            .collect()
    }
}

pub fn norm2<T: Real>(v: &[Complex<T>]) -> T {
    // scaled to avoid overflow in the squares
    let scale = v.iter().map(|c| c.re.abs().max(c.im.abs())).fold(T::zero(), T::max);
    if scale.is_zero() {
        return T::zero();
    }
    let sum = v.iter().fold(T::zero(), |acc, c| acc + (c / scale).norm_sqr());
    scale * sum.sqrt()
}

/// Thin SVD `A = U Σ V^H` of an `r × c` matrix.
#[derive(Debug, Clone)]
pub struct Svd<T> {
    /// Columns of `U` (length `rows` each), one per singular value.
    pub u: Vec<Vec<Complex<T>>>,
    /// Descending singular values.
    pub sigma: Vec<T>,
    /// Columns of `V` (length `cols` each).
    pub v: Vec<Vec<Complex<T>>>,
}

/// One-sided (Hestenes) Jacobi SVD. Works on the columns of `A`, so it is
/// intended for `rows >= cols`; wide inputs yield at most `rows` nonzero
/// singular values.
pub fn svd<T: Real>(a: &Matrix<T>) -> Svd<T> {
    let (m, n) = (a.rows, a.cols);
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let mut cols: Vec<Vec<Complex<T>>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<Complex<T>>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { one } else { zero }).collect())
        .collect();
    let eps = T::epsilon();
    let two = lit::<T>(2.0);

    for _sweep in 0..80 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = cols[p].iter().fold(T::zero(), |s, x| s + x.norm_sqr());
                let beta = cols[q].iter().fold(T::zero(), |s, x| s + x.norm_sqr());
                let gamma = cols[p]
                    .iter()
                    .zip(&cols[q])
                    .fold(zero, |s, (x, y)| s + x.conj() * y);
                let g = gamma.norm();
                if g.is_zero() || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (two * g);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let cs = T::one() / (T::one() + t * t).sqrt();
                let sn = cs * t;
                // x' = c x - s e^{-iφ} y,  y' = s e^{iφ} x + c y
                for block in [&mut cols, &mut v] {
                    let (left, right) = block.split_at_mut(q);
                    let (x, y) = (&mut left[p], &mut right[0]);
                    for (xi, yi) in x.iter_mut().zip(y.iter_mut()) {
                        let (xo, yo) = (*xi, *yi);
                        *xi = xo * cs - yo * phase.conj() * sn;
                        *yi = xo * phase * sn + yo * cs;
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<(T, usize)> = cols.iter().enumerate().map(|(j, c)| (norm2(c), j)).collect();
    order.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(std::cmp::Ordering::Equal).then(a.1.cmp(&b.1)));
    let mut out = Svd {
        u: Vec::with_capacity(n),
        sigma: Vec::with_capacity(n),
        v: Vec::with_capacity(n),
    };
    for (s, j) in order {
        let u = if s.is_zero() {
            vec![zero; m]
        } else {
            cols[j].iter().map(|x| x / s).collect()
        };
        out.u.push(u);
        out.sigma.push(s);
        out.v.push(v[j].clone());
    }
    out
}

/// Solution of `min ‖A c − b‖₂`.
#[derive(Debug, Clone)]
pub struct LeastSquares<T> {
    pub coefficients: Vec<Complex<T>>,
    pub residual_norm: T,
    /// Singular values of the column-equilibrated matrix.
    pub sigma: Vec<T>,
    /// Number of singular values kept (those `>= tol_rel · σ_max`).
    pub rank: usize,
}

/// Least squares through a truncated pseudo-inverse. Columns are
/// equilibrated to unit norm first; the returned coefficients refer to the
/// original columns. Singular values below `tol_rel · σ_max` are dropped.
pub fn least_squares<T: Real>(a: &Matrix<T>, b: &[Complex<T>], tol_rel: T) -> LeastSquares<T> {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let zero = Complex::new(T::zero(), T::zero());
    let col_norms: Vec<T> = (0..a.cols).map(|j| norm2(&a.column(j))).collect();
    let mut scaled = a.clone();
    for i in 0..a.rows {
        for (j, &cn) in col_norms.iter().enumerate() {
            let v = if cn.is_zero() { zero } else { a.get(i, j) / cn };
            scaled.set(i, j, v);
        }
    }
    let dec = svd(&scaled);
    let smax = dec.sigma.first().copied().unwrap_or_else(T::zero);
    let mut y = vec![zero; a.cols];
    let mut rank = 0;
    for ((u, &s), v) in dec.u.iter().zip(&dec.sigma).zip(&dec.v) {
        if s.is_zero() || s < tol_rel * smax {
            continue;
        }
        rank += 1;
        let proj = u.iter().zip(b).fold(zero, |acc, (ui, bi)| acc + ui.conj() * bi) / s;
        for (yj, vj) in y.iter_mut().zip(v) {
            *yj = *yj + vj * proj;
        }
    }
    let coefficients: Vec<Complex<T>> = y
        .iter()
        .zip(&col_norms)
        .map(|(yj, &cn)| if cn.is_zero() { zero } else { yj / cn })
        .collect();
    let fitted = scaled.mul_vec(&y);
    let resid: Vec<Complex<T>> = fitted.iter().zip(b).map(|(f, bi)| bi - f).collect();
    LeastSquares {
        coefficients,
        residual_norm: norm2(&resid),
        sigma: dec.sigma,
        rank,
    }
}
