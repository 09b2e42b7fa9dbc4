//! Exact arithmetic over the Gaussian rationals `Q(i)` and fraction-free
//! elimination over the Gaussian integers `Z[i]`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::sequence::GeneratorSpec;

pub type GaussianRational = Complex<BigRational>;
pub type GaussianInteger = Complex<BigInt>;

/// Parses `p` or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
    }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Generator `n ↦ n^k z^n` with a Gaussian-rational base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactGenerator {
    k: i32,
    z: GaussianRational,
}

impl ExactGenerator {
    pub fn new(k: i32, z: GaussianRational) -> Result<Self> {
        if z.is_zero() {
            return Err(Error::ZeroBase);
        }
        Ok(Self { k, z })
    }

    /// Exact image of a floating generator. Every finite binary float is a
    /// dyadic rational, so this never rounds.
    pub fn from_spec<T: Real>(spec: &GeneratorSpec<T>) -> Result<Self> {
        let z = spec.z();
        let re = z.re.to_f64().and_then(BigRational::from_float).ok_or(Error::NotExact)?;
        let im = z.im.to_f64().and_then(BigRational::from_float).ok_or(Error::NotExact)?;
        Self::new(spec.k(), Complex::new(re, im))
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn z(&self) -> &GaussianRational {
        &self.z
    }

    pub fn triple(&self) -> (i32, f64, f64) {
        (self.k, rational_to_f64(&self.z.re), rational_to_f64(&self.z.im))
    }

    /// `|z|²` as an exact rational.
    pub fn modulus_sqr(&self) -> BigRational {
        &self.z.re * &self.z.re + &self.z.im * &self.z.im
    }

    pub fn eval(&self, n: u64) -> Result<GaussianRational> {
        if n == 0 {
            return Err(Error::IndexOutOfRange(0));
        }
        let e = u32::try_from(n).map_err(|_| Error::InvalidParameter("index too large for exact mode".into()))?;
        let power = self.z.powu(e);
        let nk = BigRational::from_integer(BigInt::from(n)).pow(self.k);
        Ok(Complex::new(&power.re * &nk, &power.im * &nk))
    }
}

fn max_component(row: &[GaussianRational]) -> BigRational {
    row.iter()
        .flat_map(|c| [c.re.abs(), c.im.abs()])
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a })
}

/// Divides a row by its largest component magnitude (a nonzero rational).
pub fn rescale_row(row: &[GaussianRational]) -> Vec<GaussianRational> {
    let m = max_component(row);
    if m.is_zero() {
        return row.to_vec();
    }
    row.iter().map(|c| Complex::new(&c.re / &m, &c.im / &m)).collect()
}

/// Multiplies a row by the lcm of its denominators, landing in `Z[i]`.
pub fn clear_denominators(row: &[GaussianRational]) -> Vec<GaussianInteger> {
    let lcm = row
        .iter()
        .flat_map(|c| [c.re.denom().clone(), c.im.denom().clone()])
        .fold(BigInt::one(), |a, b| a.lcm(&b));
    row.iter()
        .map(|c| {
            let re = (&c.re * BigRational::from_integer(lcm.clone())).to_integer();
            let im = (&c.im * BigRational::from_integer(lcm.clone())).to_integer();
            Complex::new(re, im)
        })
        .collect()
}

fn exact_div(a: &GaussianInteger, b: &GaussianInteger) -> GaussianInteger {
    let q = a / b;
    debug_assert_eq!(&(&q * b), a, "Bareiss division must be exact");
    q
}

/// Result of fraction-free elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct BareissOutcome {
    pub rank: usize,
    /// Determinant of the (integer) input when it is square.
    pub determinant: Option<GaussianInteger>,
}

/// Bareiss elimination over `Z[i]`. Each division is exact because every
/// intermediate entry is a minor of the input.
pub fn bareiss(mut m: Vec<Vec<GaussianInteger>>) -> BareissOutcome {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = GaussianInteger::one();
    let mut rank = 0;
    let mut sign_flip = false;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign_flip = !sign_flip;
        }
        for i in (rank + 1)..rows {
            for j in (col + 1)..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = exact_div(&num, &prev);
            }
            m[i][col] = GaussianInteger::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let determinant = (rows == cols).then(|| {
        if rank < rows {
            GaussianInteger::zero()
        } else if sign_flip {
            -prev.clone()
        } else {
            prev.clone()
        }
    });
    BareissOutcome { rank, determinant }
}

/// Rank and (square case) determinant by Gaussian elimination over the field
/// `Q(i)`, without any row scaling.
pub fn field_elimination(mut m: Vec<Vec<GaussianRational>>) -> (usize, Option<GaussianRational>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut det = GaussianRational::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            det = -det;
        }
        let pivot = m[rank][col].clone();
        det *= pivot.clone();
        for i in (rank + 1)..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &pivot;
            for j in col..cols {
                let t = &factor * &m[rank][j];
                m[i][j] -= t;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let det = (rows == cols).then(|| if rank < rows { GaussianRational::zero() } else { det });
    (rank, det)
}
