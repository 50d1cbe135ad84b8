//! Exact univariate polynomials over arbitrary-precision rationals, with
//! Sturm sequences for real-root counting and rigorous root brackets.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Nearest-ish `f64` of a rational (exact for small dyadic values).
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational from a finite `f64`.
pub fn rat_from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

/// Coefficients in ascending degree order; trailing zeros are trimmed so the
/// last entry is the leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Poly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let c = &rem[shift + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * d;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&rat(-1)));
        }
        seq
    }

    /// Upper bound on the modulus of every root (Cauchy).
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let max = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        max + Rational::one()
    }
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Number of distinct real roots in `(a, b]` (Sturm's theorem).
pub fn count_roots_in(seq: &[Poly], a: &Rational, b: &Rational) -> usize {
    sign_changes(seq, a).saturating_sub(sign_changes(seq, b))
}

/// Interval `(lo, hi]` of width at most `width` holding the largest real
/// root, with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootBracket {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        rat_to_f64(&((&self.lo + &self.hi) / rat(2)))
    }
}

impl Poly {
    /// Brackets the largest real root by Sturm-guided bisection; `None` if
    /// the polynomial has no real root.
    pub fn largest_real_root(&self, width: &Rational) -> Option<RootBracket> {
        self.degree().filter(|&d| d >= 1)?;
        let seq = self.sturm_sequence();
        let bound = self.cauchy_bound();
        let mut lo = -bound.clone() - Rational::one();
        let mut hi = bound + Rational::one();
        if count_roots_in(&seq, &lo, &hi) == 0 {
            return None;
        }
        let two = rat(2);
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / &two;
            if count_roots_in(&seq, &mid, &hi) > 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(RootBracket { lo, hi })
    }

    /// Sign of the polynomial on the whole closed interval, certified by
    /// showing it has no root there; `None` when a root may lie inside.
    pub fn certified_sign_on(&self, lo: &Rational, hi: &Rational) -> Option<i8> {
        let at_lo = self.eval(lo);
        if at_lo.is_zero() {
            return None;
        }
        let seq = self.sturm_sequence();
        if count_roots_in(&seq, lo, hi) != 0 {
            return None;
        }
        Some(if at_lo.is_positive() { 1 } else { -1 })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidMatrix("rows must all have length equal to the row count".into()));
        }
        Ok(RationalMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Rational::zero(); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Rational::one();
        }
        RationalMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.dim.max(1)).map(<[Rational]>::to_vec).collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.dim.max(1))
            .map(|r| r.iter().map(rat_to_f64).collect())
            .collect()
    }

    fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        let n = self.dim;
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        RationalMatrix { dim: n, data }
    }

    fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }
}

/// Largest dimension accepted by [`char_poly`].
pub const MAX_CHARPOLY_DIM: usize = 12;

/// `det(xI - M)` by the Faddeev–LeVerrier recurrence, exactly.
pub fn char_poly(m: &RationalMatrix) -> Result<Poly> {
    let n = m.dim();
    if n > MAX_CHARPOLY_DIM {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_CHARPOLY_DIM });
    }
    // coefficients c[n] = 1, c[n-k] = -tr(M * N_k) / k with N_1 = I,
    // N_{k+1} = M * N_k + c[n-k] I
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut nk = RationalMatrix::identity(n);
    for k in 1..=n {
        let mnk = m.mul(&nk);
        c[n - k] = -mnk.trace() / rat(k as i64);
        let mut next = mnk;
        for i in 0..n {
            next.data[i * n + i] += &c[n - k];
        }
        nk = next;
    }
    Ok(Poly::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_small_cases() {
        let swap = RationalMatrix::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(char_poly(&swap).unwrap(), Poly::from_integers(&[-1, 0, 1]));
        let diag = RationalMatrix::from_integers(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]).unwrap();
        let expect = Poly::from_integers(&[-2, 1])
            .mul(&Poly::from_integers(&[-3, 1]))
            .mul(&Poly::from_integers(&[-5, 1]));
        assert_eq!(char_poly(&diag).unwrap(), expect);
        assert_eq!(char_poly(&RationalMatrix::identity(0)).unwrap(), Poly::from_integers(&[1]));
        let big = RationalMatrix::identity(13);
        assert!(matches!(char_poly(&big), Err(Error::DimensionTooLarge { .. })));
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        // 3x3 determinant of xI - M expanded by hand
        let m = RationalMatrix::from_integers(&[vec![1, 2, 0], vec![3, 0, 4], vec![0, 5, 6]]).unwrap();
        // trace 7; principal 2-minors: (0-6) + (6-0) + (0-20) = -20; det = 1*(0-20) - 2*(18-0) + 0 = -56
        assert_eq!(char_poly(&m).unwrap(), Poly::from_integers(&[56, -20, -7, 1]));
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_integers(&[5, -3, 0, 2, 7]);
        let b = Poly::from_integers(&[1, 4, 3]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&b).sub(&a.scale(&rat(1))).sub(&r.scale(&rat(-1))), Poly::zero());
    }

    #[test]
    fn sturm_counts_and_bracket() {
        // (x-1)(x-2)(x+3)
        let p = Poly::from_integers(&[-1, 1])
            .mul(&Poly::from_integers(&[-2, 1]))
            .mul(&Poly::from_integers(&[3, 1]));
        let seq = p.sturm_sequence();
        assert_eq!(count_roots_in(&seq, &rat(-10), &rat(10)), 3);
        assert_eq!(count_roots_in(&seq, &rat(0), &rat(1)), 1);
        assert_eq!(count_roots_in(&seq, &rat(1), &rat(2)), 1);
        let br = p.largest_real_root(&rat_frac(1, 1_000_000)).unwrap();
        assert!(br.lo < rat(2) && rat(2) <= br.hi);
        // x^2 + 1 has no real root
        assert!(Poly::from_integers(&[1, 0, 1]).largest_real_root(&rat(1)).is_none());
        // sqrt(2) bracket
        let br = Poly::from_integers(&[-2, 0, 1]).largest_real_root(&rat_frac(1, 1 << 40)).unwrap();
        assert!((br.midpoint_f64() - 2f64.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn certified_signs() {
        let p = Poly::from_integers(&[-2, 0, 1]);
        assert_eq!(p.certified_sign_on(&rat(0), &rat(1)), Some(-1));
        assert_eq!(p.certified_sign_on(&rat(2), &rat(3)), Some(1));
        assert_eq!(p.certified_sign_on(&rat(1), &rat(2)), None);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_integers(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(Poly::from_integers(&[0, -3, 0, 1]).to_string(), "x^3 - 3x");
    }
}
