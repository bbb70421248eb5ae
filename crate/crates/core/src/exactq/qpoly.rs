//! Dense univariate polynomials in `q` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modgcd::{modular_gcd, IntPoly};

pub type BigRat = BigRational;

/// Polynomial in `q` with rational coefficients, lowest power first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigRat>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRat::from_integer(c.into()))
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRat, k: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `Some((c, k))` when the polynomial is the single term `c q^k`.
    pub fn as_monomial(&self) -> Option<(&BigRat, usize)> {
        let v = self.valuation()?;
        (v + 1 == self.coeffs.len()).then(|| (&self.coeffs[v], v))
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Divides by `q^k`; the caller guarantees divisibility.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        QPolynomial {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        // Pseudo-division on cleared integer coefficients:
        // lc^k * num = quot * div + rem, then rescale once at the end.
        let (mut rem, den_n) = cleared(&self.coeffs);
        let (div, den_d) = cleared(&divisor.coeffs);
        let lc = &div[dd];
        let unit = lc.is_one() || (-lc).is_one();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        let mut scale = BigInt::one();
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = if unit {
                if lc.is_one() { top } else { -top }
            } else {
                for x in rem.iter_mut().take(i + dd) {
                    *x *= lc;
                }
                for x in quot.iter_mut().skip(i + 1) {
                    *x *= lc;
                }
                scale *= lc;
                top
            };
            for (j, d) in div.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        let q_den = &den_n * &scale;
        let quot = quot.into_iter().map(|c| ratio(c * &den_d, &q_den)).collect();
        let rem = rem.into_iter().map(|c| ratio(c, &q_den)).collect();
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient; panics (debug) if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        if let Some((c, k)) = divisor.as_monomial() {
            return self.unshift(k).scale(&c.recip());
        }
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        if let Some(k) = monomial_gcd(self, other) {
            return Self::one().shift(k);
        }
        // Pull out the common power of q first; the modular gcd then runs on smaller inputs.
        let v = self.valuation().unwrap().min(other.valuation().unwrap());
        let a = primitive_part(&self.unshift(self.valuation().unwrap()));
        let b = primitive_part(&other.unshift(other.valuation().unwrap()));
        let g = modular_gcd(&a, &b);
        int_poly_to_q(&g).make_monic().shift(v)
    }
}

/// When either side is a single term `c q^k`, the gcd is a pure power of `q`.
fn monomial_gcd(a: &QPolynomial, b: &QPolynomial) -> Option<usize> {
    let va = a.valuation()?;
    let vb = b.valuation()?;
    if a.as_monomial().is_some() || b.as_monomial().is_some() {
        Some(va.min(vb))
    } else {
        None
    }
}


/// Clears denominators and divides by the content; leading coefficient made positive.
fn primitive_part(p: &QPolynomial) -> IntPoly {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return p;
    }
    let sign_fix = p.last().is_some_and(|c| c.is_negative());
    for c in p.iter_mut() {
        *c /= &content;
        if sign_fix {
            *c = -&*c;
        }
    }
    p
}

/// Integer coefficients and the common denominator `d` with `coeffs = ints / d`.
fn cleared(coeffs: &[BigRat]) -> (IntPoly, BigInt) {
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| {
        if c.denom().is_one() {
            acc
        } else {
            acc.lcm(c.denom())
        }
    });
    let ints = coeffs
        .iter()
        .map(|c| {
            if den.is_one() {
                c.numer().clone()
            } else {
                c.numer() * (&den / c.denom())
            }
        })
        .collect();
    (ints, den)
}

fn ratio(n: BigInt, d: &BigInt) -> BigRat {
    if d.is_one() {
        BigRat::from_integer(n)
    } else {
        BigRat::new(n, d.clone())
    }
}

fn int_poly_to_q(p: &IntPoly) -> QPolynomial {
    QPolynomial::from_coeffs(p.iter().map(|c| BigRat::from_integer(c.clone())).collect())
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigRat::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        // Multiply over Z and divide once per coefficient; BigRational would
        // normalize after every product.
        let (a, da) = cleared(&self.coeffs);
        let (b, db) = cleared(&rhs.coeffs);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        QPolynomial::from_coeffs(out.into_iter().map(|c| ratio(c, &den)).collect())
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Formats `c * var^k` terms in ascending order, e.g. `1-q+2*q^3`.
pub(crate) fn format_poly(coeffs: &[BigRat], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{abs}*{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs, "q"))
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_int_coeffs(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn division_round_trip() {
        let a = p(&[1, 1, 1]);
        let b = p(&[1, -1]);
        let (q, r) = (&(&a * &b) + &p(&[3])).div_rem(&b);
        assert_eq!(q, a);
        assert_eq!(r, p(&[3]));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1+q)(1+q+q^2) and (1+q)(1-q)
        let a = &p(&[1, 1]) * &p(&[1, 1, 1]);
        let b = &p(&[1, 1]) * &p(&[1, -1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 2]).gcd(&p(&[0, 3, 3])), p(&[0, 1]));
        let half = BigRat::new(1.into(), 2.into());
        assert_eq!(
            p(&[2, 4]).gcd(&p(&[3, 6])),
            QPolynomial::from_coeffs(vec![half, BigRat::one()])
        );
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let half = BigRat::new(1.into(), 2.into());
        let a = QPolynomial::from_coeffs(vec![half.clone(), BigRat::one()]); // 1/2 + q
        let b = &a * &p(&[0, 3, 1]);
        let c = &a * &p(&[7, 0, 1]);
        assert_eq!(b.gcd(&c), a.make_monic());
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(p(&[1, 1, 1]).to_string(), "1+q+q^2");
        assert_eq!(p(&[-1, 0, -2]).to_string(), "-1-2*q^2");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[1, 2, 3]).eval(&BigRat::from_integer(2.into())), BigRat::from_integer(17.into()));
    }
}
