//! Elements of the rational function field Q(q).

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::qpoly::{format_poly, BigRat, QPolynomial};
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of polynomials in `q`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, and zero is `0 / 1`.
/// Two scalars are equal as field elements iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: QPolynomial,
    den: QPolynomial,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: QPolynomial::zero(),
            den: QPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QPolynomial::from_int(c))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(QPolynomial::constant(c))
    }

    pub fn from_poly(num: QPolynomial) -> Self {
        Scalar {
            num,
            den: QPolynomial::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mono = QPolynomial::monomial(BigRat::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            Scalar {
                num: QPolynomial::one(),
                den: mono,
            }
        }
    }

    /// Builds `num / den` and reduces it. Panics if `den` is zero.
    pub fn new(num: QPolynomial, den: QPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.coeff(0).recip();
            return Self::from_poly(num.scale(&c));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let e = e.unsigned_abs() as u32;
        Scalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
    }

    /// `Some((sign, j))` when `self = sign * q^j` with `sign = ±1`.
    pub fn as_signed_q_power(&self) -> Option<(i8, i64)> {
        let (nc, nk) = self.num.as_monomial()?;
        let (dc, dk) = self.den.as_monomial()?;
        debug_assert!(dc.is_one());
        let sign = if nc.is_one() {
            1
        } else if (-nc).is_one() {
            -1
        } else {
            return None;
        };
        Some((sign, nk as i64 - dk as i64))
    }

    /// Specializes `q := q0`.
    ///
    /// Common factors `(q - q0)` are cancelled first, so this is the limit at
    /// `q0` whenever that limit is finite.
    pub fn evaluate_at(&self, q0: &BigRat) -> Result<BigRat> {
        let root = QPolynomial::from_coeffs(vec![-q0.clone(), BigRat::one()]);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        while !num.is_zero() && num.eval(q0).is_zero() && den.eval(q0).is_zero() {
            num = num.div_exact(&root);
            den = den.div_exact(&root);
        }
        let d = den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole {
                at: q0.to_string(),
                denominator: den.to_string(),
            });
        }
        Ok(num.eval(q0) / d)
    }

    fn add_impl(&self, rhs: &Scalar, negate: bool) -> Scalar {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.den == rhs.den {
            let num = &self.num + &rnum;
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::new(num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rnum * &self.den);
            if num.is_zero() {
                return Self::zero();
            }
            return Scalar {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let b = self.den.div_exact(&g);
        let d = rhs.den.div_exact(&g);
        let num = &(&self.num * &d) + &(&rnum * &b);
        if num.is_zero() {
            return Self::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h), g.div_exact(&h))
        };
        Scalar {
            num,
            den: &(&b * &d) * &g,
        }
    }

    fn mul_impl(&self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel; the result is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Renders as LaTeX, writing numerator and denominator as products of
    /// q-integers `[n]_q` where they factor that way.
    pub fn to_latex(&self) -> String {
        let num = latex_poly(&self.num);
        if self.den.is_one() {
            return num;
        }
        format!("\\frac{{{}}}{{{}}}", num, latex_poly(&self.den))
    }
}

fn latex_poly(p: &QPolynomial) -> String {
    if let Some(s) = latex_q_integer_product(p) {
        return s;
    }
    latex_expanded(p)
}

fn latex_expanded(p: &QPolynomial) -> String {
    format_poly(p.coeffs(), "q")
        .replace('*', " ")
        .split('^')
        .enumerate()
        .map(|(i, part)| {
            if i == 0 {
                part.to_string()
            } else {
                let digits: String = part.chars().take_while(char::is_ascii_digit).collect();
                format!("{{{}}}{}", digits, &part[digits.len()..])
            }
        })
        .collect::<Vec<_>>()
        .join("^")
}

/// Writes `p` as `c q^v [n_1]_q [n_2]_q ...` by greedy trial division,
/// or returns `None` when some factor is not a q-integer.
fn latex_q_integer_product(p: &QPolynomial) -> Option<String> {
    let v = p.valuation()?;
    let mut rest = p.unshift(v);
    let mut factors = Vec::new();
    let mut n = rest.degree()? + 1;
    while n >= 2 && !rest.is_constant() {
        let qint = super::qcomb::q_integer_poly(n, false);
        let (quot, rem) = rest.div_rem(&qint);
        if rem.is_zero() {
            factors.push(n);
            rest = quot;
            n = n.min(rest.degree().unwrap_or(0) + 1);
        } else {
            n -= 1;
        }
    }
    if !rest.is_constant() || factors.is_empty() {
        return None;
    }
    let c = rest.coeff(0);
    let mut out = String::new();
    if c == -BigRat::one() {
        out.push('-');
    } else if !c.is_one() {
        out.push_str(&c.to_string());
    }
    match v {
        0 => {}
        1 => out.push('q'),
        _ => out.push_str(&format!("q^{{{v}}}")),
    }
    for n in factors {
        out.push_str(&format!("[{n}]_q"));
    }
    Some(out)
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<QPolynomial> for Scalar {
    fn from(p: QPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        self.add_impl(rhs, false)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        self.add_impl(rhs, true)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_impl(rhs)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.mul_impl(&rhs.inv().expect("division by zero scalar"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

fn paren(p: &QPolynomial) -> String {
    let s = p.to_string();
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for Scalar {
    /// `num` alone when the denominator is 1, otherwise `num/den`, each side
    /// parenthesized when it has more than one term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{}/{}", paren(&self.num), paren(&self.den))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
