//! q-integers, q-factorials, Gaussian binomials and the series `e`, `E`.

use num_traits::One;

use super::qpoly::{BigRat, QPolynomial};
use super::scalar::Scalar;

/// Which q-analog: base `q` or base `q^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Q,
    QSquared,
}

impl Base {
    fn step(self) -> usize {
        match self {
            Base::Q => 1,
            Base::QSquared => 2,
        }
    }
}

/// Which exponential series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    /// `e(x) = sum x^n / [n]!`
    Small,
    /// `E(x) = sum x^n q^{n(n-1)/2} / [n]!` (base `q`), `q^{n(n-1)}` (base `q^2`).
    Big,
}

pub(crate) fn q_integer_poly(n: usize, squared: bool) -> QPolynomial {
    let step = if squared { 2 } else { 1 };
    let mut coeffs = vec![BigRat::from_integer(0.into()); if n == 0 { 0 } else { step * (n - 1) + 1 }];
    for i in 0..n {
        coeffs[step * i] = BigRat::one();
    }
    QPolynomial::from_coeffs(coeffs)
}

fn q_factorial_poly(n: usize, base: Base) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, i| {
        &acc * &q_integer_poly(i, base == Base::QSquared)
    })
}

/// `[n]_q = 1 + q + ... + q^{n-1}`, or `[n]_{q^2} = 1 + q^2 + ... + q^{2n-2}`.
pub fn q_integer(n: usize, base: Base) -> Scalar {
    Scalar::from_poly(q_integer_poly(n, base.step() == 2))
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn q_factorial(n: usize, base: Base) -> Scalar {
    Scalar::from_poly(q_factorial_poly(n, base))
}

/// Gaussian binomial `[n over k]`; zero when `k < 0` or `k > n`.
pub fn q_binomial(n: i64, k: i64, base: Base) -> Scalar {
    if n < 0 || k < 0 || k > n {
        return Scalar::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let k = k.min(n - k);
    // [n]...[n-k+1] / [k]!, exact.
    let top = ((n - k + 1)..=n).fold(QPolynomial::one(), |acc, i| {
        &acc * &q_integer_poly(i, base == Base::QSquared)
    });
    Scalar::from_poly(top.div_exact(&q_factorial_poly(k, base)))
}

/// `M_q(n) = [n]_q [n-2]_q [n-4]_q ...` over positive factors; 1 for `n <= 0`.
pub fn m_q(n: i64) -> Scalar {
    let mut acc = QPolynomial::one();
    let mut i = n;
    while i > 0 {
        acc = &acc * &q_integer_poly(i as usize, false);
        i -= 2;
    }
    Scalar::from_poly(acc)
}

/// Coefficient of `x^k` in `e(x, base)` or `E(x, base)`.
pub fn series_coefficient(k: usize, which: Series, base: Base) -> Scalar {
    let fact = q_factorial(k, base);
    let numer = match which {
        Series::Small => Scalar::one(),
        Series::Big => {
            let tri = (k * k.saturating_sub(1) / 2) as i64;
            Scalar::q_pow(tri * base.step() as i64)
        }
    };
    &numer / &fact
}
