//! Polynomials in `x` over Q(q): the q-derivative, the Gaussian operators,
//! q-Hermite, shadow Hermite and truncated shadow polynomials, and the
//! q-Gaussian functional `L`.

use std::collections::BTreeMap;

use crate::exactq::{m_q, q_binomial, q_factorial, q_integer, series_coefficient, Base, Scalar, Series};

mod xpoly;

pub use xpoly::XPoly;

/// Coefficients in some polynomial basis, keyed by degree. Zero entries are omitted.
pub type BasisExpansion = BTreeMap<usize, Scalar>;

/// Direction of the Gaussian operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `E(-D_q^2/(1+q), q^2)`, sending `x^n` to `H_n`.
    Forward,
    /// `e(D_q^2/(1+q), q^2)`, sending `x^n` to `S_n`.
    Inverse,
}

/// `D_q x^n = [n]_q x^{n-1}`.
pub fn q_derivative(p: &XPoly) -> XPoly {
    XPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * &q_integer(n, Base::Q))
            .collect(),
    )
}

/// Applies `E(-D_q^2/(1+q), q^2)` or `e(D_q^2/(1+q), q^2)`; both are finite sums on polynomials.
pub fn gaussian_op(p: &XPoly, direction: Direction) -> XPoly {
    let Some(deg) = p.degree() else {
        return XPoly::zero();
    };
    let one_plus_q = q_integer(2, Base::Q).inv().unwrap();
    let mut out = p.clone();
    let mut cur = p.clone();
    for k in 1..=deg / 2 {
        cur = q_derivative(&q_derivative(&cur)).scale(&one_plus_q);
        let c = match direction {
            Direction::Forward => {
                let c = series_coefficient(k, Series::Big, Base::QSquared);
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            }
            Direction::Inverse => series_coefficient(k, Series::Small, Base::QSquared),
        };
        out = &out + &cur.scale(&c);
    }
    out
}

fn hermite_by_coefficients(n: usize) -> XPoly {
    let mut coeffs = vec![Scalar::zero(); n + 1];
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = Scalar::from_int(sign)
            * Scalar::q_pow((k * k.saturating_sub(1)) as i64)
            * q_binomial(n as i64, 2 * k as i64, Base::Q)
            * m_q(2 * k as i64 - 1);
        coeffs[n - 2 * k] = c;
    }
    XPoly::from_coeffs(coeffs)
}

/// `H_0..=H_n` from `H_{k+1} = x H_k - q^{k-1}[k]_q H_{k-1}`.
pub fn hermite_by_recurrence(n: usize) -> Vec<XPoly> {
    let mut out = vec![XPoly::one()];
    if n == 0 {
        return out;
    }
    out.push(XPoly::monomial(1));
    for k in 1..n {
        let c = Scalar::q_pow(k as i64 - 1) * q_integer(k, Base::Q);
        let next = &out[k].shift(1) - &out[k - 1].scale(&c);
        out.push(next);
    }
    out
}

/// The q-Hermite polynomial `H_n(x; q)`.
///
/// Built from the closed coefficient formula and checked against the
/// three-term recurrence.
pub fn hermite(n: usize) -> XPoly {
    let h = hermite_by_coefficients(n);
    let r = hermite_by_recurrence(n).pop().unwrap();
    assert_eq!(h, r, "q-Hermite coefficient formula disagrees with recurrence at n = {n}");
    h
}

/// `H_0..=H_n` via the recurrence (no cross-check).
pub fn hermite_family(n: usize) -> Vec<XPoly> {
    hermite_by_recurrence(n)
}

/// `S_n(x; q) = sum_k [n over 2k]_q M_q(2k-1) x^{n-2k}`.
pub fn shadow_hermite(n: usize) -> XPoly {
    let mut coeffs = vec![Scalar::zero(); n + 1];
    for k in 0..=n / 2 {
        coeffs[n - 2 * k] = q_binomial(n as i64, 2 * k as i64, Base::Q) * m_q(2 * k as i64 - 1);
    }
    XPoly::from_coeffs(coeffs)
}

/// `T_{N,l}`: the terms of `S_{N+l}` of degree at least `N`, i.e. `k <= floor(l/2)`.
pub fn truncated_shadow(n_vars: usize, ell: usize) -> XPoly {
    let top = n_vars + ell;
    let mut coeffs = vec![Scalar::zero(); top + 1];
    for k in 0..=ell / 2 {
        coeffs[top - 2 * k] = q_binomial(top as i64, 2 * k as i64, Base::Q) * m_q(2 * k as i64 - 1);
    }
    XPoly::from_coeffs(coeffs)
}

/// Coefficients of `p` in the basis `{S_j}`.
pub fn shadow_expand(p: &XPoly) -> BasisExpansion {
    to_expansion(&gaussian_op(p, Direction::Forward))
}

/// Coefficients of `p` in the basis `{H_j}`.
pub fn hermite_expand(p: &XPoly) -> BasisExpansion {
    to_expansion(&gaussian_op(p, Direction::Inverse))
}

fn to_expansion(p: &XPoly) -> BasisExpansion {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Printed closed form of the coefficient of `S_{N+l-2p}` in `T_{N,l}`, `p >= floor(l/2) + 1`.
pub fn truncated_coefficient_closed(n_vars: usize, ell: usize, p: usize) -> Scalar {
    let half = (ell / 2) as i64;
    let p = p as i64;
    let d = p - half;
    let sign = if d % 2 == 0 { 1 } else { -1 };
    Scalar::from_int(sign)
        * Scalar::q_pow((d - 1) * (d - 2))
        * q_binomial((n_vars + ell) as i64, 2 * p, Base::Q)
        * q_binomial(p - 1, d - 1, Base::QSquared)
        * m_q(2 * p - 1)
}

/// `T_{N,l}` in the shadow basis by the printed closed form:
/// `S_{N+l}` plus one term for each `p` in `floor(l/2)+1 ..= floor((N+l)/2)`.
pub fn truncated_in_shadow_basis(n_vars: usize, ell: usize) -> BasisExpansion {
    let top = n_vars + ell;
    let mut out = BasisExpansion::new();
    out.insert(top, Scalar::one());
    for p in (ell / 2 + 1)..=(top / 2) {
        let c = truncated_coefficient_closed(n_vars, ell, p);
        if !c.is_zero() {
            out.insert(top - 2 * p, c);
        }
    }
    out
}

/// `T_{N,l}` in the shadow basis by direct conversion.
pub fn truncated_in_shadow_basis_converted(n_vars: usize, ell: usize) -> BasisExpansion {
    shadow_expand(&truncated_shadow(n_vars, ell))
}

/// The q-Gaussian functional: constant term of `e(D_q^2/(1+q), q^2) p`.
pub fn functional_l(p: &XPoly) -> Scalar {
    gaussian_op(p, Direction::Inverse).coeff(0)
}

/// `L(H_n^2) = q^{n(n-1)/2} [n]_q!`.
pub fn hermite_norm(n: usize) -> Scalar {
    Scalar::q_pow((n * n.saturating_sub(1) / 2) as i64) * q_factorial(n, Base::Q)
}

/// A linear functional on Q(q)[x], given by its values on monomials.
pub trait Functional: Sync {
    fn moment(&self, n: usize) -> Scalar;

    fn apply(&self, p: &XPoly) -> Scalar {
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| c * &self.moment(n))
            .sum()
    }
}

/// The q-Gaussian functional `L`, with its moments tabulated up to a degree.
#[derive(Debug, Clone)]
pub struct QGaussian {
    moments: Vec<Scalar>,
}

impl QGaussian {
    /// Tabulates `L(x^n)` for `n <= max_degree` from the operator definition.
    pub fn up_to(max_degree: usize) -> Self {
        let moments = (0..=max_degree)
            .map(|n| functional_l(&XPoly::monomial(n)))
            .collect();
        QGaussian { moments }
    }

    pub fn max_degree(&self) -> usize {
        self.moments.len() - 1
    }
}

impl Functional for QGaussian {
    fn moment(&self, n: usize) -> Scalar {
        match self.moments.get(n) {
            Some(m) => m.clone(),
            None => functional_l(&XPoly::monomial(n)),
        }
    }
}

impl<F: Fn(usize) -> Scalar + Sync> Functional for F {
    fn moment(&self, n: usize) -> Scalar {
        self(n)
    }
}
