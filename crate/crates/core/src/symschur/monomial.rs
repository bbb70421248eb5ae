use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::exactq::Scalar;
use crate::qxpoly::XPoly;

pub type Exponents = Vec<u32>;

/// Sparse polynomial in `x_1..x_N` over Q(q).
///
/// Keys are exponent tuples of length `N`; zero coefficients are never stored.
/// Iteration follows lexicographic order of the exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMap {
    n_vars: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

impl MonomialMap {
    pub fn zero(n_vars: usize) -> Self {
        MonomialMap {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Scalar) -> Self {
        let mut m = Self::zero(n_vars);
        m.add_term(vec![0; n_vars], c);
        m
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, Scalar::one())
    }

    /// `c * x^e`.
    pub fn term(exponents: Exponents, c: Scalar) -> Self {
        let mut m = Self::zero(exponents.len());
        m.add_term(exponents, c);
        m
    }

    /// `x_i` (0-based).
    pub fn variable(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Self::term(e, Scalar::one())
    }

    /// `p(x_i)` for a univariate `p`.
    pub fn univariate(n_vars: usize, i: usize, p: &XPoly) -> Self {
        let mut m = Self::zero(n_vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; n_vars];
            e[i] = k as u32;
            m.add_term(e, c.clone());
        }
        m
    }

    /// `Π_{i<j} (x_i - x_j)`.
    pub fn vandermonde(n_vars: usize) -> Self {
        let mut v = Self::one(n_vars);
        for i in 0..n_vars {
            for j in (i + 1)..n_vars {
                let diff = &Self::variable(n_vars, i) - &Self::variable(n_vars, j);
                v = &v * &diff;
            }
        }
        v
    }

    /// The power sum `x_1^k + ... + x_N^k`.
    pub fn power_sum(n_vars: usize, k: u32) -> Self {
        let mut m = Self::zero(n_vars);
        for i in 0..n_vars {
            let mut e = vec![0; n_vars];
            e[i] = k;
            m.add_term(e, Scalar::one());
        }
        m
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&k| k as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, e: Exponents, c: Scalar) {
        assert_eq!(e.len(), self.n_vars, "exponent tuple has wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n_vars);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        out
    }

    /// Exact division in lexicographic order. Returns `None` when `divisor`
    /// does not divide `self`.
    pub fn div_exact(&self, divisor: &MonomialMap) -> Option<MonomialMap> {
        assert_eq!(self.n_vars, divisor.n_vars);
        let (lead_e, lead_c) = divisor.terms.iter().next_back()?;
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n_vars);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponents = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = c * &lead_inv;
            for (de, dc) in &divisor.terms {
                let te: Exponents = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(te, -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }
}

impl Add for &MonomialMap {
    type Output = MonomialMap;
    fn add(self, rhs: &MonomialMap) -> MonomialMap {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MonomialMap {
    type Output = MonomialMap;
    fn sub(self, rhs: &MonomialMap) -> MonomialMap {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MonomialMap {
    type Output = MonomialMap;
    fn mul(self, rhs: &MonomialMap) -> MonomialMap {
        assert_eq!(self.n_vars, rhs.n_vars);
        let mut out = MonomialMap::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vandermonde_two_vars() {
        let v = MonomialMap::vandermonde(2);
        assert_eq!(v.coeff(&[1, 0]), Scalar::one());
        assert_eq!(v.coeff(&[0, 1]), Scalar::from_int(-1));
        assert_eq!(v.len(), 2);
        assert_eq!(MonomialMap::vandermonde(1), MonomialMap::one(1));
    }

    #[test]
    fn division_inverts_multiplication() {
        let v = MonomialMap::vandermonde(3);
        let f = &MonomialMap::power_sum(3, 2) + &MonomialMap::constant(3, Scalar::q());
        let prod = &f * &v;
        assert_eq!(prod.div_exact(&v), Some(f));
        let v2 = MonomialMap::vandermonde(2);
        assert_eq!(MonomialMap::variable(2, 0).div_exact(&v2), None);
    }
}
