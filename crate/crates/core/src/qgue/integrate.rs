//! q-GUE integrals: the fast determinantal route and the definitional oracle.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactq::{q_factorial, Base, Scalar};
use crate::par::Execution;
use crate::qxpoly::{functional_l, hermite, hermite_family, hermite_norm, QGaussian, XPoly};
use crate::symschur::{
    apply_m2_with, check_oracle_size, power_sum_schur, schur_monomials, sigma_at_zero, MonomialMap,
    Partition, SchurVector,
};

use super::closed_form;

/// How an integral is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Constant-term determinants of shadow Hermite coefficients.
    Fast,
    /// Brute-force `L^(2)` expansion, divided by the total mass.
    Oracle,
    /// The printed closed-form expression.
    ClosedForm,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Method::Fast),
            "oracle" => Ok(Method::Oracle),
            "closed" | "closed_form" | "closed-form" => Ok(Method::ClosedForm),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Fast => "fast",
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed",
        })
    }
}

/// `L^(2)(g)` for a polynomial `g` in `N` variables, by expansion.
pub(crate) fn oracle_m2(g: &MonomialMap, exec: Execution) -> Result<Scalar> {
    let n = g.n_vars();
    check_oracle_size(n, g.total_degree())?;
    let l = QGaussian::up_to(g.total_degree() + 2 * n);
    apply_m2_with(g, &l, exec)
}

/// Total mass `L^(2)(1)`, computed by the oracle.
pub fn normalization(n_vars: usize) -> Result<Scalar> {
    oracle_m2(&MonomialMap::one(n_vars), Execution::default())
}

/// `N! Π_{j<N} q^{j(j-1)/2} [j]_q!`.
pub fn normalization_formula(n_vars: usize) -> Scalar {
    let n_fact: i64 = (1..=n_vars as i64).product();
    (0..n_vars).fold(Scalar::from_int(n_fact), |acc, j| acc * hermite_norm(j))
}

/// Normalized integral `L^(2)(g) / L^(2)(1)` by the oracle.
pub fn integrate_polynomial_oracle(g: &MonomialMap, exec: Execution) -> Result<Scalar> {
    let total = oracle_m2(g, exec)?;
    let mass = oracle_m2(&MonomialMap::one(g.n_vars()), exec)?;
    Ok(&total / &mass)
}

/// Normalized q-GUE integral of `s_κ` in `N` variables.
pub fn integrate_schur(kappa: &Partition, n_vars: usize, method: Method) -> Result<Scalar> {
    integrate_schur_with(kappa, n_vars, method, Execution::default())
}

pub fn integrate_schur_with(
    kappa: &Partition,
    n_vars: usize,
    method: Method,
    exec: Execution,
) -> Result<Scalar> {
    match method {
        Method::Fast => sigma_at_zero(kappa, n_vars),
        Method::Oracle => {
            let s = schur_monomials(kappa, n_vars)?;
            integrate_polynomial_oracle(&s, exec)
        }
        Method::ClosedForm => {
            let parts = kappa.parts();
            let is_hook = parts.iter().skip(1).all(|&p| p == 1);
            if kappa.is_empty() || !is_hook || kappa.weight() % 2 == 1 {
                return Err(Error::InvalidArgument(format!(
                    "no closed form for s_({kappa}); only hooks of even weight"
                )));
            }
            if kappa.length() > n_vars {
                return Err(Error::Shape {
                    partition: kappa.to_string(),
                    length: kappa.length(),
                    n_vars,
                });
            }
            closed_form::hook_moment_closed_form(parts[0] - 1, kappa.weight() / 2, n_vars)
        }
    }
}

/// `Σ_λ b_λ Σ_λ(0)` for `f = Σ_λ b_λ s_λ`.
pub fn integrate_symmetric(f: &SchurVector) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (lambda, c) in f.entries() {
        acc += c * &sigma_at_zero(lambda, f.n_vars())?;
    }
    Ok(acc)
}

/// `Σ_{j<N} L(p H_j^2) / L(H_j^2)`.
pub fn level_density_moment(p: &XPoly, n_vars: usize) -> Scalar {
    hermite_family(n_vars.saturating_sub(1))
        .iter()
        .enumerate()
        .take(n_vars)
        .map(|(j, h)| &functional_l(&(p * &(h * h))) / &hermite_norm(j))
        .sum()
}

/// `L(x^{2m} H_s^2)`.
pub fn hermite_squared_moment(m: usize, s: usize) -> Scalar {
    let h = hermite(s);
    functional_l(&(&XPoly::monomial(2 * m) * &(&h * &h)))
}

/// Normalized integral of the power sum `p_k = x_1^k + ... + x_N^k`.
pub fn integrate_power_sum(k: usize, n_vars: usize, method: Method) -> Result<Scalar> {
    integrate_power_sum_with(k, n_vars, method, Execution::default())
}

pub fn integrate_power_sum_with(
    k: usize,
    n_vars: usize,
    method: Method,
    exec: Execution,
) -> Result<Scalar> {
    if n_vars == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    match method {
        Method::Fast => {
            if k % 2 == 1 {
                // p_k with k odd: Murnaghan–Nakayama over hooks of odd weight.
                let mut v = SchurVector::new(n_vars);
                for i in 0..k.min(n_vars) {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    v.add(Partition::hook(k - i, i), Scalar::from_int(sign));
                }
                return integrate_symmetric(&v);
            }
            if k == 0 {
                return Ok(Scalar::from_int(n_vars as i64));
            }
            integrate_symmetric(&power_sum_schur(k / 2, n_vars))
        }
        Method::Oracle => {
            integrate_polynomial_oracle(&MonomialMap::power_sum(n_vars, k as u32), exec)
        }
        Method::ClosedForm => {
            if k == 0 || k % 2 == 1 {
                return Err(Error::InvalidArgument(format!(
                    "no closed form for p_{k}; only positive even exponents"
                )));
            }
            Ok(closed_form::p2m_closed_form(k / 2, n_vars))
        }
    }
}

/// `L(x^{2m} H_s^2)`; the closed form is the q-Harer–Zagier sum times `q^{s(s-1)/2}[s]_q!`.
pub fn hermite_squared(m: usize, s: usize, method: Method) -> Result<Scalar> {
    match method {
        Method::Fast | Method::Oracle => Ok(hermite_squared_moment(m, s)),
        Method::ClosedForm => {
            if m == 0 {
                return Err(Error::InvalidArgument("closed form needs m >= 1".into()));
            }
            let norm = Scalar::q_pow((s * s.saturating_sub(1) / 2) as i64) * q_factorial(s, Base::Q);
            Ok(closed_form::qhz_rhs(m, s) * norm)
        }
    }
}

/// What to integrate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MomentKind {
    Schur(Partition),
    /// `p_k`, with `k` the exponent.
    PowerSum(usize),
    /// `L(x^{2m} H_s^2)`; univariate, `n_vars` is ignored.
    HermiteSquared { m: usize, s: usize },
}

/// A single moment request, as issued by the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentQuery {
    pub kind: MomentKind,
    pub n_vars: usize,
    pub method: Method,
}

impl MomentQuery {
    pub fn evaluate(&self) -> Result<Scalar> {
        if self.n_vars == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        match &self.kind {
            MomentKind::Schur(kappa) => integrate_schur(kappa, self.n_vars, self.method),
            MomentKind::PowerSum(k) => integrate_power_sum(*k, self.n_vars, self.method),
            MomentKind::HermiteSquared { m, s } => hermite_squared(*m, *s, self.method),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{q_integer, QPolynomial};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn qn(n: usize) -> Scalar {
        q_integer(n, Base::Q)
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(normalization(1).unwrap(), Scalar::one());
        assert_eq!(normalization(2).unwrap(), Scalar::from_int(2));
        let six_q_1q = Scalar::from_poly(QPolynomial::from_int_coeffs(&[0, 6, 6]));
        assert_eq!(normalization(3).unwrap(), six_q_1q);
        for n in 1..=4 {
            assert_eq!(normalization(n).unwrap(), normalization_formula(n));
        }
    }

    #[test]
    fn integrate_schur_examples() {
        for method in [Method::Fast, Method::Oracle] {
            assert_eq!(integrate_schur(&part("2"), 1, method).unwrap(), Scalar::one());
            assert_eq!(integrate_schur(&part("1,1"), 2, method).unwrap(), Scalar::from_int(-1));
            for n in 1..=3 {
                assert_eq!(integrate_schur(&part("1"), n, method).unwrap(), Scalar::zero());
            }
        }
        assert!(integrate_schur(&part("2,1"), 2, Method::ClosedForm).is_err());
    }

    #[test]
    fn integrate_symmetric_examples() {
        let c = Scalar::q();
        assert_eq!(integrate_symmetric(&SchurVector::constant(3, c.clone())).unwrap(), c);
        let p2 = power_sum_schur(1, 2);
        assert_eq!(integrate_symmetric(&p2).unwrap(), Scalar::one() + qn(3));
        let p4 = power_sum_schur(2, 2);
        assert_eq!(integrate_symmetric(&p4).unwrap(), qn(3) * (Scalar::one() + qn(5)));
    }

    #[test]
    fn level_density_examples() {
        for n in 1..=4 {
            assert_eq!(level_density_moment(&XPoly::one(), n), Scalar::from_int(n as i64));
        }
        assert_eq!(level_density_moment(&XPoly::monomial(2), 2), Scalar::one() + qn(3));
        assert_eq!(
            level_density_moment(&XPoly::monomial(4), 2),
            qn(3) * (Scalar::one() + qn(5))
        );
    }

    #[test]
    fn hermite_squared_examples() {
        assert_eq!(hermite_squared_moment(1, 1), qn(3));
        for s in 0..5 {
            assert_eq!(hermite_squared_moment(0, s), hermite_norm(s));
        }
        assert_eq!(
            hermite_squared_moment(1, 2),
            qn(5) * qn(3) - Scalar::from_int(2) * qn(3) + Scalar::one()
        );
    }

    #[test]
    fn power_sum_methods_agree() {
        for n in 1..=3 {
            for k in 0..=5 {
                let fast = integrate_power_sum(k, n, Method::Fast).unwrap();
                let oracle = integrate_power_sum(k, n, Method::Oracle).unwrap();
                assert_eq!(fast, oracle, "k={k} N={n}");
            }
        }
    }

    #[test]
    fn query_dispatch() {
        let q = MomentQuery {
            kind: MomentKind::PowerSum(2),
            n_vars: 2,
            method: Method::Fast,
        };
        assert_eq!(q.evaluate().unwrap().to_string(), "2+q+q^2");
        let q = MomentQuery {
            kind: MomentKind::Schur(part("1,1")),
            n_vars: 2,
            method: Method::Oracle,
        };
        assert_eq!(q.evaluate().unwrap().to_string(), "-1");
        assert_eq!("closed".parse::<Method>().unwrap(), Method::ClosedForm);
        assert!("slow".parse::<Method>().is_err());
    }
}
