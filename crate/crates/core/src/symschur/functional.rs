//! Coordinatewise application of a univariate functional: the brute-force
//! multivariate integrals `M^(0)` and `M^(2)`.

use super::monomial::MonomialMap;
use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::par::{self, Execution};
use crate::qxpoly::Functional;

/// Largest number of variables the `M^(2)` oracle will expand.
pub const MAX_ORACLE_VARS: usize = 5;
/// Largest total degree of `f V^2` the `M^(2)` oracle will expand.
pub const MAX_ORACLE_DEGREE: usize = 40;

fn moment_table(functional: &dyn Functional, max_degree: usize) -> Vec<Scalar> {
    (0..=max_degree).map(|n| functional.moment(n)).collect()
}

fn max_exponent(f: &MonomialMap) -> usize {
    f.terms()
        .flat_map(|(e, _)| e.iter().copied())
        .max()
        .unwrap_or(0) as usize
}

fn product_of_moments(table: &[Scalar], exps: impl Iterator<Item = usize>) -> Scalar {
    let mut acc = Scalar::one();
    for e in exps {
        let m = &table[e];
        if m.is_zero() {
            return Scalar::zero();
        }
        if !m.is_one() {
            acc = &acc * m;
        }
    }
    acc
}

/// `M^(0)`: `x_1^{e_1}...x_N^{e_N} ↦ Π_i L(x^{e_i})`, extended linearly.
pub fn apply_m0(f: &MonomialMap, functional: &dyn Functional) -> Scalar {
    let table = moment_table(functional, max_exponent(f));
    f.terms()
        .map(|(e, c)| {
            let m = product_of_moments(&table, e.iter().map(|&k| k as usize));
            if m.is_zero() {
                m
            } else {
                c * &m
            }
        })
        .sum()
}

/// Refuses expansions beyond [`MAX_ORACLE_VARS`] / [`MAX_ORACLE_DEGREE`].
pub fn check_oracle_size(n_vars: usize, degree_of_f: usize) -> Result<()> {
    if n_vars > MAX_ORACLE_VARS {
        return Err(Error::Size {
            what: "oracle variables N",
            value: n_vars,
            limit: MAX_ORACLE_VARS,
        });
    }
    let total = degree_of_f + n_vars * n_vars.saturating_sub(1);
    if total > MAX_ORACLE_DEGREE {
        return Err(Error::Size {
            what: "oracle degree of f*V^2",
            value: total,
            limit: MAX_ORACLE_DEGREE,
        });
    }
    Ok(())
}

/// `M^(2)(f) = M^(0)(f V^2)`.
pub fn apply_m2(f: &MonomialMap, functional: &dyn Functional) -> Result<Scalar> {
    apply_m2_with(f, functional, Execution::default())
}

/// [`apply_m2`] with explicit scheduling. The sum over monomials of `V^2` is
/// split across workers and recombined by field addition.
pub fn apply_m2_with(f: &MonomialMap, functional: &dyn Functional, exec: Execution) -> Result<Scalar> {
    let n = f.n_vars();
    check_oracle_size(n, f.total_degree())?;
    let v = MonomialMap::vandermonde(n);
    let v2 = &v * &v;
    let table = moment_table(functional, max_exponent(f) + 2 * n.saturating_sub(1));
    let f_terms: Vec<_> = f.terms().collect();
    let v2_terms: Vec<_> = v2.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    Ok(par::map_reduce(
        exec,
        &v2_terms,
        |(ev, cv)| {
            let mut acc = Scalar::zero();
            for (ef, cf) in &f_terms {
                let m = product_of_moments(
                    &table,
                    ev.iter().zip(ef.iter()).map(|(a, b)| (a + b) as usize),
                );
                if !m.is_zero() {
                    acc += &(&(*cf * cv) * &m);
                }
            }
            acc
        },
        Scalar::zero,
        |a, b| a + b,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qxpoly::QGaussian;

    #[test]
    fn m0_examples() {
        let l = QGaussian::up_to(8);
        let f = MonomialMap::term(vec![2, 2], Scalar::one());
        assert_eq!(apply_m0(&f, &l), Scalar::one());
        let g = MonomialMap::term(vec![3, 1], Scalar::one());
        assert_eq!(apply_m0(&g, &l), Scalar::zero());
        assert_eq!(apply_m0(&MonomialMap::one(2), &l), Scalar::one());
    }

    #[test]
    fn m2_examples() {
        let l = QGaussian::up_to(8);
        assert_eq!(apply_m2(&MonomialMap::one(2), &l).unwrap(), Scalar::from_int(2));
        let x1x2 = MonomialMap::term(vec![1, 1], Scalar::one());
        assert_eq!(apply_m2(&x1x2, &l).unwrap(), Scalar::from_int(-2));
        let x2 = MonomialMap::term(vec![2], Scalar::one());
        assert_eq!(apply_m2(&x2, &l).unwrap(), Scalar::one());
    }

    #[test]
    fn m2_guardrails() {
        let l = QGaussian::up_to(2);
        assert!(matches!(
            apply_m2(&MonomialMap::one(6), &l),
            Err(Error::Size { limit: MAX_ORACLE_VARS, .. })
        ));
        let big = MonomialMap::term(vec![29, 0, 0, 0], Scalar::one());
        assert!(matches!(
            apply_m2(&big, &l),
            Err(Error::Size { limit: MAX_ORACLE_DEGREE, .. })
        ));
    }

    #[test]
    fn m2_parallel_matches_sequential() {
        let l = QGaussian::up_to(16);
        let f = MonomialMap::power_sum(3, 4);
        assert_eq!(
            apply_m2_with(&f, &l, Execution::Parallel).unwrap(),
            apply_m2_with(&f, &l, Execution::Sequential).unwrap()
        );
    }
}
