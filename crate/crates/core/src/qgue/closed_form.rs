//! Printed closed forms, transcribed verbatim.
//!
//! Nothing here is corrected: the point is to compare the formulas as printed
//! against the oracles in [`super::verify`]. Binomials out of range are zero and
//! `t` runs over `0..=m`.

use crate::error::{Error, Result};
use crate::exactq::{m_q, q_binomial, q_factorial, Base, Scalar};
use crate::qxpoly::truncated_in_shadow_basis_converted;

fn sign(e: i64) -> Scalar {
    Scalar::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn qb(n: i64, k: i64) -> Scalar {
    q_binomial(n, k, Base::Q)
}

fn qb2(n: i64, k: i64) -> Scalar {
    q_binomial(n, k, Base::QSquared)
}

/// Moment of the hook `(ℓ+1, 1^{2m-ℓ-1})` as printed:
/// `(-1)^{m-⌊ℓ/2⌋} q^{(m-⌊ℓ/2⌋-1)(m-⌊ℓ/2⌋-2)} [N+ℓ, 2m]_q [m-1, ⌊ℓ/2⌋]_{q²} M_q(2m-1)`.
pub fn hook_moment_closed_form(ell: usize, m: usize, n_vars: usize) -> Result<Scalar> {
    if m == 0 || ell + 1 > 2 * m {
        return Err(Error::InvalidArgument(format!(
            "(ℓ+1, 1^(2m-ℓ-1)) is not a partition for ℓ = {ell}, m = {m}"
        )));
    }
    let (m, n, half) = (m as i64, n_vars as i64, (ell / 2) as i64);
    let d = m - half;
    Ok(sign(d)
        * Scalar::q_pow((d - 1) * (d - 2))
        * qb(n + ell as i64, 2 * m)
        * qb2(m - 1, half)
        * m_q(2 * m - 1))
}

/// The printed integral of `σ_{m,t} = s_{(2t, 1^{2m-2t})} - s_{(2t+1, 1^{2m-2t-1})}`:
/// `(-1)^{m-t+1} q^{(m-t-1)(m-t-2)+(N+2t+1-2m)} M_q(2m-1) [m-1, t]_{q²} [N+2t, 2m-1]_q`.
pub fn sigma_closed_form(m: usize, t: usize, n_vars: usize) -> Scalar {
    let (m, t, n) = (m as i64, t as i64, n_vars as i64);
    sign(m - t + 1)
        * Scalar::q_pow((m - t - 1) * (m - t - 2) + (n + 2 * t + 1 - 2 * m))
        * m_q(2 * m - 1)
        * qb2(m - 1, t)
        * qb(n + 2 * t, 2 * m - 1)
}

/// The step before [`sigma_closed_form`]: the difference of the two hook moments,
/// `(-1)^{m-t} q^{(m-t-1)(m-t-2)} M_q(2m-1) [m-1, t]_{q²} ([N+2t, 2m]_q - [N+2t+1, 2m]_q)`.
pub fn sigma_difference_form(m: usize, t: usize, n_vars: usize) -> Scalar {
    let (m, t, n) = (m as i64, t as i64, n_vars as i64);
    sign(m - t)
        * Scalar::q_pow((m - t - 1) * (m - t - 2))
        * m_q(2 * m - 1)
        * qb2(m - 1, t)
        * (qb(n + 2 * t, 2 * m) - qb(n + 2 * t + 1, 2 * m))
}

/// The printed power-sum moment
/// `M_q(2m-1) q^{N+m²-5m+3} Σ_t (-1)^{m-t+1} q^{t²+(5-2m)t} [m-1, t]_{q²} [N+2t, 2m-1]_q`.
pub fn p2m_closed_form(m: usize, n_vars: usize) -> Scalar {
    let (mi, n) = (m as i64, n_vars as i64);
    let sum: Scalar = (0..=mi)
        .map(|t| {
            sign(mi - t + 1)
                * Scalar::q_pow(t * t + (5 - 2 * mi) * t)
                * qb2(mi - 1, t)
                * qb(n + 2 * t, 2 * mi - 1)
        })
        .sum();
    m_q(2 * mi - 1) * Scalar::q_pow(n + mi * mi - 5 * mi + 3) * sum
}

/// Right-hand side of the printed `L(x^{2m} H_s^2)` formula (before normalization):
/// `M_q(2m-1) q^{m²-5m+3} Σ_t (-1)^{m-t+1} q^{t²+(5-2m)t+s} [m-1, t]_{q²} [s+2t, 2m-1]_q
///  (q(1-q^{s+1-2t}) / (1-q^{s+2+2t-m}) - 1)`.
///
/// Fails when the denominator vanishes on a term whose binomials are nonzero.
pub fn theorem5_rhs(m: usize, s: usize) -> Result<Scalar> {
    let (mi, si) = (m as i64, s as i64);
    let one = Scalar::one();
    let mut sum = Scalar::zero();
    for t in 0..=mi {
        let binomials = qb2(mi - 1, t) * qb(si + 2 * t, 2 * mi - 1);
        if binomials.is_zero() {
            continue;
        }
        let exponent = si + 2 + 2 * t - mi;
        if exponent == 0 {
            return Err(Error::DegenerateDenominator {
                m,
                s,
                t: t as usize,
                exponent,
            });
        }
        let ratio = (Scalar::q() * (&one - &Scalar::q_pow(si + 1 - 2 * t)))
            / (&one - &Scalar::q_pow(exponent));
        sum += sign(mi - t + 1) * Scalar::q_pow(t * t + (5 - 2 * mi) * t + si) * binomials * (ratio - &one);
    }
    Ok(m_q(2 * mi - 1) * Scalar::q_pow(mi * mi - 5 * mi + 3) * sum)
}

/// Normalization printed with the `L(x^{2m} H_s^2)` formula: `q^{s(s+1)/2} [s+1]_q!`.
pub fn theorem5_printed_normalization(s: usize) -> Scalar {
    Scalar::q_pow((s * (s + 1) / 2) as i64) * q_factorial(s + 1, Base::Q)
}

/// `L(H_s^2) = q^{s(s-1)/2} [s]_q!`, the normalization used by the q-Harer–Zagier sum.
pub fn hermite_square_normalization(s: usize) -> Scalar {
    Scalar::q_pow((s * s.saturating_sub(1) / 2) as i64) * q_factorial(s, Base::Q)
}

/// q-Harer–Zagier sum with `n := m`:
/// `Σ_k q^{m(s-k)+k(k-1)/2} M_q(2m-1) [s, k]_q [m, k]_q Π_{i=1}^{k} (1+q^{m+i})`.
pub fn qhz_rhs(m: usize, s: usize) -> Scalar {
    let (mi, si) = (m as i64, s as i64);
    let mq = m_q(2 * mi - 1);
    (0..=si.min(mi))
        .map(|k| {
            let prod: Scalar = (1..=k).map(|i| Scalar::one() + Scalar::q_pow(mi + i)).product();
            Scalar::q_pow(mi * (si - k) + k * (k - 1) / 2) * &mq * qb(si, k) * qb(mi, k) * prod
        })
        .sum()
}

/// `Σ_{r=0}^{s} (-1)^r q^{r(r-1)} [n, r]_{q²}`, summed directly.
pub fn alternating_binomial_sum(n: usize, s: usize) -> Scalar {
    (0..=s as i64)
        .map(|r| sign(r) * Scalar::q_pow(r * (r - 1)) * qb2(n as i64, r))
        .sum()
}

/// The printed evaluation of [`alternating_binomial_sum`]: `(-1)^s q^{s(s-1)} [n-1, s]_{q²}`.
pub fn alternating_binomial_sum_printed(n: usize, s: usize) -> Scalar {
    let s = s as i64;
    sign(s) * Scalar::q_pow(s * (s - 1)) * qb2(n as i64 - 1, s)
}

/// `(-1)^{N-1-i}` times the coefficient of `S_{N-1-i}` in `T_{N,ℓ}`: the hook value
/// `Σ_{(ℓ+1, 1^i)}(0)` as stated by the hook coefficient theorem.
pub fn hook_sigma_from_truncation(n_vars: usize, ell: usize, i: usize) -> Result<Scalar> {
    if i + 1 > n_vars {
        return Err(Error::InvalidArgument(format!(
            "hook with {} rows needs i < N = {n_vars}",
            i + 1
        )));
    }
    let j = n_vars - 1 - i;
    let coeff = truncated_in_shadow_basis_converted(n_vars, ell)
        .get(&j)
        .cloned()
        .unwrap_or_default();
    Ok(sign(j as i64) * coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{q_integer, QPolynomial};

    fn poly(c: &[i64]) -> Scalar {
        Scalar::from_poly(QPolynomial::from_int_coeffs(c))
    }

    #[test]
    fn hook_moment_examples() {
        assert_eq!(hook_moment_closed_form(0, 1, 2).unwrap(), Scalar::from_int(-1));
        assert_eq!(hook_moment_closed_form(1, 1, 1).unwrap(), Scalar::from_int(-1));
        assert_eq!(hook_moment_closed_form(3, 2, 1).unwrap(), -q_integer(3, Base::Q));
        assert!(hook_moment_closed_form(2, 1, 1).is_err());
    }

    #[test]
    fn p2m_and_sigma_examples() {
        assert_eq!(p2m_closed_form(1, 1), Scalar::one());
        assert_eq!(p2m_closed_form(1, 2), poly(&[0, 1, 1]));
        assert_eq!(sigma_closed_form(1, 1, 1), Scalar::zero());
    }

    #[test]
    fn p2m_is_sum_of_sigmas() {
        // The power-sum display is the σ display summed over t, exponents regrouped.
        for m in 1..=3 {
            for n in 1..=4 {
                let total: Scalar = (0..=m).map(|t| sigma_closed_form(m, t, n)).sum();
                assert_eq!(total, p2m_closed_form(m, n), "m={m} N={n}");
            }
        }
    }

    #[test]
    fn theorem5_examples() {
        assert_eq!(theorem5_rhs(1, 1).unwrap(), poly(&[-1, 1]));
        // s = 0: the t = 0 term carries [0, 1]_q = 0, so nothing survives.
        assert_eq!(theorem5_rhs(1, 0).unwrap(), Scalar::zero());
    }

    #[test]
    fn theorem5_denominator_never_hits_contributing_terms() {
        // s+2+2t = m forces s+2t < 2m-1, so [s+2t, 2m-1] = 0 and the term is skipped.
        for m in 1..=8 {
            for s in 0..=8 {
                assert!(theorem5_rhs(m, s).is_ok(), "m={m} s={s}");
            }
        }
    }

    #[test]
    fn qhz_examples() {
        let one = crate::BigRat::from_integer(1.into());
        let at1 = |x: Scalar| x.evaluate_at(&one).unwrap();
        assert_eq!(at1(qhz_rhs(1, 1)), crate::BigRat::from_integer(3.into()));
        assert_eq!(at1(qhz_rhs(2, 1)), crate::BigRat::from_integer(15.into()));
        for m in 1..=4 {
            assert_eq!(qhz_rhs(m, 0), m_q(2 * m as i64 - 1));
        }
    }

    #[test]
    fn alternating_sum_exponent() {
        for n in 1..=10 {
            for s in 0..=n {
                let lhs = alternating_binomial_sum(n, s);
                let si = s as i64;
                // What the sum actually equals: exponent s(s+1).
                let truth = sign(si) * Scalar::q_pow(si * (si + 1)) * qb2(n as i64 - 1, si);
                assert_eq!(lhs, truth, "n={n} s={s}");
                if !truth.is_zero() {
                    let ratio = alternating_binomial_sum_printed(n, s) / lhs;
                    assert_eq!(ratio, Scalar::q_pow(-2 * si));
                }
            }
        }
    }

    #[test]
    fn hook_sigma_small() {
        // N=1, ℓ=1: T_{1,1} = x^2 = S_2 - S_0, so the formula gives -1; Σ_(2)(0) = 1.
        assert_eq!(hook_sigma_from_truncation(1, 1, 0).unwrap(), Scalar::from_int(-1));
        assert!(hook_sigma_from_truncation(2, 1, 2).is_err());
    }
}
