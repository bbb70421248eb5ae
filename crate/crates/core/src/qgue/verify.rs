//! The errata harness: every printed identity against an independent oracle.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactq::{series_coefficient, Base, Scalar, Series};
use crate::par::{map_collect, Execution};
use crate::qxpoly::{
    functional_l, hermite_family, hermite_norm, truncated_in_shadow_basis,
    truncated_in_shadow_basis_converted, XPoly,
};
use crate::symschur::{
    check_oracle_size, family_polynomial, power_sum_schur, schur_monomials, sigma_at_zero,
    HermiteFamily, MonomialMap, Partition,
};

use super::closed_form::*;
use super::integrate::{hermite_squared_moment, integrate_symmetric, level_density_moment, oracle_m2};
use super::report::{params, Grid, PointResult, VerificationReport};

/// Largest univariate degree or index the harness accepts.
pub const MAX_UNIVARIATE: usize = 60;

/// A family of checks. Some suites emit more than one report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Duality,
    QBinomialSum,
    Orthogonality,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Sigma,
    Theorem5,
    Qhz,
    Truncation,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Duality,
        Suite::QBinomialSum,
        Suite::Orthogonality,
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Theorem3,
        Suite::Theorem4,
        Suite::Sigma,
        Suite::Theorem5,
        Suite::Qhz,
        Suite::Truncation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::QBinomialSum => "qbinomial-sum",
            Suite::Orthogonality => "orthogonality",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem3 => "theorem3",
            Suite::Theorem4 => "theorem4",
            Suite::Sigma => "sigma",
            Suite::Theorem5 => "theorem5",
            Suite::Qhz => "qhz",
            Suite::Truncation => "truncation",
        }
    }

    /// Whether the suite expands `f V^2` through the multivariate oracle.
    fn uses_oracle(self) -> bool {
        matches!(
            self,
            Suite::Orthogonality | Suite::Theorem3 | Suite::Theorem4 | Suite::Sigma
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "truncated-expansion" {
            return Ok(Suite::Truncation);
        }
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Rejects grids the oracles cannot handle.
pub fn check_grid(grid: &Grid, suites: &[Suite]) -> Result<()> {
    if grid.max_vars == 0 {
        return Err(Error::InvalidArgument("max-vars must be at least 1".into()));
    }
    if grid.max_n > MAX_UNIVARIATE {
        return Err(Error::Size {
            what: "max-n",
            value: grid.max_n,
            limit: MAX_UNIVARIATE,
        });
    }
    if suites.iter().any(|s| s.uses_oracle()) {
        check_oracle_size(grid.max_vars, grid.max_weight)?;
    }
    Ok(())
}

/// Runs `suites` over `grid`, in parallel over grid points.
pub fn verify_suite(grid: &Grid, suites: &[Suite]) -> Result<Vec<VerificationReport>> {
    verify_suite_with(grid, suites, Execution::default())
}

pub fn verify_suite_with(grid: &Grid, suites: &[Suite], exec: Execution) -> Result<Vec<VerificationReport>> {
    check_grid(grid, suites)?;
    let mut out = Vec::new();
    for &suite in suites {
        let h = Harness { grid: *grid, exec };
        match suite {
            Suite::Duality => out.push(h.duality()?),
            Suite::QBinomialSum => out.push(h.qbinomial_sum()?),
            Suite::Orthogonality => {
                out.push(h.orthogonality()?);
                out.push(h.orthogonality_multivariate()?);
            }
            Suite::Theorem1 => out.push(h.theorem1()?),
            Suite::Theorem2 => out.push(h.theorem2()?),
            Suite::Theorem3 => out.push(h.theorem3()?),
            Suite::Theorem4 => out.push(h.theorem4()?),
            Suite::Sigma => out.extend(h.sigma()?),
            Suite::Theorem5 => out.extend(h.theorem5()?),
            Suite::Qhz => out.push(h.qhz()?),
            Suite::Truncation => out.push(h.truncation()?),
        }
    }
    Ok(out)
}

struct Harness {
    grid: Grid,
    exec: Execution,
}

type Named = Vec<(&'static str, usize)>;

impl Harness {
    /// Evaluates `(closed, oracle)` at every point, in point order.
    fn run<F>(&self, identity: &str, points: Vec<Named>, eval: F) -> Result<VerificationReport>
    where
        F: Fn(&Named) -> Result<(Scalar, Scalar)> + Sync + Send,
    {
        let results = map_collect(self.exec, &points, |p| {
            eval(p).map(|(closed, oracle)| PointResult::compare(params(p), &closed, &oracle))
        });
        let results = results.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::new(identity, self.grid, results))
    }

    fn masses(&self) -> Result<Vec<Scalar>> {
        (0..=self.grid.max_vars)
            .map(|n| {
                if n == 0 {
                    Ok(Scalar::one())
                } else {
                    oracle_m2(&MonomialMap::one(n), self.exec)
                }
            })
            .collect()
    }

    /// Normalized oracle integral of `s_κ`; zero when `s_κ` vanishes at `N` variables.
    fn schur_oracle(&self, kappa: &Partition, n: usize, masses: &[Scalar]) -> Result<Scalar> {
        if kappa.length() > n {
            return Ok(Scalar::zero());
        }
        let s = schur_monomials(kappa, n)?;
        Ok(oracle_m2(&s, self.exec)? / &masses[n])
    }

    /// `e(x)E(-x)` through degree `max_n` in both bases; the oracle is `1`.
    fn duality(&self) -> Result<VerificationReport> {
        let mut points = Vec::new();
        for base in 1..=2 {
            for d in 0..=self.grid.max_n {
                points.push(vec![("base", base), ("degree", d)]);
            }
        }
        self.run("duality", points, |p| {
            let base = if p[0].1 == 1 { Base::Q } else { Base::QSquared };
            let d = p[1].1;
            let closed: Scalar = (0..=d)
                .map(|j| {
                    let sign = if (d - j) % 2 == 0 { 1 } else { -1 };
                    Scalar::from_int(sign)
                        * series_coefficient(j, Series::Small, base)
                        * series_coefficient(d - j, Series::Big, base)
                })
                .sum();
            let oracle = if d == 0 { Scalar::one() } else { Scalar::zero() };
            Ok((closed, oracle))
        })
    }

    fn qbinomial_sum(&self) -> Result<VerificationReport> {
        let mut points = Vec::new();
        for n in 1..=self.grid.max_n {
            for s in 0..=n {
                points.push(vec![("n", n), ("s", s)]);
            }
        }
        self.run("qbinomial-sum", points, |p| {
            let (n, s) = (p[0].1, p[1].1);
            Ok((alternating_binomial_sum_printed(n, s), alternating_binomial_sum(n, s)))
        })
    }

    /// `L(H_n H_m) = q^{n(n-1)/2}[n]! δ_{nm}`, with `L` applied to the expanded product.
    fn orthogonality(&self) -> Result<VerificationReport> {
        let hs = hermite_family(self.grid.max_n);
        let mut points = Vec::new();
        for n in 0..=self.grid.max_n {
            for m in 0..=self.grid.max_n {
                points.push(vec![("n", n), ("m", m)]);
            }
        }
        self.run("orthogonality", points, |p| {
            let (n, m) = (p[0].1, p[1].1);
            let closed = if n == m { hermite_norm(n) } else { Scalar::zero() };
            Ok((closed, functional_l(&(&hs[n] * &hs[m]))))
        })
    }

    /// `L^(2)(H_κ H_λ) = δ_{κλ} N! Π_j L(H_{κ_j+N-1-j}^2)`.
    fn orthogonality_multivariate(&self) -> Result<VerificationReport> {
        let mut points = Vec::new();
        let mut parts = Vec::new();
        for n in 1..=self.grid.max_vars {
            let all = Partition::all_up_to(self.grid.max_weight / 2, n);
            for kappa in &all {
                for lambda in &all {
                    points.push(vec![("N", n)]);
                    parts.push((kappa.clone(), lambda.clone()));
                }
            }
        }
        let indexed: Vec<(Named, (Partition, Partition))> = points.into_iter().zip(parts).collect();
        let results = map_collect(self.exec, &indexed, |(p, (kappa, lambda))| -> Result<PointResult> {
            let n = p[0].1;
            let hk = family_polynomial(&HermiteFamily, kappa, n)?;
            let hl = family_polynomial(&HermiteFamily, lambda, n)?;
            let oracle = oracle_m2(&(&hk * &hl), self.exec)?;
            let closed = if kappa == lambda {
                let n_fact: i64 = (1..=n as i64).product();
                (0..n).fold(Scalar::from_int(n_fact), |acc, j| {
                    acc * hermite_norm(kappa.part(j) + n - 1 - j)
                })
            } else {
                Scalar::zero()
            };
            let mut map = params(&[("N", n)]);
            map.insert("kappa".into(), kappa.to_string().into());
            map.insert("lambda".into(), lambda.to_string().into());
            Ok(PointResult::compare(map, &closed, &oracle))
        });
        let results = results.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::new("orthogonality-multivariate", self.grid, results))
    }

    /// Level density sum against the Schur-route integral of `p_{2m}`.
    fn theorem1(&self) -> Result<VerificationReport> {
        let mut points = Vec::new();
        for n in 1..=self.grid.max_vars {
            for m in 1..=self.grid.max_weight / 2 {
                points.push(vec![("N", n), ("m", m)]);
            }
        }
        self.run("theorem1", points, |p| {
            let (n, m) = (p[0].1, p[1].1);
            let closed = level_density_moment(&XPoly::monomial(2 * m), n);
            let oracle = integrate_symmetric(&power_sum_schur(m, n))?;
            Ok((closed, oracle))
        })
    }

    /// Hook values read off `T_{N,ℓ}` against the constant-term determinant.
    fn theorem2(&self) -> Result<VerificationReport> {
        let mut points = Vec::new();
        for n in 1..=self.grid.max_vars {
            for ell in 0..self.grid.max_weight {
                for i in 0..n.min(self.grid.max_weight - ell) {
                    points.push(vec![("N", n), ("ell", ell), ("i", i)]);
                }
            }
        }
        self.run("theorem2", points, |p| {
            let (n, ell, i) = (p[0].1, p[1].1, p[2].1);
            let closed = hook_sigma_from_truncation(n, ell, i)?;
            let oracle = sigma_at_zero(&Partition::hook(ell + 1, i), n)?;
            Ok((closed, oracle))
        })
    }

    /// Fast determinantal integral against the definitional oracle.
    fn theorem3(&self) -> Result<VerificationReport> {
        let masses = self.masses()?;
        let mut points = Vec::new();
        let mut kappas = Vec::new();
        for n in 1..=self.grid.max_vars {
            for kappa in Partition::all_up_to(self.grid.max_weight, n) {
                points.push(vec![("N", n)]);
                kappas.push(kappa);
            }
        }
        let indexed: Vec<(Named, Partition)> = points.into_iter().zip(kappas).collect();
        let results = map_collect(self.exec, &indexed, |(p, kappa)| -> Result<PointResult> {
            let n = p[0].1;
            let fast = sigma_at_zero(kappa, n)?;
            let oracle = self.schur_oracle(kappa, n, &masses)?;
            let mut map = params(&[("N", n)]);
            map.insert("kappa".into(), kappa.to_string().into());
            Ok(PointResult::compare(map, &fast, &oracle))
        });
        let results = results.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::new("theorem3", self.grid, results))
    }

    /// Printed hook moment against the oracle integral of `s_(ℓ+1, 1^{2m-ℓ-1})`.
    fn theorem4(&self) -> Result<VerificationReport> {
        let masses = self.masses()?;
        let mut points = Vec::new();
        for n in 1..=self.grid.max_vars {
            for m in 1..=self.grid.max_weight / 2 {
                for ell in 0..2 * m {
                    points.push(vec![("N", n), ("m", m), ("ell", ell)]);
                }
            }
        }
        self.run("theorem4", points, |p| {
            let (n, m, ell) = (p[0].1, p[1].1, p[2].1);
            let closed = hook_moment_closed_form(ell, m, n)?;
            let oracle = self.schur_oracle(&Partition::hook(ell + 1, 2 * m - ell - 1), n, &masses)?;
            Ok((closed, oracle))
        })
    }

    /// `∫ s_(a, 1^{2m-a}) - ∫ s_(a+1, 1^{2m-a-1})`, with non-partitions counted as zero.
    fn hook_pair_oracle(&self, m: usize, a: usize, n: usize, masses: &[Scalar]) -> Result<Scalar> {
        let hook = |first: usize| -> Result<Scalar> {
            if first == 0 || first > 2 * m {
                return Ok(Scalar::zero());
            }
            self.schur_oracle(&Partition::hook(first, 2 * m - first), n, masses)
        };
        Ok(hook(a)? - hook(a + 1)?)
    }

    /// The `σ_{m,t}` display (and the line before it), the pairing shifted by one,
    /// and the assembled `p_{2m}` formula.
    fn sigma(&self) -> Result<Vec<VerificationReport>> {
        let masses = self.masses()?;
        let mut points = Vec::new();
        for n in 1..=self.grid.max_vars {
            for m in 1..=self.grid.max_weight / 2 {
                for t in 0..=m {
                    points.push(vec![("N", n), ("m", m), ("t", t)]);
                }
            }
        }
        let sigma = self.run("sigma", points.clone(), |p| {
            let (n, m, t) = (p[0].1, p[1].1, p[2].1);
            Ok((sigma_closed_form(m, t, n), self.hook_pair_oracle(m, 2 * t, n, &masses)?))
        })?;
        let difference = self.run("sigma-difference", points.clone(), |p| {
            let (n, m, t) = (p[0].1, p[1].1, p[2].1);
            Ok((sigma_difference_form(m, t, n), self.hook_pair_oracle(m, 2 * t, n, &masses)?))
        })?;
        let shifted = self.run("sigma-shifted", points.clone(), |p| {
            let (n, m, t) = (p[0].1, p[1].1, p[2].1);
            Ok((sigma_closed_form(m, t, n), self.hook_pair_oracle(m, 2 * t + 1, n, &masses)?))
        })?;
        // Step checks between printed displays: which hooks the difference line
        // actually subtracts, and whether its simplification is sound.
        let from_hooks = self.run("sigma-step-from-hooks", points.clone(), |p| {
            let (n, m, t) = (p[0].1, p[1].1, p[2].1);
            let printed_hook = |ell: usize| -> Result<Scalar> {
                if ell + 1 > 2 * m {
                    return Ok(Scalar::zero());
                }
                hook_moment_closed_form(ell, m, n)
            };
            Ok((sigma_difference_form(m, t, n), printed_hook(2 * t)? - printed_hook(2 * t + 1)?))
        })?;
        let simplify = self.run("sigma-step-simplify", points, |p| {
            let (n, m, t) = (p[0].1, p[1].1, p[2].1);
            Ok((sigma_closed_form(m, t, n), sigma_difference_form(m, t, n)))
        })?;

        let mut points = Vec::new();
        for n in 1..=self.grid.max_vars {
            for m in 1..=self.grid.max_weight / 2 {
                points.push(vec![("N", n), ("m", m)]);
            }
        }
        let p2m = self.run("p2m", points, |p| {
            let (n, m) = (p[0].1, p[1].1);
            let oracle = oracle_m2(&MonomialMap::power_sum(n, 2 * m as u32), self.exec)? / &masses[n];
            Ok((p2m_closed_form(m, n), oracle))
        })?;
        Ok(vec![sigma, difference, shifted, from_hooks, simplify, p2m])
    }

    fn ms_points(&self) -> Vec<Named> {
        let mut points = Vec::new();
        for m in 1..=self.grid.max_weight / 2 {
            for s in 0..=self.grid.max_n {
                points.push(vec![("m", m), ("s", s)]);
            }
        }
        points
    }

    /// Printed right-hand side against `L(x^{2m} H_s^2)`, under the printed
    /// normalization and under `L(H_s^2)`.
    fn theorem5(&self) -> Result<Vec<VerificationReport>> {
        let printed = self.run("theorem5", self.ms_points(), |p| {
            let (m, s) = (p[0].1, p[1].1);
            let oracle = hermite_squared_moment(m, s) / theorem5_printed_normalization(s);
            Ok((theorem5_rhs(m, s)?, oracle))
        })?;
        let alt = self.run("theorem5-alt-normalization", self.ms_points(), |p| {
            let (m, s) = (p[0].1, p[1].1);
            let oracle = hermite_squared_moment(m, s) / hermite_square_normalization(s);
            Ok((theorem5_rhs(m, s)?, oracle))
        })?;
        // Telescoping the printed power-sum formula between N = s and N = s + 1.
        let telescope = self.run("theorem5-step-telescope", self.ms_points(), |p| {
            let (m, s) = (p[0].1, p[1].1);
            Ok((theorem5_rhs(m, s)?, p2m_closed_form(m, s + 1) - p2m_closed_form(m, s)))
        })?;
        Ok(vec![printed, alt, telescope])
    }

    fn qhz(&self) -> Result<VerificationReport> {
        self.run("qhz", self.ms_points(), |p| {
            let (m, s) = (p[0].1, p[1].1);
            let oracle = hermite_squared_moment(m, s) / hermite_square_normalization(s);
            Ok((qhz_rhs(m, s), oracle))
        })
    }

    /// Printed shadow-basis coefficients of `T_{N,ℓ}` against direct conversion.
    fn truncation(&self) -> Result<VerificationReport> {
        let mut pairs = Vec::new();
        for total in 2..=self.grid.max_n {
            for ell in 1..total {
                pairs.push((total - ell, ell));
            }
        }
        pairs.sort();
        let per_pair = map_collect(self.exec, &pairs, |&(n, ell)| {
            let closed = truncated_in_shadow_basis(n, ell);
            let converted = truncated_in_shadow_basis_converted(n, ell);
            let mut js: Vec<usize> = closed.keys().chain(converted.keys()).copied().collect();
            js.sort_unstable();
            js.dedup();
            js.into_iter()
                .map(|j| {
                    let c = closed.get(&j).cloned().unwrap_or_default();
                    let o = converted.get(&j).cloned().unwrap_or_default();
                    PointResult::compare(params(&[("N", n), ("ell", ell), ("j", j)]), &c, &o)
                })
                .collect::<Vec<_>>()
        });
        Ok(VerificationReport::new(
            "truncated-expansion",
            self.grid,
            per_pair.into_iter().flatten().collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(max_weight: usize, max_vars: usize, max_n: usize) -> Grid {
        Grid {
            max_weight,
            max_vars,
            max_n,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("truncated-expansion".parse::<Suite>().unwrap(), Suite::Truncation);
        assert!("theorem9".parse::<Suite>().is_err());
    }

    #[test]
    fn guardrails() {
        assert!(matches!(
            verify_suite(&grid(4, 6, 4), &[Suite::Theorem3]),
            Err(Error::Size { .. })
        ));
        assert!(verify_suite(&grid(4, 2, 61), &[Suite::Duality]).is_err());
        // Univariate suites do not touch the multivariate oracle.
        assert!(verify_suite(&grid(4, 6, 4), &[Suite::Qhz]).is_ok());
    }

    #[test]
    fn theorem3_small_grid_all_equal() {
        let r = verify_suite(&grid(4, 3, 4), &[Suite::Theorem3]).unwrap();
        assert!(r[0].all_equal(), "{:?}", r[0].discrepancies().next());
    }

    #[test]
    fn theorem4_known_discrepancy() {
        let r = verify_suite(&grid(2, 1, 1), &[Suite::Theorem4]).unwrap();
        let p = r[0].find(&[("N", 1), ("ell", 1), ("m", 1)]).unwrap();
        assert!(p.is_discrepant());
        assert_eq!((p.sign, p.qpower), (Some(-1), Some(0)));
    }

    #[test]
    fn sequential_and_parallel_reports_match() {
        let g = grid(4, 2, 4);
        let suites = [Suite::Theorem4, Suite::Sigma, Suite::Truncation];
        let a = verify_suite_with(&g, &suites, Execution::Parallel).unwrap();
        let b = verify_suite_with(&g, &suites, Execution::Sequential).unwrap();
        assert_eq!(a, b);
    }
}
