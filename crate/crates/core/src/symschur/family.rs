//! Determinantal multivariate polynomials built from a monic univariate family.

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, Serializer};

use super::linalg::{determinant, permutations};
use super::monomial::MonomialMap;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::qxpoly::{hermite, shadow_hermite, XPoly};

/// A sequence of monic polynomials `f_0, f_1, ...` with `deg f_n = n`.
pub trait PolyFamily: Sync {
    fn member(&self, n: usize) -> XPoly;

    fn name(&self) -> String;
}

/// `f_n = x^n`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Monomials;

/// `f_n = H_n(x; q)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct HermiteFamily;

/// `f_n = S_n(x; q)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ShadowFamily;

/// `f_n = (x + 1)^n`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BinomialFamily;

/// An explicitly listed family; members past the end are `x^n`.
#[derive(Debug, Clone)]
pub struct ExplicitFamily(pub Vec<XPoly>);

impl PolyFamily for Monomials {
    fn member(&self, n: usize) -> XPoly {
        XPoly::monomial(n)
    }
    fn name(&self) -> String {
        "monomial".into()
    }
}

impl PolyFamily for HermiteFamily {
    fn member(&self, n: usize) -> XPoly {
        hermite(n)
    }
    fn name(&self) -> String {
        "hermite".into()
    }
}

impl PolyFamily for ShadowFamily {
    fn member(&self, n: usize) -> XPoly {
        shadow_hermite(n)
    }
    fn name(&self) -> String {
        "shadow".into()
    }
}

impl PolyFamily for BinomialFamily {
    fn member(&self, n: usize) -> XPoly {
        let x_plus_1 = XPoly::from_coeffs(vec![Scalar::one(), Scalar::one()]);
        x_plus_1.pow(n as u32)
    }
    fn name(&self) -> String {
        "binomial".into()
    }
}

impl PolyFamily for ExplicitFamily {
    fn member(&self, n: usize) -> XPoly {
        self.0.get(n).cloned().unwrap_or_else(|| XPoly::monomial(n))
    }
    fn name(&self) -> String {
        "explicit".into()
    }
}

/// A symmetric polynomial in `N` variables written in the Schur basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurVector {
    n_vars: usize,
    entries: BTreeMap<Partition, Scalar>,
}

impl SchurVector {
    pub fn new(n_vars: usize) -> Self {
        SchurVector {
            n_vars,
            entries: BTreeMap::new(),
        }
    }

    /// `c * s_∅`.
    pub fn constant(n_vars: usize, c: Scalar) -> Self {
        let mut v = Self::new(n_vars);
        v.add(Partition::empty(), c);
        v
    }

    /// Adds `c * s_λ`; terms with `length(λ) > N` vanish and are dropped.
    pub fn add(&mut self, lambda: Partition, c: Scalar) {
        if c.is_zero() || lambda.length() > self.n_vars {
            return;
        }
        let e = self.entries.entry(lambda).or_default();
        *e += c;
        if e.is_zero() {
            self.entries.retain(|_, v| !v.is_zero());
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&self, lambda: &Partition) -> Scalar {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for SchurVector {
    /// `{"3,1": "<scalar>", ...}` in partition order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

fn check_shape(kappa: &Partition, n_vars: usize) -> Result<()> {
    if kappa.length() > n_vars {
        return Err(Error::Shape {
            partition: kappa.to_string(),
            length: kappa.length(),
            n_vars,
        });
    }
    Ok(())
}

/// Shifted indices `κ_j + N - j`, `j = 1..N`.
fn shifted(kappa: &Partition, n_vars: usize) -> Vec<usize> {
    (0..n_vars).map(|j| kappa.part(j) + n_vars - 1 - j).collect()
}

/// `det(f_{c_j}(x_i))` with row `i` the variable and column `j` the family index `c_j`.
pub fn alternant(columns: &[XPoly]) -> MonomialMap {
    let n = columns.len();
    let mut out = MonomialMap::zero(n);
    for (perm, sign) in permutations(n) {
        // column j is evaluated at variable perm[j]
        let mut prod = MonomialMap::constant(n, Scalar::from_int(sign));
        for (j, f) in columns.iter().enumerate() {
            prod = &prod * &MonomialMap::univariate(n, perm[j], f);
        }
        out = &out + &prod;
    }
    out
}

/// `F_κ = det(f_{κ_j+N-j}(x_i)) / det(x_i^{N-j})`, expanded by exact division.
pub fn family_polynomial(fam: &dyn PolyFamily, kappa: &Partition, n_vars: usize) -> Result<MonomialMap> {
    check_shape(kappa, n_vars)?;
    let cols: Vec<XPoly> = shifted(kappa, n_vars).into_iter().map(|k| fam.member(k)).collect();
    let numerator = alternant(&cols);
    let denominator = alternant(
        &(0..n_vars)
            .map(|j| XPoly::monomial(n_vars - 1 - j))
            .collect::<Vec<_>>(),
    );
    Ok(numerator
        .div_exact(&denominator)
        .expect("alternant is divisible by the Vandermonde determinant"))
}

/// The Schur polynomial `s_κ(x_1..x_N)` by bialternant division.
pub fn schur_monomials(kappa: &Partition, n_vars: usize) -> Result<MonomialMap> {
    family_polynomial(&Monomials, kappa, n_vars)
}

/// `[s_λ] F_κ = det C`, `C_{j,l}` = coefficient of `x^{λ_j+N-j}` in `f_{κ_l+N-l}`.
pub fn schur_coefficient(
    fam: &dyn PolyFamily,
    kappa: &Partition,
    lambda: &Partition,
    n_vars: usize,
) -> Result<Scalar> {
    check_shape(kappa, n_vars)?;
    if lambda.length() > n_vars {
        return Ok(Scalar::zero());
    }
    let members: Vec<XPoly> = shifted(kappa, n_vars).into_iter().map(|k| fam.member(k)).collect();
    Ok(coefficient_determinant(&members, lambda, n_vars))
}

fn coefficient_determinant(members: &[XPoly], lambda: &Partition, n_vars: usize) -> Scalar {
    let rows = shifted(lambda, n_vars);
    let m = rows
        .iter()
        .map(|&e| members.iter().map(|f| f.coeff(e)).collect())
        .collect();
    determinant(m)
}

/// Expansion of `F_κ` in Schur polynomials. Only `λ ⊆ κ` can occur.
pub fn family_expand(fam: &dyn PolyFamily, kappa: &Partition, n_vars: usize) -> Result<SchurVector> {
    check_shape(kappa, n_vars)?;
    let members: Vec<XPoly> = shifted(kappa, n_vars).into_iter().map(|k| fam.member(k)).collect();
    let mut out = SchurVector::new(n_vars);
    for lambda in kappa.sub_partitions() {
        let c = coefficient_determinant(&members, &lambda, n_vars);
        out.add(lambda, c);
    }
    Ok(out)
}

/// `Σ_κ(0)`: the constant term of the shadow-family polynomial.
pub fn sigma_at_zero(kappa: &Partition, n_vars: usize) -> Result<Scalar> {
    schur_coefficient(&ShadowFamily, kappa, &Partition::empty(), n_vars)
}

/// `p_{2m} = Σ_i (-1)^i s_{(2m-i, 1^i)}`, hooks longer than `N` dropped.
pub fn hook_decomposition(m: usize, n_vars: usize) -> Vec<(i8, Partition)> {
    let w = 2 * m;
    (0..w)
        .filter(|&i| i < n_vars)
        .map(|i| (if i % 2 == 0 { 1 } else { -1 }, Partition::hook(w - i, i)))
        .collect()
}

/// `p_{2m}` as a [`SchurVector`] at `N` variables.
pub fn power_sum_schur(m: usize, n_vars: usize) -> SchurVector {
    let mut v = SchurVector::new(n_vars);
    for (sign, mu) in hook_decomposition(m, n_vars) {
        v.add(mu, Scalar::from_int(sign as i64));
    }
    v
}

/// The coefficient of `s_κ` in `G_λ` for `g_n = (x+1)^n`.
pub fn generalized_binomial(lambda: &Partition, kappa: &Partition, n_vars: usize) -> Result<Scalar> {
    check_shape(lambda, n_vars)?;
    if !kappa.is_contained_in(lambda) {
        return Ok(Scalar::zero());
    }
    schur_coefficient(&BinomialFamily, lambda, kappa, n_vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{q_integer, Base};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn schur_examples() {
        let s1 = schur_monomials(&part("1"), 2).unwrap();
        assert_eq!(s1, &MonomialMap::variable(2, 0) + &MonomialMap::variable(2, 1));
        assert_eq!(schur_monomials(&Partition::empty(), 3).unwrap(), MonomialMap::one(3));
        let s21 = schur_monomials(&part("2,1"), 2).unwrap();
        let expected = &MonomialMap::term(vec![2, 1], Scalar::one()) + &MonomialMap::term(vec![1, 2], Scalar::one());
        assert_eq!(s21, expected);
        assert!(matches!(schur_monomials(&part("1,1,1"), 2), Err(Error::Shape { .. })));
    }

    #[test]
    fn family_expand_examples() {
        let k = part("2,1");
        let id = family_expand(&Monomials, &k, 3).unwrap();
        assert_eq!(id.len(), 1);
        assert_eq!(id.get(&k), Scalar::one());

        let sh = family_expand(&ShadowFamily, &part("2"), 1).unwrap();
        assert_eq!(sh.get(&part("2")), Scalar::one());
        assert_eq!(sh.get(&Partition::empty()), Scalar::one());
        assert_eq!(sh.len(), 2);

        let h = family_expand(&HermiteFamily, &part("1,1"), 2).unwrap();
        assert_eq!(h.get(&part("1,1")), Scalar::one());
        assert_eq!(h.get(&Partition::empty()), Scalar::one());
        assert_eq!(h.len(), 2);
    }

    #[test]
    fn sigma_examples() {
        for n in 1..=6 {
            assert_eq!(sigma_at_zero(&Partition::empty(), n).unwrap(), Scalar::one());
        }
        assert_eq!(sigma_at_zero(&part("1,1"), 2).unwrap(), Scalar::from_int(-1));
        assert_eq!(sigma_at_zero(&part("2"), 2).unwrap(), q_integer(3, Base::Q));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_decomposition(1, 2), vec![(1, part("2")), (-1, part("1,1"))]);
        assert_eq!(hook_decomposition(1, 1), vec![(1, part("2"))]);
        assert_eq!(hook_decomposition(2, 2), vec![(1, part("4")), (-1, part("3,1"))]);
    }

    #[test]
    fn hook_decomposition_matches_power_sum() {
        for n in 1..=3 {
            for m in 1..=2 {
                let mut total = MonomialMap::zero(n);
                for (sign, mu) in hook_decomposition(m, n) {
                    let s = schur_monomials(&mu, n).unwrap();
                    total = &total + &s.scale(&Scalar::from_int(sign as i64));
                }
                assert_eq!(total, MonomialMap::power_sum(n, 2 * m as u32), "m={m} N={n}");
            }
        }
    }

    #[test]
    fn binomial_examples() {
        let k = part("2,1");
        assert_eq!(generalized_binomial(&k, &k, 2).unwrap(), Scalar::one());
        assert_eq!(generalized_binomial(&part("2"), &part("1"), 1).unwrap(), Scalar::from_int(2));
        assert_eq!(generalized_binomial(&part("1,1"), &part("1"), 2).unwrap(), Scalar::one());
        assert_eq!(generalized_binomial(&part("1"), &part("2"), 2).unwrap(), Scalar::zero());
    }

    #[test]
    fn schur_vector_json() {
        let v = family_expand(&ShadowFamily, &part("2"), 1).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"":"1","2":"1"}"#);
    }
}
