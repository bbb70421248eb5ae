//! Classical (q = 1) one-face map counts.

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactq::BigRat;
use crate::par::{map_collect, Execution};
use crate::symschur::power_sum_schur;

use super::integrate::integrate_symmetric;

/// Largest `m` accepted by [`genus_table`].
pub const MAX_GENUS_M: usize = 6;

/// Genus expansion of the Gaussian `p_{2m}` moment, `Σ_g ε_g(m) N^{m+1-2g}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusRow {
    pub m: usize,
    /// `ε_g(m)` for `g = 0, 1, ...`, from the interpolated moment polynomial.
    pub counts: Vec<u64>,
    /// The same counts from enumerating all gluings of a `2m`-gon.
    pub oracle: Vec<u64>,
    pub matches: bool,
}

/// Rows for `m = 1..=max_m`.
pub fn genus_table(max_m: usize) -> Result<Vec<GenusRow>> {
    genus_table_with(max_m, Execution::default())
}

pub fn genus_table_with(max_m: usize, exec: Execution) -> Result<Vec<GenusRow>> {
    if max_m > MAX_GENUS_M {
        return Err(Error::Size {
            what: "max-m",
            value: max_m,
            limit: MAX_GENUS_M,
        });
    }
    let ms: Vec<usize> = (1..=max_m).collect();
    map_collect(exec, &ms, |&m| genus_row(m)).into_iter().collect()
}

fn genus_row(m: usize) -> Result<GenusRow> {
    let one = BigRat::one();
    // m + 2 samples pin down the degree-(m+1) polynomial in N.
    let samples: Vec<(BigRat, BigRat)> = (1..=m + 2)
        .map(|n| {
            let v = integrate_symmetric(&power_sum_schur(m, n))?.evaluate_at(&one)?;
            Ok((BigRat::from_integer(n.into()), v))
        })
        .collect::<Result<_>>()?;
    let poly = interpolate(&samples);
    let mut counts = Vec::new();
    for g in 0..=m.div_ceil(2) {
        let c = &poly[m + 1 - 2 * g];
        let count = Some(c)
            .filter(|c| c.is_integer())
            .and_then(|c| c.to_integer().to_u64())
            .ok_or_else(|| Error::InvalidArgument(format!("genus count {c} at m = {m} is not a count")))?;
        counts.push(count);
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    let oracle = pairing_genus_counts(m);
    let matches = counts == oracle;
    Ok(GenusRow {
        m,
        counts,
        oracle,
        matches,
    })
}

/// Coefficients (ascending) of the polynomial through `points`.
pub fn interpolate(points: &[(BigRat, BigRat)]) -> Vec<BigRat> {
    let n = points.len();
    let mut out = vec![BigRat::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Lagrange basis polynomial for node i, built up factor by factor.
        let mut basis = vec![BigRat::one()];
        let mut denom = BigRat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRat::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / &denom;
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * &scale;
        }
    }
    out
}

/// Genus counts of all `(2m-1)!!` edge pairings of a `2m`-gon.
///
/// A pairing `α` glued to the boundary rotation `γ` has vertices = cycles of `γα`,
/// `m` edges and one face, so `2 - 2g = V - m + 1`.
pub fn pairing_genus_counts(m: usize) -> Vec<u64> {
    let mut counts = vec![0u64; m / 2 + 1];
    let mut alpha = vec![usize::MAX; 2 * m];
    enumerate_pairings(&mut alpha, &mut |a| {
        let v = cycle_count(a);
        let g = (m + 1 - v) / 2;
        counts[g] += 1;
    });
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

fn enumerate_pairings(alpha: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    let Some(i) = alpha.iter().position(|&x| x == usize::MAX) else {
        visit(alpha);
        return;
    };
    for j in i + 1..alpha.len() {
        if alpha[j] != usize::MAX {
            continue;
        }
        alpha[i] = j;
        alpha[j] = i;
        enumerate_pairings(alpha, visit);
        alpha[i] = usize::MAX;
        alpha[j] = usize::MAX;
    }
}

fn cycle_count(alpha: &[usize]) -> usize {
    let n = alpha.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = (alpha[i] + 1) % n;
        }
    }
    cycles
}
