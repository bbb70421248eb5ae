//! Modular gcd of primitive integer polynomials.
//!
//! Gcds are taken modulo word-sized primes, lifted by Chinese remaindering, and
//! accepted once a candidate divides both inputs. Primes dividing either leading
//! coefficient are skipped; primes where the modular gcd has too large a degree
//! are discarded.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(super) type IntPoly = Vec<BigInt>;

/// `gcd(a, b)` for primitive `a`, `b` of positive degree; primitive with positive
/// leading coefficient.
pub(super) fn modular_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let lc_a = a.last().expect("nonzero");
    let lc_b = b.last().expect("nonzero");
    let lc_g = lc_a.gcd(lc_b);

    let mut best_deg = usize::MAX;
    let mut acc: IntPoly = Vec::new();
    let mut modulus = BigInt::one();

    for p in primes() {
        let pb = BigInt::from(p);
        if (lc_a % &pb).is_zero() || (lc_b % &pb).is_zero() {
            continue;
        }
        let g = gcd_mod(&reduce(a, p), &reduce(b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > best_deg {
            continue;
        }
        let scale = (&lc_g % &pb).to_u64().unwrap();
        let g: Vec<u64> = g.iter().map(|c| c * scale % p).collect();
        if d < best_deg {
            best_deg = d;
            acc = g.into_iter().map(BigInt::from).collect();
            modulus = pb;
            continue;
        }
        let before = symmetric(&acc, &modulus);
        acc = crt(&acc, &modulus, &g, p);
        modulus *= &pb;
        let after = symmetric(&acc, &modulus);
        if before == after {
            let candidate = primitive(after);
            if divides(&candidate, a) && divides(&candidate, b) {
                return candidate;
            }
        }
    }
    unreachable!("ran out of primes")
}

/// Primes just below 2^31, largest first. The first batch is computed once.
fn primes() -> impl Iterator<Item = u64> {
    const CACHED: usize = 128;
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| descending_primes().take(CACHED).collect());
    table.iter().copied().chain(descending_primes().skip(CACHED))
}

fn descending_primes() -> impl Iterator<Item = u64> {
    ((1u64 << 30)..(1u64 << 31)).rev().filter(|&n| n % 2 == 1 && is_prime(n))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce(a: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    trim(&mut out);
    out
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Monic gcd over `Z/p`.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        let db = b.len() - 1;
        while a.len() >= b.len() {
            let da = a.len() - 1;
            let f = a[da] * inv % p;
            let shift = da - db;
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - f * bj % p) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|c| c * inv % p).collect()
}

/// Combines residues mod `m` (entries in `[0, m)`) with residues mod `p`.
fn crt(acc: &IntPoly, m: &BigInt, g: &[u64], p: u64) -> IntPoly {
    let pb = BigInt::from(p);
    let m_mod_p = (m % &pb).to_u64().unwrap();
    let m_inv = inv_mod(m_mod_p, p);
    acc.iter()
        .zip(g)
        .map(|(r, &s)| {
            let r_mod_p = (r % &pb).to_u64().unwrap();
            let t = (s + p - r_mod_p) % p * m_inv % p;
            r + m * BigInt::from(t)
        })
        .collect()
}

fn symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half: BigInt = m >> 1;
    a.iter().map(|c| if c > &half { c - m } else { c.clone() }).collect()
}

fn primitive(mut a: IntPoly) -> IntPoly {
    let content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let flip = a.last().is_some_and(Signed::is_negative);
    for c in a.iter_mut() {
        *c /= &content;
        if flip {
            *c = -&*c;
        }
    }
    a
}

/// Whether `d` divides `a` in `Z[x]`.
fn divides(d: &IntPoly, a: &IntPoly) -> bool {
    if d.len() > a.len() {
        return false;
    }
    let mut rem = a.clone();
    let ld = d.last().unwrap();
    let dd = d.len() - 1;
    while rem.len() >= d.len() {
        let (q, r) = rem.last().unwrap().div_rem(ld);
        if !r.is_zero() {
            return false;
        }
        let shift = rem.len() - 1 - dd;
        for (j, dj) in d.iter().enumerate() {
            rem[shift + j] -= &q * dj;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem.is_empty()
}
