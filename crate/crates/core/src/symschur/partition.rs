use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Trailing zeros are trimmed. Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// The hook `(arm, 1^legs)`; `arm >= 1`.
    pub fn hook(arm: usize, legs: usize) -> Self {
        assert!(arm >= 1, "hook arm must be positive");
        let mut parts = vec![arm];
        parts.extend(std::iter::repeat_n(1, legs));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Young-diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.part(i)).collect()
    }

    /// All partitions of `n` with at most `max_len` parts, in reverse lexicographic order.
    pub fn all_of(n: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions of weight `<= max_weight` with at most `max_len` parts.
    pub fn all_up_to(max_weight: usize, max_len: usize) -> Vec<Partition> {
        (0..=max_weight)
            .flat_map(|w| Self::all_of(w, max_len))
            .collect()
    }

    /// All partitions whose diagram lies inside `self`.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_fill(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out
    }
}

fn fill(rest: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=rest.min(max_part)).rev() {
        cur.push(p);
        fill(rest - p, p, max_len, cur, out);
        cur.pop();
    }
}

fn sub_fill(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == outer.len() {
        out.push(Partition::new(cur.clone()).unwrap());
        return;
    }
    for p in 0..=outer[i].min(cap) {
        cur.push(p);
        sub_fill(outer, i + 1, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"3,1,1"`; `""`, `"0"` and `"∅"` give the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}
