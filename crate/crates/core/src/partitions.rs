//! Integer partitions, the index set of every basis of the symmetric function ring.
//!
//! Partitions are ordered canonically: by weight first, then reverse
//! lexicographically on the parts, so that `(4) < (3,1) < (2,2) < (2,1,1) < (1^4)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    /// The one-part partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.largest();
        let parts = (1..=cols)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Order of the centralizer of a permutation of cycle type `self`:
    /// the product of `i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                acc *= BigUint::from(part) * BigUint::from(k);
            }
        }
        acc
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Partition(out)
    }

    /// Removes `count` copies of `part`, or returns `None` if there are fewer.
    pub fn remove_parts(&self, part: u32, count: usize) -> Option<Partition> {
        if count == 0 {
            return Some(self.clone());
        }
        let first = self.0.iter().position(|&p| p == part)?;
        if self.0.len() < first + count || self.0[first + count - 1] != part {
            return None;
        }
        let mut out = self.0.clone();
        out.drain(first..first + count);
        Some(Partition(out))
    }

    /// Multiset difference `self - other`, if `other` is a sub-multiset.
    pub fn difference(&self, other: &Partition) -> Option<Partition> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &p in &self.0 {
            if j < other.0.len() && other.0[j] == p {
                j += 1;
            } else {
                if j < other.0.len() && other.0[j] > p {
                    return None;
                }
                out.push(p);
            }
        }
        (j == other.0.len()).then_some(Partition(out))
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Exponent notation: `2^2,1^2`; the empty partition renders as `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (part, mult)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if mult == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{mult}")?;
            }
        }
        Ok(())
    }
}

/// Parses the comma-separated form `2,2,1`. The empty string (or `0`) is ∅.
/// Exponent shorthand `2^2,1` is accepted too.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let bad = || Error::InvalidPartition(s.to_string());
            let part: u32 = base.parse().map_err(|_| bad())?;
            let count: usize = exp.parse().map_err(|_| bad())?;
            if part == 0 || count == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(part, count));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Optional constraints for [`partitions_bounded`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_part: Option<u32>,
    pub max_len: Option<usize>,
}

/// All partitions of `n` in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, Bounds::default())
}

/// All partitions of `n` whose parts and length respect `bounds`, in canonical order.
pub fn partitions_bounded(n: usize, bounds: Bounds) -> Vec<Partition> {
    let max_part = bounds.max_part.map_or(n, |m| (m as usize).min(n));
    let max_len = bounds.max_len.unwrap_or(n);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, max_part, max_len, &mut current, &mut out);
    out
}

// Largest first part first, which is exactly reverse-lexicographic order.
fn fill(rest: usize, max_part: usize, max_len: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if max_len == 0 {
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        // the remaining slots cannot hold what is left
        if part * max_len < rest {
            break;
        }
        current.push(part as u32);
        fill(rest - part, part, max_len - 1, current, out);
        current.pop();
    }
}

/// All partitions of weight at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Number-theoretic Möbius function.
pub fn mobius(n: u64) -> Result<i32> {
    if n == 0 {
        return Err(Error::InvalidArgument("mobius(0) is undefined".into()));
    }
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return Ok(0);
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}
