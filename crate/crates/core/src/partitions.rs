//! Integer partitions, their canonical order, and part statistics.
//!
//! A partition is stored as a weakly decreasing sequence of positive parts.
//! Partitions of the same n are ordered lexicographically on that sequence,
//! so for n = 4 the ordered list is
//! (1^4) < (1^2,2) < (2^2) < (1,3) < (4).
//!
//! The statistics attached to a partition mu written in exponential notation
//! mu = (1^m_1, 2^m_2, ...) are
//!   a_mu = prod_i i^m_i,   b_mu = prod_i m_i!,   z_mu = a_mu * b_mu,
//! where z_mu is the centralizer order of a permutation of cycle type mu.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;

/// A partition of a nonnegative integer. The empty sequence is the unique
/// partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    // weakly decreasing, every part >= 1
    parts: Vec<u32>,
}

/// The multiplicative statistics a, b, z = a*b of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub a: BigInt,
    pub b: BigInt,
    pub z: BigInt,
}

impl Partition {
    /// Build from arbitrary part values; zeros are dropped and the rest is
    /// sorted into canonical decreasing order.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts: Vec<u32> = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned number (sum of parts).
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Checked comparison in the canonical order; errors when the two
    /// partitions do not partition the same number.
    pub fn compare(&self, other: &Partition) -> Result<Ordering, Error> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.cmp(other))
    }

    /// Exponential notation: map part size -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// a, b and z = a*b, exactly.
    pub fn stats(&self) -> PartitionStats {
        let mut a = BigInt::one();
        let mut b = BigInt::one();
        for (&i, &m) in &self.multiplicities() {
            a *= BigInt::from(i).pow(m);
            b *= factorial(m);
        }
        let z = &a * &b;
        PartitionStats { a, b, z }
    }

    /// Largest part at most k.
    pub fn is_k_bounded(&self, k: u32) -> bool {
        self.largest_part() <= k
    }

    /// No part size appears with multiplicity >= ell.
    pub fn is_regular(&self, ell: u32) -> bool {
        self.multiplicities().values().all(|&m| m < ell)
    }

    /// No part divisible by ell.
    pub fn is_class_regular(&self, ell: u32) -> bool {
        self.parts.iter().all(|&p| p % ell != 0)
    }
}

/// Display uses the increasing exponential notation, e.g. "1^2,3" for (3,1,1).
/// The empty partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&i, &m) in &self.multiplicities() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{i}")?;
            } else {
                write!(f, "{i}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses comma-separated terms, each `i` or `i^m`, in any order:
/// "1^2,3" == "3,1,1". The empty string parses to the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (base, mult) = match token.split_once('^') {
                Some((b, m)) => (b.trim(), m.trim()),
                None => (token, "1"),
            };
            let i: u32 = base.parse().map_err(|_| err("part is not a positive integer"))?;
            let m: u32 = mult.parse().map_err(|_| err("multiplicity is not a positive integer"))?;
            if i == 0 {
                return Err(err("part 0 is not allowed"));
            }
            if m == 0 {
                return Err(err("multiplicity 0 is not allowed"));
            }
            for _ in 0..m {
                parts.push(i);
            }
        }
        Ok(Partition::new(parts))
    }
}

/// A set of admissible part sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartSet {
    /// All positive integers.
    All,
    /// Part sizes 1..=k.
    Bounded(u32),
    /// Part sizes not divisible by ell (ell >= 2).
    NonMultiples(u32),
    /// Exactly the listed positive sizes.
    Explicit(BTreeSet<u32>),
}

impl PartSet {
    pub fn contains(&self, i: u32) -> bool {
        if i == 0 {
            return false;
        }
        match self {
            PartSet::All => true,
            PartSet::Bounded(k) => i <= *k,
            PartSet::NonMultiples(ell) => i % ell != 0,
            PartSet::Explicit(set) => set.contains(&i),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self {
            PartSet::All => Ok(()),
            PartSet::Bounded(k) if *k >= 1 => Ok(()),
            PartSet::Bounded(k) => Err(Error::InvalidPartSet(format!("bound {k} must be >= 1"))),
            PartSet::NonMultiples(ell) if *ell >= 2 => Ok(()),
            PartSet::NonMultiples(ell) => {
                Err(Error::InvalidPartSet(format!("modulus {ell} must be >= 2")))
            }
            PartSet::Explicit(set) => {
                if set.contains(&0) {
                    Err(Error::InvalidPartSet("explicit sets contain positive sizes only".into()))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// "pr in S implies r in S".
    pub fn is_p_divisible(&self, p: u32) -> bool {
        match self {
            PartSet::All | PartSet::Bounded(_) | PartSet::NonMultiples(_) => true,
            PartSet::Explicit(set) => set
                .iter()
                .all(|&s| s % p != 0 || set.contains(&(s / p))),
        }
    }

    /// "d in S implies pd in S". For `Explicit` sets the condition is only
    /// decidable relative to a bound: it is checked for all pd <= bound.
    pub fn is_p_closed(&self, p: u32, bound: u32) -> bool {
        match self {
            PartSet::All => true,
            PartSet::Bounded(_) => false,
            PartSet::NonMultiples(ell) => gcd(p, *ell) == 1,
            PartSet::Explicit(set) => set.iter().all(|&d| match d.checked_mul(p) {
                Some(pd) if pd <= bound => set.contains(&pd),
                _ => true,
            }),
        }
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartSet::All => write!(f, "all"),
            PartSet::Bounded(k) => write!(f, "bounded:{k}"),
            PartSet::NonMultiples(ell) => write!(f, "nonmult:{ell}"),
            PartSet::Explicit(set) => {
                write!(f, "explicit:")?;
                let items: Vec<String> = set.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", items.join(","))
            }
        }
    }
}

/// Parses "all", "bounded:K", "nonmult:L" or "explicit:a,b,c".
impl FromStr for PartSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let set = if s.eq_ignore_ascii_case("all") {
            PartSet::All
        } else if let Some(k) = s.strip_prefix("bounded:") {
            let k: u32 = k
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartSet(format!("bad bound in `{s}`")))?;
            PartSet::Bounded(k)
        } else if let Some(ell) = s.strip_prefix("nonmult:") {
            let ell: u32 = ell
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartSet(format!("bad modulus in `{s}`")))?;
            PartSet::NonMultiples(ell)
        } else if let Some(list) = s.strip_prefix("explicit:") {
            let mut set = BTreeSet::new();
            for item in list.split(',') {
                let item = item.trim();
                if item.is_empty() {
                    continue;
                }
                let v: u32 = item
                    .parse()
                    .map_err(|_| Error::InvalidPartSet(format!("bad size `{item}` in `{s}`")))?;
                set.insert(v);
            }
            if set.is_empty() {
                return Err(Error::InvalidPartSet(format!("empty explicit set in `{s}`")));
            }
            PartSet::Explicit(set)
        } else {
            return Err(Error::InvalidPartSet(format!(
                "`{s}` (expected all | bounded:K | nonmult:L | explicit:a,b,c)"
            )));
        };
        set.validate()?;
        Ok(set)
    }
}

/// All partitions of n with parts in `set`, in the canonical ascending order.
pub fn enumerate(n: u32, set: &PartSet) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, set, |parts| {
        out.push(Partition { parts: parts.to_vec() })
    });
    out
}

/// Visit every partition of n with parts in `set` in the canonical order,
/// as a decreasing part slice, without materializing the list.
pub fn for_each_partition(n: u32, set: &PartSet, mut f: impl FnMut(&[u32])) {
    let mut stack = Vec::new();
    descend(n, n, set, &mut stack, &mut f);
}

// Chooses the largest part first, smallest admissible value first. Emission
// order is then exactly ascending lex on the decreasing part sequences.
fn descend(n: u32, max: u32, set: &PartSet, stack: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if n == 0 {
        f(stack);
        return;
    }
    for m in 1..=max.min(n) {
        if !set.contains(m) {
            continue;
        }
        stack.push(m);
        descend(n - m, m, set, stack, f);
        stack.pop();
    }
}

/// Number of partitions of n with parts in `set`.
pub fn count(n: u32, set: &PartSet) -> u64 {
    let mut c = 0u64;
    for_each_partition(n, set, |_| c += 1);
    c
}

pub fn factorial(m: u32) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=m {
        f *= BigInt::from(i);
    }
    f
}

fn gcd(a: u32, b: u32) -> u32 {
    num_integer::gcd(a, b)
}
