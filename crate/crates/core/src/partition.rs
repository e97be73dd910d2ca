//! Integer partitions in multiplicity form.
//!
//! A partition here is always the *type* of some composite object (the face
//! sizes of a dissection, the degree profile of a tree), so it is stored as
//! a sparse map `part size -> multiplicity` rather than as a list of parts.
//!
//! Invariants maintained by construction:
//!
//! * every stored part size `j` satisfies `j >= 1`;
//! * every stored multiplicity `k_j` satisfies `k_j >= 1` (absent means 0);
//! * `sum(j * k_j) = n`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A partition `n = sum(j * k_j)` stored by multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionType {
    n: u64,
    mults: BTreeMap<u64, u64>,
}

impl PartitionType {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        PartitionType { n: 0, mults: BTreeMap::new() }
    }

    /// Build from an explicit multiplicity map, checking the weighted sum
    /// against `n`. Zero multiplicities are dropped; zero parts are
    /// rejected.
    pub fn new(n: u64, mults: BTreeMap<u64, u64>) -> Result<Self, Error> {
        let mults: BTreeMap<u64, u64> =
            mults.into_iter().filter(|&(_, k)| k != 0).collect();
        if mults.contains_key(&0) {
            return Err(Error::ZeroPart);
        }
        let weighted_sum: u64 = mults.iter().map(|(j, k)| j * k).sum();
        if weighted_sum != n {
            return Err(Error::PartitionSumMismatch { n, weighted_sum });
        }
        Ok(PartitionType { n, mults })
    }

    /// Build from a list of parts (any order); `n` is their sum.
    pub fn from_parts(parts: &[u64]) -> Result<Self, Error> {
        let mut mults: BTreeMap<u64, u64> = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return Err(Error::ZeroPart);
            }
            *mults.entry(p).or_insert(0) += 1;
        }
        let n = parts.iter().sum();
        Ok(PartitionType { n, mults })
    }

    /// The partitioned number `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Total number of parts, `k = sum(k_j)`.
    pub fn total_parts(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Multiplicity of part size `j` (zero when absent).
    pub fn multiplicity(&self, j: u64) -> u64 {
        self.mults.get(&j).copied().unwrap_or(0)
    }

    /// `(part size, multiplicity)` pairs in ascending part order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.mults.iter().map(|(&j, &k)| (j, k))
    }

    /// Distinct part sizes, ascending.
    pub fn part_sizes(&self) -> impl Iterator<Item = u64> + '_ {
        self.mults.keys().copied()
    }

    /// The multiplicities alone, in ascending part order.
    pub fn multiplicities(&self) -> Vec<u64> {
        self.mults.values().copied().collect()
    }

    /// Expanded part list, descending (display order).
    pub fn parts_descending(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&j, &k) in self.mults.iter().rev() {
            for _ in 0..k {
                out.push(j);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Compact machine form `"1^2,3^1"` (ascending parts). The empty
    /// partition serializes as the empty string.
    pub fn to_multiplicity_string(&self) -> String {
        let items: Vec<String> =
            self.mults.iter().map(|(j, k)| alloc::format!("{j}^{k}")).collect();
        items.join(",")
    }

    /// Parse the `"j^k,j^k,..."` form; a bare `"j"` means `j^1`. The empty
    /// string is the empty partition.
    pub fn parse_multiplicity_string(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut mults: BTreeMap<u64, u64> = BTreeMap::new();
        for item in s.split(',') {
            let (j, k) = match item.split_once('^') {
                Some((j, k)) => (parse_u64(j, "partition")?, parse_u64(k, "partition")?),
                None => (parse_u64(item, "partition")?, 1),
            };
            if j == 0 {
                return Err(Error::ZeroPart);
            }
            if k == 0 {
                continue;
            }
            *mults.entry(j).or_insert(0) += k;
        }
        let n = mults.iter().map(|(j, k)| j * k).sum();
        Ok(PartitionType { n, mults })
    }
}

impl fmt::Display for PartitionType {
    /// Sum form with parts descending, e.g. `3+2+2+1`; `∅` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> =
            self.parts_descending().iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

pub(crate) fn parse_u64(s: &str, what: &'static str) -> Result<u64, Error> {
    s.trim().parse::<u64>().map_err(|_| Error::Parse {
        what,
        detail: alloc::format!("expected a nonnegative integer, found {s:?}"),
    })
}

/// All partitions of `n` using only part sizes from `allowed`, in
/// descending lexicographic order of the multiplicity vector
/// `(k_1, k_2, ...)` indexed by ascending part size.
///
/// `n = 0` yields exactly the empty partition, whatever `allowed` is.
pub fn partitions_with_parts(n: u64, allowed: &BTreeSet<u64>) -> Vec<PartitionType> {
    assert!(!allowed.contains(&0), "part sizes must be positive");
    let parts: Vec<u64> = allowed.iter().copied().collect();
    let mut out = Vec::new();
    let mut acc: Vec<(u64, u64)> = Vec::new();
    descend(&parts, n, &mut acc, &mut out);
    out
}

fn descend(
    parts: &[u64],
    remaining: u64,
    acc: &mut Vec<(u64, u64)>,
    out: &mut Vec<PartitionType>,
) {
    if remaining == 0 {
        let mults: BTreeMap<u64, u64> = acc.iter().copied().collect();
        let n = mults.iter().map(|(j, k)| j * k).sum();
        out.push(PartitionType { n, mults });
        return;
    }
    let Some((&p, rest)) = parts.split_first() else {
        return;
    };
    for count in (1..=remaining / p).rev() {
        acc.push((p, count));
        descend(rest, remaining - count * p, acc, out);
        acc.pop();
    }
    descend(rest, remaining, acc, out);
}
