//! Catalan, Fuss-Catalan and super-Catalan numbers, exactly.
//!
//! Each closed form is paired with an independent recursion of a different
//! shape (convolution rather than binomial quotient), so the two can be
//! cross-checked against each other in tests without sharing any code path.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{
    binomial, exact_div, factorial_product, falling_factorial, multinomial, Nat,
};
use crate::error::Error;
use crate::partition::{parse_u64, partitions_with_parts};

/// Catalan number `C_k = C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> Nat {
    exact_div(binomial(2 * k, k), &Nat::from(k + 1))
}

/// Catalan number by the convolution recursion
/// `C_{k+1} = sum_{i=0..k} C_i C_{k-i}`, `C_0 = 1`.
///
/// Independent of [`catalan`]: no binomials, no division.
pub fn catalan_by_recursion(k: u64) -> Nat {
    let mut table: Vec<Nat> = vec![Nat::one()];
    for m in 0..k as usize {
        let mut next = Nat::zero();
        for i in 0..=m {
            next += &table[i] * &table[m - i];
        }
        table.push(next);
    }
    table[k as usize].clone()
}

/// Fuss-Catalan number `C^(d)_k = C(dk, k) / (k(d-1) + 1)` for `d >= 2`.
///
/// Counts, among other things, dissections of a polygon into `(d+1)`-gons
/// and plane trees whose internal vertices all have `d` children.
pub fn fuss_catalan(d: u64, k: u64) -> Result<Nat, Error> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { d });
    }
    Ok(exact_div(binomial(d * k, k), &Nat::from(k * (d - 1) + 1)))
}

/// Fuss-Catalan number by the `d`-fold convolution recursion
/// `C^(d)_{k+1} = sum_{k_1+...+k_d=k} prod_i C^(d)_{k_i}`, `C^(d)_0 = 1`.
pub fn fuss_catalan_by_recursion(d: u64, k: u64) -> Result<Nat, Error> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { d });
    }
    let mut table: Vec<Nat> = vec![Nat::one()];
    for m in 0..k as usize {
        // Next term is the x^m coefficient of the d-th power of the series
        // built from the table so far.
        let mut power: Vec<Nat> = vec![Nat::one()];
        for _ in 0..d {
            power = convolve_truncated(&power, &table, m);
        }
        table.push(power[m].clone());
    }
    Ok(table[k as usize].clone())
}

fn convolve_truncated(a: &[Nat], b: &[Nat], deg: usize) -> Vec<Nat> {
    let mut out = vec![Nat::zero(); deg + 1];
    for (i, ai) in a.iter().enumerate().take(deg + 1) {
        for (j, bj) in b.iter().enumerate().take(deg + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Super-Catalan number `s_n`: the number of dissections of an
/// `(n+2)`-gon by any set of noncrossing diagonals (including none).
///
/// Evaluated as a sum over partition types,
/// `s_n = (1/(n+1)) * sum_lambda C(n+k, k) * k! / (k_1! ... k_n!)`,
/// which also makes it the total of [`crate::lagrange::type_count`] over
/// all partitions of `n`.
pub fn super_catalan(n: u64) -> Nat {
    let allowed = (1..=n).collect();
    let mut total = Nat::zero();
    for lambda in partitions_with_parts(n, &allowed) {
        let k = lambda.total_parts();
        let multi = multinomial(k, &lambda.multiplicities())
            .expect("multiplicities sum to the part count");
        total += binomial(n + k, k) * multi;
    }
    exact_div(total, &Nat::from(n + 1))
}

/// Downdegree census of a rooted plane tree: `counts[i]` is the number of
/// vertices with exactly `i` children. Trailing zeros are normalized away.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DowndegreeSequence {
    counts: Vec<u64>,
}

impl DowndegreeSequence {
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        DowndegreeSequence { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of vertices with downdegree `i`.
    pub fn count(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Total number of child slots, `sum(i * r_i)`.
    pub fn child_slots(&self) -> u64 {
        self.counts.iter().enumerate().map(|(i, &r)| i as u64 * r).sum()
    }

    /// A rooted tree with this census exists iff the vertices form one more
    /// than the child slots (and there is at least one vertex).
    pub fn is_feasible(&self) -> bool {
        let v = self.vertex_count();
        v >= 1 && self.child_slots() == v - 1
    }

    pub(crate) fn feasibility_error(&self) -> Error {
        Error::InfeasibleDowndegrees {
            vertices: self.vertex_count(),
            child_slots: self.child_slots(),
        }
    }

    /// Parse the comma-separated form, e.g. `"5,0,4"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut counts = Vec::new();
        for item in s.trim().split(',') {
            counts.push(parse_u64(item, "downdegree sequence")?);
        }
        Ok(Self::new(counts))
    }
}

impl fmt::Display for DowndegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return Ok(());
        }
        write!(f, "{}", self.counts[0])?;
        for c in &self.counts[1..] {
            write!(f, ",{c}")?;
        }
        Ok(())
    }
}

/// Number of plane trees on `n + 1` vertices whose nonzero downdegrees are
/// prescribed by `tail`, where `tail[i]` is the number of vertices with
/// `i + 1` children. Requires `sum((i+1) * tail[i]) = n`; the number of
/// leaves is then forced.
///
/// Closed form: `(1/(1+n)) * (1+n)_{|r|} / (r_1! ... r_n!)`.
pub fn tree_count(tail: &[u64], n: u64) -> Result<Nat, Error> {
    let weighted_sum: u64 =
        tail.iter().enumerate().map(|(i, &r)| (i as u64 + 1) * r).sum();
    if weighted_sum != n {
        return Err(Error::PartitionSumMismatch { n, weighted_sum });
    }
    let total: u64 = tail.iter().sum();
    let numer = falling_factorial(n + 1, total)?;
    let denom = Nat::from(n + 1) * factorial_product(tail);
    Ok(exact_div(numer, &denom))
}

/// [`tree_count`] for a full downdegree sequence (leaf count included).
/// Rejects censuses no tree realizes.
pub fn tree_count_full(seq: &DowndegreeSequence) -> Result<Nat, Error> {
    if !seq.is_feasible() {
        return Err(seq.feasibility_error());
    }
    let n = seq.vertex_count() - 1;
    let tail = if seq.counts().len() > 1 { &seq.counts()[1..] } else { &[] };
    tree_count(tail, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::nat;

    #[test]
    fn catalan_small_values() {
        let expect = ["1", "1", "2", "5", "14", "42", "132", "429", "1430", "4862", "16796"];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(catalan(k as u64), nat(e), "C_{k}");
        }
    }

    #[test]
    fn catalan_closed_form_matches_recursion() {
        for k in 0..=15u64 {
            assert_eq!(catalan(k), catalan_by_recursion(k), "C_{k}");
        }
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(3, 2).unwrap(), nat("3"));
        assert_eq!(fuss_catalan(4, 3).unwrap(), nat("22"));
        let ternary = ["1", "1", "3", "12", "55", "273", "1428", "7752"];
        for (k, e) in ternary.iter().enumerate() {
            assert_eq!(fuss_catalan(3, k as u64).unwrap(), nat(e), "C^(3)_{k}");
        }
        for k in 0..=3u64 {
            assert_eq!(fuss_catalan(1, k), Err(Error::DegreeTooSmall { d: 1 }));
        }
    }

    #[test]
    fn fuss_catalan_degree_two_is_catalan() {
        for k in 0..=15u64 {
            assert_eq!(fuss_catalan(2, k).unwrap(), catalan(k));
            assert_eq!(fuss_catalan_by_recursion(2, k).unwrap(), catalan(k));
        }
    }

    #[test]
    fn fuss_catalan_closed_form_matches_recursion() {
        for d in 2..=5u64 {
            for k in 0..=8u64 {
                assert_eq!(
                    fuss_catalan(d, k).unwrap(),
                    fuss_catalan_by_recursion(d, k).unwrap(),
                    "C^({d})_{k}"
                );
            }
        }
    }

    #[test]
    fn super_catalan_small_values() {
        let expect = ["1", "1", "3", "11", "45", "197", "903", "4279", "20793"];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(super_catalan(n as u64), nat(e), "s_{n}");
        }
    }

    #[test]
    fn tree_count_examples() {
        // Nine vertices, four of downdegree two: binary structure.
        assert_eq!(tree_count(&[0, 4], 8).unwrap(), nat("14"));
        // Single internal vertex: the star is the only tree.
        assert_eq!(tree_count(&[0, 0, 1], 3).unwrap(), nat("1"));
        assert_eq!(tree_count(&[0, 2, 2, 2, 1], 23).unwrap(), nat("9085230"));
        assert_eq!(
            tree_count(&[0, 3], 5),
            Err(Error::PartitionSumMismatch { n: 5, weighted_sum: 6 })
        );
    }

    #[test]
    fn tree_count_full_checks_feasibility() {
        assert_eq!(
            tree_count_full(&DowndegreeSequence::new(vec![1])).unwrap(),
            nat("1")
        );
        assert_eq!(
            tree_count_full(&DowndegreeSequence::new(vec![3, 0, 0, 1])).unwrap(),
            nat("1")
        );
        assert_eq!(
            tree_count_full(&DowndegreeSequence::new(vec![5, 0, 4])).unwrap(),
            nat("14")
        );
        assert_eq!(
            tree_count_full(&DowndegreeSequence::new(vec![2, 0, 2])),
            Err(Error::InfeasibleDowndegrees { vertices: 4, child_slots: 4 })
        );
        assert_eq!(
            tree_count_full(&DowndegreeSequence::new(vec![])),
            Err(Error::InfeasibleDowndegrees { vertices: 0, child_slots: 0 })
        );
    }

    #[test]
    fn downdegree_sequence_normalizes_and_round_trips() {
        let seq = DowndegreeSequence::new(vec![5, 0, 4, 0, 0]);
        assert_eq!(seq.counts(), &[5, 0, 4]);
        assert_eq!(seq.to_string(), "5,0,4");
        assert_eq!(DowndegreeSequence::parse("5,0,4,0").unwrap(), seq);
        assert_eq!(seq.vertex_count(), 9);
        assert_eq!(seq.child_slots(), 8);
        assert!(seq.is_feasible());
        assert!(DowndegreeSequence::parse("1,x").is_err());
    }
}
