//! Series reversion coefficients, refined by partition type.
//!
//! The reversion of `x = z - g(z)` (seed `g` as in [`crate::series`])
//! has coefficients that decompose over partition types: the type
//! `lambda = (k_1, k_2, ...)` contributes
//!
//! ```text
//! a_lambda = (1/(n+1)) * C(n+k, k) * k! / (k_1! ... k_n!)
//! ```
//!
//! uncolored, and `a_lambda * prod_j c_{j+1}^{k_j}` with colors. Summing
//! over the partitions of `n` whose parts the seed supports yields the
//! full coefficient `a_n` of `x^{n+1}`; summing `a_lambda` over *all*
//! partitions of `n` yields the super-Catalan number.

use alloc::vec::Vec;

use num_traits::One;

use crate::combinatorics::{binomial, exact_div, multinomial, Nat};
use crate::error::Error;
use crate::partition::{partitions_with_parts, PartitionType};
use crate::series::{Int, SeedPolynomial, TruncatedSeries};

/// Number of objects of type `lambda`: dissections of an `(n+2)`-gon with
/// `k_j` faces of size `j + 2`, equivalently plane trees with `k_j`
/// vertices of downdegree `j + 1`.
pub fn type_count(lambda: &PartitionType) -> Nat {
    let n = lambda.n();
    let k = lambda.total_parts();
    let multi = multinomial(k, &lambda.multiplicities())
        .expect("multiplicities sum to the part count");
    exact_div(binomial(n + k, k) * multi, &Nat::from(n + 1))
}

/// [`type_count`] weighted by the seed's colors: each part of size `j`
/// picks one of `c_{j+1}` colors. Rejects types containing a part the
/// seed has no colors for.
pub fn colored_type_count(lambda: &PartitionType, g: &SeedPolynomial) -> Result<Nat, Error> {
    let mut weight = Nat::one();
    for (j, kj) in lambda.iter() {
        let c = g.color(j + 1);
        if c == 0 {
            return Err(Error::MissingColor { part: j });
        }
        for _ in 0..kj {
            weight *= Nat::from(c);
        }
    }
    Ok(type_count(lambda) * weight)
}

/// Coefficient `a_n` (of `x^{n+1}`) in the reversion of `x = z - g(z)`:
/// the colored type counts summed over all partitions of `n` into parts
/// the seed supports. `a_0 = 1` for every seed.
pub fn reversion_coefficient(g: &SeedPolynomial, n: u64) -> Nat {
    let allowed = g.part_sizes();
    let mut total = Nat::from(0u32);
    for lambda in partitions_with_parts(n, &allowed) {
        total += colored_type_count(&lambda, g)
            .expect("generated partitions only use supported parts");
    }
    total
}

/// The reverted series `z(x) = sum_{n=0}^{N-1} a_n x^{n+1}` truncated at
/// order `N`, computed purely from the closed formula (no iteration).
pub fn reversion_series(g: &SeedPolynomial, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Int::from(0));
    for n in 0..order {
        coeffs.push(Int::from(reversion_coefficient(g, n as u64)));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// One row of the super-Catalan decomposition: a partition type and the
/// exact number of objects of that type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCountTerm {
    pub lambda: PartitionType,
    pub count: Nat,
}

/// The super-Catalan number `s_n` split by partition type, in the
/// canonical partition order. The counts sum to
/// [`crate::catalan::super_catalan`]`(n)`.
pub fn decompose_super_catalan(n: u64) -> Vec<TypeCountTerm> {
    let allowed = (1..=n).collect();
    partitions_with_parts(n, &allowed)
        .into_iter()
        .map(|lambda| {
            let count = type_count(&lambda);
            TypeCountTerm { lambda, count }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::{fuss_catalan, super_catalan, tree_count};
    use crate::combinatorics::nat;
    use alloc::collections::BTreeSet;
    use num_traits::Zero;

    fn lambda(parts: &[u64]) -> PartitionType {
        PartitionType::from_parts(parts).unwrap()
    }

    fn seed(text: &str) -> SeedPolynomial {
        SeedPolynomial::parse(text).unwrap()
    }

    #[test]
    fn type_count_examples() {
        assert_eq!(type_count(&lambda(&[1, 1, 1, 1])), nat("14"));
        assert_eq!(type_count(&lambda(&[2, 2])), nat("3"));
        assert_eq!(type_count(&PartitionType::empty()), nat("1"));
        assert_eq!(type_count(&lambda(&[1, 1, 2, 2, 3, 3, 4])), nat("9085230"));
    }

    #[test]
    fn type_count_matches_tree_count_through_the_degree_shift() {
        // Types of n with k parts correspond to downdegree tails
        // (0, k_1, ..., k_n) on n + k + 1 vertices.
        for n in 0..=10u64 {
            let allowed: BTreeSet<u64> = (1..=n).collect();
            for lam in partitions_with_parts(n, &allowed) {
                let k = lam.total_parts();
                let mut tail = alloc::vec![0u64; (n + 1) as usize];
                for (j, kj) in lam.iter() {
                    tail[j as usize] = kj;
                }
                assert_eq!(
                    tree_count(&tail, n + k).unwrap(),
                    type_count(&lam),
                    "lambda = {lam}"
                );
            }
        }
    }

    #[test]
    fn colored_type_count_examples() {
        assert_eq!(
            colored_type_count(&lambda(&[1]), &seed("2:2")).unwrap(),
            nat("2")
        );
        assert_eq!(
            colored_type_count(&lambda(&[1, 1]), &seed("2:2")).unwrap(),
            nat("8")
        );
        assert_eq!(
            colored_type_count(&lambda(&[2]), &seed("3:5")).unwrap(),
            nat("5")
        );
        assert_eq!(
            colored_type_count(&lambda(&[2]), &seed("2:1")),
            Err(Error::MissingColor { part: 2 })
        );
    }

    #[test]
    fn reversion_coefficients_of_the_mixed_seed() {
        let g = seed("2:1,3:1");
        let expect = ["1", "1", "3", "10", "38", "154", "654"];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(reversion_coefficient(&g, n as u64), nat(e), "a_{n}");
        }
    }

    #[test]
    fn reversion_coefficients_with_colors() {
        // Two colors on the quadratic term scale a_n by 2^n.
        let g = seed("2:2");
        assert_eq!(reversion_coefficient(&g, 3), nat("40"));
        for n in 0..=8u64 {
            let plain = reversion_coefficient(&seed("2:1"), n);
            let mut scaled = plain;
            for _ in 0..n {
                scaled *= nat("2");
            }
            assert_eq!(reversion_coefficient(&g, n), scaled);
        }
    }

    #[test]
    fn single_degree_seeds_give_fuss_catalan_with_gaps() {
        for d in 2..=5u64 {
            let g = SeedPolynomial::new([(d, 1)].into_iter().collect()).unwrap();
            for n in 0..=12u64 {
                let a = reversion_coefficient(&g, n);
                if n % (d - 1) == 0 {
                    assert_eq!(a, fuss_catalan(d, n / (d - 1)).unwrap(), "d={d} n={n}");
                } else {
                    assert!(a.is_zero(), "d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn empty_seed_reverts_to_the_identity() {
        let g = SeedPolynomial::empty();
        assert_eq!(reversion_coefficient(&g, 0), nat("1"));
        for n in 1..=6u64 {
            assert!(reversion_coefficient(&g, n).is_zero());
        }
        let series = reversion_series(&g, 5);
        assert_eq!(series.coeffs()[1], Int::from(1));
        assert!(series.coeffs()[2..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn reversion_series_lays_out_coefficients_shifted_by_one() {
        let z = reversion_series(&seed("2:1,3:1"), 7);
        let expect: Vec<Int> =
            [0, 1, 1, 3, 10, 38, 154, 654].iter().map(|&c| Int::from(c)).collect();
        assert_eq!(z.coeffs(), &expect[..]);
        assert_eq!(reversion_series(&seed("2:1"), 0).coeffs(), &[Int::zero()]);
    }

    #[test]
    fn decompose_splits_the_super_catalan_number() {
        let rows = decompose_super_catalan(3);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].lambda, lambda(&[1, 1, 1]));
        assert_eq!(rows[0].count, nat("5"));
        assert_eq!(rows[1].lambda, lambda(&[2, 1]));
        assert_eq!(rows[1].count, nat("5"));
        assert_eq!(rows[2].lambda, lambda(&[3]));
        assert_eq!(rows[2].count, nat("1"));

        let zero = decompose_super_catalan(0);
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].lambda, PartitionType::empty());
        assert_eq!(zero[0].count, nat("1"));

        for n in 0..=10u64 {
            let total: Nat =
                decompose_super_catalan(n).iter().map(|t| t.count.clone()).sum();
            assert_eq!(total, super_catalan(n), "n = {n}");
        }
    }
}
