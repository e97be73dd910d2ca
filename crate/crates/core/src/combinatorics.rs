//! Exact factorial-family primitives over big naturals.
//!
//! All counting in this crate reduces to products and exactly-divisible
//! quotients of binomial coefficients, multinomial coefficients and falling
//! factorials. Divisions that are integral by theorem go through
//! [`exact_div`], which checks divisibility in debug builds so a wrong
//! formula fails loudly instead of silently truncating.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision natural number used for every count in this crate.
pub type Nat = BigUint;

/// Quotient `numer / denom`, asserting exact divisibility in debug builds.
pub(crate) fn exact_div(numer: Nat, denom: &Nat) -> Nat {
    debug_assert!(!denom.is_zero(), "exact_div by zero");
    let (q, r) = numer.div_rem(denom);
    debug_assert!(r.is_zero(), "exact_div: {numer} is not divisible by {denom}");
    q
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Computed by the multiplicative formula with stepwise exact division:
/// after the `i`-th step the accumulator holds `C(n - k + i, i)`, which is
/// integral, so no rational intermediate is ever needed.
pub fn binomial(n: u64, k: u64) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 1..=k {
        acc *= Nat::from(n - k + i);
        acc = exact_div(acc, &Nat::from(i));
    }
    acc
}

/// Factorial `n!`.
pub fn factorial(n: u64) -> Nat {
    let mut acc = Nat::one();
    for i in 2..=n {
        acc *= Nat::from(i);
    }
    acc
}

/// Multinomial coefficient `k! / (parts_1! ... parts_r!)`.
///
/// Rejects part lists that do not sum to `k`. Computed as a telescoping
/// product of binomials, so every intermediate is an integer.
pub fn multinomial(k: u64, parts: &[u64]) -> Result<Nat, Error> {
    let part_sum: u64 = parts.iter().sum();
    if part_sum != k {
        return Err(Error::MultinomialSumMismatch { k, part_sum });
    }
    let mut remaining = k;
    let mut acc = Nat::one();
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    Ok(acc)
}

/// Falling factorial `(y)_k = y (y-1) ... (y-k+1)`, with `(y)_0 = 1`.
///
/// Rejects `k > y`: the counting identities served here never step below 1.
pub fn falling_factorial(y: u64, k: u64) -> Result<Nat, Error> {
    if k > y {
        return Err(Error::FallingFactorialUnderflow { y, k });
    }
    let mut acc = Nat::one();
    for i in 0..k {
        acc *= Nat::from(y - i);
    }
    Ok(acc)
}

/// Product of factorials of a slice, `prod_i (r_i)!`.
pub(crate) fn factorial_product(rs: &[u64]) -> Nat {
    let mut acc = Nat::one();
    for &r in rs {
        acc *= factorial(r);
    }
    acc
}

/// Convenience: parse-free construction of `Nat` from decimal digits in
/// tests and fixtures.
pub fn nat(decimal: &str) -> Nat {
    Nat::parse_bytes(decimal.as_bytes(), 10).expect("valid decimal literal")
}

/// All `Nat`s in a slice, rendered as decimal strings (stable output order).
pub fn to_decimal_strings(values: &[Nat]) -> Vec<alloc::string::String> {
    values.iter().map(|v| v.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), nat("1"));
        assert_eq!(binomial(6, 2), nat("15"));
        assert_eq!(binomial(6, 3), nat("20"));
        assert_eq!(binomial(5, 9), nat("0"));
        assert_eq!(binomial(52, 5), nat("2598960"));
    }

    #[test]
    fn binomial_matches_pascal_triangle_up_to_60() {
        // Independent oracle: additive Pascal recurrence, no division at all.
        let mut row: Vec<Nat> = alloc::vec![Nat::one()];
        for n in 0..=60u64 {
            for (k, entry) in row.iter().enumerate() {
                assert_eq!(binomial(n, k as u64), *entry, "C({n},{k})");
            }
            let mut next = alloc::vec![Nat::one()];
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(Nat::one());
            row = next;
        }
    }

    #[test]
    fn multinomial_from_factorials() {
        // Oracle: direct factorial quotient.
        assert_eq!(multinomial(3, &[3]).unwrap(), nat("1"));
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), nat("2"));
        let m = multinomial(7, &[2, 2, 2, 1]).unwrap();
        assert_eq!(m, nat("630"));
        let oracle = exact_div(
            factorial(7),
            &(factorial(2) * factorial(2) * factorial(2) * factorial(1)),
        );
        assert_eq!(m, oracle);
    }

    #[test]
    fn multinomial_rejects_bad_sum() {
        assert_eq!(
            multinomial(5, &[2, 2]),
            Err(Error::MultinomialSumMismatch { k: 5, part_sum: 4 })
        );
    }

    #[test]
    fn multinomial_is_order_invariant() {
        let base = multinomial(9, &[4, 3, 2]).unwrap();
        for perm in [[4, 2, 3], [3, 4, 2], [3, 2, 4], [2, 4, 3], [2, 3, 4]] {
            assert_eq!(multinomial(9, &perm).unwrap(), base);
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 0).unwrap(), nat("1"));
        assert_eq!(falling_factorial(9, 4).unwrap(), nat("3024"));
        assert_eq!(falling_factorial(24, 7).unwrap(), nat("1744364160"));
        assert_eq!(falling_factorial(7, 7).unwrap(), factorial(7));
        assert_eq!(
            falling_factorial(3, 4),
            Err(Error::FallingFactorialUnderflow { y: 3, k: 4 })
        );
    }

    #[test]
    fn falling_factorial_matches_factorial_quotient() {
        for y in 0..=20u64 {
            for k in 0..=y {
                let oracle = exact_div(factorial(y), &factorial(y - k));
                assert_eq!(falling_factorial(y, k).unwrap(), oracle, "({y})_{k}");
            }
        }
    }
}
