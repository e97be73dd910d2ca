//! Truncated formal power series over the integers, and seed polynomials.
//!
//! A [`TruncatedSeries`] keeps coefficients of `x^0 .. x^N` exactly
//! (arbitrary-precision, signed so differences are representable) and drops
//! everything above `x^N`. A [`SeedPolynomial`] is a polynomial
//! `g(z) = sum c_d z^d` with integer multiplicities `c_d >= 1` and degrees
//! `d >= 2`; iterating `z <- g(z) + x` from `z = 0` drives the series to
//! the unique formal fixpoint of `z = g(z) + x`, one new correct
//! coefficient per round.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::parse_u64;

/// Signed exact coefficient type.
pub type Int = BigInt;

/// A power series truncated at a fixed order: coefficients of
/// `x^0 ..= x^order` are stored, higher terms are discarded by every
/// operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Int>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Int::zero(); order + 1] }
    }

    /// The series `x` truncated at `order` (which is the zero series when
    /// `order == 0`).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Int::one();
        }
        s
    }

    /// Build from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Int>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least x^0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; panics above the truncation order.
    pub fn coeff(&self, i: usize) -> &Int {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// `d`-th power, truncated at this series' order. `d = 0` gives 1.
    pub fn pow(&self, d: u64) -> Self {
        let mut acc = Self::zero(self.order());
        acc.coeffs[0] = Int::one();
        for _ in 0..d {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply every coefficient by an integer.
    pub fn scaled(&self, factor: &Int) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Coefficientwise sum, truncated to the shorter of the two orders.
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product, truncated to the shorter of the two orders.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Int::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// A seed polynomial `g(z) = sum_d c_d z^d`: for each degree `d >= 2`, the
/// number of colors `c_d >= 1` available for pieces of that degree. The
/// empty seed is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedPolynomial {
    colors: BTreeMap<u64, u64>,
}

impl SeedPolynomial {
    /// The zero polynomial (no terms).
    pub fn empty() -> Self {
        SeedPolynomial { colors: BTreeMap::new() }
    }

    /// Build from a `degree -> colors` map. Zero-color entries are
    /// dropped; degrees below 2 are rejected.
    pub fn new(colors: BTreeMap<u64, u64>) -> Result<Self, Error> {
        let colors: BTreeMap<u64, u64> =
            colors.into_iter().filter(|&(_, c)| c != 0).collect();
        if let Some((&d, &c)) = colors.iter().find(|&(&d, _)| d < 2) {
            return Err(Error::InvalidSeedTerm { degree: d, color: c });
        }
        Ok(SeedPolynomial { colors })
    }

    /// Parse `"d:c,d:c,..."`; a bare `"d"` means one color. The empty
    /// string is the empty seed.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut colors: BTreeMap<u64, u64> = BTreeMap::new();
        for item in s.split(',') {
            let (d, c) = match item.split_once(':') {
                Some((d, c)) => (parse_u64(d, "seed")?, parse_u64(c, "seed")?),
                None => (parse_u64(item, "seed")?, 1),
            };
            if d < 2 {
                return Err(Error::InvalidSeedTerm { degree: d, color: c });
            }
            *colors.entry(d).or_insert(0) += c;
        }
        Self::new(colors)
    }

    /// Colors available for degree `d` (zero when the term is absent).
    pub fn color(&self, d: u64) -> u64 {
        self.colors.get(&d).copied().unwrap_or(0)
    }

    /// `(degree, colors)` pairs, ascending by degree.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.colors.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Partition part sizes induced by the seed: `{d - 1}`.
    pub fn part_sizes(&self) -> BTreeSet<u64> {
        self.colors.keys().map(|&d| d - 1).collect()
    }

    /// Polygon piece sizes induced by the seed: `{d + 1}`.
    pub fn piece_sizes(&self) -> BTreeSet<usize> {
        self.colors.keys().map(|&d| (d + 1) as usize).collect()
    }

    /// Substitute `z` into the seed and add the forcing term:
    /// `g(z) + x`, truncated at `z`'s order. `z` must have zero constant
    /// term, otherwise the iteration this feeds would not converge
    /// coefficientwise.
    pub fn apply(&self, z: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        if !z.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = TruncatedSeries::x(z.order());
        for (&d, &c) in &self.colors {
            acc = &acc + &z.pow(d).scaled(&Int::from(c));
        }
        Ok(acc)
    }
}

impl fmt::Display for SeedPolynomial {
    /// The parseable `"d:c,d:c"` form; empty seed prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&d, &c) in &self.colors {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{d}:{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Iterate `z <- g(z) + x` from `z = 0` at fixed truncation order until
/// the series stops changing; returns the fixpoint and the number of
/// substitutions performed. Stabilization takes at most `order + 2`
/// substitutions because each round fixes at least one more coefficient.
pub fn iterate_to_fixpoint(g: &SeedPolynomial, order: usize) -> (TruncatedSeries, u64) {
    let mut z = TruncatedSeries::zero(order);
    let mut substitutions = 0u64;
    loop {
        let next = g.apply(&z).expect("iterates keep a zero constant term");
        substitutions += 1;
        if next == z {
            return (z, substitutions);
        }
        z = next;
    }
}

/// Check `z = g(z) + x` exactly through `z`'s truncation order. A series
/// with nonzero constant term never satisfies the equation.
pub fn verify_functional_equation(z: &TruncatedSeries, g: &SeedPolynomial) -> bool {
    match g.apply(z) {
        Ok(applied) => applied == *z,
        Err(_) => false,
    }
}

/// Render a coefficient list as a compact polynomial, mainly for logs and
/// error messages: `0` maps to `"0"`, `[0, 1, 1]` to `"x + x^2"`.
pub fn polynomial_string(coeffs: &[Int]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let show_coeff = !c.is_one() || i == 0;
        if show_coeff {
            out.push_str(&alloc::format!("{c}"));
        }
        match i {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&alloc::format!("x^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
