//! Exact integer helpers and Hirzebruch-Jung continued fractions.
//!
//! A Hirzebruch-Jung (descending) continued fraction is written
//! `[[c_1, ..., c_s]] = c_1 - 1/(c_2 - 1/(... - 1/c_s))` with every `c_j >= 2`.
//! Every reduced fraction `alpha/beta > 1` has exactly one such expansion.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact rational used wherever a quotient is not known to be integral.
pub type Rational = Ratio<i128>;

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// `C(n, k)`, zero when `k > n` or either argument is negative.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * i128::from(n - j) / i128::from(j + 1);
    }
    acc as i64
}

/// Triangular number `m(m+1)/2`: the number of monomials `y^i z^j` with `i + j < m`.
pub fn triangular(m: i64) -> i64 {
    m * (m + 1) / 2
}

pub(crate) fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// A reduced fraction `alpha/beta` together with its Hirzebruch-Jung expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HjFraction {
    numerator: i64,
    denominator: i64,
    expansion: Vec<i64>,
}

impl HjFraction {
    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn expansion(&self) -> &[i64] {
        &self.expansion
    }

    pub fn len(&self) -> usize {
        self.expansion.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expansion.is_empty()
    }
}

/// Expands `alpha/beta` as a Hirzebruch-Jung continued fraction.
///
/// `(1, 0)` is accepted and yields the empty expansion.
pub fn hj_expand(alpha: i64, beta: i64) -> Result<HjFraction> {
    let invalid = Error::InvalidFraction { alpha, beta };
    if alpha < 1 || beta < 0 || beta >= alpha {
        return Err(invalid);
    }
    if beta == 0 {
        return if alpha == 1 {
            Ok(HjFraction {
                numerator: 1,
                denominator: 0,
                expansion: Vec::new(),
            })
        } else {
            Err(invalid)
        };
    }
    if gcd(alpha, beta) != 1 {
        return Err(invalid);
    }

    let mut expansion = Vec::new();
    let (mut num, mut den) = (alpha, beta);
    while den > 0 {
        let c = ceil_div(num, den);
        expansion.push(c);
        (num, den) = (den, c * den - num);
    }
    Ok(HjFraction {
        numerator: alpha,
        denominator: beta,
        expansion,
    })
}

/// Exact value of a non-empty expansion whose entries are all `>= 2`.
pub fn hj_evaluate(expansion: &[i64]) -> Result<Rational> {
    if expansion.is_empty() || expansion.iter().any(|&c| c < 2) {
        return Err(Error::InvalidExpansion(expansion.to_vec()));
    }
    let mut value = Rational::from_integer(i128::from(*expansion.last().unwrap()));
    for &c in expansion.iter().rev().skip(1) {
        value = Rational::from_integer(i128::from(c)) - value.recip();
    }
    Ok(value)
}

/// The unique `0 <= beta < alpha` with `lambda*beta + 1 = 0 (mod alpha)`.
pub fn mod_inverse_negation(lambda: i64, alpha: i64) -> Result<i64> {
    if alpha < 1 || lambda < 1 {
        return Err(Error::NoModularSolution { lambda, alpha });
    }
    if alpha == 1 {
        return Ok(0);
    }
    let residue = lambda.rem_euclid(alpha);
    (0..alpha)
        .find(|&beta| (residue * beta + 1) % alpha == 0)
        .ok_or(Error::NoModularSolution { lambda, alpha })
}
