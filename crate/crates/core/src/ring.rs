//! The Brieskorn ring `A = K[[x,y,z]]/(x^a + y^b + z^c)` in characteristic zero.
//!
//! `A` is free over `K[[y,z]]` with basis `1, x, ..., x^{a-1}`, so every monomial
//! is written `x^k y^i z^j` with `k < a`. With `Q = (y, z)` and
//! `n_k = floor(k*b/a)`, the closure of `m^n` is the staircase
//! `Q^n + x Q^{n-n_1} + ... + x^{a-1} Q^{n-n_{a-1}}`, i.e. the monomials with
//! `i + j >= n - n_k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{binomial, floor_div, gcd, mul, triangular};

/// A validated exponent triple `2 <= a <= b <= c` with its derived constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrieskornTriple {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    n: Vec<i64>,
    weights: [i64; 3],
    degree: i64,
    a_invariant: i64,
}

impl BrieskornTriple {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 2 || a > b || b > c {
            return Err(Error::InvalidTriple { a, b, c });
        }
        let degree = mul(mul(a, b, "abc")?, c, "abc")?;
        let weights = [
            mul(b, c, "weight bc")?,
            mul(a, c, "weight ac")?,
            mul(a, b, "weight ab")?,
        ];
        let a_invariant = degree - weights.iter().sum::<i64>();
        let n = (0..a).map(|k| floor_div(k * b, a)).collect();
        Ok(Self {
            a,
            b,
            c,
            d: gcd(a, b),
            n,
            weights,
            degree,
            a_invariant,
        })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn exponents(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    /// `gcd(a, b)`.
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn a_prime(&self) -> i64 {
        self.a / self.d
    }

    pub fn b_prime(&self) -> i64 {
        self.b / self.d
    }

    /// `n_k = floor(k*b/a)` for `0 <= k < a`.
    pub fn n(&self, k: usize) -> i64 {
        self.n[k]
    }

    pub fn n_values(&self) -> &[i64] {
        &self.n
    }

    /// `n_{a-1}`, the last step of the staircase.
    pub fn n_top(&self) -> i64 {
        *self.n.last().expect("a >= 2")
    }

    /// Number of `x`-levels in the basis, i.e. `a`.
    pub fn levels(&self) -> usize {
        self.n.len()
    }

    /// Grading weights `(q0, q1, q2) = (bc, ac, ab)` of `x, y, z`.
    pub fn weights(&self) -> [i64; 3] {
        self.weights
    }

    /// `D = abc`, the weighted degree of the defining equation.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `a(B) = D - q0 - q1 - q2`.
    pub fn a_invariant(&self) -> i64 {
        self.a_invariant
    }
}

impl fmt::Display for BrieskornTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The basis monomial `x^k y^i z^j`, `k < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub k: usize,
    pub i: u64,
    pub j: u64,
}

impl Monomial {
    pub fn new(k: usize, i: u64, j: u64) -> Self {
        Self { k, i, j }
    }

    pub fn yz_degree(&self) -> u64 {
        self.i + self.j
    }
}

/// A term `coeff * y^y z^z` of a polynomial in `K[y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YzTerm {
    pub coeff: i64,
    pub y: u64,
    pub z: u64,
}

/// Expands `(x^k y^i z^j)^p` for `p` a multiple of `a` into `K[y, z]`, using
/// `x^a = -(y^b + z^c)`. Zero coefficients cannot occur in characteristic zero.
pub fn expand_monomial_power(t: &BrieskornTriple, m: Monomial, p: u64) -> Vec<YzTerm> {
    assert!(
        p.is_multiple_of(t.a as u64),
        "power must be a multiple of a to clear x"
    );
    let r = (m.k as u64 * p / t.a as u64) as i64;
    let sign = if r % 2 == 0 { 1 } else { -1 };
    (0..=r)
        .map(|s| YzTerm {
            coeff: sign * binomial(r, s),
            y: (t.b * s) as u64 + m.i * p,
            z: (t.c * (r - s)) as u64 + m.j * p,
        })
        .collect()
}

/// A monomial ideal `sum_k x^k Q^{e_k}`; `None` marks an absent level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StaircaseIdeal {
    triple: BrieskornTriple,
    thresholds: Vec<Option<u64>>,
}

impl StaircaseIdeal {
    pub fn new(triple: BrieskornTriple, thresholds: Vec<Option<u64>>) -> Self {
        assert_eq!(
            thresholds.len(),
            triple.levels(),
            "one threshold per x-level"
        );
        Self { triple, thresholds }
    }

    pub fn unit(triple: &BrieskornTriple) -> Self {
        Self::new(triple.clone(), vec![Some(0); triple.levels()])
    }

    pub fn triple(&self) -> &BrieskornTriple {
        &self.triple
    }

    pub fn thresholds(&self) -> &[Option<u64>] {
        &self.thresholds
    }

    pub fn contains(&self, m: Monomial) -> bool {
        match self.thresholds[m.k] {
            Some(e) => m.yz_degree() >= e,
            None => false,
        }
    }

    /// `Q * I`: every present level moves up one `Q`-degree.
    pub fn multiply_by_q(&self) -> Self {
        Self {
            triple: self.triple.clone(),
            thresholds: self.thresholds.iter().map(|e| e.map(|e| e + 1)).collect(),
        }
    }

    /// `l_A(A/I) = sum_k e_k(e_k+1)/2`.
    pub fn colength(&self) -> Result<i64> {
        self.thresholds.iter().try_fold(0i64, |acc, e| {
            let e = e.ok_or(Error::InfiniteColength)?;
            let e = i64::try_from(e).map_err(|_| Error::Overflow("colength"))?;
            Ok(acc + triangular(e))
        })
    }
}

/// The integral closure of `m^n`: thresholds `e_k = max(n - n_k, 0)`.
pub fn closure_of_m_power(t: &BrieskornTriple, n: u64) -> StaircaseIdeal {
    let thresholds = t
        .n_values()
        .iter()
        .map(|&nk| Some((n as i64 - nk).max(0) as u64))
        .collect();
    StaircaseIdeal::new(t.clone(), thresholds)
}

/// Decides `m` in closure(`Q^n`) by raising to the `a`-th power, rewriting
/// `x^{ka}` through the defining relation and checking that every term lands in
/// `Q^{na}`. Independent of the staircase description.
pub fn power_membership_oracle(t: &BrieskornTriple, m: Monomial, n: u64) -> bool {
    let target = n * t.a as u64;
    expand_monomial_power(t, m, t.a as u64)
        .iter()
        .all(|term| term.coeff == 0 || term.y + term.z >= target)
}
