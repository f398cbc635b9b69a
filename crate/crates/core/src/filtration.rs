//! The normal filtration `closure(m^n)`: reduction numbers, the colength drops
//! `v_n = l(closure(m^{n+1}) / Q closure(m^n))`, the sequence `q(n m)` and the
//! normal Hilbert coefficients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{binomial, ceil_div};
use crate::ring::{closure_of_m_power, BrieskornTriple};

/// `nr(m) = br(m) = n_{a-1} = floor((a-1)b/a)`.
pub fn normal_reduction_number(t: &BrieskornTriple) -> u64 {
    t.n_top() as u64
}

/// Reduction numbers read off the staircase directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StaircaseReduction {
    pub nr: u64,
    pub br: u64,
    /// Last exponent `N` for which `closure(m^{N+1}) = Q closure(m^N)` was compared.
    pub horizon: u64,
}

/// Compares `closure(m^{n+1})` with `Q closure(m^n)` for `n = 0..=n_{a-1}+a`.
///
/// `nr` is the first `n` where they agree; `br` is the first `n` from which they
/// agree up to the horizon.
pub fn nr_by_staircase_oracle(t: &BrieskornTriple) -> StaircaseReduction {
    let horizon = (t.n_top() + t.a()) as u64;
    let stable: Vec<bool> = (0..=horizon)
        .map(|n| closure_of_m_power(t, n).multiply_by_q() == closure_of_m_power(t, n + 1))
        .collect();
    let nr = stable
        .iter()
        .position(|&s| s)
        .map_or(horizon + 1, |n| n as u64);
    let br = stable.iter().rposition(|&s| !s).map_or(0, |n| n as u64 + 1);
    StaircaseReduction { nr, br, horizon }
}

/// `v_n = max(a - ceil(a(n+1)/b), 0)`.
pub fn colength_drop(t: &BrieskornTriple, n: u64) -> u64 {
    let n = n as i64;
    (t.a() - ceil_div(t.a() * (n + 1), t.b())).max(0) as u64
}

/// `v_n` as `l(A / Q closure(m^n)) - l(A / closure(m^{n+1}))`.
pub fn colength_drop_by_staircase(t: &BrieskornTriple, n: u64) -> Result<u64> {
    let outer = closure_of_m_power(t, n).multiply_by_q().colength()?;
    let inner = closure_of_m_power(t, n + 1).colength()?;
    Ok((outer - inner) as u64)
}

/// Coefficients of `l(A/closure(m^{n+1})) = e0 C(n+2,2) - e1 (n+1) + e2` for large `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilbertCoefficients {
    pub e0: i64,
    pub e1: i64,
    pub e2: i64,
}

/// Fits the normal Hilbert polynomial through three colengths past
/// stabilization and checks it against a fourth.
pub fn normal_hilbert_coefficients(t: &BrieskornTriple) -> Result<HilbertCoefficients> {
    let base = t.n_top();
    let colength = |n: i64| closure_of_m_power(t, (n + 1) as u64).colength();
    let p: Vec<i64> = (base..base + 4).map(colength).collect::<Result<_>>()?;

    let e0 = p[2] - 2 * p[1] + p[0];
    // remainder(n) = e0 C(n+2,2) - P(n) = e1 (n+1) - e2
    let remainder = |offset: usize| e0 * binomial(base + offset as i64 + 2, 2) - p[offset];
    let e1 = remainder(1) - remainder(0);
    let e2 = e1 * (base + 1) - remainder(0);

    let n = base + 3;
    if e0 * binomial(n + 2, 2) - e1 * (n + 1) + e2 != p[3] {
        return Err(Error::HilbertFit);
    }
    Ok(HilbertCoefficients { e0, e1, e2 })
}

/// The sequence `q(n m)` together with the data that determines it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QSequence {
    pub pg: i64,
    pub nr: u64,
    pub br: u64,
    /// `v_n` for `n = 0..=br`.
    pub v: Vec<i64>,
    /// `q(n m)` for `n = 0..=br+1`; constant from `br` on.
    pub q: Vec<i64>,
    pub hilbert: HilbertCoefficients,
}

impl QSequence {
    /// `q(n m)` for any `n`.
    pub fn q_at(&self, n: usize) -> i64 {
        self.q[n.min(self.q.len() - 1)]
    }

    /// `v_n` for any `n`.
    pub fn v_at(&self, n: usize) -> i64 {
        self.v.get(n).copied().unwrap_or(0)
    }
}

/// Builds `q(n m)` from `p_g` and the colength drops.
///
/// From `2q_n + v_n = q_{n+1} + q_{n-1}`, `q_0 = p_g` and eventual constancy,
/// the first differences are `q_{n-1} - q_n = sum_{k >= n} v_k`, so
/// `q_n = p_g - sum_{k >= 1} min(n, k) v_k`.
pub fn q_sequence(t: &BrieskornTriple, pg: i64) -> Result<QSequence> {
    let nr = normal_reduction_number(t);
    let br = nr;
    let v: Vec<i64> = (0..=br).map(|n| colength_drop(t, n) as i64).collect();
    let q = (0..=br as usize + 1)
        .map(|n| {
            let drop: i64 = v
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &vk)| k.min(n) as i64 * vk)
                .sum();
            let value = pg - drop;
            if value < 0 {
                Err(Error::NegativeQ { n, value })
            } else {
                Ok(value)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QSequence {
        pg,
        nr,
        br,
        v,
        q,
        hilbert: normal_hilbert_coefficients(t)?,
    })
}
