//! Geometric genus as a lattice-point count and the invariant `q(m)`.

use crate::error::{Error, Result};
use crate::filtration::{normal_reduction_number, q_sequence};
use crate::numtheory::{add, binomial};
use crate::ring::BrieskornTriple;

/// `p_g(A)`: the number of `(t0, t1, t2) >= 0` with
/// `q0 t0 + q1 t1 + q2 t2 <= a(B)`.
pub fn geometric_genus(t: &BrieskornTriple) -> Result<i64> {
    let budget = t.a_invariant();
    if budget < 0 {
        return Ok(0);
    }
    let [q0, q1, q2] = t.weights();
    let mut count = 0i64;
    let mut rest0 = budget;
    while rest0 >= 0 {
        let mut rest1 = rest0;
        while rest1 >= 0 {
            count = add(count, rest1 / q2 + 1, "geometric genus")?;
            rest1 -= q1;
        }
        rest0 -= q0;
    }
    Ok(count)
}

/// `sum_{k=1}^{a-1} (n_k - n_{k-1})(a - k)`, which telescopes to `sum_k n_k`.
pub fn qm_printed_sum(t: &BrieskornTriple) -> i64 {
    let n = t.n_values();
    (1..t.levels())
        .map(|k| (n[k] - n[k - 1]) * (t.a() - k as i64))
        .sum()
}

/// `q(m) = p_g - sum_{n >= 1} v_n`.
///
/// The drops `v_n` for `n >= 1` add up to `sum_k (n_k - n_{k-1})(a-k) - (a-1)`:
/// the staircase sum also counts `v_0 = a - 1`, which does not enter `q(m)`.
pub fn q_of_m(t: &BrieskornTriple) -> Result<i64> {
    let pg = geometric_genus(t)?;
    let value = pg - (qm_printed_sum(t) - (t.a() - 1));
    if value < 0 {
        return Err(Error::NegativeQ { n: 1, value });
    }
    Ok(value)
}

/// `p_g >= C(nr, 2) + q(nr m)` with `nr = nr(m)`.
pub fn pg_lower_bound_check(t: &BrieskornTriple) -> Result<bool> {
    let pg = geometric_genus(t)?;
    let nr = normal_reduction_number(t);
    let seq = q_sequence(t, pg)?;
    Ok(pg >= binomial(nr as i64, 2) + seq.q_at(nr as usize))
}
