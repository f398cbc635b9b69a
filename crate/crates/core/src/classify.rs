//! Classification predicates: rational, elliptic, Rees-algebra normality,
//! `p_g`-ideal, the boundary case `p_g = C(nr(m), 2)`, and what can be said
//! about `nr(A)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::filtration::normal_reduction_number;
use crate::genus::geometric_genus;
use crate::numtheory::binomial;
use crate::resolution::resolve;
use crate::ring::{expand_monomial_power, BrieskornTriple, Monomial};

pub fn is_rational(t: &BrieskornTriple) -> Result<bool> {
    Ok(geometric_genus(t)? == 0)
}

/// Membership in the explicit list of elliptic triples.
pub fn elliptic_list(a: i64, b: i64, c: i64) -> bool {
    match (a, b) {
        (2, 3) => c >= 6,
        (2, 4) => c >= 4,
        (2, 5) => (5..=9).contains(&c),
        (3, 3) => c >= 3,
        (3, 4) => (4..=5).contains(&c),
        _ => false,
    }
}

/// `p_f = 1`, computed on the resolution graph and checked against the list.
pub fn is_elliptic(t: &BrieskornTriple) -> Result<bool> {
    let r = resolve(t)?;
    if let Some(formula) = r.pf_formula {
        if formula != r.pf {
            return Err(disagreement(
                t,
                format!("p_f formula {formula}, graph {}", r.pf),
            ));
        }
    }
    let by_graph = r.pf == 1;
    let (a, b, c) = t.exponents();
    let listed = elliptic_list(a, b, c);
    if by_graph != listed {
        return Err(disagreement(
            t,
            format!("p_f = {}, listed elliptic = {listed}", r.pf),
        ));
    }
    Ok(by_graph)
}

/// The normal Rees algebra `R(m)` is normal iff `br(m) = a - 1`.
pub fn rees_normal(t: &BrieskornTriple) -> bool {
    normal_reduction_number(t) as i64 == t.a() - 1
}

/// The normalized Rees algebra of `m` is Cohen-Macaulay iff `br(m) = 1`.
pub fn normal_rees_cohen_macaulay(t: &BrieskornTriple) -> bool {
    normal_reduction_number(t) == 1
}

/// `m` is a `p_g`-ideal iff `a = 2` and `br(m) = 1`.
pub fn is_pg_ideal_m(t: &BrieskornTriple) -> bool {
    t.a() == 2 && t.n(1) == 1
}

/// `p_g = C(nr(m), 2)` by lattice count.
pub fn boundary_by_genus(t: &BrieskornTriple) -> Result<bool> {
    let nr = normal_reduction_number(t) as i64;
    Ok(geometric_genus(t)? == binomial(nr, 2))
}

/// Membership in the listed boundary families.
pub fn boundary_list(a: i64, b: i64, c: i64) -> bool {
    match a {
        2 => match b {
            2 => true,
            3 => c <= 5,
            4 => c <= 7,
            _ if b % 2 == 0 => c <= b + 2,
            _ => c <= b + 1,
        },
        3 => match b % 3 {
            0 => b == 3 && c <= 5,
            1 => c == b,
            _ => c <= b + 1,
        },
        _ => false,
    }
}

/// The boundary case, requiring the lattice count and the list to agree.
pub fn boundary_case(t: &BrieskornTriple) -> Result<bool> {
    let by_genus = boundary_by_genus(t)?;
    let (a, b, c) = t.exponents();
    let listed = boundary_list(a, b, c);
    if by_genus != listed {
        let pg = geometric_genus(t)?;
        let nr = normal_reduction_number(t) as i64;
        return Err(disagreement(
            t,
            format!(
                "p_g = {pg}, C(nr(m),2) = {}, listed = {listed}",
                binomial(nr, 2)
            ),
        ));
    }
    Ok(by_genus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NrStatus {
    Exact,
    LowerBound,
}

impl NrStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            NrStatus::Exact => "exact",
            NrStatus::LowerBound => "lower_bound",
        }
    }
}

/// What is known about `nr(A)`, the supremum of `nr(I)` over `m`-primary
/// integrally closed ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NrInference {
    pub status: NrStatus,
    pub value: u64,
}

/// `nr(A) >= nr(m)` always, with equality when `p_g < C(nr(m)+1, 2)`.
///
/// Listed boundary triples get `nr(A) = nr(m)` only when the lattice count
/// confirms the listing. Triples carrying a certificate for an ideal with
/// normal reduction number 3 are raised to a lower bound of 3.
pub fn infer_nr_a(t: &BrieskornTriple) -> Result<NrInference> {
    let nr = normal_reduction_number(t);
    let pg = geometric_genus(t)?;
    let (a, b, c) = t.exponents();
    let confirmed_boundary = boundary_list(a, b, c) && boundary_by_genus(t)?;
    if confirmed_boundary || pg < binomial(nr as i64 + 1, 2) {
        return Ok(NrInference {
            status: NrStatus::Exact,
            value: nr,
        });
    }
    let value = if in_certificate_family(t) && verify_nr3_certificate(t)? {
        nr.max(3)
    } else {
        nr
    };
    Ok(NrInference {
        status: NrStatus::LowerBound,
        value,
    })
}

/// `br(A) = 2` iff `p_f = 1`, except for `(3,4,6)` and `(3,4,7)` where it is
/// not known (`None`).
pub fn br_a_is_two(t: &BrieskornTriple) -> Result<Option<bool>> {
    if matches!(t.exponents(), (3, 4, 6) | (3, 4, 7)) {
        return Ok(None);
    }
    Ok(Some(resolve(t)?.pf == 1))
}

fn in_certificate_family(t: &BrieskornTriple) -> bool {
    matches!(t.exponents(), (2, 5, c) if c >= 10) || matches!(t.exponents(), (3, 4, c) if c >= 8)
}

/// `y^u z^v` lies in `(y, z^2)^n` iff `u + floor(v/2) >= n`.
fn in_q_power(u: u64, v: u64, n: u64) -> bool {
    u + v / 2 >= n
}

/// Checks that `f = xz` (for `(2,5,c)`, `c >= 10`) or `f = x^2 z` (for
/// `(3,4,c)`, `c >= 8`) is outside `Q = (y, z^2)` while `f^a` lies in
/// `Q^{3a}` = `(Q^3)^a`. Then `f` is integral over `Q^3` but not in `Q Q^2`,
/// which forces `nr` of the closure of `Q` to be at least 3.
pub fn verify_nr3_certificate(t: &BrieskornTriple) -> Result<bool> {
    if !in_certificate_family(t) {
        let (a, b, c) = t.exponents();
        return Err(Error::OutsideCertificateFamily { a, b, c });
    }
    let f = Monomial::new(t.a() as usize - 1, 0, 1);
    let power = t.a() as u64;
    let outside_q = !in_q_power(f.i, f.j, 1);
    let power_in = expand_monomial_power(t, f, power)
        .iter()
        .filter(|term| term.coeff != 0)
        .all(|term| in_q_power(term.y, term.z, 3 * power));
    Ok(outside_q && power_in)
}

fn disagreement(t: &BrieskornTriple, detail: String) -> Error {
    let (a, b, c) = t.exponents();
    Error::PathDisagreement { a, b, c, detail }
}
