//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use brieskorn::classify::{
    boundary_list, elliptic_list, infer_nr_a, verify_nr3_certificate, NrStatus,
};
use brieskorn::filtration::{
    normal_hilbert_coefficients, normal_reduction_number, nr_by_staircase_oracle, q_sequence,
    HilbertCoefficients,
};
use brieskorn::genus::{geometric_genus, pg_lower_bound_check, qm_printed_sum};
use brieskorn::numtheory::binomial;
use brieskorn::resolution::{fundamental_genus_oracle, neg_z_squared_formula, resolve};
use brieskorn::BrieskornTriple;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn triple(a: i64, b: i64, c: i64) -> BrieskornTriple {
    BrieskornTriple::new(a, b, c).expect("valid triple")
}

fn triples(max: i64) -> Vec<BrieskornTriple> {
    (2..=max)
        .flat_map(|a| (a..=max).flat_map(move |b| (b..=max).map(move |c| triple(a, b, c))))
        .collect()
}

/// First failure in lexicographic order, or the number of triples checked.
fn over_triples(
    max: i64,
    check: impl Fn(&BrieskornTriple) -> Result<(), String> + Sync,
) -> Outcome {
    let ts = triples(max);
    let results: Vec<Result<(), String>> = ts.par_iter().map(&check).collect();
    match ts
        .iter()
        .zip(results)
        .find_map(|(t, r)| r.err().map(|e| (t, e)))
    {
        Some((t, e)) => Err(format!("{t}: {e}")),
        None => Ok(format!("{} triples", ts.len())),
    }
}

fn nr_formula() -> Outcome {
    over_triples(25, |t| {
        let r = nr_by_staircase_oracle(t);
        let nr = normal_reduction_number(t);
        if r.nr == nr && r.br == nr {
            Ok(())
        } else {
            Err(format!("staircase nr={} br={}, formula {nr}", r.nr, r.br))
        }
    })
}

fn pg_families() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut expect = |a: i64, b: i64, c: i64, value: i64| {
        checked += 1;
        let pg = geometric_genus(&triple(a, b, c)).unwrap();
        if pg != value {
            failures.push(format!("p_g({a},{b},{c}) = {pg}, table {value}"));
        }
    };
    for p in 1..=10 {
        expect(2, 3, 6 * p + 1, p);
        expect(2, 4, 4 * p + 1, p);
    }
    let b6 = [0, 0, 0, 1, 1, 1, 3, 3, 3, 4];
    let b7 = [0, 0, 0, 1, 1, 2, 3, 3, 3, 4, 5, 5, 6, 6];
    for k in 1..=3 {
        for (i, offset) in b6.iter().enumerate() {
            expect(2, 6, 10 * k + i as i64, 6 * k + offset);
        }
        for (i, offset) in b7.iter().enumerate() {
            expect(2, 7, 14 * k + i as i64, 9 * k + offset);
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} values"))
    } else {
        Err(format!(
            "{} of {checked} values differ; first: {}",
            failures.len(),
            failures[0]
        ))
    }
}

fn golden_347() -> Outcome {
    let t = triple(3, 4, 7);
    let r = resolve(&t).map_err(|e| e.to_string())?;
    let pg = geometric_genus(&t).map_err(|e| e.to_string())?;
    let g = &r.graph;
    let mut weights: Vec<i64> = g.vertices().iter().map(|v| v.self_intersection).collect();
    weights.sort_unstable();
    let chain_lengths: Vec<usize> = (1..=3).map(|w| g.branch_fraction(w).len()).collect();
    let chains: Vec<Vec<i64>> = (1..=3)
        .map(|w| g.branch_fraction(w).expansion().to_vec())
        .collect();
    let checks = [
        ("p_g = 3", pg == 3),
        ("p_f = 2", r.pf == 2 && r.pf_formula == Some(2)),
        ("nr(m) = 2", normal_reduction_number(&t) == 2),
        ("8 vertices", g.len() == 8),
        (
            "weights -4, -2 x7",
            weights == [-4, -2, -2, -2, -2, -2, -2, -2],
        ),
        ("branch lengths 2,3,2", chain_lengths == [2, 3, 2]),
        (
            "chains [2,2],[2,2,2],[2,4]",
            chains == [vec![2, 2], vec![2, 2, 2], vec![2, 4]],
        ),
        (
            "star with 3 arms",
            g.attached_chains() == 3 && g.edge_count() == 7,
        ),
        ("centre genus 0", g.vertices()[0].genus == 0),
        (
            "c_0 = 2",
            r.seifert.c0 == 2 && g.vertices()[0].self_intersection == -2,
        ),
        ("-Z^2 = 2", r.z_squared() == -2),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("{name} does not hold")),
        None => Ok(format!("{} checks", checks.len())),
    }
}

fn pf_cross_check() -> Outcome {
    let applicable = std::sync::atomic::AtomicUsize::new(0);
    let summary = over_triples(20, |t| {
        let r = resolve(t).map_err(|e| e.to_string())?;
        let Some(formula) = r.pf_formula else {
            return Ok(());
        };
        applicable.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        let neg_z2 = neg_z_squared_formula(t).map_err(|e| e.to_string())?;
        if formula == r.pf && neg_z2 == -r.z_squared() {
            Ok(())
        } else {
            Err(format!(
                "p_f {formula} vs {}; -Z^2 {neg_z2} vs {}",
                r.pf,
                -r.z_squared()
            ))
        }
    })?;
    Ok(format!(
        "{summary}, {} with the closed form applicable",
        applicable.into_inner()
    ))
}

fn elliptic_set() -> Outcome {
    let ts = triples(60);
    let pf: Vec<Result<i64, String>> = ts
        .par_iter()
        .map(|t| {
            let g = resolve(t).map_err(|e| e.to_string())?.graph;
            fundamental_genus_oracle(&g).map_err(|e| e.to_string())
        })
        .collect();
    let mut by_graph = BTreeSet::new();
    for (t, pf) in ts.iter().zip(pf) {
        if pf.map_err(|e| format!("{t}: {e}"))? == 1 {
            by_graph.insert(t.exponents());
        }
    }
    let listed: BTreeSet<_> = ts
        .iter()
        .map(BrieskornTriple::exponents)
        .filter(|&(a, b, c)| elliptic_list(a, b, c))
        .collect();
    compare_sets(&by_graph, &listed, ts.len())
}

fn compare_sets(
    computed: &BTreeSet<(i64, i64, i64)>,
    listed: &BTreeSet<(i64, i64, i64)>,
    total: usize,
) -> Outcome {
    let missing: Vec<_> = listed.difference(computed).collect();
    let extra: Vec<_> = computed.difference(listed).collect();
    if missing.is_empty() && extra.is_empty() {
        return Ok(format!("{} of {total} triples, sets equal", computed.len()));
    }
    Err(format!(
        "computed {} vs listed {}; listed only: {} (first {:?}); computed only: {} (first {:?})",
        computed.len(),
        listed.len(),
        missing.len(),
        missing.first(),
        extra.len(),
        extra.first()
    ))
}

fn hilbert_a2() -> Outcome {
    let mut checked = 0;
    for b in 2..=20 {
        for c in b..=20 {
            let t = triple(2, b, c);
            let r = b / 2;
            let expected = HilbertCoefficients {
                e0: 2,
                e1: r,
                e2: binomial(r, 2),
            };
            let fitted = normal_hilbert_coefficients(&t).map_err(|e| e.to_string())?;
            if fitted != expected {
                return Err(format!("{t}: fitted {fitted:?}, expected {expected:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} triples"))
}

fn q_recursion() -> Outcome {
    let recursion = over_triples(25, |t| {
        let pg = geometric_genus(t).map_err(|e| e.to_string())?;
        let seq = q_sequence(t, pg).map_err(|e| e.to_string())?;
        for n in 1..=seq.br as usize + 1 {
            if 2 * seq.q_at(n) + seq.v_at(n) != seq.q_at(n + 1) + seq.q_at(n - 1) {
                return Err(format!("recursion fails at n = {n}"));
            }
        }
        Ok(())
    });
    // q_1 against the printed closed form p_g - sum_k (n_k - n_{k-1})(a - k)
    let printed = over_triples(25, |t| {
        let pg = geometric_genus(t).map_err(|e| e.to_string())?;
        let seq = q_sequence(t, pg).map_err(|e| e.to_string())?;
        let printed = pg - qm_printed_sum(t);
        if seq.q_at(1) == printed {
            Ok(())
        } else {
            Err(format!(
                "q_1 = {}, printed closed form {printed}",
                seq.q_at(1)
            ))
        }
    });
    let a_two = over_triples(25, |t| {
        if t.a() != 2 {
            return Ok(());
        }
        let pg = geometric_genus(t).map_err(|e| e.to_string())?;
        let seq = q_sequence(t, pg).map_err(|e| e.to_string())?;
        let r = t.n(1);
        for i in 0..r {
            let expected = pg - i * (r - 1) + binomial(i, 2);
            if seq.q_at(i as usize) != expected {
                return Err(format!(
                    "q({i} m) = {}, closed form {expected}",
                    seq.q_at(i as usize)
                ));
            }
        }
        Ok(())
    });
    let parts = [
        ("recursion", recursion),
        ("q_1 closed form", printed),
        ("a = 2 closed form", a_two),
    ];
    let failed: Vec<String> = parts
        .iter()
        .filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}")))
        .collect();
    let passed: Vec<&str> = parts
        .iter()
        .filter(|(_, r)| r.is_ok())
        .map(|(n, _)| *n)
        .collect();
    if failed.is_empty() {
        Ok(format!("{} sub-checks", parts.len()))
    } else {
        Err(format!(
            "{}; passing: {}",
            failed.join("; "),
            passed.join(", ")
        ))
    }
}

fn boundary_set() -> Outcome {
    let ts = triples(60);
    let flags: Vec<Result<bool, String>> = ts
        .par_iter()
        .map(|t| {
            let nr = normal_reduction_number(t) as i64;
            geometric_genus(t)
                .map(|pg| pg == binomial(nr, 2))
                .map_err(|e| e.to_string())
        })
        .collect();
    let mut by_genus = BTreeSet::new();
    for (t, flag) in ts.iter().zip(flags) {
        if flag.map_err(|e| format!("{t}: {e}"))? {
            by_genus.insert(t.exponents());
        }
    }
    let listed: BTreeSet<_> = ts
        .iter()
        .map(BrieskornTriple::exponents)
        .filter(|&(a, b, c)| boundary_list(a, b, c))
        .collect();
    compare_sets(&by_genus, &listed, ts.len())
}

fn certificates() -> Outcome {
    let family = (10..=30)
        .map(|c| triple(2, 5, c))
        .chain((8..=30).map(|c| triple(3, 4, c)));
    let mut checked = 0;
    for t in family {
        if !verify_nr3_certificate(&t).map_err(|e| format!("{t}: {e}"))? {
            return Err(format!("{t}: certificate does not validate"));
        }
        let inference = infer_nr_a(&t).map_err(|e| format!("{t}: {e}"))?;
        if inference.status != NrStatus::LowerBound || inference.value < 3 {
            return Err(format!("{t}: nr(A) inference {inference:?}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} triples"))
}

fn pg_bound() -> Outcome {
    over_triples(25, |t| match pg_lower_bound_check(t) {
        Ok(true) => Ok(()),
        Ok(false) => Err("p_g < C(nr,2) + q_nr".to_string()),
        Err(e) => Err(e.to_string()),
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "nr(m) formula vs staircase oracle, br = nr, a,b,c <= 25",
            nr_formula,
        ),
        (
            "p_g one-parameter families and b = 6, 7 tables",
            pg_families,
        ),
        ("(3,4,7) golden case", golden_347),
        (
            "closed-form p_f and -Z^2 vs Laufer cycle, a,b,c <= 20",
            pf_cross_check,
        ),
        ("elliptic set equals list, a,b,c <= 60", elliptic_set),
        (
            "normal Hilbert coefficients for a = 2, b,c <= 20",
            hilbert_a2,
        ),
        (
            "q recursion, q_1 closed form, a = 2 closed form, a,b,c <= 25",
            q_recursion,
        ),
        (
            "boundary set p_g = C(nr,2) equals list, a,b,c <= 60",
            boundary_set,
        ),
        ("nr >= 3 certificates for (2,5,c), (3,4,c)", certificates),
        ("p_g >= C(nr,2) + q_nr, a,b,c <= 25", pg_bound),
    ];
    let mut failures = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS {:>2} {name} ({detail})", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
