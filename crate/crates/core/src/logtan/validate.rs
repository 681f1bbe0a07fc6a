use serde::{Deserialize, Serialize};

use super::invariants::{InvariantReport, Stability};

/// A broken constraint: a stable rule identifier and a human-readable explanation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub detail: String,
}

/// Checks a report against the known bounds on `e`, `m`, `Bour` and the Chern classes.
pub fn validate_theorems(r: &InvariantReport) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut check = |ok: bool, rule: &str, detail: String| {
        if !ok {
            out.push(Violation { rule: rule.to_string(), detail });
        }
    };
    let (e, m, bour, d, m0) = (r.e, r.m, r.bour, r.d, r.m0);

    check(e <= d, "indeg_bound", format!("e = {e} exceeds d = {d}"));
    check((0..=m0).contains(&m), "m_range", format!("m = {m} outside [0, {m0}]"));
    check(
        (m == m0) == (e == 0) && r.compressible == (e == 0),
        "compressible_extremal",
        format!("m = {m}, m0 = {m0}, e = {e}, compressible = {}", r.compressible),
    );
    check((0..=m0).contains(&bour), "bour_bound", format!("Bour = {bour} outside [0, {m0}]"));
    if e == 1 {
        check(bour <= 2, "indeg1_bour", format!("e = 1 but Bour = {bour} is not in {{0, 1, 2}}"));
    }
    if e == 2 {
        check(bour <= 5, "indeg2_bour", format!("e = 2 but Bour = {bour} exceeds 5"));
    }

    let stable = r.stability == Stability::Stable;
    let semistable = r.stability != Stability::Unstable;
    let free_with = |table: &[(i64, i64)]| table.iter().any(|&(mm, ee)| mm == m && ee == e);
    let free_m = |table: &[(i64, i64)]| table.iter().any(|&(mm, _)| mm == m);
    match (r.d_f, r.d_g) {
        (2, 2) => {
            let table = [(12, 0), (9, 1), (8, 2)];
            check(m <= 12, "cubic_pencil_m_bound", format!("m = {m} exceeds 12"));
            check(
                r.flags.free == free_m(&table) && (!r.flags.free || free_with(&table)),
                "cubic_pencil_free",
                format!("free = {}, m = {m}, e = {e}", r.flags.free),
            );
            if m <= 6 {
                check(semistable, "cubic_pencil_semistable", format!("m = {m} but the sheaf is unstable"));
            }
            if m <= 2 {
                check(stable, "cubic_pencil_stable", format!("m = {m} but the sheaf is not stable"));
            }
        }
        (1, 2) => {
            let table = [(7, 0), (5, 1)];
            check(m <= 7, "mixed_m_bound", format!("m = {m} exceeds 7"));
            check(
                r.flags.free == free_m(&table) && (!r.flags.free || free_with(&table)),
                "mixed_free",
                format!("free = {}, m = {m}, e = {e}", r.flags.free),
            );
            if m <= 3 {
                check(stable, "mixed_stable", format!("m = {m} but the sheaf is not stable"));
            }
        }
        _ => {}
    }
    check(
        (r.c1 * r.c2 - r.c3).rem_euclid(2) == 0,
        "chern_parity",
        format!("c1 c2 = {} and c3 = {} differ in parity", r.c1 * r.c2, r.c3),
    );
    out
}
