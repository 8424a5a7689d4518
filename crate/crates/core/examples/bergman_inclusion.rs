// The tropical line with rays `pos(e_0+e_1)`, `pos(e_2+e_3)`,
// `pos(e_4+e_5)` lies in the standard tropical plane of `U_{3,6}`, and the
// pair is realized by a line inside a plane.

use matroid_quotients::matroid::fixtures::paired_rank_two;
use matroid_quotients::tropical::{
    bergman_inclusion, bergman_inclusion_sampled, chain_points, linear_relative_realizability,
    trop_matroid_membership, RelativeRealizability,
};
use matroid_quotients::{Matroid, Result};

/// Returns (inclusion, sampled inclusion, realized).
pub fn run() -> Result<(bool, bool, bool)> {
    let line = paired_rank_two(6);
    let plane = Matroid::uniform(3, 6)?;
    let included = bergman_inclusion(&line, &plane)?;
    let sampled = bergman_inclusion_sampled(&line, &plane)?;
    for v in chain_points(&line) {
        println!("{v:?} in plane: {}", trop_matroid_membership(&plane, &v)?);
    }
    println!("plane inside line: {}", bergman_inclusion(&plane, &line)?);
    let realized = match linear_relative_realizability(&line, &plane, 5)? {
        RelativeRealizability::Realized { realization, .. } => {
            println!("line rows: {}, plane rows: {}", realization.bottom.rows(), realization.top.rows());
            true
        }
        other => {
            println!("not realized: {other:?}");
            false
        }
    };
    Ok((included, sampled, realized))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
