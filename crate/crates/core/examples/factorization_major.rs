// Every factorization of a quotient into elementary steps comes from a
// major, and taking minors of the major recovers the factorization.

use matroid_quotients::quotient::{all_factorizations, factorization_from_major, major_from_factorization, Quotient};
use matroid_quotients::{Matroid, Result};

/// Returns the number of factorizations of `U_{3,4} ↠ U_{1,4}` and how
/// many survived the round trip through their major.
pub fn run() -> Result<(usize, usize)> {
    let q = Quotient::new(Matroid::uniform(3, 4)?, Matroid::uniform(1, 4)?)?;
    let all = all_factorizations(&q)?;
    let mut recovered = 0;
    for f in &all {
        let h = major_from_factorization(f)?;
        let middle = &f.steps()[1];
        println!(
            "middle step with {} bases -> major of rank {} on {} elements",
            middle.bases().len(),
            h.matroid().rank(),
            h.matroid().n()
        );
        if factorization_from_major(&h)? == *f {
            recovered += 1;
        }
    }
    let higgs = q.higgs_factorization()?;
    println!(
        "Higgs factorization maps to the Higgs major: {}",
        major_from_factorization(&higgs)? == q.higgs_major()?
    );
    println!("{recovered} of {} factorizations recovered", all.len());
    Ok((all.len(), recovered))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
