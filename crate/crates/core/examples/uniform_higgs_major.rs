// Higgs majors of quotients between uniform matroids are uniform.
//
// Run with `cargo run --example uniform_higgs_major`.

use matroid_quotients::quotient::Quotient;
use matroid_quotients::{Matroid, Result};

/// Checks `U_{r,n} ↠ U_{s,n}` for all `s ≤ r ≤ n ≤ 5` and returns how many
/// majors came out as `U_{r, n+r-s}`.
pub fn run() -> Result<(usize, usize)> {
    let mut uniform = 0;
    let mut total = 0;
    for n in 0..=5 {
        for r in 0..=n {
            for s in 0..=r {
                let q = Quotient::new(Matroid::uniform(r, n)?, Matroid::uniform(s, n)?)?;
                let h = q.higgs_major()?;
                total += 1;
                if *h.matroid() == Matroid::uniform(r, n + r - s)? {
                    uniform += 1;
                }
            }
        }
    }
    let q = Quotient::new(Matroid::uniform(5, 8)?, Matroid::uniform(2, 8)?)?;
    let h = q.higgs_major()?;
    println!(
        "U(5,8) -> U(2,8): major has rank {} on {} elements, new elements {:?}",
        h.matroid().rank(),
        h.matroid().n(),
        h.new_elements()
    );
    println!("{uniform} of {total} uniform majors are uniform");
    Ok((uniform, total))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
