// The quotient `P\e ↠ P/e` of the non-Pappus matroid has a major
// isomorphic to `P`, so it is not realizable over any field.

use matroid_quotients::demo::non_pappus_relative;
use matroid_quotients::matroid::fixtures::{non_pappus, NON_PAPPUS_E};
use matroid_quotients::quotient::{is_quotient, Quotient};
use matroid_quotients::tropical::RelativeRealizability;
use matroid_quotients::{ElementSet, Result};

/// Returns the nullity of the quotient and whether the relative
/// realizability pipeline identified the fixture.
pub fn run() -> Result<(usize, bool)> {
    let p = non_pappus();
    let e = ElementSet::singleton(NON_PAPPUS_E);
    let (top, bottom) = (p.delete(e), p.contract(e));
    println!("P\\e has rank {}, P/e has rank {}", top.rank(), bottom.rank());
    println!("quotient: {}", is_quotient(&top, &bottom)?);
    let q = Quotient::new(top, bottom)?;
    let major = q.higgs_major()?;
    println!("major isomorphic to P: {}", major.matroid().is_isomorphic(&p).is_some());
    let reported = match non_pappus_relative(0)? {
        RelativeRealizability::NonRealizable { report, .. } => {
            println!("non-realizable: matches the {} fixture", report.fixture);
            true
        }
        other => {
            println!("unexpected outcome {other:?}");
            false
        }
    };
    Ok((q.nullity(), reported))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
