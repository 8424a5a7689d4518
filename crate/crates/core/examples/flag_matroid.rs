// A flag `U_{3,5} ↠ U_{2,5} ↠ U_{1,5}`: its Higgs major, a realization of
// the major, and the projected Plücker coordinates.

use matroid_quotients::quotient::{flag_higgs, FlagMatroid};
use matroid_quotients::realization::{project_flag_pluckers, search_realization};
use matroid_quotients::{Matroid, Result};

/// Returns the number of nonzero coordinates of the top and bottom
/// Plücker vectors.
pub fn run() -> Result<(usize, usize)> {
    let flag = FlagMatroid::new(vec![
        Matroid::uniform(3, 5)?,
        Matroid::uniform(2, 5)?,
        Matroid::uniform(1, 5)?,
    ])?;
    let (f, h) = flag_higgs(&flag)?;
    println!("factorization of length {}; major on {} elements", f.len(), h.matroid().n());
    let Some(rh) = search_realization(h.matroid(), 1, 8)? else {
        println!("no realization found");
        return Ok((0, 0));
    };
    let (top, bottom) = project_flag_pluckers(&rh, &h)?;
    let nonzero = |p: &matroid_quotients::linalg::Pluckers| p.values().filter(|x| !x.is_zero()).count();
    println!("top coordinates: {} nonzero of {}", nonzero(&top), top.len());
    println!("bottom coordinates: {} nonzero of {}", nonzero(&bottom), bottom.len());
    Ok((nonzero(&top), nonzero(&bottom)))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
