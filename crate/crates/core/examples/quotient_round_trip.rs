// Realize a quotient by nested subspaces, lift to a realization of its
// Higgs major, and project back.

use matroid_quotients::quotient::Quotient;
use matroid_quotients::realization::{
    random_uniform_realization, realize_factorization, realize_major_from_quotient, realize_quotient_from_major,
    QuotientRealization,
};
use matroid_quotients::{Matroid, Result};

/// Returns whether the projected pair spans the same spaces as the input
/// pair, and the number of nested spaces in the factorization.
pub fn run() -> Result<(bool, usize)> {
    let top = random_uniform_realization(3, 5, 11)?;
    // The first row spans a point of the plane in general position.
    let bottom = top.matrix().select_rows(&[0]);
    let q = Quotient::new(Matroid::uniform(3, 5)?, Matroid::uniform(1, 5)?)?;
    let qr = QuotientRealization {
        top: top.matrix().clone(),
        bottom,
    };
    println!("input pair realizes the quotient: {}", qr.realizes(&q)?);
    let rh = realize_major_from_quotient(&qr, &q, 3)?;
    println!("major realization is {}x{}", rh.matrix().rows(), rh.matrix().cols());
    let back = realize_quotient_from_major(&rh, &q.higgs_major()?)?;
    let same = back.top.same_row_space(&qr.top)? && back.bottom.same_row_space(&qr.bottom)?;
    println!("projection recovers the pair: {same}");
    let spaces = realize_factorization(&qr, &q, 3)?;
    let dims: Vec<usize> = spaces.iter().map(|s| s.rows()).collect();
    println!("factorization dimensions {dims:?}");
    Ok((same, spaces.len()))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
