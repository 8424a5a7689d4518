//! Worked examples as named pipelines, shared by `mq demo` and the
//! examples directory.

use crate::error::{Error, Result};
use crate::extension::{cut_of_element, ModularCut};
use crate::linalg::{Field, Matrix, Scalar};
use crate::matroid::fixtures::{non_pappus, paired_rank_three_extension, NON_PAPPUS_E};
use crate::matroid::{ElementSet, Matroid};
use crate::quotient::{Major, Quotient};
use crate::realization::{
    extend_along_cut, realize_quotient_from_major, verify_extension_column, CutExtension, QuotientRealization,
    Realization,
};
use crate::tropical::{
    check_quotient_implies_inclusion, linear_relative_realizability, sample_standard_line, standard_line_ideals,
    InclusionReport, RelativeRealizability,
};

/// A realization of `U_{3,6}` that cannot be extended by an element on the
/// three lines through `{0,1}`, `{2,3}`, `{4,5}`.
pub fn obstructed_plane() -> Matrix {
    Matrix::rational(&[
        &[0, -271, -92, 0, -13, -54],
        &[0, -18, -7, -1, 0, -4],
        &[-1, 12293, 4173, 0, 588, 2450],
    ])
}

/// A realization of `U_{3,6}` that does extend by such an element.
pub fn extendable_plane() -> Matrix {
    Matrix::rational(&[&[1, 3, 0, 1, 5, 7], &[0, 0, 1, 3, -1, -1], &[1, 4, -1, -3, 0, 0]])
}

/// A column extending [`extendable_plane`].
pub fn extendable_plane_column() -> Vec<Scalar> {
    [1, 0, 0].iter().map(|&x| Field::Rational.from_i64(x)).collect()
}

/// The line obtained from [`extendable_plane`] and its extension column:
/// a realization of the rank-2 matroid with parallel pairs.
pub fn extendable_plane_line() -> Matrix {
    Matrix::rational(&[&[0, 0, 1, 3, -1, -1], &[1, 4, -1, -3, 0, 0]])
}

/// The Higgs major of `U_{r,n} ↠ U_{r-k,n}`.
pub fn uniform_major(r: usize, k: usize, n: usize) -> Result<Major> {
    if k > r {
        return Err(Error::InvalidInputs(format!("nullity {k} exceeds rank {r}")));
    }
    Quotient::new(Matroid::uniform(r, n)?, Matroid::uniform(r - k, n)?)?.higgs_major()
}

/// Relative realizability of `P / e` inside `P \ e` for the non-Pappus
/// matroid `P`.
pub fn non_pappus_relative(seed: u64) -> Result<RelativeRealizability> {
    let p = non_pappus();
    let e = ElementSet::singleton(NON_PAPPUS_E);
    linear_relative_realizability(&p.contract(e), &p.delete(e), seed)
}

/// The cut of `U_{3,6}` defining the paired extension.
pub fn paired_cut() -> Result<ModularCut> {
    cut_of_element(&paired_rank_three_extension(6), 6)
}

/// Tries to extend [`obstructed_plane`] along [`paired_cut`].
pub fn obstructed_extension(seed: u64) -> Result<CutExtension> {
    let r = Realization::new(Matroid::uniform(3, 6)?, obstructed_plane())?;
    extend_along_cut(&r, &paired_cut()?, "e", seed)
}

/// The extension of [`extendable_plane`] and the line it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedExtension {
    /// Whether [`extendable_plane_column`] extends the plane along the cut.
    pub column_accepted: bool,
    /// A column found by seeded search.
    pub sampled: CutExtension,
    /// The nested pair read off the extension by the given column.
    pub pair: QuotientRealization,
    /// Whether the bottom row space equals that of [`extendable_plane_line`].
    pub matches_line: bool,
}

pub fn nested_extension(seed: u64) -> Result<NestedExtension> {
    let r = Realization::new(Matroid::uniform(3, 6)?, extendable_plane())?;
    let cut = paired_cut()?;
    let column = extendable_plane_column();
    let column_accepted = verify_extension_column(&r, &cut, &column)?;
    let sampled = extend_along_cut(&r, &cut, "e", seed)?;
    let major = Major::new(paired_rank_three_extension(6), vec![6])?;
    let rh = Realization::new(major.matroid().clone(), extendable_plane().append_column(&column)?)?;
    let pair = realize_quotient_from_major(&rh, &major)?;
    let matches_line = pair.bottom.same_row_space(&extendable_plane_line())?;
    Ok(NestedExtension {
        column_accepted,
        sampled,
        pair,
        matches_line,
    })
}

/// Compares the degree-`p` matroids of `(x0 + x1 + x2)` and
/// `(x0^p + x1^p + x2^p)` and transports `samples` seeded points of the
/// standard tropical line.
pub fn standard_line(p: u32, samples: usize, seed: u64) -> Result<InclusionReport> {
    let (i, j) = standard_line_ideals(p)?;
    check_quotient_implies_inclusion(&i, &j, p as usize, &sample_standard_line(samples, seed))
}
