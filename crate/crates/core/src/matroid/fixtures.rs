//! Named matroids used by the examples, tests and the command line tool.

use std::collections::BTreeMap;

use super::{subsets_of_size, ElementSet, Matroid};

/// Three-point lines of the non-Pappus configuration, by label.
pub const NON_PAPPUS_LINES: [[&str; 3]; 8] = [
    ["1", "2", "3"],
    ["4", "5", "6"],
    ["1", "7", "5"],
    ["3", "e", "5"],
    ["2", "e", "6"],
    ["2", "7", "4"],
    ["1", "8", "6"],
    ["3", "8", "4"],
];

/// Labels of the non-Pappus matroid in index order: "1".."8" are elements
/// 0..7 and "e" is element 8.
pub const NON_PAPPUS_LABELS: [&str; 9] = ["1", "2", "3", "4", "5", "6", "7", "8", "e"];

fn label_map(labels: &[&str]) -> BTreeMap<usize, String> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| (i, l.to_string()))
        .collect()
}

/// Rank-3 simple matroid whose only dependent triples are `lines`.
pub fn rank_three_from_lines(n: usize, lines: &[ElementSet]) -> crate::Result<Matroid> {
    Matroid::from_bases(
        n,
        subsets_of_size(n, 3).filter(|t| !lines.contains(t)),
    )
}

/// The non-Pappus matroid: nine points, eight three-point lines, and the
/// Pappus line through 7, 8, e missing.
pub fn non_pappus() -> Matroid {
    let index = |l: &str| NON_PAPPUS_LABELS.iter().position(|x| *x == l).unwrap();
    let lines: Vec<ElementSet> = NON_PAPPUS_LINES
        .iter()
        .map(|line| line.iter().map(|l| index(l)).collect())
        .collect();
    rank_three_from_lines(9, &lines)
        .and_then(|m| m.with_labels(label_map(&NON_PAPPUS_LABELS)))
        .expect("non-Pappus lines form a matroid")
}

/// Element `e` of [`non_pappus`].
pub const NON_PAPPUS_E: usize = 8;

/// Parallel classes `{0,1}, {2,3}, ...` of a ground set of size `m`; for odd
/// `m` the last element is left on its own.
pub fn consecutive_pairs(m: usize) -> Vec<ElementSet> {
    (0..m / 2)
        .map(|i| ElementSet::from_elements([2 * i, 2 * i + 1]))
        .collect()
}

/// Rank-2 matroid on `m` elements with parallel classes `{0,1}, {2,3}, ...`.
/// Its tropical linear space is the fan with rays `pos(e_i, e_{i+1})`.
pub fn paired_rank_two(m: usize) -> Matroid {
    // Element x sits in class x / 2; for odd m the last class is a singleton.
    let bases = subsets_of_size(m, 2).filter(|b| {
        let v = b.to_vec();
        v[0] / 2 != v[1] / 2
    });
    Matroid::from_bases_unchecked(m, bases.collect())
}

/// `U_{3,m}` extended by an element `e` (index `m`) lying on the lines
/// spanned by each consecutive pair: the dependent triples are `{i, i+1, e}`.
pub fn paired_rank_three_extension(m: usize) -> Matroid {
    let e = m;
    let dependent: Vec<ElementSet> = consecutive_pairs(m).iter().map(|p| p.with(e)).collect();
    let mut h = rank_three_from_lines(m + 1, &dependent).expect("valid rank-3 extension");
    h.set_label(e, "e");
    h
}
