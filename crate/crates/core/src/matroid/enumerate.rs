//! Exhaustive enumeration of all matroids on a small labeled ground set.

use super::{subsets_of_size, ElementSet, Matroid};
use crate::error::{Error, Result};

/// Largest ground set accepted by [`all_matroids`].
pub const ENUMERATION_MAX: usize = 5;

/// Every matroid on `{0, .., n-1}`, ordered by rank and then by basis list.
///
/// For each rank `r`, every nonempty family of `r`-subsets is tried and kept
/// when it satisfies basis exchange.
pub fn all_matroids(n: usize) -> Result<Vec<Matroid>> {
    if n > ENUMERATION_MAX {
        return Err(Error::TooLarge(format!(
            "enumerating matroids on {n} > {ENUMERATION_MAX} elements"
        )));
    }
    let mut out = Vec::new();
    for r in 0..=n {
        let candidates: Vec<ElementSet> = subsets_of_size(n, r).collect();
        let mut found: Vec<Matroid> = (1u64..1 << candidates.len())
            .filter_map(|pick| {
                let family = candidates
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| pick >> i & 1 == 1)
                    .map(|(_, b)| *b);
                Matroid::from_bases(n, family).ok()
            })
            .collect();
        found.sort();
        out.extend(found);
    }
    Ok(out)
}
