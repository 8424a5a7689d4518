use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::lex_subsets;

use super::matrix::Matrix;
use super::scalar::Scalar;

/// Plücker coordinates keyed by sorted column subsets.
pub type Pluckers = BTreeMap<Vec<usize>, Scalar>;

/// All maximal minors `p_B = det A[:, B]` of a full row rank `r × n` matrix.
pub fn plucker_raw(a: &Matrix) -> Result<Pluckers> {
    let rank = a.rank();
    if rank != a.rows() {
        return Err(Error::RankDeficient {
            rank,
            rows: a.rows(),
        });
    }
    lex_subsets(a.cols(), a.rows())
        .into_iter()
        .map(|b| {
            let d = a.select_columns(&b).det()?;
            Ok((b, d))
        })
        .collect()
}

/// Plücker coordinates divided by the first nonzero one in lexicographic
/// subset order, a canonical projective representative.
pub fn plucker(a: &Matrix) -> Result<Pluckers> {
    normalize(plucker_raw(a)?)
}

/// Divides by the first nonzero coordinate in lexicographic order.
pub fn normalize(p: Pluckers) -> Result<Pluckers> {
    let inv = p
        .values()
        .find(|x| !x.is_zero())
        .and_then(Scalar::inv)
        .ok_or_else(|| Error::InvalidInputs("all Plücker coordinates vanish".into()))?;
    Ok(p.into_iter().map(|(k, v)| (k, &v * &inv)).collect())
}

/// Subsets with a nonzero coordinate.
pub fn support(p: &Pluckers) -> Vec<Vec<usize>> {
    p.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, _)| k.clone())
        .collect()
}
