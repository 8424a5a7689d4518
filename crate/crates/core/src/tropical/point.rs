//! Points of tropical projective space and membership in tropical linear
//! spaces.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::format_rational;
use crate::matroid::{ElementSet, Matroid};

/// A point of `R^n / R·1`, stored with minimum coordinate `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TropicalPoint {
    coords: Vec<BigRational>,
}

impl TropicalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        let mut p = TropicalPoint { coords };
        p.normalize();
        p
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(n: usize) -> Self {
        TropicalPoint {
            coords: vec![BigRational::zero(); n],
        }
    }

    fn normalize(&mut self) {
        if let Some(m) = self.coords.iter().min().cloned() {
            for c in &mut self.coords {
                *c -= &m;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Whether the minimum over `s` is attained at least twice.
    pub fn min_attained_twice(&self, s: ElementSet) -> bool {
        let mut min: Option<&BigRational> = None;
        let mut count = 0;
        for i in s.iter() {
            let c = &self.coords[i];
            match min {
                Some(m) if c > m => {}
                Some(m) if c == m => count += 1,
                _ => {
                    min = Some(c);
                    count = 1;
                }
            }
        }
        count >= 2
    }
}

impl fmt::Debug for TropicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_len(m: &Matroid, v: &TropicalPoint) -> Result<()> {
    if v.len() != m.n() {
        return Err(Error::LengthMismatch {
            expected: m.n(),
            found: v.len(),
        });
    }
    Ok(())
}

/// Whether the minimum of the coordinates of `v` indexed by `a` is attained
/// at least twice.
pub fn trop_set_membership(a: ElementSet, v: &TropicalPoint) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySupport);
    }
    if a.span_len() > v.len() {
        return Err(Error::LengthMismatch {
            expected: a.span_len(),
            found: v.len(),
        });
    }
    Ok(v.min_attained_twice(a))
}

/// Membership in the tropical linear space of `m`, tested on circuits.
pub fn trop_matroid_membership(m: &Matroid, v: &TropicalPoint) -> Result<bool> {
    check_len(m, v)?;
    Ok(m.circuits().into_iter().all(|c| v.min_attained_twice(c)))
}

/// Membership tested on every nonempty cycle; slower, same answer as
/// [`trop_matroid_membership`].
pub fn trop_matroid_membership_by_cycles(m: &Matroid, v: &TropicalPoint) -> Result<bool> {
    check_len(m, v)?;
    Ok(m
        .cycles()
        .into_iter()
        .filter(|c| !c.is_empty())
        .all(|c| v.min_attained_twice(c)))
}

/// `Σ w_j · 1_{F_j}` for a chain `∅ ⊊ F_1 ⊊ … ⊊ F_m ⊊ E` of flats and
/// positive weights: a point of the Bergman fan of a loopless `m`.
pub fn flag_cone_point(m: &Matroid, chain: &[ElementSet], weights: &[BigRational]) -> Result<TropicalPoint> {
    if !m.loops().is_empty() {
        return Err(Error::HasLoops);
    }
    if chain.len() != weights.len() {
        return Err(Error::LengthMismatch {
            expected: chain.len(),
            found: weights.len(),
        });
    }
    let e = m.ground_set();
    let mut prev = ElementSet::EMPTY;
    for &f in chain {
        if !m.is_flat(f) {
            return Err(Error::NotAChainOfFlats(format!("{f} is not a flat")));
        }
        if !prev.is_proper_subset(f) || !f.is_proper_subset(e) {
            return Err(Error::NotAChainOfFlats(format!("{f} breaks the strict chain")));
        }
        prev = f;
    }
    if weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::InvalidInputs("chain weights must be positive".into()));
    }
    let mut coords = vec![BigRational::zero(); m.n()];
    for (f, w) in chain.iter().zip(weights) {
        for i in f.iter() {
            coords[i] += w;
        }
    }
    Ok(TropicalPoint::new(coords))
}

/// Every chain of proper nonempty flats of `m`, the empty chain included.
pub fn flat_chains(m: &Matroid) -> Vec<Vec<ElementSet>> {
    let e = m.ground_set();
    let proper: Vec<ElementSet> = m
        .flats()
        .iter()
        .filter(|f| !f.is_empty() && *f != e)
        .collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    while let Some(chain) = frontier.pop() {
        let last = chain.last().copied().unwrap_or(ElementSet::EMPTY);
        for &f in &proper {
            if last.is_proper_subset(f) {
                let mut next: Vec<ElementSet> = chain.clone();
                next.push(f);
                out.push(next.clone());
                frontier.push(next);
            }
        }
    }
    out
}

/// The unit-weight flag-cone point of every chain of flats of a loopless
/// `m`; empty when `m` has loops, whose tropical linear space is empty.
pub fn chain_points(m: &Matroid) -> Vec<TropicalPoint> {
    if !m.loops().is_empty() {
        return Vec::new();
    }
    flat_chains(m)
        .into_iter()
        .map(|chain| {
            let mut coords = vec![BigRational::zero(); m.n()];
            for f in &chain {
                for i in f.iter() {
                    coords[i] += BigRational::from_integer(1.into());
                }
            }
            TropicalPoint::new(coords)
        })
        .collect()
}

/// Whether `trop(m1) ⊆ trop(m2)`, decided by the quotient relation
/// `m2 ↠ m1`.
pub fn bergman_inclusion(m1: &Matroid, m2: &Matroid) -> Result<bool> {
    crate::quotient::is_quotient(m2, m1)
}

/// Sampled form of [`bergman_inclusion`]: every chain point of `m1` lies in
/// `trop(m2)`. Used to cross-check the combinatorial test.
pub fn bergman_inclusion_sampled(m1: &Matroid, m2: &Matroid) -> Result<bool> {
    m1.same_ground(m2)?;
    let circuits = m2.circuits();
    Ok(chain_points(m1)
        .iter()
        .all(|v| circuits.iter().all(|&c| v.min_attained_twice(c))))
}
