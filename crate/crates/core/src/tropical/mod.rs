//! Tropical linear spaces of matroids, inclusion of Bergman fans through
//! quotients, relative realizability of linear spaces and the matroids
//! attached to graded pieces of homogeneous ideals.

pub mod ideal;
pub mod point;

pub use ideal::{
    check_quotient_implies_inclusion, macaulay_matrix, matroid_of_degree_part, matroid_of_degree_part_over,
    monomial_count, monomial_label, monomials, sample_standard_line, standard_line_ideals, trop_veronese_apply,
    HomogeneousIdeal, InclusionReport, Polynomial, SampleVerdict,
};
pub use point::{
    bergman_inclusion, bergman_inclusion_sampled, chain_points, flag_cone_point, flat_chains, trop_matroid_membership,
    trop_matroid_membership_by_cycles, trop_set_membership, TropicalPoint,
};

use crate::error::Result;
use crate::extension::cut_of_element;
use crate::matroid::{fixtures, ElementSet, Matroid};
use crate::quotient::{is_quotient, Major, Quotient};
use crate::realization::{
    extend_along_cut, realize_quotient_from_major, search_realization, CutExtension, ObstructionCertificate,
    QuotientRealization, Realization,
};

/// Realization attempts made by [`linear_relative_realizability`].
pub const SEARCH_ATTEMPTS: usize = 16;

/// The major matched a shipped matroid known to have no realization over
/// any field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonRealizableReport {
    pub fixture: String,
    /// Image of each element of the major in the fixture.
    pub isomorphism: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelativeRealizability {
    /// `M1` is not a quotient of `M2`, so `trop(M1) ⊄ trop(M2)`.
    NotIncluded,
    Realized {
        major: Major,
        realization: QuotientRealization,
    },
    NonRealizable {
        major: Major,
        report: NonRealizableReport,
    },
    /// The supplied realization of `M2` did not extend at new element
    /// `step` (1-based). The certificate refers to the partial matrix at
    /// that step; for `step > 1` it depends on the earlier sampled columns.
    Obstructed {
        major: Major,
        step: usize,
        certificate: ObstructionCertificate,
    },
    /// No realization was found and no known obstruction applies. This is
    /// not a proof of non-realizability.
    Inconclusive { major: Major, attempts: usize },
}

/// Known non-realizable fixture isomorphic to `m`, if any.
pub fn known_non_realizable(m: &Matroid) -> Option<NonRealizableReport> {
    let p = fixtures::non_pappus();
    if p.n() != m.n() || p.rank() != m.rank() {
        return None;
    }
    m.is_isomorphic(&p).map(|isomorphism| NonRealizableReport {
        fixture: "non-Pappus".into(),
        isomorphism,
    })
}

/// Decides whether `trop(m1) ⊆ trop(m2)` and, if so, tries to realize the
/// pair by nested linear spaces over the rationals through the Higgs major
/// of `m2 ↠ m1`.
pub fn linear_relative_realizability(m1: &Matroid, m2: &Matroid, seed: u64) -> Result<RelativeRealizability> {
    relative(m1, m2, None, seed)
}

/// As [`linear_relative_realizability`], starting from a given realization
/// of `m2` that the new elements must extend.
pub fn linear_relative_realizability_from(
    m1: &Matroid,
    top: &Realization,
    seed: u64,
) -> Result<RelativeRealizability> {
    relative(m1, top.matroid(), Some(top), seed)
}

fn relative(m1: &Matroid, m2: &Matroid, top: Option<&Realization>, seed: u64) -> Result<RelativeRealizability> {
    m1.same_ground(m2)?;
    if !is_quotient(m2, m1)? {
        return Ok(RelativeRealizability::NotIncluded);
    }
    let q = Quotient::new(m2.clone(), m1.clone())?;
    let major = q.higgs_major()?;
    if let Some(report) = known_non_realizable(major.matroid()) {
        return Ok(RelativeRealizability::NonRealizable { major, report });
    }
    let rh = match top {
        Some(t) => match extend_given(t, &major, seed)? {
            Ok(r) => r,
            Err((step, certificate)) => {
                return Ok(RelativeRealizability::Obstructed {
                    major,
                    step,
                    certificate,
                })
            }
        },
        None => match search_realization(major.matroid(), seed, SEARCH_ATTEMPTS)? {
            Some(r) => r,
            None => {
                return Ok(RelativeRealizability::Inconclusive {
                    major,
                    attempts: SEARCH_ATTEMPTS,
                })
            }
        },
    };
    let realization = realize_quotient_from_major(&rh, &major)?;
    Ok(RelativeRealizability::Realized { major, realization })
}

type Extended = std::result::Result<Realization, (usize, ObstructionCertificate)>;

fn extend_given(top: &Realization, major: &Major, seed: u64) -> Result<Extended> {
    let n = top.matroid().n();
    let mut current = top.clone();
    for i in 0..major.k() {
        let x = n + i;
        let next = major.matroid().restrict(ElementSet::full(x + 1));
        let cut = cut_of_element(&next, x)?;
        let label = major.matroid().label(x);
        match extend_along_cut(&current, &cut, &label, seed.wrapping_add(i as u64))? {
            CutExtension::Extended { realization, .. } => current = realization,
            CutExtension::Obstructed(c) => return Ok(Err((i + 1, c))),
        }
    }
    Ok(Ok(Realization::new(major.matroid().clone(), current.matrix().clone())?))
}
