//! Modular cuts and single-element extensions.
//!
//! A modular cut of `M` is an up-closed family of flats that contains the
//! meet of every modular pair of its members. Cuts correspond one to one
//! with extensions `M + e`: the members are the flats spanning `e`. The
//! empty cut is allowed and adds `e` as a coloop.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::{ElementSet, FlatFamily, Matroid};

#[derive(Clone)]
pub struct ModularCut {
    matroid: Matroid,
    minimal: Vec<ElementSet>,
    members: Vec<ElementSet>,
}

impl PartialEq for ModularCut {
    fn eq(&self, other: &Self) -> bool {
        self.matroid == other.matroid && self.members == other.members
    }
}

impl Eq for ModularCut {}

impl fmt::Debug for ModularCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModularCut")
            .field("n", &self.matroid.n())
            .field("minimal", &self.minimal)
            .field("members", &self.members.len())
            .finish()
    }
}

/// Why a family of sets fails to be a modular cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutViolation {
    pub reason: &'static str,
    pub witness: Vec<ElementSet>,
}

impl From<CutViolation> for Error {
    fn from(v: CutViolation) -> Self {
        Error::InvalidModularCut {
            reason: v.reason.to_string(),
            witness: v.witness,
        }
    }
}

fn is_modular_pair(m: &Matroid, a: ElementSet, b: ElementSet) -> bool {
    m.rank_of(a) + m.rank_of(b) == m.rank_of(a.intersection(b)) + m.rank_of(a.union(b))
}

/// Checks the modular cut axioms, returning the first violation found.
pub fn check_modular_cut(m: &Matroid, family: &[ElementSet]) -> std::result::Result<(), CutViolation> {
    let members: HashSet<ElementSet> = family.iter().copied().collect();
    for &f in family {
        if !f.is_subset(m.ground_set()) || !m.is_flat(f) {
            return Err(CutViolation {
                reason: "member is not a flat",
                witness: vec![f],
            });
        }
    }
    // Up-closure among flats follows from closure under covers.
    for &f in family {
        if let Some(g) = m.covers_of(f).into_iter().find(|g| !members.contains(g)) {
            return Err(CutViolation {
                reason: "not upward closed",
                witness: vec![f, g],
            });
        }
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if is_modular_pair(m, a, b) && !members.contains(&a.intersection(b)) {
                return Err(CutViolation {
                    reason: "meet of a modular pair is missing",
                    witness: vec![a, b],
                });
            }
        }
    }
    Ok(())
}

pub fn is_modular_cut(m: &Matroid, family: &[ElementSet]) -> bool {
    check_modular_cut(m, family).is_ok()
}

fn minimal_members(members: &[ElementSet]) -> Vec<ElementSet> {
    members
        .iter()
        .copied()
        .filter(|&f| !members.iter().any(|&g| g.is_proper_subset(f)))
        .collect()
}

impl ModularCut {
    /// Validates `family` as a modular cut of `m`.
    pub fn new(m: &Matroid, family: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let mut members: Vec<ElementSet> = family.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        check_modular_cut(m, &members)?;
        Ok(Self::from_valid(m.clone(), members))
    }

    fn from_valid(matroid: Matroid, members: Vec<ElementSet>) -> Self {
        ModularCut {
            minimal: minimal_members(&members),
            matroid,
            members,
        }
    }

    /// The empty cut: the new element is a coloop.
    pub fn empty(m: &Matroid) -> Self {
        Self::from_valid(m.clone(), Vec::new())
    }

    /// All flats containing the flat `f`.
    pub fn principal(m: &Matroid, f: ElementSet) -> Result<Self> {
        if !m.is_flat(f) {
            return Err(CutViolation {
                reason: "generator is not a flat",
                witness: vec![f],
            }
            .into());
        }
        let members = m.flats().iter().filter(|g| f.is_subset(*g)).collect();
        Ok(Self::from_valid(m.clone(), members))
    }

    /// The smallest modular cut containing the given flats.
    pub fn generated(m: &Matroid, generators: &[ElementSet]) -> Result<Self> {
        let flats = m.flats();
        Self::generated_in(m, &flats, generators)
    }

    fn generated_in(m: &Matroid, flats: &FlatFamily, generators: &[ElementSet]) -> Result<Self> {
        if let Some(&g) = generators.iter().find(|&&g| !flats.contains(g)) {
            return Err(CutViolation {
                reason: "generator is not a flat",
                witness: vec![g],
            }
            .into());
        }
        let all = flats.as_slice();
        let index = |f: ElementSet| all.binary_search(&f).expect("flat");
        let mut inside = vec![false; all.len()];
        let mut queue: VecDeque<ElementSet> = generators.iter().copied().collect();
        let mut members: Vec<ElementSet> = Vec::new();
        while let Some(f) = queue.pop_front() {
            let i = index(f);
            if inside[i] {
                continue;
            }
            inside[i] = true;
            for (j, &g) in all.iter().enumerate() {
                if !inside[j] && f.is_subset(g) {
                    queue.push_back(g);
                }
            }
            for &g in &members {
                let meet = f.intersection(g);
                if !inside[index(meet)] && is_modular_pair(m, f, g) {
                    queue.push_back(meet);
                }
            }
            members.push(f);
        }
        members.sort_unstable();
        Ok(Self::from_valid(m.clone(), members))
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// All members, in increasing mask order.
    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    /// Inclusion-minimal members, in increasing mask order.
    pub fn minimal(&self) -> &[ElementSet] {
        &self.minimal
    }

    pub fn contains(&self, f: ElementSet) -> bool {
        self.members.binary_search(&f).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_subset(&self, other: &ModularCut) -> bool {
        self.members.iter().all(|&f| other.contains(f))
    }
}

/// Every modular cut of `m` (the empty cut included), sorted by member list.
pub fn all_modular_cuts(m: &Matroid) -> Vec<ModularCut> {
    let flats = m.flats();
    let mut seen: HashSet<Vec<ElementSet>> = HashSet::new();
    let mut out = vec![ModularCut::empty(m)];
    seen.insert(Vec::new());
    let mut frontier = 0;
    while frontier < out.len() {
        let cut = out[frontier].clone();
        frontier += 1;
        for f in flats.iter().filter(|&f| !cut.contains(f)) {
            let mut gens = cut.minimal.clone();
            gens.push(f);
            let next = ModularCut::generated_in(m, &flats, &gens).expect("flats generate a cut");
            if seen.insert(next.members.clone()) {
                out.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.members.cmp(&b.members));
    out
}

/// The single-element extension `M +_cut e`; the new element has index
/// `M.n()` and the given label.
///
/// Flats of the extension: every flat `F` outside the cut, `F ∪ e` for every
/// member `F`, and `F ∪ e` for every non-member `F` none of whose covers lies
/// in the cut.
pub fn extend(m: &Matroid, cut: &ModularCut, label: &str) -> Result<Matroid> {
    if cut.matroid != *m {
        return Err(Error::InvalidModularCut {
            reason: "cut belongs to a different matroid".into(),
            witness: vec![],
        });
    }
    let e = ElementSet::singleton(m.n());
    let mut family = Vec::new();
    for f in m.flats().iter() {
        if cut.contains(f) {
            family.push(f.union(e));
        } else {
            family.push(f);
            if !m.covers_of(f).iter().any(|&g| cut.contains(g)) {
                family.push(f.union(e));
            }
        }
    }
    let mut ext = Matroid::from_flats(m.n() + 1, family)?;
    let mut labels = m.labels().clone();
    labels.insert(m.n(), label.to_string());
    ext = ext.with_labels(labels)?;
    Ok(ext)
}

/// The quotient `(M +_cut e) / e` of `M` determined by a cut.
pub fn elementary_quotient(m: &Matroid, cut: &ModularCut) -> Result<Matroid> {
    let ext = extend(m, cut, "e")?;
    Ok(ext.contract(ElementSet::singleton(m.n())))
}

/// The cut of `M \ x` that extends it back to `M`: the flats of `M \ x`
/// spanning `x`. Flats are indexed in the renumbered ground set of `M \ x`.
pub fn cut_of_element(m: &Matroid, x: usize) -> Result<ModularCut> {
    if x >= m.n() {
        return Err(Error::ElementOutOfRange { element: x, n: m.n() });
    }
    let kept = m.ground_set().without(x);
    let deleted = m.delete(ElementSet::singleton(x));
    let members: Vec<ElementSet> = deleted
        .flats()
        .iter()
        .filter(|f| {
            let g = f.expand(kept);
            m.rank_of(g.with(x)) == m.rank_of(g)
        })
        .collect();
    ModularCut::new(&deleted, members)
        .map_err(|e| Error::Internal(format!("element cut invalid: {e}")))
}

/// Lifts a modular cut of `M / e` to the cut `{F ∪ e}` of `M`.
pub fn lift_cut(m: &Matroid, e: usize, cut: &ModularCut) -> Result<ModularCut> {
    if e >= m.n() {
        return Err(Error::ElementOutOfRange {
            element: e,
            n: m.n(),
        });
    }
    let contracted = m.contract(ElementSet::singleton(e));
    if cut.matroid != contracted {
        return Err(Error::InvalidModularCut {
            reason: "cut is not a cut of the contraction".into(),
            witness: vec![],
        });
    }
    let kept = m.ground_set().without(e);
    let lifted = cut.members.iter().map(|f| f.expand(kept).with(e));
    ModularCut::new(m, lifted).map_err(|err| Error::Internal(format!("lifted cut invalid: {err}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(xs.iter().copied())
    }

    #[test]
    fn principal_top_cut_of_uniform() {
        let u = Matroid::uniform(2, 3).unwrap();
        assert!(is_modular_cut(&u, &[u.ground_set()]));
        let cut = ModularCut::new(&u, [u.ground_set()]).unwrap();
        assert_eq!(extend(&u, &cut, "f").unwrap(), Matroid::uniform(2, 4).unwrap());
    }

    #[test]
    fn lines_without_points_are_not_a_cut() {
        let u = Matroid::uniform(3, 6).unwrap();
        let mut fam: Vec<_> = u.flats().of_rank(2).to_vec();
        fam.push(u.ground_set());
        let v = check_modular_cut(&u, &fam).unwrap_err();
        assert_eq!(v.reason, "meet of a modular pair is missing");
    }

    #[test]
    fn empty_and_full_cuts() {
        let u = Matroid::uniform(2, 3).unwrap();
        let coloop = extend(&u, &ModularCut::empty(&u), "c").unwrap();
        assert_eq!(coloop.coloops(), set(&[3]));
        let full = ModularCut::principal(&u, ElementSet::EMPTY).unwrap();
        let looped = extend(&u, &full, "l").unwrap();
        assert_eq!(looped.loops(), set(&[3]));
        assert_eq!(looped.label(3), "l");
    }

    #[test]
    fn generated_cut_of_three_pairs() {
        let u = Matroid::uniform(3, 6).unwrap();
        let cut = ModularCut::generated(&u, &[set(&[0, 1]), set(&[2, 3]), set(&[4, 5])]).unwrap();
        assert_eq!(cut.members(), &[set(&[0, 1]), set(&[2, 3]), set(&[4, 5]), u.ground_set()]);
        assert_eq!(cut.minimal().len(), 3);
    }

    #[test]
    fn cut_counts_of_small_uniform_matroids() {
        // U_{1,1}: the empty cut, {{0}}, and all flats.
        assert_eq!(all_modular_cuts(&Matroid::uniform(1, 1).unwrap()).len(), 3);
        // U_{2,3}: {}, {E}, {{i},E} for three points, all flats.
        assert_eq!(all_modular_cuts(&Matroid::uniform(2, 3).unwrap()).len(), 6);
    }

    #[test]
    fn element_cut_extends_back() {
        let m = crate::matroid::fixtures::paired_rank_three_extension(6);
        let cut = cut_of_element(&m, 6).unwrap();
        assert_eq!(cut.minimal(), &[set(&[0, 1]), set(&[2, 3]), set(&[4, 5])]);
        assert_eq!(extend(cut.matroid(), &cut, "e").unwrap(), m);
    }

    #[test]
    fn lift_of_top_cut_is_top_cut() {
        let u = Matroid::uniform(3, 4).unwrap();
        let c = u.contract(set(&[0]));
        let top = ModularCut::new(&c, [c.ground_set()]).unwrap();
        let lifted = lift_cut(&u, 0, &top).unwrap();
        assert_eq!(lifted.members(), &[set(&[0, 1, 2, 3])]);
    }
}
