use std::collections::HashSet;

use super::{subsets_of_size, ElementSet, Matroid, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Flat families up to this ground set size are processed with dense
/// per-subset tables.
const DENSE_MAX: usize = 20;

/// The lattice of flats of a matroid, grouped by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatFamily {
    n: usize,
    by_rank: Vec<Vec<ElementSet>>,
    sorted: Vec<ElementSet>,
}

impl FlatFamily {
    fn new(n: usize, by_rank: Vec<Vec<ElementSet>>) -> Self {
        let mut sorted: Vec<ElementSet> = by_rank.iter().flatten().copied().collect();
        sorted.sort_unstable();
        FlatFamily { n, by_rank, sorted }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the top flat `E`.
    pub fn rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    /// `by_rank()[i]` lists the rank-`i` flats in increasing mask order.
    pub fn by_rank(&self) -> &[Vec<ElementSet>] {
        &self.by_rank
    }

    pub fn of_rank(&self, r: usize) -> &[ElementSet] {
        self.by_rank.get(r).map_or(&[], |v| v.as_slice())
    }

    /// All flats in increasing mask order.
    pub fn as_slice(&self) -> &[ElementSet] {
        &self.sorted
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.sorted.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn contains(&self, f: ElementSet) -> bool {
        self.sorted.binary_search(&f).is_ok()
    }

    /// Hyperplanes: flats of rank one less than the top.
    pub fn hyperplanes(&self) -> &[ElementSet] {
        match self.rank() {
            0 => &[],
            r => self.of_rank(r - 1),
        }
    }
}

impl Matroid {
    /// All flats, generated upward from `cl(∅)` through cover relations.
    pub fn flats(&self) -> FlatFamily {
        let full = self.ground_set();
        let mut by_rank = vec![vec![self.loops()]];
        for r in 0..self.rank() {
            let mut next = Vec::new();
            let mut seen = HashSet::new();
            for &f in &by_rank[r] {
                let mut rest = full.difference(f);
                while let Some(x) = rest.first() {
                    let g = self.closure(f.with(x));
                    rest = rest.difference(g);
                    if seen.insert(g) {
                        next.push(g);
                    }
                }
            }
            next.sort_unstable();
            by_rank.push(next);
        }
        FlatFamily::new(self.n(), by_rank)
    }

    /// The flats covering `f` (rank one higher), in increasing mask order.
    pub fn covers_of(&self, f: ElementSet) -> Vec<ElementSet> {
        let mut out = Vec::new();
        let mut rest = self.ground_set().difference(f);
        while let Some(x) = rest.first() {
            let g = self.closure(f.with(x));
            rest = rest.difference(g);
            out.push(g);
        }
        out.sort_unstable();
        out
    }

    /// The matroid whose flats are exactly `family`.
    ///
    /// The rank of a set is the length of a longest chain of members below
    /// the smallest member containing it. The result is checked by
    /// recomputing its flats; any family that is not a geometric lattice of
    /// subsets is rejected.
    pub fn from_flats(n: usize, family: impl IntoIterator<Item = ElementSet>) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let full = ElementSet::full(n);
        let mut family: Vec<ElementSet> = family.into_iter().collect();
        family.sort_unstable();
        family.dedup();
        if let Some(bad) = family.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::ElementOutOfRange {
                element: bad.difference(full).first().unwrap_or(n),
                n,
            });
        }
        if family.binary_search(&full).is_err() {
            return Err(Error::NotAFlatLattice {
                reason: "ground set is not a member".into(),
                witness: vec![],
            });
        }
        let bases = if n <= DENSE_MAX {
            dense_bases(n, &family)?
        } else {
            sparse_bases(n, &family)?
        };
        if bases.is_empty() {
            return Err(Error::NotAFlatLattice {
                reason: "no set of full rank has the size of the rank".into(),
                witness: vec![full],
            });
        }
        let m = Matroid::from_bases(n, bases).map_err(|e| match e {
            Error::ExchangeAxiomViolation { b1, b2, .. } => Error::NotAFlatLattice {
                reason: "chain-length rank violates basis exchange".into(),
                witness: vec![b1, b2],
            },
            other => other,
        })?;
        let got = m.flats();
        if got.as_slice() != family.as_slice() {
            let mut witness: Vec<ElementSet> =
                family.iter().copied().filter(|&f| !got.contains(f)).collect();
            witness.extend(got.iter().filter(|f| family.binary_search(f).is_err()));
            witness.truncate(4);
            return Err(Error::NotAFlatLattice {
                reason: "family is not the flat lattice of the matroid it determines".into(),
                witness,
            });
        }
        Ok(m)
    }
}

fn intersection_witness(family: &[ElementSet]) -> Option<(ElementSet, ElementSet)> {
    let set: HashSet<ElementSet> = family.iter().copied().collect();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !set.contains(&a.intersection(b)) {
                return Some((a, b));
            }
        }
    }
    None
}

fn not_closed(a: ElementSet, b: ElementSet) -> Error {
    Error::NotAFlatLattice {
        reason: "not closed under intersection".into(),
        witness: vec![a, b],
    }
}

fn dense_bases(n: usize, family: &[ElementSet]) -> Result<Vec<ElementSet>> {
    let size = 1usize << n;
    let mut member = vec![false; size];
    for f in family {
        member[f.bits() as usize] = true;
    }
    // cl[a]: intersection of all members containing a.
    let mut cl = vec![0u32; size];
    cl[size - 1] = (size - 1) as u32;
    for a in (0..size - 1).rev() {
        if member[a] {
            cl[a] = a as u32;
            continue;
        }
        let mut acc = u32::MAX;
        for x in 0..n {
            if a >> x & 1 == 0 {
                acc &= cl[a | 1 << x];
            }
        }
        cl[a] = acc;
    }
    if (0..size).any(|a| !member[cl[a] as usize]) {
        let (a, b) = intersection_witness(family)
            .ok_or_else(|| Error::Internal("intersection failure without witness".into()))?;
        return Err(not_closed(a, b));
    }
    // height[f]: length of a longest chain of members ending at f.
    let mut height = vec![0u8; size];
    let mut best = vec![-1i16; size];
    for a in 0..size {
        let mut sub = -1i16;
        let mut rest = a;
        while rest != 0 {
            let x = rest & rest.wrapping_neg();
            sub = sub.max(best[a ^ x]);
            rest ^= x;
        }
        if member[a] {
            height[a] = (sub + 1) as u8;
            best[a] = sub + 1;
        } else {
            best[a] = sub;
        }
    }
    let r = height[size - 1] as usize;
    Ok(subsets_of_size(n, r)
        .filter(|b| height[cl[b.bits() as usize] as usize] as usize == r)
        .collect())
}

fn sparse_bases(n: usize, family: &[ElementSet]) -> Result<Vec<ElementSet>> {
    if let Some((a, b)) = intersection_witness(family) {
        return Err(not_closed(a, b));
    }
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by_key(|&i| family[i].len());
    let mut height = vec![0usize; family.len()];
    for (pos, &i) in order.iter().enumerate() {
        height[i] = order[..pos]
            .iter()
            .filter(|&&j| family[j].is_proper_subset(family[i]))
            .map(|&j| height[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let top = family.len() - 1;
    let r = height[family.iter().position(|&f| f == ElementSet::full(n)).unwrap_or(top)];
    let closure_height = |b: ElementSet| {
        family
            .iter()
            .enumerate()
            .filter(|(_, f)| b.is_subset(**f))
            .min_by_key(|(_, f)| f.len())
            .map(|(i, _)| height[i])
    };
    Ok(subsets_of_size(n, r)
        .filter(|&b| closure_height(b) == Some(r))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(xs.iter().copied())
    }

    #[test]
    fn flats_of_small_uniform_matroids() {
        let u23 = Matroid::uniform(2, 3).unwrap().flats();
        assert_eq!(
            u23.by_rank(),
            &[
                vec![ElementSet::EMPTY],
                vec![set(&[0]), set(&[1]), set(&[2])],
                vec![set(&[0, 1, 2])]
            ]
        );
        let u12 = Matroid::uniform(1, 2).unwrap().flats();
        assert_eq!(u12.by_rank(), &[vec![ElementSet::EMPTY], vec![set(&[0, 1])]]);
    }

    #[test]
    fn from_flats_round_trips() {
        for (r, n) in [(2, 3), (1, 2), (0, 3), (3, 5), (4, 4)] {
            let m = Matroid::uniform(r, n).unwrap();
            assert_eq!(Matroid::from_flats(n, m.flats().iter()).unwrap(), m);
        }
    }

    #[test]
    fn from_flats_rejects_non_lattices() {
        let missing_meet = [set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])];
        assert!(matches!(
            Matroid::from_flats(3, missing_meet),
            Err(Error::NotAFlatLattice { .. })
        ));
        let no_top = [ElementSet::EMPTY, set(&[0])];
        assert!(matches!(
            Matroid::from_flats(2, no_top),
            Err(Error::NotAFlatLattice { .. })
        ));
        // A chain of length two on two elements: the chain-length rank gives
        // r({1}) = 2, which no matroid has.
        let chain = [ElementSet::EMPTY, set(&[0]), set(&[0, 1])];
        assert!(matches!(
            Matroid::from_flats(2, chain),
            Err(Error::NotAFlatLattice { .. })
        ));
    }

    #[test]
    fn sparse_path_matches_dense_path() {
        let m = Matroid::uniform(2, 5).unwrap();
        let fam: Vec<_> = m.flats().iter().collect();
        assert_eq!(dense_bases(5, &fam).unwrap(), sparse_bases(5, &fam).unwrap());
    }
}
