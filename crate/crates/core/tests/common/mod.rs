//! Brute-force oracles shared by the integration tests. Everything here is
//! computed from bases or rank functions directly, without the library's
//! flat, cut or quotient machinery.
#![allow(dead_code)]

use std::collections::BTreeSet;

use matroid_quotients::matroid::fixtures;
use matroid_quotients::{ElementSet, Matroid};

pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0..1u64 << n).map(ElementSet::from_bits)
}

pub fn set(xs: &[usize]) -> ElementSet {
    ElementSet::from_elements(xs.iter().copied())
}

fn exchange_holds(family: &[ElementSet]) -> bool {
    let members: BTreeSet<ElementSet> = family.iter().copied().collect();
    family.iter().all(|&b1| {
        family.iter().all(|&b2| {
            b1.difference(b2).iter().all(|x| {
                b2.difference(b1)
                    .iter()
                    .any(|y| members.contains(&b1.without(x).with(y)))
            })
        })
    })
}

/// Every matroid on `n` labelled elements, by testing the exchange axiom on
/// every nonempty family of equal-size subsets. Feasible for `n ≤ 5`.
pub fn brute_matroids(n: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for r in 0..=n {
        let candidates: Vec<ElementSet> = all_subsets(n).filter(|s| s.len() == r).collect();
        for mask in 1u64..(1u64 << candidates.len()) {
            let family: Vec<ElementSet> = (0..candidates.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            if exchange_holds(&family) {
                out.push(Matroid::from_bases(n, family).expect("exchange checked"));
            }
        }
    }
    out.sort();
    out
}

pub fn rank(m: &Matroid, a: ElementSet) -> usize {
    m.bases().iter().map(|b| b.intersection(a).len()).max().unwrap_or(0)
}

pub fn closure(m: &Matroid, a: ElementSet) -> ElementSet {
    let r = rank(m, a);
    m.ground_set().iter().filter(|&x| rank(m, a.with(x)) == r).collect()
}

pub fn flats(m: &Matroid) -> Vec<ElementSet> {
    all_subsets(m.n()).filter(|&a| closure(m, a) == a).collect()
}

pub fn circuits(m: &Matroid) -> Vec<ElementSet> {
    let dependent = |a: ElementSet| rank(m, a) < a.len();
    all_subsets(m.n())
        .filter(|&a| dependent(a) && a.iter().all(|x| !dependent(a.without(x))))
        .collect()
}

/// The matroid on `n` elements with the given rank function.
pub fn from_rank(n: usize, r: impl Fn(ElementSet) -> usize) -> Matroid {
    let top = r(ElementSet::full(n));
    let bases = all_subsets(n).filter(|&b| b.len() == top && r(b) == top);
    Matroid::from_bases(n, bases).expect("rank function of a matroid")
}

/// `m1 ↠ m2` by the rank inequality `r1(B) - r1(A) ≥ r2(B) - r2(A)` for
/// all `A ⊆ B`; enough to check it for `B = A + x`.
pub fn quotient_by_rank(m1: &Matroid, m2: &Matroid) -> bool {
    all_subsets(m1.n()).all(|a| {
        m1.ground_set().difference(a).iter().all(|x| {
            let b = a.with(x);
            rank(m1, b) - rank(m1, a) >= rank(m2, b) - rank(m2, a)
        })
    })
}

/// `L^i` by its rank function `min(r_bottom + i, r_top)`.
pub fn higgs_lift_by_rank(top: &Matroid, bottom: &Matroid, i: usize) -> Matroid {
    from_rank(top.n(), |a| (rank(bottom, a) + i).min(rank(top, a)))
}

/// The freest major: `r(A ∪ S) = min(r_top(A) + |S|, r_bottom(A) + k)` for
/// `A ⊆ E` and `S` among the `k` appended elements.
pub fn higgs_major_by_rank(top: &Matroid, bottom: &Matroid) -> Matroid {
    let n = top.n();
    let k = top.rank() - bottom.rank();
    let e = ElementSet::full(n);
    from_rank(n + k, |s| {
        let a = s.intersection(e);
        let extra = s.len() - a.len();
        (rank(top, a) + extra).min(rank(bottom, a) + k)
    })
}

/// All single-element extensions of `m` (new element last) found among
/// `brute_matroids(n + 1)`.
pub fn brute_extensions(m: &Matroid, universe: &[Matroid]) -> BTreeSet<Matroid> {
    let x = m.n();
    universe
        .iter()
        .filter(|h| h.n() == x + 1 && h.delete(ElementSet::singleton(x)) == *m)
        .cloned()
        .collect()
}

/// Named matroids beyond the exhaustive range.
pub fn fixture_matroids() -> Vec<Matroid> {
    vec![
        fixtures::non_pappus(),
        fixtures::paired_rank_two(6),
        fixtures::paired_rank_two(7),
        fixtures::paired_rank_three_extension(6),
        Matroid::uniform(3, 7).unwrap(),
        Matroid::uniform(2, 6).unwrap(),
        Matroid::uniform(4, 8).unwrap(),
    ]
}
