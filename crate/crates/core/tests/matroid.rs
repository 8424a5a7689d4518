mod common;

use common::*;
use matroid_quotients::matroid::enumerate::all_matroids;
use matroid_quotients::matroid::fixtures::{non_pappus, NON_PAPPUS_E};
use matroid_quotients::{ElementSet, Error, Matroid};
use proptest::prelude::*;

fn small_matroids() -> Vec<Matroid> {
    (0..=5).flat_map(brute_matroids).collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=5 {
        let mut lib = all_matroids(n).unwrap();
        lib.sort();
        assert_eq!(lib, brute_matroids(n), "n = {n}");
    }
    let counts: Vec<usize> = (0..=5).map(|n| brute_matroids(n).len()).collect();
    assert_eq!(counts, [1, 2, 5, 16, 68, 406]);
}

#[test]
fn rank_closure_flats_circuits_match_brute_force() {
    for m in small_matroids().iter().chain(&fixture_matroids()) {
        for a in all_subsets(m.n()) {
            assert_eq!(m.rank_of(a), rank(m, a));
            assert_eq!(m.closure(a), closure(m, a));
        }
        let mut f: Vec<ElementSet> = m.flats().iter().collect();
        f.sort();
        assert_eq!(f, flats(m));
        let mut c = m.circuits();
        c.sort();
        assert_eq!(c, circuits(m));
    }
}

#[test]
fn rank_is_monotone_and_submodular() {
    for m in small_matroids().iter().chain(&fixture_matroids()) {
        let n = m.n();
        for a in all_subsets(n) {
            for x in m.ground_set().difference(a).iter() {
                let gain_a = m.rank_of(a.with(x)) - m.rank_of(a);
                assert!(gain_a <= 1);
                // Diminishing returns on every superset step is submodularity.
                for y in m.ground_set().difference(a.with(x)).iter() {
                    let b = a.with(y);
                    assert!(m.rank_of(b.with(x)) - m.rank_of(b) <= gain_a);
                }
            }
        }
    }
}

#[test]
fn closure_is_a_closure_operator() {
    for m in small_matroids().iter().chain(&fixture_matroids()) {
        for a in all_subsets(m.n()) {
            let c = m.closure(a);
            assert!(a.is_subset(c));
            assert_eq!(m.closure(c), c);
            for x in m.ground_set().iter() {
                assert!(c.is_subset(m.closure(a.with(x))));
            }
        }
    }
}

#[test]
fn from_flats_round_trips() {
    for m in small_matroids().iter().chain(&fixture_matroids()) {
        let back = Matroid::from_flats(m.n(), m.flats().iter()).unwrap();
        assert_eq!(&back, m);
    }
}

#[test]
fn cocircuits_are_hyperplane_complements() {
    for m in small_matroids().iter().chain(&fixture_matroids()) {
        let mut co = m.dual().circuits();
        co.sort();
        let mut hyp: Vec<ElementSet> = m
            .flats()
            .hyperplanes()
            .iter()
            .map(|h| h.complement(m.n()))
            .collect();
        hyp.sort();
        assert_eq!(co, hyp);
        assert_eq!(m.dual().dual(), *m);
    }
}

#[test]
fn deletion_and_contraction_commute() {
    for m in brute_matroids(4) {
        for s in all_subsets(4) {
            for t in all_subsets(4).filter(|t| t.intersection(s).is_empty()) {
                assert_eq!(m.minor(t, s), m.delete(s).contract(t.compress(m.ground_set().difference(s))));
                assert_eq!(m.minor(t, s), m.contract(t).delete(s.compress(m.ground_set().difference(t))));
            }
        }
    }
}

#[test]
fn minors_by_rank_formula() {
    for m in brute_matroids(5) {
        let s = set(&[1, 3]);
        let kept = m.ground_set().difference(s);
        let c = m.contract(s);
        for a in all_subsets(3) {
            let a_full = a.expand(kept);
            assert_eq!(c.rank_of(a), rank(&m, a_full.union(s)) - rank(&m, s));
        }
    }
}

#[test]
fn direct_sum_ranks_add() {
    let a = Matroid::uniform(1, 2).unwrap();
    let b = Matroid::uniform(2, 3).unwrap();
    let s = a.direct_sum(&b).unwrap();
    for x in all_subsets(5) {
        let left = x.intersection(ElementSet::full(2));
        let right = ElementSet::from_bits(x.bits() >> 2);
        assert_eq!(s.rank_of(x), a.rank_of(left) + b.rank_of(right));
    }
}

#[test]
fn non_pappus_fixture_is_pinned() {
    let p = non_pappus();
    assert_eq!((p.n(), p.rank()), (9, 3));
    assert!(p.loops().is_empty());
    assert!(circuits(&p).iter().all(|c| c.len() >= 3));
    let e = ElementSet::singleton(NON_PAPPUS_E);
    let lines = p.delete(e).flats().of_rank(2).iter().filter(|l| l.len() == 3).count();
    assert_eq!(lines, 6);
    let c = p.contract(e);
    assert_eq!(c.rank(), 2);
    let parallel: Vec<ElementSet> = c.flats().of_rank(1).iter().copied().filter(|f| f.len() == 2).collect();
    let named = |a: &str, b: &str| c.elements([a, b]).unwrap();
    assert_eq!(parallel.len(), 2);
    assert!(parallel.contains(&named("2", "6")));
    assert!(parallel.contains(&named("3", "5")));
    // 8 three-point lines and 12 two-point lines.
    let f2 = p.flats();
    let lines = f2.of_rank(2);
    assert_eq!(lines.iter().filter(|l| l.len() == 3).count(), 8);
    assert_eq!(lines.iter().filter(|l| l.len() == 2).count(), 12);
}

#[test]
fn rejects_invalid_input() {
    assert!(matches!(Matroid::from_bases(3, []), Err(Error::EmptyBases)));
    assert!(matches!(
        Matroid::from_bases(3, [set(&[0]), set(&[0, 1])]),
        Err(Error::UnequalBasisSizes { .. })
    ));
    assert!(matches!(
        Matroid::from_bases(4, [set(&[0, 1]), set(&[2, 3])]),
        Err(Error::ExchangeAxiomViolation { .. })
    ));
    assert!(matches!(Matroid::from_bases(2, [set(&[3])]), Err(Error::ElementOutOfRange { .. })));
    assert!(matches!(Matroid::uniform(3, 2), Err(Error::RankTooLarge { .. })));
    assert!(Matroid::from_flats(2, [ElementSet::EMPTY, set(&[0]), set(&[0, 1])]).is_err());
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permuted_matroids_are_isomorphic(idx in 0usize..406, perm in permutation(5)) {
        let ms = all_matroids(5).unwrap();
        let m = &ms[idx];
        let p = m.permute(&perm).unwrap();
        let iso = m.is_isomorphic(&p).expect("isomorphic by construction");
        prop_assert_eq!(m.permute(&iso).unwrap(), p);
    }

    #[test]
    fn fixture_permutations_are_isomorphic(perm in permutation(9)) {
        let p = non_pappus();
        let q = p.permute(&perm).unwrap();
        prop_assert!(p.is_isomorphic(&q).is_some());
        prop_assert!(p.is_isomorphic(&Matroid::uniform(3, 9).unwrap()).is_none());
    }

    #[test]
    fn uniform_matroids_have_expected_counts(n in 0usize..9, r in 0usize..9) {
        prop_assume!(r <= n);
        let u = Matroid::uniform(r, n).unwrap();
        prop_assert_eq!(u.bases().len() as u128, matroid_quotients::matroid::binomial(n, r));
        prop_assert_eq!(u.dual(), Matroid::uniform(n - r, n).unwrap());
    }
}
