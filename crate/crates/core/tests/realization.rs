mod common;

use common::*;
use matroid_quotients::extension::{all_modular_cuts, extend};
use matroid_quotients::linalg::{plucker, Field, Matrix, Scalar};
use matroid_quotients::matroid::fixtures::{paired_rank_three_extension, paired_rank_two};
use matroid_quotients::quotient::{Major, Quotient};
use matroid_quotients::realization::{
    check_realizes, check_realizes_strict, column_matroid, extend_along_cut, project_flag_pluckers,
    random_uniform_realization, realize_factorization, realize_major_from_quotient, realize_quotient_from_major,
    search_realization, verify_extension_column, CutExtension, Realization,
};
use matroid_quotients::{ElementSet, Error, Matroid};

/// Whether `v` is a nonzero multiple of `w`.
fn proportional(v: &[Scalar], w: &[Scalar]) -> bool {
    let a = Matrix::from_columns(Field::Rational, v.len(), &[v.to_vec(), w.to_vec()]).unwrap();
    a.rank() == 1 && v.iter().any(|x| !x.is_zero())
}

#[test]
fn every_small_matroid_has_a_found_realization() {
    for n in 0..=5 {
        for m in brute_matroids(n) {
            let r = search_realization(&m, n as u64, 16).unwrap().expect("rational realization");
            assert_eq!(column_matroid(r.matrix()).unwrap(), m);
        }
    }
}

#[test]
fn extensions_along_every_cut_are_sound() {
    let (mut extended, mut obstructed) = (0, 0);
    for n in 0..=4 {
        for m in brute_matroids(n) {
            let r = search_realization(&m, 7, 16).unwrap().unwrap();
            for (i, cut) in all_modular_cuts(&m).iter().enumerate() {
                match extend_along_cut(&r, cut, "p", i as u64).unwrap() {
                    CutExtension::Extended { column, realization } => {
                        let target = extend(&m, cut, "p").unwrap();
                        assert!(check_realizes(realization.matrix(), &target).unwrap());
                        if !cut.is_empty() {
                            assert!(verify_extension_column(&r, cut, &column).unwrap());
                        }
                        extended += 1;
                    }
                    CutExtension::Obstructed(cert) => {
                        assert!(cert.verify().unwrap());
                        obstructed += 1;
                    }
                }
            }
        }
    }
    assert!(extended > 0);
    assert_eq!(obstructed, 0);
}

#[test]
fn extension_is_deterministic_in_the_seed() {
    let r = random_uniform_realization(3, 6, 11).unwrap();
    let cut = matroid_quotients::extension::ModularCut::new(r.matroid(), [r.matroid().ground_set()]).unwrap();
    let a = extend_along_cut(&r, &cut, "f", 5).unwrap();
    let b = extend_along_cut(&r, &cut, "f", 5).unwrap();
    assert_eq!(a, b);
    assert_eq!(random_uniform_realization(3, 6, 11).unwrap(), r);
    let m = paired_rank_two(6);
    assert_eq!(search_realization(&m, 3, 16).unwrap(), search_realization(&m, 3, 16).unwrap());
}

#[test]
fn finite_fields_are_refused_by_extension() {
    let f = Field::prime(5).unwrap();
    let a = Matrix::from_i64(f, &[&[1, 0, 1], &[0, 1, 1]]).unwrap();
    let m = Matroid::uniform(2, 3).unwrap();
    assert!(check_realizes(&a, &m).unwrap());
    let r = Realization::new(m.clone(), a).unwrap();
    let cut = matroid_quotients::extension::ModularCut::new(&m, [m.ground_set()]).unwrap();
    assert!(matches!(extend_along_cut(&r, &cut, "f", 0), Err(Error::FiniteFieldUnsupported)));
}

#[test]
fn binary_field_cannot_realize_four_points_on_a_line() {
    let f = Field::prime(2).unwrap();
    let u24 = Matroid::uniform(2, 4).unwrap();
    // Only three nonzero vectors exist in GF(2)^2.
    let vectors = [[1, 0], [0, 1], [1, 1]];
    for a in vectors {
        for b in vectors {
            for c in vectors {
                for d in vectors {
                    let m = Matrix::from_i64(f, &[&[a[0], b[0], c[0], d[0]], &[a[1], b[1], c[1], d[1]]]).unwrap();
                    assert!(!check_realizes(&m, &u24).unwrap());
                }
            }
        }
    }
}

/// Realizable elementary majors with the new element last.
fn elementary_fixtures(seed: u64) -> Realization {
    match seed % 4 {
        0 => random_uniform_realization(3, 6, seed).unwrap(),
        1 => random_uniform_realization(2, 5, seed).unwrap(),
        2 => search_realization(&paired_rank_two(6), seed, 16).unwrap().unwrap(),
        _ => search_realization(&paired_rank_three_extension(6), seed, 16).unwrap().unwrap(),
    }
}

#[test]
fn elementary_round_trip_recovers_the_new_column() {
    for seed in 0..40 {
        let rh = elementary_fixtures(seed);
        let n = rh.matroid().n();
        let h = Major::new(rh.matroid().clone(), vec![n - 1]).unwrap();
        let qr = realize_quotient_from_major(&rh, &h).unwrap();
        let q = h.quotient();
        assert!(qr.realizes(&q).unwrap());
        let back = realize_major_from_quotient(&qr, &q, seed).unwrap();
        assert_eq!(back.matroid(), h.matroid());
        assert_eq!(back.matrix().select_columns(&(0..n - 1).collect::<Vec<_>>()), qr.top);
        assert!(proportional(&back.matrix().column(n - 1), &rh.matrix().column(n - 1)), "seed {seed}");
    }
}

#[test]
fn generic_factorization_passes_through_uniform_middle() {
    let q = Quotient::new(Matroid::uniform(3, 6).unwrap(), Matroid::uniform(1, 6).unwrap()).unwrap();
    let rh = random_uniform_realization(3, 8, 2).unwrap();
    let h = Major::new(rh.matroid().clone(), vec![6, 7]).unwrap();
    let qr = realize_quotient_from_major(&rh, &h).unwrap();
    let chain = realize_factorization(&qr, &q, 2).unwrap();
    let dims: Vec<usize> = chain.iter().map(|a| a.rank()).collect();
    assert_eq!(dims, [3, 2, 1]);
    assert!(check_realizes(&chain[1], &Matroid::uniform(2, 6).unwrap()).unwrap());
    for w in chain.windows(2) {
        assert!(w[0].row_space_contains(&w[1]).unwrap());
    }
}

#[test]
fn major_realization_of_a_nullity_two_quotient() {
    let top = Matroid::uniform(3, 5).unwrap();
    let bottom = Matroid::uniform(1, 5).unwrap();
    let q = Quotient::new(top, bottom).unwrap();
    let rh = random_uniform_realization(3, 7, 9).unwrap();
    let h = Major::new(rh.matroid().clone(), vec![5, 6]).unwrap();
    let qr = realize_quotient_from_major(&rh, &h).unwrap();
    let back = realize_major_from_quotient(&qr, &q, 4).unwrap();
    assert_eq!(*back.matroid(), Matroid::uniform(3, 7).unwrap());
    let (p_top, p_bottom) = project_flag_pluckers(&back, &h).unwrap();
    assert_eq!(p_top, plucker(&qr.top).unwrap());
    assert_eq!(p_bottom, plucker(&qr.bottom).unwrap());
}

#[test]
fn row_space_and_columns_describe_the_same_matroid() {
    for seed in 0..10 {
        let r = elementary_fixtures(seed);
        let rows = r.row_space();
        assert!(rows.same_row_space(r.matrix()).unwrap());
        assert_eq!(column_matroid(&rows).unwrap(), *r.matroid());
        assert_eq!(rows.row_space_basis(), rows);
    }
    // A rank-deficient matrix still has a column matroid.
    let a = Matrix::rational(&[&[1, 2, 0], &[2, 4, 0], &[0, 0, 0]]);
    let m = column_matroid(&a).unwrap();
    assert_eq!(m.rank(), 1);
    assert_eq!(m.loops(), ElementSet::singleton(2));
}

#[test]
fn strict_check_is_capped() {
    let r = random_uniform_realization(2, 13, 1).unwrap();
    assert!(check_realizes(r.matrix(), r.matroid()).unwrap());
    assert!(matches!(check_realizes_strict(r.matrix(), r.matroid()), Err(Error::TooLarge(_))));
    let wrong = Matroid::uniform(2, 12).unwrap().direct_sum(&Matroid::uniform(0, 1).unwrap()).unwrap();
    assert!(!check_realizes(r.matrix(), &wrong).unwrap());
}
