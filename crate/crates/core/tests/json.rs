use std::fmt::Debug;

use matroid_quotients::demo;
use matroid_quotients::extension::all_modular_cuts;
use matroid_quotients::json::JsonFormat;
use matroid_quotients::linalg::{Field, Matrix};
use matroid_quotients::matroid::fixtures::non_pappus;
use matroid_quotients::quotient::Quotient;
use matroid_quotients::realization::{random_uniform_realization, realize_quotient_from_major, CutExtension};
use matroid_quotients::tropical::{
    linear_relative_realizability, standard_line_ideals, HomogeneousIdeal, TropicalPoint,
};
use matroid_quotients::Matroid;

fn round_trip<T: JsonFormat + PartialEq + Debug>(x: &T) {
    let s = x.to_json();
    let back = T::from_json(&s).unwrap_or_else(|e| panic!("{e}: {s}"));
    assert_eq!(&back, x);
    assert_eq!(back.to_json(), s);
}

#[test]
fn matroids_cuts_and_majors() {
    let p = non_pappus();
    round_trip(&p);
    round_trip(&Matroid::uniform(0, 0).unwrap());
    for cut in all_modular_cuts(&Matroid::uniform(2, 4).unwrap()) {
        round_trip(&cut);
    }
    let q = Quotient::new(Matroid::uniform(3, 5).unwrap(), Matroid::uniform(1, 5).unwrap()).unwrap();
    round_trip(&q.higgs_factorization().unwrap());
    let h = q.higgs_major().unwrap();
    round_trip(&h);
    let back = matroid_quotients::quotient::Major::from_json(&h.to_json()).unwrap();
    assert_eq!(back.matroid().labels(), h.matroid().labels());
}

#[test]
fn matrices_and_realizations() {
    round_trip(&Field::Rational);
    round_trip(&Field::prime(101).unwrap());
    round_trip(&Matrix::rational(&[&[1, -2], &[0, 7]]).scale(&Field::Rational.parse("3/4").unwrap()));
    round_trip(&Matrix::from_i64(Field::prime(7).unwrap(), &[&[1, 6, 3]]).unwrap());
    round_trip(&Matrix::zeros(Field::Rational, 0, 3));
    let r = random_uniform_realization(3, 7, 1).unwrap();
    round_trip(&r);
    let h = demo::uniform_major(3, 2, 5).unwrap();
    round_trip(&realize_quotient_from_major(&r, &h).unwrap());
    match demo::obstructed_extension(0).unwrap() {
        CutExtension::Obstructed(cert) => round_trip(&cert),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn tropical_objects() {
    round_trip(&TropicalPoint::from_i64(&[3, 0, 5]));
    let (i, j) = standard_line_ideals(3).unwrap();
    round_trip(&i);
    round_trip(&j);
    round_trip(&HomogeneousIdeal::new(1, vec![]).unwrap());
    round_trip(&demo::standard_line(2, 5, 9).unwrap());
    let report = demo::non_pappus_relative(0).unwrap();
    round_trip(&report);
    let u = |r, n| Matroid::uniform(r, n).unwrap();
    round_trip(&linear_relative_realizability(&u(1, 4), &u(2, 4), 3).unwrap());
    round_trip(&linear_relative_realizability(&u(2, 4), &u(1, 4), 3).unwrap());
}

#[test]
fn malformed_input_is_rejected() {
    assert!(TropicalPoint::from_json(r#"{"coords": ["1/0"]}"#).is_err());
    assert!(Matroid::from_json(r#"{"n": 2, "rank": 1, "bases": [[0, 1]]}"#).is_err());
    assert!(Field::from_json(r#"{"p": 4}"#).is_err());
    assert!(HomogeneousIdeal::from_json(r#"{"n": 1, "generators": [{"terms": [{"exps": [1, 1], "coef": "1"}, {"exps": [1, 0], "coef": "1"}]}]}"#).is_err());
}
