//! Acceptance run: one PASS/FAIL line per criterion. Every check is exact;
//! a criterion fails on the first mismatch.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use matroid_quotients::cli;
use matroid_quotients::demo;
use matroid_quotients::extension::{all_modular_cuts, extend, lift_cut, ModularCut};
use matroid_quotients::linalg::{plucker_raw, Field, Matrix, Scalar};
use matroid_quotients::matroid::enumerate::all_matroids;
use matroid_quotients::matroid::fixtures::{non_pappus, paired_rank_three_extension, paired_rank_two, NON_PAPPUS_E};
use matroid_quotients::quotient::{
    all_factorizations, factorization_from_major, is_quotient, is_quotient_by_circuits, is_quotient_by_flats,
    major_from_factorization, Major, Quotient,
};
use matroid_quotients::realization::{
    random_uniform_realization, realize_major_from_quotient, realize_quotient_from_major, search_realization,
    CutExtension, Realization,
};
use matroid_quotients::tropical::{
    chain_points, flag_cone_point, flat_chains, trop_matroid_membership, trop_matroid_membership_by_cycles,
    TropicalPoint,
};
use matroid_quotients::{ElementSet, Matroid};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn u(r: usize, n: usize) -> Matroid {
    Matroid::uniform(r, n).unwrap()
}

fn matroids_up_to(n: usize) -> Vec<Matroid> {
    (0..=n).flat_map(|k| all_matroids(k).unwrap()).collect()
}

fn quotients_on(n: usize) -> Vec<Quotient> {
    let ms = all_matroids(n).unwrap();
    let mut out = Vec::new();
    for top in &ms {
        for bottom in &ms {
            if bottom.rank() <= top.rank() && is_quotient(top, bottom).unwrap() {
                out.push(Quotient::new(top.clone(), bottom.clone()).unwrap());
            }
        }
    }
    out
}

fn uniform_higgs_major() -> Outcome {
    let mut count = 0;
    for n in 0..=7 {
        for r in 0..=n {
            for s in 0..=r {
                let h = Quotient::new(u(r, n), u(s, n)).unwrap().higgs_major().unwrap();
                ensure(*h.matroid() == u(r, n + r - s), || format!("U({r},{n}) -> U({s},{n})"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} quotients"))
}

fn non_pappus_quotient() -> Outcome {
    let p = non_pappus();
    let e = ElementSet::singleton(NON_PAPPUS_E);
    let (top, bottom) = (p.delete(e), p.contract(e));
    ensure(is_quotient(&top, &bottom).unwrap(), || "P\\e does not map onto P/e".into())?;
    let q = Quotient::new(top, bottom).unwrap();
    ensure(q.nullity() == 1, || format!("nullity {}", q.nullity()))?;
    let h = q.higgs_major().unwrap();
    ensure(h.matroid().is_isomorphic(&p).is_some(), || "major not isomorphic to P".into())?;
    let out = cli::run(["mq", "demo", "non-pappus"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    ensure(v["outcome"] == "non_realizable", || format!("outcome {}", v["outcome"]))?;
    ensure(v["report"]["fixture"].is_string(), || "no fixture name".into())?;
    Ok(format!("fixture {}, exit {}", v["report"]["fixture"], out.code))
}

fn obstructed_plane() -> Outcome {
    let CutExtension::Obstructed(cert) = demo::obstructed_extension(0).unwrap() else {
        return Err("the plane extended".into());
    };
    ensure(cert.dimension() == 0, || format!("W has dimension {}", cert.dimension()))?;
    ensure(cert.system.kernel().cols() == 0, || "system has nonzero solutions".into())?;
    ensure(cert.verify().unwrap(), || "certificate does not verify".into())?;
    // The determinant conditions for the dependent triples {0,1,e},
    // {2,3,e}, {4,5,e}.
    let stated = Matrix::rational(&[&[-18, 271, 0], &[4173, 0, 92], &[2352, 98, 52]]);
    ensure(stated.kernel().cols() == 0, || "stated system is singular".into())?;
    for i in 0..stated.rows() {
        let row = stated.select_rows(&[i]);
        let matched = (0..cert.system.rows()).any(|j| row.vstack(&cert.system.select_rows(&[j])).unwrap().rank() == 1);
        ensure(matched, || format!("stated condition {i} is not among the system rows"))?;
    }
    Ok("W = 0, system rows match the three determinant conditions".into())
}

fn nested_plane() -> Outcome {
    let out = demo::nested_extension(0).unwrap();
    ensure(out.column_accepted, || "column (1,0,0) rejected".into())?;
    ensure(matches!(out.sampled, CutExtension::Extended { .. }), || "seeded extension failed".into())?;
    ensure(out.matches_line, || "bottom row space differs from the stated line".into())?;
    let line = demo::extendable_plane_line();
    ensure(out.pair.bottom.same_row_space(&line).unwrap(), || "row spaces differ".into())?;
    ensure(out.pair.top.row_space_contains(&out.pair.bottom).unwrap(), || "not nested".into())?;
    Ok("column accepted, bottom row space equal".into())
}

fn kennedy() -> Outcome {
    let mut factorizations = 0;
    let mut quotients = 0;
    for n in 0..=4 {
        for q in quotients_on(n) {
            if q.nullity() > 3 {
                continue;
            }
            quotients += 1;
            for f in all_factorizations(&q).unwrap() {
                let h = major_from_factorization(&f).unwrap();
                ensure(factorization_from_major(&h).unwrap() == f, || format!("F(M(N)) != N for {f:?}"))?;
                factorizations += 1;
            }
            let hm = q.higgs_major().unwrap();
            ensure(major_from_factorization(&q.higgs_factorization().unwrap()).unwrap() == hm, || {
                format!("M(Higgs factorization) != Higgs major for {q:?}")
            })?;
        }
    }
    Ok(format!("{quotients} quotients, {factorizations} factorizations"))
}

fn diamond_and_cut_lemmas() -> Outcome {
    let mut diamonds = 0;
    for m in matroids_up_to(4) {
        for e in 0..m.n() {
            let single = ElementSet::singleton(e);
            let c = m.contract(single);
            for cut in all_modular_cuts(&c) {
                let lifted = lift_cut(&m, e, &cut).unwrap();
                let left = extend(&m, &lifted, "f").unwrap().contract(single);
                ensure(left == extend(&c, &cut, "f").unwrap(), || format!("diamond fails for {m:?}, e = {e}"))?;
                diamonds += 1;
            }
        }
    }
    let mut lifts = 0;
    for n in 0..=4 {
        for q in quotients_on(n) {
            let k = q.nullity();
            if k == 0 {
                continue;
            }
            let family: Vec<ElementSet> = q.top().flats().iter().filter(|&f| q.subset_nullity(f) == k).collect();
            let cut = ModularCut::new(q.top(), family).map_err(|e| format!("{q:?}: {e}"))?;
            let step = extend(q.top(), &cut, "e").unwrap().contract(ElementSet::singleton(n));
            ensure(step == q.higgs_lift(k - 1).unwrap(), || format!("nullity-k cut of {q:?}"))?;
            lifts += 1;
        }
    }
    Ok(format!("{diamonds} diamonds, {lifts} nullity-k cuts"))
}

fn proportional(v: &[Scalar], w: &[Scalar]) -> bool {
    let a = Matrix::from_columns(Field::Rational, v.len(), &[v.to_vec(), w.to_vec()]).unwrap();
    a.rank() == 1 && v.iter().any(|x| !x.is_zero())
}

fn elementary_fixture(seed: u64) -> Realization {
    match seed % 4 {
        0 => random_uniform_realization(3, 6, seed).unwrap(),
        1 => random_uniform_realization(2, 5, seed).unwrap(),
        2 => search_realization(&paired_rank_two(6), seed, 16).unwrap().unwrap(),
        _ => search_realization(&paired_rank_three_extension(6), seed, 16).unwrap().unwrap(),
    }
}

fn elementary_round_trip() -> Outcome {
    let failures: Vec<u64> = (0..100u64)
        .into_par_iter()
        .filter(|&seed| {
            let rh = elementary_fixture(seed);
            let n = rh.matroid().n();
            let h = Major::new(rh.matroid().clone(), vec![n - 1]).unwrap();
            let qr = realize_quotient_from_major(&rh, &h).unwrap();
            let back = realize_major_from_quotient(&qr, &h.quotient(), seed).unwrap();
            !(back.matroid() == h.matroid()
                && proportional(&back.matrix().column(n - 1), &rh.matrix().column(n - 1)))
        })
        .collect();
    ensure(failures.is_empty(), || format!("seeds {failures:?}"))?;
    Ok("100 seeded realizations".into())
}

fn bergman_corollary() -> Outcome {
    let mut pairs = 0usize;
    let mut included = 0usize;
    for n in 0..=5 {
        let ms = all_matroids(n).unwrap();
        let circuits: Vec<Vec<ElementSet>> = ms.iter().map(|m| m.circuits()).collect();
        let points: Vec<Vec<TropicalPoint>> = ms.par_iter().map(chain_points).collect();
        let results: Vec<Result<(usize, usize), String>> = (0..ms.len())
            .into_par_iter()
            .map(|i| {
                let (mut p, mut inc) = (0, 0);
                for j in 0..ms.len() {
                    // m1 = ms[i] against m2 = ms[j]: is m1 a quotient of m2?
                    let by_flats = is_quotient_by_flats(&ms[j], &ms[i]).unwrap();
                    let by_circuits = is_quotient_by_circuits(&ms[j], &ms[i]).unwrap();
                    if by_flats != by_circuits {
                        return Err(format!("predicates disagree on {:?} -> {:?}", ms[j], ms[i]));
                    }
                    if by_flats {
                        let inside = points[i].iter().all(|v| circuits[j].iter().all(|&c| v.min_attained_twice(c)));
                        if !inside {
                            return Err(format!("flag-cone point of {:?} outside trop of {:?}", ms[i], ms[j]));
                        }
                        inc += 1;
                    }
                    p += 1;
                }
                Ok((p, inc))
            })
            .collect();
        for r in results {
            let (p, inc) = r?;
            pairs += p;
            included += inc;
        }
    }
    Ok(format!("{pairs} pairs, {included} quotients"))
}

fn standard_line() -> Outcome {
    let report = demo::standard_line(2, 50, 7).unwrap();
    ensure(report.source.n() == 6 && report.target.n() == 6, || "wrong number of monomials".into())?;
    ensure(!report.quotient, || "M(I_2) is a quotient of M(J_2)".into())?;
    ensure(report.samples.len() == 50, || "sample count".into())?;
    let bad = report.samples.iter().filter(|s| !(s.in_source && s.in_target)).count();
    ensure(bad == 0, || format!("{bad} samples outside"))?;
    Ok("not a quotient, 50/50 samples on both sides".into())
}

fn exchange_holds(bases: &[ElementSet]) -> bool {
    bases.iter().all(|&a| {
        bases.iter().all(|&b| {
            a.difference(b)
                .iter()
                .all(|x| b.difference(a).iter().any(|y| bases.contains(&a.without(x).with(y))))
        })
    })
}

fn property_suites() -> Outcome {
    let small = matroids_up_to(5);
    let counts: Vec<usize> = (0..=5).map(|n| all_matroids(n).unwrap().len()).collect();
    ensure(counts == [1, 2, 5, 16, 68, 406], || format!("matroid counts {counts:?}"))?;
    for m in &small {
        ensure(exchange_holds(m.bases()), || format!("exchange fails for {m:?}"))?;
    }
    let mut fixtures = vec![non_pappus(), paired_rank_two(6), paired_rank_three_extension(6), u(3, 7)];
    fixtures.extend(small.iter().cloned());
    for m in &fixtures {
        let e = m.ground_set();
        for a in (0..1u64 << m.n()).map(ElementSet::from_bits) {
            let cl = m.closure(a);
            ensure(a.is_subset(cl) && m.closure(cl) == cl, || format!("closure of {a:?} in {m:?}"))?;
            for x in e.difference(a).iter() {
                ensure(cl.is_subset(m.closure(a.with(x))), || format!("closure not monotone in {m:?}"))?;
            }
        }
        let back = Matroid::from_flats(m.n(), m.flats().iter()).unwrap();
        ensure(back == *m, || format!("flats round trip fails for {m:?}"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut pluckers = 0;
    while pluckers < 200 {
        let rows: Vec<Vec<Scalar>> = (0..2)
            .map(|_| {
                (0..4)
                    .map(|_| {
                        let q = BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
                        Field::Rational.from_rational(&q).unwrap()
                    })
                    .collect()
            })
            .collect();
        let a = Matrix::from_rows(Field::Rational, 4, rows).unwrap();
        if a.rank() < 2 {
            continue;
        }
        let p = plucker_raw(&a).unwrap();
        let c = |i: usize, j: usize| p[&vec![i, j]].clone();
        let rel = &(&(&c(0, 1) * &c(2, 3)) - &(&c(0, 2) * &c(1, 3))) + &(&c(0, 3) * &c(1, 2));
        ensure(rel.is_zero(), || format!("Plücker relation fails for {a:?}"))?;
        pluckers += 1;
    }

    let mut memberships = 0;
    for (k, m) in fixtures.iter().take(4).enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        let chains = flat_chains(m);
        for i in 0..1000 {
            let v = if i % 2 == 0 {
                let chain = &chains[rng.gen_range(0..chains.len())];
                let w: Vec<BigRational> =
                    chain.iter().map(|_| BigRational::from_integer(rng.gen_range(1i64..=4).into())).collect();
                flag_cone_point(m, chain, &w).unwrap()
            } else {
                let coords: Vec<i64> = (0..m.n()).map(|_| rng.gen_range(0..=2)).collect();
                TropicalPoint::from_i64(&coords)
            };
            let by_circuits = trop_matroid_membership(m, &v).unwrap();
            ensure(by_circuits == trop_matroid_membership_by_cycles(m, &v).unwrap(), || {
                format!("membership differs at {v:?}")
            })?;
            memberships += 1;
        }
    }

    let mut orders = 0;
    for m in matroids_up_to(4) {
        let cuts = all_modular_cuts(&m);
        let x = ElementSet::singleton(m.n());
        let ext: Vec<Matroid> = cuts.iter().map(|c| extend(&m, c, "p").unwrap()).collect();
        let con: Vec<Matroid> = ext.iter().map(|h| h.contract(x)).collect();
        let proper = |c: &ModularCut| !c.is_empty() && !c.contains(m.loops());
        for i in 0..cuts.len() {
            for j in 0..cuts.len() {
                let sub = cuts[i].is_subset(&cuts[j]);
                ensure(sub == ext[i].weak_leq(&ext[j]).unwrap(), || format!("extension order on {m:?}"))?;
                if proper(&cuts[i]) && proper(&cuts[j]) {
                    ensure(sub == con[i].weak_leq(&con[j]).unwrap(), || format!("contraction order on {m:?}"))?;
                }
                orders += 1;
            }
        }
    }
    Ok(format!(
        "{} matroids, {pluckers} Plücker checks, {memberships} membership checks, {orders} cut pairs",
        fixtures.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("uniform Higgs major", uniform_higgs_major),
        ("non-Pappus quotient", non_pappus_quotient),
        ("obstructed plane extension", obstructed_plane),
        ("nested plane extension", nested_plane),
        ("Kennedy identities", kennedy),
        ("diamond and cut lemmas", diamond_and_cut_lemmas),
        ("elementary round trip", elementary_round_trip),
        ("Bergman inclusion", bergman_corollary),
        ("standard tropical line", standard_line),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
