//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime (run with `--nocapture` to see them). Every tolerance is
//! exact; the only budgets are wall-clock ceilings.

use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use toricmorph_core::fan::{catalog, catalog_names, Fan};
use toricmorph_core::grading::{class_group, same_degree, MultiDegree};
use toricmorph_core::groebner::{vanishes_only_at_origin, IdealBasis, ZeroLocusVerdict};
use toricmorph_core::matrix::Matrix;
use toricmorph_core::morphism::{sample, same_morphism, verify, VerdictStatus};
use toricmorph_core::poly::{gcd_binary_forms, monomials_of_degree, resultant_binary};
use toricmorph_core::primitive::{all_patterns, primitive_collections, y_membership_oracle};
use toricmorph_core::rng::Rng;
use toricmorph_core::scalar::rat_int;
use toricmorph_core::snf::snf;
use toricmorph_core::stability::{
    config_space_dim, filtration_profile, polyspace_dim, stability_bound,
    stable_range_from_duality, stratum_real_dim, truncation_dimension, BidegreeProfile,
};
use toricmorph_core::{HomogPoly, Int, MorphismCandidate, Rat};

fn run_criterion(number: u32, name: &str, limit: Duration, body: impl FnOnce() -> String) {
    let start = Instant::now();
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match result {
        Ok(detail) => {
            let timing = format!("{:.2}s of {:.0}s allowed", elapsed.as_secs_f64(), limit.as_secs_f64());
            if elapsed <= limit {
                println!("PASS criterion {number}: {name} ({detail}; {timing})");
            } else {
                println!("FAIL criterion {number}: {name} (over time budget: {timing})");
                panic!("criterion {number} exceeded its runtime budget");
            }
        }
        Err(err) => {
            println!(
                "FAIL criterion {number}: {name} ({:.2}s)",
                elapsed.as_secs_f64()
            );
            std::panic::resume_unwind(err);
        }
    }
}

fn q(v: i64) -> Rat {
    rat_int(v)
}

#[test]
fn criterion_1_primitive_collection_oracle_equivalence() {
    run_criterion(
        1,
        "primitive-collection oracle equivalence",
        Duration::from_secs(5),
        || {
            let mut checked = 0u64;
            for name in catalog_names() {
                let fan = catalog(name).unwrap();
                assert!(fan.ray_count() <= 12);
                let y = primitive_collections(&fan).unwrap();
                for pattern in all_patterns(fan.ray_count()) {
                    assert_eq!(
                        y_membership_oracle(&fan, &pattern),
                        y.pattern_in_y(&pattern),
                        "{name}: {pattern:?}"
                    );
                    checked += 1;
                }
            }
            format!("{checked} zero patterns across {} fans", catalog_names().len())
        },
    );
}

#[test]
fn criterion_2_theorem_formula_two_derivations() {
    run_criterion(
        2,
        "stability bound closed form equals duality derivation",
        Duration::from_secs(1),
        || {
            let mut cases = 0;
            for n in 1..=5usize {
                let fan = catalog(&format!("projective:{n}")).unwrap();
                for m in 1..=n {
                    for d in 1..=10i64 {
                        let degrees = MultiDegree::new(vec![d; n + 1]);
                        let report = stability_bound(&fan, m, &degrees).unwrap();
                        let expected = d * (2 * n as i64 - 2 * m as i64 + 1) - 1;
                        assert_eq!(report.theorem_bound, Some(expected), "n={n} m={m} d={d}");

                        let profile = BidegreeProfile::holomorphic(m, &degrees).unwrap();
                        let filtration = filtration_profile(&fan, &profile).unwrap();
                        assert_eq!(
                            stable_range_from_duality(&filtration),
                            expected,
                            "duality route n={n} m={m} d={d}"
                        );
                        cases += 1;
                    }
                }
            }
            assert_eq!(cases, 150);
            format!("{cases} cases, both derivations agree")
        },
    );
}

#[test]
fn criterion_3_dimension_chain_identity() {
    run_criterion(
        3,
        "filtration dimension-chain identity",
        Duration::from_secs(1),
        || {
            let mut rng = Rng::new(0xd1ce);
            for _ in 0..1000 {
                let n = rng.int_in(0, 1_000_000);
                let r = rng.int_in(1, 12);
                let p = rng.int_in(0, 50);
                let k = rng.int_in(1, 8);
                let m = rng.int_in(0, k - 1);
                assert_eq!(
                    stratum_real_dim(n, r, p) + config_space_dim(p, m, r, k) + 1,
                    truncation_dimension(n, p, m, k),
                    "N={n} r={r} p={p} m={m} k={k}"
                );
            }
            "1000 random parameter tuples".into()
        },
    );
}

#[test]
fn criterion_4_snf_contract() {
    run_criterion(4, "Smith normal form contract", Duration::from_secs(10), || {
        let mut rng = Rng::new(0x54f);
        for round in 0..500 {
            let rows = rng.below(6) as usize + 1;
            let cols = rng.below(6) as usize + 1;
            let a: Matrix<Int> = Matrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| Int::from(rng.int_in(-20, 20))).collect())
                    .collect(),
            )
            .unwrap();
            let out = snf(&a);
            assert_eq!(out.u.mul(&a).mul(&out.v), out.s, "round {round}: UAV = S");
            assert_eq!(out.u.det().abs(), Int::from(1), "round {round}: |det U|");
            assert_eq!(out.v.det().abs(), Int::from(1), "round {round}: |det V|");
            let d = rows.min(cols);
            for i in 0..rows {
                for j in 0..cols {
                    if i != j {
                        assert!(out.s[(i, j)].is_zero());
                    }
                }
            }
            for i in 0..d {
                assert!(out.s[(i, i)] >= Int::zero());
            }
            for w in out.invariant_factors.windows(2) {
                assert!(
                    num_integer::Integer::is_multiple_of(&w[1], &w[0]),
                    "round {round}: divisibility"
                );
            }
            let nonzero: Vec<Int> = (0..d)
                .map(|i| out.s[(i, i)].clone())
                .filter(|x| !x.is_zero())
                .collect();
            assert_eq!(nonzero, out.invariant_factors);
        }
        "500 random matrices up to 6x6, zero failures".into()
    });
}

/// Samples a nonzero binary form of exact degree `d` with coefficients in
/// `[-9, 9]`.
fn sample_form(rng: &mut Rng, d: u32) -> HomogPoly {
    loop {
        let p = HomogPoly::new(2, (0..=d).map(|i| (vec![i, d - i], q(rng.int_in(-9, 9)))))
            .unwrap();
        if !p.is_zero() {
            break p;
        }
    }
}

/// Resultant-only decision for a triple of equal-degree forms: the
/// specialization `Res(f, g + t h)` is a polynomial of degree at most
/// `deg f` in `t`, and it vanishes identically exactly when the triple has
/// a common projective root.
fn triple_has_common_root_by_resultants(f: &HomogPoly, g: &HomogPoly, h: &HomogPoly) -> bool {
    let df = f.degree().unwrap();
    (0..=df as i64).all(|t| {
        let combo = g.add(&h.scale(&q(t)));
        if combo.is_zero() {
            true // the formal resultant against the zero form vanishes
        } else {
            resultant_binary(f, &combo).unwrap().is_zero()
        }
    })
}

fn groebner_sees_common_root(forms: &[HomogPoly]) -> bool {
    let basis = IdealBasis::new(forms.to_vec()).unwrap();
    match vanishes_only_at_origin(&basis, 200_000) {
        ZeroLocusVerdict::OnlyOrigin => false,
        ZeroLocusVerdict::CommonZero(_) => true,
        ZeroLocusVerdict::Unknown => panic!("budget must suffice for binary forms"),
    }
}

fn assert_witness_kills_all(c: &MorphismCandidate, witness: &[Rat]) {
    assert!(witness.iter().any(|x| !x.is_zero()), "witness must be nonzero");
    for p in c.polys() {
        assert!(p.eval(witness).is_zero(), "witness fails on {p}");
    }
}

#[test]
fn criterion_5_verifier_vs_independent_oracles() {
    run_criterion(
        5,
        "gcd, resultant and Groebner common-root decisions agree",
        Duration::from_secs(60),
        || {
            let mut rng = Rng::new(0x04ac1e);
            let p1 = catalog("projective:1").unwrap();
            let p2 = catalog("projective:2").unwrap();
            let mut refutations = 0u32;
            // every third instance gets a planted shared linear factor, so
            // both branches of the decision are exercised heavily
            let plant = |rng: &mut Rng, forms: &mut [HomogPoly]| {
                let c = rng.int_in(-4, 4);
                let factor = HomogPoly::new(2, vec![(vec![1, 0], q(1)), (vec![0, 1], q(c))])
                    .unwrap();
                for f in forms.iter_mut() {
                    *f = f.mul(&factor);
                }
            };
            for round in 0..250 {
                // pairs over the projective line
                let d = rng.below(5) as u32 + 1;
                let mut f = sample_form(&mut rng, d);
                let mut g = sample_form(&mut rng, d);
                if round % 3 == 0 {
                    let mut forms = [f, g];
                    plant(&mut rng, &mut forms);
                    [f, g] = forms;
                }
                let d = f.degree().unwrap() as u32;
                let by_gcd = gcd_binary_forms(&f, &g).unwrap().degree().unwrap() >= 1;
                let by_res = resultant_binary(&f, &g).unwrap().is_zero();
                let by_gb = groebner_sees_common_root(&[f.clone(), g.clone()]);
                assert_eq!(by_gcd, by_res, "pair {round}: gcd vs resultant");
                assert_eq!(by_gcd, by_gb, "pair {round}: gcd vs groebner");

                let c = MorphismCandidate::new(
                    p1.clone(),
                    1,
                    MultiDegree::new(vec![d as i64, d as i64]),
                    vec![f, g],
                )
                .unwrap();
                let v = verify(&c, 200_000).unwrap();
                assert_eq!(
                    v.status == VerdictStatus::NotMorphism,
                    by_gcd,
                    "pair {round}: verdict"
                );
                if let Some(w) = &v.witness {
                    refutations += 1;
                    assert_witness_kills_all(&c, w);
                }
            }
            for round in 0..250 {
                // triples over the projective plane
                let d = rng.below(5) as u32 + 1;
                let mut f = sample_form(&mut rng, d);
                let mut g = sample_form(&mut rng, d);
                let mut h = sample_form(&mut rng, d);
                if round % 3 == 0 {
                    let mut forms = [f, g, h];
                    plant(&mut rng, &mut forms);
                    [f, g, h] = forms;
                }
                let d = f.degree().unwrap() as u32;
                let mut gcd = gcd_binary_forms(&f, &g).unwrap();
                gcd = gcd_binary_forms(&gcd, &h).unwrap();
                let by_gcd = gcd.degree().unwrap() >= 1;
                let by_res = triple_has_common_root_by_resultants(&f, &g, &h);
                let by_gb = groebner_sees_common_root(&[f.clone(), g.clone(), h.clone()]);
                assert_eq!(by_gcd, by_res, "triple {round}: gcd vs resultant");
                assert_eq!(by_gcd, by_gb, "triple {round}: gcd vs groebner");

                let c = MorphismCandidate::new(
                    p2.clone(),
                    1,
                    MultiDegree::new(vec![d as i64; 3]),
                    vec![f, g, h],
                )
                .unwrap();
                let v = verify(&c, 200_000).unwrap();
                assert_eq!(
                    v.status == VerdictStatus::NotMorphism,
                    by_gcd,
                    "triple {round}: verdict"
                );
                if let Some(w) = &v.witness {
                    refutations += 1;
                    assert_witness_kills_all(&c, w);
                }
            }
            format!("500 random pair/triple instances, {refutations} rational witnesses validated")
        },
    );
}

#[test]
fn criterion_6_g_equivalence() {
    run_criterion(6, "equality up to the group G", Duration::from_secs(30), || {
        let mut rng = Rng::new(0x6e9);
        let mut perturbation_flips = 0u32;
        for (fan_name, r) in [("projective:1", 2usize), ("projective:2", 3usize)] {
            let fan = catalog(fan_name).unwrap();
            let cg = class_group(&fan);
            for round in 0..50 {
                let d = rng.below(3) as i64 + 1;
                let degrees = MultiDegree::new(vec![d; r]);
                // resample until the first polynomial has two terms, so a
                // single +1 perturbation can never stay proportional
                let c = loop {
                    let seed = rng.next_u64();
                    let c = sample(&fan, 1, &degrees, 9, seed).unwrap();
                    if c.polys()[0].num_terms() >= 2 {
                        break c;
                    }
                };
                let lambda: Vec<Rat> = (0..cg.rank)
                    .map(|_| {
                        let n = loop {
                            let v = rng.int_in(-7, 7);
                            if v != 0 {
                                break v;
                            }
                        };
                        Rat::new(Int::from(n), Int::from(rng.int_in(1, 7)))
                    })
                    .collect();
                let g = toricmorph_core::grading::g_element_from_character(&cg, &lambda).unwrap();
                let scaled = c.scaled_by(&g).unwrap();

                assert!(
                    same_morphism(&c, &scaled).unwrap(),
                    "{fan_name} round {round}: scaling by G must preserve the morphism"
                );
                let v1 = verify(&c, 100_000).unwrap();
                let v2 = verify(&scaled, 100_000).unwrap();
                assert_eq!(v1.status, v2.status, "{fan_name} round {round}");
                for ((col1, s1), (col2, s2)) in
                    v1.per_collection.iter().zip(&v2.per_collection)
                {
                    assert_eq!(col1, col2);
                    assert_eq!(
                        std::mem::discriminant(s1),
                        std::mem::discriminant(s2),
                        "{fan_name} round {round}: per-collection status"
                    );
                }

                let lead = c.polys()[0].leading_term().unwrap().0.clone();
                let perturbed = scaled.perturbed(0, &lead).unwrap();
                assert!(
                    !same_morphism(&c, &perturbed).unwrap(),
                    "{fan_name} round {round}: perturbation must break equality"
                );
                perturbation_flips += 1;
            }
        }
        format!("100 candidates, {perturbation_flips} perturbation flips")
    });
}

#[test]
fn criterion_7_polyspace_dimension_vs_enumeration() {
    run_criterion(
        7,
        "polynomial-space dimension vs brute-force monomial count",
        Duration::from_secs(5),
        || {
            let mut cases = 0;
            for m in 1..=3usize {
                for p in 0..=6i64 {
                    for q in 0..=6i64 {
                        let holo = monomials_of_degree(m + 1, p as u32);
                        let anti = monomials_of_degree(m + 1, q as u32);
                        let total = (holo.len() * anti.len()) as i64;
                        let pinned = (holo.iter().filter(|e| e[m] == 0).count()
                            * anti.iter().filter(|e| e[m] == 0).count())
                            as i64;
                        assert_eq!(
                            polyspace_dim(m, p, q),
                            total - pinned,
                            "m={m} p={p} q={q}"
                        );
                        cases += 1;
                    }
                }
            }
            format!("{cases} (m, p, q) cases agree exactly")
        },
    );
}

#[test]
fn criterion_8_class_group_ranks_and_degrees() {
    run_criterion(
        8,
        "class-group ranks and degree-equality cross-check",
        Duration::from_secs(5),
        || {
            let mut rng = Rng::new(0xc1a55);
            let mut pairs = 0;
            for name in catalog_names() {
                let fan = catalog(name).unwrap();
                if !fan.validate().is_smooth {
                    continue;
                }
                let cg = class_group(&fan);
                assert_eq!(cg.rank, fan.ray_count() - fan.dim(), "{name}: rank = r - n");
                assert!(cg.invariant_factors.is_empty(), "{name}: no torsion");
                for _ in 0..200 {
                    let a: Vec<Int> = (0..fan.ray_count())
                        .map(|_| Int::from(rng.int_in(-8, 8)))
                        .collect();
                    let b: Vec<Int> = (0..fan.ray_count())
                        .map(|_| Int::from(rng.int_in(-8, 8)))
                        .collect();
                    assert_eq!(
                        same_degree(&fan, &a, &b).unwrap(),
                        cg.monomial_degree(&a) == cg.monomial_degree(&b),
                        "{name}: {a:?} vs {b:?}"
                    );
                    pairs += 1;
                }
            }
            format!("{pairs} random exponent pairs across the smooth catalog")
        },
    );
}

#[test]
fn criterion_9_validator_mutation_suite() {
    run_criterion(9, "validator mutation suite", Duration::from_secs(1), || {
        let mut mutations = 0;
        for name in catalog_names() {
            let fan = catalog(name).unwrap();
            let report = fan.validate();
            assert!(report.is_simplicial && report.is_complete, "{name}");
            assert_eq!(report.is_smooth, name != "p112", "{name} is the non-smooth witness");
            if name == "p112" {
                continue;
            }

            // deleting a maximal cone breaks completeness
            let reduced = Fan::new(
                "mutated",
                fan.dim(),
                fan.rays().to_vec(),
                fan.max_cones()[1..].to_vec(),
            )
            .unwrap();
            assert!(!reduced.validate().is_complete, "{name}: cone deletion");
            mutations += 1;

            // replacing ray i by 2*ray_i + ray_j doubles one cone determinant;
            // needs a cone with two rays, so the line is excluded
            if fan.dim() < 2 {
                continue;
            }
            let cone = &fan.max_cones()[0];
            let (i, j) = (cone[0], cone[1]);
            let mut rays = fan.rays().to_vec();
            rays[i] = rays[i]
                .iter()
                .zip(&rays[j])
                .map(|(a, b)| a * Int::from(2) + b)
                .collect();
            let skewed = Fan::new("skewed", fan.dim(), rays, fan.max_cones().to_vec()).unwrap();
            let skewed_report = skewed.validate();
            assert!(!skewed_report.is_smooth, "{name}: ray replacement");
            assert!(
                skewed_report
                    .failures
                    .iter()
                    .any(|(_, why)| why.contains("determinant")),
                "{name}: determinant failure recorded"
            );
            mutations += 1;
        }
        format!("{mutations} mutations refuted as expected")
    });
}
