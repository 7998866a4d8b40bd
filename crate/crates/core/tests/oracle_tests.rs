//! Cross-checks of the Groebner-path colengths against independent oracles:
//! dense row reduction over the box basis, closed-form lattice counts, and
//! the staircase module's brute-force enumeration.

mod common;

use common::{dense_colength, ideal, poly, ring, ORD};
use hk_core::groebner::{buchberger, count_standard_monomials, verify_reduced_basis, BuchbergerConfig};
use hk_core::hk::{
    colength, frobenius_power, hk_estimate, hk_function, hs_multiplicity_of_ideal,
    RingMetadata, RingPresentation,
};
use hk_core::ideal::IdealPresentation;
use hk_core::monomial::MonomialOrder;
use hk_core::rational::{rat, rat_int};
use hk_core::staircase::StaircaseRegion;

fn cfg() -> BuchbergerConfig {
    BuchbergerConfig::default()
}

fn presentation(p: u32, vars: &[&str], relations: &[&str], name: &str) -> RingPresentation {
    let r = ring(p, vars);
    let gens = relations.iter().map(|s| poly(&r, s)).collect();
    let id = IdealPresentation::new(&r, ORD, gens).unwrap();
    RingPresentation::new(&r, id, RingMetadata::bare(name)).unwrap()
}

#[test]
fn dense_oracle_matches_box_counts() {
    // S/(x^2, y^2) over F_2: the generators vanish in the box, lambda = 4
    let r = ring(2, &["x", "y"]);
    let gens = [poly(&r, "x^2"), poly(&r, "y^2")];
    assert_eq!(dense_colength(&gens, &[2, 2], 2), 4);
    // a unit ideal has colength 0
    let r = ring(3, &["x"]);
    assert_eq!(dense_colength(&[poly(&r, "1")], &[2], 3), 0);
}

#[test]
fn textbook_quotient_dimension_against_dense_oracle() {
    // (x^2 + y^2, xy) over F_3 contains x^3 and y^3, so bounds (3,3) are valid
    let r = ring(3, &["x", "y"]);
    let gens = [poly(&r, "x^2+y^2"), poly(&r, "x*y")];
    assert_eq!(dense_colength(&gens, &[3, 3], 3), 4);

    let gb = buchberger(&ideal(&r, &["x^2+y^2", "x*y"]), ORD, &cfg()).unwrap();
    assert_eq!(count_standard_monomials(&gb, &cfg()).unwrap(), 4);
}

#[test]
fn membership_of_x_cubed_via_colength_equality() {
    // x^3 lies in (x^2+y^2, xy) iff adjoining it leaves the colength at 4
    let r = ring(3, &["x", "y"]);
    let without = [poly(&r, "x^2+y^2"), poly(&r, "x*y")];
    let with = [poly(&r, "x^2+y^2"), poly(&r, "x*y"), poly(&r, "x^3")];
    assert_eq!(dense_colength(&without, &[3, 3], 3), dense_colength(&with, &[3, 3], 3));
}

#[test]
fn quadric_cone_colengths_match_all_oracles() {
    // lambda(R/m^[q]) = (3q^2 - 1)/2 for the quadric cone section
    for (p, qs) in [(3u32, vec![3u64, 9]), (5, vec![5, 25])] {
        let a1 = presentation(p, &["x", "y", "z"], &["x^2+y*z"], "a1");
        let m = a1.maximal_ideal(ORD);
        for &q in &qs {
            let frob = frobenius_power(&m, q).unwrap();
            let got = colength(&a1, &frob, ORD, &cfg()).unwrap();
            assert_eq!(got, (3 * q * q - 1) / 2, "p={p} q={q}");
        }
    }
    // dense-oracle confirmation at p = 3
    let r = ring(3, &["x", "y", "z"]);
    let gens3 = [poly(&r, "x^2+y*z"), poly(&r, "x^3"), poly(&r, "y^3"), poly(&r, "z^3")];
    assert_eq!(dense_colength(&gens3, &[3, 3, 3], 3), 13);
    let gens9 = [poly(&r, "x^2+y*z"), poly(&r, "x^9"), poly(&r, "y^9"), poly(&r, "z^9")];
    assert_eq!(dense_colength(&gens9, &[9, 9, 9], 3), 121);
}

#[test]
fn three_dimensional_quadric_colengths() {
    // lambda(R/m^[q]) = (4q^3 - q)/3 for the split quadric in four variables,
    // independent of p
    for (p, qs) in [(3u32, vec![3u64, 9]), (5, vec![5])] {
        let quad = presentation(p, &["x", "y", "z", "w"], &["x*y+z*w"], "quadric3");
        let m = quad.maximal_ideal(ORD);
        for &q in &qs {
            let frob = frobenius_power(&m, q).unwrap();
            let got = colength(&quad, &frob, ORD, &cfg()).unwrap();
            assert_eq!(got, (4 * q * q * q - q) / 3, "p={p} q={q}");
        }
    }
    // dense-oracle confirmation at q = p = 3
    let r = ring(3, &["x", "y", "z", "w"]);
    let gens = [
        poly(&r, "x*y+z*w"),
        poly(&r, "x^3"),
        poly(&r, "y^3"),
        poly(&r, "z^3"),
        poly(&r, "w^3"),
    ];
    assert_eq!(dense_colength(&gens, &[3, 3, 3, 3], 3), 35);
}

#[test]
fn one_dimensional_families() {
    // node: lambda = 2q - 1
    let node = presentation(3, &["x", "y"], &["x*y"], "node");
    let m = node.maximal_ideal(ORD);
    for q in [3u64, 9, 27] {
        let frob = frobenius_power(&m, q).unwrap();
        assert_eq!(colength(&node, &frob, ORD, &cfg()).unwrap(), 2 * q - 1);
    }
    // triple line: lambda = 3q for q >= 3
    let cusp = presentation(5, &["x", "y"], &["x^3"], "cusp");
    let m = cusp.maximal_ideal(ORD);
    for q in [5u64, 25] {
        let frob = frobenius_power(&m, q).unwrap();
        assert_eq!(colength(&cusp, &frob, ORD, &cfg()).unwrap(), 3 * q);
    }
    // double line over F_2: lambda = 2q
    let line2 = presentation(2, &["x", "y"], &["y^2"], "line2");
    let m = line2.maximal_ideal(ORD);
    for q in [2u64, 4, 8] {
        let frob = frobenius_power(&m, q).unwrap();
        assert_eq!(colength(&line2, &frob, ORD, &cfg()).unwrap(), 2 * q);
    }
}

#[test]
fn quadric_cone_m_squared_chain_value() {
    // lambda(R/(m^2)^[q]) = 5q^2 - 1 on the quadric cone; hand-checked at
    // q = 1 (lambda(R/m^2) = 4) and cross-checked by the dense oracle at q = 3
    let a1 = presentation(3, &["x", "y", "z"], &["x^2+y*z"], "a1");
    let m2 = a1.maximal_ideal(ORD).power(2).unwrap();
    assert_eq!(colength(&a1, &m2, ORD, &cfg()).unwrap(), 4);
    for q in [3u64, 9] {
        let frob = frobenius_power(&m2, q).unwrap();
        assert_eq!(colength(&a1, &frob, ORD, &cfg()).unwrap(), 5 * q * q - 1);
    }
    let r = ring(3, &["x", "y", "z"]);
    let gens = [
        poly(&r, "x^2+y*z"),
        poly(&r, "x^6"),
        poly(&r, "x^3*y^3"),
        poly(&r, "x^3*z^3"),
        poly(&r, "y^6"),
        poly(&r, "y^3*z^3"),
        poly(&r, "z^6"),
    ];
    assert_eq!(dense_colength(&gens, &[6, 6, 6], 3), 44);
}

#[test]
fn colength_is_order_and_permutation_invariant() {
    let cases: Vec<(u32, Vec<&str>, Vec<&str>)> = vec![
        (3, vec!["x", "y", "z"], vec!["x^2+y*z", "x^3", "y^3", "z^3"]),
        (3, vec!["x", "y"], vec!["x^2+y^2", "x*y"]),
        (5, vec!["x", "y"], vec!["x^2", "x*y", "y^2"]),
        (3, vec!["x", "y", "z", "w"], vec!["x*y+z*w", "x^3", "y^3", "z^3", "w^3"]),
    ];
    for (p, vars, gens) in cases {
        let r = ring(p, &vars);
        let mut counts = Vec::new();
        for ord in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
            for reversed in [false, true] {
                let mut gen_list = gens.clone();
                if reversed {
                    gen_list.reverse();
                }
                let polys = gen_list
                    .iter()
                    .map(|s| hk_core::parse::parse_polynomial(s, &r, ord).unwrap())
                    .collect();
                let id = IdealPresentation::new(&r, ord, polys).unwrap();
                let gb = buchberger(&id, ord, &cfg()).unwrap();
                verify_reduced_basis(&gb).unwrap();
                counts.push(count_standard_monomials(&gb, &cfg()).unwrap());
            }
        }
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{counts:?}");
    }
}

#[test]
fn groebner_path_equals_staircase_lattice_count() {
    // monomial ideals: the two counting routes must agree exactly
    let ideals: Vec<(Vec<Vec<u32>>, Vec<&str>)> = vec![
        (vec![vec![1, 0], vec![0, 1]], vec!["x", "y"]),
        (vec![vec![2, 0], vec![1, 1], vec![0, 2]], vec!["x^2", "x*y", "y^2"]),
        (vec![vec![2, 0], vec![0, 3]], vec!["x^2", "y^3"]),
    ];
    for p in [3u32, 5] {
        let pres = presentation(p, &["x", "y"], &[], "ambient");
        for (exps, gens) in &ideals {
            let region = StaircaseRegion::new(exps.clone()).unwrap();
            let r = pres.ring().clone();
            let id = ideal(&r, gens);
            for e in 1..=2u32 {
                let q = u64::from(p).pow(e);
                let frob = frobenius_power(&id, q).unwrap();
                let via_groebner = colength(&pres, &frob, ORD, &cfg()).unwrap();
                let via_lattice = region.brute_force_colength(q as u32).unwrap();
                assert_eq!(via_groebner, via_lattice, "p={p} q={q} gens={gens:?}");
            }
        }
    }
}

#[test]
fn parameter_ideal_multiplicities_agree() {
    // (x^2, y^3) is generated by a system of parameters, so the
    // Hilbert-Samuel and Hilbert-Kunz multiplicities coincide at 6
    for p in [3u32, 5] {
        let pres = presentation(p, &["x", "y"], &[], "plane");
        let r = pres.ring().clone();
        let id = ideal(&r, &["x^2", "y^3"]);
        let f = hk_function(&pres, &id, "(x^2,y^3)", 2, 2, ORD, &cfg()).unwrap();
        let hk = hk_estimate(&f, 2).unwrap();
        let hs = hs_multiplicity_of_ideal(&pres, &id, 7, ORD, &cfg()).unwrap();
        assert_eq!(hk.value, rat_int(6));
        assert_eq!(hs.value, rat_int(6));
        let gap = (hk.value - hs.value).clone();
        let budget = hk.uncertainty + hs.uncertainty;
        assert!(gap <= budget && -budget.clone() <= gap);
    }
}

#[test]
fn two_point_estimates_from_frozen_samples() {
    // A1 two-point solve: a = (121 - 13) / (81 - 9) = 3/2
    let a1 = presentation(3, &["x", "y", "z"], &["x^2+y*z"], "a1");
    let m = a1.maximal_ideal(ORD);
    let f = hk_function(&a1, &m, "m", 2, 2, ORD, &cfg()).unwrap();
    let est = hk_estimate(&f, 2).unwrap();
    assert_eq!(est.value, rat(3, 2));

    // the three-dimensional quadric at e_max = 2 lands within 1/351 of 4/3
    let quad = presentation(3, &["x", "y", "z", "w"], &["x*y+z*w"], "quadric3");
    let m = quad.maximal_ideal(ORD);
    let f = hk_function(&quad, &m, "m", 2, 3, ORD, &cfg()).unwrap();
    let est = hk_estimate(&f, 3).unwrap();
    assert_eq!(est.value, rat(467, 351));
    assert_eq!(est.value - rat(4, 3), rat(-1, 351));
}
