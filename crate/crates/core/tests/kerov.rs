mod common;

use std::collections::BTreeMap;

use common::{int, kerov, poly, printed};
use proptest::prelude::*;
use spin_kerov::json::{kerov_from_json, kerov_to_json};
use spin_kerov::kerov::{
    coincidence_report, express_in_basis, ordinary_kerov, positivity_report, positivity_report_parallel,
    spin_kerov, symmetrized_spin_kerov, BasisFamily, GeneratorMonomial,
};
use spin_kerov::measures::biane_cumulant;
use spin_kerov::partitions::{enumerate, power_sums, strict_partitions, PartitionKind};
use spin_kerov::spin::{spin_character_eval, spin_character_poly, spin_free_cumulant_poly};
use spin_kerov::characters::ordinary_character_eval;
use spin_kerov::{rat, GeneratorFamily, OddMonomial, Poly};

#[test]
fn printed_spin_polynomials() {
    for (k, text) in printed::SPIN {
        assert_eq!(spin_kerov(k).unwrap(), kerov(GeneratorFamily::Spin, text), "k = {k}");
        assert_eq!(spin_kerov(k).unwrap().to_string(), text.split_whitespace().collect::<Vec<_>>().join(" "));
    }
}

#[test]
fn printed_ordinary_polynomials_small() {
    for (k, text) in printed::ORDINARY.iter().filter(|(k, _)| *k <= 5) {
        assert_eq!(ordinary_kerov(*k).unwrap(), kerov(GeneratorFamily::Ordinary, text), "k = {k}");
    }
}

#[test]
fn expansion_reproduces_spin_characters() {
    let basis = BasisFamily::spin(12).unwrap();
    for k in (1..=11).step_by(2) {
        let kp = spin_kerov(k).unwrap();
        assert_eq!(kp.expand(&basis).unwrap(), spin_character_poly(k).unwrap(), "k = {k}");
    }
}

#[test]
fn leading_term_and_degree_bound() {
    for k in (1..=13).step_by(2) {
        let kp = spin_kerov(k).unwrap();
        let lead = GeneratorMonomial::from_subscripts(&[k + 1]);
        assert_eq!(kp.coefficient(&lead), int(1));
        for (m, _) in kp.terms().filter(|(m, _)| **m != lead) {
            assert!(m.degree(GeneratorFamily::Spin) + 1 <= k, "k = {k}: {m:?}");
        }
    }
}

#[test]
fn evaluation_matches_spin_characters() {
    let cumulants: Vec<Poly> = (1..=4).map(|j| spin_free_cumulant_poly(2 * j).unwrap()).collect();
    let kerovs: Vec<_> = [1u32, 3, 5, 7].iter().map(|&k| (k, spin_kerov(k).unwrap())).collect();
    for size in 0..=8 {
        for lambda in strict_partitions(size) {
            let ps = power_sums(&lambda, 9);
            let values: BTreeMap<u32, _> = cumulants
                .iter()
                .enumerate()
                .map(|(i, c)| (2 * i as u32 + 2, c.eval(&ps).unwrap()))
                .collect();
            for (k, kp) in &kerovs {
                assert_eq!(kp.eval(&values).unwrap(), spin_character_eval(*k, &lambda).unwrap(), "k={k} {lambda}");
            }
        }
    }
}

#[test]
fn ordinary_polynomials_evaluate_to_characters() {
    for k in 1..=5u32 {
        let kp = ordinary_kerov(k).unwrap();
        for size in 0..=9 {
            for mu in enumerate(size, PartitionKind::All) {
                let values: BTreeMap<u32, _> = (2..=k + 1).map(|j| (j, biane_cumulant(&mu, j).unwrap())).collect();
                assert_eq!(kp.eval(&values).unwrap(), ordinary_character_eval(k, &mu).unwrap(), "k={k} {mu}");
            }
        }
    }
}

#[test]
fn ordinary_parity_structure() {
    for k in 1..=8u32 {
        for (m, _) in ordinary_kerov(k).unwrap().terms() {
            assert_eq!(m.degree(GeneratorFamily::Ordinary) % 2, (k + 1) % 2, "k={k} {m:?}");
        }
    }
}

#[test]
fn symmetrized_example() {
    let k3 = symmetrized_spin_kerov(3).unwrap();
    assert_eq!(k3, kerov(GeneratorFamily::Symmetrized, "T4 + 7/4 T2"));
    let recs = positivity_report(3, GeneratorFamily::Symmetrized).unwrap();
    assert!(!recs[1].all_integers);
}

#[test]
fn parallel_sweep_matches_serial() {
    assert_eq!(
        positivity_report(9, GeneratorFamily::Spin).unwrap(),
        positivity_report_parallel(9, GeneratorFamily::Spin).unwrap()
    );
}

#[test]
fn comparison_for_seven() {
    let r = coincidence_report(7).unwrap();
    assert!(r.all_match());
    let lin: Vec<_> = r.linear_matches.iter().map(|m| (m.subscript, m.spin.clone())).collect();
    assert_eq!(lin, vec![(2, int(180)), (4, int(469)), (6, int(70)), (8, int(1))]);
    let ratios: Vec<_> = r.top_degree_ratios.iter().map(|e| (e.monomial.subscripts(), e.ratio.clone())).collect();
    assert_eq!(
        ratios,
        vec![(vec![6], Some(int(1))), (vec![4, 2], Some(int(2))), (vec![2, 2, 2], Some(int(4)))]
    );
}

#[test]
fn json_round_trip() {
    for k in (1..=9).step_by(2) {
        let kp = spin_kerov(k).unwrap();
        assert_eq!(kerov_from_json(&kerov_to_json(&kp)).unwrap(), kp);
    }
    let kp = ordinary_kerov(4).unwrap();
    assert_eq!(kerov_from_json(&kerov_to_json(&kp)).unwrap(), kp);
}

#[test]
fn parser_sanity() {
    assert_eq!(poly("p3 - 3 p1^2 + 1/4 p1").to_string(), "p3 - 3 p1^2 + 1/4 p1");
}

fn element() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(prop::sample::select(vec![1u32, 3, 5, 7]), 0..3), -9i64..=9, 1i64..=4), 0..6)
        .prop_map(|terms| {
            let mut p = Poly::zero();
            for (subs, n, d) in terms {
                p.add_term(OddMonomial::from_subscripts(&subs), rat(n, d));
            }
            p
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_change_round_trips(f in element()) {
        for basis in [BasisFamily::spin(8).unwrap(), BasisFamily::symmetrized(8).unwrap()] {
            let k = express_in_basis(&f, &basis).unwrap();
            prop_assert_eq!(k.expand(&basis).unwrap(), f.clone());
        }
    }
}
