mod common;

use std::collections::BTreeMap;

use common::{cominuscule, connected_diagrams, diagram, roots_by_reflection};
use num_bigint::BigUint;
use symext_core::irreps::{epsilon_coordinates_doubled, restrict_weight, weight_system, weight_system_capped, weyl_dimension};
use symext_core::surgery::{grade_census, pairing_partition, surgery};
use symext_core::triples::{admissible_nodes, grading_dims, isotropy_split, make_canonical_quadruple};
use symext_core::{CartanType, Component, DynkinDiagram, Error, RootSystem, WeightVector};

fn d(s: &str) -> DynkinDiagram {
    s.parse().unwrap()
}

fn w(v: &[i64]) -> WeightVector {
    WeightVector(v.to_vec())
}

fn fundamental(rank: usize, node: usize) -> WeightVector {
    WeightVector((0..rank).map(|i| i64::from(i + 1 == node)).collect())
}

/// Labels of `ε_i` for `A_n` (`i = 0..=n`).
fn eps_a(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == i) - i64::from(k + 1 == i)).collect()
}

fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn multiset(ws: impl IntoIterator<Item = Vec<i64>>) -> BTreeMap<WeightVector, BigUint> {
    let mut m = BTreeMap::new();
    for v in ws {
        *m.entry(WeightVector(v)).or_insert_with(|| BigUint::from(0u32)) += 1u32;
    }
    m
}

#[test]
fn weyl_dimension_table() {
    let cases: &[(&str, WeightVector, u64)] = &[
        ("A1", w(&[2]), 3),
        ("A2", w(&[1, 1]), 8),
        ("D5", fundamental(5, 5), 16),
        ("D5", fundamental(5, 4), 16),
        ("E6", fundamental(6, 1), 27),
        ("E6", fundamental(6, 6), 27),
        ("E7", fundamental(7, 7), 56),
        ("E8", fundamental(8, 8), 248),
        ("F4", fundamental(4, 4), 26),
        ("G2", fundamental(2, 1), 7),
        ("B3", fundamental(3, 3), 8),
        ("C3", fundamental(3, 1), 6),
        ("C3", w(&[2, 0, 0]), 21),
        ("A4", fundamental(4, 2), 10),
    ];
    for (s, hw, dim) in cases {
        let rs = RootSystem::new(&d(s));
        assert_eq!(weyl_dimension(&rs, hw).unwrap(), BigUint::from(*dim), "{s} {hw:?}");
        assert_eq!(weight_system(&rs, hw).unwrap().dimension(), BigUint::from(*dim), "{s} {hw:?}");
    }
    assert!(matches!(weyl_dimension(&RootSystem::new(&d("A2")), &w(&[-1, 0])), Err(Error::NotDominant(_))));
}

#[test]
fn a_type_modules_match_tensor_enumeration() {
    for n in 1..=5 {
        let rs = RootSystem::new(&d(&format!("A{n}")));
        let sym = multiset((0..=n).flat_map(|i| (i..=n).map(move |j| add(&eps_a(n, i), &eps_a(n, j)))));
        let m = weight_system(&rs, &w(&{
            let mut v = vec![0; n];
            v[0] = 2;
            v
        }))
        .unwrap();
        assert_eq!(m.weights, sym, "S² A{n}");
        if n >= 2 {
            let wedge = multiset((0..=n).flat_map(|i| (i + 1..=n).map(move |j| add(&eps_a(n, i), &eps_a(n, j)))));
            assert_eq!(weight_system(&rs, &fundamental(n, 2)).unwrap().weights, wedge, "Λ² A{n}");
        }
    }
}

#[test]
fn small_weight_systems() {
    let a1 = RootSystem::new(&d("A1"));
    let m = weight_system(&a1, &w(&[3])).unwrap();
    assert_eq!(m.weights, multiset([vec![3], vec![1], vec![-1], vec![-3]]));
    let a2 = RootSystem::new(&d("A2"));
    let adj = weight_system(&a2, &w(&[1, 1])).unwrap();
    assert_eq!(adj.weights.len(), 7);
    assert_eq!(adj.multiplicity(&w(&[0, 0])), BigUint::from(2u32));
    assert_eq!(adj.dimension(), BigUint::from(8u32));
    let e8 = RootSystem::new(&d("E8"));
    assert!(matches!(
        weight_system_capped(&e8, &fundamental(8, 8), 100),
        Err(Error::WeightCapExceeded { .. })
    ));
}

#[test]
fn halfspin_epsilon_view() {
    let c = Component::new(CartanType::D, 5).unwrap();
    let rs = RootSystem::new(&DynkinDiagram::new(vec![c]));
    let m = weight_system(&rs, &fundamental(5, 5)).unwrap();
    assert!(m.is_multiplicity_free());
    let mut eps: Vec<Vec<i64>> = m.weights.keys().map(|w| epsilon_coordinates_doubled(c, w.as_slice()).unwrap()).collect();
    eps.sort();
    let mut want: Vec<Vec<i64>> = (0u32..32)
        .filter(|mask| mask.count_ones() % 2 == 1)
        .map(|mask| (0..5).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect())
        .collect();
    want.sort();
    assert_eq!(eps, want);
}

#[test]
fn restriction_examples() {
    let c3 = RootSystem::new(&d("C3"));
    let theta = c3.root_to_labels(&c3.highest_root().unwrap());
    assert_eq!(restrict_weight(&theta, &[0, 1]).unwrap(), w(&[2, 0]));
    assert_eq!(restrict_weight(&theta, &[0, 1, 2]).unwrap(), theta);
    assert!(restrict_weight(&theta, &[0, 5]).is_err());
    let e7 = RootSystem::new(&d("E7"));
    let theta = e7.root_to_labels(&e7.highest_root().unwrap());
    let r = restrict_weight(&theta, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(weyl_dimension(&RootSystem::new(&d("E6")), &r).unwrap(), BigUint::from(27u32));
}

#[test]
fn admissible_nodes_match_brute_force_and_classical_sets() {
    for c in connected_diagrams(8) {
        let oracle: Vec<usize> = (0..c.rank)
            .filter(|&i| roots_by_reflection(c).iter().all(|r| r[i] <= 1))
            .collect();
        let lib = admissible_nodes(&RootSystem::new(&diagram(c))).unwrap();
        assert_eq!(lib, oracle, "{c}");
        assert_eq!(lib, cominuscule(c), "{c}");
    }
}

#[test]
fn quadruples() {
    assert!(make_canonical_quadruple(&d("C3"), 2).is_ok());
    assert!(make_canonical_quadruple(&d("E6"), 0).is_ok());
    match make_canonical_quadruple(&d("E6"), 3) {
        Err(Error::Inadmissible { coefficient, witness, .. }) => {
            assert!(coefficient >= 2);
            assert_eq!(witness.0[3], coefficient);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(make_canonical_quadruple(&d("A2xA2"), 0), Err(Error::Disconnected)));

    let c3 = make_canonical_quadruple(&d("C3"), 2).unwrap();
    let split = isotropy_split(&c3).unwrap();
    assert_eq!(split.sub.diagram, d("A2"));
    assert_eq!(split.neighbor_nodes, vec![1]);
    assert_eq!(grading_dims(&c3).1, 12);

    let a5 = make_canonical_quadruple(&d("A5"), 2).unwrap();
    let split = isotropy_split(&a5).unwrap();
    assert_eq!(split.sub.diagram, d("A2xA2"));
    assert_eq!(split.neighbor_nodes, vec![1, 3]);

    let e7 = make_canonical_quadruple(&d("E7"), 6).unwrap();
    let split = isotropy_split(&e7).unwrap();
    assert_eq!(split.sub.diagram, d("E6"));
    assert_eq!(split.neighbor_nodes.len(), 1);
    assert_eq!(grading_dims(&e7).1, 54);
    assert_eq!(grading_dims(&make_canonical_quadruple(&d("A3"), 1).unwrap()).1, 8);
}

#[test]
fn grading_dims_add_up() {
    for c in connected_diagrams(8) {
        let rs = RootSystem::new(&diagram(c));
        for node in admissible_nodes(&rs).unwrap() {
            let q = make_canonical_quadruple(&diagram(c), node).unwrap();
            let (h, p) = grading_dims(&q);
            assert_eq!(h + p, rs.dimension(), "{c} node {}", node + 1);
        }
    }
}

#[test]
fn wedge2_census_formulas() {
    for n in 4..=10usize {
        let r = surgery(&d(&format!("D{}", n + 1)), n).unwrap();
        let (s0, s1, s2) = grade_census(&r);
        assert_eq!(s1, 2 * (n - 1), "n = {n}");
        assert_eq!(s0 + s2, 1 + (n - 1) * (n - 2) / 2, "n = {n}");
        assert_eq!(s0, 1);
    }
    // At n = 4 the census is (1, 6, 3): dim Λ²C⁵ = 10.
    let r = surgery(&d("D5"), 4).unwrap();
    assert_eq!(grade_census(&r), (1, 6, 3));
    let sizes = pairing_partition(&r).unwrap().iter().fold([0usize; 3], |mut acc, (_, j)| {
        acc[*j as usize] += 1;
        acc
    });
    assert_eq!(sizes, [1, 6, 3]);
}

#[test]
fn surgery_rows() {
    for n in 1..=6usize {
        let r = surgery(&d(&format!("C{}", n + 1)), n).unwrap();
        assert_eq!(r.module.sub.diagram, d(&format!("A{n}")));
        assert_eq!(r.module.n(), (n * n + 3 * n) / 2);
    }
    let e7 = surgery(&d("E7"), 6).unwrap();
    assert_eq!((e7.module.dim(), grade_census(&e7)), (27, (1, 16, 10)));
    let e6 = surgery(&d("E6"), 0).unwrap();
    assert_eq!(e6.module.sub.diagram, d("D5"));
    assert_eq!((e6.module.n(), grade_census(&e6)), (15, (1, 10, 5)));
    for (a, b) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let r = surgery(&d(&format!("A{}", a + b + 1)), a).unwrap();
        assert_eq!(r.module.n(), a * b + a + b);
        assert_eq!(r.components.len(), 2);
    }
}

#[test]
fn halfspin_grades_are_exterior_powers() {
    let r = surgery(&d("E6"), 0).unwrap();
    let c = r.module.sub.diagram.components()[0];
    for gw in &r.module.weights {
        let eps = epsilon_coordinates_doubled(c, gw.labels.as_slice()).unwrap();
        assert!(eps.iter().all(|x| x.abs() == 1));
        let plus = eps.iter().filter(|&&x| x == 1).count() as i64;
        // V_j is Λ^{5−2j}E: its weights have 5 − 2j plus signs.
        assert_eq!(plus, 5 - 2 * gw.grade, "{:?}", gw.labels);
    }
}
