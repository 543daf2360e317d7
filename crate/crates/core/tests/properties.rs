use proptest::prelude::*;
use symext_core::irreps::weight_system;
use symext_core::{DynkinDiagram, RootSystem, RootVector, WeightVector};

fn rs(s: &str) -> RootSystem {
    RootSystem::new(&s.parse::<DynkinDiagram>().unwrap())
}

fn labels(rank: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(-6i64..=6, rank).prop_map(WeightVector)
}

const DIAGRAMS: [&str; 8] = ["A3", "B3", "C4", "D4", "D5", "G2", "F4", "E6"];

proptest! {
    #[test]
    fn reflection_is_involution(w in labels(5), node in 0usize..5) {
        let d5 = rs("D5");
        let once = d5.weyl_reflect(&w, node).unwrap();
        prop_assert_eq!(once.0[node], -w.0[node]);
        prop_assert_eq!(d5.weyl_reflect(&once, node).unwrap(), w);
    }

    #[test]
    fn form_is_weyl_invariant(x in labels(4), y in labels(4), node in 0usize..4, pick in 0usize..5) {
        let r = rs(["D4", "C4", "B4", "F4", "A4"][pick]);
        let node = node % r.rank();
        let sx = r.weyl_reflect(&x, node).unwrap();
        let sy = r.weyl_reflect(&y, node).unwrap();
        prop_assert_eq!(r.inner_product_weights(&sx, &sy), r.inner_product_weights(&x, &y));
        prop_assert_eq!(r.inner_product_weights(&x, &y), r.inner_product_weights(&y, &x));
    }

    #[test]
    fn labels_commute_with_reflection(pick in 0usize..8, root_pick in 0usize..1000, node in 0usize..8) {
        let r = rs(DIAGRAMS[pick]);
        let roots = r.positive_roots();
        let alpha: &RootVector = &roots[root_pick % roots.len()];
        let node = node % r.rank();
        let lhs = r.root_to_labels(&r.reflect_root(alpha, node).unwrap());
        let rhs = r.weyl_reflect(&r.root_to_labels(alpha), node).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplicities_are_weyl_invariant(hw in prop::collection::vec(0i64..=2, 3), pick in 0usize..3) {
        let name = ["A3", "B3", "C3"][pick];
        let r = rs(name);
        let m = weight_system(&r, &WeightVector(hw.clone())).unwrap();
        prop_assert_eq!(m.multiplicity(&WeightVector(hw)), 1u32.into());
        for (w, mult) in &m.weights {
            for i in 0..3 {
                let s = r.weyl_reflect(w, i).unwrap();
                prop_assert_eq!(&m.multiplicity(&s), mult);
            }
            let coords = r.labels_to_root_coords(&m.highest.sub(w));
            prop_assert!(coords.iter().all(|c| c.is_integer() && !c.numer().sign().eq(&num_bigint::Sign::Minus)));
        }
        let total: num_bigint::BigUint = m.weights.values().sum();
        prop_assert_eq!(total, symext_core::irreps::weyl_dimension(&r, &m.highest).unwrap());
    }
}
