//! Irreducible highest-weight modules: Weyl dimension, Freudenthal
//! multiplicities, restriction to node-deletion subalgebras.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::rootsys::{CartanType, Component, RootSystem, RootVector, WeightVector};
use crate::{DynkinDiagram, Error, Result};

pub const DEFAULT_WEIGHT_CAP: usize = 100_000;

/// Weight multiset of an irreducible module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightModule {
    pub diagram: DynkinDiagram,
    pub highest: WeightVector,
    pub weights: BTreeMap<WeightVector, BigUint>,
}

impl HighestWeightModule {
    pub fn dimension(&self) -> BigUint {
        self.weights.values().sum()
    }

    pub fn multiplicity(&self, w: &WeightVector) -> BigUint {
        self.weights.get(w).cloned().unwrap_or_default()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.weights.values().all(|m| *m == BigUint::from(1u32))
    }
}

fn check_dominant(rs: &RootSystem, highest: &WeightVector) -> Result<()> {
    if highest.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), found: highest.len() });
    }
    if !rs.is_dominant(highest) {
        return Err(Error::NotDominant(highest.clone()));
    }
    Ok(())
}

/// `Π_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, highest: &WeightVector) -> Result<BigUint> {
    check_dominant(rs, highest)?;
    let form = rs.form();
    let shifted = highest.add(&rs.rho());
    let rho = rs.rho();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for alpha in rs.positive_roots() {
        num *= form.root_weight(alpha, &shifted);
        den *= form.root_weight(alpha, &rho);
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    Ok(quot.to_biguint().expect("dimension is positive"))
}

/// Dominant weights `μ ≤ λ`, each with the root coordinates of `λ − μ`,
/// ordered by the height of `λ − μ`.
fn dominant_weights_below(rs: &RootSystem, highest: &WeightVector) -> Vec<(WeightVector, RootVector)> {
    let n = rs.rank();
    let mut seen: BTreeSet<WeightVector> = BTreeSet::new();
    seen.insert(highest.clone());
    let mut out = vec![(highest.clone(), RootVector::zero(n))];
    let mut cursor = 0;
    while cursor < out.len() {
        let (mu, depth) = out[cursor].clone();
        cursor += 1;
        for alpha in rs.positive_roots() {
            let nu = mu.sub(&rs.root_to_labels(alpha));
            if rs.is_dominant(&nu) && seen.insert(nu.clone()) {
                out.push((nu, depth.add(alpha)));
            }
        }
    }
    out.sort_by(|a, b| a.1.height().cmp(&b.1.height()).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Freudenthal recursion on the dominant chamber, then Weyl-orbit
/// completion. Fails once more than `cap` distinct weights appear.
pub fn weight_system_capped(
    rs: &RootSystem,
    highest: &WeightVector,
    cap: usize,
) -> Result<HighestWeightModule> {
    check_dominant(rs, highest)?;
    let form = rs.form();
    let dominant = dominant_weights_below(rs, highest);
    if dominant.len() > cap {
        return Err(Error::WeightCapExceeded { cap });
    }

    // (λ+μ+2ρ, λ−μ) = Σ c_i d_i (l_λ + l_μ + 2)_i
    let halves: Vec<i64> = (0..rs.rank()).map(|i| rs.half_length(i)).collect();
    let mut mult: BTreeMap<WeightVector, BigInt> = BTreeMap::new();
    for (mu, depth) in &dominant {
        if depth.height() == 0 {
            mult.insert(mu.clone(), BigInt::from(1));
            continue;
        }
        let denom: i64 = (0..rs.rank())
            .map(|i| depth.0[i] * halves[i] * (highest.0[i] + mu.0[i] + 2))
            .sum();
        let mut num = BigInt::zero();
        for alpha in rs.positive_roots() {
            let alpha_labels = rs.root_to_labels(alpha);
            let alpha_sq = form.root_weight(alpha, &alpha_labels);
            let base = form.root_weight(alpha, mu);
            let mut k = 1i64;
            loop {
                let d = depth.sub(&alpha.scaled(k));
                if d.0.iter().any(|&c| c < 0) {
                    break;
                }
                let w = mu.add(&alpha_labels.scaled(k));
                let (dom, lift) = rs.dominant_representative(&w);
                let dom_depth = d.sub(&lift);
                if dom_depth.0.iter().all(|&c| c >= 0) {
                    if let Some(m) = mult.get(&dom) {
                        num += m * BigInt::from(base + k * alpha_sq);
                    }
                }
                k += 1;
            }
        }
        num *= 2;
        let (m, rem) = num.div_rem(&BigInt::from(denom));
        if !rem.is_zero() {
            return Err(Error::Precondition(format!("non-integral multiplicity at {mu}")));
        }
        if m > BigInt::zero() {
            mult.insert(mu.clone(), m);
        }
    }

    let mut weights = BTreeMap::new();
    for (mu, m) in mult {
        let m = m.to_biguint().expect("positive");
        for w in orbit_capped(rs, &mu, cap)? {
            weights.insert(w, m.clone());
            if weights.len() > cap {
                return Err(Error::WeightCapExceeded { cap });
            }
        }
    }
    Ok(HighestWeightModule { diagram: rs.diagram().clone(), highest: highest.clone(), weights })
}

pub fn weight_system(rs: &RootSystem, highest: &WeightVector) -> Result<HighestWeightModule> {
    weight_system_capped(rs, highest, DEFAULT_WEIGHT_CAP)
}

fn orbit_capped(rs: &RootSystem, w: &WeightVector, cap: usize) -> Result<BTreeSet<WeightVector>> {
    let mut seen = BTreeSet::new();
    seen.insert(w.clone());
    let mut stack = vec![w.clone()];
    while let Some(v) = stack.pop() {
        for i in 0..rs.rank() {
            if v.0[i] == 0 {
                continue;
            }
            let r = rs.weyl_reflect(&v, i)?;
            if seen.insert(r.clone()) {
                if seen.len() > cap {
                    return Err(Error::WeightCapExceeded { cap });
                }
                stack.push(r);
            }
        }
    }
    Ok(seen)
}

/// Keep the Dynkin labels at `retained` (in that order), drop the rest.
pub fn restrict_weight(w: &WeightVector, retained: &[usize]) -> Result<WeightVector> {
    let mut out = Vec::with_capacity(retained.len());
    let mut seen = BTreeSet::new();
    for &i in retained {
        if i >= w.len() {
            return Err(Error::NodeOutOfRange { node: i, rank: w.len() });
        }
        if !seen.insert(i) {
            return Err(Error::Precondition(format!("node {} retained twice", i + 1)));
        }
        out.push(w.0[i]);
    }
    Ok(WeightVector(out))
}

/// Doubled ε-coordinates `2ε` of a weight of `B_n` or `D_n` given by labels.
pub fn epsilon_coordinates_doubled(c: Component, labels: &[i64]) -> Result<Vec<i64>> {
    let n = c.rank;
    if labels.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: labels.len() });
    }
    let mut out = vec![0i64; n];
    let mut add = |upto: usize, coeff: i64, sign_last: i64| {
        for (k, e) in out.iter_mut().enumerate().take(upto) {
            *e += if k + 1 == n { coeff * sign_last } else { coeff };
        }
    };
    match c.kind {
        CartanType::B => {
            for (i, &l) in labels.iter().enumerate() {
                if i + 1 < n {
                    add(i + 1, 2 * l, 1);
                } else {
                    add(n, l, 1);
                }
            }
        }
        CartanType::D if n >= 3 => {
            for (i, &l) in labels.iter().enumerate() {
                if i + 2 < n {
                    add(i + 1, 2 * l, 1);
                } else if i + 2 == n {
                    add(n, l, -1);
                } else {
                    add(n, l, 1);
                }
            }
        }
        _ => return Err(Error::Precondition(format!("no ε-coordinates for {c}"))),
    }
    Ok(out)
}

/// Dimension as a machine integer, for desk-scale callers.
pub fn dimension_usize(m: &HighestWeightModule) -> Option<usize> {
    m.dimension().to_usize()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap())
    }

    fn w(v: &[i64]) -> WeightVector {
        WeightVector(v.to_vec())
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dimension(&rs("A1"), &w(&[2])).unwrap(), BigUint::from(3u32));
        assert_eq!(weyl_dimension(&rs("D5"), &w(&[0, 0, 0, 0, 1])).unwrap(), BigUint::from(16u32));
        assert_eq!(weyl_dimension(&rs("E6"), &w(&[1, 0, 0, 0, 0, 0])).unwrap(), BigUint::from(27u32));
        assert_eq!(weyl_dimension(&rs("E8"), &w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), BigUint::from(248u32));
        assert_eq!(weyl_dimension(&rs("G2"), &w(&[1, 0])).unwrap(), BigUint::from(7u32));
        assert!(weyl_dimension(&rs("A2"), &w(&[1, -1])).is_err());
    }

    #[test]
    fn a1_strings() {
        let m = weight_system(&rs("A1"), &w(&[3])).unwrap();
        let got: Vec<i64> = m.weights.keys().map(|k| k.0[0]).collect();
        assert_eq!(got, vec![-3, -1, 1, 3]);
        assert!(m.is_multiplicity_free());
    }

    #[test]
    fn a2_adjoint() {
        let m = weight_system(&rs("A2"), &w(&[1, 1])).unwrap();
        assert_eq!(m.weights.len(), 7);
        assert_eq!(m.multiplicity(&w(&[0, 0])), BigUint::from(2u32));
        assert_eq!(m.dimension(), BigUint::from(8u32));
    }

    #[test]
    fn cap_is_enforced() {
        let r = weight_system_capped(&rs("E8"), &w(&[0, 0, 0, 0, 0, 0, 0, 1]), 50);
        assert!(matches!(r, Err(Error::WeightCapExceeded { cap: 50 })));
    }

    #[test]
    fn restriction() {
        let r = rs("C3");
        let theta = r.root_to_labels(&r.highest_root().unwrap());
        assert_eq!(restrict_weight(&theta, &[0, 1]).unwrap(), w(&[2, 0]));
        assert_eq!(restrict_weight(&theta, &[0, 1, 2]).unwrap(), theta);
        assert!(restrict_weight(&theta, &[3]).is_err());
    }

    #[test]
    fn epsilon_view() {
        let d5 = Component::new(CartanType::D, 5).unwrap();
        assert_eq!(epsilon_coordinates_doubled(d5, &[0, 0, 0, 0, 1]).unwrap(), vec![1; 5]);
        assert_eq!(epsilon_coordinates_doubled(d5, &[0, 0, 0, 1, 0]).unwrap(), vec![1, 1, 1, 1, -1]);
        assert_eq!(epsilon_coordinates_doubled(d5, &[1, 0, 0, 0, 0]).unwrap(), vec![2, 0, 0, 0, 0]);
        let b3 = Component::new(CartanType::B, 3).unwrap();
        assert_eq!(epsilon_coordinates_doubled(b3, &[0, 1, 0]).unwrap(), vec![2, 2, 0]);
    }
}
