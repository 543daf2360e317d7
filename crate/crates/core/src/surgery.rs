//! Node deletion: from a defining quadruple `(Δ, α₀)` build the graded
//! `g̃`-module `V = V₀ ⊕ V₁ ⊕ V₂`, where `g̃` is the algebra of `Δ ∖ {α₀}`.
//!
//! The weights of `V` are the restrictions of the roots `−α` for the
//! positive roots `α` with `n₀(α) = 1`. The highest weight is `−α₀|`, and
//! `−α|` sits in grade `Σᵢ n_{α₀^i}(α)`, summed over the neighbours `α₀^i` of
//! `α₀`. This is the coefficient of `α̃₀^i` in `ω̃₀ − ω̃`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::catalog::{self, RowRef};
use crate::classify::{canonical_module, CanonicalModule, SubDiagram};
use crate::irreps::{restrict_weight, weight_system};
use crate::rootsys::{Component, RootSystem, RootVector, WeightVector};
use crate::triples::{isotropy_split, make_canonical_quadruple, DefiningQuadruple};
use crate::{DynkinDiagram, Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedWeight {
    pub labels: WeightVector,
    pub grade: i64,
    /// The positive root `α` of the source with `labels = −α|`.
    pub source_root: RootVector,
}

/// `V = V₀ ⊕ V₁ ⊕ V₂` as a graded, multiplicity-free weight list, sorted by
/// labels.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub sub: SubDiagram,
    pub highest: WeightVector,
    pub weights: Vec<GradedWeight>,
}

impl GradedModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `N = dim V − 1`.
    pub fn n(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn grade_of(&self, w: &WeightVector) -> Option<i64> {
        self.weights.iter().find(|g| &g.labels == w).map(|g| g.grade)
    }

    pub fn of_grade(&self, j: i64) -> impl Iterator<Item = &GradedWeight> {
        self.weights.iter().filter(move |g| g.grade == j)
    }
}

/// One simple factor `(Δ̃_i, α̃₀^i, r_i)` of `g̃`. `r_i` is fixed to 1.
#[derive(Clone, Debug)]
pub struct ComponentQuadruple {
    pub component: Component,
    /// Index of the factor within the sub-diagram.
    pub index: usize,
    /// Sub-diagram index of the node joined to `α₀`.
    pub distinguished: usize,
    pub r: Rational,
}

#[derive(Clone, Debug)]
pub struct SurgeryResult {
    pub source: DynkinDiagram,
    /// 0-based node `α₀` of the source.
    pub node: usize,
    pub module: GradedModule,
    pub components: Vec<ComponentQuadruple>,
}

pub fn dynkin_surgery(q: &DefiningQuadruple) -> Result<SurgeryResult> {
    let rs = q.roots();
    let node = q.node();
    let split = isotropy_split(q)?;
    let sub = split.sub.clone();
    let retained = &sub.parent_nodes;

    let highest = restrict_weight(&rs.root_to_labels(&rs.simple_root(node)).neg(), retained)?;
    let mut weights: Vec<GradedWeight> = rs
        .positive_roots()
        .iter()
        .filter(|a| a.0[node] == 1)
        .map(|a| {
            let labels = restrict_weight(&rs.root_to_labels(a).neg(), retained)?;
            let grade = split.neighbor_nodes.iter().map(|&nb| a.0[nb]).sum();
            Ok(GradedWeight { labels, grade, source_root: a.clone() })
        })
        .collect::<Result<_>>()?;
    weights.sort_by(|x, y| x.labels.cmp(&y.labels));

    let grade0: Vec<&GradedWeight> = weights.iter().filter(|g| g.grade == 0).collect();
    if grade0.len() != 1 || grade0[0].labels != highest {
        return Err(Error::Precondition(format!(
            "grade 0 holds {} weights, expected only the highest",
            grade0.len()
        )));
    }
    if let Some(g) = weights.iter().find(|g| !(0..=2).contains(&g.grade)) {
        return Err(Error::Precondition(format!("weight {} has grade {}", g.labels, g.grade)));
    }

    let sub_rs = RootSystem::new(&sub.diagram);
    let expected = weight_system(&sub_rs, &highest)?;
    let mut got: BTreeMap<WeightVector, BigUint> = BTreeMap::new();
    for g in &weights {
        *got.entry(g.labels.clone()).or_insert_with(BigUint::zero) += BigUint::one();
    }
    if got != expected.weights {
        return Err(Error::NotIrreducible { highest });
    }

    let mut components = Vec::new();
    let offsets = sub.diagram.offsets();
    for (index, &component) in sub.diagram.components().iter().enumerate() {
        let range = offsets[index]..offsets[index] + component.rank;
        let joined: Vec<usize> = range
            .filter(|&k| split.neighbor_nodes.contains(&sub.parent_nodes[k]))
            .collect();
        if joined.len() != 1 {
            return Err(Error::Precondition(format!(
                "factor {component} meets α₀ in {} nodes",
                joined.len()
            )));
        }
        components.push(ComponentQuadruple {
            component,
            index,
            distinguished: joined[0],
            r: Rational::one(),
        });
    }

    Ok(SurgeryResult {
        source: q.diagram().clone(),
        node,
        module: GradedModule { sub, highest, weights },
        components,
    })
}

/// Surgery on `(diagram, 0-based node)` with `r = 1`.
pub fn surgery(diagram: &DynkinDiagram, node: usize) -> Result<SurgeryResult> {
    dynkin_surgery(&make_canonical_quadruple(diagram, node)?)
}

/// `(|S₀|, |S₁|, |S₂|)`.
pub fn grade_census(result: &SurgeryResult) -> (usize, usize, usize) {
    let m = &result.module;
    (m.of_grade(0).count(), m.of_grade(1).count(), m.of_grade(2).count())
}

/// Grades in `{0, 1, 2}` solving `(ω̃ − ω̃₀ + jα̃₀, ω̃₀) = 0`, with the form
/// normalised so that short roots have squared length 2.
pub fn pairing_solutions(result: &SurgeryResult, w: &WeightVector) -> Result<Vec<i64>> {
    if result.components.len() != 1 {
        return Err(Error::Precondition("pairing grade needs a simple g̃".to_string()));
    }
    let m = &result.module;
    let rs = RootSystem::new(&m.sub.diagram);
    let alpha = rs.root_to_labels(&rs.simple_root(result.components[0].distinguished));
    let top = &m.highest;
    let a = rs.inner_product_weights(&w.sub(top), top);
    let b = rs.inner_product_weights(&alpha, top);
    Ok((0..=2).filter(|&j| a.clone() + b.clone() * Rational::from_integer(j.into()) == Rational::zero()).collect())
}

/// Every weight of `V` with its unique pairing grade; errors on the first
/// weight where the solution is missing or not unique.
pub fn pairing_partition(result: &SurgeryResult) -> Result<Vec<(WeightVector, i64)>> {
    result
        .module
        .weights
        .iter()
        .map(|g| {
            let sols = pairing_solutions(result, &g.labels)?;
            match sols.as_slice() {
                [j] => Ok((g.labels.clone(), *j)),
                _ => Err(Error::AmbiguousGrade { weight: g.labels.clone(), solutions: sols }),
            }
        })
        .collect()
}

/// Weights where the pairing grade differs from the coefficient grade,
/// with the pairing solutions found.
pub fn pairing_disagreements(result: &SurgeryResult) -> Result<Vec<(WeightVector, i64, Vec<i64>)>> {
    let mut out = Vec::new();
    for g in &result.module.weights {
        let sols = pairing_solutions(result, &g.labels)?;
        if sols.as_slice() != [g.grade] {
            out.push((g.labels.clone(), g.grade, sols));
        }
    }
    Ok(out)
}

/// The isomorphism class of `V` as a `g̃`-module.
pub fn canonical_form(result: &SurgeryResult) -> CanonicalModule {
    canonical_module(&result.module.sub.diagram, result.module.highest.as_slice())
}

/// `V₂ = 0`: the embedding is totally geodesic and has no table row.
pub fn is_totally_geodesic(result: &SurgeryResult) -> bool {
    result.module.of_grade(2).next().is_none()
}

/// The unique table row whose `g̃`, `V` and `N` match.
pub fn identify_catalog_row(result: &SurgeryResult) -> Result<RowRef> {
    let form = canonical_form(result);
    let n = result.module.n();
    let hits: Vec<RowRef> = catalog::candidate_rows(&result.module.sub.diagram)
        .into_iter()
        .filter(|row| catalog::row_module(row).map(|m| m == form).unwrap_or(false))
        .filter(|row| catalog::catalog_n(row) == n)
        .collect();
    match hits.len() {
        0 => Err(Error::NoCatalogMatch),
        1 => Ok(hits[0]),
        _ => Err(Error::MultipleCatalogMatches(hits.iter().map(|r| r.to_string()).collect())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn run(diagram: &str, node: usize) -> SurgeryResult {
        surgery(&diagram.parse().unwrap(), node - 1).unwrap()
    }

    #[test]
    fn sym2_from_c() {
        for n in 1..=5usize {
            let res = run(&format!("C{}", n + 1), n + 1);
            assert_eq!(res.module.sub.diagram.components()[0], Component::new(CartanType::A, n).unwrap());
            assert_eq!(res.module.n(), (n * n + 3 * n) / 2);
            assert_eq!(grade_census(&res), (1, n, n * (n + 1) / 2));
        }
    }

    #[test]
    fn exceptional_rows() {
        let e7 = run("E7", 7);
        assert_eq!(e7.module.dim(), 27);
        assert_eq!(grade_census(&e7), (1, 16, 10));
        let e6 = run("E6", 1);
        assert_eq!(e6.module.dim(), 16);
        assert_eq!(grade_census(&e6), (1, 10, 5));
    }

    #[test]
    fn tensor_from_a() {
        let res = run("A5", 3);
        assert_eq!(res.components.len(), 2);
        assert_eq!(res.module.dim(), 9);
        assert_eq!(grade_census(&res), (1, 4, 4));
    }

    #[test]
    fn dual_of_restricted_highest_root() {
        let d: DynkinDiagram = "C4".parse().unwrap();
        let res = surgery(&d, 3).unwrap();
        let rs = RootSystem::new(&d);
        let theta = restrict_weight(&rs.root_to_labels(&rs.highest_root().unwrap()), &res.module.sub.parent_nodes).unwrap();
        let lowest = res.module.weights.iter().find(|g| g.grade == 2 && g.labels == theta.neg());
        assert!(lowest.is_some());
    }

    #[test]
    fn pairing_matches_coefficients() {
        for (d, node) in [("E7", 7), ("D6", 6), ("C4", 4), ("B4", 1), ("E6", 1)] {
            let res = run(d, node);
            assert!(pairing_disagreements(&res).unwrap().is_empty(), "{d} {node}");
            let part = pairing_partition(&res).unwrap();
            assert_eq!(part.iter().find(|(w, _)| *w == res.module.highest).unwrap().1, 0);
        }
        assert!(pairing_solutions(&run("A5", 3), &WeightVector(alloc::vec![0; 4])).is_err());
    }

    #[test]
    fn identification() {
        assert_eq!(identify_catalog_row(&run("C4", 4)).unwrap(), RowRef::Sym2 { n: 3 });
        assert_eq!(identify_catalog_row(&run("D6", 6)).unwrap(), RowRef::Wedge2 { n: 5 });
        assert_eq!(identify_catalog_row(&run("B4", 1)).unwrap(), RowRef::Standard { n: 6 });
        assert_eq!(identify_catalog_row(&run("E6", 6)).unwrap(), RowRef::Halfspin);
        assert_eq!(identify_catalog_row(&run("E7", 7)).unwrap(), RowRef::E6TwentySeven);
        assert_eq!(identify_catalog_row(&run("A6", 3)).unwrap(), RowRef::Tensor { a: 2, b: 3 });
        let end = run("A4", 1);
        assert!(is_totally_geodesic(&end));
        assert!(matches!(identify_catalog_row(&end), Err(Error::NoCatalogMatch)));
    }
}
