//! Simple symplectic symmetric triples at the level of roots: cominuscule
//! nodes, defining quadruples `(Δ, α₀, r)`, and the grading of the roots by
//! the coefficient `n₀` of `α₀`.

use alloc::vec::Vec;

use num_traits::One;

use crate::classify::{induced_subdiagram, SubDiagram};
use crate::rootsys::{root_coefficient, RootSystem};
use crate::{DynkinDiagram, Error, Rational, Result};

/// Nodes whose coefficient in the highest root is 1.
pub fn admissible_nodes(rs: &RootSystem) -> Result<Vec<usize>> {
    let theta = rs.highest_root()?;
    Ok((0..rs.rank()).filter(|&i| theta.0[i] == 1).collect())
}

/// A validated `(Δ, α₀, r)`; `node` is 0-based.
#[derive(Clone, Debug)]
pub struct DefiningQuadruple {
    roots: RootSystem,
    node: usize,
    r: Rational,
}

impl DefiningQuadruple {
    pub fn diagram(&self) -> &DynkinDiagram {
        self.roots.diagram()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }
}

/// Fails with the first positive root whose `α₀`-coefficient exceeds 1.
pub fn make_quadruple(diagram: &DynkinDiagram, node: usize, r: Rational) -> Result<DefiningQuadruple> {
    if !diagram.is_connected() {
        return Err(Error::Disconnected);
    }
    let roots = RootSystem::new(diagram);
    if node >= roots.rank() {
        return Err(Error::NodeOutOfRange { node, rank: roots.rank() });
    }
    for alpha in roots.positive_roots() {
        let c = root_coefficient(alpha, node)?;
        if c > 1 {
            return Err(Error::Inadmissible { node, witness: alpha.clone(), coefficient: c });
        }
    }
    Ok(DefiningQuadruple { roots, node, r })
}

pub fn make_canonical_quadruple(diagram: &DynkinDiagram, node: usize) -> Result<DefiningQuadruple> {
    make_quadruple(diagram, node, Rational::one())
}

/// `h = K·h_{α₀} ⊕ s`: the diagram of `s` and the neighbours of `α₀`.
#[derive(Clone, Debug)]
pub struct IsotropySplit {
    pub center_node: usize,
    pub sub: SubDiagram,
    /// Parent indices of the nodes joined to `α₀`.
    pub neighbor_nodes: Vec<usize>,
}

pub fn isotropy_split(q: &DefiningQuadruple) -> Result<IsotropySplit> {
    let n = q.roots.rank();
    let retained: Vec<usize> = (0..n).filter(|&i| i != q.node).collect();
    let sub = induced_subdiagram(q.diagram(), &retained)?;
    Ok(IsotropySplit {
        center_node: q.node,
        sub,
        neighbor_nodes: q.diagram().neighbors(q.node),
    })
}

/// `(dim h, dim p)`.
pub fn grading_dims(q: &DefiningQuadruple) -> (usize, usize) {
    let ones = q.roots.positive_roots().iter().filter(|a| a.0[q.node] == 1).count();
    let zeros = q.roots.positive_roots().len() - ones;
    (q.roots.rank() + 2 * zeros, 2 * ones)
}
