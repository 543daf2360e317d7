//! Matrix realizations `ρ : g̃ → sl(V)` on weight bases of `V = V₀ ⊕ V₁ ⊕ V₂`,
//! with `σ = Ad(I_{V₀, V₁⊕V₂})` and `θ = Ad(I_{V₀⊕V₂, V₁})`.
//!
//! The basis is always ordered `V₀`, then `V₁`, then `V₂`, and `V₀` is the
//! line of the highest weight vector (index 0).
//!
//! Block names, with `p`/`h` the `σ`-odd/even parts of `sl(V)` and `±` the
//! `θ`-parity: `p₋` maps between `V₀` and `V₁`, `p₊` between `V₀` and `V₂`,
//! `h₋` between `V₁` and `V₂`, and `h₊` is block diagonal.

mod checks;
mod families;

use alloc::vec::Vec;
use core::fmt;


use crate::catalog::RowRef;
use crate::linalg::{q, Matrix};
use crate::{DynkinDiagram, Error, Rational, Result};

pub use checks::{
    bracket_closure_check, common_csa_check, extract_lambda, full_check, gauss_equation_check,
    grading_check, lie_closure, parity_check, printed_theta_stabilizes, symplectic_form_check,
    tilde_closure_check, LambdaMap, Subspace,
};
pub use families::build_realization;

/// Families with an explicit matrix model.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealizeFamily {
    Sym2 { n: usize },
    Wedge2 { n: usize },
    /// `so(n+1)` on `C^{n+1}`.
    StandardSo { n: usize },
    Tensor { a: usize, b: usize },
    HalfspinD5,
}

/// Largest `dim V` accepted by the builders.
pub const MAX_DIM: usize = 200;

impl RealizeFamily {
    /// Parse `sym2 3`, `wedge2 5`, `standard-so 6`, `tensor 1 2`, `halfspin-d5`.
    pub fn parse(name: &str, params: &[usize]) -> Result<RealizeFamily> {
        let fam = match (name.to_ascii_lowercase().as_str(), params) {
            ("sym2", &[n]) => RealizeFamily::Sym2 { n },
            ("wedge2", &[n]) => RealizeFamily::Wedge2 { n },
            ("standard-so" | "standard", &[n]) => RealizeFamily::StandardSo { n },
            ("tensor", &[a, b]) => RealizeFamily::Tensor { a, b },
            ("halfspin-d5" | "halfspin", &[]) => RealizeFamily::HalfspinD5,
            (other, _) => {
                return Err(Error::UnsupportedFamily(alloc::format!(
                    "{other} with {} parameter(s)",
                    params.len()
                )))
            }
        };
        fam.row()?;
        Ok(fam)
    }

    /// The table row realized, with the table's parameter conditions.
    pub fn row(self) -> Result<RowRef> {
        use crate::catalog::Family;
        match self {
            RealizeFamily::Sym2 { n } => RowRef::new(Family::Sym2, &[n]),
            RealizeFamily::Wedge2 { n } => RowRef::new(Family::Wedge2, &[n]),
            RealizeFamily::StandardSo { n } => RowRef::new(Family::Standard, &[n]),
            RealizeFamily::Tensor { a, b } => RowRef::new(Family::Tensor, &[a, b]),
            RealizeFamily::HalfspinD5 => Ok(RowRef::Halfspin),
        }
    }
}

impl fmt::Display for RealizeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizeFamily::Sym2 { n } => write!(f, "sym2({n})"),
            RealizeFamily::Wedge2 { n } => write!(f, "wedge2({n})"),
            RealizeFamily::StandardSo { n } => write!(f, "standard-so({n})"),
            RealizeFamily::Tensor { a, b } => write!(f, "tensor({a},{b})"),
            RealizeFamily::HalfspinD5 => f.write_str("halfspin-d5"),
        }
    }
}

/// `ρ` on Chevalley generators plus the block data of `V`.
#[derive(Clone, Debug)]
pub struct ConcreteQuintuple {
    pub family: RealizeFamily,
    pub diagram: DynkinDiagram,
    /// Nodes `α̃₀^i` of `g̃` joined to the deleted node, one per factor.
    pub distinguished: Vec<usize>,
    /// `(dim V₀, dim V₁, dim V₂)`.
    pub dims: [usize; 3],
    pub e: Vec<Matrix>,
    pub f: Vec<Matrix>,
    pub h: Vec<Matrix>,
    pub r: Rational,
}

impl ConcreteQuintuple {
    pub fn size(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `N = dim V − 1`.
    pub fn n(&self) -> usize {
        self.size() - 1
    }

    pub fn grade(&self, index: usize) -> usize {
        if index < self.dims[0] {
            0
        } else if index < self.dims[0] + self.dims[1] {
            1
        } else {
            2
        }
    }

    pub fn v1(&self) -> core::ops::Range<usize> {
        self.dims[0]..self.dims[0] + self.dims[1]
    }

    pub fn v2(&self) -> core::ops::Range<usize> {
        self.dims[0] + self.dims[1]..self.size()
    }

    /// Diagonal of `I_{V₀, V₁⊕V₂}`.
    pub fn sigma(&self) -> Vec<i64> {
        (0..self.size()).map(|i| if self.grade(i) == 0 { 1 } else { -1 }).collect()
    }

    /// Diagonal of `I_{V₀⊕V₂, V₁}`.
    pub fn theta(&self) -> Vec<i64> {
        (0..self.size()).map(|i| if self.grade(i) == 1 { -1 } else { 1 }).collect()
    }

    /// Diagonal of `I_{V₀⊕V₁, V₂}`.
    pub fn printed_theta(&self) -> Vec<i64> {
        (0..self.size()).map(|i| if self.grade(i) == 2 { -1 } else { 1 }).collect()
    }

    /// `Z = r/(N+1) · diag(N, −1, …, −1)`, so `[Z, X] = r·X` on `V₀ ← V_{>0}` blocks.
    pub fn z(&self) -> Matrix {
        self.z_with(&self.r)
    }

    pub fn z_with(&self, r: &Rational) -> Matrix {
        let n = self.n() as i64;
        let scale = r / q(n + 1);
        let entries: Vec<Rational> = (0..self.size())
            .map(|i| if i == 0 { q(n) * &scale } else { -scale.clone() })
            .collect();
        Matrix::diagonal(&entries)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Matrix> {
        self.e.iter().chain(&self.f).chain(&self.h)
    }

    pub fn with_r(mut self, r: Rational) -> Self {
        self.r = r;
        self
    }
}

/// `D M D` for a signed diagonal `D`.
pub fn conjugate_by_signs(m: &Matrix, signs: &[i64]) -> Matrix {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        if signs[i] * signs[j] < 0 {
            -m[(i, j)].clone()
        } else {
            m[(i, j)].clone()
        }
    })
}
