use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{ConcreteQuintuple, RealizeFamily, MAX_DIM};
use crate::linalg::{q, Matrix};
use crate::rootsys::{CartanType, Component};
use crate::{DynkinDiagram, Error, Rational, Result};

/// Generators on some weight basis, before normalisation and reordering.
struct Model {
    diagram: DynkinDiagram,
    distinguished: Vec<usize>,
    grades: Vec<usize>,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
}

pub fn build_realization(family: RealizeFamily) -> Result<ConcreteQuintuple> {
    family.row()?;
    let dim = match family {
        RealizeFamily::Sym2 { n } => (n + 1) * (n + 2) / 2,
        RealizeFamily::Wedge2 { n } => (n + 1) * n / 2,
        RealizeFamily::StandardSo { n } => n + 1,
        RealizeFamily::Tensor { a, b } => (a + 1) * (b + 1),
        RealizeFamily::HalfspinD5 => 16,
    };
    if dim > MAX_DIM {
        return Err(Error::ParameterOutOfRange(format!("{family}: dim V = {dim} exceeds {MAX_DIM}")));
    }
    let model = match family {
        RealizeFamily::Sym2 { n } => sym2(n)?,
        RealizeFamily::Wedge2 { n } => wedge2(n)?,
        RealizeFamily::StandardSo { n } => standard_so(n)?,
        RealizeFamily::Tensor { a, b } => tensor(a, b)?,
        RealizeFamily::HalfspinD5 => halfspin()?,
    };
    finish(family, model)
}

/// Rescale `f` so that `h = [e, f]` satisfies `[h, e] = 2e`, then order the
/// basis by grade.
fn finish(family: RealizeFamily, model: Model) -> Result<ConcreteQuintuple> {
    let mut e_out = Vec::new();
    let mut f_out = Vec::new();
    let mut h_out = Vec::new();
    for (i, (e, f)) in model.e.iter().zip(&model.f).enumerate() {
        let h = e.bracket(f);
        let he = h.bracket(e);
        let (r, c, x) = e
            .nonzero_entries()
            .next()
            .map(|(r, c, x)| (r, c, x.clone()))
            .ok_or_else(|| Error::Precondition(format!("e_{} is zero", i + 1)))?;
        let c = &he[(r, c)] / x;
        if c.is_zero() || he != e.scale(&c) {
            return Err(Error::Precondition(format!("e_{}, f_{} do not span an sl2", i + 1, i + 1)));
        }
        let s = q(2) / c;
        e_out.push(e.clone());
        f_out.push(f.scale(&s));
        h_out.push(h.scale(&s));
    }

    let mut order: Vec<usize> = (0..model.grades.len()).collect();
    order.sort_by_key(|&i| (model.grades[i], i));
    let reorder = |m: &Matrix| Matrix::from_fn(m.rows(), m.cols(), |i, j| m[(order[i], order[j])].clone());
    let mut dims = [0usize; 3];
    for &g in &model.grades {
        if g > 2 {
            return Err(Error::Precondition(format!("basis vector of grade {g}")));
        }
        dims[g] += 1;
    }
    if dims[0] != 1 {
        return Err(Error::Precondition(format!("V0 has dimension {}", dims[0])));
    }
    Ok(ConcreteQuintuple {
        family,
        diagram: model.diagram,
        distinguished: model.distinguished,
        dims,
        e: e_out.iter().map(reorder).collect(),
        f: f_out.iter().map(reorder).collect(),
        h: h_out.iter().map(reorder).collect(),
        r: Rational::one(),
    })
}

fn simple(kind: CartanType, rank: usize) -> Result<DynkinDiagram> {
    DynkinDiagram::simple(kind, rank)
}

/// Chevalley generators of `sl(n+1)` on `C^{n+1}`: `e_k = E_{k−1,k}`.
fn sl_generators(n: usize) -> (Vec<Matrix>, Vec<Matrix>) {
    let e = (1..=n).map(|k| Matrix::unit(n + 1, k - 1, k)).collect();
    let f = (1..=n).map(|k| Matrix::unit(n + 1, k, k - 1)).collect();
    (e, f)
}

/// Pairs `(i, j)` with `i ≤ j` (or `i < j` when `strict`), lexicographic.
fn pairs(d: usize, strict: bool) -> Vec<(usize, usize)> {
    (0..d)
        .flat_map(|i| (if strict { i + 1 } else { i }..d).map(move |j| (i, j)))
        .collect()
}

/// Derivation action of `x` on `S²` (monomials `e_i e_j`).
fn sym2_action(x: &Matrix, basis: &[(usize, usize)]) -> Matrix {
    let idx = |i: usize, j: usize| basis.iter().position(|&p| p == (i.min(j), i.max(j))).expect("pair");
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (col, &(i, j)) in basis.iter().enumerate() {
        for (k, _, v) in x.nonzero_entries().filter(|&(_, c, _)| c == i) {
            out[(idx(k, j), col)] += v;
        }
        for (k, _, v) in x.nonzero_entries().filter(|&(_, c, _)| c == j) {
            out[(idx(i, k), col)] += v;
        }
    }
    out
}

/// Derivation action of `x` on `Λ²` (`e_i ∧ e_j`, `i < j`).
fn wedge2_action(x: &Matrix, basis: &[(usize, usize)]) -> Matrix {
    let idx = |i: usize, j: usize| basis.iter().position(|&p| p == (i, j)).expect("pair");
    let mut out = Matrix::zeros(basis.len(), basis.len());
    let put = |out: &mut Matrix, a: usize, b: usize, col: usize, v: &Rational| {
        if a < b {
            out[(idx(a, b), col)] += v;
        } else if a > b {
            out[(idx(b, a), col)] -= v;
        }
    };
    for (col, &(i, j)) in basis.iter().enumerate() {
        for (k, _, v) in x.nonzero_entries().filter(|&(_, c, _)| c == i) {
            put(&mut out, k, j, col, v);
        }
        for (k, _, v) in x.nonzero_entries().filter(|&(_, c, _)| c == j) {
            put(&mut out, i, k, col, v);
        }
    }
    out
}

fn sym2(n: usize) -> Result<Model> {
    let basis = pairs(n + 1, false);
    let (e, f) = sl_generators(n);
    Ok(Model {
        diagram: simple(CartanType::A, n)?,
        distinguished: vec![0],
        grades: basis.iter().map(|&(i, j)| usize::from(i > 0) + usize::from(j > 0)).collect(),
        e: e.iter().map(|x| sym2_action(x, &basis)).collect(),
        f: f.iter().map(|x| sym2_action(x, &basis)).collect(),
    })
}

fn wedge2(n: usize) -> Result<Model> {
    let basis = pairs(n + 1, true);
    let (e, f) = sl_generators(n);
    Ok(Model {
        diagram: simple(CartanType::A, n)?,
        distinguished: vec![1],
        grades: basis.iter().map(|&(i, j)| usize::from(i >= 2) + usize::from(j >= 2)).collect(),
        e: e.iter().map(|x| wedge2_action(x, &basis)).collect(),
        f: f.iter().map(|x| wedge2_action(x, &basis)).collect(),
    })
}

/// Split `so(n+1)`: the form is the antidiagonal `J`, root vectors are
/// `E_{ab} − E_{b̄ā}` with `ā = n − a`. Basis `ε₁, …, −ε₁`.
fn standard_so(n: usize) -> Result<Model> {
    let d = n + 1;
    let bar = |a: usize| d - 1 - a;
    let root = |a: usize, b: usize| Matrix::unit(d, a, b).sub(&Matrix::unit(d, bar(b), bar(a)));
    let (kind, m) = if d % 2 == 1 { (CartanType::B, d / 2) } else { (CartanType::D, d / 2) };
    let mut e: Vec<Matrix> = (1..m).map(|k| root(k - 1, k)).collect();
    match kind {
        CartanType::B => e.push(root(m - 1, m)),
        _ => e.push(root(m - 2, m)),
    }
    // so(6) = sl(4): the middle node of A3 is α₁.
    let (diagram, distinguished) = if kind == CartanType::D && m == 3 {
        e.swap(0, 1);
        (simple(CartanType::A, 3)?, vec![1])
    } else {
        (DynkinDiagram::new(vec![Component::new(kind, m)?]), vec![0])
    };
    let f = e.iter().map(Matrix::transpose).collect();
    let grades = (0..d).map(|i| if i == 0 { 0 } else if i == d - 1 { 2 } else { 1 }).collect();
    Ok(Model {
        diagram,
        distinguished,
        grades,
        e,
        f,
    })
}

fn kron(x: &Matrix, y: &Matrix) -> Matrix {
    let (p, s) = (x.rows(), y.rows());
    Matrix::from_fn(p * s, p * s, |r, c| {
        let a = &x[(r / s, c / s)];
        let b = &y[(r % s, c % s)];
        if a.is_zero() || b.is_zero() {
            Rational::zero()
        } else {
            a * b
        }
    })
}

fn tensor(a: usize, b: usize) -> Result<Model> {
    let (e1, f1) = sl_generators(a);
    let (e2, f2) = sl_generators(b);
    let (i1, i2) = (Matrix::identity(a + 1), Matrix::identity(b + 1));
    let lift = |xs: &[Matrix], ys: &[Matrix]| -> Vec<Matrix> {
        xs.iter().map(|x| kron(x, &i2)).chain(ys.iter().map(|y| kron(&i1, y))).collect()
    };
    let grades = (0..(a + 1) * (b + 1))
        .map(|k| usize::from(k / (b + 1) > 0) + usize::from(k % (b + 1) > 0))
        .collect();
    Ok(Model {
        diagram: DynkinDiagram::new(vec![Component::new(CartanType::A, a)?, Component::new(CartanType::A, b)?]),
        distinguished: vec![0, a],
        grades,
        e: lift(&e1, &e2),
        f: lift(&f1, &f2),
    })
}

/// Odd exterior powers of `E = C⁵`, basis vectors as bit masks.
#[derive(Copy, Clone)]
enum Fermion {
    Wedge(u32),
    Contract(u32),
}

fn apply_fermion(op: Fermion, mask: u32) -> Option<(i64, u32)> {
    let (i, present) = match op {
        Fermion::Wedge(i) => (i, false),
        Fermion::Contract(i) => (i, true),
    };
    let bit = 1u32 << i;
    if (mask & bit != 0) != present {
        return None;
    }
    let sign = if (mask & (bit - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
    Some((sign, mask ^ bit))
}

/// Matrix of a product of fermion operators, rightmost applied first.
fn fermion_matrix(ops: &[Fermion], basis: &[u32]) -> Matrix {
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (col, &m) in basis.iter().enumerate() {
        let mut state = Some((1i64, m));
        for &op in ops.iter().rev() {
            state = state.and_then(|(s, m)| apply_fermion(op, m).map(|(t, m2)| (s * t, m2)));
        }
        if let Some((s, target)) = state {
            let row = basis.iter().position(|&b| b == target).expect("odd subsets are closed");
            out[(row, col)] = q(s);
        }
    }
    out
}

/// `D5` on `Λ⁵E ⊕ Λ³E ⊕ E`: `e_i = ε_i ι_{i+1}` for `i ≤ 4`, `e_5 = ε_4 ε_5`.
fn halfspin() -> Result<Model> {
    let mut basis: Vec<u32> = (0u32..32).filter(|m| m.count_ones() % 2 == 1).collect();
    basis.sort_by_key(|m| (core::cmp::Reverse(m.count_ones()), *m));
    use Fermion::*;
    let mut e: Vec<Matrix> = (0..4).map(|i| fermion_matrix(&[Wedge(i), Contract(i + 1)], &basis)).collect();
    let mut f: Vec<Matrix> = (0..4).map(|i| fermion_matrix(&[Wedge(i + 1), Contract(i)], &basis)).collect();
    e.push(fermion_matrix(&[Wedge(3), Wedge(4)], &basis));
    f.push(fermion_matrix(&[Contract(4), Contract(3)], &basis));
    Ok(Model {
        diagram: simple(CartanType::D, 5)?,
        distinguished: vec![4],
        grades: basis.iter().map(|m| (5 - m.count_ones() as usize) / 2).collect(),
        e,
        f,
    })
}
