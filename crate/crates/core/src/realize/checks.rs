use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{conjugate_by_signs, ConcreteQuintuple};
use crate::classify::canonical_module;
use crate::irreps::weight_system;
use crate::linalg::{q, Echelon, Matrix};
use crate::report::Check;
use crate::rootsys::{RootSystem, WeightVector};
use crate::{catalog, Error, Rational, Result};

/// A subspace of matrices of a fixed shape, with a basis of actual matrices.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub basis: Vec<Matrix>,
    echelon: Echelon,
    rows: usize,
    cols: usize,
}

impl Subspace {
    pub fn new(rows: usize, cols: usize) -> Self {
        Subspace { basis: Vec::new(), echelon: Echelon::new(rows * cols), rows, cols }
    }

    pub fn spanned_by<'a>(rows: usize, cols: usize, ms: impl IntoIterator<Item = &'a Matrix>) -> Self {
        let mut s = Subspace::new(rows, cols);
        for m in ms {
            s.insert(m.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn insert(&mut self, m: Matrix) -> bool {
        debug_assert_eq!((m.rows(), m.cols()), (self.rows, self.cols));
        if self.echelon.insert(m.as_slice().to_vec()) {
            self.basis.push(m);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.echelon.contains(m.as_slice())
    }
}

/// The Lie algebra generated by `gens`: new elements are bracketed with the
/// generators until nothing new appears.
pub fn lie_closure(gens: &[Matrix]) -> Subspace {
    let (r, c) = gens.first().map_or((0, 0), |g| (g.rows(), g.cols()));
    let mut space = Subspace::new(r, c);
    let mut queue = Vec::new();
    for g in gens {
        if space.insert(g.clone()) {
            queue.push(g.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = g.bracket(&x);
            if space.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    space
}

fn short(m: &Matrix) -> String {
    let entries: Vec<String> = m.nonzero_entries().map(|(i, j, x)| format!("({i},{j}):{x}")).collect();
    if entries.is_empty() {
        String::from("0")
    } else {
        entries.join(" ")
    }
}

/// Serre relations on the generators, tracelessness, and the dimension of
/// the generated algebra.
pub fn bracket_closure_check(cq: &ConcreteQuintuple) -> Vec<Check> {
    let tag = cq.family;
    let a = cq.diagram.cartan_matrix();
    let n = a.len();
    let mut out = Vec::new();

    let mut bad = Vec::new();
    for (k, g) in cq.generators().enumerate() {
        if !g.trace().is_zero() {
            bad.push(k);
        }
    }
    out.push(Check::expect(format!("{tag}: generators traceless"), bad.is_empty(), || {
        format!("generators {bad:?} have nonzero trace")
    }));

    let mut fails: Vec<String> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !cq.h[i].bracket(&cq.h[j]).is_zero() {
                fails.push(format!("[h{},h{}] != 0", i + 1, j + 1));
            }
            let aij = q(a[i][j]);
            let lhs = cq.h[i].bracket(&cq.e[j]);
            if lhs != cq.e[j].scale(&aij) {
                fails.push(format!("[h{},e{}] = {} but A = {}", i + 1, j + 1, short(&lhs), a[i][j]));
            }
            if cq.h[i].bracket(&cq.f[j]) != cq.f[j].scale(&-aij) {
                fails.push(format!("[h{},f{}] != -A f", i + 1, j + 1));
            }
            let ef = cq.e[i].bracket(&cq.f[j]);
            let want = if i == j { cq.h[i].clone() } else { Matrix::zeros(ef.rows(), ef.cols()) };
            if ef != want {
                fails.push(format!("[e{},f{}] = {}", i + 1, j + 1, short(&ef)));
            }
            if i != j {
                let order = 1 - a[i][j];
                let mut xe = cq.e[j].clone();
                let mut xf = cq.f[j].clone();
                for _ in 0..order {
                    xe = cq.e[i].bracket(&xe);
                    xf = cq.f[i].bracket(&xf);
                }
                if !xe.is_zero() {
                    fails.push(format!("ad(e{})^{order} e{} != 0", i + 1, j + 1));
                }
                if !xf.is_zero() {
                    fails.push(format!("ad(f{})^{order} f{} != 0", i + 1, j + 1));
                }
            }
        }
    }
    out.push(Check::expect(format!("{tag}: Serre relations"), fails.is_empty(), || fails.join("; ")));

    let gens: Vec<Matrix> = cq.generators().cloned().collect();
    let span = lie_closure(&gens);
    let want = RootSystem::new(&cq.diagram).dimension();
    out.push(Check::expect(format!("{tag}: dim ρ(g̃) = dim g̃"), span.dim() == want, || {
        format!("generated algebra has dimension {}, expected {want}", span.dim())
    }));
    out
}

/// Each basis vector's weight, read off the diagonal `ρ(h_i)`, lies below
/// the highest weight by a root-lattice vector whose coefficients at the
/// distinguished nodes sum to the vector's grade. The weights form the
/// weight system of the table row's module.
pub fn grading_check(cq: &ConcreteQuintuple) -> Vec<Check> {
    let tag = cq.family;
    let rs = RootSystem::new(&cq.diagram);
    let weight = |b: usize| -> Option<WeightVector> {
        cq.h.iter()
            .map(|h| {
                let x = &h[(b, b)];
                if x.is_integer() {
                    i64::try_from(x.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<i64>>>()
            .map(WeightVector)
    };
    let mut out = Vec::new();
    let weights: Option<Vec<WeightVector>> = (0..cq.size()).map(weight).collect();
    let Some(weights) = weights else {
        out.push(Check::fail(format!("{tag}: integral weights"), "non-integral diagonal entry"));
        return out;
    };
    let top = &weights[0];
    let mut bad = Vec::new();
    for (b, w) in weights.iter().enumerate() {
        let coords = rs.labels_to_root_coords(&top.sub(w));
        let nonneg_int = coords.iter().all(|c| c.is_integer() && *c >= Rational::zero());
        let grade: Rational = cq.distinguished.iter().map(|&i| coords[i].clone()).sum();
        if !nonneg_int || grade != q(cq.grade(b) as i64) {
            bad.push(format!("basis {b}: weight {w}, grade {}, ω̃₀ − ω̃ coordinates {coords:?}", cq.grade(b)));
        }
    }
    out.push(Check::expect(format!("{tag}: grades match weights"), bad.is_empty(), || bad.join("; ")));

    let system = weight_system(&rs, top);
    let mut counted = alloc::collections::BTreeMap::new();
    for w in &weights {
        *counted.entry(w.clone()).or_insert_with(num_bigint::BigUint::zero) += 1u32;
    }
    let row_ok = cq.family.row().and_then(|row| catalog::row_module(&row));
    let same_row = row_ok.map(|m| m == canonical_module(&cq.diagram, top.as_slice())).unwrap_or(false);
    out.push(Check::expect(format!("{tag}: V is the table row's module"), system.map(|s| s.weights == counted).unwrap_or(false) && same_row, || {
        format!("highest weight {top}")
    }));
    out
}

/// `ρ(g̃)` and its `θ`-even/odd parts `h̃`, `p̃`.
fn theta_split(cq: &ConcreteQuintuple) -> Result<(Subspace, Subspace, Subspace)> {
    let gens: Vec<Matrix> = cq.generators().cloned().collect();
    let g = lie_closure(&gens);
    let theta = cq.theta();
    let (r, c) = (cq.size(), cq.size());
    let mut even = Subspace::new(r, c);
    let mut odd = Subspace::new(r, c);
    let half = Rational::new(1.into(), 2.into());
    for x in &g.basis {
        let tx = conjugate_by_signs(x, &theta);
        let plus = x.add(&tx).scale(&half);
        let minus = x.sub(&tx).scale(&half);
        if !g.contains(&plus) {
            return Err(Error::Precondition(format!("ρ(g̃) is not θ-stable at {}", short(x))));
        }
        if !plus.is_zero() {
            even.insert(plus);
        }
        if !minus.is_zero() {
            odd.insert(minus);
        }
    }
    Ok((g, even, odd))
}

/// Whether `ρ(g̃)` is stable under `Ad(I_{V₀⊕V₁, V₂})`.
pub fn printed_theta_stabilizes(cq: &ConcreteQuintuple) -> bool {
    let gens: Vec<Matrix> = cq.generators().cloned().collect();
    let g = lie_closure(&gens);
    let t = cq.printed_theta();
    g.basis.iter().all(|x| g.contains(&conjugate_by_signs(x, &t)))
}

/// `λ : p₋ → h₋` with `p̃ = {X + λX}`. The basis of `p₋` is `E_{0a}`, `E_{a0}`
/// for `a ∈ V₁`, in that interleaved order.
#[derive(Clone, Debug)]
pub struct LambdaMap {
    pub domain: Vec<Matrix>,
    pub images: Vec<Matrix>,
    /// `v1[k]` is the basis index `a` of the `k`-th vector of `V₁`.
    v1: Vec<usize>,
    size: usize,
}

impl LambdaMap {
    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Matrix::is_zero)
    }

    /// Rank of `λ` as a linear map.
    pub fn rank(&self) -> usize {
        Subspace::spanned_by(self.size, self.size, &self.images).dim()
    }

    /// Coordinates in the `p₋` basis; fails off `p₋`.
    pub fn coordinates(&self, x: &Matrix) -> Result<Vec<Rational>> {
        let mut coords = Vec::with_capacity(self.domain.len());
        for &a in &self.v1 {
            coords.push(x[(0, a)].clone());
            coords.push(x[(a, 0)].clone());
        }
        let mut rebuilt = Matrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.domain) {
            rebuilt.add_assign_scaled(b, c);
        }
        if &rebuilt != x {
            return Err(Error::Precondition(format!("not in p₋: {}", short(x))));
        }
        Ok(coords)
    }

    pub fn apply(&self, x: &Matrix) -> Result<Matrix> {
        let coords = self.coordinates(x)?;
        let mut out = Matrix::zeros(self.size, self.size);
        for (c, img) in coords.iter().zip(&self.images) {
            if !c.is_zero() {
                out.add_assign_scaled(img, c);
            }
        }
        Ok(out)
    }

    /// Matrix of `λ` with columns indexed by the `p₋` basis and rows by the
    /// `h₋` basis `E_{ab}`, `E_{ba}` (`a ∈ V₁`, `b ∈ V₂`).
    pub fn matrix(&self, v2: &[usize]) -> Matrix {
        let rows: Vec<(usize, usize)> = self
            .v1
            .iter()
            .flat_map(|&a| v2.iter().flat_map(move |&b| [(a, b), (b, a)]))
            .collect();
        Matrix::from_fn(rows.len(), self.images.len(), |r, c| self.images[c][rows[r]].clone())
    }
}

pub fn extract_lambda(cq: &ConcreteQuintuple) -> Result<LambdaMap> {
    let (_, _, p_tilde) = theta_split(cq)?;
    let size = cq.size();
    let v1: Vec<usize> = cq.v1().collect();
    let domain: Vec<Matrix> = v1
        .iter()
        .flat_map(|&a| [Matrix::unit(size, 0, a), Matrix::unit(size, a, 0)])
        .collect();
    if p_tilde.dim() != domain.len() {
        return Err(Error::DimensionMismatch { expected: domain.len(), found: p_tilde.dim() });
    }
    let sigma = cq.sigma();
    let half = Rational::new(1.into(), 2.into());
    let mut pcols = Vec::new();
    let mut hparts = Vec::new();
    let proto = LambdaMap { domain: domain.clone(), images: Vec::new(), v1: v1.clone(), size };
    for x in &p_tilde.basis {
        let sx = conjugate_by_signs(x, &sigma);
        let xp = x.sub(&sx).scale(&half);
        let xh = x.add(&sx).scale(&half);
        let hv2 = xh.nonzero_entries().all(|(i, j, _)| {
            (cq.grade(i) == 1 && cq.grade(j) == 2) || (cq.grade(i) == 2 && cq.grade(j) == 1)
        });
        if !hv2 {
            return Err(Error::Precondition(format!("σ-even part outside h₋: {}", short(&xh))));
        }
        pcols.push(proto.coordinates(&xp)?);
        hparts.push(xh);
    }
    // P[k][j] = coordinate k of the p₋ part of the j-th p̃ vector.
    let m = domain.len();
    let p = Matrix::from_fn(m, m, |k, j| pcols[j][k].clone());
    let pinv = p
        .inverse()
        .ok_or_else(|| Error::Precondition("p̃ does not project onto p₋".into()))?;
    let images = (0..m)
        .map(|k| {
            let mut img = Matrix::zeros(size, size);
            for (j, hj) in hparts.iter().enumerate() {
                let c = &pinv[(j, k)];
                if !c.is_zero() {
                    img.add_assign_scaled(hj, c);
                }
            }
            img
        })
        .collect();
    Ok(LambdaMap { domain, images, v1, size })
}

/// `[λx, y] = [λy, x]` and `λ([W, z]) = [W, λz]` for `W = [x, y] + [λx, λy]`,
/// over all basis vectors of `p₋`.
pub fn gauss_equation_check(cq: &ConcreteQuintuple, lambda: &LambdaMap) -> Vec<Check> {
    let tag = cq.family;
    let b = &lambda.domain;
    let l = &lambda.images;
    let m = b.len();
    let mut out = Vec::new();

    let mut first = None;
    'one: for i in 0..m {
        for j in i + 1..m {
            let lhs = l[i].bracket(&b[j]);
            let rhs = l[j].bracket(&b[i]);
            if lhs != rhs {
                first = Some(format!("x = b{i}, y = b{j}: [λx,y] = {}, [λy,x] = {}", short(&lhs), short(&rhs)));
                break 'one;
            }
        }
    }
    out.push(Check::expect(format!("{tag}: [λx,y] = [λy,x] on {} pairs", m * m), first.is_none(), || first.unwrap()));

    let mut first = None;
    let mut count = 0usize;
    'two: for i in 0..m {
        for j in 0..m {
            let w = b[i].bracket(&b[j]).add(&l[i].bracket(&l[j]));
            if w.is_zero() {
                count += m;
                continue;
            }
            for k in 0..m {
                count += 1;
                let rhs = w.bracket(&l[k]);
                let lhs = match lambda.apply(&w.bracket(&b[k])) {
                    Ok(v) => v,
                    Err(e) => {
                        first = Some(format!("x = b{i}, y = b{j}, z = b{k}: {e}"));
                        break 'two;
                    }
                };
                if lhs != rhs {
                    first = Some(format!(
                        "x = b{i}, y = b{j}, z = b{k}: λ([W,z]) = {}, [W,λz] = {}",
                        short(&lhs),
                        short(&rhs)
                    ));
                    break 'two;
                }
            }
        }
    }
    out.push(Check::expect(format!("{tag}: λ([W,z]) = [W,λz] on {count} triples"), first.is_none(), || first.unwrap()));
    out.push(Check::expect(format!("{tag}: λ ≠ 0"), !lambda.is_zero(), || String::from("λ vanishes")));
    out.push(Check::expect(format!("{tag}: dim p₋ = 2·dim V₁"), m == 2 * cq.dims[1], || {
        format!("dim p₋ = {m}, dim V₁ = {}", cq.dims[1])
    }));
    out
}

fn theta_even(cq: &ConcreteQuintuple, x: &Matrix) -> bool {
    x.nonzero_entries().all(|(i, j, _)| (cq.grade(i) == 1) == (cq.grade(j) == 1))
}

fn theta_odd(cq: &ConcreteQuintuple, x: &Matrix) -> bool {
    x.nonzero_entries().all(|(i, j, _)| (cq.grade(i) == 1) != (cq.grade(j) == 1))
}

/// `h̃` preserves `V₊ = V₀ ⊕ V₂` and `V₋ = V₁`; `p̃` swaps them.
pub fn parity_check(cq: &ConcreteQuintuple) -> Vec<Check> {
    let tag = cq.family;
    let mut out = Vec::new();
    let split = theta_split(cq);
    let (_, h_tilde, p_tilde) = match split {
        Ok(s) => s,
        Err(e) => {
            out.push(Check::fail(format!("{tag}: ρ(g̃) is θ-stable"), format!("{e}")));
            return out;
        }
    };
    out.push(Check::pass(format!("{tag}: ρ(g̃) is θ-stable")));

    let mut bad = Vec::new();
    for (i, (e, f)) in cq.e.iter().zip(&cq.f).enumerate() {
        let odd = cq.distinguished.contains(&i);
        for (name, x) in [("e", e), ("f", f)] {
            let ok = if odd { theta_odd(cq, x) } else { theta_even(cq, x) };
            if !ok {
                bad.push(format!("{name}{}", i + 1));
            }
        }
        if !theta_even(cq, &cq.h[i]) {
            bad.push(format!("h{}", i + 1));
        }
    }
    out.push(Check::expect(format!("{tag}: generator parities"), bad.is_empty(), || bad.join(", ")));

    let bad_h: Vec<usize> = (0..h_tilde.dim()).filter(|&k| !theta_even(cq, &h_tilde.basis[k])).collect();
    out.push(Check::expect(format!("{tag}: h̃ preserves V₊ and V₋"), bad_h.is_empty(), || {
        format!("h̃ basis elements {bad_h:?}")
    }));
    let bad_p: Vec<usize> = (0..p_tilde.dim()).filter(|&k| !theta_odd(cq, &p_tilde.basis[k])).collect();
    out.push(Check::expect(format!("{tag}: p̃ exchanges V₊ and V₋"), bad_p.is_empty(), || {
        format!("p̃ basis elements {bad_p:?}")
    }));
    out
}

/// `[p̃, p̃] ⊆ h` and `[[p̃, p̃], p̃] ⊆ p̃`.
pub fn tilde_closure_check(cq: &ConcreteQuintuple) -> Vec<Check> {
    let tag = cq.family;
    let Ok((_, _, p_tilde)) = theta_split(cq) else {
        return vec![Check::fail(format!("{tag}: θ-split"), "ρ(g̃) is not θ-stable")];
    };
    let size = cq.size();
    let sigma = cq.sigma();
    let mut hh = Subspace::new(size, size);
    let mut off_h = None;
    let pb = &p_tilde.basis;
    for i in 0..pb.len() {
        for j in i + 1..pb.len() {
            let w = pb[i].bracket(&pb[j]);
            if conjugate_by_signs(&w, &sigma) != w && off_h.is_none() {
                off_h = Some(format!("[p̃{i}, p̃{j}] = {}", short(&w)));
            }
            hh.insert(w);
        }
    }
    let mut out = vec![Check::expect(format!("{tag}: [p̃,p̃] ⊆ h"), off_h.is_none(), || off_h.unwrap())];
    let mut outside = None;
    'outer: for w in &hh.basis {
        for (k, z) in pb.iter().enumerate() {
            let v = w.bracket(z);
            if !p_tilde.contains(&v) {
                outside = Some(format!("[[p̃,p̃] element {}, p̃{k}] = {}", short(w), short(&v)));
                break 'outer;
            }
        }
    }
    out.push(Check::expect(format!("{tag}: [[p̃,p̃],p̃] ⊆ p̃"), outside.is_none(), || outside.unwrap()));
    out
}

/// `ω(X, Y) = −B(Z, [X, Y])` with `B(X, Y) = 2(N+1)·tr(XY)`.
fn omega(z: &Matrix, n: usize, x: &Matrix, y: &Matrix) -> Rational {
    let c = x.bracket(y);
    let mut t = Rational::zero();
    for i in 0..c.rows() {
        let d = &c[(i, i)];
        if !d.is_zero() {
            t += &z[(i, i)] * d;
        }
    }
    -(q(2 * (n as i64 + 1)) * t)
}

fn gram(z: &Matrix, n: usize, basis: &[Matrix]) -> Matrix {
    let m = basis.len();
    Matrix::from_fn(m, m, |i, j| omega(z, n, &basis[i], &basis[j]))
}

/// `E_{0a}`, `E_{a0}` for `a = 1..N`.
fn p_basis(size: usize) -> Vec<Matrix> {
    (1..size).flat_map(|a| [Matrix::unit(size, 0, a), Matrix::unit(size, a, 0)]).collect()
}

/// Generators of `h = s(gl(V₀) ⊕ gl(V₁ ⊕ V₂))`: Chevalley generators of the
/// `sl(N)` block and `Z`.
fn h_generators(cq: &ConcreteQuintuple) -> Vec<Matrix> {
    let size = cq.size();
    let mut out = Vec::new();
    for a in 1..size - 1 {
        out.push(Matrix::unit(size, a, a + 1));
        out.push(Matrix::unit(size, a + 1, a));
        out.push(Matrix::unit(size, a, a).sub(&Matrix::unit(size, a + 1, a + 1)));
    }
    out.push(cq.z());
    out
}

pub fn symplectic_form_check(cq: &ConcreteQuintuple, lambda: &LambdaMap) -> Vec<Check> {
    let tag = cq.family;
    let n = cq.n();
    let z = cq.z();
    let size = cq.size();
    let mut out = Vec::new();

    let mut z_ok = true;
    // α_i(Z) = r δ_{i,α₀} for the simple roots E_{a,a+1} of sl(V).
    for a in 0..size - 1 {
        let e = Matrix::unit(size, a, a + 1);
        let want = if a == 0 { cq.r.clone() } else { Rational::zero() };
        if z.bracket(&e) != e.scale(&want) {
            z_ok = false;
        }
    }
    out.push(Check::expect(format!("{tag}: Z = r·h_α₀ on sl(V)"), z_ok && z.trace().is_zero(), || short(&z)));

    let pb = p_basis(size);
    let g = gram(&z, n, &pb);
    let skew = g.transpose() == g.scale(&-Rational::one());
    out.push(Check::expect(format!("{tag}: ω skew on p"), skew, || String::from("Gram matrix not skew")));
    let det = g.determinant();
    out.push(Check::expect(format!("{tag}: ω nondegenerate on p"), !det.is_zero(), || String::from("det = 0")));

    // ad_H on p in the basis pb, then R^T G + G R = 0.
    let mut bad = Vec::new();
    let pspace = Subspace::spanned_by(size, size, &pb);
    for (k, h) in h_generators(cq).iter().enumerate() {
        let mut cols = Vec::new();
        for x in &pb {
            let y = h.bracket(x);
            if !pspace.contains(&y) {
                bad.push(format!("[H{k}, p] leaves p"));
                break;
            }
            let mut coords = Vec::with_capacity(pb.len());
            for a in 1..size {
                coords.push(y[(0, a)].clone());
                coords.push(y[(a, 0)].clone());
            }
            cols.push(coords);
        }
        if cols.len() != pb.len() {
            continue;
        }
        let r = Matrix::from_fn(pb.len(), pb.len(), |i, j| cols[j][i].clone());
        if !r.transpose().mul(&g).add(&g.mul(&r)).is_zero() {
            bad.push(format!("ω not invariant under H{k} = {}", short(h)));
        }
    }
    out.push(Check::expect(format!("{tag}: ω ad_h-invariant"), bad.is_empty(), || bad.join("; ")));

    let hg = h_generators(cq);
    let mut nonzero = None;
    'h: for (k, h) in hg.iter().enumerate() {
        for y in pb.iter().chain(&hg) {
            let v = omega(&z, n, h, y);
            if !v.is_zero() {
                nonzero = Some(format!("ω(H{k}, {}) = {v}", short(y)));
                break 'h;
            }
        }
    }
    out.push(Check::expect(format!("{tag}: ω(h,·) = 0"), nonzero.is_none(), || nonzero.unwrap()));

    let dom = &lambda.domain;
    let gt = gram(&z, n, dom);
    out.push(Check::expect(format!("{tag}: ω̃ nondegenerate on p̃"), !gt.determinant().is_zero(), || {
        String::from("pulled-back Gram matrix is singular")
    }));
    let graph: Vec<Matrix> = dom.iter().zip(&lambda.images).map(|(x, l)| x.add(l)).collect();
    let on_graph = gram(&z, n, &graph);
    out.push(Check::expect(format!("{tag}: ω on p̃ = ω pulled back through λ"), on_graph == gt, || {
        String::from("ω(X+λX, Y+λY) differs from ω(X, Y)")
    }));

    let two = q(2);
    let z2 = cq.z_with(&(&cq.r * &two));
    let g2 = gram(&z2, n, &pb);
    out.push(Check::expect(format!("{tag}: r ↦ 2r scales ω by 2"), g2 == g.scale(&two) && !g2.determinant().is_zero(), || {
        String::from("scaling mismatch")
    }));
    out
}

/// `ρ(h_i)` diagonal; `σ`, `θ` are signed diagonal, so they fix the diagonal
/// Cartan subalgebra of `sl(V)` pointwise.
pub fn common_csa_check(cq: &ConcreteQuintuple) -> Vec<Check> {
    let tag = cq.family;
    let nondiag: Vec<usize> = (0..cq.h.len()).filter(|&i| !cq.h[i].is_diagonal()).collect();
    let mut out = vec![Check::expect(format!("{tag}: ρ(h_i) diagonal"), nondiag.is_empty(), || {
        format!("h{nondiag:?}")
    })];
    let size = cq.size();
    let mut fixed = true;
    for i in 0..size - 1 {
        let d = Matrix::unit(size, i, i).sub(&Matrix::unit(size, i + 1, i + 1));
        fixed &= conjugate_by_signs(&d, &cq.sigma()) == d && conjugate_by_signs(&d, &cq.theta()) == d;
    }
    out.push(Check::expect(format!("{tag}: σ, θ fix the diagonal csa"), fixed, || String::from("conjugation moves a diagonal")));
    let rank = Subspace::spanned_by(size, size, &cq.h).dim();
    out.push(Check::expect(format!("{tag}: rank g̃ = dim ρ(h̃₀) ≤ N"), rank == cq.h.len() && rank <= cq.n(), || {
        format!("rank {rank}, N = {}", cq.n())
    }));
    out
}

/// Every check on one realization.
pub fn full_check(cq: &ConcreteQuintuple) -> Vec<Check> {
    let tag = cq.family;
    let mut out = bracket_closure_check(cq);
    out.extend(grading_check(cq));
    out.extend(parity_check(cq));
    out.extend(common_csa_check(cq));
    match extract_lambda(cq) {
        Ok(lambda) => {
            out.push(Check::pass(format!("{tag}: λ well defined")));
            out.extend(gauss_equation_check(cq, &lambda));
            out.extend(tilde_closure_check(cq));
            out.extend(symplectic_form_check(cq, &lambda));
        }
        Err(e) => out.push(Check::fail(format!("{tag}: λ well defined"), format!("{e}"))),
    }
    out
}
