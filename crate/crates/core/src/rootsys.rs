//! Finite-type root systems.
//!
//! Conventions, fixed here and nowhere else:
//!
//! * Nodes are numbered as in Bourbaki. Internally a node is a 0-based global
//!   index into the concatenation of the diagram's components.
//! * The Cartan matrix is `A[i][j] = <α_j, α_i^∨> = 2(α_i, α_j)/(α_i, α_i)`,
//!   so root coordinates `c` map to Dynkin labels by `labels = A·c`.
//! * Short roots have squared length 2. `half_length(i) = (α_i, α_i)/2` is
//!   1, 2 or 3, and the symmetrized form is `(α_i, α_j) = half_length(i)·A[i][j]`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::linalg::{q, Matrix};
use crate::{Error, Rational, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }
}

/// One simple factor: a type letter and a rank.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub kind: CartanType,
    pub rank: usize,
}

impl Component {
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        let ok = match kind {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C | CartanType::D => rank >= 2,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if ok {
            Ok(Component { kind, rank })
        } else {
            Err(Error::InvalidDiagram(format!("{}{rank}", kind.letter())))
        }
    }

    /// Edges of the diagram in local 0-based node indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1));
        match self.kind {
            CartanType::A | CartanType::B | CartanType::C | CartanType::F | CartanType::G => {
                chain(n).collect()
            }
            CartanType::D => {
                if n < 3 {
                    return Vec::new();
                }
                let mut e: Vec<_> = chain(n - 2).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            CartanType::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// `(α_i, α_i)/2` for each node.
    pub fn half_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.kind {
            CartanType::A | CartanType::D | CartanType::E => vec![1; n],
            CartanType::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            CartanType::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            CartanType::F => vec![2, 2, 1, 1],
            CartanType::G => vec![1, 3],
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

/// A finite-type Dynkin diagram, possibly a disjoint union. The empty
/// diagram (rank 0) is allowed; it arises when deleting the node of `A1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinDiagram {
    components: Vec<Component>,
}

impl DynkinDiagram {
    pub fn new(components: Vec<Component>) -> Self {
        DynkinDiagram { components }
    }

    pub fn simple(kind: CartanType, rank: usize) -> Result<Self> {
        Ok(DynkinDiagram { components: vec![Component::new(kind, rank)?] })
    }

    pub fn empty() -> Self {
        DynkinDiagram { components: Vec::new() }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// Global index of the first node of each component.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.components
            .iter()
            .map(|c| {
                let o = acc;
                acc += c.rank;
                o
            })
            .collect()
    }

    /// Global 0-based index of Bourbaki node `bourbaki` (1-based) of a component.
    pub fn node(&self, component: usize, bourbaki: usize) -> Result<usize> {
        let c = self
            .components
            .get(component)
            .ok_or(Error::NodeOutOfRange { node: component, rank: self.components.len() })?;
        if bourbaki == 0 || bourbaki > c.rank {
            return Err(Error::NodeOutOfRange { node: bourbaki, rank: c.rank });
        }
        Ok(self.offsets()[component] + bourbaki - 1)
    }

    /// `(component index, Bourbaki number)` of a global node.
    pub fn locate(&self, node: usize) -> Result<(usize, usize)> {
        let mut offset = 0;
        for (k, c) in self.components.iter().enumerate() {
            if node < offset + c.rank {
                return Ok((k, node - offset + 1));
            }
            offset += c.rank;
        }
        Err(Error::NodeOutOfRange { node, rank: self.rank() })
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let offsets = self.offsets();
        self.components
            .iter()
            .zip(offsets)
            .flat_map(|(c, o)| c.edges().into_iter().map(move |(i, j)| (i + o, j + o)))
            .collect()
    }

    pub fn half_lengths(&self) -> Vec<i64> {
        self.components.iter().flat_map(Component::half_lengths).collect()
    }

    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges()
            .into_iter()
            .filter_map(|(i, j)| {
                if i == node {
                    Some(j)
                } else if j == node {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected as a graph with at least one node (so `D2` is not).
    pub fn is_connected(&self) -> bool {
        let n = self.rank();
        if n == 0 {
            return false;
        }
        let edges = self.edges();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in &edges {
                let w = if i == v {
                    j
                } else if j == v {
                    i
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Symmetrized Cartan matrix `(α_i, α_j)`, short roots of length 2.
    pub fn symmetrized_form(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let d = self.half_lengths();
        let mut b = vec![vec![0; n]; n];
        for i in 0..n {
            b[i][i] = 2 * d[i];
        }
        for (i, j) in self.edges() {
            let x = -d[i].max(d[j]);
            b[i][j] = x;
            b[j][i] = x;
        }
        b
    }

    /// `A[i][j] = <α_j, α_i^∨>`; block diagonal across components.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let b = self.symmetrized_form();
        let d = self.half_lengths();
        b.iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|x| x / d[i]).collect())
            .collect()
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    /// Parses `"E6"`, `"D5"`, `"A2xA3"` (also `×` or `*` as separator).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse(String::from("empty diagram")));
        }
        let mut components = Vec::new();
        for part in s.split(['x', 'X', '×', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| Error::Parse(format!("bad component in {s:?}")))?;
            let kind = CartanType::from_letter(letter)
                .ok_or_else(|| Error::Parse(format!("unknown type letter {letter:?}")))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in {part:?}")))?;
            components.push(Component::new(kind, rank)?);
        }
        Ok(DynkinDiagram { components })
    }
}

macro_rules! int_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(len: usize) -> Self {
                $name(vec![0; len])
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn as_slice(&self) -> &[i64] {
                &self.0
            }

            pub fn add(&self, other: &Self) -> Self {
                $name(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            pub fn sub(&self, other: &Self) -> Self {
                $name(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
            }

            pub fn neg(&self) -> Self {
                $name(self.0.iter().map(|a| -a).collect())
            }

            pub fn scaled(&self, k: i64) -> Self {
                $name(self.0.iter().map(|a| a * k).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    };
}

int_vector!(RootVector, "Integer coordinates over the simple roots.");
int_vector!(WeightVector, "Dynkin labels: coordinates over the fundamental weights.");

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// The coefficient of the simple root at `node` in `alpha`.
pub fn root_coefficient(alpha: &RootVector, node: usize) -> Result<i64> {
    alpha
        .0
        .get(node)
        .copied()
        .ok_or(Error::NodeOutOfRange { node, rank: alpha.len() })
}

/// The invariant form on the simple-root basis, with the inverse Cartan
/// matrix for pairing weights given by labels.
#[derive(Clone, Debug)]
pub struct InnerProductForm {
    gram: Vec<Vec<i64>>,
    half: Vec<i64>,
    inv_cartan: Matrix,
}

impl InnerProductForm {
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn roots(&self, x: &RootVector, y: &RootVector) -> Rational {
        let mut s = 0i64;
        for (i, xi) in x.0.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                s += xi * self.gram[i][j] * yj;
            }
        }
        q(s)
    }

    /// `(α, w)` for a root-lattice vector and a weight; always an integer.
    pub fn root_weight(&self, x: &RootVector, w: &WeightVector) -> i64 {
        x.0.iter().zip(&self.half).zip(&w.0).map(|((c, d), l)| c * d * l).sum()
    }

    pub fn weights(&self, x: &WeightVector, y: &WeightVector) -> Rational {
        let n = self.half.len();
        let mut s = Rational::zero();
        for i in 0..n {
            if y.0[i] == 0 {
                continue;
            }
            let mut ci = Rational::zero();
            for j in 0..n {
                if x.0[j] != 0 {
                    ci += &self.inv_cartan[(i, j)] * q(x.0[j]);
                }
            }
            s += ci * q(self.half[i] * y.0[i]);
        }
        s
    }
}

/// A diagram together with its enumerated positive roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    cartan: Vec<Vec<i64>>,
    form: InnerProductForm,
    positive: Vec<RootVector>,
    lookup: BTreeMap<RootVector, usize>,
}

impl RootSystem {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let cartan = diagram.cartan_matrix();
        let n = cartan.len();
        let inv_cartan = if n == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_int_rows(&cartan).inverse().expect("finite-type Cartan matrices are invertible")
        };
        let form = InnerProductForm {
            gram: diagram.symmetrized_form(),
            half: diagram.half_lengths(),
            inv_cartan,
        };
        let positive = enumerate_positive_roots(&cartan);
        let lookup = positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        RootSystem { diagram: diagram.clone(), cartan, form, positive, lookup }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form(&self) -> &InnerProductForm {
        &self.form
    }

    pub fn half_length(&self, node: usize) -> i64 {
        self.form.half[node]
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    /// `rank + 2|Φ⁺|`.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn is_positive_root(&self, r: &RootVector) -> bool {
        self.lookup.contains_key(r)
    }

    pub fn is_root(&self, r: &RootVector) -> bool {
        self.is_positive_root(r) || self.is_positive_root(&r.neg())
    }

    pub fn simple_root(&self, node: usize) -> RootVector {
        let mut v = RootVector::zero(self.rank());
        v.0[node] = 1;
        v
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node < self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, rank: self.rank() })
        }
    }

    /// The highest root; the diagram must be connected.
    pub fn highest_root(&self) -> Result<RootVector> {
        if !self.diagram.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.positive.last().cloned().expect("connected diagrams have roots"))
    }

    /// Highest root of one component, embedded in global coordinates.
    pub fn highest_root_of(&self, component: usize) -> Result<RootVector> {
        let offsets = self.diagram.offsets();
        let c = self
            .diagram
            .components()
            .get(component)
            .ok_or(Error::NodeOutOfRange { node: component, rank: offsets.len() })?;
        let range = offsets[component]..offsets[component] + c.rank;
        self.positive
            .iter()
            .filter(|r| r.0.iter().enumerate().all(|(i, x)| *x == 0 || range.contains(&i)))
            .max_by_key(|r| r.height())
            .cloned()
            .ok_or(Error::Disconnected)
    }

    /// `<β, α_i^∨>` for every node `i`.
    pub fn root_to_labels(&self, r: &RootVector) -> WeightVector {
        WeightVector(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(&r.0).map(|(a, c)| a * c).sum())
                .collect(),
        )
    }

    /// Rational root coordinates of a weight, `A⁻¹·labels`.
    pub fn labels_to_root_coords(&self, w: &WeightVector) -> Vec<Rational> {
        let v: Vec<Rational> = w.0.iter().map(|&x| q(x)).collect();
        self.form.inv_cartan.mul_vec(&v)
    }

    /// `s_i(λ) = λ − <λ, α_i^∨> α_i`, in labels.
    pub fn weyl_reflect(&self, w: &WeightVector, node: usize) -> Result<WeightVector> {
        self.check_node(node)?;
        if w.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: w.len() });
        }
        let li = w.0[node];
        Ok(WeightVector(
            w.0.iter().enumerate().map(|(j, x)| x - li * self.cartan[j][node]).collect(),
        ))
    }

    /// `s_i` on root coordinates.
    pub fn reflect_root(&self, r: &RootVector, node: usize) -> Result<RootVector> {
        self.check_node(node)?;
        let pairing: i64 = self.cartan[node].iter().zip(&r.0).map(|(a, c)| a * c).sum();
        let mut out = r.clone();
        out.0[node] -= pairing;
        Ok(out)
    }

    pub fn inner_product_roots(&self, x: &RootVector, y: &RootVector) -> Rational {
        self.form.roots(x, y)
    }

    pub fn inner_product_weights(&self, x: &WeightVector, y: &WeightVector) -> Rational {
        self.form.weights(x, y)
    }

    /// The Weyl vector `ρ`, all labels 1.
    pub fn rho(&self) -> WeightVector {
        WeightVector(vec![1; self.rank()])
    }

    pub fn is_dominant(&self, w: &WeightVector) -> bool {
        w.0.iter().all(|&x| x >= 0)
    }

    /// The dominant weight in the Weyl orbit of `w`, and the root
    /// coordinates of `dominant − w` (nonnegative).
    pub fn dominant_representative(&self, w: &WeightVector) -> (WeightVector, RootVector) {
        let mut cur = w.clone();
        let mut lift = RootVector::zero(self.rank());
        while let Some(i) = cur.0.iter().position(|&x| x < 0) {
            let li = cur.0[i];
            lift.0[i] -= li;
            cur = self.weyl_reflect(&cur, i).expect("node in range");
        }
        (cur, lift)
    }

    /// The Weyl orbit of a weight, by closure under simple reflections.
    pub fn weyl_orbit(&self, w: &WeightVector) -> BTreeSet<WeightVector> {
        let mut seen = BTreeSet::new();
        seen.insert(w.clone());
        let mut stack = vec![w.clone()];
        while let Some(v) = stack.pop() {
            for i in 0..self.rank() {
                if v.0[i] == 0 {
                    continue;
                }
                let r = self.weyl_reflect(&v, i).expect("node in range");
                if seen.insert(r.clone()) {
                    stack.push(r);
                }
            }
        }
        seen
    }
}

/// Breadth-first closure under root strings: for a positive root `β` and a
/// node `i`, with `p` the largest `k` such that `β − kα_i` is a root,
/// `β + α_i` is a root iff `p − <β, α_i^∨> > 0`.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<RootVector> {
    let n = cartan.len();
    let mut all: BTreeSet<RootVector> = BTreeSet::new();
    let mut layer: Vec<RootVector> = (0..n)
        .map(|i| {
            let mut v = RootVector::zero(n);
            v.0[i] = 1;
            v
        })
        .collect();
    let mut ordered = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        for r in &layer {
            all.insert(r.clone());
        }
        ordered.extend(layer.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = cartan[i].iter().zip(&beta.0).map(|(a, c)| a * c).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down.0[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    ordered
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap())
    }

    #[test]
    fn cartan_small_cases() {
        let a1: DynkinDiagram = "A1".parse().unwrap();
        assert_eq!(a1.cartan_matrix(), vec![vec![2]]);
        let a2: DynkinDiagram = "A2".parse().unwrap();
        assert_eq!(a2.cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
        let b3: DynkinDiagram = "B3".parse().unwrap();
        assert_eq!(b3.cartan_matrix()[1][2], -1);
        assert_eq!(b3.cartan_matrix()[2][1], -2);
        let c3: DynkinDiagram = "C3".parse().unwrap();
        assert_eq!(c3.cartan_matrix()[1][2], -2);
        assert_eq!(c3.cartan_matrix()[2][1], -1);
        let g2: DynkinDiagram = "G2".parse().unwrap();
        assert_eq!(g2.cartan_matrix(), vec![vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn union_is_block_diagonal() {
        let d: DynkinDiagram = "A2xA3".parse().unwrap();
        let a = d.cartan_matrix();
        assert_eq!(a.len(), 5);
        assert_eq!(a[1][2], 0);
        assert_eq!(a[2][1], 0);
        assert_eq!(a[2][3], -1);
        assert!(!d.is_connected());
        assert_eq!(d.to_string(), "A2xA3");
    }

    #[test]
    fn invalid_ranks_rejected() {
        for bad in ["E5", "E9", "F3", "G3", "B1", "C1", "A0", "D1", "Q3", "A", ""] {
            assert!(bad.parse::<DynkinDiagram>().is_err(), "{bad}");
        }
    }

    #[test]
    fn a2_roots_and_highest() {
        let r = rs("A2");
        let roots: Vec<_> = r.positive_roots().iter().map(|x| x.0.clone()).collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(r.highest_root().unwrap().0, vec![1, 1]);
    }

    #[test]
    fn highest_roots_bourbaki() {
        assert_eq!(rs("C3").highest_root().unwrap().0, vec![2, 2, 1]);
        assert_eq!(rs("E6").highest_root().unwrap().0, vec![1, 2, 2, 3, 2, 1]);
        assert_eq!(rs("B3").highest_root().unwrap().0, vec![1, 2, 2]);
        assert_eq!(rs("A2xA1").highest_root(), Err(Error::Disconnected));
        assert_eq!(rs("A2xA1").highest_root_of(1).unwrap().0, vec![0, 0, 1]);
    }

    #[test]
    fn reflection_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_reflect(&WeightVector(vec![2]), 0).unwrap().0, vec![-2]);
        let a2 = rs("A2");
        assert_eq!(a2.weyl_reflect(&WeightVector(vec![1, 0]), 0).unwrap().0, vec![-1, 1]);
        assert!(a2.weyl_reflect(&WeightVector(vec![1, 0]), 2).is_err());
    }

    #[test]
    fn lengths_and_pairings() {
        let a3 = rs("A3");
        for r in a3.positive_roots() {
            assert_eq!(a3.inner_product_roots(r, r), q(2));
        }
        let c2 = rs("C2");
        let long = c2.simple_root(1);
        assert_eq!(c2.inner_product_roots(&long, &long), q(4));
        // (ω1, ω1) = n/(n+1) for A_n.
        assert_eq!(a3.inner_product_weights(&WeightVector(vec![1, 0, 0]), &WeightVector(vec![1, 0, 0])), crate::linalg::q_frac(3, 4));
    }

    #[test]
    fn root_coefficients() {
        let a3 = rs("A3");
        let h = a3.highest_root().unwrap();
        for i in 0..3 {
            assert_eq!(root_coefficient(&h, i).unwrap(), 1);
        }
        let c3 = rs("C3");
        assert_eq!(root_coefficient(&c3.highest_root().unwrap(), 0).unwrap(), 2);
        let s = c3.simple_root(1);
        assert_eq!((0..3).map(|i| root_coefficient(&s, i).unwrap()).collect::<Vec<_>>(), vec![0, 1, 0]);
    }

    #[test]
    fn d_small_ranks() {
        let d2: DynkinDiagram = "D2".parse().unwrap();
        assert!(!d2.is_connected());
        assert_eq!(RootSystem::new(&d2).positive_roots().len(), 2);
        assert_eq!(RootSystem::new(&"D3".parse().unwrap()).positive_roots().len(), 6);
    }
}
