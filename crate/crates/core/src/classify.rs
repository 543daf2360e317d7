//! Dynkin diagram surgery helpers: classify the diagram induced on a subset
//! of nodes, recover a Bourbaki ordering of each component, and put weights
//! into a canonical form modulo diagram automorphisms.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::rootsys::{CartanType, Component, DynkinDiagram};
use crate::{Error, Result};

/// A sub-diagram of a parent diagram, classified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubDiagram {
    pub diagram: DynkinDiagram,
    /// `parent_nodes[k]` is the parent node sitting at global sub-node `k`,
    /// so sub-node order is Bourbaki order within each component.
    pub parent_nodes: Vec<usize>,
}

impl SubDiagram {
    pub fn sub_index(&self, parent_node: usize) -> Option<usize> {
        self.parent_nodes.iter().position(|&p| p == parent_node)
    }
}

/// Classify the diagram induced on `nodes` (global indices of `parent`).
/// Components are listed in order of their smallest parent node.
pub fn induced_subdiagram(parent: &DynkinDiagram, nodes: &[usize]) -> Result<SubDiagram> {
    let cartan = parent.cartan_matrix();
    let set: BTreeSet<usize> = nodes.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&v| v >= cartan.len()) {
        return Err(Error::NodeOutOfRange { node: bad, rank: cartan.len() });
    }
    let adjacent = |i: usize, j: usize| i != j && cartan[i][j] != 0;

    let mut unvisited = set.clone();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        unvisited.remove(&start);
        let mut group = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let next: Vec<usize> = unvisited.iter().copied().filter(|&w| adjacent(v, w)).collect();
            for w in next {
                unvisited.remove(&w);
                group.push(w);
                stack.push(w);
            }
        }
        group.sort_unstable();
        groups.push(group);
    }
    groups.sort_by_key(|g| g[0]);

    let mut components = Vec::new();
    let mut parent_nodes = Vec::new();
    for g in &groups {
        let (component, order) = classify_connected(&cartan, g)?;
        components.push(component);
        parent_nodes.extend(order);
    }
    Ok(SubDiagram { diagram: DynkinDiagram::new(components), parent_nodes })
}

fn classify_connected(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<(Component, Vec<usize>)> {
    let n = nodes.len();
    let nbrs = |v: usize| -> Vec<usize> {
        nodes.iter().copied().filter(|&w| w != v && cartan[v][w] != 0).collect()
    };
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    // The shorter of two adjacent roots sees the larger |A| entry.
    let is_shorter = |i: usize, j: usize| cartan[i][j].abs() > cartan[j][i].abs();

    if n == 1 {
        return Ok((Component::new(CartanType::A, 1)?, nodes.to_vec()));
    }

    if let Some(&branch) = nodes.iter().find(|&&v| nbrs(v).len() == 3) {
        let mut arms: Vec<Vec<usize>> = nbrs(branch)
            .into_iter()
            .map(|start| {
                let mut arm = vec![start];
                let mut prev = branch;
                let mut cur = start;
                loop {
                    let next: Vec<usize> = nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                    match next.as_slice() {
                        [w] => {
                            arm.push(*w);
                            prev = cur;
                            cur = *w;
                        }
                        _ => break,
                    }
                }
                arm
            })
            .collect();
        arms.sort_by_key(|a| (a.len(), a[0]));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let order: Vec<usize>;
        let component = match lens.as_slice() {
            [1, 1, k] => {
                let mut o: Vec<usize> = arms[2].iter().rev().copied().collect();
                o.push(branch);
                o.push(arms[0][0]);
                o.push(arms[1][0]);
                order = o;
                Component::new(CartanType::D, k + 3)?
            }
            [1, 2, k] if (2..=4).contains(k) => {
                let mut o = vec![arms[1][1], arms[0][0], arms[1][0], branch];
                o.extend(arms[2].iter().copied());
                order = o;
                Component::new(CartanType::E, k + 4)?
            }
            _ => return Err(Error::InvalidDiagram(format!("branch arms {lens:?}"))),
        };
        return Ok((component, order));
    }

    // A path: walk from an end.
    let ends: Vec<usize> = nodes.iter().copied().filter(|&v| nbrs(v).len() == 1).collect();
    if ends.len() != 2 {
        return Err(Error::InvalidDiagram(format!("not a tree on nodes {nodes:?}")));
    }
    let walk = |start: usize| -> Vec<usize> {
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&w) = nbrs(cur).iter().find(|&&w| w != prev) {
            path.push(w);
            prev = cur;
            cur = w;
        }
        path
    };
    let mut path = walk(ends[0]);
    let multi: Vec<usize> = (0..n - 1).filter(|&k| bond(path[k], path[k + 1]) > 1).collect();
    let component = match multi.as_slice() {
        [] => Component::new(CartanType::A, n)?,
        [k] if bond(path[*k], path[*k + 1]) == 3 => {
            if n != 2 {
                return Err(Error::InvalidDiagram(format!("triple bond in rank {n}")));
            }
            if !is_shorter(path[0], path[1]) {
                path.reverse();
            }
            Component::new(CartanType::G, 2)?
        }
        [k] if n == 4 && *k == 1 => {
            // F4: long, long => short, short.
            if is_shorter(path[1], path[2]) {
                path.reverse();
            }
            Component::new(CartanType::F, 4)?
        }
        [k] if *k == 0 || *k == n - 2 => {
            if *k == 0 {
                path.reverse();
            }
            let last_short = is_shorter(path[n - 1], path[n - 2]);
            if last_short {
                Component::new(CartanType::B, n)?
            } else if n == 2 {
                path.reverse();
                Component::new(CartanType::B, 2)?
            } else {
                Component::new(CartanType::C, n)?
            }
        }
        _ => return Err(Error::InvalidDiagram(format!("bond pattern on nodes {nodes:?}"))),
    };

    let expected = DynkinDiagram::new(vec![component]).cartan_matrix();
    for (a, &i) in path.iter().enumerate() {
        for (b, &j) in path.iter().enumerate() {
            if cartan[i][j] != expected[a][b] {
                return Err(Error::InvalidDiagram(format!("could not order nodes {nodes:?}")));
            }
        }
    }
    Ok((component, path))
}

/// Diagram automorphisms of one component as permutations of local
/// Bourbaki indices (`perm[i]` is the image of node `i`).
pub fn automorphisms(c: Component) -> Vec<Vec<usize>> {
    let n = c.rank;
    let id: Vec<usize> = (0..n).collect();
    match c.kind {
        CartanType::A if n >= 2 => vec![id.clone(), id.iter().rev().copied().collect()],
        CartanType::D if n == 4 => {
            let mut out = Vec::new();
            for p in [[0, 2, 3], [0, 3, 2], [2, 0, 3], [2, 3, 0], [3, 0, 2], [3, 2, 0]] {
                // p gives the images of nodes 1, 3, 4; node 2 is fixed.
                out.push(vec![p[0], 1, p[1], p[2]]);
            }
            out
        }
        CartanType::D if n >= 5 => {
            let mut swap = id.clone();
            swap.swap(n - 2, n - 1);
            vec![id, swap]
        }
        CartanType::E if n == 6 => vec![id, vec![5, 1, 4, 3, 2, 0]],
        _ => vec![id],
    }
}

pub fn apply_permutation(perm: &[usize], labels: &[i64]) -> Vec<i64> {
    let mut out = vec![0; labels.len()];
    for (i, &x) in labels.iter().enumerate() {
        out[perm[i]] = x;
    }
    out
}

/// A representation of a semisimple algebra up to isomorphism: one
/// `(component, labels)` per simple factor, labels maximised over diagram
/// automorphisms, factors sorted.
pub type CanonicalModule = Vec<(Component, Vec<i64>)>;

pub fn canonical_module(diagram: &DynkinDiagram, labels: &[i64]) -> CanonicalModule {
    let mut out: CanonicalModule = Vec::new();
    let mut offset = 0;
    for &c in diagram.components() {
        let local = &labels[offset..offset + c.rank];
        let best = automorphisms(c)
            .iter()
            .map(|p| apply_permutation(p, local))
            .max()
            .expect("identity is always present");
        out.push((c, best));
        offset += c.rank;
    }
    out.sort();
    out
}
