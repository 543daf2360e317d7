//! Independent reference data: Cartan matrices written out by hand from the
//! Bourbaki plates, and root enumeration by reflection closure.

#![allow(dead_code)]

use std::collections::BTreeSet;

use symext_core::{CartanType, Component, DynkinDiagram};

/// Every connected finite-type diagram of rank at most `max`.
pub fn connected_diagrams(max: usize) -> Vec<Component> {
    use CartanType::*;
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(Component::new(A, n).unwrap());
    }
    for n in 2..=max {
        out.push(Component::new(B, n).unwrap());
    }
    for n in 3..=max {
        out.push(Component::new(C, n).unwrap());
    }
    for n in 4..=max {
        out.push(Component::new(D, n).unwrap());
    }
    for n in 6..=max.min(8) {
        out.push(Component::new(E, n).unwrap());
    }
    if max >= 4 {
        out.push(Component::new(F, 4).unwrap());
    }
    if max >= 2 {
        out.push(Component::new(G, 2).unwrap());
    }
    out
}

pub fn diagram(c: Component) -> DynkinDiagram {
    DynkinDiagram::new(vec![c])
}

/// `A[i][j] = 2(α_i, α_j)/(α_i, α_i)` from the plates.
pub fn cartan(c: Component) -> Vec<Vec<i64>> {
    use CartanType::*;
    let n = c.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match c.kind {
        A | B | C | F | G => (0..n - 1).for_each(|i| link(i, i + 1)),
        D => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        E => {
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
    }
    match c.kind {
        // α_n short
        B => a[n - 1][n - 2] = -2,
        // α_n long
        C => a[n - 2][n - 1] = -2,
        // α_3 short, joined to the long α_2
        F => a[2][1] = -2,
        // α_1 short
        G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under all simple reflections and keeping the positive ones.
pub fn roots_by_reflection(c: Component) -> BTreeSet<Vec<i64>> {
    let a = cartan(c);
    let n = c.rank;
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(beta) = stack.pop() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
            let mut r = beta.clone();
            r[i] -= pairing;
            if !seen.contains(&r) {
                stack.push(r);
            }
        }
    }
    seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect()
}

/// `dim g` by type.
pub fn known_dimension(c: Component) -> usize {
    use CartanType::*;
    let n = c.rank;
    match c.kind {
        A => n * n + 2 * n,
        B | C => 2 * n * n + n,
        D => 2 * n * n - n,
        E => [78, 133, 248][n - 6],
        F => 52,
        G => 14,
    }
}

/// Classical cominuscule nodes, 0-based.
pub fn cominuscule(c: Component) -> Vec<usize> {
    use CartanType::*;
    let n = c.rank;
    match c.kind {
        A => (0..n).collect(),
        B => vec![0],
        C => vec![n - 1],
        D => vec![0, n - 2, n - 1],
        E if n == 6 => vec![0, 5],
        E if n == 7 => vec![6],
        _ => vec![],
    }
}
