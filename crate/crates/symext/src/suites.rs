use clap::ValueEnum;
use serde::Serialize;
use symext_core::catalog::{
    e6_reference_check, rows_up_to_rank, real_form_asserted, real_form_reported, verify_complex_row, RowRef,
};
use symext_core::irreps::{epsilon_coordinates_doubled, restrict_weight, weight_system};
use symext_core::realize::{build_realization, full_check, printed_theta_stabilizes, RealizeFamily};
use symext_core::surgery::{
    grade_census, identify_catalog_row, is_totally_geodesic, pairing_disagreements, pairing_partition, surgery,
    SurgeryResult,
};
use symext_core::triples::admissible_nodes;
use symext_core::{CartanType, Check, Component, DynkinDiagram, Error, RootSystem, Status};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Cominuscule,
    Bijection,
    E6,
    Counts,
    Halfspin,
    Gauss,
    Signatures,
    Pairing,
}

impl Suite {
    pub const PARTS: [Suite; 8] = [
        Suite::Cominuscule,
        Suite::Bijection,
        Suite::E6,
        Suite::Counts,
        Suite::Halfspin,
        Suite::Gauss,
        Suite::Signatures,
        Suite::Pairing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Cominuscule => "cominuscule",
            Suite::Bijection => "bijection",
            Suite::E6 => "e6",
            Suite::Counts => "counts",
            Suite::Halfspin => "halfspin",
            Suite::Gauss => "gauss",
            Suite::Signatures => "signatures",
            Suite::Pairing => "pairing",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, checks: &[Check]) -> Self {
        let mut summary = Summary::default();
        for c in checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Finding => summary.finding += 1,
            }
        }
        VerifyReport {
            suite: suite.into(),
            checks: checks
                .iter()
                .map(|c| CheckRecord { id: c.id.clone(), status: c.status.as_str(), witness: c.witness.clone() })
                .collect(),
            summary,
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    /// One line per check, then the counts.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&c.status.to_uppercase());
            s.push(' ');
            s.push_str(&c.id);
            if let Some(w) = &c.witness {
                if c.status != "pass" {
                    s.push_str(": ");
                    s.push_str(w);
                }
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "{}: {} pass, {} fail, {} finding\n",
            self.suite, self.summary.pass, self.summary.fail, self.summary.finding
        ));
        s
    }
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::All => Suite::PARTS.iter().flat_map(|&s| run_suite(s)).collect(),
        Suite::Cominuscule => cominuscule(),
        Suite::Bijection => bijection(),
        Suite::E6 => e6(),
        Suite::Counts => counts(),
        Suite::Halfspin => halfspin(),
        Suite::Gauss => gauss(),
        Suite::Signatures => {
            let mut v = real_form_asserted();
            v.extend(real_form_reported());
            v
        }
        Suite::Pairing => pairing(),
    }
}

/// Every connected diagram of rank at most `max`.
pub fn connected_diagrams(max: usize) -> Vec<DynkinDiagram> {
    use CartanType::*;
    let mut comps = Vec::new();
    for n in 1..=max {
        comps.push((A, n));
    }
    for n in 2..=max {
        comps.push((B, n));
    }
    for n in 3..=max {
        comps.push((C, n));
    }
    for n in 4..=max {
        comps.push((D, n));
    }
    for n in 6..=max.min(8) {
        comps.push((E, n));
    }
    if max >= 4 {
        comps.push((F, 4));
    }
    if max >= 2 {
        comps.push((G, 2));
    }
    comps
        .into_iter()
        .map(|(k, n)| DynkinDiagram::new(vec![Component::new(k, n).expect("valid rank")]))
        .collect()
}

fn nodes_text(nodes: &[usize]) -> String {
    let v: Vec<String> = nodes.iter().map(|n| (n + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// The classical cominuscule nodes, 0-based.
fn classical_cominuscule(c: Component) -> Vec<usize> {
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

fn cominuscule() -> Vec<Check> {
    let mut out = Vec::new();
    for d in connected_diagrams(8) {
        let rs = RootSystem::new(&d);
        let lib = admissible_nodes(&rs).unwrap_or_default();
        let brute: Vec<usize> = (0..rs.rank())
            .filter(|&i| rs.positive_roots().iter().all(|r| r.0[i] <= 1))
            .collect();
        let classical = classical_cominuscule(d.components()[0]);
        out.push(Check::expect(format!("cominuscule {d}"), lib == brute && lib == classical, || {
            format!("admissible {}, root oracle {}, classical {}", nodes_text(&lib), nodes_text(&brute), nodes_text(&classical))
        }));
    }
    out
}

/// Surgery on every admissible node of every connected diagram up to rank 8.
fn all_surgeries() -> Vec<(DynkinDiagram, usize, symext_core::Result<SurgeryResult>)> {
    let mut out = Vec::new();
    for d in connected_diagrams(8) {
        let rs = RootSystem::new(&d);
        for node in admissible_nodes(&rs).unwrap_or_default() {
            let r = surgery(&d, node);
            out.push((d.clone(), node, r));
        }
    }
    out
}

fn bijection() -> Vec<Check> {
    let mut out = Vec::new();
    let mut hit = std::collections::BTreeSet::new();
    for (d, node, r) in all_surgeries() {
        let id = format!("surgery {d} node {}", node + 1);
        let r = match r {
            Ok(r) => r,
            Err(e) => {
                out.push(Check::fail(id, e.to_string()));
                continue;
            }
        };
        // The weights of V are the restrictions of −α; negated, they must
        // form the weight system of the restricted highest root.
        let rs = RootSystem::new(&d);
        let irreducible = rs
            .highest_root()
            .ok()
            .and_then(|theta| {
                let restricted = restrict_weight(&rs.root_to_labels(&theta), &r.module.sub.parent_nodes).ok()?;
                let m = weight_system(&RootSystem::new(&r.module.sub.diagram), &restricted).ok()?;
                let negated: std::collections::BTreeMap<_, _> = r
                    .module
                    .weights
                    .iter()
                    .map(|g| (g.labels.neg(), num_bigint::BigUint::from(1u32)))
                    .collect();
                Some(negated.len() == r.module.dim() && m.weights == negated)
            })
            .unwrap_or(false);
        match identify_catalog_row(&r) {
            Ok(row) => {
                hit.insert(row);
                let n_ok = symext_core::catalog::catalog_n(&row) == r.module.n();
                out.push(Check::expect(format!("{id} -> {row}"), n_ok && irreducible, || {
                    format!("N = {}, irreducible = {irreducible}", r.module.n())
                }));
            }
            Err(Error::NoCatalogMatch) if is_totally_geodesic(&r) => {
                let mut c = Check::pass(format!("{id}: totally geodesic, outside the table"));
                c.witness = Some(format!("V2 = 0, dim V = {}", r.module.dim()));
                out.push(c);
            }
            Err(e) => out.push(Check::fail(id, e.to_string())),
        }
    }
    for row in rows_up_to_rank(8) {
        out.push(Check::expect(format!("row {row} is hit"), hit.contains(&row), || "no surgery lands here".into()));
        match verify_complex_row(&row) {
            Ok(v) => out.extend(v),
            Err(e) => out.push(Check::fail(format!("row {row}"), e.to_string())),
        }
    }
    out
}

fn e6() -> Vec<Check> {
    let run = surgery(&DynkinDiagram::new(vec![Component::new(CartanType::E, 7).expect("E7")]), 6)
        .and_then(|r| e6_reference_check(&r));
    run.unwrap_or_else(|e| vec![Check::fail("e6 lists", e.to_string())])
}

fn counts() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 4..=10usize {
        let d = DynkinDiagram::new(vec![Component::new(CartanType::D, n + 1).expect("D")]);
        let id = format!("wedge2 n={n}");
        match surgery(&d, n) {
            Ok(r) => {
                let (s0, s1, s2) = grade_census(&r);
                let want = (2 * (n - 1), 1 + (n - 1) * (n - 2) / 2);
                out.push(Check::expect(format!("{id}: |S1| = 2(n-1), |S0 ∪ S2| = 1 + (n-1)(n-2)/2"), (s1, s0 + s2) == want, || {
                    format!("census ({s0}, {s1}, {s2}), expected |S1| = {}, |S0 ∪ S2| = {}", want.0, want.1)
                }));
                let pairing = pairing_partition(&r).map(|p| {
                    p.iter().fold([0usize; 3], |mut acc, (_, j)| {
                        acc[*j as usize] += 1;
                        acc
                    })
                });
                out.push(Check::expect(format!("{id}: pairing census"), pairing.as_ref().is_ok_and(|c| *c == [s0, s1, s2]), || {
                    format!("{pairing:?}")
                }));
            }
            Err(e) => out.push(Check::fail(id, e.to_string())),
        }
    }
    out
}

fn halfspin() -> Vec<Check> {
    let mut out = Vec::new();
    let d5 = Component::new(CartanType::D, 5).expect("D5");
    let rs = RootSystem::new(&DynkinDiagram::new(vec![d5]));
    let hw = symext_core::WeightVector(vec![0, 0, 0, 0, 1]);
    let eps: Option<std::collections::BTreeSet<Vec<i64>>> = weight_system(&rs, &hw)
        .ok()
        .and_then(|m| m.weights.keys().map(|w| epsilon_coordinates_doubled(d5, w.as_slice()).ok()).collect());
    let want: std::collections::BTreeSet<Vec<i64>> = (0u32..32)
        .filter(|m| m.count_ones() % 2 == 1)
        .map(|m| (0..5).map(|i| if m >> i & 1 == 1 { 1 } else { -1 }).collect())
        .collect();
    out.push(Check::expect("halfspin: weights are ½(±ε1 … ±ε5) with an odd number of plus signs", eps.as_ref() == Some(&want), || {
        format!("{eps:?}")
    }));

    let e6 = DynkinDiagram::new(vec![Component::new(CartanType::E, 6).expect("E6")]);
    match surgery(&e6, 0) {
        Ok(r) => {
            let census = grade_census(&r);
            out.push(Check::expect("halfspin: surgery(E6, 1) census (1, 10, 5)", census == (1, 10, 5), || format!("{census:?}")));
            let c = r.module.sub.diagram.components()[0];
            let bad: Vec<String> = r
                .module
                .weights
                .iter()
                .filter(|g| {
                    epsilon_coordinates_doubled(c, g.labels.as_slice())
                        .map(|e| e.iter().filter(|&&x| x == 1).count() as i64 != 5 - 2 * g.grade || e.iter().any(|x| x.abs() != 1))
                        .unwrap_or(true)
                })
                .map(|g| format!("{} (grade {})", g.labels, g.grade))
                .collect();
            out.push(Check::expect("halfspin: V_j has the weights of Λ^(5-2j)E", bad.is_empty(), || bad.join(", ")));
            let row = identify_catalog_row(&r);
            out.push(Check::expect("halfspin: identified as the halfspin row", matches!(row, Ok(RowRef::Halfspin)), || {
                format!("{row:?}")
            }));
        }
        Err(e) => out.push(Check::fail("halfspin: surgery(E6, 1)", e.to_string())),
    }
    out
}

/// Families and parameters of the exhaustive matrix checks.
pub fn gauss_families() -> Vec<RealizeFamily> {
    let mut out: Vec<RealizeFamily> = (1..=3).map(|n| RealizeFamily::Sym2 { n }).collect();
    out.extend([4, 5].map(|n| RealizeFamily::Wedge2 { n }));
    out.extend((4..=6).map(|n| RealizeFamily::StandardSo { n }));
    for a in 1..=2 {
        for b in a..=2 {
            out.push(RealizeFamily::Tensor { a, b });
        }
    }
    out.push(RealizeFamily::HalfspinD5);
    out
}

fn gauss() -> Vec<Check> {
    let mut out = Vec::new();
    for fam in gauss_families() {
        match build_realization(fam) {
            Ok(cq) => {
                out.extend(full_check(&cq));
                if !printed_theta_stabilizes(&cq) {
                    out.push(Check::finding(
                        format!("{fam}: θ = Ad(I_(V0⊕V1, V2))"),
                        "does not preserve ρ(g̃); Ad(I_(V0⊕V2, V1)) is used",
                    ));
                }
            }
            Err(e) => out.push(Check::fail(format!("{fam}: build"), e.to_string())),
        }
    }
    out
}

fn pairing() -> Vec<Check> {
    let mut out = Vec::new();
    for (d, node, r) in all_surgeries() {
        let Ok(r) = r else { continue };
        if r.components.len() != 1 || r.module.sub.diagram.rank() == 0 {
            continue;
        }
        let id = format!("pairing grade {d} node {}", node + 1);
        match pairing_disagreements(&r) {
            Ok(v) if v.is_empty() => out.push(Check::pass(id)),
            Ok(v) => {
                let w: Vec<String> = v.iter().map(|(w, g, s)| format!("{w}: grade {g}, pairing solutions {s:?}")).collect();
                out.push(Check::finding(id, w.join("; ")));
            }
            Err(e) => out.push(Check::finding(id, e.to_string())),
        }
    }
    out
}
