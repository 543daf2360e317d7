use serde::Serialize;
use symext_core::catalog::{COMPLEX_ROWS, REAL_FORM_ROWS};
use symext_core::irreps::HighestWeightModule;
use symext_core::surgery::SurgeryResult;

#[derive(Debug, Serialize)]
pub struct ComponentJson {
    pub diagram: String,
    /// 1-based Bourbaki node of the factor joined to the deleted node.
    pub distinguished: usize,
    pub r: String,
}

#[derive(Debug, Serialize)]
pub struct GradedWeightJson {
    pub labels: Vec<i64>,
    pub grade: i64,
}

#[derive(Debug, Serialize)]
pub struct SurgeryJson {
    pub source: String,
    pub node: usize,
    pub components: Vec<ComponentJson>,
    pub highest_labels: Vec<i64>,
    pub weights: Vec<GradedWeightJson>,
    #[serde(rename = "N")]
    pub n: usize,
}

impl From<&SurgeryResult> for SurgeryJson {
    fn from(r: &SurgeryResult) -> Self {
        let offsets = r.module.sub.diagram.offsets();
        let mut weights: Vec<GradedWeightJson> = r
            .module
            .weights
            .iter()
            .map(|g| GradedWeightJson { labels: g.labels.0.clone(), grade: g.grade })
            .collect();
        weights.sort_by(|a, b| a.labels.cmp(&b.labels));
        SurgeryJson {
            source: r.source.to_string(),
            node: r.node + 1,
            components: r
                .components
                .iter()
                .map(|c| ComponentJson {
                    diagram: c.component.to_string(),
                    distinguished: c.distinguished - offsets[c.index] + 1,
                    r: c.r.to_string(),
                })
                .collect(),
            highest_labels: r.module.highest.0.clone(),
            weights,
            n: r.module.n(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WeightJson {
    pub labels: Vec<i64>,
    pub multiplicity: String,
}

#[derive(Debug, Serialize)]
pub struct ModuleJson {
    pub diagram: String,
    pub highest_labels: Vec<i64>,
    pub dimension: String,
    pub weights: Vec<WeightJson>,
}

impl From<&HighestWeightModule> for ModuleJson {
    fn from(m: &HighestWeightModule) -> Self {
        ModuleJson {
            diagram: m.diagram.to_string(),
            highest_labels: m.highest.0.clone(),
            dimension: m.dimension().to_string(),
            weights: m
                .weights
                .iter()
                .map(|(w, k)| WeightJson { labels: w.0.clone(), multiplicity: k.to_string() })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RealFormJson {
    pub pair: &'static str,
    pub ambient: &'static str,
}

#[derive(Debug, Serialize)]
pub struct CatalogRowJson {
    pub family: &'static str,
    pub quotient: &'static str,
    pub module: &'static str,
    #[serde(rename = "N")]
    pub n: &'static str,
    pub conditions: Vec<&'static str>,
    pub real_form_parameters: &'static str,
    pub real_forms: Vec<RealFormJson>,
    pub formulas: Vec<&'static str>,
    pub signature_oracle: bool,
}

pub fn catalog_rows() -> Vec<CatalogRowJson> {
    COMPLEX_ROWS
        .iter()
        .map(|c| {
            let real = REAL_FORM_ROWS.iter().find(|r| r.family == c.family);
            CatalogRowJson {
                family: c.family.id(),
                quotient: c.quotient,
                module: c.module,
                n: c.n_formula,
                conditions: if c.conditions.is_empty() { vec![] } else { vec![c.conditions] },
                real_form_parameters: real.map_or("", |r| r.params),
                real_forms: real
                    .map(|r| r.forms.iter().map(|&(pair, ambient)| RealFormJson { pair, ambient }).collect())
                    .unwrap_or_default(),
                formulas: real.map(|r| r.formulas.to_vec()).unwrap_or_default(),
                signature_oracle: real.is_some_and(|r| r.has_oracle),
            }
        })
        .collect()
}

