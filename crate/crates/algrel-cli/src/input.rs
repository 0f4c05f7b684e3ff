//! JSON input documents: system descriptions and the tank-sweep scenario.

use serde::Deserialize;

use algrel::{ProbabilityModel, SystemSpec};

use crate::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub system: SystemSection,
    pub components: Vec<ComponentSection>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSection {
    #[serde(rename = "type")]
    pub kind: String,
    pub k: Option<u32>,
    pub thresholds: Option<Vec<u32>>,
    pub m: Option<u32>,
    pub k_sum: Option<u32>,
    pub n: Option<usize>,
    pub system_max_level: Option<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSection {
    pub max_level: u32,
    pub probabilities: ProbabilitySection,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbabilitySection {
    pub kind: String,
    pub values: Vec<f64>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

impl SystemDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| invalid(format!("bad system document: {e}")))
    }

    pub fn spec(&self) -> Result<SystemSpec, CliError> {
        let caps: Vec<u32> = self.components.iter().map(|c| c.max_level).collect();
        let sys = &self.system;
        let spec = match sys.kind.as_str() {
            "simple_kn" => {
                let k = sys.k.ok_or_else(|| invalid("simple_kn requires \"k\""))?;
                if caps.is_empty() {
                    return Err(invalid("simple_kn requires components"));
                }
                // default system max level: the k-th largest component cap,
                // the highest level the structure function can reach
                let system_max_level = match sys.system_max_level {
                    Some(m) => m,
                    None => {
                        let mut sorted = caps.clone();
                        sorted.sort_unstable_by(|a, b| b.cmp(a));
                        sorted
                            .get(k as usize - 1)
                            .copied()
                            .ok_or_else(|| invalid("simple_kn requires k <= number of components"))?
                    }
                };
                SystemSpec::SimpleKn {
                    k: k as usize,
                    component_max_levels: caps,
                    system_max_level,
                }
            }
            "generalized_kn" => {
                let thresholds = sys
                    .thresholds
                    .clone()
                    .ok_or_else(|| invalid("generalized_kn requires \"thresholds\""))?;
                SystemSpec::GeneralizedKn {
                    thresholds: thresholds.into_iter().map(|t| t as usize).collect(),
                    component_max_levels: caps,
                }
            }
            "sum_threshold" => {
                let m = sys.m.ok_or_else(|| invalid("sum_threshold requires \"m\""))?;
                let k = sys.k_sum.ok_or_else(|| invalid("sum_threshold requires \"k_sum\""))?;
                let n = sys.n.unwrap_or(self.components.len());
                if n != self.components.len() {
                    return Err(invalid(format!(
                        "sum_threshold \"n\" = {n} but {} components given",
                        self.components.len()
                    )));
                }
                if caps.iter().any(|&c| c != m) {
                    return Err(invalid("sum_threshold components must all have max_level m"));
                }
                SystemSpec::SumThreshold { n, m, k }
            }
            "consecutive_kn" => {
                let k = sys.k.ok_or_else(|| invalid("consecutive_kn requires \"k\""))?;
                if caps.iter().any(|&c| c != 1) {
                    return Err(invalid("consecutive_kn components must be binary (max_level 1)"));
                }
                SystemSpec::ConsecutiveKn { n: self.components.len(), k: k as usize }
            }
            other => return Err(invalid(format!("unknown system type {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn model(&self) -> Result<ProbabilityModel, CliError> {
        let mut mass = Vec::new();
        let mut survival = Vec::new();
        let mut kinds = self.components.iter().map(|c| c.probabilities.kind.as_str());
        let first = kinds.next().ok_or_else(|| invalid("no components given"))?;
        if !kinds.all(|k| k == first) {
            return Err(invalid("all components must use the same probability kind"));
        }
        for (i, c) in self.components.iter().enumerate() {
            let expected = c.max_level as usize + 1;
            if c.probabilities.values.len() != expected {
                return Err(invalid(format!(
                    "component {}: expected {expected} probability values, got {}",
                    i + 1,
                    c.probabilities.values.len()
                )));
            }
            match c.probabilities.kind.as_str() {
                "mass" => mass.push(c.probabilities.values.clone()),
                "survival" => survival.push(c.probabilities.values.clone()),
                other => return Err(invalid(format!("unknown probability kind {other:?}"))),
            }
        }
        let model = if mass.is_empty() {
            ProbabilityModel::from_survival(survival)?
        } else {
            ProbabilityModel::from_mass(mass)?
        };
        Ok(model)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TankDocument {
    pub capacity_loads: u32,
    pub current_level_loads: u32,
    pub incoming_loads: u32,
    /// Inclusive range of total fill levels `l` to sweep.
    pub level_range: [u32; 2],
    /// Per-tank survival arrays: `survival_model[i][j] = P(tank i can
    /// accept >= j loads)`. Optional when `--law` supplies a formula.
    pub survival_model: Option<Vec<Vec<f64>>>,
}

impl TankDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: Self =
            serde_json::from_str(text).map_err(|e| invalid(format!("bad tank document: {e}")))?;
        let [lo, hi] = doc.level_range;
        if lo > hi {
            return Err(invalid("level_range must be [lo, hi] with lo <= hi"));
        }
        if lo < doc.current_level_loads {
            return Err(invalid("level_range must start at or above current_level_loads"));
        }
        if hi > doc.capacity_loads {
            return Err(invalid("level_range must stay within capacity_loads"));
        }
        Ok(doc)
    }

    /// Survival tables covering headroom up to `m_max` loads per tank.
    pub fn survival_tables(&self, law: Option<&str>) -> Result<Vec<Vec<f64>>, CliError> {
        let m_max = (self.level_range[1] - self.current_level_loads) as usize;
        if let Some(law) = law {
            let (c, e) = parse_law(law)?;
            let table: Vec<f64> = (0..=m_max)
                .map(|j| (1.0 - (c * j as f64).powf(e)).clamp(0.0, 1.0))
                .collect();
            return Ok(vec![table; 5].into_iter().take(self.num_tanks()).collect());
        }
        let tables = self
            .survival_model
            .clone()
            .ok_or_else(|| invalid("tank document needs survival_model or --law"))?;
        for (i, t) in tables.iter().enumerate() {
            if t.len() < m_max + 1 {
                return Err(invalid(format!(
                    "tank {}: survival_model must cover levels 0..={m_max}",
                    i + 1
                )));
            }
        }
        Ok(tables)
    }

    pub fn num_tanks(&self) -> usize {
        self.survival_model.as_ref().map(|t| t.len()).unwrap_or(5)
    }
}

/// Parses a law of the form `1-(C*j)^E` into `(C, E)`.
fn parse_law(law: &str) -> Result<(f64, f64), CliError> {
    let inner = law
        .strip_prefix("1-(")
        .and_then(|s| s.split_once("*j)^"))
        .ok_or_else(|| invalid("law must have the form \"1-(C*j)^E\""))?;
    let c: f64 = inner.0.parse().map_err(|_| invalid("bad coefficient in law"))?;
    let e: f64 = inner.1.parse().map_err(|_| invalid("bad exponent in law"))?;
    Ok((c, e))
}
