//! Probability semantics: evaluating Hilbert-series numerators against
//! per-component survival probabilities, exact level reliabilities, the
//! truncation-bound ladder and the classical path/cut lower bounds.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::mvt::{build_mvt, hilbert_numerator, HilbertNumerator, MvtOptions};
use crate::par;
use crate::systems::SystemSpec;

/// Per-component survival tables `p_i(j) = P(state_i >= j)`.
#[derive(Clone, Debug)]
pub struct ProbabilityModel {
    survival: Vec<Vec<f64>>,
}

impl ProbabilityModel {
    /// Builds from survival tables; `values[i][j]` is `P(state_i >= j)`,
    /// indexed `j = 0..=M_i`, so `values[i][0]` must be exactly 1.
    pub fn from_survival(values: Vec<Vec<f64>>) -> Result<Self> {
        for (i, table) in values.iter().enumerate() {
            if table.is_empty() || table[0] != 1.0 {
                return Err(Error::Probability(format!(
                    "survival table of component {} must start at 1.0",
                    i + 1
                )));
            }
            for w in table.windows(2) {
                if w[1] > w[0] + 1e-12 {
                    return Err(Error::Probability(format!(
                        "survival table of component {} must be nonincreasing",
                        i + 1
                    )));
                }
            }
            if table.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
                return Err(Error::Probability(format!(
                    "survival probabilities of component {} must lie in [0, 1]",
                    i + 1
                )));
            }
        }
        Ok(Self { survival: values })
    }

    /// Builds from mass functions; `values[i][j]` is `P(state_i = j)`.
    pub fn from_mass(values: Vec<Vec<f64>>) -> Result<Self> {
        let mut survival = Vec::with_capacity(values.len());
        for (i, mass) in values.iter().enumerate() {
            if mass.is_empty() || mass.iter().any(|&p| p < 0.0) {
                return Err(Error::Probability(format!(
                    "mass function of component {} must be nonempty and nonnegative",
                    i + 1
                )));
            }
            let total: f64 = mass.iter().sum();
            if (total - 1.0).abs() > 1e-9 {
                return Err(Error::Probability(format!(
                    "mass function of component {} sums to {total}, expected 1",
                    i + 1
                )));
            }
            let mut table = vec![0.0; mass.len()];
            let mut acc = 0.0;
            for j in (0..mass.len()).rev() {
                acc += mass[j];
                table[j] = acc;
            }
            table[0] = 1.0;
            survival.push(table);
        }
        Ok(Self { survival })
    }

    pub fn num_components(&self) -> usize {
        self.survival.len()
    }

    /// Maximum level of component `i` covered by the table.
    pub fn max_level(&self, i: usize) -> u32 {
        (self.survival[i].len() - 1) as u32
    }

    /// `P(state_i >= j)`; 1 at level 0 and 0 beyond the table.
    pub fn survival(&self, i: usize, j: u32) -> f64 {
        if j == 0 {
            1.0
        } else {
            self.survival[i].get(j as usize).copied().unwrap_or(0.0)
        }
    }

    /// Mass functions recovered from the survival tables.
    pub fn mass(&self) -> Vec<Vec<f64>> {
        self.survival
            .iter()
            .map(|table| {
                (0..table.len())
                    .map(|j| table[j] - table.get(j + 1).copied().unwrap_or(0.0))
                    .collect()
            })
            .collect()
    }

    /// Probability weight of a multidegree: the product of the survival
    /// probabilities of its exponents.
    pub fn weight(&self, mu: &Monomial) -> Result<f64> {
        if mu.num_vars() != self.survival.len() {
            return Err(Error::Dimension {
                expected: self.survival.len(),
                got: mu.num_vars(),
            });
        }
        Ok(mu
            .exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| self.survival(i, e))
            .product())
    }

    pub fn matches(&self, spec: &SystemSpec) -> Result<()> {
        let caps = spec.component_max_levels();
        if caps.len() != self.survival.len() {
            return Err(Error::Dimension { expected: caps.len(), got: self.survival.len() });
        }
        for (i, &cap) in caps.iter().enumerate() {
            if self.max_level(i) < cap {
                return Err(Error::Probability(format!(
                    "component {} has cap {cap} but its table stops at level {}",
                    i + 1,
                    self.max_level(i)
                )));
            }
        }
        Ok(())
    }
}

/// Truncation ladder of a numerator evaluation: `partial_sums[t - 1]` is
/// the alternating sum of the first `t` homological summands, an upper
/// bound for odd `t` and a lower bound for even `t`; the last partial sum
/// is the exact reliability.
#[derive(Clone, Debug)]
pub struct BoundSequence {
    /// `S_d`: total weight of the dimension-`d` terms.
    pub dimension_totals: Vec<f64>,
    pub partial_sums: Vec<f64>,
    pub exact: f64,
}

impl BoundSequence {
    pub fn upper_bounds(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.partial_sums
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == 0)
            .map(|(i, &s)| (i + 1, s))
    }

    pub fn lower_bounds(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.partial_sums
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == 1)
            .map(|(i, &s)| (i + 1, s))
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Term weight as an unevaluated double-double, with each factor folded
/// in through an error-free product.
fn weight_parts(model: &ProbabilityModel, mu: &Monomial) -> (f64, f64) {
    let mut hi = 1.0f64;
    let mut lo = 0.0f64;
    for (i, &e) in mu.exponents().iter().enumerate() {
        let f = model.survival(i, e);
        let p = hi * f;
        let err = hi.mul_add(f, -p);
        lo = lo.mul_add(f, err);
        hi = p;
    }
    (hi, lo)
}

/// Evaluates a dimension-grouped numerator: per-dimension compensated
/// totals, the truncation ladder and the exact reliability. The large
/// alternating sums cancel heavily, so both the term products and the
/// running sums are kept in compensated double-double form.
pub fn evaluate(numerator: &HilbertNumerator, model: &ProbabilityModel) -> Result<BoundSequence> {
    if numerator.num_vars() != model.num_components() {
        return Err(Error::Dimension {
            expected: numerator.num_vars(),
            got: model.num_components(),
        });
    }
    let groups: Vec<&Vec<Monomial>> = numerator.terms_by_dimension().iter().collect();
    let totals: Vec<(f64, f64)> = par::map_vec(groups, |terms| {
        let mut sum = 0.0;
        let mut comp = 0.0;
        for mu in terms {
            let (hi, lo) = weight_parts(model, mu);
            let (s, e) = two_sum(sum, hi);
            sum = s;
            comp += e + lo;
        }
        (sum, comp)
    });
    let dimension_totals: Vec<f64> = totals.iter().map(|&(s, c)| s + c).collect();
    let mut partial_sums = Vec::with_capacity(totals.len());
    let mut acc = 0.0;
    let mut acc_comp = 0.0;
    for (d, &(s, c)) in totals.iter().enumerate() {
        let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
        let (t, e) = two_sum(acc, sign * s);
        acc = t;
        acc_comp += e + sign * c;
        partial_sums.push(acc + acc_comp);
    }
    let exact = *partial_sums.last().unwrap_or(&0.0);
    Ok(BoundSequence { dimension_totals, partial_sums, exact })
}

/// Reliabilities per level: `r_at_least` is `R_{S,j} = P(level >= j)` and
/// `r_exact` is `r_{S,j} = P(level = j)`.
#[derive(Clone, Debug)]
pub struct LevelReliability {
    pub level: u32,
    pub r_at_least: f64,
    pub r_exact: f64,
}

/// Full per-level reliability table, including `r_{S,0} = 1 - R_{S,1}`.
pub fn level_reliabilities(
    spec: &SystemSpec,
    model: &ProbabilityModel,
) -> Result<Vec<LevelReliability>> {
    spec.validate()?;
    model.matches(spec)?;
    let levels: Vec<u32> = (1..=spec.max_level()).collect();
    let results: Vec<Result<f64>> = par::map_vec(levels.clone(), |j| {
        let ideal = spec.reliability_ideal(j)?;
        if ideal.is_zero() {
            return Ok(0.0);
        }
        let tree = build_mvt(&ideal, &MvtOptions::default())?;
        let numerator = hilbert_numerator(&tree);
        Ok(evaluate(&numerator, model)?.exact)
    });
    let mut r: Vec<f64> = Vec::with_capacity(results.len() + 1);
    for res in results {
        r.push(res?);
    }
    r.push(0.0); // R_{S, M+1}
    let mut table = vec![LevelReliability { level: 0, r_at_least: 1.0, r_exact: 1.0 - r[0] }];
    for (idx, &j) in levels.iter().enumerate() {
        table.push(LevelReliability {
            level: j,
            r_at_least: r[idx],
            r_exact: r[idx] - r[idx + 1],
        });
    }
    Ok(table)
}

/// The classical lower bounds from minimal paths and minimal cuts.
#[derive(Clone, Copy, Debug)]
pub struct ClassicBounds {
    /// `l'`: best single minimal path.
    pub path_bound: f64,
    /// `l**`: product over minimal cuts of the coproduct of escape
    /// probabilities.
    pub cut_bound: f64,
}

pub fn classic_lower_bounds(
    spec: &SystemSpec,
    model: &ProbabilityModel,
    j: u32,
    budget: u64,
) -> Result<ClassicBounds> {
    spec.validate()?;
    model.matches(spec)?;
    let ideal = spec.reliability_ideal(j)?;
    let path_bound = ideal
        .generators()
        .iter()
        .map(|g| model.weight(g))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let cuts = spec.minimal_cuts(j, budget)?;
    let mut cut_bound = 1.0;
    for z in &cuts {
        // coproduct of P(state_i >= z_i + 1)
        let mut miss = 1.0;
        for (i, &zi) in z.iter().enumerate() {
            miss *= 1.0 - model.survival(i, zi + 1);
        }
        cut_bound *= 1.0 - miss;
    }
    if cuts.is_empty() {
        cut_bound = if ideal.is_zero() { 0.0 } else { 1.0 };
    }
    Ok(ClassicBounds { path_bound, cut_bound })
}
