//! Slow reference implementations used for cross-checking: brute-force
//! lattice sums, direct minimal-generator enumeration and the
//! inclusion-exclusion form of the Hilbert numerator.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::par;
use crate::reliability::ProbabilityModel;
use crate::systems::{decode_state, StateVector, SystemSpec};

fn lattice_states(spec: &SystemSpec, budget: u64) -> Result<u64> {
    let states = spec.lattice_size();
    if states > budget as u128 {
        return Err(Error::Budget { states, budget });
    }
    Ok(states as u64)
}

/// `R_{S,j}` as a direct mass-weighted sum over the whole state lattice.
pub fn brute_force_reliability(
    spec: &SystemSpec,
    model: &ProbabilityModel,
    j: u32,
    budget: u64,
) -> Result<f64> {
    spec.validate()?;
    model.matches(spec)?;
    let total = lattice_states(spec, budget)?;
    let caps = spec.component_max_levels();
    let mass = model.mass();
    // compensated accumulation keeps the oracle accurate over large
    // lattices
    let (sum, compensation) = par::map_reduce_ranges(
        total,
        |range| {
            let mut acc = 0.0;
            let mut c = 0.0;
            for idx in range {
                let x = decode_state(idx, &caps);
                if spec.phi_unchecked(&x) >= j {
                    let mut w = 1.0;
                    for (i, &s) in x.iter().enumerate() {
                        w *= mass[i].get(s as usize).copied().unwrap_or(0.0);
                    }
                    let t = acc + w;
                    c += if acc.abs() >= w.abs() { (acc - t) + w } else { (w - t) + acc };
                    acc = t;
                }
            }
            (acc, c)
        },
        |(a, ca), (b, cb)| {
            let t = a + b;
            let c = if a.abs() >= b.abs() { (a - t) + b } else { (b - t) + a };
            (t, ca + cb + c)
        },
        (0.0, 0.0),
    );
    Ok(sum + compensation)
}

/// Minimal `j`-working states found by scanning the lattice: states where
/// the system reaches level `j` but no coordinate decrement does.
pub fn brute_force_generators(
    spec: &SystemSpec,
    j: u32,
    budget: u64,
) -> Result<Vec<StateVector>> {
    spec.validate()?;
    let total = lattice_states(spec, budget)?;
    let caps = spec.component_max_levels();
    let mut found = par::map_reduce_ranges(
        total,
        |range| {
            let mut acc = Vec::new();
            for idx in range {
                let mut x = decode_state(idx, &caps);
                if spec.phi_unchecked(&x) < j {
                    continue;
                }
                let minimal = (0..x.len()).all(|i| {
                    if x[i] == 0 {
                        return true;
                    }
                    x[i] -= 1;
                    let below = spec.phi_unchecked(&x) < j;
                    x[i] += 1;
                    below
                });
                if minimal {
                    acc.push(x);
                }
            }
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
        Vec::new(),
    );
    found.sort_by_key(|x| Monomial::new(x.clone()));
    Ok(found)
}

/// Numerator coefficients by inclusion-exclusion over generator subsets:
/// a signed lcm per nonempty subset. Exponential in the number of
/// generators, so it refuses ideals with more than 20 of them.
pub fn inclusion_exclusion_numerator(ideal: &MonomialIdeal) -> Result<BTreeMap<Monomial, i64>> {
    let gens = ideal.generators();
    if gens.len() > 20 {
        return Err(Error::Budget {
            states: 1u128.checked_shl(gens.len() as u32).unwrap_or(u128::MAX),
            budget: 1 << 20,
        });
    }
    let mut coefficients: BTreeMap<Monomial, i64> = BTreeMap::new();
    for mask in 1u32..(1u32 << gens.len()) {
        let mut lcm = Monomial::one(ideal.num_vars());
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = lcm.lcm(g)?;
            }
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        *coefficients.entry(lcm).or_insert(0) += sign;
    }
    coefficients.retain(|_, c| *c != 0);
    Ok(coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvt::{build_mvt, hilbert_numerator, MvtOptions};
    use crate::reliability::{evaluate, level_reliabilities};

    fn example_4_4() -> (SystemSpec, ProbabilityModel) {
        let spec = SystemSpec::GeneralizedKn {
            thresholds: vec![3, 2, 2],
            component_max_levels: vec![3, 3, 3],
        };
        let model = ProbabilityModel::from_mass(vec![
            vec![0.1, 0.2, 0.3, 0.4],
            vec![0.1, 0.1, 0.2, 0.6],
            vec![0.1, 0.2, 0.4, 0.3],
        ])
        .unwrap();
        (spec, model)
    }

    #[test]
    fn brute_force_matches_algebraic_reliabilities() {
        let (spec, model) = example_4_4();
        let table = level_reliabilities(&spec, &model).unwrap();
        for row in table.iter().skip(1) {
            let direct = brute_force_reliability(&spec, &model, row.level, 1 << 20).unwrap();
            assert!(
                (direct - row.r_at_least).abs() < 1e-12,
                "level {}: {direct} vs {}",
                row.level,
                row.r_at_least
            );
        }
    }

    #[test]
    fn brute_force_generators_match_ideal() {
        let (spec, _) = example_4_4();
        for j in 1..=3 {
            let direct = brute_force_generators(&spec, j, 1 << 20).unwrap();
            let gens: Vec<StateVector> = spec
                .reliability_ideal(j)
                .unwrap()
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect();
            assert_eq!(direct, gens, "level {j}");
        }
    }

    #[test]
    fn inclusion_exclusion_agrees_with_mvt() {
        let (spec, model) = example_4_4();
        for j in 1..=3 {
            let ideal = spec.reliability_ideal(j).unwrap();
            let ie = inclusion_exclusion_numerator(&ideal).unwrap();
            let tree = build_mvt(&ideal, &MvtOptions::default()).unwrap();
            let numerator = hilbert_numerator(&tree);
            assert_eq!(ie, numerator.coefficient_map(), "level {j}");
            // the collapsed form evaluates to the same reliability
            let exact = evaluate(&numerator, &model).unwrap().exact;
            let collapsed: f64 = ie
                .iter()
                .map(|(mu, &c)| c as f64 * model.weight(mu).unwrap())
                .sum();
            assert!((collapsed - exact).abs() < 1e-12, "level {j}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let (spec, model) = example_4_4();
        let err = brute_force_reliability(&spec, &model, 1, 16).unwrap_err();
        assert!(matches!(err, Error::Budget { states: 64, budget: 16 }));
    }

    #[test]
    fn generator_count_cap() {
        let spec = SystemSpec::SumThreshold { n: 6, m: 3, k: 5 };
        let ideal = spec.reliability_ideal(1).unwrap();
        assert!(ideal.num_generators() > 20);
        assert!(inclusion_exclusion_numerator(&ideal).is_err());
    }
}
