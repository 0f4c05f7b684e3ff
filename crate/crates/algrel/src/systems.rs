//! The four system families and their reliability ideals.
//!
//! A system is described by a [`SystemSpec`]. For each performance level
//! `j` the monomials of the `j`-reliability ideal are exactly the component
//! states at which the system performs at level `j` or above; the minimal
//! generators are the minimal `j`-working states (lower boundary points,
//! minimal paths). Upper boundary points, maximal standard pairs and
//! minimal cuts are recovered from the same lattice.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::par;

/// Default cap on the number of lattice states enumerated by boundary-point
/// and oracle scans.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// A tuple of component states.
pub type StateVector = Vec<u32>;

/// One of the four supported system families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSpec {
    /// Multi-state k-out-of-n: the system is at level `j` or above iff at
    /// least `k` components are at level `j` or above (the structure
    /// function is the k-th largest component state).
    SimpleKn {
        k: usize,
        component_max_levels: Vec<u32>,
        system_max_level: u32,
    },
    /// Generalized multi-state k-out-of-n:G with per-level thresholds
    /// `(k_1, ..., k_M)`: level `j` or above iff some `l >= j` has at least
    /// `k_l` components at level `l` or above.
    GeneralizedKn {
        thresholds: Vec<usize>,
        component_max_levels: Vec<u32>,
    },
    /// Binary system with `n` components at levels `0..=m`, working iff the
    /// component states sum to at least `k`.
    SumThreshold { n: usize, m: u32, k: u32 },
    /// Binary consecutive k-out-of-n: working iff some `k` consecutive
    /// components are nonzero.
    ConsecutiveKn { n: usize, k: usize },
}

/// A standard pair `(x^mu, sigma)`: base monomial plus free variable set,
/// disjoint from the base's support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StandardPair {
    pub base: Monomial,
    pub free_set: Vec<usize>,
}

impl SystemSpec {
    pub fn num_components(&self) -> usize {
        match self {
            SystemSpec::SimpleKn { component_max_levels, .. } => component_max_levels.len(),
            SystemSpec::GeneralizedKn { component_max_levels, .. } => {
                component_max_levels.len()
            }
            SystemSpec::SumThreshold { n, .. } | SystemSpec::ConsecutiveKn { n, .. } => *n,
        }
    }

    /// Maximum performance level `M` of the system.
    pub fn max_level(&self) -> u32 {
        match self {
            SystemSpec::SimpleKn { system_max_level, .. } => *system_max_level,
            SystemSpec::GeneralizedKn { thresholds, .. } => thresholds.len() as u32,
            SystemSpec::SumThreshold { .. } | SystemSpec::ConsecutiveKn { .. } => 1,
        }
    }

    /// Per-component level caps `(M_1, ..., M_n)`.
    pub fn component_max_levels(&self) -> Vec<u32> {
        match self {
            SystemSpec::SimpleKn { component_max_levels, .. } => component_max_levels.clone(),
            SystemSpec::GeneralizedKn { component_max_levels, .. } => {
                component_max_levels.clone()
            }
            SystemSpec::SumThreshold { n, m, .. } => vec![*m; *n],
            SystemSpec::ConsecutiveKn { n, .. } => vec![1; *n],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_components();
        let fail = |msg: String| Err(Error::Domain(msg));
        match self {
            SystemSpec::SimpleKn { k, component_max_levels, system_max_level } => {
                if *k < 1 || *k > n {
                    return fail(format!("k = {k} must be in 1..={n}"));
                }
                if component_max_levels.iter().any(|&m| m < 1) {
                    return fail("component max levels must be >= 1".into());
                }
                if *system_max_level < 1 {
                    return fail("system max level must be >= 1".into());
                }
            }
            SystemSpec::GeneralizedKn { thresholds, component_max_levels } => {
                if thresholds.is_empty() {
                    return fail("thresholds must be nonempty".into());
                }
                if thresholds.iter().any(|&k| k < 1 || k > n) {
                    return fail(format!("all thresholds must be in 1..={n}"));
                }
                if component_max_levels.iter().any(|&m| m < 1) {
                    return fail("component max levels must be >= 1".into());
                }
            }
            SystemSpec::SumThreshold { n, m, k } => {
                if *n < 1 || *m < 1 {
                    return fail("n and m must be >= 1".into());
                }
                if *k > *m * *n as u32 {
                    return fail(format!("k = {k} exceeds n*m = {}", *m * *n as u32));
                }
            }
            SystemSpec::ConsecutiveKn { n, k } => {
                if *k < 1 || *k > *n {
                    return fail(format!("k = {k} must be in 1..={n}"));
                }
            }
        }
        Ok(())
    }

    /// Number of states in the full component-state lattice.
    pub fn lattice_size(&self) -> u128 {
        self.component_max_levels()
            .iter()
            .map(|&m| (m as u128) + 1)
            .product()
    }

    fn check_state(&self, x: &[u32]) -> Result<()> {
        let caps = self.component_max_levels();
        if x.len() != caps.len() {
            return Err(Error::Dimension { expected: caps.len(), got: x.len() });
        }
        for (i, (&s, &cap)) in x.iter().zip(&caps).enumerate() {
            if s > cap {
                return Err(Error::Domain(format!(
                    "state {s} of component {} exceeds its cap {cap}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    fn check_level(&self, j: u32) -> Result<()> {
        if j < 1 || j > self.max_level() {
            return Err(Error::Domain(format!(
                "level {j} out of range 1..={}",
                self.max_level()
            )));
        }
        Ok(())
    }

    /// Evaluates the structure function at a state vector.
    pub fn structure_function(&self, x: &[u32]) -> Result<u32> {
        self.check_state(x)?;
        Ok(self.phi_unchecked(x))
    }

    pub(crate) fn phi_unchecked(&self, x: &[u32]) -> u32 {
        match self {
            SystemSpec::SimpleKn { k, system_max_level, .. } => {
                // k-th largest component state, capped at the system level
                let mut s: Vec<u32> = x.to_vec();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s[*k - 1].min(*system_max_level)
            }
            SystemSpec::GeneralizedKn { thresholds, .. } => {
                // max l with N_l >= k_l
                let mut level = 0;
                for (idx, &k_l) in thresholds.iter().enumerate() {
                    let l = (idx + 1) as u32;
                    let n_l = x.iter().filter(|&&s| s >= l).count();
                    if n_l >= k_l {
                        level = l;
                    }
                }
                level
            }
            SystemSpec::SumThreshold { k, .. } => {
                if x.iter().sum::<u32>() >= *k {
                    1
                } else {
                    0
                }
            }
            SystemSpec::ConsecutiveKn { k, .. } => {
                let mut run = 0usize;
                for &s in x {
                    if s > 0 {
                        run += 1;
                        if run >= *k {
                            return 1;
                        }
                    } else {
                        run = 0;
                    }
                }
                0
            }
        }
    }

    /// Builds the `j`-reliability ideal. Unreachable levels give the zero
    /// ideal.
    pub fn reliability_ideal(&self, j: u32) -> Result<MonomialIdeal> {
        self.validate()?;
        self.check_level(j)?;
        let n = self.num_components();
        match self {
            SystemSpec::SimpleKn { k, component_max_levels, .. } => {
                Ok(simple_kn_ideal(*k, component_max_levels, j))
            }
            SystemSpec::GeneralizedKn { thresholds, component_max_levels } => {
                let mut ideal = MonomialIdeal::zero(n);
                for i in j..=thresholds.len() as u32 {
                    let k_i = thresholds[(i - 1) as usize];
                    let summand = simple_kn_ideal(k_i, component_max_levels, i);
                    ideal = ideal.sum(&summand)?;
                }
                Ok(ideal)
            }
            SystemSpec::SumThreshold { n, m, k } => {
                if *k == 0 {
                    return Ok(MonomialIdeal::unit(*n));
                }
                if *k > *m * *n as u32 {
                    return Ok(MonomialIdeal::zero(*n));
                }
                let mut gens = Vec::new();
                let mut current = vec![0u32; *n];
                bounded_compositions(*k, *m, 0, &mut current, &mut gens);
                // same-degree generators are pairwise incomparable
                gens.sort();
                Ok(MonomialIdeal::from_minimal_sorted(*n, gens))
            }
            SystemSpec::ConsecutiveKn { n, k } => {
                let gens: Vec<Monomial> = (0..=n - k)
                    .map(|start| {
                        let mut e = vec![0u32; *n];
                        e[start..start + k].fill(1);
                        Monomial::new(e)
                    })
                    .collect();
                Ok(MonomialIdeal::from_minimal_sorted(*n, gens))
            }
        }
    }

    /// Lower boundary points to level `j`: exponent vectors of the minimal
    /// generators of the `j`-reliability ideal.
    pub fn lower_boundary_points(&self, j: u32) -> Result<Vec<StateVector>> {
        let ideal = self.reliability_ideal(j)?;
        Ok(ideal
            .generators()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect())
    }

    /// Upper boundary points to level `j`: maximal states stuck at level
    /// `<= j`. Enumerates the state lattice within `budget`.
    pub fn upper_boundary_points(&self, j: u32, budget: u64) -> Result<Vec<StateVector>> {
        self.validate()?;
        if j >= self.max_level() {
            return Err(Error::Domain(format!(
                "upper boundary level {j} out of range 0..={}",
                self.max_level() - 1
            )));
        }
        let size = self.lattice_size();
        if size > budget as u128 {
            return Err(Error::Budget { states: size, budget });
        }
        let caps = self.component_max_levels();
        let total = size as u64;
        let map = |range: std::ops::Range<u64>| -> Vec<StateVector> {
            let mut found = Vec::new();
            let mut state = decode_state(range.start, &caps);
            for idx in range.clone() {
                if idx != range.start {
                    advance_state(&mut state, &caps);
                }
                if self.phi_unchecked(&state) > j {
                    continue;
                }
                let mut maximal = true;
                for i in 0..state.len() {
                    if state[i] < caps[i] {
                        state[i] += 1;
                        let above = self.phi_unchecked(&state) > j;
                        state[i] -= 1;
                        if !above {
                            maximal = false;
                            break;
                        }
                    }
                }
                if maximal {
                    found.push(state.clone());
                }
            }
            found
        };
        let mut points = par::map_reduce_ranges(
            total,
            map,
            |mut acc: Vec<StateVector>, mut part| {
                acc.append(&mut part);
                acc
            },
            Vec::new(),
        );
        points.sort();
        Ok(points)
    }

    /// Maximal standard pairs of the `j`-reliability ideal, obtained through
    /// the bijection with upper boundary points to level `j - 1`.
    pub fn maximal_standard_pairs(&self, j: u32, budget: u64) -> Result<Vec<StandardPair>> {
        self.check_level(j)?;
        let caps = self.component_max_levels();
        let points = self.upper_boundary_points(j - 1, budget)?;
        let mut pairs: Vec<StandardPair> = points
            .into_iter()
            .map(|alpha| {
                let free_set: Vec<usize> = (0..alpha.len())
                    .filter(|&i| alpha[i] == caps[i])
                    .collect();
                let mut base = alpha;
                for &i in &free_set {
                    base[i] = 0;
                }
                StandardPair { base: Monomial::new(base), free_set }
            })
            .collect();
        pairs.sort();
        Ok(pairs)
    }

    /// Minimal cuts to level `j`: the upper boundary points to level
    /// `j - 1`. When the lattice exceeds `budget`, a combinatorial fast
    /// path is used for generalized k-out-of-n systems with homogeneous
    /// component caps.
    pub fn minimal_cuts(&self, j: u32, budget: u64) -> Result<Vec<StateVector>> {
        self.check_level(j)?;
        if self.lattice_size() <= budget as u128 {
            return self.upper_boundary_points(j - 1, budget);
        }
        if let SystemSpec::GeneralizedKn { thresholds, component_max_levels } = self {
            let m = component_max_levels[0];
            if component_max_levels.iter().all(|&c| c == m)
                && m as usize == thresholds.len()
            {
                let mut cuts = generalized_cuts_fast(
                    thresholds,
                    component_max_levels.len(),
                    m,
                    j,
                );
                cuts.sort();
                return Ok(cuts);
            }
        }
        Err(Error::Budget { states: self.lattice_size(), budget })
    }

    /// Fast-path minimal cuts for homogeneous generalized systems,
    /// independent of the lattice scan. Exposed for cross-checking.
    pub fn minimal_cuts_combinatorial(&self, j: u32) -> Result<Vec<StateVector>> {
        self.check_level(j)?;
        match self {
            SystemSpec::GeneralizedKn { thresholds, component_max_levels } => {
                let m = component_max_levels[0];
                if component_max_levels.iter().any(|&c| c != m)
                    || m as usize != thresholds.len()
                {
                    return Err(Error::Domain(
                        "combinatorial cuts require homogeneous caps equal to M".into(),
                    ));
                }
                let mut cuts =
                    generalized_cuts_fast(thresholds, component_max_levels.len(), m, j);
                cuts.sort();
                Ok(cuts)
            }
            _ => Err(Error::Domain(
                "combinatorial cuts are only defined for generalized systems".into(),
            )),
        }
    }
}

/// Ideal of Def. 3.7: generators pick `k` components with cap `>= j` at
/// level `j`. Zero ideal when fewer than `k` components can reach `j`.
fn simple_kn_ideal(k: usize, caps: &[u32], j: u32) -> MonomialIdeal {
    let n = caps.len();
    let eligible: Vec<usize> = (0..n).filter(|&i| caps[i] >= j).collect();
    if eligible.len() < k {
        return MonomialIdeal::zero(n);
    }
    let mut gens = Vec::new();
    let mut subset = Vec::with_capacity(k);
    k_subsets(&eligible, k, 0, &mut subset, &mut |sigma| {
        let mut e = vec![0u32; n];
        for &i in sigma {
            e[i] = j;
        }
        gens.push(Monomial::new(e));
    });
    gens.sort();
    MonomialIdeal::from_minimal_sorted(n, gens)
}

fn k_subsets(
    items: &[usize],
    k: usize,
    from: usize,
    current: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if current.len() == k {
        emit(current);
        return;
    }
    let need = k - current.len();
    for idx in from..=items.len().saturating_sub(need) {
        current.push(items[idx]);
        k_subsets(items, k, idx + 1, current, emit);
        current.pop();
    }
}

/// All exponent vectors summing to `k` with entries in `0..=m`.
fn bounded_compositions(
    remaining: u32,
    m: u32,
    pos: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    let n = current.len();
    if pos == n {
        if remaining == 0 {
            out.push(Monomial::new(current.clone()));
        }
        return;
    }
    let tail_cap = m * (n - pos - 1) as u32;
    let lo = remaining.saturating_sub(tail_cap);
    let hi = remaining.min(m);
    for v in lo..=hi {
        current[pos] = v;
        bounded_compositions(remaining - v, m, pos + 1, current, out);
        current[pos] = 0;
    }
}

/// Minimal cuts of a homogeneous generalized k-out-of-n system at level `j`
/// by per-level deficiency patterns: choose occupancy counts `N_l = k_l - 1`
/// wherever a lower level is occupied, then emit every assignment of
/// components to levels.
fn generalized_cuts_fast(thresholds: &[usize], n: usize, m: u32, j: u32) -> Vec<StateVector> {
    let big_m = m as usize;
    let j = j as usize;
    // profile[idx] = N_{j + idx} for levels j..=M
    let levels = big_m - j + 1;
    let mut cuts = Vec::new();
    let mut profile = vec![0usize; levels];
    enumerate_profiles(thresholds, n, j, 0, &mut profile, &mut cuts);
    cuts
}

fn enumerate_profiles(
    thresholds: &[usize],
    n: usize,
    j: usize,
    idx: usize,
    profile: &mut Vec<usize>,
    cuts: &mut Vec<StateVector>,
) {
    let big_m = thresholds.len();
    let levels = big_m - j + 1;
    if idx == levels {
        // occupancy per level: c[0] is level j-1, c[s] is level j-1+s
        let mut c = vec![0usize; levels + 1];
        c[0] = n - profile[0];
        for s in 0..levels - 1 {
            c[s + 1] = profile[s] - profile[s + 1];
        }
        c[levels] = profile[levels - 1];
        // a component below its cap must be blocked by a saturated level
        for (s, &count) in c.iter().take(levels).enumerate() {
            let level_above = j + s; // incrementing from level j-1+s reaches j+s
            if count > 0 && profile[level_above - j] != thresholds[level_above - 1] - 1 {
                return;
            }
        }
        emit_assignments(&c, j, n, cuts);
        return;
    }
    let k_l = thresholds[j + idx - 1];
    let upper = if idx == 0 { k_l - 1 } else { (k_l - 1).min(profile[idx - 1]) };
    for v in 0..=upper.min(n) {
        profile[idx] = v;
        enumerate_profiles(thresholds, n, j, idx + 1, profile, cuts);
    }
    profile[idx] = 0;
}

/// Emits every state vector with `c[s]` components at level `j - 1 + s`.
fn emit_assignments(c: &[usize], j: usize, n: usize, cuts: &mut Vec<StateVector>) {
    let mut state = vec![(j - 1) as u32; n];
    let free: Vec<usize> = (0..n).collect();
    assign_level(c, 1, j, &free, &mut state, cuts);
}

fn assign_level(
    c: &[usize],
    s: usize,
    j: usize,
    free: &[usize],
    state: &mut [u32],
    cuts: &mut Vec<StateVector>,
) {
    if s == c.len() {
        cuts.push(state.to_vec());
        return;
    }
    let want = c[s];
    let mut subset = Vec::with_capacity(want);
    k_subsets(free, want, 0, &mut subset, &mut |sigma| {
        for &i in sigma {
            state[i] = (j - 1 + s) as u32;
        }
        let rest: Vec<usize> = free.iter().copied().filter(|i| !sigma.contains(i)).collect();
        let mut state2 = state.to_vec();
        assign_level(c, s + 1, j, &rest, &mut state2, cuts);
        for &i in sigma {
            state[i] = (j - 1) as u32;
        }
    });
}

pub(crate) fn decode_state(mut idx: u64, caps: &[u32]) -> StateVector {
    let mut state = vec![0u32; caps.len()];
    for i in (0..caps.len()).rev() {
        let radix = caps[i] as u64 + 1;
        state[i] = (idx % radix) as u32;
        idx /= radix;
    }
    state
}

fn advance_state(state: &mut [u32], caps: &[u32]) {
    for i in (0..state.len()).rev() {
        if state[i] < caps[i] {
            state[i] += 1;
            return;
        }
        state[i] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_3_8() -> SystemSpec {
        SystemSpec::SimpleKn {
            k: 2,
            component_max_levels: vec![4, 3, 2, 2, 1],
            system_max_level: 3,
        }
    }

    fn example_4_4() -> SystemSpec {
        SystemSpec::GeneralizedKn {
            thresholds: vec![3, 2, 2],
            component_max_levels: vec![3, 3, 3],
        }
    }

    fn vecs(vs: &[&[u32]]) -> Vec<StateVector> {
        let mut out: Vec<StateVector> = vs.iter().map(|v| v.to_vec()).collect();
        out.sort();
        out
    }

    #[test]
    fn structure_function_simple() {
        let s = example_3_8();
        assert_eq!(s.structure_function(&[0, 0, 2, 2, 0]).unwrap(), 2);
        assert_eq!(s.structure_function(&[4, 0, 0, 0, 0]).unwrap(), 0);
        assert_eq!(s.structure_function(&[3, 3, 0, 0, 0]).unwrap(), 3);
        assert!(s.structure_function(&[5, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn structure_function_generalized() {
        let s = example_4_4();
        assert_eq!(s.structure_function(&[1, 1, 1]).unwrap(), 1);
        assert_eq!(s.structure_function(&[2, 2, 0]).unwrap(), 2);
        assert_eq!(s.structure_function(&[3, 3, 0]).unwrap(), 3);
        assert_eq!(s.structure_function(&[2, 1, 0]).unwrap(), 0);
    }

    #[test]
    fn structure_function_sum_and_consecutive() {
        let s = SystemSpec::SumThreshold { n: 4, m: 3, k: 5 };
        assert_eq!(s.structure_function(&[3, 1, 1, 0]).unwrap(), 1);
        assert_eq!(s.structure_function(&[3, 1, 0, 0]).unwrap(), 0);

        let c = SystemSpec::ConsecutiveKn { n: 5, k: 2 };
        assert_eq!(c.structure_function(&[0, 1, 1, 0, 0]).unwrap(), 1);
        assert_eq!(c.structure_function(&[1, 0, 1, 0, 1]).unwrap(), 0);
    }

    #[test]
    fn example_3_8_ideals() {
        let s = example_3_8();
        let i1 = s.reliability_ideal(1).unwrap();
        assert_eq!(i1.num_generators(), 10);
        let i2 = s.reliability_ideal(2).unwrap();
        assert_eq!(i2.num_generators(), 6);
        let i3 = s.reliability_ideal(3).unwrap();
        assert_eq!(
            i3.generators(),
            &[Monomial::new(vec![3, 3, 0, 0, 0])]
        );
    }

    #[test]
    fn example_4_4_ideals() {
        let s = example_4_4();
        let i1 = s.reliability_ideal(1).unwrap();
        let want = MonomialIdeal::minimalize(
            3,
            vec![
                Monomial::new(vec![1, 1, 1]),
                Monomial::new(vec![2, 2, 0]),
                Monomial::new(vec![2, 0, 2]),
                Monomial::new(vec![0, 2, 2]),
            ],
        )
        .unwrap();
        assert_eq!(i1, want);
        assert_eq!(s.reliability_ideal(2).unwrap().num_generators(), 3);
        assert_eq!(s.reliability_ideal(3).unwrap().num_generators(), 3);
    }

    #[test]
    fn sum_threshold_40_generators() {
        let s = SystemSpec::SumThreshold { n: 4, m: 3, k: 5 };
        let ideal = s.reliability_ideal(1).unwrap();
        assert_eq!(ideal.num_generators(), 40);
        assert!(ideal.generators().iter().all(|g| g.degree() == 5));
    }

    #[test]
    fn generalized_s8_generator_count() {
        let s = SystemSpec::GeneralizedKn {
            thresholds: vec![4, 2, 1],
            component_max_levels: vec![3; 8],
        };
        assert_eq!(s.reliability_ideal(1).unwrap().num_generators(), 106);
        assert_eq!(s.reliability_ideal(2).unwrap().num_generators(), 36);
        assert_eq!(s.reliability_ideal(3).unwrap().num_generators(), 8);
    }

    #[test]
    fn series_lower_boundary() {
        let s = SystemSpec::SimpleKn {
            k: 3,
            component_max_levels: vec![3, 3, 3],
            system_max_level: 3,
        };
        for j in 1..=3 {
            assert_eq!(s.lower_boundary_points(j).unwrap(), vec![vec![j; 3]]);
        }
    }

    #[test]
    fn table_1_boundary_points() {
        let s = example_3_8();
        assert_eq!(
            s.upper_boundary_points(0, DEFAULT_BUDGET).unwrap(),
            vecs(&[
                &[0, 0, 0, 0, 1],
                &[0, 0, 0, 2, 0],
                &[0, 0, 2, 0, 0],
                &[0, 3, 0, 0, 0],
                &[4, 0, 0, 0, 0],
            ])
        );
        assert_eq!(
            s.upper_boundary_points(1, DEFAULT_BUDGET).unwrap(),
            vecs(&[
                &[1, 1, 1, 2, 1],
                &[1, 1, 2, 1, 1],
                &[1, 3, 1, 1, 1],
                &[4, 1, 1, 1, 1],
            ])
        );
        assert_eq!(
            s.upper_boundary_points(2, DEFAULT_BUDGET).unwrap(),
            vecs(&[&[2, 3, 2, 2, 1], &[4, 2, 2, 2, 1]])
        );
        let mut lbp2 = s.lower_boundary_points(2).unwrap();
        lbp2.sort();
        assert_eq!(
            lbp2,
            vecs(&[
                &[0, 0, 2, 2, 0],
                &[0, 2, 0, 2, 0],
                &[2, 0, 0, 2, 0],
                &[0, 2, 2, 0, 0],
                &[2, 0, 2, 0, 0],
                &[2, 2, 0, 0, 0],
            ])
        );
    }

    #[test]
    fn standard_pair_counts_match_upper_boundary() {
        let s = example_3_8();
        for j in 1..=3u32 {
            let pairs = s.maximal_standard_pairs(j, DEFAULT_BUDGET).unwrap();
            let upper = s.upper_boundary_points(j - 1, DEFAULT_BUDGET).unwrap();
            assert_eq!(pairs.len(), upper.len());
            for p in &pairs {
                let support = p.base.support();
                assert!(support.iter().all(|i| !p.free_set.contains(i)));
            }
        }
    }

    #[test]
    fn homogeneous_standard_pair_count() {
        // |maximal standard pairs of I_{(n,k),j}| = C(n, k-1)
        let s = SystemSpec::SimpleKn {
            k: 3,
            component_max_levels: vec![2; 5],
            system_max_level: 2,
        };
        let pairs = s.maximal_standard_pairs(2, DEFAULT_BUDGET).unwrap();
        assert_eq!(pairs.len(), 10); // C(5, 2)
        for p in &pairs {
            assert_eq!(p.free_set.len(), 2); // at most k - 1 coordinates may grow
            let base = p.base.exponents();
            assert!(base.iter().all(|&e| e == 0 || e == 1)); // j - 1 = 1 off the free set
            assert_eq!(base.iter().filter(|&&e| e == 1).count(), 3);
        }
    }

    #[test]
    fn minimal_cut_counts_table_2() {
        let s = SystemSpec::GeneralizedKn {
            thresholds: vec![4, 2, 1],
            component_max_levels: vec![3; 8],
        };
        assert_eq!(s.minimal_cuts(3, DEFAULT_BUDGET).unwrap().len(), 1);
        assert_eq!(s.minimal_cuts(2, DEFAULT_BUDGET).unwrap().len(), 8);
        assert_eq!(s.minimal_cuts(1, DEFAULT_BUDGET).unwrap().len(), 168);
    }

    #[test]
    fn combinatorial_cuts_agree_with_lattice() {
        let s = SystemSpec::GeneralizedKn {
            thresholds: vec![3, 2],
            component_max_levels: vec![2; 5],
        };
        for j in 1..=2 {
            let lattice = s.minimal_cuts(j, DEFAULT_BUDGET).unwrap();
            let fast = s.minimal_cuts_combinatorial(j).unwrap();
            assert_eq!(lattice, fast, "level {j}");
        }
    }

    #[test]
    fn budget_exceeded_reports_size() {
        let s = example_3_8();
        match s.upper_boundary_points(1, 10) {
            Err(Error::Budget { states, budget }) => {
                assert_eq!(states, 5 * 4 * 3 * 3 * 2);
                assert_eq!(budget, 10);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn nested_ideals() {
        let s = example_3_8();
        for j in 1..3u32 {
            let lower = s.reliability_ideal(j).unwrap();
            let higher = s.reliability_ideal(j + 1).unwrap();
            for g in higher.generators() {
                assert!(lower.contains(g).unwrap());
            }
        }
    }
}
