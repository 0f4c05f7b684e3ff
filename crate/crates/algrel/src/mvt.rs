//! Mayer-Vietoris trees: recursion trees over a monomial ideal that yield
//! multigraded Betti-number bounds and the Hilbert-series numerator.
//!
//! Every node `J = <f_1, ..., f_j>` splits into a right child
//! `J' = <f_1, ..., f_{j-1}>` and a left child `J~ = J' ∩ <f_j>`. The root
//! has position 1 and dimension 0; a node at position `p`, dimension `d`
//! has its right child at `(2p+1, d)` and its left child at `(2p, d+1)`.
//! Relevant nodes (the root and the even positions) carry the ranks of an
//! iterated mapping-cone resolution: their generators bound the Betti
//! numbers from above, the generators appearing exactly once in the whole
//! tree bound them from below, and the alternating sum over dimensions is
//! the numerator of the Hilbert series.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Pivot selection among the canonically ordered generators of a node.
#[derive(Clone, Copy, Debug)]
pub enum PivotRule {
    /// The generator that is largest in graded reverse lexicographic
    /// order (higher total degree first; within a degree, the smaller
    /// trailing exponents win). This keeps the per-dimension truncation
    /// bounds tight on level-structured ideals.
    GrevlexLargest,
    /// Last generator in canonical order (ascending degree, word order
    /// within a degree).
    Last,
    /// Caller-supplied pivot index.
    Custom(fn(&[Monomial]) -> usize),
}

/// Graded reverse lexicographic comparison: higher degree is larger;
/// within a degree, the larger last differing exponent is smaller.
fn grevlex_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    match a.degree().cmp(&b.degree()) {
        std::cmp::Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    std::cmp::Ordering::Equal
}

impl PivotRule {
    fn pick(&self, gens: &[Monomial]) -> usize {
        match self {
            PivotRule::GrevlexLargest => {
                let mut best = 0;
                for i in 1..gens.len() {
                    if grevlex_cmp(&gens[i], &gens[best]) == std::cmp::Ordering::Greater {
                        best = i;
                    }
                }
                best
            }
            PivotRule::Last => gens.len() - 1,
            PivotRule::Custom(f) => {
                let idx = f(gens);
                assert!(idx < gens.len(), "pivot index out of range");
                idx
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct MvtOptions {
    pub pivot: PivotRule,
    /// Retain every node of the tree (debugging; memory grows with the
    /// full tree instead of the relevant-node stream).
    pub keep_tree: bool,
    /// Apply the reduction-pair compatibility refinement when deciding
    /// exactness. The two simpler criteria are always applied.
    pub compatibility_check: bool,
}

impl Default for MvtOptions {
    fn default() -> Self {
        Self {
            pivot: PivotRule::GrevlexLargest,
            keep_tree: false,
            compatibility_check: false,
        }
    }
}

/// A fully materialized tree node (only kept under `keep_tree`).
#[derive(Clone, Debug)]
pub struct MvNode {
    pub position: BigUint,
    pub dimension: u32,
    pub ideal: MonomialIdeal,
    pub pivot: Option<Monomial>,
}

/// One relevant node of the tree: its position, dimension and minimal
/// generators.
#[derive(Clone, Debug)]
pub struct RelevantNode {
    pub position: BigUint,
    pub dimension: u32,
    pub generators: Vec<Monomial>,
}

/// The stream of relevant nodes of one Mayer-Vietoris tree.
#[derive(Clone, Debug)]
pub struct MvTree {
    num_vars: usize,
    relevant: Vec<RelevantNode>,
    nodes: Option<Vec<MvNode>>,
    max_dimension: u32,
}

impl MvTree {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn relevant_nodes(&self) -> &[RelevantNode] {
        &self.relevant
    }

    /// All nodes, present only when built with `keep_tree`.
    pub fn nodes(&self) -> Option<&[MvNode]> {
        self.nodes.as_deref()
    }

    pub fn max_dimension(&self) -> u32 {
        self.max_dimension
    }
}

/// Builds the Mayer-Vietoris tree of a nonzero ideal.
pub fn build_mvt(ideal: &MonomialIdeal, options: &MvtOptions) -> Result<MvTree> {
    if ideal.is_zero() {
        return Err(Error::Domain(
            "the Mayer-Vietoris tree of the zero ideal is undefined".into(),
        ));
    }
    let n = ideal.num_vars();
    let mut relevant = Vec::new();
    let mut nodes = options.keep_tree.then(Vec::new);
    let mut max_dimension = 0;

    let mut stack: Vec<(MonomialIdeal, BigUint, u32)> =
        vec![(ideal.clone(), BigUint::from(1u32), 0)];
    while let Some((current, position, dimension)) = stack.pop() {
        let gens = current.generators();
        let is_relevant =
            position == BigUint::from(1u32) || (&position % 2u32) == BigUint::from(0u32);
        if is_relevant {
            max_dimension = max_dimension.max(dimension);
            relevant.push(RelevantNode {
                position: position.clone(),
                dimension,
                generators: gens.to_vec(),
            });
        }
        let pivot = if gens.len() > 1 {
            let idx = options.pivot.pick(gens);
            Some((idx, gens[idx].clone()))
        } else {
            None
        };
        if let Some(nodes) = nodes.as_mut() {
            nodes.push(MvNode {
                position: position.clone(),
                dimension,
                ideal: current.clone(),
                pivot: pivot.as_ref().map(|(_, p)| p.clone()),
            });
        }
        if let Some((idx, pivot)) = pivot {
            let rest: Vec<Monomial> = gens
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, g)| g.clone())
                .collect();
            // removing one generator from a minimal set keeps it minimal
            let right = MonomialIdeal::from_minimal_sorted(n, rest);
            let left = right.intersect_principal(&pivot)?;
            stack.push((right, &position * 2u32 + 1u32, dimension));
            stack.push((left, &position * 2u32, dimension + 1));
        }
    }
    Ok(MvTree { num_vars: n, relevant, nodes, max_dimension })
}

/// Per-dimension multidegree multisets with lower/upper Betti bounds.
#[derive(Clone, Debug)]
pub struct BettiSummary {
    upper: BTreeMap<(u32, Monomial), usize>,
    lower: BTreeMap<(u32, Monomial), usize>,
    pub exact: bool,
}

impl BettiSummary {
    /// Upper-bound multiset `#MVT(I)_{d, mu}`.
    pub fn upper(&self) -> &BTreeMap<(u32, Monomial), usize> {
        &self.upper
    }

    /// Lower-bound multiset `#MVT(I)'_{d, mu}` (promoted to the upper
    /// bound wherever exactness is certified).
    pub fn lower(&self) -> &BTreeMap<(u32, Monomial), usize> {
        &self.lower
    }

    pub fn upper_at(&self, dimension: u32, multidegree: &Monomial) -> usize {
        *self.upper.get(&(dimension, multidegree.clone())).unwrap_or(&0)
    }

    pub fn lower_at(&self, dimension: u32, multidegree: &Monomial) -> usize {
        *self.lower.get(&(dimension, multidegree.clone())).unwrap_or(&0)
    }

    /// Graded totals `(dimension, total degree) -> count` of the upper
    /// bounds.
    pub fn graded_upper(&self) -> BTreeMap<(u32, u32), u64> {
        Self::graded(&self.upper)
    }

    pub fn graded_lower(&self) -> BTreeMap<(u32, u32), u64> {
        Self::graded(&self.lower)
    }

    fn graded(map: &BTreeMap<(u32, Monomial), usize>) -> BTreeMap<(u32, u32), u64> {
        let mut out = BTreeMap::new();
        for ((d, mu), count) in map {
            *out.entry((*d, mu.degree())).or_insert(0) += *count as u64;
        }
        out
    }

    pub fn max_dimension(&self) -> u32 {
        self.upper.keys().map(|(d, _)| *d).max().unwrap_or(0)
    }
}

/// Extracts the Betti bounds and the exactness certificate from a tree.
///
/// Exactness of the upper bounds is certified per multidegree when the
/// multidegree occurs exactly once in the whole tree, when no two of its
/// occurrence dimensions are consecutive, or (with the compatibility
/// refinement enabled) when no pair of same-multidegree generators in
/// consecutive dimensions sits in compatible nodes.
pub fn betti_bounds(tree: &MvTree, options: &MvtOptions) -> BettiSummary {
    let mut upper: BTreeMap<(u32, Monomial), usize> = BTreeMap::new();
    // occurrences of each multidegree: (dimension, position)
    let mut occurrences: BTreeMap<Monomial, Vec<(u32, &BigUint)>> = BTreeMap::new();
    for node in &tree.relevant {
        for g in &node.generators {
            *upper.entry((node.dimension, g.clone())).or_insert(0) += 1;
            occurrences
                .entry(g.clone())
                .or_default()
                .push((node.dimension, &node.position));
        }
    }

    let mut lower: BTreeMap<(u32, Monomial), usize> = BTreeMap::new();
    let mut exact = true;
    for (mu, occ) in &occurrences {
        let certified = occ.len() == 1
            || no_consecutive_dimensions(occ)
            || (options.compatibility_check && no_compatible_pair(occ));
        if certified {
            for (d, _) in occ {
                let count = upper[&(*d, mu.clone())];
                lower.insert((*d, mu.clone()), count);
            }
        } else {
            exact = false;
        }
    }
    BettiSummary { upper, lower, exact }
}

fn no_consecutive_dimensions(occ: &[(u32, &BigUint)]) -> bool {
    for (i, (da, _)) in occ.iter().enumerate() {
        for (db, _) in &occ[i + 1..] {
            if da.abs_diff(*db) == 1 {
                return false;
            }
        }
    }
    true
}

fn no_compatible_pair(occ: &[(u32, &BigUint)]) -> bool {
    for (i, (da, pa)) in occ.iter().enumerate() {
        for (db, pb) in &occ[i + 1..] {
            if da.abs_diff(*db) == 1 && compatible(pa, *da, pb, *db) {
                return false;
            }
        }
    }
    true
}

/// Compatibility of two nodes, read off the binary expansions of their
/// positions: with `K` the first common ancestor, the node below the left
/// child `K~` must sit the same number of left steps below `K~` as the
/// other node does below `K'`, i.e. its dimension must exceed the other's
/// by exactly one.
fn compatible(pa: &BigUint, da: u32, pb: &BigUint, db: u32) -> bool {
    let a = pa.to_radix_be(2);
    let b = pb.to_radix_be(2);
    let prefix = a.iter().zip(&b).take_while(|(x, y)| x == y).count();
    if prefix == a.len() || prefix == b.len() {
        // one node is an ancestor of the other
        return false;
    }
    let a_is_left = a[prefix] == 0;
    if a_is_left {
        da == db + 1
    } else {
        db == da + 1
    }
}

/// The signed, dimension-grouped terms of the numerator of the Hilbert
/// series: one term per generator of each relevant node, with sign
/// `(-1)^dimension`.
#[derive(Clone, Debug)]
pub struct HilbertNumerator {
    num_vars: usize,
    terms_by_dimension: Vec<Vec<Monomial>>,
}

impl HilbertNumerator {
    pub fn from_terms(num_vars: usize, terms_by_dimension: Vec<Vec<Monomial>>) -> Self {
        Self { num_vars, terms_by_dimension }
    }

    /// Numerator of the unit ideal: the single constant term.
    pub fn one(num_vars: usize) -> Self {
        Self { num_vars, terms_by_dimension: vec![vec![Monomial::one(num_vars)]] }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Terms of each homological dimension, `d = 0, 1, ...`.
    pub fn terms_by_dimension(&self) -> &[Vec<Monomial>] {
        &self.terms_by_dimension
    }

    pub fn max_dimension(&self) -> u32 {
        self.terms_by_dimension.len().saturating_sub(1) as u32
    }

    pub fn num_terms(&self) -> usize {
        self.terms_by_dimension.iter().map(Vec::len).sum()
    }

    /// Signed coefficients after cancelation.
    pub fn coefficient_map(&self) -> BTreeMap<Monomial, i64> {
        let mut map = BTreeMap::new();
        for (d, terms) in self.terms_by_dimension.iter().enumerate() {
            let sign: i64 = if d % 2 == 0 { 1 } else { -1 };
            for t in terms {
                *map.entry(t.clone()).or_insert(0) += sign;
            }
        }
        map.retain(|_, c| *c != 0);
        map
    }
}

/// Reads the Hilbert-series numerator off a tree: the alternating sum of
/// the relevant-node generators, grouped by dimension.
pub fn hilbert_numerator(tree: &MvTree) -> HilbertNumerator {
    let mut terms_by_dimension: Vec<Vec<Monomial>> =
        vec![Vec::new(); tree.max_dimension as usize + 1];
    for node in &tree.relevant {
        terms_by_dimension[node.dimension as usize].extend(node.generators.iter().cloned());
    }
    for terms in &mut terms_by_dimension {
        terms.sort();
    }
    HilbertNumerator { num_vars: tree.num_vars, terms_by_dimension }
}
