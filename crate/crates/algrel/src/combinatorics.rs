//! Closed-form counting for sum-threshold systems: restricted composition
//! counts, generator counts and graded/multigraded Betti numbers of the
//! ideal generated by all degree-k monomials with exponents bounded by m.

use num_bigint::BigUint;

use crate::monomial::Monomial;
use crate::mvt::HilbertNumerator;

/// Count of ordered `parts`-tuples with entries in `min..=max` summing to
/// `total`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompositionQuery {
    pub total: u32,
    pub parts: u32,
    pub min: u32,
    pub max: u32,
}

/// Number of restricted compositions, by dynamic programming over
/// (remaining total, remaining parts).
pub fn restricted_compositions(q: CompositionQuery) -> BigUint {
    if q.parts == 0 {
        return if q.total == 0 { BigUint::from(1u32) } else { BigUint::from(0u32) };
    }
    if q.min > q.max || (q.min as u64) * (q.parts as u64) > q.total as u64 {
        return BigUint::from(0u32);
    }
    let total = q.total as usize;
    let mut ways: Vec<BigUint> = vec![BigUint::from(0u32); total + 1];
    ways[0] = BigUint::from(1u32);
    for _ in 0..q.parts {
        let mut next: Vec<BigUint> = vec![BigUint::from(0u32); total + 1];
        for (p, count) in ways.iter().enumerate() {
            if *count == BigUint::from(0u32) {
                continue;
            }
            for v in q.min..=q.max {
                let sum = p + v as usize;
                if sum > total {
                    break;
                }
                next[sum] += count;
            }
        }
        ways = next;
    }
    ways[total].clone()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut result = BigUint::from(1u32);
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

fn c(total: i64, parts: i64, min: i64, max: i64) -> BigUint {
    if total < 0 || parts < 0 {
        return BigUint::from(0u32);
    }
    restricted_compositions(CompositionQuery {
        total: total as u32,
        parts: parts as u32,
        min: min.max(0) as u32,
        max: if max < 0 {
            if parts == 0 {
                0
            } else {
                return if total == 0 && parts == 0 {
                    BigUint::from(1u32)
                } else {
                    BigUint::from(0u32)
                };
            }
        } else {
            max as u32
        },
    })
}

/// Number of minimal generators of the sum-threshold ideal: the count of
/// exponent vectors of length `n`, entries in `0..=m`, summing to `k`.
/// Evaluated by the quadruple sum over the distinguished-variable
/// enumeration.
pub fn sum_threshold_generator_count(m: u32, n: usize, k: u32) -> BigUint {
    let mut total = BigUint::from(0u32);
    let (m, n, k) = (m as i64, n as i64, k as i64);
    for i in 0..=m.min(k) {
        for j in 1..=n {
            for p in 0..=(k - i) {
                for l in 0..=(j - 1) {
                    let prefix = c(p, l, 1, i - 1);
                    if prefix == BigUint::from(0u32) {
                        continue;
                    }
                    let suffix = c(k - i - p, n - j, 0, i);
                    if suffix == BigUint::from(0u32) {
                        continue;
                    }
                    total += prefix * binomial((j - 1) as u64, l as u64) * suffix;
                }
            }
        }
    }
    total
}

/// A minimal generator in the distinguished-variable ordering: exponent of
/// the distinguished variable equals `i` (the maximum), all earlier
/// variables stay strictly below `i`, all later ones at most `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGenerator {
    pub monomial: Monomial,
    /// Zero-based index of the distinguished variable.
    pub distinguished_index: usize,
    pub distinguished_exponent: u32,
    /// Number of nonzero exponents before the distinguished variable.
    pub nonzero_prefix_count: usize,
    /// Free variables: those strictly after the first support variable
    /// whose exponent is below the cap `m`. Raising one of them keeps the
    /// first support variable fixed, which makes the multidegree
    /// `g + 1_sigma` land on this generator and no other: a multidegree nu
    /// has exactly C(|supp nu| - 1, d) contributions, one per d-subset of
    /// supp(nu) avoiding its first support variable, and that matches the
    /// Betti number of nu.
    pub free_set: Vec<usize>,
}

impl OrderedGenerator {
    fn new(exponents: Vec<u32>, j: usize, i: u32, m: u32) -> Self {
        let nonzero_prefix: Vec<usize> =
            (0..j).filter(|&t| exponents[t] > 0).collect();
        let free_set: Vec<usize> = match exponents.iter().position(|&e| e > 0) {
            Some(first) => (first + 1..exponents.len())
                .filter(|&t| exponents[t] < m)
                .collect(),
            None => Vec::new(),
        };
        Self {
            monomial: Monomial::new(exponents),
            distinguished_index: j,
            distinguished_exponent: i,
            nonzero_prefix_count: nonzero_prefix.len(),
            free_set,
        }
    }

    /// Multidegrees contributed to homological dimension `d`: the monomial
    /// raised by one on every size-`d` subset of the free set. Empty when
    /// `d` exceeds the free set.
    pub fn multigraded_contributions(&self, d: usize) -> Vec<Monomial> {
        if d > self.free_set.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut subset = Vec::with_capacity(d);
        subsets_of_size(&self.free_set, d, 0, &mut subset, &mut |sigma| {
            let mut e = self.monomial.exponents().to_vec();
            for &t in sigma {
                e[t] += 1;
            }
            out.push(Monomial::new(e));
        });
        out
    }
}

fn subsets_of_size(
    items: &[usize],
    d: usize,
    from: usize,
    current: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if current.len() == d {
        emit(current);
        return;
    }
    let need = d - current.len();
    for idx in from..=items.len().saturating_sub(need) {
        current.push(items[idx]);
        subsets_of_size(items, d, idx + 1, current, emit);
        current.pop();
    }
}

/// Lists the generators grouped by distinguished exponent `i` from `m`
/// down to `0`, then by distinguished variable from first to last.
pub fn sum_threshold_ordered_generators(m: u32, n: usize, k: u32) -> Vec<OrderedGenerator> {
    let mut out = Vec::new();
    for i in (0..=m.min(k)).rev() {
        for j in 0..n {
            let mut exponents = vec![0u32; n];
            exponents[j] = i;
            emit_block(&mut exponents, j, i, m, k - i, 0, &mut out);
        }
    }
    out
}

fn emit_block(
    exponents: &mut Vec<u32>,
    j: usize,
    i: u32,
    m: u32,
    remaining: u32,
    pos: usize,
    out: &mut Vec<OrderedGenerator>,
) {
    let n = exponents.len();
    if pos == n {
        if remaining == 0 {
            out.push(OrderedGenerator::new(exponents.clone(), j, i, m));
        }
        return;
    }
    if pos == j {
        emit_block(exponents, j, i, m, remaining, pos + 1, out);
        return;
    }
    let cap = if pos < j {
        // prefix variables must stay strictly below the distinguished
        // exponent; no value is admissible when i = 0
        if i == 0 {
            return;
        }
        i - 1
    } else {
        i
    };
    let hi = cap.min(remaining);
    for v in 0..=hi {
        exponents[pos] = v;
        emit_block(exponents, j, i, m, remaining - v, pos + 1, out);
        exponents[pos] = 0;
    }
}

/// Graded Betti numbers `beta_{d, k+d}` for `d = 0..n-1`: each ordered
/// generator contributes `C(f, d)` elements, where `f` is the size of its
/// free set (the resolution is `k`-linear, so the degree determines the
/// dimension).
pub fn sum_threshold_betti(m: u32, n: usize, k: u32) -> Vec<BigUint> {
    let mut betti = vec![BigUint::from(0u32); n.max(1)];
    for g in sum_threshold_ordered_generators(m, n, k) {
        let f = g.free_set.len() as u64;
        for (d, slot) in betti.iter_mut().enumerate().take(f as usize + 1) {
            *slot += binomial(f, d as u64);
        }
    }
    betti
}

/// Hilbert-series numerator of the sum-threshold ideal from the
/// multigraded contributions of the ordered generators, grouped by
/// homological dimension.
pub fn sum_threshold_numerator(m: u32, n: usize, k: u32) -> HilbertNumerator {
    let gens = sum_threshold_ordered_generators(m, n, k);
    let max_free = gens.iter().map(|g| g.free_set.len()).max().unwrap_or(0);
    let mut terms: Vec<Vec<Monomial>> = vec![Vec::new(); max_free + 1];
    for g in &gens {
        for (d, slot) in terms.iter_mut().enumerate() {
            slot.extend(g.multigraded_contributions(d));
        }
    }
    for slot in &mut terms {
        slot.sort();
    }
    HilbertNumerator::from_terms(n, terms)
}
