//! Exponent-vector monomials and minimally generated monomial ideals.
//!
//! A monomial `x_1^{s_1} ... x_n^{s_n}` is stored as its exponent vector
//! `(s_1, ..., s_n)`. The canonical ordering used everywhere is ascending
//! total degree, and within a degree the word order on monomials written as
//! products of variables `x_1 < x_2 < ... < x_n`; concretely, at the first
//! index where two same-degree exponent vectors differ, the one with the
//! larger exponent comes first.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial given by its exponent vector. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exponents: vec![0; n] }
    }

    /// The monomial `x_i^e` in `n` variables (`i` is zero-based).
    pub fn var_pow(i: usize, e: u32, n: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[i] = e;
        Self { exponents }
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.exponents.len() != other.exponents.len() {
            return Err(Error::Dimension {
                expected: self.exponents.len(),
                got: other.exponents.len(),
            });
        }
        Ok(())
    }

    /// True iff `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b))
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                for (a, b) in self.exponents.iter().zip(&other.exponents) {
                    // larger exponent on the earlier variable sorts first
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal given by its unique minimal generating set, kept in
/// canonical order. The empty generator set is the zero ideal; the unit
/// ideal is generated by the constant monomial alone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        Self { n, generators: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self { n, generators: vec![Monomial::one(n)] }
    }

    /// Builds the ideal generated by `gens`, keeping only the
    /// divisibility-minimal elements and collapsing duplicates.
    pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            if g.num_vars() != n {
                return Err(Error::Dimension { expected: n, got: g.num_vars() });
            }
        }
        gens.sort();
        gens.dedup();
        // after sorting by degree, a generator can only be divided by an
        // earlier one
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        'outer: for g in gens {
            for h in &minimal {
                if h.divides(&g)? {
                    continue 'outer;
                }
            }
            minimal.push(g);
        }
        Ok(Self { n, generators: minimal })
    }

    /// Wraps a generating set already known to be minimal and sorted.
    pub(crate) fn from_minimal_sorted(n: usize, generators: Vec<Monomial>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        Self { n, generators }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Monomial membership: `m` lies in the ideal iff some generator
    /// divides it.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.num_vars() != self.n {
            return Err(Error::Dimension { expected: self.n, got: m.num_vars() });
        }
        for g in &self.generators {
            if g.divides(m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Ideal sum `I + J`, minimalized.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension { expected: self.n, got: other.n });
        }
        Self::minimalize(
            self.n,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    /// Intersection with the principal ideal `<g>`:
    /// `minimalize({lcm(h, g) : h in G(I)})`.
    pub fn intersect_principal(&self, g: &Monomial) -> Result<Self> {
        if g.num_vars() != self.n {
            return Err(Error::Dimension { expected: self.n, got: g.num_vars() });
        }
        let lcms: Result<Vec<Monomial>> =
            self.generators.iter().map(|h| h.lcm(g)).collect();
        Self::minimalize(self.n, lcms?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divides_unit_and_componentwise() {
        assert!(m(&[0, 0]).divides(&m(&[3, 1])).unwrap());
        assert!(m(&[2, 2, 0]).divides(&m(&[2, 3, 0])).unwrap());
        assert!(!m(&[2, 2, 0]).divides(&m(&[3, 1, 0])).unwrap());
        // xyz divides x^2y^2z
        assert!(m(&[1, 1, 1]).divides(&m(&[2, 2, 1])).unwrap());
    }

    #[test]
    fn divides_dimension_error() {
        assert!(m(&[1, 1]).divides(&m(&[1, 1, 1])).is_err());
    }

    #[test]
    fn lcm_basics() {
        assert_eq!(m(&[1, 0]).lcm(&m(&[0, 1])).unwrap(), m(&[1, 1]));
        let a = m(&[2, 0, 1]);
        assert_eq!(a.lcm(&a).unwrap(), a);
        assert_eq!(m(&[2, 0, 2]).lcm(&m(&[0, 2, 2])).unwrap(), m(&[2, 2, 2]));
    }

    #[test]
    fn canonical_order_matches_listed_generators() {
        // ascending degree, then word order: xyz, x^2y^2, x^2z^2, y^2z^2
        let mut gens = vec![
            m(&[0, 2, 2]),
            m(&[2, 0, 2]),
            m(&[1, 1, 1]),
            m(&[2, 2, 0]),
        ];
        gens.sort();
        assert_eq!(
            gens,
            vec![m(&[1, 1, 1]), m(&[2, 2, 0]), m(&[2, 0, 2]), m(&[0, 2, 2])]
        );
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 1]), m(&[2, 2, 2])]).unwrap();
        assert_eq!(i.generators(), &[m(&[1, 1, 1])]);

        let i = MonomialIdeal::minimalize(
            3,
            vec![
                m(&[1, 1, 1]),
                m(&[2, 2, 0]),
                m(&[2, 0, 2]),
                m(&[0, 2, 2]),
                m(&[2, 2, 2]),
            ],
        )
        .unwrap();
        assert_eq!(i.num_generators(), 4);
        assert!(!i.generators().contains(&m(&[2, 2, 2])));
    }

    #[test]
    fn minimalize_idempotent_and_order_independent() {
        let gens = vec![m(&[3, 0]), m(&[0, 2]), m(&[1, 1]), m(&[3, 2])];
        let a = MonomialIdeal::minimalize(2, gens.clone()).unwrap();
        let mut rev = gens;
        rev.reverse();
        let b = MonomialIdeal::minimalize(2, rev).unwrap();
        assert_eq!(a, b);
        let c = MonomialIdeal::minimalize(2, a.generators().to_vec()).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn sum_with_zero_and_absorption() {
        let i = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 1])]).unwrap();
        assert_eq!(i.sum(&MonomialIdeal::zero(3)).unwrap(), i);

        // I_{(3,3),1} + I_{(2,3),2} = <xyz, x^2y^2, x^2z^2, y^2z^2>
        let a = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 1])]).unwrap();
        let b = MonomialIdeal::minimalize(
            3,
            vec![m(&[2, 2, 0]), m(&[2, 0, 2]), m(&[0, 2, 2])],
        )
        .unwrap();
        let s = a.sum(&b).unwrap();
        assert_eq!(s.num_generators(), 4);

        // I_{(2,3),2} + I_{(2,3),3} = I_{(2,3),2}
        let c = MonomialIdeal::minimalize(
            3,
            vec![m(&[3, 3, 0]), m(&[3, 0, 3]), m(&[0, 3, 3])],
        )
        .unwrap();
        assert_eq!(b.sum(&c).unwrap(), b);
    }

    #[test]
    fn intersect_principal_examples() {
        // <x1x2, x2x3, x3x4> ∩ <x4x5> = <x1x2x4x5, x3x4x5>
        let i = MonomialIdeal::minimalize(
            5,
            vec![
                m(&[1, 1, 0, 0, 0]),
                m(&[0, 1, 1, 0, 0]),
                m(&[0, 0, 1, 1, 0]),
            ],
        )
        .unwrap();
        let j = i.intersect_principal(&m(&[0, 0, 0, 1, 1])).unwrap();
        assert_eq!(
            j.generators(),
            &[m(&[0, 0, 1, 1, 1]), m(&[1, 1, 0, 1, 1])]
        );

        // I ∩ <1> = I
        assert_eq!(i.intersect_principal(&Monomial::one(5)).unwrap(), i);

        // <x^2> ∩ <x^3> = <x^3>
        let p = MonomialIdeal::minimalize(1, vec![m(&[2])]).unwrap();
        let q = p.intersect_principal(&m(&[3])).unwrap();
        assert_eq!(q.generators(), &[m(&[3])]);
    }

    #[test]
    fn intersect_principal_membership() {
        // exhaustive membership check over a bounded exponent box
        let i = MonomialIdeal::minimalize(2, vec![m(&[2, 0]), m(&[1, 2])]).unwrap();
        let g = m(&[0, 1]);
        let j = i.intersect_principal(&g).unwrap();
        for a in 0..5u32 {
            for b in 0..5u32 {
                let x = m(&[a, b]);
                let expect = i.contains(&x).unwrap() && g.divides(&x).unwrap();
                assert_eq!(j.contains(&x).unwrap(), expect, "at {x}");
            }
        }
    }
}
