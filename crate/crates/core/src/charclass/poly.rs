use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use super::{CharClassError, Monomial, SWRing};

/// A polynomial over the two-element field in Stiefel–Whitney generators.
///
/// Terms are kept as a set; a monomial is present exactly when its
/// coefficient is 1. Iteration and `Display` follow the canonical
/// monomial order, so equal polynomials print identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mod2Poly {
    ring: SWRing,
    terms: BTreeSet<Monomial>,
}

impl Mod2Poly {
    pub fn zero(ring: SWRing) -> Self {
        Mod2Poly { ring, terms: BTreeSet::new() }
    }

    pub fn one(ring: SWRing) -> Self {
        Self::from_monomial(ring, Monomial::one())
    }

    pub fn generator(ring: SWRing, index: u32) -> Result<Self, CharClassError> {
        ring.check(index)?;
        Ok(Self::from_monomial(ring, Monomial::generator(index)))
    }

    /// Single-term polynomial. The caller guarantees every factor lies in the ring.
    pub(crate) fn from_monomial(ring: SWRing, m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Mod2Poly { ring, terms }
    }

    /// Sums the given monomials mod 2 (a monomial listed twice cancels).
    pub fn from_monomials<I>(ring: SWRing, monomials: I) -> Result<Self, CharClassError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut p = Mod2Poly::zero(ring);
        for m in monomials {
            for &f in m.factors() {
                ring.check(f)?;
            }
            p.toggle(m);
        }
        Ok(p)
    }

    pub fn ring(&self) -> SWRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().next_back().map(Monomial::degree)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.first(), self.terms.last()) {
            (Some(a), Some(b)) => a.degree() == b.degree(),
            _ => true,
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Mod2Poly> {
        let mut out: BTreeMap<u32, Mod2Poly> = BTreeMap::new();
        for m in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Mod2Poly::zero(self.ring))
                .terms
                .insert(m.clone());
        }
        out
    }

    /// Largest generator index occurring in any term.
    pub fn max_generator(&self) -> Option<u32> {
        self.terms.iter().filter_map(Monomial::max_index).max()
    }

    pub(crate) fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Mod2Poly) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    fn same_ring(&self, other: &Mod2Poly) -> Result<(), CharClassError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(CharClassError::RingMismatch { left: self.ring, right: other.ring })
        }
    }

    pub fn checked_add(&self, other: &Mod2Poly) -> Result<Mod2Poly, CharClassError> {
        self.same_ring(other)?;
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(Mod2Poly { ring: self.ring, terms })
    }

    pub fn checked_mul(&self, other: &Mod2Poly) -> Result<Mod2Poly, CharClassError> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Mod2Poly) -> Mod2Poly {
        let mut acc: HashSet<Monomial> = HashSet::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mul(b);
                if !acc.remove(&m) {
                    acc.insert(m);
                }
            }
        }
        Mod2Poly { ring: self.ring, terms: acc.into_iter().collect() }
    }

    pub fn square(&self) -> Mod2Poly {
        // Frobenius: cross terms cancel in characteristic 2.
        let terms = self.terms.iter().map(|m| m.mul(m)).collect();
        Mod2Poly { ring: self.ring, terms }
    }

    /// Image in another ring: generators the target lacks are sent to zero.
    pub fn project(&self, target: SWRing) -> Mod2Poly {
        let terms = self
            .terms
            .iter()
            .filter(|m| m.factors().iter().all(|&f| target.contains(f)))
            .cloned()
            .collect();
        Mod2Poly { ring: target, terms }
    }

    /// Canonical string form; identical to `to_string()`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl std::ops::Add for &Mod2Poly {
    type Output = Mod2Poly;

    /// Panics when the rings differ; use [`Mod2Poly::checked_add`] to get an error instead.
    fn add(self, rhs: &Mod2Poly) -> Mod2Poly {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl std::ops::Mul for &Mod2Poly {
    type Output = Mod2Poly;

    /// Panics when the rings differ; use [`Mod2Poly::checked_mul`] to get an error instead.
    fn mul(self, rhs: &Mod2Poly) -> Mod2Poly {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl fmt::Display for Mod2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, m) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
