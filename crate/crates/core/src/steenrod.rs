//! Steenrod squares on Stiefel–Whitney polynomials.
//!
//! Generators are squared with the Wu formula
//!
//! ```text
//! Sq^i(w_j) = sum_{s=0}^{i} C(j+s-i-1, s) w_{i-s} w_{j+s}
//! ```
//!
//! (with `w_0 = 1` and absent generators equal to zero), and products with
//! the Cartan formula `Sq^i(xy) = sum_{a+b=i} Sq^a(x) Sq^b(y)`, folded one
//! generator factor at a time. No axiom (`Sq^0 = id`, instability,
//! `Sq^{deg x} x = x^2`) is special-cased; they all fall out of the formulas.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charclass::{binom_parity, CharClassError, Mod2Poly, Monomial, SWRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteenrodError {
    #[error(transparent)]
    CharClass(#[from] CharClassError),
    #[error("ring {ring} is too small: w{needed} must exist")]
    RingTooSmall { ring: SWRing, needed: u32 },
    #[error("ring {0} is not the oriented model")]
    NotOriented(SWRing),
    #[error("tower index t = {0} is too large")]
    TowerTooLong(u32),
}

// w_a as a monomial, or None when it is the zero class in `ring`.
fn sw_class(ring: SWRing, a: u32) -> Option<Monomial> {
    if a == 0 {
        Some(Monomial::one())
    } else if ring.contains(a) {
        Some(Monomial::generator(a))
    } else {
        None
    }
}

/// `Sq^i(w_j)` by the Wu formula.
pub fn sq_generator(i: u32, j: u32, ring: SWRing) -> Result<Mod2Poly, SteenrodError> {
    if !ring.contains(j) {
        return Err(CharClassError::GeneratorOutOfRange { index: j, ring }.into());
    }
    Ok(wu(i, j, ring))
}

fn wu(i: u32, j: u32, ring: SWRing) -> Mod2Poly {
    let mut out = Mod2Poly::zero(ring);
    for s in 0..=i {
        let top = j as i64 + s as i64 - i as i64 - 1;
        if !binom_parity(top, s as u64) {
            continue;
        }
        if let (Some(a), Some(b)) = (sw_class(ring, i - s), sw_class(ring, j + s)) {
            out.toggle(a.mul(&b));
        }
    }
    out
}

/// Per-call cache of `Sq^b(w_j)`; never shared between calls.
struct Squarer {
    ring: SWRing,
    generators: HashMap<(u32, u32), Mod2Poly>,
}

impl Squarer {
    fn new(ring: SWRing) -> Self {
        Squarer { ring, generators: HashMap::new() }
    }

    fn generator(&mut self, b: u32, j: u32) -> &Mod2Poly {
        let ring = self.ring;
        self.generators.entry((b, j)).or_insert_with(|| wu(b, j, ring))
    }

    // Cartan fold: after consuming a prefix x of the factors, acc[a] = Sq^a(x).
    fn monomial(&mut self, i: u32, m: &Monomial) -> Mod2Poly {
        let ring = self.ring;
        let width = i as usize + 1;
        let mut acc = vec![Mod2Poly::zero(ring); width];
        acc[0] = Mod2Poly::one(ring);
        for &g in m.factors() {
            let mut next = vec![Mod2Poly::zero(ring); width];
            for b in 0..width {
                let sq_g = self.generator(b as u32, g).clone();
                if sq_g.is_zero() {
                    continue;
                }
                for a in 0..width - b {
                    if acc[a].is_zero() {
                        continue;
                    }
                    let prod = acc[a].mul_unchecked(&sq_g);
                    next[a + b].add_assign_unchecked(&prod);
                }
            }
            acc = next;
        }
        acc.swap_remove(i as usize)
    }

    fn poly(&mut self, i: u32, p: &Mod2Poly) -> Mod2Poly {
        let mut out = Mod2Poly::zero(p.ring());
        for m in p.terms() {
            let piece = self.monomial(i, m);
            out.add_assign_unchecked(&piece);
        }
        out
    }
}

/// `Sq^i(p)`, extended linearly over the terms of `p`.
pub fn sq(i: u32, p: &Mod2Poly) -> Mod2Poly {
    Squarer::new(p.ring()).poly(i, p)
}

/// The total square `Sq = Sq^0 + Sq^1 + ...`, summed up to the top degree of `p`.
pub fn total_square(p: &Mod2Poly) -> Mod2Poly {
    let mut squarer = Squarer::new(p.ring());
    let mut out = Mod2Poly::zero(p.ring());
    for i in 0..=p.degree().unwrap_or(0) {
        out.add_assign_unchecked(&squarer.poly(i, p));
    }
    out
}

/// A composite `Sq^{a_1} Sq^{a_2} ... Sq^{a_r}`, applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SqWord(pub Vec<u32>);

impl SqWord {
    /// `Sq^{2^t} Sq^{2^{t-1}} ... Sq^2 Sq^1`.
    pub fn tower(t: u32) -> SqWord {
        SqWord((0..=t).rev().map(|e| 1u32 << e).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SqWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.0.iter().map(|a| format!("Sq^{a}")).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn sq_word(word: &SqWord, p: &Mod2Poly) -> Mod2Poly {
    let mut squarer = Squarer::new(p.ring());
    let mut cur = p.clone();
    for &i in word.0.iter().rev() {
        cur = squarer.poly(i, &cur);
    }
    cur
}

/// `v_t = Sq^{2^t} ... Sq^2 Sq^1 w_2` in the given ring.
pub fn spin_tower_class(t: u32, ring: SWRing) -> Result<Mod2Poly, SteenrodError> {
    if t > 30 {
        return Err(SteenrodError::TowerTooLong(t));
    }
    let w2 = Mod2Poly::generator(ring, 2)?;
    Ok(sq_word(&SqWord::tower(t), &w2))
}

/// Outcome of expanding `v_t` and splitting off its leading generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinLemmaReport {
    pub t: u32,
    pub v: Mod2Poly,
    /// Whether the bare generator `w_{2^{t+1}+1}` occurs in `v_t`.
    pub leading_present: bool,
    pub remainder: Mod2Poly,
    /// `None` when the remainder is zero.
    pub remainder_max_gen: Option<u32>,
}

impl SpinLemmaReport {
    pub fn leading_index(&self) -> u32 {
        (1u32 << (self.t + 1)) + 1
    }

    /// Largest generator index the remainder may use.
    pub fn remainder_bound(&self) -> u32 {
        (1u32 << (self.t + 1)) - 1
    }

    /// `v_t = w_{2^{t+1}+1} + p(w_2, ..., w_{2^{t+1}-1})`.
    pub fn holds(&self) -> bool {
        self.leading_present && self.remainder_max_gen.map_or(true, |g| g <= self.remainder_bound())
    }
}

pub fn verify_spin_lemma(t: u32, ring: SWRing) -> Result<SpinLemmaReport, SteenrodError> {
    if !ring.is_oriented() {
        return Err(SteenrodError::NotOriented(ring));
    }
    if t > 30 {
        return Err(SteenrodError::TowerTooLong(t));
    }
    let leading = (1u32 << (t + 1)) + 1;
    if !ring.contains(leading) {
        return Err(SteenrodError::RingTooSmall { ring, needed: leading });
    }
    let v = spin_tower_class(t, ring)?;
    let lead = Monomial::generator(leading);
    let leading_present = v.contains(&lead);
    let mut remainder = v.clone();
    if leading_present {
        remainder.toggle(lead);
    }
    let remainder_max_gen = remainder.max_generator();
    Ok(SpinLemmaReport { t, v, leading_present, remainder, remainder_max_gen })
}
