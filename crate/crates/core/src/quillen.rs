//! Quillen's kernel ideal `J` of `H^*(BSO(m); Z_2) -> H^*(BSpin(m); Z_2)`
//! and degree-sliced membership in it.
//!
//! `J = <w_2, Sq^1 w_2, Sq^2 Sq^1 w_2, ..., Sq^{2^{h(m)-1}} ... Sq^2 Sq^1 w_2>`.
//! Membership of a homogeneous class of degree `d` is finite linear algebra:
//! the degree-`d` slice of `J` is spanned by the products `g * mu` of a
//! generator `g` with a monomial `mu` of complementary degree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::charclass::{basis_of_degree, CharClassError, Mod2Poly, Monomial, SWRing};
use crate::gf2::{BitRow, Echelon};
use crate::steenrod::{sq_word, verify_spin_lemma, SpinLemmaReport, SqWord, SteenrodError};

/// Default cap on the degree of classes that get expanded or tested.
pub const DEFAULT_MAX_DEGREE: u32 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuillenError {
    #[error("h(s) needs s >= 1, got {0}")]
    NonPositive(u64),
    #[error("rank m must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("query lives in {query}, ideal in {ideal}")]
    RingMismatch { query: SWRing, ideal: SWRing },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("k must be even and at least 4, got {0}")]
    InvalidK(u32),
    #[error(transparent)]
    Steenrod(#[from] SteenrodError),
    #[error(transparent)]
    CharClass(#[from] CharClassError),
}

/// Quillen's function: with `s = 8t + u`, `1 <= u <= 8`, returns `4t`,
/// `4t+1`, `4t+2`, `4t+3` for `u = 1`, `u = 2`, `u in {3,4}`, otherwise.
pub fn h(s: u64) -> Result<u64, QuillenError> {
    if s == 0 {
        return Err(QuillenError::NonPositive(s));
    }
    let t = (s - 1) / 8;
    let u = s - 8 * t;
    Ok(4 * t
        + match u {
            1 => 0,
            2 => 1,
            3 | 4 => 2,
            _ => 3,
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerator {
    /// Empty for `w_2` itself.
    pub word: SqWord,
    pub degree: u32,
    /// `None` when the degree was above the expansion cap.
    pub poly: Option<Mod2Poly>,
}

impl IdealGenerator {
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "w2".into()
        } else {
            format!("{} w2", self.word)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuillenIdeal {
    m: u32,
    ring: SWRing,
    generators: Vec<IdealGenerator>,
}

impl QuillenIdeal {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn ring(&self) -> SWRing {
        self.ring
    }

    /// `[w_2, v_0, v_1, ..., v_{h(m)-1}]`.
    pub fn generators(&self) -> &[IdealGenerator] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    /// The sub-ideal spanned by the generators of degree below `degree`.
    pub fn below_degree(&self, degree: u32) -> QuillenIdeal {
        QuillenIdeal {
            m: self.m,
            ring: self.ring,
            generators: self.generators.iter().filter(|g| g.degree < degree).cloned().collect(),
        }
    }

    fn expanded(&self, index: usize) -> Mod2Poly {
        let g = &self.generators[index];
        match &g.poly {
            Some(p) => p.clone(),
            None => sq_word(&g.word, &Mod2Poly::from_monomial(self.ring, Monomial::generator(2))),
        }
    }
}

/// Generators of `J` for `BSO(m)`, each `v_t` expanded when its degree is
/// at most [`DEFAULT_MAX_DEGREE`].
pub fn quillen_generators(m: u32) -> Result<QuillenIdeal, QuillenError> {
    quillen_generators_up_to(m, DEFAULT_MAX_DEGREE)
}

pub fn quillen_generators_up_to(m: u32, max_degree: u32) -> Result<QuillenIdeal, QuillenError> {
    if m < 2 {
        return Err(QuillenError::RankTooSmall(m));
    }
    let ring = SWRing::oriented(m)?;
    let w2 = Mod2Poly::generator(ring, 2)?;
    let count = h(m as u64)? as u32;
    let mut generators = vec![IdealGenerator { word: SqWord::default(), degree: 2, poly: Some(w2.clone()) }];
    // v_t = Sq^{2^t} v_{t-1}; reuse the previous class instead of replaying the word.
    let mut prev = Some(w2);
    for t in 0..count {
        let word = SqWord::tower(t);
        let degree = (1u32 << (t + 1)) + 1;
        let poly = match prev {
            Some(p) if degree <= max_degree => Some(sq_word(&SqWord(vec![1 << t]), &p)),
            _ => None,
        };
        prev = poly.clone();
        generators.push(IdealGenerator { word, degree, poly });
    }
    Ok(QuillenIdeal { m, ring, generators })
}

/// Witness of ideal membership: `query = sum generator[i] * cofactor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub member: bool,
    pub combination: Vec<(usize, Mod2Poly)>,
}

impl MembershipCertificate {
    /// Recomputes the weighted sum and compares it with `query`.
    pub fn verify(&self, ideal: &QuillenIdeal, query: &Mod2Poly) -> bool {
        if !self.member {
            return false;
        }
        let mut sum = Mod2Poly::zero(ideal.ring);
        for (i, cofactor) in &self.combination {
            if *i >= ideal.generators.len() {
                return false;
            }
            match ideal.expanded(*i).checked_mul(cofactor) {
                Ok(prod) => sum.add_assign_unchecked(&prod),
                Err(_) => return false,
            }
        }
        &sum == query
    }
}

/// Decides `p in J` degree by degree, with no cap on the degree.
pub fn in_ideal(p: &Mod2Poly, ideal: &QuillenIdeal) -> Result<MembershipCertificate, QuillenError> {
    in_ideal_capped(p, ideal, u32::MAX)
}

pub fn in_ideal_capped(
    p: &Mod2Poly,
    ideal: &QuillenIdeal,
    max_degree: u32,
) -> Result<MembershipCertificate, QuillenError> {
    if p.ring() != ideal.ring {
        return Err(QuillenError::RingMismatch { query: p.ring(), ideal: ideal.ring });
    }
    if let Some(d) = p.degree() {
        if d > max_degree {
            return Err(QuillenError::DegreeCap { degree: d, cap: max_degree });
        }
    }
    let mut cofactors: BTreeMap<usize, Mod2Poly> = BTreeMap::new();
    let mut expanded: HashMap<usize, Mod2Poly> = HashMap::new();
    for (d, component) in p.homogeneous_components() {
        let Some(parts) = slice_membership(&component, d, ideal, &mut expanded)? else {
            return Ok(MembershipCertificate { member: false, combination: Vec::new() });
        };
        for (i, c) in parts {
            cofactors
                .entry(i)
                .or_insert_with(|| Mod2Poly::zero(ideal.ring))
                .add_assign_unchecked(&c);
        }
    }
    let combination = cofactors.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    Ok(MembershipCertificate { member: true, combination })
}

// Membership of a homogeneous degree-d class; Some(cofactors) when a member.
fn slice_membership(
    q: &Mod2Poly,
    d: u32,
    ideal: &QuillenIdeal,
    expanded: &mut HashMap<usize, Mod2Poly>,
) -> Result<Option<Vec<(usize, Mod2Poly)>>, QuillenError> {
    let ring = ideal.ring;
    let basis = basis_of_degree(ring, d)?;
    let column: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_row = |poly: &Mod2Poly| {
        let mut row = BitRow::zeros(basis.len());
        for m in poly.terms() {
            row.flip(column[m]);
        }
        row
    };

    // A generator is its own certificate.
    for (i, g) in ideal.generators.iter().enumerate() {
        if g.degree == d && *expanded.entry(i).or_insert_with(|| ideal.expanded(i)) == *q {
            return Ok(Some(vec![(i, Mod2Poly::one(ring))]));
        }
    }

    let mut products: Vec<(usize, Monomial, Mod2Poly)> = Vec::new();
    for (i, g) in ideal.generators.iter().enumerate() {
        if g.degree > d {
            continue;
        }
        let gpoly = expanded.entry(i).or_insert_with(|| ideal.expanded(i)).clone();
        if gpoly.is_zero() {
            continue;
        }
        for mu in basis_of_degree(ring, d - g.degree)? {
            let prod = gpoly.mul_unchecked(&Mod2Poly::from_monomial(ring, mu.clone()));
            products.push((i, mu, prod));
        }
    }

    let mut echelon = Echelon::new(basis.len(), products.len());
    for (tag, (_, _, prod)) in products.iter().enumerate() {
        echelon.insert(tag, to_row(prod));
    }
    let reduction = echelon.reduce(&to_row(q));
    if !reduction.residue.is_zero() {
        return Ok(None);
    }
    let mut parts: BTreeMap<usize, Mod2Poly> = BTreeMap::new();
    for tag in reduction.combo.ones() {
        let (i, mu, _) = &products[tag];
        parts.entry(*i).or_insert_with(|| Mod2Poly::zero(ring)).toggle(mu.clone());
    }
    Ok(Some(parts.into_iter().collect()))
}

/// Why the top Stiefel–Whitney class of a rank `k+1` spin bundle over a
/// suitably connected base is or is not forced to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionReason {
    /// The lowest nonvanishing Stiefel–Whitney class sits in a power-of-two degree.
    NotPowerOfTwo,
    /// `k = 2^{t+1}`; the class `v_t` lies in `J` and equals `w_{k+1} + p`.
    QuillenBound {
        t: u32,
        h_value: u64,
        inequality_holds: bool,
        lemma: SpinLemmaReport,
        v_in_ideal: bool,
        /// Whether `w_{k+1}` already lies in the ideal of the generators below degree `k+1`.
        leading_in_lower_ideal: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinObstruction {
    pub k: u32,
    pub vanishes: bool,
    pub reason: ObstructionReason,
}

impl SpinObstruction {
    pub fn trace(&self) -> Vec<String> {
        match &self.reason {
            ObstructionReason::NotPowerOfTwo => vec![format!(
                "k = {} is not a power of two; lowest nonvanishing Stiefel-Whitney degree must be a power of 2",
                self.k
            )],
            ObstructionReason::QuillenBound { t, h_value, inequality_holds, lemma, v_in_ideal, leading_in_lower_ideal } => {
                let rel = if *inequality_holds { "<=" } else { ">" };
                vec![
                    format!("k = {} = 2^{}, so t = {t}", self.k, t + 1),
                    format!(
                        "t <= h(k+1) - 1: {t} {rel} h({}) - 1 = {}",
                        self.k + 1,
                        *h_value as i64 - 1
                    ),
                    format!(
                        "v_{t} = {} w2 = w{} + ({}); remainder generators <= {}: {}",
                        SqWord::tower(*t),
                        lemma.leading_index(),
                        lemma.remainder,
                        lemma.remainder_bound(),
                        lemma.holds()
                    ),
                    format!("v_{t} in J: {v_in_ideal}"),
                    format!("w{} in <{}>: {leading_in_lower_ideal}", self.k + 1, lower_generators(*t)),
                ]
            }
        }
    }
}

// "w2, v_0, ..., v_{t-1}", written out when short.
fn lower_generators(t: u32) -> String {
    let mut names = vec!["w2".to_string()];
    if t <= 3 {
        names.extend((0..t).map(|i| format!("v_{i}")));
    } else {
        names.extend(["v_0".to_string(), "...".to_string(), format!("v_{}", t - 1)]);
    }
    names.join(", ")
}

impl fmt::Display for SpinObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.trace().join("\n"))
    }
}

/// Decides whether `w_{k+1}` of a spin bundle of rank `k+1` is forced to
/// vanish by Quillen's ideal, for even `k >= 4`.
pub fn spin_top_class_vanishes(k: u32) -> Result<SpinObstruction, QuillenError> {
    spin_top_class_vanishes_capped(k, DEFAULT_MAX_DEGREE)
}

pub fn spin_top_class_vanishes_capped(k: u32, max_degree: u32) -> Result<SpinObstruction, QuillenError> {
    if k < 4 || k % 2 == 1 {
        return Err(QuillenError::InvalidK(k));
    }
    if !k.is_power_of_two() {
        return Ok(SpinObstruction { k, vanishes: false, reason: ObstructionReason::NotPowerOfTwo });
    }
    if k + 1 > max_degree {
        return Err(QuillenError::DegreeCap { degree: k + 1, cap: max_degree });
    }
    let t = k.trailing_zeros() - 1;
    let h_value = h(k as u64 + 1)?;
    let inequality_holds = (t as u64) < h_value;
    let ring = SWRing::oriented(k + 1)?;
    let lemma = verify_spin_lemma(t, ring)?;
    let ideal = quillen_generators_up_to(k + 1, k + 1)?;
    let v_in_ideal = inequality_holds && in_ideal(&lemma.v, &ideal)?.member;
    let leading = Mod2Poly::generator(ring, k + 1)?;
    let leading_in_lower_ideal = in_ideal(&leading, &ideal.below_degree(k + 1))?.member;
    let vanishes = inequality_holds && lemma.holds() && v_in_ideal;
    Ok(SpinObstruction {
        k,
        vanishes,
        reason: ObstructionReason::QuillenBound { t, h_value, inequality_holds, lemma, v_in_ideal, leading_in_lower_ideal },
    })
}
