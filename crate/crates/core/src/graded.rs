//! Finitely generated graded abelian groups and the exact-sequence
//! bookkeeping built on them: Euler characteristics, the double disk
//! bundle Euler relation, split Gysin sequences, and the cohomology ring of
//! a non-sphere base carrying a sphere bundle with product-like total space.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("torsion order {0} is below 2")]
    InvalidTorsion(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("degree {0} listed twice")]
    DuplicateDegree(u32),
    #[error("nonzero Euler class: the Gysin sequence does not split; unsupported")]
    EulerClassNonzero,
    #[error("base has torsion in degree {0}: the Gysin extension need not split")]
    TorsionInBase(u32),
    #[error("fiber dimension must be positive")]
    ZeroFiber,
    #[error("need 1 <= k < dim B, got dim B = {dim_b}, k = {k}")]
    BadDimensions { dim_b: u32, k: u32 },
    #[error("dim B = {dim_b} is not -1 mod {}: base must be a homotopy sphere", k + 1)]
    CongruenceFailure { dim_b: u32, k: u32 },
    #[error("even fiber dimension k = {k} forces dim B = {}, got {dim_b}", 2 * k + 1)]
    EvenFiberDimension { dim_b: u32, k: u32 },
}

/// One degree of a graded group: `Z^free_rank + Z/t_1 + Z/t_2 + ...`.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub free_rank: u32,
    pub torsion: Vec<u64>,
}

impl DegreeEntry {
    fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Torsion split into prime-power cyclic factors, sorted.
    pub fn normalized_torsion(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.torsion.iter().flat_map(|&t| prime_power_parts(t)).collect();
        out.sort_unstable();
        out
    }
}

impl PartialEq for DegreeEntry {
    fn eq(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.normalized_torsion() == other.normalized_torsion()
    }
}

impl Eq for DegreeEntry {}

fn prime_power_parts(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Serialized form of one degree, used for structured output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub degree: u32,
    pub free_rank: u32,
    pub torsion: Vec<u64>,
}

/// Degree-indexed free ranks and cyclic torsion. Trivial degrees are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<DegreeRecord>", try_from = "Vec<DegreeRecord>")]
pub struct GradedAbGroup {
    entries: BTreeMap<u32, DegreeEntry>,
}

impl GradedAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Cohomology of a point.
    pub fn point() -> Self {
        Self::zero().with_free(0, 1)
    }

    /// Cohomology of `S^n`.
    pub fn sphere(n: u32) -> Self {
        Self::point().with_free(n, 1)
    }

    /// Cohomology groups of `S^a x S^b`.
    pub fn sphere_product(a: u32, b: u32) -> Self {
        Self::point().with_free(a, 1).with_free(b, 1).with_free(a + b, 1)
    }

    /// Adds `Z^rank` in degree `d`.
    pub fn with_free(mut self, d: u32, rank: u32) -> Self {
        if rank > 0 {
            self.entries.entry(d).or_default().free_rank += rank;
        }
        self
    }

    /// Adds `Z/order` in degree `d`.
    pub fn with_torsion(mut self, d: u32, order: u64) -> Result<Self, GradedError> {
        if order < 2 {
            return Err(GradedError::InvalidTorsion(order));
        }
        self.entries.entry(d).or_default().torsion.push(order);
        Ok(self)
    }

    pub fn entry(&self, d: u32) -> Option<&DegreeEntry> {
        self.entries.get(&d)
    }

    pub fn free_rank(&self, d: u32) -> u32 {
        self.entries.get(&d).map_or(0, |e| e.free_rank)
    }

    pub fn torsion(&self, d: u32) -> &[u64] {
        self.entries.get(&d).map_or(&[], |e| &e.torsion)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (u32, &DegreeEntry)> {
        self.entries.iter().map(|(d, e)| (*d, e))
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.entries.values().all(|e| e.torsion.is_empty())
    }

    pub fn total_rank(&self) -> u32 {
        self.entries.values().map(|e| e.free_rank).sum()
    }

    /// Degree-wise direct sum.
    pub fn direct_sum(&self, other: &GradedAbGroup) -> GradedAbGroup {
        let mut out = self.clone();
        for (d, e) in &other.entries {
            let slot = out.entries.entry(*d).or_default();
            slot.free_rank += e.free_rank;
            slot.torsion.extend_from_slice(&e.torsion);
        }
        out
    }

    /// Moves every group up by `by` degrees.
    pub fn shift(&self, by: u32) -> GradedAbGroup {
        GradedAbGroup { entries: self.entries.iter().map(|(d, e)| (d + by, e.clone())).collect() }
    }

    pub fn records(&self) -> Vec<DegreeRecord> {
        self.entries
            .iter()
            .map(|(d, e)| DegreeRecord { degree: *d, free_rank: e.free_rank, torsion: e.torsion.clone() })
            .collect()
    }
}

impl From<GradedAbGroup> for Vec<DegreeRecord> {
    fn from(g: GradedAbGroup) -> Self {
        g.records()
    }
}

impl TryFrom<Vec<DegreeRecord>> for GradedAbGroup {
    type Error = GradedError;

    fn try_from(records: Vec<DegreeRecord>) -> Result<Self, Self::Error> {
        let mut g = GradedAbGroup::zero();
        for r in records {
            if g.entries.contains_key(&r.degree) {
                return Err(GradedError::DuplicateDegree(r.degree));
            }
            g = g.with_free(r.degree, r.free_rank);
            for t in r.torsion {
                g = g.with_torsion(r.degree, t)?;
            }
        }
        Ok(g)
    }
}

/// Lines of the form `deg <d>: Z^<r> (+ Z/<t>)*`. Parsing also accepts `Z` and `0`.
impl fmt::Display for GradedAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (d, e)) in self.entries.iter().filter(|(_, e)| !e.is_trivial()).enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "deg {d}: Z^{}", e.free_rank)?;
            for t in &e.torsion {
                write!(f, " + Z/{t}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GradedAbGroup {
    type Err = GradedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut g = GradedAbGroup::zero();
        let mut seen = BTreeSet::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| GradedError::Parse { line: i + 1, msg: msg.to_string() };
            let rest = line.strip_prefix("deg").ok_or_else(|| err("expected 'deg'"))?;
            let (deg, body) = rest.split_once(':').ok_or_else(|| err("expected ':'"))?;
            let d: u32 = deg.trim().parse().map_err(|_| err("bad degree"))?;
            if !seen.insert(d) {
                return Err(GradedError::DuplicateDegree(d));
            }
            // Summands: `Z`, `Z^r`, `Z/t`, or `0`.
            let mut entry = DegreeEntry { free_rank: 0, torsion: Vec::new() };
            for t in body.split('+').map(str::trim) {
                if t == "0" {
                    continue;
                } else if t == "Z" {
                    entry.free_rank += 1;
                } else if let Some(r) = t.strip_prefix("Z^") {
                    entry.free_rank += r.trim().parse::<u32>().map_err(|_| err("bad rank"))?;
                } else if let Some(o) = t.strip_prefix("Z/") {
                    entry.torsion.push(o.trim().parse().map_err(|_| err("bad torsion order"))?);
                } else {
                    return Err(err("expected 'Z', 'Z^<rank>', 'Z/<order>' or '0'"));
                }
            }
            g = g.with_free(d, entry.free_rank);
            for order in entry.torsion {
                g = g.with_torsion(d, order)?;
            }
        }
        Ok(g)
    }
}

/// Alternating sum of free ranks; torsion does not contribute.
pub fn euler_char(g: &GradedAbGroup) -> i64 {
    g.degrees()
        .map(|(d, e)| if d % 2 == 0 { e.free_rank as i64 } else { -(e.free_rank as i64) })
        .sum()
}

/// `chi(M) = chi(B_1) + chi(B_2) - chi(L)` must equal 2 for a rational sphere of even dimension.
pub fn ddb_euler_check(chi_b1: i64, chi_b2: i64, chi_l: i64) -> bool {
    chi_b1 + chi_b2 - chi_l == 2
}

/// Total space of an `S^fiber_dim` bundle whose Euler class vanishes:
/// the Gysin sequence breaks into `0 -> H^s(B) -> H^s(L) -> H^{s-l}(B) -> 0`,
/// which splits over a torsion-free base.
pub fn gysin_total_space(
    base: &GradedAbGroup,
    fiber_dim: u32,
    euler_class_zero: bool,
) -> Result<GradedAbGroup, GradedError> {
    if !euler_class_zero {
        return Err(GradedError::EulerClassNonzero);
    }
    if fiber_dim == 0 {
        return Err(GradedError::ZeroFiber);
    }
    if let Some((d, _)) = base.degrees().find(|(_, e)| !e.torsion.is_empty()) {
        return Err(GradedError::TorsionInBase(d));
    }
    Ok(base.direct_sum(&base.shift(fiber_dim)))
}

/// Order of the cyclic Euler class in [`BtopRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TorsionOrder {
    Known(u64),
    /// Some unspecified `m >= 2`.
    Symbolic,
}

impl fmt::Display for TorsionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionOrder::Known(m) => write!(f, "{m}"),
            TorsionOrder::Symbolic => f.write_str("m"),
        }
    }
}

/// `H^*(B) = Z[e, a] / <m e, e a, a^2, e^{s+1}>` with `|e| = k+1`, `|a| = dim B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BtopRing {
    pub dim_b: u32,
    pub k: u32,
    pub m: TorsionOrder,
    pub s: u32,
}

impl BtopRing {
    pub fn euler_degree(&self) -> u32 {
        self.k + 1
    }

    pub fn presentation(&self) -> String {
        let m = match self.m {
            TorsionOrder::Known(m) => m.to_string(),
            TorsionOrder::Symbolic => "m".into(),
        };
        let top = if self.s + 1 == 1 { "e".to_string() } else { format!("e^{}", self.s + 1) };
        format!(
            "Z[e,a]/<{m}e, ea, a^2, {top}>, |e| = {}, |a| = {}",
            self.euler_degree(),
            self.dim_b
        )
    }

    /// Integral cohomology groups, available once the torsion order is known.
    pub fn group_data(&self) -> Option<GradedAbGroup> {
        let TorsionOrder::Known(m) = self.m else {
            return None;
        };
        let mut g = GradedAbGroup::point().with_free(self.dim_b, 1);
        for j in 1..=self.s {
            g = g.with_torsion(j * self.euler_degree(), m).ok()?;
        }
        Some(g)
    }
}

/// Cohomology of a rational sphere `B` that is not a homotopy sphere but is
/// the base of an `S^k` bundle whose total space has the cohomology of
/// `S^k x S^{dim B}`. Rejections mean no such non-sphere base exists.
pub fn btop_ring(dim_b: u32, k: u32) -> Result<BtopRing, GradedError> {
    if k == 0 || k >= dim_b {
        return Err(GradedError::BadDimensions { dim_b, k });
    }
    if (dim_b - k) % (k + 1) != 0 {
        return Err(GradedError::CongruenceFailure { dim_b, k });
    }
    let s = (dim_b - k) / (k + 1);
    let m = if k % 2 == 0 {
        if dim_b != 2 * k + 1 {
            return Err(GradedError::EvenFiberDimension { dim_b, k });
        }
        TorsionOrder::Known(2)
    } else {
        TorsionOrder::Symbolic
    };
    Ok(BtopRing { dim_b, k, m, s })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wu_manifold() -> GradedAbGroup {
        GradedAbGroup::point().with_free(5, 1).with_torsion(3, 2).unwrap()
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char(&GradedAbGroup::sphere(6)), 2);
        assert_eq!(euler_char(&wu_manifold()), 0);
        assert_eq!(euler_char(&GradedAbGroup::sphere_product(3, 4)), 0);
        assert_eq!(euler_char(&GradedAbGroup::sphere_product(2, 4)), 4);
    }

    #[test]
    fn euler_relation() {
        assert!(ddb_euler_check(2, 0, 0));
        assert!(ddb_euler_check(2, 2, 2));
        assert!(!ddb_euler_check(0, 0, 0));
    }

    #[test]
    fn split_gysin() {
        let l = gysin_total_space(&GradedAbGroup::sphere(2), 5, true).unwrap();
        assert_eq!(l, GradedAbGroup::sphere_product(2, 5));
        let s = gysin_total_space(&GradedAbGroup::point(), 7, true).unwrap();
        assert_eq!(s, GradedAbGroup::sphere(7));
        assert_eq!(
            gysin_total_space(&GradedAbGroup::sphere(2), 5, false),
            Err(GradedError::EulerClassNonzero)
        );
        assert_eq!(gysin_total_space(&wu_manifold(), 2, true), Err(GradedError::TorsionInBase(3)));
    }

    #[test]
    fn torsion_equality_is_normalized() {
        let a = GradedAbGroup::zero().with_torsion(3, 6).unwrap();
        let b = GradedAbGroup::zero().with_torsion(3, 3).unwrap().with_torsion(3, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, GradedAbGroup::zero().with_torsion(3, 12).unwrap());
        assert!(GradedAbGroup::zero().with_torsion(1, 1).is_err());
    }

    #[test]
    fn text_format() {
        let g = wu_manifold();
        let text = g.to_string();
        assert_eq!(text, "deg 0: Z^1\ndeg 3: Z^0 + Z/2\ndeg 5: Z^1");
        assert_eq!(text.parse::<GradedAbGroup>().unwrap(), g);
        let loose: GradedAbGroup = "# comment\n deg 3 :Z^0+Z/2 \n\ndeg 0: Z^1\ndeg 5: Z^1".parse().unwrap();
        assert_eq!(loose, g);
        assert!("deg 1: Z^1\ndeg 1: Z^0".parse::<GradedAbGroup>().is_err());
        assert!("deg x: Z^1".parse::<GradedAbGroup>().is_err());
        assert!("deg 1: Q".parse::<GradedAbGroup>().is_err());
        assert!("deg 1: 0\ndeg 1: Z".parse::<GradedAbGroup>().is_err());
        let short: GradedAbGroup = "deg 0: Z\ndeg 3: Z/2\ndeg 4: 0\ndeg 5: Z".parse().unwrap();
        assert_eq!(short, g);
    }

    #[test]
    fn structured_form() {
        let g = wu_manifold();
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.contains("\"free_rank\""));
        let back: GradedAbGroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn btop_cases() {
        let wu = btop_ring(5, 2).unwrap();
        assert_eq!((wu.s, wu.m), (1, TorsionOrder::Known(2)));
        assert_eq!(wu.group_data().unwrap(), wu_manifold());
        assert_eq!(wu.presentation(), "Z[e,a]/<2e, ea, a^2, e^2>, |e| = 3, |a| = 5");
        let odd = btop_ring(11, 3).unwrap();
        assert_eq!((odd.s, odd.m), (2, TorsionOrder::Symbolic));
        assert!(odd.group_data().is_none());
        assert_eq!(btop_ring(6, 2), Err(GradedError::CongruenceFailure { dim_b: 6, k: 2 }));
        assert_eq!(btop_ring(8, 2), Err(GradedError::EvenFiberDimension { dim_b: 8, k: 2 }));
        assert!(btop_ring(3, 3).is_err());
    }
}
