//! Gluing two copies of a disk bundle over `S^k` along its boundary
//! `L = KP^2 # -KP^2` (`k = 2, 4, 8`), and the comparison case where `L`
//! has the cohomology ring of `S^k x S^k`.
//!
//! The diffeomorphism `f` only enters through its effect on `H^k(L)`: the
//! images `pi_i^*(x_i)` must be primitive classes squaring to zero, and the
//! Mayer–Vietoris map `psi: H^k(B_1) + H^k(B_2) -> H^k(L)` has cokernel
//! `H^{k+1}(M_f)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default brute-force bound for the primitive square-zero search.
pub const DEFAULT_SEARCH_BOUND: i64 = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlueError {
    #[error("search bound must be at least 2, got {0}")]
    BoundTooSmall(i64),
    #[error("fiber dimension k = {0} must be even and positive")]
    OddOrZero(u32),
    #[error(
        "k = {0} is not in {{2, 4, 8}}: a bundle over S^k with w_k != 0 needs k = 2, 4, 8 (Milnor), \
         so w_k(L) = 0 and H^*(L) is the product ring"
    )]
    NotHopfDimension(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    /// `Z[u, v] / <u^2 + v^2, uv>`.
    ConnectedSum,
    /// `Z[u, v] / <u^2, v^2>`.
    Product,
}

/// The degree-`k` cohomology of `L` with its square map to degree `2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConnectedSumRing {
    pub k: u32,
    pub kind: RingKind,
}

impl ConnectedSumRing {
    /// `KP^2 # -KP^2`, requiring `k` in `{2, 4, 8}`.
    pub fn connected_sum(k: u32) -> Result<Self, GlueError> {
        admissible_fiber_dimension(k)?;
        Ok(ConnectedSumRing { k, kind: RingKind::ConnectedSum })
    }

    /// The `S^k x S^k` ring, for any even `k`.
    pub fn product(k: u32) -> Result<Self, GlueError> {
        if k == 0 || k % 2 == 1 {
            return Err(GlueError::OddOrZero(k));
        }
        Ok(ConnectedSumRing { k, kind: RingKind::Product })
    }

    /// Dimension of the glued manifold `M_f`.
    pub fn total_dimension(&self) -> u32 {
        2 * self.k + 1
    }
}

/// The degree-`k` class `alpha u + beta v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegKClass {
    pub alpha: i64,
    pub beta: i64,
}

impl DegKClass {
    pub fn new(alpha: i64, beta: i64) -> Self {
        DegKClass { alpha, beta }
    }

    pub fn is_primitive(&self) -> bool {
        gcd(self.alpha, self.beta) == 1
    }
}

impl fmt::Display for DegKClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Coefficient of the degree-`2k` generator in `(alpha u + beta v)^2`:
/// `alpha^2 - beta^2` (of `u^2`) for the connected sum, `2 alpha beta`
/// (of `uv`) for the product ring.
pub fn square_top_coeff(c: DegKClass, ring: &ConnectedSumRing) -> i64 {
    match ring.kind {
        // u^2 + v^2 = 0 and uv = 0, so v^2 is rewritten as -u^2
        RingKind::ConnectedSum => c.alpha * c.alpha - c.beta * c.beta,
        RingKind::Product => 2 * c.alpha * c.beta,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveSet {
    pub classes: Vec<DegKClass>,
    pub search_bound: i64,
    /// Why the search result is complete for every bound.
    pub closure: String,
}

/// Brute-force search for primitive classes with vanishing square.
pub fn primitive_square_zero_set(ring: &ConnectedSumRing, search_bound: i64) -> Result<PrimitiveSet, GlueError> {
    if search_bound < 2 {
        return Err(GlueError::BoundTooSmall(search_bound));
    }
    let mut classes = BTreeSet::new();
    for alpha in -search_bound..=search_bound {
        for beta in -search_bound..=search_bound {
            let c = DegKClass::new(alpha, beta);
            if c.is_primitive() && square_top_coeff(c, ring) == 0 {
                classes.insert(c);
            }
        }
    }
    let closure = match ring.kind {
        RingKind::ConnectedSum => "alpha^2 - beta^2 = 0 iff alpha = +-beta; primitive forces |alpha| = |beta| = 1",
        RingKind::Product => "2 alpha beta = 0 iff alpha = 0 or beta = 0; primitive forces the other to be +-1",
    };
    Ok(PrimitiveSet { classes: classes.into_iter().collect(), search_bound, closure: closure.into() })
}

/// `psi` in the bases `{x_1, x_2}` and `{u, v}`: row `i` is `pi_i^*(x_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PsiMatrix {
    pub rows: [DegKClass; 2],
}

impl PsiMatrix {
    pub fn det(&self) -> i64 {
        let [a, b] = self.rows;
        a.alpha * b.beta - a.beta * b.alpha
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        let [a, b] = self.rows;
        [[a.alpha, a.beta], [b.alpha, b.beta]]
    }
}

/// Free rank and invariant factors (> 1) of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cokernel {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl fmt::Display for Cokernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries,
/// each dividing the next).
pub fn smith_diagonal(matrix: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| a[r][c] != 0)
            .min_by_key(|&(r, c)| a[r][c].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                let q = a[r][t] / a[t][t];
                if q != 0 {
                    for c in t..cols {
                        a[r][c] -= q * a[t][c];
                    }
                }
                if a[r][t] != 0 {
                    a.swap(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                let q = a[t][c] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[c] -= q * row[t];
                    }
                }
                if a[t][c] != 0 {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide the rest of the block.
            let offender = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| a[r][c] % a[t][t] != 0);
            match offender {
                Some((r, _)) => {
                    for c in t..cols {
                        a[t][c] += a[r][c];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Cokernel of the map `Z^cols -> Z^rows` given by `matrix`.
pub fn cokernel(matrix: &[Vec<i64>]) -> Cokernel {
    let rows = matrix.len();
    let diag = smith_diagonal(matrix);
    Cokernel {
        free_rank: rows - diag.len(),
        torsion: diag.into_iter().filter(|&d| d > 1).map(|d| d as u64).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GluingVerdict {
    NotRationalSphere,
    HomotopySphere,
    RationalSphereWithZ2,
    RationalSphereWithTorsion(Vec<u64>),
}

impl fmt::Display for GluingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GluingVerdict::NotRationalSphere => f.write_str("not a rational sphere"),
            GluingVerdict::HomotopySphere => f.write_str("homotopy sphere"),
            GluingVerdict::RationalSphereWithZ2 => f.write_str("rational sphere, H^{k+1} = Z_2"),
            GluingVerdict::RationalSphereWithTorsion(t) => {
                let parts: Vec<String> = t.iter().map(|o| format!("Z/{o}")).collect();
                write!(f, "rational sphere, H^{{k+1}} = {}", parts.join(" + "))
            }
        }
    }
}

/// Reads `H^{k+1}(M_f)` off the cokernel of `psi`.
pub fn gluing_verdict(coker: &Cokernel) -> GluingVerdict {
    match (coker.free_rank, coker.torsion.as_slice()) {
        (r, _) if r > 0 => GluingVerdict::NotRationalSphere,
        (_, []) => GluingVerdict::HomotopySphere,
        (_, [2]) => GluingVerdict::RationalSphereWithZ2,
        (_, t) => GluingVerdict::RationalSphereWithTorsion(t.to_vec()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingRow {
    pub psi: PsiMatrix,
    pub abs_det: u64,
    pub cokernel: Cokernel,
    pub verdict: GluingVerdict,
}

/// All 16 ordered choices of rows from the primitive square-zero set.
pub fn enumerate_gluings(ring: &ConnectedSumRing) -> Vec<GluingRow> {
    let set = primitive_square_zero_set(ring, DEFAULT_SEARCH_BOUND).expect("default bound is valid");
    let mut out = Vec::with_capacity(set.classes.len().pow(2));
    for &r1 in &set.classes {
        for &r2 in &set.classes {
            let psi = PsiMatrix { rows: [r1, r2] };
            let entries = psi.entries();
            let coker = cokernel(&[entries[0].to_vec(), entries[1].to_vec()]);
            out.push(GluingRow {
                psi,
                abs_det: psi.det().unsigned_abs(),
                verdict: gluing_verdict(&coker),
                cokernel: coker,
            });
        }
    }
    out
}

/// Dimension `2k + 1` of `M_f` for a fiber dimension supporting the connected-sum construction.
pub fn admissible_fiber_dimension(k: u32) -> Result<u32, GlueError> {
    if k == 0 || k % 2 == 1 {
        return Err(GlueError::OddOrZero(k));
    }
    if ![2, 4, 8].contains(&k) {
        return Err(GlueError::NotHopfDimension(k));
    }
    Ok(2 * k + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleDimensions {
    pub dimensions: BTreeSet<u32>,
    pub trace: Vec<String>,
}

/// `{2k + 1 : k in {2, 4, 8}}`.
pub fn admissible_dimensions() -> AdmissibleDimensions {
    let dimensions = [2u32, 4, 8].into_iter().filter_map(|k| admissible_fiber_dimension(k).ok()).collect();
    AdmissibleDimensions {
        dimensions,
        trace: vec![
            "axiom (Milnor): a vector bundle over S^k with w_k != 0 exists only for k = 2, 4, 8".into(),
            "L = KP^2 # -KP^2 with K = C, H, O is a linear S^k bundle over S^k for k = 2, 4, 8".into(),
            "for other even k, w_k(L) = 0 forces H^*(L) = H^*(S^k x S^k) and |det psi| in {0, 1}".into(),
        ],
    }
}
