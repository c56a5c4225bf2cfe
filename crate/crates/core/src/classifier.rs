//! Sphere recognition for even-dimensional rational spheres built as
//! linear double disk bundles `M = D(B_1) u_f D(B_2)`.
//!
//! Input is the combinatorial data `(n, l_1, l_2, orientability of B_i)`,
//! where `S^{l_i} -> L -> B_i` are the boundary sphere bundles. Rules fire
//! in proof order and the first decisive one wins. Each trace step is
//! marked as computed here or imported as an axiom from outside results.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::{btop_ring, ddb_euler_check, gysin_total_space, GradedAbGroup, GradedError};
use crate::quillen::{spin_top_class_vanishes, ObstructionReason, DEFAULT_MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("n = {0} is odd: odd dimensions are handled by the gluing construction, not the classifier")]
    OddDimension(u32),
    #[error("invalid scenario: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DdbScenario {
    pub n: u32,
    pub l1: u32,
    pub l2: u32,
    pub orient1: bool,
    pub orient2: bool,
}

impl DdbScenario {
    pub fn new(n: u32, l1: u32, l2: u32, orient1: bool, orient2: bool) -> Result<Self, ClassifyError> {
        let sc = DdbScenario { n, l1, l2, orient1, orient2 };
        sc.validate()?;
        Ok(sc)
    }

    pub fn validate(&self) -> Result<(), ClassifyError> {
        if self.n % 2 == 1 {
            return Err(ClassifyError::OddDimension(self.n));
        }
        if self.n < 4 {
            return Err(ClassifyError::Invalid(format!("n = {} must be at least 4", self.n)));
        }
        for l in [self.l1, self.l2] {
            if l == 0 || l + 1 > self.n {
                return Err(ClassifyError::Invalid(format!(
                    "fiber dimension {l} must satisfy 1 <= l and l + 1 <= n = {}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// The same manifold with the two halves listed in the other order.
    pub fn swapped(&self) -> Self {
        DdbScenario { n: self.n, l1: self.l2, l2: self.l1, orient1: self.orient2, orient2: self.orient1 }
    }

    fn parities_differ(&self) -> bool {
        (self.l1 + self.l2) % 2 == 1
    }

    // (odd fiber, even fiber) once the parities are known to differ.
    fn odd_even(&self) -> (u32, u32) {
        if self.l1 % 2 == 1 {
            (self.l1, self.l2)
        } else {
            (self.l2, self.l1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    HomeoSphere,
    DiffeoS4,
    Contradiction,
    NotRationalSphere,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::HomeoSphere => "homeomorphic to a sphere",
            Outcome::DiffeoS4 => "diffeomorphic to S^4",
            Outcome::Contradiction => "contradiction: no such rational sphere",
            Outcome::NotRationalSphere => "not a rational sphere",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    Computed,
    Axiom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: RuleId,
    pub citation: String,
    pub detail: String,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub trace: Vec<TraceStep>,
}

mod cite {
    pub const EULER: &str = "2 = chi(M) = chi(B_1) + chi(B_2) - chi(L); odd-dimensional closed manifolds have chi = 0";
    pub const ORIENT: &str = "Grove-Halperin case table with the nontrivial connecting map pi_{2n-1}(M) -> pi_{2n-2}(F): \
                              either both B_i are non-orientable or both are orientable";
    pub const NONORIENT: &str = "Grove-Halperin: both singular leaves non-orientable forces both l_i = 1 and loop factor Omega S^7, \
                                 so 2n-1 = 7 and n = 4";
    pub const GE_RADESCHI: &str = "Ge-Radeschi classification of singular Riemannian foliations on 4-manifolds: M is diffeomorphic to S^4";
    pub const SAME_PARITY: &str = "loop factor Omega S^{l_1+l_2+1}: l_1 + l_2 = 2n-2 when the parities agree, forcing l_1 = l_2 = n-1";
    pub const TWO_DISKS: &str = "both singular leaves are points, so M is a union of two disks";
    pub const DIFF_PARITY: &str = "loop factor Omega S^{l_1+l_2+1}: l_1 + l_2 = n-1 when the parities differ";
    pub const CIRCLE: &str = "odd fiber l = 1: B_2 is a circle, pi_2(L) = 0 forces H^2(B_1) = 0, so B_1 is a homotopy sphere";
    pub const RECOGNITION: &str = "recognition principle: L with the integral cohomology groups of a product of two spheres and \
                                   both B_i homotopy spheres of different dimensions make M a homotopy sphere, hence homeomorphic to a sphere";
    pub const B_PLUS: &str = "B_+ is a homotopy sphere; the Euler class of S^{l_+} -> L -> B_+ vanishes for dimension reasons \
                              and the split Gysin sequence gives L the groups of S^{l_1} x S^{l_2}";
    pub const CONGRUENCE: &str = "a non-sphere base B of S^k -> L -> B with L ~ S^k x S^{dim B} needs dim B = -1 mod (k+1)";
    pub const EVEN_K: &str = "for even k the Euler class is 2-torsion and Sq^1 forces dim B = 2k+1";
    pub const WU_EXCLUSION: &str = "no L is both an S^5 bundle over S^2 and an S^2 bundle over SU(3)/SO(3): \
                                    pi_*(L) = pi_*(S^2 x S^5) contradicts pi_5, pi_6 of the Wu manifold";
    pub const POWER_OF_TWO: &str = "the lowest nonvanishing Stiefel-Whitney class occurs in degree a power of 2, \
                                    so w_{k+1} != 0 with k+1 odd is impossible for a spin bundle over a k-connected base";
    pub const QUILLEN: &str = "Quillen: v = Sq^{2^t}...Sq^2 Sq^1 w_2 lies in ker(BSpin -> BSO) when t <= h(k+1) - 1, and v = w_{k+1} + p(w_2..w_{k-1})";
}

fn step(rule: RuleId, citation: &str, detail: String, provenance: Provenance) -> TraceStep {
    TraceStep { rule, citation: citation.to_string(), detail, provenance }
}

/// Runs the rule pipeline on a scenario.
pub fn classify(sc: &DdbScenario) -> Result<Verdict, ClassifyError> {
    use Provenance::*;
    use RuleId::*;

    sc.validate()?;
    let mut trace = Vec::new();
    let n = sc.n;
    let done = |outcome, trace| Ok(Verdict { outcome, trace });

    // R1
    if sc.l1 % 2 == 0 && sc.l2 % 2 == 0 {
        let ok = ddb_euler_check(0, 0, 0);
        trace.push(step(R1, cite::EULER, format!("both fibers even: chi(B_1) + chi(B_2) - chi(L) = 0, relation holds: {ok}"), Computed));
        return done(Outcome::Contradiction, trace);
    }
    trace.push(step(R1, cite::EULER, "at least one fiber dimension is odd".into(), Computed));

    // R2
    if sc.orient1 != sc.orient2 {
        trace.push(step(R2, cite::ORIENT, "exactly one singular leaf is non-orientable".into(), Axiom));
        return done(Outcome::Contradiction, trace);
    }

    // R3
    if !sc.orient1 {
        if n == 4 && sc.l1 == 1 && sc.l2 == 1 {
            trace.push(step(R3, cite::NONORIENT, "both non-orientable, l = (1, 1), n = 4".into(), Axiom));
            trace.push(step(R3, cite::GE_RADESCHI, "n = 4".into(), Axiom));
            return done(Outcome::DiffeoS4, trace);
        }
        trace.push(step(
            R3,
            cite::NONORIENT,
            format!("both non-orientable with n = {n}, fibers {{{}, {}}}", sc.l1.min(sc.l2), sc.l1.max(sc.l2)),
            Axiom,
        ));
        return done(Outcome::Contradiction, trace);
    }

    // R4
    if !sc.parities_differ() {
        let sum = sc.l1 + sc.l2;
        if sum == 2 * n - 2 {
            trace.push(step(R4, cite::SAME_PARITY, format!("l_1 + l_2 = {sum} = 2n - 2"), Computed));
            trace.push(step(R4, cite::TWO_DISKS, format!("l_1 = l_2 = {}", n - 1), Axiom));
            return done(Outcome::HomeoSphere, trace);
        }
        trace.push(step(R4, cite::SAME_PARITY, format!("l_1 + l_2 = {sum} != 2n - 2 = {}", 2 * n - 2), Computed));
        return done(Outcome::Contradiction, trace);
    }

    // R5
    let (l_odd, l_even) = sc.odd_even();
    let sum = l_odd + l_even;
    if sum != n - 1 {
        trace.push(step(R5, cite::DIFF_PARITY, format!("l_1 + l_2 = {sum} != n - 1 = {}", n - 1), Computed));
        return done(Outcome::Contradiction, trace);
    }
    trace.push(step(R5, cite::DIFF_PARITY, format!("l_1 + l_2 = {sum} = n - 1"), Computed));

    // R6
    if l_odd == 1 {
        if l_even == 2 {
            trace.push(step(R6, cite::GE_RADESCHI, "l = (1, 2), so n = 4".into(), Axiom));
            return done(Outcome::DiffeoS4, trace);
        }
        trace.push(step(R6, cite::CIRCLE, format!("odd fiber 1, even fiber {l_even}"), Axiom));
        trace.push(step(R6, cite::RECOGNITION, "hypotheses met".into(), Axiom));
        return done(Outcome::HomeoSphere, trace);
    }

    // R7
    r7_steps(l_odd, l_even, &mut trace);
    trace.push(step(R7, cite::RECOGNITION, "hypotheses met".into(), Axiom));
    done(Outcome::HomeoSphere, trace)
}

fn r7_steps(l_odd: u32, l_even: u32, trace: &mut Vec<TraceStep>) {
    use Provenance::*;
    use RuleId::R7;

    let (l_minus, l_plus) = (l_odd.min(l_even), l_odd.max(l_even));
    let total = gysin_total_space(&GradedAbGroup::sphere(l_minus), l_plus, true)
        .expect("sphere cohomology is torsion free");
    let product = total == GradedAbGroup::sphere_product(l_odd, l_even);
    trace.push(step(
        R7,
        cite::B_PLUS,
        format!("Gysin over S^{l_minus} with fiber S^{l_plus}: groups of S^{l_odd} x S^{l_even}: {product}"),
        Computed,
    ));

    // B_- has dimension l_+ and carries the S^{l_-} bundle.
    match btop_ring(l_plus, l_minus) {
        Err(GradedError::CongruenceFailure { .. }) => {
            trace.push(step(
                R7,
                cite::CONGRUENCE,
                format!("dim B_- = {l_plus} is not -1 mod {}: B_- is a homotopy sphere", l_minus + 1),
                Computed,
            ));
        }
        Err(GradedError::EvenFiberDimension { .. }) => {
            trace.push(step(
                R7,
                cite::EVEN_K,
                format!("k = {l_minus} even but dim B_- = {l_plus} != {}: B_- is a homotopy sphere", 2 * l_minus + 1),
                Computed,
            ));
        }
        Err(e) => unreachable!("fiber data already validated: {e}"),
        Ok(ring) => {
            trace.push(step(
                R7,
                cite::EVEN_K,
                format!("candidate non-sphere B_- with H^* = {}", ring.presentation()),
                Computed,
            ));
            r7_even_fiber(ring.k, trace);
        }
    }
}

// Excludes the candidate non-sphere base with even fiber dimension k and dim B = 2k+1.
fn r7_even_fiber(k: u32, trace: &mut Vec<TraceStep>) {
    use Provenance::*;
    use RuleId::R7;

    if k == 2 {
        trace.push(step(R7, cite::WU_EXCLUSION, "k = 2: B_- would be SU(3)/SO(3)".into(), Axiom));
        return;
    }
    if k + 1 > DEFAULT_MAX_DEGREE && k.is_power_of_two() {
        trace.push(step(
            R7,
            cite::QUILLEN,
            format!("k = {k}: degree {} above the expansion cap; general statement used", k + 1),
            Axiom,
        ));
        return;
    }
    let obstruction = spin_top_class_vanishes(k).expect("k is even and at least 4");
    match obstruction.reason {
        ObstructionReason::NotPowerOfTwo => {
            trace.push(step(R7, cite::POWER_OF_TWO, format!("k = {k} is not a power of two"), Axiom));
        }
        ObstructionReason::QuillenBound { .. } => {
            trace.push(step(
                R7,
                cite::QUILLEN,
                format!("{}; w_{} vanishes: {}", obstruction.trace().join("; "), k + 1, obstruction.vanishes),
                Computed,
            ));
        }
    }
}

/// One constraint evaluated without short-circuiting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintCheck {
    pub rule: RuleId,
    pub constraint: String,
    pub applicable: bool,
    /// Vacuously true when not applicable.
    pub satisfied: bool,
    pub citation: String,
}

/// Every rule's constraint, evaluated independently for diagnostics.
pub fn constraint_report(sc: &DdbScenario) -> Result<Vec<ConstraintCheck>, ClassifyError> {
    use RuleId::*;

    sc.validate()?;
    let n = sc.n;
    let both_orientable = sc.orient1 && sc.orient2;
    let both_nonorientable = !sc.orient1 && !sc.orient2;
    let differ = sc.parities_differ();
    let (l_odd, _) = sc.odd_even();
    let check = |rule, constraint: &str, applicable: bool, holds: bool, citation: &str| ConstraintCheck {
        rule,
        constraint: constraint.to_string(),
        applicable,
        satisfied: !applicable || holds,
        citation: citation.to_string(),
    };
    let odd_case = both_orientable && differ;
    Ok(vec![
        check(R1, "at least one fiber dimension is odd", true, !(sc.l1 % 2 == 0 && sc.l2 % 2 == 0), cite::EULER),
        check(R2, "both singular leaves orientable or both non-orientable", true, sc.orient1 == sc.orient2, cite::ORIENT),
        check(
            R3,
            "both non-orientable => n = 4 and l_1 = l_2 = 1",
            both_nonorientable,
            n == 4 && sc.l1 == 1 && sc.l2 == 1,
            cite::NONORIENT,
        ),
        check(
            R4,
            "both orientable, equal parity => l_1 + l_2 = 2n - 2",
            both_orientable && !differ,
            sc.l1 + sc.l2 == 2 * n - 2,
            cite::SAME_PARITY,
        ),
        check(
            R5,
            "both orientable, different parity => l_1 + l_2 = n - 1",
            odd_case,
            sc.l1 + sc.l2 == n - 1,
            cite::DIFF_PARITY,
        ),
        check(R6, "odd fiber = 1 => singular leaves are homotopy spheres", odd_case && l_odd == 1, true, cite::CIRCLE),
        check(R7, "odd fiber >= 3 => both singular leaves are homotopy spheres", odd_case && l_odd >= 3, true, cite::B_PLUS),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: u32, l1: u32, l2: u32, o1: bool, o2: bool) -> DdbScenario {
        DdbScenario::new(n, l1, l2, o1, o2).unwrap()
    }

    fn outcome(s: DdbScenario) -> Outcome {
        classify(&s).unwrap().outcome
    }

    #[test]
    fn named_scenarios() {
        assert_eq!(outcome(sc(4, 1, 1, false, false)), Outcome::DiffeoS4);
        let v = classify(&sc(6, 3, 2, true, true)).unwrap();
        assert_eq!(v.outcome, Outcome::HomeoSphere);
        let rules: Vec<RuleId> = v.trace.iter().map(|s| s.rule).collect();
        assert!(rules.contains(&RuleId::R5) && rules.contains(&RuleId::R7));
        let v = classify(&sc(6, 2, 4, true, true)).unwrap();
        assert_eq!((v.outcome, v.trace.last().unwrap().rule), (Outcome::Contradiction, RuleId::R1));
        let v = classify(&sc(8, 3, 2, true, true)).unwrap();
        assert_eq!((v.outcome, v.trace.last().unwrap().rule), (Outcome::Contradiction, RuleId::R5));
    }

    #[test]
    fn other_branches() {
        assert_eq!(outcome(sc(6, 3, 2, true, false)), Outcome::Contradiction);
        assert_eq!(outcome(sc(6, 1, 1, false, false)), Outcome::Contradiction);
        assert_eq!(outcome(sc(6, 5, 5, true, true)), Outcome::HomeoSphere);
        assert_eq!(outcome(sc(6, 3, 5, true, true)), Outcome::Contradiction);
        assert_eq!(outcome(sc(4, 1, 2, true, true)), Outcome::DiffeoS4);
        assert_eq!(outcome(sc(8, 1, 6, true, true)), Outcome::HomeoSphere);
        // Wu-manifold candidate: l = (5, 2), n = 8.
        let v = classify(&sc(8, 5, 2, true, true)).unwrap();
        assert_eq!(v.outcome, Outcome::HomeoSphere);
        assert!(v.trace.iter().any(|s| s.citation == cite::WU_EXCLUSION));
        // Spin obstruction candidate: l = (9, 4), n = 14.
        let v = classify(&sc(14, 9, 4, true, true)).unwrap();
        assert!(v.trace.iter().any(|s| s.citation == cite::QUILLEN && s.provenance == Provenance::Computed));
        // Non-power-of-two candidate: l = (13, 6), n = 20.
        let v = classify(&sc(20, 13, 6, true, true)).unwrap();
        assert!(v.trace.iter().any(|s| s.citation == cite::POWER_OF_TWO));
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(DdbScenario::new(5, 1, 2, true, true), Err(ClassifyError::OddDimension(5)));
        assert!(DdbScenario::new(6, 0, 2, true, true).is_err());
        assert!(DdbScenario::new(6, 6, 2, true, true).is_err());
        assert!(DdbScenario::new(2, 1, 1, true, true).is_err());
        let raw = DdbScenario { n: 7, l1: 1, l2: 2, orient1: true, orient2: true };
        assert!(classify(&raw).is_err());
    }

    #[test]
    fn reports() {
        let r = constraint_report(&sc(6, 3, 2, true, true)).unwrap();
        assert!(r.iter().all(|c| c.satisfied));
        let r = constraint_report(&sc(6, 1, 2, true, true)).unwrap();
        assert!(!r.iter().find(|c| c.rule == RuleId::R5).unwrap().satisfied);
        let r = constraint_report(&sc(4, 1, 2, true, true)).unwrap();
        assert!(r.iter().find(|c| c.rule == RuleId::R5).unwrap().satisfied);
        assert!(r.iter().find(|c| c.rule == RuleId::R6).unwrap().applicable);
    }
}
