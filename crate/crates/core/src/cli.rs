//! Command-line front end.
//!
//! Every command builds a [`Report`]; text output is rendered from it and
//! `--json` serializes it whole, so the structured form carries everything
//! the text form shows.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::charclass::{parse_poly, CharClassError, SWRing};
use crate::classifier::{classify, constraint_report, ConstraintCheck, DdbScenario, Verdict};
use crate::glue::{admissible_dimensions, enumerate_gluings, AdmissibleDimensions, ConnectedSumRing, GluingRow, GluingVerdict};
use crate::graded::{btop_ring, ddb_euler_check, gysin_total_space, GradedAbGroup};
use crate::quillen::{h, in_ideal_capped, quillen_generators_up_to, spin_top_class_vanishes_capped, DEFAULT_MAX_DEGREE};
use crate::steenrod::{sq, sq_word, verify_spin_lemma, SqWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
}

#[derive(Debug, Parser)]
#[command(name = "ddb-sphere", version, about = "Mod-2 characteristic classes and double disk bundle bookkeeping")]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply Sq^i to a Stiefel-Whitney polynomial.
    Sq {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        unoriented: bool,
    },
    /// Apply a composite Sq^a Sq^b ... (right to left).
    SqWord {
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<u32>,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        unoriented: bool,
    },
    /// Expand Sq^{2^t}...Sq^2 Sq^1 w2 and check its leading term.
    SpinLemma {
        #[arg(long)]
        t: u32,
        /// Defaults to 2^{t+1} + 1.
        #[arg(long)]
        rank: Option<u32>,
    },
    /// Quillen's function h(s).
    H {
        #[arg(long)]
        s: u64,
    },
    /// Generators of the kernel ideal J for BSO(m).
    QuillenGens {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Decide membership of a polynomial in J.
    InIdeal {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Whether w_{k+1} of a rank k+1 spin bundle is forced to vanish.
    SpinObstruction {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Check chi(B1) + chi(B2) - chi(L) = 2.
    EulerCheck {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        chi: Vec<i64>,
    },
    /// Total-space groups of a sphere bundle with vanishing Euler class.
    Gysin {
        #[arg(long)]
        fiber: u32,
        #[arg(long)]
        base: PathBuf,
    },
    /// Cohomology ring of a non-sphere base of an S^k bundle.
    Btop {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        k: u32,
    },
    /// Classify an even-dimensional double disk bundle scenario.
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<u32>,
        /// Orientability of B1,B2: o/n, orientable/non-orientable, or true/false.
        #[arg(long, value_delimiter = ',', required = true)]
        orient: Vec<String>,
    },
    /// Enumerate the 16 gluing matrices psi.
    Glue {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = RingArg::ConnectedSum)]
        ring: RingArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RingArg {
    ConnectedSum,
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub index: usize,
    pub label: String,
    pub degree: u32,
    /// `None` when above the expansion cap.
    pub poly: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofactorRecord {
    pub generator: usize,
    pub label: String,
    pub cofactor: String,
}

/// Everything a command reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Sq { i: u32, ring: SWRing, input: String, result: String },
    SqWord { word: Vec<u32>, ring: SWRing, input: String, result: String },
    SpinLemma {
        t: u32,
        rank: u32,
        v: String,
        leading: String,
        leading_present: bool,
        remainder: String,
        remainder_max_gen: Option<u32>,
        remainder_bound: u32,
        holds: bool,
    },
    H { s: u64, h: u64 },
    QuillenGens { m: u32, generators: Vec<GeneratorRecord> },
    InIdeal { m: u32, poly: String, member: bool, combination: Vec<CofactorRecord> },
    SpinObstruction { k: u32, vanishes: bool, trace: Vec<String> },
    EulerCheck { chi_b1: i64, chi_b2: i64, chi_l: i64, chi_m: i64, holds: bool },
    Gysin { fiber: u32, base: GradedAbGroup, total: GradedAbGroup, torsion_free: bool },
    Btop { dim_b: u32, k: u32, s: u32, m: String, presentation: String, groups: Option<GradedAbGroup> },
    Classify { scenario: DdbScenario, verdict: Verdict, constraints: Vec<ConstraintCheck> },
    Glue {
        k: u32,
        ring: String,
        rows: Vec<GluingRow>,
        z2_count: usize,
        dimension: u32,
        admissible: AdmissibleDimensions,
    },
}

impl Report {
    pub fn render_text(&self) -> String {
        match self {
            Report::Sq { result, .. } | Report::SqWord { result, .. } => result.clone(),
            Report::SpinLemma { t, v, leading, leading_present, remainder, remainder_max_gen, remainder_bound, holds, .. } => {
                let max = remainder_max_gen.map_or("none".to_string(), |g| g.to_string());
                [
                    format!("v_{t} = {v}"),
                    format!("leading {leading} present: {leading_present}"),
                    format!("remainder: {remainder}"),
                    format!("remainder max generator: {max} (bound {remainder_bound})"),
                    format!("lemma holds: {holds}"),
                ]
                .join("\n")
            }
            Report::H { h, .. } => h.to_string(),
            Report::QuillenGens { generators, .. } => generators
                .iter()
                .map(|g| {
                    let body = g.poly.clone().unwrap_or_else(|| "(not expanded)".into());
                    format!("{} [deg {}] = {}", g.label, g.degree, body)
                })
                .collect::<Vec<_>>()
                .join("\n"),
            Report::InIdeal { member, combination, .. } => {
                let mut lines = vec![if *member { "member".to_string() } else { "not a member".to_string() }];
                lines.extend(combination.iter().map(|c| format!("  ({}) * ({})", c.label, c.cofactor)));
                lines.join("\n")
            }
            Report::SpinObstruction { vanishes, trace, .. } => {
                let mut lines = vec![vanishes.to_string()];
                lines.extend(trace.iter().cloned());
                lines.join("\n")
            }
            Report::EulerCheck { chi_b1, chi_b2, chi_l, chi_m, holds } => {
                format!("{holds}\nchi(B1) + chi(B2) - chi(L) = {chi_b1} + {chi_b2} - {chi_l} = {chi_m}")
            }
            Report::Gysin { total, .. } => total.to_string(),
            Report::Btop { s, m, presentation, groups, .. } => {
                let order = if m == "m" { "m (unspecified, m >= 2)".to_string() } else { m.clone() };
                let mut lines = vec![format!("s = {s}"), format!("m = {order}"), presentation.clone()];
                if let Some(g) = groups {
                    lines.push(g.to_string());
                }
                lines.join("\n")
            }
            Report::Classify { verdict, constraints, .. } => {
                let mut lines = vec![format!("{:?}: {}", verdict.outcome, verdict.outcome)];
                for s in &verdict.trace {
                    lines.push(format!("  {:?} [{:?}] {} -- {}", s.rule, s.provenance, s.detail, s.citation));
                }
                lines.push("constraints:".into());
                for c in constraints {
                    let state = match (c.applicable, c.satisfied) {
                        (false, _) => "n/a",
                        (true, true) => "ok",
                        (true, false) => "FAILED",
                    };
                    lines.push(format!("  {:?} {state}: {}", c.rule, c.constraint));
                }
                lines.join("\n")
            }
            Report::Glue { k, ring, rows, z2_count, dimension, admissible } => {
                let mut lines = vec![format!("k = {k}, ring = {ring}"), "row1 | row2 | |det| | coker | verdict".into()];
                for r in rows {
                    lines.push(format!(
                        "{} | {} | {} | {} | {}",
                        r.psi.rows[0], r.psi.rows[1], r.abs_det, r.cokernel, r.verdict
                    ));
                }
                lines.push(format!("gluings with H^{{k+1}} = Z/2: {z2_count}"));
                lines.push(format!("M_f dimension: {dimension}"));
                let dims: Vec<String> = admissible.dimensions.iter().map(u32::to_string).collect();
                lines.push(format!("admissible dimensions: {{{}}}", dims.join(", ")));
                lines.join("\n")
            }
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn reject(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_REJECTED, message: format!("error: {e}") }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: format!("error: {e}") }
}

fn poly_error(e: CharClassError) -> Failure {
    match e {
        CharClassError::Syntax { .. } => usage(e),
        other => reject(other),
    }
}

fn ring_for(rank: u32, unoriented: bool) -> Result<SWRing, Failure> {
    let ring = if unoriented { SWRing::unoriented(rank) } else { SWRing::oriented(rank) };
    ring.map_err(reject)
}

fn parse_orientation(s: &str) -> Result<bool, Failure> {
    match s.trim().to_ascii_lowercase().as_str() {
        "o" | "orientable" | "true" | "1" => Ok(true),
        "n" | "non-orientable" | "nonorientable" | "false" | "0" => Ok(false),
        other => Err(usage(format!("unknown orientation '{other}'"))),
    }
}

fn execute(command: Command) -> Result<Report, Failure> {
    Ok(match command {
        Command::Sq { i, poly, rank, unoriented } => {
            let ring = ring_for(rank, unoriented)?;
            let p = parse_poly(&poly, ring).map_err(poly_error)?;
            Report::Sq { i, ring, input: p.to_string(), result: sq(i, &p).to_string() }
        }
        Command::SqWord { word, poly, rank, unoriented } => {
            let ring = ring_for(rank, unoriented)?;
            let p = parse_poly(&poly, ring).map_err(poly_error)?;
            let result = sq_word(&SqWord(word.clone()), &p).to_string();
            Report::SqWord { word, ring, input: p.to_string(), result }
        }
        Command::SpinLemma { t, rank } => {
            if t > 30 {
                return Err(reject(format!("t = {t} is too large")));
            }
            let rank = rank.unwrap_or((1 << (t + 1)) + 1);
            let ring = SWRing::oriented(rank).map_err(reject)?;
            let r = verify_spin_lemma(t, ring).map_err(reject)?;
            Report::SpinLemma {
                t,
                rank,
                v: r.v.to_string(),
                leading: format!("w{}", r.leading_index()),
                leading_present: r.leading_present,
                remainder: r.remainder.to_string(),
                remainder_max_gen: r.remainder_max_gen,
                remainder_bound: r.remainder_bound(),
                holds: r.holds(),
            }
        }
        Command::H { s } => Report::H { s, h: h(s).map_err(reject)? },
        Command::QuillenGens { m, max_degree } => {
            let ideal = quillen_generators_up_to(m, max_degree).map_err(reject)?;
            let generators = ideal
                .generators()
                .iter()
                .enumerate()
                .map(|(index, g)| GeneratorRecord {
                    index,
                    label: g.label(),
                    degree: g.degree,
                    poly: g.poly.as_ref().map(ToString::to_string),
                })
                .collect();
            Report::QuillenGens { m, generators }
        }
        Command::InIdeal { m, poly, max_degree } => {
            let ideal = quillen_generators_up_to(m, max_degree).map_err(reject)?;
            let p = parse_poly(&poly, ideal.ring()).map_err(poly_error)?;
            let cert = in_ideal_capped(&p, &ideal, max_degree).map_err(reject)?;
            let combination = cert
                .combination
                .iter()
                .map(|(i, c)| CofactorRecord {
                    generator: *i,
                    label: ideal.generators()[*i].label(),
                    cofactor: c.to_string(),
                })
                .collect();
            Report::InIdeal { m, poly: p.to_string(), member: cert.member, combination }
        }
        Command::SpinObstruction { k, max_degree } => {
            let o = spin_top_class_vanishes_capped(k, max_degree).map_err(reject)?;
            Report::SpinObstruction { k, vanishes: o.vanishes, trace: o.trace() }
        }
        Command::EulerCheck { chi } => {
            let [b1, b2, l] = chi[..] else {
                return Err(usage("--chi takes exactly three values B1,B2,L"));
            };
            Report::EulerCheck { chi_b1: b1, chi_b2: b2, chi_l: l, chi_m: b1 + b2 - l, holds: ddb_euler_check(b1, b2, l) }
        }
        Command::Gysin { fiber, base } => {
            let text = std::fs::read_to_string(&base)
                .map_err(|e| usage(format!("cannot read {}: {e}", base.display())))?;
            let base: GradedAbGroup = text.parse().map_err(usage)?;
            let total = gysin_total_space(&base, fiber, true).map_err(reject)?;
            Report::Gysin { fiber, torsion_free: total.is_torsion_free(), base, total }
        }
        Command::Btop { dim, k } => {
            let r = btop_ring(dim, k).map_err(reject)?;
            Report::Btop {
                dim_b: r.dim_b,
                k: r.k,
                s: r.s,
                m: r.m.to_string(),
                presentation: r.presentation(),
                groups: r.group_data(),
            }
        }
        Command::Classify { n, l, orient } => {
            let ([l1, l2], [o1, o2]) = (&l[..], &orient[..]) else {
                return Err(usage("--l and --orient each take exactly two values"));
            };
            let scenario = DdbScenario {
                n,
                l1: *l1,
                l2: *l2,
                orient1: parse_orientation(o1)?,
                orient2: parse_orientation(o2)?,
            };
            let verdict = classify(&scenario).map_err(reject)?;
            let constraints = constraint_report(&scenario).map_err(reject)?;
            Report::Classify { scenario, verdict, constraints }
        }
        Command::Glue { k, ring } => {
            let (ring, name) = match ring {
                RingArg::ConnectedSum => (ConnectedSumRing::connected_sum(k), "connected-sum"),
                RingArg::Product => (ConnectedSumRing::product(k), "product"),
            };
            let ring = ring.map_err(reject)?;
            let rows = enumerate_gluings(&ring);
            let z2_count = rows.iter().filter(|r| r.verdict == GluingVerdict::RationalSphereWithZ2).count();
            Report::Glue {
                k,
                ring: name.into(),
                rows,
                z2_count,
                dimension: ring.total_dimension(),
                admissible: admissible_dimensions(),
            }
        }
    })
}

/// Parses `argv` (including the program name) and runs one command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandResult { exit_code, payload: e.render().to_string() };
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(report) => {
            let payload = if json {
                serde_json::to_string_pretty(&report).expect("reports serialize")
            } else {
                report.render_text()
            };
            CommandResult { exit_code: EXIT_OK, payload }
        }
        Err(Failure { code, message }) => CommandResult { exit_code: code, payload: message },
    }
}
