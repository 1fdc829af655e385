//! Command-line front end: validation of fixture files, extension reports,
//! classification certificates, family materialization, and the self-test.
//!
//! Exit codes: 0 = everything passed, 1 = a verified mathematical failure,
//! 2 = input or usage error. The cyclotomic conductor bound can be raised
//! through the HOPFACT_CONDUCTOR_LIMIT environment variable (default 64).

use clap::{Args, Parser, Subcommand};
use hopfact::acceptance::{run_all, SelftestConfig};
use hopfact::families::{nichols_from_relations, rank_one, sweedler, RankOneDatum};
use hopfact::format::{parse_document, render_document, Document, HopfData, SectionData};
use hopfact::oracle::{classify_rank_one, SearchGrid};
use hopfact::paction::extension::{check_cod_volta, extend_formula};
use hopfact::paction::{verify_axioms, VerifyOptions};
use hopfact::scalar::Scalar;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "hopfact",
    version,
    about = "Exact verification of Hopf algebras, Hopf-Ore extensions and partial actions",
    after_help = "Exit codes: 0 = pass, 1 = verified mathematical failure, 2 = input error.\nHOPFACT_CONDUCTOR_LIMIT bounds the cyclotomic conductors of inputs (default 64)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a fixture file and run every applicable validator.
    Validate(ValidateArgs),
    /// Extend the base action in a fixture through the summation formula and
    /// report the compatibility conditions and axiom sweep.
    Extend(ExtendArgs),
    /// Classify the partial actions of a rank one Hopf algebra over a grid
    /// and write the certificate.
    Classify(ClassifyArgs),
    /// Materialize a named Hopf family as a fixture file.
    Family(FamilyArgs),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct ValidateArgs {
    /// Fixture file to validate.
    path: PathBuf,
}

#[derive(Args)]
struct ExtendArgs {
    /// Fixture file declaring a Hopf algebra, an Ore datum and a base action.
    path: PathBuf,
    /// Coefficients of w on the target basis, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    /// Truncation window; defaults to 2 d + 1 for d the order of chi(g).
    #[arg(long)]
    cap: Option<usize>,
    /// Also check the symmetric-side conditions.
    #[arg(long)]
    symmetric: bool,
    /// Degree bound for the compatibility conditions; defaults to 2 d.
    #[arg(long)]
    degree_bound: Option<usize>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Family: `sweedler`, `taft(n,d,qN)`, `radford(n,d,qN)` or
    /// `rankone(file)`.
    #[arg(long)]
    family: String,
    /// Fixture file whose first algebra section is the action target.
    #[arg(long)]
    target: PathBuf,
    /// Coefficient pool, comma separated scalars (default "0,1,-1").
    #[arg(long, allow_hyphen_values = true, default_value = "0,1,-1")]
    pool: String,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FamilyArgs {
    /// `sweedler`, `taft(n,d,qN)`, `radford(n,d,qN)` or `nichols(n)`.
    name: String,
    /// Output path (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Run only the criteria whose name contains this substring.
    #[arg(long)]
    filter: Option<String>,
    /// Fault injection for demonstration: `qcomb-idq` flips one identity.
    #[arg(long, hide = true)]
    mutate: Option<String>,
}

/// 0 = pass, 1 = verified mathematical failure, 2 = input error.
enum Outcome {
    Pass,
    MathFailure,
    InputError(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate(args) => cmd_validate(&args),
        Command::Extend(args) => cmd_extend(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Family(args) => cmd_family(&args),
        Command::Selftest(args) => cmd_selftest(&args),
    };
    match outcome {
        Outcome::Pass => ExitCode::SUCCESS,
        Outcome::MathFailure => ExitCode::from(1),
        Outcome::InputError(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Document, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_validate(args: &ValidateArgs) -> Outcome {
    let doc = match load(&args.path) {
        Ok(d) => d,
        Err(e) => return Outcome::InputError(e),
    };
    let mut all_ok = true;
    for (name, section) in &doc.sections {
        match section {
            SectionData::Algebra(data) => {
                let report = data.to_algebra().validate();
                if report.passed() {
                    println!("algebra {name}: PASS");
                } else {
                    all_ok = false;
                    println!(
                        "algebra {name}: FAIL (associativity witnesses {:?}, unit witnesses {:?})",
                        report.associativity_failures, report.unit_failures
                    );
                }
            }
            SectionData::Hopf(data) => {
                let report = data.to_hopf().validate();
                if report.passed() {
                    println!("hopf {name}: PASS");
                } else {
                    all_ok = false;
                    println!("hopf {name}: FAIL ({report:?})");
                }
            }
            SectionData::Ore(_) => match doc.ore_datum(name) {
                Ok(datum) => {
                    println!(
                        "ore {name}: PASS (chi(g) = {}, order {:?})",
                        datum.q(),
                        datum.order_of_q()
                    );
                }
                Err(e) => {
                    all_ok = false;
                    println!("ore {name}: FAIL ({e})");
                }
            },
            SectionData::Action(_) => match doc.action(name) {
                Ok(pa) => {
                    let report = verify_axioms(&pa, VerifyOptions::default());
                    if report.passed() {
                        println!("action {name}: PASS");
                    } else {
                        all_ok = false;
                        let describe = |label: &str, c: &hopfact::paction::CheckOutcome| {
                            if c.passed() {
                                format!("{label} ok")
                            } else {
                                format!("{label} fails ({} witnesses)", c.failures)
                            }
                        };
                        println!(
                            "action {name}: FAIL ({}, {}, {}{}{})",
                            describe("PA.1", &report.pa1),
                            describe("PA.2", &report.pa2),
                            describe("PA.3", &report.pa3),
                            report
                                .pa2prime
                                .as_ref()
                                .map(|c| format!(", {}", describe("PA.2'", c)))
                                .unwrap_or_default(),
                            report
                                .pas
                                .as_ref()
                                .map(|c| format!(", {}", describe("PA.S", c)))
                                .unwrap_or_default(),
                        );
                    }
                }
                Err(e) => return Outcome::InputError(e.to_string()),
            },
            SectionData::Grid(g) => {
                println!("grid {name}: {} pool entries", g.pool.len());
            }
            SectionData::RankOne(_) => match doc.rank_one_datum(name) {
                Ok(datum) => match datum.validate() {
                    Ok(d) => println!("rankone {name}: PASS (order of chi(g) = {d})"),
                    Err(e) => {
                        all_ok = false;
                        println!("rankone {name}: FAIL ({e})");
                    }
                },
                Err(e) => return Outcome::InputError(e.to_string()),
            },
        }
    }
    if all_ok {
        Outcome::Pass
    } else {
        Outcome::MathFailure
    }
}

fn cmd_extend(args: &ExtendArgs) -> Outcome {
    let doc = match load(&args.path) {
        Ok(d) => d,
        Err(e) => return Outcome::InputError(e),
    };
    let Some(ore_name) = doc.first_ore_name() else {
        return Outcome::InputError("fixture has no ore section".into());
    };
    let Some(action_name) = doc.first_action_name() else {
        return Outcome::InputError("fixture has no action section".into());
    };
    let datum = match doc.ore_datum(ore_name) {
        Ok(d) => d,
        Err(e) => return Outcome::InputError(e.to_string()),
    };
    let pa = match doc.action(action_name) {
        Ok(p) => p,
        Err(e) => return Outcome::InputError(e.to_string()),
    };
    let w = match parse_vector(&args.w, pa.target().dim()) {
        Ok(w) => w,
        Err(e) => return Outcome::InputError(e),
    };
    let cap = args.cap.unwrap_or_else(|| datum.default_cap());
    let degree_bound = args
        .degree_bound
        .unwrap_or_else(|| datum.order_of_q().map(|d| 2 * d as usize).unwrap_or(cap))
        .min(cap);

    println!("extending action `{action_name}` through `{ore_name}` with cap {cap}");
    if degree_bound >= 1 {
        match check_cod_volta(&pa, &datum, &w, args.symmetric, degree_bound) {
            Ok(report) => {
                println!(
                    "compatibility (degree bound {}): {}",
                    report.degree_bound,
                    report.verdict()
                );
                if let Some(witness) = &report.summation.witness {
                    println!("  summation witness at indices {:?}", witness.indices);
                }
                if let Some(sym) = &report.symmetric {
                    println!(
                        "symmetric compatibility: {}",
                        if sym.passed() { "holds" } else { "fails" }
                    );
                }
                match extend_formula(&pa, &datum, &w, cap) {
                    Ok(ext) => {
                        let ax = verify_axioms(
                            &ext,
                            VerifyOptions {
                                symmetric: args.symmetric,
                                pa2prime: true,
                            },
                        );
                        let fmt = |c: &hopfact::paction::CheckOutcome| {
                            if c.passed() {
                                "PASS"
                            } else {
                                "FAIL"
                            }
                        };
                        println!(
                            "axioms: PA.1 {} PA.2 {} PA.3 {} PA.2' {}{}",
                            fmt(&ax.pa1),
                            fmt(&ax.pa2),
                            fmt(&ax.pa3),
                            ax.pa2prime.as_ref().map(fmt).unwrap_or("-"),
                            ax.pas
                                .as_ref()
                                .map(|c| format!(" PA.S {}", fmt(c)))
                                .unwrap_or_default(),
                        );
                        let skipped = ax.pa3.skipped;
                        if skipped > 0 {
                            println!("out-of-window tuples skipped: {skipped}");
                        }
                        let sym_ok = report.symmetric.as_ref().map_or(true, |c| c.passed());
                        if report.summation.passed() && sym_ok && ax.passed() {
                            Outcome::Pass
                        } else {
                            Outcome::MathFailure
                        }
                    }
                    Err(e) => Outcome::InputError(e.to_string()),
                }
            }
            Err(e) => Outcome::InputError(e.to_string()),
        }
    } else {
        // cap 0: only the degree-zero restriction exists
        println!("degree bound 0: extension is the base action itself");
        let ax = verify_axioms(&pa, VerifyOptions::default());
        if ax.passed() {
            Outcome::Pass
        } else {
            Outcome::MathFailure
        }
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Outcome {
    let datum = match parse_family(&args.family) {
        Ok(FamilySpec::RankOne(datum)) => datum,
        Ok(FamilySpec::Nichols(_)) => {
            return Outcome::InputError("classification needs a rank-one family".into())
        }
        Err(e) => return Outcome::InputError(e),
    };
    let doc = match load(&args.target) {
        Ok(d) => d,
        Err(e) => return Outcome::InputError(e),
    };
    let Some((target_name, _)) = doc
        .sections
        .iter()
        .find(|(_, s)| matches!(s, SectionData::Algebra(_)))
    else {
        return Outcome::InputError("target fixture has no algebra section".into());
    };
    let target = match doc.algebra(target_name) {
        Ok(a) => Arc::new(a),
        Err(e) => return Outcome::InputError(e.to_string()),
    };
    let pool = match parse_pool(&args.pool) {
        Ok(p) => p,
        Err(e) => return Outcome::InputError(e),
    };
    let grid = SearchGrid::new(pool);
    let cert = match classify_rank_one(&datum, &target, &grid) {
        Ok(c) => c,
        Err(e) => return Outcome::InputError(e.to_string()),
    };
    let rendered = cert.render();
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return Outcome::InputError(format!("cannot write {}: {e}", path.display()));
            }
            println!(
                "certificate written to {} (match: {})",
                path.display(),
                cert.matches
            );
        }
        None => print!("{rendered}"),
    }
    if cert.matches {
        Outcome::Pass
    } else {
        Outcome::MathFailure
    }
}

enum FamilySpec {
    RankOne(RankOneDatum),
    Nichols(usize),
}

fn parse_family(spec: &str) -> Result<FamilySpec, String> {
    let spec = spec.trim();
    if spec == "sweedler" {
        let datum =
            RankOneDatum::cyclic(2, 2, Scalar::from_int(-1), false).map_err(|e| e.to_string())?;
        return Ok(FamilySpec::RankOne(datum));
    }
    if let Some(args) = spec
        .strip_prefix("nichols(")
        .and_then(|r| r.strip_suffix(')'))
    {
        let n: usize = args
            .trim()
            .parse()
            .map_err(|_| "bad nichols arity".to_string())?;
        if n < 2 {
            return Err("nichols(n) needs n >= 2".into());
        }
        return Ok(FamilySpec::Nichols(n));
    }
    if let Some(file) = spec
        .strip_prefix("rankone(")
        .and_then(|r| r.strip_suffix(')'))
    {
        let doc = load(Path::new(file.trim()))?;
        let Some((name, _)) = doc
            .sections
            .iter()
            .find(|(_, s)| matches!(s, SectionData::RankOne(_)))
        else {
            return Err(format!("{file} has no rankone section"));
        };
        let datum = doc.rank_one_datum(name).map_err(|e| e.to_string())?;
        return Ok(FamilySpec::RankOne(datum));
    }
    for (prefix, beta) in [("taft(", false), ("radford(", true)] {
        if let Some(args) = spec.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = args.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(format!("expected {prefix}n,d,qN)"));
            }
            let n: u32 = parts[0].parse().map_err(|_| "bad n".to_string())?;
            let d: u32 = parts[1].parse().map_err(|_| "bad d".to_string())?;
            let root: u32 = parts[2]
                .strip_prefix('q')
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| "q must look like q2, q3, ...".to_string())?;
            let q = Scalar::primitive_root(root);
            let datum = RankOneDatum::cyclic(n, d, q, beta).map_err(|e| e.to_string())?;
            return Ok(FamilySpec::RankOne(datum));
        }
    }
    Err(format!("unknown family `{spec}`"))
}

fn cmd_family(args: &FamilyArgs) -> Outcome {
    let (name, hopf) = if args.name.trim() == "sweedler" {
        ("H4".to_string(), sweedler())
    } else {
        match parse_family(&args.name) {
            Ok(FamilySpec::RankOne(datum)) => match rank_one(&datum) {
                Ok(h) => (args.name.replace(['(', ')', ','], "_"), h),
                Err(e) => return Outcome::InputError(e.to_string()),
            },
            Ok(FamilySpec::Nichols(n)) => (format!("nichols_{n}"), nichols_from_relations(n)),
            Err(e) => return Outcome::InputError(e),
        }
    };
    let doc = Document {
        sections: vec![(name, SectionData::Hopf(HopfData::from_hopf(&hopf)))],
    };
    let rendered = render_document(&doc);
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return Outcome::InputError(format!("cannot write {}: {e}", path.display()));
            }
            Outcome::Pass
        }
        None => {
            print!("{rendered}");
            Outcome::Pass
        }
    }
}

fn cmd_selftest(args: &SelftestArgs) -> Outcome {
    let cfg = SelftestConfig {
        mutate: args.mutate.as_deref(),
    };
    let outcomes = run_all(&cfg, args.filter.as_deref());
    if outcomes.is_empty() {
        return Outcome::InputError(format!(
            "no criterion matches filter `{}`",
            args.filter.as_deref().unwrap_or("")
        ));
    }
    let mut all_ok = true;
    for outcome in &outcomes {
        println!("{}", outcome.line());
        all_ok &= outcome.passed;
    }
    if all_ok {
        Outcome::Pass
    } else {
        Outcome::MathFailure
    }
}

fn parse_pool(s: &str) -> Result<Vec<Scalar>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<Scalar>().map_err(|e| e.to_string()))
        .collect()
}

fn parse_vector(s: &str, dim: usize) -> Result<hopfact::algebra::AlgElement, String> {
    let coeffs: Vec<Scalar> = s
        .split(',')
        .map(|t| t.trim().parse::<Scalar>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if coeffs.len() != dim {
        return Err(format!(
            "w must have {dim} coefficients, found {}",
            coeffs.len()
        ));
    }
    Ok(hopfact::algebra::AlgElement::from_coeffs(coeffs))
}
