//! Command-line front end for the groundcheck conflict-detection engine.
//!
//! Exit codes encode tool success, never verdicts: an analysis that completes
//! exits 0 whether the answer is CONFLICT, COMPATIBLE, or UNKNOWN. Unreadable
//! or malformed input — including a semantically inconsistent knowledge base
//! or an invalid alignment passed to `align-check` — exits 2 with the reason
//! on stderr. `bench run` exits 1 when a release gate fails, so CI can tell a
//! broken engine from a bad invocation.
//!
//! Every payload is a JSON file; see `groundcheck::io` for the wire formats.
//! Commands that take `--kbdir` expect a directory containing `manifest.json`
//! mapping operand names to KB files (a direct path to a manifest also works).

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use groundcheck::alignment::{aligned_verdict, validate_alignment, DegradeReason};
use groundcheck::encoder::{emit_problem, ExpectedStatus, Polarity};
use groundcheck::io;
use groundcheck::kb::Domain;
use groundcheck::runtime::satisfies;
use groundcheck::suite::{build_builtin_suite, run_suite, write_suite, RunOptions, RunReport};
use groundcheck::verdict::PairVerdict;
use groundcheck::{
    check_composite, check_pair, denote, member3, ConceptId, Denotation, EvalMode, Kleene, Verdict,
};

#[derive(Parser)]
#[command(
    name = "groundcheck",
    version,
    about = "Knowledge-base-grounded conflict detection for ODRL-style constraints"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Evaluation mode shared by the analysis subcommands.
#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    /// Sound three-valued semantics over all completions of the KB.
    Open,
    /// Literal denotational semantics over the stored facts.
    Closed,
}

impl From<Mode> for EvalMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Open => EvalMode::Open,
            Mode::Closed => EvalMode::Closed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    /// TPTP FOF problem (`.p`).
    Tptp,
    /// SMT-LIB 2 script (`.smt2`).
    Smt2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CliPolarity {
    /// Conjecture that the pair is compatible (some witness exists).
    Compat,
    /// Conjecture that the pair conflicts (no concept satisfies both).
    Conflict,
}

impl From<CliPolarity> for Polarity {
    fn from(p: CliPolarity) -> Self {
        match p {
            CliPolarity::Compat => Polarity::Compatible,
            CliPolarity::Conflict => Polarity::Conflict,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Load a knowledge base file and report its shape; exits 2 with the
    /// violation if the KB is malformed or inconsistent.
    ValidateKb {
        /// Path to the KB JSON file.
        kb: PathBuf,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the denotation of a constraint: the concept set in closed mode,
    /// per-concept three-valued membership in open mode.
    Denote {
        /// Path to the KB JSON file.
        #[arg(long)]
        kb: PathBuf,
        /// Path to the constraint JSON file.
        #[arg(long)]
        constraint: PathBuf,
        #[arg(long, value_enum, default_value = "open")]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Three-valued conflict verdict for two constraints on one operand.
    Check {
        /// Path to the KB JSON file.
        #[arg(long)]
        kb: PathBuf,
        /// Path to the left constraint JSON file.
        #[arg(long)]
        left: PathBuf,
        /// Path to the right constraint JSON file.
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum, default_value = "open")]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Verdict for two composite rules, resolving one KB per operand from a
    /// manifest directory.
    CheckPolicy {
        /// Directory containing manifest.json plus the KB files it names.
        #[arg(long)]
        kbdir: PathBuf,
        /// Path to the left rule JSON file (constraint or and/or/xone tree).
        #[arg(long)]
        left: PathBuf,
        /// Path to the right rule JSON file.
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum, default_value = "open")]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Validate an alignment between two knowledge bases, listing every
    /// violation (always exits 0; validity is the result, not an error).
    AlignValidate {
        /// Path to the alignment JSON file.
        #[arg(long)]
        alignment: PathBuf,
        /// Path to the source KB JSON file.
        #[arg(long)]
        source: PathBuf,
        /// Path to the target KB JSON file.
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a constraint pair across an alignment: source-KB verdict plus
    /// the aligned verdict, which degrades to UNKNOWN on any witness loss.
    AlignCheck {
        /// Path to the alignment JSON file.
        #[arg(long)]
        alignment: PathBuf,
        /// Path to the source KB JSON file.
        #[arg(long)]
        source: PathBuf,
        /// Path to the target KB JSON file.
        #[arg(long)]
        target: PathBuf,
        /// Path to the left constraint JSON file.
        #[arg(long)]
        left: PathBuf,
        /// Path to the right constraint JSON file.
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum, default_value = "open")]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether an execution context satisfies a constraint
    /// (default-deny: unprovable membership is denial).
    Satisfies {
        /// Directory containing manifest.json plus the KB files it names.
        #[arg(long)]
        kbdir: PathBuf,
        /// Path to the context JSON file (flat operand-to-value map).
        #[arg(long)]
        context: PathBuf,
        /// Path to the constraint JSON file.
        #[arg(long)]
        constraint: PathBuf,
        #[arg(long, value_enum, default_value = "open")]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Emit a decidable TPTP or SMT-LIB 2 problem for a constraint pair.
    Encode {
        /// Path to the KB JSON file.
        #[arg(long)]
        kb: PathBuf,
        /// Path to the left constraint JSON file.
        #[arg(long)]
        left: PathBuf,
        /// Path to the right constraint JSON file.
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum)]
        polarity: CliPolarity,
        /// Output directory (created if missing).
        #[arg(long)]
        out: PathBuf,
        /// Problem id; names the output file `<id>.p` or `<id>.smt2`.
        #[arg(long, default_value = "problem")]
        id: String,
        #[arg(long)]
        json: bool,
    },
    /// Benchmark suite operations.
    Bench {
        #[command(subcommand)]
        action: BenchCommand,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Evaluate every built-in problem, cross-check the encoding oracle, and
    /// report the release gates; exits 1 if any gate fails.
    Run {
        /// Materialize the suite tree (kbs/, problems/<id>/, report.json)
        /// into this directory.
        #[arg(long)]
        suite: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "open")]
        mode: Mode,
        /// Print the full run report as JSON.
        #[arg(long)]
        json: bool,
        /// Skip TPTP/SMT-LIB emission and the oracle concordance check.
        #[arg(long)]
        verdicts_only: bool,
        /// Force single-threaded evaluation.
        #[arg(long)]
        sequential: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::ValidateKb { kb, json } => cmd_validate_kb(&kb, json),
        Command::Denote {
            kb,
            constraint,
            mode,
            json,
        } => cmd_denote(&kb, &constraint, mode.into(), json),
        Command::Check {
            kb,
            left,
            right,
            mode,
            json,
        } => cmd_check(&kb, &left, &right, mode.into(), json),
        Command::CheckPolicy {
            kbdir,
            left,
            right,
            mode,
            json,
        } => cmd_check_policy(&kbdir, &left, &right, mode.into(), json),
        Command::AlignValidate {
            alignment,
            source,
            target,
            json,
        } => cmd_align_validate(&alignment, &source, &target, json),
        Command::AlignCheck {
            alignment,
            source,
            target,
            left,
            right,
            mode,
            json,
        } => cmd_align_check(&alignment, &source, &target, &left, &right, mode.into(), json),
        Command::Satisfies {
            kbdir,
            context,
            constraint,
            mode,
            json,
        } => cmd_satisfies(&kbdir, &context, &constraint, mode.into(), json),
        Command::Encode {
            kb,
            left,
            right,
            format,
            polarity,
            out,
            id,
            json,
        } => cmd_encode(&kb, &left, &right, format, polarity.into(), &out, &id, json),
        Command::Bench {
            action:
                BenchCommand::Run {
                    suite,
                    mode,
                    json,
                    verdicts_only,
                    sequential,
                },
        } => cmd_bench_run(suite.as_deref(), mode.into(), json, verdicts_only, sequential),
    }
}

/// Resolves a `--kbdir` argument to its manifest file.
fn manifest_path(kbdir: &Path) -> PathBuf {
    if kbdir.is_file() {
        kbdir.to_path_buf()
    } else {
        kbdir.join("manifest.json")
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn mode_name(mode: EvalMode) -> &'static str {
    match mode {
        EvalMode::Open => "open",
        EvalMode::Closed => "closed",
    }
}

fn cmd_validate_kb(path: &Path, json: bool) -> Result<ExitCode> {
    let kb = io::load_kb(path)?;
    let spec = kb.to_spec();

    #[derive(Serialize)]
    struct Summary<'a> {
        valid: bool,
        id: &'a str,
        domain: Domain,
        una: bool,
        concepts: usize,
        leq_edges: usize,
        disjoint_pairs: usize,
        not_leq_pairs: usize,
        grounded_values: usize,
    }

    let summary = Summary {
        valid: true,
        id: &spec.id,
        domain: spec.domain,
        una: spec.una,
        concepts: spec.concepts.len(),
        leq_edges: spec.leq.len(),
        disjoint_pairs: spec.disjoint.len(),
        not_leq_pairs: spec.not_leq.len(),
        grounded_values: spec.gamma.len(),
    };

    if json {
        print_json(&summary)?;
    } else {
        println!("KB '{}' is valid", summary.id);
        println!("  domain: {}", summary.domain);
        println!("  concepts: {}", summary.concepts);
        println!("  leq edges (closure): {}", summary.leq_edges);
        println!("  disjoint pairs (closure): {}", summary.disjoint_pairs);
        println!("  asserted not-leq pairs: {}", summary.not_leq_pairs);
        println!("  grounded values: {}", summary.grounded_values);
        println!("  unique names: {}", summary.una);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_denote(kb_path: &Path, constraint: &Path, mode: EvalMode, json: bool) -> Result<ExitCode> {
    let kb = io::load_kb(kb_path)?;
    let c = io::load_constraint(constraint)?;
    let den = denote(&kb, &c);

    #[derive(Serialize)]
    struct Output<'a> {
        mode: EvalMode,
        operand: &'a str,
        grounded: bool,
        /// Closed-mode members (definite members in open mode); absent when
        /// the constraint does not ground.
        #[serde(skip_serializing_if = "Option::is_none")]
        denotation: Option<Vec<&'a str>>,
        /// Open mode only: three-valued membership for every concept.
        #[serde(skip_serializing_if = "Option::is_none")]
        membership: Option<BTreeMap<&'a str, Kleene>>,
    }

    match &den {
        Denotation::Top => {
            if json {
                print_json(&Output {
                    mode,
                    operand: c.left_operand(),
                    grounded: false,
                    denotation: None,
                    membership: None,
                })?;
            } else {
                println!("TOP");
                println!(
                    "a right-operand value has no grounding in KB '{}'; the denotation is indeterminate",
                    kb.id()
                );
            }
        }
        Denotation::Concrete(set) => match mode {
            EvalMode::Closed => {
                if json {
                    print_json(&Output {
                        mode,
                        operand: c.left_operand(),
                        grounded: true,
                        denotation: Some(set.iter().map(ConceptId::as_str).collect()),
                        membership: None,
                    })?;
                } else {
                    println!("{den}");
                }
            }
            EvalMode::Open => {
                let membership: BTreeMap<&str, Kleene> = kb
                    .concepts()
                    .iter()
                    .map(|x| {
                        let v = member3(&kb, x, &c).unwrap_or(Kleene::Unknown);
                        (x.as_str(), v)
                    })
                    .collect();
                if json {
                    let definite = membership
                        .iter()
                        .filter(|(_, v)| **v == Kleene::True)
                        .map(|(x, _)| *x)
                        .collect();
                    print_json(&Output {
                        mode,
                        operand: c.left_operand(),
                        grounded: true,
                        denotation: Some(definite),
                        membership: Some(membership),
                    })?;
                } else {
                    for (x, v) in &membership {
                        println!("{x}: {v}");
                    }
                }
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

/// Stable JSON schema shared by `check` (one operand) and mirrored by
/// `check-policy` (whose report carries the same field names).
#[derive(Serialize)]
struct PairOutput<'a> {
    verdict: Verdict,
    mode: EvalMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a ConceptId>,
    per_operand: BTreeMap<&'a str, OperandEntry<'a>>,
    blocking: Vec<&'a str>,
}

#[derive(Serialize)]
struct OperandEntry<'a> {
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a ConceptId>,
}

fn cmd_check(kb_path: &Path, left: &Path, right: &Path, mode: EvalMode, json: bool) -> Result<ExitCode> {
    let kb = io::load_kb(kb_path)?;
    let c1 = io::load_constraint(left)?;
    let c2 = io::load_constraint(right)?;
    let out = check_pair(&kb, &c1, &c2, mode)?;

    if json {
        let operand = c1.left_operand();
        let blocking = if out.verdict == Verdict::Compatible {
            Vec::new()
        } else {
            vec![operand]
        };
        let per_operand = BTreeMap::from([(
            operand,
            OperandEntry {
                verdict: out.verdict,
                witness: out.witness.as_ref(),
            },
        )]);
        print_json(&PairOutput {
            verdict: out.verdict,
            mode,
            witness: out.witness.as_ref(),
            per_operand,
            blocking,
        })?;
    } else {
        println!("{}", out.verdict);
        match (out.verdict, &out.witness) {
            (_, Some(w)) => println!("witness: {w}"),
            (Verdict::Conflict, None) => println!("no concept satisfies both constraints"),
            (Verdict::Unknown, None) => println!("the knowledge base cannot decide this pair"),
            (Verdict::Compatible, None) => {}
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check_policy(
    kbdir: &Path,
    left: &Path,
    right: &Path,
    mode: EvalMode,
    json: bool,
) -> Result<ExitCode> {
    let registry = io::load_registry(&manifest_path(kbdir))?;
    let lhs = io::load_policy(left)?;
    let rhs = io::load_policy(right)?;
    let report = check_composite(&registry, &lhs, &rhs, mode)?;

    if json {
        print_json(&report)?;
    } else {
        println!("{}", report.verdict);
        if report.shared_operands.is_empty() {
            println!("no shared operands; the rules cannot interact");
        }
        if !report.blocking.is_empty() {
            println!("blocking: {}", report.blocking.join(", "));
        }
        for (operand, outcome) in &report.per_operand {
            match &outcome.witness {
                Some(w) => println!("  {}: {} (witness: {})", operand, outcome.verdict, w),
                None => println!("  {}: {}", operand, outcome.verdict),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_align_validate(
    alignment: &Path,
    source: &Path,
    target: &Path,
    json: bool,
) -> Result<ExitCode> {
    let kb_a = io::load_kb(source)?;
    let kb_b = io::load_kb(target)?;
    let al = io::load_alignment(alignment)?;
    let violations = validate_alignment(&kb_a, &kb_b, &al);

    #[derive(Serialize)]
    struct Output<'a> {
        valid: bool,
        source: &'a str,
        target: &'a str,
        mapped: usize,
        violations: Vec<String>,
    }

    if json {
        print_json(&Output {
            valid: violations.is_empty(),
            source: &al.source,
            target: &al.target,
            mapped: al.map.len(),
            violations: violations.iter().map(|v| v.to_string()).collect(),
        })?;
    } else if violations.is_empty() {
        println!(
            "alignment '{}' -> '{}': valid ({} mapped concepts)",
            al.source,
            al.target,
            al.map.len()
        );
    } else {
        println!("alignment '{}' -> '{}': INVALID", al.source, al.target);
        for v in &violations {
            println!("  - {v}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn degrade_text(reason: &DegradeReason) -> String {
    match reason {
        DegradeReason::UngroundedValue { value } => {
            format!("value '{value}' has no grounding in the source KB")
        }
        DegradeReason::UnmappedConcept { concept } => {
            format!("concept '{concept}' has no image under the alignment")
        }
        DegradeReason::DenotationNotCovered { concept } => {
            format!("denotation member '{concept}' lies outside the mapped region")
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_align_check(
    alignment: &Path,
    source: &Path,
    target: &Path,
    left: &Path,
    right: &Path,
    mode: EvalMode,
    json: bool,
) -> Result<ExitCode> {
    let kb_a = io::load_kb(source)?;
    let kb_b = io::load_kb(target)?;
    let al = io::load_alignment(alignment)?;
    let c1 = io::load_constraint(left)?;
    let c2 = io::load_constraint(right)?;
    let out = aligned_verdict(&kb_a, &kb_b, &al, &c1, &c2, mode)?;

    #[derive(Serialize)]
    struct Output<'a> {
        mode: EvalMode,
        verdict: Verdict,
        source: &'a PairVerdict,
        aligned: &'a PairVerdict,
        #[serde(skip_serializing_if = "Option::is_none")]
        degraded: Option<&'a DegradeReason>,
    }

    if json {
        print_json(&Output {
            mode,
            verdict: out.aligned.verdict,
            source: &out.source,
            aligned: &out.aligned,
            degraded: out.degraded.as_ref(),
        })?;
    } else {
        println!("{}", out.aligned.verdict);
        match &out.source.witness {
            Some(w) => println!("source: {} (witness: {})", out.source.verdict, w),
            None => println!("source: {}", out.source.verdict),
        }
        if let Some(w) = &out.aligned.witness {
            println!("witness: {w}");
        }
        if let Some(reason) = &out.degraded {
            println!("degraded: {}", degrade_text(reason));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_satisfies(
    kbdir: &Path,
    context: &Path,
    constraint: &Path,
    mode: EvalMode,
    json: bool,
) -> Result<ExitCode> {
    let registry = io::load_registry(&manifest_path(kbdir))?;
    let ctx = io::load_context(context)?;
    let c = io::load_constraint(constraint)?;
    let ok = satisfies(&registry, &ctx, &c, mode);

    #[derive(Serialize)]
    struct Output<'a> {
        satisfied: bool,
        mode: EvalMode,
        operand: &'a str,
    }

    if json {
        print_json(&Output {
            satisfied: ok,
            mode,
            operand: c.left_operand(),
        })?;
    } else {
        println!("{}", if ok { "SATISFIED" } else { "DENIED" });
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_encode(
    kb_path: &Path,
    left: &Path,
    right: &Path,
    format: Format,
    polarity: Polarity,
    out: &Path,
    id: &str,
    json: bool,
) -> Result<ExitCode> {
    let kb = io::load_kb(kb_path)?;
    let c1 = io::load_constraint(left)?;
    let c2 = io::load_constraint(right)?;
    let problem = emit_problem(&kb, &c1, &c2, polarity, id)?;

    fs::create_dir_all(out)
        .with_context(|| format!("failed to create output directory {}", out.display()))?;
    let (ext, body) = match format {
        Format::Tptp => ("p", problem.tptp.as_str()),
        Format::Smt2 => ("smt2", problem.smtlib.as_str()),
    };
    let path = out.join(format!("{id}.{ext}"));
    fs::write(&path, body).with_context(|| format!("failed to write {}", path.display()))?;

    #[derive(Serialize)]
    struct Output<'a> {
        path: &'a Path,
        polarity: Polarity,
        expected: ExpectedStatus,
        epr: bool,
    }

    if json {
        print_json(&Output {
            path: &path,
            polarity: problem.polarity,
            expected: problem.expected,
            epr: problem.epr_compliant(),
        })?;
    } else {
        println!("wrote {}", path.display());
        println!("expected: {}", problem.expected.szs());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench_run(
    suite_dir: Option<&Path>,
    mode: EvalMode,
    json: bool,
    verdicts_only: bool,
    sequential: bool,
) -> Result<ExitCode> {
    let suite = build_builtin_suite();
    let options = RunOptions {
        mode,
        emit: !verdicts_only,
        sequential,
    };
    let report = run_suite(&suite, &options)?;
    if let Some(dir) = suite_dir {
        write_suite(&suite, &report, dir)
            .with_context(|| format!("failed to write suite tree to {}", dir.display()))?;
    }

    if json {
        print_json(&report)?;
    } else {
        print_report_summary(&report);
    }
    Ok(if report.all_gates_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_report_summary(report: &RunReport) {
    println!("mode: {}", mode_name(report.mode));
    println!(
        "problems: {} ({} matched, {} mismatched)",
        report.total,
        report.matched,
        report.mismatched.len()
    );
    println!(
        "encodings: {} ({} concordant, {} discordant)",
        report.encodings,
        report.concordant,
        report.discordant.len()
    );
    println!("epr violations: {}", report.epr_violations.len());
    println!("degradation failures: {}", report.degradation_failures.len());
    println!("false conflicts: {}", report.false_conflicts.len());
    println!(
        "closed-mode unknowns while grounded: {}",
        report.closed_unknown_grounded.len()
    );
    println!("unsound runtime conflicts: {}", report.unsound_runtime.len());
    for (label, ids) in [
        ("mismatched", &report.mismatched),
        ("discordant", &report.discordant),
        ("epr violations", &report.epr_violations),
        ("degradation failures", &report.degradation_failures),
        ("false conflicts", &report.false_conflicts),
        ("closed unknowns", &report.closed_unknown_grounded),
        ("unsound runtime", &report.unsound_runtime),
    ] {
        if !ids.is_empty() {
            println!("  {}: {}", label, ids.join(", "));
        }
    }
    println!(
        "gates: {}",
        if report.all_gates_pass() { "PASS" } else { "FAIL" }
    );
}
