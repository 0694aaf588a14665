//! Evaluates the benchmark suite and aggregates the release gates.
//!
//! A run produces one [`ProblemResult`] per problem. With emission enabled
//! it additionally renders every atomic slice of every problem in both
//! polarities, decides each rendering with the ground oracle, and
//! cross-checks the oracle-implied verdict against the engine. The
//! aggregated [`RunReport`] carries the gate lists:
//!
//! - `mismatched` — engine verdict differs from the stored expectation;
//! - `discordant` — oracle-implied verdict differs from the engine on an
//!   encoded pair;
//! - `epr_violations` — an emission left the decidable fragment;
//! - `degradation_failures` — a degradation problem produced a definite
//!   (provable) encoding in either polarity;
//! - `false_conflicts` — an aligned verdict reported `CONFLICT` where the
//!   source KB did not;
//! - `closed_unknown_grounded` — a closed-mode run left a fully grounded
//!   problem undecided for an epistemic (non-structural) reason;
//! - `unsound_runtime` — a `CONFLICT` verdict contradicted by an
//!   enumerated execution context.
//!
//! All gate lists must be empty for a release; [`RunReport::all_gates_pass`]
//! folds that into one flag.
//!
//! With the `parallel` feature (default), problems are evaluated with
//! rayon; `RunOptions::sequential` forces single-threaded evaluation for
//! comparison runs.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;

use crate::alignment::{aligned_verdict, restrict_kb, validate_alignment, AlignmentError};
use crate::constraint::{CompositeConstraint, CompositionMode, Constraint};
use crate::denotation::EvalMode;
use crate::encoder::{emit_problem_lenient, EncodeError, EncodedProblem, ExpectedStatus, Polarity};
use crate::kb::{ConceptId, KnowledgeBase};
use crate::runtime::exhaustive_soundness_check;
use crate::verdict::{
    check_composite, check_pair, compose, CompositeReport, KbRegistry, Verdict, VerdictError,
};

use super::{BenchmarkProblem, Category, ProblemBody, Suite};

/// Options for a suite run.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Evaluation mode for every problem.
    pub mode: EvalMode,
    /// Render and oracle-check TPTP/SMT-LIB emissions for every problem.
    pub emit: bool,
    /// Force single-threaded evaluation even when the `parallel` feature
    /// is enabled.
    pub sequential: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            mode: EvalMode::Open,
            emit: false,
            sequential: false,
        }
    }
}

/// Errors raised while running the suite.
#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("problem '{id}' references unknown KB '{kb}'")]
    UnknownKb { id: String, kb: String },
    #[error("problem '{id}': {source}")]
    Verdict { id: String, source: VerdictError },
    #[error("problem '{id}': {source}")]
    Alignment { id: String, source: AlignmentError },
    #[error("problem '{id}': {source}")]
    Encode { id: String, source: EncodeError },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// One emitted slice of a problem, decided in both polarities.
#[derive(Clone, Debug, Serialize)]
pub struct EncodingOutcome {
    /// Stable id: the problem id, extended with branch/operand markers for
    /// composite and multi-KB problems.
    pub encoding_id: String,
    /// Id of the KB the slice was encoded against.
    pub kb: String,
    /// Oracle status of the conflict-polarity problem.
    pub conflict_status: ExpectedStatus,
    /// Oracle status of the compatibility-polarity problem.
    pub compatible_status: ExpectedStatus,
    /// Verdict implied by the two statuses; `None` when both polarities
    /// claim a theorem, which no consistent encoding can produce.
    pub implied: Option<Verdict>,
    /// Open-mode engine verdict for the encoded pair.
    pub engine: Verdict,
    /// Whether the implied verdict equals the engine verdict.
    pub concordant: bool,
    /// Whether both renderings stay inside the decidable fragment.
    pub epr_ok: bool,
    /// The two renderings, in `[conflict, compatible]` order.
    #[serde(skip)]
    pub rendered: Vec<EncodedProblem>,
}

/// Runtime cross-check summary for one problem.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RuntimeSummary {
    /// Candidate contexts enumerated (one per concept).
    pub contexts_checked: usize,
    /// Contexts that satisfied both constraints.
    pub satisfying_both: usize,
    /// `false` only if a static `CONFLICT` was contradicted.
    pub sound: bool,
}

/// Result of evaluating one problem.
#[derive(Clone, Debug, Serialize)]
pub struct ProblemResult {
    pub id: String,
    pub category: Category,
    pub mode: EvalMode,
    /// Verdict the engine produced in this run.
    pub verdict: Verdict,
    /// Stored expectation for this mode.
    pub expected: Verdict,
    pub matched: bool,
    /// Whether every evaluated value grounded in its evaluation KB. An
    /// invalid alignment or a degraded translation counts as ungrounded.
    pub grounded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ConceptId>,
    /// Per-operand diagnostic for composite problems.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub composite: Option<CompositeReport>,
    /// Verdict in the source KB, for aligned problems.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime: Option<RuntimeSummary>,
    #[serde(skip_serializing_if = "crate::suite::is_false")]
    pub degradation: bool,
    /// Set when an aligned problem's map failed validation and the
    /// cross-KB verdict was refused.
    #[serde(skip_serializing_if = "crate::suite::is_false")]
    pub alignment_invalid: bool,
    pub encodings: Vec<EncodingOutcome>,
}

/// Aggregated run outcome.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub mode: EvalMode,
    pub total: usize,
    pub matched: usize,
    pub mismatched: Vec<String>,
    /// Total emitted slices (zero unless emission was requested).
    pub encodings: usize,
    pub concordant: usize,
    pub discordant: Vec<String>,
    pub epr_violations: Vec<String>,
    pub degradation_failures: Vec<String>,
    pub false_conflicts: Vec<String>,
    pub closed_unknown_grounded: Vec<String>,
    pub unsound_runtime: Vec<String>,
    pub results: Vec<ProblemResult>,
}

impl RunReport {
    /// True when every gate list is empty.
    pub fn all_gates_pass(&self) -> bool {
        self.mismatched.is_empty()
            && self.discordant.is_empty()
            && self.epr_violations.is_empty()
            && self.degradation_failures.is_empty()
            && self.false_conflicts.is_empty()
            && self.closed_unknown_grounded.is_empty()
            && self.unsound_runtime.is_empty()
    }
}

struct Ctx<'a> {
    suite: &'a Suite,
    registry: KbRegistry,
    options: RunOptions,
}

impl Ctx<'_> {
    fn kb(&self, problem_id: &str, kb_id: &str) -> Result<&KnowledgeBase, SuiteError> {
        self.suite.kb(kb_id).ok_or_else(|| SuiteError::UnknownKb {
            id: problem_id.to_owned(),
            kb: kb_id.to_owned(),
        })
    }
}

fn verdict_err(id: &str) -> impl Fn(VerdictError) -> SuiteError + '_ {
    move |source| SuiteError::Verdict {
        id: id.to_owned(),
        source,
    }
}

fn alignment_err(id: &str) -> impl Fn(AlignmentError) -> SuiteError + '_ {
    move |source| SuiteError::Alignment {
        id: id.to_owned(),
        source,
    }
}

fn values_ground(kb: &KnowledgeBase, constraints: &[&Constraint]) -> bool {
    constraints
        .iter()
        .all(|c| c.values().iter().all(|v| kb.ground(v).is_some()))
}

/// Renders one pair in both polarities and cross-checks oracle vs engine.
///
/// The engine side is always the open-mode pair verdict: the oracle decides
/// entailment from the stored axioms, which is exactly the open reading.
fn encode_pair(
    problem_id: &str,
    encoding_id: &str,
    kb: &KnowledgeBase,
    c1: &Constraint,
    c2: &Constraint,
) -> Result<EncodingOutcome, SuiteError> {
    let encode_err = |source| SuiteError::Encode {
        id: problem_id.to_owned(),
        source,
    };
    let conflict =
        emit_problem_lenient(kb, c1, c2, Polarity::Conflict, encoding_id).map_err(encode_err)?;
    let compatible =
        emit_problem_lenient(kb, c1, c2, Polarity::Compatible, encoding_id).map_err(encode_err)?;
    let epr_ok = conflict.epr_compliant() && compatible.epr_compliant();
    let implied = match (conflict.expected, compatible.expected) {
        (ExpectedStatus::Theorem, ExpectedStatus::CounterSatisfiable) => Some(Verdict::Conflict),
        (ExpectedStatus::CounterSatisfiable, ExpectedStatus::Theorem) => Some(Verdict::Compatible),
        (ExpectedStatus::CounterSatisfiable, ExpectedStatus::CounterSatisfiable) => {
            Some(Verdict::Unknown)
        }
        (ExpectedStatus::Theorem, ExpectedStatus::Theorem) => None,
    };
    let engine = check_pair(kb, c1, c2, EvalMode::Open)
        .map_err(verdict_err(problem_id))?
        .verdict;
    Ok(EncodingOutcome {
        encoding_id: encoding_id.to_owned(),
        kb: kb.id().to_owned(),
        conflict_status: conflict.expected,
        compatible_status: compatible.expected,
        implied,
        engine,
        concordant: implied == Some(engine),
        epr_ok,
        rendered: vec![conflict, compatible],
    })
}

/// Atomic left-leaf/right-leaf pairs of a composite, tagged with the
/// 1-based index of the top-level left branch each belongs to.
fn composite_slices<'a>(
    left: &'a CompositeConstraint,
    right: &'a CompositeConstraint,
) -> Vec<(usize, &'a Constraint, &'a Constraint)> {
    let branches: Vec<&CompositeConstraint> = match left {
        CompositeConstraint::Node { children, .. } => children.iter().collect(),
        CompositeConstraint::Leaf(_) => vec![left],
    };
    let right_leaves = right.leaves();
    let mut out = Vec::new();
    for (bi, branch) in branches.iter().enumerate() {
        for l in branch.leaves() {
            for r in &right_leaves {
                if l.left_operand() == r.left_operand() {
                    out.push((bi + 1, l, *r));
                }
            }
        }
    }
    out
}

fn runtime_summary(
    kb: &KnowledgeBase,
    c1: &Constraint,
    c2: &Constraint,
    mode: EvalMode,
    problem_id: &str,
) -> Result<RuntimeSummary, SuiteError> {
    let report =
        exhaustive_soundness_check(kb, c1, c2, mode).map_err(verdict_err(problem_id))?;
    Ok(RuntimeSummary {
        contexts_checked: report.checked,
        satisfying_both: report.satisfying_both.len(),
        sound: report.sound,
    })
}

fn eval_problem(ctx: &Ctx<'_>, p: &BenchmarkProblem) -> Result<ProblemResult, SuiteError> {
    let mode = ctx.options.mode;
    let expected = p.expected(mode);

    let mut verdict = Verdict::Unknown;
    let mut grounded = false;
    let mut witness = None;
    let mut composite = None;
    let mut source_verdict = None;
    let mut runtime = None;
    let mut alignment_invalid = false;
    let mut encodings = Vec::new();

    match &p.body {
        ProblemBody::Pair { c1, c2 } | ProblemBody::Runtime { c1, c2 } => {
            let kb_id = p.kb.as_deref().unwrap_or("");
            let kb = ctx.kb(&p.id, kb_id)?;
            let pv = check_pair(kb, c1, c2, mode).map_err(verdict_err(&p.id))?;
            verdict = pv.verdict;
            witness = pv.witness;
            grounded = values_ground(kb, &[c1, c2]);
            // Runtime problems always cross-check against enumerated
            // contexts; any pair claiming CONFLICT is cross-checked too,
            // since soundness is what a conflict verdict promises.
            if matches!(p.body, ProblemBody::Runtime { .. }) || verdict == Verdict::Conflict {
                runtime = Some(runtime_summary(kb, c1, c2, mode, &p.id)?);
            }
            if ctx.options.emit {
                encodings.push(encode_pair(&p.id, &p.id, kb, c1, c2)?);
            }
        }
        ProblemBody::Composite { left, right } => {
            let report =
                check_composite(&ctx.registry, left, right, mode).map_err(verdict_err(&p.id))?;
            verdict = report.verdict;
            grounded = left
                .leaves()
                .iter()
                .chain(right.leaves().iter())
                .all(|c| match ctx.registry.get(c.left_operand()) {
                    Some(kb) => values_ground(kb, &[c]),
                    None => false,
                });
            composite = Some(report);
            if ctx.options.emit {
                let slices = composite_slices(left, right);
                let mut base_totals: BTreeMap<String, usize> = BTreeMap::new();
                for (bi, l, _) in &slices {
                    *base_totals
                        .entry(format!("{}_b{}_{}", p.id, bi, l.left_operand()))
                        .or_default() += 1;
                }
                let mut base_seen: BTreeMap<String, usize> = BTreeMap::new();
                for (bi, l, r) in &slices {
                    let base = format!("{}_b{}_{}", p.id, bi, l.left_operand());
                    let seen = base_seen.entry(base.clone()).or_default();
                    *seen += 1;
                    let encoding_id = if base_totals[&base] > 1 {
                        format!("{base}_{seen}")
                    } else {
                        base
                    };
                    let kb = ctx
                        .registry
                        .get(l.left_operand())
                        .ok_or_else(|| SuiteError::UnknownKb {
                            id: p.id.clone(),
                            kb: l.left_operand().to_owned(),
                        })?;
                    encodings.push(encode_pair(&p.id, &encoding_id, kb, l, r)?);
                }
            }
        }
        ProblemBody::Aligned {
            target,
            alignment,
            c1,
            c2,
        } => {
            let kb_id = p.kb.as_deref().unwrap_or("");
            let source_kb = ctx.kb(&p.id, kb_id)?;
            let target_kb = ctx.kb(&p.id, target)?;
            if validate_alignment(source_kb, target_kb, alignment).is_empty() {
                let outcome = aligned_verdict(source_kb, target_kb, alignment, c1, c2, mode)
                    .map_err(alignment_err(&p.id))?;
                verdict = outcome.aligned.verdict;
                witness = outcome.aligned.witness;
                source_verdict = Some(outcome.source.verdict);
                let restricted =
                    restrict_kb(source_kb, target_kb, alignment).map_err(alignment_err(&p.id))?;
                grounded = values_ground(&restricted, &[c1, c2]);
                if ctx.options.emit {
                    encodings.push(encode_pair(&p.id, &p.id, &restricted, c1, c2)?);
                }
            } else {
                // No cross-KB verdict from a rejected map; the source-only
                // verdict is still reported and, when emitting, the source
                // KB carries the encoding.
                alignment_invalid = true;
                let pv = check_pair(source_kb, c1, c2, mode).map_err(verdict_err(&p.id))?;
                source_verdict = Some(pv.verdict);
                if ctx.options.emit {
                    encodings.push(encode_pair(&p.id, &p.id, source_kb, c1, c2)?);
                }
            }
        }
        ProblemBody::MultiAligned { items } => {
            let mut aligned_verdicts = Vec::with_capacity(items.len());
            let mut source_verdicts = Vec::with_capacity(items.len());
            grounded = true;
            for item in items {
                let source_kb = ctx.kb(&p.id, &item.alignment.source)?;
                let target_kb = ctx.kb(&p.id, &item.target)?;
                let outcome = aligned_verdict(
                    source_kb,
                    target_kb,
                    &item.alignment,
                    &item.c1,
                    &item.c2,
                    mode,
                )
                .map_err(alignment_err(&p.id))?;
                aligned_verdicts.push(outcome.aligned.verdict);
                source_verdicts.push(outcome.source.verdict);
                let restricted = restrict_kb(source_kb, target_kb, &item.alignment)
                    .map_err(alignment_err(&p.id))?;
                grounded &= values_ground(&restricted, &[&item.c1, &item.c2]);
                if ctx.options.emit {
                    let encoding_id = format!("{}_{}", p.id, item.c1.left_operand());
                    encodings.push(encode_pair(
                        &p.id,
                        &encoding_id,
                        &restricted,
                        &item.c1,
                        &item.c2,
                    )?);
                }
            }
            verdict = compose(CompositionMode::And, &aligned_verdicts);
            source_verdict = Some(compose(CompositionMode::And, &source_verdicts));
        }
    }

    Ok(ProblemResult {
        id: p.id.clone(),
        category: p.category,
        mode,
        verdict,
        expected,
        matched: verdict == expected,
        grounded,
        witness,
        composite,
        source_verdict,
        runtime,
        degradation: p.degradation,
        alignment_invalid,
        encodings,
    })
}

#[cfg(feature = "parallel")]
fn eval_all(ctx: &Ctx<'_>, problems: &[BenchmarkProblem]) -> Result<Vec<ProblemResult>, SuiteError> {
    if ctx.options.sequential {
        problems.iter().map(|p| eval_problem(ctx, p)).collect()
    } else {
        use rayon::prelude::*;
        problems.par_iter().map(|p| eval_problem(ctx, p)).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn eval_all(ctx: &Ctx<'_>, problems: &[BenchmarkProblem]) -> Result<Vec<ProblemResult>, SuiteError> {
    problems.iter().map(|p| eval_problem(ctx, p)).collect()
}

/// A closed-mode `UNKNOWN` on a grounded problem is tolerated only when it
/// is structural: an exclusivity (`xone`) table over branch verdicts that
/// are themselves all definite. Everything else signals an epistemic gap
/// that closed-world evaluation is supposed to have eliminated.
fn structurally_unknown(r: &ProblemResult) -> bool {
    match &r.composite {
        Some(report) => report
            .per_operand
            .values()
            .all(|o| o.verdict != Verdict::Unknown),
        None => false,
    }
}

/// Evaluates every problem and aggregates the gates.
pub fn run_suite(suite: &Suite, options: &RunOptions) -> Result<RunReport, SuiteError> {
    let ctx = Ctx {
        suite,
        registry: suite.registry(),
        options: *options,
    };
    let results = eval_all(&ctx, &suite.problems)?;

    let mut report = RunReport {
        mode: options.mode,
        total: results.len(),
        matched: 0,
        mismatched: Vec::new(),
        encodings: 0,
        concordant: 0,
        discordant: Vec::new(),
        epr_violations: Vec::new(),
        degradation_failures: Vec::new(),
        false_conflicts: Vec::new(),
        closed_unknown_grounded: Vec::new(),
        unsound_runtime: Vec::new(),
        results: Vec::new(),
    };

    for r in &results {
        if r.matched {
            report.matched += 1;
        } else {
            report.mismatched.push(r.id.clone());
        }
        for e in &r.encodings {
            report.encodings += 1;
            if e.concordant {
                report.concordant += 1;
            } else {
                report.discordant.push(e.encoding_id.clone());
            }
            if !e.epr_ok {
                report.epr_violations.push(e.encoding_id.clone());
            }
            // A degradation problem admits models either way; a provable
            // polarity means the encoding invented knowledge.
            if r.degradation
                && (e.conflict_status == ExpectedStatus::Theorem
                    || e.compatible_status == ExpectedStatus::Theorem)
            {
                report.degradation_failures.push(e.encoding_id.clone());
            }
        }
        if r.category == Category::Alignment
            && r.verdict == Verdict::Conflict
            && r.source_verdict.is_some_and(|s| s != Verdict::Conflict)
        {
            report.false_conflicts.push(r.id.clone());
        }
        if r.mode == EvalMode::Closed
            && r.grounded
            && r.verdict == Verdict::Unknown
            && !structurally_unknown(r)
        {
            report.closed_unknown_grounded.push(r.id.clone());
        }
        if let Some(rt) = &r.runtime {
            if !rt.sound {
                report.unsound_runtime.push(r.id.clone());
            }
        }
    }
    report.results = results;
    Ok(report)
}

/// Materializes a suite and a run's artifacts under `dir`:
///
/// ```text
/// dir/
///   report.json
///   kbs/<kb-id>.json
///   problems/<problem-id>/problem.json
///   problems/<problem-id>/result.json
///   problems/<problem-id>/<encoding-id>.conflict.p      (emission runs)
///   problems/<problem-id>/<encoding-id>.conflict.smt2
///   problems/<problem-id>/<encoding-id>.compatible.p
///   problems/<problem-id>/<encoding-id>.compatible.smt2
/// ```
pub fn write_suite(suite: &Suite, report: &RunReport, dir: &Path) -> io::Result<()> {
    let kbs_dir = dir.join("kbs");
    fs::create_dir_all(&kbs_dir)?;
    for (id, kb) in &suite.kbs {
        let text = serde_json::to_string_pretty(&kb.to_spec())?;
        fs::write(kbs_dir.join(format!("{id}.json")), text + "\n")?;
    }

    let by_id: BTreeMap<&str, &BenchmarkProblem> = suite
        .problems
        .iter()
        .map(|p| (p.id.as_str(), p))
        .collect();
    for r in &report.results {
        let pdir = dir.join("problems").join(&r.id);
        fs::create_dir_all(&pdir)?;
        if let Some(p) = by_id.get(r.id.as_str()) {
            let text = serde_json::to_string_pretty(p)?;
            fs::write(pdir.join("problem.json"), text + "\n")?;
        }
        let text = serde_json::to_string_pretty(r)?;
        fs::write(pdir.join("result.json"), text + "\n")?;
        for e in &r.encodings {
            for rendered in &e.rendered {
                let stem = format!("{}.{}", e.encoding_id, rendered.polarity.name());
                fs::write(pdir.join(format!("{stem}.p")), &rendered.tptp)?;
                fs::write(pdir.join(format!("{stem}.smt2")), &rendered.smtlib)?;
            }
        }
    }

    let text = serde_json::to_string_pretty(report)?;
    fs::write(dir.join("report.json"), text + "\n")?;
    Ok(())
}
