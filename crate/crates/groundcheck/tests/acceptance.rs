//! End-to-end acceptance checklist.
//!
//! Each test prints exactly one `acceptance N (label): PASS/FAIL` line (visible
//! with `--nocapture`), so a full run reads as a release checklist. The
//! expectations here are frozen: they encode the documented behaviour of the
//! engine on canonical scenarios, structural edge cases, randomized oracle
//! equivalence, and the encoder/runtime gates.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use common::*;
use groundcheck::alignment::{
    align_constraint, aligned_verdict, restrict_kb, validate_alignment, AlignedConstraint,
    Alignment, AlignmentViolation,
};
use groundcheck::constraint::{CompositionMode, Operator};
use groundcheck::io;
use groundcheck::kb::{ConceptId, Domain, KbSpec, KnowledgeBase};
use groundcheck::runtime::{exhaustive_soundness_check, satisfies, ExecutionContext};
use groundcheck::suite::{build_builtin_suite, run_suite, ProblemBody, RunOptions};
use groundcheck::verdict::{check_composite, KbRegistry};
use groundcheck::{
    check_pair, compose, denote, CompositeConstraint, Constraint, EvalMode, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [EvalMode; 2] = [EvalMode::Closed, EvalMode::Open];

fn criterion(n: usize, label: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) if detail.is_empty() => println!("acceptance {n:2} ({label}): PASS"),
        Ok(detail) => println!("acceptance {n:2} ({label}): PASS ({detail})"),
        Err(msg) => {
            println!("acceptance {n:2} ({label}): FAIL — {msg}");
            panic!("acceptance criterion {n} ({label}) failed: {msg}");
        }
    }
}

fn expect(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn concept(s: &str) -> ConceptId {
    ConceptId::new(s)
}

fn unary(operand: &str, op: Operator, value: &str) -> Constraint {
    Constraint::unary(operand, op, value).unwrap()
}

/// Criterion 1: the flagship three-domain scenario. Two data-sharing rules
/// constrain spatial, purpose and language; the engine must localize the
/// conflict to the language operand while reporting the spatial operand
/// compatible and the purpose operand undecidable, well under a second.
#[test]
fn acceptance_01_flagship_scenario() {
    criterion(1, "three-domain composite localizes the conflict", || {
        let start = Instant::now();
        let dir = fixtures_dir();
        let registry = io::load_registry(dir.join("manifest.json")).map_err(|e| e.to_string())?;
        let left = io::load_policy(dir.join("left_policy.json")).map_err(|e| e.to_string())?;
        let right = io::load_policy(dir.join("right_policy.json")).map_err(|e| e.to_string())?;
        let report = check_composite(&registry, &left, &right, EvalMode::Open)
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();

        let verdict_of = |operand: &str| report.per_operand[operand].verdict;
        expect(verdict_of("spatial") == Verdict::Compatible, "spatial must be COMPATIBLE")?;
        expect(verdict_of("purpose") == Verdict::Unknown, "purpose must be UNKNOWN")?;
        expect(verdict_of("language") == Verdict::Conflict, "language must be CONFLICT")?;
        expect(
            report.per_operand["spatial"].witness == Some(concept("france")),
            "the spatial compatibility witness must be france",
        )?;
        expect(report.verdict == Verdict::Conflict, "the composite must be CONFLICT")?;
        expect(
            report.blocking == vec!["language".to_owned()],
            format!("blocking operands must be [language], got {:?}", report.blocking),
        )?;
        expect(
            elapsed < Duration::from_secs(1),
            format!("scenario took {elapsed:?}, budget is 1s"),
        )?;
        Ok(format!("{elapsed:?}"))
    });
}

/// Criterion 2: exclusivity needs the sibling refuted, not merely unproven.
/// The same xone rule is COMPATIBLE against a purpose that the declared
/// disjointness axiom excludes from the other branch, and UNKNOWN against a
/// purpose for which no such axiom exists.
#[test]
fn acceptance_02_xone_asymmetry() {
    criterion(2, "xone rests on declared disjointness", || {
        let mut s = KbSpec::new("PUR", Domain::Taxonomic);
        s.concepts = ["purpose", "research", "commercial", "nonCommercial", "cr", "ncr"]
            .iter()
            .map(|c| concept(c))
            .collect();
        s.leq = vec![
            (concept("research"), concept("purpose")),
            (concept("commercial"), concept("purpose")),
            (concept("nonCommercial"), concept("purpose")),
            (concept("cr"), concept("research")),
            (concept("cr"), concept("commercial")),
            (concept("ncr"), concept("research")),
            (concept("ncr"), concept("nonCommercial")),
        ];
        // The one declared axiom: non-commercial research excludes the whole
        // commercial branch. Nothing excludes commercial research from the
        // non-commercial branch.
        s.disjoint = vec![(concept("ncr"), concept("commercial"))];
        for c in ["commercial", "nonCommercial", "cr", "ncr"] {
            s.gamma.insert(c.to_owned(), concept(c));
        }
        let kb = KnowledgeBase::from_spec(&s).map_err(|e| e.to_string())?;
        let mut registry = KbRegistry::new();
        registry.insert("purpose", kb);

        let exclusive = CompositeConstraint::xone(vec![
            CompositeConstraint::leaf(unary("purpose", Operator::IsA, "commercial")),
            CompositeConstraint::leaf(unary("purpose", Operator::IsA, "nonCommercial")),
        ])
        .unwrap();
        let against = |value: &str, mode: EvalMode| {
            check_composite(
                &registry,
                &exclusive,
                &CompositeConstraint::leaf(unary("purpose", Operator::Eq, value)),
                mode,
            )
            .map(|r| r.verdict)
            .map_err(|e| e.to_string())
        };

        // ncr: the non-commercial branch admits it, the axiom refutes the
        // commercial branch — exactly one, provably.
        expect(
            against("ncr", EvalMode::Open)? == Verdict::Compatible,
            "xone vs ncr must be COMPATIBLE in open mode",
        )?;
        expect(
            against("ncr", EvalMode::Closed)? == Verdict::Compatible,
            "xone vs ncr must be COMPATIBLE in closed mode",
        )?;
        // cr: the commercial branch admits it, but without an axiom the
        // non-commercial branch is merely unproven, so exclusivity is not.
        expect(
            against("cr", EvalMode::Open)? == Verdict::Unknown,
            "xone vs cr must be UNKNOWN in open mode",
        )?;
        expect(
            against("cr", EvalMode::Closed)? == Verdict::Compatible,
            "xone vs cr must be COMPATIBLE under closed-world denotations",
        )?;
        Ok(String::new())
    });
}

/// Criterion 3: dropping a shared witness from an alignment fabricates
/// exclusivity; validation must reject the map, and completing it restores
/// compatibility on both sides of the alignment.
#[test]
fn acceptance_03_witness_loss() {
    criterion(3, "alignment validation guards shared witnesses", || {
        let mut src = KbSpec::new("SRC", Domain::Taxonomic);
        src.concepts = vec![concept("a"), concept("b"), concept("c")];
        src.leq = vec![(concept("a"), concept("b")), (concept("a"), concept("c"))];
        src.gamma.insert("vb".into(), concept("b"));
        src.gamma.insert("vc".into(), concept("c"));
        let source = KnowledgeBase::from_spec(&src).map_err(|e| e.to_string())?;

        let mut tgt = KbSpec::new("TGT", Domain::Taxonomic);
        tgt.concepts = vec![concept("A"), concept("B"), concept("C")];
        tgt.leq = vec![(concept("A"), concept("B")), (concept("A"), concept("C"))];
        let target = KnowledgeBase::from_spec(&tgt).map_err(|e| e.to_string())?;

        let partial = Alignment::new(
            "SRC",
            "TGT",
            vec![(concept("b"), concept("B")), (concept("c"), concept("C"))],
        );
        let violations = validate_alignment(&source, &target, &partial);
        let missing_a = |grounded: &str| {
            violations.iter().any(|v| {
                matches!(v, AlignmentViolation::WitnessIncomplete { grounded: g, missing }
                    if g == &concept(grounded) && missing == &concept("a"))
            })
        };
        expect(violations.len() == 2, format!("expected 2 violations, got {violations:?}"))?;
        expect(missing_a("b"), "b is grounded and mapped but its witness a is not")?;
        expect(missing_a("c"), "c is grounded and mapped but its witness a is not")?;
        expect(
            restrict_kb(&source, &target, &partial).is_err(),
            "a witness-incomplete alignment must not restrict",
        )?;

        let full = Alignment::new(
            "SRC",
            "TGT",
            vec![
                (concept("a"), concept("A")),
                (concept("b"), concept("B")),
                (concept("c"), concept("C")),
            ],
        );
        expect(
            validate_alignment(&source, &target, &full).is_empty(),
            "the completed alignment must validate",
        )?;
        let c1 = unary("field", Operator::IsA, "vb");
        let c2 = unary("field", Operator::IsA, "vc");
        for mode in MODES {
            let outcome = aligned_verdict(&source, &target, &full, &c1, &c2, mode)
                .map_err(|e| e.to_string())?;
            expect(
                outcome.source.verdict == Verdict::Compatible
                    && outcome.aligned.verdict == Verdict::Compatible,
                format!(
                    "expected (COMPATIBLE, COMPATIBLE) in {mode} mode, got ({}, {})",
                    outcome.source.verdict, outcome.aligned.verdict
                ),
            )?;
            expect(outcome.degraded.is_none(), "no degradation through the full map")?;
        }
        Ok(String::new())
    });
}

/// Criterion 4: structural edge cases — deep transitive chains, the
/// single-concept space, and nominal identity spaces.
#[test]
fn acceptance_04_structural_edge_cases() {
    criterion(4, "chains, singletons and nominal spaces", || {
        // Depth-5 chain: the bottom satisfies a constraint on the top only
        // through the transitive closure.
        let mut chain = KbSpec::new("CHAIN", Domain::Mereological);
        chain.concepts = (0..5).map(|i| concept(&format!("c{i}"))).collect();
        chain.leq = (0..4)
            .map(|i| (concept(&format!("c{i}")), concept(&format!("c{}", i + 1))))
            .collect();
        chain.gamma.insert("bottom".into(), concept("c0"));
        chain.gamma.insert("top".into(), concept("c4"));
        let chain_kb = KnowledgeBase::from_spec(&chain).map_err(|e| e.to_string())?;
        for mode in MODES {
            let v = check_pair(
                &chain_kb,
                &unary("field", Operator::IsA, "top"),
                &unary("field", Operator::Eq, "bottom"),
                mode,
            )
            .map_err(|e| e.to_string())?;
            expect(
                v.verdict == Verdict::Compatible && v.witness == Some(concept("c0")),
                format!("chain bottom-vs-top must be COMPATIBLE at c0 in {mode} mode"),
            )?;
        }

        // Single concept: nothing is unequal to the only inhabitant.
        let mut single = KbSpec::new("ONE", Domain::Taxonomic);
        single.concepts = vec![concept("only")];
        single.gamma.insert("g".into(), concept("only"));
        let single_kb = KnowledgeBase::from_spec(&single).map_err(|e| e.to_string())?;
        expect(
            denote(&single_kb, &unary("field", Operator::Neq, "g")).is_empty(),
            "neq over a singleton space must denote the empty set",
        )?;
        for mode in MODES {
            let v = check_pair(
                &single_kb,
                &unary("field", Operator::Eq, "g"),
                &unary("field", Operator::Neq, "g"),
                mode,
            )
            .map_err(|e| e.to_string())?;
            expect(
                v.verdict == Verdict::Conflict,
                format!("eq vs neq on a singleton must be CONFLICT in {mode} mode"),
            )?;
        }

        // Nominal space: the order is identity, so subsumption collapses to
        // equality for every groundable value.
        let mut nom = KbSpec::new("NOM", Domain::Nominal);
        nom.concepts = ["sftp", "https", "ftp", "email"].iter().map(|c| concept(c)).collect();
        for c in ["sftp", "https", "ftp", "email"] {
            nom.gamma.insert(c.to_owned(), concept(c));
        }
        let nom_kb = KnowledgeBase::from_spec(&nom).map_err(|e| e.to_string())?;
        for v in ["sftp", "https", "ftp", "email"] {
            expect(
                denote(&nom_kb, &unary("field", Operator::IsA, v))
                    == denote(&nom_kb, &unary("field", Operator::Eq, v)),
                format!("nominal isA {v} must denote exactly eq {v}"),
            )?;
        }
        Ok(String::new())
    });
}

/// Criterion 5: randomized equivalence against the brute-force oracles.
/// Closed mode is checked by independent closure plus direct set semantics;
/// open mode by quantification over every relational completion on
/// negation-saturated KBs, where three-valued evaluation is exact.
#[test]
fn acceptance_05_oracle_equivalence() {
    criterion(5, "engine matches the brute-force oracles", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0005);
        let mut mismatches: Vec<String> = Vec::new();
        let mut record = |tag: &str, case: usize, raw: &RawKb, c1: &Constraint, c2: &Constraint,
                          got: (Verdict, Option<String>), want: (Verdict, Option<String>)| {
            if mismatches.len() < 3 {
                mismatches.push(format!(
                    "{tag} case {case}: {c1} vs {c2} -> engine {got:?}, oracle {want:?}\n{raw:?}"
                ));
            } else {
                mismatches.push(format!("{tag} case {case}"));
            }
        };

        const CLOSED_CASES: usize = 6_000;
        for case in 0..CLOSED_CASES {
            let raw = gen_raw_kb(&mut rng, 6, true);
            let kb = raw.build("K");
            let keys = raw.gamma_keys();
            let c1 = gen_constraint(&mut rng, &keys, "field", 0.08);
            let c2 = gen_constraint(&mut rng, &keys, "field", 0.08);
            let got = check_pair(&kb, &c1, &c2, EvalMode::Closed).map_err(|e| e.to_string())?;
            let got = (got.verdict, got.witness.map(|w| w.as_str().to_owned()));
            let want = closed_oracle(&raw, &c1, &c2);
            if got != want {
                record("closed", case, &raw, &c1, &c2, got, want);
            }
        }

        const OPEN_CASES: usize = 4_500;
        for case in 0..OPEN_CASES {
            let raw = gen_raw_kb(&mut rng, 4, true).saturated();
            let kb = raw.build("K");
            let keys = raw.gamma_keys();
            let c1 = gen_constraint(&mut rng, &keys, "field", 0.08);
            let c2 = gen_constraint(&mut rng, &keys, "field", 0.08);
            let got = check_pair(&kb, &c1, &c2, EvalMode::Open).map_err(|e| e.to_string())?;
            let got = (got.verdict, got.witness.map(|w| w.as_str().to_owned()));
            let want = open_oracle(&raw, &c1, &c2);
            if got != want {
                record("open", case, &raw, &c1, &c2, got, want);
            }
        }

        let elapsed = start.elapsed();
        expect(
            mismatches.is_empty(),
            format!("{} mismatches:\n{}", mismatches.len(), mismatches.join("\n")),
        )?;
        expect(
            elapsed < Duration::from_secs(300),
            format!("oracle equivalence took {elapsed:?}, budget is 5min"),
        )?;
        Ok(format!("{} cases, {elapsed:?}", CLOSED_CASES + OPEN_CASES))
    });
}

/// Criterion 6: the three-valued composition tables, exhaustively on every
/// verdict vector up to length four, against an independent restatement.
#[test]
fn acceptance_06_composition_tables() {
    criterion(6, "composition tables are exact", || {
        let all = [Verdict::Conflict, Verdict::Compatible, Verdict::Unknown];
        let expected = |mode: CompositionMode, vs: &[Verdict]| -> Verdict {
            let n = vs.len();
            let cp = vs.iter().filter(|&&v| v == Verdict::Compatible).count();
            let cf = vs.iter().filter(|&&v| v == Verdict::Conflict).count();
            match mode {
                CompositionMode::And => {
                    if cf > 0 {
                        Verdict::Conflict
                    } else if cp == n {
                        Verdict::Compatible
                    } else {
                        Verdict::Unknown
                    }
                }
                CompositionMode::Or => {
                    if cp > 0 {
                        Verdict::Compatible
                    } else if cf == n {
                        Verdict::Conflict
                    } else {
                        Verdict::Unknown
                    }
                }
                CompositionMode::Xone => {
                    if cp == 1 && cf == n - 1 {
                        Verdict::Compatible
                    } else if cf == n {
                        Verdict::Conflict
                    } else {
                        Verdict::Unknown
                    }
                }
            }
        };
        let mut checked = 0usize;
        for len in 0..=4usize {
            let mut index = vec![0usize; len];
            loop {
                let vs: Vec<Verdict> = index.iter().map(|&i| all[i]).collect();
                for mode in [CompositionMode::And, CompositionMode::Or, CompositionMode::Xone] {
                    expect(
                        compose(mode, &vs) == expected(mode, &vs),
                        format!("{mode} over {vs:?}"),
                    )?;
                    checked += 1;
                }
                // Next vector in base-3 counting order.
                let mut pos = 0;
                loop {
                    if pos == len {
                        break;
                    }
                    index[pos] += 1;
                    if index[pos] < all.len() {
                        break;
                    }
                    index[pos] = 0;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
            }
        }
        Ok(format!("{checked} table entries"))
    });
}

/// Criterion 7: growing a KB (new groundings, new disjointness; concepts and
/// order fixed) never flips a definite verdict.
#[test]
fn acceptance_07_extension_monotonicity() {
    criterion(7, "definite verdicts survive KB extension", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0007);
        let mut events = 0usize;
        let mut definite = 0usize;
        let mut attempts = 0usize;
        while events < 1_000 {
            attempts += 1;
            expect(attempts < 20_000, "generator failed to produce enough extensions")?;
            let raw = gen_raw_kb(&mut rng, 5, true);
            let kb = raw.build("K");
            let keys = raw.gamma_keys();
            let c1 = gen_constraint(&mut rng, &keys, "field", 0.25);
            let c2 = gen_constraint(&mut rng, &keys, "field", 0.25);
            let ext = gen_extension(&mut rng, &raw);
            if ext.disjoint.len() == raw.disjoint.len() && ext.gamma.len() == raw.gamma.len() {
                continue;
            }
            events += 1;
            let ext_kb = ext.build("K");
            for mode in MODES {
                let base = check_pair(&kb, &c1, &c2, mode).map_err(|e| e.to_string())?;
                if base.verdict == Verdict::Unknown {
                    continue;
                }
                definite += 1;
                let grown = check_pair(&ext_kb, &c1, &c2, mode).map_err(|e| e.to_string())?;
                // Only the verdict is pinned: a compatibility witness may
                // legitimately move when new refutations enlarge the truth of
                // a negated operator.
                expect(
                    grown.verdict == base.verdict,
                    format!(
                        "extension flipped {} to {} in {mode} mode for {c1} vs {c2}\n{raw:?}\n{ext:?}",
                        base.verdict, grown.verdict
                    ),
                )?;
            }
        }
        expect(definite > 200, format!("only {definite} definite baselines"))?;
        Ok(format!("{events} extensions, {definite} definite baselines"))
    });
}

/// Criterion 8: across randomized valid alignments, translation never turns a
/// compatible or undecided pair into a conflict, and conflicts whose evidence
/// lies inside the mapped region are preserved.
#[test]
fn acceptance_08_alignment_safety() {
    criterion(8, "alignments never fabricate and do preserve conflicts", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0acc_0008);
        let mut preserved = 0usize;
        let mut refined = 0usize;
        for case in 0..1_000 {
            let ac = gen_aligned_case(&mut rng);
            let violations = validate_alignment(&ac.source, &ac.target, &ac.alignment);
            expect(
                violations.is_empty(),
                format!("case {case}: generated alignment invalid: {violations:?}"),
            )?;
            let keys = ac.raw.gamma_keys();
            let c1 = gen_constraint(&mut rng, &keys, "field", 0.05);
            let c2 = gen_constraint(&mut rng, &keys, "field", 0.05);
            let leq = ac.raw.leq_rows();
            let dom = ac.dom_mask();
            let inside = |c: &Constraint| -> bool {
                let grounded = c.values().iter().all(|v| {
                    ac.raw.gamma.get(v).is_some_and(|&g| dom >> g & 1 == 1)
                });
                grounded
                    && naive_denotation(ac.raw.n, &leq, &ac.raw.gamma, c)
                        .is_some_and(|den| den & !dom == 0)
            };
            for mode in MODES {
                let outcome = aligned_verdict(&ac.source, &ac.target, &ac.alignment, &c1, &c2, mode)
                    .map_err(|e| format!("case {case}: {e}"))?;
                // A compatible pair can never turn into a conflict: its
                // definite witness lies inside the closed denotations, which
                // a mapped translation keeps inside the image, and a degraded
                // translation answers UNKNOWN.
                expect(
                    !(outcome.source.verdict == Verdict::Compatible
                        && outcome.aligned.verdict == Verdict::Conflict),
                    format!(
                        "case {case} {mode}: {c1} vs {c2} was COMPATIBLE at the source but CONFLICT through the alignment"
                    ),
                )?;
                match mode {
                    // The denotational reading never strengthens through a
                    // valid alignment: zero transitions into CONFLICT.
                    EvalMode::Closed => expect(
                        !(outcome.source.verdict != Verdict::Conflict
                            && outcome.aligned.verdict == Verdict::Conflict),
                        format!(
                            "case {case} closed: {c1} vs {c2} was {} at the source but CONFLICT through the alignment",
                            outcome.source.verdict
                        ),
                    )?,
                    // Restriction shrinks the space the open refutation
                    // quantifier ranges over, so the image may decide a pair
                    // the full source left open — but only when the source's
                    // own denotational reading already called it CONFLICT.
                    // Anything else would be a fabricated conflict.
                    EvalMode::Open => {
                        if outcome.aligned.verdict == Verdict::Conflict
                            && outcome.source.verdict == Verdict::Unknown
                        {
                            let closed_src = check_pair(&ac.source, &c1, &c2, EvalMode::Closed)
                                .map_err(|e| e.to_string())?;
                            expect(
                                closed_src.verdict == Verdict::Conflict,
                                format!(
                                    "case {case} open: {c1} vs {c2} became CONFLICT through the alignment without definite evidence at the source"
                                ),
                            )?;
                            refined += 1;
                        }
                    }
                }
                if outcome.source.verdict == Verdict::Conflict && inside(&c1) && inside(&c2) {
                    preserved += 1;
                    expect(
                        outcome.aligned.verdict == Verdict::Conflict,
                        format!(
                            "case {case} {mode}: conflict inside the mapped region degraded to {}",
                            outcome.aligned.verdict
                        ),
                    )?;
                }
            }
        }
        expect(preserved > 50, format!("only {preserved} in-region conflicts observed"))?;
        Ok(format!(
            "{preserved} conflicts preserved, {refined} closed-backed open refinements"
        ))
    });
}

/// Satisfaction of a composite rule by a runtime context: leaves through the
/// default-deny satisfaction test, trees by their logical reading.
fn satisfies_tree(
    registry: &KbRegistry,
    ctx: &ExecutionContext,
    tree: &CompositeConstraint,
    mode: EvalMode,
) -> bool {
    match tree {
        CompositeConstraint::Leaf(c) => satisfies(registry, ctx, c, mode),
        CompositeConstraint::Node { mode: comp, children } => {
            let hits = children.iter().filter(|ch| satisfies_tree(registry, ctx, ch, mode)).count();
            match comp {
                CompositionMode::And => hits == children.len(),
                CompositionMode::Or => hits > 0,
                CompositionMode::Xone => hits == 1,
            }
        }
    }
}

/// One representative value per concept and operand (least gamma preimage).
fn operand_values(kb: &KnowledgeBase) -> Vec<String> {
    let mut preimage: BTreeMap<&ConceptId, &str> = BTreeMap::new();
    for (v, g) in kb.gamma_entries() {
        preimage.entry(g).or_insert(v);
    }
    preimage.into_values().map(str::to_owned).collect()
}

/// Criterion 9: no context can satisfy both sides of a pair the engine calls
/// CONFLICT, across the whole built-in suite.
#[test]
fn acceptance_09_runtime_soundness() {
    criterion(9, "conflicts admit no satisfying context", || {
        let suite = build_builtin_suite();
        let registry = suite.registry();
        let checked = std::cell::Cell::new(0usize);

        let check_flat = |kb: &KnowledgeBase,
                          c1: &Constraint,
                          c2: &Constraint,
                          mode: EvalMode,
                          id: &str|
         -> Result<(), String> {
            let report = exhaustive_soundness_check(kb, c1, c2, mode).map_err(|e| e.to_string())?;
            expect(
                report.sound && report.satisfying_both.is_empty(),
                format!(
                    "{id} ({mode}): {} contexts satisfy both sides of a CONFLICT",
                    report.satisfying_both.len()
                ),
            )?;
            checked.set(checked.get() + 1);
            Ok(())
        };

        for p in &suite.problems {
            for mode in MODES {
                if p.expected(mode) != Verdict::Conflict {
                    continue;
                }
                match &p.body {
                    ProblemBody::Pair { c1, c2 } | ProblemBody::Runtime { c1, c2 } => {
                        let kb = suite.kb(p.kb.as_deref().unwrap()).unwrap();
                        check_flat(kb, c1, c2, mode, &p.id)?;
                    }
                    ProblemBody::Composite { left, right } => {
                        // Cross product of one representative context value per
                        // concept over every operand the two rules mention.
                        let operands: BTreeSet<&str> = left
                            .leaves()
                            .iter()
                            .chain(right.leaves().iter())
                            .map(|c| c.left_operand())
                            .collect();
                        let operands: Vec<&str> = operands.into_iter().collect();
                        let values: Vec<Vec<String>> = operands
                            .iter()
                            .map(|o| operand_values(registry.get(o).unwrap()))
                            .collect();
                        let mut cursor = vec![0usize; operands.len()];
                        loop {
                            let mut ctx = ExecutionContext::new();
                            for (i, o) in operands.iter().enumerate() {
                                ctx = ctx.assign(*o, values[i][cursor[i]].clone());
                            }
                            expect(
                                !(satisfies_tree(&registry, &ctx, left, mode)
                                    && satisfies_tree(&registry, &ctx, right, mode)),
                                format!("{} ({mode}): context {ctx:?} satisfies both rules", p.id),
                            )?;
                            let mut pos = 0;
                            while pos < cursor.len() {
                                cursor[pos] += 1;
                                if cursor[pos] < values[pos].len() {
                                    break;
                                }
                                cursor[pos] = 0;
                                pos += 1;
                            }
                            if pos == cursor.len() {
                                break;
                            }
                        }
                        checked.set(checked.get() + 1);
                    }
                    ProblemBody::Aligned { target, alignment, c1, c2 } => {
                        let source = suite.kb(p.kb.as_deref().unwrap()).unwrap();
                        if check_pair(source, c1, c2, mode).map_err(|e| e.to_string())?.verdict
                            == Verdict::Conflict
                        {
                            check_flat(source, c1, c2, mode, &p.id)?;
                        }
                        let tgt = suite.kb(target).unwrap();
                        if let (AlignedConstraint::Mapped(m1), AlignedConstraint::Mapped(m2)) = (
                            align_constraint(source, alignment, c1),
                            align_constraint(source, alignment, c2),
                        ) {
                            let restricted =
                                restrict_kb(source, tgt, alignment).map_err(|e| e.to_string())?;
                            check_flat(&restricted, &m1, &m2, mode, &p.id)?;
                        }
                    }
                    ProblemBody::MultiAligned { items } => {
                        let source = suite.kb(p.kb.as_deref().unwrap()).unwrap();
                        for item in items {
                            if check_pair(source, &item.c1, &item.c2, mode)
                                .map_err(|e| e.to_string())?
                                .verdict
                                == Verdict::Conflict
                            {
                                check_flat(source, &item.c1, &item.c2, mode, &p.id)?;
                            }
                            let tgt = suite.kb(&item.target).unwrap();
                            if validate_alignment(source, tgt, &item.alignment).is_empty() {
                                if let (AlignedConstraint::Mapped(m1), AlignedConstraint::Mapped(m2)) = (
                                    align_constraint(source, &item.alignment, &item.c1),
                                    align_constraint(source, &item.alignment, &item.c2),
                                ) {
                                    let restricted = restrict_kb(source, tgt, &item.alignment)
                                        .map_err(|e| e.to_string())?;
                                    if check_pair(&restricted, &m1, &m2, mode)
                                        .map_err(|e| e.to_string())?
                                        .verdict
                                        == Verdict::Conflict
                                    {
                                        check_flat(&restricted, &m1, &m2, mode, &p.id)?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        expect(checked.get() > 20, format!("only {} conflict checks ran", checked.get()))?;
        Ok(format!("{} conflict checks", checked.get()))
    });
}

/// Criterion 10: every problem the suite emits passes the decidable-fragment
/// check in both formats, the internal ground oracle agrees with the engine
/// on all of them, and degradation problems stay counter-satisfiable.
#[test]
fn acceptance_10_encoder_gate() {
    criterion(10, "emitted problems are decidable and concordant", || {
        let suite = build_builtin_suite();
        let report = run_suite(
            &suite,
            &RunOptions {
                mode: EvalMode::Open,
                emit: true,
                sequential: false,
            },
        )
        .map_err(|e| e.to_string())?;

        expect(report.mismatched.is_empty(), format!("drift: {:?}", report.mismatched))?;
        expect(
            report.encodings >= 150,
            format!("only {} encodings emitted", report.encodings),
        )?;
        expect(
            report.epr_violations.is_empty(),
            format!("outside the decidable fragment: {:?}", report.epr_violations),
        )?;
        expect(
            report.concordant == report.encodings && report.discordant.is_empty(),
            format!(
                "{} of {} concordant, discordant: {:?}",
                report.concordant, report.encodings, report.discordant
            ),
        )?;
        expect(
            report.degradation_failures.is_empty(),
            format!("degradation gate: {:?}", report.degradation_failures),
        )?;
        expect(report.all_gates_pass(), "a release gate failed")?;

        let degradation_problems =
            suite.problems.iter().filter(|p| p.degradation).count();
        expect(degradation_problems > 0, "the suite must carry degradation problems")?;
        let mut rendered = 0usize;
        for r in &report.results {
            for e in &r.encodings {
                expect(e.epr_ok, format!("{} failed the fragment check", e.encoding_id))?;
                expect(
                    e.rendered.len() == 2,
                    format!("{} must render both polarities", e.encoding_id),
                )?;
                for enc in &e.rendered {
                    expect(
                        !enc.tptp.is_empty() && !enc.smtlib.is_empty(),
                        format!("{} must render both formats", e.encoding_id),
                    )?;
                    rendered += 2;
                }
            }
        }
        expect(rendered >= 300, format!("only {rendered} rendered artifacts"))?;
        Ok(format!(
            "{} encodings, {rendered} artifacts, {degradation_problems} degradation problems",
            report.encodings
        ))
    });
}
