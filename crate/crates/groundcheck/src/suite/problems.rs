//! The 154 built-in benchmark problems.
//!
//! Ids are grouped in blocks:
//!
//! - `ODRL010-029` — operator pairs over the three rich KBs, one ungrounded
//!   degradation case;
//! - `ODRL030-033` — conjunctive composite rules;
//! - `ODRL034-056` — further operator pairs, including every verdict class
//!   per operator;
//! - `ODRL057-069` — aligned pairs over the three total alignments plus one
//!   witness-incomplete rejection;
//! - `ODRL070-075` — pairs validated against exhaustive runtime contexts;
//! - `ODRL080-088` — disjunctive and exclusive composite rules;
//! - `ODRL090-096` — `neq`, including the singleton collapse and a KB
//!   without unique names;
//! - `ODRL100-106` — `hasPart`;
//! - `ODRL110-127` — set operators across mereological, negative-fact,
//!   no-unique-names and structural KBs;
//! - `ODRL140-147` — nominal-domain degeneration;
//! - `ODRL150-161` — cross-operator pairs;
//! - `ODRL170-178` — structural regressions (chain, diamond, singleton,
//!   near-miss lattice);
//! - `ODRL190-199` — partial-alignment degradation and aligned operator
//!   coverage;
//! - `ODRL200-207` — larger composite rules, including a nested
//!   conjunction over an alternative.
//!
//! Every expected verdict was fixed by evaluating the stored relations by
//! hand against the closed denotation semantics and the open three-valued
//! semantics; the runner re-checks them on every run, and emission
//! cross-checks each pair against the ground oracle.

use super::{fixtures, AlignedItem, BenchmarkProblem, Category, ProblemBody};
use crate::alignment::Alignment;
use crate::constraint::{CompositeConstraint, Constraint, Operator as Op};
use crate::verdict::Verdict;

const CF: Verdict = Verdict::Conflict;
const CP: Verdict = Verdict::Compatible;
const UN: Verdict = Verdict::Unknown;

fn c(operand: &str, op: Op, values: &[&str]) -> Constraint {
    Constraint::new(operand, op, values.iter().map(|v| (*v).to_owned()).collect())
        .expect("builtin constraint is well-formed")
}

fn leaf(operand: &str, op: Op, values: &[&str]) -> CompositeConstraint {
    CompositeConstraint::leaf(c(operand, op, values))
}

fn and(children: Vec<CompositeConstraint>) -> CompositeConstraint {
    CompositeConstraint::and(children).expect("non-empty")
}

fn or(children: Vec<CompositeConstraint>) -> CompositeConstraint {
    CompositeConstraint::or(children).expect("non-empty")
}

fn xone(children: Vec<CompositeConstraint>) -> CompositeConstraint {
    CompositeConstraint::xone(children).expect("non-empty")
}

#[allow(clippy::too_many_arguments)]
fn problem(
    id: &str,
    category: Category,
    kb: Option<&str>,
    body: ProblemBody,
    expect_closed: Verdict,
    expect_open: Verdict,
    degradation: bool,
    note: &str,
) -> BenchmarkProblem {
    BenchmarkProblem {
        id: format!("ODRL{id}"),
        category,
        kb: kb.map(str::to_owned),
        body,
        expect_closed,
        expect_open,
        degradation,
        note: note.to_owned(),
    }
}

fn op_pair(
    id: &str,
    kb: &str,
    c1: Constraint,
    c2: Constraint,
    closed: Verdict,
    open: Verdict,
    note: &str,
) -> BenchmarkProblem {
    problem(
        id,
        Category::Operators,
        Some(kb),
        ProblemBody::Pair { c1, c2 },
        closed,
        open,
        false,
        note,
    )
}

fn st_pair(
    id: &str,
    kb: &str,
    c1: Constraint,
    c2: Constraint,
    closed: Verdict,
    open: Verdict,
    note: &str,
) -> BenchmarkProblem {
    problem(
        id,
        Category::Structural,
        Some(kb),
        ProblemBody::Pair { c1, c2 },
        closed,
        open,
        false,
        note,
    )
}

fn rt_pair(
    id: &str,
    kb: &str,
    c1: Constraint,
    c2: Constraint,
    closed: Verdict,
    open: Verdict,
    note: &str,
) -> BenchmarkProblem {
    problem(
        id,
        Category::Runtime,
        Some(kb),
        ProblemBody::Runtime { c1, c2 },
        closed,
        open,
        false,
        note,
    )
}

fn comp(
    id: &str,
    left: CompositeConstraint,
    right: CompositeConstraint,
    closed: Verdict,
    open: Verdict,
    note: &str,
) -> BenchmarkProblem {
    problem(
        id,
        Category::Composition,
        None,
        ProblemBody::Composite { left, right },
        closed,
        open,
        false,
        note,
    )
}

#[allow(clippy::too_many_arguments)]
fn aligned(
    id: &str,
    source_kb: &str,
    target_kb: &str,
    alignment: Alignment,
    c1: Constraint,
    c2: Constraint,
    closed: Verdict,
    open: Verdict,
    degradation: bool,
    note: &str,
) -> BenchmarkProblem {
    problem(
        id,
        Category::Alignment,
        Some(source_kb),
        ProblemBody::Aligned {
            target: target_kb.to_owned(),
            alignment,
            c1,
            c2,
        },
        closed,
        open,
        degradation,
        note,
    )
}

/// `ODRL010-029`: eq / isA / isPartOf / isAnyOf / isAllOf / isNoneOf over
/// the three rich KBs plus one ungrounded value.
fn block_operator_core() -> Vec<BenchmarkProblem> {
    vec![
        op_pair(
            "010",
            "GEO000",
            c("spatial", Op::Eq, &["de"]),
            c("spatial", Op::Eq, &["de"]),
            CP,
            CP,
            "identical groundings are trivially joint-satisfiable",
        ),
        op_pair(
            "011",
            "GEO000",
            c("spatial", Op::Eq, &["de"]),
            c("spatial", Op::Eq, &["fr"]),
            CF,
            CF,
            "distinct concepts under unique names exclude each other",
        ),
        op_pair(
            "012",
            "DPV000",
            c("purpose", Op::Eq, &["scientificResearch"]),
            c("purpose", Op::Eq, &["https://w3id.org/dpv#ScientificResearch"]),
            CP,
            CP,
            "different value spellings ground to the same concept",
        ),
        op_pair(
            "013",
            "DPV000",
            c("purpose", Op::Eq, &["commercialResearch"]),
            c("purpose", Op::Eq, &["nonCommercialResearch"]),
            CF,
            CF,
            "sibling leaves are distinct under unique names",
        ),
        op_pair(
            "014",
            "LNG000",
            c("language", Op::Eq, &["de"]),
            c("language", Op::Eq, &["de"]),
            CP,
            CP,
            "same language code on both sides",
        ),
        op_pair(
            "015",
            "LNG000",
            c("language", Op::Eq, &["de"]),
            c("language", Op::Eq, &["en"]),
            CF,
            CF,
            "two distinct codes cannot both hold",
        ),
        op_pair(
            "016",
            "GEO000",
            c("spatial", Op::IsA, &["eu"]),
            c("spatial", Op::IsA, &["de"]),
            CP,
            CP,
            "nested downsets share the German regions",
        ),
        op_pair(
            "017",
            "DPV000",
            c("purpose", Op::IsA, &["commercial"]),
            c("purpose", Op::Eq, &["nonCommercialResearch"]),
            CF,
            CF,
            "stored disjointness refutes membership in the commercial branch",
        ),
        op_pair(
            "018",
            "LNG000",
            c("language", Op::IsA, &["de"]),
            c("language", Op::Eq, &["nl"]),
            CF,
            UN,
            "no axiom places Dutch under German, and none refutes it",
        ),
        op_pair(
            "019",
            "GEO000",
            c("spatial", Op::IsPartOf, &["eu"]),
            c("spatial", Op::Eq, &["fr"]),
            CP,
            CP,
            "France lies within Europe by a stored order fact",
        ),
        op_pair(
            "020",
            "GEO000",
            c("spatial", Op::IsPartOf, &["de"]),
            c("spatial", Op::Eq, &["fr"]),
            CF,
            CF,
            "disjoint regions cannot contain each other",
        ),
        op_pair(
            "021",
            "DPV000",
            c("purpose", Op::IsPartOf, &["research"]),
            c("purpose", Op::Eq, &["commercialResearch"]),
            CP,
            CP,
            "operator semantics follow the KB relation, not the label",
        ),
        op_pair(
            "022",
            "LNG000",
            c("language", Op::IsPartOf, &["gem"]),
            c("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "family disjointness propagates to member languages",
        ),
        op_pair(
            "023",
            "GEO000",
            c("spatial", Op::IsAnyOf, &["de", "fr"]),
            c("spatial", Op::Eq, &["by"]),
            CP,
            CP,
            "Bavaria satisfies the German disjunct",
        ),
        op_pair(
            "024",
            "DPV000",
            c("purpose", Op::IsAnyOf, &["commercial", "marketing"]),
            c("purpose", Op::Eq, &["nonCommercialResearch"]),
            CF,
            CF,
            "every disjunct is refuted by disjointness",
        ),
        op_pair(
            "025",
            "LNG000",
            c("language", Op::IsAnyOf, &["gem", "roa"]),
            c("language", Op::Eq, &["pt"]),
            CP,
            CP,
            "Portuguese satisfies the Romance disjunct",
        ),
        op_pair(
            "026",
            "GEO000",
            c("spatial", Op::IsAllOf, &["de", "fr"]),
            c("spatial", Op::Eq, &["by"]),
            CF,
            CF,
            "nothing lies within two disjoint regions",
        ),
        op_pair(
            "027",
            "DPV000",
            c("purpose", Op::IsAllOf, &["research", "commercial"]),
            c("purpose", Op::Eq, &["commercialResearch"]),
            CP,
            CP,
            "a concept with two stored parents satisfies the conjunction",
        ),
        op_pair(
            "028",
            "LNG000",
            c("language", Op::IsNoneOf, &["gem"]),
            c("language", Op::Eq, &["fr"]),
            CP,
            CP,
            "family disjointness proves the exclusion",
        ),
        {
            let mut p = op_pair(
                "029",
                "GEO000",
                c("spatial", Op::IsPartOf, &["asia"]),
                c("spatial", Op::Eq, &["de"]),
                UN,
                UN,
                "a value with no grounding degrades the whole check",
            );
            p.degradation = true;
            p
        },
    ]
}

/// `ODRL030-033`: conjunctive composites.
fn block_composition_and() -> Vec<BenchmarkProblem> {
    vec![
        comp(
            "030",
            and(vec![
                leaf("spatial", Op::IsPartOf, &["eu"]),
                leaf("purpose", Op::IsA, &["research"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["fr"]),
                leaf("purpose", Op::Eq, &["scientificResearch"]),
            ]),
            CP,
            CP,
            "both dimensions witness jointly",
        ),
        comp(
            "031",
            and(vec![
                leaf("spatial", Op::IsPartOf, &["de"]),
                leaf("purpose", Op::IsA, &["research"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["fr"]),
                leaf("purpose", Op::Eq, &["scientificResearch"]),
            ]),
            CF,
            CF,
            "one conflicting operand blocks the whole conjunction",
        ),
        comp(
            "032",
            and(vec![
                leaf("spatial", Op::IsPartOf, &["eu"]),
                leaf("purpose", Op::IsNoneOf, &["commercial"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["fr"]),
                leaf("purpose", Op::Eq, &["scientificResearch"]),
            ]),
            CP,
            UN,
            "the closed complement admits the purpose; open mode lacks the negative axiom",
        ),
        comp(
            "033",
            and(vec![
                leaf("spatial", Op::IsPartOf, &["eu"]),
                leaf("purpose", Op::IsA, &["commercial"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["fr"]),
                leaf("purpose", Op::Eq, &["nonCommercialResearch"]),
            ]),
            CF,
            CF,
            "the purpose dimension conflicts while the spatial one agrees",
        ),
    ]
}

/// `ODRL034-056`: remaining operator coverage, one verdict class at a time.
fn block_operator_extended() -> Vec<BenchmarkProblem> {
    vec![
        op_pair(
            "034",
            "GEO000",
            c("spatial", Op::IsA, &["fr"]),
            c("spatial", Op::Eq, &["by"]),
            CF,
            CF,
            "cross-branch membership is refuted through closed disjointness",
        ),
        op_pair(
            "035",
            "DPV000",
            c("purpose", Op::IsA, &["research"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            CP,
            "direct stored subsumption",
        ),
        op_pair(
            "036",
            "LNG000",
            c("language", Op::IsA, &["de"]),
            c("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "French is provably not under German",
        ),
        op_pair(
            "037",
            "DPV000",
            c("purpose", Op::IsA, &["nonCommercial"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CF,
            UN,
            "whether scientific research is non-commercial is left open by the KB",
        ),
        op_pair(
            "038",
            "GEO000",
            c("spatial", Op::IsPartOf, &["by"]),
            c("spatial", Op::Eq, &["de"]),
            CF,
            UN,
            "no stored fact refutes Germany lying within Bavaria",
        ),
        op_pair(
            "039",
            "DPV000",
            c("purpose", Op::IsPartOf, &["education"]),
            c("purpose", Op::Eq, &["marketing"]),
            CF,
            CF,
            "marketing and education are disjoint leaves",
        ),
        op_pair(
            "040",
            "LNG000",
            c("language", Op::IsPartOf, &["roa"]),
            c("language", Op::IsPartOf, &["fr"]),
            CP,
            CP,
            "nested downsets witness at French itself",
        ),
        op_pair(
            "041",
            "GEO000",
            c("spatial", Op::IsAnyOf, &["fr"]),
            c("spatial", Op::Eq, &["by"]),
            CF,
            CF,
            "a singleton set operator behaves exactly like isA",
        ),
        op_pair(
            "042",
            "DPV000",
            c("purpose", Op::IsAnyOf, &["research", "education"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            CP,
            "the research disjunct carries the witness",
        ),
        op_pair(
            "043",
            "LNG000",
            c("language", Op::IsAnyOf, &["de", "en"]),
            c("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "both disjuncts refuted across the family split",
        ),
        op_pair(
            "044",
            "LNG000",
            c("language", Op::IsAnyOf, &["de", "en"]),
            c("language", Op::Eq, &["nl"]),
            CF,
            UN,
            "Dutch under either Germanic sibling is neither stored nor refuted",
        ),
        op_pair(
            "045",
            "GEO000",
            c("spatial", Op::IsAllOf, &["eu", "de"]),
            c("spatial", Op::Eq, &["by"]),
            CP,
            CP,
            "Bavaria lies within both required regions",
        ),
        op_pair(
            "046",
            "LNG000",
            c("language", Op::IsAllOf, &["gem", "roa"]),
            c("language", Op::Eq, &["de"]),
            CF,
            CF,
            "no language sits under two disjoint families",
        ),
        op_pair(
            "047",
            "DPV000",
            c("purpose", Op::IsAllOf, &["research", "nonCommercial"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CF,
            UN,
            "one conjunct is stored, the other is an open question",
        ),
        op_pair(
            "048",
            "DPV000",
            c("purpose", Op::IsAllOf, &["marketing", "serviceProvision"]),
            c("purpose", Op::Eq, &["marketing"]),
            CF,
            UN,
            "an empty closed meet over non-disjoint leaves stays open-world undecided",
        ),
        op_pair(
            "049",
            "GEO000",
            c("spatial", Op::IsNoneOf, &["fr"]),
            c("spatial", Op::Eq, &["de"]),
            CP,
            CP,
            "disjointness proves Germany outside the excluded region",
        ),
        op_pair(
            "050",
            "DPV000",
            c("purpose", Op::IsNoneOf, &["commercial"]),
            c("purpose", Op::Eq, &["nonCommercialResearch"]),
            CP,
            CP,
            "the exclusion is provable from stored disjointness",
        ),
        op_pair(
            "051",
            "DPV000",
            c("purpose", Op::IsNoneOf, &["commercial"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            UN,
            "the closed complement admits it; open mode cannot prove the negative",
        ),
        op_pair(
            "052",
            "LNG000",
            c("language", Op::IsNoneOf, &["gem", "roa"]),
            c("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "stored subsumption refutes the exclusion",
        ),
        op_pair(
            "053",
            "GEO000",
            c("spatial", Op::IsNoneOf, &["by"]),
            c("spatial", Op::Eq, &["de"]),
            CP,
            UN,
            "excluding Bavaria from Germany's ancestry is not provable here",
        ),
        op_pair(
            "054",
            "DPV000",
            c("purpose", Op::Eq, &["education"]),
            c("purpose", Op::IsA, &["commercial"]),
            CF,
            UN,
            "education under commercial is neither stored nor refuted",
        ),
        op_pair(
            "055",
            "LNG000",
            c("language", Op::IsAllOf, &["gem"]),
            c("language", Op::Eq, &["nl"]),
            CP,
            CP,
            "a singleton isAllOf behaves exactly like isA",
        ),
        op_pair(
            "056",
            "GEO000",
            c("spatial", Op::IsAnyOf, &["by", "fr"]),
            c("spatial", Op::Eq, &["de"]),
            CF,
            UN,
            "one disjunct refuted, the other undecided",
        ),
    ]
}

/// `ODRL057-069`: pairs across the three total alignments plus one
/// witness-incomplete rejection.
fn block_alignment_core() -> Vec<BenchmarkProblem> {
    vec![
        aligned(
            "057",
            "GEO001",
            "GEO000",
            fixtures::aln_geo(),
            c("spatial", Op::Eq, &["EU"]),
            c("spatial", Op::Eq, &["EU"]),
            CP,
            CP,
            false,
            "identity survives translation",
        ),
        aligned(
            "058",
            "GEO001",
            "GEO000",
            fixtures::aln_geo(),
            c("spatial", Op::Eq, &["DE"]),
            c("spatial", Op::Eq, &["FR"]),
            CF,
            CF,
            false,
            "distinctness survives translation",
        ),
        aligned(
            "059",
            "GEO001",
            "GEO000",
            fixtures::aln_geo(),
            c("spatial", Op::IsPartOf, &["EU"]),
            c("spatial", Op::Eq, &["DE"]),
            CP,
            CP,
            false,
            "the containment witness maps onto Germany",
        ),
        aligned(
            "060",
            "GEO000",
            "GEO001",
            fixtures::aln_geo_bad(),
            c("spatial", Op::IsPartOf, &["de"]),
            c("spatial", Op::HasPart, &["by"]),
            UN,
            UN,
            false,
            "a witness-incomplete map is rejected, so no cross-KB verdict is issued",
        ),
        aligned(
            "061",
            "DPV001",
            "DPV000",
            fixtures::aln_dpv(),
            c("purpose", Op::IsA, &["urn:gdpr:research"]),
            c("purpose", Op::Eq, &["urn:gdpr:commercial-research"]),
            CP,
            CP,
            false,
            "stored subsumption maps onto stored subsumption",
        ),
        aligned(
            "062",
            "DPV001",
            "DPV000",
            fixtures::aln_dpv(),
            c("purpose", Op::IsA, &["urn:gdpr:commercial"]),
            c("purpose", Op::Eq, &["urn:gdpr:non-commercial-research"]),
            CF,
            CF,
            false,
            "the disjointness that grounds the conflict is preserved",
        ),
        aligned(
            "063",
            "DPV001",
            "DPV000",
            fixtures::aln_dpv(),
            c("purpose", Op::IsA, &["urn:gdpr:research"]),
            c("purpose", Op::Eq, &["urn:gdpr:marketing"]),
            CF,
            UN,
            false,
            "marketing under research stays an open question on both sides",
        ),
        aligned(
            "064",
            "LNG001",
            "LNG000",
            fixtures::aln_lng(),
            c("language", Op::IsA, &["gem"]),
            c("language", Op::Eq, &["deu"]),
            CP,
            CP,
            false,
            "family membership maps onto family membership",
        ),
        aligned(
            "065",
            "LNG001",
            "LNG000",
            fixtures::aln_lng(),
            c("language", Op::IsA, &["deu"]),
            c("language", Op::Eq, &["eng"]),
            CF,
            CF,
            false,
            "within-family disjointness is preserved",
        ),
        aligned(
            "066",
            "LNG001",
            "LNG000",
            fixtures::aln_lng(),
            c("language", Op::Neq, &["deu"]),
            c("language", Op::Eq, &["fra"]),
            CP,
            CP,
            false,
            "an inequality constraint translates cleanly",
        ),
        aligned(
            "067",
            "GEO001",
            "GEO000",
            fixtures::aln_geo(),
            c("spatial", Op::HasPart, &["DE"]),
            c("spatial", Op::Eq, &["EU"]),
            CP,
            CP,
            false,
            "upward containment translates cleanly",
        ),
        aligned(
            "068",
            "DPV001",
            "DPV000",
            fixtures::aln_dpv(),
            c("purpose", Op::IsNoneOf, &["urn:gdpr:commercial"]),
            c("purpose", Op::Eq, &["urn:gdpr:non-commercial-research"]),
            CP,
            CP,
            false,
            "the provable exclusion survives translation",
        ),
        aligned(
            "069",
            "LNG001",
            "LNG000",
            fixtures::aln_lng(),
            c("language", Op::IsA, &["fra"]),
            c("language", Op::Eq, &["roa"]),
            CF,
            UN,
            false,
            "whether the Romance family narrows to French alone is open on both sides",
        ),
    ]
}

/// `ODRL070-075`: static verdicts validated against exhaustive runtime
/// context enumeration.
fn block_runtime() -> Vec<BenchmarkProblem> {
    vec![
        rt_pair(
            "070",
            "GEO000",
            c("spatial", Op::Eq, &["de"]),
            c("spatial", Op::IsPartOf, &["fr"]),
            CF,
            CF,
            "no context can be both Germany and within France",
        ),
        rt_pair(
            "071",
            "DPV000",
            c("purpose", Op::Eq, &["nonCommercialResearch"]),
            c("purpose", Op::IsA, &["commercial"]),
            CF,
            CF,
            "no context satisfies a purpose and a branch disjoint from it",
        ),
        rt_pair(
            "072",
            "LNG000",
            c("language", Op::Eq, &["fr"]),
            c("language", Op::IsA, &["de"]),
            CF,
            CF,
            "a French request never passes a German-language gate",
        ),
        rt_pair(
            "073",
            "GEO000",
            c("spatial", Op::IsPartOf, &["eu"]),
            c("spatial", Op::Eq, &["by"]),
            CP,
            CP,
            "a Bavarian context satisfies both sides at runtime",
        ),
        rt_pair(
            "074",
            "NOM000",
            c("channel", Op::Eq, &["sftp"]),
            c("channel", Op::IsA, &["sftp"]),
            CP,
            CP,
            "nominal identity satisfies both constraint forms",
        ),
        rt_pair(
            "075",
            "DPV000",
            c("purpose", Op::IsNoneOf, &["commercial"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            UN,
            "open-mode execution denies the unprovable exclusion",
        ),
    ]
}

/// `ODRL080-088`: disjunctive and exclusive composites.
fn block_composition_or_xone() -> Vec<BenchmarkProblem> {
    let commercial_or_non = || {
        vec![
            leaf("purpose", Op::IsA, &["commercial"]),
            leaf("purpose", Op::IsA, &["nonCommercial"]),
        ]
    };
    vec![
        comp(
            "080",
            or(vec![
                leaf("purpose", Op::IsA, &["research"]),
                leaf("purpose", Op::IsA, &["commercial"]),
            ]),
            leaf("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            CP,
            "one compatible alternative suffices",
        ),
        comp(
            "081",
            or(commercial_or_non()),
            leaf("purpose", Op::Eq, &["nonCommercialResearch"]),
            CP,
            CP,
            "the non-commercial alternative carries the witness",
        ),
        comp(
            "082",
            or(vec![
                leaf("language", Op::IsA, &["de"]),
                leaf("language", Op::IsA, &["en"]),
            ]),
            leaf("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "every alternative conflicts",
        ),
        comp(
            "083",
            or(commercial_or_non()),
            leaf("purpose", Op::Eq, &["scientificResearch"]),
            CF,
            UN,
            "closed mode refutes both branches; open mode leaves each undecided",
        ),
        comp(
            "084",
            or(vec![
                leaf("spatial", Op::IsPartOf, &["de"]),
                leaf("language", Op::IsA, &["roa"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["fr"]),
                leaf("language", Op::Eq, &["fr"]),
            ]),
            CP,
            CP,
            "the language alternative rescues the rule",
        ),
        comp(
            "085",
            xone(commercial_or_non()),
            leaf("purpose", Op::Eq, &["nonCommercialResearch"]),
            CP,
            CP,
            "exactly one branch admits the purpose and the sibling is refuted",
        ),
        comp(
            "086",
            xone(commercial_or_non()),
            leaf("purpose", Op::Eq, &["commercialResearch"]),
            CP,
            UN,
            "exclusivity needs the sibling refuted, not merely unproven",
        ),
        comp(
            "087",
            xone(vec![
                leaf("language", Op::IsA, &["de"]),
                leaf("language", Op::IsA, &["en"]),
            ]),
            leaf("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "all exclusive branches conflict",
        ),
        comp(
            "088",
            xone(vec![
                leaf("purpose", Op::IsA, &["research"]),
                leaf("purpose", Op::IsA, &["purpose"]),
            ]),
            leaf("purpose", Op::Eq, &["scientificResearch"]),
            UN,
            UN,
            "two admitting branches break exclusivity in both modes",
        ),
    ]
}

/// `ODRL090-096`: inequality, the singleton collapse, and unique names.
fn block_neq() -> Vec<BenchmarkProblem> {
    vec![
        op_pair(
            "090",
            "GEO000",
            c("spatial", Op::Neq, &["de"]),
            c("spatial", Op::Eq, &["fr"]),
            CP,
            CP,
            "France is provably not Germany",
        ),
        op_pair(
            "091",
            "GEO000",
            c("spatial", Op::Neq, &["de"]),
            c("spatial", Op::Eq, &["de"]),
            CF,
            CF,
            "a value and its own exclusion",
        ),
        op_pair(
            "092",
            "DPV000",
            c("purpose", Op::Neq, &["commercialResearch"]),
            c("purpose", Op::Eq, &["nonCommercialResearch"]),
            CP,
            CP,
            "unique names separate the sibling purposes",
        ),
        op_pair(
            "093",
            "LNG000",
            c("language", Op::Neq, &["fr"]),
            c("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "self-exclusion conflicts in every mode",
        ),
        op_pair(
            "094",
            "NOM000",
            c("channel", Op::Neq, &["sftp"]),
            c("channel", Op::Eq, &["https"]),
            CP,
            CP,
            "nominal protocols are pairwise distinct",
        ),
        op_pair(
            "095",
            "SNG000",
            c("category", Op::Neq, &["urn:only"]),
            c("category", Op::Eq, &["urn:only"]),
            CF,
            CF,
            "over a single concept the complement collapses to the empty set",
        ),
        op_pair(
            "096",
            "DPV002",
            c("purpose", Op::Neq, &["commercialResearch"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            UN,
            "without unique names the two purposes might co-refer",
        ),
    ]
}

/// `ODRL100-106`: upward containment.
fn block_haspart() -> Vec<BenchmarkProblem> {
    vec![
        op_pair(
            "100",
            "GEO000",
            c("spatial", Op::HasPart, &["by"]),
            c("spatial", Op::Eq, &["de"]),
            CP,
            CP,
            "Germany contains Bavaria by a stored fact",
        ),
        op_pair(
            "101",
            "GEO000",
            c("spatial", Op::HasPart, &["fr"]),
            c("spatial", Op::Eq, &["de"]),
            CF,
            CF,
            "Germany provably does not contain France",
        ),
        op_pair(
            "102",
            "GEO000",
            c("spatial", Op::HasPart, &["de"]),
            c("spatial", Op::Eq, &["by"]),
            CF,
            UN,
            "Bavaria containing Germany is unrefuted by the stored facts",
        ),
        op_pair(
            "103",
            "DPV000",
            c("purpose", Op::HasPart, &["commercialResearch"]),
            c("purpose", Op::Eq, &["research"]),
            CP,
            CP,
            "the research branch contains commercial research",
        ),
        op_pair(
            "104",
            "DPV000",
            c("purpose", Op::HasPart, &["marketing"]),
            c("purpose", Op::Eq, &["research"]),
            CF,
            UN,
            "marketing under research is an open question",
        ),
        op_pair(
            "105",
            "LNG000",
            c("language", Op::HasPart, &["fr"]),
            c("language", Op::Eq, &["roa"]),
            CP,
            CP,
            "the Romance family contains French",
        ),
        op_pair(
            "106",
            "LNG000",
            c("language", Op::HasPart, &["gem"]),
            c("language", Op::Eq, &["fr"]),
            CF,
            CF,
            "French provably does not contain the Germanic family",
        ),
    ]
}

/// `ODRL110-127`: set operators across mereological, negative-fact,
/// no-unique-names and structural KBs.
fn block_set_operators() -> Vec<BenchmarkProblem> {
    vec![
        op_pair(
            "110",
            "GEO000",
            c("spatial", Op::IsAnyOf, &["de", "fr"]),
            c("spatial", Op::IsPartOf, &["eu"]),
            CP,
            CP,
            "either national region satisfies the European bound",
        ),
        op_pair(
            "111",
            "GEO000",
            c("spatial", Op::IsNoneOf, &["eu"]),
            c("spatial", Op::Eq, &["by"]),
            CF,
            CF,
            "nothing escapes the maximal region",
        ),
        op_pair(
            "112",
            "GEO002",
            c("spatial", Op::IsPartOf, &["by"]),
            c("spatial", Op::Eq, &["de"]),
            CF,
            CF,
            "a stored negative order fact refutes the containment",
        ),
        op_pair(
            "113",
            "GEO002",
            c("spatial", Op::HasPart, &["de"]),
            c("spatial", Op::Eq, &["by"]),
            CF,
            CF,
            "the negative fact also refutes the inverse form",
        ),
        op_pair(
            "114",
            "GEO002",
            c("spatial", Op::IsNoneOf, &["by"]),
            c("spatial", Op::Eq, &["de"]),
            CP,
            CP,
            "the negative fact proves the exclusion",
        ),
        op_pair(
            "115",
            "DPV003",
            c("purpose", Op::IsA, &["urn:gdpr:commercial"]),
            c("purpose", Op::Eq, &["urn:gdpr:research"]),
            CF,
            CF,
            "a cross-level negative fact separates the branches",
        ),
        op_pair(
            "116",
            "DPV003",
            c("purpose", Op::IsA, &["urn:gdpr:research"]),
            c("purpose", Op::Eq, &["urn:gdpr:marketing"]),
            CF,
            CF,
            "the stored negative fact resolves what the base KB left open",
        ),
        op_pair(
            "117",
            "DPV002",
            c("purpose", Op::Eq, &["scientificResearch"]),
            c("purpose", Op::Eq, &["commercialResearch"]),
            CF,
            UN,
            "without unique names two leaf purposes might co-refer",
        ),
        op_pair(
            "118",
            "DPV002",
            c("purpose", Op::IsA, &["research"]),
            c("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            CP,
            "positive subsumption needs no name axioms",
        ),
        op_pair(
            "119",
            "LNG002",
            c("language", Op::Eq, &["es"]),
            c("language", Op::Eq, &["it"]),
            CF,
            UN,
            "same-family codes might co-refer without unique names",
        ),
        op_pair(
            "120",
            "LNG002",
            c("language", Op::Eq, &["de"]),
            c("language", Op::Eq, &["nl"]),
            CF,
            UN,
            "German and Dutch carry no separating axiom here",
        ),
        op_pair(
            "121",
            "NMS000",
            c("category", Op::IsAnyOf, &["left-only", "right-only"]),
            c("category", Op::Eq, &["shared"]),
            CF,
            UN,
            "the shared node under either leaf is unrefuted",
        ),
        op_pair(
            "122",
            "CHN000",
            c("category", Op::IsAnyOf, &["v1", "v3"]),
            c("category", Op::Eq, &["v0"]),
            CP,
            CP,
            "the chain bottom satisfies the first disjunct",
        ),
        op_pair(
            "123",
            "CHN000",
            c("category", Op::IsNoneOf, &["v1"]),
            c("category", Op::Eq, &["v0"]),
            CF,
            CF,
            "stored containment refutes the exclusion",
        ),
        op_pair(
            "124",
            "CHN000",
            c("category", Op::IsNoneOf, &["v1"]),
            c("category", Op::Eq, &["v3"]),
            CP,
            UN,
            "the chain stores no refutation of upper links collapsing downward",
        ),
        op_pair(
            "125",
            "DIA000",
            c("category", Op::IsAllOf, &["vleft", "vright"]),
            c("category", Op::Eq, &["vjoin"]),
            CP,
            CP,
            "the diamond join satisfies both conjuncts",
        ),
        op_pair(
            "126",
            "DIA000",
            c("category", Op::IsNoneOf, &["vleft"]),
            c("category", Op::Eq, &["vright"]),
            CP,
            UN,
            "the diamond stores no disjointness between its branches",
        ),
        op_pair(
            "127",
            "GEO000",
            c("spatial", Op::IsAllOf, &["eu", "fr"]),
            c("spatial", Op::Eq, &["fr"]),
            CP,
            CP,
            "France satisfies both containment conjuncts",
        ),
    ]
}

/// `ODRL140-147`: nominal degeneration — identity order, total
/// disjointness.
fn block_nominal() -> Vec<BenchmarkProblem> {
    vec![
        op_pair(
            "140",
            "NOM000",
            c("channel", Op::IsA, &["sftp"]),
            c("channel", Op::Eq, &["sftp"]),
            CP,
            CP,
            "under the identity order isA is equality",
        ),
        op_pair(
            "141",
            "NOM000",
            c("channel", Op::IsA, &["sftp"]),
            c("channel", Op::Eq, &["https"]),
            CF,
            CF,
            "distinct nominals are totally disjoint",
        ),
        op_pair(
            "142",
            "NOM000",
            c("channel", Op::IsPartOf, &["https"]),
            c("channel", Op::Eq, &["https"]),
            CP,
            CP,
            "isPartOf degenerates the same way",
        ),
        op_pair(
            "143",
            "NOM000",
            c("channel", Op::HasPart, &["ftp"]),
            c("channel", Op::Eq, &["ftp"]),
            CP,
            CP,
            "hasPart reduces to identity as well",
        ),
        op_pair(
            "144",
            "NOM000",
            c("channel", Op::IsAnyOf, &["sftp", "https"]),
            c("channel", Op::Eq, &["https"]),
            CP,
            CP,
            "set membership over nominals is plain enumeration",
        ),
        op_pair(
            "145",
            "NOM000",
            c("channel", Op::IsAnyOf, &["sftp", "https"]),
            c("channel", Op::Eq, &["ftp"]),
            CF,
            CF,
            "a protocol outside the enumerated set",
        ),
        op_pair(
            "146",
            "NOM000",
            c("channel", Op::IsAllOf, &["sftp", "https"]),
            c("channel", Op::Eq, &["sftp"]),
            CF,
            CF,
            "isAllOf over distinct nominals denotes nothing",
        ),
        op_pair(
            "147",
            "NOM000",
            c("channel", Op::IsNoneOf, &["sftp", "https"]),
            c("channel", Op::Eq, &["mailto"]),
            CP,
            CP,
            "total disjointness proves the exclusion",
        ),
    ]
}

/// `ODRL150-161`: both sides use non-eq operators.
fn block_cross_operator() -> Vec<BenchmarkProblem> {
    vec![
        op_pair(
            "150",
            "GEO000",
            c("spatial", Op::IsPartOf, &["eu"]),
            c("spatial", Op::HasPart, &["by"]),
            CP,
            CP,
            "a middle region lies within Europe and contains Bavaria",
        ),
        op_pair(
            "151",
            "GEO000",
            c("spatial", Op::Eq, &["by"]),
            c("spatial", Op::IsNoneOf, &["eu"]),
            CF,
            CF,
            "Bavaria cannot be outside the maximal region",
        ),
        op_pair(
            "152",
            "DPV000",
            c("purpose", Op::IsA, &["research"]),
            c("purpose", Op::IsNoneOf, &["commercial"]),
            CP,
            CP,
            "non-commercial research witnesses both sides",
        ),
        op_pair(
            "153",
            "NOM000",
            c("channel", Op::IsA, &["sftp"]),
            c("channel", Op::IsNoneOf, &["sftp"]),
            CF,
            CF,
            "a constraint against its own negation, decidable on nominals",
        ),
        op_pair(
            "154",
            "LNG000",
            c("language", Op::Neq, &["de"]),
            c("language", Op::IsA, &["gem"]),
            CP,
            CP,
            "English is Germanic and provably not German",
        ),
        op_pair(
            "155",
            "GEO000",
            c("spatial", Op::HasPart, &["by"]),
            c("spatial", Op::IsAnyOf, &["de", "fr"]),
            CP,
            CP,
            "Germany contains Bavaria and matches a disjunct",
        ),
        op_pair(
            "156",
            "DPV000",
            c("purpose", Op::IsAnyOf, &["marketing", "education"]),
            c("purpose", Op::IsAllOf, &["commercial", "purpose"]),
            CP,
            CP,
            "marketing satisfies the enumeration and both bounds",
        ),
        op_pair(
            "157",
            "LNG000",
            c("language", Op::IsAllOf, &["gem"]),
            c("language", Op::IsNoneOf, &["roa"]),
            CP,
            CP,
            "the Germanic family itself witnesses both sides",
        ),
        op_pair(
            "158",
            "NOM000",
            c("channel", Op::Eq, &["ftp"]),
            c("channel", Op::IsAnyOf, &["sftp", "ftp"]),
            CP,
            CP,
            "equality meets enumeration on the shared protocol",
        ),
        op_pair(
            "159",
            "NOM000",
            c("channel", Op::Neq, &["sftp"]),
            c("channel", Op::IsA, &["sftp"]),
            CF,
            CF,
            "inequality against identity membership",
        ),
        op_pair(
            "160",
            "CHN000",
            c("category", Op::IsPartOf, &["v2"]),
            c("category", Op::IsPartOf, &["v3"]),
            CP,
            CP,
            "nested chain prefixes share their bottom",
        ),
        op_pair(
            "161",
            "DIA000",
            c("category", Op::HasPart, &["vleft"]),
            c("category", Op::IsA, &["vright"]),
            CF,
            UN,
            "a node above left and below right is unrefuted in the diamond",
        ),
    ]
}

/// `ODRL170-178`: structural regressions.
fn block_structural() -> Vec<BenchmarkProblem> {
    vec![
        st_pair(
            "170",
            "CHN000",
            c("category", Op::Eq, &["v0"]),
            c("category", Op::IsA, &["v4"]),
            CP,
            CP,
            "transitive closure spans the full five-deep chain",
        ),
        st_pair(
            "171",
            "CHN000",
            c("category", Op::Eq, &["v4"]),
            c("category", Op::HasPart, &["v0"]),
            CP,
            CP,
            "the inverse direction rides the same closure",
        ),
        st_pair(
            "172",
            "DIA000",
            c("category", Op::IsA, &["vleft"]),
            c("category", Op::IsA, &["vright"]),
            CP,
            CP,
            "the diamond join inherits from both parents",
        ),
        st_pair(
            "173",
            "DIA000",
            c("category", Op::Eq, &["vroot"]),
            c("category", Op::IsA, &["vleft"]),
            CF,
            UN,
            "the root under its own child is neither stored nor refuted",
        ),
        st_pair(
            "174",
            "DIA000",
            c("category", Op::Eq, &["vleft"]),
            c("category", Op::Eq, &["vright"]),
            CF,
            CF,
            "the two middle nodes are distinct under unique names",
        ),
        st_pair(
            "175",
            "SNG000",
            c("category", Op::Eq, &["urn:only"]),
            c("category", Op::Eq, &["urn:only"]),
            CP,
            CP,
            "a degenerate singleton domain still witnesses identity",
        ),
        st_pair(
            "176",
            "SNG000",
            c("category", Op::IsNoneOf, &["urn:only"]),
            c("category", Op::Eq, &["urn:only"]),
            CF,
            CF,
            "excluding the only concept denotes nothing",
        ),
        st_pair(
            "177",
            "NMS000",
            c("category", Op::IsAllOf, &["left", "right"]),
            c("category", Op::Eq, &["shared"]),
            CP,
            CP,
            "the stored meet witnesses the conjunction",
        ),
        st_pair(
            "178",
            "NMS000",
            c("category", Op::IsAllOf, &["left", "right"]),
            c("category", Op::Eq, &["left-only"]),
            CF,
            UN,
            "nothing places the left-only leaf under the right branch, nothing refutes it",
        ),
    ]
}

/// `ODRL190-199`: partial-alignment degradation, aligned operator coverage,
/// and the multi-domain degradation case.
fn block_alignment_extended() -> Vec<BenchmarkProblem> {
    vec![
        aligned(
            "190",
            "GEO000",
            "GEO001",
            fixtures::aln_geo_partial(),
            c("spatial", Op::IsPartOf, &["de"]),
            c("spatial", Op::Eq, &["fr"]),
            UN,
            UN,
            true,
            "the unmapped German region degrades the source conflict to indeterminate",
        ),
        aligned(
            "191",
            "GEO000",
            "GEO001",
            fixtures::aln_geo_partial(),
            c("spatial", Op::IsPartOf, &["eu"]),
            c("spatial", Op::Eq, &["by"]),
            UN,
            UN,
            true,
            "the unmapped European region degrades the source compatibility",
        ),
        aligned(
            "192",
            "DPV000",
            "DPV001",
            fixtures::aln_dpv_partial(),
            c("purpose", Op::IsA, &["research"]),
            c("purpose", Op::Eq, &["commercialResearch"]),
            UN,
            UN,
            true,
            "the unmapped research branch degrades the source compatibility",
        ),
        aligned(
            "193",
            "LNG001",
            "LNG000",
            fixtures::aln_lng(),
            c("language", Op::IsAnyOf, &["deu", "eng"]),
            c("language", Op::Eq, &["eng"]),
            CP,
            CP,
            false,
            "enumeration operands translate value by value",
        ),
        aligned(
            "194",
            "LNG001",
            "LNG000",
            fixtures::aln_lng(),
            c("language", Op::IsNoneOf, &["gem"]),
            c("language", Op::Eq, &["fra"]),
            CP,
            CP,
            false,
            "a provable exclusion survives translation",
        ),
        aligned(
            "195",
            "DPV001",
            "DPV000",
            fixtures::aln_dpv(),
            c("purpose", Op::HasPart, &["urn:gdpr:commercial-research"]),
            c("purpose", Op::Eq, &["urn:gdpr:research"]),
            CP,
            CP,
            false,
            "upward containment translates cleanly",
        ),
        aligned(
            "196",
            "GEO001",
            "GEO000",
            fixtures::aln_geo(),
            c("spatial", Op::Neq, &["DE"]),
            c("spatial", Op::Eq, &["FR"]),
            CP,
            CP,
            false,
            "inequality translates through the region map",
        ),
        aligned(
            "197",
            "DPV001",
            "DPV000",
            fixtures::aln_dpv(),
            c("purpose", Op::IsAllOf, &["urn:gdpr:research", "urn:gdpr:commercial"]),
            c("purpose", Op::Eq, &["urn:gdpr:commercial-research"]),
            CP,
            CP,
            false,
            "a two-parent conjunction translates with its witness",
        ),
        aligned(
            "198",
            "GEO001",
            "GEO000",
            fixtures::aln_geo(),
            c("spatial", Op::IsPartOf, &["DE"]),
            c("spatial", Op::Eq, &["FR"]),
            CF,
            CF,
            false,
            "the conflict survives translation intact",
        ),
        problem(
            "199",
            Category::Alignment,
            None,
            ProblemBody::MultiAligned {
                items: vec![
                    AlignedItem {
                        target: "GEO001".to_owned(),
                        alignment: fixtures::aln_geo_partial(),
                        c1: c("spatial", Op::IsPartOf, &["eu"]),
                        c2: c("spatial", Op::Eq, &["by"]),
                    },
                    AlignedItem {
                        target: "DPV001".to_owned(),
                        alignment: fixtures::aln_dpv_partial(),
                        c1: c("purpose", Op::IsA, &["research"]),
                        c2: c("purpose", Op::Eq, &["commercialResearch"]),
                    },
                    AlignedItem {
                        target: "LNG001".to_owned(),
                        alignment: fixtures::aln_lng_partial(),
                        c1: c("language", Op::IsA, &["gem"]),
                        c2: c("language", Op::Eq, &["de"]),
                    },
                ],
            },
            UN,
            UN,
            true,
            "every operand degrades, so the conjoined verdict stays indeterminate",
        ),
    ]
}

/// `ODRL200-207`: larger composites.
fn block_composition_extended() -> Vec<BenchmarkProblem> {
    vec![
        comp(
            "200",
            and(vec![
                leaf("spatial", Op::IsPartOf, &["eu"]),
                leaf("language", Op::IsA, &["gem"]),
                leaf("purpose", Op::IsA, &["research"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["de"]),
                leaf("language", Op::Eq, &["de"]),
                leaf("purpose", Op::Eq, &["scientificResearch"]),
            ]),
            CP,
            CP,
            "three dimensions witness jointly",
        ),
        comp(
            "201",
            and(vec![
                leaf("spatial", Op::IsPartOf, &["eu"]),
                leaf("language", Op::IsA, &["de"]),
                leaf("purpose", Op::IsA, &["nonCommercial"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["fr"]),
                leaf("language", Op::Eq, &["fr"]),
                leaf("purpose", Op::Eq, &["scientificResearch"]),
            ]),
            CF,
            CF,
            "the language dimension alone blocks the agreement",
        ),
        comp(
            "202",
            or(vec![
                leaf("purpose", Op::IsNoneOf, &["commercial"]),
                leaf("purpose", Op::IsA, &["research"]),
            ]),
            leaf("purpose", Op::Eq, &["scientificResearch"]),
            CP,
            CP,
            "a compatible alternative decides despite an undecided sibling",
        ),
        comp(
            "203",
            or(vec![
                leaf("spatial", Op::HasPart, &["de"]),
                leaf("purpose", Op::IsA, &["commercial"]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["by"]),
                leaf("purpose", Op::Eq, &["scientificResearch"]),
            ]),
            CF,
            UN,
            "both alternatives stay undecided in open mode",
        ),
        comp(
            "204",
            xone(vec![
                leaf("channel", Op::IsA, &["sftp"]),
                leaf("channel", Op::IsA, &["https"]),
            ]),
            leaf("channel", Op::Eq, &["sftp"]),
            CP,
            CP,
            "nominal disjointness makes the exclusivity provable",
        ),
        comp(
            "205",
            xone(vec![
                leaf("language", Op::IsA, &["gem"]),
                leaf("language", Op::IsA, &["roa"]),
            ]),
            leaf("language", Op::Eq, &["de"]),
            CP,
            CP,
            "family disjointness refutes the sibling branch",
        ),
        comp(
            "206",
            and(vec![
                leaf("spatial", Op::IsPartOf, &["eu"]),
                or(vec![
                    leaf("purpose", Op::IsA, &["research"]),
                    leaf("purpose", Op::IsA, &["commercial"]),
                ]),
            ]),
            and(vec![
                leaf("spatial", Op::Eq, &["fr"]),
                leaf("purpose", Op::Eq, &["scientificResearch"]),
            ]),
            CP,
            CP,
            "a nested alternative under a conjunction",
        ),
        comp(
            "207",
            xone(vec![
                leaf("purpose", Op::IsA, &["commercial"]),
                leaf("purpose", Op::IsA, &["nonCommercial"]),
            ]),
            leaf("purpose", Op::Eq, &["scientificResearch"]),
            CF,
            UN,
            "neither branch membership nor exclusivity is provable",
        ),
    ]
}

/// All 154 problems in id order.
pub(crate) fn builtin_problems() -> Vec<BenchmarkProblem> {
    let mut all = Vec::with_capacity(154);
    all.extend(block_operator_core());
    all.extend(block_composition_and());
    all.extend(block_operator_extended());
    all.extend(block_alignment_core());
    all.extend(block_runtime());
    all.extend(block_composition_or_xone());
    all.extend(block_neq());
    all.extend(block_haspart());
    all.extend(block_set_operators());
    all.extend(block_nominal());
    all.extend(block_cross_operator());
    all.extend(block_structural());
    all.extend(block_alignment_extended());
    all.extend(block_composition_extended());
    all
}
