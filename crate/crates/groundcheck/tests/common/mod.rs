//! Shared support for the integration suites: a seeded case generator plus
//! brute-force oracles that recompute verdicts from first principles,
//! independent of the library's closure and evaluation code.
//!
//! Relations are kept as row bitmasks over concept indices (`rows[i]` bit `j`
//! set means the pair `(i, j)` holds), so closure fixpoints and relational
//! completion enumeration stay cheap enough for six-figure iteration counts.

#![allow(dead_code)]

use std::collections::BTreeMap;

use groundcheck::constraint::{Constraint, Operator};
use groundcheck::kb::{ConceptId, Domain, KbSpec, KnowledgeBase};
use groundcheck::verdict::Verdict;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Concept names are single-character suffixed (`k0`..`k9`), so index order
/// and the lexicographic order used for witness selection coincide.
pub fn concept_name(i: usize) -> String {
    assert!(i < 10, "test concept spaces stay below ten concepts");
    format!("k{i}")
}

pub fn cid(i: usize) -> ConceptId {
    ConceptId::new(concept_name(i))
}

/// A raw knowledge base over concept indices, prior to any closure.
#[derive(Clone, Debug)]
pub struct RawKb {
    pub n: usize,
    pub domain: Domain,
    pub una: bool,
    pub leq: Vec<(usize, usize)>,
    pub disjoint: Vec<(usize, usize)>,
    pub not_leq: Vec<(usize, usize)>,
    /// Value string -> concept index.
    pub gamma: BTreeMap<String, usize>,
}

impl RawKb {
    pub fn empty(n: usize, domain: Domain) -> Self {
        RawKb {
            n,
            domain,
            una: true,
            leq: Vec::new(),
            disjoint: Vec::new(),
            not_leq: Vec::new(),
            gamma: BTreeMap::new(),
        }
    }

    pub fn to_spec(&self, id: &str) -> KbSpec {
        let mut spec = KbSpec::new(id, self.domain);
        spec.una = self.una;
        spec.concepts = (0..self.n).map(cid).collect();
        spec.leq = self.leq.iter().map(|&(i, j)| (cid(i), cid(j))).collect();
        spec.disjoint = self.disjoint.iter().map(|&(i, j)| (cid(i), cid(j))).collect();
        spec.not_leq = self.not_leq.iter().map(|&(i, j)| (cid(i), cid(j))).collect();
        spec.gamma = self.gamma.iter().map(|(v, &i)| (v.clone(), cid(i))).collect();
        spec
    }

    pub fn build(&self, id: &str) -> KnowledgeBase {
        KnowledgeBase::from_spec(&self.to_spec(id))
            .unwrap_or_else(|e| panic!("generated KB must be consistent: {e}\n{self:?}"))
    }

    /// Independent reflexive-transitive order closure.
    pub fn leq_rows(&self) -> Vec<u32> {
        leq_closure(self.n, &self.leq)
    }

    /// Independent symmetric + downward disjointness closure.
    pub fn disjoint_rows(&self, leq: &[u32]) -> Vec<u32> {
        disjoint_closure(self.n, leq, &self.disjoint, self.domain == Domain::Nominal)
    }

    pub fn not_leq_rows(&self) -> Vec<u32> {
        pair_rows(self.n, &self.not_leq)
    }

    pub fn is_consistent(&self) -> bool {
        let leq = self.leq_rows();
        let disj = self.disjoint_rows(&leq);
        relations_consistent(self.n, &leq, &disj, &self.not_leq_rows())
    }

    /// Adds every negative order fact the declared negatives and closed
    /// disjointness entail: `not_leq(x, g)` whenever some `b <= x` and some
    /// `a >= g` are declared non-ordered or are disjoint in the closure.
    /// On such a KB, silence about a pair really means both extensions of the
    /// order are possible, so three-valued membership and completion
    /// quantification coincide.
    pub fn saturated(&self) -> RawKb {
        let leq = self.leq_rows();
        let disj = self.disjoint_rows(&leq);
        let declared = self.not_leq_rows();
        let mut out = self.clone();
        for x in 0..self.n {
            for g in 0..self.n {
                if bit(&leq, x, g) || bit(&declared, x, g) {
                    continue;
                }
                let refuted = (0..self.n).any(|b| {
                    bit(&leq, b, x)
                        && (0..self.n).any(|a| {
                            bit(&leq, g, a) && (bit(&declared, b, a) || bit(&disj, b, a))
                        })
                });
                if refuted {
                    out.not_leq.push((x, g));
                }
            }
        }
        out
    }

    pub fn gamma_keys(&self) -> Vec<String> {
        self.gamma.keys().cloned().collect()
    }
}

#[inline]
pub fn bit(rows: &[u32], i: usize, j: usize) -> bool {
    rows[i] >> j & 1 == 1
}

pub fn full_mask(n: usize) -> u32 {
    (1u32 << n) - 1
}

/// Reflexive-transitive closure of the given edges over `0..n`.
pub fn leq_closure(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut rows = vec![0u32; n];
    for (i, row) in rows.iter_mut().enumerate() {
        *row = 1 << i;
    }
    for &(i, j) in edges {
        rows[i] |= 1 << j;
    }
    for k in 0..n {
        for i in 0..n {
            if bit(&rows, i, k) {
                rows[i] |= rows[k];
            }
        }
    }
    rows
}

fn pair_rows(n: usize, pairs: &[(usize, usize)]) -> Vec<u32> {
    let mut rows = vec![0u32; n];
    for &(i, j) in pairs {
        rows[i] |= 1 << j;
    }
    rows
}

/// Symmetric closure of the declared pairs (plus all distinct pairs when
/// `nominal`), then downward closure along the given closed order.
pub fn disjoint_closure(n: usize, leq: &[u32], pairs: &[(usize, usize)], nominal: bool) -> Vec<u32> {
    let mut base: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in pairs {
        base.push((i, j));
        base.push((j, i));
    }
    if nominal {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    base.push((i, j));
                }
            }
        }
    }
    let mut rows = vec![0u32; n];
    for (p, q) in base {
        let down_q: u32 = (0..n).filter(|&b| bit(leq, b, q)).map(|b| 1u32 << b).sum();
        for a in 0..n {
            if bit(leq, a, p) {
                rows[a] |= down_q;
            }
        }
    }
    rows
}

/// No concept disjoint from itself, and no declared negative order fact
/// contradicted by the order closure. Order/disjoint overlap is subsumed by
/// the irreflexivity check because the disjoint closure is downward-closed.
pub fn relations_consistent(n: usize, leq: &[u32], disj: &[u32], not_leq: &[u32]) -> bool {
    for i in 0..n {
        if bit(disj, i, i) {
            return false;
        }
        if leq[i] & not_leq[i] != 0 {
            return false;
        }
    }
    true
}

/// Closed-world denotation of `c` under the given closed order, as a bitmask.
/// `None` marks an ungrounded value (an indeterminate denotation).
pub fn naive_denotation(
    n: usize,
    leq: &[u32],
    gamma: &BTreeMap<String, usize>,
    c: &Constraint,
) -> Option<u32> {
    let mut gs: Vec<usize> = Vec::new();
    for v in c.values() {
        let g = *gamma.get(v)?;
        if !gs.contains(&g) {
            gs.push(g);
        }
    }
    let full = full_mask(n);
    let down = |g: usize| -> u32 { (0..n).filter(|&i| bit(leq, i, g)).map(|i| 1u32 << i).sum() };
    let any: u32 = gs.iter().map(|&g| down(g)).fold(0, |acc, m| acc | m);
    Some(match c.operator() {
        Operator::Eq => 1 << gs[0],
        Operator::Neq => full & !(1 << gs[0]),
        Operator::IsA | Operator::IsPartOf => down(gs[0]),
        Operator::HasPart => leq[gs[0]],
        Operator::IsAnyOf => any,
        Operator::IsAllOf => gs.iter().map(|&g| down(g)).fold(full, |acc, m| acc & m),
        Operator::IsNoneOf => full & !any,
    })
}

/// Closed-mode reference verdict: denotation intersection with the
/// empty-dominates-indeterminate rule, plus the least witness on compatibility.
pub fn closed_oracle(raw: &RawKb, c1: &Constraint, c2: &Constraint) -> (Verdict, Option<String>) {
    let leq = raw.leq_rows();
    let d1 = naive_denotation(raw.n, &leq, &raw.gamma, c1);
    let d2 = naive_denotation(raw.n, &leq, &raw.gamma, c2);
    if d1 == Some(0) || d2 == Some(0) {
        return (Verdict::Conflict, None);
    }
    match (d1, d2) {
        (Some(a), Some(b)) => {
            let joint = a & b;
            if joint == 0 {
                (Verdict::Conflict, None)
            } else {
                (Verdict::Compatible, Some(concept_name(joint.trailing_zeros() as usize)))
            }
        }
        _ => (Verdict::Unknown, None),
    }
}

/// Invokes `f` with every relational completion of the KB: every consistent,
/// transitively-closed superset of the stored order closure (the stored
/// closure itself is always among them). Declared disjointness is re-closed
/// downward under each candidate order; declared negative order facts must
/// survive verbatim.
pub fn for_each_completion(raw: &RawKb, mut f: impl FnMut(&[u32])) {
    let n = raw.n;
    let stored = raw.leq_rows();
    let not_leq = raw.not_leq_rows();
    let nominal = raw.domain == Domain::Nominal;
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && !bit(&stored, i, j))
        .collect();
    assert!(free.len() <= 16, "completion enumeration is for tiny spaces");
    let mut visited = 0usize;
    for subset in 0u32..1 << free.len() {
        let mut cand = stored.clone();
        for (k, &(i, j)) in free.iter().enumerate() {
            if subset >> k & 1 == 1 {
                cand[i] |= 1 << j;
            }
        }
        // Only transitively-closed candidates count; every closed superset is
        // its own candidate, so none is missed or double-counted.
        let closed = (0..n).all(|i| (0..n).all(|k| !bit(&cand, i, k) || cand[i] | cand[k] == cand[i]));
        if !closed {
            continue;
        }
        let disj = disjoint_closure(n, &cand, &raw.disjoint, nominal);
        if !relations_consistent(n, &cand, &disj, &not_leq) {
            continue;
        }
        visited += 1;
        f(&cand);
    }
    assert!(visited > 0, "a consistent KB admits its own closure as a completion");
}

/// Local three-valued carrier for the oracle, with the strong-Kleene tables
/// restated rather than borrowed from the library under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum K3 {
    T,
    F,
    U,
}

impl K3 {
    fn not(self) -> K3 {
        match self {
            K3::T => K3::F,
            K3::F => K3::T,
            K3::U => K3::U,
        }
    }

    fn any(vals: impl IntoIterator<Item = K3>) -> K3 {
        let mut acc = K3::F;
        for v in vals {
            acc = match (acc, v) {
                (K3::T, _) | (_, K3::T) => K3::T,
                (K3::U, _) | (_, K3::U) => K3::U,
                _ => K3::F,
            };
        }
        acc
    }

    fn all(vals: impl IntoIterator<Item = K3>) -> K3 {
        K3::any(vals.into_iter().map(K3::not)).not()
    }
}

/// Open-mode reference verdict.
///
/// The order atoms (`x <= g`) are decided by quantification over every
/// relational completion of the stored order: true when the atom holds in all
/// completions, false when it holds in none, indeterminate otherwise. Atom
/// verdicts combine through the strong three-valued connectives — membership
/// is evaluated pointwise, so an `isAllOf` whose required uppers can never be
/// reached jointly is still only indeterminate unless some single atom is
/// refuted. The pair is compatible iff some concept is definitely admitted by
/// both sides (least such concept is the witness), and conflicting iff every
/// concept is definitely rejected by at least one side.
pub fn open_oracle(raw: &RawKb, c1: &Constraint, c2: &Constraint) -> (Verdict, Option<String>) {
    assert!(raw.una, "completion quantification fixes concept identity");
    let n = raw.n;
    let full = full_mask(n);
    let mut slots: Vec<Vec<usize>> = Vec::new();
    for c in [c1, c2] {
        let mut g: Vec<usize> = Vec::new();
        for v in c.values() {
            match raw.gamma.get(v) {
                Some(&i) => {
                    if !g.contains(&i) {
                        g.push(i);
                    }
                }
                None => return (Verdict::Unknown, None),
            }
        }
        slots.push(g);
    }

    // below_all[g]/below_any[g]: concepts below g in every/some completion.
    let mut below_all = vec![full; n];
    let mut below_any = vec![0u32; n];
    for_each_completion(raw, |order| {
        for g in 0..n {
            let mut col = 0u32;
            for x in 0..n {
                if bit(order, x, g) {
                    col |= 1 << x;
                }
            }
            below_all[g] &= col;
            below_any[g] |= col;
        }
    });
    let atom = |x: usize, g: usize| -> K3 {
        if below_all[g] >> x & 1 == 1 {
            K3::T
        } else if below_any[g] >> x & 1 == 0 {
            K3::F
        } else {
            K3::U
        }
    };
    // Unique names make identity definite.
    let ident = |x: usize, g: usize| if x == g { K3::T } else { K3::F };
    let member = |x: usize, c: &Constraint, g: &[usize]| -> K3 {
        match c.operator() {
            Operator::Eq => ident(x, g[0]),
            Operator::Neq => ident(x, g[0]).not(),
            Operator::IsA | Operator::IsPartOf => atom(x, g[0]),
            Operator::HasPart => atom(g[0], x),
            Operator::IsAnyOf => K3::any(g.iter().map(|&t| atom(x, t))),
            Operator::IsAllOf => K3::all(g.iter().map(|&t| atom(x, t))),
            Operator::IsNoneOf => K3::any(g.iter().map(|&t| atom(x, t))).not(),
        }
    };

    let mut true_mask = [0u32; 2];
    let mut false_mask = [0u32; 2];
    for (slot, c) in [(0usize, c1), (1usize, c2)] {
        for x in 0..n {
            match member(x, c, &slots[slot]) {
                K3::T => true_mask[slot] |= 1 << x,
                K3::F => false_mask[slot] |= 1 << x,
                K3::U => {}
            }
        }
    }
    let joint_true = true_mask[0] & true_mask[1];
    if joint_true != 0 {
        return (
            Verdict::Compatible,
            Some(concept_name(joint_true.trailing_zeros() as usize)),
        );
    }
    if false_mask[0] | false_mask[1] == full {
        (Verdict::Conflict, None)
    } else {
        (Verdict::Unknown, None)
    }
}

/// Random KB: mixed domains, acyclic order skeleton with occasional extra
/// edges (which may form order cycles), greedily consistent disjointness,
/// optional declared negative order facts, and a partial value grounding with
/// aliases and gaps.
pub fn gen_raw_kb(rng: &mut ChaCha8Rng, max_n: usize, allow_not_leq: bool) -> RawKb {
    let n = rng.gen_range(1..=max_n);
    let domain = match rng.gen_range(0..10) {
        0..=3 => Domain::Taxonomic,
        4..=7 => Domain::Mereological,
        _ => Domain::Nominal,
    };
    let mut raw = RawKb::empty(n, domain);
    raw.una = true;

    if domain != Domain::Nominal {
        let mut rank: Vec<usize> = (0..n).collect();
        rank.shuffle(rng);
        let density = rng.gen_range(0.0..0.6);
        for i in 0..n {
            for j in 0..n {
                if i != j && rank[i] < rank[j] && rng.gen_bool(density) {
                    raw.leq.push((i, j));
                }
            }
        }
        // Occasionally an arbitrary extra edge, possibly closing a cycle.
        if n > 1 && rng.gen_bool(0.15) {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            if j == i {
                j = (j + 1) % n;
            }
            raw.leq.push((i, j));
        }
    }
    let leq = raw.leq_rows();

    if domain != Domain::Nominal && n > 1 {
        let density = rng.gen_range(0.0..0.4);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    raw.disjoint.push((i, j));
                    if !raw.is_consistent() {
                        raw.disjoint.pop();
                    }
                }
            }
        }
    }

    if allow_not_leq {
        let density = rng.gen_range(0.0..0.3);
        for i in 0..n {
            for j in 0..n {
                if i != j && !bit(&leq, i, j) && rng.gen_bool(density) {
                    raw.not_leq.push((i, j));
                }
            }
        }
    }

    for i in 0..n {
        if rng.gen_bool(0.85) {
            raw.gamma.insert(format!("v{i}"), i);
        }
    }
    for a in 0..rng.gen_range(0..=2usize) {
        raw.gamma.insert(format!("w{a}"), rng.gen_range(0..n));
    }
    debug_assert!(raw.is_consistent());
    raw
}

/// Random constraint on `operand`: any operator, one to three values, each
/// value drawn from gamma or (with `unbound_prob`) left without a grounding.
pub fn gen_constraint(
    rng: &mut ChaCha8Rng,
    keys: &[String],
    operand: &str,
    unbound_prob: f64,
) -> Constraint {
    let op = *Operator::ALL.choose(rng).expect("non-empty");
    let len = if op.takes_set() { rng.gen_range(1..=3) } else { 1 };
    let values: Vec<String> = (0..len)
        .map(|_| {
            if keys.is_empty() || rng.gen_bool(unbound_prob) {
                format!("missing{}", rng.gen_range(0..100u32))
            } else {
                keys.choose(rng).expect("non-empty").clone()
            }
        })
        .collect();
    Constraint::new(operand, op, values).expect("arity by construction")
}

/// Extends a KB without touching its concept space or order: disjointness
/// may grow (kept consistent) and gamma gains fresh entries, including
/// bindings for previously unresolvable `missing*` values.
pub fn gen_extension(rng: &mut ChaCha8Rng, raw: &RawKb) -> RawKb {
    let mut out = raw.clone();
    if out.domain != Domain::Nominal && out.n > 1 {
        for _ in 0..rng.gen_range(1..=3usize) {
            let i = rng.gen_range(0..out.n);
            let mut j = rng.gen_range(0..out.n);
            if j == i {
                j = (j + 1) % out.n;
            }
            out.disjoint.push((i, j));
            if !out.is_consistent() {
                out.disjoint.pop();
            }
        }
    }
    for _ in 0..rng.gen_range(0..=2usize) {
        let v = format!("x{}", out.gamma.len());
        out.gamma.entry(v).or_insert_with(|| rng.gen_range(0..out.n));
    }
    for _ in 0..rng.gen_range(0..=2usize) {
        let v = format!("missing{}", rng.gen_range(0..100u32));
        out.gamma.entry(v).or_insert_with(|| rng.gen_range(0..out.n));
    }
    debug_assert!(out.is_consistent());
    out
}

/// A generated valid alignment case: the target embeds an isomorphic copy of
/// a downward-closed region of the source (names `t*`), plus extra concepts
/// (`e*`) that may sit below images or among themselves and extra target-side
/// disjointness — more knowledge, never contradicting the embedded region.
pub struct AlignedCase {
    pub raw: RawKb,
    pub source: KnowledgeBase,
    pub target: KnowledgeBase,
    pub alignment: groundcheck::alignment::Alignment,
    /// Mapped source indices (the alignment's domain), ascending.
    pub dom: Vec<usize>,
}

impl AlignedCase {
    pub fn dom_mask(&self) -> u32 {
        self.dom.iter().map(|&i| 1u32 << i).sum()
    }
}

pub fn gen_aligned_case(rng: &mut ChaCha8Rng) -> AlignedCase {
    let mut raw = gen_raw_kb(rng, 5, true);
    if raw.domain == Domain::Nominal {
        // A nominal source would force a nominal target; order-free taxonomic
        // works for both and keeps one generator path.
        raw.domain = Domain::Taxonomic;
        raw.disjoint = (0..raw.n).flat_map(|i| (i + 1..raw.n).map(move |j| (i, j))).collect();
    }
    let leq = raw.leq_rows();
    let disj = raw.disjoint_rows(&leq);
    let n = raw.n;

    // dom = downward closure of a random non-empty seed set (a KB restricted
    // to an empty region would have no concepts); downward-closedness makes
    // witness completeness hold for any grounding.
    let mut dom_mask = 0u32;
    loop {
        for i in 0..n {
            if rng.gen_bool(0.6) {
                for b in 0..n {
                    if bit(&leq, b, i) {
                        dom_mask |= 1 << b;
                    }
                }
            }
        }
        if dom_mask != 0 {
            break;
        }
    }
    let dom: Vec<usize> = (0..n).filter(|&i| dom_mask >> i & 1 == 1).collect();

    let tname = |i: usize| ConceptId::new(format!("t{i}"));
    let mut spec = KbSpec::new("TGT", raw.domain);
    spec.una = raw.una;
    spec.concepts = dom.iter().map(|&i| tname(i)).collect();
    for &i in &dom {
        for &j in &dom {
            if i != j && bit(&leq, i, j) {
                spec.leq.push((tname(i), tname(j)));
            }
        }
    }
    for &i in &dom {
        for &j in &dom {
            if i < j && bit(&disj, i, j) {
                spec.disjoint.push((tname(i), tname(j)));
            }
        }
    }
    // The embedded region is a faithful copy: negative order facts carry over,
    // so refutations inside the mapped region survive restriction.
    for &(i, j) in &raw.not_leq {
        if dom_mask >> i & 1 == 1 && dom_mask >> j & 1 == 1 {
            spec.not_leq.push((tname(i), tname(j)));
        }
    }

    // Extra target concepts: edges only among extras or from an extra into an
    // image, so no new order path between two images can appear.
    let extras = rng.gen_range(0..=3usize);
    for e in 0..extras {
        spec.concepts.push(ConceptId::new(format!("e{e}")));
    }
    // Each candidate edge is trial-checked: an extra that lands below two
    // images the copied disjointness separates would make the target
    // inconsistent (its own self-disjointness would be derivable).
    let try_edge = |spec: &mut KbSpec, from: ConceptId, to: ConceptId| {
        spec.leq.push((from, to));
        if KnowledgeBase::from_spec(spec).is_err() {
            spec.leq.pop();
        }
    };
    for e in 0..extras {
        for f in e + 1..extras {
            if rng.gen_bool(0.3) {
                try_edge(
                    &mut spec,
                    ConceptId::new(format!("e{e}")),
                    ConceptId::new(format!("e{f}")),
                );
            }
        }
        if !dom.is_empty() && rng.gen_bool(0.5) {
            let &img = dom.as_slice().choose(rng).expect("non-empty");
            try_edge(&mut spec, ConceptId::new(format!("e{e}")), tname(img));
        }
    }
    // Extra disjointness anywhere in the target, kept consistent greedily.
    let m = spec.concepts.len();
    for _ in 0..rng.gen_range(0..=3usize) {
        if m < 2 {
            break;
        }
        let a = spec.concepts[rng.gen_range(0..m)].clone();
        let b = spec.concepts[rng.gen_range(0..m)].clone();
        if a == b {
            continue;
        }
        spec.disjoint.push((a, b));
        if KnowledgeBase::from_spec(&spec).is_err() {
            spec.disjoint.pop();
        }
    }
    for (v, &i) in &raw.gamma {
        if dom_mask >> i & 1 == 1 {
            spec.gamma.insert(v.clone(), tname(i));
        }
    }

    let source = raw.build("SRC");
    let target = KnowledgeBase::from_spec(&spec).expect("greedily consistent target");
    let alignment = groundcheck::alignment::Alignment::new(
        "SRC",
        "TGT",
        dom.iter().map(|&i| (cid(i), tname(i))).collect(),
    );
    AlignedCase {
        raw,
        source,
        target,
        alignment,
        dom,
    }
}
