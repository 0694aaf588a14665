//! Ground-instantiation decision oracle.
//!
//! Every emitted problem is in the Bernays–Schönfinkel fragment with an
//! explicit domain-closure axiom, so satisfiability over the declared
//! constants is the whole story: quantifiers are expanded over the constant
//! set, equality is axiomatized by ground clauses (reflexivity, transitivity
//! and per-predicate congruence; symmetry comes free from canonical atom
//! ordering), the result is converted to CNF by Tseitin encoding, and a
//! small DPLL search with unit propagation decides it.

use std::collections::HashMap;

use super::fol::{Formula, Term};

/// Propositional skeleton after grounding. `i32` literals use DIMACS
/// conventions: variable `v` is `v as i32 + 1`, negation is sign flip.
enum Prop {
    True,
    False,
    Lit(i32),
    And(Vec<Prop>),
    Or(Vec<Prop>),
}

struct Grounder<'a> {
    constants: &'a [String],
    const_index: HashMap<&'a str, usize>,
    /// Interned predicate names (equality handled separately).
    preds: Vec<(String, usize)>,
    pred_index: HashMap<String, usize>,
    /// (pred, args) -> propositional variable.
    atoms: HashMap<(usize, Vec<usize>), usize>,
    /// Canonicalized (min, max) equality pairs -> variable.
    eq_atoms: HashMap<(usize, usize), usize>,
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl<'a> Grounder<'a> {
    fn new(constants: &'a [String]) -> Self {
        let const_index = constants
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_str(), i))
            .collect();
        Grounder {
            constants,
            const_index,
            preds: Vec::new(),
            pred_index: HashMap::new(),
            atoms: HashMap::new(),
            eq_atoms: HashMap::new(),
            num_vars: 0,
            clauses: Vec::new(),
        }
    }

    fn fresh_var(&mut self) -> usize {
        self.num_vars += 1;
        self.num_vars - 1
    }

    fn lit(&self, var: usize, positive: bool) -> i32 {
        let v = var as i32 + 1;
        if positive {
            v
        } else {
            -v
        }
    }

    fn pred_id(&mut self, name: &str, arity: usize) -> usize {
        if let Some(&id) = self.pred_index.get(name) {
            return id;
        }
        let id = self.preds.len();
        self.preds.push((name.to_owned(), arity));
        self.pred_index.insert(name.to_owned(), id);
        id
    }

    fn atom_var(&mut self, pred: usize, args: Vec<usize>) -> usize {
        if let Some(&v) = self.atoms.get(&(pred, args.clone())) {
            return v;
        }
        let v = self.fresh_var();
        self.atoms.insert((pred, args), v);
        v
    }

    /// Equality atoms are stored with ordered arguments, which makes
    /// symmetry a non-axiom.
    fn eq_var(&mut self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        if let Some(&v) = self.eq_atoms.get(&key) {
            return v;
        }
        let v = self.fresh_var();
        self.eq_atoms.insert(key, v);
        v
    }

    fn resolve(&self, t: &Term, env: &HashMap<&'a str, usize>) -> usize {
        match t {
            Term::Var(v) => *env.get(v.as_str()).expect("unbound variable"),
            Term::Const(c) => *self
                .const_index
                .get(c.as_str())
                .expect("undeclared constant"),
        }
    }

    /// Grounds an NNF formula under an environment.
    fn ground(&mut self, f: &'a Formula, env: &mut HashMap<&'a str, usize>) -> Prop {
        match f {
            Formula::Pred(name, args) => {
                let pred = self.pred_id(name, args.len());
                let idx: Vec<usize> = args.iter().map(|t| self.resolve(t, env)).collect();
                let v = self.atom_var(pred, idx);
                Prop::Lit(self.lit(v, true))
            }
            Formula::Eq(a, b) => {
                let ia = self.resolve(a, env);
                let ib = self.resolve(b, env);
                if ia == ib {
                    Prop::True
                } else {
                    let v = self.eq_var(ia, ib);
                    Prop::Lit(self.lit(v, true))
                }
            }
            Formula::Not(inner) => match self.ground(inner, env) {
                Prop::True => Prop::False,
                Prop::False => Prop::True,
                Prop::Lit(l) => Prop::Lit(-l),
                _ => unreachable!("NNF keeps negation on atoms"),
            },
            Formula::And(fs) => {
                let mut parts = Vec::new();
                for g in fs {
                    match self.ground(g, env) {
                        Prop::True => {}
                        Prop::False => return Prop::False,
                        p => parts.push(p),
                    }
                }
                if parts.is_empty() {
                    Prop::True
                } else {
                    Prop::And(parts)
                }
            }
            Formula::Or(fs) => {
                let mut parts = Vec::new();
                for g in fs {
                    match self.ground(g, env) {
                        Prop::False => {}
                        Prop::True => return Prop::True,
                        p => parts.push(p),
                    }
                }
                if parts.is_empty() {
                    Prop::False
                } else {
                    Prop::Or(parts)
                }
            }
            Formula::Iff(..) => unreachable!("NNF removes Iff"),
            Formula::Forall(vars, body) => self.expand(vars, body, env, true),
            Formula::Exists(vars, body) => self.expand(vars, body, env, false),
        }
    }

    fn expand(
        &mut self,
        vars: &'a [String],
        body: &'a Formula,
        env: &mut HashMap<&'a str, usize>,
        conjunctive: bool,
    ) -> Prop {
        fn go<'a>(
            g: &mut Grounder<'a>,
            vars: &'a [String],
            body: &'a Formula,
            env: &mut HashMap<&'a str, usize>,
            conjunctive: bool,
        ) -> Prop {
            let Some(v) = vars.first() else {
                return g.ground(body, env);
            };
            let rest = &vars[1..];
            let mut parts = Vec::new();
            for i in 0..g.constants.len() {
                env.insert(v.as_str(), i);
                let p = go(g, rest, body, env, conjunctive);
                match (&p, conjunctive) {
                    (Prop::True, true) | (Prop::False, false) => {}
                    (Prop::False, true) => {
                        env.remove(v.as_str());
                        return Prop::False;
                    }
                    (Prop::True, false) => {
                        env.remove(v.as_str());
                        return Prop::True;
                    }
                    _ => parts.push(p),
                }
            }
            env.remove(v.as_str());
            match (parts.is_empty(), conjunctive) {
                (true, true) => Prop::True,
                (true, false) => Prop::False,
                (false, true) => Prop::And(parts),
                (false, false) => Prop::Or(parts),
            }
        }
        go(self, vars, body, env, conjunctive)
    }

    /// Tseitin transformation: returns a literal equivalent to the formula.
    fn tseitin(&mut self, p: &Prop) -> i32 {
        match p {
            Prop::True => {
                let v = self.fresh_var();
                let l = self.lit(v, true);
                self.clauses.push(vec![l]);
                l
            }
            Prop::False => {
                let v = self.fresh_var();
                let l = self.lit(v, true);
                self.clauses.push(vec![-l]);
                l
            }
            Prop::Lit(l) => *l,
            Prop::And(parts) => {
                let lits: Vec<i32> = parts.iter().map(|q| self.tseitin(q)).collect();
                let v = self.fresh_var();
                let t = self.lit(v, true);
                let mut long = vec![t];
                for l in &lits {
                    self.clauses.push(vec![-t, *l]);
                    long.push(-*l);
                }
                self.clauses.push(long);
                t
            }
            Prop::Or(parts) => {
                let lits: Vec<i32> = parts.iter().map(|q| self.tseitin(q)).collect();
                let v = self.fresh_var();
                let t = self.lit(v, true);
                let mut long = vec![-t];
                for l in &lits {
                    self.clauses.push(vec![t, -*l]);
                    long.push(*l);
                }
                self.clauses.push(long);
                t
            }
        }
    }

    fn assert(&mut self, p: Prop) {
        match p {
            Prop::True => {}
            Prop::False => self.clauses.push(vec![]),
            Prop::Lit(l) => self.clauses.push(vec![l]),
            Prop::And(parts) => {
                for q in parts {
                    self.assert(q);
                }
            }
            other => {
                let l = self.tseitin(&other);
                self.clauses.push(vec![l]);
            }
        }
    }

    /// Ground equality theory: transitivity over canonical pairs, and
    /// congruence for every interned predicate in every argument slot.
    fn add_equality_theory(&mut self) {
        let n = self.constants.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let (vij, vjk, vik) = (self.eq_var(i, j), self.eq_var(j, k), self.eq_var(i, k));
                    let eij = self.lit(vij, true);
                    let ejk = self.lit(vjk, true);
                    let eik = self.lit(vik, true);
                    self.clauses.push(vec![-eij, -ejk, eik]);
                    self.clauses.push(vec![-eij, -eik, ejk]);
                    self.clauses.push(vec![-ejk, -eik, eij]);
                }
            }
        }
        for pid in 0..self.preds.len() {
            let arity = self.preds[pid].1;
            for a in 0..n {
                for b in (a + 1)..n {
                    let vab = self.eq_var(a, b);
                    let e = self.lit(vab, true);
                    for slot in 0..arity {
                        // Enumerate the other argument positions.
                        let mut others = vec![0usize; arity.saturating_sub(1)];
                        loop {
                            let mut args_a = Vec::with_capacity(arity);
                            let mut args_b = Vec::with_capacity(arity);
                            let mut oi = 0;
                            for s in 0..arity {
                                if s == slot {
                                    args_a.push(a);
                                    args_b.push(b);
                                } else {
                                    args_a.push(others[oi]);
                                    args_b.push(others[oi]);
                                    oi += 1;
                                }
                            }
                            let (va, vb) =
                                (self.atom_var(pid, args_a), self.atom_var(pid, args_b));
                            let pa = self.lit(va, true);
                            let pb = self.lit(vb, true);
                            self.clauses.push(vec![-e, -pa, pb]);
                            self.clauses.push(vec![-e, -pb, pa]);
                            // Next combination.
                            let mut carry = true;
                            for o in others.iter_mut() {
                                if carry {
                                    *o += 1;
                                    if *o == n {
                                        *o = 0;
                                    } else {
                                        carry = false;
                                    }
                                }
                            }
                            if carry || others.is_empty() {
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Decides satisfiability of `axioms ∧ extra` over exactly the given
/// constants. Formulas need not be in NNF; normalization happens here.
pub(crate) fn satisfiable(constants: &[String], axioms: &[&Formula], extra: &Formula) -> bool {
    let normalized: Vec<Formula> = axioms
        .iter()
        .map(|f| super::fol::nnf(f, false))
        .chain(std::iter::once(super::fol::nnf(extra, false)))
        .collect();
    let mut g = Grounder::new(constants);
    let mut props = Vec::new();
    for f in &normalized {
        let mut env = HashMap::new();
        props.push(g.ground(f, &mut env));
    }
    // Congruence needs the full predicate table, so ground first.
    g.add_equality_theory();
    for p in props {
        g.assert(p);
    }
    dpll(g.num_vars, &g.clauses)
}

/// Plain DPLL with unit propagation. `0` in the assignment vector means
/// unassigned, `1` true, `-1` false.
fn dpll(num_vars: usize, clauses: &[Vec<i32>]) -> bool {
    if clauses.iter().any(|c| c.is_empty()) {
        return false;
    }
    let mut assign = vec![0i8; num_vars];
    solve(&mut assign, clauses)
}

fn value(assign: &[i8], lit: i32) -> i8 {
    let v = assign[(lit.unsigned_abs() - 1) as usize];
    if lit > 0 {
        v
    } else {
        -v
    }
}

fn solve(assign: &mut Vec<i8>, clauses: &[Vec<i32>]) -> bool {
    // Unit propagation to fixpoint; record the trail for backtracking.
    let mut trail: Vec<usize> = Vec::new();
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned: Option<i32> = None;
            let mut satisfied = false;
            let mut unassigned_count = 0;
            for &l in clause {
                match value(assign, l) {
                    1 => {
                        satisfied = true;
                        break;
                    }
                    0 => {
                        unassigned_count += 1;
                        unassigned = Some(l);
                    }
                    _ => {}
                }
            }
            if satisfied {
                continue;
            }
            match unassigned_count {
                0 => {
                    for &v in &trail {
                        assign[v] = 0;
                    }
                    return false;
                }
                1 => {
                    let l = unassigned.unwrap();
                    let var = (l.unsigned_abs() - 1) as usize;
                    assign[var] = if l > 0 { 1 } else { -1 };
                    trail.push(var);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let Some(var) = assign.iter().position(|&v| v == 0) else {
        return true;
    };
    for choice in [1i8, -1] {
        assign[var] = choice;
        if solve(assign, clauses) {
            return true;
        }
        assign[var] = 0;
    }
    for &v in &trail {
        assign[v] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoder::fol::Term;

    fn consts(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn propositional_contradiction_is_unsat() {
        let cs = consts(&["a"]);
        let p = Formula::pred("p", vec![Term::constant("a")]);
        let np = Formula::not(p.clone());
        assert!(!satisfiable(&cs, &[&p], &np));
        assert!(satisfiable(&cs, &[&p], &p));
    }

    #[test]
    fn quantifiers_expand_over_the_domain() {
        // ∀X p(X) together with ∃X ¬p(X) is unsat over any finite domain.
        let cs = consts(&["a", "b", "c"]);
        let all = Formula::forall(&["X"], Formula::pred("p", vec![Term::var("X")]));
        let some_not = Formula::exists(
            &["X"],
            Formula::not(Formula::pred("p", vec![Term::var("X")])),
        );
        assert!(!satisfiable(&cs, &[&all], &some_not));
        assert!(satisfiable(&cs, &[], &some_not));
    }

    #[test]
    fn equality_congruence_transfers_predicates() {
        // a = b ∧ p(a) ∧ ¬p(b) must be unsat.
        let cs = consts(&["a", "b"]);
        let eq = Formula::Eq(Term::constant("a"), Term::constant("b"));
        let pa = Formula::pred("p", vec![Term::constant("a")]);
        let npb = Formula::not(Formula::pred("p", vec![Term::constant("b")]));
        assert!(!satisfiable(&cs, &[&eq, &pa], &npb));
        // Without the equality it is satisfiable.
        assert!(satisfiable(&cs, &[&pa], &npb));
    }

    #[test]
    fn equality_transitivity_holds() {
        let cs = consts(&["a", "b", "c"]);
        let ab = Formula::Eq(Term::constant("a"), Term::constant("b"));
        let bc = Formula::Eq(Term::constant("b"), Term::constant("c"));
        let nac = Formula::not(Formula::Eq(Term::constant("a"), Term::constant("c")));
        assert!(!satisfiable(&cs, &[&ab, &bc], &nac));
    }

    #[test]
    fn domain_closure_forces_collapse() {
        // With two constants forced equal by domain closure ∀X (X = a), any
        // p must agree on both.
        let cs = consts(&["a", "b"]);
        let closure = Formula::forall(
            &["X"],
            Formula::Eq(Term::var("X"), Term::constant("a")),
        );
        let pa = Formula::pred("p", vec![Term::constant("a")]);
        let npb = Formula::not(Formula::pred("p", vec![Term::constant("b")]));
        assert!(!satisfiable(&cs, &[&closure, &pa], &npb));
    }
}
