//! SMT-LIB 2 printer.
//!
//! Every problem is a plain `UF` script: one uninterpreted sort for
//! concepts, constant and predicate declarations, axioms as assertions, the
//! negated conjecture, and a final `(check-sat)`. `unsat` therefore means
//! "conjecture proved" — same refutational reading as an ATP `Theorem`.

use std::fmt::Write;

use super::fol::{Formula, Term};

/// Name of the concept sort.
pub(crate) const SORT: &str = "C";

fn term(t: &Term) -> &str {
    match t {
        Term::Var(v) => v,
        Term::Const(c) => c,
    }
}

/// Prints a formula as an SMT-LIB s-expression.
pub(crate) fn formula(f: &Formula) -> String {
    match f {
        Formula::Pred(name, args) => {
            if args.is_empty() {
                name.clone()
            } else {
                let joined: Vec<&str> = args.iter().map(term).collect();
                format!("({} {})", name, joined.join(" "))
            }
        }
        Formula::Eq(a, b) => format!("(= {} {})", term(a), term(b)),
        Formula::Not(inner) => format!("(not {})", formula(inner)),
        Formula::And(fs) => nary(fs, "and", "true"),
        Formula::Or(fs) => nary(fs, "or", "false"),
        Formula::Iff(a, b) => format!("(= {} {})", formula(a), formula(b)),
        Formula::Forall(vars, body) => format!("(forall ({}) {})", bindings(vars), formula(body)),
        Formula::Exists(vars, body) => format!("(exists ({}) {})", bindings(vars), formula(body)),
    }
}

fn bindings(vars: &[String]) -> String {
    let parts: Vec<String> = vars.iter().map(|v| format!("({v} {SORT})")).collect();
    parts.join(" ")
}

fn nary(fs: &[Formula], op: &str, empty: &str) -> String {
    match fs.len() {
        0 => empty.to_owned(),
        1 => formula(&fs[0]),
        _ => {
            let parts: Vec<String> = fs.iter().map(formula).collect();
            format!("({} {})", op, parts.join(" "))
        }
    }
}

/// A complete SMT-LIB script refuting the conjecture.
pub(crate) fn problem(
    header: &str,
    constants: &[String],
    predicates: &[(&str, usize)],
    axioms: &[(String, Formula)],
    conjecture: &(String, Formula),
) -> String {
    let mut out = String::new();
    for line in header.lines() {
        let _ = writeln!(out, "; {line}");
    }
    let _ = writeln!(out, "(set-logic UF)");
    let _ = writeln!(out, "(declare-sort {SORT} 0)");
    for c in constants {
        let _ = writeln!(out, "(declare-const {c} {SORT})");
    }
    for (p, arity) in predicates {
        let args = vec![SORT; *arity].join(" ");
        let _ = writeln!(out, "(declare-fun {p} ({args}) Bool)");
    }
    for (name, f) in axioms {
        let _ = writeln!(out, "; {name}");
        let _ = writeln!(out, "(assert {})", formula(f));
    }
    let _ = writeln!(out, "; {} (negated)", conjecture.0);
    let _ = writeln!(out, "(assert (not {}))", formula(&conjecture.1));
    let _ = writeln!(out, "(check-sat)");
    out
}
