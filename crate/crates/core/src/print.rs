//! Deterministic text output: instances, interpretations, truth tables.
//!
//! Printing follows declaration order everywhere, so equal inputs always
//! produce byte-identical text and `parse(print(x))` gives `x` back.

use std::fmt::Write;

use crate::adf::{Adf, TruthTable};
use crate::formula::Formula;
use crate::interp::{ThreeValued, TwoValued};
use crate::vocab::Vocabulary;

/// Render a framework in the instance format. Explicit `l` facts are
/// emitted only when the link relation differs from the one the
/// conditions induce; otherwise links are left implicit.
pub fn instance_text(adf: &Adf) -> String {
    let mut out = String::new();
    for name in adf.vocab().names() {
        let _ = writeln!(out, "s({name}).");
    }
    for s in 0..adf.statement_count() {
        let _ = writeln!(
            out,
            "ac({},{}).",
            adf.vocab().name(s),
            formula_text(adf.condition(s), adf.vocab())
        );
    }
    if !adf.links_equal_induced() {
        for (from, to) in adf.links() {
            let _ = writeln!(out, "l({},{}).", adf.vocab().name(from), adf.vocab().name(to));
        }
    }
    out
}

pub fn formula_text(f: &Formula, vocab: &Vocabulary) -> String {
    let mut out = String::new();
    write_formula(f, vocab, &mut out);
    out
}

fn write_formula(f: &Formula, vocab: &Vocabulary, out: &mut String) {
    match f {
        Formula::Const(true) => out.push_str("c(v)"),
        Formula::Const(false) => out.push_str("c(f)"),
        Formula::Atom(i) => out.push_str(vocab.name(*i)),
        Formula::Neg(inner) => {
            out.push_str("neg(");
            write_formula(inner, vocab, out);
            out.push(')');
        }
        Formula::And(a, b) => write_binary("and", a, b, vocab, out),
        Formula::Or(a, b) => write_binary("or", a, b, vocab, out),
        Formula::Imp(a, b) => write_binary("imp", a, b, vocab, out),
        Formula::Iff(a, b) => write_binary("iff", a, b, vocab, out),
        Formula::Xor(a, b) => write_binary("xor", a, b, vocab, out),
    }
}

fn write_binary(op: &str, a: &Formula, b: &Formula, vocab: &Vocabulary, out: &mut String) {
    out.push_str(op);
    out.push('(');
    write_formula(a, vocab, out);
    out.push(',');
    write_formula(b, vocab, out);
    out.push(')');
}

/// One-line interpretation, statements in declaration order:
/// `t(a) f(b) u(c)`. The zero-statement interpretation prints empty.
pub fn interp_text(v: &ThreeValued, vocab: &Vocabulary) -> String {
    let mut parts = Vec::with_capacity(vocab.len());
    for (s, name) in vocab.names().enumerate() {
        parts.push(format!("{}({name})", v.value(s)));
    }
    parts.join(" ")
}

pub fn two_valued_text(w: &TwoValued, vocab: &Vocabulary) -> String {
    interp_text(&ThreeValued::from(w), vocab)
}

/// Render one truth table, rows ordered from the full parent subset down
/// to the empty one (larger subsets first, lexicographic within a size).
pub fn table_text(table: &TruthTable, vocab: &Vocabulary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}:", vocab.name(table.statement));
    let k = table.parents.len();
    let mut masks: Vec<u64> = (0..(1u64 << k)).collect();
    masks.sort_by(|a, b| {
        b.count_ones()
            .cmp(&a.count_ones())
            .then_with(|| subset_names(*a, table, vocab).cmp(&subset_names(*b, table, vocab)))
    });
    for mask in masks {
        let names = subset_names(mask, table, vocab);
        let value = if table.value(mask) { 't' } else { 'f' };
        let _ = writeln!(out, "  {{{}}} -> {value}", names.join(","));
    }
    out
}

fn subset_names(mask: u64, table: &TruthTable, vocab: &Vocabulary) -> Vec<String> {
    table
        .parents
        .iter()
        .enumerate()
        .filter(|(j, _)| mask >> j & 1 == 1)
        .map(|(_, &p)| vocab.name(p).to_owned())
        .collect()
}
