//! Parsers for the fact-style instance format and for interpretations.
//!
//! An instance is a sequence of facts, in any order, `%` starting a line
//! comment and whitespace carrying no meaning:
//!
//! ```text
//! s(a). s(b).            % statement declarations
//! ac(a, c(v)).           % acceptance conditions, one per statement
//! ac(b, and(a, neg(b))).
//! l(a, b).               % optional explicit links
//! ```
//!
//! Formulas are `c(v)`, `c(f)`, a statement name, or `neg`, `and`, `or`,
//! `imp`, `iff`, `xor` applied to subformulas. Without `l` facts the link
//! relation is induced from the atoms of the conditions; with them, the
//! given links are authoritative and every atom must be a declared parent.
//!
//! An interpretation is whitespace-separated `t(x)`, `f(y)`, `u(z)` terms
//! mentioning every statement exactly once.

use std::collections::BTreeSet;
use std::fmt;

use crate::adf::Adf;
use crate::formula::Formula;
use crate::interp::ThreeValued;
use crate::set::StmtSet;
use crate::vocab::Vocabulary;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// A parse or validation message anchored to a source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl Diagnostic {
    fn error(pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}:{}: {kind}: {}", self.line, self.col, self.message)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
        }
    }
}

fn lex(text: &str, diagnostics: &mut Vec<Diagnostic>) -> Vec<(Tok, Pos)> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let pos = Pos { line, col };
        match c {
            '\n' => {
                line += 1;
                col = 1;
                continue;
            }
            '%' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        col = 1;
                        break;
                    }
                }
                continue;
            }
            c if c.is_whitespace() => {}
            '(' => out.push((Tok::LParen, pos)),
            ')' => out.push((Tok::RParen, pos)),
            ',' => out.push((Tok::Comma, pos)),
            '.' => out.push((Tok::Dot, pos)),
            c if is_ident_char(c) => {
                let mut name = String::from(c);
                while let Some(&next) = chars.peek() {
                    if is_ident_char(next) {
                        name.push(next);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(name), pos));
            }
            other => diagnostics.push(Diagnostic::error(
                pos,
                format!("unexpected character `{other}`"),
            )),
        }
        col += 1;
    }
    out
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Formula over statement names, before resolution against a vocabulary.
#[derive(Debug, Clone)]
enum RawFormula {
    Const(bool),
    Atom(String, Pos),
    Neg(Box<RawFormula>),
    Bin(&'static str, Box<RawFormula>, Box<RawFormula>),
}

#[derive(Debug)]
enum Fact {
    Statement(String, Pos),
    Condition(String, Pos, RawFormula),
    Link(String, Pos, String, Pos),
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    at: usize,
    diagnostics: Vec<Diagnostic>,
}

impl Parser {
    fn peek(&self) -> Option<&(Tok, Pos)> {
        self.tokens.get(self.at)
    }

    fn next(&mut self) -> Option<(Tok, Pos)> {
        let t = self.tokens.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn last_pos(&self) -> Pos {
        self.tokens
            .last()
            .map(|(_, p)| *p)
            .unwrap_or(Pos { line: 1, col: 1 })
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, ()> {
        match self.next() {
            Some((tok, pos)) if tok == want => Ok(pos),
            Some((tok, pos)) => {
                self.diagnostics
                    .push(Diagnostic::error(pos, format!("expected {want}, found {tok}")));
                Err(())
            }
            None => {
                self.diagnostics
                    .push(Diagnostic::error(self.last_pos(), format!("expected {want}, found end of input")));
                Err(())
            }
        }
    }

    fn expect_ident(&mut self) -> Result<(String, Pos), ()> {
        match self.next() {
            Some((Tok::Ident(name), pos)) => Ok((name, pos)),
            Some((tok, pos)) => {
                self.diagnostics
                    .push(Diagnostic::error(pos, format!("expected a name, found {tok}")));
                Err(())
            }
            None => {
                self.diagnostics
                    .push(Diagnostic::error(self.last_pos(), "expected a name, found end of input"));
                Err(())
            }
        }
    }

    /// Skip to just past the next `.` so later facts still get parsed.
    fn resync(&mut self) {
        while let Some((tok, _)) = self.next() {
            if tok == Tok::Dot {
                break;
            }
        }
    }

    fn facts(&mut self) -> Vec<Fact> {
        let mut facts = Vec::new();
        while self.peek().is_some() {
            match self.fact() {
                Ok(f) => facts.push(f),
                Err(()) => self.resync(),
            }
        }
        facts
    }

    fn fact(&mut self) -> Result<Fact, ()> {
        let (functor, pos) = self.expect_ident()?;
        let fact = match functor.as_str() {
            "s" => {
                self.expect(Tok::LParen)?;
                let (name, npos) = self.expect_ident()?;
                self.expect(Tok::RParen)?;
                Fact::Statement(name, npos)
            }
            "ac" => {
                self.expect(Tok::LParen)?;
                let (name, npos) = self.expect_ident()?;
                self.expect(Tok::Comma)?;
                let formula = self.formula()?;
                self.expect(Tok::RParen)?;
                Fact::Condition(name, npos, formula)
            }
            "l" => {
                self.expect(Tok::LParen)?;
                let (from, fpos) = self.expect_ident()?;
                self.expect(Tok::Comma)?;
                let (to, tpos) = self.expect_ident()?;
                self.expect(Tok::RParen)?;
                Fact::Link(from, fpos, to, tpos)
            }
            other => {
                self.diagnostics.push(Diagnostic::error(
                    pos,
                    format!("unknown fact `{other}`, expected `s`, `ac` or `l`"),
                ));
                return Err(());
            }
        };
        self.expect(Tok::Dot)?;
        Ok(fact)
    }

    fn formula(&mut self) -> Result<RawFormula, ()> {
        let (head, pos) = self.expect_ident()?;
        // a functor is only a functor when applied; a bare name is an atom
        let applied = matches!(self.peek(), Some((Tok::LParen, _)));
        match (head.as_str(), applied) {
            ("c", true) => {
                self.expect(Tok::LParen)?;
                let (value, vpos) = self.expect_ident()?;
                self.expect(Tok::RParen)?;
                match value.as_str() {
                    "v" => Ok(RawFormula::Const(true)),
                    "f" => Ok(RawFormula::Const(false)),
                    other => {
                        self.diagnostics.push(Diagnostic::error(
                            vpos,
                            format!("constant must be `v` or `f`, found `{other}`"),
                        ));
                        Err(())
                    }
                }
            }
            ("neg", true) => {
                self.expect(Tok::LParen)?;
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(RawFormula::Neg(Box::new(inner)))
            }
            (op @ ("and" | "or" | "imp" | "iff" | "xor"), true) => {
                let op: &'static str = match op {
                    "and" => "and",
                    "or" => "or",
                    "imp" => "imp",
                    "iff" => "iff",
                    _ => "xor",
                };
                self.expect(Tok::LParen)?;
                let lhs = self.formula()?;
                self.expect(Tok::Comma)?;
                let rhs = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(RawFormula::Bin(op, Box::new(lhs), Box::new(rhs)))
            }
            (_, _) => Ok(RawFormula::Atom(head, pos)),
        }
    }
}

fn resolve_formula(
    raw: &RawFormula,
    vocab: &Vocabulary,
    diagnostics: &mut Vec<Diagnostic>,
) -> Option<Formula> {
    match raw {
        RawFormula::Const(b) => Some(Formula::Const(*b)),
        RawFormula::Atom(name, pos) => match vocab.index_of(name) {
            Some(i) => Some(Formula::Atom(i)),
            None => {
                diagnostics.push(Diagnostic::error(
                    *pos,
                    format!("atom `{name}` is not a declared statement"),
                ));
                None
            }
        },
        RawFormula::Neg(inner) => {
            let inner = resolve_formula(inner, vocab, diagnostics)?;
            Some(crate::formula::neg(inner))
        }
        RawFormula::Bin(op, lhs, rhs) => {
            let lhs = resolve_formula(lhs, vocab, diagnostics);
            let rhs = resolve_formula(rhs, vocab, diagnostics);
            let (lhs, rhs) = (lhs?, rhs?);
            Some(match *op {
                "and" => crate::formula::and(lhs, rhs),
                "or" => crate::formula::or(lhs, rhs),
                "imp" => crate::formula::imp(lhs, rhs),
                "iff" => crate::formula::iff(lhs, rhs),
                _ => crate::formula::xor(lhs, rhs),
            })
        }
    }
}

/// Parse an instance into a validated framework, or every diagnostic the
/// text produced.
pub fn parse_adf(text: &str) -> Result<Adf, Vec<Diagnostic>> {
    let mut diagnostics = Vec::new();
    let tokens = lex(text, &mut diagnostics);
    let mut parser = Parser {
        tokens,
        at: 0,
        diagnostics,
    };
    let facts = parser.facts();
    let mut diagnostics = parser.diagnostics;

    let mut names: Vec<String> = Vec::new();
    let mut statement_pos: Vec<Pos> = Vec::new();
    for fact in &facts {
        if let Fact::Statement(name, pos) = fact {
            if names.iter().any(|n| n == name) {
                diagnostics.push(Diagnostic::error(
                    *pos,
                    format!("statement `{name}` declared twice"),
                ));
            } else {
                names.push(name.clone());
                statement_pos.push(*pos);
            }
        }
    }
    let vocab = match Vocabulary::new(names) {
        Ok(v) => v,
        Err(e) => {
            // duplicates were already reported above; anything else is new
            diagnostics.push(Diagnostic::error(Pos { line: 1, col: 1 }, e.to_string()));
            return Err(diagnostics);
        }
    };

    let mut conditions: Vec<Option<(Formula, Pos)>> = vec![None; vocab.len()];
    let mut condition_seen = vec![false; vocab.len()];
    let mut explicit_links: Option<BTreeSet<(usize, usize)>> = None;
    for fact in &facts {
        match fact {
            Fact::Statement(..) => {}
            Fact::Condition(name, pos, raw) => {
                let Some(s) = vocab.index_of(name) else {
                    diagnostics.push(Diagnostic::error(
                        *pos,
                        format!("condition for undeclared statement `{name}`"),
                    ));
                    continue;
                };
                if condition_seen[s] {
                    diagnostics.push(Diagnostic::error(
                        *pos,
                        format!("statement `{name}` has more than one condition"),
                    ));
                    continue;
                }
                condition_seen[s] = true;
                if let Some(f) = resolve_formula(raw, &vocab, &mut diagnostics) {
                    conditions[s] = Some((f, *pos));
                }
            }
            Fact::Link(from, fpos, to, tpos) => {
                let links = explicit_links.get_or_insert_with(BTreeSet::new);
                let from_idx = vocab.index_of(from);
                let to_idx = vocab.index_of(to);
                if from_idx.is_none() {
                    diagnostics.push(Diagnostic::error(
                        *fpos,
                        format!("link mentions undeclared statement `{from}`"),
                    ));
                }
                if to_idx.is_none() {
                    diagnostics.push(Diagnostic::error(
                        *tpos,
                        format!("link mentions undeclared statement `{to}`"),
                    ));
                }
                if let (Some(a), Some(b)) = (from_idx, to_idx) {
                    links.insert((a, b));
                }
            }
        }
    }

    for (s, &seen) in condition_seen.iter().enumerate() {
        if !seen {
            diagnostics.push(Diagnostic::error(
                statement_pos[s],
                format!("statement `{}` has no condition", vocab.name(s)),
            ));
        }
    }
    if !diagnostics.is_empty() {
        return Err(diagnostics);
    }

    let condition_pos: std::collections::HashMap<String, Pos> = conditions
        .iter()
        .enumerate()
        .map(|(s, c)| (vocab.name(s).to_owned(), c.as_ref().unwrap().1))
        .collect();
    let pairs: Vec<(usize, Formula)> = conditions
        .into_iter()
        .enumerate()
        .map(|(s, c)| (s, c.unwrap().0))
        .collect();
    let links: BTreeSet<(usize, usize)> = match explicit_links {
        Some(links) => links,
        None => pairs
            .iter()
            .flat_map(|(s, f)| {
                f.atoms(vocab.len())
                    .iter()
                    .map(|a| (a, *s))
                    .collect::<Vec<_>>()
            })
            .collect(),
    };

    // only atom-not-parent can fail here (explicit links narrower than
    // the atoms); anchor it to the offending condition
    Adf::from_parts(vocab, links, pairs).map_err(|violations| {
        violations
            .into_iter()
            .map(|v| {
                let pos = match &v {
                    crate::Violation::AtomNotParent { statement, .. } => condition_pos
                        .get(statement)
                        .copied()
                        .unwrap_or(Pos { line: 1, col: 1 }),
                    _ => Pos { line: 1, col: 1 },
                };
                Diagnostic::error(pos, v.to_string())
            })
            .collect()
    })
}

/// Parse a `t(..) f(..) u(..)` interpretation over the given vocabulary.
pub fn parse_interp(text: &str, vocab: &Vocabulary) -> Result<ThreeValued, Vec<Diagnostic>> {
    let mut diagnostics = Vec::new();
    let tokens = lex(text, &mut diagnostics);
    let mut parser = Parser {
        tokens,
        at: 0,
        diagnostics,
    };
    let n = vocab.len();
    let mut defined = StmtSet::empty(n);
    let mut trues = StmtSet::empty(n);
    let mut mentioned = StmtSet::empty(n);
    while parser.peek().is_some() {
        let Ok((functor, pos)) = parser.expect_ident() else {
            break;
        };
        if !matches!(functor.as_str(), "t" | "f" | "u") {
            parser.diagnostics.push(Diagnostic::error(
                pos,
                format!("expected `t`, `f` or `u`, found `{functor}`"),
            ));
            break;
        }
        let Ok(_) = parser.expect(Tok::LParen) else { break };
        let Ok((name, npos)) = parser.expect_ident() else {
            break;
        };
        let Ok(_) = parser.expect(Tok::RParen) else { break };
        let Some(s) = vocab.index_of(&name) else {
            parser.diagnostics.push(Diagnostic::error(
                npos,
                format!("unknown statement `{name}`"),
            ));
            continue;
        };
        if mentioned.contains(s) {
            parser.diagnostics.push(Diagnostic::error(
                npos,
                format!("statement `{name}` mentioned twice"),
            ));
            continue;
        }
        mentioned.insert(s);
        match functor.as_str() {
            "t" => {
                defined.insert(s);
                trues.insert(s);
            }
            "f" => {
                defined.insert(s);
            }
            _ => {}
        }
    }
    let mut diagnostics = parser.diagnostics;
    for s in 0..n {
        if !mentioned.contains(s) {
            diagnostics.push(Diagnostic::error(
                Pos { line: 1, col: 1 },
                format!("statement `{}` not mentioned", vocab.name(s)),
            ));
        }
    }
    if diagnostics.is_empty() {
        Ok(ThreeValued::new(defined, trues).expect("t-facts define their statement"))
    } else {
        Err(diagnostics)
    }
}
