//! The line-oriented `.alia` structure format.
//!
//! ```text
//! dim 4
//! param lambda
//! bracket 3 1 = 1*1              # [e3, e1] = e1
//! comul 3 = -1*(1,2)             # Δ(e3) = −e1⊗e2
//! map N = 1*(1<-1) + 1*(1<-2)    # N(e2) has e1-coefficient 1
//! tensor r = 1*(2,3) - 1*(3,2)
//! form w = lambda*(2,4) - lambda*(4,2)
//! ```
//!
//! Indices are 1-based. A coefficient is a product of integers, fractions
//! `p/q` and declared parameters; a bare target means coefficient 1. A
//! right-hand side of `0` declares the structure without adding entries.
//! Repeated lines for the same structure accumulate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use alia_core::{Algebra, BilinearForm, Bundle, Coalgebra, LinearMap, Matrix, Scalar, TwoTensor};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(String),
    Slash,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
    Arrow,
    Eq,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn describe(t: Option<&Token>) -> String {
    match t.map(|t| &t.tok) {
        None => "end of line".into(),
        Some(Tok::Word(w)) => format!("`{w}`"),
        Some(Tok::Int(i)) => format!("`{i}`"),
        Some(Tok::Slash) => "`/`".into(),
        Some(Tok::Star) => "`*`".into(),
        Some(Tok::Plus) => "`+`".into(),
        Some(Tok::Minus) => "`-`".into(),
        Some(Tok::LParen) => "`(`".into(),
        Some(Tok::RParen) => "`)`".into(),
        Some(Tok::Comma) => "`,`".into(),
        Some(Tok::Arrow) => "`<-`".into(),
        Some(Tok::Eq) => "`=`".into(),
    }
}

fn lex(line_no: usize, text: &str) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '/' => Some(Tok::Slash),
            '*' => Some(Tok::Star),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, col });
            i += 1;
        } else if c == '<' && chars.get(i + 1) == Some(&'-') {
            out.push(Token {
                tok: Tok::Arrow,
                col,
            });
            i += 2;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Int(chars[start..i].iter().collect()),
                col,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Word(chars[start..i].iter().collect()),
                col,
            });
        } else {
            return Err(CliError::syntax(
                line_no,
                col,
                format!("unexpected character `{c}`"),
            ));
        }
    }
    Ok(out)
}

/// Where a term lands: `e_k`, `e_j ⊗ e_k`, or the `(i, j)` matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Index(usize),
    Pair(usize, usize),
    Arrow(usize, usize),
}

#[derive(Clone, Debug)]
struct Term {
    coeff: Scalar,
    params: Vec<String>,
    target: Target,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Bracket(usize, usize),
    Comul(usize),
    Map(String),
    Tensor(String),
    Form(String),
}

#[derive(Clone, Debug)]
struct Statement {
    section: Section,
    terms: Vec<Term>,
}

/// A parsed file whose coefficients may still mention parameters.
#[derive(Clone, Debug)]
pub struct Document {
    pub dim: usize,
    pub params: Vec<String>,
    statements: Vec<Statement>,
}

struct Cursor<'a> {
    line: usize,
    toks: &'a [Token],
    pos: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end_col, |t| t.col)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn fail<T>(&self, what: &str) -> Result<T, CliError> {
        Err(CliError::syntax(
            self.line,
            self.col(),
            format!("expected {what}, found {}", describe(self.peek())),
        ))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().map(|t| &t.tok) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), CliError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.fail(what)
        }
    }

    fn word(&mut self, what: &str) -> Result<String, CliError> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Word(w)) => {
                self.pos += 1;
                Ok(w.clone())
            }
            _ => self.fail(what),
        }
    }

    fn int(&mut self, what: &str) -> Result<(String, usize), CliError> {
        match self.peek() {
            Some(Token {
                tok: Tok::Int(i),
                col,
            }) => {
                self.pos += 1;
                Ok((i.clone(), *col))
            }
            _ => self.fail(what),
        }
    }

    fn end(&self) -> Result<(), CliError> {
        if self.peek().is_some() {
            self.fail("end of line")
        } else {
            Ok(())
        }
    }
}

fn index(line: usize, dim: usize, (digits, col): (String, usize)) -> Result<usize, CliError> {
    let value: Option<usize> = digits.parse().ok();
    match value {
        Some(v) if (1..=dim).contains(&v) => Ok(v - 1),
        _ => Err(CliError::IndexOutOfRange {
            line,
            col,
            index: digits,
            dim,
        }),
    }
}

enum Item {
    Int(String, Scalar),
    Number(Scalar),
    Param(String),
    Target(Target),
}

fn item(c: &mut Cursor, dim: usize) -> Result<Item, CliError> {
    match c.peek().map(|t| &t.tok) {
        Some(Tok::Int(_)) => {
            let (num, col) = c.int("a number")?;
            if c.eat(&Tok::Slash) {
                let (den, _) = c.int("a denominator")?;
                let value = format!("{num}/{den}")
                    .parse::<Scalar>()
                    .map_err(|_| CliError::syntax(c.line, col, "zero denominator"))?;
                Ok(Item::Number(value))
            } else {
                let value = num.parse::<Scalar>().expect("digits parse as an integer");
                Ok(Item::Int(num, value))
            }
        }
        Some(Tok::Word(_)) => Ok(Item::Param(c.word("a parameter")?)),
        Some(Tok::LParen) => {
            c.next();
            let first = index(c.line, dim, c.int("an index")?)?;
            let arrow = if c.eat(&Tok::Arrow) {
                true
            } else {
                c.expect(Tok::Comma, "`,` or `<-`")?;
                false
            };
            let second = index(c.line, dim, c.int("an index")?)?;
            c.expect(Tok::RParen, "`)`")?;
            Ok(Item::Target(if arrow {
                Target::Arrow(first, second)
            } else {
                Target::Pair(first, second)
            }))
        }
        _ => c.fail("a coefficient or target"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Index,
    Pair,
    Arrow,
}

fn term(
    c: &mut Cursor,
    dim: usize,
    shape: Shape,
    declared: &BTreeSet<String>,
) -> Result<Term, CliError> {
    let mut items = Vec::new();
    loop {
        let col = c.col();
        items.push((item(c, dim)?, col));
        if !c.eat(&Tok::Star) {
            break;
        }
    }
    let (last, col) = items.pop().expect("at least one item");
    let target = match (last, shape) {
        (Item::Target(t @ Target::Pair(..)), Shape::Pair) => t,
        (Item::Target(t @ Target::Arrow(..)), Shape::Arrow) => t,
        (Item::Int(digits, _), Shape::Index) => Target::Index(index(c.line, dim, (digits, col))?),
        _ => {
            let want = match shape {
                Shape::Index => "an index target `k`",
                Shape::Pair => "a target `(i,j)`",
                Shape::Arrow => "a target `(i<-j)`",
            };
            return Err(CliError::syntax(c.line, col, format!("expected {want}")));
        }
    };
    let mut coeff = Scalar::one();
    let mut params = Vec::new();
    for (it, col) in items {
        match it {
            Item::Int(_, v) | Item::Number(v) => coeff *= &v,
            Item::Param(p) => {
                if !declared.contains(&p) {
                    return Err(CliError::UnboundParam(p));
                }
                params.push(p);
            }
            Item::Target(_) => {
                return Err(CliError::syntax(
                    c.line,
                    col,
                    "target must be the last factor",
                ));
            }
        }
    }
    Ok(Term {
        coeff,
        params,
        target,
    })
}

fn rhs(
    c: &mut Cursor,
    dim: usize,
    shape: Shape,
    declared: &BTreeSet<String>,
) -> Result<Vec<Term>, CliError> {
    c.expect(Tok::Eq, "`=`")?;
    if c.toks.len() == c.pos + 1 && c.peek().map(|t| &t.tok) == Some(&Tok::Int("0".into())) {
        c.next();
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut negate = c.eat(&Tok::Minus);
    if !negate {
        c.eat(&Tok::Plus);
    }
    loop {
        let mut t = term(c, dim, shape, declared)?;
        if negate {
            t.coeff = -t.coeff;
        }
        terms.push(t);
        if c.eat(&Tok::Plus) {
            negate = c.eat(&Tok::Minus);
        } else if c.eat(&Tok::Minus) {
            negate = true;
        } else {
            break;
        }
    }
    c.end()?;
    Ok(terms)
}

fn is_keyword(w: &str) -> bool {
    matches!(
        w,
        "dim" | "param" | "bracket" | "comul" | "map" | "tensor" | "form"
    )
}

/// Parses the text of a structure file without substituting parameters.
pub fn parse_document(src: &str) -> Result<Document, CliError> {
    let mut dim: Option<usize> = None;
    let mut params: Vec<String> = Vec::new();
    let mut declared = BTreeSet::new();
    let mut statements = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let line = k + 1;
        let toks = lex(line, raw)?;
        if toks.is_empty() {
            continue;
        }
        let mut c = Cursor {
            line,
            toks: &toks,
            pos: 0,
            end_col: raw.chars().count() + 1,
        };
        let head = c.word("a section keyword")?;
        if head == "dim" {
            if dim.is_some() {
                return Err(CliError::syntax(line, 1, "`dim` declared twice"));
            }
            let (digits, col) = c.int("a dimension")?;
            let n = digits
                .parse()
                .map_err(|_| CliError::syntax(line, col, "dimension too large"))?;
            c.end()?;
            dim = Some(n);
            continue;
        }
        let Some(n) = dim else {
            return Err(CliError::syntax(line, 1, "`dim` must come first"));
        };
        let section = match head.as_str() {
            "param" => {
                let col = c.col();
                let name = c.word("a parameter name")?;
                c.end()?;
                if is_keyword(&name) || !declared.insert(name.clone()) {
                    return Err(CliError::syntax(
                        line,
                        col,
                        format!("parameter `{name}` cannot be declared here"),
                    ));
                }
                params.push(name);
                continue;
            }
            "bracket" => {
                let i = index(line, n, c.int("an index")?)?;
                let j = index(line, n, c.int("an index")?)?;
                Section::Bracket(i, j)
            }
            "comul" => Section::Comul(index(line, n, c.int("an index")?)?),
            "map" => Section::Map(c.word("a map name")?),
            "tensor" => Section::Tensor(c.word("a tensor name")?),
            "form" => Section::Form(c.word("a form name")?),
            other => {
                return Err(CliError::syntax(
                    line,
                    1,
                    format!("unknown section `{other}`"),
                ));
            }
        };
        let shape = match section {
            Section::Bracket(..) => Shape::Index,
            Section::Comul(_) | Section::Tensor(_) | Section::Form(_) => Shape::Pair,
            Section::Map(_) => Shape::Arrow,
        };
        let terms = rhs(&mut c, n, shape, &declared)?;
        statements.push(Statement { section, terms });
    }
    let dim = dim.ok_or_else(|| CliError::syntax(1, 1, "missing `dim`"))?;
    Ok(Document {
        dim,
        params,
        statements,
    })
}

fn value(t: &Term, bindings: &BTreeMap<String, Scalar>) -> Result<Scalar, CliError> {
    let mut v = t.coeff.clone();
    for p in &t.params {
        let b = bindings
            .get(p)
            .ok_or_else(|| CliError::UnboundParam(p.clone()))?;
        v *= b;
    }
    Ok(v)
}

impl Document {
    /// Substitutes parameter values, producing exact structures.
    pub fn resolve(&self, bindings: &BTreeMap<String, Scalar>) -> Result<Bundle, CliError> {
        let n = self.dim;
        let mut b = Bundle::new(n);
        for st in &self.statements {
            match &st.section {
                Section::Bracket(i, j) => {
                    let a = b.algebra.get_or_insert_with(|| Algebra::zero(n));
                    for t in &st.terms {
                        if let Target::Index(k) = t.target {
                            *a.c_mut(*i, *j, k) += value(t, bindings)?;
                        }
                    }
                }
                Section::Comul(i) => {
                    let co = b.coalgebra.get_or_insert_with(|| Coalgebra::zero(n));
                    for t in &st.terms {
                        if let Target::Pair(j, k) = t.target {
                            *co.d_mut(*i, j, k) += value(t, bindings)?;
                        }
                    }
                }
                Section::Map(name) => {
                    let m = b
                        .maps
                        .entry(name.clone())
                        .or_insert_with(|| LinearMap::zero(n));
                    for t in &st.terms {
                        if let Target::Arrow(i, j) = t.target {
                            *m.m.get_mut(i, j) += value(t, bindings)?;
                        }
                    }
                }
                Section::Tensor(name) => {
                    let r = b
                        .tensors
                        .entry(name.clone())
                        .or_insert_with(|| TwoTensor::zero(n));
                    for t in &st.terms {
                        if let Target::Pair(i, j) = t.target {
                            *r.t.get_mut(i, j) += value(t, bindings)?;
                        }
                    }
                }
                Section::Form(name) => {
                    let w = b
                        .forms
                        .entry(name.clone())
                        .or_insert_with(|| BilinearForm::zero(n));
                    for t in &st.terms {
                        if let Target::Pair(i, j) = t.target {
                            *w.w.get_mut(i, j) += value(t, bindings)?;
                        }
                    }
                }
            }
        }
        Ok(b)
    }
}

/// Parses and resolves in one step.
pub fn parse_structure(src: &str, bindings: &BTreeMap<String, Scalar>) -> Result<Bundle, CliError> {
    parse_document(src)?.resolve(bindings)
}

fn push_terms<'a>(out: &mut String, terms: impl Iterator<Item = (&'a Scalar, String)>) {
    let mut first = true;
    for (c, target) in terms {
        if first {
            let _ = write!(out, "{c}*{target}");
            first = false;
        } else if c.is_negative() {
            let _ = write!(out, " - {}*{target}", c.abs());
        } else {
            let _ = write!(out, " + {c}*{target}");
        }
    }
    if first {
        out.push('0');
    }
}

fn matrix_terms(m: &Matrix, arrow: bool) -> Vec<(&Scalar, String)> {
    let mut v = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if !c.is_zero() {
                let t = if arrow {
                    format!("({}<-{})", i + 1, j + 1)
                } else {
                    format!("({},{})", i + 1, j + 1)
                };
                v.push((c, t));
            }
        }
    }
    v
}

/// Canonical text of a bundle: fixed section order, nonzero entries only,
/// rationals in lowest terms.
pub fn emit(b: &Bundle) -> String {
    let n = b.dim;
    let mut out = format!("dim {n}\n");
    if let Some(a) = &b.algebra {
        let mut any = false;
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<_> = (0..n)
                    .filter(|&k| !a.c(i, j, k).is_zero())
                    .map(|k| (a.c(i, j, k), (k + 1).to_string()))
                    .collect();
                if !terms.is_empty() {
                    let _ = write!(out, "bracket {} {} = ", i + 1, j + 1);
                    push_terms(&mut out, terms.into_iter());
                    out.push('\n');
                    any = true;
                }
            }
        }
        if !any && n > 0 {
            out.push_str("bracket 1 1 = 0\n");
        }
    }
    if let Some(c) = &b.coalgebra {
        let mut any = false;
        for i in 0..n {
            let d = c.coproduct(i);
            let terms = matrix_terms(&d, false);
            if !terms.is_empty() {
                let _ = write!(out, "comul {} = ", i + 1);
                push_terms(&mut out, terms.into_iter());
                out.push('\n');
                any = true;
            }
        }
        if !any && n > 0 {
            out.push_str("comul 1 = 0\n");
        }
    }
    for (name, m) in &b.maps {
        let _ = write!(out, "map {name} = ");
        push_terms(&mut out, matrix_terms(&m.m, true).into_iter());
        out.push('\n');
    }
    for (name, r) in &b.tensors {
        let _ = write!(out, "tensor {name} = ");
        push_terms(&mut out, matrix_terms(&r.t, false).into_iter());
        out.push('\n');
    }
    for (name, w) in &b.forms {
        let _ = write!(out, "form {name} = ");
        push_terms(&mut out, matrix_terms(&w.w, false).into_iter());
        out.push('\n');
    }
    out
}
