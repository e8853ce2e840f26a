//! The `.poly` text format.
//!
//! ```text
//! # comment
//! vars x y z
//! y + z >= x
//! x >= y + 2*z
//! 0 <= y
//! z >= 1/2
//! ```
//!
//! The first non-comment line lists the variables; their order fixes the
//! dimensions. Each later line holds one constraint (or a chain such as
//! `0 <= x <= 1`) built from `+`, `-`, `*`, `/`, parentheses, integer or
//! decimal literals and variable names. Products and quotients must have a
//! constant side. Relations are `<=` (or `=<`), `>=` and `=`; strict `<` and
//! `>` are rejected. A line reading `false` makes the polyhedron empty and
//! `true` is ignored.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use polyhull_core::model::{integer, LinearConstraint, Normalized, RawConstraint, RawRelation};
use polyhull_core::{normalize, Polyhedron, Rational, VarOrder};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unknown variable `{name}`")]
    UnknownVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}, column {column}: strict inequality `{op}` is not supported")]
    StrictInequality {
        line: usize,
        column: usize,
        op: &'static str,
    },
    #[error("line {line}: duplicate variable `{name}` in header")]
    DuplicateVariable { line: usize, name: String },
    #[error("line {line}, column {column}: non-linear term")]
    NonLinear { line: usize, column: usize },
    #[error("missing `vars` header")]
    MissingHeader,
}

/// A parsed file before normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFile {
    pub vars: VarOrder,
    pub constraints: Vec<RawConstraint>,
    /// Set by a `false` line.
    pub contradiction: bool,
    /// Comment text (without `#`) in file order.
    pub comments: Vec<String>,
}

impl PolyFile {
    pub fn into_polyhedron(self) -> Polyhedron {
        if self.contradiction {
            return Polyhedron::empty(self.vars);
        }
        Polyhedron::from_raw(self.vars, &self.constraints).expect("rows match the header")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(Rational),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Rel(RawRelation),
}

fn lex(line_no: usize, text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let syntax = |col: usize, message: String| ParseError::Syntax {
        line: line_no,
        column: col,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let next = chars.get(i + 1).copied();
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((col, Tok::Plus)),
            '-' => out.push((col, Tok::Minus)),
            '*' => out.push((col, Tok::Star)),
            '/' => out.push((col, Tok::Slash)),
            '(' => out.push((col, Tok::LParen)),
            ')' => out.push((col, Tok::RParen)),
            '<' | '>' => {
                let ge = c == '>';
                if next == Some('=') {
                    i += 1;
                    out.push((
                        col,
                        Tok::Rel(if ge { RawRelation::Ge } else { RawRelation::Le }),
                    ));
                } else {
                    return Err(ParseError::StrictInequality {
                        line: line_no,
                        column: col,
                        op: if ge { ">" } else { "<" },
                    });
                }
            }
            '=' => match next {
                Some('<') => {
                    i += 1;
                    out.push((col, Tok::Rel(RawRelation::Le)));
                }
                Some('>') => {
                    i += 1;
                    out.push((col, Tok::Rel(RawRelation::Ge)));
                }
                Some('=') => {
                    i += 1;
                    out.push((col, Tok::Rel(RawRelation::Eq)));
                }
                _ => out.push((col, Tok::Rel(RawRelation::Eq))),
            },
            d if d.is_ascii_digit() || (d == '.' && next.is_some_and(|n| n.is_ascii_digit())) => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let mut frac = String::new();
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        frac.push(chars[i]);
                        i += 1;
                    }
                }
                let whole: String = chars[start..i]
                    .iter()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                let digits = format!("{whole}{frac}");
                let numer: BigInt = digits.parse().map_err(|_| {
                    syntax(
                        col,
                        format!(
                            "bad number `{}`",
                            chars[start..i].iter().collect::<String>()
                        ),
                    )
                })?;
                let denom = num_traits::pow(BigInt::from(10), frac.len());
                out.push((col, Tok::Num(Rational::new(numer, denom))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push((col, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => return Err(syntax(col, format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

/// Affine expression over the header's dimensions.
#[derive(Debug, Clone)]
struct Affine {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl Affine {
    fn constant(dim: usize, v: Rational) -> Self {
        Affine {
            coeffs: vec![Rational::zero(); dim],
            constant: v,
        }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn scale(mut self, k: &Rational) -> Self {
        for c in self.coeffs.iter_mut() {
            *c *= k;
        }
        self.constant *= k;
        self
    }

    fn add(mut self, other: Affine, sign: i64) -> Self {
        let s = integer(sign);
        for (c, o) in self.coeffs.iter_mut().zip(other.coeffs) {
            *c += o * &s;
        }
        self.constant += other.constant * s;
        self
    }
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    line: usize,
    vars: &'a VarOrder,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.col(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Affine, ParseError> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(rhs, sign);
        }
    }

    fn term(&mut self) -> Result<Affine, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => Tok::Star,
                Some(Tok::Slash) => Tok::Slash,
                _ => return Ok(acc),
            };
            let col = self.col();
            self.pos += 1;
            let rhs = self.unary()?;
            let nonlinear = ParseError::NonLinear {
                line: self.line,
                column: col,
            };
            acc = match op {
                Tok::Star if rhs.is_constant() => {
                    let k = rhs.constant;
                    acc.scale(&k)
                }
                Tok::Star if acc.is_constant() => {
                    let k = acc.constant;
                    rhs.scale(&k)
                }
                Tok::Star => return Err(nonlinear),
                _ if !rhs.is_constant() => return Err(nonlinear),
                _ if rhs.constant.is_zero() => {
                    return Err(ParseError::Syntax {
                        line: self.line,
                        column: col,
                        message: "division by zero".into(),
                    })
                }
                _ => {
                    let k = rhs.constant.recip();
                    acc.scale(&k)
                }
            };
        }
    }

    fn unary(&mut self) -> Result<Affine, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.scale(&-Rational::one()))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Affine, ParseError> {
        let dim = self.vars.len();
        let col = self.col();
        match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Affine::constant(dim, v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .vars
                    .index_of(&name)
                    .ok_or(ParseError::UnknownVariable {
                        line: self.line,
                        column: col,
                        name,
                    })?;
                let mut e = Affine::constant(dim, Rational::zero());
                e.coeffs[idx] = Rational::one();
                Ok(e)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of line")),
        }
    }
}

/// Parse one constraint line (possibly a chain) against `vars`.
pub fn parse_constraints(
    line_no: usize,
    text: &str,
    vars: &VarOrder,
) -> Result<Vec<RawConstraint>, ParseError> {
    let toks = lex(line_no, text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        line: line_no,
        vars,
        end_col: text.chars().count() + 1,
    };
    let mut lhs = p.expr()?;
    let mut out = Vec::new();
    while let Some(Tok::Rel(rel)) = p.peek().cloned() {
        p.pos += 1;
        let rhs = p.expr()?;
        // lhs - rhs REL 0
        let diff = lhs.clone().add(rhs.clone(), -1);
        out.push(RawConstraint::new(diff.coeffs, rel, -diff.constant));
        lhs = rhs;
    }
    if p.pos < toks.len() {
        return Err(p.error("unexpected token"));
    }
    if out.is_empty() {
        return Err(p.error("expected `<=`, `>=` or `=`"));
    }
    Ok(out)
}

/// Parse a single constraint given on its own (as on the command line).
pub fn parse_constraint(text: &str, vars: &VarOrder) -> Result<Vec<RawConstraint>, ParseError> {
    parse_constraints(1, text, vars)
}

pub fn parse_poly_file(text: &str) -> Result<PolyFile, ParseError> {
    let mut vars: Option<VarOrder> = None;
    let mut constraints = Vec::new();
    let mut comments = Vec::new();
    let mut contradiction = false;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw_line.find('#') {
            Some(k) => (&raw_line[..k], Some(&raw_line[k + 1..])),
            None => (raw_line, None),
        };
        if let Some(c) = comment {
            comments.push(c.trim().to_string());
        }
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let Some(vs) = &vars else {
            let mut words = body.split_whitespace();
            if words.next() != Some("vars") {
                return Err(ParseError::MissingHeader);
            }
            let names: Vec<&str> = words
                .flat_map(|w| w.split(','))
                .filter(|w| !w.is_empty())
                .collect();
            for (i, name) in names.iter().enumerate() {
                let ok = name
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_alphabetic() || c == '_')
                    && name
                        .chars()
                        .all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
                if !ok {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        column: raw_line.find(name).map_or(1, |k| k + 1),
                        message: format!("bad variable name `{name}`"),
                    });
                }
                if names[..i].contains(name) {
                    return Err(ParseError::DuplicateVariable {
                        line: line_no,
                        name: name.to_string(),
                    });
                }
            }
            vars = Some(VarOrder::new(names).expect("names checked distinct"));
            continue;
        };
        match body {
            "false" => contradiction = true,
            "true" => {}
            _ => {
                // columns refer to the original line
                let offset = raw_line.len() - raw_line.trim_start().len();
                let parsed =
                    parse_constraints(line_no, body, vs).map_err(|e| shift_column(e, offset))?;
                constraints.extend(parsed);
            }
        }
    }
    let vars = vars.ok_or(ParseError::MissingHeader)?;
    Ok(PolyFile {
        vars,
        constraints,
        contradiction,
        comments,
    })
}

fn shift_column(e: ParseError, offset: usize) -> ParseError {
    match e {
        ParseError::Syntax {
            line,
            column,
            message,
        } => ParseError::Syntax {
            line,
            column: column + offset,
            message,
        },
        ParseError::UnknownVariable { line, column, name } => ParseError::UnknownVariable {
            line,
            column: column + offset,
            name,
        },
        ParseError::StrictInequality { line, column, op } => ParseError::StrictInequality {
            line,
            column: column + offset,
            op,
        },
        ParseError::NonLinear { line, column } => ParseError::NonLinear {
            line,
            column: column + offset,
        },
        other => other,
    }
}

/// Parse and normalize a polyhedron.
pub fn parse_poly(text: &str) -> Result<Polyhedron, ParseError> {
    Ok(parse_poly_file(text)?.into_polyhedron())
}

/// Render one normalized constraint, e.g. `x - 2*y >= -1`.
pub fn format_constraint(c: &LinearConstraint, vars: &VarOrder) -> String {
    let (coeffs, rel, rhs) = c.display_form();
    let mut s = String::new();
    for (i, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if s.is_empty() {
            if a.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if a.is_negative() { " - " } else { " + " });
        }
        let mag = a.abs();
        if !mag.is_one() {
            let _ = write!(s, "{mag}*");
        }
        s.push_str(vars.name(i));
    }
    let _ = write!(s, " {} {}", rel.symbol(), rhs);
    s
}

/// Canonical text: the header, then one constraint per line in canonical
/// order, or the single line `false` for the empty polyhedron.
pub fn format_poly(p: &Polyhedron) -> String {
    let mut s = String::from("vars");
    for name in p.vars().names() {
        s.push(' ');
        s.push_str(name);
    }
    s.push('\n');
    match p.system() {
        None => s.push_str("false\n"),
        Some(sys) => {
            for c in sys.clone().canonical().rows() {
                s.push_str(&format_constraint(c, p.vars()));
                s.push('\n');
            }
        }
    }
    s
}

/// Normalize raw rows for a one-off query; `None` if any row is trivially
/// false, and trivially true rows are dropped.
pub fn normalize_all(raws: &[RawConstraint]) -> Option<Vec<LinearConstraint>> {
    let mut out = Vec::new();
    for r in raws {
        match normalize(r) {
            Normalized::Constraint(c) => out.push(c),
            Normalized::TriviallyTrue => {}
            Normalized::TriviallyFalse => return None,
        }
    }
    Some(out)
}
