//! Text, LaTeX and JSON forms of forests, polynomials and linear
//! combinations.
//!
//! Forest grammar:
//!
//! ```text
//! forest := "1" | tree { WS tree }
//! tree   := label | label "[" forest "]"
//! ```
//!
//! A bracketed label must be Omega-kind. `a[1]` denotes the same tree as `a`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::coefficients::{Decoration, Monomial, Poly, SymbolTable};
use crate::error::{Error, Result};
use crate::forest::{Forest, Tree};
use crate::linear::{Element, Tensor2};
use crate::scalar::Ring;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    symbols: &'a SymbolTable,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn label(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => self.err(format!("unexpected `{}`", c as char)),
                None => self.err("unexpected end of input"),
            };
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    /// Parses a forest up to (not including) `]` or end of input.
    fn forest(&mut self) -> Result<Forest> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'1') {
            let save = self.pos;
            let word = self.label()?;
            if word == "1" {
                self.skip_ws();
                return match self.peek() {
                    None | Some(b']') => Ok(Forest::unit()),
                    Some(_) => self.err("`1` cannot be concatenated with trees"),
                };
            }
            self.pos = save;
        }
        let mut trees = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b']') => break,
                _ => trees.push(self.tree()?),
            }
        }
        if trees.is_empty() {
            self.pos = start;
            return self.err("expected a forest");
        }
        Ok(Forest::from_trees(trees))
    }

    fn tree(&mut self) -> Result<Tree> {
        let start = self.pos;
        let name = self.label()?;
        if name == "1" {
            self.pos = start;
            return self.err("`1` cannot be concatenated with trees");
        }
        let d = self.symbols.lookup(name)?;
        if self.peek() != Some(b'[') {
            return Ok(Tree::leaf(d));
        }
        if !d.is_omega() {
            return Err(Error::NotOmega(name.to_string()));
        }
        self.pos += 1;
        let children = self.forest()?;
        self.skip_ws();
        if self.peek() != Some(b']') {
            return self.err("expected `]`");
        }
        self.pos += 1;
        Tree::graft(children, d)
    }
}

/// Parses the forest grammar against a symbol table.
pub fn parse_forest(src: &str, symbols: &SymbolTable) -> Result<Forest> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        symbols,
    };
    let f = p.forest()?;
    p.skip_ws();
    if p.peek().is_some() {
        return p.err("unbalanced `]`");
    }
    Ok(f)
}

/// Parses a single tensor term `(F) ⊗ (G)`; the ASCII form `(F)o(G)` is
/// also accepted.
pub fn parse_tensor_pair(src: &str, symbols: &SymbolTable) -> Result<(Forest, Forest)> {
    let s = src.trim();
    let fail = |pos: usize, msg: &str| Error::Syntax {
        pos,
        msg: msg.to_string(),
    };
    if !s.starts_with('(') {
        return Err(fail(0, "expected `(`"));
    }
    let close = s.find(')').ok_or_else(|| fail(0, "expected `)`"))?;
    let left = parse_forest(&s[1..close], symbols)?;
    let rest = s[close + 1..].trim_start();
    let rest = rest
        .strip_prefix('⊗')
        .or_else(|| rest.strip_prefix('o'))
        .ok_or_else(|| fail(close + 1, "expected `⊗` or `o`"))?
        .trim();
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| fail(close + 1, "expected `(forest)`"))?;
    let right = parse_forest(inner, symbols)?;
    Ok((left, right))
}

fn write_tree(t: &Tree, symbols: &SymbolTable, out: &mut String) {
    out.push_str(symbols.name(t.decoration()));
    if !t.is_leaf() {
        out.push('[');
        write_trees(t.children(), symbols, out);
        out.push(']');
    }
}

fn write_trees(trees: &[Tree], symbols: &SymbolTable, out: &mut String) {
    for (i, t) in trees.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write_tree(t, symbols, out);
    }
}

/// Canonical text of a forest; inverse of [`parse_forest`].
pub fn format_forest(f: &Forest, symbols: &SymbolTable) -> String {
    if f.is_unit() {
        return "1".to_string();
    }
    let mut out = String::new();
    write_trees(f.trees(), symbols, &mut out);
    out
}

fn latex_tree(t: &Tree, symbols: &SymbolTable) -> String {
    let name = symbols.name(t.decoration());
    if t.is_leaf() {
        format!("\\bullet_{{{}}}", name)
    } else {
        let inner: Vec<String> = t.children().iter().map(|c| latex_tree(c, symbols)).collect();
        format!("B^+_{{{}}}({})", name, inner.join(" "))
    }
}

pub fn latex_forest(f: &Forest, symbols: &SymbolTable) -> String {
    if f.is_unit() {
        return "1".to_string();
    }
    let parts: Vec<String> = f.trees().iter().map(|t| latex_tree(t, symbols)).collect();
    parts.join(" ")
}

/// Coefficients that know how to render themselves.
pub trait Coefficient: Ring {
    fn to_text(&self, symbols: &SymbolTable) -> String;
    fn to_latex(&self, symbols: &SymbolTable) -> String;
    fn to_json(&self, symbols: &SymbolTable) -> Value;
}

impl<C: Ring + std::fmt::Display> Coefficient for Poly<C> {
    fn to_text(&self, symbols: &SymbolTable) -> String {
        symbols.show_poly(self)
    }

    fn to_latex(&self, symbols: &SymbolTable) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let mut coef = c.to_string();
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&latex_number(&coef));
                continue;
            }
            if coef != "1" {
                out.push_str(&latex_number(&coef));
            }
            for &(v, e) in m.exponents() {
                let sym = symbols.symbol_name(v);
                let (greek, label) = sym.split_at(3);
                let base = if greek == "la_" { "\\lambda" } else { "\\mu" };
                out.push_str(&format!("{}_{{{}}}", base, label));
                if e > 1 {
                    out.push_str(&format!("^{{{}}}", e));
                }
            }
        }
        out
    }

    fn to_json(&self, symbols: &SymbolTable) -> Value {
        Value::Array(
            self.terms()
                .rev()
                .map(|(m, c)| {
                    let exps: Map<String, Value> = m
                        .exponents()
                        .iter()
                        .map(|&(v, e)| (symbols.symbol_name(v), json!(e)))
                        .collect();
                    json!({ "coef": c.to_string(), "exps": exps })
                })
                .collect(),
        )
    }
}

fn latex_number(s: &str) -> String {
    match s.split_once('/') {
        Some((n, d)) => format!("\\frac{{{}}}{{{}}}", n, d),
        None => s.to_string(),
    }
}

macro_rules! plain_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn to_text(&self, _: &SymbolTable) -> String {
                self.to_string()
            }

            fn to_latex(&self, _: &SymbolTable) -> String {
                let s = self.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => format!("-{}", latex_number(rest)),
                    None => latex_number(&s),
                }
            }

            fn to_json(&self, _: &SymbolTable) -> Value {
                Value::String(self.to_string())
            }
        }
    )*};
}

plain_coefficient!(BigInt, BigRational, i64, f64);

fn is_compound(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    body.contains(" + ") || body.contains(" - ")
}

/// Joins `(coefficient text, basis text)` pairs as `c * basis` terms.
fn join_terms(terms: impl Iterator<Item = (String, String)>, times: &str) -> String {
    let mut out = String::new();
    for (i, (coef, basis)) in terms.enumerate() {
        let term = if coef == "1" {
            basis
        } else if coef == "-1" {
            format!("-{}", basis)
        } else if is_compound(&coef) {
            format!("({}){}{}", coef, times, basis)
        } else {
            format!("{}{}{}", coef, times, basis)
        };
        if i == 0 {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_element<C: Coefficient>(e: &Element<C>, symbols: &SymbolTable) -> String {
    join_terms(
        e.terms()
            .map(|(f, c)| (c.to_text(symbols), format_forest(f, symbols))),
        " * ",
    )
}

/// Tensor separator for text output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorStyle {
    Unicode,
    Ascii,
}

pub fn format_tensor2<C: Coefficient>(
    t: &Tensor2<C>,
    symbols: &SymbolTable,
    style: TensorStyle,
) -> String {
    let sep = match style {
        TensorStyle::Unicode => " ⊗ ",
        TensorStyle::Ascii => "o",
    };
    join_terms(
        t.terms().map(|((a, b), c)| {
            (
                c.to_text(symbols),
                format!(
                    "({}){}({})",
                    format_forest(a, symbols),
                    sep,
                    format_forest(b, symbols)
                ),
            )
        }),
        " * ",
    )
}

pub fn latex_element<C: Coefficient>(e: &Element<C>, symbols: &SymbolTable) -> String {
    join_terms(
        e.terms()
            .map(|(f, c)| (c.to_latex(symbols), latex_forest(f, symbols))),
        " ",
    )
}

pub fn latex_tensor2<C: Coefficient>(t: &Tensor2<C>, symbols: &SymbolTable) -> String {
    join_terms(
        t.terms().map(|((a, b), c)| {
            (
                c.to_latex(symbols),
                format!(
                    "{} \\otimes {}",
                    latex_forest(a, symbols),
                    latex_forest(b, symbols)
                ),
            )
        }),
        " ",
    )
}

fn tree_json(t: &Tree, symbols: &SymbolTable) -> Value {
    json!({
        "d": symbols.name(t.decoration()),
        "c": t.children().iter().map(|c| tree_json(c, symbols)).collect::<Vec<_>>(),
    })
}

/// A forest as a JSON array of `{d: label, c: [children]}` trees.
pub fn forest_to_json(f: &Forest, symbols: &SymbolTable) -> Value {
    Value::Array(f.trees().iter().map(|t| tree_json(t, symbols)).collect())
}

fn tree_from_json(v: &Value, symbols: &SymbolTable) -> Result<Tree> {
    let bad = || Error::Json(format!("expected a tree object, got {}", v));
    let obj = v.as_object().ok_or_else(bad)?;
    let label = obj.get("d").and_then(Value::as_str).ok_or_else(bad)?;
    let d: Decoration = symbols.lookup(label)?;
    let children = match obj.get("c") {
        None => Vec::new(),
        Some(c) => c
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|c| tree_from_json(c, symbols))
            .collect::<Result<Vec<_>>>()?,
    };
    if children.is_empty() {
        Ok(Tree::leaf(d))
    } else if !d.is_omega() {
        Err(Error::NotOmega(label.to_string()))
    } else {
        Tree::graft(Forest::from_trees(children), d)
    }
}

pub fn forest_from_json(v: &Value, symbols: &SymbolTable) -> Result<Forest> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("expected a forest array, got {}", v)))?;
    arr.iter()
        .map(|t| tree_from_json(t, symbols))
        .collect::<Result<Vec<_>>>()
        .map(Forest::from_trees)
}

/// Reads the JSON polynomial form `[{coef: "3", exps: {"la_a": 2}}]`.
pub fn int_poly_from_json(v: &Value, symbols: &SymbolTable) -> Result<Poly<BigInt>> {
    let bad = || Error::Json(format!("expected a polynomial, got {}", v));
    let mut terms = Vec::new();
    for t in v.as_array().ok_or_else(bad)? {
        let coef: BigInt = t
            .get("coef")
            .and_then(Value::as_str)
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| Error::InvalidNumber(t["coef"].to_string()))?;
        let mut exps = Vec::new();
        if let Some(map) = t.get("exps").and_then(Value::as_object) {
            for (sym, e) in map {
                let e = e.as_u64().ok_or_else(bad)? as u32;
                exps.push((symbols.parse_symbol(sym)?, e));
            }
        }
        terms.push((Monomial::from_exponents(exps), coef));
    }
    Ok(Poly::from_terms(terms))
}

pub fn element_to_json<C: Coefficient>(e: &Element<C>, symbols: &SymbolTable) -> Value {
    Value::Array(
        e.terms()
            .map(|(f, c)| json!({ "coef": c.to_json(symbols), "forest": forest_to_json(f, symbols) }))
            .collect(),
    )
}

pub fn tensor2_to_json<C: Coefficient>(t: &Tensor2<C>, symbols: &SymbolTable) -> Value {
    Value::Array(
        t.terms()
            .map(|((a, b), c)| {
                json!({
                    "coef": c.to_json(symbols),
                    "left": forest_to_json(a, symbols),
                    "right": forest_to_json(b, symbols),
                })
            })
            .collect(),
    )
}
