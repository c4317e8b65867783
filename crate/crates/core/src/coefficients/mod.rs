//! The coefficient ring `Z[la_w : w in Omega; mu_x : x in X]`, the label
//! registry that names its indeterminates, and rational specialization.

mod poly;

pub use poly::{Monomial, Poly, Var};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::{IntPoly, RatPoly};

/// Which of the two decoration sets a label belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    X,
    Omega,
}

/// An interned label. Equality is equality of intern ids; the kind is
/// carried along so that structural checks need no table lookup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decoration {
    id: u32,
    kind: Kind,
}

impl Decoration {
    pub fn id(self) -> u32 {
        self.id
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn is_omega(self) -> bool {
        self.kind == Kind::Omega
    }

    /// The weight indeterminate of this label (`la_w` or `mu_x`).
    pub fn var(self) -> Var {
        Var(self.id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Label {
    name: String,
    kind: Kind,
}

/// Registry of the label sets X and Omega.
///
/// Omega labels receive the lower intern ids so that weight monomials print
/// `la_*` factors before `mu_*` factors; within each set the declaration
/// order is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolTable {
    labels: Vec<Label>,
    index: HashMap<String, u32>,
}

fn valid_label(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl SymbolTable {
    pub fn new<I, J, S, T>(x_labels: I, omega_labels: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        let omega: Vec<String> = omega_labels.into_iter().map(Into::into).collect();
        let xs: Vec<String> = x_labels.into_iter().map(Into::into).collect();
        if omega.is_empty() {
            return Err(Error::EmptyOmega);
        }
        let mut table = SymbolTable {
            labels: Vec::with_capacity(omega.len() + xs.len()),
            index: HashMap::new(),
        };
        let tagged = omega
            .into_iter()
            .map(|n| (n, Kind::Omega))
            .chain(xs.into_iter().map(|n| (n, Kind::X)));
        for (name, kind) in tagged {
            if !valid_label(&name) {
                return Err(Error::InvalidLabel(name));
            }
            if table.index.contains_key(&name) {
                return Err(Error::DuplicateLabel(name));
            }
            table.index.insert(name.clone(), table.labels.len() as u32);
            table.labels.push(Label { name, kind });
        }
        Ok(table)
    }

    pub fn lookup(&self, name: &str) -> Result<Decoration> {
        self.index
            .get(name)
            .map(|&id| Decoration {
                id,
                kind: self.labels[id as usize].kind,
            })
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn contains(&self, d: Decoration) -> bool {
        self.labels
            .get(d.id as usize)
            .is_some_and(|l| l.kind == d.kind)
    }

    pub fn name(&self, d: Decoration) -> &str {
        &self.labels[d.id as usize].name
    }

    /// All decorations in id order.
    pub fn decorations(&self) -> impl Iterator<Item = Decoration> + '_ {
        self.labels.iter().enumerate().map(|(i, l)| Decoration {
            id: i as u32,
            kind: l.kind,
        })
    }

    pub fn x_labels(&self) -> impl Iterator<Item = Decoration> + '_ {
        self.decorations().filter(|d| d.kind == Kind::X)
    }

    pub fn omega_labels(&self) -> impl Iterator<Item = Decoration> + '_ {
        self.decorations().filter(|d| d.kind == Kind::Omega)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The weight `mu_x` or `la_w` of a registered decoration.
    pub fn weight_of(&self, d: Decoration) -> Result<IntPoly> {
        if !self.contains(d) {
            return Err(Error::UnknownLabel(format!("#{}", d.id)));
        }
        Ok(Poly::var(d.var()))
    }

    /// Rendered name of a weight symbol: `la_<label>` or `mu_<label>`.
    pub fn symbol_name(&self, v: Var) -> String {
        match self.labels.get(v.0 as usize) {
            Some(Label { name, kind: Kind::Omega }) => format!("la_{}", name),
            Some(Label { name, kind: Kind::X }) => format!("mu_{}", name),
            None => format!("v{}", v.0),
        }
    }

    pub fn parse_symbol(&self, sym: &str) -> Result<Var> {
        let unknown = || Error::UnknownSymbol(sym.to_string());
        let (kind, label) = if let Some(rest) = sym.strip_prefix("la_") {
            (Kind::Omega, rest)
        } else if let Some(rest) = sym.strip_prefix("mu_") {
            (Kind::X, rest)
        } else {
            return Err(unknown());
        };
        let d = self.lookup(label).map_err(|_| unknown())?;
        if d.kind != kind {
            return Err(unknown());
        }
        Ok(d.var())
    }

    /// Formats a polynomial with this table's symbol names.
    pub fn show_poly<C>(&self, p: &Poly<C>) -> String
    where
        C: crate::Ring + fmt::Display,
    {
        let mut s = String::new();
        p.write_with(&mut s, &|v| self.symbol_name(v))
            .expect("writing to a String cannot fail");
        s
    }
}

/// A partial assignment of rational values to weight symbols. Unassigned
/// symbols stay symbolic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specialization {
    assignment: BTreeMap<Var, BigRational>,
}

impl Specialization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(mut self, v: Var, value: BigRational) -> Self {
        self.assignment.insert(v, value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.assignment.get(&v)
    }

    /// Every weight symbol of `symbols` set to `value`.
    pub fn constant(symbols: &SymbolTable, value: BigRational) -> Self {
        symbols
            .decorations()
            .fold(Self::new(), |s, d| s.assign(d.var(), value.clone()))
    }

    /// A total assignment with small random rationals `p/q`, `|p| <= 9`,
    /// `1 <= q <= 5`.
    pub fn random<R: Rng>(symbols: &SymbolTable, rng: &mut R) -> Self {
        symbols.decorations().fold(Self::new(), |s, d| {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=5);
            s.assign(
                d.var(),
                BigRational::new(BigInt::from(num), BigInt::from(den)),
            )
        })
    }

    /// Parses `la_a=0,mu_x=1/2`.
    pub fn parse(src: &str, symbols: &SymbolTable) -> Result<Self> {
        let mut spec = Self::new();
        for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (sym, val) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidNumber(item.to_string()))?;
            let var = symbols.parse_symbol(sym.trim())?;
            let value = BigRational::from_str(val.trim())
                .map_err(|_| Error::InvalidNumber(val.trim().to_string()))?;
            spec = spec.assign(var, value);
        }
        Ok(spec)
    }

    pub fn is_total(&self, symbols: &SymbolTable) -> bool {
        symbols
            .decorations()
            .all(|d| self.assignment.contains_key(&d.var()))
    }

    /// Substitutes the assigned symbols.
    pub fn apply(&self, p: &IntPoly) -> RatPoly {
        p.substitute(
            |c| RatPoly::constant(BigRational::from_integer(c.clone())),
            |v| match self.assignment.get(&v) {
                Some(r) => RatPoly::constant(r.clone()),
                None => RatPoly::var(v),
            },
        )
    }

    /// The rational value of `p`, if every symbol occurring in it is assigned.
    pub fn evaluate(&self, p: &IntPoly) -> Option<BigRational> {
        let covered = p
            .terms()
            .all(|(m, _)| m.exponents().iter().all(|(v, _)| self.assignment.contains_key(v)));
        if !covered {
            return None;
        }
        Some(p.substitute(
            |c| BigRational::from_integer(c.clone()),
            |v| self.assignment[&v].clone(),
        ))
    }

    /// The weight of every decoration under this assignment, as a constant
    /// when assigned and as its symbol otherwise.
    pub fn weight(&self, d: Decoration) -> RatPoly {
        match self.assignment.get(&d.var()) {
            Some(r) => RatPoly::constant(r.clone()),
            None => RatPoly::var(d.var()),
        }
    }

    /// Total-assignment weight, falling back to zero for unassigned symbols.
    pub fn value(&self, d: Decoration) -> BigRational {
        self.assignment
            .get(&d.var())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

/// `num/den` as a `BigRational`.
pub fn rational(num: i64, den: i64) -> BigRational {
    if den == 1 {
        return BigRational::from_integer(BigInt::from(num));
    }
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
