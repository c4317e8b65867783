//! Sparse multivariate polynomials over an arbitrary coefficient ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Ring;

/// A polynomial indeterminate. Weight symbols share their index with the
/// decoration they belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

/// A power product, stored sparsely as `(var, exponent)` pairs sorted by
/// variable with every exponent positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_exponents<I: IntoIterator<Item = (Var, u32)>>(exps: I) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in exps {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

// Lexicographic on dense exponent vectors, lowest variable index most
// significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the side holding the smaller variable has a positive
                        // exponent where the other has zero
                        return if va < vb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with coefficients in `C`. Zero coefficients are never
/// stored, so structural equality is ring equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> Poly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Iterates terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())))
    }

    pub fn map_coefficients<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Evaluates the polynomial in another ring: coefficients go through
    /// `lift`, variables through `value`.
    pub fn substitute<D: Ring>(&self, lift: impl Fn(&C) -> D, value: impl Fn(Var) -> D) -> D {
        let mut acc = D::zero();
        for (m, c) in &self.terms {
            let mut t = lift(c);
            for &(v, e) in m.exponents() {
                let base = value(v);
                for _ in 0..e {
                    t = t * base.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Writes the polynomial with highest monomial first, e.g.
    /// `3*la_a^2*mu_x + 1`.
    pub fn write_with(&self, f: &mut dyn fmt::Write, name: &dyn Fn(Var) -> String) -> fmt::Result
    where
        C: fmt::Display,
    {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut coef = c.to_string();
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        name(v)
                    } else {
                        format!("{}^{}", name(v), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                f.write_str(&coef)?;
            } else {
                if coef != "1" {
                    write!(f, "{}*", coef)?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Ring> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
}

impl<C: Ring> From<C> for Poly<C> {
    fn from(c: C) -> Self {
        Poly::constant(c)
    }
}

impl<'a, C: Ring> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Ring> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -self.clone()
    }
}

impl<C: Ring> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        self + (-rhs)
    }
}

impl<'a, C: Ring> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.clone() + (-rhs)
    }
}

impl<'a, C: Ring> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Poly<BigInt>;

    fn v(i: u32) -> P {
        P::var(Var(i))
    }

    fn c(n: i64) -> P {
        P::constant(BigInt::from(n))
    }

    fn show(p: &P) -> String {
        let mut s = String::new();
        p.write_with(&mut s, &|v| ["la_a", "la_b", "mu_x"][v.0 as usize].to_string())
            .unwrap();
        s
    }

    #[test]
    fn distributes() {
        // (la_a + 2) * la_a
        assert_eq!((v(0) + c(2)) * v(0), v(0) * v(0) + c(2) * v(0));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = v(2) + (-v(2));
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn product_of_distinct_weights() {
        let p = v(0) * v(1);
        assert_eq!(p.len(), 1);
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn prints_highest_monomial_first() {
        let p = c(3) * v(0) * v(0) * v(2) + c(1);
        assert_eq!(show(&p), "3*la_a^2*mu_x + 1");
        assert_eq!(show(&(-c(2) * v(2) - v(0))), "-la_a - 2*mu_x");
        assert_eq!(show(&P::zero()), "0");
        assert_eq!(show(&c(-7)), "-7");
    }

    #[test]
    fn monomial_order_is_lexicographic() {
        let a = Monomial::var(Var(0));
        let b5 = Monomial::from_exponents([(Var(1), 5)]);
        let ab = Monomial::from_exponents([(Var(0), 1), (Var(1), 1)]);
        assert!(a > b5);
        assert!(ab > a);
        assert!(Monomial::one() < b5);
    }

    #[test]
    fn substitution_evaluates() {
        let p = c(2) * v(2) + v(0) * v(2);
        let val = p.substitute(|c| c.clone(), |var| BigInt::from(var.0 as i64 + 1));
        // 2*3 + 1*3
        assert_eq!(val, BigInt::from(9));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        let term = (-3i64..=3, 0u32..3, 0u32..3, 0u32..3);
        proptest::collection::vec(term, 0..=2).prop_map(|ts| {
            P::from_terms(ts.into_iter().map(|(c, a, b, x)| {
                (
                    Monomial::from_exponents([(Var(0), a), (Var(1), b), (Var(2), x)]),
                    BigInt::from(c),
                )
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &P::one(), p.clone());
            prop_assert!((&p - &p).is_zero());
        }
    }
}
