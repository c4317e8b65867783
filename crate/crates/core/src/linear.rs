//! Formal linear combinations of forests, pairs of forests and triples of
//! forests.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::forest::Forest;
use crate::scalar::Ring;

/// A basis that is also a monoid, so that combinations over it form an
/// algebra.
pub trait Basis: Clone + Ord {
    fn unit() -> Self;
    fn combine(&self, other: &Self) -> Self;
}

impl Basis for Forest {
    fn unit() -> Self {
        Forest::unit()
    }

    fn combine(&self, other: &Self) -> Self {
        self.concat(other)
    }
}

impl Basis for (Forest, Forest) {
    fn unit() -> Self {
        (Forest::unit(), Forest::unit())
    }

    fn combine(&self, other: &Self) -> Self {
        (self.0.concat(&other.0), self.1.concat(&other.1))
    }
}

impl Basis for (Forest, Forest, Forest) {
    fn unit() -> Self {
        (Forest::unit(), Forest::unit(), Forest::unit())
    }

    fn combine(&self, other: &Self) -> Self {
        (
            self.0.concat(&other.0),
            self.1.concat(&other.1),
            self.2.concat(&other.2),
        )
    }
}

/// A finite `C`-linear combination of basis elements `K`, kept canonical
/// (no zero coefficients) and iterated in the basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<K, C> {
    terms: BTreeMap<K, C>,
}

/// Elements of the forest algebra.
pub type Element<C> = Combination<Forest, C>;
/// Elements of `H (x) H`.
pub type Tensor2<C> = Combination<(Forest, Forest), C>;
/// Elements of `H (x) H (x) H`.
pub type Tensor3<C> = Combination<(Forest, Forest, Forest), C>;

impl<K: Ord + Clone, C: Ring> Combination<K, C> {
    pub fn zero() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, C::one())
    }

    pub fn term(k: K, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(k, sum);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &C, other: &Self) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), c.clone() * x.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (k.clone(), c.clone() * x.clone())))
    }

    pub fn map_coefficients<D: Ring>(&self, f: impl Fn(&C) -> D) -> Combination<K, D> {
        Combination::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    /// Applies a map on basis elements and re-collects.
    pub fn map_basis<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> Combination<L, C> {
        Combination::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// The linear extension of `f`, defined on basis elements, into any
    /// `C`-module.
    pub fn lift_linear<M: Module<C>>(&self, mut f: impl FnMut(&K) -> M) -> M {
        let mut acc = M::zero();
        for (k, c) in &self.terms {
            acc.add_scaled(c, &f(k));
        }
        acc
    }

    /// Fallible variant of [`Self::lift_linear`].
    pub fn try_lift_linear<M: Module<C>, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<M, E>,
    ) -> Result<M, E> {
        let mut acc = M::zero();
        for (k, c) in &self.terms {
            acc.add_scaled(c, &f(k)?);
        }
        Ok(acc)
    }
}

impl<K: Basis, C: Ring> Combination<K, C> {
    pub fn one() -> Self {
        Self::basis(K::unit())
    }

    /// Bilinear extension of the basis monoid product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.combine(b), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl<C: Ring> Element<C> {
    pub fn forest(f: Forest) -> Self {
        Self::basis(f)
    }

    pub fn scalar(c: C) -> Self {
        Self::term(Forest::unit(), c)
    }

    /// Largest degree among the forests with nonzero coefficient.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Forest::degree).max()
    }

    /// Whether every term has degree `n`.
    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|f| f.degree() == n)
    }
}

impl<C: Ring> Tensor2<C> {
    pub fn pure(a: Forest, b: Forest) -> Self {
        Self::basis((a, b))
    }

    /// `a (x) b` for elements `a`, `b`.
    pub fn tensor(a: &Element<C>, b: &Element<C>) -> Self {
        let mut out = Self::zero();
        for (f, cf) in a.terms() {
            for (g, cg) in b.terms() {
                out.add_term((f.clone(), g.clone()), cf.clone() * cg.clone());
            }
        }
        out
    }

    /// `(f (x) g)` applied to every term.
    pub fn map_sides(
        &self,
        f: impl Fn(&Forest) -> Element<C>,
        g: impl Fn(&Forest) -> Element<C>,
    ) -> Self {
        self.lift_linear(|(a, b)| Self::tensor(&f(a), &g(b)))
    }

    /// Multiplies the two tensor factors together.
    pub fn multiply(&self) -> Element<C> {
        self.lift_linear(|(a, b)| Element::forest(a.concat(b)))
    }
}

impl<C: Ring> Tensor3<C> {
    pub fn pure(a: Forest, b: Forest, c: Forest) -> Self {
        Self::basis((a, b, c))
    }

    /// `(D (x) id)` applied to a pair tensor, with `D` given on forests.
    pub fn expand_left(t: &Tensor2<C>, d: impl Fn(&Forest) -> Tensor2<C>) -> Self {
        t.lift_linear(|(a, b)| {
            d(a).map_basis(|(l, r)| (l.clone(), r.clone(), b.clone()))
        })
    }

    /// `(id (x) D)` applied to a pair tensor.
    pub fn expand_right(t: &Tensor2<C>, d: impl Fn(&Forest) -> Tensor2<C>) -> Self {
        t.lift_linear(|(a, b)| {
            d(b).map_basis(|(l, r)| (a.clone(), l.clone(), r.clone()))
        })
    }
}

/// A `C`-module: something `lift_linear` can land in.
pub trait Module<C>: Sized {
    fn zero() -> Self;
    fn add_scaled(&mut self, c: &C, other: &Self);
}

impl<K: Ord + Clone, C: Ring> Module<C> for Combination<K, C> {
    fn zero() -> Self {
        Combination::zero()
    }

    fn add_scaled(&mut self, c: &C, other: &Self) {
        Combination::add_scaled(self, c, other)
    }
}

/// The ring acting on itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar<C>(pub C);

impl<C: Ring> Module<C> for Scalar<C> {
    fn zero() -> Self {
        Scalar(C::zero())
    }

    fn add_scaled(&mut self, c: &C, other: &Self) {
        self.0 = self.0.clone() + c.clone() * other.0.clone();
    }
}

impl<K: Ord + Clone, C: Ring> Add for Combination<K, C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<'a, K: Ord + Clone, C: Ring> Add<&'a Combination<K, C>> for &'a Combination<K, C> {
    type Output = Combination<K, C>;
    fn add(self, rhs: Self) -> Combination<K, C> {
        self.clone() + rhs.clone()
    }
}

impl<K: Ord + Clone, C: Ring> Neg for Combination<K, C> {
    type Output = Self;
    fn neg(self) -> Self {
        Combination {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Ord + Clone, C: Ring> Sub for Combination<K, C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<'a, K: Ord + Clone, C: Ring> Sub<&'a Combination<K, C>> for &'a Combination<K, C> {
    type Output = Combination<K, C>;
    fn sub(self, rhs: Self) -> Combination<K, C> {
        self.clone() - rhs.clone()
    }
}

impl<'a, K: Basis, C: Ring> Mul<&'a Combination<K, C>> for &'a Combination<K, C> {
    type Output = Combination<K, C>;
    fn mul(self, rhs: Self) -> Combination<K, C> {
        Combination::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::SymbolTable;
    use crate::IntPoly;
    use num_traits::One;

    type E = Element<IntPoly>;
    type T2 = Tensor2<IntPoly>;

    fn setup() -> (SymbolTable, Forest, Forest, Forest) {
        let t = SymbolTable::new(["x", "y"], ["a"]).unwrap();
        let x = Forest::leaf(t.lookup("x").unwrap());
        let y = Forest::leaf(t.lookup("y").unwrap());
        let a = Forest::leaf(t.lookup("a").unwrap());
        (t, x, y, a)
    }

    fn w(t: &SymbolTable, n: &str) -> IntPoly {
        t.weight_of(t.lookup(n).unwrap()).unwrap()
    }

    #[test]
    fn add_cancels_to_zero() {
        let (_, x, _, _) = setup();
        let e = E::forest(x.clone()) + E::term(x, -IntPoly::one());
        assert!(e.is_zero());
    }

    #[test]
    fn scale_unit() {
        let (t, _, _, _) = setup();
        let e = E::one().scale(&w(&t, "a"));
        assert_eq!(e, E::scalar(w(&t, "a")));
    }

    #[test]
    fn leaf_plus_weight_has_two_terms() {
        let (t, x, _, _) = setup();
        let e = E::forest(x) + E::scalar(w(&t, "x"));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn product_of_tilde_leaves() {
        let (t, x, _, a) = setup();
        let (mx, la) = (w(&t, "x"), w(&t, "a"));
        let lhs = (E::forest(x.clone()) + E::scalar(mx.clone()))
            .mul(&(E::forest(a.clone()) + E::scalar(la.clone())));
        let expected = E::from_terms([
            (x.concat(&a), IntPoly::one()),
            (x.clone(), la.clone()),
            (a.clone(), mx.clone()),
            (Forest::unit(), &mx * &la),
        ]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn concatenation_is_noncommutative() {
        let (_, x, y, _) = setup();
        let (ex, ey) = (E::forest(x), E::forest(y));
        assert_ne!(ex.mul(&ey), ey.mul(&ex));
        assert_eq!(E::one().mul(&ex), ex);
    }

    #[test]
    fn tensor_unit_and_pure_products() {
        let (_, x, y, _) = setup();
        let s = T2::pure(x.clone(), y.clone()) + T2::pure(y.clone(), Forest::unit());
        assert_eq!(T2::one().mul(&s), s);
        let p = T2::pure(x.clone(), Forest::unit()).mul(&T2::pure(Forest::unit(), y.clone()));
        assert_eq!(p, T2::pure(x, y));
    }

    #[test]
    fn square_of_primitive_like_tensor() {
        // (x(x)1 + 1(x)x + mu 1(x)1)^2 expanded by hand
        let (t, x, _, _) = setup();
        let mx = w(&t, "x");
        let one = Forest::unit();
        let xx = x.concat(&x);
        let d = T2::pure(x.clone(), one.clone())
            + T2::pure(one.clone(), x.clone())
            + T2::term((one.clone(), one.clone()), mx.clone());
        let two = IntPoly::one() + IntPoly::one();
        let expected = T2::from_terms([
            ((xx.clone(), one.clone()), IntPoly::one()),
            ((x.clone(), x.clone()), two.clone()),
            ((one.clone(), xx.clone()), IntPoly::one()),
            ((x.clone(), one.clone()), &two * &mx),
            ((one.clone(), x.clone()), &two * &mx),
            ((one.clone(), one.clone()), &mx * &mx),
        ]);
        assert_eq!(d.pow(2), expected);
    }

    #[test]
    fn lift_linear_identity_and_graft() {
        let (t, x, _, _) = setup();
        let a = t.lookup("a").unwrap();
        let mx = w(&t, "x");
        let e = E::forest(x.clone()) + E::scalar(mx.clone());
        assert_eq!(e.lift_linear(|f| E::forest(f.clone())), e);
        let grafted = e.lift_linear(|f| E::forest(f.graft(a).unwrap()));
        let expected = E::forest(x.graft(a).unwrap()) + E::term(Forest::leaf(a), mx);
        assert_eq!(grafted, expected);
    }

    #[test]
    fn lift_linear_commutes_with_scaling() {
        let (t, x, y, a) = setup();
        let p = w(&t, "a") + IntPoly::one();
        let e = E::forest(x) + E::term(y.concat(&a), w(&t, "y"));
        let phi = |f: &Forest| E::forest(f.concat(f)) + E::scalar(IntPoly::from(num_bigint::BigInt::from(f.degree() as i64)));
        assert_eq!(e.scale(&p).lift_linear(phi), e.lift_linear(phi).scale(&p));
        let deg = e.lift_linear(|f| Scalar(IntPoly::from(num_bigint::BigInt::from(f.degree() as i64))));
        // 1*1 + mu_y*2
        assert_eq!(deg.0, IntPoly::one() + w(&t, "y").scale(&num_bigint::BigInt::from(2)));
    }
}
