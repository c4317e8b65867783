//! Coproduct, counit and antipode of the weighted forest Hopf algebra.
//!
//! The coproduct has two independent formulations: the depth recursion
//! through the weighted cocycle condition
//!
//! ```text
//! D(x)          = x (x) 1 + 1 (x) x + mu_x 1 (x) 1
//! D(B+_w(F))    = B+_w(F) (x) 1 + (id (x) B+_w) D(F) + la_w F (x) 1
//! D(T1 ... Tm)  = D(T1) ... D(Tm)
//! ```
//!
//! and the subforest sum `D(F) = sum_G G (x) tilde(F/G)`, where `tilde`
//! replaces every leaf `v` by `v + weight(v)`.

use std::collections::HashMap;

use crate::coefficients::{Decoration, Kind, SymbolTable};
use crate::error::{Error, Result};
use crate::forest::{Forest, Tree};
use crate::linear::{Element, Scalar, Tensor2};
use crate::scalar::{sign, Ring};
use crate::IntPoly;

/// The Hopf algebra structure for a fixed choice of weights.
///
/// Weights are indexed by decoration id; any commutative ring works.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra<C> {
    weights: Vec<C>,
}

impl HopfAlgebra<IntPoly> {
    /// Fully symbolic weights: `mu_x` and `la_w` are indeterminates.
    pub fn symbolic(symbols: &SymbolTable) -> Self {
        HopfAlgebra::from_weights(symbols, |d| IntPoly::var(d.var()))
    }
}

impl<C: Ring> HopfAlgebra<C> {
    pub fn from_weights(symbols: &SymbolTable, weight: impl Fn(Decoration) -> C) -> Self {
        HopfAlgebra {
            weights: symbols.decorations().map(weight).collect(),
        }
    }

    pub fn weight(&self, d: Decoration) -> &C {
        &self.weights[d.id() as usize]
    }

    /// `tilde(T)` for a single tree.
    fn tilde_tree(&self, t: &Tree) -> Element<C> {
        if t.is_leaf() {
            return Element::forest(Forest::from(t.clone()))
                + Element::scalar(self.weight(t.decoration()).clone());
        }
        let inner = t
            .children()
            .iter()
            .fold(Element::one(), |acc, c| acc.mul(&self.tilde_tree(c)));
        graft_element(&inner, t.decoration())
    }

    /// Replaces every leaf `v` of `f` by `v + weight(v)`, expanded
    /// multilinearly; `tilde(1) = 1`.
    pub fn leaf_tilde(&self, f: &Forest) -> Element<C> {
        f.trees()
            .iter()
            .fold(Element::one(), |acc, t| acc.mul(&self.tilde_tree(t)))
    }

    pub fn tilde(&self, a: &Element<C>) -> Element<C> {
        a.lift_linear(|f| self.leaf_tilde(f))
    }

    /// Recursive coproduct of a basis forest.
    pub fn coproduct_forest(&self, f: &Forest) -> Tensor2<C> {
        Memo::new(self).coproduct_forest(f)
    }

    /// Recursive coproduct, extended linearly.
    pub fn coproduct(&self, a: &Element<C>) -> Tensor2<C> {
        let mut memo = Memo::new(self);
        a.lift_linear(|f| memo.coproduct_forest(f))
    }

    /// `sum_G G (x) tilde(F/G)` over all subforests `G` of `f`.
    pub fn coproduct_cuts_forest(&self, f: &Forest) -> Tensor2<C> {
        let mut out = Tensor2::zero();
        for (sub, quotient) in f.subforest_pairs() {
            let right = self.leaf_tilde(&quotient);
            out = out + Tensor2::tensor(&Element::forest(sub), &right);
        }
        out
    }

    pub fn coproduct_cuts(&self, a: &Element<C>) -> Tensor2<C> {
        a.lift_linear(|f| self.coproduct_cuts_forest(f))
    }

    /// The unweighted cut coproduct `sum_G G (x) F/G`.
    pub fn classical_coproduct_forest(f: &Forest) -> Tensor2<C> {
        Tensor2::from_terms(
            f.subforest_pairs()
                .into_iter()
                .map(|pair| (pair, C::one())),
        )
    }

    /// Recursive counit of a basis forest.
    pub fn counit_forest(&self, f: &Forest) -> C {
        f.trees()
            .iter()
            .fold(C::one(), |acc, t| acc * self.counit_tree(t))
    }

    fn counit_tree(&self, t: &Tree) -> C {
        let d = t.decoration();
        match d.kind() {
            Kind::X => -self.weight(d).clone(),
            Kind::Omega => -self.weight(d).clone() * self.counit_forest(&t.children_forest()),
        }
    }

    pub fn counit(&self, a: &Element<C>) -> C {
        a.lift_linear(|f| Scalar(self.counit_forest(f))).0
    }

    /// `(-1)^|F|` times the product of all vertex weights.
    pub fn counit_closed(&self, f: &Forest) -> C {
        f.decorations()
            .fold(sign::<C>(f.degree()), |acc, d| acc * self.weight(d).clone())
    }

    /// `u(e(a)) = e(a) 1`.
    pub fn unit_counit(&self, a: &Element<C>) -> Element<C> {
        Element::scalar(self.counit(a))
    }

    /// The least `n` with `a` in the `n`-th filtration piece.
    pub fn filtration_degree(a: &Element<C>) -> Result<usize> {
        a.max_degree().ok_or(Error::ZeroElement)
    }

    /// `m (phi (x) psi) D(a)`.
    pub fn convolve(
        &self,
        phi: &dyn Fn(&Element<C>) -> Element<C>,
        psi: &dyn Fn(&Element<C>) -> Element<C>,
        a: &Element<C>,
    ) -> Element<C> {
        self.coproduct(a).lift_linear(|(l, r)| {
            phi(&Element::forest(l.clone())).mul(&psi(&Element::forest(r.clone())))
        })
    }

    /// The antipode as the geometric series `sum_k (u e - id)^{*k}`,
    /// truncated at the degree of each basis forest.
    pub fn antipode(&self, a: &Element<C>) -> Element<C> {
        let mut memo = Memo::new(self);
        a.lift_linear(|f| memo.antipode_forest(f))
    }

    pub fn antipode_forest(&self, f: &Forest) -> Element<C> {
        Memo::new(self).antipode_forest(f)
    }

    /// `m (S (x) id) D(a)` and `m (id (x) S) D(a)`.
    pub fn antipode_sides(&self, a: &Element<C>) -> (Element<C>, Element<C>) {
        let mut memo = Memo::new(self);
        memo.antipode_sides(a)
    }
}

/// `B+_w` extended linearly.
pub fn graft_element<C: Ring>(a: &Element<C>, omega: Decoration) -> Element<C> {
    a.map_basis(|f| Forest::from(Tree::node_unchecked(omega, f.trees().to_vec())))
}

/// `(id (x) B+_w)`.
pub fn graft_right<C: Ring>(t: &Tensor2<C>, omega: Decoration) -> Tensor2<C> {
    t.map_basis(|(l, r)| {
        (
            l.clone(),
            Forest::from(Tree::node_unchecked(omega, r.trees().to_vec())),
        )
    })
}

/// Call-local memo tables for repeated coproduct and antipode evaluation.
///
/// Holding one `Memo` across many forests shares subtree coproducts and
/// convolution powers between them.
pub struct Memo<'h, C> {
    hopf: &'h HopfAlgebra<C>,
    trees: HashMap<Tree, Tensor2<C>>,
    powers: HashMap<(usize, Forest), Element<C>>,
}

impl<'h, C: Ring> Memo<'h, C> {
    pub fn new(hopf: &'h HopfAlgebra<C>) -> Self {
        Memo {
            hopf,
            trees: HashMap::new(),
            powers: HashMap::new(),
        }
    }

    pub fn coproduct_forest(&mut self, f: &Forest) -> Tensor2<C> {
        f.trees()
            .iter()
            .fold(Tensor2::one(), |acc, t| acc.mul(&self.coproduct_tree(t)))
    }

    pub fn coproduct(&mut self, a: &Element<C>) -> Tensor2<C> {
        let mut out = Tensor2::zero();
        for (f, c) in a.terms() {
            out.add_scaled(c, &self.coproduct_forest(f));
        }
        out
    }

    fn coproduct_tree(&mut self, t: &Tree) -> Tensor2<C> {
        if let Some(hit) = self.trees.get(t) {
            return hit.clone();
        }
        let d = t.decoration();
        let w = self.hopf.weight(d).clone();
        let one = Forest::unit();
        let whole = Forest::from(t.clone());
        let result = match d.kind() {
            Kind::X => {
                Tensor2::pure(whole.clone(), one.clone())
                    + Tensor2::pure(one.clone(), whole)
                    + Tensor2::term((one.clone(), one), w)
            }
            Kind::Omega => {
                let below = t.children_forest();
                let inner = self.coproduct_forest(&below);
                Tensor2::pure(whole, one.clone())
                    + graft_right(&inner, d)
                    + Tensor2::term((below, one), w)
            }
        };
        self.trees.insert(t.clone(), result.clone());
        result
    }

    /// `(u e - id)` on a basis forest.
    fn reduced_identity(&self, f: &Forest) -> Element<C> {
        Element::scalar(self.hopf.counit_forest(f)) - Element::forest(f.clone())
    }

    /// `(u e - id)^{*k}` on a basis forest.
    fn convolution_power(&mut self, k: usize, f: &Forest) -> Element<C> {
        if k == 0 {
            return Element::scalar(self.hopf.counit_forest(f));
        }
        if k == 1 {
            return self.reduced_identity(f);
        }
        // every factor kills 1, so the k-th power vanishes below degree k
        if f.degree() < k {
            return Element::zero();
        }
        let key = (k, f.clone());
        if let Some(hit) = self.powers.get(&key) {
            return hit.clone();
        }
        let delta = self.coproduct_forest(f);
        let mut out = Element::zero();
        for ((l, r), c) in delta.terms() {
            if r.is_unit() {
                continue;
            }
            let left = self.convolution_power(k - 1, l);
            if left.is_zero() {
                continue;
            }
            let right = self.reduced_identity(r);
            out.add_scaled(c, &left.mul(&right));
        }
        self.powers.insert(key, out.clone());
        out
    }

    pub fn antipode_forest(&mut self, f: &Forest) -> Element<C> {
        let mut out = Element::zero();
        for k in 0..=f.degree() {
            out = out + self.convolution_power(k, f);
        }
        out
    }

    pub fn antipode(&mut self, a: &Element<C>) -> Element<C> {
        let mut out = Element::zero();
        for (f, c) in a.terms() {
            out.add_scaled(c, &self.antipode_forest(f));
        }
        out
    }

    /// `(m (S (x) id) D(a), m (id (x) S) D(a))`.
    pub fn antipode_sides(&mut self, a: &Element<C>) -> (Element<C>, Element<C>) {
        let delta = self.coproduct(a);
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((l, r), c) in delta.terms() {
            let sl = self.antipode_forest(l);
            left.add_scaled(c, &sl.mul(&Element::forest(r.clone())));
            let sr = self.antipode_forest(r);
            right.add_scaled(c, &Element::forest(l.clone()).mul(&sr));
        }
        (left, right)
    }
}
