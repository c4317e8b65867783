//! Omega-operated algebras and the evaluation of forests in them.
//!
//! A target is a bundle of functions: unit, product, one operator per
//! Omega label and images of the X generators. [`evaluate`] is the
//! structural fold that sends `1` to the unit, `x` to its image, `B+_w(F)`
//! to `P_w(evaluate(F))` and concatenation to the product.

use crate::checks::LawReport;
use crate::coefficients::{Decoration, Kind, SymbolTable};
use crate::error::{Error, Result};
use crate::forest::{Forest, Tree};
use crate::hopf::{graft_element, HopfAlgebra};
use crate::linear::{Element, Tensor2};
use crate::scalar::Ring;
use crate::text::format_forest;

/// A boxed binary operation.
pub type BinaryFn<'a, L, R, Out> = Box<dyn Fn(&L, &R) -> Out + 'a>;
/// A boxed map indexed by a decoration.
pub type LabelledFn<'a, A, Out> = Box<dyn Fn(Decoration, &A) -> Out + 'a>;
/// A boxed `(id (x) g)`.
pub type MapRightFn<'a, A, T> = Box<dyn Fn(&T, &dyn Fn(&A) -> A) -> T + 'a>;

pub struct OperatedTarget<'a, A> {
    pub unit: A,
    pub mul: BinaryFn<'a, A, A, A>,
    /// `P_w`; `None` when the target has no operator for `w`.
    pub op: LabelledFn<'a, A, Option<A>>,
    /// Generator images; `None` when `x` has no image.
    pub gen: Box<dyn Fn(Decoration) -> Option<A> + 'a>,
}

/// An operated target that is also a bialgebra over `C`, with tensors `T`.
pub struct OperatedBialgebraTarget<'a, A, T, C> {
    pub algebra: OperatedTarget<'a, A>,
    pub add: BinaryFn<'a, A, A, A>,
    pub scale: BinaryFn<'a, C, A, A>,
    pub cop: Box<dyn Fn(&A) -> T + 'a>,
    pub cou: Box<dyn Fn(&A) -> C + 'a>,
    /// `a (x) b`.
    pub pair: BinaryFn<'a, A, A, T>,
    pub tensor_add: BinaryFn<'a, T, T, T>,
    pub tensor_scale: BinaryFn<'a, C, T, T>,
    /// `(id (x) g)`.
    pub map_right: MapRightFn<'a, A, T>,
    /// `la_w` of each Omega label, used by the cocycle law.
    pub weight: Box<dyn Fn(Decoration) -> C + 'a>,
}

fn eval_tree<A: Clone>(t: &Tree, target: &OperatedTarget<A>, symbols: &SymbolTable) -> Result<A> {
    let d = t.decoration();
    match d.kind() {
        Kind::X if t.is_leaf() => {
            (target.gen)(d).ok_or_else(|| Error::MissingGenerator(symbols.name(d).to_string()))
        }
        Kind::X => Err(Error::NotOmega(symbols.name(d).to_string())),
        Kind::Omega => {
            let inner = evaluate(&t.children_forest(), target, symbols)?;
            (target.op)(d, &inner).ok_or_else(|| Error::MissingOperator(symbols.name(d).to_string()))
        }
    }
}

/// The operated-algebra homomorphism extending the generator images.
pub fn evaluate<A: Clone>(f: &Forest, target: &OperatedTarget<A>, symbols: &SymbolTable) -> Result<A> {
    let mut trees = f.trees().iter();
    let mut acc = match trees.next() {
        None => return Ok(target.unit.clone()),
        Some(t) => eval_tree(t, target, symbols)?,
    };
    for t in trees {
        acc = (target.mul)(&acc, &eval_tree(t, target, symbols)?);
    }
    Ok(acc)
}

/// Linear extension of [`evaluate`] into a bialgebra target.
pub fn evaluate_element<A: Clone, T, C: Ring>(
    e: &Element<C>,
    target: &OperatedBialgebraTarget<A, T, C>,
    symbols: &SymbolTable,
) -> Result<A> {
    let zero = (target.scale)(&C::zero(), &target.algebra.unit);
    let mut acc = zero;
    for (f, c) in e.terms() {
        let v = evaluate(f, &target.algebra, symbols)?;
        acc = (target.add)(&acc, &(target.scale)(c, &v));
    }
    Ok(acc)
}

/// `(phi (x) phi)` of a pair tensor, landing in the target's tensors.
fn evaluate_tensor<A: Clone, T, C: Ring>(
    t: &Tensor2<C>,
    target: &OperatedBialgebraTarget<A, T, C>,
    symbols: &SymbolTable,
) -> Result<T> {
    let u = &target.algebra.unit;
    let mut acc = (target.tensor_scale)(&C::zero(), &(target.pair)(u, u));
    for ((l, r), c) in t.terms() {
        let l = evaluate(l, &target.algebra, symbols)?;
        let r = evaluate(r, &target.algebra, symbols)?;
        acc = (target.tensor_add)(&acc, &(target.tensor_scale)(c, &(target.pair)(&l, &r)));
    }
    Ok(acc)
}

/// Checks that `map` is an Omega-operated algebra homomorphism into the
/// target on the given forests: `map(FG) = map(F) map(G)` for pairs whose
/// total degree stays within the largest supplied degree,
/// `map(B+_w F) = P_w(map F)`, and `map(1)` is the unit.
pub fn check_homomorphism<A: Clone + PartialEq>(
    target: &OperatedTarget<A>,
    map: &dyn Fn(&Forest) -> Result<A>,
    forests: &[Forest],
    symbols: &SymbolTable,
) -> LawReport {
    let mut report = LawReport::new("operated homomorphism");
    let show = |f: &Forest| format_forest(f, symbols);
    let bound = forests.iter().map(Forest::degree).max().unwrap_or(0);
    report.record(
        map(&Forest::unit()).ok() == Some(target.unit.clone()),
        || "image of 1 is not the unit".to_string(),
    );
    for f in forests {
        let Ok(image) = map(f) else {
            report.record(false, || format!("cannot map {}", show(f)));
            continue;
        };
        for g in forests.iter().filter(|g| f.degree() + g.degree() <= bound) {
            let prod = map(g).map(|ig| (target.mul)(&image, &ig));
            report.record(map(&f.concat(g)).ok() == prod.ok(), || {
                format!("product of ({}) and ({})", show(f), show(g))
            });
        }
        for w in symbols.omega_labels() {
            let grafted = f.graft(w).and_then(|g| map(&g));
            report.record(
                grafted.ok() == (target.op)(w, &image),
                || format!("operator {} on ({})", symbols.name(w), show(f)),
            );
        }
    }
    report
}

/// [`check_homomorphism`] for the evaluation fold itself; this exercises
/// associativity and unitality of the target product on the images used.
pub fn check_evaluation<A: Clone + PartialEq>(
    target: &OperatedTarget<A>,
    forests: &[Forest],
    symbols: &SymbolTable,
) -> LawReport {
    check_homomorphism(target, &|f| evaluate(f, target, symbols), forests, symbols)
}

/// Checks that every generator image is weighted-primitive:
/// `D(f(x)) = f(x) (x) 1 + mu_x 1 (x) 1 + 1 (x) f(x)`, with `mu_x` the
/// weight of `x` in the source.
pub fn validate_generators<A: Clone, T: PartialEq, C: Ring>(
    target: &OperatedBialgebraTarget<A, T, C>,
    mu: &dyn Fn(Decoration) -> C,
    symbols: &SymbolTable,
) -> Result<()> {
    let u = &target.algebra.unit;
    for x in symbols.x_labels() {
        let name = || symbols.name(x).to_string();
        let image = (target.algebra.gen)(x).ok_or_else(|| Error::MissingGenerator(name()))?;
        let expected = (target.tensor_add)(
            &(target.tensor_add)(&(target.pair)(&image, u), &(target.pair)(u, &image)),
            &(target.tensor_scale)(&mu(x), &(target.pair)(u, u)),
        );
        if (target.cop)(&image) != expected {
            return Err(Error::NotPrimitive(name()));
        }
    }
    Ok(())
}

/// Checks the weighted cocycle identity
/// `D P_w(h) = P_w(h) (x) 1 + la_w h (x) 1 + (id (x) P_w) D(h)` and the
/// derived law `e(P_w h) = -la_w e(h)` for every Omega label.
pub fn check_cocycle_target<A: Clone, T: PartialEq, C: Ring>(
    target: &OperatedBialgebraTarget<A, T, C>,
    elems: &[A],
    describe: &dyn Fn(&A) -> String,
    symbols: &SymbolTable,
) -> LawReport {
    let mut report = LawReport::new("cocycle (target)");
    let u = &target.algebra.unit;
    for h in elems {
        for w in symbols.omega_labels() {
            let Some(ph) = (target.algebra.op)(w, h) else {
                report.record(false, || format!("no operator {}", symbols.name(w)));
                continue;
            };
            let lam = (target.weight)(w);
            let op_w = |a: &A| (target.algebra.op)(w, a).expect("operator checked above");
            let rhs = (target.tensor_add)(
                &(target.tensor_add)(
                    &(target.pair)(&ph, u),
                    &(target.tensor_scale)(&lam, &(target.pair)(h, u)),
                ),
                &(target.map_right)(&(target.cop)(h), &op_w),
            );
            report.record((target.cop)(&ph) == rhs, || {
                format!("cocycle {} on {}", symbols.name(w), describe(h))
            });
            report.record(
                (target.cou)(&ph) == -(lam * (target.cou)(h)),
                || format!("counit of {} on {}", symbols.name(w), describe(h)),
            );
        }
    }
    report
}

/// Checks that evaluation into a bialgebra target commutes with the
/// coproduct and counit of `hopf`. The generator images are validated
/// first.
pub fn check_bialgebra_homomorphism<A: Clone + PartialEq, T: PartialEq, C: Ring>(
    target: &OperatedBialgebraTarget<A, T, C>,
    hopf: &HopfAlgebra<C>,
    forests: &[Forest],
    symbols: &SymbolTable,
) -> Result<LawReport> {
    validate_generators(target, &|x| hopf.weight(x).clone(), symbols)?;
    let mut report = check_evaluation(&target.algebra, forests, symbols);
    report.law = "operated bialgebra homomorphism".to_string();
    for f in forests {
        let image = evaluate(f, &target.algebra, symbols)?;
        let pushed = evaluate_tensor(&hopf.coproduct_forest(f), target, symbols)?;
        report.record((target.cop)(&image) == pushed, || {
            format!("coproduct of {}", format_forest(f, symbols))
        });
        report.record((target.cou)(&image) == hopf.counit_forest(f), || {
            format!("counit of {}", format_forest(f, symbols))
        });
    }
    Ok(report)
}

/// The forest algebra itself with generators `x -> rename(x)` and
/// operators `B+_w`.
pub fn forest_target<'a, C: Ring + 'a>(
    rename: impl Fn(Decoration) -> Decoration + 'a,
) -> OperatedTarget<'a, Element<C>> {
    OperatedTarget {
        unit: Element::one(),
        mul: Box::new(|a: &Element<C>, b: &Element<C>| a.mul(b)),
        op: Box::new(|w, a| w.is_omega().then(|| graft_element(a, w))),
        gen: Box::new(move |x| {
            let y = rename(x);
            (x.kind() == Kind::X && y.kind() == Kind::X).then(|| Element::forest(Forest::leaf(y)))
        }),
    }
}

/// The forest Hopf algebra as a bialgebra target, using `hopf` for the
/// coproduct, counit and weights.
pub fn forest_bialgebra_target<'a, C: Ring + 'a>(
    hopf: &'a HopfAlgebra<C>,
    rename: impl Fn(Decoration) -> Decoration + 'a,
) -> OperatedBialgebraTarget<'a, Element<C>, Tensor2<C>, C> {
    OperatedBialgebraTarget {
        algebra: forest_target(rename),
        add: Box::new(|a, b| a + b),
        scale: Box::new(|c, a| a.scale(c)),
        cop: Box::new(move |a| hopf.coproduct(a)),
        cou: Box::new(move |a| hopf.counit(a)),
        pair: Box::new(|a, b| Tensor2::tensor(a, b)),
        tensor_add: Box::new(|s, t| s + t),
        tensor_scale: Box::new(|c, t| t.scale(c)),
        map_right: Box::new(|t, g| {
            t.lift_linear(|(l, r)| {
                Tensor2::tensor(&Element::forest(l.clone()), &g(&Element::forest(r.clone())))
            })
        }),
        weight: Box::new(move |d| hopf.weight(d).clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::forests_up_to;
    use crate::text::parse_forest;
    use crate::{IntPoly, SymElement, SymHopf};

    fn table() -> SymbolTable {
        SymbolTable::new(["x", "y"], ["a", "b"]).unwrap()
    }

    #[test]
    fn self_target_evaluates_to_identity() {
        let t = table();
        let target = forest_target::<IntPoly>(|d| d);
        for f in forests_up_to(3, &t) {
            assert_eq!(evaluate(&f, &target, &t).unwrap(), SymElement::forest(f.clone()));
        }
    }

    #[test]
    fn renaming_target_renames_leaves() {
        let t = table();
        let (x, y) = (t.lookup("x").unwrap(), t.lookup("y").unwrap());
        let target = forest_target::<IntPoly>(move |d| if d == x { y } else { d });
        let f = parse_forest("a[x b[x y]] x", &t).unwrap();
        let g = parse_forest("a[y b[y y]] y", &t).unwrap();
        assert_eq!(evaluate(&f, &target, &t).unwrap(), SymElement::forest(g));
    }

    #[test]
    fn evaluates_into_univariate_polynomials() {
        // carrier: coefficient vectors in t; gen(x) = t, P_a(p) = t p
        let t = table();
        let shift = |p: &Vec<i64>| {
            let mut q = vec![0];
            q.extend(p.iter().copied());
            q
        };
        let target = OperatedTarget {
            unit: vec![1i64],
            mul: Box::new(|p: &Vec<i64>, q: &Vec<i64>| {
                let mut out = vec![0; p.len() + q.len() - 1];
                for (i, a) in p.iter().enumerate() {
                    for (j, b) in q.iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                out
            }),
            op: Box::new(move |_, p| Some(shift(p))),
            gen: Box::new(|d| (d.kind() == Kind::X).then(|| vec![0, 1])),
        };
        let f = parse_forest("a[x x]", &t).unwrap();
        assert_eq!(evaluate(&f, &target, &t).unwrap(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn missing_generator_is_named() {
        let t = table();
        let target = OperatedTarget {
            unit: 0u8,
            mul: Box::new(|a: &u8, b: &u8| a + b),
            op: Box::new(|_, a| Some(*a)),
            gen: Box::new(|_| None),
        };
        let f = parse_forest("a[y]", &t).unwrap();
        assert_eq!(evaluate(&f, &target, &t), Err(Error::MissingGenerator("y".into())));
    }

    #[test]
    fn homomorphism_checks() {
        let t = table();
        let forests: Vec<Forest> = forests_up_to(2, &t).collect();
        let target = forest_target::<IntPoly>(|d| d);
        assert!(check_evaluation(&target, &forests, &t).is_ok());

        // operator that ignores its label: the identity map is no longer a
        // homomorphism into it
        let a = t.lookup("a").unwrap();
        let broken = OperatedTarget {
            op: Box::new(move |_, e: &SymElement| Some(graft_element(e, a))),
            ..forest_target::<IntPoly>(|d| d)
        };
        let identity = |f: &Forest| Ok(SymElement::forest(f.clone()));
        let report = check_homomorphism(&broken, &identity, &forests, &t);
        assert!(!report.is_ok());
    }

    #[test]
    fn cocycle_through_target_interface() {
        let t = table();
        let hopf = SymHopf::symbolic(&t);
        let target = forest_bialgebra_target(&hopf, |d| d);
        let elems: Vec<SymElement> = forests_up_to(2, &t).map(SymElement::forest).collect();
        let show = |e: &SymElement| crate::text::format_element(e, &t);
        assert!(check_cocycle_target(&target, &elems, &show, &t).is_ok());

        // coproduct without the la_w term, checked against symbolic la_w
        let flat = HopfAlgebra::from_weights(&t, |d| match d.kind() {
            Kind::Omega => IntPoly::from(num_bigint::BigInt::from(0)),
            Kind::X => IntPoly::var(d.var()),
        });
        let mut broken = forest_bialgebra_target(&flat, |d| d);
        broken.weight = Box::new(|d| IntPoly::var(d.var()));
        let report = check_cocycle_target(&broken, &[SymElement::one()], &show, &t);
        assert!(!report.is_ok());
    }

    #[test]
    fn cocycle_on_unit_gives_the_leaf_coproduct() {
        let t = table();
        let hopf = SymHopf::symbolic(&t);
        let target = forest_bialgebra_target(&hopf, |d| d);
        let a = t.lookup("a").unwrap();
        let leaf = (target.algebra.op)(a, &SymElement::one()).unwrap();
        let expected = Tensor2::pure(Forest::leaf(a), Forest::unit())
            + Tensor2::pure(Forest::unit(), Forest::leaf(a))
            + Tensor2::term((Forest::unit(), Forest::unit()), IntPoly::var(a.var()));
        assert_eq!((target.cop)(&leaf), expected);
    }

    #[test]
    fn self_target_is_identity_at_degree_four() {
        let t = SymbolTable::new(["x"], ["a", "b"]).unwrap();
        let target = forest_target::<IntPoly>(|d| d);
        for f in forests_up_to(4, &t) {
            assert_eq!(evaluate(&f, &target, &t).unwrap(), SymElement::forest(f.clone()));
        }
    }

    #[test]
    fn rejects_non_primitive_generators() {
        let t = table();
        let (x, y) = (t.lookup("x").unwrap(), t.lookup("y").unwrap());
        let hopf = SymHopf::symbolic(&t);
        // x -> y without transporting mu_x
        let target = forest_bialgebra_target(&hopf, move |d| if d == x { y } else { d });
        assert_eq!(
            validate_generators(&target, &|d| hopf.weight(d).clone(), &t),
            Err(Error::NotPrimitive("x".into()))
        );
    }
}
