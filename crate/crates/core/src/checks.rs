//! Exhaustive law checks over enumerated forests.
//!
//! Every check walks its inputs in (degree, canonical) order and keeps the
//! first failure, so a reported counterexample is the smallest one.

use std::cell::RefCell;
use std::fmt;

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::coefficients::{Decoration, Kind, Specialization, SymbolTable};
use crate::enumerate::forests_up_to;
use crate::forest::Forest;
use crate::hopf::{graft_right, HopfAlgebra, Memo};
use crate::linear::{Element, Tensor2, Tensor3};
use crate::operated::{check_bialgebra_homomorphism, forest_bialgebra_target};
use crate::scalar::Ring;
use crate::text::format_forest;
use crate::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub checked: usize,
    pub violations: usize,
    pub counterexample: Option<String>,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            checked: 0,
            violations: 0,
            counterexample: None,
        }
    }

    /// Records one instance; `describe` runs only for the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: ok ({} checked)", self.law, self.checked),
            Some(c) => write!(
                f,
                "{}: FAILED ({} of {} checked), smallest counterexample: {}",
                self.law, self.violations, self.checked, c
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Coassociativity,
    Counit,
    Bialgebra,
    Cocycle,
    Antipode,
    Equivalence,
    Homomorphism,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "all" => Suite::All,
            "coassoc" => Suite::Coassociativity,
            "counit" => Suite::Counit,
            "bialgebra" => Suite::Bialgebra,
            "cocycle" => Suite::Cocycle,
            "antipode" => Suite::Antipode,
            "equivalence" => Suite::Equivalence,
            "homomorphism" => Suite::Homomorphism,
            _ => return None,
        })
    }
}

/// `(D (x) id) D(F) = (id (x) D) D(F)`.
pub fn coassociativity<C: Ring>(hopf: &HopfAlgebra<C>, forests: &[Forest], symbols: &SymbolTable) -> LawReport {
    let memo = RefCell::new(Memo::new(hopf));
    let d = |f: &Forest| memo.borrow_mut().coproduct_forest(f);
    let mut report = LawReport::new("coassociativity");
    for f in forests {
        let delta = d(f);
        let ok = Tensor3::expand_left(&delta, d) == Tensor3::expand_right(&delta, d);
        report.record(ok, || format_forest(f, symbols));
    }
    report
}

/// `(e (x) id) D(F) = F = (id (x) e) D(F)`.
pub fn counit_laws<C: Ring>(hopf: &HopfAlgebra<C>, forests: &[Forest], symbols: &SymbolTable) -> LawReport {
    let mut memo = Memo::new(hopf);
    let mut report = LawReport::new("counit laws");
    for f in forests {
        let delta = memo.coproduct_forest(f);
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((l, r), c) in delta.terms() {
            left.add_term(r.clone(), c.clone() * hopf.counit_forest(l));
            right.add_term(l.clone(), c.clone() * hopf.counit_forest(r));
        }
        let expected = Element::forest(f.clone());
        report.record(left == expected, || format!("left, {}", format_forest(f, symbols)));
        report.record(right == expected, || format!("right, {}", format_forest(f, symbols)));
    }
    report
}

/// `D(FG) = D(F) D(G)` and `e(FG) = e(F) e(G)` for pairs of total degree
/// at most `max_degree`.
pub fn multiplicativity<C: Ring>(
    hopf: &HopfAlgebra<C>,
    forests: &[Forest],
    max_degree: usize,
    symbols: &SymbolTable,
) -> LawReport {
    let mut memo = Memo::new(hopf);
    let mut report = LawReport::new("multiplicativity");
    let show = |f: &Forest, g: &Forest| {
        format!("({}) * ({})", format_forest(f, symbols), format_forest(g, symbols))
    };
    for f in forests {
        let df = memo.coproduct_forest(f);
        for g in forests.iter().filter(|g| f.degree() + g.degree() <= max_degree) {
            let fg = f.concat(g);
            let ok = memo.coproduct_forest(&fg) == df.mul(&memo.coproduct_forest(g));
            report.record(ok, || format!("coproduct of {}", show(f, g)));
            let ok = hopf.counit_forest(&fg) == hopf.counit_forest(f) * hopf.counit_forest(g);
            report.record(ok, || format!("counit of {}", show(f, g)));
        }
    }
    report
}

/// The weighted cocycle identity for `B+_w` and `e(B+_w F) = -la_w e(F)`.
pub fn cocycle<C: Ring>(hopf: &HopfAlgebra<C>, forests: &[Forest], symbols: &SymbolTable) -> LawReport {
    let mut memo = Memo::new(hopf);
    let mut report = LawReport::new("weighted cocycle");
    for f in forests {
        let delta = memo.coproduct_forest(f);
        for w in symbols.omega_labels() {
            let grafted = f.graft(w).expect("omega label");
            let lam = hopf.weight(w).clone();
            let expected = Tensor2::pure(grafted.clone(), Forest::unit())
                + Tensor2::term((f.clone(), Forest::unit()), lam.clone())
                + graft_right(&delta, w);
            let show = || format!("{} on {}", symbols.name(w), format_forest(f, symbols));
            report.record(memo.coproduct_forest(&grafted) == expected, show);
            report.record(
                hopf.counit_forest(&grafted) == -(lam * hopf.counit_forest(f)),
                || format!("counit, {}", show()),
            );
        }
    }
    report
}

/// `m (S (x) id) D(F) = e(F) 1 = m (id (x) S) D(F)`.
pub fn antipode_axioms<C: Ring>(hopf: &HopfAlgebra<C>, forests: &[Forest], symbols: &SymbolTable) -> LawReport {
    let mut memo = Memo::new(hopf);
    let mut report = LawReport::new("antipode axioms");
    for f in forests {
        let expected = Element::scalar(hopf.counit_forest(f));
        let (left, right) = memo.antipode_sides(&Element::forest(f.clone()));
        report.record(left == expected, || format!("S * id, {}", format_forest(f, symbols)));
        report.record(right == expected, || format!("id * S, {}", format_forest(f, symbols)));
    }
    report
}

/// Recursive coproduct against the subforest sum.
pub fn coproduct_equivalence<C: Ring>(
    hopf: &HopfAlgebra<C>,
    forests: &[Forest],
    symbols: &SymbolTable,
) -> LawReport {
    let mut memo = Memo::new(hopf);
    let mut report = LawReport::new("coproduct formulations agree");
    for f in forests {
        let ok = memo.coproduct_forest(f) == hopf.coproduct_cuts_forest(f);
        report.record(ok, || format_forest(f, symbols));
    }
    report
}

/// Recursive counit against the closed product formula.
pub fn counit_equivalence<C: Ring>(hopf: &HopfAlgebra<C>, forests: &[Forest], symbols: &SymbolTable) -> LawReport {
    let mut report = LawReport::new("counit formulations agree");
    for f in forests {
        report.record(hopf.counit_forest(f) == hopf.counit_closed(f), || format_forest(f, symbols));
    }
    report
}

/// Every term `G (x) H` of `D(F)` has `|G| + |H| <= |F|`.
pub fn filtration<C: Ring>(hopf: &HopfAlgebra<C>, forests: &[Forest], symbols: &SymbolTable) -> LawReport {
    let mut memo = Memo::new(hopf);
    let mut report = LawReport::new("filtration");
    for f in forests {
        let delta = memo.coproduct_forest(f);
        let ok = delta.terms().all(|((l, r), _)| l.degree() + r.degree() <= f.degree());
        report.record(ok, || format_forest(f, symbols));
    }
    report
}

/// With every weight zero the coproduct is the classical cut coproduct.
pub fn zero_weight_degeneration<C: Ring>(forests: &[Forest], symbols: &SymbolTable) -> LawReport {
    let hopf = HopfAlgebra::<C>::from_weights(symbols, |_| C::zero());
    let mut memo = Memo::new(&hopf);
    let mut report = LawReport::new("zero-weight degeneration");
    for f in forests {
        let ok = memo.coproduct_forest(f) == HopfAlgebra::<C>::classical_coproduct_forest(f);
        report.record(ok, || format_forest(f, symbols));
    }
    report
}

/// `sum_{I + J = [m]} mu_{x_I} sum_{K + L = J} x_K (x) x_L` for a word of
/// X leaves, keeping the word order inside `x_K` and `x_L`.
pub fn bullet_word_coproduct<C: Ring>(hopf: &HopfAlgebra<C>, word: &[Decoration]) -> Tensor2<C> {
    let m = word.len();
    let mut out = Tensor2::zero();
    for code in 0..3usize.pow(m as u32) {
        let (mut c, mut left, mut right) = (C::one(), Vec::new(), Vec::new());
        let mut rest = code;
        for &x in word {
            match rest % 3 {
                0 => c = c * hopf.weight(x).clone(),
                1 => left.push(x),
                _ => right.push(x),
            }
            rest /= 3;
        }
        let side = |v: Vec<Decoration>| v.into_iter().map(Forest::leaf).fold(Forest::unit(), |a, b| a.concat(&b));
        out.add_term((side(left), side(right)), c);
    }
    out
}

/// [`bullet_word_coproduct`] against the coproduct for every word over
/// the X labels of length at most `max_len`.
pub fn bullet_words<C: Ring>(hopf: &HopfAlgebra<C>, max_len: usize, symbols: &SymbolTable) -> LawReport {
    let xs: Vec<Decoration> = symbols.x_labels().collect();
    let mut report = LawReport::new("bullet words");
    let mut words: Vec<Vec<Decoration>> = vec![Vec::new()];
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for word in &words {
            let f = word.iter().map(|&x| Forest::leaf(x)).fold(Forest::unit(), |a, b| a.concat(&b));
            report.record(hopf.coproduct_forest(&f) == bullet_word_coproduct(hopf, word), || {
                format_forest(&f, symbols)
            });
            for &x in &xs {
                let mut w = word.clone();
                w.push(x);
                next.push(w);
            }
        }
        words = next;
    }
    report
}

/// Evaluation with `x -> rename(x)` into the forest algebra whose X weights
/// are transported along the renaming, checked against `hopf`.
pub fn renaming_homomorphism<C: Ring>(
    hopf: &HopfAlgebra<C>,
    rename: &[(Decoration, Decoration)],
    forests: &[Forest],
    symbols: &SymbolTable,
) -> LawReport {
    let lookup = |d: Decoration| rename.iter().find(|(a, _)| *a == d).map_or(d, |(_, b)| *b);
    let preimage = |d: Decoration| rename.iter().find(|(_, b)| *b == d).map_or(d, |(a, _)| *a);
    let target_hopf = HopfAlgebra::from_weights(symbols, |d| match d.kind() {
        Kind::X => hopf.weight(preimage(d)).clone(),
        Kind::Omega => hopf.weight(d).clone(),
    });
    let target = forest_bialgebra_target(&target_hopf, lookup);
    match check_bialgebra_homomorphism(&target, hopf, forests, symbols) {
        Ok(report) => report,
        Err(e) => {
            let mut report = LawReport::new("operated bialgebra homomorphism");
            report.record(false, || e.to_string());
            report
        }
    }
}

/// The cyclic shift of the X labels, a permutation.
pub fn cyclic_renaming(symbols: &SymbolTable) -> Vec<(Decoration, Decoration)> {
    let xs: Vec<Decoration> = symbols.x_labels().collect();
    (0..xs.len()).map(|i| (xs[i], xs[(i + 1) % xs.len()])).collect()
}

/// Runs `suite` over all forests of degree at most `max_degree`.
pub fn run<C: Ring>(suite: Suite, hopf: &HopfAlgebra<C>, symbols: &SymbolTable, max_degree: usize) -> Vec<LawReport> {
    let forests: Vec<Forest> = forests_up_to(max_degree, symbols).collect();
    let below: Vec<Forest> = forests.iter().filter(|f| f.degree() < max_degree).cloned().collect();
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || matches!(suite, Suite::Coassociativity | Suite::Bialgebra) {
        out.push(coassociativity(hopf, &forests, symbols));
    }
    if all || matches!(suite, Suite::Counit | Suite::Bialgebra) {
        out.push(counit_laws(hopf, &forests, symbols));
    }
    if all || suite == Suite::Bialgebra {
        out.push(multiplicativity(hopf, &forests, max_degree, symbols));
    }
    if all || suite == Suite::Cocycle {
        out.push(cocycle(hopf, &below, symbols));
    }
    if all || suite == Suite::Antipode {
        out.push(antipode_axioms(hopf, &forests, symbols));
    }
    if all || suite == Suite::Equivalence {
        out.push(coproduct_equivalence(hopf, &forests, symbols));
        out.push(counit_equivalence(hopf, &forests, symbols));
    }
    if all || suite == Suite::Homomorphism {
        out.push(renaming_homomorphism(hopf, &cyclic_renaming(symbols), &forests, symbols));
    }
    if all {
        out.push(filtration(hopf, &forests, symbols));
        out.push(zero_weight_degeneration::<C>(&forests, symbols));
        out.push(bullet_words(hopf, max_degree, symbols));
    }
    out
}

/// Computing with symbolic weights and then specializing agrees with
/// computing over the specialized weights, for the coproduct, counit and
/// antipode.
pub fn specialization_commutes(
    spec: &Specialization,
    forests: &[Forest],
    symbols: &SymbolTable,
) -> LawReport {
    let symbolic = HopfAlgebra::<IntPoly>::symbolic(symbols);
    let numeric = HopfAlgebra::<BigRational>::from_weights(symbols, |d| spec.value(d));
    let value = |p: &IntPoly| spec.evaluate(p).expect("total specialization");
    let mut sym_memo = Memo::new(&symbolic);
    let mut num_memo = Memo::new(&numeric);
    let mut report = LawReport::new("specialization commutes");
    for f in forests {
        let show = |what: &str| format!("{} of {}", what, format_forest(f, symbols));
        let ok = sym_memo.coproduct_forest(f).map_coefficients(value) == num_memo.coproduct_forest(f);
        report.record(ok, || show("coproduct"));
        let ok = value(&symbolic.counit_forest(f)) == numeric.counit_forest(f);
        report.record(ok, || show("counit"));
        let ok = sym_memo.antipode_forest(f).map_coefficients(value) == num_memo.antipode_forest(f);
        report.record(ok, || show("antipode"));
    }
    report
}

/// Reruns `suite` with `count` seeded random rational weight assignments,
/// plus the specialization commutation check for each.
pub fn run_specialized(
    suite: Suite,
    symbols: &SymbolTable,
    max_degree: usize,
    count: usize,
    seed: u64,
) -> Vec<LawReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let forests: Vec<Forest> = forests_up_to(max_degree, symbols).collect();
    let mut out = Vec::new();
    for i in 0..count {
        let spec = Specialization::random(symbols, &mut rng);
        let hopf = HopfAlgebra::<BigRational>::from_weights(symbols, |d| spec.value(d));
        for mut report in run(suite, &hopf, symbols, max_degree) {
            report.law = format!("{} [specialization {}]", report.law, i + 1);
            out.push(report);
        }
        let mut report = specialization_commutes(&spec, &forests, symbols);
        report.law = format!("{} [specialization {}]", report.law, i + 1);
        out.push(report);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatHopf, SymHopf};

    fn table() -> SymbolTable {
        SymbolTable::new(["x"], ["a", "b"]).unwrap()
    }

    #[test]
    fn symbolic_suite_passes_at_degree_three() {
        let t = table();
        let hopf = SymHopf::symbolic(&t);
        for report in run(Suite::All, &hopf, &t, 3) {
            assert!(report.is_ok(), "{report}");
            assert!(report.checked > 0, "{report}");
        }
    }

    #[test]
    fn specialized_suite_passes() {
        let t = table();
        for report in run_specialized(Suite::All, &t, 2, 2, 7) {
            assert!(report.is_ok(), "{report}");
        }
    }

    #[test]
    fn wrong_weights_are_caught_with_smallest_counterexample() {
        // a coproduct computed with one weight but checked against another
        let t = table();
        let hopf = RatHopf::from_weights(&t, |_| crate::coefficients::rational(1, 1));
        let zero = HopfAlgebra::<BigRational>::from_weights(&t, |_| crate::coefficients::rational(0, 1));
        let forests: Vec<Forest> = forests_up_to(2, &t).collect();
        let mut report = LawReport::new("mismatch");
        for f in &forests {
            report.record(hopf.coproduct_forest(f) == zero.coproduct_forest(f), || {
                format_forest(f, &t)
            });
        }
        assert!(!report.is_ok());
        assert_eq!(report.counterexample.as_deref(), Some("a"));
    }

    #[test]
    fn cyclic_renaming_with_two_letters() {
        let t = SymbolTable::new(["x", "y"], ["a"]).unwrap();
        let hopf = SymHopf::symbolic(&t);
        let forests: Vec<Forest> = forests_up_to(3, &t).collect();
        let report = renaming_homomorphism(&hopf, &cyclic_renaming(&t), &forests, &t);
        assert!(report.is_ok(), "{report}");
    }

    #[test]
    fn report_display() {
        let mut r = LawReport::new("law");
        r.record(true, || unreachable!());
        assert_eq!(r.to_string(), "law: ok (1 checked)");
        r.record(false, || "x".into());
        r.record(false, || "y".into());
        assert_eq!(r.to_string(), "law: FAILED (2 of 3 checked), smallest counterexample: x");
    }
}
