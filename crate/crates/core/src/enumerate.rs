//! Exhaustive generation of decorated planar forests by degree.

use crate::coefficients::{Decoration, SymbolTable};
use crate::forest::{Forest, Tree};

/// An undecorated planar rooted tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeTree(pub Vec<ShapeTree>);

/// An undecorated planar rooted forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(pub Vec<ShapeTree>);

impl ShapeTree {
    pub fn size(&self) -> usize {
        1 + self.0.iter().map(ShapeTree::size).sum::<usize>()
    }

    pub fn leaves(&self) -> usize {
        if self.0.is_empty() {
            1
        } else {
            self.0.iter().map(ShapeTree::leaves).sum()
        }
    }
}

impl Shape {
    pub fn size(&self) -> usize {
        self.0.iter().map(ShapeTree::size).sum()
    }

    pub fn leaves(&self) -> usize {
        self.0.iter().map(ShapeTree::leaves).sum()
    }

    pub fn internal(&self) -> usize {
        self.size() - self.leaves()
    }

    /// The shape of a decorated forest.
    pub fn of(f: &Forest) -> Shape {
        fn tree(t: &Tree) -> ShapeTree {
            ShapeTree(t.children().iter().map(tree).collect())
        }
        Shape(f.trees().iter().map(tree).collect())
    }
}

/// Planar forests and trees of every size up to a bound.
///
/// A forest of `n` vertices is a first tree of size `k` followed by a forest
/// of size `n - k`; a tree of size `k` is a root over a forest of size
/// `k - 1`.
struct ShapeTable {
    trees: Vec<Vec<ShapeTree>>,
    forests: Vec<Vec<Vec<ShapeTree>>>,
}

impl ShapeTable {
    fn build(n: usize) -> Self {
        let mut table = ShapeTable {
            trees: vec![Vec::new()],
            forests: vec![vec![Vec::new()]],
        };
        for size in 1..=n {
            let trees: Vec<ShapeTree> = table.forests[size - 1]
                .iter()
                .map(|f| ShapeTree(f.clone()))
                .collect();
            table.trees.push(trees);
            let mut forests = Vec::new();
            for first in 1..=size {
                for t in &table.trees[first] {
                    for rest in &table.forests[size - first] {
                        let mut f = Vec::with_capacity(rest.len() + 1);
                        f.push(t.clone());
                        f.extend(rest.iter().cloned());
                        forests.push(f);
                    }
                }
            }
            table.forests.push(forests);
        }
        table
    }
}

/// Every planar rooted forest with exactly `n` vertices, each once.
pub fn shapes(n: usize) -> Vec<Shape> {
    ShapeTable::build(n).forests.pop().unwrap().into_iter().map(Shape).collect()
}

fn decorate_tree(t: &ShapeTree, omega: &[Decoration], all: &[Decoration]) -> Vec<Tree> {
    if t.0.is_empty() {
        return all.iter().map(|&d| Tree::leaf(d)).collect();
    }
    let children = decorate_trees(&t.0, omega, all);
    let mut out = Vec::with_capacity(omega.len() * children.len());
    for &w in omega {
        for c in &children {
            out.push(Tree::node_unchecked(w, c.clone()));
        }
    }
    out
}

fn decorate_trees(ts: &[ShapeTree], omega: &[Decoration], all: &[Decoration]) -> Vec<Vec<Tree>> {
    let mut acc: Vec<Vec<Tree>> = vec![Vec::new()];
    for t in ts {
        let options = decorate_tree(t, omega, all);
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in &options {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// All admissible decorations of a shape: Omega labels on internal
/// vertices, any label on leaves.
pub fn decorate(s: &Shape, symbols: &SymbolTable) -> Vec<Forest> {
    let omega: Vec<Decoration> = symbols.omega_labels().collect();
    let all: Vec<Decoration> = symbols.decorations().collect();
    decorate_trees(&s.0, &omega, &all)
        .into_iter()
        .map(Forest::from_trees)
        .collect()
}

/// All decorated forests of degree exactly `n`, in canonical order.
pub fn forests_of_degree(n: usize, symbols: &SymbolTable) -> Vec<Forest> {
    let mut out: Vec<Forest> = shapes(n).iter().flat_map(|s| decorate(s, symbols)).collect();
    out.sort();
    out
}

/// All decorated forests of degree at most `n`, by degree and then
/// canonical order.
pub fn forests_up_to(n: usize, symbols: &SymbolTable) -> impl Iterator<Item = Forest> + '_ {
    (0..=n).flat_map(move |d| forests_of_degree(d, symbols))
}

/// `sum over shapes of |Omega|^internal * (|X| + |Omega|)^leaves`.
pub fn decorated_count(n: usize, x_count: usize, omega_count: usize) -> u128 {
    shapes(n)
        .iter()
        .map(|s| {
            (omega_count as u128).pow(s.internal() as u32)
                * ((x_count + omega_count) as u128).pow(s.leaves() as u32)
        })
        .sum()
}
