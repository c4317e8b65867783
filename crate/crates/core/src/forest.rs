//! Decorated planar rooted trees and forests.
//!
//! Internal vertices carry Omega-kind labels, leaves carry labels of either
//! kind. A forest is an ordered sequence of trees; the empty forest is the
//! unit `1` of the concatenation monoid.

use std::cmp::Ordering;
use std::fmt;

use crate::coefficients::{Decoration, Kind};
use crate::error::{Error, Result};

/// Position of a vertex: index of its tree in the forest followed by child
/// indices from the root down.
pub type VertexPath = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    decoration: Decoration,
    children: Vec<Tree>,
    size: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Forest(Vec<Tree>);

/// An internal vertex decorated by an X-kind label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: VertexPath,
    pub decoration: Decoration,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X-kind internal vertex at {:?}", self.path)
    }
}

/// A subforest together with the antichain of vertices it is rooted at and
/// the quotient left after removing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subforest {
    pub roots: Vec<VertexPath>,
    pub sub: Forest,
    pub quotient: Forest,
}

impl Tree {
    /// The single-vertex tree.
    pub fn leaf(d: Decoration) -> Tree {
        Tree {
            decoration: d,
            children: Vec::new(),
            size: 1,
        }
    }

    /// Grafts the roots of `forest` onto a new root decorated `omega`.
    pub fn graft(forest: Forest, omega: Decoration) -> Result<Tree> {
        if !omega.is_omega() {
            return Err(Error::NotOmega(format!("#{}", omega.id())));
        }
        Ok(Tree::node_unchecked(omega, forest.0))
    }

    /// Builds a vertex without checking that an internal vertex is
    /// Omega-decorated; pair with [`Forest::validate`].
    pub fn node_unchecked(decoration: Decoration, children: Vec<Tree>) -> Tree {
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        Tree {
            decoration,
            children,
            size,
        }
    }

    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// The forest `F` with `self = B+(F)` (the unit for a leaf).
    pub fn children_forest(&self) -> Forest {
        Forest(self.children.clone())
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.size
    }

    /// Maximum number of Omega-decorated vertices on a root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self.decoration.kind() {
            Kind::X => 0,
            Kind::Omega => 1 + self.children.iter().map(Tree::depth).max().unwrap_or(0),
        }
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(Tree::leaf_count).sum()
        }
    }

    /// Pre-order stream of `(decoration, child count)`; determines the tree.
    pub fn preorder(&self) -> Preorder<'_> {
        Preorder {
            stack: vec![std::slice::from_ref(self).iter()],
        }
    }

    pub fn map_decorations(&self, f: &impl Fn(Decoration) -> Decoration) -> Tree {
        Tree::node_unchecked(
            f(self.decoration),
            self.children.iter().map(|c| c.map_decorations(f)).collect(),
        )
    }

    fn first_violation(&self, path: &mut VertexPath) -> Option<Violation> {
        if !self.is_leaf() && !self.decoration.is_omega() {
            return Some(Violation {
                path: path.clone(),
                decoration: self.decoration,
            });
        }
        for (i, c) in self.children.iter().enumerate() {
            path.push(i);
            let found = c.first_violation(path);
            path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn cuts(&self, path: &mut VertexPath) -> Vec<(Vec<VertexPath>, Vec<Tree>, Option<Tree>)> {
        // root not selected: combine independent choices in each child
        let mut partial: Vec<(Vec<VertexPath>, Vec<Tree>, Vec<Tree>)> =
            vec![(Vec::new(), Vec::new(), Vec::new())];
        for (i, child) in self.children.iter().enumerate() {
            path.push(i);
            let child_cuts = child.cuts(path);
            path.pop();
            let mut next = Vec::with_capacity(partial.len() * child_cuts.len());
            for (roots, sub, rest) in &partial {
                for (c_roots, c_sub, c_rest) in &child_cuts {
                    let mut roots = roots.clone();
                    roots.extend(c_roots.iter().cloned());
                    let mut sub = sub.clone();
                    sub.extend(c_sub.iter().cloned());
                    let mut rest = rest.clone();
                    rest.extend(c_rest.iter().cloned());
                    next.push((roots, sub, rest));
                }
            }
            partial = next;
        }
        let mut out: Vec<_> = partial
            .into_iter()
            .map(|(roots, sub, rest)| {
                (roots, sub, Some(Tree::node_unchecked(self.decoration, rest)))
            })
            .collect();
        out.push((vec![path.clone()], vec![self.clone()], None));
        out
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.preorder().cmp(other.preorder()))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Preorder<'a> {
    stack: Vec<std::slice::Iter<'a, Tree>>,
}

impl<'a> Iterator for Preorder<'a> {
    type Item = (Decoration, usize);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let top = self.stack.last_mut()?;
            match top.next() {
                Some(t) => {
                    self.stack.push(t.children.iter());
                    return Some((t.decoration, t.children.len()));
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

impl Forest {
    /// The empty forest `1`.
    pub fn unit() -> Forest {
        Forest(Vec::new())
    }

    pub fn from_trees(trees: Vec<Tree>) -> Forest {
        Forest(trees)
    }

    pub fn leaf(d: Decoration) -> Forest {
        Forest(vec![Tree::leaf(d)])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn trees(&self) -> &[Tree] {
        &self.0
    }

    pub fn into_trees(self) -> Vec<Tree> {
        self.0
    }

    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.0.len() + other.0.len());
        trees.extend(self.0.iter().cloned());
        trees.extend(other.0.iter().cloned());
        Forest(trees)
    }

    /// `B+_omega(self)` as a one-tree forest.
    pub fn graft(&self, omega: Decoration) -> Result<Forest> {
        Ok(Forest(vec![Tree::graft(self.clone(), omega)?]))
    }

    /// Number of vertices.
    pub fn degree(&self) -> usize {
        self.0.iter().map(Tree::degree).sum()
    }

    /// Number of trees; `0` for the unit.
    pub fn breadth(&self) -> usize {
        self.0.len()
    }

    pub fn depth(&self) -> usize {
        self.0.iter().map(Tree::depth).max().unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        self.0.iter().map(Tree::leaf_count).sum()
    }

    /// Decorations of all vertices, in pre-order.
    pub fn decorations(&self) -> impl Iterator<Item = Decoration> + '_ {
        self.preorder().map(|(d, _)| d)
    }

    pub fn preorder(&self) -> Preorder<'_> {
        Preorder {
            stack: vec![self.0.iter()],
        }
    }

    pub fn map_decorations(&self, f: &impl Fn(Decoration) -> Decoration) -> Forest {
        Forest(self.0.iter().map(|t| t.map_decorations(f)).collect())
    }

    /// Checks that every internal vertex is Omega-decorated, reporting the
    /// first offender in pre-order.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        for (i, t) in self.0.iter().enumerate() {
            if let Some(v) = t.first_violation(&mut vec![i]) {
                return Err(v);
            }
        }
        Ok(())
    }

    /// All subforests, one per antichain of vertices. The trees of each
    /// subforest are in pre-order of their roots; the quotient keeps the
    /// remaining vertices with their planar order.
    pub fn subforests(&self) -> Vec<Subforest> {
        let mut acc = vec![Subforest {
            roots: Vec::new(),
            sub: Forest::unit(),
            quotient: Forest::unit(),
        }];
        for (i, t) in self.0.iter().enumerate() {
            let cuts = t.cuts(&mut vec![i]);
            let mut next = Vec::with_capacity(acc.len() * cuts.len());
            for s in &acc {
                for (roots, sub, rest) in &cuts {
                    let mut s = s.clone();
                    s.roots.extend(roots.iter().cloned());
                    s.sub.0.extend(sub.iter().cloned());
                    s.quotient.0.extend(rest.iter().cloned());
                    next.push(s);
                }
            }
            acc = next;
        }
        acc
    }

    /// `(G, F/G)` for every subforest `G`.
    pub fn subforest_pairs(&self) -> Vec<(Forest, Forest)> {
        self.subforests()
            .into_iter()
            .map(|s| (s.sub, s.quotient))
            .collect()
    }
}

// Canonical order: degree, then breadth, then the pre-order stream of
// (decoration, arity), which determines the forest.
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.breadth().cmp(&other.breadth()))
            .then_with(|| self.preorder().cmp(other.preorder()))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Forest {
        Forest(vec![t])
    }
}

impl FromIterator<Tree> for Forest {
    fn from_iter<I: IntoIterator<Item = Tree>>(iter: I) -> Forest {
        Forest(iter.into_iter().collect())
    }
}
