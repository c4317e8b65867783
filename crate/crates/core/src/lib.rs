//! The weighted Connes-Kreimer Hopf algebra of `(X, Omega)`-decorated planar
//! rooted forests.
//!
//! Forests are combined by concatenation, grafted by `B+_w`, and carry a
//! coproduct satisfying a Hochschild 1-cocycle condition with weights
//! `la_w`. Leaves decorated by `x` in X carry weights `mu_x`. All the
//! algebra is generic over the coefficient ring: symbolic weights live in
//! [`IntPoly`], numeric instances use rationals or machine numbers.

pub mod checks;
pub mod coefficients;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod hopf;
pub mod linear;
pub mod operated;
pub mod scalar;
pub mod text;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use coefficients::{Decoration, Kind, Monomial, Poly, Specialization, SymbolTable, Var};
pub use error::{Error, Result};
pub use forest::{Forest, Subforest, Tree, VertexPath, Violation};
pub use hopf::HopfAlgebra;
pub use linear::{Combination, Element, Module, Scalar, Tensor2, Tensor3};
pub use scalar::Ring;

/// Polynomials over the integers: the symbolic weight ring.
pub type IntPoly = Poly<BigInt>;
/// Polynomials over the rationals: partially specialized weights.
pub type RatPoly = Poly<BigRational>;

/// Forest-algebra elements with symbolic weights.
pub type SymElement = Element<IntPoly>;
/// Pair tensors with symbolic weights.
pub type SymTensor2 = Tensor2<IntPoly>;
/// Triple tensors with symbolic weights.
pub type SymTensor3 = Tensor3<IntPoly>;
/// The Hopf algebra with symbolic weights.
pub type SymHopf = HopfAlgebra<IntPoly>;
/// The Hopf algebra with rational weights.
pub type RatHopf = HopfAlgebra<BigRational>;
