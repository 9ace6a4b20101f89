//! Mixed moments of m-monotone variables by two engines: a rewriting
//! evaluator for the product state and a finite-dimensional representation on
//! the m-monotone product of Hilbert spaces.

mod algebra;
mod clt;
mod evaluator;
mod space;
mod symbolic;
mod word;

pub use algebra::{AlgebraSpec, GnsModel, Marginals, Registry, SymbolicMarginals};
pub use clt::{clt_moment_finite_n, for_each_surjection, FiniteNMoment, OrderPatternSums, FINITE_N_ORDER_CAP};
pub use evaluator::{evaluate_word, unit_is_identity};
pub use space::{product_dimension, Matrix, ProductSpace, Tensor, DEFAULT_MAX_BASIS, DENSE_LIMIT};
pub use symbolic::{Monomial, MomentPoly};
pub use word::{AlgebraIndex, Letter, LetterKind, Word};
