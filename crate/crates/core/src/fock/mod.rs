//! Creation, annihilation and Gaussian operators on the m-monotone Fock space
//! over `L²(ℝ₊)`, with exact piecewise-polynomial calculus.

mod moments;
mod piecewise;
mod tensor;

pub use moments::{
    a_pi_closed_form, a_pi_expectation, gaussian_moment, partition_sum_by_inner_blocks, partition_sum_moment,
    Epsilon, EpsilonWord,
};
pub use piecewise::PiecewisePolynomial;
pub use tensor::{annihilate, create, inner, tensor_inner, SimpleTensor, TensorState};
