//! The tensor space model: diagrams acting on `V^{⊗n}` for `V = k^{m|m}`.

mod operators;
mod tensor;

pub use operators::{
    c_from_basis, c_op, composition_oracle, diagonal, faithfulness_rank, pi, sigma, sigma_from_basis, supercommutator, xi, GlElement, PeBasis,
    SuperOperator, TENSOR_BUDGET,
};
pub use tensor::{composition_agrees, Coeff, SuperSpace, TVec};
