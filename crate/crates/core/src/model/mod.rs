//! The manifold model: structure data, tensors, constraint systems and
//! validation of the defining conditions.

mod constraints;
mod spec;
mod tensor;
mod validate;

pub use constraints::{rational_roots, ConstraintSet, UnivariateSolution};
pub use spec::{AlgebraSpec, SpecBuilder, SpecError};
pub use tensor::{Slot, Tensor};
pub use validate::{
    check_paracontact, d_eta, jacobi_residuals, paracontact_residual, validate_almost_paracontact, ValidateOptions,
    ValidationError,
};
