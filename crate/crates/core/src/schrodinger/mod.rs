//! Boundary conditions of the point-interaction Hamiltonians `Ĥ₀ + B̂`.

mod bc;
pub mod catalog;
mod classify;
mod forms;
mod linalg;
mod represent;

pub use bc::{extract_bc, BoundaryConditionMatrix};
pub use classify::{boundary_symplectic, classify, classify_bc, is_self_adjoint_bc, Classification};
pub use forms::{raw_boundary_form, sesquilinear_form, BoundaryForm};
pub use represent::{
    check_potential_representable_b3_zero, dirichlet_forms, interacting_pseudo, represent_from_bc,
    represent_interacting, represent_separating, B3ZeroCheck, PotentialFamily, Representation,
};
