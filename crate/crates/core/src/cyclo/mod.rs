//! Exact scalars and linear algebra over the cyclotomic field Q(zeta_8).

mod linalg;
mod number;

pub use linalg::{
    sparse_axpy, sparse_from_pairs, sparse_scale, CycloMatrix, RowEliminator, Solver, SparseVec,
};
pub use number::{Cyclo, DivisionByZero};
