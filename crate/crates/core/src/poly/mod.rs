//! Exact arithmetic in `Λ[x,y,z]`, `Λ = Z[c_1, c_2, …]`.

pub mod base;
pub mod lambda;
pub mod maps;
pub mod partition;
pub mod series;
pub mod var;

pub use base::BasePoly;
pub use lambda::{CPoly, LambdaPoly};
pub use partition::{Partition, StrictPartition};
pub use series::{schur_det, series_a, ChernSeries};
pub use var::{Monomial, Var};
