//! Exact construction and total-positivity certification of
//! multivariable Catalan-like polynomial triangles.

pub mod catalog;
pub mod cli;
pub mod homog;
pub mod poly;
pub mod recmatrix;
pub mod series;
pub mod totalpos;
pub mod weights;
