#![allow(clippy::needless_range_loop)]

pub mod deformation;
pub mod error;
pub mod forms;
pub mod gauge_kk;
pub mod matrix_geometry;
pub mod ncpoly;
pub mod quantum;
pub mod report;
pub mod scalar;
pub mod suites;
