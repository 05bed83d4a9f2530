//! Rank-metric codes over finite field towers: Gabidulin and Delsarte codes,
//! their duals under arbitrary bilinear forms, and constructions of
//! self-dual and Lagrangian MRD codes.

pub mod gf;
pub mod json;
pub mod linalg;
pub mod constructions;
pub mod rankcodes;
pub mod sample;
pub mod verify;
