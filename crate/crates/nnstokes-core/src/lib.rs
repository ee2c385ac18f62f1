//! Numerical laboratory for non-Newtonian Stokes systems with
//! linear-at-infinity stress laws under rough (very weak) forcing.
//!
//! The crate assembles, on 2D staggered (MAC) grids:
//!
//! * a family of constitutive laws `S(Q) = s(|Q^s|) Q^s` (shifted Carreau and
//!   capped power-law) with executable certification of their structural
//!   constants ([`constitutive`]),
//! * discrete Hardy-Littlewood maximal functions and Muckenhoupt `A_p`
//!   certification of weights built from the forcing ([`weights`]),
//! * linear weighted-Stokes saddle solves and a Picard scheme that moves the
//!   stress defect `mu_inf * eps(v) - S(eps(v))` to the right-hand side
//!   ([`stokes`]),
//! * orchestrated studies that measure weighted/unweighted estimate ratios,
//!   truncation stability, uniqueness and convergence orders and emit
//!   reproducible reports ([`experiments`]).

pub mod constitutive;
pub mod experiments;
pub mod field;
pub mod grid;
pub mod stokes;
pub mod tensor;
pub mod weights;
