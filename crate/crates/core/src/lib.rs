//! Counting and classification of locally standard 2-torus manifolds over
//! small orbit spaces.
//!
//! The crate works entirely with finite combinatorial data: vectors and
//! matrices over Z/2, proper colorings of cycles, face posets of manifolds
//! with corners, characteristic functions on them, and the cell complexes
//! glued from those functions in dimension two. Every closed-form count has
//! a brute-force counterpart so the two can be checked against each other.

pub mod budget;
pub mod char_functions;
pub mod classification;
pub mod cycle_colorings;
pub mod error;
pub mod euler_orient;
pub mod gf2;
pub mod orbit;
pub mod orbit_space;
pub mod quotient_complex;

pub use budget::Budget;
pub use error::{Error, Result};
