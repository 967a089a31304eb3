//! Curves on the five-punctured sphere.

pub mod base;
pub mod curve;
pub mod encoding;
pub mod generators;
pub mod halftwist;
pub mod intersection;
pub mod triangulation;
pub mod window;
pub mod word;
