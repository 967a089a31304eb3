//! Exact curve graphs of low-complexity surfaces, mapping class actions on
//! them, and quotients by subgroups of large minimum displacement.

pub mod arc2;
pub mod farey;
pub mod graph;
pub mod quotient;
pub mod sphere5;
pub mod union_find;
pub mod window;
