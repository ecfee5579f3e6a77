//! Homological algebra of finite-dimensional bound quiver algebras over
//! exact fields.

pub mod algebra;
pub mod complexity;
pub mod cotilting;
pub mod fixtures;
pub mod linalg;
pub mod homological;
pub mod input;
pub mod module;
pub mod orthogonal;
pub mod verdict;
