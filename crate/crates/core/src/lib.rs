//! Exact arithmetic in the Cayley-Dickson algebras `A_n` over the rationals,
//! together with the operator calculus, element classification, subalgebra
//! constructions and a seeded verification harness for their structure theory.

pub mod automorphism;
pub mod classification;
pub mod element;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod literal;
pub mod operators;
pub mod rational;
pub mod structure_maps;
pub mod table;

pub use classification::AltStatus;
pub use element::{associator, basis, commutator, BasisIndex, CDElement, Decomposition};
pub use error::{AlgebraError, Result};
pub use literal::parse_element;
pub use operators::MatrixRep;
pub use rational::Rational;
pub use structure_maps::SubalgebraBasis;
