//! Ordered Bratteli diagrams and the dynamics they carry.
//!
//! The core types are generic over the integer scalar (see [`Scalar`]);
//! the aliases below fix it to arbitrary precision integers.

pub mod cli;
pub mod diagram;
pub mod dimension;
pub mod error;
pub mod eventual;
pub mod fixtures;
pub mod io;
pub mod iso;
pub mod kakutani;
pub mod kr;
pub mod matrix;
pub mod ordered;
pub mod perron;
pub mod scalar;
pub mod split;
pub mod vershik;

use num_bigint::BigInt;

pub use diagram::{BratteliDiagram, Edge, Simplicity, TelescopeSchedule, VertexId};
pub use dimension::{Decision, Element, Presentation, Sign, TowerFunction};
pub use error::{Error, Result};
pub use eventual::EventuallyStationary;
pub use matrix::{Matrix, Primitivity};
pub use ordered::{
    OrderedDiagram, OrderedLevels, ProperOrdering, StationaryOrderedDiagram, StationaryTail, Substitution,
};
pub use scalar::Scalar;
pub use vershik::{AdicPath, EdgeRef, PathPrefix};

pub type IncidenceMatrix = Matrix<BigInt>;
pub type GroupPresentation = Presentation<BigInt>;
pub type GroupElement = Element<BigInt>;
pub type TowerFn = TowerFunction<BigInt>;
