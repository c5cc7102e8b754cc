//! Exact-arithmetic vertex-operator representations of Yangian doubles of
//! simply laced Kac-Moody algebras, verified coefficient by coefficient.
//!
//! The crate builds the level-one vertex representation of the centrally
//! extended Yangian double on a Fock space tensored with a twisted group
//! algebra of the root lattice, entirely over exact rationals. Formal series
//! in the variables `z`, `w`, `ħ`, `u` are truncated to explicit windows that
//! certify exactness of every retained coefficient, so that defining
//! relations, commutation lemmas, classical limits, intertwiners and
//! desk-scale PBW rank certificates can be checked mechanically.
//!
//! Main entry points:
//!
//! * [`cartan`] — Cartan matrices, root lattices, cocycles, root systems;
//! * [`fock`] — the representation space and its Heisenberg/group actions;
//! * [`series`] — windowed formal series and delta distributions;
//! * [`vertex`] — the quantum, classical and lattice vertex operators;
//! * [`relations`] — coefficientwise relation suites with fault injection;
//! * [`uce`] — universal central extension models, intertwiner and
//!   faithfulness certificates;
//! * [`coproduct`] — parameter-dependent coproducts, tensor actions and
//!   injectivity certificates;
//! * [`driver`] — batch configuration, batteries and JSON reports.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cartan;
pub mod coproduct;
pub mod driver;
pub mod fock;
pub mod linalg;
pub mod relations;
pub mod report;
pub mod scalar;
pub mod series;
pub mod uce;
pub mod vertex;

pub use cartan::{Cartan, CartanKind, Cocycle, LatticePoint};
pub use fock::{FockMonomial, StateVector};
pub use scalar::Rat;
pub use series::{Powers, Span, Window, WindowedSeries};

use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Cartan kind: {0}")]
    UnsupportedKind(String),
    #[error("operation requires an affine Cartan matrix, got {0}")]
    NotAffine(String),
    #[error("lattice point has {got} coordinates, Cartan matrix has {want} labels")]
    IndexMismatch { got: usize, want: usize },
    #[error("coefficient at {0} lies outside the certified window")]
    OutOfWindow(String),
    #[error("window request cannot be satisfied: {0}")]
    WindowEmpty(String),
    #[error("mode index 0 is not a Heisenberg generator")]
    ZeroMode,
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
