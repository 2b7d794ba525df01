//! Finite-model engine for hyperspace topologies.

pub mod error;
pub mod hyperspace;
pub mod interval_line;
pub mod propositions;
pub mod setcore;
pub mod topology;

pub use error::{Error, Result};
pub use hyperspace::{Classification, DerivedFamilies, HyperSpace};
pub use setcore::{SetFamily, Subset};
pub use topology::{FiniteTopology, SpaceMap, Subspace};

pub use num_rational::Rational64;

/// Extended rationals `ℚ ∪ {-∞, +∞}`.
pub type ExtRational = interval_line::Ext<Rational64>;
pub type RationalInterval = interval_line::Interval<Rational64>;
pub type RationalIntervalSet = interval_line::IntervalSet<Rational64>;
