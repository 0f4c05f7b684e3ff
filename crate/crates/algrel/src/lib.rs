//! Exact reliability analysis of multi-state k-out-of-n systems through
//! monomial ideals.
//!
//! The working states of a coherent multi-state system at each demand
//! level form a monomial ideal; its minimal generators are the minimal
//! paths and its Hilbert-series numerator gives the level reliability as
//! an alternating sum whose truncations bound it from both sides. The
//! numerator is computed with a Mayer-Vietoris tree, which also yields
//! bounds on the multigraded Betti numbers of the ideal.
//!
//! Heavy loops are parallelised with rayon behind the default `parallel`
//! feature; disabling it gives a dependency-free sequential build with
//! bit-identical results.

pub mod combinatorics;
pub mod error;
pub mod monomial;
pub mod mvt;
pub mod oracle;
pub mod reliability;
pub mod systems;

mod par;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal};
pub use mvt::{
    betti_bounds, build_mvt, hilbert_numerator, BettiSummary, HilbertNumerator, MvTree,
    MvtOptions, PivotRule,
};
pub use reliability::{
    classic_lower_bounds, evaluate, level_reliabilities, BoundSequence, ClassicBounds,
    LevelReliability, ProbabilityModel,
};
pub use systems::{StandardPair, StateVector, SystemSpec, DEFAULT_BUDGET};
