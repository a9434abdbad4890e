//! Exact-arithmetic analysis of the conjunction of two possibility
//! measures.
//!
//! Given two normalized possibility distributions on a finite space, the
//! conjunction is the event-wise minimum of the induced possibility
//! measures; its credal set is the intersection of the two credal sets.
//! This crate decides, with exact rational arithmetic throughout:
//!
//! - whether the conjunction avoids sure loss (non-empty intersection),
//! - whether it is coherent, 2-alternating, and again a possibility
//!   measure,
//! - what its natural extension is (upper envelope of the intersection,
//!   computed by an exact simplex),
//! - and, when closure fails, how to correct the inputs upward into an
//!   outer approximation whose conjunction is a possibility measure.
//!
//! A zero-sum-game reformulation gives a graphical diagnostic: one line
//! per element between the two distribution axes; the conjunction is a
//! possibility measure exactly when no two intersecting lines slope in
//! opposite directions. The [`report`] module renders that picture as SVG.

pub mod adjust;
pub mod capacity;
pub mod closure;
pub mod credal;
pub mod distribution;
pub mod error;
pub mod game;
pub mod input;
pub mod rational;
pub mod report;
mod simplex;
pub mod space;

pub use distribution::{MassFunction, PossibilityDistribution};
pub use error::Error;
pub use rational::Rational;
pub use space::{Event, Space, MAX_SPACE};
