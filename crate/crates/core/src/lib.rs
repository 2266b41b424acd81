//! Exact analysis of finite n-player strategic games whose players may aim at
//! their own payoff, at the other players' payoff, or at the other players'
//! loss.
//!
//! The crate models a game as a dense tensor of exact rational payoffs and
//! offers, on top of it:
//!
//! - best-response sets for each behavioral orientation ([`solver`]),
//! - dominance classification and equilibrium classes B (own benefit),
//!   K (others' profit) and L (others' loss), plus hyper-equilibrium
//!   detection ([`solver`]),
//! - preference orderings over full action profiles per orientation, with
//!   completeness/transitivity checks and the two-principles symmetry
//!   filter ([`taxonomy`]),
//! - a deterministic repeated-game simulator for orientation-typed agent
//!   policies ([`repeated`]).
//!
//! All payoffs are `Ratio<i64>`; ties are exact and best-response sets keep
//! every tied action. The crate is `no_std` (alloc required); parsing, file
//! formats and reporting live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod game;
pub mod repeated;
pub mod solver;
pub mod taxonomy;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
pub use game::{ActionProfile, OthersAggregator, PartialProfile, Rational, StrategicGame};
pub use solver::{
    DominanceReport, EquilibriumClass, EquilibriumEntry, EquilibriumReport, HyperEquilibrium,
    HyperMode, Orientation, PlayerDominance,
};
pub use taxonomy::{PreferenceOrder, Relation};
