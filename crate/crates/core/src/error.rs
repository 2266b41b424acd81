use alloc::string::String;
use core::fmt;

use crate::game::ActionProfile;
use crate::solver::Orientation;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors shared by game construction, the solver and the simulator.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A payoff entry for this profile was never supplied.
    MissingProfile { profile: ActionProfile },
    /// The same profile received two payoff entries.
    DuplicateProfile { profile: ActionProfile },
    /// A profile or payoff vector has the wrong number of components.
    ArityMismatch { expected: usize, got: usize },
    /// A player or action index is outside the game's shape.
    IndexOutOfRange { what: &'static str, index: usize, limit: usize },
    /// A player has no actions.
    EmptyActionSet { player: usize },
    /// An action label occurs twice for one player.
    DuplicateActionLabel { player: usize, label: String },
    /// A partial profile does not leave exactly the expected player free.
    FreeSlotMismatch { expected: usize, found: usize },
    /// The operation needs at least one opponent.
    NoOpponents,
    /// The operation does not accept collective orientations.
    UnsupportedOrientation(Orientation),
    /// A relation pair references a profile outside the relation's domain.
    PairOutsideDomain { profile: ActionProfile },
    /// The two-principles filter needs every player to share one action set.
    AsymmetricActionSets,
    /// No completion of the conjecture is ranked by the preference order.
    NoRankedCompletion,
    /// Repeated play is defined for exactly two players.
    NotTwoPlayer { players: usize },
    /// Repeated play needs at least one round.
    InvalidRounds,
    /// The tremble probability must lie in [0, 1].
    InvalidEpsilon(f64),
    /// A tournament needs at least two policies.
    TooFewPolicies,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MissingProfile { profile } => {
                write!(f, "no payoff entry for profile {profile:?}")
            }
            Error::DuplicateProfile { profile } => {
                write!(f, "duplicate payoff entry for profile {profile:?}")
            }
            Error::ArityMismatch { expected, got } => {
                write!(f, "expected {expected} components, got {got}")
            }
            Error::IndexOutOfRange { what, index, limit } => {
                write!(f, "{what} index {index} out of range (limit {limit})")
            }
            Error::EmptyActionSet { player } => {
                write!(f, "player {player} has an empty action set")
            }
            Error::DuplicateActionLabel { player, label } => {
                write!(f, "player {player} lists action '{label}' twice")
            }
            Error::FreeSlotMismatch { expected, found } => {
                write!(
                    f,
                    "partial profile must leave exactly player {expected} free (found {found})"
                )
            }
            Error::NoOpponents => write!(f, "operation needs at least one opponent"),
            Error::UnsupportedOrientation(o) => {
                write!(f, "orientation '{o}' is not supported here")
            }
            Error::PairOutsideDomain { profile } => {
                write!(f, "relation pair references {profile:?} outside the domain")
            }
            Error::AsymmetricActionSets => {
                write!(f, "players do not share a common action label set")
            }
            Error::NoRankedCompletion => {
                write!(f, "no completion of the conjecture is ranked by the order")
            }
            Error::NotTwoPlayer { players } => {
                write!(f, "repeated play needs exactly 2 players, game has {players}")
            }
            Error::InvalidRounds => write!(f, "rounds must be at least 1"),
            Error::InvalidEpsilon(e) => write!(f, "epsilon {e} is outside [0, 1]"),
            Error::TooFewPolicies => write!(f, "tournament needs at least two policies"),
        }
    }
}

impl core::error::Error for Error {}
