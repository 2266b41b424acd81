//! Finite n-player strategic games with exact rational payoffs.
//!
//! A [`StrategicGame`] stores one payoff vector per full action profile in a
//! dense tensor, ordered lexicographically by action indices (last player
//! varies fastest). Payoffs are exact `Ratio<i64>` values so that ties —
//! which drive weak dominance and best-response sets — are decided exactly.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact payoff value.
pub type Rational = Ratio<i64>;

/// One action choice per player, stored as indices into each player's
/// action list. Ordering is lexicographic on the index vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionProfile(Vec<usize>);

impl ActionProfile {
    pub fn new(choices: Vec<usize>) -> Self {
        ActionProfile(choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Copy of this profile with player `i`'s choice replaced.
    pub fn with_action(&self, player: usize, action: usize) -> Self {
        let mut choices = self.0.clone();
        choices[player] = action;
        ActionProfile(choices)
    }
}

impl From<&[usize]> for ActionProfile {
    fn from(choices: &[usize]) -> Self {
        ActionProfile(choices.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for ActionProfile {
    fn from(choices: [usize; N]) -> Self {
        ActionProfile(choices.to_vec())
    }
}

/// An action profile with exactly one player's slot left open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProfile {
    slots: Vec<Option<usize>>,
    free: usize,
}

impl PartialProfile {
    /// Builds from per-player slots; exactly one must be `None`.
    pub fn new(slots: Vec<Option<usize>>) -> Result<Self> {
        let free_slots: Vec<usize> = slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.is_none().then_some(i))
            .collect();
        match free_slots.as_slice() {
            [free] => Ok(PartialProfile { free: *free, slots }),
            other => Err(Error::FreeSlotMismatch {
                expected: 1,
                found: other.len(),
            }),
        }
    }

    /// Drops player `free`'s choice from a full profile.
    pub fn from_profile(profile: &ActionProfile, free: usize) -> Self {
        let slots = profile
            .choices()
            .iter()
            .enumerate()
            .map(|(i, &a)| (i != free).then_some(a))
            .collect();
        PartialProfile { slots, free }
    }

    /// Two-player shorthand: fixes the opponent of `free` to `opponent_action`.
    pub fn two_player(free: usize, opponent_action: usize) -> Self {
        let slots = if free == 0 {
            vec![None, Some(opponent_action)]
        } else {
            vec![Some(opponent_action), None]
        };
        PartialProfile { slots, free: free.min(1) }
    }

    pub fn free_player(&self) -> usize {
        self.free
    }

    pub fn slots(&self) -> &[Option<usize>] {
        &self.slots
    }

    /// Fills the free slot, producing a full profile.
    pub fn complete(&self, action: usize) -> ActionProfile {
        let choices = self
            .slots
            .iter()
            .enumerate()
            .map(|(i, s)| if i == self.free { action } else { s.unwrap() })
            .collect();
        ActionProfile(choices)
    }

    /// Checks that this partial fits `game` and leaves exactly `player` free.
    pub fn validate_for(&self, game: &StrategicGame, player: usize) -> Result<()> {
        if self.free != player {
            return Err(Error::FreeSlotMismatch {
                expected: player,
                found: self.free,
            });
        }
        if self.slots.len() != game.player_count() {
            return Err(Error::ArityMismatch {
                expected: game.player_count(),
                got: self.slots.len(),
            });
        }
        for (i, slot) in self.slots.iter().enumerate() {
            if let Some(a) = slot {
                if *a >= game.action_count(i)? {
                    return Err(Error::IndexOutOfRange {
                        what: "action",
                        index: *a,
                        limit: game.action_count(i)?,
                    });
                }
            }
        }
        Ok(())
    }
}

/// How the other players' payoffs collapse to the scalar the others-oriented
/// objectives compare. With two players every mode returns the opponent's
/// payoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OthersAggregator {
    #[default]
    Sum,
    Min,
    Max,
}

impl OthersAggregator {
    pub const ALL: [OthersAggregator; 3] =
        [OthersAggregator::Sum, OthersAggregator::Min, OthersAggregator::Max];
}

impl core::fmt::Display for OthersAggregator {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self {
            OthersAggregator::Sum => "sum",
            OthersAggregator::Min => "min",
            OthersAggregator::Max => "max",
        };
        f.write_str(s)
    }
}

impl core::str::FromStr for OthersAggregator {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "sum" => Ok(OthersAggregator::Sum),
            "min" => Ok(OthersAggregator::Min),
            "max" => Ok(OthersAggregator::Max),
            _ => Err(()),
        }
    }
}

/// A finite strategic game: player labels, per-player action labels and a
/// dense payoff tensor. Immutable after construction; all operations are
/// pure reads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategicGame {
    name: String,
    players: Vec<String>,
    actions: Vec<Vec<String>>,
    /// `payoffs[rank(profile)][player]`, rank lexicographic, last player fastest.
    payoffs: Vec<Vec<Rational>>,
}

impl StrategicGame {
    /// Validates and builds a game from one payoff entry per profile.
    ///
    /// Every profile must be covered exactly once; entries may arrive in any
    /// order. Rejects duplicate and missing profiles, wrong-arity entries and
    /// out-of-range indices.
    pub fn build(
        name: impl Into<String>,
        players: Vec<String>,
        actions: Vec<Vec<String>>,
        entries: impl IntoIterator<Item = (ActionProfile, Vec<Rational>)>,
    ) -> Result<Self> {
        let n = players.len();
        if n == 0 {
            return Err(Error::ArityMismatch { expected: 1, got: 0 });
        }
        if actions.len() != n {
            return Err(Error::ArityMismatch { expected: n, got: actions.len() });
        }
        for (player, labels) in actions.iter().enumerate() {
            if labels.is_empty() {
                return Err(Error::EmptyActionSet { player });
            }
            for (k, label) in labels.iter().enumerate() {
                if labels[..k].contains(label) {
                    return Err(Error::DuplicateActionLabel {
                        player,
                        label: label.clone(),
                    });
                }
            }
        }

        let counts: Vec<usize> = actions.iter().map(Vec::len).collect();
        let total: usize = counts.iter().product();
        let mut payoffs: Vec<Option<Vec<Rational>>> = vec![None; total];

        for (profile, values) in entries {
            if profile.len() != n {
                return Err(Error::ArityMismatch { expected: n, got: profile.len() });
            }
            for (player, &a) in profile.choices().iter().enumerate() {
                if a >= counts[player] {
                    return Err(Error::IndexOutOfRange {
                        what: "action",
                        index: a,
                        limit: counts[player],
                    });
                }
            }
            if values.len() != n {
                return Err(Error::ArityMismatch { expected: n, got: values.len() });
            }
            let rank = rank_of(profile.choices(), &counts);
            if payoffs[rank].is_some() {
                return Err(Error::DuplicateProfile { profile });
            }
            payoffs[rank] = Some(values);
        }

        let mut filled = Vec::with_capacity(total);
        for (rank, slot) in payoffs.into_iter().enumerate() {
            match slot {
                Some(values) => filled.push(values),
                None => {
                    return Err(Error::MissingProfile {
                        profile: ActionProfile(unrank(rank, &counts)),
                    })
                }
            }
        }

        Ok(StrategicGame {
            name: name.into(),
            players,
            actions,
            payoffs: filled,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn player_count(&self) -> usize {
        self.players.len()
    }

    pub fn actions(&self, player: usize) -> Result<&[String]> {
        self.actions
            .get(player)
            .map(Vec::as_slice)
            .ok_or(Error::IndexOutOfRange {
                what: "player",
                index: player,
                limit: self.players.len(),
            })
    }

    pub fn action_count(&self, player: usize) -> Result<usize> {
        Ok(self.actions(player)?.len())
    }

    pub fn action_counts(&self) -> Vec<usize> {
        self.actions.iter().map(Vec::len).collect()
    }

    /// Index of `label` in `player`'s action list.
    pub fn action_index(&self, player: usize, label: &str) -> Option<usize> {
        self.actions.get(player)?.iter().position(|l| l == label)
    }

    pub fn profile_count(&self) -> usize {
        self.payoffs.len()
    }

    /// Player `i`'s payoff at `profile`.
    pub fn payoff(&self, player: usize, profile: &ActionProfile) -> Result<Rational> {
        Ok(self.payoff_vector(profile)?[self.check_player(player)?])
    }

    /// All players' payoffs at `profile`.
    pub fn payoff_vector(&self, profile: &ActionProfile) -> Result<&[Rational]> {
        let counts = self.action_counts();
        if profile.len() != counts.len() {
            return Err(Error::ArityMismatch {
                expected: counts.len(),
                got: profile.len(),
            });
        }
        for (player, &a) in profile.choices().iter().enumerate() {
            if a >= counts[player] {
                return Err(Error::IndexOutOfRange {
                    what: "action",
                    index: a,
                    limit: counts[player],
                });
            }
        }
        Ok(&self.payoffs[rank_of(profile.choices(), &counts)])
    }

    /// The scalar "others' payoff" `u_{-i}` at `profile`: the opponent's
    /// payoff in a two-player game, otherwise `aggregator` applied over all
    /// players except `i`. Needs at least one opponent.
    pub fn others_payoff(
        &self,
        player: usize,
        profile: &ActionProfile,
        aggregator: OthersAggregator,
    ) -> Result<Rational> {
        let player = self.check_player(player)?;
        if self.player_count() < 2 {
            return Err(Error::NoOpponents);
        }
        let values = self.payoff_vector(profile)?;
        let others = values
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != player)
            .map(|(_, v)| *v);
        Ok(match aggregator {
            OthersAggregator::Sum => others.fold(Rational::from_integer(0), |acc, v| acc + v),
            OthersAggregator::Min => others.min().unwrap(),
            OthersAggregator::Max => others.max().unwrap(),
        })
    }

    /// All profiles in lexicographic order of action indices.
    pub fn profiles(&self) -> Profiles {
        Profiles {
            counts: self.action_counts(),
            next: Some(vec![0; self.player_count()]),
        }
    }

    fn check_player(&self, player: usize) -> Result<usize> {
        if player < self.players.len() {
            Ok(player)
        } else {
            Err(Error::IndexOutOfRange {
                what: "player",
                index: player,
                limit: self.players.len(),
            })
        }
    }
}

fn rank_of(choices: &[usize], counts: &[usize]) -> usize {
    choices
        .iter()
        .zip(counts)
        .fold(0, |rank, (&a, &count)| rank * count + a)
}

fn unrank(mut rank: usize, counts: &[usize]) -> Vec<usize> {
    let mut choices = vec![0; counts.len()];
    for (i, &count) in counts.iter().enumerate().rev() {
        choices[i] = rank % count;
        rank /= count;
    }
    choices
}

/// Lexicographic profile iterator (odometer over action indices).
pub struct Profiles {
    counts: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for Profiles {
    type Item = ActionProfile;

    fn next(&mut self) -> Option<ActionProfile> {
        let current = self.next.take()?;
        let mut following = current.clone();
        let mut advanced = false;
        for i in (0..following.len()).rev() {
            if following[i] + 1 < self.counts[i] {
                following[i] += 1;
                following[i + 1..].iter_mut().for_each(|c| *c = 0);
                advanced = true;
                break;
            }
        }
        if advanced {
            self.next = Some(following);
        }
        Some(ActionProfile(current))
    }
}
