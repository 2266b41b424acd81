//! Preference orderings over action profiles, relation checks and the
//! orientation-dispatching choice operation.
//!
//! [`preference_order`] ranks every profile of a game by one player's
//! orientation and groups exact ties into indifference tiers, yielding a
//! total preorder. Collective orientations rank whole profiles by the
//! worst-off player's payoff (collective profit, maximin, descending) or
//! the best-off player's payoff (collective loss, minimax, ascending); the
//! non-collective ones rank by own or others' payoff.
//!
//! [`Relation`] is the raw "first is at least as good as second" pair set,
//! for probing completeness and transitivity of arbitrary hand-built
//! preference relations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::game::{ActionProfile, OthersAggregator, PartialProfile, Rational, StrategicGame};
use crate::solver::{orientation_best_response, Orientation};

/// Ranked indifference tiers over action profiles for one player and one
/// orientation. Earlier tiers are strictly preferred; profiles in the same
/// tier are indifferent. Tiers partition the order's domain — the full
/// profile set for generated orders, a subset after filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceOrder {
    owner: usize,
    orientation: Orientation,
    tiers: Vec<Vec<ActionProfile>>,
}

impl PreferenceOrder {
    pub fn owner(&self) -> usize {
        self.owner
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn tiers(&self) -> &[Vec<ActionProfile>] {
        &self.tiers
    }

    /// Index of the tier holding `profile`, 0 being the most preferred.
    pub fn tier_of(&self, profile: &ActionProfile) -> Option<usize> {
        self.tiers.iter().position(|tier| tier.contains(profile))
    }

    /// Every profile the order ranks, in tier order.
    pub fn domain(&self) -> impl Iterator<Item = &ActionProfile> {
        self.tiers.iter().flatten()
    }

    /// The induced weak relation: (a, b) present iff a's tier is at least
    /// as good as b's.
    pub fn to_relation(&self) -> Relation {
        let domain: Vec<ActionProfile> = self.domain().cloned().collect();
        let mut pairs = BTreeSet::new();
        for (tier_a, as_) in self.tiers.iter().enumerate() {
            for (tier_b, bs) in self.tiers.iter().enumerate() {
                if tier_a <= tier_b {
                    for a in as_ {
                        for b in bs {
                            pairs.insert((a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
        Relation { domain, pairs }
    }
}

/// Ranks all profiles of `game` for `player` under `orientation`.
pub fn preference_order(
    game: &StrategicGame,
    player: usize,
    orientation: Orientation,
    aggregator: OthersAggregator,
) -> Result<PreferenceOrder> {
    let mut keyed: Vec<(Rational, ActionProfile)> = Vec::with_capacity(game.profile_count());
    for profile in game.profiles() {
        keyed.push((orientation_key(game, player, orientation, aggregator, &profile)?, profile));
    }

    // Sort by key (descending for profit orientations), ties lexicographic.
    let descending = orientation.maximizes();
    keyed.sort_by(|(ka, pa), (kb, pb)| {
        let key_cmp = if descending { kb.cmp(ka) } else { ka.cmp(kb) };
        key_cmp.then_with(|| pa.cmp(pb))
    });

    let mut tiers: Vec<Vec<ActionProfile>> = Vec::new();
    let mut current_key: Option<Rational> = None;
    for (key, profile) in keyed {
        if current_key != Some(key) {
            tiers.push(Vec::new());
            current_key = Some(key);
        }
        tiers.last_mut().unwrap().push(profile);
    }

    Ok(PreferenceOrder { owner: player, orientation, tiers })
}

fn orientation_key(
    game: &StrategicGame,
    player: usize,
    orientation: Orientation,
    aggregator: OthersAggregator,
    profile: &ActionProfile,
) -> Result<Rational> {
    Ok(match orientation {
        Orientation::IndividualProfit | Orientation::IndividualLoss => {
            game.payoff(player, profile)?
        }
        Orientation::ProfitOthers | Orientation::LossOthers => {
            game.others_payoff(player, profile, aggregator)?
        }
        Orientation::CollectiveProfit => {
            *game.payoff_vector(profile)?.iter().min().unwrap()
        }
        Orientation::CollectiveLoss => *game.payoff_vector(profile)?.iter().max().unwrap(),
    })
}

/// A raw weak preference relation: `pairs` holds (a, b) meaning "a is at
/// least as good as b". Domain members need not be related at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    domain: Vec<ActionProfile>,
    pairs: BTreeSet<(ActionProfile, ActionProfile)>,
}

impl Relation {
    pub fn new(
        domain: Vec<ActionProfile>,
        pairs: BTreeSet<(ActionProfile, ActionProfile)>,
    ) -> Result<Self> {
        for (a, b) in &pairs {
            for p in [a, b] {
                if !domain.contains(p) {
                    return Err(Error::PairOutsideDomain { profile: p.clone() });
                }
            }
        }
        Ok(Relation { domain, pairs })
    }

    pub fn domain(&self) -> &[ActionProfile] {
        &self.domain
    }

    pub fn holds(&self, a: &ActionProfile, b: &ActionProfile) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    /// Completeness: every pair of distinct domain members must be related
    /// in at least one direction. Returns the first unrelated pair in
    /// lexicographic order, or `None` when complete.
    pub fn check_complete(&self) -> Option<(ActionProfile, ActionProfile)> {
        let mut sorted = self.domain.clone();
        sorted.sort();
        for (i, a) in sorted.iter().enumerate() {
            for b in &sorted[i + 1..] {
                if !self.holds(a, b) && !self.holds(b, a) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    /// Transitivity: collects every triple with a ⪰ b and b ⪰ c but not
    /// a ⪰ c. Empty means transitive.
    pub fn check_transitive(&self) -> Vec<(ActionProfile, ActionProfile, ActionProfile)> {
        let mut sorted = self.domain.clone();
        sorted.sort();
        let mut violations = Vec::new();
        for a in &sorted {
            for b in &sorted {
                if !self.holds(a, b) {
                    continue;
                }
                for c in &sorted {
                    if self.holds(b, c) && !self.holds(a, c) {
                        violations.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
        violations
    }
}

/// The choice operation: what player `i` picks from their available actions
/// given a conjecture about everyone else, under an orientation.
///
/// Non-collective orientations delegate to the solver's best-response sets
/// (own-payoff argmax/argmin, others'-payoff argmax/argmin). Collective
/// orientations pick the actions whose completed profile reaches the
/// highest tier of the player's collective preference order.
pub fn hyper_rational_choice(
    game: &StrategicGame,
    player: usize,
    orientation: Orientation,
    conjecture: &PartialProfile,
    aggregator: OthersAggregator,
) -> Result<BTreeSet<usize>> {
    if orientation.is_collective() {
        let order = preference_order(game, player, orientation, aggregator)?;
        top_tier_choice(game, &order, conjecture)
    } else {
        orientation_best_response(game, player, conjecture, orientation, aggregator)
    }
}

/// Actions whose completion under `conjecture` lands in the best tier the
/// order can reach. Completions the order does not rank are skipped, so a
/// filtered order restricts the menu.
pub fn top_tier_choice(
    game: &StrategicGame,
    order: &PreferenceOrder,
    conjecture: &PartialProfile,
) -> Result<BTreeSet<usize>> {
    conjecture.validate_for(game, order.owner())?;
    let mut best: Option<usize> = None;
    let mut chosen = BTreeSet::new();
    for action in 0..game.action_count(order.owner())? {
        let Some(tier) = order.tier_of(&conjecture.complete(action)) else {
            continue;
        };
        match best {
            Some(b) if tier == b => {
                chosen.insert(action);
            }
            Some(b) if tier < b => {
                best = Some(tier);
                chosen.clear();
                chosen.insert(action);
            }
            Some(_) => {}
            None => {
                best = Some(tier);
                chosen.insert(action);
            }
        }
    }
    if chosen.is_empty() {
        return Err(Error::NoRankedCompletion);
    }
    Ok(chosen)
}

/// Keeps only the profiles in which every player picks the same action
/// label, preserving tier order — "treat others as we ourselves would like
/// to be treated" plus its negative counterpart. Requires all players to
/// share one action label set.
pub fn two_principles_filter(
    game: &StrategicGame,
    order: &PreferenceOrder,
) -> Result<PreferenceOrder> {
    let reference: BTreeSet<&str> = game.actions(0)?.iter().map(String::as_str).collect();
    for player in 1..game.player_count() {
        let set: BTreeSet<&str> = game.actions(player)?.iter().map(String::as_str).collect();
        if set != reference {
            return Err(Error::AsymmetricActionSets);
        }
    }

    let symmetric = |profile: &ActionProfile| -> bool {
        let mut chosen = profile
            .choices()
            .iter()
            .enumerate()
            .map(|(player, &a)| &game.actions(player).unwrap()[a]);
        let first = chosen.next();
        chosen.all(|label| Some(label) == first)
    };

    let tiers: Vec<Vec<ActionProfile>> = order
        .tiers()
        .iter()
        .map(|tier| tier.iter().filter(|p| symmetric(p)).cloned().collect())
        .filter(|tier: &Vec<ActionProfile>| !tier.is_empty())
        .collect();

    Ok(PreferenceOrder {
        owner: order.owner(),
        orientation: order.orientation(),
        tiers,
    })
}

use alloc::string::String;
