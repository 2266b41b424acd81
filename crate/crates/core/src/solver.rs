//! Best-response sets, dominance and equilibrium classification.
//!
//! Three set-valued best-response functions drive everything here: the own
//! payoff (`B`), the other players' payoff (`K`) and the other players' loss
//! (`L`). A profile is an equilibrium of a class when every player's action
//! belongs to the matching best-response set against the rest of the
//! profile; the equilibrium report is the union over the three classes.
//!
//! Hyper-equilibria come in two readings. The strict reading is simply
//! "class K or class L". The annotated reading additionally demands that no
//! player can raise their own payoff by deviating, and that some pivot
//! player has a deviation that keeps their own payoff fixed while moving
//! the others' payoff.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::game::{ActionProfile, OthersAggregator, PartialProfile, Rational, StrategicGame};

/// A behavioral orientation: which objective a player's choice serves.
///
/// The solver accepts the first four; the collective modes rank whole
/// profiles and live in the taxonomy module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    IndividualProfit,
    IndividualLoss,
    ProfitOthers,
    LossOthers,
    CollectiveProfit,
    CollectiveLoss,
}

impl Orientation {
    pub const ALL: [Orientation; 6] = [
        Orientation::IndividualProfit,
        Orientation::IndividualLoss,
        Orientation::ProfitOthers,
        Orientation::LossOthers,
        Orientation::CollectiveProfit,
        Orientation::CollectiveLoss,
    ];

    /// The four orientations dominance and best-response analysis accept.
    pub const SOLVER: [Orientation; 4] = [
        Orientation::IndividualProfit,
        Orientation::IndividualLoss,
        Orientation::ProfitOthers,
        Orientation::LossOthers,
    ];

    pub fn is_collective(self) -> bool {
        matches!(self, Orientation::CollectiveProfit | Orientation::CollectiveLoss)
    }

    /// Whether the orientation's objective is maximized (profit) or
    /// minimized (loss).
    pub fn maximizes(self) -> bool {
        matches!(
            self,
            Orientation::IndividualProfit
                | Orientation::ProfitOthers
                | Orientation::CollectiveProfit
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::IndividualProfit => "individual-profit",
            Orientation::IndividualLoss => "individual-loss",
            Orientation::ProfitOthers => "profit-others",
            Orientation::LossOthers => "loss-others",
            Orientation::CollectiveProfit => "collective-profit",
            Orientation::CollectiveLoss => "collective-loss",
        }
    }
}

impl core::fmt::Display for Orientation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Orientation {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        Orientation::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or(())
    }
}

/// Equilibrium classes: own benefit (B), others' profit (K), others' loss (L).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EquilibriumClass {
    IndividualBenefit,
    OthersProfit,
    OthersLoss,
}

impl EquilibriumClass {
    pub const ALL: [EquilibriumClass; 3] = [
        EquilibriumClass::IndividualBenefit,
        EquilibriumClass::OthersProfit,
        EquilibriumClass::OthersLoss,
    ];

    /// Canonical one-letter code.
    pub fn code(self) -> &'static str {
        match self {
            EquilibriumClass::IndividualBenefit => "B",
            EquilibriumClass::OthersProfit => "K",
            EquilibriumClass::OthersLoss => "L",
        }
    }
}

impl core::fmt::Display for EquilibriumClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.code())
    }
}

/// Actions of player `i` maximizing `u_i` against `partial`. Never empty.
pub fn best_response_individual(
    game: &StrategicGame,
    player: usize,
    partial: &PartialProfile,
) -> Result<BTreeSet<usize>> {
    arg_best(game, player, partial, true, |p| game.payoff(player, p))
}

/// Actions of player `i` maximizing the others' payoff `u_{-i}`.
pub fn best_response_profit_others(
    game: &StrategicGame,
    player: usize,
    partial: &PartialProfile,
    aggregator: OthersAggregator,
) -> Result<BTreeSet<usize>> {
    arg_best(game, player, partial, true, |p| {
        game.others_payoff(player, p, aggregator)
    })
}

/// Actions of player `i` minimizing the others' payoff `u_{-i}`.
pub fn best_response_loss_others(
    game: &StrategicGame,
    player: usize,
    partial: &PartialProfile,
    aggregator: OthersAggregator,
) -> Result<BTreeSet<usize>> {
    arg_best(game, player, partial, false, |p| {
        game.others_payoff(player, p, aggregator)
    })
}

/// Best-response set for any non-collective orientation.
pub fn orientation_best_response(
    game: &StrategicGame,
    player: usize,
    partial: &PartialProfile,
    orientation: Orientation,
    aggregator: OthersAggregator,
) -> Result<BTreeSet<usize>> {
    match orientation {
        Orientation::IndividualProfit => best_response_individual(game, player, partial),
        Orientation::IndividualLoss => {
            arg_best(game, player, partial, false, |p| game.payoff(player, p))
        }
        Orientation::ProfitOthers => {
            best_response_profit_others(game, player, partial, aggregator)
        }
        Orientation::LossOthers => best_response_loss_others(game, player, partial, aggregator),
        collective => Err(Error::UnsupportedOrientation(collective)),
    }
}

fn arg_best<F>(
    game: &StrategicGame,
    player: usize,
    partial: &PartialProfile,
    maximize: bool,
    mut value: F,
) -> Result<BTreeSet<usize>>
where
    F: FnMut(&ActionProfile) -> Result<Rational>,
{
    partial.validate_for(game, player)?;
    let mut best: Option<Rational> = None;
    let mut set = BTreeSet::new();
    for action in 0..game.action_count(player)? {
        let v = value(&partial.complete(action))?;
        match best {
            Some(b) if v == b => {
                set.insert(action);
            }
            Some(b) if (v > b) == maximize => {
                best = Some(v);
                set.clear();
                set.insert(action);
            }
            Some(_) => {}
            None => {
                best = Some(v);
                set.insert(action);
            }
        }
    }
    Ok(set)
}

/// Per-player dominance classification under one orientation.
///
/// An action is strictly dominant when it beats every other action of the
/// player for every combination of the others' actions, weakly dominant
/// when it is never worse and somewhere better; dominated actions are the
/// mirror image. "Better" follows the orientation: higher own payoff,
/// lower own payoff, higher others' payoff or lower others' payoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    pub orientation: Orientation,
    pub players: Vec<PlayerDominance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlayerDominance {
    pub strictly_dominant: Vec<usize>,
    pub weakly_dominant: Vec<usize>,
    pub strictly_dominated: Vec<usize>,
    pub weakly_dominated: Vec<usize>,
}

pub fn dominance(
    game: &StrategicGame,
    orientation: Orientation,
    aggregator: OthersAggregator,
) -> Result<DominanceReport> {
    if orientation.is_collective() {
        return Err(Error::UnsupportedOrientation(orientation));
    }
    let maximize = orientation.maximizes();
    let mut players = Vec::with_capacity(game.player_count());

    for i in 0..game.player_count() {
        let contexts = others_assignments(game, i);
        let count = game.action_count(i)?;

        // values[a][ctx]
        let mut values = Vec::with_capacity(count);
        for a in 0..count {
            let mut row = Vec::with_capacity(contexts.len());
            for ctx in &contexts {
                let profile = ctx.complete(a);
                row.push(match orientation {
                    Orientation::IndividualProfit | Orientation::IndividualLoss => {
                        game.payoff(i, &profile)?
                    }
                    _ => game.others_payoff(i, &profile, aggregator)?,
                });
            }
            values.push(row);
        }

        let beats = |x: &Rational, y: &Rational| if maximize { x > y } else { x < y };
        let strict = |a: usize, b: usize| {
            values[a].iter().zip(&values[b]).all(|(x, y)| beats(x, y))
        };
        let weak = |a: usize, b: usize| {
            values[a].iter().zip(&values[b]).all(|(x, y)| x == y || beats(x, y))
                && values[a].iter().zip(&values[b]).any(|(x, y)| beats(x, y))
        };

        let mut dom = PlayerDominance::default();
        for a in 0..count {
            let rest = (0..count).filter(|&b| b != a);
            if rest.clone().all(|b| strict(a, b)) {
                dom.strictly_dominant.push(a);
            }
            if rest.clone().all(|b| weak(a, b)) {
                dom.weakly_dominant.push(a);
            }
            if rest.clone().any(|b| strict(b, a)) {
                dom.strictly_dominated.push(a);
            }
            if rest.clone().any(|b| weak(b, a)) {
                dom.weakly_dominated.push(a);
            }
        }
        players.push(dom);
    }

    Ok(DominanceReport { orientation, players })
}

/// All assignments of the players other than `free`, in lexicographic order.
fn others_assignments(game: &StrategicGame, free: usize) -> Vec<PartialProfile> {
    game.profiles()
        .filter(|p| p.choices()[free] == 0)
        .map(|p| PartialProfile::from_profile(&p, free))
        .collect()
}

/// One profile's classification: which equilibrium classes it belongs to
/// and which players could deviate at zero cost to themselves while moving
/// the others' payoff (the hyper-equilibrium pivots).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumEntry {
    pub profile: ActionProfile,
    pub classes: BTreeSet<EquilibriumClass>,
    pub pivots: Vec<usize>,
}

impl EquilibriumEntry {
    /// Strict reading: an equilibrium by others' profit or others' loss.
    pub fn is_hyper_strict(&self) -> bool {
        self.classes.contains(&EquilibriumClass::OthersProfit)
            || self.classes.contains(&EquilibriumClass::OthersLoss)
    }

    /// Annotated reading: strict, plus nobody gains by deviating (exactly
    /// class-B membership), plus at least one pivot exists.
    pub fn is_hyper_annotated(&self) -> bool {
        self.is_hyper_strict()
            && self.classes.contains(&EquilibriumClass::IndividualBenefit)
            && !self.pivots.is_empty()
    }
}

/// Equilibria of all three classes, in lexicographic profile order.
/// Profiles outside every class are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumReport {
    pub entries: Vec<EquilibriumEntry>,
}

impl EquilibriumReport {
    pub fn entry(&self, profile: &ActionProfile) -> Option<&EquilibriumEntry> {
        self.entries.iter().find(|e| &e.profile == profile)
    }

    pub fn classes_of(&self, profile: &ActionProfile) -> BTreeSet<EquilibriumClass> {
        self.entry(profile).map(|e| e.classes.clone()).unwrap_or_default()
    }
}

/// Classifies every profile: class B when each player's action is an own-
/// payoff best response to the rest, class K for others'-profit best
/// responses, class L for others'-loss best responses.
pub fn equilibria(
    game: &StrategicGame,
    aggregator: OthersAggregator,
) -> Result<EquilibriumReport> {
    let mut entries = Vec::new();
    for profile in game.profiles() {
        let mut in_b = true;
        let mut in_k = true;
        let mut in_l = true;
        for i in 0..game.player_count() {
            let partial = PartialProfile::from_profile(&profile, i);
            let action = profile.choices()[i];
            in_b = in_b && best_response_individual(game, i, &partial)?.contains(&action);
            in_k = in_k
                && best_response_profit_others(game, i, &partial, aggregator)?.contains(&action);
            in_l = in_l
                && best_response_loss_others(game, i, &partial, aggregator)?.contains(&action);
            if !(in_b || in_k || in_l) {
                break;
            }
        }

        let mut classes = BTreeSet::new();
        if in_b {
            classes.insert(EquilibriumClass::IndividualBenefit);
        }
        if in_k {
            classes.insert(EquilibriumClass::OthersProfit);
        }
        if in_l {
            classes.insert(EquilibriumClass::OthersLoss);
        }
        if classes.is_empty() {
            continue;
        }

        entries.push(EquilibriumEntry {
            pivots: pivots(game, &profile, aggregator)?,
            profile,
            classes,
        });
    }
    Ok(EquilibriumReport { entries })
}

/// Players with a deviation that keeps their own payoff fixed while strictly
/// changing the others' payoff.
fn pivots(
    game: &StrategicGame,
    profile: &ActionProfile,
    aggregator: OthersAggregator,
) -> Result<Vec<usize>> {
    let mut result = Vec::new();
    for i in 0..game.player_count() {
        let own = game.payoff(i, profile)?;
        let others = game.others_payoff(i, profile, aggregator)?;
        for action in 0..game.action_count(i)? {
            if action == profile.choices()[i] {
                continue;
            }
            let alt = profile.with_action(i, action);
            if game.payoff(i, &alt)? == own
                && game.others_payoff(i, &alt, aggregator)? != others
            {
                result.push(i);
                break;
            }
        }
    }
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperMode {
    Strict,
    Annotated,
}

impl HyperMode {
    pub fn name(self) -> &'static str {
        match self {
            HyperMode::Strict => "strict",
            HyperMode::Annotated => "annotated",
        }
    }
}

impl core::fmt::Display for HyperMode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperEquilibrium {
    pub profile: ActionProfile,
    pub pivots: Vec<usize>,
}

/// Hyper-equilibria of the game, lexicographically ordered.
pub fn hyper_equilibria(
    game: &StrategicGame,
    mode: HyperMode,
    aggregator: OthersAggregator,
) -> Result<Vec<HyperEquilibrium>> {
    let report = equilibria(game, aggregator)?;
    Ok(report
        .entries
        .into_iter()
        .filter(|e| match mode {
            HyperMode::Strict => e.is_hyper_strict(),
            HyperMode::Annotated => e.is_hyper_annotated(),
        })
        .map(|e| HyperEquilibrium { profile: e.profile, pivots: e.pivots })
        .collect())
}

/// Evaluates the raw quantifier form of a class definition straight from
/// payoff lookups. Test oracle for [`equilibria`]; shares no code path with
/// the best-response machinery.
pub fn oracle_check(
    game: &StrategicGame,
    profile: &ActionProfile,
    class: EquilibriumClass,
    aggregator: OthersAggregator,
) -> Result<bool> {
    for i in 0..game.player_count() {
        for action in 0..game.action_count(i)? {
            let alt = profile.with_action(i, action);
            let breaks = match class {
                EquilibriumClass::IndividualBenefit => {
                    game.payoff(i, &alt)? > game.payoff(i, profile)?
                }
                EquilibriumClass::OthersProfit => {
                    game.others_payoff(i, &alt, aggregator)?
                        > game.others_payoff(i, profile, aggregator)?
                }
                EquilibriumClass::OthersLoss => {
                    game.others_payoff(i, &alt, aggregator)?
                        < game.others_payoff(i, profile, aggregator)?
                }
            };
            if breaks {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{build_2x2, chicken, g1, g2, g3, matching_pennies, p2};

    const SUM: OthersAggregator = OthersAggregator::Sum;

    fn set(actions: &[usize]) -> BTreeSet<usize> {
        actions.iter().copied().collect()
    }

    fn classes(report: &EquilibriumReport, profile: &ActionProfile) -> Vec<&'static str> {
        report
            .classes_of(profile)
            .into_iter()
            .map(EquilibriumClass::code)
            .collect()
    }

    #[test]
    fn own_best_response_in_g1() {
        let g = g1();
        // Opponent cooperates: defecting pays 4 over 3.
        let br = best_response_individual(&g, 0, &PartialProfile::two_player(0, 0)).unwrap();
        assert_eq!(br, set(&[1]));
    }

    #[test]
    fn own_best_response_keeps_ties_in_g3() {
        let g = g3();
        // Against D both rows pay 2.
        let br = best_response_individual(&g, 0, &PartialProfile::two_player(0, 1)).unwrap();
        assert_eq!(br, set(&[0, 1]));
    }

    #[test]
    fn single_action_player_best_response_is_that_action() {
        let g = crate::game::StrategicGame::build(
            "one-col",
            crate::fixtures::labels(&["P1", "P2"]),
            alloc::vec![
                crate::fixtures::labels(&["a", "b"]),
                crate::fixtures::labels(&["only"]),
            ],
            [
                (ActionProfile::from([0, 0]), alloc::vec![crate::fixtures::r(1), crate::fixtures::r(0)]),
                (ActionProfile::from([1, 0]), alloc::vec![crate::fixtures::r(2), crate::fixtures::r(0)]),
            ],
        )
        .unwrap();
        let br = best_response_individual(&g, 1, &PartialProfile::two_player(1, 0)).unwrap();
        assert_eq!(br, set(&[0]));
    }

    #[test]
    fn profit_others_best_responses() {
        let g = g1();
        let br = best_response_profit_others(&g, 0, &PartialProfile::two_player(0, 0), SUM)
            .unwrap();
        assert_eq!(br, set(&[0]), "cooperating gives the opponent 3 over 1");

        let g = g2();
        let br = best_response_profit_others(&g, 0, &PartialProfile::two_player(0, 0), SUM)
            .unwrap();
        assert_eq!(br, set(&[0]), "blockade gives the column player 3 over 2");
    }

    #[test]
    fn loss_others_best_responses() {
        let g = g1();
        let br =
            best_response_loss_others(&g, 0, &PartialProfile::two_player(0, 0), SUM).unwrap();
        assert_eq!(br, set(&[1]), "defecting holds the opponent to 1");

        let g = g3();
        let br =
            best_response_loss_others(&g, 1, &PartialProfile::two_player(1, 1), SUM).unwrap();
        assert_eq!(br, set(&[1]), "column D holds the row player to 2");
    }

    #[test]
    fn constant_opponent_payoff_makes_every_action_best() {
        let g = build_2x2("flat", &["a", "b"], &["x", "y"], [[1, 7], [2, 7], [3, 7], [4, 7]]);
        for partial in [PartialProfile::two_player(0, 0), PartialProfile::two_player(0, 1)] {
            let k = best_response_profit_others(&g, 0, &partial, SUM).unwrap();
            let l = best_response_loss_others(&g, 0, &partial, SUM).unwrap();
            assert_eq!(k, set(&[0, 1]));
            assert_eq!(l, set(&[0, 1]));
        }
    }

    #[test]
    fn free_slot_mismatch_is_reported() {
        let g = g1();
        let err =
            best_response_individual(&g, 1, &PartialProfile::two_player(0, 0)).unwrap_err();
        assert_eq!(err, Error::FreeSlotMismatch { expected: 1, found: 0 });
    }

    #[test]
    fn g1_loss_dominance() {
        let report = dominance(&g1(), Orientation::LossOthers, SUM).unwrap();
        for dom in &report.players {
            assert_eq!(dom.strictly_dominant, vec![1]);
            assert_eq!(dom.strictly_dominated, vec![0]);
            // strict implies weak
            assert_eq!(dom.weakly_dominant, vec![1]);
            assert_eq!(dom.weakly_dominated, vec![0]);
        }
    }

    #[test]
    fn g1_profit_dominance_is_the_reverse() {
        let report = dominance(&g1(), Orientation::ProfitOthers, SUM).unwrap();
        for dom in &report.players {
            assert_eq!(dom.strictly_dominant, vec![0]);
            assert_eq!(dom.strictly_dominated, vec![1]);
        }
    }

    #[test]
    fn g3_individual_dominance_is_weak_only() {
        let report = dominance(&g3(), Orientation::IndividualProfit, SUM).unwrap();
        let row = &report.players[0];
        assert!(row.strictly_dominant.is_empty());
        assert_eq!(row.weakly_dominant, vec![0]);
        assert_eq!(row.weakly_dominated, vec![1]);
        assert!(row.strictly_dominated.is_empty());
        let col = &report.players[1];
        assert_eq!(col.weakly_dominant, vec![1]);
        assert_eq!(col.weakly_dominated, vec![0]);
    }

    #[test]
    fn g3_loss_dominance_is_strict() {
        let report = dominance(&g3(), Orientation::LossOthers, SUM).unwrap();
        for dom in &report.players {
            assert_eq!(dom.strictly_dominant, vec![1]);
            assert_eq!(dom.strictly_dominated, vec![0]);
        }
    }

    #[test]
    fn g2_us_dominance_toward_soviets() {
        // Row actions: B = 0, A = 1.
        let loss = dominance(&g2(), Orientation::LossOthers, SUM).unwrap();
        assert_eq!(loss.players[0].strictly_dominant, vec![1]);
        assert_eq!(loss.players[0].strictly_dominated, vec![0]);
        let profit = dominance(&g2(), Orientation::ProfitOthers, SUM).unwrap();
        assert_eq!(profit.players[0].strictly_dominant, vec![0]);
        assert_eq!(profit.players[0].strictly_dominated, vec![1]);
    }

    #[test]
    fn indifferent_game_has_no_dominance() {
        let g = build_2x2("flat", &["a", "b"], &["x", "y"], [[5, 5], [5, 5], [5, 5], [5, 5]]);
        for orientation in Orientation::SOLVER {
            let report = dominance(&g, orientation, SUM).unwrap();
            for dom in &report.players {
                assert!(dom.strictly_dominant.is_empty());
                assert!(dom.weakly_dominant.is_empty());
                assert!(dom.strictly_dominated.is_empty());
                assert!(dom.weakly_dominated.is_empty());
            }
        }
    }

    #[test]
    fn collective_orientation_is_rejected() {
        let err = dominance(&g1(), Orientation::CollectiveProfit, SUM).unwrap_err();
        assert_eq!(err, Error::UnsupportedOrientation(Orientation::CollectiveProfit));
    }

    #[test]
    fn g1_equilibria() {
        let g = g1();
        let report = equilibria(&g, SUM).unwrap();
        assert_eq!(report.entries.len(), 2);
        assert_eq!(classes(&report, &p2(&g, "C", "C")), vec!["K"]);
        assert_eq!(classes(&report, &p2(&g, "D", "D")), vec!["B", "L"]);
    }

    #[test]
    fn g2_equilibria() {
        let g = g2();
        let report = equilibria(&g, SUM).unwrap();
        assert_eq!(report.entries.len(), 2);
        assert_eq!(classes(&report, &p2(&g, "B", "W")), vec!["K"]);
        assert_eq!(classes(&report, &p2(&g, "A", "W")), vec!["L"]);
    }

    #[test]
    fn g3_equilibria() {
        let g = g3();
        let report = equilibria(&g, SUM).unwrap();
        assert_eq!(report.entries.len(), 3);
        assert_eq!(classes(&report, &p2(&g, "C", "C")), vec!["K"]);
        assert_eq!(classes(&report, &p2(&g, "C", "D")), vec!["B"]);
        assert_eq!(classes(&report, &p2(&g, "D", "D")), vec!["B", "L"]);
    }

    #[test]
    fn chicken_has_four_equilibria() {
        let g = chicken();
        let report = equilibria(&g, SUM).unwrap();
        assert_eq!(report.entries.len(), 4);
        assert_eq!(classes(&report, &p2(&g, "C", "C")), vec!["K"]);
        assert_eq!(classes(&report, &p2(&g, "C", "D")), vec!["B"]);
        assert_eq!(classes(&report, &p2(&g, "D", "C")), vec!["B"]);
        assert_eq!(classes(&report, &p2(&g, "D", "D")), vec!["L"]);
    }

    #[test]
    fn matching_pennies_has_no_equilibria() {
        let report = equilibria(&matching_pennies(), SUM).unwrap();
        assert!(report.entries.is_empty());
    }

    #[test]
    fn g3_hyper_equilibria() {
        let g = g3();
        let annotated = hyper_equilibria(&g, HyperMode::Annotated, SUM).unwrap();
        assert_eq!(annotated.len(), 1);
        assert_eq!(annotated[0].profile, p2(&g, "D", "D"));
        assert_eq!(annotated[0].pivots, vec![0, 1]);

        let strict = hyper_equilibria(&g, HyperMode::Strict, SUM).unwrap();
        let profiles: Vec<_> = strict.iter().map(|h| h.profile.clone()).collect();
        assert_eq!(profiles, vec![p2(&g, "C", "C"), p2(&g, "D", "D")]);
    }

    #[test]
    fn g1_and_g2_have_no_annotated_hyper_equilibria() {
        assert!(hyper_equilibria(&g1(), HyperMode::Annotated, SUM).unwrap().is_empty());
        assert!(hyper_equilibria(&g2(), HyperMode::Annotated, SUM).unwrap().is_empty());
    }

    #[test]
    fn oracle_matches_hand_checks() {
        let g = g1();
        assert!(oracle_check(&g, &p2(&g, "C", "C"), EquilibriumClass::OthersProfit, SUM).unwrap());
        assert!(
            !oracle_check(&g, &p2(&g, "C", "D"), EquilibriumClass::IndividualBenefit, SUM)
                .unwrap()
        );
    }

    #[test]
    fn oracle_agrees_with_equilibria_on_the_catalog() {
        for g in [g1(), g2(), g3(), chicken(), matching_pennies()] {
            let report = equilibria(&g, SUM).unwrap();
            for profile in g.profiles() {
                let tagged = report.classes_of(&profile);
                for class in EquilibriumClass::ALL {
                    assert_eq!(
                        oracle_check(&g, &profile, class, SUM).unwrap(),
                        tagged.contains(&class),
                        "game {} profile {:?} class {}",
                        g.name(),
                        profile,
                        class
                    );
                }
            }
        }
    }
}
