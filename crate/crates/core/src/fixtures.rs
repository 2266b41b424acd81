//! Hand-built games the unit tests share.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::game::{ActionProfile, Rational, StrategicGame};

pub fn r(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// 2x2 helper; payoff rows in lexicographic profile order
/// (0,0), (0,1), (1,0), (1,1).
pub fn build_2x2(
    name: &str,
    row_actions: &[&str],
    col_actions: &[&str],
    payoffs: [[i64; 2]; 4],
) -> StrategicGame {
    StrategicGame::build(
        name,
        labels(&["P1", "P2"]),
        vec![labels(row_actions), labels(col_actions)],
        payoffs.iter().enumerate().map(|(rank, pair)| {
            (
                ActionProfile::from([rank / 2, rank % 2]),
                vec![r(pair[0]), r(pair[1])],
            )
        }),
    )
    .unwrap()
}

/// Prisoner's dilemma.
pub fn g1() -> StrategicGame {
    build_2x2("g1", &["C", "D"], &["C", "D"], [[3, 3], [1, 4], [4, 1], [2, 2]])
}

/// Missile crisis: P1 rows B (blockade), A (air strike); P2 columns
/// W (withdraw), M (maintain).
pub fn g2() -> StrategicGame {
    build_2x2("g2", &["B", "A"], &["W", "M"], [[3, 3], [1, 4], [2, 2], [4, 1]])
}

/// Trickery game.
pub fn g3() -> StrategicGame {
    build_2x2("g3", &["C", "D"], &["C", "D"], [[4, 3], [2, 4], [3, 1], [2, 1]])
}

pub fn chicken() -> StrategicGame {
    build_2x2("chicken", &["C", "D"], &["C", "D"], [[3, 3], [2, 4], [4, 2], [1, 1]])
}

pub fn matching_pennies() -> StrategicGame {
    build_2x2(
        "matching-pennies",
        &["H", "T"],
        &["H", "T"],
        [[1, -1], [-1, 1], [-1, 1], [1, -1]],
    )
}

/// Profile from label pairs of a 2x2 fixture, e.g. `p2(&g, "D", "C")`.
pub fn p2(game: &StrategicGame, a: &str, b: &str) -> ActionProfile {
    ActionProfile::from([
        game.action_index(0, a).unwrap(),
        game.action_index(1, b).unwrap(),
    ])
}
