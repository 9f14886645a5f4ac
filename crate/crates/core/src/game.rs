//! The Mermin-GHZ game: three players, one input bit and one output bit each.
//!
//! Questions are promised to have even parity. A round is won when the
//! parity of the answers equals the OR of the inputs; questions off the
//! promise are always won.

use core::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Input bits `(x₁, x₂, x₃)`, one per player.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Question {
    pub x1: bool,
    pub x2: bool,
    pub x3: bool,
}

impl Question {
    pub const fn new(x1: bool, x2: bool, x3: bool) -> Self {
        Self { x1, x2, x3 }
    }

    /// Decodes `4·x₁ + 2·x₂ + x₃`.
    pub const fn from_index(index: u8) -> Self {
        Self::new(index & 4 != 0, index & 2 != 0, index & 1 != 0)
    }

    pub const fn index(&self) -> u8 {
        (self.x1 as u8) << 2 | (self.x2 as u8) << 1 | self.x3 as u8
    }

    /// Input bit of `player` (0, 1 or 2).
    ///
    /// # Panics
    ///
    /// If `player > 2`.
    pub fn bit(&self, player: usize) -> bool {
        self.bits()[player]
    }

    pub const fn bits(&self) -> [bool; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub const fn from_bits(b: [bool; 3]) -> Self {
        Self::new(b[0], b[1], b[2])
    }

    pub const fn any(&self) -> bool {
        self.x1 | self.x2 | self.x3
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.x1 as u8, self.x2 as u8, self.x3 as u8)
    }
}

/// Output bits `(a₁, a₂, a₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Answer {
    pub a1: bool,
    pub a2: bool,
    pub a3: bool,
}

impl Answer {
    pub const fn new(a1: bool, a2: bool, a3: bool) -> Self {
        Self { a1, a2, a3 }
    }

    /// Decodes a measurement outcome index `4·a₁ + 2·a₂ + a₃`.
    pub const fn from_index(index: u8) -> Self {
        Self::new(index & 4 != 0, index & 2 != 0, index & 1 != 0)
    }

    pub const fn index(&self) -> u8 {
        (self.a1 as u8) << 2 | (self.a2 as u8) << 1 | self.a3 as u8
    }

    pub const fn bits(&self) -> [bool; 3] {
        [self.a1, self.a2, self.a3]
    }

    pub const fn from_bits(b: [bool; 3]) -> Self {
        Self::new(b[0], b[1], b[2])
    }

    pub const fn parity(&self) -> bool {
        self.a1 ^ self.a2 ^ self.a3
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.a1 as u8, self.a2 as u8, self.a3 as u8)
    }
}

/// The four promise questions in canonical order.
pub const PROMISE: [Question; 4] = [
    Question::new(false, false, false),
    Question::new(false, true, true),
    Question::new(true, false, true),
    Question::new(true, true, false),
];

pub fn promise_holds(q: Question) -> bool {
    !(q.x1 ^ q.x2 ^ q.x3)
}

pub fn enumerate_promise() -> [Question; 4] {
    PROMISE
}

/// Position of `q` in [`PROMISE`], if it satisfies the promise.
pub fn promise_position(q: Question) -> Option<usize> {
    PROMISE.iter().position(|p| *p == q)
}

pub fn wins(q: Question, a: Answer) -> bool {
    !promise_holds(q) || a.parity() == q.any()
}

/// Basis indices of the measurement outcomes that win on `q`, ascending.
pub fn winning_outcome_indices(q: Question) -> Result<[usize; 4]> {
    if !promise_holds(q) {
        return Err(Error::OffPromise(q));
    }
    let mut out = [0usize; 4];
    let mut n = 0;
    for i in 0..8u8 {
        if wins(q, Answer::from_index(i)) {
            out[n] = i as usize;
            n += 1;
        }
    }
    debug_assert_eq!(n, 4);
    Ok(out)
}

/// A map from an input bit to an output bit, stored as its truth table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BitMap {
    /// `table[x]` is the output on input `x`.
    pub table: [bool; 2],
}

impl BitMap {
    pub const ALL: [BitMap; 4] = [
        BitMap::new(false, false),
        BitMap::new(true, true),
        BitMap::new(false, true),
        BitMap::new(true, false),
    ];

    pub const fn new(on_zero: bool, on_one: bool) -> Self {
        Self { table: [on_zero, on_one] }
    }

    pub const fn constant(b: bool) -> Self {
        Self::new(b, b)
    }

    pub const fn apply(&self, x: bool) -> bool {
        self.table[x as usize]
    }
}

impl fmt::Display for BitMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.table {
            [false, false] => "const 0",
            [true, true] => "const 1",
            [false, true] => "identity",
            [true, false] => "negation",
        };
        f.write_str(name)
    }
}

/// One local function per player.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeterministicStrategy {
    pub maps: [BitMap; 3],
}

impl DeterministicStrategy {
    pub const fn new(f1: BitMap, f2: BitMap, f3: BitMap) -> Self {
        Self { maps: [f1, f2, f3] }
    }

    pub fn answer(&self, q: Question) -> Answer {
        let x = q.bits();
        Answer::new(
            self.maps[0].apply(x[0]),
            self.maps[1].apply(x[1]),
            self.maps[2].apply(x[2]),
        )
    }

    /// Fraction of promise questions answered correctly.
    pub fn success(&self) -> Ratio<u32> {
        let won = PROMISE.iter().filter(|&&q| wins(q, self.answer(q))).count() as u32;
        Ratio::new(won, PROMISE.len() as u32)
    }

    /// All 4³ strategy triples.
    pub fn all() -> impl Iterator<Item = DeterministicStrategy> {
        BitMap::ALL.into_iter().flat_map(|f1| {
            BitMap::ALL.into_iter().flat_map(move |f2| {
                BitMap::ALL.into_iter().map(move |f3| DeterministicStrategy::new(f1, f2, f3))
            })
        })
    }
}

impl fmt::Display for DeterministicStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "player1: {}, player2: {}, player3: {}",
            self.maps[0], self.maps[1], self.maps[2]
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalAnalysis {
    pub omega_d: Ratio<u32>,
    pub optimal_count: usize,
    pub witness: DeterministicStrategy,
}

/// Exhaustive search for the best deterministic strategy.
///
/// Randomized strategies are mixtures of deterministic ones and never beat
/// this value on uniformly drawn promise questions.
pub fn classical_optimum() -> ClassicalAnalysis {
    let mut best: Option<ClassicalAnalysis> = None;
    for s in DeterministicStrategy::all() {
        let v = s.success();
        match &mut best {
            Some(b) if v < b.omega_d => {}
            Some(b) if v == b.omega_d => b.optimal_count += 1,
            _ => {
                best = Some(ClassicalAnalysis {
                    omega_d: v,
                    optimal_count: 1,
                    witness: s,
                })
            }
        }
    }
    best.expect("strategy space is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x1: u8, x2: u8, x3: u8) -> Question {
        Question::new(x1 == 1, x2 == 1, x3 == 1)
    }

    fn a(a1: u8, a2: u8, a3: u8) -> Answer {
        Answer::new(a1 == 1, a2 == 1, a3 == 1)
    }

    #[test]
    fn promise() {
        assert!(promise_holds(q(0, 0, 0)));
        assert!(promise_holds(q(1, 1, 0)));
        assert!(!promise_holds(q(1, 0, 0)));
    }

    #[test]
    fn promise_enumeration() {
        let p = enumerate_promise();
        assert_eq!(p, [q(0, 0, 0), q(0, 1, 1), q(1, 0, 1), q(1, 1, 0)]);
        assert!(p.iter().all(|&x| promise_holds(x)));
        for i in 0..4 {
            for j in i + 1..4 {
                assert_ne!(p[i], p[j]);
            }
        }
        let count = (0..8u8).map(Question::from_index).filter(|&x| promise_holds(x)).count();
        assert_eq!(count, 4);
    }

    #[test]
    fn winning_condition() {
        assert!(wins(q(0, 0, 0), a(0, 1, 1)));
        assert!(!wins(q(1, 1, 0), a(0, 0, 0)));
        for i in 0..8 {
            assert!(wins(q(1, 0, 0), Answer::from_index(i)));
        }
    }

    #[test]
    fn winning_sets() {
        assert_eq!(winning_outcome_indices(q(0, 0, 0)).unwrap(), [0, 3, 5, 6]);
        assert_eq!(winning_outcome_indices(q(1, 1, 0)).unwrap(), [1, 2, 4, 7]);
        assert_eq!(winning_outcome_indices(q(0, 1, 1)).unwrap(), [1, 2, 4, 7]);
        assert_eq!(
            winning_outcome_indices(q(1, 0, 0)),
            Err(Error::OffPromise(q(1, 0, 0)))
        );
    }

    #[test]
    fn winning_sets_closed_under_double_flips() {
        for p in PROMISE {
            let set = winning_outcome_indices(p).unwrap();
            for &i in &set {
                for flip in [0b011, 0b101, 0b110] {
                    assert!(set.contains(&(i ^ flip)));
                }
            }
        }
    }

    #[test]
    fn classical_value_is_three_quarters() {
        let c = classical_optimum();
        assert_eq!(c.omega_d, Ratio::new(3, 4));
        assert_eq!(c.witness.success(), c.omega_d);
        assert!(c.optimal_count >= 1);
        assert_eq!(DeterministicStrategy::all().count(), 64);
        assert!(DeterministicStrategy::all().all(|s| s.success() < Ratio::from_integer(1)));
    }

    #[test]
    fn named_strategies() {
        let zero = BitMap::constant(false);
        let one = BitMap::constant(true);
        let all_zero = DeterministicStrategy::new(zero, zero, zero);
        assert_eq!(all_zero.success(), Ratio::new(1, 4));
        let first_one = DeterministicStrategy::new(one, zero, zero);
        assert_eq!(first_one.success(), Ratio::new(3, 4));
    }

    #[test]
    fn display() {
        assert_eq!(std::format!("{}", q(1, 0, 1)), "101");
        assert_eq!(q(1, 0, 1).index(), 5);
        assert_eq!(Answer::from_index(6), a(1, 1, 0));
    }

    proptest! {
        #[test]
        fn wins_is_player_symmetric(qi in 0u8..8, ai in 0u8..8, perm in 0usize..6) {
            const PERMS: [[usize; 3]; 6] =
                [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let p = PERMS[perm];
            let (qb, ab) = (Question::from_index(qi).bits(), Answer::from_index(ai).bits());
            let qp = Question::from_bits([qb[p[0]], qb[p[1]], qb[p[2]]]);
            let ap = Answer::from_bits([ab[p[0]], ab[p[1]], ab[p[2]]]);
            prop_assert_eq!(
                wins(Question::from_index(qi), Answer::from_index(ai)),
                wins(qp, ap)
            );
        }
    }
}
