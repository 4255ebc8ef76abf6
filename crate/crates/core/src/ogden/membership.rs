//! Membership of pumped words `u v^i w x^i y` in `T` without building them.
//!
//! `R` is recognized by a small deterministic automaton. Its transition
//! functions compose, so the effect of `v^i` is the `i`-th power of the
//! function of `v`, computed by repeated squaring. Parity and the abelian
//! test only need 1-counts, which follow from prefix sums over `z`.

use std::ops::Range;

use super::Decomposition;
use crate::witness::Rejection;
use crate::words::Word;

const STATES: usize = 14;
const START: u8 = 0;
const DEAD: u8 = 13;

/// Recognizer for `R = w4* w3 w2* w3 w3*`.
///
/// Besides the start and dead states, a state records the current phase
/// (inside `w4*`, inside `w2*`, inside the trailing `w3*`) and how many zeros
/// followed the most recent 1, capped at 3.
#[derive(Debug, Clone, Copy, Default)]
pub struct RAutomaton;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    Leading,
    Middle,
    Trailing,
}

impl Phase {
    const ALL: [Phase; 3] = [Phase::Leading, Phase::Middle, Phase::Trailing];

    /// Phase after closing a block whose 1 was followed by `gap` zeros.
    fn after_block(self, gap: u8) -> Option<Phase> {
        match (self, gap) {
            (Phase::Leading, 3) => Some(Phase::Leading),
            (Phase::Leading, 2) => Some(Phase::Middle),
            (Phase::Middle, 1) => Some(Phase::Middle),
            (Phase::Middle, 2) => Some(Phase::Trailing),
            (Phase::Trailing, 2) => Some(Phase::Trailing),
            _ => None,
        }
    }
}

fn encode(phase: Phase, gap: u8) -> u8 {
    1 + 4 * phase as u8 + gap
}

fn decode(state: u8) -> Option<(Phase, u8)> {
    if state == START || state == DEAD {
        return None;
    }
    let idx = state - 1;
    Some((Phase::ALL[(idx / 4) as usize], idx % 4))
}

impl RAutomaton {
    pub const START: u8 = START;
    pub const DEAD: u8 = DEAD;

    pub fn step(state: u8, bit: u8) -> u8 {
        if state == START {
            return if bit == 1 {
                encode(Phase::Leading, 0)
            } else {
                DEAD
            };
        }
        let Some((phase, gap)) = decode(state) else {
            return DEAD;
        };
        match bit {
            0 if gap < 3 => encode(phase, gap + 1),
            0 => DEAD,
            _ => phase.after_block(gap).map_or(DEAD, |next| encode(next, 0)),
        }
    }

    pub fn is_accepting(state: u8) -> bool {
        decode(state).is_some_and(|(phase, gap)| phase.after_block(gap) == Some(Phase::Trailing))
    }

    pub fn accepts(w: &Word) -> bool {
        Self::is_accepting(w.bits().iter().fold(START, |q, &b| Self::step(q, b)))
    }

    fn accepting_mask() -> u16 {
        (0..STATES as u8)
            .filter(|&q| Self::is_accepting(q))
            .fold(0, |mask, q| mask | 1 << q)
    }
}

/// A total function on automaton states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Transition([u8; STATES]);

impl Transition {
    fn identity() -> Self {
        let mut map = [0u8; STATES];
        for (q, slot) in map.iter_mut().enumerate() {
            *slot = q as u8;
        }
        Transition(map)
    }

    fn of_bits(bits: &[u8]) -> Self {
        bits.iter().fold(Self::identity(), |t, &b| t.then_bit(b))
    }

    fn then_bit(self, bit: u8) -> Self {
        Transition(self.0.map(|q| RAutomaton::step(q, bit)))
    }

    /// `self` followed by `next`.
    fn then(self, next: &Transition) -> Self {
        Transition(self.0.map(|q| next.0[q as usize]))
    }

    fn apply(&self, state: u8) -> u8 {
        self.0[state as usize]
    }

    fn apply_power(&self, mut state: u8, mut exponent: u64) -> u8 {
        let mut base = *self;
        while exponent > 0 {
            if exponent & 1 == 1 {
                state = base.apply(state);
            }
            base = base.then(&base);
            exponent >>= 1;
        }
        state
    }
}

const FANOUT: usize = 16;

/// Transition functions of aligned chunks of `z`, at sizes 16, 256, 4096...
/// Any factor decomposes into a few of them plus at most 15 loose symbols
/// on each side per level.
#[derive(Debug, Clone)]
struct SegmentIndex {
    levels: Vec<Vec<Transition>>,
}

impl SegmentIndex {
    fn new(bits: &[u8]) -> Self {
        let mut levels: Vec<Vec<Transition>> = Vec::new();
        let base: Vec<Transition> = bits.chunks_exact(FANOUT).map(Transition::of_bits).collect();
        if base.is_empty() {
            return Self { levels };
        }
        levels.push(base);
        loop {
            let next: Vec<Transition> = levels
                .last()
                .expect("non-empty")
                .chunks_exact(FANOUT)
                .map(|chunk| {
                    chunk
                        .iter()
                        .fold(Transition::identity(), |acc, t| acc.then(t))
                })
                .collect();
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        Self { levels }
    }

    fn segment(&self, bits: &[u8], range: Range<usize>) -> Transition {
        let mut acc = Transition::identity();
        let mut pos = range.start;
        'walk: while pos < range.end {
            let mut size = FANOUT.pow(self.levels.len() as u32);
            for level in self.levels.iter().rev() {
                if pos.is_multiple_of(size) && pos + size <= range.end {
                    acc = acc.then(&level[pos / size]);
                    pos += size;
                    continue 'walk;
                }
                size /= FANOUT;
            }
            acc = acc.then_bit(bits[pos]);
            pos += 1;
        }
        acc
    }
}

/// Precomputed tables over a fixed word `z` answering whether
/// `u v^i w x^i y` lies in `T` in time logarithmic in `i`.
#[derive(Debug, Clone)]
pub struct PumpIndex<'z> {
    z: &'z Word,
    /// Automaton state after reading `z[..j]`.
    prefix_state: Vec<u8>,
    /// States from which reading `z[j..]` ends in acceptance, as a bitmask.
    accept_from: Vec<u16>,
    segments: SegmentIndex,
    prefix_ones: Vec<u32>,
}

impl<'z> PumpIndex<'z> {
    pub fn new(z: &'z Word) -> Self {
        let bits = z.bits();
        assert!(bits.len() < u32::MAX as usize, "word too long to index");

        let mut prefix_state = Vec::with_capacity(bits.len() + 1);
        let mut q = START;
        prefix_state.push(q);
        for &b in bits {
            q = RAutomaton::step(q, b);
            prefix_state.push(q);
        }

        let mut accept_from = vec![0u16; bits.len() + 1];
        accept_from[bits.len()] = RAutomaton::accepting_mask();
        for j in (0..bits.len()).rev() {
            let later = accept_from[j + 1];
            accept_from[j] = (0..STATES as u8)
                .filter(|&q| later >> RAutomaton::step(q, bits[j]) & 1 == 1)
                .fold(0, |mask, q| mask | 1 << q);
        }

        let mut prefix_ones = Vec::with_capacity(bits.len() + 1);
        let mut ones = 0u32;
        prefix_ones.push(0);
        for &b in bits {
            ones += b as u32;
            prefix_ones.push(ones);
        }

        Self {
            z,
            prefix_state,
            accept_from,
            segments: SegmentIndex::new(bits),
            prefix_ones,
        }
    }

    pub fn word(&self) -> &'z Word {
        self.z
    }

    fn ones(&self, range: Range<usize>) -> u64 {
        (self.prefix_ones[range.end] - self.prefix_ones[range.start]) as u64
    }

    pub fn pumped_length(&self, d: &Decomposition, i: u64) -> u64 {
        (self.z.len() - d.pumped_len()) as u64 + i * d.pumped_len() as u64
    }

    pub fn pumped_in_r(&self, d: &Decomposition, i: u64) -> bool {
        let bits = self.z.bits();
        let mut q = self.prefix_state[d.v().start];
        q = self.segments.segment(bits, d.v()).apply_power(q, i);
        q = self.segments.segment(bits, d.w()).apply(q);
        q = self.segments.segment(bits, d.x()).apply_power(q, i);
        self.accept_from[d.y().start] >> q & 1 == 1
    }

    /// 1s among the first `len` symbols of the pumped word.
    fn pumped_prefix_ones(&self, d: &Decomposition, i: u64, mut len: u64) -> u64 {
        let pieces = [(d.u(), 1), (d.v(), i), (d.w(), 1), (d.x(), i), (d.y(), 1)];
        let mut ones = 0;
        for (range, reps) in pieces {
            let piece_len = range.len() as u64;
            if piece_len == 0 || reps == 0 {
                continue;
            }
            let piece_ones = self.ones(range.clone());
            if len >= piece_len * reps {
                ones += piece_ones * reps;
                len -= piece_len * reps;
            } else {
                let (whole, rest) = (len / piece_len, len % piece_len);
                ones += piece_ones * whole;
                ones += self.ones(range.start..range.start + rest as usize);
                return ones;
            }
        }
        ones
    }

    pub fn pumped_is_abelian_square(&self, d: &Decomposition, i: u64) -> bool {
        let total = self.pumped_length(d, i);
        if !total.is_multiple_of(2) {
            return false;
        }
        let all = self.pumped_prefix_ones(d, i, total);
        2 * self.pumped_prefix_ones(d, i, total / 2) == all
    }

    /// First failing check for `u v^i w x^i y ∈ T`, in the same order as
    /// [`crate::witness::t_rejection`].
    pub fn rejection(&self, d: &Decomposition, i: u64) -> Option<Rejection> {
        assert_eq!(
            d.word_len(),
            self.z.len(),
            "decomposition belongs to another word"
        );
        if !self.pumped_length(d, i).is_multiple_of(2) {
            Some(Rejection::OddLength)
        } else if !self.pumped_in_r(d, i) {
            Some(Rejection::NotInR)
        } else if self.pumped_is_abelian_square(d, i) {
            Some(Rejection::AbelianSquare)
        } else {
            None
        }
    }
}
