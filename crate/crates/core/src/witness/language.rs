use serde::{Deserialize, Serialize};

use crate::words::{is_abelian_square, run_form, Word};

/// Exponents of a member of `R`: `w4^a w3 w2^b w3 w3^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RParse {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl RParse {
    pub fn reconstruct(&self) -> Word {
        let len = 4 * self.a + 3 + 2 * self.b + 3 + 3 * self.c;
        let mut w = Word::with_capacity(len as usize);
        let mut block = |i: usize, times: u64| {
            for _ in 0..times {
                w.push(1);
                w.push_zeros(i - 1);
            }
        };
        block(4, self.a);
        block(3, 1);
        block(2, self.b);
        block(3, 1 + self.c);
        w
    }

    pub fn ones(&self) -> u64 {
        self.a + self.b + self.c + 2
    }
}

/// Parses `w` against `R`, returning its exponents when it is a member.
///
/// Every block of `R` is a single 1 followed by its zeros, so the word is read
/// as the sequence of gaps after each 1: `3^a 2 1^b 2 2^c`. That sequence
/// pins the parse down uniquely.
pub fn parse_r(w: &Word) -> Option<RParse> {
    let runs = run_form(w).zero_runs;
    if runs[0] != 0 {
        return None;
    }
    let mut gaps = GapScanner {
        gaps: &runs[1..],
        pos: 0,
    };
    let a = gaps.repeats(3);
    gaps.exactly(2)?;
    let b = gaps.repeats(1);
    gaps.exactly(2)?;
    let c = gaps.repeats(2);
    gaps.finished().then_some(RParse { a, b, c })
}

struct GapScanner<'a> {
    gaps: &'a [usize],
    pos: usize,
}

impl GapScanner<'_> {
    fn repeats(&mut self, gap: usize) -> u64 {
        let start = self.pos;
        while self.gaps.get(self.pos) == Some(&gap) {
            self.pos += 1;
        }
        (self.pos - start) as u64
    }

    fn exactly(&mut self, gap: usize) -> Option<()> {
        (self.gaps.get(self.pos) == Some(&gap)).then(|| self.pos += 1)
    }

    fn finished(&self) -> bool {
        self.pos == self.gaps.len()
    }
}

/// Why a word falls outside `T`, in the order the checks are made.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rejection {
    OddLength,
    NotInR,
    AbelianSquare,
}

impl Rejection {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rejection::OddLength => "OddLength",
            Rejection::NotInR => "NotInR",
            Rejection::AbelianSquare => "AbelianSquare",
        }
    }
}

/// The first failing membership check for `T`, or `None` when `w ∈ T`.
pub fn t_rejection(w: &Word) -> Option<Rejection> {
    if !w.len().is_multiple_of(2) {
        Some(Rejection::OddLength)
    } else if parse_r(w).is_none() {
        Some(Rejection::NotInR)
    } else if is_abelian_square(w) {
        Some(Rejection::AbelianSquare)
    } else {
        None
    }
}

pub fn in_t(w: &Word) -> bool {
    t_rejection(w).is_none()
}
