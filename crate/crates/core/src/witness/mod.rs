//! The concrete objects of the construction: block words `w_i = 1 0^{i-1}`,
//! the regular envelope `R = w4* w3 w2* w3 w3*`, the witness family
//! `z_n = w4^n w3 w2^{n!+n} w3 w3^{2(n!+n)}`, and membership in
//! `T = L ∩ (Σ²)* ∩ R` where `L` is the set of binary non-abelian-squares.

mod counting;
mod language;

pub use counting::{lemma3_report, CountingReport};
pub use language::{in_t, parse_r, t_rejection, RParse, Rejection};

use crate::error::{Error, Result};
use crate::words::Word;

/// Largest witness order accepted anywhere in the crate.
pub const MAX_ORDER: u64 = 12;

/// Witnesses longer than this are described arithmetically but never built.
pub const MATERIALIZE_LIMIT: u64 = 1 << 28;

/// Smallest order for which the non-context-freeness argument applies.
pub const PROOF_THRESHOLD: u64 = 5;

/// `w_i = 1 0^{i-1}` for `i >= 2`.
pub fn block(i: usize) -> Result<Word> {
    if i < 2 {
        return Err(Error::BlockIndex(i));
    }
    let mut w = Word::with_capacity(i);
    push_block(&mut w, i);
    Ok(w)
}

fn push_block(w: &mut Word, i: usize) {
    w.push(1);
    w.push_zeros(i - 1);
}

pub fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Shape parameters of `z_n`, available without building the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WitnessSpec {
    pub n: u64,
    pub factorial: u64,
    /// `n! + n`, the number of `w2` blocks.
    pub green_count: u64,
    /// `2(n! + n)`, the number of `w3` blocks after the second `w3`.
    pub black_count: u64,
    pub total_length: u64,
}

impl WitnessSpec {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::WitnessOrder { n, max: MAX_ORDER });
        }
        let factorial = factorial(n).expect("n <= 12 fits in u64");
        let green_count = factorial + n;
        let black_count = 2 * green_count;
        let total_length = 4 * n + 3 + 2 * green_count + 3 + 3 * black_count;
        Ok(Self {
            n,
            factorial,
            green_count,
            black_count,
            total_length,
        })
    }

    /// True when `n` is below the order the argument needs.
    pub fn sub_threshold(&self) -> bool {
        self.n < PROOF_THRESHOLD
    }

    pub fn len(&self) -> usize {
        self.total_length as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Block indices of `z_n` in order.
    pub fn blocks(&self) -> impl Iterator<Item = usize> {
        let n = self.n as usize;
        let green = self.green_count as usize;
        let black = self.black_count as usize;
        std::iter::repeat_n(4, n)
            .chain(std::iter::once(3))
            .chain(std::iter::repeat_n(2, green))
            .chain(std::iter::repeat_n(3, 1 + black))
    }

    pub fn r_parse(&self) -> RParse {
        RParse {
            a: self.n,
            b: self.green_count,
            c: self.black_count,
        }
    }

    pub fn build(&self) -> Result<Word> {
        if self.total_length > MATERIALIZE_LIMIT {
            return Err(Error::WitnessTooLong {
                n: self.n,
                len: self.total_length,
                limit: MATERIALIZE_LIMIT,
            });
        }
        let mut w = Word::with_capacity(self.len());
        for i in self.blocks() {
            push_block(&mut w, i);
        }
        debug_assert_eq!(w.len(), self.len());
        Ok(w)
    }
}

/// `z_n = w4^n w3 w2^{n!+n} w3 w3^{2(n!+n)}`.
///
/// Orders below 5 build fine; callers that report on them should consult
/// [`WitnessSpec::sub_threshold`].
pub fn build_witness(n: u64) -> Result<Word> {
    WitnessSpec::new(n)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parikh;

    #[test]
    fn blocks() {
        assert_eq!(block(2).unwrap().to_string(), "10");
        assert_eq!(block(3).unwrap().to_string(), "100");
        assert_eq!(block(4).unwrap().to_string(), "1000");
        assert_eq!(block(1), Err(Error::BlockIndex(1)));
        assert_eq!(block(0), Err(Error::BlockIndex(0)));
    }

    #[test]
    fn witness_two_by_hand() {
        // w4 w4 | w3 | w2^4 | w3 | w3^8
        let expected = format!(
            "{}{}{}{}{}",
            "10001000",
            "100",
            "10".repeat(4),
            "100",
            "100".repeat(8)
        );
        let z = build_witness(2).unwrap();
        assert_eq!(z.to_string(), expected);
        assert_eq!(z.len(), 46);
    }

    #[test]
    fn witness_five_measurements() {
        let z = build_witness(5).unwrap();
        assert_eq!(z.len(), 1026);
        assert_eq!(parikh(&z).ones, 382);
        assert_eq!(WitnessSpec::new(5).unwrap().total_length, 1026);
    }

    #[test]
    fn spec_lengths_match_built_words() {
        for n in 1..=8 {
            let spec = WitnessSpec::new(n).unwrap();
            assert_eq!(spec.build().unwrap().len() as u64, spec.total_length);
            assert_eq!(spec.total_length, 4 * n + 6 + 8 * (spec.factorial + n));
            assert_eq!(spec.total_length % 2, 0);
        }
    }

    #[test]
    fn order_limits() {
        assert!(matches!(
            WitnessSpec::new(0),
            Err(Error::WitnessOrder { .. })
        ));
        assert!(matches!(
            WitnessSpec::new(13),
            Err(Error::WitnessOrder { .. })
        ));
        let spec = WitnessSpec::new(12).unwrap();
        assert!(matches!(spec.build(), Err(Error::WitnessTooLong { .. })));
        assert!(WitnessSpec::new(4).unwrap().sub_threshold());
        assert!(!WitnessSpec::new(5).unwrap().sub_threshold());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), Some(1));
        assert_eq!(factorial(5), Some(120));
        assert_eq!(factorial(12), Some(479_001_600));
        assert_eq!(factorial(21), None);
    }
}
