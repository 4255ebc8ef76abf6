use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over `{0, 1}`.
///
/// Symbols are stored one per byte with values `0` and `1`, which keeps
/// slicing and counting linear and allocation-free on words of tens of
/// millions of symbols.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            bits: Vec::with_capacity(capacity),
        }
    }

    /// Builds a word from raw symbols, rejecting anything other than 0 and 1.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidSymbol(char::from(b'0'.wrapping_add(b))));
        }
        Ok(Self { bits })
    }

    /// `0^n`
    pub fn zeros(n: usize) -> Self {
        Self { bits: vec![0; n] }
    }

    /// Decodes a word from its index in the length-`len` enumeration, most
    /// significant symbol first. Used for exhaustive sweeps.
    pub fn from_index(index: u64, len: usize) -> Self {
        debug_assert!(len < 64);
        let bits = (0..len)
            .map(|pos| ((index >> (len - 1 - pos)) & 1) as u8)
            .collect();
        Self { bits }
    }

    /// Every word of length exactly `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0..1u64 << len).map(move |index| Word::from_index(index, len))
    }

    /// Every word of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(Word::all_of_length)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    pub fn get(&self, index: usize) -> Option<u8> {
        self.bits.get(index).copied()
    }

    pub fn count_ones(&self) -> usize {
        count_ones(&self.bits)
    }

    pub fn contains_one(&self) -> bool {
        self.bits.contains(&1)
    }

    pub fn push(&mut self, bit: u8) {
        assert!(bit <= 1, "symbol {bit} is not binary");
        self.bits.push(bit);
    }

    pub fn extend_from_word(&mut self, other: &Word) {
        self.bits.extend_from_slice(&other.bits);
    }

    /// Appends `0^count`.
    pub fn push_zeros(&mut self, count: usize) {
        self.bits.resize(self.bits.len() + count, 0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Word::with_capacity(self.len() + other.len());
        out.extend_from_word(self);
        out.extend_from_word(other);
        out
    }

    /// Copies out the factor at `range`.
    pub fn slice(&self, range: Range<usize>) -> Result<Word> {
        if range.start > range.end || range.end > self.len() {
            return Err(Error::SegmentOutOfRange {
                start: range.start,
                end: range.end,
                len: self.len(),
            });
        }
        Ok(Word {
            bits: self.bits[range].to_vec(),
        })
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        factor.is_empty() || self.bits.windows(factor.len()).any(|w| w == factor.bits())
    }

    /// Maximal runs of equal symbols as `(symbol, length)` pairs.
    pub fn bit_runs(&self) -> Vec<(u8, usize)> {
        let mut runs: Vec<(u8, usize)> = Vec::new();
        for &b in &self.bits {
            match runs.last_mut() {
                Some((sym, len)) if *sym == b => *len += 1,
                _ => runs.push((b, 1)),
            }
        }
        runs
    }

    pub fn from_bit_runs(runs: &[(u8, usize)]) -> Result<Word> {
        let mut bits = Vec::with_capacity(runs.iter().map(|r| r.1).sum());
        for &(sym, len) in runs {
            if sym > 1 {
                return Err(Error::InvalidSymbol(char::from(b'0'.wrapping_add(sym))));
            }
            bits.resize(bits.len() + len, sym);
        }
        Ok(Word { bits })
    }
}

pub(crate) fn count_ones(bits: &[u8]) -> usize {
    bits.iter().map(|&b| b as usize).sum()
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { bits })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Bytes are 0/1, so shifting into ASCII is always valid UTF-8.
        let ascii: String = self.bits.iter().map(|&b| char::from(b'0' + b)).collect();
        f.write_str(&ascii)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 64 {
            write!(f, "Word(\"{self}\")")
        } else {
            write!(f, "Word(len={}, ones={})", self.len(), self.count_ones())
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Symbol occurrence counts of a word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParikhVector {
    pub zeros: usize,
    pub ones: usize,
}

pub fn parikh(w: &Word) -> ParikhVector {
    parikh_of(w.bits())
}

fn parikh_of(bits: &[u8]) -> ParikhVector {
    let ones = count_ones(bits);
    ParikhVector {
        zeros: bits.len() - ones,
        ones,
    }
}

/// True iff `w = st` with `t` a permutation of `s`.
///
/// Over a binary alphabet that is exactly: even length, and both halves carry
/// the same number of 1s. The empty word qualifies as `ε·ε`.
pub fn is_abelian_square(w: &Word) -> bool {
    if !w.len().is_multiple_of(2) {
        return false;
    }
    let (first, second) = w.bits().split_at(w.len() / 2);
    parikh_of(first) == parikh_of(second)
}

/// `w^k`; `power(w, 0)` is the empty word.
pub fn power(w: &Word, k: usize) -> Word {
    Word {
        bits: w.bits.repeat(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parikh_counts() {
        assert_eq!(parikh(&word("")), ParikhVector { zeros: 0, ones: 0 });
        assert_eq!(parikh(&word("1000")), ParikhVector { zeros: 3, ones: 1 });
        assert_eq!(parikh(&word("0110")), ParikhVector { zeros: 2, ones: 2 });
    }

    #[test]
    fn abelian_square_examples() {
        assert!(is_abelian_square(&word("")));
        assert!(is_abelian_square(&word("0110")));
        assert!(!is_abelian_square(&word("10")));
        assert!(is_abelian_square(&word("0101")));
        assert!(!is_abelian_square(&word("010")));
    }

    #[test]
    fn powers() {
        assert_eq!(power(&word("10"), 0), word(""));
        assert_eq!(power(&word("10"), 3), word("101010"));
        assert_eq!(power(&word("0100100"), 2), word("01001000100100"));
    }

    #[test]
    fn rejects_non_binary_input() {
        assert_eq!("0120".parse::<Word>(), Err(Error::InvalidSymbol('2')));
        assert!(Word::from_bits(vec![0, 2]).is_err());
    }

    #[test]
    fn slice_bounds() {
        let w = word("100100");
        assert_eq!(w.slice(1..3).unwrap(), word("00"));
        assert!(w.slice(4..7).is_err());
    }

    #[test]
    fn bit_runs_round_trip() {
        let w = word("1000100101");
        let runs = w.bit_runs();
        assert_eq!(
            runs,
            vec![(1, 1), (0, 3), (1, 1), (0, 2), (1, 1), (0, 1), (1, 1)]
        );
        assert_eq!(Word::from_bit_runs(&runs).unwrap(), w);
    }

    #[test]
    fn enumeration_by_index() {
        assert_eq!(Word::from_index(0b0110, 4), word("0110"));
        assert_eq!(Word::all_up_to(3).count(), 1 + 2 + 4 + 8);
    }

    #[test]
    fn serde_as_ascii() {
        let w = word("0110");
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "\"0110\"");
        assert_eq!(serde_json::from_str::<Word>(&json).unwrap(), w);
    }
}
