use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::Word;

/// `z = u v w x y` given by cuts `i1 <= i2 <= i3 <= i4` into a word of
/// known length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    cuts: [usize; 4],
    len: usize,
}

impl Decomposition {
    pub fn new(cuts: [usize; 4], len: usize) -> Result<Self> {
        let ordered = cuts.windows(2).all(|pair| pair[0] <= pair[1]);
        if !ordered || cuts[3] > len {
            return Err(Error::InvalidCuts { cuts, len });
        }
        Ok(Self { cuts, len })
    }

    pub fn cuts(&self) -> [usize; 4] {
        self.cuts
    }

    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn u(&self) -> Range<usize> {
        0..self.cuts[0]
    }

    pub fn v(&self) -> Range<usize> {
        self.cuts[0]..self.cuts[1]
    }

    pub fn w(&self) -> Range<usize> {
        self.cuts[1]..self.cuts[2]
    }

    pub fn x(&self) -> Range<usize> {
        self.cuts[2]..self.cuts[3]
    }

    pub fn y(&self) -> Range<usize> {
        self.cuts[3]..self.len
    }

    /// The contiguous factor `v w x`.
    pub fn span(&self) -> Range<usize> {
        self.cuts[0]..self.cuts[3]
    }

    /// `|v| + |x|`
    pub fn pumped_len(&self) -> usize {
        self.v().len() + self.x().len()
    }

    pub fn pumps_nothing(&self) -> bool {
        self.pumped_len() == 0
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Decomposition({:?} of {})", self.cuts, self.len)
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.cuts.serialize(serializer)
    }
}

/// `u v^i w x^i y`, fully materialized.
pub fn pump(z: &Word, d: &Decomposition, i: usize) -> Word {
    assert_eq!(
        z.len(),
        d.word_len(),
        "decomposition belongs to another word"
    );
    let bits = z.bits();
    let mut out = Vec::with_capacity(z.len() - d.pumped_len() + i * d.pumped_len());
    out.extend_from_slice(&bits[d.u()]);
    for _ in 0..i {
        out.extend_from_slice(&bits[d.v()]);
    }
    out.extend_from_slice(&bits[d.w()]);
    for _ in 0..i {
        out.extend_from_slice(&bits[d.x()]);
    }
    out.extend_from_slice(&bits[d.y()]);
    Word::from_bits(out).expect("factors of a binary word are binary")
}
