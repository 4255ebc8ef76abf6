use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: words are over the alphabet {{0, 1}}")]
    InvalidSymbol(char),

    #[error("alt is undefined for an empty set of words")]
    EmptyLanguage,

    #[error("word {0:?} contains no 1, so evenness is undefined")]
    NoOnes(String),

    #[error("word {0:?} is uneven and has no even form")]
    Uneven(String),

    #[error("block index must be at least 2, got {0}")]
    BlockIndex(usize),

    #[error("witness order must be in 1..={max}, got {n}")]
    WitnessOrder { n: u64, max: u64 },

    #[error("witness for n = {n} has {len} symbols, above the materialization limit of {limit}")]
    WitnessTooLong { n: u64, len: u64, limit: u64 },

    #[error("closed forms need n >= 3, got {0}")]
    CountingOrder(u64),

    #[error("segment {start}..{end} is outside a word of length {len}")]
    SegmentOutOfRange {
        start: usize,
        end: usize,
        len: usize,
    },

    #[error("cut indices {cuts:?} are not non-decreasing within a word of length {len}")]
    InvalidCuts { cuts: [usize; 4], len: usize },

    #[error("decomposition pumps nothing: v and x are both empty")]
    EmptyPump,

    #[error("decomposition {cuts:?} violates condition {condition}")]
    ConditionViolated { cuts: [usize; 4], condition: char },

    #[error("classifier reached a branch the case analysis rules out: {0}")]
    Unreachable(String),
}
