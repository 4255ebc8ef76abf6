//! Ogden's-lemma machinery over the marked witness `z_n`: the four-color
//! marking, conditions A and B, pumping, the case classifier, prescribed pump
//! exponents, a verified refuter, and decomposition enumeration.
//!
//! Every refutation is established by re-testing membership of the pumped
//! word in `T`; the classifier only chooses which exponent to try first.

mod classify;
mod coloring;
mod decomposition;
mod enumerate;
mod membership;
mod refute;
mod verify;

pub use classify::{classify, prescribed_i, CaseLabel, CaseParams, Leaf};
pub use coloring::{color_counts, cond_a, cond_b, Color, ColorCounts, Coloring};
pub use decomposition::{pump, Decomposition};
pub use enumerate::{case_targeted, enumerate, Enumeration, Strategy};
pub use membership::{PumpIndex, RAutomaton};
pub use refute::{candidate_exponents, refute, Examination, Refutation, Refuter, SearchConfig};
pub use verify::{
    alt_bound, verify_theorem_instance, AltBound, LeafStats, VerificationReport, VerifyConfig,
    ALT_FAMILY_LIMIT, CLAIMED_ALT_BOUND,
};

use crate::error::Result;
use crate::witness::WitnessSpec;
use crate::words::Word;

/// A built witness together with its shape and coloring.
#[derive(Debug, Clone)]
pub struct MarkedWitness {
    pub spec: WitnessSpec,
    pub word: Word,
    pub coloring: Coloring,
}

impl MarkedWitness {
    pub fn new(n: u64) -> Result<Self> {
        let spec = WitnessSpec::new(n)?;
        let word = spec.build()?;
        Ok(Self {
            coloring: Coloring::of(&spec),
            spec,
            word,
        })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}
