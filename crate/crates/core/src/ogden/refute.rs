use serde::{Deserialize, Serialize};

use super::{
    classify, cond_a, cond_b, prescribed_i, CaseLabel, Decomposition, MarkedWitness, PumpIndex,
};
use crate::error::{Error, Result};
use crate::witness::{factorial, Rejection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchConfig {
    /// Small exponents `0, 2, 3, ..., max_small_i` are tried after the
    /// prescribed one.
    pub max_small_i: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { max_small_i: 8 }
    }
}

/// A pump exponent whose pumped word leaves `T`, with the first failing check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Refutation {
    pub pump_exponent: u64,
    pub reason: Rejection,
    pub pumped_length: u64,
    pub via_prescribed: bool,
}

/// Candidate exponents in search order: the prescribed one, then small
/// exponents, then `n!/q` and `1 + n!/q` for every divisor `q <= 2n` of `n!`.
pub fn candidate_exponents(prescribed: Option<u64>, n: u64, config: &SearchConfig) -> Vec<u64> {
    let mut out: Vec<u64> = prescribed.into_iter().collect();
    out.push(0);
    out.extend(2..=config.max_small_i);
    if let Some(f) = factorial(n) {
        for q in (1..=2 * n).filter(|q| f % q == 0) {
            out.push(f / q);
            out.push(f / q + 1);
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|i| *i != 1 && seen.insert(*i));
    out
}

/// The classification of a decomposition and, when found, its refutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Examination {
    pub decomposition: Decomposition,
    pub label: CaseLabel,
    pub refutation: Option<Refutation>,
}

/// Refutes decompositions of one witness, reusing a single [`PumpIndex`].
pub struct Refuter<'a> {
    witness: &'a MarkedWitness,
    index: PumpIndex<'a>,
    config: SearchConfig,
}

impl<'a> Refuter<'a> {
    pub fn new(witness: &'a MarkedWitness, config: SearchConfig) -> Self {
        Self {
            witness,
            index: PumpIndex::new(&witness.word),
            config,
        }
    }

    pub fn witness(&self) -> &'a MarkedWitness {
        self.witness
    }

    pub fn index(&self) -> &PumpIndex<'a> {
        &self.index
    }

    fn check_conditions(&self, d: &Decomposition) -> Result<()> {
        if d.word_len() != self.witness.len() {
            return Err(Error::InvalidCuts {
                cuts: d.cuts(),
                len: self.witness.len(),
            });
        }
        if !cond_a(&self.witness.coloring, d) {
            return Err(Error::ConditionViolated {
                cuts: d.cuts(),
                condition: 'A',
            });
        }
        if !cond_b(&self.witness.coloring, self.witness.spec.n, d) {
            return Err(Error::ConditionViolated {
                cuts: d.cuts(),
                condition: 'B',
            });
        }
        Ok(())
    }

    /// Tests a single exponent.
    pub fn try_exponent(&self, d: &Decomposition, i: u64) -> Option<Refutation> {
        self.index.rejection(d, i).map(|reason| Refutation {
            pump_exponent: i,
            reason,
            pumped_length: self.index.pumped_length(d, i),
            via_prescribed: false,
        })
    }

    /// Classifies `d` and searches for a refuting exponent.
    ///
    /// `d` must satisfy conditions A and B. A `None` refutation means every
    /// candidate exponent kept the pumped word inside `T`.
    pub fn examine(&self, d: &Decomposition) -> Result<Examination> {
        self.check_conditions(d)?;
        let label = classify(self.witness, d)?;
        let prescribed = prescribed_i(&label, self.witness.spec.n);
        let refutation = candidate_exponents(prescribed, self.witness.spec.n, &self.config)
            .into_iter()
            .find_map(|i| self.try_exponent(d, i))
            .map(|r| Refutation {
                via_prescribed: Some(r.pump_exponent) == prescribed,
                ..r
            });
        Ok(Examination {
            decomposition: *d,
            label,
            refutation,
        })
    }

    pub fn refute(&self, d: &Decomposition) -> Result<Option<Refutation>> {
        Ok(self.examine(d)?.refutation)
    }
}

/// One-shot form of [`Refuter::refute`].
pub fn refute(
    witness: &MarkedWitness,
    d: &Decomposition,
    config: &SearchConfig,
) -> Result<Option<Refutation>> {
    Refuter::new(witness, *config).refute(d)
}
