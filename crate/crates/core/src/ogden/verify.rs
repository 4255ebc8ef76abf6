use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{enumerate, Examination, MarkedWitness, Refuter, SearchConfig, Strategy};
use crate::error::Result;
use crate::witness::RParse;
use crate::words::alt_max;

/// The bound on `alt` over `R` that the uneven cases rely on.
pub const CLAIMED_ALT_BOUND: usize = 4;

/// Star exponents up to this value are enumerated when computing the bound.
pub const ALT_FAMILY_LIMIT: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AltBound {
    /// Largest exponent of each star in the sampled family of `R`.
    pub exponent_limit: u64,
    pub computed_max: usize,
    pub claimed: usize,
    /// Computed and claimed values differ.
    pub discrepancy: bool,
    /// Six pumps of an uneven factor exceed the computed maximum.
    pub uneven_pump_exceeds: bool,
}

/// `alt` over every `w4^a w3 w2^b w3 w3^c` with `a, b, c <= exponent_limit`.
pub fn alt_bound(exponent_limit: u64) -> AltBound {
    let family: Vec<_> = (0..=exponent_limit)
        .flat_map(|a| (0..=exponent_limit).map(move |b| (a, b)))
        .flat_map(|(a, b)| (0..=exponent_limit).map(move |c| RParse { a, b, c }.reconstruct()))
        .collect();
    let computed_max = alt_max(&family).expect("family is non-empty");
    AltBound {
        exponent_limit,
        computed_max,
        claimed: CLAIMED_ALT_BOUND,
        discrepancy: computed_max != CLAIMED_ALT_BOUND,
        uneven_pump_exceeds: 5 > computed_max,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyConfig {
    pub search: SearchConfig,
    /// Worker threads; the report does not depend on it.
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            search: SearchConfig::default(),
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LeafStats {
    pub count: u64,
    pub prescribed_success: u64,
    pub fallback_success: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub n: u64,
    pub strategies: Vec<Strategy>,
    pub checked: u64,
    #[serde(rename = "skippedViolatingAB")]
    pub skipped_violating_ab: u64,
    pub per_leaf: BTreeMap<String, LeafStats>,
    pub i_histogram: BTreeMap<u64, u64>,
    pub reason_histogram: BTreeMap<String, u64>,
    /// Share of decompositions with a prescribed exponent refuted by it.
    pub prescribed_success_rate: f64,
    pub unrefuted: Vec<[usize; 4]>,
    pub seed: Option<u64>,
    pub wall_time_ms: u64,
    pub sub_threshold_warning: bool,
    pub alt_bound: AltBound,
}

impl VerificationReport {
    pub fn all_refuted(&self) -> bool {
        self.unrefuted.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    per_leaf: BTreeMap<String, LeafStats>,
    i_histogram: BTreeMap<u64, u64>,
    reason_histogram: BTreeMap<String, u64>,
    with_prescribed: u64,
    prescribed_hits: u64,
    unrefuted: Vec<[usize; 4]>,
}

impl Tally {
    fn record(&mut self, exam: &Examination, had_prescribed: bool) {
        self.checked += 1;
        let stats = self
            .per_leaf
            .entry(exam.label.leaf.label().to_owned())
            .or_default();
        stats.count += 1;
        if had_prescribed {
            self.with_prescribed += 1;
        }
        match exam.refutation {
            Some(r) => {
                if r.via_prescribed {
                    stats.prescribed_success += 1;
                    self.prescribed_hits += 1;
                } else {
                    stats.fallback_success += 1;
                }
                *self.i_histogram.entry(r.pump_exponent).or_default() += 1;
                *self
                    .reason_histogram
                    .entry(r.reason.as_str().to_owned())
                    .or_default() += 1;
            }
            None => self.unrefuted.push(exam.decomposition.cuts()),
        }
    }
}

/// Runs the refuter over every decomposition the strategies produce.
///
/// Work is spread over `config.workers` threads, but results are merged in
/// enumeration order so the report depends only on `n`, the strategies, and
/// the search configuration.
pub fn verify_theorem_instance(
    n: u64,
    strategies: &[Strategy],
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let witness = MarkedWitness::new(n)?;
    let refuter = Refuter::new(&witness, config.search);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .expect("thread pool");

    let mut tally = Tally::default();
    for strategy in strategies {
        let batch = enumerate(&witness, strategy);
        tally.skipped += batch.skipped_violating_ab;
        let exams: Vec<Result<(Examination, bool)>> = pool.install(|| {
            batch
                .decompositions
                .par_iter()
                .map(|d| {
                    let exam = refuter.examine(d)?;
                    let had_prescribed = super::prescribed_i(&exam.label, n).is_some();
                    Ok((exam, had_prescribed))
                })
                .collect()
        });
        for exam in exams {
            let (exam, had_prescribed) = exam?;
            tally.record(&exam, had_prescribed);
        }
    }

    let seed = strategies.iter().find_map(|s| match s {
        Strategy::Random { seed, .. } => Some(*seed),
        _ => None,
    });
    let prescribed_success_rate = if tally.with_prescribed == 0 {
        0.0
    } else {
        tally.prescribed_hits as f64 / tally.with_prescribed as f64
    };
    Ok(VerificationReport {
        n,
        strategies: strategies.to_vec(),
        checked: tally.checked,
        skipped_violating_ab: tally.skipped,
        per_leaf: tally.per_leaf,
        i_histogram: tally.i_histogram,
        reason_histogram: tally.reason_histogram,
        prescribed_success_rate,
        unrefuted: tally.unrefuted,
        seed,
        wall_time_ms: started.elapsed().as_millis() as u64,
        sub_threshold_warning: witness.spec.sub_threshold(),
        alt_bound: alt_bound(ALT_FAMILY_LIMIT),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alt_over_r_family() {
        let bound = alt_bound(4);
        assert_eq!(bound.computed_max, 3);
        assert!(bound.discrepancy);
        assert!(bound.uneven_pump_exceeds);
    }

    #[test]
    fn small_sweep_is_fully_refuted() {
        let report = verify_theorem_instance(
            5,
            &[
                Strategy::ExhaustiveWindow { window: 8 },
                Strategy::CaseTargeted,
            ],
            &VerifyConfig::default(),
        )
        .unwrap();
        assert!(report.checked > 0);
        assert!(report.all_refuted(), "{:?}", report.unrefuted);
        assert!(!report.sub_threshold_warning);
        assert_eq!(report.seed, None);
    }

    #[test]
    fn sub_threshold_orders_are_flagged() {
        let report = verify_theorem_instance(
            2,
            &[Strategy::ExhaustiveWindow { window: 10 }],
            &VerifyConfig::default(),
        )
        .unwrap();
        assert!(report.sub_threshold_warning);
        assert!(report.checked > 0);
    }
}
