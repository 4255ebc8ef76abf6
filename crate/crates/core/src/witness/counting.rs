use serde::{Deserialize, Serialize};

use super::{in_t, WitnessSpec};
use crate::error::{Error, Result};
use crate::words::is_abelian_square;

/// Measured 1-counts of `z_n` next to their closed forms.
///
/// The measured fields come from scanning the built word; the `formula_*`
/// fields are evaluated independently from `n!`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CountingReport {
    pub n: u64,
    pub total_ones: u64,
    pub formula_total_ones: u64,
    pub second_half_ones: u64,
    pub formula_second_half_ones: u64,
    pub half_of_total: u64,
    pub is_abelian_square: bool,
    #[serde(rename = "inT")]
    pub in_t: bool,
    pub sub_threshold_warning: bool,
}

impl CountingReport {
    /// Measured counts equal the closed forms, the halves disagree, and
    /// `z_n ∈ T`.
    pub fn holds(&self) -> bool {
        self.total_ones == self.formula_total_ones
            && self.second_half_ones == self.formula_second_half_ones
            && 2 * self.second_half_ones != self.total_ones
            && !self.is_abelian_square
            && self.in_t
    }
}

pub fn lemma3_report(n: u64) -> Result<CountingReport> {
    if n < 3 {
        return Err(Error::CountingOrder(n));
    }
    let spec = WitnessSpec::new(n)?;
    let z = spec.build()?;
    let total_ones = z.count_ones() as u64;
    let second_half_ones = z.bits()[z.len() / 2..].iter().filter(|&&b| b == 1).count() as u64;

    let f = spec.factorial;
    Ok(CountingReport {
        n,
        total_ones,
        formula_total_ones: 3 * f + 4 * n + 2,
        second_half_ones,
        formula_second_half_ones: 4 * f / 3 + 2 * n + 1,
        half_of_total: total_ones / 2,
        is_abelian_square: is_abelian_square(&z),
        in_t: in_t(&z),
        sub_threshold_warning: spec.sub_threshold(),
    })
}
