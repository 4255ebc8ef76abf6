//! Alternation growth in powers of uneven words: `alt(w^k) >= k - 1`.

use serde::{Deserialize, Serialize};

use super::{alt, is_uneven_word, power, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerAltViolation {
    pub word: Word,
    pub k: usize,
    pub alt: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PowerAltReport {
    pub max_len: usize,
    pub max_k: usize,
    /// Uneven words of length at most `max_len`.
    pub uneven_words: u64,
    /// `(w, k)` pairs tested.
    pub checked: u64,
    pub violations: Vec<PowerAltViolation>,
}

impl PowerAltReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `alt(w^k) >= k - 1` for every uneven `w` with `|w| <= max_len`
/// and every `1 <= k <= max_k`.
pub fn check_power_alt(max_len: usize, max_k: usize) -> PowerAltReport {
    let mut report = PowerAltReport {
        max_len,
        max_k,
        uneven_words: 0,
        checked: 0,
        violations: Vec::new(),
    };
    for w in Word::all_up_to(max_len) {
        // words without a 1 are neither even nor uneven
        if !w.contains_one() || !is_uneven_word(&w).unwrap_or(false) {
            continue;
        }
        report.uneven_words += 1;
        for k in 1..=max_k {
            report.checked += 1;
            let a = alt(&power(&w, k));
            if a + 1 < k {
                report.violations.push(PowerAltViolation {
                    word: w.clone(),
                    k,
                    alt: a,
                });
            }
        }
    }
    report
}
