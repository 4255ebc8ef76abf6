use serde::{Deserialize, Serialize};

use super::Word;
use crate::error::{Error, Result};

/// The decomposition `w = 0^{s_0} 1 0^{s_1} 1 ... 1 0^{s_k}`.
///
/// `zero_runs` always has `k + 1` entries, so a word without 1s has a single
/// run and the empty word has the single run `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunForm {
    pub zero_runs: Vec<usize>,
    pub ones_count: usize,
}

impl RunForm {
    pub fn reconstruct(&self) -> Word {
        let len = self.zero_runs.iter().sum::<usize>() + self.ones_count;
        let mut w = Word::with_capacity(len);
        for (idx, &run) in self.zero_runs.iter().enumerate() {
            if idx > 0 {
                w.push(1);
            }
            w.push_zeros(run);
        }
        w
    }

    /// The cyclic sequence `(s_0 + s_k, s_1, ..., s_{k-1})`, one entry per 1.
    ///
    /// This is the sequence whose constancy decides evenness: leading and
    /// trailing zeros merge into a single gap, as they would in `w^2`.
    pub fn cyclic_gaps(&self) -> Vec<usize> {
        let k = self.ones_count;
        if k == 0 {
            return Vec::new();
        }
        let mut gaps = Vec::with_capacity(k);
        gaps.push(self.zero_runs[0] + self.zero_runs[k]);
        gaps.extend_from_slice(&self.zero_runs[1..k]);
        gaps
    }
}

pub fn run_form(w: &Word) -> RunForm {
    let mut zero_runs = vec![0usize];
    for &b in w.bits() {
        if b == 1 {
            zero_runs.push(0);
        } else {
            *zero_runs.last_mut().expect("never empty") += 1;
        }
    }
    let ones_count = zero_runs.len() - 1;
    RunForm {
        zero_runs,
        ones_count,
    }
}

/// Number of indices `1 <= i < k` with `s_i != s_{i+1}`.
///
/// The leading run `s_0` never takes part; words with at most one 1 give 0.
pub fn alt(w: &Word) -> usize {
    let runs = run_form(w).zero_runs;
    if runs.len() < 3 {
        return 0;
    }
    runs[1..]
        .windows(2)
        .filter(|pair| pair[0] != pair[1])
        .count()
}

/// Maximum of [`alt`] over an explicit finite set of words.
pub fn alt_max<'a, I>(words: I) -> Result<usize>
where
    I: IntoIterator<Item = &'a Word>,
{
    words.into_iter().map(alt).max().ok_or(Error::EmptyLanguage)
}

/// True iff the cyclic gap sequence of `w` has more than one entry and is not
/// constant. Words with a single 1 are even.
pub fn is_uneven_word(w: &Word) -> Result<bool> {
    let form = run_form(w);
    if form.ones_count == 0 {
        return Err(Error::NoOnes(w.to_string()));
    }
    Ok(is_uneven_form(&form))
}

fn is_uneven_form(form: &RunForm) -> bool {
    let gaps = form.cyclic_gaps();
    gaps.len() > 1 && gaps.iter().any(|&g| g != gaps[0])
}

/// Canonical shape `0^s 1 (0^{s+t} 1)^p 0^t` of an even word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvenForm {
    pub s: usize,
    pub t: usize,
    pub p: usize,
}

impl EvenForm {
    /// Distance between consecutive 1s, i.e. `s + t`.
    pub fn period_gap(&self) -> usize {
        self.s + self.t
    }

    pub fn expand(&self) -> Word {
        let gap = self.period_gap();
        let mut w = Word::with_capacity(self.s + self.t + 1 + self.p * (gap + 1));
        w.push_zeros(self.s);
        w.push(1);
        for _ in 0..self.p {
            w.push_zeros(gap);
            w.push(1);
        }
        w.push_zeros(self.t);
        w
    }
}

pub fn even_form(w: &Word) -> Result<EvenForm> {
    let form = run_form(w);
    if form.ones_count == 0 {
        return Err(Error::NoOnes(w.to_string()));
    }
    if is_uneven_form(&form) {
        return Err(Error::Uneven(w.to_string()));
    }
    let k = form.ones_count;
    Ok(EvenForm {
        s: form.zero_runs[0],
        t: form.zero_runs[k],
        p: k - 1,
    })
}
