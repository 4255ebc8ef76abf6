//! The case tree for decompositions of the marked witness.
//!
//! A decomposition lands in exactly one leaf. The leaf decides which pump
//! exponent the refuter tries first; it never decides the outcome, which is
//! always re-checked by membership testing.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use super::{ColorCounts, Decomposition, MarkedWitness};
use crate::error::{Error, Result};
use crate::witness::factorial;
use crate::words::{even_form, is_uneven_word, EvenForm, Word};

/// Leaves of the case tree.
///
/// "Single" leaves have exactly one of `v`, `x` non-empty; the non-empty
/// part is called `v` throughout. "Pair" leaves have both non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
pub enum Leaf {
    /// I.i: the pumped part is all zeros.
    SingleZeros,
    /// I.ii: the pumped part is uneven.
    SingleUneven,
    /// I.iii with green bits in `v`.
    SingleEvenGreen,
    /// I.iii with `k + s != 3`.
    SingleEvenOffPeriod,
    /// I.iii with `k + s = 3`: `v` repeats `w4` up to rotation.
    SingleEvenPump,
    /// II.i: `v` or `x` is all zeros.
    PairZeros,
    /// II.ii: `v` or `x` is uneven.
    PairUneven,
    /// II.iii.i: both even and `v` carries no red bit.
    PairUnmarkedV,
    /// II.iii.ii.i: both even and both carry red bits.
    PairBothRed,
    /// `x = 001` straddling blue and green.
    BlueTwoBare,
    /// `x = 0010` straddling blue and green.
    BlueTwoZero,
    /// `x = 010` straddling blue and green.
    BlueOneSingle,
    /// `x = (01)^l` starting on the last blue bit.
    BlueOneAlternating,
    /// `x` inside green and black with at least two green bits.
    GreenMany,
    /// `x` with exactly one green bit.
    GreenOne,
    /// II.iii.ii.iii: `x` entirely black.
    BlackOnly,
    /// `x` entirely inside the blue `w3`.
    BlueOnly,
}

impl Leaf {
    pub const ALL: [Leaf; 17] = [
        Leaf::SingleZeros,
        Leaf::SingleUneven,
        Leaf::SingleEvenGreen,
        Leaf::SingleEvenOffPeriod,
        Leaf::SingleEvenPump,
        Leaf::PairZeros,
        Leaf::PairUneven,
        Leaf::PairUnmarkedV,
        Leaf::PairBothRed,
        Leaf::BlueTwoBare,
        Leaf::BlueTwoZero,
        Leaf::BlueOneSingle,
        Leaf::BlueOneAlternating,
        Leaf::GreenMany,
        Leaf::GreenOne,
        Leaf::BlackOnly,
        Leaf::BlueOnly,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Leaf::SingleZeros => "I.i",
            Leaf::SingleUneven => "I.ii",
            Leaf::SingleEvenGreen => "I.iii.greenInV",
            Leaf::SingleEvenOffPeriod => "I.iii.kPlusSNot3",
            Leaf::SingleEvenPump => "I.iii.pump",
            Leaf::PairZeros => "II.i",
            Leaf::PairUneven => "II.ii",
            Leaf::PairUnmarkedV => "II.iii.i",
            Leaf::PairBothRed => "II.iii.ii.i",
            Leaf::BlueTwoBare => "II.iii.ii.ii.blue2-eps",
            Leaf::BlueTwoZero => "II.iii.ii.ii.blue2-zero",
            Leaf::BlueOneSingle => "II.iii.ii.ii.blue1-010",
            Leaf::BlueOneAlternating => "II.iii.ii.ii.blue1-01l",
            Leaf::GreenMany => "II.iii.ii.ii.blue0-greenMany",
            Leaf::GreenOne => "II.iii.ii.ii.blue0-green1",
            Leaf::BlackOnly => "II.iii.ii.iii",
            Leaf::BlueOnly => "II.iii.ii.blueOnly",
        }
    }

    pub fn from_label(label: &str) -> Option<Leaf> {
        Leaf::ALL.into_iter().find(|leaf| leaf.label() == label)
    }

    /// Leaves that decompositions satisfying conditions A and B can reach.
    pub fn reachable_under_ab(&self) -> bool {
        *self != Leaf::PairUnmarkedV
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Leaf {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Shape parameters read off the pumped parts.
///
/// `k, s, p` describe `v = 0^k 1 (0^{k+s} 1)^p 0^s`; `c, d, e` describe
/// `x = 0^c 1 (0^{c+d} 1)^e 0^d`; `l` counts the repeats of an alternating
/// `x = (01)^l` or `(10)^l`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CaseParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
}

impl CaseParams {
    fn with_v(mut self, form: EvenForm) -> Self {
        self.k = Some(form.s as u64);
        self.s = Some(form.t as u64);
        self.p = Some(form.p as u64);
        self
    }

    fn with_x(mut self, form: EvenForm) -> Self {
        self.c = Some(form.s as u64);
        self.d = Some(form.t as u64);
        self.e = Some(form.p as u64);
        self
    }

    fn v_gap(&self) -> Option<u64> {
        Some(self.k? + self.s?)
    }

    fn x_gap(&self) -> Option<u64> {
        Some(self.c? + self.d?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CaseLabel {
    pub leaf: Leaf,
    pub params: CaseParams,
}

impl CaseLabel {
    fn bare(leaf: Leaf) -> Self {
        Self {
            leaf,
            params: CaseParams::default(),
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.leaf)?;
        let p = &self.params;
        let named = [
            ("k", p.k),
            ("s", p.s),
            ("p", p.p),
            ("c", p.c),
            ("d", p.d),
            ("e", p.e),
            ("l", p.l),
        ];
        let shown: Vec<String> = named
            .iter()
            .filter_map(|(name, value)| value.map(|v| format!("{name}={v}")))
            .collect();
        if !shown.is_empty() {
            write!(f, " [{}]", shown.join(", "))?;
        }
        Ok(())
    }
}

/// `l` when `x = (01)^l` (or also `(10)^l` if `either_phase`).
fn alternation_count(x: &Word, either_phase: bool) -> Option<u64> {
    let bits = x.bits();
    if bits.is_empty() || !bits.len().is_multiple_of(2) {
        return None;
    }
    let first = bits[0];
    if first == 1 && !either_phase {
        return None;
    }
    let alternates = bits
        .iter()
        .enumerate()
        .all(|(idx, &b)| b == first ^ (idx % 2) as u8);
    alternates.then_some((bits.len() / 2) as u64)
}

fn part(witness: &MarkedWitness, range: std::ops::Range<usize>) -> Word {
    witness
        .word
        .slice(range)
        .expect("decomposition fits its witness")
}

pub fn classify(witness: &MarkedWitness, d: &Decomposition) -> Result<CaseLabel> {
    if d.word_len() != witness.len() {
        return Err(Error::InvalidCuts {
            cuts: d.cuts(),
            len: witness.len(),
        });
    }
    if d.pumps_nothing() {
        return Err(Error::EmptyPump);
    }
    let coloring = &witness.coloring;

    if d.v().is_empty() || d.x().is_empty() {
        let range = if d.v().is_empty() { d.x() } else { d.v() };
        let single = part(witness, range.clone());
        if !single.contains_one() {
            return Ok(CaseLabel::bare(Leaf::SingleZeros));
        }
        if is_uneven_word(&single)? {
            return Ok(CaseLabel::bare(Leaf::SingleUneven));
        }
        let params = CaseParams::default().with_v(even_form(&single)?);
        let leaf = if coloring.counts(range).green > 0 {
            Leaf::SingleEvenGreen
        } else if params.v_gap() != Some(3) {
            Leaf::SingleEvenOffPeriod
        } else {
            Leaf::SingleEvenPump
        };
        return Ok(CaseLabel { leaf, params });
    }

    let v = part(witness, d.v());
    let x = part(witness, d.x());
    if !v.contains_one() || !x.contains_one() {
        return Ok(CaseLabel::bare(Leaf::PairZeros));
    }
    if is_uneven_word(&v)? || is_uneven_word(&x)? {
        return Ok(CaseLabel::bare(Leaf::PairUneven));
    }

    let mut params = CaseParams::default()
        .with_v(even_form(&v)?)
        .with_x(even_form(&x)?);
    let in_v = coloring.counts(d.v());
    let in_x = coloring.counts(d.x());
    let leaf = if in_v.red == 0 {
        Leaf::PairUnmarkedV
    } else if in_x.red > 0 {
        Leaf::PairBothRed
    } else if in_x.green > 0 {
        let (leaf, l) = classify_green_x(&x, in_x)?;
        params.l = l;
        leaf
    } else if in_x.black > 0 {
        Leaf::BlackOnly
    } else {
        Leaf::BlueOnly
    };
    Ok(CaseLabel { leaf, params })
}

/// Sub-cases for an even `x` with no red bits and some green bits, split by
/// how much of the blue `w3` it covers.
fn classify_green_x(x: &Word, counts: ColorCounts) -> Result<(Leaf, Option<u64>)> {
    let text = x.to_string();
    let unreachable = || Error::Unreachable(format!("even x = {text} with colors {counts:?}"));
    match counts.blue {
        2 => match text.as_str() {
            "001" => Ok((Leaf::BlueTwoBare, None)),
            "0010" => Ok((Leaf::BlueTwoZero, None)),
            _ => Err(unreachable()),
        },
        1 => {
            if text == "010" {
                Ok((Leaf::BlueOneSingle, None))
            } else {
                let l = alternation_count(x, false).ok_or_else(unreachable)?;
                Ok((Leaf::BlueOneAlternating, Some(l)))
            }
        }
        0 if counts.green > 1 => Ok((Leaf::GreenMany, alternation_count(x, true))),
        0 => Ok((Leaf::GreenOne, None)),
        // all of blue plus green is never even
        _ => Err(unreachable()),
    }
}

/// `1 + n!/q` when `q` divides `n!`.
///
/// Pumping with exponent `i` inserts `i - 1` extra copies, so reaching
/// exactly `n!/q` extra copies of a `q`-block factor needs `i = 1 + n!/q`.
fn factorial_exponent(n: u64, q: u64) -> Option<u64> {
    let f = factorial(n)?;
    (q > 0 && f % q == 0).then(|| 1 + f / q)
}

/// The exponent the case analysis uses for a leaf, if it uses one.
///
/// Returns `None` for [`Leaf::PairUnmarkedV`], which fails condition A
/// instead of being pumped, and when a factorial quotient is not integral.
pub fn prescribed_i(label: &CaseLabel, n: u64) -> Option<u64> {
    let params = &label.params;
    match label.leaf {
        Leaf::SingleZeros | Leaf::PairZeros => Some(4),
        Leaf::SingleUneven | Leaf::PairUneven => Some(6),
        Leaf::SingleEvenGreen | Leaf::SingleEvenOffPeriod => Some(2),
        Leaf::SingleEvenPump => factorial_exponent(n, 1 + params.p?),
        Leaf::PairUnmarkedV => None,
        // A marked v off the w4 period is refuted as in the single case.
        _ if params.v_gap() != Some(3) => Some(2),
        Leaf::PairBothRed if params.x_gap() != Some(3) => Some(2),
        Leaf::PairBothRed => factorial_exponent(n, 2 + params.p? + params.e?),
        Leaf::BlueTwoBare | Leaf::BlueTwoZero | Leaf::BlueOneSingle | Leaf::BlueOnly => Some(2),
        Leaf::BlueOneAlternating | Leaf::GreenMany | Leaf::GreenOne | Leaf::BlackOnly => {
            factorial_exponent(n, 1 + params.p?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn witness5() -> MarkedWitness {
        MarkedWitness::new(5).unwrap()
    }

    fn classify_cuts(witness: &MarkedWitness, cuts: [usize; 4]) -> CaseLabel {
        let d = Decomposition::new(cuts, witness.len()).unwrap();
        classify(witness, &d).unwrap()
    }

    #[test]
    fn zeros_in_red_is_first_leaf() {
        let z = witness5();
        assert_eq!(classify_cuts(&z, [1, 3, 3, 3]).leaf, Leaf::SingleZeros);
        // v empty, x = 00: the pumped part is still all zeros
        assert_eq!(classify_cuts(&z, [4, 4, 5, 7]).leaf, Leaf::SingleZeros);
    }

    #[test]
    fn w4_with_green_start() {
        let z = witness5();
        let label = classify_cuts(&z, [16, 20, 23, 25]);
        assert_eq!(label.leaf, Leaf::GreenMany);
        assert_eq!(label.params.l, Some(1));
        assert_eq!(
            (label.params.k, label.params.s, label.params.p),
            (Some(0), Some(3), Some(0))
        );
    }

    #[test]
    fn uneven_single() {
        let z = witness5();
        // 1000 10
        assert_eq!(classify_cuts(&z, [16, 22, 22, 22]).leaf, Leaf::SingleUneven);
    }

    #[test]
    fn single_even_subcases() {
        let z = witness5();
        let label = classify_cuts(&z, [16, 20, 20, 20]);
        assert_eq!(label.leaf, Leaf::SingleEvenPump);
        assert_eq!(label.params.p, Some(0));
        assert_eq!(
            classify_cuts(&z, [16, 18, 18, 18]).leaf,
            Leaf::SingleEvenOffPeriod
        );
        // 00 100 1 covers blue and reaches green
        assert_eq!(
            classify_cuts(&z, [18, 24, 24, 24]).leaf,
            Leaf::SingleEvenGreen
        );
    }

    #[test]
    fn blue_subcases() {
        let z = witness5();
        assert_eq!(classify_cuts(&z, [16, 20, 21, 24]).leaf, Leaf::BlueTwoBare);
        assert_eq!(classify_cuts(&z, [16, 20, 21, 25]).leaf, Leaf::BlueTwoZero);
        assert_eq!(
            classify_cuts(&z, [16, 20, 22, 25]).leaf,
            Leaf::BlueOneSingle
        );
        let label = classify_cuts(&z, [16, 20, 22, 26]);
        assert_eq!(
            (label.leaf, label.params.l),
            (Leaf::BlueOneAlternating, Some(2))
        );
        assert_eq!(classify_cuts(&z, [16, 20, 20, 23]).leaf, Leaf::BlueOnly);
    }

    #[test]
    fn black_and_boundary_subcases() {
        let z = witness5();
        let label = classify_cuts(&z, [16, 20, 272, 275]);
        assert_eq!(label.leaf, Leaf::GreenOne);
        assert_eq!(
            (label.params.c, label.params.d, label.params.e),
            (Some(1), Some(1), Some(0))
        );
        let label = classify_cuts(&z, [16, 20, 273, 279]);
        assert_eq!(label.leaf, Leaf::BlackOnly);
        assert_eq!(label.params.x_gap(), Some(2));
    }

    #[test]
    fn unmarked_v_and_both_red() {
        let z = witness5();
        assert_eq!(
            classify_cuts(&z, [273, 276, 276, 279]).leaf,
            Leaf::PairUnmarkedV
        );
        assert_eq!(classify_cuts(&z, [0, 2, 4, 5]).leaf, Leaf::PairBothRed);
    }

    #[test]
    fn nothing_to_pump_is_an_error() {
        let z = witness5();
        let d = Decomposition::new([3, 3, 9, 9], z.len()).unwrap();
        assert_eq!(classify(&z, &d), Err(Error::EmptyPump));
    }

    #[test]
    fn prescribed_exponents() {
        let bare = CaseLabel::bare;
        assert_eq!(prescribed_i(&bare(Leaf::SingleZeros), 5), Some(4));
        assert_eq!(prescribed_i(&bare(Leaf::SingleUneven), 5), Some(6));
        assert_eq!(prescribed_i(&bare(Leaf::PairUnmarkedV), 5), None);
        let pump = CaseLabel {
            leaf: Leaf::SingleEvenPump,
            params: CaseParams {
                k: Some(0),
                s: Some(3),
                p: Some(0),
                ..Default::default()
            },
        };
        assert_eq!(prescribed_i(&pump, 5), Some(121));
        let pump = CaseLabel {
            params: CaseParams {
                p: Some(6),
                ..pump.params
            },
            ..pump
        };
        // 7 does not divide 5!
        assert_eq!(prescribed_i(&pump, 5), None);
    }

    #[test]
    fn labels_round_trip() {
        for leaf in Leaf::ALL {
            assert_eq!(Leaf::from_label(leaf.label()), Some(leaf));
        }
    }

    #[test]
    fn alternation() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(alternation_count(&w("0101"), false), Some(2));
        assert_eq!(alternation_count(&w("1010"), false), None);
        assert_eq!(alternation_count(&w("1010"), true), Some(2));
        assert_eq!(alternation_count(&w("010"), true), None);
    }
}
