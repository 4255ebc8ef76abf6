use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::Decomposition;
use crate::error::{Error, Result};
use crate::witness::WitnessSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
    Green,
    Black,
}

/// Position ranges of the four colors of `z_n`.
///
/// Red covers `w4^n` and coincides with the Ogden-marked positions; blue is
/// the first `w3`; green is `w2^{n!+n}`; black is everything after.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub red: Range<usize>,
    pub blue: Range<usize>,
    pub green: Range<usize>,
    pub black: Range<usize>,
}

impl Coloring {
    pub fn of(spec: &WitnessSpec) -> Self {
        let red_end = 4 * spec.n as usize;
        let blue_end = red_end + 3;
        let green_end = blue_end + 2 * spec.green_count as usize;
        Self {
            red: 0..red_end,
            blue: red_end..blue_end,
            green: blue_end..green_end,
            black: green_end..spec.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.black.end
    }

    pub fn is_empty(&self) -> bool {
        self.black.end == 0
    }

    pub fn color_at(&self, pos: usize) -> Option<Color> {
        [
            (Color::Red, &self.red),
            (Color::Blue, &self.blue),
            (Color::Green, &self.green),
            (Color::Black, &self.black),
        ]
        .into_iter()
        .find(|(_, range)| range.contains(&pos))
        .map(|(color, _)| color)
    }

    /// Ogden marks: the first `4n` positions.
    pub fn is_marked(&self, pos: usize) -> bool {
        self.red.contains(&pos)
    }

    /// Counts for an in-bounds segment.
    pub fn counts(&self, segment: Range<usize>) -> ColorCounts {
        ColorCounts {
            red: overlap(&segment, &self.red),
            blue: overlap(&segment, &self.blue),
            green: overlap(&segment, &self.green),
            black: overlap(&segment, &self.black),
        }
    }
}

fn overlap(a: &Range<usize>, b: &Range<usize>) -> usize {
    a.end.min(b.end).saturating_sub(a.start.max(b.start))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorCounts {
    pub red: usize,
    pub blue: usize,
    pub green: usize,
    pub black: usize,
}

impl ColorCounts {
    pub fn total(&self) -> usize {
        self.red + self.blue + self.green + self.black
    }

    /// Ogden mark count of the segment.
    pub fn marked(&self) -> usize {
        self.red
    }
}

/// `m(color, segment)` for every color at once.
pub fn color_counts(spec: &WitnessSpec, segment: Range<usize>) -> Result<ColorCounts> {
    if segment.start > segment.end || segment.end > spec.len() {
        return Err(Error::SegmentOutOfRange {
            start: segment.start,
            end: segment.end,
            len: spec.len(),
        });
    }
    Ok(Coloring::of(spec).counts(segment))
}

/// Condition A: `v x` contains a marked position.
pub fn cond_a(coloring: &Coloring, d: &Decomposition) -> bool {
    coloring.counts(d.v()).red + coloring.counts(d.x()).red > 0
}

/// Condition B: `v w x` contains at most `n` marked positions.
pub fn cond_b(coloring: &Coloring, n: u64, d: &Decomposition) -> bool {
    coloring.counts(d.span()).red as u64 <= n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec5() -> WitnessSpec {
        WitnessSpec::new(5).unwrap()
    }

    fn counts(red: usize, blue: usize, green: usize, black: usize) -> ColorCounts {
        ColorCounts {
            red,
            blue,
            green,
            black,
        }
    }

    #[test]
    fn boundaries_for_order_five() {
        let c = Coloring::of(&spec5());
        assert_eq!(c.red, 0..20);
        assert_eq!(c.blue, 20..23);
        assert_eq!(c.green, 23..273);
        assert_eq!(c.black, 273..1026);
    }

    #[test]
    fn color_count_examples() {
        let spec = spec5();
        assert_eq!(color_counts(&spec, 0..20).unwrap(), counts(20, 0, 0, 0));
        assert_eq!(color_counts(&spec, 18..25).unwrap(), counts(2, 3, 2, 0));
        assert_eq!(color_counts(&spec, 0..0).unwrap(), counts(0, 0, 0, 0));
        assert!(color_counts(&spec, 1000..1027).is_err());
    }

    #[test]
    fn condition_examples() {
        let spec = spec5();
        let c = Coloring::of(&spec);
        let len = spec.len();
        let d = |cuts| Decomposition::new(cuts, len).unwrap();

        assert!(cond_a(&c, &d([0, 4, 4, 4])));
        assert!(!cond_a(&c, &d([300, 303, 310, 313])));
        assert!(cond_a(&c, &d([19, 21, 30, 31])));

        assert!(!cond_b(&c, 5, &d([0, 4, 8, 12])));
        assert!(cond_b(&c, 5, &d([16, 20, 20, 20])));
        assert!(cond_b(&c, 5, &d([20, 20, 20, 20])));
    }

    #[test]
    fn color_at_agrees_with_ranges() {
        let c = Coloring::of(&spec5());
        assert_eq!(c.color_at(19), Some(Color::Red));
        assert_eq!(c.color_at(20), Some(Color::Blue));
        assert_eq!(c.color_at(23), Some(Color::Green));
        assert_eq!(c.color_at(273), Some(Color::Black));
        assert_eq!(c.color_at(1026), None);
    }
}
