use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{cond_a, cond_b, Decomposition, MarkedWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Strategy {
    /// Every cut quadruple with `i4 - i1 <= window`.
    ExhaustiveWindow { window: usize },
    /// `count` seeded draws, biased toward marked `v x`.
    Random { seed: u64, count: usize },
    /// Hand-placed decompositions, several per leaf of the case tree.
    CaseTargeted,
}

/// Decompositions satisfying conditions A and B, plus how many candidates
/// were dropped for violating one of them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Enumeration {
    pub decompositions: Vec<Decomposition>,
    pub skipped_violating_ab: u64,
}

impl IntoIterator for Enumeration {
    type Item = Decomposition;
    type IntoIter = std::vec::IntoIter<Decomposition>;

    fn into_iter(self) -> Self::IntoIter {
        self.decompositions.into_iter()
    }
}

fn satisfies_ab(witness: &MarkedWitness, d: &Decomposition) -> bool {
    cond_a(&witness.coloring, d) && cond_b(&witness.coloring, witness.spec.n, d)
}

pub fn enumerate(witness: &MarkedWitness, strategy: &Strategy) -> Enumeration {
    match *strategy {
        Strategy::ExhaustiveWindow { window } => exhaustive_window(witness, window),
        Strategy::Random { seed, count } => random(witness, seed, count),
        Strategy::CaseTargeted => case_targeted(witness),
    }
}

/// Number of `i1 <= i2 <= i3 <= i4 <= i1 + m` for fixed `i1`.
fn quadruples_from(m: usize) -> u64 {
    let m = m as u64;
    (m + 1) * (m + 2) * (m + 3) / 6
}

fn exhaustive_window(witness: &MarkedWitness, window: usize) -> Enumeration {
    let len = witness.len();
    let red_end = witness.coloring.red.end;
    let mut out = Enumeration::default();
    for i1 in 0..=len {
        let limit = (i1 + window).min(len);
        if i1 >= red_end {
            // v and x both start past the marked prefix, so A fails.
            out.skipped_violating_ab += quadruples_from(limit - i1);
            continue;
        }
        for i2 in i1..=limit {
            for i3 in i2..=limit {
                for i4 in i3..=limit {
                    let d = Decomposition::new([i1, i2, i3, i4], len).expect("ordered cuts");
                    if satisfies_ab(witness, &d) {
                        out.decompositions.push(d);
                    } else {
                        out.skipped_violating_ab += 1;
                    }
                }
            }
        }
    }
    out
}

/// Factor length drawn from a mix of empty, short, medium, and arbitrary.
fn draw_len(rng: &mut ChaCha8Rng, len: usize) -> usize {
    match rng.random_range(0..4u8) {
        0 => 0,
        1 => rng.random_range(1..=8),
        2 => rng.random_range(1..=64),
        _ => rng.random_range(1..=len.max(1)),
    }
}

fn random(witness: &MarkedWitness, seed: u64, count: usize) -> Enumeration {
    let len = witness.len();
    let red_end = witness.coloring.red.end;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Enumeration::default();
    while out.decompositions.len() < count {
        let i1 = rng.random_range(0..red_end);
        let i2 = i1 + draw_len(&mut rng, len);
        let i3 = i2 + draw_len(&mut rng, len);
        let i4 = i3 + draw_len(&mut rng, len);
        if i4 > len || i1 == i2 && i3 == i4 {
            continue;
        }
        let d = Decomposition::new([i1, i2, i3, i4], len).expect("ordered cuts");
        if satisfies_ab(witness, &d) {
            out.decompositions.push(d);
        } else {
            out.skipped_violating_ab += 1;
        }
    }
    out
}

/// Hand-placed decompositions aimed at each reachable leaf.
///
/// Placements that fall outside the word or violate A or B for the given
/// order are dropped, so small orders get fewer of them.
pub fn case_targeted(witness: &MarkedWitness) -> Enumeration {
    let n = witness.spec.n as usize;
    let len = witness.len();
    let red = witness.coloring.red.end;
    let green = witness.coloring.green.clone();
    let (g0, g1) = (green.start, green.end);
    // start of the last w4 block; v defaults to that whole block
    let last = red.saturating_sub(4);
    let v = (last, red);

    let single = |a: usize, b: usize| [a, b, b, b];
    let x_only = |a: usize, b: usize| [a, a, a, b];
    let pair = |(a, b): (usize, usize), c: usize, d: usize| [a, b, c, d];

    let mut cuts: Vec<[usize; 4]> = vec![
        // I.i
        single(1, 2),
        single(1, 3),
        x_only(4, 7),
        // I.ii
        single(last, red + 2),
        single(last.saturating_sub(4), last + 1),
        // I.iii
        single(red.saturating_sub(2), red + 4),
        single(last, last + 2),
        single(last + 1, red + 2),
        single(last, red),
        single(last + 1, red + 1),
        x_only(last, red),
        // II.i
        pair((1, 2), g1, g1 + 3),
        pair(v, red + 1, red + 3),
        // II.ii
        pair((last, red + 2), g1, g1 + 3),
        pair(v, g1 - 2, g1 + 3),
        // II.iii.ii.i
        pair((0, 2), 4, 5),
        pair((red.saturating_sub(8), last), last, red),
        // blue sub-cases
        pair(v, red + 1, red + 4),
        pair(v, red + 1, red + 5),
        pair(v, red + 2, red + 5),
        pair(v, red + 2, red + 4),
        pair(v, red + 2, red + 6),
        // inside green
        pair(v, g0, g0 + 2),
        pair(v, g0 + 1, g0 + 5),
        pair(v, g0 + 1, g0 + 4),
        pair(v, g0 + 4, g0 + 5),
        // last green bit onward
        pair(v, g1 - 1, g1 + 2),
        pair(v, g1 - 1, g1 + 5),
        pair(v, g1 - 1, g1 + 1),
        // black only
        pair(v, g1, g1 + 3),
        pair(v, g1 + 3, g1 + 9),
        pair(v, g1 + 1, g1 + 4),
        pair(v, g1 + 4, g1 + 5),
        // blue only
        pair(v, red, red + 3),
        pair(v, red, red + 1),
    ];
    if n >= 8 {
        // w4^2 pumped alone and against a disjoint w4
        cuts.push(single(red - 8, red));
        cuts.push(pair((red - 8, red - 4), red - 4, red));
        cuts.push(pair((red - 8, red), g1, g1 + 3));
    }

    let mut out = Enumeration::default();
    for cut in cuts {
        let Ok(d) = Decomposition::new(cut, len) else {
            continue;
        };
        if d.pumps_nothing() {
            continue;
        }
        if satisfies_ab(witness, &d) {
            out.decompositions.push(d);
        } else {
            out.skipped_violating_ab += 1;
        }
    }
    out
}
