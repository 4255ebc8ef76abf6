//! Binary words and the combinatorial measures used throughout the crate:
//! Parikh vectors, abelian squares, 0-run decompositions, `alt`, and the
//! even/uneven classification with its canonical form.

mod powers;
mod runs;
mod word;

pub use powers::{check_power_alt, PowerAltReport, PowerAltViolation};
pub use runs::{alt, alt_max, even_form, is_uneven_word, run_form, EvenForm, RunForm};
pub use word::{is_abelian_square, parikh, power, ParikhVector, Word};
