//! Binary combinatorics on words and a finite-instance checker for the
//! non-context-freeness of the language of binary non-abelian-squares.
//!
//! * [`words`]: words, Parikh vectors, abelian squares, `alt`, even forms.
//! * [`witness`]: block words, the regular envelope `R`, the witnesses `z_n`
//!   and membership in `T`.
//! * [`ogden`]: marking, conditions A and B, pumping, the case classifier,
//!   and the verified refuter with its sweeps.

pub mod error;
pub mod ogden;
pub mod witness;
pub mod words;

pub use error::{Error, Result};
pub use ogden::{
    classify, prescribed_i, pump, refute, verify_theorem_instance, CaseLabel, Decomposition,
    MarkedWitness, Refutation, Strategy, VerificationReport,
};
pub use witness::{
    build_witness, in_t, lemma3_report, parse_r, CountingReport, RParse, WitnessSpec,
};
pub use words::{ParikhVector, Word};
