//! Construction and analysis of extremely elevated staircase rank-one subshifts.
//!
//! The library builds the defining parameter sequences (cuts `r_n`, elevation
//! `c_n`, heights `h_n`), materializes the generating words `B_n` in
//! run-length-encoded form, enumerates the subshift language by brute force,
//! evaluates the word complexity `p(q)` in closed form from the per-length
//! increment formulas, and computes empirical cylinder frequencies and
//! correlation defects along structured time sequences.
//!
//! Everything sequence- and complexity-related is exact: arbitrary-precision
//! integers with rational partial sums, so bound checks are assertion-grade.

pub mod complexity;
pub mod error;
pub mod language;
pub mod measure;
pub mod numeric;
pub mod sequences;
pub mod words;

pub use complexity::{BoundReport, CfTag, ComplexityTable, Provenance};
pub use error::{Error, Result};
pub use language::{LanguageSlice, RsClassification, RsForm};
pub use measure::{CorrelationRecord, CylinderStats, TimeSpec};
pub use numeric::Rational;
pub use sequences::{GrowthFn, Nat, ParamTable, PartialSums, RecipeSpec};
pub use words::{BitWord, RleWord, WordCursor};

/// Operational budgets. These are configuration, not constants: every cap can
/// be raised or lowered per run.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Largest total length of a word that may be materialized for
    /// cursor-addressable access. Beyond this, only sequence-level statistics
    /// are available.
    pub max_word_len: u64,
    /// Largest window that may be expanded from RLE form to packed bits.
    pub max_window: usize,
    /// Largest factor length the language oracle will enumerate.
    pub max_enum_len: usize,
    /// Bit-size budget for any single sequence entry (heights grow doubly
    /// exponentially for the fast recipes).
    pub max_seq_bits: u64,
    /// Largest cylinder word accepted by the empirical-measure operations.
    pub max_cylinder: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_word_len: 1 << 31,
            max_window: 4096,
            max_enum_len: 4096,
            max_seq_bits: 1_000_000,
            max_cylinder: 64,
        }
    }
}
