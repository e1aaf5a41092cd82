//! Batch analysis of binomial edge ideal invariants over graph6 corpora.
//!
//! [`batch::analyze_stream`] reads graph6 lines from files (optionally
//! gzip-compressed) or standard input, computes an
//! [`InvariantReport`](koenig_core::InvariantReport) per graph in parallel
//! and emits records in input order as JSON lines or CSV. Runs can be
//! checkpointed and resumed. [`batch::verify_conjecture`] checks that every
//! connected AT-free input graph is of König type and summarises the counts
//! per order.

pub mod batch;
pub mod checkpoint;
mod error;
pub mod input;
pub mod record;
pub mod scripts;
pub mod tally;

pub use batch::{analyze_stream, verify_conjecture, BatchOptions, Filters, Selection};
pub use error::HarnessError;
pub use input::InputSource;
pub use record::{GraphRecord, OutputFormat, RecordWriter};
pub use tally::VerificationSummary;
