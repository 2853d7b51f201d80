//! Engine for controlled text reduction: generating and evaluating reduced
//! texts that cover exactly the pre-highlighted spans of a source document.
//!
//! The crate is organized around a small set of cooperating modules:
//!
//! - [`corpus`]: the data model (documents, highlight spans, token sequences)
//!   and JSONL ingestion.
//! - [`metrics`]: exact lexical content-matching metrics (ROUGE-1/2/L, a
//!   METEOR variant, and micro precision/recall over annotated fact units).
//! - [`lm`]: the pluggable next-token language-model contract with n-gram,
//!   scripted, and remote implementations.
//! - [`decoder`]: highlight-sensitive lookahead beam search.
//! - [`quark`]: the exploration / quantization / learning loop with dual
//!   highlight rewards and a count-based toy learner.
//! - [`distill`]: modular prompt construction, the completion client, and
//!   the highlight-alignment audit.
//!
//! All randomness is seeded and all orderings are total, so every pipeline
//! is reproducible bit-for-bit from its configuration and root seed.

pub mod corpus;
pub mod decoder;
pub mod distill;
pub mod error;
pub mod lm;
pub mod metrics;
pub mod quark;

pub use error::{CtrError, Result};
