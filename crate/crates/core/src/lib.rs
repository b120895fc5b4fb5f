//! Text frontend for Hindi speech synthesis.
//!
//! Raw Devanagari text goes through [`text::tokenize`], dictionary-based
//! spell checking ([`spellcheck`]), non-standard word expansion
//! ([`normalize`]), WX transliteration ([`wx`]) and rule-based
//! grapheme-to-phoneme conversion with schwa deletion ([`g2p`]).
//! [`pipeline::analyze`] runs all of it and returns an
//! [`pipeline::AnalysisReport`].
//!
//! ```
//! use ttsfe_core::{analyze, g2p, PipelineConfig, Resources};
//!
//! let res = Resources::builtin();
//! let report = analyze("बजिली का बिल", &PipelineConfig::default(), &res);
//! assert_eq!(report.misspellings[0].suggestions[0].candidate, "बिजली");
//! assert_eq!(g2p("आपका").unwrap().as_str(), "ApkA");
//! ```

pub mod error;
pub mod g2p;
pub mod lexicon;
pub mod normalize;
pub mod pipeline;
pub mod spellcheck;
pub mod text;
pub mod wx;

pub use error::{
    ApplyError, ConfigError, LexiconError, NormalizeError, TableError, TextError, WxError,
};
pub use g2p::{delete_schwas, g2p, resolve_nasals, PhonemeString};
pub use lexicon::Lexicon;
pub use normalize::{expand_number, normalize_text, NormalizeTables, NswClass};
pub use pipeline::{analyze, apply_suggestion, AnalysisReport, PipelineConfig, Resources};
pub use spellcheck::{auto_correct, check, edit_distance, suggest, Suggestion};
pub use text::{segment_aksharas, tokenize, Span, Token, TokenKind};
pub use wx::{from_wx, to_wx, WxString};

/// Golden corpus shipped with the crate: `devanagari<TAB>expected-phonemes`.
pub const GOLDEN_TSV: &str = include_str!("../data/golden.tsv");
