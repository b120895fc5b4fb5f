use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("malformed cluster in {word:?} at offset {offset}: {reason}")]
    MalformedCluster {
        word: String,
        offset: usize,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WxError {
    #[error(transparent)]
    Text(#[from] TextError),
    #[error("no WX mapping for {ch:?} (U+{:04X}) in {word:?}", *ch as u32)]
    UnmappableChar { word: String, ch: char },
    #[error("cannot parse WX string {input:?} at byte {offset}: {reason}")]
    UnparseableWx {
        input: String,
        offset: usize,
        reason: &'static str,
    },
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line_no}: {reason}")]
    MalformedLine { line_no: usize, reason: String },
    #[error("reading lexicon")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("{value} is beyond the supported range (max {max})")]
    OutOfRange { value: u64, max: u64 },
    #[error("{value} cannot be read as a year")]
    NotAYear { value: u64 },
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("{table} line {line_no}: {reason}")]
    MalformedLine {
        table: &'static str,
        line_no: usize,
        reason: String,
    },
    #[error("{table}: missing entry for {value}")]
    MissingEntry { table: &'static str, value: u64 },
    #[error("reading {table}")]
    Io {
        table: &'static str,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("lexicon {path}")]
    Lexicon {
        path: String,
        #[source]
        source: LexiconError,
    },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("reading {path}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplyError {
    #[error("no misspelling at span {0}")]
    UnknownSpan(crate::text::Span),
    #[error("{0:?} is not an offered suggestion for this span")]
    NotASuggestion(String),
}
