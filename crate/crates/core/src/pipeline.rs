//! End-to-end analysis: tokenize, spellcheck and correct, normalize,
//! transliterate and phonemize, collected into an [`AnalysisReport`].

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{ApplyError, ConfigError};
use crate::g2p::g2p;
use crate::lexicon::Lexicon;
use crate::normalize::{
    normalize_text, parse_abbreviations, parse_symbols, NormalizeFlagKind, NormalizeTables,
    NumberNameTable, ABBREVIATIONS_TSV, NUMBERS_TSV, SYMBOLS_TSV,
};
use crate::spellcheck::{
    check, resolve_word, suggest, AppliedCorrection, Suggestion, Unresolved, DEFAULT_MAX_DISTANCE,
    DEFAULT_TOP_K,
};
use crate::text::{slice_chars, tokenize, Span, Token, TokenKind};
use crate::wx::to_wx;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub top_k: usize,
    pub max_distance: usize,
    pub auto_correct: bool,
    /// Let `apply_suggestion` accept any lexicon word, not only offered suggestions.
    pub free_choice: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            top_k: DEFAULT_TOP_K,
            max_distance: DEFAULT_MAX_DISTANCE,
            auto_correct: false,
            free_choice: false,
        }
    }
}

/// Immutable lexicon and tables shared by every analysis.
#[derive(Debug, Clone)]
pub struct Resources {
    pub lexicon: Lexicon,
    pub tables: NormalizeTables,
}

/// Optional file overrides; `None` means the shipped fixture.
#[derive(Debug, Clone, Default)]
pub struct ResourcePaths {
    pub lexicon: Option<PathBuf>,
    pub abbreviations: Option<PathBuf>,
    pub numbers: Option<PathBuf>,
    pub symbols: Option<PathBuf>,
}

impl ResourcePaths {
    /// Fill unset paths from a data directory holding the standard file names.
    pub fn with_data_dir(mut self, dir: &Path) -> Self {
        let pick = |slot: &mut Option<PathBuf>, name: &str| {
            let p = dir.join(name);
            if slot.is_none() && p.exists() {
                *slot = Some(p);
            }
        };
        pick(&mut self.lexicon, "lexicon.tsv");
        pick(&mut self.abbreviations, "abbreviations.tsv");
        pick(&mut self.numbers, "numbers.tsv");
        pick(&mut self.symbols, "symbols.tsv");
        self
    }
}

fn read_file(path: &Path) -> Result<String, ConfigError> {
    std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })
}

impl Resources {
    pub fn new(lexicon: Lexicon, tables: NormalizeTables) -> Self {
        Resources { lexicon, tables }
    }

    pub fn builtin() -> Resources {
        Resources::new(
            Lexicon::fixture().clone(),
            NormalizeTables::builtin().clone(),
        )
    }

    pub fn load(paths: &ResourcePaths) -> Result<Resources, ConfigError> {
        let lexicon = match &paths.lexicon {
            None => Lexicon::fixture().clone(),
            Some(p) => {
                let f = File::open(p).map_err(|source| ConfigError::Io {
                    path: p.display().to_string(),
                    source,
                })?;
                Lexicon::load(BufReader::new(f))
                    .map_err(|source| ConfigError::Lexicon {
                        path: p.display().to_string(),
                        source,
                    })?
                    .lexicon
            }
        };
        let text = |p: &Option<PathBuf>, builtin: &str| -> Result<String, ConfigError> {
            match p {
                Some(p) => read_file(p),
                None => Ok(builtin.to_string()),
            }
        };
        let numbers = NumberNameTable::parse(&text(&paths.numbers, NUMBERS_TSV)?)?;
        let abbreviations = parse_abbreviations(&text(&paths.abbreviations, ABBREVIATIONS_TSV)?)?;
        let symbols = parse_symbols(&text(&paths.symbols, SYMBOLS_TSV)?)?;
        Ok(Resources::new(
            lexicon,
            NormalizeTables::new(numbers, abbreviations, symbols),
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMisspelling {
    pub span: Span,
    pub word: String,
    pub suggestions: Vec<Suggestion>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedWord {
    pub text: String,
    pub kind: TokenKind,
    /// Span in `corrected` of the token this came from.
    pub source_span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordWx {
    pub word: String,
    pub wx: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordPhonemes {
    pub word: String,
    pub phonemes: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Phonemes {
    pub words: Vec<WordPhonemes>,
    /// Word phonemes joined by single spaces.
    pub sentence: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnresolvedKind {
    AmbiguousCorrection,
    NoSuggestion,
    UnknownAbbreviation,
    NumberOutOfRange,
    Unphonemizable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnresolvedItem {
    pub kind: UnresolvedKind,
    pub text: String,
    /// In `source` for correction items, in `corrected` for the rest.
    pub span: Span,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub source: String,
    pub tokens: Vec<Token>,
    pub misspellings: Vec<ReportMisspelling>,
    pub corrections: Vec<AppliedCorrection>,
    pub corrected: String,
    pub normalized: Vec<NormalizedWord>,
    pub wx: Vec<WordWx>,
    pub phonemes: Phonemes,
    pub unresolved: Vec<UnresolvedItem>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn normalized_text(&self) -> String {
        self.normalized
            .iter()
            .map(|w| w.text.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Run every stage over `text`. Per-word failures land in `unresolved`.
pub fn analyze(text: &str, config: &PipelineConfig, res: &Resources) -> AnalysisReport {
    let lex = &res.lexicon;
    let tokens = tokenize(text);

    let misspellings: Vec<ReportMisspelling> = check(&tokens, lex)
        .into_iter()
        .map(|m| ReportMisspelling {
            span: m.token.span,
            suggestions: suggest(&m.token.text, lex, config.top_k, config.max_distance),
            word: m.token.text,
        })
        .collect();

    let mut unresolved = Vec::new();
    let mut corrections = Vec::new();
    let corrected = if config.auto_correct {
        let mut out = String::with_capacity(text.len());
        let mut flagged = misspellings.iter().peekable();
        for t in &tokens {
            if flagged.peek().is_some_and(|m| m.span == t.span) {
                flagged.next();
                match resolve_word(&t.text, t.span, lex) {
                    Ok(rep) => {
                        out.push_str(&rep);
                        corrections.push(AppliedCorrection {
                            span: t.span,
                            original: t.text.clone(),
                            replacement: rep,
                        });
                    }
                    Err(u) => {
                        out.push_str(&t.text);
                        unresolved.push(match u {
                            Unresolved::Ambiguous {
                                span,
                                word,
                                candidates,
                                distance,
                            } => UnresolvedItem {
                                kind: UnresolvedKind::AmbiguousCorrection,
                                text: word,
                                span,
                                detail: format!(
                                    "{} candidate(s) at distance {distance}: {}",
                                    candidates.len(),
                                    candidates.join(", ")
                                ),
                            },
                            Unresolved::NoCandidate { span, word } => UnresolvedItem {
                                kind: UnresolvedKind::NoSuggestion,
                                text: word,
                                span,
                                detail: "no lexicon word within the distance bound".into(),
                            },
                        });
                    }
                }
            } else {
                out.push_str(&t.text);
            }
        }
        out
    } else {
        text.to_string()
    };

    let normalized = normalize_text(&tokenize(&corrected), &res.tables);
    for f in &normalized.flags {
        let (kind, detail) = match f.kind {
            NormalizeFlagKind::UnknownAbbreviation => (
                UnresolvedKind::UnknownAbbreviation,
                "not in the abbreviation table".to_string(),
            ),
            NormalizeFlagKind::NumberOutOfRange => (
                UnresolvedKind::NumberOutOfRange,
                "read digit by digit".to_string(),
            ),
        };
        unresolved.push(UnresolvedItem {
            kind,
            text: f.text.clone(),
            span: f.span,
            detail,
        });
    }

    let mut wx = Vec::new();
    let mut words = Vec::new();
    for t in normalized
        .tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Word)
    {
        let result = to_wx(&t.text).and_then(|w| {
            let ph = g2p(&t.text)?;
            Ok((w, ph))
        });
        match result {
            Ok((w, ph)) => {
                wx.push(WordWx {
                    word: t.text.clone(),
                    wx: w.into_inner(),
                });
                words.push(WordPhonemes {
                    word: t.text.clone(),
                    phonemes: ph.into_inner(),
                });
            }
            Err(e) => unresolved.push(UnresolvedItem {
                kind: UnresolvedKind::Unphonemizable,
                text: t.text.clone(),
                span: t.span,
                detail: e.to_string(),
            }),
        }
    }
    let sentence = words
        .iter()
        .map(|w| w.phonemes.as_str())
        .collect::<Vec<_>>()
        .join(" ");

    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        source: text.to_string(),
        tokens,
        misspellings,
        corrections,
        corrected,
        normalized: normalized
            .tokens
            .into_iter()
            .map(|t| NormalizedWord {
                text: t.text,
                kind: t.kind,
                source_span: t.span,
            })
            .collect(),
        wx,
        phonemes: Phonemes { words, sentence },
        unresolved,
    }
}

/// Replace the misspelling at `span` with `chosen` and re-analyze.
pub fn apply_suggestion(
    report: &AnalysisReport,
    span: Span,
    chosen: &str,
    config: &PipelineConfig,
    res: &Resources,
) -> Result<AnalysisReport, ApplyError> {
    let m = report
        .misspellings
        .iter()
        .find(|m| m.span == span)
        .filter(|m| slice_chars(&report.source, span) == Some(m.word.as_str()))
        .ok_or(ApplyError::UnknownSpan(span))?;
    if m.word == chosen {
        return Ok(report.clone());
    }
    let offered = m.suggestions.iter().any(|s| s.candidate == chosen);
    if !offered && !(config.free_choice && res.lexicon.contains(chosen)) {
        return Err(ApplyError::NotASuggestion(chosen.to_string()));
    }
    let chars: Vec<char> = report.source.chars().collect();
    let mut edited: String = chars[..span.start].iter().collect();
    edited.push_str(chosen);
    edited.extend(&chars[span.end..]);
    Ok(analyze(&edited, config, res))
}
