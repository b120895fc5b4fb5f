//! JSON documents printed by `--json`. Shapes are pinned by `schema/output.schema.json`.

use serde::Serialize;
use ttsfe_core::pipeline::{
    NormalizedWord, ReportMisspelling, UnresolvedItem, UnresolvedKind, WordPhonemes, WordWx,
    SCHEMA_VERSION,
};
use ttsfe_core::spellcheck::AppliedCorrection;
use ttsfe_core::AnalysisReport;

#[derive(Serialize)]
pub struct CheckOutput<'a> {
    pub schema_version: u32,
    pub command: &'static str,
    pub misspellings: &'a [ReportMisspelling],
}

impl<'a> CheckOutput<'a> {
    pub fn new(r: &'a AnalysisReport) -> Self {
        CheckOutput {
            schema_version: SCHEMA_VERSION,
            command: "check",
            misspellings: &r.misspellings,
        }
    }
}

fn is_correction_item(u: &UnresolvedItem) -> bool {
    matches!(
        u.kind,
        UnresolvedKind::AmbiguousCorrection | UnresolvedKind::NoSuggestion
    )
}

#[derive(Serialize)]
pub struct CorrectOutput {
    pub schema_version: u32,
    pub command: &'static str,
    pub corrected: String,
    pub corrections: Vec<AppliedCorrection>,
    pub unresolved: Vec<UnresolvedItem>,
}

impl CorrectOutput {
    pub fn new(r: &AnalysisReport) -> Self {
        CorrectOutput {
            schema_version: SCHEMA_VERSION,
            command: "correct",
            corrected: r.corrected.clone(),
            corrections: r.corrections.clone(),
            unresolved: r
                .unresolved
                .iter()
                .filter(|u| is_correction_item(u))
                .cloned()
                .collect(),
        }
    }
}

/// A per-line result of the `normalize`, `wx` and `g2p` subcommands.
pub trait HasUnresolved {
    const COMMAND: &'static str;
    fn has_unresolved(&self) -> bool;
}

#[derive(Serialize)]
pub struct LinesOutput<'a, L> {
    pub schema_version: u32,
    pub command: &'static str,
    pub lines: &'a [L],
}

impl<'a, L: HasUnresolved> LinesOutput<'a, L> {
    pub fn new(lines: &'a [L]) -> Self {
        LinesOutput {
            schema_version: SCHEMA_VERSION,
            command: L::COMMAND,
            lines,
        }
    }
}

#[derive(Serialize)]
pub struct NormalizeLine {
    pub line: usize,
    pub normalized: Vec<NormalizedWord>,
    pub unresolved: Vec<UnresolvedItem>,
}

impl NormalizeLine {
    pub fn new(line: usize, r: &AnalysisReport) -> Self {
        NormalizeLine {
            line,
            normalized: r.normalized.clone(),
            unresolved: r.unresolved.clone(),
        }
    }
}

impl HasUnresolved for NormalizeLine {
    const COMMAND: &'static str = "normalize";
    fn has_unresolved(&self) -> bool {
        !self.unresolved.is_empty()
    }
}

#[derive(Serialize)]
pub struct WxLine {
    pub line: usize,
    pub words: Vec<WordWx>,
    pub unresolved: Vec<UnresolvedItem>,
}

impl WxLine {
    pub fn new(line: usize, r: &AnalysisReport) -> Self {
        WxLine {
            line,
            words: r.wx.clone(),
            unresolved: r.unresolved.clone(),
        }
    }
}

impl HasUnresolved for WxLine {
    const COMMAND: &'static str = "wx";
    fn has_unresolved(&self) -> bool {
        !self.unresolved.is_empty()
    }
}

#[derive(Serialize)]
pub struct G2pLine {
    pub line: usize,
    pub words: Vec<WordPhonemes>,
    pub sentence: String,
    pub unresolved: Vec<UnresolvedItem>,
}

impl G2pLine {
    pub fn new(line: usize, r: &AnalysisReport) -> Self {
        G2pLine {
            line,
            words: r.phonemes.words.clone(),
            sentence: r.phonemes.sentence.clone(),
            unresolved: r.unresolved.clone(),
        }
    }
}

impl HasUnresolved for G2pLine {
    const COMMAND: &'static str = "g2p";
    fn has_unresolved(&self) -> bool {
        !self.unresolved.is_empty()
    }
}

#[derive(Serialize)]
pub struct GoldenEntry {
    pub word: String,
    pub phonemes: String,
}

#[derive(Serialize)]
pub struct GoldenOutput {
    pub schema_version: u32,
    pub command: &'static str,
    pub changed: usize,
    pub entries: Vec<GoldenEntry>,
}
