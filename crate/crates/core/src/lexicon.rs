//! Reference word list used for non-word error detection.
//!
//! Line format: `word[<TAB>frequency]`, UTF-8, `#` comments and blank lines
//! ignored. Words are stored in NFC.

use std::collections::BTreeMap;
use std::io::BufRead;
use std::sync::OnceLock;

use unicode_normalization::UnicodeNormalization;

use crate::error::LexiconError;
use crate::spellcheck::BkTree;
use crate::text::{classify_char, segment_aksharas, ZWJ, ZWNJ};

pub const FIXTURE_LEXICON_TSV: &str = include_str!("../data/lexicon.tsv");

pub const DEFAULT_FREQUENCY: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedEntry {
    pub line_no: usize,
    pub word: String,
    pub reason: String,
}

#[derive(Debug)]
pub struct LoadOutcome {
    pub lexicon: Lexicon,
    pub skipped: Vec<SkippedEntry>,
}

#[derive(Debug, Default)]
pub struct Lexicon {
    entries: BTreeMap<String, u64>,
    index: OnceLock<BkTree>,
}

impl Clone for Lexicon {
    fn clone(&self) -> Self {
        Lexicon::from_entries(self.entries.clone())
    }
}

impl PartialEq for Lexicon {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for Lexicon {}

/// Whether `word` can be a lexicon key: non-empty Devanagari letters that segment cleanly.
pub fn is_well_formed_word(word: &str) -> Result<(), String> {
    if word.is_empty() {
        return Err("empty word".into());
    }
    if let Some(c) = word
        .chars()
        .find(|&c| !(classify_char(c).class.is_letter() || c == ZWJ || c == ZWNJ))
    {
        return Err(format!("non-letter character {c:?}"));
    }
    segment_aksharas(word)
        .map(|_| ())
        .map_err(|e| e.to_string())
}

impl Lexicon {
    pub fn new() -> Self {
        Lexicon::default()
    }

    /// Build from already-validated entries. Keys are normalized to NFC.
    pub fn from_entries<I, S>(entries: I) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<str>,
    {
        let mut map = BTreeMap::new();
        for (w, f) in entries {
            let key: String = w.as_ref().nfc().collect();
            let slot = map.entry(key).or_insert(f);
            *slot = (*slot).max(f);
        }
        Lexicon {
            entries: map,
            index: OnceLock::new(),
        }
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Lexicon::from_entries(words.into_iter().map(|w| (w, DEFAULT_FREQUENCY)))
    }

    /// The fixture list compiled into the crate.
    pub fn fixture() -> &'static Lexicon {
        static FIXTURE: OnceLock<Lexicon> = OnceLock::new();
        FIXTURE.get_or_init(|| {
            Lexicon::load(FIXTURE_LEXICON_TSV.as_bytes())
                .expect("fixture lexicon parses")
                .lexicon
        })
    }

    pub fn load<R: BufRead>(mut reader: R) -> Result<LoadOutcome, LexiconError> {
        let mut entries: Vec<(String, u64)> = Vec::new();
        let mut skipped = Vec::new();
        let mut buf = Vec::new();
        let mut line_no = 0;
        loop {
            buf.clear();
            if reader.read_until(b'\n', &mut buf)? == 0 {
                break;
            }
            line_no += 1;
            let line = std::str::from_utf8(&buf).map_err(|_| LexiconError::MalformedLine {
                line_no,
                reason: "not valid UTF-8".into(),
            })?;
            let line = if line_no == 1 {
                line.trim_start_matches('\u{FEFF}')
            } else {
                line
            };
            let line = line.trim_end_matches(['\n', '\r']);
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            let word: String = cols.next().unwrap_or("").trim().nfc().collect();
            let freq = match cols.next().map(str::trim) {
                None | Some("") => DEFAULT_FREQUENCY,
                Some(f) if f.starts_with('-') => {
                    return Err(LexiconError::MalformedLine {
                        line_no,
                        reason: format!("negative frequency {f:?}"),
                    })
                }
                Some(f) => f.parse().map_err(|_| LexiconError::MalformedLine {
                    line_no,
                    reason: format!("frequency {f:?} is not a non-negative integer"),
                })?,
            };
            if cols.next().is_some() {
                return Err(LexiconError::MalformedLine {
                    line_no,
                    reason: "more than two columns".into(),
                });
            }
            match is_well_formed_word(&word) {
                Ok(()) => entries.push((word, freq)),
                Err(reason) => skipped.push(SkippedEntry {
                    line_no,
                    word,
                    reason,
                }),
            }
        }
        Ok(LoadOutcome {
            lexicon: Lexicon::from_entries(entries),
            skipped,
        })
    }

    /// One `word<TAB>frequency` line per entry, sorted by word.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (w, f) in &self.entries {
            out.push_str(w);
            out.push('\t');
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(&nfc(word))
    }

    pub fn frequency(&self, word: &str) -> Option<u64> {
        self.entries.get(&nfc(word)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in codepoint order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.entries.iter().map(|(w, f)| (w.as_str(), *f))
    }

    pub(crate) fn index(&self) -> &BkTree {
        self.index
            .get_or_init(|| BkTree::build(self.entries.keys().map(String::as_str)))
    }
}

pub(crate) fn nfc(s: &str) -> String {
    s.nfc().collect()
}
