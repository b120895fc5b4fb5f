//! Reversible Devanagari ⇄ WX transliteration.
//!
//! The mapping lives in `data/wx_table.tsv`. Consonants are stored bare and
//! the inherent vowel is emitted positionally: a consonant with neither a
//! virama nor a vowel sign is followed by `a`. Nukta letters are written as
//! the base consonant plus `Z`, whichever way they are encoded.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{TableError, WxError};
use crate::text::{classify_char, segment_aksharas, CharClass, NUKTA, VIRAMA, ZWJ, ZWNJ};

pub const WX_TABLE_TSV: &str = include_str!("../data/wx_table.tsv");

/// Every symbol a WX string may contain.
pub const WX_ALPHABET: &str = "aAiIuUeEoOkKgGfcCjJFtTdDNwWxXnpPbBmyrlvSRshqzMHYZ";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WxString(String);

impl WxString {
    pub fn new(value: impl Into<String>) -> Result<Self, WxError> {
        let value = value.into();
        if let Some(offset) = value.find(|c: char| !WX_ALPHABET.contains(c)) {
            return Err(WxError::UnparseableWx {
                input: value,
                offset,
                reason: "symbol outside the WX alphabet",
            });
        }
        Ok(WxString(value))
    }

    pub(crate) fn from_trusted(value: String) -> Self {
        WxString(value)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_inner(self) -> String {
        self.0
    }
}

impl fmt::Display for WxString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for WxString {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WxClass {
    Vowel,
    Matra,
    Consonant,
    Anusvara,
    Candrabindu,
    Visarga,
    Nukta,
    Virama,
}

impl WxClass {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "vowel" => WxClass::Vowel,
            "matra" => WxClass::Matra,
            "consonant" => WxClass::Consonant,
            "anusvara" => WxClass::Anusvara,
            "candrabindu" => WxClass::Candrabindu,
            "visarga" => WxClass::Visarga,
            "nukta" => WxClass::Nukta,
            "virama" => WxClass::Virama,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sym {
    Consonant(char),
    Vowel {
        independent: char,
        matra: Option<char>,
    },
    Modifier(char),
    Nukta,
}

#[derive(Debug, Clone)]
pub struct WxTable {
    forward: HashMap<char, (String, WxClass)>,
    /// WX symbol → decoded meaning, longest symbols first for matching.
    reverse: Vec<(String, Sym)>,
}

impl WxTable {
    pub fn builtin() -> &'static WxTable {
        static TABLE: OnceLock<WxTable> = OnceLock::new();
        TABLE.get_or_init(|| WxTable::parse(WX_TABLE_TSV).expect("shipped WX table is valid"))
    }

    pub fn parse(src: &str) -> Result<WxTable, TableError> {
        let bad = |line_no, reason: &str| TableError::MalformedLine {
            table: "wx",
            line_no,
            reason: reason.to_string(),
        };
        let mut forward = HashMap::new();
        let mut vowels: HashMap<String, (Option<char>, Option<char>)> = HashMap::new();
        let mut reverse = Vec::new();
        for (idx, line) in src.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(bad(line_no, "expected three tab-separated columns"));
            }
            let mut dev = cols[0].chars();
            let ch = match (dev.next(), dev.next()) {
                (Some(c), None) => c,
                _ => return Err(bad(line_no, "devanagari column must be one codepoint")),
            };
            let wx = cols[1].to_string();
            let class = WxClass::parse(cols[2]).ok_or_else(|| bad(line_no, "unknown class"))?;
            if class != WxClass::Virama && (wx.is_empty() || WxString::new(wx.clone()).is_err()) {
                return Err(bad(line_no, "wx column must be non-empty WX symbols"));
            }
            if forward.insert(ch, (wx.clone(), class)).is_some() {
                return Err(bad(line_no, "duplicate devanagari entry"));
            }
            match class {
                WxClass::Vowel => vowels.entry(wx).or_default().0 = Some(ch),
                WxClass::Matra => vowels.entry(wx).or_default().1 = Some(ch),
                WxClass::Consonant => {
                    let mut cs = wx.chars();
                    if cs.next().is_none() || cs.next().is_some() {
                        return Err(bad(line_no, "consonant symbols are single letters"));
                    }
                    reverse.push((wx, Sym::Consonant(ch)));
                }
                WxClass::Anusvara | WxClass::Candrabindu | WxClass::Visarga => {
                    reverse.push((wx, Sym::Modifier(ch)))
                }
                WxClass::Nukta => reverse.push((wx, Sym::Nukta)),
                WxClass::Virama => {}
            }
        }
        for (wx, (independent, matra)) in vowels {
            let independent =
                independent.ok_or_else(|| bad(0, "matra without an independent vowel"))?;
            reverse.push((wx, Sym::Vowel { independent, matra }));
        }
        reverse.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        let mut seen = std::collections::HashSet::new();
        for (wx, _) in &reverse {
            if !seen.insert(wx.clone()) {
                return Err(bad(0, "WX symbol used for two different letters"));
            }
        }
        Ok(WxTable { forward, reverse })
    }

    fn lookup(&self, c: char) -> Option<&(String, WxClass)> {
        self.forward.get(&c)
    }

    /// Consonant to WX, decomposing precomposed nukta letters.
    fn consonant_wx(&self, c: char) -> Option<String> {
        if let Some((wx, WxClass::Consonant)) = self.lookup(c) {
            return Some(wx.clone());
        }
        let mut parts = std::iter::once(c).nfd();
        let base = parts.next()?;
        match (parts.next(), parts.next()) {
            (Some(NUKTA), None) => {
                let (wx, class) = self.lookup(base)?;
                let (nukta, _) = self.lookup(NUKTA)?;
                (*class == WxClass::Consonant).then(|| format!("{wx}{nukta}"))
            }
            _ => None,
        }
    }

    pub fn to_wx(&self, word: &str) -> Result<WxString, WxError> {
        let unmappable = |ch| WxError::UnmappableChar {
            word: word.to_string(),
            ch,
        };
        let mut out = String::new();
        for ak in segment_aksharas(word)? {
            let chars: Vec<char> = ak
                .chars
                .iter()
                .map(|c| c.codepoint)
                .filter(|&c| c != ZWJ && c != ZWNJ)
                .collect();
            // A consonant whose inherent vowel is still owed.
            let mut pending = false;
            for &c in &chars {
                match classify_char(c).class {
                    CharClass::Consonant => {
                        out.push_str(&self.consonant_wx(c).ok_or_else(|| unmappable(c))?);
                        pending = true;
                    }
                    CharClass::Nukta => {
                        out.push_str(&self.lookup(c).ok_or_else(|| unmappable(c))?.0);
                    }
                    CharClass::Virama => pending = false,
                    CharClass::DependentVowelSign => match self.lookup(c) {
                        Some((wx, WxClass::Matra)) => {
                            out.push_str(wx);
                            pending = false;
                        }
                        _ => return Err(unmappable(c)),
                    },
                    CharClass::IndependentVowel => match self.lookup(c) {
                        Some((wx, WxClass::Vowel)) => out.push_str(wx),
                        _ => return Err(unmappable(c)),
                    },
                    CharClass::Anusvara | CharClass::Candrabindu | CharClass::Visarga => {
                        if pending {
                            out.push('a');
                            pending = false;
                        }
                        out.push_str(&self.lookup(c).ok_or_else(|| unmappable(c))?.0);
                    }
                    _ => return Err(unmappable(c)),
                }
            }
            if pending && chars.last() != Some(&VIRAMA) {
                out.push('a');
            }
        }
        Ok(WxString::from_trusted(out))
    }

    pub fn from_wx(&self, s: &str) -> Result<String, WxError> {
        let fail = |offset, reason| WxError::UnparseableWx {
            input: s.to_string(),
            offset,
            reason,
        };
        WxString::new(s)?;
        let mut out = String::new();
        let mut pending = false;
        // True once a vowel (or inherent 'a') has been placed, so modifiers may attach.
        let mut voiced = false;
        let mut after_consonant = false;
        let mut i = 0;
        while i < s.len() {
            let rest = &s[i..];
            let (sym_len, sym) = self
                .reverse
                .iter()
                .find(|(wx, _)| rest.starts_with(wx.as_str()))
                .map(|(wx, sym)| (wx.len(), *sym))
                .ok_or_else(|| fail(i, "no symbol starts here"))?;
            match sym {
                Sym::Consonant(c) => {
                    if pending {
                        out.push(VIRAMA);
                    }
                    out.push(c);
                    pending = true;
                    voiced = false;
                    after_consonant = true;
                }
                Sym::Nukta => {
                    if !after_consonant {
                        return Err(fail(i, "nukta must follow a consonant letter"));
                    }
                    out.push(NUKTA);
                    after_consonant = false;
                }
                Sym::Vowel { independent, matra } => {
                    if pending {
                        if let Some(m) = matra {
                            out.push(m);
                        } else if independent != 'अ' {
                            return Err(fail(i, "vowel has no sign form"));
                        }
                        pending = false;
                    } else {
                        out.push(independent);
                    }
                    voiced = true;
                    after_consonant = false;
                }
                Sym::Modifier(c) => {
                    if !voiced {
                        return Err(fail(i, "modifier without a preceding vowel"));
                    }
                    out.push(c);
                    after_consonant = false;
                }
            }
            i += sym_len;
        }
        if pending {
            out.push(VIRAMA);
        }
        Ok(out.nfc().collect())
    }
}

/// Transliterate a Devanagari word with the shipped table.
pub fn to_wx(word: &str) -> Result<WxString, WxError> {
    WxTable::builtin().to_wx(word)
}

/// Inverse of [`to_wx`] with the shipped table; output is NFC.
pub fn from_wx(s: &str) -> Result<String, WxError> {
    WxTable::builtin().from_wx(s)
}
