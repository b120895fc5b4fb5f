//! Rule-based grapheme-to-phoneme conversion.
//!
//! `g2p(word) = delete_schwas(resolve_nasals(to_wx(word)))`, all over WX.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::WxError;
use crate::wx::{to_wx, WxString, WX_ALPHABET};

const CONSONANTS: &str = "kKgGfcCjJFtTdDNwWxXnpPbBmyrlvSRshH";
const VOWELS: &str = "aAiIuUeEoOq";
const LABIALS: &str = "pPbBm";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    Consonant,
    Vowel,
    /// A vowel followed by a nasal coda (`n`/`m` before a consonant).
    NasalizedVowel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub text: String,
    pub kind: SegmentKind,
}

/// Phoneme string over the WX alphabet with every nasal mark resolved.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PhonemeString(String);

impl PhonemeString {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_inner(self) -> String {
        self.0
    }

    pub fn segments(&self) -> Vec<Segment> {
        let units = parse_units(&self.0).expect("phoneme strings are always parsable");
        let mut out: Vec<Segment> = Vec::with_capacity(units.len());
        for (i, u) in units.iter().enumerate() {
            if is_coda_nasal(&units, i) {
                let prev = out.last_mut().unwrap();
                prev.text.push_str(&u.text);
                prev.kind = SegmentKind::NasalizedVowel;
                continue;
            }
            out.push(Segment {
                text: u.text.clone(),
                kind: if u.vowel {
                    SegmentKind::Vowel
                } else {
                    SegmentKind::Consonant
                },
            });
        }
        out
    }
}

impl fmt::Display for PhonemeString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for PhonemeString {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Unit {
    text: String,
    vowel: bool,
}

fn parse_units(s: &str) -> Result<Vec<Unit>, WxError> {
    let fail = |offset, reason| WxError::UnparseableWx {
        input: s.to_string(),
        offset,
        reason,
    };
    let bytes = s.as_bytes();
    let mut units = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if VOWELS.contains(c) {
            let len = if c == 'o' && bytes.get(i + 1) == Some(&b'Y') {
                2
            } else {
                1
            };
            units.push(Unit {
                text: s[i..i + len].to_string(),
                vowel: true,
            });
            i += len;
        } else if CONSONANTS.contains(c) {
            let len = if c != 'H' && bytes.get(i + 1) == Some(&b'Z') {
                2
            } else {
                1
            };
            units.push(Unit {
                text: s[i..i + len].to_string(),
                vowel: false,
            });
            i += len;
        } else if c == 'z' || c == 'M' {
            return Err(fail(i, "unresolved nasal mark"));
        } else if WX_ALPHABET.contains(c) {
            return Err(fail(i, "misplaced WX symbol"));
        } else {
            return Err(fail(i, "symbol outside the WX alphabet"));
        }
    }
    Ok(units)
}

/// `n`/`m` between a vowel and a consonant: the coda of a nasalized vowel.
fn is_coda_nasal(units: &[Unit], i: usize) -> bool {
    let u = &units[i];
    (u.text == "n" || u.text == "m")
        && i > 0
        && units[i - 1].vowel
        && units.get(i + 1).is_some_and(|n| !n.vowel)
}

fn vowelish(units: &[Unit], i: usize) -> bool {
    units[i].vowel || is_coda_nasal(units, i)
}

/// Replace anusvara `z` and candrabindu `M` with `m` before a labial, otherwise `n`.
pub fn resolve_nasals(s: &WxString) -> WxString {
    let chars: Vec<char> = s.as_str().chars().collect();
    let resolved: String = chars
        .iter()
        .enumerate()
        .map(|(i, &c)| match c {
            'z' | 'M' => match chars.get(i + 1) {
                Some(n) if LABIALS.contains(*n) => 'm',
                _ => 'n',
            },
            c => c,
        })
        .collect();
    WxString::new(resolved).expect("resolution stays inside the alphabet")
}

fn is_schwa(units: &[Unit], i: usize) -> bool {
    units[i].text == "a" && i > 0 && !units[i - 1].vowel
}

/// Delete inherent schwas from a nasal-resolved WX string.
///
/// A final schwa goes unless the whole word is one consonant cluster plus
/// `a`. Then, right to left over the edited string, a schwa in the context
/// vowel–consonant–_–consonant–vowel goes. Coda nasals count as part of
/// the preceding vowel.
pub fn delete_schwas(s: &str) -> Result<PhonemeString, WxError> {
    let mut units = parse_units(s)?;
    if let Some(last) = units.len().checked_sub(1) {
        let single_unit = units[..last].iter().all(|u| !u.vowel);
        if is_schwa(&units, last) && !single_unit {
            units.pop();
        }
    }
    let mut i = units.len();
    while i > 0 {
        i -= 1;
        let deletable = is_schwa(&units, i)
            && i >= 2
            && vowelish(&units, i - 2)
            && i + 2 < units.len()
            && !units[i + 1].vowel
            && units[i + 2].vowel;
        if deletable {
            units.remove(i);
        }
    }
    Ok(PhonemeString(units.into_iter().map(|u| u.text).collect()))
}

pub fn g2p(word: &str) -> Result<PhonemeString, WxError> {
    let wx = to_wx(word)?;
    delete_schwas(resolve_nasals(&wx).as_str())
}
