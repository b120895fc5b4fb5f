//! Devanagari character classes, akshara segmentation and tokenization.
//!
//! All offsets are counted in Unicode scalar values, not bytes.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::TextError;

pub const VIRAMA: char = '\u{094D}';
pub const ANUSVARA: char = '\u{0902}';
pub const CANDRABINDU: char = '\u{0901}';
pub const VISARGA: char = '\u{0903}';
pub const NUKTA: char = '\u{093C}';
pub const DANDA: char = '\u{0964}';
pub const DOUBLE_DANDA: char = '\u{0965}';
pub const ZWNJ: char = '\u{200C}';
pub const ZWJ: char = '\u{200D}';

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharClass {
    IndependentVowel,
    Consonant,
    DependentVowelSign,
    Virama,
    Anusvara,
    Candrabindu,
    Visarga,
    Nukta,
    DevDigit,
    AsciiDigit,
    Whitespace,
    Punctuation,
    Other,
}

impl CharClass {
    /// Letters, signs and modifiers: everything that may appear inside a word.
    pub fn is_letter(self) -> bool {
        matches!(
            self,
            CharClass::IndependentVowel
                | CharClass::Consonant
                | CharClass::DependentVowelSign
                | CharClass::Virama
                | CharClass::Anusvara
                | CharClass::Candrabindu
                | CharClass::Visarga
                | CharClass::Nukta
        )
    }

    pub fn is_modifier(self) -> bool {
        matches!(
            self,
            CharClass::Anusvara | CharClass::Candrabindu | CharClass::Visarga
        )
    }

    pub fn is_digit(self) -> bool {
        matches!(self, CharClass::DevDigit | CharClass::AsciiDigit)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DevChar {
    pub codepoint: char,
    pub class: CharClass,
}

pub fn classify_char(c: char) -> DevChar {
    let class = match c {
        '\u{0904}'..='\u{0914}' | '\u{0972}'..='\u{0977}' => CharClass::IndependentVowel,
        '\u{0915}'..='\u{0939}' | '\u{0958}'..='\u{095F}' => CharClass::Consonant,
        '\u{093E}'..='\u{094C}' | '\u{0955}'..='\u{0957}' | '\u{0962}'..='\u{0963}' => {
            CharClass::DependentVowelSign
        }
        VIRAMA => CharClass::Virama,
        ANUSVARA => CharClass::Anusvara,
        CANDRABINDU => CharClass::Candrabindu,
        VISARGA => CharClass::Visarga,
        NUKTA => CharClass::Nukta,
        '\u{0966}'..='\u{096F}' => CharClass::DevDigit,
        '0'..='9' => CharClass::AsciiDigit,
        c if c.is_whitespace() => CharClass::Whitespace,
        DANDA | DOUBLE_DANDA => CharClass::Punctuation,
        c if is_punctuation_mark(c) => CharClass::Punctuation,
        _ => CharClass::Other,
    };
    DevChar {
        codepoint: c,
        class,
    }
}

fn is_punctuation_mark(c: char) -> bool {
    matches!(
        c,
        '.' | ','
            | ';'
            | ':'
            | '!'
            | '?'
            | '\''
            | '"'
            | '('
            | ')'
            | '['
            | ']'
            | '{'
            | '}'
            | '-'
            | '_'
            | '/'
            | '\\'
    ) || ('\u{2010}'..='\u{2027}').contains(&c)
}

/// Devanagari digit or ASCII digit value.
pub fn digit_value(c: char) -> Option<u32> {
    match c {
        '0'..='9' => Some(c as u32 - '0' as u32),
        '\u{0966}'..='\u{096F}' => Some(c as u32 - 0x0966),
        _ => None,
    }
}

/// Half-open `[start, end)` range in Unicode scalar values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// Slice `text` by a scalar-value span. Out-of-range spans yield `None`.
pub fn slice_chars(text: &str, span: Span) -> Option<&str> {
    if span.start > span.end {
        return None;
    }
    let mut indices = text
        .char_indices()
        .map(|(i, _)| i)
        .chain(std::iter::once(text.len()));
    let start = indices.nth(span.start)?;
    let end = if span.end == span.start {
        start
    } else {
        indices.nth(span.end - span.start - 1)?
    };
    Some(&text[start..end])
}

/// One orthographic syllable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Akshara {
    pub chars: Vec<DevChar>,
    pub span: Span,
}

impl Akshara {
    pub fn text(&self) -> String {
        self.chars.iter().map(|c| c.codepoint).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Seg {
    /// Nothing open.
    Empty,
    /// After an independent vowel, a matra, or a modifier: only modifiers may follow.
    Closed,
    /// After a consonant (optionally with nukta); a vowel sign, virama or modifier may follow.
    Consonant { nukta: bool },
    /// After a virama; another consonant continues the cluster.
    Virama,
    /// Single non-letter char.
    Single,
}

/// Split a word into aksharas.
///
/// Accepts independent-vowel syllables, consonant clusters joined by virama
/// (a trailing virama closes the cluster), and single non-letter chars.
/// Joiners (ZWJ/ZWNJ) attach to the akshara in progress.
pub fn segment_aksharas(word: &str) -> Result<Vec<Akshara>, TextError> {
    let mut out: Vec<Akshara> = Vec::new();
    let mut cur: Vec<DevChar> = Vec::new();
    let mut start = 0usize;
    let mut state = Seg::Empty;

    let flush = |out: &mut Vec<Akshara>, cur: &mut Vec<DevChar>, start: &mut usize, pos: usize| {
        if !cur.is_empty() {
            out.push(Akshara {
                chars: std::mem::take(cur),
                span: Span::new(*start, pos),
            });
        }
        *start = pos;
    };

    for (pos, c) in word.chars().enumerate() {
        let dc = classify_char(c);
        let malformed = |reason: &'static str| TextError::MalformedCluster {
            word: word.to_string(),
            offset: pos,
            reason,
        };
        if c == ZWJ || c == ZWNJ {
            if state == Seg::Empty && out.is_empty() {
                return Err(malformed("joiner at start of word"));
            }
            if state == Seg::Empty {
                // Glue to the previous akshara.
                let last = out.last_mut().unwrap();
                last.chars.push(dc);
                last.span.end = pos + 1;
                start = pos + 1;
            } else {
                cur.push(dc);
            }
            continue;
        }
        match dc.class {
            CharClass::Consonant => {
                if state != Seg::Virama {
                    flush(&mut out, &mut cur, &mut start, pos);
                }
                cur.push(dc);
                state = Seg::Consonant { nukta: false };
            }
            CharClass::IndependentVowel => {
                if state == Seg::Virama {
                    return Err(malformed("virama before an independent vowel"));
                }
                flush(&mut out, &mut cur, &mut start, pos);
                cur.push(dc);
                state = Seg::Closed;
            }
            CharClass::Nukta => match state {
                Seg::Consonant { nukta: false } => {
                    cur.push(dc);
                    state = Seg::Consonant { nukta: true };
                }
                _ => return Err(malformed("nukta not preceded by a consonant")),
            },
            CharClass::Virama => match state {
                Seg::Consonant { .. } => {
                    cur.push(dc);
                    state = Seg::Virama;
                }
                _ => return Err(malformed("virama not preceded by a consonant")),
            },
            CharClass::DependentVowelSign => match state {
                Seg::Consonant { .. } => {
                    cur.push(dc);
                    state = Seg::Closed;
                }
                _ => return Err(malformed("vowel sign not preceded by a consonant")),
            },
            CharClass::Anusvara | CharClass::Candrabindu | CharClass::Visarga => match state {
                Seg::Consonant { .. } | Seg::Closed => {
                    cur.push(dc);
                    state = Seg::Closed;
                }
                _ => return Err(malformed("modifier without a vowel to attach to")),
            },
            _ => {
                flush(&mut out, &mut cur, &mut start, pos);
                cur.push(dc);
                flush(&mut out, &mut cur, &mut start, pos + 1);
                state = Seg::Single;
            }
        }
        if state == Seg::Single {
            state = Seg::Empty;
        }
    }
    let end = word.chars().count();
    flush(&mut out, &mut cur, &mut start, end);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Word,
    Number,
    Abbreviation,
    Symbol,
    Punctuation,
    Whitespace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub text: String,
    pub span: Span,
    pub kind: TokenKind,
}

impl Token {
    pub fn new(text: impl Into<String>, span: Span, kind: TokenKind) -> Self {
        Token {
            text: text.into(),
            span,
            kind,
        }
    }
}

/// Longest dotted group accepted inside an abbreviation, in aksharas.
const ABBREV_GROUP_MAX: usize = 3;
/// A lone `X.` counts as an abbreviation only when `X` is this short.
const ABBREV_SINGLE_MAX: usize = 1;

fn is_word_char(c: char) -> bool {
    classify_char(c).class.is_letter()
}

/// Length of the Devanagari letter run starting at `i` (joiners included once a run has begun).
fn word_run(chars: &[char], i: usize) -> usize {
    let mut j = i;
    while j < chars.len() {
        let c = chars[j];
        if is_word_char(c) || (j > i && (c == ZWJ || c == ZWNJ)) {
            j += 1;
        } else {
            break;
        }
    }
    j - i
}

fn akshara_count(s: &[char]) -> Option<usize> {
    let w: String = s.iter().collect();
    segment_aksharas(&w).ok().map(|a| a.len())
}

/// Try to match `(letters '.')+` at `i`; returns the matched length.
fn match_abbreviation(chars: &[char], i: usize) -> Option<usize> {
    let mut j = i;
    let mut groups = 0usize;
    let mut first_group = 0usize;
    loop {
        let run = word_run(chars, j);
        if run == 0 || chars.get(j + run) != Some(&'.') {
            break;
        }
        let n = akshara_count(&chars[j..j + run])?;
        if n > ABBREV_GROUP_MAX {
            break;
        }
        if groups == 0 {
            first_group = n;
        }
        groups += 1;
        j += run + 1;
    }
    match groups {
        0 => None,
        1 if first_group > ABBREV_SINGLE_MAX => None,
        _ => Some(j - i),
    }
}

/// Split raw text into tokens that tile the input.
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let push = |tokens: &mut Vec<Token>, a: usize, b: usize, kind: TokenKind| {
        tokens.push(Token::new(
            chars[a..b].iter().collect::<String>(),
            Span::new(a, b),
            kind,
        ));
    };
    while i < chars.len() {
        let c = chars[i];
        let class = classify_char(c).class;
        if class.is_letter() {
            if let Some(len) = match_abbreviation(&chars, i) {
                push(&mut tokens, i, i + len, TokenKind::Abbreviation);
                i += len;
            } else {
                let len = word_run(&chars, i);
                push(&mut tokens, i, i + len, TokenKind::Word);
                i += len;
            }
            continue;
        }
        let j = match class {
            CharClass::AsciiDigit | CharClass::DevDigit | CharClass::Whitespace => {
                let mut j = i + 1;
                while j < chars.len() && classify_char(chars[j]).class == class {
                    j += 1;
                }
                j
            }
            CharClass::Other if c.is_alphanumeric() => {
                // Non-Devanagari letter runs (Latin etc.) pass through as one token.
                let mut j = i + 1;
                while j < chars.len() {
                    let d = chars[j];
                    if classify_char(d).class == CharClass::Other && d.is_alphanumeric() {
                        j += 1;
                    } else {
                        break;
                    }
                }
                j
            }
            _ => i + 1,
        };
        let kind = match class {
            CharClass::AsciiDigit | CharClass::DevDigit => TokenKind::Number,
            CharClass::Whitespace => TokenKind::Whitespace,
            CharClass::Punctuation => TokenKind::Punctuation,
            _ => TokenKind::Symbol,
        };
        push(&mut tokens, i, j, kind);
        i = j;
    }
    tokens
}

/// Nearest preceding token that is not whitespace, if it is a word.
pub fn left_word(tokens: &[Token], idx: usize) -> Option<&Token> {
    tokens[..idx]
        .iter()
        .rev()
        .find(|t| t.kind != TokenKind::Whitespace)
        .filter(|t| t.kind == TokenKind::Word)
}

/// Nearest following token that is not whitespace, if it is a word.
pub fn right_word(tokens: &[Token], idx: usize) -> Option<&Token> {
    tokens[idx + 1..]
        .iter()
        .find(|t| t.kind != TokenKind::Whitespace)
        .filter(|t| t.kind == TokenKind::Word)
}
