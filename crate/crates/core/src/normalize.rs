//! Non-standard word identification and expansion: numbers, abbreviations, symbols.

use std::collections::{HashMap, HashSet};
use std::io::BufRead;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{NormalizeError, TableError};
use crate::lexicon::{is_well_formed_word, nfc};
use crate::text::{digit_value, left_word, right_word, tokenize, Span, Token, TokenKind};

pub const NUMBERS_TSV: &str = include_str!("../data/numbers.tsv");
pub const ABBREVIATIONS_TSV: &str = include_str!("../data/abbreviations.tsv");
pub const SYMBOLS_TSV: &str = include_str!("../data/symbols.tsv");

/// Largest number read out with scale words.
pub const MAX_NUMBER: u64 = 999_999_999;

pub const DEFAULT_YEAR_TRIGGERS: [&str; 4] = ["सन", "सन्", "वर्ष", "ईस्वी"];
pub const DECIMAL_POINT_WORD: &str = "दशमलव";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NswClass {
    Year,
    Cardinal,
    Abbreviation,
    Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberNameTable {
    units: Vec<String>,
    hundred: String,
    thousand: String,
    lakh: String,
    crore: String,
}

impl NumberNameTable {
    pub fn builtin() -> &'static NumberNameTable {
        static T: OnceLock<NumberNameTable> = OnceLock::new();
        T.get_or_init(|| NumberNameTable::parse(NUMBERS_TSV).expect("shipped number table"))
    }

    pub fn parse(src: &str) -> Result<Self, TableError> {
        let mut names: HashMap<u64, String> = HashMap::new();
        for (line_no, cols) in table_rows("numbers", src)? {
            let bad = |reason: String| TableError::MalformedLine {
                table: "numbers",
                line_no,
                reason,
            };
            let value: u64 = cols[0]
                .parse()
                .map_err(|_| bad(format!("value {:?} is not an integer", cols[0])))?;
            if !(value < 100 || matches!(value, 100 | 1000 | 100_000 | 10_000_000)) {
                return Err(bad(format!("unexpected value {value}")));
            }
            let name = nfc(cols[1].trim());
            is_well_formed_word(&name).map_err(bad)?;
            if names.insert(value, name).is_some() {
                return Err(bad(format!("duplicate value {value}")));
            }
        }
        let mut take = |v: u64| {
            names.remove(&v).ok_or(TableError::MissingEntry {
                table: "numbers",
                value: v,
            })
        };
        let units = (0..100).map(&mut take).collect::<Result<Vec<_>, _>>()?;
        let table = NumberNameTable {
            hundred: take(100)?,
            thousand: take(1000)?,
            lakh: take(100_000)?,
            crore: take(10_000_000)?,
            units,
        };
        let distinct: HashSet<&String> = table.units.iter().collect();
        if distinct.len() != 100 {
            return Err(TableError::MalformedLine {
                table: "numbers",
                line_no: 0,
                reason: "names for 0-99 must be distinct".into(),
            });
        }
        Ok(table)
    }

    pub fn unit(&self, n: u64) -> &str {
        &self.units[n as usize]
    }

    pub fn hundred(&self) -> &str {
        &self.hundred
    }

    pub fn thousand(&self) -> &str {
        &self.thousand
    }

    pub fn lakh(&self) -> &str {
        &self.lakh
    }

    pub fn crore(&self) -> &str {
        &self.crore
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbbreviationEntry {
    pub abbreviation: String,
    pub expansion: Vec<String>,
}

/// Every lookup table the normalizer needs.
#[derive(Debug, Clone)]
pub struct NormalizeTables {
    pub numbers: NumberNameTable,
    abbreviations: HashMap<String, Vec<String>>,
    symbols: HashMap<String, Vec<String>>,
    year_triggers: HashSet<String>,
    pub decimal_point: String,
}

impl NormalizeTables {
    pub fn builtin() -> &'static NormalizeTables {
        static T: OnceLock<NormalizeTables> = OnceLock::new();
        T.get_or_init(|| {
            NormalizeTables::new(
                NumberNameTable::builtin().clone(),
                parse_abbreviations(ABBREVIATIONS_TSV).expect("shipped abbreviations"),
                parse_symbols(SYMBOLS_TSV).expect("shipped symbols"),
            )
        })
    }

    pub fn new(
        numbers: NumberNameTable,
        abbreviations: Vec<AbbreviationEntry>,
        symbols: Vec<AbbreviationEntry>,
    ) -> Self {
        let mut abbr = HashMap::new();
        for e in abbreviations {
            abbr.entry(nfc(&e.abbreviation)).or_insert(e.expansion);
        }
        let mut sym = HashMap::new();
        for e in symbols {
            sym.entry(e.abbreviation).or_insert(e.expansion);
        }
        NormalizeTables {
            numbers,
            abbreviations: abbr,
            symbols: sym,
            year_triggers: DEFAULT_YEAR_TRIGGERS.iter().map(|w| nfc(w)).collect(),
            decimal_point: nfc(DECIMAL_POINT_WORD),
        }
    }

    pub fn with_year_triggers<I, S>(mut self, triggers: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.year_triggers = triggers.into_iter().map(|w| nfc(w.as_ref())).collect();
        self
    }

    pub fn is_year_trigger(&self, word: &str) -> bool {
        self.year_triggers.contains(&nfc(word))
    }

    pub fn abbreviation(&self, abbr: &str) -> Option<&[String]> {
        self.abbreviations.get(&nfc(abbr)).map(Vec::as_slice)
    }

    pub fn symbol(&self, sym: &str) -> Option<&[String]> {
        self.symbols.get(sym).map(Vec::as_slice)
    }
}

fn table_rows<'a>(
    table: &'static str,
    src: &'a str,
) -> Result<Vec<(usize, Vec<&'a str>)>, TableError> {
    let mut rows = Vec::new();
    for (idx, line) in src.lines().enumerate() {
        let line = line.trim_start_matches('\u{FEFF}').trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 2 || cols[0].trim().is_empty() || cols[1].trim().is_empty() {
            return Err(TableError::MalformedLine {
                table,
                line_no: idx + 1,
                reason: "expected two non-empty tab-separated columns".into(),
            });
        }
        rows.push((idx + 1, cols));
    }
    Ok(rows)
}

fn expansion_words(
    table: &'static str,
    line_no: usize,
    text: &str,
) -> Result<Vec<String>, TableError> {
    text.split_whitespace()
        .map(|w| {
            let w = nfc(w);
            is_well_formed_word(&w)
                .map(|_| w)
                .map_err(|reason| TableError::MalformedLine {
                    table,
                    line_no,
                    reason,
                })
        })
        .collect()
}

/// Abbreviation file: `abbreviation<TAB>expansion` per line.
pub fn parse_abbreviations(src: &str) -> Result<Vec<AbbreviationEntry>, TableError> {
    table_rows("abbreviations", src)?
        .into_iter()
        .map(|(line_no, cols)| {
            let abbreviation = nfc(cols[0].trim());
            let toks = tokenize(&abbreviation);
            if !matches!(&toks[..], [t] if t.kind == TokenKind::Abbreviation) {
                return Err(TableError::MalformedLine {
                    table: "abbreviations",
                    line_no,
                    reason: format!("{abbreviation:?} does not tokenize as an abbreviation"),
                });
            }
            Ok(AbbreviationEntry {
                abbreviation,
                expansion: expansion_words("abbreviations", line_no, cols[1])?,
            })
        })
        .collect()
}

/// Symbol file: `symbol<TAB>expansion` per line.
pub fn parse_symbols(src: &str) -> Result<Vec<AbbreviationEntry>, TableError> {
    table_rows("symbols", src)?
        .into_iter()
        .map(|(line_no, cols)| {
            Ok(AbbreviationEntry {
                abbreviation: cols[0].trim().to_string(),
                expansion: expansion_words("symbols", line_no, cols[1])?,
            })
        })
        .collect()
}

pub fn read_to_string<R: BufRead>(table: &'static str, mut r: R) -> Result<String, TableError> {
    let mut s = String::new();
    r.read_to_string(&mut s)
        .map_err(|source| TableError::Io { table, source })?;
    Ok(s)
}

/// Numeric value of an all-digit string; `None` if it is not digits or overflows.
pub fn number_value(digits: &str) -> Option<u64> {
    if digits.is_empty() {
        return None;
    }
    digits.chars().try_fold(0u64, |acc, c| {
        let d = digit_value(c)? as u64;
        acc.checked_mul(10)?.checked_add(d)
    })
}

/// `None` for token kinds that are not non-standard words.
pub fn classify_nsw(
    token: &Token,
    left_context: Option<&Token>,
    _right_context: Option<&Token>,
    tables: &NormalizeTables,
) -> Option<NswClass> {
    match token.kind {
        TokenKind::Number => {
            let year_range = number_value(&token.text).is_some_and(|v| (1000..=2999).contains(&v));
            let triggered = left_context
                .is_some_and(|t| t.kind == TokenKind::Word && tables.is_year_trigger(&t.text));
            Some(if year_range && triggered {
                NswClass::Year
            } else {
                NswClass::Cardinal
            })
        }
        TokenKind::Abbreviation => Some(NswClass::Abbreviation),
        TokenKind::Symbol => Some(NswClass::Symbol),
        _ => None,
    }
}

fn cardinal(value: u64, t: &NumberNameTable) -> Vec<String> {
    if value == 0 {
        return vec![t.unit(0).to_string()];
    }
    let mut out = Vec::new();
    let scales = [
        (value / 10_000_000, t.crore()),
        (value / 100_000 % 100, t.lakh()),
        (value / 1000 % 100, t.thousand()),
        (value / 100 % 10, t.hundred()),
    ];
    for (amount, scale) in scales {
        if amount > 0 {
            out.push(t.unit(amount).to_string());
            out.push(scale.to_string());
        }
    }
    if !value.is_multiple_of(100) {
        out.push(t.unit(value % 100).to_string());
    }
    out
}

/// Read a number as Devanagari words.
///
/// Cardinals use Indian grouping (करोड़, लाख, हज़ार, सौ). Years outside
/// 2000–2099 are read as two pairs around सौ; years in 2000–2099 read as
/// cardinals.
pub fn expand_number(
    value: u64,
    class: NswClass,
    table: &NumberNameTable,
) -> Result<Vec<String>, NormalizeError> {
    if value > MAX_NUMBER {
        return Err(NormalizeError::OutOfRange {
            value,
            max: MAX_NUMBER,
        });
    }
    match class {
        NswClass::Year => {
            if !(1000..=2999).contains(&value) {
                return Err(NormalizeError::NotAYear { value });
            }
            if (2000..=2099).contains(&value) {
                return Ok(cardinal(value, table));
            }
            let mut out = vec![
                table.unit(value / 100).to_string(),
                table.hundred().to_string(),
            ];
            if !value.is_multiple_of(100) {
                out.push(table.unit(value % 100).to_string());
            }
            Ok(out)
        }
        _ => Ok(cardinal(value, table)),
    }
}

/// Digit-by-digit reading, used after a decimal point and for out-of-range numbers.
pub fn read_digits(digits: &str, table: &NumberNameTable) -> Vec<String> {
    digits
        .chars()
        .filter_map(digit_value)
        .map(|d| table.unit(d as u64).to_string())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbbreviationExpansion {
    Known(Vec<String>),
    /// Not in the table; the token is passed through and should be reported.
    Unknown,
}

pub fn expand_abbreviation(token: &Token, tables: &NormalizeTables) -> AbbreviationExpansion {
    match tables.abbreviation(&token.text) {
        Some(words) => AbbreviationExpansion::Known(words.to_vec()),
        None => AbbreviationExpansion::Unknown,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizeFlagKind {
    UnknownAbbreviation,
    /// Read digit by digit.
    NumberOutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeFlag {
    pub kind: NormalizeFlagKind,
    pub text: String,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Normalized {
    /// Output tokens; `span` is the span of the source token each came from.
    pub tokens: Vec<Token>,
    pub flags: Vec<NormalizeFlag>,
}

impl Normalized {
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.tokens
            .iter()
            .filter(|t| t.kind == TokenKind::Word)
            .map(|t| t.text.as_str())
    }
}

fn words_from(words: &[String], span: Span) -> impl Iterator<Item = Token> + '_ {
    words
        .iter()
        .map(move |w| Token::new(w.clone(), span, TokenKind::Word))
}

fn contiguous(a: &Token, b: &Token) -> bool {
    a.span.end == b.span.start
}

/// Expand every number, known abbreviation and known symbol into words.
///
/// Whitespace is dropped; words and punctuation pass through. Unknown
/// abbreviations stay as they are and are flagged.
pub fn normalize_text(tokens: &[Token], tables: &NormalizeTables) -> Normalized {
    let nums = &tables.numbers;
    let mut out = Normalized::default();
    let mut i = 0;
    while i < tokens.len() {
        let t = &tokens[i];
        match t.kind {
            TokenKind::Whitespace => {}
            TokenKind::Number => {
                let is_decimal = matches!(
                    (tokens.get(i + 1), tokens.get(i + 2)),
                    (Some(p), Some(f)) if p.kind == TokenKind::Punctuation && p.text == "."
                        && f.kind == TokenKind::Number && contiguous(t, p) && contiguous(p, f)
                );
                let class = classify_nsw(t, left_word(tokens, i), right_word(tokens, i), tables)
                    .unwrap_or(NswClass::Cardinal);
                let class = if is_decimal {
                    NswClass::Cardinal
                } else {
                    class
                };
                let read = number_value(&t.text)
                    .ok_or(())
                    .and_then(|v| expand_number(v, class, nums).map_err(|_| ()));
                let mut span = t.span;
                let mut words = match read {
                    Ok(w) => w,
                    Err(()) => {
                        out.flags.push(NormalizeFlag {
                            kind: NormalizeFlagKind::NumberOutOfRange,
                            text: t.text.clone(),
                            span: t.span,
                        });
                        read_digits(&t.text, nums)
                    }
                };
                if is_decimal {
                    let frac = &tokens[i + 2];
                    words.push(tables.decimal_point.clone());
                    words.extend(read_digits(&frac.text, nums));
                    span = Span::new(t.span.start, frac.span.end);
                    i += 2;
                }
                out.tokens.extend(words_from(&words, span));
            }
            TokenKind::Abbreviation => match expand_abbreviation(t, tables) {
                AbbreviationExpansion::Known(words) => {
                    out.tokens.extend(words_from(&words, t.span))
                }
                AbbreviationExpansion::Unknown => {
                    out.flags.push(NormalizeFlag {
                        kind: NormalizeFlagKind::UnknownAbbreviation,
                        text: t.text.clone(),
                        span: t.span,
                    });
                    out.tokens.push(t.clone());
                }
            },
            TokenKind::Symbol => match tables.symbol(&t.text) {
                Some(words) => out.tokens.extend(words_from(words, t.span)),
                None => out.tokens.push(t.clone()),
            },
            TokenKind::Word | TokenKind::Punctuation => out.tokens.push(t.clone()),
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables() -> &'static NormalizeTables {
        NormalizeTables::builtin()
    }

    fn num(v: u64, c: NswClass) -> String {
        expand_number(v, c, &tables().numbers).unwrap().join(" ")
    }

    fn norm(s: &str) -> Vec<String> {
        normalize_text(&tokenize(s), tables())
            .tokens
            .into_iter()
            .map(|t| t.text)
            .collect()
    }

    #[test]
    fn number_examples() {
        assert_eq!(num(1990, NswClass::Year), nfc("उन्नीस सौ नब्बे"));
        assert_eq!(num(1990, NswClass::Cardinal), nfc("एक हज़ार नौ सौ नब्बे"));
        assert_eq!(num(400, NswClass::Cardinal), "चार सौ");
        assert_eq!(num(0, NswClass::Cardinal), "शून्य");
    }

    #[test]
    fn number_edges() {
        assert_eq!(num(100, NswClass::Cardinal), "एक सौ");
        assert_eq!(num(1900, NswClass::Year), "उन्नीस सौ");
        assert_eq!(num(2005, NswClass::Year), num(2005, NswClass::Cardinal));
        assert_eq!(num(2150, NswClass::Year), "इक्कीस सौ पचास");
        assert_eq!(num(100_000, NswClass::Cardinal), "एक लाख");
        assert_eq!(
            num(999_999_999, NswClass::Cardinal),
            nfc("निन्यानवे करोड़ निन्यानवे लाख निन्यानवे हज़ार नौ सौ निन्यानवे")
        );
        assert!(matches!(
            expand_number(1_000_000_000, NswClass::Cardinal, &tables().numbers),
            Err(NormalizeError::OutOfRange { .. })
        ));
        assert!(matches!(
            expand_number(999, NswClass::Year, &tables().numbers),
            Err(NormalizeError::NotAYear { .. })
        ));
    }

    #[test]
    fn classify_year_by_left_context() {
        let toks = tokenize("सन1990");
        assert_eq!(
            classify_nsw(&toks[1], left_word(&toks, 1), None, tables()),
            Some(NswClass::Year)
        );
        let toks = tokenize("1990 किलो");
        assert_eq!(
            classify_nsw(&toks[0], None, right_word(&toks, 0), tables()),
            Some(NswClass::Cardinal)
        );
        let toks = tokenize("सन 3000");
        assert_eq!(
            classify_nsw(&toks[2], left_word(&toks, 2), None, tables()),
            Some(NswClass::Cardinal)
        );
        let toks = tokenize("यू.पी.");
        assert_eq!(
            classify_nsw(&toks[0], None, None, tables()),
            Some(NswClass::Abbreviation)
        );
        assert_eq!(
            classify_nsw(&tokenize("%")[0], None, None, tables()),
            Some(NswClass::Symbol)
        );
        assert_eq!(classify_nsw(&tokenize("घर")[0], None, None, tables()), None);
    }

    #[test]
    fn abbreviation_lookup() {
        let t = &tokenize("यू.पी.")[0];
        assert_eq!(
            expand_abbreviation(t, tables()),
            AbbreviationExpansion::Known(vec!["उत्तर".into(), "प्रदेश".into()])
        );
        let t = &tokenize("डॉ.")[0];
        assert_eq!(
            expand_abbreviation(t, tables()),
            AbbreviationExpansion::Known(vec!["डॉक्टर".into()])
        );
        let t = &tokenize("अ.ब.क.")[0];
        assert_eq!(t.kind, TokenKind::Abbreviation);
        assert_eq!(
            expand_abbreviation(t, tables()),
            AbbreviationExpansion::Unknown
        );
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(norm("400 यूनिट"), ["चार", "सौ", "यूनिट"]);
        assert_eq!(norm("सन 1990"), ["सन", "उन्नीस", "सौ", "नब्बे"]);
        assert_eq!(norm("सन1990"), ["सन", "उन्नीस", "सौ", "नब्बे"]);
        assert_eq!(norm("फायदा"), ["फायदा"]);
        assert_eq!(norm("यू.पी. में"), ["उत्तर", "प्रदेश", "में"]);
        assert_eq!(norm("5%"), ["पाँच", "प्रतिशत"]);
        assert_eq!(norm("१२"), ["बारह"]);
    }

    #[test]
    fn decimals_read_digit_by_digit() {
        assert_eq!(norm("3.25"), ["तीन", "दशमलव", "दो", "पाँच"]);
        let n = normalize_text(&tokenize("3.25"), tables());
        assert!(n.tokens.iter().all(|t| t.span == Span::new(0, 4)));
        // A gap breaks the decimal reading.
        assert_eq!(norm("3. 25"), ["तीन", ".", "पच्चीस"]);
    }

    #[test]
    fn flags_and_passthrough() {
        let n = normalize_text(&tokenize("अ.ब.क. 12345678901 TTS"), tables());
        let kinds: Vec<_> = n.flags.iter().map(|f| f.kind).collect();
        assert_eq!(
            kinds,
            [
                NormalizeFlagKind::UnknownAbbreviation,
                NormalizeFlagKind::NumberOutOfRange
            ]
        );
        assert_eq!(n.tokens[0].kind, TokenKind::Abbreviation);
        assert!(n.tokens.iter().all(|t| t.kind != TokenKind::Number));
        assert_eq!(n.tokens.last().unwrap().text, "TTS");
    }

    #[test]
    fn provenance_spans() {
        let n = normalize_text(&tokenize("400 यूनिट"), tables());
        let spans: Vec<_> = n.tokens.iter().map(|t| t.span).collect();
        assert_eq!(spans, [Span::new(0, 3), Span::new(0, 3), Span::new(4, 9)]);
    }

    #[test]
    fn table_validation() {
        assert!(matches!(
            NumberNameTable::parse("0\tशून्य\n"),
            Err(TableError::MissingEntry { value: 1, .. })
        ));
        assert!(NumberNameTable::parse("x\tशून्य\n").is_err());
        assert!(parse_abbreviations("यूपी\tउत्तर प्रदेश\n").is_err());
        assert!(parse_abbreviations("यू.पी.\n").is_err());
        assert!(parse_abbreviations("यू.पी.\tUP\n").is_err());
        assert_eq!(parse_symbols("&\tऔर\n").unwrap()[0].expansion, ["और"]);
    }

    #[test]
    fn configurable_triggers() {
        let t = tables().clone().with_year_triggers(["साल"]);
        let toks = tokenize("साल 1990");
        assert_eq!(
            classify_nsw(&toks[2], left_word(&toks, 2), None, &t),
            Some(NswClass::Year)
        );
        let toks = tokenize("सन 1990");
        assert_eq!(
            classify_nsw(&toks[2], left_word(&toks, 2), None, &t),
            Some(NswClass::Cardinal)
        );
    }
}
