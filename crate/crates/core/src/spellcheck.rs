//! Dictionary-based non-word error detection and suggestion ranking.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::lexicon::{nfc, Lexicon};
use crate::text::{tokenize, Span, Token, TokenKind};

pub const DEFAULT_TOP_K: usize = 5;
pub const DEFAULT_MAX_DISTANCE: usize = 2;

/// Damerau-Levenshtein distance over the scalar values of the NFC forms.
///
/// Unit-cost insertion, deletion, substitution and transposition of adjacent
/// symbols, with no restriction on editing a substring more than once, so
/// the result is a metric.
pub fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = nfc(a).chars().collect();
    let b: Vec<char> = nfc(b).chars().collect();
    damerau_levenshtein(&a, &b)
}

pub(crate) fn damerau_levenshtein(a: &[char], b: &[char]) -> usize {
    let (n, m) = (a.len(), b.len());
    if n == 0 {
        return m;
    }
    if m == 0 {
        return n;
    }
    let inf = n + m;
    let width = m + 2;
    let mut d = vec![0usize; (n + 2) * width];
    let at = |i: usize, j: usize| i * width + j;
    d[at(0, 0)] = inf;
    for i in 0..=n {
        d[at(i + 1, 0)] = inf;
        d[at(i + 1, 1)] = i;
    }
    for j in 0..=m {
        d[at(0, j + 1)] = inf;
        d[at(1, j + 1)] = j;
    }
    // Last row in which each symbol of `a` was seen. Words are short, so a
    // linear scan beats hashing.
    let mut last_row: Vec<(char, usize)> = Vec::with_capacity(n);
    for i in 1..=n {
        let mut last_col = 0;
        for j in 1..=m {
            let k = last_row
                .iter()
                .find(|(c, _)| *c == b[j - 1])
                .map_or(0, |&(_, r)| r);
            let l = last_col;
            let cost = if a[i - 1] == b[j - 1] {
                last_col = j;
                0
            } else {
                1
            };
            let best = (d[at(i, j)] + cost)
                .min(d[at(i + 1, j)] + 1)
                .min(d[at(i, j + 1)] + 1)
                .min(d[at(k, l)] + (i - k - 1) + 1 + (j - l - 1));
            d[at(i + 1, j + 1)] = best;
        }
        match last_row.iter_mut().find(|(c, _)| *c == a[i - 1]) {
            Some(slot) => slot.1 = i,
            None => last_row.push((a[i - 1], i)),
        }
    }
    d[at(n + 1, m + 1)]
}

/// Metric tree over the lexicon keys for bounded-distance search.
#[derive(Debug, Default)]
pub struct BkTree {
    nodes: Vec<BkNode>,
}

#[derive(Debug)]
struct BkNode {
    word: String,
    chars: Vec<char>,
    children: BTreeMap<usize, usize>,
}

impl BkTree {
    pub fn build<'a>(words: impl IntoIterator<Item = &'a str>) -> Self {
        let mut tree = BkTree::default();
        for w in words {
            tree.insert(w);
        }
        tree
    }

    fn insert(&mut self, word: &str) {
        let chars: Vec<char> = word.chars().collect();
        let node = BkNode {
            word: word.to_string(),
            chars,
            children: BTreeMap::new(),
        };
        if self.nodes.is_empty() {
            self.nodes.push(node);
            return;
        }
        let mut cur = 0;
        loop {
            let d = damerau_levenshtein(&self.nodes[cur].chars, &node.chars);
            if d == 0 {
                return;
            }
            match self.nodes[cur].children.get(&d) {
                Some(&next) => cur = next,
                None => {
                    let id = self.nodes.len();
                    self.nodes[cur].children.insert(d, id);
                    self.nodes.push(node);
                    return;
                }
            }
        }
    }

    /// All stored words within `max` of `query`, with their distances, unordered.
    pub fn within(&self, query: &[char], max: usize) -> Vec<(&str, usize)> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            return out;
        }
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            let d = damerau_levenshtein(&node.chars, query);
            if d <= max {
                out.push((node.word.as_str(), d));
            }
            let lo = d.saturating_sub(max);
            let hi = d + max;
            stack.extend(node.children.range(lo..=hi).map(|(_, &c)| c));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MisspellingReason {
    NotInLexicon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Misspelling {
    pub token: Token,
    pub reason: MisspellingReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suggestion {
    pub candidate: String,
    pub distance: usize,
    pub frequency: u64,
    pub rank: usize,
}

/// Suggestion order: distance ascending, frequency descending, then codepoint order.
pub fn suggestion_order(a: &Suggestion, b: &Suggestion) -> Ordering {
    a.distance
        .cmp(&b.distance)
        .then(b.frequency.cmp(&a.frequency))
        .then_with(|| a.candidate.cmp(&b.candidate))
}

/// Word tokens absent from the lexicon. Other token kinds are never flagged.
pub fn check(tokens: &[Token], lex: &Lexicon) -> Vec<Misspelling> {
    tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Word && !lex.contains(&t.text))
        .map(|t| Misspelling {
            token: t.clone(),
            reason: MisspellingReason::NotInLexicon,
        })
        .collect()
}

fn ranked(mut found: Vec<Suggestion>, k: usize) -> Vec<Suggestion> {
    found.sort_by(suggestion_order);
    found.truncate(k);
    for (i, s) in found.iter_mut().enumerate() {
        s.rank = i + 1;
    }
    found
}

fn candidates_within(word: &str, lex: &Lexicon, max_distance: usize) -> Vec<Suggestion> {
    let query: Vec<char> = nfc(word).chars().collect();
    lex.index()
        .within(&query, max_distance)
        .into_iter()
        .map(|(w, d)| Suggestion {
            candidate: w.to_string(),
            distance: d,
            frequency: lex.frequency(w).unwrap_or_default(),
            rank: 0,
        })
        .collect()
}

/// Top `k` lexicon words within `max_distance` of `word`.
pub fn suggest(word: &str, lex: &Lexicon, k: usize, max_distance: usize) -> Vec<Suggestion> {
    if k == 0 {
        return Vec::new();
    }
    ranked(candidates_within(word, lex, max_distance), k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppliedCorrection {
    pub span: Span,
    pub original: String,
    pub replacement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Unresolved {
    /// More than one candidate at the minimum distance (or the minimum is above 1).
    Ambiguous {
        span: Span,
        word: String,
        candidates: Vec<String>,
        distance: usize,
    },
    NoCandidate {
        span: Span,
        word: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoCorrection {
    pub corrected: String,
    pub applied: Vec<AppliedCorrection>,
    pub unresolved: Vec<Unresolved>,
}

/// Decide the automatic replacement for one misspelled word.
pub(crate) fn resolve_word(word: &str, span: Span, lex: &Lexicon) -> Result<String, Unresolved> {
    let mut found = candidates_within(word, lex, DEFAULT_MAX_DISTANCE);
    found.sort_by(suggestion_order);
    let Some(min) = found.first().map(|s| s.distance) else {
        return Err(Unresolved::NoCandidate {
            span,
            word: word.to_string(),
        });
    };
    let best: Vec<String> = found
        .iter()
        .take_while(|s| s.distance == min)
        .map(|s| s.candidate.clone())
        .collect();
    if min == 1 && best.len() == 1 {
        Ok(best.into_iter().next().unwrap())
    } else {
        Err(Unresolved::Ambiguous {
            span,
            word: word.to_string(),
            candidates: best,
            distance: min,
        })
    }
}

/// Replace misspelled words that have exactly one candidate at distance 1.
pub fn auto_correct(text: &str, lex: &Lexicon) -> AutoCorrection {
    let tokens = tokenize(text);
    let mut corrected = String::with_capacity(text.len());
    let mut applied = Vec::new();
    let mut unresolved = Vec::new();
    for t in &tokens {
        if t.kind == TokenKind::Word && !lex.contains(&t.text) {
            match resolve_word(&t.text, t.span, lex) {
                Ok(rep) => {
                    corrected.push_str(&rep);
                    applied.push(AppliedCorrection {
                        span: t.span,
                        original: t.text.clone(),
                        replacement: rep,
                    });
                }
                Err(u) => {
                    corrected.push_str(&t.text);
                    unresolved.push(u);
                }
            }
        } else {
            corrected.push_str(&t.text);
        }
    }
    AutoCorrection {
        corrected,
        applied,
        unresolved,
    }
}
