//! Reference implementations and input generators shared by the test suites.
//!
//! Nothing here depends on `ttsfe-core`. The oracles are written from the
//! definitions, favouring obviousness over speed.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

/// Unrestricted Damerau-Levenshtein distance by exhaustive transposition search.
///
/// `d[i][j]` is the distance between the first `i` chars of `a` and the first
/// `j` chars of `b`. Besides the three Levenshtein moves, every pair `k < i`,
/// `l < j` with `a[k] == b[j-1]` and `b[l] == a[i-1]` is tried as a
/// transposition of `a[k]` and `a[i-1]`, with everything strictly between
/// them deleted from `a` or inserted from `b`. O(n²m²).
pub fn damerau_levenshtein_oracle(a: &[char], b: &[char]) -> usize {
    let (n, m) = (a.len(), b.len());
    let mut d = vec![vec![0usize; m + 1]; n + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in d[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=n {
        for j in 1..=m {
            let sub = usize::from(a[i - 1] != b[j - 1]);
            let mut best = (d[i - 1][j] + 1)
                .min(d[i][j - 1] + 1)
                .min(d[i - 1][j - 1] + sub);
            for k in 0..i - 1 {
                if a[k] != b[j - 1] {
                    continue;
                }
                for l in 0..j - 1 {
                    if b[l] != a[i - 1] {
                        continue;
                    }
                    let between_a = i - 1 - k - 1;
                    let between_b = j - 1 - l - 1;
                    best = best.min(d[k][l] + between_a + 1 + between_b);
                }
            }
            d[i][j] = best;
        }
    }
    d[n][m]
}

pub fn dl_oracle_str(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    damerau_levenshtein_oracle(&a, &b)
}

/// `(candidate, distance, frequency)` triples in contract order.
pub type Ranked = Vec<(String, usize, u64)>;

/// Score every lexicon word, keep those within `max_distance`, sort, take `k`.
pub fn brute_force_suggest<'a>(
    query: &str,
    words: impl IntoIterator<Item = (&'a str, u64)>,
    k: usize,
    max_distance: usize,
    distance: impl Fn(&str, &str) -> usize,
) -> Ranked {
    let mut all: Ranked = words
        .into_iter()
        .map(|(w, f)| (w.to_string(), distance(query, w), f))
        .filter(|(_, d, _)| *d <= max_distance)
        .collect();
    all.sort_by(|x, y| {
        x.1.cmp(&y.1)
            .then(y.2.cmp(&x.2))
            .then_with(|| codepoint_cmp(&x.0, &y.0))
    });
    all.truncate(k);
    all
}

fn codepoint_cmp(a: &str, b: &str) -> Ordering {
    a.chars().cmp(b.chars())
}

/// Parse a `value<TAB>name` table, ignoring comments and blank lines.
pub fn parse_number_names(src: &str) -> BTreeMap<u64, String> {
    src.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (v, name) = l.split_once('\t').expect("value<TAB>name");
            (
                v.trim().parse().expect("numeric value"),
                name.trim().to_string(),
            )
        })
        .collect()
}

/// Indian-grouping cardinal reading built from the decimal digit string.
///
/// The digits are cut from the right into a 3-digit tail and 2-digit groups
/// (thousand, lakh, crore). The tail's first digit is the hundreds digit.
pub fn cardinal_oracle(n: u64, names: &BTreeMap<u64, String>) -> String {
    if n == 0 {
        return names[&0].clone();
    }
    let digits = n.to_string();
    let pad = format!("{digits:0>9}");
    let crore = &pad[0..2];
    let lakh = &pad[2..4];
    let thousand = &pad[4..6];
    let hundred = &pad[6..7];
    let rest = &pad[7..9];
    let mut words: Vec<String> = Vec::new();
    let mut push_group = |g: &str, scale: Option<u64>| {
        let v: u64 = g.parse().unwrap();
        if v == 0 {
            return;
        }
        words.push(names[&v].clone());
        if let Some(s) = scale {
            words.push(names[&s].clone());
        }
    };
    push_group(crore, Some(10_000_000));
    push_group(lakh, Some(100_000));
    push_group(thousand, Some(1000));
    push_group(hundred, Some(100));
    push_group(rest, None);
    words.join(" ")
}

pub const VOWELS: &[char] = &['अ', 'आ', 'इ', 'ई', 'उ', 'ऊ', 'ए', 'ऐ', 'ओ', 'औ', 'ऋ', 'ऑ'];
pub const MATRAS: &[char] = &['ा', 'ि', 'ी', 'ु', 'ू', 'े', 'ै', 'ो', 'ौ', 'ृ', 'ॉ'];
pub const CONSONANTS: &[char] = &[
    'क', 'ख', 'ग', 'घ', 'ङ', 'च', 'छ', 'ज', 'झ', 'ञ', 'ट', 'ठ', 'ड', 'ढ', 'ण', 'त', 'थ', 'द', 'ध',
    'न', 'प', 'फ', 'ब', 'भ', 'म', 'य', 'र', 'ल', 'व', 'श', 'ष', 'स', 'ह',
];
pub const MODIFIERS: &[char] = &['\u{0902}', '\u{0901}', '\u{0903}'];
pub const VIRAMA: char = '\u{094D}';
pub const NUKTA: char = '\u{093C}';
pub const ANUSVARA: char = '\u{0902}';

/// A consonant cluster, optionally with a dependent vowel and a modifier.
fn consonant_akshara<R: Rng>(rng: &mut R, out: &mut String) {
    let cluster = rng.gen_range(1..=3);
    for c in 0..cluster {
        if c > 0 {
            out.push(VIRAMA);
        }
        out.push(*CONSONANTS.choose(rng).unwrap());
        if rng.gen_bool(0.08) {
            out.push(NUKTA);
        }
    }
    if rng.gen_bool(0.55) {
        out.push(*MATRAS.choose(rng).unwrap());
    }
    if rng.gen_bool(0.15) {
        out.push(*MODIFIERS.choose(rng).unwrap());
    }
}

/// Random well-formed word over the mapped alphabet, 1 to 6 aksharas.
///
/// Cluster sizes favour 1, so most words look like plain Hindi syllable runs.
pub fn random_word<R: Rng>(rng: &mut R) -> String {
    let mut out = String::new();
    let len = rng.gen_range(1..=6);
    for _ in 0..len {
        if rng.gen_bool(0.15) {
            out.push(*VOWELS.choose(rng).unwrap());
            if rng.gen_bool(0.15) {
                out.push(*MODIFIERS.choose(rng).unwrap());
            }
        } else {
            consonant_akshara(rng, &mut out);
        }
    }
    let last = out.chars().last().unwrap();
    if CONSONANTS.contains(&last) && rng.gen_bool(0.1) {
        out.push(VIRAMA);
    }
    out
}

/// Random string of 0..=`max_len` chars drawn from a small Devanagari alphabet.
///
/// The alphabet is kept small so that repeats and transpositions are common.
pub fn random_devanagari<R: Rng>(rng: &mut R, max_len: usize) -> String {
    const POOL: &[char] = &['क', 'ब', 'ज', 'ल', 'न', 'ि', 'ी', 'ा', '्', 'ं', 'अ', 'आ'];
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *POOL.choose(rng).unwrap()).collect()
}

/// One random single-char edit: substitution, insertion, deletion or adjacent swap.
pub fn mutate<R: Rng>(word: &str, rng: &mut R) -> String {
    const POOL: &[char] = &['ि', 'ी', 'ा', 'े', '्', 'ं', 'क', 'न', 'र', 'स', 'अ', 'आ'];
    let mut chars: Vec<char> = word.chars().collect();
    let c = *POOL.choose(rng).unwrap();
    match (rng.gen_range(0..4), chars.len()) {
        (_, 0) => chars.push(c),
        (0, n) => chars[rng.gen_range(0..n)] = c,
        (1, n) => chars.insert(rng.gen_range(0..=n), c),
        (2, n) => {
            chars.remove(rng.gen_range(0..n));
        }
        (_, 1) => chars.push(c),
        (_, n) => {
            let i = rng.gen_range(0..n - 1);
            chars.swap(i, i + 1);
        }
    }
    chars.into_iter().collect()
}

/// Random mixed input: words, digits, punctuation, Latin, stray marks, spaces.
pub fn random_mixed_text<R: Rng>(rng: &mut R, lexicon_words: &[&str]) -> String {
    const PIECES: &[&str] = &[
        " ",
        " ",
        "  ",
        "\n",
        "\t",
        ".",
        ",",
        "।",
        "?",
        "!",
        "-",
        "%",
        "₹",
        "+",
        "(",
        ")",
        "\"",
        "abc",
        "Z",
        "x1",
        "सन",
        "वर्ष",
        "यू.पी.",
        "डॉ.",
        "अ.ब.क.",
        "क.",
        "\u{094D}",
        "\u{093F}",
        "\u{0902}",
        "\u{200D}",
        "\u{200C}",
        "ळ",
        "😀",
        "३.५",
        "0",
        "007",
    ];
    let mut out = String::new();
    for _ in 0..rng.gen_range(0..=12) {
        match rng.gen_range(0..6) {
            0 if !lexicon_words.is_empty() => {
                out.push_str(lexicon_words.choose(rng).unwrap());
            }
            1 if !lexicon_words.is_empty() => {
                out.push_str(&mutate(lexicon_words.choose(rng).unwrap(), rng));
            }
            2 => out.push_str(&random_word(rng)),
            3 => {
                let ascii = rng.gen_bool(0.7);
                for _ in 0..rng.gen_range(1..=11) {
                    let d = rng.gen_range(0..10u32);
                    let base = if ascii { '0' as u32 } else { 0x0966 };
                    out.push(char::from_u32(base + d).unwrap());
                }
            }
            _ => out.push_str(PIECES.choose(rng).unwrap()),
        }
        if rng.gen_bool(0.6) {
            out.push(' ');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn oracle_known_values() {
        assert_eq!(dl_oracle_str("", ""), 0);
        assert_eq!(dl_oracle_str("abc", ""), 3);
        assert_eq!(dl_oracle_str("ab", "ba"), 1);
        // Restricted alignment gives 3 here; the unrestricted metric gives 2.
        assert_eq!(dl_oracle_str("ca", "abc"), 2);
        assert_eq!(dl_oracle_str("kitten", "sitting"), 3);
        assert_eq!(dl_oracle_str("बजिली", "बिजली"), 1);
    }

    #[test]
    fn cardinal_oracle_known_values() {
        let mut names: BTreeMap<u64, String> = (0..100).map(|v| (v, format!("n{v}"))).collect();
        names.insert(100, "H".into());
        names.insert(1000, "T".into());
        names.insert(100_000, "L".into());
        names.insert(10_000_000, "C".into());
        assert_eq!(cardinal_oracle(0, &names), "n0");
        assert_eq!(cardinal_oracle(400, &names), "n4 H");
        assert_eq!(cardinal_oracle(1990, &names), "n1 T n9 H n90");
        assert_eq!(cardinal_oracle(100_001, &names), "n1 L n1");
        assert_eq!(
            cardinal_oracle(999_999_999, &names),
            "n99 C n99 L n99 T n9 H n99"
        );
    }

    #[test]
    fn brute_force_orders_by_contract() {
        let words = [("ba", 1), ("ab", 5), ("aa", 5), ("zzz", 9)];
        let got = brute_force_suggest("ab", words, 10, 1, dl_oracle_str);
        let names: Vec<_> = got.iter().map(|r| r.0.as_str()).collect();
        assert_eq!(names, ["ab", "aa", "ba"]);
    }

    #[test]
    fn generated_words_are_non_empty() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            assert!(!random_word(&mut rng).is_empty());
        }
    }
}
