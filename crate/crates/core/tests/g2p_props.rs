use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ttsfe_core::{delete_schwas, g2p, resolve_nasals, to_wx, Lexicon};
use ttsfe_testkit::random_word;
use unicode_normalization::UnicodeNormalization;

// `Y` only occurs as the second half of the vowel `oY`.
const VOWELS: &str = "aAiIuUeEoOqY";

fn word(seed: u64) -> String {
    random_word(&mut ChaCha8Rng::seed_from_u64(seed))
        .nfc()
        .collect()
}

fn sorted_non_a(s: &str) -> Vec<char> {
    let mut v: Vec<char> = s.chars().filter(|&c| c != 'a').collect();
    v.sort_unstable();
    v
}

fn is_vowel(c: char) -> bool {
    VOWELS.contains(c)
}

/// Leftmost embedding of `sub` into `sup` as a subsequence.
fn embedding(sub: &str, sup: &str) -> Option<Vec<usize>> {
    let sup: Vec<char> = sup.chars().collect();
    let mut out = Vec::new();
    let mut j = 0;
    for c in sub.chars() {
        while j < sup.len() && sup[j] != c {
            j += 1;
        }
        if j == sup.len() {
            return None;
        }
        out.push(j);
        j += 1;
    }
    Some(out)
}

/// Whether the orthographic WX is one consonant cluster plus its vowel.
fn single_unit(wx: &str) -> bool {
    let vowels = wx.chars().filter(|&c| is_vowel(c)).count();
    vowels <= 1 && wx.chars().last().is_some_and(is_vowel)
}

fn check_word(w: &str) -> Result<(), TestCaseError> {
    let wx = to_wx(w).unwrap();
    let resolved = resolve_nasals(&wx);
    let ph = g2p(w).unwrap();
    let out = ph.as_str();
    let direct = delete_schwas(resolved.as_str()).unwrap();
    prop_assert_eq!(out, direct.as_str());
    prop_assert!(!out.contains('z') && !out.contains('M'));
    // Only schwas die.
    prop_assert_eq!(sorted_non_a(out), sorted_non_a(resolved.as_str()));
    prop_assert!(out.len() <= resolved.as_str().len());
    // Nasal marks become exactly one n/m each.
    let nasals = |s: &str| s.chars().filter(|&c| c == 'n' || c == 'm').count();
    let marks = wx
        .as_str()
        .chars()
        .filter(|&c| c == 'z' || c == 'M')
        .count();
    prop_assert_eq!(nasals(out), nasals(wx.as_str()) + marks);
    // No final consonant + schwa unless the word is a single unit.
    let chars: Vec<char> = out.chars().collect();
    if chars.len() >= 2 && chars[chars.len() - 1] == 'a' && !is_vowel(chars[chars.len() - 2]) {
        prop_assert!(single_unit(resolved.as_str()), "final schwa kept in {out}");
    }
    // No new vowel-vowel adjacency.
    let map = embedding(out, resolved.as_str()).expect("output is a subsequence");
    for i in 1..chars.len() {
        if is_vowel(chars[i - 1]) && is_vowel(chars[i]) {
            prop_assert_eq!(map[i - 1] + 1, map[i], "new vowel pair in {}", out);
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn schwa_deletion_invariants(seed in any::<u64>()) {
        check_word(&word(seed))?;
    }

    #[test]
    fn g2p_is_deterministic(seed in any::<u64>()) {
        let w = word(seed);
        prop_assert_eq!(g2p(&w).unwrap(), g2p(&w).unwrap());
    }
}

#[test]
fn schwa_deletion_invariants_over_fixture() {
    for (w, _) in Lexicon::fixture().iter() {
        check_word(w).unwrap_or_else(|e| panic!("{w}: {e}"));
    }
}
