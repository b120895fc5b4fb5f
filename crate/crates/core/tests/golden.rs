use ttsfe_core::{g2p, GOLDEN_TSV};

fn entries() -> Vec<(&'static str, &'static str)> {
    GOLDEN_TSV
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (w, p) = l.split_once('\t').expect("two columns");
            (w, p)
        })
        .collect()
}

#[test]
fn golden_corpus_is_byte_exact() {
    let entries = entries();
    assert!(entries.len() >= 60, "corpus has {} entries", entries.len());
    let mismatches: Vec<String> = entries
        .iter()
        .filter_map(|&(w, want)| {
            let got = g2p(w)
                .map(|p| p.into_inner())
                .unwrap_or_else(|e| format!("error: {e}"));
            (got != want).then(|| format!("{w}: want {want}, got {got}"))
        })
        .collect();
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn golden_words_are_unique() {
    let entries = entries();
    let mut words: Vec<_> = entries.iter().map(|e| e.0).collect();
    words.sort_unstable();
    words.dedup();
    assert_eq!(words.len(), entries.len());
}
