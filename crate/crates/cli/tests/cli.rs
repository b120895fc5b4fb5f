use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const SENTENCE: &str = "400 यूनिट तक बजिली इस्तमाल करने वाले लोगो को यू.पी. में फायदा";

fn ttsfe(args: &[&str], stdin: &str) -> Output {
    ttsfe_env(args, stdin, None)
}

fn ttsfe_env(args: &[&str], stdin: &str, data_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ttsfe"));
    cmd.args(args)
        .env_remove("TTSFE_DATA_DIR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if let Some(d) = data_dir {
        cmd.env("TTSFE_DATA_DIR", d);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let src = include_str!("../schema/output.schema.json");
    jsonschema::validator_for(&serde_json::from_str(src).unwrap()).expect("schema compiles")
}

fn json_of(args: &[&str], stdin: &str) -> Value {
    let o = ttsfe(args, stdin);
    assert_eq!(
        o.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

#[test]
fn g2p_prints_phonemes() {
    let o = ttsfe(&["g2p"], "आतंकवादी\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "AwankvAxI\n");
}

#[test]
fn g2p_is_line_oriented() {
    let o = ttsfe(&["g2p"], "आपका\n\nपतंग 400\n");
    assert_eq!(stdout(&o), "ApkA\n\npawang cAr sO\n");
}

#[test]
fn check_json_lists_suggestion() {
    let v = json_of(&["check", "--json"], "बजिली");
    assert_eq!(v["command"], "check");
    let m = &v["misspellings"][0];
    assert_eq!(m["word"], "बजिली");
    assert_eq!(m["suggestions"][0]["candidate"], "बिजली");
    assert_eq!(m["suggestions"][0]["distance"], 1);
    assert_eq!(m["suggestions"][0]["rank"], 1);
}

#[test]
fn check_plain_flags_exactly_the_sentence_errors() {
    let o = ttsfe(&["check"], SENTENCE);
    let words: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(words, ["बजिली", "इस्तमाल", "लोगो"]);
}

#[test]
fn analyze_empty_input_is_empty_report() {
    let v = json_of(&["analyze", "--json"], "");
    assert_eq!(v["source"], "");
    assert_eq!(v["tokens"].as_array().unwrap().len(), 0);
    assert_eq!(v["unresolved"].as_array().unwrap().len(), 0);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn analyze_corrects_in_batch_mode() {
    let v = json_of(&["analyze", "--json"], SENTENCE);
    let corrected = v["corrected"].as_str().unwrap();
    assert!(corrected.contains("बिजली") && corrected.contains("इस्तेमाल"));
    let v = json_of(&["analyze", "--json", "--no-correct"], SENTENCE);
    assert_eq!(v["corrected"], SENTENCE);
}

#[test]
fn every_json_output_matches_schema() {
    let inputs = [
        SENTENCE,
        "",
        "सन 1990 में अ.ब.क. 12345678901 ळ",
        "धियान\nलोगो\n",
    ];
    for input in inputs {
        for cmd in ["check", "correct", "normalize", "wx", "g2p", "analyze"] {
            json_of(&[cmd, "--json"], input);
        }
    }
    let v = json_of(&["golden", "regen", "--json"], "");
    assert_eq!(v["changed"], 0);
}

#[test]
fn correct_prints_text() {
    let o = ttsfe(&["correct"], "धियान दें।\n");
    assert_eq!(stdout(&o), "ध्यान दें।\n");
}

#[test]
fn normalize_expands() {
    let o = ttsfe(&["normalize"], "400 यूनिट\nसन 1990\nयू.पी.\n");
    assert_eq!(stdout(&o), "चार सौ यूनिट\nसन उन्नीस सौ नब्बे\nउत्तर प्रदेश\n");
}

#[test]
fn wx_transliterates() {
    let o = ttsfe(&["wx"], "आपका ध्यान\n");
    assert_eq!(stdout(&o), "ApakA XyAna\n");
}

#[test]
fn strict_exit_codes() {
    assert_eq!(
        ttsfe(&["correct", "--strict"], "धियान").status.code(),
        Some(0)
    );
    assert_eq!(
        ttsfe(&["correct", "--strict"], "लोगो").status.code(),
        Some(1)
    );
    assert_eq!(ttsfe(&["correct"], "लोगो").status.code(), Some(0));
    assert_eq!(
        ttsfe(&["check", "--strict"], "बजिली").status.code(),
        Some(1)
    );
    assert_eq!(
        ttsfe(&["normalize", "--strict"], "अ.ब.क.").status.code(),
        Some(1)
    );
    assert_eq!(ttsfe(&["g2p", "--strict"], "बिजली").status.code(), Some(0));
}

#[test]
fn usage_and_config_errors_exit_2() {
    assert_eq!(ttsfe(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(ttsfe(&["--topk", "0", "check"], "").status.code(), Some(2));
    assert_eq!(
        ttsfe(&["--lexicon", "/no/such/file", "check"], "")
            .status
            .code(),
        Some(2)
    );
    let o = ttsfe(&["check"], "");
    assert_eq!(o.status.code(), Some(0));
    let bad = ttsfe_bytes(&["check"], b"\xff\xfe");
    assert_eq!(bad.status.code(), Some(2));
}

fn ttsfe_bytes(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ttsfe"))
        .args(args)
        .env_remove("TTSFE_DATA_DIR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn byte_order_mark_is_stripped() {
    let o = ttsfe(&["g2p"], "\u{FEFF}आपका\n");
    assert_eq!(stdout(&o), "ApkA\n");
}

#[test]
fn file_argument_and_custom_lexicon() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    std::fs::write(&input, "घर").unwrap();
    let lex = dir.path().join("lex.tsv");
    std::fs::write(&lex, "घर\t3\n").unwrap();
    let o = ttsfe(&["check", input.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "", "fixture contains घर");
    let o = ttsfe(&["--lexicon", lex.to_str().unwrap(), "check"], "घट");
    assert_eq!(stdout(&o), "0..2\tघट\tघर:1\n");
}

#[test]
fn data_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("lexicon.tsv"), "पानी\n").unwrap();
    std::fs::write(dir.path().join("abbreviations.tsv"), "अ.ब.क.\tअलिफ़ बे\n").unwrap();
    let o = ttsfe_env(&["normalize"], "अ.ब.क.", Some(dir.path()));
    assert_eq!(stdout(&o), "अलिफ़ बे\n");
    let o = ttsfe_env(&["check"], "घर", Some(dir.path()));
    assert!(stdout(&o).contains("घर"));
    let missing = dir.path().join("nope");
    let o = ttsfe_env(&["check"], "", Some(&missing));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for cmd in ["check", "correct", "normalize", "wx", "g2p", "analyze"] {
        let a = ttsfe(&[cmd, "--json"], SENTENCE);
        let b = ttsfe(&[cmd, "--json"], SENTENCE);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let a = ttsfe(&[cmd], SENTENCE);
        let b = ttsfe(&[cmd], SENTENCE);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn golden_regen_round_trips_shipped_corpus() {
    let o = ttsfe(&["golden", "regen"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), ttsfe_core::GOLDEN_TSV);
}

#[test]
fn golden_regen_write_updates_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.tsv");
    std::fs::write(&path, "# header\nआपका\tWRONG\nघर\n").unwrap();
    let o = ttsfe(&["golden", "regen", path.to_str().unwrap(), "--write"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "# header\nआपका\tApkA\nघर\tGar\n"
    );
    assert_eq!(
        ttsfe(&["golden", "regen", "--write"], "").status.code(),
        Some(2)
    );
}
