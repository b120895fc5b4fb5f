//! `ttsfe`: batch access to the Hindi text frontend.
//!
//! Exit status is 0 on success, 1 when `--strict` is set and anything was
//! left unresolved, 2 on usage or configuration errors.

mod output;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ttsfe_core::pipeline::{ResourcePaths, UnresolvedKind, SCHEMA_VERSION};
use ttsfe_core::spellcheck::{DEFAULT_MAX_DISTANCE, DEFAULT_TOP_K};
use ttsfe_core::{analyze, g2p, AnalysisReport, PipelineConfig, Resources, GOLDEN_TSV};

use crate::output::{
    CheckOutput, CorrectOutput, G2pLine, GoldenEntry, GoldenOutput, LinesOutput, NormalizeLine,
    WxLine,
};

#[derive(Parser, Debug)]
#[command(
    name = "ttsfe",
    version,
    about = "Hindi TTS text frontend: spellcheck, normalize, transliterate, phonemize"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Options {
    /// Lexicon file (`word[<TAB>frequency]` per line).
    #[arg(long, global = true, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Abbreviation table (`abbreviation<TAB>expansion`).
    #[arg(long, global = true, value_name = "PATH")]
    abbrev: Option<PathBuf>,
    /// Number-name table (`value<TAB>name`).
    #[arg(long, global = true, value_name = "PATH")]
    numbers: Option<PathBuf>,
    /// Symbol table (`symbol<TAB>reading`).
    #[arg(long, global = true, value_name = "PATH")]
    symbols: Option<PathBuf>,
    /// Directory holding lexicon.tsv, abbreviations.tsv, numbers.tsv, symbols.tsv, golden.tsv.
    #[arg(long, global = true, env = "TTSFE_DATA_DIR", value_name = "DIR")]
    data_dir: Option<PathBuf>,
    /// Suggestions per misspelling.
    #[arg(long, global = true, default_value_t = DEFAULT_TOP_K,
          value_parser = positive)]
    topk: usize,
    /// Largest edit distance for suggestions.
    #[arg(long = "max-distance", global = true, default_value_t = DEFAULT_MAX_DISTANCE,
          value_parser = positive)]
    max_distance: usize,
    /// Exit with status 1 when anything is left unresolved.
    #[arg(long, global = true)]
    strict: bool,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; standard input when absent.
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List misspelled words with ranked suggestions.
    Check(Input),
    /// Print the text with unambiguous corrections applied.
    Correct(Input),
    /// Expand numbers, abbreviations and symbols, one output line per input line.
    Normalize(Input),
    /// WX transliteration of the normalized words, one output line per input line.
    Wx(Input),
    /// Phoneme strings of the normalized words, one output line per input line.
    G2p(Input),
    /// Full analysis report.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Report misspellings without correcting them.
        #[arg(long)]
        no_correct: bool,
    },
    /// Golden corpus maintenance.
    Golden {
        #[command(subcommand)]
        action: GoldenAction,
    },
}

#[derive(Subcommand, Debug)]
enum GoldenAction {
    /// Recompute the phoneme column of a golden corpus file.
    Regen {
        /// Corpus file; the data directory's golden.tsv or the built-in corpus when absent.
        file: Option<PathBuf>,
        /// Overwrite FILE instead of printing.
        #[arg(long, requires = "file")]
        write: bool,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(unresolved) if unresolved && cli.opts.strict => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ttsfe: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// A closed stdout (`ttsfe ... | head`) is not an error.
fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

/// Run one subcommand. `Ok(true)` means something was left unresolved.
fn run(cli: &Cli) -> Result<bool> {
    let opts = &cli.opts;
    if let Command::Golden {
        action: GoldenAction::Regen { file, write },
    } = &cli.command
    {
        return golden_regen(opts, file.as_deref(), *write);
    }
    let res = load_resources(opts)?;
    let config = PipelineConfig {
        top_k: opts.topk,
        max_distance: opts.max_distance,
        auto_correct: false,
        free_choice: false,
    };
    let mut out = io::stdout().lock();
    let unresolved = match &cli.command {
        Command::Check(input) => {
            let report = analyze(&read_input(input)?, &config, &res);
            if opts.json {
                emit_json(&mut out, &CheckOutput::new(&report))?;
            } else {
                for m in &report.misspellings {
                    let list = if m.suggestions.is_empty() {
                        "-".to_string()
                    } else {
                        m.suggestions
                            .iter()
                            .map(|s| format!("{}:{}", s.candidate, s.distance))
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    writeln!(out, "{}\t{}\t{}", m.span, m.word, list)?;
                }
            }
            !report.misspellings.is_empty()
        }
        Command::Correct(input) => {
            let config = PipelineConfig {
                auto_correct: true,
                ..config
            };
            let report = analyze(&read_input(input)?, &config, &res);
            let output = CorrectOutput::new(&report);
            if opts.json {
                emit_json(&mut out, &output)?;
            } else {
                out.write_all(report.corrected.as_bytes())?;
            }
            !output.unresolved.is_empty()
        }
        Command::Normalize(input) => per_line(&mut out, opts, input, &config, &res, |n, r| {
            let text = r.normalized_text();
            (text, NormalizeLine::new(n, r))
        })?,
        Command::Wx(input) => per_line(&mut out, opts, input, &config, &res, |n, r| {
            let text =
                r.wx.iter()
                    .map(|w| w.wx.as_str())
                    .collect::<Vec<_>>()
                    .join(" ");
            (text, WxLine::new(n, r))
        })?,
        Command::G2p(input) => per_line(&mut out, opts, input, &config, &res, |n, r| {
            (r.phonemes.sentence.clone(), G2pLine::new(n, r))
        })?,
        Command::Analyze { input, no_correct } => {
            let config = PipelineConfig {
                auto_correct: !no_correct,
                ..config
            };
            let report = analyze(&read_input(input)?, &config, &res);
            if opts.json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write_summary(&mut out, &report)?;
            }
            !report.unresolved.is_empty()
        }
        Command::Golden { .. } => unreachable!("handled above"),
    };
    out.flush()?;
    Ok(unresolved)
}

fn load_resources(opts: &Options) -> Result<Resources> {
    let mut paths = ResourcePaths {
        lexicon: opts.lexicon.clone(),
        abbreviations: opts.abbrev.clone(),
        numbers: opts.numbers.clone(),
        symbols: opts.symbols.clone(),
    };
    if let Some(dir) = &opts.data_dir {
        if !dir.is_dir() {
            bail!("data directory {} does not exist", dir.display());
        }
        paths = paths.with_data_dir(dir);
    }
    Resources::load(&paths).context("loading resources")
}

fn decode(bytes: Vec<u8>, what: &str) -> Result<String> {
    let bytes = match bytes.strip_prefix(b"\xEF\xBB\xBF") {
        Some(rest) => rest.to_vec(),
        None => bytes,
    };
    String::from_utf8(bytes).with_context(|| format!("{what} is not valid UTF-8"))
}

fn read_input(input: &Input) -> Result<String> {
    match &input.file {
        Some(path) => {
            let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            decode(bytes, &path.display().to_string())
        }
        None => {
            let mut bytes = Vec::new();
            io::stdin()
                .read_to_end(&mut bytes)
                .context("reading standard input")?;
            decode(bytes, "standard input")
        }
    }
}

fn emit_json<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Analyze each input line without correction and print one line per input line.
fn per_line<L: serde::Serialize + output::HasUnresolved>(
    out: &mut impl Write,
    opts: &Options,
    input: &Input,
    config: &PipelineConfig,
    res: &Resources,
    render: impl Fn(usize, &AnalysisReport) -> (String, L),
) -> Result<bool> {
    let text = read_input(input)?;
    let mut lines = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let report = analyze(line, config, res);
        let (plain, structured) = render(i + 1, &report);
        if !opts.json {
            writeln!(out, "{plain}")?;
        }
        lines.push(structured);
    }
    let unresolved = lines.iter().any(|l| l.has_unresolved());
    if opts.json {
        emit_json(out, &LinesOutput::new(&lines))?;
    }
    Ok(unresolved)
}

fn write_summary(out: &mut impl Write, r: &AnalysisReport) -> Result<()> {
    writeln!(out, "corrected:  {}", r.corrected.trim_end())?;
    writeln!(out, "normalized: {}", r.normalized_text())?;
    let wx: Vec<&str> = r.wx.iter().map(|w| w.wx.as_str()).collect();
    writeln!(out, "wx:         {}", wx.join(" "))?;
    writeln!(out, "phonemes:   {}", r.phonemes.sentence)?;
    for c in &r.corrections {
        writeln!(
            out,
            "corrected {}\t{} -> {}",
            c.span, c.original, c.replacement
        )?;
    }
    for u in &r.unresolved {
        let kind = match u.kind {
            UnresolvedKind::AmbiguousCorrection => "ambiguous",
            UnresolvedKind::NoSuggestion => "no-suggestion",
            UnresolvedKind::UnknownAbbreviation => "unknown-abbreviation",
            UnresolvedKind::NumberOutOfRange => "number-out-of-range",
            UnresolvedKind::Unphonemizable => "unphonemizable",
        };
        writeln!(
            out,
            "unresolved {}\t{}\t{}\t{}",
            u.span, kind, u.text, u.detail
        )?;
    }
    Ok(())
}

fn golden_regen(opts: &Options, file: Option<&Path>, write: bool) -> Result<bool> {
    let from_dir = opts
        .data_dir
        .as_ref()
        .map(|d| d.join("golden.tsv"))
        .filter(|p| p.exists());
    let source = match file.map(Path::to_path_buf).or(from_dir) {
        Some(p) => {
            let bytes = fs::read(&p).with_context(|| format!("reading {}", p.display()))?;
            decode(bytes, &p.display().to_string())?
        }
        None => GOLDEN_TSV.to_string(),
    };
    let mut rendered = String::new();
    let mut entries = Vec::new();
    let mut changed = 0;
    for (i, line) in source.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            rendered.push_str(line);
            rendered.push('\n');
            continue;
        }
        let (word, old) = match line.split_once('\t') {
            Some((w, p)) => (w, Some(p)),
            None => (line, None),
        };
        let phonemes = g2p(word)
            .with_context(|| format!("line {}: {word}", i + 1))?
            .into_inner();
        if old != Some(phonemes.as_str()) {
            changed += 1;
        }
        rendered.push_str(&format!("{word}\t{phonemes}\n"));
        entries.push(GoldenEntry {
            word: word.to_string(),
            phonemes,
        });
    }
    let mut out = io::stdout().lock();
    if write {
        let path = file.expect("clap enforces FILE with --write");
        fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?;
        eprintln!(
            "{}: {} entries, {changed} changed",
            path.display(),
            entries.len()
        );
    }
    if opts.json {
        emit_json(
            &mut out,
            &GoldenOutput {
                schema_version: SCHEMA_VERSION,
                command: "golden_regen",
                changed,
                entries,
            },
        )?;
    } else if !write {
        out.write_all(rendered.as_bytes())?;
    }
    out.flush()?;
    Ok(false)
}
