//! `ttsfe-service`: serve the analysis API, optionally with the browser demo.

use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::Parser;
use ttsfe_core::pipeline::ResourcePaths;
use ttsfe_core::Resources;
use ttsfe_service::{router, ServiceConfig, DEFAULT_MAX_TEXT_BYTES};

#[derive(Parser, Debug)]
#[command(
    name = "ttsfe-service",
    version,
    about = "HTTP API for the ttsfe Hindi text frontend"
)]
struct Args {
    /// Address to listen on.
    #[arg(long, default_value = "127.0.0.1:8080")]
    bind: SocketAddr,
    /// Lexicon file (`word[<TAB>frequency]` per line)
    #[arg(long, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Abbreviation table
    #[arg(long, value_name = "PATH")]
    abbrev: Option<PathBuf>,
    /// Number-name table
    #[arg(long, value_name = "PATH")]
    numbers: Option<PathBuf>,
    /// Symbol table
    #[arg(long, value_name = "PATH")]
    symbols: Option<PathBuf>,
    /// Directory holding the four tables under their default names
    #[arg(long, env = "TTSFE_DATA_DIR", value_name = "DIR")]
    data_dir: Option<PathBuf>,
    /// Largest accepted text in bytes.
    #[arg(long, default_value_t = DEFAULT_MAX_TEXT_BYTES)]
    max_text_bytes: usize,
    /// Allowed CORS origin; repeatable, `*` for any.
    #[arg(long = "cors-origin", value_name = "ORIGIN")]
    cors_origins: Vec<String>,
    /// Serve this directory under `/`.
    #[arg(long, value_name = "DIR")]
    static_dir: Option<PathBuf>,
}

fn load(args: &Args) -> Result<Resources> {
    let mut paths = ResourcePaths {
        lexicon: args.lexicon.clone(),
        abbreviations: args.abbrev.clone(),
        numbers: args.numbers.clone(),
        symbols: args.symbols.clone(),
    };
    if let Some(dir) = &args.data_dir {
        anyhow::ensure!(
            dir.is_dir(),
            "data directory {} does not exist",
            dir.display()
        );
        paths = paths.with_data_dir(dir);
    }
    Resources::load(&paths).context("loading resources")
}

async fn serve(args: Args, res: Resources) -> Result<()> {
    let config = ServiceConfig {
        max_text_bytes: args.max_text_bytes,
        cors_origins: args.cors_origins,
        static_dir: args.static_dir,
    };
    let app = router(Arc::new(res), &config);
    let listener = tokio::net::TcpListener::bind(args.bind)
        .await
        .with_context(|| format!("binding {}", args.bind))?;
    eprintln!(
        "ttsfe-service listening on http://{}",
        listener.local_addr()?
    );
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    // Fail before binding if the lexicon or tables are bad.
    let res = match load(&args) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("ttsfe-service: {e:#}");
            return ExitCode::from(2);
        }
    };
    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("ttsfe-service: {e}");
            return ExitCode::FAILURE;
        }
    };
    match runtime.block_on(serve(args, res)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ttsfe-service: {e:#}");
            ExitCode::FAILURE
        }
    }
}
