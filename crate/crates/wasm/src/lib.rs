//! wasm-bindgen exports for the browser demo in `www/`.
//!
//! Every function returns a JSON string so the page only needs `JSON.parse`.

use std::sync::OnceLock;

use serde_json::json;
use ttsfe_core::pipeline::SCHEMA_VERSION;
use ttsfe_core::{PipelineConfig, Resources};
use wasm_bindgen::prelude::*;

fn resources() -> &'static Resources {
    static RES: OnceLock<Resources> = OnceLock::new();
    RES.get_or_init(Resources::builtin)
}

/// Full analysis report for `text`.
#[wasm_bindgen]
pub fn analyze(text: &str, auto_correct: bool) -> String {
    let config = PipelineConfig {
        auto_correct,
        ..Default::default()
    };
    ttsfe_core::analyze(text, &config, resources()).to_json()
}

/// Ranked corrections for one word. `k` of zero means the default.
#[wasm_bindgen]
pub fn suggest(word: &str, k: usize) -> String {
    let config = PipelineConfig::default();
    let k = if k == 0 { config.top_k } else { k };
    let suggestions =
        ttsfe_core::suggest(word.trim(), &resources().lexicon, k, config.max_distance);
    json!({
        "schema_version": SCHEMA_VERSION,
        "word": word.trim(),
        "suggestions": suggestions,
    })
    .to_string()
}

/// Phonemes of one word, or an error message.
#[wasm_bindgen]
pub fn g2p(word: &str) -> String {
    let body = match ttsfe_core::g2p(word.trim()) {
        Ok(p) => json!({ "word": word.trim(), "phonemes": p.as_str() }),
        Err(e) => json!({ "word": word.trim(), "error": e.to_string() }),
    };
    body.to_string()
}
