//! Stateless HTTP facade over the analysis pipeline.
//!
//! Routes:
//! - `POST /api/analyze` with `{"text": ..., "options": {...}}` returns an analysis report.
//! - `GET /api/suggest?word=W&k=N&max_distance=D` returns ranked suggestions.
//! - `POST /api/phonemize` with `{"words": [...]}` returns one phoneme result per word.
//! - `GET /api/health`.
//!
//! Every JSON body carries `schema_version`. No state survives a request.

use std::path::PathBuf;
use std::sync::Arc;

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{DefaultBodyLimit, Query, State};
use axum::http::{HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, Any, CorsLayer};
use tower_http::services::ServeDir;
use ttsfe_core::pipeline::SCHEMA_VERSION;
use ttsfe_core::spellcheck::{DEFAULT_MAX_DISTANCE, DEFAULT_TOP_K};
use ttsfe_core::{analyze, g2p, suggest, PipelineConfig, Resources, Suggestion};

pub const DEFAULT_MAX_TEXT_BYTES: usize = 64 * 1024;

/// Slack above the text limit for the JSON envelope and escapes.
const ENVELOPE_BYTES: usize = 4 * 1024;

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub max_text_bytes: usize,
    /// Allowed CORS origins; `*` allows any. Empty disables CORS headers.
    pub cors_origins: Vec<String>,
    /// Directory served under `/` for everything outside `/api`.
    pub static_dir: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            max_text_bytes: DEFAULT_MAX_TEXT_BYTES,
            cors_origins: Vec::new(),
            static_dir: None,
        }
    }
}

#[derive(Clone)]
struct AppState {
    res: Arc<Resources>,
    max_text_bytes: usize,
}

pub fn router(res: Arc<Resources>, config: &ServiceConfig) -> Router {
    let state = AppState {
        res,
        max_text_bytes: config.max_text_bytes,
    };
    // JSON escapes can inflate Devanagari up to 6 bytes per 3; allow for it.
    let body_limit = config.max_text_bytes * 2 + ENVELOPE_BYTES;
    let mut app = Router::new()
        .route("/api/analyze", post(analyze_handler))
        .route("/api/suggest", get(suggest_handler))
        .route("/api/phonemize", post(phonemize_handler))
        .route("/api/health", get(health_handler))
        .layer(DefaultBodyLimit::max(body_limit))
        .with_state(state);
    if let Some(dir) = &config.static_dir {
        app = app.fallback_service(ServeDir::new(dir));
    }
    if let Some(cors) = cors_layer(&config.cors_origins) {
        app = app.layer(cors);
    }
    app
}

fn cors_layer(origins: &[String]) -> Option<CorsLayer> {
    if origins.is_empty() {
        return None;
    }
    let allow = if origins.iter().any(|o| o == "*") {
        AllowOrigin::from(Any)
    } else {
        AllowOrigin::list(origins.iter().filter_map(|o| HeaderValue::from_str(o).ok()))
    };
    Some(
        CorsLayer::new()
            .allow_origin(allow)
            .allow_methods([Method::GET, Method::POST])
            .allow_headers(Any),
    )
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    schema_version: u32,
    error: ErrorDetail,
}

#[derive(Debug, Serialize)]
struct ErrorDetail {
    code: &'static str,
    message: String,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn bad_request(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            code: "bad_request",
            message: message.into(),
        }
    }

    fn too_large(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::PAYLOAD_TOO_LARGE,
            code: "payload_too_large",
            message: message.into(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            schema_version: SCHEMA_VERSION,
            error: ErrorDetail {
                code: self.code,
                message: self.message,
            },
        };
        (self.status, Json(body)).into_response()
    }
}

impl From<JsonRejection> for ApiError {
    fn from(r: JsonRejection) -> Self {
        if r.status() == StatusCode::PAYLOAD_TOO_LARGE {
            ApiError::too_large(r.body_text())
        } else {
            ApiError::bad_request(r.body_text())
        }
    }
}

impl From<QueryRejection> for ApiError {
    fn from(r: QueryRejection) -> Self {
        ApiError::bad_request(r.body_text())
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeOptions {
    pub topk: Option<usize>,
    pub max_distance: Option<usize>,
    pub auto_correct: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeRequest {
    pub text: String,
    #[serde(default)]
    pub options: AnalyzeOptions,
}

fn positive(name: &str, v: Option<usize>, default: usize) -> Result<usize, ApiError> {
    match v {
        None => Ok(default),
        Some(0) => Err(ApiError::bad_request(format!("{name} must be at least 1"))),
        Some(n) => Ok(n),
    }
}

async fn analyze_handler(
    State(state): State<AppState>,
    body: Result<Json<AnalyzeRequest>, JsonRejection>,
) -> Result<Response, ApiError> {
    let Json(req) = body?;
    if req.text.len() > state.max_text_bytes {
        return Err(ApiError::too_large(format!(
            "text is {} bytes, limit is {}",
            req.text.len(),
            state.max_text_bytes
        )));
    }
    let config = PipelineConfig {
        top_k: positive("topk", req.options.topk, DEFAULT_TOP_K)?,
        max_distance: positive(
            "max_distance",
            req.options.max_distance,
            DEFAULT_MAX_DISTANCE,
        )?,
        auto_correct: req.options.auto_correct.unwrap_or(false),
        free_choice: false,
    };
    let res = state.res.clone();
    let report = tokio::task::spawn_blocking(move || analyze(&req.text, &config, &res))
        .await
        .map_err(|e| ApiError {
            status: StatusCode::INTERNAL_SERVER_ERROR,
            code: "internal",
            message: e.to_string(),
        })?;
    Ok(Json(report).into_response())
}

#[derive(Debug, Deserialize)]
pub struct SuggestQuery {
    pub word: Option<String>,
    pub k: Option<usize>,
    pub max_distance: Option<usize>,
}

#[derive(Debug, Serialize)]
struct SuggestResponse {
    schema_version: u32,
    word: String,
    suggestions: Vec<Suggestion>,
}

async fn suggest_handler(
    State(state): State<AppState>,
    query: Result<Query<SuggestQuery>, QueryRejection>,
) -> Result<Response, ApiError> {
    let Query(q) = query?;
    let word = q.word.unwrap_or_default();
    let word = word.trim();
    if word.is_empty() {
        return Err(ApiError::bad_request("query parameter `word` is required"));
    }
    let k = positive("k", q.k, DEFAULT_TOP_K)?;
    let max = positive("max_distance", q.max_distance, DEFAULT_MAX_DISTANCE)?;
    let suggestions = suggest(word, &state.res.lexicon, k, max);
    Ok(Json(SuggestResponse {
        schema_version: SCHEMA_VERSION,
        word: word.to_string(),
        suggestions,
    })
    .into_response())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhonemizeRequest {
    pub words: Vec<String>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum PhonemeResult {
    Ok { word: String, phonemes: String },
    Err { word: String, error: String },
}

#[derive(Debug, Serialize)]
struct PhonemizeResponse {
    schema_version: u32,
    phonemes: Vec<PhonemeResult>,
}

async fn phonemize_handler(
    State(state): State<AppState>,
    body: Result<Json<PhonemizeRequest>, JsonRejection>,
) -> Result<Response, ApiError> {
    let Json(req) = body?;
    let total: usize = req.words.iter().map(String::len).sum();
    if total > state.max_text_bytes {
        return Err(ApiError::too_large(format!(
            "words total {total} bytes, limit is {}",
            state.max_text_bytes
        )));
    }
    let phonemes = req
        .words
        .into_iter()
        .map(|word| match g2p(&word) {
            Ok(p) => PhonemeResult::Ok {
                word,
                phonemes: p.into_inner(),
            },
            Err(e) => PhonemeResult::Err {
                error: e.to_string(),
                word,
            },
        })
        .collect();
    Ok(Json(PhonemizeResponse {
        schema_version: SCHEMA_VERSION,
        phonemes,
    })
    .into_response())
}

async fn health_handler() -> Json<serde_json::Value> {
    Json(serde_json::json!({ "schema_version": SCHEMA_VERSION, "status": "ok" }))
}
