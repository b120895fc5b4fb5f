use std::sync::{Arc, OnceLock};

use axum::body::Body;
use axum::http::{header, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;
use ttsfe_core::Resources;
use ttsfe_service::{router, ServiceConfig};

fn resources() -> Arc<Resources> {
    static RES: OnceLock<Arc<Resources>> = OnceLock::new();
    RES.get_or_init(|| Arc::new(Resources::builtin())).clone()
}

fn app() -> Router {
    router(resources(), &ServiceConfig::default())
}

async fn send(app: Router, req: Request<Body>) -> (StatusCode, Vec<u8>) {
    let resp = app.oneshot(req).await.unwrap();
    let status = resp.status();
    let body = resp
        .into_body()
        .collect()
        .await
        .unwrap()
        .to_bytes()
        .to_vec();
    (status, body)
}

fn post_json(uri: &str, body: impl Into<Body>) -> Request<Body> {
    Request::post(uri)
        .header(header::CONTENT_TYPE, "application/json")
        .body(body.into())
        .unwrap()
}

async fn json_response(app: Router, req: Request<Body>) -> (StatusCode, Value) {
    let (status, body) = send(app, req).await;
    (status, serde_json::from_slice(&body).expect("JSON body"))
}

#[tokio::test]
async fn analyze_flags_misspelling() {
    let body = json!({"text": "बजिली"}).to_string();
    let (status, v) = json_response(app(), post_json("/api/analyze", body)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["misspellings"][0]["word"], "बजिली");
    assert_eq!(v["misspellings"][0]["suggestions"][0]["candidate"], "बिजली");
    // Auto-correct defaults off.
    assert_eq!(v["corrected"], "बजिली");
}

#[tokio::test]
async fn analyze_options() {
    let body = json!({"text": "बजिली", "options": {"auto_correct": true, "topk": 1}}).to_string();
    let (status, v) = json_response(app(), post_json("/api/analyze", body)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["corrected"], "बिजली");
    assert_eq!(
        v["misspellings"][0]["suggestions"]
            .as_array()
            .unwrap()
            .len(),
        1
    );
    let body = json!({"text": "x", "options": {"topk": 0}}).to_string();
    let (status, v) = json_response(app(), post_json("/api/analyze", body)).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["error"]["code"], "bad_request");
}

#[tokio::test]
async fn analyze_empty_text() {
    let (status, v) = json_response(app(), post_json("/api/analyze", r#"{"text":""}"#)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["tokens"].as_array().unwrap().len(), 0);
    assert_eq!(v["unresolved"].as_array().unwrap().len(), 0);
}

#[tokio::test]
async fn analyze_rejects_oversize_text() {
    let text = "क".repeat(70 * 1024 / 3 + 1);
    assert!(text.len() > 70 * 1024);
    let body = json!({ "text": text }).to_string();
    let (status, v) = json_response(app(), post_json("/api/analyze", body)).await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
    assert_eq!(v["schema_version"], 1);
    // Escaped bodies far over the limit are cut off before parsing.
    let body = format!(r#"{{"text":"{}"}}"#, "\\u0915".repeat(100_000));
    let (status, _) = send(app(), post_json("/api/analyze", body)).await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
}

#[tokio::test]
async fn analyze_at_limit_is_accepted() {
    let text = "a".repeat(64 * 1024);
    let body = json!({ "text": text }).to_string();
    let (status, _) = send(app(), post_json("/api/analyze", body)).await;
    assert_eq!(status, StatusCode::OK);
}

#[tokio::test]
async fn analyze_rejects_malformed_bodies() {
    for body in [
        Body::from("{not json"),
        Body::from(r#"{"txt": "x"}"#),
        Body::from(r#"{"text": 5}"#),
        Body::from(vec![
            b'{', b'"', b't', b'e', b'x', b't', b'"', b':', b'"', 0xff, b'"', b'}',
        ]),
    ] {
        let (status, v) = json_response(app(), post_json("/api/analyze", body)).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{v}");
        assert_eq!(v["schema_version"], 1);
    }
    let req = Request::post("/api/analyze")
        .body(Body::from(r#"{"text":"x"}"#))
        .unwrap();
    let (status, _) = send(app(), req).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn suggest_endpoint() {
    let uri = "/api/suggest?word=%E0%A4%A7%E0%A4%BF%E0%A4%AF%E0%A4%BE%E0%A4%A8";
    let (status, v) = json_response(app(), Request::get(uri).body(Body::empty()).unwrap()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["word"], "धियान");
    assert_eq!(v["suggestions"][0]["candidate"], "ध्यान");

    let uri = "/api/suggest?word=%E0%A4%AC%E0%A4%BF%E0%A4%9C%E0%A4%B2%E0%A5%80&k=3";
    let (_, v) = json_response(app(), Request::get(uri).body(Body::empty()).unwrap()).await;
    assert_eq!(v["suggestions"][0]["candidate"], "बिजली");
    assert_eq!(v["suggestions"][0]["distance"], 0);
    assert!(v["suggestions"].as_array().unwrap().len() <= 3);

    for uri in [
        "/api/suggest",
        "/api/suggest?word=",
        "/api/suggest?word=%20",
        "/api/suggest?word=x&k=0",
        "/api/suggest?word=x&k=abc",
    ] {
        let (status, v) =
            json_response(app(), Request::get(uri).body(Body::empty()).unwrap()).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{uri}");
        assert_eq!(v["schema_version"], 1);
    }
}

#[tokio::test]
async fn phonemize_reports_errors_inline() {
    let body = json!({"words": ["आतंकवादी", "ळ", "आपका", ""]}).to_string();
    let (status, v) = json_response(app(), post_json("/api/phonemize", body)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["schema_version"], 1);
    let p = v["phonemes"].as_array().unwrap();
    assert_eq!(p.len(), 4);
    assert_eq!(p[0], json!({"word": "आतंकवादी", "phonemes": "AwankvAxI"}));
    assert_eq!(p[1]["word"], "ळ");
    assert!(p[1]["error"].is_string());
    assert_eq!(p[2]["phonemes"], "ApkA");
    assert_eq!(p[3]["phonemes"], "");
    let (status, _) = send(app(), post_json("/api/phonemize", r#"{"word": []}"#)).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn health_and_unknown_routes() {
    let (status, v) = json_response(
        app(),
        Request::get("/api/health").body(Body::empty()).unwrap(),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["status"], "ok");
    let (status, _) = send(app(), Request::get("/nope").body(Body::empty()).unwrap()).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn cors_headers_when_configured() {
    let config = ServiceConfig {
        cors_origins: vec!["http://localhost:3000".into()],
        ..Default::default()
    };
    let app = router(resources(), &config);
    let req = Request::get("/api/health")
        .header(header::ORIGIN, "http://localhost:3000")
        .body(Body::empty())
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    assert_eq!(
        resp.headers()
            .get(header::ACCESS_CONTROL_ALLOW_ORIGIN)
            .unwrap(),
        "http://localhost:3000"
    );
}

#[tokio::test]
async fn static_dir_is_served() {
    let dir = std::env::temp_dir().join(format!("ttsfe-static-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("index.html"), "<p>demo</p>").unwrap();
    let config = ServiceConfig {
        static_dir: Some(dir.clone()),
        ..Default::default()
    };
    let (status, body) = send(
        router(resources(), &config),
        Request::get("/").body(Body::empty()).unwrap(),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, b"<p>demo</p>");
    std::fs::remove_dir_all(dir).unwrap();
}
