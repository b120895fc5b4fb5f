//! Holds the `acceptance` test target. Run it with
//! `cargo test -p ttsfe-acceptance --test acceptance`.
