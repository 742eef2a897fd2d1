//! Every bundled corpus file must survive a typed round trip: parse into
//! the corresponding DTO, serialize back, and compare as JSON values.
//! A mismatch means the DTOs silently drop or rewrite data.

mod common;

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use liecx::corpus::{bundled_corpus_dir, CatalogEntryDto, CertificateDto, ClaimDto, TableDto};

fn roundtrip_dir<T: DeserializeOwned + Serialize>(dir: &Path) -> usize {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .unwrap_or_else(|e| panic!("read {}: {e}", dir.display()))
        .map(|entry| entry.expect("entry").path())
        .collect();
    paths.sort();
    for path in &paths {
        roundtrip_file::<T>(path);
    }
    paths.len()
}

fn roundtrip_file<T: DeserializeOwned + Serialize>(path: &Path) {
    let text = std::fs::read_to_string(path).expect("readable");
    let original: Value = serde_json::from_str(&text).expect("valid JSON");
    let typed: T =
        serde_json::from_str(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let reserialized = serde_json::to_value(&typed).expect("serializable");
    assert_eq!(
        reserialized,
        original,
        "{} changes under a typed round trip",
        path.display()
    );
}

#[test]
fn catalog_files_round_trip() {
    let n = roundtrip_dir::<CatalogEntryDto>(&bundled_corpus_dir().join("catalog"));
    assert_eq!(n, 64);
}

#[test]
fn claim_files_round_trip() {
    let n = roundtrip_dir::<ClaimDto>(&bundled_corpus_dir().join("claims"));
    assert_eq!(n, 47);
}

#[test]
fn certificate_files_round_trip() {
    let n = roundtrip_dir::<CertificateDto>(&bundled_corpus_dir().join("certificates"));
    assert_eq!(n, 71);
}

#[test]
fn expected_table_round_trips() {
    roundtrip_file::<TableDto>(&bundled_corpus_dir().join("expected").join("table3.json"));
}

#[test]
fn loaded_corpus_agrees_with_the_files_on_disk() {
    let corpus = common::corpus();
    assert_eq!(corpus.catalog.len(), 64);
    assert_eq!(corpus.claims.len(), 47);
    assert_eq!(corpus.certificates.len(), 71);
    assert_eq!(corpus.table.rows.len(), 13);

    // File stems double as names, so loading must preserve them.
    for claim in &corpus.claims {
        let path = bundled_corpus_dir().join("claims").join(format!("{}.json", claim.name));
        assert!(path.is_file(), "claim {} has a matching file", claim.name);
    }
    for cert in &corpus.certificates {
        let path = bundled_corpus_dir()
            .join("certificates")
            .join(format!("{}.json", cert.name));
        assert!(path.is_file(), "certificate {} has a matching file", cert.name);
    }
}
