//! Fetching reference sequences and cross-checking local values against them.
//!
//! Sequences come either from local fixture files (the default, so tests and
//! CI never touch the network) or from a remote search endpoint when the user
//! opts in with `--online`. Fixture files are two lines: the identifier, then
//! the terms, comma-separated.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Duration;

use polycat_core::series::Int;
use polycat_core::Nat;

/// Everything that can go wrong between "I have an identifier" and "I have
/// the sequence's terms".
#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("invalid sequence identifier {0:?}: expected 'A' followed by six digits, like A000108")]
    InvalidId(String),
    #[error("sequence {0} not found")]
    NotFound(String),
    #[error("malformed response for {id}: {detail}")]
    MalformedResponse { id: String, detail: String },
    #[error("network failure fetching {id}: {detail}")]
    NetworkUnreachable { id: String, detail: String },
}

/// Where sequence terms come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceSource {
    Fixture,
    Network,
}

impl fmt::Display for SequenceSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSource::Fixture => f.write_str("fixture"),
            SequenceSource::Network => f.write_str("network"),
        }
    }
}

/// A fetched reference sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    pub terms: Vec<Int>,
    pub source: SequenceSource,
}

/// How to fetch: a fixture directory, or a remote endpoint with a timeout.
#[derive(Debug, Clone)]
pub enum FetchSource {
    Fixture { dir: PathBuf },
    Network { base_url: String, timeout: Duration },
}

/// Checks `id` has the shape `A` + six digits (e.g. `A000108`).
pub fn validate_id(id: &str) -> Result<(), OeisError> {
    let bytes = id.as_bytes();
    let good = bytes.len() == 7
        && bytes[0] == b'A'
        && bytes[1..].iter().all(|b| b.is_ascii_digit());
    if good {
        Ok(())
    } else {
        Err(OeisError::InvalidId(id.to_owned()))
    }
}

/// Fetches the terms of `id` from the chosen source.
pub fn fetch_sequence(id: &str, source: &FetchSource) -> Result<SequenceRecord, OeisError> {
    validate_id(id)?;
    match source {
        FetchSource::Fixture { dir } => fetch_from_fixture(id, dir),
        FetchSource::Network { base_url, timeout } => fetch_online(id, base_url, *timeout),
    }
}

fn fetch_from_fixture(id: &str, dir: &Path) -> Result<SequenceRecord, OeisError> {
    let path = dir.join(format!("{id}.txt"));
    let text = std::fs::read_to_string(&path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            OeisError::NotFound(id.to_owned())
        } else {
            OeisError::MalformedResponse {
                id: id.to_owned(),
                detail: format!("cannot read {}: {e}", path.display()),
            }
        }
    })?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let malformed = |detail: &str| OeisError::MalformedResponse {
        id: id.to_owned(),
        detail: detail.to_owned(),
    };
    let header = lines.next().ok_or_else(|| malformed("empty fixture file"))?;
    if header.trim() != id {
        return Err(malformed(&format!(
            "fixture header {:?} does not match the requested identifier",
            header.trim()
        )));
    }
    let data = lines
        .next()
        .ok_or_else(|| malformed("fixture has no terms line"))?;
    let terms = parse_terms(id, data)?;
    Ok(SequenceRecord {
        id: id.to_owned(),
        terms,
        source: SequenceSource::Fixture,
    })
}

fn fetch_online(id: &str, base_url: &str, timeout: Duration) -> Result<SequenceRecord, OeisError> {
    let url = format!("{}/search?q=id:{id}&fmt=json", base_url.trim_end_matches('/'));
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(timeout))
        .build()
        .into();
    let mut response = agent.get(&url).call().map_err(|e| OeisError::NetworkUnreachable {
        id: id.to_owned(),
        detail: e.to_string(),
    })?;
    let body = response
        .body_mut()
        .read_to_string()
        .map_err(|e| OeisError::NetworkUnreachable {
            id: id.to_owned(),
            detail: format!("reading response body: {e}"),
        })?;
    let terms = parse_search_body(id, &body)?;
    Ok(SequenceRecord {
        id: id.to_owned(),
        terms,
        source: SequenceSource::Network,
    })
}

/// Pulls the `data` field for `id` out of a search response.
///
/// The endpoint has served several shapes over the years — an object with a
/// `results` array, a bare array of entries, or a single entry object — so
/// this reads tolerantly: find the first object carrying a `data` string and
/// parse that.
pub fn parse_search_body(id: &str, body: &str) -> Result<Vec<Int>, OeisError> {
    let malformed = |detail: String| OeisError::MalformedResponse {
        id: id.to_owned(),
        detail,
    };
    let value: serde_json::Value =
        serde_json::from_str(body).map_err(|e| malformed(format!("invalid JSON: {e}")))?;

    let entries: Vec<&serde_json::Value> = if let Some(array) = value.as_array() {
        array.iter().collect()
    } else if let Some(array) = value.get("results").and_then(|r| r.as_array()) {
        array.iter().collect()
    } else if value.get("data").is_some() {
        vec![&value]
    } else if value.is_object() {
        // An object with no results array and no data: a well-formed "no
        // such sequence" reply.
        Vec::new()
    } else {
        return Err(malformed("response is neither an object nor an array".to_owned()));
    };

    let entry = entries
        .iter()
        .find(|e| e.get("data").is_some())
        .ok_or_else(|| OeisError::NotFound(id.to_owned()))?;
    let data = entry
        .get("data")
        .and_then(|d| d.as_str())
        .ok_or_else(|| malformed("entry's data field is not a string".to_owned()))?;
    parse_terms(id, data)
}

fn parse_terms(id: &str, data: &str) -> Result<Vec<Int>, OeisError> {
    let mut terms = Vec::new();
    for piece in data.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let term: Int = piece.parse().map_err(|_| OeisError::MalformedResponse {
            id: id.to_owned(),
            detail: format!("cannot parse term {piece:?} as an integer"),
        })?;
        terms.push(term);
    }
    if terms.is_empty() {
        return Err(OeisError::MalformedResponse {
            id: id.to_owned(),
            detail: "no terms in response".to_owned(),
        });
    }
    Ok(terms)
}

/// Outcome of comparing local terms against a reference sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    InsufficientRemoteTerms,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::InsufficientRemoteTerms => "insufficient-remote-terms",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first disagreeing position, in local indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstMismatch {
    pub index: usize,
    pub local: Int,
    pub remote: Int,
}

/// Result of a term-by-term comparison.
///
/// `matched_prefix_length` counts the leading positions that agree;
/// `first_mismatch` is present exactly when the verdict is [`Verdict::Mismatch`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub matched_prefix_length: usize,
    pub first_mismatch: Option<FirstMismatch>,
    pub verdict: Verdict,
}

/// Compares `local` against `remote.terms[offset..]`, position by position.
///
/// If every overlapping position agrees and the remote side covers all of
/// `local`, the verdict is a match. If the remote side runs out first, the
/// verdict is `insufficient-remote-terms` (not a mismatch: nothing actually
/// disagreed). The first disagreement, if any, is reported with the local
/// index, so swapping the two inputs flips only the value fields.
pub fn cross_check(local: &[Nat], remote: &SequenceRecord, offset: usize) -> CrossCheckReport {
    let available = remote.terms.len().saturating_sub(offset);
    let overlap = local.len().min(available);
    for (i, term) in local.iter().take(overlap).enumerate() {
        let local_term = Int::from(term.clone());
        let remote_term = &remote.terms[offset + i];
        if local_term != *remote_term {
            return CrossCheckReport {
                matched_prefix_length: i,
                first_mismatch: Some(FirstMismatch {
                    index: i,
                    local: local_term,
                    remote: remote_term.clone(),
                }),
                verdict: Verdict::Mismatch,
            };
        }
    }
    let verdict = if local.len() <= available {
        Verdict::Match
    } else {
        Verdict::InsufficientRemoteTerms
    };
    CrossCheckReport {
        matched_prefix_length: overlap,
        first_mismatch: None,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycat_core::combinatorics::nat;

    fn record(terms: &[i64]) -> SequenceRecord {
        SequenceRecord {
            id: "A000000".to_owned(),
            terms: terms.iter().map(|&t| Int::from(t)).collect(),
            source: SequenceSource::Fixture,
        }
    }

    fn nats(terms: &[u64]) -> Vec<Nat> {
        terms.iter().map(|&t| Nat::from(t)).collect()
    }

    #[test]
    fn id_validation() {
        assert!(validate_id("A000108").is_ok());
        assert!(validate_id("A999999").is_ok());
        for bad in ["X123", "A123", "A1234567", "a000108", "A00010x", ""] {
            assert!(matches!(validate_id(bad), Err(OeisError::InvalidId(_))), "{bad:?}");
        }
    }

    #[test]
    fn matching_prefix_is_a_match() {
        let report = cross_check(&nats(&[1, 1, 2, 5]), &record(&[1, 1, 2, 5, 14]), 0);
        assert_eq!(report.verdict, Verdict::Match);
        assert_eq!(report.matched_prefix_length, 4);
        assert!(report.first_mismatch.is_none());
    }

    #[test]
    fn first_disagreement_is_reported_with_the_local_index() {
        let report = cross_check(&nats(&[1, 1, 2, 5]), &record(&[1, 1, 3, 12]), 0);
        assert_eq!(report.verdict, Verdict::Mismatch);
        assert_eq!(report.matched_prefix_length, 2);
        let mm = report.first_mismatch.unwrap();
        assert_eq!(mm.index, 2);
        assert_eq!(mm.local, Int::from(2));
        assert_eq!(mm.remote, Int::from(3));
    }

    #[test]
    fn swapping_the_inputs_flips_only_the_value_fields() {
        let a = nats(&[1, 1, 2, 5]);
        let b = [1, 1, 3, 12];
        let forward = cross_check(&a, &record(&b), 0);
        let backward = cross_check(&nats(&[1, 1, 3, 12]), &record(&[1, 1, 2, 5]), 0);
        let f = forward.first_mismatch.unwrap();
        let g = backward.first_mismatch.unwrap();
        assert_eq!(f.index, g.index);
        assert_eq!(forward.matched_prefix_length, backward.matched_prefix_length);
        assert_eq!(f.local, g.remote);
        assert_eq!(f.remote, g.local);
    }

    #[test]
    fn short_remote_is_insufficient_not_mismatched() {
        let report = cross_check(&nats(&[1, 1, 2, 5, 14]), &record(&[1, 1, 2]), 0);
        assert_eq!(report.verdict, Verdict::InsufficientRemoteTerms);
        assert_eq!(report.matched_prefix_length, 3);
        assert!(report.first_mismatch.is_none());
    }

    #[test]
    fn offset_shifts_the_remote_side() {
        // Local terms start at the remote's index 2.
        let report = cross_check(&nats(&[2, 5, 14]), &record(&[1, 1, 2, 5, 14]), 2);
        assert_eq!(report.verdict, Verdict::Match);
        assert_eq!(report.matched_prefix_length, 3);
        // An offset past the end leaves nothing to compare.
        let report = cross_check(&nats(&[1]), &record(&[1, 1, 2]), 7);
        assert_eq!(report.verdict, Verdict::InsufficientRemoteTerms);
        assert_eq!(report.matched_prefix_length, 0);
    }

    #[test]
    fn empty_local_matches_trivially() {
        let report = cross_check(&[], &record(&[1, 1, 2]), 0);
        assert_eq!(report.verdict, Verdict::Match);
        assert_eq!(report.matched_prefix_length, 0);
    }

    #[test]
    fn search_body_shapes_all_parse() {
        let expected: Vec<Int> = [1, 1, 2, 5, 14].iter().map(|&t| Int::from(t)).collect();
        let wrapped = r#"{"greeting":"hi","results":[{"number":108,"data":"1,1,2,5,14"}]}"#;
        let bare = r#"[{"data":"1, 1, 2, 5, 14"}]"#;
        let single = r#"{"data":"1,1,2,5,14"}"#;
        for body in [wrapped, bare, single] {
            assert_eq!(parse_search_body("A000108", body).unwrap(), expected, "{body}");
        }
    }

    #[test]
    fn search_body_without_results_is_not_found() {
        for body in [r#"{"results":[]}"#, r#"{"count":0}"#, "[]"] {
            assert!(
                matches!(parse_search_body("A000108", body), Err(OeisError::NotFound(_))),
                "{body}"
            );
        }
    }

    #[test]
    fn garbage_bodies_are_malformed() {
        for body in ["not json", "42", r#"{"results":[{"data":17}]}"#, r#"{"data":""}"#] {
            assert!(
                matches!(
                    parse_search_body("A000108", body),
                    Err(OeisError::MalformedResponse { .. })
                ),
                "{body}"
            );
        }
    }

    #[test]
    fn fixture_fetch_reads_id_then_terms() {
        let dir = std::env::temp_dir().join(format!("polycat-oeis-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("A000108.txt"), "A000108\n1,1,2,5,14\n").unwrap();
        let record = fetch_sequence(
            "A000108",
            &FetchSource::Fixture { dir: dir.clone() },
        )
        .unwrap();
        assert_eq!(record.source, SequenceSource::Fixture);
        assert_eq!(record.terms.len(), 5);
        assert_eq!(record.terms[4], Int::from(14));

        let missing = fetch_sequence("A000109", &FetchSource::Fixture { dir: dir.clone() });
        assert!(matches!(missing, Err(OeisError::NotFound(_))));

        std::fs::write(dir.join("A000110.txt"), "A000999\n1,2\n").unwrap();
        let mismatched = fetch_sequence("A000110", &FetchSource::Fixture { dir: dir.clone() });
        assert!(matches!(mismatched, Err(OeisError::MalformedResponse { .. })));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn local_values_convert_exactly() {
        // A value too big for machine words still compares correctly.
        let big = nat("123456789012345678901234567890");
        let record = SequenceRecord {
            id: "A000000".to_owned(),
            terms: vec!["123456789012345678901234567890".parse().unwrap()],
            source: SequenceSource::Network,
        };
        let report = cross_check(&[big], &record, 0);
        assert_eq!(report.verdict, Verdict::Match);
    }
}
