//! Text formats: the facet-list document (one facet per line, `#` comments)
//! and the `name=[[...],[...]]` triangulation-list format, as published on
//! the manifold census pages.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::FormatError;

/// Parses a facet-list document: comment lines start with `#`, every other
/// nonempty line is one facet as space-separated positive integers.
pub fn read_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut facet = Vec::new();
        for token in line.split_whitespace() {
            let v: u32 = token.parse().map_err(|_| FormatError::Parse {
                line: idx + 1,
                msg: format!("expected a positive integer, got {token:?}"),
            })?;
            if v == 0 {
                return Err(FormatError::Parse { line: idx + 1, msg: "vertex labels start at 1".into() });
            }
            facet.push(v);
        }
        facets.push(VertexSet::checked(facet).map_err(|e| FormatError::Parse { line: idx + 1, msg: e.to_string() })?);
    }
    Ok(SimplicialComplex::from_facets(facets)?)
}

/// Writes the facet-list document: facets sorted lexicographically with
/// sorted vertices, so write → read → write round-trips byte for byte.
pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in complex.facets() {
        let labels: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a `name=[[v,...],[v,...],...]` document with arbitrary whitespace.
/// Anything else is rejected loudly; there is no format guessing.
pub fn read_lutz(text: &str) -> Result<(String, SimplicialComplex), FormatError> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some((name, body)) = cleaned.split_once('=') else {
        return Err(FormatError::BadShape("missing `name=` prefix".into()));
    };
    if name.is_empty() {
        return Err(FormatError::BadShape("empty name before `=`".into()));
    }
    let body = body.strip_suffix(';').unwrap_or(body);
    let inner = body
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| FormatError::BadShape("body must be a bracketed list of bracketed lists".into()))?;
    let mut facets = Vec::new();
    for chunk in inner.split("],[") {
        if chunk.is_empty() {
            return Err(FormatError::BadShape("empty facet".into()));
        }
        let mut facet = Vec::new();
        for token in chunk.split(',') {
            let v: u32 = token
                .parse()
                .map_err(|_| FormatError::BadShape(format!("bad vertex label {token:?}")))?;
            facet.push(v);
        }
        facets.push(VertexSet::checked(facet).map_err(|e| FormatError::BadShape(e.to_string()))?);
    }
    Ok((name.to_string(), SimplicialComplex::from_facets(facets)?))
}

/// True when the document looks like the `name=[[...]]` format rather than a
/// facet list; the two grammars are disjoint.
pub fn looks_like_lutz(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.contains('='))
}
