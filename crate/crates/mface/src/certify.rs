//! Non-polytopality certificates for neighborly spheres.
//!
//! A polytope's vertex links are forced to be highly neighborly and stacked,
//! which pins their missing-face counts. A sphere whose vertex link breaks
//! the pinned count can therefore never be a polytope boundary. The verdicts
//! here are one-directional: a failed test certifies non-polytopality, a
//! passed test proves nothing.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::CertifyError;
use crate::homology::{verify_sphere, VerifyLevel};
use crate::num::binom;
use crate::profile::{face_profile, sphere_stacked_degree};

/// Which one-directional test fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateRule {
    /// A neighborly `(2k-1)`-sphere must have `m_k(link) = C(n-k-3, k-1)`
    /// at every vertex.
    NeighborlyLinkCount,
    /// With exactly one missing `(k-1)`-face, the links of its vertices must
    /// have `m_k(link) = C(n-k-3, k-1) - 1`.
    SingleMissingFaceLinkCount,
    /// Links of a neighborly sphere must have a missing face of dimension at
    /// least `floor(d/2)`; a link whose missing faces all sit in dimension
    /// `k - 1` rules polytopality out.
    LinkMissingDimension,
}

impl CertificateRule {
    pub fn id(&self) -> &'static str {
        match self {
            CertificateRule::NeighborlyLinkCount => "neighborly-link-count",
            CertificateRule::SingleMissingFaceLinkCount => "single-missing-face-link-count",
            CertificateRule::LinkMissingDimension => "link-missing-dimension",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotPolytopal,
    Inconclusive,
}

/// A machine-checkable verdict with the numbers needed to re-verify it.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub verdict: Verdict,
    pub rule: Option<CertificateRule>,
    pub witness_vertex: Option<u32>,
    /// The link quantity observed at the witness (a missing-face count, or
    /// for the dimension rule the uniform missing-face dimension).
    pub observed: Option<i128>,
    /// What polytopality would force instead.
    pub expected: Option<i128>,
    pub k: usize,
    pub n: usize,
    pub d: usize,
    /// Why no rule fired, when inconclusive.
    pub reason: String,
}

impl Certificate {
    fn not_polytopal(
        rule: CertificateRule,
        witness: u32,
        observed: i128,
        expected: i128,
        k: usize,
        n: usize,
        d: usize,
    ) -> Certificate {
        Certificate {
            verdict: Verdict::NotPolytopal,
            rule: Some(rule),
            witness_vertex: Some(witness),
            observed: Some(observed),
            expected: Some(expected),
            k,
            n,
            d,
            reason: String::new(),
        }
    }
}

fn m_count(complex: &SimplicialComplex, dim: usize) -> i128 {
    complex
        .missing_faces()
        .iter()
        .filter(|f| f.len() == dim + 1)
        .count() as i128
}

/// Runs the applicable link tests against a verified sphere. `k` defaults to
/// `floor(d/2)`; the count rules need `d = 2k`, the dimension rule accepts
/// `d` in `{2k, 2k+1}`.
pub fn nonpolytopality_certificate(
    complex: &SimplicialComplex,
    k_override: Option<usize>,
) -> Result<Certificate, CertifyError> {
    verify_sphere(complex, VerifyLevel::Quick).map_err(|e| CertifyError::NotASphere(e.to_string()))?;
    let d = (complex.dim() + 1) as usize;
    let k = k_override.unwrap_or(d / 2);
    if k < 2 || (d != 2 * k && d != 2 * k + 1) {
        return Err(CertifyError::BadDimension(complex.dim()));
    }
    let n = complex.vertex_count();
    if n < 2 * k + 2 {
        return Err(CertifyError::TooFewVertices { need: 2 * k + 2, got: n });
    }
    let profile = face_profile(complex);
    let mut reasons: Vec<String> = Vec::new();

    if d == 2 * k {
        if profile.neighborliness >= k {
            // Every vertex link of a polytopal neighborly (2k-1)-sphere has
            // exactly C(n-k-3, k-1) missing (k-1)... missing k-faces.
            let expected = binom(n as i64 - k as i64 - 3, k as i64 - 1);
            for v in complex.vertices().iter() {
                let link = complex.link(VertexSet::singleton(v)).expect("vertex link");
                let observed = m_count(&link, k);
                if observed != expected {
                    return Ok(Certificate::not_polytopal(
                        CertificateRule::NeighborlyLinkCount,
                        v,
                        observed,
                        expected,
                        k,
                        n,
                        d,
                    ));
                }
            }
            reasons.push("every vertex link has the forced middle missing-face count".into());
        } else {
            reasons.push(format!("not {k}-neighborly"));
        }

        let almost = profile.neighborliness >= k - 1
            && profile.f[k] == binom(n as i64, k as i64) - 1;
        if almost {
            let missing_km1 = complex
                .missing_faces()
                .into_iter()
                .find(|f| f.len() == k)
                .expect("exactly one missing face of the middle size");
            let expected = binom(n as i64 - k as i64 - 3, k as i64 - 1) - 1;
            for v in missing_km1.iter() {
                let link = complex.link(VertexSet::singleton(v)).expect("vertex link");
                let observed = m_count(&link, k);
                if observed != expected {
                    return Ok(Certificate::not_polytopal(
                        CertificateRule::SingleMissingFaceLinkCount,
                        v,
                        observed,
                        expected,
                        k,
                        n,
                        d,
                    ));
                }
            }
            reasons.push("the missing-face endpoints have the forced link count".into());
        }
    }

    if profile.neighborliness >= d / 2 {
        for v in complex.vertices().iter() {
            let link = complex.link(VertexSet::singleton(v)).expect("vertex link");
            let missing = link.missing_faces();
            if !missing.is_empty() && missing.iter().all(|f| f.len() == k) {
                return Ok(Certificate::not_polytopal(
                    CertificateRule::LinkMissingDimension,
                    v,
                    k as i128 - 1,
                    d as i128 / 2,
                    k,
                    n,
                    d,
                ));
            }
        }
        reasons.push("every vertex link has a missing face above the flag dimension".into());
    } else if d != 2 * k {
        reasons.push(format!("not {}-neighborly", d / 2));
    }

    Ok(Certificate {
        verdict: Verdict::Inconclusive,
        rule: None,
        witness_vertex: None,
        observed: None,
        expected: None,
        k,
        n,
        d,
        reason: reasons.join("; "),
    })
}

/// Per-vertex outcome of the polytopal-link consequences.
#[derive(Clone, Debug)]
pub struct VertexLinkReport {
    pub vertex: u32,
    /// Link is `(floor(d/2) - 1)`-neighborly on the complementary vertices.
    pub neighborly_ok: bool,
    /// Link satisfies the decidable consequences of being
    /// `(ceil(d/2) - 1)`-stacked.
    pub stacked_ok: bool,
    /// Missing-face counts of the link by dimension.
    pub link_m: Vec<i128>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct LinkCheckReport {
    pub per_vertex: Vec<VertexLinkReport>,
    pub all_pass: bool,
}

/// Checks the two link consequences of polytopality at every vertex of a
/// neighborly sphere: a polytopal sphere must pass for every vertex, so a
/// single failing row certifies non-polytopality.
pub fn lemma_link_check(complex: &SimplicialComplex) -> Result<LinkCheckReport, CertifyError> {
    verify_sphere(complex, VerifyLevel::Quick).map_err(|e| CertifyError::NotASphere(e.to_string()))?;
    let d = (complex.dim() + 1) as usize;
    let neighborly_target = d / 2 - 1;
    let stacked_target = d.div_ceil(2) - 1;
    let mut rows = Vec::new();
    for v in complex.vertices().iter() {
        let link = complex.link(VertexSet::singleton(v)).expect("vertex link");
        let link_profile = face_profile(&link);
        let neighborly_ok = link.vertices() == complex.vertices().remove(v)
            && link_profile.neighborliness >= neighborly_target;
        let degree = sphere_stacked_degree(&link_profile)
            .map_err(|e| CertifyError::NotASphere(e.to_string()))?;
        let (stacked_ok, detail) = match degree {
            Some(i) if i <= stacked_target => (true, format!("stackedness degree {i}")),
            other => {
                if d % 2 == 1 {
                    // Odd ambient dimension: being stacked_target-stacked
                    // forces a missing link face of dimension >= d/2.
                    let deep = link
                        .missing_faces()
                        .iter()
                        .any(|f| f.len() as i32 > (d / 2) as i32);
                    (deep, format!("degree {other:?}; deep missing face: {deep}"))
                } else {
                    (false, format!("degree {other:?} exceeds {stacked_target}"))
                }
            }
        };
        rows.push(VertexLinkReport {
            vertex: v,
            neighborly_ok,
            stacked_ok,
            link_m: link_profile.m.clone(),
            detail,
        });
    }
    let all_pass = rows.iter().all(|r| r.neighborly_ok && r.stacked_ok);
    Ok(LinkCheckReport { per_vertex: rows, all_pass })
}
