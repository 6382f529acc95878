//! Analysis reports: one structured bundle per complex, rendered either as
//! a human-readable table or as a flat key-value document with stable key
//! names (documented in the book's command-line chapter).

use std::fmt::Write as _;

use crate::bounds::{lower_bound_reports, upper_bound_reports, BoundReport};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::homology::{verify_sphere, VerifyLevel};
use crate::profile::{dehn_sommerville_check, face_profile, sphere_stacked_degree, FaceProfile};

/// Everything the analyzer derives about one complex.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub profile: FaceProfile,
    pub facet_count: usize,
    pub sphere_quick: Result<(), String>,
    pub sphere_full: Option<Result<(), String>>,
    pub dehn_sommerville: bool,
    /// Stackedness degree when the complex verifies as a sphere.
    pub stacked_degree: Option<Option<usize>>,
    pub bounds: Vec<BoundReport>,
    /// Per-vertex missing-face counts of the links, for sphere inputs.
    pub link_m: Vec<(u32, Vec<i128>)>,
}

/// Analyzes a complex; `full_homology` switches the sphere check to the
/// homology-manifold level, `with_links` adds the per-vertex link table.
pub fn analyze(complex: &SimplicialComplex, full_homology: bool, with_links: bool) -> Analysis {
    let profile = face_profile(complex);
    let quick = verify_sphere(complex, VerifyLevel::Quick).map_err(|e| e.to_string());
    let full = if full_homology {
        Some(verify_sphere(complex, VerifyLevel::Full).map_err(|e| e.to_string()))
    } else {
        None
    };
    let stacked = if quick.is_ok() {
        sphere_stacked_degree(&profile).ok()
    } else {
        None
    };
    let mut bounds = upper_bound_reports(&profile).unwrap_or_default();
    bounds.extend(lower_bound_reports(&profile));
    let link_m = if with_links && quick.is_ok() {
        complex
            .vertices()
            .iter()
            .map(|v| {
                let link = complex.link(VertexSet::singleton(v)).expect("vertex link");
                (v, face_profile(&link).m)
            })
            .collect()
    } else {
        Vec::new()
    };
    Analysis {
        profile,
        facet_count: complex.facets().len(),
        sphere_quick: quick,
        sphere_full: full,
        dehn_sommerville: dehn_sommerville_check(&face_profile(complex)),
        stacked_degree: stacked,
        bounds,
        link_m,
    }
}

fn vec_line(values: &[i128]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Human-readable rendering.
pub fn render_human(analysis: &Analysis) -> String {
    let p = &analysis.profile;
    let mut out = String::new();
    let _ = writeln!(out, "vertices        {}", p.n);
    let _ = writeln!(out, "dimension       {}", p.d as i64 - 1);
    let _ = writeln!(out, "facets          {}", analysis.facet_count);
    let _ = writeln!(out, "f-vector        {}", vec_line(&p.f));
    let _ = writeln!(out, "h-vector        {}", vec_line(&p.h));
    let _ = writeln!(out, "g-vector        {}", vec_line(&p.g));
    let _ = writeln!(out, "m-vector        {}", vec_line(&p.m));
    let _ = writeln!(out, "neighborliness  {}{}", p.neighborliness, if p.is_neighborly() { " (neighborly)" } else { "" });
    let _ = writeln!(out, "flag            {}", p.is_flag);
    let _ = writeln!(out, "eulerian        {}", p.is_eulerian);
    let _ = writeln!(out, "dehn-sommerville {}", analysis.dehn_sommerville);
    match &analysis.sphere_quick {
        Ok(()) => {
            let _ = writeln!(out, "sphere(quick)   pass");
        }
        Err(reason) => {
            let _ = writeln!(out, "sphere(quick)   FAIL: {reason}");
        }
    }
    if let Some(full) = &analysis.sphere_full {
        match full {
            Ok(()) => {
                let _ = writeln!(out, "sphere(full)    pass");
            }
            Err(reason) => {
                let _ = writeln!(out, "sphere(full)    FAIL: {reason}");
            }
        }
    }
    if let Some(degree) = &analysis.stacked_degree {
        match degree {
            Some(i) => {
                let _ = writeln!(out, "stackedness     {i}");
            }
            None => {
                let _ = writeln!(out, "stackedness     undetermined");
            }
        }
    }
    if !analysis.bounds.is_empty() {
        let _ = writeln!(out, "bounds (name kind bound observed slack ok)");
        for b in &analysis.bounds {
            let kind = match b.kind {
                crate::bounds::BoundKind::Upper => "upper",
                crate::bounds::BoundKind::Lower => "lower",
            };
            let _ = writeln!(
                out,
                "  {:<24} {:<5} {:>10} {:>8} {:>10} {}",
                b.name,
                kind,
                b.value.to_string(),
                b.observed.to_string(),
                b.slack.to_string(),
                if b.satisfied { "ok" } else { "VIOLATED" }
            );
        }
    }
    if !analysis.link_m.is_empty() {
        let _ = writeln!(out, "links (vertex: m-vector)");
        for (v, m) in &analysis.link_m {
            let _ = writeln!(out, "  {v:>3}: {}", vec_line(m));
        }
    }
    out
}

/// Flat key-value rendering; stable keys, one `key=value` per line.
pub fn render_machine(analysis: &Analysis) -> String {
    let p = &analysis.profile;
    let mut out = String::new();
    let _ = writeln!(out, "n={}", p.n);
    let _ = writeln!(out, "dim={}", p.d as i64 - 1);
    let _ = writeln!(out, "facets={}", analysis.facet_count);
    for (i, v) in p.f.iter().enumerate() {
        let _ = writeln!(out, "f.{}={v}", i as i64 - 1);
    }
    for (j, v) in p.h.iter().enumerate() {
        let _ = writeln!(out, "h.{j}={v}");
    }
    for (j, v) in p.g.iter().enumerate() {
        let _ = writeln!(out, "g.{j}={v}");
    }
    for (i, v) in p.m.iter().enumerate() {
        let _ = writeln!(out, "m.{}={v}", i + 1);
    }
    let _ = writeln!(out, "neighborliness={}", p.neighborliness);
    let _ = writeln!(out, "neighborly={}", p.is_neighborly());
    let _ = writeln!(out, "flag={}", p.is_flag);
    let _ = writeln!(out, "eulerian={}", p.is_eulerian);
    let _ = writeln!(out, "dehn_sommerville={}", analysis.dehn_sommerville);
    let _ = writeln!(out, "sphere.quick={}", if analysis.sphere_quick.is_ok() { "pass" } else { "fail" });
    if let Some(full) = &analysis.sphere_full {
        let _ = writeln!(out, "sphere.full={}", if full.is_ok() { "pass" } else { "fail" });
    }
    if let Some(degree) = &analysis.stacked_degree {
        match degree {
            Some(i) => {
                let _ = writeln!(out, "stacked={i}");
            }
            None => {
                let _ = writeln!(out, "stacked=none");
            }
        }
    }
    for b in &analysis.bounds {
        let _ = writeln!(out, "bound.{}.value={}", b.name, b.value);
        let _ = writeln!(out, "bound.{}.observed={}", b.name, b.observed);
        let _ = writeln!(out, "bound.{}.slack={}", b.name, b.slack);
        let _ = writeln!(out, "bound.{}.ok={}", b.name, b.satisfied);
    }
    for (v, m) in &analysis.link_m {
        let values: Vec<String> = m.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "link.{v}.m={}", values.join(","));
    }
    out
}
