//! Canonical forms and isomorphism testing for small complexes, by color
//! refinement on the vertex-facet incidence followed by backtracking over
//! the refinement-compatible vertex orders. Worst-case cost is irrelevant at
//! this crate's scale (at most a few dozen vertices).

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
#[cfg(test)]
use crate::complex::VertexSet;

/// The facet list after relabeling by the canonical vertex order: equal
/// canonical forms mean isomorphic complexes.
pub type CanonicalForm = Vec<Vec<usize>>;

fn refine(vertices: &[u32], facets: &[Vec<usize>], colors: &mut Vec<u64>) {
    loop {
        // Facet signature: sorted vertex colors; vertex signature: old color
        // plus sorted multiset of its facets' signatures.
        let facet_sig: Vec<Vec<u64>> = facets
            .iter()
            .map(|f| {
                let mut sig: Vec<u64> = f.iter().map(|&v| colors[v]).collect();
                sig.sort_unstable();
                sig
            })
            .collect();
        let mut vertex_sig: Vec<(u64, Vec<&Vec<u64>>)> = (0..vertices.len())
            .map(|v| {
                let mut incident: Vec<&Vec<u64>> = facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.contains(&v))
                    .map(|(i, _)| &facet_sig[i])
                    .collect();
                incident.sort();
                (colors[v], incident)
            })
            .collect();
        let mut palette: HashMap<(u64, Vec<&Vec<u64>>), u64> = HashMap::new();
        let mut sorted: Vec<&(u64, Vec<&Vec<u64>>)> = vertex_sig.iter().collect();
        sorted.sort();
        for sig in sorted {
            let next = palette.len() as u64;
            palette.entry(sig.clone()).or_insert(next);
        }
        let new_colors: Vec<u64> = vertex_sig.drain(..).map(|sig| palette[&sig]).collect();
        if new_colors == *colors {
            return;
        }
        *colors = new_colors;
    }
}

fn search(
    vertices: &[u32],
    facets: &[Vec<usize>],
    colors: Vec<u64>,
    best: &mut Option<CanonicalForm>,
    leaves: &mut usize,
) {
    // A discrete coloring orders the vertices; read off the relabeled form.
    let n = vertices.len();
    let mut classes: HashMap<u64, Vec<usize>> = HashMap::new();
    for (v, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    if classes.len() == n {
        *leaves += 1;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| colors[v]);
        let mut position = vec![0usize; n];
        for (rank, &v) in order.iter().enumerate() {
            position[v] = rank;
        }
        let mut form: CanonicalForm = facets
            .iter()
            .map(|f| {
                let mut relabeled: Vec<usize> = f.iter().map(|&v| position[v]).collect();
                relabeled.sort_unstable();
                relabeled
            })
            .collect();
        form.sort();
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    }
    // Individualize each vertex of the smallest non-singleton class.
    let target = classes
        .iter()
        .filter(|(_, vs)| vs.len() > 1)
        .min_by_key(|(c, vs)| (vs.len(), **c))
        .map(|(_, vs)| vs.clone())
        .expect("non-discrete coloring has a splittable class");
    for v in target {
        let mut next = colors.clone();
        next[v] = u64::MAX;
        refine(vertices, facets, &mut next);
        search(vertices, facets, next, best, leaves);
    }
}

/// Canonical form of a complex: minimal relabeled facet list over all
/// refinement-compatible vertex orders.
pub fn canonical_form(complex: &SimplicialComplex) -> CanonicalForm {
    let vertices = complex.vertices().to_vec();
    let index: HashMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let facets: Vec<Vec<usize>> = complex
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| index[&v]).collect())
        .collect();
    let mut colors = vec![0u64; vertices.len()];
    refine(&vertices, &facets, &mut colors);
    let mut best = None;
    let mut leaves = 0;
    search(&vertices, &facets, colors, &mut best, &mut leaves);
    best.expect("at least one leaf")
}

/// True iff the complexes differ only by a vertex relabeling.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.dim() != b.dim()
        || a.facets().len() != b.facets().len()
        || a.face_counts() != b.face_counts()
    {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// An explicit isomorphism as a label map `V(a) -> V(b)`, when one exists.
pub fn isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Vec<(u32, u32)>> {
    if !are_isomorphic(a, b) {
        return None;
    }
    // Recover the map by matching canonical positions on both sides.
    let order_of = |k: &SimplicialComplex| -> Vec<u32> {
        let vertices = k.vertices().to_vec();
        let form = canonical_form(k);
        // Re-run the search to find an order achieving the canonical form.
        let index: HashMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let facets: Vec<Vec<usize>> = k
            .facets()
            .iter()
            .map(|f| f.iter().map(|v| index[&v]).collect())
            .collect();
        let mut result: Option<Vec<u32>> = None;
        permuted_orders(&vertices, &facets, &form, &mut result);
        result.expect("canonical order exists")
    };
    let oa = order_of(a);
    let ob = order_of(b);
    Some(oa.into_iter().zip(ob).collect())
}

fn permuted_orders(
    vertices: &[u32],
    facets: &[Vec<usize>],
    form: &CanonicalForm,
    result: &mut Option<Vec<u32>>,
) {
    let n = vertices.len();
    let mut colors = vec![0u64; n];
    refine(vertices, facets, &mut colors);
    fn rec(
        vertices: &[u32],
        facets: &[Vec<usize>],
        colors: Vec<u64>,
        form: &CanonicalForm,
        result: &mut Option<Vec<u32>>,
    ) {
        if result.is_some() {
            return;
        }
        let n = vertices.len();
        let mut classes: HashMap<u64, Vec<usize>> = HashMap::new();
        for (v, &c) in colors.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        if classes.len() == n {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| colors[v]);
            let mut position = vec![0usize; n];
            for (rank, &v) in order.iter().enumerate() {
                position[v] = rank;
            }
            let mut candidate: CanonicalForm = facets
                .iter()
                .map(|f| {
                    let mut relabeled: Vec<usize> = f.iter().map(|&v| position[v]).collect();
                    relabeled.sort_unstable();
                    relabeled
                })
                .collect();
            candidate.sort();
            if candidate == *form {
                *result = Some(order.iter().map(|&v| vertices[v]).collect());
            }
            return;
        }
        let target = classes
            .iter()
            .filter(|(_, vs)| vs.len() > 1)
            .min_by_key(|(c, vs)| (vs.len(), **c))
            .map(|(_, vs)| vs.clone())
            .expect("splittable class");
        for v in target {
            let mut next = colors.clone();
            next[v] = u64::MAX;
            refine(vertices, facets, &mut next);
            rec(vertices, facets, next, form, result);
        }
    }
    rec(vertices, facets, colors, form, result);
}
