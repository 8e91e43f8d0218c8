// Witness search for augmenting paths.
//
// An edge of an augmenting path is suitable when it is not in H and neither
// endpoint lies in A. A path is T1 when one suitable edge joins two distinct
// components of H[D] whose special vertices both lie on the path, and T2
// when it has two vertex-disjoint suitable edges. Every augmenting path is
// one or the other; T1 wins ties.

use std::collections::HashSet;

use serde::Serialize;

use super::ProofError;
use crate::gallai_edmonds::GallaiEdmonds;
use crate::graph::{Edge, Graph};
use crate::io::{write_graph, write_matching};
use crate::matching::{decompose_union, AlternatingComponent, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PathKind {
    T1,
    T2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// `components` and `specials` are listed in the order of the edge's
    /// endpoints `(edge.u, edge.v)`.
    T1 {
        edge: Edge,
        components: (usize, usize),
        specials: (usize, usize),
    },
    T2 {
        edges: (Edge, Edge),
    },
}

impl Witness {
    pub fn kind(&self) -> PathKind {
        match self {
            Witness::T1 { .. } => PathKind::T1,
            Witness::T2 { .. } => PathKind::T2,
        }
    }

    /// Endpoints contributed to the auxiliary graph: two for T1, four for T2.
    pub fn endpoints(&self) -> Vec<usize> {
        match self {
            Witness::T1 { edge, .. } => vec![edge.u, edge.v],
            Witness::T2 { edges: (a, b) } => vec![a.u, a.v, b.u, b.v],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathClassification {
    pub path: AlternatingComponent,
    pub witness: Witness,
}

impl PathClassification {
    pub fn kind(&self) -> PathKind {
        self.witness.kind()
    }
}

fn is_suitable(h: &Graph, ge: &GallaiEdmonds, e: Edge) -> bool {
    !h.contains(e) && !ge.in_a(e.u) && !ge.in_a(e.v)
}

fn search(h: &Graph, ge: &GallaiEdmonds, path: &AlternatingComponent) -> Option<Witness> {
    let on_path: HashSet<usize> = path.vertices.iter().copied().collect();
    let mut suitable: Vec<Edge> = path
        .edge_list()
        .filter(|&e| is_suitable(h, ge, e))
        .collect();
    suitable.sort_unstable();

    let t1 = suitable.iter().find_map(|&e| {
        let cu = ge.component_of(e.u)?;
        let cv = ge.component_of(e.v)?;
        if cu == cv {
            return None;
        }
        let su = ge.special_of(cu)?;
        let sv = ge.special_of(cv)?;
        (on_path.contains(&su) && on_path.contains(&sv)).then_some(Witness::T1 {
            edge: e,
            components: (cu, cv),
            specials: (su, sv),
        })
    });
    if t1.is_some() {
        return t1;
    }
    for (i, &a) in suitable.iter().enumerate() {
        if let Some(&b) = suitable[i + 1..].iter().find(|&&b| !a.shares_endpoint(b)) {
            return Some(Witness::T2 { edges: (a, b) });
        }
    }
    None
}

fn dump(g: &Graph, h: &Graph, m: &Matching, mstar: &Matching) -> String {
    format!(
        "# G\n{}# H\n{}# M\n{}# M*\n{}",
        write_graph(g),
        write_graph(h),
        write_matching(m),
        write_matching(mstar)
    )
}

/// Finds a T1 or T2 witness for every augmenting path of `m ∪ mstar`.
///
/// `ge` must be the decomposition of `h` with specials marked for `m`; `m`
/// must be maximum in `h` and `mstar` maximum in `g`. Each witness is
/// re-checked with [`validate_witness`]. A path without a witness aborts
/// with an instance dump.
pub fn classify_augmenting_paths(
    g: &Graph,
    h: &Graph,
    ge: &GallaiEdmonds,
    m: &Matching,
    mstar: &Matching,
) -> Result<Vec<PathClassification>, ProofError> {
    if ge.specials().is_none() {
        return Err(crate::gallai_edmonds::GeError::SpecialsMissing.into());
    }
    let mut out = Vec::new();
    for path in decompose_union(m, mstar)? {
        if !path.is_augmenting {
            continue;
        }
        let Some(witness) = search(h, ge, &path) else {
            return Err(ProofError::Unclassifiable {
                path: path.vertices.clone(),
                dump: dump(g, h, m, mstar),
            });
        };
        if let Err(reason) = validate_witness(h, ge, &path, &witness) {
            return Err(ProofError::InvalidWitness {
                path: path.vertices.clone(),
                reason,
            });
        }
        out.push(PathClassification { path, witness });
    }
    Ok(out)
}

/// Checks a witness directly against its definition, without the search's
/// helpers: membership of each edge on the path, absence from `h`, the
/// vertex classes of the endpoints, and for T1 the components and specials.
pub fn validate_witness(
    h: &Graph,
    ge: &GallaiEdmonds,
    path: &AlternatingComponent,
    witness: &Witness,
) -> Result<(), String> {
    let a_set = ge.a_set();
    let edge_ok = |e: &Edge| -> Result<(), String> {
        if !path.edges.iter().any(|(pe, _)| pe == e) {
            return Err(format!("{e} is not on the path"));
        }
        if h.has_edge(e.u, e.v) {
            return Err(format!("{e} belongs to H"));
        }
        if a_set.binary_search(&e.u).is_ok() || a_set.binary_search(&e.v).is_ok() {
            return Err(format!("{e} has an endpoint in A"));
        }
        Ok(())
    };
    match witness {
        Witness::T1 {
            edge,
            components,
            specials,
        } => {
            edge_ok(edge)?;
            if components.0 == components.1 {
                return Err(format!("{edge} stays inside one component"));
            }
            let comps = ge.components();
            for (x, c, s) in [
                (edge.u, components.0, specials.0),
                (edge.v, components.1, specials.1),
            ] {
                let Some(comp) = comps.get(c) else {
                    return Err(format!("no component {c}"));
                };
                if !comp.contains(&x) {
                    return Err(format!("vertex {x} is not in component {c}"));
                }
                if ge.specials().and_then(|sp| sp.get(c)) != Some(&s) || !comp.contains(&s) {
                    return Err(format!("{s} is not the special vertex of component {c}"));
                }
                if !path.vertices.contains(&s) {
                    return Err(format!("special vertex {s} is not on the path"));
                }
            }
            Ok(())
        }
        Witness::T2 { edges: (a, b) } => {
            edge_ok(a)?;
            edge_ok(b)?;
            if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
                return Err(format!("{a} and {b} share an endpoint"));
            }
            Ok(())
        }
    }
}
