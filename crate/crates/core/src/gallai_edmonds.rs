//! Gallai-Edmonds decomposition `(D, A, C)` and special vertices.
//!
//! `D` is computed from its definition: `v ∈ D` iff `μ(h - v) = μ(h)`. Each
//! deletion is evaluated from a fixed maximum matching `M`: if `v` is exposed
//! the answer is immediate, otherwise `M` minus the edge at `v` is one short
//! in `h - v` and any augmenting path must start at the old mate of `v`, so a
//! single augmenting search decides it.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::matching::{maximum_matching, AugmentingSearch, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VertexClass {
    D,
    A,
    C,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeError {
    #[error("component {component} of H[D] has {count} special vertices (expected exactly one)")]
    SpecialCount { component: usize, count: usize },
    #[error("matching is not a valid matching of the decomposed graph")]
    InvalidMatching,
    #[error("specials have not been marked")]
    SpecialsMissing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    class: Vec<VertexClass>,
    components: Vec<Vec<usize>>,
    component_of: Vec<Option<usize>>,
    specials: Option<Vec<usize>>,
}

/// `(D, A, C)` of `h` plus the components of `h[D]`, without specials.
pub fn decompose(h: &Graph) -> GallaiEdmonds {
    let m = maximum_matching(h);
    let in_d: Vec<bool> = (0..h.vertex_count())
        .into_par_iter()
        .map_init(
            || AugmentingSearch::new(h),
            |search, v| match m.mate(v) {
                None => true,
                Some(u) => {
                    let mut reduced = m.clone();
                    reduced.unmatch(v);
                    search.exclude(Some(v));
                    search.try_augment(&mut reduced, u)
                }
            },
        )
        .collect();
    GallaiEdmonds::from_d_membership(h, &in_d)
}

/// Reference version of [`decompose`] that recomputes a maximum matching of
/// `h - v` from scratch for every vertex.
pub fn decompose_by_deletion(h: &Graph) -> GallaiEdmonds {
    let mu = maximum_matching(h).size();
    let in_d: Vec<bool> = (0..h.vertex_count())
        .into_par_iter()
        .map(|v| maximum_matching(&h.without_vertex(v)).size() == mu)
        .collect();
    GallaiEdmonds::from_d_membership(h, &in_d)
}

impl GallaiEdmonds {
    /// Builds the partition from a `D` indicator: `A = N(D) \ D`, `C` the rest.
    pub fn from_d_membership(h: &Graph, in_d: &[bool]) -> Self {
        let n = h.vertex_count();
        let class: Vec<VertexClass> = (0..n)
            .map(|v| {
                if in_d[v] {
                    VertexClass::D
                } else if h.neighbors(v).iter().any(|&w| in_d[w]) {
                    VertexClass::A
                } else {
                    VertexClass::C
                }
            })
            .collect();
        let d: Vec<usize> = (0..n).filter(|&v| in_d[v]).collect();
        let components = h.components_within(&d);
        let mut component_of = vec![None; n];
        for (i, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v] = Some(i);
            }
        }
        GallaiEdmonds {
            class,
            components,
            component_of,
            specials: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.class.len()
    }

    pub fn class(&self, v: usize) -> VertexClass {
        self.class[v]
    }

    pub fn in_d(&self, v: usize) -> bool {
        self.class[v] == VertexClass::D
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.class[v] == VertexClass::A
    }

    pub fn in_c(&self, v: usize) -> bool {
        self.class[v] == VertexClass::C
    }

    fn members(&self, c: VertexClass) -> Vec<usize> {
        (0..self.class.len())
            .filter(|&v| self.class[v] == c)
            .collect()
    }

    pub fn d_set(&self) -> Vec<usize> {
        self.members(VertexClass::D)
    }

    pub fn a_set(&self) -> Vec<usize> {
        self.members(VertexClass::A)
    }

    pub fn c_set(&self) -> Vec<usize> {
        self.members(VertexClass::C)
    }

    /// Connected components of `h[D]`, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component_of[v]
    }

    /// Special vertex of each component, indexed like [`Self::components`].
    pub fn specials(&self) -> Option<&[usize]> {
        self.specials.as_deref()
    }

    pub fn special_of(&self, component: usize) -> Option<usize> {
        self.specials.as_ref().map(|s| s[component])
    }

    pub fn is_special(&self, v: usize) -> bool {
        match (self.component_of[v], &self.specials) {
            (Some(c), Some(s)) => s[c] == v,
            _ => false,
        }
    }

    /// D-vertices that are exposed by `m` or matched into `A`, grouped by component.
    pub fn special_candidates(&self, m: &Matching) -> Vec<Vec<usize>> {
        self.components
            .iter()
            .map(|comp| {
                comp.iter()
                    .copied()
                    .filter(|&v| m.mate(v).is_none_or(|u| self.in_a(u)))
                    .collect()
            })
            .collect()
    }

    /// Marks the special vertex of every component of `h[D]` relative to the
    /// maximum matching `m`. Fails unless each component has exactly one.
    pub fn mark_specials(mut self, h: &Graph, m: &Matching) -> Result<Self, GeError> {
        if !m.is_valid_in(h) {
            return Err(GeError::InvalidMatching);
        }
        let mut specials = Vec::with_capacity(self.components.len());
        for (component, cands) in self.special_candidates(m).into_iter().enumerate() {
            if cands.len() != 1 {
                return Err(GeError::SpecialCount {
                    component,
                    count: cands.len(),
                });
            }
            specials.push(cands[0]);
        }
        self.specials = Some(specials);
        Ok(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeReport {
    pub clauses: Vec<ClauseResult>,
    pub odd_components: bool,
}

impl GeReport {
    pub fn all_pass(&self) -> bool {
        self.odd_components && self.clauses.iter().all(|c| c.pass)
    }
}

/// Checks the matching-structure clauses of the decomposition against `m`:
/// C is matched within C, A is matched into D, and each component of `h[D]`
/// has exactly one vertex that is exposed or matched into A, with all others
/// matched inside the component.
pub fn verify_ge_properties(ge: &GallaiEdmonds, h: &Graph, m: &Matching) -> GeReport {
    let n = h.vertex_count();
    debug_assert_eq!(ge.vertex_count(), n);

    let c_fail = (0..n)
        .filter(|&v| ge.in_c(v))
        .find(|&v| !m.mate(v).is_some_and(|u| ge.in_c(u)));
    let a_fail = (0..n)
        .filter(|&v| ge.in_a(v))
        .find(|&v| !m.mate(v).is_some_and(|u| ge.in_d(u)));
    let mut d_detail = None;
    for (i, comp) in ge.components().iter().enumerate() {
        let mut outward = 0;
        for &v in comp {
            match m.mate(v) {
                None => outward += 1,
                Some(u) if ge.in_a(u) => outward += 1,
                Some(u) if ge.component_of(u) == Some(i) => {}
                Some(u) => {
                    d_detail = Some(format!(
                        "vertex {v} of component {i} matched to {u} outside it"
                    ));
                }
            }
        }
        if outward != 1 && d_detail.is_none() {
            d_detail = Some(format!(
                "component {i} has {outward} vertices exposed or matched into A"
            ));
        }
        if d_detail.is_some() {
            break;
        }
    }

    GeReport {
        clauses: vec![
            ClauseResult {
                clause: "c-matched-within-c",
                pass: c_fail.is_none(),
                detail: c_fail.map(|v| format!("vertex {v} of C is not matched into C")),
            },
            ClauseResult {
                clause: "a-matched-into-d",
                pass: a_fail.is_none(),
                detail: a_fail.map(|v| format!("vertex {v} of A is not matched into D")),
            },
            ClauseResult {
                clause: "d-component-near-perfect",
                pass: d_detail.is_none(),
                detail: d_detail,
            },
        ],
        odd_components: ge.components().iter().all(|c| c.len() % 2 == 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, GeneratorConfig};
    use crate::graph::Edge;

    fn star() -> Graph {
        generate(&GeneratorConfig::new(Family::Star, 4)).unwrap()
    }

    fn k3() -> Graph {
        generate(&GeneratorConfig::new(Family::Complete, 3)).unwrap()
    }

    #[test]
    fn triangle_is_all_d() {
        let ge = decompose(&k3());
        assert_eq!(ge.d_set(), vec![0, 1, 2]);
        assert!(ge.a_set().is_empty() && ge.c_set().is_empty());
        assert_eq!(ge.components(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn star_center_is_a() {
        let ge = decompose(&star());
        assert_eq!(ge.d_set(), vec![1, 2, 3]);
        assert_eq!(ge.a_set(), vec![0]);
        assert!(ge.c_set().is_empty());
        assert_eq!(ge.components().len(), 3);
    }

    #[test]
    fn path_with_perfect_matching_is_all_c() {
        let p = generate(&GeneratorConfig::new(Family::Path, 4)).unwrap();
        let ge = decompose(&p);
        assert!(ge.d_set().is_empty() && ge.a_set().is_empty());
        assert_eq!(ge.c_set(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn empty_graph_is_all_d() {
        let ge = decompose(&Graph::empty(4));
        assert_eq!(ge.d_set(), vec![0, 1, 2, 3]);
        assert_eq!(ge.components().len(), 4);
    }

    #[test]
    fn specials_on_star() {
        let h = star();
        let m = Matching::from_edges(&h, [Edge::new(0, 1)]).unwrap();
        let ge = decompose(&h).mark_specials(&h, &m).unwrap();
        assert_eq!(ge.specials().unwrap(), &[1, 2, 3]);
        let report = verify_ge_properties(&ge, &h, &m);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn specials_on_triangle() {
        let h = k3();
        let m = Matching::from_edges(&h, [Edge::new(0, 1)]).unwrap();
        let ge = decompose(&h).mark_specials(&h, &m).unwrap();
        assert_eq!(ge.specials().unwrap(), &[2]);
        assert!(ge.is_special(2) && !ge.is_special(0));
        assert!(verify_ge_properties(&ge, &h, &m).all_pass());
    }

    #[test]
    fn perfect_matching_has_no_specials() {
        let h = Graph::from_edges(2, [(0, 1)]).unwrap();
        let m = maximum_matching(&h);
        let ge = decompose(&h).mark_specials(&h, &m).unwrap();
        assert!(ge.specials().unwrap().is_empty());
    }

    #[test]
    fn non_maximum_matching_is_caught() {
        let h = k3();
        let m = Matching::empty(3);
        let report = verify_ge_properties(&decompose(&h), &h, &m);
        assert!(report.clauses[0].pass && report.clauses[1].pass);
        assert!(!report.clauses[2].pass);
        assert_eq!(
            decompose(&h).mark_specials(&h, &m),
            Err(GeError::SpecialCount {
                component: 0,
                count: 3
            })
        );
    }

    #[test]
    fn fast_and_reference_agree() {
        for seed in 0..30 {
            let g = generate(&GeneratorConfig::gnm(25, 30, seed)).unwrap();
            assert_eq!(decompose(&g), decompose_by_deletion(&g), "seed {seed}");
        }
    }
}
