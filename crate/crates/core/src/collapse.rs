//! d-collapsibility: elementary collapsings, the exhaustive backtracking
//! decision with a greedy fast path, and replayable collapse certificates.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bits::VSet;
use crate::complex::{subsets_of_size, Face, SimplicialComplex};
use crate::{Error, Guards, Result};

/// One elementary d-collapsing: a face of dimension < d lying in a unique
/// facet, together with that facet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub free_face: Face,
    pub unique_facet: Face,
}

/// A full collapse certificate: replaying the steps from the start complex
/// removes the interval [free_face, unique_facet] each time and ends empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseSequence {
    pub d: usize,
    pub steps: Vec<CollapseStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CollapseMode {
    Greedy,
    Exhaustive,
}

/// Verdict of the collapsibility search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Collapsibility {
    Yes(CollapseSequence),
    /// `authoritative` is true only when the exhaustive search completed;
    /// the greedy path reports a heuristic No.
    No { authoritative: bool },
    GuardExceeded,
}

/// Removes the face `f` (of dimension < d, contained in a unique facet)
/// together with everything above it.
pub fn elementary_collapse(k: &SimplicialComplex, f: &Face, d: usize) -> Result<SimplicialComplex> {
    assert!(d >= 1, "collapsing is defined for d >= 1");
    if f.is_empty() || !k.contains_face(f) {
        return Err(Error::NotAFace(f.to_string()));
    }
    if f.len() > d {
        return Err(Error::DimTooBig {
            dim: f.len() - 1,
            d,
        });
    }
    let containing: Vec<&Face> = k.facets().iter().filter(|j| f.is_subset(j)).collect();
    if containing.len() != 1 {
        return Err(Error::NotFree(f.to_string(), containing.len()));
    }
    let unique = containing[0];
    let mut candidates: Vec<Face> = k
        .facets()
        .iter()
        .filter(|j| *j != unique)
        .cloned()
        .collect();
    for v in f.iter() {
        let reduced = Face::new(unique.iter().filter(|w| *w != v).cloned());
        if !reduced.is_empty() {
            candidates.push(reduced);
        }
    }
    if candidates.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    SimplicialComplex::build(candidates)
}

/// Decides d-collapsibility.
///
/// Exhaustive mode backtracks over all elementary d-collapsings, memoizing
/// dead intermediate complexes, and its No is authoritative; the order of
/// collapses can matter, so the memoization is essential. Free faces are
/// tried smallest dimension first, then lexicographically, and the first
/// sequence found (the canonically smallest one) is returned.
pub fn is_d_collapsible(
    k: &SimplicialComplex,
    d: usize,
    mode: CollapseMode,
    guards: &Guards,
) -> Result<Collapsibility> {
    assert!(d >= 1, "collapsing is defined for d >= 1");
    if k.face_count(guards).is_err() {
        return Err(Error::SizeGuard(format!(
            "complex exceeds {} faces",
            guards.max_faces
        )));
    }
    match mode {
        CollapseMode::Greedy => greedy(k, d, guards),
        CollapseMode::Exhaustive => {
            let mut ctx = SearchCtx {
                original: k,
                d,
                dead: HashSet::new(),
                visited: 0,
                budget: guards.collapse_states,
            };
            match ctx.search(k.facets().to_vec()) {
                SearchOutcome::Found(steps) => Ok(Collapsibility::Yes(CollapseSequence { d, steps })),
                SearchOutcome::Dead => Ok(Collapsibility::No {
                    authoritative: true,
                }),
                SearchOutcome::OutOfBudget => Ok(Collapsibility::GuardExceeded),
            }
        }
    }
}

fn greedy(k: &SimplicialComplex, d: usize, guards: &Guards) -> Result<Collapsibility> {
    let mut current = k.clone();
    let mut steps = Vec::new();
    let mut moves = 0usize;
    while !current.is_empty() {
        if moves > guards.collapse_states {
            return Ok(Collapsibility::GuardExceeded);
        }
        let Some((f, unique)) = free_faces(&current, d).into_iter().next() else {
            return Ok(Collapsibility::No {
                authoritative: false,
            });
        };
        current = elementary_collapse(&current, &f, d)?;
        steps.push(CollapseStep {
            free_face: f,
            unique_facet: unique,
        });
        moves += 1;
    }
    Ok(Collapsibility::Yes(CollapseSequence { d, steps }))
}

/// All free faces of dimension < d with their unique facet, in canonical
/// order (dimension, then lexicographic).
fn free_faces(k: &SimplicialComplex, d: usize) -> Vec<(Face, Face)> {
    let mut out: Vec<(Face, Face)> = Vec::new();
    let mut seen: HashSet<Face> = HashSet::new();
    for j in k.facets() {
        for size in 1..=d.min(j.len()) {
            for f in subsets_of_size(j, size) {
                if !seen.insert(f.clone()) {
                    continue;
                }
                let mut containing = k.facets().iter().filter(|g| f.is_subset(g));
                let first = containing.next();
                if containing.next().is_none() {
                    out.push((f, first.expect("subset of a facet").clone()));
                }
            }
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out
}

enum SearchOutcome {
    Found(Vec<CollapseStep>),
    Dead,
    OutOfBudget,
}

struct SearchCtx<'a> {
    original: &'a SimplicialComplex,
    d: usize,
    dead: HashSet<Vec<VSet>>,
    visited: usize,
    budget: usize,
}

impl SearchCtx<'_> {
    fn key(&self, facets: &[Face]) -> Vec<VSet> {
        let ix = self.original.indexed();
        facets
            .iter()
            .map(|f| ix.face_set(f).expect("facets use original vertices"))
            .collect()
    }

    fn search(&mut self, facets: Vec<Face>) -> SearchOutcome {
        if facets.is_empty() {
            return SearchOutcome::Found(Vec::new());
        }
        let key = self.key(&facets);
        if self.dead.contains(&key) {
            return SearchOutcome::Dead;
        }
        self.visited += 1;
        if self.visited > self.budget {
            return SearchOutcome::OutOfBudget;
        }
        let current = SimplicialComplex::build(facets).expect("nonempty");
        for (f, unique) in free_faces(&current, self.d) {
            let next = elementary_collapse(&current, &f, self.d).expect("free face");
            match self.search(next.facets().to_vec()) {
                SearchOutcome::Found(mut steps) => {
                    steps.insert(
                        0,
                        CollapseStep {
                            free_face: f,
                            unique_facet: unique,
                        },
                    );
                    return SearchOutcome::Found(steps);
                }
                SearchOutcome::Dead => continue,
                SearchOutcome::OutOfBudget => return SearchOutcome::OutOfBudget,
            }
        }
        self.dead.insert(key);
        SearchOutcome::Dead
    }
}

/// Replays a collapse sequence from `k`, checking every precondition at
/// replay time; true iff all steps are legal and the final complex is empty.
pub fn verify_collapse(k: &SimplicialComplex, seq: &CollapseSequence) -> bool {
    if seq.d == 0 {
        return false;
    }
    let mut current = k.clone();
    for step in &seq.steps {
        let containing: Vec<&Face> = current
            .facets()
            .iter()
            .filter(|j| step.free_face.is_subset(j))
            .collect();
        if containing.len() != 1 || containing[0] != &step.unique_facet {
            return false;
        }
        match elementary_collapse(&current, &step.free_face, seq.d) {
            Ok(next) => current = next,
            Err(_) => return false,
        }
    }
    current.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn face(labels: &[&str]) -> Face {
        Face::of(labels).unwrap()
    }

    #[test]
    fn collapse_fig2_at_leaf() {
        let k = fixtures::fig2();
        let next = elementary_collapse(&k, &face(&["4"]), 1).unwrap();
        assert_eq!(
            next.facets(),
            &[face(&["1", "2", "3"]), face(&["2", "5"]), face(&["3", "6"])]
        );
    }

    #[test]
    fn collapse_simplex_at_vertex() {
        let k = fixtures::simplex(2);
        let next = elementary_collapse(&k, &face(&["1"]), 1).unwrap();
        assert_eq!(next.facets(), &[face(&["2", "3"])]);
    }

    #[test]
    fn vertex_in_two_facets_is_not_free() {
        let k = fixtures::boundary_triangle();
        assert!(matches!(
            elementary_collapse(&k, &face(&["1"]), 1),
            Err(Error::NotFree(_, 2))
        ));
    }

    #[test]
    fn dimension_bound_enforced() {
        let k = fixtures::fig2();
        assert!(matches!(
            elementary_collapse(&k, &face(&["1", "4"]), 1),
            Err(Error::DimTooBig { .. })
        ));
    }

    #[test]
    fn fig2_is_1_collapsible() {
        let g = Guards::default();
        let k = fixtures::fig2();
        match is_d_collapsible(&k, 1, CollapseMode::Exhaustive, &g).unwrap() {
            Collapsibility::Yes(seq) => assert!(verify_collapse(&k, &seq)),
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn boundary_triangle_is_not_1_collapsible() {
        let g = Guards::default();
        let k = fixtures::boundary_triangle();
        assert_eq!(
            is_d_collapsible(&k, 1, CollapseMode::Exhaustive, &g).unwrap(),
            Collapsibility::No {
                authoritative: true
            }
        );
    }

    #[test]
    fn mobius_is_2_collapsible() {
        let g = Guards::default();
        let k = fixtures::mobius();
        match is_d_collapsible(&k, 2, CollapseMode::Exhaustive, &g).unwrap() {
            Collapsibility::Yes(seq) => {
                assert_eq!(seq.d, 2);
                assert!(verify_collapse(&k, &seq));
            }
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn greedy_yes_is_verified() {
        let g = Guards::default();
        let k = fixtures::fig2();
        match is_d_collapsible(&k, 1, CollapseMode::Greedy, &g).unwrap() {
            Collapsibility::Yes(seq) => assert!(verify_collapse(&k, &seq)),
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn replay_rejects_bad_order() {
        // collapsing {1} first is illegal: it lies in facets 123 and 14
        let k = fixtures::fig2();
        let seq = CollapseSequence {
            d: 1,
            steps: vec![CollapseStep {
                free_face: face(&["1"]),
                unique_facet: face(&["1", "2", "3"]),
            }],
        };
        assert!(!verify_collapse(&k, &seq));
    }

    #[test]
    fn empty_sequence_on_empty_complex() {
        let seq = CollapseSequence {
            d: 1,
            steps: Vec::new(),
        };
        assert!(verify_collapse(&SimplicialComplex::empty(), &seq));
    }

    #[test]
    fn guard_exceeded_reported() {
        let g = Guards {
            collapse_states: 1,
            ..Guards::default()
        };
        let k = fixtures::mobius();
        assert_eq!(
            is_d_collapsible(&k, 2, CollapseMode::Exhaustive, &g).unwrap(),
            Collapsibility::GuardExceeded
        );
    }

    #[test]
    fn monotone_in_d_on_small_complexes() {
        let g = Guards::default();
        for k in [fixtures::fig2(), fixtures::path4(), fixtures::spider()] {
            let c1 = is_d_collapsible(&k, 1, CollapseMode::Exhaustive, &g).unwrap();
            let c2 = is_d_collapsible(&k, 2, CollapseMode::Exhaustive, &g).unwrap();
            if matches!(c1, Collapsibility::Yes(_)) {
                assert!(matches!(c2, Collapsibility::Yes(_)));
            }
        }
    }
}
