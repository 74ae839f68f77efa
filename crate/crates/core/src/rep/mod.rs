//! Decision procedures and certificate constructors for representability:
//! the full Lekkerkerker-Boland decision for d = 1, asteroidal-map
//! construction, the planarity route for d = 2 when the dual is a graph,
//! and the aggregate per-complex report.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::complex::{CliqueCheck, Face, SimplicialComplex, VertexLabel};
use crate::{Error, Guards, Result};

mod graph;
mod planar;
mod report;

pub use graph::{find_asteroidal_triple, find_induced_long_cycle};
pub use planar::{
    planar_embed, verify_kuratowski, verify_planar_drawing, KuratowskiKind, KuratowskiSubgraph,
    PlanarDrawing, PlanarityResult,
};
pub use report::{report, DEntry, RepCertificate, RepVerdict, Report, UpperBound};

use graph::Graph;

/// A closed rational interval per vertex whose nerve is the complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRepresentation {
    pub intervals: BTreeMap<VertexLabel, (BigRational, BigRational)>,
}

impl IntervalRepresentation {
    /// The nerve of the intervals. Intervals have the Helly property, so a
    /// name-set has a common point iff some left endpoint lies in all of its
    /// intervals; the facets are the maximal point-stabbed sets.
    pub fn nerve(&self) -> Result<SimplicialComplex> {
        let mut faces = Vec::new();
        for (_, (l, _)) in self.intervals.iter() {
            let stabbed = Face::new(
                self.intervals
                    .iter()
                    .filter(|(_, (lo, hi))| lo <= l && l <= hi)
                    .map(|(v, _)| v.clone()),
            );
            if !stabbed.is_empty() {
                faces.push(stabbed);
            }
        }
        if faces.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        SimplicialComplex::build(faces)
    }
}

/// Checks the certificate contract of an interval representation: ordered
/// endpoints and exact nerve equality.
pub fn verify_interval_representation(
    k: &SimplicialComplex,
    rep: &IntervalRepresentation,
) -> bool {
    if rep.intervals.iter().any(|(_, (l, r))| l > r) {
        return false;
    }
    let names: Vec<&VertexLabel> = rep.intervals.keys().collect();
    if names.len() != k.vertices().len()
        || names.iter().zip(k.vertices()).any(|(a, b)| **a != *b)
    {
        return false;
    }
    matches!(rep.nerve(), Ok(n) if n == *k)
}

/// Why a complex fails to be 1-representable: one of the three
/// Lekkerkerker-Boland conditions, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction1 {
    /// All pairs are edges but the set is not a face (inclusion-minimal).
    NonClique(Face),
    /// A chordless cycle of length >= 4.
    InducedCycle(Vec<VertexLabel>),
    /// Three vertices pairwise joined by paths avoiding the closed
    /// neighborhood of the third; paths ordered (uv, uw, vw).
    AsteroidalTriple {
        triple: [VertexLabel; 3],
        paths: [Vec<VertexLabel>; 3],
    },
}

/// Verdict of the 1-representability decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decision1 {
    /// `intervals` is None when the certificate search hit its guard while
    /// the verdict itself is settled by the three conditions.
    Yes {
        intervals: Option<IntervalRepresentation>,
    },
    No(Obstruction1),
}

/// Full 1-representability decision via the Lekkerkerker-Boland conditions.
///
/// The verdict never depends on the certificate search: the three
/// conditions decide, and a consecutive arrangement of the facets (which
/// exists whenever all three hold) is then searched to build the interval
/// certificate, nerve-verified before returning.
pub fn decide_1_representable(k: &SimplicialComplex, guards: &Guards) -> Result<Decision1> {
    if k.is_empty() {
        return Ok(Decision1::Yes {
            intervals: Some(IntervalRepresentation {
                intervals: BTreeMap::new(),
            }),
        });
    }
    if let CliqueCheck::Witness(f) = k.is_clique_complex() {
        return Ok(Decision1::No(Obstruction1::NonClique(f)));
    }
    let skel = k.skeleton(1);
    if let Some(cycle) = find_induced_long_cycle(&skel, guards)? {
        return Ok(Decision1::No(Obstruction1::InducedCycle(cycle)));
    }
    if let Some((triple, paths)) = find_asteroidal_triple(&skel) {
        return Ok(Decision1::No(Obstruction1::AsteroidalTriple { triple, paths }));
    }
    // all three conditions hold; look for the interval certificate
    match consecutive_arrangement(k, guards) {
        Some(order) => {
            let rep = intervals_from_arrangement(k, &order);
            if !verify_interval_representation(k, &rep) {
                return Err(Error::VerificationFailed(
                    "interval representation does not reproduce the complex".into(),
                ));
            }
            Ok(Decision1::Yes {
                intervals: Some(rep),
            })
        }
        None => Ok(Decision1::Yes { intervals: None }),
    }
}

/// Searches for an ordering of the facets in which, for every vertex, the
/// facets containing it are consecutive. Returns None only when the guard
/// is hit; when the three LB conditions hold an arrangement exists.
fn consecutive_arrangement(k: &SimplicialComplex, guards: &Guards) -> Option<Vec<usize>> {
    let m = k.facets().len();
    if m > guards.arrangement_facets {
        return None;
    }
    let n = k.vertices().len();
    let membership: Vec<Vec<bool>> = k
        .facets()
        .iter()
        .map(|j| {
            k.vertices()
                .iter()
                .map(|v| j.contains(v))
                .collect()
        })
        .collect();

    #[derive(Clone, Copy, PartialEq)]
    enum BlockState {
        Untouched,
        Open,
        Closed,
    }
    fn place(
        order: &mut Vec<usize>,
        used: &mut [bool],
        state: &mut [BlockState],
        membership: &[Vec<bool>],
        m: usize,
        n: usize,
    ) -> bool {
        if order.len() == m {
            return true;
        }
        for f in 0..m {
            if used[f] {
                continue;
            }
            // a vertex of f whose block already closed breaks consecutivity
            if (0..n).any(|v| membership[f][v] && state[v] == BlockState::Closed) {
                continue;
            }
            let saved: Vec<BlockState> = state.to_vec();
            for v in 0..n {
                if membership[f][v] {
                    state[v] = BlockState::Open;
                } else if state[v] == BlockState::Open {
                    state[v] = BlockState::Closed;
                }
            }
            used[f] = true;
            order.push(f);
            if place(order, used, state, membership, m, n) {
                return true;
            }
            order.pop();
            used[f] = false;
            state.copy_from_slice(&saved);
        }
        false
    }

    let mut order = Vec::new();
    let mut used = vec![false; m];
    let mut state = vec![BlockState::Untouched; n];
    place(&mut order, &mut used, &mut state, &membership, m, n).then_some(order)
}

fn intervals_from_arrangement(k: &SimplicialComplex, order: &[usize]) -> IntervalRepresentation {
    let position: BTreeMap<usize, usize> =
        order.iter().enumerate().map(|(p, &f)| (f, p + 1)).collect();
    let mut intervals = BTreeMap::new();
    for v in k.vertices() {
        let positions: Vec<usize> = k
            .facets()
            .iter()
            .enumerate()
            .filter(|(_, j)| j.contains(v))
            .map(|(f, _)| position[&f])
            .collect();
        let lo = *positions.iter().min().expect("vertex lies in a facet");
        let hi = *positions.iter().max().expect("vertex lies in a facet");
        intervals.insert(
            v.clone(),
            (
                BigRational::from(BigInt::from(lo as i64)),
                BigRational::from(BigInt::from(hi as i64)),
            ),
        );
    }
    IntervalRepresentation { intervals }
}

/// The combinatorial data of a 1-asteroidal map: three faces and three
/// connecting walks in the face poset, every entry of which stays a
/// non-face when joined with the opposite face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsteroidalMap1 {
    pub faces: [Face; 3],
    /// Paths ordered (1-2, 1-3, 2-3); consecutive entries comparable by
    /// inclusion, endpoints the corresponding faces.
    pub paths: [Vec<Face>; 3],
}

/// Builds the 1-asteroidal map from an obstruction, one construction per
/// obstruction kind. The output always satisfies
/// [`verify_asteroidal_map`].
pub fn build_asteroidal_map(k: &SimplicialComplex, obs: &Obstruction1) -> Result<AsteroidalMap1> {
    match obs {
        Obstruction1::NonClique(i) => {
            validate_non_clique(k, i)?;
            let vs: Vec<VertexLabel> = i.iter().take(3).cloned().collect();
            let f = |skip: &VertexLabel| Face::new(i.iter().filter(|v| *v != skip).cloned());
            let faces = [f(&vs[0]), f(&vs[1]), f(&vs[2])];
            let path = |a: usize, b: usize| {
                vec![
                    faces[a].clone(),
                    faces[a].intersection(&faces[b]),
                    faces[b].clone(),
                ]
            };
            Ok(AsteroidalMap1 {
                paths: [path(0, 1), path(0, 2), path(1, 2)],
                faces,
            })
        }
        Obstruction1::InducedCycle(cycle) => {
            validate_induced_cycle(k, cycle)?;
            let m = cycle.len();
            // paper indexing: v_1..v_m are the cycle entries, v_0 = v_m
            let v = |i: usize| cycle[(i + m - 1) % m].clone();
            let edge = |i: usize, j: usize| Face::new([v(i), v(j)]);
            let f1 = edge(0, 1);
            let f2 = edge(1, 2);
            let f3 = edge(2, 3);
            let p12 = vec![f1.clone(), Face::new([v(1)]), f2.clone()];
            let p23 = vec![f2.clone(), Face::new([v(2)]), f3.clone()];
            // walk the far side: from {v_0, v_1} down through v_0 = v_m,
            // v_{m-1}, ... to {v_2, v_3}
            let mut p13 = vec![f1.clone()];
            let mut i = m;
            while i > 3 {
                p13.push(Face::new([v(i)]));
                p13.push(edge(i - 1, i));
                i -= 1;
            }
            p13.push(Face::new([v(3)]));
            p13.push(f3.clone());
            Ok(AsteroidalMap1 {
                faces: [f1, f2, f3],
                paths: [p12, p13, p23],
            })
        }
        Obstruction1::AsteroidalTriple { triple, paths } => {
            validate_asteroidal_triple(k, triple, paths)?;
            let faces = [
                Face::new([triple[0].clone()]),
                Face::new([triple[1].clone()]),
                Face::new([triple[2].clone()]),
            ];
            let lift = |p: &Vec<VertexLabel>| {
                let mut out = Vec::with_capacity(2 * p.len() - 1);
                for (i, x) in p.iter().enumerate() {
                    if i > 0 {
                        out.push(Face::new([p[i - 1].clone(), x.clone()]));
                    }
                    out.push(Face::new([x.clone()]));
                }
                out
            };
            Ok(AsteroidalMap1 {
                faces,
                paths: [lift(&paths[0]), lift(&paths[1]), lift(&paths[2])],
            })
        }
    }
}

fn validate_non_clique(k: &SimplicialComplex, i: &Face) -> Result<()> {
    if i.len() < 3 {
        return Err(Error::InvalidObstruction(format!(
            "{i} has fewer than three vertices"
        )));
    }
    if k.contains_face(i) {
        return Err(Error::InvalidObstruction(format!("{i} is a face")));
    }
    let vs: Vec<&VertexLabel> = i.iter().collect();
    for (a, u) in vs.iter().enumerate() {
        for w in &vs[a + 1..] {
            if !k.contains_face(&Face::new([(*u).clone(), (*w).clone()])) {
                return Err(Error::InvalidObstruction(format!(
                    "pair {{{u},{w}}} is not an edge"
                )));
            }
        }
    }
    // inclusion-minimality: dropping any vertex must give a face
    for u in i.iter() {
        let sub = Face::new(i.iter().filter(|v| *v != u).cloned());
        if !k.contains_face(&sub) {
            return Err(Error::InvalidObstruction(format!("{i} is not minimal")));
        }
    }
    Ok(())
}

fn validate_induced_cycle(k: &SimplicialComplex, cycle: &[VertexLabel]) -> Result<()> {
    let m = cycle.len();
    if m < 4 {
        return Err(Error::InvalidObstruction("cycle shorter than 4".into()));
    }
    let distinct: std::collections::BTreeSet<&VertexLabel> = cycle.iter().collect();
    if distinct.len() != m {
        return Err(Error::InvalidObstruction("repeated cycle vertex".into()));
    }
    for a in 0..m {
        for b in a + 1..m {
            let consecutive = b == a + 1 || (a == 0 && b == m - 1);
            let edge = Face::new([cycle[a].clone(), cycle[b].clone()]);
            if consecutive != k.contains_face(&edge) {
                return Err(Error::InvalidObstruction(format!(
                    "cycle is not chordless at {edge}"
                )));
            }
        }
    }
    Ok(())
}

fn validate_asteroidal_triple(
    k: &SimplicialComplex,
    triple: &[VertexLabel; 3],
    paths: &[Vec<VertexLabel>; 3],
) -> Result<()> {
    let skel = k.skeleton(1);
    let graph = Graph::from_complex(&skel);
    let idx = |v: &VertexLabel| {
        graph
            .labels
            .binary_search(v)
            .map_err(|_| Error::InvalidObstruction(format!("unknown vertex {v}")))
    };
    let t = [idx(&triple[0])?, idx(&triple[1])?, idx(&triple[2])?];
    let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    for ((a, b, c), path) in pairs.iter().zip(paths) {
        if path.is_empty() {
            return Err(Error::InvalidObstruction("empty path".into()));
        }
        if path[0] != triple[*a] || path[path.len() - 1] != triple[*b] {
            return Err(Error::InvalidObstruction("path endpoints mismatch".into()));
        }
        let forbidden = {
            let mut f = vec![false; graph.n()];
            f[t[*c]] = true;
            for &w in &graph.adj[t[*c]] {
                f[w] = true;
            }
            f
        };
        for (i, v) in path.iter().enumerate() {
            let vi = idx(v)?;
            if forbidden[vi] {
                return Err(Error::InvalidObstruction(format!(
                    "path vertex {v} meets the closed neighborhood of {}",
                    triple[*c]
                )));
            }
            if i > 0 && !graph.has_edge(idx(&path[i - 1])?, vi) {
                return Err(Error::InvalidObstruction(format!(
                    "path step {}-{v} is not an edge",
                    path[i - 1]
                )));
            }
        }
    }
    Ok(())
}

/// Replays the defining conditions of a 1-asteroidal map: faces exist,
/// paths are inclusion-walks with the right endpoints, and every path entry
/// unioned with the opposite face is a non-face.
pub fn verify_asteroidal_map(k: &SimplicialComplex, m: &AsteroidalMap1) -> bool {
    for f in &m.faces {
        if f.is_empty() || !k.contains_face(f) {
            return false;
        }
    }
    let endpoint_pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    for (p, (a, b)) in m.paths.iter().zip(endpoint_pairs) {
        if p.is_empty() || p[0] != m.faces[a] || p[p.len() - 1] != m.faces[b] {
            return false;
        }
        let opposite = 3 - a - b;
        for w in p.windows(2) {
            if !(w[0].is_subset(&w[1]) || w[1].is_subset(&w[0])) {
                return false;
            }
        }
        for f in p {
            if !k.contains_face(f) {
                return false;
            }
            if k.contains_face(&f.union(&m.faces[opposite])) {
                return false;
            }
        }
    }
    true
}

/// Verdict of the co-graph d = 2 decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decision2 {
    Yes(crate::geometry::LinearRealization),
    No(KuratowskiSubgraph),
    /// The dual complex is not a graph, so the planarity route does not
    /// apply.
    NotApplicable,
}

/// Decides 2-representability when the dual complex is a graph: planar dual
/// means representable (the straight-line drawing gives a faithful linear
/// realization), non-planar means not even 2-Matousek.
pub fn decide_2_representable_cograph(
    k: &SimplicialComplex,
    guards: &Guards,
) -> Result<Decision2> {
    if k.is_empty() {
        return Ok(Decision2::NotApplicable);
    }
    let dual = k.dual()?;
    if dual.complex.dim() != Some(1) {
        return Ok(Decision2::NotApplicable);
    }
    match planar_embed(&dual.complex, guards)? {
        PlanarityResult::Drawing(drawing) => {
            let mut points = BTreeMap::new();
            for (label, (x, y)) in &drawing.coords {
                let facet = dual
                    .facet_of(label)
                    .expect("drawing vertices come from the dual")
                    .clone();
                points.insert(
                    facet,
                    crate::geometry::QPoint::from_ints(&[*x, *y]),
                );
            }
            let realization = crate::geometry::LinearRealization::new(2, points)?;
            let faithful = crate::geometry::is_faithful(k, &realization)?;
            if faithful != crate::geometry::Faithfulness::Ok {
                return Err(Error::VerificationFailed(
                    "planar drawing did not induce a faithful realization".into(),
                ));
            }
            let family = crate::geometry::convex_sets_of(k, &realization)?;
            if crate::geometry::nerve_of_hulls(&family)? != *k {
                return Err(Error::VerificationFailed(
                    "realization nerve differs from the complex".into(),
                ));
            }
            Ok(Decision2::Yes(realization))
        }
        PlanarityResult::Obstruction(cert) => Ok(Decision2::No(cert)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn face(labels: &[&str]) -> Face {
        Face::of(labels).unwrap()
    }

    fn lbl(s: &str) -> VertexLabel {
        VertexLabel::new(s).unwrap()
    }

    #[test]
    fn cycle_search_cases() {
        let g = Guards::default();
        let c4 = SimplicialComplex::from_facet_labels(&[
            &["1", "2"],
            &["2", "3"],
            &["3", "4"],
            &["1", "4"],
        ])
        .unwrap();
        assert_eq!(
            find_induced_long_cycle(&c4, &g).unwrap(),
            Some(vec![lbl("1"), lbl("2"), lbl("3"), lbl("4")])
        );
        assert_eq!(
            find_induced_long_cycle(&fixtures::fig2().skeleton(1), &g).unwrap(),
            None
        );
        assert_eq!(
            find_induced_long_cycle(&fixtures::fig1().skeleton(1), &g).unwrap(),
            Some(vec![lbl("1"), lbl("2"), lbl("5"), lbl("3")])
        );
    }

    #[test]
    fn asteroidal_triple_cases() {
        let (triple, paths) = find_asteroidal_triple(&fixtures::fig2().skeleton(1)).unwrap();
        assert_eq!(triple, [lbl("4"), lbl("5"), lbl("6")]);
        assert_eq!(paths[0], vec![lbl("4"), lbl("1"), lbl("2"), lbl("5")]);
        assert_eq!(paths[1], vec![lbl("4"), lbl("1"), lbl("3"), lbl("6")]);
        assert_eq!(paths[2], vec![lbl("5"), lbl("2"), lbl("3"), lbl("6")]);

        assert!(find_asteroidal_triple(&fixtures::path4()).is_none());

        let (triple, _) = find_asteroidal_triple(&fixtures::spider()).unwrap();
        assert_eq!(triple, [lbl("1"), lbl("2"), lbl("3")]);
    }

    #[test]
    fn decide1_path4_yes_with_intervals() {
        let g = Guards::default();
        match decide_1_representable(&fixtures::path4(), &g).unwrap() {
            Decision1::Yes { intervals } => {
                let rep = intervals.expect("certificate fits the guard");
                assert!(verify_interval_representation(&fixtures::path4(), &rep));
            }
            Decision1::No(o) => panic!("path4 is 1-representable, got {o:?}"),
        }
    }

    #[test]
    fn decide1_fig2_asteroidal() {
        let g = Guards::default();
        match decide_1_representable(&fixtures::fig2(), &g).unwrap() {
            Decision1::No(Obstruction1::AsteroidalTriple { triple, .. }) => {
                assert_eq!(triple, [lbl("4"), lbl("5"), lbl("6")]);
            }
            other => panic!("expected asteroidal triple, got {other:?}"),
        }
    }

    #[test]
    fn decide1_boundary_triangle_non_clique() {
        let g = Guards::default();
        match decide_1_representable(&fixtures::boundary_triangle(), &g).unwrap() {
            Decision1::No(Obstruction1::NonClique(f)) => {
                assert_eq!(f, face(&["1", "2", "3"]))
            }
            other => panic!("expected non-clique witness, got {other:?}"),
        }
    }

    #[test]
    fn asteroidal_map_from_non_clique() {
        let k = fixtures::boundary_triangle();
        let obs = Obstruction1::NonClique(face(&["1", "2", "3"]));
        let m = build_asteroidal_map(&k, &obs).unwrap();
        assert_eq!(m.faces[0], face(&["2", "3"]));
        assert_eq!(m.faces[1], face(&["1", "3"]));
        assert_eq!(m.faces[2], face(&["1", "2"]));
        assert_eq!(
            m.paths[0],
            vec![face(&["2", "3"]), face(&["3"]), face(&["1", "3"])]
        );
        assert!(verify_asteroidal_map(&k, &m));
    }

    #[test]
    fn asteroidal_map_from_induced_cycle() {
        let k = SimplicialComplex::from_facet_labels(&[
            &["1", "2"],
            &["2", "3"],
            &["3", "4"],
            &["1", "4"],
        ])
        .unwrap();
        let obs = Obstruction1::InducedCycle(vec![lbl("1"), lbl("2"), lbl("3"), lbl("4")]);
        let m = build_asteroidal_map(&k, &obs).unwrap();
        // paper indexing: v1..v4 = 1,2,3,4 and v0 = v4 = 4
        assert_eq!(m.faces[0], face(&["1", "4"]));
        assert_eq!(m.faces[1], face(&["1", "2"]));
        assert_eq!(m.faces[2], face(&["2", "3"]));
        assert!(verify_asteroidal_map(&k, &m));
    }

    #[test]
    fn asteroidal_map_from_triple() {
        let k = fixtures::fig2();
        let g = Guards::default();
        let Decision1::No(obs) = decide_1_representable(&k, &g).unwrap() else {
            panic!("fig2 is not 1-representable");
        };
        let m = build_asteroidal_map(&k, &obs).unwrap();
        assert_eq!(
            m.paths[0],
            vec![
                face(&["4"]),
                face(&["1", "4"]),
                face(&["1"]),
                face(&["1", "2"]),
                face(&["2"]),
                face(&["2", "5"]),
                face(&["5"])
            ]
        );
        assert!(verify_asteroidal_map(&k, &m));
    }

    #[test]
    fn asteroidal_map_rejects_rerouted_path() {
        // rerouting pi_45 through vertex 3 breaks the map: {3} u {6} is a face
        let k = fixtures::fig2();
        let m = AsteroidalMap1 {
            faces: [face(&["4"]), face(&["5"]), face(&["6"])],
            paths: [
                vec![
                    face(&["4"]),
                    face(&["1", "4"]),
                    face(&["1"]),
                    face(&["1", "3"]),
                    face(&["3"]),
                    face(&["2", "3"]),
                    face(&["2"]),
                    face(&["2", "5"]),
                    face(&["5"]),
                ],
                vec![
                    face(&["4"]),
                    face(&["1", "4"]),
                    face(&["1"]),
                    face(&["1", "3"]),
                    face(&["3"]),
                    face(&["3", "6"]),
                    face(&["6"]),
                ],
                vec![
                    face(&["5"]),
                    face(&["2", "5"]),
                    face(&["2"]),
                    face(&["2", "3"]),
                    face(&["3"]),
                    face(&["3", "6"]),
                    face(&["6"]),
                ],
            ],
        };
        assert!(!verify_asteroidal_map(&k, &m));
    }

    #[test]
    fn asteroidal_map_rejects_bad_endpoints() {
        let k = fixtures::boundary_triangle();
        let m = AsteroidalMap1 {
            faces: [face(&["2", "3"]), face(&["1", "3"]), face(&["1", "2"])],
            paths: [
                vec![face(&["2", "3"]), face(&["3"])],
                vec![face(&["2", "3"]), face(&["2"]), face(&["1", "2"])],
                vec![face(&["1", "3"]), face(&["1"]), face(&["1", "2"])],
            ],
        };
        assert!(!verify_asteroidal_map(&k, &m));
    }

    #[test]
    fn decide2_fig2_yes_verified() {
        let g = Guards::default();
        match decide_2_representable_cograph(&fixtures::fig2(), &g).unwrap() {
            Decision2::Yes(r) => {
                assert_eq!(r.d, 2);
                assert_eq!(
                    crate::geometry::is_faithful(&fixtures::fig2(), &r).unwrap(),
                    crate::geometry::Faithfulness::Ok
                );
            }
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn decide2_mobius_not_applicable() {
        let g = Guards::default();
        assert_eq!(
            decide_2_representable_cograph(&fixtures::mobius(), &g).unwrap(),
            Decision2::NotApplicable
        );
    }

    #[test]
    fn interval_nerve_rejects_wrong_rep() {
        let k = fixtures::path4();
        let mut intervals = BTreeMap::new();
        for (i, v) in k.vertices().iter().enumerate() {
            let t = num_rational::BigRational::from(num_bigint::BigInt::from(i as i64));
            intervals.insert(v.clone(), (t.clone(), t));
        }
        // pairwise disjoint points: nerve is four isolated vertices, not path4
        let rep = IntervalRepresentation { intervals };
        assert!(!verify_interval_representation(&k, &rep));
    }
}
