//! The named example complexes used throughout the test suite and shipped
//! as files under `fixtures/`.

use crate::{Face, SimplicialComplex};

fn cx(facets: &[&[&str]]) -> SimplicialComplex {
    SimplicialComplex::from_facet_labels(facets).expect("fixture is well formed")
}

/// Eight facets on seven vertices; its dual has seven facets including
/// three triangles.
pub fn fig1() -> SimplicialComplex {
    cx(&[
        &["1", "2"],
        &["1", "3"],
        &["1", "4"],
        &["4", "5"],
        &["2", "5", "6"],
        &["3", "5"],
        &["3", "7"],
        &["6", "7"],
    ])
}

/// A contractible complex that is not 1-representable: a filled triangle
/// with a pendant edge on each corner.
pub fn fig2() -> SimplicialComplex {
    cx(&[&["1", "2", "3"], &["1", "4"], &["2", "5"], &["3", "6"]])
}

/// The barycentric subdivision of the 3-star: the minimal tree that is not
/// 1-representable.
pub fn spider() -> SimplicialComplex {
    let star = cx(&[&["0", "1"], &["0", "2"], &["0", "3"]]);
    star.barycentric_subdivision(&crate::Guards::default())
        .expect("tiny complex")
        .complex
}

/// Eckhoff's triangulation of the Moebius strip: 2-collapsible but not
/// 2-representable.
pub fn mobius() -> SimplicialComplex {
    cx(&[
        &["1", "2", "4"],
        &["1", "2", "5"],
        &["1", "5", "6"],
        &["2", "3", "5"],
        &["2", "3", "6"],
        &["2", "4", "6"],
        &["3", "4", "5"],
        &["4", "5", "6"],
    ])
}

/// The path graph on four vertices; 1-representable.
pub fn path4() -> SimplicialComplex {
    cx(&[&["1", "2"], &["2", "3"], &["3", "4"]])
}

/// The boundary of the triangle: the smallest non-clique complex.
pub fn boundary_triangle() -> SimplicialComplex {
    cx(&[&["1", "2"], &["1", "3"], &["2", "3"]])
}

/// The full d-simplex on vertices 1..=d+1.
pub fn simplex(d: usize) -> SimplicialComplex {
    SimplicialComplex::simplex_skeleton(d, d)
}

/// The Kratochvil-Matousek string graph, encoded as a simplicial complex:
/// one vertex per graph vertex and per edge, a facet {x, xy} for every
/// incident vertex-edge pair, and four extra facets for the edge crossings
/// forced by every drawing. The crossing involving the waypoint between
/// v1 and r is encoded on the edge v1-r.
pub fn kratochvil_matousek() -> SimplicialComplex {
    let edges: &[(&str, &str)] = &[
        // bottom path
        ("c0", "c1"),
        ("c1", "c2"),
        ("c2", "c3"),
        ("c3", "c4"),
        // middle path
        ("l", "u2"),
        ("u2", "u1"),
        ("u1", "v2"),
        ("v2", "u0"),
        ("u0", "v1"),
        ("v1", "r"),
        // top path
        ("d0", "a"),
        ("a", "d1"),
        // left side
        ("c0", "l"),
        ("l", "d0"),
        // verticals
        ("c1", "u2"),
        ("c2", "u1"),
        ("c3", "u0"),
        ("u0", "b"),
        ("b", "a"),
        ("c4", "r"),
        ("r", "d1"),
        // the two string edges
        ("u1", "v1"),
        ("u2", "v2"),
    ];
    let mut facets: Vec<Face> = Vec::new();
    let edge_name = |x: &str, y: &str| -> String {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        format!("{a}{b}")
    };
    for (x, y) in edges {
        let e = edge_name(x, y);
        facets.push(Face::of(&[*x, e.as_str()]).unwrap());
        facets.push(Face::of(&[*y, e.as_str()]).unwrap());
    }
    for (e1, e2) in [
        ("ab", "u1v1"),
        ("ab", "u2v2"),
        ("u0v1", "u2v2"),
        ("rv1", "u2v2"),
    ] {
        facets.push(Face::of(&[e1, e2]).unwrap());
    }
    SimplicialComplex::build(facets).expect("fixture is well formed")
}
