//! Exact rational convex geometry: hull-intersection emptiness via LP
//! feasibility, nerves of point families, linear realizations of the dual
//! complex, faithfulness checking, and moment-curve constructions.
//!
//! No floating point is used in any verdict.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, VertexLabel};
use crate::{Error, Result};

mod lp;

pub use lp::feasible_eq_nonneg;

/// A point of Q^d. `BigRational` keeps coordinates in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QPoint(pub Vec<BigRational>);

impl QPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        assert!(!coords.is_empty(), "points live in dimension >= 1");
        QPoint(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QPoint::new(
            coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses the rational literal syntax of the realization file format:
/// `p/q` or a plain integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from(parse_int(s)?)),
    }
}

/// Association from the facets of a complex to points of Q^d: the images
/// p_J of the dual vertices under a linear map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearRealization {
    pub d: usize,
    pub points: BTreeMap<Face, QPoint>,
}

impl LinearRealization {
    pub fn new(d: usize, points: BTreeMap<Face, QPoint>) -> Result<Self> {
        for p in points.values() {
            if p.dim() != d {
                return Err(Error::DimensionMismatch(d, p.dim()));
            }
        }
        Ok(LinearRealization { d, points })
    }

    fn check_covers(&self, k: &SimplicialComplex) -> Result<()> {
        let mine: BTreeSet<&Face> = self.points.keys().collect();
        let theirs: BTreeSet<&Face> = k.facets().iter().collect();
        if mine != theirs {
            return Err(Error::FacetMismatch(format!(
                "realization has {} facets, complex has {}",
                mine.len(),
                theirs.len()
            )));
        }
        Ok(())
    }
}

/// Named generator sets of convex hulls, all in the same ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullFamily {
    pub d: usize,
    pub sets: Vec<(VertexLabel, Vec<QPoint>)>,
}

impl HullFamily {
    pub fn new(d: usize, sets: Vec<(VertexLabel, Vec<QPoint>)>) -> Result<Self> {
        let mut names = BTreeSet::new();
        for (name, pts) in &sets {
            if !names.insert(name) {
                return Err(Error::DuplicateName(name.to_string()));
            }
            for p in pts {
                if p.dim() != d {
                    return Err(Error::DimensionMismatch(d, p.dim()));
                }
            }
        }
        Ok(HullFamily { d, sets })
    }

    pub fn get(&self, name: &VertexLabel) -> Option<&Vec<QPoint>> {
        self.sets.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

/// Do the convex hulls of the given generator sets share a point?
///
/// Decided exactly: a common point exists iff there are convex-combination
/// weights for each set whose weighted sums agree coordinatewise, which is
/// an LP feasibility question.
pub fn hulls_intersect(sets: &[Vec<QPoint>]) -> Result<bool> {
    assert!(!sets.is_empty(), "need at least one set");
    assert!(sets.iter().all(|s| !s.is_empty()), "sets must be nonempty");
    let d = sets[0][0].dim();
    for s in sets {
        for p in s {
            if p.dim() != d {
                return Err(Error::DimensionMismatch(d, p.dim()));
            }
        }
    }
    if sets.len() == 1 {
        return Ok(true);
    }

    // variables: one weight per generator point, grouped by set
    let offsets: Vec<usize> = sets
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s.len();
            Some(o)
        })
        .collect();
    let nvars: usize = sets.iter().map(|s| s.len()).sum();

    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut rhs: Vec<BigRational> = Vec::new();

    // each set's weights sum to one
    for (t, s) in sets.iter().enumerate() {
        let mut row = vec![BigRational::zero(); nvars];
        for i in 0..s.len() {
            row[offsets[t] + i] = BigRational::one();
        }
        rows.push(row);
        rhs.push(BigRational::one());
    }
    // the weighted sums of set t and set 0 agree in every coordinate
    for t in 1..sets.len() {
        for c in 0..d {
            let mut row = vec![BigRational::zero(); nvars];
            for (i, p) in sets[0].iter().enumerate() {
                row[offsets[0] + i] = -p.0[c].clone();
            }
            for (i, p) in sets[t].iter().enumerate() {
                row[offsets[t] + i] = p.0[c].clone();
            }
            rows.push(row);
            rhs.push(BigRational::zero());
        }
    }
    Ok(feasible_eq_nonneg(&rows, &rhs))
}

/// The nerve of a hull family: faces are the name-sets whose hulls share a
/// point. Computed bottom-up by cardinality; a set of hulls can only
/// intersect if all its subsets do, which prunes the enumeration.
pub fn nerve_of_hulls(family: &HullFamily) -> Result<SimplicialComplex> {
    assert!(!family.sets.is_empty(), "family must be nonempty");
    let names: Vec<&VertexLabel> = family.sets.iter().map(|(n, _)| n).collect();
    let n = names.len();

    let mut level: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut all_faces: Vec<Vec<usize>> = level.clone();
    while !level.is_empty() {
        let prev: BTreeSet<&Vec<usize>> = level.iter().collect();
        let mut next: Vec<Vec<usize>> = Vec::new();
        for face in &level {
            for extra in face.last().unwrap() + 1..n {
                let mut cand = face.clone();
                cand.push(extra);
                // monotone pruning: all sub-(k-1)-sets must intersect
                let all_subs_ok = (0..cand.len()).all(|drop| {
                    let sub: Vec<usize> = cand
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, &v)| v)
                        .collect();
                    prev.contains(&sub)
                });
                if !all_subs_ok {
                    continue;
                }
                let sets: Vec<Vec<QPoint>> = cand
                    .iter()
                    .map(|&i| family.sets[i].1.clone())
                    .collect();
                if hulls_intersect(&sets)? {
                    next.push(cand);
                }
            }
        }
        all_faces.extend(next.iter().cloned());
        level = next;
    }

    let faces: Vec<Face> = all_faces
        .iter()
        .map(|idx| Face::new(idx.iter().map(|&i| names[i].clone())))
        .collect();
    SimplicialComplex::build(faces)
}

/// The generator sets `C_i = {p_J : J a facet containing i}` of a linear
/// realization, one per vertex of the complex.
pub fn convex_sets_of(k: &SimplicialComplex, r: &LinearRealization) -> Result<HullFamily> {
    r.check_covers(k)?;
    let mut sets = Vec::new();
    for v in k.vertices() {
        let gens: Vec<QPoint> = k
            .facets()
            .iter()
            .filter(|j| j.contains(v))
            .map(|j| r.points[j].clone())
            .collect();
        sets.push((v.clone(), gens));
    }
    HullFamily::new(r.d, sets)
}

/// Outcome of the faithfulness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Faithfulness {
    Ok,
    /// A minimal non-face whose hulls nevertheless share a point.
    Violation(Face),
}

/// Is the linear map defined by `r` faithful for `k`?
///
/// Hull intersections indexed by faces are nonempty by construction (all
/// generators p_J for facets J containing the face share p_J), and hull
/// intersection is monotone under shrinking the index set, so testing the
/// minimal non-faces is enough: the map is faithful iff every minimal
/// non-face has empty hull intersection.
pub fn is_faithful(k: &SimplicialComplex, r: &LinearRealization) -> Result<Faithfulness> {
    r.check_covers(k)?;
    let family = convex_sets_of(k, r)?;
    for nf in k.minimal_nonfaces() {
        let sets: Vec<Vec<QPoint>> = nf
            .iter()
            .map(|v| family.get(v).expect("vertex has a hull").clone())
            .collect();
        if hulls_intersect(&sets)? {
            return Ok(Faithfulness::Violation(nf));
        }
    }
    Ok(Faithfulness::Ok)
}

/// Places the facets (in canonical order) at parameters t = 1, 2, 3, ... on
/// the moment curve (t, t^2, ..., t^d).
///
/// For d >= 2 dim K' + 1 the induced linear map on |K'| is injective, so
/// the realization is always faithful at that dimension.
pub fn moment_curve_realization(k: &SimplicialComplex, d: usize) -> LinearRealization {
    assert!(d >= 1, "moment curve needs d >= 1");
    let mut points = BTreeMap::new();
    for (i, j) in k.facets().iter().enumerate() {
        let t = BigInt::from(i as i64 + 1);
        let mut coords = Vec::with_capacity(d);
        let mut power = BigInt::one();
        for _ in 0..d {
            power *= &t;
            coords.push(BigRational::from(power.clone()));
        }
        points.insert(j.clone(), QPoint::new(coords));
    }
    LinearRealization { d, points }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use lp::ratio;

    fn pt(coords: &[i64]) -> QPoint {
        QPoint::from_ints(coords)
    }

    #[test]
    fn identical_points_intersect() {
        assert!(hulls_intersect(&[vec![pt(&[0, 0])], vec![pt(&[0, 0])]]).unwrap());
    }

    #[test]
    fn distinct_points_do_not() {
        assert!(!hulls_intersect(&[vec![pt(&[0])], vec![pt(&[1])]]).unwrap());
    }

    #[test]
    fn crossing_segments_intersect() {
        let s1 = vec![pt(&[0, 0]), pt(&[2, 2])];
        let s2 = vec![pt(&[0, 2]), pt(&[2, 0])];
        assert!(hulls_intersect(&[s1, s2]).unwrap());
    }

    #[test]
    fn parallel_segments_do_not() {
        let s1 = vec![pt(&[0, 0]), pt(&[2, 0])];
        let s2 = vec![pt(&[0, 1]), pt(&[2, 1])];
        assert!(!hulls_intersect(&[s1, s2]).unwrap());
    }

    #[test]
    fn touching_at_vertex_counts() {
        let s1 = vec![pt(&[0, 0]), pt(&[1, 1])];
        let s2 = vec![pt(&[1, 1]), pt(&[2, 0])];
        assert!(hulls_intersect(&[s1, s2]).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(
            hulls_intersect(&[vec![pt(&[0, 0])], vec![pt(&[0])]]),
            Err(Error::DimensionMismatch(_, _))
        ));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert_eq!(parse_rational("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn interval_nerve_is_path4() {
        // C1=[1,1], C2=[1,2], C3=[2,3], C4=[3,3] as 1-dimensional hulls
        let family = HullFamily::new(
            1,
            vec![
                (VertexLabel::new("1").unwrap(), vec![pt(&[1])]),
                (VertexLabel::new("2").unwrap(), vec![pt(&[1]), pt(&[2])]),
                (VertexLabel::new("3").unwrap(), vec![pt(&[2]), pt(&[3])]),
                (VertexLabel::new("4").unwrap(), vec![pt(&[3])]),
            ],
        )
        .unwrap();
        assert_eq!(nerve_of_hulls(&family).unwrap(), fixtures::path4());
    }

    #[test]
    fn three_segments_through_common_point() {
        let family = HullFamily::new(
            2,
            vec![
                (VertexLabel::new("a").unwrap(), vec![pt(&[-1, -1]), pt(&[1, 1])]),
                (VertexLabel::new("b").unwrap(), vec![pt(&[-1, 1]), pt(&[1, -1])]),
                (VertexLabel::new("c").unwrap(), vec![pt(&[-1, 0]), pt(&[1, 0])]),
            ],
        )
        .unwrap();
        let nerve = nerve_of_hulls(&family).unwrap();
        assert_eq!(nerve.facets().len(), 1);
        assert_eq!(nerve.facets()[0].len(), 3);
    }

    #[test]
    fn fig2_moment_curve_is_faithful() {
        let k = fixtures::fig2();
        let r = moment_curve_realization(&k, 3);
        assert_eq!(r.points.len(), 4);
        assert_eq!(is_faithful(&k, &r).unwrap(), Faithfulness::Ok);
        // round trip through the nerve
        let family = convex_sets_of(&k, &r).unwrap();
        assert_eq!(nerve_of_hulls(&family).unwrap(), k);
    }

    #[test]
    fn collapsed_realization_is_not_faithful() {
        let k = fixtures::fig2();
        let points = k
            .facets()
            .iter()
            .map(|j| (j.clone(), pt(&[0])))
            .collect();
        let r = LinearRealization::new(1, points).unwrap();
        match is_faithful(&k, &r).unwrap() {
            Faithfulness::Violation(nf) => assert!(!k.contains_face(&nf)),
            Faithfulness::Ok => panic!("all-zero realization cannot be faithful"),
        }
    }

    #[test]
    fn simplex_has_no_nonfaces_so_everything_is_faithful() {
        let k = fixtures::simplex(2);
        let r = moment_curve_realization(&k, 1);
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points.values().next().unwrap(), &pt(&[1]));
        assert_eq!(is_faithful(&k, &r).unwrap(), Faithfulness::Ok);
    }

    #[test]
    fn convex_sets_of_counts_generators() {
        let k = fixtures::fig1();
        let r = moment_curve_realization(&k, 3);
        let family = convex_sets_of(&k, &r).unwrap();
        let c5 = family.get(&VertexLabel::new("5").unwrap()).unwrap();
        assert_eq!(c5.len(), 3); // facets 45, 256, 35
    }

    #[test]
    fn facet_mismatch_detected() {
        let k = fixtures::fig2();
        let r = moment_curve_realization(&fixtures::path4(), 2);
        assert!(matches!(
            convex_sets_of(&k, &r),
            Err(Error::FacetMismatch(_))
        ));
    }

    #[test]
    fn mobius_moment_curve_faithful_at_guaranteed_dimension() {
        let k = fixtures::mobius();
        // dim K' = 4: vertex 2 lies in five facets with a common vertex
        let dual_dim = k.dual().unwrap().complex.dim().unwrap();
        assert_eq!(dual_dim, 4);
        let r = moment_curve_realization(&k, 2 * dual_dim as usize + 1);
        assert_eq!(is_faithful(&k, &r).unwrap(), Faithfulness::Ok);
    }
}
