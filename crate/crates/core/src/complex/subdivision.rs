//! Barycentric subdivision, points of the geometric realization, and the
//! map from |K| into |K'|.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{compound_labels, Face, SimplicialComplex, VertexLabel};
use crate::{Error, Guards, Result};

/// A chain of strictly increasing faces, i.e. a face of the barycentric
/// subdivision.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChainFace {
    chain: Vec<Face>,
}

impl ChainFace {
    pub fn new(chain: Vec<Face>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::EmptyInput);
        }
        for w in chain.windows(2) {
            if !(w[0].is_subset(&w[1]) && w[0] != w[1]) {
                return Err(Error::Parse(format!(
                    "chain not strictly increasing at {} vs {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(ChainFace { chain })
    }

    pub fn faces(&self) -> &[Face] {
        &self.chain
    }

    pub fn top(&self) -> &Face {
        self.chain.last().expect("nonempty chain")
    }

    pub fn bottom(&self) -> &Face {
        self.chain.first().expect("nonempty chain")
    }
}

/// The barycentric subdivision together with the association between its
/// vertex labels and the faces of the original complex they subdivide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    face_of: BTreeMap<VertexLabel, Face>,
    label_of: BTreeMap<Face, VertexLabel>,
}

impl Subdivision {
    pub fn face_of(&self, v: &VertexLabel) -> Option<&Face> {
        self.face_of.get(v)
    }

    pub fn label_of(&self, f: &Face) -> Option<&VertexLabel> {
        self.label_of.get(f)
    }

    /// Expresses a chain as a face of the subdivision complex.
    pub fn chain_to_face(&self, c: &ChainFace) -> Result<Face> {
        let mut labels = Vec::with_capacity(c.faces().len());
        for f in c.faces() {
            labels.push(
                self.label_of
                    .get(f)
                    .ok_or_else(|| Error::NotAFace(f.to_string()))?
                    .clone(),
            );
        }
        Ok(Face::new(labels))
    }
}

impl SimplicialComplex {
    /// Barycentric subdivision: vertices are the nonempty faces of `self`,
    /// facets are the maximal chains (the full flags of the facets).
    pub fn barycentric_subdivision(&self, guards: &Guards) -> Result<Subdivision> {
        if self.is_empty() {
            return Ok(Subdivision {
                complex: SimplicialComplex::empty(),
                face_of: BTreeMap::new(),
                label_of: BTreeMap::new(),
            });
        }
        let faces = self.faces(guards)?;
        let labels = compound_labels(&faces);
        let label_of: BTreeMap<Face, VertexLabel> =
            faces.iter().cloned().zip(labels.iter().cloned()).collect();
        let face_of: BTreeMap<VertexLabel, Face> =
            labels.into_iter().zip(faces.iter().cloned()).collect();

        // Maximal chains are the full flags of facets: one per permutation
        // of each facet's vertex set.
        let mut flag_budget = guards.max_faces;
        let mut sd_facets: Vec<Face> = Vec::new();
        for j in self.facets() {
            let verts: Vec<VertexLabel> = j.iter().cloned().collect();
            let mut perm: Vec<usize> = Vec::new();
            let mut used = vec![false; verts.len()];
            flags_rec(
                &verts,
                &mut perm,
                &mut used,
                &label_of,
                &mut sd_facets,
                &mut flag_budget,
            )?;
        }
        Ok(Subdivision {
            complex: SimplicialComplex::build(sd_facets)?,
            face_of,
            label_of,
        })
    }
}

fn flags_rec(
    verts: &[VertexLabel],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    label_of: &BTreeMap<Face, VertexLabel>,
    out: &mut Vec<Face>,
    budget: &mut usize,
) -> Result<()> {
    if perm.len() == verts.len() {
        if *budget == 0 {
            return Err(Error::SizeGuard("flag enumeration budget".into()));
        }
        *budget -= 1;
        let mut prefix: Vec<VertexLabel> = Vec::new();
        let mut labels = Vec::with_capacity(verts.len());
        for &i in perm.iter() {
            prefix.push(verts[i].clone());
            let f = Face::new(prefix.iter().cloned());
            labels.push(label_of[&f].clone());
        }
        out.push(Face::new(labels));
        return Ok(());
    }
    for i in 0..verts.len() {
        if !used[i] {
            used[i] = true;
            perm.push(i);
            flags_rec(verts, perm, used, label_of, out, budget)?;
            perm.pop();
            used[i] = false;
        }
    }
    Ok(())
}

/// A point of the geometric realization |K|: its support face and strictly
/// positive rational weights summing to one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricPoint {
    support: Face,
    weights: BTreeMap<VertexLabel, BigRational>,
}

impl GeometricPoint {
    /// Validates weights against an ambient complex: keys must form a face,
    /// all weights positive, total exactly one.
    pub fn new(
        ambient: &SimplicialComplex,
        weights: BTreeMap<VertexLabel, BigRational>,
    ) -> Result<Self> {
        let support = Face::new(weights.keys().cloned());
        if support.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !ambient.contains_face(&support) {
            return Err(Error::NotAFace(support.to_string()));
        }
        let mut total = BigRational::zero();
        for w in weights.values() {
            if *w <= BigRational::zero() {
                return Err(Error::Parse(format!("non-positive weight {w}")));
            }
            total += w;
        }
        if total != BigRational::one() {
            return Err(Error::Parse(format!("weights sum to {total}, not 1")));
        }
        Ok(GeometricPoint { support, weights })
    }

    /// The vertex `e_v` as a point.
    pub fn vertex(ambient: &SimplicialComplex, v: &VertexLabel) -> Result<Self> {
        GeometricPoint::new(ambient, BTreeMap::from([(v.clone(), BigRational::one())]))
    }

    /// The barycenter of a face.
    pub fn barycenter(ambient: &SimplicialComplex, f: &Face) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptyInput);
        }
        let share = BigRational::new(BigInt::from(1), BigInt::from(f.len() as i64));
        GeometricPoint::new(
            ambient,
            f.iter().map(|v| (v.clone(), share.clone())).collect(),
        )
    }

    pub fn support(&self) -> &Face {
        &self.support
    }

    pub fn weight(&self, v: &VertexLabel) -> Option<&BigRational> {
        self.weights.get(v)
    }

    pub fn weights(&self) -> &BTreeMap<VertexLabel, BigRational> {
        &self.weights
    }
}

/// The subdivision coordinates of a point: the chain of superlevel sets of
/// its weight function, with the weight carried by each chain face.
///
/// The chain ends at the support face, and the returned weights are
/// positive and sum to one.
pub fn subdivision_chain(x: &GeometricPoint) -> (ChainFace, Vec<BigRational>) {
    let mut values: Vec<&BigRational> = x.weights.values().collect();
    values.sort();
    values.dedup();
    values.reverse(); // descending distinct weights
    let mut chain = Vec::new();
    let mut coeffs = Vec::new();
    for (i, w) in values.iter().enumerate() {
        let level = Face::new(
            x.weights
                .iter()
                .filter(|(_, wv)| *wv >= *w)
                .map(|(v, _)| v.clone()),
        );
        let next = if i + 1 < values.len() {
            values[i + 1].clone()
        } else {
            BigRational::zero()
        };
        let size = BigRational::new(BigInt::from(level.len() as i64), BigInt::one());
        coeffs.push(size * ((*w).clone() - next));
        chain.push(level);
    }
    (
        ChainFace::new(chain).expect("superlevel sets strictly increase"),
        coeffs,
    )
}

/// The map iota from |K| into |K'|.
///
/// The image of `x` is the barycenter of `cont(supp x)`, i.e. the subdivision
/// image of the representative point of the top face of x's chain. This makes
/// the support guarantee exact at every point: each facet in the support of
/// the image contains supp(x), so supp(x) is contained in the intersection of
/// the supports of the image.
pub fn iota_point(k: &SimplicialComplex, x: &GeometricPoint) -> Result<GeometricPoint> {
    if !k.contains_face(x.support()) {
        return Err(Error::NotAFace(x.support().to_string()));
    }
    let dual = k.dual()?;
    let (chain, _) = subdivision_chain(x);
    let target = dual.cont_label(k, chain.top())?;
    GeometricPoint::barycenter(&dual.complex, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn chain_of_vertex_is_singleton() {
        let k = fixtures::fig2();
        let x = GeometricPoint::vertex(&k, &VertexLabel::new("4").unwrap()).unwrap();
        let (chain, coeffs) = subdivision_chain(&x);
        assert_eq!(chain.faces().len(), 1);
        assert_eq!(coeffs, vec![BigRational::one()]);
    }

    #[test]
    fn chain_of_skew_point_descends_to_support() {
        let k = fixtures::fig2();
        let x = GeometricPoint::new(
            &k,
            BTreeMap::from([
                (VertexLabel::new("2").unwrap(), ratio(7, 10)),
                (VertexLabel::new("5").unwrap(), ratio(3, 10)),
            ]),
        )
        .unwrap();
        let (chain, coeffs) = subdivision_chain(&x);
        assert_eq!(chain.faces().len(), 2);
        assert_eq!(chain.bottom(), &Face::of(&["2"]).unwrap());
        assert_eq!(chain.top(), x.support());
        // weights: |F1|*(7/10-3/10) = 2/5, |F2|*3/10 = 3/5
        assert_eq!(coeffs, vec![ratio(2, 5), ratio(3, 5)]);
    }

    #[test]
    fn iota_of_vertex_4_lands_on_cont_14() {
        let k = fixtures::fig2();
        let x = GeometricPoint::vertex(&k, &VertexLabel::new("4").unwrap()).unwrap();
        let y = iota_point(&k, &x).unwrap();
        assert_eq!(y.support(), &Face::of(&["14"]).unwrap());
    }

    #[test]
    fn iota_on_simplex_hits_unique_dual_vertex() {
        let k = fixtures::simplex(2);
        let x = GeometricPoint::barycenter(&k, &Face::of(&["1", "2"]).unwrap()).unwrap();
        let y = iota_point(&k, &x).unwrap();
        assert_eq!(y.support().len(), 1);
    }

    #[test]
    fn iota_of_edge_midpoint_lands_in_cont_25() {
        let k = fixtures::fig2();
        let x = GeometricPoint::barycenter(&k, &Face::of(&["2", "5"]).unwrap()).unwrap();
        let y = iota_point(&k, &x).unwrap();
        assert_eq!(y.support(), &Face::of(&["25"]).unwrap());
    }

    #[test]
    fn iota_support_guarantee_on_support_of_image() {
        // supp(x) is contained in every K-facet named by supp(iota(x))
        let k = fixtures::fig2();
        let dual = k.dual().unwrap();
        let x = GeometricPoint::new(
            &k,
            BTreeMap::from([
                (VertexLabel::new("2").unwrap(), ratio(7, 10)),
                (VertexLabel::new("5").unwrap(), ratio(3, 10)),
            ]),
        )
        .unwrap();
        let y = iota_point(&k, &x).unwrap();
        for v in y.support().iter() {
            let facet = dual.facet_of(v).unwrap();
            assert!(x.support().is_subset(facet));
        }
    }
}
