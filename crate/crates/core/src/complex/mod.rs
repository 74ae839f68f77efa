//! The canonical simplicial-complex data model.
//!
//! A complex is stored by its facet antichain only; all other faces are
//! derived lazily. Vertex labels are text tokens ordered lexicographically,
//! and every enumeration iterates in that order, so identical inputs
//! produce identical outputs everywhere downstream.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::VSet;
use crate::{Error, Guards, Result};

mod homology;
mod subdivision;

pub use homology::{betti_z2, is_d_leray, LerayCheck};
pub use subdivision::{iota_point, subdivision_chain, ChainFace, GeometricPoint};

/// A vertex name: nonempty, no whitespace, no `#` (the comment character of
/// the file format). Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(s: impl Into<String>) -> Result<Self> {
        let s = s.into();
        if s.is_empty() || s.contains(char::is_whitespace) || s.contains('#') {
            return Err(Error::BadLabel(s));
        }
        Ok(VertexLabel(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VertexLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        VertexLabel::new(s)
    }
}

impl From<VertexLabel> for String {
    fn from(v: VertexLabel) -> String {
        v.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A face: a finite set of vertex labels in canonical sorted order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Face(Vec<VertexLabel>);

impl Face {
    /// Builds a face from labels, sorting and deduplicating.
    pub fn new(labels: impl IntoIterator<Item = VertexLabel>) -> Self {
        let mut v: Vec<VertexLabel> = labels.into_iter().collect();
        v.sort();
        v.dedup();
        Face(v)
    }

    /// Convenience constructor from string slices.
    pub fn of<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let mut v = Vec::with_capacity(labels.len());
        for l in labels {
            v.push(VertexLabel::new(l.as_ref())?);
        }
        Ok(Face::new(v))
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension: |vertices| - 1, so -1 for the empty face.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        // merge walk over two sorted vectors
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(&other.0).cloned())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().filter(|v| other.contains(v)).cloned().collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().filter(|v| !other.contains(v)).cloned().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexLabel> {
        self.0.iter()
    }
}

impl TryFrom<Vec<String>> for Face {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        let mut labels = Vec::with_capacity(v.len());
        for s in v {
            labels.push(VertexLabel::new(s)?);
        }
        Ok(Face::new(labels))
    }
}

impl From<Face> for Vec<String> {
    fn from(f: Face) -> Vec<String> {
        f.0.into_iter().map(|v| v.0).collect()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simplicial complex, stored as its facet antichain.
///
/// Invariants: facets are inclusion-maximal and pairwise incomparable, the
/// vertex set is exactly the union of the facets (so every singleton is a
/// face), and both lists are sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Face>", into = "Vec<Face>")]
pub struct SimplicialComplex {
    vertices: Vec<VertexLabel>,
    facets: Vec<Face>,
}

impl TryFrom<Vec<Face>> for SimplicialComplex {
    type Error = Error;
    fn try_from(v: Vec<Face>) -> Result<Self> {
        if v.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        SimplicialComplex::build(v)
    }
}

impl From<SimplicialComplex> for Vec<Face> {
    fn from(k: SimplicialComplex) -> Vec<Face> {
        k.facets
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fc) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{fc}")?;
        }
        Ok(())
    }
}

impl SimplicialComplex {
    /// The empty complex (no vertices, no facets). Legal everywhere.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Normalizes a list of faces into a complex: keeps the inclusion-maximal
    /// ones as facets and takes the vertex set as their union. Non-maximal
    /// input faces are silently absorbed.
    pub fn build(raw: impl IntoIterator<Item = Face>) -> Result<Self> {
        let raw: Vec<Face> = raw.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.iter().any(|f| f.is_empty()) {
            return Err(Error::EmptyInput);
        }
        let mut facets: Vec<Face> = Vec::new();
        for f in &raw {
            if raw.iter().any(|g| f != g && f.is_subset(g) && !g.is_subset(f)) {
                continue;
            }
            if !facets.contains(f) {
                facets.push(f.clone());
            }
        }
        facets.sort();
        let vertices: BTreeSet<VertexLabel> =
            facets.iter().flat_map(|f| f.iter().cloned()).collect();
        Ok(SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets,
        })
    }

    /// Constructor from string-slice facets, mostly for tests and fixtures.
    pub fn from_facet_labels<S: AsRef<str>>(facets: &[&[S]]) -> Result<Self> {
        let mut faces = Vec::new();
        for f in facets {
            faces.push(Face::of(f)?);
        }
        SimplicialComplex::build(faces)
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the complex; `None` for the empty complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// Membership test: true iff `f` is contained in some facet. The empty
    /// face is a face of every complex (including the empty one).
    pub fn contains_face(&self, f: &Face) -> bool {
        if f.is_empty() {
            return true;
        }
        self.facets.iter().any(|j| f.is_subset(j))
    }

    /// All faces of dimension <= k that are maximal with this property.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        if self.is_empty() {
            return SimplicialComplex::empty();
        }
        let mut candidates: BTreeSet<Face> = BTreeSet::new();
        for j in &self.facets {
            if j.len() <= k + 1 {
                candidates.insert(j.clone());
            } else {
                for sub in subsets_of_size(j, k + 1) {
                    candidates.insert(sub);
                }
            }
        }
        SimplicialComplex::build(candidates).expect("nonempty by construction")
    }

    /// The k-skeleton of the n-dimensional simplex on vertices `1..n+1`.
    pub fn simplex_skeleton(n: usize, k: usize) -> SimplicialComplex {
        assert!(k <= n, "simplex_skeleton requires k <= n");
        let labels: Vec<VertexLabel> = (1..=n + 1)
            .map(|i| VertexLabel::new(i.to_string()).unwrap())
            .collect();
        let full = Face::new(labels);
        SimplicialComplex::build([full]).unwrap().skeleton(k)
    }

    /// Nerve of a named family of finite sets: faces are the name-sets whose
    /// members share an element. Names of empty sets are dropped.
    ///
    /// A name-set I has a common element iff I is contained in some
    /// `N_x = {names of sets containing x}`, so the facets of the nerve are
    /// exactly the maximal `N_x`.
    pub fn nerve<T: Ord>(family: &[(VertexLabel, BTreeSet<T>)]) -> Result<SimplicialComplex> {
        let mut seen = BTreeSet::new();
        for (name, _) in family {
            if !seen.insert(name) {
                return Err(Error::DuplicateName(name.to_string()));
            }
        }
        let mut occurrences: BTreeMap<&T, Vec<&VertexLabel>> = BTreeMap::new();
        for (name, set) in family {
            for x in set {
                occurrences.entry(x).or_default().push(name);
            }
        }
        let candidate_facets: Vec<Face> = occurrences
            .values()
            .map(|names| Face::new(names.iter().map(|n| (*n).clone())))
            .collect();
        if candidate_facets.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        SimplicialComplex::build(candidate_facets)
    }

    /// The dual complex: the nerve of the facet family, together with the
    /// association from dual vertices back to the facets they stand for.
    pub fn dual(&self) -> Result<Dual> {
        if self.is_empty() {
            return Err(Error::EmptyInput);
        }
        let labels = compound_labels(&self.facets);
        let family: Vec<(VertexLabel, BTreeSet<VertexLabel>)> = self
            .facets
            .iter()
            .zip(&labels)
            .map(|(j, l)| (l.clone(), j.iter().cloned().collect()))
            .collect();
        let complex = SimplicialComplex::nerve(&family)?;
        let facet_of: BTreeMap<VertexLabel, Face> =
            labels.iter().cloned().zip(self.facets.iter().cloned()).collect();
        let label_of: BTreeMap<Face, VertexLabel> =
            self.facets.iter().cloned().zip(labels).collect();
        Ok(Dual {
            complex,
            facet_of,
            label_of,
        })
    }

    /// `cont_F`: the facets containing `F`, in canonical order. This is a
    /// face of the dual complex.
    pub fn cont(&self, f: &Face) -> Result<Vec<Face>> {
        if !self.contains_face(f) {
            return Err(Error::NotAFace(f.to_string()));
        }
        Ok(self
            .facets
            .iter()
            .filter(|j| f.is_subset(j))
            .cloned()
            .collect())
    }

    /// All inclusion-minimal non-faces. Every subset of the vertex set either
    /// is a face or contains one of the returned sets; a minimal non-face has
    /// at most dim(K) + 2 vertices, which bounds the enumeration.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let ix = self.indexed();
        let n = self.vertices.len();
        let max_size = (dim + 2) as usize;
        let mut out = Vec::new();
        let mut combo = Vec::new();
        for size in 1..=max_size.min(n) {
            enumerate_combinations(n, size, &mut combo, &mut |c: &[usize]| {
                let set = VSet::from_indices(n, c.iter().copied());
                if ix.contains_set(&set) {
                    return;
                }
                // minimal iff every maximal proper subset is a face
                for drop in c {
                    let mut sub = set.clone();
                    sub.remove(*drop);
                    if !ix.contains_set(&sub) {
                        return;
                    }
                }
                out.push(ix.set_to_face(&set));
            });
        }
        out
    }

    /// The induced subcomplex on a vertex subset `W`: maximal nonempty sets
    /// of the form `W ∩ J` over facets `J`.
    pub fn induced_subcomplex(&self, w: &BTreeSet<VertexLabel>) -> Result<SimplicialComplex> {
        for v in w {
            if self.vertices.binary_search(v).is_err() {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        let mut traces: Vec<Face> = Vec::new();
        for j in &self.facets {
            let t = Face(j.0.iter().filter(|v| w.contains(v)).cloned().collect());
            if !t.is_empty() {
                traces.push(t);
            }
        }
        if traces.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        SimplicialComplex::build(traces)
    }

    /// Checks whether the complex is the clique complex of its 1-skeleton.
    /// A witness is a minimal non-face all of whose pairs are faces.
    pub fn is_clique_complex(&self) -> CliqueCheck {
        for nf in self.minimal_nonfaces() {
            if nf.len() >= 3 {
                return CliqueCheck::Witness(nf);
            }
        }
        CliqueCheck::Ok
    }

    /// Enumerates every nonempty face in canonical order, guarded by
    /// `guards.max_faces`.
    pub fn faces(&self, guards: &Guards) -> Result<Vec<Face>> {
        let ix = self.indexed();
        let sets = ix.all_face_sets(guards)?;
        let mut faces: Vec<Face> = sets.iter().map(|s| ix.set_to_face(s)).collect();
        faces.sort();
        Ok(faces)
    }

    /// Number of nonempty faces, same guard as [`faces`](Self::faces).
    pub fn face_count(&self, guards: &Guards) -> Result<usize> {
        Ok(self.indexed().all_face_sets(guards)?.len())
    }

    /// Euler characteristic (unreduced): sum of (-1)^dim over nonempty faces.
    pub fn euler_characteristic(&self, guards: &Guards) -> Result<i64> {
        let mut chi = 0i64;
        for f in self.faces(guards)? {
            chi += if f.len() % 2 == 1 { 1 } else { -1 };
        }
        Ok(chi)
    }

    pub(crate) fn indexed(&self) -> Indexed<'_> {
        let index: BTreeMap<&VertexLabel, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let facet_sets = self
            .facets
            .iter()
            .map(|f| VSet::from_indices(self.vertices.len(), f.iter().map(|v| index[v])))
            .collect();
        Indexed {
            complex: self,
            index,
            facet_sets,
        }
    }
}

/// Result of the clique-complex check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliqueCheck {
    Ok,
    Witness(Face),
}

/// A dual complex K' plus the association between its vertices and the
/// facets of K they represent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual {
    pub complex: SimplicialComplex,
    facet_of: BTreeMap<VertexLabel, Face>,
    label_of: BTreeMap<Face, VertexLabel>,
}

impl Dual {
    /// The K-facet a dual vertex stands for.
    pub fn facet_of(&self, v: &VertexLabel) -> Option<&Face> {
        self.facet_of.get(v)
    }

    /// The dual vertex representing a K-facet.
    pub fn label_of(&self, facet: &Face) -> Option<&VertexLabel> {
        self.label_of.get(facet)
    }

    pub fn associations(&self) -> impl Iterator<Item = (&VertexLabel, &Face)> {
        self.facet_of.iter()
    }

    /// Translates a dual face (set of dual vertices) into the set of
    /// K-facets it stands for.
    pub fn to_facets(&self, alpha: &Face) -> Result<Vec<Face>> {
        let mut out = Vec::with_capacity(alpha.len());
        for v in alpha.iter() {
            out.push(
                self.facet_of
                    .get(v)
                    .ok_or_else(|| Error::NotADualFace(alpha.to_string()))?
                    .clone(),
            );
        }
        Ok(out)
    }

    /// Translates a set of K-facets into a dual face.
    pub fn to_dual_face(&self, facets: &[Face]) -> Result<Face> {
        let mut labels = Vec::with_capacity(facets.len());
        for j in facets {
            labels.push(
                self.label_of
                    .get(j)
                    .ok_or_else(|| Error::NotAFace(j.to_string()))?
                    .clone(),
            );
        }
        Ok(Face::new(labels))
    }

    /// cont of a K-face, expressed as a face of the dual complex.
    pub fn cont_label(&self, k: &SimplicialComplex, f: &Face) -> Result<Face> {
        let facets = k.cont(f)?;
        self.to_dual_face(&facets)
    }
}

/// Synthesizes one label per face: single-character labels concatenate,
/// anything else joins with `-`. If the synthesized labels collide (labels
/// containing `-` can do that), falls back to positional labels `f0, f1, ..`
/// in canonical order.
pub(crate) fn compound_labels(faces: &[Face]) -> Vec<VertexLabel> {
    let single = faces
        .iter()
        .all(|f| f.iter().all(|v| v.as_str().chars().count() == 1));
    let sep = if single { "" } else { "-" };
    let joined: Vec<String> = faces
        .iter()
        .map(|f| {
            f.iter()
                .map(|v| v.as_str())
                .collect::<Vec<_>>()
                .join(sep)
        })
        .collect();
    let distinct: BTreeSet<&String> = joined.iter().collect();
    if distinct.len() == joined.len() {
        joined
            .into_iter()
            .map(|s| VertexLabel::new(s).expect("labels stay valid under join"))
            .collect()
    } else {
        (0..faces.len())
            .map(|i| VertexLabel::new(format!("f{i}")).unwrap())
            .collect()
    }
}

/// All subsets of `f` with exactly `size` vertices, in canonical order.
pub(crate) fn subsets_of_size(f: &Face, size: usize) -> Vec<Face> {
    let verts = f.vertices();
    let mut out = Vec::new();
    let mut combo = Vec::new();
    enumerate_combinations(verts.len(), size, &mut combo, &mut |c: &[usize]| {
        out.push(Face(c.iter().map(|&i| verts[i].clone()).collect()));
    });
    out
}

/// Lexicographic enumeration of `size`-combinations of `0..n`.
pub(crate) fn enumerate_combinations(
    n: usize,
    size: usize,
    combo: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if combo.len() == size {
        visit(combo);
        return;
    }
    let start = combo.last().map_or(0, |&l| l + 1);
    let remaining = size - combo.len();
    for i in start..n {
        if n - i < remaining {
            break;
        }
        combo.push(i);
        enumerate_combinations(n, size, combo, visit);
        combo.pop();
    }
}

/// Indexed view of a complex: vertices mapped to `0..n`, facets as bitsets.
pub(crate) struct Indexed<'a> {
    pub complex: &'a SimplicialComplex,
    pub index: BTreeMap<&'a VertexLabel, usize>,
    pub facet_sets: Vec<VSet>,
}

impl Indexed<'_> {
    pub fn width(&self) -> usize {
        self.complex.vertices.len()
    }

    pub fn face_set(&self, f: &Face) -> Option<VSet> {
        let mut s = VSet::empty(self.width());
        for v in f.iter() {
            s.insert(*self.index.get(v)?);
        }
        Some(s)
    }

    pub fn set_to_face(&self, s: &VSet) -> Face {
        Face(
            s.iter()
                .map(|i| self.complex.vertices[i].clone())
                .collect(),
        )
    }

    pub fn contains_set(&self, s: &VSet) -> bool {
        if s.is_empty() {
            return true;
        }
        self.facet_sets.iter().any(|j| s.is_subset(j))
    }

    /// Every nonempty face as a bitset, canonically ordered, guarded.
    pub fn all_face_sets(&self, guards: &Guards) -> Result<Vec<VSet>> {
        let mut seen: BTreeSet<VSet> = BTreeSet::new();
        for j in &self.facet_sets {
            let members: Vec<usize> = j.iter().collect();
            // enumerate nonempty subsets of this facet
            let m = members.len();
            if m > 60 {
                return Err(Error::SizeGuard(format!(
                    "facet with {m} vertices exceeds enumeration width"
                )));
            }
            for mask in 1u64..(1u64 << m) {
                let set = VSet::from_indices(
                    self.width(),
                    (0..m).filter(|b| mask >> b & 1 == 1).map(|b| members[b]),
                );
                seen.insert(set);
                if seen.len() > guards.max_faces {
                    return Err(Error::SizeGuard(format!(
                        "face enumeration exceeds {} faces",
                        guards.max_faces
                    )));
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn face(labels: &[&str]) -> Face {
        Face::of(labels).unwrap()
    }

    #[test]
    fn build_absorbs_non_maximal_faces() {
        let k = SimplicialComplex::from_facet_labels(&[&["1", "2"], &["1"], &["2", "3"]]).unwrap();
        assert_eq!(k.facets(), &[face(&["1", "2"]), face(&["2", "3"])]);
        assert_eq!(k.vertices().len(), 3);
    }

    #[test]
    fn build_rejects_empty() {
        assert!(matches!(
            SimplicialComplex::build(Vec::new()),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            SimplicialComplex::build(vec![Face::empty()]),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn fig2_shape() {
        let k = fixtures::fig2();
        assert_eq!(k.facets().len(), 4);
        assert_eq!(k.vertices().len(), 6);
        assert_eq!(k.dim(), Some(2));
    }

    #[test]
    fn mobius_shape() {
        let k = fixtures::mobius();
        assert_eq!(k.facets().len(), 8);
        assert_eq!(k.dim(), Some(2));
    }

    #[test]
    fn contains_face_cases() {
        let k = fixtures::fig2();
        assert!(k.contains_face(&face(&["1", "2", "3"])));
        assert!(!k.contains_face(&face(&["4", "5"])));
        assert!(k.contains_face(&Face::empty()));
    }

    #[test]
    fn skeleton_cases() {
        let d2 = fixtures::simplex(2);
        let sk = d2.skeleton(1);
        assert_eq!(
            sk.facets(),
            &[face(&["1", "2"]), face(&["1", "3"]), face(&["2", "3"])]
        );
        let g = fixtures::mobius().skeleton(1);
        assert_eq!(g.facets().len(), 14);
        assert_eq!(g.vertices().len(), 6);
        let z = fixtures::fig2().skeleton(0);
        assert_eq!(z.facets().len(), 6);
        assert!(z.facets().iter().all(|f| f.len() == 1));
    }

    #[test]
    fn simplex_skeleton_cases() {
        let tri = SimplicialComplex::simplex_skeleton(2, 1);
        assert_eq!(tri.facets().len(), 3);
        let k5 = SimplicialComplex::simplex_skeleton(4, 1);
        assert_eq!(k5.facets().len(), 10);
        assert_eq!(k5.vertices().len(), 5);
        let t = SimplicialComplex::simplex_skeleton(4, 2);
        assert_eq!(t.facets().len(), 10);
    }

    #[test]
    fn nerve_basic() {
        let family = vec![
            (
                VertexLabel::new("A").unwrap(),
                std::collections::BTreeSet::from([1]),
            ),
            (
                VertexLabel::new("B").unwrap(),
                std::collections::BTreeSet::from([1]),
            ),
            (
                VertexLabel::new("C").unwrap(),
                std::collections::BTreeSet::from([2]),
            ),
        ];
        let n = SimplicialComplex::nerve(&family).unwrap();
        assert_eq!(n.facets(), &[face(&["A", "B"]), face(&["C"])]);
    }

    #[test]
    fn nerve_of_facets_is_dual() {
        let k = fixtures::fig2();
        let family: Vec<(VertexLabel, std::collections::BTreeSet<VertexLabel>)> = k
            .facets()
            .iter()
            .map(|j| {
                (
                    compound_labels(std::slice::from_ref(j))[0].clone(),
                    j.iter().cloned().collect(),
                )
            })
            .collect();
        let via_nerve = SimplicialComplex::nerve(&family).unwrap();
        assert_eq!(via_nerve, k.dual().unwrap().complex);
    }

    #[test]
    fn dual_fig2_is_three_star() {
        let dual = fixtures::fig2().dual().unwrap();
        assert_eq!(
            dual.complex.facets(),
            &[
                face(&["123", "14"]),
                face(&["123", "25"]),
                face(&["123", "36"])
            ]
        );
    }

    #[test]
    fn dual_fig1_matches_seven_facets() {
        let dual = fixtures::fig1().dual().unwrap();
        let expect = [
            face(&["12", "13", "14"]),
            face(&["256", "35", "45"]),
            face(&["13", "35", "37"]),
            face(&["12", "256"]),
            face(&["14", "45"]),
            face(&["256", "67"]),
            face(&["37", "67"]),
        ];
        let mut expect = expect.to_vec();
        expect.sort();
        assert_eq!(dual.complex.facets(), expect.as_slice());
    }

    #[test]
    fn dual_of_simplex_is_point() {
        let dual = fixtures::simplex(2).dual().unwrap();
        assert_eq!(dual.complex.vertices().len(), 1);
        assert_eq!(dual.complex.facets().len(), 1);
    }

    #[test]
    fn cont_cases() {
        let k = fixtures::fig2();
        assert_eq!(
            k.cont(&face(&["1"])).unwrap(),
            vec![face(&["1", "2", "3"]), face(&["1", "4"])]
        );
        assert_eq!(k.cont(&face(&["4"])).unwrap(), vec![face(&["1", "4"])]);
        let d2 = fixtures::simplex(2);
        assert_eq!(
            d2.cont(&face(&["2"])).unwrap(),
            vec![face(&["1", "2", "3"])]
        );
        assert!(matches!(
            k.cont(&face(&["4", "5"])),
            Err(Error::NotAFace(_))
        ));
    }

    #[test]
    fn sd_cases() {
        let g = Guards::default();
        let d1 = SimplicialComplex::from_facet_labels(&[&["1", "2"]]).unwrap();
        let sd = d1.barycentric_subdivision(&g).unwrap();
        assert_eq!(sd.complex.facets().len(), 2);
        assert_eq!(sd.complex.vertices().len(), 3);

        let spider = fixtures::spider();
        assert_eq!(spider.vertices().len(), 7);
        assert_eq!(spider.facets().len(), 6);
        assert!(spider.facets().iter().all(|f| f.len() == 2));

        let d2 = fixtures::simplex(2);
        let sd2 = d2.barycentric_subdivision(&g).unwrap();
        assert_eq!(sd2.complex.facets().len(), 6);
        assert!(sd2.complex.facets().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn sd_preserves_euler_characteristic() {
        let g = Guards::default();
        for k in [
            fixtures::fig1(),
            fixtures::fig2(),
            fixtures::mobius(),
            fixtures::boundary_triangle(),
        ] {
            let sd = k.barycentric_subdivision(&g).unwrap();
            assert_eq!(
                k.euler_characteristic(&g).unwrap(),
                sd.complex.euler_characteristic(&g).unwrap()
            );
        }
    }

    #[test]
    fn minimal_nonfaces_cases() {
        let nf = fixtures::fig2().minimal_nonfaces();
        let expect: Vec<Face> = [
            ["1", "5"],
            ["1", "6"],
            ["2", "4"],
            ["2", "6"],
            ["3", "4"],
            ["3", "5"],
            ["4", "5"],
            ["4", "6"],
            ["5", "6"],
        ]
        .iter()
        .map(|p| face(&p[..]))
        .collect();
        assert_eq!(nf, expect);
        assert!(fixtures::simplex(2).minimal_nonfaces().is_empty());
        assert_eq!(
            fixtures::boundary_triangle().minimal_nonfaces(),
            vec![face(&["1", "2", "3"])]
        );
    }

    #[test]
    fn nonfaces_cover_all_nonfaces() {
        // every subset of V is a face xor contains a minimal non-face
        for k in [fixtures::fig2(), fixtures::mobius(), fixtures::fig1()] {
            let nf = k.minimal_nonfaces();
            let n = k.vertices().len();
            for mask in 1u64..(1 << n) {
                let f = Face::new(
                    (0..n)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| k.vertices()[i].clone()),
                );
                let covered = nf.iter().any(|m| m.is_subset(&f));
                assert!(k.contains_face(&f) ^ covered, "failed at {f}");
            }
        }
    }

    #[test]
    fn induced_cases() {
        let k = fixtures::fig2();
        let w = ["4", "5", "6"]
            .iter()
            .map(|s| VertexLabel::new(*s).unwrap())
            .collect();
        let sub = k.induced_subcomplex(&w).unwrap();
        assert_eq!(sub.facets().len(), 3);
        assert!(sub.facets().iter().all(|f| f.len() == 1));

        let all = k.vertices().iter().cloned().collect();
        assert_eq!(k.induced_subcomplex(&all).unwrap(), k);

        let m = fixtures::mobius();
        let w = ["1", "2", "4"]
            .iter()
            .map(|s| VertexLabel::new(*s).unwrap())
            .collect();
        let sub = m.induced_subcomplex(&w).unwrap();
        assert_eq!(sub.facets(), &[face(&["1", "2", "4"])]);

        let bad = [VertexLabel::new("zz").unwrap()].into_iter().collect();
        assert!(matches!(
            k.induced_subcomplex(&bad),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn clique_check_cases() {
        assert_eq!(
            fixtures::boundary_triangle().is_clique_complex(),
            CliqueCheck::Witness(face(&["1", "2", "3"]))
        );
        assert_eq!(fixtures::fig2().is_clique_complex(), CliqueCheck::Ok);
        assert_eq!(fixtures::path4().is_clique_complex(), CliqueCheck::Ok);
    }

    #[test]
    fn compound_label_fallback() {
        // labels containing '-' can collide after joining; fall back to
        // positional names
        let f1 = face(&["a-b"]);
        let f2 = face(&["a", "b"]);
        let labels = compound_labels(&[f1, f2]);
        assert_eq!(labels.len(), 2);
        assert_ne!(labels[0], labels[1]);
    }
}
