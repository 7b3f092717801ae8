//! Dual intersection complex of a strictly semistable special fiber.
//!
//! Vertices `1..=ell` are the irreducible components of the special fiber and
//! each stratum carries an ordered vertex list. In simplicial mode a stratum is
//! determined by its vertex set; in delta mode several strata may share one
//! (distinct connected components of the same intersection), and the face
//! relation has to be supplied explicitly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{is_barycentric, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StratumId(pub usize);

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexMode {
    Simplicial,
    Delta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub id: StratumId,
    pub name: String,
    /// Ordered component indices `(j_1, ..., j_r)`; barycentric data refers to this order.
    pub vertices: Vec<usize>,
}

impl Stratum {
    pub fn dim(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.vertices.iter().copied().collect()
    }

    /// Slot `a` (0-based) of component `j` in this stratum's vertex order.
    pub fn slot_of(&self, j: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("facet {facet:?} has {size} vertices, exceeding d+1 = {max}")]
    FacetTooLarge {
        facet: Vec<usize>,
        size: usize,
        max: usize,
    },
    #[error("vertex {vertex} out of range 1..={ell}")]
    VertexOutOfRange { vertex: usize, ell: usize },
    #[error("empty facet")]
    EmptyFacet,
    #[error("facet {0:?} repeats a vertex")]
    RepeatedVertex(Vec<usize>),
    #[error("duplicate stratum name {0:?}")]
    DuplicateName(String),
    #[error("unknown stratum {0:?}")]
    UnknownStratum(String),
    #[error("{0} is not a stratum of this complex")]
    UnknownId(StratumId),
    #[error("relative dimension must be at least 1")]
    ZeroDimension,
    #[error("barycentric vector of length {got} for a stratum with {expected} vertices")]
    PointLength { expected: usize, got: usize },
    #[error("coordinates must be nonnegative and sum to one")]
    NotBarycentric,
    #[error("{face} is not a face of {stratum}")]
    NotAFace { face: String, stratum: String },
    #[error("coordinate of vertex {vertex} is nonzero but the vertex is not in the target face")]
    NonzeroOutsideFace { vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    VertexOutOfRange,
    EmptyStratum,
    RepeatedVertex,
    DimensionExceeded,
    MissingVertexStratum,
    DuplicateVertexStratum,
    RepeatedVertexSet,
    FaceMapIncomplete,
    FaceMapExtraneous,
    FaceVertexMismatch,
    FaceMapInconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub stratum: Option<String>,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.stratum {
            Some(s) => write!(f, "[{:?}] stratum {s}: {}", self.rule, self.detail),
            None => write!(f, "[{:?}] {}", self.rule, self.detail),
        }
    }
}

/// Face map key: ambient stratum plus the sorted vertex subset.
pub type FaceKey = (StratumId, Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualComplex {
    ell: usize,
    dim_bound: usize,
    mode: ComplexMode,
    strata: Vec<Stratum>,
    face_map: BTreeMap<FaceKey, StratumId>,
}

/// Nonempty proper subsets of a sorted vertex list, each sorted.
fn proper_subsets(vertices: &[usize]) -> Vec<Vec<usize>> {
    let r = vertices.len();
    (1..(1usize << r) - 1)
        .map(|mask| {
            (0..r)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| vertices[b])
                .collect()
        })
        .collect()
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

pub fn simplicial_name(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("-")
}

impl DualComplex {
    /// Face-closed simplicial complex generated by `facets`, one stratum per
    /// nonempty subset of a facet. Vertices that occur in no facet are added
    /// as isolated 0-strata so that every component has its vertex.
    pub fn build_from_facets(
        ell: usize,
        d: usize,
        facets: &[Vec<usize>],
    ) -> Result<Self, ComplexError> {
        if d == 0 {
            return Err(ComplexError::ZeroDimension);
        }
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in facets {
            if facet.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            if let Some(&vertex) = facet.iter().find(|&&v| v == 0 || v > ell) {
                return Err(ComplexError::VertexOutOfRange { vertex, ell });
            }
            let s = sorted(facet);
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::RepeatedVertex(facet.clone()));
            }
            if s.len() > d + 1 {
                return Err(ComplexError::FacetTooLarge {
                    facet: facet.clone(),
                    size: s.len(),
                    max: d + 1,
                });
            }
            sets.insert(s.clone());
            sets.extend(proper_subsets(&s));
        }
        sets.extend((1..=ell).map(|v| vec![v]));
        let mut strata: Vec<Vec<usize>> = sets.into_iter().collect();
        strata.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

        let index: BTreeMap<Vec<usize>, StratumId> = strata
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), StratumId(i)))
            .collect();
        let mut face_map = BTreeMap::new();
        for (i, v) in strata.iter().enumerate() {
            for sub in proper_subsets(v) {
                let face = index[&sub];
                face_map.insert((StratumId(i), sub), face);
            }
        }
        let strata = strata
            .into_iter()
            .enumerate()
            .map(|(i, vertices)| Stratum {
                id: StratumId(i),
                name: simplicial_name(&vertices),
                vertices,
            })
            .collect();
        Ok(Self {
            ell,
            dim_bound: d,
            mode: ComplexMode::Simplicial,
            strata,
            face_map,
        })
    }

    /// Assembles a complex from named strata and an explicit face map given
    /// as `(stratum, subset, face)` triples. No invariants beyond name
    /// resolution are checked here; run [`DualComplex::validate`].
    ///
    /// Strata are re-indexed in canonical order: by size, then sorted vertex
    /// set, then name.
    pub fn from_parts(
        ell: usize,
        d: usize,
        mode: ComplexMode,
        strata: &[(String, Vec<usize>)],
        faces: &[(String, Vec<usize>, String)],
    ) -> Result<Self, ComplexError> {
        if d == 0 {
            return Err(ComplexError::ZeroDimension);
        }
        let mut order: Vec<usize> = (0..strata.len()).collect();
        order.sort_by(|&a, &b| {
            let (na, va) = &strata[a];
            let (nb, vb) = &strata[b];
            va.len()
                .cmp(&vb.len())
                .then_with(|| sorted(va).cmp(&sorted(vb)))
                .then_with(|| na.cmp(nb))
        });
        let mut by_name: BTreeMap<&str, StratumId> = BTreeMap::new();
        let mut out = Vec::with_capacity(strata.len());
        for (new, &old) in order.iter().enumerate() {
            let (name, vertices) = &strata[old];
            if by_name.insert(name.as_str(), StratumId(new)).is_some() {
                return Err(ComplexError::DuplicateName(name.clone()));
            }
            out.push(Stratum {
                id: StratumId(new),
                name: name.clone(),
                vertices: vertices.clone(),
            });
        }
        let lookup = |n: &String| {
            by_name
                .get(n.as_str())
                .copied()
                .ok_or_else(|| ComplexError::UnknownStratum(n.clone()))
        };
        let mut face_map = BTreeMap::new();
        for (s, subset, f) in faces {
            face_map.insert((lookup(s)?, sorted(subset)), lookup(f)?);
        }
        Ok(Self {
            ell,
            dim_bound: d,
            mode,
            strata: out,
            face_map,
        })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    pub fn mode(&self) -> ComplexMode {
        self.mode
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, id: StratumId) -> &Stratum {
        &self.strata[id.0]
    }

    pub fn get(&self, id: StratumId) -> Result<&Stratum, ComplexError> {
        self.strata.get(id.0).ok_or(ComplexError::UnknownId(id))
    }

    pub fn by_name(&self, name: &str) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.name == name)
    }

    pub fn face_map(&self) -> &BTreeMap<FaceKey, StratumId> {
        &self.face_map
    }

    /// The face of `s` on the given vertex subset (any order).
    pub fn face(&self, s: StratumId, subset: &[usize]) -> Option<StratumId> {
        let key = sorted(subset);
        if key == sorted(&self.stratum(s).vertices) {
            return Some(s);
        }
        self.face_map.get(&(s, key)).copied()
    }

    /// Whether `t` is a face of `s` (every stratum is a face of itself).
    pub fn is_face(&self, t: StratumId, s: StratumId) -> bool {
        t == s || self.face(s, &self.stratum(t).vertices) == Some(t)
    }

    /// The 0-stratum of component `j`, if present.
    pub fn vertex_stratum(&self, j: usize) -> Option<StratumId> {
        self.strata.iter().find(|s| s.vertices == [j]).map(|s| s.id)
    }

    /// Components `i != j` that span an edge, i.e. lie together in some stratum.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j
            && self
                .strata
                .iter()
                .any(|s| s.vertices.contains(&i) && s.vertices.contains(&j))
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for s in &self.strata {
            for (a, &i) in s.vertices.iter().enumerate() {
                for &j in &s.vertices[a + 1..] {
                    out.insert((i.min(j), i.max(j)));
                }
            }
        }
        out
    }

    /// Connected components of the 1-skeleton, as sorted vertex lists.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.ell).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (i, j) in self.edges() {
            if i <= self.ell && j <= self.ell {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=self.ell {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Every invariant violation, in deterministic order. Empty iff the complex is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |s: Option<&Stratum>, rule, detail: String| {
            out.push(Violation {
                stratum: s.map(|s| s.name.clone()),
                rule,
                detail,
            })
        };

        let mut shape_ok = vec![true; self.strata.len()];
        for s in &self.strata {
            if s.vertices.is_empty() {
                push(Some(s), Rule::EmptyStratum, "no vertices".into());
                shape_ok[s.id.0] = false;
                continue;
            }
            for &v in &s.vertices {
                if v == 0 || v > self.ell {
                    push(
                        Some(s),
                        Rule::VertexOutOfRange,
                        format!("vertex {v} outside 1..={}", self.ell),
                    );
                    shape_ok[s.id.0] = false;
                }
            }
            if sorted(&s.vertices).windows(2).any(|w| w[0] == w[1]) {
                push(Some(s), Rule::RepeatedVertex, format!("{:?}", s.vertices));
                shape_ok[s.id.0] = false;
            }
            if s.vertices.len() > self.dim_bound + 1 {
                push(
                    Some(s),
                    Rule::DimensionExceeded,
                    format!(
                        "{} vertices but relative dimension is {}",
                        s.vertices.len(),
                        self.dim_bound
                    ),
                );
            }
        }

        for j in 1..=self.ell {
            let n = self.strata.iter().filter(|s| s.vertices == [j]).count();
            if n == 0 {
                push(
                    None,
                    Rule::MissingVertexStratum,
                    format!("component {j} has no 0-stratum"),
                );
            } else if n > 1 {
                push(
                    None,
                    Rule::DuplicateVertexStratum,
                    format!("component {j} has {n} 0-strata"),
                );
            }
        }

        if self.mode == ComplexMode::Simplicial {
            let mut seen: BTreeMap<Vec<usize>, &str> = BTreeMap::new();
            for s in &self.strata {
                if let Some(prev) = seen.insert(sorted(&s.vertices), &s.name) {
                    push(
                        Some(s),
                        Rule::RepeatedVertexSet,
                        format!("shares its vertex set with {prev} in simplicial mode"),
                    );
                }
            }
        }

        for ((sid, subset), &fid) in &self.face_map {
            let (Some(s), Some(f)) = (self.strata.get(sid.0), self.strata.get(fid.0)) else {
                push(
                    None,
                    Rule::FaceMapExtraneous,
                    format!("entry {sid} -> {fid} refers to no stratum"),
                );
                continue;
            };
            let vs = s.vertex_set();
            let proper = !subset.is_empty()
                && subset.len() < vs.len()
                && subset.iter().all(|v| vs.contains(v));
            if !proper {
                push(
                    Some(s),
                    Rule::FaceMapExtraneous,
                    format!("{subset:?} is not a nonempty proper subset"),
                );
            } else if sorted(&f.vertices) != *subset {
                push(
                    Some(s),
                    Rule::FaceVertexMismatch,
                    format!(
                        "face on {subset:?} is {} with vertices {:?}",
                        f.name, f.vertices
                    ),
                );
            }
        }

        for s in self.strata.iter().filter(|s| shape_ok[s.id.0]) {
            for sub in proper_subsets(&sorted(&s.vertices)) {
                if !self.face_map.contains_key(&(s.id, sub.clone())) {
                    push(
                        Some(s),
                        Rule::FaceMapIncomplete,
                        format!("no face recorded on {sub:?}"),
                    );
                }
            }
        }

        // face of a face agrees
        for ((sid, a), &fa) in &self.face_map {
            let Some(face) = self.strata.get(fa.0) else {
                continue;
            };
            if sorted(&face.vertices) != *a {
                continue;
            }
            for b in proper_subsets(a) {
                let direct = self.face_map.get(&(*sid, b.clone()));
                let nested = self.face_map.get(&(fa, b.clone()));
                if let (Some(x), Some(y)) = (direct, nested) {
                    if x != y {
                        push(
                            Some(&self.strata[sid.0]),
                            Rule::FaceMapInconsistent,
                            format!(
                                "face on {b:?} is {} directly but {} through {}",
                                self.strata[x.0].name, self.strata[y.0].name, face.name
                            ),
                        );
                    }
                }
            }
        }
        out
    }
}

/// A point `(u_1, ..., u_r)` of the canonical simplex of a stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexPoint {
    pub stratum: StratumId,
    pub u: Vec<Rational>,
}

impl SimplexPoint {
    pub fn new(
        complex: &DualComplex,
        stratum: StratumId,
        u: Vec<Rational>,
    ) -> Result<Self, ComplexError> {
        let s = complex.get(stratum)?;
        if u.len() != s.vertices.len() {
            return Err(ComplexError::PointLength {
                expected: s.vertices.len(),
                got: u.len(),
            });
        }
        if !is_barycentric(&u) {
            return Err(ComplexError::NotBarycentric);
        }
        Ok(Self { stratum, u })
    }

    /// The vertex `v_{j_a}` of a stratum.
    pub fn vertex(complex: &DualComplex, stratum: StratumId, slot: usize) -> Self {
        let r = complex.stratum(stratum).vertices.len();
        let mut u = vec![Rational::zero(); r];
        u[slot] = Rational::from_integer(1.into());
        Self { stratum, u }
    }

    pub fn in_relint(&self) -> bool {
        self.u.iter().all(Signed::is_positive)
    }

    /// Re-expresses the point on the face `target` of its stratum, with
    /// coordinates in the face's own vertex order.
    pub fn restrict_to_face(
        &self,
        complex: &DualComplex,
        target: StratumId,
    ) -> Result<SimplexPoint, ComplexError> {
        let s = complex.get(self.stratum)?;
        let t = complex.get(target)?;
        if !complex.is_face(target, self.stratum) {
            return Err(ComplexError::NotAFace {
                face: t.name.clone(),
                stratum: s.name.clone(),
            });
        }
        for (a, &j) in s.vertices.iter().enumerate() {
            if !self.u[a].is_zero() && t.slot_of(j).is_none() {
                return Err(ComplexError::NonzeroOutsideFace { vertex: j });
            }
        }
        let u = t
            .vertices
            .iter()
            .map(|&j| self.u[s.slot_of(j).expect("face vertex lies in stratum")].clone())
            .collect();
        Ok(SimplexPoint { stratum: target, u })
    }

    /// The unique stratum whose relative interior contains this point, with
    /// the point expressed there.
    pub fn carrier(&self, complex: &DualComplex) -> Result<SimplexPoint, ComplexError> {
        let s = complex.get(self.stratum)?;
        let support: Vec<usize> = s
            .vertices
            .iter()
            .zip(&self.u)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&j, _)| j)
            .collect();
        let face = complex
            .face(self.stratum, &support)
            .ok_or_else(|| ComplexError::NotAFace {
                face: format!("{support:?}"),
                stratum: s.name.clone(),
            })?;
        self.restrict_to_face(complex, face)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn names(c: &DualComplex) -> Vec<String> {
        c.strata().iter().map(|s| s.name.clone()).collect()
    }

    #[test]
    fn single_edge() {
        let c = DualComplex::build_from_facets(2, 1, &[vec![1, 2]]).unwrap();
        assert_eq!(names(&c), ["1", "2", "1-2"]);
        assert!(c.validate().is_empty());
    }

    #[test]
    fn triangle_boundary() {
        let c =
            DualComplex::build_from_facets(3, 1, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(names(&c), ["1", "2", "3", "1-2", "1-3", "2-3"]);
        assert!(c.validate().is_empty());
        assert!(c.is_connected());
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let c = DualComplex::build_from_facets(5, 2, &[vec![1, 2, 3], vec![3, 4, 5]]).unwrap();
        assert_eq!(c.strata().len(), 13);
    }

    #[test]
    fn builder_errors() {
        assert!(matches!(
            DualComplex::build_from_facets(3, 1, &[vec![1, 2, 3]]),
            Err(ComplexError::FacetTooLarge {
                size: 3,
                max: 2,
                ..
            })
        ));
        assert!(matches!(
            DualComplex::build_from_facets(2, 1, &[vec![1, 3]]),
            Err(ComplexError::VertexOutOfRange { vertex: 3, ell: 2 })
        ));
        assert!(matches!(
            DualComplex::build_from_facets(2, 1, &[vec![0]]),
            Err(ComplexError::VertexOutOfRange { vertex: 0, .. })
        ));
    }

    #[test]
    fn isolated_vertices_are_added() {
        let c = DualComplex::build_from_facets(3, 1, &[vec![1, 2]]).unwrap();
        assert_eq!(names(&c), ["1", "2", "3", "1-2"]);
        assert!(!c.is_connected());
        assert_eq!(c.connected_components(), vec![vec![1, 2], vec![3]]);
    }

    type Parts = (Vec<(String, Vec<usize>)>, Vec<(String, Vec<usize>, String)>);

    fn edge_parts() -> Parts {
        let strata = vec![
            ("a".to_string(), vec![1]),
            ("b".to_string(), vec![2]),
            ("e".to_string(), vec![1, 2]),
        ];
        let faces = vec![
            ("e".to_string(), vec![1], "a".to_string()),
            ("e".to_string(), vec![2], "b".to_string()),
        ];
        (strata, faces)
    }

    #[test]
    fn missing_face_is_one_violation() {
        let (strata, mut faces) = edge_parts();
        faces.remove(0);
        let c = DualComplex::from_parts(2, 1, ComplexMode::Delta, &strata, &faces).unwrap();
        let v = c.validate();
        assert_eq!(v.len(), 1, "{v:?}");
        assert_eq!(v[0].rule, Rule::FaceMapIncomplete);
        assert_eq!(v[0].stratum.as_deref(), Some("e"));
    }

    #[test]
    fn two_edges_on_one_vertex_set_is_a_legal_delta_complex() {
        let (mut strata, mut faces) = edge_parts();
        strata.push(("f".to_string(), vec![2, 1]));
        faces.push(("f".to_string(), vec![1], "a".to_string()));
        faces.push(("f".to_string(), vec![2], "b".to_string()));
        let c = DualComplex::from_parts(2, 1, ComplexMode::Delta, &strata, &faces).unwrap();
        assert!(c.validate().is_empty());
        let simplicial =
            DualComplex::from_parts(2, 1, ComplexMode::Simplicial, &strata, &faces).unwrap();
        assert_eq!(simplicial.validate()[0].rule, Rule::RepeatedVertexSet);
    }

    #[test]
    fn wrong_face_target_and_inconsistency() {
        let strata = vec![
            ("1".to_string(), vec![1]),
            ("2".to_string(), vec![2]),
            ("3".to_string(), vec![3]),
            ("12".to_string(), vec![1, 2]),
            ("12b".to_string(), vec![1, 2]),
            ("13".to_string(), vec![1, 3]),
            ("23".to_string(), vec![2, 3]),
            ("t".to_string(), vec![1, 2, 3]),
        ];
        let mut faces = Vec::new();
        for (e, a, b) in [("12", 1, 2), ("12b", 1, 2), ("13", 1, 3), ("23", 2, 3)] {
            faces.push((e.to_string(), vec![a], a.to_string()));
            faces.push((e.to_string(), vec![b], b.to_string()));
        }
        for (sub, f) in [(vec![1, 2], "12"), (vec![1, 3], "13"), (vec![2, 3], "23")] {
            faces.push(("t".to_string(), sub, f.to_string()));
        }
        for v in 1..=3 {
            faces.push(("t".to_string(), vec![v], v.to_string()));
        }
        let c = DualComplex::from_parts(3, 2, ComplexMode::Delta, &strata, &faces).unwrap();
        assert!(c.validate().is_empty());

        // point the {1} face of "t" at vertex 2: mismatch
        let mut bad = faces.clone();
        let k = bad
            .iter()
            .position(|(s, sub, _)| s == "t" && sub == &vec![1])
            .unwrap();
        bad[k].2 = "2".to_string();
        let c = DualComplex::from_parts(3, 2, ComplexMode::Delta, &strata, &bad).unwrap();
        let rules: Vec<Rule> = c.validate().iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::FaceVertexMismatch), "{rules:?}");
    }

    #[test]
    fn face_of_face_inconsistency() {
        // "12b"'s vertex 1 face is a second 0-stratum on {1}
        let strata = vec![
            ("1".to_string(), vec![1]),
            ("1x".to_string(), vec![1]),
            ("2".to_string(), vec![2]),
            ("12".to_string(), vec![1, 2]),
            ("t".to_string(), vec![1, 2, 3]),
            ("3".to_string(), vec![3]),
            ("13".to_string(), vec![1, 3]),
            ("23".to_string(), vec![2, 3]),
        ];
        let mut faces = vec![
            ("12".to_string(), vec![1], "1x".to_string()),
            ("12".to_string(), vec![2], "2".to_string()),
            ("13".to_string(), vec![1], "1".to_string()),
            ("13".to_string(), vec![3], "3".to_string()),
            ("23".to_string(), vec![2], "2".to_string()),
            ("23".to_string(), vec![3], "3".to_string()),
            ("t".to_string(), vec![1, 2], "12".to_string()),
            ("t".to_string(), vec![1, 3], "13".to_string()),
            ("t".to_string(), vec![2, 3], "23".to_string()),
        ];
        for v in 1..=3 {
            faces.push(("t".to_string(), vec![v], v.to_string()));
        }
        let c = DualComplex::from_parts(3, 2, ComplexMode::Delta, &strata, &faces).unwrap();
        let rules: Vec<Rule> = c.validate().iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::FaceMapInconsistent), "{rules:?}");
        assert!(rules.contains(&Rule::DuplicateVertexStratum), "{rules:?}");
    }

    #[test]
    fn from_parts_name_errors() {
        let strata = vec![("a".to_string(), vec![1]), ("a".to_string(), vec![2])];
        assert!(matches!(
            DualComplex::from_parts(2, 1, ComplexMode::Delta, &strata, &[]),
            Err(ComplexError::DuplicateName(_))
        ));
        let strata = vec![("a".to_string(), vec![1])];
        let faces = vec![("a".to_string(), vec![1], "zz".to_string())];
        assert!(matches!(
            DualComplex::from_parts(1, 1, ComplexMode::Delta, &strata, &faces),
            Err(ComplexError::UnknownStratum(_))
        ));
    }

    #[test]
    fn relint_membership() {
        let c = DualComplex::build_from_facets(3, 2, &[vec![1, 2, 3]]).unwrap();
        let edge = c.by_name("1-2").unwrap().id;
        let tri = c.by_name("1-2-3").unwrap().id;
        assert!(SimplexPoint::new(&c, edge, vec![rat(1, 2), rat(1, 2)])
            .unwrap()
            .in_relint());
        assert!(!SimplexPoint::new(&c, edge, vec![rat(1, 1), rat(0, 1)])
            .unwrap()
            .in_relint());
        let third = vec![rat(1, 3); 3];
        assert!(SimplexPoint::new(&c, tri, third).unwrap().in_relint());
        assert!(SimplexPoint::new(&c, tri, vec![rat(1, 2); 3]).is_err());
        assert!(SimplexPoint::new(&c, tri, vec![rat(1, 2); 2]).is_err());
    }

    #[test]
    fn face_restriction_examples() {
        let c = DualComplex::build_from_facets(3, 2, &[vec![1, 2, 3]]).unwrap();
        let tri = c.by_name("1-2-3").unwrap().id;
        let e12 = c.by_name("1-2").unwrap().id;
        let v1 = c.by_name("1").unwrap().id;

        let p = SimplexPoint::new(&c, tri, vec![rat(1, 2), rat(1, 2), rat(0, 1)]).unwrap();
        let q = p.restrict_to_face(&c, e12).unwrap();
        assert_eq!(q.u, vec![rat(1, 2), rat(1, 2)]);

        let p = SimplexPoint::new(&c, e12, vec![rat(1, 1), rat(0, 1)]).unwrap();
        assert_eq!(p.restrict_to_face(&c, v1).unwrap().u, vec![rat(1, 1)]);

        let p = SimplexPoint::new(&c, tri, vec![rat(1, 3); 3]).unwrap();
        assert!(matches!(
            p.restrict_to_face(&c, e12),
            Err(ComplexError::NonzeroOutsideFace { vertex: 3 })
        ));
    }

    #[test]
    fn restriction_reorders_to_face_vertex_order() {
        let strata = vec![
            ("1".to_string(), vec![1]),
            ("2".to_string(), vec![2]),
            ("e".to_string(), vec![2, 1]),
            ("big".to_string(), vec![1, 2]),
        ];
        let faces = vec![
            ("e".to_string(), vec![1], "1".to_string()),
            ("e".to_string(), vec![2], "2".to_string()),
            ("big".to_string(), vec![1], "1".to_string()),
            ("big".to_string(), vec![2], "2".to_string()),
        ];
        let c = DualComplex::from_parts(2, 1, ComplexMode::Delta, &strata, &faces).unwrap();
        let e = c.by_name("e").unwrap().id;
        let p = SimplexPoint::new(&c, e, vec![rat(1, 4), rat(3, 4)]).unwrap();
        assert_eq!(p.carrier(&c).unwrap(), p);
        let v = SimplexPoint::vertex(&c, e, 1);
        assert_eq!(v.carrier(&c).unwrap().stratum, c.by_name("1").unwrap().id);
    }
}
