//! Finite abstract simplicial complexes presented by their facets.
//!
//! A complex is stored as an antichain of facets over nonnegative integer
//! labels. The void complex (no faces at all) and the irrelevant complex
//! (only the empty face) are distinct values.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("negative vertex label {0}")]
    NegativeLabel(i64),
    #[error("vertex label {0} does not fit in 32 bits")]
    LabelOverflow(i64),
    #[error("operation is undefined on the void complex")]
    Void,
    #[error("omega complex needs n >= t >= 1, got n = {n}, t = {t}")]
    OmegaRange { n: usize, t: usize },
    #[error("boundary complex needs n >= 1")]
    EmptyBoundary,
    #[error("complex has more than {cap} faces")]
    TooManyFaces { cap: usize },
}

/// A face, stored as a strictly increasing list of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        let mut v: Vec<u32> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension of the face; the empty face has dimension -1.
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        // both sorted: merge walk
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// The face with the vertex at `position` removed.
    pub fn without_position(&self, position: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(position);
        Face(v)
    }
}

impl FromIterator<u32> for Face {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Face::new(iter)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// An immutable simplicial complex given by its facets.
///
/// `vertex_universe` always contains every vertex of every facet and may
/// hold extra labels (for instance `{1,..,n}` for the omega complexes even
/// when some label lies in no facet). Equality ignores the universe: two
/// complexes are equal when they have the same faces.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_universe: BTreeSet<u32>,
    facets: Vec<Face>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The complex with no faces.
    pub fn void() -> Self {
        SimplicialComplex { vertex_universe: BTreeSet::new(), facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn irrelevant() -> Self {
        SimplicialComplex { vertex_universe: BTreeSet::new(), facets: vec![Face::empty()] }
    }

    /// The full simplex on the given vertices. An empty vertex list gives
    /// the irrelevant complex.
    pub fn simplex<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        Self::from_facets([Face::new(vertices)])
    }

    /// Generates the complex spanned by `candidates`, dropping duplicates
    /// and every candidate contained in another one.
    pub fn from_facets<I: IntoIterator<Item = Face>>(candidates: I) -> Self {
        let mut sorted: Vec<Face> = candidates.into_iter().collect();
        // larger faces first so absorption only looks backwards
        sorted.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sorted.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(sorted.len());
        for cand in sorted {
            if !facets.iter().any(|f| cand.is_subset(f)) {
                facets.push(cand);
            }
        }
        facets.sort();
        let vertex_universe = facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        SimplicialComplex { vertex_universe, facets }
    }

    /// Checked construction from signed labels.
    pub fn make_complex<I, F>(candidates: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = i64>,
    {
        let mut faces = Vec::new();
        for cand in candidates {
            let mut verts = Vec::new();
            for v in cand {
                if v < 0 {
                    return Err(ComplexError::NegativeLabel(v));
                }
                verts.push(u32::try_from(v).map_err(|_| ComplexError::LabelOverflow(v))?);
            }
            faces.push(Face::new(verts));
        }
        Ok(Self::from_facets(faces))
    }

    /// Adds bookkeeping labels to the vertex universe without changing faces.
    pub fn with_universe<I: IntoIterator<Item = u32>>(mut self, labels: I) -> Self {
        self.vertex_universe.extend(labels);
        self
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertex_universe(&self) -> &BTreeSet<u32> {
        &self.vertex_universe
    }

    /// Vertices lying in at least one facet.
    pub fn vertices(&self) -> BTreeSet<u32> {
        self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// True when the complex has exactly one facet.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Largest face dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(Face::dim).max()
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// All faces with exactly `p + 1` vertices, in lexicographic order.
    pub fn enumerate_faces(&self, p: i64) -> Vec<Face> {
        if p < -1 {
            return Vec::new();
        }
        let size = (p + 1) as usize;
        let mut out = BTreeSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= size) {
            for combo in f.vertices().iter().copied().combinations(size) {
                out.insert(Face(combo));
            }
        }
        out.into_iter().collect()
    }

    /// Faces grouped by dimension: entry `k` holds the faces of dimension
    /// `k - 1`. Fails once more than `cap` faces would be produced.
    pub fn faces_by_dimension(&self, cap: usize) -> Result<Vec<Vec<Face>>, ComplexError> {
        let Some(top) = self.dim() else {
            return Ok(Vec::new());
        };
        if top + 1 >= usize::BITS as i64 || (1usize << (top + 1)) > cap {
            return Err(ComplexError::TooManyFaces { cap });
        }
        let mut total = 0usize;
        let mut layers = Vec::with_capacity((top + 2) as usize);
        for p in -1..=top {
            let faces = self.enumerate_faces(p);
            total += faces.len();
            if total > cap {
                return Err(ComplexError::TooManyFaces { cap });
            }
            layers.push(faces);
        }
        Ok(layers)
    }

    /// Smallest vertex lying in every facet, if any.
    pub fn is_cone(&self) -> Result<Option<u32>, ComplexError> {
        let (first, rest) = self.facets.split_first().ok_or(ComplexError::Void)?;
        Ok(first.vertices().iter().copied().find(|v| rest.iter().all(|f| f.contains(*v))))
    }

    pub fn union(&self, other: &Self) -> Self {
        let universe: Vec<u32> =
            self.vertex_universe.union(&other.vertex_universe).copied().collect();
        Self::from_facets(self.facets.iter().chain(other.facets.iter()).cloned())
            .with_universe(universe)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let universe: Vec<u32> =
            self.vertex_universe.intersection(&other.vertex_universe).copied().collect();
        Self::from_facets(
            self.facets
                .iter()
                .cartesian_product(other.facets.iter())
                .map(|(f, g)| f.intersection(g)),
        )
        .with_universe(universe)
    }

    /// Distinct vertices `v_1, .., v_q` with `v_i ∉ F_j` exactly when
    /// `i = j`, for facets `F_1, .., F_q` in stored order.
    ///
    /// Returns `None` for cones, complexes with fewer than two facets, and
    /// whenever no such sequence exists.
    pub fn facet_vertex_matching(&self) -> Option<Vec<u32>> {
        if self.facets.len() < 2 || matches!(self.is_cone(), Ok(Some(_))) {
            return None;
        }
        let vertices = self.vertices();
        // A vertex admissible for F_i lies in every other facet, so the
        // admissible sets are pairwise disjoint and any pick is a matching.
        self.facets
            .iter()
            .enumerate()
            .map(|(i, fi)| {
                vertices.iter().copied().find(|&v| {
                    !fi.contains(v)
                        && self.facets.iter().enumerate().all(|(j, fj)| j == i || fj.contains(v))
                })
            })
            .collect()
    }
}

impl fmt::Display for SimplicialComplex {
    /// One facet per line, vertices comma-separated. The empty facet is
    /// written as `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in &self.facets {
            if facet.is_empty() {
                writeln!(f, "{{}}")?;
            } else {
                writeln!(f, "{}", facet.vertices().iter().join(","))?;
            }
        }
        Ok(())
    }
}

/// The complex on `{1,..,n}` whose facets delete one window of `t`
/// consecutive vertices each.
pub fn omega_complex(n: usize, t: usize) -> Result<SimplicialComplex, ComplexError> {
    if t == 0 || n < t {
        return Err(ComplexError::OmegaRange { n, t });
    }
    let n32 = n as u32;
    let t32 = t as u32;
    let facets = (1..=n32 - t32 + 1).map(|i| Face::new((1..=n32).filter(|&v| v < i || v >= i + t32)));
    Ok(SimplicialComplex::from_facets(facets).with_universe(1..=n32))
}

/// The boundary of the simplex on `{1,..,n}`.
pub fn boundary_complex(n: usize) -> Result<SimplicialComplex, ComplexError> {
    if n == 0 {
        return Err(ComplexError::EmptyBoundary);
    }
    let n32 = n as u32;
    let facets = (1..=n32).map(|skip| Face::new((1..=n32).filter(|&v| v != skip)));
    Ok(SimplicialComplex::from_facets(facets).with_universe(1..=n32))
}
