//! Finite simplicial complexes over non-negative integer vertex ids.
//!
//! Two degenerate complexes are kept apart throughout: the Void complex
//! (no faces at all, dimension −∞) and `{∅}` (exactly one face, the empty
//! simplex, dimension −1).  Every non-void complex contains the empty
//! simplex, and all operations below respect that convention.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Vertex identifier.  Ids need not be contiguous.
pub type Vertex = u32;

/// Hard cap on the number of vertices of a single complex (products of
/// desk-scale factors can pair up to this many vertices).
pub const MAX_VERTICES: usize = 64;

/// Hard cap on the cardinality of a single simplex.  Closures enumerate all
/// 2^card subsets of each facet, so this bounds memory per facet.
pub const MAX_FACET_VERTICES: usize = 28;

/// Vertex-count cap for exact isomorphism search.
pub const MAX_ISO_VERTICES: usize = 12;

/// An abstract simplex: a finite set of vertices, stored strictly increasing.
/// The empty simplex (`dim == -1`) is a legitimate value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Simplex {
    verts: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    DuplicateVertex(Vertex),
    TooManyVertices { count: usize, max: usize },
    VertexIdTooLarge(Vertex),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::DuplicateVertex(v) => write!(f, "duplicate vertex id {v} in simplex"),
            ComplexError::TooManyVertices { count, max } => {
                write!(f, "complex has {count} vertices, limit is {max}")
            }
            ComplexError::VertexIdTooLarge(v) => {
                write!(f, "vertex id {v} too large for this operation")
            }
        }
    }
}

impl std::error::Error for ComplexError {}

impl Simplex {
    /// The empty simplex ∅ (dimension −1).
    pub fn empty() -> Self {
        Simplex { verts: Vec::new() }
    }

    /// Build a simplex from vertex ids; sorts, rejects duplicates.
    pub fn try_new(mut verts: Vec<Vertex>) -> Result<Self, ComplexError> {
        verts.sort_unstable();
        for w in verts.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertex(w[0]));
            }
        }
        Ok(Simplex { verts })
    }

    /// Panicking convenience constructor.
    pub fn new<I: IntoIterator<Item = Vertex>>(verts: I) -> Self {
        Self::try_new(verts.into_iter().collect()).expect("invalid simplex")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    /// Number of vertices (#σ).
    pub fn card(&self) -> usize {
        self.verts.len()
    }

    /// dim σ = #σ − 1; the empty simplex has dimension −1.
    pub fn dim(&self) -> i32 {
        self.verts.len() as i32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        self.verts.iter().all(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut verts: Vec<Vertex> = self.verts.iter().chain(&other.verts).copied().collect();
        verts.sort_unstable();
        verts.dedup();
        Simplex { verts }
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex {
            verts: self.verts.iter().filter(|v| other.contains(**v)).copied().collect(),
        }
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex {
            verts: self.verts.iter().filter(|v| !other.contains(**v)).copied().collect(),
        }
    }

    pub fn is_disjoint_from(&self, other: &Simplex) -> bool {
        self.verts.iter().all(|v| !other.contains(*v))
    }

    /// All subsets, the empty simplex included.
    pub fn subsets(&self) -> Vec<Simplex> {
        let n = self.verts.len();
        assert!(n <= MAX_FACET_VERTICES);
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            let verts = self
                .verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| *v)
                .collect();
            out.push(Simplex { verts });
        }
        out
    }

    /// Codimension-one subsets, in order of the omitted vertex.
    pub fn boundary_faces(&self) -> Vec<Simplex> {
        (0..self.verts.len())
            .map(|i| {
                let mut verts = self.verts.clone();
                verts.remove(i);
                Simplex { verts }
            })
            .collect()
    }

    /// Apply a function to every vertex id; the result must stay duplicate-free.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Simplex {
        Simplex::new(self.verts.iter().map(|v| f(*v)))
    }

    /// The full simplex on these vertices as a complex (σ̄, simplex closure).
    pub fn closure(&self) -> Complex {
        Complex::from_facets(std::slice::from_ref(self))
    }

    /// The boundary complex σ̇: all proper subsets.  For the empty simplex
    /// this is the Void complex.
    pub fn boundary_complex(&self) -> Complex {
        if self.is_empty() {
            return Complex::void();
        }
        Complex::from_facets(&self.boundary_faces())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Dimension of a complex: −∞ for Void, otherwise the largest face dimension
/// (−1 for `{∅}`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtendedDim {
    MinusInfinity,
    Finite(i32),
}

impl ExtendedDim {
    pub fn finite(self) -> Option<i32> {
        match self {
            ExtendedDim::MinusInfinity => None,
            ExtendedDim::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for ExtendedDim {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedDim {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ExtendedDim::*;
        match (self, other) {
            (MinusInfinity, MinusInfinity) => std::cmp::Ordering::Equal,
            (MinusInfinity, _) => std::cmp::Ordering::Less,
            (_, MinusInfinity) => std::cmp::Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtendedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedDim::MinusInfinity => write!(f, "-inf"),
            ExtendedDim::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A finite simplicial complex.
///
/// `faces` is `None` for the Void complex; otherwise it is the full
/// downward-closed face set and always contains the empty simplex.
/// Optional vertex labels carry provenance (e.g. product coordinates);
/// they do not participate in equality.
#[derive(Clone)]
pub struct Complex {
    faces: Option<BTreeSet<Simplex>>,
    labels: BTreeMap<Vertex, String>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces
    }
}
impl Eq for Complex {}

impl Complex {
    /// The Void complex ∅: no faces at all, dim = −∞.
    pub fn void() -> Self {
        Complex { faces: None, labels: BTreeMap::new() }
    }

    /// The complex `{∅}` whose only face is the empty simplex (dim = −1).
    pub fn empty() -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(Simplex::empty());
        Complex { faces: Some(faces), labels: BTreeMap::new() }
    }

    /// A single point `•` with the given vertex id.
    pub fn point(v: Vertex) -> Self {
        Complex::from_facets(&[Simplex::new([v])])
    }

    /// Downward closure of a set of generating simplices.  An empty generator
    /// list yields the Void complex; `[∅]` yields `{∅}`.
    pub fn try_from_facets(gens: &[Simplex]) -> Result<Self, ComplexError> {
        if gens.is_empty() {
            return Ok(Complex::void());
        }
        let mut vertices: BTreeSet<Vertex> = BTreeSet::new();
        for g in gens {
            vertices.extend(g.vertices());
        }
        if vertices.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices { count: vertices.len(), max: MAX_VERTICES });
        }
        let mut faces = BTreeSet::new();
        for g in gens {
            for s in g.subsets() {
                faces.insert(s);
            }
        }
        Ok(Complex { faces: Some(faces), labels: BTreeMap::new() })
    }

    pub fn from_facets(gens: &[Simplex]) -> Self {
        Self::try_from_facets(gens).expect("invalid facet list")
    }

    /// Convenience: build from vertex-id lists.
    pub fn from_facet_ids(gens: &[Vec<Vertex>]) -> Self {
        let simplices: Vec<Simplex> = gens.iter().map(|g| Simplex::new(g.iter().copied())).collect();
        Complex::from_facets(&simplices)
    }

    /// Build directly from a known-closed face set (internal fast path).
    fn from_face_set(faces: BTreeSet<Simplex>, labels: BTreeMap<Vertex, String>) -> Self {
        debug_assert!(faces.contains(&Simplex::empty()));
        Complex { faces: Some(faces), labels }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_none()
    }

    /// True for `{∅}` (the empty simplex is the only face).
    pub fn is_empty_complex(&self) -> bool {
        matches!(&self.faces, Some(f) if f.len() == 1)
    }

    pub fn dim(&self) -> ExtendedDim {
        match &self.faces {
            None => ExtendedDim::MinusInfinity,
            Some(f) => ExtendedDim::Finite(f.iter().map(|s| s.dim()).max().unwrap()),
        }
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        match &self.faces {
            None => false,
            Some(f) => f.contains(s),
        }
    }

    /// Every face, the empty simplex included (nothing for Void).
    pub fn faces(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter().flat_map(|f| f.iter())
    }

    pub fn n_faces(&self) -> usize {
        self.faces.as_ref().map_or(0, |f| f.len())
    }

    pub fn faces_of_dim(&self, d: i32) -> Vec<Simplex> {
        self.faces().filter(|s| s.dim() == d).cloned().collect()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        for s in self.faces() {
            out.extend(s.vertices());
        }
        out
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: Vertex, label: String) {
        self.labels.insert(v, label);
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = labels;
        self
    }

    /// Maximal faces.  `{∅}` has the single facet ∅; Void has none.
    pub fn facets(&self) -> Vec<Simplex> {
        let faces = match &self.faces {
            None => return Vec::new(),
            Some(f) => f,
        };
        let mut out: Vec<Simplex> = Vec::new();
        // Scan from large to small; a face is maximal iff no previously kept
        // facet contains it.
        let mut by_size: Vec<&Simplex> = faces.iter().collect();
        by_size.sort_by_key(|s| std::cmp::Reverse(s.card()));
        for s in by_size {
            if !out.iter().any(|m| s.is_subset_of(m)) {
                out.push(s.clone());
            }
        }
        out.sort();
        out
    }

    /// f-vector (f_{-1}, f_0, ..., f_dim); empty for Void.
    pub fn f_vector(&self) -> Vec<u64> {
        let d = match self.dim() {
            ExtendedDim::MinusInfinity => return Vec::new(),
            ExtendedDim::Finite(d) => d,
        };
        let mut f = vec![0u64; (d + 2) as usize];
        for s in self.faces() {
            f[(s.dim() + 1) as usize] += 1;
        }
        f
    }

    /// Reduced Euler characteristic Σ (−1)^i f_i, i ≥ −1 (0 for Void).
    pub fn reduced_euler(&self) -> i64 {
        let mut chi = 0i64;
        for s in self.faces() {
            if s.dim() % 2 == 0 {
                chi += 1;
            } else {
                chi -= 1;
            }
        }
        chi
    }

    /// Link Lk_Σ σ = {τ : τ∩σ = ∅, τ∪σ ∈ Σ}; Void when σ ∉ Σ.
    pub fn link(&self, s: &Simplex) -> Complex {
        if !self.contains(s) {
            return Complex::void();
        }
        let faces: BTreeSet<Simplex> = self
            .faces()
            .filter(|t| t.is_disjoint_from(s) && self.contains(&t.union(s)))
            .cloned()
            .collect();
        let labels = self.restrict_labels(&faces_vertices(&faces));
        Complex::from_face_set(faces, labels)
    }

    /// Costar cost_Σ σ = {τ ∈ Σ : σ ⊄ τ}.  The costar of the empty simplex is
    /// Void; the costar in Void is Void.
    pub fn costar(&self, s: &Simplex) -> Complex {
        let faces = match &self.faces {
            None => return Complex::void(),
            Some(f) => f,
        };
        if s.is_empty() {
            return Complex::void();
        }
        let kept: BTreeSet<Simplex> =
            faces.iter().filter(|t| !s.is_subset_of(t)).cloned().collect();
        let labels = self.restrict_labels(&faces_vertices(&kept));
        Complex::from_face_set(kept, labels)
    }

    /// Closed star st̄_Σ σ: the closure of every face containing σ; Void when
    /// σ ∉ Σ.
    pub fn star_closed(&self, s: &Simplex) -> Complex {
        if !self.contains(s) {
            return Complex::void();
        }
        let mut kept: BTreeSet<Simplex> = BTreeSet::new();
        for t in self.faces() {
            if s.is_subset_of(t) {
                for sub in t.subsets() {
                    kept.insert(sub);
                }
            }
        }
        let labels = self.restrict_labels(&faces_vertices(&kept));
        Complex::from_face_set(kept, labels)
    }

    /// Union of two complexes (on a shared vertex universe).
    pub fn union(&self, other: &Complex) -> Complex {
        match (&self.faces, &other.faces) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => {
                let faces: BTreeSet<Simplex> = a.union(b).cloned().collect();
                let mut labels = self.labels.clone();
                labels.extend(other.labels.clone());
                Complex::from_face_set(faces, labels)
            }
        }
    }

    /// Intersection of two complexes; Void if either is Void.
    pub fn intersection(&self, other: &Complex) -> Complex {
        match (&self.faces, &other.faces) {
            (Some(a), Some(b)) => {
                let faces: BTreeSet<Simplex> = a.intersection(b).cloned().collect();
                let labels = self.restrict_labels(&faces_vertices(&faces));
                Complex::from_face_set(faces, labels)
            }
            _ => Complex::void(),
        }
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        match (&self.faces, &other.faces) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a.is_subset(b),
        }
    }

    /// Join Σ₁ ∗ Σ₂ with the right-hand vertex ids shifted out of the way.
    /// `{∅}` is the unit and Void annihilates.  Returns the joined complex
    /// and the offset applied to right-hand ids.
    pub fn join_with_offset(&self, other: &Complex) -> (Complex, Vertex) {
        let offset = self.vertices().iter().max().map_or(0, |m| m + 1);
        match (&self.faces, &other.faces) {
            (None, _) | (_, None) => (Complex::void(), offset),
            (Some(a), Some(b)) => {
                let mut faces = BTreeSet::new();
                for s1 in a {
                    for s2 in b {
                        faces.insert(s1.union(&s2.map_vertices(|v| v + offset)));
                    }
                }
                let n_verts = faces_vertices(&faces).len();
                assert!(
                    n_verts <= MAX_VERTICES,
                    "join would have {n_verts} vertices, limit is {MAX_VERTICES}"
                );
                let mut labels = self.labels.clone();
                for (v, l) in &other.labels {
                    labels.insert(v + offset, l.clone());
                }
                (Complex::from_face_set(faces, labels), offset)
            }
        }
    }

    pub fn join(&self, other: &Complex) -> Complex {
        self.join_with_offset(other).0
    }

    /// Join with a caller-chosen right-hand offset, so that joins of
    /// subcomplexes land in the same vertex coordinates as the ambient join.
    /// The offset must clear every left-hand id.
    pub fn join_using_offset(&self, other: &Complex, offset: Vertex) -> Complex {
        assert!(
            self.vertices().iter().max().map_or(0, |m| m + 1) <= offset,
            "join offset collides with left-hand vertex ids"
        );
        match (&self.faces, &other.faces) {
            (None, _) | (_, None) => Complex::void(),
            (Some(a), Some(b)) => {
                let mut faces = BTreeSet::new();
                for s1 in a {
                    for s2 in b {
                        faces.insert(s1.union(&s2.map_vertices(|v| v + offset)));
                    }
                }
                let mut labels = self.labels.clone();
                for (v, l) in &other.labels {
                    labels.insert(v + offset, l.clone());
                }
                Complex::from_face_set(faces, labels)
            }
        }
    }

    /// Ordered simplicial cartesian product.  Vertices are pairs (u,v)
    /// encoded as `(u<<16)|v` (all factor ids must be < 2^16); a simplex is a
    /// set of pairs that is a chain under the componentwise order and whose
    /// coordinate supports are faces of the factors.
    pub fn try_product_ordered(&self, other: &Complex) -> Result<Complex, ComplexError> {
        let (a, b) = match (&self.faces, &other.faces) {
            (Some(a), Some(b)) => (a, b),
            _ => return Ok(Complex::void()),
        };
        for v in self.vertices().iter().chain(other.vertices().iter()) {
            if *v >= 1 << 16 {
                return Err(ComplexError::VertexIdTooLarge(*v));
            }
        }
        let va: Vec<Vertex> = self.vertices().into_iter().collect();
        let vb: Vec<Vertex> = other.vertices().into_iter().collect();
        // All candidate product vertices (u,v) with {u} ∈ a, {v} ∈ b, in
        // lexicographic order; chains are extended left to right.
        let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
        for u in &va {
            for v in &vb {
                if a.contains(&Simplex::new([*u])) && b.contains(&Simplex::new([*v])) {
                    pairs.push((*u, *v));
                }
            }
        }
        if pairs.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices { count: pairs.len(), max: MAX_VERTICES });
        }
        let mut faces: BTreeSet<Simplex> = BTreeSet::new();
        faces.insert(Simplex::empty());
        let mut chain: Vec<(Vertex, Vertex)> = Vec::new();
        fn extend(
            pairs: &[(Vertex, Vertex)],
            start: usize,
            chain: &mut Vec<(Vertex, Vertex)>,
            a: &Complex,
            b: &Complex,
            faces: &mut BTreeSet<Simplex>,
        ) {
            for i in start..pairs.len() {
                let (u, v) = pairs[i];
                if let Some(&(lu, lv)) = chain.last() {
                    if u < lu || v < lv || (u, v) == (lu, lv) {
                        continue;
                    }
                }
                chain.push((u, v));
                let s1 = Simplex::new(chain.iter().map(|p| p.0).collect::<BTreeSet<_>>());
                let s2 = Simplex::new(chain.iter().map(|p| p.1).collect::<BTreeSet<_>>());
                if a.contains(&s1) && b.contains(&s2) {
                    faces.insert(Simplex::new(chain.iter().map(|&(u, v)| (u << 16) | v)));
                    extend(pairs, i + 1, chain, a, b, faces);
                }
                chain.pop();
            }
        }
        extend(&pairs, 0, &mut chain, self, other, &mut faces);
        let mut labels = BTreeMap::new();
        for s in &faces {
            for id in s.vertices() {
                let (u, v) = (id >> 16, id & 0xffff);
                labels.entry(*id).or_insert_with(|| format!("({u},{v})"));
            }
        }
        Ok(Complex::from_face_set(faces, labels))
    }

    pub fn product_ordered(&self, other: &Complex) -> Complex {
        self.try_product_ordered(other).expect("invalid product")
    }

    /// Decode a product vertex id back into its factor pair.
    pub fn decode_product_vertex(id: Vertex) -> (Vertex, Vertex) {
        (id >> 16, id & 0xffff)
    }

    /// p-skeleton {σ : dim σ ≤ p}; requires p ≥ −1.  Void stays Void.
    pub fn skeleton(&self, p: i32) -> Complex {
        assert!(p >= -1, "skeleton dimension must be at least -1");
        match &self.faces {
            None => Complex::void(),
            Some(f) => {
                let kept: BTreeSet<Simplex> =
                    f.iter().filter(|s| s.dim() <= p).cloned().collect();
                let labels = self.restrict_labels(&faces_vertices(&kept));
                Complex::from_face_set(kept, labels)
            }
        }
    }

    /// Remove every face meeting the vertex set `t` (full subcomplex on the
    /// complement).  Non-void complexes stay non-void.
    pub fn delete_vertices(&self, t: &BTreeSet<Vertex>) -> Complex {
        match &self.faces {
            None => Complex::void(),
            Some(f) => {
                let kept: BTreeSet<Simplex> = f
                    .iter()
                    .filter(|s| s.vertices().iter().all(|v| !t.contains(v)))
                    .cloned()
                    .collect();
                let labels = self.restrict_labels(&faces_vertices(&kept));
                Complex::from_face_set(kept, labels)
            }
        }
    }

    /// Cone points: vertices contained in every facet.
    pub fn cone_points(&self) -> BTreeSet<Vertex> {
        let facets = self.facets();
        if facets.is_empty() {
            return BTreeSet::new();
        }
        let mut out: BTreeSet<Vertex> = facets[0].vertices().iter().copied().collect();
        for f in &facets[1..] {
            out.retain(|v| f.contains(*v));
        }
        out
    }

    /// Core: the full subcomplex on the non-cone vertices.
    pub fn core(&self) -> Complex {
        self.delete_vertices(&self.cone_points())
    }

    /// All facets share the top dimension.  Void and `{∅}` are vacuously pure.
    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets.windows(2).all(|w| w[0].card() == w[1].card())
    }

    /// Strong connectedness: the facet graph, with an edge when two facets
    /// overlap in all but one vertex of the larger, is connected.
    pub fn is_strongly_connected(&self) -> bool {
        let facets = self.facets();
        if facets.len() <= 1 {
            return true;
        }
        let n = facets.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j]
                    && facets[i].intersection(&facets[j]).card()
                        == facets[i].card().max(facets[j].card()) - 1
                {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Partition of the facets into maximal strongly connected components,
    /// each returned as the complex it generates.
    pub fn strong_components(&self) -> Vec<Complex> {
        let facets = self.facets();
        let n = facets.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0usize;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if comp[j] == usize::MAX
                        && facets[i].intersection(&facets[j]).card()
                            == facets[i].card().max(facets[j].card()) - 1
                    {
                        comp[j] = next;
                        stack.push(j);
                    }
                }
            }
            next += 1;
        }
        (0..next)
            .map(|c| {
                let gens: Vec<Simplex> = facets
                    .iter()
                    .zip(&comp)
                    .filter(|(_, k)| **k == c)
                    .map(|(f, _)| f.clone())
                    .collect();
                Complex::from_facets(&gens)
            })
            .collect()
    }

    /// Poset connectedness of Σ ∖ Σ°: any two faces outside `inner` are
    /// linked by a chain of ⊆/⊇-comparable faces outside `inner`.
    pub fn is_poset_connected_without(&self, inner: &Complex) -> bool {
        let diff: Vec<&Simplex> = self.faces().filter(|s| !inner.contains(s)).collect();
        if diff.len() <= 1 {
            return true;
        }
        let n = diff.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j]
                    && (diff[i].is_subset_of(diff[j]) || diff[j].is_subset_of(diff[i]))
                {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Graph connectedness via the 1-skeleton (true for Void, `{∅}` and `•`).
    pub fn is_graph_connected(&self) -> bool {
        let verts: Vec<Vertex> = self.vertices().into_iter().collect();
        if verts.len() <= 1 {
            return true;
        }
        let n = verts.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && self.contains(&Simplex::new([verts[i], verts[j]])) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Is `sub` a full subcomplex: every face of `self` with all vertices in
    /// `sub` already belongs to `sub`?
    pub fn is_full_subcomplex(&self, sub: &Complex) -> bool {
        if sub.is_void() {
            return true;
        }
        if !sub.is_subcomplex_of(self) {
            return false;
        }
        let vs = sub.vertices();
        self.faces()
            .filter(|s| s.vertices().iter().all(|v| vs.contains(v)))
            .all(|s| sub.contains(s))
    }

    /// The full subcomplex of `self` on a vertex set.
    pub fn full_subcomplex(&self, vs: &BTreeSet<Vertex>) -> Complex {
        match &self.faces {
            None => Complex::void(),
            Some(f) => {
                let kept: BTreeSet<Simplex> = f
                    .iter()
                    .filter(|s| s.vertices().iter().all(|v| vs.contains(v)))
                    .cloned()
                    .collect();
                let labels = self.restrict_labels(vs);
                Complex::from_face_set(kept, labels)
            }
        }
    }

    /// Rename vertices.  The map must be injective on the vertex set.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex + Copy) -> Complex {
        match &self.faces {
            None => Complex::void(),
            Some(fs) => {
                let faces: BTreeSet<Simplex> = fs.iter().map(|s| s.map_vertices(f)).collect();
                assert_eq!(faces.len(), fs.len(), "vertex map must be injective");
                let labels = self.labels.iter().map(|(v, l)| (f(*v), l.clone())).collect();
                Complex::from_face_set(faces, labels)
            }
        }
    }

    /// Exact isomorphism test by backtracking on vertex bijections.
    /// Only for complexes with at most [`MAX_ISO_VERTICES`] vertices.
    pub fn is_isomorphic_to(&self, other: &Complex) -> bool {
        self.isomorphism_to(other).is_some() || (self.is_void() && other.is_void())
    }

    /// Produce a vertex bijection carrying `self` onto `other`, if any.
    pub fn isomorphism_to(&self, other: &Complex) -> Option<BTreeMap<Vertex, Vertex>> {
        match (&self.faces, &other.faces) {
            (None, None) => return Some(BTreeMap::new()),
            (None, _) | (_, None) => return None,
            (Some(a), Some(b)) => {
                if a.len() != b.len() {
                    return None;
                }
            }
        }
        let va: Vec<Vertex> = self.vertices().into_iter().collect();
        let vb: Vec<Vertex> = other.vertices().into_iter().collect();
        if va.len() != vb.len() {
            return None;
        }
        assert!(
            va.len() <= MAX_ISO_VERTICES,
            "isomorphism search limited to {MAX_ISO_VERTICES} vertices"
        );
        // Invariant per vertex: number of faces of each dimension containing it.
        let profile = |c: &Complex, v: Vertex| -> Vec<usize> {
            let d = c.dim().finite().unwrap_or(-1);
            let mut p = vec![0usize; (d + 2) as usize];
            for s in c.faces() {
                if s.contains(v) {
                    p[(s.dim() + 1) as usize] += 1;
                }
            }
            p
        };
        let pa: Vec<Vec<usize>> = va.iter().map(|v| profile(self, *v)).collect();
        let pb: Vec<Vec<usize>> = vb.iter().map(|v| profile(other, *v)).collect();
        let mut assign: Vec<Option<usize>> = vec![None; va.len()];
        let mut used = vec![false; vb.len()];
        fn search(
            i: usize,
            va: &[Vertex],
            vb: &[Vertex],
            pa: &[Vec<usize>],
            pb: &[Vec<usize>],
            this: &Complex,
            other: &Complex,
            assign: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
        ) -> bool {
            if i == va.len() {
                // Mapping complete; verify it carries the face set across.
                let map: BTreeMap<Vertex, Vertex> = va
                    .iter()
                    .enumerate()
                    .map(|(k, v)| (*v, vb[assign[k].unwrap()]))
                    .collect();
                return this.faces().all(|s| other.contains(&s.map_vertices(|v| map[&v])));
            }
            for j in 0..vb.len() {
                if used[j] || pa[i] != pb[j] {
                    continue;
                }
                // Partial consistency: faces among the assigned vertices must map
                // to faces.
                assign[i] = Some(j);
                used[j] = true;
                let map: BTreeMap<Vertex, Vertex> = va
                    .iter()
                    .take(i + 1)
                    .enumerate()
                    .map(|(k, v)| (*v, vb[assign[k].unwrap()]))
                    .collect();
                let consistent = this
                    .faces()
                    .filter(|s| s.vertices().iter().all(|v| map.contains_key(v)))
                    .all(|s| other.contains(&s.map_vertices(|v| map[&v])));
                if consistent
                    && search(i + 1, va, vb, pa, pb, this, other, assign, used)
                {
                    return true;
                }
                assign[i] = None;
                used[j] = false;
            }
            false
        }
        if search(0, &va, &vb, &pa, &pb, self, other, &mut assign, &mut used) {
            Some(
                va.iter()
                    .enumerate()
                    .map(|(k, v)| (*v, vb[assign[k].unwrap()]))
                    .collect(),
            )
        } else {
            None
        }
    }

    fn restrict_labels(&self, vs: &BTreeSet<Vertex>) -> BTreeMap<Vertex, String> {
        self.labels
            .iter()
            .filter(|(v, _)| vs.contains(v))
            .map(|(v, l)| (*v, l.clone()))
            .collect()
    }
}

fn faces_vertices(faces: &BTreeSet<Simplex>) -> BTreeSet<Vertex> {
    let mut out = BTreeSet::new();
    for s in faces {
        out.extend(s.vertices());
    }
    out
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "Complex::Void");
        }
        write!(f, "Complex[")?;
        for (i, s) in self.facets().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[Vertex]]) -> Complex {
        Complex::from_facet_ids(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn void_vs_empty() {
        let void = Complex::void();
        let empty = Complex::empty();
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert_eq!(void.dim(), ExtendedDim::MinusInfinity);
        assert_eq!(empty.dim(), ExtendedDim::Finite(-1));
        assert_eq!(void.n_faces(), 0);
        assert_eq!(empty.n_faces(), 1);
        assert!(empty.contains(&Simplex::empty()));
        assert_ne!(void, empty);
        assert!(ExtendedDim::MinusInfinity < ExtendedDim::Finite(-1));
    }

    #[test]
    fn closure_and_f_vector() {
        let t = c(&[&[1, 2, 3]]);
        assert_eq!(t.n_faces(), 8);
        assert_eq!(t.f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(t.dim(), ExtendedDim::Finite(2));
        let circle = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(circle.f_vector(), vec![1, 3, 3]);
        // Reduced Euler characteristic counts the empty simplex: −1+3−3.
        assert_eq!(circle.reduced_euler(), -1);
        assert_eq!(Complex::void().reduced_euler(), 0);
        assert_eq!(Complex::empty().reduced_euler(), -1);
    }

    #[test]
    fn facets_roundtrip() {
        let m = c(&[&[1, 2, 3], &[3, 4], &[5]]);
        let facets = m.facets();
        assert_eq!(facets.len(), 3);
        assert_eq!(Complex::from_facets(&facets), m);
        assert_eq!(Complex::empty().facets(), vec![Simplex::empty()]);
        assert!(Complex::void().facets().is_empty());
    }

    #[test]
    fn link_basics() {
        let circle = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        let lk = circle.link(&Simplex::new([2]));
        assert_eq!(lk, c(&[&[1], &[3]]));
        // Link of the empty simplex is the whole complex.
        assert_eq!(circle.link(&Simplex::empty()), circle);
        // Link of a non-face is Void.
        assert!(circle.link(&Simplex::new([1, 2, 3])).is_void());
        // Link of a facet is {∅}.
        assert_eq!(circle.link(&Simplex::new([1, 2])), Complex::empty());
    }

    #[test]
    fn costar_and_star() {
        let t = c(&[&[1, 2, 3]]);
        let cost = t.costar(&Simplex::new([1]));
        assert_eq!(cost, c(&[&[2, 3]]));
        assert!(t.costar(&Simplex::empty()).is_void());
        // Closed star in a path.
        let path = c(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(path.star_closed(&Simplex::new([2])), c(&[&[1, 2], &[2, 3]]));
        assert!(path.star_closed(&Simplex::new([1, 3])).is_void());
        // st̄ of the empty simplex is the whole complex.
        assert_eq!(path.star_closed(&Simplex::empty()), path);
    }

    #[test]
    fn join_identities() {
        let s0 = c(&[&[1], &[2]]);
        // {∅} is the join unit, Void annihilates.
        assert_eq!(Complex::empty().join(&s0), s0);
        assert_eq!(s0.join(&Complex::empty()), s0);
        assert!(s0.join(&Complex::void()).is_void());
        assert!(Complex::void().join(&s0).is_void());
        // S0 ∗ S0 is a 4-cycle.
        let square = s0.join(&s0);
        assert_eq!(square.f_vector(), vec![1, 4, 4]);
        assert!(square.is_pure());
        // Join dims add plus one.
        let d1 = s0.dim().finite().unwrap();
        assert_eq!(square.dim(), ExtendedDim::Finite(d1 + d1 + 1));
        // Cone over a triangle boundary is the full triangle plus apex faces.
        let circle = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        let cone = circle.join(&Complex::point(0));
        assert_eq!(cone.f_vector(), vec![1, 4, 6, 3]);
        assert_eq!(cone.cone_points().len(), 1);
    }

    #[test]
    fn join_offset_respects_ids() {
        let a = c(&[&[3, 7]]);
        let b = c(&[&[0, 1]]);
        let (j, off) = a.join_with_offset(&b);
        assert_eq!(off, 8);
        assert!(j.contains(&Simplex::new([3, 7, 8, 9])));
    }

    #[test]
    fn product_of_edges_is_square() {
        let e1 = c(&[&[1, 2]]);
        let e2 = c(&[&[3, 4]]);
        let p = e1.product_ordered(&e2);
        assert_eq!(p.f_vector(), vec![1, 4, 5, 2]);
        // The two triangles of the staircase triangulation.
        let v = |u: Vertex, w: Vertex| (u << 16) | w;
        assert!(p.contains(&Simplex::new([v(1, 3), v(2, 3), v(2, 4)])));
        assert!(p.contains(&Simplex::new([v(1, 3), v(1, 4), v(2, 4)])));
        assert!(!p.contains(&Simplex::new([v(1, 4), v(2, 3)])));
        assert_eq!(p.labels().get(&v(1, 3)).unwrap(), "(1,3)");
    }

    #[test]
    fn product_degenerate_cases() {
        let s0 = c(&[&[1], &[2]]);
        assert!(Complex::void().product_ordered(&s0).is_void());
        assert_eq!(Complex::empty().product_ordered(&s0), Complex::empty());
        let pt = Complex::point(5);
        let p = pt.product_ordered(&s0);
        assert_eq!(p.f_vector(), vec![1, 2]);
    }

    #[test]
    fn skeleton_and_delete() {
        let t = c(&[&[1, 2, 3]]);
        assert_eq!(t.skeleton(1), c(&[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(t.skeleton(-1), Complex::empty());
        let del = t.delete_vertices(&[1].into_iter().collect());
        assert_eq!(del, c(&[&[2, 3]]));
        let all = t.delete_vertices(&[1, 2, 3].into_iter().collect());
        assert_eq!(all, Complex::empty());
    }

    #[test]
    fn cone_points_and_core() {
        let circle = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        let cone = circle.join(&Complex::point(0));
        let apex: Vec<Vertex> = cone.cone_points().into_iter().collect();
        assert_eq!(apex.len(), 1);
        assert!(cone.core().is_isomorphic_to(&circle));
        // A full simplex is its own cone: the core is {∅}.
        let t = c(&[&[1, 2, 3]]);
        assert_eq!(t.core(), Complex::empty());
    }

    #[test]
    fn purity_and_strong_connectivity() {
        assert!(c(&[&[1, 2], &[2, 3]]).is_pure());
        assert!(!c(&[&[1, 2, 3], &[3, 4]]).is_pure());
        assert!(c(&[&[1, 2], &[2, 3]]).is_strongly_connected());
        // Two triangles glued at a vertex: connected but not strongly.
        let wedge = c(&[&[1, 2, 3], &[3, 4, 5]]);
        assert!(!wedge.is_strongly_connected());
        assert_eq!(wedge.strong_components().len(), 2);
        assert!(Complex::void().is_strongly_connected());
        assert!(Complex::empty().is_strongly_connected());
    }

    #[test]
    fn poset_connectedness() {
        let circle = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        // Removing the costar of a vertex leaves the open star: connected.
        let cost = circle.costar(&Simplex::new([1]));
        assert!(circle.is_poset_connected_without(&cost));
        // Two disjoint edges minus {∅} is disconnected as a poset.
        let two = c(&[&[1, 2], &[3, 4]]);
        assert!(!two.is_poset_connected_without(&Complex::empty()));
    }

    #[test]
    fn fullness() {
        let circle = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        let sub = c(&[&[1], &[2]]);
        // {1},{2} misses the edge {1,2}: not full.
        assert!(!circle.is_full_subcomplex(&sub));
        assert!(circle.is_full_subcomplex(&c(&[&[1, 2]])));
        assert_eq!(
            circle.full_subcomplex(&[1, 2].into_iter().collect()),
            c(&[&[1, 2]])
        );
    }

    #[test]
    fn isomorphism() {
        let a = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        let b = c(&[&[10, 20], &[20, 30], &[10, 30]]);
        assert!(a.is_isomorphic_to(&b));
        let path = c(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert!(!a.is_isomorphic_to(&path));
        assert!(Complex::void().is_isomorphic_to(&Complex::void()));
        assert!(!Complex::void().is_isomorphic_to(&Complex::empty()));
        assert!(Complex::empty().is_isomorphic_to(&Complex::empty()));
    }
}
