//! Complete multipartite graphs with canonical vertex and edge indexing,
//! and edge-colorings over them.
//!
//! Vertices are identified by `(part, index)` and ordered lexicographically;
//! edges always join distinct parts and are stored with their endpoints in
//! canonical order, so an [`Edge`] is a stable lookup key. Edge enumeration
//! is deterministic, which makes colorings serialize reproducibly.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex of a complete multipartite graph: position `index` inside part
/// `part`, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub part: usize,
    pub index: usize,
}

impl VertexId {
    pub fn new(part: usize, index: usize) -> Self {
        VertexId { part, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.part, self.index)
    }
}

// Serializes as the two-element array `[part, index]` used by the JSON
// coloring document.
impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.part, self.index).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (part, index) = <(usize, usize)>::deserialize(deserializer)?;
        Ok(VertexId { part, index })
    }
}

/// An edge between two vertices in distinct parts, endpoints held in
/// canonical (lexicographic) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Builds the canonical record for the pair `{x, y}`; `(y, x)` resolves
    /// to the same record. Panics if the endpoints share a part.
    pub fn new(x: VertexId, y: VertexId) -> Self {
        assert_ne!(x.part, y.part, "edge endpoints must lie in distinct parts");
        if x <= y {
            Edge { a: x, b: y }
        } else {
            Edge { a: y, b: x }
        }
    }

    /// Fallible variant of [`Edge::new`] for untrusted input.
    pub fn try_new(x: VertexId, y: VertexId) -> Result<Self> {
        if x.part == y.part {
            return Err(Error::MalformedColoring(format!(
                "edge {x} -- {y} joins two vertices of the same part"
            )));
        }
        Ok(Edge::new(x, y))
    }

    pub fn a(&self) -> VertexId {
        self.a
    }

    pub fn b(&self) -> VertexId {
        self.b
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A complete multipartite graph given by its part sizes. The edge set is
/// exactly all pairs of vertices in distinct parts.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteMultipartite {
    part_sizes: Vec<usize>,
    // offsets[p] = global index of the first vertex of part p;
    // offsets[parts] = vertex count.
    offsets: Vec<usize>,
    // edge_cums[p] = number of canonical edges (a, b) with a.part < p.
    edge_cums: Vec<usize>,
}

impl CompleteMultipartite {
    /// Builds the graph. Errors unless the list is non-empty with every part
    /// size at least 1.
    pub fn new(part_sizes: &[usize]) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(Error::InvalidPartSizes("empty part list".into()));
        }
        if let Some(pos) = part_sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidPartSizes(format!(
                "part {pos} has size 0; every part needs at least one vertex"
            )));
        }
        let mut offsets = Vec::with_capacity(part_sizes.len() + 1);
        let mut total = 0usize;
        offsets.push(0);
        for &s in part_sizes {
            total += s;
            offsets.push(total);
        }
        // Each vertex of part p pairs with every vertex in a later part.
        let mut edge_cums = Vec::with_capacity(part_sizes.len() + 1);
        let mut acc = 0usize;
        edge_cums.push(0);
        for (p, &s) in part_sizes.iter().enumerate() {
            acc += s * (total - offsets[p + 1]);
            edge_cums.push(acc);
        }
        Ok(CompleteMultipartite {
            part_sizes: part_sizes.to_vec(),
            offsets,
            edge_cums,
        })
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn parts(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn part_size(&self, part: usize) -> usize {
        self.part_sizes[part]
    }

    pub fn vertex_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Number of cross-part pairs: `(S^2 - sum s_i^2) / 2` where `S` is the
    /// vertex count.
    pub fn edge_count(&self) -> usize {
        *self.edge_cums.last().unwrap()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.part < self.parts() && v.index < self.part_sizes[v.part]
    }

    /// Degree of any vertex in `part`: every vertex outside the part.
    pub fn degree_in_part(&self, part: usize) -> usize {
        self.vertex_count() - self.part_sizes[part]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degree_in_part(v.part)
    }

    pub fn max_degree(&self) -> usize {
        self.vertex_count() - self.part_sizes.iter().copied().min().unwrap()
    }

    /// Global position of `v` in the lexicographic vertex order.
    pub fn global_index(&self, v: VertexId) -> usize {
        debug_assert!(self.contains(v));
        self.offsets[v.part] + v.index
    }

    pub fn vertex_at(&self, global: usize) -> VertexId {
        debug_assert!(global < self.vertex_count());
        let part = self.offsets.partition_point(|&o| o <= global) - 1;
        VertexId::new(part, global - self.offsets[part])
    }

    /// All vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.parts()).flat_map(move |p| (0..self.part_sizes[p]).map(move |i| VertexId::new(p, i)))
    }

    /// All edges in canonical order: lexicographic by (first endpoint,
    /// second endpoint). Deterministic; the position of each edge in this
    /// enumeration is its [`edge_index`](Self::edge_index).
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices().flat_map(move |a| {
            (a.part + 1..self.parts()).flat_map(move |pb| {
                (0..self.part_sizes[pb]).map(move |ib| Edge {
                    a,
                    b: VertexId::new(pb, ib),
                })
            })
        })
    }

    /// O(1) slot of `e` in the canonical enumeration.
    pub fn edge_index(&self, e: &Edge) -> usize {
        debug_assert!(self.contains(e.a) && self.contains(e.b));
        let pa = e.a.part;
        // Later neighbors of any vertex in part pa are exactly the vertices
        // past the end of that part.
        let tail = self.vertex_count() - self.offsets[pa + 1];
        self.edge_cums[pa] + e.a.index * tail + (self.global_index(e.b) - self.offsets[pa + 1])
    }

    /// Edges incident to `v`, in canonical enumeration order of the other
    /// endpoint.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = Edge> + '_ {
        (0..self.parts())
            .filter(move |&p| p != v.part)
            .flat_map(move |p| (0..self.part_sizes[p]).map(move |i| Edge::new(v, VertexId::new(p, i))))
    }
}

/// The set of colors incident to a vertex, summarized as smallest color,
/// largest color, and distinct-color count.
///
/// The empty spectrum (a vertex with no incident edges) is represented as
/// `lo = hi = 0, size = 0` and counts as an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Spectrum {
    lo: u32,
    hi: u32,
    size: u32,
}

impl Spectrum {
    pub const EMPTY: Spectrum = Spectrum { lo: 0, hi: 0, size: 0 };

    /// Summarizes a multiset of colors; `size` counts distinct values.
    pub fn from_colors(colors: &[u32]) -> Self {
        if colors.is_empty() {
            return Spectrum::EMPTY;
        }
        let mut sorted = colors.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Spectrum {
            lo: sorted[0],
            hi: *sorted.last().unwrap(),
            size: sorted.len() as u32,
        }
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// True when the distinct colors form a consecutive block.
    pub fn is_interval(&self) -> bool {
        self.size == 0 || self.hi - self.lo + 1 == self.size
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "{{}}")
        } else {
            write!(f, "{{{}..{}; {} distinct}}", self.lo, self.hi, self.size)
        }
    }
}

/// A total assignment of colors `1..=t` to the edges of a graph.
///
/// The type guarantees totality and color range; whether the coloring is
/// proper, interval, and surjective is the verifier's business. Value-like:
/// cheap to clone, immutable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: CompleteMultipartite,
    t: u32,
    colors: Vec<u32>, // indexed by canonical edge index
}

impl EdgeColoring {
    /// Wraps a dense color vector in canonical edge order. Errors when the
    /// vector length does not match the edge count or any color is outside
    /// `1..=t`.
    pub fn new(graph: CompleteMultipartite, t: u32, colors: Vec<u32>) -> Result<Self> {
        if t == 0 {
            return Err(Error::MalformedColoring("t must be at least 1".into()));
        }
        if colors.len() != graph.edge_count() {
            return Err(Error::MalformedColoring(format!(
                "{} colors given for {} edges",
                colors.len(),
                graph.edge_count()
            )));
        }
        if let Some(pos) = colors.iter().position(|&c| c < 1 || c > t) {
            let e = graph.edges().nth(pos).unwrap();
            return Err(Error::MalformedColoring(format!(
                "edge {e} has color {} outside 1..={t}",
                colors[pos]
            )));
        }
        Ok(EdgeColoring { graph, t, colors })
    }

    /// Colors every edge via `f` in canonical order.
    pub fn from_fn(
        graph: CompleteMultipartite,
        t: u32,
        mut f: impl FnMut(Edge) -> u32,
    ) -> Result<Self> {
        let colors: Vec<u32> = graph.edges().map(&mut f).collect();
        EdgeColoring::new(graph, t, colors)
    }

    /// Bypasses validation; test support for exercising malformed-input
    /// paths that the public constructors reject.
    #[doc(hidden)]
    pub fn new_unchecked(graph: CompleteMultipartite, t: u32, colors: Vec<u32>) -> Self {
        EdgeColoring { graph, t, colors }
    }

    pub fn graph(&self) -> &CompleteMultipartite {
        &self.graph
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn color(&self, e: &Edge) -> u32 {
        self.colors[self.graph.edge_index(e)]
    }

    /// `(edge, color)` pairs in canonical edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.graph.edges().zip(self.colors.iter().copied())
    }

    pub fn min_color(&self) -> Option<u32> {
        self.colors.iter().copied().min()
    }

    pub fn max_color(&self) -> Option<u32> {
        self.colors.iter().copied().max()
    }

    /// Translates every color by `delta`; `t` moves by the same amount.
    /// A negative shift that would push any color below 1 is an underflow
    /// error, so a shift by `1 - min_color` normalizes the smallest used
    /// color to 1.
    pub fn shift(&self, delta: i64) -> Result<EdgeColoring> {
        if delta == 0 {
            return Ok(self.clone());
        }
        let mut shifted = Vec::with_capacity(self.colors.len());
        for &c in &self.colors {
            let moved = c as i64 + delta;
            if moved < 1 {
                return Err(Error::ColorUnderflow { color: c, delta });
            }
            shifted.push(moved as u32);
        }
        let t = self.t as i64 + delta;
        debug_assert!(t >= 1, "t stays >= max color >= 1");
        Ok(EdgeColoring {
            graph: self.graph.clone(),
            t: t as u32,
            colors: shifted,
        })
    }

    /// Mirror coloring `c -> t + 1 - c`. Properness and interval structure
    /// are symmetric under this map.
    pub fn reflected(&self) -> EdgeColoring {
        EdgeColoring {
            graph: self.graph.clone(),
            t: self.t,
            colors: self.colors.iter().map(|&c| self.t + 1 - c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(sizes: &[usize]) -> CompleteMultipartite {
        CompleteMultipartite::new(sizes).unwrap()
    }

    #[test]
    fn build_counts_vertices_and_edges() {
        let g = graph(&[1, 1, 2]);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 5);

        let single = graph(&[1]);
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);

        let k23 = graph(&[2, 3]);
        assert_eq!(k23.vertex_count(), 5);
        assert_eq!(k23.edge_count(), 6);
    }

    #[test]
    fn build_rejects_bad_part_lists() {
        assert!(matches!(
            CompleteMultipartite::new(&[]),
            Err(Error::InvalidPartSizes(_))
        ));
        assert!(matches!(
            CompleteMultipartite::new(&[2, 0, 1]),
            Err(Error::InvalidPartSizes(_))
        ));
    }

    #[test]
    fn edge_enumeration_is_lexicographic() {
        let g = graph(&[1, 1]);
        let es: Vec<Edge> = g.edges().collect();
        assert_eq!(es, vec![Edge::new(VertexId::new(0, 0), VertexId::new(1, 0))]);

        let g = graph(&[1, 2]);
        let es: Vec<Edge> = g.edges().collect();
        assert_eq!(es.len(), 2);
        assert_eq!(es[0], Edge::new(VertexId::new(0, 0), VertexId::new(1, 0)));
        assert_eq!(es[1], Edge::new(VertexId::new(0, 0), VertexId::new(1, 1)));

        // triangle
        let g = graph(&[1, 1, 1]);
        let es: Vec<Edge> = g.edges().collect();
        assert_eq!(es.len(), 3);
        for v in g.vertices() {
            assert_eq!(es.iter().filter(|e| e.a() == v || e.b() == v).count(), 2);
        }
    }

    #[test]
    fn edge_count_formula_matches_enumeration_up_to_total_12() {
        // Every ordered part list with sizes >= 1 summing to at most 12.
        fn lists(budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            for s in 1..=budget {
                prefix.push(s);
                lists(budget - s, prefix, out);
                prefix.pop();
            }
        }
        let mut all = Vec::new();
        lists(12, &mut Vec::new(), &mut all);
        assert_eq!(all.len(), 4095);
        for sizes in all {
            let g = graph(&sizes);
            let total: usize = sizes.iter().sum();
            let sq: usize = sizes.iter().map(|s| s * s).sum();
            assert_eq!(g.edge_count(), (total * total - sq) / 2, "sizes {sizes:?}");
            assert_eq!(g.edges().count(), g.edge_count(), "sizes {sizes:?}");
        }
    }

    #[test]
    fn edge_index_agrees_with_enumeration() {
        for sizes in [&[1usize, 1, 2][..], &[2, 3], &[3, 1, 2], &[1, 2, 3, 2]] {
            let g = graph(sizes);
            for (i, e) in g.edges().enumerate() {
                assert_eq!(g.edge_index(&e), i);
                // reversed lookup resolves to the same record
                let rev = Edge::new(e.b(), e.a());
                assert_eq!(rev, e);
                assert_eq!(g.edge_index(&rev), i);
            }
        }
    }

    #[test]
    fn canonical_edge_order_holds() {
        let g = graph(&[2, 3, 1]);
        for e in g.edges() {
            assert!(e.a() < e.b());
            assert_ne!(e.a().part, e.b().part);
        }
    }

    #[test]
    fn vertex_round_trip() {
        let g = graph(&[2, 1, 3]);
        for (i, v) in g.vertices().enumerate() {
            assert_eq!(g.global_index(v), i);
            assert_eq!(g.vertex_at(i), v);
        }
        assert_eq!(g.degree(VertexId::new(0, 1)), 4);
        assert_eq!(g.max_degree(), 5);
    }

    #[test]
    fn incident_edges_cover_degree() {
        let g = graph(&[1, 2, 3]);
        for v in g.vertices() {
            let inc: Vec<Edge> = g.incident_edges(v).collect();
            assert_eq!(inc.len(), g.degree(v));
            for e in inc {
                assert!(e.a() == v || e.b() == v);
            }
        }
    }

    #[test]
    fn coloring_validates_totality_and_range() {
        let g = graph(&[1, 2]);
        assert!(EdgeColoring::new(g.clone(), 2, vec![1]).is_err());
        assert!(EdgeColoring::new(g.clone(), 2, vec![1, 3]).is_err());
        assert!(EdgeColoring::new(g.clone(), 2, vec![1, 0]).is_err());
        assert!(EdgeColoring::new(g, 2, vec![1, 2]).is_ok());
    }

    #[test]
    fn shift_translates_colors() {
        let g = graph(&[1, 2]);
        let c = EdgeColoring::new(g, 3, vec![2, 3]).unwrap();
        let down = c.shift(-1).unwrap();
        assert_eq!(down.colors, vec![1, 2]);
        assert_eq!(down.t(), 2);

        let same = c.shift(0).unwrap();
        assert_eq!(same, c);

        // normalizing a single star edge
        let k11 = graph(&[1, 1]);
        let c = EdgeColoring::new(k11, 5, vec![5]).unwrap();
        let norm = c.shift(-4).unwrap();
        assert_eq!(norm.colors, vec![1]);
        assert_eq!(norm.t(), 1);
    }

    #[test]
    fn shift_underflow_is_an_error() {
        let g = graph(&[1, 1]);
        let c = EdgeColoring::new(g, 2, vec![2]).unwrap();
        assert!(matches!(
            c.shift(-2),
            Err(Error::ColorUnderflow { color: 2, delta: -2 })
        ));
    }

    #[test]
    fn shift_round_trip_is_identity() {
        let g = graph(&[2, 2, 1]);
        let colors: Vec<u32> = (0..g.edge_count() as u32).map(|i| i % 4 + 1).collect();
        let c = EdgeColoring::new(g, 4, colors).unwrap();
        for k in 1..=5i64 {
            assert_eq!(c.shift(k).unwrap().shift(-k).unwrap(), c);
        }
    }

    #[test]
    fn spectrum_summary() {
        assert_eq!(Spectrum::from_colors(&[]), Spectrum::EMPTY);
        assert!(Spectrum::EMPTY.is_interval());

        let s = Spectrum::from_colors(&[3, 5, 4]);
        assert_eq!((s.lo(), s.hi(), s.size()), (3, 5, 3));
        assert!(s.is_interval());

        let gap = Spectrum::from_colors(&[1, 3]);
        assert!(!gap.is_interval());

        // size counts distinct colors
        let dup = Spectrum::from_colors(&[2, 2, 3]);
        assert_eq!(dup.size(), 2);
        assert!(dup.is_interval());
    }

    #[test]
    fn vertex_id_serde_is_pair() {
        let v = VertexId::new(1, 3);
        assert_eq!(serde_json::to_string(&v).unwrap(), "[1,3]");
        let back: VertexId = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(back, v);
    }
}
