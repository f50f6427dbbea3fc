//! Undirected graphs, vertex orderings and left neighborhoods.
//!
//! Vertices are `0..n` inside the library. Text formats and the command line
//! use `1..=n`; the conversion happens in [`crate::io`] only.

use std::fmt;

use crate::bits::{BitMatrix, Ones};
use crate::error::{Error, Result};

/// Largest vertex count accepted by default. The parallel engine keeps
/// several `n x n` tables, so memory grows quadratically.
pub const DEFAULT_MAX_VERTICES: usize = 20_000;

/// Immutable simple undirected graph.
///
/// Both an adjacency bit matrix (constant-time adjacency tests) and sorted
/// adjacency lists in CSR form (linear scans) are always present.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    matrix: BitMatrix,
}

pub type Neighbors<'a> = std::iter::Map<std::slice::Iter<'a, u32>, fn(&u32) -> usize>;

fn widen(v: &u32) -> usize {
    *v as usize
}

impl Graph {
    /// Builds a graph from 0-based vertex pairs. Repeated pairs collapse to a
    /// single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_with_limit(n, edges, DEFAULT_MAX_VERTICES)
    }

    pub fn from_edges_with_limit<I>(n: usize, edges: I, limit: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = GraphBuilder::with_limit(n, limit)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Assembles a graph from already sorted, symmetric, loop-free adjacency
    /// lists. Used by generators that know their output is well formed.
    pub(crate) fn from_sorted_adjacency(n: usize, offsets: Vec<usize>, targets: Vec<u32>) -> Self {
        debug_assert_eq!(offsets.len(), n + 1);
        debug_assert_eq!(*offsets.last().unwrap_or(&0), targets.len());
        let mut matrix = BitMatrix::new(n, n);
        for u in 0..n {
            for &v in &targets[offsets[u]..offsets[u + 1]] {
                matrix.set(u, v as usize, true);
            }
        }
        Self {
            n,
            m: targets.len() / 2,
            offsets,
            targets,
            matrix,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Sorted neighbors of `v`.
    ///
    /// # Panics
    /// If `v` is not a vertex; see [`Graph::try_neighbors`].
    #[inline]
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        self.neighbor_slice(v).iter().map(widen as fn(&u32) -> usize)
    }

    pub fn try_neighbors(&self, v: usize) -> Result<Neighbors<'_>> {
        if v >= self.n {
            return Err(Error::InvalidVertex { vertex: v, n: self.n });
        }
        Ok(self.neighbors(v))
    }

    #[inline]
    pub fn neighbor_slice(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix.get(u, v)
    }

    pub fn adjacency_matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Copy of the graph with vertex `v` renamed to `new_id[v]`.
    pub fn relabeled(&self, new_id: &[usize]) -> Graph {
        assert_eq!(new_id.len(), self.n, "relabeling must cover every vertex");
        let mut builder = GraphBuilder::with_limit(self.n, usize::MAX).expect("limit is unbounded");
        for (u, v) in self.edges() {
            builder
                .add_edge(new_id[u], new_id[v])
                .expect("a permutation of valid vertices stays valid");
        }
        builder.build()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental edge collection with duplicate detection through the
/// adjacency matrix.
pub struct GraphBuilder {
    n: usize,
    matrix: BitMatrix,
    edges: Vec<(u32, u32)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, DEFAULT_MAX_VERTICES)
    }

    pub fn with_limit(n: usize, limit: usize) -> Result<Self> {
        if n > limit || n > u32::MAX as usize {
            return Err(Error::GraphTooLarge { n, limit });
        }
        Ok(Self {
            n,
            matrix: BitMatrix::new(n, n),
            edges: Vec::new(),
        })
    }

    /// Adds the 0-based edge `{u, v}`. Returns `false` when it was already
    /// present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::InvalidVertex { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.matrix.get(u, v) {
            return Ok(false);
        }
        self.matrix.set(u, v, true);
        self.matrix.set(v, u, true);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.push((a as u32, b as u32));
        Ok(true)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn build(self) -> Graph {
        let Self { n, matrix, mut edges } = self;
        edges.sort_unstable();
        let mut offsets = vec![0usize; n + 1];
        for &(a, b) in &edges {
            offsets[a as usize + 1] += 1;
            offsets[b as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        // Sorted (a, b) pairs with a < b fill every list in ascending order:
        // entries smaller than the owner arrive first, then the larger ones.
        let mut cursor = offsets.clone();
        let mut targets = vec![0u32; edges.len() * 2];
        for &(a, b) in &edges {
            targets[cursor[a as usize]] = b;
            cursor[a as usize] += 1;
            targets[cursor[b as usize]] = a;
            cursor[b as usize] += 1;
        }
        Graph {
            n,
            m: edges.len(),
            offsets,
            targets,
            matrix,
        }
    }
}

/// A bijection between positions `0..n` and vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    /// `order[i]` is the vertex at position `i`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!(
                    "vertex {} is out of range 1..={n}",
                    v + 1
                )));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {} appears twice", v + 1)));
            }
            position[v] = i;
        }
        Ok(Self { order, position })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    pub fn vertex_at(&self, position: usize) -> usize {
        self.order[position]
    }

    #[inline]
    pub fn position_of(&self, vertex: usize) -> usize {
        self.position[vertex]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.order
    }

    /// Vertices as 1-based ids, the form used by files and the CLI.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.order.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn ensure_covers(&self, g: &Graph) -> Result<()> {
        if self.len() != g.vertex_count() {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} vertices but the graph has {}",
                self.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexOrdering{:?}", self.to_one_based())
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// Left neighborhoods `LN_x` (neighbors of `x` placed before it) and their
/// right-most member, the parent `p_x`.
#[derive(Clone, PartialEq, Eq)]
pub struct LeftNeighborhood {
    rows: BitMatrix,
    parent: Vec<Option<usize>>,
}

impl LeftNeighborhood {
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows.get(x, y)
    }

    /// Members of `LN_x` in ascending vertex order.
    pub fn members(&self, x: usize) -> Ones<'_> {
        self.rows.ones(x)
    }

    pub fn len(&self, x: usize) -> usize {
        self.rows.count_ones(x)
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    pub fn rows(&self) -> &BitMatrix {
        &self.rows
    }
}

impl fmt::Debug for LeftNeighborhood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LeftNeighborhood")
            .field("ln", &self.rows)
            .field("parent", &self.parent)
            .finish()
    }
}

pub fn left_neighborhoods(g: &Graph, ord: &VertexOrdering) -> Result<LeftNeighborhood> {
    ord.ensure_covers(g)?;
    let n = g.vertex_count();
    let mut rows = BitMatrix::new(n, n);
    let mut parent = vec![None; n];
    for (x, slot) in parent.iter_mut().enumerate() {
        let px = ord.position_of(x);
        let mut best: Option<usize> = None;
        for y in g.neighbors(x) {
            let py = ord.position_of(y);
            if py < px {
                rows.set(x, y, true);
                if best.is_none_or(|b| py > ord.position_of(b)) {
                    best = Some(y);
                }
            }
        }
        *slot = best;
    }
    Ok(LeftNeighborhood { rows, parent })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn ord(one_based: &[usize]) -> VertexOrdering {
        VertexOrdering::new(one_based.iter().map(|v| v - 1).collect()).unwrap()
    }

    fn nbrs(g: &Graph, v: usize) -> Vec<usize> {
        g.neighbors(v - 1).map(|u| u + 1).collect()
    }

    #[test]
    fn construction_examples() {
        let p3 = one_based(3, &[(1, 2), (2, 3)]);
        assert_eq!(p3.edge_count(), 2);
        let c4 = one_based(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(c4.edge_count(), 4);
        let dup = one_based(4, &[(1, 2), (2, 1), (2, 3)]);
        assert_eq!(dup.edge_count(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges_with_limit(11, [], 10),
            Err(Error::GraphTooLarge { n: 11, limit: 10 })
        );
    }

    #[test]
    fn neighbor_examples() {
        let c4 = one_based(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(nbrs(&c4, 1), vec![2, 4]);
        let k4 = one_based(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(nbrs(&k4, 3), vec![1, 2, 4]);
        let p3 = one_based(3, &[(1, 2), (2, 3)]);
        assert_eq!(nbrs(&p3, 2), vec![1, 3]);
        assert!(matches!(
            p3.try_neighbors(3),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn left_neighborhood_examples() {
        let c4 = one_based(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let ln = left_neighborhoods(&c4, &ord(&[1, 2, 4, 3])).unwrap();
        assert_eq!(ln.members(2).map(|v| v + 1).collect::<Vec<_>>(), vec![2, 4]);
        assert_eq!(ln.parent(2), Some(3));
        // Brute-force cross-check of every LN row against the definition.
        let o = ord(&[1, 2, 4, 3]);
        for x in 0..4 {
            let expected: Vec<usize> = (0..4)
                .filter(|&y| c4.is_adjacent(x, y) && o.position_of(y) < o.position_of(x))
                .collect();
            assert_eq!(ln.members(x).collect::<Vec<_>>(), expected);
        }

        let k4 = one_based(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let ln = left_neighborhoods(&k4, &ord(&[1, 2, 3, 4])).unwrap();
        assert_eq!(ln.members(3).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(ln.parent(3), Some(2));

        let p3 = one_based(3, &[(1, 2), (2, 3)]);
        let ln = left_neighborhoods(&p3, &ord(&[1, 2, 3])).unwrap();
        assert_eq!(ln.len(0), 0);
        assert_eq!(ln.parent(0), None);
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![0, 2]).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.position_of(2), 0);
        assert_eq!(o.to_string(), "3 1 2");
    }

    #[test]
    fn relabel_preserves_structure() {
        let p3 = one_based(3, &[(1, 2), (2, 3)]);
        let h = p3.relabeled(&[2, 0, 1]);
        assert!(h.is_adjacent(2, 0));
        assert!(h.is_adjacent(0, 1));
        assert!(!h.is_adjacent(2, 1));
    }
}
