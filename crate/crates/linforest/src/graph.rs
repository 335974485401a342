//! Undirected simple graphs on at most 62 vertices, stored as per-vertex
//! adjacency bit rows.
//!
//! The 62-vertex cap matches single-byte graph6 headers and keeps every row in
//! one machine word. Vertex labels are 0-based. A `Graph` is immutable once
//! constructed; all algebra (union, join, complement) returns new values.

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 62;

/// An undirected simple graph. Row `v` has bit `u` set iff `{u,v}` is an edge.
///
/// Invariants (checked by [`Graph::validate`]):
/// - symmetry: bit `u` of row `v` equals bit `v` of row `u`,
/// - irreflexivity: bit `v` of row `v` is 0,
/// - all bits at positions `>= n` are 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline(always)]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            requested: n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_capacity(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        check_capacity(n)?;
        let mask = low_mask(n);
        let adj = (0..n).map(|v| mask & !bit(v)).collect();
        let g = Graph { n, adj };
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// The path P_n with edges `{i, i+1}` for `0 <= i < n-1`.
    pub fn path(n: usize) -> Result<Graph> {
        check_capacity(n)?;
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.set_edge(i - 1, i);
        }
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are allowed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        let g = Graph { n, adj };
        debug_assert!(g.validate().is_ok());
        g
    }

    #[inline(always)]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    /// Neighbor bit row of `v`.
    #[inline(always)]
    pub fn row(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj.iter().map(|r| r.count_ones()).sum();
        (total / 2) as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut rest = self.adj[u] & !low_mask(u + 1);
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some((u, v))
                }
            })
        })
    }

    /// Checks symmetry, irreflexivity and that no bits sit at positions `>= n`.
    pub fn validate(&self) -> Result<()> {
        if self.adj.len() != self.n {
            return Err(Error::Inconsistency(format!(
                "row count {} != n {}",
                self.adj.len(),
                self.n
            )));
        }
        let mask = low_mask(self.n);
        for v in 0..self.n {
            if self.adj[v] & !mask != 0 {
                return Err(Error::Inconsistency(format!("row {v} has bits >= n")));
            }
            if self.adj[v] & bit(v) != 0 {
                return Err(Error::Inconsistency(format!("self-loop at {v}")));
            }
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return Err(Error::Inconsistency(format!("asymmetry at ({u},{v})")));
                }
            }
        }
        Ok(())
    }

    /// Disjoint union. Vertices of `other` are relabeled by offset `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows(n, adj))
    }

    /// Join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Complement within the same vertex set. An involution.
    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n)
            .map(|v| (!self.adj[v]) & mask & !bit(v))
            .collect();
        Graph::from_rows(self.n, adj)
    }

    /// Subgraph induced by `set`, relabeled to `0..set.len()` keeping order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph> {
        set.check_within(self)?;
        let verts: Vec<usize> = set.iter().collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Number of edges with one endpoint in `s1` and the other in `s2`.
    /// The sets must be disjoint.
    pub fn edges_between(&self, s1: VertexSet, s2: VertexSet) -> Result<usize> {
        s1.check_within(self)?;
        s2.check_within(self)?;
        if s1.bits & s2.bits != 0 {
            return Err(Error::InvalidArgument(
                "edges_between requires disjoint vertex sets".into(),
            ));
        }
        let count: u32 = s1
            .iter()
            .map(|v| (self.adj[v] & s2.bits).count_ones())
            .sum();
        Ok(count as usize)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A subset of the vertices of some host graph, as one bit row.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet { bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> VertexSet {
        let mut bits = 0;
        for v in indices {
            assert!(v < 64, "vertex index {v} out of range");
            bits |= bit(v);
        }
        VertexSet { bits }
    }

    /// Vertices `0..k` of a host graph.
    pub fn first(k: usize) -> VertexSet {
        VertexSet { bits: low_mask(k) }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits & bit(v) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    fn check_within(self, g: &Graph) -> Result<()> {
        if self.bits & !low_mask(g.n()) != 0 {
            Err(Error::InvalidArgument(format!(
                "vertex set has members >= n ({})",
                g.n()
            )))
        } else {
            Ok(())
        }
    }
}
