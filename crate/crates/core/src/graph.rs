//! Simple undirected graphs on at most 16 vertices, stored as per-vertex
//! neighbor bitmasks.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 16;

/// A simple undirected graph. Vertex `v`'s neighbors are the set bits of
/// `adjacency[v]`; entries at index `n` and above are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: [u16; MAX_VERTICES],
    id: Option<u32>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "graphs must have 1..={MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Self {
            n,
            adjacency: [0; MAX_VERTICES],
            id: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking symmetry, loops and
    /// out-of-range bits.
    pub fn from_adjacency(masks: &[u16]) -> Result<Self> {
        let n = masks.len();
        let mut g = Self::empty(n)?;
        let valid = if n == MAX_VERTICES {
            u16::MAX
        } else {
            (1u16 << n) - 1
        };
        for (v, &m) in masks.iter().enumerate() {
            if m & !valid != 0 {
                return Err(Error::Parameter(format!(
                    "vertex {v} has neighbor bits beyond n={n}"
                )));
            }
            if m >> v & 1 == 1 {
                return Err(Error::Parameter(format!("self-loop at vertex {v}")));
            }
            g.adjacency[v] = m;
        }
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::Parameter(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Parameter(format!(
                "edge ({u}, {v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Parameter(format!("self-loop at vertex {u}")));
        }
        self.adjacency[u] |= 1 << v;
        self.adjacency[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn id(&self) -> Option<u32> {
        self.id
    }

    pub fn with_id(mut self, id: u32) -> Self {
        self.id = Some(id);
        self
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[u16] {
        &self.adjacency[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency()
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adjacency[u] >> (u + 1);
            let mut v = u + 1;
            while higher != 0 {
                if higher & 1 == 1 {
                    out.push((u, v));
                }
                higher >>= 1;
                v += 1;
            }
        }
        out
    }

    /// Vertex set reachable from `start` without passing through vertices in
    /// `removed`.
    pub(crate) fn reach(&self, start: usize, removed: u16) -> u16 {
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adjacency[v];
            }
            next &= !seen & !removed;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub(crate) fn all_vertices(&self) -> u16 {
        if self.n == MAX_VERTICES {
            u16::MAX
        } else {
            (1u16 << self.n) - 1
        }
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.reach(0, 0) == self.all_vertices()
    }

    /// Applies `perm`: vertex `v` of `self` becomes vertex `perm[v]` of the
    /// result. The id is carried over.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Self {
        let mut out = Self {
            n: self.n,
            adjacency: [0; MAX_VERTICES],
            id: self.id,
        };
        for v in 0..self.n {
            let mut m = self.adjacency[v];
            let mut image = 0u16;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                image |= 1 << perm[u];
            }
            out.adjacency[perm[v]] = image;
        }
        out
    }

    /// Same vertex count and edge set, ignoring ids.
    pub fn same_edges(&self, other: &Self) -> bool {
        self.n == other.n && self.adjacency() == other.adjacency()
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = g.all_vertices();
        for v in 0..n {
            g.adjacency[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::UnsupportedSize(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_edges(a + b, &edges)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "length {} does not match n={n}",
            perm.len()
        )));
    }
    let mut seen = 0u32;
    for &p in perm {
        if p >= n || seen >> p & 1 == 1 {
            return Err(Error::InvalidPermutation(format!(
                "{perm:?} is not a bijection"
            )));
        }
        seen |= 1 << p;
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("id", &self.id)
            .field("edges", &self.edges())
            .finish()
    }
}
