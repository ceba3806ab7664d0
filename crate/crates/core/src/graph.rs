use std::fmt;

use crate::bitset;
use crate::combinatorics::colex_pairs;
use crate::error::{Error, Result};

/// Simple undirected graph on `0..n` stored as bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph2 {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph2 {
    pub fn new(n: usize) -> Self {
        let words = bitset::words_for(n);
        Self { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for (u, v) in colex_pairs(n) {
            g.insert(u, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        if n >= 3 {
            for v in 0..n {
                g.insert(v, (v + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Self::new(10);
        for i in 0..5 {
            g.insert(i, (i + 1) % 5);
            g.insert(i, i + 5);
            g.insert(i + 5, (i + 2) % 5 + 5);
        }
        g
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.insert(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        let w = self.words;
        bitset::set(&mut self.rows[u * w..(u + 1) * w], v);
        bitset::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::test(self.row(u), v)
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::iter_ones(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `|N(u) ∪ N(v) \ {u, v}|`.
    pub fn union_neighbourhood_size(&self, u: usize, v: usize) -> usize {
        let (ru, rv) = (self.row(u), self.row(v));
        let mut total = 0;
        for i in 0..self.words {
            total += (ru[i] | rv[i]).count_ones() as usize;
        }
        total - usize::from(bitset::test(rv, u)) - usize::from(bitset::test(ru, v))
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::new(self.n);
        for (u, v) in colex_pairs(self.n) {
            if !self.has_edge(u, v) {
                g.insert(u, v);
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.insert(a, b);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &u)| vertices[a + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &u)| vertices[a + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }
}

impl fmt::Debug for Graph2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph2").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph2::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Graph2::petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn wide_rows() {
        let mut g = Graph2::new(130);
        g.add_edge(0, 129).unwrap();
        g.add_edge(64, 129).unwrap();
        assert_eq!(g.neighbours(129).collect::<Vec<_>>(), vec![0, 64]);
        assert_eq!(g.union_neighbourhood_size(0, 64), 1);
        assert_eq!(g.union_neighbourhood_size(0, 129), 1);
        assert_eq!(g.complement().edge_count(), 130 * 129 / 2 - 2);
    }
}
