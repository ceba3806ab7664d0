use crate::error::{Error, Result};

pub type Triple = [usize; 3];

/// 3-uniform hypergraph on `0..n`. Edges are sorted triples kept in
/// lexicographic order without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<Triple>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph3 {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut sorted = Vec::new();
        for e in edges {
            let mut t = e;
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::DegenerateEdge(e));
            }
            if t[2] >= n {
                return Err(Error::VertexOutOfRange { vertex: t[2], n });
            }
            sorted.push(t);
        }
        sorted.sort_unstable();
        sorted.dedup();
        let mut incidence = vec![Vec::new(); n];
        for (id, e) in sorted.iter().enumerate() {
            for &v in e {
                incidence[v].push(id);
            }
        }
        Ok(Self { n, edges: sorted, incidence })
    }

    /// The complete 3-graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = crate::combinatorics::colex_triples(n).map(|(i, j, k)| [i, j, k]);
        Self::new(n, edges).expect("complete triples are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Ids of the edges containing `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.incidence[v].len())
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.incidence[v].is_empty()).collect()
    }

    /// Drops isolated vertices and relabels the rest in increasing order.
    /// Returns the compacted hypergraph and the original id of each new vertex.
    pub fn strip_isolated(&self) -> (Self, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n).filter(|&v| !self.incidence[v].is_empty()).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self.edges.iter().map(|e| e.map(|v| new_id[v]));
        let h = Self::new(kept.len(), edges).expect("relabelling preserves validity");
        (h, kept)
    }
}

/// Degree of `v` in `h`.
pub fn degree3(h: &Hypergraph3, v: usize) -> Result<usize> {
    h.degree(v)
}
