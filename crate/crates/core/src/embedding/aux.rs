use crate::colouring::{Colour, TripleColouring};
use crate::combinatorics::pair_rank_unchecked;
use crate::error::{Error, Result};
use crate::graph::Graph2;

/// Scarce-pair graph of a colouring: `{u, v}` is a red pair when it lies in
/// fewer than `d_r` red triples, and a blue pair when it lies in fewer than
/// `d_b` blue triples. A pair may be both or neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub red: Graph2,
    pub blue: Graph2,
    pub d_r: usize,
    pub d_b: usize,
}

impl AuxGraph {
    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn pairs(&self, colour: Colour) -> &Graph2 {
        match colour {
            Colour::Red => &self.red,
            Colour::Blue => &self.blue,
        }
    }
}

pub fn build_aux_graph(c: &TripleColouring, d_r: usize, d_b: usize) -> Result<AuxGraph> {
    if d_r == 0 || d_b == 0 {
        return Err(Error::InvalidParams("thresholds d_r, d_b must be at least 1".into()));
    }
    let n = c.n();
    let counts = c.red_pair_counts();
    let mut red = Graph2::new(n);
    let mut blue = Graph2::new(n);
    for v in 1..n {
        for u in 0..v {
            let r = counts[pair_rank_unchecked(u, v)] as usize;
            if r < d_r {
                red.insert(u, v);
            }
            if n - 2 - r < d_b {
                blue.insert(u, v);
            }
        }
    }
    Ok(AuxGraph { red, blue, d_r, d_b })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexDichotomy {
    pub red_degree: usize,
    pub blue_degree: usize,
    /// `red_degree <= 2 d_b` or `blue_degree <= 2 d_r`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma4Report {
    pub vertices: Vec<VertexDichotomy>,
    pub violations: Vec<usize>,
}

impl Lemma4Report {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks at every vertex that its red scarce-pair degree is at most
/// `2 d_b` or its blue scarce-pair degree is at most `2 d_r`.
/// Requires `n >= d_r + d_b + 1`.
pub fn check_lemma4(c: &TripleColouring, d_r: usize, d_b: usize) -> Result<Lemma4Report> {
    if c.n() < d_r + d_b + 1 {
        return Err(Error::InvalidParams(format!(
            "need at least d_r + d_b + 1 = {} vertices, colouring has {}",
            d_r + d_b + 1,
            c.n()
        )));
    }
    let aux = build_aux_graph(c, d_r, d_b)?;
    let vertices: Vec<VertexDichotomy> = (0..c.n())
        .map(|u| {
            let red_degree = aux.red.degree(u);
            let blue_degree = aux.blue.degree(u);
            VertexDichotomy { red_degree, blue_degree, holds: red_degree <= 2 * d_b || blue_degree <= 2 * d_r }
        })
        .collect();
    let violations = (0..c.n()).filter(|&u| !vertices[u].holds).collect();
    Ok(Lemma4Report { vertices, violations })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMarking {
    pub marks: Vec<Colour>,
    pub majority: Colour,
    /// Vertices carrying the majority mark, ascending.
    pub v1: Vec<usize>,
}

/// Marks a vertex red when its red scarce-pair degree is at most
/// `threshold`, blue otherwise. Ties in class size go to red.
pub fn mark_vertices(aux: &AuxGraph, threshold: usize) -> VertexMarking {
    let marks: Vec<Colour> =
        (0..aux.n()).map(|v| if aux.red.degree(v) <= threshold { Colour::Red } else { Colour::Blue }).collect();
    let reds = marks.iter().filter(|&&m| m == Colour::Red).count();
    let majority = if 2 * reds >= marks.len() { Colour::Red } else { Colour::Blue };
    let v1 = (0..marks.len()).filter(|&v| marks[v] == majority).collect();
    VertexMarking { marks, majority, v1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::derive_colouring;
    use crate::combinatorics::colex_pairs;

    #[test]
    fn all_red_thresholds() {
        let c = TripleColouring::monochromatic(5, Colour::Red);
        let aux = build_aux_graph(&c, 1, 1).unwrap();
        assert_eq!(aux.red.edge_count(), 0);
        assert_eq!(aux.blue.edge_count(), 10);

        let aux = build_aux_graph(&c, 4, 1).unwrap();
        assert_eq!(aux.red.edge_count(), 10);
        assert_eq!(aux.blue.edge_count(), 10);
        assert!(build_aux_graph(&c, 0, 1).is_err());
    }

    #[test]
    fn derived_single_edge() {
        let c = derive_colouring(&Graph2::from_edges(4, [(0, 1)]).unwrap());
        let aux = build_aux_graph(&c, 1, 1).unwrap();
        assert!(aux.blue.has_edge(0, 1) && !aux.red.has_edge(0, 1));
        assert!(aux.red.has_edge(2, 3) && !aux.blue.has_edge(2, 3));
    }

    #[test]
    fn disjoint_when_enough_triples() {
        let c = TripleColouring::random(9, 0.5, 17).unwrap();
        for (d_r, d_b) in [(1, 1), (3, 4), (4, 4), (2, 6)] {
            let aux = build_aux_graph(&c, d_r, d_b).unwrap();
            assert!(7 >= d_r + d_b - 1);
            assert!(colex_pairs(9).all(|(u, v)| !(aux.red.has_edge(u, v) && aux.blue.has_edge(u, v))));
        }
    }

    #[test]
    fn lemma4_precondition_and_all_red() {
        let c = TripleColouring::monochromatic(5, Colour::Red);
        let r = check_lemma4(&c, 1, 1).unwrap();
        assert!(r.holds());
        assert!(r.vertices.iter().all(|v| v.red_degree == 0));
        assert!(check_lemma4(&c, 2, 3).is_err());
    }

    #[test]
    fn marking_examples() {
        let n = 10;
        let all_blue_pairs = AuxGraph { red: Graph2::new(n), blue: Graph2::complete(n), d_r: 1, d_b: 1 };
        let m = mark_vertices(&all_blue_pairs, 3);
        assert_eq!(m.majority, Colour::Red);
        assert_eq!(m.v1, (0..n).collect::<Vec<_>>());

        let all_red_pairs = AuxGraph { red: Graph2::complete(n), blue: Graph2::new(n), d_r: 1, d_b: 1 };
        let m = mark_vertices(&all_red_pairs, 3);
        assert_eq!(m.majority, Colour::Blue);
        assert_eq!(m.v1.len(), n);

        // vertices 0..5 have red degree 4, vertices 5..10 have 0
        let red = Graph2::from_edges(n, colex_pairs(5)).unwrap();
        let half = AuxGraph { red, blue: Graph2::new(n), d_r: 1, d_b: 1 };
        let m = mark_vertices(&half, 3);
        assert_eq!(m.marks.iter().filter(|&&c| c == Colour::Red).count(), 5);
        assert_eq!(m.majority, Colour::Red);
        assert_eq!(m.v1, vec![5, 6, 7, 8, 9]);
    }
}
