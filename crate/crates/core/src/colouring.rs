//! Red/blue colourings of the complete 3-graph on `[0, n)`.

use std::fmt;

use crate::combinatorics::{choose3, colex_triples, pair_rank_unchecked, triple_rank_unchecked};
use crate::error::{Error, Result};
use crate::graph::Graph2;
use crate::rng::{SplitMix64, Threshold};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Self {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Colour {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "red" => Ok(Colour::Red),
            "blue" => Ok(Colour::Blue),
            other => Err(Error::InvalidParams(format!("unknown colour {other:?}"))),
        }
    }
}

/// Default cap on the number of triples [`TripleColouring::materialise`]
/// will store (2^32 bits, 512 MiB).
pub const DEFAULT_MATERIALISE_BUDGET: u64 = 1 << 32;

#[derive(Clone, PartialEq, Eq)]
enum Source {
    /// Bit `r` set means the triple of colex rank `r` is red.
    Bits(Vec<u64>),
    /// Red iff the triple contains an edge of the graph.
    Derived(Graph2),
}

/// A total 2-colouring of the triples of `[0, n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TripleColouring {
    n: usize,
    source: Source,
}

impl TripleColouring {
    /// Explicit colouring from colex-ranked bits; bits beyond `C(n,3)` must
    /// be clear.
    pub fn from_bits(n: usize, bits: Vec<u64>) -> Result<Self> {
        let triples = choose3(n as u64);
        let words = triples.div_ceil(64) as usize;
        if bits.len() != words {
            return Err(Error::InvalidParams(format!(
                "expected {words} words for {triples} triples, got {}",
                bits.len()
            )));
        }
        if !triples.is_multiple_of(64) && bits[words - 1] >> (triples % 64) != 0 {
            return Err(Error::InvalidParams("bits set beyond the last triple".into()));
        }
        Ok(Self { n, source: Source::Bits(bits) })
    }

    pub fn from_fn<F>(n: usize, mut red: F) -> Self
    where
        F: FnMut(usize, usize, usize) -> bool,
    {
        let triples = choose3(n as u64);
        let mut bits = vec![0u64; triples.div_ceil(64) as usize];
        for (r, (i, j, k)) in colex_triples(n).enumerate() {
            if red(i, j, k) {
                bits[r / 64] |= 1 << (r % 64);
            }
        }
        Self { n, source: Source::Bits(bits) }
    }

    pub fn monochromatic(n: usize, colour: Colour) -> Self {
        Self::from_fn(n, |_, _, _| colour == Colour::Red)
    }

    /// The colouring in which a triple is red iff it contains an edge of
    /// `gamma`.
    pub fn derived(gamma: Graph2) -> Self {
        Self { n: gamma.n(), source: Source::Derived(gamma) }
    }

    /// Each triple red independently with probability `red_bias`, drawing one
    /// SplitMix64 value per triple in colex order.
    pub fn random(n: usize, red_bias: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&red_bias) {
            return Err(Error::InvalidParams(format!("red bias {red_bias} outside [0, 1]")));
        }
        let threshold = Threshold::from_probability(red_bias);
        let mut rng = SplitMix64::new(seed);
        Ok(Self::from_fn(n, |_, _, _| rng.bernoulli(threshold)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.source, Source::Bits(_))
    }

    pub fn derived_graph(&self) -> Option<&Graph2> {
        match &self.source {
            Source::Derived(g) => Some(g),
            Source::Bits(_) => None,
        }
    }

    /// Colour of the triple `{a, b, c}` (distinct, any order).
    #[inline]
    pub fn colour(&self, a: usize, b: usize, c: usize) -> Colour {
        if self.is_red(a, b, c) {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    #[inline]
    pub fn is_red(&self, a: usize, b: usize, c: usize) -> bool {
        debug_assert!(a != b && b != c && a != c);
        match &self.source {
            Source::Derived(g) => g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c),
            Source::Bits(bits) => {
                let mut t = [a, b, c];
                t.sort_unstable();
                let r = triple_rank_unchecked(t[0], t[1], t[2]) as usize;
                bits[r / 64] >> (r % 64) & 1 == 1
            }
        }
    }

    /// `(red, blue)` counts of the triples `{u, v, w}` over `w != u, v`.
    pub fn pair_colour_counts(&self, u: usize, v: usize) -> Result<(usize, usize)> {
        if u == v {
            return Err(Error::InvalidPair(u, v));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let red = match &self.source {
            Source::Derived(g) => {
                if g.has_edge(u, v) {
                    self.n - 2
                } else {
                    g.union_neighbourhood_size(u, v)
                }
            }
            Source::Bits(_) => (0..self.n).filter(|&w| w != u && w != v && self.is_red(u, v, w)).count(),
        };
        Ok((red, self.n - 2 - red))
    }

    /// Red counts for every pair, indexed by colex pair rank.
    pub fn red_pair_counts(&self) -> Vec<u32> {
        let n = self.n;
        let mut counts = vec![0u32; n * n.saturating_sub(1) / 2];
        match &self.source {
            Source::Derived(g) => {
                for v in 1..n {
                    for u in 0..v {
                        counts[pair_rank_unchecked(u, v)] =
                            if g.has_edge(u, v) { (n - 2) as u32 } else { g.union_neighbourhood_size(u, v) as u32 };
                    }
                }
            }
            Source::Bits(bits) => {
                let mut r = 0usize;
                for k in 2..n {
                    for j in 1..k {
                        let jk = pair_rank_unchecked(j, k);
                        for i in 0..j {
                            if bits[r / 64] >> (r % 64) & 1 == 1 {
                                counts[pair_rank_unchecked(i, j)] += 1;
                                counts[pair_rank_unchecked(i, k)] += 1;
                                counts[jk] += 1;
                            }
                            r += 1;
                        }
                    }
                }
            }
        }
        counts
    }

    /// Explicit copy of this colouring, refusing more than `budget` triples.
    pub fn materialise(&self, budget: u64) -> Result<Self> {
        let triples = choose3(self.n as u64);
        if triples > budget {
            return Err(Error::BudgetExceeded { triples, budget });
        }
        match &self.source {
            Source::Bits(_) => Ok(self.clone()),
            Source::Derived(_) => Ok(Self::from_fn(self.n, |i, j, k| self.is_red(i, j, k))),
        }
    }

    /// Serialised bytes of an explicit colouring: `ceil(C(n,3)/8)` bytes,
    /// bit `r` of the colouring at bit `r % 8` of byte `r / 8`.
    pub fn to_bytes(&self) -> Option<Vec<u8>> {
        let Source::Bits(bits) = &self.source else {
            return None;
        };
        let len = choose3(self.n as u64).div_ceil(8) as usize;
        let mut out: Vec<u8> = bits.iter().flat_map(|w| w.to_le_bytes()).collect();
        out.truncate(len);
        Some(out)
    }

    pub fn from_bytes(n: usize, bytes: &[u8]) -> Result<Self> {
        let len = choose3(n as u64).div_ceil(8) as usize;
        if bytes.len() != len {
            return Err(Error::InvalidParams(format!("expected {len} bytes for n = {n}, got {}", bytes.len())));
        }
        let bits = bytes
            .chunks(8)
            .map(|chunk| {
                let mut word = [0u8; 8];
                word[..chunk.len()].copy_from_slice(chunk);
                u64::from_le_bytes(word)
            })
            .collect();
        Self::from_bits(n, bits)
    }
}

impl fmt::Debug for TripleColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_explicit() { "explicit" } else { "derived" };
        write!(f, "TripleColouring {{ n: {}, {kind} }}", self.n)
    }
}

/// Free-function form of [`TripleColouring::derived`].
pub fn derive_colouring(gamma: &Graph2) -> TripleColouring {
    TripleColouring::derived(gamma.clone())
}

pub fn pair_colour_counts(c: &TripleColouring, u: usize, v: usize) -> Result<(usize, usize)> {
    c.pair_colour_counts(u, v)
}

pub fn random_colouring(n: usize, red_bias: f64, seed: u64) -> Result<TripleColouring> {
    TripleColouring::random(n, red_bias, seed)
}

pub fn materialise(c: &TripleColouring) -> Result<TripleColouring> {
    c.materialise(DEFAULT_MATERIALISE_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::colex_pairs;

    fn edge01(n: usize) -> TripleColouring {
        derive_colouring(&Graph2::from_edges(n, [(0, 1)]).unwrap())
    }

    #[test]
    fn derived_rule() {
        let c = edge01(4);
        assert!(c.is_red(0, 1, 2) && c.is_red(0, 1, 3));
        assert!(!c.is_red(0, 2, 3) && !c.is_red(1, 2, 3));
        let empty = derive_colouring(&Graph2::new(6));
        assert!(colex_triples(6).all(|(i, j, k)| !empty.is_red(i, j, k)));
        let full = derive_colouring(&Graph2::complete(6));
        assert!(colex_triples(6).all(|(i, j, k)| full.is_red(i, j, k)));
    }

    #[test]
    fn pair_count_examples() {
        let c = edge01(4);
        assert_eq!(c.pair_colour_counts(0, 1).unwrap(), (2, 0));
        assert_eq!(c.pair_colour_counts(2, 3).unwrap(), (0, 2));
        let red = TripleColouring::monochromatic(5, Colour::Red);
        for (u, v) in colex_pairs(5) {
            assert_eq!(red.pair_colour_counts(u, v).unwrap(), (3, 0));
        }
        assert!(c.pair_colour_counts(1, 1).is_err());
        assert!(c.pair_colour_counts(1, 4).is_err());
    }

    #[test]
    fn random_extremes_and_determinism() {
        let red = random_colouring(7, 1.0, 3).unwrap();
        assert_eq!(red, TripleColouring::monochromatic(7, Colour::Red));
        let blue = random_colouring(7, 0.0, 3).unwrap();
        assert_eq!(blue, TripleColouring::monochromatic(7, Colour::Blue));
        assert_eq!(random_colouring(6, 0.5, 7).unwrap(), random_colouring(6, 0.5, 7).unwrap());
        assert!(random_colouring(6, 1.5, 7).is_err());
    }

    #[test]
    fn materialise_examples() {
        let m = materialise(&edge01(4)).unwrap();
        assert_eq!(m.to_bytes().unwrap(), vec![0b0011]);
        let blue = TripleColouring::monochromatic(8, Colour::Blue);
        assert!(materialise(&blue).unwrap().to_bytes().unwrap().iter().all(|&b| b == 0));
        assert_eq!(materialise(&m).unwrap(), m);
        assert_eq!(edge01(10).materialise(100), Err(Error::BudgetExceeded { triples: 120, budget: 100 }));
    }

    #[test]
    fn bytes_round_trip() {
        let c = random_colouring(9, 0.4, 11).unwrap();
        let bytes = c.to_bytes().unwrap();
        assert_eq!(bytes.len(), 11); // C(9,3) = 84 bits
        assert_eq!(TripleColouring::from_bytes(9, &bytes).unwrap(), c);
        assert!(TripleColouring::from_bytes(9, &bytes[1..]).is_err());
    }

    #[test]
    fn bulk_counts_match_pairwise() {
        for c in [random_colouring(11, 0.3, 5).unwrap(), edge01(11)] {
            let counts = c.red_pair_counts();
            for (u, v) in colex_pairs(11) {
                let (red, _) = c.pair_colour_counts(u, v).unwrap();
                assert_eq!(counts[pair_rank_unchecked(u, v)] as usize, red);
            }
        }
    }
}
