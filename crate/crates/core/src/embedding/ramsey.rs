use rayon::prelude::*;

use super::exact::find_mono_copy_exact;
use crate::colouring::{Colour, TripleColouring};
use crate::combinatorics::choose3;
use crate::error::{Error, Result};
use crate::hedgehog::Hedgehog;

/// Largest number of triples enumerated exhaustively (`2^20` colourings,
/// reached at 6 vertices).
pub const MAX_EXHAUSTIVE_TRIPLES: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyOutcome {
    Number(usize),
    Exceeds(usize),
}

/// True iff every red/blue colouring of the complete 3-graph on `n`
/// vertices has a red copy of `h_red` or a blue copy of `h_blue`.
///
/// Colourings are enumerated as integers whose bit `r` colours the triple
/// of colex rank `r`; the answer does not depend on how the range is split
/// across workers.
pub fn ramsey_exact(h_red: &Hedgehog, h_blue: &Hedgehog, n: usize) -> Result<bool> {
    if h_red.n_total() > n && h_blue.n_total() > n {
        return Ok(false);
    }
    let triples = choose3(n as u64);
    if triples > MAX_EXHAUSTIVE_TRIPLES {
        return Err(Error::TooLargeForExhaustion { triples });
    }
    let avoiding = (0u64..1 << triples).into_par_iter().find_any(|&code| {
        let bits = if triples == 0 { Vec::new() } else { vec![code] };
        let c = TripleColouring::from_bits(n, bits).expect("code fits in C(n,3) bits");
        find_mono_copy_exact(&c, h_red, Colour::Red).is_none()
            && find_mono_copy_exact(&c, h_blue, Colour::Blue).is_none()
    });
    Ok(avoiding.is_none())
}

/// Least `n <= n_max` for which [`ramsey_exact`] holds.
pub fn ramsey_number(h_red: &Hedgehog, h_blue: &Hedgehog, n_max: usize) -> Result<RamseyOutcome> {
    for n in 0..=n_max {
        if ramsey_exact(h_red, h_blue, n)? {
            return Ok(RamseyOutcome::Number(n));
        }
    }
    Ok(RamseyOutcome::Exceeds(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hedgehog::standard_hedgehog;

    #[test]
    fn single_edge() {
        let e = standard_hedgehog(2).unwrap();
        assert!(!ramsey_exact(&e, &e, 2).unwrap());
        assert!(ramsey_exact(&e, &e, 3).unwrap());
        assert_eq!(ramsey_number(&e, &e, 6).unwrap(), RamseyOutcome::Number(3));
        assert_eq!(ramsey_number(&e, &e, 2).unwrap(), RamseyOutcome::Exceeds(2));
    }

    #[test]
    fn refuses_large_hosts() {
        let e = standard_hedgehog(2).unwrap();
        assert_eq!(ramsey_exact(&e, &e, 7), Err(Error::TooLargeForExhaustion { triples: 35 }));
    }
}
