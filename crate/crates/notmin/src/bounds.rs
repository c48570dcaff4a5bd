//! Inversion-complexity numbers: formulas versus unrestricted circuits.
//!
//! Formulas need `d(f)` NOT operators; circuits with reusable fan-out need
//! only `ceil(log2(d(f) + 1))`, the classical bound due to Markov. The two
//! first part ways at `d = 3`, where a circuit saves one NOT.

use crate::chains::decrease;
use crate::error::{Error, Result};
use crate::tt::TruthTable;

/// Minimum NOT operators over all formulas computing the function: `d(f)`.
pub fn formula_inversion_complexity(tt: &TruthTable) -> u32 {
    decrease(tt).d()
}

/// Minimum NOT gates over all circuits computing the function:
/// `ceil(log2(d(f) + 1))`. Reported as a number only; this crate constructs
/// formulas, not circuits.
pub fn circuit_inversion_complexity(tt: &TruthTable) -> u32 {
    ceil_log2(u64::from(decrease(tt).d()) + 1)
}

/// NOT gates sufficient for a circuit to compute any function of `n`
/// variables: `ceil(log2(n + 1))`.
pub fn markov_variable_bound(n: usize) -> Result<u32> {
    if n == 0 {
        return Err(Error::UnsupportedArity(0));
    }
    Ok(ceil_log2(n as u64 + 1))
}

fn ceil_log2(m: u64) -> u32 {
    if m <= 1 {
        0
    } else {
        u64::BITS - (m - 1).leading_zeros()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity(n: usize) -> TruthTable {
        TruthTable::from_fn(n, |i| (i as u32).count_ones() % 2 == 1)
    }

    #[test]
    fn formula_complexity_is_the_decrease() {
        assert_eq!(
            formula_inversion_complexity(&TruthTable::from_hex(2, "6").unwrap()),
            1
        );
        assert_eq!(
            formula_inversion_complexity(&TruthTable::from_hex(2, "8").unwrap()),
            0
        );
        assert_eq!(formula_inversion_complexity(&parity(6)), 3);
    }

    #[test]
    fn circuit_complexity_is_logarithmic() {
        assert_eq!(
            circuit_inversion_complexity(&TruthTable::constant(2, true)),
            0
        );
        assert_eq!(
            circuit_inversion_complexity(&TruthTable::from_hex(2, "6").unwrap()),
            1
        );
        // First saving over the formula count: d = 3 needs only 2 gates.
        assert_eq!(circuit_inversion_complexity(&parity(6)), 2);
    }

    #[test]
    fn variable_bound_values() {
        assert_eq!(markov_variable_bound(1), Ok(1));
        assert_eq!(markov_variable_bound(3), Ok(2));
        assert_eq!(markov_variable_bound(7), Ok(3));
        assert_eq!(markov_variable_bound(0), Err(Error::UnsupportedArity(0)));
    }

    #[test]
    fn bound_orderings_hold_exhaustively_up_to_4() {
        for n in 1..=4usize {
            let size = 1usize << n;
            let variable_bound = markov_variable_bound(n).unwrap();
            for idx in 0u64..1 << size {
                let tt = TruthTable::from_fn(n, |i| idx >> i & 1 == 1);
                let formula = formula_inversion_complexity(&tt);
                let circuit = circuit_inversion_complexity(&tt);
                assert!(circuit <= formula);
                assert!(formula as usize <= n.div_ceil(2));
                assert!(circuit <= variable_bound);
            }
        }
    }
}
