//! Splitting a function around its stable set.
//!
//! Every function `f` decomposes against its stable set `S` into three parts
//! that recombine as `stable_part OR (residual AND NOT indicator)`:
//!
//! * `stable_part` agrees with `f` on `S` and is 0 elsewhere,
//! * `residual` is 1 on `S` and agrees with `f` elsewhere,
//! * `indicator` is 1 exactly on `S`.
//!
//! `stable_part` and `indicator` are always monotone, and the decrease of
//! `residual` is exactly one less than the decrease of `f` whenever `f` is not
//! monotone. That single step down is what drives the recursive synthesis in
//! [`crate::synthesis`].

use crate::chains::stable_set;
use crate::error::{Error, Result};
use crate::tt::TruthTable;

/// The three-way split of a function around its stable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// Agrees with the function on the stable set, 0 elsewhere. Monotone.
    pub stable_part: TruthTable,
    /// 1 on the stable set, agrees with the function elsewhere.
    pub residual: TruthTable,
    /// 1 exactly on the stable set. Monotone.
    pub indicator: TruthTable,
    /// The stable-set mask the split was built from, indexed like the table.
    pub stable: Vec<bool>,
}

/// Splits a function around its stable set.
///
/// Total on every function: a monotone input yields the degenerate triple
/// `(f, 1, 1)` because its stable set is the whole domain.
pub fn separate(tt: &TruthTable) -> Separation {
    let n = tt.arity();
    let stable = stable_set(tt);
    let stable_part = TruthTable::from_fn(n, |i| stable[i] && tt.bit(i));
    let residual = TruthTable::from_fn(n, |i| stable[i] || tt.bit(i));
    let indicator = TruthTable::from_fn(n, |i| stable[i]);
    Separation {
        stable_part,
        residual,
        indicator,
        stable,
    }
}

/// Reassembles `stable_part OR (residual AND NOT indicator)` pointwise, which
/// returns the original function for any triple produced by [`separate`].
pub fn recombine(sep: &Separation) -> Result<TruthTable> {
    let n = sep.stable_part.arity();
    for part in [&sep.residual, &sep.indicator] {
        if part.arity() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: part.arity(),
            });
        }
    }
    Ok(TruthTable::from_fn(n, |i| {
        sep.stable_part.bit(i) || (sep.residual.bit(i) && !sep.indicator.bit(i))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::decrease;

    fn from_bits_index(arity: usize, idx: u64) -> TruthTable {
        TruthTable::from_fn(arity, |i| idx >> i & 1 == 1)
    }

    #[test]
    fn xor_splits_into_constant_or_and() {
        let xor2 = TruthTable::from_hex(2, "6").unwrap();
        let sep = separate(&xor2);
        assert_eq!(sep.stable, vec![false, false, false, true]);
        assert!(sep.stable_part.is_constant(false));
        assert_eq!(sep.residual, TruthTable::from_hex(2, "e").unwrap()); // OR
        assert_eq!(sep.indicator, TruthTable::from_hex(2, "8").unwrap()); // AND
        assert_eq!(recombine(&sep), Ok(xor2));
    }

    #[test]
    fn monotone_functions_split_degenerately() {
        let and2 = TruthTable::from_hex(2, "8").unwrap();
        let sep = separate(&and2);
        assert_eq!(sep.stable_part, and2);
        assert!(sep.residual.is_constant(true));
        assert!(sep.indicator.is_constant(true));
        assert_eq!(recombine(&sep), Ok(and2));
    }

    #[test]
    fn negated_variable_splits_into_identity_indicator() {
        let not_x1 = TruthTable::from_hex(1, "1").unwrap();
        let sep = separate(&not_x1);
        assert!(sep.stable_part.is_constant(false));
        assert!(sep.residual.is_constant(true));
        assert_eq!(sep.indicator, TruthTable::from_hex(1, "2").unwrap()); // x1
        assert_eq!(recombine(&sep), Ok(not_x1));
    }

    #[test]
    fn recombine_rejects_mixed_arities() {
        let sep = Separation {
            stable_part: TruthTable::constant(2, false),
            residual: TruthTable::constant(3, true),
            indicator: TruthTable::constant(2, true),
            stable: vec![true; 4],
        };
        assert!(matches!(recombine(&sep), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn split_parts_behave_exhaustively_up_to_3() {
        for n in 1..=3usize {
            let size = 1usize << n;
            for idx in 0u64..1 << size {
                let tt = from_bits_index(n, idx);
                let d = decrease(&tt).d();
                let sep = separate(&tt);
                assert_eq!(decrease(&sep.stable_part).d(), 0, "n={n} fn {idx}");
                assert_eq!(decrease(&sep.indicator).d(), 0, "n={n} fn {idx}");
                assert!(sep.stable_part.is_monotone());
                assert!(sep.indicator.is_monotone());
                if d >= 1 {
                    assert_eq!(decrease(&sep.residual).d(), d - 1, "n={n} fn {idx}");
                }
                assert_eq!(recombine(&sep).unwrap(), tt, "n={n} fn {idx}");
            }
        }
    }
}
