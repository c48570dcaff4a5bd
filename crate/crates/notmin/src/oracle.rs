//! Raw formula enumeration, independent of both the synthesis recursion and
//! the decrease dynamic program.
//!
//! For tiny functions the minimum NOT count can be found by enumerating every
//! formula up to a leaf budget. The enumeration is organized by exact leaf
//! count and collapsed to one Pareto entry per (truth table, NOT count):
//! swapping a subtree for a cheaper one computing the same table never hurts,
//! because NOT counts add up over subtrees.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tt::TruthTable;

/// Minimum NOT count over all formulas for `tt` with at most `max_leaves`
/// leaves, or `None` when no formula fits the budget.
///
/// Limited to `arity <= 2` and `max_leaves <= 8`.
pub fn min_not_exhaustive(tt: &TruthTable, max_leaves: usize) -> Result<Option<u32>> {
    let n = tt.arity();
    if n > 2 {
        return Err(Error::OracleLimit(format!(
            "formula enumeration handles at most 2 variables, got {n}"
        )));
    }
    if max_leaves == 0 || max_leaves > 8 {
        return Err(Error::OracleLimit(format!(
            "leaf budget must be between 1 and 8, got {max_leaves}"
        )));
    }
    let size = tt.size();
    let mask: u64 = (1u64 << size) - 1;
    let target = tt.words()[0] & mask;

    // by_leaves[k]: minimal NOT count per reachable table using exactly k leaves.
    let mut by_leaves: Vec<HashMap<u64, u32>> = vec![HashMap::new()];
    for k in 1..=max_leaves {
        let mut level: HashMap<u64, u32> = HashMap::new();
        if k == 1 {
            relax(&mut level, 0, 0);
            relax(&mut level, mask, 0);
            for var in 1..=n {
                relax(&mut level, projection(var, size), 0);
            }
        } else {
            for left_leaves in 1..k {
                let right_leaves = k - left_leaves;
                for (&ta, &ca) in &by_leaves[left_leaves] {
                    for (&tb, &cb) in &by_leaves[right_leaves] {
                        relax(&mut level, ta & tb, ca + cb);
                        relax(&mut level, ta | tb, ca + cb);
                    }
                }
            }
        }
        close_under_not(&mut level, mask);
        by_leaves.push(level);
    }

    Ok(by_leaves
        .iter()
        .filter_map(|level| level.get(&target).copied())
        .min())
}

fn relax(level: &mut HashMap<u64, u32>, table: u64, nots: u32) {
    level
        .entry(table)
        .and_modify(|best| *best = (*best).min(nots))
        .or_insert(nots);
}

/// Saturates a level with negations: a NOT adds no leaves, so stacks of them
/// stay within the same leaf count. Converges because costs only shrink.
fn close_under_not(level: &mut HashMap<u64, u32>, mask: u64) {
    loop {
        let mut updates = Vec::new();
        for (&table, &nots) in level.iter() {
            let negated = !table & mask;
            if level.get(&negated).is_none_or(|&best| best > nots + 1) {
                updates.push((negated, nots + 1));
            }
        }
        if updates.is_empty() {
            return;
        }
        for (table, nots) in updates {
            relax(level, table, nots);
        }
    }
}

/// Table bits of the bare variable `x<var>` on `size` inputs.
fn projection(var: usize, size: usize) -> u64 {
    (0..size)
        .filter(|i| i >> (var - 1) & 1 == 1)
        .fold(0, |acc, i| acc | 1 << i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::decrease;

    #[test]
    fn finds_minimum_not_counts() {
        let xor2 = TruthTable::from_hex(2, "6").unwrap();
        let and2 = TruthTable::from_hex(2, "8").unwrap();
        let not_x1 = TruthTable::from_hex(1, "1").unwrap();
        assert_eq!(min_not_exhaustive(&xor2, 6), Ok(Some(1)));
        assert_eq!(min_not_exhaustive(&and2, 2), Ok(Some(0)));
        assert_eq!(min_not_exhaustive(&not_x1, 1), Ok(Some(1)));
    }

    #[test]
    fn reports_budgets_that_are_too_small() {
        // No and/or/not formula with under 4 leaves computes XOR.
        let xor2 = TruthTable::from_hex(2, "6").unwrap();
        assert_eq!(min_not_exhaustive(&xor2, 3), Ok(None));
        assert_eq!(min_not_exhaustive(&xor2, 4), Ok(Some(1)));
    }

    #[test]
    fn rejects_oversized_requests() {
        let tt = TruthTable::constant(3, false);
        assert!(matches!(
            min_not_exhaustive(&tt, 6),
            Err(Error::OracleLimit(_))
        ));
        let xor2 = TruthTable::from_hex(2, "6").unwrap();
        assert!(matches!(
            min_not_exhaustive(&xor2, 9),
            Err(Error::OracleLimit(_))
        ));
        assert!(matches!(
            min_not_exhaustive(&xor2, 0),
            Err(Error::OracleLimit(_))
        ));
    }

    #[test]
    fn matches_the_decrease_on_every_two_variable_function() {
        for idx in 0u64..16 {
            let tt = TruthTable::from_fn(2, |i| idx >> i & 1 == 1);
            assert_eq!(
                min_not_exhaustive(&tt, 6).unwrap(),
                Some(decrease(&tt).d()),
                "function {idx}"
            );
        }
    }
}
