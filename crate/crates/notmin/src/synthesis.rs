//! Formula construction with the minimum number of NOT operators.
//!
//! Monotone functions get NOT-free formulas straight from their minimal true
//! points. Everything else recurses through [`separate`]: the split peels one
//! unit of decrease off into the residual and pays for it with the single NOT
//! in `stable_part OR (residual AND NOT indicator)`, so the finished formula
//! for `f` carries exactly `d(f)` NOT operators. The matching lower bound is
//! checked independently by [`crate::audit`].

use crate::chains::decrease;
use crate::error::Result;
use crate::formula::Formula;
use crate::separation::separate;
use crate::tt::{InputVector, TruthTable};

/// NOT-free formula for a monotone function: a balanced OR over its minimal
/// true points, each point a balanced AND of its set variables. Constants come
/// out as bare constant leaves.
///
/// Fails with [`crate::Error::NotMonotone`] on non-monotone input.
pub fn synth_monotone(tt: &TruthTable) -> Result<Formula> {
    let points = tt.minimal_true_points()?;
    if points.is_empty() {
        return Ok(Formula::Const(false));
    }
    if points[0].index() == 0 {
        // The all-zeros point dominates every input, so f is constant 1.
        return Ok(Formula::Const(true));
    }
    let terms: Vec<Formula> = points
        .iter()
        .map(|point| {
            let vars: Vec<Formula> = (1..=tt.arity())
                .filter(|&i| point.component(i))
                .map(Formula::Var)
                .collect();
            balanced(vars, Formula::and)
        })
        .collect();
    Ok(balanced(terms, Formula::or))
}

/// Builds a formula computing `tt` with the minimum possible number of NOT
/// operators, namely the decrease of the function.
///
/// Monotone functions take the NOT-free base case. Otherwise the function is
/// split around its stable set and only the residual recurses; its decrease is
/// strictly smaller, which both bounds the NOT count and guarantees
/// termination after exactly `d(f)` rounds.
pub fn synthesize(tt: &TruthTable) -> Formula {
    let profile = decrease(tt);
    if profile.d() == 0 {
        return synth_monotone(tt).expect("a function with decrease zero is monotone");
    }
    let sep = separate(tt);
    let residual_d = decrease(&sep.residual).d();
    assert!(
        residual_d < profile.d(),
        "separation must strictly reduce the decrease"
    );
    let stable_part =
        synth_monotone(&sep.stable_part).expect("the stable part is monotone by construction");
    let indicator = synth_monotone(&sep.indicator)
        .expect("the stable-set indicator is monotone by construction");
    let residual = synthesize(&sep.residual);
    simplify(Formula::or(
        stable_part,
        Formula::and(residual, Formula::not(indicator)),
    ))
}

/// Applies constant identity and absorption laws bottom-up: `0|y -> y`,
/// `1|y -> 1`, `1&y -> y`, `0&y -> 0`, `~0 -> 1`, `~1 -> 0` (and mirrored).
/// Preserves the truth table and never increases the NOT count. No other
/// rewriting happens, so the emitted structure stays readable.
pub fn simplify(f: Formula) -> Formula {
    match f {
        Formula::Const(_) | Formula::Var(_) => f,
        Formula::Not(c) => match simplify(*c) {
            Formula::Const(b) => Formula::Const(!b),
            c => Formula::not(c),
        },
        Formula::And(l, r) => match (simplify(*l), simplify(*r)) {
            (Formula::Const(false), _) | (_, Formula::Const(false)) => Formula::Const(false),
            (Formula::Const(true), y) | (y, Formula::Const(true)) => y,
            (l, r) => Formula::and(l, r),
        },
        Formula::Or(l, r) => match (simplify(*l), simplify(*r)) {
            (Formula::Const(true), _) | (_, Formula::Const(true)) => Formula::Const(true),
            (Formula::Const(false), y) | (y, Formula::Const(false)) => y,
            (l, r) => Formula::or(l, r),
        },
    }
}

/// True when the formula computes exactly this table.
pub fn verify(formula: &Formula, tt: &TruthTable) -> Result<bool> {
    Ok(formula.truth_table(tt.arity())? == *tt)
}

/// First input (in index order) where the formula disagrees with the table,
/// or `None` when it verifies.
pub fn first_counterexample(formula: &Formula, tt: &TruthTable) -> Result<Option<InputVector>> {
    let derived = formula.truth_table(tt.arity())?;
    for i in 0..tt.size() {
        if derived.bit(i) != tt.bit(i) {
            return Ok(Some(InputVector::new(tt.arity(), i)));
        }
    }
    Ok(None)
}

fn balanced(mut items: Vec<Formula>, join: fn(Formula, Formula) -> Formula) -> Formula {
    debug_assert!(!items.is_empty(), "balanced joins need at least one item");
    if items.len() == 1 {
        return items.pop().expect("just checked nonempty");
    }
    let right = items.split_off(items.len() / 2);
    join(balanced(items, join), balanced(right, join))
}
