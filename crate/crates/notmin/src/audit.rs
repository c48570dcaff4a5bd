//! NOT-count lower bounds for arbitrary formulas, made inspectable.
//!
//! Under a fixed input, call a NOT node *down* when its child evaluates to 1
//! (so the gate outputs 0) and *up* otherwise. Walking any increasing sequence
//! of inputs, the number of down gates never decreases, and it must rise by at
//! least one across every step where the formula's output falls from 1 to 0.
//! Summing along a chain that attains the decrease `d` of the computed
//! function forces at least `d` NOT nodes into the formula.
//!
//! The two monotonicity facts are theorems about any well-formed formula; the
//! checks here exist so that hand-written formulas can be audited and the
//! counting argument watched step by step.

use serde::Serialize;

use crate::chains::{decrease, witness_chain, Chain};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::tt::{InputVector, MAX_ARITY};

/// State of one NOT node under a fixed input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GateState {
    /// Child evaluates to 0; the gate outputs 1.
    Up,
    /// Child evaluates to 1; the gate outputs 0.
    Down,
}

/// Per-NOT-node states for one input, nodes listed in depth-first preorder
/// (a node before its children, left child before right).
#[derive(Debug, Clone)]
pub struct GateStateTrace {
    input: InputVector,
    states: Vec<GateState>,
    down_count: u32,
}

impl GateStateTrace {
    /// The input the formula was evaluated on.
    pub fn input(&self) -> InputVector {
        self.input
    }

    /// States of the NOT nodes in preorder.
    pub fn states(&self) -> &[GateState] {
        &self.states
    }

    /// Number of NOT nodes in the down state.
    pub fn down_count(&self) -> u32 {
        self.down_count
    }
}

/// Evaluates the formula once and records the state of every NOT node.
pub fn gate_states(formula: &Formula, x: InputVector) -> Result<GateStateTrace> {
    fn walk(f: &Formula, x: InputVector, states: &mut Vec<GateState>) -> Result<bool> {
        match f {
            Formula::Const(b) => Ok(*b),
            Formula::Var(i) => {
                if *i == 0 || *i > x.arity() {
                    Err(Error::VariableOutOfRange {
                        index: *i,
                        arity: x.arity(),
                    })
                } else {
                    Ok(x.component(*i))
                }
            }
            Formula::Not(c) => {
                // Reserve the slot before descending to keep preorder.
                let slot = states.len();
                states.push(GateState::Up);
                let child = walk(c, x, states)?;
                states[slot] = if child {
                    GateState::Down
                } else {
                    GateState::Up
                };
                Ok(!child)
            }
            Formula::And(l, r) => {
                let a = walk(l, x, states)?;
                let b = walk(r, x, states)?;
                Ok(a && b)
            }
            Formula::Or(l, r) => {
                let a = walk(l, x, states)?;
                let b = walk(r, x, states)?;
                Ok(a || b)
            }
        }
    }
    let mut states = Vec::new();
    walk(formula, x, &mut states)?;
    let down_count = states.iter().filter(|s| **s == GateState::Down).count() as u32;
    Ok(GateStateTrace {
        input: x,
        states,
        down_count,
    })
}

/// One ordered input pair where a monotonicity check failed.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaViolation {
    /// The smaller input.
    pub lower: InputVector,
    /// The larger input.
    pub upper: InputVector,
    /// Down count at the smaller input.
    pub lower_count: u32,
    /// Down count at the larger input.
    pub upper_count: u32,
}

/// Outcome of scanning the input pairs relevant to one check.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    /// Number of ordered pairs the check applied to.
    pub pairs_checked: u64,
    /// Pairs where the claimed inequality failed. Empty for any formula
    /// evaluated by a correct engine; populated entries point at evaluator
    /// bugs, not at properties of the formula.
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    /// True when no violations were recorded.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the down count rises by at least one across every comparable
/// input pair where the formula's output falls from 1 to 0.
pub fn check_drop_lemma(formula: &Formula, arity: usize) -> Result<LemmaReport> {
    let tt = formula.truth_table(arity)?;
    let counts = all_down_counts(formula, arity)?;
    let mut report = LemmaReport {
        pairs_checked: 0,
        violations: Vec::new(),
    };
    for upper in 0..tt.size() {
        if upper == 0 || tt.bit(upper) {
            continue;
        }
        // Proper subsets of `upper`, i.e. all strictly smaller inputs.
        let mut lower = (upper - 1) & upper;
        loop {
            if tt.bit(lower) {
                report.pairs_checked += 1;
                if counts[upper] <= counts[lower] {
                    report.violations.push(LemmaViolation {
                        lower: InputVector::new(arity, lower),
                        upper: InputVector::new(arity, upper),
                        lower_count: counts[lower],
                        upper_count: counts[upper],
                    });
                }
            }
            if lower == 0 {
                break;
            }
            lower = (lower - 1) & upper;
        }
    }
    Ok(report)
}

/// Checks that the down count never decreases along single-bit cover edges;
/// monotonicity along arbitrary comparable pairs follows by composition.
pub fn check_monotone_lemma(formula: &Formula, arity: usize) -> Result<LemmaReport> {
    if arity == 0 || arity > MAX_ARITY {
        return Err(Error::UnsupportedArity(arity));
    }
    let counts = all_down_counts(formula, arity)?;
    let mut report = LemmaReport {
        pairs_checked: 0,
        violations: Vec::new(),
    };
    for upper in 0..1usize << arity {
        for b in 0..arity {
            if upper & (1 << b) == 0 {
                continue;
            }
            let lower = upper ^ (1 << b);
            report.pairs_checked += 1;
            if counts[lower] > counts[upper] {
                report.violations.push(LemmaViolation {
                    lower: InputVector::new(arity, lower),
                    upper: InputVector::new(arity, upper),
                    lower_count: counts[lower],
                    upper_count: counts[upper],
                });
            }
        }
    }
    Ok(report)
}

/// A lower-bound certificate for the NOT count of a formula: the witness
/// chain of the computed function, the down counts along it, and the chained
/// inequality `not_count >= down(last) - down(first) >= d`.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    /// Chain attaining the decrease of the computed function.
    pub chain: Chain,
    /// Down count at each chain vertex, in order.
    pub down_counts: Vec<u32>,
    /// Decrease of the computed function; no formula for it can use fewer
    /// NOT operators.
    pub d: u32,
    /// NOT operators actually present in the audited formula.
    pub not_count: u32,
    /// Whether the formula meets the lower bound exactly.
    pub tight: bool,
}

impl Certificate {
    /// NOT operators beyond the minimum.
    pub fn slack(&self) -> u32 {
        self.not_count - self.d
    }

    /// The certificate as a single JSON document.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }
}

/// Audits a formula against the NOT-count lower bound of the function it
/// computes.
pub fn lower_bound_certificate(formula: &Formula, arity: usize) -> Result<Certificate> {
    let tt = formula.truth_table(arity)?;
    let chain = witness_chain(&tt);
    let down_counts: Vec<u32> = chain
        .vectors()
        .iter()
        .map(|&v| Ok(gate_states(formula, v)?.down_count()))
        .collect::<Result<_>>()?;
    let d = decrease(&tt).d();
    let not_count = formula.not_count();
    debug_assert!(
        down_counts.last() >= down_counts.first(),
        "down counts cannot fall along a chain"
    );
    debug_assert!(not_count >= d, "no formula beats the decrease lower bound");
    Ok(Certificate {
        chain,
        down_counts,
        d,
        not_count,
        tight: not_count == d,
    })
}

fn all_down_counts(formula: &Formula, arity: usize) -> Result<Vec<u32>> {
    (0..1usize << arity)
        .map(|i| Ok(gate_states(formula, InputVector::new(arity, i))?.down_count()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nand() -> Formula {
        Formula::not(Formula::and(Formula::Var(1), Formula::Var(2)))
    }

    fn xor_formula() -> Formula {
        Formula::parse("(x1 | x2) & ~(x1 & x2)").unwrap()
    }

    #[test]
    fn gate_states_follow_the_child_value() {
        let t = gate_states(&nand(), InputVector::new(2, 0b11)).unwrap();
        assert_eq!(t.states(), [GateState::Down]);
        assert_eq!(t.down_count(), 1);
        let t = gate_states(&nand(), InputVector::new(2, 0b00)).unwrap();
        assert_eq!(t.states(), [GateState::Up]);
        assert_eq!(t.down_count(), 0);
        let no_gates = Formula::and(Formula::Var(1), Formula::Var(2));
        let t = gate_states(&no_gates, InputVector::new(2, 0b01)).unwrap();
        assert!(t.states().is_empty());
        assert_eq!(t.down_count(), 0);
    }

    #[test]
    fn double_negation_keeps_one_gate_down() {
        let f = Formula::parse("~~x1").unwrap();
        // Preorder lists the outer gate first.
        let at0 = gate_states(&f, InputVector::new(1, 0)).unwrap();
        assert_eq!(at0.states(), [GateState::Down, GateState::Up]);
        let at1 = gate_states(&f, InputVector::new(1, 1)).unwrap();
        assert_eq!(at1.states(), [GateState::Up, GateState::Down]);
        assert_eq!(at0.down_count(), 1);
        assert_eq!(at1.down_count(), 1);
    }

    #[test]
    fn drop_lemma_on_small_formulas() {
        let report = check_drop_lemma(&xor_formula(), 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 2);
        let report = check_drop_lemma(&Formula::parse("~x1").unwrap(), 1).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 1);
        // No 1 -> 0 falls at all: vacuously fine.
        let report = check_drop_lemma(&Formula::parse("x1 & x2").unwrap(), 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 0);
    }

    #[test]
    fn monotone_lemma_on_small_formulas() {
        let report = check_monotone_lemma(&nand(), 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 4);
        let report = check_monotone_lemma(&Formula::parse("x1 | x2").unwrap(), 2).unwrap();
        assert!(report.passed());
        let report = check_monotone_lemma(&Formula::parse("~~x1").unwrap(), 1).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn certificates_of_known_formulas() {
        let cert = lower_bound_certificate(&xor_formula(), 2).unwrap();
        assert_eq!(cert.chain.to_string(), "00,01,11");
        assert_eq!(cert.down_counts, vec![0, 0, 1]);
        assert_eq!(cert.d, 1);
        assert_eq!(cert.not_count, 1);
        assert!(cert.tight);

        let padded_and = Formula::parse("~~(x1 & x2)").unwrap();
        let cert = lower_bound_certificate(&padded_and, 2).unwrap();
        assert_eq!(cert.d, 0);
        assert_eq!(cert.not_count, 2);
        assert_eq!(cert.slack(), 2);
        assert!(!cert.tight);

        let cert = lower_bound_certificate(&Formula::parse("x1").unwrap(), 1).unwrap();
        assert_eq!((cert.d, cert.not_count), (0, 0));
        assert!(cert.tight);
    }

    #[test]
    fn certificate_json_schema_is_stable() {
        let cert = lower_bound_certificate(&xor_formula(), 2).unwrap();
        assert_eq!(
            cert.to_json(),
            "{\"chain\":[\"00\",\"01\",\"11\"],\"down_counts\":[0,0,1],\"d\":1,\"not_count\":1,\"tight\":true}"
        );
    }

    fn formula_strategy(arity: usize) -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            (1..=arity).prop_map(Formula::Var),
            any::<bool>().prop_map(Formula::Const),
        ];
        leaf.prop_recursive(5, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::or(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn lemmas_hold_for_arbitrary_formulas(f in formula_strategy(3)) {
            prop_assert!(check_drop_lemma(&f, 3).unwrap().passed());
            prop_assert!(check_monotone_lemma(&f, 3).unwrap().passed());
            let cert = lower_bound_certificate(&f, 3).unwrap();
            prop_assert!(cert.not_count >= cert.d);
            let total = f.not_count();
            for i in 0..8usize {
                let trace = gate_states(&f, InputVector::new(3, i)).unwrap();
                prop_assert!(trace.down_count() <= total);
            }
        }
    }
}
