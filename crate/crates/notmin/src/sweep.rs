//! Exhaustive validation over every function of a small arity.
//!
//! For each of the `2^(2^n)` functions the sweep recomputes the decrease,
//! cross-checks it against brute-force chain enumeration, splits the function
//! around its stable set, recombines, synthesizes, and verifies that the
//! synthesized formula computes the function with exactly `d` NOT operators.
//! One failing function fails the sweep; the summary keeps a histogram of the
//! observed `d` values.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::chains::{chain_decrease, decrease, decrease_bruteforce, witness_chain};
use crate::error::{Error, Result};
use crate::separation::{recombine, separate};
use crate::synthesis::{synthesize, verify};
use crate::tt::TruthTable;

/// One function that failed a sweep check.
#[derive(Debug, Clone, Serialize)]
pub struct SweepFailure {
    /// Function index: bit `i` of the index is the output on input `i`.
    pub index: u64,
    /// First check that failed for this function.
    pub reason: String,
}

/// Aggregated outcome of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    /// Number of variables swept.
    pub arity: usize,
    /// Number of functions enumerated, `2^(2^arity)`.
    pub total: u64,
    /// Functions that passed every check.
    pub passed: u64,
    /// How many functions have each decrease value.
    pub d_histogram: BTreeMap<u32, u64>,
    /// Failing functions in ascending index order.
    pub failures: Vec<SweepFailure>,
}

impl SweepSummary {
    /// True when every function passed.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweeps every function on `arity` variables, `1 <= arity <= 4`.
///
/// The 65536 functions of arity 4 are checked in parallel; aggregation is
/// order-independent, so the summary is deterministic either way. Brute-force
/// chain enumeration runs on every function up to arity 3 and on a fixed
/// sample (about 1 in 61) at arity 4.
pub fn run(arity: usize) -> Result<SweepSummary> {
    if arity == 0 || arity > 4 {
        return Err(Error::SweepArity(arity));
    }
    let total = 1u64 << (1usize << arity);
    let outcomes: Vec<(u32, Option<String>)> = if arity >= 4 {
        (0..total)
            .into_par_iter()
            .map(|idx| check_function(arity, idx))
            .collect()
    } else {
        (0..total).map(|idx| check_function(arity, idx)).collect()
    };

    let mut d_histogram = BTreeMap::new();
    let mut failures = Vec::new();
    for (idx, (d, failure)) in outcomes.into_iter().enumerate() {
        *d_histogram.entry(d).or_insert(0u64) += 1;
        if let Some(reason) = failure {
            failures.push(SweepFailure {
                index: idx as u64,
                reason,
            });
        }
    }
    Ok(SweepSummary {
        arity,
        total,
        passed: total - failures.len() as u64,
        d_histogram,
        failures,
    })
}

fn check_function(arity: usize, index: u64) -> (u32, Option<String>) {
    let tt = TruthTable::from_fn(arity, |i| index >> i & 1 == 1);
    let profile = decrease(&tt);
    (profile.d(), checks(arity, index, &tt).err())
}

fn checks(arity: usize, index: u64, tt: &TruthTable) -> std::result::Result<(), String> {
    let profile = decrease(tt);
    let d = profile.d();
    let size = tt.size();

    if !profile.is_stable(size - 1) {
        return Err("all-ones vector missing from the stable set".into());
    }
    for x in 0..size {
        if !profile.is_stable(x) {
            continue;
        }
        for b in 0..arity {
            if x & (1 << b) == 0 && !profile.is_stable(x | (1 << b)) {
                return Err(format!("stable set is not an up-set at vertex {x}"));
            }
        }
    }
    if d as usize > arity.div_ceil(2) {
        return Err(format!("decrease {d} exceeds ceil(n/2)"));
    }

    if arity <= 3 || (arity == 4 && index.is_multiple_of(61)) {
        let oracle = decrease_bruteforce(tt).map_err(|e| e.to_string())?;
        if oracle != d {
            return Err(format!("dp decrease {d} != brute force {oracle}"));
        }
    }
    let witness = witness_chain(tt);
    if chain_decrease(tt, &witness).map_err(|e| e.to_string())? != d {
        return Err("witness chain does not attain the decrease".into());
    }

    let sep = separate(tt);
    if decrease(&sep.stable_part).d() != 0 {
        return Err("stable part is not monotone".into());
    }
    if decrease(&sep.indicator).d() != 0 {
        return Err("stable-set indicator is not monotone".into());
    }
    if d >= 1 && decrease(&sep.residual).d() != d - 1 {
        return Err(format!(
            "residual decrease {} != d - 1 = {}",
            decrease(&sep.residual).d(),
            d - 1
        ));
    }
    if recombine(&sep).map_err(|e| e.to_string())? != *tt {
        return Err("recombination does not restore the function".into());
    }

    let formula = synthesize(tt);
    if !verify(&formula, tt).map_err(|e| e.to_string())? {
        return Err("synthesized formula does not compute the function".into());
    }
    if formula.not_count() != d {
        return Err(format!(
            "synthesized NOT count {} != decrease {d}",
            formula.not_count()
        ));
    }
    Ok(())
}
