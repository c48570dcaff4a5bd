//! Synthesis and analysis of Boolean formulas that use as few NOT operators
//! as possible.
//!
//! In a formula — an expression tree over binary AND, binary OR, and NOT —
//! inverters are the scarce resource: AND and OR alone can only produce
//! monotone functions. The pivotal quantity is the *decrease* `d(f)` of a
//! function, the largest number of 1-to-0 falls of `f` along any increasing
//! sequence of inputs. No formula for `f` can use fewer than `d(f)` NOT
//! operators, and [`synthesize`] always builds one with exactly that many.
//!
//! ```
//! use notmin::{decrease, synthesize, verify, TruthTable};
//!
//! let xor = TruthTable::from_hex(2, "6").unwrap();
//! let formula = synthesize(&xor);
//! assert_eq!(formula.to_string(), "(x1 | x2) & ~(x1 & x2)");
//! assert_eq!(formula.not_count(), 1);
//! assert_eq!(decrease(&xor).d(), 1);
//! assert!(verify(&formula, &xor).unwrap());
//! ```
//!
//! The crate is organized around that one equality:
//!
//! * [`tt`] — truth tables, input vectors, and the componentwise order;
//! * [`chains`] — the decrease, its per-vertex profile, the stable set, and
//!   witness chains;
//! * [`separation`] — the three-way split of a function around its stable set;
//! * [`formula`] — the expression tree, its text grammar, and DOT export;
//! * [`synthesis`] — NOT-free synthesis of monotone functions and the
//!   recursive construction for everything else;
//! * [`audit`] — NOT-count lower-bound certificates for arbitrary formulas;
//! * [`bounds`] — formula versus circuit inversion-complexity numbers;
//! * [`oracle`] — raw formula enumeration for tiny functions;
//! * [`sweep`] — exhaustive validation over every function of a small arity.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod audit;
pub mod bounds;
pub mod chains;
mod error;
pub mod formula;
pub mod oracle;
pub mod separation;
pub mod sweep;
pub mod synthesis;
pub mod tt;

pub use audit::{
    check_drop_lemma, check_monotone_lemma, gate_states, lower_bound_certificate, Certificate,
    GateState, GateStateTrace, LemmaReport, LemmaViolation,
};
pub use bounds::{
    circuit_inversion_complexity, formula_inversion_complexity, markov_variable_bound,
};
pub use chains::{
    chain_decrease, decrease, decrease_bruteforce, stable_set, witness_chain, Chain,
    DecreaseProfile,
};
pub use error::{Error, Result};
pub use formula::{Formula, Metrics};
pub use oracle::min_not_exhaustive;
pub use separation::{recombine, separate, Separation};
pub use synthesis::{first_counterexample, simplify, synth_monotone, synthesize, verify};
pub use tt::{InputVector, TruthTable, MAX_ARITY};
