//! Chains over the Boolean hypercube and the decrease of a function.
//!
//! A chain is a strictly increasing sequence of input vectors. The decrease of
//! a function `f` on a chain counts the steps where `f` falls from 1 to 0; the
//! decrease `d(f)` of the function is the maximum over all chains. `d(f)` is
//! zero exactly for monotone functions, and it is the quantity the rest of the
//! crate revolves around: it equals the minimum number of NOT operators in any
//! formula computing `f`.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::tt::{InputVector, TruthTable};

/// A strictly increasing sequence of at least one input vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    vectors: Vec<InputVector>,
}

impl Chain {
    /// Validates and wraps a sequence of vectors.
    ///
    /// Fails with [`Error::InvalidChain`] when the sequence is empty, mixes
    /// arities, or is not strictly increasing.
    pub fn new(vectors: Vec<InputVector>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidChain { step: 0 });
        }
        for i in 1..vectors.len() {
            if !vectors[i - 1].lt(&vectors[i])? {
                return Err(Error::InvalidChain { step: i });
            }
        }
        Ok(Self { vectors })
    }

    /// Builds a chain from table indices, all of the given arity.
    pub fn from_indices(arity: usize, indices: &[usize]) -> Result<Self> {
        Self::new(
            indices
                .iter()
                .map(|&i| InputVector::new(arity, i))
                .collect(),
        )
    }

    /// The vectors of the chain, in increasing order.
    pub fn vectors(&self) -> &[InputVector] {
        &self.vectors
    }

    /// Arity shared by all vectors of the chain.
    pub fn arity(&self) -> usize {
        self.vectors[0].arity()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vectors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.vectors.len()))?;
        for v in &self.vectors {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// Per-vertex extremes of the decrease, the overall decrease `d`, and the
/// stable set.
///
/// `down[x]` is the largest decrease over chains ending at `x`, `up[x]` the
/// largest over chains starting at `x`; both peak at `d`. A vertex is stable
/// when `up[x] = 0`, i.e. no chain starting there ever sees the function fall.
#[derive(Debug, Clone)]
pub struct DecreaseProfile {
    arity: usize,
    down: Vec<u32>,
    up: Vec<u32>,
    d: u32,
    stable: Vec<bool>,
}

impl DecreaseProfile {
    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The decrease of the function: the maximum number of 1 to 0 falls along
    /// any chain.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Largest decrease over chains ending at the given vertex.
    pub fn down(&self, index: usize) -> u32 {
        self.down[index]
    }

    /// Largest decrease over chains starting at the given vertex.
    pub fn up(&self, index: usize) -> u32 {
        self.up[index]
    }

    /// Whether the vertex belongs to the stable set.
    pub fn is_stable(&self, index: usize) -> bool {
        self.stable[index]
    }

    /// Stable-set membership for every vertex, indexed like the table.
    pub fn stable_mask(&self) -> &[bool] {
        &self.stable
    }

    /// The stable set as vectors in ascending index order.
    pub fn stable_vectors(&self) -> Vec<InputVector> {
        self.stable
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| InputVector::new(self.arity, i))
            .collect()
    }
}

/// Number of steps of the chain where the function falls from 1 to 0.
pub fn chain_decrease(tt: &TruthTable, chain: &Chain) -> Result<u32> {
    if chain.arity() != tt.arity() {
        return Err(Error::ArityMismatch {
            expected: tt.arity(),
            got: chain.arity(),
        });
    }
    Ok(chain
        .vectors()
        .windows(2)
        .filter(|w| tt.bit(w[0].index()) && !tt.bit(w[1].index()))
        .count() as u32)
}

/// Computes the full decrease profile of a function by dynamic programming
/// over the hypercube.
///
/// The recurrences only walk single-bit cover edges, which is `O(n * 2^n)`
/// instead of a sum over all comparable pairs. This loses nothing: splitting
/// a long step `x < x'` at any intermediate vertex keeps at least the same
/// number of falls, so some all-cover-steps chain attains the maximum.
pub fn decrease(tt: &TruthTable) -> DecreaseProfile {
    let n = tt.arity();
    let size = tt.size();
    let mut down = vec![0u32; size];
    for x in 1..size {
        let fx = tt.bit(x);
        let mut best = 0;
        for b in 0..n {
            if x & (1 << b) != 0 {
                let y = x ^ (1 << b);
                let step = u32::from(tt.bit(y) && !fx);
                best = best.max(down[y] + step);
            }
        }
        down[x] = best;
    }
    let mut up = vec![0u32; size];
    for x in (0..size - 1).rev() {
        let fx = tt.bit(x);
        let mut best = 0;
        for b in 0..n {
            if x & (1 << b) == 0 {
                let z = x | (1 << b);
                let step = u32::from(fx && !tt.bit(z));
                best = best.max(up[z] + step);
            }
        }
        up[x] = best;
    }
    let d = down.iter().copied().max().expect("tables are never empty");
    debug_assert_eq!(
        d,
        up.iter().copied().max().expect("tables are never empty"),
        "forward and backward maxima must agree"
    );
    let stable = up.iter().map(|&u| u == 0).collect();
    DecreaseProfile {
        arity: n,
        down,
        up,
        d,
        stable,
    }
}

/// Maximum of [`chain_decrease`] over all `n!` maximal chains of the
/// hypercube, enumerated outright. Independent of [`decrease`] and used to
/// cross-check it; limited to `arity <= 8` (8! = 40320 chains).
pub fn decrease_bruteforce(tt: &TruthTable) -> Result<u32> {
    let n = tt.arity();
    if n > 8 {
        return Err(Error::OracleLimit(format!(
            "chain enumeration handles at most 8 variables, got {n}"
        )));
    }
    fn walk(
        tt: &TruthTable,
        x: usize,
        drops: u32,
        bits: &mut Vec<usize>,
        depth: usize,
        best: &mut u32,
    ) {
        if depth == bits.len() {
            *best = (*best).max(drops);
            return;
        }
        for i in depth..bits.len() {
            bits.swap(depth, i);
            let y = x | (1 << bits[depth]);
            let step = u32::from(tt.bit(x) && !tt.bit(y));
            walk(tt, y, drops + step, bits, depth + 1, best);
            bits.swap(depth, i);
        }
    }
    let mut bits: Vec<usize> = (0..n).collect();
    let mut best = 0;
    walk(tt, 0, 0, &mut bits, 0, &mut best);
    Ok(best)
}

/// Mask of the stable set: the vertices from which every chain has decrease
/// zero. It is an up-set and always contains the all-ones vector.
pub fn stable_set(tt: &TruthTable) -> Vec<bool> {
    decrease(tt).stable_mask().to_vec()
}

/// A chain attaining the decrease of the function, chosen deterministically:
/// the walk starts at the smallest vertex whose `up` value equals `d` and at
/// every step moves to the smallest cover successor that keeps the remaining
/// `up` value on budget. The chain stops as soon as `up` hits zero, so for a
/// monotone function it is the single vertex `0..0`.
pub fn witness_chain(tt: &TruthTable) -> Chain {
    let profile = decrease(tt);
    let n = tt.arity();
    let start = (0..tt.size())
        .find(|&x| profile.up[x] == profile.d)
        .expect("some vertex attains the maximal decrease");
    let mut indices = vec![start];
    let mut cur = start;
    while profile.up[cur] > 0 {
        let mut next = None;
        for b in 0..n {
            if cur & (1 << b) == 0 {
                let z = cur | (1 << b);
                let step = u32::from(tt.bit(cur) && !tt.bit(z));
                if step + profile.up[z] == profile.up[cur] {
                    next = Some(z);
                    break;
                }
            }
        }
        cur = next.expect("the up recurrence always has a successor attaining its value");
        indices.push(cur);
    }
    Chain::from_indices(n, &indices).expect("the walk only moves to strictly larger vertices")
}
