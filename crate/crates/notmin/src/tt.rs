//! Truth tables and input vectors for Boolean functions of `n >= 1` variables.
//!
//! A function is stored as its full table of `2^n` output bits. Output bit `i`
//! is the value on the input whose component `x_j` equals bit `j-1` of the
//! binary expansion of `i`, so `x1` is the least significant bit of the input
//! index. Hex and binary table strings are written as ordinary numbers, most
//! significant digit first, and input vectors print the same way: the
//! rightmost character is `x1`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported arity. Tables are dense, so `2^24` bits (2 MiB) is a
/// generous practical ceiling.
pub const MAX_ARITY: usize = 24;

const WORD_BITS: usize = 64;

/// One assignment to the variables `x1..xn`, identified by its index in the
/// truth table.
///
/// Vectors of equal arity are partially ordered componentwise: `x <= y` holds
/// when every component of `x` is at most the matching component of `y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct InputVector {
    arity: usize,
    index: usize,
}

impl InputVector {
    /// Builds the vector with the given table index.
    ///
    /// Panics if `arity` is 0 or `index` does not fit in `arity` bits.
    pub fn new(arity: usize, index: usize) -> Self {
        assert!(
            (1..=MAX_ARITY).contains(&arity),
            "input vectors need between 1 and {MAX_ARITY} variables, got {arity}"
        );
        assert!(
            index < 1usize << arity,
            "index {index} out of range for arity {arity}"
        );
        Self { arity, index }
    }

    /// Builds a vector from its components in order `x1, x2, ...`.
    pub fn from_bits(bits: &[bool]) -> Self {
        let index = bits
            .iter()
            .enumerate()
            .fold(0usize, |acc, (j, &b)| acc | (usize::from(b) << j));
        Self::new(bits.len(), index)
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Index of this assignment in a truth table.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Value of the component `x_i` (1-based).
    pub fn component(&self, i: usize) -> bool {
        assert!(
            (1..=self.arity).contains(&i),
            "component x{i} out of range for arity {}",
            self.arity
        );
        (self.index >> (i - 1)) & 1 == 1
    }

    /// Componentwise order: true when every component of `self` is at most
    /// the matching component of `other`.
    pub fn leq(&self, other: &InputVector) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.index & other.index == self.index)
    }

    /// Strict componentwise order: [`leq`](Self::leq) plus a strict increase
    /// in some component.
    pub fn lt(&self, other: &InputVector) -> Result<bool> {
        Ok(self.leq(other)? && self.index != other.index)
    }

    fn check_arity(&self, other: &InputVector) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            })
        }
    }
}

impl fmt::Display for InputVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.index, width = self.arity)
    }
}

impl fmt::Debug for InputVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InputVector({self})")
    }
}

impl Serialize for InputVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A Boolean function of `n >= 1` variables, stored as its full table of
/// `2^n` output bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    words: Vec<u64>,
}

impl TruthTable {
    /// Builds a table from its output bits, `outputs[i]` being the value on
    /// the input with index `i`.
    pub fn new(arity: usize, outputs: &[bool]) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::UnsupportedArity(arity));
        }
        let size = 1usize << arity;
        if outputs.len() != size {
            return Err(Error::MalformedTable {
                arity,
                expected: size,
                got: outputs.len(),
            });
        }
        let mut words = vec![0u64; size.div_ceil(WORD_BITS)];
        for (i, &bit) in outputs.iter().enumerate() {
            if bit {
                words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
            }
        }
        Ok(Self { arity, words })
    }

    /// Builds a table by evaluating `f` on every input index.
    ///
    /// Panics if `arity` is 0 or larger than [`MAX_ARITY`].
    pub fn from_fn(arity: usize, f: impl Fn(usize) -> bool) -> Self {
        assert!(
            (1..=MAX_ARITY).contains(&arity),
            "truth tables need between 1 and {MAX_ARITY} variables, got {arity}"
        );
        let size = 1usize << arity;
        let mut words = vec![0u64; size.div_ceil(WORD_BITS)];
        for i in 0..size {
            if f(i) {
                words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
            }
        }
        Self { arity, words }
    }

    /// The constant function with the given value.
    pub fn constant(arity: usize, value: bool) -> Self {
        Self::from_fn(arity, |_| value)
    }

    /// Parses a table from a hex string of `2^arity` bits, most significant
    /// digit first. The string must have exactly `max(1, 2^arity / 4)` digits.
    pub fn from_hex(arity: usize, hex: &str) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::UnsupportedArity(arity));
        }
        let size = 1usize << arity;
        let digits = hex_digits(arity);
        let chars: Vec<char> = hex.chars().collect();
        if chars.len() != digits {
            return Err(Error::InvalidHex(format!(
                "expected {digits} hex digit(s) for {size} bits, got {}",
                chars.len()
            )));
        }
        let mut words = vec![0u64; size.div_ceil(WORD_BITS)];
        for (pos, &ch) in chars.iter().enumerate() {
            let digit = ch
                .to_digit(16)
                .ok_or_else(|| Error::InvalidHex(format!("invalid hex digit {ch:?}")))?
                as u64;
            let base = 4 * (digits - 1 - pos);
            words[base / WORD_BITS] |= digit << (base % WORD_BITS);
        }
        // Only arity 1 leaves headroom inside a digit.
        if size < 4 && words[0] >> size != 0 {
            return Err(Error::InvalidHex(format!(
                "value does not fit in {size} bits"
            )));
        }
        Ok(Self { arity, words })
    }

    /// Renders the table as a hex string, most significant digit first.
    pub fn to_hex(&self) -> String {
        let digits = hex_digits(self.arity);
        let mut out = String::with_capacity(digits);
        for pos in 0..digits {
            let base = 4 * (digits - 1 - pos);
            let nibble = (self.words[base / WORD_BITS] >> (base % WORD_BITS)) & 0xF;
            out.push(char::from_digit(nibble as u32, 16).expect("nibble is below 16"));
        }
        out
    }

    /// Parses the two-line table format: a `vars=<n>` header followed by the
    /// output bits, either as hex or as a raw binary string of length `2^n`
    /// with bit 0 rightmost. Blank lines are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTableText("missing `vars=<n>` header".into()))?;
        let arity: usize = header
            .strip_prefix("vars=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| {
                Error::InvalidTableText(format!("expected `vars=<n>`, got {header:?}"))
            })?;
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::UnsupportedArity(arity));
        }
        let bits = lines
            .next()
            .ok_or_else(|| Error::InvalidTableText("missing table bits after the header".into()))?;
        if let Some(extra) = lines.next() {
            return Err(Error::InvalidTableText(format!(
                "unexpected trailing line {extra:?}"
            )));
        }
        let size = 1usize << arity;
        if bits.len() == size && bits.chars().all(|c| c == '0' || c == '1') {
            let outputs: Vec<bool> = bits.chars().rev().map(|c| c == '1').collect();
            Self::new(arity, &outputs)
        } else {
            Self::from_hex(arity, bits)
        }
    }

    /// Renders the table in the two-line text format with hex bits.
    pub fn to_text(&self) -> String {
        format!("vars={}\n{}\n", self.arity, self.to_hex())
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of table entries, `2^arity`.
    pub fn size(&self) -> usize {
        1usize << self.arity
    }

    /// Output bit at the given input index.
    ///
    /// Panics if `index` is out of range.
    pub fn bit(&self, index: usize) -> bool {
        assert!(index < self.size(), "input index {index} out of range");
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    /// Function value on an input vector.
    pub fn eval(&self, x: InputVector) -> Result<bool> {
        if x.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: x.arity(),
            });
        }
        Ok(self.bit(x.index()))
    }

    /// True when the function never falls from 1 to 0 along the componentwise
    /// order. Checking the `n * 2^(n-1)` single-bit cover edges suffices, as
    /// the order is generated by them.
    pub fn is_monotone(&self) -> bool {
        let n = self.arity;
        for x in 0..self.size() {
            if self.bit(x) {
                continue;
            }
            for b in 0..n {
                if x & (1 << b) != 0 && self.bit(x ^ (1 << b)) {
                    return false;
                }
            }
        }
        true
    }

    /// True when every output equals `value`.
    pub fn is_constant(&self, value: bool) -> bool {
        *self == Self::constant(self.arity, value)
    }

    /// The minimal true points of a monotone function: inputs mapped to 1
    /// none of whose strictly smaller inputs is mapped to 1. A monotone
    /// function is the disjunction over these points of the conjunction of
    /// their set variables.
    pub fn minimal_true_points(&self) -> Result<Vec<InputVector>> {
        if !self.is_monotone() {
            return Err(Error::NotMonotone);
        }
        let n = self.arity;
        let mut points = Vec::new();
        'outer: for x in 0..self.size() {
            if !self.bit(x) {
                continue;
            }
            // Monotone, so it is enough to look one cover step down.
            for b in 0..n {
                if x & (1 << b) != 0 && self.bit(x ^ (1 << b)) {
                    continue 'outer;
                }
            }
            points.push(InputVector::new(n, x));
        }
        Ok(points)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(vars={}, {})", self.arity, self.to_hex())
    }
}

fn hex_digits(arity: usize) -> usize {
    (1usize << arity).div_ceil(4)
}
