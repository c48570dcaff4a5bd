//! Formula trees over binary AND, binary OR, NOT, variables, and constants.
//!
//! A formula is an expression tree: every operator feeds exactly one parent,
//! though a variable may label any number of leaves. NOT nodes are counted
//! syntactically and never cancelled, so `~~x1` has two of them; keeping the
//! count honest is what lets [`crate::audit`] study deliberately wasteful
//! formulas.
//!
//! # Text grammar
//!
//! ```text
//! or      := and ( '|' and )*          left-associative
//! and     := unary ( '&' unary )*      left-associative
//! unary   := '~' unary | primary
//! primary := '(' or ')' | '0' | '1' | 'x' digits    (variable index >= 1)
//! ```
//!
//! `~` binds tightest, then `&`, then `|`. Rendering parenthesizes every
//! binary subexpression, so a formula round-trips through its text form with
//! its tree shape intact.

use std::fmt;

use crate::error::{Error, Result};
use crate::tt::{InputVector, TruthTable, MAX_ARITY};

/// An expression tree over AND, OR, NOT, variables `x1..`, and constants.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Formula {
    /// Constant 0 or 1.
    Const(bool),
    /// Variable leaf, 1-based index.
    Var(usize),
    /// Negation.
    Not(Box<Formula>),
    /// Binary conjunction.
    And(Box<Formula>, Box<Formula>),
    /// Binary disjunction.
    Or(Box<Formula>, Box<Formula>),
}

/// Structural size measures of a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metrics {
    /// Number of leaves (variables and constants).
    pub leaves: u32,
    /// Longest root-to-leaf edge count; a bare leaf has depth 0.
    pub depth: u32,
    /// Number of NOT nodes.
    pub nots: u32,
}

impl Formula {
    /// Negation of `f`. An associated constructor like [`Formula::and`], not
    /// the `std::ops::Not` trait method.
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    /// Conjunction of `l` and `r`.
    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    /// Disjunction of `l` and `r`.
    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    /// Evaluates the formula on one input vector.
    pub fn eval(&self, x: InputVector) -> Result<bool> {
        match self {
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
            Formula::Not(c) => Ok(!c.eval(x)?),
            Formula::And(l, r) => {
                let a = l.eval(x)?;
                let b = r.eval(x)?;
                Ok(a && b)
            }
            Formula::Or(l, r) => {
                let a = l.eval(x)?;
                let b = r.eval(x)?;
                Ok(a || b)
            }
        }
    }

    /// Evaluates the formula on all `2^arity` inputs.
    pub fn truth_table(&self, arity: usize) -> Result<TruthTable> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::UnsupportedArity(arity));
        }
        self.check_vars(arity)?;
        Ok(TruthTable::from_fn(arity, |i| {
            self.eval(InputVector::new(arity, i))
                .expect("variable indices pre-checked against the arity")
        }))
    }

    fn check_vars(&self, arity: usize) -> Result<()> {
        match self {
            Formula::Const(_) => Ok(()),
            Formula::Var(i) => {
                if *i == 0 || *i > arity {
                    Err(Error::VariableOutOfRange { index: *i, arity })
                } else {
                    Ok(())
                }
            }
            Formula::Not(c) => c.check_vars(arity),
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.check_vars(arity)?;
                r.check_vars(arity)
            }
        }
    }

    /// Number of NOT nodes, counted syntactically.
    pub fn not_count(&self) -> u32 {
        match self {
            Formula::Const(_) | Formula::Var(_) => 0,
            Formula::Not(c) => 1 + c.not_count(),
            Formula::And(l, r) | Formula::Or(l, r) => l.not_count() + r.not_count(),
        }
    }

    /// Largest variable index referenced, 0 when there is none.
    pub fn max_var(&self) -> usize {
        match self {
            Formula::Const(_) => 0,
            Formula::Var(i) => *i,
            Formula::Not(c) => c.max_var(),
            Formula::And(l, r) | Formula::Or(l, r) => l.max_var().max(r.max_var()),
        }
    }

    /// Leaf, depth, and NOT counts.
    pub fn metrics(&self) -> Metrics {
        match self {
            Formula::Const(_) | Formula::Var(_) => Metrics {
                leaves: 1,
                depth: 0,
                nots: 0,
            },
            Formula::Not(c) => {
                let m = c.metrics();
                Metrics {
                    leaves: m.leaves,
                    depth: m.depth + 1,
                    nots: m.nots + 1,
                }
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                let a = l.metrics();
                let b = r.metrics();
                Metrics {
                    leaves: a.leaves + b.leaves,
                    depth: a.depth.max(b.depth) + 1,
                    nots: a.nots + b.nots,
                }
            }
        }
    }

    /// Parses the text grammar described in the module docs.
    pub fn parse(text: &str) -> Result<Formula> {
        let mut parser = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let formula = parser.parse_or()?;
        parser.skip_ws();
        if parser.pos < parser.bytes.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(formula)
    }

    /// Graphviz DOT rendering of the tree, nodes labelled
    /// `AND`/`OR`/`NOT`/`x<i>`/`0`/`1`.
    pub fn to_dot(&self) -> String {
        fn label(f: &Formula) -> String {
            match f {
                Formula::Const(false) => "0".into(),
                Formula::Const(true) => "1".into(),
                Formula::Var(i) => format!("x{i}"),
                Formula::Not(_) => "NOT".into(),
                Formula::And(..) => "AND".into(),
                Formula::Or(..) => "OR".into(),
            }
        }
        fn walk(f: &Formula, out: &mut String, next: &mut usize) -> usize {
            let id = *next;
            *next += 1;
            out.push_str(&format!("  n{id} [label=\"{}\"];\n", label(f)));
            let children: Vec<&Formula> = match f {
                Formula::Const(_) | Formula::Var(_) => Vec::new(),
                Formula::Not(c) => vec![c],
                Formula::And(l, r) | Formula::Or(l, r) => vec![l, r],
            };
            for child in children {
                let cid = walk(child, out, next);
                out.push_str(&format!("  n{id} -> n{cid};\n"));
            }
            id
        }
        let mut out = String::from("digraph formula {\n");
        let mut next = 0;
        walk(self, &mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::And(..) | Formula::Or(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Const(false) => write!(f, "0"),
            Formula::Const(true) => write!(f, "1"),
            Formula::Var(i) => write!(f, "x{i}"),
            Formula::Not(c) => {
                write!(f, "~")?;
                c.fmt_child(f)
            }
            Formula::And(l, r) => {
                l.fmt_child(f)?;
                write!(f, " & ")?;
                r.fmt_child(f)
            }
            Formula::Or(l, r) => {
                l.fmt_child(f)?;
                write!(f, " | ")?;
                r.fmt_child(f)
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos + 1,
            message: message.into(),
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_or(&mut self) -> Result<Formula> {
        let mut lhs = self.parse_and()?;
        while self.eat(b'|') {
            lhs = Formula::or(lhs, self.parse_and()?);
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> Result<Formula> {
        let mut lhs = self.parse_unary()?;
        while self.eat(b'&') {
            lhs = Formula::and(lhs, self.parse_unary()?);
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<Formula> {
        if self.eat(b'~') {
            Ok(Formula::not(self.parse_unary()?))
        } else {
            self.parse_primary()
        }
    }

    fn parse_primary(&mut self) -> Result<Formula> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_or()?;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Formula::Const(false))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Formula::Const(true))
            }
            Some(b'x') => {
                let token_pos = self.pos + 1;
                self.pos += 1;
                let digits_start = self.pos;
                while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
                if self.pos == digits_start {
                    return Err(self.error("expected a variable index after `x`"));
                }
                let digits = std::str::from_utf8(&self.bytes[digits_start..self.pos])
                    .expect("digits are ascii");
                let index: usize = digits.parse().map_err(|_| Error::Syntax {
                    position: token_pos,
                    message: format!("variable index `{digits}` is too large"),
                })?;
                if index == 0 {
                    return Err(Error::Syntax {
                        position: token_pos,
                        message: "variable indices start at 1".into(),
                    });
                }
                Ok(Formula::Var(index))
            }
            Some(_) => Err(self.error("expected `(`, `~`, `0`, `1`, or a variable like `x1`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xor_formula() -> Formula {
        Formula::and(
            Formula::or(Formula::Var(1), Formula::Var(2)),
            Formula::not(Formula::and(Formula::Var(1), Formula::Var(2))),
        )
    }

    #[test]
    fn evaluates_standard_formulas() {
        let f = xor_formula();
        assert_eq!(f.eval(InputVector::new(2, 0b01)), Ok(true));
        assert_eq!(f.eval(InputVector::new(2, 0b11)), Ok(false));
        assert_eq!(
            Formula::Const(true).eval(InputVector::new(3, 0b101)),
            Ok(true)
        );
        assert_eq!(
            Formula::Var(3).eval(InputVector::new(2, 0)),
            Err(Error::VariableOutOfRange { index: 3, arity: 2 })
        );
    }

    #[test]
    fn counts_not_nodes_syntactically() {
        assert_eq!(xor_formula().not_count(), 1);
        assert_eq!(
            Formula::and(Formula::Var(1), Formula::Var(2)).not_count(),
            0
        );
        assert_eq!(Formula::not(Formula::not(Formula::Var(1))).not_count(), 2);
    }

    #[test]
    fn truth_tables_of_formulas() {
        assert_eq!(
            xor_formula().truth_table(2).unwrap(),
            TruthTable::from_hex(2, "6").unwrap()
        );
        assert_eq!(
            Formula::Var(1).truth_table(2).unwrap(),
            TruthTable::from_hex(2, "a").unwrap()
        );
        assert!(Formula::Const(false)
            .truth_table(3)
            .unwrap()
            .is_constant(false));
        assert_eq!(
            Formula::Var(3).truth_table(2),
            Err(Error::VariableOutOfRange { index: 3, arity: 2 })
        );
    }

    #[test]
    fn parses_the_grammar() {
        assert_eq!(
            Formula::parse("~(x1 & x2)").unwrap(),
            Formula::not(Formula::and(Formula::Var(1), Formula::Var(2)))
        );
        assert_eq!(
            Formula::parse("x1 | x2 | x3").unwrap(),
            Formula::or(
                Formula::or(Formula::Var(1), Formula::Var(2)),
                Formula::Var(3)
            )
        );
        assert_eq!(
            Formula::parse("x1 | x2 & x3").unwrap(),
            Formula::or(
                Formula::Var(1),
                Formula::and(Formula::Var(2), Formula::Var(3))
            )
        );
        assert_eq!(Formula::parse("~~x1").unwrap().not_count(), 2);
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            Formula::parse("x0"),
            Err(Error::Syntax {
                position: 1,
                message: "variable indices start at 1".into()
            })
        );
        assert!(matches!(
            Formula::parse("(x1"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            Formula::parse("x1 )"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(Formula::parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(
            Formula::parse("x1 && x2"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn renders_with_parenthesized_binary_children() {
        assert_eq!(xor_formula().to_string(), "(x1 | x2) & ~(x1 & x2)");
        assert_eq!(
            Formula::and(Formula::Var(1), Formula::Var(2)).to_string(),
            "x1 & x2"
        );
        assert_eq!(
            Formula::not(Formula::not(Formula::Var(1))).to_string(),
            "~~x1"
        );
        assert_eq!(
            Formula::or(Formula::Const(false), Formula::Var(1)).to_string(),
            "0 | x1"
        );
    }

    #[test]
    fn metrics_of_small_formulas() {
        let m = Formula::and(Formula::Var(1), Formula::Var(2)).metrics();
        assert_eq!((m.leaves, m.depth, m.nots), (2, 1, 0));
        let m = Formula::not(Formula::Var(1)).metrics();
        assert_eq!((m.leaves, m.depth, m.nots), (1, 1, 1));
        let m = xor_formula().metrics();
        assert_eq!((m.leaves, m.depth, m.nots), (4, 3, 1));
    }

    #[test]
    fn dot_output_is_stable() {
        let dot = Formula::not(Formula::and(Formula::Var(1), Formula::Var(2))).to_dot();
        let expected = "digraph formula {\n  n0 [label=\"NOT\"];\n  n1 [label=\"AND\"];\n  n2 [label=\"x1\"];\n  n1 -> n2;\n  n3 [label=\"x2\"];\n  n1 -> n3;\n  n0 -> n1;\n}\n";
        assert_eq!(dot, expected);
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
        fn parse_render_round_trips(f in formula_strategy(3)) {
            let rendered = f.to_string();
            prop_assert_eq!(Formula::parse(&rendered).unwrap(), f);
        }

        #[test]
        fn truth_table_is_a_homomorphism(a in formula_strategy(3), b in formula_strategy(3)) {
            let ta = a.truth_table(3).unwrap();
            let tb = b.truth_table(3).unwrap();
            let and_table = Formula::and(a.clone(), b.clone()).truth_table(3).unwrap();
            let or_table = Formula::or(a.clone(), b.clone()).truth_table(3).unwrap();
            let not_table = Formula::not(a.clone()).truth_table(3).unwrap();
            for i in 0..8usize {
                prop_assert_eq!(and_table.bit(i), ta.bit(i) && tb.bit(i));
                prop_assert_eq!(or_table.bit(i), ta.bit(i) || tb.bit(i));
                prop_assert_eq!(not_table.bit(i), !ta.bit(i));
            }
        }
    }
}
