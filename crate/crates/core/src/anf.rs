//! Algebraic normal form input: a flat XOR of monomials such as
//! `x1+x2+x1x2+x2x3+x1x3`, with `1` for the constant term and `0` for the
//! empty sum. Parsing applies XOR cancellation, so a monomial written an
//! even number of times disappears and the monomial set is canonical.

use crate::boolfn::{check_var_count, BooleanFunction};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A canonical sum of monomials over n variables. Each monomial is the
/// mask of its variables in the index encoding (variable i at bit n-i);
/// the empty mask is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnfExpression {
    n: u32,
    monomials: BTreeSet<u32>,
}

impl AnfExpression {
    /// Parses the grammar
    /// `expression := term ('+' term)*; term := '0' | '1' | factor+;
    /// factor := 'x' integer`, whitespace ignored, indices in 1..=n.
    pub fn parse(text: &str, n: u32) -> Result<Self> {
        check_var_count(n)?;
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            n,
        }
        .expression()
    }

    pub fn from_monomial_masks(n: u32, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_var_count(n)?;
        let mut monomials = BTreeSet::new();
        for m in masks {
            if m >= (1u32 << n) {
                return Err(Error::AnfVariableRange {
                    index: n + 1,
                    max: n,
                    pos: 0,
                });
            }
            toggle(&mut monomials, m);
        }
        Ok(AnfExpression { n, monomials })
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// Monomial masks in ascending numeric order.
    pub fn monomial_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.monomials.iter().copied()
    }

    /// Monomials as sorted variable-index lists; the constant term is the
    /// empty list.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        self.monomials.iter().map(|&m| mask_to_vars(self.n, m)).collect()
    }

    /// Evaluates the expression at every input to build the truth table.
    pub fn to_function(&self) -> BooleanFunction {
        let masks: Vec<u32> = self.monomials.iter().copied().collect();
        BooleanFunction::from_fn(self.n, |x| {
            masks.iter().filter(|&&m| x & m == m).count() & 1 == 1
        })
        .expect("var count already validated")
    }
}

/// Prints monomials sorted by degree, then by variable indices, so the
/// output is deterministic and reparses to the same expression.
impl fmt::Display for AnfExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<Vec<u32>> = self.monomials();
        terms.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for (i, term) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if term.is_empty() {
                write!(f, "1")?;
            } else {
                for v in term {
                    write!(f, "x{v}")?;
                }
            }
        }
        Ok(())
    }
}

fn toggle(set: &mut BTreeSet<u32>, m: u32) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

fn mask_to_vars(n: u32, mask: u32) -> Vec<u32> {
    (1..=n).filter(|&i| mask >> (n - i) & 1 == 1).collect()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: u32,
}

impl Parser<'_> {
    fn expression(mut self) -> Result<AnfExpression> {
        let mut monomials = BTreeSet::new();
        loop {
            if let Some(mask) = self.term()? {
                toggle(&mut monomials, mask);
            }
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => self.pos += 1,
                Some(c) => {
                    return Err(self.syntax(format!("expected '+' or end, found {:?}", c as char)))
                }
            }
        }
        Ok(AnfExpression {
            n: self.n,
            monomials,
        })
    }

    /// One term; `None` is the '0' term, which contributes nothing.
    fn term(&mut self) -> Result<Option<u32>> {
        self.skip_ws();
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(None)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Some(0))
            }
            Some(b'x') => {
                let mut mask = 0u32;
                while self.peek() == Some(b'x') {
                    mask |= self.factor()?;
                    self.skip_ws();
                }
                Ok(Some(mask))
            }
            Some(c) => Err(self.syntax(format!(
                "expected '0', '1' or 'x<index>', found {:?}",
                c as char
            ))),
            None => Err(self.syntax("expected a term".into())),
        }
    }

    fn factor(&mut self) -> Result<u32> {
        debug_assert_eq!(self.peek(), Some(b'x'));
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a variable index after 'x'".into()));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let index: u32 = digits
            .parse()
            .map_err(|_| self.syntax(format!("variable index {digits} too large")))?;
        if index == 0 || index > self.n {
            return Err(Error::AnfVariableRange {
                index,
                max: self.n,
                pos: start,
            });
        }
        Ok(1 << (self.n - index))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: String) -> Error {
        Error::AnfSyntax {
            pos: self.pos,
            message,
        }
    }
}
