//! Plain-text ideal syntax, compatible with common computer algebra input:
//! `ideal(x1*x2, x2*x3*x4, x4*x5)`, one ideal per line. `ideal()` is the
//! zero ideal and `ideal(1)` the unit ideal.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::vset::VertexSet;

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (k, g) in self.gens().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in k[x1..x{}]", self.ambient_n())
    }
}

/// Parses `ideal(...)` syntax. The ambient variable count is
/// `ambient_n` when given (and must cover every index that occurs),
/// otherwise the largest index used.
pub fn parse_ideal(text: &str, ambient_n: Option<usize>) -> Result<MonomialIdeal> {
    let s = text.trim();
    let inner = s
        .strip_prefix("ideal(")
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::parameter(format!("expected `ideal(...)`, got `{s}`")))?;
    let mut gens: Vec<Monomial> = Vec::new();
    let mut max_var = 0usize;
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            if inner.trim().is_empty() {
                break; // `ideal()`
            }
            return Err(Error::parameter("empty generator in ideal syntax"));
        }
        if tok == "1" {
            gens.push(Monomial::unit());
            continue;
        }
        let mut support = VertexSet::EMPTY;
        for factor in tok.split('*') {
            let factor = factor.trim();
            let idx: usize = factor
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .filter(|&i| (1..=32).contains(&i))
                .ok_or_else(|| {
                    Error::parameter(format!("bad variable `{factor}` (expected x1..x32)"))
                })?;
            support = support.with(idx);
            max_var = max_var.max(idx);
        }
        gens.push(Monomial::new(support));
    }
    let n = match ambient_n {
        Some(n) if n >= max_var => n,
        Some(n) => {
            return Err(Error::parameter(format!(
                "ideal uses x{max_var} but ambient ring has only {n} variables"
            )))
        }
        None => max_var.max(1),
    };
    if gens.iter().any(Monomial::is_unit) {
        return Ok(MonomialIdeal::unit(n));
    }
    MonomialIdeal::minimalize(n, gens)
}
