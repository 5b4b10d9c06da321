//! Exact graded Betti numbers of squarefree monomial ideals.
//!
//! The main route ([`betti_table`]) localizes at squarefree multidegrees:
//! only unions of generator supports can carry a nonzero Betti number, and
//! at such a multidegree the number is the rank of a reduced homology group
//! of the complex of subsets containing no generator support. An
//! independent route ([`betti_table_oracle`]) computes the same table from
//! the complexes `{t ⊆ σ : x^(σ∖t) ∈ I}`; the two share nothing but the
//! rank routine and must agree entrywise.

mod engine;
mod hilbert;
mod homology;
mod lattice;
mod linearity;
mod oracle;
mod rank;

pub use engine::{betti_table, betti_table_with};
pub use hilbert::{alternating_sum_matches, hilbert_numerator};
pub use linearity::{
    has_linear_quotients, has_linear_resolution, is_componentwise_linear, is_sequentially_cm,
};
pub use oracle::{betti_table_oracle, betti_table_oracle_with};

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// A prime field `GF(p)`; rejects composite or zero `p`.
    pub fn prime_field(p: u32) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::parameter(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn gf2() -> Self {
        FieldSpec::PrimeField(2)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Size guards for the homology engine.
#[derive(Clone, Copy, Debug)]
pub struct EngineLimits {
    /// Largest ambient variable count accepted.
    pub max_vars: usize,
    /// Largest admissible multidegree-lattice size.
    pub max_lattice: u64,
    /// Largest admissible face count of a single complex.
    pub max_faces: u64,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            max_vars: 24,
            max_lattice: 1 << 20,
            max_faces: 1 << 20,
        }
    }
}

/// Graded Betti numbers of `R/I`: a map `(i, j) -> rank` holding only the
/// nonzero entries, always including `(0, 0) -> 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    ambient_n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub(crate) fn from_entries(
        ambient_n: usize,
        entries: BTreeMap<(usize, usize), u64>,
    ) -> Self {
        debug_assert!(entries.get(&(0, 0)) == Some(&1));
        debug_assert!(entries.values().all(|&r| r > 0));
        debug_assert!(entries.keys().all(|&(_, j)| j <= ambient_n));
        BettiTable { ambient_n, entries }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// `β_{i,j}(R/I)`, zero when absent.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    /// `reg(R/I) = max { j - i : β_{i,j} != 0 }`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `pd(R/I) = max { i : β_{i,j} != 0 }`.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Regularity of the ideal itself: `reg(I) = reg(R/I) + 1`.
    pub fn ideal_regularity(&self) -> usize {
        self.regularity() + 1
    }

    /// Betti number of the ideal: `β_{i,j}(I) = β_{i+1,j}(R/I)`.
    pub fn ideal_betti(&self, i: usize, j: usize) -> u64 {
        self.get(i + 1, j)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BettiTable", 2)?;
        s.serialize_field("n", &self.ambient_n)?;
        let entries: Vec<(usize, usize, u64)> = self.entries().collect();
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

/// Standard Betti diagram layout: row `d` column `i` holds `β_{i, i+d}`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.proj_dim();
        let reg = self.regularity();
        let cell = |d: usize, i: usize| {
            let r = self.get(i, i + d);
            if r == 0 {
                ".".to_string()
            } else {
                r.to_string()
            }
        };
        let mut widths = vec![0usize; pd + 1];
        for (i, w) in widths.iter_mut().enumerate() {
            *w = (0..=reg)
                .map(|d| cell(d, i).len())
                .max()
                .unwrap_or(1)
                .max(i.to_string().len());
        }
        let label_w = reg.to_string().len() + 1;
        write!(f, "{:label_w$}", "")?;
        for (i, w) in widths.iter().enumerate() {
            write!(f, " {i:>w$}")?;
        }
        writeln!(f)?;
        for d in 0..=reg {
            write!(f, "{:>w$}:", d, w = label_w - 1)?;
            for (i, w) in widths.iter().enumerate() {
                write!(f, " {:>w$}", cell(d, i))?;
            }
            if d < reg {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable(n={}, {:?})", self.ambient_n, self.entries)
    }
}
