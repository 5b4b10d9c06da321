//! Squarefree monomial ideals: minimal generating sets, colon ideals,
//! Alexander duality via minimal transversals, minimal primes, and the
//! graph-attached constructions (closed neighborhood ideal, dominating
//! ideal, edge ideal, length-3 path ideal).

mod text;

pub use text::parse_ideal;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{minimal_dominating_sets, Graph};
use crate::vset::{VertexSet, MAX_VERTICES};

/// A squarefree monomial, identified with its support.
/// The empty support is the unit monomial `1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    support: VertexSet,
}

impl Monomial {
    pub fn new(support: VertexSet) -> Self {
        Monomial { support }
    }

    pub fn unit() -> Self {
        Monomial {
            support: VertexSet::EMPTY,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support.is_subset_of(other.support)
    }

    /// `self / gcd(self, m)`: drops the variables shared with `m`.
    #[must_use]
    pub fn quotient_by(&self, m: &Monomial) -> Monomial {
        Monomial {
            support: self.support.difference(m.support),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (k, v) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A squarefree monomial ideal in `k[x1..xn]`, held as its unique minimal
/// generating set, sorted lexicographically on supports.
///
/// The zero ideal (no generators) and the unit ideal (the single generator
/// `1`) are both representable; the unit ideal only ever arises from colon
/// operations and is rejected by the homological routines.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient_n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Reduces `gens` to the divisibility-minimal generating set.
    /// Rejects the unit monomial and out-of-range supports.
    pub fn minimalize(ambient_n: usize, gens: Vec<Monomial>) -> Result<Self> {
        check_ambient(ambient_n)?;
        for g in &gens {
            if g.is_unit() {
                return Err(Error::InvalidGenerator(
                    "the unit monomial cannot be a generator".into(),
                ));
            }
            if !g.support().is_subset_of(VertexSet::full(ambient_n)) {
                return Err(Error::parameter(format!(
                    "generator {g} uses variables outside x1..x{ambient_n}"
                )));
            }
        }
        Ok(Self::minimalize_unchecked(ambient_n, gens))
    }

    /// Minimalization that tolerates the unit monomial (colon ideals can
    /// produce the unit ideal).
    pub(crate) fn minimalize_unchecked(ambient_n: usize, mut gens: Vec<Monomial>) -> Self {
        if gens.iter().any(Monomial::is_unit) {
            return Self::unit(ambient_n);
        }
        gens.sort_by_key(|g| (g.degree(), *g));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        MonomialIdeal {
            ambient_n,
            gens: minimal,
        }
    }

    pub fn zero(ambient_n: usize) -> Self {
        assert!(check_ambient(ambient_n).is_ok());
        MonomialIdeal {
            ambient_n,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient_n: usize) -> Self {
        assert!(check_ambient(ambient_n).is_ok());
        MonomialIdeal {
            ambient_n,
            gens: vec![Monomial::unit()],
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// Minimal generators, lexicographically sorted.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// True for nonzero ideals properly contained in the ring.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Membership: a squarefree monomial lies in the ideal iff some
    /// generator divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn min_gen_degree(&self) -> Option<usize> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_gen_degree(&self) -> Option<usize> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Colon ideal `(I : m)` for a monomial `m`. Coloning by a member of
    /// the ideal yields the unit ideal; the zero ideal stays zero.
    #[must_use]
    pub fn colon_by_monomial(&self, m: &Monomial) -> Self {
        let quotients = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        Self::minimalize_unchecked(self.ambient_n, quotients)
    }

    /// Ideal sum, minimalized. Both summands must share the ambient ring.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient_n != other.ambient_n {
            return Err(Error::AmbientMismatch {
                left: self.ambient_n,
                right: other.ambient_n,
            });
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(Self::minimalize_unchecked(self.ambient_n, gens))
    }

    /// Alexander dual: the ideal generated by the minimal transversals of
    /// the generator supports. Applying it twice returns the original.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("the zero ideal has no Alexander dual"));
        }
        if self.is_unit() {
            return Err(Error::domain("the unit ideal has no Alexander dual"));
        }
        let supports: Vec<VertexSet> = self.gens.iter().map(|g| g.support()).collect();
        let transversals = minimal_transversals(self.ambient_n, &supports);
        Ok(MonomialIdeal {
            ambient_n: self.ambient_n,
            gens: transversals.into_iter().map(Monomial::new).collect(),
        })
    }

    /// Supports of the minimal primes: each is a minimal set of variables
    /// covering every generator.
    pub fn minimal_primes(&self) -> Result<Vec<VertexSet>> {
        Ok(self
            .alexander_dual()?
            .gens
            .iter()
            .map(|g| g.support())
            .collect())
    }

    /// `(height, big height)`: minimum and maximum cardinality over the
    /// minimal primes.
    pub fn height_and_bight(&self) -> Result<(usize, usize)> {
        let primes = self.minimal_primes()?;
        let ht = primes.iter().map(|p| p.len()).min().expect("dual is nonzero");
        let bight = primes.iter().map(|p| p.len()).max().expect("dual is nonzero");
        Ok((ht, bight))
    }

    /// The ideal generated by all squarefree degree-`d` monomials contained
    /// in `self` (supports of size `d` containing some generator support).
    pub fn squarefree_component(&self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::parameter("component degree must be >= 1"));
        }
        if self.is_zero() || d > self.ambient_n {
            return Ok(Self::zero(self.ambient_n));
        }
        let mut gens = Vec::new();
        for mask in subsets_of_size(self.ambient_n, d) {
            let m = Monomial::new(VertexSet::from_bits(mask));
            if self.contains(&m) {
                gens.push(m);
            }
        }
        gens.sort();
        Ok(MonomialIdeal {
            ambient_n: self.ambient_n,
            gens,
        })
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::parameter(format!(
            "ambient variable count must be in 1..={MAX_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

/// All masks with exactly `d` bits among the low `n` (Gosper's hack).
fn subsets_of_size(n: usize, d: usize) -> impl Iterator<Item = u32> {
    let limit = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut mask = if d == 0 { 0 } else { (1u32 << d) - 1 };
    let mut done = d > n;
    std::iter::from_fn(move || {
        if done || mask > limit {
            return None;
        }
        let current = mask;
        if d == 0 {
            done = true;
        } else {
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            if r == 0 {
                done = true;
            } else {
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        Some(current)
    })
}

/// Inclusion-minimal transversals of a family of nonempty vertex sets.
///
/// Below 20 variables this scans all subsets, keeping a set when it meets
/// every member and each of its elements has a private witness; beyond
/// that it falls back to incremental expansion. This is deliberately a
/// separate code path from the dominating-set enumeration so the two can
/// cross-check each other.
fn minimal_transversals(n: usize, family: &[VertexSet]) -> Vec<VertexSet> {
    debug_assert!(family.iter().all(|s| !s.is_empty()));
    if n <= 20 {
        let mut out = Vec::new();
        'next: for mask in 1u32..(1u32 << n) {
            let t = VertexSet::from_bits(mask);
            let mut private = VertexSet::EMPTY;
            for &s in family {
                let hit = s.intersection(t);
                if hit.is_empty() {
                    continue 'next; // not a transversal
                }
                if hit.len() == 1 {
                    private = private.union(hit);
                }
            }
            // minimal iff every element is the sole hitter of some set
            if t.is_subset_of(private) {
                out.push(t);
            }
        }
        out.sort();
        out
    } else {
        let mut partial: Vec<VertexSet> = vec![VertexSet::EMPTY];
        for &s in family {
            let mut next = Vec::with_capacity(partial.len());
            for t in partial {
                if t.intersects(s) {
                    next.push(t);
                } else {
                    for v in s.iter() {
                        next.push(t.with(v));
                    }
                }
            }
            next.sort_by_key(|s| s.len());
            next.dedup();
            let mut kept: Vec<VertexSet> = Vec::with_capacity(next.len());
            for &cand in next.iter() {
                if !kept.iter().any(|&k| k.is_subset_of(cand)) {
                    kept.push(cand);
                }
            }
            partial = kept;
        }
        partial.sort();
        partial
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MonomialIdeal", 2)?;
        s.serialize_field("n", &self.ambient_n)?;
        let gens: Vec<Vec<usize>> = self.gens.iter().map(|g| g.support().to_vec()).collect();
        s.serialize_field("gens", &gens)?;
        s.end()
    }
}

/// The closed neighborhood ideal: generated by the products over `N[v]`
/// for every vertex, minimalized.
pub fn closed_neighborhood_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g
        .vertices()
        .map(|v| Monomial::new(g.closed_neighborhood(v).expect("v in range")))
        .collect();
    MonomialIdeal::minimalize_unchecked(g.n(), gens)
}

/// The dominating ideal: generated by the products over every minimal
/// dominating set. Minimal dominating sets are incomparable, so this is
/// already a minimal generating set.
pub fn dominating_ideal(g: &Graph) -> MonomialIdeal {
    let gens: Vec<Monomial> = minimal_dominating_sets(g)
        .into_iter()
        .map(Monomial::new)
        .collect();
    debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
    MonomialIdeal {
        ambient_n: g.n(),
        gens,
    }
}

/// The edge ideal: one quadratic generator per edge.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens: Vec<Monomial> = g
        .edges()
        .iter()
        .map(|&(u, v)| Monomial::new(VertexSet::singleton(u).with(v)))
        .collect();
    MonomialIdeal::minimalize_unchecked(g.n(), gens)
}

/// The path ideal `< x_i x_{i+1} x_{i+2} : 1 <= i <= n-2 >`.
pub fn path_ideal_3(n: usize) -> Result<MonomialIdeal> {
    if n < 3 {
        return Err(Error::parameter(format!(
            "path ideal of length 3 requires n >= 3, got {n}"
        )));
    }
    check_ambient(n)?;
    let gens: Vec<Monomial> = (1..=n - 2)
        .map(|i| Monomial::new([i, i + 1, i + 2].into_iter().collect()))
        .collect();
    Ok(MonomialIdeal {
        ambient_n: n,
        gens,
    })
}
