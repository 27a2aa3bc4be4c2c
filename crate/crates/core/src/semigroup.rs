//! Numerical semigroups: cofinite additive submonoids of the naturals.
//!
//! A semigroup stands for the monomial ring k[[t^S]]; every invariant exposed
//! here (Frobenius number, gaps, multiplicity, embedding dimension, type) is
//! computed exactly from a finite membership window.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators have gcd {0} > 1")]
    NotCoprime(i64),
    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(i64),
    #[error("generators too large: the membership sieve would need {0} entries")]
    SieveTooLarge(i64),
    #[error("ideal bases differ: {0} vs {1}")]
    BaseMismatch(String, String),
    #[error("quotient undefined: divisor is not contained in the numerator")]
    NotContained,
}

/// Upper bound on the membership sieve ([`NumericalSemigroup::new`] rejects
/// generator sets whose max·min sieve would exceed it).
const SIEVE_LIMIT: i64 = 100_000_000;

/// An upward-cofinite set of integers: all of `[conductor, ∞)` plus the
/// members recorded in `bits` over `[lower, conductor)`.
///
/// Normal form: `bits[0]` is true (so `lower` is the least member) and the
/// conductor is minimal (`conductor - 1` is not a member unless the window is
/// empty). Every set operation re-normalizes, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Window {
    pub lower: i64,
    pub conductor: i64,
    pub bits: Vec<bool>,
}

impl Window {
    /// Builds a window from raw bits over [lower, lower+bits.len()) assuming
    /// everything at or beyond the end of the bits is a member.
    pub fn normalized(lower: i64, bits: Vec<bool>) -> Window {
        let mut lower = lower;
        let mut bits = bits;
        while let Some(true) = bits.last() {
            bits.pop();
        }
        let lead = bits.iter().position(|&b| b).unwrap_or(bits.len());
        if lead > 0 {
            bits.drain(..lead);
            lower += lead as i64;
        }
        let conductor = lower + bits.len() as i64;
        Window {
            lower,
            conductor,
            bits,
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        if z >= self.conductor {
            true
        } else if z < self.lower {
            false
        } else {
            self.bits[(z - self.lower) as usize]
        }
    }

    pub fn min(&self) -> i64 {
        self.lower
    }

    /// Members in [lower, hi).
    pub fn members_below(&self, hi: i64) -> Vec<i64> {
        (self.lower..hi).filter(|&z| self.contains(z)).collect()
    }

    pub fn shift(&self, d: i64) -> Window {
        Window {
            lower: self.lower + d,
            conductor: self.conductor + d,
            bits: self.bits.clone(),
        }
    }

    pub fn union(&self, other: &Window) -> Window {
        let lo = self.lower.min(other.lower);
        let hi = self.conductor.min(other.conductor);
        let bits = (lo..hi)
            .map(|z| self.contains(z) || other.contains(z))
            .collect();
        Window::normalized(lo, bits)
    }

    pub fn intersect(&self, other: &Window) -> Window {
        let lo = self.lower.max(other.lower);
        let hi = self.conductor.max(other.conductor);
        let bits = (lo..hi)
            .map(|z| self.contains(z) && other.contains(z))
            .collect();
        Window::normalized(lo, bits)
    }

    /// Minkowski sum {x + y}.
    pub fn minkowski(&self, other: &Window) -> Window {
        let lo = self.lower + other.lower;
        // z ≥ self.conductor + other.lower splits as (z - other.lower) + other.lower
        let hi = (self.conductor + other.lower).min(other.conductor + self.lower);
        let bits = (lo..hi)
            .map(|z| {
                (self.lower..=z - other.lower)
                    .any(|x| self.contains(x) && other.contains(z - x))
            })
            .collect();
        Window::normalized(lo, bits)
    }

    /// {z : z + g ∈ self for every g in gens}.
    pub fn colon_by_gens(&self, gens: &[i64]) -> Window {
        let gmin = gens.iter().copied().min().expect("nonempty generators");
        let lo = self.lower - gmin;
        let hi = self.conductor - gmin;
        let bits = (lo..hi)
            .map(|z| gens.iter().all(|&g| self.contains(z + g)))
            .collect();
        Window::normalized(lo, bits)
    }

    pub fn is_subset(&self, other: &Window) -> bool {
        if self.conductor < other.conductor {
            return false;
        }
        (self.lower..self.conductor).all(|z| !self.contains(z) || other.contains(z))
    }

    /// Exact count of members of `self` missing from `sub`; requires sub ⊆ self.
    pub fn count_diff(&self, sub: &Window) -> usize {
        let lo = self.lower.min(sub.lower);
        let hi = self.conductor.max(sub.conductor);
        (lo..hi)
            .filter(|&z| self.contains(z) && !sub.contains(z))
            .count()
    }
}

/// A numerical semigroup presented by its minimal generators, with every
/// basic invariant precomputed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    multiplicity: i64,
    type_t: usize,
    members: Window,
}

/// Serialized form: `{generators, frobenius, gaps, type}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub gaps: Vec<i64>,
    #[serde(rename = "type")]
    pub type_t: usize,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, normalizing to the minimal
    /// generating set. Membership is sieved past max·min and the conductor is
    /// then located exactly as the start of the first full run of
    /// `multiplicity` consecutive members.
    ///
    /// ```
    /// use z2lab::NumericalSemigroup;
    /// let s = NumericalSemigroup::new(&[4, 7, 9, 11]).unwrap();
    /// assert_eq!(s.generators(), &[4, 7, 9]); // 11 = 4 + 7 is redundant
    /// assert_eq!(s.frobenius(), 10);
    /// assert_eq!(s.gaps(), &[1, 2, 3, 5, 6, 10]);
    /// ```
    pub fn new(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::InvalidGenerator(bad));
        }
        let g = gens.iter().fold(0i64, |a, &b| gcd(a, b));
        if g != 1 {
            return Err(SemigroupError::NotCoprime(g));
        }
        let maxg = *gens.iter().max().unwrap();
        let ming = *gens.iter().min().unwrap();
        let need = maxg
            .checked_mul(ming)
            .and_then(|p| p.checked_add(maxg))
            .and_then(|p| p.checked_add(2))
            .unwrap_or(i64::MAX);
        if need > SIEVE_LIMIT {
            return Err(SemigroupError::SieveTooLarge(need));
        }
        let mut bound = need as usize;
        loop {
            let mut sieve = vec![false; bound];
            sieve[0] = true;
            for i in 0..bound {
                if sieve[i] {
                    for &gg in gens {
                        let t = i + gg as usize;
                        if t < bound {
                            sieve[t] = true;
                        }
                    }
                }
            }
            if let Some(c) = find_conductor(&sieve, ming as usize) {
                return Ok(Self::from_sieve(&sieve, c));
            }
            // a run of `ming` consecutive members always appears within
            // max·min for gcd-1 input; widen and retry if it did not
            bound *= 2;
        }
    }

    fn from_sieve(sieve: &[bool], conductor: usize) -> Self {
        let members = Window::normalized(0, sieve[..conductor].to_vec());
        let gaps: Vec<i64> = (0..conductor as i64)
            .filter(|&z| !members.contains(z))
            .collect();
        let frobenius = gaps.last().copied().unwrap_or(-1);
        let multiplicity = (1..).find(|&z| members.contains(z)).unwrap();
        // minimal generators: nonzero members not expressible as a sum of two
        let m = members.nonzero();
        let mm = m.minkowski(&m);
        let generators: Vec<i64> = m
            .members_below(mm.conductor)
            .into_iter()
            .filter(|&z| !mm.contains(z))
            .collect();
        // pseudo-Frobenius numbers: z ∉ S with z + M ⊆ S
        let sm = members.colon_by_gens(&generators);
        let type_t = (sm.lower..sm.conductor.max(members.conductor))
            .filter(|&z| sm.contains(z) && !members.contains(z))
            .count();
        NumericalSemigroup {
            generators,
            frobenius,
            gaps,
            multiplicity,
            type_t,
            members,
        }
    }

    /// Rebuilds a semigroup from an explicit membership window (lower must be
    /// 0 and the set must be closed under addition; both are rechecked).
    pub(crate) fn from_member_window(w: &Window) -> Result<Self, SemigroupError> {
        debug_assert_eq!(w.min(), 0);
        let m = w.nonzero();
        let mm = m.minkowski(&m);
        let gens: Vec<i64> = m
            .members_below(mm.conductor)
            .into_iter()
            .filter(|&z| !mm.contains(z))
            .collect();
        let s = Self::new(&gens)?;
        debug_assert_eq!(&s.members, w, "window is not additively closed");
        Ok(s)
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Least c with [c, ∞) ⊆ S.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    pub fn embdim(&self) -> usize {
        self.generators.len()
    }

    /// Number of pseudo-Frobenius numbers, the Cohen-Macaulay type of k[[t^S]].
    pub fn type_t(&self) -> usize {
        self.type_t
    }

    pub fn contains(&self, z: i64) -> bool {
        self.members.contains(z)
    }

    /// S = ℕ, i.e. k[[t^S]] is a discrete valuation ring.
    pub fn is_dvr(&self) -> bool {
        self.frobenius == -1
    }

    /// Symmetric ⟺ the gaps reflect onto the members via z ↦ F − z; for the
    /// monomial ring this is the Gorenstein property.
    pub fn is_symmetric(&self) -> bool {
        2 * self.gaps.len() as i64 == self.frobenius + 1
    }

    pub(crate) fn window(&self) -> &Window {
        &self.members
    }

    pub fn record(&self) -> SemigroupRecord {
        SemigroupRecord {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            gaps: self.gaps.clone(),
            type_t: self.type_t,
        }
    }
}

impl Window {
    /// The window with 0 removed (maximal-ideal counterpart of a semigroup).
    pub(crate) fn nonzero(&self) -> Window {
        let lo = self.lower.min(0);
        let hi = self.conductor.max(1);
        let bits = (lo..hi).map(|z| z != 0 && self.contains(z)).collect();
        Window::normalized(lo, bits)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn find_conductor(sieve: &[bool], run: usize) -> Option<usize> {
    let mut streak = 0usize;
    for (i, &b) in sieve.iter().enumerate() {
        if b {
            streak += 1;
            if streak == run {
                let start = i + 1 - run;
                // walk back over any longer run to the true conductor
                let mut c = start;
                while c > 0 && sieve[c - 1] {
                    c -= 1;
                }
                if c == 0 {
                    c = 0; // the full naturals
                }
                return Some(c);
            }
        } else {
            streak = 0;
        }
    }
    None
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Parses "a,b,c" into a generator list.
pub fn parse_generators(src: &str) -> Result<Vec<i64>, SemigroupError> {
    let mut out = Vec::new();
    for tok in src.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: i64 = tok
            .parse()
            .map_err(|_| SemigroupError::InvalidGenerator(0))?;
        out.push(v);
    }
    if out.is_empty() {
        return Err(SemigroupError::EmptyGenerators);
    }
    Ok(out)
}

/// Every distinct numerical semigroup minimally generated by a subset of
/// {2, …, max_gen} of size ≤ max_size, in deterministic order (sorted by the
/// minimal generator tuple). Subsets with gcd > 1 are skipped; distinct
/// subsets generating the same semigroup are deduplicated.
pub fn enumerate_family(max_gen: i64, max_size: usize) -> Vec<NumericalSemigroup> {
    let pool: Vec<i64> = (2..=max_gen).collect();
    let mut seen = std::collections::BTreeMap::new();
    let mut subset = Vec::new();
    fn go(
        pool: &[i64],
        start: usize,
        subset: &mut Vec<i64>,
        max_size: usize,
        seen: &mut std::collections::BTreeMap<Vec<i64>, NumericalSemigroup>,
    ) {
        if !subset.is_empty() && subset.iter().fold(0, |a, &b| gcd(a, b)) == 1 {
            let s = NumericalSemigroup::new(subset).expect("gcd checked");
            seen.entry(s.generators().to_vec()).or_insert(s);
        }
        if subset.len() == max_size {
            return;
        }
        for i in start..pool.len() {
            subset.push(pool[i]);
            go(pool, i + 1, subset, max_size, seen);
            subset.pop();
        }
    }
    go(&pool, 0, &mut subset, max_size, &mut seen);
    seen.into_values().collect()
}
