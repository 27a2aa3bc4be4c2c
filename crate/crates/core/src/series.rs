//! Truncated Laurent series over exact rationals.
//!
//! A series knows its coefficients exactly at every exponent below its
//! `precision`; beyond that nothing is asserted. Arithmetic tracks the joint
//! precision so no operation ever fabricates an unknown coefficient, and
//! membership tests demand enough precision to be exact before answering.

use crate::ideal::RelativeIdeal;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot invert a series with no known nonzero coefficient")]
    ZeroSeries,
    #[error("insufficient precision: have {have}, need {need}")]
    InsufficientPrecision { have: i64, need: i64 },
    #[error("term at exponent {exp} is at or beyond the stated precision {precision}")]
    TermBeyondPrecision { exp: i64, precision: i64 },
    #[error("cannot parse series: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, BigRational>,
    precision: i64,
}

/// Serialized form: `{terms: [{exp, num, den}], precision}`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SeriesRecord {
    pub terms: Vec<TermRecord>,
    pub precision: i64,
}

#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct TermRecord {
    pub exp: i64,
    pub num: String,
    pub den: String,
}

impl LaurentSeries {
    pub fn new(
        terms: impl IntoIterator<Item = (i64, BigRational)>,
        precision: i64,
    ) -> Result<Self, SeriesError> {
        let mut coeffs = BTreeMap::new();
        for (exp, c) in terms {
            if c.is_zero() {
                continue;
            }
            if exp >= precision {
                return Err(SeriesError::TermBeyondPrecision { exp, precision });
            }
            let entry = coeffs.entry(exp).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&exp);
            }
        }
        Ok(LaurentSeries { coeffs, precision })
    }

    pub fn zero(precision: i64) -> Self {
        LaurentSeries {
            coeffs: BTreeMap::new(),
            precision,
        }
    }

    /// The single term t^exp.
    pub fn monomial(exp: i64, precision: i64) -> Result<Self, SeriesError> {
        Self::new([(exp, BigRational::one())], precision)
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Least exponent with a (known) nonzero coefficient; None if the series
    /// is zero as far as it is known.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_known_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Option<BigRational> {
        if exp >= self.precision {
            return None;
        }
        Some(
            self.coeffs
                .get(&exp)
                .cloned()
                .unwrap_or_else(BigRational::zero),
        )
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    /// First possibly-nonzero exponent: the valuation, or the precision edge
    /// for a series that is zero as far as known.
    fn known_floor(&self) -> i64 {
        self.valuation().unwrap_or(self.precision)
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let precision = self.precision.min(other.precision);
        let mut coeffs = BTreeMap::new();
        for (&e, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if e >= precision {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c: &mut BigRational| !c.is_zero());
        LaurentSeries { coeffs, precision }
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
            precision: self.precision,
        }
    }

    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        // coefficients at n < min(pa + vb, pb + va) involve only known terms
        let precision = (self.precision + other.known_floor())
            .min(other.precision + self.known_floor());
        let mut coeffs = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e >= precision {
                    continue;
                }
                let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        coeffs.retain(|_, c: &mut BigRational| !c.is_zero());
        LaurentSeries { coeffs, precision }
    }

    /// Multiplicative inverse, exact below `target_precision`.
    ///
    /// Writing α = t^a·u with u a unit, the inverse is known to the same
    /// relative precision as α, i.e. below precision(α) − 2a; asking for more
    /// is an error rather than a fabrication.
    pub fn invert(&self, target_precision: i64) -> Result<LaurentSeries, SeriesError> {
        let a = self.valuation().ok_or(SeriesError::ZeroSeries)?;
        let available = self.precision - 2 * a;
        if target_precision > available {
            return Err(SeriesError::InsufficientPrecision {
                have: available,
                need: target_precision,
            });
        }
        // u_j = coeff(α, a + j); b_0 = 1/u_0, b_j = -(Σ_{k≥1} u_k b_{j-k})/u_0
        let rel = (target_precision + a).max(0) as usize;
        let u0 = self.coeffs[&a].clone();
        let mut b: Vec<BigRational> = Vec::with_capacity(rel);
        for j in 0..rel {
            if j == 0 {
                b.push(u0.recip());
                continue;
            }
            let mut acc = BigRational::zero();
            for k in 1..=j {
                if let Some(uk) = self.coeffs.get(&(a + k as i64)) {
                    acc += uk * &b[j - k];
                }
            }
            b.push(-acc / &u0);
        }
        let terms = b
            .into_iter()
            .enumerate()
            .map(|(j, c)| (-a + j as i64, c));
        LaurentSeries::new(terms, target_precision)
    }

    /// Whether α lies in the full monomial module with value set E, i.e.
    /// support(α) ⊆ E. Exact only when the precision reaches E's conductor.
    pub fn member_of(&self, e: &RelativeIdeal) -> Result<bool, SeriesError> {
        if self.precision < e.conductor() {
            return Err(SeriesError::InsufficientPrecision {
                have: self.precision,
                need: e.conductor(),
            });
        }
        Ok(self.coeffs.keys().all(|&exp| e.contains(exp)))
    }

    pub fn record(&self) -> SeriesRecord {
        SeriesRecord {
            terms: self
                .coeffs
                .iter()
                .map(|(&exp, c)| TermRecord {
                    exp,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
            precision: self.precision,
        }
    }

    /// Parses the term grammar `c*t^e` joined by + and −; `c` is an integer
    /// or `p/q`, and `t`, `t^e`, `c*t`, `-t^e` are accepted. Whitespace is
    /// ignored.
    pub fn parse(src: &str, precision: i64) -> Result<Self, SeriesError> {
        let terms = parse_terms(src)?;
        LaurentSeries::new(terms, precision)
    }
}

/// Parses a series literal into (exponent, coefficient) terms.
pub fn parse_terms(src: &str) -> Result<Vec<(i64, BigRational)>, SeriesError> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(SeriesError::Parse("empty series literal".into()));
    }
    let bad = |msg: &str| SeriesError::Parse(format!("{msg} in {compact:?}"));
    let mut terms = Vec::new();
    let bytes = compact.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigRational::one();
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        if i == bytes.len() {
            return Err(bad("dangling sign"));
        }
        // coefficient: [digits[/digits]]
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let numer = if i > start {
            compact[start..i]
                .parse::<BigInt>()
                .map_err(|_| bad("bad numerator"))?
        } else {
            BigInt::one()
        };
        let mut denom = BigInt::one();
        if i < bytes.len() && bytes[i] == b'/' {
            i += 1;
            let ds = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == ds {
                return Err(bad("missing denominator"));
            }
            denom = compact[ds..i]
                .parse::<BigInt>()
                .map_err(|_| bad("bad denominator"))?;
            if denom.is_zero() {
                return Err(bad("zero denominator"));
            }
        }
        let had_coeff = i > start;
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
            if i == bytes.len() || bytes[i] != b't' {
                return Err(bad("expected t after *"));
            }
        }
        // exponent part
        let mut exp = 0i64;
        if i < bytes.len() && bytes[i] == b't' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let neg = i < bytes.len() && bytes[i] == b'-';
                if neg {
                    i += 1;
                }
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == es {
                    return Err(bad("missing exponent"));
                }
                exp = compact[es..i]
                    .parse::<i64>()
                    .map_err(|_| bad("bad exponent"))?;
                if neg {
                    exp = -exp;
                }
            }
        } else if !had_coeff {
            return Err(bad("expected coefficient or t"));
        }
        terms.push((exp, sign * BigRational::new(numer, denom)));
    }
    Ok(terms)
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O(t^{})", self.precision);
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "t^{e}")?;
            } else {
                write!(f, "{mag}*t^{e}")?;
            }
        }
        write!(f, " + O(t^{})", self.precision)
    }
}
