//! The ℤ₂-graded idealization A = R ×_φ 𝔪 of a numerical semigroup ring,
//! with φ(x, y) = αxy for α ∈ 𝔪:𝔪².
//!
//! α may be zero (the classical idealization), a monomial t^v, or a general
//! truncated Laurent series. Classification goes through exact value-set
//! arithmetic: B = 𝔪:𝔪 decides almost-Gorensteinness, the canonical module
//! of A is (K:𝔪) × K, and for odd monomial shifts the whole ring A is
//! isomorphic to another numerical semigroup ring — the member set
//! 2S ∪ (2M + v) — which serves as an independent oracle for every
//! classification this module computes.

use crate::classify::{classify, ClassifyError};
use crate::ideal::{endomorphism_semigroup, RelativeIdeal};
use crate::semigroup::{NumericalSemigroup, SemigroupError, SemigroupRecord, Window};
use crate::series::{LaurentSeries, SeriesError, SeriesRecord};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("alpha is not admissible: {0}")]
    NotAdmissible(String),
    #[error("insufficient series precision: have {have}, need {need}")]
    InsufficientPrecision { have: i64, need: i64 },
    #[error("the base ring is a discrete valuation ring, outside this criterion")]
    DvrNotCovered,
    #[error("operation requires a monomial alpha")]
    NonMonomialAlpha,
    #[error("the shift must be odd for the semigroup model")]
    EvenShift,
    #[error("the base semigroup must be symmetric (Gorenstein) here")]
    NotGorensteinBase,
    #[error("the ideal is isomorphic to the ring itself, which is excluded")]
    IdealIsomorphicToRing,
    #[error("the ideal must be an integral ideal (contained in S)")]
    IdealNotIntegral,
    #[error("the second semigroup must strictly contain the first")]
    NotProperExtension,
    #[error("alpha has no known nonzero coefficient and cannot be inverted")]
    ZeroAlphaNotInvertible,
    #[error("internal theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

impl From<SeriesError> for GradedError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::ZeroSeries => GradedError::ZeroAlphaNotInvertible,
            SeriesError::InsufficientPrecision { have, need } => {
                GradedError::InsufficientPrecision { have, need }
            }
            other => GradedError::NotAdmissible(other.to_string()),
        }
    }
}

impl From<ClassifyError> for GradedError {
    fn from(e: ClassifyError) -> Self {
        let ClassifyError::TheoremViolation(msg) = e;
        GradedError::TheoremViolation(msg)
    }
}

/// The multiplier α defining φ(x, y) = αxy on 𝔪 × 𝔪.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alpha {
    Zero,
    Monomial(i64),
    Series(LaurentSeries),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlphaRecord {
    Zero,
    Monomial { v: i64 },
    Series(SeriesRecord),
}

impl Alpha {
    pub fn record(&self) -> AlphaRecord {
        match self {
            Alpha::Zero => AlphaRecord::Zero,
            Alpha::Monomial(v) => AlphaRecord::Monomial { v: *v },
            Alpha::Series(s) => AlphaRecord::Series(s.record()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdealization {
    base: NumericalSemigroup,
    alpha: Alpha,
    m: RelativeIdeal,
    b: RelativeIdeal,
    k: RelativeIdeal,
    m2: RelativeIdeal,
}

/// Report record for one idealization instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GradedReport {
    pub semigroup: SemigroupRecord,
    pub alpha: AlphaRecord,
    pub admissible: bool,
    pub ag: Option<bool>,
    pub gorenstein: Option<bool>,
    pub cm_type: Option<usize>,
    pub embdim: Option<usize>,
    pub regular: Option<bool>,
    pub oracle_used: bool,
    pub oracle_agrees: Option<bool>,
    pub model_generators: Option<Vec<i64>>,
}

impl GradedIdealization {
    /// Builds A = R ×_φ 𝔪 after checking α ∈ 𝔪:𝔪², which is exactly the
    /// condition for φ to land in R with φ(𝔪 × 𝔪) ⊆ 𝔪, making A local with
    /// maximal ideal 𝔪 × 𝔪.
    pub fn new(base: &NumericalSemigroup, alpha: Alpha) -> Result<Self, GradedError> {
        let m = RelativeIdeal::maximal(base);
        let b = m.colon(&m).expect("same base");
        let k = RelativeIdeal::canonical(base);
        let mm = m.product(&m).expect("same base");
        let m2 = m.colon(&mm).expect("same base");
        match &alpha {
            Alpha::Zero => {}
            Alpha::Monomial(v) => {
                if !m2.contains(*v) {
                    return Err(GradedError::NotAdmissible(format!(
                        "t^{v} is outside m:m^2 of {base}"
                    )));
                }
            }
            Alpha::Series(s) => {
                if !s.member_of(&m2)? {
                    return Err(GradedError::NotAdmissible(format!(
                        "the series support is not contained in m:m^2 of {base}"
                    )));
                }
            }
        }
        Ok(GradedIdealization {
            base: base.clone(),
            alpha,
            m,
            b,
            k,
            m2,
        })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn alpha(&self) -> &Alpha {
        &self.alpha
    }

    /// B = 𝔪:𝔪 as a relative ideal over S.
    pub fn b_ideal(&self) -> &RelativeIdeal {
        &self.b
    }

    /// 𝔪:𝔪² as a relative ideal over S.
    pub fn m2_ideal(&self) -> &RelativeIdeal {
        &self.m2
    }

    pub fn canonical_ideal(&self) -> &RelativeIdeal {
        &self.k
    }

    /// Almost-Gorensteinness of A: R must be almost Gorenstein and α or α⁻¹
    /// must lie in B. Zero α is the classical idealization, which is almost
    /// Gorenstein exactly when R is.
    pub fn is_almost_gorenstein(&self) -> Result<bool, GradedError> {
        if self.base.is_dvr() {
            return Err(GradedError::DvrNotCovered);
        }
        let ag = classify(&self.base)?.almost_gorenstein;
        match &self.alpha {
            Alpha::Zero => Ok(ag),
            Alpha::Monomial(v) => Ok(ag && (self.b.contains(*v) || self.b.contains(-*v))),
            Alpha::Series(s) => {
                if s.is_known_zero() {
                    return Ok(ag);
                }
                if !ag {
                    return Ok(false);
                }
                if s.member_of(&self.b)? {
                    return Ok(true);
                }
                let inv = s.invert(self.b.conductor())?;
                Ok(inv.member_of(&self.b)?)
            }
        }
    }

    /// Gorensteinness of A. Over a DVR base A is always Gorenstein; for
    /// nonzero α the criterion is that R is Gorenstein and α⁻¹ ∈ 𝔪, and for
    /// zero α it is 𝔪 ≅ K_R.
    pub fn is_gorenstein(&self) -> Result<bool, GradedError> {
        if self.base.is_dvr() {
            return Ok(true);
        }
        let sym = self.base.is_symmetric();
        match &self.alpha {
            Alpha::Zero => {
                let shift = self.m.shift(-self.base.multiplicity());
                Ok(self.k == shift)
            }
            Alpha::Monomial(v) => {
                let g = sym && self.m.contains(-*v);
                if g {
                    self.assert_multiplicity_two()?;
                    let mm = self.m.product(&self.m).expect("same base");
                    if mm != self.m.shift(-*v) {
                        return Err(GradedError::TheoremViolation(format!(
                            "{}: Gorenstein A but m^2 != t^{} m",
                            self.base, -*v
                        )));
                    }
                }
                Ok(g)
            }
            Alpha::Series(s) => {
                if s.is_known_zero() {
                    return Err(GradedError::ZeroAlphaNotInvertible);
                }
                if !sym {
                    return Ok(false);
                }
                let inv = s.invert(self.m.conductor())?;
                let g = inv.member_of(&self.m)?;
                if g {
                    self.assert_multiplicity_two()?;
                }
                Ok(g)
            }
        }
    }

    fn assert_multiplicity_two(&self) -> Result<(), GradedError> {
        if self.base.multiplicity() != 2 {
            return Err(GradedError::TheoremViolation(format!(
                "{}: Gorenstein A with multiplicity {} != 2",
                self.base,
                self.base.multiplicity()
            )));
        }
        Ok(())
    }

    /// Cohen-Macaulay type of A, from the canonical module (K:𝔪) × K:
    /// #((K−𝔪) ∖ (𝔪K ∪ (v+𝔪K))) + #(K ∖ 𝔪K).
    pub fn cm_type(&self) -> Result<usize, GradedError> {
        if self.base.is_dvr() {
            return Err(GradedError::DvrNotCovered);
        }
        let km = self.k.colon(&self.m).expect("same base");
        let mk = self.m.product(&self.k).expect("same base");
        let span = match &self.alpha {
            Alpha::Zero => mk.clone(),
            Alpha::Monomial(v) => mk.sum(&mk.shift(*v)).expect("same base"),
            Alpha::Series(_) => return Err(GradedError::NonMonomialAlpha),
        };
        let first = km.length_quotient(&span).expect("span ⊆ K−m");
        let second = self.k.length_quotient(&mk).expect("mK ⊆ K");
        Ok(first + second)
    }

    /// Embedding dimension of A: μ(𝔪/α𝔪²) + μ(𝔪).
    pub fn embdim(&self) -> Result<usize, GradedError> {
        let mm = self.m.product(&self.m).expect("same base");
        let quot = match &self.alpha {
            Alpha::Zero => mm,
            Alpha::Monomial(v) => mm.sum(&mm.shift(*v)).expect("same base"),
            Alpha::Series(_) => return Err(GradedError::NonMonomialAlpha),
        };
        let first = self.m.length_quotient(&quot).expect("quot ⊆ m");
        Ok(first + self.m.mu())
    }

    /// A is regular only when R is a DVR and φ(𝔪, 𝔪) = 𝔪, i.e. v = −1.
    pub fn is_regular(&self) -> Result<bool, GradedError> {
        let result = match &self.alpha {
            Alpha::Zero => false,
            Alpha::Monomial(v) => {
                let mm = self.m.product(&self.m).expect("same base");
                self.base.is_dvr() && mm.shift(*v) == self.m
            }
            Alpha::Series(_) => return Err(GradedError::NonMonomialAlpha),
        };
        if result != (self.embdim()? == 1) {
            return Err(GradedError::TheoremViolation(format!(
                "{}: regularity and embdim disagree",
                self.base
            )));
        }
        Ok(result)
    }

    /// The independent oracle: for odd admissible v, A is itself a numerical
    /// semigroup ring with member set 2S ∪ (2M + v) (degree-0 part doubled,
    /// the degree-1 part shifted by the square root of t^v).
    pub fn semigroup_model(&self) -> Result<NumericalSemigroup, GradedError> {
        let Alpha::Monomial(v) = self.alpha else {
            return Err(GradedError::NonMonomialAlpha);
        };
        if v.rem_euclid(2) == 0 {
            return Err(GradedError::EvenShift);
        }
        let cs = self.base.conductor().max(0);
        let cm = self.m.conductor();
        let bound = (2 * cs).max(2 * cm + v).max(1);
        let bits = (0..bound)
            .map(|z| {
                (z % 2 == 0 && self.base.contains(z / 2))
                    || ((z - v) % 2 == 0 && self.m.contains((z - v) / 2))
            })
            .collect();
        let w = Window::normalized(0, bits);
        Ok(NumericalSemigroup::from_member_window(&w)?)
    }

    /// The trace route to almost-Gorensteinness of A: R almost Gorenstein
    /// and tr_B(⟨1, α⟩_B) = B. Because B is local for every base here, the
    /// trace equality must coincide with (α ∈ B or α⁻¹ ∈ B), and a
    /// disagreement between the two is an internal error.
    pub fn b_trace_condition(&self) -> Result<bool, GradedError> {
        let Alpha::Monomial(v) = self.alpha else {
            return Err(GradedError::NonMonomialAlpha);
        };
        if self.base.is_dvr() {
            return Err(GradedError::DvrNotCovered);
        }
        let bsg = endomorphism_semigroup(&self.base);
        let unit_b = RelativeIdeal::unit(&bsg);
        let x = unit_b.sum(&unit_b.shift(v)).expect("same base");
        let cond = x.trace() == unit_b;
        let expected = self.b.contains(v) || self.b.contains(-v);
        if cond != expected {
            return Err(GradedError::TheoremViolation(format!(
                "{}: tr_B(<1, t^{v}>_B) = B is {cond} but membership gives {expected}",
                self.base
            )));
        }
        Ok(classify(&self.base)?.almost_gorenstein && cond)
    }

    /// The trace of 𝔫K_A inside A, in its monomial form: computes
    /// T = 𝔪·tr_B(⟨1, α⟩_B·K) and returns (T, T = 𝔪). The boolean must agree
    /// with almost-Gorensteinness of A.
    pub fn canonical_trace(&self) -> Result<(RelativeIdeal, bool), GradedError> {
        let Alpha::Monomial(v) = self.alpha else {
            return Err(GradedError::NonMonomialAlpha);
        };
        if self.base.is_dvr() {
            return Err(GradedError::DvrNotCovered);
        }
        let bsg = endomorphism_semigroup(&self.base);
        let xw = self.b.window().union(&self.b.window().shift(v));
        let ww = xw.minkowski(self.k.window());
        let w = RelativeIdeal::from_window(&bsg, ww);
        let trw = w.trace();
        let tw = self.m.window().minkowski(trw.window());
        let t = RelativeIdeal::from_window(&self.base, tw);
        let flag = t == self.m;
        let ag = self.is_almost_gorenstein()?;
        if flag != ag {
            return Err(GradedError::TheoremViolation(format!(
                "{}: m tr_B(<1, t^{v}>_B K) = m is {flag} but almost-Gorenstein is {ag}",
                self.base
            )));
        }
        Ok((t, flag))
    }

    /// Full report, with the odd-shift oracle cross-check when available.
    pub fn report(&self) -> Result<GradedReport, GradedError> {
        let ag = match self.is_almost_gorenstein() {
            Ok(v) => Some(v),
            Err(GradedError::DvrNotCovered) => None,
            Err(e) => return Err(e),
        };
        let gorenstein = match self.is_gorenstein() {
            Ok(v) => Some(v),
            Err(GradedError::ZeroAlphaNotInvertible) => None,
            Err(e) => return Err(e),
        };
        let cm_type = match self.cm_type() {
            Ok(v) => Some(v),
            Err(GradedError::DvrNotCovered | GradedError::NonMonomialAlpha) => None,
            Err(e) => return Err(e),
        };
        let embdim = match self.embdim() {
            Ok(v) => Some(v),
            Err(GradedError::NonMonomialAlpha) => None,
            Err(e) => return Err(e),
        };
        let regular = match self.is_regular() {
            Ok(v) => Some(v),
            Err(GradedError::NonMonomialAlpha) => None,
            Err(e) => return Err(e),
        };

        let oracle_used = matches!(self.alpha, Alpha::Monomial(v) if v.rem_euclid(2) == 1);
        let mut oracle_agrees = None;
        let mut model_generators = None;
        if oracle_used {
            let model = self.semigroup_model()?;
            let mc = classify(&model)?;
            let mut agree = true;
            if let Some(a) = ag {
                agree &= a == mc.almost_gorenstein;
            }
            if let Some(g) = gorenstein {
                agree &= g == mc.gorenstein;
            }
            if let Some(t) = cm_type {
                agree &= t == mc.type_t;
            }
            if let Some(e) = embdim {
                agree &= e == mc.embdim;
            }
            if let Some(r) = regular {
                agree &= r == model.is_dvr();
            }
            oracle_agrees = Some(agree);
            model_generators = Some(model.generators().to_vec());
        }

        Ok(GradedReport {
            semigroup: self.base.record(),
            alpha: self.alpha.record(),
            admissible: true,
            ag,
            gorenstein,
            cm_type,
            embdim,
            regular,
            oracle_used,
            oracle_agrees,
            model_generators,
        })
    }
}

/// Gorensteinness of R ×_φ I for a monomial ideal I of a Gorenstein base and
/// φ(x, y) = t^v·xy: holds exactly when t^v·I = S:I as value sets.
pub fn gorenstein_over_ideal(
    s: &NumericalSemigroup,
    e: &RelativeIdeal,
    v: i64,
) -> Result<bool, GradedError> {
    if !s.is_symmetric() {
        return Err(GradedError::NotGorensteinBase);
    }
    if e.base() != s {
        return Err(SemigroupError::BaseMismatch(e.base().to_string(), s.to_string()).into());
    }
    let unit = RelativeIdeal::unit(s);
    if e.min() < 0 || !e.is_subset(&unit) {
        return Err(GradedError::IdealNotIntegral);
    }
    if *e == unit.shift(e.min()) {
        return Err(GradedError::IdealIsomorphicToRing);
    }
    let dual = unit.colon(e).expect("same base");
    Ok(e.shift(v) == dual)
}

/// For symmetric S ⊊ T with T symmetric, I = S:T is a good ideal: it admits
/// a ∈ I with I² = aI and I = a + (S − I). Returns (I, a); the theorem
/// guarantees a reduction exists, so failure to find one is an internal
/// error.
pub fn good_ideal(
    s: &NumericalSemigroup,
    t: &NumericalSemigroup,
) -> Result<(RelativeIdeal, i64), GradedError> {
    if !s.is_symmetric() || !t.is_symmetric() {
        return Err(GradedError::NotGorensteinBase);
    }
    if s == t || !s.window().is_subset(t.window()) {
        return Err(GradedError::NotProperExtension);
    }
    let t_ideal = RelativeIdeal::from_window(s, t.window().clone());
    let unit = RelativeIdeal::unit(s);
    let e = unit.colon(&t_ideal).expect("same base");
    let ee = e.product(&e).expect("same base");
    let se = unit.colon(&e).expect("same base");
    for a in e.min_gens() {
        if ee == e.shift(a) && e == se.shift(a) {
            return Ok((e, a));
        }
    }
    Err(GradedError::TheoremViolation(format!(
        "{s} ⊂ {t}: no reduction found for the good ideal"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    fn mono(gens: &[i64], v: i64) -> GradedIdealization {
        GradedIdealization::new(&sg(gens), Alpha::Monomial(v)).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(GradedIdealization::new(&sg(&[3, 4, 5]), Alpha::Monomial(-3)).is_ok());
        assert!(matches!(
            GradedIdealization::new(&sg(&[3, 4, 5]), Alpha::Monomial(-4)),
            Err(GradedError::NotAdmissible(_))
        ));
        assert!(GradedIdealization::new(&sg(&[3, 4, 5]), Alpha::Zero).is_ok());
        let alpha = LaurentSeries::parse("1+t^3", 40).unwrap();
        assert!(GradedIdealization::new(&sg(&[4, 7, 9]), Alpha::Series(alpha)).is_ok());
        let alpha = LaurentSeries::parse("t^2", 40).unwrap();
        assert!(matches!(
            GradedIdealization::new(&sg(&[4, 7, 9]), Alpha::Series(alpha)),
            Err(GradedError::NotAdmissible(_))
        ));
    }

    #[test]
    fn almost_gorenstein_3_4_5_for_every_admissible_monomial() {
        for v in -3..=20 {
            let a = mono(&[3, 4, 5], v);
            assert!(a.is_almost_gorenstein().unwrap(), "v = {v}");
        }
    }

    #[test]
    fn almost_gorenstein_4_7_9_splits_on_b() {
        for v in [1, 3, 6] {
            let a = mono(&[4, 7, 9], v);
            assert!(!a.is_almost_gorenstein().unwrap(), "v = {v}");
        }
        for v in [4, 5, 7, 8, 9, 10, 11] {
            let a = mono(&[4, 7, 9], v);
            assert!(a.is_almost_gorenstein().unwrap(), "v = {v}");
        }
    }

    #[test]
    fn almost_gorenstein_series() {
        let s = sg(&[4, 7, 9]);
        let a = GradedIdealization::new(
            &s,
            Alpha::Series(LaurentSeries::parse("1+t^3", 40).unwrap()),
        )
        .unwrap();
        assert!(!a.is_almost_gorenstein().unwrap());
        let a = GradedIdealization::new(
            &s,
            Alpha::Series(LaurentSeries::parse("1+t^4", 40).unwrap()),
        )
        .unwrap();
        assert!(a.is_almost_gorenstein().unwrap());
    }

    #[test]
    fn dvr_base_is_not_covered_by_the_ag_criterion() {
        let a = mono(&[1], -1);
        assert_eq!(a.is_almost_gorenstein(), Err(GradedError::DvrNotCovered));
        assert_eq!(a.is_gorenstein(), Ok(true));
    }

    #[test]
    fn zero_alpha_matches_base_classification() {
        for gens in [&[3, 4, 5][..], &[2, 3], &[4, 7, 9], &[3, 7, 8]] {
            let s = sg(gens);
            let a = GradedIdealization::new(&s, Alpha::Zero).unwrap();
            let ag = classify(&s).unwrap().almost_gorenstein;
            assert_eq!(a.is_almost_gorenstein().unwrap(), ag, "{s}");
        }
    }

    #[test]
    fn gorenstein_pinned_by_oracle_for_2_3() {
        // model(<2,3>, -1) = <3,4,5> and model(<2,3>, 1) = <4,5,6,7>, neither
        // symmetric, so both idealizations are non-Gorenstein
        let a = mono(&[2, 3], -1);
        assert_eq!(a.is_gorenstein(), Ok(false));
        assert_eq!(
            a.semigroup_model().unwrap().generators(),
            &[3, 4, 5]
        );
        let a = mono(&[2, 3], 1);
        assert_eq!(a.is_gorenstein(), Ok(false));
        // the Gorenstein instance over <2,3> is v = -2
        let a = mono(&[2, 3], -2);
        assert_eq!(a.is_gorenstein(), Ok(true));
        assert_eq!(a.cm_type().unwrap(), 1);
    }

    #[test]
    fn model_examples() {
        let a = mono(&[1], -1);
        assert!(a.semigroup_model().unwrap().is_dvr());
        assert!(a.is_regular().unwrap());
        let a = mono(&[3, 4, 5], -3);
        let model = a.semigroup_model().unwrap();
        assert_eq!(model.generators(), &[3, 5, 7]);
        assert_eq!(model.frobenius(), 4);
        let a = mono(&[3, 4, 5], -2);
        assert_eq!(a.semigroup_model(), Err(GradedError::EvenShift));
    }

    #[test]
    fn oracle_agreement_on_examples() {
        for (gens, v) in [
            (&[2, 3][..], -1),
            (&[2, 3], 1),
            (&[3, 4, 5], -3),
            (&[3, 4, 5], -1),
            (&[3, 4, 5], 5),
            (&[4, 7, 9], 1),
            (&[4, 7, 9], 3),
            (&[4, 7, 9], 5),
            (&[4, 7, 9], 7),
        ] {
            let a = mono(gens, v);
            let model = a.semigroup_model().unwrap();
            let mc = classify(&model).unwrap();
            assert_eq!(
                a.is_almost_gorenstein().unwrap(),
                mc.almost_gorenstein,
                "AG at {gens:?}, v = {v}"
            );
            assert_eq!(
                a.is_gorenstein().unwrap(),
                mc.gorenstein,
                "Gor at {gens:?}, v = {v}"
            );
            assert_eq!(a.cm_type().unwrap(), mc.type_t, "type at {gens:?}, v = {v}");
            assert_eq!(a.embdim().unwrap(), mc.embdim, "embdim at {gens:?}, v = {v}");
        }
    }

    #[test]
    fn trace_conditions_cohere() {
        for (gens, v) in [
            (&[3, 4, 5][..], -3),
            (&[3, 4, 5], -1),
            (&[3, 4, 5], 0),
            (&[4, 7, 9], 1),
            (&[4, 7, 9], 4),
            (&[2, 3], -1),
            (&[2, 3], -2),
        ] {
            let a = mono(gens, v);
            let ag = a.is_almost_gorenstein().unwrap();
            assert_eq!(a.b_trace_condition().unwrap(), ag, "{gens:?} v={v}");
            let (t, flag) = a.canonical_trace().unwrap();
            assert_eq!(flag, ag, "{gens:?} v={v}");
            if !flag {
                let m = RelativeIdeal::maximal(&sg(gens));
                assert!(t.is_subset(&m) && t != m);
            }
        }
        // the one non-AG instance above, pinned exactly:
        // m·tr_B(<1,t>_B K) = {8,9} ∪ [11,∞) over <4,7,9>
        let (t, flag) = mono(&[4, 7, 9], 1).canonical_trace().unwrap();
        assert!(!flag);
        assert_eq!(t.members_below(11), vec![8, 9]);
        assert_eq!(t.conductor(), 11);
    }

    #[test]
    fn embdim_examples() {
        assert_eq!(mono(&[1], -1).embdim().unwrap(), 1);
        assert_eq!(mono(&[1], 0).embdim().unwrap(), 2);
        let z = GradedIdealization::new(&sg(&[3, 4, 5]), Alpha::Zero).unwrap();
        assert_eq!(z.embdim().unwrap(), 6);
    }

    #[test]
    fn regularity_examples() {
        assert!(mono(&[1], -1).is_regular().unwrap());
        assert!(!mono(&[1], 0).is_regular().unwrap());
        assert!(!mono(&[3, 4, 5], -3).is_regular().unwrap());
        let z = GradedIdealization::new(&sg(&[1]), Alpha::Zero).unwrap();
        assert!(!z.is_regular().unwrap());
    }

    #[test]
    fn good_ideal_examples() {
        let s = sg(&[2, 3]);
        let (e, a) = good_ideal(&s, &sg(&[1])).unwrap();
        assert_eq!(a, 2);
        assert_eq!(e.min(), 2);
        assert_eq!(e.conductor(), 2); // [2, ∞)
        assert!(gorenstein_over_ideal(&s, &e, -a).unwrap());
        assert!(!gorenstein_over_ideal(&s, &e, -a + 1).unwrap());

        assert_eq!(good_ideal(&s, &s), Err(GradedError::NotProperExtension));
        assert_eq!(
            good_ideal(&sg(&[3, 4, 5]), &sg(&[1])),
            Err(GradedError::NotGorensteinBase)
        );
    }

    #[test]
    fn gorenstein_over_ideal_preconditions() {
        let s = sg(&[2, 3]);
        let unit = RelativeIdeal::unit(&s);
        assert_eq!(
            gorenstein_over_ideal(&s, &unit, 0),
            Err(GradedError::IdealIsomorphicToRing)
        );
        let shifted = unit.shift(2);
        assert_eq!(
            gorenstein_over_ideal(&s, &shifted, 0),
            Err(GradedError::IdealIsomorphicToRing)
        );
        let fractional = RelativeIdeal::from_gens(&s, &[-1, 0]).unwrap();
        assert_eq!(
            gorenstein_over_ideal(&s, &fractional, 0),
            Err(GradedError::IdealNotIntegral)
        );
    }

    #[test]
    fn precision_and_shape_preconditions() {
        // a series too short to decide admissibility is an error, not a guess
        let short = LaurentSeries::parse("1", 2).unwrap();
        assert!(matches!(
            GradedIdealization::new(&sg(&[4, 7, 9]), Alpha::Series(short)),
            Err(GradedError::InsufficientPrecision { .. })
        ));
        // monomial-only operations reject series and zero alphas
        let a = GradedIdealization::new(
            &sg(&[4, 7, 9]),
            Alpha::Series(LaurentSeries::parse("1+t^4", 40).unwrap()),
        )
        .unwrap();
        assert_eq!(a.cm_type(), Err(GradedError::NonMonomialAlpha));
        assert_eq!(a.embdim(), Err(GradedError::NonMonomialAlpha));
        assert_eq!(a.semigroup_model(), Err(GradedError::NonMonomialAlpha));
        // the type formula needs a non-DVR base
        let dvr = mono(&[1], -1);
        assert_eq!(dvr.cm_type(), Err(GradedError::DvrNotCovered));
        assert_eq!(dvr.b_trace_condition(), Err(GradedError::DvrNotCovered));
        // a series that is zero as far as known cannot be inverted
        let z = GradedIdealization::new(&sg(&[3, 4, 5]), Alpha::Series(LaurentSeries::zero(30)))
            .unwrap();
        assert_eq!(z.is_gorenstein(), Err(GradedError::ZeroAlphaNotInvertible));
        assert_eq!(z.is_almost_gorenstein(), Ok(true)); // ag(S) branch
    }

    #[test]
    fn zero_alpha_gorenstein_only_over_dvr() {
        // for a non-DVR base, F + e lies in m but F - F = 0 lies in S, so
        // m - e and K always differ at F; the classical idealization is
        // Gorenstein exactly over the DVR
        let dvr = GradedIdealization::new(&sg(&[1]), Alpha::Zero).unwrap();
        assert_eq!(dvr.is_gorenstein(), Ok(true));
        for s in crate::semigroup::enumerate_family(12, 3) {
            let a = GradedIdealization::new(&s, Alpha::Zero).unwrap();
            assert_eq!(a.is_gorenstein(), Ok(false), "{s}");
        }
    }

    #[test]
    fn type_one_iff_gorenstein_all_shifts() {
        // includes even shifts, where no semigroup model exists
        for s in crate::semigroup::enumerate_family(9, 3) {
            let m = RelativeIdeal::maximal(&s);
            let m2 = m.colon(&m.product(&m).unwrap()).unwrap();
            for v in -6..=10 {
                if !m2.contains(v) {
                    continue;
                }
                let a = GradedIdealization::new(&s, Alpha::Monomial(v)).unwrap();
                assert_eq!(
                    a.cm_type().unwrap() == 1,
                    a.is_gorenstein().unwrap(),
                    "{s} v = {v}"
                );
            }
        }
    }

    #[test]
    fn report_includes_oracle() {
        let a = mono(&[3, 4, 5], -3);
        let r = a.report().unwrap();
        assert!(r.oracle_used);
        assert_eq!(r.oracle_agrees, Some(true));
        assert_eq!(r.model_generators.as_deref(), Some(&[3, 5, 7][..]));
        assert_eq!(r.ag, Some(true));
        assert_eq!(r.gorenstein, Some(false));

        let z = GradedIdealization::new(&sg(&[3, 4, 5]), Alpha::Zero).unwrap();
        let r = z.report().unwrap();
        assert!(!r.oracle_used);
        assert_eq!(r.embdim, Some(6));
    }
}
