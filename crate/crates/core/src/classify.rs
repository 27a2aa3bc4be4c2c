//! Ring-theoretic classification of R = k[[t^S]].
//!
//! Almost-Gorensteinness is decided five independent ways and the answers are
//! required to agree; a disagreement is a hard internal error, never a
//! classification result. Gorenstein ⟺ symmetric ⟺ type 1 is likewise
//! computed along three routes.

use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("internal theorem violation: {0}")]
    TheoremViolation(String),
}

/// The five almost-Gorenstein criteria. All must agree for every semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgCriteria {
    /// e¹ ≤ type
    pub e1_le_type: bool,
    /// 𝔪K ⊆ R
    pub mk_in_r: bool,
    /// 𝔪S′ = 𝔪
    pub m_sprime_eq_m: bool,
    /// 𝔪K = 𝔪
    pub mk_eq_m: bool,
    /// tr(𝔪K) ⊇ 𝔪
    pub trace_mk_contains_m: bool,
}

impl AgCriteria {
    pub fn all_agree(&self) -> bool {
        let v = self.e1_le_type;
        self.mk_in_r == v
            && self.m_sprime_eq_m == v
            && self.mk_eq_m == v
            && self.trace_mk_contains_m == v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub type_t: usize,
    pub e1: usize,
    pub multiplicity: i64,
    pub embdim: usize,
    pub criteria: AgCriteria,
    /// tr(K)
    pub trace_canonical: RelativeIdeal,
    /// tr(𝔪K)
    pub trace_m_canonical: RelativeIdeal,
    /// S′ = `R[K]`
    pub canonical_closure: RelativeIdeal,
}

/// Serialized classification record; one CSV row in sweep mode mirrors the
/// scalar fields.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub multiplicity: i64,
    pub embdim: usize,
    #[serde(rename = "type")]
    pub type_t: usize,
    pub e1: usize,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub criteria: AgCriteria,
    pub trace_canonical: crate::ideal::IdealRecord,
    pub trace_m_canonical: crate::ideal::IdealRecord,
    pub canonical_closure: crate::ideal::IdealRecord,
}

/// e¹ = #(S′ ∖ S), the first Hilbert coefficient of a canonical ideal.
pub fn e1(s: &NumericalSemigroup) -> usize {
    let sp = RelativeIdeal::canonical_closure(s);
    sp.length_quotient(&RelativeIdeal::unit(s))
        .expect("S ⊆ S'")
}

/// Evaluates the five almost-Gorenstein criteria independently.
pub fn ag_criteria(s: &NumericalSemigroup) -> AgCriteria {
    let unit = RelativeIdeal::unit(s);
    let m = RelativeIdeal::maximal(s);
    let k = RelativeIdeal::canonical(s);
    let sp = RelativeIdeal::canonical_closure(s);
    let mk = m.product(&k).expect("same base");
    let msp = m.product(&sp).expect("same base");
    let tr_mk = mk.trace();
    AgCriteria {
        e1_le_type: e1(s) <= s.type_t(),
        mk_in_r: mk.is_subset(&unit),
        m_sprime_eq_m: msp == m,
        mk_eq_m: mk == m,
        trace_mk_contains_m: m.is_subset(&tr_mk),
    }
}

/// tr(K) ⊇ 𝔪.
pub fn is_nearly_gorenstein(s: &NumericalSemigroup) -> bool {
    let m = RelativeIdeal::maximal(s);
    let tr_k = RelativeIdeal::canonical(s).trace();
    m.is_subset(&tr_k)
}

/// The e¹-vs-type law: (almost Gorenstein ∧ not Gorenstein) ⟺ e¹ = type.
/// Holds for every semigroup; a mismatch is an internal error.
pub fn e1_type_law(s: &NumericalSemigroup) -> Result<bool, ClassifyError> {
    let c = classify(s)?;
    let lhs = c.almost_gorenstein && !c.gorenstein;
    let rhs = c.e1 == c.type_t;
    if lhs != rhs {
        return Err(ClassifyError::TheoremViolation(format!(
            "{s}: strict almost-Gorenstein is {lhs} but e1 = {} vs type = {}",
            c.e1, c.type_t
        )));
    }
    Ok(true)
}

pub fn classify(s: &NumericalSemigroup) -> Result<Classification, ClassifyError> {
    let criteria = ag_criteria(s);
    if !criteria.all_agree() {
        return Err(ClassifyError::TheoremViolation(format!(
            "{s}: almost-Gorenstein criteria disagree: {criteria:?}"
        )));
    }
    let almost_gorenstein = criteria.mk_eq_m;

    // Gorenstein three ways: symmetry, type 1, K = S.
    let sym = s.is_symmetric();
    let type1 = s.type_t() == 1;
    let k_is_s = RelativeIdeal::canonical(s) == RelativeIdeal::unit(s);
    if sym != type1 || sym != k_is_s {
        return Err(ClassifyError::TheoremViolation(format!(
            "{s}: symmetric = {sym}, type-1 = {type1}, K = S is {k_is_s}"
        )));
    }

    let nearly_gorenstein = is_nearly_gorenstein(s);
    if sym && !almost_gorenstein {
        return Err(ClassifyError::TheoremViolation(format!(
            "{s}: Gorenstein but not almost Gorenstein"
        )));
    }
    if almost_gorenstein && !nearly_gorenstein {
        return Err(ClassifyError::TheoremViolation(format!(
            "{s}: almost Gorenstein but not nearly Gorenstein"
        )));
    }

    let e1v = e1(s);
    let lhs = almost_gorenstein && !sym;
    if lhs != (e1v == s.type_t()) {
        return Err(ClassifyError::TheoremViolation(format!(
            "{s}: e1/type law broken: e1 = {e1v}, type = {}",
            s.type_t()
        )));
    }

    let m = RelativeIdeal::maximal(s);
    let k = RelativeIdeal::canonical(s);
    let mk = m.product(&k).expect("same base");
    Ok(Classification {
        gorenstein: sym,
        almost_gorenstein,
        nearly_gorenstein,
        type_t: s.type_t(),
        e1: e1v,
        multiplicity: s.multiplicity(),
        embdim: s.embdim(),
        criteria,
        trace_canonical: k.trace(),
        trace_m_canonical: mk.trace(),
        canonical_closure: RelativeIdeal::canonical_closure(s),
    })
}

impl Classification {
    pub fn record(&self, s: &NumericalSemigroup) -> ClassificationRecord {
        ClassificationRecord {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            multiplicity: self.multiplicity,
            embdim: self.embdim,
            type_t: self.type_t,
            e1: self.e1,
            gorenstein: self.gorenstein,
            almost_gorenstein: self.almost_gorenstein,
            nearly_gorenstein: self.nearly_gorenstein,
            criteria: self.criteria,
            trace_canonical: self.trace_canonical.record(),
            trace_m_canonical: self.trace_m_canonical.record(),
            canonical_closure: self.canonical_closure.record(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn e1_examples() {
        assert_eq!(e1(&sg(&[1])), 0);
        assert_eq!(e1(&sg(&[3, 4, 5])), 2);
        assert_eq!(e1(&sg(&[4, 7, 9])), 2);
        assert_eq!(e1(&sg(&[2, 3])), 0);
    }

    #[test]
    fn criteria_examples() {
        for gens in [&[3, 4, 5][..], &[1], &[4, 7, 9], &[2, 3]] {
            let c = ag_criteria(&sg(gens));
            assert!(c.all_agree());
            assert!(c.mk_eq_m, "{gens:?} should be almost Gorenstein");
        }
    }

    #[test]
    fn classification_of_3_4_5() {
        let c = classify(&sg(&[3, 4, 5])).unwrap();
        assert!(!c.gorenstein);
        assert!(c.almost_gorenstein);
        assert!(c.nearly_gorenstein);
        assert_eq!(c.type_t, 2);
        assert_eq!(c.e1, 2);
        assert_eq!(c.multiplicity, 3);
        assert_eq!(c.embdim, 3);
    }

    #[test]
    fn dvr_is_classified_fully() {
        let c = classify(&sg(&[1])).unwrap();
        assert!(c.gorenstein && c.almost_gorenstein && c.nearly_gorenstein);
        assert_eq!(c.type_t, 1);
        assert_eq!(c.e1, 0);
    }

    #[test]
    fn smallest_non_nearly_gorenstein() {
        // frozen by the exhaustive sweep oracle: <3,7,8> is the first member
        // of the enumerated family with tr(K) ⊉ m
        let s = sg(&[3, 7, 8]);
        assert!(!is_nearly_gorenstein(&s));
        let c = classify(&s).unwrap();
        assert!(!c.almost_gorenstein && !c.nearly_gorenstein);
        assert_eq!(c.type_t, 2);
        assert_eq!(c.e1, 4);
    }

    #[test]
    fn e1_type_law_examples() {
        assert!(e1_type_law(&sg(&[3, 4, 5])).unwrap());
        assert!(e1_type_law(&sg(&[2, 3])).unwrap());
        assert!(e1_type_law(&sg(&[3, 7, 8])).unwrap());
    }

    #[test]
    fn ag_implies_ng_via_trace_inclusion() {
        // tr(mK) ⊆ tr(m) ∩ tr(K), instance of the trace-of-product law
        for gens in [&[3, 4, 5][..], &[4, 7, 9], &[3, 7, 8]] {
            let s = sg(gens);
            let m = RelativeIdeal::maximal(&s);
            let k = RelativeIdeal::canonical(&s);
            let mk = m.product(&k).unwrap();
            let both = m.trace().intersect(&k.trace()).unwrap();
            assert!(mk.trace().is_subset(&both));
        }
    }
}
