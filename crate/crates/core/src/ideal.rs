//! Relative (fractional monomial) ideals of a numerical semigroup ring.
//!
//! A `RelativeIdeal` is an integer set E with E + S ⊆ E, bounded below and
//! upward-cofinite. It models a monomial fractional ideal of k[[t^S]]; ideal
//! sum is set union, ideal product is Minkowski sum, and colon ideals are
//! value-set colons. Every operation keeps the window exact, so equality of
//! ideals is structural equality.

use crate::semigroup::{NumericalSemigroup, SemigroupError, Window};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    base: NumericalSemigroup,
    set: Window,
}

/// Serialized form: `{base, members_below_conductor, conductor}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealRecord {
    pub base: Vec<i64>,
    pub members_below_conductor: Vec<i64>,
    pub conductor: i64,
}

impl RelativeIdeal {
    /// E = ∪ᵢ (gᵢ + S).
    pub fn from_gens(base: &NumericalSemigroup, gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap() + base.conductor().max(0);
        let bits = (lo..hi)
            .map(|z| gens.iter().any(|&g| base.contains(z - g)))
            .collect();
        Ok(RelativeIdeal {
            base: base.clone(),
            set: Window::normalized(lo, bits),
        })
    }

    /// S as an ideal over itself.
    pub fn unit(base: &NumericalSemigroup) -> Self {
        RelativeIdeal {
            base: base.clone(),
            set: base.window().clone(),
        }
    }

    /// The maximal ideal M = S ∖ {0}.
    pub fn maximal(base: &NumericalSemigroup) -> Self {
        RelativeIdeal {
            base: base.clone(),
            set: base.window().nonzero(),
        }
    }

    /// The canonical ideal K = {x : F − x ∉ S}, normalized so min(K) = 0.
    pub fn canonical(base: &NumericalSemigroup) -> Self {
        let f = base.frobenius();
        let c = f + 1;
        let bits = (0..c).map(|x| !base.contains(f - x)).collect();
        RelativeIdeal {
            base: base.clone(),
            set: Window::normalized(0, bits),
        }
    }

    /// Wraps an explicit window after checking it is an S-module.
    pub(crate) fn from_window(base: &NumericalSemigroup, set: Window) -> Self {
        debug_assert!(
            base.generators()
                .iter()
                .all(|&g| set.shift(g).is_subset(&set)),
            "window is not closed under the semigroup action"
        );
        RelativeIdeal {
            base: base.clone(),
            set,
        }
    }

    pub(crate) fn window(&self) -> &Window {
        &self.set
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn contains(&self, z: i64) -> bool {
        self.set.contains(z)
    }

    pub fn min(&self) -> i64 {
        self.set.min()
    }

    /// Least c with [c, ∞) ⊆ E.
    pub fn conductor(&self) -> i64 {
        self.set.conductor
    }

    pub fn members_below(&self, hi: i64) -> Vec<i64> {
        self.set.members_below(hi)
    }

    pub fn shift(&self, d: i64) -> Self {
        RelativeIdeal {
            base: self.base.clone(),
            set: self.set.shift(d),
        }
    }

    pub fn is_subset(&self, other: &RelativeIdeal) -> bool {
        self.set.is_subset(&other.set)
    }

    fn check_base(&self, other: &RelativeIdeal) -> Result<(), SemigroupError> {
        if self.base != other.base {
            return Err(SemigroupError::BaseMismatch(
                self.base.to_string(),
                other.base.to_string(),
            ));
        }
        Ok(())
    }

    /// Ideal sum E + F in the ring-theoretic sense: set union.
    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self, SemigroupError> {
        self.check_base(other)?;
        Ok(RelativeIdeal {
            base: self.base.clone(),
            set: self.set.union(&other.set),
        })
    }

    /// Ideal product E·F: Minkowski sum of value sets.
    pub fn product(&self, other: &RelativeIdeal) -> Result<Self, SemigroupError> {
        self.check_base(other)?;
        Ok(RelativeIdeal {
            base: self.base.clone(),
            set: self.set.minkowski(&other.set),
        })
    }

    pub fn intersect(&self, other: &RelativeIdeal) -> Result<Self, SemigroupError> {
        self.check_base(other)?;
        Ok(RelativeIdeal {
            base: self.base.clone(),
            set: self.set.intersect(&other.set),
        })
    }

    /// Colon ideal E − F = {z : z + F ⊆ E}, computed against the minimal
    /// generators of F (sound because E + S ⊆ E).
    pub fn colon(&self, other: &RelativeIdeal) -> Result<Self, SemigroupError> {
        self.check_base(other)?;
        let gens = other.min_gens();
        Ok(RelativeIdeal {
            base: self.base.clone(),
            set: self.set.colon_by_gens(&gens),
        })
    }

    /// Minimal generators E ∖ (E + M).
    pub fn min_gens(&self) -> Vec<i64> {
        let m = self.base.window().nonzero();
        let em = self.set.minkowski(&m);
        self.set
            .members_below(em.conductor)
            .into_iter()
            .filter(|&z| !em.contains(z))
            .collect()
    }

    /// μ(E), the number of minimal generators.
    pub fn mu(&self) -> usize {
        self.min_gens().len()
    }

    /// The trace ideal tr(E) = E + (S − E) ⊆ S.
    pub fn trace(&self) -> Self {
        let unit = RelativeIdeal::unit(&self.base);
        let q = unit.colon(self).expect("same base");
        self.product(&q).expect("same base")
    }

    /// ℓ(E/F) = #(E ∖ F); errors unless F ⊆ E.
    pub fn length_quotient(&self, sub: &RelativeIdeal) -> Result<usize, SemigroupError> {
        self.check_base(sub)?;
        if !sub.set.is_subset(&self.set) {
            return Err(SemigroupError::NotContained);
        }
        Ok(self.set.count_diff(&sub.set))
    }

    /// Type of E: ℓ((E − M)/E) = #((E − M) ∖ E).
    pub fn type_of_ideal(&self) -> usize {
        let em = self
            .colon(&RelativeIdeal::maximal(&self.base))
            .expect("same base");
        em.length_quotient(self).expect("E ⊆ E − M")
    }

    /// The semigroup ring S′ = `R[K]`: stabilization of K, K+K, K+K+K, …
    /// starting from S, so S′ + S′ = S′ and K ⊆ S′ ⊆ [0, ∞).
    pub fn canonical_closure(base: &NumericalSemigroup) -> Self {
        let k = RelativeIdeal::canonical(base);
        let mut t = RelativeIdeal::unit(base);
        loop {
            let next = t.product(&k).expect("same base").sum(&t).expect("same base");
            if next == t {
                return t;
            }
            t = next;
        }
    }

    pub fn record(&self) -> IdealRecord {
        IdealRecord {
            base: self.base.generators().to_vec(),
            members_below_conductor: self.set.members_below(self.set.conductor),
            conductor: self.set.conductor,
        }
    }
}

/// B = 𝔪 : 𝔪 as a numerical semigroup in its own right (it contains 0, is
/// closed under addition, and is cofinite).
pub fn endomorphism_semigroup(base: &NumericalSemigroup) -> NumericalSemigroup {
    let m = RelativeIdeal::maximal(base);
    let b = m.colon(&m).expect("same base");
    NumericalSemigroup::from_member_window(b.window()).expect("B is a semigroup")
}

/// Parses "{g1,g2,...}" (braces optional) into ideal generators.
pub fn parse_ideal_gens(src: &str) -> Result<Vec<i64>, SemigroupError> {
    let src = src.trim().trim_start_matches('{').trim_end_matches('}');
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

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    fn members(e: &RelativeIdeal, hi: i64) -> Vec<i64> {
        (e.min()..hi).filter(|&z| e.contains(z)).collect()
    }

    #[test]
    fn principal_unit_ideal() {
        let s = sg(&[3, 4, 5]);
        let e = RelativeIdeal::from_gens(&s, &[0]).unwrap();
        assert_eq!(e, RelativeIdeal::unit(&s));
    }

    #[test]
    fn ideal_from_negative_gens() {
        let s = sg(&[3, 4, 5]);
        // the module t^-3, t^-2, t^-1 over R has value set [-3, ∞)
        let e = RelativeIdeal::from_gens(&s, &[-3, -2, -1]).unwrap();
        assert_eq!(e.min(), -3);
        assert_eq!(e.conductor(), -3);
        assert!(e.contains(-3) && e.contains(0) && e.contains(100));
    }

    #[test]
    fn m2_value_set_for_4_7_9() {
        let s = sg(&[4, 7, 9]);
        let e = RelativeIdeal::from_gens(&s, &[0, 1, 3, 6]).unwrap();
        let m = RelativeIdeal::maximal(&s);
        let m2 = m.colon(&m.product(&m).unwrap()).unwrap();
        assert_eq!(e, m2);
        assert_eq!(members(&m2, 5), vec![0, 1, 3, 4]);
        assert_eq!(m2.conductor(), 3);
    }

    #[test]
    fn product_and_sum_laws() {
        let s = sg(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&s);
        let mm = m.product(&m).unwrap();
        assert_eq!(mm.min(), 6);
        assert_eq!(mm.conductor(), 6); // {6,7,8,...}
        let e = RelativeIdeal::from_gens(&s, &[-1, 2]).unwrap();
        assert_eq!(e.sum(&e).unwrap(), e);
        let f = RelativeIdeal::from_gens(&s, &[1]).unwrap();
        assert_eq!(
            e.product(&f).unwrap(),
            f.product(&e).unwrap()
        );
    }

    #[test]
    fn empty_generators_are_rejected() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(
            RelativeIdeal::from_gens(&s, &[]),
            Err(SemigroupError::EmptyGenerators)
        );
        assert_eq!(parse_ideal_gens("{}"), Err(SemigroupError::EmptyGenerators));
        assert_eq!(parse_ideal_gens("{0, 1,3 ,6}"), Ok(vec![0, 1, 3, 6]));
    }

    #[test]
    fn base_mismatch_is_rejected() {
        let a = RelativeIdeal::unit(&sg(&[3, 4, 5]));
        let b = RelativeIdeal::unit(&sg(&[2, 3]));
        assert!(matches!(
            a.sum(&b),
            Err(SemigroupError::BaseMismatch(_, _))
        ));
    }

    #[test]
    fn colon_examples() {
        let s = sg(&[4, 7, 9]);
        let m = RelativeIdeal::maximal(&s);
        let b = m.colon(&m).unwrap();
        // B = m:m is the semigroup <4,5,7>
        assert_eq!(members(&b, 8), vec![0, 4, 5, 7]);
        assert_eq!(b.conductor(), 7);
        assert_eq!(endomorphism_semigroup(&s).generators(), &[4, 5, 7]);

        let s = sg(&[3, 4, 5]);
        let u = RelativeIdeal::unit(&s);
        assert_eq!(u.colon(&u).unwrap(), u);
        let m = RelativeIdeal::maximal(&s);
        let m2 = m.colon(&m.product(&m).unwrap()).unwrap();
        assert_eq!(m2.min(), -3);
        assert_eq!(m2.conductor(), -3); // all integers ≥ -3
    }

    #[test]
    fn canonical_ideal_examples() {
        let dvr = sg(&[1]);
        assert_eq!(
            RelativeIdeal::canonical(&dvr),
            RelativeIdeal::unit(&dvr)
        );

        let s = sg(&[3, 4, 5]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(members(&k, 4), vec![0, 1, 3]);
        assert_eq!(k.conductor(), 3);
        assert_eq!(k.min(), 0);
        assert!(RelativeIdeal::unit(&s).is_subset(&k));

        let s = sg(&[4, 7, 9]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(members(&k, 11), vec![0, 4, 5, 7, 8, 9]);
        assert_eq!(k.conductor(), 11);

        // K = S exactly when S is symmetric
        let sym = sg(&[2, 3]);
        assert_eq!(
            RelativeIdeal::canonical(&sym),
            RelativeIdeal::unit(&sym)
        );
        assert_eq!(
            RelativeIdeal::unit(&sym)
                .intersect(&RelativeIdeal::canonical(&sym))
                .unwrap(),
            RelativeIdeal::unit(&sym)
        );
    }

    #[test]
    fn trace_examples() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(
            RelativeIdeal::unit(&s).trace(),
            RelativeIdeal::unit(&s)
        );
        // tr(m) = m whenever S is not the naturals
        let m = RelativeIdeal::maximal(&s);
        assert_eq!(m.trace(), m);
        let dvr = sg(&[1]);
        assert_eq!(
            RelativeIdeal::maximal(&dvr).trace(),
            RelativeIdeal::unit(&dvr)
        );
        // trace is translation invariant
        let e = RelativeIdeal::from_gens(&s, &[2, 4]).unwrap();
        assert_eq!(e.trace(), e.shift(-5).trace());
    }

    #[test]
    fn min_gens_and_mu() {
        let s = sg(&[4, 7, 9]);
        let m = RelativeIdeal::maximal(&s);
        assert_eq!(m.min_gens(), vec![4, 7, 9]);
        assert_eq!(m.mu(), 3);
        assert_eq!(RelativeIdeal::unit(&s).mu(), 1);
        let s = sg(&[3, 4, 5]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k.mu(), 2); // equals the type
        // generators regenerate the ideal
        let e = RelativeIdeal::from_gens(&s, &[-2, 0, 5]).unwrap();
        let regen = RelativeIdeal::from_gens(&s, &e.min_gens()).unwrap();
        assert_eq!(e, regen);
    }

    #[test]
    fn lengths() {
        let s = sg(&[3, 4, 5]);
        let u = RelativeIdeal::unit(&s);
        let m = RelativeIdeal::maximal(&s);
        assert_eq!(u.length_quotient(&m).unwrap(), 1);
        let k = RelativeIdeal::canonical(&s);
        // frozen by the brute-force oracle: K ∖ S = {1}
        assert_eq!(k.length_quotient(&u).unwrap(), 1);
        assert!(matches!(
            m.length_quotient(&u),
            Err(SemigroupError::NotContained)
        ));
    }

    #[test]
    fn type_of_ideal_examples() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(RelativeIdeal::unit(&s).type_of_ideal(), 2);
        assert_eq!(RelativeIdeal::maximal(&s).type_of_ideal(), 3);
        let dvr = sg(&[1]);
        assert_eq!(RelativeIdeal::unit(&dvr).type_of_ideal(), 1);
    }

    #[test]
    fn canonical_closure_examples() {
        let sym = sg(&[2, 3]);
        assert_eq!(
            RelativeIdeal::canonical_closure(&sym),
            RelativeIdeal::unit(&sym)
        );
        let s = sg(&[3, 4, 5]);
        let sp = RelativeIdeal::canonical_closure(&s);
        assert_eq!(sp.min(), 0);
        assert_eq!(sp.conductor(), 0); // S' = the naturals
        let s = sg(&[4, 7, 9]);
        let sp = RelativeIdeal::canonical_closure(&s);
        assert_eq!(members(&sp, 8), vec![0, 4, 5, 7]);
        assert_eq!(sp.conductor(), 7); // S' = B = {0,4,5} ∪ [7,∞)
        assert_eq!(sp.product(&sp).unwrap(), sp);
        assert_eq!(sp.length_quotient(&RelativeIdeal::unit(&s)).unwrap(), 2);
    }
}
