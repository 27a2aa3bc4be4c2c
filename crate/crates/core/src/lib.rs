//! Exact arithmetic for one-dimensional numerical semigroup rings and their
//! ℤ₂-graded idealizations.
//!
//! The crate decides Gorenstein, almost-Gorenstein, and nearly-Gorenstein
//! properties of R = k[[t^S]] through the calculus of relative (fractional
//! monomial) ideals, classifies the graded rings A = R ×_φ 𝔪 for
//! φ(x, y) = αxy, and carries an exact structure-constant engine for Artinian
//! local algebras. All coefficients are exact rationals; value sets are exact
//! integer windows; there is no floating point anywhere.
//!
//! Module map:
//! - [`semigroup`]: numerical semigroups and their invariants.
//! - [`ideal`]: relative ideal calculus (sum, product, colon, canonical
//!   ideal, trace, lengths).
//! - [`mod@classify`]: Gorenstein / almost-Gorenstein / nearly-Gorenstein
//!   classification with five cross-checked criteria.
//! - [`series`]: truncated Laurent series over ℚ with exact inversion and
//!   membership tests in monomial modules.
//! - [`graded`]: the ℤ₂-graded idealization R ×_φ 𝔪 and its classification,
//!   plus the independent odd-shift semigroup model.
//! - [`artinian`]: Artinian local algebras by structure constants: socle,
//!   type, the Gorenstein dichotomy, and the dual-module action.
//! - [`linalg`]: fraction-free exact rational linear algebra.
//!
//! ```
//! use z2lab::{classify, Alpha, GradedIdealization, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::new(&[3, 4, 5])?;
//! let c = classify(&s)?;
//! assert!(c.almost_gorenstein && !c.gorenstein);
//! assert_eq!((c.e1, c.type_t), (2, 2));
//!
//! // A = R ×_φ 𝔪 with φ(x, y) = t⁻³xy is almost Gorenstein, and for the
//! // odd shift the criterion is confirmed by the model semigroup of A
//! let a = GradedIdealization::new(&s, Alpha::Monomial(-3))?;
//! assert!(a.is_almost_gorenstein()?);
//! assert_eq!(a.semigroup_model()?.generators(), &[3, 5, 7]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod artinian;
pub mod classify;
pub mod graded;
pub mod ideal;
pub mod linalg;
pub mod semigroup;
pub mod series;

pub use classify::{classify, Classification};
pub use graded::{Alpha, GradedIdealization};
pub use ideal::RelativeIdeal;
pub use semigroup::NumericalSemigroup;
pub use series::LaurentSeries;
