//! The real dilogarithm `Li2(x) = -∫_0^x ln(1-t)/t dt` on `x <= 1`.
//!
//! Arguments are reduced onto `|x| <= 1/2`, where the power series converges
//! at least as fast as `2^-k`, using one of three classical identities:
//!
//! | range            | identity   |
//! |------------------|------------|
//! | `(1/2, 1)`       | reflection `Li2(x) + Li2(1-x) = π²/6 - ln x ln(1-x)` |
//! | `[-1, -1/2)`     | Landen `Li2(x) + Li2(x/(x-1)) = -½ ln²(1-x)` |
//! | `(-∞, -1)`       | inversion `Li2(x) + Li2(1/x) = -π²/6 - ½ ln²(-x)` |
//!
//! Inversion lands in `(-1, 0)`, so at most one further reduction follows.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `π²/6 = Li2(1)`.
pub const ZETA2: f64 = PI * PI / 6.0;

/// Relative truncation threshold of the power series.
const SERIES_CUTOFF: f64 = 1e-17;

/// An argument on the real branch of the dilogarithm, `x <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DilogArgument(f64);

impl DilogArgument {
    pub fn new(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::domain("li2", format!("non-finite argument {x}")));
        }
        if x > 1.0 {
            return Err(Error::domain(
                "li2",
                format!("argument {x} > 1 is off the real branch"),
            ));
        }
        Ok(DilogArgument(x))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Evaluates `Li2` at this argument.
    pub fn li2(self) -> f64 {
        reduce(self.0)
    }
}

impl TryFrom<f64> for DilogArgument {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        DilogArgument::new(x)
    }
}

/// Real dilogarithm for `x <= 1`.
///
/// Fails with [`Error::Domain`] for `x > 1` or a non-finite argument.
pub fn li2(x: f64) -> Result<f64> {
    DilogArgument::new(x).map(DilogArgument::li2)
}

/// Real part of the analytic continuation, `Re Li2(x)`, for any finite `x`.
///
/// For `x > 1` uses `Re Li2(x) = π²/3 - ½ ln²x - Li2(1/x)`, so the real-branch
/// evaluation only ever sees arguments `<= 1`.
pub fn li2_real_part(x: f64) -> Result<f64> {
    if x > 1.0 && x.is_finite() {
        let l = x.ln();
        Ok(2.0 * ZETA2 - 0.5 * l * l - reduce(1.0 / x))
    } else {
        li2(x)
    }
}

/// Power series `Σ x^k / k²`, the kernel behind [`li2`].
///
/// Intended for `|x| <= 1/2`; the sum stops once a term drops below
/// `1e-17` of the partial sum.
pub fn li2_series(x: f64) -> f64 {
    debug_assert!(x.abs() <= 0.5, "li2_series called outside |x| <= 1/2: {x}");
    if x == 0.0 {
        return 0.0;
    }
    let mut power = x;
    let mut sum = x;
    let mut k = 1.0_f64;
    loop {
        k += 1.0;
        power *= x;
        let term = power / (k * k);
        sum += term;
        if term.abs() <= SERIES_CUTOFF * sum.abs() {
            return sum;
        }
    }
}

fn reduce(x: f64) -> f64 {
    if x == 1.0 {
        ZETA2
    } else if x.abs() <= 0.5 {
        li2_series(x)
    } else if x > 0.5 {
        // reflection
        let y = 1.0 - x;
        ZETA2 - x.ln() * y.ln() - li2_series(y)
    } else if x >= -1.0 {
        // Landen; x/(x-1) lies in (1/3, 1/2]
        let l = (-x).ln_1p();
        -0.5 * l * l - li2_series(x / (x - 1.0))
    } else {
        // inversion
        let l = (-x).ln();
        -ZETA2 - 0.5 * l * l - reduce(1.0 / x)
    }
}
