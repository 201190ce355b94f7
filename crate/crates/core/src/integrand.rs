//! Integrands of type `(m, n)`:
//!
//! ```text
//! f(y, z) / ( [(1-y)² - ξ]^{m/2} · [(1-z)² - ξ]^{n/2} )
//! ```
//!
//! with `f` a finite sum of monomials `c · yᵃ · zᵇ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{Kinematics, PhasePoint};

/// Largest admissible `|a|`, `|b|` in a monomial.
pub const MAX_EXPONENT: i8 = 3;

/// Kernel exponents `(m, n)`, each in `0..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IntegralKind {
    m: u8,
    n: u8,
}

impl IntegralKind {
    pub fn new(m: u8, n: u8) -> Result<Self> {
        if m > 3 || n > 3 {
            return Err(Error::InvalidRequest(format!(
                "integral type ({m},{n}) outside 0..=3"
            )));
        }
        Ok(IntegralKind { m, n })
    }

    pub fn m(self) -> u8 {
        self.m
    }

    pub fn n(self) -> u8 {
        self.n
    }

    pub fn swapped(self) -> Self {
        IntegralKind {
            m: self.n,
            n: self.m,
        }
    }
}

impl fmt::Display for IntegralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.m, self.n)
    }
}

impl FromStr for IntegralKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (m, n) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `m,n`, got `{s}`")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u8>()
                .map_err(|e| Error::Parse(format!("bad exponent `{t}`: {e}")))
        };
        IntegralKind::new(parse(m)?, parse(n)?)
    }
}

/// One term `coeff · yᵃ · zᵇ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Monomial {
    pub coeff: f64,
    pub a: i8,
    pub b: i8,
}

/// `f(y, z) = Σ coeff · yᵃ · zᵇ`, kept sorted by `(a, b)` with no repeats.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonomialSum {
    terms: Vec<Monomial>,
}

impl MonomialSum {
    /// Builds a sum, merging repeated `(a, b)` pairs.
    ///
    /// An empty list is rejected; the zero function is written as the
    /// single term `0`.
    pub fn new(terms: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut merged: BTreeMap<(i8, i8), f64> = BTreeMap::new();
        let mut any = false;
        for t in terms {
            any = true;
            if t.a.abs() > MAX_EXPONENT || t.b.abs() > MAX_EXPONENT {
                return Err(Error::InvalidRequest(format!(
                    "monomial exponents ({}, {}) outside [-3, 3]",
                    t.a, t.b
                )));
            }
            if !t.coeff.is_finite() {
                return Err(Error::InvalidRequest(format!(
                    "non-finite coefficient {}",
                    t.coeff
                )));
            }
            *merged.entry((t.a, t.b)).or_insert(0.0) += t.coeff;
        }
        if !any {
            return Err(Error::InvalidRequest("empty monomial sum".into()));
        }
        Ok(MonomialSum {
            terms: merged
                .into_iter()
                .map(|((a, b), coeff)| Monomial { coeff, a, b })
                .collect(),
        })
    }

    /// `f = c · yᵃ · zᵇ`.
    pub fn monomial(coeff: f64, a: i8, b: i8) -> Result<Self> {
        MonomialSum::new([Monomial { coeff, a, b }])
    }

    pub fn one() -> Self {
        MonomialSum::monomial(1.0, 0, 0).unwrap()
    }

    pub fn zero() -> Self {
        MonomialSum::monomial(0.0, 0, 0).unwrap()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coeff == 0.0)
    }

    /// `f(z, y)`.
    pub fn swapped(&self) -> Self {
        MonomialSum::new(self.terms.iter().map(|t| Monomial {
            coeff: t.coeff,
            a: t.b,
            b: t.a,
        }))
        .unwrap()
    }

    /// Smallest power of `z` carrying a non-zero coefficient.
    pub fn min_z_power(&self) -> i8 {
        self.live_terms().map(|t| t.b).min().unwrap_or(0)
    }

    pub fn min_y_power(&self) -> i8 {
        self.live_terms().map(|t| t.a).min().unwrap_or(0)
    }

    /// True when `f` does not depend on `z`.
    pub fn is_z_independent(&self) -> bool {
        self.live_terms().all(|t| t.b == 0)
    }

    fn live_terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().filter(|t| t.coeff != 0.0)
    }

    /// `Σ coeff · yᵃ · zᵇ`; a pole error if a negative power meets zero.
    pub fn evaluate(&self, p: PhasePoint) -> Result<f64> {
        let mut acc = 0.0;
        for t in &self.terms {
            if t.coeff == 0.0 {
                continue;
            }
            if t.a < 0 && p.y == 0.0 {
                return Err(Error::Pole(format!("y = 0 (power {})", t.a)));
            }
            if t.b < 0 && p.z == 0.0 {
                return Err(Error::Pole(format!("z = 0 (power {})", t.b)));
            }
            acc += t.coeff * p.y.powi(t.a as i32) * p.z.powi(t.b as i32);
        }
        Ok(acc)
    }

    /// Evaluates the `y`-only part `Σ coeff · yᵃ`, ignoring `b`.
    pub(crate) fn evaluate_y(&self, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff * y.powi(t.a as i32))
            .sum()
    }
}

impl fmt::Display for MonomialSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}*y^{}*z^{}", t.coeff, t.a, t.b)?;
        }
        Ok(())
    }
}

impl FromStr for MonomialSum {
    type Err = Error;

    /// Comma-separated atoms `coeff*y^a*z^b`; factors may be omitted or
    /// reordered, e.g. `1`, `1*y^0*z^-2`, `2*y^1*z^0,-1*y^0*z^1`, `z^-2`.
    fn from_str(s: &str) -> Result<Self> {
        let atoms: Vec<&str> = s.split(',').map(str::trim).collect();
        if atoms.iter().any(|a| a.is_empty()) {
            return Err(Error::Parse(format!("empty atom in `{s}`")));
        }
        let terms = atoms
            .into_iter()
            .map(parse_atom)
            .collect::<Result<Vec<_>>>()?;
        MonomialSum::new(terms)
    }
}

fn parse_atom(atom: &str) -> Result<Monomial> {
    let mut coeff = 1.0;
    let mut a = 0i8;
    let mut b = 0i8;
    let mut seen_coeff = false;
    for factor in atom.split('*').map(str::trim) {
        let power = |var: &str| -> Result<i8> {
            let rest = &factor[var.len()..];
            if rest.is_empty() {
                return Ok(1);
            }
            let exp = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?;
            exp.parse::<i8>()
                .map_err(|e| Error::Parse(format!("bad exponent in `{factor}`: {e}")))
        };
        if factor.starts_with('y') {
            a += power("y")?;
        } else if factor.starts_with('z') {
            b += power("z")?;
        } else if !seen_coeff {
            coeff = factor
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("bad coefficient `{factor}`: {e}")))?;
            seen_coeff = true;
        } else {
            return Err(Error::Parse(format!(
                "unexpected factor `{factor}` in `{atom}`"
            )));
        }
    }
    Ok(Monomial { coeff, a, b })
}

/// `[(1-y)²-ξ]^{-m/2} · [(1-z)²-ξ]^{-n/2}`.
///
/// Fails on or beyond the singular lines `y, z = 1 - √ξ` whenever the
/// corresponding exponent is non-zero.
pub fn kernel(kind: IntegralKind, kin: &Kinematics, p: PhasePoint) -> Result<f64> {
    let edge = kin.singular_line();
    let s2 = 2.0 * kin.sqrt_xi();
    let factor = |x: f64, power: u8, var: &str| -> Result<f64> {
        if power == 0 {
            return Ok(1.0);
        }
        let gap = edge - x;
        if gap <= 0.0 {
            return Err(Error::SingularPoint(format!(
                "{var} = {x} on or beyond 1 - sqrt(xi) = {edge}"
            )));
        }
        Ok(bracket_power(gap * (gap + s2), power))
    };
    Ok(factor(p.y, kind.m, "y")? * factor(p.z, kind.n, "z")?)
}

/// `r^{-k/2}` for `k` in `1..=3`, using a square root only for odd `k`.
pub(crate) fn bracket_power(r: f64, k: u8) -> f64 {
    match k {
        0 => 1.0,
        1 => 1.0 / r.sqrt(),
        2 => 1.0 / r,
        _ => 1.0 / (r * r.sqrt()),
    }
}

/// `f(y, z)`, see [`MonomialSum::evaluate`].
pub fn evaluate_f(f: &MonomialSum, p: PhasePoint) -> Result<f64> {
    f.evaluate(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Divergence {
    Convergent,
    SoftDivergent,
}

/// Decides whether an `(m, n)` integral needs `Λ > 0`.
///
/// Near the origin both `z₋` and `z₊` scale like `y` and the width of the
/// `z` range is `O(y)`, so a term `yᵃzᵇ` contributes `∫ y^{a+b+1} dy`.
/// The integral is soft-divergent iff some term has `a + b <= -2`. The
/// kernel is regular at the origin and does not enter.
pub fn classify_divergence(_kind: IntegralKind, f: &MonomialSum) -> Divergence {
    if f.live_terms().any(|t| t.a + t.b <= -2) {
        Divergence::SoftDivergent
    } else {
        Divergence::Convergent
    }
}
