//! Closed forms of the worked integrals.
//!
//! * `I`: type `(2,1)` with `f = 1` at `Λ = 0`, a finite combination of six
//!   dilogarithms.
//! * `J₁`: type `(1,0)` with `f = 1/y²`, logarithmically divergent in `Λ`.
//! * `J₂`: the soft-subtracted remainder of type `(2,1)` with `f = 1/z²`,
//!   finite at `Λ = 0`.
//! * `J = J₁/v² + J₂`: type `(2,1)` with `f = 1/z²`.
//!
//! Quantities that diverge as `Λ → 0` are returned as a [`LambdaExpansion`]
//! `log_coeff · ln Λ + const_part`.
//!
//! The `_printed` variants keep the literal published expressions for
//! comparison; they disagree with the quadrature oracle (by a factor `√ξ`
//! for `I`, and by more than a prefactor for `J₂`) and are not used in the
//! assembled results.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::dilog::{li2, li2_real_part};
use crate::kinematics::Kinematics;

/// How fast the dropped terms of a [`LambdaExpansion`] vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RemainderOrder {
    /// No dropped terms.
    Exact,
    /// Dropped terms vanish like `√Λ` (measured; see the acceptance tests).
    SqrtLambda,
}

/// `log_coeff · ln Λ + const_part`, up to a remainder of the stated order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaExpansion {
    pub log_coeff: f64,
    pub const_part: f64,
    pub remainder: RemainderOrder,
}

impl LambdaExpansion {
    /// A finite, `Λ`-independent value.
    pub fn constant(c: f64) -> Self {
        LambdaExpansion {
            log_coeff: 0.0,
            const_part: c,
            remainder: RemainderOrder::Exact,
        }
    }

    pub fn value(&self, lambda: f64) -> f64 {
        if self.log_coeff == 0.0 {
            self.const_part
        } else {
            self.log_coeff * lambda.ln() + self.const_part
        }
    }
}

/// `Li2` on arguments already known to be finite.
fn li(x: f64) -> f64 {
    li2_real_part(x).expect("closed-form dilog arguments are finite")
}

/// `ln((1+v)/(1-v))`, written as `2 ln(1+v) - ln ξ` to keep digits at small `ξ`.
fn log_v_ratio(kin: &Kinematics) -> f64 {
    2.0 * kin.v().ln_1p() - kin.xi().ln()
}

/// `1 - v = ξ/(1+v)` without cancellation.
fn one_minus_v(kin: &Kinematics) -> f64 {
    kin.xi() / (1.0 + kin.v())
}

/// The six dilog arguments of the published `I` bracket, in print order.
pub fn i_dilog_arguments(kin: &Kinematics) -> [f64; 6] {
    let s = kin.sqrt_xi();
    let (a, b) = (1.0 + kin.v(), one_minus_v(kin));
    [
        s / (2.0 + s),
        s / (2.0 - s),
        b / (2.0 + s),
        b / (2.0 - s),
        (2.0 - s) / a,
        a / (2.0 + s),
    ]
}

/// The published dilog-and-log bracket for `I`, evaluated as printed.
pub fn eval_i_printed(kin: &Kinematics) -> f64 {
    let s = kin.sqrt_xi();
    let lx = kin.xi().ln();
    let l2s = (2.0 - s).ln();
    let lv = log_v_ratio(kin);
    let x = i_dilog_arguments(kin);
    let dilogs = 2.0 * li(x[0]) - 2.0 * li(x[1]) - li(x[2]) + li(x[3]) - li(x[4]) - li(x[5]);
    dilogs + 0.25 * lv * (-lx + 2.0 * l2s - 0.5 * lv) + 0.5 * lx * (-0.25 * lx + l2s)
        - 0.5 * l2s * l2s
        + PI * PI / 3.0
}

/// `I = ∫∫ dy dz / ([(1-y)²-ξ] √((1-z)²-ξ))` at `Λ = 0`.
///
/// The printed bracket divided by `√ξ`, the prefactor of the `k`-space
/// integrals it is built from.
pub fn eval_i(kin: &Kinematics) -> f64 {
    eval_i_printed(kin) / kin.sqrt_xi()
}

/// The distinct dilog arguments of the published `J₂`, in print order.
pub fn j2_printed_dilog_arguments(kin: &Kinematics) -> [f64; 7] {
    let s = kin.sqrt_xi();
    let v = kin.v();
    let (a, b) = (1.0 + v, one_minus_v(kin));
    let r = (a / b).sqrt();
    [
        -r,
        -1.0 / r,
        1.0 / r,
        2.0 * (1.0 - s) / (a - s),
        2.0 * (1.0 - s) / (b - s),
        2.0 / (a + s),
        (b + s) / 2.0,
    ]
}

/// The published `J₂` expression, evaluated term by term as printed.
pub fn eval_j2_printed(kin: &Kinematics) -> f64 {
    let xi = kin.xi();
    let s = kin.sqrt_xi();
    let v = kin.v();
    let (a, b) = (1.0 + v, one_minus_v(kin));
    let r = (a / b).sqrt();
    let lx = xi.ln();
    let lv = log_v_ratio(kin);
    let l1ps = s.ln_1p();
    let dilogs = li(-r) - li(-1.0 / r)
        + 2.0
            * (li(1.0 / r) + li(2.0 * (1.0 - s) / (a - s))
                - li(2.0 * (1.0 - s) / (b - s))
                - li(2.0 / (a + s))
                - li((b + s) / 2.0));
    let logs = 0.125 * (lx - 2.0 * (-s).ln_1p() - 12.0 * v.ln() + 0.5 * lv - 2.0 * LN_2) * lv
        + 0.25 * (-0.25 * lx - l1ps + 8.0 * v / xi + LN_2) * lx
        - 0.5 * (0.5 * l1ps - LN_2) * l1ps;
    let rational =
        4.0 * v / xi * (-lx + 2.0 * (2.0 - s).ln() + 0.5 * (l1ps - (-s).ln_1p()) - LN_2 + 1.0);
    dilogs + logs + rational - 0.25 * LN_2 * LN_2 + PI * PI / 3.0
}

/// Shared constants of the `k`-space antiderivative behind [`eval_j2`].
struct J2Parts {
    s: f64,
    v: f64,
    a: f64,
    b: f64,
    c1: f64,
    c2: f64,
    half_c0: f64,
}

impl J2Parts {
    fn new(kin: &Kinematics) -> Self {
        let s = kin.sqrt_xi();
        J2Parts {
            s,
            v: kin.v(),
            a: 1.0 + kin.v(),
            b: one_minus_v(kin),
            c1: 2.0 - s,
            c2: 2.0 + s,
            half_c0: 0.5 * ((-s).ln_1p() - s.ln_1p()),
        }
    }

    /// `ln|(2-k-√ξ)/(2-k+√ξ)| - c0/2`, zero at both `k = 1 ± v`.
    fn log_factor(&self, k: f64) -> f64 {
        (self.c1 - k).abs().ln() - (self.c2 - k).ln() - self.half_c0
    }

    /// `∫ log_factor(k) / (k-p)² dk`, finite part taken at `k = p`.
    fn against_square(&self, p: f64, k: f64) -> f64 {
        let (c1, c2) = (self.c1, self.c2);
        if k == p {
            let derivative = 1.0 / (p - c1) - 1.0 / (p - c2);
            return -derivative + (p - c1).abs().ln() / (c1 - p) - (p - c2).abs().ln() / (c2 - p);
        }
        -self.log_factor(k) / (k - p) + ((k - c1) / (k - p)).abs().ln() / (c1 - p)
            - ((k - c2) / (k - p)).abs().ln() / (c2 - p)
    }

    /// `∫ log_factor(k) / (k-p) dk` up to the constant `ln|·|` pieces, which
    /// cancel in the combination used.
    fn against_linear(&self, p: f64, k: f64) -> f64 {
        -li((k - p) / (self.c1 - p)) + li((k - p) / (self.c2 - p))
    }

    fn antiderivative(&self, k: f64) -> f64 {
        let (s, v, a, b) = (self.s, self.v, self.a, self.b);
        let v2 = v * v;
        let v3 = v2 * v;
        // partial fractions of 4k/((k-a)²(k-b)²)
        let log_part = a / v2 * self.against_square(a, k) - self.against_linear(a, k) / v3
            + b / v2 * self.against_square(b, k)
            + self.against_linear(b, k) / v3;
        let ln_off = |p: f64| if k == p { 0.0 } else { (k - p).abs().ln() };
        let rational = (-4.0 / (s * s) * (k - 2.0).abs().ln() + a / (v * (2.0 - a)) * ln_off(a)
            - b / (v * (2.0 - b)) * ln_off(b))
            / v2;
        -log_part / s + rational
    }
}

/// Raw dilog arguments produced by [`eval_j2`]; those above 1 are passed to
/// the dilogarithm inverted.
pub fn j2_dilog_arguments(kin: &Kinematics) -> Vec<f64> {
    let p = J2Parts::new(kin);
    let mut out = Vec::with_capacity(12);
    for k in [p.a, p.b, p.s] {
        for pole in [p.a, p.b] {
            for c in [p.c1, p.c2] {
                out.push((k - pole) / (c - pole));
            }
        }
    }
    out
}

/// The soft-subtracted integral
/// `J₂ = ∫ dy / (y² √((1-y)²-ξ)) · [G(z) - z/v²]_{z₋}^{z₊}` at `Λ = 0`, with
/// `G(z) = -(1/(2√ξ)) ln((1-z-√ξ)/(1-z+√ξ))`.
///
/// Obtained with `k = 1 - y ± √((1-y)²-ξ)` on the two branches, which turns
/// the integrand into rational functions of `k` times
/// `ln|(2-k-√ξ)/(2-k+√ξ)|`; both branches meet at `k = √ξ`.
pub fn eval_j2(kin: &Kinematics) -> f64 {
    let p = J2Parts::new(kin);
    let at_s = p.antiderivative(p.s);
    (p.antiderivative(p.a) - at_s) - (at_s - p.antiderivative(p.b))
}

/// `J₁ = ∫∫ dy dz / (y² √((1-y)²-ξ))` expanded in `Λ`:
/// `(4/ξ)[-½ ln Λ + ½ ln ξ + ln 2 + ln(1-√ξ) - 2 ln(2-√ξ) - 1]`.
pub fn eval_j1(kin: &Kinematics) -> LambdaExpansion {
    let xi = kin.xi();
    let s = kin.sqrt_xi();
    let c = 4.0 / xi;
    LambdaExpansion {
        log_coeff: -0.5 * c,
        const_part: c * (0.5 * xi.ln() + LN_2 + (-s).ln_1p() - 2.0 * (2.0 - s).ln() - 1.0),
        remainder: RemainderOrder::SqrtLambda,
    }
}

/// `J = ∫∫ dy dz / ([(1-y)²-ξ] √((1-z)²-ξ) z²) = J₁/v² + J₂`.
///
/// The subtraction term carries the `1/v²` from the linear coefficient of
/// the soft expansion, so the `ln Λ` coefficient is `-2/(ξ v²)`.
pub fn eval_j(kin: &Kinematics) -> LambdaExpansion {
    let j1 = eval_j1(kin);
    let v2 = kin.v() * kin.v();
    LambdaExpansion {
        log_coeff: j1.log_coeff / v2,
        const_part: j1.const_part / v2 + eval_j2(kin),
        remainder: j1.remainder,
    }
}

/// Real-branch check used by the certificates: every argument the
/// dilogarithm actually receives is `<= 1`.
pub fn on_real_branch(x: f64) -> bool {
    let seen = if x > 1.0 { 1.0 / x } else { x };
    li2(seen).is_ok()
}
