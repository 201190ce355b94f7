//! Divergence isolation as explicit, checkable transformations.
//!
//! * Spurious cut: `I` split into the contributions of the two `z` limits,
//!   each integrated up to `y = 1 - √ξ - ε²` where it diverges on its own.
//! * `k`-substitution: the same two pieces in `k± = 1 - y ± √((1-y)²-ξ)`.
//! * Soft split: the small-`z` expansion of the inner logarithm, and the
//!   subtracted bracket that makes `J₂` finite at `Λ = 0`.
//! * Collinear split of `J₁`: a singular integral carrying `ln Λ` plus an
//!   elementary finite one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::Kinematics;
use crate::quadrature::{
    integrate_1d_points, integrate_y_function, singular_gap_floor, y_kernel, QuadResult,
};

/// Accuracy target of the one-dimensional integrals in this module.
const TOL: f64 = 1e-12;

/// The spurious cut `ε` and its image `ε̃ = √2 ξ^{1/4} ε` in `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CutParameter {
    epsilon: f64,
    epsilon_tilde: f64,
}

impl CutParameter {
    /// Requires `0 < ε < 0.1` and `ε² < 1 - √ξ`.
    pub fn new(kin: &Kinematics, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 0.1) {
            return Err(Error::InvalidRequest(format!(
                "cut epsilon = {epsilon} must lie in (0, 0.1)"
            )));
        }
        if epsilon * epsilon >= kin.y_plus() {
            return Err(Error::InvalidRequest(format!(
                "cut epsilon^2 = {} leaves no y range below {}",
                epsilon * epsilon,
                kin.y_plus()
            )));
        }
        Ok(CutParameter {
            epsilon,
            epsilon_tilde: std::f64::consts::SQRT_2 * kin.xi().sqrt().sqrt() * epsilon,
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn epsilon_tilde(&self) -> f64 {
        self.epsilon_tilde
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

fn require_massless_third(kin: &Kinematics, what: &str) -> Result<()> {
    if kin.lambda() != 0.0 {
        return Err(Error::InvalidRequest(format!("{what} needs lambda = 0")));
    }
    Ok(())
}

/// `ln|√((1-z)²-ξ) + z - 1| = ln ξ - ln(1 - z + √((1-z)²-ξ))`, from the gap
/// `g = 1 - √ξ - z`.
fn cut_log(kin: &Kinematics, z: f64, g: f64) -> f64 {
    let g = g.max(0.0);
    let root = (g * (g + 2.0 * kin.sqrt_xi())).sqrt();
    kin.xi().ln() - (1.0 - z + root).ln()
}

/// `(I₊, I₋)` with `I± = ±∫_0^{1-√ξ-ε²} dy ln|√((1-z±)²-ξ) + z± - 1| / ((1-y)²-ξ)`.
///
/// Each part diverges like `ln ε` as `ε → 0`; the sum tends to `I`. The
/// strip left out by the cut costs `O(ε)`.
pub fn eval_i_parts(kin: &Kinematics, cut: &CutParameter) -> Result<(f64, f64)> {
    require_massless_third(kin, "the spurious cut")?;
    let hi = kin.y_plus();
    let s2 = 2.0 * kin.sqrt_xi();
    let eps2 = cut.epsilon() * cut.epsilon();
    let apex_gap = (hi - kin.apex()).max(eps2);

    let part = |branch: Branch| -> Result<f64> {
        let h = |y: f64, gap: f64| -> Result<f64> {
            let (zm, zp) = kin.z_limits(y)?;
            let (gm, gp) = kin.z_gaps(y)?;
            let (z, g) = if branch == Branch::Plus {
                (zp, gp)
            } else {
                (zm, gm)
            };
            Ok(cut_log(kin, z, g) / (gap * (gap + s2)))
        };
        // y in [0, apex], then y = y₊ - e^t up to the cut
        let smooth = integrate_1d_points(|y| h(y, hi - y), &[0.0, hi - apex_gap], TOL)?;
        let near = integrate_1d_points(
            |t| {
                let gap = t.exp();
                Ok(h(hi - gap, gap)? * gap)
            },
            &[eps2.ln(), apex_gap.ln()],
            TOL,
        )?;
        let sign = if branch == Branch::Plus { 1.0 } else { -1.0 };
        Ok(sign * (smooth.value + near.value))
    };
    Ok((part(Branch::Plus)?, part(Branch::Minus)?))
}

/// `k± = 1 - y ± √((1-y)²-ξ)`.
///
/// Maps `[0, 1 - √ξ]` onto `[√ξ, 1 + v]` for the plus branch and onto
/// `[1 - v, √ξ]` for the minus branch.
pub fn k_substitution(kin: &Kinematics, y: f64, branch: Branch) -> Result<f64> {
    let gap = kin.y_plus() - y;
    if gap.is_nan() || gap < 0.0 {
        return Err(Error::domain(
            "k_substitution",
            format!("(1-y)^2 < xi at y = {y}"),
        ));
    }
    let root = (gap * (gap + 2.0 * kin.sqrt_xi())).sqrt();
    Ok(match branch {
        Branch::Plus => 1.0 - y + root,
        Branch::Minus => 1.0 - y - root,
    })
}

/// Exact images `(k₊, k₋)` of the cut `y = 1 - √ξ - ε²`; to first order
/// they are `√ξ ± ε̃`.
pub fn k_cut_limits(kin: &Kinematics, cut: &CutParameter) -> (f64, f64) {
    let s = kin.sqrt_xi();
    let e2 = cut.epsilon() * cut.epsilon();
    let root = (e2 * (e2 + 2.0 * s)).sqrt();
    (s + e2 + root, s + e2 - root)
}

/// `1/(k-√ξ) - 1/(k+√ξ)`.
pub fn k_measure(kin: &Kinematics, k: f64) -> f64 {
    let s = kin.sqrt_xi();
    1.0 / (k - s) - 1.0 / (k + s)
}

/// `I₊ + I₋` from the three `k`-space integrals:
///
/// ```text
/// I₊ = (1/√ξ) ∫_{k₊c}^{2-√ξ} dk P(k) [ln ξ - ln(2-k)] + (1/√ξ) ∫_{2-√ξ}^{1+v} dk P(k) ln(2-k)
/// I₋ = (1/√ξ) ∫_{1-v}^{k₋c} dk P(k) [ln ξ - ln(2-k)]
/// ```
///
/// with `P(k) = 1/(k-√ξ) - 1/(k+√ξ)` and the cut limits of [`k_cut_limits`].
pub fn eval_i_k_representation(kin: &Kinematics, cut: &CutParameter) -> Result<f64> {
    require_massless_third(kin, "the k representation")?;
    let s = kin.sqrt_xi();
    let lx = kin.xi().ln();
    let (a, b) = (1.0 + kin.v(), kin.xi() / (1.0 + kin.v()));
    let (kp, km) = k_cut_limits(kin, cut);
    let log_kernel = |k: f64| lx - (2.0 - k).ln();

    // k = √ξ ± e^t puts the 1/(k-√ξ) end on a logarithmic scale
    let plus_near = integrate_1d_points(
        |t| {
            let d = t.exp();
            let k = s + d;
            Ok(k_measure(kin, k) * d * log_kernel(k))
        },
        &[(kp - s).ln(), (2.0 - 2.0 * s).ln()],
        TOL,
    )?;
    let plus_far = integrate_1d_points(
        |k| Ok(k_measure(kin, k) * (2.0 - k).ln()),
        &[2.0 - s, a],
        TOL,
    )?;
    let minus = integrate_1d_points(
        |t| {
            let d = t.exp();
            let k = s - d;
            Ok(-k_measure(kin, k) * d * log_kernel(k))
        },
        &[(s - km).ln(), (s - b).ln()],
        TOL,
    )?;
    // the minus integral ran from k₋c down to 1-v; flip it back
    Ok((plus_near.value + plus_far.value - minus.value) / s)
}

/// `(c0, c1)` of `ln((1-z-√ξ)/(1-z+√ξ)) = c0 + c1 z + O(z²)`:
/// `c0 = ln((1-√ξ)/(1+√ξ))`, `c1 = -2√ξ/v²`.
pub fn soft_expansion_coefficients(kin: &Kinematics) -> (f64, f64) {
    let s = kin.sqrt_xi();
    let c0 = (-s).ln_1p() - s.ln_1p();
    let c1 = -2.0 * s / (kin.v() * kin.v());
    (c0, c1)
}

/// `B(z) - B(0)` for the soft bracket `B(z) = G(z) - z/v²` with
/// `G(z) = -(1/(2√ξ)) ln((1-z-√ξ)/(1-z+√ξ))`; `O(z²)` at small `z`.
///
/// `gap` is `1 - √ξ - z`, passed separately so the logarithm stays
/// accurate next to the singular line.
pub fn soft_bracket(kin: &Kinematics, z: f64, gap: f64) -> f64 {
    let s = kin.sqrt_xi();
    let v2 = kin.v() * kin.v();
    let p = z / (1.0 - s);
    let q = z / (1.0 + s);
    if p.abs() <= 0.5 {
        // (1/(2√ξ)) Σ_{n>=2} (pⁿ - qⁿ)/n, with eₙ = (pⁿ - qⁿ)/(2√ξ) by recursion
        let lin = z / v2;
        let mut e = lin;
        let mut qn = 1.0;
        let mut sum = 0.0;
        for n in 2..200 {
            qn *= q;
            e = p * e + qn * lin;
            let term = e / f64::from(n);
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        let log_p = (gap / (1.0 - s)).ln();
        -(log_p - (-q).ln_1p()) / (2.0 * s) - z / v2
    }
}

/// The `J₂` integrand factor `[B(z)]_{z₋(y)}^{z₊(y)}`; finite as `y → 0`
/// where it vanishes like `y²`.
pub fn soft_split_remainder(kin: &Kinematics, y: f64) -> Result<f64> {
    let (zm, zp) = kin.z_limits(y)?;
    if zp <= zm {
        return Ok(0.0);
    }
    let (gm, gp) = kin.z_gaps(y)?;
    let floor = singular_gap_floor(kin);
    Ok(soft_bracket(kin, zp, gp.max(floor)) - soft_bracket(kin, zm, gm.max(floor)))
}

/// Quadrature of `J₂ = ∫ dy / (y² √((1-y)²-ξ)) · soft_split_remainder(y)`.
pub fn soft_split_j2_quadrature(kin: &Kinematics, tol: f64) -> Result<QuadResult> {
    integrate_y_function(kin, tol, |y, gap| {
        if gap <= 0.0 {
            return Ok(0.0);
        }
        Ok(y_kernel(kin, 1, gap) * soft_split_remainder(kin, y)? / (y * y))
    })
}

/// `(4/ξ) ∫_{y₋}^{1-√ξ} dy √((y-Λ)²-Λξ) / y²`, by quadrature.
fn collinear_singular(kin: &Kinematics) -> Result<f64> {
    let lam = kin.lambda();
    let r = (lam * kin.xi()).sqrt();
    let (lo, hi) = kin.y_limits();
    // y = y₋ + u²: √((y-y₋)(y-Λ+√(Λξ))) = u √(y-Λ+r)
    let mut points = vec![0.0];
    let mut step = lo;
    while step < 0.5 * (hi - lo) {
        points.push(step.sqrt());
        step *= 10.0;
    }
    points.push((hi - lo).sqrt());
    let q = integrate_1d_points(
        |u| {
            let y = lo + u * u;
            Ok(2.0 * u * u * (y - lam + r).sqrt() / (y * y))
        },
        &points,
        TOL,
    )?;
    Ok(4.0 / kin.xi() * q.value)
}

/// `4 ∫_0^{1-√ξ} (dy/y) [1/(4y+ξ) - 1/ξ] = -(4/ξ)[2 ln(2-√ξ) - ln ξ]`,
/// using `4(1-√ξ) + ξ = (2-√ξ)²`.
pub fn collinear_finite_part(kin: &Kinematics) -> f64 {
    -4.0 / kin.xi() * (2.0 * (2.0 - kin.sqrt_xi()).ln() - kin.xi().ln())
}

/// `(singular_part, finite_part)` of `J₁` after adding and subtracting the
/// splitting term `√((y-Λ)²-Λξ)/ξ`. Their sum approximates `J₁` up to
/// terms that vanish with `Λ`.
pub fn collinear_split_j1(kin: &Kinematics) -> Result<(f64, f64)> {
    if kin.lambda() <= 0.0 {
        return Err(Error::InvalidRequest(
            "the collinear split needs lambda > 0".into(),
        ));
    }
    Ok((collinear_singular(kin)?, collinear_finite_part(kin)))
}
