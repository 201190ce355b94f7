//! Numerical oracle for the `(m, n)` double integrals.
//!
//! [`integrate2d`] nests two adaptive Gauss-Kronrod integrations: the outer
//! one runs over `y`, the inner one over `z` between the curved limits. The
//! outer range is split at the apex, where `z₊(y)` touches the singular
//! line `1 - √ξ`. Each half is integrated in a square-root variable
//! (`y = y₋ + u²` and `y = y₊ - u²`), which absorbs the square-root
//! behaviour of the width at both ends and the kernel blow-up at `y₊`.
//! Inside, a logarithmic variable is used next to `z = 0` when `f` carries
//! negative powers of `z`, and next to `z = 1 - √ξ` when `n > 0`.
//!
//! [`integrate_reduced`] replaces the inner integral by its closed form
//! where one exists and integrates the remaining function of `y` with the
//! same outer scheme.

mod gauss_kronrod;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrand::{bracket_power, classify_divergence, Divergence, IntegralKind, MonomialSum};
use crate::kinematics::{Kinematics, PhasePoint};

pub(crate) use gauss_kronrod::{integrate, Budget, Estimate, Tolerance};

/// Default cap on integrand calls for a single integration.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Closest approach to the singular line, measured in `√(1 - √ξ - z)`
/// relative to `1 - √ξ`.
pub const SINGULAR_MARGIN: f64 = 1e-13;

/// Smallest distance `1 - √ξ - z` that is evaluated; see [`SINGULAR_MARGIN`].
pub(crate) fn singular_gap_floor(kin: &Kinematics) -> f64 {
    let m = SINGULAR_MARGIN * kin.singular_line();
    m * m
}

/// Relative accuracy below which tolerances are not pursued.
const REL_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    /// Absolute error estimate.
    pub error_estimate: f64,
    pub evaluations: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub budget: u64,
    pub max_outer_panels: usize,
    pub max_inner_panels: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            budget: DEFAULT_BUDGET,
            max_outer_panels: 4000,
            max_inner_panels: 400,
        }
    }
}

/// Integrates `g(y, y₊ - y)` over `[y₋, y₊]` with the apex split and the
/// square-root maps described in the module docs.
///
/// `g` returns `(value, uncertainty)` at a point; the second argument is the
/// distance to `y₊`, exact in the upper half.
pub(crate) fn integrate_over_y<G>(
    kin: &Kinematics,
    tol: f64,
    max_panels: usize,
    budget: &Budget,
    mut g: G,
) -> Result<Estimate>
where
    G: FnMut(f64, f64) -> Result<(f64, f64)>,
{
    let (lo, hi) = kin.y_limits();
    let apex = kin.apex().clamp(lo, hi);
    let tol = Tolerance {
        abs: 0.5 * tol,
        rel: REL_FLOOR,
    };

    // Lower half: y = y₋ + u², with geometric breakpoints resolving the
    // O(√Λ) scale around y₋.
    let u_max = (apex - lo).sqrt();
    let mut lower_points = vec![0.0];
    if lo > 0.0 {
        let mut step = lo;
        while step < 0.5 * (apex - lo) {
            lower_points.push(step.sqrt());
            step *= 10.0;
        }
    }
    lower_points.push(u_max);
    let lower = integrate(
        |u| {
            let y = lo + u * u;
            let (v, e) = g(y, hi - y)?;
            let jac = 2.0 * u;
            Ok((v * jac, e * jac))
        },
        &lower_points,
        tol,
        max_panels,
        budget,
    )?;

    // Upper half: y = y₊ - u².
    let w_max = (hi - apex).sqrt();
    let upper = integrate(
        |w| {
            let gap = w * w;
            let (v, e) = g(hi - gap, gap)?;
            let jac = 2.0 * w;
            Ok((v * jac, e * jac))
        },
        &[0.0, w_max],
        tol,
        max_panels,
        budget,
    )?;
    Ok(Estimate {
        value: lower.value + upper.value,
        error: lower.error + upper.error,
        converged: lower.converged && upper.converged,
    })
}

/// [`integrate_over_y`] with a fresh default budget, for plain functions
/// `g(y, y₊ - y)`.
pub(crate) fn integrate_y_function<G>(kin: &Kinematics, tol: f64, mut g: G) -> Result<QuadResult>
where
    G: FnMut(f64, f64) -> Result<f64>,
{
    let opts = QuadOptions::default();
    let budget = Budget::new(opts.budget);
    let est = integrate_over_y(kin, tol, opts.max_outer_panels, &budget, |y, gap| {
        Ok((g(y, gap)?, 0.0))
    })?;
    finish(est, tol, &budget)
}

/// `[(1-y)²-ξ]^{-m/2}` from the distance `gap = y₊ - y`.
pub(crate) fn y_kernel(kin: &Kinematics, m: u8, gap: f64) -> f64 {
    bracket_power(gap * (gap + 2.0 * kin.sqrt_xi()), m)
}

fn finish(est: Estimate, tol: f64, budget: &Budget) -> Result<QuadResult> {
    let best = QuadResult {
        value: est.value,
        error_estimate: est.error,
        evaluations: budget.used().max(1),
    };
    if est.converged || est.error <= tol {
        Ok(best)
    } else {
        Err(Error::NotConverged { tol, best })
    }
}

fn check_regularized(kin: &Kinematics, kind: IntegralKind, f: &MonomialSum) -> Result<()> {
    if kin.lambda() == 0.0 && classify_divergence(kind, f) == Divergence::SoftDivergent {
        return Err(Error::InvalidRequest(format!(
            "f = {f} is soft-divergent for type ({kind}); lambda must be > 0"
        )));
    }
    if !(kind.m() < 3 && kind.n() < 3) && !f.is_zero() {
        // m = 3 or n = 3 integrands are not integrable at the collinear
        // boundary unless f vanishes there; let the adaptive scheme try.
    }
    Ok(())
}

/// `∫_{y₋}^{y₊} dy ∫_{z₋(y)}^{z₊(y)} dz f(y,z) · kernel_{(m,n)}(y,z)`.
///
/// `tol` is an absolute error target, relaxed to a relative `1e-12` for
/// large values. A missed target is reported as [`Error::NotConverged`]
/// carrying the best estimate.
pub fn integrate2d(
    kin: &Kinematics,
    kind: IntegralKind,
    f: &MonomialSum,
    tol: f64,
) -> Result<QuadResult> {
    integrate2d_with(kin, kind, f, tol, &QuadOptions::default())
}

pub fn integrate2d_with(
    kin: &Kinematics,
    kind: IntegralKind,
    f: &MonomialSum,
    tol: f64,
    opts: &QuadOptions,
) -> Result<QuadResult> {
    check_regularized(kin, kind, f)?;
    let budget = Budget::new(opts.budget);
    let (lo, hi) = kin.y_limits();
    let span = hi - lo;
    let est = integrate_over_y(kin, tol, opts.max_outer_panels, &budget, |y, gap| {
        if gap <= 0.0 {
            return Ok((0.0, 0.0));
        }
        let ky = y_kernel(kin, kind.m(), gap);
        let (zm, zp) = kin.z_limits(y)?;
        if zp <= zm {
            return Ok((0.0, 0.0));
        }
        let inner_tol = Tolerance {
            abs: tol / (10.0 * span * ky.max(1.0)),
            rel: 1e-13,
        };
        let gaps = kin.z_gaps(y)?;
        let inner = inner_z(
            kin,
            kind.n(),
            f,
            y,
            (zm, zp),
            gaps,
            inner_tol,
            opts,
            &budget,
        )?;
        Ok((ky * inner.value, ky * inner.error))
    })?;
    finish(est, tol, &budget)
}

/// Adaptive `∫ f(y, z) · [(1-z)²-ξ]^{-n/2} dz` over `[zm, zp]` at fixed `y`.
#[allow(clippy::too_many_arguments)]
fn inner_z(
    kin: &Kinematics,
    n: u8,
    f: &MonomialSum,
    y: f64,
    (zm, zp): (f64, f64),
    (_, gap_p): (f64, f64),
    tol: Tolerance,
    opts: &QuadOptions,
    budget: &Budget,
) -> Result<Estimate> {
    let edge = kin.singular_line();
    let s2 = 2.0 * kin.sqrt_xi();
    let integrand = |z: f64, gap: f64| -> Result<f64> {
        let fz = f.evaluate(PhasePoint::new(y, z))?;
        if n == 0 {
            return Ok(fz);
        }
        Ok(fz * bracket_power(gap * (gap + s2), n))
    };
    let mid = 0.5 * (zm + zp);
    let half_tol = Tolerance {
        abs: 0.5 * tol.abs,
        rel: tol.rel,
    };

    let lower = if f.min_z_power() < 0 && zm > 0.0 {
        integrate(
            |w| {
                let z = w.exp();
                Ok((integrand(z, edge - z)? * z, 0.0))
            },
            &[zm.ln(), mid.ln()],
            half_tol,
            opts.max_inner_panels,
            budget,
        )?
    } else {
        integrate(
            |z| Ok((integrand(z, edge - z)?, 0.0)),
            &[zm, mid],
            half_tol,
            opts.max_inner_panels,
            budget,
        )?
    };

    let upper = if n > 0 {
        let floor = singular_gap_floor(kin);
        let g_hi = gap_p.max(floor);
        let g_mid = (edge - mid).max(floor);
        integrate(
            |w| {
                let gap = w.exp();
                Ok((integrand(edge - gap, gap)? * gap, 0.0))
            },
            &[g_hi.ln(), g_mid.ln()],
            half_tol,
            opts.max_inner_panels,
            budget,
        )?
    } else {
        integrate(
            |z| Ok((integrand(z, edge - z)?, 0.0)),
            &[mid, zp],
            half_tol,
            opts.max_inner_panels,
            budget,
        )?
    };

    Ok(Estimate {
        value: lower.value + upper.value,
        error: lower.error + upper.error,
        converged: lower.converged && upper.converged,
    })
}

/// Antiderivative of `1/√((1-z)²-ξ)`: `-ln(1 - z + √((1-z)²-ξ))`.
pub fn inner_antiderivative_n1(kin: &Kinematics, z: f64) -> Result<f64> {
    let gap = kin.singular_line() - z;
    if gap < 0.0 {
        return Err(Error::domain(
            "inner_antiderivative_n1",
            format!("(1-z)^2 < xi at z = {z}"),
        ));
    }
    let root = (gap * (gap + 2.0 * kin.sqrt_xi())).sqrt();
    Ok(-(1.0 - z + root).ln())
}

/// Antiderivative of `1/((1-z)²-ξ)`: `-(1/(2√ξ)) ln((1-z-√ξ)/(1-z+√ξ))`.
pub fn inner_antiderivative_n2(kin: &Kinematics, z: f64) -> Result<f64> {
    let s = kin.sqrt_xi();
    let gap = kin.singular_line() - z;
    if gap <= 0.0 {
        return Err(Error::SingularPoint(format!(
            "(1-z)^2 = xi reached at z = {z}"
        )));
    }
    Ok(-(gap / (gap + 2.0 * s)).ln() / (2.0 * s))
}

/// `F1(zp) - F1(zm)` for the `n = 1` antiderivative, free of cancellation.
///
/// `gm`, `gp` are the distances of `zm`, `zp` from the singular line.
pub(crate) fn inner_difference_n1(
    kin: &Kinematics,
    (zm, zp): (f64, f64),
    (gm, gp): (f64, f64),
) -> f64 {
    let s2 = 2.0 * kin.sqrt_xi();
    let root = |g: f64| {
        let g = g.max(0.0);
        (g * (g + s2)).sqrt()
    };
    let (rm, rp) = (root(gm), root(gp));
    let w = zp - zm;
    if w <= 0.0 {
        return 0.0;
    }
    // A(z) = 1 - z + R(z);  A(zm) - A(zp) = w · (1 + (2 - zp - zm)/(R(zm) + R(zp)))
    let drop = w * (1.0 + (2.0 - zp - zm) / (rm + rp));
    let a_plus = 1.0 - zp + rp;
    (drop / a_plus).ln_1p()
}

/// `F2(zp) - F2(zm)` for the `n = 2` antiderivative.
///
/// The log of the gap ratio is taken from the gaps themselves, so it stays
/// finite where `zp` touches the singular line.
pub(crate) fn inner_difference_n2(
    kin: &Kinematics,
    (zm, zp): (f64, f64),
    (gm, gp): (f64, f64),
) -> f64 {
    let s = kin.sqrt_xi();
    let w = zp - zm;
    if w <= 0.0 {
        return 0.0;
    }
    let floor = singular_gap_floor(kin);
    let ratio = gp.max(floor) / gm.max(floor);
    -(ratio.ln() - (-w / (gm + 2.0 * s)).ln_1p()) / (2.0 * s)
}

/// `∫_{zm}^{zp} z^b dz`, written through the width to avoid cancellation.
pub(crate) fn power_integral(b: i8, zm: f64, zp: f64, width: f64) -> Result<f64> {
    if width <= 0.0 {
        return Ok(0.0);
    }
    match b {
        0 => Ok(width),
        -1 => {
            if zm <= 0.0 {
                return Err(Error::Pole("z = 0 inside the z range".into()));
            }
            Ok((width / zm).ln_1p())
        }
        b if b > 0 => {
            let k = b as i32;
            let sum: f64 = (0..=k).map(|j| zp.powi(k - j) * zm.powi(j)).sum();
            Ok(width * sum / f64::from(k + 1))
        }
        b => {
            if zm <= 0.0 {
                return Err(Error::Pole("z = 0 inside the z range".into()));
            }
            let k = -(b as i32) - 1;
            let sum: f64 = (0..k).map(|j| zp.powi(k - 1 - j) * zm.powi(j)).sum();
            Ok(width * sum / (f64::from(k) * (zp * zm).powi(k)))
        }
    }
}

/// True when the inner `z` integral of `(m, n)` with prefactor `f` has a
/// closed form: `n = 0` with any monomials, or `n = 1, 2` with `f`
/// independent of `z`.
pub fn has_reduction(kind: IntegralKind, f: &MonomialSum) -> bool {
    match kind.n() {
        0 => true,
        1 | 2 => f.is_z_independent(),
        _ => false,
    }
}

/// One-dimensional form of [`integrate2d`] with the `z` integral done in
/// closed form.
///
/// Fails with [`Error::UnsupportedReduction`] when [`has_reduction`] is
/// false; [`integrate_auto`] falls back to [`integrate2d`] instead.
pub fn integrate_reduced(
    kin: &Kinematics,
    kind: IntegralKind,
    f: &MonomialSum,
    tol: f64,
) -> Result<QuadResult> {
    integrate_reduced_with(kin, kind, f, tol, &QuadOptions::default())
}

pub fn integrate_reduced_with(
    kin: &Kinematics,
    kind: IntegralKind,
    f: &MonomialSum,
    tol: f64,
    opts: &QuadOptions,
) -> Result<QuadResult> {
    if !has_reduction(kind, f) {
        return Err(Error::UnsupportedReduction {
            m: kind.m(),
            n: kind.n(),
        });
    }
    check_regularized(kin, kind, f)?;
    let budget = Budget::new(opts.budget);
    let est = integrate_over_y(kin, tol, opts.max_outer_panels, &budget, |y, gap| {
        if gap <= 0.0 {
            return Ok((0.0, 0.0));
        }
        let ky = y_kernel(kin, kind.m(), gap);
        let (zm, zp) = kin.z_limits(y)?;
        let (gm, gp) = kin.z_gaps(y)?;
        let width = kin.width(y)?;
        let inner = match kind.n() {
            0 => {
                let mut acc = 0.0;
                for t in f.terms() {
                    if t.coeff != 0.0 {
                        acc += t.coeff * y.powi(t.a as i32) * power_integral(t.b, zm, zp, width)?;
                    }
                }
                acc
            }
            1 => f.evaluate_y(y) * inner_difference_n1(kin, (zm, zp), (gm, gp)),
            _ => f.evaluate_y(y) * inner_difference_n2(kin, (zm, zp), (gm, gp)),
        };
        Ok((ky * inner, 0.0))
    })?;
    finish(est, tol, &budget)
}

/// [`integrate_reduced`] when available, [`integrate2d`] otherwise.
pub fn integrate_auto(
    kin: &Kinematics,
    kind: IntegralKind,
    f: &MonomialSum,
    tol: f64,
) -> Result<QuadResult> {
    match integrate_reduced(kin, kind, f, tol) {
        Err(Error::UnsupportedReduction { .. }) => integrate2d(kin, kind, f, tol),
        other => other,
    }
}

/// Adaptive integral of a plain function of one variable over `[a, b]`.
///
/// The general-purpose entry point used by the regularization checks;
/// callers are responsible for mapping away endpoint singularities.
pub fn integrate_1d<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    integrate_1d_points(f, &[a, b], tol)
}

/// As [`integrate_1d`] with interior breakpoints: `points` runs from the
/// lower to the upper limit.
pub fn integrate_1d_points<F>(mut f: F, points: &[f64], tol: f64) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let budget = Budget::new(DEFAULT_BUDGET);
    let est = integrate(
        |x| Ok((f(x)?, 0.0)),
        points,
        Tolerance {
            abs: tol,
            rel: REL_FLOOR,
        },
        4000,
        &budget,
    )?;
    finish(est, tol, &budget)
}
