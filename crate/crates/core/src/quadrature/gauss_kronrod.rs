//! Globally adaptive 21-point Gauss-Kronrod integration.
//!
//! The integrand returns a pair `(value, uncertainty)`: the uncertainty of a
//! node (for instance the error of an inner integral) is integrated with the
//! Kronrod weights and added to the panel error, so nested schemes report an
//! honest total.

use std::cell::Cell;

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Shared count of integrand evaluations against a hard budget.
#[derive(Debug)]
pub(crate) struct Budget {
    used: Cell<u64>,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget {
            used: Cell::new(0),
            limit,
        }
    }

    pub(crate) fn charge(&self, n: u64) -> Result<()> {
        let used = self.used.get() + n;
        self.used.set(used);
        if used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.get()
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Estimate {
    pub value: f64,
    pub error: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    splittable: bool,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err.abs();
    if res_asc != 0.0 && e != 0.0 {
        let scale = (200.0 * e / res_asc).powf(1.5);
        e = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

/// One application of the 21-point rule on `[a, b]`.
fn rule<F>(f: &mut F, a: f64, b: f64, budget: &Budget) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    budget.charge(21)?;
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];

    let (fc, uc) = f(centre)?;
    let mut res_k = WGK[10] * fc;
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut carried = WGK[10] * uc;

    for j in 0..10 {
        let x = half * XGK[j];
        let (f1, u1) = f(centre - x)?;
        let (f2, u2) = f(centre + x)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        carried += WGK[j] * (u1 + u2);
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let h = half.abs();
    let err = rescale_error((res_k - res_g) * half, res_abs * h, res_asc * h);
    if !res_k.is_finite() {
        return Err(Error::domain(
            "quadrature",
            format!("non-finite integrand on [{a}, {b}]"),
        ));
    }
    Ok((res_k * half, err + carried * h))
}

/// Integrates over consecutive panels `[points[i], points[i+1]]`.
///
/// Panels are bisected worst-first until the summed error meets the
/// tolerance, a panel becomes too narrow to split, or `max_panels` is hit.
/// The final sum runs in panel order so results do not depend on the
/// refinement history.
pub(crate) fn integrate<F>(
    mut f: F,
    points: &[f64],
    tol: Tolerance,
    max_panels: usize,
    budget: &Budget,
) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    debug_assert!(points.len() >= 2);
    let mut panels: Vec<Panel> = Vec::with_capacity(64);
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a == b {
            continue;
        }
        let (value, error) = rule(&mut f, a, b, budget)?;
        panels.push(Panel {
            a,
            b,
            value,
            error,
            splittable: true,
        });
    }
    if panels.is_empty() {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
            converged: true,
        });
    }

    loop {
        let value: f64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if error <= tol.target(value) {
            break;
        }
        let worst = panels
            .iter()
            .enumerate()
            .filter(|(_, p)| p.splittable)
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i);
        let Some(i) = worst else { break };
        if panels.len() >= max_panels {
            break;
        }
        let Panel { a, b, .. } = panels[i];
        let mid = 0.5 * (a + b);
        if !(mid > a.min(b) && mid < a.max(b)) || (b - a).abs() <= 1e-15 * a.abs().max(b.abs()) {
            panels[i].splittable = false;
            continue;
        }
        let (v1, e1) = rule(&mut f, a, mid, budget)?;
        let (v2, e2) = rule(&mut f, mid, b, budget)?;
        panels[i] = Panel {
            a,
            b: mid,
            value: v1,
            error: e1,
            splittable: true,
        };
        panels.insert(
            i + 1,
            Panel {
                a: mid,
                b,
                value: v2,
                error: e2,
                splittable: true,
            },
        );
    }

    let value = pairwise_sum(&panels.iter().map(|p| p.value).collect::<Vec<_>>());
    let error: f64 = panels.iter().map(|p| p.error).sum();
    Ok(Estimate {
        value,
        error,
        converged: error <= tol.target(value),
    })
}

pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n => {
            let (l, r) = xs.split_at(n / 2);
            pairwise_sum(l) + pairwise_sum(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(f: impl Fn(f64) -> f64) -> impl FnMut(f64) -> Result<(f64, f64)> {
        move |x| Ok((f(x), 0.0))
    }

    const TIGHT: Tolerance = Tolerance {
        abs: 1e-13,
        rel: 1e-13,
    };

    #[test]
    fn polynomial_is_exact() {
        let b = Budget::new(1_000);
        let e = integrate(plain(|x| x.powi(7) - 3.0 * x), &[0.0, 2.0], TIGHT, 100, &b).unwrap();
        assert!((e.value - (32.0 - 6.0)).abs() < 1e-13);
        assert_eq!(b.used(), 21);
    }

    #[test]
    fn endpoint_log_singularity() {
        let b = Budget::new(1_000_000);
        let e = integrate(plain(|x: f64| x.ln()), &[0.0, 1.0], TIGHT, 500, &b).unwrap();
        assert!(e.converged);
        assert!((e.value + 1.0).abs() < 1e-12);
        assert!((e.value + 1.0).abs() <= e.error.max(1e-15) * 10.0);
    }

    #[test]
    fn reversed_interval_changes_sign() {
        let b = Budget::new(10_000);
        let e = integrate(plain(f64::exp), &[1.0, 0.0], TIGHT, 100, &b).unwrap();
        assert!((e.value + (1f64.exp() - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn carried_uncertainty_adds_to_error() {
        let b = Budget::new(10_000);
        let e = integrate(|_x| Ok((1.0, 1e-6)), &[0.0, 2.0], TIGHT, 10, &b).unwrap();
        assert!((e.error - 2e-6).abs() < 1e-12);
    }

    #[test]
    fn budget_is_enforced() {
        let b = Budget::new(100);
        let r = integrate(
            plain(|x: f64| x.sqrt().sin() / x),
            &[0.0, 1.0],
            TIGHT,
            1000,
            &b,
        );
        assert!(matches!(r, Err(Error::BudgetExceeded(100))));
    }

    #[test]
    fn pairwise_sum_matches_naive_on_small_input() {
        assert_eq!(pairwise_sum(&[1.0, 2.0, 3.0, 4.0, 5.0]), 15.0);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }
}
