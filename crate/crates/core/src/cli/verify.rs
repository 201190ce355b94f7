//! Self-check suites behind `dilogint verify`.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closed_forms::{
    eval_i, eval_j1, eval_j2, i_dilog_arguments, j2_dilog_arguments, on_real_branch,
};
use crate::dilog::{li2, ZETA2};
use crate::error::Result;
use crate::integrand::{IntegralKind, MonomialSum};
use crate::kinematics::{Kinematics, PhasePoint};
use crate::quadrature::{integrate2d, integrate_1d};
use crate::regularization::{
    collinear_split_j1, eval_i_k_representation, eval_i_parts, k_substitution, soft_bracket,
    soft_expansion_coefficients, soft_split_j2_quadrature, Branch, CutParameter,
};

use super::args::Suite;

/// Random arguments per dilogarithm identity.
pub const IDENTITY_SAMPLES: usize = 10_000;
pub const ORACLE_XI_GRID: [f64; 7] = [0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
    pub note: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            residual,
            threshold,
            // NaN residuals fail
            passed: residual <= threshold,
            note: None,
        }
    }

    fn failed(name: impl Into<String>, threshold: f64, err: impl fmt::Display) -> Self {
        Check {
            name: name.into(),
            residual: f64::INFINITY,
            threshold,
            passed: false,
            note: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{} {:<44} residual {:>10.3e}  threshold {:.1e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.residual,
                c.threshold
            )?;
            if let Some(n) = &c.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub identity_tol: f64,
    pub quad_tol: f64,
    pub seed: u64,
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Report {
    let mut report = Report::default();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let all = suite == Suite::All;
    if all || suite == Suite::Dilog {
        dilog_suite(&mut report, opts.identity_tol, &mut rng);
    }
    if all || suite == Suite::Kinematics {
        kinematics_suite(&mut report, &mut rng);
    }
    if all || suite == Suite::ClosedForms {
        closed_forms_suite(&mut report, opts.quad_tol);
    }
    if all || suite == Suite::Regularization {
        regularization_suite(&mut report);
    }
    report
}

fn max_residual(
    n: usize,
    rng: &mut ChaCha8Rng,
    mut sample: impl FnMut(&mut ChaCha8Rng) -> f64,
    mut residual: impl FnMut(f64) -> Result<f64>,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let r = residual(sample(rng))?;
        if r.is_nan() || r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

fn push(report: &mut Report, name: &str, threshold: f64, r: Result<f64>) {
    report.checks.push(match r {
        Ok(v) => Check::new(name, v, threshold),
        Err(e) => Check::failed(name, threshold, e),
    });
}

fn dilog_suite(report: &mut Report, tol: f64, rng: &mut ChaCha8Rng) {
    let n = IDENTITY_SAMPLES;
    let r = max_residual(
        n,
        rng,
        |g| g.gen_range(0.0..1.0),
        |x| Ok((li2(x)? + li2(1.0 - x)? - (ZETA2 - x.ln() * (1.0 - x).ln())).abs()),
    );
    push(report, "dilog/reflection", tol, r);

    let r = max_residual(
        n,
        rng,
        |g| -g.gen_range(0.0f64..8.0).exp(),
        |x| {
            let l = (-x).ln();
            Ok((li2(x)? + li2(1.0 / x)? + ZETA2 + 0.5 * l * l).abs())
        },
    );
    push(report, "dilog/inversion", tol, r);

    let r = max_residual(
        n,
        rng,
        |g| g.gen_range(-3.0..0.9),
        |x| {
            let l = (-x).ln_1p();
            Ok((li2(x)? + li2(x / (x - 1.0))? + 0.5 * l * l).abs())
        },
    );
    push(report, "dilog/landen", tol, r);

    let r = max_residual(
        n,
        rng,
        |g| g.gen_range(-1.0..1.0),
        |x| Ok((li2(x)? + li2(-x)? - 0.5 * li2(x * x)?).abs()),
    );
    push(report, "dilog/duplication", tol, r);

    let special = || -> Result<f64> {
        let ln2 = 2f64.ln();
        Ok([
            li2(1.0)? - PI * PI / 6.0,
            li2(-1.0)? + PI * PI / 12.0,
            li2(0.5)? - (PI * PI / 12.0 - 0.5 * ln2 * ln2),
        ]
        .iter()
        .fold(0.0, |m, d| m.max(d.abs())))
    };
    push(report, "dilog/special-values", 1e-14, special());
}

/// `(ξ, Λ)` with a non-empty region, `Λ` log-uniform or zero.
pub fn random_kinematics(rng: &mut ChaCha8Rng) -> Kinematics {
    loop {
        let xi = rng.gen_range(0.01..0.95);
        let lambda = if rng.gen_bool(0.2) {
            0.0
        } else {
            10f64.powf(rng.gen_range(-8.0..-2.0))
        };
        if let Ok(k) = Kinematics::new(xi, lambda) {
            return k;
        }
    }
}

fn kinematics_suite(report: &mut Report, rng: &mut ChaCha8Rng) {
    let kins: Vec<Kinematics> = (0..20).map(|_| random_kinematics(rng)).collect();

    let mut mismatches = 0usize;
    for k in &kins {
        for _ in 0..10_000 {
            let p = PhasePoint::new(rng.gen_range(-0.05..1.0), rng.gen_range(-0.05..1.0));
            if k.contains(p) != k.contains(p.swapped()) {
                mismatches += 1;
            }
        }
    }
    push(
        report,
        "kinematics/contains-symmetry",
        0.0,
        Ok(mismatches as f64),
    );

    let collapse = || -> Result<f64> {
        let mut worst: f64 = 0.0;
        for k in &kins {
            for y in [k.y_minus(), k.y_plus()] {
                let (zm, zp) = k.z_limits(y)?;
                worst = worst.max((zp - zm).abs());
            }
        }
        Ok(worst)
    };
    push(report, "kinematics/boundary-collapse", 1e-12, collapse());

    // central difference of ln((1-z-√ξ)/(1-z+√ξ)) at z = 0, step scaled to the
    // distance to the singular line
    let c1 = (0..50).fold(0.0f64, |worst, _| {
        let k = Kinematics::new(rng.gen_range(0.01..0.9), 0.0).expect("xi in range");
        let s = k.sqrt_xi();
        let g = |z: f64| ((1.0 - z - s) / (1.0 - z + s)).ln();
        let h = 1e-6 * (1.0 - s);
        let fd = (g(h) - g(-h)) / (2.0 * h);
        let (_, c1) = soft_expansion_coefficients(&k);
        worst.max((fd - c1).abs() / c1.abs().max(1.0))
    });
    push(report, "kinematics/soft-slope-c1", 1e-8, Ok(c1));

    let mut jacobian = || -> Result<f64> {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let k = Kinematics::new(rng.gen_range(0.01..0.9), 0.0)?;
            let y = rng.gen_range(0.0..0.9) * k.y_plus();
            let h = 1e-6 * (k.y_plus() - y).min(0.1);
            let root = ((1.0 - y).powi(2) - k.xi()).sqrt();
            for (branch, sign) in [(Branch::Plus, -1.0), (Branch::Minus, 1.0)] {
                let fd = (k_substitution(&k, y + h, branch)? - k_substitution(&k, y - h, branch)?)
                    / (2.0 * h);
                let exact = sign * k_substitution(&k, y, branch)? / root;
                worst = worst.max((fd - exact).abs() / exact.abs());
            }
        }
        Ok(worst)
    };
    push(report, "kinematics/k-jacobian", 1e-6, jacobian());
}

fn closed_forms_suite(report: &mut Report, tol: f64) {
    let one = MonomialSum::one();
    for xi in ORACLE_XI_GRID {
        let name = format!("closed-forms/I-vs-quadrature xi={xi}");
        let kin = Kinematics::new(xi, 0.0).expect("grid xi");
        let kind = IntegralKind::new(2, 1).expect("valid kind");
        match integrate2d(&kin, kind, &one, tol) {
            Ok(q) => {
                let c = eval_i(&kin);
                let threshold = (1e-6 * c.abs()).max(10.0 * q.error_estimate);
                report
                    .checks
                    .push(Check::new(name, (c - q.value).abs(), threshold));
            }
            Err(e) => report.checks.push(Check::failed(name, f64::NAN, e)),
        }
    }
    for xi in ORACLE_XI_GRID {
        let name = format!("closed-forms/J2-vs-quadrature xi={xi}");
        let kin = Kinematics::new(xi, 0.0).expect("grid xi");
        let r = soft_split_j2_quadrature(&kin, tol).map(|q| {
            let c = eval_j2(&kin);
            (c - q.value).abs() / c.abs()
        });
        push(report, &name, 1e-5, r);
    }

    let mut off_branch = 0usize;
    for i in 1..100 {
        let kin = Kinematics::new(f64::from(i) / 100.0, 0.0).expect("xi in range");
        let args = i_dilog_arguments(&kin)
            .into_iter()
            .chain(j2_dilog_arguments(&kin));
        off_branch += args.filter(|&x| !on_real_branch(x)).count();
    }
    push(
        report,
        "closed-forms/dilog-argument-certificate",
        0.0,
        Ok(off_branch as f64),
    );

    // the elementary second integral of the collinear split against quadrature
    let identity = || -> Result<f64> {
        let mut worst: f64 = 0.0;
        for xi in [0.1, 0.25, 0.5] {
            let kin = Kinematics::new(xi, 0.0)?;
            let closed = crate::regularization::collinear_finite_part(&kin);
            let q = integrate_1d(
                |y| Ok(4.0 / y * (1.0 / (4.0 * y + xi) - 1.0 / xi)),
                0.0,
                kin.y_plus(),
                1e-12,
            )?;
            worst = worst.max((closed - q.value).abs() / closed.abs());
        }
        Ok(worst)
    };
    push(
        report,
        "closed-forms/collinear-finite-part",
        1e-10,
        identity(),
    );
}

fn regularization_suite(report: &mut Report) {
    for xi in [0.1, 0.25, 0.5] {
        let kin = Kinematics::new(xi, 0.0).expect("xi in range");
        let cut = match CutParameter::new(&kin, 1e-3) {
            Ok(c) => c,
            Err(e) => {
                report
                    .checks
                    .push(Check::failed(format!("regularization/cut xi={xi}"), 0.0, e));
                continue;
            }
        };
        let parts = eval_i_parts(&kin, &cut);
        let rep = eval_i_k_representation(&kin, &cut);
        push(
            report,
            &format!("regularization/y-vs-k-representation xi={xi}"),
            1e-6,
            parts.clone().and_then(|(p, m)| Ok((p + m - rep?).abs())),
        );
        push(
            report,
            &format!("regularization/cut-sum-vs-I eps=1e-3 xi={xi}"),
            5e-3,
            parts.map(|(p, m)| (p + m - eval_i(&kin)).abs()),
        );
    }

    // opposite drifts of the two halves as the cut tightens
    let kin = Kinematics::new(0.25, 0.0).expect("xi in range");
    let drift = || -> Result<f64> {
        let (p1, m1) = eval_i_parts(&kin, &CutParameter::new(&kin, 1e-2)?)?;
        let (p2, m2) = eval_i_parts(&kin, &CutParameter::new(&kin, 1e-3)?)?;
        Ok(if (p2 - p1) * (m2 - m1) < 0.0 {
            0.0
        } else {
            1.0
        })
    };
    push(
        report,
        "regularization/cut-halves-drift-apart",
        0.0,
        drift(),
    );

    let small_z = || {
        let ratios: Vec<f64> = [1e-2, 1e-3, 1e-4]
            .iter()
            .map(|&z| soft_bracket(&kin, z, kin.y_plus() - z) / (z * z))
            .collect();
        (ratios[2] - ratios[1]).abs() / ratios[2].abs()
    };
    // three significant digits
    push(
        report,
        "regularization/soft-bracket-small-z",
        5e-3,
        Ok(small_z()),
    );

    // the collinear split reproduces the closed-form J1 up to a √Λ remainder
    let order = || -> Result<f64> {
        let gap = |lambda: f64| -> Result<f64> {
            let k = Kinematics::new(0.25, lambda)?;
            let (a, b) = collinear_split_j1(&k)?;
            Ok((a + b - eval_j1(&k).value(lambda)).abs())
        };
        let p = (gap(1e-8)? / gap(1e-10)?).log10() / 2.0;
        Ok((p - 0.5).abs())
    };
    push(
        report,
        "regularization/collinear-remainder-order",
        0.05,
        order(),
    );
}
