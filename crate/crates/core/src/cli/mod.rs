//! Command-line front end. The `dilogint` binary only parses arguments and
//! hands them to [`run`].

pub mod args;
pub mod config;
pub mod table;
pub mod verify;

use serde::Serialize;
use serde_json::json;

use crate::closed_forms::{eval_i, eval_j, eval_j1, eval_j2, LambdaExpansion};
use crate::dilog::li2;
use crate::error::{Error, Result};
use crate::integrand::{IntegralKind, MonomialSum};
use crate::kinematics::Kinematics;
use crate::quadrature::{integrate2d, integrate_reduced, QuadResult};
use crate::regularization::{
    collinear_split_j1, eval_i_k_representation, eval_i_parts, soft_expansion_coefficients,
    soft_split_j2_quadrature, CutParameter,
};

pub use args::{Cli, Command};
use args::{EvalArgs, KinArgs, SplitKind, TableArgs};
use config::Config;
use table::{Integral, TableRequest};

/// What a command printed and whether it succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            success: true,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match &cli.command {
        Command::Li2 { x } => Ok(Outcome::ok(format!("{:.16e}\n", li2(*x)?))),
        Command::Region { kin, y } => region(kin, *y),
        Command::Quad {
            kin,
            kind,
            f,
            tol,
            reduced,
        } => {
            let k = kinematics(kin)?;
            let kind: IntegralKind = kind.parse()?;
            let f: MonomialSum = f.parse()?;
            let tol = config.tol(*tol);
            let q = if *reduced {
                integrate_reduced(&k, kind, &f, tol)?
            } else {
                integrate2d(&k, kind, &f, tol)?
            };
            to_json(&q)
        }
        Command::EvalI(a) => evaluate(EvalTarget::I, a, &config),
        Command::EvalJ2(a) => evaluate(EvalTarget::J2, a, &config),
        Command::EvalJ1(a) => evaluate(EvalTarget::J1, a, &config),
        Command::EvalJ(a) => evaluate(EvalTarget::J, a, &config),
        Command::Split {
            which,
            kin,
            epsilon,
        } => split(*which, kin, *epsilon, &config),
        Command::Verify { suite, tol, seed } => {
            let opts = verify::VerifyOptions {
                identity_tol: config.identity_tol(*tol),
                quad_tol: config.tol(None),
                seed: config.seed(*seed),
            };
            let report = verify::run(*suite, &opts);
            Ok(Outcome {
                stdout: report.to_string(),
                success: report.passed(),
            })
        }
        Command::Table(a) => run_table(a, &config),
    }
}

fn kinematics(k: &KinArgs) -> Result<Kinematics> {
    Kinematics::new(k.xi, k.lambda)
}

fn to_json<T: Serialize>(v: &T) -> Result<Outcome> {
    let mut s =
        serde_json::to_string_pretty(v).map_err(|e| Error::InvalidRequest(format!("json: {e}")))?;
    s.push('\n');
    Ok(Outcome::ok(s))
}

fn region(k: &KinArgs, y: Option<f64>) -> Result<Outcome> {
    let kin = kinematics(k)?;
    let mut out = json!({
        "xi": kin.xi(),
        "lambda": kin.lambda(),
        "y_minus": kin.y_minus(),
        "y_plus": kin.y_plus(),
        "apex": kin.apex(),
    });
    if let Some(y) = y {
        let (zm, zp) = kin.z_limits(y)?;
        out["y"] = json!(y);
        out["z_minus"] = json!(zm);
        out["z_plus"] = json!(zp);
    }
    to_json(&out)
}

#[derive(Debug, Clone, Copy)]
enum EvalTarget {
    I,
    J2,
    J1,
    J,
}

#[derive(Serialize)]
struct Evaluation {
    xi: f64,
    lambda: f64,
    closed_form: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion: Option<LambdaExpansion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abs_diff: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rel_diff: Option<f64>,
}

fn evaluate(target: EvalTarget, a: &EvalArgs, config: &Config) -> Result<Outcome> {
    let kin = kinematics(&a.kin)?;
    let (closed_form, expansion, integral) = match target {
        EvalTarget::I | EvalTarget::J2 => {
            if kin.lambda() != 0.0 {
                return Err(Error::InvalidRequest(
                    "this closed form is defined at lambda = 0".into(),
                ));
            }
            if let EvalTarget::I = target {
                (eval_i(&kin), None, Integral::I)
            } else {
                (eval_j2(&kin), None, Integral::J2)
            }
        }
        EvalTarget::J1 | EvalTarget::J => {
            let e = if let EvalTarget::J1 = target {
                eval_j1(&kin)
            } else {
                eval_j(&kin)
            };
            if kin.lambda() <= 0.0 {
                return Err(Error::InvalidRequest(
                    "the value diverges at lambda = 0; pass --lambda > 0".into(),
                ));
            }
            let integral = if let EvalTarget::J1 = target {
                Integral::J1
            } else {
                Integral::J
            };
            (e.value(kin.lambda()), Some(e), integral)
        }
    };
    let mut out = Evaluation {
        xi: kin.xi(),
        lambda: kin.lambda(),
        closed_form,
        expansion,
        oracle: None,
        oracle_error: None,
        abs_diff: None,
        rel_diff: None,
    };
    if a.verify {
        let q = table::quad_value(&integral, &kin, config.tol(a.tol))?;
        let d = (closed_form - q.value).abs();
        out.oracle = Some(q.value);
        out.oracle_error = Some(q.error_estimate);
        out.abs_diff = Some(d);
        out.rel_diff = Some(d / q.value.abs());
    }
    to_json(&out)
}

fn split(which: SplitKind, k: &KinArgs, epsilon: f64, config: &Config) -> Result<Outcome> {
    let kin = kinematics(k)?;
    let tol = config.tol(None);
    match which {
        SplitKind::Cut => {
            let kin = kin.massless_third();
            let cut = CutParameter::new(&kin, epsilon)?;
            let (plus, minus) = eval_i_parts(&kin, &cut)?;
            let k_rep = eval_i_k_representation(&kin, &cut)?;
            let closed = eval_i(&kin);
            to_json(&json!({
                "xi": kin.xi(),
                "epsilon": cut.epsilon(),
                "epsilon_tilde": cut.epsilon_tilde(),
                "i_plus": plus,
                "i_minus": minus,
                "sum": plus + minus,
                "k_representation": k_rep,
                "closed_form": closed,
                "residual_sum_vs_closed": plus + minus - closed,
                "residual_y_vs_k": plus + minus - k_rep,
            }))
        }
        SplitKind::Soft => {
            let massless = kin.massless_third();
            let (c0, c1) = soft_expansion_coefficients(&kin);
            let q: QuadResult = soft_split_j2_quadrature(&massless, tol)?;
            let closed = eval_j2(&massless);
            let mut out = json!({
                "xi": kin.xi(),
                "c0": c0,
                "c1": c1,
                "j2_quadrature": q.value,
                "j2_error_estimate": q.error_estimate,
                "j2_closed_form": closed,
                "residual_j2": closed - q.value,
            });
            if kin.lambda() > 0.0 {
                let lambda = kin.lambda();
                let direct = table::quad_value(&Integral::J, &kin, tol)?;
                let assembled = eval_j(&kin).value(lambda);
                out["lambda"] = json!(lambda);
                out["j_quadrature"] = json!(direct.value);
                out["j_assembled"] = json!(assembled);
                out["residual_j"] = json!(assembled - direct.value);
            }
            to_json(&out)
        }
        SplitKind::Collinear => {
            let (singular, finite) = collinear_split_j1(&kin)?;
            let closed = eval_j1(&kin).value(kin.lambda());
            let q = table::quad_value(&Integral::J1, &kin, tol)?;
            to_json(&json!({
                "xi": kin.xi(),
                "lambda": kin.lambda(),
                "singular_part": singular,
                "finite_part": finite,
                "sum": singular + finite,
                "j1_closed_form": closed,
                "j1_quadrature": q.value,
                "residual_vs_closed": singular + finite - closed,
                "residual_vs_quadrature": singular + finite - q.value,
            }))
        }
    }
}

fn run_table(a: &TableArgs, config: &Config) -> Result<Outcome> {
    let integral = Integral::from_args(a.integral, a.kind.as_deref(), a.f.as_deref())?;
    let xi_grid = a
        .xi_grid
        .clone()
        .or_else(|| config.table.xi_grid.clone())
        .unwrap_or_else(|| config::DEFAULT_XI_GRID.to_vec());
    let lambda_grid = a
        .lambda_grid
        .clone()
        .or_else(|| config.table.lambda_grid.clone())
        .unwrap_or_else(|| integral.default_lambda_grid());
    let req = TableRequest {
        integral,
        xi_grid,
        lambda_grid,
        tol: config.table_tol(a.tol),
        format: a.format,
    };
    let rows = table::compute(&req)?;
    let text = table::render(&rows, req.format)?;
    match &a.output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| {
                Error::InvalidRequest(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}
