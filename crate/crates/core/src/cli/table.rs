//! Grid tables of closed form against quadrature.

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{eval_i, eval_j, eval_j1, eval_j2};
use crate::error::{Error, Result};
use crate::integrand::{IntegralKind, MonomialSum};
use crate::kinematics::Kinematics;
use crate::quadrature::{integrate2d, integrate_auto, integrate_reduced, QuadResult};
use crate::regularization::soft_split_j2_quadrature;

use super::args::{Format, TableIntegral};

pub const CSV_HEADER: &str = "integral,xi,lambda,closed,quad,quad_err,abs_diff,error";

#[derive(Debug, Clone, PartialEq)]
pub enum Integral {
    I,
    J,
    J1,
    J2,
    Generic { kind: IntegralKind, f: MonomialSum },
}

impl Integral {
    pub fn label(&self) -> String {
        match self {
            Integral::I => "I".into(),
            Integral::J => "J".into(),
            Integral::J1 => "J1".into(),
            Integral::J2 => "J2".into(),
            Integral::Generic { kind, f } => format!("({kind}) f={f}"),
        }
    }

    pub(crate) fn from_args(
        which: TableIntegral,
        kind: Option<&str>,
        f: Option<&str>,
    ) -> Result<Self> {
        Ok(match which {
            TableIntegral::I => Integral::I,
            TableIntegral::J => Integral::J,
            TableIntegral::J1 => Integral::J1,
            TableIntegral::J2 => Integral::J2,
            TableIntegral::Generic => Integral::Generic {
                kind: kind
                    .ok_or_else(|| {
                        Error::InvalidRequest("--integral generic needs --type m,n".into())
                    })?
                    .parse()?,
                f: f.unwrap_or("1").parse()?,
            },
        })
    }

    /// Built-in `Λ` grid: zero where the integral is finite there.
    pub fn default_lambda_grid(&self) -> Vec<f64> {
        match self {
            Integral::J | Integral::J1 => vec![1e-8, 1e-6, 1e-4],
            _ => vec![0.0],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRequest {
    pub integral: Integral,
    pub xi_grid: Vec<f64>,
    pub lambda_grid: Vec<f64>,
    pub tol: f64,
    pub format: Format,
}

impl TableRequest {
    pub fn validate(&self) -> Result<()> {
        check_grid("xi", &self.xi_grid, |x| x > 0.0 && x < 1.0)?;
        check_grid("lambda", &self.lambda_grid, |l| l >= 0.0 && l.is_finite())?;
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidRequest(format!(
                "tol = {} must be > 0",
                self.tol
            )));
        }
        Ok(())
    }
}

fn check_grid(name: &str, grid: &[f64], in_domain: impl Fn(f64) -> bool) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidRequest(format!("{name} grid is empty")));
    }
    if let Some(&bad) = grid.iter().find(|&&x| !in_domain(x)) {
        return Err(Error::InvalidRequest(format!(
            "{name} = {bad} outside its domain"
        )));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidRequest(format!(
            "{name} grid must be strictly increasing"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub integral: String,
    pub xi: f64,
    pub lambda: f64,
    pub closed: Option<f64>,
    pub quad: Option<f64>,
    pub quad_err: Option<f64>,
    pub abs_diff: Option<f64>,
    pub error: Option<String>,
}

/// Computes every row, in parallel, returned `xi`-major.
pub fn compute(req: &TableRequest) -> Result<Vec<Row>> {
    req.validate()?;
    let points: Vec<(f64, f64)> = req
        .xi_grid
        .iter()
        .flat_map(|&xi| req.lambda_grid.iter().map(move |&l| (xi, l)))
        .collect();
    Ok(points
        .par_iter()
        .map(|&(xi, lambda)| row(&req.integral, xi, lambda, req.tol))
        .collect())
}

fn row(integral: &Integral, xi: f64, lambda: f64, tol: f64) -> Row {
    let mut out = Row {
        integral: integral.label(),
        xi,
        lambda,
        closed: None,
        quad: None,
        quad_err: None,
        abs_diff: None,
        error: None,
    };
    let kin = match Kinematics::new(xi, lambda) {
        Ok(k) => k,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    let mut errors = Vec::new();
    match closed_value(integral, &kin) {
        Ok(v) => out.closed = v,
        Err(e) => errors.push(e.to_string()),
    }
    match quad_value(integral, &kin, tol) {
        Ok(q) => {
            out.quad = Some(q.value);
            out.quad_err = Some(q.error_estimate);
        }
        Err(Error::NotConverged { tol, best }) => {
            out.quad = Some(best.value);
            out.quad_err = Some(best.error_estimate);
            errors.push(format!("tolerance {tol:e} not reached"));
        }
        Err(e) => errors.push(e.to_string()),
    }
    if let (Some(c), Some(q)) = (out.closed, out.quad) {
        out.abs_diff = Some((c - q).abs());
    }
    if !errors.is_empty() {
        out.error = Some(errors.join("; "));
    }
    out
}

fn closed_value(integral: &Integral, kin: &Kinematics) -> Result<Option<f64>> {
    let at_zero = |name: &str| {
        if kin.lambda() == 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidRequest(format!(
                "closed form of {name} is defined at lambda = 0"
            )))
        }
    };
    let regulated = |name: &str| {
        if kin.lambda() > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidRequest(format!(
                "{name} diverges at lambda = 0"
            )))
        }
    };
    Ok(match integral {
        Integral::I => {
            at_zero("I")?;
            Some(eval_i(kin))
        }
        Integral::J2 => {
            at_zero("J2")?;
            Some(eval_j2(kin))
        }
        Integral::J1 => {
            regulated("J1")?;
            Some(eval_j1(kin).value(kin.lambda()))
        }
        Integral::J => {
            regulated("J")?;
            Some(eval_j(kin).value(kin.lambda()))
        }
        Integral::Generic { .. } => None,
    })
}

/// The quadrature oracle behind each named integral.
pub fn quad_value(integral: &Integral, kin: &Kinematics, tol: f64) -> Result<QuadResult> {
    let inv_y2 = || MonomialSum::monomial(1.0, -2, 0);
    match integral {
        Integral::I => integrate2d(kin, IntegralKind::new(2, 1)?, &MonomialSum::one(), tol),
        Integral::J2 => soft_split_j2_quadrature(&kin.massless_third(), tol),
        Integral::J1 => integrate_reduced(kin, IntegralKind::new(1, 0)?, &inv_y2()?, tol),
        // J with y and z exchanged, so the z integral has a closed form
        Integral::J => integrate_reduced(kin, IntegralKind::new(1, 2)?, &inv_y2()?, tol),
        Integral::Generic { kind, f } => integrate_auto(kin, *kind, f, tol),
    }
}

fn num(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.16e}")).unwrap_or_default()
}

pub fn render(rows: &[Row], format: Format) -> Result<String> {
    match format {
        Format::Csv => {
            let io = |e: csv::Error| Error::InvalidRequest(format!("csv: {e}"));
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER.split(',')).map_err(io)?;
            for r in rows {
                w.write_record([
                    r.integral.clone(),
                    format!("{:.16e}", r.xi),
                    format!("{:.16e}", r.lambda),
                    num(r.closed),
                    num(r.quad),
                    num(r.quad_err),
                    num(r.abs_diff),
                    r.error.clone().unwrap_or_default(),
                ])
                .map_err(io)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Error::InvalidRequest(format!("csv: {e}")))?;
            String::from_utf8(bytes).map_err(|e| Error::InvalidRequest(format!("csv: {e}")))
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows)
                .map_err(|e| Error::InvalidRequest(format!("json: {e}")))?;
            s.push('\n');
            Ok(s)
        }
    }
}
