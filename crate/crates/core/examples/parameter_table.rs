//! A closed-form-versus-quadrature table over a parameter grid, written
//! as CSV.
//!
//! ```bash
//! cargo run --example parameter_table
//! ```

use dilogint::cli::args::Format;
use dilogint::cli::table::{compute, render, Integral, TableRequest};

fn main() -> dilogint::Result<()> {
    let req = TableRequest {
        integral: Integral::J1,
        xi_grid: vec![0.1, 0.25, 0.5],
        lambda_grid: vec![1e-8, 1e-6, 1e-4],
        tol: 1e-10,
        format: Format::Csv,
    };
    let rows = compute(&req)?;
    print!("{}", render(&rows, req.format)?);

    let generic = TableRequest {
        integral: Integral::Generic {
            kind: "1,1".parse()?,
            f: "1*y^1*z^1".parse()?,
        },
        xi_grid: vec![0.25],
        lambda_grid: vec![0.0, 1e-3],
        tol: 1e-10,
        format: Format::Json,
    };
    print!("{}", render(&compute(&generic)?, generic.format)?);
    Ok(())
}
