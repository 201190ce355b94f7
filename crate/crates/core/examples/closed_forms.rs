//! Closed forms for I, J2, J1 and J against the quadrature oracle.
//!
//! ```bash
//! cargo run --example closed_forms
//! ```

use dilogint::closed_forms::{eval_i, eval_j, eval_j1, eval_j2};
use dilogint::integrand::{IntegralKind, MonomialSum};
use dilogint::kinematics::Kinematics;
use dilogint::quadrature::{integrate2d, integrate_reduced};
use dilogint::regularization::soft_split_j2_quadrature;

fn main() -> dilogint::Result<()> {
    let kind = IntegralKind::new(2, 1)?;
    println!(
        "{:>6} {:>22} {:>22} {:>10}",
        "xi", "I closed", "I quadrature", "diff"
    );
    for xi in [0.01, 0.1, 0.25, 0.5, 0.9] {
        let kin = Kinematics::new(xi, 0.0)?;
        let q = integrate2d(&kin, kind, &MonomialSum::one(), 1e-10)?;
        let c = eval_i(&kin);
        println!(
            "{xi:>6} {c:>22.16} {:>22.16} {:>10.1e}",
            q.value,
            c - q.value
        );
    }

    let kin = Kinematics::new(0.25, 0.0)?;
    let q = soft_split_j2_quadrature(&kin, 1e-10)?;
    println!(
        "\nJ2 at xi = 0.25: {:.14} vs {:.14}",
        eval_j2(&kin),
        q.value
    );

    // J1 and J diverge like ln(lambda); the expansion drops terms of order sqrt(lambda)
    let inv_y2 = MonomialSum::monomial(1.0, -2, 0)?;
    for lambda in [1e-4, 1e-6, 1e-8] {
        let kin = Kinematics::new(0.25, lambda)?;
        let j1 = eval_j1(&kin);
        let j = eval_j(&kin);
        let q1 = integrate_reduced(&kin, IntegralKind::new(1, 0)?, &inv_y2, 1e-10)?;
        let qj = integrate_reduced(&kin, IntegralKind::new(1, 2)?, &inv_y2, 1e-10)?;
        println!(
            "lambda = {lambda:.0e}: J1 {:.6} vs {:.6}, J {:.6} vs {:.6}",
            j1.value(lambda),
            q1.value,
            j.value(lambda),
            qj.value
        );
    }
    let kin = Kinematics::new(0.25, 1e-6)?;
    println!(
        "J = {:.6} ln(lambda) + {:.6}",
        eval_j(&kin).log_coeff,
        eval_j(&kin).const_part
    );
    Ok(())
}
