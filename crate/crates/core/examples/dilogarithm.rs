//! Real dilogarithm on and off the real branch.
//!
//! ```bash
//! cargo run --example dilogarithm
//! ```

use std::f64::consts::PI;

use dilogint::dilog::{li2, li2_real_part, ZETA2};

fn main() -> dilogint::Result<()> {
    for x in [-1e6, -10.0, -1.0, -0.5, 0.0, 0.25, 0.5, 0.9, 1.0] {
        println!("Li2({x:>8}) = {:.16e}", li2(x)?);
    }

    // reflection and inversion, the two identities the reduction leans on
    let x: f64 = 0.3;
    let refl = li2(x)? + li2(1.0 - x)? - (ZETA2 - x.ln() * (1.0 - x).ln());
    let inv = li2(-4.0)? + li2(-0.25)? + ZETA2 + 0.5 * 4f64.ln().powi(2);
    println!("reflection residual at 0.3: {refl:.2e}");
    println!("inversion residual at -4:   {inv:.2e}");

    // x > 1 is off the branch; the real part of the continuation is available
    assert!(li2(2.0).is_err());
    println!(
        "Re Li2(2) = {:.16} (pi^2/4 = {:.16})",
        li2_real_part(2.0)?,
        PI * PI / 4.0
    );
    Ok(())
}
