//! The quadrature oracle: nested Gauss-Kronrod over the curved region, and
//! the one-dimensional form with the z integral done in closed form.
//!
//! ```bash
//! cargo run --example nested_quadrature
//! ```

use dilogint::integrand::{classify_divergence, IntegralKind, MonomialSum};
use dilogint::kinematics::Kinematics;
use dilogint::quadrature::{integrate2d, integrate_auto, integrate_reduced};
use dilogint::Error;

fn main() -> dilogint::Result<()> {
    let kin = Kinematics::new(0.25, 1e-3)?;
    let f: MonomialSum = "2*y^1*z^0,-1*y^0*z^1".parse()?;

    for kind in ["0,0", "1,0", "1,1", "2,1"] {
        let kind: IntegralKind = kind.parse()?;
        let full = integrate2d(&kin, kind, &f, 1e-10)?;
        let line = match integrate_reduced(&kin, kind, &f, 1e-10) {
            Ok(q) => format!("{:.15} ({} calls)", q.value, q.evaluations),
            Err(Error::UnsupportedReduction { .. }) => "no closed inner integral".into(),
            Err(e) => return Err(e),
        };
        println!(
            "({kind}) 2D {:.15} +/- {:.1e} ({} calls) | 1D {line}",
            full.value, full.error_estimate, full.evaluations
        );
    }

    // y <-> z symmetry: (m,n) with y^a z^b equals (n,m) with y^b z^a
    let kind: IntegralKind = "2,1".parse()?;
    let a = integrate_auto(&kin, kind, &f, 1e-10)?;
    let b = integrate_auto(&kin, kind.swapped(), &f.swapped(), 1e-10)?;
    println!("symmetry: {:.15} vs {:.15}", a.value, b.value);

    // soft-divergent prefactors need lambda > 0
    let soft: MonomialSum = "1*y^-1*z^-1".parse()?;
    println!("1/(yz): {:?}", classify_divergence(kind, &soft));
    let massless = kin.massless_third();
    match integrate2d(&massless, kind, &soft, 1e-8) {
        Err(e) => println!("at lambda = 0: {e}"),
        Ok(q) => println!("unexpected value {}", q.value),
    }
    Ok(())
}
