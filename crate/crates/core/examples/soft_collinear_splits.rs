//! Splitting terms that move the soft and collinear divergences of J into
//! integrals with elementary closed forms.
//!
//! ```bash
//! cargo run --example soft_collinear_splits
//! ```

use dilogint::closed_forms::{eval_j1, eval_j2};
use dilogint::kinematics::Kinematics;
use dilogint::regularization::{
    collinear_split_j1, soft_bracket, soft_expansion_coefficients, soft_split_j2_quadrature,
};

fn main() -> dilogint::Result<()> {
    let kin = Kinematics::new(0.25, 0.0)?;
    let (c0, c1) = soft_expansion_coefficients(&kin);
    println!("small-z expansion of the z logarithm: {c0:.12} + {c1:.12} z");

    // the subtracted bracket is O(z^2), which tames the 1/z^2
    let v4 = kin.v().powi(4);
    for z in [1e-1, 1e-2, 1e-3, 1e-4] {
        let r = soft_bracket(&kin, z, kin.y_plus() - z) / (z * z);
        println!("bracket/z^2 at z = {z:.0e}: {r:.8} (limit {:.8})", 1.0 / v4);
    }
    let q = soft_split_j2_quadrature(&kin, 1e-10)?;
    println!("J2 = {:.12} (closed {:.12})", q.value, eval_j2(&kin));

    // collinear: the gap to the expansion shrinks like sqrt(lambda)
    for lambda in [1e-6, 1e-8, 1e-10] {
        let k = Kinematics::new(0.25, lambda)?;
        let (singular, finite) = collinear_split_j1(&k)?;
        let gap = singular + finite - eval_j1(&k).value(lambda);
        println!(
            "lambda = {lambda:.0e}: {singular:.6} + {finite:.6}, gap {gap:.3e} = {:.2} sqrt(lambda)",
            gap / lambda.sqrt()
        );
    }
    Ok(())
}
