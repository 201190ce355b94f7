//! Two individually divergent halves of I whose sum stays finite as the
//! cut is removed, in y-space and after the k substitution.
//!
//! ```bash
//! cargo run --example spurious_cut
//! ```

use dilogint::closed_forms::eval_i;
use dilogint::kinematics::Kinematics;
use dilogint::regularization::{eval_i_k_representation, eval_i_parts, CutParameter};

fn main() -> dilogint::Result<()> {
    let kin = Kinematics::new(0.25, 0.0)?;
    let exact = eval_i(&kin);
    println!("I = {exact:.12}");
    for eps in [1e-2, 1e-3, 1e-4, 1e-5] {
        let cut = CutParameter::new(&kin, eps)?;
        let (plus, minus) = eval_i_parts(&kin, &cut)?;
        let k_rep = eval_i_k_representation(&kin, &cut)?;
        println!(
            "eps = {eps:.0e}: I+ = {plus:>12.6} I- = {minus:>12.6} sum - I = {:>10.3e} (k-space {:.1e})",
            plus + minus - exact,
            plus + minus - k_rep
        );
    }
    Ok(())
}
