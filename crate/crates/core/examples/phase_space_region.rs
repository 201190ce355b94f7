//! Limits of the (y, z) region for a massive pair and a light third particle.
//!
//! ```bash
//! cargo run --example phase_space_region
//! ```

use dilogint::kinematics::{Kinematics, PhasePoint};

fn main() -> dilogint::Result<()> {
    let kin = Kinematics::new(0.25, 1e-4)?;
    let (lo, hi) = kin.y_limits();
    println!("xi = {}, lambda = {}", kin.xi(), kin.lambda());
    println!(
        "y in [{lo:.6}, {hi:.6}], apex of z+ at y = {:.6}",
        kin.apex()
    );

    for i in 0..=8 {
        let y = lo + (hi - lo) * f64::from(i) / 8.0;
        let (zm, zp) = kin.z_limits(y)?;
        let (gm, gp) = kin.z_gaps(y)?;
        println!("y = {y:.5}  z in [{zm:.6}, {zp:.6}]  distance to 1-sqrt(xi): {gm:.3e}, {gp:.3e}");
    }

    // the region is symmetric under y <-> z
    let p = PhasePoint::new(0.2, 0.3);
    assert_eq!(kin.contains(p), kin.contains(p.swapped()));

    // and collapses to a point at both ends of the y range
    for y in [lo, hi] {
        let (zm, zp) = kin.z_limits(y)?;
        println!("width at y = {y:.6}: {:.1e}", zp - zm);
    }
    Ok(())
}
