//! Phase-space geometry in the invariants `y`, `z`.
//!
//! The region is bounded by `y₋ = √Λ·√ξ + Λ <= y <= y₊ = 1 - √ξ` and, for each
//! `y`, by the two branches
//!
//! ```text
//! z± = 2y/(4y+ξ) · [1 - y - ξ/2 + Λ + Λ/y]  ±  2/(4y+ξ) · √((1-y)²-ξ) · √((y-Λ)²-Λξ)
//! ```
//!
//! `y₋` is the root of the second radicand, so the region is symmetric under
//! `y ↔ z`: its extent in `z` is again `[y₋, y₊]`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Radicands in `[-RADICAND_SLACK, 0)` are boundary rounding and clamp to zero.
pub const RADICAND_SLACK: f64 = 1e-12;

/// Regulator pair `ξ = 4m²/q²`, `Λ = m₃²/q²` and the derived `v = √(1-ξ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Kinematics {
    xi: f64,
    lambda: f64,
    sqrt_xi: f64,
    v: f64,
}

/// A point `(y, z)` of the two-dimensional phase space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    pub y: f64,
    pub z: f64,
}

impl PhasePoint {
    pub fn new(y: f64, z: f64) -> Self {
        PhasePoint { y, z }
    }

    pub fn swapped(self) -> Self {
        PhasePoint {
            y: self.z,
            z: self.y,
        }
    }
}

impl Kinematics {
    /// Validates `0 < ξ < 1`, `Λ >= 0` and a non-empty region.
    ///
    /// `ξ = 0` (the collinear-singular triangle) is only reachable as a limit.
    pub fn new(xi: f64, lambda: f64) -> Result<Self> {
        if !(xi > 0.0 && xi < 1.0) {
            return Err(Error::InvalidKinematics(format!(
                "xi = {xi} must lie in (0, 1)"
            )));
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidKinematics(format!(
                "lambda = {lambda} must be finite and >= 0"
            )));
        }
        let sqrt_xi = xi.sqrt();
        let y_minus = (lambda * xi).sqrt() + lambda;
        if y_minus >= 1.0 - sqrt_xi {
            return Err(Error::InvalidKinematics(format!(
                "empty phase space: y- = {y_minus} >= y+ = {}",
                1.0 - sqrt_xi
            )));
        }
        Ok(Kinematics {
            xi,
            lambda,
            sqrt_xi,
            v: (1.0 - xi).sqrt(),
        })
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn sqrt_xi(&self) -> f64 {
        self.sqrt_xi
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    /// The same `ξ` with `Λ = 0`.
    pub fn massless_third(&self) -> Kinematics {
        Kinematics {
            lambda: 0.0,
            ..*self
        }
    }

    /// `(y₋, y₊)`.
    pub fn y_limits(&self) -> (f64, f64) {
        (self.y_minus(), self.y_plus())
    }

    pub fn y_minus(&self) -> f64 {
        (self.lambda * self.xi).sqrt() + self.lambda
    }

    pub fn y_plus(&self) -> f64 {
        1.0 - self.sqrt_xi
    }

    /// Location `1 - √ξ` of the collinear singular line, in either variable.
    pub fn singular_line(&self) -> f64 {
        self.y_plus()
    }

    /// The `y` at which the upper branch `z₊(y)` touches `z = 1 - √ξ`.
    ///
    /// By the `y ↔ z` symmetry this is the single `z` allowed at `y = y₊`.
    /// Integrands with a `z`-kernel are non-smooth there.
    pub fn apex(&self) -> f64 {
        let y = self.y_plus();
        self.branch_centre(y)
    }

    /// `2y/(4y+ξ) · [1 - y - ξ/2 + Λ + Λ/y]`, the midpoint of the `z` range.
    fn branch_centre(&self, y: f64) -> f64 {
        let lam = self.lambda;
        let bracket = if lam == 0.0 {
            1.0 - y - 0.5 * self.xi
        } else {
            1.0 - y - 0.5 * self.xi + lam + lam / y
        };
        2.0 * y / (4.0 * y + self.xi) * bracket
    }

    /// `√((1-y)²-ξ) · √((y-Λ)²-Λξ)`, with both radicands checked.
    fn root_product(&self, y: f64) -> Result<f64> {
        let (lo, hi) = self.y_limits();
        let slack = RADICAND_SLACK * hi;
        if !(y >= lo - slack && y <= hi + slack) || (self.lambda > 0.0 && y <= 0.0) {
            return Err(Error::domain(
                "z_limits",
                format!("y = {y} outside [{lo}, {hi}]"),
            ));
        }
        // (1-y)² - ξ = (y₊ - y)(y₊ - y + 2√ξ), which keeps digits near y₊.
        let gap = hi - y;
        let first = clamp_radicand(gap * (gap + 2.0 * self.sqrt_xi), "(1-y)^2 - xi")?;
        let second = if self.lambda == 0.0 {
            // √(y²) = y for y >= 0: removes the 0/0 of Λ/y at y → 0.
            y.max(0.0)
        } else {
            // (y-Λ)² - Λξ = (y - y₋)(y - Λ + √(Λξ)), exactly zero at y₋.
            let r = (self.lambda * self.xi).sqrt();
            let t = (y - lo) * (y - self.lambda + r);
            clamp_radicand(t, "(y-lambda)^2 - lambda*xi")?.sqrt()
        };
        Ok(first.sqrt() * second)
    }

    /// `(z₋(y), z₊(y))`.
    pub fn z_limits(&self, y: f64) -> Result<(f64, f64)> {
        let root = self.root_product(y)?;
        if y == 0.0 {
            return Ok((0.0, 0.0));
        }
        let centre = self.branch_centre(y);
        let half = 2.0 / (4.0 * y + self.xi) * root;
        Ok((centre - half, centre + half))
    }

    /// Distances `(1 - √ξ - z₋, 1 - √ξ - z₊)` of the two branches from the
    /// singular line.
    ///
    /// The second is computed from
    /// `(e - z₊)(e - z₋) = (2Λ + √ξ(1-√ξ) - (2-√ξ)y)² / (4y+ξ)`, `e = 1 - √ξ`,
    /// which keeps its digits where `z₊` touches the line at the apex.
    pub fn z_gaps(&self, y: f64) -> Result<(f64, f64)> {
        let (zm, zp) = self.z_limits(y)?;
        let e = self.singular_line();
        let lower = e - zm;
        let direct = e - zp;
        let s = self.sqrt_xi;
        let t = 2.0 * self.lambda + s * e - (2.0 - s) * y;
        let upper = if lower > direct && lower > 0.0 {
            t * t / ((4.0 * y + self.xi) * lower)
        } else {
            direct
        };
        Ok((lower, upper))
    }

    /// `z₊(y) - z₋(y) = 4/(4y+ξ) · √((1-y)²-ξ) · √((y-Λ)²-Λξ)`.
    pub fn width(&self, y: f64) -> Result<f64> {
        let root = self.root_product(y)?;
        Ok(4.0 / (4.0 * y + self.xi) * root)
    }

    /// Closed-region membership test.
    pub fn contains(&self, p: PhasePoint) -> bool {
        let (lo, hi) = self.y_limits();
        if !(p.y >= lo && p.y <= hi) {
            return false;
        }
        match self.z_limits(p.y) {
            Ok((zm, zp)) => p.z >= zm && p.z <= zp,
            Err(_) => false,
        }
    }
}

fn clamp_radicand(r: f64, what: &str) -> Result<f64> {
    if r >= 0.0 {
        Ok(r)
    } else if r >= -RADICAND_SLACK {
        Ok(0.0)
    } else {
        Err(Error::domain(
            "z_limits",
            format!("negative radicand {what} = {r}"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kin(xi: f64, lambda: f64) -> Kinematics {
        Kinematics::new(xi, lambda).unwrap()
    }

    #[test]
    fn y_limits_examples() {
        assert_eq!(kin(0.25, 0.0).y_limits(), (0.0, 0.5));
        let (lo, hi) = kin(0.25, 0.01).y_limits();
        assert!((lo - 0.06).abs() < 1e-16 && hi == 0.5);
        let (lo, hi) = kin(0.81, 0.0).y_limits();
        assert_eq!(lo, 0.0);
        assert!((hi - 0.1).abs() < 1e-16);
    }

    #[test]
    fn z_limits_examples() {
        let (zm, zp) = kin(0.25, 0.0).z_limits(0.5).unwrap();
        assert!((zm - 1.0 / 6.0).abs() < 1e-15 && (zp - 1.0 / 6.0).abs() < 1e-15);

        let k = kin(0.25, 0.01);
        let (zm, zp) = k.z_limits(k.y_minus()).unwrap();
        assert!((zp - zm).abs() < 1e-12);

        let (zm, zp) = kin(0.25, 0.0).z_limits(0.25).unwrap();
        assert!((zp - zm - 0.447_213_595_499_958).abs() < 1e-12);
    }

    #[test]
    fn width_examples() {
        assert_eq!(kin(0.25, 0.0).width(0.5).unwrap(), 0.0);
        assert!((kin(0.25, 0.0).width(0.25).unwrap() - 0.447_213_595_499_958).abs() < 1e-12);
        let k = kin(0.25, 0.01);
        assert!(k.width(0.06).unwrap().abs() < 1e-7);
    }

    #[test]
    fn contains_examples() {
        let k = kin(0.25, 0.0);
        assert!(k.contains(PhasePoint::new(0.25, 0.2)));
        assert!(!k.contains(PhasePoint::new(0.9, 0.1)));
        for k in [kin(0.25, 0.0), kin(0.5, 0.003), kin(0.04, 0.1)] {
            let y = k.y_plus();
            let (_, zp) = k.z_limits(y).unwrap();
            assert!(k.contains(PhasePoint::new(y, zp)));
        }
    }

    #[test]
    fn rejects_bad_regulators() {
        assert!(Kinematics::new(0.0, 0.0).is_err());
        assert!(Kinematics::new(1.0, 0.0).is_err());
        assert!(Kinematics::new(0.25, -1e-3).is_err());
        // √Λ·√ξ + Λ >= 1 - √ξ
        assert!(Kinematics::new(0.25, 0.3).is_err());
    }

    #[test]
    fn out_of_range_y_is_a_domain_error() {
        let k = kin(0.25, 0.01);
        assert!(matches!(k.z_limits(0.6), Err(Error::Domain { .. })));
        assert!(matches!(k.z_limits(0.03), Err(Error::Domain { .. })));
        assert!(k.width(-0.1).is_err());
    }

    #[test]
    fn v_squared_plus_xi_is_one() {
        for xi in [1e-10, 0.01, 0.3, 0.999_999] {
            let k = kin(xi, 0.0);
            assert!((k.v() * k.v() + xi - 1.0).abs() < 2.0 * f64::EPSILON);
        }
    }

    #[test]
    fn apex_is_extent_of_z() {
        let k = kin(0.25, 0.0);
        let (zm, zp) = k.z_limits(k.apex()).unwrap();
        assert!((zp - k.singular_line()).abs() < 1e-12, "{zm} {zp}");
    }

    #[test]
    fn gaps_to_singular_line() {
        for k in [kin(0.25, 0.0), kin(0.5, 0.003), kin(0.04, 0.1)] {
            let e = k.singular_line();
            for y in [k.y_minus() + 1e-3, k.apex(), 0.5 * (k.apex() + k.y_plus())] {
                let (zm, zp) = k.z_limits(y).unwrap();
                let (gm, gp) = k.z_gaps(y).unwrap();
                assert!((gm - (e - zm)).abs() < 1e-15);
                assert!((gp - (e - zp)).abs() < 1e-14, "{y}: {gp} vs {}", e - zp);
                assert!(gp >= 0.0);
            }
            assert!(k.z_gaps(k.apex()).unwrap().1 < 1e-20);
        }
    }

    #[test]
    fn massless_limit_recovers_triangle() {
        for y in [0.1, 0.4, 0.8] {
            let (zm, zp) = kin(1e-10, 0.0).z_limits(y).unwrap();
            assert!(zm.abs() < 1e-4 && (zp - (1.0 - y)).abs() < 1e-4);
        }
    }
}
