use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::level::Level;
use crate::spectra::jacobi::JacobiSequence;

/// `√(z² − c)` on the branch that behaves like `z` at infinity, cut on `[−√c, √c]`.
pub fn sqrt_branch(z: Complex64, c: f64) -> Complex64 {
    z * (Complex64::new(1.0, 0.0) - c / (z * z)).sqrt()
}

/// Edge of the continuous spectrum at `level`.
pub fn support_edge(level: Level) -> f64 {
    match level {
        Level::Finite(_) => SQRT_2,
        Level::Infinite => 2.0,
    }
}

/// Cauchy transform of the central limit law at `level`, via
/// `G⁽¹⁾(z) = 1/√(z² − 2)`, `G⁽ᵐ⁾ = 1/(z − G⁽ᵐ⁻¹⁾)`; the free case is the semicircle.
/// Real points on the cut are rejected; use [`cauchy_boundary`] there.
pub fn cauchy(level: Level, z: Complex64) -> Result<Complex64> {
    let edge = support_edge(level);
    if z.im == 0.0 && z.re.abs() <= edge {
        return Err(Error::OnBranchCut { lo: -edge, hi: edge });
    }
    Ok(match level {
        Level::Finite(m) => climb(sqrt_branch(z, 2.0).inv(), z, m),
        Level::Infinite => 2.0 / (z + sqrt_branch(z, 4.0)),
    })
}

fn climb(g1: Complex64, z: Complex64, m: u32) -> Complex64 {
    let mut g = g1;
    for _ in 1..m {
        g = (z - g).inv();
    }
    g
}

/// Limit of the Cauchy transform at `x + i0⁺` for real `x` inside the cut,
/// using `√(x² − 2) = i√(2 − x²)` on the upper side.
pub fn cauchy_boundary(level: Level, x: f64) -> Complex64 {
    let edge = support_edge(level);
    let z = Complex64::new(x, 0.0);
    if x.abs() >= edge {
        return cauchy(level, Complex64::new(x, 0.0)).unwrap_or(Complex64::new(f64::INFINITY, 0.0));
    }
    match level {
        Level::Finite(m) => {
            let root = Complex64::new(0.0, (2.0 - x * x).sqrt());
            climb(root.inv(), z, m)
        }
        Level::Infinite => Complex64::new(x / 2.0, -(4.0 - x * x).sqrt() / 2.0),
    }
}

/// Density of the absolutely continuous part, `−Im G(x + i0⁺)/π`.
pub fn density(level: Level, x: f64) -> f64 {
    if x.abs() >= support_edge(level) {
        return 0.0;
    }
    (-cauchy_boundary(level, x).im / PI).max(0.0)
}

/// Continued fraction `1/(z − β₁/(z − β₂/(z − ..)))` with the constant tail
/// summed in closed form.
pub fn cauchy_continued_fraction(seq: &JacobiSequence<f64>, z: Complex64) -> Complex64 {
    let beta = *seq.tail();
    // K = 1/(z − βK) on the decaying branch.
    let mut k = 2.0 / (z + sqrt_branch(z, 4.0 * beta));
    for &b in seq.prefix().iter().rev() {
        k = (z - b * k).inv();
    }
    k
}

/// Moments `∮ zⁿ G(z) dz / 2πi` by the trapezoid rule on the circle `|z| = radius`.
pub fn contour_moments(g: impl Fn(Complex64) -> Complex64, radius: f64, points: usize, max_order: usize) -> Vec<f64> {
    let samples: Vec<(Complex64, Complex64)> = (0..points)
        .map(|k| {
            let z = Complex64::from_polar(radius, 2.0 * PI * (k as f64 + 0.5) / points as f64);
            (z, g(z))
        })
        .collect();
    (0..=max_order)
        .map(|n| {
            let sum: Complex64 = samples.iter().map(|&(z, gz)| z.powu(n as u32 + 1) * gz).sum();
            sum.re / points as f64
        })
        .collect()
}

/// Truncated expansion `Σ μₙ z^{−n−1}` at infinity.
pub fn asymptotic_series(moments: &[f64], z: Complex64) -> Complex64 {
    let w = z.inv();
    moments.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &mu| acc * w + mu) * w
}
