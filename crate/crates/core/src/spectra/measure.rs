use std::f64::consts::{FRAC_PI_2, SQRT_2};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::level::Level;
use crate::spectra::cauchy::{density, support_edge};

const SCAN_STEP: f64 = 1.0 / 64.0;
const SCAN_END: f64 = 4.0;
const BISECT_WIDTH: f64 = 1e-12;

/// Point mass of a central limit law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Atom {
    pub location: f64,
    pub mass: f64,
}

/// Absolutely continuous part plus atoms of the central limit law at `level`.
#[derive(Debug, Clone)]
pub struct MeasureSummary {
    pub level: Level,
    pub support: (f64, f64),
    pub atoms: Vec<Atom>,
}

impl MeasureSummary {
    pub fn new(level: Level) -> Result<Self> {
        let edge = support_edge(level);
        Ok(MeasureSummary { level, support: (-edge, edge), atoms: atoms(level)? })
    }

    pub fn density(&self, x: f64) -> f64 {
        density(self.level, x)
    }

    /// `∫ xⁿ dμ`: quadrature over the density plus the atom contributions.
    pub fn moment(&self, n: u32) -> f64 {
        let level = self.level;
        let continuous = integrate_on_support(support_edge(level), |x| density(level, x) * x.powi(n as i32));
        continuous + self.atoms.iter().map(|a| a.mass * a.location.powi(n as i32)).sum::<f64>()
    }

    pub fn total_mass(&self) -> f64 {
        self.moment(0)
    }

    pub fn continuous_mass(&self) -> f64 {
        let level = self.level;
        integrate_on_support(support_edge(level), |x| density(level, x))
    }
}

/// `∫_{−r}^{r} f(x) dx` after substituting `x = r·sin θ`, which absorbs the
/// square-root endpoint behavior of the densities.
pub fn integrate_on_support(r: f64, f: impl Fn(f64) -> f64) -> f64 {
    adaptive_kronrod(&|t: f64| f(r * t.sin()) * r * t.cos(), -FRAC_PI_2, FRAC_PI_2, 1e-13, 0)
}

// 15-point Kronrod nodes and weights, with the embedded 7-point Gauss weights.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn kronrod_15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let pair = f(c - h * XGK[i]) + f(c + h * XGK[i]);
        k += WGK[i] * pair;
        if i % 2 == 1 {
            g += WG[i / 2] * pair;
        }
    }
    (k * h, (k - g).abs() * h)
}

fn adaptive_kronrod(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (value, err) = kronrod_15(f, a, b);
    // Round-off in the density near the edges keeps the estimate from ever
    // reaching tiny tolerances, hence the relative floor and the depth cap.
    if err <= tol || err <= 64.0 * f64::EPSILON * value.abs() || depth >= 20 {
        return value;
    }
    let mid = 0.5 * (a + b);
    adaptive_kronrod(f, a, mid, tol / 2.0, depth + 1) + adaptive_kronrod(f, mid, b, tol / 2.0, depth + 1)
}

/// `G⁽ᵏ⁾(x)` and its derivative for real `x > √2`.
fn real_cauchy_with_derivative(k: u32, x: f64) -> (f64, f64) {
    let s = x * x - 2.0;
    let mut g = 1.0 / s.sqrt();
    let mut dg = -x / (s * s.sqrt());
    for _ in 1..k {
        let next = 1.0 / (x - g);
        dg = -next * next * (1.0 - dg);
        g = next;
    }
    (g, dg)
}

/// Denominator `x − G⁽ᵐ⁻¹⁾(x)` of `G⁽ᵐ⁾` and its derivative.
fn denominator(m: u32, x: f64) -> (f64, f64) {
    let (g, dg) = real_cauchy_with_derivative(m - 1, x);
    (x - g, 1.0 - dg)
}

/// Atoms of the central limit law at `level`: real poles of `G⁽ᵐ⁾` outside
/// the cut, found by scanning `(√2, 4]` for sign changes of the denominator and
/// bisecting; masses are residues `1/D'(x₀)`.
pub fn atoms(level: Level) -> Result<Vec<Atom>> {
    let m = match level {
        Level::Finite(m) if m >= 2 => m,
        _ => return Ok(Vec::new()),
    };
    let d = |x: f64| denominator(m, x).0;
    let mut positive = Vec::new();
    let mut k = 1;
    loop {
        let lo = SQRT_2 + (k as f64) * SCAN_STEP;
        let hi = lo + SCAN_STEP;
        if hi > SCAN_END {
            break;
        }
        k += 1;
        let (dlo, dhi) = (d(lo), d(hi));
        if !dlo.is_finite() || !dhi.is_finite() || dlo.signum() == dhi.signum() {
            continue;
        }
        let x0 = bisect(&d, lo, hi, dlo);
        let (value, slope) = denominator(m, x0);
        if value.abs() < 1e-6 {
            positive.push(Atom { location: x0, mass: 1.0 / slope });
        } else if value.abs() < 1e3 {
            return Err(Error::RootSearch {
                lo,
                hi,
                reason: format!("bisection ended at {x0} with denominator {value}"),
            });
        }
        // Otherwise the sign change came from a pole of the denominator.
    }
    let mut all: Vec<Atom> = positive
        .iter()
        .map(|a| Atom { location: -a.location, mass: a.mass })
        .rev()
        .collect();
    all.extend(positive);
    Ok(all)
}

fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut flo: f64) -> f64 {
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::jacobi::clt_moment;
    use crate::Scalar;

    #[test]
    fn level_two_atoms() {
        let a = atoms(Level::Finite(2)).unwrap();
        assert_eq!(a.len(), 2);
        let x = (SQRT_2 + 1.0).sqrt();
        assert!((a[1].location - x).abs() < 1e-10);
        assert!((a[0].location + x).abs() < 1e-10);
        for atom in &a {
            assert!((atom.mass - (2.0 - SQRT_2) / 4.0).abs() < 1e-10);
        }
    }

    #[test]
    fn no_atoms_at_the_ends_of_the_hierarchy() {
        assert!(atoms(Level::Finite(1)).unwrap().is_empty());
        assert!(atoms(Level::Infinite).unwrap().is_empty());
    }

    #[test]
    fn masses_and_moments() {
        for level in [Level::Finite(1), Level::Finite(2), Level::Finite(3), Level::Finite(4), Level::Infinite] {
            let mu = MeasureSummary::new(level).unwrap();
            assert!((mu.total_mass() - 1.0).abs() < 1e-8, "{level}: {}", mu.total_mass());
            for n in 1..=8 {
                assert!((mu.moment(n) - clt_moment(level, n as usize).to_f64()).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn quadrature_of_polynomials() {
        let v = integrate_on_support(1.0, |x| x * x);
        assert!((v - 2.0 / 3.0).abs() < 1e-13);
    }
}
