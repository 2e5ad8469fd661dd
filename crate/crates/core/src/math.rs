//! Scalar math shim (std vs libm) and small numerical utilities:
//! Gauss–Legendre rules and the C^∞ bump used for smooth transitions.

use alloc::vec;
use alloc::vec::Vec;

pub const PI: f64 = core::f64::consts::PI;
pub const TWO_PI: f64 = 2.0 * PI;
pub const FOUR_PI: f64 = 4.0 * PI;

macro_rules! shim {
    ($name:ident, $libm:ident, 1) => {
        #[inline(always)]
        pub fn $name(x: f64) -> f64 {
            #[cfg(feature = "std")]
            {
                x.$name()
            }
            #[cfg(not(feature = "std"))]
            {
                libm::$libm(x)
            }
        }
    };
}

shim!(sqrt, sqrt, 1);
shim!(sin, sin, 1);
shim!(cos, cos, 1);
shim!(exp, exp, 1);
shim!(ln, log, 1);
shim!(abs, fabs, 1);
shim!(acos, acos, 1);
shim!(floor, floor, 1);

#[inline(always)]
pub fn atan2(y: f64, x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        y.atan2(x)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::atan2(y, x)
    }
}

#[inline(always)]
pub fn powi(x: f64, n: i32) -> f64 {
    #[cfg(feature = "std")]
    {
        x.powi(n)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::pow(x, n as f64)
    }
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
///
/// Newton iteration on the three-term recurrence; accurate to machine
/// precision for the moderate n used here (n <= a few hundred).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess for the i-th positive root.
        let mut x = cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        for _ in 0..100 {
            let (p, d) = legendre_pn(n, x);
            let dx = p / d;
            x -= dx;
            if abs(dx) < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pn(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_pn(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

/// Legendre polynomial P_n(x) and its derivative.
fn legendre_pn(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// The standard C^∞ bump exp(-1/(u(1-u))) on (0,1), zero outside.
#[inline]
pub fn bump(u: f64) -> f64 {
    if u <= 0.0 || u >= 1.0 {
        0.0
    } else {
        exp(-1.0 / (u * (1.0 - u)))
    }
}

/// Derivative of [`bump`].
#[inline]
pub fn bump_prime(u: f64) -> f64 {
    if u <= 0.0 || u >= 1.0 {
        0.0
    } else {
        let s = u * (1.0 - u);
        bump(u) * (1.0 - 2.0 * u) / (s * s)
    }
}

/// Fixed quadrature rule used for the smooth-transition integrals.
pub struct TransitionRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// ∫_0^1 bump(u) du under this rule.
    pub bump_mass: f64,
}

impl TransitionRule {
    pub fn new() -> Self {
        let (x, w) = gauss_legendre(96);
        let mut bump_mass = 0.0;
        for (xi, wi) in x.iter().zip(&w) {
            let u = 0.5 * (xi + 1.0);
            bump_mass += 0.5 * wi * bump(u);
        }
        TransitionRule { nodes: x, weights: w, bump_mass }
    }

    /// ∫_a^b f(u) du by mapping the cached rule onto [a, b].
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut acc = 0.0;
        for (xi, wi) in self.nodes.iter().zip(&self.weights) {
            acc += wi * f(mid + half * xi);
        }
        acc * half
    }

    /// Normalized bump integral S(u) = ∫_0^u bump / ∫_0^1 bump, the smooth
    /// step: S(0) = 0, S(1) = 1, flat to all orders at both ends.
    pub fn smoothstep(&self, u: f64) -> f64 {
        if u <= 0.0 {
            0.0
        } else if u >= 1.0 {
            1.0
        } else {
            self.integrate(0.0, u, bump) / self.bump_mass
        }
    }

    /// Derivative of [`Self::smoothstep`].
    pub fn smoothstep_prime(&self, u: f64) -> f64 {
        if u <= 0.0 || u >= 1.0 {
            0.0
        } else {
            bump(u) / self.bump_mass
        }
    }
}

impl Default for TransitionRule {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(8);
        // degree 15 is the highest exact degree for 8 nodes
        let mut acc = 0.0;
        for (xi, wi) in x.iter().zip(&w) {
            acc += wi * powi(*xi, 14);
        }
        let exact = 2.0 / 15.0;
        assert!(abs(acc - exact) < 1e-14, "got {acc}, want {exact}");
    }

    #[test]
    fn gauss_legendre_odd_count_has_center_node() {
        let (x, w) = gauss_legendre(9);
        assert!(abs(x[4]) < 1e-300);
        let total: f64 = w.iter().sum();
        assert!(abs(total - 2.0) < 1e-13);
    }

    #[test]
    fn smoothstep_endpoints_and_symmetry() {
        let rule = TransitionRule::new();
        assert_eq!(rule.smoothstep(0.0), 0.0);
        assert_eq!(rule.smoothstep(1.0), 1.0);
        // bump is symmetric about 1/2, so S(1-u) = 1 - S(u)
        for &u in &[0.1, 0.25, 0.4] {
            let s = rule.smoothstep(u) + rule.smoothstep(1.0 - u);
            assert!(abs(s - 1.0) < 1e-12, "S({u}) + S(1-{u}) = {s}");
        }
    }
}
