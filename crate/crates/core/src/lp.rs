//! Linear-programming machinery for design sums on shells: feasible
//! low-degree witnesses below the exponential kernels, the resulting
//! shell bound `b(alpha, rho, r)`, the local threshold and radius around
//! a deep hole, and the far-field factor that controls points away from
//! the holes.

use crate::designs::jacobi_p;
use crate::{Error, Result};

/// Which kernel the witness sits below: `exp(gamma t)` in general, or
/// `cosh(gamma t)` when the shell is centrally symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    General,
    Symmetric,
}

/// A degree-2 feasible witness `h = h0 P0 + h1 P1 + h2 P2` with its grid
/// verification result.
#[derive(Clone, Debug)]
pub struct LpWitness {
    pub n: usize,
    pub gamma: f64,
    pub kind: WitnessKind,
    pub h0: f64,
    pub h1: f64,
    pub h2: f64,
    pub feasible: bool,
    /// Maximum of `h(t) - a(t)` over the verification grid.
    pub max_violation: f64,
}

impl LpWitness {
    pub fn eval(&self, t: f64) -> f64 {
        let p1 = jacobi_p(self.n, 1, t).expect("n >= 2");
        let p2 = jacobi_p(self.n, 2, t).expect("n >= 2");
        self.h0 + self.h1 * p1 + self.h2 * p2
    }

    fn kernel(&self, t: f64) -> f64 {
        match self.kind {
            WitnessKind::General => (self.gamma * t).exp(),
            WitnessKind::Symmetric => (self.gamma * t).cosh(),
        }
    }
}

const GRID_POINTS: usize = 10_000;
const FEASIBILITY_TOL: f64 = 1e-12;

/// Closed-form witness coefficients, verified on a dense grid plus the
/// interpolation nodes. The general kind interpolates `exp(gamma t)` at
/// `t = -1` (simple) and `t = 1/n` (double); the symmetric kind Hermite
/// interpolates `cosh(gamma t)` at `t = 1/sqrt(n)`.
pub fn lp_witness(n: usize, gamma: f64, kind: WitnessKind) -> Result<LpWitness> {
    if n < 2 {
        return Err(Error::InvalidParameter("witness dimension must be >= 2".into()));
    }
    if !(gamma >= 0.0) {
        return Err(Error::InvalidParameter(format!("gamma must be >= 0, got {gamma}")));
    }
    let nf = n as f64;
    let (h0, h1, h2) = match kind {
        WitnessKind::General => {
            let eg = (gamma / nf).exp();
            let em = (-gamma).exp();
            let h0 = (nf * eg + em) / (nf + 1.0);
            let h1 = ((gamma * nf * nf - gamma + 2.0 * nf) * eg - 2.0 * nf * em)
                / ((nf + 1.0) * (nf + 1.0));
            let h2 = (((gamma - 1.0) * nf * nf - gamma + nf) * eg
                + nf * (nf - 1.0) * em)
                / ((nf + 1.0) * (nf + 1.0));
            (h0, h1, h2)
        }
        WitnessKind::Symmetric => {
            let s = gamma / nf.sqrt();
            let h0 = s.cosh();
            let h2 = (gamma / 2.0) * s.sinh() * (nf - 1.0) / nf.sqrt();
            (h0, 0.0, h2)
        }
    };
    let w = LpWitness { n, gamma, kind, h0, h1, h2, feasible: false, max_violation: 0.0 };

    // Verification grid: uniform points, the interpolation nodes, and
    // near-node offsets as a derivative-sign sanity check.
    let mut max_violation = f64::NEG_INFINITY;
    let mut check = |t: f64| {
        let v = w.eval(t) - w.kernel(t);
        if v > max_violation {
            max_violation = v;
        }
    };
    for i in 0..=GRID_POINTS {
        check(-1.0 + 2.0 * i as f64 / GRID_POINTS as f64);
    }
    let nodes: &[f64] = match kind {
        WitnessKind::General => &[-1.0, 1.0 / nf],
        WitnessKind::Symmetric => &[-1.0 / nf.sqrt(), 1.0 / nf.sqrt()],
    };
    for &t0 in nodes {
        for dt in [-1e-4, 0.0, 1e-4] {
            let t = (t0 + dt).clamp(-1.0, 1.0);
            check(t);
        }
    }
    Ok(LpWitness { feasible: max_violation <= FEASIBILITY_TOL, max_violation, ..w })
}

/// Lower bound on the normalized design sum over a 2-design shell at
/// radius `r`, seen from displacement `rho`: the constant coefficient of
/// the witness at `gamma = 2 alpha rho r`.
pub fn shell_bound_b(n: usize, alpha: f64, rho: f64, r: f64, symmetric: bool) -> f64 {
    let nf = n as f64;
    let gamma = 2.0 * alpha * rho * r;
    if symmetric {
        (gamma / nf.sqrt()).cosh()
    } else {
        (nf * (gamma / nf).exp() + (-gamma).exp()) / (nf + 1.0)
    }
}

/// Steepness threshold above which the local radius formula applies:
/// `(n^2/mu^2)((n+1)/(2n) + log((n+1)/n)^2)` in general, and
/// `(n/mu^2)(1/2 + log(2)^2)` for centrally symmetric shells.
pub fn local_threshold_alpha(n: usize, mu_sq: f64, symmetric: bool) -> f64 {
    let nf = n as f64;
    if symmetric {
        (nf / mu_sq) * (0.5 + std::f64::consts::LN_2.powi(2))
    } else {
        let l = ((nf + 1.0) / nf).ln();
        (nf * nf / mu_sq) * ((nf + 1.0) / (2.0 * nf) + l * l)
    }
}

/// Radius around a deep hole inside which the hole is certified to be the
/// unique minimizer, for `alpha` above the threshold.
pub fn local_radius(n: usize, mu_sq: f64, alpha: f64, symmetric: bool) -> Result<f64> {
    let threshold = local_threshold_alpha(n, mu_sq, symmetric);
    if !(alpha > threshold) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} is not above the local threshold {threshold}"
        )));
    }
    let nf = n as f64;
    let mu = mu_sq.sqrt();
    Ok(if symmetric {
        mu / nf.sqrt() + (mu_sq / nf - std::f64::consts::LN_2 / alpha).sqrt()
    } else {
        mu / nf + (mu_sq / (nf * nf) - ((nf + 1.0) / nf).ln() / alpha).sqrt()
    })
}

/// The far-field factor `exp(-alpha (mu^2 - rho^2)) (2 alpha mu^2 e / n)^{n/2}`.
/// A value below 1 certifies that every point of norm at most `rho` has a
/// strictly larger potential than the deep holes.
pub fn far_factor(n: usize, mu_sq: f64, alpha: f64, rho: f64) -> Result<f64> {
    let nf = n as f64;
    if !(alpha > nf / (2.0 * mu_sq)) {
        return Err(Error::InvalidParameter(format!(
            "far-field factor needs alpha > n/(2 mu^2) = {}",
            nf / (2.0 * mu_sq)
        )));
    }
    if !(rho >= 0.0) || rho * rho >= mu_sq {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= rho^2 < mu^2, got rho = {rho}"
        )));
    }
    let ln = -alpha * (mu_sq - rho * rho)
        + (nf / 2.0) * (2.0 * alpha * mu_sq * std::f64::consts::E / nf).ln();
    Ok(ln.exp())
}
