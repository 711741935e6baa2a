//! The inhomogeneous Gaussian lattice sum `p(alpha, L, z) = sum exp(-alpha
//! |x - z|^2)`, its gradient and Hessian with certified truncation error,
//! the exact stable-critical-point report, and a multi-start cold-spot
//! search.
//!
//! Truncation errors are controlled by the Gaussian-mass estimate
//! `sum_{|x-z| > r} exp(-alpha |x-z|^2) <= f(alpha, r^2) * C(alpha)` with
//! `f(alpha, r^2) = exp(-alpha r^2) (2 e alpha r^2 / n)^{n/2}` (valid for
//! `alpha r^2 > n/2`) and `C(alpha)` the full central sum, itself bounded
//! by bootstrapping: `C <= S_0(r_0) / (1 - f(alpha, r_0^2))` once the
//! truncation radius makes `f < 1/2`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::designs;
use crate::enumerate::{close_vectors, nearest_shell, shell_decomposition};
use crate::lattice::Lattice;
use crate::numeric::{dot_f64, norm_f64, KahanSum};
use crate::ratio::{self, rat_from_f64, rat_to_f64, Rat};
use crate::{Error, Result};

/// A truncated Gaussian sum together with a certified bound on the
/// omitted mass: the true sum lies in `[value, value + tail_bound]`.
#[derive(Clone, Debug)]
pub struct PotentialValue {
    pub value: f64,
    pub tail_bound: f64,
    pub alpha: f64,
    pub truncation_radius_sq: f64,
}

/// Exact first-moment test of every shell around `z` up to a cutoff.
/// This is a semi-decision: `all_one_designs = true` verifies the
/// stable-critical-point criterion only for shells within the cutoff.
/// For double points (`2z` in `L`) central symmetry decides it outright.
#[derive(Clone, Debug)]
pub struct CriticalReport {
    pub center: Vec<Rat>,
    pub cutoff_radius_sq: Rat,
    pub shells_checked: usize,
    pub all_one_designs: bool,
    pub first_failing_radius_sq: Option<Rat>,
    pub failing_defect: Option<f64>,
}

/// One local minimum candidate from the multi-start search.
#[derive(Clone, Debug)]
pub struct ColdspotCandidate {
    pub point: Vec<f64>,
    pub value: f64,
    pub gradient_norm: f64,
    pub converged: bool,
    pub distance_to_nearest_deep_hole: Option<f64>,
}

/// Configuration of [`coldspot_search`].
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub starts: usize,
    pub max_iters: usize,
    pub grad_tol: f64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { starts: 32, max_iters: 400, grad_tol: 1e-8, seed: 0 }
    }
}

/// `exp(-alpha r^2) (2 e alpha r^2 / n)^{n/2}`; infinity when the radius
/// is below the validity threshold `alpha r^2 > n/2`.
fn mass_factor(n: usize, alpha: f64, r_sq: f64) -> f64 {
    let nf = n as f64;
    if alpha * r_sq <= nf / 2.0 {
        return f64::INFINITY;
    }
    let ln = -alpha * r_sq + (nf / 2.0) * (2.0 * std::f64::consts::E * alpha * r_sq / nf).ln();
    ln.exp()
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    Ok(())
}

/// Upper bound on the central sum `C(alpha)` and the radius it used.
fn central_bound(lattice: &Lattice, alpha: f64) -> Result<(f64, f64)> {
    let n = lattice.rank();
    let mut r_sq = (n as f64 / alpha).max(1.0 / alpha) * 1.1 + 1e-6;
    for _ in 0..300 {
        let f = mass_factor(n, alpha, r_sq);
        if f < 0.5 {
            let zero = vec![Rat::zero(); lattice.ambient_dim()];
            let s0 = raw_sum(lattice, alpha, &zero, r_sq)?;
            return Ok((s0 / (1.0 - f), r_sq));
        }
        r_sq *= 1.5;
    }
    Err(Error::Unachievable("central-sum bootstrap did not converge".into()))
}

/// Kahan sum of `exp(-alpha |x - z|^2)` over the exact enumeration within
/// the given squared radius (vectors arrive lexicographically sorted, so
/// the summation order is fixed).
fn raw_sum(lattice: &Lattice, alpha: f64, z: &[Rat], r_sq: f64) -> Result<f64> {
    let vectors = close_vectors(lattice, z, &rat_from_f64(r_sq)?)?;
    let zf = ratio::to_f64_vec(z);
    let mut acc = KahanSum::default();
    for x in &vectors {
        let xf = ratio::to_f64_vec(x);
        let d2: f64 = xf.iter().zip(&zf).map(|(a, b)| (a - b) * (a - b)).sum();
        acc.add((-alpha * d2).exp());
    }
    Ok(acc.value())
}

/// Grows a truncation radius until `err_at(r_sq) <= eps`.
fn choose_radius(alpha: f64, n: usize, eps: f64, err_at: impl Fn(f64) -> f64) -> Result<f64> {
    let mut r_sq = (n as f64 / alpha).max(2.0 / alpha) * 1.1 + 1e-6;
    for _ in 0..400 {
        if err_at(r_sq) <= eps {
            return Ok(r_sq);
        }
        r_sq *= 1.2;
    }
    Err(Error::Unachievable(format!("tolerance {eps} needs an impractical radius")))
}

/// The Gaussian lattice sum at `z` with certified tail at most `eps`.
pub fn potential(lattice: &Lattice, alpha: f64, z: &[Rat], eps: f64) -> Result<PotentialValue> {
    check_alpha(alpha)?;
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    let n = lattice.rank();
    let (c_bound, _) = central_bound(lattice, alpha)?;
    let r_sq = choose_radius(alpha, n, eps, |r| mass_factor(n, alpha, r) * c_bound)?;
    let value = raw_sum(lattice, alpha, z, r_sq)?;
    Ok(PotentialValue {
        value,
        tail_bound: mass_factor(n, alpha, r_sq) * c_bound,
        alpha,
        truncation_radius_sq: r_sq,
    })
}

/// Gradient truncation error beyond radius `r`: each term has norm at
/// most `2 alpha d exp(-alpha d^2)`, and `d exp(-alpha d^2 / 2)` is
/// decreasing for `alpha d^2 > 1`, so the tail is at most
/// `2 alpha r exp(-alpha r^2/2) f(alpha/2, r^2) C(alpha/2)`.
fn gradient_tail(n: usize, alpha: f64, r_sq: f64, c_half: f64) -> f64 {
    if alpha * r_sq <= 1.0 {
        return f64::INFINITY;
    }
    2.0 * alpha
        * r_sq.sqrt()
        * (-alpha * r_sq / 2.0).exp()
        * mass_factor(n, alpha / 2.0, r_sq)
        * c_half
}

/// Gradient of the potential at `z` (ambient coordinates), certified
/// per-coordinate error at most `eps`.
pub fn gradient(lattice: &Lattice, alpha: f64, z: &[Rat], eps: f64) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    let n = lattice.rank();
    let (c_half, _) = central_bound(lattice, alpha / 2.0)?;
    let r_sq = choose_radius(alpha, n, eps, |r| gradient_tail(n, alpha, r, c_half))?;
    let vectors = close_vectors(lattice, z, &rat_from_f64(r_sq)?)?;
    let zf = ratio::to_f64_vec(z);
    let m = zf.len();
    let mut acc = vec![KahanSum::default(); m];
    for x in &vectors {
        let xf = ratio::to_f64_vec(x);
        let d2: f64 = xf.iter().zip(&zf).map(|(a, b)| (a - b) * (a - b)).sum();
        let w = 2.0 * alpha * (-alpha * d2).exp();
        for i in 0..m {
            acc[i].add(w * (xf[i] - zf[i]));
        }
    }
    Ok(acc.iter().map(KahanSum::value).collect())
}

fn hessian_tail(n: usize, alpha: f64, r_sq: f64, c_full: f64, c_half: f64) -> f64 {
    if alpha * r_sq <= 2.0 {
        return f64::INFINITY;
    }
    2.0 * alpha * mass_factor(n, alpha, r_sq) * c_full
        + 4.0 * alpha * alpha * r_sq * (-alpha * r_sq / 2.0).exp()
            * mass_factor(n, alpha / 2.0, r_sq)
            * c_half
}

/// Hessian of the potential at `z` (ambient coordinates), certified
/// entrywise error at most `eps`. For full-rank lattices at points whose
/// shells are all 2-designs this is a scalar multiple of the identity.
pub fn hessian(lattice: &Lattice, alpha: f64, z: &[Rat], eps: f64) -> Result<Vec<Vec<f64>>> {
    check_alpha(alpha)?;
    let n = lattice.rank();
    let (c_full, _) = central_bound(lattice, alpha)?;
    let (c_half, _) = central_bound(lattice, alpha / 2.0)?;
    let r_sq = choose_radius(alpha, n, eps, |r| hessian_tail(n, alpha, r, c_full, c_half))?;
    let vectors = close_vectors(lattice, z, &rat_from_f64(r_sq)?)?;
    let zf = ratio::to_f64_vec(z);
    let m = zf.len();
    let mut acc = vec![vec![KahanSum::default(); m]; m];
    for x in &vectors {
        let xf = ratio::to_f64_vec(x);
        let d: Vec<f64> = xf.iter().zip(&zf).map(|(a, b)| a - b).collect();
        let d2 = dot_f64(&d, &d);
        let w = (-alpha * d2).exp();
        for i in 0..m {
            for j in 0..=i {
                let mut v = 4.0 * alpha * alpha * w * d[i] * d[j];
                if i == j {
                    v -= 2.0 * alpha * w;
                }
                acc[i][j].add(v);
            }
        }
    }
    let mut h = vec![vec![0.0; m]; m];
    for i in 0..m {
        for j in 0..=i {
            h[i][j] = acc[i][j].value();
            h[j][i] = h[i][j];
        }
    }
    Ok(h)
}

/// Exact first-moment check of every nonempty shell around `z` with
/// squared radius at most `cutoff_radius_sq`.
pub fn stable_critical_report(
    lattice: &Lattice,
    z: &[Rat],
    cutoff_radius_sq: &Rat,
) -> Result<CriticalReport> {
    let shells = shell_decomposition(lattice, z, cutoff_radius_sq)?;
    if shells.is_empty() {
        return Err(Error::InvalidParameter(
            "cutoff radius too small: no shell inspected".into(),
        ));
    }
    let mut first_failing = None;
    let mut failing_defect = None;
    for shell in &shells {
        if shell.radius_sq.is_zero() {
            continue; // the lattice point itself is trivially balanced
        }
        if !designs::is_exact_one_design(shell) {
            let moment = designs::exact_first_moment(shell);
            let r = rat_to_f64(&shell.radius_sq).sqrt();
            let defect = norm_f64(&ratio::to_f64_vec(&moment)) / (r * shell.count() as f64);
            first_failing = Some(shell.radius_sq.clone());
            failing_defect = Some(defect);
            break;
        }
    }
    Ok(CriticalReport {
        center: z.to_vec(),
        cutoff_radius_sq: cutoff_radius_sq.clone(),
        shells_checked: shells.len(),
        all_one_designs: first_failing.is_none(),
        first_failing_radius_sq: first_failing,
        failing_defect,
    })
}

/// Evaluator for the search: one exact enumeration around the origin,
/// reused for every descent iterate inside the Voronoi cell.
struct CellEvaluator {
    /// Lattice points near the Voronoi cell, in span coordinates.
    points: Vec<Vec<f64>>,
    /// Points of small norm used for reduction into the Voronoi cell.
    reducers: Vec<Vec<f64>>,
    alpha: f64,
    /// Orthonormal basis of the lattice span (rows, ambient length).
    frame: Vec<Vec<f64>>,
}

impl CellEvaluator {
    fn build(lattice: &Lattice, alpha: f64, eps: f64) -> Result<CellEvaluator> {
        let n = lattice.rank();
        let (c_bound, _) = central_bound(lattice, alpha)?;
        let (c_half, _) = central_bound(lattice, alpha / 2.0)?;
        let r_sq = choose_radius(alpha, n, eps, |r| {
            (mass_factor(n, alpha, r) * c_bound).max(gradient_tail(n, alpha, r, c_half))
        })?;
        // Voronoi cell radius bound: stored covering radius when known,
        // else the Babai error bound mu^2 <= 1/4 sum |b_i|^2.
        let cell_sq: f64 = match lattice.stored_covering_radius_sq() {
            Some(mu) => rat_to_f64(mu),
            None => {
                let g = lattice.gram();
                0.25 * (0..n).map(|i| rat_to_f64(&g[i][i])).sum::<f64>()
            }
        };
        let cache_r = (r_sq.sqrt() + cell_sq.sqrt()).powi(2) + 1e-9;
        let zero = vec![Rat::zero(); lattice.ambient_dim()];
        let vectors = close_vectors(lattice, &zero, &rat_from_f64(cache_r)?)?;
        // The search runs in orthonormal coordinates of the lattice span:
        // the ambient extension of the potential decays off the span, so
        // floating-point drift out of the span would masquerade as
        // descent. In span coordinates that direction does not exist.
        let basis_f64: Vec<Vec<f64>> =
            lattice.basis().iter().map(|b| ratio::to_f64_vec(b)).collect();
        let frame = crate::numeric::orthonormal_frame(&basis_f64);
        let project =
            |v: &[f64]| -> Vec<f64> { frame.iter().map(|f| dot_f64(f, v)).collect() };
        let points: Vec<Vec<f64>> = vectors
            .iter()
            .map(|v| project(&ratio::to_f64_vec(v)))
            .collect();
        let reducers: Vec<Vec<f64>> = points
            .iter()
            .filter(|p| {
                let n2 = dot_f64(p, p);
                n2 > 1e-12 && n2 <= 4.0 * cell_sq + 1e-9
            })
            .cloned()
            .collect();
        Ok(CellEvaluator { points, reducers, alpha, frame })
    }

    fn to_span(&self, v: &[f64]) -> Vec<f64> {
        self.frame.iter().map(|f| dot_f64(f, v)).collect()
    }

    fn to_ambient(&self, w: &[f64]) -> Vec<f64> {
        let m = self.frame[0].len();
        let mut out = vec![0.0; m];
        for (wc, f) in w.iter().zip(&self.frame) {
            for (oc, fc) in out.iter_mut().zip(f) {
                *oc += wc * fc;
            }
        }
        out
    }

    /// Moves `z` into the Voronoi cell around the origin by subtracting
    /// nearby lattice points while that decreases the norm.
    fn reduce(&self, z: &mut [f64]) {
        loop {
            let zn = dot_f64(z, z);
            let mut best: Option<&Vec<f64>> = None;
            let mut best_gain = 1e-14;
            for p in &self.reducers {
                let d2: f64 = z.iter().zip(p).map(|(a, b)| (a - b) * (a - b)).sum();
                let gain = zn - d2;
                if gain > best_gain {
                    best_gain = gain;
                    best = Some(p);
                }
            }
            match best {
                Some(p) => {
                    for (zc, pc) in z.iter_mut().zip(p) {
                        *zc -= pc;
                    }
                }
                None => return,
            }
        }
    }

    fn value(&self, z: &[f64]) -> f64 {
        let mut acc = KahanSum::default();
        for p in &self.points {
            let d2: f64 = p.iter().zip(z).map(|(a, b)| (a - b) * (a - b)).sum();
            acc.add((-self.alpha * d2).exp());
        }
        acc.value()
    }

    fn gradient(&self, z: &[f64]) -> Vec<f64> {
        let rank = self.frame.len();
        let mut acc = vec![KahanSum::default(); rank];
        for p in &self.points {
            let d2: f64 = p.iter().zip(z).map(|(a, b)| (a - b) * (a - b)).sum();
            let w = 2.0 * self.alpha * (-self.alpha * d2).exp();
            for i in 0..rank {
                acc[i].add(w * (p[i] - z[i]));
            }
        }
        acc.iter().map(KahanSum::value).collect()
    }

    fn hessian(&self, z: &[f64]) -> Vec<Vec<f64>> {
        let rank = self.frame.len();
        let a = self.alpha;
        let mut h = vec![vec![0.0; rank]; rank];
        for p in &self.points {
            let d: Vec<f64> = p.iter().zip(z).map(|(a, b)| a - b).collect();
            let d2 = dot_f64(&d, &d);
            let w = (-a * d2).exp();
            for i in 0..rank {
                for j in 0..=i {
                    let mut v = 4.0 * a * a * w * d[i] * d[j];
                    if i == j {
                        v -= 2.0 * a * w;
                    }
                    h[i][j] += v;
                }
            }
        }
        for i in 0..rank {
            for j in i + 1..rank {
                h[i][j] = h[j][i];
            }
        }
        h
    }
}

/// Distance from a candidate (span coordinates) to the nearest verified
/// deep hole of the half-lattice-point kind: rounds `2z` to a lattice
/// vector `w` and accepts `w/2` when its exact nearest-shell radius
/// equals the stored covering radius.
fn snapped_hole_distance(lattice: &Lattice, eval: &CellEvaluator, z: &[f64]) -> Option<f64> {
    let mu_sq = lattice.stored_covering_radius_sq()?;
    let doubled: Vec<f64> = z.iter().map(|c| 2.0 * c).collect();
    let mut residual = doubled.clone();
    eval.reduce(&mut residual);
    let w_span: Vec<f64> = doubled.iter().zip(&residual).map(|(a, b)| a - b).collect();
    // Integer basis coordinates of w, recovered exactly.
    let w_ambient = eval.to_ambient(&w_span);
    let basis_f64: Vec<Vec<f64>> =
        lattice.basis().iter().map(|b| ratio::to_f64_vec(b)).collect();
    let gram_f64: Vec<Vec<f64>> = lattice
        .gram()
        .iter()
        .map(|row| row.iter().map(rat_to_f64).collect())
        .collect();
    let rhs: Vec<f64> = basis_f64.iter().map(|b| dot_f64(b, &w_ambient)).collect();
    let coeffs = crate::numeric::solve_spd(&gram_f64, &rhs)?;
    let mut c_rat = vec![Rat::zero(); lattice.ambient_dim()];
    for (coef, b) in coeffs.iter().zip(lattice.basis()) {
        let k = coef.round() as i64;
        if (coef - k as f64).abs() > 1e-6 {
            return None;
        }
        for (cc, bc) in c_rat.iter_mut().zip(b) {
            *cc += ratio::rat(k, 2) * bc;
        }
    }
    let shell = nearest_shell(lattice, &c_rat).ok()?;
    if shell.radius_sq != *mu_sq {
        return None;
    }
    let c_span = eval.to_span(&ratio::to_f64_vec(&c_rat));
    let mut diff: Vec<f64> = z.iter().zip(&c_span).map(|(a, b)| a - b).collect();
    eval.reduce(&mut diff);
    Some(norm_f64(&diff))
}

/// Multi-start gradient descent with backtracking line search. Starts are
/// sampled uniformly in the fundamental parallelepiped and reduced into
/// the Voronoi cell each iteration; candidates are deduplicated modulo
/// the lattice and sorted by value. Heuristic, not certified.
pub fn coldspot_search(
    lattice: &Lattice,
    alpha: f64,
    config: &SearchConfig,
) -> Result<Vec<ColdspotCandidate>> {
    check_alpha(alpha)?;
    if config.starts == 0 {
        return Ok(Vec::new());
    }
    let eval_eps = (config.grad_tol * 1e-3).clamp(1e-15, 1e-12);
    let eval = CellEvaluator::build(lattice, alpha, eval_eps)?;
    let basis_span: Vec<Vec<f64>> = lattice
        .basis()
        .iter()
        .map(|b| eval.to_span(&ratio::to_f64_vec(b)))
        .collect();
    let rank = basis_span.len();

    let run_start = |start: usize| -> ColdspotCandidate {
        let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
        rng.set_stream(start as u64 + 1);
        let mut z = vec![0.0; rank];
        for b in &basis_span {
            let u: f64 = rng.gen();
            for (zc, bc) in z.iter_mut().zip(b) {
                *zc += u * bc;
            }
        }
        eval.reduce(&mut z);
        let mut value = eval.value(&z);
        let mut grad = eval.gradient(&z);
        let mut converged = false;
        // Backtracking Armijo line search along -grad; the accepted step
        // persists and is allowed to grow, which matters in the nearly
        // flat basins around cold spots.
        let mut step = 1.0 / (2.0 * alpha);
        for _ in 0..config.max_iters {
            let gnorm = norm_f64(&grad);
            if gnorm <= config.grad_tol {
                converged = true;
                break;
            }
            let mut trial = step * 4.0;
            let mut accepted = false;
            while trial > 1e-18 {
                let mut cand: Vec<f64> =
                    z.iter().zip(&grad).map(|(zc, gc)| zc - trial * gc).collect();
                eval.reduce(&mut cand);
                let cand_value = eval.value(&cand);
                if cand_value <= value - 1e-4 * trial * gnorm * gnorm {
                    z = cand;
                    value = cand_value;
                    grad = eval.gradient(&z);
                    accepted = true;
                    step = trial;
                    break;
                }
                trial *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        // Newton polish: near a minimum the Armijo test saturates float
        // precision of the value, while Newton needs only gradients and
        // converges quadratically. Guarded by positive definiteness and
        // by monotone gradient norms.
        if !converged || norm_f64(&grad) > config.grad_tol {
            for _ in 0..12 {
                let gnorm = norm_f64(&grad);
                if gnorm <= config.grad_tol {
                    converged = true;
                    break;
                }
                let h = eval.hessian(&z);
                let Some(dir) = crate::numeric::solve_spd(&h, &grad) else { break };
                let mut cand: Vec<f64> = z.iter().zip(&dir).map(|(a, b)| a - b).collect();
                eval.reduce(&mut cand);
                let cand_grad = eval.gradient(&cand);
                if norm_f64(&cand_grad) >= gnorm {
                    break;
                }
                z = cand;
                grad = cand_grad;
            }
            if norm_f64(&grad) <= config.grad_tol {
                converged = true;
            }
            value = eval.value(&z);
        }
        let gradient_norm = norm_f64(&grad);
        ColdspotCandidate {
            point: z,
            value,
            gradient_norm,
            converged,
            distance_to_nearest_deep_hole: None,
        }
    };

    let mut candidates: Vec<ColdspotCandidate> =
        (0..config.starts).into_par_iter().map(run_start).collect();

    // Deduplicate modulo the lattice, keeping the first (ordered by start).
    let mut unique: Vec<ColdspotCandidate> = Vec::new();
    for cand in candidates.drain(..) {
        let dup = unique.iter().any(|u| {
            let mut diff: Vec<f64> =
                cand.point.iter().zip(&u.point).map(|(a, b)| a - b).collect();
            eval.reduce(&mut diff);
            norm_f64(&diff) <= 1e-6
        });
        if !dup {
            unique.push(cand);
        }
    }
    for cand in unique.iter_mut() {
        let stored = lattice
            .deep_holes()
            .iter()
            .map(|h| {
                let hf = eval.to_span(&ratio::to_f64_vec(&h.coords));
                let mut diff: Vec<f64> =
                    cand.point.iter().zip(&hf).map(|(a, b)| a - b).collect();
                eval.reduce(&mut diff);
                norm_f64(&diff)
            })
            .min_by(f64::total_cmp);
        // Deep holes need not form a single translation class (E8 has
        // many), so also snap to the nearest half-lattice point and check
        // the defining property dist(c, L)^2 = mu^2 exactly.
        let snapped = snapped_hole_distance(lattice, &eval, &cand.point);
        cand.distance_to_nearest_deep_hole = match (stored, snapped) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    unique.sort_by(|a, b| {
        a.value
            .total_cmp(&b.value)
            .then_with(|| a.point.partial_cmp(&b.point).unwrap_or(std::cmp::Ordering::Equal))
    });
    // Report points in ambient coordinates.
    for cand in unique.iter_mut() {
        cand.point = eval.to_ambient(&cand.point);
    }
    Ok(unique)
}
