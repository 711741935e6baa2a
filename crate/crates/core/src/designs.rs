//! Spherical-design strength of inhomogeneous shells.
//!
//! Degrees 1 and 2 are decided exactly in rational arithmetic (shells of
//! rational lattices at rational centers have rational moments); the
//! Gegenbauer moment criterion in floating point covers all requested
//! degrees and doubles as a cross-check.

use num_traits::Zero;

use crate::enumerate::Shell;
use crate::lattice::Lattice;
use crate::numeric::{dot_f64, norm_f64, orthonormal_frame, sym_spectral_norm, KahanSum};
use crate::ratio::{self, rat_to_f64, Rat};
use crate::{Error, Result};

/// Shells larger than this are rejected by the O(|X|^2) moment sum.
pub const MAX_SHELL_FOR_DESIGN: usize = 1_000_000;

/// Default tolerance on normalized moment defects.
pub const DEFAULT_DESIGN_TOL: f64 = 1e-9;

/// Result of a design-strength test on one shell.
#[derive(Clone, Debug)]
pub struct DesignReport {
    pub radius_sq: Rat,
    pub count: usize,
    /// Largest `M <= t_max` with all degrees `1..=M` passing.
    pub strength: usize,
    pub t_max: usize,
    pub tol: f64,
    /// `|sum (x-z)| / (r |X|)`.
    pub first_moment_norm: f64,
    /// Spectral-norm deviation of `sum u u^T / |X|` from `I/n`.
    pub second_moment_defect: f64,
    /// `|sum_{x,y} P_k(u_x . u_y)| / |X|^2` for `k = 1..=t_max`.
    pub per_degree_defects: Vec<f64>,
    /// Exact rational verdicts for degrees 1 and 2.
    pub exact_one_design: bool,
    pub exact_two_design: bool,
}

/// Normalized Jacobi (Gegenbauer) polynomial `P_k^n(t)` with
/// `P_k^n(1) = 1`, by the three-term recurrence
/// `(k + n - 3) P_k = (2k + n - 4) t P_{k-1} - (k - 1) P_{k-2}`.
pub fn jacobi_p(n: usize, k: usize, t: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "Gegenbauer dimension must be >= 2, got {n}"
        )));
    }
    let mut prev = 1.0; // P_0
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = t; // P_1
    for j in 2..=k {
        let (jf, nf) = (j as f64, n as f64);
        let next = ((2.0 * jf + nf - 4.0) * t * cur - (jf - 1.0) * prev) / (jf + nf - 3.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Exact first moment of the shell in ambient coordinates.
pub fn exact_first_moment(shell: &Shell) -> Vec<Rat> {
    let m = shell.center.len();
    let mut acc = vec![Rat::zero(); m];
    for x in &shell.vectors {
        for ((a, xc), zc) in acc.iter_mut().zip(x).zip(&shell.center) {
            *a += xc - zc;
        }
    }
    acc
}

/// Exact 1-design test: the shell is balanced around its center.
pub fn is_exact_one_design(shell: &Shell) -> bool {
    exact_first_moment(shell).iter().all(Rat::is_zero)
}

/// Exact 2-design test. With `p_i = (x - z) . b_i` the condition
/// `sum (x-z)(x-z)^T = (r^2 |X| / n) P_span` is equivalent to
/// `sum p_i p_j = (r^2 |X| / n) G_ij` over the lattice basis.
pub fn is_exact_two_design(lattice: &Lattice, shell: &Shell) -> bool {
    if !is_exact_one_design(shell) {
        return false;
    }
    let n = lattice.rank();
    let mut m = vec![vec![Rat::zero(); n]; n];
    for x in &shell.vectors {
        let d = ratio::sub(x, &shell.center);
        let p: Vec<Rat> = lattice.basis().iter().map(|b| ratio::dot(b, &d)).collect();
        for i in 0..n {
            for j in 0..=i {
                let t = &p[i] * &p[j];
                m[i][j] += t;
            }
        }
    }
    let scale = &shell.radius_sq * ratio::rat(shell.count() as i64, n as i64);
    for i in 0..n {
        for j in 0..=i {
            if m[i][j] != &scale * &lattice.gram()[i][j] {
                return false;
            }
        }
    }
    true
}

/// Unit vectors of the shell in an orthonormal frame of the lattice span.
fn unit_vectors(lattice: &Lattice, shell: &Shell) -> Result<Vec<Vec<f64>>> {
    if shell.vectors.is_empty() {
        return Err(Error::EmptyShell);
    }
    if shell.radius_sq.is_zero() {
        return Err(Error::ZeroRadiusShell);
    }
    if shell.count() > MAX_SHELL_FOR_DESIGN {
        return Err(Error::EnumerationCap(MAX_SHELL_FOR_DESIGN));
    }
    let basis_f64: Vec<Vec<f64>> = lattice.basis().iter().map(|b| ratio::to_f64_vec(b)).collect();
    let frame = orthonormal_frame(&basis_f64);
    let r = rat_to_f64(&shell.radius_sq).sqrt();
    let center = ratio::to_f64_vec(&shell.center);
    let mut units = Vec::with_capacity(shell.count());
    for x in &shell.vectors {
        let xf = ratio::to_f64_vec(x);
        let d: Vec<f64> = xf.iter().zip(&center).map(|(a, b)| a - b).collect();
        units.push(frame.iter().map(|f| dot_f64(f, &d) / r).collect());
    }
    Ok(units)
}

/// The two normalized moment defects of a shell.
pub fn moment_defects(lattice: &Lattice, shell: &Shell) -> Result<(f64, f64)> {
    let units = unit_vectors(lattice, shell)?;
    let n = lattice.rank();
    let count = units.len() as f64;
    let mut first = vec![KahanSum::default(); n];
    for u in &units {
        for (acc, &c) in first.iter_mut().zip(u) {
            acc.add(c);
        }
    }
    let first_vec: Vec<f64> = first.iter().map(KahanSum::value).collect();
    let first_moment_norm = norm_f64(&first_vec) / count;

    let mut second = vec![vec![KahanSum::default(); n]; n];
    for u in &units {
        for i in 0..n {
            for j in 0..=i {
                second[i][j].add(u[i] * u[j]);
            }
        }
    }
    let mut dev = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let v = second[i][j].value() / count - if i == j { 1.0 / n as f64 } else { 0.0 };
            dev[i][j] = v;
            dev[j][i] = v;
        }
    }
    Ok((first_moment_norm, sym_spectral_norm(&dev)))
}

/// Design strength of a shell up to `t_max`, via the Gegenbauer moment
/// criterion `sum_{x,y} P_k(u_x . u_y) <= tol |X|^2`, with degrees 1 and 2
/// decided exactly.
pub fn design_strength(
    lattice: &Lattice,
    shell: &Shell,
    t_max: usize,
    tol: f64,
) -> Result<DesignReport> {
    if t_max == 0 {
        return Err(Error::InvalidParameter("t_max must be >= 1".into()));
    }
    let units = unit_vectors(lattice, shell)?;
    let n = lattice.rank();
    let count = units.len();
    let (first_moment_norm, second_moment_defect) = moment_defects(lattice, shell)?;

    // Fixed-order pairwise sum of P_k over all inner products.
    let mut sums = vec![KahanSum::default(); t_max];
    for a in 0..count {
        for b in 0..count {
            let t = dot_f64(&units[a], &units[b]).clamp(-1.0, 1.0);
            // Inline recurrence shared across degrees.
            let mut prev = 1.0;
            let mut cur = t;
            for (k, sum) in sums.iter_mut().enumerate() {
                let deg = k + 1;
                if deg >= 2 {
                    let (jf, nf) = (deg as f64, n as f64);
                    let next =
                        ((2.0 * jf + nf - 4.0) * t * cur - (jf - 1.0) * prev) / (jf + nf - 3.0);
                    prev = cur;
                    cur = next;
                }
                sum.add(cur);
            }
        }
    }
    let norm = (count * count) as f64;
    let per_degree_defects: Vec<f64> =
        sums.iter().map(|s| s.value().abs() / norm).collect();

    let exact_one_design = is_exact_one_design(shell);
    let exact_two_design = is_exact_two_design(lattice, shell);
    let passes = |k: usize| -> bool {
        match k {
            1 => exact_one_design,
            2 => exact_two_design,
            _ => per_degree_defects[k - 1] <= tol,
        }
    };
    let mut strength = 0;
    while strength < t_max && passes(strength + 1) {
        strength += 1;
    }

    Ok(DesignReport {
        radius_sq: shell.radius_sq.clone(),
        count,
        strength,
        t_max,
        tol,
        first_moment_norm,
        second_moment_defect,
        per_degree_defects,
        exact_one_design,
        exact_two_design,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{nearest_shell, shell_decomposition};
    use crate::lattice::Lattice;
    use crate::ratio::{int, rat};

    #[test]
    fn jacobi_basics() {
        assert_eq!(jacobi_p(5, 3, 1.0).unwrap(), 1.0);
        assert_eq!(jacobi_p(7, 1, 0.3).unwrap(), 0.3);
        // P_2^n(t) = (n t^2 - 1)/(n - 1)
        let v = jacobi_p(4, 2, 0.5).unwrap();
        assert!(v.abs() < 1e-15);
        let v = jacobi_p(8, 2, 0.25).unwrap();
        assert!((v - (8.0 * 0.0625 - 1.0) / 7.0).abs() < 1e-15);
        assert!(jacobi_p(1, 2, 0.0).is_err());
        // n = 2 degenerates to Chebyshev: P_3(cos x) = cos(3x).
        let x: f64 = 0.7;
        assert!((jacobi_p(2, 3, x.cos()).unwrap() - (3.0 * x).cos()).abs() < 1e-12);
    }

    #[test]
    fn e8_hole_shell_strength_three() {
        let e8 = Lattice::by_name("e8").unwrap();
        let shell = nearest_shell(&e8, &e8.deep_holes()[0].coords).unwrap();
        assert_eq!(shell.count(), 16);
        let rep = design_strength(&e8, &shell, 5, DEFAULT_DESIGN_TOL).unwrap();
        assert_eq!(rep.strength, 3);
        assert!(rep.exact_one_design && rep.exact_two_design);
        assert!(rep.per_degree_defects[3] > 1e-3, "degree 4 must fail");
    }

    #[test]
    fn a2_hole_shell_strength_two() {
        let a2 = Lattice::by_name("a2").unwrap();
        let shell = nearest_shell(&a2, &a2.deep_holes()[0].coords).unwrap();
        assert_eq!(shell.count(), 3);
        let rep = design_strength(&a2, &shell, 4, DEFAULT_DESIGN_TOL).unwrap();
        assert_eq!(rep.strength, 2);
    }

    #[test]
    fn z2_cross_polytope_defects() {
        let z2 = Lattice::by_name("z2").unwrap();
        let shells = shell_decomposition(&z2, &[int(0), int(0)], &int(1)).unwrap();
        // radius 0 shell is the origin; radius 1 shell is the 4-point cross polytope
        let shell = shells.into_iter().find(|s| s.radius_sq == int(1)).unwrap();
        let (m1, m2) = moment_defects(&z2, &shell).unwrap();
        assert_eq!(m1, 0.0);
        assert!(m2 < 1e-15);
    }

    #[test]
    fn single_point_shell_moment_is_one() {
        let z2 = Lattice::by_name("z2").unwrap();
        let shell = nearest_shell(&z2, &[rat(1, 5), rat(1, 10)]).unwrap();
        assert_eq!(shell.count(), 1);
        let (m1, _) = moment_defects(&z2, &shell).unwrap();
        assert!((m1 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn empty_and_zero_radius_rejected() {
        let z2 = Lattice::by_name("z2").unwrap();
        let origin = nearest_shell(&z2, &[int(0), int(0)]).unwrap();
        assert!(matches!(
            moment_defects(&z2, &origin),
            Err(Error::ZeroRadiusShell)
        ));
        let empty = Shell { center: vec![int(0), int(0)], radius_sq: int(1), vectors: vec![] };
        assert!(matches!(moment_defects(&z2, &empty), Err(Error::EmptyShell)));
    }
}
