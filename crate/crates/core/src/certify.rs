//! Stable cold-spot certificates.
//!
//! The certificate combines three checks for a lattice whose fundamental
//! simplex and deep-hole data are stored:
//!
//! 1. the steepness `alpha0` clears the local LP threshold, yielding a
//!    radius `R` in which each deep hole is the unique minimizer;
//! 2. the simplex is covered by the deep-hole balls `B(c_j, R)` together
//!    with a ball `B(0, rho)` around the origin;
//! 3. the far-field factor at `rho` is below 1, so points of norm at most
//!    `rho` cannot beat the holes.
//!
//! The covering is decided two ways. First, exactly: the maximum of the
//! (convex) norm over `simplex \ union B(c_j, R)` is attained at an
//! extreme point of the region's convex hull, and such a point lying in
//! the relative interior of a `d`-dimensional face must have at least `d`
//! sphere constraints active with independent gradients (otherwise a
//! chord through it stays in the region). These finitely many candidates
//! are computed in closed form; `rho` is their maximal norm, rounded up.
//! Second, the covering with the rounded `rho` is re-proved by recursive
//! subdivision, accepting a subsimplex once all its vertices lie in one
//! closed ball.

use num_traits::Zero;
use serde::Serialize;

use crate::designs::is_exact_two_design;
use crate::enumerate::shell_decomposition;
use crate::lattice::Lattice;
use crate::lp::{far_factor, local_radius, local_threshold_alpha};
use crate::numeric::{dot_f64, norm_f64};
use crate::ratio::{self, rat_to_f64, Rat};
use crate::{Error, Result};

/// Uniform slack every strict inequality must clear.
pub const CERT_SLACK: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct CertifyConfig {
    /// Squared-radius cutoff for the exact 2-design check around each
    /// hole; `None` picks `4 mu^2`.
    pub design_cutoff_sq: Option<Rat>,
    /// Cap on subdivision depth, counted in diameter-halving rounds.
    pub subdivision_halving_cap: u32,
    pub subdivision_node_cap: usize,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            design_cutoff_sq: None,
            subdivision_halving_cap: 12,
            subdivision_node_cap: 6_000_000,
        }
    }
}

/// One checked inequality; `passed` means `lhs <= rhs - slack` for strict
/// checks (slack recorded in the label when it matters).
#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub check: String,
    pub lhs: f64,
    pub rhs: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexClass {
    pub coords: Vec<f64>,
    pub norm: f64,
    /// Index into `hole_centers` of a ball containing this vertex, if any.
    pub covered_by_hole: Option<usize>,
    pub in_origin_ball: bool,
}

/// Full record of one covering certificate run.
#[derive(Clone, Debug, Serialize)]
pub struct CoveringCertificate {
    pub lattice: String,
    pub rank: usize,
    pub alpha0: f64,
    pub mu_sq: String,
    pub symmetric_holes: bool,
    pub alpha_threshold: f64,
    pub local_radius: f64,
    pub rho: f64,
    /// Exact maximum norm over the simplex minus the hole balls.
    pub uncovered_max_norm: f64,
    pub uncovered_witness: Vec<f64>,
    pub far_factor_value: f64,
    pub subdivision_depth: u32,
    pub subdivision_nodes: usize,
    pub hole_centers: Vec<Vec<f64>>,
    pub vertices: Vec<VertexClass>,
    pub design_cutoff_sq: String,
    pub verdict: bool,
    pub trace: Vec<TraceEntry>,
    pub warnings: Vec<String>,
}

/// A candidate extreme point of the uncovered region.
#[derive(Clone, Debug)]
struct ExtremeCandidate {
    point: Vec<f64>,
    norm: f64,
}

const GEOM_TOL: f64 = 1e-10;

/// Solves the (d-1) x d system `a lambda = b` for the line of solutions
/// `lambda(s) = particular + s * direction`. Returns `None` when the rows
/// are rank deficient (no isolated candidates arise from the subset).
fn solve_line(a: &[Vec<f64>], b: &[f64]) -> Option<(Vec<f64>, Vec<f64>)> {
    let rows = a.len();
    let unknowns = a[0].len(); // rows + 1
    let width = unknowns + 1; // augmented
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    let mut pivot_cols = Vec::with_capacity(rows);
    let mut r = 0usize;
    for c in 0..unknowns {
        let (best, best_abs) = (r..rows)
            .map(|i| (i, m[i][c].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap_or((r, 0.0));
        if best_abs < GEOM_TOL {
            continue;
        }
        m.swap(r, best);
        let inv = 1.0 / m[r][c];
        for j in c..width {
            m[r][j] *= inv;
        }
        for i in 0..rows {
            if i != r && m[i][c].abs() > 0.0 {
                let f = m[i][c];
                for j in c..width {
                    m[i][j] -= f * m[r][j];
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if r < rows {
        // Rank deficient: dependent sphere gradients, no isolated
        // candidates from this subset.
        return None;
    }
    let free_col = (0..unknowns).find(|c| !pivot_cols.contains(c))?;
    let mut particular = vec![0.0; unknowns];
    let mut direction = vec![0.0; unknowns];
    direction[free_col] = 1.0;
    for (k, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = m[k][unknowns];
        direction[pc] = -m[k][free_col];
    }
    Some((particular, direction))
}

/// All candidate extreme points of `conv(simplex \ union-of-balls)`:
/// vertices outside every ball, plus, on each `d`-face, the solutions of
/// `d` simultaneous sphere equations restricted to the face.
fn uncovered_extreme_points(
    simplex: &[Vec<f64>],
    balls: &[(Vec<f64>, f64)],
) -> Vec<ExtremeCandidate> {
    let nv = simplex.len();
    let dim = simplex[0].len();
    let inside_strict = |x: &[f64], j: usize| -> bool {
        let (c, r) = &balls[j];
        let d2: f64 = x.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum();
        d2 < r * r - 1e-9
    };
    let mut out = Vec::new();

    // Vertices (0-dimensional faces).
    for v in simplex {
        if (0..balls.len()).all(|j| !inside_strict(v, j)) {
            out.push(ExtremeCandidate { point: v.clone(), norm: norm_f64(v) });
        }
    }

    // d-dimensional faces need d active spheres.
    for mask in 1u32..(1 << nv) {
        let verts: Vec<usize> = (0..nv).filter(|i| mask >> i & 1 == 1).collect();
        let d = verts.len() - 1;
        if d == 0 || d > balls.len() {
            continue;
        }
        let v0 = &simplex[verts[0]];
        let edges: Vec<Vec<f64>> = verts[1..]
            .iter()
            .map(|&i| simplex[i].iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        for ball_mask in 1u32..(1 << balls.len()) {
            if ball_mask.count_ones() as usize != d {
                continue;
            }
            let chosen: Vec<usize> =
                (0..balls.len()).filter(|j| ball_mask >> j & 1 == 1).collect();
            // Radical hyperplanes of consecutive sphere pairs reduce the
            // system to (d-1) linear equations on the face plus one sphere.
            let (c0, r0) = &balls[chosen[0]];
            let mut lin_a: Vec<Vec<f64>> = Vec::with_capacity(d - 1);
            let mut lin_b: Vec<f64> = Vec::with_capacity(d - 1);
            for &j in &chosen[1..] {
                let (cj, rj) = &balls[j];
                let normal: Vec<f64> = cj.iter().zip(c0).map(|(a, b)| 2.0 * (a - b)).collect();
                let rhs = dot_f64(cj, cj) - dot_f64(c0, c0) - rj * rj + r0 * r0
                    - dot_f64(&normal, v0);
                lin_a.push(edges.iter().map(|e| dot_f64(&normal, e)).collect());
                lin_b.push(rhs);
            }
            let (lam0, dir) = if d == 1 {
                (vec![0.0], vec![1.0])
            } else {
                match solve_line(&lin_a, &lin_b) {
                    Some(sol) => sol,
                    None => continue,
                }
            };
            // x(s) = x0 + s u, intersected with the first sphere.
            let mut x0 = v0.clone();
            for (k, e) in edges.iter().enumerate() {
                for (xc, ec) in x0.iter_mut().zip(e) {
                    *xc += lam0[k] * ec;
                }
            }
            let mut u = vec![0.0; dim];
            for (k, e) in edges.iter().enumerate() {
                for (uc, ec) in u.iter_mut().zip(e) {
                    *uc += dir[k] * ec;
                }
            }
            let w: Vec<f64> = x0.iter().zip(c0).map(|(a, b)| a - b).collect();
            let qa = dot_f64(&u, &u);
            let qb = 2.0 * dot_f64(&u, &w);
            let qc = dot_f64(&w, &w) - r0 * r0;
            if qa < GEOM_TOL {
                continue;
            }
            let disc = qb * qb - 4.0 * qa * qc;
            if disc < 0.0 {
                continue;
            }
            let sq = disc.sqrt();
            for s in [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)] {
                let lam: Vec<f64> = lam0.iter().zip(&dir).map(|(l, w)| l + s * w).collect();
                let lam_sum: f64 = lam.iter().sum();
                if lam.iter().any(|&l| l < -1e-9) || lam_sum > 1.0 + 1e-9 {
                    continue; // outside the closed face
                }
                let mut x = v0.clone();
                for (k, e) in edges.iter().enumerate() {
                    for (xc, ec) in x.iter_mut().zip(e) {
                        *xc += lam[k] * ec;
                    }
                }
                if (0..balls.len()).any(|j| !chosen.contains(&j) && inside_strict(&x, j)) {
                    continue;
                }
                out.push(ExtremeCandidate { norm: norm_f64(&x), point: x });
            }
        }
    }
    out
}

struct SubdivisionOutcome {
    covered: bool,
    max_halvings: u32,
    nodes: usize,
}

fn longest_edge(vertices: &[Vec<f64>]) -> (usize, usize, f64) {
    let mut best = (0, 1, -1.0);
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let d2: f64 = vertices[i]
                .iter()
                .zip(&vertices[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            if d2 > best.2 {
                best = (i, j, d2);
            }
        }
    }
    best
}

/// Proves `simplex subset of union(balls)` by longest-edge bisection; a
/// subsimplex whose vertices all lie in one closed ball is covered by
/// convexity. Depth is counted in diameter-halving rounds relative to the
/// root simplex.
fn subdivision_covered(
    simplex: &[Vec<f64>],
    balls: &[(Vec<f64>, f64)],
    halving_cap: u32,
    node_cap: usize,
) -> SubdivisionOutcome {
    let in_ball = |x: &[f64], (c, r): &(Vec<f64>, f64)| -> bool {
        let d2: f64 = x.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum();
        d2 <= r * r
    };
    let (_, _, root_d2) = longest_edge(simplex);
    let mut stack: Vec<Vec<Vec<f64>>> = vec![simplex.to_vec()];
    let mut nodes = 0usize;
    let mut max_halvings = 0u32;
    while let Some(cell) = stack.pop() {
        nodes += 1;
        if nodes > node_cap {
            return SubdivisionOutcome { covered: false, max_halvings, nodes };
        }
        if balls.iter().any(|b| cell.iter().all(|v| in_ball(v, b))) {
            continue;
        }
        let (i, j, d2) = longest_edge(&cell);
        let halvings = ((root_d2 / d2.max(1e-300)).log2() / 2.0).max(0.0) as u32;
        if halvings > max_halvings {
            max_halvings = halvings;
        }
        if halvings > halving_cap {
            return SubdivisionOutcome { covered: false, max_halvings, nodes };
        }
        let mid: Vec<f64> = cell[i]
            .iter()
            .zip(&cell[j])
            .map(|(a, b)| 0.5 * (a + b))
            .collect();
        let mut left = cell.clone();
        left[i] = mid.clone();
        let mut right = cell;
        right[j] = mid;
        stack.push(left);
        stack.push(right);
    }
    SubdivisionOutcome { covered: true, max_halvings, nodes }
}

/// Builds the full covering certificate for `alpha0`.
pub fn certify_stable_coldspot(
    lattice: &Lattice,
    alpha0: f64,
    config: &CertifyConfig,
) -> Result<CoveringCertificate> {
    let simplex_rat = lattice
        .simplex_vertices()
        .ok_or_else(|| Error::MissingData(format!(
            "lattice `{}` has no fundamental-simplex data",
            lattice.name()
        )))?;
    if simplex_rat.len() > 20 {
        return Err(Error::InvalidParameter(format!(
            "fundamental simplex with {} vertices exceeds the supported face enumeration",
            simplex_rat.len()
        )));
    }
    let mu_sq_rat = lattice.covering_radius_sq()?;
    let n = lattice.rank();
    let mu_sq = rat_to_f64(&mu_sq_rat);

    // Deep-hole vertices: simplex vertices at exact norm mu.
    let hole_idx: Vec<usize> = (0..simplex_rat.len())
        .filter(|&i| ratio::norm_sq(&simplex_rat[i]) == mu_sq_rat)
        .collect();
    if hole_idx.is_empty() {
        return Err(Error::MissingData(format!(
            "no deep-hole vertex on the fundamental simplex of `{}`",
            lattice.name()
        )));
    }

    let mut trace: Vec<TraceEntry> = Vec::new();
    let mut warnings: Vec<String> = Vec::new();
    let record = |trace: &mut Vec<TraceEntry>, check: &str, lhs: f64, rhs: f64, pass: bool| {
        trace.push(TraceEntry { check: check.to_string(), lhs, rhs, passed: pass });
        pass
    };

    // Symmetric kind iff every hole vertex is a double point.
    let mut symmetric = true;
    for &i in &hole_idx {
        symmetric &= lattice.is_double_point(&simplex_rat[i])?;
    }

    // Exact 2-design precondition, up to a cutoff.
    let cutoff = config
        .design_cutoff_sq
        .clone()
        .unwrap_or_else(|| &mu_sq_rat * ratio::int(4));
    let mut designs_ok = true;
    for &i in &hole_idx {
        let shells = shell_decomposition(lattice, &simplex_rat[i], &cutoff)?;
        let mut bad = 0usize;
        let mut checked = 0usize;
        for shell in &shells {
            if shell.radius_sq.is_zero() {
                continue;
            }
            checked += 1;
            if !is_exact_two_design(lattice, shell) {
                bad += 1;
            }
        }
        designs_ok &= bad == 0;
        record(
            &mut trace,
            &format!("hole vertex {i}: 2-design shells within cutoff ({checked} shells)"),
            bad as f64,
            0.0,
            bad == 0,
        );
    }
    warnings.push(format!(
        "2-design property verified for shells with r^2 <= {} only",
        ratio::format_rat(&cutoff)
    ));

    // Threshold and local radius.
    let threshold = local_threshold_alpha(n, mu_sq, symmetric);
    let threshold_ok = record(
        &mut trace,
        "alpha0 above local threshold",
        threshold + CERT_SLACK,
        alpha0,
        alpha0 >= threshold + CERT_SLACK,
    );

    let simplex: Vec<Vec<f64>> = simplex_rat.iter().map(|v| ratio::to_f64_vec(v)).collect();
    let hole_centers: Vec<Vec<f64>> = hole_idx.iter().map(|&i| simplex[i].clone()).collect();

    let (radius, rho, nu_star, witness, far, far_monotone, covered, subdivision, vertices) = if threshold_ok {
        let radius = local_radius(n, mu_sq, alpha0, symmetric)?;
        let balls: Vec<(Vec<f64>, f64)> =
            hole_centers.iter().map(|c| (c.clone(), radius)).collect();

        let candidates = uncovered_extreme_points(&simplex, &balls);
        let best = candidates
            .iter()
            .max_by(|a, b| a.norm.total_cmp(&b.norm))
            .cloned()
            .unwrap_or(ExtremeCandidate { point: vec![0.0; simplex[0].len()], norm: 0.0 });
        // Round rho up to two decimals, keeping a real covering margin.
        let mut rho = (best.norm * 100.0).ceil() / 100.0;
        if rho - best.norm < 5e-3 {
            rho += 0.01;
        }
        record(
            &mut trace,
            "uncovered extreme norm below rho",
            best.norm,
            rho,
            best.norm <= rho - CERT_SLACK,
        );

        let mut all_balls = balls.clone();
        all_balls.push((vec![0.0; simplex[0].len()], rho));
        let sub = subdivision_covered(
            &simplex,
            &all_balls,
            config.subdivision_halving_cap,
            config.subdivision_node_cap,
        );
        record(
            &mut trace,
            "subdivision proves covering",
            if sub.covered { 0.0 } else { 1.0 },
            0.0,
            sub.covered,
        );

        let far = if rho * rho < mu_sq {
            far_factor(n, mu_sq, alpha0, rho)?
        } else {
            f64::INFINITY
        };
        record(&mut trace, "far-field factor below one", far, 1.0 - CERT_SLACK, far <= 1.0 - CERT_SLACK);
        // The factor is decreasing in alpha once alpha > n/(2(mu^2-rho^2)),
        // so this check extends "below one" from alpha0 to every larger
        // alpha. The local radius grows with alpha and the covering does
        // not depend on it, so the whole verdict is inherited upward.
        let mono_at = n as f64 / (2.0 * (mu_sq - rho * rho)).max(1e-300);
        let far_monotone = record(
            &mut trace,
            "far-field factor monotone beyond alpha0",
            mono_at + CERT_SLACK,
            alpha0,
            alpha0 >= mono_at + CERT_SLACK,
        );

        let vertices: Vec<VertexClass> = simplex
            .iter()
            .map(|v| {
                let covered_by_hole = balls.iter().position(|(c, r)| {
                    let d2: f64 = v.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum();
                    d2 <= r * r
                });
                VertexClass {
                    coords: v.clone(),
                    norm: norm_f64(v),
                    covered_by_hole,
                    in_origin_ball: norm_f64(v) <= rho,
                }
            })
            .collect();
        (radius, rho, best.norm, best.point, far, far_monotone, sub.covered, sub, vertices)
    } else {
        let vertices = simplex
            .iter()
            .map(|v| VertexClass {
                coords: v.clone(),
                norm: norm_f64(v),
                covered_by_hole: None,
                in_origin_ball: false,
            })
            .collect();
        warnings.push("alpha0 below the local threshold; covering not attempted".into());
        (
            0.0,
            0.0,
            0.0,
            Vec::new(),
            f64::INFINITY,
            false,
            false,
            SubdivisionOutcome { covered: false, max_halvings: 0, nodes: 0 },
            vertices,
        )
    };

    let verdict = threshold_ok
        && designs_ok
        && covered
        && far <= 1.0 - CERT_SLACK
        && far_monotone
        && nu_star <= rho - CERT_SLACK;

    Ok(CoveringCertificate {
        lattice: lattice.name().to_string(),
        rank: n,
        alpha0,
        mu_sq: ratio::format_rat(&mu_sq_rat),
        symmetric_holes: symmetric,
        alpha_threshold: threshold,
        local_radius: radius,
        rho,
        uncovered_max_norm: nu_star,
        uncovered_witness: witness,
        far_factor_value: far,
        subdivision_depth: subdivision.max_halvings,
        subdivision_nodes: subdivision.nodes,
        hole_centers,
        vertices,
        design_cutoff_sq: ratio::format_rat(&cutoff),
        verdict,
        trace,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_line_simple() {
        // x + y = 1 in 2 unknowns: line through (1,0) direction (-1,1)-ish.
        let (p, d) = solve_line(&[vec![1.0, 1.0]], &[1.0]).unwrap();
        assert!((p[0] + p[1] - 1.0).abs() < 1e-12);
        assert!((d[0] + d[1]).abs() < 1e-12);
        // Rank-deficient: 0 = 0.
        assert!(solve_line(&[vec![0.0, 0.0]], &[0.0]).is_none());
    }

    #[test]
    fn triangle_covering_extremes() {
        // Unit right triangle, one ball at the right-angle vertex.
        let simplex = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]];
        let balls = vec![(vec![0.0, 0.0], 0.8)];
        let cands = uncovered_extreme_points(&simplex, &balls);
        // Extremes: the two far vertices and the sphere crossings on the
        // three edges touching the uncovered region.
        let max = cands.iter().map(|c| c.norm).fold(0.0, f64::max);
        // The hypotenuse point farthest from origin is a vertex (norm 1).
        assert!((max - 1.0).abs() < 1e-12);
    }

    #[test]
    fn subdivision_on_triangle() {
        let simplex = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]];
        // Two balls that clearly cover the triangle.
        let balls = vec![(vec![0.0, 0.0], 0.85), (vec![0.5, 0.5], 0.75)];
        let out = subdivision_covered(&simplex, &balls, 12, 100_000);
        assert!(out.covered);
        // A ball pair that misses the corner (1,0) must fail fast.
        let balls = vec![(vec![0.0, 0.0], 0.5), (vec![0.0, 1.0], 0.5)];
        let out = subdivision_covered(&simplex, &balls, 6, 100_000);
        assert!(!out.covered);
    }

    #[test]
    fn e8_certificate_at_23() {
        let e8 = Lattice::by_name("e8").unwrap();
        let cert = certify_stable_coldspot(&e8, 23.0, &CertifyConfig::default()).unwrap();
        assert!(cert.verdict, "trace: {:?}", cert.trace);
        assert!(cert.symmetric_holes);
        assert!(cert.local_radius > 0.66 && cert.local_radius < 0.67);
        assert!(cert.rho <= 0.72 + 1e-12);
        assert!(cert.far_factor_value < 1.0 - 1e-2);
        assert!((cert.uncovered_max_norm - 0.712230).abs() < 1e-4);
    }

    #[test]
    fn subdivision_rejects_undersized_origin_ball() {
        // With rho below the true uncovered maximum (0.71223), a small
        // uncovered lens remains near the worst edge point; the
        // subdivision must refuse to certify it.
        let e8 = Lattice::by_name("e8").unwrap();
        let simplex: Vec<Vec<f64>> = e8
            .simplex_vertices()
            .unwrap()
            .iter()
            .map(|v| crate::ratio::to_f64_vec(v))
            .collect();
        let radius = local_radius(8, 1.0, 23.0, true).unwrap();
        let mut balls: Vec<(Vec<f64>, f64)> = vec![(simplex[8].clone(), radius)];
        balls.push((vec![0.0; 8], 0.70));
        let out = subdivision_covered(&simplex, &balls, 12, 2_000_000);
        assert!(!out.covered);
        // And with the certified rho it passes with room to spare.
        balls[1].1 = 0.72;
        let out = subdivision_covered(&simplex, &balls, 12, 2_000_000);
        assert!(out.covered);
        assert!(out.nodes < 100_000);
    }

    #[test]
    fn e8_fails_below_threshold() {
        let e8 = Lattice::by_name("e8").unwrap();
        let cert = certify_stable_coldspot(&e8, 7.0, &CertifyConfig::default()).unwrap();
        assert!(!cert.verdict);
        assert!(cert.alpha_threshold > 7.0);
    }

    #[test]
    fn d4_certificate_at_5() {
        let d4 = Lattice::by_name("d4").unwrap();
        let cert = certify_stable_coldspot(&d4, 5.0, &CertifyConfig::default()).unwrap();
        assert!(cert.verdict, "trace: {:?}", cert.trace);
        assert!(cert.local_radius >= 0.8);
        assert!(cert.rho <= 0.35);
        assert!(cert.far_factor_value < 1.0);
    }

    #[test]
    fn a2_certificate() {
        // The hexagonal lattice is covered by the general-kind machinery.
        let a2 = Lattice::by_name("a2").unwrap();
        let cert = certify_stable_coldspot(&a2, 6.0, &CertifyConfig::default()).unwrap();
        assert!(!cert.symmetric_holes);
        assert!(cert.verdict, "trace: {:?}", cert.trace);
    }

    #[test]
    fn certificate_monotone_in_alpha() {
        let e8 = Lattice::by_name("e8").unwrap();
        for alpha in [23.0, 30.0, 50.0] {
            let cert = certify_stable_coldspot(&e8, alpha, &CertifyConfig::default()).unwrap();
            assert!(cert.verdict, "alpha = {alpha}");
        }
        let d4 = Lattice::by_name("d4").unwrap();
        for alpha in [5.0, 8.0, 20.0] {
            let cert = certify_stable_coldspot(&d4, alpha, &CertifyConfig::default()).unwrap();
            assert!(cert.verdict, "alpha = {alpha}");
        }
    }

    #[test]
    fn missing_simplex_data_errors() {
        let e7 = Lattice::by_name("e7").unwrap();
        assert!(matches!(
            certify_stable_coldspoot_helper(&e7),
            Err(Error::MissingData(_))
        ));
    }

    fn certify_stable_coldspoot_helper(l: &Lattice) -> Result<CoveringCertificate> {
        certify_stable_coldspot(l, 25.0, &CertifyConfig::default())
    }
}
