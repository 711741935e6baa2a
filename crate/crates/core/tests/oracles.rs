//! Independent oracles and property suites: brute-force box enumeration
//! against the pruned search, quadrature orthogonality of the Gegenbauer
//! polynomials, exact-vs-float design verdicts, finite-difference checks
//! of the gradient and Hessian, and the steep-potential ordering of shell
//! profiles.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use coldspot_core::catalog::{computed_profile, profile_order, ProfileOrder};
use coldspot_core::designs::{
    design_strength, is_exact_one_design, is_exact_two_design, jacobi_p, DEFAULT_DESIGN_TOL,
};
use coldspot_core::enumerate::{close_vectors, nearest_shell, shell_decomposition, Shell};
use coldspot_core::lp::{lp_witness, WitnessKind};
use coldspot_core::potential::{gradient, potential};
use coldspot_core::ratio::{self, int, rat, rat_to_f64, Rat};
use coldspot_core::Lattice;

fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn random_rat(rng: &mut ChaCha12Rng, num_range: i64, dens: &[i64]) -> Rat {
    let p = rng.gen_range(-num_range..=num_range);
    let q = dens[rng.gen_range(0..dens.len())];
    rat(p, q)
}

/// Random full-rank lattice of the given rank with small rational entries.
fn random_lattice(rng: &mut ChaCha12Rng, rank: usize) -> Lattice {
    loop {
        let basis: Vec<Vec<Rat>> = (0..rank)
            .map(|_| (0..rank).map(|_| random_rat(rng, 3, &[1, 2, 3])).collect())
            .collect();
        if let Ok(l) = Lattice::from_basis("random", basis) {
            // Avoid extremely skewed bases; they make the box oracle huge.
            if rat_to_f64(&l.det_gram()) > 0.05 {
                return l;
            }
        }
    }
}

/// Exhaustive search over a provably sufficient coefficient box:
/// |t_i - y_i| <= sqrt(r^2 (G^{-1})_{ii}).
fn brute_force_close_vectors(l: &Lattice, z: &[Rat], r_sq: &Rat) -> Vec<Vec<Rat>> {
    let rank = l.rank();
    let gram: Vec<Vec<Rat>> = l.gram().to_vec();
    let ginv = ratio::invert(&gram).unwrap();
    let rhs: Vec<Rat> = l.basis().iter().map(|b| ratio::dot(b, z)).collect();
    let y = ratio::solve(&gram, &rhs).unwrap();
    let r_f = rat_to_f64(r_sq).max(0.0);
    let mut lo = vec![0i64; rank];
    let mut hi = vec![0i64; rank];
    for i in 0..rank {
        let half = (r_f * rat_to_f64(&ginv[i][i])).sqrt() + 1e-9;
        let c = rat_to_f64(&y[i]);
        lo[i] = (c - half).floor() as i64 - 1;
        hi[i] = (c + half).ceil() as i64 + 1;
    }
    let mut out = Vec::new();
    let mut t = lo.clone();
    'outer: loop {
        let mut x = vec![Rat::zero(); l.ambient_dim()];
        for (ti, b) in t.iter().zip(l.basis()) {
            for (xc, bc) in x.iter_mut().zip(b) {
                *xc += int(*ti) * bc;
            }
        }
        if ratio::norm_sq(&ratio::sub(&x, z)) <= *r_sq {
            out.push(x);
        }
        for i in 0..rank {
            t[i] += 1;
            if t[i] <= hi[i] {
                continue 'outer;
            }
            t[i] = lo[i];
        }
        break;
    }
    out.sort();
    out
}

#[test]
fn enumeration_matches_brute_force() {
    let mut rng = rng(11);
    for case in 0..60 {
        let rank = rng.gen_range(1..=4);
        let l = random_lattice(&mut rng, rank);
        let z: Vec<Rat> = (0..rank).map(|_| random_rat(&mut rng, 4, &[1, 2, 4, 5])).collect();
        let r_sq = rat(rng.gen_range(1..=6), 1);
        let fast = close_vectors(&l, &z, &r_sq).unwrap();
        let slow = brute_force_close_vectors(&l, &z, &r_sq);
        assert_eq!(fast, slow, "case {case} rank {rank}");
    }
}

#[test]
fn enumeration_monotone_and_translation_equivariant() {
    let mut rng = rng(23);
    for _ in 0..20 {
        let rank = rng.gen_range(2..=3);
        let l = random_lattice(&mut rng, rank);
        let z: Vec<Rat> = (0..rank).map(|_| random_rat(&mut rng, 3, &[1, 3])).collect();
        let small = close_vectors(&l, &z, &rat(2, 1)).unwrap();
        let large = close_vectors(&l, &z, &rat(4, 1)).unwrap();
        for v in &small {
            assert!(large.contains(v), "monotonicity violated");
        }
        // Translating the target by a lattice vector translates the set.
        let shift = l.basis()[0].clone();
        let moved = close_vectors(&l, &ratio::add(&z, &shift), &rat(2, 1)).unwrap();
        let expected: Vec<Vec<Rat>> = {
            let mut e: Vec<Vec<Rat>> = small.iter().map(|v| ratio::add(v, &shift)).collect();
            e.sort();
            e
        };
        assert_eq!(moved, expected, "translation equivariance violated");
    }
}

#[test]
fn shells_of_double_points_are_centrally_symmetric() {
    let mut rng = rng(37);
    for _ in 0..10 {
        let rank = rng.gen_range(2..=3);
        let l = random_lattice(&mut rng, rank);
        // Half-lattice points are double points.
        let z: Vec<Rat> = l.basis().iter().fold(vec![Rat::zero(); rank], |acc, b| {
            ratio::add(&acc, &ratio::scale(b, &rat(1, 2)))
        });
        assert!(l.is_double_point(&z).unwrap());
        for shell in shell_decomposition(&l, &z, &rat(3, 1)).unwrap() {
            for v in &shell.vectors {
                let mirrored: Vec<Rat> = z
                    .iter()
                    .zip(v)
                    .map(|(zc, vc)| zc + zc - vc)
                    .collect();
                assert!(shell.vectors.contains(&mirrored), "shell not symmetric");
            }
        }
    }
}

/// Gauss-Legendre nodes and weights on [a, b] by Newton iteration.
fn gauss_legendre(order: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(order);
    let n = order;
    for i in 0..n {
        // Initial guess (Chebyshev-like).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via recurrence.
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0f64, x);
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w));
    }
    out
}

#[test]
fn gegenbauer_orthogonality_by_quadrature() {
    // Substitute t = cos(theta): the integrand P_k P_l sin^{n-2}(theta) is
    // analytic, so Gauss-Legendre in theta converges spectrally for all n.
    let nodes = gauss_legendre(160, 0.0, std::f64::consts::PI);
    for n in 2..=24usize {
        for k in 0..=6usize {
            for l in 0..=6usize {
                if k == l {
                    continue;
                }
                let mut s = 0.0;
                for &(theta, w) in &nodes {
                    let t = theta.cos();
                    let pk = jacobi_p(n, k, t).unwrap();
                    let pl = jacobi_p(n, l, t).unwrap();
                    s += w * pk * pl * theta.sin().powi(n as i32 - 2);
                }
                assert!(s.abs() < 1e-10, "n={n} k={k} l={l}: {s}");
            }
        }
    }
}

#[test]
fn exact_and_float_design_verdicts_agree() {
    let mut rng = rng(101);
    let mut tested = 0usize;
    while tested < 100 {
        let rank = rng.gen_range(2..=3);
        let l = random_lattice(&mut rng, rank);
        let z: Vec<Rat> = (0..rank).map(|_| random_rat(&mut rng, 2, &[1, 2, 3, 4])).collect();
        let shell = nearest_shell(&l, &z).unwrap();
        if shell.radius_sq.is_zero() || shell.count() < 2 {
            continue;
        }
        let rep = design_strength(&l, &shell, 2, DEFAULT_DESIGN_TOL).unwrap();
        let float_one = rep.per_degree_defects[0] <= DEFAULT_DESIGN_TOL;
        let float_two = rep.per_degree_defects[1] <= DEFAULT_DESIGN_TOL;
        assert_eq!(float_one, rep.exact_one_design, "degree-1 disagreement");
        assert_eq!(float_two && float_one, rep.exact_two_design && rep.exact_one_design);
        tested += 1;
    }
}

#[test]
fn design_strength_invariant_under_relabeling() {
    let e8 = Lattice::by_name("e8").unwrap();
    let shell = nearest_shell(&e8, &e8.deep_holes()[0].coords).unwrap();
    let base = design_strength(&e8, &shell, 5, DEFAULT_DESIGN_TOL).unwrap();
    // Permute the shell vectors; strength and defects must not move.
    let mut rng = rng(5);
    let mut vectors = shell.vectors.clone();
    for i in (1..vectors.len()).rev() {
        let j = rng.gen_range(0..=i);
        vectors.swap(i, j);
    }
    let shuffled = Shell {
        center: shell.center.clone(),
        radius_sq: shell.radius_sq.clone(),
        vectors,
    };
    let moved = design_strength(&e8, &shuffled, 5, DEFAULT_DESIGN_TOL).unwrap();
    assert_eq!(base.strength, moved.strength);
    for (a, b) in base.per_degree_defects.iter().zip(&moved.per_degree_defects) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn lp_soundness_on_design_shells() {
    // For a verified 2-design shell and any unit y:
    // sum_x a_gamma(u_x . y) >= h0 |X| (up to float fuzz).
    let mut rng = rng(301);
    for (name, hole_label) in [("e8", "deep"), ("d4", "[2]"), ("a2", "[1]")] {
        let l = Lattice::by_name(name).unwrap();
        let hole = l.deep_holes().iter().find(|h| h.label == hole_label).unwrap();
        let shell = nearest_shell(&l, &hole.coords).unwrap();
        assert!(is_exact_two_design(&l, &shell));
        let n = l.rank();
        // Unit vectors of the shell in an orthonormal frame: rebuild here.
        let basis_f64: Vec<Vec<f64>> =
            l.basis().iter().map(|b| ratio::to_f64_vec(b)).collect();
        let frame = orthonormal(&basis_f64);
        let r = rat_to_f64(&shell.radius_sq).sqrt();
        let center = ratio::to_f64_vec(&shell.center);
        let units: Vec<Vec<f64>> = shell
            .vectors
            .iter()
            .map(|x| {
                let xf = ratio::to_f64_vec(x);
                let d: Vec<f64> = xf.iter().zip(&center).map(|(a, b)| a - b).collect();
                frame.iter().map(|f| dot(f, &d) / r).collect()
            })
            .collect();
        for &gamma in &[0.5f64, 2.0, 7.0] {
            let w = lp_witness(n, gamma, WitnessKind::General).unwrap();
            assert!(w.feasible);
            for _ in 0..100 {
                let y = random_unit(&mut rng, n);
                let sum: f64 = units.iter().map(|u| (gamma * dot(u, &y)).exp()).sum();
                let bound = w.h0 * units.len() as f64;
                assert!(
                    sum >= bound - 1e-9 * units.len() as f64,
                    "{name} gamma={gamma}: {sum} < {bound}"
                );
            }
        }
        // The E8 first shell is a cross polytope; the symmetric bound is
        // attained at the all-ones diagonal of the antipodal pairs.
        if name == "e8" {
            let mut y = vec![0.0; n];
            for u in &units {
                if u.iter().find(|c| c.abs() > 1e-9).is_some_and(|c| *c > 0.0) {
                    for (yc, uc) in y.iter_mut().zip(u) {
                        *yc += uc;
                    }
                }
            }
            let norm = dot(&y, &y).sqrt();
            for yc in y.iter_mut() {
                *yc /= norm;
            }
            for &gamma in &[0.5f64, 2.0, 10.0] {
                let sum: f64 = units.iter().map(|u| (gamma * dot(u, &y)).exp()).sum();
                let bound = (gamma / (n as f64).sqrt()).cosh() * units.len() as f64;
                assert!(
                    (sum - bound).abs() <= 1e-10 * bound,
                    "symmetric tightness on the E8 shell: {sum} vs {bound}"
                );
            }
        }
    }
}

fn orthonormal(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut frame: Vec<Vec<f64>> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for f in &frame {
            let d = dot(&v, f);
            for (vc, fc) in v.iter_mut().zip(f) {
                *vc -= d * fc;
            }
        }
        let n = dot(&v, &v).sqrt();
        if n > 1e-12 {
            for vc in v.iter_mut() {
                *vc /= n;
            }
            frame.push(v);
        }
    }
    frame
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn random_unit(rng: &mut ChaCha12Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
        let norm = dot(&v, &v).sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

#[test]
fn finite_difference_gradient_on_generic_lattice() {
    // A lattice without special symmetry keeps the gradient well away
    // from zero at random points.
    let l = Lattice::from_basis(
        "skew2d",
        vec![vec![int(1), int(0)], vec![rat(2, 5), rat(11, 10)]],
    )
    .unwrap();
    let mut rng = rng(77);
    let h = rat(1, 100_000);
    for _ in 0..6 {
        let z = vec![random_rat(&mut rng, 40, &[100]), random_rat(&mut rng, 40, &[100])];
        let alpha = 3.0;
        let g = gradient(&l, alpha, &z, 1e-13).unwrap();
        for i in 0..2 {
            let mut zp = z.clone();
            zp[i] += &h;
            let mut zm = z.clone();
            zm[i] -= &h;
            let pp = potential(&l, alpha, &zp, 1e-14).unwrap().value;
            let pm = potential(&l, alpha, &zm, 1e-14).unwrap().value;
            let fd = (pp - pm) / (2.0 * rat_to_f64(&h));
            assert!(
                (g[i] - fd).abs() <= 1e-5 * g[i].abs().max(1e-2),
                "coordinate {i}: {} vs {}",
                g[i],
                fd
            );
        }
    }
}

#[test]
fn profile_order_matches_potential_sign_at_steep_alpha() {
    // Smaller profile means larger potential for large alpha; verify the
    // sign of the difference at alpha = 50 for points with distinct
    // profiles on rank <= 4 lattices.
    let cases: Vec<(Lattice, Vec<Rat>, Vec<Rat>)> = vec![
        (
            Lattice::by_name("z1").unwrap(),
            vec![rat(2, 5)],
            vec![rat(1, 2)],
        ),
        (
            Lattice::by_name("d4").unwrap(),
            vec![rat(1, 2), rat(1, 2), Rat::zero(), Rat::zero()],
            vec![Rat::zero(), Rat::zero(), Rat::zero(), Rat::from_integer(1.into())],
        ),
    ];
    for (l, z1, z2) in &cases {
        let p1 = computed_profile(l, z1, 3).unwrap();
        let p2 = computed_profile(l, z2, 3).unwrap();
        let order = profile_order(&p1, &p2);
        assert_ne!(order, ProfileOrder::UndecidableAtDepth);
        let v1 = potential(l, 50.0, z1, 1e-16).unwrap();
        let v2 = potential(l, 50.0, z2, 1e-16).unwrap();
        let diff = v1.value - v2.value;
        assert!(diff.abs() > v1.tail_bound + v2.tail_bound, "difference must be decidable");
        match order {
            ProfileOrder::PGreater => assert!(diff > 0.0, "{}", l.name()),
            ProfileOrder::QGreater => assert!(diff < 0.0, "{}", l.name()),
            ProfileOrder::UndecidableAtDepth => unreachable!(),
        }
    }
}

#[test]
fn leech_frame_hole_has_a1_profile() {
    // A norm-8 lattice vector w whose coset w + 2L has minimum norm 8
    // yields the deep hole w/2 of type A_1^24: first shell (r^2, count) =
    // (2, 48) with design strength 3. The first basis vector of the
    // standard construction is such a frame vector.
    let leech = Lattice::by_name("leech").unwrap();
    let w = leech
        .basis()
        .iter()
        .find(|b| ratio::norm_sq(b) == int(8))
        .expect("standard basis contains a norm-8 vector");
    let c: Vec<Rat> = w.iter().map(|x| x / int(2)).collect();
    let shell = nearest_shell(&leech, &c).unwrap();
    assert_eq!(shell.radius_sq, int(2));
    assert_eq!(shell.count(), 48);
    assert!(is_exact_one_design(&shell));
    let rep = design_strength(&leech, &shell, 4, DEFAULT_DESIGN_TOL).unwrap();
    assert_eq!(rep.strength, 3);
}

#[test]
fn kissing_numbers_of_heavy_lattices() {
    // K12 has 756 minimal vectors of norm 4, BW16 has 4320.
    for (name, kissing) in [("k12", 756usize), ("bw16", 4320)] {
        let l = Lattice::by_name(name).unwrap();
        let zero = vec![Rat::zero(); l.ambient_dim()];
        let v = close_vectors(&l, &zero, &int(4)).unwrap();
        assert_eq!(v.len(), kissing + 1, "{name}: minimal vectors plus origin");
    }
}

#[test]
#[ignore = "three minutes of exact rank-24 enumeration; run with --ignored"]
fn leech_kissing_number() {
    let leech = Lattice::by_name("leech").unwrap();
    let zero = vec![Rat::zero(); leech.ambient_dim()];
    let v = close_vectors(&leech, &zero, &int(4)).unwrap();
    assert_eq!(v.len(), 196_561);
}

#[test]
fn certificates_extend_across_root_lattices() {
    // Beyond the sharp E8 and D4 thresholds, the same covering machinery
    // certifies other members of the A and D series at lattice-specific
    // steepness values.
    use coldspot_core::certify::{certify_stable_coldspot, CertifyConfig};
    for (name, alpha0) in [("a3", 6.0), ("a4", 24.0), ("a5", 30.0), ("d5", 50.0), ("d6", 24.0)] {
        let l = Lattice::by_name(name).unwrap();
        let cert = certify_stable_coldspot(&l, alpha0, &CertifyConfig::default()).unwrap();
        assert!(cert.verdict, "{name} at alpha0 = {alpha0}: {:?}", cert.trace);
        assert!(cert.far_factor_value < 1.0);
    }
}
