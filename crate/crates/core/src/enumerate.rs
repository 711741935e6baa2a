//! Exact enumeration of lattice vectors near a target point, and the
//! grouping of those vectors into inhomogeneous shells `L(z, r)`.
//!
//! The basis is LLL-reduced once per lattice; the Fincke-Pohst search tree
//! is pruned with exact rational bookkeeping, so the returned vector sets
//! are exactly `{x in L : |x - z|^2 <= R^2}` with no misses and no
//! duplicates. Floating point never enters this module.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lattice::Lattice;
use crate::ratio::{self, rat, Rat};
use crate::{Error, Result};

/// Default cap on the number of returned vectors.
pub const DEFAULT_VECTOR_CAP: usize = 2_000_000;

/// An inhomogeneous shell: all lattice vectors at one exact squared
/// distance from the center.
#[derive(Clone, Debug)]
pub struct Shell {
    pub center: Vec<Rat>,
    pub radius_sq: Rat,
    /// Lexicographically sorted, pairwise distinct.
    pub vectors: Vec<Vec<Rat>>,
}

impl Shell {
    pub fn count(&self) -> usize {
        self.vectors.len()
    }
}

/// LLL-reduced enumeration data, built lazily per lattice.
#[derive(Debug)]
pub struct EnumContext {
    /// Reduced basis rows in ambient coordinates.
    reduced: Vec<Vec<Rat>>,
    /// Gram matrix of the reduced basis.
    gram: Vec<Vec<Rat>>,
    /// Gram-Schmidt coefficients of the reduced basis (strict lower part).
    mu: Vec<Vec<Rat>>,
    /// Squared norms of the Gram-Schmidt vectors.
    gs_norm: Vec<Rat>,
}

impl EnumContext {
    pub(crate) fn build(lattice: &Lattice) -> EnumContext {
        let reduced = lll_reduce(lattice.basis().to_vec());
        let rank = reduced.len();
        let mut gram = vec![vec![Rat::zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..=i {
                let v = ratio::dot(&reduced[i], &reduced[j]);
                gram[i][j] = v.clone();
                gram[j][i] = v;
            }
        }
        let (mu, gs_norm) = gram_schmidt(&gram);
        EnumContext { reduced, gram, mu, gs_norm }
    }

    /// Coordinates of an ambient point w.r.t. the reduced basis, failing
    /// when the point is outside the span.
    fn coords(&self, z: &[Rat]) -> Result<Vec<Rat>> {
        let rhs: Vec<Rat> = self.reduced.iter().map(|b| ratio::dot(b, z)).collect();
        let t = ratio::solve(&self.gram, &rhs).expect("reduced Gram is invertible");
        let mut recon = vec![Rat::zero(); z.len()];
        for (ti, b) in t.iter().zip(&self.reduced) {
            for (r, bc) in recon.iter_mut().zip(b) {
                *r += ti * bc;
            }
        }
        if recon.as_slice() != z {
            return Err(Error::OutsideSpan);
        }
        Ok(t)
    }

    fn ambient(&self, s: &[BigInt]) -> Vec<Rat> {
        let m = self.reduced[0].len();
        let mut x = vec![Rat::zero(); m];
        for (si, b) in s.iter().zip(&self.reduced) {
            if si.is_zero() {
                continue;
            }
            let c = Rat::from_integer(si.clone());
            for (xc, bc) in x.iter_mut().zip(b) {
                *xc += &c * bc;
            }
        }
        x
    }
}

/// Exact Gram-Schmidt data from a Gram matrix: `mu[i][j]` for `j < i` and
/// the squared norms of the orthogonalized vectors.
fn gram_schmidt(gram: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let n = gram.len();
    let mut mu = vec![vec![Rat::zero(); n]; n];
    let mut d = vec![Rat::zero(); n];
    // r[i][j] = <b_i, b*_j>
    let mut r = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut v = gram[i][j].clone();
            for k in 0..j {
                let t = &mu[j][k] * &r[i][k];
                v -= t;
            }
            r[i][j] = v.clone();
            if j < i {
                mu[i][j] = v / &d[j];
            } else {
                d[i] = v;
            }
        }
    }
    (mu, d)
}

/// Exact LLL reduction (delta = 3/4) of rational basis rows.
fn lll_reduce(mut basis: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let n = basis.len();
    if n <= 1 {
        return basis;
    }
    let delta = rat(3, 4);
    let half = rat(1, 2);
    let gram_of = |b: &[Vec<Rat>]| {
        let mut g = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                let v = ratio::dot(&b[i], &b[j]);
                g[i][j] = v.clone();
                g[j][i] = v;
            }
        }
        g
    };
    let mut gram = gram_of(&basis);
    let (mut mu, mut d) = gram_schmidt(&gram);
    let mut k = 1usize;
    let mut steps = 0usize;
    while k < n {
        // Size-reduce b_k against b_{k-1}, ..., b_0.
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let q = round_rat(&mu[k][j]);
                let qr = Rat::from_integer(q);
                for t in 0..basis[k].len() {
                    let s = &qr * &basis[j][t];
                    basis[k][t] -= s;
                }
                gram = gram_of(&basis);
                let gs = gram_schmidt(&gram);
                mu = gs.0;
                d = gs.1;
            }
        }
        let lhs = &d[k] + &mu[k][k - 1] * &mu[k][k - 1] * &d[k - 1];
        if lhs >= &delta * &d[k - 1] {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            gram = gram_of(&basis);
            let gs = gram_schmidt(&gram);
            mu = gs.0;
            d = gs.1;
            k = k.max(2) - 1;
        }
        steps += 1;
        if steps > 100_000 {
            // LLL terminates in theory; this guards against a logic bug
            // turning into an infinite loop.
            break;
        }
    }
    basis
}

fn round_rat(r: &Rat) -> BigInt {
    (r + rat(1, 2)).floor().to_integer()
}

/// Exactly the set `{x in L : |x - z|^2 <= r_sq}`, sorted
/// lexicographically. `z` must lie in the real span of `L`.
pub fn close_vectors(lattice: &Lattice, z: &[Rat], r_sq: &Rat) -> Result<Vec<Vec<Rat>>> {
    close_vectors_capped(lattice, z, r_sq, DEFAULT_VECTOR_CAP)
}

/// As [`close_vectors`] with an explicit cap on the result size.
pub fn close_vectors_capped(
    lattice: &Lattice,
    z: &[Rat],
    r_sq: &Rat,
    cap: usize,
) -> Result<Vec<Vec<Rat>>> {
    let mut out: Vec<Vec<Rat>> = Vec::new();
    for (s, _) in enumerate_coeffs(lattice, z, r_sq, cap)? {
        let ctx = lattice.enum_ctx();
        out.push(ctx.ambient(&s));
    }
    out.sort();
    Ok(out)
}

/// Partition of the close vectors into shells of strictly increasing exact
/// squared radius.
pub fn shell_decomposition(lattice: &Lattice, z: &[Rat], r_sq: &Rat) -> Result<Vec<Shell>> {
    let mut by_radius: std::collections::BTreeMap<Rat, Vec<Vec<Rat>>> =
        std::collections::BTreeMap::new();
    let found = enumerate_coeffs(lattice, z, r_sq, DEFAULT_VECTOR_CAP)?;
    let ctx = lattice.enum_ctx();
    for (s, dist_sq) in found {
        by_radius.entry(dist_sq).or_default().push(ctx.ambient(&s));
    }
    Ok(by_radius
        .into_iter()
        .map(|(radius_sq, mut vectors)| {
            vectors.sort();
            Shell { center: z.to_vec(), radius_sq, vectors }
        })
        .collect())
}

/// The nonempty shell of minimal radius around `z` (the vertex set of the
/// Delaunay polytope of `z`). A Babai nearest-plane candidate provides a
/// radius that already contains a lattice point; the radius is doubled as
/// a fallback only if that ever fails.
pub fn nearest_shell(lattice: &Lattice, z: &[Rat]) -> Result<Shell> {
    let ctx = lattice.enum_ctx();
    let y = ctx.coords(z)?;
    let rank = y.len();
    // Babai nearest plane in the reduced basis.
    let mut s = vec![BigInt::zero(); rank];
    for i in (0..rank).rev() {
        let mut c = y[i].clone();
        for j in i + 1..rank {
            let w = Rat::from_integer(s[j].clone()) - &y[j];
            let t = &ctx.mu[j][i] * w;
            c -= t;
        }
        s[i] = round_rat(&c);
    }
    let cand = ctx.ambient(&s);
    let mut r_sq = ratio::norm_sq(&ratio::sub(&cand, z));
    loop {
        let shells = shell_decomposition(lattice, z, &r_sq)?;
        if let Some(first) = shells.into_iter().next() {
            return Ok(first);
        }
        // Unreachable with a valid Babai candidate; grow geometrically.
        r_sq = if r_sq.is_zero() { Rat::one() } else { r_sq * rat(2, 1) };
    }
}

/// Core Fincke-Pohst tree walk over integer coefficients of the reduced
/// basis; returns coefficient vectors with their exact squared distances.
fn enumerate_coeffs(
    lattice: &Lattice,
    z: &[Rat],
    r_sq: &Rat,
    cap: usize,
) -> Result<Vec<(Vec<BigInt>, Rat)>> {
    if r_sq.is_negative() {
        return Err(Error::NegativeRadius);
    }
    let ctx = lattice.enum_ctx();
    let y = ctx.coords(z)?;
    let rank = y.len();
    let mut out: Vec<(Vec<BigInt>, Rat)> = Vec::new();
    let mut s = vec![BigInt::zero(); rank];
    // rem[i] = budget left at level i; filled while descending.
    walk(ctx, &y, r_sq, rank, &mut s, &Rat::zero(), cap, &mut out)?;
    Ok(out)
}

/// Recursive descent over levels `rank-1 .. 0`; `level` counts how many
/// coordinates remain to fix. `used` is the cost of the fixed ones.
#[allow(clippy::too_many_arguments)]
fn walk(
    ctx: &EnumContext,
    y: &[Rat],
    r_sq: &Rat,
    level: usize,
    s: &mut Vec<BigInt>,
    used: &Rat,
    cap: usize,
    out: &mut Vec<(Vec<BigInt>, Rat)>,
) -> Result<()> {
    if level == 0 {
        if out.len() >= cap {
            return Err(Error::EnumerationCap(cap));
        }
        out.push((s.clone(), used.clone()));
        return Ok(());
    }
    let i = level - 1;
    // Center of the allowed interval for s_i given the fixed coordinates.
    let mut center = y[i].clone();
    for j in level..y.len() {
        let w = Rat::from_integer(s[j].clone()) - &y[j];
        let t = &ctx.mu[j][i] * w;
        center -= t;
    }
    let budget = r_sq - used;
    let cost = |si: &BigInt| -> Rat {
        let w = Rat::from_integer(si.clone()) - &center;
        &ctx.gs_norm[i] * &w * &w
    };
    // The cost is quadratic with minimum at `center`, so scanning upward
    // from the rounded center and downward from just below it may each
    // stop at the first coordinate over budget.
    let start = round_rat(&center);
    let mut si = start.clone();
    loop {
        let c = cost(&si);
        if c > budget {
            break;
        }
        s[i] = si.clone();
        let used2 = used + c;
        walk(ctx, y, r_sq, level - 1, s, &used2, cap, out)?;
        si += BigInt::one();
    }
    let mut si = &start - BigInt::one();
    loop {
        let c = cost(&si);
        if c > budget {
            break;
        }
        s[i] = si.clone();
        let used2 = used + c;
        walk(ctx, y, r_sq, level - 1, s, &used2, cap, out)?;
        si -= BigInt::one();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;
    use crate::ratio::int;

    #[test]
    fn z2_unit_ball() {
        let z2 = Lattice::by_name("z2").unwrap();
        let v = close_vectors(&z2, &[int(0), int(0)], &int(1)).unwrap();
        assert_eq!(v.len(), 5);
    }

    #[test]
    fn z1_shells_around_half() {
        let z1 = Lattice::by_name("z1").unwrap();
        let shells = shell_decomposition(&z1, &[rat(1, 2)], &rat(9, 4)).unwrap();
        assert_eq!(shells.len(), 2);
        assert_eq!(shells[0].radius_sq, rat(1, 4));
        assert_eq!(shells[0].count(), 2);
        assert_eq!(shells[1].radius_sq, rat(9, 4));
        assert_eq!(shells[1].count(), 2);
    }

    #[test]
    fn root_counts() {
        for (name, roots) in [("d4", 24), ("a2", 6), ("e6", 72), ("e7", 126), ("e8", 240)] {
            let l = Lattice::by_name(name).unwrap();
            let z = vec![Rat::zero(); l.ambient_dim()];
            let v = close_vectors(&l, &z, &int(2)).unwrap();
            assert_eq!(v.len(), roots + 1, "{name}: roots plus origin");
        }
    }

    #[test]
    fn e8_deep_hole_first_shell() {
        let e8 = Lattice::by_name("e8").unwrap();
        let hole = &e8.deep_holes()[0].coords;
        let shells = shell_decomposition(&e8, hole, &int(1)).unwrap();
        assert_eq!(shells.len(), 1);
        assert_eq!(shells[0].radius_sq, int(1));
        assert_eq!(shells[0].count(), 16);
    }

    #[test]
    fn nearest_shell_examples() {
        let z2 = Lattice::by_name("z2").unwrap();
        let s = nearest_shell(&z2, &[int(0), int(0)]).unwrap();
        assert_eq!(s.radius_sq, int(0));
        assert_eq!(s.count(), 1);

        let d4 = Lattice::by_name("d4").unwrap();
        let hole2 = d4.deep_holes().iter().find(|h| h.label == "[2]").unwrap();
        let s = nearest_shell(&d4, &hole2.coords).unwrap();
        assert_eq!(s.radius_sq, int(1));
        assert_eq!(s.count(), 8);

        let a2 = Lattice::by_name("a2").unwrap();
        let s = nearest_shell(&a2, &a2.deep_holes()[0].coords).unwrap();
        assert_eq!(s.radius_sq, rat(2, 3));
        assert_eq!(s.count(), 3);
    }

    #[test]
    fn e7_hesse_polytope() {
        let e7 = Lattice::by_name("e7").unwrap();
        let s = nearest_shell(&e7, &e7.deep_holes()[0].coords).unwrap();
        assert_eq!(s.radius_sq, rat(3, 2));
        assert_eq!(s.count(), 56);
    }

    #[test]
    fn e6_schlafli_polytope() {
        let e6 = Lattice::by_name("e6").unwrap();
        let s = nearest_shell(&e6, &e6.deep_holes()[0].coords).unwrap();
        assert_eq!(s.radius_sq, rat(4, 3));
        assert_eq!(s.count(), 27);
    }

    #[test]
    fn negative_radius_rejected() {
        let z1 = Lattice::by_name("z1").unwrap();
        assert!(matches!(
            close_vectors(&z1, &[int(0)], &int(-1)),
            Err(Error::NegativeRadius)
        ));
    }

    #[test]
    fn named_hole_data_verifies() {
        for name in ["z2", "a2", "a3", "a4", "d3", "d4", "d5", "e6", "e7", "e8"] {
            Lattice::by_name(name).unwrap().verify_hole_data().unwrap();
        }
    }
}
