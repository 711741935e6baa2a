//! Exact rational lattices: named constructions, user bases, Gram data,
//! duals, orthogonal sums, covering radii and deep-hole representatives.
//!
//! Coordinates are arbitrary-precision rationals throughout; a lattice of
//! rank `n` may live in an ambient space of dimension `m >= n` (the A_n
//! family uses the sum-zero hyperplane of `(n+1)`-space, and K12 / BW16 /
//! Leech use a rational realization in doubled ambient dimension).

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::codes::{golay_generator, hexacode_basis, hnf, rm14_generator, Eis};
use crate::enumerate::EnumContext;
use crate::ratio::{self, int, rat, Rat};
use crate::{Error, Result};

/// A hole representative: a rational point together with its exact squared
/// norm and a short label such as `"[2]"`.
#[derive(Clone, Debug)]
pub struct HolePoint {
    pub coords: Vec<Rat>,
    pub label: String,
    pub norm_sq: Rat,
}

impl HolePoint {
    pub fn new(label: impl Into<String>, coords: Vec<Rat>) -> Self {
        let norm_sq = ratio::norm_sq(&coords);
        HolePoint { coords, label: label.into(), norm_sq }
    }
}

/// Named lattice families available through [`Lattice::make_named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Zn,
    An,
    AnDual,
    Dn,
    DnDual,
    E6,
    E6Dual,
    E7,
    E7Dual,
    E8,
    K12,
    Bw16,
    Leech,
}

impl Family {
    /// Parses names like `"e8"`, `"a2"`, `"d4"`, `"e6*"`, `"e7dual"`,
    /// `"z3"`, `"k12"`, `"bw16"`, `"leech"`. Returns the family and the
    /// dimension when one is embedded in the name.
    pub fn parse(name: &str) -> Result<(Family, Option<usize>)> {
        let s = name.trim().to_ascii_lowercase();
        let (base, dual) = if let Some(b) = s.strip_suffix("dual") {
            (b.trim_end_matches(['-', '_']).to_string(), true)
        } else if let Some(b) = s.strip_suffix('*') {
            (b.to_string(), true)
        } else {
            (s.clone(), false)
        };
        let fam = match base.as_str() {
            "k12" if !dual => return Ok((Family::K12, None)),
            "bw16" if !dual => return Ok((Family::Bw16, None)),
            "leech" if !dual => return Ok((Family::Leech, None)),
            "e6" => return Ok((if dual { Family::E6Dual } else { Family::E6 }, None)),
            "e7" => return Ok((if dual { Family::E7Dual } else { Family::E7 }, None)),
            "e8" if !dual => return Ok((Family::E8, None)),
            _ => base,
        };
        let mut chars = fam.chars();
        let head = chars.next().ok_or_else(|| bad_name(name))?;
        let n: usize = chars.as_str().parse().map_err(|_| bad_name(name))?;
        match (head, dual) {
            ('z', false) => Ok((Family::Zn, Some(n))),
            ('a', false) => Ok((Family::An, Some(n))),
            ('a', true) => Ok((Family::AnDual, Some(n))),
            ('d', false) => Ok((Family::Dn, Some(n))),
            ('d', true) => Ok((Family::DnDual, Some(n))),
            _ => Err(bad_name(name)),
        }
    }
}

fn bad_name(name: &str) -> Error {
    Error::UnsupportedLattice(format!("unknown lattice name `{name}`"))
}

/// A lattice with exact rational basis and Gram matrix.
///
/// Immutable after construction; enumeration caches are built lazily
/// behind a `OnceLock` and are safe to share across threads.
#[derive(Clone, Debug)]
pub struct Lattice {
    name: String,
    rank: usize,
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
    gram: Vec<Vec<Rat>>,
    covering_radius_sq: Option<Rat>,
    deep_holes: Vec<HolePoint>,
    simplex_vertices: Option<Vec<Vec<Rat>>>,
    gram_inv: OnceLock<Arc<Vec<Vec<Rat>>>>,
    enum_ctx: OnceLock<Arc<EnumContext>>,
}

impl Lattice {
    /// Builds a lattice from basis row vectors, computing the Gram matrix
    /// exactly and rejecting dependent bases.
    pub fn from_basis(name: impl Into<String>, basis: Vec<Vec<Rat>>) -> Result<Self> {
        let name = name.into();
        let rank = basis.len();
        if rank == 0 {
            return Err(Error::InvalidLattice("empty basis".into()));
        }
        let ambient_dim = basis[0].len();
        if ambient_dim < rank {
            return Err(Error::InvalidLattice(format!(
                "rank {rank} exceeds ambient dimension {ambient_dim}"
            )));
        }
        if basis.iter().any(|row| row.len() != ambient_dim) {
            return Err(Error::InvalidLattice("ragged basis rows".into()));
        }
        let mut gram = vec![vec![Rat::zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..=i {
                let v = ratio::dot(&basis[i], &basis[j]);
                gram[i][j] = v.clone();
                gram[j][i] = v;
            }
        }
        if ratio::det(&gram) <= Rat::zero() {
            return Err(Error::InvalidLattice(format!(
                "basis of `{name}` is linearly dependent"
            )));
        }
        Ok(Lattice {
            name,
            rank,
            ambient_dim,
            basis,
            gram,
            covering_radius_sq: None,
            deep_holes: Vec::new(),
            simplex_vertices: None,
            gram_inv: OnceLock::new(),
            enum_ctx: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    pub fn deep_holes(&self) -> &[HolePoint] {
        &self.deep_holes
    }

    pub fn simplex_vertices(&self) -> Option<&[Vec<Rat>]> {
        self.simplex_vertices.as_deref()
    }

    pub fn stored_covering_radius_sq(&self) -> Option<&Rat> {
        self.covering_radius_sq.as_ref()
    }

    pub fn det_gram(&self) -> Rat {
        ratio::det(&self.gram)
    }

    pub fn set_deep_holes(&mut self, holes: Vec<HolePoint>) {
        self.deep_holes = holes;
    }

    pub fn set_covering_radius_sq(&mut self, mu_sq: Rat) {
        self.covering_radius_sq = Some(mu_sq);
    }

    pub fn set_simplex_vertices(&mut self, vertices: Vec<Vec<Rat>>) {
        self.simplex_vertices = Some(vertices);
    }

    pub(crate) fn gram_inv(&self) -> &Arc<Vec<Vec<Rat>>> {
        self.gram_inv.get_or_init(|| {
            Arc::new(ratio::invert(&self.gram).expect("Gram matrix is invertible"))
        })
    }

    pub(crate) fn enum_ctx(&self) -> &Arc<EnumContext> {
        self.enum_ctx
            .get_or_init(|| Arc::new(EnumContext::build(self)))
    }

    /// Coordinates of `z` with respect to the basis. Errors when `z` does
    /// not lie in the real span of the lattice (decided exactly).
    pub fn basis_coords(&self, z: &[Rat]) -> Result<Vec<Rat>> {
        if z.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: z.len() });
        }
        let rhs: Vec<Rat> = self.basis.iter().map(|b| ratio::dot(b, z)).collect();
        let t = ratio::solve(&self.gram, &rhs).expect("Gram matrix is invertible");
        // Confirm z is actually in the span, not just its projection.
        let mut recon = vec![Rat::zero(); self.ambient_dim];
        for (ti, b) in t.iter().zip(&self.basis) {
            for (r, bc) in recon.iter_mut().zip(b) {
                *r += ti * bc;
            }
        }
        if recon.as_slice() != z {
            return Err(Error::OutsideSpan);
        }
        Ok(t)
    }

    /// Exact membership test.
    pub fn contains(&self, z: &[Rat]) -> Result<bool> {
        match self.basis_coords(z) {
            Ok(t) => Ok(t.iter().all(|c| c.denom().is_one())),
            Err(Error::OutsideSpan) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// True iff `2z` is a lattice vector; this forces every shell around
    /// `z` to be centrally symmetric. Errors when `z` is outside the span.
    pub fn is_double_point(&self, z: &[Rat]) -> Result<bool> {
        let t = self.basis_coords(z)?;
        Ok(t.iter().all(|c| (c + c).denom().is_one()))
    }

    /// The squared covering radius, when the lattice carries the data.
    pub fn covering_radius_sq(&self) -> Result<Rat> {
        self.covering_radius_sq
            .clone()
            .ok_or_else(|| Error::UnknownCoveringRadius(self.name.clone()))
    }

    /// Checks stored hole data against enumeration: every deep hole must be
    /// at exact squared distance `covering_radius_sq` from its nearest
    /// lattice vectors.
    pub fn verify_hole_data(&self) -> Result<()> {
        let mu = match &self.covering_radius_sq {
            Some(m) => m.clone(),
            None if self.deep_holes.is_empty() => return Ok(()),
            None => {
                return Err(Error::InvalidLattice(format!(
                    "`{}` stores deep holes but no covering radius",
                    self.name
                )))
            }
        };
        for h in &self.deep_holes {
            if ratio::norm_sq(&h.coords) != h.norm_sq {
                return Err(Error::InvalidLattice(format!(
                    "hole {} of `{}` has inconsistent norm",
                    h.label, self.name
                )));
            }
            let shell = crate::enumerate::nearest_shell(self, &h.coords)?;
            if shell.radius_sq != mu {
                return Err(Error::InvalidLattice(format!(
                    "hole {} of `{}` has nearest-shell radius^2 {} != covering radius^2 {}",
                    h.label,
                    self.name,
                    ratio::format_rat(&shell.radius_sq),
                    ratio::format_rat(&mu)
                )));
            }
        }
        Ok(())
    }

    /// The dual lattice `L* = {x : x.v integral for all v in L}`, realized
    /// in the same real span; its Gram matrix is the inverse of `gram` up
    /// to the change of basis.
    pub fn dual(&self) -> Lattice {
        let ginv = self.gram_inv();
        let mut basis = vec![vec![Rat::zero(); self.ambient_dim]; self.rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                let c = &ginv[i][j];
                for (bi, bj) in basis[i].iter_mut().zip(&self.basis[j]) {
                    *bi += c * bj;
                }
            }
        }
        Lattice::from_basis(format!("{}*", self.name), basis)
            .expect("dual of a valid lattice is valid")
    }

    /// Orthogonal direct sum: coordinates are concatenated, the Gram matrix
    /// is block diagonal. Hole data combines when both summands carry it.
    pub fn orthogonal_sum(&self, other: &Lattice) -> Lattice {
        let m = self.ambient_dim + other.ambient_dim;
        let embed_left = |v: &[Rat]| {
            let mut w = v.to_vec();
            w.resize(m, Rat::zero());
            w
        };
        let embed_right = |v: &[Rat]| {
            let mut w = vec![Rat::zero(); self.ambient_dim];
            w.extend_from_slice(v);
            w
        };
        let mut basis: Vec<Vec<Rat>> =
            self.basis.iter().map(|b| embed_left(b)).collect();
        basis.extend(other.basis.iter().map(|b| embed_right(b)));
        let mut sum = Lattice::from_basis(format!("{}+{}", self.name, other.name), basis)
            .expect("orthogonal sum of valid lattices is valid");
        if let (Some(m1), Some(m2)) = (&self.covering_radius_sq, &other.covering_radius_sq) {
            sum.covering_radius_sq = Some(m1 + m2);
            for h1 in &self.deep_holes {
                for h2 in &other.deep_holes {
                    let mut coords = embed_left(&h1.coords);
                    coords[self.ambient_dim..].clone_from_slice(&embed_right(&h2.coords)[self.ambient_dim..]);
                    sum.deep_holes.push(HolePoint::new(
                        format!("{}{}", h1.label, h2.label),
                        coords,
                    ));
                }
            }
        }
        sum
    }

    /// Constructs a named lattice. `n` is required for the Zn / An / Dn
    /// families (and their duals) and ignored otherwise.
    pub fn make_named(family: Family, n: Option<usize>) -> Result<Lattice> {
        let need_n = |fam: &str| -> Result<usize> {
            n.ok_or_else(|| {
                Error::UnsupportedLattice(format!("family {fam} needs a dimension"))
            })
        };
        match family {
            Family::Zn => make_zn(need_n("Zn")?),
            Family::An => make_an(need_n("An")?),
            Family::AnDual => Ok(make_an(need_n("An*")?)?.dual()),
            Family::Dn => make_dn(need_n("Dn")?),
            Family::DnDual => Ok(make_dn(need_n("Dn*")?)?.dual()),
            Family::E6 => make_e6(),
            Family::E6Dual => Ok(make_e6()?.dual()),
            Family::E7 => make_e7(),
            Family::E7Dual => Ok(make_e7()?.dual()),
            Family::E8 => make_e8(),
            Family::K12 => make_k12(),
            Family::Bw16 => make_bw16(),
            Family::Leech => make_leech(),
        }
    }

    /// Convenience: parse a name and construct.
    pub fn by_name(name: &str) -> Result<Lattice> {
        let (family, n) = Family::parse(name)?;
        Lattice::make_named(family, n)
    }
}

fn unit(m: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); m];
    v[i] = Rat::one();
    v
}

fn make_zn(n: usize) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::UnsupportedLattice("Z0".into()));
    }
    let basis = (0..n).map(|i| unit(n, i)).collect();
    let mut l = Lattice::from_basis(format!("Z{n}"), basis)?;
    l.covering_radius_sq = Some(rat(n as i64, 4));
    l.deep_holes = vec![HolePoint::new("deep", vec![rat(1, 2); n])];
    Ok(l)
}

/// A_n as the integer vectors of `(n+1)`-space with coordinate sum zero.
/// The printed appendix variant with sum one describes a translate of the
/// same point set; the sum-zero normalization is the one all hole formulas
/// are consistent with.
fn make_an(n: usize) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::UnsupportedLattice("A0".into()));
    }
    let m = n + 1;
    let basis = (0..n)
        .map(|i| {
            let mut v = vec![Rat::zero(); m];
            v[i] = Rat::one();
            v[i + 1] = -Rat::one();
            v
        })
        .collect();
    let mut l = Lattice::from_basis(format!("A{n}"), basis)?;

    // Hole representative [i]: (n+1-i) coordinates i/(n+1), then i
    // coordinates -(n+1-i)/(n+1); squared norm i(n+1-i)/(n+1).
    let hole = |i: usize| -> HolePoint {
        let mut coords = vec![rat(i as i64, m as i64); m - i];
        coords.extend(vec![rat(-((m - i) as i64), m as i64); i]);
        HolePoint::new(format!("[{i}]"), coords)
    };
    let a = m / 2;
    let mu = rat((a * (m - a)) as i64, m as i64);
    l.covering_radius_sq = Some(mu);
    l.deep_holes = if m.is_multiple_of(2) {
        vec![hole(a)]
    } else {
        vec![hole(a), hole(a + 1)]
    };
    // Fundamental simplex of the affine Weyl group: 0, [1], ..., [n].
    let mut simplex = vec![vec![Rat::zero(); m]];
    simplex.extend((1..=n).map(|i| hole(i).coords));
    l.simplex_vertices = Some(simplex);
    Ok(l)
}

fn make_dn(n: usize) -> Result<Lattice> {
    if n < 3 {
        return Err(Error::UnsupportedLattice(format!("D{n} (need n >= 3)")));
    }
    let mut basis: Vec<Vec<Rat>> = (0..n - 1)
        .map(|i| {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            v[i + 1] = -Rat::one();
            v
        })
        .collect();
    let mut last = vec![Rat::zero(); n];
    last[n - 2] = Rat::one();
    last[n - 1] = Rat::one();
    basis.push(last);
    let mut l = Lattice::from_basis(format!("D{n}"), basis)?;

    let half = rat(1, 2);
    let hole1 = HolePoint::new("[1]", vec![half.clone(); n]);
    let mut c3 = vec![half.clone(); n];
    c3[n - 1] = -half.clone();
    let hole3 = HolePoint::new("[3]", c3);
    let mut c2 = vec![Rat::zero(); n];
    c2[n - 1] = Rat::one();
    let hole2 = HolePoint::new("[2]", c2);

    match n {
        3 => {
            l.covering_radius_sq = Some(Rat::one());
            l.deep_holes = vec![hole2];
        }
        4 => {
            l.covering_radius_sq = Some(Rat::one());
            l.deep_holes = vec![hole1, hole2, hole3];
        }
        _ => {
            l.covering_radius_sq = Some(rat(n as i64, 4));
            l.deep_holes = vec![hole1, hole3];
        }
    }
    if n >= 4 {
        // Alcove of the affine Weyl group: 0, e1, (e1+..+ei)/2 for
        // 2 <= i <= n-2, and the two half-vectors.
        let mut simplex = vec![vec![Rat::zero(); n], unit(n, 0)];
        for i in 2..=n - 2 {
            let mut v = vec![Rat::zero(); n];
            for c in v.iter_mut().take(i) {
                *c = rat(1, 2);
            }
            simplex.push(v);
        }
        let mut v3 = vec![rat(1, 2); n];
        v3[n - 1] = rat(-1, 2);
        simplex.push(v3);
        simplex.push(vec![rat(1, 2); n]);
        l.simplex_vertices = Some(simplex);
    }
    Ok(l)
}

fn make_e8() -> Result<Lattice> {
    // Simple roots in the D8+ coordinates; all of squared norm 2.
    let mut basis: Vec<Vec<Rat>> = Vec::with_capacity(8);
    let mut alpha1 = vec![rat(-1, 2); 8];
    alpha1[0] = rat(1, 2);
    alpha1[7] = rat(1, 2);
    basis.push(alpha1);
    let mut alpha2 = vec![Rat::zero(); 8];
    alpha2[0] = Rat::one();
    alpha2[1] = Rat::one();
    basis.push(alpha2);
    for i in 0..6 {
        let mut v = vec![Rat::zero(); 8];
        v[i] = -Rat::one();
        v[i + 1] = Rat::one();
        basis.push(v);
    }
    let mut l = Lattice::from_basis("E8", basis)?;
    l.covering_radius_sq = Some(Rat::one());
    let mut hole = vec![Rat::zero(); 8];
    hole[7] = Rat::one();
    l.deep_holes = vec![HolePoint::new("deep", hole)];

    // Vertices of the fundamental simplex (the deep hole is v8).
    let v = |coords: [(i64, i64); 8]| coords.iter().map(|&(p, q)| rat(p, q)).collect::<Vec<_>>();
    let simplex = vec![
        vec![Rat::zero(); 8],
        v([(-1, 8), (1, 8), (1, 8), (1, 8), (1, 8), (1, 8), (1, 8), (7, 8)]),
        v([(0, 1), (0, 1), (1, 6), (1, 6), (1, 6), (1, 6), (1, 6), (5, 6)]),
        v([(1, 6), (1, 6), (1, 6), (1, 6), (1, 6), (1, 6), (1, 6), (5, 6)]),
        v([(0, 1), (0, 1), (0, 1), (1, 5), (1, 5), (1, 5), (1, 5), (4, 5)]),
        v([(0, 1), (0, 1), (0, 1), (0, 1), (1, 4), (1, 4), (1, 4), (3, 4)]),
        v([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 3), (1, 3), (2, 3)]),
        v([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 2), (1, 2)]),
        v([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1)]),
    ];
    l.simplex_vertices = Some(simplex);
    Ok(l)
}

fn make_e7() -> Result<Lattice> {
    // E7 = {x in E8 : e.x = 0}; simple roots: the A6 chain e_i - e_{i+1}
    // plus a half-vector attached at the fourth node.
    let mut basis: Vec<Vec<Rat>> = (0..6)
        .map(|i| {
            let mut v = vec![Rat::zero(); 8];
            v[i] = Rat::one();
            v[i + 1] = -Rat::one();
            v
        })
        .collect();
    let mut beta7 = vec![rat(-1, 2); 8];
    for c in beta7.iter_mut().skip(4) {
        *c = rat(1, 2);
    }
    basis.push(beta7);
    let mut l = Lattice::from_basis("E7", basis)?;
    l.covering_radius_sq = Some(rat(3, 2));
    let mut hole = vec![rat(1, 4); 8];
    hole[6] = rat(-3, 4);
    hole[7] = rat(-3, 4);
    l.deep_holes = vec![HolePoint::new("[1]", hole)];
    Ok(l)
}

fn make_e6() -> Result<Lattice> {
    // E6 = {x in E8 : e.x = 0, (e1+e8).x = 0}; an A5 chain on coordinates
    // 2..7 plus a half-vector attached at its middle node.
    let mut basis: Vec<Vec<Rat>> = (1..6)
        .map(|i| {
            let mut v = vec![Rat::zero(); 8];
            v[i] = Rat::one();
            v[i + 1] = -Rat::one();
            v
        })
        .collect();
    let delta6 = vec![
        rat(1, 2),
        rat(-1, 2),
        rat(-1, 2),
        rat(-1, 2),
        rat(1, 2),
        rat(1, 2),
        rat(1, 2),
        rat(-1, 2),
    ];
    basis.push(delta6);
    let mut l = Lattice::from_basis("E6", basis)?;
    l.covering_radius_sq = Some(rat(4, 3));
    let hole1 = vec![
        Rat::zero(),
        rat(-2, 3),
        rat(-2, 3),
        rat(1, 3),
        rat(1, 3),
        rat(1, 3),
        rat(1, 3),
        Rat::zero(),
    ];
    let hole2: Vec<Rat> = hole1.iter().map(|c| -c).collect();
    l.deep_holes = vec![HolePoint::new("[1]", hole1), HolePoint::new("[2]", hole2)];
    Ok(l)
}

/// Coxeter-Todd lattice K12: Eisenstein vectors of Z[w]^6 congruent mod 2
/// to a hexacode word, realized rationally with each complex coordinate
/// mapped to four real ones.
fn make_k12() -> Result<Lattice> {
    let hexa = hexacode_basis();
    let mut eis_basis: Vec<[Eis; 6]> = hexa.to_vec();
    for j in 3..6 {
        let mut row = [Eis::ZERO; 6];
        row[j] = Eis(2, 0);
        eis_basis.push(row);
    }
    // z = u + v*omega maps to u*f1 + v*f2 with f1 = (1,0,0,0) and
    // f2 = (-1/2,1/2,1/2,1/2); this preserves the Eisenstein norm.
    let realize = |row: &[Eis; 6]| -> Vec<Rat> {
        let mut out = Vec::with_capacity(24);
        for &Eis(u, v) in row {
            out.push(int(u) - rat(v, 2));
            out.push(rat(v, 2));
            out.push(rat(v, 2));
            out.push(rat(v, 2));
        }
        out
    };
    let mut basis = Vec::with_capacity(12);
    for row in &eis_basis {
        basis.push(realize(row));
        let mut wrow = [Eis::ZERO; 6];
        for (w, &z) in wrow.iter_mut().zip(row) {
            *w = Eis::OMEGA.mul(z);
        }
        basis.push(realize(&wrow));
    }
    Lattice::from_basis("K12", basis)
}

/// Barnes-Wall lattice BW16 (minimum 4): construction D from RM(1,4)
/// scaled by 1/sqrt(2), realized rationally by doubling the ambient
/// dimension.
fn make_bw16() -> Result<Lattice> {
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for row in rm14_generator() {
        gens.push(row.iter().map(|&b| BigInt::from(b)).collect());
    }
    for i in 0..15 {
        let mut v = vec![BigInt::zero(); 16];
        v[i] = BigInt::from(2);
        v[15] = BigInt::from(-2);
        gens.push(v);
    }
    let mut v = vec![BigInt::zero(); 16];
    v[15] = BigInt::from(4);
    gens.push(v);
    let m = hnf(gens);
    debug_assert_eq!(m.len(), 16);
    // Row x of the integer lattice becomes (x/2, x/2); inner products are
    // then half the integer ones.
    let basis = m
        .iter()
        .map(|row| {
            let mut out: Vec<Rat> = row
                .iter()
                .map(|e| Rat::new(e.clone(), BigInt::from(2)))
                .collect();
            out.extend_from_slice(&out.clone());
            out
        })
        .collect();
    Lattice::from_basis("BW16", basis)
}

/// Leech lattice, scaled so the minimum squared norm is 4 and the squared
/// covering radius is 2. The standard sqrt(8)-scaled integer generators
/// (Golay congruences) are turned into a rational realization by doubling
/// the ambient dimension.
fn make_leech() -> Result<Lattice> {
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for row in golay_generator() {
        gens.push(row.iter().map(|&b| BigInt::from(2 * b as i64)).collect());
    }
    for i in 0..23 {
        let mut v = vec![BigInt::zero(); 24];
        v[i] = BigInt::from(4);
        v[i + 1] = BigInt::from(-4);
        gens.push(v);
    }
    let mut v = vec![BigInt::zero(); 24];
    v[23] = BigInt::from(8);
    gens.push(v);
    let mut odd = vec![BigInt::one(); 24];
    odd[0] = BigInt::from(-3);
    gens.push(odd);
    let m = hnf(gens);
    debug_assert_eq!(m.len(), 24);
    // (x/4, x/4) has squared norm |x|^2/8.
    let basis = m
        .iter()
        .map(|row| {
            let mut out: Vec<Rat> = row
                .iter()
                .map(|e| Rat::new(e.clone(), BigInt::from(4)))
                .collect();
            out.extend_from_slice(&out.clone());
            out
        })
        .collect();
    let mut l = Lattice::from_basis("Leech", basis)?;
    // Covering radius sqrt(2) (the deep-hole shells start at r^2 = 2).
    // Hole coordinates themselves are not embedded; they are an input.
    l.covering_radius_sq = Some(int(2));
    Ok(l)
}
