//! Binary and quaternary codes backing the K12, BW16 and Leech
//! constructions, plus the integer Hermite normal form used to turn
//! generating sets into bases.

use num_bigint::BigInt;
use num_traits::{Euclid, Signed, Zero};

/// Generator of the extended binary Golay code [24, 12, 8] in the form
/// `[I | A]` with `A` the bordered quadratic-residue matrix mod 11.
pub(crate) fn golay_generator() -> Vec<[u8; 24]> {
    // Residues mod 11, plus 0, give the circulant row pattern.
    let pattern = [0u8, 1, 3, 4, 5, 9];
    let mut rows = Vec::with_capacity(12);
    for i in 0..12usize {
        let mut row = [0u8; 24];
        row[i] = 1;
        if i == 0 {
            for j in 1..12 {
                row[12 + j] = 1;
            }
        } else {
            row[12] = 1;
            for j in 1..12usize {
                let d = (j as i64 - i as i64).rem_euclid(11) as u8;
                if pattern.contains(&d) {
                    row[12 + j] = 1;
                }
            }
        }
        rows.push(row);
    }
    rows
}

/// Generator of the Reed-Muller code RM(1,4) = [16, 5, 8].
pub(crate) fn rm14_generator() -> Vec<[u8; 16]> {
    let mut rows = vec![[1u8; 16]];
    for bit in 0..4 {
        let mut row = [0u8; 16];
        for (j, r) in row.iter_mut().enumerate() {
            *r = ((j >> bit) & 1) as u8;
        }
        rows.push(row);
    }
    rows
}

/// Eisenstein integer `u + v*omega` with `omega^2 + omega + 1 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Eis(pub i64, pub i64);

impl Eis {
    pub const ZERO: Eis = Eis(0, 0);
    pub const ONE: Eis = Eis(1, 0);
    pub const OMEGA: Eis = Eis(0, 1);
    pub const OMEGA2: Eis = Eis(-1, -1);

    pub fn mul(self, o: Eis) -> Eis {
        // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
        let Eis(a, b) = self;
        let Eis(c, d) = o;
        Eis(a * c - b * d, a * d + b * c - b * d)
    }

}

#[cfg(test)]
impl Eis {
    pub fn add(self, o: Eis) -> Eis {
        Eis(self.0 + o.0, self.1 + o.1)
    }

    pub fn is_zero_mod2(self) -> bool {
        self.0.rem_euclid(2) == 0 && self.1.rem_euclid(2) == 0
    }
}

/// Basis of the hexacode [6, 3, 4] over F4 = Z[omega]/2, as Eisenstein
/// lifts: words (a, b, c, f(1), f(omega), f(omega^2)) for f = a x^2 + b x + c.
pub(crate) fn hexacode_basis() -> [[Eis; 6]; 3] {
    let (o, o2, one, z) = (Eis::OMEGA, Eis::OMEGA2, Eis::ONE, Eis::ZERO);
    [
        [one, z, z, one, o2, o],
        [z, one, z, one, o, o2],
        [z, z, one, one, one, one],
    ]
}

/// Row-style Hermite normal form over Z. Takes a spanning set of row
/// vectors and returns a basis of the generated lattice (one row per
/// pivot, zero rows dropped). Entries stay exact.
pub(crate) fn hnf(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    for col in 0..ncols {
        loop {
            // Pick the row (at or below `rank`) with the smallest nonzero
            // absolute entry in this column.
            let mut best: Option<usize> = None;
            for (r, row) in rows.iter().enumerate().skip(rank) {
                if !row[col].is_zero()
                    && best.is_none_or(|b| row[col].abs() < rows[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            rows.swap(rank, b);
            let mut reduced_any = false;
            let pivot = rows[rank][col].clone();
            for r in rank + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = div_round(&rows[r][col], &pivot);
                if !q.is_zero() {
                    for c in 0..ncols {
                        let t = &rows[rank][c] * &q;
                        rows[r][c] -= t;
                    }
                }
                if !rows[r][col].is_zero() {
                    reduced_any = true;
                }
            }
            if !reduced_any {
                break;
            }
        }
        if rank < rows.len() && !rows[rank][col].is_zero() {
            if rows[rank][col].is_negative() {
                for c in 0..ncols {
                    rows[rank][c] = -rows[rank][c].clone();
                }
            }
            // Reduce the rows above to keep entries small.
            let pivot = rows[rank][col].clone();
            for r in 0..rank {
                let q = rows[r][col].div_euclid(&pivot);
                if !q.is_zero() {
                    for c in 0..ncols {
                        let t = &rows[rank][c] * &q;
                        rows[r][c] -= t;
                    }
                }
            }
            rank += 1;
        }
    }
    rows.truncate(rank);
    rows
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Round a/b to the nearest integer (ties toward even not needed here).
    let two = BigInt::from(2);
    let (q, r) = (a.div_euclid(b), a.rem_euclid(b));
    if &r * &two > b.abs() {
        q + 1
    } else {
        q
    }
}
