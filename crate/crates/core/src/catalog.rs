//! The deep-hole catalog: the 23 Leech deep-hole profiles with their
//! first-shell design strengths, the lexicographic order that governs
//! Gaussian potentials as the steepness grows, profiles computed from
//! enumeration, and the reference data for E6*, E7*, K12 and BW16.
//!
//! A profile stores the sequence `(r_1^2, a_1, r_2^2, a_2, ...)` of shell
//! radii and counts around a point. For two points, the one whose profile
//! is smaller in the order below has the asymptotically larger potential:
//! an earlier shell dominates, then a larger count on the tied shell, and
//! so on.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::designs::{design_strength, DEFAULT_DESIGN_TOL};
use crate::enumerate::shell_decomposition;
use crate::lattice::Lattice;
use crate::ratio::{rat, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileSource {
    Tabulated,
    Computed,
}

/// Shell profile of a point: radii are exact squared rationals; counts
/// may be unknown for trailing entries of tabulated rows.
#[derive(Clone, Debug)]
pub struct HoleProfile {
    pub label: String,
    pub entries: Vec<(Rat, Option<u64>)>,
    pub first_shell_strength: Option<usize>,
    pub source: ProfileSource,
}

/// Outcome of comparing two profiles: which point has the larger
/// potential for all sufficiently steep Gaussians, or undecidable when
/// the stored entries tie and one list runs out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileOrder {
    PGreater,
    QGreater,
    UndecidableAtDepth,
}

/// The 23 inequivalent deep holes of the Leech lattice with the first two
/// shell radii (squared), the first-shell count, and the design strength
/// of the first shell.
pub fn leech_hole_profiles() -> Vec<HoleProfile> {
    let row = |label: &str, a1: u64, r2_num: i64, r2_den: i64, strength: usize| HoleProfile {
        label: label.to_string(),
        entries: vec![(rat(2, 1), Some(a1)), (rat(r2_num, r2_den), None)],
        first_shell_strength: Some(strength),
        source: ProfileSource::Tabulated,
    };
    vec![
        row("A_24", 25, 52, 25, 1),
        row("D_24", 25, 47, 23, 0),
        row("A_12^2", 26, 28, 13, 2),
        row("A_15 D_9", 26, 17, 8, 0),
        row("A_17 E_7", 26, 19, 9, 0),
        row("D_12^2", 26, 23, 11, 0),
        row("D_16 E_8", 26, 31, 15, 0),
        row("A_9^2 D_6", 27, 11, 5, 0),
        row("A_8^3", 27, 20, 9, 1),
        row("A_11 D_7 E_6", 27, 13, 6, 0),
        row("D_8^3", 27, 15, 7, 0),
        row("E_8^3", 27, 32, 15, 0),
        row("D_10 E_7^2", 27, 19, 9, 0),
        row("A_6^4", 28, 16, 7, 1),
        row("A_7^2 D_5^2", 28, 9, 4, 0),
        row("D_6^4", 28, 11, 5, 0),
        row("E_6^4", 28, 13, 6, 0),
        row("A_5^4 D_4", 29, 7, 3, 0),
        row("A_4^6", 30, 12, 5, 1),
        row("D_4^6", 30, 7, 3, 0),
        row("A_3^8", 32, 5, 2, 1),
        row("A_2^12", 36, 8, 3, 2),
        row("A_1^24", 48, 3, 1, 3),
    ]
}

/// Compares two profiles under the steep-potential order. `PGreater`
/// means `p` has the larger potential for all large steepness: its first
/// differing feature is an earlier shell, or a larger count on a tied
/// shell radius.
pub fn profile_order(p: &HoleProfile, q: &HoleProfile) -> ProfileOrder {
    let depth = p.entries.len().max(q.entries.len());
    for i in 0..depth {
        let (pe, qe) = match (p.entries.get(i), q.entries.get(i)) {
            (Some(pe), Some(qe)) => (pe, qe),
            _ => return ProfileOrder::UndecidableAtDepth,
        };
        match pe.0.cmp(&qe.0) {
            Ordering::Less => return ProfileOrder::PGreater,
            Ordering::Greater => return ProfileOrder::QGreater,
            Ordering::Equal => {}
        }
        match (pe.1, qe.1) {
            (Some(a), Some(b)) if a > b => return ProfileOrder::PGreater,
            (Some(a), Some(b)) if a < b => return ProfileOrder::QGreater,
            (Some(_), Some(_)) => {}
            _ => return ProfileOrder::UndecidableAtDepth,
        }
    }
    ProfileOrder::UndecidableAtDepth
}

/// The profile with the smallest asymptotic potential (the hole that cold
/// spots converge to as the potential steepens). Errors on an
/// undecidable pair.
pub fn asymptotic_coldspot_hole(profiles: &[HoleProfile]) -> Result<&HoleProfile> {
    let mut best = profiles
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty profile list".into()))?;
    for p in &profiles[1..] {
        match profile_order(p, best) {
            ProfileOrder::QGreater => best = p,
            ProfileOrder::PGreater => {}
            ProfileOrder::UndecidableAtDepth => {
                return Err(Error::UndecidableOrder(p.label.clone(), best.label.clone()))
            }
        }
    }
    Ok(best)
}

/// Sorts profiles by ascending asymptotic potential; errors if any pair
/// is undecidable at the stored depth.
pub fn sort_profiles_ascending(profiles: &mut [HoleProfile]) -> Result<()> {
    // Verify decidability of every pair first, then sort with a total
    // comparator.
    for i in 0..profiles.len() {
        for j in i + 1..profiles.len() {
            if profile_order(&profiles[i], &profiles[j]) == ProfileOrder::UndecidableAtDepth {
                return Err(Error::UndecidableOrder(
                    profiles[i].label.clone(),
                    profiles[j].label.clone(),
                ));
            }
        }
    }
    profiles.sort_by(|a, b| match profile_order(a, b) {
        ProfileOrder::PGreater => Ordering::Greater,
        ProfileOrder::QGreater => Ordering::Less,
        ProfileOrder::UndecidableAtDepth => Ordering::Equal,
    });
    Ok(())
}

/// Computes the first `depth` nonempty shells around `z` by exact
/// enumeration, with the design strength of the first positive-radius
/// shell.
pub fn computed_profile(
    lattice: &Lattice,
    z: &[Rat],
    depth: usize,
) -> Result<HoleProfile> {
    if depth == 0 {
        return Err(Error::InvalidParameter("profile depth must be >= 1".into()));
    }
    let mut r_sq = crate::enumerate::nearest_shell(lattice, z)?.radius_sq;
    if r_sq.is_zero() {
        r_sq = rat(1, 1);
    }
    let mut shells;
    loop {
        shells = shell_decomposition(lattice, z, &r_sq)?;
        if shells.len() >= depth {
            shells.truncate(depth);
            break;
        }
        r_sq = &r_sq * rat(2, 1);
    }
    let first_positive = shells.iter().find(|s| !s.radius_sq.is_zero());
    let first_shell_strength = match first_positive {
        Some(shell) => Some(design_strength(lattice, shell, 6, DEFAULT_DESIGN_TOL)?.strength),
        None => None,
    };
    Ok(HoleProfile {
        label: format!("{} profile", lattice.name()),
        entries: shells
            .into_iter()
            .map(|s| (s.radius_sq, Some(s.vectors.len() as u64)))
            .collect(),
        first_shell_strength,
        source: ProfileSource::Computed,
    })
}

/// Reference data for the four lattices treated by stabilizer and Molien
/// computations: stabilizer order, leading harmonic Molien terms, and the
/// design strength of the deep-hole shells.
#[derive(Clone, Copy, Debug)]
pub struct RefRecord {
    pub lattice: &'static str,
    pub stabilizer_order: u64,
    pub molien_series_head: &'static str,
    pub strength: usize,
}

pub fn reference_table_other_lattices() -> [RefRecord; 4] {
    [
        RefRecord {
            lattice: "E6*",
            stabilizer_order: 1296,
            molien_series_head: "1 + u^3 + u^4 + ...",
            strength: 2,
        },
        RefRecord {
            lattice: "E7*",
            stabilizer_order: 80640,
            molien_series_head: "1 + u^4 + 2u^6 + ...",
            strength: 3,
        },
        RefRecord {
            lattice: "K12",
            stabilizer_order: 311040,
            molien_series_head: "1 + u^4 + u^5 + ...",
            strength: 3,
        },
        RefRecord {
            lattice: "BW16",
            stabilizer_order: 743178240,
            molien_series_head: "1 + u^6 + 2u^8 + ...",
            strength: 5,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::int;

    #[test]
    fn table_has_23_rows_with_sqrt2_first_shell() {
        let rows = leech_hole_profiles();
        assert_eq!(rows.len(), 23);
        for r in &rows {
            assert_eq!(r.entries[0].0, int(2));
            assert!(r.entries[0].1.unwrap() >= 25);
        }
    }

    #[test]
    fn order_examples() {
        let rows = leech_hole_profiles();
        let get = |label: &str| rows.iter().find(|r| r.label == label).unwrap().clone();
        // Equal first shell, D_24 has the smaller second radius, hence the
        // larger potential: A_24 is asymptotically smaller.
        assert_eq!(profile_order(&get("D_24"), &get("A_24")), ProfileOrder::PGreater);
        // Larger first-shell count means larger potential.
        assert_eq!(profile_order(&get("A_1^24"), &get("A_2^12")), ProfileOrder::PGreater);
        // Identical profiles are undecidable.
        assert_eq!(profile_order(&get("A_24"), &get("A_24")), ProfileOrder::UndecidableAtDepth);
    }

    #[test]
    fn leech_minimum_is_a24() {
        let rows = leech_hole_profiles();
        let min = asymptotic_coldspot_hole(&rows).unwrap();
        assert_eq!(min.label, "A_24");
        assert_eq!(min.first_shell_strength, Some(1));
    }

    #[test]
    fn total_order_at_stored_depth() {
        let mut rows = leech_hole_profiles();
        sort_profiles_ascending(&mut rows).unwrap();
        assert_eq!(rows[0].label, "A_24");
        assert_eq!(rows[22].label, "A_1^24");
    }

    #[test]
    fn subset_minimum() {
        let rows = leech_hole_profiles();
        let subset: Vec<HoleProfile> = rows
            .iter()
            .filter(|r| ["A_1^24", "A_2^12", "A_3^8"].contains(&r.label.as_str()))
            .cloned()
            .collect();
        assert_eq!(asymptotic_coldspot_hole(&subset).unwrap().label, "A_3^8");
        let single = vec![rows[0].clone()];
        assert_eq!(asymptotic_coldspot_hole(&single).unwrap().label, rows[0].label);
    }

    #[test]
    fn computed_profiles() {
        let e8 = Lattice::by_name("e8").unwrap();
        let p = computed_profile(&e8, &e8.deep_holes()[0].coords, 2).unwrap();
        assert_eq!(p.entries[0], (int(1), Some(16)));
        assert_eq!(p.entries[1], (int(2), Some(128)));
        assert_eq!(p.first_shell_strength, Some(3));

        let d4 = Lattice::by_name("d4").unwrap();
        let hole2 = d4.deep_holes().iter().find(|h| h.label == "[2]").unwrap();
        let p = computed_profile(&d4, &hole2.coords, 1).unwrap();
        assert_eq!(p.entries[0], (int(1), Some(8)));
    }

    #[test]
    fn reference_records() {
        let t = reference_table_other_lattices();
        assert_eq!(t[0].stabilizer_order, 1296);
        assert_eq!(t[0].strength, 2);
        assert_eq!(t[3].lattice, "BW16");
        assert_eq!(t[3].strength, 5);
        assert!(t[3].molien_series_head.starts_with("1 + u^6"));
        assert_eq!(t[2].stabilizer_order, 311040);
    }
}
