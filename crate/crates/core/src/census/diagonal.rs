//! The diagonal model: cyclic order-`m` subgroups of `Z_m x Z_m` under the
//! coordinate swap.
//!
//! Writing a diagonal matrix of order dividing `m` as `dia(l^a, l^b)` for a
//! fixed `l` of order `m` identifies the diagonal `m`-torsion with
//! `Z_m x Z_m`. Conjugation by the monomial group acts there through the swap
//! `(a, b) -> (b, a)` only, since diagonal matrices commute.
//!
//! A cyclic order-`m` subgroup is stored as its lexicographically smallest
//! generator. Scaling by units shows that generator has the form `(d, b)`
//! where `d` is the divisor of `m` generating the first-coordinate projection
//! (written `0` when `d = m`), and the elements of the subgroup with first
//! coordinate `d` are exactly `(d, b')` with `b' = b (mod m/d)`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::numtheory::{gcd, mod_inverse, unit_involutions};
use crate::{Error, Result};

/// A generator `(a, b)` of a cyclic subgroup of `Z_m x Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExponentPair {
    pub a: u64,
    pub b: u64,
}

impl ExponentPair {
    pub fn new(a: u64, b: u64) -> Self {
        ExponentPair { a, b }
    }

    pub fn swapped(self) -> Self {
        ExponentPair {
            a: self.b,
            b: self.a,
        }
    }
}

/// `gcd(x, m)` with `gcd(0, m) = m`.
fn gcd_with(x: u64, m: u64) -> u64 {
    gcd(x % m, m)
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Smallest `b' = residue (mod stride)` with `gcd(b', d) = 1`, searching `b' < m`.
fn least_coprime_lift(residue: u64, stride: u64, d: u64) -> Option<u64> {
    (0..d)
        .map(|t| residue + t * stride)
        .find(|&b| gcd(b, d) == 1)
}

/// The smallest generator of `<(a, b)>`, or `None` if `(a, b)` has order below `m`.
pub fn canonical_generator(m: u64, a: u64, b: u64) -> Option<ExponentPair> {
    assert!(m >= 1, "modulus must be positive");
    let (a, b) = (a % m, b % m);
    let d = gcd_with(a, m);
    if gcd(d, b) != 1 {
        return None;
    }
    let stride = m / d;
    // A unit u with u*a = d (mod m): invert a/d modulo m/d, then lift to a unit mod m.
    let base = mod_inverse(a / d % stride, stride).expect("a/d is a unit modulo m/d");
    let unit = (0..m)
        .map(|t| base + t * stride)
        .find(|&u| gcd(u, m) == 1)
        .expect("units modulo m/d lift to units modulo m");
    debug_assert_eq!((unit as u128 * a as u128 % m as u128) as u64, d % m);
    let scaled_b = (unit as u128 * b as u128 % m as u128) as u64;
    let lifted = least_coprime_lift(scaled_b % stride, stride, d)?;
    Some(ExponentPair::new(d % m, lifted))
}

/// The canonical generator of the swap image of the subgroup generated by `pair`.
pub fn swap_image(m: u64, pair: ExponentPair) -> ExponentPair {
    canonical_generator(m, pair.b, pair.a).expect("the swap preserves element orders")
}

/// All cyclic order-`m` subgroups of `Z_m x Z_m`, as sorted canonical generators.
pub fn cyclic_subgroups(m: u64) -> Vec<ExponentPair> {
    assert!(m >= 1, "modulus must be positive");
    let mut out = Vec::new();
    for d in divisors(m) {
        let stride = m / d;
        for residue in 0..stride {
            if let Some(b) = least_coprime_lift(residue, stride, d) {
                out.push(ExponentPair::new(d % m, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// One orbit of the swap action: one fixed subgroup or a swapped pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalOrbit {
    /// Canonical generators, ascending; length 1 or 2.
    pub members: Vec<ExponentPair>,
}

impl DiagonalOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_fixed(&self) -> bool {
        self.members.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalClasses {
    pub m: u64,
    pub subgroups: usize,
    pub count: u64,
    pub orbits: Vec<DiagonalOrbit>,
}

/// Orbits of cyclic order-`m` subgroups of `Z_m x Z_m` under the swap.
pub fn diagonal_model_classes(m: u64) -> DiagonalClasses {
    let subgroups = cyclic_subgroups(m);
    let known: BTreeSet<ExponentPair> = subgroups.iter().copied().collect();
    let mut orbits = Vec::new();
    for &pair in &subgroups {
        let image = swap_image(m, pair);
        assert!(
            known.contains(&image),
            "swap image {image:?} of {pair:?} is not a listed subgroup"
        );
        assert_eq!(
            swap_image(m, image),
            pair,
            "swap is not an involution on subgroups"
        );
        if image == pair {
            orbits.push(DiagonalOrbit {
                members: vec![pair],
            });
        } else if pair < image {
            orbits.push(DiagonalOrbit {
                members: vec![pair, image],
            });
        }
    }
    DiagonalClasses {
        m,
        subgroups: subgroups.len(),
        count: orbits.len() as u64,
        orbits,
    }
}

/// A swap-fixed subgroup together with the unit `l` such that it is `<(1, l)>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FixedSubgroup {
    pub generator: ExponentPair,
    pub l: u64,
}

/// Swap-fixed cyclic order-`m` subgroups, each matched to the unique `l` with
/// `l^2 = 1 (mod m)` and subgroup `<(1, l)>`.
///
/// Fails with [`Error::LemmaViolation`] when a fixed subgroup matches no such
/// `l` or several, or when two fixed subgroups share one.
pub fn fix_swap_subgroups(m: u64) -> Result<Vec<FixedSubgroup>> {
    let candidates = unit_involutions(m);
    let mut out = Vec::new();
    let mut used = BTreeSet::new();
    for pair in cyclic_subgroups(m) {
        if swap_image(m, pair) != pair {
            continue;
        }
        let matches: Vec<u64> = candidates
            .iter()
            .copied()
            .filter(|&l| canonical_generator(m, 1, l) == Some(pair))
            .collect();
        let l = match matches.as_slice() {
            [l] => *l,
            _ => {
                return Err(Error::LemmaViolation(format!(
                    "m = {m}: swap-fixed subgroup <({}, {})> matches l in {matches:?}",
                    pair.a, pair.b
                )))
            }
        };
        if (l as u128 * l as u128) % m as u128 != 1 % m as u128 {
            return Err(Error::LemmaViolation(format!(
                "m = {m}: l = {l} does not square to 1"
            )));
        }
        if !used.insert(l) {
            return Err(Error::LemmaViolation(format!(
                "m = {m}: l = {l} is attached to two fixed subgroups"
            )));
        }
        out.push(FixedSubgroup { generator: pair, l });
    }
    Ok(out)
}

/// Orbit count by Burnside's lemma over the monomial group.
///
/// Diagonal elements fix every subgroup and each element of the swap coset
/// fixes exactly the swap-fixed subgroups, so the average over the group is
/// `(|Y| + |Fix(swap)|) / 2`. `|Y|` is counted here as (elements of order `m`)
/// divided by (generators per cyclic subgroup), both by direct counting.
pub fn burnside_count(m: u64) -> Result<u64> {
    assert!(m >= 1, "modulus must be positive");
    let generators_per_subgroup = (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64;
    // (a, b) has order m iff gcd(gcd(a, m), b) = 1; that depends on b mod gcd(a, m).
    let mut coprime_residues: HashMap<u64, u64> = HashMap::new();
    let mut order_m_elements = 0u64;
    for a in 0..m {
        let g = gcd_with(a, m);
        let count = *coprime_residues
            .entry(g)
            .or_insert_with(|| (0..g).filter(|&b| gcd(b, g) == 1).count() as u64);
        order_m_elements += (m / g) * count;
    }
    if !order_m_elements.is_multiple_of(generators_per_subgroup) {
        return Err(Error::Internal(format!(
            "m = {m}: {order_m_elements} elements of order m do not split into cyclic subgroups"
        )));
    }
    let subgroups = order_m_elements / generators_per_subgroup;
    let fixed = fix_swap_subgroups(m)?.len() as u64;
    let total = subgroups + fixed;
    if !total.is_multiple_of(2) {
        return Err(Error::Internal(format!(
            "m = {m}: Burnside sum {total} is odd"
        )));
    }
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Cyclic order-m subgroups as explicit element sets, with swap orbits.
    fn naive_model(m: u64) -> (usize, usize, usize) {
        let subgroup = |a: u64, b: u64| -> BTreeSet<(u64, u64)> {
            (0..m).map(|k| (k * a % m, k * b % m)).collect()
        };
        let mut all = BTreeSet::new();
        for a in 0..m {
            for b in 0..m {
                let s = subgroup(a, b);
                if s.len() as u64 == m {
                    all.insert(s);
                }
            }
        }
        let swap =
            |s: &BTreeSet<(u64, u64)>| s.iter().map(|&(x, y)| (y, x)).collect::<BTreeSet<_>>();
        let fixed = all.iter().filter(|s| swap(s) == **s).count();
        let orbits = all.iter().filter(|s| **s <= swap(s)).count();
        (all.len(), fixed, orbits)
    }

    fn min_generator_naive(m: u64, a: u64, b: u64) -> ExponentPair {
        (1..=m)
            .filter(|&u| gcd(u, m) == 1)
            .map(|u| ExponentPair::new(u * a % m, u * b % m))
            .min()
            .unwrap()
    }

    #[test]
    fn normalized_enumeration_matches_element_sets() {
        for m in 1..=60 {
            let (total, fixed, orbits) = naive_model(m);
            let model = diagonal_model_classes(m);
            assert_eq!(model.subgroups, total, "m = {m}");
            assert_eq!(model.count as usize, orbits, "m = {m}");
            assert_eq!(
                model.orbits.iter().filter(|o| o.is_fixed()).count(),
                fixed,
                "m = {m}"
            );
        }
    }

    #[test]
    fn canonical_generator_is_least_generator() {
        for m in 1..=40 {
            for a in 0..m {
                for b in 0..m {
                    let order_m = gcd(gcd_with(a, m), b) == 1;
                    let got = canonical_generator(m, a, b);
                    assert_eq!(got.is_some(), order_m);
                    if order_m {
                        assert_eq!(
                            got.unwrap(),
                            min_generator_naive(m, a, b),
                            "m={m} ({a},{b})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_model_classes(1).count, 1);
        let six = diagonal_model_classes(6);
        assert_eq!(six.subgroups, 12);
        assert_eq!(six.count, 7);
        let fixed: Vec<ExponentPair> = six
            .orbits
            .iter()
            .filter(|o| o.is_fixed())
            .map(|o| o.members[0])
            .collect();
        assert_eq!(
            fixed,
            vec![ExponentPair::new(1, 1), ExponentPair::new(1, 5)]
        );
        assert_eq!(diagonal_model_classes(4).count, 4);
    }

    #[test]
    fn burnside_examples() {
        assert_eq!(burnside_count(2).unwrap(), 2);
        assert_eq!(burnside_count(1).unwrap(), 1);
        assert_eq!(burnside_count(12).unwrap(), 14);
    }

    #[test]
    fn fixed_subgroup_examples() {
        let ls = |m| {
            fix_swap_subgroups(m)
                .unwrap()
                .iter()
                .map(|f| f.l)
                .collect::<Vec<_>>()
        };
        assert_eq!(ls(12), vec![1, 5, 7, 11]);
        assert_eq!(ls(2), vec![1]);
        assert_eq!(ls(3), vec![1, 2]);
        assert_eq!(ls(1), vec![1]);
    }

    #[test]
    fn swap_on_small_pairs() {
        assert_eq!(
            swap_image(2, ExponentPair::new(1, 0)),
            ExponentPair::new(0, 1)
        );
        assert_eq!(
            swap_image(6, ExponentPair::new(1, 2)),
            ExponentPair::new(2, 1)
        );
        assert_eq!(
            swap_image(12, ExponentPair::new(1, 5)),
            ExponentPair::new(1, 5)
        );
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }
}
