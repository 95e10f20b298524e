//! Canonical diagonal representatives of the reducible classes.
//!
//! Every reducible class of cyclic order-`m` subgroups has a diagonal
//! representative `<dia(l^a, l^b)>` with `l` of order `m`. The swap orbit of
//! the diagonal model decides the type:
//!
//! * Type I: the scalar subgroup `<dia(l, l)>`.
//! * Type II: swap-fixed but not scalar, `<dia(l, l^k)>` with `k^2 = 1`, `k != 1`.
//! * Type III: not swap-fixed; its normalizer in the monomial group is the
//!   diagonal group.
//!
//! Within an orbit the representative is the member whose first coordinate
//! generates the largest subgroup of `Z_m` (smallest `gcd(a, m)`), ties
//! broken by the smaller canonical pair.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::census::{self, canonical_generator, swap_image, ExponentPair};
use crate::ff::FieldSpec;
use crate::gl2::{Gl2, Mat2};
use crate::numtheory::{self, FactoredInt};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RepType {
    I,
    II,
    III,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::I => "I",
            RepType::II => "II",
            RepType::III => "III",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizerType {
    FullMonomial,
    DiagonalOnly,
}

impl NormalizerType {
    pub fn as_str(self) -> &'static str {
        match self {
            NormalizerType::FullMonomial => "full_monomial",
            NormalizerType::DiagonalOnly => "diagonal_only",
        }
    }
}

/// A class representative in exponent coordinates, independent of the field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentRep {
    pub m: u64,
    pub pair: ExponentPair,
    pub type_tag: RepType,
    /// `k` with the subgroup equal to `<(1, k)>`, for Type II.
    pub involution_l: Option<u64>,
    /// Per-prime-power exponents `k_i = k mod p_i^b_i` when the class has a
    /// member `<(1, k)>`; Type III only.
    pub paper_form: Option<Vec<u64>>,
}

impl ExponentRep {
    pub fn normalizer(&self) -> NormalizerType {
        match self.type_tag {
            RepType::III => NormalizerType::DiagonalOnly,
            _ => NormalizerType::FullMonomial,
        }
    }
}

/// A class representative over a concrete field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepEntry {
    pub m: u64,
    /// The subgroup is `<dia(l^a, l^b)>` with `l = element_of_order(m)`.
    pub exponent_pair: (u64, u64),
    pub generator: Mat2,
    pub type_tag: RepType,
    pub paper_form: Option<Vec<u64>>,
    pub involution_l: Option<u64>,
}

fn orbit_key(m: u64, pair: ExponentPair) -> (u64, ExponentPair) {
    (numtheory::gcd(pair.a % m, m), pair)
}

/// `k_i = k mod p_i^b_i` if some member of the orbit of `pair` is `<(1, k)>`.
fn unit_first_coordinate_form(m: &FactoredInt, pair: ExponentPair) -> Option<Vec<u64>> {
    let mv = m.value();
    [pair, swap_image(mv, pair)].into_iter().find_map(|member| {
        let inv =
            numtheory::mod_inverse(member.a, mv).filter(|_| numtheory::gcd(member.a, mv) == 1)?;
        let k = numtheory::mul_mod(member.b, inv, mv);
        Some(m.prime_powers().iter().map(|pe| k % pe).collect())
    })
}

/// Representatives of all swap orbits, sorted by `(type_tag, pair)`.
pub fn exponent_representatives(m: u64) -> Result<Vec<ExponentRep>> {
    let mf = numtheory::factorize(m)?;
    let scalar = canonical_generator(m, 1, 1).expect("(1, 1) has order m");
    let fixed: HashMap<ExponentPair, u64> = census::fix_swap_subgroups(m)?
        .into_iter()
        .map(|f| (f.generator, f.l))
        .collect();
    let mut out: Vec<ExponentRep> = census::diagonal_model_classes(m)
        .orbits
        .into_iter()
        .map(|orbit| {
            let pair = orbit
                .members
                .iter()
                .copied()
                .min_by_key(|&p| orbit_key(m, p))
                .expect("orbits are nonempty");
            let (type_tag, involution_l) = if pair == scalar {
                (RepType::I, None)
            } else if let Some(&l) = fixed.get(&pair) {
                (RepType::II, Some(l))
            } else {
                (RepType::III, None)
            };
            let paper_form = match type_tag {
                RepType::III => unit_first_coordinate_form(&mf, pair),
                _ => None,
            };
            ExponentRep {
                m,
                pair,
                type_tag,
                involution_l,
                paper_form,
            }
        })
        .collect();
    out.sort_unstable_by_key(|r| (r.type_tag, r.pair));
    Ok(out)
}

/// One representative per reducible class of cyclic order-`m` subgroups.
pub fn representatives(field: &FieldSpec, m: u64) -> Result<Vec<RepEntry>> {
    let lambda = field.element_of_order(m)?;
    Ok(exponent_representatives(m)?
        .into_iter()
        .map(|r| RepEntry {
            m,
            exponent_pair: (r.pair.a, r.pair.b),
            generator: Mat2::diag(field.pow(lambda, r.pair.a), field.pow(lambda, r.pair.b)),
            type_tag: r.type_tag,
            paper_form: r.paper_form,
            involution_l: r.involution_l,
        })
        .collect())
}

/// Per-prime exponents `(k_0, ..., k_r)` placing a Type III class in the
/// template `dia(l_0...l_r, l_0^k_0...l_r^k_r)`, or `None` when no member of
/// the class has a first diagonal entry of order `m`.
pub fn paper_type_iii_form(entry: &RepEntry, m: &FactoredInt) -> Option<Vec<u64>> {
    if entry.type_tag != RepType::III {
        return None;
    }
    let (a, b) = entry.exponent_pair;
    unit_first_coordinate_form(m, ExponentPair::new(a % m.value(), b % m.value()))
}

/// Normalizer of `<dia(l^a, l^b)>` in the monomial group.
pub fn normalizer_type(m: u64, pair: (u64, u64)) -> Result<NormalizerType> {
    let canon = canonical_generator(m, pair.0, pair.1).ok_or_else(|| {
        Error::InvalidInput(format!("({}, {}) does not have order {m}", pair.0, pair.1))
    })?;
    Ok(if swap_image(m, canon) == canon {
        NormalizerType::FullMonomial
    } else {
        NormalizerType::DiagonalOnly
    })
}

/// Whether the representatives hit every reducible census class exactly once.
pub fn cross_validate(field: &FieldSpec, m: u64) -> Result<bool> {
    let reps = representatives(field, m)?;
    let report = census::census(field, m)?;
    let gl = Gl2::new(field);
    let class_of: HashMap<&[Mat2], usize> = report
        .classes
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.members.iter().map(move |s| (s.elements.as_slice(), i)))
        .collect();
    let mut hits = vec![0usize; report.classes.len()];
    for rep in &reps {
        let sub = gl.cyclic_subgroup(&rep.generator)?;
        match class_of.get(sub.elements.as_slice()) {
            Some(&i) if report.classes[i].kind.is_reducible() => hits[i] += 1,
            _ => return Ok(false),
        }
    }
    Ok(report
        .classes
        .iter()
        .zip(&hits)
        .all(|(c, &h)| h == usize::from(c.kind.is_reducible())))
}
