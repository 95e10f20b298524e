//! Independent checks of the class count.
//!
//! * [`diagonal_model_classes`] counts swap orbits of cyclic subgroups of
//!   `Z_m x Z_m`.
//! * [`burnside_count`] averages fixed points over the monomial group.
//! * [`census`] enumerates every cyclic subgroup of order `m` in `GL(2,q)`
//!   and splits them into conjugacy classes.

mod diagonal;
mod matrix;

pub use diagonal::{
    burnside_count, canonical_generator, cyclic_subgroups, diagonal_model_classes,
    fix_swap_subgroups, swap_image, DiagonalClasses, DiagonalOrbit, ExponentPair, FixedSubgroup,
};
pub use matrix::{
    conjugacy_classes, conjugacy_classes_by, enumerate_cyclic_subgroups, ClassInfo, ClassKind,
    OrderTable, ENUMERATION_CAP,
};

use crate::ff::FieldSpec;
use crate::gl2::{Gl2, SubgroupKey};
use crate::numtheory::{self, count_reducible_classes};
use crate::Result;

/// Census result for one `(q, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub q: u64,
    pub m: u64,
    pub total_subgroups: usize,
    pub reducible_classes: usize,
    pub irreducible_classes: usize,
    pub classes: Vec<ClassInfo>,
    /// Closed-form count, present when `m | q - 1`.
    pub formula_n: Option<u128>,
    /// `reducible_classes == formula_n`, present with `formula_n`.
    pub matches: Option<bool>,
    /// Irreducible classes are as predicted: exactly one when `m | q^2 - 1`
    /// and `m` does not divide `q - 1`, none otherwise.
    pub irreducible_ok: bool,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.matches != Some(false) && self.irreducible_ok
    }
}

/// Whether irreducible cyclic subgroups of order `m` exist over `GF(q)`.
pub fn irreducible_expected(q: u64, m: u64) -> bool {
    (q * q - 1).is_multiple_of(m) && !(q - 1).is_multiple_of(m)
}

fn report(gl: &Gl2<'_>, m: u64, subgroups: Vec<SubgroupKey>) -> Result<CensusReport> {
    let q = gl.field().q();
    let classes = conjugacy_classes(gl, &subgroups)?;
    let reducible_classes = classes.iter().filter(|c| c.kind.is_reducible()).count();
    let irreducible_classes = classes.len() - reducible_classes;
    let formula_n = if (q - 1).is_multiple_of(m) {
        Some(count_reducible_classes(&numtheory::factorize(m)?).n_classes)
    } else {
        None
    };
    let expected_irreducible = usize::from(irreducible_expected(q, m));
    Ok(CensusReport {
        q,
        m,
        total_subgroups: subgroups.len(),
        reducible_classes,
        irreducible_classes,
        classes,
        formula_n,
        matches: formula_n.map(|n| reducible_classes as u128 == n),
        irreducible_ok: irreducible_classes == expected_irreducible,
    })
}

/// Full census of cyclic subgroups of order `m` in `GL(2,q)`.
pub fn census(field: &FieldSpec, m: u64) -> Result<CensusReport> {
    let gl = Gl2::new(field);
    let subgroups = enumerate_cyclic_subgroups(&gl, m)?;
    report(&gl, m, subgroups)
}

/// Whether the census finds irreducible cyclic subgroups of order `m` exactly
/// when `m | q^2 - 1` and `m` does not divide `q - 1`, forming one class.
pub fn irreducible_class_check(field: &FieldSpec, m: u64) -> Result<bool> {
    Ok(census(field, m)?.irreducible_ok)
}

/// Census for every `m | q^2 - 1`, ascending in `m`. Rows with `m | q - 1`
/// carry the closed-form comparison.
pub fn verify_field(field: &FieldSpec) -> Result<Vec<CensusReport>> {
    let gl = Gl2::new(field);
    let table = OrderTable::new(&gl)?;
    let q = field.q();
    let divisors = numtheory::factorize(q * q - 1)?.divisors();
    divisors
        .into_iter()
        .map(|m| report(&gl, m, table.subgroups(m)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(census(&f3, 1).unwrap().total_subgroups, 1);

        let f7 = FieldSpec::new(7, 1).unwrap();
        let r = census(&f7, 3).unwrap();
        assert_eq!(r.reducible_classes, 3);
        assert_eq!(r.matches, Some(true));

        let f5 = FieldSpec::new(5, 1).unwrap();
        let r = census(&f5, 8).unwrap();
        assert!(r.total_subgroups > 0);
        assert_eq!((r.reducible_classes, r.irreducible_classes), (0, 1));
        assert!(r.classes.iter().all(|c| c.kind == ClassKind::Irreducible));
        assert!(irreducible_class_check(&f5, 8).unwrap());
    }

    #[test]
    fn census_rejects_characteristic_and_size() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert!(matches!(
            census(&f7, 14),
            Err(crate::Error::UnsupportedCharacteristic { p: 7, m: 14 })
        ));
        let f59 = FieldSpec::new(59, 1).unwrap();
        assert!(matches!(
            census(&f59, 2),
            Err(crate::Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn scalar_subgroups_are_singleton_classes() {
        let f = FieldSpec::new(7, 1).unwrap();
        let r = census(&f, 2).unwrap();
        for c in r.classes.iter().filter(|c| c.kind == ClassKind::Scalar) {
            assert_eq!(c.class_size, 1);
        }
    }
}
