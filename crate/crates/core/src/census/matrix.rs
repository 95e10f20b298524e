//! Brute-force census of cyclic subgroups of `GL(2,q)` and their conjugacy
//! classes.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::gl2::{Gl2, Mat2, SubgroupKey};
use crate::numtheory::{self, FactoredInt};
use crate::{Error, Result};

/// Largest `q^4` for which the census scans every matrix.
pub const ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Scalar,
    SplitReducible,
    Irreducible,
}

impl ClassKind {
    pub fn is_reducible(self) -> bool {
        self != ClassKind::Irreducible
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Scalar => "scalar",
            ClassKind::SplitReducible => "split_reducible",
            ClassKind::Irreducible => "irreducible",
        }
    }
}

/// One conjugacy class of cyclic subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    /// The member with the smallest `min_generator`.
    pub representative: SubgroupKey,
    pub class_size: usize,
    pub kind: ClassKind,
    /// All members, sorted by `min_generator`.
    pub members: Vec<SubgroupKey>,
}

pub(crate) fn check_enumerable(gl: &Gl2<'_>, m: u64) -> Result<FactoredInt> {
    let f = gl.field();
    let p = f.p();
    if m == 0 {
        return Err(Error::InvalidInput(
            "subgroup order must be positive".into(),
        ));
    }
    if m.is_multiple_of(p) {
        return Err(Error::UnsupportedCharacteristic { p, m });
    }
    check_scan_size(gl)?;
    numtheory::factorize(m)
}

pub(crate) fn check_scan_size(gl: &Gl2<'_>) -> Result<()> {
    let q = gl.field().q();
    match q.checked_pow(4) {
        Some(n) if n <= ENUMERATION_CAP => Ok(()),
        _ => Err(Error::ResourceLimit(format!(
            "q = {q}: q^4 exceeds the enumeration cap {ENUMERATION_CAP}"
        ))),
    }
}

/// Collapses the listed order-`m` matrices into their cyclic subgroups.
fn collect_subgroups(gl: &Gl2<'_>, candidates: &[u64]) -> Result<Vec<SubgroupKey>> {
    let mut covered = vec![false; gl.field().q().pow(4) as usize];
    let mut out = Vec::new();
    for &idx in candidates {
        if covered[idx as usize] {
            continue;
        }
        let key = gl.cyclic_subgroup(&gl.matrix_at(idx))?;
        for h in &key.elements {
            covered[gl.index_of(h) as usize] = true;
        }
        out.push(key);
    }
    out.sort_unstable_by_key(|x| x.min_generator);
    Ok(out)
}

/// Every cyclic subgroup of order exactly `m`, found by scanning all
/// invertible matrices. Sorted by `min_generator`.
pub fn enumerate_cyclic_subgroups(gl: &Gl2<'_>, m: u64) -> Result<Vec<SubgroupKey>> {
    let mf = check_enumerable(gl, m)?;
    let total = gl.field().q().pow(4);
    let candidates: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&i| {
            let h = gl.matrix_at(i);
            gl.is_invertible(&h) && gl.has_order(&h, &mf)
        })
        .collect();
    collect_subgroups(gl, &candidates)
}

/// Orders of all matrices, computed once and reused across many `m`.
pub struct OrderTable<'g, 'f> {
    gl: &'g Gl2<'f>,
    /// Zero for singular matrices.
    orders: Vec<u32>,
}

impl<'g, 'f> OrderTable<'g, 'f> {
    pub fn new(gl: &'g Gl2<'f>) -> Result<Self> {
        check_scan_size(gl)?;
        let total = gl.field().q().pow(4);
        let orders = (0..total)
            .into_par_iter()
            .map(|i| {
                let h = gl.matrix_at(i);
                if gl.is_invertible(&h) {
                    gl.mat_order(&h).map(|n| n as u32)
                } else {
                    Ok(0)
                }
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(OrderTable { gl, orders })
    }

    pub fn subgroups(&self, m: u64) -> Result<Vec<SubgroupKey>> {
        check_enumerable(self.gl, m)?;
        let candidates: Vec<u64> = self
            .orders
            .iter()
            .enumerate()
            .filter(|(_, &n)| n as u64 == m)
            .map(|(i, _)| i as u64)
            .collect();
        collect_subgroups(self.gl, &candidates)
    }

    /// Number of invertible matrices.
    pub fn invertible(&self) -> usize {
        self.orders.iter().filter(|&&n| n != 0).count()
    }
}

/// Conjugacy classes via breadth-first search over a verified generating set.
pub fn conjugacy_classes(gl: &Gl2<'_>, subgroups: &[SubgroupKey]) -> Result<Vec<ClassInfo>> {
    conjugacy_classes_by(gl, subgroups, &gl.generating_set())
}

/// Orbits of `subgroups` under conjugation by the group generated by
/// `conjugators`. The subgroup list must be closed under that action.
pub fn conjugacy_classes_by(
    gl: &Gl2<'_>,
    subgroups: &[SubgroupKey],
    conjugators: &[Mat2],
) -> Result<Vec<ClassInfo>> {
    let index: HashMap<&[Mat2], usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.elements.as_slice(), i))
        .collect();
    if index.len() != subgroups.len() {
        return Err(Error::InvalidInput(
            "subgroup list contains duplicates".into(),
        ));
    }
    let pairs: Vec<(Mat2, Mat2)> = conjugators
        .iter()
        .map(|g| gl.inv(g).map(|gi| (*g, gi)))
        .collect::<Result<_>>()?;

    let mut class_of = vec![usize::MAX; subgroups.len()];
    let mut classes = Vec::new();
    for start in 0..subgroups.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let class_id = classes.len();
        class_of[start] = class_id;
        let mut members = vec![start];
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for (g, gi) in &pairs {
                let image = gl.conjugate_elements(g, gi, &subgroups[i].elements);
                let j = *index.get(image.as_slice()).ok_or_else(|| {
                    Error::Internal(format!(
                        "conjugate of subgroup {} is missing from the subgroup list",
                        gl.format(&subgroups[i].min_generator)
                    ))
                })?;
                if class_of[j] == usize::MAX {
                    class_of[j] = class_id;
                    members.push(j);
                    frontier.push(j);
                }
            }
        }
        let mut members: Vec<SubgroupKey> =
            members.into_iter().map(|i| subgroups[i].clone()).collect();
        members.sort_unstable_by_key(|x| x.min_generator);
        let representative = members[0].clone();
        let kind = if representative.is_central() {
            ClassKind::Scalar
        } else if gl.is_split_reducible(&representative.min_generator)? {
            ClassKind::SplitReducible
        } else {
            ClassKind::Irreducible
        };
        classes.push(ClassInfo {
            representative,
            class_size: members.len(),
            kind,
            members,
        });
    }
    classes.sort_unstable_by_key(|x| x.representative.min_generator);
    Ok(classes)
}
