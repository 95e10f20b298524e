//! The group `GL(2,q)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::ff::{FieldElement, FieldSpec};
use crate::numtheory::{self, FactoredInt};
use crate::{Error, Result};

/// Group orders above this are not closure-checked by [`Gl2::generating_set`].
pub const GENERATION_CHECK_CAP: u64 = 10_000_000;

/// A 2x2 matrix `[[a, b], [c, d]]`. Ordering is lexicographic in row-major
/// order over the canonical element encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn diag(a: FieldElement, d: FieldElement) -> Self {
        Mat2::new(a, FieldElement::ZERO, FieldElement::ZERO, d)
    }

    pub fn is_diagonal(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    /// Diagonal or anti-diagonal with nonzero entries where it counts.
    pub fn is_monomial(&self) -> bool {
        let nz = |x: FieldElement| !x.is_zero();
        (self.is_diagonal() && nz(self.a) && nz(self.d))
            || (self.a.is_zero() && self.d.is_zero() && nz(self.b) && nz(self.c))
    }

    pub fn is_scalar(&self) -> bool {
        self.is_diagonal() && self.a == self.d
    }
}

/// Serializes as the packed element encodings `[a, b, c, d]`.
impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [
            self.a.packed(),
            self.b.packed(),
            self.c.packed(),
            self.d.packed(),
        ]
        .serialize(s)
    }
}

/// A cyclic subgroup identified by its full sorted element set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupKey {
    pub elements: Vec<Mat2>,
    pub min_generator: Mat2,
    pub order: u64,
}

impl SubgroupKey {
    pub fn contains(&self, h: &Mat2) -> bool {
        self.elements.binary_search(h).is_ok()
    }

    pub fn is_central(&self) -> bool {
        self.elements.iter().all(Mat2::is_scalar)
    }
}

/// `GL(2,q)` over a fixed field.
#[derive(Debug, Clone)]
pub struct Gl2<'f> {
    field: &'f FieldSpec,
    /// Every element order divides `lcm(q^2 - 1, p(q - 1))`.
    exponent: FactoredInt,
}

impl<'f> Gl2<'f> {
    pub fn new(field: &'f FieldSpec) -> Self {
        let q = field.q();
        let exponent = numtheory::lcm(q * q - 1, field.p() * (q - 1));
        Gl2 {
            field,
            exponent: numtheory::factorize(exponent).expect("exponent is positive"),
        }
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    /// `(q^2 - 1)(q^2 - q)`.
    pub fn group_order(&self) -> u64 {
        let q = self.field.q();
        (q * q - 1) * (q * q - q)
    }

    pub fn identity(&self) -> Mat2 {
        let f = self.field;
        Mat2::diag(f.one(), f.one())
    }

    /// The coordinate swap `[[0, 1], [1, 0]]`.
    pub fn swap(&self) -> Mat2 {
        let f = self.field;
        Mat2::new(f.zero(), f.one(), f.one(), f.zero())
    }

    pub fn scalar(&self, x: FieldElement) -> Mat2 {
        Mat2::diag(x, x)
    }

    pub fn mul(&self, g: &Mat2, h: &Mat2) -> Mat2 {
        let f = self.field;
        let dot = |x1, y1, x2, y2| f.add(f.mul(x1, y1), f.mul(x2, y2));
        Mat2 {
            a: dot(g.a, h.a, g.b, h.c),
            b: dot(g.a, h.b, g.b, h.d),
            c: dot(g.c, h.a, g.d, h.c),
            d: dot(g.c, h.b, g.d, h.d),
        }
    }

    pub fn det(&self, g: &Mat2) -> FieldElement {
        let f = self.field;
        f.sub(f.mul(g.a, g.d), f.mul(g.b, g.c))
    }

    pub fn trace(&self, g: &Mat2) -> FieldElement {
        self.field.add(g.a, g.d)
    }

    pub fn is_invertible(&self, g: &Mat2) -> bool {
        !self.det(g).is_zero()
    }

    pub fn inv(&self, g: &Mat2) -> Result<Mat2> {
        let f = self.field;
        let det = self.det(g);
        if det.is_zero() {
            return Err(Error::InvalidInput("matrix is singular".into()));
        }
        let di = f.inv(det)?;
        Ok(Mat2 {
            a: f.mul(g.d, di),
            b: f.mul(f.neg(g.b), di),
            c: f.mul(f.neg(g.c), di),
            d: f.mul(g.a, di),
        })
    }

    /// `g h g^-1`.
    pub fn conjugate(&self, g: &Mat2, h: &Mat2) -> Result<Mat2> {
        let gi = self.inv(g)?;
        Ok(self.mul(&self.mul(g, h), &gi))
    }

    pub fn pow(&self, h: &Mat2, mut e: u64) -> Mat2 {
        let mut acc = self.identity();
        let mut base = *h;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, by stripping primes from the group exponent.
    pub fn mat_order(&self, h: &Mat2) -> Result<u64> {
        if !self.is_invertible(h) {
            return Err(Error::InvalidInput("matrix is singular".into()));
        }
        let id = self.identity();
        let mut n = self.exponent.value();
        if self.pow(h, n) != id {
            return Err(Error::Internal(format!("h^{n} is not the identity")));
        }
        for &(r, _) in self.exponent.factors() {
            while n.is_multiple_of(r) && self.pow(h, n / r) == id {
                n /= r;
            }
        }
        Ok(n)
    }

    /// Whether `h` has order exactly `m`; `m` given factored.
    pub fn has_order(&self, h: &Mat2, m: &FactoredInt) -> bool {
        let id = self.identity();
        self.pow(h, m.value()) == id
            && m.factors()
                .iter()
                .all(|&(r, _)| self.pow(h, m.value() / r) != id)
    }

    /// Roots in the field of `x^2 - tr(h) x + det(h)`, ascending.
    pub fn eigenvalues(&self, h: &Mat2) -> Vec<FieldElement> {
        let f = self.field;
        let (t, d) = (self.trace(h), self.det(h));
        f.elements()
            .filter(|&x| f.add(f.sub(f.mul(x, x), f.mul(t, x)), d).is_zero())
            .collect()
    }

    /// Whether `h` is conjugate into the diagonal subgroup. Only defined for
    /// elements of order prime to the characteristic.
    pub fn is_split_reducible(&self, h: &Mat2) -> Result<bool> {
        let order = self.mat_order(h)?;
        let p = self.field.p();
        if order % p == 0 {
            return Err(Error::UnsupportedCharacteristic { p, m: order });
        }
        match self.eigenvalues(h).as_slice() {
            [] => Ok(false),
            [_, _] => Ok(true),
            [lambda] => {
                // A repeated eigenvalue with a nontrivial Jordan block forces p | order.
                if *h == self.scalar(*lambda) {
                    Ok(true)
                } else {
                    Err(Error::Internal(format!(
                        "non-scalar matrix with repeated eigenvalue has order {order} prime to {p}"
                    )))
                }
            }
            _ => Err(Error::Internal("quadratic with more than two roots".into())),
        }
    }

    /// The cyclic subgroup generated by `h`.
    pub fn cyclic_subgroup(&self, h: &Mat2) -> Result<SubgroupKey> {
        if !self.is_invertible(h) {
            return Err(Error::InvalidInput("matrix is singular".into()));
        }
        let id = self.identity();
        let mut powers = vec![id];
        let mut cur = *h;
        while cur != id {
            powers.push(cur);
            cur = self.mul(&cur, h);
        }
        let order = powers.len() as u64;
        let min_generator = if order == 1 {
            id
        } else {
            (1..order)
                .filter(|&j| numtheory::gcd(j, order) == 1)
                .map(|j| powers[j as usize])
                .min()
                .expect("1 is coprime to the order")
        };
        powers.sort_unstable();
        Ok(SubgroupKey {
            elements: powers,
            min_generator,
            order,
        })
    }

    /// Conjugate of a whole subgroup, as a sorted element list.
    pub fn conjugate_elements(&self, g: &Mat2, g_inv: &Mat2, elements: &[Mat2]) -> Vec<Mat2> {
        let mut out: Vec<Mat2> = elements
            .iter()
            .map(|h| self.mul(&self.mul(g, h), g_inv))
            .collect();
        out.sort_unstable();
        out
    }

    /// Position of `h` in `0..q^4` (row-major, base `q` digits).
    pub fn index_of(&self, h: &Mat2) -> u64 {
        let q = self.field.q();
        ((h.a.packed() as u64 * q + h.b.packed() as u64) * q + h.c.packed() as u64) * q
            + h.d.packed() as u64
    }

    pub fn matrix_at(&self, index: u64) -> Mat2 {
        let q = self.field.q();
        let digit = |i: u32| {
            self.field
                .from_packed(index / q.pow(3 - i) % q)
                .expect("digit is below q")
        };
        Mat2::new(digit(0), digit(1), digit(2), digit(3))
    }

    /// All invertible matrices in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Mat2> + '_ {
        let q = self.field.q();
        (0..q.pow(4))
            .map(|i| self.matrix_at(i))
            .filter(|h| self.is_invertible(h))
    }

    /// Size of the group generated by `gens`, by breadth-first closure.
    pub fn closure_size(&self, gens: &[Mat2]) -> u64 {
        let q = self.field.q();
        let mut seen = vec![false; q.pow(4) as usize];
        let id = self.identity();
        seen[self.index_of(&id) as usize] = true;
        let mut queue = vec![id];
        let mut count = 1u64;
        while let Some(g) = queue.pop() {
            for s in gens {
                let h = self.mul(&g, s);
                let idx = self.index_of(&h) as usize;
                if !seen[idx] {
                    seen[idx] = true;
                    count += 1;
                    queue.push(h);
                }
            }
        }
        count
    }

    /// A verified generating set for the whole group.
    ///
    /// Tries `{dia(g, 1), [[-1, 1], [-1, 0]]}` for a primitive `g`, then adds
    /// the swap and an elementary transvection, and finally falls back to the
    /// full element list. Groups larger than [`GENERATION_CHECK_CAP`] are not
    /// checked and get the first candidate.
    pub fn generating_set(&self) -> Vec<Mat2> {
        let f = self.field;
        let pair = vec![
            Mat2::diag(f.primitive(), f.one()),
            Mat2::new(f.from_int(-1), f.one(), f.from_int(-1), f.zero()),
        ];
        let total = self.group_order();
        if total > GENERATION_CHECK_CAP {
            return pair;
        }
        if self.closure_size(&pair) == total {
            return pair;
        }
        let mut extended = pair;
        extended.push(self.swap());
        extended.push(Mat2::new(f.one(), f.one(), f.zero(), f.one()));
        if self.closure_size(&extended) == total {
            return extended;
        }
        self.elements().collect()
    }

    /// Text form `[[a,b],[c,d]]`.
    pub fn format(&self, h: &Mat2) -> String {
        let f = self.field;
        format!(
            "[[{},{}],[{},{}]]",
            f.format(h.a),
            f.format(h.b),
            f.format(h.c),
            f.format(h.d)
        )
    }
}

/// Outcome of the exhaustive search for conjugators between distinct
/// diagonal cyclic subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalConjugatorCheck {
    pub q: u64,
    pub diagonal_subgroups: usize,
    pub conjugators_found: usize,
    /// `(g, H1 generator, H2 generator)` with `g` not monomial.
    pub counterexamples: Vec<(Mat2, Mat2, Mat2)>,
}

/// For every cyclic subgroup `H1` of the diagonal group and every `g` in the
/// group with `g H1 g^-1` diagonal and different from `H1`, records whether
/// `g` is monomial.
pub fn check_diagonal_conjugators(gl: &Gl2<'_>) -> Result<DiagonalConjugatorCheck> {
    let f = gl.field();
    let units: Vec<FieldElement> = f.elements().filter(|x| !x.is_zero()).collect();
    let mut subgroups = BTreeSet::new();
    for &x in &units {
        for &y in &units {
            subgroups.insert(gl.cyclic_subgroup(&Mat2::diag(x, y))?);
        }
    }
    let all: Vec<(Mat2, Mat2)> = gl
        .elements()
        .map(|g| {
            let gi = gl.inv(&g).expect("elements are invertible");
            (g, gi)
        })
        .collect();
    let mut conjugators_found = 0;
    let mut counterexamples = Vec::new();
    for h1 in &subgroups {
        for (g, gi) in &all {
            let image = gl.conjugate_elements(g, gi, &h1.elements);
            if image != h1.elements && image.iter().all(Mat2::is_diagonal) {
                conjugators_found += 1;
                if !g.is_monomial() {
                    let h2 = gl.cyclic_subgroup(&gl.mul(&gl.mul(g, &h1.min_generator), gi))?;
                    counterexamples.push((*g, h1.min_generator, h2.min_generator));
                }
            }
        }
    }
    Ok(DiagonalConjugatorCheck {
        q: f.q(),
        diagonal_subgroups: subgroups.len(),
        conjugators_found,
        counterexamples,
    })
}

impl fmt::Display for DiagonalConjugatorCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={}: {} diagonal cyclic subgroups, {} conjugators onto distinct diagonal subgroups, {} non-monomial",
            self.q,
            self.diagonal_subgroups,
            self.conjugators_found,
            self.counterexamples.len()
        )
    }
}
