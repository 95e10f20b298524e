//! The finite field `GF(p^k)`.
//!
//! Elements are polynomials of degree `< k` over `Z_p`, stored packed into a
//! single integer so that matrices over the field are small `Copy` values.
//! The packing puts the constant coefficient in the most significant digit,
//! so integer order on packed values equals lexicographic order on the
//! coefficient tuple `(c0, c1, ..., c_{k-1})`.
//!
//! Construction is deterministic: the modulus is the lexicographically
//! smallest monic irreducible polynomial of degree `k` and the primitive
//! element is the smallest element of multiplicative order `q - 1`. Products
//! go through discrete-log tables built from that primitive element.

use std::fmt;
use std::str::FromStr;

use crate::numtheory::{self, FactoredInt};
use crate::{Error, Result};

/// Largest field order accepted by [`FieldSpec::new`].
pub const FIELD_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    /// Packed integer encoding, in `[0, q)`.
    pub fn packed(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A constructed field with its modulus and primitive element.
#[derive(Clone)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    primitive: FieldElement,
    one: FieldElement,
    /// `exp[i] = primitive^i` for `i in 0..q-1`.
    exp: Vec<u32>,
    /// Inverse of `exp`; `log[0]` is unused.
    log: Vec<u32>,
    /// `p^(k-1-i)`: weight of coefficient `i` in the packed encoding.
    weights: Vec<u64>,
    order_factors: FactoredInt,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("primitive", &self.coeffs(self.primitive))
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.k == other.k
            && self.modulus == other.modulus
            && self.primitive == other.primitive
    }
}

impl Eq for FieldSpec {}

/// A field designation, either `"p^k"` or a prime power `"q"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldDesignation {
    pub p: u64,
    pub k: u32,
}

impl FieldDesignation {
    pub fn order(&self) -> Option<u64> {
        self.p.checked_pow(self.k)
    }
}

impl FromStr for FieldDesignation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("'{s}' is not a field designation"));
        if let Some((p, k)) = s.split_once('^') {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let k: u32 = k.trim().parse().map_err(|_| bad())?;
            if !numtheory::is_prime(p) || k == 0 {
                return Err(Error::InvalidInput(format!(
                    "'{s}' is not of the form p^k with p prime, k >= 1"
                )));
            }
            return Ok(FieldDesignation { p, k });
        }
        let q: u64 = s.parse().map_err(|_| bad())?;
        if q < 2 {
            return Err(Error::InvalidInput(format!("{q} is not a prime power")));
        }
        let fq = numtheory::factorize(q)?;
        match fq.factors() {
            [(p, k)] => Ok(FieldDesignation { p: *p, k: *k }),
            _ => Err(Error::InvalidInput(format!("{q} is not a prime power"))),
        }
    }
}

impl FieldSpec {
    /// Constructs `GF(p^k)` with the default order cap.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        Self::with_cap(p, k, FIELD_CAP)
    }

    pub fn from_designation(d: FieldDesignation) -> Result<Self> {
        Self::new(d.p, d.k)
    }

    pub fn with_cap(p: u64, k: u32, cap: u64) -> Result<Self> {
        if !numtheory::is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidInput(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = match p.checked_pow(k) {
            Some(q) if q <= cap => q,
            _ => {
                return Err(Error::ResourceLimit(format!(
                    "field order {p}^{k} exceeds the cap {cap}"
                )))
            }
        };
        let weights: Vec<u64> = (0..k).map(|i| p.pow(k - 1 - i)).collect();
        let modulus = smallest_irreducible(p, k as usize);
        let order_factors = numtheory::factorize(q - 1)?;

        let unpack = |x: u64| -> Vec<u64> { weights.iter().map(|w| x / w % p).collect() };
        let is_primitive = |x: &[u64]| -> bool {
            order_factors.factors().iter().all(|&(r, _)| {
                let y = poly_pow_mod(x, (q - 1) / r, &modulus, p);
                !poly_is_one(&y)
            })
        };
        let primitive_packed = (1..q)
            .find(|&x| is_primitive(&unpack(x)))
            .expect("a finite field has a primitive element");

        let pack =
            |c: &[u64]| -> u32 { c.iter().zip(&weights).map(|(ci, w)| ci * w).sum::<u64>() as u32 };
        let g = unpack(primitive_packed);
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u64; k as usize];
        cur[0] = 1;
        for i in 0..q - 1 {
            let packed = pack(&cur);
            exp.push(packed);
            log[packed as usize] = i as u32;
            cur = poly_mul_mod(&cur, &g, &modulus, p);
        }
        let one = FieldElement(weights[0] as u32);
        debug_assert_eq!(exp[0], one.0);

        Ok(FieldSpec {
            p,
            k,
            q,
            modulus,
            primitive: FieldElement(primitive_packed as u32),
            one,
            exp,
            log,
            weights,
            order_factors,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, constant coefficient first, length `k + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn primitive(&self) -> FieldElement {
        self.primitive
    }

    /// Factorization of `q - 1`.
    pub fn unit_group_order(&self) -> &FactoredInt {
        &self.order_factors
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        self.one
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    /// Element from a coefficient vector (constant term first), reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.k as usize {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients, got {}",
                self.k,
                coeffs.len()
            )));
        }
        let packed: u64 = coeffs
            .iter()
            .zip(&self.weights)
            .map(|(c, w)| (c % self.p) * w)
            .sum();
        Ok(FieldElement(packed as u32))
    }

    /// Element from a packed integer in `[0, q)`.
    pub fn from_packed(&self, packed: u64) -> Result<FieldElement> {
        if packed >= self.q {
            return Err(Error::InvalidInput(format!(
                "{packed} is not below q = {}",
                self.q
            )));
        }
        Ok(FieldElement(packed as u32))
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let r = n.rem_euclid(self.p as i64) as u64;
        FieldElement((r * self.weights[0]) as u32)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        let x = x.0 as u64;
        self.weights.iter().map(|w| x / w % self.p).collect()
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement(((x.0 as u64 + y.0 as u64) % self.p) as u32);
        }
        let (mut a, mut b) = (x.0 as u64, y.0 as u64);
        let mut out = 0u64;
        for w in self.weights.iter().rev() {
            let digit = (a % self.p + b % self.p) % self.p;
            out += digit * w;
            a /= self.p;
            b /= self.p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement(((self.p - x.0 as u64) % self.p) as u32);
        }
        let mut a = x.0 as u64;
        let mut out = 0u64;
        for w in self.weights.iter().rev() {
            out += (self.p - a % self.p) % self.p * w;
            a /= self.p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.is_zero() || y.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.q - 1;
        let e = (self.log[x.0 as usize] as u64 + self.log[y.0 as usize] as u64) % n;
        FieldElement(self.exp[e as usize])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.q - 1;
        let e = (n - self.log[x.0 as usize] as u64) % n;
        Ok(FieldElement(self.exp[e as usize]))
    }

    /// Square-and-multiply power; `pow(x, 0) = 1`, including `x = 0`.
    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Discrete log to the primitive base, for nonzero `x`.
    pub fn log(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::InvalidInput("zero has no logarithm".into()));
        }
        Ok(self.log[x.0 as usize] as u64)
    }

    /// Multiplicative order, by stripping prime factors from `q - 1`.
    pub fn element_order(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::InvalidInput(
                "zero has no multiplicative order".into(),
            ));
        }
        let mut n = self.q - 1;
        for &(r, _) in self.order_factors.factors() {
            while n.is_multiple_of(r) && self.pow(x, n / r) == self.one {
                n /= r;
            }
        }
        Ok(n)
    }

    /// `primitive^((q-1)/m)`, an element of order exactly `m`.
    pub fn element_of_order(&self, m: u64) -> Result<FieldElement> {
        if m == 0 || !(self.q - 1).is_multiple_of(m) {
            return Err(Error::NoSuchElement { m, q: self.q });
        }
        Ok(self.pow(self.primitive, (self.q - 1) / m))
    }

    /// Textual form: the residue for prime fields, `(c0,c1,...)` otherwise.
    pub fn format(&self, x: FieldElement) -> String {
        if self.k == 1 {
            x.0.to_string()
        } else {
            let parts: Vec<String> = self.coeffs(x).iter().map(u64::to_string).collect();
            format!("({})", parts.join(","))
        }
    }

    /// Reference product by polynomial multiplication and reduction, bypassing
    /// the log tables.
    pub fn mul_by_polynomials(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let prod = poly_mul_mod(&self.coeffs(x), &self.coeffs(y), &self.modulus, self.p);
        self.from_coeffs(&prod)
            .expect("reduced product has k coefficients")
    }
}

// Polynomials over Z_p as coefficient vectors, constant term first. Reduced
// residues mod a degree-k monic modulus always have exactly k entries.

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_reduce(&mut prod, modulus, p);
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

/// Reduces in place modulo a monic polynomial; entries above the modulus
/// degree become zero.
fn poly_reduce(a: &mut [u64], modulus: &[u64], p: u64) {
    let k = modulus.len() - 1;
    for top in (k..a.len()).rev() {
        let c = a[top];
        if c == 0 {
            continue;
        }
        for (i, &mi) in modulus.iter().enumerate() {
            let idx = top - k + i;
            a[idx] = (a[idx] + (p - c) * mi % p) % p;
        }
    }
}

fn poly_pow_mod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut acc = vec![0u64; k];
    acc[0] = 1 % p;
    let mut b = base.to_vec();
    b.resize(k.max(b.len()), 0);
    poly_reduce(&mut b, modulus, p);
    b.truncate(k);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, modulus, p);
        }
        b = poly_mul_mod(&b, &b, modulus, p);
        e >>= 1;
    }
    acc
}

fn poly_is_one(a: &[u64]) -> bool {
    a.first() == Some(&1) && a[1..].iter().all(|&c| c == 0)
}

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // a mod b, with b made monic first.
        let lead_inv = numtheory::pow_mod(*b.last().unwrap(), p - 2, p);
        for c in b.iter_mut() {
            *c = *c * lead_inv % p;
        }
        poly_reduce(&mut a, &b, p);
        a.truncate(b.len() - 1);
        poly_trim(&mut a);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin's test for a monic polynomial of degree `k >= 1`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let mut x = vec![0u64; k];
    x[1] = 1;
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![x.clone()];
    for i in 1..=k {
        let next = poly_pow_mod(&frob[i - 1], p, f, p);
        frob.push(next);
    }
    if frob[k] != x {
        return false;
    }
    let kf = numtheory::factorize(k as u64).expect("degree is positive");
    kf.factors().iter().all(|&(r, _)| {
        let mut h = frob[k / r as usize].clone();
        h[1] = (h[1] + p - 1) % p;
        let g = poly_gcd(f, &h, p);
        g.len() == 1
    })
}

/// Lexicographically smallest monic irreducible of degree `k`, comparing
/// `(c0, c1, ..., c_{k-1})`. For `k = 1` this is `x`.
fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    let total = p.pow(k as u32);
    (0..total)
        .map(|n| {
            let mut f: Vec<u64> = (0..k).map(|i| n / p.pow((k - 1 - i) as u32) % p).collect();
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Irreducibility by exhaustive search for a monic factor of degree <= k/2.
    fn irreducible_by_division(f: &[u64], p: u64) -> bool {
        let k = f.len() - 1;
        for d in 1..=k / 2 {
            for n in 0..p.pow(d as u32) {
                let mut g: Vec<u64> = (0..d).map(|i| n / p.pow(i as u32) % p).collect();
                g.push(1);
                let mut r = f.to_vec();
                poly_reduce(&mut r, &g, p);
                if r[..d].iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for &(p, k) in &[
            (2u64, 2usize),
            (2, 3),
            (2, 4),
            (3, 2),
            (3, 3),
            (5, 2),
            (2, 6),
            (3, 4),
        ] {
            for n in 0..p.pow(k as u32) {
                let mut f: Vec<u64> = (0..k).map(|i| n / p.pow(i as u32) % p).collect();
                f.push(1);
                assert_eq!(
                    is_irreducible(&f, p),
                    irreducible_by_division(&f, p),
                    "p={p} f={f:?}"
                );
            }
        }
    }

    #[test]
    fn construction_examples() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.q(), 7);
        assert_eq!(f7.modulus(), &[0, 1]);
        assert_eq!(f7.primitive(), f7.from_int(3));

        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.q(), 4);
        assert_eq!(f4.modulus(), &[1, 1, 1]);

        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(FieldSpec::new(5, 0), Err(Error::InvalidInput(_))));
        assert!(matches!(
            FieldSpec::new(2, 21),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 200),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.mul(f7.from_int(3), f7.from_int(5)), f7.one());
        let f4 = FieldSpec::new(2, 2).unwrap();
        let x = f4.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f4.mul(x, x), f4.from_coeffs(&[1, 1]).unwrap());
        for f in [&f7, &f4] {
            assert_eq!(f.inv(f.one()).unwrap(), f.one());
            assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn order_examples() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.element_order(f7.one()).unwrap(), 1);
        assert_eq!(f7.element_order(f7.from_int(3)).unwrap(), 6);
        assert_eq!(f7.element_order(f7.from_int(2)).unwrap(), 3);
        assert!(f7.element_order(f7.zero()).is_err());

        assert_eq!(f7.element_of_order(6).unwrap(), f7.from_int(3));
        assert_eq!(f7.element_of_order(1).unwrap(), f7.one());
        assert_eq!(
            f7.element_of_order(4),
            Err(Error::NoSuchElement { m: 4, q: 7 })
        );
    }

    fn brute_order(f: &FieldSpec, x: FieldElement) -> u64 {
        let mut y = x;
        let mut n = 1;
        while y != f.one() {
            y = f.mul_by_polynomials(y, x);
            n += 1;
        }
        n
    }

    #[test]
    fn orders_exhaustive_small_fields() {
        for (p, k) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (3, 3),
            (2, 5),
            (7, 2),
            (2, 6),
        ] {
            let f = FieldSpec::new(p, k).unwrap();
            assert_eq!(
                f.elements().filter(|x| !x.is_zero()).count() as u64,
                f.q() - 1
            );
            for x in f.elements().filter(|x| !x.is_zero()) {
                let n = f.element_order(x).unwrap();
                assert_eq!(n, brute_order(&f, x));
                assert_eq!((f.q() - 1) % n, 0);
            }
            assert_eq!(f.element_order(f.primitive()).unwrap(), f.q() - 1);
            // The primitive element is the first one of full order.
            let first = f
                .elements()
                .find(|&x| !x.is_zero() && brute_order(&f, x) == f.q() - 1);
            assert_eq!(first, Some(f.primitive()));
            for m in f.unit_group_order().divisors() {
                assert_eq!(f.element_order(f.element_of_order(m).unwrap()).unwrap(), m);
            }
        }
    }

    #[test]
    fn order_invariant_up_to_4096() {
        for q in 2..=4096u64 {
            let Ok(d) = q.to_string().parse::<FieldDesignation>() else {
                continue;
            };
            let f = FieldSpec::from_designation(d).unwrap();
            for m in f.unit_group_order().divisors() {
                assert_eq!(
                    f.element_order(f.element_of_order(m).unwrap()).unwrap(),
                    m,
                    "q={q}"
                );
            }
        }
    }

    #[test]
    fn construction_is_reproducible() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (13, 1)] {
            let a = FieldSpec::new(p, k).unwrap();
            let b = FieldSpec::new(p, k).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.exp, b.exp);
        }
    }

    #[test]
    fn designation_parsing() {
        assert_eq!(
            "7^1".parse::<FieldDesignation>().unwrap(),
            FieldDesignation { p: 7, k: 1 }
        );
        assert_eq!(
            "3^2".parse::<FieldDesignation>().unwrap(),
            FieldDesignation { p: 3, k: 2 }
        );
        assert_eq!(
            "9".parse::<FieldDesignation>().unwrap(),
            FieldDesignation { p: 3, k: 2 }
        );
        assert_eq!(
            "13".parse::<FieldDesignation>().unwrap(),
            FieldDesignation { p: 13, k: 1 }
        );
        for bad in ["9999", "1", "0", "6", "4^2", "x", "2^0", ""] {
            assert!(bad.parse::<FieldDesignation>().is_err(), "{bad}");
        }
    }

    #[test]
    fn formatting() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.format(f9.from_coeffs(&[2, 1]).unwrap()), "(2,1)");
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.format(f7.from_int(-1)), "6");
    }

    fn field_strategy() -> impl Strategy<Value = (u64, u32)> {
        prop::sample::select(vec![(2u64, 2u32), (2, 3), (3, 2), (5, 2), (3, 3), (7, 2)])
    }

    proptest! {
        #[test]
        fn field_axioms((p, k) in field_strategy(), a in 0u64..1000, b in 0u64..1000, c in 0u64..1000) {
            let f = FieldSpec::new(p, k).unwrap();
            let q = f.q();
            let (a, b, c) = (f.from_packed(a % q).unwrap(), f.from_packed(b % q).unwrap(), f.from_packed(c % q).unwrap());
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(a, b), f.mul_by_polynomials(a, b));
            prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
    }
}
