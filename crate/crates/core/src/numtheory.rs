//! Integer arithmetic behind the class-count formula.
//!
//! Everything here is a function of the prime factorization of `m`. Write
//! `m = 2^b0 * p1^b1 * ... * pr^br` with the `pi` odd primes. Then
//!
//! * `rho(m)   = prod (p^e + p^(e-1))`, the number of cyclic subgroups of
//!   order `m` inside `Z_m x Z_m`;
//! * `delta(m) = 2^r`, `2^(r+1)` or `2^(r+2)` as `b0 <= 1`, `b0 = 2`, `b0 >= 3`;
//! * the class count is `(rho(m) + delta(m)) / 2`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest integer accepted by [`factorize`].
pub const FACTORIZE_CAP: u64 = (1 << 63) - 1;

/// A positive integer with its ascending prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredInt {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInt {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs, primes strictly ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Exponent of 2 in the value.
    pub fn two_exponent(&self) -> u32 {
        match self.factors.first() {
            Some(&(2, e)) => e,
            _ => 0,
        }
    }

    /// Number of distinct odd prime divisors.
    pub fn odd_prime_count(&self) -> u32 {
        self.factors.iter().filter(|(p, _)| *p != 2).count() as u32
    }

    /// The prime-power components `p^e`, in the order of [`Self::factors`].
    pub fn prime_powers(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, e)| p.pow(e)).collect()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// All positive divisors in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factorization by trial division up to the square root.
pub fn factorize(n: u64) -> Result<FactoredInt> {
    if n == 0 {
        return Err(Error::InvalidInput("cannot factorize 0".into()));
    }
    if n > FACTORIZE_CAP {
        return Err(Error::ResourceLimit(format!(
            "{n} exceeds the factorization cap {FACTORIZE_CAP}"
        )));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut d = 3u64;
    while d.saturating_mul(d) <= rest {
        push(d, &mut rest);
        d += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(FactoredInt { value: n, factors })
}

pub fn is_prime(n: u64) -> bool {
    match factorize(n) {
        Ok(f) => f.factors == [(n, 1)],
        Err(_) => false,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`. Returns `Some(0)` for `m = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let (mut old_r, mut r) = ((a % m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 && m != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub fn euler_phi(n: &FactoredInt) -> u64 {
    n.factors
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Number of cyclic subgroups of order `m` in `Z_m x Z_m`.
pub fn rho(m: &FactoredInt) -> u128 {
    m.factors
        .iter()
        .map(|&(p, e)| {
            let p = p as u128;
            p.pow(e) + p.pow(e - 1)
        })
        .product()
}

/// Number of cyclic order-`m` subgroups of `Z_m x Z_m` fixed by the coordinate swap.
pub fn delta(m: &FactoredInt) -> u64 {
    let r = m.odd_prime_count();
    match m.two_exponent() {
        0 | 1 => 1 << r,
        2 => 1 << (r + 1),
        _ => 1 << (r + 2),
    }
}

/// Number of elements of order exactly 2 in `Aut(Z_m) = (Z/m)^*`, from the
/// structure of the unit group.
pub fn involution_count(m: &FactoredInt) -> u64 {
    let r = m.odd_prime_count();
    let rank = match m.two_exponent() {
        0 | 1 => r,
        2 => r + 1,
        _ => r + 2,
    };
    (1u64 << rank) - 1
}

/// All `k` in `[1, m]` with `gcd(k, m) = 1` and `k^2 = 1 (mod m)`, by direct
/// enumeration.
pub fn unit_involutions(m: u64) -> Vec<u64> {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return vec![1];
    }
    let mut out = Vec::new();
    // Running value of k^2 mod m; (k+1)^2 = k^2 + 2k + 1.
    let mut square = 0u64;
    let mut step = 1 % m;
    for k in 1..=m {
        square += step;
        if square >= m {
            square -= m;
        }
        step += 2;
        if step >= m {
            step -= m;
            if step >= m {
                step -= m;
            }
        }
        if square == 1 && gcd(k, m) == 1 {
            out.push(k);
        }
    }
    out
}

/// Closed-form class count together with its ingredients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub m: u64,
    pub rho: u128,
    pub delta: u64,
    pub n_classes: u128,
    pub involutions: u64,
}

/// Number of conjugacy classes of reducible cyclic subgroups of order `m` in
/// `GL(2,q)` for any `q` with `m | q-1`.
pub fn count_reducible_classes(m: &FactoredInt) -> CountReport {
    let rho = rho(m);
    let delta = delta(m);
    let sum = rho + delta as u128;
    debug_assert!(sum.is_multiple_of(2), "rho + delta must be even");
    CountReport {
        m: m.value,
        rho,
        delta,
        n_classes: sum / 2,
        involutions: involution_count(m),
    }
}

/// True iff every unit mod `m` squares to 1, i.e. `m = 2^t 3^s` with `t <= 3`
/// and `s <= 1`.
pub fn fix_bijectivity_predicate(m: &FactoredInt) -> bool {
    m.factors.iter().all(|&(p, e)| match p {
        2 => e <= 3,
        3 => e <= 1,
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(n: u64) -> FactoredInt {
        factorize(n).unwrap()
    }

    fn phi_by_count(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    /// Cyclic order-m subgroups of Z_m x Z_m as explicit element sets.
    fn cyclic_subgroups_naive(m: u64) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..m {
            for b in 0..m {
                let elems: std::collections::BTreeSet<(u64, u64)> =
                    (0..m).map(|k| (k * a % m, k * b % m)).collect();
                if elems.len() as u64 == m {
                    seen.insert(elems);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(f(12).factors(), &[(2, 2), (3, 1)]);
        assert!(f(1).factors().is_empty());
        assert_eq!(f(97).factors(), &[(97, 1)]);
        assert_eq!(
            factorize(0),
            Err(Error::InvalidInput("cannot factorize 0".into()))
        );
        assert!(matches!(factorize(u64::MAX), Err(Error::ResourceLimit(_))));
        assert_eq!(f(FACTORIZE_CAP).value(), FACTORIZE_CAP);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(&f(1)), 1);
        assert_eq!(euler_phi(&f(9)), phi_by_count(9));
        assert_eq!(euler_phi(&f(9)), 6);
        assert_eq!(euler_phi(&f(12)), 4);
        for n in 1..500 {
            assert_eq!(euler_phi(&f(n)), phi_by_count(n), "phi({n})");
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&f(1)), 1);
        assert_eq!(rho(&f(2)), 3);
        assert_eq!(cyclic_subgroups_naive(12), 24);
        assert_eq!(rho(&f(12)), 24);
        for m in 1..=30 {
            assert_eq!(rho(&f(m)), cyclic_subgroups_naive(m) as u128, "rho({m})");
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&f(1)), 1);
        assert_eq!(delta(&f(3)), 2);
        assert_eq!(delta(&f(12)), 4);
        assert_eq!(delta(&f(8)), 4);
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution_count(&f(2)), 0);
        assert_eq!(involution_count(&f(8)), 3);
        assert_eq!(involution_count(&f(12)), 3);
        assert_eq!(unit_involutions(12)[1..], [5, 7, 11]);
        assert_eq!(involution_count(&f(15)), 3);
        assert_eq!(unit_involutions(15)[1..], [4, 11, 14]);
    }

    #[test]
    fn unit_involution_examples() {
        assert_eq!(unit_involutions(12), vec![1, 5, 7, 11]);
        assert_eq!(unit_involutions(5), vec![1, 4]);
        assert_eq!(unit_involutions(2), vec![1]);
        assert_eq!(unit_involutions(1), vec![1]);
        for m in 1..300u64 {
            let naive: Vec<u64> = (1..=m)
                .filter(|&k| gcd(k, m) == 1 && (k * k) % m == 1 % m)
                .collect();
            assert_eq!(unit_involutions(m), naive, "m = {m}");
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_reducible_classes(&f(1)).n_classes, 1);
        assert_eq!(count_reducible_classes(&f(2)).n_classes, 2);
        assert_eq!(count_reducible_classes(&f(6)).n_classes, 7);
        assert_eq!(count_reducible_classes(&f(4)).n_classes, 4);
        let r = count_reducible_classes(&f(12));
        assert_eq!((r.rho, r.delta, r.n_classes, r.involutions), (24, 4, 14, 3));
    }

    #[test]
    fn bijectivity_examples() {
        assert!(fix_bijectivity_predicate(&f(24)));
        assert!(!fix_bijectivity_predicate(&f(16)));
        assert!(!fix_bijectivity_predicate(&f(9)));
        assert!(fix_bijectivity_predicate(&f(1)));
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(mod_inverse(5, 12), Some(5));
        assert_eq!(mod_inverse(4, 12), None);
        assert_eq!(mod_inverse(0, 1), Some(0));
        assert_eq!(pow_mod(3, 6, 7), 1);
        assert_eq!(f(12).divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(f(1).divisors(), vec![1]);
    }

    proptest! {
        #[test]
        fn factorization_round_trips(n in 1u64..=1_000_000_000_000) {
            let fi = f(n);
            let product: u64 = fi.factors().iter().map(|&(p, e)| p.pow(e)).product();
            prop_assert_eq!(product, n);
            prop_assert!(fi.factors().windows(2).all(|w| w[0].0 < w[1].0));
            prop_assert!(fi.factors().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
            prop_assert_eq!(f(fi.value()), fi);
        }

        #[test]
        fn rho_plus_delta_is_even(n in 1u64..=u32::MAX as u64) {
            let fi = f(n);
            prop_assert_eq!((rho(&fi) + delta(&fi) as u128) % 2, 0);
            prop_assert_eq!(delta(&fi), involution_count(&fi) + 1);
        }

        #[test]
        fn inverse_is_inverse(a in 1u64..10_000, m in 2u64..10_000) {
            if let Some(inv) = mod_inverse(a, m) {
                prop_assert_eq!(mul_mod(a, inv, m), 1);
            } else {
                prop_assert!(gcd(a, m) > 1);
            }
        }
    }
}
