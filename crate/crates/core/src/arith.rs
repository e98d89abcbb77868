//! Small exact-arithmetic helpers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut rest = n.clone();
    let mut part = BigUint::one();
    while (&rest % &p) == BigUint::ZERO && rest > BigUint::ZERO {
        rest /= &p;
        part *= &p;
    }
    part
}

pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
    a.lcm(b)
}

/// Exact `log_p(n)` when `n` is a power of `p`.
pub fn exact_log(n: &BigUint, p: u64) -> Option<u32> {
    let p = BigUint::from(p);
    let mut rest = n.clone();
    let mut k = 0;
    while rest > BigUint::one() {
        let (q, r) = rest.div_rem(&p);
        if r != BigUint::ZERO {
            return None;
        }
        rest = q;
        k += 1;
    }
    (rest == BigUint::one()).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(15));
    }

    #[test]
    fn parts_and_logs() {
        assert_eq!(p_part(&BigUint::from(168u32), 2), BigUint::from(8u32));
        assert_eq!(p_part(&BigUint::from(168u32), 5), BigUint::one());
        assert_eq!(exact_log(&BigUint::from(243u32), 3), Some(5));
        assert_eq!(exact_log(&BigUint::from(1u32), 3), Some(0));
        assert_eq!(exact_log(&BigUint::from(12u32), 2), None);
    }
}
