//! Witt dimension formulas.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::MultiDegree;

/// The Möbius function.
pub fn mobius(mut n: u64) -> i32 {
    assert!(n > 0);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of Lyndon words of length `n` over `d` letters.
pub fn witt_count(d: usize, n: usize) -> BigUint {
    assert!(d >= 1 && n >= 1);
    let base = BigUint::from(d);
    divisor_sum(n, n, |m| base.pow((n / m) as u32))
}

/// Number of Lyndon words with the given letter multiplicities.
pub fn fine_witt_count(md: &MultiDegree) -> BigUint {
    let n = md.n();
    let g = md.counts().iter().filter(|&&c| c > 0).fold(0usize, |g, &c| g.gcd(&c));
    divisor_sum(g, n, |m| {
        let mut v = factorial(n / m);
        for &c in md.counts() {
            v /= factorial(c / m);
        }
        v
    })
}

// (1/n) Σ_{m | g} μ(m) f(m), with the signed sum kept exact.
fn divisor_sum(g: usize, n: usize, f: impl Fn(usize) -> BigUint) -> BigUint {
    let mut pos = BigUint::zero();
    let mut neg = BigUint::zero();
    for m in (1..=g).filter(|m| g.is_multiple_of(*m)) {
        match mobius(m as u64) {
            1 => pos += f(m),
            -1 => neg += f(m),
            _ => {}
        }
    }
    let total = pos - neg;
    debug_assert!((&total % n).is_zero());
    total / n
}

fn factorial(k: usize) -> BigUint {
    (2..=k).fold(BigUint::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{lyndon_words, words_matching, Alphabet, WordFilter};

    #[test]
    fn mobius_values() {
        let want = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in want.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), m);
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(witt_count(2, 6), BigUint::from(9u32));
        assert_eq!(witt_count(3, 2), BigUint::from(3u32));
        assert_eq!(witt_count(5, 1), BigUint::from(5u32));
        let md = |v: Vec<usize>| MultiDegree::new(v).unwrap();
        assert_eq!(fine_witt_count(&md(vec![2, 2, 2])), BigUint::from(14u32));
        assert_eq!(fine_witt_count(&md(vec![3, 4])), BigUint::from(5u32));
        assert_eq!(fine_witt_count(&md(vec![1, 1])), BigUint::from(1u32));
        assert_eq!(fine_witt_count(&md(vec![0, 2])), BigUint::zero());
        assert_eq!(fine_witt_count(&md(vec![0, 1])), BigUint::one());
    }

    #[test]
    fn counts_match_enumeration() {
        for d in 1..=3 {
            let a = Alphabet::numeric(d);
            for n in 1..=7 {
                let brute = words_matching(&a, &WordFilter::Length(n))
                    .into_iter()
                    .filter(|w| (1..n).all(|i| w.letters() < w.rotation(i).letters()))
                    .count();
                assert_eq!(witt_count(d, n), BigUint::from(brute));
                for md in MultiDegree::all(d, n) {
                    let got = lyndon_words(&a, &WordFilter::MultiDegree(md.clone())).len();
                    assert_eq!(fine_witt_count(&md), BigUint::from(got), "{md}");
                }
            }
        }
    }
}
