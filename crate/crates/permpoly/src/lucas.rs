//! Multinomial coefficients modulo a prime, digit by digit.
//!
//! `C(t; k_1..k_n) mod p` is nonzero iff the base-p digits of the parts add up
//! to the digits of `t` with no carries, and then it is the product of the
//! small digit-wise multinomials. No large factorial is ever formed.

use crate::error::{Error, Result};

fn digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut v = Vec::new();
    while n > 0 {
        v.push(n % p);
        n /= p;
    }
    v
}

/// `C(t; ks) mod p`.
pub fn multinomial_mod_p(t: u64, ks: &[u64], p: u64) -> Result<u64> {
    if !crate::field::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let sum: u64 = ks.iter().sum();
    if sum != t {
        return Err(Error::SumMismatch {
            expected: t,
            got: sum,
        });
    }
    // factorials below p, and their inverses via Fermat
    let fact: Vec<u64> = (0..p).scan(1u64, |acc, i| {
        if i > 0 {
            *acc = *acc * i % p;
        }
        Some(*acc)
    }).collect();
    let inv = |a: u64| pow_mod(a, p - 2, p);

    let td = digits(t, p);
    let kd: Vec<Vec<u64>> = ks.iter().map(|&k| digits(k, p)).collect();
    let mut result = 1u64;
    for (j, &c) in td.iter().enumerate() {
        let mut s = 0;
        let mut denom = 1u64;
        for d in &kd {
            let b = d.get(j).copied().unwrap_or(0);
            s += b;
            denom = denom * fact[b as usize] % p;
        }
        if s != c {
            return Ok(0);
        }
        result = result * fact[c as usize] % p * inv(denom) % p;
    }
    // a part with more digits than t would have forced a carry above
    if kd.iter().any(|d| d.len() > td.len()) {
        return Ok(0);
    }
    Ok(result)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// All compositions of `t` into `parts` nonnegative parts, lexicographic.
pub fn compositions(t: u64, parts: usize) -> Vec<Vec<u64>> {
    fn go(t: u64, parts: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            cur.push(t);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=t {
            cur.push(k);
            go(t - k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(t, parts, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn exact(t: u64, ks: &[u64]) -> BigUint {
        let fact = |n: u64| (1..=n).fold(BigUint::from(1u32), |a, i| a * i);
        ks.iter().fold(fact(t), |acc, &k| acc / fact(k))
    }

    #[test]
    fn examples() {
        assert_eq!(multinomial_mod_p(9, &[9], 5).unwrap(), 1);
        assert_eq!(multinomial_mod_p(6, &[2, 2, 2], 3).unwrap(), 0);
        assert_eq!(multinomial_mod_p(17, &[4, 0, 0, 1, 12], 3).unwrap(), 1);
        assert!(matches!(multinomial_mod_p(5, &[1, 2], 3), Err(Error::SumMismatch { .. })));
    }

    #[test]
    fn agrees_with_big_integers() {
        for p in [2u64, 3, 5, 7] {
            for t in 0..=18 {
                for parts in 1..=4 {
                    for ks in compositions(t, parts) {
                        let e = exact(t, &ks) % BigUint::from(p);
                        let got = multinomial_mod_p(t, &ks, p).unwrap();
                        assert_eq!(BigUint::from(got), e, "t={t} ks={ks:?} p={p}");
                    }
                }
            }
        }
    }
}
