//! Arithmetic in `Z_n`: factorization, CRT and the involutions of `Z_n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};

/// Prime factorization `n = 2^r0 * prod p_i^r_i` with the odd primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub n: u64,
    pub r0: u32,
    pub odd_parts: Vec<(u64, u32)>,
}

impl Factorization {
    /// Number of distinct odd primes.
    pub fn t(&self) -> usize {
        self.odd_parts.len()
    }

    /// The prime-power moduli of the CRT decomposition, `2^r0` first (if
    /// `r0 > 0`) and then the odd prime powers in ascending prime order.
    pub fn prime_powers(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.odd_parts.len() + 1);
        if self.r0 > 0 {
            out.push(1u64 << self.r0);
        }
        out.extend(self.odd_parts.iter().map(|&(p, r)| p.pow(r)));
        out
    }

    /// `n = p^k` or `n = 2 p^k` for an odd prime `p`.
    pub fn is_odd_prime_power_or_twice(&self) -> bool {
        self.r0 <= 1 && self.odd_parts.len() == 1
    }
}

/// Trial division up to `sqrt(n)`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::domain(format!(
            "modulus must be at least 2, got {n}"
        )));
    }
    let mut m = n;
    let r0 = m.trailing_zeros();
    m >>= r0;
    let mut odd_parts = Vec::new();
    let mut p = 3u64;
    while p.saturating_mul(p) <= m {
        if m.is_multiple_of(p) {
            let mut r = 0;
            while m.is_multiple_of(p) {
                m /= p;
                r += 1;
            }
            odd_parts.push((p, r));
        }
        p += 2;
    }
    if m > 1 {
        odd_parts.push((m, 1));
    }
    Ok(Factorization { n, r0, odd_parts })
}

/// An element of `Z_n`, always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZMod {
    value: u64,
    modulus: u64,
}

impl ZMod {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        ZMod {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_signed(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        ZMod::new(value.rem_euclid(m) as u64, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_one(self) -> bool {
        self.value == 1 % self.modulus
    }

    pub fn square(self) -> Self {
        self * self
    }
}

impl fmt::Display for ZMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ZMod {
    type Output = ZMod;
    fn add(self, rhs: ZMod) -> ZMod {
        debug_assert_eq!(self.modulus, rhs.modulus);
        ZMod::new(
            ((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64,
            self.modulus,
        )
    }
}

impl Sub for ZMod {
    type Output = ZMod;
    fn sub(self, rhs: ZMod) -> ZMod {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self + (-rhs)
    }
}

impl Neg for ZMod {
    type Output = ZMod;
    fn neg(self) -> ZMod {
        ZMod::new(self.modulus - self.value, self.modulus)
    }
}

impl Mul for ZMod {
    type Output = ZMod;
    fn mul(self, rhs: ZMod) -> ZMod {
        debug_assert_eq!(self.modulus, rhs.modulus);
        ZMod::new(
            ((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64,
            self.modulus,
        )
    }
}

/// Closed-form involutions of `Z_q` for a prime power `q = p^k`.
fn prime_power_involutions(p: u64, k: u32) -> Vec<u64> {
    let q = p.pow(k);
    match (p, k) {
        (2, 1) => vec![1],
        (2, 2) => vec![1, 3],
        (2, _) => {
            let half = q / 2;
            vec![1, half - 1, half + 1, q - 1]
        }
        _ => vec![1, q - 1],
    }
}

/// Per-prime-power involution sets in the order of [`Factorization::prime_powers`].
pub(crate) fn factor_involutions(f: &Factorization) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if f.r0 > 0 {
        out.push(prime_power_involutions(2, f.r0));
    }
    for &(p, r) in &f.odd_parts {
        out.push(prime_power_involutions(p, r));
    }
    out
}

/// All `u` in `Z_n` with `u^2 = 1`, from the prime-power closed forms
/// recombined by CRT. Sorted ascending.
pub fn involutions_zn(n: u64) -> Result<Vec<ZMod>> {
    let f = factorize(n)?;
    let moduli = f.prime_powers();
    let per_factor = factor_involutions(&f);
    let mut out = Vec::new();
    for combo in cartesian(&per_factor) {
        let residues: Vec<ZMod> = combo
            .iter()
            .zip(&moduli)
            .map(|(&v, &q)| ZMod::new(v, q))
            .collect();
        out.push(crt_combine(&residues, &f)?);
    }
    out.sort();
    Ok(out)
}

/// Full scan of `Z_n` for `u^2 = 1`. Independent of the closed forms.
pub fn involutions_zn_bruteforce(n: u64, cap: u64) -> Result<Vec<ZMod>> {
    if n < 2 {
        return Err(Error::domain(format!(
            "modulus must be at least 2, got {n}"
        )));
    }
    check_cap("modulus for brute-force scan", n, cap)?;
    Ok((0..n)
        .map(|u| ZMod::new(u, n))
        .filter(|u| u.square().is_one())
        .collect())
}

/// `|inv(Z_n)|`: `2^t` for `r0 <= 1`, `2^(t+1)` for `r0 = 2`, `2^(t+2)` for `r0 >= 3`.
pub fn inv_count_zn(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let t = f.t() as u32;
    Ok(match f.r0 {
        0 | 1 => 1 << t,
        2 => 1 << (t + 1),
        _ => 1 << (t + 2),
    })
}

/// Residues of `a` modulo each prime power of `f`.
pub fn crt_split(a: ZMod, f: &Factorization) -> Result<Vec<ZMod>> {
    if a.modulus() != f.n {
        return Err(Error::domain(format!(
            "element modulus {} does not match factorization of {}",
            a.modulus(),
            f.n
        )));
    }
    Ok(f.prime_powers()
        .into_iter()
        .map(|q| ZMod::new(a.value() % q, q))
        .collect())
}

/// Inverse of [`crt_split`]: the residues must carry exactly the prime-power
/// moduli of `f`, in order.
pub fn crt_combine(residues: &[ZMod], f: &Factorization) -> Result<ZMod> {
    let moduli = f.prime_powers();
    let given: Vec<u64> = residues.iter().map(|r| r.modulus()).collect();
    if given != moduli {
        return Err(Error::domain(format!(
            "residue moduli {given:?} do not match the CRT moduli {moduli:?} of {}",
            f.n
        )));
    }
    let combined = crt_combine_coprime(residues)?;
    debug_assert_eq!(combined.modulus(), f.n);
    Ok(combined)
}

/// CRT over arbitrary pairwise coprime moduli; the result lives modulo their product.
pub fn crt_combine_coprime(residues: &[ZMod]) -> Result<ZMod> {
    let mut acc = ZMod::new(0, 1);
    for &r in residues {
        let (m1, m2) = (acc.modulus(), r.modulus());
        let (g, inv_m1, _) = ext_gcd(m1 as i128, m2 as i128);
        if g != 1 {
            return Err(Error::domain(format!(
                "moduli {m1} and {m2} are not coprime"
            )));
        }
        let m = m1
            .checked_mul(m2)
            .ok_or_else(|| Error::domain("product of moduli overflows 64 bits"))?;
        // x = a1 + m1 * ((a2 - a1) * m1^{-1} mod m2)
        let diff = (r.value() as i128 - acc.value() as i128).rem_euclid(m2 as i128);
        let k = (diff * inv_m1.rem_euclid(m2 as i128)).rem_euclid(m2 as i128);
        acc = ZMod::new((acc.value() as i128 + m1 as i128 * k) as u64, m);
    }
    Ok(acc)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Cartesian product of the given lists, first list varying slowest.
pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for item in list {
                let mut v = prefix.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(v: &[ZMod]) -> Vec<u64> {
        v.iter().map(|z| z.value()).collect()
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(60).unwrap();
        assert_eq!((f.r0, f.odd_parts.clone()), (2, vec![(3, 1), (5, 1)]));
        let f = factorize(2).unwrap();
        assert_eq!((f.r0, f.odd_parts.clone()), (1, vec![]));
        let f = factorize(27).unwrap();
        assert_eq!((f.r0, f.odd_parts.clone()), (0, vec![(3, 3)]));
        assert_eq!(
            factorize(1),
            Err(Error::Domain("modulus must be at least 2, got 1".into()))
        );
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 2..5000u64 {
            let f = factorize(n).unwrap();
            let prod: u64 = f.prime_powers().iter().product();
            assert_eq!(prod, n);
            assert!(f.odd_parts.windows(2).all(|w| w[0].0 < w[1].0));
            for &(p, r) in &f.odd_parts {
                assert!(p % 2 == 1 && r >= 1);
                assert!((2..p).take_while(|d| d * d <= p).all(|d| p % d != 0));
            }
        }
    }

    #[test]
    fn involution_tables() {
        assert_eq!(values(&involutions_zn(16).unwrap()), vec![1, 7, 9, 15]);
        assert_eq!(values(&involutions_zn(27).unwrap()), vec![1, 26]);
        assert_eq!(values(&involutions_zn(12).unwrap()), vec![1, 5, 7, 11]);
        assert_eq!(values(&involutions_zn(2).unwrap()), vec![1]);
    }

    #[test]
    fn bruteforce_tables() {
        let cap = 1_000_000;
        assert_eq!(
            values(&involutions_zn_bruteforce(4, cap).unwrap()),
            vec![1, 3]
        );
        assert_eq!(values(&involutions_zn_bruteforce(2, cap).unwrap()), vec![1]);
        let inv105 = values(&involutions_zn_bruteforce(105, cap).unwrap());
        assert_eq!(inv105.len(), 8);
        for u in [1, 29, 34, 104] {
            assert!(inv105.contains(&u));
        }
        assert!(matches!(
            involutions_zn_bruteforce(2_000_000, cap),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn counting_formula() {
        assert_eq!(inv_count_zn(60).unwrap(), 8);
        assert_eq!(inv_count_zn(105).unwrap(), 8);
        assert_eq!(inv_count_zn(24).unwrap(), 8);
        assert_eq!(inv_count_zn(2).unwrap(), 1);
        assert_eq!(inv_count_zn(4).unwrap(), 2);
    }

    #[test]
    fn crt_examples() {
        let f = factorize(12).unwrap();
        let split = crt_split(ZMod::new(7, 12), &f).unwrap();
        assert_eq!(split, vec![ZMod::new(3, 4), ZMod::new(1, 3)]);
        assert_eq!(crt_combine(&split, &f).unwrap(), ZMod::new(7, 12));
        let zero = crt_split(ZMod::new(0, 12), &f).unwrap();
        assert!(zero.iter().all(|z| z.value() == 0));
    }

    #[test]
    fn crt_rejects_non_coprime() {
        let r = crt_combine_coprime(&[ZMod::new(1, 4), ZMod::new(1, 6)]);
        assert!(matches!(r, Err(Error::Domain(_))));
        let f = factorize(12).unwrap();
        assert!(crt_combine(&[ZMod::new(1, 2), ZMod::new(1, 6)], &f).is_err());
        assert!(crt_split(ZMod::new(1, 13), &f).is_err());
    }

    #[test]
    fn zmod_arithmetic() {
        let a = ZMod::new(5, 7);
        let b = ZMod::new(4, 7);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 1);
        assert_eq!((b - a).value(), 6);
        assert_eq!((a * b).value(), 6);
        assert_eq!((-ZMod::new(0, 7)).value(), 0);
        assert_eq!(ZMod::from_signed(-1, 7).value(), 6);
    }
}
