//! Polynomials of degree at most `d` over `Z_n`, the finite window of `Z_n[x]`.
//!
//! Elements are coefficient vectors of fixed length `d + 1`. Each element has
//! a canonical index `sum a_i * n^i`, which is also its vertex index in the
//! Cayley graph and the sort key of every element set returned here.
//!
//! Addition and [`mul`] are the operations of the quotient ring
//! `Z_n[x]/(x^(d+1))`. Involutions, however, are tested in `Z_n[x]` itself:
//! [`is_involution`] squares without truncating. The two notions agree unless
//! `n = 2 (mod 4)` and `d >= 1`, where the quotient gains extra square roots
//! of one (`(1 + x)^2 = 1` in `Z_2[x]/(x^2)`). [`is_involution_in_quotient`]
//! keeps the quotient-ring test available.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::limits::Limits;
use crate::ring::{cartesian, crt_combine, factor_involutions, factorize, ZMod};

/// Modulus `n` and truncation degree `d`. `d = 0` is plain `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRingSpec {
    pub n: u64,
    pub d: u32,
}

impl PolyRingSpec {
    /// Rejects `n < 2` and rings whose size `n^(d+1)` overflows 64 bits.
    pub fn new(n: u64, d: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!(
                "modulus must be at least 2, got {n}"
            )));
        }
        if n.checked_pow(d + 1).is_none() {
            return Err(Error::domain(format!(
                "ring size {n}^{} does not fit in 64 bits",
                d + 1
            )));
        }
        Ok(PolyRingSpec { n, d })
    }

    pub fn size(&self) -> u64 {
        self.n.pow(self.d + 1)
    }

    /// Number of coefficients, `d + 1`.
    pub fn coeff_count(&self) -> usize {
        self.d as usize + 1
    }

    pub fn zero(&self) -> TruncPoly {
        TruncPoly {
            modulus: self.n,
            coeffs: vec![0; self.coeff_count()],
        }
    }

    pub fn one(&self) -> TruncPoly {
        self.constant(1)
    }

    pub fn constant(&self, c: u64) -> TruncPoly {
        let mut p = self.zero();
        p.coeffs[0] = c % self.n;
        p
    }

    /// `x^i`, or zero when `i > d`.
    pub fn monomial(&self, i: usize) -> TruncPoly {
        let mut p = self.zero();
        if i < p.coeffs.len() {
            p.coeffs[i] = 1 % self.n;
        }
        p
    }

    pub fn poly(&self, coeffs: &[u64]) -> Result<TruncPoly> {
        if coeffs.len() > self.coeff_count() {
            return Err(Error::domain(format!(
                "{} coefficients given for truncation degree {}",
                coeffs.len(),
                self.d
            )));
        }
        let mut p = self.zero();
        for (slot, &c) in p.coeffs.iter_mut().zip(coeffs) {
            *slot = c % self.n;
        }
        Ok(p)
    }

    /// Element with canonical index `index`. Panics if out of range.
    pub fn element(&self, mut index: u64) -> TruncPoly {
        assert!(index < self.size(), "index {index} out of range");
        let mut p = self.zero();
        for c in p.coeffs.iter_mut() {
            *c = index % self.n;
            index /= self.n;
        }
        p
    }

    pub fn describe(&self) -> String {
        if self.d == 0 {
            format!("Z_{}", self.n)
        } else {
            format!("Z_{}[x] (deg <= {})", self.n, self.d)
        }
    }
}

impl fmt::Display for PolyRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Polynomial of degree at most `d` over `Z_n`; `coeffs[i]` is the
/// coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl TruncPoly {
    pub fn spec(&self) -> PolyRingSpec {
        PolyRingSpec {
            n: self.modulus,
            d: (self.coeffs.len() - 1) as u32,
        }
    }

    pub fn coeff(&self, i: usize) -> ZMod {
        ZMod::new(self.coeffs[i], self.modulus)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn index(&self) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.modulus + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 % self.modulus && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> TruncPoly {
        let n = self.modulus;
        TruncPoly {
            modulus: n,
            coeffs: self.coeffs.iter().map(|&c| (n - c) % n).collect(),
        }
    }

    /// Drop every coefficient above degree `d`.
    pub fn truncate(&self, d: u32) -> TruncPoly {
        let keep = (d as usize + 1).min(self.coeffs.len());
        TruncPoly {
            modulus: self.modulus,
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// `self^2` in the quotient ring (truncated at degree `d`).
    pub fn square(&self) -> TruncPoly {
        convolve(self.modulus, &self.coeffs, &self.coeffs)
    }

    /// Coefficients of `self^2` in `Z_n[x]`, degrees `0..=2d`.
    pub fn full_square(&self) -> Vec<u64> {
        let n = self.modulus as u128;
        let len = self.coeffs.len();
        let mut out = vec![0u128; 2 * len - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in self.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % n;
            }
        }
        out.into_iter().map(|c| c as u64).collect()
    }
}

/// Renders as `a0 + a1*x + a2*x^2`, omitting zero terms; zero renders `0`.
impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn check_same(f: &TruncPoly, g: &TruncPoly) -> Result<()> {
    if f.spec() != g.spec() {
        return Err(Error::domain(format!(
            "ring mismatch: {} vs {}",
            f.spec(),
            g.spec()
        )));
    }
    Ok(())
}

pub fn add(f: &TruncPoly, g: &TruncPoly) -> Result<TruncPoly> {
    check_same(f, g)?;
    let n = f.modulus;
    Ok(TruncPoly {
        modulus: n,
        coeffs: f
            .coeffs
            .iter()
            .zip(&g.coeffs)
            .map(|(&a, &b)| ((a as u128 + b as u128) % n as u128) as u64)
            .collect(),
    })
}

pub fn sub(f: &TruncPoly, g: &TruncPoly) -> Result<TruncPoly> {
    check_same(f, g)?;
    add(f, &g.neg())
}

/// Truncated product: `c_i = sum_{j+k=i} a_j b_k mod n` for `i <= d`.
pub fn mul(f: &TruncPoly, g: &TruncPoly) -> Result<TruncPoly> {
    check_same(f, g)?;
    Ok(convolve(f.modulus, &f.coeffs, &g.coeffs))
}

fn convolve(n: u64, a: &[u64], b: &[u64]) -> TruncPoly {
    let len = a.len();
    let m = n as u128;
    let coeffs = (0..len)
        .map(|i| {
            let s = (0..=i).fold(0u128, |acc, j| (acc + a[j] as u128 * b[i - j] as u128) % m);
            s as u64
        })
        .collect();
    TruncPoly { modulus: n, coeffs }
}

/// `f^2 = 1` in `Z_n[x]`, with no truncation of the square.
pub fn is_involution(f: &TruncPoly) -> bool {
    let sq = f.full_square();
    sq[0] == 1 % f.modulus && sq[1..].iter().all(|&c| c == 0)
}

/// `f^2 = 1` in the quotient ring `Z_n[x]/(x^(d+1))`.
pub fn is_involution_in_quotient(f: &TruncPoly) -> bool {
    f.square().is_one()
}

/// Involutions from the prime-power closed forms, recombined coefficientwise
/// by CRT and sorted by canonical index.
///
/// Per factor `q`: odd `q` gives the constants `1, q - 1`; `q = 2` gives `1`;
/// `q = 2^k` with `k >= 2` gives every `g` with `g_0` an involution of `Z_q`
/// and each higher `g_i` in `{0, q/2}`.
pub fn involutions_closed_form(spec: PolyRingSpec, limits: &Limits) -> Result<Vec<TruncPoly>> {
    check_cap("ring size", spec.size(), limits.vertex_cap)?;
    let f = factorize(spec.n)?;
    let moduli = f.prime_powers();
    let len = spec.coeff_count();

    let per_factor: Vec<Vec<Vec<u64>>> = factor_involutions(&f)
        .into_iter()
        .zip(&moduli)
        .map(|(consts, &q)| {
            let is_two_power = q % 2 == 0;
            if is_two_power && q >= 4 {
                let mut choices = vec![consts];
                choices.extend(std::iter::repeat_n(vec![0, q / 2], len - 1));
                cartesian(&choices)
            } else {
                consts
                    .into_iter()
                    .map(|c| {
                        let mut v = vec![0; len];
                        v[0] = c;
                        v
                    })
                    .collect()
            }
        })
        .collect();

    let mut out = Vec::new();
    for combo in cartesian(&per_factor) {
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let residues: Vec<ZMod> = combo
                .iter()
                .zip(&moduli)
                .map(|(g, &q)| ZMod::new(g[i], q))
                .collect();
            coeffs.push(crt_combine(&residues, &f)?.value());
        }
        out.push(TruncPoly {
            modulus: spec.n,
            coeffs,
        });
    }
    out.sort_by_key(TruncPoly::index);
    Ok(out)
}

/// Exhaustive search over all `n^(d+1)` elements for `f^2 = 1` in `Z_n[x]`.
pub fn involutions_bruteforce(spec: PolyRingSpec, limits: &Limits) -> Result<Vec<TruncPoly>> {
    scan(spec, limits, is_involution)
}

/// Exhaustive search for square roots of one in the quotient ring
/// `Z_n[x]/(x^(d+1))`.
pub fn involutions_bruteforce_quotient(
    spec: PolyRingSpec,
    limits: &Limits,
) -> Result<Vec<TruncPoly>> {
    scan(spec, limits, is_involution_in_quotient)
}

fn scan(
    spec: PolyRingSpec,
    limits: &Limits,
    keep: fn(&TruncPoly) -> bool,
) -> Result<Vec<TruncPoly>> {
    check_cap(
        "ring size for brute force",
        spec.size(),
        limits.brute_force_cap,
    )?;
    Ok((0..spec.size())
        .into_par_iter()
        .map(|i| spec.element(i))
        .filter(keep)
        .collect())
}

/// `2^t` for `r0 <= 1`, `2^(t+1+d)` for `r0 = 2`, `2^(t+2+d)` for `r0 >= 3`.
pub fn inv_count_formula(spec: PolyRingSpec) -> Result<u64> {
    let f = factorize(spec.n)?;
    let t = f.t() as u32;
    Ok(match f.r0 {
        0 | 1 => 1 << t,
        2 => 1 << (t + 1 + spec.d),
        _ => 1 << (t + 2 + spec.d),
    })
}
