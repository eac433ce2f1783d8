//! Polynomials over the prime field with `p` elements, `p < 2^32`.
//!
//! Coefficients are plain `u64` residues, low degree first, trimmed. The
//! factorization routine is Cantor–Zassenhaus: squarefree decomposition,
//! distinct-degree splitting, then randomized equal-degree splitting seeded
//! from a digest of the input so every run produces the same factors.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// A polynomial over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (mod {})", self.p)
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn deg(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Field operations on coefficient vectors for a fixed prime.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn reduce(&self, f: &IntPoly) -> Vec<u64> {
        let p = num_bigint::BigInt::from(self.p);
        trim(
            f.coeffs()
                .iter()
                .map(|c| {
                    let r = ((c % &p) + &p) % &p;
                    u64::try_from(r).expect("residue fits")
                })
                .collect(),
        )
    }

    /// Residues of every coefficient, without trimming a vanishing top.
    pub fn reduce_full(&self, f: &IntPoly) -> Vec<u64> {
        let p = num_bigint::BigInt::from(self.p);
        f.coeffs()
            .iter()
            .map(|c| u64::try_from(((c % &p) + &p) % &p).expect("residue fits"))
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Vec<u64> {
        trim(a.iter().map(|&x| x * c % self.p).collect())
    }

    pub fn monic(&self, a: &[u64]) -> Vec<u64> {
        match a.last() {
            Some(&lc) => self.scale(a, inv_mod(lc, self.p)),
            None => Vec::new(),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let db = deg(b);
        let inv = inv_mod(*b.last().unwrap(), self.p);
        let mut rem = a.to_vec();
        let mut quot = vec![0u64; a.len() - db];
        for i in (0..quot.len()).rev() {
            let q = rem[i + db] * inv % self.p;
            if q == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                rem[i + j] = (rem[i + j] + self.p - q * bc % self.p) % self.p;
            }
            quot[i] = q;
        }
        (trim(quot), trim(rem))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn xgcd(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = inv_mod(*r0.last().expect("nonzero gcd"), self.p);
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> Vec<u64> {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
                .collect(),
        )
    }

    pub fn mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = self.rem(&[1], m);
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(&acc, &b, m);
            }
            e >>= 1;
            if e > 0 {
                b = self.mulmod(&b, &b, m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && deg(&self.gcd(a, &d)) == 0
    }

    fn pth_root(&self, a: &[u64]) -> Vec<u64> {
        let p = self.p as usize;
        trim(a.iter().step_by(p).copied().collect())
    }

    /// Squarefree decomposition of a monic polynomial.
    pub fn squarefree(&self, f: &[u64]) -> Vec<(Vec<u64>, usize)> {
        let mut out = Vec::new();
        if deg(f) == 0 {
            return out;
        }
        let d = self.derivative(f);
        if d.is_empty() {
            for (g, m) in self.squarefree(&self.pth_root(f)) {
                out.push((g, m * self.p as usize));
            }
            return out;
        }
        let mut c = self.gcd(f, &d);
        let mut w = self.divrem(f, &c).0;
        let mut i = 1;
        while deg(&w) > 0 {
            let y = self.gcd(&w, &c);
            let z = self.divrem(&w, &y).0;
            if deg(&z) > 0 {
                out.push((self.monic(&z), i));
            }
            i += 1;
            c = self.divrem(&c, &y).0;
            w = y;
        }
        if deg(&c) > 0 {
            for (g, m) in self.squarefree(&self.pth_root(&c)) {
                out.push((g, m * self.p as usize));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(Vec<u64>, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = self.rem(&x, &rest);
        let mut d = 0;
        while deg(&rest) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, self.p, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if deg(&g) > 0 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        if deg(&rest) > 0 {
            let dr = deg(&rest);
            out.push((rest, dr));
        }
        out
    }

    /// Degrees of the irreducible factors of a monic squarefree polynomial.
    pub fn factor_degrees(&self, f: &[u64]) -> Vec<usize> {
        let mut degs = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            degs.extend(std::iter::repeat_n(d, deg(&g) / d));
        }
        degs.sort_unstable();
        degs
    }

    /// Splits a monic squarefree product of degree-`d` irreducibles.
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<Vec<u64>> {
        if deg(f) == d {
            return vec![f.to_vec()];
        }
        loop {
            let a: Vec<u64> = trim((0..deg(f)).map(|_| rng.gen_range(0..self.p)).collect());
            if deg(&a) == 0 {
                continue;
            }
            let g = self.gcd(&a, f);
            let candidate = if deg(&g) > 0 {
                g
            } else {
                let b = if self.p == 2 {
                    // trace map a + a^2 + ... + a^(2^(d-1))
                    let mut t = a.clone();
                    let mut acc = a.clone();
                    for _ in 1..d {
                        t = self.mulmod(&t, &t, f);
                        acc = self.add(&acc, &t);
                    }
                    acc
                } else {
                    // a^((p^d - 1)/2) = (a · a^p · ... · a^(p^(d-1)))^((p - 1)/2)
                    let mut t = self.rem(&a, f);
                    let mut prod = t.clone();
                    for _ in 1..d {
                        t = self.powmod(&t, self.p, f);
                        prod = self.mulmod(&prod, &t, f);
                    }
                    let e = self.powmod(&prod, (self.p - 1) / 2, f);
                    self.sub(&e, &[1])
                };
                self.gcd(&b, f)
            };
            if deg(&candidate) > 0 && deg(&candidate) < deg(f) {
                let other = self.divrem(f, &candidate).0;
                let mut out = self.equal_degree(&candidate, d, rng);
                out.extend(self.equal_degree(&self.monic(&other), d, rng));
                return out;
            }
        }
    }

    /// Complete monic factorization of a monic squarefree polynomial.
    pub fn factor_squarefree(&self, f: &[u64], seed: [u8; 32]) -> Vec<Vec<u64>> {
        let mut rng = ChaCha8Rng::from_seed(seed);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, &mut rng));
        }
        out.sort();
        out.sort_by_key(|g| g.len());
        out
    }
}

pub(crate) fn seed_for(coeffs: &[u64], p: u64) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(p.to_le_bytes());
    for c in coeffs {
        h.update(c.to_le_bytes());
    }
    let digest = h.finalize();
    let mut seed = [0u8; 32];
    seed.copy_from_slice(&digest);
    seed
}

/// Complete factorization of `f` over `F_p`: a list of monic irreducible
/// factors with multiplicities, sorted by degree then coefficients. The
/// leading coefficient of `f` mod `p` is dropped.
pub fn factor_mod_prime(f: &IntPoly, p: u64) -> Result<Vec<(ModPoly, usize)>> {
    if !is_prime_u64(p) || p >= (1 << 32) {
        return Err(Error::NotPrime(p));
    }
    let fp = Fp { p };
    let red = fp.reduce(f);
    if red.len() != f.coeffs().len() || red.is_empty() {
        return Err(Error::BadPrime { p });
    }
    let monic = fp.monic(&red);
    let seed = seed_for(&monic, p);
    let mut out = Vec::new();
    for (g, m) in fp.squarefree(&monic) {
        for h in fp.factor_squarefree(&g, seed) {
            out.push((ModPoly { p, coeffs: h }, m));
        }
    }
    out.sort_by(|a, b| {
        (a.0.coeffs.len(), &a.0.coeffs, a.1).cmp(&(b.0.coeffs.len(), &b.0.coeffs, b.1))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn x2_plus_1_mod_5_splits() {
        let f = factor_mod_prime(&ip(&[1, 0, 1]), 5).unwrap();
        let coeffs: Vec<_> = f.iter().map(|(g, m)| (g.coeffs.clone(), *m)).collect();
        // x + 2 and x + 3
        assert_eq!(coeffs, vec![(vec![2, 1], 1), (vec![3, 1], 1)]);
    }

    #[test]
    fn x2_plus_1_mod_3_irreducible() {
        let f = factor_mod_prime(&ip(&[1, 0, 1]), 3).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].0.coeffs, vec![1, 0, 1]);
    }

    #[test]
    fn x_squared_mod_2_repeated() {
        let f = factor_mod_prime(&ip(&[0, 0, 1]), 2).unwrap();
        assert_eq!(f, vec![(ModPoly { p: 2, coeffs: vec![0, 1] }, 2)]);
    }

    #[test]
    fn lc_divisible_rejected() {
        assert_eq!(factor_mod_prime(&ip(&[1, 0, 3]), 3), Err(Error::BadPrime { p: 3 }));
        assert_eq!(factor_mod_prime(&ip(&[1, 1]), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn mod2_equal_degree_split() {
        // (x^2+x+1)(x^3+x+1)(x^3+x^2+1) over F_2
        let fp = Fp { p: 2 };
        let f = fp.mul(&fp.mul(&[1, 1, 1], &[1, 1, 0, 1]), &[1, 0, 1, 1]);
        let got = factor_mod_prime(&ip(&f.iter().map(|&c| c as i64).collect::<Vec<_>>()), 2).unwrap();
        let degs: Vec<_> = got.iter().map(|(g, _)| g.degree()).collect();
        assert_eq!(degs, vec![2, 3, 3]);
    }

    #[test]
    fn product_of_factors_reconstructs() {
        let f = ip(&[6, -5, 3, 0, 7, 2, 1]);
        for p in [3u64, 5, 7, 11, 13] {
            let fp = Fp { p };
            let facs = factor_mod_prime(&f, p).unwrap();
            let mut prod = vec![1u64];
            for (g, m) in &facs {
                for _ in 0..*m {
                    prod = fp.mul(&prod, &g.coeffs);
                }
            }
            assert_eq!(prod, fp.monic(&fp.reduce(&f)), "p = {p}");
        }
    }
}
