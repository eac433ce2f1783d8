//! Independent oracles used by the integration tests. Nothing here calls
//! into the library's resultant or factorization code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superirred::IntPoly;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random integer polynomial of exact degree `deg` with coefficients in
/// `[-c, c]`.
pub fn random_poly<R: Rng>(rng: &mut R, deg: usize, c: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-c..=c)).collect();
    while v[deg] == 0 {
        v[deg] = rng.gen_range(-c..=c);
    }
    v
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant as the determinant of the Sylvester matrix. Coefficients are
/// given low degree first.
pub fn sylvester_resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)` via the Sylvester oracle.
pub fn discriminant_oracle(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let r = sylvester_resultant(f, &df);
    let r = r / &f[n];
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Homogeneous evaluation `Σ f_i p^i q^{n-i}`.
fn homogeneous(f: &[i128], p: i128, q: i128) -> i128 {
    let n = f.len() - 1;
    let mut acc = 0i128;
    for (i, &c) in f.iter().enumerate() {
        acc += c * p.pow(i as u32) * q.pow((n - i) as u32);
    }
    acc
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

fn content(f: &[i128]) -> i128 {
    f.iter().fold(0i128, |g, &c| num_integer::gcd(g, c))
}

/// Exact division of `f` by `d` over ℤ, if it divides.
fn divide(f: &[i128], d: &[i128]) -> Option<Vec<i128>> {
    let mut r = f.to_vec();
    let dn = d.len() - 1;
    if f.len() < d.len() {
        return None;
    }
    let mut q = vec![0i128; f.len() - dn];
    for i in (0..q.len()).rev() {
        let lead = r[i + dn];
        if lead % d[dn] != 0 {
            return None;
        }
        let c = lead / d[dn];
        q[i] = c;
        for (j, &dj) in d.iter().enumerate() {
            r[i + j] -= c * dj;
        }
    }
    r.iter().all(|&c| c == 0).then_some(q)
}

fn trim(mut f: Vec<i128>) -> Vec<i128> {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

fn rational_root_factor(f: &[i128]) -> Option<Vec<i128>> {
    let n = f.len() - 1;
    if f[0] == 0 {
        return Some(vec![0, 1]);
    }
    for p in divisors(f[0]) {
        for q in divisors(f[n]) {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            for s in [p, -p] {
                if homogeneous(f, s, q) == 0 {
                    return Some(vec![-s, q]);
                }
            }
        }
    }
    None
}

fn quadratic_factor(f: &[i128]) -> Option<Vec<i128>> {
    let n = f.len() - 1;
    let bound = 1 + f[..n].iter().map(|c| c.abs()).max().unwrap_or(0) / f[n].abs() + 1;
    for b2 in divisors(f[n]) {
        for b0a in divisors(f[0]) {
            for b0 in [b0a, -b0a] {
                let lim = 2 * bound * b2;
                for b1 in -lim..=lim {
                    let d = [b0, b1, b2];
                    if divide(f, &d).is_some() {
                        return Some(d.to_vec());
                    }
                }
            }
        }
    }
    None
}

/// Sorted degrees (with multiplicity) of the irreducible factors over ℚ of
/// a nonzero integer polynomial of degree ≤ 4, by rational roots and a
/// bounded search for quadratic factors.
pub fn naive_factor_degrees(f: &[i64]) -> Vec<usize> {
    let f: Vec<i128> = trim(f.iter().map(|&c| c as i128).collect());
    assert!(f.len() <= 5, "oracle handles degree ≤ 4");
    let c = content(&f);
    let f: Vec<i128> = f.iter().map(|&v| v / c).collect();
    let mut out = Vec::new();
    let mut stack = vec![f];
    while let Some(g) = stack.pop() {
        let n = g.len() - 1;
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(1);
            continue;
        }
        if let Some(d) = rational_root_factor(&g) {
            let q = divide(&g, &d).expect("root factor divides");
            out.push(1);
            stack.push(q);
            continue;
        }
        if n == 4 {
            if let Some(d) = quadratic_factor(&g) {
                let q = divide(&g, &d).expect("quadratic factor divides");
                stack.push(d);
                stack.push(q);
                continue;
            }
        }
        out.push(n);
    }
    out.sort_unstable();
    out
}

pub fn int_poly(v: &[i64]) -> IntPoly {
    IntPoly::from_i64s(v)
}
