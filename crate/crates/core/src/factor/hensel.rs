//! Multifactor Hensel lifting from `F_p` to `ℤ/p^kℤ`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed};

use super::modp::Fp;
use crate::poly::IntPoly;

/// Reduces every coefficient into `[0, m)`.
pub(crate) fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    f.map(|c| c.mod_floor(m))
}

/// Reduces every coefficient into `(-m/2, m/2]`.
pub(crate) fn symmetric_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    f.map(|c| {
        let r = c.mod_floor(m);
        if r > half {
            r - m
        } else {
            r
        }
    })
}

pub(crate) fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible");
    e.x.mod_floor(m)
}

fn lift_u64(v: &[u64]) -> IntPoly {
    IntPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
}

/// Given primitive `f` and the monic irreducible factors of `f mod p`
/// (pairwise coprime, `p ∤ lc(f)`), returns monic `u_i` with
/// `f ≡ lc(f) · ∏ u_i (mod p^k)`.
pub(crate) fn lift_factors(f: &IntPoly, factors: &[Vec<u64>], p: u64, k: u32) -> Vec<IntPoly> {
    let m = num_traits::pow(BigInt::from(p), k as usize);
    let inv = inverse_mod(&f.lc(), &m);
    let target = reduce_mod(&f.scale(&inv), &m);
    let mut out = Vec::with_capacity(factors.len());
    lift_rec(&target, factors, p, k, &m, &mut out);
    out
}

fn lift_rec(target: &IntPoly, facs: &[Vec<u64>], p: u64, k: u32, m: &BigInt, out: &mut Vec<IntPoly>) {
    if facs.len() == 1 {
        out.push(target.clone());
        return;
    }
    let fp = Fp { p };
    let mid = facs.len() / 2;
    let (left, right) = facs.split_at(mid);
    let g0 = left.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
    let h0 = right.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
    let (g, h) = lift_pair(target, &g0, &h0, p, k, m);
    lift_rec(&g, left, p, k, m, out);
    lift_rec(&h, right, p, k, m, out);
}

/// Linear Hensel lifting of a coprime monic split `target ≡ g0·h0 (mod p)`.
fn lift_pair(
    target: &IntPoly,
    g0: &[u64],
    h0: &[u64],
    p: u64,
    k: u32,
    m: &BigInt,
) -> (IntPoly, IntPoly) {
    let fp = Fp { p };
    let (one, s, t) = fp.xgcd(g0, h0);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut g = lift_u64(g0);
    let mut h = lift_u64(h0);
    let mut q = pb.clone();
    for _ in 1..k {
        let diff = target - &(&g * &h);
        if diff.is_zero() {
            break;
        }
        let e = IntPoly::new(diff.coeffs().iter().map(|c| c / &q).collect());
        let e = fp.reduce(&e);
        let dg = fp.rem(&fp.mul(&t, &e), g0);
        let dh = fp.rem(&fp.mul(&s, &e), h0);
        g = &g + &lift_u64(&dg).scale(&q);
        h = &h + &lift_u64(&dh).scale(&q);
        q *= &pb;
    }
    (reduce_mod(&g, m), reduce_mod(&h, m))
}

/// Smallest `k` with `p^k > bound`.
pub(crate) fn lifting_exponent(p: u64, bound: &BigInt) -> u32 {
    let pb = BigInt::from(p);
    let mut acc = BigInt::one();
    let mut k = 0;
    while &acc <= bound {
        acc *= &pb;
        k += 1;
    }
    k.max(1)
}

/// Bound on the coefficients of `lc(f) · h` for any factor `h` of `f`:
/// `|lc| · 2^n · ceil(‖f‖₂)`.
pub(crate) fn factor_coefficient_bound(f: &IntPoly) -> BigInt {
    let sumsq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let mut norm = sumsq.sqrt();
    if &norm * &norm < sumsq {
        norm += 1;
    }
    f.lc().abs() * (BigInt::one() << f.deg()) * norm
}
