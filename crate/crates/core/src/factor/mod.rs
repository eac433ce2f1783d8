//! Factorization and irreducibility testing over ℤ and ℚ.
//!
//! Zassenhaus: squarefree decomposition over ℤ, factorization modulo a small
//! prime, Hensel lifting past twice a bound on factor coefficients, then
//! recombination by subsets of increasing size.

mod hensel;
pub mod modp;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly, Rational};
pub use modp::{factor_mod_prime, is_prime_u64, ModPoly};
use modp::{seed_for, Fp};

/// How many good primes are inspected before committing to one.
const CANDIDATE_PRIMES: usize = 5;
/// Extra primes tried by the irreducibility filter.
const FILTER_PRIMES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Factorization {
    #[serde(with = "crate::poly::as_string")]
    pub unit: Rational,
    /// Primitive irreducible factors with positive leading coefficient and
    /// their multiplicities, sorted by degree then coefficients.
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    /// `unit · ∏ factor^multiplicity`.
    pub fn expand(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.unit.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.to_rat().pow(*m as u32);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.deg(), *m))
            .collect();
        d.sort_unstable();
        d
    }
}

pub fn factor_over_integers(f: &IntPoly) -> Result<Factorization> {
    factor_over_rationals(&f.to_rat())
}

pub fn factor_over_rationals(f: &RatPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("factorization"));
    }
    let (unit, prim) = f.primitive_split();
    let mut factors = Vec::new();
    if prim.deg() > 0 {
        for (part, mult) in squarefree_decomposition(&prim) {
            for g in factor_squarefree(&part) {
                factors.push((g, mult));
            }
        }
    }
    sort_factors(&mut factors);
    Ok(Factorization { unit, factors })
}

fn sort_factors(factors: &mut [(IntPoly, usize)]) {
    factors.sort_by(|(a, _), (b, _)| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
}

/// True iff the primitive integer form of `f` is irreducible over ℚ.
pub fn is_irreducible_over_rationals(f: &RatPoly) -> Result<bool> {
    if f.deg() < 1 {
        return Err(Error::ConstantPolynomial("irreducibility needs degree ≥ 1"));
    }
    Ok(is_irreducible_primitive(&f.primitive_split().1))
}

/// Irreducibility of a nonconstant primitive integer polynomial, with a
/// cheap degree-pattern filter in front of full factorization.
pub fn is_irreducible_primitive(f: &IntPoly) -> bool {
    let n = f.deg();
    if n <= 1 {
        return n == 1;
    }
    if f.coeff(0).is_zero() {
        return false;
    }
    match quick_irreducibility(f) {
        Some(answer) => answer,
        None => factor_over_integers(f).map(|fac| fac.is_irreducible()).unwrap_or(false),
    }
}

/// Decides irreducibility from factor-degree patterns modulo a few primes
/// when possible. `Some(true)` is a proof of irreducibility; `None` means
/// the filter could not decide.
pub(crate) fn quick_irreducibility(f: &IntPoly) -> Option<bool> {
    degree_pattern_test(f.deg(), |fp| fp.reduce(f))
}

/// The filter behind [`quick_irreducibility`], fed by a closure producing
/// the reduction mod `p` of a primitive polynomial of degree `n`. Callers
/// with a cheaper route to the residues than reducing big coefficients
/// (the search hot loop) plug it in here.
pub(crate) fn degree_pattern_test(n: usize, mut reduce: impl FnMut(Fp) -> Vec<u64>) -> Option<bool> {
    let mut allowed: Option<BTreeSet<usize>> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < FILTER_PRIMES && p < 2000 {
        p = next_prime(p);
        let fp = Fp { p };
        let red = reduce(fp);
        if red.len() != n + 1 {
            continue;
        }
        let monic = fp.monic(&red);
        if !fp.is_squarefree(&monic) {
            continue;
        }
        tried += 1;
        let degs = fp.factor_degrees(&monic);
        if degs.len() == 1 {
            return Some(true);
        }
        let sums = subset_sums(&degs, n);
        allowed = Some(match allowed {
            None => sums,
            Some(prev) => prev.intersection(&sums).copied().collect(),
        });
        if allowed.as_ref().is_some_and(|s| s.iter().all(|&d| d == 0 || d == n)) {
            return Some(true);
        }
    }
    None
}

pub(crate) fn subset_sums(degs: &[usize], n: usize) -> BTreeSet<usize> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
        .iter()
        .enumerate()
        .filter_map(|(i, &r)| r.then_some(i))
        .collect()
}

pub(crate) fn next_prime(p: u64) -> u64 {
    let mut q = p + 1;
    while !is_prime_u64(q) {
        q += 1;
    }
    q
}

/// Yun's squarefree decomposition of a primitive polynomial: pairs
/// `(part, multiplicity)` with primitive, pairwise coprime parts.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    if f.deg() == 0 {
        return Vec::new();
    }
    if is_squarefree(f) {
        return vec![(f.primitive_part(), 1)];
    }
    let fr = f.to_rat();
    let d = fr.derivative();
    let b = fr.gcd(&d);
    let mut c = fr.div_rem(&b).0;
    let mut dd = &d.div_rem(&b).0 - &c.derivative();
    let mut i = 1;
    let mut out = Vec::new();
    while c.deg() > 0 {
        let a = c.gcd(&dd);
        if a.deg() > 0 {
            out.push((a.primitive_split().1, i));
        }
        c = c.div_rem(&a).0;
        dd = &dd.div_rem(&a).0 - &c.derivative();
        i += 1;
    }
    out
}

fn is_squarefree(f: &IntPoly) -> bool {
    let mut p = 2u64;
    for _ in 0..10 {
        p = next_prime(p);
        let fp = Fp { p };
        let red = fp.reduce(f);
        if red.len() == f.coeffs().len() && fp.is_squarefree(&fp.monic(&red)) {
            return true;
        }
    }
    f.gcd(&f.derivative()).deg() == 0
}

/// Chooses the prime for Zassenhaus: among the first few primes `p ≥ 3` with
/// `p ∤ lc(f)` and `f mod p` squarefree, the one with fewest factors.
fn choose_prime(f: &IntPoly) -> (u64, Vec<u64>, usize) {
    let mut best: Option<(u64, Vec<u64>, usize)> = None;
    let mut seen = 0;
    let mut p = 2u64;
    while seen < CANDIDATE_PRIMES {
        p = next_prime(p);
        let fp = Fp { p };
        let red = fp.reduce(f);
        if red.len() != f.coeffs().len() {
            continue;
        }
        let monic = fp.monic(&red);
        if !fp.is_squarefree(&monic) {
            continue;
        }
        seen += 1;
        let r = fp.factor_degrees(&monic).len();
        if best.as_ref().is_none_or(|(_, _, br)| r < *br) {
            best = Some((p, monic, r));
        }
        if r == 1 {
            break;
        }
    }
    best.expect("squarefree polynomial has good primes")
}

/// Factors a primitive squarefree polynomial of positive degree into
/// primitive irreducibles with positive leading coefficients.
fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive_part();
    if f.deg() <= 1 {
        return vec![f];
    }
    if f.coeff(0).is_zero() {
        let q = f.div_exact(&IntPoly::x()).expect("x divides f");
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&q));
        return out;
    }
    let (p, monic, r) = choose_prime(&f);
    if r == 1 {
        return vec![f];
    }
    let fp = Fp { p };
    let modular = fp.factor_squarefree(&monic, seed_for(&monic, p));
    let bound = hensel::factor_coefficient_bound(&f) * 2;
    let k = hensel::lifting_exponent(p, &bound);
    let lifted = hensel::lift_factors(&f, &modular, p, k);
    let m = num_traits::pow(BigInt::from(p), k as usize);
    recombine(f, lifted, &m)
}

fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, m: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.lc();
        let f0 = f.coeff(0);
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let prod = subset
                .iter()
                .fold(IntPoly::constant(lc.clone()), |acc, &i| {
                    hensel::reduce_mod(&(&acc * &lifted[i]), m)
                });
            let cand = hensel::symmetric_mod(&prod, m);
            let c0 = cand.coeff(0);
            let plausible = !c0.is_zero() && (&lc * &f0 % &c0).is_zero();
            if plausible {
                let g = cand.primitive_part();
                if let Some(q) = f.div_exact(&g) {
                    found.push(g);
                    f = q;
                    for &i in subset.iter().rev() {
                        lifted.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_subset(&mut subset, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if f.deg() > 0 {
        found.push(f.primitive_part());
    }
    found
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
