//! Resumable sweeps over quadratic substitutions `g = (a·x² + b·x + c)/q`.
//!
//! Since `f(g(-x))` is the mirror of `f(g(x))`, only representatives with
//! `b ≤ 0` are scanned; each reported witness also stands for `g(-x)`.
//! Work is cut into slices, one per `(q, a)` pair, processed in parallel
//! and merged in slice order, so output never depends on the worker count.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_integer::Integer as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::constructions::SubstitutionWitness;
use crate::error::{Error, Result};
use crate::factor::modp::Fp;
use crate::factor::{factor_over_rationals, is_irreducible_primitive, next_prime, subset_sums};
use crate::poly::{IntPoly, RatPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Integer,
    Rational,
}

/// Coefficient box `|a|, |b|, |c| ≤ coeff` and denominators `1 ≤ q ≤ denom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub coeff: u64,
    pub denom: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchJob {
    pub target: RatPoly,
    pub mode: Mode,
    pub bounds: Bounds,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// JSON Lines file receiving one record per completed slice.
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many new slices (simulates an interruption).
    pub max_slices: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub target: RatPoly,
    pub mode: Mode,
    pub bounds: Bounds,
    pub witnesses: Vec<SubstitutionWitness>,
    pub exhausted: bool,
    /// Number of slices completed so far.
    pub checkpoint: u64,
    pub slices_total: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct CheckpointRecord {
    digest: String,
    target: RatPoly,
    mode: Mode,
    bounds: Bounds,
    completed: u64,
    witnesses: Vec<SubstitutionWitness>,
}

impl SearchJob {
    pub fn integer(target: &RatPoly, bound: u64) -> Result<Self> {
        Self::build(target, Mode::Integer, Bounds { coeff: bound, denom: 1 })
    }

    pub fn rational(target: &RatPoly, bound: u64, denom: u64) -> Result<Self> {
        Self::build(target, Mode::Rational, Bounds { coeff: bound, denom })
    }

    fn build(target: &RatPoly, mode: Mode, bounds: Bounds) -> Result<Self> {
        if target.deg() < 2 {
            return Err(Error::WrongDegree { expected: "≥ 2".into(), got: target.deg() });
        }
        if bounds.coeff == 0 || bounds.denom == 0 {
            return Err(Error::InvalidArgument("bounds must be positive".into()));
        }
        Ok(SearchJob { target: target.clone(), mode, bounds })
    }

    pub fn slice_count(&self) -> u64 {
        2 * self.bounds.coeff * self.bounds.denom
    }

    /// Hex sha256 of the canonical JSON of target, mode and bounds.
    pub fn digest(&self) -> String {
        let text = serde_json::to_string(self).expect("job serializes");
        Sha256::digest(text.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// `(q, a)` for slice `i`: `q` outer, `a` running over `[-B, B] \ {0}`.
    fn slice(&self, i: u64) -> (i64, i64) {
        let width = 2 * self.bounds.coeff;
        let q = (i / width) as i64 + 1;
        let j = (i % width) as i64;
        let b = self.bounds.coeff as i64;
        let a = if j < b { j - b } else { j - b + 1 };
        (q, a)
    }

    fn scan_slice(&self, i: u64) -> Vec<SubstitutionWitness> {
        let (q, a) = self.slice(i);
        let bound = self.bounds.coeff as i64;
        let f = self.target.primitive_split().1;
        let table = PrimeTable::new(&f);
        let mut out = Vec::new();
        for b in -bound..=0 {
            for c in -bound..=bound {
                if q > 1 && a.gcd(&b).gcd(&c).gcd(&q) != 1 {
                    continue;
                }
                if table.rules_out([c, b, a], q) {
                    continue;
                }
                if let Some(w) = self.exact_test([c, b, a], q) {
                    out.push(w);
                }
            }
        }
        out
    }

    fn exact_test(&self, g: [i64; 3], q: i64) -> Option<SubstitutionWitness> {
        let gq = RatPoly::new(g.iter().map(|&v| Rational::new(v.into(), q.into())).collect());
        let composed = self.target.compose(&gq);
        let fac = factor_over_rationals(&composed).ok()?;
        if fac.is_irreducible() {
            return None;
        }
        let divisor = &fac.factors[0].0;
        let w = SubstitutionWitness::from_divisor(&self.target, &gq, divisor)
            .expect("factorization divides the composition");
        Some(w)
    }
}

/// Residues of the target modulo a fixed list of small primes.
struct PrimeTable {
    degree: usize,
    irreducible: bool,
    rows: Vec<(Fp, Vec<u64>)>,
}

const TABLE_PRIMES: usize = 16;
const DECISIVE_PRIMES: usize = 8;

impl PrimeTable {
    fn new(f: &IntPoly) -> Self {
        let mut rows = Vec::with_capacity(TABLE_PRIMES);
        let mut p = 2;
        while rows.len() < TABLE_PRIMES {
            let fp = Fp { p };
            rows.push((fp, fp.reduce_full(f)));
            p = next_prime(p);
        }
        PrimeTable { degree: f.deg(), irreducible: is_irreducible_primitive(f), rows }
    }

    /// True when some prime proves `f(g/q)` irreducible. For irreducible
    /// `f` of degree `d`, every rational factor of `f(g)` has degree a
    /// multiple of `d` (Capelli), so it suffices to rule out a factor of
    /// degree exactly `d`. A reducible `f` makes every `f(g)` reducible.
    fn rules_out(&self, g: [i64; 3], q: i64) -> bool {
        if !self.irreducible {
            return false;
        }
        let n = 2 * self.degree;
        let mut tried = 0;
        for (fp, fr) in &self.rows {
            let red = composed_mod_p(*fp, fr, g, q);
            if red.len() != n + 1 {
                continue;
            }
            let monic = fp.monic(&red);
            if !fp.is_squarefree(&monic) {
                continue;
            }
            if !subset_sums(&fp.factor_degrees(&monic), n).contains(&self.degree) {
                return true;
            }
            tried += 1;
            if tried == DECISIVE_PRIMES {
                break;
            }
        }
        false
    }
}

/// `q^d · f(g/q) mod p`, by Horner in `F_p` from the residues of `f`.
fn composed_mod_p(fp: Fp, fr: &[u64], g: [i64; 3], q: i64) -> Vec<u64> {
    let p = fp.p as i64;
    let m = |v: i64| v.rem_euclid(p) as u64;
    let gp = [m(g[0]), m(g[1]), m(g[2])];
    let qp = m(q);
    let d = fr.len() - 1;
    let mut acc = vec![fr[d]];
    let mut qpow = 1u64;
    for i in (0..d).rev() {
        qpow = qpow * qp % fp.p;
        acc = fp.mul(&acc, &gp);
        acc = fp.add(&acc, &[fr[i] * qpow % fp.p]);
    }
    acc
}

impl SearchReport {
    fn start(job: &SearchJob) -> Self {
        SearchReport {
            target: job.target.clone(),
            mode: job.mode,
            bounds: job.bounds,
            witnesses: Vec::new(),
            exhausted: false,
            checkpoint: 0,
            slices_total: job.slice_count(),
        }
    }

    pub fn found(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

pub fn search_integer_witness(f: &RatPoly, bound: u64, opts: &SearchOptions) -> Result<SearchReport> {
    run(&SearchJob::integer(f, bound)?, opts)
}

pub fn search_rational_witness(
    f: &RatPoly,
    bound: u64,
    denom: u64,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    run(&SearchJob::rational(f, bound, denom)?, opts)
}

/// Runs a job from the beginning, truncating any checkpoint file.
pub fn run(job: &SearchJob, opts: &SearchOptions) -> Result<SearchReport> {
    if let Some(path) = &opts.checkpoint {
        File::create(path)?;
    }
    continue_from(job, SearchReport::start(job), opts)
}

/// Continues `job` from the last record of a checkpoint file. The stored
/// digest must match the job.
pub fn resume(path: &Path, job: &SearchJob, opts: &SearchOptions) -> Result<SearchReport> {
    let report = match last_record(path)? {
        None => SearchReport::start(job),
        Some(rec) => {
            if rec.digest != job.digest() {
                return Err(Error::CheckpointMismatch(format!(
                    "{} was written for a different target or bounds",
                    path.display()
                )));
            }
            SearchReport {
                witnesses: rec.witnesses,
                checkpoint: rec.completed,
                ..SearchReport::start(job)
            }
        }
    };
    let opts = SearchOptions { checkpoint: Some(path.to_path_buf()), ..opts.clone() };
    continue_from(job, report, &opts)
}

/// Reconstructs the job stored in a checkpoint file.
pub fn job_from_checkpoint(path: &Path) -> Result<SearchJob> {
    let rec = last_record(path)?
        .ok_or_else(|| Error::CheckpointMismatch(format!("{} has no records", path.display())))?;
    let job = SearchJob { target: rec.target, mode: rec.mode, bounds: rec.bounds };
    if job.digest() != rec.digest {
        return Err(Error::CheckpointMismatch("record digest does not match its contents".into()));
    }
    Ok(job)
}

fn last_record(path: &Path) -> Result<Option<CheckpointRecord>> {
    let file = File::open(path)?;
    let mut last = None;
    for line in BufReader::new(file).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        // a torn final line from a crash is ignored
        match serde_json::from_str::<CheckpointRecord>(&line) {
            Ok(rec) => last = Some(rec),
            Err(_) => break,
        }
    }
    Ok(last)
}

fn continue_from(job: &SearchJob, mut report: SearchReport, opts: &SearchOptions) -> Result<SearchReport> {
    let total = job.slice_count();
    let stop = match opts.max_slices {
        Some(m) => (report.checkpoint + m).min(total),
        None => total,
    };
    let pool = match opts.jobs {
        Some(n) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?,
        ),
        None => None,
    };
    let batch = pool
        .as_ref()
        .map_or_else(rayon::current_num_threads, |p| p.current_num_threads())
        .max(1) as u64
        * 2;
    let mut sink = match &opts.checkpoint {
        Some(path) => Some(OpenOptions::new().append(true).create(true).open(path)?),
        None => None,
    };
    let digest = job.digest();
    while report.checkpoint < stop {
        let end = (report.checkpoint + batch).min(stop);
        let range: Vec<u64> = (report.checkpoint..end).collect();
        let scan = || range.par_iter().map(|&i| job.scan_slice(i)).collect::<Vec<_>>();
        let results = match &pool {
            Some(p) => p.install(scan),
            None => scan(),
        };
        for found in results {
            report.witnesses.extend(found);
            report.checkpoint += 1;
            if let Some(file) = sink.as_mut() {
                let rec = CheckpointRecord {
                    digest: digest.clone(),
                    target: job.target.clone(),
                    mode: job.mode,
                    bounds: job.bounds,
                    completed: report.checkpoint,
                    witnesses: report.witnesses.clone(),
                };
                writeln!(file, "{}", serde_json::to_string(&rec)?)?;
            }
        }
        if let Some(file) = sink.as_mut() {
            file.flush()?;
        }
    }
    report.exhausted = report.checkpoint == total;
    for w in &report.witnesses {
        w.verify()?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn slices_cover_nonzero_a() {
        let job = SearchJob::rational(&rp(&[1, 0, 1]), 2, 2).unwrap();
        let got: Vec<_> = (0..job.slice_count()).map(|i| job.slice(i)).collect();
        assert_eq!(got, vec![(1, -2), (1, -1), (1, 1), (1, 2), (2, -2), (2, -1), (2, 1), (2, 2)]);
    }

    #[test]
    fn modular_composition_matches_exact() {
        let f = IntPoly::from_i64s(&[3, 2, 1, 0, 1]);
        let g = RatPoly::new(vec![rat(-3, 2), rat(-1, 2), rat(-1, 2)]);
        let exact = f.to_rat().compose(&g).scale(&rat(16, 1)).to_int().unwrap();
        let fp = Fp { p: 13 };
        let fr = fp.reduce_full(&f);
        assert_eq!(composed_mod_p(fp, &fr, [-3, -1, -1], 2), fp.reduce(&exact));
    }

    #[test]
    fn rational_example() {
        let r = search_rational_witness(&rp(&[3, 2, 1, 0, 1]), 3, 2, &SearchOptions::default()).unwrap();
        assert!(r.exhausted);
        let gs: Vec<_> = r.witnesses.iter().map(|w| w.substitution.clone()).collect();
        assert_eq!(gs, vec![RatPoly::new(vec![rat(-3, 2), rat(-1, 2), rat(-1, 2)])]);
    }

    #[test]
    fn integer_cubic_example() {
        let r = search_integer_witness(&rp(&[1, 2, 0, 1]), 2, &SearchOptions::default()).unwrap();
        assert!(r.witnesses.iter().any(|w| w.substitution == rp(&[0, -2, -1])));
    }

    #[test]
    fn x4_plus_1_has_none() {
        let r = search_integer_witness(&rp(&[1, 0, 0, 0, 1]), 6, &SearchOptions::default()).unwrap();
        assert!(r.exhausted && !r.found());
    }

    #[test]
    fn interrupted_and_resumed_matches() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.jsonl");
        let job = SearchJob::integer(&rp(&[1, 2, 0, 1]), 3).unwrap();
        let full = run(&job, &SearchOptions::default()).unwrap();

        let opts = SearchOptions { checkpoint: Some(path.clone()), max_slices: Some(3), jobs: Some(2) };
        let part = run(&job, &opts).unwrap();
        assert!(!part.exhausted);
        assert_eq!(part.checkpoint, 3);
        let rest = resume(&path, &job, &SearchOptions::default()).unwrap();
        assert_eq!(serde_json::to_string(&rest).unwrap(), serde_json::to_string(&full).unwrap());

        let again = resume(&path, &job, &SearchOptions::default()).unwrap();
        assert_eq!(again, full);
        assert_eq!(job_from_checkpoint(&path).unwrap(), job);

        let other = SearchJob::integer(&rp(&[1, 2, 0, 1]), 4).unwrap();
        assert!(matches!(resume(&path, &other, &SearchOptions::default()), Err(Error::CheckpointMismatch(_))));
    }

    #[test]
    fn worker_count_does_not_matter() {
        let job = SearchJob::rational(&rp(&[1, 2, 0, 1]), 2, 2).unwrap();
        let one = run(&job, &SearchOptions { jobs: Some(1), ..Default::default() }).unwrap();
        let four = run(&job, &SearchOptions { jobs: Some(4), ..Default::default() }).unwrap();
        assert_eq!(one, four);
    }
}
