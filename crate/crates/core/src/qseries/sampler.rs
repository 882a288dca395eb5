//! Seeded sampling of admissible identity instances over exact rationals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

use super::identities::{sides, verify_identity, IdentityId, TransformInstance};
use crate::arith::rational::rat;
use crate::arith::BigRat;
use crate::error::{Error, Result};

const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
const RETRIES: usize = 20;

/// Draws small fractions whose denominators are pairwise distinct primes.
pub struct Pool {
    rng: ChaCha8Rng,
    primes: Vec<i64>,
}

impl Pool {
    pub fn new(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut primes = PRIMES.to_vec();
        primes.shuffle(&mut rng);
        Pool { rng, primes }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A fraction `±k/p` with a fresh prime `p` and `p ∤ k`.
    pub fn fraction(&mut self) -> BigRat {
        let p = self.primes.pop().unwrap_or_else(|| PRIMES[self.rng.gen_range(0..PRIMES.len())]);
        let mut k: i64 = self.rng.gen_range(1..=3 * p);
        if k % p == 0 {
            k += 1;
        }
        if self.rng.gen_bool(0.2) {
            k = -k;
        }
        rat(k, p)
    }
}

/// One admissible instance of `id`; `length` fixes `n`/`θ` when given.
pub fn sample_instance(id: IdentityId, pool: &mut Pool, length: Option<i64>) -> TransformInstance<BigRat> {
    let mut inst = TransformInstance::new(id).with("q", pool.fraction());
    for name in id.free_values() {
        inst = inst.with(name, pool.fraction());
    }
    if id == IdentityId::NsLemma {
        let keep = pool.rng().gen_range(0..=2);
        for i in (keep + 1)..=2 {
            inst.values.remove(&format!("b{i}"));
        }
    }
    let top = if id.length_name() == "theta" { 5 } else { 4 };
    let len = length.unwrap_or_else(|| pool.rng().gen_range(0..=top));
    inst.with_int(id.length_name(), len)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub params: BTreeMap<String, String>,
    pub residual_is_zero: bool,
    pub sample_seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Samples and checks one instance, resampling on poles.
pub fn check_sampled(id: IdentityId, seed: u64, length: Option<i64>) -> IdentityReport {
    check_sampled_with(id, seed, length, false)
}

/// As [`check_sampled`]; with `corrupt`, the right side is shifted by one
/// before comparison.
pub fn check_sampled_with(id: IdentityId, seed: u64, length: Option<i64>, corrupt: bool) -> IdentityReport {
    let mut pool = Pool::new(seed);
    let mut last = None;
    for _ in 0..RETRIES {
        let inst = sample_instance(id, &mut pool, length);
        let residual = if corrupt {
            sides(&inst).map(|(l, r)| l - r - rat(1, 1))
        } else {
            verify_identity(&inst)
        };
        match residual {
            Ok(r) => {
                return IdentityReport {
                    identity_id: id,
                    params: inst.params_text(),
                    residual_is_zero: num_traits::Zero::is_zero(&r),
                    sample_seed: seed,
                    error: None,
                }
            }
            Err(e) if e.is_pole() => {
                last = Some((inst, e));
                pool = Pool::new(pool.rng().gen());
            }
            Err(e) => return failed(id, seed, inst.params_text(), e),
        }
    }
    let (inst, e) = last.expect("at least one attempt");
    failed(id, seed, inst.params_text(), e)
}

fn failed(id: IdentityId, seed: u64, params: BTreeMap<String, String>, e: Error) -> IdentityReport {
    IdentityReport { identity_id: id, params, residual_is_zero: false, sample_seed: seed, error: Some(e.to_string()) }
}

/// `count` seeded instances of each identity, checked in parallel.
pub fn run_identity_suite(ids: &[IdentityId], seed: u64, count: usize) -> Vec<IdentityReport> {
    run_identity_suite_with(ids, seed, count, &[])
}

/// As [`run_identity_suite`], corrupting the right side of the listed identities.
pub fn run_identity_suite_with(ids: &[IdentityId], seed: u64, count: usize, corrupt: &[IdentityId]) -> Vec<IdentityReport> {
    let jobs: Vec<(IdentityId, u64)> = ids
        .iter()
        .flat_map(|&id| (0..count as u64).map(move |k| (id, seed.wrapping_mul(1_000_003).wrapping_add(k))))
        .collect();
    jobs.into_par_iter().map(|(id, s)| check_sampled_with(id, s, None, corrupt.contains(&id))).collect()
}

/// Fails with the first report whose residual is not zero.
pub fn all_zero(reports: &[IdentityReport]) -> Result<()> {
    match reports.iter().find(|r| !r.residual_is_zero) {
        None => Ok(()),
        Some(r) => Err(Error::Usage(format!("{} failed at seed {}", r.identity_id, r.sample_seed))),
    }
}
