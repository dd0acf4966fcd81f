use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{check_recurrence, invert_recurrence, series_reversion};
use crate::arith::{int, QPoly, QRat};
use crate::error::{Error, Result};

const MAX_DRAWS: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub k: usize,
    pub order: usize,
    pub degree: usize,
    pub coeff_bits: u64,
    pub seconds: f64,
}

fn dense(k: usize, bound: i64, rng: &mut ChaCha8Rng) -> QPoly {
    QPoly::new(
        (0..=k)
            .map(|_| {
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-bound..=bound);
                }
                int(c)
            })
            .collect(),
    )
}

/// `f_k = x P_k² / Q_k` with `P_k, Q_k` dense of degree `k`, coefficients
/// nonzero in `[−bound, bound]`, `P_k` square-free, `P_k(0) Q_k(0) ≠ 0` and
/// `gcd(x P_k², Q_k) = 1`.
pub fn draw_instance(k: usize, bound: i64, rng: &mut ChaCha8Rng) -> Result<QRat> {
    for _ in 0..MAX_DRAWS {
        let p = dense(k, bound, rng);
        let q = dense(k, bound, rng);
        if !p.gcd(&p.derivative()).is_constant() {
            continue;
        }
        let num = QPoly::x().mul(&p).mul(&p);
        if !num.gcd(&q).is_constant() {
            continue;
        }
        return Ok(QRat::new(num, q));
    }
    Err(Error::ReportDegenerate { k, attempts: MAX_DRAWS })
}

fn sub_seed(seed: u64, k: usize) -> u64 {
    seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn run_row(k: usize, seed: u64, bound: i64) -> Result<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, k));
    let f = draw_instance(k, bound, &mut rng)?;
    let start = Instant::now();
    let l = invert_recurrence(&f)?;
    let seconds = start.elapsed().as_secs_f64();
    let r = l.order().max(1);
    let u = series_reversion(&f, 5 * r + 1)?;
    if !check_recurrence(&u, &l, 1, 4 * r) {
        return Err(Error::VerificationFailed(format!("recurrence for k={k} does not match the series")));
    }
    Ok(BenchRow { k, order: l.order(), degree: l.degree(), coeff_bits: l.coeff_bits(), seconds })
}

/// One row per `k` in `kmin..=kmax`, each from its own deterministic
/// sub-seed.
pub fn bench_family(kmin: usize, kmax: usize, seed: u64, coeff_bound: i64) -> Result<Vec<BenchRow>> {
    if kmin < 1 || kmin > kmax {
        return Err(Error::Domain(format!("need 1 ≤ kmin ≤ kmax, got {kmin}..{kmax}")));
    }
    (kmin..=kmax).into_par_iter().map(|k| run_row(k, seed, coeff_bound)).collect()
}

/// CSV with header `k,order,degree,coeff_bits,seconds`.
pub fn write_csv<W: Write>(rows: &[BenchRow], w: W) -> std::io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for row in rows {
        out.serialize(row)?;
    }
    out.flush()
}
