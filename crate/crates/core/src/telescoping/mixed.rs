use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::{clear_column, clear_operator, kernel_vector, modular_rank, primitive_vector, Cleared};
use super::term::HyperTerm;
use crate::arith::modp::primes;
use crate::arith::cleared::xrat_from_cleared;
use crate::arith::{lift, ClearedPoly, Field, NRat, QPoly, ShiftN, XPoly, XRat, ZPoly};
use crate::error::Result;
use crate::reduction::{confinement, HermiteContext};

/// `L = S_n^r − Σ c_i S_n^i`, also kept as the primitive polynomial vector
/// `(ĉ_0, …, ĉ_r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Telescoper {
    coeffs: Vec<NRat>,
    cleared: Vec<ZPoly>,
}

impl Telescoper {
    /// `L = 1`.
    pub fn identity() -> Self {
        Telescoper { coeffs: vec![], cleared: vec![ZPoly::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<NRat>) -> Self {
        let cleared = clear_operator(&coeffs);
        Telescoper { coeffs, cleared }
    }

    /// From any nonzero polynomial multiple of the operator; the top entry
    /// must be nonzero.
    pub fn from_cleared(v: Vec<ZPoly>) -> Self {
        let r = v.len() - 1;
        assert!(!v[r].is_zero(), "leading coefficient must be nonzero");
        let lead = NRat::from_zpoly(v[r].clone()).inv();
        let coeffs = v[..r].iter().map(|c| NRat::from_zpoly(c.clone()).mul(&lead).neg()).collect();
        Telescoper::from_coeffs(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_0, …, c_{r−1}`.
    pub fn coeffs(&self) -> &[NRat] {
        &self.coeffs
    }

    pub fn cleared(&self) -> &[ZPoly] {
        &self.cleared
    }

    pub fn degree(&self) -> usize {
        self.cleared.iter().map(ZPoly::deg0).max().unwrap_or(0)
    }

    /// Largest bit size among the cleared integer coefficients.
    pub fn coeff_bits(&self) -> u64 {
        self.cleared.iter().map(ZPoly::max_bits).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub q: XRat,
}

/// Confined remainders `R_i` and, when certificates are on, the data of
/// `W_i` with `F_{n+i} = R_i Φ_n + (W_i Φ_n)'`.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub remainders: Vec<XPoly>,
    /// `W_i = M_i / g^i`, `g = den(H)`.
    step_numerators: Vec<ClearedPoly>,
    g: QPoly,
}

impl ReductionTrace {
    pub fn has_certificates(&self) -> bool {
        !self.step_numerators.is_empty()
    }

    /// `W_i` in canonical form.
    pub fn certificate(&self, i: usize) -> Option<XRat> {
        let m = self.step_numerators.get(i)?;
        Some(xrat_from_cleared(m, &self.g.pow(i as u32), &radical(&self.g)))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MixedCtOptions {
    pub certificate: bool,
    pub dichotomic: bool,
    pub seed: u64,
}

impl Default for MixedCtOptions {
    fn default() -> Self {
        MixedCtOptions { certificate: true, dichotomic: false, seed: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct MixedCtOutput {
    pub telescoper: Telescoper,
    pub certificate: Option<Certificate>,
    pub trace: ReductionTrace,
}

struct Driver<'a> {
    t: &'a HyperTerm,
    herm: HermiteContext,
    b: XPoly,
    bc: ClearedPoly,
    g: ClearedPoly,
    hn: ClearedPoly,
    m: usize,
    with_cert: bool,
    rs: Vec<XPoly>,
    /// `W_i = M_i / g^i`
    ms: Vec<ClearedPoly>,
    g_pows: Vec<ClearedPoly>,
    cols: Vec<Cleared>,
}

impl<'a> Driver<'a> {
    fn new(t: &'a HyperTerm, with_cert: bool) -> Result<Self> {
        let herm = HermiteContext::new(t.h(), t.st())?;
        let b = lift(t.b());
        let (r0, q0) = confinement(t.p(), t.a(), &b)?;
        let m = t.delta().max(0) as usize;
        let mut d = Driver {
            t,
            g: ClearedPoly::from_qpoly(herm.h_den()),
            hn: ClearedPoly::from_qpoly(herm.h_num()),
            bc: ClearedPoly::from_qpoly(t.b()),
            herm,
            b,
            m,
            with_cert,
            rs: vec![],
            ms: vec![],
            g_pows: vec![ClearedPoly::one()],
            cols: vec![],
        };
        let m0 = if with_cert { ClearedPoly::from_xpoly(&q0).mul(&d.bc) } else { ClearedPoly::zero() };
        d.push(r0, m0);
        Ok(d)
    }

    fn push(&mut self, r: XPoly, m: ClearedPoly) {
        self.cols.push(clear_column(&r, self.m));
        self.rs.push(r);
        self.ms.push(m);
    }

    /// `R_{k+1} = Conf(Herm(R_k)(n+1))`.
    fn step(&mut self) -> Result<()> {
        let k = self.rs.len() - 1;
        let (rh, nh) = self.herm.reduce(&self.rs[k])?;
        let (rc, qc) = confinement(&rh.shift_n(1), self.t.a(), &self.b)?;
        let m_next = if self.with_cert {
            while self.g_pows.len() <= k + 1 {
                let next = self.g_pows.last().unwrap().mul(&self.g);
                self.g_pows.push(next);
            }
            let carried = ClearedPoly::from_xpoly(&nh)
                .mul(&self.g_pows[k])
                .add(&self.hn.mul(&self.ms[k]))
                .shift_n(1);
            ClearedPoly::from_xpoly(&qc).mul(&self.bc).mul(&self.g_pows[k + 1]).add(&carried)
        } else {
            ClearedPoly::zero()
        };
        self.push(rc, m_next);
        Ok(())
    }

    /// Dependency among the first `k+1` remainders, if any.
    fn dependency(&self, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<ZPoly>> {
        let cols = &self.cols[..=k];
        if k == 0 {
            return self.rs[0].is_zero().then(|| vec![ZPoly::one()]);
        }
        if k + 1 <= self.m {
            let ps = primes();
            for _ in 0..2 {
                let p = ps[rng.gen_range(0..ps.len())];
                if modular_rank(cols, p, rng.gen_range(0..p)) == k + 1 {
                    return None;
                }
            }
        }
        kernel_vector(cols, rng)
    }

    /// `Q = W_r − Σ c_i W_i = (Σ ĉ_i M_i g^{r−i}) / (ĉ_r g^r)`.
    fn certificate(&self, tel: &Telescoper) -> Certificate {
        let r = tel.order();
        let mut num = ClearedPoly::zero();
        for (i, c) in tel.cleared().iter().enumerate() {
            if !c.is_zero() {
                num = num.add(&self.ms[i].mul(&self.g_pows[r - i]).scale_n(c));
            }
        }
        let num = num.div_n(&tel.cleared()[r]);
        let g = self.t.h().den();
        Certificate { q: xrat_from_cleared(&num, &g.pow(r as u32), &radical(g)) }
    }
}

fn radical(g: &QPoly) -> QPoly {
    if g.is_constant() {
        return g.clone();
    }
    g.div_exact(&g.gcd(&g.derivative())).unwrap()
}

/// Minimal-order telescoper of `t` (under a minimal decomposition) with
/// certificate:
/// `P(n+r)H^r − Σ c_i P(n+i)H^i = nQH'/H + QS/T + Q'`.
pub fn mixed_ct(t: &HyperTerm, opts: MixedCtOptions) -> Result<MixedCtOutput> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut d = Driver::new(t, opts.certificate)?;
    let (r, w) = if opts.dichotomic {
        dichotomic_search(&mut d, &mut rng)?
    } else {
        let mut k = 0;
        loop {
            if let Some(w) = d.dependency(k, &mut rng) {
                break (k, w);
            }
            d.step()?;
            k += 1;
        }
    };
    let v: Vec<ZPoly> = d.cols[..=r].iter().zip(&w).map(|(c, wj)| wj.mul(&c.den)).collect();
    let telescoper = Telescoper::from_cleared(primitive_vector(v));
    let certificate = opts.certificate.then(|| d.certificate(&telescoper));
    let trace = ReductionTrace {
        step_numerators: if opts.certificate { d.ms } else { vec![] },
        g: d.t.h().den().clone(),
        remainders: d.rs,
    };
    Ok(MixedCtOutput { telescoper, certificate, trace })
}

/// Computes `R_0..R_δ` up front and bisects on the rank.
fn dichotomic_search(d: &mut Driver, rng: &mut ChaCha8Rng) -> Result<(usize, Vec<ZPoly>)> {
    while d.rs.len() < d.m + 1 {
        d.step()?;
    }
    let ps = primes();
    let deficient = |k: usize, rng: &mut ChaCha8Rng| {
        if k == 0 {
            return d.rs[0].is_zero();
        }
        let p = ps[rng.gen_range(0..ps.len())];
        modular_rank(&d.cols[..=k], p, rng.gen_range(0..p)) < k + 1
    };
    let (mut lo, mut hi) = (0usize, d.m);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if deficient(mid, rng) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut k = lo;
    loop {
        if let Some(w) = d.dependency(k, rng) {
            return Ok((k, w));
        }
        k += 1;
        while d.rs.len() <= k {
            d.step()?;
        }
    }
}
