//! Linear dependencies among confined remainders.
//!
//! Vectors are cleared to `V_j = d_j(n)·R_j ∈ ℤ[n]^m`. Ranks are read off a
//! random specialization `n = n₀` modulo a word-size prime, which can only
//! underestimate; a full rank there proves independence. Dependencies are
//! found by interpolating the Cramer vector of a nonsingular `k × (k+1)`
//! minor at many points, per prime, then Chinese remaindering with rational
//! reconstruction. Every candidate is checked exactly before it is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::modp::{self, add_mod, inv_mod, mul_mod, primes, sub_mod, Crt};
use crate::arith::xpoly::{clear_n_denominators, zlcm};
use crate::arith::zpoly::{gcd_p, trim_p};
use crate::arith::{Field, NRat, XPoly, ZPoly};

/// `R = entries / den`, with `m` entries (zero-padded).
#[derive(Clone, Debug)]
pub(crate) struct Cleared {
    pub entries: Vec<ZPoly>,
    pub den: ZPoly,
}

pub(crate) fn clear_column(r: &XPoly, m: usize) -> Cleared {
    let (mut entries, den) = clear_n_denominators(r);
    assert!(entries.len() <= m, "vector longer than the confinement space");
    entries.resize(m, ZPoly::zero());
    Cleared { entries, den }
}

fn eval_matrix(cols: &[Cleared], rows: &[usize], p: u64, n0: u64) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|&i| cols.iter().map(|c| c.entries[i].eval_mod(n0, p)).collect())
        .collect()
}

/// Row echelon over F_p in place; returns the pivot `(row, col)` pairs.
fn echelon(mat: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..mat.len()).find(|&i| mat[i][c] != 0) else { continue };
        mat.swap(r, piv);
        let inv = inv_mod(mat[r][c], p);
        for j in c..mat[r].len() {
            mat[r][j] = mul_mod(mat[r][j], inv, p);
        }
        for i in 0..mat.len() {
            if i != r && mat[i][c] != 0 {
                let f = mat[i][c];
                for j in c..mat[r].len() {
                    let t = mul_mod(f, mat[r][j], p);
                    mat[i][j] = sub_mod(mat[i][j], t, p);
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    pivots
}

pub(crate) fn modular_rank(cols: &[Cleared], p: u64, n0: u64) -> usize {
    let Some(m) = cols.first().map(|c| c.entries.len()) else { return 0 };
    let rows: Vec<usize> = (0..m).collect();
    let mut mat = eval_matrix(cols, &rows, p, n0);
    echelon(&mut mat, cols.len(), p).len()
}

/// Rows of a nonsingular `k × k` minor in the first `k` columns at `n0`.
fn pivot_rows(cols: &[Cleared], k: usize, p: u64, n0: u64) -> Option<Vec<usize>> {
    let m = cols[0].entries.len();
    // transpose: echelon on columns picks independent rows
    let mut t: Vec<Vec<u64>> = (0..k)
        .map(|j| (0..m).map(|i| cols[j].entries[i].eval_mod(n0, p)).collect())
        .collect();
    let piv = echelon(&mut t, m, p);
    (piv.len() == k).then(|| piv.into_iter().map(|(_, c)| c).collect())
}

/// Determinant and solution of `A x = b` over F_p; `None` if singular.
fn det_solve(mut a: Vec<Vec<u64>>, p: u64) -> Option<(u64, Vec<u64>)> {
    let k = a.len();
    let mut det = 1u64;
    for c in 0..k {
        let piv = (c..k).find(|&i| a[i][c] != 0)?;
        if piv != c {
            a.swap(piv, c);
            det = sub_mod(0, det, p);
        }
        det = mul_mod(det, a[c][c], p);
        let inv = inv_mod(a[c][c], p);
        for j in c..=k {
            a[c][j] = mul_mod(a[c][j], inv, p);
        }
        for i in 0..k {
            if i != c && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..=k {
                    let t = mul_mod(f, a[c][j], p);
                    a[i][j] = sub_mod(a[i][j], t, p);
                }
            }
        }
    }
    Some((det, a.into_iter().map(|row| row[k]).collect()))
}

/// Inverses of all entries (nonzero) with a single field inversion.
fn batch_inverse(v: &[u64], p: u64) -> Vec<u64> {
    let mut prefix = Vec::with_capacity(v.len());
    let mut acc = 1u64;
    for &x in v {
        prefix.push(acc);
        acc = mul_mod(acc, x, p);
    }
    let mut inv = inv_mod(acc, p);
    let mut out = vec![0u64; v.len()];
    for i in (0..v.len()).rev() {
        out[i] = mul_mod(inv, prefix[i], p);
        inv = mul_mod(inv, v[i], p);
    }
    out
}

/// Newton interpolation over F_p of several value vectors on shared nodes.
fn interpolate_many(xs: &[u64], ys: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = xs.len();
    let mut coefs: Vec<Vec<u64>> = ys.to_vec();
    for j in 1..n {
        let dens: Vec<u64> = (j..n).map(|i| sub_mod(xs[i], xs[i - j], p)).collect();
        let invs = batch_inverse(&dens, p);
        for coef in coefs.iter_mut() {
            for i in (j..n).rev() {
                let num = sub_mod(coef[i], coef[i - 1], p);
                coef[i] = mul_mod(num, invs[i - j], p);
            }
        }
    }
    coefs
        .into_iter()
        .map(|coef| {
            let mut out: Vec<u64> = Vec::with_capacity(n);
            for i in (0..n).rev() {
                // out = out·(x − xs[i]) + coef[i]
                out.insert(0, 0);
                for d in 0..out.len() - 1 {
                    let t = mul_mod(out[d + 1], xs[i], p);
                    out[d] = sub_mod(out[d], t, p);
                }
                out[0] = add_mod(out[0], coef[i], p);
            }
            trim_p(&mut out);
            out
        })
        .collect()
}

#[cfg(test)]
fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    interpolate_many(xs, &[ys.to_vec()], p).pop().unwrap()
}

fn div_exact_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    trim_p(&mut a);
    if a.is_empty() {
        return a;
    }
    let bl = b.len();
    let li = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; a.len() + 1 - bl];
    while a.len() >= bl {
        let top = *a.last().unwrap();
        let f = mul_mod(top, li, p);
        let off = a.len() - bl;
        q[off] = f;
        for j in 0..bl {
            a[off + j] = sub_mod(a[off + j], mul_mod(f, b[j], p), p);
        }
        a.pop();
        trim_p(&mut a);
        if a.len() < bl {
            break;
        }
    }
    debug_assert!(a.is_empty());
    q
}

/// Image mod `p` of the primitive kernel vector, scaled so that its last
/// component is monic. `None` if the prime or the chosen minor is bad.
fn kernel_image(cols: &[Cleared], rows: &[usize], bound: usize, p: u64, seed: u64) -> Option<Vec<Vec<u64>>> {
    let k = rows.len();
    let reduced: Vec<Vec<Vec<u64>>> = rows
        .iter()
        .map(|&i| cols.iter().map(|c| c.entries[i].reduce_mod(p)).collect())
        .collect();
    let horner = |v: &[u64], x: u64| v.iter().rev().fold(0u64, |acc, &c| add_mod(mul_mod(acc, x, p), c, p));
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys: Vec<Vec<u64>> = vec![Vec::with_capacity(bound + 1); k + 1];
    let mut x = seed % p;
    let mut misses = 0;
    while xs.len() <= bound {
        x = add_mod(x, 1, p);
        let a: Vec<Vec<u64>> = reduced
            .iter()
            .map(|row| {
                let mut r: Vec<u64> = row[..k].iter().map(|e| horner(e, x)).collect();
                r.push(sub_mod(0, horner(&row[k], x), p));
                r
            })
            .collect();
        match det_solve(a, p) {
            Some((det, sol)) => {
                xs.push(x);
                for (i, s) in sol.iter().enumerate() {
                    ys[i].push(mul_mod(det, *s, p));
                }
                ys[k].push(det);
            }
            None => {
                misses += 1;
                if misses > bound + 1 {
                    return None;
                }
            }
        }
    }
    let polys = interpolate_many(&xs, &ys, p);
    let mut g: Vec<u64> = Vec::new();
    for q in &polys {
        g = if g.is_empty() { q.clone() } else { gcd_p(&g, q, p) };
    }
    if g.is_empty() {
        return None;
    }
    let mut out: Vec<Vec<u64>> = polys.iter().map(|q| div_exact_p(q, &g, p)).collect();
    let lk = *out[k].last()?;
    let li = inv_mod(lk, p);
    for q in out.iter_mut() {
        for c in q.iter_mut() {
            *c = mul_mod(*c, li, p);
        }
    }
    Some(out)
}

fn reconstruct(crt: &Crt, shape: &[usize]) -> Option<Vec<ZPoly>> {
    let vals = crt.symmetric();
    let mut rats = Vec::with_capacity(vals.len());
    for v in &vals {
        rats.push(modp::rational_reconstruct(v, &crt.modulus)?);
    }
    let mut l = BigInt::one();
    for (_, d) in &rats {
        l = l.lcm(d);
    }
    let ints: Vec<BigInt> = rats.iter().map(|(n, d)| n * (&l / d)).collect();
    let mut out = Vec::with_capacity(shape.len());
    let mut off = 0;
    for &len in shape {
        out.push(ZPoly::new(ints[off..off + len].to_vec()));
        off += len;
    }
    Some(out)
}

fn is_kernel(cols: &[Cleared], w: &[ZPoly]) -> bool {
    let m = cols[0].entries.len();
    (0..m).all(|i| {
        cols.iter()
            .zip(w)
            .fold(ZPoly::zero(), |acc, (c, wj)| acc.add(&c.entries[i].mul(wj)))
            .is_zero()
    })
}

/// A primitive `w ∈ ℤ[n]^{k+1}` with `Σ w_j V_j = 0` and `w_k ≠ 0`, given
/// that the first `k` columns are independent. `None` if no such vector
/// exists (the last column is independent too).
pub(crate) fn kernel_vector(cols: &[Cleared], rng: &mut ChaCha8Rng) -> Option<Vec<ZPoly>> {
    let k = cols.len() - 1;
    if k == 0 {
        return cols[0].entries.iter().all(ZPoly::is_zero).then(|| vec![ZPoly::one()]);
    }
    let ps = primes();
    let rows = (0..8).find_map(|_| {
        let p = ps[rng.gen_range(0..ps.len())];
        pivot_rows(cols, k, p, rng.gen_range(0..p))
    })?;
    let bound: usize = rows
        .iter()
        .map(|&i| cols.iter().map(|c| c.entries[i].deg0()).max().unwrap_or(0))
        .sum();
    let seed: u64 = rng.gen();
    let batch = rayon::current_num_threads().clamp(2, 8);
    let mut crt: Option<Crt> = None;
    let mut shape: Vec<usize> = Vec::new();
    let mut used = 0usize;
    let mut next_try = 1usize;
    let mut idx = 0usize;
    while idx < ps.len() {
        let chunk: Vec<u64> = ps[idx..(idx + batch).min(ps.len())].to_vec();
        idx += chunk.len();
        let images: Vec<Option<Vec<Vec<u64>>>> =
            chunk.par_iter().map(|&p| kernel_image(cols, &rows, bound, p, seed)).collect();
        for (p, img) in chunk.into_iter().zip(images) {
            let Some(img) = img else { continue };
            let s: Vec<usize> = img.iter().map(Vec::len).collect();
            let total: usize = s.iter().sum();
            if crt.is_some() {
                let cur: usize = shape.iter().sum();
                if s != shape {
                    if total > cur {
                        crt = None;
                    } else {
                        continue;
                    }
                }
            }
            let flat: Vec<u64> = img.into_iter().flatten().collect();
            match crt.as_mut() {
                None => {
                    crt = Some(Crt::new(&flat, p));
                    shape = s;
                    used = 1;
                    next_try = 1;
                }
                Some(c) => {
                    c.add(&flat, p);
                    used += 1;
                }
            }
            if used >= next_try {
                next_try = (used * 3 / 2).max(used + 1);
                if let Some(w) = reconstruct(crt.as_ref().unwrap(), &shape) {
                    if is_kernel(cols, &w) {
                        return Some(primitive_vector(w));
                    }
                }
            }
        }
    }
    None
}

pub(crate) fn primitive_vector(w: Vec<ZPoly>) -> Vec<ZPoly> {
    let mut c = BigInt::zero();
    for p in &w {
        c = c.gcd(&p.content());
    }
    let lead_neg = w.iter().rev().find_map(|p| p.lc()).is_some_and(|l| l.is_negative());
    if lead_neg {
        c = -c;
    }
    if c.is_zero() || c.is_one() {
        return w;
    }
    w.iter().map(|p| p.div_scalar_exact(&c)).collect()
}

/// Reference elimination over any field: coefficients `c` with
/// `Σ c_j v_j = v_k` (free unknowns set to zero), or `None` when `v_k` is
/// not in the span of the others.
pub fn solve_exact<C: Field>(cols: &[Vec<C>]) -> Option<Vec<C>> {
    let k = cols.len().checked_sub(1)?;
    let m = cols.iter().map(Vec::len).max().unwrap_or(0);
    let get = |j: usize, i: usize| cols[j].get(i).cloned().unwrap_or_else(C::zero);
    let mut mat: Vec<Vec<C>> = (0..m).map(|i| (0..=k).map(|j| get(j, i)).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(piv) = (r..m).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(r, piv);
        let inv = mat[r][c].inv();
        for j in c..=k {
            mat[r][j] = mat[r][j].mul(&inv);
        }
        for i in 0..m {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..=k {
                    let t = f.mul(&mat[r][j]);
                    mat[i][j] = mat[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..m).any(|i| !mat[i][k].is_zero()) {
        return None;
    }
    let mut sol = vec![C::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        sol[c] = mat[row][k].clone();
    }
    Some(sol)
}

/// `c` with `Σ_{j<k} c_j v_j = v_k`, or `None` if `v_0..v_k` are
/// independent. The vectors are coefficient lists in `x`.
pub fn rank_and_solve(vs: &[XPoly]) -> Option<Vec<NRat>> {
    use rand::SeedableRng;
    let k = vs.len().checked_sub(1)?;
    let m = vs.iter().map(|v| v.coeffs().len()).max().unwrap_or(0);
    if m == 0 {
        return Some(vec![NRat::zero(); k]);
    }
    let cols: Vec<Cleared> = vs.iter().map(|v| clear_column(v, m)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let fast = if k > 0 {
        let p = primes()[0];
        let prefix_full = modular_rank(&cols[..k], p, rng.gen_range(0..p)) == k;
        if prefix_full {
            if k + 1 <= m && modular_rank(&cols, p, rng.gen_range(0..p)) == k + 1 {
                return None;
            }
            kernel_vector(&cols, &mut rng).map(|w| coefficients_from_kernel(&cols, &w))
        } else {
            None
        }
    } else {
        None
    };
    fast.or_else(|| {
        let field_cols: Vec<Vec<NRat>> = vs.iter().map(|v| v.coeffs().to_vec()).collect();
        solve_exact(&field_cols)
    })
}

/// `c_j = −w_j d_j / (w_k d_k)` for `j < k`.
pub(crate) fn coefficients_from_kernel(cols: &[Cleared], w: &[ZPoly]) -> Vec<NRat> {
    let k = w.len() - 1;
    let lead = NRat::from_zpoly(w[k].mul(&cols[k].den));
    let li = lead.inv();
    (0..k)
        .map(|j| NRat::from_zpoly(w[j].mul(&cols[j].den)).mul(&li).neg())
        .collect()
}

/// Clears a monic operator `S^r − Σ c_j S^j` to its primitive polynomial
/// form `(ĉ_0, …, ĉ_r)`.
pub fn clear_operator(coeffs: &[NRat]) -> Vec<ZPoly> {
    let mut d = ZPoly::one();
    for c in coeffs {
        d = zlcm(&d, c.den());
    }
    let mut v: Vec<ZPoly> = coeffs
        .iter()
        .map(|c| c.num().mul(&d.div_exact(c.den()).unwrap()).neg())
        .collect();
    v.push(d);
    let g = v.iter().filter(|p| !p.is_zero()).fold(ZPoly::zero(), |acc, p| acc.gcd_primitive(p));
    let v = if g.is_constant() { v } else { v.iter().map(|p| p.div_exact(&g).unwrap()).collect() };
    primitive_vector(v)
}
