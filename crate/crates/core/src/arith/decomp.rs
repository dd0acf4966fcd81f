//! Square-free and partial-fraction decompositions.

use super::field::Field;
use super::poly::{inv_mod, Poly};
use super::ratfn::RatFn;
use crate::error::{Error, Result};

/// `p = Π factor^multiplicity` with monic, square-free, pairwise coprime
/// factors listed by strictly increasing multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct SqfDecomp<C> {
    pub factors: Vec<(Poly<C>, usize)>,
}

impl<C: Field> SqfDecomp<C> {
    pub fn expand(&self) -> Poly<C> {
        self.factors
            .iter()
            .fold(Poly::one(), |acc, (f, m)| acc.mul(&f.pow(*m as u32)))
    }

    /// Square-free part `Π factor`.
    pub fn radical(&self) -> Poly<C> {
        self.factors.iter().fold(Poly::one(), |acc, (f, _)| acc.mul(f))
    }

    /// Factor of multiplicity `k`, or 1.
    pub fn factor(&self, k: usize) -> Poly<C> {
        self.factors
            .iter()
            .find(|(_, m)| *m == k)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(Poly::one)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.factors.last().map_or(0, |(_, m)| *m)
    }
}

/// Yun's algorithm. The input must be monic and nonzero.
pub fn squarefree_decomp<C: Field>(p: &Poly<C>) -> Result<SqfDecomp<C>> {
    if p.is_zero() {
        return Err(Error::Domain("square-free decomposition of zero".into()));
    }
    if !p.is_monic() {
        return Err(Error::Domain("square-free decomposition expects a monic polynomial".into()));
    }
    let mut factors = Vec::new();
    if p.is_constant() {
        return Ok(SqfDecomp { factors });
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_exact(&a0).unwrap();
    let c = dp.div_exact(&a0).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_exact(&a).unwrap();
        let c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            factors.push((a, i));
        }
        i += 1;
    }
    Ok(SqfDecomp { factors })
}

/// One summand `numer / factor^mult` of a partial fraction decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct PfPart<C> {
    pub numer: Poly<C>,
    pub factor: Poly<C>,
    pub mult: usize,
}

/// `F = poly + Σ numer_k / factor_k^k` along the square-free decomposition
/// of the denominator; zero numerators are omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractions<C> {
    pub poly: Poly<C>,
    pub parts: Vec<PfPart<C>>,
}

impl<C: Field> PartialFractions<C> {
    pub fn recombine(&self) -> RatFn<C> {
        self.parts.iter().fold(RatFn::from_poly(self.poly.clone()), |acc, p| {
            acc.add(&RatFn::new(p.numer.clone(), p.factor.pow(p.mult as u32)))
        })
    }
}

pub fn partial_fractions<C: Field>(f: &RatFn<C>) -> Result<PartialFractions<C>> {
    let sqf = squarefree_decomp(f.den())?;
    partial_fractions_with(f, &sqf.factors)
}

/// Same, along any factorization `den = Π g^k` into pairwise coprime monic
/// factors (a square-free decomposition, or something finer).
pub fn partial_fractions_with<C: Field>(
    f: &RatFn<C>,
    factors: &[(Poly<C>, usize)],
) -> Result<PartialFractions<C>> {
    let (u, rem) = f.num().div_rem(f.den());
    let mut parts = Vec::new();
    if factors.len() == 1 {
        let (g, k) = &factors[0];
        if !rem.is_zero() {
            parts.push(PfPart { numer: rem, factor: g.clone(), mult: *k });
        }
        return Ok(PartialFractions { poly: u, parts });
    }
    for (g, k) in factors {
        let gk = g.pow(*k as u32);
        let cof = f.den().div_exact(&gk).expect("factor divides denominator");
        let numer = rem.mul(&inv_mod(&cof, &gk)?).rem(&gk);
        if !numer.is_zero() {
            parts.push(PfPart { numer, factor: g.clone(), mult: *k });
        }
    }
    Ok(PartialFractions { poly: u, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::BigRat;

    type P = Poly<BigRat>;

    fn p(v: &[i64]) -> P {
        P::from_ints(v)
    }

    #[test]
    fn sqf_examples() {
        let d = squarefree_decomp(&p(&[0, 0, 1, 1])).unwrap();
        assert_eq!(d.factors, vec![(p(&[1, 1]), 1), (p(&[0, 1]), 2)]);
        let e = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        let d = squarefree_decomp(&e).unwrap();
        assert_eq!(d.factors, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        let d = squarefree_decomp(&p(&[0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(d.factors, vec![(p(&[0, 1]), 5)]);
        assert!(squarefree_decomp(&P::zero()).is_err());
    }

    #[test]
    fn pf_examples() {
        let f = RatFn::new(p(&[1]), p(&[0, -1, 1]));
        let pf = partial_fractions(&f).unwrap();
        assert!(pf.poly.is_zero());
        // x(x-1) is a single square-free factor
        assert_eq!(pf.parts.len(), 1);
        assert_eq!(pf.recombine(), f);
        let pf = partial_fractions_with(&f, &[(p(&[0, 1]), 1), (p(&[-1, 1]), 1)]).unwrap();
        assert_eq!(
            pf.parts,
            vec![
                PfPart { numer: p(&[-1]), factor: p(&[0, 1]), mult: 1 },
                PfPart { numer: p(&[1]), factor: p(&[-1, 1]), mult: 1 },
            ]
        );

        let f = RatFn::new(p(&[1, 1]), p(&[0, 0, 1]));
        let pf = partial_fractions(&f).unwrap();
        assert_eq!(pf.parts, vec![PfPart { numer: p(&[1, 1]), factor: p(&[0, 1]), mult: 2 }]);

        // (x+2)/(x(x-1)^2) = 2/x + (-2x+5)/(x-1)^2
        let f = RatFn::new(p(&[2, 1]), p(&[0, 1]).mul(&p(&[-1, 1]).pow(2)));
        let pf = partial_fractions(&f).unwrap();
        assert!(pf.poly.is_zero());
        assert_eq!(
            pf.parts,
            vec![
                PfPart { numer: p(&[2]), factor: p(&[0, 1]), mult: 1 },
                PfPart { numer: p(&[5, -2]), factor: p(&[-1, 1]), mult: 2 },
            ]
        );
    }
}
