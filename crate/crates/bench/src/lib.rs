//! Benchmark inputs shared by the criterion targets.

use mixedct::arith::{rat, Field, NRat, QPoly, QRat, XPoly, ZPoly};
use mixedct::telescoping::{build_term, HyperTerm};

fn q(v: &[(i64, i64)]) -> QPoly {
    QPoly::new(v.iter().map(|&(a, b)| rat(a, b)).collect())
}

/// Jacobi-type kernel with `α = 1/2`, `β = 1/3`, `x₀ = 1/7`.
pub fn jacobi() -> HyperTerm {
    let h = QRat::new(q(&[(-1, 1), (0, 1), (1, 1)]), q(&[(-2, 7), (2, 1)]));
    let st = QRat::new(q(&[(1, 1)]), q(&[(-2, 1), (2, 1)]))
        .add(&QRat::new(q(&[(1, 1)]), q(&[(3, 1), (3, 1)])))
        .sub(&QRat::new(q(&[(1, 1)]), q(&[(-1, 7), (1, 1)])));
    build_term(XPoly::one(), h, st).expect("valid term")
}

/// `P = 1 + x/(n²+1)` with multiple poles in `H` and in `S/T`.
pub fn example2() -> HyperTerm {
    let x = QPoly::x();
    let h = QRat::new(
        QPoly::from_ints(&[1, 1]).pow(2),
        QPoly::from_ints(&[-4, 1]).mul(&QPoly::from_ints(&[-3, 1]).pow(2)).mul(&QPoly::from_ints(&[-5, 0, 1]).pow(3)),
    );
    let e = QRat::new(
        QPoly::from_ints(&[1, 0, 0, 1]),
        x.mul(&QPoly::from_ints(&[-3, 1])).mul(&QPoly::from_ints(&[-4, 1]).pow(2)),
    );
    let st = e.derivative().add(&QRat::new(x, QPoly::from_ints(&[-5, 0, 1])));
    let c = NRat::from_zpoly(ZPoly::from_i64s(&[1, 0, 1])).inv();
    build_term(XPoly::new(vec![NRat::one(), c]), h, st).expect("valid term")
}
