use mixedct::arith::{int, NRat, QPoly, QRat, RatFn, XPoly, XRat, ZPoly};
use mixedct_cli::expr::{format_expr, lower, parse_expr, Target, Value};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = i64> {
    -9i64..=9
}

fn zpoly(max_len: usize) -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(small(), 0..=max_len).prop_map(|v| ZPoly::from_i64s(&v))
}

fn nrat() -> impl Strategy<Value = NRat> {
    (zpoly(3), zpoly(3)).prop_map(|(a, b)| if b.is_zero() { NRat::from_zpoly(a) } else { NRat::new(a, b) })
}

fn qpoly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((small(), 1i64..=5), 0..=max_len)
        .prop_map(|v| QPoly::new(v.into_iter().map(|(a, b)| int(a) / int(b)).collect()))
}

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(nrat(), 0..=4).prop_map(XPoly::new)
}

fn qrat() -> impl Strategy<Value = QRat> {
    (qpoly(4), qpoly(4)).prop_map(|(a, b)| if b.is_zero() { QRat::from_poly(a) } else { QRat::new(a, b) })
}

fn xrat() -> impl Strategy<Value = XRat> {
    (xpoly(), prop::collection::vec(nrat(), 0..=3))
        .prop_map(|(a, b)| {
            let b = XPoly::new(b);
            if b.is_zero() {
                RatFn::from_poly(a)
            } else {
                RatFn::new(a, b)
            }
        })
}

fn round_trip(v: Value, target: Target) -> Result<(), TestCaseError> {
    let text = format_expr(&v);
    let ast = parse_expr(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    let back = lower(&ast, target).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(back, v, "text {}", text);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn nrat_round_trips(v in nrat()) {
        round_trip(Value::NRat(v), Target::NRat)?;
    }

    #[test]
    fn xpoly_round_trips(v in xpoly()) {
        round_trip(Value::XPoly(v), Target::XPoly)?;
    }

    #[test]
    fn qrat_round_trips(v in qrat()) {
        round_trip(Value::QRat(v), Target::QRat)?;
    }

    #[test]
    fn xrat_round_trips(v in xrat()) {
        round_trip(Value::XRat(v), Target::XRat)?;
    }
}
