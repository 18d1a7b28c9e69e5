//! Property tests for the exact-arithmetic invariants.

use num_bigint::BigInt;
use proptest::prelude::*;
use qp_arith::{
    cmp_sqrt, height_rational, padic_val, sqrt_interval, PadicVal, QuadElem, QuadField, Rat,
};
use std::cmp::Ordering;
use std::str::FromStr;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (any::<i64>(), 1..=u32::MAX)
        .prop_map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)).unwrap())
}

fn arb_nonzero_rat() -> impl Strategy<Value = Rat> {
    arb_rat().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_display_roundtrip(x in arb_rat()) {
        let s = x.to_string();
        let y = Rat::from_str(&s).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn height_invariances(x in arb_nonzero_rat()) {
        let h = height_rational(&x);
        prop_assert_eq!(&h, &height_rational(&-&x));
        prop_assert_eq!(&h, &height_rational(&x.recip().unwrap()));
    }

    #[test]
    fn padic_additivity(x in arb_nonzero_rat(), y in arb_nonzero_rat(), pidx in 0usize..5) {
        let p = [2u64, 3, 5, 7, 11][pidx];
        let vx = padic_val(&x, p).unwrap().finite().unwrap();
        let vy = padic_val(&y, p).unwrap().finite().unwrap();
        let prod = &x * &y;
        prop_assert_eq!(padic_val(&prod, p).unwrap(), PadicVal::Finite(vx + vy));
    }

    /// The exact sqrt comparator agrees with a certified bracketing interval
    /// whenever the interval itself decides the comparison.
    #[test]
    fn comparator_agrees_with_interval(
        num in 1u64..1_000_000,
        den in 1u64..1000,
        rnum in 0i64..2_000_000,
        rden in 1u64..1000,
    ) {
        let d = Rat::new(BigInt::from(num), BigInt::from(den)).unwrap();
        let r = Rat::new(BigInt::from(rnum), BigInt::from(rden)).unwrap();
        let tol = Rat::new(BigInt::from(1), BigInt::from(10u64.pow(9))).unwrap();
        let (lo, hi) = sqrt_interval(&d, &tol);
        let cmp = cmp_sqrt(&d, &r);
        if r < lo {
            prop_assert_eq!(cmp, Ordering::Greater);
        } else if r > hi {
            prop_assert_eq!(cmp, Ordering::Less);
        }
        // Inside the bracket the exact comparator is the authority.
    }

    #[test]
    fn conjugation_is_an_automorphism(
        u1 in -1000i64..1000, v1 in -1000i64..1000,
        u2 in -1000i64..1000, v2 in -1000i64..1000,
        didx in 0usize..4,
    ) {
        let d = [2i64, 5, -1, -7][didx];
        let f = QuadField::new(BigInt::from(d)).unwrap();
        let x = QuadElem::new(f.clone(), Rat::from_int(u1), Rat::from_int(v1));
        let y = QuadElem::new(f, Rat::from_int(u2), Rat::from_int(v2));
        let xy = (&x * &y).unwrap();
        prop_assert_eq!(xy.conj(), (&x.conj() * &y.conj()).unwrap());
        let sum = (&x + &y).unwrap();
        prop_assert_eq!(sum.conj(), (&x.conj() + &y.conj()).unwrap());
        // norm is multiplicative
        prop_assert_eq!(xy.norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn quadelem_display_roundtrip(
        un in -999i64..999, ud in 1u32..50,
        vn in -999i64..999, vd in 1u32..50,
        didx in 0usize..6,
    ) {
        let d = [2i64, 3, 5, -1, -2, 61][didx];
        let f = QuadField::new(BigInt::from(d)).unwrap();
        let x = QuadElem::new(
            f,
            Rat::new(BigInt::from(un), BigInt::from(ud)).unwrap(),
            Rat::new(BigInt::from(vn), BigInt::from(vd)).unwrap(),
        );
        let back = QuadElem::from_str(&x.to_string()).unwrap();
        prop_assert_eq!(x, back);
    }
}

/// Comparator versus interval on a dense deterministic grid, as a backstop to
/// the random cases above.
#[test]
fn comparator_interval_sweep() {
    let tol = Rat::new(BigInt::from(1), BigInt::from(10u64.pow(10))).unwrap();
    let mut checked = 0u32;
    for dnum in [2u64, 3, 5, 7, 61, 133, 9999] {
        let d = Rat::new(BigInt::from(dnum), BigInt::from(1)).unwrap();
        let (lo, hi) = sqrt_interval(&d, &tol);
        for k in 0..50 {
            let r = Rat::new(BigInt::from(dnum * k), BigInt::from(100u64)).unwrap();
            let cmp = cmp_sqrt(&d, &r);
            if r < lo {
                assert_eq!(cmp, Ordering::Greater);
            } else if r > hi {
                assert_eq!(cmp, Ordering::Less);
            }
            checked += 1;
        }
    }
    assert!(checked > 300);
}
