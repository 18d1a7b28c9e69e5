//! Frozen expected values for the exact-arithmetic kernel.

use num_bigint::BigInt;
use qp_arith::{
    cmp_sqrt, height_quadratic, height_rational, is_perfect_square, mobius, padic_val, ArithError,
    IntPoly, MahlerInf, PadicVal, QuadElem, QuadField, Rat,
};
use std::cmp::Ordering;
use std::str::FromStr;

fn rat(s: &str) -> Rat {
    Rat::from_str(s).unwrap()
}

#[test]
fn mobius_values() {
    assert_eq!(mobius(1), 1);
    assert_eq!(mobius(2), -1);
    assert_eq!(mobius(3), -1);
    assert_eq!(mobius(4), 0);
    assert_eq!(mobius(5), -1);
    assert_eq!(mobius(6), 1);
    assert_eq!(mobius(8), 0);
    assert_eq!(mobius(12), 0);
    assert_eq!(mobius(30), -1);
    assert_eq!(mobius(2 * 3 * 5 * 7), 1);
}

#[test]
fn padic_val_values() {
    assert_eq!(padic_val(&rat("12"), 2).unwrap(), PadicVal::Finite(2));
    assert_eq!(padic_val(&rat("12"), 3).unwrap(), PadicVal::Finite(1));
    assert_eq!(padic_val(&rat("-91/36"), 3).unwrap(), PadicVal::Finite(-2));
    assert_eq!(padic_val(&rat("-91/36"), 2).unwrap(), PadicVal::Finite(-2));
    assert_eq!(padic_val(&rat("-91/36"), 7).unwrap(), PadicVal::Finite(1));
    assert_eq!(padic_val(&rat("-91/36"), 13).unwrap(), PadicVal::Finite(1));
    assert_eq!(padic_val(&rat("-91/36"), 5).unwrap(), PadicVal::Finite(0));
    assert_eq!(padic_val(&rat("0"), 5).unwrap(), PadicVal::PlusInfinity);
    assert!(matches!(
        padic_val(&rat("12"), 6),
        Err(ArithError::NotPrime(6))
    ));
    assert!(matches!(
        padic_val(&rat("12"), 1),
        Err(ArithError::NotPrime(1))
    ));
    assert!(matches!(
        padic_val(&rat("12"), 0),
        Err(ArithError::NotPrime(0))
    ));
}

#[test]
fn padic_val_additive() {
    let x = rat("-91/36");
    let y = rat("12/7");
    let xy = &x * &y;
    for p in [2u64, 3, 5, 7, 13] {
        let vx = match padic_val(&x, p).unwrap() {
            PadicVal::Finite(v) => v,
            _ => unreachable!(),
        };
        let vy = match padic_val(&y, p).unwrap() {
            PadicVal::Finite(v) => v,
            _ => unreachable!(),
        };
        assert_eq!(padic_val(&xy, p).unwrap(), PadicVal::Finite(vx + vy));
    }
}

#[test]
fn perfect_squares() {
    assert_eq!(
        is_perfect_square(&BigInt::from(36)).unwrap(),
        Some(BigInt::from(6))
    );
    assert_eq!(is_perfect_square(&BigInt::from(35)).unwrap(), None);
    assert_eq!(
        is_perfect_square(&BigInt::from(0)).unwrap(),
        Some(BigInt::from(0))
    );
    assert_eq!(
        is_perfect_square(&BigInt::from(1)).unwrap(),
        Some(BigInt::from(1))
    );
    assert!(is_perfect_square(&BigInt::from(-4)).is_err());
    let big = BigInt::from_str("123456789123456789").unwrap();
    assert_eq!(is_perfect_square(&(&big * &big)).unwrap(), Some(big));
}

#[test]
fn rational_heights() {
    assert_eq!(height_rational(&rat("-91/36")), BigInt::from(91));
    assert_eq!(height_rational(&rat("0")), BigInt::from(1));
    assert_eq!(height_rational(&rat("1/4")), BigInt::from(4));
    assert_eq!(height_rational(&rat("4")), BigInt::from(4));
    assert_eq!(height_rational(&rat("-7")), BigInt::from(7));
}

#[test]
fn height_symmetry() {
    for s in ["3/7", "-19/4", "1", "22/7", "-1/2"] {
        let x = rat(s);
        assert_eq!(height_rational(&x), height_rational(&(-&x)));
        assert_eq!(height_rational(&x), height_rational(&x.recip().unwrap()));
    }
}

/// Golden ratio height: minpoly z^2 - z - 1, H = sqrt(phi) = 1.27201964951...
#[test]
fn quadratic_height_golden() {
    let p = IntPoly::from_i64(&[-1, -1, 1]);
    let h = height_quadratic(&p).unwrap();
    let (lo, hi) = h.interval_f64();
    assert!(lo <= 1.272019649514069 && 1.272019649514069 <= hi);
    assert!((hi - lo) / lo <= 1e-12);
    assert_eq!(h.cmp_bound(&rat("1272/1000")), Ordering::Greater);
    assert_eq!(h.cmp_bound(&rat("1273/1000")), Ordering::Less);
}

/// sqrt(2): minpoly z^2 - 2, H = sqrt(sqrt(2)*sqrt(2)) = sqrt(2)^... M = 2, H = sqrt(2).
#[test]
fn quadratic_height_sqrt2() {
    let p = IntPoly::from_i64(&[-2, 0, 1]);
    let h = height_quadratic(&p).unwrap();
    let (lo, hi) = h.interval_f64();
    let s2 = 2f64.sqrt();
    assert!(lo <= s2 && s2 <= hi);
    assert!((hi - lo) / lo <= 1e-12);
    assert_eq!(h.cmp_bound(&rat("3/2")), Ordering::Less);
    assert_eq!(h.cmp_bound(&rat("7/5")), Ordering::Greater);
}

/// i: minpoly z^2 + 1, both roots on the unit circle, H = 1 exactly.
#[test]
fn quadratic_height_i() {
    let p = IntPoly::from_i64(&[1, 0, 1]);
    let h = height_quadratic(&p).unwrap();
    assert_eq!(h.cmp_bound(&rat("1")), Ordering::Equal);
    let (lo, hi) = h.interval_f64();
    assert!(lo <= 1.0 && 1.0 <= hi);
}

#[test]
fn mahler_inf_quadratics() {
    // (z-2)(z-3): both roots outside the unit circle.
    let m = MahlerInf::of_quadratic(&IntPoly::from_i64(&[6, -5, 1])).unwrap();
    assert_eq!(m.cmp_bound(&rat("6")), Ordering::Equal);
    // z^2 + 1.
    let m = MahlerInf::of_quadratic(&IntPoly::from_i64(&[1, 0, 1])).unwrap();
    assert_eq!(m.cmp_bound(&rat("1")), Ordering::Equal);
    // 256 z^2 + 128 z + 16 = 16 (4z+1)^2: double root -1/4 inside.
    let m = MahlerInf::of_quadratic(&IntPoly::from_i64(&[16, 128, 256])).unwrap();
    assert_eq!(m.cmp_bound(&rat("256")), Ordering::Equal);
    // Mixed: z^2 - z - 1 has M = (1 + sqrt 5)/2, irrational.
    let m = MahlerInf::of_quadratic(&IntPoly::from_i64(&[-1, -1, 1])).unwrap();
    assert_eq!(m.cmp_bound(&rat("8/5")), Ordering::Greater);
    assert_eq!(m.cmp_bound(&rat("13/8")), Ordering::Less);
}

#[test]
fn quad_arithmetic() {
    // (1+i)(1-i) = 2 in Q(i).
    let f = QuadField::new(BigInt::from(-1)).unwrap();
    let a = QuadElem::new(f.clone(), rat("1"), rat("1"));
    let b = QuadElem::new(f.clone(), rat("1"), rat("-1"));
    let prod = (&a * &b).unwrap();
    assert!(prod.is_rational());
    assert_eq!(prod.u(), &rat("2"));

    // inv(sqrt(2)) = (1/2) sqrt(2) in Q(sqrt 2).
    let f2 = QuadField::new(BigInt::from(2)).unwrap();
    let s2 = QuadElem::new(f2.clone(), rat("0"), rat("1"));
    let inv = s2.inv().unwrap();
    assert_eq!(inv.u(), &rat("0"));
    assert_eq!(inv.v(), &rat("1/2"));

    // conj(3 + 2 sqrt 5) = 3 - 2 sqrt 5.
    let f5 = QuadField::new(BigInt::from(5)).unwrap();
    let x = QuadElem::new(f5, rat("3"), rat("2"));
    let c = x.conj();
    assert_eq!(c.u(), &rat("3"));
    assert_eq!(c.v(), &rat("-2"));
    // conj is an automorphism: conj(xy) = conj(x) conj(y).
    let y = x.clone().square();
    assert_eq!(y.conj(), (&c * &c).unwrap());
}

#[test]
fn quad_field_rejects_bad_discriminants() {
    assert!(matches!(
        QuadField::new(BigInt::from(0)),
        Err(ArithError::BadDiscriminant(_))
    ));
    assert!(matches!(
        QuadField::new(BigInt::from(1)),
        Err(ArithError::BadDiscriminant(_))
    ));
    assert!(matches!(
        QuadField::new(BigInt::from(12)),
        Err(ArithError::BadDiscriminant(_))
    ));
    assert!(QuadField::new(BigInt::from(-163)).is_ok());
    assert!(QuadField::new(BigInt::from(61)).is_ok());
}

#[test]
fn rat_parse_format_roundtrip() {
    for s in ["-91/36", "0", "1/4", "-7", "13/6"] {
        let x = rat(s);
        assert_eq!(x.to_string(), s);
        assert_eq!(Rat::from_str(&x.to_string()).unwrap(), x);
    }
    // Canonicalization on parse.
    assert_eq!(rat("2/4").to_string(), "1/2");
    assert_eq!(rat("-0").to_string(), "0");
    assert_eq!(rat("4/2").to_string(), "2");
    assert!(Rat::from_str("1/0").is_err());
    assert!(Rat::from_str("").is_err());
    assert!(Rat::from_str("a/b").is_err());
    assert!(Rat::from_str("1/-2").is_err());
    assert!(Rat::from_str("1.5").is_err());
}

#[test]
fn quadelem_parse_format_roundtrip() {
    let f = QuadField::new(BigInt::from(61)).unwrap();
    let x = QuadElem::new(f, rat("-5/6"), rat("1/6"));
    let s = x.to_string();
    assert_eq!(s, "-5/6+1/6*sqrt(61)");
    assert_eq!(QuadElem::from_str(&s).unwrap(), x);
    let y = QuadElem::from_str("1/2-3/4*sqrt(5)").unwrap();
    assert_eq!(y.u(), &rat("1/2"));
    assert_eq!(y.v(), &rat("-3/4"));
    assert_eq!(y.to_string(), "1/2-3/4*sqrt(5)");
    assert!(QuadElem::from_str("1+2*sqrt(4)").is_err());
    assert!(QuadElem::from_str("1+2*sqrt(0)").is_err());
    assert!(QuadElem::from_str("junk").is_err());
}

#[test]
fn cmp_sqrt_exact() {
    assert_eq!(cmp_sqrt(&rat("2"), &rat("3/2")), Ordering::Less);
    assert_eq!(cmp_sqrt(&rat("2"), &rat("7/5")), Ordering::Greater);
    assert_eq!(cmp_sqrt(&rat("9/4"), &rat("3/2")), Ordering::Equal);
    assert_eq!(cmp_sqrt(&rat("2"), &rat("-1")), Ordering::Greater);
    assert_eq!(cmp_sqrt(&rat("0"), &rat("0")), Ordering::Equal);
}

#[test]
fn quad_sign_and_abs() {
    // 1 - sqrt(2) < 0 under the principal embedding, > 0 under the conjugate.
    let f = QuadField::new(BigInt::from(2)).unwrap();
    let x = QuadElem::new(f.clone(), rat("1"), rat("-1"));
    assert_eq!(x.sign_principal().unwrap(), -1);
    assert_eq!(x.conj().sign_principal().unwrap(), 1);
    let z = QuadElem::new(f, rat("0"), rat("0"));
    assert_eq!(z.sign_principal().unwrap(), 0);
}
