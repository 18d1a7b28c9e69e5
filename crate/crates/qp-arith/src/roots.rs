//! Integer square root certificates, exact square-root comparisons, certified
//! rational bracketing of square roots, primality, and factorization.

use crate::{ArithError, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Exact square test. Returns the nonnegative root when `n` is a perfect
/// square, `None` when it is not, and an error for negative input.
pub fn is_perfect_square(n: &BigInt) -> Result<Option<BigInt>, ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSquareInput(n.clone()));
    }
    // Quadratic-residue sieve mod 64 rejects most non-squares cheaply.
    let low = (n % 64u32).to_u32().unwrap();
    const QR64: u64 = {
        let mut mask = 0u64;
        let mut i = 0u64;
        while i < 64 {
            mask |= 1 << ((i * i) % 64);
            i += 1;
        }
        mask
    };
    if QR64 >> low & 1 == 0 {
        return Ok(None);
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Ok(Some(r))
    } else {
        Ok(None)
    }
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn rat_sqrt(x: &Rat) -> Result<Option<Rat>, ArithError> {
    if x.is_negative() {
        return Err(ArithError::NegativeSquareInput(x.num().clone()));
    }
    let rn = match is_perfect_square(x.num())? {
        Some(r) => r,
        None => return Ok(None),
    };
    let rd = match is_perfect_square(x.den())? {
        Some(r) => r,
        None => return Ok(None),
    };
    Ok(Some(Rat::new(rn, rd).expect("nonzero denominator root")))
}

/// Compares sqrt(d) with the rational r, exactly. Requires d >= 0.
pub fn cmp_sqrt(d: &Rat, r: &Rat) -> Ordering {
    assert!(!d.is_negative(), "cmp_sqrt needs a nonnegative radicand");
    if r.is_negative() {
        return Ordering::Greater;
    }
    d.cmp(&r.square())
}

/// Certified bracketing interval for sqrt(x), x > 0: returns (lo, hi) with
/// lo <= sqrt(x) <= hi and hi - lo <= rel_tol * lo.
pub fn sqrt_interval(x: &Rat, rel_tol: &Rat) -> (Rat, Rat) {
    assert!(x.is_positive(), "sqrt_interval needs positive input");
    assert!(rel_tol.is_positive(), "tolerance must be positive");
    // sqrt(n/d) = sqrt(n d)/d; isqrt(n d * 4^k) brackets with relative
    // width 1/t, so grow k until t >= 1/rel_tol.
    let nd = x.num() * x.den();
    let mut k: u32 = 8;
    loop {
        let scaled = &nd << (2 * k);
        let t = scaled.sqrt();
        // t <= sqrt(scaled) < t+1.
        let width_ok = {
            // 1/t <= rel_tol  <=>  den(tol) <= t * num(tol)
            rel_tol.den() <= &(&t * rel_tol.num())
        };
        if width_ok && !t.is_zero() {
            let denom = x.den() * (BigInt::one() << k);
            let lo = Rat::new(t.clone(), denom.clone()).unwrap();
            let hi = Rat::new(t + 1, denom).unwrap();
            return (lo, hi);
        }
        k = k.saturating_mul(2).max(k + 8);
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These witnesses decide primality for every n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Factorization of |n| into prime powers, ascending by prime.
/// Trial division up to 2^20, then Pollard rho on the cofactor.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n <= BigInt::one() {
        return out;
    }
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += e;
        } else {
            out.push((p, e));
        }
    };
    let mut p = BigInt::from(2);
    while &(&p * &p) <= &n && p < BigInt::from(1u64 << 20) {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            push(p.clone(), e, &mut out);
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if let Some(m64) = m.to_u64() {
                if is_prime_u64(m64) {
                    push(m.clone(), 1, &mut out);
                    continue;
                }
            } else if is_probable_prime_big(&m) {
                push(m.clone(), 1, &mut out);
                continue;
            }
            let d = pollard_rho(&m);
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn is_probable_prime_big(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let pb = BigInt::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    // Fixed-seed witnesses keep the factorization deterministic.
    let mut rng: rand_stub::Lcg = rand_stub::Lcg::new(0x9e3779b97f4a7c15);
    'witness: for _ in 0..32 {
        let a = rng.gen_below(&n_minus_1);
        if a < BigInt::from(2) {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Minimal deterministic generator for Miller-Rabin witnesses and rho offsets;
/// avoids threading an external RNG through exact code paths.
mod rand_stub {
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub struct Lcg(u64);

    impl Lcg {
        pub fn new(seed: u64) -> Self {
            Lcg(seed | 1)
        }

        pub fn next_u64(&mut self) -> u64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            self.0 ^ (self.0 >> 31)
        }

        pub fn gen_below(&mut self, bound: &BigInt) -> BigInt {
            let bits = bound.bits() as usize;
            let words = bits / 64 + 1;
            let mut acc = BigInt::zero();
            for _ in 0..words {
                acc = (acc << 64) + BigInt::from(self.next_u64());
            }
            acc % bound
        }
    }
}

fn pollard_rho(n: &BigInt) -> BigInt {
    use num_integer::Integer as _;
    if (n % BigInt::from(2)).is_zero() {
        return BigInt::from(2);
    }
    let mut rng = rand_stub::Lcg::new(0xdeadbeefcafef00d);
    loop {
        let c = rng.gen_below(&(n - 2)) + 1;
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = rng.gen_below(n);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x >= y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && !d.is_zero() && &d != n {
            return d;
        }
    }
}

/// Squarefree core and cofactor: n = core * square, core squarefree.
/// Sign stays on the core.
pub fn squarefree_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "squarefree_part of zero");
    let mut core = BigInt::one();
    let mut sq = BigInt::one();
    for (p, e) in factorize(n) {
        if e % 2 == 1 {
            core *= &p;
        }
        sq *= p.pow(e / 2);
    }
    if n.is_negative() {
        core = -core;
    }
    (core, sq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
    }

    #[test]
    fn factorization_roundtrip() {
        for n in [2i64, 12, 97, 1024, 600851475143, -360] {
            let n = BigInt::from(n);
            let f = factorize(&n);
            let prod: BigInt = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(prod, n.abs());
            for (p, _) in &f {
                assert!(is_prime_u64(p.to_u64().unwrap()));
            }
        }
    }

    #[test]
    fn squarefree_core() {
        let (core, sq) = squarefree_part(&BigInt::from(360));
        assert_eq!(core, BigInt::from(10));
        assert_eq!(sq, BigInt::from(6));
        let (core, sq) = squarefree_part(&BigInt::from(-4));
        assert_eq!(core, BigInt::from(-1));
        assert_eq!(sq, BigInt::from(2));
    }

    #[test]
    fn sqrt_interval_tight() {
        let tol = Rat::new(BigInt::one(), BigInt::from(10u64.pow(13))).unwrap();
        let x = Rat::new(BigInt::from(2), BigInt::one()).unwrap();
        let (lo, hi) = sqrt_interval(&x, &tol);
        assert!(lo.square() <= x && x <= hi.square());
        assert!(&hi - &lo <= &tol * &lo);
    }
}
