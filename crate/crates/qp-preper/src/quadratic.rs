//! Preperiodic points over a quadratic field K = Q(sqrt(D)).
//!
//! Every preperiodic x satisfies v_P(x) >= min(0, v_P(c)/2) at each finite
//! place P (otherwise the valuation of the orbit drops without bound), so
//! there is an explicit integer L with x in (1/L) O_K. At the archimedean
//! places the escape radius rho = 1/2 + sqrt(1/4 + |c|) bounds |x| in every
//! embedding. Together these confine all preperiodic points to a finite
//! lattice box, which is enumerated exactly; each candidate's orbit is then
//! decided by iteration with the exact escape certificate and a lattice
//! membership filter, so the walk stays inside a finite set and must either
//! repeat (preperiodic) or leave (not).

use crate::{assemble, orbit_profile, PointValue, PreperSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use qp_arith::{factorize, sqrt_interval, QuadElem, QuadField, Rat};
use qp_portraits::{classify, FunctionalGraph, PortraitLabel};
use std::collections::HashMap;

/// Multiplicity of p in n (n nonzero).
fn int_val(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

/// How a rational prime p decomposes in Q(sqrt(D)), D squarefree.
enum Splitting {
    Split,
    Inert,
    Ramified,
}

fn splitting(p: &BigInt, d: &BigInt) -> Splitting {
    let two = BigInt::from(2);
    if p == &two {
        let m8 = d.mod_floor(&BigInt::from(8));
        return if m8 == BigInt::one() {
            Splitting::Split
        } else if m8 == BigInt::from(5) {
            Splitting::Inert
        } else {
            // D = 2 or 3 mod 4: the prime 2 divides the discriminant 4D.
            Splitting::Ramified
        };
    }
    if d.mod_floor(p).is_zero() {
        return Splitting::Ramified;
    }
    let exp = (p - BigInt::one()) / &two;
    let sym = d.mod_floor(p).modpow(&exp, p);
    if sym == BigInt::one() {
        Splitting::Split
    } else {
        Splitting::Inert
    }
}

/// Smallest positive L with every preperiodic point of z^2 + c in (1/L) O_K,
/// from the place-by-place bound v_P(x) >= min(0, v_P(c)/2). Writing
/// c = (A + B sqrt(D))/C with integer A, B, C, only primes dividing C
/// contribute, and the exact valuation of the numerator at each place over p
/// comes from the trace 2A and the norm A^2 - B^2 D.
fn denominator_bound(c: &QuadElem) -> BigInt {
    let d = c.field().d();
    let cden = c.u().den().lcm(c.v().den());
    let a = (c.u() * &Rat::from_bigint(cden.clone())).num().clone();
    let b = (c.v() * &Rat::from_bigint(cden.clone())).num().clone();
    if a.is_zero() && b.is_zero() {
        return BigInt::one();
    }
    let norm_num = &a * &a - &b * &b * d;
    let trace_num = BigInt::from(2) * &a;
    let mut l = BigInt::one();
    for (p, mult) in factorize(&cden) {
        let m = mult as i64;
        let k = match splitting(&p, d) {
            Splitting::Ramified => {
                // v_P(numerator) = v_p(norm), uniformizer has v_P = 1, e = 2.
                let va = int_val(&norm_num, &p);
                ceil_div(2 * m - va, 4)
            }
            Splitting::Inert => {
                let va = int_val(&norm_num, &p) / 2;
                ceil_div(m - va, 2)
            }
            Splitting::Split => {
                let vn = int_val(&norm_num, &p);
                let vt = if trace_num.is_zero() {
                    i64::MAX / 2
                } else {
                    int_val(&trace_num, &p)
                };
                let va = vt.min(vn / 2);
                ceil_div(m - va, 2)
            }
        };
        if k > 0 {
            l *= p.pow(k as u32);
        }
    }
    l
}

/// The lattice (1/L) O_K, with the half-integer basis when D = 1 mod 4.
struct Lattice {
    field: QuadField,
    l: Rat,
    half: bool,
}

impl Lattice {
    fn new(field: QuadField, l: BigInt) -> Self {
        let half = field.d().mod_floor(&BigInt::from(4)) == BigInt::one();
        Lattice {
            field,
            l: Rat::from_bigint(l),
            half,
        }
    }

    /// x = (r + s*omega)/L where omega = sqrt(D) or (1 + sqrt(D))/2.
    fn element(&self, r: i64, s: i64) -> QuadElem {
        let (rr, ss) = (Rat::from_int(r), Rat::from_int(s));
        if self.half {
            let u = &(&rr + &(&ss / &Rat::from_int(2))) / &self.l;
            let v = &(&ss / &Rat::from_int(2)) / &self.l;
            QuadElem::new(self.field.clone(), u, v)
        } else {
            QuadElem::new(self.field.clone(), &rr / &self.l, &ss / &self.l)
        }
    }

    fn contains(&self, x: &QuadElem) -> bool {
        if self.half {
            let two = Rat::from_int(2);
            (&(x.u() * &self.l) * &two).is_integer()
                && (&(x.v() * &self.l) * &two).is_integer()
                && (&(x.u() - x.v()) * &self.l).is_integer()
        } else {
            (x.u() * &self.l).is_integer() && (x.v() * &self.l).is_integer()
        }
    }
}

fn to_small(n: &BigInt, what: &str) -> i64 {
    n.to_i64()
        .filter(|v| v.abs() < 50_000_000)
        .unwrap_or_else(|| panic!("candidate box too large: {what} = {n}"))
}

/// All preperiodic points of f(z) = z^2 + c in the field of c, sorted by
/// (rational part, sqrt coefficient), with minimal orbit data and the
/// induced functional graph.
pub fn preper_points_quad(c: &QuadElem) -> PreperSet {
    let field = c.field().clone();
    let d = field.d().clone();
    let lattice = Lattice::new(field.clone(), denominator_bound(c));
    let l = lattice.l.clone();

    // Rational upper bound for the escape radius, uniform over embeddings:
    // |c|_sigma <= |u| + |v| sqrt(|D|) and rho = 1/2 + sqrt(1/4 + |c|).
    let tol = Rat::new(BigInt::one(), BigInt::from(1000)).expect("nonzero");
    let sqrt_absd_hi = sqrt_interval(&Rat::from_bigint(d.abs()), &tol).1;
    let c_hi = &c.u().abs() + &(&c.v().abs() * &sqrt_absd_hi);
    let quarter = Rat::new(BigInt::one(), BigInt::from(4)).expect("nonzero");
    let rho_hi = &Rat::new(BigInt::one(), BigInt::from(2)).expect("nonzero")
        + &sqrt_interval(&(&quarter + &c_hi), &tol).1;

    // Box bounds: the sqrt-coefficient of x is s/(2L) (half basis) or s/L,
    // and |coeff| <= 2 rho / sqrt(|D|) covers both the real embedding-pair
    // spread and the imaginary part; the rational part is bounded by rho.
    let sqrt_absd_lo = sqrt_interval(&Rat::from_bigint(d.abs()), &tol).0;
    let scale = if lattice.half {
        Rat::from_int(2)
    } else {
        Rat::from_int(1)
    };
    let s_max = to_small(
        &(&(&(&scale * &l) * &rho_hi) / &sqrt_absd_lo).ceil_int(),
        "sqrt-coefficient range",
    ) + 1;
    let r_max = to_small(&(&l * &rho_hi).ceil_int(), "rational range") + s_max + 1;

    let box_count = (2 * s_max as usize + 1) * (2 * r_max as usize + 1);
    let step = |x: &QuadElem| {
        let fx = x.step(c);
        (lattice.contains(&fx) && !fx.escapes(c)).then_some(fx)
    };

    let mut found: Vec<(QuadElem, (u32, u32))> = Vec::new();
    for s in -s_max..=s_max {
        for r in -r_max..=r_max {
            let x = lattice.element(r, s);
            if x.escapes(c) {
                continue;
            }
            if let Some(mn) = orbit_profile(&x, step, box_count + 2) {
                found.push((x, mn));
            }
        }
    }
    found.sort_by(|a, b| (a.0.u(), a.0.v()).cmp(&(b.0.u(), b.0.v())));

    let orbit: HashMap<QuadElem, (u32, u32)> = found.iter().cloned().collect();
    let values: Vec<QuadElem> = found.into_iter().map(|(x, _)| x).collect();
    assemble(values, |x| orbit[x], |x| x.step(c), PointValue::Quadratic)
}

/// The preperiodic portrait over the field of c: graph plus catalog label.
pub fn portrait_quad(c: &QuadElem) -> (FunctionalGraph, PortraitLabel) {
    let set = preper_points_quad(c);
    let label = classify(&set.graph);
    (set.graph, label)
}
