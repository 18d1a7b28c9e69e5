//! Discovery of the quadratic fields where a rational parameter picks up new
//! preperiodic points.
//!
//! A quadratic preperiodic point x has rational trace s = x + conj(x) and
//! norm p = x * conj(x), and the same valuation and escape bounds that
//! confine x confine (s, p) to an explicit rational box: writing
//! den(c) = prod q^(m_q) and Q = prod q^(ceil(m_q / 2)), every admissible
//! pair has den(s) | 2Q, den(p) | 4Q^2, |s| <= 2 rho and |p| <= rho^2. The
//! box is enumerated exactly; each irreducible pair is orbit-tested in its
//! field, and each discovered field is re-enumerated with the unconditional
//! lattice search so the reported sets are complete. Every new point is then
//! cross-checked independently: its minimal polynomial must divide the
//! specialized dynatomic polynomial for its orbit pattern.

use crate::{
    preper_points_quad, preper_points_rational, PointValue, PreperError, PreperSet,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use qp_arith::{
    factorize, is_perfect_square, sqrt_interval, squarefree_part, PolyQ, QuadElem, QuadField, Rat,
};
use qp_dynatomic::{dynatomic, fc_iterate};
use std::collections::{BTreeSet, HashSet};

/// Orbit-pattern caps for the independent divisibility cross-check; points
/// beyond them are reported in `beyond_caps` rather than dropped.
const PREPERIOD_CAP: u32 = 4;
const PERIOD_CAP: u32 = 6;

/// One discovered field: the complete preperiodic set of c over it, plus
/// flags for any point whose orbit pattern exceeds the cross-check caps.
pub struct NewFieldPortrait {
    pub field: QuadField,
    pub set: PreperSet,
    pub beyond_caps: Vec<String>,
}

/// Horner composition outer(inner) for dense rational polynomials.
fn compose(outer: &PolyQ, inner: &PolyQ) -> PolyQ {
    let mut acc = PolyQ::new(Vec::new());
    for a in outer.coeffs().iter().rev() {
        acc = acc.mul(inner).add(&PolyQ::new(vec![a.clone()]));
    }
    acc
}

/// The dynatomic polynomial for orbit pattern (m, n) specialized at c.
fn specialized_pattern_poly(m: u32, n: u32, c: &Rat) -> Result<PolyQ, PreperError> {
    let phi = dynatomic(n)?.specialize(c);
    if m == 0 {
        return Ok(phi);
    }
    let fm = fc_iterate(m)?.specialize(c);
    let fm1 = if m == 1 {
        PolyQ::new(vec![Rat::from_int(0), Rat::from_int(1)])
    } else {
        fc_iterate(m - 1)?.specialize(c)
    };
    let num = compose(&phi, &fm);
    let den = compose(&phi, &fm1);
    Ok(num.div_exact(&den)?)
}

/// Independent verification that x (quadratic, preperiodic with minimal
/// pattern (m, n)) is a root of the specialized dynatomic polynomial: its
/// minimal polynomial z^2 - s z + p must divide it exactly.
fn cross_check(x: &QuadElem, m: u32, n: u32, c: &Rat) -> Result<(), PreperError> {
    let s = x.u() + x.u();
    let p = x.norm();
    let minpoly = PolyQ::new(vec![p, -&s, Rat::from_int(1)]);
    let pattern = specialized_pattern_poly(m, n, c)?;
    let (_, rem) = pattern.div_rem(&minpoly)?;
    if !rem.is_zero() {
        return Err(PreperError::CrossCheck(format!(
            "point {x} with pattern ({m},{n}) at parameter {c}: \
             minimal polynomial does not divide the dynatomic specialization \
             (remainder degree {:?})",
            rem.degree()
        )));
    }
    Ok(())
}

/// All quadratic fields over which c acquires preperiodic points beyond the
/// rational ones, each with its complete preperiodic set. Fields are sorted
/// by their squarefree core. Points whose orbit pattern exceeds the
/// cross-check caps are flagged per field, never dropped.
pub fn quad_fields_with_new_points(c: &Rat) -> Result<Vec<NewFieldPortrait>, PreperError> {
    let baseline = preper_points_rational(c).points.len();

    // Denominator scale: den(s) | 2Q, den(p) | 4Q^2.
    let q_scale: BigInt = factorize(c.den())
        .into_iter()
        .map(|(p, m)| p.pow(m.div_ceil(2)))
        .product();
    let s_den = BigInt::from(2) * &q_scale;
    let p_den = BigInt::from(4) * &q_scale * &q_scale;

    // Escape radius upper bound (c is rational, both embeddings agree).
    let tol = Rat::new(BigInt::one(), BigInt::from(1000)).expect("nonzero");
    let quarter = Rat::new(BigInt::one(), BigInt::from(4)).expect("nonzero");
    let half = Rat::new(BigInt::one(), BigInt::from(2)).expect("nonzero");
    let rho = &half + &sqrt_interval(&(&quarter + &c.abs()), &tol).1;
    let two_rho = &rho + &rho;
    let rho_sq = &rho * &rho;

    let i_max = (&two_rho * &Rat::from_bigint(s_den.clone())).ceil_int();
    let j_max = (&rho_sq * &Rat::from_bigint(p_den.clone())).ceil_int();
    let i_max: i64 = i_max.try_into().expect("trace box fits i64");
    let j_max: i64 = j_max.try_into().expect("norm box fits i64");

    // A preperiodic orbit value y obeys the same trace/norm denominator
    // bounds as the starting point, so one failed check certifies escape.
    let s_den_rat = Rat::from_bigint(s_den.clone());
    let p_den_rat = Rat::from_bigint(p_den.clone());
    let in_box = |y: &QuadElem| {
        (&(y.u() + y.u()) * &s_den_rat).is_integer() && (&y.norm() * &p_den_rat).is_integer()
    };

    let mut cores: BTreeSet<BigInt> = BTreeSet::new();
    for i in -i_max..=i_max {
        let s = Rat::new(BigInt::from(i), s_den.clone()).expect("positive den");
        for j in -j_max..=j_max {
            let p = Rat::new(BigInt::from(j), p_den.clone()).expect("positive den");
            // Discriminant of z^2 - s z + p; skip rational or repeated roots.
            let disc = &(&s * &s) - &(&Rat::from_int(4) * &p);
            if disc.num().is_zero() {
                continue;
            }
            // Archimedean filter: both roots within the escape radius.
            if disc.num().is_positive() {
                let slack = &two_rho - &s.abs();
                if slack.num().is_negative() || &disc > &(&slack * &slack) {
                    continue;
                }
            } else if &(&(&s * &s) + &disc.abs()) > &(&Rat::from_int(4) * &rho_sq) {
                continue;
            }
            let disc_int = disc.num() * disc.den();
            if is_perfect_square(&disc_int.abs()).ok().flatten().is_some()
                && disc_int.is_positive()
            {
                continue;
            }
            let core = squarefree_part(&disc_int).0;
            if cores.contains(&core) {
                continue;
            }
            // Orbit test for x = (s + sqrt(disc))/2 in Q(sqrt(core)).
            let field = QuadField::new(core.clone())?;
            let Some(root) = QuadElem::sqrt_of_rat_in_field(&field, &disc) else {
                continue;
            };
            let x = QuadElem::new(
                field.clone(),
                &s / &Rat::from_int(2),
                &(root.v().clone()) / &Rat::from_int(2),
            );
            let cc = QuadElem::from_rat(field.clone(), c.clone());
            let mut visited: HashSet<QuadElem> = HashSet::new();
            let mut y = x;
            for _ in 0..64 {
                if y.escapes(&cc) || !in_box(&y) {
                    break;
                }
                if !visited.insert(y.clone()) {
                    cores.insert(core.clone());
                    break;
                }
                y = y.step(&cc);
            }
        }
    }

    // Re-enumerate each discovered field unconditionally and keep those with
    // genuinely new points; cross-check every new point within the caps.
    let mut out = Vec::new();
    for core in cores {
        let field = QuadField::new(core)?;
        let cc = QuadElem::from_rat(field.clone(), c.clone());
        let set = preper_points_quad(&cc);
        if set.points.len() <= baseline {
            continue;
        }
        let mut beyond_caps = Vec::new();
        for pt in &set.points {
            let PointValue::Quadratic(x) = &pt.value else {
                continue;
            };
            if x.v().num().is_zero() {
                continue;
            }
            if pt.preperiod > PREPERIOD_CAP || pt.period > PERIOD_CAP {
                beyond_caps.push(format!(
                    "{x} has preperiod {} and period {}",
                    pt.preperiod, pt.period
                ));
            } else {
                cross_check(x, pt.preperiod, pt.period, c)?;
            }
        }
        out.push(NewFieldPortrait {
            field,
            set,
            beyond_caps,
        });
    }
    Ok(out)
}
