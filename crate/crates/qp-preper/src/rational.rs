//! Rational preperiodic points.
//!
//! For x = e/d in lowest terms to be preperiodic under z^2 + c, every prime
//! power in d is forced: at a prime p with v_p(c) = -m < 0 the orbit bound
//! v_p(x) >= -m/2 must hold with equality (otherwise v_p drops without
//! bound), so den(c) must be a perfect square d^2 and den(x) = d exactly.
//! On top of that the archimedean escape radius |x| <= 1/2 + sqrt(1/4 + |c|)
//! confines the numerator: e^2 <= |e| d + |num(c)|. That finite candidate
//! set contains every preperiodic point, and orbits of candidates are
//! decided by exact iteration inside the set.

use crate::{assemble, orbit_profile, PointValue, PreperSet};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use qp_arith::{is_perfect_square, Rat};
use qp_portraits::{classify, FunctionalGraph, PortraitLabel};
use std::collections::HashSet;

/// All rational preperiodic points of f(z) = z^2 + c, sorted increasingly,
/// with minimal orbit data and the induced functional graph.
pub fn preper_points_rational(c: &Rat) -> PreperSet {
    let empty = PreperSet {
        points: Vec::new(),
        graph: FunctionalGraph::empty(),
    };
    let Some(d) = is_perfect_square(c.den()).expect("denominators are positive") else {
        return empty;
    };
    let a_abs = c.num().abs();

    // Candidate numerators: e^2 <= |e| d + |a|, gcd(e, d) = 1.
    let mut candidates: HashSet<Rat> = HashSet::new();
    let mut e: BigInt = BigInt::zero();
    loop {
        if &e * &e > &e * &d + &a_abs {
            break;
        }
        if num_integer::gcd(e.clone(), d.clone()).is_one() {
            for signed in [e.clone(), -&e] {
                candidates.insert(Rat::new(signed, d.clone()).expect("d > 0"));
                if e.is_zero() {
                    break;
                }
            }
        }
        e += 1;
    }

    // A preperiodic orbit stays inside the candidate set, so membership is
    // the step filter and the set size caps the walk length.
    let cap = candidates.len() + 1;
    let step = |x: &Rat| {
        let fx = &(x * x) + c;
        candidates.contains(&fx).then_some(fx)
    };
    let mut found: Vec<(Rat, (u32, u32))> = candidates
        .iter()
        .filter_map(|x| orbit_profile(x, step, cap).map(|mn| (x.clone(), mn)))
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));

    let orbit: std::collections::HashMap<Rat, (u32, u32)> = found.iter().cloned().collect();
    let values: Vec<Rat> = found.into_iter().map(|(x, _)| x).collect();
    assemble(
        values,
        |x| orbit[x],
        |x| &(x * x) + c,
        PointValue::Rational,
    )
}

/// The rational preperiodic portrait: functional graph plus catalog label.
pub fn portrait_rational(c: &Rat) -> (FunctionalGraph, PortraitLabel) {
    let set = preper_points_rational(c);
    let label = classify(&set.graph);
    (set.graph, label)
}
