//! Complete enumeration of preperiodic points of the quadratic family
//! f(z) = z^2 + c over the rationals and over quadratic fields.
//!
//! A point is preperiodic when its forward orbit is finite, i.e. when
//! f^(m+n)(x) = f^m(x) for some preperiod m >= 0 and period n >= 1. All
//! routines here are exact: candidate points are confined to an explicit
//! lattice box by valuation bounds at every finite place and by the escape
//! radius at the archimedean places, then each candidate's orbit is decided
//! by exact iteration with an escape certificate. The result is the full
//! preperiodic set, packaged as a functional graph ready for portrait
//! classification.

mod fields;
mod quadratic;
mod rational;

use qp_arith::{QuadElem, Rat};
use qp_portraits::{FunctionalGraph, PortraitLabel};
use serde::Serialize;
use std::fmt;

pub use fields::{quad_fields_with_new_points, NewFieldPortrait};
pub use quadratic::{portrait_quad, preper_points_quad};
pub use rational::{portrait_rational, preper_points_rational};

/// Errors from the field-discovery search and its consistency checks.
#[derive(Debug, thiserror::Error)]
pub enum PreperError {
    #[error(transparent)]
    Arith(#[from] qp_arith::ArithError),
    #[error(transparent)]
    Dynatomic(#[from] qp_dynatomic::DynError),
    #[error(transparent)]
    Portrait(#[from] qp_portraits::PortraitError),
    /// A point passed the orbit test but its minimal polynomial failed the
    /// independent divisibility cross-check; this indicates a bug, so the
    /// caller gets full diagnostics instead of a silently wrong answer.
    #[error("divisibility cross-check failed: {0}")]
    CrossCheck(String),
}

/// An exact preperiodic value: rational, or quadratic over a named field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointValue {
    Rational(Rat),
    Quadratic(QuadElem),
}

impl fmt::Display for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointValue::Rational(r) => write!(f, "{r}"),
            PointValue::Quadratic(q) => write!(f, "{q}"),
        }
    }
}

/// One preperiodic point together with its minimal orbit data:
/// f^(preperiod + period)(x) = f^(preperiod)(x) with both parameters minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoint {
    pub value: PointValue,
    pub preperiod: u32,
    pub period: u32,
}

/// The full preperiodic set of one map: points in a fixed sorted order and
/// the induced functional graph (vertex i maps to its image's index).
#[derive(Clone, Debug)]
pub struct PreperSet {
    pub points: Vec<OrbitPoint>,
    pub graph: FunctionalGraph,
}

#[derive(Serialize)]
struct PointJson {
    value: String,
    preperiod: u32,
    period: u32,
}

#[derive(Serialize)]
struct SetJson {
    label: String,
    points: Vec<PointJson>,
    edges: Vec<(usize, usize)>,
}

impl PreperSet {
    /// Serialize as JSON: exact value strings, orbit data per point, edges by
    /// point index, and the portrait label in display form.
    pub fn to_json(&self, label: &PortraitLabel) -> String {
        let points = self
            .points
            .iter()
            .map(|p| PointJson {
                value: p.value.to_string(),
                preperiod: p.preperiod,
                period: p.period,
            })
            .collect();
        let edges = self
            .graph
            .succ()
            .iter()
            .enumerate()
            .map(|(i, &j)| (i, j))
            .collect();
        let doc = SetJson {
            label: label.to_string(),
            points,
            edges,
        };
        serde_json::to_string(&doc).expect("serializing plain strings cannot fail")
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Shared orbit bookkeeping: given the sorted point values and the map
/// x -> index of f(x), assemble the graph and verify forward closure.
fn assemble<T: Clone + Eq + std::hash::Hash + fmt::Display>(
    values: Vec<T>,
    orbit_data: impl Fn(&T) -> (u32, u32),
    image: impl Fn(&T) -> T,
    wrap: impl Fn(T) -> PointValue,
) -> PreperSet {
    let index: std::collections::HashMap<T, usize> = values
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut succ = Vec::with_capacity(values.len());
    let mut labels = Vec::with_capacity(values.len());
    let mut points = Vec::with_capacity(values.len());
    for v in &values {
        let img = image(v);
        let j = *index
            .get(&img)
            .expect("preperiodic set must be forward closed");
        succ.push(j);
        labels.push(Some(v.to_string()));
        let (m, n) = orbit_data(v);
        points.push(OrbitPoint {
            value: wrap(v.clone()),
            preperiod: m,
            period: n,
        });
    }
    let graph = FunctionalGraph::with_labels(succ, labels)
        .expect("indices constructed against the same vertex list");
    PreperSet { points, graph }
}

/// First-repeat orbit walk. `step` returns `None` when the value leaves the
/// candidate lattice or satisfies the escape certificate; in that case the
/// start is not preperiodic. Returns minimal (preperiod, period) otherwise.
fn orbit_profile<T: Clone + Eq + std::hash::Hash>(
    start: &T,
    step: impl Fn(&T) -> Option<T>,
    cap: usize,
) -> Option<(u32, u32)> {
    let mut pos: std::collections::HashMap<T, u32> = std::collections::HashMap::new();
    let mut x = start.clone();
    for k in 0..=cap as u32 {
        if let Some(&m) = pos.get(&x) {
            return Some((m, k - m));
        }
        pos.insert(x.clone(), k);
        x = step(&x)?;
    }
    None
}
