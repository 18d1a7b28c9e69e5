//! The named catalog of portrait shapes and classification against it.
//!
//! Catalog adjacency data is forced by strong admissibility: every cycle
//! vertex owns exactly one tree child (its cycle predecessor supplies the
//! other in-edge), non-cycle vertices acquire children in sibling pairs, and
//! the letter variants differ by where the extra sibling pair hangs. The
//! letter assignments are pinned by the orbit-level tests downstream, which
//! regenerate each variant from its curve parametrization.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;

use crate::{CanonicalCode, FunctionalGraph, PortraitError};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PortraitLabel {
    /// No preperiodic points at all.
    Empty,
    P4_11,
    P4_2,
    P6_11,
    P6_2,
    P6_3,
    P8_211,
    P8_11a,
    P8_11b,
    P8_2a,
    P8_2b,
    P10_211a,
    P10_211b,
    P8_3,
    P8_4,
    P10_311,
    P10_32,
    /// Off-catalog shape, keyed by its canonical code.
    Other(CanonicalCode),
}

static ALL_NAMED: [PortraitLabel; 17] = [
    PortraitLabel::Empty,
    PortraitLabel::P4_11,
    PortraitLabel::P4_2,
    PortraitLabel::P6_11,
    PortraitLabel::P6_2,
    PortraitLabel::P6_3,
    PortraitLabel::P8_211,
    PortraitLabel::P8_11a,
    PortraitLabel::P8_11b,
    PortraitLabel::P8_2a,
    PortraitLabel::P8_2b,
    PortraitLabel::P10_211a,
    PortraitLabel::P10_211b,
    PortraitLabel::P8_3,
    PortraitLabel::P8_4,
    PortraitLabel::P10_311,
    PortraitLabel::P10_32,
];

impl PortraitLabel {
    pub fn all_named() -> &'static [PortraitLabel] {
        &ALL_NAMED
    }

    pub fn is_named(&self) -> bool {
        !matches!(self, PortraitLabel::Other(_))
    }

    /// Underscore-safe spelling used by command-line flags and file names.
    pub fn slug(&self) -> String {
        match self {
            PortraitLabel::Empty => "empty".into(),
            PortraitLabel::Other(code) => format!("other_{code}"),
            named => named
                .to_string()
                .replace(['(', ','], "_")
                .replace(')', ""),
        }
    }
}

impl fmt::Display for PortraitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PortraitLabel::Empty => "∅",
            PortraitLabel::P4_11 => "4(1,1)",
            PortraitLabel::P4_2 => "4(2)",
            PortraitLabel::P6_11 => "6(1,1)",
            PortraitLabel::P6_2 => "6(2)",
            PortraitLabel::P6_3 => "6(3)",
            PortraitLabel::P8_211 => "8(2,1,1)",
            PortraitLabel::P8_11a => "8(1,1)a",
            PortraitLabel::P8_11b => "8(1,1)b",
            PortraitLabel::P8_2a => "8(2)a",
            PortraitLabel::P8_2b => "8(2)b",
            PortraitLabel::P10_211a => "10(2,1,1)a",
            PortraitLabel::P10_211b => "10(2,1,1)b",
            PortraitLabel::P8_3 => "8(3)",
            PortraitLabel::P8_4 => "8(4)",
            PortraitLabel::P10_311 => "10(3,1,1)",
            PortraitLabel::P10_32 => "10(3,2)",
            PortraitLabel::Other(code) => return write!(f, "Other({code})"),
        };
        f.write_str(name)
    }
}

impl FromStr for PortraitLabel {
    type Err = PortraitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        for label in &ALL_NAMED {
            if s == label.to_string() || s == label.slug() {
                return Ok(label.clone());
            }
        }
        Err(PortraitError::UnknownLabel(s.to_string()))
    }
}

/// Successor arrays for the catalog shapes. Layout convention: cycle
/// vertices first, then their forced tree children in cycle order, then
/// outer sibling pairs.
static CATALOG: Lazy<Vec<(PortraitLabel, FunctionalGraph)>> = Lazy::new(|| {
    let shapes: &[(PortraitLabel, &[usize])] = &[
        (PortraitLabel::Empty, &[]),
        // Two fixed points, one parent each.
        (PortraitLabel::P4_11, &[0, 1, 0, 1]),
        // One 2-cycle, one parent each.
        (PortraitLabel::P4_2, &[1, 0, 0, 1]),
        // 4(1,1) plus a sibling pair under one parent.
        (PortraitLabel::P6_11, &[0, 1, 0, 1, 2, 2]),
        // 4(2) plus a sibling pair under one parent.
        (PortraitLabel::P6_2, &[1, 0, 0, 1, 2, 2]),
        // One 3-cycle, one parent each.
        (PortraitLabel::P6_3, &[1, 2, 0, 0, 1, 2]),
        // Two fixed points and a 2-cycle, one parent each.
        (PortraitLabel::P8_211, &[0, 1, 0, 1, 5, 4, 4, 5]),
        // 4(1,1) plus a sibling pair under each parent.
        (PortraitLabel::P8_11a, &[0, 1, 0, 1, 2, 2, 3, 3]),
        // 4(1,1) plus a depth-3 chain of sibling pairs on one side.
        (PortraitLabel::P8_11b, &[0, 1, 0, 1, 2, 2, 4, 4]),
        // 4(2) plus a sibling pair under each parent.
        (PortraitLabel::P8_2a, &[1, 0, 0, 1, 2, 2, 3, 3]),
        // 4(2) plus a depth-3 chain on one side.
        (PortraitLabel::P8_2b, &[1, 0, 0, 1, 2, 2, 4, 4]),
        // 8(2,1,1) plus a sibling pair under a 2-cycle parent.
        (PortraitLabel::P10_211a, &[0, 1, 0, 1, 5, 4, 4, 5, 6, 6]),
        // 8(2,1,1) plus a sibling pair under a fixed-point parent.
        (PortraitLabel::P10_211b, &[0, 1, 0, 1, 5, 4, 4, 5, 2, 2]),
        // 6(3) plus a sibling pair under one parent.
        (PortraitLabel::P8_3, &[1, 2, 0, 0, 1, 2, 3, 3]),
        // One 4-cycle, one parent each.
        (PortraitLabel::P8_4, &[1, 2, 3, 0, 0, 1, 2, 3]),
        // A 3-cycle and two fixed points, one parent each.
        (PortraitLabel::P10_311, &[1, 2, 0, 0, 1, 2, 6, 7, 6, 7]),
        // A 3-cycle and a 2-cycle, one parent each.
        (PortraitLabel::P10_32, &[1, 2, 0, 0, 1, 2, 7, 6, 6, 7]),
    ];
    shapes
        .iter()
        .map(|(label, succ)| {
            (label.clone(), FunctionalGraph::new(succ.to_vec()).unwrap())
        })
        .collect()
});

static CODE_TABLE: Lazy<HashMap<CanonicalCode, PortraitLabel>> = Lazy::new(|| {
    CATALOG
        .iter()
        .map(|(label, graph)| (graph.canonical_code(), label.clone()))
        .collect()
});

pub fn catalog_graph(label: &PortraitLabel) -> Option<&'static FunctionalGraph> {
    CATALOG.iter().find(|(l, _)| l == label).map(|(_, g)| g)
}

/// Matches the graph's canonical code against the catalog; off-catalog
/// shapes come back as `Other` carrying their code.
pub fn classify(g: &FunctionalGraph) -> PortraitLabel {
    let code = g.canonical_code();
    CODE_TABLE
        .get(&code)
        .cloned()
        .unwrap_or(PortraitLabel::Other(code))
}

/// Injective map from `inner`'s vertices into `outer`'s that commutes with
/// the successor function.
fn embeds(inner: &FunctionalGraph, outer: &FunctionalGraph) -> bool {
    fn backtrack(
        inner: &FunctionalGraph,
        outer: &FunctionalGraph,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == inner.len() {
            return true;
        }
        'candidates: for cand in 0..outer.len() {
            if used[cand] {
                continue;
            }
            // Out-edge of v against already-assigned endpoints.
            let t = inner.succ()[v];
            if t == v {
                if outer.succ()[cand] != cand {
                    continue;
                }
            } else if let Some(im) = assign[t] {
                if outer.succ()[cand] != im {
                    continue;
                }
            }
            // In-edges from already-assigned vertices.
            for u in 0..v {
                if inner.succ()[u] == v && outer.succ()[assign[u].unwrap()] != cand {
                    continue 'candidates;
                }
            }
            assign[v] = Some(cand);
            used[cand] = true;
            if backtrack(inner, outer, assign, used, v + 1) {
                return true;
            }
            assign[v] = None;
            used[cand] = false;
        }
        false
    }
    let mut assign = vec![None; inner.len()];
    let mut used = vec![false; outer.len()];
    backtrack(inner, outer, &mut assign, &mut used, 0)
}

static CONTAINMENT: Lazy<HashMap<(usize, usize), bool>> = Lazy::new(|| {
    let mut table = HashMap::new();
    for (i, (_, outer)) in CATALOG.iter().enumerate() {
        for (j, (_, inner)) in CATALOG.iter().enumerate() {
            table.insert((i, j), embeds(inner, outer));
        }
    }
    table
});

/// Subgraph containment on named catalog shapes, precomputed by embedding
/// search.
pub fn catalog_contains(
    outer: &PortraitLabel,
    inner: &PortraitLabel,
) -> Result<bool, PortraitError> {
    let index = |l: &PortraitLabel| {
        ALL_NAMED
            .iter()
            .position(|x| x == l)
            .ok_or(PortraitError::UnnamedLabel)
    };
    Ok(CONTAINMENT[&(index(outer)?, index(inner)?)])
}
