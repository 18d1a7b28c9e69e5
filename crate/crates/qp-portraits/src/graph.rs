//! The functional-graph type and its structural operations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use qp_dynatomic::cycle_bound_r;
use serde::{Deserialize, Serialize};

use crate::PortraitError;

/// Finite directed graph in which every vertex has exactly one out-edge.
/// Vertices optionally carry display payloads (orbit point values).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionalGraph {
    succ: Vec<usize>,
    labels: Vec<Option<String>>,
}

/// Relabeling-invariant key: equal codes iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FunctionalGraph {
    pub fn new(succ: Vec<usize>) -> Result<Self, PortraitError> {
        let labels = vec![None; succ.len()];
        Self::with_labels(succ, labels)
    }

    pub fn with_labels(
        succ: Vec<usize>,
        labels: Vec<Option<String>>,
    ) -> Result<Self, PortraitError> {
        assert_eq!(succ.len(), labels.len());
        let len = succ.len();
        for (vertex, &target) in succ.iter().enumerate() {
            if target >= len {
                return Err(PortraitError::BadEdge { vertex, target, len });
            }
        }
        Ok(FunctionalGraph { succ, labels })
    }

    pub fn empty() -> Self {
        FunctionalGraph { succ: Vec::new(), labels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn succ(&self) -> &[usize] {
        &self.succ
    }

    pub fn vertex_label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn set_vertex_label(&mut self, v: usize, label: &str) {
        self.labels[v] = Some(label.to_string());
    }

    /// The cycles of the graph, each listed in successor order. Every
    /// vertex of a finite out-degree-1 graph feeds into exactly one cycle.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        // 0 = unseen, 1 = on the current walk, 2 = settled.
        let mut color = vec![0u8; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            while color[v] == 0 {
                color[v] = 1;
                path.push(v);
                v = self.succ[v];
            }
            if color[v] == 1 {
                let pos = path.iter().position(|&u| u == v).unwrap();
                cycles.push(path[pos..].to_vec());
            }
            for u in path {
                color[u] = 2;
            }
        }
        cycles
    }

    fn on_cycle_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        for cycle in self.cycles() {
            for v in cycle {
                mask[v] = true;
            }
        }
        mask
    }

    /// Rooted-tree encodings for every vertex, considering only non-cycle
    /// in-edges: `enc(v) = "(" sorted child encodings ")"`.
    fn tree_encodings(&self) -> Vec<Vec<u8>> {
        let n = self.len();
        let on_cycle = self.on_cycle_mask();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            if !on_cycle[v] {
                children[self.succ[v]].push(v);
            }
        }
        let mut pending: Vec<usize> = children.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..n).filter(|&v| pending[v] == 0).collect();
        let mut enc: Vec<Option<Vec<u8>>> = vec![None; n];
        while let Some(v) = ready.pop() {
            let mut parts: Vec<Vec<u8>> = children[v]
                .iter()
                .map(|&u| enc[u].clone().expect("children encoded first"))
                .collect();
            parts.sort();
            let mut code = Vec::with_capacity(2 + parts.iter().map(Vec::len).sum::<usize>());
            code.push(b'(');
            for p in parts {
                code.extend_from_slice(&p);
            }
            code.push(b')');
            enc[v] = Some(code);
            if !on_cycle[v] {
                let parent = self.succ[v];
                pending[parent] -= 1;
                if pending[parent] == 0 {
                    ready.push(parent);
                }
            }
        }
        enc.into_iter().map(|e| e.expect("all vertices encoded")).collect()
    }

    /// Relabeling-invariant code: trees by sorted recursive encoding, each
    /// cycle by the lexicographically minimal rotation of its tree codes,
    /// the graph by its sorted cycle codes.
    pub fn canonical_code(&self) -> CanonicalCode {
        let enc = self.tree_encodings();
        let mut cycle_codes: Vec<Vec<u8>> = Vec::new();
        for cycle in self.cycles() {
            let seq: Vec<&Vec<u8>> = cycle.iter().map(|&v| &enc[v]).collect();
            let len = seq.len();
            let best = (0..len)
                .map(|r| {
                    let mut rot: Vec<&Vec<u8>> = Vec::with_capacity(len);
                    rot.extend_from_slice(&seq[r..]);
                    rot.extend_from_slice(&seq[..r]);
                    rot
                })
                .min()
                .unwrap();
            let mut code = vec![b'['];
            for t in best {
                code.extend_from_slice(t);
                code.push(b'|');
            }
            code.push(b']');
            cycle_codes.push(code);
        }
        cycle_codes.sort();
        CanonicalCode(cycle_codes.concat())
    }

    fn in_degrees(&self) -> Vec<usize> {
        let mut indeg = vec![0usize; self.len()];
        for &t in &self.succ {
            indeg[t] += 1;
        }
        indeg
    }

    /// Serializes as `{"vertices": [...], "edges": [[i, succ(i)], ...],
    /// "label": "..."}` with empty strings for unlabeled vertices.
    pub fn to_json(&self, label: &crate::PortraitLabel) -> String {
        let doc = GraphJson {
            vertices: self
                .labels
                .iter()
                .map(|l| l.clone().unwrap_or_default())
                .collect(),
            edges: self.succ.iter().enumerate().map(|(i, &j)| (i, j)).collect(),
            label: label.to_string(),
        };
        serde_json::to_string(&doc).expect("serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    label: String,
}

/// Parses the JSON interchange format back into a graph plus its label
/// string; rejects anything that is not a total out-degree-1 graph.
pub fn parse_graph_json(text: &str) -> Result<(FunctionalGraph, String), PortraitError> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| PortraitError::BadJson(e.to_string()))?;
    let n = doc.vertices.len();
    let mut succ: Vec<Option<usize>> = vec![None; n];
    for (i, j) in doc.edges {
        if i >= n || j >= n {
            return Err(PortraitError::BadJson(format!(
                "edge ({i}, {j}) outside {n} vertices"
            )));
        }
        if succ[i].replace(j).is_some() {
            return Err(PortraitError::BadJson(format!("vertex {i} has two out-edges")));
        }
    }
    let succ: Vec<usize> = succ
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or(PortraitError::BadJson(format!("vertex {i} has no out-edge"))))
        .collect::<Result<_, _>>()?;
    let labels = doc
        .vertices
        .into_iter()
        .map(|s| if s.is_empty() { None } else { Some(s) })
        .collect();
    let graph = FunctionalGraph::with_labels(succ, labels)?;
    Ok((graph, doc.label))
}

pub struct AdmissibilityReport {
    pub admissible: bool,
    pub violations: Vec<String>,
}

/// Checks the three shape conditions: in-degree 0 or 2 at every vertex, at
/// most `R(N)` cycles of each length `N >= 2`, and exactly 0 or 2 fixed
/// points.
pub fn is_strongly_admissible(g: &FunctionalGraph) -> AdmissibilityReport {
    let mut violations = Vec::new();
    for (v, &d) in g.in_degrees().iter().enumerate() {
        if d != 0 && d != 2 {
            violations.push(format!("vertex {v} has in-degree {d}"));
        }
    }
    let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
    for cycle in g.cycles() {
        *by_len.entry(cycle.len()).or_insert(0) += 1;
    }
    for (&len, &count) in &by_len {
        if len == 1 {
            if count != 2 {
                violations.push(format!("fixed point count {count} is neither 0 nor 2"));
            }
        } else {
            let bound = cycle_bound_r(len as u32);
            if BigInt::from(count) > bound {
                violations.push(format!(
                    "{count} cycles of length {len} exceed the bound {bound}"
                ));
            }
        }
    }
    AdmissibilityReport { admissible: violations.is_empty(), violations }
}

/// Grows `g` into the smallest strongly admissible graph containing it: a
/// second fixed point is added if exactly one exists, then every vertex of
/// in-degree 1 gains a fresh leaf parent. Inputs that already violate the
/// cycle bounds, or whose in-degrees exceed 2, cannot be completed and are
/// rejected.
pub fn admissible_completion(g: &FunctionalGraph) -> Result<FunctionalGraph, PortraitError> {
    let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
    for cycle in g.cycles() {
        *by_len.entry(cycle.len()).or_insert(0) += 1;
    }
    for (&len, &count) in &by_len {
        let bound = cycle_bound_r(len.max(1) as u32);
        if BigInt::from(count) > bound {
            return Err(PortraitError::CycleBound { len, count, bound });
        }
    }
    for (vertex, &degree) in g.in_degrees().iter().enumerate() {
        if degree > 2 {
            return Err(PortraitError::InDegree { vertex, degree });
        }
    }
    let mut succ = g.succ.clone();
    let mut labels = g.labels.clone();
    if by_len.get(&1).copied().unwrap_or(0) == 1 {
        let v = succ.len();
        succ.push(v);
        labels.push(None);
    }
    let settled = succ.len();
    let mut indeg = vec![0usize; settled];
    for &t in &succ {
        indeg[t] += 1;
    }
    for v in 0..settled {
        if indeg[v] == 1 {
            succ.push(v);
            labels.push(None);
        }
    }
    FunctionalGraph::with_labels(succ, labels)
}
