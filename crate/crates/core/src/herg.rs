//! The half-edge ribbon graph value type.
//!
//! A [`Herg`] is stored as a rotation system: every vertex carries the cyclic
//! order of the darts attached to its disc, every edge pairs two darts (with a
//! twist bit), and every half-ribbon owns a single unpaired dart. The value is
//! immutable once built; all operations return new graphs.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::HergError;

/// A vertex disc and the cyclic order of the darts attached to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRecord {
    pub name: String,
    pub rotation: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub name: String,
    pub darts: [String; 2],
    pub twisted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfRibbonRecord {
    pub name: String,
    pub dart: String,
}

impl VertexRecord {
    pub fn new<S: Into<String>>(name: S, rotation: &[&str]) -> Self {
        VertexRecord {
            name: name.into(),
            rotation: rotation.iter().map(|d| d.to_string()).collect(),
        }
    }
}

impl EdgeRecord {
    pub fn new<S: Into<String>>(name: S, d1: &str, d2: &str, twisted: bool) -> Self {
        EdgeRecord {
            name: name.into(),
            darts: [d1.to_string(), d2.to_string()],
            twisted,
        }
    }
}

impl HalfRibbonRecord {
    pub fn new<S: Into<String>>(name: S, dart: &str) -> Self {
        HalfRibbonRecord { name: name.into(), dart: dart.to_string() }
    }
}

/// Raw, unvalidated records. [`HergParts::validate`] reports every violation
/// of the dart-partition invariant; [`Herg::new`] only accepts clean parts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HergParts {
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    pub halves: Vec<HalfRibbonRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateDart(String),
    OrphanDart(String),
    DartInTwoRecords(String),
    DartNotInRotation(String),
    EdgeDartsNotDistinct(String),
    HalfRibbonLoop(String),
    DuplicateName(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateDart(d) => write!(f, "duplicate dart {d}"),
            Violation::OrphanDart(d) => write!(f, "orphan dart {d}"),
            Violation::DartInTwoRecords(d) => write!(f, "dart {d} in two records"),
            Violation::DartNotInRotation(d) => write!(f, "dart {d} not in any rotation"),
            Violation::EdgeDartsNotDistinct(e) => write!(f, "edge darts not distinct ({e})"),
            Violation::HalfRibbonLoop(h) => write!(f, "half-ribbon {h} attached twice"),
            Violation::DuplicateName(n) => write!(f, "duplicate name {n}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

impl HergParts {
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        let mut names = HashSet::new();
        for n in self.vertices.iter().map(|v| &v.name) {
            if !names.insert(("v", n)) {
                violations.push(Violation::DuplicateName(n.clone()));
            }
        }
        for n in self.edges.iter().map(|e| &e.name) {
            if !names.insert(("e", n)) {
                violations.push(Violation::DuplicateName(n.clone()));
            }
        }
        for n in self.halves.iter().map(|h| &h.name) {
            if !names.insert(("h", n)) {
                violations.push(Violation::DuplicateName(n.clone()));
            }
        }

        // Vertex layer: each dart at most once over all rotations.
        let mut in_rotation: HashSet<&str> = HashSet::new();
        for v in &self.vertices {
            for d in &v.rotation {
                if !in_rotation.insert(d) {
                    violations.push(Violation::DuplicateDart(d.clone()));
                }
            }
        }

        // Edge/half layer: each dart owned by exactly one record.
        let mut owner: HashSet<&str> = HashSet::new();
        for e in &self.edges {
            if e.darts[0] == e.darts[1] {
                violations.push(Violation::EdgeDartsNotDistinct(e.name.clone()));
            }
            for d in &e.darts {
                if !owner.insert(d) && e.darts[0] != e.darts[1] {
                    violations.push(Violation::DartInTwoRecords(d.clone()));
                }
            }
        }
        let mut half_seen: HashMap<&str, &str> = HashMap::new();
        for h in &self.halves {
            if let Some(prev) = half_seen.insert(&h.dart, &h.name) {
                if prev == h.name {
                    violations.push(Violation::HalfRibbonLoop(h.name.clone()));
                    continue;
                }
            }
            if !owner.insert(&h.dart) {
                violations.push(Violation::DartInTwoRecords(h.dart.clone()));
            }
        }

        for v in &self.vertices {
            for d in &v.rotation {
                if !owner.contains(d.as_str()) {
                    violations.push(Violation::OrphanDart(d.clone()));
                }
            }
        }
        let mut owned: Vec<&str> = owner.iter().copied().collect();
        owned.sort_unstable();
        for d in owned {
            if !in_rotation.contains(d) {
                violations.push(Violation::DartNotInRotation(d.to_string()));
            }
        }

        ValidationReport { violations }
    }
}

/// What a dart is attached to on the far side of its segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DartRole {
    Edge { edge: usize, partner: usize, twisted: bool },
    Half { half: usize },
}

/// Dense integer view of a valid graph, built once at construction.
#[derive(Clone, Debug)]
pub(crate) struct DartIndex {
    pub dart_names: Vec<String>,
    pub by_name: HashMap<String, usize>,
    pub vertex_of: Vec<usize>,
    pub succ: Vec<usize>,
    pub pred: Vec<usize>,
    pub role: Vec<DartRole>,
    pub rotations: Vec<Vec<usize>>,
}

impl DartIndex {
    fn build(parts: &HergParts) -> DartIndex {
        let mut dart_names = Vec::new();
        let mut by_name = HashMap::new();
        let mut vertex_of = Vec::new();
        let mut rotations = Vec::with_capacity(parts.vertices.len());
        for (vi, v) in parts.vertices.iter().enumerate() {
            let mut rot = Vec::with_capacity(v.rotation.len());
            for d in &v.rotation {
                let id = dart_names.len();
                dart_names.push(d.clone());
                by_name.insert(d.clone(), id);
                vertex_of.push(vi);
                rot.push(id);
            }
            rotations.push(rot);
        }
        let n = dart_names.len();
        let mut succ = vec![0; n];
        let mut pred = vec![0; n];
        for rot in &rotations {
            for (i, &d) in rot.iter().enumerate() {
                let next = rot[(i + 1) % rot.len()];
                succ[d] = next;
                pred[next] = d;
            }
        }
        let mut role = vec![DartRole::Half { half: usize::MAX }; n];
        for (ei, e) in parts.edges.iter().enumerate() {
            let a = by_name[&e.darts[0]];
            let b = by_name[&e.darts[1]];
            role[a] = DartRole::Edge { edge: ei, partner: b, twisted: e.twisted };
            role[b] = DartRole::Edge { edge: ei, partner: a, twisted: e.twisted };
        }
        for (hi, h) in parts.halves.iter().enumerate() {
            role[by_name[&h.dart]] = DartRole::Half { half: hi };
        }
        DartIndex { dart_names, by_name, vertex_of, succ, pred, role, rotations }
    }

    pub fn dart_count(&self) -> usize {
        self.dart_names.len()
    }
}

/// A validated half-edge ribbon graph.
#[derive(Clone)]
pub struct Herg {
    parts: HergParts,
    pub(crate) index: DartIndex,
}

impl fmt::Debug for Herg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Herg")
            .field("vertices", &self.parts.vertices)
            .field("edges", &self.parts.edges)
            .field("halves", &self.parts.halves)
            .finish()
    }
}

/// Structural equality: same labels, same rotations up to cyclic shift,
/// same edge and half-ribbon records (record order is irrelevant).
impl PartialEq for Herg {
    fn eq(&self, other: &Herg) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for Herg {}

impl Herg {
    pub fn new(parts: HergParts) -> Result<Herg, HergError> {
        let report = parts.validate();
        if !report.is_ok() {
            return Err(HergError::Invalid(report));
        }
        Ok(Herg::from_valid(parts))
    }

    /// Builds a graph whose parts are valid by construction.
    pub(crate) fn from_valid(parts: HergParts) -> Herg {
        debug_assert!(parts.validate().is_ok(), "{}", parts.validate());
        let index = DartIndex::build(&parts);
        Herg { parts, index }
    }

    fn normalized(&self) -> HergParts {
        let mut p = self.parts.clone();
        for v in &mut p.vertices {
            if let Some(start) = (0..v.rotation.len()).min_by_key(|&i| &v.rotation[i]) {
                v.rotation.rotate_left(start);
            }
        }
        for e in &mut p.edges {
            e.darts.sort();
        }
        p.vertices.sort_by(|a, b| a.name.cmp(&b.name));
        p.edges.sort_by(|a, b| a.name.cmp(&b.name));
        p.halves.sort_by(|a, b| a.name.cmp(&b.name));
        p
    }

    pub fn parts(&self) -> &HergParts {
        &self.parts
    }

    pub fn into_parts(self) -> HergParts {
        self.parts
    }

    pub fn vertices(&self) -> &[VertexRecord] {
        &self.parts.vertices
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.parts.edges
    }

    pub fn halves(&self) -> &[HalfRibbonRecord] {
        &self.parts.halves
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parts.edges.len()
    }

    pub fn half_count(&self) -> usize {
        self.parts.halves.len()
    }

    pub fn dart_count(&self) -> usize {
        self.index.dart_count()
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.parts.edges.iter().position(|e| e.name == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.parts.vertices.iter().position(|v| v.name == name)
    }

    /// The vertex each end of the edge is attached to, in dart order.
    pub fn edge_ends(&self, edge: usize) -> (usize, usize) {
        let e = &self.parts.edges[edge];
        (
            self.index.vertex_of[self.index.by_name[&e.darts[0]]],
            self.index.vertex_of[self.index.by_name[&e.darts[1]]],
        )
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (a, b) = self.edge_ends(edge);
        a == b
    }

    /// Edge labels in sorted order; the canonical order for subset enumeration.
    pub fn sorted_edge_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.parts.edges.iter().map(|e| e.name.clone()).collect();
        names.sort();
        names
    }

    /// Every name in use (vertices, edges, halves, darts), for fresh-label generation.
    pub(crate) fn used_names(&self) -> HashSet<String> {
        let mut used: HashSet<String> = self.index.dart_names.iter().cloned().collect();
        used.extend(self.parts.vertices.iter().map(|v| v.name.clone()));
        used.extend(self.parts.edges.iter().map(|e| e.name.clone()));
        used.extend(self.parts.halves.iter().map(|h| h.name.clone()));
        used
    }

    /// Reverses the rotation at `vertex` and toggles the twist bit of every
    /// incident edge end. The result denotes the same ribbon graph.
    pub fn flip_vertex(&self, vertex: usize) -> Herg {
        let mut parts = self.parts.clone();
        parts.vertices[vertex].rotation.reverse();
        for (ei, e) in parts.edges.iter_mut().enumerate() {
            let (a, b) = self.edge_ends(ei);
            let toggles = (a == vertex) as u8 + (b == vertex) as u8;
            if toggles % 2 == 1 {
                e.twisted = !e.twisted;
            }
        }
        Herg::from_valid(parts)
    }
}

/// Picks `base`, or `base_1`, `base_2`, ... until unused, and reserves it.
pub(crate) fn fresh_name(base: &str, used: &mut HashSet<String>) -> String {
    let mut candidate = base.to_string();
    let mut counter = 1;
    while used.contains(&candidate) {
        candidate = format!("{base}_{counter}");
        counter += 1;
    }
    used.insert(candidate.clone());
    candidate
}

/// Replaces every half-ribbon by an untwisted edge to a fresh degree-1 vertex.
/// The new edge keeps the half-ribbon's name.
pub fn complete(g: &Herg) -> Herg {
    let mut used = g.used_names();
    let mut parts = g.parts.clone();
    let halves = std::mem::take(&mut parts.halves);
    for h in halves {
        let leaf = fresh_name(&format!("{}_leaf", h.name), &mut used);
        let leaf_dart = fresh_name(&format!("{}_end", h.name), &mut used);
        parts.vertices.push(VertexRecord { name: leaf, rotation: vec![leaf_dart.clone()] });
        parts.edges.push(EdgeRecord { name: h.name, darts: [h.dart, leaf_dart], twisted: false });
    }
    Herg::from_valid(parts)
}

/// Removes the named leaves and their edges; the surviving end of each edge
/// becomes a half-ribbon carrying the edge's name.
pub fn prune(g: &Herg, leaves: &[&str]) -> Result<Herg, HergError> {
    let mut leaf_ix = Vec::new();
    for &name in leaves {
        let vi = g
            .vertex_index(name)
            .ok_or_else(|| HergError::UnknownVertex(name.to_string()))?;
        let rot = &g.index.rotations[vi];
        if rot.len() != 1 {
            return Err(HergError::NotALeaf(name.to_string()));
        }
        match g.index.role[rot[0]] {
            DartRole::Half { .. } => return Err(HergError::LeafCarriesHalf(name.to_string())),
            DartRole::Edge { edge, partner, twisted } => {
                if twisted {
                    return Err(HergError::TwistedLeafEdge(name.to_string()));
                }
                if g.index.vertex_of[partner] == vi {
                    return Err(HergError::NotALeaf(name.to_string()));
                }
                leaf_ix.push((vi, edge, partner));
            }
        }
    }
    // A leaf whose neighbour is also pruned would leave a dangling dart.
    let pruned: HashSet<usize> = leaf_ix.iter().map(|&(v, _, _)| v).collect();
    for &(v, _, partner) in &leaf_ix {
        if pruned.contains(&g.index.vertex_of[partner]) {
            return Err(HergError::NotALeaf(g.parts.vertices[v].name.clone()));
        }
    }

    let mut parts = g.parts.clone();
    let dead_edges: HashSet<usize> = leaf_ix.iter().map(|&(_, e, _)| e).collect();
    for &(_, e, partner) in &leaf_ix {
        parts.halves.push(HalfRibbonRecord {
            name: g.parts.edges[e].name.clone(),
            dart: g.index.dart_names[partner].clone(),
        });
    }
    parts.vertices = parts
        .vertices
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !pruned.contains(i))
        .map(|(_, v)| v)
        .collect();
    parts.edges = parts
        .edges
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !dead_edges.contains(i))
        .map(|(_, e)| e)
        .collect();
    Herg::new(parts)
}

/// The underlying ribbon graph: half-ribbons and their darts are dropped.
pub fn underlying(g: &Herg) -> Herg {
    let mut parts = g.parts.clone();
    let half_darts: HashSet<String> = parts.halves.drain(..).map(|h| h.dart).collect();
    for v in &mut parts.vertices {
        v.rotation.retain(|d| !half_darts.contains(d));
    }
    Herg::from_valid(parts)
}
