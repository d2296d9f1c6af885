//! Boundary tracing and the counts derived from it.
//!
//! Every dart has two corners, its left and right side. Two involutions act on
//! the corners:
//!
//! * the vertex arc joins the right side of a dart to the left side of its
//!   rotation successor;
//! * the ribbon side joins the sides of paired darts (left to right for an
//!   untwisted edge, left to left and right to right for a twisted one), and
//!   the two sides of a half-ribbon dart through its external segment.
//!
//! A boundary component is a cycle alternating the two involutions. It is a
//! closed face when it crosses no external segment, and an external cycle
//! otherwise.

use std::collections::VecDeque;

use crate::edit::{self, SubgraphStats};
use crate::herg::{DartIndex, DartRole, Herg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lr {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Side {
    pub dart: usize,
    pub lr: Lr,
}

impl Side {
    pub(crate) fn from_index(i: usize) -> Side {
        Side { dart: i / 2, lr: if i % 2 == 0 { Lr::Left } else { Lr::Right } }
    }

    pub(crate) fn index(self) -> usize {
        2 * self.dart + (self.lr == Lr::Right) as usize
    }
}

/// One boundary component, listed as `s0, s1, ..., s(2m-1)` where each pair
/// `(s(2i), s(2i+1))` is a ribbon-side step and `(s(2i+1), s(2i+2))` a vertex arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryOrbit {
    pub sides: Vec<Side>,
    /// Positions `i` (even) where the step `s(i) -> s(i+1)` crosses an external segment.
    pub crossings: Vec<usize>,
}

impl BoundaryOrbit {
    pub fn is_closed(&self) -> bool {
        self.crossings.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceReport {
    pub orbits: Vec<BoundaryOrbit>,
    /// Vertices without darts; each bounds one degenerate closed face.
    pub bare_vertices: Vec<usize>,
    pub f_int: usize,
    pub f_ext: usize,
    pub c_ext: usize,
}

/// The two corner involutions, plus which ribbon-side steps are external crossings.
pub(crate) struct SideSystem {
    pub vertex_arc: Vec<usize>,
    pub ribbon_side: Vec<usize>,
    pub crossing: Vec<bool>,
    /// Corners that take part in the system (darts removed by deletion do not).
    pub live: Vec<bool>,
    pub bare_vertices: Vec<usize>,
}

/// How edges outside a kept set are treated when building a subgraph view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dropped {
    Delete,
    Cut,
}

impl SideSystem {
    pub fn of(index: &DartIndex) -> SideSystem {
        SideSystem::of_subgraph(index, None, Dropped::Delete)
    }

    /// Side system of the spanning subgraph keeping the edges flagged in `kept`
    /// (all edges when `None`); dropped edges are deleted or cut.
    pub fn of_subgraph(index: &DartIndex, kept: Option<&[bool]>, mode: Dropped) -> SideSystem {
        let n = index.dart_count();
        let keep_edge = |e: usize| kept.map_or(true, |k| k[e]);
        let dart_live = |d: usize| match index.role[d] {
            DartRole::Edge { edge, .. } => mode == Dropped::Cut || keep_edge(edge),
            DartRole::Half { .. } => true,
        };
        let mut live = vec![false; 2 * n];
        let mut vertex_arc = vec![usize::MAX; 2 * n];
        let mut ribbon_side = vec![usize::MAX; 2 * n];
        let mut crossing = vec![false; 2 * n];
        let mut bare_vertices = Vec::new();

        for (v, rot) in index.rotations.iter().enumerate() {
            let alive: Vec<usize> = rot.iter().copied().filter(|&d| dart_live(d)).collect();
            if alive.is_empty() {
                bare_vertices.push(v);
                continue;
            }
            for (i, &d) in alive.iter().enumerate() {
                let next = alive[(i + 1) % alive.len()];
                let r = Side { dart: d, lr: Lr::Right }.index();
                let l = Side { dart: next, lr: Lr::Left }.index();
                vertex_arc[r] = l;
                vertex_arc[l] = r;
                live[2 * d] = true;
                live[2 * d + 1] = true;
            }
        }
        for d in 0..n {
            if !dart_live(d) {
                continue;
            }
            let (l, r) = (2 * d, 2 * d + 1);
            match index.role[d] {
                DartRole::Edge { edge, partner, twisted } if keep_edge(edge) => {
                    let (pl, pr) = (2 * partner, 2 * partner + 1);
                    if twisted {
                        ribbon_side[l] = pl;
                        ribbon_side[r] = pr;
                    } else {
                        ribbon_side[l] = pr;
                        ribbon_side[r] = pl;
                    }
                }
                _ => {
                    ribbon_side[l] = r;
                    ribbon_side[r] = l;
                    crossing[l] = true;
                    crossing[r] = true;
                }
            }
        }
        SideSystem { vertex_arc, ribbon_side, crossing, live, bare_vertices }
    }

    pub fn orbits(&self) -> Vec<BoundaryOrbit> {
        let mut seen = vec![false; self.live.len()];
        let mut orbits = Vec::new();
        for start in 0..self.live.len() {
            if !self.live[start] || seen[start] {
                continue;
            }
            let mut sides = Vec::new();
            let mut crossings = Vec::new();
            let mut s = start;
            loop {
                let t = self.ribbon_side[s];
                if self.crossing[s] {
                    crossings.push(sides.len());
                }
                seen[s] = true;
                seen[t] = true;
                sides.push(Side::from_index(s));
                sides.push(Side::from_index(t));
                s = self.vertex_arc[t];
                if s == start {
                    break;
                }
            }
            orbits.push(BoundaryOrbit { sides, crossings });
        }
        orbits
    }

    pub fn report(&self) -> FaceReport {
        let orbits = self.orbits();
        let closed = orbits.iter().filter(|o| o.is_closed()).count();
        let f_ext = orbits.iter().map(|o| o.crossings.len()).sum();
        let c_ext = orbits.len() - closed;
        FaceReport {
            f_int: closed + self.bare_vertices.len(),
            f_ext,
            c_ext,
            bare_vertices: self.bare_vertices.clone(),
            orbits,
        }
    }
}

pub fn trace_boundary(g: &Herg) -> FaceReport {
    SideSystem::of(&g.index).report()
}

/// Connected components over edges; half-ribbons do not connect anything.
/// Returns the component count and the component id of every vertex.
pub fn components(g: &Herg) -> (usize, Vec<usize>) {
    components_of(&g.index, None)
}

pub(crate) fn components_of(index: &DartIndex, kept: Option<&[bool]>) -> (usize, Vec<usize>) {
    let nv = index.rotations.len();
    let mut adj = vec![Vec::new(); nv];
    for (d, role) in index.role.iter().enumerate() {
        if let DartRole::Edge { edge, partner, .. } = *role {
            if kept.map_or(true, |k| k[edge]) {
                adj[index.vertex_of[d]].push(index.vertex_of[partner]);
            }
        }
    }
    let mut comp = vec![usize::MAX; nv];
    let mut count = 0;
    for s in 0..nv {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (count, comp)
}

/// `(r, n)` with `r = v - k` and `n = e - r`.
pub fn rank_nullity(g: &Herg) -> (usize, usize) {
    let (k, _) = components(g);
    let r = g.vertex_count() - k;
    (r, g.edge_count() - r)
}

/// True iff some choice of vertex flips makes every edge untwisted.
pub fn orientable(g: &Herg) -> bool {
    orientable_of(&g.index, None)
}

pub(crate) fn orientable_of(index: &DartIndex, kept: Option<&[bool]>) -> bool {
    local_orientation(index, kept).is_some()
}

/// For each vertex, whether it must be flipped to untwist every (kept) edge,
/// with the first vertex of each component left unflipped. `None` when an
/// odd twist cycle exists.
pub(crate) fn local_orientation(index: &DartIndex, kept: Option<&[bool]>) -> Option<Vec<bool>> {
    let nv = index.rotations.len();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nv];
    for (d, role) in index.role.iter().enumerate() {
        if let DartRole::Edge { edge, partner, twisted } = *role {
            if kept.map_or(true, |k| k[edge]) && d < partner {
                let (a, b) = (index.vertex_of[d], index.vertex_of[partner]);
                adj[a].push((b, twisted));
                adj[b].push((a, twisted));
            }
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; nv];
    for s in 0..nv {
        if flip[s].is_some() {
            continue;
        }
        flip[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let fv = flip[v].unwrap();
            for &(w, tw) in &adj[v] {
                let want = fv ^ tw;
                match flip[w] {
                    None => {
                        flip[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(fw) if fw != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(flip.into_iter().map(|f| f.unwrap()).collect())
}

/// `(chi, gamma)` with `chi = v - e + f_int + C_ext` and `gamma = 2k - chi`.
pub fn euler_genus(g: &Herg) -> (i64, i64) {
    let faces = trace_boundary(g);
    let (k, _) = components(g);
    let chi = g.vertex_count() as i64 - g.edge_count() as i64
        + faces.f_int as i64
        + faces.c_ext as i64;
    (chi, 2 * k as i64 - chi)
}

/// Minimal-genus punctured-surface data: the proper embedding has one puncture
/// per external cycle, the h-proper one a puncture per half-ribbon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbeddingSignature {
    pub orientable: bool,
    pub genus: i64,
    pub punctures_proper: usize,
    pub punctures_hproper: usize,
    pub chi: i64,
}

pub fn embedding_signature(g: &Herg) -> EmbeddingSignature {
    let faces = trace_boundary(g);
    let (chi, genus) = euler_genus(g);
    EmbeddingSignature {
        orientable: orientable(g),
        genus,
        punctures_proper: faces.c_ext,
        punctures_hproper: g.half_count(),
        chi,
    }
}

/// All seven subgraph statistics of a graph, computed on the graph itself.
pub fn stats(g: &Herg) -> SubgraphStats {
    let faces = trace_boundary(g);
    let (r, n) = rank_nullity(g);
    let (k, _) = components(g);
    SubgraphStats {
        r,
        n,
        k,
        f_int: faces.f_int,
        c_ext: faces.c_ext,
        o: !orientable(g) as u8,
        hcount: g.half_count(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    Internal,
    SemiInternal,
    External,
    /// Loops fall outside the internal/external taxonomy.
    Loop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Per half-ribbon (in record order): true when it is alone in its external cycle.
    pub half_internal: Vec<bool>,
    /// Per edge (in record order).
    pub edge_class: Vec<EdgeClass>,
    pub edge_is_bridge: Vec<bool>,
    /// Per vertex: true when at least one half-ribbon is attached.
    pub vertex_external: Vec<bool>,
    pub v_int: usize,
    pub v_ext: usize,
}

/// Crossing count of the external cycle holding each half-ribbon.
fn half_cycle_sizes(g: &Herg) -> Vec<usize> {
    let faces = trace_boundary(g);
    let mut sizes = vec![0; g.half_count()];
    for orbit in &faces.orbits {
        for &pos in &orbit.crossings {
            if let DartRole::Half { half } = g.index.role[orbit.sides[pos].dart] {
                sizes[half] = orbit.crossings.len();
            }
        }
    }
    sizes
}

pub fn is_bridge(g: &Herg, edge: usize) -> bool {
    if g.is_loop(edge) {
        return false;
    }
    let mut kept = vec![true; g.edge_count()];
    kept[edge] = false;
    let (a, b) = g.edge_ends(edge);
    let (_, comp) = components_of(&g.index, Some(&kept));
    comp[a] != comp[b]
}

pub fn classify(g: &Herg) -> Classification {
    let half_internal: Vec<bool> = half_cycle_sizes(g).into_iter().map(|s| s == 1).collect();

    let mut edge_class = Vec::with_capacity(g.edge_count());
    let mut edge_is_bridge = Vec::with_capacity(g.edge_count());
    for (ei, e) in g.edges().iter().enumerate() {
        edge_is_bridge.push(is_bridge(g, ei));
        if g.is_loop(ei) {
            edge_class.push(EdgeClass::Loop);
            continue;
        }
        let (cut, created) = edit::cut_edge_named(g, &e.name).expect("edge exists");
        let sizes = half_cycle_sizes(&cut);
        let internal = created
            .iter()
            .filter(|h| sizes[cut.halves().iter().position(|r| &r.name == *h).unwrap()] == 1)
            .count();
        edge_class.push(match internal {
            2 => EdgeClass::Internal,
            1 => EdgeClass::SemiInternal,
            _ => EdgeClass::External,
        });
    }

    let mut vertex_external = vec![false; g.vertex_count()];
    for h in g.halves() {
        vertex_external[g.index.vertex_of[g.index.by_name[&h.dart]]] = true;
    }
    let v_ext = vertex_external.iter().filter(|&&x| x).count();
    Classification {
        half_internal,
        edge_class,
        edge_is_bridge,
        v_int: g.vertex_count() - v_ext,
        v_ext,
        vertex_external,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bridge_has_one_closed_face() {
        let f = trace_boundary(&fixtures::bridge());
        assert_eq!(f.orbits.len(), 1);
        assert_eq!((f.f_int, f.c_ext, f.f_ext), (1, 0, 0));
    }

    #[test]
    fn single_half_is_one_external_cycle() {
        let f = trace_boundary(&fixtures::vertex_with_halves(1));
        assert_eq!(f.orbits.len(), 1);
        assert_eq!(f.orbits[0].crossings.len(), 1);
        assert_eq!((f.f_int, f.c_ext, f.f_ext), (0, 1, 1));
    }

    #[test]
    fn loops_by_twist() {
        assert_eq!(trace_boundary(&fixtures::untwisted_loop()).f_int, 2);
        assert_eq!(trace_boundary(&fixtures::twisted_loop()).f_int, 1);
    }

    #[test]
    fn orbit_lengths_cover_all_sides() {
        let g = fixtures::theta();
        let f = trace_boundary(&g);
        let total: usize = f.orbits.iter().map(|o| o.sides.len()).sum();
        assert_eq!(total, 2 * g.dart_count());
    }

    #[test]
    fn component_counts() {
        assert_eq!(components(&fixtures::empty(4)).0, 4);
        assert_eq!(components(&fixtures::bridge()).0, 1);
        let cut = edit::cut_edge(&fixtures::bridge(), "e").unwrap();
        assert_eq!(components(&cut).0, 2);
    }

    #[test]
    fn rank_and_nullity() {
        assert_eq!(rank_nullity(&fixtures::untwisted_loop()), (0, 1));
        assert_eq!(rank_nullity(&fixtures::bridge()), (1, 0));
        assert_eq!(rank_nullity(&fixtures::empty(3)), (0, 0));
    }

    #[test]
    fn orientability() {
        assert!(!orientable(&fixtures::twisted_loop()));
        assert!(orientable(&fixtures::untwisted_loop()));
        assert!(!orientable(&fixtures::twisted_digon()));
        assert!(orientable(&fixtures::twisted_bridge()));
    }

    #[test]
    fn euler_genus_examples() {
        assert_eq!(euler_genus(&fixtures::untwisted_loop()), (2, 0));
        assert_eq!(euler_genus(&fixtures::twisted_loop()), (1, 1));
        assert_eq!(euler_genus(&fixtures::bridge()), (2, 0));
        // Torus: one vertex, two interlaced loops.
        let torus = crate::io::parse(
            "herg 1\nvertex u : a1 b1 a2 b2\nedge a : a1 a2\nedge b : b1 b2\n",
        )
        .unwrap();
        assert_eq!(euler_genus(&torus), (0, 2));
    }

    #[test]
    fn signatures() {
        let s = embedding_signature(&fixtures::vertex_with_halves(2));
        assert_eq!((s.punctures_proper, s.punctures_hproper), (1, 2));
        let s = embedding_signature(&fixtures::theta());
        assert_eq!((s.punctures_proper, s.punctures_hproper), (0, 0));
        let s = embedding_signature(&fixtures::g6());
        assert_eq!((s.genus, s.punctures_proper), (0, 1));
    }

    #[test]
    fn classify_g6() {
        let c = classify(&fixtures::g6());
        assert_eq!(c.half_internal, vec![true]);
        assert_eq!(c.edge_class, vec![EdgeClass::SemiInternal]);
        assert_eq!((c.v_int, c.v_ext), (1, 1));
        assert_eq!(c.edge_is_bridge, vec![true]);
    }

    #[test]
    fn classify_bridges() {
        assert_eq!(classify(&fixtures::bridge()).edge_class, vec![EdgeClass::Internal]);
        assert_eq!(classify(&fixtures::two_half_bridge()).edge_class, vec![EdgeClass::External]);
        let c = classify(&fixtures::untwisted_loop());
        assert_eq!(c.edge_class, vec![EdgeClass::Loop]);
        assert_eq!(c.edge_is_bridge, vec![false]);
    }
}
