//! Geometric duality.
//!
//! The corners of a graph carry three involutions: the vertex arc, the ribbon
//! side (edge sides and external segments), and the step across a dart's
//! attachment segment. Vertices are the cycles of (vertex arc, across-dart),
//! boundary components the cycles of (vertex arc, ribbon side). The dual keeps
//! the vertex arcs and exchanges the other two, so each boundary orbit becomes
//! a dual vertex whose darts are the ribbon-side steps along the orbit.
//! Half-ribbons stay half-ribbons because on their corners the ribbon side and
//! the across-dart step coincide.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::herg::{fresh_name, DartRole, EdgeRecord, HalfRibbonRecord, Herg, HergParts, VertexRecord};
use crate::iso;
use crate::topology::{self, classify, euler_genus, trace_boundary, Lr, Side};

/// How the pieces of a graph map onto its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWitness {
    /// Dual vertex name for each boundary orbit, in [`trace_boundary`] order.
    pub orbit_vertex: Vec<String>,
    /// Bare vertices map to bare dual vertices: `(primal, dual)` names.
    pub bare_vertex: Vec<(String, String)>,
    /// `(primal edge, dual edge)`.
    pub edge_map: Vec<(String, String)>,
    /// `(primal half-ribbon, dual half-ribbon)`.
    pub half_map: Vec<(String, String)>,
}

pub fn dual(g: &Herg) -> (Herg, DualWitness) {
    let faces = trace_boundary(g);
    let mut used: HashSet<String> = HashSet::new();
    for &v in &faces.bare_vertices {
        used.insert(g.vertices()[v].name.clone());
    }

    // Each ribbon-side step of an orbit becomes a dual dart; its two corners
    // become the dual dart's left and right sides.
    let mut corner_of: HashMap<Side, (usize, Lr)> = HashMap::new();
    let mut dart_names: Vec<String> = Vec::new();
    let mut vertices = Vec::new();
    let mut orbit_vertex = Vec::new();
    for (i, orbit) in faces.orbits.iter().enumerate() {
        let name = fresh_name(&format!("f{i}"), &mut used);
        let mut rotation = Vec::with_capacity(orbit.sides.len() / 2);
        for pair in orbit.sides.chunks(2) {
            let id = dart_names.len();
            let dname = fresh_name(&format!("x{id}"), &mut used);
            corner_of.insert(pair[0], (id, Lr::Left));
            corner_of.insert(pair[1], (id, Lr::Right));
            dart_names.push(dname.clone());
            rotation.push(dname);
        }
        orbit_vertex.push(name.clone());
        vertices.push(VertexRecord { name, rotation });
    }
    let mut bare_vertex = Vec::new();
    for &v in &faces.bare_vertices {
        let name = g.vertices()[v].name.clone();
        bare_vertex.push((name.clone(), name.clone()));
        vertices.push(VertexRecord { name, rotation: Vec::new() });
    }

    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (ei, e) in g.edges().iter().enumerate() {
        let d = g.index.by_name[&e.darts[0]];
        debug_assert!(matches!(g.index.role[d], DartRole::Edge { edge, .. } if edge == ei));
        let (x, lx) = corner_of[&Side { dart: d, lr: Lr::Left }];
        let (y, ly) = corner_of[&Side { dart: d, lr: Lr::Right }];
        edges.push(EdgeRecord {
            name: e.name.clone(),
            darts: [dart_names[x].clone(), dart_names[y].clone()],
            twisted: lx == ly,
        });
        edge_map.push((e.name.clone(), e.name.clone()));
    }
    let mut halves = Vec::new();
    let mut half_map = Vec::new();
    for h in g.halves() {
        let d = g.index.by_name[&h.dart];
        let (x, _) = corner_of[&Side { dart: d, lr: Lr::Left }];
        halves.push(HalfRibbonRecord { name: h.name.clone(), dart: dart_names[x].clone() });
        half_map.push((h.name.clone(), h.name.clone()));
    }

    let gd = untwist_forest(Herg::from_valid(HergParts { vertices, edges, halves }));
    (gd, DualWitness { orbit_vertex, bare_vertex, edge_map, half_map })
}

/// Flips vertices so that the edges of a breadth-first spanning forest are
/// untwisted. The result is the same graph up to vertex flips.
fn untwist_forest(g: Herg) -> Herg {
    let index = &g.index;
    let nv = g.vertex_count();
    let mut flip: Vec<Option<bool>> = vec![None; nv];
    for root in 0..nv {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &d in &index.rotations[v] {
                if let DartRole::Edge { partner, twisted, .. } = index.role[d] {
                    let w = index.vertex_of[partner];
                    if flip[w].is_none() {
                        flip[w] = Some(flip[v].unwrap() ^ twisted);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let mut out = g.clone();
    for (v, f) in flip.into_iter().enumerate() {
        if f == Some(true) {
            out = out.flip_vertex(v);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub checks: Vec<Check>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

/// The count correspondences between a graph and its dual, plus half-ribbon,
/// genus and orientability preservation.
pub fn check_correspondences(g: &Herg, gd: &Herg) -> CorrespondenceReport {
    let (cg, cd) = (classify(g), classify(gd));
    let (fg, fd) = (trace_boundary(g), trace_boundary(gd));
    let c = |name, lhs: usize, rhs: usize| Check { name, lhs: lhs as i64, rhs: rhs as i64 };
    let checks = vec![
        c("V_int = f_int*", cg.v_int, fd.f_int),
        c("f_int = V_int*", fg.f_int, cd.v_int),
        c("V_ext = C_ext*", cg.v_ext, fd.c_ext),
        c("C_ext = V_ext*", fg.c_ext, cd.v_ext),
        c("e = e*", g.edge_count(), gd.edge_count()),
        c("|H| = |H*|", g.half_count(), gd.half_count()),
        Check { name: "gamma = gamma*", lhs: euler_genus(g).1, rhs: euler_genus(gd).1 },
        c("orientable = orientable*", topology::orientable(g) as usize, topology::orientable(gd) as usize),
    ];
    CorrespondenceReport { checks }
}

/// The dual of the dual is the original graph, up to relabeling and flips.
pub fn double_dual_check(g: &Herg) -> bool {
    let (d, _) = dual(g);
    let (dd, _) = dual(&d);
    iso::isomorphic(&dd, g, true).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn counts(g: &Herg) -> (usize, usize, usize) {
        (g.vertex_count(), g.edge_count(), g.half_count())
    }

    #[test]
    fn loop_and_bridge_are_dual() {
        let (d, w) = dual(&fixtures::untwisted_loop());
        assert!(iso::isomorphic(&d, &fixtures::bridge(), false).is_some());
        assert_eq!(w.orbit_vertex.len(), 2);
        let (d, _) = dual(&fixtures::bridge());
        assert!(iso::isomorphic(&d, &fixtures::untwisted_loop(), false).is_some());
    }

    #[test]
    fn dual_spanning_forest_is_untwisted() {
        let (d, _) = dual(&fixtures::untwisted_loop());
        assert!(!d.edges()[0].twisted);
        let (d, _) = dual(&fixtures::theta());
        assert!(topology::orientable(&d));
    }

    #[test]
    fn twisted_loop_is_self_dual() {
        let (d, _) = dual(&fixtures::twisted_loop());
        assert!(iso::isomorphic(&d, &fixtures::twisted_loop(), true).is_some());
    }

    #[test]
    fn g6_dualizes_to_g7() {
        let (d, w) = dual(&fixtures::g6());
        assert_eq!(counts(&d), (1, 1, 1));
        assert_eq!(w.half_map, vec![("h".to_string(), "h".to_string())]);
        assert!(iso::isomorphic(&d, &fixtures::g7(), true).is_some());
        assert_eq!(trace_boundary(&d).f_int, 1);
    }

    #[test]
    fn single_half_is_self_dual() {
        let g = fixtures::vertex_with_halves(1);
        let (d, _) = dual(&g);
        assert!(iso::isomorphic(&d, &g, false).is_some());
    }

    #[test]
    fn empty_graphs_are_self_dual() {
        for n in 1..4 {
            let g = fixtures::empty(n);
            let (d, w) = dual(&g);
            assert_eq!(d, g);
            assert_eq!(w.bare_vertex.len(), n);
            assert!(check_correspondences(&g, &d).passed());
        }
    }

    #[test]
    fn correspondences_on_fixtures() {
        for g in [fixtures::g6(), fixtures::untwisted_loop(), fixtures::bridge(), fixtures::theta(), fixtures::twisted_digon()] {
            let (d, _) = dual(&g);
            let r = check_correspondences(&g, &d);
            assert!(r.passed(), "{:?}", r.failures());
        }
    }

    #[test]
    fn double_duals() {
        for g in [
            fixtures::untwisted_loop(),
            fixtures::g6(),
            fixtures::empty(3),
            fixtures::twisted_digon(),
            fixtures::two_half_bridge(),
        ] {
            assert!(double_dual_check(&g), "{g:?}");
        }
    }
}
