//! Isomorphism of rotation–twist systems up to relabeling and vertex flips.
//!
//! Each connected component gets a canonical code. A candidate code is fixed
//! by an anchor dart and an orientation at its vertex: a breadth-first walk
//! then numbers darts in rotation order and flips every newly reached vertex
//! so that the edge it was reached by is untwisted. The component code is the
//! smallest candidate; the graph code is the sorted list of component codes.
//!
//! Without reflection, an orientable component only admits anchors whose
//! orientation agrees with the presented rotation at least as often as it
//! disagrees, which reduces to "no global mirror" on untwisted systems.

use std::collections::{HashMap, VecDeque};

use crate::herg::{DartIndex, DartRole, Herg};
use crate::topology;

pub type ComponentCode = Vec<u32>;

struct Candidate {
    code: ComponentCode,
    /// Darts in canonical numbering order.
    order: Vec<usize>,
}

fn walk(index: &DartIndex, anchor: usize, flipped: bool) -> (Candidate, Vec<Option<bool>>) {
    let nv = index.rotations.len();
    let mut flip: Vec<Option<bool>> = vec![None; nv];
    let mut number: HashMap<usize, u32> = HashMap::new();
    let mut order = Vec::new();
    let mut sizes = Vec::new();
    let start = index.vertex_of[anchor];
    flip[start] = Some(flipped);
    let mut queue = VecDeque::from([(start, anchor)]);
    while let Some((v, entry)) = queue.pop_front() {
        let f = flip[v].unwrap();
        let len = index.rotations[v].len();
        sizes.push(len as u32);
        let mut d = entry;
        for _ in 0..len {
            number.insert(d, order.len() as u32);
            order.push(d);
            if let DartRole::Edge { partner, twisted, .. } = index.role[d] {
                let w = index.vertex_of[partner];
                if flip[w].is_none() {
                    flip[w] = Some(f ^ twisted);
                    queue.push_back((w, partner));
                }
            }
            d = if f { index.pred[d] } else { index.succ[d] };
        }
    }
    let mut code = Vec::with_capacity(1 + sizes.len() + 2 * order.len());
    code.push(sizes.len() as u32);
    code.extend(&sizes);
    for &d in &order {
        match index.role[d] {
            DartRole::Half { .. } => code.extend([0, 0]),
            DartRole::Edge { partner, twisted, .. } => {
                let tw = twisted ^ flip[index.vertex_of[d]].unwrap() ^ flip[index.vertex_of[partner]].unwrap();
                code.extend([1 + 2 * number[&partner] + tw as u32, 1]);
            }
        }
    }
    (Candidate { code, order }, flip)
}

fn canonical_component(g: &Herg, comp_vertices: &[usize], allow_reflection: bool) -> Candidate {
    let index = &g.index;
    let darts: Vec<usize> = comp_vertices.iter().flat_map(|&v| index.rotations[v].iter().copied()).collect();
    if darts.is_empty() {
        return Candidate { code: vec![1, 0], order: Vec::new() };
    }
    let orientable = comp_orientable(g, comp_vertices);
    let mut best: Option<Candidate> = None;
    for &anchor in &darts {
        for flipped in [false, true] {
            let (cand, flip) = walk(index, anchor, flipped);
            if !allow_reflection && orientable {
                let reversed = flip.iter().filter(|f| **f == Some(true)).count();
                if 2 * reversed > comp_vertices.len() {
                    continue;
                }
            }
            if best.as_ref().map_or(true, |b| cand.code < b.code) {
                best = Some(cand);
            }
        }
    }
    best.expect("at least one admissible anchor")
}

fn comp_orientable(g: &Herg, comp_vertices: &[usize]) -> bool {
    // Orientability is decided per component by the global parity walk.
    let local = topology::local_orientation(&g.index, None);
    if local.is_some() {
        return true;
    }
    let sub = restrict(g, comp_vertices);
    topology::orientable(&sub)
}

fn restrict(g: &Herg, comp_vertices: &[usize]) -> Herg {
    let mut parts = g.parts().clone();
    let keep: Vec<bool> = (0..g.vertex_count()).map(|v| comp_vertices.contains(&v)).collect();
    let darts: std::collections::HashSet<String> = comp_vertices
        .iter()
        .flat_map(|&v| g.vertices()[v].rotation.iter().cloned())
        .collect();
    parts.vertices = parts.vertices.into_iter().enumerate().filter(|(i, _)| keep[*i]).map(|(_, v)| v).collect();
    parts.edges.retain(|e| darts.contains(&e.darts[0]));
    parts.halves.retain(|h| darts.contains(&h.dart));
    Herg::from_valid(parts)
}

fn component_vertices(g: &Herg) -> Vec<Vec<usize>> {
    let (k, comp) = topology::components(g);
    let mut out = vec![Vec::new(); k];
    for (v, &c) in comp.iter().enumerate() {
        out[c].push(v);
    }
    out
}

fn canonical_parts(g: &Herg, allow_reflection: bool) -> Vec<(Candidate, Vec<usize>)> {
    let mut comps: Vec<(Candidate, Vec<usize>)> = component_vertices(g)
        .into_iter()
        .map(|vs| (canonical_component(g, &vs, allow_reflection), vs))
        .collect();
    comps.sort_by(|a, b| a.0.code.cmp(&b.0.code));
    comps
}

/// Label-independent code: equal codes iff the graphs are isomorphic.
pub fn canonical_code(g: &Herg, allow_reflection: bool) -> Vec<ComponentCode> {
    canonical_parts(g, allow_reflection).into_iter().map(|(c, _)| c.code).collect()
}

/// A dart bijection (names in `g1` to names in `g2`) realizing an isomorphism.
/// Bare vertices are matched too, under their vertex names.
pub fn isomorphic(g1: &Herg, g2: &Herg, allow_reflection: bool) -> Option<HashMap<String, String>> {
    if (g1.vertex_count(), g1.edge_count(), g1.half_count())
        != (g2.vertex_count(), g2.edge_count(), g2.half_count())
    {
        return None;
    }
    let c1 = canonical_parts(g1, allow_reflection);
    let c2 = canonical_parts(g2, allow_reflection);
    if c1.len() != c2.len() || c1.iter().zip(&c2).any(|(a, b)| a.0.code != b.0.code) {
        return None;
    }
    let mut map = HashMap::new();
    for ((a, va), (b, vb)) in c1.iter().zip(&c2) {
        if a.order.is_empty() {
            map.insert(g1.vertices()[va[0]].name.clone(), g2.vertices()[vb[0]].name.clone());
        }
        for (&x, &y) in a.order.iter().zip(&b.order) {
            map.insert(g1.index.dart_names[x].clone(), g2.index.dart_names[y].clone());
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::io::parse;

    #[test]
    fn relabeling_is_invisible() {
        let a = fixtures::theta();
        let b = parse(
            "herg 1\nvertex p : z1 x1 y1\nvertex q : x2 y2 z2\nedge x : x1 x2\nedge y : y1 y2\nedge z : z1 z2\n",
        )
        .unwrap();
        let m = isomorphic(&a, &b, false).expect("relabeled theta");
        assert_eq!(m.len(), 6);
    }

    #[test]
    fn flipped_loop_is_the_same_loop() {
        let g = fixtures::untwisted_loop();
        assert!(isomorphic(&g, &g.flip_vertex(0), false).is_some());
    }

    #[test]
    fn bridge_is_not_a_loop() {
        assert!(isomorphic(&fixtures::bridge(), &fixtures::untwisted_loop(), true).is_none());
    }

    #[test]
    fn flips_of_one_vertex_are_isomorphic() {
        let g = fixtures::theta();
        let f = g.flip_vertex(1);
        assert!(isomorphic(&g, &f, true).is_some());
    }

    #[test]
    fn mirror_images_need_reflection() {
        // Around u: adjacent loop ends a a, then h b h b. The mirror reads
        // a a b h b h after the adjacent pair, so it is chiral.
        let g = parse(
            "herg 1\nvertex u : a1 a2 h1 b1 h2 b2\nedge a : a1 a2\nedge b : b1 b2\nhalf p : h1\nhalf q : h2\n",
        )
        .unwrap();
        let mut parts = g.parts().clone();
        parts.vertices[0].rotation.reverse();
        let m = Herg::new(parts).unwrap();
        assert!(isomorphic(&g, &m, true).is_some());
        assert!(isomorphic(&g, &m, false).is_none());
        // Flipping the only vertex is the same mirror.
        assert!(isomorphic(&g, &g.flip_vertex(0), false).is_none());
    }

    #[test]
    fn disconnected_graphs_match_componentwise() {
        let a = parse("herg 1\nvertex u : d1\nvertex v : d2\nvertex w\nedge e : d1 d2\n").unwrap();
        let b = parse("herg 1\nvertex w\nvertex x : p\nvertex y : q\nedge f : q p\n").unwrap();
        let m = isomorphic(&a, &b, false).unwrap();
        assert_eq!(m["w"], "w");
        assert!(isomorphic(&a, &fixtures::bridge(), false).is_none());
    }
}
