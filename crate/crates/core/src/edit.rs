//! Edge deletion, cut and contraction, and spanning-subgraph enumeration.

use std::collections::HashSet;

use crate::error::HergError;
use crate::herg::{fresh_name, HalfRibbonRecord, Herg};
use crate::topology::{self, Dropped, SideSystem};

/// The statistics `(r, n, k, f_int, C_ext, o, |H|)` of one spanning subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubgraphStats {
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub f_int: usize,
    pub c_ext: usize,
    pub o: u8,
    pub hcount: usize,
}

impl SubgraphStats {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize, u8, usize) {
        (self.r, self.n, self.k, self.f_int, self.c_ext, self.o, self.hcount)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphSelector {
    /// Labels of the kept edges, sorted.
    pub kept: Vec<String>,
    pub mode: Dropped,
}

fn edge_or_err(g: &Herg, e: &str) -> Result<usize, HergError> {
    g.edge_index(e).ok_or_else(|| HergError::UnknownEdge(e.to_string()))
}

pub fn delete_edge(g: &Herg, e: &str) -> Result<Herg, HergError> {
    let ei = edge_or_err(g, e)?;
    let mut parts = g.parts().clone();
    let rec = parts.edges.remove(ei);
    for v in &mut parts.vertices {
        v.rotation.retain(|d| !rec.darts.contains(d));
    }
    Ok(Herg::from_valid(parts))
}

pub fn cut_edge(g: &Herg, e: &str) -> Result<Herg, HergError> {
    cut_edge_named(g, e).map(|(h, _)| h)
}

/// Cuts `e` and also returns the names of the two half-ribbons it leaves behind.
pub fn cut_edge_named(g: &Herg, e: &str) -> Result<(Herg, [String; 2]), HergError> {
    let ei = edge_or_err(g, e)?;
    let mut used = g.used_names();
    let mut parts = g.parts().clone();
    let rec = parts.edges.remove(ei);
    let names = [
        fresh_name(&format!("{}_a", rec.name), &mut used),
        fresh_name(&format!("{}_b", rec.name), &mut used),
    ];
    for (name, dart) in names.iter().zip(rec.darts.iter()) {
        parts.halves.push(HalfRibbonRecord { name: name.clone(), dart: dart.clone() });
    }
    Ok((Herg::from_valid(parts), names))
}

/// Contracts `e`.
///
/// A non-loop edge merges its end vertices: the far rotation replaces the
/// near dart, entered at the successor of the far dart. A twisted non-loop
/// edge is first untwisted by flipping its far end. An untwisted loop with
/// rotation `(d1, A, d2, B)` splits its vertex into `(A)` and `(B)`; a twisted
/// loop leaves one vertex `(A, reverse B)` with the ends in `B` re-twisted.
pub fn contract_edge(g: &Herg, e: &str) -> Result<Herg, HergError> {
    let ei = edge_or_err(g, e)?;
    let (u, v) = g.edge_ends(ei);
    let rec = g.edges()[ei].clone();
    if u != v && rec.twisted {
        return contract_edge(&g.flip_vertex(v), e);
    }

    let mut parts = g.parts().clone();
    parts.edges.remove(ei);
    let [d1, d2] = rec.darts;
    let rot_u = parts.vertices[u].rotation.clone();
    let start = rot_u.iter().position(|d| *d == d1).unwrap();

    if u != v {
        let rot_v = &parts.vertices[v].rotation;
        let p2 = rot_v.iter().position(|d| *d == d2).unwrap();
        let spliced: Vec<String> = (1..rot_v.len())
            .map(|i| rot_v[(p2 + i) % rot_v.len()].clone())
            .collect();
        let mut merged = Vec::with_capacity(rot_u.len() + spliced.len() - 1);
        merged.extend_from_slice(&rot_u[..start]);
        merged.extend(spliced);
        merged.extend_from_slice(&rot_u[start + 1..]);
        parts.vertices[u].rotation = merged;
        parts.vertices.remove(v);
        return Ok(Herg::from_valid(parts));
    }

    // Loop: read the rotation as (d1, A, d2, B).
    let cyc: Vec<String> = (0..rot_u.len()).map(|i| rot_u[(start + i) % rot_u.len()].clone()).collect();
    let p2 = cyc.iter().position(|d| *d == d2).unwrap();
    let a: Vec<String> = cyc[1..p2].to_vec();
    let b: Vec<String> = cyc[p2 + 1..].to_vec();
    if !rec.twisted {
        let mut used = g.used_names();
        let name = fresh_name(&format!("{}_{}", parts.vertices[u].name, rec.name), &mut used);
        parts.vertices[u].rotation = a;
        parts.vertices.push(crate::herg::VertexRecord { name, rotation: b });
    } else {
        let in_b: HashSet<&String> = b.iter().collect();
        for other in &mut parts.edges {
            let toggles = other.darts.iter().filter(|d| in_b.contains(d)).count();
            if toggles % 2 == 1 {
                other.twisted = !other.twisted;
            }
        }
        let mut rot = a;
        rot.extend(b.iter().rev().cloned());
        parts.vertices[u].rotation = rot;
    }
    Ok(Herg::from_valid(parts))
}

/// Builds the spanning subgraph described by `sel` as a graph in its own right.
pub fn materialize(g: &Herg, sel: &SubgraphSelector) -> Herg {
    let kept: HashSet<&String> = sel.kept.iter().collect();
    let mut out = g.clone();
    for name in g.sorted_edge_names() {
        if kept.contains(&name) {
            continue;
        }
        out = match sel.mode {
            Dropped::Delete => delete_edge(&out, &name),
            Dropped::Cut => cut_edge(&out, &name),
        }
        .expect("edge exists");
    }
    out
}

/// Statistics of the subgraph keeping the edges flagged in `kept` (indexed by
/// edge record position), computed directly on the parent's dart index.
pub fn subgraph_stats(g: &Herg, kept: &[bool], mode: Dropped) -> SubgraphStats {
    let index = &g.index;
    let (k, _) = topology::components_of(index, Some(kept));
    let kept_count = kept.iter().filter(|&&x| x).count();
    let r = g.vertex_count() - k;
    let faces = SideSystem::of_subgraph(index, Some(kept), mode).report();
    let o = !topology::orientable_of(index, Some(kept)) as u8;
    let hcount = match mode {
        Dropped::Delete => g.half_count(),
        Dropped::Cut => g.half_count() + 2 * (g.edge_count() - kept_count),
    };
    SubgraphStats { r, n: kept_count - r, k, f_int: faces.f_int, c_ext: faces.c_ext, o, hcount }
}

/// Every spanning subgraph (delete mode) or spanning cutting subgraph (cut
/// mode), in binary-counter order over the edges sorted by label: bit `j` of
/// the counter keeps the `j`-th edge. Yields exactly `2^e` items.
pub fn enumerate_subgraphs(
    g: &Herg,
    mode: Dropped,
) -> impl Iterator<Item = (SubgraphSelector, SubgraphStats)> + '_ {
    let names = g.sorted_edge_names();
    let order: Vec<usize> = names.iter().map(|n| g.edge_index(n).unwrap()).collect();
    let m = order.len();
    assert!(m < 63, "subset enumeration over {m} edges");
    (0u64..1 << m).map(move |mask| {
        let mut kept = vec![false; m];
        let mut labels = Vec::new();
        for (j, &ei) in order.iter().enumerate() {
            if mask >> j & 1 == 1 {
                kept[ei] = true;
                labels.push(names[j].clone());
            }
        }
        let stats = subgraph_stats(g, &kept, mode);
        (SubgraphSelector { kept: labels, mode }, stats)
    })
}

/// Non-loop, non-bridge edges, by record position.
pub fn ordinary_edges(g: &Herg) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&e| !g.is_loop(e) && !topology::is_bridge(g, e))
        .collect()
}
