//! Seeded random graphs and the verification corpus.
//!
//! The generator draws from SplitMix64 (`rand_xoshiro::SplitMix64`, state
//! initialised to the seed). A draw below `n` is `next_u64() % n`; shuffles
//! are Fisher-Yates from the last position down.

use std::collections::HashSet;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::HergError;
use crate::herg::{EdgeRecord, HalfRibbonRecord, Herg, HergParts, VertexRecord};
use crate::iso::canonical_code;

fn below(rng: &mut SplitMix64, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

fn shuffle<T>(rng: &mut SplitMix64, xs: &mut [T]) {
    for i in (1..xs.len()).rev() {
        let j = below(rng, i + 1);
        xs.swap(i, j);
    }
}

/// A pseudo-random graph with the given counts. When there are at least
/// `vertices - 1` edges, the first `vertices - 1` form a random spanning tree,
/// so the result is connected.
pub fn gen(vertices: usize, edges: usize, halves: usize, seed: u64, allow_twists: bool) -> Result<Herg, HergError> {
    if vertices == 0 && edges + halves > 0 {
        return Err(HergError::ImpossibleCounts(edges + halves));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut rotations: Vec<Vec<String>> = vec![Vec::new(); vertices];
    let mut dart = 0usize;
    let mut new_dart = |v: usize, rotations: &mut Vec<Vec<String>>| {
        dart += 1;
        let name = format!("d{dart}");
        rotations[v].push(name.clone());
        name
    };

    let tree = if vertices > 0 && edges + 1 >= vertices { vertices - 1 } else { 0 };
    let mut edge_records = Vec::with_capacity(edges);
    for i in 0..edges {
        let (x, y) = if i < tree {
            (i + 1, below(&mut rng, i + 1))
        } else {
            (below(&mut rng, vertices), below(&mut rng, vertices))
        };
        let twisted = allow_twists && rng.next_u64() & 1 == 1;
        let d1 = new_dart(x, &mut rotations);
        let d2 = new_dart(y, &mut rotations);
        edge_records.push(EdgeRecord { name: format!("e{i}"), darts: [d1, d2], twisted });
    }
    let mut half_records = Vec::with_capacity(halves);
    for j in 0..halves {
        let v = below(&mut rng, vertices);
        let d = new_dart(v, &mut rotations);
        half_records.push(HalfRibbonRecord { name: format!("h{j}"), dart: d });
    }
    let mut vertex_records = Vec::with_capacity(vertices);
    for (i, mut rotation) in rotations.into_iter().enumerate() {
        shuffle(&mut rng, &mut rotation);
        vertex_records.push(VertexRecord { name: format!("v{i}"), rotation });
    }
    Herg::new(HergParts { vertices: vertex_records, edges: edge_records, halves: half_records })
}

/// Derives the seed of one sweep cell from the base seed.
fn cell_seed(base: u64, cell: u64) -> u64 {
    SplitMix64::seed_from_u64(base ^ cell.wrapping_mul(0x9E37_79B9_7F4A_7C15)).next_u64()
}

/// Connected graphs sweeping `v` in 1..=4, `e` from `v - 1` to `max_edges`,
/// `|H|` in 0..=3, untwisted and twisted, a few seeds each, deduplicated by
/// canonical form. Order is deterministic.
pub fn corpus(max_edges: usize, seed: u64) -> Vec<Herg> {
    const SEEDS_PER_CELL: u64 = 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut cell = 0u64;
    for v in 1..=4usize {
        for e in (v - 1)..=max_edges {
            for h in 0..=3usize {
                for twists in [false, true] {
                    if twists && e == 0 {
                        continue;
                    }
                    for _ in 0..SEEDS_PER_CELL {
                        cell += 1;
                        let g = gen(v, e, h, cell_seed(seed, cell), twists).expect("counts are feasible");
                        if seen.insert(canonical_code(&g, false)) {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::serialize;
    use crate::topology::components;

    #[test]
    fn deterministic() {
        let a = serialize(&gen(2, 1, 0, 7, false).unwrap());
        let b = serialize(&gen(2, 1, 0, 7, false).unwrap());
        assert_eq!(a, b);
        assert_ne!(serialize(&gen(3, 5, 2, 7, true).unwrap()), serialize(&gen(3, 5, 2, 8, true).unwrap()));
    }

    #[test]
    fn counts_are_respected() {
        let g = gen(1, 0, 3, 1, false).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.half_count()), (1, 0, 3));
        let g = gen(3, 4, 2, 5, true).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.half_count()), (3, 4, 2));
    }

    #[test]
    fn no_twists_unless_asked() {
        for s in 0..20 {
            assert!(gen(3, 6, 1, s, false).unwrap().edges().iter().all(|e| !e.twisted));
        }
        assert!((0..20).any(|s| gen(3, 6, 1, s, true).unwrap().edges().iter().any(|e| e.twisted)));
    }

    #[test]
    fn impossible_counts() {
        assert!(matches!(gen(0, 1, 0, 0, false), Err(HergError::ImpossibleCounts(1))));
        assert!(gen(0, 0, 0, 0, false).unwrap().vertex_count() == 0);
    }

    #[test]
    fn corpus_is_connected_and_distinct() {
        let c = corpus(6, 3);
        assert!((250..=400).contains(&c.len()), "{}", c.len());
        assert!(c.iter().all(|g| components(g).0 == 1));
        let codes: HashSet<_> = c.iter().map(|g| canonical_code(g, false)).collect();
        assert_eq!(codes.len(), c.len());
        assert_eq!(corpus(6, 3).iter().map(serialize).collect::<Vec<_>>(), c.iter().map(serialize).collect::<Vec<_>>());
    }
}
