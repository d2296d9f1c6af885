//! Small named graphs used throughout the tests and the CLI documentation.

use crate::herg::{EdgeRecord, HalfRibbonRecord, Herg, HergParts, VertexRecord};

fn build(v: Vec<VertexRecord>, e: Vec<EdgeRecord>, h: Vec<HalfRibbonRecord>) -> Herg {
    Herg::new(HergParts { vertices: v, edges: e, halves: h }).expect("fixture is valid")
}

/// Two vertices joined by one untwisted edge.
pub fn bridge() -> Herg {
    build(
        vec![VertexRecord::new("u", &["d1"]), VertexRecord::new("v", &["d2"])],
        vec![EdgeRecord::new("e", "d1", "d2", false)],
        vec![],
    )
}

pub fn twisted_bridge() -> Herg {
    build(
        vec![VertexRecord::new("u", &["d1"]), VertexRecord::new("v", &["d2"])],
        vec![EdgeRecord::new("e", "d1", "d2", true)],
        vec![],
    )
}

/// A bridge whose two ends each carry one half-ribbon.
pub fn two_half_bridge() -> Herg {
    build(
        vec![VertexRecord::new("u", &["d1", "h1d"]), VertexRecord::new("v", &["d2", "h2d"])],
        vec![EdgeRecord::new("e", "d1", "d2", false)],
        vec![HalfRibbonRecord::new("h1", "h1d"), HalfRibbonRecord::new("h2", "h2d")],
    )
}

pub fn untwisted_loop() -> Herg {
    build(
        vec![VertexRecord::new("u", &["d1", "d2"])],
        vec![EdgeRecord::new("e", "d1", "d2", false)],
        vec![],
    )
}

pub fn twisted_loop() -> Herg {
    build(
        vec![VertexRecord::new("u", &["d1", "d2"])],
        vec![EdgeRecord::new("e", "d1", "d2", true)],
        vec![],
    )
}

/// One vertex carrying `n` half-ribbons `h1..hn`.
pub fn vertex_with_halves(n: usize) -> Herg {
    let darts: Vec<String> = (1..=n).map(|i| format!("hd{i}")).collect();
    let refs: Vec<&str> = darts.iter().map(|s| s.as_str()).collect();
    build(
        vec![VertexRecord::new("u", &refs)],
        vec![],
        (1..=n).map(|i| HalfRibbonRecord::new(format!("h{i}"), &darts[i - 1])).collect(),
    )
}

/// `n` isolated bare vertices.
pub fn empty(n: usize) -> Herg {
    build((0..n).map(|i| VertexRecord::new(format!("v{i}"), &[])).collect(), vec![], vec![])
}

/// Path with a half-ribbon: u (d1, dh) -- e -- v (d2), half h on u.
pub fn g6() -> Herg {
    build(
        vec![VertexRecord::new("u", &["d1", "dh"]), VertexRecord::new("v", &["d2"])],
        vec![EdgeRecord::new("e", "d1", "d2", false)],
        vec![HalfRibbonRecord::new("h", "dh")],
    )
}

/// One vertex with an untwisted loop and a half-ribbon outside the loop, so
/// that one of the two loop faces stays closed.
pub fn g7() -> Herg {
    build(
        vec![VertexRecord::new("u", &["d1", "d2", "dh"])],
        vec![EdgeRecord::new("e", "d1", "d2", false)],
        vec![HalfRibbonRecord::new("h", "dh")],
    )
}

/// Two vertices joined by three parallel untwisted edges.
pub fn theta() -> Herg {
    build(
        vec![
            VertexRecord::new("u", &["a1", "b1", "c1"]),
            VertexRecord::new("v", &["a2", "b2", "c2"]),
        ],
        vec![
            EdgeRecord::new("a", "a1", "a2", false),
            EdgeRecord::new("b", "b1", "b2", false),
            EdgeRecord::new("c", "c1", "c2", false),
        ],
        vec![],
    )
}

/// Two vertices joined by two edges, exactly one of them twisted.
pub fn twisted_digon() -> Herg {
    build(
        vec![VertexRecord::new("u", &["a1", "b1"]), VertexRecord::new("v", &["a2", "b2"])],
        vec![EdgeRecord::new("a", "a1", "a2", false), EdgeRecord::new("b", "b1", "b2", true)],
        vec![],
    )
}
