//! Polynomial invariants of half-edge ribbon graphs.
//!
//! All state sums run over the `2^e` spanning subgraphs, either deleting the
//! dropped edges or cutting them into pairs of half-ribbons. For a subgraph
//! `A` with statistics `(r, n, k, f_int, C_ext, o, |H|)` the six-variable
//! monomial is
//!
//! `xm1^(r(G) - r(A)) y^n z^(k - f_int + n) s^C_ext w^o t^|H|`
//!
//! where `xm1` stands for `x - 1`.

use std::fmt;
use std::str::FromStr;

use crate::edit::{self, enumerate_subgraphs, SubgraphStats};
use crate::herg::Herg;
use crate::poly::{Poly, QuotientPoly, VarSet};
use crate::topology::{rank_nullity, Dropped};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    RCut,
    RSpan,
    PSpan,
    PCut,
    M,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 5] =
        [InvariantKind::RCut, InvariantKind::RSpan, InvariantKind::PSpan, InvariantKind::PCut, InvariantKind::M];
}

impl FromStr for InvariantKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "RCut" => Ok(InvariantKind::RCut),
            "RSpan" => Ok(InvariantKind::RSpan),
            "PSpan" => Ok(InvariantKind::PSpan),
            "PCut" => Ok(InvariantKind::PCut),
            "M" => Ok(InvariantKind::M),
            _ => Err(format!("unknown invariant '{s}' (expected RCut, RSpan, PSpan, PCut or M)")),
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Plain(Poly),
    Quotient(QuotientPoly),
}

impl InvariantValue {
    /// The underlying polynomial (the normal form for quotient values).
    pub fn poly(&self) -> &Poly {
        match self {
            InvariantValue::Plain(p) => p,
            InvariantValue::Quotient(q) => q.as_poly(),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly().fmt(f)
    }
}

fn r_monomial(rank_g: usize, s: &SubgraphStats) -> Vec<i32> {
    let i = |x: usize| x as i32;
    vec![
        i(rank_g) - i(s.r),
        i(s.n),
        i(s.k) - i(s.f_int) + i(s.n),
        i(s.c_ext),
        s.o as i32,
        i(s.hcount),
    ]
}

/// The six-variable state sum in the given mode.
pub fn r_state_sum(g: &Herg, mode: Dropped) -> Poly {
    let (rank_g, _) = rank_nullity(g);
    let mut p = Poly::zero(VarSet::Invariant);
    for (_, s) in enumerate_subgraphs(g, mode) {
        p.add_term(r_monomial(rank_g, &s), 1);
    }
    p
}

/// `sum a^f_int b^C_ext` over the spanning subgraphs in the given mode, unreduced.
pub fn p_state_sum(g: &Herg, mode: Dropped) -> Poly {
    let mut p = Poly::zero(VarSet::Ab);
    for (_, s) in enumerate_subgraphs(g, mode) {
        p.add_term(vec![s.f_int as i32, s.c_ext as i32], 1);
    }
    p
}

pub fn rcut(g: &Herg) -> Poly {
    r_state_sum(g, Dropped::Cut)
}

pub fn rspan(g: &Herg) -> Poly {
    r_state_sum(g, Dropped::Delete)
}

pub fn pspan(g: &Herg) -> Poly {
    p_state_sum(g, Dropped::Delete)
}

pub fn pcut(g: &Herg) -> QuotientPoly {
    QuotientPoly::reduce(&p_state_sum(g, Dropped::Cut))
}

/// Contributions of the fully cut graph and of the graph itself, each counted
/// once even when they coincide. Unreduced.
pub fn m_poly(g: &Herg) -> Poly {
    let m = g.edge_count();
    let mut p = Poly::zero(VarSet::Ab);
    let mut masks = vec![vec![true; m]];
    if m > 0 {
        masks.push(vec![false; m]);
    }
    for kept in masks {
        let s = edit::subgraph_stats(g, &kept, Dropped::Cut);
        p.add_term(vec![s.f_int as i32, s.c_ext as i32], 1);
    }
    p
}

pub fn invariant(g: &Herg, kind: InvariantKind) -> InvariantValue {
    match kind {
        InvariantKind::RCut => InvariantValue::Plain(rcut(g)),
        InvariantKind::RSpan => InvariantValue::Plain(rspan(g)),
        InvariantKind::PSpan => InvariantValue::Plain(pspan(g)),
        InvariantKind::PCut => InvariantValue::Quotient(pcut(g)),
        InvariantKind::M => InvariantValue::Plain(m_poly(g)),
    }
}

/// Ordinary edge with the smallest label, if any.
fn first_ordinary(g: &Herg) -> Option<String> {
    edit::ordinary_edges(g).into_iter().map(|e| g.edges()[e].name.clone()).min()
}

/// Cut/contract recursion on ordinary edges, state sum on the residue.
pub fn recursive_rcut(g: &Herg) -> Poly {
    match first_ordinary(g) {
        Some(e) => {
            let cut = edit::cut_edge(g, &e).expect("edge exists");
            let con = edit::contract_edge(g, &e).expect("edge exists");
            &recursive_rcut(&cut) + &recursive_rcut(&con)
        }
        None => rcut(g),
    }
}

/// Delete/contract recursion on ordinary edges, state sum on the residue.
pub fn recursive_rspan(g: &Herg) -> Poly {
    match first_ordinary(g) {
        Some(e) => {
            let del = edit::delete_edge(g, &e).expect("edge exists");
            let con = edit::contract_edge(g, &e).expect("edge exists");
            &recursive_rspan(&del) + &recursive_rspan(&con)
        }
        None => rspan(g),
    }
}

/// `xm1 -> a, y -> a, z -> a^-1, s -> b, w -> 1, t -> 1`.
pub fn duality_subst(p: &Poly) -> Poly {
    let a = Poly::var(VarSet::Ab, "a");
    let b = Poly::var(VarSet::Ab, "b");
    let one = Poly::one(VarSet::Ab);
    let a_inv = a.pow(-1).expect("monomial");
    p.subst(VarSet::Ab, &[a.clone(), a, a_inv, b, one.clone(), one]).expect("invariant variables")
}

/// `y -> a, z -> a^-1, s -> b, w -> 1, t -> 1`, keeping `xm1` free.
pub fn partial_subst(p: &Poly) -> Poly {
    let v = |n| Poly::var(VarSet::XmAb, n);
    let one = Poly::one(VarSet::XmAb);
    let a_inv = v("a").pow(-1).expect("monomial");
    p.subst(VarSet::XmAb, &[v("xm1"), v("a"), a_inv, v("b"), one.clone(), one]).expect("invariant variables")
}

/// Rewrites `xm1` as `x - 1`.
pub fn expand_x(p: &Poly) -> Poly {
    let v = |n| Poly::var(VarSet::InvariantX, n);
    let xm1 = &v("x") - &Poly::one(VarSet::InvariantX);
    p.subst(VarSet::InvariantX, &[xm1, v("y"), v("z"), v("s"), v("w"), v("t")]).expect("invariant variables")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::io::parse;

    fn s(p: &Poly) -> String {
        p.to_string()
    }

    #[test]
    fn rcut_hand_values() {
        assert_eq!(s(&rcut(&fixtures::untwisted_loop())), "y + z*s*t^2");
        assert_eq!(s(&rcut(&fixtures::bridge())), "xm1*z^2*s^2*t^2 + 1");
    }

    #[test]
    fn rspan_hand_values() {
        assert_eq!(s(&rspan(&fixtures::bridge())), "xm1 + 1");
        assert_eq!(s(&rspan(&fixtures::untwisted_loop())), "y + 1");
        assert_eq!(s(&rspan(&fixtures::g6())), "xm1*z*s*t + z*s*t");
    }

    #[test]
    fn p_hand_values() {
        let lp = fixtures::untwisted_loop();
        let br = fixtures::bridge();
        assert_eq!(pcut(&lp).to_string(), "a^2 + b");
        assert_eq!(s(&m_poly(&lp)), "a^2 + b");
        assert_eq!(pcut(&br).to_string(), "a*b + a");
        assert_eq!(s(&m_poly(&br)), "a + b^2");
        assert_eq!(s(&pspan(&br)), "a^2 + a");
    }

    #[test]
    fn pspan_of_edgeless_graphs() {
        // n vertices, c of them carrying half-ribbons: a^(n - c) b^c.
        let g = parse("herg 1\nvertex u : h1 h2\nvertex v\nvertex w : h3\nhalf p : h1\nhalf q : h2\nhalf r : h3\n").unwrap();
        assert_eq!(s(&pspan(&g)), "a*b^2");
        assert_eq!(s(&pspan(&fixtures::empty(3))), "a^3");
    }

    #[test]
    fn m_counts_edgeless_graph_once() {
        assert_eq!(s(&m_poly(&fixtures::empty(1))), "a");
        assert_eq!(s(&m_poly(&fixtures::vertex_with_halves(1))), "b");
    }

    #[test]
    fn substitutions() {
        assert_eq!(s(&duality_subst(&rspan(&fixtures::bridge()))), "a + 1");
        assert_eq!(s(&duality_subst(&rspan(&fixtures::untwisted_loop()))), "a + 1");
        assert_eq!(s(&duality_subst(&rspan(&fixtures::g6()))), "b + a^-1*b");
        assert_eq!(duality_subst(&rspan(&fixtures::g7())), duality_subst(&rspan(&fixtures::g6())));
        assert_eq!(s(&duality_subst(&rcut(&fixtures::untwisted_loop()))), "a + a^-1*b");
        assert_eq!(s(&expand_x(&rspan(&fixtures::bridge()))), "x");
    }

    #[test]
    fn edgeless_vertex_with_halves() {
        // One vertex, m half-ribbons in one external cycle: z s t^m.
        assert_eq!(s(&recursive_rcut(&fixtures::vertex_with_halves(3))), "z*s*t^3");
        assert_eq!(s(&recursive_rcut(&fixtures::empty(1))), "1");
    }

    #[test]
    fn recursion_matches_state_sum() {
        for g in [fixtures::theta(), fixtures::twisted_digon(), fixtures::g6(), fixtures::two_half_bridge()] {
            assert_eq!(recursive_rcut(&g), rcut(&g));
            assert_eq!(recursive_rspan(&g), rspan(&g));
        }
    }

    #[test]
    fn untwisted_graphs_have_no_w() {
        let g = fixtures::theta();
        assert!(rcut(&g).terms().all(|(e, _)| e[4] == 0));
        assert!(rcut(&fixtures::twisted_loop()).terms().any(|(e, _)| e[4] == 1));
    }

    #[test]
    fn state_sums_have_two_to_the_e_terms() {
        let g = fixtures::theta();
        assert_eq!(rcut(&g).coefficient_sum(), 8);
        assert_eq!(pspan(&g).coefficient_sum(), 8);
    }
}
