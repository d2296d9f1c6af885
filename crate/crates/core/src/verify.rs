//! Identity checks over single graphs and corpora.
//!
//! Each suite evaluates a fixed list of named identities. An identity that
//! does not apply to a graph (a one-vertex relation on a two-vertex graph, a
//! branch guarded by `C_ext`) reports `NotApplicable` rather than passing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::dual::{check_correspondences, double_dual_check, dual};
use crate::edit::{self, contract_edge, cut_edge, delete_edge, SubgraphSelector};
use crate::herg::{complete, Herg};
use crate::invariants::{self as inv, duality_subst, m_poly, partial_subst, pcut, pspan, rcut, rspan};
use crate::iso::isomorphic;
use crate::poly::{Poly, QuotientPoly, VarSet};
use crate::topology::{self, classify, components, euler_genus, trace_boundary, Dropped, EdgeClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Euler,
    Duality,
    Recurrence,
    DualOps,
    DoubleDual,
    Bridges,
    OneVertex,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Euler,
        Suite::Duality,
        Suite::Recurrence,
        Suite::DualOps,
        Suite::DoubleDual,
        Suite::Bridges,
        Suite::OneVertex,
    ];
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "euler" => Suite::Euler,
            "duality" => Suite::Duality,
            "recurrence" => Suite::Recurrence,
            "dual-ops" => Suite::DualOps,
            "double-dual" => Suite::DoubleDual,
            "bridges" => Suite::Bridges,
            "one-vertex" => Suite::OneVertex,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite '{s}'")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub identity: &'static str,
    pub outcome: Outcome,
}

/// Recursion checks are skipped above this many edges.
pub const RECURSION_EDGE_LIMIT: usize = 8;
/// Edge-operation commutation is checked up to this many edges.
pub const DUAL_OPS_EDGE_LIMIT: usize = 5;

struct Checks(Vec<IdentityResult>);

impl Checks {
    fn push(&mut self, identity: &'static str, outcome: Outcome) {
        self.0.push(IdentityResult { identity, outcome });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, identity: &'static str, lhs: T, rhs: T) {
        let o = if lhs == rhs { Outcome::Pass } else { Outcome::Fail(format!("{lhs} != {rhs}")) };
        self.push(identity, o);
    }

    fn holds(&mut self, identity: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.push(identity, if ok { Outcome::Pass } else { Outcome::Fail(detail()) });
    }

    fn na(&mut self, identity: &'static str) {
        self.push(identity, Outcome::NotApplicable);
    }

    /// Folds several sub-checks of one identity into a single outcome.
    fn all(&mut self, identity: &'static str, failures: Vec<String>, applicable: bool) {
        if !applicable {
            self.na(identity);
        } else if failures.is_empty() {
            self.push(identity, Outcome::Pass);
        } else {
            self.push(identity, Outcome::Fail(failures.join("; ")));
        }
    }
}

fn ab(a: i32, b: i32) -> Poly {
    Poly::monomial(VarSet::Ab, vec![a, b], 1)
}

fn xab(x: i32, a: i32, b: i32) -> Poly {
    Poly::monomial(VarSet::XmAb, vec![x, a, b], 1)
}

fn q(p: &Poly) -> QuotientPoly {
    QuotientPoly::reduce(p)
}

fn euler(g: &Herg, c: &mut Checks) {
    let faces = trace_boundary(g);
    let (k, _) = components(g);
    // Genus of the completed ribbon graph, where every boundary is a face.
    let full = complete(g);
    let ff = trace_boundary(&full);
    let closed = full.vertex_count() as i64 - full.edge_count() as i64 + ff.f_int as i64;
    let gamma = 2 * k as i64 - closed;
    let lhs = g.vertex_count() as i64 - g.edge_count() as i64 + (faces.f_int + faces.c_ext) as i64;
    c.eq("euler: v - e + f_int + C_ext = 2k - gamma", lhs, 2 * k as i64 - gamma);
    c.eq("euler: gamma agrees with the completed graph", euler_genus(g).1, gamma);
    c.holds("euler: gamma >= 0, even when orientable", gamma >= 0 && (!topology::orientable(g) || gamma % 2 == 0), || {
        format!("gamma = {gamma}")
    });
    c.eq("euler: f_ext = |H|", faces.f_ext, g.half_count());
}

fn duality(g: &Herg, c: &mut Checks) {
    let (gd, _) = dual(g);
    let corr = check_correspondences(g, &gd);
    let fails = corr.failures().iter().map(|f| format!("{}: {} != {}", f.name, f.lhs, f.rhs)).collect();
    c.all("dual correspondences", fails, true);

    c.eq("P self-duality", pspan(g), pspan(&gd));
    c.eq("first duality theorem", duality_subst(&rspan(g)), duality_subst(&rspan(&gd)));

    let c_ext = trace_boundary(g).c_ext;
    let (sub, sub_d) = (duality_subst(&rcut(g)), duality_subst(&rcut(&gd)));
    let (m, md) = (m_poly(g), m_poly(&gd));
    let (pc, pcd) = (pcut(g), pcut(&gd));
    let a = ab(1, 0);
    if c_ext > 0 {
        c.eq("second duality theorem (C_ext > 0)", q(&sub), q(&sub_d));
        c.na("second duality theorem (C_ext = 0)");
        c.eq("lemma: PCut(a,b) = PSpan(b,b)", pc.clone(), q(&pspan(g).at_a_eq_b()));
        c.eq("M self-duality (C_ext > 0)", q(&m), q(&md));
        c.na("M swap (C_ext = 0)");
        c.eq("PCut self-duality (C_ext > 0)", pc, pcd);
        c.na("PCut - M self-duality (C_ext = 0)");
    } else {
        c.na("second duality theorem (C_ext > 0)");
        c.eq("second duality theorem (C_ext = 0)", q(&(&(&a * &sub) - &m)), q(&(&(&a * &sub_d) - &md)));
        c.na("lemma: PCut(a,b) = PSpan(b,b)");
        c.na("M self-duality (C_ext > 0)");
        c.eq("M swap (C_ext = 0)", m.clone(), md.swap_ab());
        c.na("PCut self-duality (C_ext > 0)");
        c.eq("PCut - M self-duality (C_ext = 0)", pc.sub(&q(&m)), pcd.sub(&q(&md)));
    }

    // Closed form of M when every vertex carries a dart.
    let faces = trace_boundary(g);
    if g.edge_count() > 0 && faces.bare_vertices.is_empty() {
        let closed = &ab(faces.f_int as i32, faces.c_ext as i32) + &ab(0, g.vertex_count() as i32);
        c.eq("M closed form", m_poly(g), closed);
    } else {
        c.na("M closed form");
    }

    if g.edge_count() == 0 {
        let n = g.vertex_count() as i32;
        c.eq("P of edgeless graphs", pspan(g), ab(n - c_ext as i32, c_ext as i32));
    } else {
        c.na("P of edgeless graphs");
    }
}

fn recurrence(g: &Herg, c: &mut Checks) {
    let e = g.edge_count();
    if e <= RECURSION_EDGE_LIMIT {
        c.eq("RCut recursion = state sum", inv::recursive_rcut(g), rcut(g));
        c.eq("RSpan recursion = state sum", inv::recursive_rspan(g), rspan(g));
    } else {
        c.na("RCut recursion = state sum");
        c.na("RSpan recursion = state sum");
    }
    let total = 1i64 << e;
    let sums = [rcut(g), rspan(g), pspan(g), inv::p_state_sum(g, Dropped::Cut)];
    c.holds("state sums have 2^e terms", sums.iter().all(|p| p.coefficient_sum() == total), || {
        format!("expected {total}")
    });

    let mut fails = Vec::new();
    for ei in edit::ordinary_edges(g) {
        let name = &g.edges()[ei].name;
        let con = contract_edge(g, name).unwrap();
        let del = delete_edge(g, name).unwrap();
        let cut = cut_edge(g, name).unwrap();
        if pspan(g) != &pspan(&del) + &pspan(&con) {
            fails.push(format!("PSpan at {name}"));
        }
        if pcut(g) != pcut(&cut).add(&pcut(&con)) {
            fails.push(format!("PCut at {name}"));
        }
    }
    c.all("P recursions on ordinary edges", fails, !edit::ordinary_edges(g).is_empty());

    if topology::orientable(g) {
        c.holds("orientable graphs have no w", rcut(g).terms().all(|(e, _)| e[4] == 0), || "w term".into());
    } else {
        c.na("orientable graphs have no w");
    }

    if g.half_count() == 0 {
        let br = br_oracle(g);
        let span = rspan(g).subst(VarSet::Invariant, &st_to(false)).unwrap();
        let cutp = rcut(g).subst(VarSet::Invariant, &st_to(true)).unwrap();
        c.eq("RSpan reduces to the ribbon graph polynomial", span, br.clone());
        c.eq("RCut reduces to the ribbon graph polynomial", cutp, br);
    } else {
        c.na("RSpan reduces to the ribbon graph polynomial");
        c.na("RCut reduces to the ribbon graph polynomial");
    }
}

/// Images sending `t -> 1` and `s -> 1` (span) or `s -> z^-1` (cut), which
/// folds external cycles back into faces.
fn st_to(cut: bool) -> Vec<Poly> {
    let v = |n| Poly::var(VarSet::Invariant, n);
    let one = Poly::one(VarSet::Invariant);
    let s = if cut { v("z").pow(-1).unwrap() } else { one.clone() };
    vec![v("xm1"), v("y"), v("z"), s, v("w"), one]
}

/// The ribbon graph state sum, evaluated on materialized subgraphs with all
/// boundary components counted as faces.
fn br_oracle(g: &Herg) -> Poly {
    let names = g.sorted_edge_names();
    let rank_g = topology::rank_nullity(g).0 as i32;
    let mut p = Poly::zero(VarSet::Invariant);
    for mask in 0u64..1 << names.len() {
        let kept = names.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, n)| n.clone()).collect();
        let a = edit::materialize(g, &SubgraphSelector { kept, mode: Dropped::Delete });
        let st = topology::stats(&a);
        let faces = (st.f_int + st.c_ext) as i32;
        p.add_term(
            vec![rank_g - st.r as i32, st.n as i32, st.k as i32 - faces + st.n as i32, 0, st.o as i32, 0],
            1,
        );
    }
    p
}

fn dual_ops(g: &Herg, c: &mut Checks) {
    if g.edge_count() > DUAL_OPS_EDGE_LIMIT {
        c.na("(G - e)* = G*/e");
        c.na("(G/e)* = G* - e");
        return;
    }
    let (gd, _) = dual(g);
    let (mut del_fail, mut con_fail) = (Vec::new(), Vec::new());
    for e in g.edges() {
        let n = &e.name;
        let lhs = dual(&delete_edge(g, n).unwrap()).0;
        if isomorphic(&lhs, &contract_edge(&gd, n).unwrap(), true).is_none() {
            del_fail.push(n.clone());
        }
        let lhs = dual(&contract_edge(g, n).unwrap()).0;
        if isomorphic(&lhs, &delete_edge(&gd, n).unwrap(), true).is_none() {
            con_fail.push(n.clone());
        }
    }
    let any = g.edge_count() > 0;
    c.all("(G - e)* = G*/e", del_fail, any);
    c.all("(G/e)* = G* - e", con_fail, any);
}

fn bridges(g: &Herg, c: &mut Checks) {
    let cls = classify(g);
    let a = ab(1, 0);
    let b = ab(0, 1);
    let one_ab = Poly::one(VarSet::Ab);
    let one_x = Poly::one(VarSet::XmAb);
    let (p_g, r_g) = (pspan(g), partial_subst(&rspan(g)));
    let (pc_g, rc_g) = (pcut(g), partial_subst(&rcut(g)));
    let mut fails: [Vec<String>; 6] = Default::default();
    let mut any = false;
    for (ei, e) in g.edges().iter().enumerate() {
        if !cls.edge_is_bridge[ei] {
            continue;
        }
        any = true;
        let con = contract_edge(g, &e.name).unwrap();
        let class = cls.edge_class[ei];
        let (pf, rf) = if class == EdgeClass::External {
            (&b + &one_ab, &xab(1, -1, 1) + &one_x)
        } else {
            (&a + &one_ab, &xab(1, 0, 0) + &one_x)
        };
        let (p_rhs, r_rhs) = (&pf * &pspan(&con), &rf * &partial_subst(&rspan(&con)));
        if p_g != p_rhs {
            fails[0].push(format!("{} ({class:?})", e.name));
        }
        if r_g != r_rhs {
            fails[1].push(format!("{} ({class:?})", e.name));
        }
        if q(&p_g) != q(&p_rhs) {
            fails[4].push(format!("{} ({class:?})", e.name));
        }
        if q(&r_g) != q(&r_rhs) {
            fails[5].push(format!("{} ({class:?})", e.name));
        }
        let (pcf, rcf) = if class == EdgeClass::Internal {
            (&ab(-1, 2) + &one_ab, &xab(1, -2, 2) + &one_x)
        } else {
            (&b + &one_ab, &xab(1, -1, 1) + &one_x)
        };
        if pc_g != q(&pcf).mul(&pcut(&con)) {
            fails[2].push(format!("{} ({class:?})", e.name));
        }
        if q(&rc_g) != q(&(&rcf * &partial_subst(&rcut(&con)))) {
            fails[3].push(format!("{} ({class:?})", e.name));
        }
    }
    let [f0, f1, f2, f3, f4, f5] = fails;
    c.all("bridge relation for PSpan", f0, any);
    c.all("bridge relation for RSpan", f1, any);
    c.all("bridge relation for PSpan, mod b^2 - ab", f4, any);
    c.all("bridge relation for RSpan, mod b^2 - ab", f5, any);
    c.all("bridge relation for PCut", f2, any);
    c.all("bridge relation for RCut", f3, any);
}

fn one_vertex(g: &Herg, c: &mut Checks) {
    if g.vertex_count() != 1 {
        c.na("one vertex: PSpan = a RSpan(x, a, 1/a, b, 1, 1)");
        c.na("one vertex: PCut = a RCut(x, a, 1/a, b, 1, 1)");
        return;
    }
    let a = xab(0, 1, 0);
    c.eq("one vertex: PSpan = a RSpan(x, a, 1/a, b, 1, 1)", pspan(g).embed(VarSet::XmAb), &a * &partial_subst(&rspan(g)));
    c.eq(
        "one vertex: PCut = a RCut(x, a, 1/a, b, 1, 1)",
        q(&inv::p_state_sum(g, Dropped::Cut).embed(VarSet::XmAb)),
        q(&(&a * &partial_subst(&rcut(g)))),
    );
}

pub fn verify_graph(g: &Herg, suite: Suite) -> Vec<IdentityResult> {
    let mut c = Checks(Vec::new());
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        match s {
            Suite::Euler => euler(g, &mut c),
            Suite::Duality => duality(g, &mut c),
            Suite::Recurrence => recurrence(g, &mut c),
            Suite::DualOps => dual_ops(g, &mut c),
            Suite::DoubleDual => {
                let ok = double_dual_check(g);
                c.holds("double dual", ok, || "G** not isomorphic to G".into())
            }
            Suite::Bridges => bridges(g, &mut c),
            Suite::OneVertex => one_vertex(g, &mut c),
            Suite::All => unreachable!(),
        }
    }
    c.0
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    /// `(graph index, detail)` of the first failure.
    pub first_failure: Option<(usize, String)>,
}

impl Tally {
    pub fn passed(&self) -> bool {
        self.fail == 0
    }
}

/// Per-identity tallies, in the order identities are first reported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub graphs: usize,
    pub rows: Vec<(&'static str, Tally)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|(_, t)| t.passed())
    }

    pub fn row(&self, identity: &str) -> Option<&Tally> {
        self.rows.iter().find(|(n, _)| *n == identity).map(|(_, t)| t)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        for (name, t) in &self.rows {
            let status = if t.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status}  {name:<width$}  pass {:>4}  fail {:>4}  n/a {:>4}", t.pass, t.fail, t.not_applicable)?;
            if let Some((i, d)) = &t.first_failure {
                write!(f, "  first: graph {i}: {d}")?;
            }
            writeln!(f)?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict}  {} graphs", self.graphs)
    }
}

pub fn verify_all(graphs: &[Herg], suite: Suite) -> SuiteReport {
    let mut order: Vec<&'static str> = Vec::new();
    let mut tallies: BTreeMap<&'static str, Tally> = BTreeMap::new();
    for (i, g) in graphs.iter().enumerate() {
        for r in verify_graph(g, suite) {
            let t = tallies.entry(r.identity).or_insert_with(|| {
                order.push(r.identity);
                Tally::default()
            });
            match r.outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::NotApplicable => t.not_applicable += 1,
                Outcome::Fail(d) => {
                    t.fail += 1;
                    t.first_failure.get_or_insert((i, d));
                }
            }
        }
    }
    let rows = order.into_iter().map(|n| (n, tallies.remove(n).unwrap())).collect();
    SuiteReport { graphs: graphs.len(), rows }
}
