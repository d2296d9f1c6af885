//! Sparse Laurent polynomials with integer coefficients.
//!
//! A [`Poly`] is a map from exponent vectors (over a fixed variable list) to
//! nonzero coefficients. Exponents may be negative. The invariant variable set
//! `(xm1, y, z, s, w, t)` carries the relation `w^2 = w`, enforced by capping
//! the `w` exponent at one. [`QuotientPoly`] holds the normal form of a
//! polynomial in `a, b` modulo `b^2 - ab`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarSet {
    /// `xm1, y, z, s, w, t`; `xm1` stands for `x - 1`.
    Invariant,
    /// `x, y, z, s, w, t`, the presentation with `x` expanded.
    InvariantX,
    /// `a, b`.
    Ab,
    /// `xm1, a, b`.
    XmAb,
}

impl VarSet {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            VarSet::Invariant => &["xm1", "y", "z", "s", "w", "t"],
            VarSet::InvariantX => &["x", "y", "z", "s", "w", "t"],
            VarSet::Ab => &["a", "b"],
            VarSet::XmAb => &["xm1", "a", "b"],
        }
    }

    pub fn len(self) -> usize {
        self.names().len()
    }

    fn idempotent(self) -> Option<usize> {
        match self {
            VarSet::Invariant | VarSet::InvariantX => Some(4),
            _ => None,
        }
    }

    pub fn position(self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| *n == name)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VarMismatch(VarSet, VarSet),
    #[error("cannot raise a non-monomial to a negative power")]
    NegativePower,
    #[error("expected {expected} substitution images, got {got}")]
    ImageCount { expected: usize, got: usize },
}

pub type Exponents = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: VarSet,
    terms: BTreeMap<Exponents, i64>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl Poly {
    pub fn zero(vars: VarSet) -> Poly {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, c: i64) -> Poly {
        Poly::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn one(vars: VarSet) -> Poly {
        Poly::constant(vars, 1)
    }

    pub fn monomial(vars: VarSet, exps: Exponents, coeff: i64) -> Poly {
        assert_eq!(exps.len(), vars.len());
        let mut p = Poly::zero(vars);
        p.add_term(exps, coeff);
        p
    }

    pub fn var(vars: VarSet, name: &str) -> Poly {
        let i = vars.position(name).unwrap_or_else(|| panic!("no variable {name} in {vars:?}"));
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Poly::monomial(vars, e, 1)
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, exps: &[i32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    /// Adds `coeff * x^exps` in place, applying the idempotent cap.
    pub fn add_term(&mut self, mut exps: Exponents, coeff: i64) {
        if coeff == 0 {
            return;
        }
        if let Some(w) = self.vars.idempotent() {
            if exps[w] > 1 {
                exps[w] = 1;
            }
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// Re-applies the `w^2 = w` cap to every term.
    pub fn normalize(&self) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    fn check(&self, other: &Poly) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarMismatch(self.vars, other.vars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check(other)?;
        let mut out = Poly::zero(self.vars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Integer power; negative powers are allowed for monomials with a unit coefficient.
    pub fn pow(&self, n: i32) -> Result<Poly, PolyError> {
        if n < 0 {
            let inv = self.monomial_inverse().ok_or(PolyError::NegativePower)?;
            return inv.pow(-n);
        }
        let mut out = Poly::one(self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        Ok(out)
    }

    fn monomial_inverse(&self) -> Option<Poly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms().next().unwrap();
        if c.abs() != 1 {
            return None;
        }
        Some(Poly::monomial(self.vars, e.iter().map(|x| -x).collect(), c))
    }

    /// Replaces variable `i` by `images[i]` (all over `target`).
    pub fn subst(&self, target: VarSet, images: &[Poly]) -> Result<Poly, PolyError> {
        if images.len() != self.vars.len() {
            return Err(PolyError::ImageCount { expected: self.vars.len(), got: images.len() });
        }
        for img in images {
            if img.vars != target {
                return Err(PolyError::VarMismatch(img.vars, target));
            }
        }
        let mut out = Poly::zero(target);
        for (e, c) in self.terms() {
            let mut term = Poly::constant(target, c);
            for (img, &k) in images.iter().zip(e) {
                if k != 0 {
                    term = term.try_mul(&img.pow(k)?)?;
                }
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// Embeds into a larger variable set by name; every variable must exist there.
    pub fn embed(&self, target: VarSet) -> Poly {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| target.position(n).unwrap_or_else(|| panic!("{n} not in {target:?}")))
            .collect();
        let mut out = Poly::zero(target);
        for (e, c) in self.terms() {
            let mut te = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                te[map[i]] += k;
            }
            out.add_term(te, c);
        }
        out
    }

    /// Exchanges `a` and `b` in a polynomial over `(a, b)`.
    pub fn swap_ab(&self) -> Poly {
        assert_eq!(self.vars, VarSet::Ab);
        let mut out = Poly::zero(VarSet::Ab);
        for (e, c) in self.terms() {
            out.add_term(vec![e[1], e[0]], c);
        }
        out
    }

    /// Evaluates a polynomial over `(a, b)` at `a = b`.
    pub fn at_a_eq_b(&self) -> Poly {
        assert_eq!(self.vars, VarSet::Ab);
        let mut out = Poly::zero(VarSet::Ab);
        for (e, c) in self.terms() {
            out.add_term(vec![0, e[0] + e[1]], c);
        }
        out
    }

    /// Sum of coefficients (the value at all variables = 1).
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for Poly {
    /// Terms in descending lexicographic order of exponent vectors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (i, (e, &c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k != 0)
                .map(|(&k, n)| if k == 1 { n.to_string() } else { format!("{n}^{k}") })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.unsigned_abs();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("matching variable sets")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_add(&rhs.scale(-1)).expect("matching variable sets")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("matching variable sets")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

/// An element of `Z[a, a^-1, b] / (b^2 - ab)` in normal form: every term has
/// `b` exponent 0 or 1, via `a^n b^m -> a^(n+m-1) b` for `m >= 2`. A free
/// `xm1` may ride along as a coefficient variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientPoly(Poly);

impl QuotientPoly {
    pub fn reduce(p: &Poly) -> QuotientPoly {
        let (ia, ib) = match p.vars() {
            VarSet::Ab => (0, 1),
            VarSet::XmAb => (1, 2),
            other => panic!("no quotient ring over {other:?}"),
        };
        let mut out = Poly::zero(p.vars());
        for (e, c) in p.terms() {
            let mut e = e.clone();
            if e[ib] >= 2 {
                e[ia] += e[ib] - 1;
                e[ib] = 1;
            }
            out.add_term(e, c);
        }
        QuotientPoly(out)
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn add(&self, other: &QuotientPoly) -> QuotientPoly {
        QuotientPoly::reduce(&(&self.0 + &other.0))
    }

    pub fn sub(&self, other: &QuotientPoly) -> QuotientPoly {
        QuotientPoly::reduce(&(&self.0 - &other.0))
    }

    pub fn mul(&self, other: &QuotientPoly) -> QuotientPoly {
        QuotientPoly::reduce(&(&self.0 * &other.0))
    }
}

impl fmt::Display for QuotientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for QuotientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientPoly({})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ab(a: i32, b: i32, c: i64) -> Poly {
        Poly::monomial(VarSet::Ab, vec![a, b], c)
    }

    #[test]
    fn square_reduces_in_quotient() {
        let s = &ab(1, 0, 1) + &ab(0, 1, 1);
        let sq = &s * &s;
        assert_eq!(sq.to_string(), "a^2 + 2*a*b + b^2");
        assert_eq!(QuotientPoly::reduce(&sq).to_string(), "a^2 + 3*a*b");
    }

    #[test]
    fn duality_style_substitution() {
        let p = Poly::monomial(VarSet::Invariant, vec![1, 0, 2, 2, 0, 2], 1);
        let a = Poly::var(VarSet::Ab, "a");
        let b = Poly::var(VarSet::Ab, "b");
        let one = Poly::one(VarSet::Ab);
        let images = [a.clone(), a.clone(), a.pow(-1).unwrap(), b, one.clone(), one];
        let q = p.subst(VarSet::Ab, &images).unwrap();
        assert_eq!(q.to_string(), "a^-1*b^2");
    }

    #[test]
    fn w_is_idempotent() {
        let p = Poly::monomial(VarSet::Invariant, vec![0, 0, 0, 0, 3, 1], 1);
        assert_eq!(p.to_string(), "w*t");
        let w = Poly::var(VarSet::Invariant, "w");
        assert_eq!((&w * &w).to_string(), "w");
    }

    #[test]
    fn canonical_format() {
        let p = &Poly::monomial(VarSet::Invariant, vec![1, 0, 2, 2, 0, 2], 1) + &Poly::one(VarSet::Invariant);
        assert_eq!(p.to_string(), "xm1*z^2*s^2*t^2 + 1");
        let q = &Poly::var(VarSet::Invariant, "y") + &Poly::monomial(VarSet::Invariant, vec![0, 0, 1, 1, 0, 2], 1);
        assert_eq!(q.to_string(), "y + z*s*t^2");
        assert_eq!((&ab(0, 0, 0) - &ab(-1, 1, 3)).to_string(), "-3*a^-1*b");
        assert_eq!(Poly::zero(VarSet::Ab).to_string(), "0");
        assert_eq!((&ab(2, 0, -1) + &ab(0, 0, 5)).to_string(), "-a^2 + 5");
    }

    #[test]
    fn mismatched_sets_rejected() {
        let p = Poly::one(VarSet::Ab);
        let q = Poly::one(VarSet::Invariant);
        assert_eq!(p.try_add(&q), Err(PolyError::VarMismatch(VarSet::Ab, VarSet::Invariant)));
        assert_eq!((&p + &p).pow(-1), Err(PolyError::NegativePower));
    }

    fn arb_ab() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-3i32..4, 0i32..4, -5i64..6), 0..6).prop_map(|ts| {
            let mut p = Poly::zero(VarSet::Ab);
            for (a, b, c) in ts {
                p.add_term(vec![a, b], c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn reduction_is_a_ring_map(p in arb_ab(), q in arb_ab()) {
            let (rp, rq) = (QuotientPoly::reduce(&p), QuotientPoly::reduce(&q));
            prop_assert_eq!(QuotientPoly::reduce(&(&p * &q)), rp.mul(&rq));
            prop_assert_eq!(QuotientPoly::reduce(&(&p + &q)), rp.add(&rq));
            prop_assert!(rp.as_poly().terms().all(|(e, _)| e[1] <= 1));
        }

        #[test]
        fn reduction_kills_the_ideal(p in arb_ab()) {
            let gen = &ab(0, 2, 1) - &ab(1, 1, 1);
            prop_assert!(QuotientPoly::reduce(&(&gen * &p)).as_poly().is_zero());
        }

        #[test]
        fn arithmetic_is_commutative(p in arb_ab(), q in arb_ab()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) - &q, p.clone());
        }
    }
}
