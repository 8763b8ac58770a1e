//! Bass sequences and their bijection with Bass functions.
//!
//! A Bass sequence is an ascending chain `Φ_0 ⊆ Φ_1 ⊆ …` with
//! `Φ_i ∪ cov(Φ_i) ⊆ Φ_{i+1}` whose union is `up(Φ_0)`. Only the prefix
//! before stabilization is stored; every term past the stored prefix is
//! `up(Φ_0)`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bass::BassFunction;
use crate::depth::{Depth, INF};
use crate::error::{Error, Result};
use crate::function::{same_poset, SpecFunction};
use crate::poset::{Element, ElementSet, SpectralPoset};

#[derive(Clone, Debug)]
pub struct BassSequence {
    poset: Arc<SpectralPoset>,
    phi: Vec<ElementSet>,
}

impl BassSequence {
    /// An unvalidated sequence; see [`validate_sequence`].
    pub fn new(poset: &Arc<SpectralPoset>, phi: Vec<ElementSet>) -> Result<Self> {
        if let Some(bad) = phi.iter().find(|s| s.universe() != poset.len()) {
            return Err(Error::LengthMismatch {
                expected: poset.len(),
                got: bad.universe(),
            });
        }
        Ok(BassSequence {
            poset: Arc::clone(poset),
            phi,
        })
    }

    pub fn from_names<S: AsRef<str>>(poset: &Arc<SpectralPoset>, phi: &[&[S]]) -> Result<Self> {
        let sets = phi.iter().map(|ids| poset.set(ids)).collect::<Result<_>>()?;
        Self::new(poset, sets)
    }

    /// The sequence with every term empty.
    pub fn empty(poset: &Arc<SpectralPoset>) -> Self {
        BassSequence {
            poset: Arc::clone(poset),
            phi: Vec::new(),
        }
    }

    pub fn poset(&self) -> &Arc<SpectralPoset> {
        &self.poset
    }

    /// The stored prefix.
    pub fn prefix(&self) -> &[ElementSet] {
        &self.phi
    }

    /// `up(Φ_0)`, the value every term eventually takes.
    pub fn limit(&self) -> ElementSet {
        match self.phi.first() {
            Some(first) => self.poset.up_closure(first),
            None => self.poset.empty_set(),
        }
    }

    pub fn term(&self, i: usize) -> ElementSet {
        self.phi.get(i).cloned().unwrap_or_else(|| self.limit())
    }

    /// Prefix with trailing copies of the limit removed. A nonempty `Φ_0`
    /// is always kept; an empty one yields the empty prefix.
    pub fn normalized(&self) -> Vec<ElementSet> {
        let limit = self.limit();
        let mut phi = self.phi.clone();
        while phi.len() > 1 && phi.last() == Some(&limit) {
            phi.pop();
        }
        if phi.len() == 1 && phi[0].is_empty() {
            phi.clear();
        }
        phi
    }

    /// `self <= other` in the termwise inclusion order.
    pub fn le(&self, other: &BassSequence) -> Result<bool> {
        if !same_poset(&self.poset, &other.poset) {
            return Err(Error::PosetMismatch);
        }
        let horizon = self.phi.len().max(other.phi.len());
        Ok((0..=horizon).all(|i| self.term(i).is_subset(&other.term(i))))
    }
}

impl PartialEq for BassSequence {
    fn eq(&self, other: &Self) -> bool {
        same_poset(&self.poset, &other.poset) && self.normalized() == other.normalized()
    }
}

impl Eq for BassSequence {}

impl fmt::Display for BassSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.phi.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.poset.format_set(s))?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqRule {
    /// `Φ_i ∪ cov(Φ_i) ⊆ Φ_{i+1}` fails.
    Growth,
    /// A term leaves `up(Φ_0)`.
    Escape,
    /// A term at index `>= n` differs from `up(Φ_0)`.
    Stabilization,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeqViolation {
    pub rule: SeqRule,
    pub index: usize,
    #[serde(skip)]
    pub element: Element,
    #[serde(rename = "witness")]
    pub element_name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub ok: bool,
    pub violations: Vec<SeqViolation>,
}

impl SequenceReport {
    fn from_violations(violations: Vec<SeqViolation>) -> Self {
        SequenceReport {
            ok: violations.is_empty(),
            violations,
        }
    }
}

impl fmt::Display for SequenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{:?} at index {}: {}", v.rule, v.index, v.element_name)?;
        }
        Ok(())
    }
}

fn violation(poset: &SpectralPoset, rule: SeqRule, index: usize, element: Element) -> SeqViolation {
    SeqViolation {
        rule,
        index,
        element,
        element_name: poset.name_of(element).to_owned(),
    }
}

/// Checks the sequence axioms and, with `n`, that the terms from index `n`
/// on equal `up(Φ_0)`.
pub fn validate_sequence(s: &BassSequence, n: Option<u32>) -> SequenceReport {
    let poset = &s.poset;
    let limit = s.limit();
    let mut violations = Vec::new();

    for i in 0..s.phi.len() {
        let cur = s.term(i);
        let needed = cur.union(&poset.cov_closure(&cur));
        let next = s.term(i + 1);
        for e in needed.difference(&next).iter() {
            violations.push(violation(poset, SeqRule::Growth, i, e));
        }
    }
    for (i, term) in s.phi.iter().enumerate() {
        for e in term.difference(&limit).iter() {
            violations.push(violation(poset, SeqRule::Escape, i, e));
        }
    }
    if let Some(n) = n {
        for i in (n as usize)..s.phi.len() {
            let term = &s.phi[i];
            for e in limit.difference(term).iter() {
                violations.push(violation(poset, SeqRule::Stabilization, i, e));
            }
        }
    }
    SequenceReport::from_violations(violations)
}

/// `f ↦ (f^{-1}{0, …, i})_i`, stored as `Φ_0, …, Φ_{n-1}` for an `n`-Bass
/// function with `n >= 2`, and as `Φ_0` alone for `n <= 1`.
pub fn seq_from_fct(f: &BassFunction) -> BassSequence {
    let poset = f.poset();
    if f.dom().is_empty() {
        return BassSequence::empty(poset);
    }
    let len = f.level().max(1);
    BassSequence {
        poset: Arc::clone(poset),
        phi: (0..len).map(|i| f.sublevel(i)).collect(),
    }
}

/// `Φ ↦ [p ↦ inf {i | p ∈ Φ_i}]`.
pub fn fct_from_seq(s: &BassSequence) -> Result<BassFunction> {
    let report = validate_sequence(s, None);
    if !report.ok {
        return Err(Error::InvalidSequence(report));
    }
    let poset = &s.poset;
    let limit = s.limit();
    let f = SpecFunction::from_fn(poset, |p| {
        if !limit.contains(p) {
            return INF;
        }
        let first = (0..s.phi.len())
            .find(|&i| s.phi[i].contains(p))
            .unwrap_or(s.phi.len());
        Depth::Finite(first as u32)
    });
    Ok(BassFunction::new_unchecked(f))
}

/// A 2-Bass sequence written as the pair `(Φ, Ψ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBassPair {
    pub phi: ElementSet,
    pub psi: ElementSet,
}

impl TwoBassPair {
    /// Checks `Φ ∪ cov(Φ) ⊆ Ψ ⊆ up(Φ)` directly.
    pub fn validate(&self, poset: &SpectralPoset) -> SequenceReport {
        let mut violations = Vec::new();
        let lower = self.phi.union(&poset.cov_closure(&self.phi));
        for e in lower.difference(&self.psi).iter() {
            violations.push(violation(poset, SeqRule::Growth, 0, e));
        }
        let upper = poset.up_closure(&self.phi);
        for e in self.psi.difference(&upper).iter() {
            violations.push(violation(poset, SeqRule::Escape, 1, e));
        }
        SequenceReport::from_violations(violations)
    }

    pub fn as_sequence(&self, poset: &Arc<SpectralPoset>) -> Result<BassSequence> {
        BassSequence::new(poset, vec![self.phi.clone(), self.psi.clone()])
    }

    /// Componentwise inclusion.
    pub fn le(&self, other: &TwoBassPair) -> bool {
        self.phi.is_subset(&other.phi) && self.psi.is_subset(&other.psi)
    }
}

/// `(Φ, Φ ∪ cov(Φ))`, the least 2-Bass pair with first component `Φ`.
pub fn smallest_ke_pair(poset: &SpectralPoset, phi: &ElementSet) -> TwoBassPair {
    TwoBassPair {
        phi: phi.clone(),
        psi: phi.union(&poset.cov_closure(phi)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bass::{f_of_subset, g_of_assh_subset};
    use crate::fixtures;
    use crate::function::values;

    const Z: Depth = Depth::Finite(0);
    const ONE: Depth = Depth::Finite(1);
    const TWO: Depth = Depth::Finite(2);

    #[test]
    fn validation_examples() {
        let c3 = fixtures::chain3();
        let ok = BassSequence::from_names(&c3, &[&["a"], &["a", "b"]]).unwrap();
        assert!(validate_sequence(&ok, Some(2)).ok);

        let bad = BassSequence::from_names(&c3, &[&["a"], &["a"]]).unwrap();
        let r = validate_sequence(&bad, Some(2));
        assert!(!r.ok);
        assert_eq!(r.violations[0].rule, SeqRule::Growth);
        assert_eq!(r.violations[0].element_name, "b");

        let empty = BassSequence::from_names::<&str>(&c3, &[&[], &[]]).unwrap();
        assert!(validate_sequence(&empty, None).ok);
        assert_eq!(empty, BassSequence::empty(&c3));
    }

    #[test]
    fn escape_and_stabilization() {
        let v = fixtures::vee();
        let s = BassSequence::from_names(&v, &[&["p"], &["p", "r", "q"]]).unwrap();
        let r = validate_sequence(&s, None);
        assert!(r.violations.iter().any(|x| x.rule == SeqRule::Escape && x.element_name == "q"));

        let s = BassSequence::from_names(&v, &[&["p"], &["p", "r"]]).unwrap();
        assert!(validate_sequence(&s, Some(2)).ok);
        let r = validate_sequence(&s, Some(1));
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].rule, SeqRule::Stabilization);
        assert_eq!(r.violations[0].element_name, "m");
    }

    #[test]
    fn function_to_sequence() {
        let v = fixtures::vee();
        let g = g_of_assh_subset(&v, &v.set(&["p"]).unwrap()).unwrap();
        let s = seq_from_fct(&g);
        assert_eq!(s, BassSequence::from_names(&v, &[&["p"], &["p", "r"]]).unwrap());
        assert_eq!(s.term(2), v.set(&["p", "r", "m"]).unwrap());

        let c3 = fixtures::chain3();
        let inf = BassFunction::new(SpecFunction::infinite(&c3)).unwrap();
        assert!(seq_from_fct(&inf).prefix().is_empty());

        let f = f_of_subset(&c3, &c3.set(&["b"]).unwrap());
        let s = seq_from_fct(&f);
        assert_eq!(s, BassSequence::from_names(&c3, &[&["b"], &["b", "c"]]).unwrap());
        assert_eq!(s.prefix().len(), 1);
    }

    #[test]
    fn sequence_to_function() {
        let v = fixtures::vee();
        let s = BassSequence::from_names(&v, &[&["p"], &["p", "r"]]).unwrap();
        assert_eq!(
            *fct_from_seq(&s).unwrap(),
            SpecFunction::from_pairs(&v, &[("p", Z), ("r", ONE), ("m", TWO), ("q", INF)]).unwrap()
        );
        let c3 = fixtures::chain3();
        assert_eq!(*fct_from_seq(&BassSequence::empty(&c3)).unwrap(), SpecFunction::infinite(&c3));
        let s = BassSequence::from_names(&c3, &[&["b"], &["b", "c"]]).unwrap();
        assert_eq!(*fct_from_seq(&s).unwrap(), values(&c3, &[INF, Z, ONE]));

        let bad = BassSequence::from_names(&c3, &[&["a"], &["a"]]).unwrap();
        assert!(matches!(fct_from_seq(&bad), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn smallest_pairs() {
        let c3 = fixtures::chain3();
        let p = smallest_ke_pair(&c3, &c3.set(&["b"]).unwrap());
        assert_eq!(p.psi, c3.set(&["b", "c"]).unwrap());
        let p = smallest_ke_pair(&c3, &c3.empty_set());
        assert!(p.phi.is_empty() && p.psi.is_empty());
        let v = fixtures::vee();
        let p = smallest_ke_pair(&v, &v.set(&["p"]).unwrap());
        assert_eq!(p.psi, v.set(&["p", "r"]).unwrap());
        assert!(p.validate(&v).ok);

        let bad = TwoBassPair {
            phi: v.set(&["p"]).unwrap(),
            psi: v.set(&["p", "q"]).unwrap(),
        };
        let r = bad.validate(&v);
        assert_eq!(r.violations.len(), 2);
    }

    #[test]
    fn sequence_order() {
        let c3 = fixtures::chain3();
        let big = BassSequence::from_names(&c3, &[&["a", "b"]]).unwrap();
        let small = BassSequence::from_names(&c3, &[&["b"]]).unwrap();
        assert!(small.le(&big).unwrap());
        assert!(!big.le(&small).unwrap());
        assert!(BassSequence::empty(&c3).le(&small).unwrap());
    }
}
