//! Abstract modules, recorded only through their depth profiles
//! `p ↦ depth M_p`.
//!
//! Profiles built by [`s_witness`] and [`deform_depth`] are conservative:
//! where the underlying module is only known to satisfy a lower bound, the
//! bound itself is stored. That is enough to decide membership in `X_f` for
//! any `f` with values in `{0, 1, 2, ∞}`.

use std::ops::Deref;
use std::sync::Arc;

use crate::bass::{BassFunction, validate_bass};
use crate::depth::{Depth, INF};
use crate::error::{Error, Result};
use crate::function::SpecFunction;
use crate::poset::{Element, ElementSet, SpectralPoset};

/// Depth profile of an abstract module. Always a Bass function; its domain
/// plays the role of the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthProfile(SpecFunction);

impl DepthProfile {
    pub fn new(f: SpecFunction) -> Result<Self> {
        let report = validate_bass(&f);
        if report.ok {
            Ok(DepthProfile(f))
        } else {
            Err(Error::NotBass(report))
        }
    }

    /// Profile of the zero module.
    pub fn zero(poset: &Arc<SpectralPoset>) -> Self {
        DepthProfile(SpecFunction::infinite(poset))
    }

    pub fn function(&self) -> &SpecFunction {
        &self.0
    }

    pub fn into_function(self) -> SpecFunction {
        self.0
    }

    /// `Supp M`
    pub fn support(&self) -> ElementSet {
        self.0.dom()
    }
}

impl Deref for DepthProfile {
    type Target = SpecFunction;

    fn deref(&self) -> &SpecFunction {
        &self.0
    }
}

impl From<BassFunction> for DepthProfile {
    fn from(f: BassFunction) -> Self {
        DepthProfile(f.into_function())
    }
}

/// Source of modules used to realize values of a Bass function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessGenerator {
    /// `R/p` itself for every `p`; it satisfies (S1).
    S1,
    /// A nonzero (S2) module over `R/p` for every `p`, taken as given.
    S2,
    /// An explicit list of profiles.
    Custom(Vec<DepthProfile>),
}

impl WitnessGenerator {
    /// Serre level of the standard generators.
    pub fn level(&self) -> Option<u32> {
        match self {
            WitnessGenerator::S1 => Some(1),
            WitnessGenerator::S2 => Some(2),
            WitnessGenerator::Custom(_) => None,
        }
    }
}

/// `M ⊕ N`: depth of a direct sum is the minimum of the depths.
pub fn direct_sum(d1: &DepthProfile, d2: &DepthProfile) -> Result<DepthProfile> {
    Ok(DepthProfile(d1.pointwise_min(d2)?))
}

/// `A^n(M) = {p | depth M_p <= n}`
pub fn a_n_set(d: &DepthProfile, n: u32) -> ElementSet {
    d.sublevel(n)
}

/// Whether `M ∈ X_f`, i.e. `depth M_p >= f(p)` for all `p`.
pub fn member_of(d: &DepthProfile, f: &SpecFunction) -> Result<bool> {
    d.dominates(f)
}

/// `f_X(p) = inf_{M ∈ X} depth M_p`; the empty family gives constant `∞`.
pub fn family_function(poset: &Arc<SpectralPoset>, ds: &[DepthProfile]) -> Result<BassFunction> {
    let mut acc = SpecFunction::infinite(poset);
    for d in ds {
        acc = acc.pointwise_min(d)?;
    }
    Ok(BassFunction::new_unchecked(acc))
}

/// Profile of a nonzero module over `R/p0` satisfying Serre's condition at
/// `level`: `q ↦ min(level, ht(q/p0))` above `p0`, `∞` elsewhere.
pub fn s_witness(poset: &Arc<SpectralPoset>, p0: Element, level: u32) -> Result<DepthProfile> {
    if !(1..=2).contains(&level) {
        return Err(Error::InvalidWitnessLevel(level));
    }
    let f = SpecFunction::from_fn(poset, |q| match poset.rel_height(p0, q) {
        Ok(h) => Depth::Finite(h.min(level)),
        Err(_) => INF,
    });
    Ok(DepthProfile(f))
}

/// Lowers the depth at `p` to `target` (1 or 2).
///
/// Elements not above `p` keep their value, `p` gets `target`, and elements
/// strictly above `p` get `min(2, d(q))`, the guaranteed lower bound.
pub fn deform_depth(d: &DepthProfile, p: Element, target: u32) -> Result<DepthProfile> {
    if !(1..=2).contains(&target) {
        return Err(Error::InvalidDeformTarget(target));
    }
    let poset = d.poset();
    let current = d.get(p);
    if !current.is_finite() {
        return Err(Error::OutsideSupport(poset.name_of(p).to_owned()));
    }
    if current < Depth::Finite(target) {
        return Err(Error::DeformBelowTarget {
            element: poset.name_of(p).to_owned(),
            depth: current.to_string(),
            target,
        });
    }
    let f = SpecFunction::from_fn(poset, |q| {
        if q == p {
            Depth::Finite(target)
        } else if poset.leq(p, q) {
            d.get(q).capped(2)
        } else {
            d.get(q)
        }
    });
    Ok(DepthProfile(f))
}

/// A module `E` with `depth E_p = f(p)` and `depth E_q >= f(q)` everywhere.
///
/// With a standard generator of level `L` (so `f` must be `L`-Bass): the zero
/// module when `f(p) = ∞`; the witness over `R/p` when `f(p) = 0`; otherwise
/// the witness over `R/p0`, with `p0` in `dom(f)` attaining the relative
/// height of `p` in `dom(f)`, deformed at `p` down to `f(p)`.
pub fn witness_for(f: &BassFunction, p: Element, gen: &WitnessGenerator) -> Result<DepthProfile> {
    let poset = f.poset();
    let value = f.get(p);
    let witness = match gen {
        WitnessGenerator::S1 | WitnessGenerator::S2 => {
            let level = gen.level().unwrap_or(2);
            if !f.is_n_bass(level) {
                return Err(Error::LevelExceeded(level));
            }
            match value {
                Depth::Infinite => DepthProfile::zero(poset),
                Depth::Finite(0) => s_witness(poset, p, level)?,
                Depth::Finite(k) => {
                    let dom = f.dom();
                    let p0 = attaining_base(poset, &dom, p)?;
                    deform_depth(&s_witness(poset, p0, level)?, p, k)?
                }
            }
        }
        WitnessGenerator::Custom(profiles) => {
            if value == INF {
                DepthProfile::zero(poset)
            } else {
                custom_witness(f, p, profiles)?.ok_or_else(|| no_witness(f, p))?
            }
        }
    };
    if witness.get(p) != value || !witness.dominates(f)? {
        return Err(no_witness(f, p));
    }
    Ok(witness)
}

fn no_witness(f: &BassFunction, p: Element) -> Error {
    Error::NoWitness {
        element: f.poset().name_of(p).to_owned(),
        value: f.get(p).to_string(),
    }
}

/// First member of `dom` below `p` at maximal relative height.
fn attaining_base(poset: &SpectralPoset, dom: &ElementSet, p: Element) -> Result<Element> {
    let best = poset.rel_height_in_subset(dom, p)?;
    Ok(dom
        .iter()
        .find(|&q| poset.rel_height(q, p).ok() == Some(best))
        .expect("supremum is attained on a finite set"))
}

fn custom_witness(
    f: &BassFunction,
    p: Element,
    profiles: &[DepthProfile],
) -> Result<Option<DepthProfile>> {
    for m in profiles {
        if m.get(p) == f.get(p) && m.dominates(f)? {
            return Ok(Some(m.clone()));
        }
    }
    let Depth::Finite(k @ 1..=2) = f.get(p) else {
        return Ok(None);
    };
    for m in profiles {
        if m.dominates(f)? && m.get(p) > Depth::Finite(k) {
            let e = deform_depth(m, p, k)?;
            if e.dominates(f)? {
                return Ok(Some(e));
            }
        }
    }
    Ok(None)
}

/// Per-element outcome of the constructive check of condition (F).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFReport {
    /// Elements where no witness could be produced.
    pub failures: Vec<Element>,
    pub witnesses: Vec<DepthProfile>,
    /// Whether the infimum of the witnesses reproduces `f`.
    pub reproduces: bool,
}

impl ConditionFReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.reproduces
    }
}

pub fn condition_f_report(f: &BassFunction, gen: &WitnessGenerator) -> Result<ConditionFReport> {
    let poset = f.poset();
    let mut failures = Vec::new();
    let mut witnesses = Vec::new();
    for p in poset.elements() {
        match witness_for(f, p, gen) {
            Ok(w) => witnesses.push(w),
            Err(Error::LevelExceeded(_) | Error::NoWitness { .. }) => failures.push(p),
            Err(e) => return Err(e),
        }
    }
    let reproduces = failures.is_empty() && *family_function(poset, &witnesses)? == **f;
    Ok(ConditionFReport {
        failures,
        witnesses,
        reproduces,
    })
}

/// Every element has a witness and the witnesses' infimum is `f` again.
pub fn check_condition_f(f: &BassFunction, gen: &WitnessGenerator) -> Result<bool> {
    Ok(condition_f_report(f, gen)?.ok())
}

/// Every profile the generator can produce with at most one deformation:
/// the zero module, the base witnesses, and their single-point deforms.
pub fn witness_family(poset: &Arc<SpectralPoset>, gen: &WitnessGenerator) -> Result<Vec<DepthProfile>> {
    let bases = match gen {
        WitnessGenerator::S1 | WitnessGenerator::S2 => {
            let level = gen.level().unwrap_or(2);
            poset
                .elements()
                .map(|p0| s_witness(poset, p0, level))
                .collect::<Result<Vec<_>>>()?
        }
        WitnessGenerator::Custom(profiles) => profiles.clone(),
    };
    let mut family = vec![DepthProfile::zero(poset)];
    for base in &bases {
        family.push(base.clone());
        for p in base.support().iter() {
            for k in 1..=2 {
                if base.get(p) >= Depth::Finite(k) {
                    family.push(deform_depth(base, p, k)?);
                }
            }
        }
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bass::{enumerate_n_bass, f_of_subset, height_function};
    use crate::fixtures;
    use crate::function::values;

    const Z: Depth = Depth::Finite(0);
    const ONE: Depth = Depth::Finite(1);
    const TWO: Depth = Depth::Finite(2);

    fn el(p: &SpectralPoset, id: &str) -> Element {
        p.element(id).unwrap()
    }

    #[test]
    fn witnesses() {
        let c3 = fixtures::chain3();
        assert_eq!(*s_witness(&c3, el(&c3, "a"), 2).unwrap(), values(&c3, &[Z, ONE, TWO]));
        assert_eq!(*s_witness(&c3, el(&c3, "c"), 2).unwrap(), values(&c3, &[INF, INF, Z]));
        assert_eq!(*s_witness(&c3, el(&c3, "a"), 1).unwrap(), values(&c3, &[Z, ONE, ONE]));
        let v = fixtures::vee();
        assert_eq!(
            *s_witness(&v, el(&v, "q"), 2).unwrap(),
            SpecFunction::from_pairs(&v, &[("p", INF), ("r", INF), ("q", Z), ("m", ONE)]).unwrap()
        );
        assert!(matches!(s_witness(&v, el(&v, "q"), 3), Err(Error::InvalidWitnessLevel(3))));
    }

    #[test]
    fn sums_and_sets() {
        let v = fixtures::vee();
        let sp = s_witness(&v, el(&v, "p"), 2).unwrap();
        let sq = s_witness(&v, el(&v, "q"), 2).unwrap();
        let sum = direct_sum(&sp, &sq).unwrap();
        assert_eq!(
            *sum,
            SpecFunction::from_pairs(&v, &[("p", Z), ("r", ONE), ("m", ONE), ("q", Z)]).unwrap()
        );
        assert_eq!(direct_sum(&sp, &sp).unwrap(), sp);
        assert_eq!(direct_sum(&sp, &DepthProfile::zero(&v)).unwrap(), sp);
        assert_eq!(*family_function(&v, &[sp.clone(), sq.clone()]).unwrap(), *sum);
        assert_eq!(*family_function(&v, &[]).unwrap(), SpecFunction::infinite(&v));

        let c3 = fixtures::chain3();
        let h = DepthProfile::new(height_function(&c3)).unwrap();
        assert_eq!(a_n_set(&h, 0), c3.set(&["a"]).unwrap());
        assert_eq!(a_n_set(&h, 1), c3.set(&["a", "b"]).unwrap());
        assert!(a_n_set(&DepthProfile::zero(&c3), 5).is_empty());
        assert_eq!(*family_function(&c3, &[s_witness(&c3, el(&c3, "a"), 2).unwrap()]).unwrap(), *h);
    }

    #[test]
    fn membership() {
        let c3 = fixtures::chain3();
        let ht = height_function(&c3);
        let h = DepthProfile::new(ht.clone()).unwrap();
        assert!(member_of(&h, &ht).unwrap());
        assert!(member_of(&s_witness(&c3, el(&c3, "a"), 2).unwrap(), &ht).unwrap());
        let fb = DepthProfile::from(f_of_subset(&c3, &c3.set(&["b"]).unwrap()));
        assert!(!member_of(&fb, &ht).unwrap());
        assert_eq!(fb.first_shortfall(&ht).unwrap(), Some(el(&c3, "b")));
    }

    #[test]
    fn deformations() {
        let c3 = fixtures::chain3();
        let sa = s_witness(&c3, el(&c3, "a"), 2).unwrap();
        assert_eq!(*deform_depth(&sa, el(&c3, "b"), 1).unwrap(), values(&c3, &[Z, ONE, TWO]));
        assert_eq!(*deform_depth(&sa, el(&c3, "c"), 2).unwrap(), values(&c3, &[Z, ONE, TWO]));
        assert_eq!(*deform_depth(&sa, el(&c3, "c"), 1).unwrap(), values(&c3, &[Z, ONE, ONE]));
        assert!(matches!(
            deform_depth(&sa, el(&c3, "a"), 1),
            Err(Error::DeformBelowTarget { target: 1, .. })
        ));
        let sc = s_witness(&c3, el(&c3, "c"), 2).unwrap();
        assert!(matches!(deform_depth(&sc, el(&c3, "b"), 1), Err(Error::OutsideSupport(_))));
        assert!(matches!(deform_depth(&sa, el(&c3, "c"), 3), Err(Error::InvalidDeformTarget(3))));

        // Caps to 2 strictly above the deformation point.
        let c4 = fixtures::chain4();
        let tall = DepthProfile::new(height_function(&c4)).unwrap();
        let d = deform_depth(&tall, el(&c4, "b"), 1).unwrap();
        assert_eq!(*d, values(&c4, &[Z, ONE, TWO, TWO]));
    }

    #[test]
    fn witness_recipe() {
        let c3 = fixtures::chain3();
        let s2 = WitnessGenerator::S2;
        let h = BassFunction::new(height_function(&c3)).unwrap();
        let w = witness_for(&h, el(&c3, "b"), &s2).unwrap();
        assert_eq!(*w, values(&c3, &[Z, ONE, TWO]));

        let fb = f_of_subset(&c3, &c3.set(&["b"]).unwrap());
        let w = witness_for(&fb, el(&c3, "c"), &s2).unwrap();
        assert_eq!(w.get(el(&c3, "c")), ONE);
        assert!(w.dominates(&fb).unwrap());

        let inf = BassFunction::new(SpecFunction::infinite(&c3)).unwrap();
        for p in c3.elements() {
            assert_eq!(witness_for(&inf, p, &s2).unwrap(), DepthProfile::zero(&c3));
        }
        assert!(matches!(witness_for(&h, el(&c3, "c"), &WitnessGenerator::S1), Err(Error::LevelExceeded(1))));
    }

    #[test]
    fn condition_f_on_chains() {
        let c3 = fixtures::chain3();
        for f in enumerate_n_bass(&c3, 2) {
            assert!(check_condition_f(&f, &WitnessGenerator::S2).unwrap(), "{f}");
        }
        for f in enumerate_n_bass(&c3, 1) {
            assert!(check_condition_f(&f, &WitnessGenerator::S1).unwrap(), "{f}");
        }
        let c4 = fixtures::chain4();
        let tall = BassFunction::new(height_function(&c4)).unwrap();
        let report = condition_f_report(&tall, &WitnessGenerator::S2).unwrap();
        assert!(!report.ok());
        assert!(!check_condition_f(&tall, &WitnessGenerator::S2).unwrap());
        let inf = BassFunction::new(SpecFunction::infinite(&c4)).unwrap();
        assert!(check_condition_f(&inf, &WitnessGenerator::S2).unwrap());
    }

    #[test]
    fn custom_generator() {
        let c3 = fixtures::chain3();
        let only_top = WitnessGenerator::Custom(vec![s_witness(&c3, el(&c3, "c"), 2).unwrap()]);
        let f = f_of_subset(&c3, &c3.set(&["c"]).unwrap());
        assert!(check_condition_f(&f, &only_top).unwrap());
        let h = BassFunction::new(height_function(&c3)).unwrap();
        assert!(!check_condition_f(&h, &only_top).unwrap());

        let full = WitnessGenerator::Custom(vec![s_witness(&c3, el(&c3, "a"), 2).unwrap()]);
        assert!(check_condition_f(&h, &full).unwrap());
    }

    #[test]
    fn family_members_are_bass() {
        for p in fixtures::battery() {
            for gen in [WitnessGenerator::S1, WitnessGenerator::S2] {
                for w in witness_family(&p, &gen).unwrap() {
                    assert!(validate_bass(&w).ok, "{p}: {}", *w);
                }
            }
        }
    }
}
