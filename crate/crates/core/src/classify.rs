//! Classifiers for Serre subcategories, torsion-free classes and KE-closed
//! subcategories, read as 0-, 1- and 2-Bass functions.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bass::{
    enumerate_n_bass, f_of_subset, g_of_assh_subset, subset_of_one_bass, BassFunction,
};
use crate::depth::{Depth, INF};
use crate::error::{Error, Result};
use crate::function::SpecFunction;
use crate::poset::{ElementSet, SpectralPoset};
use crate::profile::{condition_f_report, witness_family, WitnessGenerator};
use crate::sequence::{fct_from_seq, seq_from_fct, validate_sequence, BassSequence, TwoBassPair};

/// Row of the classification diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassifierLevel {
    /// Serre subcategories, 0-Bass functions.
    Serre = 0,
    /// Torsion-free classes, 1-Bass functions.
    TorsionFree = 1,
    /// KE-closed subcategories, 2-Bass functions.
    KeClosed = 2,
}

impl ClassifierLevel {
    pub const ALL: [ClassifierLevel; 3] = [
        ClassifierLevel::Serre,
        ClassifierLevel::TorsionFree,
        ClassifierLevel::KeClosed,
    ];

    pub fn n(self) -> u32 {
        self as u32
    }
}

impl TryFrom<u32> for ClassifierLevel {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        match n {
            0 => Ok(ClassifierLevel::Serre),
            1 => Ok(ClassifierLevel::TorsionFree),
            2 => Ok(ClassifierLevel::KeClosed),
            n => Err(Error::LevelExceeded(n)),
        }
    }
}

/// A classifying function together with its other descriptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classifier {
    pub function: BassFunction,
    pub sequence: BassSequence,
    /// `f^{-1}(0)`, for the Serre and torsion-free rows.
    pub subset: Option<ElementSet>,
}

pub fn enumerate_classifiers(poset: &Arc<SpectralPoset>, level: ClassifierLevel) -> Vec<Classifier> {
    enumerate_n_bass(poset, level.n())
        .into_iter()
        .map(|function| {
            let sequence = seq_from_fct(&function);
            let subset = match level {
                ClassifierLevel::KeClosed => None,
                _ => subset_of_one_bass(&function).ok(),
            };
            Classifier {
                function,
                sequence,
                subset,
            }
        })
        .collect()
}

/// Classifier counts for every row.
#[derive(Clone, Debug)]
pub struct ClassificationTable {
    pub poset: Arc<SpectralPoset>,
    pub levels: [Vec<BassFunction>; 3],
    pub ke_equals_torf: bool,
}

impl ClassificationTable {
    pub fn build(poset: &Arc<SpectralPoset>) -> Self {
        let levels = ClassifierLevel::ALL.map(|l| enumerate_n_bass(poset, l.n()));
        let ke_equals_torf = same_functions(&levels[1], &levels[2]);
        ClassificationTable {
            poset: Arc::clone(poset),
            levels,
            ke_equals_torf,
        }
    }

    pub fn counts(&self) -> [usize; 3] {
        [self.levels[0].len(), self.levels[1].len(), self.levels[2].len()]
    }
}

impl fmt::Display for ClassificationTable {
    /// Aligned `level count delta` columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts = self.counts();
        let width = counts.iter().map(|c| c.to_string().len()).max().unwrap_or(1).max(5);
        writeln!(f, "{:<12} {:>width$} {:>width$}", "level", "count", "delta")?;
        let labels = ["0 serre", "1 torf", "2 ke"];
        let mut prev = 0;
        for (label, &count) in labels.iter().zip(&counts) {
            writeln!(f, "{:<12} {:>width$} {:>width$}", label, count, count - prev)?;
            prev = count;
        }
        write!(f, "ke_equals_torf: {}", self.ke_equals_torf)
    }
}

fn same_functions(a: &[BassFunction], b: &[BassFunction]) -> bool {
    let key = |fs: &[BassFunction]| -> HashSet<Vec<Depth>> {
        fs.iter().map(|f| f.values().to_vec()).collect()
    };
    key(a) == key(b)
}

/// Whether torsion-free classes and KE-closed subcategories have the same
/// classifiers.
pub fn ke_equals_torf(poset: &Arc<SpectralPoset>) -> bool {
    same_functions(&enumerate_n_bass(poset, 1), &enumerate_n_bass(poset, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalMode {
    /// Minimum of all 2-Bass functions above the input.
    Brute,
    /// Minimum of all generator witnesses above the input.
    Witness,
}

/// The classifier of `X_h`: the least 2-Bass function above `h`.
pub fn canonicalize(
    h: &SpecFunction,
    mode: CanonicalMode,
    gen: &WitnessGenerator,
) -> Result<BassFunction> {
    let poset = h.poset();
    if let Some(p) = poset.elements().find(|&p| h.get(p) > Depth::Finite(2) && h.get(p) != INF) {
        return Err(Error::ValueOutOfRange {
            element: poset.name_of(p).to_owned(),
            value: h.get(p).to_string(),
        });
    }
    let mut acc = SpecFunction::infinite(poset);
    match mode {
        CanonicalMode::Brute => {
            for g in enumerate_n_bass(poset, 2) {
                if g.dominates(h)? {
                    acc = acc.pointwise_min(&g)?;
                }
            }
        }
        CanonicalMode::Witness => {
            for w in witness_family(poset, gen)? {
                if w.dominates(h)? {
                    acc = acc.pointwise_min(&w)?;
                }
            }
        }
    }
    BassFunction::new(acc)
}

/// Classifier of `X_f ∩ X_g`.
pub fn meet(f: &BassFunction, g: &BassFunction, gen: &WitnessGenerator) -> Result<BassFunction> {
    for x in [f, g] {
        if !x.is_n_bass(2) {
            return Err(Error::LevelExceeded(2));
        }
    }
    canonicalize(&f.pointwise_max(g)?, CanonicalMode::Witness, gen)
}

/// `d`-Bass functions that are not `(d-1)`-Bass, each paired with
/// `dom(f) ∩ Assh`.
#[derive(Clone, Debug)]
pub struct TopDimension {
    pub pairs: Vec<(ElementSet, BassFunction)>,
    /// `f ↦ dom(f) ∩ Assh` is injective with nonempty values.
    pub injective: bool,
    /// On catenary posets: the map hits every nonempty subset of Assh, with
    /// inverse `g_Φ`. `None` on non-catenary posets.
    pub bijective: Option<bool>,
}

pub fn classify_top_dimension(poset: &Arc<SpectralPoset>) -> Result<TopDimension> {
    if !poset.is_local() {
        return Err(Error::NotLocal);
    }
    let d = poset.poset_height();
    if d == 0 {
        return Err(Error::ZeroHeight);
    }
    let assh = poset.assh();
    let mut pairs: Vec<(ElementSet, BassFunction)> = enumerate_n_bass(poset, d)
        .into_iter()
        .filter(|f| f.level() == d)
        .map(|f| (f.dom().intersection(&assh), f))
        .collect();
    pairs.sort_by_key(|(set, _)| set.key());

    let distinct: HashSet<Vec<usize>> = pairs.iter().map(|(s, _)| s.key()).collect();
    let injective = distinct.len() == pairs.len() && pairs.iter().all(|(s, _)| !s.is_empty());

    let bijective = poset.is_catenary().then(|| {
        let expected = (1u64 << assh.len()) - 1;
        pairs.len() as u64 == expected
            && pairs.iter().all(|(set, f)| {
                g_of_assh_subset(poset, set).map(|g| g == *f).unwrap_or(false)
            })
    });

    Ok(TopDimension {
        pairs,
        injective,
        bijective,
    })
}

/// Outcome of one sub-check of [`diagram_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub poset: String,
    pub catenary: bool,
    pub checks: Vec<CheckOutcome>,
}

impl DiagramReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn outcome(name: &'static str, witnesses: Vec<String>) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: witnesses.is_empty(),
        witnesses,
    }
}

/// Subsets of a poset, enumerated by bitmask. Only sensible for small posets.
fn all_subsets(poset: &SpectralPoset) -> impl Iterator<Item = ElementSet> + '_ {
    let n = poset.len();
    assert!(n < 64, "subset enumeration needs fewer than 64 elements");
    (0..1u64 << n).map(move |mask| ElementSet::from_mask(n, mask))
}

/// Verifies the correspondences of the classification diagram on `poset`.
///
/// Subset-indexed checks enumerate all `2^|P|` subsets, so this is meant for
/// posets of modest size.
pub fn diagram_check(poset: &Arc<SpectralPoset>, gen: &WitnessGenerator) -> Result<DiagramReport> {
    let bass: Vec<Vec<BassFunction>> =
        (0..=2).map(|n| enumerate_n_bass(poset, n)).collect();
    let show_set = |s: &ElementSet| poset.format_set(s);

    // (a) level 0 ↔ specialization-closed subsets via dom
    let mut w = Vec::new();
    let closed: Vec<ElementSet> = all_subsets(poset)
        .filter(|s| poset.is_specialization_closed(s))
        .collect();
    let doms: HashSet<Vec<usize>> = bass[0].iter().map(|f| f.dom().key()).collect();
    if doms.len() != bass[0].len() {
        w.push("dom is not injective on 0-Bass functions".to_owned());
    }
    for s in &closed {
        if !doms.contains(&s.key()) {
            w.push(format!("closed subset {} has no 0-Bass function", show_set(s)));
        }
    }
    for f in &bass[0] {
        if !poset.is_specialization_closed(&f.dom()) {
            w.push(format!("dom of {f} is not closed"));
        }
    }
    if closed.len() != bass[0].len() {
        w.push(format!("{} closed subsets vs {} 0-Bass functions", closed.len(), bass[0].len()));
    }
    let a = outcome("serre_specialization_closed", w);

    // (b) level 1 ↔ all subsets via f_Φ, compatible with the level-0 embedding
    let mut w = Vec::new();
    let mut images = HashSet::new();
    for s in all_subsets(poset) {
        let f = f_of_subset(poset, &s);
        if subset_of_one_bass(&f).ok().as_ref() != Some(&s) {
            w.push(format!("f_Φ round trip fails for {}", show_set(&s)));
        }
        if poset.is_specialization_closed(&s) && !bass[0].contains(&f) {
            w.push(format!("f_Φ of closed {} is not 0-Bass", show_set(&s)));
        }
        images.insert(f.values().to_vec());
    }
    if images.len() != bass[1].len() || bass[1].iter().any(|f| !images.contains(f.values())) {
        w.push(format!("{} subset functions vs {} 1-Bass functions", images.len(), bass[1].len()));
    }
    let b = outcome("torf_subsets", w);

    // (c) Bass_0 ⊆ Bass_1 ⊆ Bass_2
    let mut w = Vec::new();
    for n in 0..2 {
        let upper: HashSet<&[Depth]> = bass[n + 1].iter().map(|f| f.values()).collect();
        for f in &bass[n] {
            if !upper.contains(f.values()) {
                w.push(format!("{f} is {n}-Bass but missing at level {}", n + 1));
            }
        }
    }
    let c = outcome("inclusions", w);

    // (d) function ↔ sequence round trips at each level
    let mut w = Vec::new();
    for (n, fs) in bass.iter().enumerate() {
        for f in fs {
            let s = seq_from_fct(f);
            if !validate_sequence(&s, Some(n as u32)).ok {
                w.push(format!("sequence of {f} is not {n}-Bass"));
            }
            match fct_from_seq(&s) {
                Ok(g) if g == *f => {}
                _ => w.push(format!("round trip fails for {f}")),
            }
        }
    }
    let d = outcome("function_sequence_bijection", w);

    // (e) torsion-free classifiers ↔ pairs (Φ, Φ^up)
    let mut w = Vec::new();
    for f in &bass[1] {
        let phi = f.sublevel(0);
        let pair = TwoBassPair {
            psi: poset.up_closure(&phi),
            phi,
        };
        let s = pair.as_sequence(poset)?;
        if !pair.validate(poset).ok || seq_from_fct(f) != s {
            w.push(format!("{f} does not correspond to (Φ, Φ^up)"));
        }
    }
    for f in &bass[2] {
        let s = seq_from_fct(f);
        let is_up_pair = s.term(1) == s.limit();
        if is_up_pair != f.is_n_bass(1) {
            w.push(format!("{f}: pair form and level disagree"));
        }
    }
    let e = outcome("torf_up_pairs", w);

    // (f) condition (F) for every 2-Bass function
    let mut w = Vec::new();
    for f in &bass[2] {
        let report = condition_f_report(f, gen)?;
        for p in &report.failures {
            w.push(format!("{f}: no witness at {}", poset.name_of(*p)));
        }
        if report.failures.is_empty() && !report.reproduces {
            w.push(format!("{f}: witnesses do not reproduce the function"));
        }
    }
    let f = outcome("condition_f", w);

    Ok(DiagramReport {
        poset: poset.name().to_owned(),
        catenary: poset.is_catenary(),
        checks: vec![a, b, c, d, e, f],
    })
}
