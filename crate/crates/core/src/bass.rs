//! Bass functions: validation, enumeration and the standard constructions.
//!
//! A function `f` on a poset is a Bass function when
//!
//! * (B1) its domain `{p | f(p) < ∞}` is upward closed,
//! * (B2) it vanishes at the minimal elements of its domain, and
//! * (B3) `f(q) <= f(p) + 1` for every cover `p < q` inside the domain.
//!
//! It is `n`-Bass when in addition every finite value is at most `n`.

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::depth::{Depth, INF};
use crate::error::{Error, Result};
use crate::function::SpecFunction;
use crate::poset::{Element, ElementSet, SpectralPoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    B1,
    B2,
    B3,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    /// Offending element first; for B1 and B3 the second entry is the other
    /// end of the cover.
    #[serde(skip)]
    pub witness: Vec<Element>,
    #[serde(rename = "witness")]
    pub witness_names: Vec<String>,
    pub detail: String,
}

/// Outcome of [`validate_bass`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BassReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// Least `n` for which the function is `n`-Bass; only set when `ok`.
    pub level: Option<u32>,
}

impl fmt::Display for BassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok, level {}", self.level.unwrap_or(0));
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}: {}", v.rule, v.detail)?;
        }
        Ok(())
    }
}

/// Checks (B1)-(B3) and reports every violation with a witness.
pub fn validate_bass(f: &SpecFunction) -> BassReport {
    let poset = f.poset();
    let dom = f.dom();
    let name = |e: Element| poset.name_of(e).to_owned();
    let mut violations = Vec::new();

    for &(p, q) in poset.covers() {
        if dom.contains(p) && !dom.contains(q) {
            violations.push(Violation {
                rule: Rule::B1,
                witness: vec![q, p],
                witness_names: vec![name(q), name(p)],
                detail: format!("{} is outside the domain but lies above {}", name(q), name(p)),
            });
        }
    }

    for p in dom.iter() {
        let minimal = poset.down_set(p).intersection(&dom).len() == 1;
        if minimal && f.get(p) != Depth::Finite(0) {
            violations.push(Violation {
                rule: Rule::B2,
                witness: vec![p],
                witness_names: vec![name(p)],
                detail: format!("{} is minimal in the domain with value {}", name(p), f.get(p)),
            });
        }
    }

    for &(p, q) in poset.covers() {
        if dom.contains(p) && dom.contains(q) && f.get(q) > f.get(p) + 1 {
            violations.push(Violation {
                rule: Rule::B3,
                witness: vec![q, p],
                witness_names: vec![name(q), name(p)],
                detail: format!(
                    "{}={} exceeds {}={} plus one across a cover",
                    name(q),
                    f.get(q),
                    name(p),
                    f.get(p)
                ),
            });
        }
    }

    let ok = violations.is_empty();
    BassReport {
        ok,
        violations,
        level: ok.then(|| f.max_finite()),
    }
}

/// A function that satisfies (B1)-(B3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BassFunction {
    function: SpecFunction,
    level: u32,
}

impl BassFunction {
    pub fn new(function: SpecFunction) -> Result<Self> {
        let report = validate_bass(&function);
        match report.level {
            Some(level) => Ok(BassFunction { function, level }),
            None => Err(Error::NotBass(report)),
        }
    }

    pub(crate) fn new_unchecked(function: SpecFunction) -> Self {
        debug_assert!(validate_bass(&function).ok, "{function}");
        let level = function.max_finite();
        BassFunction { function, level }
    }

    /// Least `n` such that the function is `n`-Bass.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_n_bass(&self, n: u32) -> bool {
        self.level <= n
    }

    pub fn as_function(&self) -> &SpecFunction {
        &self.function
    }

    pub fn into_function(self) -> SpecFunction {
        self.function
    }
}

impl Deref for BassFunction {
    type Target = SpecFunction;

    fn deref(&self) -> &SpecFunction {
        &self.function
    }
}

impl TryFrom<SpecFunction> for BassFunction {
    type Error = Error;

    fn try_from(f: SpecFunction) -> Result<Self> {
        BassFunction::new(f)
    }
}

impl fmt::Display for BassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.function.fmt(f)
    }
}

/// All `n`-Bass functions on `poset`.
///
/// Backtracks over the poset's linear extension. When an element is reached
/// all its lower covers already carry values, so (B1) forces a finite value
/// as soon as one lower cover is finite, (B3) bounds that value by the
/// smallest finite lower-cover value plus one, and (B2) forces `0` when all
/// lower covers are infinite. Every branch therefore completes to a valid
/// function. Results are ordered lexicographically along the linear
/// extension with finite values ascending before `∞`.
pub fn enumerate_n_bass(poset: &Arc<SpectralPoset>, n: u32) -> Vec<BassFunction> {
    let order = poset.linear_extension();
    let mut prefixes = vec![vec![INF; poset.len()]];
    let mut depth = 0;
    while depth < order.len() && prefixes.len() < 64 {
        let x = order[depth];
        prefixes = prefixes
            .into_iter()
            .flat_map(|vals| {
                choices(poset, &vals, x, n)
                    .into_iter()
                    .map(move |v| {
                        let mut next = vals.clone();
                        next[x.index()] = v;
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        depth += 1;
    }

    prefixes
        .into_par_iter()
        .flat_map_iter(|mut vals| {
            let mut out = Vec::new();
            extend(poset, order, depth, n, &mut vals, &mut out);
            out
        })
        .collect()
}

fn choices(poset: &SpectralPoset, vals: &[Depth], x: Element, n: u32) -> Vec<Depth> {
    let bound = poset
        .lower_covers(x)
        .iter()
        .filter_map(|y| vals[y.index()].finite())
        .map(|v| v + 1)
        .min();
    match bound {
        None => vec![Depth::Finite(0), INF],
        Some(b) => (0..=b.min(n)).map(Depth::Finite).collect(),
    }
}

fn extend(
    poset: &Arc<SpectralPoset>,
    order: &[Element],
    depth: usize,
    n: u32,
    vals: &mut Vec<Depth>,
    out: &mut Vec<BassFunction>,
) {
    let Some(&x) = order.get(depth) else {
        let f = SpecFunction::new(poset, vals.clone()).expect("one value per element");
        out.push(BassFunction::new_unchecked(f));
        return;
    };
    for v in choices(poset, vals, x, n) {
        vals[x.index()] = v;
        extend(poset, order, depth + 1, n, vals, out);
    }
    vals[x.index()] = INF;
}

/// `f_Φ`: `0` on `Φ`, `1` on `Φ^up \ Φ`, `∞` elsewhere.
pub fn f_of_subset(poset: &Arc<SpectralPoset>, subset: &ElementSet) -> BassFunction {
    let up = poset.up_closure(subset);
    BassFunction::new_unchecked(SpecFunction::from_fn(poset, |p| {
        if subset.contains(p) {
            Depth::Finite(0)
        } else if up.contains(p) {
            Depth::Finite(1)
        } else {
            INF
        }
    }))
}

/// Inverse of [`f_of_subset`] on 1-Bass functions: the zero locus.
pub fn subset_of_one_bass(f: &BassFunction) -> Result<ElementSet> {
    if !f.is_n_bass(1) {
        return Err(Error::LevelExceeded(1));
    }
    Ok(f.sublevel(0))
}

/// `g_Φ`: height on `Φ^up`, `∞` elsewhere, for a nonempty `Φ ⊆ Assh`.
///
/// On catenary posets this is a `d`-Bass function that is not `(d-1)`-Bass,
/// `d` the poset height. Elsewhere it may fail (B3), which is reported as
/// [`Error::NotBass`].
pub fn g_of_assh_subset(poset: &Arc<SpectralPoset>, subset: &ElementSet) -> Result<BassFunction> {
    if !poset.is_local() {
        return Err(Error::NotLocal);
    }
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let assh = poset.assh();
    if let Some(p) = subset.iter().find(|&p| !assh.contains(p)) {
        return Err(Error::NotInAssh(poset.name_of(p).to_owned()));
    }
    let up = poset.up_closure(subset);
    BassFunction::new(SpecFunction::from_fn(poset, |p| {
        if up.contains(p) {
            Depth::Finite(poset.height(p))
        } else {
            INF
        }
    }))
}

/// `p ↦ height(p)`. Whether this is a Bass function depends on the poset.
pub fn height_function(poset: &Arc<SpectralPoset>) -> SpecFunction {
    SpecFunction::from_fn(poset, |p| Depth::Finite(poset.height(p)))
}

/// Pointwise minimum; Bass functions are closed under it, and so are
/// `n`-Bass functions.
pub fn join_min(f: &BassFunction, g: &BassFunction) -> Result<BassFunction> {
    Ok(BassFunction::new_unchecked(f.pointwise_min(g)?))
}
