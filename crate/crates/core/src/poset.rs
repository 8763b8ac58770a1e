//! Finite posets standing in for prime spectra.
//!
//! A [`SpectralPoset`] is given by its elements and its cover relation (the
//! Hasse diagram). Everything else the rest of the crate needs is derived once
//! at construction: the order relation, longest and shortest chain lengths
//! between comparable pairs, and a linear extension.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// Handle to an element of a particular [`SpectralPoset`].
///
/// Handles are indices into the poset's element list, so the derived order on
/// handles is the canonical tie-break order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A subset of a poset's elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(universe: usize, members: I) -> Self {
        let mut set = Self::empty(universe);
        for e in members {
            set.insert(e);
        }
        set
    }

    /// Set whose membership is given by the bits of `mask` (element `i` is
    /// in the set when bit `i` is).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        Self::from_elements(
            universe,
            (0..universe.min(64)).filter(|i| mask >> i & 1 == 1).map(Element),
        )
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.bits.contains(e.0)
    }

    pub fn insert(&mut self, e: Element) {
        self.bits.insert(e.0);
    }

    pub fn remove(&mut self, e: Element) {
        self.bits.set(e.0, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in canonical (element-list) order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.ones().map(Element)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet { bits }
    }

    /// Member indices, used as the canonical sort key for sets.
    pub fn key(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }
}

/// Finite poset given by a validated cover relation.
#[derive(Clone, Debug)]
pub struct SpectralPoset {
    name: String,
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(Element, Element)>,
    lower: Vec<Vec<Element>>,
    upper: Vec<Vec<Element>>,
    // up_sets[p] = { q | p <= q }, down_sets[q] = { p | p <= q }
    up_sets: Vec<ElementSet>,
    down_sets: Vec<ElementSet>,
    // Longest / shortest saturated chain length from p to q, when p <= q.
    longest: Vec<Vec<Option<u32>>>,
    shortest: Vec<Vec<Option<u32>>>,
    linear_extension: Vec<Element>,
    heights: Vec<u32>,
}

impl PartialEq for SpectralPoset {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.names == other.names && self.covers == other.covers
    }
}

impl Eq for SpectralPoset {}

impl SpectralPoset {
    /// Builds and validates a poset from element ids and cover pairs
    /// `(lower, upper)`.
    pub fn new<S, T>(name: impl Into<String>, elements: &[S], covers: &[(T, T)]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut names = Vec::with_capacity(elements.len());
        let mut index = HashMap::with_capacity(elements.len());
        for id in elements {
            let id = id.as_ref();
            if id.is_empty() {
                return Err(Error::EmptyElementId);
            }
            if index.insert(id.to_owned(), names.len()).is_some() {
                return Err(Error::DuplicateElement(id.to_owned()));
            }
            names.push(id.to_owned());
        }
        let n = names.len();

        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::UnknownElement(id.to_owned()))
        };
        let mut pairs = BTreeSet::new();
        for (lo, hi) in covers {
            let (lo, hi) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            if lo == hi {
                return Err(Error::Cycle(names[lo].clone()));
            }
            if !pairs.insert((lo, hi)) {
                return Err(Error::DuplicateCover(names[lo].clone(), names[hi].clone()));
            }
        }

        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(lo, hi) in &pairs {
            upper[lo].push(Element(hi));
            lower[hi].push(Element(lo));
        }

        // Kahn's algorithm, always releasing the earliest ready element.
        let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut linear_extension = Vec::with_capacity(n);
        while let Some(i) = ready.pop_first() {
            linear_extension.push(Element(i));
            for &Element(j) in &upper[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        if linear_extension.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(Error::Cycle(names[stuck].clone()));
        }

        let mut longest = vec![vec![None; n]; n];
        let mut shortest = vec![vec![None; n]; n];
        for src in 0..n {
            longest[src][src] = Some(0);
            shortest[src][src] = Some(0);
            for &Element(v) in &linear_extension {
                let Some(lv) = longest[src][v] else { continue };
                let sv = shortest[src][v].unwrap_or(0);
                for &Element(w) in &upper[v] {
                    longest[src][w] = Some(longest[src][w].map_or(lv + 1, |x: u32| x.max(lv + 1)));
                    shortest[src][w] =
                        Some(shortest[src][w].map_or(sv + 1, |x: u32| x.min(sv + 1)));
                }
            }
        }

        let mut up_sets = vec![ElementSet::empty(n); n];
        let mut down_sets = vec![ElementSet::empty(n); n];
        for p in 0..n {
            for q in 0..n {
                if longest[p][q].is_some() {
                    up_sets[p].insert(Element(q));
                    down_sets[q].insert(Element(p));
                }
            }
        }

        for &(lo, hi) in &pairs {
            let between = up_sets[lo].intersection(&down_sets[hi]);
            let middle = between.iter().find(|&e| e.0 != lo && e.0 != hi);
            if let Some(mid) = middle {
                return Err(Error::RedundantCover {
                    lower: names[lo].clone(),
                    upper: names[hi].clone(),
                    middle: names[mid.0].clone(),
                });
            }
        }

        let heights = (0..n)
            .map(|q| {
                (0..n)
                    .filter_map(|p| longest[p][q])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        Ok(SpectralPoset {
            name: name.into(),
            names,
            index,
            covers: pairs.into_iter().map(|(a, b)| (Element(a), Element(b))).collect(),
            lower,
            upper,
            up_sets,
            down_sets,
            longest,
            shortest,
            linear_extension,
            heights,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.names.len()).map(Element)
    }

    pub fn element(&self, id: &str) -> Result<Element> {
        self.index
            .get(id)
            .map(|&i| Element(i))
            .ok_or_else(|| Error::UnknownElement(id.to_owned()))
    }

    /// Resolves a list of ids to a set.
    pub fn set<S: AsRef<str>>(&self, ids: &[S]) -> Result<ElementSet> {
        let mut set = ElementSet::empty(self.len());
        for id in ids {
            set.insert(self.element(id.as_ref())?);
        }
        Ok(set)
    }

    pub fn name_of(&self, e: Element) -> &str {
        &self.names[e.0]
    }

    pub fn names_of<'a>(&'a self, set: &'a ElementSet) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(move |e| self.name_of(e))
    }

    /// Renders a set as `{a, b}` in canonical order.
    pub fn format_set(&self, set: &ElementSet) -> String {
        let names: Vec<&str> = self.names_of(set).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Cover pairs `(lower, upper)`, sorted by lower then upper index.
    pub fn covers(&self) -> &[(Element, Element)] {
        &self.covers
    }

    pub fn lower_covers(&self, e: Element) -> &[Element] {
        &self.lower[e.0]
    }

    pub fn upper_covers(&self, e: Element) -> &[Element] {
        &self.upper[e.0]
    }

    /// Elements in a linear extension: every element appears after
    /// everything below it, ties broken by element-list order.
    pub fn linear_extension(&self) -> &[Element] {
        &self.linear_extension
    }

    pub fn leq(&self, p: Element, q: Element) -> bool {
        self.longest[p.0][q.0].is_some()
    }

    /// `{q | p <= q}`
    pub fn up_set(&self, p: Element) -> &ElementSet {
        &self.up_sets[p.0]
    }

    /// `{q | q <= p}`
    pub fn down_set(&self, p: Element) -> &ElementSet {
        &self.down_sets[p.0]
    }

    pub fn is_saturated(&self, p: Element, q: Element) -> Result<bool> {
        if p == q {
            return Err(Error::EqualElements(
                self.name_of(p).into(),
                self.name_of(q).into(),
            ));
        }
        if !self.leq(p, q) {
            return Err(self.not_comparable(p, q));
        }
        Ok(self.upper[p.0].contains(&q))
    }

    pub fn up_closure(&self, set: &ElementSet) -> ElementSet {
        set.iter()
            .fold(self.empty_set(), |acc, p| acc.union(&self.up_sets[p.0]))
    }

    /// Elements covering some member of `set`.
    pub fn cov_closure(&self, set: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for p in set.iter() {
            for &q in &self.upper[p.0] {
                out.insert(q);
            }
        }
        out
    }

    pub fn is_specialization_closed(&self, set: &ElementSet) -> bool {
        self.up_closure(set) == *set
    }

    /// Length of the longest chain from `p` up to `q`.
    pub fn rel_height(&self, p: Element, q: Element) -> Result<u32> {
        self.longest[p.0][q.0].ok_or_else(|| self.not_comparable(p, q))
    }

    /// Length of the shortest saturated chain from `p` up to `q`.
    pub fn shortest_chain(&self, p: Element, q: Element) -> Result<u32> {
        self.shortest[p.0][q.0].ok_or_else(|| self.not_comparable(p, q))
    }

    pub fn height(&self, p: Element) -> u32 {
        self.heights[p.0]
    }

    /// Longest chain starting at `p`; the analogue of `dim R/p`.
    pub fn coheight(&self, p: Element) -> u32 {
        self.longest[p.0].iter().filter_map(|&x| x).max().unwrap_or(0)
    }

    /// `sup { rel_height(q, p) | q in set, q <= p }`.
    pub fn rel_height_in_subset(&self, set: &ElementSet, p: Element) -> Result<u32> {
        set.iter()
            .filter_map(|q| self.longest[q.0][p.0])
            .max()
            .ok_or_else(|| Error::NothingBelow(self.name_of(p).into()))
    }

    pub fn poset_height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn minimal(&self) -> ElementSet {
        ElementSet::from_elements(
            self.len(),
            self.elements().filter(|&e| self.lower[e.0].is_empty()),
        )
    }

    pub fn maximal(&self) -> ElementSet {
        ElementSet::from_elements(
            self.len(),
            self.elements().filter(|&e| self.upper[e.0].is_empty()),
        )
    }

    /// Minimal elements from which a chain of full poset height ascends.
    pub fn assh(&self) -> ElementSet {
        let d = self.poset_height();
        ElementSet::from_elements(
            self.len(),
            self.minimal().iter().filter(|&p| self.coheight(p) == d),
        )
    }

    /// The unique maximal element, if there is one.
    pub fn top(&self) -> Option<Element> {
        let max = self.maximal();
        if max.len() == 1 {
            max.iter().next()
        } else {
            None
        }
    }

    pub fn is_local(&self) -> bool {
        self.top().is_some()
    }

    /// All saturated chains between any comparable pair have equal length.
    pub fn is_catenary(&self) -> bool {
        self.longest
            .iter()
            .zip(&self.shortest)
            .all(|(lr, sr)| lr == sr)
    }

    /// For every element, all maximal chains from minimal elements up to it
    /// have the same length.
    pub fn is_graded_below(&self) -> bool {
        let minimal = self.minimal();
        self.elements().all(|p| {
            minimal.iter().all(|m| match (self.longest[m.0][p.0], self.shortest[m.0][p.0]) {
                (Some(l), Some(s)) => l == s && l == self.heights[p.0],
                _ => true,
            })
        })
    }

    pub fn structure_report(&self) -> StructureReport {
        StructureReport {
            poset_height: self.poset_height(),
            is_local: self.is_local(),
            is_catenary: self.is_catenary(),
            is_graded_below: self.is_graded_below(),
            minimal: self.names_of(&self.minimal()).map(String::from).collect(),
            maximal: self.names_of(&self.maximal()).map(String::from).collect(),
            assh: self.names_of(&self.assh()).map(String::from).collect(),
        }
    }

    fn not_comparable(&self, p: Element, q: Element) -> Error {
        Error::NotComparable(self.name_of(p).into(), self.name_of(q).into())
    }
}

impl fmt::Display for SpectralPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.name)?;
        for (i, (lo, hi)) in self.covers.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}<{}", self.name_of(*lo), self.name_of(*hi))?;
        }
        write!(f, "]")
    }
}

/// Summary of the order-theoretic invariants of a poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub poset_height: u32,
    pub is_local: bool,
    pub is_catenary: bool,
    pub is_graded_below: bool,
    pub minimal: Vec<String>,
    pub maximal: Vec<String>,
    pub assh: Vec<String>,
}
