use std::fmt;
use std::sync::Arc;

use crate::depth::{Depth, INF};
use crate::error::{Error, Result};
use crate::poset::{Element, ElementSet, SpectralPoset};

/// A total map from the elements of a poset to `ℕ ∪ {∞}`.
#[derive(Clone, Debug)]
pub struct SpecFunction {
    poset: Arc<SpectralPoset>,
    values: Vec<Depth>,
}

impl PartialEq for SpecFunction {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && same_poset(&self.poset, &other.poset)
    }
}

impl Eq for SpecFunction {}

pub(crate) fn same_poset(a: &Arc<SpectralPoset>, b: &Arc<SpectralPoset>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SpecFunction {
    /// Values are listed in element order.
    pub fn new(poset: &Arc<SpectralPoset>, values: Vec<Depth>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::LengthMismatch {
                expected: poset.len(),
                got: values.len(),
            });
        }
        Ok(SpecFunction {
            poset: Arc::clone(poset),
            values,
        })
    }

    pub fn from_fn(poset: &Arc<SpectralPoset>, f: impl FnMut(Element) -> Depth) -> Self {
        SpecFunction {
            values: poset.elements().map(f).collect(),
            poset: Arc::clone(poset),
        }
    }

    /// Convenience constructor from `(id, value)` pairs covering every element.
    pub fn from_pairs(poset: &Arc<SpectralPoset>, pairs: &[(&str, Depth)]) -> Result<Self> {
        let mut values = vec![None; poset.len()];
        for &(id, value) in pairs {
            values[poset.element(id)?.index()] = Some(value);
        }
        let values = values
            .into_iter()
            .zip(poset.elements())
            .map(|(v, e)| v.ok_or_else(|| Error::MissingValue(poset.name_of(e).to_owned())))
            .collect::<Result<_>>()?;
        Self::new(poset, values)
    }

    pub fn constant(poset: &Arc<SpectralPoset>, value: Depth) -> Self {
        Self::from_fn(poset, |_| value)
    }

    /// The function that is `∞` everywhere (the zero module).
    pub fn infinite(poset: &Arc<SpectralPoset>) -> Self {
        Self::constant(poset, INF)
    }

    pub fn poset(&self) -> &Arc<SpectralPoset> {
        &self.poset
    }

    pub fn get(&self, e: Element) -> Depth {
        self.values[e.index()]
    }

    pub fn values(&self) -> &[Depth] {
        &self.values
    }

    pub fn check_same_poset(&self, other: &SpecFunction) -> Result<()> {
        if same_poset(&self.poset, &other.poset) {
            Ok(())
        } else {
            Err(Error::PosetMismatch)
        }
    }

    /// `{p | f(p) < ∞}`
    pub fn dom(&self) -> ElementSet {
        self.select(|v| v.is_finite())
    }

    /// `{p | f(p) <= bound}`
    pub fn sublevel(&self, bound: u32) -> ElementSet {
        self.select(|v| v <= Depth::Finite(bound))
    }

    fn select(&self, keep: impl Fn(Depth) -> bool) -> ElementSet {
        ElementSet::from_elements(
            self.poset.len(),
            self.poset.elements().filter(|&e| keep(self.get(e))),
        )
    }

    /// Largest finite value, or 0 when the domain is empty.
    pub fn max_finite(&self) -> u32 {
        self.values.iter().filter_map(|v| v.finite()).max().unwrap_or(0)
    }

    /// `self >= other` pointwise.
    pub fn dominates(&self, other: &SpecFunction) -> Result<bool> {
        self.check_same_poset(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a >= b))
    }

    /// First element where `self < other`, if any.
    pub fn first_shortfall(&self, other: &SpecFunction) -> Result<Option<Element>> {
        self.check_same_poset(other)?;
        Ok(self.poset.elements().find(|&e| self.get(e) < other.get(e)))
    }

    pub fn pointwise_min(&self, other: &SpecFunction) -> Result<SpecFunction> {
        self.zip_with(other, Depth::min)
    }

    pub fn pointwise_max(&self, other: &SpecFunction) -> Result<SpecFunction> {
        self.zip_with(other, Depth::max)
    }

    fn zip_with(&self, other: &SpecFunction, op: fn(Depth, Depth) -> Depth) -> Result<SpecFunction> {
        self.check_same_poset(other)?;
        Ok(SpecFunction {
            poset: Arc::clone(&self.poset),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }
}

impl fmt::Display for SpecFunction {
    /// `a:0 b:1 c:inf`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.poset.elements().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", self.poset.name_of(e), self.get(e))?;
        }
        Ok(())
    }
}

/// Builds a function from a value list in element order, for tests and
/// examples. Panics on a length mismatch.
pub fn values(poset: &Arc<SpectralPoset>, vals: &[Depth]) -> SpecFunction {
    SpecFunction::new(poset, vals.to_vec()).expect("one value per element")
}
