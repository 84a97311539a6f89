use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

use cyclotomic::CycloField;
use serde::{Deserialize, Serialize};

use crate::{IndexShape, MultiIndex, WeylError};

/// A vector of V stored as a map from basis codes to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseVec<E> {
    terms: BTreeMap<u64, E>,
}

impl<E> Default for SparseVec<E> {
    fn default() -> Self {
        SparseVec { terms: BTreeMap::new() }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    m: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonVec {
    l: u32,
    shape: String,
    terms: Vec<JsonTerm>,
}

impl<E> SparseVec<E> {
    pub(crate) fn from_map(terms: BTreeMap<u64, E>) -> Self {
        SparseVec { terms }
    }
}

impl<E: Clone> SparseVec<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// c times the basis vector with code `code`. A zero `c` is stored as given.
    pub fn unit(code: u64, c: E) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(code, c);
        SparseVec { terms }
    }

    /// Sums the given terms, dropping anything that ends up zero.
    pub fn from_terms<F: CycloField<Elem = E>>(field: &F, terms: impl IntoIterator<Item = (u64, E)>) -> Self {
        let mut v = SparseVec::zero();
        for (code, c) in terms {
            v.add_term(field, code, c);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, u64, E> {
        self.terms.iter()
    }

    pub fn get(&self, code: u64) -> Option<&E> {
        self.terms.get(&code)
    }

    /// Adds c to the coefficient of `code`, removing the entry if it cancels.
    pub fn add_term<F: CycloField<Elem = E>>(&mut self, field: &F, code: u64, c: E) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(code) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = field.add(slot.get(), &c);
                if field.is_zero(&sum) {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign<F: CycloField<Elem = E>>(&mut self, field: &F, other: &Self) {
        for (&code, c) in &other.terms {
            self.add_term(field, code, c.clone());
        }
    }

    pub fn added<F: CycloField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(field, other);
        out
    }

    pub fn subtracted<F: CycloField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (&code, c) in &other.terms {
            out.add_term(field, code, field.neg(c));
        }
        out
    }

    pub fn scaled<F: CycloField<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return SparseVec::zero();
        }
        SparseVec { terms: self.terms.iter().map(|(&k, v)| (k, field.mul(v, c))).collect() }
    }

    /// Basis codes in the support, ascending.
    pub fn codes(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    /// JSON text `{"l", "shape", "terms": [{"m": [...], "c": "..."}]}` with terms in code order.
    pub fn to_json<F: CycloField<Elem = E>>(&self, field: &F, shape: &IndexShape) -> String {
        let doc = JsonVec {
            l: shape.l(),
            shape: shape.label(),
            terms: self
                .terms
                .iter()
                .map(|(&code, c)| JsonTerm { m: shape.decode(code).entries().to_vec(), c: field.to_text(c) })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializing plain data cannot fail")
    }

    pub fn from_json<F: CycloField<Elem = E>>(field: &F, shape: &IndexShape, text: &str) -> Result<Self, WeylError> {
        let doc: JsonVec = serde_json::from_str(text).map_err(|e| WeylError::Format(e.to_string()))?;
        if doc.l != shape.l() || doc.shape != shape.label() {
            return Err(WeylError::Format(format!(
                "vector belongs to {} at l = {}, expected {} at l = {}",
                doc.shape,
                doc.l,
                shape.label(),
                shape.l()
            )));
        }
        let mut v = SparseVec::zero();
        for t in doc.terms {
            let code = shape.encode(&MultiIndex::from_entries(t.m))?;
            v.add_term(field, code, field.parse_text(&t.c)?);
        }
        Ok(v)
    }
}

impl<E> IntoIterator for SparseVec<E> {
    type Item = (u64, E);
    type IntoIter = btree_map::IntoIter<u64, E>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}
