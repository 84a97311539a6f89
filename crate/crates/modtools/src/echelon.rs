use std::collections::BTreeMap;

use cyclotomic::CycloField;
use weylrep::SparseVec;

/// A subspace held in reduced row-echelon form.
///
/// Each row is keyed by its pivot, the smallest code in its support, has
/// coefficient 1 there, and no other row has a nonzero entry at that code.
/// The form is unique, so two echelons of the same subspace compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<E> {
    rows: BTreeMap<u64, SparseVec<E>>,
}

impl<E> Default for Echelon<E> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<E: Clone> Echelon<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Pivot codes, ascending.
    pub fn pivots(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.keys().copied()
    }

    /// (pivot, row) pairs in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (u64, &SparseVec<E>)> + '_ {
        self.rows.iter().map(|(&p, r)| (p, r))
    }

    /// v minus its projection onto the span along the pivot coordinates.
    /// The result has no entries at pivot codes and is zero iff v is in the span.
    pub fn reduce<F: CycloField<Elem = E>>(&self, f: &F, v: &SparseVec<E>) -> SparseVec<E> {
        // Rows carry no foreign pivots, so one pass over the pivots in v suffices.
        let mut out = v.clone();
        for (&code, c) in v.iter() {
            if let Some(row) = self.rows.get(&code) {
                out = out.subtracted(f, &row.scaled(f, c));
            }
        }
        out
    }

    /// Adds v to the span; returns the new pivot, or `None` if v was dependent.
    pub fn insert<F: CycloField<Elem = E>>(&mut self, f: &F, v: &SparseVec<E>) -> Option<u64> {
        let r = self.reduce(f, v);
        let (&pivot, lead) = r.iter().next()?;
        let inv = f.inv(lead).expect("a stored coefficient is nonzero");
        let r = r.scaled(f, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(pivot) {
                let c = c.clone();
                *row = row.subtracted(f, &r.scaled(f, &c));
            }
        }
        self.rows.insert(pivot, r);
        Some(pivot)
    }

    /// Rebuilds an echelon from rows claimed to be in reduced form, checking
    /// the claim. Returns `None` if a row is not normalized or not reduced.
    pub fn from_reduced_rows<F: CycloField<Elem = E>>(f: &F, rows: Vec<SparseVec<E>>) -> Option<Self> {
        let mut map = BTreeMap::new();
        for r in rows {
            let (&p, lead) = r.iter().next()?;
            if !f.is_zero(&f.sub(lead, &f.one())) || map.insert(p, r).is_some() {
                return None;
            }
        }
        let ok = map.iter().all(|(&p, r): (&u64, &SparseVec<E>)| r.codes().all(|c| c == p || !map.contains_key(&c)));
        ok.then_some(Echelon { rows: map })
    }
}
