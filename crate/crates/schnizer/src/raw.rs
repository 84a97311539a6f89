//! Position-keyed monomials used while transcribing the generator formulas,
//! before positions are resolved to slots.

use std::collections::BTreeMap;

use weylrep::{IndexShape, Term, XWord, ZWord};

/// Exponents keyed by grid position (i, j); zero entries are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Mono(pub BTreeMap<(i64, i64), i64>);

impl Mono {
    pub fn of(items: &[(i64, i64, i64)]) -> Mono {
        let mut m = Mono::default();
        for &(i, j, e) in items {
            m.bump(i, j, e);
        }
        m
    }

    pub fn bump(&mut self, i: i64, j: i64, e: i64) {
        let v = self.0.entry((i, j)).or_insert(0);
        *v += e;
        if *v == 0 {
            self.0.remove(&(i, j));
        }
    }

    pub fn plus(&self, other: &Mono) -> Mono {
        let mut m = self.clone();
        for (&(i, j), &e) in &other.0 {
            m.bump(i, j, e);
        }
        m
    }

    pub fn scaled(&self, c: i64) -> Mono {
        Mono(self.0.iter().map(|(&p, &e)| (p, c * e)).filter(|&(_, e)| e != 0).collect())
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Mono>) -> Mono {
        items.into_iter().fold(Mono::default(), |acc, m| acc.plus(m))
    }

    pub fn dot(&self, other: &Mono) -> i64 {
        self.0.iter().map(|(p, e)| e * other.0.get(p).copied().unwrap_or(0)).sum()
    }

    /// Drops positions outside the grid (used where out-of-range means 0).
    pub fn clipped(&self, shape: &IndexShape) -> Mono {
        Mono(self.0.iter().filter(|(&(i, j), _)| shape.slot_i(i, j).is_some()).map(|(&p, &e)| (p, e)).collect())
    }

    /// Slot form. Every position must lie in the grid.
    pub fn slots(&self, shape: &IndexShape) -> Vec<(usize, i64)> {
        self.0
            .iter()
            .map(|(&(i, j), &e)| {
                let slot = shape.slot_i(i, j).unwrap_or_else(|| panic!("position ({i},{j}) outside {}", shape.label()));
                (slot, e)
            })
            .collect()
    }
}

/// {eps^c z^z}_{eps^d} x^x before slot resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawTerm {
    pub z: Mono,
    pub c: i64,
    pub d: u8,
    pub x: Mono,
}

impl RawTerm {
    pub fn new(z: Mono, c: i64, d: u8, x: Mono) -> RawTerm {
        RawTerm { z, c, d, x }
    }

    /// Left multiplication by the x-monomial `dx`.
    pub fn left_mul(&self, dx: &Mono) -> RawTerm {
        RawTerm { z: self.z.clone(), c: self.c + dx.dot(&self.z), d: self.d, x: dx.plus(&self.x) }
    }

    pub fn resolve(&self, shape: &IndexShape) -> Term {
        Term::new(ZWord::new(self.z.slots(shape), self.c, self.d), XWord::new(self.x.slots(shape)))
    }
}
