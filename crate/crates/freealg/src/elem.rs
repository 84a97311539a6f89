use std::collections::BTreeMap;

use cyclotomic::CycloField;
use schnizer::Gen;

/// A word in the generators, read left to right as a product.
pub type Word = Vec<Gen>;

/// A finite linear combination of words with field coefficients.
///
/// Identical words are merged and zero coefficients dropped; no other
/// rewriting is done, so identities are checked by evaluation on a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeElem<E> {
    terms: BTreeMap<Word, E>,
}

impl<E> Default for FreeElem<E> {
    fn default() -> Self {
        FreeElem { terms: BTreeMap::new() }
    }
}

impl<E: Clone> FreeElem<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word with coefficient 1.
    pub fn one<F: CycloField<Elem = E>>(f: &F) -> Self {
        Self::from_terms(f, vec![(Vec::new(), f.one())])
    }

    pub fn gen<F: CycloField<Elem = E>>(f: &F, g: Gen) -> Self {
        Self::from_terms(f, vec![(vec![g], f.one())])
    }

    pub fn from_terms<F: CycloField<Elem = E>>(f: &F, terms: impl IntoIterator<Item = (Word, E)>) -> Self {
        let mut x = Self::zero();
        for (w, c) in terms {
            x.add_term(f, w, c);
        }
        x
    }

    pub fn add_term<F: CycloField<Elem = E>>(&mut self, f: &F, w: Word, c: E) {
        if f.is_zero(&c) {
            return;
        }
        let sum = match self.terms.get(&w) {
            Some(old) => f.add(old, &c),
            None => c,
        };
        if f.is_zero(&sum) {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &E)> {
        self.terms.iter()
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

    pub fn add<F: CycloField<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut x = self.clone();
        for (w, c) in &other.terms {
            x.add_term(f, w.clone(), c.clone());
        }
        x
    }

    pub fn scaled<F: CycloField<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Self::from_terms(f, self.terms.iter().map(|(w, x)| (w.clone(), f.mul(x, c))))
    }

    /// Product by concatenation of words.
    pub fn mul<F: CycloField<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut x = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                x.add_term(f, w, f.mul(c1, c2));
            }
        }
        x
    }

    /// Text form "c1*w1 + c2*w2" with dot-separated words and "1" for the
    /// empty word.
    pub fn to_text<F: CycloField<Elem = E>>(&self, f: &F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(".")
                };
                format!("{}*{}", f.to_text(c), word)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
