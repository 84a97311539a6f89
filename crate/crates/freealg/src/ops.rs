use std::collections::HashMap;

use cyclotomic::CycloField;
use schnizer::{Gen, Module};
use weylrep::SparseVec;

use crate::{BraidContext, FreeElem, ReducedWord};

/// Root vectors along a reduced word, applied as operators on V without
/// expanding them in the free algebra.
///
/// Write P_k = T_{i_1} ... T_{i_k}. Then P_k(g) = P_{k-1}(T_{i_k}(g)), and
/// T_{i_k}(g) is a short combination of short words, so P_k(g) acting on a
/// basis vector only needs P_{k-1} applied to a few vectors. Columns of
/// every P_k(g) are cached on first use. The free-algebra root vectors
/// from [`crate::root_vectors`] give the same operators and serve as the
/// oracle for this path.
pub struct RootVectorOps<'m, F: CycloField> {
    md: &'m Module<F>,
    word: Vec<usize>,
    /// images[k][g] = T_{i_{k+1}}(g)
    images: Vec<HashMap<Gen, FreeElem<F::Elem>>>,
    columns: HashMap<(usize, Gen, u64), SparseVec<F::Elem>>,
}

impl<'m, F: CycloField> RootVectorOps<'m, F> {
    pub fn new(md: &'m Module<F>, ctx: &BraidContext<F>, w: &ReducedWord) -> Self {
        let n = ctx.rank();
        let gens: Vec<Gen> = (1..=n).flat_map(|i| [Gen::E(i), Gen::F(i), Gen::T(i), Gen::TInv(i)]).collect();
        let images = w.indices().iter().map(|&i| gens.iter().map(|&g| (g, ctx.image(i, g))).collect()).collect();
        RootVectorOps { md, word: w.indices().to_vec(), images, columns: HashMap::new() }
    }

    /// N, the number of root vectors.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of cached operator columns.
    pub fn cached_columns(&self) -> usize {
        self.columns.len()
    }

    /// P_level(g) applied to v.
    pub fn apply_prefix(&mut self, level: usize, g: Gen, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        if level == 0 {
            return self.md.apply(g, v);
        }
        let f = self.md.field().clone();
        let mut out = SparseVec::zero();
        for (&code, c) in v.iter() {
            let col = self.column(level, g, code);
            if !col.is_zero() {
                out.add_assign(&f, &col.scaled(&f, c));
            }
        }
        out
    }

    fn column(&mut self, level: usize, g: Gen, code: u64) -> SparseVec<F::Elem> {
        if let Some(col) = self.columns.get(&(level, g, code)) {
            return col.clone();
        }
        let f = self.md.field().clone();
        let image = self.images[level - 1][&g].clone();
        let unit = SparseVec::unit(code, f.one());
        let mut col = SparseVec::zero();
        for (w, c) in image.terms() {
            let mut acc = unit.clone();
            for &h in w.iter().rev() {
                if acc.is_zero() {
                    break;
                }
                acc = self.apply_prefix(level - 1, h, &acc);
            }
            if !acc.is_zero() {
                col.add_assign(&f, &acc.scaled(&f, c));
            }
        }
        self.columns.insert((level, g, code), col.clone());
        col
    }

    /// e_{beta_k} v for k = 1..N.
    pub fn apply_e(&mut self, k: usize, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let i = self.word[k - 1];
        self.apply_prefix(k - 1, Gen::E(i), v)
    }

    /// f_{beta_k} v for k = 1..N.
    pub fn apply_f(&mut self, k: usize, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let i = self.word[k - 1];
        self.apply_prefix(k - 1, Gen::F(i), v)
    }

    /// e_{beta_k}^p v.
    pub fn power_e(&mut self, k: usize, p: u32, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        (0..p).fold(v.clone(), |acc, _| if acc.is_zero() { acc } else { self.apply_e(k, &acc) })
    }

    /// f_{beta_k}^p v.
    pub fn power_f(&mut self, k: usize, p: u32, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        (0..p).fold(v.clone(), |acc, _| if acc.is_zero() { acc } else { self.apply_f(k, &acc) })
    }
}
