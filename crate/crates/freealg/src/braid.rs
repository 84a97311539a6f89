use std::collections::HashMap;

use cyclotomic::CycloField;
use schnizer::{Gen, ModuleSpec};

use crate::{FreeElem, ReducedWord};

/// Placement of the q-power in the braid images of e_j and f_j (j != i),
/// with r = -a_ij.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BraidConvention {
    /// T_i(e_j) = sum_s (-1)^{s+r} q_i^{-s} e_i^{(r-s)} e_j e_i^{(s)} and
    /// T_i(f_j) = sum_s (-1)^{s+r} q_i^{s} f_i^{(s)} f_j f_i^{(r-s)}.
    #[default]
    Printed,
    /// The same sums with the divided powers on either side swapped, so
    /// q_i^{-s} goes with e_i^{(s)} on the left.
    Mirrored,
}

/// Data needed to apply the braid automorphisms T_i.
#[derive(Debug, Clone)]
pub struct BraidContext<F: CycloField> {
    field: F,
    cartan: Vec<Vec<i64>>,
    d: Vec<u32>,
    convention: BraidConvention,
}

impl<F: CycloField> BraidContext<F> {
    pub fn new(field: F, spec: &ModuleSpec, convention: BraidConvention) -> Self {
        BraidContext { field, cartan: spec.cartan(), d: spec.d_vector(), convention }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    /// g^{(k)} = g^k / [k]_{eps^d}!.
    fn divided_power(&self, g: Gen, k: u32, d: u32) -> FreeElem<F::Elem> {
        let f = &self.field;
        let fact = f.quantum_factorial(k, d).expect("divided powers stay below l");
        let c = f.inv(&fact).expect("quantum factorials below l are units");
        FreeElem::from_terms(f, vec![(vec![g; k as usize], c)])
    }

    /// T_i applied to one generator.
    pub fn image(&self, i: usize, g: Gen) -> FreeElem<F::Elem> {
        let f = &self.field;
        let a = |j: usize| self.cartan[i - 1][j - 1];
        let di = self.d[i - 1];
        let t_pow = |e: i64| {
            let sym = if e > 0 { Gen::T(i) } else { Gen::TInv(i) };
            vec![sym; e.unsigned_abs() as usize]
        };
        match g {
            Gen::E(j) if j == i => FreeElem::from_terms(f, vec![(vec![Gen::F(i), Gen::T(i)], f.from_int(-1))]),
            Gen::F(j) if j == i => FreeElem::from_terms(f, vec![(vec![Gen::TInv(i), Gen::E(i)], f.from_int(-1))]),
            Gen::T(j) => {
                let mut w = vec![Gen::T(j)];
                w.extend(t_pow(-a(j)));
                FreeElem::from_terms(f, vec![(w, f.one())])
            }
            Gen::TInv(j) => {
                let mut w = vec![Gen::TInv(j)];
                w.extend(t_pow(a(j)));
                FreeElem::from_terms(f, vec![(w, f.one())])
            }
            Gen::E(j) | Gen::F(j) => {
                let is_e = matches!(g, Gen::E(_));
                let r = (-a(j)) as u32;
                let gi = if is_e { Gen::E(i) } else { Gen::F(i) };
                let mut out = FreeElem::zero();
                for s in 0..=r {
                    let q = if is_e { -(s as i64) } else { s as i64 } * di as i64;
                    let mut c = f.eps_pow(q);
                    if (s + r) % 2 == 1 {
                        c = f.neg(&c);
                    }
                    // Printed: e_i^{(r-s)} e_j e_i^{(s)} and f_i^{(s)} f_j f_i^{(r-s)}.
                    let (left, right) = match (self.convention, is_e) {
                        (BraidConvention::Printed, true) | (BraidConvention::Mirrored, false) => (r - s, s),
                        (BraidConvention::Printed, false) | (BraidConvention::Mirrored, true) => (s, r - s),
                    };
                    let term = self
                        .divided_power(gi, left, di)
                        .mul(f, &FreeElem::gen(f, g))
                        .mul(f, &self.divided_power(gi, right, di))
                        .scaled(f, &c);
                    out = out.add(f, &term);
                }
                out
            }
        }
    }
}

/// Applies an algebra homomorphism given by generator images.
pub fn substitute<F: CycloField>(
    f: &F,
    x: &FreeElem<F::Elem>,
    image: &dyn Fn(Gen) -> FreeElem<F::Elem>,
) -> FreeElem<F::Elem> {
    let mut cache: HashMap<Gen, FreeElem<F::Elem>> = HashMap::new();
    let mut out = FreeElem::zero();
    for (w, c) in x.terms() {
        let mut prod = FreeElem::from_terms(f, vec![(Vec::new(), c.clone())]);
        for &g in w {
            let img = cache.entry(g).or_insert_with(|| image(g));
            prod = prod.mul(f, img);
        }
        out = out.add(f, &prod);
    }
    out
}

/// T_i(x), extended from the generator images as an algebra homomorphism.
pub fn braid_t<F: CycloField>(ctx: &BraidContext<F>, i: usize, x: &FreeElem<F::Elem>) -> FreeElem<F::Elem> {
    substitute(ctx.field(), x, &|g| ctx.image(i, g))
}

/// The e and f root vectors, in word order.
pub type RootVectors<E> = (Vec<FreeElem<E>>, Vec<FreeElem<E>>);

/// Root vectors e_{beta_k} = T_{i_1} ... T_{i_{k-1}}(e_{i_k}) and likewise
/// f_{beta_k}, for k = 1..N.
///
/// The images of all generators under the prefix T_{i_1} ... T_{i_k} are
/// carried along the word, so each step is one substitution.
pub fn root_vectors<F: CycloField>(ctx: &BraidContext<F>, w: &ReducedWord) -> RootVectors<F::Elem> {
    let f = ctx.field();
    let n = ctx.rank();
    let gens: Vec<Gen> = (1..=n).flat_map(|i| [Gen::E(i), Gen::F(i), Gen::T(i), Gen::TInv(i)]).collect();
    let mut prefix: HashMap<Gen, FreeElem<F::Elem>> = gens.iter().map(|&g| (g, FreeElem::gen(f, g))).collect();
    let mut es = Vec::new();
    let mut fs = Vec::new();
    for &i in w.indices() {
        es.push(prefix[&Gen::E(i)].clone());
        fs.push(prefix[&Gen::F(i)].clone());
        let next: HashMap<Gen, FreeElem<F::Elem>> =
            gens.iter().map(|&g| (g, substitute(f, &ctx.image(i, g), &|h| prefix[&h].clone()))).collect();
        prefix = next;
    }
    (es, fs)
}
