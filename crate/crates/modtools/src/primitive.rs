use std::collections::BTreeMap;

use cyclotomic::CycloField;
use rayon::prelude::*;
use schnizer::{Gen, Module};
use weylrep::SparseVec;

use crate::{weight_blocks, weight_of, Echelon, ModError, SubmoduleBasis, WeightVector};

/// Where to look for primitive vectors.
#[derive(Debug, Clone, Copy)]
pub enum Scope<'a, E> {
    /// All of V; refused when l^N exceeds `bound`.
    Exhaustive { bound: u64 },
    /// Inside a previously spanned subspace.
    Within(&'a SubmoduleBasis<E>),
}

type RowAndCombination<E> = (SparseVec<E>, SparseVec<E>);

/// Kernel of the linear map sending the j-th unit vector to `cols[j]`, as
/// sparse combinations of column indices.
fn kernel_of_columns<F: CycloField>(f: &F, cols: &[SparseVec<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    // Rows keyed by pivot (smallest key), each with the combination of
    // columns that produced it.
    let mut rows: BTreeMap<u64, RowAndCombination<F::Elem>> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        let mut r = col.clone();
        let mut comb = SparseVec::unit(j as u64, f.one());
        loop {
            let Some(p) = r.codes().find(|c| rows.contains_key(c)) else { break };
            let c = r.get(p).expect("p is in the support").clone();
            let (rv, rc) = &rows[&p];
            r = r.subtracted(f, &rv.scaled(f, &c));
            comb = comb.subtracted(f, &rc.scaled(f, &c));
        }
        match r.iter().next() {
            None => kernel.push(comb),
            Some((&p, lead)) => {
                let inv = f.inv(lead).expect("stored coefficients are nonzero");
                rows.insert(p, (r.scaled(f, &inv), comb.scaled(f, &inv)));
            }
        }
    }
    kernel
}

/// Stacks e_1 v, ..., e_n v into one vector keyed by code * n + (i - 1).
fn stacked_e_image<F: CycloField>(md: &Module<F>, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let n = md.spec().rank() as u64;
    let f = md.field();
    let mut out = SparseVec::zero();
    for i in 1..=n {
        for (code, c) in md.apply(Gen::E(i as usize), v) {
            out.add_term(f, code * n + (i - 1), c);
        }
    }
    out
}

/// Combines `vectors` with the coefficients of each kernel combination.
fn combine<F: CycloField>(
    f: &F,
    vectors: &[SparseVec<F::Elem>],
    kernel: Vec<SparseVec<F::Elem>>,
) -> Vec<SparseVec<F::Elem>> {
    kernel
        .into_iter()
        .map(|comb| {
            let mut v = SparseVec::zero();
            for (j, c) in comb.iter() {
                v.add_assign(f, &vectors[*j as usize].scaled(f, c));
            }
            v
        })
        .collect()
}

/// Basis (reduced echelon form) of the primitive vectors, the common
/// kernel of e_1, ..., e_n, within the given scope.
///
/// Each e_i maps a weight block into a single other block, so the kernel
/// is the direct sum of the kernels on the blocks, computed independently.
pub fn primitive_space<F: CycloField>(
    md: &Module<F>,
    scope: Scope<'_, F::Elem>,
) -> Result<SubmoduleBasis<F::Elem>, ModError> {
    let f = md.field();
    let groups: Vec<Vec<SparseVec<F::Elem>>> = match scope {
        Scope::Exhaustive { bound } => weight_blocks(md, bound)?
            .into_values()
            .map(|codes| codes.into_iter().map(|c| SparseVec::unit(c, f.one())).collect())
            .collect(),
        Scope::Within(span) => {
            let mut by_weight: BTreeMap<Option<WeightVector>, Vec<SparseVec<F::Elem>>> = BTreeMap::new();
            for v in span.vectors() {
                by_weight.entry(homogeneous_weight(md, v)).or_default().push(v.clone());
            }
            // Mixed-weight rows cannot be split, so everything shares one block then.
            if by_weight.contains_key(&None) {
                vec![span.vectors().cloned().collect()]
            } else {
                by_weight.into_values().collect()
            }
        }
    };
    let parts: Vec<Vec<SparseVec<F::Elem>>> = groups
        .par_iter()
        .map(|vs| {
            let cols: Vec<SparseVec<F::Elem>> = vs.iter().map(|v| stacked_e_image(md, v)).collect();
            combine(f, vs, kernel_of_columns(f, &cols))
        })
        .collect();
    let mut echelon = Echelon::new();
    for v in parts.iter().flatten() {
        echelon.insert(f, v);
    }
    Ok(SubmoduleBasis::from_echelon(echelon))
}

/// The common weight of the support of v, if there is one.
fn homogeneous_weight<F: CycloField>(md: &Module<F>, v: &SparseVec<F::Elem>) -> Option<WeightVector> {
    let mut codes = v.codes();
    let w = weight_of(md, codes.next()?);
    codes.all(|c| weight_of(md, c) == w).then_some(w)
}

/// The primitive space by plain dense Gauss-Jordan elimination of the full
/// (n l^N) x l^N matrix of e_1, ..., e_n, ignoring all weight structure.
/// Kept as an independent oracle for [`primitive_space`].
#[allow(clippy::needless_range_loop)]
pub fn dense_primitive_space<F: CycloField>(md: &Module<F>, bound: u64) -> Result<Vec<SparseVec<F::Elem>>, ModError> {
    let f = md.field();
    let dim = md.shape().dim();
    if dim > bound {
        return Err(ModError::BoundExceeded { dim, bound });
    }
    let n = md.spec().rank();
    let cols = dim as usize;
    let mut m: Vec<Vec<F::Elem>> = vec![vec![f.zero(); cols]; n * cols];
    for c in 0..cols {
        let u = SparseVec::unit(c as u64, f.one());
        for i in 1..=n {
            for (t, x) in md.apply(Gen::E(i), &u) {
                m[(i - 1) * cols + t as usize][c] = x;
            }
        }
    }
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&k| !f.is_zero(&m[k][c])) else { continue };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut echelon = Echelon::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = SparseVec::unit(free as u64, f.one());
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v.add_term(f, pc as u64, f.neg(&m[row][free]));
        }
        echelon.insert(f, &v);
    }
    Ok(echelon.rows().map(|(_, v)| v.clone()).collect())
}
