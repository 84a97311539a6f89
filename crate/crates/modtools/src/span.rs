use std::collections::{BTreeMap, VecDeque};
use std::io::{BufRead, BufReader, Read, Write};

use cyclotomic::CycloField;
use rayon::prelude::*;
use schnizer::{Gen, Module};
use serde::{Deserialize, Serialize};
use weylrep::{IndexShape, SparseVec};

use crate::{Echelon, ModError};

/// One basis row. The word is the one whose image of the seed first
/// introduced the pivot.
#[derive(Debug, Clone, Copy)]
pub struct BasisRow<'a, E> {
    pub pivot: u64,
    pub vector: &'a SparseVec<E>,
    pub word: &'a [Gen],
}

/// A subspace of V in reduced row-echelon form with the word that produced each row.
///
/// `complete` means the span was verified closed under every generator.
/// `f_only` means closure under the f_i alone already gave that span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleBasis<E> {
    echelon: Echelon<E>,
    words: BTreeMap<u64, Vec<Gen>>,
    complete: bool,
    f_only: bool,
}

/// Knobs for [`submodule_span`].
#[derive(Debug, Clone, Default)]
pub struct SpanOptions {
    /// Order in which the f_i are applied (default f_1, ..., f_n).
    pub gen_order: Option<Vec<Gen>>,
    /// Give up once the span exceeds this dimension.
    pub max_dim: Option<usize>,
}

fn all_generators(n: usize) -> Vec<Gen> {
    (1..=n).flat_map(|i| [Gen::F(i), Gen::E(i), Gen::T(i), Gen::TInv(i)]).collect()
}

fn word_text(w: &[Gen]) -> String {
    w.iter().map(Gen::to_string).collect::<Vec<_>>().join(".")
}

fn parse_word(s: &str) -> Result<Vec<Gen>, ModError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('.').map(|g| g.parse::<Gen>().map_err(|e| ModError::Format(e.to_string()))).collect()
}

impl<E: Clone> SubmoduleBasis<E> {
    /// A basis with the given echelon and no recorded words.
    pub fn from_echelon(echelon: Echelon<E>) -> Self {
        let words = echelon.pivots().map(|p| (p, Vec::new())).collect();
        SubmoduleBasis { echelon, words, complete: false, f_only: false }
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &Echelon<E> {
        &self.echelon
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn closed_under_f_only(&self) -> bool {
        self.f_only
    }

    pub fn pivots(&self) -> impl Iterator<Item = u64> + '_ {
        self.echelon.pivots()
    }

    /// Reduced basis vectors in pivot order.
    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec<E>> + '_ {
        self.echelon.rows().map(|(_, v)| v)
    }

    pub fn rows(&self) -> impl Iterator<Item = BasisRow<'_, E>> + '_ {
        self.echelon.rows().map(|(p, v)| BasisRow { pivot: p, vector: v, word: &self.words[&p] })
    }

    pub fn contains<F: CycloField<Elem = E>>(&self, f: &F, v: &SparseVec<E>) -> bool {
        self.echelon.reduce(f, v).is_zero()
    }

    /// The first (generator, pivot) whose image leaves the span, if any.
    pub fn closure_failure<F: CycloField<Elem = E>>(&self, md: &Module<F>) -> Option<(Gen, u64)>
    where
        E: Send + Sync,
    {
        let f = md.field();
        let gens = all_generators(md.spec().rank());
        let rows: Vec<(u64, &SparseVec<E>)> = self.echelon.rows().collect();
        rows.par_iter()
            .find_map_first(|&(p, v)| gens.iter().find(|&&g| !self.contains(f, &md.apply(g, v))).map(|&g| (g, p)))
    }

    /// Newline-delimited JSON: a header line, then one line per row.
    pub fn write_ndjson<F: CycloField<Elem = E>, W: Write>(
        &self,
        f: &F,
        shape: &IndexShape,
        mut out: W,
    ) -> Result<(), ModError> {
        let header = DumpHeader {
            schema: 1,
            kind: "submodule-basis".into(),
            l: shape.l(),
            shape: shape.label(),
            dim: self.dim(),
            complete: self.complete,
            f_only: self.f_only,
        };
        writeln!(out, "{}", serde_json::to_string(&header).expect("plain data serializes"))?;
        for row in self.rows() {
            let vector: serde_json::Value =
                serde_json::from_str(&row.vector.to_json(f, shape)).expect("vector JSON is well formed");
            let line = DumpRow { pivot: shape.decode(row.pivot).entries().to_vec(), word: word_text(row.word), vector };
            writeln!(out, "{}", serde_json::to_string(&line).expect("plain data serializes"))?;
        }
        Ok(())
    }

    /// Reads a dump written by [`SubmoduleBasis::write_ndjson`]. Rows must
    /// already be in reduced form; nothing is recomputed.
    pub fn read_ndjson<F: CycloField<Elem = E>, R: Read>(
        f: &F,
        shape: &IndexShape,
        input: R,
    ) -> Result<Self, ModError> {
        let mut lines = BufReader::new(input).lines();
        let first = lines.next().ok_or_else(|| ModError::Format("empty dump".into()))??;
        let header: DumpHeader = serde_json::from_str(&first).map_err(|e| ModError::Format(e.to_string()))?;
        if header.l != shape.l() || header.shape != shape.label() {
            return Err(ModError::Format(format!(
                "dump is for {} at l = {}, expected {} at l = {}",
                header.shape,
                header.l,
                shape.label(),
                shape.l()
            )));
        }
        let mut rows = Vec::new();
        let mut words = BTreeMap::new();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let row: DumpRow = serde_json::from_str(&line).map_err(|e| ModError::Format(e.to_string()))?;
            let v = SparseVec::from_json(f, shape, &row.vector.to_string())?;
            let pivot = shape.encode(&weylrep::MultiIndex::from_entries(row.pivot))?;
            if v.codes().next() != Some(pivot) {
                return Err(ModError::Format("row pivot does not match its vector".into()));
            }
            words.insert(pivot, parse_word(&row.word)?);
            rows.push(v);
        }
        let echelon = Echelon::from_reduced_rows(f, rows)
            .ok_or_else(|| ModError::Format("rows are not in reduced echelon form".into()))?;
        Ok(SubmoduleBasis { echelon, words, complete: header.complete, f_only: header.f_only })
    }
}

#[derive(Serialize, Deserialize)]
struct DumpHeader {
    schema: u32,
    kind: String,
    l: u32,
    shape: String,
    dim: usize,
    complete: bool,
    f_only: bool,
}

#[derive(Serialize, Deserialize)]
struct DumpRow {
    pivot: Vec<u32>,
    word: String,
    vector: serde_json::Value,
}

struct Spanner<'m, F: CycloField> {
    md: &'m Module<F>,
    echelon: Echelon<F::Elem>,
    words: BTreeMap<u64, Vec<Gen>>,
    raw: Vec<(SparseVec<F::Elem>, Vec<Gen>)>,
    limit: Option<usize>,
}

impl<F: CycloField> Spanner<'_, F> {
    fn full(&self) -> bool {
        self.echelon.rank() as u64 == self.md.shape().dim()
    }

    fn offer(&mut self, v: SparseVec<F::Elem>, word: Vec<Gen>) -> Result<bool, ModError> {
        match self.echelon.insert(self.md.field(), &v) {
            None => Ok(false),
            Some(p) => {
                if self.limit.is_some_and(|m| self.echelon.rank() > m) {
                    return Err(ModError::SpanTooLarge { limit: self.limit.unwrap_or_default() });
                }
                self.words.insert(p, word.clone());
                self.raw.push((v, word));
                Ok(true)
            }
        }
    }

    /// Breadth-first closure of the queued vectors under `gens`.
    fn close(&mut self, mut queue: VecDeque<(SparseVec<F::Elem>, Vec<Gen>)>, gens: &[Gen]) -> Result<(), ModError> {
        while let Some((v, w)) = queue.pop_front() {
            if self.full() {
                return Ok(());
            }
            for &g in gens {
                let x = self.md.apply(g, &v);
                if x.is_zero() {
                    continue;
                }
                let mut word = vec![g];
                word.extend_from_slice(&w);
                if self.offer(x.clone(), word.clone())? {
                    queue.push_back((x, word));
                }
            }
        }
        Ok(())
    }
}

/// The submodule U_eps v generated by `seed`.
///
/// The f_i are applied breadth-first with incremental row reduction. The
/// result is then checked for closure under the e_i and t_i^{+-1}; if that
/// fails the search continues with all generators, so the returned span is
/// always a submodule.
pub fn submodule_span<F: CycloField>(
    md: &Module<F>,
    seed: &SparseVec<F::Elem>,
    opts: &SpanOptions,
) -> Result<SubmoduleBasis<F::Elem>, ModError> {
    if seed.is_zero() {
        return Err(ModError::ZeroSeed);
    }
    let n = md.spec().rank();
    let fgens = opts.gen_order.clone().unwrap_or_else(|| (1..=n).map(Gen::F).collect());
    let mut sp = Spanner { md, echelon: Echelon::new(), words: BTreeMap::new(), raw: Vec::new(), limit: opts.max_dim };
    sp.offer(seed.clone(), Vec::new())?;
    sp.close(VecDeque::from([(seed.clone(), Vec::new())]), &fgens)?;
    let mut basis =
        SubmoduleBasis { echelon: sp.echelon.clone(), words: sp.words.clone(), complete: true, f_only: true };
    if basis.closure_failure(md).is_some() {
        let queue: VecDeque<_> = sp.raw.clone().into();
        sp.close(queue, &all_generators(n))?;
        basis = SubmoduleBasis { echelon: sp.echelon, words: sp.words, complete: true, f_only: false };
        debug_assert!(basis.closure_failure(md).is_none());
    }
    Ok(basis)
}

/// Applies raising operators until a primitive vector is reached: at each
/// step the first e_i with e_i v != 0 is applied. Returns the primitive
/// vector and the word (leftmost applied last).
pub fn ascend_to_primitive<F: CycloField>(
    md: &Module<F>,
    v: &SparseVec<F::Elem>,
    bound: usize,
) -> Result<(SparseVec<F::Elem>, Vec<Gen>), ModError> {
    let n = md.spec().rank();
    let mut cur = v.clone();
    let mut word = Vec::new();
    loop {
        let next = (1..=n).map(|i| (i, md.apply(Gen::E(i), &cur))).find(|(_, x)| !x.is_zero());
        match next {
            None => return Ok((cur, word)),
            Some((i, x)) => {
                if word.len() == bound {
                    return Err(ModError::AscentTooLong { bound });
                }
                word.insert(0, Gen::E(i));
                cur = x;
            }
        }
    }
}
