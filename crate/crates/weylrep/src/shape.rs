use std::fmt;
use std::str::FromStr;

use cyclotomic::RootOrder;
use serde::{Deserialize, Serialize};

use crate::WeylError;

/// The four classical families handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgType {
    /// sl(n+1)
    A,
    /// so(2n+1)
    B,
    /// sp(2n)
    C,
    /// so(2n)
    D,
}

impl AlgType {
    /// Smallest rank for which the module construction is stated.
    pub fn min_rank(self) -> usize {
        match self {
            AlgType::A => 1,
            AlgType::C => 2,
            AlgType::B => 3,
            AlgType::D => 4,
        }
    }

    /// Number of positive roots at rank n.
    pub fn positive_roots(self, n: usize) -> usize {
        match self {
            AlgType::A => n * (n + 1) / 2,
            AlgType::B | AlgType::C => n * n,
            AlgType::D => n * (n - 1),
        }
    }
}

impl fmt::Display for AlgType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgType::A => "A",
            AlgType::B => "B",
            AlgType::C => "C",
            AlgType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for AlgType {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, WeylError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(AlgType::A),
            "B" => Ok(AlgType::B),
            "C" => Ok(AlgType::C),
            "D" => Ok(AlgType::D),
            _ => Err(WeylError::UnknownType(s.to_string())),
        }
    }
}

/// The index set M: which positions (i, j) carry a tensor factor C^l.
///
/// Positions are numbered row-major into slots, and a multi-index is encoded
/// in mixed radix with slot k carrying weight l^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexShape {
    typ: AlgType,
    n: usize,
    order: RootOrder,
    positions: Vec<(usize, usize)>,
    slot_table: Vec<Option<usize>>,
    weights: Vec<u64>,
}

impl IndexShape {
    pub fn new(typ: AlgType, n: usize, order: RootOrder) -> Result<Self, WeylError> {
        if n < typ.min_rank() {
            return Err(WeylError::RankTooSmall { typ, n, min: typ.min_rank() });
        }
        let inside = |i: usize, j: usize| match typ {
            AlgType::A => i <= j,
            AlgType::B | AlgType::C => true,
            AlgType::D => i < n,
        };
        let positions: Vec<(usize, usize)> =
            (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).filter(|&(i, j)| inside(i, j)).collect();
        debug_assert_eq!(positions.len(), typ.positive_roots(n));
        let mut slot_table = vec![None; (n + 1) * (n + 1)];
        for (k, &(i, j)) in positions.iter().enumerate() {
            slot_table[i * (n + 1) + j] = Some(k);
        }
        let l = order.get() as u64;
        let mut weights = Vec::with_capacity(positions.len());
        let mut w: u64 = 1;
        for _ in &positions {
            weights.push(w);
            w = w
                .checked_mul(l)
                .filter(|&x| x < 1 << 63)
                .ok_or_else(|| WeylError::TooLarge(format!("{typ}{n} at l = {l}")))?;
        }
        Ok(IndexShape { typ, n, order, positions, slot_table, weights })
    }

    pub fn alg_type(&self) -> AlgType {
        self.typ
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    /// l as an integer.
    pub fn l(&self) -> u32 {
        self.order.get()
    }

    /// N, the number of positions (equal to the number of positive roots).
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// l^N, the dimension of V.
    pub fn dim(&self) -> u64 {
        self.weights.last().map_or(1, |w| w * self.l() as u64)
    }

    /// Short name such as `C2`.
    pub fn label(&self) -> String {
        format!("{}{}", self.typ, self.n)
    }

    /// Positions in slot order.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// The slot of position (i, j), or `None` when it lies outside the grid.
    pub fn slot(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        self.slot_table[i * (self.n + 1) + j]
    }

    /// Signed-index variant of [`IndexShape::slot`]; out-of-range is `None`.
    pub fn slot_i(&self, i: i64, j: i64) -> Option<usize> {
        if i < 1 || j < 1 {
            return None;
        }
        self.slot(i as usize, j as usize)
    }

    /// l^k for slot k.
    pub fn radix_weight(&self, slot: usize) -> u64 {
        self.weights[slot]
    }

    /// Entry of slot `slot` in the multi-index with code `code`.
    #[inline]
    pub fn digit(&self, code: u64, slot: usize) -> u32 {
        ((code / self.weights[slot]) % self.l() as u64) as u32
    }

    /// Replaces the entry of one slot.
    #[inline]
    pub fn with_digit(&self, code: u64, slot: usize, value: u32) -> u64 {
        let w = self.weights[slot];
        code - self.digit(code, slot) as u64 * w + value as u64 * w
    }

    pub fn encode(&self, m: &MultiIndex) -> Result<u64, WeylError> {
        if m.0.len() != self.len() {
            return Err(WeylError::NonConforming(format!("{} entries for {} positions", m.0.len(), self.len())));
        }
        let l = self.l();
        m.0.iter().zip(&self.weights).try_fold(0u64, |acc, (&e, &w)| {
            if e >= l {
                Err(WeylError::NonConforming(format!("entry {e} not below l = {l}")))
            } else {
                Ok(acc + e as u64 * w)
            }
        })
    }

    pub fn decode(&self, code: u64) -> MultiIndex {
        MultiIndex((0..self.len()).map(|k| self.digit(code, k)).collect())
    }
}

/// A point m of the index set, entries in slot order, each in [0, l).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn zero(shape: &IndexShape) -> Self {
        MultiIndex(vec![0; shape.len()])
    }

    /// The unit multi-index eps_ij.
    pub fn unit(shape: &IndexShape, i: usize, j: usize) -> Result<Self, WeylError> {
        let slot =
            shape.slot(i, j).ok_or_else(|| WeylError::NonConforming(format!("({i},{j}) outside {}", shape.label())))?;
        let mut m = vec![0; shape.len()];
        m[slot] = 1;
        Ok(MultiIndex(m))
    }

    /// Unchecked construction; [`IndexShape::encode`] validates.
    pub fn from_entries(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entry at position (i, j); positions outside the grid read as 0.
    pub fn at(&self, shape: &IndexShape, i: i64, j: i64) -> u32 {
        shape.slot_i(i, j).map_or(0, |k| self.0[k])
    }
}
