use schnizer::{cartan_matrix, AlgType};

use crate::FreeAlgError;

/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i in simple-root coordinates.
fn reflect(a: &[Vec<i64>], i: usize, beta: &mut [i64]) {
    let pairing: i64 = beta.iter().enumerate().map(|(j, &b)| b * a[i][j]).sum();
    beta[i] -= pairing;
}

/// w(alpha_last) for w = s_{w[0]} ... s_{w[k-1]} (0-based indices).
fn image_of_simple(a: &[Vec<i64>], prefix: &[usize], last: usize) -> Vec<i64> {
    let mut beta = vec![0; a.len()];
    beta[last] = 1;
    for &i in prefix.iter().rev() {
        reflect(a, i, &mut beta);
    }
    beta
}

/// A reduced expression (i_1, ..., i_N) of the longest Weyl group element.
///
/// A word is reduced exactly when every root beta_k = s_{i_1} ... s_{i_{k-1}}
/// (alpha_{i_k}) is positive; a reduced word of length N is then a word for
/// the longest element. The roots beta_k are kept for degree checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    typ: AlgType,
    indices: Vec<usize>,
    roots: Vec<Vec<i64>>,
}

impl ReducedWord {
    /// Validates a word of 1-based node indices.
    pub fn new(typ: AlgType, n: usize, indices: Vec<usize>) -> Result<Self, FreeAlgError> {
        if let Some(&index) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(FreeAlgError::BadIndex { index, rank: n });
        }
        let expected = typ.positive_roots(n);
        if indices.len() != expected {
            return Err(FreeAlgError::WrongLength { got: indices.len(), expected });
        }
        let a = cartan_matrix(typ, n);
        let zero_based: Vec<usize> = indices.iter().map(|i| i - 1).collect();
        let mut roots = Vec::with_capacity(indices.len());
        for k in 0..zero_based.len() {
            let beta = image_of_simple(&a, &zero_based[..k], zero_based[k]);
            if beta.iter().any(|&c| c < 0) {
                return Err(FreeAlgError::NotReduced { position: k + 1 });
            }
            roots.push(beta);
        }
        Ok(ReducedWord { typ, indices, roots })
    }

    pub fn alg_type(&self) -> AlgType {
        self.typ
    }

    /// The letters i_1, ..., i_N (1-based).
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// beta_1, ..., beta_N in simple-root coordinates.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }
}

/// A standard reduced word for the longest element: 1, 2 1, 3 2 1, ... for
/// type A, (1 ... n)^n for B and C, and (1 ... n)^{n-1} for D. When the
/// standard word is not reduced (type D with n odd) a word is grown
/// greedily instead, appending the first letter that keeps it reduced.
pub fn default_w0_word(typ: AlgType, n: usize) -> Result<ReducedWord, FreeAlgError> {
    let standard: Vec<usize> = match typ {
        AlgType::A => (1..=n).flat_map(|k| (1..=k).rev()).collect(),
        AlgType::B | AlgType::C => (0..n).flat_map(|_| 1..=n).collect(),
        AlgType::D => (0..n - 1).flat_map(|_| 1..=n).collect(),
    };
    ReducedWord::new(typ, n, standard).or_else(|_| ReducedWord::new(typ, n, greedy_w0(typ, n)))
}

fn greedy_w0(typ: AlgType, n: usize) -> Vec<usize> {
    let a = cartan_matrix(typ, n);
    let mut word: Vec<usize> = Vec::new();
    while let Some(i) = (0..n).find(|&i| image_of_simple(&a, &word, i).iter().all(|&c| c >= 0)) {
        word.push(i);
    }
    word.into_iter().map(|i| i + 1).collect()
}
