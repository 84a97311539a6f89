use cyclotomic::RootOrder;
use serde::{Deserialize, Serialize};
use weylrep::{AlgType, IndexShape, ParamTables};

use crate::SchnizerError;

/// Cartan matrix (a_ij), 0-based. Type C has a_{n-1,n} = -2, type B has
/// a_{n,n-1} = -2, and type D forks at node n-2.
pub fn cartan_matrix(typ: AlgType, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match typ {
        AlgType::A => {}
        AlgType::C => a[n - 2][n - 1] = -2,
        AlgType::B => a[n - 1][n - 2] = -2,
        AlgType::D => {
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
    }
    a
}

/// Symmetrizing vector d, with eps_i = eps^{d_i}.
pub fn d_vector(typ: AlgType, n: usize) -> Vec<u32> {
    match typ {
        AlgType::A | AlgType::D => vec![1; n],
        AlgType::C => (1..=n).map(|i| if i == n { 2 } else { 1 }).collect(),
        AlgType::B => (1..=n).map(|i| if i == n { 1 } else { 2 }).collect(),
    }
}

/// The default exponent tables: every a is 0 and b follows the per-type
/// formulas under which the closed-form lemmas hold.
pub fn default_params(shape: &IndexShape) -> ParamTables {
    let n = shape.rank() as i64;
    let typ = shape.alg_type();
    let b = shape
        .positions()
        .iter()
        .map(|&(i, j)| {
            let (i, j) = (i as i64, j as i64);
            match typ {
                AlgType::A => i,
                AlgType::C if i <= j => 1 - i + j,
                AlgType::C => 2 * n + 2 - i - j,
                AlgType::B if j == n => 2 * n + 1 - 2 * i,
                AlgType::B if i <= j => 1 - i + j,
                AlgType::B => 2 * n + 1 - i - j,
                AlgType::D if j == n => n - i,
                AlgType::D if i <= j => 1 - i + j,
                AlgType::D => 2 * n - i - j,
            }
        })
        .collect();
    ParamTables { a: vec![0; shape.len()], b }
}

/// Which reading of the type B weight shift to use for j < n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum BShift {
    /// lambda'_j = -2(lambda_j - 2), as printed.
    Printed,
    /// lambda'_j = -2(lambda_j + 2), which gives u(0) the weight lambda.
    #[default]
    Corrected,
}

/// The shifted weight lambda' from which V(lambda) is built.
pub fn lambda_shift(typ: AlgType, lambda: &[u32], bshift: BShift) -> Vec<i64> {
    let n = lambda.len();
    lambda
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let x = x as i64;
            let last = k + 1 == n;
            match typ {
                AlgType::A => x + 2,
                AlgType::C if last => -2 * (x + 2),
                AlgType::B if last => -x - 2,
                AlgType::B => match bshift {
                    BShift::Printed => -2 * (x - 2),
                    BShift::Corrected => -2 * (x + 2),
                },
                AlgType::C | AlgType::D => -x - 2,
            }
        })
        .collect()
}

/// Everything that determines a module: type, rank, l, lambda, lambda' and
/// the parameter tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    shape: IndexShape,
    lambda: Vec<u32>,
    lambda_prime: Vec<i64>,
    bshift: BShift,
    params: ParamTables,
}

impl ModuleSpec {
    /// A module with default parameters and the default weight shift.
    pub fn new(typ: AlgType, n: usize, order: RootOrder, lambda: Vec<u32>) -> Result<Self, SchnizerError> {
        let shape = IndexShape::new(typ, n, order)?;
        if lambda.len() != n || lambda.iter().any(|&x| x >= order.get()) {
            return Err(SchnizerError::BadWeight(lambda));
        }
        let bshift = BShift::default();
        let lambda_prime = lambda_shift(typ, &lambda, bshift);
        let params = default_params(&shape);
        Ok(ModuleSpec { shape, lambda, lambda_prime, bshift, params })
    }

    /// Replaces the parameter tables.
    pub fn with_params(mut self, params: ParamTables) -> Result<Self, SchnizerError> {
        for got in [params.a.len(), params.b.len()] {
            if got != self.shape.len() {
                return Err(SchnizerError::ParamShape { got, expected: self.shape.len() });
            }
        }
        self.params = params;
        Ok(self)
    }

    /// Switches the type B weight shift (no effect on other types).
    pub fn with_bshift(mut self, bshift: BShift) -> Self {
        self.bshift = bshift;
        self.lambda_prime = lambda_shift(self.alg_type(), &self.lambda, bshift);
        self
    }

    pub fn alg_type(&self) -> AlgType {
        self.shape.alg_type()
    }

    pub fn rank(&self) -> usize {
        self.shape.rank()
    }

    pub fn order(&self) -> RootOrder {
        self.shape.order()
    }

    pub fn shape(&self) -> &IndexShape {
        &self.shape
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    pub fn lambda_prime(&self) -> &[i64] {
        &self.lambda_prime
    }

    pub fn bshift(&self) -> BShift {
        self.bshift
    }

    pub fn params(&self) -> &ParamTables {
        &self.params
    }

    pub fn d_vector(&self) -> Vec<u32> {
        d_vector(self.alg_type(), self.rank())
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        cartan_matrix(self.alg_type(), self.rank())
    }

    /// True when a and b are the default tables (the closed forms need this).
    pub fn uses_default_params(&self) -> bool {
        self.params == default_params(&self.shape)
    }
}
