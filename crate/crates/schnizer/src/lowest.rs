use weylrep::{AlgType, IndexShape, MultiIndex};

use crate::SchnizerError;

/// The index m^lambda of the lowest-weight vector u(m^lambda), entries
/// reduced mod l. Defined for types B, C and D.
pub fn lowest_index(shape: &IndexShape, lambda: &[u32]) -> Result<MultiIndex, SchnizerError> {
    let n = shape.rank();
    if lambda.len() != n {
        return Err(SchnizerError::BadWeight(lambda.to_vec()));
    }
    let lam = |k: usize| lambda[k - 1] as i64;
    // Partial sums lambda_a + ... + lambda_b.
    let sum = |a: usize, b: usize| (a..=b).map(lam).sum::<i64>();
    let mut cells: Vec<(usize, usize, i64)> = Vec::new();
    match shape.alg_type() {
        AlgType::A => return Err(SchnizerError::Unsupported("no lowest index for type A".into())),
        AlgType::C => {
            for i in 1..=n {
                cells.push((i, i, lam(i)));
                for j in i + 1..=n {
                    cells.push((i, j, sum(i, j)));
                    cells.push((j, i, sum(i, j - 1) + 2 * sum(j, n)));
                }
            }
        }
        AlgType::B => {
            for i in 1..=n {
                cells.push((i, i, lam(i)));
            }
            for i in 1..n {
                for j in i + 1..n {
                    cells.push((i, j, sum(i, j)));
                    cells.push((j, i, sum(i, j - 1) + 2 * sum(j, n - 1) + lam(n)));
                }
                cells.push((i, n, 2 * sum(i, n - 1) + lam(n)));
                cells.push((n, i, sum(i, n)));
            }
        }
        AlgType::D => {
            for i in 1..n {
                cells.push((i, i, lam(i)));
            }
            cells.push((n - 1, n, lam(n)));
            for i in 1..n - 1 {
                for j in i + 1..n - 1 {
                    cells.push((i, j, sum(i, j)));
                    cells.push((j, i, sum(i, j - 1) + 2 * sum(j, n - 2) + lam(n - 1) + lam(n)));
                }
                // Columns n-1 and n take lambda_{n-1} and lambda_n alternately.
                let (near, far) =
                    if (n - 1 - i).is_multiple_of(2) { (lam(n - 1), lam(n)) } else { (lam(n), lam(n - 1)) };
                cells.push((i, n - 1, sum(i, n - 2) + near));
                cells.push((i, n, sum(i, n - 2) + far));
                cells.push((n - 1, i, sum(i, n)));
            }
        }
    }
    let l = shape.order();
    let mut m = vec![0u32; shape.len()];
    for (i, j, v) in cells {
        let slot = shape.slot(i, j).expect("every cell lies in the grid");
        m[slot] = l.reduce(v);
    }
    Ok(MultiIndex::from_entries(m))
}
