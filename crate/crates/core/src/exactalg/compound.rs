use num_bigint::BigInt;

use super::{IntMatrix, MatrixError};

/// All `k`-element subsets of `0..n`, each sorted, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // rightmost position that can still advance
        let Some(pos) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[pos] += 1;
        for i in pos + 1..k {
            current[i] = current[i - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The `k`-th compound matrix: entry `(S, T)` is the minor on rows `S` and
/// columns `T`, with both index sets in lexicographic order.
///
/// This is the matrix of the induced map on the `k`-th exterior power in the
/// basis `e_S = e_{s1} ∧ … ∧ e_{sk}`.
pub fn compound_matrix(m: &IntMatrix, k: usize) -> Result<IntMatrix, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if k > n {
        return Err(MatrixError::CompoundOrder { k, n });
    }
    let subsets = k_subsets(n, k);
    let size = subsets.len();
    let mut data: Vec<BigInt> = Vec::with_capacity(size * size);
    for rows in &subsets {
        for cols in &subsets {
            data.push(m.submatrix(rows, cols).det()?);
        }
    }
    IntMatrix::new(size, size, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            k_subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(k_subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(k_subsets(2, 3).is_empty());
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(k_subsets(7, 3).len(), binomial(7, 3));
    }

    #[test]
    fn edge_orders() {
        let m = IntMatrix::from_rows(&[vec![3, 1], vec![4, 1]]);
        assert_eq!(compound_matrix(&m, 0).unwrap(), IntMatrix::identity(1));
        assert_eq!(compound_matrix(&m, 1).unwrap(), m);
        let top = compound_matrix(&m, 2).unwrap();
        assert_eq!(top, IntMatrix::from_rows(&[vec![-1]]));
        assert_eq!(
            compound_matrix(&m, 3),
            Err(MatrixError::CompoundOrder { k: 3, n: 2 })
        );
        let empty = IntMatrix::zeros(0, 0);
        assert_eq!(compound_matrix(&empty, 0).unwrap().get(0, 0), &BigInt::one());
    }

    #[test]
    fn rejects_rectangular() {
        assert!(compound_matrix(&IntMatrix::zeros(2, 3), 1).is_err());
    }
}
