use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::abgroups::FgAbGroup;

/// Smith normal form `U · M · V = S` with unimodular `U`, `V`.
///
/// `diag` holds the `min(m, n)` diagonal entries of `S`: the nonzero ones come
/// first, are positive and form a divisibility chain; the rest are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
    pub diag: Vec<BigInt>,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }
}

fn smallest_nonzero(
    s: &IntMatrix,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in positions {
        let x = s.get(i, j);
        if x.is_zero() {
            continue;
        }
        let a = x.abs();
        // strict comparison keeps the first position in scan order on ties
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            best = Some(((i, j), a));
        }
    }
    best.map(|(p, _)| p)
}

/// Computes the Smith normal form with transformation matrices.
///
/// Pivots are the smallest nonzero entry by absolute value, ties broken by
/// row-major position, so the result is deterministic.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let block = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = smallest_nonzero(&s, block) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut leftover = false;
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = -s.get(i, t).div_floor(s.get(t, t));
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                leftover |= !s.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = -s.get(t, j).div_floor(s.get(t, t));
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                leftover |= !s.get(t, j).is_zero();
            }
            if leftover {
                // a remainder strictly smaller than the pivot survived; promote it
                let line = std::iter::once((t, t))
                    .chain((t + 1..rows).map(|i| (i, t)))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = smallest_nonzero(&s, line).expect("pivot is nonzero");
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            let pivot = s.get(t, t).clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    let diag = (0..rows.min(cols)).map(|i| s.get(i, i).clone()).collect();
    SmithForm {
        left: u,
        diagonal: s,
        right: v,
        diag,
    }
}

/// Sends vectors of `Z^m` to their coordinates in the canonical form of a
/// quotient `Z^m / L`: one coordinate per invariant factor (reduced into
/// `[0, d)`), then one per free generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMap {
    rows: Vec<Vec<BigInt>>,
    moduli: Vec<BigInt>,
}

impl ClassMap {
    pub fn source_dim(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Number of output coordinates.
    pub fn target_dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .zip(&self.moduli)
            .map(|(row, d)| {
                let y: BigInt = row.iter().zip(x).map(|(a, b)| a * b).sum();
                if d.is_zero() {
                    y
                } else {
                    y.mod_floor(d)
                }
            })
            .collect()
    }

    /// Class of the `j`-th standard basis vector.
    pub fn basis_class(&self, j: usize) -> Vec<BigInt> {
        self.rows
            .iter()
            .zip(&self.moduli)
            .map(|(row, d)| {
                if d.is_zero() {
                    row[j].clone()
                } else {
                    row[j].mod_floor(d)
                }
            })
            .collect()
    }
}

/// Cokernel `Z^m / im M` of `M: Z^n -> Z^m`, in canonical form, with the map
/// taking a vector to its class.
pub fn cokernel(m: &IntMatrix) -> (FgAbGroup, ClassMap) {
    let snf = smith_normal_form(m);
    cokernel_from_smith(&snf, m.rows())
}

pub(crate) fn cokernel_from_smith(snf: &SmithForm, rows: usize) -> (FgAbGroup, ClassMap) {
    let r = snf.rank();
    let mut torsion = Vec::new();
    let mut map_rows = Vec::new();
    let mut moduli = Vec::new();
    for (i, d) in snf.diag.iter().enumerate().take(r) {
        if d.is_one() {
            continue;
        }
        torsion.push(d.clone());
        map_rows.push(snf.left.row(i).to_vec());
        moduli.push(d.clone());
    }
    for i in r..rows {
        map_rows.push(snf.left.row(i).to_vec());
        moduli.push(BigInt::zero());
    }
    let group = FgAbGroup::from_canonical_parts(rows - r, torsion);
    (
        group,
        ClassMap {
            rows: map_rows,
            moduli,
        },
    )
}

/// Basis of `{x : M x = 0}` as the columns of the returned `n × (n - rank)`
/// matrix.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let n = m.cols();
    let idx: Vec<usize> = (0..n).collect();
    let keep: Vec<usize> = (r..n).collect();
    snf.right.submatrix(&idx, &keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let m = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&m);
        assert_eq!(&(&snf.left * &m) * &snf.right, snf.diagonal);
        snf.diag.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            diag_of(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 1]
        );
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag_of(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(diag_of(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(diag_of(&[vec![-4, 6, 10]]), vec![2]);
    }

    #[test]
    fn snf_degenerate_shapes() {
        let snf = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert!(snf.diag.is_empty());
        assert_eq!(snf.right, IntMatrix::identity(3));
        assert_eq!(snf.left.rows(), 0);
        let snf = smith_normal_form(&IntMatrix::zeros(2, 0));
        assert_eq!(snf.left, IntMatrix::identity(2));
        let (g, _) = cokernel(&IntMatrix::zeros(0, 0));
        assert!(g.is_trivial());
    }

    #[test]
    fn cokernel_examples() {
        let (g, map) = cokernel(&IntMatrix::zeros(2, 3));
        assert_eq!(g, FgAbGroup::free(2));
        assert_eq!(map.basis_class(0).len(), 2);

        let (g, map) = cokernel(&IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(g, FgAbGroup::cyclic(2));
        assert_eq!(map.basis_class(0), vec![BigInt::one()]);

        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let (g, map) = cokernel(&m);
        assert_eq!(g, FgAbGroup::from_invariants(0, &[2, 4]));
        for j in 0..2 {
            let col = m.column(j);
            assert!(map.apply(&col).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::identity(2)).cols(), 0);
        let k = kernel_basis(&IntMatrix::zeros(2, 2));
        assert_eq!(k.cols(), 2);
        assert_eq!(k.det().unwrap().abs(), BigInt::one());

        let m = IntMatrix::from_rows(&[vec![1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert_eq!(&v[0] + &v[1], BigInt::zero());
        assert_eq!(v[0].abs(), BigInt::one());
    }
}
