use num_bigint::BigInt;

use super::InvariantError;
use crate::abgroups::{FgAbGroup, MarkedAbGroup};
use crate::exactalg::{cokernel_from_smith, compound_matrix, smith_normal_form, IntMatrix};
use crate::polyring::{companion_matrix, IntPoly};

/// Kernel and cokernel of `id - Λ^k φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerCoker {
    pub k: usize,
    pub size: usize,
    /// Free of rank `size - rank`.
    pub kernel: FgAbGroup,
    pub cokernel: FgAbGroup,
    /// For `k = 1`: the class of `e_1 = λ^0` in the cokernel.
    pub unit_class: Option<Vec<BigInt>>,
}

/// `I - Λ^k φ` for the companion matrix `φ` of `f`.
pub fn exterior_block(f: &IntPoly, k: usize) -> Result<IntMatrix, InvariantError> {
    let d = f.degree();
    if k > d {
        return Err(InvariantError::KOutOfRange { k, degree: d });
    }
    let phi = companion_matrix(f)?;
    let lambda = compound_matrix(&phi, k).map_err(|e| InvariantError::Internal(e.to_string()))?;
    Ok(&IntMatrix::identity(lambda.rows()) - &lambda)
}

pub fn ker_coker(f: &IntPoly, k: usize) -> Result<KerCoker, InvariantError> {
    let m = exterior_block(f, k)?;
    let snf = smith_normal_form(&m);
    let (cokernel, map) = cokernel_from_smith(&snf, m.rows());
    let unit_class = if k == 1 {
        let unit = MarkedAbGroup::new(cokernel.clone(), map.basis_class(0))
            .map_err(|e| InvariantError::Internal(e.to_string()))?;
        Some(unit.normalize_cyclic().mark().to_vec())
    } else {
        None
    };
    Ok(KerCoker {
        k,
        size: m.rows(),
        kernel: FgAbGroup::free(m.cols() - snf.rank()),
        cokernel,
        unit_class,
    })
}

/// All blocks `k = 0..=d`.
pub(crate) fn all_blocks(f: &IntPoly) -> Result<Vec<KerCoker>, InvariantError> {
    (0..=f.degree()).map(|k| ker_coker(f, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn p(s: &str) -> IntPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn block_shapes() {
        let f = p("T^2-3T+1");
        assert_eq!(exterior_block(&f, 0).unwrap(), IntMatrix::from_rows(&[vec![0]]));
        assert_eq!(exterior_block(&f, 2).unwrap(), IntMatrix::from_rows(&[vec![0]]));
        assert_eq!(exterior_block(&p("T-2"), 1).unwrap(), IntMatrix::from_rows(&[vec![-1]]));
        assert_eq!(
            exterior_block(&f, 3),
            Err(InvariantError::KOutOfRange { k: 3, degree: 2 })
        );
    }

    #[test]
    fn kernels_and_cokernels() {
        let f = p("T^2-3T+1");
        let b1 = ker_coker(&f, 1).unwrap();
        assert!(b1.kernel.is_trivial() && b1.cokernel.is_trivial());
        assert_eq!(b1.unit_class, Some(vec![]));
        let b2 = ker_coker(&f, 2).unwrap();
        assert_eq!(b2.kernel, FgAbGroup::free(1));
        assert_eq!(b2.cokernel, FgAbGroup::free(1));
        let b0 = ker_coker(&f, 0).unwrap();
        assert_eq!((b0.kernel, b0.cokernel), (FgAbGroup::free(1), FgAbGroup::free(1)));

        for n in [2i64, 3, 5, 7] {
            let b = ker_coker(&IntPoly::from_coeffs(&[-n, 0, 1]).unwrap(), 1).unwrap();
            assert_eq!(b.cokernel, FgAbGroup::cyclic(n - 1));
            if n > 2 {
                assert_eq!(b.unit_class, Some(vec![BigInt::from(1)]));
            }
        }
    }
}
