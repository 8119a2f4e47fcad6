//! Exact irreducibility over Q for monic integer polynomials of small degree.
//!
//! By Gauss' lemma a monic integer polynomial is reducible over Q iff it has a
//! monic integer factor of degree at most d/2. Linear factors are found with
//! the rational root test; higher ones by a search over all monic candidates
//! whose coefficients respect the Mignotte bound `|b_j| <= C(m, j) * ||f||_2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntPoly, PolyError};
use crate::exactalg::binomial;

/// Highest degree the exact decision procedure accepts.
pub const MAX_IRREDUCIBILITY_DEGREE: usize = 8;

/// Limit on trial divisions used while listing divisors of the constant term.
const DIVISOR_SEARCH_LIMIT: u64 = 50_000_000;

/// Positive divisors of `|n|`, `n != 0`, in increasing order.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>, PolyError> {
    let n = n.abs();
    let root = n.sqrt();
    if root > BigInt::from(DIVISOR_SEARCH_LIMIT) {
        return Err(PolyError::CoefficientTooLarge);
    }
    let limit = root.to_u64().expect("bounded above");
    let mut small = Vec::new();
    let mut large = Vec::new();
    for k in 1..=limit {
        let k = BigInt::from(k);
        if n.is_multiple_of(&k) {
            let other = &n / &k;
            if other != k {
                large.push(other);
            }
            small.push(k);
        }
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Exact division check: does the monic `g` divide `f`?
fn divides(g: &[BigInt], f: &[BigInt]) -> bool {
    let m = g.len() - 1;
    let mut r = f.to_vec();
    while r.len() > m {
        let lead = r.pop().expect("nonempty");
        let shift = r.len() - m;
        for (i, c) in g[..m].iter().enumerate() {
            r[shift + i] -= &lead * c;
        }
    }
    r.iter().all(Zero::is_zero)
}

fn has_integer_root(f: &IntPoly) -> Result<bool, PolyError> {
    let a0 = f.constant_term();
    if a0.is_zero() {
        return Ok(true);
    }
    for r in divisors(a0)? {
        if f.eval_int(&r).is_zero() || f.eval_int(&-&r).is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Searches for a monic factor of exact degree `m`, `2 <= m <= d/2`.
fn has_factor_of_degree(f: &IntPoly, m: usize) -> Result<bool, PolyError> {
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let mut norm = norm_sq.sqrt();
    if &norm * &norm < norm_sq {
        norm += 1;
    }
    let bounds: Vec<BigInt> = (0..m).map(|j| BigInt::from(binomial(m, j)) * &norm).collect();

    let a0 = f.constant_term();
    let f1 = f.eval_int(&BigInt::one());
    let fm1 = f.eval_int(&-BigInt::one());
    let mut b0_choices = Vec::new();
    for d in divisors(a0)? {
        if d <= bounds[0] {
            b0_choices.push(-&d);
            b0_choices.push(d);
        }
    }

    let mut g = vec![BigInt::zero(); m + 1];
    g[m] = BigInt::one();
    for b0 in b0_choices {
        g[0] = b0;
        if search_rest(f, &mut g, 1, &bounds, &f1, &fm1) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Fills `g[pos..m]` over the bounded box; prunes with `g(±1) | f(±1)`.
fn search_rest(
    f: &IntPoly,
    g: &mut [BigInt],
    pos: usize,
    bounds: &[BigInt],
    f1: &BigInt,
    fm1: &BigInt,
) -> bool {
    let m = g.len() - 1;
    if pos == m {
        let g1: BigInt = g.iter().sum();
        let gm1: BigInt = g
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .sum();
        let fits = |gv: &BigInt, fv: &BigInt| {
            if gv.is_zero() {
                fv.is_zero()
            } else {
                fv.is_multiple_of(gv)
            }
        };
        return fits(&g1, f1) && fits(&gm1, fm1) && divides(g, f.coeffs());
    }
    let b = &bounds[pos];
    let mut x = -b.clone();
    while &x <= b {
        g[pos] = x.clone();
        if search_rest(f, g, pos + 1, bounds, f1, fm1) {
            return true;
        }
        x += 1;
    }
    false
}

/// Whether the monic polynomial `f` is irreducible over Q.
pub fn is_irreducible_q(f: &IntPoly) -> Result<bool, PolyError> {
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let d = f.degree();
    if d == 0 {
        return Err(PolyError::ConstantPolynomial);
    }
    if d > MAX_IRREDUCIBILITY_DEGREE {
        return Err(PolyError::UnsupportedDegree {
            degree: d,
            max: MAX_IRREDUCIBILITY_DEGREE,
        });
    }
    if d == 1 {
        return Ok(true);
    }
    if has_integer_root(f)? {
        return Ok(false);
    }
    for m in 2..=d / 2 {
        if has_factor_of_degree(f, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}
