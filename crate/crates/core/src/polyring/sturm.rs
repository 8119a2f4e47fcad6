//! Real-root counting and isolation with Sturm chains over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{IntPoly, PolyError};

/// Dense polynomial with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn from_int(f: &IntPoly) -> Self {
        QPoly(f.coeffs().iter().cloned().map(BigRational::from).collect())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn derivative(&self) -> Self {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn rem(&self, divisor: &QPoly) -> QPoly {
        let mut r = self.0.clone();
        let dl = divisor.0.last().expect("nonzero divisor");
        let dd = divisor.degree();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let q = r.last().expect("nonempty") / dl;
            for (i, c) in divisor.0.iter().enumerate() {
                r[shift + i] -= &q * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        QPoly(r).trim()
    }

    fn neg(self) -> Self {
        QPoly(self.0.into_iter().map(|c| -c).collect())
    }
}

fn sturm_chain(f: &IntPoly) -> Vec<QPoly> {
    let mut chain = vec![QPoly::from_int(f)];
    let d = chain[0].derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

fn sign_variations(chain: &[QPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `f` in the open interval `(lo, hi)`.
pub fn count_real_roots(f: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<usize, PolyError> {
    if lo >= hi {
        return Err(PolyError::EmptyInterval);
    }
    for x in [lo, hi] {
        if f.evaluate(x).is_zero() {
            return Err(PolyError::EndpointIsRoot {
                point: x.to_string(),
            });
        }
    }
    let chain = sturm_chain(f);
    Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
}

/// Which side of 1 the isolated root lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootSide {
    BelowOne,
    AboveOne,
}

/// An open rational interval `(lo, hi)` containing exactly one real root of
/// the polynomial, with `0, 1 ∉ [lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootCertificate {
    #[serde(with = "rational_text")]
    pub lo: BigRational,
    #[serde(with = "rational_text")]
    pub hi: BigRational,
    pub side: RootSide,
    /// `gcd(f, f')` is constant, so every root is simple.
    pub multiplicity_free: bool,
}

impl RootCertificate {
    /// Recounts the root with a Sturm chain and checks the interval shape.
    pub fn verify(&self, f: &IntPoly) -> bool {
        let zero = BigRational::zero();
        let one = BigRational::one();
        let excluded = |x: &BigRational| self.lo <= *x && *x <= self.hi;
        !excluded(&zero)
            && !excluded(&one)
            && count_real_roots(f, &self.lo, &self.hi) == Ok(1)
            && (self.side == RootSide::BelowOne) == (self.hi < one)
    }
}

mod rational_text {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| serde::de::Error::custom(format!("bad rational '{text}'")))
    }
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

fn pow2_inv(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << k)
}

/// Moves an endpoint that is itself a root by `±1/2^k` towards the inside of
/// the interval, with `k` large enough that the slice skipped over holds no
/// other root.
fn nudge(chain: &[QPoly], f: &IntPoly, x: &BigRational, inward: i32) -> BigRational {
    let mut k = 1;
    loop {
        let eps = pow2_inv(k);
        let (a, b) = (x - &eps, x + &eps);
        let clean = !f.evaluate(&a).is_zero() && !f.evaluate(&b).is_zero();
        if clean && sign_variations(chain, &a) - sign_variations(chain, &b) == 1 {
            return if inward > 0 { b } else { a };
        }
        k += 1;
    }
}

/// A point strictly inside `(lo, hi)` that is neither a root of `f` nor
/// `avoid`, as close to the midpoint as the first few candidates allow.
fn interior_point(
    f: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    avoid: Option<&BigRational>,
) -> BigRational {
    let width = hi - lo;
    let mut mid = half(lo, hi);
    let mut k = 2;
    while f.evaluate(&mid).is_zero() || avoid == Some(&mid) {
        // candidates lo + width * k/(2k+1) are pairwise distinct
        mid = lo + &width * BigRational::new(BigInt::from(k), BigInt::from(2 * k + 1));
        k += 1;
    }
    mid
}

/// Splits `(lo, hi)` into isolating intervals, one per root.
fn isolate(
    chain: &[QPoly],
    f: &IntPoly,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let count = sign_variations(chain, &lo) - sign_variations(chain, &hi);
    match count {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = interior_point(f, &lo, &hi, None);
            isolate(chain, f, lo, mid.clone(), out);
            isolate(chain, f, mid, hi, out);
        }
    }
}

/// Shrinks an isolating interval until `avoid` (which is not the root) lies
/// outside its closure.
fn shrink_away(
    chain: &[QPoly],
    f: &IntPoly,
    mut lo: BigRational,
    mut hi: BigRational,
    avoid: &BigRational,
) -> (BigRational, BigRational) {
    while lo <= *avoid && *avoid <= hi {
        let mid = interior_point(f, &lo, &hi, Some(avoid));
        if sign_variations(chain, &lo) - sign_variations(chain, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// The positive real roots of `f` other than `1`, as isolating certificates in
/// increasing order of position.
pub fn admissible_roots(f: &IntPoly) -> Result<Vec<RootCertificate>, PolyError> {
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(f);
    let multiplicity_free = chain.last().is_some_and(|g| g.degree() == 0);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let bound = BigRational::from_integer(f.cauchy_bound());

    let tidy = |x: &BigRational, inward: i32| {
        if f.evaluate(x).is_zero() {
            nudge(&chain, f, x, inward)
        } else {
            x.clone()
        }
    };
    let regions = [
        (tidy(&zero, 1), tidy(&one, -1), RootSide::BelowOne),
        (tidy(&one, 1), bound, RootSide::AboveOne),
    ];

    let mut certificates = Vec::new();
    for (lo, hi, side) in regions {
        if lo >= hi {
            continue;
        }
        let mut found = Vec::new();
        isolate(&chain, f, lo, hi, &mut found);
        for (lo, hi) in found {
            let (lo, hi) = shrink_away(&chain, f, lo, hi, &zero);
            let (lo, hi) = shrink_away(&chain, f, lo, hi, &one);
            certificates.push(RootCertificate {
                lo,
                hi,
                side,
                multiplicity_free,
            });
        }
    }
    Ok(certificates)
}

/// The smallest admissible root, if there is one.
pub fn admissible_root(f: &IntPoly) -> Result<Option<RootCertificate>, PolyError> {
    Ok(admissible_roots(f)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn poly(s: &str) -> IntPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&poly("T^2-3T+1"), &q(0, 1), &q(1, 1)), Ok(1));
        assert_eq!(count_real_roots(&poly("T^2+1"), &q(-10, 1), &q(10, 1)), Ok(0));
        assert_eq!(count_real_roots(&poly("T^2-2"), &q(0, 1), &q(2, 1)), Ok(1));
        assert_eq!(count_real_roots(&poly("T^3-T"), &q(-2, 1), &q(2, 1)), Ok(3));
        // repeated root counted once
        assert_eq!(count_real_roots(&poly("T^2-2T+1"), &q(0, 1), &q(2, 1)), Ok(1));
    }

    #[test]
    fn count_errors() {
        assert!(matches!(
            count_real_roots(&poly("T^2-1"), &q(1, 1), &q(2, 1)),
            Err(PolyError::EndpointIsRoot { .. })
        ));
        assert_eq!(
            count_real_roots(&poly("T^2-2"), &q(2, 1), &q(1, 1)),
            Err(PolyError::EmptyInterval)
        );
    }

    #[test]
    fn admissible_examples() {
        let f = poly("T^2-3T+1");
        let c = admissible_root(&f).unwrap().unwrap();
        assert_eq!(c.side, RootSide::BelowOne);
        assert!(c.verify(&f));

        assert_eq!(admissible_root(&poly("T^2+1")).unwrap(), None);
        assert_eq!(admissible_root(&poly("T^2+T+1")).unwrap(), None);

        let f = poly("T^2-4T+2");
        let all = admissible_roots(&f).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].side, RootSide::BelowOne);
        assert_eq!(all[1].side, RootSide::AboveOne);
        assert!(all.iter().all(|c| c.verify(&f) && c.multiplicity_free));
        // 2 + sqrt 2 lies in (3, 4)
        assert!(all[1].lo >= q(3, 1) - q(1, 1) && all[1].hi <= q(5, 1));
    }

    #[test]
    fn endpoint_roots_are_stepped_over() {
        // roots 0, 1, 2 and 1/2
        let f = poly("2T^4-7T^3+7T^2-2T");
        assert!(matches!(admissible_roots(&f), Err(PolyError::NotMonic)));
        let f = poly("T^3-3T^2+2T");
        let roots = admissible_roots(&f).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].verify(&f));
        assert!(roots[0].lo > q(1, 1));
        assert_eq!(admissible_roots(&poly("T-1")).unwrap(), vec![]);
        assert_eq!(admissible_roots(&poly("T")).unwrap(), vec![]);
        let r = admissible_roots(&poly("T-2")).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].lo < q(2, 1) && q(2, 1) < r[0].hi);
    }
}
