#![allow(dead_code)]

pub mod oracles;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qlambda::polyring::IntPoly;

pub fn poly(lower: &[i64]) -> IntPoly {
    let lower: Vec<BigInt> = lower.iter().map(|&x| BigInt::from(x)).collect();
    IntPoly::monic(&lower)
}

pub fn small(x: &BigInt) -> i128 {
    x.to_i128().expect("fits in i128")
}

/// All monic polynomials of degree `d` with lower coefficients in `[-b, b]`.
pub fn monic_grid(d: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-b..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}
