use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{compare_reports, ClassifyError, ComparisonVerdict};
use crate::abgroups::{orbit_key, FgAbGroup, OrbitKey};
use crate::invariants::{full_report, InvariantReport};
use crate::polyring::{IntPoly, MAX_IRREDUCIBILITY_DEGREE};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchPair {
    pub f: IntPoly,
    pub g: IntPoly,
    pub verdict: ComparisonVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub max_degree: usize,
    pub coeff_bound: u64,
    /// Polynomials enumerated.
    pub examined: u64,
    /// Polynomials passing validation.
    pub valid: u64,
    /// Refused polynomials by reason code.
    pub refused: BTreeMap<String, u64>,
    pub pairs: Vec<SearchPair>,
    /// Valid polynomials whose unit orbit exceeded the bound.
    pub undecided: Vec<IntPoly>,
}

/// Largest number of polynomials a single search may enumerate.
pub const MAX_GRID: u64 = 2_000_000;

type BucketKey = (FgAbGroup, FgAbGroup, OrbitKey);

enum Outcome {
    Refused(&'static str),
    Undecided(IntPoly),
    Valid(BucketKey, Box<InvariantReport>),
}

fn sort_key(f: &IntPoly) -> (usize, Vec<BigInt>) {
    (f.degree(), f.coeffs().to_vec())
}

/// The monic polynomials of degree `d` with lower coefficients in
/// `[-bound, bound]`, indexed in mixed radix.
fn nth_poly(d: usize, bound: i64, mut index: u64) -> IntPoly {
    let base = (2 * bound + 1) as u64;
    let lower: Vec<BigInt> = (0..d)
        .map(|_| {
            let digit = (index % base) as i64 - bound;
            index /= base;
            BigInt::from(digit)
        })
        .collect();
    IntPoly::monic(&lower)
}

fn evaluate(f: IntPoly, bound: usize) -> Result<Outcome, ClassifyError> {
    let report = match full_report(&f) {
        Ok(r) => r,
        Err(e) if e.is_refusal() => return Ok(Outcome::Refused(e.code())),
        Err(e) => return Err(e.into()),
    };
    let k = &report.ktriple;
    match orbit_key(k.k0(), bound) {
        Ok(key) => Ok(Outcome::Valid(
            (k.k0().group().clone(), k.k1().clone(), key),
            Box::new(report),
        )),
        Err(_) => Ok(Outcome::Undecided(f)),
    }
}

/// Enumerates monic `f` with `1 <= deg f <= max_degree` and all lower
/// coefficients in `[-coeff_bound, coeff_bound]`, groups the valid ones by
/// marked K-triple and returns every pair within a group whose Cartan
/// invariants differ.
///
/// The result does not depend on the thread count: pairs are sorted by
/// `(degree, coefficients)` of both members.
pub fn search_pairs(
    max_degree: usize,
    coeff_bound: u64,
    bound: usize,
) -> Result<SearchResult, ClassifyError> {
    if max_degree > MAX_IRREDUCIBILITY_DEGREE {
        return Err(ClassifyError::InvalidParameter(format!(
            "max degree {max_degree} exceeds {MAX_IRREDUCIBILITY_DEGREE}"
        )));
    }
    let b = i64::try_from(coeff_bound)
        .ok()
        .filter(|&b| b <= 1_000_000)
        .ok_or_else(|| ClassifyError::InvalidParameter(format!("coefficient bound {coeff_bound} too large")))?;
    let base = (2 * b + 1) as u64;
    let total = (1..=max_degree as u32)
        .try_fold(0u64, |acc, d| acc.checked_add(base.checked_pow(d)?))
        .filter(|&t| t <= MAX_GRID)
        .ok_or_else(|| {
            ClassifyError::InvalidParameter(format!("search grid exceeds {MAX_GRID} polynomials"))
        })?;

    let mut examined = 0u64;
    let mut outcomes = Vec::new();
    for d in 1..=max_degree {
        let count = base.pow(d as u32);
        examined += count;
        let batch: Vec<Outcome> = (0..count)
            .into_par_iter()
            .map(|i| evaluate(nth_poly(d, b, i), bound))
            .collect::<Result<_, _>>()?;
        outcomes.extend(batch);
    }

    let mut refused = BTreeMap::new();
    let mut undecided = Vec::new();
    let mut buckets: HashMap<BucketKey, Vec<Box<InvariantReport>>> = HashMap::new();
    let mut valid = 0u64;
    for outcome in outcomes {
        match outcome {
            Outcome::Refused(code) => *refused.entry(code.to_string()).or_insert(0) += 1,
            Outcome::Undecided(f) => {
                valid += 1;
                undecided.push(f);
            }
            Outcome::Valid(key, report) => {
                valid += 1;
                buckets.entry(key).or_default().push(report);
            }
        }
    }

    let mut pairs = Vec::new();
    for members in buckets.values_mut() {
        members.sort_by_key(|r| sort_key(&r.poly));
        for (i, a) in members.iter().enumerate() {
            for c in &members[i + 1..] {
                let verdict = compare_reports(a, c, bound)?;
                if !verdict.cartan_invariants_equal {
                    pairs.push(SearchPair {
                        f: a.poly.clone(),
                        g: c.poly.clone(),
                        verdict,
                    });
                }
            }
        }
    }
    pairs.sort_by_key(|p| (sort_key(&p.f), sort_key(&p.g)));
    undecided.sort_by_key(sort_key);

    debug_assert_eq!(examined, total);
    Ok(SearchResult {
        max_degree,
        coeff_bound,
        examined,
        valid,
        refused,
        pairs,
        undecided,
    })
}
