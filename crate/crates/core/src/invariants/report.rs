use serde::{Deserialize, Serialize};

use super::blocks::all_blocks;
use super::checks::{checks_from_blocks, ClosedFormCheck};
use super::homology::{coeff_from_blocks, g_from_blocks, HomologyTable};
use super::ktheory::{groups_via_homology, ktriple_from_blocks, KTriple};
use super::InvariantError;
use crate::abgroups::FgAbGroup;
use crate::classify::{cuntz_verdict, CuntzVerdict};
use crate::polyring::{admissible_roots, is_irreducible_q, IntPoly, RootCertificate};
use crate::polyring::MAX_IRREDUCIBILITY_DEGREE;

/// Refuses anything that is not the minimal polynomial of a positive real
/// algebraic integer other than 1; otherwise returns the certificates of all
/// such roots, smallest first.
pub fn validate(f: &IntPoly) -> Result<Vec<RootCertificate>, InvariantError> {
    if !f.is_monic() {
        return Err(InvariantError::NotMonic);
    }
    if f.degree() > MAX_IRREDUCIBILITY_DEGREE {
        return Err(InvariantError::UnsupportedDegree {
            degree: f.degree(),
            max: MAX_IRREDUCIBILITY_DEGREE,
        });
    }
    if !is_irreducible_q(f)? {
        return Err(InvariantError::NotIrreducible);
    }
    let roots = admissible_roots(f)?;
    if roots.is_empty() {
        return Err(InvariantError::NoAdmissibleRoot);
    }
    Ok(roots)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub k: usize,
    /// `C(d, k)`.
    pub size: usize,
    pub kernel: FgAbGroup,
    pub cokernel: FgAbGroup,
}

/// Internal cross-checks, each computed along an independent route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyChecks {
    pub rank_equality: bool,
    pub k0_via_homology: bool,
    pub k1_via_homology: bool,
    pub shift_identity: bool,
    pub homology_bounds: bool,
}

impl ConsistencyChecks {
    pub fn all_hold(&self) -> bool {
        self.rank_equality
            && self.k0_via_homology
            && self.k1_via_homology
            && self.shift_identity
            && self.homology_bounds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub poly: IntPoly,
    pub degree: usize,
    pub root: RootCertificate,
    pub roots: Vec<RootCertificate>,
    pub blocks: Vec<BlockSummary>,
    pub ktriple: KTriple,
    pub unit_generates: bool,
    pub homology_g: HomologyTable,
    pub homology_coeff: HomologyTable,
    pub closed_form: Vec<ClosedFormCheck>,
    pub consistency: ConsistencyChecks,
    pub cuntz: CuntzVerdict,
}

pub fn full_report(f: &IntPoly) -> Result<InvariantReport, InvariantError> {
    let roots = validate(f)?;
    let d = f.degree();
    let blocks = all_blocks(f)?;

    let closed_form = checks_from_blocks(f, &blocks);
    if let Some(c) = closed_form.iter().find(|c| !c.passed) {
        return Err(InvariantError::ClosedFormFailed {
            check: c.name.clone(),
            computed: c.computed.clone(),
            expected: c.expected.clone(),
        });
    }

    let ktriple = ktriple_from_blocks(&blocks)?;
    let homology_g = g_from_blocks(&blocks);
    let homology_coeff = coeff_from_blocks(&blocks);
    let (k0_alt, k1_alt) = groups_via_homology(&blocks);
    let consistency = ConsistencyChecks {
        rank_equality: ktriple.k0().group().free_rank() == ktriple.k1().free_rank(),
        k0_via_homology: &k0_alt == ktriple.k0().group(),
        k1_via_homology: &k1_alt == ktriple.k1(),
        shift_identity: (1..=d + 1).all(|k| homology_coeff.get(k) == homology_g.get(k + 1)),
        homology_bounds: homology_coeff.top_degree().is_none_or(|t| t <= d)
            && homology_g.top_degree().is_none_or(|t| t <= d + 1),
    };
    if !consistency.all_hold() {
        return Err(InvariantError::Internal(format!(
            "inconsistent invariants for {f}: {consistency:?}"
        )));
    }

    let cuntz = cuntz_verdict(&ktriple);
    Ok(InvariantReport {
        poly: f.clone(),
        degree: d,
        root: roots[0].clone(),
        roots,
        blocks: blocks
            .into_iter()
            .map(|b| BlockSummary {
                k: b.k,
                size: b.size,
                kernel: b.kernel,
                cokernel: b.cokernel,
            })
            .collect(),
        unit_generates: ktriple.k0().is_generator(),
        ktriple,
        homology_g,
        homology_coeff,
        closed_form,
        consistency,
        cuntz,
    })
}
