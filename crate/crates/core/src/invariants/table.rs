//! Closed-form rows for degree one to three, split by the value of the
//! constant term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::HomologyTable;
use crate::abgroups::{direct_sum, direct_sum_marked, FgAbGroup, MarkedAbGroup};
use crate::polyring::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableRegime {
    /// `d = 1`.
    D1,
    /// `d = 2`, `a_0 = 1`.
    D2a,
    /// `d = 2`, `a_0 != 1`.
    D2b,
    /// `d = 3`, `a_0 = -1`.
    D3a,
    /// `d = 3`, `a_0 != -1`.
    D3b,
}

impl TableRegime {
    pub const ALL: [TableRegime; 5] = [
        TableRegime::D1,
        TableRegime::D2a,
        TableRegime::D2b,
        TableRegime::D3a,
        TableRegime::D3b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableRegime::D1 => "d1",
            TableRegime::D2a => "d2a",
            TableRegime::D2b => "d2b",
            TableRegime::D3a => "d3a",
            TableRegime::D3b => "d3b",
        }
    }

    pub fn degree(self) -> usize {
        match self {
            TableRegime::D1 => 1,
            TableRegime::D2a | TableRegime::D2b => 2,
            TableRegime::D3a | TableRegime::D3b => 3,
        }
    }

    /// Coefficients left free by the regime, highest index first.
    pub fn free_parameters(self) -> &'static [&'static str] {
        match self {
            TableRegime::D1 => &["a0"],
            TableRegime::D2a => &["a1"],
            TableRegime::D2b => &["a1", "a0"],
            TableRegime::D3a => &["a2", "a1"],
            TableRegime::D3b => &["a2", "a1", "a0"],
        }
    }

    /// The regime `f` falls into, if any.
    pub fn of(f: &IntPoly) -> Option<Self> {
        let a0 = f.constant_term();
        let one = BigInt::from(1);
        match f.degree() {
            1 => Some(TableRegime::D1),
            2 if *a0 == one => Some(TableRegime::D2a),
            2 => Some(TableRegime::D2b),
            3 if *a0 == -one => Some(TableRegime::D3a),
            3 => Some(TableRegime::D3b),
            _ => None,
        }
    }

    /// The monic polynomial with the given free coefficients, in the order
    /// of [`free_parameters`](Self::free_parameters). `None` if the values
    /// leave the regime or have the wrong count.
    pub fn polynomial(self, free: &[i64]) -> Option<IntPoly> {
        if free.len() != self.free_parameters().len() {
            return None;
        }
        let lower: Vec<i64> = match self {
            TableRegime::D1 => vec![free[0]],
            TableRegime::D2a => vec![1, free[0]],
            TableRegime::D2b => vec![free[1], free[0]],
            TableRegime::D3a => vec![-1, free[1], free[0]],
            TableRegime::D3b => vec![free[2], free[1], free[0]],
        };
        let lower: Vec<BigInt> = lower.into_iter().map(BigInt::from).collect();
        let f = IntPoly::monic(&lower);
        (TableRegime::of(&f) == Some(self)).then_some(f)
    }
}

impl fmt::Display for TableRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableRegime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TableRegime::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown table family '{s}', expected one of d1, d2a, d2b, d3a, d3b"))
    }
}

/// The invariants a table row predicts for a particular polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaRow {
    pub regime: TableRegime,
    pub k0: MarkedAbGroup,
    pub k1: FgAbGroup,
    pub homology_coeff: HomologyTable,
    pub homology_g: HomologyTable,
}

fn z() -> FgAbGroup {
    FgAbGroup::free(1)
}

/// Evaluates the row formulas at the coefficients of `f`. The plain group
/// homology is obtained from the coefficient row by
/// `H_0(G) = Z`, `H_1(G) = H_0 ⊕ Z`, `H_{k+1}(G) = H_k` for `k >= 1`.
pub fn formula_row(f: &IntPoly) -> Option<FormulaRow> {
    let regime = TableRegime::of(f)?;
    let a = |i: usize| f.coeff(i);
    let one = || BigInt::from(1);
    let cyc = FgAbGroup::cyclic;

    let (coeff, k0, k1) = match regime {
        TableRegime::D1 => {
            let m = one() + a(0);
            (
                vec![(0, cyc(m.clone()))],
                MarkedAbGroup::cyclic(m, 1),
                FgAbGroup::trivial(),
            )
        }
        TableRegime::D2a => {
            let m = BigInt::from(2) + a(1);
            (
                vec![(0, cyc(m.clone())), (1, z()), (2, z())],
                direct_sum_marked(&[MarkedAbGroup::cyclic(m, 1), MarkedAbGroup::zero(z())]),
                z(),
            )
        }
        TableRegime::D2b => {
            let m = one() + a(1) + a(0);
            let n = one() - a(0);
            (
                vec![(0, cyc(m.clone())), (1, cyc(n.clone()))],
                MarkedAbGroup::cyclic(m, 1),
                cyc(n),
            )
        }
        TableRegime::D3a => {
            let m = a(2) + a(1);
            (
                vec![(0, cyc(m.clone())), (1, cyc(m.clone())), (2, z()), (3, z())],
                direct_sum_marked(&[MarkedAbGroup::cyclic(m.clone(), 1), MarkedAbGroup::zero(z())]),
                direct_sum(&[cyc(m), z()]),
            )
        }
        TableRegime::D3b => {
            let m = one() + a(2) + a(1) + a(0);
            let n = -(a(0) * a(0)) + a(0) * a(2) - a(1) + one();
            let p = one() + a(0);
            (
                vec![(0, cyc(m.clone())), (1, cyc(n.clone())), (2, cyc(p.clone()))],
                direct_sum_marked(&[
                    MarkedAbGroup::cyclic(m, 1),
                    MarkedAbGroup::zero(cyc(p)),
                ]),
                cyc(n),
            )
        }
    };

    let coeff_table = HomologyTable::from_groups(coeff.iter().cloned());
    let mut g = vec![(0, z()), (1, direct_sum(&[coeff_table.get(0), z()]))];
    g.extend(coeff.into_iter().filter(|(k, _)| *k >= 1).map(|(k, grp)| (k + 1, grp)));
    Some(FormulaRow {
        regime,
        k0: k0.normalize_cyclic(),
        k1,
        homology_coeff: coeff_table,
        homology_g: HomologyTable::from_groups(g),
    })
}
