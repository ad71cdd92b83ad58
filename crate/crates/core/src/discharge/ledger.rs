use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::complex::{CellComplex, CellId};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stage {
    #[serde(rename = "initial")]
    Initial,
    #[serde(rename = "after_R1")]
    AfterR1,
    #[serde(rename = "after_R2")]
    AfterR2,
}

impl Stage {
    fn name(self) -> &'static str {
        match self {
            Stage::Initial => "initial",
            Stage::AfterR1 => "after_R1",
            Stage::AfterR2 => "after_R2",
        }
    }
}

/// How R1 pools the weights of cells of dimension at most `d - 3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum R1Scope {
    /// One pool over all those dimensions.
    #[default]
    Joint,
    /// One pool per dimension.
    PerDim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub a: i64,
    pub b: i64,
    /// `2a + d·b`.
    pub c: i64,
    pub d: usize,
    pub parity: &'static str,
}

/// Weights of every cell at one stage of the discharging.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightLedger {
    pub stage: Stage,
    #[serde(serialize_with = "serialize_weights")]
    pub weights: Vec<Vec<Rational>>,
    pub params: Params,
    /// `c·[-1 + (-1)^{d+1}]`, the total forced by Euler's relation.
    #[serde(serialize_with = "exact::serialize")]
    pub predicted_total: Rational,
    /// Whether the initial total matched `predicted_total`.
    pub euler_identity_holds: bool,
}

fn serialize_weights<S: Serializer>(w: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(w.iter().map(Vec::len).sum()))?;
    for (dim, level) in w.iter().enumerate() {
        for (i, x) in level.iter().enumerate() {
            m.serialize_entry(&CellId::new(dim, i).to_string(), &x.to_string())?;
        }
    }
    m.end()
}

impl WeightLedger {
    pub fn total(&self) -> Rational {
        self.weights.iter().flatten().sum()
    }

    pub fn weight(&self, id: CellId) -> Option<&Rational> {
        self.weights.get(id.dim)?.get(id.index)
    }

    /// Sum of the weights of each dimension.
    pub fn totals_by_dim(&self) -> Vec<Rational> {
        self.weights.iter().map(|l| l.iter().sum()).collect()
    }

    fn expect(&self, stage: Stage) -> Result<()> {
        if self.stage != stage {
            return Err(Error::WrongStage {
                found: self.stage.name().into(),
                expected: stage.name().into(),
            });
        }
        Ok(())
    }

    fn check_shape(&self, c: &CellComplex) -> Result<()> {
        let shape: Vec<usize> = self.weights.iter().map(Vec::len).collect();
        if shape != c.face_vector().0 {
            return Err(Error::InvalidArgument(format!(
                "ledger has cell counts {shape:?} but the complex has {:?}",
                c.face_vector().0
            )));
        }
        Ok(())
    }
}

/// Initial weights on a `d`-complex whose `d`-cells are its regions.
///
/// With `c = 2a + d·b`: each `d`-cell gets `a·(number of facets) - c`,
/// each `(d-1)`-cell `0`, each `(d-2)`-cell `b·(number of (d-1)-cells on
/// it) - c`, and each `i`-cell with `i <= d-3` gets `(-1)^i·c` for odd `d`
/// and `(-1)^{i+1}·c` for even `d`.
///
/// Checks beforehand that every `(d-1)`-cell lies in exactly two `d`-cells
/// and has exactly `d` facets, so that the total collapses to
/// `c·[-1 + (-1)^{d+1}]` whenever the Euler characteristic is that of a
/// `d`-sphere.
pub fn initial_weights(cx: &CellComplex, a: i64, b: i64, d: usize) -> Result<WeightLedger> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("d must be at least 2, got {d}")));
    }
    if cx.dim() < d || cx.cells(d).is_empty() {
        return Err(Error::MissingRegions(d));
    }
    if cx.dim() > d {
        return Err(Error::InvalidArgument(format!(
            "complex has dimension {} above d = {d}",
            cx.dim()
        )));
    }
    let up = cx.cofacets(d - 1);
    if let Some((f, owners)) = up.iter().enumerate().find(|(_, o)| o.len() != 2) {
        return Err(Error::Preflight {
            equation: 1,
            detail: format!(
                "cell {} lies in {} cells of dimension {d}, not 2",
                CellId::new(d - 1, f),
                owners.len()
            ),
        });
    }
    if let Some((f, cell)) = cx.cells(d - 1).iter().enumerate().find(|(_, c)| c.boundary.len() != d) {
        return Err(Error::Preflight {
            equation: 2,
            detail: format!(
                "cell {} has {} facets, not {d}",
                CellId::new(d - 1, f),
                cell.boundary.len()
            ),
        });
    }
    let c = 2 * a + d as i64 * b;
    let cr = exact::int(c);
    let ridge_up = cx.cofacets(d - 2);
    let mut weights = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let level: Vec<Rational> = if i == d {
            cx.cells(d)
                .iter()
                .map(|cell| exact::int(a * cell.boundary.len() as i64 - c))
                .collect()
        } else if i == d - 1 {
            vec![Rational::zero(); cx.cells(i).len()]
        } else if i == d - 2 {
            ridge_up.iter().map(|o| exact::int(b * o.len() as i64 - c)).collect()
        } else {
            let positive = (i % 2 == 0) == (d % 2 == 1);
            let w = if positive { cr.clone() } else { -cr.clone() };
            vec![w; cx.cells(i).len()]
        };
        weights.push(level);
    }
    let predicted_total = exact::int(if d % 2 == 1 { 0 } else { -2 * c });
    let mut ledger = WeightLedger {
        stage: Stage::Initial,
        weights,
        params: Params {
            a,
            b,
            c,
            d,
            parity: if d % 2 == 1 { "odd" } else { "even" },
        },
        predicted_total,
        euler_identity_holds: false,
    };
    ledger.euler_identity_holds = ledger.total() == ledger.predicted_total;
    Ok(ledger)
}

fn pool(weights: &mut [Vec<Rational>], dims: std::ops::Range<usize>) {
    let count: usize = dims.clone().map(|i| weights[i].len()).sum();
    if count == 0 {
        return;
    }
    let sum: Rational = dims.clone().flat_map(|i| weights[i].iter()).sum();
    let share = sum / exact::int(count as i64);
    for i in dims {
        for w in weights[i].iter_mut() {
            *w = share.clone();
        }
    }
}

/// R1: the weights of all cells of dimension at most `d - 3` are pooled
/// and shared out equally, jointly or per dimension.
pub fn apply_r1(ledger: &WeightLedger, cx: &CellComplex, scope: R1Scope) -> Result<WeightLedger> {
    ledger.expect(Stage::Initial)?;
    ledger.check_shape(cx)?;
    let mut out = ledger.clone();
    let d = ledger.params.d;
    if d >= 3 {
        match scope {
            R1Scope::Joint => pool(&mut out.weights, 0..d - 2),
            R1Scope::PerDim => {
                for i in 0..d - 2 {
                    pool(&mut out.weights, i..i + 1);
                }
            }
        }
    }
    out.stage = Stage::AfterR1;
    Ok(out)
}

/// R2: the weights of all cells of dimension at most `d - 2` are pooled
/// and shared out equally.
pub fn apply_r2(ledger: &WeightLedger, cx: &CellComplex) -> Result<WeightLedger> {
    ledger.expect(Stage::AfterR1)?;
    ledger.check_shape(cx)?;
    let mut out = ledger.clone();
    pool(&mut out.weights, 0..ledger.params.d - 1);
    out.stage = Stage::AfterR2;
    Ok(out)
}

/// The state the odd-dimensional discharging argument rules out: every
/// cell of dimension `1..=d` has nonnegative weight, some cell has positive
/// weight, and so the total exceeds the total Euler's relation forces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContradictionReport {
    pub stage: Stage,
    pub nonnegative_above_vertices: bool,
    pub some_positive: bool,
    #[serde(serialize_with = "exact::serialize")]
    pub total: Rational,
    #[serde(serialize_with = "exact::serialize")]
    pub predicted_total: Rational,
    pub contradiction: bool,
}

pub fn detect_contradiction(ledger: &WeightLedger) -> ContradictionReport {
    let nonneg = ledger.weights[1..].iter().flatten().all(|w| !w.is_negative());
    let some_positive = ledger.weights.iter().flatten().any(|w| w.is_positive());
    let total = ledger.total();
    ContradictionReport {
        stage: ledger.stage,
        nonnegative_above_vertices: nonneg,
        some_positive,
        contradiction: nonneg && some_positive && total > ledger.predicted_total,
        total,
        predicted_total: ledger.predicted_total.clone(),
    }
}
