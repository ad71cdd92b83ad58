use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{CellComplex, CellId};
use crate::error::{Error, Result};
use crate::topo::{betti_numbers, certify_standalone, Coefficients, Verdict, DEFAULT_PI1_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperEarViolation {
    /// One of `subcomplex`, `nestedness`, `initial-sphere`, `ear`,
    /// `completeness`.
    pub clause: &'static str,
    pub stage: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperEarCheck {
    pub valid: bool,
    pub violation: Option<HyperEarViolation>,
}

fn fail(clause: &'static str, stage: Option<usize>, detail: String) -> Result<HyperEarCheck> {
    Ok(HyperEarCheck {
        valid: false,
        violation: Some(HyperEarViolation { clause, stage, detail }),
    })
}

/// Checks a sequence of stages `G_0 ⊂ G_1 ⊂ ... ⊂ G_k = c`, each a set of
/// cell ids. With top dimension `t`: `G_0` must certify as a `t`-sphere,
/// and each ear `G_{i+1} \ G_i` must be the closure of new top cells that
/// forms a ball whose boundary is a certified `(t-1)`-sphere lying in
/// `G_i`, with everything else outside `G_i`.
pub fn verify_hyper_ear_decomposition(c: &CellComplex, stages: &[Vec<CellId>]) -> Result<HyperEarCheck> {
    if stages.is_empty() {
        return Err(Error::InvalidArgument("no stages given".into()));
    }
    let mut sets: Vec<BTreeSet<CellId>> = Vec::with_capacity(stages.len());
    for (k, stage) in stages.iter().enumerate() {
        for &id in stage {
            c.cell(id)
                .map_err(|_| Error::BadCell(format!("stage {k} references missing cell {id}")))?;
        }
        sets.push(stage.iter().copied().collect());
    }
    for (k, s) in sets.iter().enumerate() {
        if c.closure(s)? != *s {
            return fail("subcomplex", Some(k), "stage is not closed under taking faces".into());
        }
    }
    for k in 1..sets.len() {
        if !(sets[k - 1].is_subset(&sets[k]) && sets[k - 1].len() < sets[k].len()) {
            return fail(
                "nestedness",
                Some(k),
                format!("stage {} is not strictly contained in stage {k}", k - 1),
            );
        }
    }
    let t = c.dim();
    let (g0, _, _) = c.subcomplex(&sets[0])?;
    let cert = certify_standalone(&g0, t, DEFAULT_PI1_BUDGET)?;
    if cert.verdict != Verdict::Certified {
        return fail(
            "initial-sphere",
            Some(0),
            format!("initial stage is not certified as a {t}-sphere ({:?})", cert.verdict),
        );
    }
    for k in 0..sets.len() - 1 {
        if let Some(detail) = ear_problem(c, &sets[k], &sets[k + 1], t)? {
            return fail("ear", Some(k + 1), detail);
        }
    }
    let all: BTreeSet<CellId> = c.cell_ids().collect();
    if *sets.last().unwrap() != all {
        return fail("completeness", Some(sets.len() - 1), "final stage is not the whole complex".into());
    }
    Ok(HyperEarCheck {
        valid: true,
        violation: None,
    })
}

fn ear_problem(c: &CellComplex, before: &BTreeSet<CellId>, after: &BTreeSet<CellId>, t: usize) -> Result<Option<String>> {
    let new: BTreeSet<CellId> = after.difference(before).copied().collect();
    let tops: BTreeSet<CellId> = new.iter().filter(|id| id.dim == t).copied().collect();
    if tops.is_empty() {
        return Ok(Some(format!("ear adds no {t}-cell")));
    }
    let disk = c.closure(&tops)?;
    if !new.is_subset(&disk) {
        return Ok(Some("ear has cells outside the closure of its top cells".into()));
    }
    let mut facet_count: BTreeMap<usize, usize> = BTreeMap::new();
    for id in &tops {
        for &f in &c.cell(*id)?.boundary {
            *facet_count.entry(f).or_default() += 1;
        }
    }
    if facet_count.values().any(|&k| k > 2) {
        return Ok(Some("a facet of the ear lies in more than two of its cells".into()));
    }
    let rim: BTreeSet<CellId> = facet_count
        .iter()
        .filter(|(_, &k)| k == 1)
        .map(|(&f, _)| CellId::new(t - 1, f))
        .collect();
    if rim.is_empty() {
        return Ok(Some("ear has no boundary".into()));
    }
    let rim = c.closure(&rim)?;
    let (disk_cx, _, _) = c.subcomplex(&disk)?;
    let mut point = vec![0; t + 1];
    point[0] = 1;
    for k in [Coefficients::Gf2, Coefficients::Rational] {
        if betti_numbers(&disk_cx, k)? != point {
            return Ok(Some("ear does not have the homology of a ball".into()));
        }
    }
    let (rim_cx, _, _) = c.subcomplex(&rim)?;
    if certify_standalone(&rim_cx, t - 1, DEFAULT_PI1_BUDGET)?.verdict != Verdict::Certified {
        return Ok(Some(format!("ear boundary is not certified as a {}-sphere", t - 1)));
    }
    if !rim.is_subset(before) {
        return Ok(Some("ear boundary is not contained in the previous stage".into()));
    }
    if disk.difference(&rim).any(|id| before.contains(id)) {
        return Ok(Some("ear interior meets the previous stage".into()));
    }
    Ok(None)
}
