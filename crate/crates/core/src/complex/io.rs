//! Complex JSON: `{"dim": x, "cells": [[dim, [vertices], [boundary]], ...]}`.
//! Boundary entries index cells of the next lower dimension in order of
//! appearance.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Cell, CellComplex};
use crate::error::{Error, Result};
use crate::graph::Vertex;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dim: usize,
    pub cells: Vec<(usize, Vec<Vertex>, Vec<usize>)>,
}

impl From<&CellComplex> for ComplexJson {
    fn from(c: &CellComplex) -> Self {
        let cells = c
            .cells
            .iter()
            .enumerate()
            .flat_map(|(d, level)| level.iter().map(move |cell| (d, cell.vertices.clone(), cell.boundary.clone())))
            .collect();
        ComplexJson { dim: c.dim(), cells }
    }
}

impl TryFrom<ComplexJson> for CellComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<CellComplex> {
        let mut levels: Vec<Vec<Cell>> = vec![Vec::new(); j.dim + 1];
        for (i, (d, mut vertices, boundary)) in j.cells.into_iter().enumerate() {
            if d > j.dim {
                return Err(Error::parse(
                    format!("cells[{i}]"),
                    format!("dimension {d} exceeds declared dim {}", j.dim),
                ));
            }
            let len = vertices.len();
            vertices.sort_unstable();
            vertices.dedup();
            if vertices.len() != len {
                return Err(Error::parse(format!("cells[{i}]"), "repeated vertex in cell"));
            }
            levels[d].push(Cell { vertices, boundary });
        }
        CellComplex::from_cells(levels).map_err(|e| match e {
            Error::BadCell(msg) => Error::parse("cells", msg),
            other => other,
        })
    }
}

impl Serialize for CellComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CellComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        CellComplex::try_from(ComplexJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub fn parse_complex(input: &str) -> Result<CellComplex> {
    let j: ComplexJson = serde_json::from_str(input)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    CellComplex::try_from(j)
}
