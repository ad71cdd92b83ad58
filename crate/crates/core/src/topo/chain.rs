use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{CellComplex, CellId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Gf2,
    Rational,
}

/// Signed boundary matrix `∂_i`, stored by column: column `j` lists the
/// `(i-1)`-cells of the boundary of `i`-cell `j` with their ±1 incidence.
/// Reading the entries mod 2 gives the GF(2) matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i8)>>,
}

/// All boundary matrices `∂_1 .. ∂_x` of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainComplexData {
    /// `matrices[i - 1]` is `∂_i`.
    pub matrices: Vec<BoundaryMatrix>,
}

impl ChainComplexData {
    pub fn boundary(&self, i: usize) -> Option<&BoundaryMatrix> {
        i.checked_sub(1).and_then(|k| self.matrices.get(k))
    }

    pub fn rank(&self, i: usize, coefficients: Coefficients) -> usize {
        match self.boundary(i) {
            None => 0,
            Some(m) => match coefficients {
                Coefficients::Gf2 => rank_gf2(m),
                Coefficients::Rational => rank_rational(m),
            },
        }
    }
}

/// Builds the signed boundary matrices and checks `∂∂ = 0` both over the
/// integers and mod 2.
///
/// Edges get `∂[u, v] = v - u`. A simplex all of whose facets are simplices
/// gets the alternating signs of its sorted vertex order. Any other cell
/// gets signs propagated across the ridges its facets share, starting with
/// `+1` on its first facet; this fails unless every ridge of the boundary
/// lies in exactly two facets with a consistent orientation.
pub fn boundary_matrices(c: &CellComplex) -> Result<ChainComplexData> {
    let mut matrices: Vec<BoundaryMatrix> = Vec::new();
    for dim in 1..=c.dim() {
        let lower = c.cells(dim - 1);
        let mut columns = Vec::with_capacity(c.cells(dim).len());
        for (j, cell) in c.cells(dim).iter().enumerate() {
            let id = CellId::new(dim, j);
            let col = if dim == 1 {
                vec![(cell.vertices[0], -1), (cell.vertices[1], 1)]
            } else if let Some(col) = simplex_column(c, dim, j) {
                col
            } else {
                propagate_signs(&matrices[dim - 2], &cell.boundary)
                    .ok_or_else(|| Error::InconsistentBoundary(id.to_string()))?
            };
            let mut col = col;
            col.sort_unstable();
            columns.push(col);
        }
        let m = BoundaryMatrix {
            rows: lower.len(),
            columns,
        };
        if dim >= 2 {
            check_composition(&matrices[dim - 2], &m, dim)?;
        }
        matrices.push(m);
    }
    Ok(ChainComplexData { matrices })
}

fn simplex_column(c: &CellComplex, dim: usize, j: usize) -> Option<Vec<(usize, i8)>> {
    let cell = &c.cells(dim)[j];
    if cell.vertices.len() != dim + 1 || cell.boundary.len() != dim + 1 {
        return None;
    }
    let lower = c.cells(dim - 1);
    let mut col = Vec::with_capacity(dim + 1);
    for &b in &cell.boundary {
        let face = &lower[b];
        if face.vertices.len() != dim || (dim >= 2 && face.boundary.len() != dim) {
            return None;
        }
        let missing = cell.vertices.iter().position(|v| !face.vertices.contains(v))?;
        col.push((b, if missing % 2 == 0 { 1 } else { -1 }));
    }
    Some(col)
}

fn propagate_signs(below: &BoundaryMatrix, facets: &[usize]) -> Option<Vec<(usize, i8)>> {
    if facets.is_empty() {
        return None;
    }
    // ridge -> [(position in facets, incidence sign)]
    let mut ridges: BTreeMap<usize, Vec<(usize, i8)>> = BTreeMap::new();
    for (p, &f) in facets.iter().enumerate() {
        for &(r, s) in &below.columns[f] {
            ridges.entry(r).or_default().push((p, s));
        }
    }
    if ridges.values().any(|v| v.len() != 2) {
        return None;
    }
    let mut sign = vec![0i8; facets.len()];
    sign[0] = 1;
    let mut stack = vec![0usize];
    while let Some(p) = stack.pop() {
        for &(r, _) in &below.columns[facets[p]] {
            let pair = &ridges[&r];
            let (me, other) = if pair[0].0 == p { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
            let want = -sign[p] * me.1 * other.1;
            if sign[other.0] == 0 {
                sign[other.0] = want;
                stack.push(other.0);
            } else if sign[other.0] != want {
                return None;
            }
        }
    }
    if sign.contains(&0) {
        return None;
    }
    Some(facets.iter().zip(sign).map(|(&f, s)| (f, s)).collect())
}

fn check_composition(lower: &BoundaryMatrix, upper: &BoundaryMatrix, dim: usize) -> Result<()> {
    for (j, col) in upper.columns.iter().enumerate() {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(f, s) in col {
            for &(r, t) in &lower.columns[f] {
                *acc.entry(r).or_default() += (s * t) as i64;
            }
        }
        let integer_ok = acc.values().all(|&x| x == 0);
        let gf2_ok = acc.values().all(|&x| x % 2 == 0);
        if !integer_ok || !gf2_ok {
            return Err(Error::InconsistentBoundary(format!(
                "{} (boundary of boundary is nonzero)",
                CellId::new(dim, j)
            )));
        }
    }
    Ok(())
}

pub fn rank_gf2(m: &BoundaryMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut cols: Vec<Vec<u64>> = m
        .columns
        .iter()
        .map(|col| {
            let mut bits = vec![0u64; words];
            for &(r, _) in col {
                bits[r / 64] ^= 1 << (r % 64);
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for row in 0..m.rows {
        let (w, b) = (row / 64, 1u64 << (row % 64));
        let Some(p) = (rank..cols.len()).find(|&j| cols[j][w] & b != 0) else {
            continue;
        };
        cols.swap(rank, p);
        let pivot = cols[rank].clone();
        for col in cols.iter_mut().skip(rank + 1) {
            if col[w] & b != 0 {
                for (x, y) in col.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_rational(m: &BoundaryMatrix) -> usize {
    let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); m.columns.len()]; m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(r, s) in col {
            rows[r][j] = BigRational::from_integer(BigInt::from(s));
        }
    }
    rational_rank(rows)
}

pub(crate) fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = BigRational::one() / rows[rank][col].clone();
        let pivot: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for r in rank + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// `b_i = dim ker ∂_i - rank ∂_{i+1}` for `i = 0..=dim`.
pub fn betti_numbers(c: &CellComplex, coefficients: Coefficients) -> Result<Vec<usize>> {
    let chain = boundary_matrices(c)?;
    let ranks: Vec<usize> = (0..=c.dim() + 1).map(|i| chain.rank(i, coefficients)).collect();
    Ok((0..=c.dim())
        .map(|i| c.cells(i).len() - ranks[i] - ranks[i + 1])
        .collect())
}

pub fn euler_characteristic(c: &CellComplex) -> i64 {
    c.euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::named;

    #[test]
    fn single_triangle() {
        let c = CellComplex::simplicial(3, &[vec![0, 1, 2]]).unwrap();
        let ch = boundary_matrices(&c).unwrap();
        assert_eq!(ch.matrices[0].rows, 3);
        assert_eq!(ch.matrices[0].columns.len(), 3);
        assert_eq!(ch.matrices[1].rows, 3);
        assert_eq!(ch.matrices[1].columns.len(), 1);
        assert_eq!(betti_numbers(&c, Coefficients::Rational).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn ranks_of_spheres() {
        let t = named::tetrahedron_boundary();
        let ch = boundary_matrices(&t).unwrap();
        assert_eq!(ch.rank(2, Coefficients::Gf2), 3);
        assert_eq!(ch.rank(1, Coefficients::Gf2), 3);
        let o = named::octahedron_surface();
        let ch = boundary_matrices(&o).unwrap();
        assert_eq!(ch.rank(2, Coefficients::Gf2), 7);
        assert_eq!(ch.rank(1, Coefficients::Gf2), 5);
        assert_eq!(ch.rank(2, Coefficients::Rational), 7);
    }

    #[test]
    fn betti_of_sphere_and_torus() {
        for k in [Coefficients::Gf2, Coefficients::Rational] {
            assert_eq!(betti_numbers(&named::tetrahedron_boundary(), k).unwrap(), vec![1, 0, 1]);
            assert_eq!(betti_numbers(&named::torus7(), k).unwrap(), vec![1, 2, 1]);
        }
    }

    #[test]
    fn polygon_cells_get_consistent_signs() {
        // a square filled by one 2-cell
        let mut c = CellComplex::from_graph(&crate::graph::named::cycle(4));
        c.push_cell(2, vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
        let ch = boundary_matrices(&c).unwrap();
        assert_eq!(ch.matrices[1].columns[0].len(), 4);
        assert_eq!(betti_numbers(&c, Coefficients::Rational).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn inconsistent_boundary_named() {
        // a 2-cell bounded by a path is not a cycle
        let mut c = CellComplex::from_graph(&crate::graph::named::path(3));
        c.push_cell(2, vec![0, 1, 2], vec![0, 1]);
        let err = boundary_matrices(&c).unwrap_err();
        assert!(err.to_string().contains("2:0"), "{err}");
    }
}
