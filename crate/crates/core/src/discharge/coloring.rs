use serde::Serialize;

use crate::complex::{CellComplex, CellId};
use crate::error::{Error, Result};

/// Largest number of `i`-cells [`i_dim_color`] searches over.
pub const CELL_COLOR_MAX: usize = 64;

/// Colors of the `i`-cells such that the `i`-faces of every `(i+1)`-cell
/// carry at least two colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellColoring {
    pub dimension: usize,
    /// 1-based color of each `i`-cell.
    pub assignment: Vec<usize>,
    pub palette_size: usize,
}

impl CellColoring {
    pub fn is_valid(&self, c: &CellComplex) -> bool {
        let i = self.dimension;
        i < c.dim()
            && self.assignment.len() == c.cells(i).len()
            && c.cells(i + 1).iter().all(|cell| {
                let first = self.assignment[cell.boundary[0]];
                cell.boundary.iter().any(|&f| self.assignment[f] != first)
            })
    }
}

fn check_dims(c: &CellComplex, i: usize) -> Result<()> {
    if i + 1 > c.dim() {
        return Err(Error::InvalidArgument(format!(
            "complex of dimension {} has no cells of dimension {}",
            c.dim(),
            i + 1
        )));
    }
    let n = c.cells(i).len();
    if n > CELL_COLOR_MAX {
        return Err(Error::TooLarge(format!(
            "cell coloring supports at most {CELL_COLOR_MAX} cells of dimension {i}, got {n}"
        )));
    }
    Ok(())
}

/// Exact search for an `i`-dimensional `k`-coloring. Cells are colored in
/// index order and each new color is at most one above the largest used so
/// far, so every coloring is found up to renaming colors.
pub fn i_dim_color(c: &CellComplex, i: usize, k: usize) -> Result<Option<CellColoring>> {
    check_dims(c, i)?;
    let n = c.cells(i).len();
    let uppers = c.cells(i + 1);
    if uppers.iter().any(|u| u.boundary.len() < 2) {
        return Ok(None);
    }
    // each (i+1)-cell is checked once its last face is colored
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, cell) in uppers.iter().enumerate() {
        due[*cell.boundary.iter().max().unwrap()].push(u);
    }
    if k == 0 {
        return Ok((n == 0).then(|| CellColoring {
            dimension: i,
            assignment: Vec::new(),
            palette_size: 0,
        }));
    }
    let mut colors = vec![0usize; n];
    if !search(c, i, k, &due, &mut colors, 0, 0) {
        return Ok(None);
    }
    let palette_size = colors.iter().copied().max().unwrap_or(0);
    Ok(Some(CellColoring {
        dimension: i,
        assignment: colors,
        palette_size,
    }))
}

fn search(c: &CellComplex, i: usize, k: usize, due: &[Vec<usize>], colors: &mut [usize], at: usize, used: usize) -> bool {
    if at == colors.len() {
        return true;
    }
    for col in 1..=(used + 1).min(k) {
        colors[at] = col;
        let ok = due[at].iter().all(|&u| {
            let b = &c.cells(i + 1)[u].boundary;
            b.iter().any(|&f| colors[f] != colors[b[0]])
        });
        if ok && search(c, i, k, due, colors, at + 1, used.max(col)) {
            return true;
        }
    }
    colors[at] = 0;
    false
}

/// Smallest `k` admitting an `i`-dimensional `k`-coloring, with a witness.
pub fn chromatic_i(c: &CellComplex, i: usize) -> Result<(usize, CellColoring)> {
    check_dims(c, i)?;
    if let Some((u, _)) = c.cells(i + 1).iter().enumerate().find(|(_, u)| u.boundary.len() < 2) {
        return Err(Error::InvalidArgument(format!(
            "cell {} has fewer than two faces of dimension {i}",
            CellId::new(i + 1, u)
        )));
    }
    for k in 0..=c.cells(i).len() {
        if let Some(col) = i_dim_color(c, i, k)? {
            return Ok((k, col));
        }
    }
    unreachable!("distinct colors on every cell always work")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::named;

    #[test]
    fn tetrahedron_edges() {
        let t = named::tetrahedron_boundary();
        assert!(i_dim_color(&t, 1, 1).unwrap().is_none());
        let two = i_dim_color(&t, 1, 2).unwrap().unwrap();
        assert!(two.is_valid(&t));
        assert!(i_dim_color(&t, 1, 6).unwrap().unwrap().is_valid(&t));
        assert_eq!(chromatic_i(&t, 1).unwrap().0, 2);
    }

    #[test]
    fn single_triangle_and_octahedron() {
        let tri = CellComplex::simplicial(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(chromatic_i(&tri, 1).unwrap().0, 2);
        let o = named::octahedron_surface();
        let (k, w) = chromatic_i(&o, 1).unwrap();
        assert_eq!(k, 2);
        assert!(w.is_valid(&o));
    }

    #[test]
    fn vertex_colorings_are_graph_colorings() {
        // i = 0: each edge needs two colors, i.e. proper vertex coloring
        let c = CellComplex::from_graph(&crate::graph::named::petersen());
        assert_eq!(chromatic_i(&c, 0).unwrap().0, 3);
    }

    #[test]
    fn limits() {
        let t = named::tetrahedron_boundary();
        assert!(i_dim_color(&t, 2, 2).is_err());
        let big = CellComplex::from_graph(&crate::graph::named::complete(12));
        assert!(matches!(i_dim_color(&big, 0, 3), Ok(None)));
        let raised = crate::complex::raise_dimension(
            &crate::graph::named::complete(12),
            2,
            crate::complex::RaiseMode::Triangulated,
        )
        .unwrap()
        .complex;
        assert!(matches!(i_dim_color(&raised, 1, 2), Err(Error::TooLarge(_))));
    }
}
