//! Grouped Stirling complexes: color vectors, cells, enumeration and the
//! closed-form cell counts.

mod cell;
mod counting;
mod enumerate;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub use cell::{Cell, CellElement};
pub use counting::{
    count_formula_two_one, count_formula_uniform, count_via_edge_tuples, wedge_count,
};
pub use enumerate::{CellEnumerator, Cells, FVector};

/// Group sizes `(l_1, ..., l_r)`; color `i` has `l_i` robots. Colors are
/// 0-based everywhere in this crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorVector(Vec<usize>);

impl ColorVector {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidColors("at least one color is required".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidColors("every group needs at least one robot".into()));
        }
        Ok(ColorVector(sizes))
    }

    /// `(2, 1, ..., 1)` with `n` colors.
    pub fn two_one(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidColors("need at least one color".into()));
        }
        let mut sizes = vec![1; n];
        sizes[0] = 2;
        Self::new(sizes)
    }

    /// `r` colors of `size` robots each.
    pub fn uniform(size: usize, r: usize) -> Result<Self> {
        Self::new(vec![size; r])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn colors(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl FromStr for ColorVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidColors(format!("{t:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sizes)
    }
}

impl fmt::Display for ColorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which robots must keep a full open edge between them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Separation {
    /// Only robots of the same color (the grouped Stirling complex).
    #[default]
    WithinColor,
    /// Every pair of robots, regardless of color. Together with coverage
    /// switched off this gives the ordered discrete configuration space.
    AllRobots,
}

/// A graph together with a color vector and the rules cells must obey.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSpec {
    pub graph: SimpleGraph,
    pub colors: ColorVector,
    /// Every vertex must carry a robot.
    pub require_cover: bool,
    pub separation: Separation,
}

impl ComplexSpec {
    pub fn new(graph: SimpleGraph, colors: ColorVector) -> Self {
        ComplexSpec {
            graph,
            colors,
            require_cover: true,
            separation: Separation::WithinColor,
        }
    }

    pub fn without_cover(mut self) -> Self {
        self.require_cover = false;
        self
    }

    pub fn separating_all_robots(mut self) -> Self {
        self.separation = Separation::AllRobots;
        self
    }

    /// True for the plain grouped Stirling complex (coverage on, same-color
    /// separation only).
    pub fn is_standard(&self) -> bool {
        self.require_cover && self.separation == Separation::WithinColor
    }

    /// Non-emptiness criterion for the covered complex: enough robots to
    /// cover every vertex and no group larger than the vertex set.
    pub fn is_nonempty(&self) -> bool {
        let n = self.graph.vertex_count();
        self.colors.total() >= n && self.colors.sizes().iter().all(|&l| l <= n)
    }

    pub fn is_nontrivial(&self) -> bool {
        let n = self.graph.vertex_count();
        self.colors.total() > n && self.colors.sizes().iter().all(|&l| l < n)
    }

    /// Upper bound `sum(l_i) - n` on cell dimension in the covered complex.
    pub fn max_dimension(&self) -> usize {
        self.colors.total().saturating_sub(self.graph.vertex_count())
    }

    pub fn is_valid_cell(&self, cell: &Cell) -> bool {
        self.check_cell(cell).is_ok()
    }

    /// Like [`is_valid_cell`](Self::is_valid_cell) but says what is wrong.
    pub fn check_cell(&self, cell: &Cell) -> Result<()> {
        cell::check(self, cell)
    }

    pub fn enumerator(&self) -> CellEnumerator<'_> {
        CellEnumerator::new(self)
    }

    /// Every valid cell exactly once in canonical order, optionally restricted
    /// to one dimension.
    pub fn enumerate_cells(&self, dim: Option<usize>) -> Cells<'_> {
        CellEnumerator::new(self).into_cells(dim)
    }

    pub fn f_vector(&self) -> FVector {
        CellEnumerator::new(self).f_vector()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn spec(family: GraphFamily, n: usize, sizes: &[usize]) -> ComplexSpec {
        ComplexSpec::new(
            SimpleGraph::named(family, n).unwrap(),
            ColorVector::new(sizes.to_vec()).unwrap(),
        )
    }

    #[test]
    fn color_vector_parsing() {
        let v: ColorVector = "2, 1,1".parse().unwrap();
        assert_eq!(v.sizes(), &[2, 1, 1]);
        assert_eq!(v.to_string(), "(2,1,1)");
        assert!("2,0".parse::<ColorVector>().is_err());
        assert!("".parse::<ColorVector>().is_err());
        assert!("a".parse::<ColorVector>().is_err());
        assert_eq!(ColorVector::two_one(4).unwrap().sizes(), &[2, 1, 1, 1]);
    }

    #[test]
    fn nonempty_criterion() {
        assert!(spec(GraphFamily::Path, 3, &[2, 2, 1]).is_nonempty());
        assert!(!spec(GraphFamily::Path, 3, &[1, 1]).is_nonempty());
        assert!(!spec(GraphFamily::Complete, 5, &[6, 1]).is_nonempty());
    }

    #[test]
    fn nontrivial_criterion() {
        assert!(spec(GraphFamily::Star, 4, &[3, 2]).is_nontrivial());
        assert!(!spec(GraphFamily::Star, 4, &[4, 2]).is_nontrivial());
        assert!(!spec(GraphFamily::Star, 4, &[2, 2]).is_nontrivial());
    }

    #[test]
    fn max_dimension_bound() {
        assert_eq!(spec(GraphFamily::Path, 3, &[2, 2, 1]).max_dimension(), 2);
        assert_eq!(spec(GraphFamily::Star, 4, &[3, 2]).max_dimension(), 1);
        assert_eq!(spec(GraphFamily::Cycle, 5, &[2, 2, 1]).max_dimension(), 0);
    }
}
