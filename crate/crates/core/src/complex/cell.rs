use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{ComplexSpec, Separation};
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A vertex or a closed edge of the ambient graph.
///
/// The derived order is the canonical one: all vertices by index, then all
/// edges by their sorted endpoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellElement {
    Vertex(Vertex),
    /// Endpoints with `0 < 1`; build through [`CellElement::edge`].
    Edge(Vertex, Vertex),
}

impl CellElement {
    pub fn edge(u: Vertex, v: Vertex) -> Self {
        CellElement::Edge(u.min(v), u.max(v))
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, CellElement::Edge(..))
    }

    /// Vertices contained in the closed element.
    pub fn footprint(&self) -> impl Iterator<Item = Vertex> {
        let (a, b) = match *self {
            CellElement::Vertex(v) => (v, None),
            CellElement::Edge(u, v) => (u, Some(v)),
        };
        std::iter::once(a).chain(b)
    }

    /// Closed point sets are disjoint iff they share no vertex.
    pub fn is_disjoint(&self, other: &CellElement) -> bool {
        self.footprint().all(|v| other.footprint().all(|w| v != w))
    }
}

impl fmt::Display for CellElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellElement::Vertex(v) => write!(f, "{v}"),
            CellElement::Edge(u, v) => write!(f, "({u},{v})"),
        }
    }
}

/// An `r`-tuple of element sets, one per color, each kept sorted.
///
/// A `Cell` value is only a candidate until checked against a
/// [`ComplexSpec`]. Cells compare lexicographically part by part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    parts: Vec<Vec<CellElement>>,
}

impl Cell {
    pub fn new(mut parts: Vec<Vec<CellElement>>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        Cell { parts }
    }

    /// A cell whose parts are vertex sets.
    pub fn from_vertex_sets(sets: Vec<Vec<Vertex>>) -> Self {
        Cell::new(
            sets.into_iter()
                .map(|s| s.into_iter().map(CellElement::Vertex).collect())
                .collect(),
        )
    }

    pub fn parts(&self) -> &[Vec<CellElement>] {
        &self.parts
    }

    pub fn colors(&self) -> usize {
        self.parts.len()
    }

    /// Number of edge elements, counted with multiplicity across parts.
    pub fn dim(&self) -> usize {
        self.parts.iter().flatten().filter(|e| e.is_edge()).count()
    }

    pub fn is_zero_cell(&self) -> bool {
        self.dim() == 0
    }

    /// Colors whose part contains `element`.
    pub fn occupancy(&self, element: &CellElement) -> BTreeSet<usize> {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, p)| p.binary_search(element).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    /// A vertex is available when robots of at least two colors sit on it.
    /// Robots on incident edges do not count.
    pub fn is_available(&self, v: Vertex) -> bool {
        self.occupancy(&CellElement::Vertex(v)).len() >= 2
    }

    /// `|c(v)| - |c2(v)|` for two 0-cells.
    pub fn occupancy_difference(c: &Cell, c2: &Cell, v: Vertex) -> Result<i64> {
        for cell in [c, c2] {
            if !cell.is_zero_cell() {
                return Err(Error::WrongDimension { expected: 0, actual: cell.dim() });
            }
        }
        if c.colors() != c2.colors() {
            return Err(Error::Precondition("cells have different numbers of colors".into()));
        }
        let at = |cell: &Cell| cell.occupancy(&CellElement::Vertex(v)).len() as i64;
        Ok(at(c) - at(c2))
    }
}

pub(super) fn check(spec: &ComplexSpec, cell: &Cell) -> Result<()> {
    let g = &spec.graph;
    let sizes = spec.colors.sizes();
    if cell.parts.len() != sizes.len() {
        return Err(Error::InvalidCell(format!(
            "{} parts for {} colors",
            cell.parts.len(),
            sizes.len()
        )));
    }
    for (i, (part, &size)) in cell.parts.iter().zip(sizes).enumerate() {
        if part.len() != size {
            return Err(Error::InvalidCell(format!(
                "color {i} has {} elements, expected {size}",
                part.len()
            )));
        }
        for el in part {
            let ok = match *el {
                CellElement::Vertex(v) => v < g.vertex_count(),
                CellElement::Edge(u, v) => u < v && g.has_edge(u, v),
            };
            if !ok {
                return Err(Error::InvalidCell(format!("{el} is not in the graph")));
            }
        }
        for (a, x) in part.iter().enumerate() {
            if let Some(y) = part[a + 1..].iter().find(|y| !x.is_disjoint(y)) {
                return Err(Error::InvalidCell(format!("color {i}: {x} and {y} meet")));
            }
        }
    }
    if spec.separation == Separation::AllRobots {
        let all: Vec<&CellElement> = cell.parts.iter().flatten().collect();
        for (a, x) in all.iter().enumerate() {
            if let Some(y) = all[a + 1..].iter().find(|y| !x.is_disjoint(y)) {
                return Err(Error::InvalidCell(format!("robots on {x} and {y} meet")));
            }
        }
    }
    if spec.require_cover {
        let mut covered = vec![false; g.vertex_count()];
        for el in cell.parts.iter().flatten() {
            if let CellElement::Vertex(v) = *el {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidCell(format!("vertex {v} is not covered")));
        }
    }
    Ok(())
}

/// Text form: parts separated by `|`, elements by `,`, edges as `(u,v)`,
/// e.g. `{0,1}|{0,2}|{(0,1)}`.
impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (j, el) in part.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{el}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .split('|')
            .map(parse_part)
            .collect::<Result<Vec<_>>>()?;
        Ok(Cell::new(parts))
    }
}

fn parse_part(raw: &str) -> Result<Vec<CellElement>> {
    let body = raw
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::CellSyntax(format!("part {raw:?} is not wrapped in braces")))?;
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let (el, tail) = if let Some(r) = rest.strip_prefix('(') {
            let close = r
                .find(')')
                .ok_or_else(|| Error::CellSyntax(format!("unclosed edge in {raw:?}")))?;
            let (u, v) = r[..close]
                .split_once(',')
                .ok_or_else(|| Error::CellSyntax(format!("edge needs two endpoints in {raw:?}")))?;
            let (u, v) = (parse_index(u)?, parse_index(v)?);
            if u == v {
                return Err(Error::CellSyntax(format!("degenerate edge ({u},{v})")));
            }
            (CellElement::edge(u, v), &r[close + 1..])
        } else {
            let end = rest.find(',').unwrap_or(rest.len());
            (CellElement::Vertex(parse_index(&rest[..end])?), &rest[end..])
        };
        out.push(el);
        let tail = tail.trim_start();
        rest = match tail.strip_prefix(',') {
            Some(t) => t.trim_start(),
            None if tail.is_empty() => tail,
            None => return Err(Error::CellSyntax(format!("expected ',' in {raw:?}"))),
        };
    }
    Ok(out)
}

fn parse_index(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::CellSyntax(format!("{:?} is not a vertex index", s.trim())))
}
