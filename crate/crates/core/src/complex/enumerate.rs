use std::fmt;
use std::ops::Range;

use rayon::prelude::*;

use super::{Cell, CellElement, ComplexSpec, Separation};

/// Cell counts by dimension; entry `i` is the number of `i`-cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(Vec<u128>);

impl FVector {
    pub fn new(counts: Vec<u128>) -> Self {
        FVector(counts)
    }

    pub fn counts(&self) -> &[u128] {
        &self.0
    }

    /// Count in dimension `i`, zero past the end.
    pub fn get(&self, i: usize) -> u128 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u128 {
        self.0.iter().sum()
    }

    /// Counts with trailing zeros removed.
    pub fn trimmed(&self) -> &[u128] {
        let end = self.0.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }

    /// Equality up to trailing zeros.
    pub fn same_counts(&self, other: &FVector) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// Alternating sum of the entries.
    pub fn euler_characteristic(&self) -> i128 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i128 } else { -(c as i128) })
            .sum()
    }
}

impl From<Vec<u128>> for FVector {
    fn from(v: Vec<u128>) -> Self {
        FVector(v)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug)]
struct Part {
    elements: Vec<CellElement>,
    vertices: Vec<usize>,
    footprint: Vec<usize>,
    edges: usize,
}

/// Precomputed per-color candidate parts for walking the cells of a complex.
#[derive(Debug)]
pub struct CellEnumerator<'a> {
    spec: &'a ComplexSpec,
    // Candidate lists are shared between colors of equal size.
    lists: Vec<Vec<Part>>,
    list_of: Vec<usize>,
    // Suffix sums over colors `level..`, length r + 1.
    max_vertices_from: Vec<usize>,
    min_edges_from: Vec<usize>,
    max_edges_from: Vec<usize>,
}

impl<'a> CellEnumerator<'a> {
    pub fn new(spec: &'a ComplexSpec) -> Self {
        let g = &spec.graph;
        let elements: Vec<CellElement> = (0..g.vertex_count())
            .map(CellElement::Vertex)
            .chain(g.edges().iter().map(|&(u, v)| CellElement::Edge(u, v)))
            .collect();

        let mut sizes: Vec<usize> = Vec::new();
        let mut lists = Vec::new();
        let mut list_of = Vec::new();
        for &l in spec.colors.sizes() {
            let idx = match sizes.iter().position(|&s| s == l) {
                Some(i) => i,
                None => {
                    sizes.push(l);
                    lists.push(disjoint_parts(&elements, g.vertex_count(), l));
                    sizes.len() - 1
                }
            };
            list_of.push(idx);
        }

        let r = list_of.len();
        let mut max_vertices_from = vec![0; r + 1];
        let mut min_edges_from = vec![0; r + 1];
        let mut max_edges_from = vec![0; r + 1];
        for level in (0..r).rev() {
            let parts = &lists[list_of[level]];
            let mv = parts.iter().map(|p| p.vertices.len()).max().unwrap_or(0);
            let mine = parts.iter().map(|p| p.edges).min().unwrap_or(0);
            let maxe = parts.iter().map(|p| p.edges).max().unwrap_or(0);
            max_vertices_from[level] = max_vertices_from[level + 1] + mv;
            min_edges_from[level] = min_edges_from[level + 1] + mine;
            max_edges_from[level] = max_edges_from[level + 1] + maxe;
        }

        CellEnumerator { spec, lists, list_of, max_vertices_from, min_edges_from, max_edges_from }
    }

    pub fn spec(&self) -> &ComplexSpec {
        self.spec
    }

    /// Number of candidate parts for color `i`.
    pub fn candidate_count(&self, i: usize) -> usize {
        self.parts(i).len()
    }

    fn parts(&self, level: usize) -> &[Part] {
        &self.lists[self.list_of[level]]
    }

    fn first_level_len(&self) -> usize {
        if self.list_of.is_empty() {
            0
        } else {
            self.parts(0).len()
        }
    }

    pub fn into_cells(self, dim: Option<usize>) -> Cells<'a> {
        let walk = Walk::new(&self, dim, 0..self.first_level_len());
        Cells { en: self, walk }
    }

    pub fn f_vector(&self) -> FVector {
        let total = self.spec.colors.total();
        let counts = (0..self.first_level_len())
            .into_par_iter()
            .map(|p| {
                let mut counts = vec![0u128; total + 1];
                let mut walk = Walk::new(self, None, p..p + 1);
                while walk.step(self) {
                    counts[walk.edges] += 1;
                }
                counts
            })
            .reduce(
                || vec![0u128; total + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );

        let attained = counts.iter().rposition(|&c| c != 0);
        let len = match attained {
            None => 1,
            Some(top) if self.spec.require_cover => {
                let bound = self.spec.max_dimension();
                assert!(top <= bound, "cell of dimension {top} exceeds bound {bound}");
                bound + 1
            }
            Some(top) => top + 1,
        };
        FVector(counts[..len].to_vec())
    }
}

/// All pairwise-disjoint `size`-subsets of `elements`, in lexicographic order.
fn disjoint_parts(elements: &[CellElement], n: usize, size: usize) -> Vec<Part> {
    fn rec(
        elements: &[CellElement],
        start: usize,
        size: usize,
        blocked: &mut [bool],
        chosen: &mut Vec<CellElement>,
        out: &mut Vec<Part>,
    ) {
        if chosen.len() == size {
            let vertices = chosen
                .iter()
                .filter_map(|e| match *e {
                    CellElement::Vertex(v) => Some(v),
                    CellElement::Edge(..) => None,
                })
                .collect();
            out.push(Part {
                elements: chosen.clone(),
                vertices,
                footprint: chosen.iter().flat_map(|e| e.footprint()).collect(),
                edges: chosen.iter().filter(|e| e.is_edge()).count(),
            });
            return;
        }
        let need = size - chosen.len();
        for idx in start..elements.len() {
            if elements.len() - idx < need {
                break;
            }
            let el = elements[idx];
            if el.footprint().any(|v| blocked[v]) {
                continue;
            }
            el.footprint().for_each(|v| blocked[v] = true);
            chosen.push(el);
            rec(elements, idx + 1, size, blocked, chosen, out);
            chosen.pop();
            el.footprint().for_each(|v| blocked[v] = false);
        }
    }

    let mut out = Vec::new();
    rec(elements, 0, size, &mut vec![false; n], &mut Vec::with_capacity(size), &mut out);
    out
}

/// Depth-first walk over the product of candidate parts. Holds only indices,
/// so the enumerator can be borrowed separately.
#[derive(Debug)]
struct Walk {
    dim: Option<usize>,
    first: Range<usize>,
    cursor: Vec<usize>,
    chosen: Vec<usize>,
    cover: Vec<u32>,
    uncovered: usize,
    taken: Vec<bool>,
    edges: usize,
    pending_pop: bool,
    done: bool,
}

impl Walk {
    fn new(en: &CellEnumerator<'_>, dim: Option<usize>, first: Range<usize>) -> Self {
        let r = en.list_of.len();
        let n = en.spec.graph.vertex_count();
        let mut cursor = vec![0; r];
        if r > 0 {
            cursor[0] = first.start;
        }
        Walk {
            dim,
            first,
            cursor,
            chosen: Vec::with_capacity(r),
            cover: vec![0; n],
            uncovered: n,
            taken: vec![false; n],
            edges: 0,
            pending_pop: false,
            done: r == 0,
        }
    }

    fn fits(&self, en: &CellEnumerator<'_>, level: usize, part: &Part) -> bool {
        if en.spec.separation == Separation::AllRobots
            && part.footprint.iter().any(|&v| self.taken[v])
        {
            return false;
        }
        if let Some(d) = self.dim {
            let e = self.edges + part.edges;
            if e + en.min_edges_from[level + 1] > d || e + en.max_edges_from[level + 1] < d {
                return false;
            }
        }
        if en.spec.require_cover {
            let newly = part.vertices.iter().filter(|&&v| self.cover[v] == 0).count();
            if self.uncovered - newly > en.max_vertices_from[level + 1] {
                return false;
            }
        }
        true
    }

    fn push(&mut self, en: &CellEnumerator<'_>, level: usize, idx: usize) {
        let part = &en.parts(level)[idx];
        for &v in &part.vertices {
            if self.cover[v] == 0 {
                self.uncovered -= 1;
            }
            self.cover[v] += 1;
        }
        if en.spec.separation == Separation::AllRobots {
            part.footprint.iter().for_each(|&v| self.taken[v] = true);
        }
        self.edges += part.edges;
        self.chosen.push(idx);
        if level + 1 < self.cursor.len() {
            self.cursor[level + 1] = 0;
        }
    }

    fn pop(&mut self, en: &CellEnumerator<'_>) {
        let level = self.chosen.len() - 1;
        let idx = self.chosen.pop().expect("pop on empty walk");
        let part = &en.parts(level)[idx];
        for &v in &part.vertices {
            self.cover[v] -= 1;
            if self.cover[v] == 0 {
                self.uncovered += 1;
            }
        }
        if en.spec.separation == Separation::AllRobots {
            part.footprint.iter().for_each(|&v| self.taken[v] = false);
        }
        self.edges -= part.edges;
    }

    /// Advances to the next complete cell; false once exhausted.
    fn step(&mut self, en: &CellEnumerator<'_>) -> bool {
        if self.done {
            return false;
        }
        let r = self.cursor.len();
        if self.pending_pop {
            self.pop(en);
            self.pending_pop = false;
        }
        loop {
            let level = self.chosen.len();
            if level == r {
                self.pending_pop = true;
                return true;
            }
            let end = if level == 0 { self.first.end } else { en.parts(level).len() };
            let mut pushed = false;
            while self.cursor[level] < end {
                let idx = self.cursor[level];
                self.cursor[level] += 1;
                if self.fits(en, level, &en.parts(level)[idx]) {
                    self.push(en, level, idx);
                    pushed = true;
                    break;
                }
            }
            if !pushed {
                if level == 0 {
                    self.done = true;
                    return false;
                }
                self.pop(en);
            }
        }
    }

    fn cell(&self, en: &CellEnumerator<'_>) -> Cell {
        Cell::new(
            self.chosen
                .iter()
                .enumerate()
                .map(|(level, &idx)| en.parts(level)[idx].elements.clone())
                .collect(),
        )
    }
}

/// Streaming iterator over the cells of a complex in canonical order.
#[derive(Debug)]
pub struct Cells<'a> {
    en: CellEnumerator<'a>,
    walk: Walk,
}

impl Iterator for Cells<'_> {
    type Item = Cell;

    fn next(&mut self) -> Option<Cell> {
        if self.walk.step(&self.en) {
            Some(self.walk.cell(&self.en))
        } else {
            None
        }
    }
}
