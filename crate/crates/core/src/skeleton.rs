//! The 1-skeleton of a complex: 0-cells joined by one arc per 1-cell.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::complex::{Cell, CellElement, ComplexSpec, FVector};
use crate::error::{Error, Result};

/// The two 0-cells at the ends of a 1-cell, in canonical order.
pub fn boundary_endpoints(spec: &ComplexSpec, c: &Cell) -> Result<(Cell, Cell)> {
    if c.dim() != 1 {
        return Err(Error::WrongDimension { expected: 1, actual: c.dim() });
    }
    spec.check_cell(c)?;
    let (i, a, b) = c
        .parts()
        .iter()
        .enumerate()
        .find_map(|(i, part)| {
            part.iter().find_map(|el| match *el {
                CellElement::Edge(a, b) => Some((i, a, b)),
                CellElement::Vertex(_) => None,
            })
        })
        .expect("1-cell has an edge element");
    let replace = |v| {
        let mut parts = c.parts().to_vec();
        for el in &mut parts[i] {
            if el.is_edge() {
                *el = CellElement::Vertex(v);
            }
        }
        Cell::new(parts)
    };
    let (p, q) = (replace(a), replace(b));
    Ok(if p <= q { (p, q) } else { (q, p) })
}

/// Component labelling of the skeleton nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component id of each node; ids are dense and numbered in node order.
    pub labels: Vec<usize>,
}

impl Components {
    /// Number of nodes in each component.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        self.labels.iter().for_each(|&l| sizes[l] += 1);
        sizes
    }
}

#[derive(Clone, Debug)]
pub struct SkeletonGraph {
    nodes: Vec<Cell>,
    arcs: Vec<(usize, usize)>,
    index: HashMap<Cell, usize>,
}

impl SkeletonGraph {
    /// Nodes are the 0-cells in canonical order.
    pub fn nodes(&self) -> &[Cell] {
        &self.nodes
    }

    /// One arc per 1-cell, in canonical 1-cell order. Parallel arcs are kept.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn node_index(&self, c: &Cell) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn components(&self) -> Components {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.arcs {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut labels = vec![usize::MAX; self.nodes.len()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.nodes.len() {
            if labels[s] != usize::MAX {
                continue;
            }
            labels[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if labels[w] == usize::MAX {
                        labels[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        Components { count, labels }
    }

    /// Same `n m` / `u v` text accepted by the graph parser. Parallel arcs
    /// are written out, so the result may not parse as a simple graph.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.nodes.len(), self.arcs.len());
        for (a, b) in &self.arcs {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    /// `index<TAB>cell` per node.
    pub fn to_node_listing(&self) -> String {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{i}\t{c}\n"))
            .collect()
    }
}

pub fn build_one_skeleton(spec: &ComplexSpec) -> Result<SkeletonGraph> {
    let nodes: Vec<Cell> = spec.enumerate_cells(Some(0)).collect();
    if nodes.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let index: HashMap<Cell, usize> =
        nodes.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let edges: Vec<Cell> = spec.enumerate_cells(Some(1)).collect();
    let arcs = edges
        .par_iter()
        .map(|c| {
            let (p, q) = boundary_endpoints(spec, c)?;
            let lookup = |x: &Cell| {
                index
                    .get(x)
                    .copied()
                    .ok_or_else(|| Error::Internal(format!("boundary {x} of {c} is not a 0-cell")))
            };
            Ok((lookup(&p)?, lookup(&q)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SkeletonGraph { nodes, arcs, index })
}

pub fn connected_components(spec: &ComplexSpec) -> Result<Components> {
    Ok(build_one_skeleton(spec)?.components())
}

/// Alternating sum `f0 - f1 + f2 - ...`.
pub fn euler_characteristic(f: &FVector) -> i128 {
    f.euler_characteristic()
}
