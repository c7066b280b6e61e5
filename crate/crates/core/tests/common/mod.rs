//! Test-side oracles and samplers, written from the definitions and kept
//! independent of the library's enumeration and planner internals.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use stirling::planner::{apply_move, MovePlan};
use stirling::{Cell, CellElement, ColorVector, ComplexSpec, NamedGraph, SimpleGraph, Separation};

pub fn graph(name: &str) -> SimpleGraph {
    name.parse::<NamedGraph>().unwrap().build().unwrap()
}

/// Star on four vertices plus an edge between two leaves.
pub fn y_prime() -> SimpleGraph {
    SimpleGraph::new(4, [(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap()
}

pub fn spec(g: SimpleGraph, sizes: &[usize]) -> ComplexSpec {
    ComplexSpec::new(g, ColorVector::new(sizes.to_vec()).unwrap())
}

pub fn named_spec(name: &str, sizes: &[usize]) -> ComplexSpec {
    spec(graph(name), sizes)
}

/// All connected simple graphs with `n` vertices, one per edge subset.
pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
            SimpleGraph::new(n, edges).unwrap()
        })
        .filter(SimpleGraph::is_connected)
        .collect()
}

fn closure(el: &CellElement) -> Vec<usize> {
    match *el {
        CellElement::Vertex(v) => vec![v],
        CellElement::Edge(u, v) => vec![u, v],
    }
}

/// Cell conditions checked straight from the definition.
pub fn valid_by_definition(spec: &ComplexSpec, c: &Cell) -> bool {
    let g = &spec.graph;
    let parts = c.parts();
    if parts.len() != spec.colors.colors() {
        return false;
    }
    let mut all: Vec<&CellElement> = Vec::new();
    for (part, &l) in parts.iter().zip(spec.colors.sizes()) {
        let distinct: BTreeSet<&CellElement> = part.iter().collect();
        if part.len() != l || distinct.len() != l {
            return false;
        }
        for el in part {
            let exists = match *el {
                CellElement::Vertex(v) => v < g.vertex_count(),
                CellElement::Edge(u, v) => g.edges().contains(&(u, v)),
            };
            if !exists {
                return false;
            }
        }
        for (a, x) in part.iter().enumerate() {
            for y in &part[a + 1..] {
                if closure(x).iter().any(|p| closure(y).contains(p)) {
                    return false;
                }
            }
        }
        all.extend(part.iter());
    }
    if spec.separation == Separation::AllRobots {
        for (a, x) in all.iter().enumerate() {
            for y in &all[a + 1..] {
                if closure(x).iter().any(|p| closure(y).contains(p)) {
                    return false;
                }
            }
        }
    }
    if spec.require_cover {
        for v in 0..g.vertex_count() {
            if !all.contains(&&CellElement::Vertex(v)) {
                return false;
            }
        }
    }
    true
}

fn subsets_of_size(elements: &[CellElement], size: usize) -> Vec<Vec<CellElement>> {
    let n = elements.len();
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|b| m >> b & 1 == 1).map(|b| elements[b]).collect())
        .collect()
}

/// Counts cells by dimension by testing every tuple of same-size subsets
/// of V ∪ E. Only for tiny complexes.
pub fn brute_force_f_vector(spec: &ComplexSpec) -> Vec<u128> {
    let g = &spec.graph;
    let elements: Vec<CellElement> = (0..g.vertex_count())
        .map(CellElement::Vertex)
        .chain(g.edges().iter().map(|&(u, v)| CellElement::Edge(u, v)))
        .collect();
    let choices: Vec<Vec<Vec<CellElement>>> =
        spec.colors.sizes().iter().map(|&l| subsets_of_size(&elements, l)).collect();
    let mut counts = vec![0u128; spec.colors.total() + 1];
    let mut idx = vec![0usize; choices.len()];
    if choices.iter().any(Vec::is_empty) {
        return vec![0];
    }
    loop {
        let c = Cell::new(idx.iter().zip(&choices).map(|(&i, ch)| ch[i].clone()).collect());
        if valid_by_definition(spec, &c) {
            counts[c.dim()] += 1;
        }
        let mut pos = 0;
        while pos < idx.len() {
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == idx.len() {
            break;
        }
    }
    let end = counts.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
    counts.truncate(end);
    counts
}

pub fn trimmed(v: &[u128]) -> &[u128] {
    let end = v.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
    &v[..end]
}

/// Colors on each vertex of a 0-cell.
pub fn profile(c: &Cell, n: usize) -> Vec<BTreeSet<usize>> {
    let mut occ = vec![BTreeSet::new(); n];
    for (i, part) in c.parts().iter().enumerate() {
        for el in part {
            if let CellElement::Vertex(v) = *el {
                occ[v].insert(i);
            }
        }
    }
    occ
}

/// Every intermediate 0-cell of a plan, start and end included.
pub fn replay(spec: &ComplexSpec, p: &MovePlan) -> Vec<Cell> {
    let mut states = vec![p.start.clone()];
    for &mv in &p.moves {
        let next = apply_move(spec, states.last().unwrap(), mv).expect("plan move is valid");
        states.push(next);
    }
    states
}

pub fn zero_cells(spec: &ComplexSpec) -> Vec<Cell> {
    spec.enumerate_cells(Some(0)).collect()
}

pub fn pick<'a, T, R: Rng>(rng: &mut R, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("non-empty")
}

/// Leapfrog occupancy bullets, plus the off-path check at every step.
pub fn check_leapfrog(spec: &ComplexSpec, p: &MovePlan, path: &[usize], k: usize) -> Result<(), String> {
    let n = spec.graph.vertex_count();
    let (z, x) = (path[0], *path.last().unwrap());
    let before = profile(&p.start, n);
    let after = profile(&p.end, n);
    let mut want_x = before[x].clone();
    want_x.insert(k);
    if after[x] != want_x {
        return Err(format!("x={x}: {:?} -> {:?}", before[x], after[x]));
    }
    if after[z].len() + 1 != before[z].len() {
        return Err(format!("z={z}: {:?} -> {:?}", before[z], after[z]));
    }
    for &v in &path[1..path.len() - 1] {
        if after[v].len() != before[v].len() {
            return Err(format!("interior {v} changed size"));
        }
    }
    for state in replay(spec, p) {
        let prof = profile(&state, n);
        for v in (0..n).filter(|v| !path.contains(v)) {
            if prof[v] != before[v] {
                return Err(format!("off-path vertex {v} changed"));
            }
        }
    }
    Ok(())
}

/// `z` trades `i` for `k`, `w` trades `k` for `i`, nothing else moves.
pub fn check_exchange(
    spec: &ComplexSpec,
    p: &MovePlan,
    (z, i): (usize, usize),
    (w, k): (usize, usize),
) -> Result<(), String> {
    let n = spec.graph.vertex_count();
    let before = profile(&p.start, n);
    let after = profile(&p.end, n);
    let mut want = before.clone();
    want[z].remove(&i);
    want[z].insert(k);
    want[w].remove(&k);
    want[w].insert(i);
    if after != want {
        return Err(format!("expected {want:?}, got {after:?}"));
    }
    Ok(())
}

pub struct LeapfrogCase {
    pub cell: Cell,
    pub path: Vec<usize>,
    pub k: usize,
}

pub struct SwapThirdCase {
    pub cell: Cell,
    pub path: Vec<usize>,
    pub i: usize,
    pub k: usize,
}

pub struct SwapCase {
    pub cell: Cell,
    pub x: usize,
    pub y: usize,
    pub i: usize,
    pub j: usize,
}

fn pick_set<R: Rng>(rng: &mut R, set: &BTreeSet<usize>) -> Option<usize> {
    let items: Vec<usize> = set.iter().copied().collect();
    items.choose(rng).copied()
}

pub fn sample_leapfrog<R: Rng>(rng: &mut R, spec: &ComplexSpec, cells: &[Cell]) -> Option<LeapfrogCase> {
    let n = spec.graph.vertex_count();
    let cell = pick(rng, cells).clone();
    let prof = profile(&cell, n);
    let zs: Vec<usize> = (0..n).filter(|&v| prof[v].len() >= 2).collect();
    let z = *zs.choose(rng)?;
    let k = pick_set(rng, &prof[z])?;
    let xs: Vec<usize> = (0..n).filter(|&v| !prof[v].contains(&k)).collect();
    let x = *xs.choose(rng)?;
    let path = spec.graph.shortest_path(z, x).ok()?.vertices().to_vec();
    Some(LeapfrogCase { cell, path, k })
}

pub fn sample_swap_third<R: Rng>(rng: &mut R, spec: &ComplexSpec, cells: &[Cell]) -> Option<SwapThirdCase> {
    let n = spec.graph.vertex_count();
    let cell = pick(rng, cells).clone();
    let prof = profile(&cell, n);
    let zs: Vec<usize> = (0..n).filter(|&v| prof[v].len() >= 2).collect();
    let z = *zs.choose(rng)?;
    let i = pick_set(rng, &prof[z])?;
    let options: Vec<(Vec<usize>, usize)> = (0..n)
        .filter(|&w| prof[w].len() == 1 && !prof[w].contains(&i))
        .filter_map(|w| {
            let k = *prof[w].iter().next()?;
            let path = spec.graph.shortest_path(z, w).ok()?.vertices().to_vec();
            let clear = path[..path.len() - 1].iter().all(|&v| !prof[v].contains(&k));
            clear.then_some((path, k))
        })
        .collect();
    let (path, k) = options.choose(rng)?.clone();
    Some(SwapThirdCase { cell, path, i, k })
}

pub fn sample_swap<R: Rng>(rng: &mut R, spec: &ComplexSpec, cells: &[Cell]) -> Option<SwapCase> {
    let n = spec.graph.vertex_count();
    let cell = pick(rng, cells).clone();
    let prof = profile(&cell, n);
    let x = rng.gen_range(0..n);
    let i = pick_set(rng, &prof[x])?;
    let options: Vec<(usize, usize)> = (0..n)
        .filter(|&y| y != x && !prof[y].contains(&i))
        .flat_map(|y| prof[y].iter().map(move |&j| (y, j)))
        .filter(|&(_, j)| !prof[x].contains(&j))
        .collect();
    let &(y, j) = options.choose(rng)?;
    Some(SwapCase { cell, x, y, i, j })
}
