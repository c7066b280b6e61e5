use super::leapfrog::{check_simple, leapfrog_along};
use super::{
    check_color, check_planner_hypotheses, check_vertex, constructive_start, MovePlan, Runner,
    State,
};
use crate::complex::{Cell, ComplexSpec};
use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexPath};

/// Exchanges the `i` robot on the first vertex `z` of `path` with the lone
/// `k` robot on its last vertex `w`. No other vertex changes occupancy.
pub fn swap_third(
    spec: &ComplexSpec,
    c: &Cell,
    path: &VertexPath,
    i: usize,
    k: usize,
) -> Result<MovePlan> {
    let state = constructive_start(spec, c)?;
    check_color(&state, i)?;
    check_color(&state, k)?;
    let p = path.vertices();
    if VertexPath::new(&spec.graph, p.to_vec()).is_err() {
        return Err(Error::Precondition("path is not a walk in the graph".into()));
    }
    check_simple(p)?;
    let (z, w) = (path.first(), path.last());
    if i == k {
        return Err(Error::Precondition("the two colors must differ".into()));
    }
    if state.colors(w).len() != 1 || !state.has(w, k) {
        return Err(Error::Precondition(format!("vertex {w} must hold exactly color {k}")));
    }
    if !state.available(z) || !state.has(z, i) {
        return Err(Error::Precondition(format!("vertex {z} must be available and hold color {i}")));
    }
    if let Some(v) = p[..p.len() - 1].iter().find(|&&v| state.has(v, k)) {
        return Err(Error::Precondition(format!("path vertex {v} already holds color {k}")));
    }
    let mut run = Runner::new(spec, state);
    swap_third_along(&mut run, p, i, k)?;
    Ok(run.into_plan(c.clone()))
}

pub(crate) fn swap_third_along(run: &mut Runner<'_>, path: &[Vertex], i: usize, k: usize) -> Result<()> {
    let z = path[0];
    if path.len() == 2 {
        let w = path[1];
        run.step(i, z, w)?;
        return run.step(k, w, z);
    }
    let zt = path[1];
    if !run.state.has(zt, i) {
        run.step(i, z, zt)?;
        swap_third_along(run, &path[1..], i, k)?;
        run.step(k, zt, z)
    } else if !run.state.available(zt) {
        let j = smallest_other(&run.state, z, i)?;
        run.step(j, z, zt)?;
        swap_third_along(run, &path[1..], i, k)?;
        run.step(k, zt, z)?;
        run.step(i, z, zt)?;
        run.step(j, zt, z)
    } else {
        swap_third_along(run, &path[1..], i, k)?;
        run.step(k, zt, z)?;
        run.step(i, z, zt)
    }
}

/// Exchanges the `i` robot on `x` with the `j` robot on `y`; every other
/// vertex ends with the occupancy it started with.
pub fn swap_colors(
    spec: &ComplexSpec,
    c: &Cell,
    x: Vertex,
    y: Vertex,
    i: usize,
    j: usize,
) -> Result<MovePlan> {
    check_planner_hypotheses(spec)?;
    let state = constructive_start(spec, c)?;
    for v in [x, y] {
        check_vertex(&state, v)?;
    }
    for col in [i, j] {
        check_color(&state, col)?;
    }
    if x == y || i == j {
        return Err(Error::Precondition("need two distinct vertices and two distinct colors".into()));
    }
    if !state.has(x, i) || state.has(x, j) {
        return Err(Error::Precondition(format!("vertex {x} must hold color {i} but not {j}")));
    }
    if !state.has(y, j) || state.has(y, i) {
        return Err(Error::Precondition(format!("vertex {y} must hold color {j} but not {i}")));
    }
    let path = spec.graph.shortest_path(x, y)?;
    let mut run = Runner::new(spec, state);
    swap_colors_along(&mut run, path.vertices(), i, j)?;
    Ok(run.into_plan(c.clone()))
}

pub(crate) fn swap_colors_along(run: &mut Runner<'_>, path: &[Vertex], i: usize, j: usize) -> Result<()> {
    let x = path[0];
    if path.len() == 2 {
        return swap_adjacent(run, x, path[1], i, j);
    }
    let (xt, rest) = (path[1], &path[1..]);
    match (run.state.has(xt, i), run.state.has(xt, j)) {
        (true, false) => {
            swap_colors_along(run, rest, i, j)?;
            swap_adjacent(run, x, xt, i, j)
        }
        (false, true) => {
            swap_adjacent(run, x, xt, i, j)?;
            swap_colors_along(run, rest, i, j)
        }
        (true, true) => {
            run.step(j, xt, x)?;
            swap_colors_along(run, rest, i, j)?;
            run.step(i, x, xt)
        }
        (false, false) if !run.state.available(x) => {
            let k = *run
                .state
                .colors(xt)
                .first()
                .ok_or_else(|| Error::Internal(format!("vertex {xt} is uncovered")))?;
            swap_adjacent(run, x, xt, i, k)?;
            swap_colors_along(run, rest, i, j)?;
            swap_adjacent(run, x, xt, k, j)
        }
        (false, false) => {
            run.step(i, x, xt)?;
            swap_colors_along(run, rest, i, j)?;
            run.step(j, xt, x)
        }
    }
}

fn swap_adjacent(run: &mut Runner<'_>, x: Vertex, y: Vertex, i: usize, j: usize) -> Result<()> {
    if run.state.available(x) {
        run.step(i, x, y)?;
        run.step(j, y, x)
    } else if run.state.available(y) {
        run.step(j, y, x)?;
        run.step(i, x, y)
    } else if let Some((k, z)) = borrowable(&run.state, i, j) {
        swap_with_borrowed(run, x, y, i, j, k, z)
    } else {
        swap_via_third_color(run, x, y, i, j)
    }
}

/// Smallest color `k` outside `{i, j}` sitting on an available vertex, with
/// the smallest such vertex.
fn borrowable(s: &State, i: usize, j: usize) -> Option<(usize, Vertex)> {
    (0..s.r).filter(|&k| k != i && k != j).find_map(|k| {
        (0..s.vertex_count())
            .find(|&z| s.available(z) && s.has(z, k))
            .map(|z| (k, z))
    })
}

/// Neither `x` nor `y` is available: bring `k` from `z` to whichever of the
/// two is nearer, swap, then replay the relay backwards. The shortest path
/// to the nearer one cannot pass through the other, so the swap leaves every
/// vertex the relay touched, except its target, as the relay left it.
fn swap_with_borrowed(
    run: &mut Runner<'_>,
    x: Vertex,
    y: Vertex,
    i: usize,
    j: usize,
    k: usize,
    z: Vertex,
) -> Result<()> {
    let g = &run.spec.graph;
    let dist = g.distances_from(z);
    let t = if dist[x] <= dist[y] { x } else { y };
    let path = g.shortest_path(z, t)?;
    let mark = run.moves.len();
    leapfrog_along(run, path.vertices(), k)?;
    let relay = run.moves[mark..].to_vec();
    if t == x {
        run.step(i, x, y)?;
        run.step(j, y, x)?;
    } else {
        run.step(j, y, x)?;
        run.step(i, x, y)?;
    }
    run.undo(&relay)
}

/// Every available vertex holds exactly `{i, j}`. A third color is first
/// swapped onto an available vertex so the borrowing case applies.
fn swap_via_third_color(run: &mut Runner<'_>, x: Vertex, y: Vertex, i: usize, j: usize) -> Result<()> {
    let s = &run.state;
    let z = (0..s.vertex_count())
        .find(|&v| s.available(v))
        .ok_or_else(|| Error::Internal("no available vertex".into()))?;
    let dist = run.spec.graph.distances_from(z);
    let (w, k) = (0..s.vertex_count())
        .filter_map(|v| {
            let k = s.colors(v).iter().copied().find(|&k| k != i && k != j)?;
            Some((dist[v]?, v, k))
        })
        .min()
        .map(|(_, v, k)| (v, k))
        .ok_or_else(|| Error::Internal("no third color on the graph".into()))?;
    let path = run.spec.graph.shortest_path(z, w)?;

    let target = swapped(s, x, y, i, j);
    swap_third_along(run, path.vertices(), i, k)?;
    let (k2, z2) = borrowable(&run.state, i, j)
        .ok_or_else(|| Error::Internal("third color did not become borrowable".into()))?;
    swap_with_borrowed(run, x, y, i, j, k2, z2)?;

    // The state now equals what the same swap_third would produce from the
    // target, so its reverse leads to the target.
    let mut from_target = Runner::new(run.spec, target);
    swap_third_along(&mut from_target, path.vertices(), i, k)?;
    run.undo(&from_target.moves)
}

fn swapped(s: &State, x: Vertex, y: Vertex, i: usize, j: usize) -> State {
    let mut t = s.clone();
    t.occ[x].remove(&i);
    t.occ[x].insert(j);
    t.occ[y].remove(&j);
    t.occ[y].insert(i);
    t
}

fn smallest_other(s: &State, v: Vertex, not: usize) -> Result<usize> {
    s.colors(v)
        .iter()
        .copied()
        .find(|&c| c != not)
        .ok_or_else(|| Error::Internal(format!("vertex {v} is not available")))
}
