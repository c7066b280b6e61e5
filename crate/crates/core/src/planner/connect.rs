use super::leapfrog::leapfrog_along;
use super::swap::swap_colors_along;
use super::{check_planner_hypotheses, MovePlan, Runner, State};
use crate::complex::{Cell, ComplexSpec};
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// Plan between two 0-cells with the same number of robots on every vertex,
/// built from color swaps only.
pub fn same_type_plan(spec: &ComplexSpec, c: &Cell, c2: &Cell) -> Result<MovePlan> {
    check_planner_hypotheses(spec)?;
    let (s, t) = (State::from_cell(spec, c)?, State::from_cell(spec, c2)?);
    if let Some(v) = (0..s.vertex_count()).find(|&v| s.colors(v).len() != t.colors(v).len()) {
        return Err(Error::Precondition(format!(
            "cells differ in type at vertex {v} ({} vs {} robots)",
            s.colors(v).len(),
            t.colors(v).len()
        )));
    }
    let mut run = Runner::new(spec, s);
    resolve_same_type(&mut run, &t)?;
    Ok(run.into_plan(c.clone()))
}

/// Repeatedly follows extra -> missing colors until a vertex repeats, then
/// rotates that cycle with swaps. Each round fixes at least one misplaced
/// robot, so the loop terminates.
fn resolve_same_type(run: &mut Runner<'_>, target: &State) -> Result<()> {
    while run.state != *target {
        let cycle = find_cycle(&run.state, target)?;
        let p = cycle.len();
        let (c0, _) = cycle[0];
        let vertex = |t: usize| cycle[t % p].1;
        let t = (2..=p)
            .find(|&t| run.state.has(vertex(t), c0))
            .ok_or_else(|| Error::Internal("cycle color vanished".into()))?;
        for q in (1..t).rev() {
            let (cq, _) = cycle[q];
            let path = run.spec.graph.shortest_path(vertex(q + 1), vertex(q))?;
            swap_colors_along(run, path.vertices(), c0, cq)?;
        }
    }
    Ok(())
}

/// `(color, vertex)` pairs; each color is extra at its vertex and missing at
/// the next vertex of the cycle.
fn find_cycle(s: &State, target: &State) -> Result<Vec<(usize, Vertex)>> {
    let extra = |v: Vertex| s.colors(v).difference(target.colors(v)).next().copied();
    let missing_at = |color: usize| (0..s.vertex_count()).find(|&u| target.has(u, color) && !s.has(u, color));

    let v0 = (0..s.vertex_count())
        .find(|&v| extra(v).is_some())
        .ok_or_else(|| Error::Internal("states differ without extra robots".into()))?;
    let mut chain: Vec<(usize, Vertex)> = Vec::new();
    let mut v = v0;
    loop {
        if let Some(q) = chain.iter().position(|&(_, u)| u == v) {
            return Ok(chain.split_off(q));
        }
        let color = extra(v).ok_or_else(|| Error::Internal(format!("no extra color on {v}")))?;
        chain.push((color, v));
        v = missing_at(color).ok_or_else(|| Error::Internal(format!("color {color} is never missing")))?;
    }
}

/// Constructive plan between any two 0-cells: balance the robot counts from
/// both ends with leapfrogs, then permute colors.
pub fn plan(spec: &ComplexSpec, c: &Cell, c2: &Cell) -> Result<MovePlan> {
    check_planner_hypotheses(spec)?;
    let mut fwd = Runner::new(spec, State::from_cell(spec, c)?);
    let mut back = Runner::new(spec, State::from_cell(spec, c2)?);
    let n = spec.graph.vertex_count();
    loop {
        let d = |v: Vertex| fwd.state.colors(v).len() as i64 - back.state.colors(v).len() as i64;
        let Some(x) = (0..n).find(|&v| d(v) > 0) else { break };
        let y = (0..n)
            .find(|&v| d(v) < 0)
            .ok_or_else(|| Error::Internal("robot counts do not balance".into()))?;
        if fwd.state.colors(x).len() > fwd.state.colors(y).len() {
            let k = first_missing(&fwd.state, x, y)?;
            let path = spec.graph.shortest_path(x, y)?;
            leapfrog_along(&mut fwd, path.vertices(), k)?;
        } else {
            let k = first_missing(&back.state, y, x)?;
            let path = spec.graph.shortest_path(y, x)?;
            leapfrog_along(&mut back, path.vertices(), k)?;
        }
    }
    let target = back.state.clone();
    resolve_same_type(&mut fwd, &target)?;
    fwd.undo(&back.moves)?;
    let p = fwd.into_plan(c.clone());
    if p.end != *c2 {
        return Err(Error::Internal("constructive plan missed its target".into()));
    }
    Ok(p)
}

/// Smallest color on `from` that `to` lacks.
fn first_missing(s: &State, from: Vertex, to: Vertex) -> Result<usize> {
    s.colors(from)
        .difference(s.colors(to))
        .next()
        .copied()
        .ok_or_else(|| Error::Internal(format!("no color on {from} is missing from {to}")))
}
