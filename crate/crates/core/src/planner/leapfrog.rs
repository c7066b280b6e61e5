use super::{check_color, constructive_start, MovePlan, Runner};
use crate::complex::{Cell, ComplexSpec};
use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexPath};

/// Adds a `k`-colored robot to the last vertex `x` of `path` by relaying
/// robots forward from its first vertex `z`.
///
/// On success `x` gains `k`, `z` holds one robot fewer, interior vertices
/// keep their robot count and vertices off the path are untouched.
pub fn leapfrog(spec: &ComplexSpec, c: &Cell, path: &VertexPath, k: usize) -> Result<MovePlan> {
    let state = constructive_start(spec, c)?;
    check_color(&state, k)?;
    let p = path.vertices();
    if VertexPath::new(&spec.graph, p.to_vec()).is_err() {
        return Err(Error::Precondition("path is not a walk in the graph".into()));
    }
    check_simple(p)?;
    let (z, x) = (path.first(), path.last());
    if !state.available(z) {
        return Err(Error::Precondition(format!("start vertex {z} is not available")));
    }
    if !state.has(z, k) {
        return Err(Error::Precondition(format!("no robot of color {k} on start vertex {z}")));
    }
    if state.has(x, k) {
        return Err(Error::Precondition(format!("target vertex {x} already holds color {k}")));
    }
    let mut run = Runner::new(spec, state);
    leapfrog_along(&mut run, p, k)?;
    Ok(run.into_plan(c.clone()))
}

pub(crate) fn check_simple(p: &[Vertex]) -> Result<()> {
    if p.len() < 2 {
        return Err(Error::Precondition("path needs two distinct endpoints".into()));
    }
    let mut seen = p.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("path repeats a vertex".into()));
    }
    Ok(())
}

/// Expects `path[0]` available with `k`, and `k` missing on the last vertex.
pub(crate) fn leapfrog_along(run: &mut Runner<'_>, path: &[Vertex], k: usize) -> Result<()> {
    let last = path.len() - 1;
    if last == 1 {
        return run.step(k, path[0], path[1]);
    }
    // Nearest k-colored robot before the target; path[0] always qualifies.
    let j = (0..last)
        .rev()
        .find(|&j| run.state.has(path[j], k))
        .ok_or_else(|| Error::Internal("leapfrog lost its source robot".into()))?;
    if run.state.available(path[j]) {
        walk(run, &path[j..], k)?;
        if j > 0 {
            leapfrog_along(run, &path[..=j], k)?;
        }
    } else {
        // path[j] holds only k; give it a second robot before k leaves.
        let a = *run
            .state
            .colors(path[0])
            .iter()
            .find(|&&a| a != k)
            .ok_or_else(|| Error::Internal("source vertex is not available".into()))?;
        leapfrog_along(run, &path[..=j], a)?;
        walk(run, &path[j..], k)?;
    }
    Ok(())
}

/// Moves one `k` robot edge by edge along `path`.
fn walk(run: &mut Runner<'_>, path: &[Vertex], k: usize) -> Result<()> {
    path.windows(2).try_for_each(|w| run.step(k, w[0], w[1]))
}
