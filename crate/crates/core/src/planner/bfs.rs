use std::collections::{HashMap, VecDeque};

use super::{Move, MovePlan, State};
use crate::complex::{Cell, ComplexSpec};
use crate::error::Result;

/// Shortest plan by breadth-first search over 0-cells, or `None` when `c2`
/// lies in another component. Moves are tried in `(color, from, to)` order,
/// so the result is deterministic.
pub fn plan_bfs(spec: &ComplexSpec, c: &Cell, c2: &Cell) -> Result<Option<MovePlan>> {
    let start = State::from_cell(spec, c)?;
    let goal = State::from_cell(spec, c2)?;
    let mut parent: HashMap<State, Option<(State, Move)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);

    while let Some(s) = queue.pop_front() {
        if s == goal {
            let mut moves = Vec::new();
            let mut cur = &s;
            while let Some(Some((prev, mv))) = parent.get(cur) {
                moves.push(*mv);
                cur = prev;
            }
            moves.reverse();
            return Ok(Some(MovePlan { start: c.clone(), moves, end: c2.clone() }));
        }
        for mv in moves_from(spec, &s) {
            let mut next = s.clone();
            next.apply(mv);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((s.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

fn moves_from<'a>(spec: &'a ComplexSpec, s: &'a State) -> impl Iterator<Item = Move> + 'a {
    (0..s.r).flat_map(move |i| {
        (0..s.vertex_count())
            .filter(move |&u| s.has(u, i))
            .flat_map(move |u| spec.graph.neighbors(u).iter().map(move |&v| Move::new(i, u, v)))
            .filter(move |&mv| s.move_error(spec, mv).is_none())
    })
}
