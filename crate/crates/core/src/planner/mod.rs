//! Motion planning between 0-cells by elementary single-edge moves.

mod bfs;
mod leapfrog;
mod swap;
mod connect;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::complex::{Cell, CellElement, ComplexSpec, Separation};
use crate::error::{Error, Result};
use crate::graph::Vertex;

pub use bfs::plan_bfs;
pub use leapfrog::leapfrog;
pub use swap::{swap_colors, swap_third};
pub use connect::{plan, same_type_plan};

/// Robot of color `color` travels the edge `from -> to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub color: usize,
    pub from: Vertex,
    pub to: Vertex,
}

impl Move {
    pub fn new(color: usize, from: Vertex, to: Vertex) -> Self {
        Move { color, from, to }
    }

    pub fn reversed(self) -> Self {
        Move { color: self.color, from: self.to, to: self.from }
    }
}

/// `color from to`, the line format of plan files.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.color, self.from, self.to)
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        let nums = fields
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>();
        match nums.as_deref() {
            Ok([c, u, v]) => Ok(Move::new(*c, *u, *v)),
            _ => Err(Error::InvalidMove(format!("{s:?}: expected `color from to`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePlan {
    pub start: Cell,
    pub moves: Vec<Move>,
    pub end: Cell,
}

impl MovePlan {
    /// The same path walked backwards.
    pub fn reversed(&self) -> MovePlan {
        MovePlan {
            start: self.end.clone(),
            moves: self.moves.iter().rev().map(|m| m.reversed()).collect(),
            end: self.start.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Start cell, one move per line, then `# end: <cell>`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.start);
        for m in &self.moves {
            s.push_str(&format!("{m}\n"));
        }
        s.push_str(&format!("# end: {}\n", self.end));
        s
    }
}

/// A parsed plan file. The declared end is optional in the file format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanFile {
    pub start: Cell,
    pub moves: Vec<Move>,
    pub end: Option<Cell>,
}

impl PlanFile {
    pub fn parse(text: &str) -> Result<Self> {
        let at = |line: usize| move |e: Error| Error::Malformed { line, message: e.to_string() };
        let mut start = None;
        let mut moves = Vec::new();
        let mut end = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if let Some(comment) = body.strip_prefix('#') {
                if let Some(cell) = comment.trim().strip_prefix("end:") {
                    end = Some(cell.parse::<Cell>().map_err(at(line))?);
                }
                continue;
            }
            if body.is_empty() {
                continue;
            }
            if start.is_none() {
                start = Some(body.parse::<Cell>().map_err(at(line))?);
            } else {
                moves.push(body.parse::<Move>().map_err(at(line))?);
            }
        }
        let start = start.ok_or(Error::Malformed { line: 1, message: "missing start cell".into() })?;
        Ok(PlanFile { start, moves, end })
    }

    pub fn into_plan(self, end: Cell) -> MovePlan {
        MovePlan { start: self.start, moves: self.moves, end }
    }
}

/// Why a plan failed to replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanFault {
    InvalidStart(String),
    /// 0-based position of the first illegal move.
    InvalidMove { index: usize, reason: String },
    EndMismatch { reached: Cell },
}

impl PlanFault {
    /// Failing step counted with the start cell as step 0, move `k` as step
    /// `k + 1` and the end comparison last.
    pub fn step(&self, plan: &MovePlan) -> usize {
        match self {
            PlanFault::InvalidStart(_) => 0,
            PlanFault::InvalidMove { index, .. } => index + 1,
            PlanFault::EndMismatch { .. } => plan.moves.len() + 1,
        }
    }
}

impl fmt::Display for PlanFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanFault::InvalidStart(why) => write!(f, "invalid start cell: {why}"),
            PlanFault::InvalidMove { index, reason } => write!(f, "move {index} is invalid: {reason}"),
            PlanFault::EndMismatch { reached } => write!(f, "replay ends at {reached}"),
        }
    }
}

/// Occupancy view of a 0-cell: the set of colors on each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct State {
    occ: Vec<BTreeSet<usize>>,
    r: usize,
}

impl State {
    pub(crate) fn from_cell(spec: &ComplexSpec, c: &Cell) -> Result<Self> {
        spec.check_cell(c)?;
        if c.dim() != 0 {
            return Err(Error::WrongDimension { expected: 0, actual: c.dim() });
        }
        let mut occ = vec![BTreeSet::new(); spec.graph.vertex_count()];
        for (i, part) in c.parts().iter().enumerate() {
            for el in part {
                if let CellElement::Vertex(v) = *el {
                    occ[v].insert(i);
                }
            }
        }
        Ok(State { occ, r: c.colors() })
    }

    pub(crate) fn to_cell(&self) -> Cell {
        let mut parts = vec![Vec::new(); self.r];
        for (v, colors) in self.occ.iter().enumerate() {
            for &i in colors {
                parts[i].push(v);
            }
        }
        Cell::from_vertex_sets(parts)
    }

    pub(crate) fn colors(&self, v: Vertex) -> &BTreeSet<usize> {
        &self.occ[v]
    }

    pub(crate) fn has(&self, v: Vertex, i: usize) -> bool {
        self.occ[v].contains(&i)
    }

    pub(crate) fn available(&self, v: Vertex) -> bool {
        self.occ[v].len() >= 2
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.occ.len()
    }

    pub(crate) fn move_error(&self, spec: &ComplexSpec, mv: Move) -> Option<String> {
        let n = self.occ.len();
        if mv.color >= self.r || mv.from >= n || mv.to >= n {
            return Some(format!("{mv} is out of range"));
        }
        if !spec.graph.has_edge(mv.from, mv.to) {
            return Some(format!("({},{}) is not an edge", mv.from, mv.to));
        }
        if !self.has(mv.from, mv.color) {
            return Some(format!("no robot of color {} on {}", mv.color, mv.from));
        }
        if self.has(mv.to, mv.color) {
            return Some(format!("{} already holds color {}", mv.to, mv.color));
        }
        if spec.require_cover && !self.available(mv.from) {
            return Some(format!("leaving {} would uncover it", mv.from));
        }
        if spec.separation == Separation::AllRobots
            && (self.occ[mv.from].len() > 1 || !self.occ[mv.to].is_empty())
        {
            return Some(format!("{} or {} is shared with another robot", mv.from, mv.to));
        }
        None
    }

    /// Applies a move already known to be valid.
    pub(crate) fn apply(&mut self, mv: Move) {
        self.occ[mv.from].remove(&mv.color);
        self.occ[mv.to].insert(mv.color);
    }
}

/// A state plus the moves that produced it. Every step is checked; a failed
/// check means a planning routine broke its own invariants.
pub(crate) struct Runner<'a> {
    pub(crate) spec: &'a ComplexSpec,
    pub(crate) state: State,
    pub(crate) moves: Vec<Move>,
}

impl<'a> Runner<'a> {
    pub(crate) fn new(spec: &'a ComplexSpec, state: State) -> Self {
        Runner { spec, state, moves: Vec::new() }
    }

    pub(crate) fn step(&mut self, color: usize, from: Vertex, to: Vertex) -> Result<()> {
        self.push(Move::new(color, from, to))
    }

    pub(crate) fn push(&mut self, mv: Move) -> Result<()> {
        if let Some(why) = self.state.move_error(self.spec, mv) {
            return Err(Error::Internal(format!("planned move {mv} is invalid: {why}")));
        }
        self.state.apply(mv);
        self.moves.push(mv);
        Ok(())
    }

    /// Replays `moves` backwards, each one reversed.
    pub(crate) fn undo(&mut self, moves: &[Move]) -> Result<()> {
        moves.iter().rev().try_for_each(|m| self.push(m.reversed()))
    }

    pub(crate) fn into_plan(self, start: Cell) -> MovePlan {
        MovePlan { start, end: self.state.to_cell(), moves: self.moves }
    }
}

pub fn is_valid_move(spec: &ComplexSpec, c: &Cell, mv: Move) -> bool {
    State::from_cell(spec, c).is_ok_and(|s| s.move_error(spec, mv).is_none())
}

pub fn apply_move(spec: &ComplexSpec, c: &Cell, mv: Move) -> Result<Cell> {
    let mut s = State::from_cell(spec, c)?;
    if let Some(why) = s.move_error(spec, mv) {
        return Err(Error::InvalidMove(format!("{mv}: {why}")));
    }
    s.apply(mv);
    Ok(s.to_cell())
}

/// Moves each robot on an edge onto the smaller endpoint.
pub fn snap(spec: &ComplexSpec, c: &Cell) -> Result<Cell> {
    spec.check_cell(c)?;
    let parts = c
        .parts()
        .iter()
        .map(|part| {
            part.iter()
                .map(|el| match *el {
                    CellElement::Edge(a, _) => CellElement::Vertex(a),
                    v => v,
                })
                .collect()
        })
        .collect();
    Ok(Cell::new(parts))
}

pub fn verify_plan(spec: &ComplexSpec, p: &MovePlan) -> std::result::Result<(), PlanFault> {
    let mut s = State::from_cell(spec, &p.start).map_err(|e| PlanFault::InvalidStart(e.to_string()))?;
    for (index, &mv) in p.moves.iter().enumerate() {
        if let Some(reason) = s.move_error(spec, mv) {
            return Err(PlanFault::InvalidMove { index, reason });
        }
        s.apply(mv);
    }
    let reached = s.to_cell();
    if reached != p.end {
        return Err(PlanFault::EndMismatch { reached });
    }
    Ok(())
}

/// Shared input checks of the constructive routines.
pub(crate) fn constructive_start(spec: &ComplexSpec, c: &Cell) -> Result<State> {
    if !spec.is_standard() {
        return Err(Error::Precondition(
            "constructive planning needs coverage and same-color separation only".into(),
        ));
    }
    State::from_cell(spec, c)
}

pub(crate) fn check_vertex(s: &State, v: Vertex) -> Result<()> {
    if v >= s.vertex_count() {
        return Err(Error::OutOfRange(format!("vertex {v}")));
    }
    Ok(())
}

pub(crate) fn check_color(s: &State, i: usize) -> Result<()> {
    if i >= s.r {
        return Err(Error::OutOfRange(format!("color {i} (there are {} colors)", s.r)));
    }
    Ok(())
}

/// Connected graph, at least three colors and a non-trivial color vector.
pub(crate) fn check_planner_hypotheses(spec: &ComplexSpec) -> Result<()> {
    if spec.colors.colors() < 3 {
        return Err(Error::HypothesisNotMet(format!(
            "{} colors; constructive planning needs at least 3 (use plan_bfs)",
            spec.colors.colors()
        )));
    }
    if !spec.is_nontrivial() {
        return Err(Error::HypothesisNotMet(format!(
            "color vector {} is trivial for {} vertices (use plan_bfs)",
            spec.colors,
            spec.graph.vertex_count()
        )));
    }
    if !spec.graph.is_connected() {
        return Err(Error::HypothesisNotMet("the graph is disconnected (use plan_bfs)".into()));
    }
    if !spec.is_standard() {
        return Err(Error::HypothesisNotMet(
            "coverage must be on and separation per color (use plan_bfs)".into(),
        ));
    }
    Ok(())
}
