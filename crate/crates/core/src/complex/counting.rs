//! Closed-form cell counts for the `(2,1,...,1)` and `(n-1,...,n-1)` families,
//! and a tuple-filtering oracle for the latter.

use super::FVector;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

fn mul(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn pow(base: u128, exp: usize, what: &'static str) -> Result<u128> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow(what))?;
    base.checked_pow(exp).ok_or(Error::Overflow(what))
}

fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| mul(acc, k, "factorial"))
}

fn binomial(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for j in 0..k as u128 {
        // acc * (n - j) is divisible by j + 1 at every step.
        acc = mul(acc, n as u128 - j, "binomial")? / (j + 1);
    }
    Ok(acc)
}

fn exact_div(num: u128, den: u128, what: &'static str) -> Result<u128> {
    if !num.is_multiple_of(den) {
        return Err(Error::Internal(format!("{what} is not integral")));
    }
    Ok(num / den)
}

/// `(f0, f1)` for `r = (2,1,...,1)` with `n` colors.
pub fn count_formula_two_one(g: &SimpleGraph) -> Result<(u128, u128)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::OutOfRange(format!("need n >= 2, got {n}")));
    }
    let (nn, m) = (n as u128, g.edge_count() as u128);
    let f0 = mul(factorial(n)?, nn * nn + nn - 2, "0-cell count")?;
    let f1 = mul(mul(m, factorial(n - 1)?, "1-cell count")?, nn * nn + nn - 4, "1-cell count")?;
    Ok((exact_div(f0, 4, "0-cell count")?, exact_div(f1, 2, "1-cell count")?))
}

/// `L = f1 - f0 + 1` for `r = (2,1,...,1)` on a connected graph.
pub fn wedge_count(g: &SimpleGraph) -> Result<i128> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (f0, f1) = count_formula_two_one(g)?;
    let to_i = |x: u128| i128::try_from(x).map_err(|_| Error::Overflow("wedge count"));
    Ok(to_i(f1)? - to_i(f0)? + 1)
}

fn degree_power_sum(g: &SimpleGraph, i: usize) -> Result<u128> {
    (0..g.vertex_count()).try_fold(0u128, |acc, v| {
        acc.checked_add(pow(g.degree(v) as u128, i, "degree power sum")?)
            .ok_or(Error::Overflow("degree power sum"))
    })
}

/// F-vector of length `r + 1` for the color vector `(n-1,...,n-1)` with `r` colors.
pub fn count_formula_uniform(g: &SimpleGraph, r: usize) -> Result<FVector> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("need r >= 2, got {r}")));
    }
    let (n, m) = (g.vertex_count() as u128, g.edge_count() as u128);
    let mut counts = Vec::with_capacity(r + 1);
    for i in 0..r {
        let tuples = mul(pow(m, i, "uniform count")?, pow(n, r - i, "uniform count")?, "uniform count")?;
        let bad = degree_power_sum(g, i)?;
        let valid = tuples
            .checked_sub(bad)
            .ok_or_else(|| Error::Internal("more invalid tuples than tuples".into()))?;
        counts.push(mul(binomial(r, i)?, valid, "uniform count")?);
    }
    let top = pow(m, r, "uniform count")?
        .checked_add(m)
        .and_then(|x| x.checked_sub(degree_power_sum(g, r).ok()?))
        .ok_or(Error::Overflow("uniform count"))?;
    counts.push(top);
    Ok(FVector::new(counts))
}

/// Counts `r`-tuples with exactly `i` edge components and `r - i` vertex
/// components, dropping the invalid ones, by walking every tuple.
///
/// A tuple is invalid when all vertex components are one vertex `v` and every
/// edge component touches `v`; with no vertex components, when all edges
/// share an endpoint.
pub fn count_via_edge_tuples(g: &SimpleGraph, r: usize, i: usize) -> Result<u128> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("need r >= 2, got {r}")));
    }
    if i > r {
        return Err(Error::OutOfRange(format!("need i <= r, got i = {i}, r = {r}")));
    }
    if r >= usize::BITS as usize {
        return Err(Error::OutOfRange(format!("r = {r} is too large")));
    }
    let n = g.vertex_count();
    let edges = g.edges();

    let mut count = 0u128;
    let mut tuple = vec![0usize; r];
    for mask in 0usize..(1 << r) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let is_edge = |pos: usize| mask >> pos & 1 == 1;
        let range = |pos: usize| if is_edge(pos) { edges.len() } else { n };
        if (0..r).any(|p| range(p) == 0) {
            continue;
        }
        tuple.iter_mut().for_each(|t| *t = 0);
        loop {
            if tuple_is_valid(g, &tuple, is_edge, n) {
                count += 1;
            }
            // Odometer increment.
            let mut pos = 0;
            while pos < r {
                tuple[pos] += 1;
                if tuple[pos] < range(pos) {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
            if pos == r {
                break;
            }
        }
    }
    Ok(count)
}

fn tuple_is_valid(g: &SimpleGraph, tuple: &[usize], is_edge: impl Fn(usize) -> bool, n: usize) -> bool {
    let edges = g.edges();
    let mut common: Option<usize> = None;
    let mut has_vertex = false;
    for (pos, &t) in tuple.iter().enumerate() {
        if !is_edge(pos) {
            match common {
                Some(v) if v != t => return true,
                _ => common = Some(t),
            }
            has_vertex = true;
        }
    }
    let incident = |v: usize| {
        tuple
            .iter()
            .enumerate()
            .filter(|&(pos, _)| is_edge(pos))
            .all(|(_, &e)| edges[e].0 == v || edges[e].1 == v)
    };
    if has_vertex {
        !incident(common.expect("vertex component present"))
    } else {
        !(0..n).any(incident)
    }
}
