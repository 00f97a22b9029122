//! Exact minimization of `f` over `T_2`-like graphs with `ex(n) + q` edges.
//!
//! A cell is a part-size offset `a` (parts `⌈n/2⌉ + a` and `⌊n/2⌋ − a`) and
//! a split `b1 + b2` of the edges that do not fit between the parts. Each
//! part uses its near-regular degree sequence, which minimizes `Σ C(d, 2)`
//! for a fixed sum.
//!
//! `f` equals the bowtie count only when both parts are triangle-free, so
//! `min_value` is taken over cells whose parts the triangle-free builder can
//! realize. The unrestricted minimum is kept as `relaxed_min_value`.

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{build_hstar, ex_bowtie, part_realizable, PartitionSpec};
use crate::counting::{bowties_containing_edge, bowties_created_by, Count};
use crate::error::{Error, Result};
use crate::formulas::f_near_regular;
use crate::graph::Graph;

pub const DEFAULT_MAX_OFFSET: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub q: usize,
    pub min_value: Count,
    /// Minimum over all cells, realizable or not.
    pub relaxed_min_value: Count,
    pub witness: PartitionSpec,
    pub a: i64,
    pub b1: usize,
    pub b2: usize,
    pub realizable: bool,
    pub cells_examined: u64,
}

#[derive(Clone, Copy)]
struct Cell {
    a: i64,
    v1: usize,
    v2: usize,
    b1: usize,
    b2: usize,
}

impl Cell {
    fn key(&self, value: Count) -> (Count, u64, i64, usize) {
        (value, self.a.unsigned_abs(), self.a, self.b1)
    }
}

fn cells(n: usize, q: usize, max_offset: usize) -> Result<Vec<Cell>> {
    let total = ex_bowtie(n)? + q as Count;
    let c2 = |v: usize| v * v.saturating_sub(1) / 2;
    if total > c2(n) as Count {
        return Err(Error::Infeasible(format!(
            "{total} edges do not fit on {n} vertices"
        )));
    }
    let mut out = Vec::new();
    let mo = max_offset as i64;
    for a in -mo..=mo {
        let v1 = n.div_ceil(2) as i64 + a;
        let v2 = (n / 2) as i64 - a;
        if v1 < 0 || v2 < 0 {
            continue;
        }
        let (v1, v2) = (v1 as usize, v2 as usize);
        let Some(bad) = total.checked_sub((v1 * v2) as Count) else {
            continue;
        };
        let bad = bad as usize;
        if bad > c2(v1) + c2(v2) {
            continue;
        }
        for b1 in bad.saturating_sub(c2(v2))..=bad.min(c2(v1)) {
            out.push(Cell { a, v1, v2, b1, b2: bad - b1 });
        }
    }
    if out.is_empty() {
        return Err(Error::Infeasible(format!(
            "no part sizes with |a| <= {max_offset} admit ex(n) + {q} edges for n = {n}"
        )));
    }
    Ok(out)
}

/// Minimum of `f` over offsets `|a| <= max_offset` and all splits, ties broken
/// by smallest `|a|`, then smallest `a`, then smallest `b1`.
pub fn minimize_f(n: usize, q: usize, max_offset: usize) -> Result<SearchResult> {
    let cells = cells(n, q, max_offset)?;
    let evaluated: Vec<Option<(Cell, Count, bool)>> = cells
        .par_iter()
        .map(|c| {
            let value = f_near_regular(c.v1, c.v2, c.b1, c.b2).ok()?;
            let ok = part_realizable(c.v1, c.b1) && part_realizable(c.v2, c.b2);
            Some((*c, value, ok))
        })
        .collect();
    let best_by = |only_realizable: bool| {
        evaluated
            .iter()
            .flatten()
            .filter(|(_, _, ok)| *ok || !only_realizable)
            .min_by_key(|(c, v, _)| c.key(*v))
            .copied()
    };
    let relaxed = best_by(false).ok_or_else(|| {
        Error::Infeasible(format!("f is not defined on any cell for n = {n}, q = {q}"))
    })?;
    let (cell, value, realizable) = best_by(true).unwrap_or(relaxed);
    Ok(SearchResult {
        n,
        q,
        min_value: value,
        relaxed_min_value: relaxed.1,
        witness: PartitionSpec::near_regular(cell.v1, cell.v2, cell.b1, cell.b2)?,
        a: cell.a,
        b1: cell.b1,
        b2: cell.b2,
        realizable,
        cells_examined: cells.len() as u64,
    })
}

/// The `H*` graph behind a search result.
pub fn realize_witness(result: &SearchResult) -> Result<Graph> {
    build_hstar(&result.witness)
}

/// Moves one edge at a time (delete an edge, insert a non-edge) while that
/// strictly lowers the bowtie count. Candidates are scanned in lexicographic
/// order and the first improving move is applied; `budget` bounds the
/// number of applied moves.
pub fn local_search_refine(g: &Graph, budget: usize) -> Result<Graph> {
    let mut g = g.clone();
    let n = g.n();
    for _ in 0..budget {
        let mut moved = None;
        'scan: for (x, y) in g.edges() {
            let loss = bowties_containing_edge(&g, x, y)?;
            if loss == 0 {
                continue;
            }
            let h = g.without_edge(x, y)?;
            for u in 0..n {
                for v in u + 1..n {
                    if h.has_edge(u, v) || (u, v) == (x, y) {
                        continue;
                    }
                    if bowties_created_by(&h, u, v)? < loss {
                        moved = Some(h.with_edge(u, v)?);
                        break 'scan;
                    }
                }
            }
        }
        match moved {
            Some(next) => g = next,
            None => break,
        }
    }
    Ok(g)
}
