//! Exact triangle and bowtie counts.
//!
//! A bowtie is two triangles sharing exactly one vertex, the centre. Every
//! copy has a unique centre, so the number of copies centred at `v` is the
//! number of pairs of triangles through `v` minus the pairs that also share
//! a second vertex `u`, i.e. that share the edge `vu`:
//!
//! ```text
//! bowties = Σ_v [ C(t(v), 2) − Σ_{u ∈ N(v)} C(t(uv), 2) ]
//!         = Σ_v C(t(v), 2) − 2 Σ_{uv ∈ E} C(t(uv), 2)
//! ```
//!
//! where `t(v)` and `t(uv)` are the triangles through a vertex and an edge.
//! All totals are `u128` with checked arithmetic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Wide counter used for subgraph counts and formula values.
pub type Count = u128;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub triangles: Count,
    pub bowties: Count,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_vertex_triangles: Option<Vec<u64>>,
    /// Serialized as a list of `[u, v, t(uv)]`.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "edge_tallies")]
    pub per_edge_triangles: Option<BTreeMap<(usize, usize), u64>>,
}

fn edge_tallies<S: serde::Serializer>(
    map: &Option<BTreeMap<(usize, usize), u64>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let map = map.as_ref().expect("skipped when absent");
    let mut seq = s.serialize_seq(Some(map.len()))?;
    for (&(u, v), &t) in map {
        seq.serialize_element(&(u, v, t))?;
    }
    seq.end()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CountMethod {
    /// Per-vertex identity over triangle tallies.
    #[default]
    Identity,
    /// Enumerate all 5-vertex subsets. Slow; kept as a cross-check.
    Naive,
}

#[inline]
pub(crate) fn choose2(x: u128) -> Count {
    x * x.saturating_sub(1) / 2
}

#[inline]
fn checked_choose2(x: u128, what: &'static str) -> Result<Count> {
    x.checked_mul(x.saturating_sub(1))
        .map(|p| p / 2)
        .ok_or(Error::Overflow(what))
}

struct Tallies {
    per_vertex: Vec<u64>,
    /// `(u, v, t(uv))` for every edge, `u < v`, lexicographic.
    per_edge: Vec<(usize, usize, u64)>,
}

fn tallies(g: &Graph) -> Tallies {
    let rows: Vec<Vec<(usize, usize, u64)>> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            g.neighbors(u)
                .filter(|&v| v > u)
                .map(|v| (u, v, g.common_neighbors(u, v) as u64))
                .collect()
        })
        .collect();
    let per_edge: Vec<_> = rows.into_iter().flatten().collect();
    let mut twice = vec![0u64; g.n()];
    for &(u, v, t) in &per_edge {
        twice[u] += t;
        twice[v] += t;
    }
    Tallies {
        per_vertex: twice.into_iter().map(|t| t / 2).collect(),
        per_edge,
    }
}

fn bowties_from(t: &Tallies) -> Result<Count> {
    let centred = t
        .per_vertex
        .par_iter()
        .map(|&x| checked_choose2(x as u128, "bowtie count"))
        .try_reduce(|| 0u128, |a, b| a.checked_add(b).ok_or(Error::Overflow("bowtie count")))?;
    let shared = t
        .per_edge
        .par_iter()
        .map(|&(_, _, x)| Ok(choose2(x as u128)))
        .try_reduce(|| 0u128, |a, b| a.checked_add(b).ok_or(Error::Overflow("bowtie count")))?;
    let shared = shared.checked_mul(2).ok_or(Error::Overflow("bowtie count"))?;
    centred
        .checked_sub(shared)
        .ok_or(Error::Overflow("bowtie count underflow"))
}

/// Triangle count with per-vertex and per-edge tallies, plus the bowtie count
/// they determine.
pub fn count_triangles(g: &Graph) -> Result<CountReport> {
    let t = tallies(g);
    let bowties = bowties_from(&t)?;
    let triangles = t.per_vertex.iter().map(|&x| x as u128).sum::<u128>() / 3;
    Ok(CountReport {
        triangles,
        bowties,
        per_edge_triangles: Some(t.per_edge.iter().map(|&(u, v, x)| ((u, v), x)).collect()),
        per_vertex_triangles: Some(t.per_vertex),
    })
}

/// Triangle and bowtie totals without the tallies.
pub fn count(g: &Graph) -> Result<CountReport> {
    let t = tallies(g);
    let bowties = bowties_from(&t)?;
    let triangles = t.per_vertex.iter().map(|&x| x as u128).sum::<u128>() / 3;
    Ok(CountReport {
        triangles,
        bowties,
        per_vertex_triangles: None,
        per_edge_triangles: None,
    })
}

pub fn count_bowties(g: &Graph) -> Result<Count> {
    bowties_from(&tallies(g))
}

pub fn count_bowties_with(g: &Graph, method: CountMethod) -> Result<Count> {
    match method {
        CountMethod::Identity => count_bowties(g),
        CountMethod::Naive => Ok(count_bowties_naive(g)),
    }
}

/// Copies of the bowtie found by checking every 5-vertex subset, each centre
/// and each of the three ways to pair the remaining four vertices.
pub fn count_bowties_naive(g: &Graph) -> Count {
    let n = g.n();
    let mut total: Count = 0;
    let mut s = [0usize; 5];
    fn rec(g: &Graph, start: usize, depth: usize, s: &mut [usize; 5], total: &mut Count) {
        if depth == 5 {
            for c in 0..5 {
                let centre = s[c];
                let rest: Vec<usize> = (0..5).filter(|&i| i != c).map(|i| s[i]).collect();
                if !rest.iter().all(|&x| g.has_edge(centre, x)) {
                    continue;
                }
                let (a, b, x, y) = (rest[0], rest[1], rest[2], rest[3]);
                for ((p, q), (r, t)) in [((a, b), (x, y)), ((a, x), (b, y)), ((a, y), (b, x))] {
                    if g.has_edge(p, q) && g.has_edge(r, t) {
                        *total += 1;
                    }
                }
            }
            return;
        }
        for v in start..g.n() {
            s[depth] = v;
            rec(g, v + 1, depth + 1, s, total);
        }
    }
    if n >= 5 {
        rec(g, 0, 0, &mut s, &mut total);
    }
    total
}

/// Triangles through `c` that avoid both `p` and `r`, given that `cpr` is a triangle.
fn triangles_avoiding(g: &Graph, c: usize, p: usize, r: usize) -> u128 {
    let tc: usize = g.neighbors(c).map(|u| g.common_neighbors(c, u)).sum::<usize>() / 2;
    (tc + 1 - g.common_neighbors(c, p) - g.common_neighbors(c, r)) as u128
}

/// Bowtie copies that use the edge `(x, y)`.
///
/// For each triangle `xyw` the other triangle of the bowtie meets it in
/// exactly one vertex `c`, and must avoid the other two; counting those
/// triangles at each `c` gives every copy once.
pub fn bowties_containing_edge(g: &Graph, x: usize, y: usize) -> Result<Count> {
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::OutOfRange { vertex: v, n: g.n() });
        }
    }
    if !g.has_edge(x, y) {
        return Err(Error::EdgeAbsent(x.min(y), x.max(y)));
    }
    let mut total: Count = 0;
    let apex: Vec<usize> = crate::graph::iter_bits(
        &g.row(x).iter().zip(g.row(y)).map(|(a, b)| a & b).collect::<Vec<_>>(),
    )
    .collect();
    for w in apex {
        for (c, p, r) in [(x, y, w), (y, x, w), (w, x, y)] {
            total = total
                .checked_add(triangles_avoiding(g, c, p, r))
                .ok_or(Error::Overflow("bowties containing edge"))?;
        }
    }
    Ok(total)
}

/// Bowties that inserting the non-edge `(x, y)` would create.
pub fn bowties_created_by(g: &Graph, x: usize, y: usize) -> Result<Count> {
    let h = g.with_edge(x, y)?;
    bowties_containing_edge(&h, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    pub(crate) fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn triangles_in_small_graphs() {
        let r = count_triangles(&complete(4)).unwrap();
        assert_eq!(r.triangles, 4);
        assert_eq!(r.per_vertex_triangles.unwrap(), vec![3; 4]);
        assert_eq!(count_triangles(&bipartite(3, 3)).unwrap().triangles, 0);
        let k5 = count_triangles(&complete(5)).unwrap();
        assert_eq!(k5.triangles, 10);
        assert!(k5.per_edge_triangles.unwrap().values().all(|&t| t == 3));
    }

    #[test]
    fn bowtie_examples() {
        assert_eq!(count_bowties(&bipartite(4, 5)).unwrap(), 0);
        assert_eq!(count_bowties(&bowtie()).unwrap(), 1);
        assert_eq!(count_bowties(&complete(5)).unwrap(), 15);
        assert_eq!(count_bowties_naive(&complete(5)), 15);
        assert_eq!(count_bowties_naive(&bowtie()), 1);
    }

    #[test]
    fn per_edge_examples() {
        let k5 = complete(5);
        for (u, v) in k5.edges() {
            assert_eq!(bowties_containing_edge(&k5, u, v).unwrap(), 9);
        }
        let b = bowtie();
        for (u, v) in b.edges() {
            assert_eq!(bowties_containing_edge(&b, u, v).unwrap(), 1);
        }
        let kb = bipartite(2, 3);
        assert_eq!(bowties_containing_edge(&kb, 0, 2).unwrap(), 0);
        assert_eq!(bowties_containing_edge(&kb, 0, 1), Err(Error::EdgeAbsent(0, 1)));
    }

    #[test]
    fn k6_and_k7() {
        // C(n,5) vertex sets, 15 copies each.
        assert_eq!(count_bowties(&complete(6)).unwrap(), 6 * 15);
        assert_eq!(count_bowties(&complete(7)).unwrap(), 21 * 15);
    }

    #[test]
    fn empty_and_tiny() {
        assert_eq!(count_bowties(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(count_bowties(&complete(4)).unwrap(), 0);
        assert_eq!(count_bowties_naive(&complete(4)), 0);
    }
}
