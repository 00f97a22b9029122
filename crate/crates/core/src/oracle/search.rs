//! Depth-first search over edge slots `(0,1), (0,2), …, (n−2,n−1)`.
//!
//! Adjacency is one `u32` row per vertex. Including a slot adds the bowties
//! that contain the new edge, so the running count of a partial graph is
//! exact and never decreases along a branch.

use crate::counting::Count;

pub(crate) const MAX_N: usize = 8;

#[derive(Clone)]
pub(crate) struct Partial {
    pub n: usize,
    pub rows: [u32; MAX_N],
    pub edges: usize,
    pub bowties: Count,
}

impl Partial {
    pub fn new(n: usize) -> Self {
        Partial { n, rows: [0; MAX_N], edges: 0, bowties: 0 }
    }

    fn common(&self, u: usize, v: usize) -> u32 {
        (self.rows[u] & self.rows[v]).count_ones()
    }

    fn triangles_at(&self, c: usize) -> u32 {
        bits(self.rows[c]).map(|u| self.common(c, u)).sum::<u32>() / 2
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    /// Adds `xy` and returns the number of bowties through it.
    pub fn add(&mut self, x: usize, y: usize) -> Count {
        self.rows[x] |= 1 << y;
        self.rows[y] |= 1 << x;
        self.edges += 1;
        let mut created = 0;
        for w in bits(self.rows[x] & self.rows[y]) {
            for (c, p, r) in [(x, y, w), (y, x, w), (w, x, y)] {
                created += (self.triangles_at(c) + 1 - self.common(c, p) - self.common(c, r)) as Count;
            }
        }
        self.bowties += created;
        created
    }

    pub fn remove(&mut self, x: usize, y: usize, created: Count) {
        self.rows[x] &= !(1 << y);
        self.rows[y] &= !(1 << x);
        self.edges -= 1;
        self.bowties -= created;
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.n {
            for v in bits(self.rows[u] >> (u + 1)).map(|v| v + u + 1) {
                out.push((u, v));
            }
        }
        out
    }
}

fn bits(mut w: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (w != 0).then(|| {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            b
        })
    })
}

pub(crate) fn slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// What a search is looking for.
#[derive(Clone, Copy)]
pub(crate) enum Goal {
    /// Graphs with exactly `edges` edges and the fewest bowties; `bound`
    /// is a known achievable count (or `None` to disable pruning).
    MinBowties { edges: usize, bound: Option<Count> },
    /// Bowtie-free graphs with the most edges, at least `at_least`.
    MaxEdges { at_least: usize, prune: bool },
}

pub(crate) struct ShardResult {
    /// Best objective found: bowtie count, or edge count for `MaxEdges`.
    pub best: Option<Count>,
    pub optimal: u128,
    pub witnesses: Vec<Vec<(usize, usize)>>,
    pub examined: u128,
}

pub(crate) struct Search<'a> {
    pub slots: &'a [(usize, usize)],
    pub goal: Goal,
    pub symmetry: bool,
    pub witness_cap: usize,
    /// Decisions for the first slots, least significant bit first.
    pub prefix: (usize, u64),
}

impl Search<'_> {
    pub fn run(&self, n: usize) -> ShardResult {
        let mut state = State {
            g: Partial::new(n),
            res: ShardResult { best: None, optimal: 0, witnesses: Vec::new(), examined: 0 },
        };
        if let Goal::MaxEdges { at_least, .. } = self.goal {
            // edge counts below the seed are never reported
            state.res.best = Some(at_least as Count);
        }
        self.dfs(0, &mut state);
        if let Goal::MaxEdges { .. } = self.goal {
            if state.res.optimal == 0 {
                state.res.best = None;
            }
        }
        state.res
    }

    fn bound(&self, st: &State) -> Option<Count> {
        match self.goal {
            Goal::MinBowties { bound, .. } => match (st.res.best, bound) {
                (Some(b), _) => Some(b),
                (None, b) => b,
            },
            Goal::MaxEdges { .. } => None,
        }
    }

    fn dfs(&self, i: usize, st: &mut State) {
        let remaining = self.slots.len() - i;
        match self.goal {
            Goal::MinBowties { edges, bound } => {
                if st.g.edges > edges || st.g.edges + remaining < edges {
                    return;
                }
                // counts only grow along a branch, so a partial count above
                // an achievable value cannot lead to an optimum
                if bound.is_some() {
                    if let Some(b) = self.bound(st) {
                        if st.g.bowties > b {
                            return;
                        }
                    }
                }
                // a shard owns a leaf only once its forced slots are decided
                if st.g.edges == edges && i >= self.prefix.0 {
                    self.leaf(st, st.g.bowties, |best, x| x < best);
                    return;
                }
            }
            Goal::MaxEdges { prune, .. } => {
                if st.g.bowties > 0 {
                    return;
                }
                // bowtie-freeness is hereditary and the edge count can grow
                // by at most the number of undecided slots
                if prune && ((st.g.edges + remaining) as Count) < st.res.best.unwrap_or(0) {
                    return;
                }
                if remaining == 0 {
                    self.leaf(st, st.g.edges as Count, |best, x| x > best);
                    return;
                }
            }
        }
        if self.symmetry && i >= 1 && self.slots[i - 1].0 == 0 && self.slots[i].0 != 0 {
            // every vertex of degree above deg(0) would break "vertex 0 has
            // maximum degree", which any graph satisfies after relabelling
            if self.violates_symmetry(&st.g) {
                return;
            }
        }
        let (x, y) = self.slots[i];
        let forced = (i < self.prefix.0).then(|| self.prefix.1 >> i & 1 == 1);
        if forced != Some(false) {
            let created = st.g.add(x, y);
            if !(self.symmetry && i >= st.g.n.saturating_sub(1) && self.violates_symmetry(&st.g)) {
                self.dfs(i + 1, st);
            }
            st.g.remove(x, y, created);
        }
        if forced != Some(true) {
            self.dfs(i + 1, st);
        }
    }

    fn violates_symmetry(&self, g: &Partial) -> bool {
        let d0 = g.degree(0);
        (1..g.n).any(|v| g.degree(v) > d0)
    }

    fn leaf(&self, st: &mut State, value: Count, better: impl Fn(Count, Count) -> bool) {
        if self.symmetry && self.violates_symmetry(&st.g) {
            return;
        }
        st.res.examined += 1;
        let res = &mut st.res;
        match res.best {
            Some(b) if better(b, value) => {
                res.best = Some(value);
                res.optimal = 0;
                res.witnesses.clear();
            }
            None => res.best = Some(value),
            Some(b) if b != value => return,
            _ => {}
        }
        res.optimal += 1;
        if res.witnesses.len() < self.witness_cap {
            res.witnesses.push(st.g.edge_list());
        }
    }
}

struct State {
    g: Partial,
    res: ShardResult,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_bowties;
    use crate::graph::Graph;

    #[test]
    fn incremental_count_matches_direct() {
        let mut p = Partial::new(6);
        let mut edges = Vec::new();
        for (x, y) in slots(6) {
            p.add(x, y);
            edges.push((x, y));
            let g = Graph::from_edges(6, edges.iter().copied()).unwrap();
            assert_eq!(p.bowties, count_bowties(&g).unwrap());
        }
        assert_eq!(p.bowties, 90);
    }
}
