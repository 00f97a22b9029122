//! Triangle-free graphs with a prescribed two-valued degree profile.
//!
//! An `(α, a, β, b)`-graph is triangle-free with `α` vertices of degree `a`
//! and `β` of degree `b` (`a`-regular when `a = b`). The basic pieces are:
//!
//! * [`trifree_even`]: a balanced bipartite `(2i, d+1, 2m, d)`-graph made of a
//!   partial "identity" matching plus `d` cyclic-shift perfect matchings;
//! * [`trifree_odd`]: a `(4k, k, 1, 2m)`-graph on four blocks plus one extra
//!   vertex whose neighbourhood is independent;
//! * an odd-order circulant whose connection set lies in `(v/3, v/2)`, which
//!   is sum-free modulo `v` and so yields a triangle-free regular graph.
//!
//! [`realize_trifree`] combines them. When the odd part of the profile cannot
//! be handled by the two block decompositions it falls back to the circulant,
//! to an "apex" variant of the bipartite piece, and finally to a greedy
//! bipartite realization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Reason, Result};
use crate::graph::{Graph, GraphBuilder};

/// `alpha` vertices of degree `a` and `beta` vertices of degree `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub alpha: usize,
    pub a: usize,
    pub beta: usize,
    pub b: usize,
}

impl DegreeProfile {
    pub fn new(alpha: usize, a: usize, beta: usize, b: usize) -> Self {
        DegreeProfile { alpha, a, beta, b }
    }

    pub fn regular(v: usize, d: usize) -> Self {
        DegreeProfile { alpha: v, a: d, beta: 0, b: d }
    }

    pub fn order(&self) -> usize {
        self.alpha + self.beta
    }

    pub fn degree_sum(&self) -> usize {
        self.alpha * self.a + self.beta * self.b
    }

    /// The density condition `3a + 3b < α + β − 1` of the two-block
    /// decomposition.
    pub fn is_sparse(&self) -> bool {
        3 * (self.a + self.b) + 1 < self.alpha + self.beta
    }

    /// Degree sequence, larger degrees first.
    pub fn degrees(&self) -> Vec<usize> {
        let (hi, hc, lo, lc) = if self.a >= self.b {
            (self.a, self.alpha, self.b, self.beta)
        } else {
            (self.b, self.beta, self.a, self.alpha)
        };
        let mut d = vec![hi; hc];
        d.extend(std::iter::repeat(lo).take(lc));
        d
    }
}

/// Balanced bipartite `(2i, d+1, 2m, d)`-graph on parts
/// `{0..i+m}` and `{i+m..2(i+m)}`; requires `d < i + m`.
///
/// Vertex `j` of the first part is joined to `j` of the second for `j < i`,
/// and to `j + ℓ (mod i+m)` for `ℓ = 1..=d`.
pub fn trifree_even(d: usize, i: usize, m: usize) -> Result<Graph> {
    let size = i + m;
    if d >= size && !(d == 0 && size == 0) {
        return Err(Error::PreconditionViolated(format!(
            "trifree_even needs d < i + m (d = {d}, i + m = {size})"
        )));
    }
    let mut b = GraphBuilder::new(2 * size);
    shifted_matchings(&mut b, 0, size, d, 0..i)?;
    Ok(b.build())
}

fn shifted_matchings(
    b: &mut GraphBuilder,
    offset: usize,
    size: usize,
    d: usize,
    identity: impl IntoIterator<Item = usize>,
) -> Result<()> {
    for j in identity {
        b.add_edge(offset + j, offset + size + j)?;
    }
    for shift in 1..=d {
        for j in 0..size {
            b.add_edge(offset + j, offset + size + (j + shift) % size)?;
        }
    }
    Ok(())
}

/// `(4k, k, 1, 2m)`-graph; requires `k >= m`.
///
/// Vertex 0 is the vertex of degree `2m`; blocks `U1..U4` of size `k`
/// follow in order.
pub fn trifree_odd(k: usize, m: usize) -> Result<Graph> {
    if m > k {
        return Err(Error::PreconditionViolated(format!(
            "trifree_odd needs k >= m (k = {k}, m = {m})"
        )));
    }
    let mut b = GraphBuilder::new(4 * k + 1);
    odd_block(&mut b, 0, k, m)?;
    Ok(b.build())
}

fn odd_block(b: &mut GraphBuilder, offset: usize, k: usize, m: usize) -> Result<()> {
    let u = offset;
    let at = |block: usize, j: usize| offset + 1 + block * k + j;
    for j in 0..m {
        b.add_edge(u, at(0, j))?;
        b.add_edge(u, at(2, j))?;
    }
    for j in m..k {
        b.add_edge(at(0, j), at(2, j))?;
    }
    for j in 0..k {
        b.add_edge(at(1, j), at(3, j))?;
    }
    for (x, y) in [(0, 1), (2, 3)] {
        for j in 0..k {
            for l in 0..k {
                if j != l {
                    b.add_edge(at(x, j), at(y, l))?;
                }
            }
        }
    }
    Ok(())
}

/// Connection distances for a `deg`-regular triangle-free circulant on `v`
/// vertices (`v` odd): the smallest `deg/2` integers in `(v/3, v/2)`.
fn circulant_distances(v: usize, deg: usize) -> Option<Vec<usize>> {
    if deg % 2 != 0 {
        return None;
    }
    let dist: Vec<usize> = (1..v)
        .filter(|&s| 3 * s > v && 2 * s < v)
        .take(deg / 2)
        .collect();
    (dist.len() == deg / 2).then_some(dist)
}

/// Vertices of the circulant `C_v(S)` with `S` as in [`circulant_distances`].
pub fn sum_free_circulant(v: usize, deg: usize) -> Result<Graph> {
    let dist = circulant_distances(v, deg).ok_or(Error::Unrealizable(Reason::Density))?;
    let mut b = GraphBuilder::new(v);
    circulant_block(&mut b, 0, v, &dist)?;
    Ok(b.build())
}

fn circulant_block(b: &mut GraphBuilder, offset: usize, v: usize, dist: &[usize]) -> Result<()> {
    for x in 0..v {
        for &s in dist {
            b.add_edge(offset + x, offset + (x + s) % v)?;
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Block {
    Isolated(usize),
    Even { d: usize, i: usize, m: usize },
    Odd { k: usize, m: usize },
    Circulant { v: usize, dist: Vec<usize> },
    Apex { d: usize, i: usize, m: usize, t: usize },
    Bipartite { left: Vec<usize>, right: Vec<usize> },
}

impl Block {
    fn order(&self) -> usize {
        match self {
            Block::Isolated(v) => *v,
            Block::Even { i, m, .. } => 2 * (i + m),
            Block::Odd { k, .. } => 4 * k + 1,
            Block::Circulant { v, .. } => *v,
            Block::Apex { i, m, .. } => 2 * (i + m) + 1,
            Block::Bipartite { left, right } => left.len() + right.len(),
        }
    }

    fn build_into(&self, b: &mut GraphBuilder, offset: usize) -> Result<()> {
        match self {
            Block::Isolated(_) => Ok(()),
            Block::Even { d, i, m } => shifted_matchings(b, offset, i + m, *d, 0..*i),
            Block::Odd { k, m } => odd_block(b, offset, *k, *m),
            Block::Circulant { v, dist } => circulant_block(b, offset, *v, dist),
            Block::Apex { d, i, m, t } => {
                let size = i + m;
                let step = d + 1;
                let apex_at: Vec<usize> = (0..*t).map(|k| k * step).collect();
                let identity: Vec<usize> = (0..size).filter(|j| !apex_at.contains(j)).take(*i).collect();
                shifted_matchings(b, offset, size, *d, identity)?;
                let u = offset + 2 * size;
                for &j in &apex_at {
                    b.add_edge(u, offset + j)?;
                    b.add_edge(u, offset + size + j)?;
                }
                Ok(())
            }
            Block::Bipartite { left, right } => {
                for (x, y) in greedy_bipartite(left, right).ok_or(Error::Unrealizable(Reason::Unsupported))? {
                    b.add_edge(offset + x, offset + left.len() + y)?;
                }
                Ok(())
            }
        }
    }
}

/// Blocks whose disjoint union realizes a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plan {
    blocks: Vec<Block>,
}

impl Plan {
    pub fn order(&self) -> usize {
        self.blocks.iter().map(Block::order).sum()
    }

    /// Name of the construction used for each block, in layout order.
    pub fn describe(&self) -> Vec<&'static str> {
        self.blocks
            .iter()
            .map(|b| match b {
                Block::Isolated(_) => "isolated",
                Block::Even { .. } => "even",
                Block::Odd { .. } => "odd",
                Block::Circulant { .. } => "circulant",
                Block::Apex { .. } => "apex",
                Block::Bipartite { .. } => "bipartite",
            })
            .collect()
    }

    pub fn build(&self) -> Result<Graph> {
        let mut b = GraphBuilder::new(self.order());
        let mut offset = 0;
        for block in &self.blocks {
            block.build_into(&mut b, offset)?;
            offset += block.order();
        }
        Ok(b.build())
    }
}

/// Even block for `hi_count` vertices of degree `d + 1` and `lo_count` of
/// degree `d`; both counts even.
fn even_block(d: usize, hi_count: usize, lo_count: usize) -> Option<Block> {
    debug_assert!(hi_count % 2 == 0 && lo_count % 2 == 0);
    let (i, m) = (hi_count / 2, lo_count / 2);
    if i + m == 0 {
        return Some(Block::Isolated(0));
    }
    if d == 0 && i == 0 {
        return Some(Block::Isolated(lo_count));
    }
    (d < i + m).then_some(Block::Even { d, i, m })
}

/// Even block for `count_x` vertices of degree `x` and `count_y` of degree `y`, `|x−y| = 1`.
fn even_pair(x: usize, count_x: usize, y: usize, count_y: usize) -> Option<Block> {
    if count_x % 2 != 0 || count_y % 2 != 0 {
        return None;
    }
    if x > y {
        even_block(y, count_x, count_y)
    } else {
        even_block(x, count_y, count_x)
    }
}

fn plan_regular(v: usize, deg: usize) -> Option<Plan> {
    if deg == 0 {
        return Some(Plan { blocks: vec![Block::Isolated(v)] });
    }
    if v % 2 == 0 {
        // d + 1 = deg on all 2i = v vertices
        (deg <= v / 2).then(|| Plan {
            blocks: vec![Block::Even { d: deg - 1, i: v / 2, m: 0 }],
        })
    } else {
        circulant_distances(v, deg).map(|dist| Plan {
            blocks: vec![Block::Circulant { v, dist }],
        })
    }
}

/// Profile with `big` (odd) vertices of even degree `da` and `small` (even)
/// vertices of degree `db = da ± 1`.
fn plan_odd(big: usize, da: usize, small: usize, db: usize) -> Option<Plan> {
    let two = |first: Block, rest: Option<Block>| rest.map(|r| Plan { blocks: vec![first, r] });

    // (4a, a, 1, a)-graph plus the even remainder.
    if big > 4 * da {
        if let Some(p) = two(Block::Odd { k: da, m: da / 2 }, even_pair(da, big - 4 * da - 1, db, small)) {
            return Some(p);
        }
    }
    // (4b, b, 1, a)-graph plus the even remainder.
    if small >= 4 * db && db >= da / 2 {
        if let Some(p) = two(Block::Odd { k: db, m: da / 2 }, even_pair(da, big - 1, db, small - 4 * db)) {
            return Some(p);
        }
    }
    // Odd-order regular circulant plus the even remainder.
    for v in (1..=big).step_by(2) {
        if da >= v {
            continue;
        }
        if let Some(dist) = circulant_distances(v, da) {
            if let Some(p) = two(Block::Circulant { v, dist }, even_pair(da, big - v, db, small)) {
                return Some(p);
            }
        }
    }
    // Shifted-matching graph plus an apex joined to pairs of degree-d vertices.
    let t = da / 2;
    let apex = if db == da + 1 {
        (small >= da).then(|| (da, (small - da) / 2, (big - 1) / 2 + t))
    } else {
        ((big - 1) / 2 >= t).then(|| (db, (big - 1) / 2 - t, small / 2 + t))
    };
    if let Some((d, i, m)) = apex {
        let size = i + m;
        if (d < size || size == 0) && t <= m && t * (d + 1) <= size {
            return Some(Plan { blocks: vec![Block::Apex { d, i, m, t }] });
        }
    }
    None
}

/// Greedy bipartite realization: each left vertex, largest first, takes the
/// right vertices with the largest remaining demand. Succeeds exactly when
/// the Gale-Ryser condition holds.
fn greedy_bipartite(left: &[usize], right: &[usize]) -> Option<Vec<(usize, usize)>> {
    if left.iter().sum::<usize>() != right.iter().sum::<usize>() {
        return None;
    }
    let mut remaining = right.to_vec();
    let mut order: Vec<usize> = (0..left.len()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(left[x]));
    let mut edges = Vec::new();
    for x in order {
        let mut targets: Vec<usize> = (0..right.len()).filter(|&y| remaining[y] > 0).collect();
        if targets.len() < left[x] {
            return None;
        }
        targets.sort_by_key(|&y| (std::cmp::Reverse(remaining[y]), y));
        for &y in &targets[..left[x]] {
            remaining[y] -= 1;
            edges.push((x, y));
        }
    }
    remaining.iter().all(|&r| r == 0).then(|| {
        edges.sort_unstable();
        edges
    })
}

fn gale_ryser(left: &[usize], right: &[usize]) -> bool {
    if left.iter().sum::<usize>() != right.iter().sum::<usize>() {
        return false;
    }
    let mut l = left.to_vec();
    l.sort_unstable_by(|a, b| b.cmp(a));
    let mut lhs = 0;
    for (k, &d) in l.iter().enumerate() {
        lhs += d;
        let rhs: usize = right.iter().map(|&c| c.min(k + 1)).sum();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Splits the profile into two sides of equal degree sum that satisfy
/// Gale-Ryser, preferring the most balanced split.
fn plan_bipartite(p: &DegreeProfile) -> Option<Plan> {
    let total = p.degree_sum();
    if total % 2 != 0 {
        return None;
    }
    let half = total / 2;
    let mut candidates = Vec::new();
    for xa in 0..=p.alpha {
        let rest = match half.checked_sub(xa * p.a) {
            Some(r) => r,
            None => break,
        };
        let xb = if p.b == 0 {
            if rest != 0 {
                continue;
            }
            // degree-0 vertices go wherever balances the sides
            (p.order() / 2).saturating_sub(xa).min(p.beta)
        } else if rest % p.b == 0 && rest / p.b <= p.beta {
            rest / p.b
        } else {
            continue;
        };
        let size = xa + xb;
        candidates.push((size.abs_diff(p.order() - size), xa, xb));
    }
    candidates.sort_unstable();
    candidates.into_iter().find_map(|(_, xa, xb)| {
        let mut left = vec![p.a; xa];
        left.extend(std::iter::repeat(p.b).take(xb));
        let mut right = vec![p.a; p.alpha - xa];
        right.extend(std::iter::repeat(p.b).take(p.beta - xb));
        gale_ryser(&left, &right).then(|| Plan {
            blocks: vec![Block::Bipartite { left, right }],
        })
    })
}

/// Chooses a construction for `profile` without building it.
pub fn plan_trifree(profile: &DegreeProfile) -> Result<Plan> {
    let p = *profile;
    if p.degree_sum() % 2 != 0 {
        return Err(Error::Unrealizable(Reason::Parity));
    }
    let failure = || {
        Err(Error::Unrealizable(if p.is_sparse() {
            Reason::Unsupported
        } else {
            Reason::Density
        }))
    };
    if p.a == p.b || p.alpha == 0 || p.beta == 0 {
        let deg = if p.alpha == 0 { p.b } else { p.a };
        return match plan_regular(p.order(), deg) {
            Some(plan) => Ok(plan),
            None => failure(),
        };
    }
    if p.a.abs_diff(p.b) != 1 {
        return Err(Error::PreconditionViolated(format!(
            "degrees {} and {} differ by more than one",
            p.a, p.b
        )));
    }
    let structured = if p.alpha % 2 == 0 && p.beta % 2 == 0 {
        even_pair(p.a, p.alpha, p.b, p.beta).map(|b| Plan { blocks: vec![b] })
    } else if p.alpha % 2 == 1 {
        plan_odd(p.alpha, p.a, p.beta, p.b)
    } else {
        plan_odd(p.beta, p.b, p.alpha, p.a)
    };
    match structured.or_else(|| plan_bipartite(&p)) {
        Some(plan) => Ok(plan),
        None => failure(),
    }
}

/// Triangle-free graph on `α + β` vertices with exactly `α` vertices of
/// degree `a` and `β` of degree `b`.
pub fn realize_trifree(profile: &DegreeProfile) -> Result<Graph> {
    let g = plan_trifree(profile)?.build()?;
    debug_assert_eq!(g.n(), profile.order());
    Ok(g)
}
