//! Exhaustive search for ex(n) and h(n, q) on at most eight vertices.
//!
//! The search fixes edge slots one at a time in lexicographic order. Two
//! prunings can be switched off for audit runs:
//!
//! * bound pruning: a partial graph whose bowtie count already exceeds an
//!   achievable value is dropped (for `ex`, a partial graph that cannot
//!   reach the best edge count);
//! * symmetry: only graphs in which vertex 0 has maximum degree are kept.
//!
//! With both off, `graphs_examined` is exactly the number of candidate
//! graphs. The slot decisions for the first `shard_depth` slots split the
//! space into shards that run in parallel; each shard keeps its own best
//! value and results are merged in shard order, so reports do not depend on
//! the number of threads (apart from `wall_time`).

mod canon;
mod search;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use canon::{canonical_form, isomorphic};
use search::{slots, Goal, Search, ShardResult, MAX_N};

use crate::constructions::{ex_bowtie, extremal_bowtie_free, upper_bound_graph, Variant};
use crate::counting::{count_bowties, Count};
use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph};
use crate::optimizer::{minimize_f, realize_witness};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Largest number of candidate graphs a search may cover.
    pub budget: u128,
    pub witness_cap: usize,
    pub bound_pruning: bool,
    pub symmetry: bool,
    pub shard_depth: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            threads: None,
            budget: DEFAULT_BUDGET,
            witness_cap: 10,
            bound_pruning: true,
            symmetry: true,
            shard_depth: 10,
        }
    }
}

impl OracleConfig {
    /// Both prunings off: every candidate graph is visited.
    pub fn audit() -> Self {
        OracleConfig { bound_pruning: false, symmetry: false, ..Self::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    /// Edge count of the optimal graphs.
    pub edges: usize,
    /// Minimum bowtie count (`h_exact`) or maximum edge count (`ex_exact`).
    pub optimum: Count,
    /// Optimal graphs among those examined.
    pub optimal_graphs: u128,
    pub witness_graphs: Vec<EdgeList>,
    pub graphs_examined: u128,
    pub wall_time: f64,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::TooLarge { n, cap: MAX_N });
    }
    Ok(())
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

struct Merged {
    best: Option<Count>,
    optimal: u128,
    witnesses: Vec<Vec<(usize, usize)>>,
    examined: u128,
}

fn run_sharded(n: usize, goal: Goal, cfg: &OracleConfig, witness_cap: usize, lower_is_better: bool) -> Merged {
    let slots = slots(n);
    let depth = cfg.shard_depth.min(slots.len()).min(20);
    let shards: Vec<ShardResult> = with_pool(cfg.threads, || {
        (0..1u64 << depth)
            .into_par_iter()
            .map(|mask| {
                Search {
                    slots: &slots,
                    goal,
                    symmetry: cfg.symmetry,
                    witness_cap,
                    prefix: (depth, mask),
                }
                .run(n)
            })
            .collect()
    });
    let best = shards
        .iter()
        .filter_map(|s| s.best)
        .reduce(|a, b| if (b < a) == lower_is_better { b } else { a });
    let mut merged = Merged {
        best,
        optimal: 0,
        witnesses: Vec::new(),
        examined: shards.iter().map(|s| s.examined).sum(),
    };
    for s in shards.into_iter().filter(|s| s.best == best && best.is_some()) {
        merged.optimal += s.optimal;
        for w in s.witnesses {
            if merged.witnesses.len() < witness_cap {
                merged.witnesses.push(w);
            }
        }
    }
    merged
}

fn edge_lists(n: usize, ws: Vec<Vec<(usize, usize)>>) -> Vec<EdgeList> {
    ws.into_iter().map(|edges| EdgeList { n, edges }).collect()
}

/// Maximum edge count of a bowtie-free graph on `n` vertices.
pub fn ex_exact(n: usize, cfg: &OracleConfig) -> Result<OracleReport> {
    check_size(n)?;
    let start = Instant::now();
    let total = n * n.saturating_sub(1) / 2;
    // a bowtie-free graph we can build gives the starting bound
    let seed = if cfg.bound_pruning && n >= 5 {
        let g = extremal_bowtie_free(n, Variant::LargerPart)?;
        debug_assert_eq!(count_bowties(&g)?, 0);
        g.edge_count()
    } else if cfg.bound_pruning {
        total
    } else {
        0
    };
    let required: u128 = (seed..=total).map(|m| binomial(total as u128, m as u128)).sum();
    if required > cfg.budget {
        return Err(Error::BudgetExceeded { required, budget: cfg.budget });
    }
    let m = run_sharded(
        n,
        Goal::MaxEdges { at_least: seed, prune: cfg.bound_pruning },
        cfg,
        cfg.witness_cap,
        false,
    );
    let optimum = m.best.expect("the seed graph is bowtie-free");
    Ok(OracleReport {
        n,
        q: None,
        edges: optimum as usize,
        optimum,
        optimal_graphs: m.optimal,
        witness_graphs: edge_lists(n, m.witnesses),
        graphs_examined: m.examined,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

fn achievable_count(n: usize, q: usize) -> Option<Count> {
    let from_optimizer = minimize_f(n, q, 2)
        .ok()
        .filter(|r| r.realizable)
        .and_then(|r| realize_witness(&r).ok())
        .and_then(|g| count_bowties(&g).ok());
    let from_bound = upper_bound_graph(n, q).ok().and_then(|g| count_bowties(&g).ok());
    from_optimizer.into_iter().chain(from_bound).min()
}

/// Minimum bowtie count over all graphs with `n` vertices and `ex(n) + q` edges.
pub fn h_exact(n: usize, q: usize, cfg: &OracleConfig) -> Result<OracleReport> {
    check_size(n)?;
    let start = Instant::now();
    let edges = (ex_bowtie(n)? as usize) + q;
    let total = n * (n - 1) / 2;
    if edges > total {
        return Err(Error::Infeasible(format!("{edges} edges do not fit on {n} vertices")));
    }
    let required = binomial(total as u128, edges as u128);
    if required > cfg.budget {
        return Err(Error::BudgetExceeded { required, budget: cfg.budget });
    }
    let bound = if cfg.bound_pruning {
        Some(achievable_count(n, q).unwrap_or(Count::MAX))
    } else {
        None
    };
    let m = run_sharded(n, Goal::MinBowties { edges, bound }, cfg, cfg.witness_cap, true);
    let optimum = m.best.expect("every edge count up to C(n,2) has a graph");
    Ok(OracleReport {
        n,
        q: Some(q),
        edges,
        optimum,
        optimal_graphs: m.optimal,
        witness_graphs: edge_lists(n, m.witnesses),
        graphs_examined: m.examined,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoClass {
    pub representative: EdgeList,
    pub labeled_count: usize,
    pub is_turan_plus_edge: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub n: usize,
    pub ex: usize,
    pub labeled_graphs: usize,
    pub classes: Vec<IsoClass>,
    /// Every class is `T_2(n)` with one edge added.
    pub all_turan_plus_edge: bool,
}

/// All bowtie-free graphs with `ex(n)` edges, grouped by isomorphism.
pub fn extremal_uniqueness(n: usize, cfg: &OracleConfig) -> Result<UniquenessReport> {
    if n > 7 {
        return Err(Error::TooLarge { n, cap: 7 });
    }
    ex_bowtie(n)?;
    let ex = ex_exact(n, &OracleConfig { witness_cap: 0, ..cfg.clone() })?.optimum as usize;
    let all_cfg = OracleConfig { symmetry: false, ..cfg.clone() };
    let m = run_sharded(n, Goal::MaxEdges { at_least: ex, prune: true }, &all_cfg, usize::MAX, false);
    let reference: Vec<_> = [Variant::LargerPart, Variant::SmallerPart]
        .iter()
        .map(|&v| extremal_bowtie_free(n, v).map(|g| canonical_form(&g)))
        .collect::<Result<_>>()?;
    let mut classes: Vec<((usize, u64), IsoClass)> = Vec::new();
    let labeled = m.witnesses.len();
    for edges in m.witnesses {
        let g = Graph::from_edges(n, edges.iter().copied())?;
        let form = canonical_form(&g);
        match classes.iter_mut().find(|(f, _)| *f == form) {
            Some((_, c)) => c.labeled_count += 1,
            None => classes.push((
                form,
                IsoClass {
                    representative: EdgeList { n, edges },
                    labeled_count: 1,
                    is_turan_plus_edge: reference.contains(&form),
                },
            )),
        }
    }
    let classes: Vec<IsoClass> = classes.into_iter().map(|(_, c)| c).collect();
    Ok(UniquenessReport {
        n,
        ex,
        labeled_graphs: labeled,
        all_turan_plus_edge: classes.iter().all(|c| c.is_turan_plus_edge),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 8), 45);
        assert_eq!(binomial(21, 14), 116_280);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn caps() {
        let cfg = OracleConfig::default();
        assert_eq!(ex_exact(9, &cfg).unwrap_err(), Error::TooLarge { n: 9, cap: 8 });
        assert!(matches!(extremal_uniqueness(8, &cfg), Err(Error::TooLarge { .. })));
        let tight = OracleConfig { budget: 10, ..cfg };
        assert!(matches!(h_exact(5, 1, &tight), Err(Error::BudgetExceeded { required: 45, .. })));
    }

    #[test]
    fn h_five_one() {
        let r = h_exact(5, 1, &OracleConfig::audit()).unwrap();
        assert_eq!((r.optimum, r.graphs_examined, r.optimal_graphs), (2, 45, 45));
        let r = h_exact(5, 1, &OracleConfig::default()).unwrap();
        assert_eq!(r.optimum, 2);
        assert!(r.witness_graphs.iter().all(|w| w.edges.len() == 8));
    }

    #[test]
    fn ex_small() {
        assert_eq!(ex_exact(5, &OracleConfig::default()).unwrap().optimum, 7);
        assert_eq!(ex_exact(4, &OracleConfig::default()).unwrap().optimum, 6);
    }
}
