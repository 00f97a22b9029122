//! Turán graphs, bowtie-extremal graphs, the surplus upper-bound graph,
//! triangle-free degree realizations and the `H*` family.
//!
//! Labelings are deterministic: blocks are laid out in the order they are
//! described, larger parts first.

mod hstar;
mod trifree;

use serde::{Deserialize, Serialize};

pub use hstar::{build_hstar, near_regular_degrees, near_regular_profile, part_realizable, PartitionSpec};
pub use trifree::{plan_trifree, realize_trifree, sum_free_circulant, trifree_even, trifree_odd, DegreeProfile, Plan};

use crate::counting::Count;
use crate::error::{Error, Reason, Result};
use crate::graph::{Graph, GraphBuilder};

/// Part sizes of `T_r(n)`, larger parts first.
pub fn turan_parts(r: usize, n: usize) -> Vec<usize> {
    assert!(r >= 1, "a Turán graph needs at least one part");
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// Complete `r`-partite graph on `n` vertices with near-equal parts laid out
/// consecutively.
pub fn turan(r: usize, n: usize) -> Graph {
    let parts = turan_parts(r, n);
    let mut b = GraphBuilder::new(n);
    let mut start = 0;
    for (i, &p) in parts.iter().enumerate() {
        let rest: usize = parts[..i].iter().sum();
        b.add_complete_bipartite(0..rest, start..start + p)
            .expect("parts are disjoint");
        start += p;
    }
    b.build()
}

/// `⌊n²/4⌋ + 1`, the largest edge count of a bowtie-free graph on `n >= 5` vertices.
pub fn ex_bowtie(n: usize) -> Result<Count> {
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    Ok((n as Count).pow(2) / 4 + 1)
}

/// Where the extra edge of `T_2(n) + e` goes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    #[default]
    LargerPart,
    SmallerPart,
}

/// `T_2(n)` plus one edge inside the chosen part. For even `n` the two
/// variants coincide up to isomorphism.
pub fn extremal_bowtie_free(n: usize, variant: Variant) -> Result<Graph> {
    ex_bowtie(n)?;
    let big = n.div_ceil(2);
    let extra = match variant {
        Variant::LargerPart => (0, 1),
        Variant::SmallerPart => (big, big + 1),
    };
    let mut b = GraphBuilder::from_graph(&turan(2, n));
    b.add_edge(extra.0, extra.1)?;
    Ok(b.build())
}

/// `T_2(n)` plus `q + 1` edges between two disjoint `⌊n/4⌋`-sets `W1, W2`
/// inside the larger part, with degrees as equal as possible (larger degrees
/// on the lowest indices). Vertices `0..⌈n/2⌉` form the larger part and
/// `W1`, `W2` are its first two blocks of `⌊n/4⌋`.
///
/// Fails with `Unrealizable` when `q + 1 > ⌊n/4⌋²`.
pub fn upper_bound_graph(n: usize, q: usize) -> Result<Graph> {
    ex_bowtie(n)?;
    let w = n / 4;
    let extra = q + 1;
    if extra > w * w {
        return Err(Error::Unrealizable(Reason::Density));
    }
    let (d, k) = (extra / w, extra % w);
    let bad = if k == 0 {
        trifree_even(d - 1, w, 0)?
    } else {
        trifree_even(d, k, w - k)?
    };
    let mut b = GraphBuilder::from_graph(&turan(2, n));
    b.add_graph_at(&bad, 0)?;
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_bowties, count_triangles};

    #[test]
    fn turan_examples() {
        assert_eq!(turan(2, 4).edge_count(), 4);
        assert_eq!(turan(2, 5).edge_count(), 6);
        assert_eq!(turan(3, 6).edge_count(), 12);
        assert_eq!(turan_parts(3, 7), vec![3, 2, 2]);
        assert_eq!(turan(1, 4).edge_count(), 0);
        assert_eq!(turan(2, 0).n(), 0);
    }

    #[test]
    fn ex_values() {
        assert_eq!(ex_bowtie(5), Ok(7));
        assert_eq!(ex_bowtie(6), Ok(10));
        assert_eq!(ex_bowtie(4), Err(Error::TooSmall { n: 4, min: 5 }));
    }

    #[test]
    fn extremal_examples() {
        let g = extremal_bowtie_free(5, Variant::LargerPart).unwrap();
        assert_eq!(g.edge_count(), 7);
        let c = count_triangles(&g).unwrap();
        assert_eq!((c.triangles, c.bowties), (2, 0));
        let h = extremal_bowtie_free(5, Variant::SmallerPart).unwrap();
        assert_eq!(count_triangles(&h).unwrap().triangles, 3);
        for v in [Variant::LargerPart, Variant::SmallerPart] {
            let g = extremal_bowtie_free(6, v).unwrap();
            assert_eq!((g.edge_count(), count_bowties(&g).unwrap()), (10, 0));
        }
        assert!(extremal_bowtie_free(4, Variant::LargerPart).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        let g = upper_bound_graph(8, 0).unwrap();
        assert_eq!((g.edge_count(), count_bowties(&g).unwrap()), (17, 0));

        let g = upper_bound_graph(12, 2).unwrap();
        assert_eq!(g.edge_count(), 39);
        let degrees_in_w: Vec<usize> = (0..6)
            .map(|v| (0..6).filter(|&u| g.has_edge(u, v)).count())
            .collect();
        assert_eq!(degrees_in_w, vec![1; 6]);
        assert!(count_bowties(&g).unwrap() <= 468);

        assert_eq!(upper_bound_graph(8, 10), Err(Error::Unrealizable(Reason::Density)));
        // q + 1 = n'^2 fills K(W1, W2)
        assert_eq!(upper_bound_graph(8, 3).unwrap().edge_count(), 17 + 3);
    }
}
