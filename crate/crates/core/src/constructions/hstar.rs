use serde::{Deserialize, Serialize};

use super::trifree::{plan_trifree, DegreeProfile};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// A split of `0..n` into `0..v1` and `v1..n`, with a target within-part
/// degree for every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub v1: usize,
    pub v2: usize,
    pub phi: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(v1: usize, v2: usize, phi: Vec<usize>) -> Result<Self> {
        let spec = PartitionSpec { v1, v2, phi };
        spec.validate()?;
        Ok(spec)
    }

    /// Both parts with near-regular degrees carrying `b1` and `b2` edges.
    pub fn near_regular(v1: usize, v2: usize, b1: usize, b2: usize) -> Result<Self> {
        for (v, b) in [(v1, b1), (v2, b2)] {
            if b > v * v.saturating_sub(1) / 2 {
                return Err(Error::Infeasible(format!("{b} edges do not fit in a part of {v} vertices")));
            }
        }
        let mut phi = near_regular_degrees(v1, b1);
        phi.extend(near_regular_degrees(v2, b2));
        Ok(PartitionSpec { v1, v2, phi })
    }

    pub fn n(&self) -> usize {
        self.v1 + self.v2
    }

    pub fn part(&self, i: usize) -> &[usize] {
        match i {
            1 => &self.phi[..self.v1],
            2 => &self.phi[self.v1..],
            _ => panic!("parts are numbered 1 and 2"),
        }
    }

    pub fn part_size(&self, i: usize) -> usize {
        self.part(i).len()
    }

    /// Edges inside part `i`.
    pub fn bad_edges(&self, i: usize) -> usize {
        self.part(i).iter().sum::<usize>() / 2
    }

    pub fn validate(&self) -> Result<()> {
        if self.phi.len() != self.n() {
            return Err(Error::PreconditionViolated(format!(
                "phi has {} entries for {} vertices",
                self.phi.len(),
                self.n()
            )));
        }
        for i in [1, 2] {
            let part = self.part(i);
            if part.iter().sum::<usize>() % 2 != 0 {
                return Err(Error::PreconditionViolated(format!("odd degree sum in part {i}")));
            }
            if let Some(&d) = part.iter().find(|&&d| d >= part.len()) {
                return Err(Error::PreconditionViolated(format!(
                    "degree {d} in a part of {} vertices",
                    part.len()
                )));
            }
        }
        Ok(())
    }

    /// Whether `16 b_i <= v_i^2` in both parts.
    pub fn within_density_cap(&self) -> bool {
        [1, 2].iter().all(|&i| 16 * self.bad_edges(i) <= self.part_size(i).pow(2))
    }
}

/// `2b` spread over `v` vertices as evenly as possible, larger values first.
pub fn near_regular_degrees(v: usize, b: usize) -> Vec<usize> {
    if v == 0 {
        return Vec::new();
    }
    let (d, r) = (2 * b / v, 2 * b % v);
    let mut out = vec![d + 1; r];
    out.extend(std::iter::repeat(d).take(v - r));
    out
}

pub fn near_regular_profile(v: usize, b: usize) -> DegreeProfile {
    if v == 0 {
        return DegreeProfile::new(0, 0, 0, 0);
    }
    let (d, r) = (2 * b / v, 2 * b % v);
    DegreeProfile::new(r, d + 1, v - r, d)
}

/// Whether the near-regular profile of `b` edges on `v` vertices has a
/// triangle-free realization through [`super::realize_trifree`].
pub fn part_realizable(v: usize, b: usize) -> bool {
    if b > v * v.saturating_sub(1) / 2 {
        return false;
    }
    v == 0 || plan_trifree(&near_regular_profile(v, b)).is_ok()
}

fn realize_part(degrees: &[usize]) -> Result<Graph> {
    let v = degrees.len();
    let b = degrees.iter().sum::<usize>() / 2;
    let g = plan_trifree(&near_regular_profile(v, b))?.build()?;
    // largest target degrees get the largest realized degrees
    let mut targets: Vec<usize> = (0..v).collect();
    targets.sort_by_key(|&j| std::cmp::Reverse(degrees[j]));
    let mut realized: Vec<usize> = (0..v).collect();
    let got = g.degrees();
    realized.sort_by_key(|&x| std::cmp::Reverse(got[x]));
    let mut perm = vec![0; v];
    for (&x, &j) in realized.iter().zip(&targets) {
        perm[x] = j;
    }
    g.relabel(&perm)
}

/// `K(V1, V2)` plus a triangle-free graph inside each part whose degrees are
/// the near-regular rounding of that part's `phi` sum. When `phi` is itself
/// near-regular every vertex gets exactly its `phi` degree.
pub fn build_hstar(spec: &PartitionSpec) -> Result<Graph> {
    spec.validate()?;
    let mut b = GraphBuilder::new(spec.n());
    b.add_complete_bipartite(0..spec.v1, spec.v1..spec.n())?;
    b.add_graph_at(&realize_part(spec.part(1))?, 0)?;
    b.add_graph_at(&realize_part(spec.part(2))?, spec.v1)?;
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_bowties, count_triangles};

    #[test]
    fn single_bad_edge() {
        let spec = PartitionSpec::new(4, 4, vec![1, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        let g = build_hstar(&spec).unwrap();
        assert_eq!(g.edge_count(), 17);
        assert_eq!(count_bowties(&g).unwrap(), 0);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn two_disjoint_bad_edges() {
        let spec = PartitionSpec::near_regular(4, 4, 2, 0).unwrap();
        assert_eq!(spec.phi, vec![1, 1, 1, 1, 0, 0, 0, 0]);
        let g = build_hstar(&spec).unwrap();
        assert_eq!(count_bowties(&g).unwrap(), 4);
    }

    #[test]
    fn path_in_three_vertex_part() {
        let spec = PartitionSpec::new(3, 2, vec![1, 2, 1, 0, 0]).unwrap();
        let g = build_hstar(&spec).unwrap();
        assert_eq!(g.degree(1).unwrap(), 4);
        assert_eq!(count_bowties(&g).unwrap(), 2);
    }

    #[test]
    fn parts_are_triangle_free() {
        let spec = PartitionSpec::near_regular(11, 9, 9, 4).unwrap();
        let g = build_hstar(&spec).unwrap();
        assert_eq!(g.edge_count(), 99 + 13);
        for (lo, hi) in [(0, 11), (11, 20)] {
            let part: Vec<usize> = (lo..hi).collect();
            assert_eq!(count_triangles(&g.induced(&part)).unwrap().triangles, 0);
        }
    }

    #[test]
    fn validation() {
        assert!(PartitionSpec::new(3, 2, vec![1, 0, 0, 0, 0]).is_err());
        assert!(PartitionSpec::new(3, 2, vec![1, 1]).is_err());
        assert!(PartitionSpec::near_regular(3, 2, 4, 0).is_err());
        assert!(PartitionSpec::near_regular(8, 8, 4, 0).unwrap().within_density_cap());
        assert!(!PartitionSpec::near_regular(4, 4, 2, 0).unwrap().within_density_cap());
    }

    #[test]
    fn near_regular_rounding() {
        assert_eq!(near_regular_degrees(3, 2), vec![2, 1, 1]);
        assert_eq!(near_regular_degrees(5, 0), vec![0; 5]);
        assert_eq!(near_regular_degrees(0, 0), Vec::<usize>::new());
        assert!(part_realizable(3, 2));
        assert!(!part_realizable(3, 3));
        assert!(part_realizable(0, 0));
    }
}
