//! Canonical forms for graphs on at most eight vertices.
//!
//! Vertices are first split into colour classes by iterated degree
//! refinement; the canonical form is the smallest upper-triangle bit string
//! over all orderings that list the classes in colour order. Refinement is
//! isomorphism-invariant, so isomorphic graphs get identical forms.

use crate::graph::Graph;

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes = |c: &[usize]| {
            let mut c = c.to_vec();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = classes(&next) == classes(&colour);
        colour = next;
        if stable {
            return colour;
        }
    }
}

fn encode(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn permutations_within(cells: &[Vec<usize>], k: usize, order: &mut Vec<usize>, best: &mut Option<u64>, g: &Graph) {
    if k == cells.len() {
        let code = encode(g, order);
        if best.map_or(true, |b| code > b) {
            *best = Some(code);
        }
        return;
    }
    let mut cell = cells[k].clone();
    let len = cell.len();
    heap_permute(&mut cell, len, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permutations_within(cells, k + 1, order, best, g);
        order.truncate(len);
    });
}

fn heap_permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(items, k - 1, visit);
        let j = if k % 2 == 0 { i } else { 0 };
        items.swap(j, k - 1);
    }
    heap_permute(items, k - 1, visit);
}

/// Canonical code of `g`: the number of vertices paired with the extremal
/// adjacency bit string.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    assert!(g.n() <= 11, "canonical forms are only computed for small graphs");
    let colour = refine(g);
    let top = colour.iter().copied().max().map_or(0, |c| c + 1);
    let cells: Vec<Vec<usize>> = (0..top)
        .map(|c| (0..g.n()).filter(|&v| colour[v] == c).collect())
        .filter(|c: &Vec<usize>| !c.is_empty())
        .collect();
    let mut best = None;
    permutations_within(&cells, 0, &mut Vec::with_capacity(g.n()), &mut best, g);
    (g.n(), best.unwrap_or(0))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_bowtie_free, Variant};

    #[test]
    fn relabelled_graphs_share_a_form() {
        let g = extremal_bowtie_free(7, Variant::LargerPart).unwrap();
        let h = g.relabel(&[6, 2, 4, 0, 1, 5, 3]).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(isomorphic(&g, &h));
    }

    #[test]
    fn odd_variants_differ() {
        let a = extremal_bowtie_free(5, Variant::LargerPart).unwrap();
        let b = extremal_bowtie_free(5, Variant::SmallerPart).unwrap();
        assert!(!isomorphic(&a, &b));
        let a = extremal_bowtie_free(6, Variant::LargerPart).unwrap();
        let b = extremal_bowtie_free(6, Variant::SmallerPart).unwrap();
        assert!(isomorphic(&a, &b));
    }

    #[test]
    fn cycles_and_paths() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let c5b = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(isomorphic(&c5, &c5b));
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!isomorphic(&p5, &star));
    }
}
