//! Edge-disjoint decompositions of a graph into stars.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use super::BoundError;
use crate::graph::Graph;

/// A star subgraph: `center` joined to each vertex in `leaves`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StarPart {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl StarPart {
    pub fn edge_count(&self) -> usize {
        self.leaves.len()
    }

    /// A star with `k` edges has energy `2 sqrt(k)`.
    pub fn energy(&self) -> f64 {
        2.0 * (self.leaves.len() as f64).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarPartition {
    pub parts: Vec<StarPart>,
}

impl StarPartition {
    pub fn part_energies(&self) -> Vec<f64> {
        self.parts.iter().map(StarPart::energy).collect()
    }

    /// Sum of part energies. No validity check; see [`partition_energy_sum`].
    pub fn energy_sum(&self) -> f64 {
        self.parts.iter().map(StarPart::energy).sum()
    }

    fn canonicalize(&mut self) {
        for p in &mut self.parts {
            p.leaves.sort_unstable();
        }
        self.parts.sort();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {part} has no edges")]
    EmptyPart { part: usize },
    #[error("part {part} uses ({u}, {v}), which is not an edge of the graph")]
    NotAnEdge { part: usize, u: usize, v: usize },
    #[error("edge ({u}, {v}) appears in more than one part (parts must be edge-disjoint)")]
    SharedEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) is not covered by any part")]
    UncoveredEdge { u: usize, v: usize },
}

/// Rooted star partition of a tree: the root keeps all its neighbors, every
/// other vertex keeps its children. Leaves of the tree contribute no part.
///
/// The root is the lowest-indexed vertex of maximum degree.
pub fn star_partition(t: &Graph) -> Result<StarPartition, BoundError> {
    let root = (0..t.vertex_count())
        .max_by_key(|&v| (t.degree(v), std::cmp::Reverse(v)))
        .ok_or(BoundError::TooSmall { n: 0, min: 2 })?;
    star_partition_rooted(t, root)
}

/// Same construction as [`star_partition`] with an explicit root. The energy
/// sum is `2 sqrt(d(root)) + sum_{v != root} 2 sqrt(d(v) - 1)`, smallest when
/// the root has maximum degree.
pub fn star_partition_rooted(t: &Graph, root: usize) -> Result<StarPartition, BoundError> {
    let n = t.vertex_count();
    if n < 2 {
        return Err(BoundError::TooSmall { n, min: 2 });
    }
    if !t.is_tree() {
        return Err(BoundError::NotATree);
    }
    if root >= n {
        return Err(BoundError::Domain(format!("root {root} out of range")));
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut parts: Vec<StarPart> = (0..n)
        .filter_map(|v| {
            let leaves: Vec<usize> = t
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| v == root || w != parent[v])
                .collect();
            (!leaves.is_empty()).then_some(StarPart { center: v, leaves })
        })
        .collect();
    parts.sort();
    Ok(StarPartition { parts })
}

/// Result of [`merge_degree2_pairs`].
#[derive(Debug, Clone, PartialEq)]
pub struct PairMerge {
    pub partition: StarPartition,
    pub merges: usize,
}

impl PairMerge {
    /// Whether at least `e22 / 3` merges were made, which is what the
    /// paired tree bound assumes.
    pub fn certifies(&self, e22: usize) -> bool {
        3 * self.merges >= e22
    }
}

/// Greedily merges single-edge stars along paths of degree-2 vertices.
///
/// Edges `{a, b}` of `t` with `deg(a) = deg(b) = 2` are scanned in
/// `(min, max)` order. For an orientation `(u1, u2)` where the partition
/// holds the single-edge star `u1 -> u2` and the single-edge star
/// `u2 -> u3` (`u3 != u1`), both stars are replaced by the two-edge star
/// centered at `u2` with leaves `u1, u3`. Each merge lowers the energy sum by
/// `4 - 2 sqrt(2)`. Merged stars have two edges and never merge again, so a
/// merge consumes the pair itself and at most the two neighboring pairs
/// along the chain.
pub fn merge_degree2_pairs(t: &Graph, sp: &StarPartition) -> PairMerge {
    let n = t.vertex_count();
    let mut alive: Vec<Option<StarPart>> = sp.parts.iter().cloned().map(Some).collect();
    let mut by_center: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, p) in sp.parts.iter().enumerate() {
        if p.center < n {
            by_center[p.center].push(idx);
        }
    }
    let single_edge_part = |alive: &[Option<StarPart>], center: usize, leaf: Option<usize>| {
        by_center[center].iter().copied().find(|&idx| {
            alive[idx]
                .as_ref()
                .is_some_and(|p| p.leaves.len() == 1 && leaf.is_none_or(|l| p.leaves[0] == l))
        })
    };

    let mut merged = Vec::new();
    for (a, b) in t.edges() {
        if t.degree(a) != 2 || t.degree(b) != 2 {
            continue;
        }
        for (u1, u2) in [(a, b), (b, a)] {
            let Some(first) = single_edge_part(&alive, u1, Some(u2)) else {
                continue;
            };
            let Some(second) = single_edge_part(&alive, u2, None) else {
                continue;
            };
            let u3 = alive[second].as_ref().unwrap().leaves[0];
            if u3 == u1 {
                continue;
            }
            alive[first] = None;
            alive[second] = None;
            let mut leaves = vec![u1, u3];
            leaves.sort_unstable();
            merged.push(StarPart { center: u2, leaves });
            break;
        }
    }
    let merges = merged.len();
    let mut partition = StarPartition {
        parts: alive.into_iter().flatten().chain(merged).collect(),
    };
    partition.canonicalize();
    PairMerge { partition, merges }
}

/// Checks that `parts` is an edge partition of `g` and returns the sum of
/// the star energies, which bounds `energy(g)` from above.
pub fn partition_energy_sum(g: &Graph, parts: &StarPartition) -> Result<f64, PartitionError> {
    let mut seen = HashSet::with_capacity(g.edge_count());
    for (idx, p) in parts.parts.iter().enumerate() {
        if p.leaves.is_empty() {
            return Err(PartitionError::EmptyPart { part: idx });
        }
        for &l in &p.leaves {
            let (u, v) = (p.center.min(l), p.center.max(l));
            if !g.has_edge(u, v) {
                return Err(PartitionError::NotAnEdge { part: idx, u, v });
            }
            if !seen.insert((u, v)) {
                return Err(PartitionError::SharedEdge { u, v });
            }
        }
    }
    if seen.len() != g.edge_count() {
        let (u, v) = g.edges().find(|e| !seen.contains(e)).unwrap();
        return Err(PartitionError::UncoveredEdge { u, v });
    }
    Ok(parts.energy_sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{tree_star_bound, tree_star_bound_paired, PAIR_MERGE_SAVING};
    use crate::graph::{double_star, path, star};
    use crate::spectral::energy;

    fn part(center: usize, leaves: &[usize]) -> StarPart {
        StarPart {
            center,
            leaves: leaves.to_vec(),
        }
    }

    #[test]
    fn path4_partition() {
        let p4 = path(4).unwrap();
        let sp = star_partition(&p4).unwrap();
        // rooted at vertex 1
        assert_eq!(sp.parts, vec![part(1, &[0, 2]), part(2, &[3])]);
        let sum = partition_energy_sum(&p4, &sp).unwrap();
        assert!((sum - (2.0 * 2f64.sqrt() + 2.0)).abs() < 1e-12);
        assert!((sum - 4.828).abs() < 1e-3);
    }

    #[test]
    fn star_partition_of_star_is_whole_star() {
        let s = star(6).unwrap();
        let sp = star_partition(&s).unwrap();
        assert_eq!(sp.parts, vec![part(0, &[1, 2, 3, 4, 5])]);
        assert!((sp.energy_sum() - 2.0 * 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn root_tie_break_is_lowest_index() {
        let g = double_star(4, 4).unwrap();
        let sp = star_partition(&g).unwrap();
        let root_part = sp.parts.iter().find(|p| p.center == 0).unwrap();
        assert_eq!(root_part.leaves.len(), 4);
        let other = sp.parts.iter().find(|p| p.center == 1).unwrap();
        assert_eq!(other.leaves.len(), 3);
    }

    #[test]
    fn rooting_at_smaller_center() {
        // rooting S_{5,q} at the degree-5 center instead of the max-degree
        // center gives 2 sqrt(5) + 2 sqrt(q - 1), a valid but looser sum
        for q in 6..=10 {
            let g = double_star(5, q).unwrap();
            let sp = star_partition_rooted(&g, 0).unwrap();
            let expect = 2.0 * 5f64.sqrt() + 2.0 * ((q - 1) as f64).sqrt();
            assert!((partition_energy_sum(&g, &sp).unwrap() - expect).abs() < 1e-12);
            assert!(expect > tree_star_bound(&g.degrees()).unwrap());
        }
    }

    #[test]
    fn rejects_non_trees() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(star_partition(&g), Err(BoundError::NotATree));
        assert!(star_partition(&Graph::empty(1)).is_err());
    }

    #[test]
    fn merge_on_p6() {
        let p6 = path(6).unwrap();
        let sp = star_partition(&p6).unwrap();
        let pm = merge_degree2_pairs(&p6, &sp);
        assert_eq!(pm.merges, 1);
        assert!(pm.certifies(3));
        let sum = partition_energy_sum(&p6, &pm.partition).unwrap();
        assert!((sum - (sp.energy_sum() - PAIR_MERGE_SAVING)).abs() < 1e-12);
        assert!(sum <= 7.657 + 1e-3);
        assert!(sum <= tree_star_bound_paired(&p6.degrees(), 3).unwrap() + 1e-9);
        assert!(sum >= energy(&p6));
    }

    #[test]
    fn merge_leaves_star_unchanged() {
        let s = star(6).unwrap();
        let sp = star_partition(&s).unwrap();
        let pm = merge_degree2_pairs(&s, &sp);
        assert_eq!(pm.merges, 0);
        assert_eq!(pm.partition, sp);
    }

    #[test]
    fn merge_on_p4_is_impossible() {
        let p4 = path(4).unwrap();
        let pm = merge_degree2_pairs(&p4, &star_partition(&p4).unwrap());
        assert_eq!(pm.merges, 0);
        assert!(!pm.certifies(1));
    }

    /// Maximum number of pairwise compatible merges on a rooted path, by
    /// exhaustive search over subsets of candidate pairs.
    fn brute_force_max_merges(n: usize) -> usize {
        let p = path(n).unwrap();
        let sp = star_partition(&p).unwrap();
        // candidates: edges (u1, u1 + 1) where both stars are single edges
        let single: Vec<usize> = sp
            .parts
            .iter()
            .filter(|q| q.leaves.len() == 1)
            .map(|q| q.center)
            .collect();
        let cands: Vec<usize> = single
            .iter()
            .copied()
            .filter(|&u| single.contains(&(u + 1)))
            .collect();
        let k = cands.len();
        let mut best = 0;
        for mask in 0u32..(1 << k) {
            let chosen: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| cands[b]).collect();
            // two merges conflict if they share a star
            let ok = chosen.windows(2).all(|w| w[1] >= w[0] + 2);
            if ok {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn greedy_merges_on_paths() {
        for n in 4..=18 {
            let p = path(n).unwrap();
            let pm = merge_degree2_pairs(&p, &star_partition(&p).unwrap());
            assert_eq!(pm.merges, brute_force_max_merges(n), "P_{n}");
            if n >= 5 {
                assert!(pm.certifies(p.degree2_pair_count()), "P_{n}");
            }
            assert!(partition_energy_sum(&p, &pm.partition).is_ok());
        }
        let p50 = path(50).unwrap();
        let pm = merge_degree2_pairs(&p50, &star_partition(&p50).unwrap());
        assert!(pm.merges >= 16);
        assert_eq!(pm.merges, 23);
    }

    #[test]
    fn trivial_partition_of_a_star() {
        let s = star(9).unwrap();
        let whole = StarPartition {
            parts: vec![part(0, &[1, 2, 3, 4, 5, 6, 7, 8])],
        };
        let sum = partition_energy_sum(&s, &whole).unwrap();
        assert!((sum - energy(&s)).abs() < 1e-9);
    }

    #[test]
    fn invalid_partitions_name_the_violation() {
        let p4 = path(4).unwrap();
        let missing = StarPartition {
            parts: vec![part(1, &[0, 2])],
        };
        assert_eq!(
            partition_energy_sum(&p4, &missing),
            Err(PartitionError::UncoveredEdge { u: 2, v: 3 })
        );
        let shared = StarPartition {
            parts: vec![part(1, &[0, 2]), part(2, &[1, 3])],
        };
        assert_eq!(
            partition_energy_sum(&p4, &shared),
            Err(PartitionError::SharedEdge { u: 1, v: 2 })
        );
        let bogus = StarPartition {
            parts: vec![part(0, &[3])],
        };
        assert_eq!(
            partition_energy_sum(&p4, &bogus),
            Err(PartitionError::NotAnEdge { part: 0, u: 0, v: 3 })
        );
        let empty = StarPartition {
            parts: vec![part(0, &[])],
        };
        assert_eq!(
            partition_energy_sum(&p4, &empty),
            Err(PartitionError::EmptyPart { part: 0 })
        );
    }
}
