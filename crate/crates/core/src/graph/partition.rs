//! Degree-based vertex partition: isolated vertices, leaves, support
//! vertices (degree >= 2 with a leaf neighbor), and the rest.

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Partition of `V(G)` into `V0 | V1 | V2 | V3` plus the subset `V1'` of
/// leaves whose unique neighbor is itself a leaf.
///
/// * `v0`: degree 0
/// * `v1`: degree 1
/// * `v2`: degree >= 2 with at least one degree-1 neighbor
/// * `v3`: degree >= 2 with no degree-1 neighbor
/// * `v1_prime`: leaves paired with a leaf; always of even size
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub v0: VertexSet,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub v3: VertexSet,
    pub v1_prime: VertexSet,
}

pub fn vertex_partition(g: &Graph) -> VertexPartition {
    let mut p = VertexPartition {
        v0: VertexSet::EMPTY,
        v1: VertexSet::EMPTY,
        v2: VertexSet::EMPTY,
        v3: VertexSet::EMPTY,
        v1_prime: VertexSet::EMPTY,
    };
    for v in g.vertices() {
        match g.degree(v) {
            0 => p.v0 = p.v0.with(v),
            1 => p.v1 = p.v1.with(v),
            _ => {
                if g.neighbors(v).iter().any(|u| g.degree(u) == 1) {
                    p.v2 = p.v2.with(v);
                } else {
                    p.v3 = p.v3.with(v);
                }
            }
        }
    }
    for v in p.v1.iter() {
        if g.neighbors(v).is_subset_of(p.v1) {
            p.v1_prime = p.v1_prime.with(v);
        }
    }
    debug_assert_eq!(p.v1_prime.len() % 2, 0);
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamilySpec;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn star_with_three_leaves() {
        // gstar with arms 2,2,2 is the star K_{1,3}, center = 4
        let g = GraphFamilySpec::GeneralizedStar(vec![2, 2, 2]).build().unwrap();
        let p = vertex_partition(&g);
        assert_eq!(p.v0, VertexSet::EMPTY);
        assert_eq!(p.v1, set(&[1, 2, 3]));
        assert_eq!(p.v2, set(&[4]));
        assert_eq!(p.v3, VertexSet::EMPTY);
        assert_eq!(p.v1_prime, VertexSet::EMPTY);
    }

    #[test]
    fn tiny_paths() {
        let p2 = GraphFamilySpec::Path(2).build().unwrap();
        let p = vertex_partition(&p2);
        assert_eq!(p.v1, set(&[1, 2]));
        assert_eq!(p.v1_prime, set(&[1, 2]));
        assert!(p.v0.is_empty() && p.v2.is_empty() && p.v3.is_empty());

        let p5 = GraphFamilySpec::Path(5).build().unwrap();
        let p = vertex_partition(&p5);
        assert_eq!(p.v1, set(&[1, 5]));
        assert_eq!(p.v2, set(&[2, 4]));
        assert_eq!(p.v3, set(&[3]));
        assert!(p.v0.is_empty());
        assert!(p.v1_prime.is_empty());
    }

    #[test]
    fn partition_covers_and_is_disjoint() {
        for spec in [
            GraphFamilySpec::Path(7),
            GraphFamilySpec::Book(2),
            GraphFamilySpec::Edgeless(4),
            GraphFamilySpec::CompleteMultipartite(vec![2, 3]),
        ] {
            let g = spec.build().unwrap();
            let p = vertex_partition(&g);
            let all = p.v0.union(p.v1).union(p.v2).union(p.v3);
            assert_eq!(all, g.vertex_set());
            let total = p.v0.len() + p.v1.len() + p.v2.len() + p.v3.len();
            assert_eq!(total, g.n());
            assert!(p.v1_prime.is_subset_of(p.v1));
        }
    }
}
