//! Exact maximum matching by memoized branch-and-bound.
//!
//! At the vertex counts this crate targets (n <= 24, usually far less) an
//! exhaustive search keyed on the set of still-available vertices is both
//! fast and obviously correct, so no augmenting-path machinery is used.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Maximum number of pairwise disjoint edges.
pub fn matching_number(g: &Graph) -> usize {
    let mut memo: HashMap<u32, usize> = HashMap::new();
    best(g, g.vertex_set(), &mut memo)
}

fn best(g: &Graph, avail: VertexSet, memo: &mut HashMap<u32, usize>) -> usize {
    // first available vertex with an available neighbor
    let v = match avail
        .iter()
        .find(|&v| g.neighbors(v).intersects(avail))
    {
        Some(v) => v,
        None => return 0,
    };
    if let Some(&cached) = memo.get(&avail.bits()) {
        return cached;
    }
    // leave v unmatched, or match it with each available neighbor
    let mut result = best(g, avail.without(v), memo);
    for u in g.neighbors(v).intersection(avail).iter() {
        result = result.max(1 + best(g, avail.without(v).without(u), memo));
    }
    memo.insert(avail.bits(), result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamilySpec;

    #[test]
    fn paths_and_books() {
        let p5 = GraphFamilySpec::Path(5).build().unwrap();
        assert_eq!(matching_number(&p5), 2);
        let b3 = GraphFamilySpec::Book(3).build().unwrap();
        assert_eq!(matching_number(&b3), 4);
        let e6 = GraphFamilySpec::Edgeless(6).build().unwrap();
        assert_eq!(matching_number(&e6), 0);
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=8 {
            let g = GraphFamilySpec::Complete(n).build().unwrap();
            assert_eq!(matching_number(&g), n / 2);
        }
    }

    #[test]
    fn additive_over_components() {
        let p3 = GraphFamilySpec::Path(3).build().unwrap();
        let p4 = GraphFamilySpec::Path(4).build().unwrap();
        let both = Graph::disjoint_union(&[p3.clone(), p4.clone()]).unwrap();
        assert_eq!(
            matching_number(&both),
            matching_number(&p3) + matching_number(&p4)
        );
    }
}
