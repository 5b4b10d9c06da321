//! Enumeration of trees and small graphs up to isomorphism.
//!
//! Trees are generated one vertex at a time: every tree on `n` vertices
//! arises from a tree on `n-1` vertices by attaching a leaf, so growing all
//! extensions and deduplicating by a canonical form is exhaustive. The
//! canonical form is the classic center-rooted encoding: a rooted tree maps
//! to `"(" + sorted child encodings + ")"`, a unicentral tree to the
//! encoding at its center, and a bicentral tree to `"e"` followed by the two
//! center-side encodings in sorted order.
//!
//! Graphs on up to 6 vertices are enumerated by taking the minimum edge
//! mask over all vertex permutations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on tree enumeration size.
pub const MAX_TREE_VERTICES: usize = 12;

/// One representative per isomorphism class of trees on `n` vertices,
/// relabeled canonically and sorted by canonical id.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_VERTICES {
        return Err(Error::parameter(format!(
            "tree enumeration supports 1..={MAX_TREE_VERTICES} vertices, got {n}"
        )));
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert("()".to_string(), Graph::new(1, []).unwrap());
    for k in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in level.values() {
            for v in 1..k {
                let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                edges.push((v, k));
                let candidate = Graph::new(k, edges).unwrap();
                let id = tree_canonical_id(&candidate)?;
                next.entry(id.clone())
                    .or_insert_with(|| graph_from_tree_id(&id));
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Canonical isomorphism-invariant id of a tree.
pub fn tree_canonical_id(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::domain("canonical tree id requires a tree"));
    }
    let centers = tree_centers(g);
    match centers[..] {
        [c] => Ok(rooted_encoding(g, c, 0)),
        [a, b] => {
            let sa = rooted_encoding(g, a, b);
            let sb = rooted_encoding(g, b, a);
            if sa <= sb {
                Ok(format!("e{sa}{sb}"))
            } else {
                Ok(format!("e{sb}{sa}"))
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

fn rooted_encoding(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| rooted_encoding(g, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Centers of a tree by iterated leaf stripping.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (1..=n).collect();
    }
    let mut deg: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect();
    let mut removed = vec![false; n + 1];
    let mut remaining = n;
    let mut layer: Vec<usize> = (1..=n).filter(|&v| deg[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v).iter() {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (1..=n).filter(|&v| !removed[v]).collect()
}

/// Rebuilds the canonically-labeled tree from its id (preorder labels).
fn graph_from_tree_id(id: &str) -> Graph {
    let bytes = id.as_bytes();
    let mut edges = Vec::new();
    let mut next_label = 1usize;
    let mut pos = 0usize;
    if bytes[0] == b'e' {
        pos = 1;
        let a = parse_rooted(bytes, &mut pos, &mut next_label, &mut edges);
        let b = parse_rooted(bytes, &mut pos, &mut next_label, &mut edges);
        edges.push((a, b));
    } else {
        parse_rooted(bytes, &mut pos, &mut next_label, &mut edges);
    }
    assert_eq!(pos, bytes.len(), "trailing input in tree id `{id}`");
    Graph::new(next_label - 1, edges).expect("canonical tree id decodes to a graph")
}

fn parse_rooted(
    bytes: &[u8],
    pos: &mut usize,
    next_label: &mut usize,
    edges: &mut Vec<(usize, usize)>,
) -> usize {
    assert_eq!(bytes[*pos], b'(', "malformed tree id");
    *pos += 1;
    let me = *next_label;
    *next_label += 1;
    while bytes[*pos] == b'(' {
        let child = parse_rooted(bytes, pos, next_label, edges);
        edges.push((me, child));
    }
    assert_eq!(bytes[*pos], b')', "malformed tree id");
    *pos += 1;
    me
}

/// Hard cap on whole-graph enumeration size.
pub const MAX_ENUM_GRAPH_VERTICES: usize = 6;

/// One representative per isomorphism class of simple graphs on exactly `n`
/// vertices, found as the minimum edge mask over all vertex permutations.
/// Output is sorted by canonical mask.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUM_GRAPH_VERTICES {
        return Err(Error::parameter(format!(
            "graph enumeration supports 1..={MAX_ENUM_GRAPH_VERTICES} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    let mut pair_index = vec![vec![usize::MAX; n + 1]; n + 1];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }
    // bit remap table per permutation
    let remaps: Vec<Vec<u32>> = permutations(n)
        .into_iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| pair_index[p[u - 1]][p[v - 1]] as u32)
                .collect()
        })
        .collect();
    let mut canonical: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << m) {
        let mut best = mask;
        for remap in &remaps {
            let mut image = 0u32;
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                image |= 1 << remap[i];
                bits &= bits - 1;
            }
            best = best.min(image);
        }
        if best == mask {
            canonical.push(mask);
        }
    }
    Ok(canonical
        .into_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (1..=n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Number of isomorphism classes of trees on n = 1..=12 vertices.
    const TREE_COUNTS: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

    #[test]
    fn tree_counts_small() {
        for n in 1..=9 {
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len(), TREE_COUNTS[n - 1], "tree count at n={n}");
            for t in &trees {
                assert!(t.is_tree());
                assert_eq!(t.n(), n);
            }
        }
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(13).is_err());
    }

    #[test]
    fn canonical_id_is_isomorphism_invariant() {
        // the two labelings of the 5-path
        let a = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let b = Graph::new(5, [(1, 2), (2, 5), (3, 4), (4, 5)]).unwrap();
        assert_eq!(
            tree_canonical_id(&a).unwrap(),
            tree_canonical_id(&b).unwrap()
        );
        // star vs path on 4 vertices differ
        let star = Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let path = Graph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_ne!(
            tree_canonical_id(&star).unwrap(),
            tree_canonical_id(&path).unwrap()
        );
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(tree_canonical_id(&c4).is_err());
    }

    /// Independent oracle: decode every labeled tree on `n` vertices from
    /// its parent sequence and deduplicate by minimum edge set over all
    /// vertex permutations.
    fn labeled_tree_classes_brute(n: usize) -> usize {
        use std::collections::BTreeSet;
        if n == 1 {
            return 1;
        }
        let perms = permutations(n);
        let mut classes: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        // iterate all pruefer sequences in {1..n}^(n-2)
        let seq_len = n - 2;
        let total = (n as u64).pow(seq_len as u32);
        for code in 0..total {
            let mut seq = Vec::with_capacity(seq_len);
            let mut c = code;
            for _ in 0..seq_len {
                seq.push((c % n as u64) as usize + 1);
                c /= n as u64;
            }
            let edges = pruefer_decode(n, &seq);
            let mut best: Option<Vec<(usize, usize)>> = None;
            for p in &perms {
                let mut mapped: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (p[u - 1], p[v - 1]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                mapped.sort_unstable();
                if best.as_ref().is_none_or(|b| &mapped < b) {
                    best = Some(mapped);
                }
            }
            classes.insert(best.unwrap());
        }
        classes.len()
    }

    fn pruefer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
        let mut degree = vec![1usize; n + 1];
        for &v in seq {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut used = vec![false; n + 1];
        for &v in seq {
            let leaf = (1..=n).find(|&u| degree[u] == 1 && !used[u]).unwrap();
            used[leaf] = true;
            edges.push((leaf.min(v), leaf.max(v)));
            degree[v] -= 1;
        }
        let rest: Vec<usize> = (1..=n).filter(|&u| !used[u] && degree[u] == 1).collect();
        edges.push((rest[0], rest[1]));
        edges
    }

    #[test]
    fn tree_enumeration_matches_pruefer_brute_force() {
        for n in 2..=7 {
            assert_eq!(
                enumerate_trees(n).unwrap().len(),
                labeled_tree_classes_brute(n),
                "pruefer oracle disagrees at n={n}"
            );
        }
    }

    #[test]
    fn graph_counts_small() {
        let expected = [1usize, 2, 4, 11, 34];
        for n in 1..=5 {
            let graphs = enumerate_graphs(n).unwrap();
            assert_eq!(graphs.len(), expected[n - 1], "graph count at n={n}");
        }
        assert!(enumerate_graphs(7).is_err());
    }
}
