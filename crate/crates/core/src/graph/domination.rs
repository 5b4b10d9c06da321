//! Minimal dominating sets as minimal transversals of the closed
//! neighborhood hypergraph `{N[v] : v in V}`, enumerated by incremental
//! hitting-set construction with minimality filtering at every step.

use crate::graph::Graph;
use crate::vset::VertexSet;

/// True iff `s` meets every closed neighborhood.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    (1..=g.n()).all(|v| g.neighbors(v).with(v).intersects(s))
}

/// All inclusion-minimal dominating sets, sorted canonically.
pub fn minimal_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    let mut partial: Vec<VertexSet> = vec![VertexSet::EMPTY];
    for v in 1..=g.n() {
        let hyperedge = g.neighbors(v).with(v);
        let mut next = Vec::with_capacity(partial.len());
        for t in partial {
            if t.intersects(hyperedge) {
                next.push(t);
            } else {
                for u in hyperedge.iter() {
                    next.push(t.with(u));
                }
            }
        }
        prune_to_minimal(&mut next);
        partial = next;
    }
    partial.sort();
    partial
}

/// Drops every set that properly contains another member of the family.
fn prune_to_minimal(family: &mut Vec<VertexSet>) {
    family.sort_by_key(|s| s.len());
    family.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(family.len());
    for &s in family.iter() {
        if !kept.iter().any(|&t| t.is_subset_of(s)) {
            kept.push(s);
        }
    }
    *family = kept;
}

/// `(γ, γ')`: minimum and maximum cardinality over minimal dominating sets.
pub fn domination_numbers(g: &Graph) -> (usize, usize) {
    let sets = minimal_dominating_sets(g);
    let gamma = sets.iter().map(|s| s.len()).min().expect("n >= 1");
    let gamma_prime = sets.iter().map(|s| s.len()).max().expect("n >= 1");
    (gamma, gamma_prime)
}
