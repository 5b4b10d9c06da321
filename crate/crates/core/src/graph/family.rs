//! Named graph families, their deterministic vertex labelings, and the
//! `family:args` DSL used by the CLI.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Recipe for one of the supported graph families.
///
/// Labeling conventions (fixed so that printed ideals are reproducible):
/// * `Path(n)`: vertices `1..=n` numbered along the path.
/// * `GeneralizedStar(arms)`: each arm is a path with `arms[i]` vertices, one
///   endpoint glued to the shared center. Arm vertices are labeled
///   consecutively starting from the free end; the center gets the highest
///   index. Every arm length must exceed 1.
/// * `Book(m)`: pages `x_0..x_m` map to `1..=m+1` and `y_0..y_m` to
///   `m+2..=2m+2`; edges are `{x_0,x_i}`, `{y_0,y_i}` for `i >= 1` and
///   `{x_i,y_i}` for all `i`.
/// * `CompleteMultipartite(parts)`: part sizes are sorted ascending and parts
///   are labeled consecutively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamilySpec {
    Path(usize),
    GeneralizedStar(Vec<usize>),
    Book(usize),
    CompleteMultipartite(Vec<usize>),
    Complete(usize),
    Edgeless(usize),
    DisjointUnion(Vec<GraphFamilySpec>),
    EdgeList { n: usize, edges: Vec<(usize, usize)> },
}

impl GraphFamilySpec {
    /// Parses the DSL: `path:5`, `gstar:3,3,4`, `book:3`, `kpartite:1,2,2`,
    /// `complete:4`, `edgeless:3`, `file:PATH`.
    pub fn parse(dsl: &str) -> Result<Self> {
        let (name, args) = dsl
            .split_once(':')
            .ok_or_else(|| Error::parameter(format!("malformed graph spec `{dsl}` (expected `family:args`)")))?;
        let parse_usize = |s: &str, what: &str| -> Result<usize> {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::parameter(format!("{what}: `{s}` is not a positive integer")))
        };
        let parse_list = |what: &str| -> Result<Vec<usize>> {
            args.split(',')
                .map(|tok| parse_usize(tok, what))
                .collect::<Result<Vec<_>>>()
        };
        let spec = match name {
            "path" => GraphFamilySpec::Path(parse_usize(args, "path length")?),
            "gstar" => GraphFamilySpec::GeneralizedStar(parse_list("gstar arm length")?),
            "book" => GraphFamilySpec::Book(parse_usize(args, "book page count")?),
            "kpartite" => {
                let mut parts = parse_list("kpartite part size")?;
                parts.sort_unstable();
                GraphFamilySpec::CompleteMultipartite(parts)
            }
            "complete" => GraphFamilySpec::Complete(parse_usize(args, "complete graph size")?),
            "edgeless" => GraphFamilySpec::Edgeless(parse_usize(args, "edgeless graph size")?),
            "file" => {
                let text = std::fs::read_to_string(args)?;
                let (n, edges) = parse_edge_list(&text)?;
                GraphFamilySpec::EdgeList { n, edges }
            }
            other => {
                return Err(Error::parameter(format!("unknown graph family `{other}`")));
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        match self {
            GraphFamilySpec::Path(n) | GraphFamilySpec::Complete(n) | GraphFamilySpec::Edgeless(n) => {
                if *n == 0 {
                    return Err(Error::parameter("size parameter must be >= 1"));
                }
            }
            GraphFamilySpec::Book(m) => {
                if *m == 0 {
                    return Err(Error::parameter("book page count must be >= 1"));
                }
            }
            GraphFamilySpec::GeneralizedStar(arms) => {
                if arms.is_empty() {
                    return Err(Error::parameter("gstar needs at least one arm"));
                }
                if let Some(bad) = arms.iter().find(|&&a| a <= 1) {
                    return Err(Error::parameter(format!(
                        "gstar arm length must be > 1, got {bad}"
                    )));
                }
            }
            GraphFamilySpec::CompleteMultipartite(parts) => {
                if parts.is_empty() {
                    return Err(Error::parameter("kpartite needs at least one part"));
                }
                if parts.contains(&0) {
                    return Err(Error::parameter("kpartite part size must be >= 1"));
                }
            }
            GraphFamilySpec::DisjointUnion(specs) => {
                if specs.is_empty() {
                    return Err(Error::parameter("disjoint union of zero graphs"));
                }
                for s in specs {
                    s.validate()?;
                }
            }
            GraphFamilySpec::EdgeList { .. } => {}
        }
        Ok(())
    }

    /// Builds the graph with the documented labeling.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            GraphFamilySpec::Path(n) => Graph::new(*n, (1..*n).map(|i| (i, i + 1))),
            GraphFamilySpec::Edgeless(n) => Graph::new(*n, []),
            GraphFamilySpec::Complete(n) => {
                let mut edges = Vec::new();
                for u in 1..=*n {
                    for v in u + 1..=*n {
                        edges.push((u, v));
                    }
                }
                Graph::new(*n, edges)
            }
            GraphFamilySpec::GeneralizedStar(arms) => {
                let n: usize = arms.iter().map(|a| a - 1).sum::<usize>() + 1;
                let center = n;
                let mut edges = Vec::new();
                let mut offset = 0;
                for &arm in arms {
                    let len = arm - 1; // vertices on this arm, center excluded
                    for i in 1..len {
                        edges.push((offset + i, offset + i + 1));
                    }
                    edges.push((offset + len, center));
                    offset += len;
                }
                Graph::new(n, edges)
            }
            GraphFamilySpec::Book(m) => {
                let x = |i: usize| i + 1;
                let y = |i: usize| m + 2 + i;
                let mut edges = Vec::new();
                for i in 1..=*m {
                    edges.push((x(0), x(i)));
                    edges.push((y(0), y(i)));
                }
                for i in 0..=*m {
                    edges.push((x(i), y(i)));
                }
                Graph::new(2 * m + 2, edges)
            }
            GraphFamilySpec::CompleteMultipartite(parts) => {
                let mut sorted = parts.clone();
                sorted.sort_unstable();
                let n: usize = sorted.iter().sum();
                // consecutive labels per part
                let mut part_of = vec![0usize; n + 1];
                let mut next = 1;
                for (pi, &sz) in sorted.iter().enumerate() {
                    for _ in 0..sz {
                        part_of[next] = pi;
                        next += 1;
                    }
                }
                let mut edges = Vec::new();
                for u in 1..=n {
                    for v in u + 1..=n {
                        if part_of[u] != part_of[v] {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::new(n, edges)
            }
            GraphFamilySpec::DisjointUnion(specs) => {
                let parts: Vec<Graph> = specs.iter().map(|s| s.build()).collect::<Result<_>>()?;
                Graph::disjoint_union(&parts)
            }
            GraphFamilySpec::EdgeList { n, edges } => Graph::new(*n, edges.iter().copied()),
        }
    }
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            GraphFamilySpec::Path(n) => write!(f, "path:{n}"),
            GraphFamilySpec::GeneralizedStar(a) => write!(f, "gstar:{}", join(a)),
            GraphFamilySpec::Book(m) => write!(f, "book:{m}"),
            GraphFamilySpec::CompleteMultipartite(p) => write!(f, "kpartite:{}", join(p)),
            GraphFamilySpec::Complete(n) => write!(f, "complete:{n}"),
            GraphFamilySpec::Edgeless(n) => write!(f, "edgeless:{n}"),
            GraphFamilySpec::DisjointUnion(specs) => {
                write!(f, "union(")?;
                for (k, s) in specs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            GraphFamilySpec::EdgeList { n, edges } => {
                write!(f, "edgelist:n={},m={}", n, edges.len())
            }
        }
    }
}

/// Parses the edge-list text format: first significant line is `n`, each
/// following line is `u v` (1-based); blank lines and `#` comments ignored.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::parameter("empty edge-list input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parameter(format!("expected vertex count on first line, got `{header}`")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut toks = line.split_whitespace();
        let (u, v) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::parameter(format!(
                    "expected `u v` on edge line, got `{line}`"
                )))
            }
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parameter(format!("bad vertex index `{s}`")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Ok((n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_family() {
        let g = GraphFamilySpec::Path(5).build().unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn book_one_is_a_four_cycle() {
        let g = GraphFamilySpec::Book(1).build().unwrap();
        // x0=1, x1=2, y0=3, y1=4
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn edgeless_family() {
        let g = GraphFamilySpec::Edgeless(3).build().unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn gstar_labels_center_last() {
        // arms of 3 and 3 vertices glue into a 5-vertex path with center 5
        let g = GraphFamilySpec::GeneralizedStar(vec![3, 3]).build().unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(1, 2), (2, 5), (3, 4), (4, 5)]);
        assert_eq!(g.degree(5), 2);
        assert!(GraphFamilySpec::GeneralizedStar(vec![2, 1]).build().is_err());
    }

    #[test]
    fn kpartite_sorts_parts() {
        let g = GraphFamilySpec::parse("kpartite:2,1,2").unwrap();
        assert_eq!(g, GraphFamilySpec::CompleteMultipartite(vec![1, 2, 2]));
        let built = g.build().unwrap();
        assert_eq!(built.n(), 5);
        assert_eq!(built.degree(1), 4); // the singleton part sees everyone
        let k22 = GraphFamilySpec::CompleteMultipartite(vec![2, 2])
            .build()
            .unwrap();
        assert_eq!(k22.num_edges(), 4);
    }

    #[test]
    fn dsl_round_trips() {
        for dsl in ["path:5", "gstar:3,3,4", "book:3", "kpartite:1,2,2", "complete:4", "edgeless:3"] {
            let spec = GraphFamilySpec::parse(dsl).unwrap();
            assert_eq!(spec.to_string(), dsl);
            spec.build().unwrap();
        }
        assert!(GraphFamilySpec::parse("blah:3").is_err());
        assert!(GraphFamilySpec::parse("path:0").is_err());
        assert!(GraphFamilySpec::parse("gstar:1,2").is_err());
    }

    #[test]
    fn edge_list_text() {
        let (n, edges) = parse_edge_list("# a comment\n5\n1 2\n2 3\n\n3 4\n4 5\n").unwrap();
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n1 2 3\n").is_err());
    }
}
