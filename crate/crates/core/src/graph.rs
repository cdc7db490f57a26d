//! Simple undirected graphs with a canonical vertex and edge order.
//!
//! Vertices are labeled `1..=n`. Edges are stored as `(u, v)` with `u < v`,
//! sorted lexicographically and deduplicated; an edge's position in that list
//! is its *edge index*, which fixes the order of every per-edge variable used
//! elsewhere in the crate.

use std::fmt;

use crate::error::{Error, Result};
use crate::nilalgebra::EdgeSet;

/// A vertex label, `1..=n`.
pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    /// `neighbors[v - 1]`, sorted ascending.
    neighbors: Vec<Vec<Vertex>>,
}

/// Edge-to-vertex incidence matrices, one row per edge in canonical order.
///
/// `c[i][j]` is 1 when vertex `j + 1` is an endpoint of edge `i`. `d` equals
/// `c` except that the smaller-labeled endpoint of each edge carries -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidencePair {
    pub c: Vec<Vec<i8>>,
    pub d: Vec<Vec<i8>>,
}

impl Graph {
    /// Builds a graph from arbitrary endpoint pairs. Pairs are canonicalized
    /// to `u < v`, sorted and deduplicated.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("loop edge {u}-{v}"),
                });
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(n, list))
    }

    fn from_canonical(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u - 1].push(v);
            neighbors[v - 1].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbors,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_canonical(n, (1..n).map(|u| (u, u + 1)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((1, n));
        Self::from_canonical(n, edges)
    }

    /// The `d`-dimensional hypercube; vertex `i + 1` is the bit string `i`.
    pub fn hypercube(d: u32) -> Self {
        let n = 1usize << d;
        let mut edges = Vec::new();
        for i in 0..n {
            for b in 0..d {
                let j = i ^ (1 << b);
                if i < j {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        Self::from_canonical(n, edges)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v - 1].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v
            && (1..=self.n).contains(&u)
            && self.neighbors[u - 1].binary_search(&v).is_ok()
    }

    /// Canonical index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![1];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Edges incident to `v`, as a set of canonical edge indices.
    pub fn incident_edges(&self, v: Vertex) -> Result<EdgeSet> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut set = EdgeSet::empty(self.size());
        for &w in self.neighbors(v) {
            // neighbors are always joined by a stored edge
            set.insert(self.edge_index(v, w).unwrap());
        }
        Ok(set)
    }

    /// Same vertex set; two vertices are adjacent iff they are not adjacent here.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.size());
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !self.is_adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_canonical(self.n, edges)
    }

    pub fn incidence_matrices(&self) -> IncidencePair {
        let mut c = vec![vec![0i8; self.n]; self.size()];
        let mut d = c.clone();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            c[i][u - 1] = 1;
            c[i][v - 1] = 1;
            d[i][u - 1] = -1;
            d[i][v - 1] = 1;
        }
        IncidencePair { c, d }
    }

    /// Serializes in the edge-list text format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex> {
    let v: usize = tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a positive integer, found {tok:?}"),
    })?;
    if v == 0 {
        return Err(Error::Parse {
            line,
            msg: "vertex labels start at 1".into(),
        });
    }
    Ok(v)
}

fn check_loop(u: Vertex, v: Vertex, line: usize) -> Result<()> {
    if u == v {
        return Err(Error::Parse {
            line,
            msg: format!("loop edge {u} {v}"),
        });
    }
    Ok(())
}

/// Parses the plain edge-list format.
///
/// Each non-comment line holds two positive integers `u v`. `#` starts a
/// comment. A header line `n <N>` declares the vertex count, which allows
/// isolated vertices; without it `n` is the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks[0] == "n" {
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line,
                    msg: "header must be `n <count>`".into(),
                });
            }
            if declared.is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "duplicate `n` header".into(),
                });
            }
            declared = Some(toks[1].parse().map_err(|_| Error::Parse {
                line,
                msg: format!("expected a vertex count, found {:?}", toks[1]),
            })?);
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected two vertices, found {} tokens", toks.len()),
            });
        }
        let u = parse_vertex(toks[0], line)?;
        let v = parse_vertex(toks[1], line)?;
        check_loop(u, v, line)?;
        edges.push((u.min(v), u.max(v), line));
    }
    let max_endpoint = edges.iter().map(|&(_, v, _)| v).max().unwrap_or(0);
    let n = match declared {
        Some(n) => {
            if let Some(&(_, v, line)) = edges.iter().find(|&&(_, v, _)| v > n) {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {v} exceeds declared n={n}"),
                });
            }
            n
        }
        None => max_endpoint,
    };
    Ok(Graph::from_canonical(
        n,
        edges.into_iter().map(|(u, v, _)| (u, v)).collect(),
    ))
}

/// Parses DIMACS: `c` comment lines, one `p edge <n> <m>` line, then `m`
/// lines `e <u> <v>`.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut problem: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if problem.is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: "duplicate problem line".into(),
                    });
                }
                if toks.len() != 4 {
                    return Err(Error::Parse {
                        line,
                        msg: "problem line must be `p edge <n> <m>`".into(),
                    });
                }
                let count = |t: &str| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("expected an integer, found {t:?}"),
                    })
                };
                problem = Some((count(toks[2])?, count(toks[3])?, line));
            }
            Some("e") => {
                let Some((n, _, _)) = problem else {
                    return Err(Error::Parse {
                        line,
                        msg: "edge line before problem line".into(),
                    });
                };
                if toks.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: "edge line must be `e <u> <v>`".into(),
                    });
                }
                let u = parse_vertex(toks[1], line)?;
                let v = parse_vertex(toks[2], line)?;
                check_loop(u, v, line)?;
                if u.max(v) > n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex {} exceeds n={n}", u.max(v)),
                    });
                }
                edges.push((u.min(v), u.max(v)));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown line type {other:?}"),
                })
            }
        }
    }
    let Some((n, m, line)) = problem else {
        return Err(Error::Parse {
            line: 0,
            msg: "missing problem line".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line,
            msg: format!("problem line declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_canonical(n, edges))
}
