//! Simple undirected graphs with 1-based, deletion-stable vertex labels.
//!
//! Vertex labels live in a fixed ambient universe 1..=n that never shrinks:
//! deleting vertices removes them from the active set but keeps every
//! survivor's label, so monomials built from subgraphs stay meaningful in the
//! original polynomial ring.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple graph. `ambient` is the universe size; `vertices` is the
/// set of active labels; edges are unordered pairs of active labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    ambient: usize,
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

/// On-disk JSON form: `{"n": <int>, "edges": [[i, j], ...]}` with 1-based
/// labels. `name` and `seed` are optional metadata used by fixture files.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Graph {
    /// Graph on the full vertex set 1..=n with the given edges.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Graph on 1..=n with no edges. `n = 0` gives the empty graph.
    pub fn edgeless(n: usize) -> Self {
        Self {
            ambient: n,
            vertices: (1..=n).collect(),
            edges: BTreeSet::new(),
        }
    }

    /// The path P_n with edges {1,2}, {2,3}, ..., {n-1,n}. Requires n >= 1.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        Self::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Self::new(n, edges)
    }

    fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidEdge { i, j });
        }
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.vertices.contains(&v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                label: v,
                n: self.ambient,
            })
        }
    }

    /// Size of the ambient variable universe (the original 1..=n).
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// N(v) or, with `closed`, N[v] = N(v) ∪ {v}.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        let mut out: BTreeSet<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        if closed {
            out.insert(v);
        }
        Ok(out)
    }

    /// Active vertices whose neighborhood induces a complete graph, ascending.
    /// Isolated vertices count as simplicial.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.is_simplicial(v))
            .collect()
    }

    fn is_simplicial(&self, v: usize) -> bool {
        let nbrs: Vec<usize> = self.neighborhood(v, false).unwrap().into_iter().collect();
        nbrs.iter()
            .enumerate()
            .all(|(k, &a)| nbrs[k + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// True iff the graph admits a perfect elimination ordering: repeatedly
    /// delete a simplicial vertex until nothing is left.
    pub fn is_chordal(&self) -> bool {
        let mut g = self.clone();
        while g.vertex_count() > 0 {
            let Some(v) = g.vertices().find(|&v| g.is_simplicial(v)) else {
                return false;
            };
            g = g
                .delete_vertices(&BTreeSet::from([v]))
                .expect("active vertex");
        }
        true
    }

    /// Induced subgraph on the active vertices minus `a`. Survivors keep
    /// their labels and the ambient universe is unchanged.
    pub fn delete_vertices(&self, a: &BTreeSet<usize>) -> Result<Graph> {
        for &v in a {
            self.check_vertex(v)?;
        }
        Ok(Graph {
            ambient: self.ambient,
            vertices: self.vertices.difference(a).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(i, j)| !a.contains(i) && !a.contains(j))
                .copied()
                .collect(),
        })
    }

    /// Canonical JSON form with edges in ascending order.
    pub fn to_json(&self) -> String {
        let file = GraphFile {
            name: None,
            n: self.ambient,
            edges: self.edges.iter().copied().collect(),
            seed: None,
        };
        serde_json::to_string(&file).expect("graph serialization cannot fail")
    }

    pub fn from_graph_file(file: &GraphFile) -> Result<Self> {
        Self::new(file.n, file.edges.iter().copied())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_graph_file(&file)
    }

    /// Plain-text form: first line `n`, then one `i j` pair per line.
    pub fn from_text(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let (Some(i), Some(j), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::Parse(format!("expected `i j`, got `{line}`")));
            };
            let i: usize = i
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex label `{i}`")))?;
            let j: usize = j
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex label `{j}`")))?;
            edges.push((i, j));
        }
        Self::new(n, edges)
    }

    /// Accepts either the JSON or the plain-text form, sniffing by the first
    /// non-whitespace character.
    pub fn from_file_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Self::from_json(s)
        } else {
            Self::from_text(s)
        }
    }
}

/// The diamond: K_4 minus the edge {1, 4}.
pub fn diamond() -> Graph {
    Graph::new(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).expect("static edge list")
}
