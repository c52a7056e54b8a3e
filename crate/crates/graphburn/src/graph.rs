//! Undirected simple graphs over integer vertex ids, with the distance
//! primitives every bound in this crate is built on.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A shortest-path distance. `Infinite` means unreachable and compares
/// greater than every finite value; it is never encoded as a large number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(usize),
    Infinite,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<usize> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => write!(f, "INF"),
        }
    }
}

/// An undirected simple graph on vertices `0..n`, possibly disconnected.
///
/// No self-loops, no duplicate edges; adjacency lists are kept sorted so
/// every traversal visits neighbors in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, validating the simple-graph
    /// invariants.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u} {v} references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} {}",
                    key.0, key.1
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Parses the text format: an optional header line `p <n> <m>`, then one
    /// edge `u v` per line. `#` starts a comment line; blank lines are
    /// ignored. Without a header, n is inferred as 1 + the largest id.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut declared: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut saw_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "p" {
                if saw_content || declared.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "header must be the first non-comment line".into(),
                    });
                }
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected 'p <n> <m>', got '{line}'"),
                    });
                }
                let n = parse_int(fields[1], line_no)?;
                let m = parse_int(fields[2], line_no)?;
                declared = Some((n, m));
                continue;
            }
            saw_content = true;
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected 'u v', got '{line}'"),
                });
            }
            let u = parse_int(fields[0], line_no)?;
            let v = parse_int(fields[1], line_no)?;
            edges.push((u, v));
        }
        let n = match declared {
            Some((n, m)) => {
                if m != edges.len() {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("header declares {m} edges, found {}", edges.len()),
                    });
                }
                n
            }
            None => edges
                .iter()
                .map(|&(u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0),
        };
        Graph::from_edges(n, &edges)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Exact shortest-path distances from `u`; unreachable vertices get
    /// `Dist::Infinite`.
    pub fn bfs_distances(&self, u: usize) -> Result<Vec<Dist>> {
        self.check_vertex(u)?;
        let mut dist = vec![Dist::Infinite; self.n()];
        dist[u] = Dist::Finite(0);
        let mut queue = VecDeque::new();
        queue.push_back(u);
        while let Some(v) = queue.pop_front() {
            let d = match dist[v] {
                Dist::Finite(d) => d,
                Dist::Infinite => unreachable!(),
            };
            for &w in &self.adj[v] {
                if dist[w] == Dist::Infinite {
                    dist[w] = Dist::Finite(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// The closed ball of radius `r` around `u`: all vertices within
    /// distance `r`, in ascending id order.
    pub fn ball(&self, u: usize, r: usize) -> Result<Vec<usize>> {
        let dist = self.bfs_distances(u)?;
        Ok(self
            .vertices()
            .filter(|&v| dist[v] <= Dist::Finite(r))
            .collect())
    }

    /// Eccentricities, radius, and a center vertex. On disconnected graphs
    /// the radius is `Infinite` and there is no center; ties among centers
    /// break toward the minimum id.
    pub fn metrics(&self) -> Result<GraphMetrics> {
        let mut ecc = Vec::with_capacity(self.n());
        for u in self.vertices() {
            let dist = self.bfs_distances(u)?;
            ecc.push(dist.into_iter().max().unwrap_or(Dist::Finite(0)));
        }
        let radius = ecc.iter().copied().min().unwrap_or(Dist::Infinite);
        let center = match radius {
            Dist::Finite(_) => ecc.iter().position(|&e| e == radius),
            Dist::Infinite => None,
        };
        Ok(GraphMetrics {
            eccentricity: ecc,
            radius,
            center,
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.bfs_distances(0)
            .map(|d| d.iter().all(|x| x.is_finite()))
            .unwrap_or(false)
    }

    /// Connected and has exactly n-1 edges.
    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_connected() && self.m == self.n() - 1
    }

    /// Emits the same text format `parse` accepts, with a header line.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.n(), self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }
}

fn parse_int(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("'{token}' is not a non-negative integer"),
    })
}

/// Output of [`Graph::metrics`].
#[derive(Debug, Clone)]
pub struct GraphMetrics {
    pub eccentricity: Vec<Dist>,
    pub radius: Dist,
    pub center: Option<usize>,
}
