//! Rooted trees with cheap subtree removal.
//!
//! Peeling algorithms repeatedly carve subtrees off a rooted tree while the
//! produced schedules must keep referring to the original vertex ids, so
//! removal is implemented with per-vertex alive flags instead of re-indexing.

use crate::error::{Error, Result};
use crate::graph::{Dist, Graph};

/// A rooted view of a tree on (a subset of) a host graph's vertex ids.
///
/// Depths are fixed at construction; `alive` tracks membership after
/// removals. The alive set is always a connected subtree containing the root
/// (or empty).
#[derive(Debug, Clone)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    alive: Vec<bool>,
    alive_count: usize,
}

impl RootedTree {
    /// Builds a tree from a parent array over ids `0..parents.len()`.
    /// Exactly one vertex (the root) has no parent; ids not mentioned as a
    /// parent and without one of their own must not occur — every slot is a
    /// member.
    pub fn from_parents(root: usize, parents: Vec<Option<usize>>) -> Result<RootedTree> {
        let n = parents.len();
        if root >= n || parents[root].is_some() {
            return Err(Error::InvalidArgument(
                "root must be a member without a parent".into(),
            ));
        }
        let mut children = vec![Vec::new(); n];
        for (v, &p) in parents.iter().enumerate() {
            match p {
                Some(p) if p < n => children[p].push(v),
                Some(p) => {
                    return Err(Error::InvalidArgument(format!(
                        "parent {p} of vertex {v} out of range"
                    )))
                }
                None if v != root => {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {v} has no parent but is not the root"
                    )))
                }
                None => {}
            }
        }
        for list in &mut children {
            list.sort_unstable();
        }
        // depth by BFS from the root; rejects cycles and unreachable parts
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut reached = 0usize;
        while let Some(v) = queue.pop_front() {
            reached += 1;
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
                queue.push_back(c);
            }
        }
        if reached != n {
            return Err(Error::InvalidArgument(
                "parent array contains a cycle or unreachable vertices".into(),
            ));
        }
        Ok(RootedTree {
            root,
            parent: parents,
            children,
            depth,
            alive: vec![true; n],
            alive_count: n,
        })
    }

    /// Breadth-first spanning tree of a connected graph, exploring neighbors
    /// in ascending id order so the result is deterministic. The depth of
    /// every vertex equals its graph distance from the root.
    pub fn spanning(g: &Graph, root: usize) -> Result<RootedTree> {
        if root >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: g.n(),
            });
        }
        let dist = g.bfs_distances(root)?;
        if let Some(unreachable) = g.vertices().find(|&v| dist[v] == Dist::Infinite) {
            return Err(Error::Disconnected {
                unreachable,
                from: root,
            });
        }
        let mut parent = vec![None; g.n()];
        let mut seen = vec![false; g.n()];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        RootedTree::from_parents(root, parent)
    }

    /// Size of the id space (alive or not).
    pub fn n_host(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn is_empty(&self) -> bool {
        self.alive_count == 0
    }

    pub fn is_alive(&self, v: usize) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    pub fn parent_of(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Alive children of `v`, ascending.
    pub fn children(&self, v: usize) -> Vec<usize> {
        self.children[v]
            .iter()
            .copied()
            .filter(|&c| self.alive[c])
            .collect()
    }

    /// Alive vertices, ascending.
    pub fn alive_vertices(&self) -> Vec<usize> {
        (0..self.n_host()).filter(|&v| self.alive[v]).collect()
    }

    /// Height of the alive tree: max alive depth (the root has depth 0).
    /// `None` when empty.
    pub fn height(&self) -> Option<usize> {
        (0..self.n_host())
            .filter(|&v| self.alive[v])
            .map(|v| self.depth[v])
            .max()
    }

    /// The deepest alive vertex, minimum id among ties.
    pub fn deepest_vertex(&self) -> Option<usize> {
        let h = self.height()?;
        (0..self.n_host()).find(|&v| self.alive[v] && self.depth[v] == h)
    }

    /// Walks `steps` parent links from `v` in the full tree structure
    /// (through removed vertices as well).
    pub fn ancestor(&self, v: usize, steps: usize) -> Result<usize> {
        let mut cur = v;
        for _ in 0..steps {
            cur = self.parent[cur].ok_or_else(|| {
                Error::InvalidArgument(format!("vertex {v} has fewer than {steps} ancestors"))
            })?;
        }
        Ok(cur)
    }

    /// Heights of the alive subtrees: `heights[v]` is the eccentricity of
    /// `v` within the subtree of alive descendants of `v`, `None` for dead
    /// vertices.
    pub fn subtree_heights(&self) -> Vec<Option<usize>> {
        let mut heights = vec![None; self.n_host()];
        // process deepest-first so children are done before parents
        let mut order: Vec<usize> = (0..self.n_host()).filter(|&v| self.alive[v]).collect();
        order.sort_unstable_by_key(|&v| std::cmp::Reverse(self.depth[v]));
        for v in order {
            let h = self.children(v)
                .into_iter()
                .filter_map(|c| heights[c])
                .map(|h| h + 1)
                .max()
                .unwrap_or(0);
            heights[v] = Some(h);
        }
        heights
    }

    /// The minimum-id alive vertex whose subtree has height exactly `d`, or
    /// `None` when the whole tree is lower than `d`. Whenever the tree's
    /// height is at least `d`, such a vertex exists (walk down from a
    /// deepest leaf).
    pub fn find_height_vertex(&self, d: usize) -> Option<usize> {
        let heights = self.subtree_heights();
        (0..self.n_host()).find(|&v| heights[v] == Some(d))
    }

    /// Alive vertices of the subtree rooted at `x`, including `x`, ascending.
    pub fn subtree_vertices(&self, x: usize) -> Result<Vec<usize>> {
        if !self.is_alive(x) {
            return Err(Error::InvalidArgument(format!(
                "vertex {x} is not alive in the tree"
            )));
        }
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children(v));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Removes the subtree rooted at `x`. With `keep_root` the vertex `x`
    /// itself survives as a leaf of the remainder.
    pub fn remove_subtree(&self, x: usize, keep_root: bool) -> Result<RootedTree> {
        let sub = self.subtree_vertices(x)?;
        let mut next = self.clone();
        for v in sub {
            if keep_root && v == x {
                continue;
            }
            next.alive[v] = false;
            next.alive_count -= 1;
        }
        Ok(next)
    }

    /// Distances from `v` inside the full tree structure (alive and removed
    /// vertices alike); `v` may itself be removed.
    pub fn full_distances(&self, v: usize) -> Vec<Dist> {
        let mut dist = vec![Dist::Infinite; self.n_host()];
        dist[v] = Dist::Finite(0);
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].finite().unwrap();
            let mut step = |w: usize, dist: &mut Vec<Dist>, queue: &mut std::collections::VecDeque<usize>| {
                if dist[w] == Dist::Infinite {
                    dist[w] = Dist::Finite(d + 1);
                    queue.push_back(w);
                }
            };
            if let Some(p) = self.parent[u] {
                step(p, &mut dist, &mut queue);
            }
            for &c in &self.children[u] {
                step(c, &mut dist, &mut queue);
            }
        }
        dist
    }

    /// The alive part as a graph on the host id space; removed vertices
    /// become isolated.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 0..self.n_host() {
            if !self.alive[v] {
                continue;
            }
            if let Some(p) = self.parent[v] {
                if self.alive[p] {
                    edges.push((p, v));
                }
            }
        }
        Graph::from_edges(self.n_host(), &edges).expect("tree edges are simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn spanning_cycle_ascending_rule() {
        // hand-run BFS on C_4 from 0 with ascending neighbor order
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = RootedTree::spanning(&g, 0).unwrap();
        assert_eq!(t.parent_of(1), Some(0));
        assert_eq!(t.parent_of(3), Some(0));
        assert_eq!(t.parent_of(2), Some(1));
        assert_eq!(t.depth(2), 2);
    }

    #[test]
    fn spanning_triangle_from_two() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = RootedTree::spanning(&g, 2).unwrap();
        assert_eq!(t.parent_of(0), Some(2));
        assert_eq!(t.parent_of(1), Some(2));
    }

    #[test]
    fn spanning_tree_input_unchanged() {
        let g = path_graph(5);
        let t = RootedTree::spanning(&g, 0).unwrap();
        for v in 1..5 {
            assert_eq!(t.parent_of(v), Some(v - 1));
        }
    }

    #[test]
    fn spanning_depth_equals_bfs_distance() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (4, 5), (1, 4)]).unwrap();
        let t = RootedTree::spanning(&g, 0).unwrap();
        let d = g.bfs_distances(0).unwrap();
        for v in g.vertices() {
            assert_eq!(Dist::Finite(t.depth(v)), d[v]);
        }
    }

    #[test]
    fn spanning_disconnected_names_unreachable() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        match RootedTree::spanning(&g, 0) {
            Err(Error::Disconnected { unreachable, from }) => {
                assert_eq!(unreachable, 2);
                assert_eq!(from, 0);
            }
            other => panic!("expected disconnected error, got {other:?}"),
        }
    }

    #[test]
    fn height_vertex_on_path() {
        let t = RootedTree::spanning(&path_graph(5), 0).unwrap();
        assert_eq!(t.find_height_vertex(1), Some(3));
        assert_eq!(t.find_height_vertex(7), None);
    }

    #[test]
    fn height_vertex_tie_breaks_by_id() {
        // perfect binary tree of depth 2: children of i are 2i+1, 2i+2
        let parents = vec![None, Some(0), Some(0), Some(1), Some(1), Some(2), Some(2)];
        let t = RootedTree::from_parents(0, parents).unwrap();
        assert_eq!(t.find_height_vertex(1), Some(1));
    }

    #[test]
    fn remove_subtree_variants() {
        let t = RootedTree::spanning(&path_graph(5), 0).unwrap();
        let cut = t.remove_subtree(3, false).unwrap();
        assert_eq!(cut.alive_vertices(), vec![0, 1, 2]);

        let kept = t.remove_subtree(3, true).unwrap();
        assert_eq!(kept.alive_vertices(), vec![0, 1, 2, 3]);
        assert!(kept.children(3).is_empty());

        let empty = t.remove_subtree(0, false).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.height(), None);

        // removing twice is an argument error
        assert!(cut.remove_subtree(3, false).is_err());
    }

    #[test]
    fn full_distances_ignore_alive_flags() {
        let t = RootedTree::spanning(&path_graph(5), 0).unwrap();
        let cut = t.remove_subtree(2, false).unwrap();
        let d = cut.full_distances(4);
        assert_eq!(d[0], Dist::Finite(4));
    }
}
