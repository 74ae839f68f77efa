//! Indexed view of a graph complex (the 1-skeleton of anything), plus the
//! searches the Lekkerkerker-Boland conditions need: chordless long cycles
//! and asteroidal triples.

use crate::complex::{Face, SimplicialComplex, VertexLabel};
use crate::{Error, Guards, Result};

/// Adjacency-list graph over the sorted vertex labels of a complex.
#[derive(Debug, Clone)]
pub(crate) struct Graph {
    pub labels: Vec<VertexLabel>,
    pub adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The 1-skeleton of a complex as a graph.
    pub fn from_complex(k: &SimplicialComplex) -> Graph {
        let labels: Vec<VertexLabel> = k.vertices().to_vec();
        let index = |v: &VertexLabel| labels.binary_search(v).expect("vertex of k");
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
        for j in k.facets() {
            let vs: Vec<usize> = j.iter().map(&index).collect();
            for (a, &u) in vs.iter().enumerate() {
                for &w in &vs[a + 1..] {
                    if !adj[u].contains(&w) {
                        adj[u].push(w);
                        adj[w].push(u);
                    }
                }
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Graph { labels, adj }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label_path(&self, path: &[usize]) -> Vec<VertexLabel> {
        path.iter().map(|&i| self.labels[i].clone()).collect()
    }

    /// Lexicographically-first shortest path from `s` to `t` inside the
    /// vertex set `allowed`, or None.
    pub fn bfs_path(&self, s: usize, t: usize, allowed: &[bool]) -> Option<Vec<usize>> {
        if !allowed[s] || !allowed[t] {
            return None;
        }
        let mut dist = vec![usize::MAX; self.n()];
        dist[t] = 0;
        let mut queue = std::collections::VecDeque::from([t]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if allowed[w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist[s] == usize::MAX {
            return None;
        }
        // walk from s greedily along decreasing distance-to-t, smallest
        // neighbor first: the lexicographically first shortest path
        let mut path = vec![s];
        let mut cur = s;
        while cur != t {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| allowed[w] && dist[w] + 1 == dist[cur])
                .expect("distance decreases somewhere");
            path.push(next);
            cur = next;
        }
        Some(path)
    }

    /// Connected-component ids restricted to `allowed` vertices.
    pub fn components(&self, allowed: &[bool]) -> Vec<Option<usize>> {
        let mut comp = vec![None; self.n()];
        let mut next_id = 0;
        for s in 0..self.n() {
            if !allowed[s] || comp[s].is_some() {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = Some(next_id);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if allowed[w] && comp[w].is_none() {
                        comp[w] = Some(next_id);
                        stack.push(w);
                    }
                }
            }
            next_id += 1;
        }
        comp
    }

    /// Vertices outside the closed neighborhood of `v`.
    pub fn outside_closed_neighborhood(&self, v: usize) -> Vec<bool> {
        let mut allowed = vec![true; self.n()];
        allowed[v] = false;
        for &w in &self.adj[v] {
            allowed[w] = false;
        }
        allowed
    }
}

/// A chordless cycle of length >= 4 in the 1-skeleton, if one exists.
/// Exhaustive DFS over induced paths, canonical order, guarded.
pub fn find_induced_long_cycle(
    g: &SimplicialComplex,
    guards: &Guards,
) -> Result<Option<Vec<VertexLabel>>> {
    let graph = Graph::from_complex(g);
    let mut budget = guards.search_nodes;
    for s in 0..graph.n() {
        let mut path = vec![s];
        let mut on_path = vec![false; graph.n()];
        on_path[s] = true;
        if let Some(cycle) = cycle_dfs(&graph, s, &mut path, &mut on_path, &mut budget)? {
            return Ok(Some(graph.label_path(&cycle)));
        }
    }
    Ok(None)
}

fn cycle_dfs(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    budget: &mut usize,
) -> Result<Option<Vec<usize>>> {
    if *budget == 0 {
        return Err(Error::SizeGuard("induced-cycle search budget".into()));
    }
    *budget -= 1;
    let last = *path.last().unwrap();
    for &w in &g.adj[last] {
        // s is the smallest vertex of the cycle; later vertices keep the
        // enumeration canonical and duplicate-free
        if w <= s || on_path[w] {
            continue;
        }
        // chordlessness: w may touch only the last path vertex; adjacency
        // to s closes a cycle once the path is long enough
        let chord = path.len() >= 2
            && path[1..path.len() - 1].iter().any(|&p| g.has_edge(w, p));
        if chord {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, s) {
            if path.len() >= 3 && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                return Ok(Some(cycle));
            }
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if let Some(found) = cycle_dfs(g, s, path, on_path, budget)? {
            return Ok(Some(found));
        }
        path.pop();
        on_path[w] = false;
    }
    Ok(None)
}

/// An asteroidal triple with its three avoiding paths, if one exists.
///
/// Cubic scan: (u,v,w) is asteroidal iff each pair lies in one component
/// of the graph minus the closed neighborhood of the third vertex.
pub fn find_asteroidal_triple(
    g: &SimplicialComplex,
) -> Option<([VertexLabel; 3], [Vec<VertexLabel>; 3])> {
    let graph = Graph::from_complex(g);
    let n = graph.n();
    let masks: Vec<Vec<bool>> = (0..n)
        .map(|v| graph.outside_closed_neighborhood(v))
        .collect();
    let comps: Vec<Vec<Option<usize>>> = (0..n).map(|v| graph.components(&masks[v])).collect();
    let same = |a: usize, b: usize, excl: usize| -> bool {
        matches!((comps[excl][a], comps[excl][b]), (Some(x), Some(y)) if x == y)
    };
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if same(u, v, w) && same(u, w, v) && same(v, w, u) {
                    let puv = graph.bfs_path(u, v, &masks[w]).expect("same component");
                    let puw = graph.bfs_path(u, w, &masks[v]).expect("same component");
                    let pvw = graph.bfs_path(v, w, &masks[u]).expect("same component");
                    return Some((
                        [
                            graph.labels[u].clone(),
                            graph.labels[v].clone(),
                            graph.labels[w].clone(),
                        ],
                        [
                            graph.label_path(&puv),
                            graph.label_path(&puw),
                            graph.label_path(&pvw),
                        ],
                    ));
                }
            }
        }
    }
    None
}
