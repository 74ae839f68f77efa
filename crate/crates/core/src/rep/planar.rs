//! Planarity with certificates: either a straight-line integer-grid drawing
//! that passes an exact no-crossing check, or a verified subdivision of K5
//! or K3,3.
//!
//! The decision runs Demoucron-Malgrange-Pertuiset embedding per
//! biconnected block. For the drawing, the graph is first augmented
//! (planarity-preservingly) to a 2-connected one, embedded, triangulated
//! face by face, and drawn with the canonical-ordering shift method, which
//! keeps all coordinates on a small integer grid. Certificates are
//! re-verified before being returned; a verification failure indicates a
//! bug, never a wrong verdict.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use crate::complex::{SimplicialComplex, VertexLabel};
use crate::{Error, Guards, Result};

/// Integer-grid straight-line drawing of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDrawing {
    pub coords: BTreeMap<VertexLabel, (i64, i64)>,
    /// Edges in canonical orientation (smaller label first).
    pub edges: Vec<(VertexLabel, VertexLabel)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside a host graph: branch vertices plus
/// internally disjoint connecting paths. For K3,3 the first three branch
/// vertices form one side of the bipartition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiSubgraph {
    pub kind: KuratowskiKind,
    pub branch: Vec<VertexLabel>,
    /// One entry per required branch pair: full path including endpoints.
    pub paths: Vec<Vec<VertexLabel>>,
}

/// Outcome of `planar_embed`: exactly one branch, both verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanarityResult {
    Drawing(PlanarDrawing),
    Obstruction(KuratowskiSubgraph),
}

/// Decides planarity of a graph complex and certifies the verdict.
pub fn planar_embed(g: &SimplicialComplex, guards: &Guards) -> Result<PlanarityResult> {
    assert!(
        g.dim().unwrap_or(0) <= 1,
        "planar_embed expects a graph complex"
    );
    let graph = Graph::from_complex(g);
    let edges: BTreeSet<(usize, usize)> = graph.edges().into_iter().collect();
    if is_planar_edges(graph.n(), &edges) {
        let drawing = draw_planar(&graph)?;
        if !verify_planar_drawing(g, &drawing) {
            return Err(Error::VerificationFailed(
                "planar drawing failed the exact crossing check".into(),
            ));
        }
        Ok(PlanarityResult::Drawing(drawing))
    } else {
        let cert = find_kuratowski(&graph, guards)?.ok_or_else(|| {
            Error::VerificationFailed(
                "graph is non-planar but no Kuratowski subdivision was found".into(),
            )
        })?;
        if !verify_kuratowski(g, &cert) {
            return Err(Error::VerificationFailed(
                "Kuratowski certificate failed verification".into(),
            ));
        }
        Ok(PlanarityResult::Obstruction(cert))
    }
}

// ---------------------------------------------------------------------
// planarity decision: blocks + DMP
// ---------------------------------------------------------------------

fn adjacency(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    adj
}

/// Planarity of an arbitrary graph: every biconnected block must embed.
fn is_planar_edges(n: usize, edges: &BTreeSet<(usize, usize)>) -> bool {
    for block in blocks(n, edges) {
        let vs: BTreeSet<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        let nb = vs.len();
        let mb = block.len();
        if nb >= 3 {
            if mb > 3 * nb - 6 {
                return false;
            }
            // relabel block into 0..nb
            let order: Vec<usize> = vs.iter().copied().collect();
            let pos: BTreeMap<usize, usize> =
                order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let bedges: BTreeSet<(usize, usize)> = block
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (pos[&u], pos[&v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            if dmp_embed(nb, &bedges).is_none() {
                return false;
            }
        }
    }
    true
}

/// Biconnected components as edge sets (Tarjan/Hopcroft).
fn blocks(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<(usize, usize)>> {
    let adj = adjacency(n, edges);
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut timer = 1usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    fn dfs(
        u: usize,
        parent: Option<usize>,
        adj: &[Vec<usize>],
        disc: &mut [usize],
        low: &mut [usize],
        timer: &mut usize,
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        disc[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        for &w in &adj[u] {
            if disc[w] == 0 {
                stack.push((u, w));
                dfs(w, Some(u), adj, disc, low, timer, stack, out);
                low[u] = low[u].min(low[w]);
                if low[w] >= disc[u] {
                    let mut comp = Vec::new();
                    while let Some(e) = stack.pop() {
                        let done = e == (u, w);
                        comp.push((e.0.min(e.1), e.0.max(e.1)));
                        if done {
                            break;
                        }
                    }
                    out.push(comp);
                }
            } else if Some(w) != parent && disc[w] < disc[u] {
                stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        }
    }

    for s in 0..n {
        if disc[s] == 0 {
            dfs(
                s, None, &adj, &mut disc, &mut low, &mut timer, &mut stack, &mut out,
            );
        }
    }
    out
}

/// Cut vertices of the graph.
fn cut_vertices(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<usize> {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for block in blocks(n, edges) {
        let vs: BTreeSet<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        for v in vs {
            *count.entry(v).or_insert(0) += 1;
        }
    }
    count
        .into_iter()
        .filter(|&(_, c)| c >= 2)
        .map(|(v, _)| v)
        .collect()
}

/// DMP planar embedding of a 2-connected graph on >= 3 vertices: the list
/// of face cycles, or None when no embedding exists.
fn dmp_embed(n: usize, edges: &BTreeSet<(usize, usize)>) -> Option<Vec<Vec<usize>>> {
    let adj = adjacency(n, edges);
    let cycle = some_cycle(&adj)?;
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut emb_v = vec![false; n];
    for &v in &cycle {
        emb_v[v] = true;
    }
    let mut emb_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_e.insert((u.min(v), u.max(v)));
    }

    while emb_e.len() < edges.len() {
        let fragments = compute_fragments(n, edges, &adj, &emb_v, &emb_e);
        debug_assert!(!fragments.is_empty());
        // admissible faces per fragment
        let mut chosen: Option<(&Fragment, usize)> = None;
        for frag in &fragments {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((frag, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((frag, admissible[0]));
                    }
                }
            }
        }
        let (frag, face_idx) = chosen.expect("some fragment exists");
        let path = frag.alpha_path(&adj, &emb_v);
        // embed the path, splitting the face
        for &v in &path {
            emb_v[v] = true;
        }
        for w in path.windows(2) {
            emb_e.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        let face = faces.swap_remove(face_idx);
        let iu = face.iter().position(|&w| w == path[0]).expect("attachment");
        let iv = face
            .iter()
            .position(|&w| w == *path.last().expect("nonempty"))
            .expect("attachment");
        let mut arc_a = Vec::new(); // from path start to path end along the face
        let mut i = iu;
        loop {
            arc_a.push(face[i]);
            if i == iv {
                break;
            }
            i = (i + 1) % face.len();
        }
        let mut arc_b = Vec::new(); // the complementary arc
        let mut i = iv;
        loop {
            arc_b.push(face[i]);
            if i == iu {
                break;
            }
            i = (i + 1) % face.len();
        }
        let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut f1 = arc_a;
        f1.extend(interior.iter().rev());
        let mut f2 = arc_b;
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

/// Any cycle in the graph, via DFS back edges.
fn some_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 new, 1 active, 2 done
    for s in 0..n {
        if state[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        state[s] = 1;
        while let Some(&mut (u, ref mut it)) = stack.last_mut() {
            if *it >= adj[u].len() {
                state[u] = 2;
                stack.pop();
                continue;
            }
            let w = adj[u][*it];
            *it += 1;
            if state[w] == 0 {
                parent[w] = u;
                state[w] = 1;
                stack.push((w, 0));
            } else if state[w] == 1 && parent[u] != w {
                // back edge u -> w: walk parents from u to w
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return Some(cycle);
            }
        }
    }
    None
}

struct Fragment {
    attachments: Vec<usize>,
    interior: Vec<usize>,
    /// For bare-edge fragments, the edge itself.
    edge: Option<(usize, usize)>,
}

impl Fragment {
    /// A path through the fragment between two distinct attachments.
    fn alpha_path(&self, adj: &[Vec<usize>], emb_v: &[bool]) -> Vec<usize> {
        if let Some((u, v)) = self.edge {
            return vec![u, v];
        }
        let start = self.attachments[0];
        // BFS from start through interior vertices until another attachment
        let inside: BTreeSet<usize> = self.interior.iter().copied().collect();
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([start]);
        let mut seen: BTreeSet<usize> = BTreeSet::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if seen.contains(&w) {
                    continue;
                }
                // edges must stay inside the fragment: from start only into
                // the interior, and from the interior anywhere
                if u == start && !inside.contains(&w) {
                    continue;
                }
                if emb_v[w] && !inside.contains(&w) {
                    if w != start && self.attachments.contains(&w) {
                        // reached another attachment
                        let mut path = vec![w, u];
                        let mut x = u;
                        while x != start {
                            x = prev[&x];
                            path.push(x);
                        }
                        path.reverse();
                        return path;
                    }
                    continue;
                }
                seen.insert(w);
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
        unreachable!("a fragment of a 2-connected graph has two attachments");
    }
}

fn compute_fragments(
    n: usize,
    edges: &BTreeSet<(usize, usize)>,
    adj: &[Vec<usize>],
    emb_v: &[bool],
    emb_e: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut fragments = Vec::new();
    // bare edges between embedded vertices
    for &(u, v) in edges {
        if !emb_e.contains(&(u, v)) && emb_v[u] && emb_v[v] {
            fragments.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
                edge: Some((u, v)),
            });
        }
    }
    // components of non-embedded vertices
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if emb_v[s] || comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = next;
        let mut interior = vec![s];
        let mut attachments: BTreeSet<usize> = BTreeSet::new();
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if emb_v[w] {
                    attachments.insert(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = next;
                    interior.push(w);
                    stack.push(w);
                }
            }
        }
        interior.sort_unstable();
        fragments.push(Fragment {
            attachments: attachments.into_iter().collect(),
            interior,
            edge: None,
        });
        next += 1;
    }
    fragments.sort_by(|a, b| {
        (&a.attachments, &a.interior).cmp(&(&b.attachments, &b.interior))
    });
    fragments
}

// ---------------------------------------------------------------------
// straight-line drawing
// ---------------------------------------------------------------------

/// Draws a planar graph on an integer grid.
///
/// Augments to a 2-connected planar supergraph (new edges only, tested for
/// planarity before insertion), embeds, triangulates every face, computes a
/// canonical ordering and runs the shift method. The returned drawing keeps
/// only the original vertices and edges.
fn draw_planar(g: &Graph) -> Result<PlanarDrawing> {
    let n = g.n();
    let original_edges: Vec<(usize, usize)> = g.edges();
    let to_labels = |coords: Vec<(i64, i64)>| -> PlanarDrawing {
        PlanarDrawing {
            coords: coords
                .into_iter()
                .enumerate()
                .map(|(i, xy)| (g.labels[i].clone(), xy))
                .collect(),
            edges: original_edges
                .iter()
                .map(|&(u, v)| (g.labels[u].clone(), g.labels[v].clone()))
                .collect(),
        }
    };
    if n == 0 {
        return Ok(PlanarDrawing {
            coords: BTreeMap::new(),
            edges: Vec::new(),
        });
    }
    if n <= 2 {
        return Ok(to_labels((0..n as i64).map(|i| (i, 0)).collect()));
    }

    let mut edges: BTreeSet<(usize, usize)> = original_edges.iter().copied().collect();

    // connect the components (always planarity-preserving)
    loop {
        let comp = components_of(n, &edges);
        let mut reps: BTreeSet<usize> = BTreeSet::new();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for v in 0..n {
            if seen.insert(comp[v]) {
                reps.insert(v);
            }
        }
        let reps: Vec<usize> = reps.into_iter().collect();
        if reps.len() <= 1 {
            break;
        }
        edges.insert((reps[0].min(reps[1]), reps[0].max(reps[1])));
    }

    // make 2-connected: for a cut vertex, join two of its neighbors from
    // different blocks; some such pair always preserves planarity
    loop {
        let cuts = cut_vertices(n, &edges);
        let Some(&v) = cuts.first() else {
            break;
        };
        let bls = blocks(n, &edges);
        let mut added = false;
        let neighbor_blocks: Vec<Vec<usize>> = bls
            .iter()
            .filter(|b| b.iter().any(|&(x, y)| x == v || y == v))
            .map(|b| {
                let mut ns: Vec<usize> = b
                    .iter()
                    .filter_map(|&(x, y)| {
                        if x == v {
                            Some(y)
                        } else if y == v {
                            Some(x)
                        } else {
                            None
                        }
                    })
                    .collect();
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect();
        'pairs: for b1 in 0..neighbor_blocks.len() {
            for b2 in b1 + 1..neighbor_blocks.len() {
                for &u1 in &neighbor_blocks[b1] {
                    for &u2 in &neighbor_blocks[b2] {
                        let e = (u1.min(u2), u1.max(u2));
                        if edges.contains(&e) {
                            continue;
                        }
                        let mut trial = edges.clone();
                        trial.insert(e);
                        if is_planar_edges(n, &trial) {
                            edges = trial;
                            added = true;
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if !added {
            return Err(Error::VerificationFailed(
                "biconnectivity augmentation found no planar edge".into(),
            ));
        }
    }

    let faces = dmp_embed(n, &edges).ok_or_else(|| {
        Error::VerificationFailed("augmented planar graph failed to embed".into())
    })?;

    let (edges, triangles) = triangulate(n, edges, faces)?;
    let order = canonical_order(n, &edges, &triangles)?;
    let coords = shift_draw(n, &edges, &order)?;
    Ok(to_labels(coords))
}

fn components_of(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<usize> {
    let adj = adjacency(n, edges);
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Adds chords until every face is a triangle. The embedding stays valid
/// because each chord is drawn inside the face it splits.
fn triangulate(
    n: usize,
    mut edges: BTreeSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
) -> Result<(BTreeSet<(usize, usize)>, Vec<[usize; 3]>)> {
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut work: Vec<Vec<usize>> = faces;
    while let Some(mut face) = work.pop() {
        if face.len() < 3 {
            return Err(Error::VerificationFailed(format!(
                "embedding produced a face of length {}",
                face.len()
            )));
        }
        let mut idle = 0usize;
        while face.len() > 3 {
            let k = face.len();
            let (a, b, c) = (face[0], face[1], face[2]);
            let e = (a.min(c), a.max(c));
            if edges.contains(&e) {
                // chord exists elsewhere; slide the window
                face.rotate_left(1);
                idle += 1;
                if idle > k {
                    return Err(Error::VerificationFailed(
                        "face triangulation made no progress".into(),
                    ));
                }
                continue;
            }
            edges.insert(e);
            triangles.push([a, b, c]);
            face.remove(1);
            idle = 0;
        }
        triangles.push([face[0], face[1], face[2]]);
    }
    let _ = n;
    Ok((edges, triangles))
}

/// Canonical (shelling) order of a maximal planar graph: v1, v2 are two
/// outer vertices, and each later vertex sees a contiguous path of earlier
/// ones on the boundary. Computed by reverse deletion of boundary vertices
/// without chords.
fn canonical_order(
    n: usize,
    edges: &BTreeSet<(usize, usize)>,
    triangles: &[[usize; 3]],
) -> Result<Vec<usize>> {
    if n == 3 {
        return Ok(vec![0, 1, 2]);
    }
    let adj = adjacency(n, edges);
    // the outer face: canonically smallest triangle
    let mut sorted_faces: Vec<[usize; 3]> = triangles
        .iter()
        .map(|t| {
            let mut s = *t;
            s.sort_unstable();
            s
        })
        .collect();
    sorted_faces.sort_unstable();
    let outer = sorted_faces[0];
    let (v1, v2, vtop) = (outer[0], outer[1], outer[2]);
    // the disk structure is the sphere triangulation minus the outer face;
    // keeping the outer face would let fans short-circuit across it
    let disk: Vec<[usize; 3]> = triangles
        .iter()
        .filter(|t| {
            let mut s = **t;
            s.sort_unstable();
            s != outer
        })
        .copied()
        .collect();

    let mut alive = vec![true; n];
    let mut on_boundary = vec![false; n];
    // boundary as a cyclic doubly-linked list
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    for w in [v1, vtop, v2] {
        on_boundary[w] = true;
    }
    next[v1] = vtop;
    next[vtop] = v2;
    next[v2] = v1;
    prev[vtop] = v1;
    prev[v2] = vtop;
    prev[v1] = v2;

    let mut order_rev = Vec::with_capacity(n);
    let mut remaining = n;
    while remaining > 2 {
        // removable: on boundary, not v1/v2, exactly two boundary neighbors
        let mut pick = None;
        for v in 0..n {
            if !alive[v] || !on_boundary[v] || v == v1 || v == v2 {
                continue;
            }
            let boundary_neighbors = adj[v]
                .iter()
                .filter(|&&w| alive[w] && on_boundary[w])
                .count();
            if boundary_neighbors == 2 {
                pick = Some(v);
                break;
            }
        }
        let Some(v) = pick else {
            return Err(Error::VerificationFailed(
                "canonical ordering found no removable vertex".into(),
            ));
        };
        // the fan of v: its alive neighbors form a path from prev[v] to
        // next[v], successive ones sharing a triangle with v
        let cl = prev[v];
        let cr = next[v];
        let mut fan_adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for t in &disk {
            if t.contains(&v) && t.iter().all(|&x| alive[x]) {
                let rest: Vec<usize> = t.iter().copied().filter(|&x| x != v).collect();
                fan_adj.entry(rest[0]).or_default().push(rest[1]);
                fan_adj.entry(rest[1]).or_default().push(rest[0]);
            }
        }
        let mut fan = vec![cl];
        let mut prev_f = usize::MAX;
        let mut cur = cl;
        while cur != cr {
            let step = fan_adj
                .get(&cur)
                .and_then(|ns| ns.iter().find(|&&x| x != prev_f).copied())
                .ok_or_else(|| {
                    Error::VerificationFailed("broken fan in canonical ordering".into())
                })?;
            fan.push(step);
            prev_f = cur;
            cur = step;
        }
        // splice the fan in place of v
        alive[v] = false;
        on_boundary[v] = false;
        for w in fan.windows(2) {
            next[w[0]] = w[1];
            prev[w[1]] = w[0];
            on_boundary[w[0]] = true;
            on_boundary[w[1]] = true;
        }
        order_rev.push(v);
        remaining -= 1;
    }
    // deletions ran vn, v_{n-1}, .., v3; the order starts with the base edge
    let mut order = vec![v1, v2];
    order_rev.reverse();
    order.extend(order_rev);
    Ok(order)
}

/// Shift-method coordinates for a triangulated planar graph in canonical
/// order: grid at most (2n-4) x (n-2), all integers.
fn shift_draw(n: usize, edges: &BTreeSet<(usize, usize)>, order: &[usize]) -> Result<Vec<(i64, i64)>> {
    assert!(n >= 3 && order.len() == n);
    let adj = adjacency(n, edges);
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut x = vec![0i64; n];
    let mut y = vec![0i64; n];
    // L(v): the vertices that shift together with v
    let mut under: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();

    let (v1, v2, v3) = (order[0], order[1], order[2]);
    x[v1] = 0;
    y[v1] = 0;
    x[v2] = 2;
    y[v2] = 0;
    x[v3] = 1;
    y[v3] = 1;
    let mut contour: Vec<usize> = vec![v1, v3, v2];

    for k in 3..n {
        let v = order[k];
        // the placed neighbors of v form a contiguous contour segment
        let hits: Vec<usize> = contour
            .iter()
            .enumerate()
            .filter(|(_, &w)| rank[w] < k && adj[v].binary_search(&w).is_ok())
            .map(|(i, _)| i)
            .collect();
        let p = *hits.first().ok_or_else(|| {
            Error::VerificationFailed("canonical order vertex sees no contour vertex".into())
        })?;
        let q = *hits.last().expect("nonempty");
        if hits.len() != q - p + 1 || q == p {
            return Err(Error::VerificationFailed(
                "cover on the contour is not a contiguous segment".into(),
            ));
        }
        // shift: strictly inside the cover by 1, from w_q rightwards by 2
        for &wi in &contour[p + 1..q] {
            for &u in &under[wi] {
                x[u] += 1;
            }
        }
        for &wi in &contour[q..] {
            for &u in &under[wi] {
                x[u] += 2;
            }
        }
        let (wp, wq) = (contour[p], contour[q]);
        let sx = x[wp] + x[wq] + y[wq] - y[wp];
        let sy = x[wq] - x[wp] + y[wp] + y[wq];
        if sx % 2 != 0 || sy % 2 != 0 {
            return Err(Error::VerificationFailed(
                "shift method produced a non-integer position".into(),
            ));
        }
        x[v] = sx / 2;
        y[v] = sy / 2;
        // v absorbs the strictly covered contour vertices
        let absorbed: Vec<usize> = contour[p + 1..q].to_vec();
        for w in absorbed {
            let moved = std::mem::take(&mut under[w]);
            under[v].extend(moved);
        }
        contour.splice(p + 1..q, [v]);
    }
    Ok((0..n).map(|v| (x[v], y[v])).collect())
}

// ---------------------------------------------------------------------
// Kuratowski subdivisions
// ---------------------------------------------------------------------

/// Exhaustive search for a K5 or K3,3 subdivision, guarded by a node
/// budget. Returns Ok(None) only when the complete search space is
/// exhausted without finding one.
fn find_kuratowski(g: &Graph, guards: &Guards) -> Result<Option<KuratowskiSubgraph>> {
    let n = g.n();
    let mut budget = guards.search_nodes;

    let deg_at_least = |d: usize| -> Vec<usize> {
        (0..n).filter(|&v| g.adj[v].len() >= d).collect()
    };

    // K5: five branch vertices of degree >= 4, all ten pairs joined
    let cand5 = deg_at_least(4);
    let mut choice = Vec::new();
    let mut found = None;
    combinations(&cand5, 5, &mut choice, &mut |branch: &[usize]| {
        if found.is_some() {
            return Ok(());
        }
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .collect();
        if let Some(paths) = connect_pairs(g, branch, &pairs, &mut budget)? {
            found = Some(KuratowskiSubgraph {
                kind: KuratowskiKind::K5,
                branch: branch.iter().map(|&v| g.labels[v].clone()).collect(),
                paths: paths
                    .iter()
                    .map(|p| p.iter().map(|&v| g.labels[v].clone()).collect())
                    .collect(),
            });
        }
        Ok(())
    })?;
    if found.is_some() {
        return Ok(found);
    }

    // K3,3: two disjoint triples of degree >= 3, all nine cross pairs joined
    let cand3 = deg_at_least(3);
    let mut side_a = Vec::new();
    combinations(&cand3, 3, &mut side_a, &mut |a: &[usize]| {
        if found.is_some() {
            return Ok(());
        }
        let rest: Vec<usize> = cand3
            .iter()
            .copied()
            .filter(|v| !a.contains(v))
            .collect();
        let mut side_b = Vec::new();
        let a_owned = a.to_vec();
        combinations(&rest, 3, &mut side_b, &mut |b: &[usize]| {
            if found.is_some() {
                return Ok(());
            }
            // dedupe the unordered bipartition
            if b[0] < a_owned[0] {
                return Ok(());
            }
            let branch: Vec<usize> = a_owned.iter().chain(b).copied().collect();
            let pairs: Vec<(usize, usize)> = (0..3)
                .flat_map(|i| (3..6).map(move |j| (i, j)))
                .collect();
            if let Some(paths) = connect_pairs(g, &branch, &pairs, &mut budget)? {
                found = Some(KuratowskiSubgraph {
                    kind: KuratowskiKind::K33,
                    branch: branch.iter().map(|&v| g.labels[v].clone()).collect(),
                    paths: paths
                        .iter()
                        .map(|p| p.iter().map(|&v| g.labels[v].clone()).collect())
                        .collect(),
                });
            }
            Ok(())
        })
    })?;
    Ok(found)
}

fn combinations(
    pool: &[usize],
    size: usize,
    acc: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if acc.len() == size {
        return visit(acc);
    }
    let start = acc
        .last()
        .map_or(0, |&l| pool.iter().position(|&p| p == l).unwrap() + 1);
    for i in start..pool.len() {
        if pool.len() - i < size - acc.len() {
            break;
        }
        acc.push(pool[i]);
        combinations(pool, size, acc, visit)?;
        acc.pop();
    }
    Ok(())
}

/// Tries to join every required branch pair by internally disjoint paths
/// avoiding the other branch vertices. Backtracking over path choices.
fn connect_pairs(
    g: &Graph,
    branch: &[usize],
    pairs: &[(usize, usize)],
    budget: &mut usize,
) -> Result<Option<Vec<Vec<usize>>>> {
    let mut used = vec![false; g.n()];
    let is_branch: Vec<bool> = {
        let mut b = vec![false; g.n()];
        for &v in branch {
            b[v] = true;
        }
        b
    };
    let mut paths: Vec<Vec<usize>> = Vec::new();
    if rec_pairs(g, branch, pairs, 0, &is_branch, &mut used, &mut paths, budget)? {
        Ok(Some(paths))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn rec_pairs(
    g: &Graph,
    branch: &[usize],
    pairs: &[(usize, usize)],
    idx: usize,
    is_branch: &[bool],
    used: &mut Vec<bool>,
    paths: &mut Vec<Vec<usize>>,
    budget: &mut usize,
) -> Result<bool> {
    if idx == pairs.len() {
        return Ok(true);
    }
    let a = branch[pairs[idx].0];
    paths.push(vec![a]);
    let ok = extend_path(g, branch, pairs, idx, is_branch, used, paths, budget)?;
    if !ok {
        paths.pop();
    }
    Ok(ok)
}

/// Extends the path under construction (the last entry of `paths`) towards
/// its pair's target, enumerating interior vertices that are neither branch
/// vertices nor used by earlier paths; recurses into the next pair when the
/// target is reached.
#[allow(clippy::too_many_arguments)]
fn extend_path(
    g: &Graph,
    branch: &[usize],
    pairs: &[(usize, usize)],
    idx: usize,
    is_branch: &[bool],
    used: &mut Vec<bool>,
    paths: &mut Vec<Vec<usize>>,
    budget: &mut usize,
) -> Result<bool> {
    if *budget == 0 {
        return Err(Error::SizeGuard("Kuratowski search budget".into()));
    }
    *budget -= 1;
    let target = branch[pairs[idx].1];
    let last = *paths[idx].last().expect("path starts at a branch vertex");
    for &w in &g.adj[last] {
        if w == target {
            paths[idx].push(w);
            if rec_pairs(g, branch, pairs, idx + 1, is_branch, used, paths, budget)? {
                return Ok(true);
            }
            paths[idx].pop();
            continue;
        }
        if is_branch[w] || used[w] {
            continue;
        }
        paths[idx].push(w);
        used[w] = true;
        let done = extend_path(g, branch, pairs, idx, is_branch, used, paths, budget)?;
        used[w] = false;
        if done {
            return Ok(true);
        }
        paths[idx].pop();
    }
    Ok(false)
}

// ---------------------------------------------------------------------
// exact verification
// ---------------------------------------------------------------------

type Pt = (i64, i64);

fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    let v = (b.0 - a.0) as i128 * (c.1 - a.1) as i128
        - (b.1 - a.1) as i128 * (c.0 - a.0) as i128;
    v.signum()
}

fn within(a: i64, x: i64, b: i64) -> bool {
    a.min(b) <= x && x <= a.max(b)
}

/// p lies on the closed segment ab.
fn on_segment(p: Pt, a: Pt, b: Pt) -> bool {
    orient(a, b, p) == 0 && within(a.0, p.0, b.0) && within(a.1, p.1, b.1)
}

/// Two segments with four distinct endpoints conflict if they share any
/// point at all.
fn disjoint_segments_conflict(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(a, c, d))
        || (d2 == 0 && on_segment(b, c, d))
        || (d3 == 0 && on_segment(c, a, b))
        || (d4 == 0 && on_segment(d, a, b))
}

/// Segments sharing exactly the endpoint p conflict iff they overlap
/// beyond p: collinear and pointing the same way.
fn shared_endpoint_conflict(p: Pt, x: Pt, y: Pt) -> bool {
    let dot = (x.0 - p.0) as i128 * (y.0 - p.0) as i128
        + (x.1 - p.1) as i128 * (y.1 - p.1) as i128;
    orient(p, x, y) == 0 && dot > 0
}

/// Complete injectivity check of a straight-line drawing: vertex positions
/// distinct, vertex and edge sets matching the graph, no edge pair meeting
/// outside a shared endpoint, and no vertex sitting inside an edge.
pub fn verify_planar_drawing(g: &SimplicialComplex, d: &PlanarDrawing) -> bool {
    if g.dim().unwrap_or(0) > 1 {
        return false;
    }
    let graph = Graph::from_complex(g);
    // vertex sets agree
    if d.coords.len() != graph.n()
        || graph.labels.iter().any(|l| !d.coords.contains_key(l))
    {
        return false;
    }
    // edge sets agree (canonical orientation)
    let mine: BTreeSet<(&VertexLabel, &VertexLabel)> = d
        .edges
        .iter()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect();
    let theirs: BTreeSet<(&VertexLabel, &VertexLabel)> = graph
        .edges()
        .into_iter()
        .map(|(u, v)| (&graph.labels[u], &graph.labels[v]))
        .collect();
    if mine != theirs {
        return false;
    }
    // distinct positions
    let positions: Vec<(&VertexLabel, Pt)> = d.coords.iter().map(|(l, &p)| (l, p)).collect();
    let distinct: BTreeSet<Pt> = positions.iter().map(|&(_, p)| p).collect();
    if distinct.len() != positions.len() {
        return false;
    }
    let edges: Vec<(&VertexLabel, &VertexLabel, Pt, Pt)> = d
        .edges
        .iter()
        .map(|(a, b)| (a, b, d.coords[a], d.coords[b]))
        .collect();
    // no vertex inside a foreign edge
    for (l, p) in &positions {
        for (a, b, pa, pb) in &edges {
            if l != a && l != b && on_segment(*p, *pa, *pb) {
                return false;
            }
        }
    }
    // pairwise edge checks
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a1, b1, p1, q1) = &edges[i];
            let (a2, b2, p2, q2) = &edges[j];
            let shared: Vec<Pt> = [(a1, p1), (b1, q1)]
                .iter()
                .filter(|(l, _)| *l == a2 || *l == b2)
                .map(|(_, p)| **p)
                .collect();
            match shared.len() {
                0 => {
                    if disjoint_segments_conflict(*p1, *q1, *p2, *q2) {
                        return false;
                    }
                }
                1 => {
                    let s = shared[0];
                    let far1 = if *p1 == s { *q1 } else { *p1 };
                    let far2 = if *p2 == s { *q2 } else { *p2 };
                    if shared_endpoint_conflict(s, far1, far2) {
                        return false;
                    }
                }
                _ => return false, // duplicate edge
            }
        }
    }
    true
}

/// Replays a Kuratowski certificate against the host graph: distinct branch
/// vertices, one path per required pair with matching endpoints, every step
/// an edge, interiors simple, pairwise disjoint and avoiding the branch set.
pub fn verify_kuratowski(g: &SimplicialComplex, cert: &KuratowskiSubgraph) -> bool {
    let graph = Graph::from_complex(g);
    let idx_of = |l: &VertexLabel| graph.labels.binary_search(l).ok();
    let branch: Option<Vec<usize>> = cert.branch.iter().map(idx_of).collect();
    let Some(branch) = branch else {
        return false;
    };
    let distinct: BTreeSet<usize> = branch.iter().copied().collect();
    if distinct.len() != branch.len() {
        return false;
    }
    let pairs: Vec<(usize, usize)> = match cert.kind {
        KuratowskiKind::K5 => {
            if branch.len() != 5 {
                return false;
            }
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()
        }
        KuratowskiKind::K33 => {
            if branch.len() != 6 {
                return false;
            }
            (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect()
        }
    };
    if cert.paths.len() != pairs.len() {
        return false;
    }
    let mut seen_interior: BTreeSet<usize> = BTreeSet::new();
    for (path, &(ai, bi)) in cert.paths.iter().zip(&pairs) {
        let Some(p): Option<Vec<usize>> = path.iter().map(idx_of).collect() else {
            return false;
        };
        if p.len() < 2 || p[0] != branch[ai] || p[p.len() - 1] != branch[bi] {
            return false;
        }
        for w in p.windows(2) {
            if !graph.has_edge(w[0], w[1]) {
                return false;
            }
        }
        let interior = &p[1..p.len() - 1];
        let mut on_this_path: BTreeSet<usize> = BTreeSet::new();
        for &v in interior {
            if distinct.contains(&v) || !seen_interior.insert(v) || !on_this_path.insert(v) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn complete_graph(n: usize) -> SimplicialComplex {
        SimplicialComplex::simplex_skeleton(n - 1, 1)
    }

    fn k33_complex() -> SimplicialComplex {
        let mut facets = Vec::new();
        for a in ["1", "2", "3"] {
            for b in ["4", "5", "6"] {
                facets.push(crate::Face::of(&[a, b]).unwrap());
            }
        }
        SimplicialComplex::build(facets).unwrap()
    }

    #[test]
    fn three_star_draws() {
        let dual = fixtures::fig2().dual().unwrap().complex;
        match planar_embed(&dual, &Guards::default()).unwrap() {
            PlanarityResult::Drawing(d) => {
                assert_eq!(d.coords.len(), 4);
                assert_eq!(d.edges.len(), 3);
                assert!(verify_planar_drawing(&dual, &d));
            }
            PlanarityResult::Obstruction(_) => panic!("a tree is planar"),
        }
    }

    #[test]
    fn k4_and_k5_verdicts() {
        match planar_embed(&complete_graph(4), &Guards::default()).unwrap() {
            PlanarityResult::Drawing(d) => {
                assert!(verify_planar_drawing(&complete_graph(4), &d))
            }
            PlanarityResult::Obstruction(_) => panic!("K4 is planar"),
        }
        match planar_embed(&complete_graph(5), &Guards::default()).unwrap() {
            PlanarityResult::Obstruction(cert) => {
                assert_eq!(cert.kind, KuratowskiKind::K5);
                assert!(cert.paths.iter().all(|p| p.len() == 2));
                assert!(verify_kuratowski(&complete_graph(5), &cert));
            }
            PlanarityResult::Drawing(_) => panic!("K5 is not planar"),
        }
    }

    #[test]
    fn k33_obstruction() {
        match planar_embed(&k33_complex(), &Guards::default()).unwrap() {
            PlanarityResult::Obstruction(cert) => {
                assert_eq!(cert.kind, KuratowskiKind::K33);
                assert!(verify_kuratowski(&k33_complex(), &cert));
            }
            PlanarityResult::Drawing(_) => panic!("K3,3 is not planar"),
        }
    }

    #[test]
    fn petersen_graph_has_k33_subdivision() {
        // outer 5-cycle 0..4, inner pentagram 5..9, spokes
        let mut facets = Vec::new();
        let edge = |a: usize, b: usize| {
            crate::Face::of(&[a.to_string(), b.to_string()]).unwrap()
        };
        for i in 0..5 {
            facets.push(edge(i, (i + 1) % 5));
            facets.push(edge(i + 5, (i + 2) % 5 + 5));
            facets.push(edge(i, i + 5));
        }
        let g = SimplicialComplex::build(facets).unwrap();
        match planar_embed(&g, &Guards::default()).unwrap() {
            PlanarityResult::Obstruction(cert) => {
                assert_eq!(cert.kind, KuratowskiKind::K33);
                assert!(verify_kuratowski(&g, &cert));
            }
            PlanarityResult::Drawing(_) => panic!("Petersen graph is not planar"),
        }
    }

    #[test]
    fn disconnected_and_cut_vertex_graphs_draw() {
        // two triangles sharing a vertex, plus an isolated edge and vertex
        let g = SimplicialComplex::from_facet_labels(&[
            &["a", "b"],
            &["a", "c"],
            &["b", "c"],
            &["c", "d"],
            &["c", "e"],
            &["d", "e"],
            &["x", "y"],
            &["z"],
        ])
        .unwrap();
        match planar_embed(&g, &Guards::default()).unwrap() {
            PlanarityResult::Drawing(d) => {
                assert_eq!(d.coords.len(), 8);
                assert!(verify_planar_drawing(&g, &d));
            }
            PlanarityResult::Obstruction(_) => panic!("planar"),
        }
    }

    #[test]
    fn dodecahedron_draws() {
        // 3-regular planar, 20 vertices: exercises the full pipeline
        let ring = |base: usize| (0..5).map(move |i| (base + i, base + (i + 1) % 5));
        let mut pairs: Vec<(usize, usize)> = ring(0).collect(); // outer 5-cycle
        pairs.extend(ring(5)); // second ring
        pairs.extend(ring(10)); // third ring
        pairs.extend(ring(15)); // inner 5-cycle
        for i in 0..5 {
            pairs.push((i, 5 + i));
            pairs.push((10 + i, 15 + i));
            // connect the two middle rings with a zigzag
            pairs.push((5 + i, 10 + i));
            pairs.push((5 + (i + 1) % 5, 10 + i));
        }
        let facets: Vec<crate::Face> = pairs
            .iter()
            .map(|&(a, b)| crate::Face::of(&[format!("v{a:02}"), format!("v{b:02}")]).unwrap())
            .collect();
        let g = SimplicialComplex::build(facets).unwrap();
        match planar_embed(&g, &Guards::default()).unwrap() {
            PlanarityResult::Drawing(d) => assert!(verify_planar_drawing(&g, &d)),
            PlanarityResult::Obstruction(o) => panic!("planar graph got {o:?}"),
        }
    }

    #[test]
    fn geometry_predicates() {
        assert!(disjoint_segments_conflict((0, 0), (2, 2), (0, 2), (2, 0)));
        assert!(!disjoint_segments_conflict((0, 0), (1, 0), (0, 1), (1, 1)));
        // T-touch: endpoint of one inside the other
        assert!(disjoint_segments_conflict((0, 0), (2, 0), (1, 0), (1, 5)));
        // shared endpoint, overlapping rays
        assert!(shared_endpoint_conflict((0, 0), (2, 0), (1, 0)));
        assert!(!shared_endpoint_conflict((0, 0), (2, 0), (-1, 0)));
        assert!(!shared_endpoint_conflict((0, 0), (2, 0), (1, 1)));
    }
}
