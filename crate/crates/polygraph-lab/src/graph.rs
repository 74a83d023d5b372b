//! Regular-graph substrate: representation, base-family generators, and
//! metric primitives (BFS, girth, connectivity, exact edge expansion).

use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Immutable simple d-regular graph in canonical form: neighbor lists are
/// sorted ascending and symmetric. Vertices are dense 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularGraph {
    d: usize,
    adj: Vec<Vec<u32>>,
    /// Optional per-vertex coordinate tuples, kept by the product
    /// constructions so tuple vertices stay debuggable after flattening.
    labels: Option<Vec<Vec<u32>>>,
}

impl RegularGraph {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&[u32]> {
        self.labels.as_ref().map(|l| l[v].as_slice())
    }

    pub fn edge_count(&self) -> usize {
        self.n() * self.d / 2
    }

    /// All edges as (u, v) pairs with u < v, ascending lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| (u as u32) < v)
                .map(move |&v| (u as u32, v))
        })
    }

    pub fn build_from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<RegularGraph> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u, w[0] as usize));
            }
        }
        Self::from_canonical_adjacency(adj, None)
    }

    /// Validates regularity on an already sorted, symmetric adjacency.
    pub(crate) fn from_canonical_adjacency(
        adj: Vec<Vec<u32>>,
        labels: Option<Vec<Vec<u32>>>,
    ) -> Result<RegularGraph> {
        let d = adj.first().map_or(0, |a| a.len());
        if adj.iter().any(|a| a.len() != d) {
            let mut hist = std::collections::BTreeMap::new();
            for a in &adj {
                *hist.entry(a.len()).or_insert(0usize) += 1;
            }
            return Err(Error::NonRegular(hist.into_iter().collect()));
        }
        Ok(RegularGraph { d, adj, labels })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<Vec<u32>>) -> RegularGraph {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    /// Induced subgraph on `verts` (which must be distinct). Vertex i of the
    /// result corresponds to verts[i]. Errors if the result is not regular.
    pub fn induced(&self, verts: &[u32]) -> Result<RegularGraph> {
        let index: std::collections::HashMap<u32, u32> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in self.neighbors(v as usize) {
                if let Some(&j) = index.get(&w) {
                    if (i as u32) < j {
                        edges.push((i, j as usize));
                    }
                }
            }
        }
        RegularGraph::build_from_edge_list(verts.len(), &edges)
    }

    pub fn bfs_distances(&self, v: usize) -> Vec<usize> {
        bfs_distances_adj(&self.adj, v)
    }

    pub fn girth(&self) -> Option<usize> {
        girth_adj(&self.adj)
    }

    pub fn is_connected(&self) -> bool {
        component_count_adj(&self.adj) <= 1
    }

    pub fn component_count(&self) -> usize {
        component_count_adj(&self.adj)
    }

    pub fn is_bipartite(&self) -> bool {
        is_bipartite_adj(&self.adj)
    }

    /// Exact Cheeger constant min |E(U, U^c)| / |U| over nonempty U with
    /// |U| <= n/2, by exhaustive subset enumeration.
    pub fn edge_expansion_exact(&self) -> Result<f64> {
        let n = self.n();
        if n > 24 {
            return Err(Error::SizeLimit {
                what: "edge_expansion_exact is exhaustive over subsets".into(),
                size: n,
                limit: 24,
            });
        }
        let masks: Vec<u32> = (0..n)
            .map(|v| self.adj[v].iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect();
        let mut best = f64::INFINITY;
        for u in 1u32..(1 << n) {
            let size = u.count_ones() as usize;
            if size * 2 > n {
                continue;
            }
            let mut cut = 0u32;
            let mut bits = u;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                cut += (masks[v] & !u).count_ones();
            }
            best = best.min(cut as f64 / size as f64);
        }
        Ok(best)
    }

    /// Checks the (a,b)-regularity pair: returns (d, b) if every vertex link
    /// is b-regular for a common b.
    pub fn ab_regularity(&self) -> Option<(usize, usize)> {
        let mut b: Option<usize> = None;
        for v in 0..self.n() {
            for &u in self.neighbors(v) {
                let deg = self.neighbors(u as usize)
                    .iter()
                    .filter(|&&w| self.has_edge(v, w as usize))
                    .count();
                match b {
                    None => b = Some(deg),
                    Some(x) if x == deg => {}
                    Some(_) => return None,
                }
            }
        }
        Some((self.d, b.unwrap_or(0)))
    }
}

pub fn bfs_distances_adj(adj: &[Vec<u32>], v: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[v] = 0;
    let mut queue = std::collections::VecDeque::from([v as u32]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u as usize] {
            if dist[w as usize] == usize::MAX {
                dist[w as usize] = dist[u as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn component_count_adj(adj: &[Vec<u32>]) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start as u32];
        while let Some(u) = stack.pop() {
            for &w in &adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

pub fn is_bipartite_adj(adj: &[Vec<u32>]) -> bool {
    let n = adj.len();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                let w = w as usize;
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact girth by BFS from every vertex; None for forests.
pub fn girth_adj(adj: &[Vec<u32>]) -> Option<usize> {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![u32::MAX; n];
    for start in 0..n {
        dist.fill(usize::MAX);
        dist[start] = 0;
        parent[start] = u32::MAX;
        let mut queue = std::collections::VecDeque::from([start as u32]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u as usize] >= best {
                break;
            }
            for &w in &adj[u as usize] {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    best = best.min(dist[u as usize] + dist[w as usize] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Bipartite graph, left c-regular and right d-regular. Vertices are globally
/// indexed: 0..left_size are L, left_size..left_size+right_size are R.
#[derive(Debug, Clone)]
pub struct BipartiteBiregularGraph {
    left_size: usize,
    right_size: usize,
    c: usize,
    d: usize,
    adj: Vec<Vec<u32>>,
}

impl BipartiteBiregularGraph {
    pub fn new(left_size: usize, right_size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let n = left_size + right_size;
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(l, r) in edges {
            if l >= left_size {
                return Err(Error::IndexOutOfRange { index: l, n: left_size });
            }
            if r >= right_size {
                return Err(Error::IndexOutOfRange { index: r, n: right_size });
            }
            let g = left_size + r;
            adj[l].push(g as u32);
            adj[g].push(l as u32);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u, w[0] as usize));
            }
        }
        let c = adj[..left_size].first().map_or(0, |a| a.len());
        let d = adj[left_size..].first().map_or(0, |a| a.len());
        let left_ok = adj[..left_size].iter().all(|a| a.len() == c);
        let right_ok = adj[left_size..].iter().all(|a| a.len() == d);
        if !left_ok || !right_ok {
            let mut hist = std::collections::BTreeMap::new();
            for a in &adj {
                *hist.entry(a.len()).or_insert(0usize) += 1;
            }
            return Err(Error::NonRegular(hist.into_iter().collect()));
        }
        Ok(BipartiteBiregularGraph {
            left_size,
            right_size,
            c,
            d,
            adj,
        })
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn left_degree(&self) -> usize {
        self.c
    }

    pub fn right_degree(&self) -> usize {
        self.d
    }

    /// Neighbors in global indexing (right vertex r is left_size + r).
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn girth(&self) -> Option<usize> {
        girth_adj(&self.adj)
    }
}

pub fn complete(n: usize) -> Result<RegularGraph> {
    if n < 3 {
        return Err(Error::ParameterTooSmall(format!("complete graph needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    RegularGraph::build_from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<RegularGraph> {
    if n < 3 {
        return Err(Error::ParameterTooSmall(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    RegularGraph::build_from_edge_list(n, &edges)
}

pub fn petersen() -> RegularGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer 5-cycle
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    RegularGraph::build_from_edge_list(10, &edges).unwrap()
}

pub fn icosahedron() -> RegularGraph {
    // Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        let u = 1 + i;
        let l = 6 + i;
        edges.push((0, u));
        edges.push((11, l));
        edges.push((u, 1 + (i + 1) % 5));
        edges.push((l, 6 + (i + 1) % 5));
        edges.push((u, l));
        edges.push((1 + (i + 1) % 5, l));
    }
    RegularGraph::build_from_edge_list(12, &edges).unwrap()
}

/// Cayley graph of Z_m x Z_n with generators (±1,0), (0,±1), ±(1,1): the
/// (6,2)-regular triangulation of the torus. m, n >= 7 keeps the graph simple
/// and every link a 6-cycle.
pub fn torus_triangulation(m: usize, n: usize) -> Result<RegularGraph> {
    if m < 7 || n < 7 {
        return Err(Error::ParameterTooSmall(format!(
            "torus triangulation needs m, n >= 7, got ({m}, {n})"
        )));
    }
    let idx = |x: usize, y: usize| x * n + y;
    let mut edges = Vec::with_capacity(3 * m * n);
    for x in 0..m {
        for y in 0..n {
            edges.push((idx(x, y), idx((x + 1) % m, y)));
            edges.push((idx(x, y), idx(x, (y + 1) % n)));
            edges.push((idx(x, y), idx((x + 1) % m, (y + 1) % n)));
        }
    }
    let labels = (0..m)
        .flat_map(|x| (0..n).map(move |y| vec![x as u32, y as u32]))
        .collect();
    Ok(RegularGraph::build_from_edge_list(m * n, &edges)?.with_labels(labels))
}

/// Tensor product: (u,v) ~ (u',v') iff uu' in E(G) and vv' in E(H).
/// If G is (a,b)-regular and H is (a',b')-regular the result is
/// (aa',bb')-regular.
pub fn tensor_product(g: &RegularGraph, h: &RegularGraph) -> RegularGraph {
    let nh = h.n();
    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(g.n() * nh);
    let mut labels = Vec::with_capacity(g.n() * nh);
    for u in 0..g.n() {
        for v in 0..nh {
            let mut nbrs = Vec::with_capacity(g.d() * h.d());
            for &up in g.neighbors(u) {
                for &vp in h.neighbors(v) {
                    nbrs.push(up * nh as u32 + vp);
                }
            }
            nbrs.sort_unstable();
            adj.push(nbrs);
            labels.push(vec![u as u32, v as u32]);
        }
    }
    RegularGraph::from_canonical_adjacency(adj, Some(labels)).unwrap()
}

/// Vertex-edge incidence graph of G: L = E(G), R = V(G), with the natural
/// incidence relation. Left 2-regular, right d-regular, girth doubled.
pub fn incidence_graph(g: &RegularGraph) -> BipartiteBiregularGraph {
    let edges: Vec<_> = g
        .edges()
        .enumerate()
        .flat_map(|(i, (u, v))| [(i, u as usize), (i, v as usize)])
        .collect();
    BipartiteBiregularGraph::new(g.edge_count(), g.n(), &edges).unwrap()
}

/// Graph on L with x ~ y iff some z in R sees both. For girth(H) >= 8 this
/// is simple and c(d-1)-regular, with every link a union of c cliques
/// K_{d-1}.
pub fn distance_two_graph(h: &BipartiteBiregularGraph) -> Result<RegularGraph> {
    let girth = h.girth().unwrap_or(usize::MAX);
    if girth < 8 {
        return Err(Error::GirthTooSmall {
            required: 8,
            actual: girth,
        });
    }
    let mut edges = Vec::new();
    for r in 0..h.right_size() {
        let nbrs = h.neighbors(h.left_size() + r);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                edges.push((x as usize, y as usize));
            }
        }
    }
    RegularGraph::build_from_edge_list(h.left_size(), &edges)
}

/// Girth up to `limit` together with the number of (start, edge) detections
/// of a shortest cycle: a monotone proxy for the short-cycle count. BFS from
/// each vertex explores only the radius-girth/2 ball, so this stays cheap
/// even on large graphs.
fn girth_and_count(adj: &[Vec<u32>], limit: usize) -> (usize, usize) {
    let n = adj.len();
    let mut best = limit;
    let mut count = 0usize;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![u32::MAX; n];
    for start in 0..n {
        dist.fill(usize::MAX);
        dist[start] = 0;
        parent[start] = u32::MAX;
        let mut queue = std::collections::VecDeque::from([start as u32]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u as usize] + 1 > best {
                break;
            }
            for &w in &adj[u as usize] {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    let c = dist[u as usize] + dist[w as usize] + 1;
                    if c < best {
                        best = c;
                        count = 1;
                    } else if c == best {
                        count += 1;
                    }
                }
            }
        }
    }
    (best, count)
}

/// Finds one shortest cycle (as an edge on it) when girth < limit.
fn shortest_cycle_edge(adj: &[Vec<u32>], girth: usize) -> Option<(u32, u32)> {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![u32::MAX; n];
    for start in 0..n {
        dist.fill(usize::MAX);
        dist[start] = 0;
        parent[start] = u32::MAX;
        let mut queue = std::collections::VecDeque::from([start as u32]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u as usize] + 1 > girth {
                break;
            }
            for &w in &adj[u as usize] {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w && dist[u as usize] + dist[w as usize] + 1 == girth
                {
                    return Some((u, w));
                }
            }
        }
    }
    None
}

/// Random d-regular graph with girth >= girth_min: a pairing-model start
/// followed by girth-improving 2-edge swaps (plain rejection has vanishing
/// acceptance probability already at moderate girth). A swap replaces a
/// shortest-cycle edge (u,v) and a random edge (x,y) by (u,x) and (v,y) and
/// is kept when (girth, -short cycle count) improves lexicographically.
/// Deterministic for a fixed seed (ChaCha8 keyed by `seed`).
pub fn random_regular_high_girth(
    n: usize,
    d: usize,
    girth_min: usize,
    seed: u64,
    max_tries: usize,
) -> Result<RegularGraph> {
    if n * d % 2 != 0 {
        return Err(Error::ParameterTooSmall(format!(
            "n*d must be even, got n = {n}, d = {d}"
        )));
    }
    if girth_min < 3 {
        return Err(Error::ParameterTooSmall("girth_min must be >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<u32> = (0..n * d).map(|s| (s / d) as u32).collect();
    // Simple pairing-model start.
    let mut adj: Vec<Vec<u32>> = loop {
        stubs.shuffle(&mut rng);
        let mut cand: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut simple = true;
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || cand[u as usize].contains(&v) {
                simple = false;
                break;
            }
            cand[u as usize].push(v);
            cand[v as usize].push(u);
        }
        if simple {
            break cand;
        }
    };
    let remove = |adj: &mut Vec<Vec<u32>>, a: u32, b: u32| {
        adj[a as usize].retain(|&w| w != b);
        adj[b as usize].retain(|&w| w != a);
    };
    let insert = |adj: &mut Vec<Vec<u32>>, a: u32, b: u32| {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    };
    let (mut girth, mut cycles) = girth_and_count(&adj, girth_min);
    let mut best_girth = girth;
    for _ in 0..max_tries {
        if girth >= girth_min {
            if component_count_adj(&adj) <= 1 {
                for nbrs in &mut adj {
                    nbrs.sort_unstable();
                }
                return RegularGraph::from_canonical_adjacency(adj, None);
            }
            // Reconnect components with a swap that keeps the girth.
            let comp = component_label(&adj);
            let (u, v) = random_edge(&adj, &mut rng);
            let (x, y) = loop {
                let e = random_edge(&adj, &mut rng);
                if comp[e.0 as usize] != comp[u as usize] {
                    break e;
                }
            };
            if swap_ok(&adj, u, v, x, y) {
                remove(&mut adj, u, v);
                remove(&mut adj, x, y);
                insert(&mut adj, u, x);
                insert(&mut adj, v, y);
                let (g2, c2) = girth_and_count(&adj, girth_min);
                if g2 >= girth_min {
                    girth = g2;
                    cycles = c2;
                } else {
                    remove(&mut adj, u, x);
                    remove(&mut adj, v, y);
                    insert(&mut adj, u, v);
                    insert(&mut adj, x, y);
                }
            }
            continue;
        }
        let Some((u, v)) = shortest_cycle_edge(&adj, girth) else {
            continue;
        };
        let (x, y) = random_edge(&adj, &mut rng);
        if !swap_ok(&adj, u, v, x, y) {
            continue;
        }
        remove(&mut adj, u, v);
        remove(&mut adj, x, y);
        insert(&mut adj, u, x);
        insert(&mut adj, v, y);
        let (g2, c2) = girth_and_count(&adj, girth_min);
        if g2 > girth || (g2 == girth && c2 < cycles) {
            girth = g2;
            cycles = c2;
            best_girth = best_girth.max(girth);
        } else {
            remove(&mut adj, u, x);
            remove(&mut adj, v, y);
            insert(&mut adj, u, v);
            insert(&mut adj, x, y);
        }
    }
    Err(Error::ExhaustedTries {
        tries: max_tries,
        best_girth,
    })
}

fn component_label(adj: &[Vec<u32>]) -> Vec<u32> {
    let n = adj.len();
    let mut label = vec![u32::MAX; n];
    let mut next = 0u32;
    for start in 0..n {
        if label[start] != u32::MAX {
            continue;
        }
        label[start] = next;
        let mut stack = vec![start as u32];
        while let Some(u) = stack.pop() {
            for &w in &adj[u as usize] {
                if label[w as usize] == u32::MAX {
                    label[w as usize] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

fn random_edge(adj: &[Vec<u32>], rng: &mut ChaCha8Rng) -> (u32, u32) {
    use rand::Rng;
    loop {
        let u = rng.gen_range(0..adj.len());
        if adj[u].is_empty() {
            continue;
        }
        let v = adj[u][rng.gen_range(0..adj[u].len())];
        return (u as u32, v);
    }
}

fn swap_ok(adj: &[Vec<u32>], u: u32, v: u32, x: u32, y: u32) -> bool {
    let distinct = u != x && u != y && v != x && v != y;
    distinct && !adj[u as usize].contains(&x) && !adj[v as usize].contains(&y)
}

/// Size caps honor the POLYGRAPH_LAB_MAX_VERTICES environment variable.
pub fn vertex_cap(default: usize) -> usize {
    std::env::var("POLYGRAPH_LAB_MAX_VERTICES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_validation() {
        let tri = RegularGraph::build_from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!((tri.n(), tri.d()), (3, 2));
        let c4 = RegularGraph::build_from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.d(), 2);
        assert!(matches!(
            RegularGraph::build_from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]),
            Err(Error::NonRegular(_))
        ));
        assert!(matches!(
            RegularGraph::build_from_edge_list(2, &[(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            RegularGraph::build_from_edge_list(3, &[(0, 1), (1, 0), (1, 2), (0, 2)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            RegularGraph::build_from_edge_list(3, &[(0, 5)]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn petersen_basics() {
        let g = petersen();
        assert_eq!((g.n(), g.d()), (10, 3));
        assert_eq!(g.girth(), Some(5));
        assert!(g.is_connected());
        assert!(!g.is_bipartite());
    }

    #[test]
    fn icosahedron_is_5_2_regular_with_cycle_links() {
        let g = icosahedron();
        assert_eq!((g.n(), g.d()), (12, 5));
        assert_eq!(g.ab_regularity(), Some((5, 2)));
        for v in 0..g.n() {
            let link = g.induced(&g.neighbors(v).to_vec()).unwrap();
            assert_eq!(link.d(), 2);
            assert!(link.is_connected());
            assert_eq!(link.girth(), Some(5));
        }
    }

    #[test]
    fn complete_graph_links() {
        let g = complete(4).unwrap();
        assert_eq!(g.ab_regularity(), Some((3, 2)));
        assert!(complete(2).is_err());
    }

    #[test]
    fn torus_is_6_2_regular_with_hexagon_links() {
        let g = torus_triangulation(7, 7).unwrap();
        assert_eq!((g.n(), g.d()), (49, 6));
        assert_eq!(g.ab_regularity(), Some((6, 2)));
        for v in 0..g.n() {
            let link = g.induced(&g.neighbors(v).to_vec()).unwrap();
            assert_eq!(link.d(), 2);
            assert!(link.is_connected());
        }
        assert!(torus_triangulation(3, 3).is_err());
    }

    #[test]
    fn tensor_product_regularity() {
        let k3 = complete(3).unwrap();
        let t = tensor_product(&k3, &k3);
        assert_eq!((t.n(), t.d()), (9, 4));
        let big = tensor_product(&torus_triangulation(7, 7).unwrap(), &complete(4).unwrap());
        assert_eq!(big.ab_regularity(), Some((18, 4)));
    }

    #[test]
    fn incidence_graph_of_petersen() {
        let h = incidence_graph(&petersen());
        assert_eq!((h.left_size(), h.right_size()), (15, 10));
        assert_eq!((h.left_degree(), h.right_degree()), (2, 3));
        assert_eq!(h.girth(), Some(10));
        assert_eq!(incidence_graph(&complete(4).unwrap()).girth(), Some(6));
    }

    #[test]
    fn incidence_of_c5_is_c10() {
        let h = incidence_graph(&cycle(5).unwrap());
        assert_eq!((h.left_size(), h.right_size()), (5, 5));
        assert_eq!(h.girth(), Some(10));
    }

    #[test]
    fn distance_two_graph_of_petersen_incidence() {
        let h = incidence_graph(&petersen());
        let g = distance_two_graph(&h).unwrap();
        assert_eq!((g.n(), g.d()), (15, 4));
        assert_eq!(g.ab_regularity(), Some((4, 1)));
        // Every link is a disjoint union of c = 2 copies of K_{d-1} = K_2.
        for v in 0..g.n() {
            let link = g.induced(&g.neighbors(v).to_vec()).unwrap();
            assert_eq!(link.d(), 1);
            assert_eq!(link.component_count(), 2);
        }
        let low_girth = incidence_graph(&complete(4).unwrap());
        assert!(matches!(
            distance_two_graph(&low_girth),
            Err(Error::GirthTooSmall { .. })
        ));
    }

    #[test]
    fn girth_and_bipartiteness() {
        assert_eq!(cycle(6).unwrap().girth(), Some(6));
        assert!(cycle(6).unwrap().is_bipartite());
        let two_triangles =
            RegularGraph::build_from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.girth(), Some(3));
    }

    #[test]
    fn edge_expansion_values() {
        assert_eq!(complete(4).unwrap().edge_expansion_exact().unwrap(), 2.0);
        let c6 = cycle(6).unwrap();
        assert!((c6.edge_expansion_exact().unwrap() - 2.0 / 3.0).abs() < 1e-12);
        let two_triangles =
            RegularGraph::build_from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert_eq!(two_triangles.edge_expansion_exact().unwrap(), 0.0);
    }

    #[test]
    fn random_regular_generator() {
        let g = random_regular_high_girth(500, 3, 8, 7, 50_000).unwrap();
        assert_eq!((g.n(), g.d()), (500, 3));
        assert!(g.girth().unwrap() >= 8);
        // Deterministic for a fixed seed.
        let h = random_regular_high_girth(500, 3, 8, 7, 50_000).unwrap();
        assert_eq!(g, h);
        assert!(matches!(
            random_regular_high_girth(4, 3, 4, 1, 200),
            Err(Error::ExhaustedTries { .. })
        ));
    }

    #[test]
    fn handshake_on_generators() {
        for g in [
            petersen(),
            icosahedron(),
            torus_triangulation(7, 8).unwrap(),
            complete(6).unwrap(),
        ] {
            let total: usize = (0..g.n()).map(|v| g.neighbors(v).len()).sum();
            assert_eq!(total, 2 * g.edge_count());
            for v in 0..g.n() {
                assert!(g.neighbors(v).windows(2).all(|w| w[0] < w[1]));
                for &u in g.neighbors(v) {
                    assert!(g.has_edge(u as usize, v));
                }
            }
        }
    }
}
