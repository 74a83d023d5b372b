//! Links of polygraphs: the tree-truncation construction of the link of
//! (xi, ..., xi) in (T_d)_S, connectivity criteria, diameters, spectra, and
//! the local spectral gap bounds.

use crate::eigen::{self, SpectrumReport};
use crate::error::{Error, Result};
use crate::graph::{self, RegularGraph};
use crate::polygraph::{a_s, b_s, DistanceMultiset};
use std::collections::HashMap;

/// Ball of radius `radius` in the d-regular tree T_d: the root has d
/// children, every internal non-root vertex d-1.
pub struct TreeBall {
    d: usize,
    radius: usize,
    parent: Vec<u32>,
    depth: Vec<u8>,
    children: Vec<Vec<u32>>,
    by_depth: Vec<Vec<u32>>,
}

impl TreeBall {
    pub fn new(d: usize, radius: usize) -> TreeBall {
        assert!(d >= 2);
        let mut parent = vec![u32::MAX];
        let mut depth = vec![0u8];
        let mut children: Vec<Vec<u32>> = vec![Vec::new()];
        let mut by_depth = vec![vec![0u32]];
        let mut frontier = vec![0u32];
        for r in 0..radius {
            let mut next = Vec::new();
            for &v in &frontier {
                let fan = if v == 0 { d } else { d - 1 };
                for _ in 0..fan {
                    let u = parent.len() as u32;
                    parent.push(v);
                    depth.push(r as u8 + 1);
                    children.push(Vec::new());
                    children[v as usize].push(u);
                    next.push(u);
                }
            }
            by_depth.push(next.clone());
            frontier = next;
        }
        TreeBall {
            d,
            radius,
            parent,
            depth,
            children,
            by_depth,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> u32 {
        0
    }

    pub fn depth_of(&self, v: u32) -> usize {
        self.depth[v as usize] as usize
    }

    pub fn vertices_at_depth(&self, t: usize) -> &[u32] {
        &self.by_depth[t]
    }

    /// Parent followed by children.
    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.d);
        if self.parent[v as usize] != u32::MAX {
            out.push(self.parent[v as usize]);
        }
        out.extend_from_slice(&self.children[v as usize]);
        out
    }

    /// Exact tree distance via the lowest common ancestor.
    pub fn distance(&self, mut u: u32, mut v: u32) -> usize {
        let (du, dv) = (self.depth_of(u), self.depth_of(v));
        let mut lift = 0;
        while self.depth_of(u) > self.depth_of(v) {
            u = self.parent[u as usize];
            lift += 1;
        }
        while self.depth_of(v) > self.depth_of(u) {
            v = self.parent[v as usize];
            lift += 1;
        }
        let _ = lift;
        while u != v {
            u = self.parent[u as usize];
            v = self.parent[v as usize];
        }
        du + dv - 2 * self.depth_of(u)
    }
}

/// The closed-form local spectral gap bounds for S = [p, q, p+q]:
/// beta1 from the vertex-expansion route, beta2 from the path-counting
/// route, gamma their max.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct LocalGapBounds {
    pub beta1: f64,
    pub beta2: f64,
    pub gamma: f64,
    /// Intermediate path-count floor (d-2)^{10p+10q+6} / (6 d^{2p+2q+6}).
    pub path_count_floor: f64,
}

/// Report on the link of (xi, ..., xi) in (T_d)_S.
#[derive(Debug)]
pub struct LinkReport {
    pub s: DistanceMultiset,
    pub d: usize,
    pub link: RegularGraph,
    pub a_s: u64,
    pub b_s: u64,
    pub connected: bool,
    pub diameter: Option<usize>,
    /// False when the diameter comes from a single-source eccentricity
    /// (valid for these links by vertex transitivity) rather than all-pairs
    /// BFS.
    pub diameter_exact: bool,
    pub spectrum: Option<SpectrumReport>,
    pub expansion_bounds: Option<LocalGapBounds>,
}

pub const LINK_VERTEX_CAP: usize = 100_000;
const LINK_ALL_PAIRS_CAP: usize = 4_000;
const LINK_DENSE_SPECTRUM_CAP: usize = 2_000;

fn pack(tuple: &[u32]) -> u64 {
    tuple.iter().fold(0u64, |acc, &x| (acc << 21) | x as u64)
}

/// Builds the link of the diagonal vertex in (T_d)_S explicitly: vertices
/// are m-tuples of tree vertices whose depth tuple rearranges S, adjacency
/// by coordinatewise tree distance profile. The tree is truncated at radius
/// 2 max(S), which contains every geodesic between vertices of depth at
/// most max(S).
pub fn build_link_via_tree(s: &DistanceMultiset, d: usize) -> Result<LinkReport> {
    assert!(d >= 3);
    let a_s_val = a_s(s, d);
    let cap = graph::vertex_cap(LINK_VERTEX_CAP);
    if a_s_val > cap as u64 {
        return Err(Error::SizeLimit {
            what: format!("tree link for S = {:?}", s.entries()),
            size: a_s_val.min(usize::MAX as u64) as usize,
            limit: cap,
        });
    }
    let b_s_val = b_s(s, d);
    let max_s = s.max();
    let tree = TreeBall::new(d, 2 * max_s);
    let m = s.m();
    let arrangements = s.arrangements();

    // Link vertices, ordered by (arrangement, coordinatewise depth lists).
    let mut tuples: Vec<Vec<u32>> = Vec::with_capacity(a_s_val as usize);
    for om in &arrangements {
        let pools: Vec<&[u32]> = om.iter().map(|&t| tree.vertices_at_depth(t)).collect();
        product_into(&pools, |tuple| tuples.push(tuple.to_vec()));
    }
    assert_eq!(tuples.len() as u64, a_s_val);
    let index: HashMap<u64, u32> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (pack(t), i as u32))
        .collect();

    // sphere[(v, l, t)] = tree vertices at distance l from v with depth t,
    // for v of depth <= max(S) and l, t values of S.
    let vals: Vec<usize> = s.multiplicities().iter().map(|&(v, _)| v).collect();
    let mut sphere: HashMap<(u32, usize, usize), Vec<u32>> = HashMap::new();
    for t in 0..=max_s {
        for &v in tree.vertices_at_depth(t) {
            // BFS to radius max(S) around v.
            let mut dist: HashMap<u32, usize> = HashMap::from([(v, 0)]);
            let mut queue = std::collections::VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                let du = dist[&u];
                if du >= max_s {
                    continue;
                }
                for w in tree.neighbors(u) {
                    if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                        e.insert(du + 1);
                        queue.push_back(w);
                    }
                }
            }
            for (&u, &du) in &dist {
                let tu = tree.depth_of(u);
                if vals.contains(&du) && vals.contains(&tu) {
                    sphere.entry((v, du, tu)).or_default().push(u);
                }
            }
        }
    }
    let empty: Vec<u32> = Vec::new();

    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let mut nbrs: Vec<u32> = Vec::with_capacity(b_s_val as usize);
        for om in &arrangements {
            for tau in &arrangements {
                let pools: Vec<&[u32]> = (0..m)
                    .map(|j| {
                        sphere
                            .get(&(tuple[j], om[j], tau[j]))
                            .unwrap_or(&empty)
                            .as_slice()
                    })
                    .collect();
                if pools.iter().any(|p| p.is_empty()) {
                    continue;
                }
                product_into(&pools, |cand| {
                    if cand != tuple.as_slice() {
                        if let Some(&i) = index.get(&pack(cand)) {
                            nbrs.push(i);
                        }
                    }
                });
            }
        }
        nbrs.sort_unstable();
        debug_assert!(nbrs.windows(2).all(|w| w[0] != w[1]));
        adj.push(nbrs);
    }
    let link = RegularGraph::from_canonical_adjacency(adj, Some(tuples))?;
    if link.d() as u64 != b_s_val {
        return Err(Error::DomainError(format!(
            "tree link degree {} disagrees with b_S = {b_s_val}",
            link.d()
        )));
    }

    let connected = link.is_connected();
    let diameter_exact = link.n() <= LINK_ALL_PAIRS_CAP;
    let diameter = if !connected {
        None
    } else if diameter_exact {
        Some(link_diameter(&link)?)
    } else {
        // The link is vertex transitive, so one eccentricity is the diameter.
        Some(
            link.bfs_distances(0)
                .into_iter()
                .filter(|&d| d != usize::MAX)
                .max()
                .unwrap(),
        )
    };
    let spectrum = (link.n() <= LINK_DENSE_SPECTRUM_CAP)
        .then(|| eigen::spectrum(&link))
        .transpose()?;
    let entries = s.entries();
    let expansion_bounds = (m == 3
        && entries[2] == entries[0] + entries[1]
        && entries[0] % 2 == 0
        && entries[1] % 2 == 0
        && entries[0] < entries[1])
        .then(|| local_gap_bounds(entries[0], entries[1], d));

    Ok(LinkReport {
        s: s.clone(),
        d,
        a_s: a_s_val,
        b_s: b_s_val,
        link,
        connected,
        diameter,
        diameter_exact,
        spectrum,
        expansion_bounds,
    })
}

fn product_into(pools: &[&[u32]], mut emit: impl FnMut(&[u32])) {
    let m = pools.len();
    let mut idx = vec![0usize; m];
    let mut tuple = vec![0u32; m];
    loop {
        for j in 0..m {
            tuple[j] = pools[j][idx[j]];
        }
        emit(&tuple);
        let mut j = m;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < pools[j].len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Link of a vertex: the subgraph induced on its neighbor set.
pub fn link_of_vertex(g: &RegularGraph, v: usize) -> Result<RegularGraph> {
    g.induced(&g.neighbors(v).to_vec())
}

/// Connectivity of the [p, q] tree link: connected iff p is even and q = 2p.
pub fn link_connected_m2(p: usize, q: usize) -> bool {
    assert!(p <= q && q > 0);
    p % 2 == 0 && q == 2 * p
}

/// Connectivity of the [p, q, r] tree link (even-sum gate plus the
/// three-clause criterion).
pub fn link_connected_m3(p: usize, q: usize, r: usize) -> bool {
    assert!(p <= q && q <= r && r > 0);
    if (p + q + r) % 2 != 0 {
        return false;
    }
    let clause1 = r == p + q && (p % 2 == 0 || (q % 2 == 0 && 2 * p >= q) || p == q);
    let clause2 = (q == 2 * p && r <= p + q) || r == 2 * p;
    let clause3 = p % 2 == 0
        && q % 2 == 0
        && r % 2 == 0
        && 4 * p >= 2 * q
        && 2 * q >= r
        && (r == 2 * p || r == 2 * q || q == 2 * p);
    clause1 || clause2 || clause3
}

/// Exact diameter by all-pairs BFS.
pub fn link_diameter(l: &RegularGraph) -> Result<usize> {
    if !l.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut diam = 0;
    for v in 0..l.n() {
        let ecc = l.bfs_distances(v).into_iter().max().unwrap();
        diam = diam.max(ecc);
    }
    Ok(diam)
}

/// Vertex-expansion bound 1/(2 diam) for a vertex-transitive connected graph.
pub fn aldous_expansion_bound(l: &RegularGraph) -> Result<f64> {
    Ok(1.0 / (2.0 * link_diameter(l)? as f64))
}

/// Closed-form lower bounds on the normalized local spectral gap for
/// S = [p, q, p+q] with p, q even, p < q:
/// beta1 = 1 - sqrt(1 - (1/(20 b_S))^2),
/// beta2 = 1 - (1 - (d-2)^{12p+12q+6} / (6^20 d^{12p+12q+6}))^{1/10}.
/// The values are tiny, so both are evaluated in log space.
pub fn local_gap_bounds(p: usize, q: usize, d: usize) -> LocalGapBounds {
    assert!(p % 2 == 0 && q % 2 == 0 && p < q && d >= 3);
    let s = DistanceMultiset::new(vec![p, q, p + q]).unwrap();
    let b = b_s(&s, d) as f64;
    let x = 1.0 / (20.0 * b);
    // 1 - sqrt(1 - x^2) computed stably.
    let beta1 = x * x / (1.0 + (1.0 - x * x).sqrt());
    let e = (12 * p + 12 * q + 6) as f64;
    let ln_y = e * (((d - 2) as f64).ln() - (d as f64).ln()) - 20.0 * 6f64.ln();
    let y = ln_y.exp(); // (d-2)^e / (6^20 d^e), far below 1
    let beta2 = -((-y).ln_1p() / 10.0).exp_m1();
    let e2 = (10 * p + 10 * q + 6) as f64;
    let ln_m = e2 * ((d - 2) as f64).ln() - 6f64.ln() - (2 * p + 2 * q + 6) as f64 * (d as f64).ln();
    LocalGapBounds {
        beta1,
        beta2,
        gamma: beta1.max(beta2),
        path_count_floor: ln_m.exp(),
    }
}

/// The combinatorial model of the [1,1,0] link: vertices (alpha, i, j) with
/// alpha in {1,2,3} the frozen coordinate and i, j in [d] indexing the two
/// moved neighbors; edges between parts share the appropriate index.
pub fn link_110_model(d: usize) -> RegularGraph {
    let enc = |alpha: usize, i: usize, j: usize| alpha * d * d + i * d + j;
    let mut edges = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                // (1,i,j) ~ (2,k,j), (1,i,j) ~ (3,k,i), (2,k,l) ~ (3,k,l').
                edges.push((enc(0, i, j), enc(1, k, j)));
                edges.push((enc(0, i, j), enc(2, k, i)));
                edges.push((enc(1, i, j), enc(2, i, k)));
            }
        }
    }
    RegularGraph::build_from_edge_list(3 * d * d, &edges).unwrap()
}

/// Integer eigenvector certificates for the [1,1,0] link model: families of
/// exact eigenvectors for the eigenvalues 2d, d, 0, -d, with multiplicities
/// 1, 3(d-1), 3(d-1)^2, 3d-1.
pub fn link_110_certificates(d: usize) -> Vec<(i64, Vec<i64>)> {
    let n = 3 * d * d;
    let enc = |alpha: usize, i: usize, j: usize| alpha * d * d + i * d + j;
    let mut out: Vec<(i64, Vec<i64>)> = Vec::new();
    let dd = d as i64;

    out.push((2 * dd, vec![1; n]));

    // Eigenvalue d: for u with sum 0, the three families
    //   f(1,.,j) = u_j and f(2,.,l) = u_l;
    //   f(2,k,.) = u_k and f(3,k,.) = u_k;
    //   f(1,i,.) = u_i and f(3,.,l) = u_l.
    for t in 1..d {
        let mut v = vec![0i64; n];
        for a in 0..d {
            v[enc(0, a, 0)] += 1;
            v[enc(0, a, t)] -= 1;
            v[enc(1, a, 0)] += 1;
            v[enc(1, a, t)] -= 1;
        }
        out.push((dd, v));
        let mut v = vec![0i64; n];
        for b in 0..d {
            v[enc(1, 0, b)] += 1;
            v[enc(1, t, b)] -= 1;
            v[enc(2, 0, b)] += 1;
            v[enc(2, t, b)] -= 1;
        }
        out.push((dd, v));
        let mut v = vec![0i64; n];
        for a in 0..d {
            v[enc(0, 0, a)] += 1;
            v[enc(0, t, a)] -= 1;
            v[enc(2, a, 0)] += 1;
            v[enc(2, a, t)] -= 1;
        }
        out.push((dd, v));
    }

    // Eigenvalue 0: support-4 vectors (e_i - e_{i'}) x (e_j - e_{j'}) on a
    // single part.
    for alpha in 0..3 {
        for i in 1..d {
            for j in 1..d {
                let mut v = vec![0i64; n];
                v[enc(alpha, 0, 0)] = 1;
                v[enc(alpha, 0, j)] = -1;
                v[enc(alpha, i, 0)] = -1;
                v[enc(alpha, i, j)] = 1;
                out.push((0, v));
            }
        }
    }

    // Eigenvalue -d: two part-constant vectors with zero part sum, plus the
    // three index families
    //   f(1,i,.) = u_i and f(3,.,l) = -u_l;
    //   f(2,k,.) = u_k and f(3,k,.) = -u_k;
    //   f(1,.,j) = u_j and f(2,.,l) = -u_l.
    for (pa, pb) in [(0usize, 1usize), (1, 2)] {
        let mut v = vec![0i64; n];
        for i in 0..d {
            for j in 0..d {
                v[enc(pa, i, j)] = 1;
                v[enc(pb, i, j)] = -1;
            }
        }
        out.push((-dd, v));
    }
    for t in 1..d {
        let mut v = vec![0i64; n];
        for a in 0..d {
            v[enc(0, 0, a)] += 1;
            v[enc(0, t, a)] -= 1;
            v[enc(2, a, 0)] -= 1;
            v[enc(2, a, t)] += 1;
        }
        out.push((-dd, v));
        let mut v = vec![0i64; n];
        for b in 0..d {
            v[enc(1, 0, b)] += 1;
            v[enc(1, t, b)] -= 1;
            v[enc(2, 0, b)] -= 1;
            v[enc(2, t, b)] += 1;
        }
        out.push((-dd, v));
        let mut v = vec![0i64; n];
        for a in 0..d {
            v[enc(0, a, 0)] += 1;
            v[enc(0, a, t)] -= 1;
            v[enc(1, a, 0)] -= 1;
            v[enc(1, a, t)] += 1;
        }
        out.push((-dd, v));
    }
    out
}

/// The analytic [1,1,0] link spectrum {2d^1, d^{3(d-1)}, 0^{3(d-1)^2},
/// (-d)^{3d-1}} as a descending value list.
pub fn link_110_analytic_spectrum(d: usize) -> Vec<f64> {
    let mut vals = Vec::with_capacity(3 * d * d);
    vals.push(2.0 * d as f64);
    vals.extend(std::iter::repeat(d as f64).take(3 * (d - 1)));
    vals.extend(std::iter::repeat(0.0).take(3 * (d - 1) * (d - 1)));
    vals.extend(std::iter::repeat(-(d as f64)).take(3 * d - 1));
    vals
}
