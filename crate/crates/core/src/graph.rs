//! Simple undirected graphs plus the matching/cover machinery the planners
//! lean on: maximum matchings via blossom contraction, bipartite minimum
//! vertex covers (with a degree-one-free variant), complete-multipartite
//! recognition, and induced-subgraph restriction with vertex remapping.

use std::collections::VecDeque;
use thiserror::Error;

/// Errors raised while constructing or validating graph-shaped data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} used by more than one matching edge")]
    OverlappingEdges(usize),
    #[error("edge ({0}, {1}) has no endpoint in the claimed cover")]
    UncoveredEdge(usize, usize),
}

/// Errors raised by the vertex-cover constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("input must have at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("input graph is not bipartite: odd cycle through edge ({0}, {1})")]
    NotBipartite(usize, usize),
    #[error("claimed bipartition does not partition the vertex set")]
    BadBipartition,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// An undirected simple graph with a fixed vertex set `0..n`.
///
/// Edges are stored normalized (`u < v`, sorted, deduplicated) next to a
/// sorted adjacency list per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The complete multipartite graph whose `i`-th part consists of the next
    /// `sizes[i]` consecutive vertex ids.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n: usize = sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(s));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("multipartite edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced by `vertices` (which must be strictly increasing),
    /// together with the id translation between old and new vertex names.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, VertexMap) {
        assert!(
            vertices.windows(2).all(|w| w[0] < w[1]),
            "induced subgraph vertex list must be strictly increasing"
        );
        if let Some(&v) = vertices.last() {
            assert!(v < self.n, "vertex {v} out of range");
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(nu), Some(nv)) = (old_to_new[u], old_to_new[v]) {
                edges.push((nu, nv));
            }
        }
        let g = Graph::new(vertices.len(), &edges).expect("induced edges are valid");
        (
            g,
            VertexMap {
                old_to_new,
                new_to_old: vertices.to_vec(),
            },
        )
    }
}

/// Translation between vertex ids of a graph and one of its induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl VertexMap {
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new[old]
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn kept(&self) -> &[usize] {
        &self.new_to_old
    }
}

/// Removes `removed` (any order, no duplicates required) from `g`, returning
/// the induced subgraph on the remaining vertices and the id translation.
pub fn restrict(g: &Graph, removed: &[usize]) -> (Graph, VertexMap) {
    let mut drop = vec![false; g.n()];
    for &v in removed {
        assert!(v < g.n(), "vertex {v} out of range");
        drop[v] = true;
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !drop[v]).collect();
    g.induced(&kept)
}

/// A set of pairwise vertex-disjoint edges of a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    partner: Vec<Option<usize>>,
}

impl Matching {
    /// Validates that `edges` are edges of `g` and pairwise disjoint.
    pub fn new(g: &Graph, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut partner = vec![None; g.n()];
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: a, n: g.n() });
            }
            if b >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: b, n: g.n() });
            }
            if !g.has_edge(a, b) {
                return Err(GraphError::NotAnEdge(a, b));
            }
            if partner[a].is_some() {
                return Err(GraphError::OverlappingEdges(a));
            }
            if partner[b].is_some() {
                return Err(GraphError::OverlappingEdges(b));
            }
            partner[a] = Some(b);
            partner[b] = Some(a);
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        Ok(Matching {
            edges: normalized,
            partner,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner[v]
    }
}

/// A vertex set touching every edge of a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    vertices: Vec<usize>,
}

impl VertexCover {
    /// Validates that every edge of `g` has an endpoint in `vertices`.
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.last() {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        let mut inside = vec![false; g.n()];
        for &v in &vertices {
            inside[v] = true;
        }
        for &(u, v) in g.edges() {
            if !inside[u] && !inside[v] {
                return Err(GraphError::UncoveredEdge(u, v));
            }
        }
        Ok(VertexCover { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Computes a maximum matching of `g` by augmenting paths with blossom
/// contraction. Runs in `O(n^3)`, which is ample at the scales handled here.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // A greedy warm start saves most augmentation rounds.
    for v in 0..n {
        if mate[v].is_none() {
            for &u in g.neighbors(v) {
                if mate[u].is_none() {
                    mate[v] = Some(u);
                    mate[u] = Some(v);
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if mate[root].is_none() {
            try_augment(g, root, &mut mate);
        }
    }
    let mut edges = Vec::new();
    for (v, &m) in mate.iter().enumerate() {
        if let Some(u) = m {
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Matching::new(g, edges).expect("augmentation produces a valid matching")
}

/// One hunt for an augmenting path from `root`; applies it when found.
fn try_augment(g: &Graph, root: usize, mate: &mut [Option<usize>]) -> bool {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = VecDeque::from([root]);

    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                // An odd cycle (blossom) was closed; contract it to its base.
                let cur_base = blossom_base(v, to, &base, &parent, mate);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(v, cur_base, to, &mut in_blossom, &base, &mut parent, mate);
                mark_blossom_path(to, cur_base, v, &mut in_blossom, &base, &mut parent, mate);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        // Augmenting path: flip matched/unmatched along it.
                        let mut u = to;
                        loop {
                            let pv = parent[u].expect("interior vertex has a parent");
                            let next = mate[pv];
                            mate[u] = Some(pv);
                            mate[pv] = Some(u);
                            match next {
                                Some(w) => u = w,
                                None => break,
                            }
                        }
                        return true;
                    }
                    Some(m) => {
                        if !used[m] {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    false
}

/// Finds the common base of the blossom closed by the edge `(a, b)`.
fn blossom_base(
    mut a: usize,
    mut b: usize,
    base: &[usize],
    parent: &[Option<usize>],
    mate: &[Option<usize>],
) -> usize {
    let mut marked = vec![false; base.len()];
    loop {
        a = base[a];
        marked[a] = true;
        match mate[a] {
            None => break, // reached the root
            Some(m) => match parent[m] {
                Some(p) => a = p,
                None => break,
            },
        }
    }
    loop {
        b = base[b];
        if marked[b] {
            return b;
        }
        let m = mate[b].expect("non-base blossom vertex is matched");
        b = parent[m].expect("alternating walk reaches the root");
    }
}

/// Marks every contracted vertex on the path from `v` down to the base `b`,
/// rewiring parents so later augmentation can walk through the blossom.
fn mark_blossom_path(
    mut v: usize,
    b: usize,
    mut child: usize,
    in_blossom: &mut [bool],
    base: &[usize],
    parent: &mut [Option<usize>],
    mate: &[Option<usize>],
) {
    while base[v] != b {
        let m = mate[v].expect("blossom vertex below the base is matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("alternating walk reaches the base");
    }
}

/// Computes a minimum vertex cover of a bipartite graph from a maximum
/// matching: vertices reachable from unmatched left vertices by alternating
/// paths select `(left ∖ reached) ∪ (right ∩ reached)`.
pub fn koenig_min_cover(
    g: &Graph,
    left: &[usize],
    right: &[usize],
) -> Result<VertexCover, CoverError> {
    let n = g.n();
    let mut side = vec![None; n];
    for &v in left {
        if v >= n || side[v].is_some() {
            return Err(CoverError::BadBipartition);
        }
        side[v] = Some(false);
    }
    for &v in right {
        if v >= n || side[v].is_some() {
            return Err(CoverError::BadBipartition);
        }
        side[v] = Some(true);
    }
    if side.iter().any(Option::is_none) {
        return Err(CoverError::BadBipartition);
    }
    for &(u, v) in g.edges() {
        if side[u] == side[v] {
            return Err(CoverError::NotBipartite(u, v));
        }
    }

    let matching = max_matching(g);
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = left
        .iter()
        .copied()
        .filter(|&v| matching.partner(v).is_none())
        .collect();
    for &v in &queue {
        reached[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        if side[v] == Some(false) {
            // Left vertex: leave along non-matching edges.
            for &u in g.neighbors(v) {
                if matching.partner(v) != Some(u) && !reached[u] {
                    reached[u] = true;
                    queue.push_back(u);
                }
            }
        } else if let Some(u) = matching.partner(v) {
            // Right vertex: leave along its matching edge.
            if !reached[u] {
                reached[u] = true;
                queue.push_back(u);
            }
        }
    }

    let mut cover: Vec<usize> = Vec::new();
    cover.extend(left.iter().copied().filter(|&v| !reached[v]));
    cover.extend(right.iter().copied().filter(|&v| reached[v]));
    let cover =
        VertexCover::new(g, cover).map_err(|e| CoverError::Internal(format!("{e}")))?;
    if cover.len() != matching.len() {
        return Err(CoverError::Internal(format!(
            "cover size {} does not match matching size {}",
            cover.len(),
            matching.len()
        )));
    }
    Ok(cover)
}

/// A minimum vertex cover of a connected bipartite graph on at least three
/// vertices in which no chosen vertex has degree one: any degree-one member
/// of a minimum cover is swapped for its unique neighbor.
pub fn degree1_free_cover(g: &Graph) -> Result<VertexCover, CoverError> {
    if g.n() < 3 {
        return Err(CoverError::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(CoverError::Disconnected);
    }
    // 2-color by BFS parity from vertex 0.
    let mut color = vec![None; g.n()];
    color[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            match color[u] {
                None => {
                    color[u] = color[v].map(|c| !c);
                    queue.push_back(u);
                }
                Some(c) => {
                    if Some(c) == color[v] {
                        return Err(CoverError::NotBipartite(v, u));
                    }
                }
            }
        }
    }
    let left: Vec<usize> = (0..g.n()).filter(|&v| color[v] == Some(false)).collect();
    let right: Vec<usize> = (0..g.n()).filter(|&v| color[v] == Some(true)).collect();
    let base = koenig_min_cover(g, &left, &right)?;

    let mut chosen: Vec<usize> = base.vertices().to_vec();
    let mut inside = vec![false; g.n()];
    for &v in &chosen {
        inside[v] = true;
    }
    for slot in &mut chosen {
        let v = *slot;
        if g.degree(v) == 1 {
            let u = g.neighbors(v)[0];
            if inside[u] {
                return Err(CoverError::Internal(format!(
                    "minimum cover holds degree-one vertex {v} and its neighbor {u}"
                )));
            }
            inside[v] = false;
            inside[u] = true;
            *slot = u;
        }
    }
    let swapped = VertexCover::new(g, chosen)
        .map_err(|e| CoverError::Internal(format!("exchange broke the cover: {e}")))?;
    if swapped.len() != base.len() {
        return Err(CoverError::Internal(format!(
            "exchange changed cover size from {} to {}",
            base.len(),
            swapped.len()
        )));
    }
    if let Some(&v) = swapped.vertices().iter().find(|&&v| g.degree(v) == 1) {
        return Err(CoverError::Internal(format!(
            "exchange left degree-one vertex {v} in the cover"
        )));
    }
    Ok(swapped)
}

/// The partition of a complete multipartite graph into its independent parts,
/// ordered by decreasing size (ties: smallest member first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteStructure {
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
}

impl MultipartiteStructure {
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    /// Index into `parts()` of the part containing `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

/// Recognizes complete multipartite graphs: the complement's connected
/// components must each be independent in `g`. Returns `None` otherwise.
pub fn detect_multipartite(g: &Graph) -> Option<MultipartiteStructure> {
    let n = g.n();
    // Components of the complement, by BFS over non-neighbors.
    let mut seen = vec![false; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let mut is_nb = vec![false; n];
            for &u in g.neighbors(v) {
                is_nb[u] = true;
            }
            for u in 0..n {
                if u != v && !is_nb[u] && !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        parts.push(comp);
    }
    // Complete multipartite iff every complement component is independent.
    for part in &parts {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                if g.has_edge(u, v) {
                    return None;
                }
            }
        }
    }
    parts.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let mut part_of = vec![0; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    Some(MultipartiteStructure { parts, part_of })
}

/// The matching number of a complete multipartite graph with the given part
/// structure: `min(⌊n/2⌋, n − largest part)`.
pub fn mu_multipartite(parts: &MultipartiteStructure) -> usize {
    let n = parts.n();
    let largest = parts.parts().first().map_or(0, Vec::len);
    (n / 2).min(n - largest)
}
