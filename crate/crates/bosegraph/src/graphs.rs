//! Connected rooted graphs on 2..=6 vertices, classified up to root-preserving
//! isomorphism.
//!
//! The root is always vertex 0; files that declare a different root are relabeled
//! on ingestion. Two rooted graphs are equivalent when some permutation of the
//! non-root vertices maps one edge set onto the other, and the enumerator returns
//! one representative per class in a deterministic order: ascending by edge
//! count, then by canonical key. On 3 vertices that census has 3 classes, on 4
//! vertices 11.

use std::path::Path;

use itertools::Itertools;
use serde::Deserialize;

use crate::error::{Error, Result};

/// Largest vertex count the canonical-key search (factorial in L) is meant for.
pub const MAX_SITES: usize = 6;

/// A connected graph with distinguished root vertex 0.
///
/// Edges are stored as sorted `(low, high)` pairs, deduplicated and ordered, so
/// equal graphs compare equal structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedGraph {
    sites: usize,
    edges: Vec<(usize, usize)>,
}

/// On-disk description: `{"L": 3, "root": 1, "edges": [[0,1],[1,2]]}`.
#[derive(Deserialize)]
struct GraphFile {
    #[serde(rename = "L")]
    sites: usize,
    root: usize,
    edges: Vec<(usize, usize)>,
}

impl RootedGraph {
    /// Validate and normalize an edge list over `sites` vertices, root at 0.
    pub fn new(sites: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if !(2..=MAX_SITES).contains(&sites) {
            return Err(Error::UnsupportedVertexCount(sites));
        }
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= sites {
                    return Err(Error::SiteOutOfRange { site: v, sites });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let graph = Self { sites, edges: normalized };
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    /// Load a JSON graph file, relabeling so the declared root becomes vertex 0.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    /// Parse the JSON graph format, relabeling the declared root to vertex 0.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        if file.root >= file.sites {
            return Err(Error::SiteOutOfRange { site: file.root, sites: file.sites });
        }
        let swap = |v: usize| {
            if v == file.root {
                0
            } else if v == 0 {
                file.root
            } else {
                v
            }
        };
        let edges: Vec<(usize, usize)> =
            file.edges.iter().map(|&(a, b)| (swap(a), swap(b))).collect();
        Self::new(file.sites, &edges)
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    /// Sorted, deduplicated `(low, high)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.sites).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.sites];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.sites];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.sites
    }

    /// Apply a vertex relabeling and renormalize the edge list. The permutation
    /// maps old labels to new ones; it need not fix the root, so this can also
    /// move the root elsewhere (useful for tests).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.sites, "permutation length must match vertex count");
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Self::new(self.sites, &edges)
    }

    /// Canonical byte key under root-preserving relabelings: the minimum encoded
    /// edge list over all permutations of the non-root vertices. Equal keys mean
    /// equivalent rooted graphs.
    pub fn canonical_key(&self) -> Vec<u8> {
        self.minimized_key(true)
    }

    /// Canonical byte key ignoring the root (minimum over all vertex
    /// permutations); identifies the underlying unrooted graph.
    pub fn unrooted_canonical_key(&self) -> Vec<u8> {
        self.minimized_key(false)
    }

    fn minimized_key(&self, fix_root: bool) -> Vec<u8> {
        let first_movable = usize::from(fix_root);
        let mut best: Option<Vec<u8>> = None;
        let mut perm = vec![0usize; self.sites];
        for images in (first_movable..self.sites).permutations(self.sites - first_movable) {
            for (offset, &img) in images.iter().enumerate() {
                perm[first_movable + offset] = img;
            }
            let mut edges: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            let mut key = Vec::with_capacity(2 + 2 * edges.len());
            key.push(self.sites as u8);
            key.push(edges.len() as u8);
            for (a, b) in edges {
                key.push(a as u8);
                key.push(b as u8);
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.expect("at least the identity permutation")
    }

    /// Structural summary used by the closed-form predictions.
    pub fn invariants(&self) -> GraphInvariants {
        let mut triangle_count = 0;
        let mut root_triangle_count = 0;
        for trio in (0..self.sites).combinations(3) {
            if self.has_edge(trio[0], trio[1])
                && self.has_edge(trio[0], trio[2])
                && self.has_edge(trio[1], trio[2])
            {
                triangle_count += 1;
                if trio[0] == 0 {
                    root_triangle_count += 1;
                }
            }
        }
        GraphInvariants {
            edge_count: self.edge_count(),
            root_degree: self.degree(0),
            triangle_count,
            root_triangle_count,
            bipartition: self.bipartition(),
        }
    }

    /// Two-coloring by BFS from the root, root on side A. `None` when the graph
    /// has an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency();
        let mut color = vec![None::<bool>; self.sites];
        color[0] = Some(true);
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        queue.push_back(w);
                    }
                    Some(c) if c == color[v].unwrap() => return None,
                    Some(_) => {}
                }
            }
        }
        let side_a = (0..self.sites).filter(|&v| color[v] == Some(true)).collect();
        let side_b = (0..self.sites).filter(|&v| color[v] == Some(false)).collect();
        Some((side_a, side_b))
    }
}

/// Invariants of a rooted graph: edge count k, root degree, triangle counts,
/// and the bipartition when one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub edge_count: usize,
    pub root_degree: usize,
    pub triangle_count: usize,
    /// Triangles that pass through the root.
    pub root_triangle_count: usize,
    /// `(side_a, side_b)` with the root in `side_a`, or `None` for graphs with
    /// an odd cycle.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl GraphInvariants {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// All connected rooted graphs on `sites` vertices, one representative per
/// root-preserving isomorphism class.
///
/// The representative of each class is the first member found when scanning
/// edge subsets in ascending bitmask order; classes are returned sorted by
/// (edge count, canonical key). Both choices are deterministic, so the index in
/// this list is a stable public ID.
pub fn enumerate_rooted_graphs(sites: usize) -> Result<Vec<RootedGraph>> {
    if !(2..=MAX_SITES).contains(&sites) {
        return Err(Error::UnsupportedVertexCount(sites));
    }
    let all_pairs: Vec<(usize, usize)> =
        (0..sites).flat_map(|a| (a + 1..sites).map(move |b| (a, b))).collect();
    let mut classes: Vec<(Vec<u8>, RootedGraph)> = Vec::new();
    for mask in 1u32..(1 << all_pairs.len()) {
        let edges: Vec<(usize, usize)> = all_pairs
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let Ok(graph) = RootedGraph::new(sites, &edges) else {
            continue; // disconnected subset
        };
        let key = graph.canonical_key();
        if !classes.iter().any(|(k, _)| *k == key) {
            classes.push((key, graph));
        }
    }
    classes.sort_by(|(ka, ga), (kb, gb)| {
        ga.edge_count().cmp(&gb.edge_count()).then_with(|| ka.cmp(kb))
    });
    Ok(classes.into_iter().map(|(_, g)| g).collect())
}
