//! The static arena: a plumbing tree, its vertex bipartition, and the
//! Koszul-dual grading datum `s(v,w)`.
//!
//! Vertex names are strings ordered lexicographically; every enumeration in
//! the crate follows that order, so identical inputs always produce
//! identical outputs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::shift::ShiftExpr;
use crate::word::Sign;

/// Handle to a vertex of a given [`PlumbingSpec`] (its rank in the
/// lexicographic vertex order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub(crate) usize);

impl Vertex {
    /// Rank of the vertex in the spec's lexicographic order.
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite tree with string-named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    names: Vec<String>,             // sorted lexicographically
    edges: Vec<(usize, usize)>,     // canonical (lo, hi), sorted
    adjacency: Vec<Vec<usize>>,     // per vertex, sorted neighbor indices
    edge_index: BTreeMap<(usize, usize), usize>,
}

impl Tree {
    /// Validates that `edges` form a tree on `vertices` and builds the
    /// lexicographically ordered adjacency structure.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Tree, Error> {
        let mut names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0].clone()));
            }
        }
        if names.is_empty() {
            return Err(Error::NotATree("no vertices".into()));
        }
        let index_of = |name: &str| -> Result<usize, Error> {
            names
                .binary_search_by(|probe| probe.as_str().cmp(name))
                .map_err(|_| Error::UnknownVertex(name.to_string()))
        };

        let mut canonical: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let i = index_of(a.as_ref())?;
            let j = index_of(b.as_ref())?;
            if i == j {
                return Err(Error::NotATree(format!("self-loop at {}", a.as_ref())));
            }
            canonical.push((i.min(j), i.max(j)));
        }
        canonical.sort();
        for pair in canonical.windows(2) {
            if pair[0] == pair[1] {
                let (i, j) = pair[0];
                return Err(Error::NotATree(format!(
                    "duplicate edge {{{}, {}}}",
                    names[i], names[j]
                )));
            }
        }
        if canonical.len() + 1 != names.len() {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, got {}",
                names.len(),
                names.len() - 1,
                canonical.len()
            )));
        }

        let mut adjacency = vec![Vec::new(); names.len()];
        let mut edge_index = BTreeMap::new();
        for (id, &(i, j)) in canonical.iter().enumerate() {
            adjacency[i].push(j);
            adjacency[j].push(i);
            edge_index.insert((i, j), id);
        }
        for list in &mut adjacency {
            list.sort();
        }

        let tree = Tree {
            names,
            edges: canonical,
            adjacency,
            edge_index,
        };
        // |E| = |V| - 1 plus connectivity is equivalent to acyclicity.
        if !tree.is_connected() {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.names.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.names.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len()).map(Vertex)
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.0]
    }

    /// Resolve a vertex name.
    pub fn vertex(&self, name: &str) -> Result<Vertex, Error> {
        self.names
            .binary_search_by(|probe| probe.as_str().cmp(name))
            .map(Vertex)
            .map_err(|_| Error::UnknownVertex(name.to_string()))
    }

    /// Neighbors of `v` in ascending vertex order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v.0].iter().map(|&i| Vertex(i))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn is_edge(&self, v: Vertex, w: Vertex) -> bool {
        let key = (v.0.min(w.0), v.0.max(w.0));
        self.edge_index.contains_key(&key)
    }

    /// Edges as canonical (smaller, larger) vertex pairs, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().map(|&(i, j)| (Vertex(i), Vertex(j)))
    }

    fn edge_id(&self, v: Vertex, w: Vertex) -> Option<usize> {
        let key = (v.0.min(w.0), v.0.max(w.0));
        self.edge_index.get(&key).copied()
    }
}

/// Proper 2-coloring of the tree, rooted at the lexicographically smallest
/// vertex; the root sits in `plus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    is_plus: Vec<bool>,
}

impl Bipartition {
    pub fn is_plus(&self, v: Vertex) -> bool {
        self.is_plus[v.0]
    }

    /// The Penner sign of a vertex: `Pos` on the plus class, `Neg` on the
    /// minus class.
    pub fn sign_of(&self, v: Vertex) -> Sign {
        if self.is_plus[v.0] {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn plus(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.is_plus
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(i, _)| Vertex(i))
    }

    pub fn minus(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.is_plus
            .iter()
            .enumerate()
            .filter(|(_, &p)| !p)
            .map(|(i, _)| Vertex(i))
    }
}

/// Vertices at even edge-distance from the root vertex (the
/// lexicographically smallest one) land in `plus`, the rest in `minus`.
pub fn bipartition(tree: &Tree) -> Bipartition {
    let mut is_plus = vec![false; tree.vertex_count()];
    let mut seen = vec![false; tree.vertex_count()];
    let mut queue = alloc::collections::VecDeque::new();
    seen[0] = true;
    is_plus[0] = true;
    queue.push_back(0usize);
    while let Some(v) = queue.pop_front() {
        for &w in &tree.adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                is_plus[w] = !is_plus[v];
                queue.push_back(w);
            }
        }
    }
    Bipartition { is_plus }
}

/// The grading datum: for every edge `{v, w}` an integer `s(v,w)` in
/// `{1, ..., n-1}` with `s(v,w) + s(w,v) = n`.
///
/// One orientation per edge is stored concretely; the opposite orientation
/// is the symbolic complement `n - s`, so rewritten shifts stay symbolic in
/// `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingAssignment {
    n: i64,
    /// `s(lo, hi)` per canonical edge, indexed like `Tree::edges`.
    forward_s: Vec<i64>,
}

impl GradingAssignment {
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The grading `s(v, w)` of an adjacent ordered pair, as a symbolic
    /// shift: either the stored constant `k` or its complement `n - k`.
    pub fn s(&self, tree: &Tree, v: Vertex, w: Vertex) -> Option<ShiftExpr> {
        let id = tree.edge_id(v, w)?;
        let k = self.forward_s[id];
        if v.0 < w.0 {
            Some(ShiftExpr::new(k, 0))
        } else {
            Some(ShiftExpr::new(-k, 1))
        }
    }

    /// `s(v, w)` evaluated at the spec's own dimension.
    pub fn s_value(&self, tree: &Tree, v: Vertex, w: Vertex) -> Option<i64> {
        self.s(tree, v, w).map(|e| e.eval(self.n))
    }
}

/// A grading override `s(from, to) = s` for one directed edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingOverride {
    pub from: String,
    pub to: String,
    pub s: i64,
}

/// The full static arena: tree, dimension, bipartition, grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingSpec {
    tree: Tree,
    n: i64,
    bipartition: Bipartition,
    grading: GradingAssignment,
}

/// Builds a [`PlumbingSpec`].
///
/// Unless overridden, each edge `{v, w}` with `v` lexicographically smaller
/// gets `s(v, w) = 1` (hence `s(w, v) = n - 1`), matching the usual
/// convention for path-shaped examples.
pub fn build_plumbing<S: AsRef<str>>(
    vertices: &[S],
    edges: &[(S, S)],
    n: i64,
    overrides: &[GradingOverride],
) -> Result<PlumbingSpec, Error> {
    if n < 3 {
        return Err(Error::DimensionTooSmall(n));
    }
    let tree = Tree::new(vertices, edges)?;
    let bipartition = bipartition(&tree);

    let mut forward_s = vec![1i64; tree.edges.len()];
    let mut overridden: BTreeSet<usize> = BTreeSet::new();
    for ov in overrides {
        if ov.s < 1 || ov.s > n - 1 {
            return Err(Error::BadGrading(format!(
                "s({}, {}) = {} is outside 1..={}",
                ov.from,
                ov.to,
                ov.s,
                n - 1
            )));
        }
        let v = tree.vertex(&ov.from)?;
        let w = tree.vertex(&ov.to)?;
        let id = tree.edge_id(v, w).ok_or_else(|| {
            Error::BadGrading(format!("{{{}, {}}} is not an edge", ov.from, ov.to))
        })?;
        // Store the value on the canonical (lo, hi) orientation.
        let forward = if v.0 < w.0 { ov.s } else { n - ov.s };
        if !overridden.insert(id) && forward_s[id] != forward {
            return Err(Error::BadGrading(format!(
                "conflicting overrides for edge {{{}, {}}}",
                ov.from, ov.to
            )));
        }
        forward_s[id] = forward;
    }

    Ok(PlumbingSpec {
        tree,
        n,
        bipartition,
        grading: GradingAssignment { n, forward_s },
    })
}

impl PlumbingSpec {
    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    pub fn grading(&self) -> &GradingAssignment {
        &self.grading
    }

    pub fn vertex_count(&self) -> usize {
        self.tree.vertex_count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.tree.vertices()
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex, Error> {
        self.tree.vertex(name)
    }

    pub fn name(&self, v: Vertex) -> &str {
        self.tree.name(v)
    }

    /// Bounds-check a handle that may come from a different spec.
    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), Error> {
        if v.0 < self.tree.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{}", v.0)))
        }
    }

    /// The symbolic grading `s(v, w)` of an adjacent ordered pair.
    pub fn s(&self, v: Vertex, w: Vertex) -> Option<ShiftExpr> {
        self.grading.s(&self.tree, v, w)
    }

    /// The unique simple path from `v` to `w`, endpoints included;
    /// `[v]` when `v = w`.
    pub fn geometric_path(&self, v: Vertex, w: Vertex) -> Result<Vec<Vertex>, Error> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Ok(vec![v]);
        }
        // BFS from v recording parents, then walk back from w.
        let count = self.tree.vertex_count();
        let mut parent = vec![usize::MAX; count];
        let mut seen = vec![false; count];
        let mut queue = alloc::collections::VecDeque::new();
        seen[v.0] = true;
        queue.push_back(v.0);
        while let Some(x) = queue.pop_front() {
            if x == w.0 {
                break;
            }
            for &y in &self.tree.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![w.0];
        let mut cur = w.0;
        while cur != v.0 {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(path.into_iter().map(Vertex).collect())
    }
}
