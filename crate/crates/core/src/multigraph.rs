//! Multigraphs with stable edge identities and their minors.
//!
//! A [`GraphView`] is a minor of a base [`Multigraph`]: every edge is present,
//! deleted or contracted, and contraction merges vertex classes instead of
//! rebuilding the graph, so edge identifiers survive any sequence of minor
//! operations.

use std::collections::VecDeque;

use serde::Serialize;

use crate::dsu::DisjointSets;
use crate::edge_set::{EdgeId, EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};

/// Default cap on the number of spanning forests an enumeration may produce.
pub const DEFAULT_FOREST_CAP: usize = 1_000_000;

/// An undirected multigraph with an ordered edge list.
///
/// Loops and parallel edges are allowed. The position of an edge in the list
/// is its identifier and its rank in the activity order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > MAX_EDGES {
            return Err(Error::ResourceCap {
                what: "edge count",
                cap: MAX_EDGES as u64,
            });
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge {} has endpoint out of range for {} vertices",
                    EdgeId(i),
                    vertex_count
                )));
            }
        }
        Ok(Multigraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Stored (tail, head) of an edge.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::prefix(self.edges.len())
    }

    /// The full view: every edge present, no vertex merged.
    pub fn view(&self) -> GraphView<'_> {
        GraphView {
            base: self,
            present: self.all_edges(),
            contracted: EdgeSet::EMPTY,
            class: (0..self.vertex_count).collect(),
        }
    }

    /// The minor with `present` edges kept, `contracted` edges contracted and
    /// everything else deleted.
    ///
    /// Contracted edges are processed in increasing order; one whose endpoints
    /// are already merged is a loop at that point and is deleted instead.
    pub fn minor(&self, present: EdgeSet, contracted: EdgeSet) -> Result<GraphView<'_>> {
        if !present.intersection(contracted).is_empty()
            || !present.union(contracted).is_subset(self.all_edges())
        {
            return Err(Error::InvalidInput(
                "present and contracted edge sets must be disjoint subsets of the graph".into(),
            ));
        }
        let mut view = self.view();
        for e in self.all_edges().difference(present.union(contracted)) {
            view.present.remove(e);
        }
        for e in contracted {
            view = view.contract(e)?;
        }
        Ok(view)
    }

    /// The same graph with its edges listed in `order` (smallest first).
    /// New edge `i` is old edge `order[i]`.
    pub fn reordered(&self, order: &[EdgeId]) -> Result<Multigraph> {
        check_permutation(order, self.edge_count())?;
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges: order.iter().map(|&e| self.edges[e.0]).collect(),
        })
    }
}

pub(crate) fn check_permutation(order: &[EdgeId], m: usize) -> Result<()> {
    let mut seen = vec![false; m];
    if order.len() != m {
        return Err(Error::InvalidInput(format!(
            "edge order lists {} edges, graph has {}",
            order.len(),
            m
        )));
    }
    for &e in order {
        if e.0 >= m || std::mem::replace(&mut seen[e.0], true) {
            return Err(Error::InvalidInput(format!(
                "edge order is not a permutation (at {})",
                e
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStatus {
    Present,
    Deleted,
    Contracted,
}

/// A minor of a base multigraph.
///
/// Vertices of the view are the classes of the partition generated by the
/// contracted edges; each class is named by its smallest base vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphView<'g> {
    base: &'g Multigraph,
    present: EdgeSet,
    contracted: EdgeSet,
    class: Vec<usize>,
}

/// Dense relabelling of the vertex classes of a view.
#[derive(Debug, Clone)]
pub(crate) struct VertexIndex {
    of_base: Vec<usize>,
    pub(crate) count: usize,
}

impl VertexIndex {
    pub(crate) fn of(&self, base_vertex: usize) -> usize {
        self.of_base[base_vertex]
    }
}

impl<'g> GraphView<'g> {
    pub fn base(&self) -> &'g Multigraph {
        self.base
    }

    pub fn present(&self) -> EdgeSet {
        self.present
    }

    pub fn contracted(&self) -> EdgeSet {
        self.contracted
    }

    pub fn status(&self, e: EdgeId) -> EdgeStatus {
        if self.present.contains(e) {
            EdgeStatus::Present
        } else if self.contracted.contains(e) {
            EdgeStatus::Contracted
        } else {
            EdgeStatus::Deleted
        }
    }

    pub fn is_present(&self, e: EdgeId) -> bool {
        self.present.contains(e)
    }

    fn require_present(&self, e: EdgeId) -> Result<()> {
        if self.is_present(e) {
            Ok(())
        } else {
            Err(Error::InvalidEdge(e))
        }
    }

    /// Class (smallest base vertex) containing base vertex `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class[v]
    }

    /// View vertices, i.e. class names, in increasing order.
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.class.len())
            .filter(|&v| self.class[v] == v)
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        (0..self.class.len())
            .filter(|&v| self.class[v] == v)
            .count()
    }

    /// Endpoint classes (tail, head) of an edge in this view.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.base.endpoints(e);
        (self.class[u], self.class[v])
    }

    pub(crate) fn vertex_index(&self) -> VertexIndex {
        let mut slot = vec![usize::MAX; self.class.len()];
        let mut count = 0;
        for (v, &c) in self.class.iter().enumerate() {
            if c == v {
                slot[v] = count;
                count += 1;
            }
        }
        let of_base = self.class.iter().map(|&c| slot[c]).collect();
        VertexIndex { of_base, count }
    }

    pub fn delete(&self, e: EdgeId) -> Result<Self> {
        self.require_present(e)?;
        let mut next = self.clone();
        next.present.remove(e);
        Ok(next)
    }

    /// Contracts `e`. Contracting a loop of the view deletes it.
    pub fn contract(&self, e: EdgeId) -> Result<Self> {
        self.require_present(e)?;
        let (a, b) = self.endpoints(e);
        let mut next = self.clone();
        next.present.remove(e);
        if a == b {
            return Ok(next);
        }
        next.contracted.insert(e);
        let (keep, gone) = (a.min(b), a.max(b));
        for c in next.class.iter_mut() {
            if *c == gone {
                *c = keep;
            }
        }
        Ok(next)
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool> {
        self.require_present(e)?;
        let (a, b) = self.endpoints(e);
        Ok(a == b)
    }

    pub fn is_bridge(&self, e: EdgeId) -> Result<bool> {
        if self.is_loop(e)? {
            return Ok(false);
        }
        let (a, b) = self.endpoints(e);
        let idx = self.vertex_index();
        let mut dsu = self.dsu_over(self.present.without(e), &idx);
        Ok(!dsu.same(idx.of(a), idx.of(b)))
    }

    fn dsu_over(&self, edges: EdgeSet, idx: &VertexIndex) -> DisjointSets {
        let mut dsu = DisjointSets::new(idx.count);
        for e in edges {
            let (a, b) = self.endpoints(e);
            dsu.union(idx.of(a), idx.of(b));
        }
        dsu
    }

    /// Connected components over the present edges, as sorted lists of view
    /// vertices ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_of(self.present)
    }

    /// Connected components of the spanning subgraph with edge set `edges`.
    /// Edges that are not present in the view are ignored.
    pub fn components_of(&self, edges: EdgeSet) -> Vec<Vec<usize>> {
        let idx = self.vertex_index();
        let names = self.vertices();
        let mut dsu = self.dsu_over(edges.intersection(self.present), &idx);
        dsu.groups()
            .into_iter()
            .map(|g| g.into_iter().map(|i| names[i]).collect())
            .collect()
    }

    pub fn component_count(&self, edges: EdgeSet) -> usize {
        let idx = self.vertex_index();
        self.dsu_over(edges.intersection(self.present), &idx)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.present) <= 1
    }

    /// Number of edges in any spanning forest of the view.
    pub fn rank(&self) -> usize {
        self.vertex_count() - self.component_count(self.present)
    }

    /// True if `edges` is a spanning forest of the view.
    pub fn is_spanning_forest(&self, edges: EdgeSet) -> bool {
        if !edges.is_subset(self.present) || edges.len() != self.rank() {
            return false;
        }
        let idx = self.vertex_index();
        let mut dsu = DisjointSets::new(idx.count);
        edges.iter().all(|e| {
            let (a, b) = self.endpoints(e);
            dsu.union(idx.of(a), idx.of(b))
        })
    }

    pub fn spanning_forest(&self, edges: EdgeSet) -> Result<SpanningForest> {
        if self.is_spanning_forest(edges) {
            Ok(SpanningForest { edges })
        } else {
            Err(Error::InvalidInput(format!(
                "{:?} is not a spanning forest of the view",
                edges
            )))
        }
    }

    /// All spanning forests in lexicographic order of their sorted edge lists.
    pub fn spanning_forests(&self, cap: usize) -> Result<Vec<SpanningForest>> {
        let idx = self.vertex_index();
        let candidates: Vec<(EdgeId, usize, usize)> = self
            .present
            .iter()
            .filter_map(|e| {
                let (a, b) = self.endpoints(e);
                (a != b).then(|| (e, idx.of(a), idx.of(b)))
            })
            .collect();
        let mut out = Vec::new();
        let mut search = ForestSearch {
            candidates: &candidates,
            cap,
            out: &mut out,
        };
        search.extend(0, self.rank(), EdgeSet::EMPTY, DisjointSets::new(idx.count))?;
        Ok(out)
    }

    /// `U_F(e)`: the edges `f` for which `(F - e) + f` is a spanning forest.
    pub fn fundamental_cut(&self, forest: &SpanningForest, e: EdgeId) -> Result<EdgeSet> {
        if !forest.edges.contains(e) {
            return Err(Error::InvalidInput(format!("{} is not in the forest", e)));
        }
        let idx = self.vertex_index();
        let mut dsu = self.dsu_over(forest.edges.without(e), &idx);
        let (a, b) = self.endpoints(e);
        let (side_a, side_b) = (dsu.find(idx.of(a)), dsu.find(idx.of(b)));
        Ok(self
            .present
            .iter()
            .filter(|&f| {
                let (x, y) = self.endpoints(f);
                let (x, y) = (dsu.find(idx.of(x)), dsu.find(idx.of(y)));
                (x == side_a && y == side_b) || (x == side_b && y == side_a)
            })
            .collect())
    }

    /// `Z_F(e)`: the edge set of the unique cycle of `F + e`.
    pub fn fundamental_cycle(&self, forest: &SpanningForest, e: EdgeId) -> Result<EdgeSet> {
        self.require_present(e)?;
        if forest.edges.contains(e) {
            return Err(Error::InvalidInput(format!("{} is in the forest", e)));
        }
        let (a, b) = self.endpoints(e);
        if a == b {
            return Ok(EdgeSet::single(e));
        }
        let idx = self.vertex_index();
        let path = self
            .tree_path(forest.edges, &idx, idx.of(a), idx.of(b))
            .ok_or_else(|| {
                Error::InvalidInput(format!("{} joins two components of the forest", e))
            })?;
        Ok(path.with(e))
    }

    /// Edges of the path between two vertices in an acyclic edge set.
    fn tree_path(
        &self,
        edges: EdgeSet,
        idx: &VertexIndex,
        from: usize,
        to: usize,
    ) -> Option<EdgeSet> {
        let mut adj = vec![Vec::new(); idx.count];
        for e in edges {
            let (x, y) = self.endpoints(e);
            let (x, y) = (idx.of(x), idx.of(y));
            adj[x].push((e, y));
            adj[y].push((e, x));
        }
        let mut via: Vec<Option<(EdgeId, usize)>> = vec![None; idx.count];
        let mut seen = vec![false; idx.count];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &(e, y) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut path = EdgeSet::EMPTY;
        let mut x = to;
        while let Some((e, prev)) = via[x] {
            path.insert(e);
            x = prev;
        }
        Some(path)
    }

    /// Internal and external activity of a spanning forest.
    pub fn activities(&self, forest: &SpanningForest) -> Result<Activities> {
        let mut internal = 0;
        let mut external = 0;
        for e in self.present {
            let defined = if forest.edges.contains(e) {
                self.fundamental_cut(forest, e)?
            } else {
                self.fundamental_cycle(forest, e)?
            };
            if defined.min() == Some(e) {
                if forest.edges.contains(e) {
                    internal += 1;
                } else {
                    external += 1;
                }
            }
        }
        Ok(Activities { internal, external })
    }
}

struct ForestSearch<'a> {
    candidates: &'a [(EdgeId, usize, usize)],
    cap: usize,
    out: &'a mut Vec<SpanningForest>,
}

impl ForestSearch<'_> {
    fn extend(
        &mut self,
        from: usize,
        needed: usize,
        chosen: EdgeSet,
        dsu: DisjointSets,
    ) -> Result<()> {
        if needed == 0 {
            if self.out.len() >= self.cap {
                return Err(Error::ResourceCap {
                    what: "spanning forest enumeration",
                    cap: self.cap as u64,
                });
            }
            self.out.push(SpanningForest { edges: chosen });
            return Ok(());
        }
        for i in from..self.candidates.len() {
            if self.candidates.len() - i < needed {
                break;
            }
            let (e, a, b) = self.candidates[i];
            let mut next = dsu.clone();
            if next.union(a, b) {
                self.extend(i + 1, needed - 1, chosen.with(e), next)?;
            }
        }
        Ok(())
    }
}

/// A maximal acyclic set of present edges of a view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningForest {
    edges: EdgeSet,
}

impl SpanningForest {
    pub fn edges(&self) -> EdgeSet {
        self.edges
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Activities {
    pub internal: usize,
    pub external: usize,
}
