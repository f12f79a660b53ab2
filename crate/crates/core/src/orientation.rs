//! Orientations of graph views and the directed-graph predicates built on them.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::RngCore;

use crate::edge_set::{EdgeId, EdgeSet};
use crate::error::{Error, Result};
use crate::multigraph::{GraphView, VertexIndex};

/// Default cap on the number of present edges for exhaustive enumeration.
pub const DEFAULT_ORIENTATION_CAP: usize = 20;

/// Largest view the bond-peeling oracle accepts.
pub const ORACLE_EDGE_CAP: usize = 12;

/// One direction bit per present edge of a view.
///
/// `+` (not reversed) means tail→head as stored in the base graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    domain: EdgeSet,
    reversed: EdgeSet,
}

impl Orientation {
    pub fn new(domain: EdgeSet, reversed: EdgeSet) -> Result<Self> {
        if !reversed.is_subset(domain) {
            return Err(Error::InvalidInput(
                "reversed edges must be a subset of the oriented edges".into(),
            ));
        }
        Ok(Orientation { domain, reversed })
    }

    /// Every edge of `domain` as stored.
    pub fn forward(domain: EdgeSet) -> Self {
        Orientation {
            domain,
            reversed: EdgeSet::EMPTY,
        }
    }

    /// Parses a `+`/`-` string with one character per present edge of `view`.
    pub fn parse(view: &GraphView, text: &str) -> Result<Self> {
        let chars: Vec<char> = text.trim().chars().collect();
        let domain = view.present();
        if chars.len() != domain.len() {
            return Err(Error::parse(
                1,
                format!(
                    "orientation has {} characters, view has {} edges",
                    chars.len(),
                    domain.len()
                ),
            ));
        }
        let mut reversed = EdgeSet::EMPTY;
        for (e, c) in domain.iter().zip(chars) {
            match c {
                '+' => {}
                '-' | '\u{2212}' => reversed.insert(e),
                other => {
                    return Err(Error::parse(
                        1,
                        format!("orientation character {:?} is not + or -", other),
                    ))
                }
            }
        }
        Ok(Orientation { domain, reversed })
    }

    pub fn domain(&self) -> EdgeSet {
        self.domain
    }

    pub fn reversed(&self) -> EdgeSet {
        self.reversed
    }

    pub fn is_reversed(&self, e: EdgeId) -> bool {
        self.reversed.contains(e)
    }

    /// Sets the bit of `e`, adding it to the domain if needed.
    pub fn with_bit(mut self, e: EdgeId, reversed: bool) -> Self {
        self.domain.insert(e);
        if reversed {
            self.reversed.insert(e);
        } else {
            self.reversed.remove(e);
        }
        self
    }

    /// The same bits on a smaller domain.
    pub fn restricted_to(&self, domain: EdgeSet) -> Self {
        let domain = self.domain.intersection(domain);
        Orientation {
            domain,
            reversed: self.reversed.intersection(domain),
        }
    }

    /// Flips the bits of `edges`.
    pub fn reverse_edges(&self, edges: EdgeSet) -> Self {
        debug_assert!(edges.is_subset(self.domain));
        Orientation {
            domain: self.domain,
            reversed: self
                .reversed
                .symmetric_difference(edges.intersection(self.domain)),
        }
    }

    /// Sort key matching lexicographic order of the `+`/`-` strings with `+` first.
    pub fn lex_key(&self) -> u64 {
        self.domain
            .iter()
            .fold(0u64, |key, e| key << 1 | self.reversed.contains(e) as u64)
    }

    /// (tail, head) of `e` in `view` under this orientation.
    pub fn direction(&self, view: &GraphView, e: EdgeId) -> (usize, usize) {
        let (u, v) = view.endpoints(e);
        if self.reversed.contains(e) {
            (v, u)
        } else {
            (u, v)
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.domain {
            f.write_str(if self.reversed.contains(e) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({})", self)
    }
}

impl PartialOrd for Orientation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Orientation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.domain, self.lex_key()).cmp(&(other.domain, other.lex_key()))
    }
}

pub fn reverse_edges(orientation: &Orientation, edges: EdgeSet) -> Orientation {
    orientation.reverse_edges(edges)
}

/// All `2^m` orientations of the present edges, in lexicographic string order.
pub fn enumerate_orientations(
    view: &GraphView,
    cap: usize,
) -> Result<impl Iterator<Item = Orientation>> {
    let edges = view.present().to_vec();
    let m = edges.len();
    if m > cap.min(63) {
        return Err(Error::ResourceCap {
            what: "orientation enumeration edge count",
            cap: cap.min(63) as u64,
        });
    }
    let domain = view.present();
    Ok((0u64..1 << m).map(move |k| {
        let reversed = edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| k >> (m - 1 - j) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Orientation { domain, reversed }
    }))
}

/// Adjacency structure of an oriented view restricted to some edges.
pub(crate) struct Digraph {
    idx: VertexIndex,
    out: Vec<Vec<(EdgeId, usize)>>,
    inc: Vec<Vec<(EdgeId, usize)>>,
}

impl Digraph {
    pub(crate) fn new(view: &GraphView, orientation: &Orientation, edges: EdgeSet) -> Self {
        let idx = view.vertex_index();
        let mut out = vec![Vec::new(); idx.count];
        let mut inc = vec![Vec::new(); idx.count];
        for e in edges.intersection(view.present()) {
            let (t, h) = orientation.direction(view, e);
            let (t, h) = (idx.of(t), idx.of(h));
            out[t].push((e, h));
            inc[h].push((e, t));
        }
        Digraph { idx, out, inc }
    }

    pub(crate) fn index(&self, base_vertex: usize) -> usize {
        self.idx.of(base_vertex)
    }

    fn vertex_count(&self) -> usize {
        self.idx.count
    }

    /// Directed reachability avoiding `excluded`.
    pub(crate) fn reaches(&self, from: usize, to: usize, excluded: Option<EdgeId>) -> bool {
        if from == to {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(x) = stack.pop() {
            for &(e, y) in &self.out[x] {
                if Some(e) == excluded || seen[y] {
                    continue;
                }
                if y == to {
                    return true;
                }
                seen[y] = true;
                stack.push(y);
            }
        }
        false
    }

    /// A simple directed path `from`→`to` over edges accepted by `allowed`,
    /// found by depth-first search taking smaller edges first, or in a
    /// shuffled order when `rng` is given.
    pub(crate) fn find_path(
        &self,
        from: usize,
        to: usize,
        allowed: &dyn Fn(EdgeId) -> bool,
        mut rng: Option<&mut dyn RngCore>,
    ) -> Option<Vec<EdgeId>> {
        if from == to {
            return Some(Vec::new());
        }
        let mut seen = vec![false; self.vertex_count()];
        seen[from] = true;
        // (vertex, remaining candidate arcs)
        let mut stack: Vec<(usize, Vec<(EdgeId, usize)>)> = Vec::new();
        let mut path: Vec<EdgeId> = Vec::new();
        let arcs_of = |x: usize, rng: &mut Option<&mut dyn RngCore>| {
            let mut arcs: Vec<_> = self.out[x]
                .iter()
                .copied()
                .filter(|&(e, _)| allowed(e))
                .collect();
            match rng {
                Some(r) => arcs.shuffle(r),
                None => arcs.sort(),
            }
            arcs.reverse();
            arcs
        };
        let first = arcs_of(from, &mut rng);
        stack.push((from, first));
        while let Some((_, pending)) = stack.last_mut() {
            match pending.pop() {
                Some((e, y)) => {
                    if seen[y] {
                        continue;
                    }
                    seen[y] = true;
                    path.push(e);
                    if y == to {
                        return Some(path);
                    }
                    let next = arcs_of(y, &mut rng);
                    stack.push((y, next));
                }
                None => {
                    stack.pop();
                    path.pop();
                }
            }
        }
        None
    }

    /// Strongly connected component label per vertex (Kosaraju).
    fn scc_labels(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some((x, i)) = stack.pop() {
                if i < self.out[x].len() {
                    stack.push((x, i + 1));
                    let y = self.out[x][i].1;
                    if !seen[y] {
                        seen[y] = true;
                        stack.push((y, 0));
                    }
                } else {
                    order.push(x);
                }
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for &s in order.iter().rev() {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &(_, y) in &self.inc[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }
}

/// True iff a directed path `u`→`v` exists over present edges other than
/// `excluded`. Vertices are base vertices and are mapped to their classes.
pub fn reachable(
    view: &GraphView,
    orientation: &Orientation,
    u: usize,
    v: usize,
    excluded: Option<EdgeId>,
) -> bool {
    let g = Digraph::new(view, orientation, view.present());
    g.reaches(g.index(u), g.index(v), excluded)
}

/// No directed cut: every connected component is strongly connected.
pub fn is_totally_cyclic(view: &GraphView, orientation: &Orientation) -> bool {
    debug_assert_eq!(orientation.domain(), view.present());
    let g = Digraph::new(view, orientation, view.present());
    let (_, strong) = g.scc_labels();
    strong == view.component_count(view.present())
}

/// Every present edge lies on a directed cycle. Independent of the SCC test.
pub fn totally_cyclic_oracle(view: &GraphView, orientation: &Orientation) -> bool {
    let g = Digraph::new(view, orientation, view.present());
    view.present().iter().all(|e| {
        let (t, h) = orientation.direction(view, e);
        g.reaches(g.index(h), g.index(t), Some(e))
    })
}

/// No directed cycle. A loop is a directed cycle.
pub fn is_acyclic(view: &GraphView, orientation: &Orientation) -> bool {
    let g = Digraph::new(view, orientation, view.present());
    let n = g.vertex_count();
    let mut indegree: Vec<usize> = (0..n).map(|x| g.inc[x].len()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut removed = 0;
    while let Some(x) = ready.pop() {
        removed += 1;
        for &(_, y) in &g.out[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(y);
            }
        }
    }
    removed == n
}

/// Paths both ways between the endpoints of `e` in the view minus `e`.
/// Loops are cycle flippable.
pub fn is_cycle_flippable(view: &GraphView, orientation: &Orientation, e: EdgeId) -> Result<bool> {
    if view.is_loop(e)? {
        return Ok(true);
    }
    let (t, h) = orientation.direction(view, e);
    let g = Digraph::new(view, orientation, view.present());
    let (t, h) = (g.index(t), g.index(h));
    Ok(g.reaches(t, h, Some(e)) && g.reaches(h, t, Some(e)))
}

/// No path either way between the endpoints of `e` in the view minus `e`.
pub fn is_cut_flippable(view: &GraphView, orientation: &Orientation, e: EdgeId) -> Result<bool> {
    if view.is_loop(e)? {
        return Err(Error::InvalidInput(format!(
            "{} is a loop; cut flippability is undefined",
            e
        )));
    }
    let (t, h) = orientation.direction(view, e);
    let g = Digraph::new(view, orientation, view.present());
    let (t, h) = (g.index(t), g.index(h));
    Ok(!g.reaches(t, h, Some(e)) && !g.reaches(h, t, Some(e)))
}

/// In-degree equals out-degree at every vertex of the sub-digraph on `edges`.
pub fn is_directed_eulerian(view: &GraphView, orientation: &Orientation, edges: EdgeSet) -> bool {
    debug_assert!(edges.is_subset(view.present()));
    let mut balance = vec![0i64; view.base().vertex_count()];
    for e in edges {
        let (t, h) = orientation.direction(view, e);
        balance[t] -= 1;
        balance[h] += 1;
    }
    balance.iter().all(|&b| b == 0)
}

/// Disjoint union of directed bonds, tested through an integer height
/// function: `h(head) - h(tail)` is 1 on every edge of `edges` and 0 on every
/// other present edge.
pub fn is_directed_cut(view: &GraphView, orientation: &Orientation, edges: EdgeSet) -> bool {
    if !edges.is_subset(view.present()) {
        return false;
    }
    let idx = view.vertex_index();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); idx.count];
    for e in view.present() {
        let (t, h) = orientation.direction(view, e);
        let (t, h) = (idx.of(t), idx.of(h));
        let step = edges.contains(e) as i64;
        if t == h {
            if step != 0 {
                return false;
            }
            continue;
        }
        adj[t].push((h, step));
        adj[h].push((t, -step));
    }
    let mut height: Vec<Option<i64>> = vec![None; idx.count];
    for s in 0..idx.count {
        if height[s].is_some() {
            continue;
        }
        height[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let hx = height[x].unwrap();
            for &(y, step) in &adj[x] {
                match height[y] {
                    None => {
                        height[y] = Some(hx + step);
                        queue.push_back(y);
                    }
                    Some(hy) if hy != hx + step => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Edge sets of all directed bonds: minimal cuts whose edges all cross the
/// same way.
pub fn directed_bonds(view: &GraphView, orientation: &Orientation) -> Result<Vec<EdgeSet>> {
    let idx = view.vertex_index();
    if idx.count > 20 {
        return Err(Error::ResourceCap {
            what: "vertex count for bond enumeration",
            cap: 20,
        });
    }
    let components = view.component_count(view.present());
    let mut bonds = BTreeSet::new();
    // Side membership by dense index; vertex 0 is always on the "S" side so each
    // bipartition is visited once.
    for mask in 0u32..1 << idx.count.saturating_sub(1) {
        let in_s = |x: usize| x == 0 || mask >> (x - 1) & 1 == 0;
        let mut boundary = EdgeSet::EMPTY;
        let mut s_to_t = 0;
        for e in view.present() {
            let (t, h) = orientation.direction(view, e);
            let (t, h) = (idx.of(t), idx.of(h));
            if in_s(t) != in_s(h) {
                boundary.insert(e);
                s_to_t += in_s(t) as usize;
            }
        }
        if boundary.is_empty() || (s_to_t != 0 && s_to_t != boundary.len()) {
            continue;
        }
        if view.component_count(view.present().difference(boundary)) == components + 1 {
            bonds.insert(boundary);
        }
    }
    Ok(bonds.into_iter().collect())
}

/// Brute-force directed-cut test: repeatedly peel a directed bond off `edges`.
pub fn directed_cut_oracle(
    view: &GraphView,
    orientation: &Orientation,
    edges: EdgeSet,
) -> Result<bool> {
    if view.present().len() > ORACLE_EDGE_CAP {
        return Err(Error::ResourceCap {
            what: "directed-cut oracle edge count",
            cap: ORACLE_EDGE_CAP as u64,
        });
    }
    if !edges.is_subset(view.present()) {
        return Ok(false);
    }
    let bonds = directed_bonds(view, orientation)?;
    Ok(peel(edges, &bonds, &mut HashMap::new()))
}

/// Verdict of the peeling oracle for every subset of the present edges.
pub fn directed_cut_table(
    view: &GraphView,
    orientation: &Orientation,
) -> Result<HashMap<EdgeSet, bool>> {
    if view.present().len() > ORACLE_EDGE_CAP {
        return Err(Error::ResourceCap {
            what: "directed-cut oracle edge count",
            cap: ORACLE_EDGE_CAP as u64,
        });
    }
    let bonds = directed_bonds(view, orientation)?;
    let mut memo = HashMap::new();
    for d in view.present().subsets() {
        peel(d, &bonds, &mut memo);
    }
    memo.insert(EdgeSet::EMPTY, true);
    Ok(memo)
}

fn peel(edges: EdgeSet, bonds: &[EdgeSet], memo: &mut HashMap<EdgeSet, bool>) -> bool {
    if edges.is_empty() {
        return true;
    }
    if let Some(&known) = memo.get(&edges) {
        return known;
    }
    let verdict = bonds
        .iter()
        .any(|&b| b.is_subset(edges) && peel(edges.difference(b), bonds, memo));
    memo.insert(edges, verdict);
    verdict
}

/// Edge sets of all simple directed cycles, loops included.
pub fn directed_cycles(view: &GraphView, orientation: &Orientation) -> Vec<EdgeSet> {
    let g = Digraph::new(view, orientation, view.present());
    let mut cycles = Vec::new();
    for root in view.present() {
        let (t, h) = orientation.direction(view, root);
        let (t, h) = (g.index(t), g.index(h));
        if t == h {
            cycles.push(EdgeSet::single(root));
            continue;
        }
        // Every simple path h→t over edges larger than the root.
        let mut on_path = vec![false; g.vertex_count()];
        on_path[h] = true;
        let mut stack: Vec<(usize, usize)> = vec![(h, 0)];
        let mut path: Vec<EdgeId> = Vec::new();
        while let Some(&mut (x, ref mut i)) = stack.last_mut() {
            if *i >= g.out[x].len() {
                stack.pop();
                on_path[x] = false;
                path.pop();
                continue;
            }
            let (e, y) = g.out[x][*i];
            *i += 1;
            if e <= root || on_path[y] {
                continue;
            }
            if y == t {
                cycles.push(path.iter().copied().collect::<EdgeSet>().with(e).with(root));
                continue;
            }
            on_path[y] = true;
            path.push(e);
            stack.push((y, 0));
        }
    }
    cycles
}
