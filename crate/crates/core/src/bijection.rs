//! The staged bijection between Eulerian classes of totally cyclic
//! orientations and spanning trees without internally active edges.
//!
//! Everything is relative to a [`NormalContext`]: a connected base graph whose
//! edge order is the identifier order, and a fixed *normal* orientation. An
//! orientation is *reduced* when every edge that disagrees with the normal
//! orientation lies on no directed cycle whose other edges are all smaller.
//! Each Eulerian class of totally cyclic orientations has exactly one reduced
//! member, reached by [`NormalContext::normalize`].
//!
//! The forward map walks the edges from largest to smallest. At stage `k` the
//! current largest oriented edge is deleted when it is a loop or cycle
//! flippable in the contraction of the unoriented edges, and unoriented
//! otherwise; the contraction is renormalized around every step. After all
//! `q` stages the unoriented edges form the tree.
//!
//! A stage state at stage `k` belongs to the set `O_k` when:
//!
//! * (a) the `k` largest edges are unoriented or deleted, the others are
//!   oriented, and the unoriented edges are acyclic;
//! * (b) the contraction is connected and totally cyclic;
//! * (c) the contraction is reduced;
//! * (d) every unoriented edge that is a bridge of the non-deleted subgraph
//!   has a smaller edge in the cut of the base graph it defines.
//!
//! [`NormalContext::stage_step`] maps `O_{k-1}` bijectively onto `O_k`, and
//! [`NormalContext::inverse_stage`] undoes it.

use std::fmt;

use rand::RngCore;
use serde::Serialize;

use crate::dsu::DisjointSets;
use crate::edge_set::{EdgeId, EdgeSet};
use crate::error::{Error, Result};
use crate::multigraph::{GraphView, Multigraph};
use crate::orientation::{is_cycle_flippable, is_totally_cyclic, Digraph, Orientation};

/// Largest number of free bits the exhaustive searches will enumerate.
pub const SEARCH_BIT_CAP: usize = 20;

/// Per-edge status of a stage state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeState {
    Oriented { reversed: bool },
    Unoriented,
    Deleted,
}

/// A partial orientation of the base graph during the staged algorithm.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StageState {
    oriented: EdgeSet,
    reversed: EdgeSet,
    unoriented: EdgeSet,
    stage: usize,
}

impl StageState {
    /// Stage 0 with every edge of `orientation` oriented.
    pub fn initial(orientation: &Orientation) -> Self {
        StageState {
            oriented: orientation.domain(),
            reversed: orientation.reversed(),
            unoriented: EdgeSet::EMPTY,
            stage: 0,
        }
    }

    pub fn new(
        oriented: EdgeSet,
        reversed: EdgeSet,
        unoriented: EdgeSet,
        stage: usize,
    ) -> Result<Self> {
        if !reversed.is_subset(oriented) || !oriented.intersection(unoriented).is_empty() {
            return Err(Error::InvalidInput(
                "stage state sets overlap inconsistently".into(),
            ));
        }
        Ok(StageState {
            oriented,
            reversed,
            unoriented,
            stage,
        })
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn oriented(&self) -> EdgeSet {
        self.oriented
    }

    pub fn unoriented(&self) -> EdgeSet {
        self.unoriented
    }

    pub fn status(&self, e: EdgeId) -> EdgeState {
        if self.oriented.contains(e) {
            EdgeState::Oriented {
                reversed: self.reversed.contains(e),
            }
        } else if self.unoriented.contains(e) {
            EdgeState::Unoriented
        } else {
            EdgeState::Deleted
        }
    }

    /// The bits of the oriented edges.
    pub fn orientation(&self) -> Orientation {
        Orientation::new(self.oriented, self.reversed).expect("reversed is within oriented")
    }

    fn set(&self, e: EdgeId, status: EdgeState) -> Self {
        let mut next = self.clone();
        next.oriented.remove(e);
        next.reversed.remove(e);
        next.unoriented.remove(e);
        match status {
            EdgeState::Oriented { reversed } => {
                next.oriented.insert(e);
                if reversed {
                    next.reversed.insert(e);
                }
            }
            EdgeState::Unoriented => next.unoriented.insert(e),
            EdgeState::Deleted => {}
        }
        next
    }

    fn reverse(&self, edges: EdgeSet) -> Self {
        let mut next = self.clone();
        next.reversed = self
            .reversed
            .symmetric_difference(edges.intersection(self.oriented));
        next
    }

    /// One character per base edge: `+`/`-` oriented, `u` unoriented, `x` deleted.
    pub fn render(&self, edge_count: usize) -> String {
        (0..edge_count)
            .map(|i| match self.status(EdgeId(i)) {
                EdgeState::Oriented { reversed: false } => '+',
                EdgeState::Oriented { reversed: true } => '-',
                EdgeState::Unoriented => 'u',
                EdgeState::Deleted => 'x',
            })
            .collect()
    }
}

impl fmt::Debug for StageState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .oriented
            .union(self.unoriented)
            .max()
            .map_or(0, |e| e.0 + 1);
        write!(f, "StageState(k={}, {})", self.stage, self.render(width))
    }
}

/// Which of the conditions (a)–(d) a stage state satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StageConditions {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl StageConditions {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceAction {
    NormalizeReversal,
    Unorient,
    Delete,
    /// Inverse: an edge gets its orientation back.
    Reorient,
    /// Inverse: a cycle through the re-oriented edge is reversed.
    CycleReversal,
    /// Inverse: the exhaustive preimage search was used.
    FallbackSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionSummary {
    pub vertices: usize,
    pub oriented_edges: usize,
    pub state: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub stage: usize,
    pub action: TraceAction,
    pub edge: EdgeId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<EdgeSet>,
    pub contraction: ContractionSummary,
}

type Trace<'t> = Option<&'t mut Vec<TraceEvent>>;

/// Base graph plus the fixed normal orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalContext {
    graph: Multigraph,
    normal: Orientation,
}

impl NormalContext {
    pub fn new(graph: Multigraph, normal: Orientation) -> Result<Self> {
        if normal.domain() != graph.all_edges() {
            return Err(Error::InvalidInput(
                "normal orientation must orient every edge".into(),
            ));
        }
        Ok(NormalContext { graph, normal })
    }

    /// Normal orientation `+` on every edge.
    pub fn with_stored_directions(graph: Multigraph) -> Self {
        let normal = Orientation::forward(graph.all_edges());
        NormalContext { graph, normal }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn normal(&self) -> &Orientation {
        &self.normal
    }

    fn q(&self) -> usize {
        self.graph.edge_count()
    }

    /// Edge processed at stage `k` (1-based): the `k`-th largest.
    pub fn stage_edge(&self, k: usize) -> EdgeId {
        EdgeId(self.q() - k)
    }

    /// The base graph with unoriented edges contracted and deleted edges
    /// removed, with the inherited orientation of the oriented edges.
    pub fn contraction_of(&self, state: &StageState) -> (GraphView<'_>, Orientation) {
        let view = self
            .graph
            .minor(state.oriented, state.unoriented)
            .expect("stage state sets are disjoint subsets of the graph");
        (view, state.orientation())
    }

    fn summary(&self, state: &StageState) -> ContractionSummary {
        let (view, _) = self.contraction_of(state);
        ContractionSummary {
            vertices: view.vertex_count(),
            oriented_edges: state.oriented.len(),
            state: state.render(self.q()),
        }
    }

    fn record(
        &self,
        trace: &mut Trace<'_>,
        state: &StageState,
        action: TraceAction,
        edge: EdgeId,
        cycle: Option<EdgeSet>,
    ) {
        if let Some(events) = trace.as_deref_mut() {
            events.push(TraceEvent {
                stage: state.stage,
                action,
                edge,
                cycle,
                contraction: self.summary(state),
            });
        }
    }

    /// True if `e` disagrees with the normal orientation and lies on a
    /// directed cycle of the contraction whose other edges are all smaller.
    fn violates(&self, view: &GraphView, orientation: &Orientation, e: EdgeId) -> bool {
        if orientation.is_reversed(e) == self.normal.is_reversed(e) {
            return false;
        }
        let (t, h) = orientation.direction(view, e);
        if t == h {
            return true;
        }
        let smaller = view.present().intersection(EdgeSet::prefix(e.0));
        let g = Digraph::new(view, orientation, smaller);
        g.reaches(g.index(h), g.index(t), None)
    }

    pub fn is_reduced(&self, state: &StageState) -> bool {
        let (view, o) = self.contraction_of(state);
        state.oriented.iter().all(|e| !self.violates(&view, &o, e))
    }

    /// Reduced representative of the Eulerian class of the contraction.
    pub fn normalize(&self, state: &StageState) -> Result<StageState> {
        self.normalize_impl(state, None, &mut None)
    }

    /// [`normalize`](Self::normalize) choosing each reversed cycle by a
    /// randomized search instead of smallest-edge-first.
    pub fn normalize_with_rng(
        &self,
        state: &StageState,
        rng: &mut dyn RngCore,
    ) -> Result<StageState> {
        self.normalize_impl(state, Some(rng), &mut None)
    }

    /// Normalizes a full orientation of the base graph.
    pub fn normalize_orientation(&self, orientation: &Orientation) -> Result<Orientation> {
        Ok(self
            .normalize(&StageState::initial(orientation))?
            .orientation())
    }

    fn normalize_impl(
        &self,
        state: &StageState,
        mut rng: Option<&mut dyn RngCore>,
        trace: &mut Trace<'_>,
    ) -> Result<StageState> {
        {
            let (view, o) = self.contraction_of(state);
            if !is_totally_cyclic(&view, &o) {
                return Err(Error::InvalidInput(
                    "normalization needs a totally cyclic contraction".into(),
                ));
            }
        }
        let mut current = state.clone();
        let mut fuel = fuel(self.q());
        loop {
            let (view, o) = self.contraction_of(&current);
            let Some(e0) = current
                .oriented
                .to_vec()
                .into_iter()
                .rev()
                .find(|&e| self.violates(&view, &o, e))
            else {
                return Ok(current);
            };
            if fuel == 0 {
                return Err(Error::Internal(format!(
                    "normalization did not converge (last violating edge {})",
                    e0
                )));
            }
            fuel -= 1;
            let (t, h) = o.direction(&view, e0);
            let g = Digraph::new(&view, &o, view.present());
            let path = g
                .find_path(
                    g.index(h),
                    g.index(t),
                    &|f| f < e0,
                    rng.as_mut().map(|r| &mut **r as &mut dyn RngCore),
                )
                .ok_or_else(|| Error::Internal(format!("no cycle through {}", e0)))?;
            let cycle: EdgeSet = path.into_iter().collect::<EdgeSet>().with(e0);
            current = current.reverse(cycle);
            self.record(
                trace,
                &current,
                TraceAction::NormalizeReversal,
                e0,
                Some(cycle),
            );
        }
    }

    /// Conditions (a)–(d) for membership in `O_k`, `k = state.stage()`.
    pub fn conditions(&self, state: &StageState) -> StageConditions {
        let q = self.q();
        let k = state.stage;
        let all = self.graph.all_edges();
        let top = all.difference(EdgeSet::prefix(q.saturating_sub(k)));
        let a = k <= q
            && state.oriented.union(state.unoriented).is_subset(all)
            && state.oriented == all.difference(top)
            && {
                let mut dsu = DisjointSets::new(self.graph.vertex_count());
                state.unoriented.iter().all(|e| {
                    let (u, v) = self.graph.endpoints(e);
                    dsu.union(u, v)
                })
            };
        if !a {
            // The remaining checks assume well-formed sets.
            return StageConditions {
                a,
                b: false,
                c: false,
                d: false,
            };
        }
        let (view, o) = self.contraction_of(state);
        let b = view.is_connected() && is_totally_cyclic(&view, &o);
        let c = self.is_reduced(state);
        let d = self.bridge_condition(state);
        StageConditions { a, b, c, d }
    }

    fn bridge_condition(&self, state: &StageState) -> bool {
        let subgraph = self
            .graph
            .minor(state.oriented.union(state.unoriented), EdgeSet::EMPTY)
            .expect("disjoint sets");
        state.unoriented.iter().all(|e| {
            if !subgraph.is_bridge(e).unwrap_or(false) {
                return true;
            }
            let rest = subgraph.present().without(e);
            let mut dsu = DisjointSets::new(self.graph.vertex_count());
            for f in rest {
                let (u, v) = self.graph.endpoints(f);
                dsu.union(u, v);
            }
            let (u, v) = self.graph.endpoints(e);
            let (side_u, side_v) = (dsu.find(u), dsu.find(v));
            self.graph.edge_ids().any(|f| {
                let (x, y) = self.graph.endpoints(f);
                let (x, y) = (dsu.find(x), dsu.find(y));
                f < e && ((x == side_u && y == side_v) || (x == side_v && y == side_u))
            })
        })
    }

    fn require_member(&self, state: &StageState, what: &str) -> Result<()> {
        let c = self.conditions(state);
        if c.all() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{} is not in O_{}: {:?}",
                what, state.stage, c
            )))
        }
    }

    /// One stage of the forward algorithm: `O_{k-1}` → `O_k`.
    pub fn stage_step(&self, state: &StageState) -> Result<StageState> {
        self.stage_step_impl(state, &mut None)
    }

    fn stage_step_impl(&self, state: &StageState, trace: &mut Trace<'_>) -> Result<StageState> {
        let e = state
            .oriented
            .max()
            .ok_or_else(|| Error::InvalidInput("stage state has no oriented edge".into()))?;
        let reduced = self.normalize_impl(state, None, trace)?;
        let (view, o) = self.contraction_of(&reduced);
        let delete = view.is_loop(e)? || is_cycle_flippable(&view, &o, e)?;
        let mut next = reduced.set(
            e,
            if delete {
                EdgeState::Deleted
            } else {
                EdgeState::Unoriented
            },
        );
        next.stage += 1;
        self.record(
            trace,
            &next,
            if delete {
                TraceAction::Delete
            } else {
                TraceAction::Unorient
            },
            e,
            None,
        );
        let next = self.normalize_impl(&next, None, trace)?;
        let c = self.conditions(&next);
        if !c.all() {
            return Err(Error::Internal(format!(
                "stage {} output violates O_k conditions {:?}",
                next.stage, c
            )));
        }
        Ok(next)
    }

    fn check_forward_input(&self, orientation: &Orientation) -> Result<()> {
        let view = self.graph.view();
        if orientation.domain() != view.present() {
            return Err(Error::ViewMismatch);
        }
        if !view.is_connected() {
            return Err(Error::Unsupported(
                "the bijection is defined for connected graphs".into(),
            ));
        }
        if let Some(e) = self
            .graph
            .edge_ids()
            .find(|&e| view.is_bridge(e).unwrap_or(false))
        {
            return Err(Error::NoTotallyCyclic(format!("{} is a bridge", e)));
        }
        if !is_totally_cyclic(&view, orientation) {
            return Err(Error::NoTotallyCyclic(format!(
                "orientation {} has a directed cut",
                orientation
            )));
        }
        Ok(())
    }

    /// The spanning tree of the Eulerian class of a totally cyclic orientation.
    pub fn forward(&self, orientation: &Orientation) -> Result<EdgeSet> {
        self.forward_impl(orientation, &mut None)
    }

    pub fn forward_traced(&self, orientation: &Orientation) -> Result<(EdgeSet, Vec<TraceEvent>)> {
        let mut events = Vec::new();
        let tree = self.forward_impl(orientation, &mut Some(&mut events))?;
        Ok((tree, events))
    }

    /// Every stage state visited by the forward map, from `O_0` to `O_q`.
    pub fn forward_states(&self, orientation: &Orientation) -> Result<Vec<StageState>> {
        self.check_forward_input(orientation)?;
        let mut states = vec![self.normalize(&StageState::initial(orientation))?];
        for _ in 0..self.q() {
            let next = self.stage_step(states.last().expect("nonempty"))?;
            states.push(next);
        }
        Ok(states)
    }

    fn forward_impl(&self, orientation: &Orientation, trace: &mut Trace<'_>) -> Result<EdgeSet> {
        if self.q() == 0 {
            return Ok(EdgeSet::EMPTY);
        }
        self.check_forward_input(orientation)?;
        let mut state = self.normalize_impl(&StageState::initial(orientation), None, trace)?;
        self.require_member(&state, "normalized input")
            .map_err(|e| Error::Internal(e.to_string()))?;
        for _ in 0..self.q() {
            state = self.stage_step_impl(&state, trace)?;
        }
        let tree = state.unoriented;
        let view = self.graph.view();
        let forest = view
            .spanning_forest(tree)
            .map_err(|_| Error::Internal(format!("output {:?} is not a spanning tree", tree)))?;
        if view.activities(&forest)?.internal != 0 {
            return Err(Error::Internal(format!(
                "output {:?} has an internally active edge",
                tree
            )));
        }
        Ok(tree)
    }

    /// The unique preimage in `O_{k-1}` of a state in `O_k`.
    pub fn inverse_stage(&self, state: &StageState) -> Result<StageState> {
        self.inverse_stage_impl(state, &mut None)
    }

    fn inverse_stage_impl(&self, state: &StageState, trace: &mut Trace<'_>) -> Result<StageState> {
        if state.stage == 0 {
            return Err(Error::InvalidInput("stage 0 has no preimage".into()));
        }
        self.require_member(state, "state")?;
        let e = self.stage_edge(state.stage);
        let normal_bit = self.normal.is_reversed(e);
        let mut lowered = state.clone();
        lowered.stage -= 1;

        let candidate = match state.status(e) {
            EdgeState::Deleted => {
                let c = lowered.set(
                    e,
                    EdgeState::Oriented {
                        reversed: normal_bit,
                    },
                );
                self.record(trace, &c, TraceAction::Reorient, e, None);
                let (view, o) = self.contraction_of(&c);
                if !self.is_reduced(&c) || !(view.is_loop(e)? || is_cycle_flippable(&view, &o, e)?)
                {
                    return Err(Error::Internal(format!(
                        "re-inserting deleted {} did not give a reduced cycle-flippable edge",
                        e
                    )));
                }
                Some(c)
            }
            EdgeState::Unoriented => self.lift_unoriented(&lowered, e, normal_bit, trace)?,
            EdgeState::Oriented { .. } => {
                return Err(Error::Internal(format!("{} is still oriented", e)))
            }
        };

        if let Some(c) = candidate {
            if self.conditions(&c).all() && self.stage_step(&c)? == *state {
                return Ok(c);
            }
        }
        self.record(trace, &lowered, TraceAction::FallbackSearch, e, None);
        self.search_preimage(state)
    }

    /// The constructive preimage of an unoriented edge: orient it so the
    /// contraction stays totally cyclic, normalize, and while the edge is
    /// cycle flippable flip it, reverse a directed cycle through it and
    /// normalize again. `None` when the loop runs out of fuel.
    fn lift_unoriented(
        &self,
        lowered: &StageState,
        e: EdgeId,
        normal_bit: bool,
        trace: &mut Trace<'_>,
    ) -> Result<Option<StageState>> {
        let mut current = [normal_bit, !normal_bit]
            .into_iter()
            .map(|bit| lowered.set(e, EdgeState::Oriented { reversed: bit }))
            .find(|c| {
                let (view, o) = self.contraction_of(c);
                view.is_connected() && is_totally_cyclic(&view, &o)
            })
            .ok_or_else(|| {
                Error::Internal(format!("neither orientation of {} is totally cyclic", e))
            })?;
        self.record(trace, &current, TraceAction::Reorient, e, None);
        let mut fuel = fuel(self.q());
        loop {
            current = self.normalize_impl(&current, None, trace)?;
            let (view, o) = self.contraction_of(&current);
            if view.is_loop(e)? {
                return Ok(None);
            }
            if !is_cycle_flippable(&view, &o, e)? {
                return Ok(Some(current));
            }
            if fuel == 0 {
                return Ok(None);
            }
            fuel -= 1;
            let flipped = current.reverse(EdgeSet::single(e));
            let o = flipped.orientation();
            let (t, h) = o.direction(&view, e);
            let g = Digraph::new(&view, &o, view.present());
            let path = g
                .find_path(g.index(h), g.index(t), &|f| f != e, None)
                .ok_or_else(|| Error::Internal(format!("no cycle through flipped {}", e)))?;
            let cycle = path.into_iter().collect::<EdgeSet>().with(e);
            current = flipped.reverse(cycle);
            self.record(trace, &current, TraceAction::CycleReversal, e, Some(cycle));
        }
    }

    /// Exhaustive search of `O_{k-1}` for the member mapped onto `state`.
    fn search_preimage(&self, state: &StageState) -> Result<StageState> {
        let e = self.stage_edge(state.stage);
        let free = state.oriented.with(e);
        if free.len() > SEARCH_BIT_CAP {
            return Err(Error::ResourceCap {
                what: "preimage search bits",
                cap: SEARCH_BIT_CAP as u64,
            });
        }
        let mut base = state.set(e, EdgeState::Oriented { reversed: false });
        base.stage -= 1;
        for bits in free.subsets() {
            let candidate = StageState {
                reversed: bits,
                ..base.clone()
            };
            if self.conditions(&candidate).all() && self.stage_step(&candidate)? == *state {
                return Ok(candidate);
            }
        }
        Err(Error::Internal(format!(
            "no preimage of {:?} exists in O_{}",
            state,
            state.stage - 1
        )))
    }

    /// The reduced totally cyclic orientation mapped to `tree`.
    pub fn inverse(&self, tree: EdgeSet) -> Result<Orientation> {
        self.inverse_impl(tree, &mut None)
    }

    pub fn inverse_traced(&self, tree: EdgeSet) -> Result<(Orientation, Vec<TraceEvent>)> {
        let mut events = Vec::new();
        let o = self.inverse_impl(tree, &mut Some(&mut events))?;
        Ok((o, events))
    }

    fn inverse_impl(&self, tree: EdgeSet, trace: &mut Trace<'_>) -> Result<Orientation> {
        let view = self.graph.view();
        if self.q() == 0 {
            return if tree.is_empty() {
                Ok(Orientation::forward(EdgeSet::EMPTY))
            } else {
                Err(Error::InvalidInput("the graph has no edges".into()))
            };
        }
        if !view.is_connected() {
            return Err(Error::Unsupported(
                "the bijection is defined for connected graphs".into(),
            ));
        }
        if let Some(e) = self
            .graph
            .edge_ids()
            .find(|&e| view.is_bridge(e).unwrap_or(false))
        {
            return Err(Error::NoTotallyCyclic(format!("{} is a bridge", e)));
        }
        let forest = view.spanning_forest(tree)?;
        let activity = view.activities(&forest)?;
        if activity.internal != 0 {
            return Err(Error::InvalidInput(format!(
                "tree {:?} has internally active edges (activity ({}, {}))",
                tree, activity.internal, activity.external
            )));
        }
        let mut state = StageState {
            oriented: EdgeSet::EMPTY,
            reversed: EdgeSet::EMPTY,
            unoriented: tree,
            stage: self.q(),
        };
        self.require_member(&state, "tree")
            .map_err(|e| Error::Internal(e.to_string()))?;
        while state.stage > 0 {
            state = self.inverse_stage_impl(&state, trace)?;
        }
        let orientation = state.orientation();
        if self.forward(&orientation)? != tree {
            return Err(Error::Internal(format!(
                "inverse of {:?} does not map back to it",
                tree
            )));
        }
        Ok(orientation)
    }

    /// Every member of `O_k`, by enumerating all status assignments.
    pub fn stage_members(&self, k: usize) -> Result<Vec<StageState>> {
        let q = self.q();
        if k > q {
            return Err(Error::InvalidInput(format!("stage {} exceeds {}", k, q)));
        }
        if q > SEARCH_BIT_CAP {
            return Err(Error::ResourceCap {
                what: "stage enumeration edge count",
                cap: SEARCH_BIT_CAP as u64,
            });
        }
        let low = EdgeSet::prefix(q - k);
        let top = self.graph.all_edges().difference(low);
        let mut out = Vec::new();
        for unoriented in top.subsets() {
            for reversed in low.subsets() {
                let s = StageState {
                    oriented: low,
                    reversed,
                    unoriented,
                    stage: k,
                };
                if self.conditions(&s).all() {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }
}

fn fuel(q: usize) -> u64 {
    1u64 << q.min(32)
}
