//! Cut, Eulerian and Eulerian-cut equivalence of orientations.
//!
//! Classes are always computed as the transitive closure of the pairwise
//! predicate, so transitivity of each relation is a checkable property rather
//! than an assumption.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::dsu::DisjointSets;
use crate::edge_set::{EdgeId, EdgeSet};
use crate::error::{Error, Result};
use crate::multigraph::{GraphView, DEFAULT_FOREST_CAP};
use crate::orientation::{
    directed_bonds, directed_cycles, enumerate_orientations, is_acyclic, is_directed_cut,
    is_directed_eulerian, is_totally_cyclic, Orientation,
};
use crate::tutte::{
    evaluate, tutte_activity_expansion, tutte_deletion_contraction, TuttePolynomial,
};

/// Largest difference set the Eulerian-cut split search accepts.
pub const SPLIT_SEARCH_CAP: usize = 20;

/// Identities needing full enumeration are skipped above this many edges.
pub const IDENTITY_EDGE_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Eulerian,
    Cut,
    EulerianCut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Restriction {
    All,
    TotallyCyclic,
    Acyclic,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Eulerian => "eulerian",
            Relation::Cut => "cut",
            Relation::EulerianCut => "eulerian_cut",
        }
    }
}

impl Restriction {
    pub fn name(self) -> &'static str {
        match self {
            Restriction::All => "all",
            Restriction::TotallyCyclic => "totally_cyclic",
            Restriction::Acyclic => "acyclic",
        }
    }

    pub fn admits(self, view: &GraphView, orientation: &Orientation) -> bool {
        match self {
            Restriction::All => true,
            Restriction::TotallyCyclic => is_totally_cyclic(view, orientation),
            Restriction::Acyclic => is_acyclic(view, orientation),
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eulerian" => Ok(Relation::Eulerian),
            "cut" => Ok(Relation::Cut),
            "eulerian_cut" | "eulerian-cut" => Ok(Relation::EulerianCut),
            _ => Err(Error::parse(1, format!("unknown relation {:?}", s))),
        }
    }
}

impl FromStr for Restriction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Restriction::All),
            "totally_cyclic" | "totally-cyclic" => Ok(Restriction::TotallyCyclic),
            "acyclic" => Ok(Restriction::Acyclic),
            _ => Err(Error::parse(1, format!("unknown restriction {:?}", s))),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Edges on which two orientations of the same view disagree.
pub fn difference_set(a: &Orientation, b: &Orientation) -> Result<EdgeSet> {
    if a.domain() != b.domain() {
        return Err(Error::ViewMismatch);
    }
    Ok(a.reversed().symmetric_difference(b.reversed()))
}

fn checked_difference(view: &GraphView, a: &Orientation, b: &Orientation) -> Result<EdgeSet> {
    if a.domain() != view.present() {
        return Err(Error::ViewMismatch);
    }
    difference_set(a, b)
}

pub fn eulerian_equivalent(view: &GraphView, a: &Orientation, b: &Orientation) -> Result<bool> {
    let d = checked_difference(view, a, b)?;
    Ok(is_directed_eulerian(view, a, d))
}

pub fn cut_equivalent(view: &GraphView, a: &Orientation, b: &Orientation) -> Result<bool> {
    let d = checked_difference(view, a, b)?;
    Ok(is_directed_cut(view, a, d))
}

/// Some split of the difference set into a directed Eulerian part and a
/// directed cut. Plain search over all `2^|D|` splits.
pub fn eulerian_cut_equivalent(view: &GraphView, a: &Orientation, b: &Orientation) -> Result<bool> {
    let d = checked_difference(view, a, b)?;
    if d.len() > SPLIT_SEARCH_CAP {
        return Err(Error::ResourceCap {
            what: "Eulerian-cut split search size",
            cap: SPLIT_SEARCH_CAP as u64,
        });
    }
    Ok(d.subsets().any(|part| {
        is_directed_eulerian(view, a, part) && is_directed_cut(view, a, d.difference(part))
    }))
}

pub fn related(
    view: &GraphView,
    relation: Relation,
    a: &Orientation,
    b: &Orientation,
) -> Result<bool> {
    match relation {
        Relation::Eulerian => eulerian_equivalent(view, a, b),
        Relation::Cut => cut_equivalent(view, a, b),
        Relation::EulerianCut => eulerian_cut_equivalent(view, a, b),
    }
}

/// Orientations admitted by the restriction, in lexicographic order.
pub fn restricted_orientations(
    view: &GraphView,
    restriction: Restriction,
    cap: usize,
) -> Result<Vec<Orientation>> {
    Ok(enumerate_orientations(view, cap)?
        .filter(|o| restriction.admits(view, o))
        .collect())
}

/// A partition of a restricted orientation set into equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub relation: Relation,
    pub restriction: Restriction,
    /// Each block sorted lexicographically; blocks ordered by their minimum.
    pub blocks: Vec<Vec<Orientation>>,
}

impl ClassPartition {
    fn from_groups(
        relation: Relation,
        restriction: Restriction,
        mut blocks: Vec<Vec<Orientation>>,
    ) -> Self {
        for b in blocks.iter_mut() {
            b.sort();
        }
        blocks.sort_by(|x, y| x[0].cmp(&y[0]));
        ClassPartition {
            relation,
            restriction,
            blocks,
        }
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    /// Lexicographically smallest member of each block.
    pub fn representatives(&self) -> Vec<&Orientation> {
        self.blocks.iter().map(|b| &b[0]).collect()
    }

    pub fn block_of(&self, orientation: &Orientation) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(orientation).is_ok())
    }
}

/// Classes as connected components of the pairwise relation.
pub fn classes(
    view: &GraphView,
    relation: Relation,
    restriction: Restriction,
    cap: usize,
) -> Result<ClassPartition> {
    let members = restricted_orientations(view, restriction, cap)?;
    let mut dsu = DisjointSets::new(members.len());
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if !dsu.same(i, j) && related(view, relation, &members[i], &members[j])? {
                dsu.union(i, j);
            }
        }
    }
    let blocks = dsu
        .groups()
        .into_iter()
        .map(|g| g.into_iter().map(|i| members[i].clone()).collect())
        .collect();
    Ok(ClassPartition::from_groups(relation, restriction, blocks))
}

/// Classes as closures under elementary moves: reversing one directed cycle
/// (Eulerian), one directed bond (cut), or either (Eulerian-cut), never
/// leaving the restricted set.
pub fn classes_by_flips(
    view: &GraphView,
    relation: Relation,
    restriction: Restriction,
    cap: usize,
) -> Result<ClassPartition> {
    let members = restricted_orientations(view, restriction, cap)?;
    let mut seen: HashSet<Orientation> = HashSet::new();
    let mut blocks = Vec::new();
    for start in &members {
        if !seen.insert(start.clone()) {
            continue;
        }
        let mut block = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(o) = queue.pop_front() {
            let mut moves = Vec::new();
            if relation != Relation::Cut {
                moves.extend(directed_cycles(view, &o));
            }
            if relation != Relation::Eulerian {
                moves.extend(directed_bonds(view, &o)?);
            }
            for m in moves {
                let next = o.reverse_edges(m);
                if restriction.admits(view, &next) && seen.insert(next.clone()) {
                    block.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        blocks.push(block);
    }
    Ok(ClassPartition::from_groups(relation, restriction, blocks))
}

/// Number of Eulerian classes of totally cyclic orientations.
pub fn alpha(view: &GraphView, cap: usize) -> Result<usize> {
    Ok(classes(view, Relation::Eulerian, Restriction::TotallyCyclic, cap)?.count())
}

/// Acyclic orientations in which the class of base vertex `source` is the
/// only vertex without incoming edges.
pub fn acyclic_with_unique_source(view: &GraphView, source: usize, cap: usize) -> Result<usize> {
    let source = view.class_of(source);
    let vertices = view.vertices();
    Ok(enumerate_orientations(view, cap)?
        .filter(|o| is_acyclic(view, o))
        .filter(|o| {
            let mut has_incoming = vec![false; view.base().vertex_count()];
            for e in view.present() {
                has_incoming[o.direction(view, e).1] = true;
            }
            vertices.iter().all(|&v| has_incoming[v] != (v == source))
        })
        .count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quantity {
    Count(BigInt),
    Polynomial(TuttePolynomial),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Count(n) => write!(f, "{}", n),
            Quantity::Polynomial(p) => write!(f, "{}", p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    /// Enumerated side; `None` when skipped.
    pub lhs: Option<Quantity>,
    /// Closed-form side, usually a Tutte evaluation.
    pub rhs: Quantity,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    fn push(&mut self, name: impl Into<String>, lhs: Option<Quantity>, rhs: Quantity) {
        let status = match &lhs {
            None => CheckStatus::Skipped,
            Some(l) if *l == rhs => CheckStatus::Pass,
            Some(_) => CheckStatus::Fail,
        };
        self.checks.push(IdentityCheck {
            name: name.into(),
            lhs,
            rhs,
            status,
        });
    }

    fn push_count(&mut self, name: impl Into<String>, lhs: Option<usize>, rhs: BigInt) {
        self.push(
            name,
            lhs.map(|n| Quantity::Count(BigInt::from(n))),
            Quantity::Count(rhs),
        );
    }
}

/// The count attached to a (relation, restriction) pair, as a Tutte evaluation point.
pub fn tutte_point(relation: Relation, restriction: Restriction) -> Option<(i64, i64)> {
    match (relation, restriction) {
        (Relation::Eulerian, Restriction::TotallyCyclic) => Some((0, 1)),
        (Relation::Cut, Restriction::Acyclic) => Some((1, 0)),
        (Relation::Eulerian, Restriction::All) => Some((2, 1)),
        (Relation::Cut, Restriction::All) => Some((1, 2)),
        (Relation::EulerianCut, Restriction::All) => Some((1, 1)),
        _ => None,
    }
}

/// Every enumerative identity for `view`, plus the recursive properties of
/// the Eulerian class count on each edge.
pub fn verify_identities(view: &GraphView, cap: usize) -> Result<IdentityReport> {
    let t = tutte_deletion_contraction(view);
    let at = |x, y| evaluate(&t, x, y);
    let enumerable = view.present().len() <= IDENTITY_EDGE_LIMIT.min(cap);
    let mut report = IdentityReport::default();

    let activity = if enumerable {
        Some(Quantity::Polynomial(tutte_activity_expansion(
            view,
            DEFAULT_FOREST_CAP,
        )?))
    } else {
        None
    };
    report.push(
        "activity_expansion = deletion_contraction",
        activity,
        Quantity::Polynomial(t.clone()),
    );

    let count = |relation, restriction| -> Result<Option<usize>> {
        if enumerable {
            Ok(Some(classes(view, relation, restriction, cap)?.count()))
        } else {
            Ok(None)
        }
    };
    for (relation, restriction) in [
        (Relation::Eulerian, Restriction::TotallyCyclic),
        (Relation::Cut, Restriction::Acyclic),
        (Relation::Eulerian, Restriction::All),
        (Relation::Cut, Restriction::All),
        (Relation::EulerianCut, Restriction::All),
    ] {
        let (x, y) = tutte_point(relation, restriction).expect("pair has a point");
        report.push_count(
            format!("{}_classes_{} = T({},{})", relation, restriction, x, y),
            count(relation, restriction)?,
            at(x, y),
        );
    }

    let size = |restriction| -> Result<Option<usize>> {
        if enumerable {
            Ok(Some(restricted_orientations(view, restriction, cap)?.len()))
        } else {
            Ok(None)
        }
    };
    report.push_count(
        "acyclic_orientations = T(2,0)",
        size(Restriction::Acyclic)?,
        at(2, 0),
    );
    report.push_count(
        "totally_cyclic_orientations = T(0,2)",
        size(Restriction::TotallyCyclic)?,
        at(0, 2),
    );
    report.push_count(
        "spanning_forests = T(1,1)",
        enumerable
            .then(|| view.spanning_forests(DEFAULT_FOREST_CAP).map(|f| f.len()))
            .transpose()?,
        at(1, 1),
    );

    if view.is_connected() {
        for v in view.vertices() {
            report.push_count(
                format!("acyclic_unique_source({}) = T(1,0)", v),
                enumerable
                    .then(|| acyclic_with_unique_source(view, v, cap))
                    .transpose()?,
                at(1, 0),
            );
        }
    }

    for check in inductive_checks(view, cap, enumerable)? {
        report.checks.push(check);
    }
    Ok(report)
}

/// The recursive properties of the Eulerian class count `α`: `α = 1` on the
/// edgeless minor; per edge, `α(G) = α(G-e)` for loops, `α(G) = 0` for
/// bridges, and `α(G) = α(G-e) + α(G/e)` otherwise.
pub fn inductive_checks(
    view: &GraphView,
    cap: usize,
    enumerable: bool,
) -> Result<Vec<IdentityCheck>> {
    let mut report = IdentityReport::default();
    let edgeless = view
        .present()
        .iter()
        .try_fold(view.clone(), |v, e| v.delete(e))?;
    report.push_count(
        "alpha(edgeless) = 1",
        enumerable.then(|| alpha(&edgeless, cap)).transpose()?,
        BigInt::from(1),
    );
    if !enumerable {
        for e in view.present() {
            report.push_count(format!("alpha recursion on {}", e), None, BigInt::from(0));
        }
        return Ok(report.checks);
    }
    let whole = alpha(view, cap)?;
    for e in view.present() {
        let name = |kind: &str| format!("alpha {} {}", kind, e);
        if view.is_loop(e)? {
            let rest = alpha(&view.delete(e)?, cap)?;
            report.push_count(name("loop"), Some(whole), BigInt::from(rest));
        } else if view.is_bridge(e)? {
            report.push_count(name("bridge"), Some(whole), BigInt::from(0));
        } else {
            let split = alpha(&view.delete(e)?, cap)? + alpha(&view.contract(e)?, cap)?;
            report.push_count(name("split"), Some(whole), BigInt::from(split));
        }
    }
    Ok(report.checks)
}

/// Smallest edge that is neither a loop nor a bridge, if any.
pub fn splitting_edge(view: &GraphView) -> Option<EdgeId> {
    view.present()
        .iter()
        .find(|&e| !view.is_loop(e).unwrap_or(true) && !view.is_bridge(e).unwrap_or(true))
}
