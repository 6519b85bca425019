//! Finite changes and inducing on unions of top cylinders.
//!
//! A [`FiniteChange`] replaces the first `L` levels of a diagram by another
//! ordered diagram ending on the same level-`L` vertices. Inducing on a set
//! of top edges removes the other top edges and prunes whatever becomes
//! unreachable; the Vershik map of the result is the first-return map of the
//! original one on the kept cylinders.

use crate::diagram::{BratteliDiagram, Edge, VertexId};
use crate::dimension::Element;
use crate::error::{Error, Result};
use crate::eventual::EventuallyStationary;
use crate::matrix::{is_primitive, wielandt_bound, Primitivity};
use crate::ordered::{self, OrderedDiagram};
use crate::vershik::{EdgeRef, OrbitStream};
use crate::GroupPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteChange {
    head: OrderedDiagram,
}

impl FiniteChange {
    /// The replacement for levels `0..=head.depth()`.
    pub fn new(head: OrderedDiagram) -> Self {
        FiniteChange { head }
    }

    /// The change that leaves every diagram untouched.
    pub fn identity() -> Self {
        let root = BratteliDiagram::new(vec![vec![ordered::ROOT_LABEL.to_string()]], Vec::new()).expect("one level");
        FiniteChange {
            head: OrderedDiagram::new(root, Vec::new()).expect("root only"),
        }
    }

    /// The change restoring the first `depth` levels of `od`.
    pub fn prefix_of(od: &OrderedDiagram, depth: usize) -> Result<Self> {
        Ok(FiniteChange {
            head: od.truncate(depth)?,
        })
    }

    pub fn depth(&self) -> usize {
        self.head.depth()
    }

    pub fn head(&self) -> &OrderedDiagram {
        &self.head
    }
}

/// Replaces the first `L` levels of `od`; levels below `L` are kept as they are.
pub fn apply_finite_change(od: &OrderedDiagram, ch: &FiniteChange) -> Result<OrderedDiagram> {
    let l = ch.depth();
    if l == 0 {
        return Ok(od.clone());
    }
    if l > od.depth() {
        return Err(Error::LevelOutOfRange {
            level: l,
            depth: od.depth(),
        });
    }
    if ch.head.base().labels(l) != od.base().labels(l) {
        return Err(Error::InvalidDiagram(format!(
            "the change must end on the vertices of level {l}"
        )));
    }
    let mut levels = ch.head.base().levels().to_vec();
    levels.extend_from_slice(&od.base().levels()[l + 1..]);
    let mut edges = ch.head.base().edge_levels().to_vec();
    edges.extend_from_slice(&od.base().edge_levels()[l..]);
    let mut order = ch.head.order().to_vec();
    order.extend_from_slice(&od.order()[l..]);
    OrderedDiagram::new(BratteliDiagram::new(levels, edges)?, order)
}

fn apply_head(ev: &EventuallyStationary, ch: &FiniteChange) -> Result<EventuallyStationary> {
    let h = ev.head().depth();
    let l = ch.depth();
    let head = apply_finite_change(&ev.to_ordered(h.max(l)), ch)?;
    ev.with_head(head)
}

/// Finite change of a diagram with stationary tail; the result must still be
/// properly ordered.
pub fn apply_finite_change_stationary(ev: &EventuallyStationary, ch: &FiniteChange) -> Result<EventuallyStationary> {
    let out = apply_head(ev, ch)?;
    out.properly_ordered().into_result()?;
    Ok(out)
}

/// Removes the top edges whose ids are not in `keep` and prunes vertices
/// left without incoming edges. Top edge `i` of the result is the `i`-th
/// smallest id of `keep`.
pub fn induce_on_top(od: &OrderedDiagram, keep: &[usize]) -> Result<OrderedDiagram> {
    let keep = checked_keep(od, keep)?;
    let depth = od.depth();
    let mut levels = vec![od.base().labels(0).to_vec()];
    let mut edges = Vec::with_capacity(depth);
    let mut order = Vec::with_capacity(depth);
    let mut alive_prev: Vec<Option<usize>> = vec![Some(0)];
    for n in 1..=depth {
        let all = od.base().edges(n);
        let kept: Vec<usize> = (0..all.len())
            .filter(|&p| {
                if n == 1 {
                    keep.contains(&p)
                } else {
                    alive_prev[all[p].source.index].is_some()
                }
            })
            .collect();
        let mut alive = vec![None; od.base().level_size(n)];
        let mut labels = Vec::new();
        for (v, slot) in alive.iter_mut().enumerate() {
            if kept.iter().any(|&p| all[p].range.index == v) {
                *slot = Some(labels.len());
                labels.push(od.base().labels(n)[v].clone());
            }
        }
        if labels.is_empty() {
            return Err(Error::Precondition(format!("pruning empties level {n}")));
        }
        let mut level_edges = Vec::with_capacity(kept.len());
        let mut level_order = Vec::with_capacity(kept.len());
        for &p in &kept {
            let e = &all[p];
            let rank = od
                .ordered_incoming(n, e.range.index)
                .iter()
                .take_while(|&&q| q != p)
                .filter(|q| kept.contains(q))
                .count();
            level_edges.push(Edge {
                id: level_edges.len(),
                source: VertexId::new(n - 1, alive_prev[e.source.index].expect("kept edge")),
                range: VertexId::new(n, alive[e.range.index].expect("has incoming")),
            });
            level_order.push(rank);
        }
        levels.push(labels);
        edges.push(level_edges);
        order.push(level_order);
        alive_prev = alive;
    }
    OrderedDiagram::new(BratteliDiagram::new(levels, edges)?, order)
}

fn checked_keep(od: &OrderedDiagram, keep: &[usize]) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::Precondition("keep must name at least one top edge".into()));
    }
    if od.depth() == 0 {
        return Err(Error::Precondition("diagram has no top edges".into()));
    }
    let top = od.base().edges(1).len();
    if let Some(&bad) = keep.iter().find(|&&e| e >= top) {
        return Err(Error::Precondition(format!("no top edge {bad}; there are {top}")));
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    Ok(keep)
}

/// [`induce_on_top`] for a diagram with stationary tail. Pruning may run into
/// the tail; the head is lengthened until a level keeps every tail vertex.
pub fn induce_on_top_stationary(ev: &EventuallyStationary, keep: &[usize]) -> Result<EventuallyStationary> {
    let h = ev.head().depth();
    let k = ev.tail().len();
    let reach = match is_primitive(&ev.stationary_matrix())? {
        Primitivity::Yes(e) => e,
        Primitivity::No => wielandt_bound(k),
    };
    let induced = induce_on_top(&ev.to_ordered(h + reach.max(1)), keep)?;
    let full = (h..=induced.depth())
        .find(|&n| induced.base().level_size(n) == k)
        .ok_or_else(|| Error::Precondition("pruning removes tail vertices for good".into()))?;
    EventuallyStationary::new(induced.truncate(full)?, ev.tail().to_vec())
}

fn top_id(head: &OrderedDiagram, e: EdgeRef) -> usize {
    head.ordered_incoming(1, e.range)[e.ord]
}

/// Compares the first `n` top edges visited by the orbit of the induced
/// diagram's minimal path with the top edges in `keep` visited by the orbit
/// of the original minimal path, both written as original top edge ids.
pub fn first_return_check(ev: &EventuallyStationary, keep: &[usize], n: usize) -> Result<bool> {
    let induced = induce_on_top_stationary(ev, keep)?;
    let kept = checked_keep(ev.head(), keep)?;
    let original: Vec<usize> = OrbitStream::new(ev)?
        .map(|e| top_id(ev.head(), e))
        .filter(|id| kept.binary_search(id).is_ok())
        .take(n)
        .collect();
    let returned: Vec<usize> = OrbitStream::new(&induced)?
        .take(n)
        .map(|e| kept[top_id(induced.head(), e)])
        .collect();
    Ok(original == returned)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitChangeReport {
    /// Stage from which both presentations use the same maps.
    pub stage: usize,
    pub old_unit: Element<num_bigint::BigInt>,
    pub new_unit: Element<num_bigint::BigInt>,
    /// Whether the connecting maps after `stage` coincide.
    pub tails_agree: bool,
}

/// Order units of `ev` and of its finite change, pushed to the first stage
/// after which the two presentations agree.
pub fn unit_change_report(ev: &EventuallyStationary, ch: &FiniteChange) -> Result<UnitChangeReport> {
    let changed = apply_head(ev, ch)?;
    let old = GroupPresentation::from_stationary(ev);
    let new = GroupPresentation::from_stationary(&changed);
    let stage = ev.head().depth().max(ch.depth());
    let tails_agree = old.tail() == new.tail() && (stage + 1..=stage + 1).all(|m| old.map(m) == new.map(m));
    Ok(UnitChangeReport {
        stage,
        old_unit: old.push(&old.unit(), stage)?,
        new_unit: new.push(&new.unit(), stage)?,
        tails_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::ordered_isomorphic;
    use crate::ordered::StationaryOrderedDiagram;

    fn doubled_top() -> FiniteChange {
        let sd = StationaryOrderedDiagram::from_words(&["a"], "aa", &[("a", "aa")]).unwrap();
        FiniteChange::new(sd.to_ordered(1))
    }

    #[test]
    fn identity_change() {
        let od = fixtures::fibonacci().to_ordered(4);
        assert_eq!(apply_finite_change(&od, &FiniteChange::identity()).unwrap(), od);
        let ev = EventuallyStationary::from(&fixtures::sturmian());
        let r = unit_change_report(&ev, &FiniteChange::identity()).unwrap();
        assert_eq!(r.old_unit, r.new_unit);
        assert!(r.tails_agree);
    }

    #[test]
    fn doubling_the_top_moves_the_unit() {
        let ev = EventuallyStationary::from(&fixtures::odometer_single_top());
        let out = apply_finite_change_stationary(&ev, &doubled_top()).unwrap();
        assert_eq!(out.to_ordered(5), fixtures::odometer().to_ordered(5));
        let r = unit_change_report(&ev, &doubled_top()).unwrap();
        assert_eq!(
            (r.old_unit.to_string(), r.new_unit.to_string()),
            ("1:[1]".into(), "1:[2]".into())
        );
        assert!(r.tails_agree);
    }

    #[test]
    fn change_is_undone_by_reverse_change() {
        let od = fixtures::odometer_single_top().to_ordered(4);
        let changed = apply_finite_change(&od, &doubled_top()).unwrap();
        assert_eq!(changed.base().edges(2), od.base().edges(2));
        let back = apply_finite_change(&changed, &FiniteChange::prefix_of(&od, 1).unwrap()).unwrap();
        assert_eq!(back, od);
    }

    #[test]
    fn stranding_change_rejected() {
        // Level 1 of the change has vertex b with no incoming edge.
        let levels = vec![vec!["root".to_string()], vec!["a".to_string(), "b".to_string()]];
        let head = OrderedDiagram::new(
            BratteliDiagram::from_edge_lists(levels, vec![vec![(0, 0)]]).unwrap(),
            vec![vec![0]],
        );
        assert!(head.is_err());
        let od = fixtures::fibonacci().to_ordered(3);
        let other = FiniteChange::new(fixtures::odometer().to_ordered(1));
        assert!(apply_finite_change(&od, &other).is_err());
    }

    #[test]
    fn induce_keep_all_is_identity() {
        let od = fixtures::sturmian().to_ordered(4);
        assert_eq!(induce_on_top(&od, &[0, 1, 2]).unwrap(), od);
        let ev = EventuallyStationary::from(&fixtures::sturmian());
        assert_eq!(induce_on_top_stationary(&ev, &[2, 1, 0]).unwrap(), ev);
        assert!(induce_on_top(&od, &[]).is_err());
        assert!(induce_on_top(&od, &[3]).is_err());
    }

    #[test]
    fn fibonacci_keep_a_prunes_b_at_level_one() {
        let ev = EventuallyStationary::from(&fixtures::fibonacci());
        let induced = induce_on_top_stationary(&ev, &[0]).unwrap();
        assert_eq!(induced.head().depth(), 2);
        assert_eq!(induced.head().base().labels(1), ["a"]);
        assert_eq!(induced.head().base().labels(2), ["a", "b"]);
        assert!(first_return_check(&ev, &[0], 1000).unwrap());
    }

    #[test]
    fn odometer_half_top_is_an_odometer() {
        let ev = EventuallyStationary::from(&fixtures::odometer());
        let induced = induce_on_top_stationary(&ev, &[1]).unwrap();
        assert!(ordered_isomorphic(
            &induced.to_ordered(6),
            &fixtures::odometer_single_top().to_ordered(6)
        ));
        assert!(first_return_check(&ev, &[0], 1000).unwrap());
        assert!(first_return_check(&ev, &[1], 1000).unwrap());
    }

    #[test]
    fn sturmian_first_returns() {
        let ev = EventuallyStationary::from(&fixtures::sturmian());
        for keep in [vec![0], vec![1], vec![2], vec![0, 2], vec![1, 2], vec![0, 1, 2]] {
            assert!(first_return_check(&ev, &keep, 500).unwrap(), "{keep:?}");
        }
    }
}
