//! Unordered Bratteli diagrams given as explicit finite truncations.
//!
//! A diagram of depth `D` has vertex levels `0..=D` and edge levels
//! `E_1..=E_D`. Level 0 must hold a single root. Vertices carry string labels
//! which only need to be unique within their own level.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::iso;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::IncidenceMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub level: usize,
    pub index: usize,
}

impl VertexId {
    pub fn new(level: usize, index: usize) -> Self {
        VertexId { level, index }
    }

    pub const ROOT: VertexId = VertexId { level: 0, index: 0 };
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: usize,
    pub source: VertexId,
    pub range: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    levels: Vec<Vec<String>>,
    edges: Vec<Vec<Edge>>,
}

/// One violated clause of the diagram axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `|V_0| = 1` fails.
    RootNotSingleton {
        count: usize,
    },
    /// `r^{-1}(v)` is empty for a vertex below the root.
    NoIncoming {
        vertex: VertexId,
        label: String,
    },
    /// `s^{-1}(v)` is empty for a vertex above the last represented level.
    NoOutgoing {
        vertex: VertexId,
        label: String,
    },
    /// An edge endpoint is not on the adjacent levels or does not exist.
    BadEndpoint {
        level: usize,
        edge: usize,
    },
    DuplicateEdgeId {
        level: usize,
        edge: usize,
    },
    DuplicateLabel {
        level: usize,
        label: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RootNotSingleton { count } => {
                write!(f, "level 0 has {count} vertices (|V_0| = 1 required)")
            }
            Violation::NoIncoming { vertex, label } => {
                write!(f, "vertex {label} at {vertex} has no incoming edge (r^-1(v) empty)")
            }
            Violation::NoOutgoing { vertex, label } => {
                write!(f, "vertex {label} at {vertex} has no outgoing edge (s^-1(v) empty)")
            }
            Violation::BadEndpoint { level, edge } => {
                write!(
                    f,
                    "edge {edge} of E_{level} does not join levels {} and {level}",
                    level - 1
                )
            }
            Violation::DuplicateEdgeId { level, edge } => {
                write!(f, "edge id {edge} repeated in E_{level}")
            }
            Violation::DuplicateLabel { level, label } => {
                write!(f, "label {label} repeated at level {level}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn into_result(self) -> Result<()> {
        if self.violations.is_empty() {
            return Ok(());
        }
        let all: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        Err(Error::InvalidDiagram(all.join("; ")))
    }
}

impl BratteliDiagram {
    /// Assembles a diagram without checking the axioms; see [`Self::validate`].
    pub fn new(levels: Vec<Vec<String>>, edges: Vec<Vec<Edge>>) -> Result<Self> {
        if levels.len() != edges.len() + 1 {
            return Err(Error::InvalidDiagram(format!(
                "{} vertex levels need {} edge levels, got {}",
                levels.len(),
                levels.len().saturating_sub(1),
                edges.len()
            )));
        }
        Ok(BratteliDiagram { levels, edges })
    }

    /// Builds a diagram from `(source index, range index)` pairs per edge level.
    /// Edge ids are the positions in each list.
    pub fn from_edge_lists(levels: Vec<Vec<String>>, edges: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, list)| {
                list.into_iter()
                    .enumerate()
                    .map(|(id, (s, r))| Edge {
                        id,
                        source: VertexId::new(i, s),
                        range: VertexId::new(i + 1, r),
                    })
                    .collect()
            })
            .collect();
        Self::new(levels, edges)
    }

    /// Diagram realizing a list of incidence matrices `C_1, C_2, ...`, with
    /// vertices labelled by their index. `C_1` must have a single column.
    pub fn from_matrices<T: Scalar>(mats: &[Matrix<T>]) -> Result<Self> {
        let mut levels = vec![vec!["0".to_string()]];
        let mut edges = Vec::new();
        let mut prev = 1;
        for (n, m) in mats.iter().enumerate() {
            if m.cols() != prev {
                return Err(Error::DimensionMismatch(format!(
                    "matrix {} has {} columns, level {} has {} vertices",
                    n + 1,
                    m.cols(),
                    n,
                    prev
                )));
            }
            if !m.is_nonnegative() {
                return Err(Error::InvalidDiagram("negative incidence entry".into()));
            }
            let mut list = Vec::new();
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let count = m.get(i, j).to_big();
                    let count: usize = count
                        .try_into()
                        .map_err(|_| Error::InvalidDiagram("incidence entry too large to enumerate".into()))?;
                    list.extend(std::iter::repeat_n((j, i), count));
                }
            }
            edges.push(list);
            levels.push((0..m.rows()).map(|i| i.to_string()).collect());
            prev = m.rows();
        }
        Self::from_edge_lists(levels, edges)
    }

    pub fn depth(&self) -> usize {
        self.edges.len()
    }

    pub fn level_size(&self, level: usize) -> usize {
        self.levels.get(level).map_or(0, Vec::len)
    }

    pub fn labels(&self, level: usize) -> &[String] {
        &self.levels[level]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.levels[v.level][v.index]
    }

    pub fn levels(&self) -> &[Vec<String>] {
        &self.levels
    }

    /// Edges of `E_level` (level >= 1).
    pub fn edges(&self, level: usize) -> &[Edge] {
        &self.edges[level - 1]
    }

    pub fn edge_levels(&self) -> &[Vec<Edge>] {
        &self.edges
    }

    pub fn find_label(&self, level: usize, label: &str) -> Option<usize> {
        self.levels.get(level)?.iter().position(|l| l == label)
    }

    /// Positions (within `E_level`) of the edges with range `v`, in storage order.
    pub fn incoming(&self, level: usize, v: usize) -> Vec<usize> {
        self.edges(level)
            .iter()
            .enumerate()
            .filter(|(_, e)| e.range.index == v)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.level_size(0) != 1 {
            violations.push(Violation::RootNotSingleton {
                count: self.level_size(0),
            });
        }
        for (level, labels) in self.levels.iter().enumerate() {
            let mut seen = HashSet::new();
            for l in labels {
                if !seen.insert(l) {
                    violations.push(Violation::DuplicateLabel {
                        level,
                        label: l.clone(),
                    });
                }
            }
        }
        let mut has_in: Vec<Vec<bool>> = self.levels.iter().map(|l| vec![false; l.len()]).collect();
        let mut has_out = has_in.clone();
        for (i, list) in self.edges.iter().enumerate() {
            let level = i + 1;
            let mut ids = HashSet::new();
            for e in list {
                if !ids.insert(e.id) {
                    violations.push(Violation::DuplicateEdgeId { level, edge: e.id });
                }
                let ok = e.source.level + 1 == level
                    && e.range.level == level
                    && e.source.index < self.level_size(level - 1)
                    && e.range.index < self.level_size(level);
                if !ok {
                    violations.push(Violation::BadEndpoint { level, edge: e.id });
                    continue;
                }
                has_out[level - 1][e.source.index] = true;
                has_in[level][e.range.index] = true;
            }
        }
        for (level, row) in has_in.iter().enumerate().skip(1) {
            for (index, &ok) in row.iter().enumerate() {
                if !ok {
                    let vertex = VertexId::new(level, index);
                    violations.push(Violation::NoIncoming {
                        vertex,
                        label: self.label(vertex).to_string(),
                    });
                }
            }
        }
        for (level, row) in has_out.iter().enumerate().take(self.depth()) {
            for (index, &ok) in row.iter().enumerate() {
                if !ok {
                    let vertex = VertexId::new(level, index);
                    violations.push(Violation::NoOutgoing {
                        vertex,
                        label: self.label(vertex).to_string(),
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Incidence matrix of `E_n` as exact big integers.
    pub fn incidence_matrix(&self, n: usize) -> Result<IncidenceMatrix> {
        self.incidence_matrix_as(n)
    }

    pub fn incidence_matrix_as<T: Scalar>(&self, n: usize) -> Result<Matrix<T>> {
        if n == 0 || n > self.depth() {
            return Err(Error::LevelOutOfRange {
                level: n,
                depth: self.depth(),
            });
        }
        let mut m = Matrix::<T>::zeros(self.level_size(n), self.level_size(n - 1));
        for e in self.edges(n) {
            let (i, j) = (e.range.index, e.source.index);
            let next = m.get(i, j).clone() + T::one();
            m.set(i, j, next);
        }
        Ok(m)
    }

    /// Telescopes to the cut levels of `sched`; composite edges are listed
    /// grouped by range vertex.
    pub fn telescope(&self, sched: &TelescopeSchedule) -> Result<BratteliDiagram> {
        sched.check_depth(self.depth())?;
        let order = |level: usize, v: usize| self.incoming(level, v);
        Ok(telescope_with(self, sched, &order).0)
    }

    /// Exact when the tail is known to be simple; otherwise a semidecision
    /// that needs `horizon` strictly positive telescoped levels.
    pub fn is_simple(&self, horizon: usize) -> Simplicity {
        let mut cuts = vec![0];
        let mut product: Option<IncidenceMatrix> = None;
        for n in 1..=self.depth() {
            let c = self.incidence_matrix(n).expect("level in range");
            let p = match product.take() {
                None => c,
                Some(p) => c.mul(&p).expect("adjacent levels chain"),
            };
            if p.is_strictly_positive() {
                cuts.push(n);
                if cuts.len() > horizon {
                    return Simplicity::Yes(TelescopeSchedule(cuts));
                }
            } else {
                product = Some(p);
            }
        }
        Simplicity::Undetermined
    }
}

/// Answer of a simplicity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// The schedule telescopes to strictly positive incidence matrices.
    Yes(TelescopeSchedule),
    No,
    Undetermined,
}

/// Cut levels `0 = m_0 < m_1 < ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TelescopeSchedule(Vec<usize>);

impl TelescopeSchedule {
    pub fn new(cuts: Vec<usize>) -> Result<Self> {
        if cuts.first() != Some(&0) {
            return Err(Error::InvalidSchedule("schedule must start at 0".into()));
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSchedule("cut levels must strictly increase".into()));
        }
        Ok(TelescopeSchedule(cuts))
    }

    pub fn identity(depth: usize) -> Self {
        TelescopeSchedule((0..=depth).collect())
    }

    /// `0 < 1 < 3 < 5 < ...` up to `depth`.
    pub fn odd(depth: usize) -> Self {
        let mut cuts = vec![0];
        cuts.extend((1..=depth).step_by(2));
        TelescopeSchedule(cuts)
    }

    /// `0 < 2 < 4 < ...` up to `depth`.
    pub fn even(depth: usize) -> Self {
        TelescopeSchedule((0..=depth).step_by(2).collect())
    }

    /// `0 < first < first + step < ...` up to `depth`.
    pub fn periodic(first: usize, step: usize, depth: usize) -> Self {
        let mut cuts = vec![0];
        if first >= 1 && first <= depth {
            cuts.extend((first..=depth).step_by(step.max(1)));
        }
        TelescopeSchedule(cuts)
    }

    pub fn cuts(&self) -> &[usize] {
        &self.0
    }

    /// Depth of the telescoped diagram.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("schedule is nonempty")
    }

    /// Schedule equivalent to telescoping by `self` and then by `next`.
    pub fn then(&self, next: &TelescopeSchedule) -> Result<TelescopeSchedule> {
        next.check_depth(self.len())?;
        Ok(TelescopeSchedule(next.0.iter().map(|&i| self.0[i]).collect()))
    }

    pub(crate) fn check_depth(&self, depth: usize) -> Result<()> {
        if self.last() > depth {
            return Err(Error::InvalidSchedule(format!(
                "cut level {} exceeds depth {depth}",
                self.last()
            )));
        }
        Ok(())
    }
}

/// One composite path: the source vertex index at the upper cut and the
/// positions of its edges, one per level.
pub(crate) type Composite = (usize, Vec<usize>);

/// Composite paths from level `from` into every vertex of level `to`, listed
/// per range vertex in the induced lexicographic order of `in_order`.
pub(crate) fn composite_paths(
    d: &BratteliDiagram,
    in_order: &dyn Fn(usize, usize) -> Vec<usize>,
    from: usize,
    to: usize,
) -> Vec<Vec<Composite>> {
    let mut current: Vec<Vec<Composite>> = (0..d.level_size(from)).map(|v| vec![(v, Vec::new())]).collect();
    for level in from + 1..=to {
        let edges = d.edges(level);
        current = (0..d.level_size(level))
            .map(|w| {
                let mut out = Vec::new();
                // The last edge is the most significant coordinate.
                for pos in in_order(level, w) {
                    let s = edges[pos].source.index;
                    for (src, path) in &current[s] {
                        let mut p = path.clone();
                        p.push(pos);
                        out.push((*src, p));
                    }
                }
                out
            })
            .collect();
    }
    current
}

/// Telescopes and also returns, per new edge level, the order index of every
/// new edge within its range set.
pub(crate) fn telescope_with(
    d: &BratteliDiagram,
    sched: &TelescopeSchedule,
    in_order: &dyn Fn(usize, usize) -> Vec<usize>,
) -> (BratteliDiagram, Vec<Vec<usize>>) {
    let cuts = sched.cuts();
    let levels: Vec<Vec<String>> = cuts.iter().map(|&m| d.labels(m).to_vec()).collect();
    let mut edges = Vec::new();
    let mut orders = Vec::new();
    for (n, w) in cuts.windows(2).enumerate() {
        let paths = composite_paths(d, in_order, w[0], w[1]);
        let mut list = Vec::new();
        let mut ord = Vec::new();
        for (r, into) in paths.iter().enumerate() {
            for (k, (s, _)) in into.iter().enumerate() {
                list.push(Edge {
                    id: list.len(),
                    source: VertexId::new(n, *s),
                    range: VertexId::new(n + 1, r),
                });
                ord.push(k);
            }
        }
        edges.push(list);
        orders.push(ord);
    }
    (BratteliDiagram { levels, edges }, orders)
}

/// Checks that `w` interleaves `d1` and `d2`: its odd-level telescoping is a
/// telescoping of one of them and its even-level telescoping a telescoping of
/// the other, up to graded isomorphism.
pub fn verify_interleaving_witness(d1: &BratteliDiagram, d2: &BratteliDiagram, w: &BratteliDiagram) -> bool {
    let odd = match w.telescope(&TelescopeSchedule::odd(w.depth())) {
        Ok(t) => t,
        Err(_) => return false,
    };
    let even = match w.telescope(&TelescopeSchedule::even(w.depth())) {
        Ok(t) => t,
        Err(_) => return false,
    };
    (is_telescoping_of(&odd, d1) && is_telescoping_of(&even, d2))
        || (is_telescoping_of(&odd, d2) && is_telescoping_of(&even, d1))
}

/// Searches for a schedule `s` with `telescope(d, s)` isomorphic to `t`.
pub fn is_telescoping_of(t: &BratteliDiagram, d: &BratteliDiagram) -> bool {
    find_schedule(t, d, &|sched| {
        d.telescope(sched)
            .map(|cand| iso::isomorphic(&cand, t))
            .unwrap_or(false)
    })
    .is_some()
}

/// Depth-first search over schedules of `d` whose level sizes and incidence
/// entry multisets match those of `t`; `accept` makes the final decision.
pub(crate) fn find_schedule(
    t: &BratteliDiagram,
    d: &BratteliDiagram,
    accept: &dyn Fn(&TelescopeSchedule) -> bool,
) -> Option<TelescopeSchedule> {
    let target: Vec<Vec<num_bigint::BigInt>> = (1..=t.depth())
        .map(|n| sorted_entries(&t.incidence_matrix(n).expect("in range")))
        .collect();
    let mut cuts = vec![0];
    search_cuts(t, d, &target, &mut cuts, accept)
}

fn sorted_entries(m: &IncidenceMatrix) -> Vec<num_bigint::BigInt> {
    let mut v = m.entries().to_vec();
    v.sort();
    v
}

fn search_cuts(
    t: &BratteliDiagram,
    d: &BratteliDiagram,
    target: &[Vec<num_bigint::BigInt>],
    cuts: &mut Vec<usize>,
    accept: &dyn Fn(&TelescopeSchedule) -> bool,
) -> Option<TelescopeSchedule> {
    let j = cuts.len() - 1;
    if j == t.depth() {
        let sched = TelescopeSchedule(cuts.clone());
        return accept(&sched).then_some(sched);
    }
    let c = *cuts.last().expect("nonempty");
    let mut product: Option<IncidenceMatrix> = None;
    for m in c + 1..=d.depth() {
        let step = d.incidence_matrix(m).expect("in range");
        let p = match product.take() {
            None => step,
            Some(p) => step.mul(&p).expect("chain"),
        };
        if d.level_size(m) == t.level_size(j + 1) && sorted_entries(&p) == target[j] {
            cuts.push(m);
            if let Some(s) = search_cuts(t, d, target, cuts, accept) {
                return Some(s);
            }
            cuts.pop();
        }
        product = Some(p);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn labels(names: &[&[&str]]) -> Vec<Vec<String>> {
        names
            .iter()
            .map(|l| l.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn valid_odometer_has_empty_report() {
        let d = fixtures::odometer_explicit(4);
        assert!(d.validate().is_valid());
        assert_eq!(d.incidence_matrix(1).unwrap().to_string(), "[[2]]");
    }

    #[test]
    fn missing_incoming_edge_is_reported() {
        let d =
            BratteliDiagram::from_edge_lists(labels(&[&["r"], &["a"], &["a", "b"]]), vec![vec![(0, 0)], vec![(0, 0)]])
                .unwrap();
        let report = d.validate();
        assert_eq!(report.violations.len(), 1);
        match &report.violations[0] {
            Violation::NoIncoming { vertex, label } => {
                assert_eq!(*vertex, VertexId::new(2, 1));
                assert_eq!(label, "b");
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn two_roots_are_reported() {
        let d = BratteliDiagram::from_edge_lists(labels(&[&["r", "q"], &["a"]]), vec![vec![(0, 0), (1, 0)]]).unwrap();
        assert!(d
            .validate()
            .violations
            .contains(&Violation::RootNotSingleton { count: 2 }));
    }

    #[test]
    fn dangling_endpoint_is_reported() {
        let d = BratteliDiagram::from_edge_lists(labels(&[&["r"], &["a"]]), vec![vec![(0, 3)]]).unwrap();
        assert!(matches!(
            d.validate().violations[0],
            Violation::BadEndpoint { level: 1, edge: 0 }
        ));
    }

    #[test]
    fn fibonacci_incidence() {
        let d = fixtures::fibonacci().to_ordered(3).base().clone();
        assert_eq!(d.incidence_matrix(2).unwrap().to_string(), "[[1,1],[1,0]]");
        assert!(d.incidence_matrix(0).is_err());
        assert!(d.incidence_matrix(4).is_err());
    }

    #[test]
    fn telescope_multiplies_matrices() {
        let c1 = IncidenceMatrix::from_i64_rows(&[&[1], &[1]]);
        let c2 = IncidenceMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let c3 = IncidenceMatrix::from_i64_rows(&[&[2, 1], &[0, 1]]);
        let d = BratteliDiagram::from_matrices(&[c1, c2, c3]).unwrap();
        let t = d.telescope(&TelescopeSchedule::new(vec![0, 1, 3]).unwrap()).unwrap();
        assert_eq!(t.incidence_matrix(2).unwrap().to_string(), "[[3,3],[1,1]]");
        assert!(t.validate().is_valid());
    }

    #[test]
    fn odometer_telescoped_by_two() {
        let d = fixtures::odometer_explicit(4);
        let t = d.telescope(&TelescopeSchedule::even(4)).unwrap();
        assert_eq!(t.depth(), 2);
        assert_eq!(t.incidence_matrix(1).unwrap().to_string(), "[[4]]");
        assert_eq!(t.incidence_matrix(2).unwrap().to_string(), "[[4]]");
    }

    #[test]
    fn identity_schedule_is_isomorphism() {
        let d = fixtures::fibonacci().to_ordered(4).base().clone();
        let t = d.telescope(&TelescopeSchedule::identity(4)).unwrap();
        assert!(iso::isomorphic(&d, &t));
    }

    #[test]
    fn bad_schedules() {
        assert!(TelescopeSchedule::new(vec![1, 2]).is_err());
        assert!(TelescopeSchedule::new(vec![0, 2, 2]).is_err());
        let d = fixtures::odometer_explicit(2);
        assert!(d.telescope(&TelescopeSchedule::new(vec![0, 3]).unwrap()).is_err());
    }

    #[test]
    fn simplicity_semidecision() {
        let d = fixtures::fibonacci().to_ordered(6).base().clone();
        assert!(matches!(d.is_simple(3), Simplicity::Yes(_)));
        // Alternating block pattern: every product keeps a zero.
        let a = IncidenceMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]);
        let top = IncidenceMatrix::from_i64_rows(&[&[1], &[1]]);
        let d = BratteliDiagram::from_matrices(&[top, a.clone(), a.clone(), a]).unwrap();
        assert_eq!(d.is_simple(3), Simplicity::Undetermined);
    }

    #[test]
    fn interleaving_witnesses() {
        let d1 = fixtures::odometer_explicit(8);
        let d2 = d1.telescope(&TelescopeSchedule::even(8)).unwrap();
        assert!(verify_interleaving_witness(&d1, &d2, &d1));
        let unrelated = fixtures::fibonacci().to_ordered(8).base().clone();
        assert!(!verify_interleaving_witness(&d1, &d2, &unrelated));
    }
}
