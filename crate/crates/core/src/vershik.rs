//! Path spaces and the Vershik map.
//!
//! Edges are addressed by [`EdgeRef`]: the range vertex and the order index
//! inside its `r^{-1}`. A [`PathPrefix`] lists edges of levels `1..=n`. An
//! infinite [`AdicPath`] on a diagram with a stationary tail is a finite
//! prefix followed by a repeating cycle of edges; the Vershik map only ever
//! rewrites a finite prefix, so this form is closed under [`vershik_step`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ordered::{self, periodic_points, OrderedLevels, StationaryTail};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub range: usize,
    pub ord: usize,
}

impl EdgeRef {
    pub fn new(range: usize, ord: usize) -> Self {
        EdgeRef { range, ord }
    }

    pub fn source<D: OrderedLevels + ?Sized>(&self, d: &D, level: usize) -> usize {
        d.in_source(level, self.range, self.ord)
    }

    pub fn is_max<D: OrderedLevels + ?Sized>(&self, d: &D, level: usize) -> bool {
        self.ord + 1 == d.in_degree(level, self.range)
    }

    pub fn is_min(&self) -> bool {
        self.ord == 0
    }
}

/// Finite path `e_1, ..., e_n` starting at the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPrefix {
    edges: Vec<EdgeRef>,
}

impl PathPrefix {
    pub fn new<D: OrderedLevels + ?Sized>(d: &D, edges: Vec<EdgeRef>) -> Result<Self> {
        check_edges(d, &edges, 1)?;
        for (i, w) in edges.windows(2).enumerate() {
            if w[1].source(d, i + 2) != w[0].range {
                return Err(Error::InvalidPath(format!(
                    "edges at levels {} and {} do not meet",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(PathPrefix { edges })
    }

    pub(crate) fn from_raw(edges: Vec<EdgeRef>) -> Self {
        PathPrefix { edges }
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Final vertex (at level `len()`), `None` for the empty prefix.
    pub fn end(&self) -> Option<usize> {
        self.edges.last().map(|e| e.range)
    }

    pub fn minimal_into<D: OrderedLevels + ?Sized>(d: &D, level: usize, v: usize) -> Self {
        extreme_into(d, level, v, false)
    }

    pub fn maximal_into<D: OrderedLevels + ?Sized>(d: &D, level: usize, v: usize) -> Self {
        extreme_into(d, level, v, true)
    }
}

fn check_edges<D: OrderedLevels + ?Sized>(d: &D, edges: &[EdgeRef], first_level: usize) -> Result<()> {
    for (i, e) in edges.iter().enumerate() {
        let level = first_level + i;
        if !d.has_level(level) {
            return Err(Error::InvalidPath(format!("level {level} is not represented")));
        }
        if e.range >= d.level_size(level) || e.ord >= d.in_degree(level, e.range) {
            return Err(Error::InvalidPath(format!("no edge {e:?} at level {level}")));
        }
    }
    Ok(())
}

fn extreme_into<D: OrderedLevels + ?Sized>(d: &D, level: usize, v: usize, max: bool) -> PathPrefix {
    let mut edges = vec![EdgeRef::new(0, 0); level];
    let mut w = v;
    for l in (1..=level).rev() {
        let ord = if max { d.in_degree(l, w) - 1 } else { 0 };
        edges[l - 1] = EdgeRef::new(w, ord);
        w = d.in_source(l, w, ord);
    }
    PathPrefix { edges }
}

/// Rewrites `edges` in place to the lexicographic successor among paths with
/// the same final vertex. Returns `false` when `edges` is maximal.
fn advance<D: OrderedLevels + ?Sized>(d: &D, edges: &mut [EdgeRef]) -> bool {
    let Some(k) = (0..edges.len()).find(|&i| !edges[i].is_max(d, i + 1)) else {
        return false;
    };
    edges[k].ord += 1;
    let mut w = edges[k].source(d, k + 1);
    for l in (1..=k).rev() {
        edges[l - 1] = EdgeRef::new(w, 0);
        w = d.in_source(l, w, 0);
    }
    true
}

fn retreat<D: OrderedLevels + ?Sized>(d: &D, edges: &mut [EdgeRef]) -> bool {
    let Some(k) = (0..edges.len()).find(|&i| !edges[i].is_min()) else {
        return false;
    };
    edges[k].ord -= 1;
    let mut w = edges[k].source(d, k + 1);
    for l in (1..=k).rev() {
        let ord = d.in_degree(l, w) - 1;
        edges[l - 1] = EdgeRef::new(w, ord);
        w = d.in_source(l, w, ord);
    }
    true
}

/// Lexicographic successor among prefixes ending at the same vertex.
pub fn successor_in_tower<D: OrderedLevels + ?Sized>(d: &D, p: &PathPrefix) -> Option<PathPrefix> {
    let mut edges = p.edges.clone();
    advance(d, &mut edges).then_some(PathPrefix { edges })
}

pub fn predecessor_in_tower<D: OrderedLevels + ?Sized>(d: &D, p: &PathPrefix) -> Option<PathPrefix> {
    let mut edges = p.edges.clone();
    retreat(d, &mut edges).then_some(PathPrefix { edges })
}

/// All prefixes into one vertex, in increasing lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    pub level: usize,
    pub vertex: usize,
    pub floors: Vec<PathPrefix>,
}

impl Tower {
    pub fn height(&self) -> usize {
        self.floors.len()
    }
}

pub fn tower<D: OrderedLevels + ?Sized>(d: &D, level: usize, v: usize) -> Result<Tower> {
    if level == 0 || !d.has_level(level) {
        return Err(Error::LevelOutOfRange {
            level,
            depth: d.depth().unwrap_or(usize::MAX),
        });
    }
    if v >= d.level_size(level) {
        return Err(Error::InvalidPath(format!("no vertex {v} at level {level}")));
    }
    let mut floors = vec![PathPrefix::minimal_into(d, level, v)];
    let mut edges = floors[0].edges.clone();
    while advance(d, &mut edges) {
        floors.push(PathPrefix { edges: edges.clone() });
    }
    Ok(Tower {
        level,
        vertex: v,
        floors,
    })
}

/// Tower heights at `level`, from `h_0 = (1)` and `h_n(v) = Σ h_{n-1}(s(e))`.
pub fn tower_heights<D: OrderedLevels + ?Sized>(d: &D, level: usize) -> Vec<BigInt> {
    let mut h = vec![BigInt::from(1)];
    for l in 1..=level {
        h = (0..d.level_size(l))
            .map(|v| (0..d.in_degree(l, v)).fold(BigInt::zero(), |acc, k| acc + &h[d.in_source(l, v, k)]))
            .collect();
    }
    h
}

/// Eventually periodic infinite path: `prefix` covers levels `1..=m`, then
/// the edge at level `m + 1 + i` is `cycle[i % cycle.len()]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdicPath {
    prefix: Vec<EdgeRef>,
    cycle: Vec<EdgeRef>,
}

impl AdicPath {
    /// The prefix must reach at least the stationary part of `d`.
    pub fn new<D: StationaryTail + ?Sized>(d: &D, prefix: Vec<EdgeRef>, cycle: Vec<EdgeRef>) -> Result<Self> {
        let h = d.head_depth();
        if prefix.len() < h {
            return Err(Error::InvalidPath(format!("prefix must cover the first {h} levels")));
        }
        if cycle.is_empty() {
            return Err(Error::InvalidPath("empty tail cycle".into()));
        }
        PathPrefix::new(d, prefix.clone())?;
        // Every tail level carries the same order data, so one period
        // checked at the first tail levels covers all of them.
        let m = prefix.len();
        check_edges(d, &cycle, m + 1)?;
        let mut prev = prefix.last().map(|e| e.range).unwrap_or(0);
        for (i, e) in cycle.iter().chain(cycle.first()).enumerate() {
            if e.source(d, m + 1 + i) != prev {
                return Err(Error::InvalidPath("tail cycle is not connected".into()));
            }
            prev = e.range;
        }
        let mut path = AdicPath { prefix, cycle };
        path.normalize(h);
        Ok(path)
    }

    pub fn prefix_edges(&self) -> &[EdgeRef] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[EdgeRef] {
        &self.cycle
    }

    /// Edge at `level >= 1`.
    pub fn edge(&self, level: usize) -> EdgeRef {
        let m = self.prefix.len();
        if level <= m {
            self.prefix[level - 1]
        } else {
            self.cycle[(level - m - 1) % self.cycle.len()]
        }
    }

    /// First `n` edges.
    pub fn prefix(&self, n: usize) -> PathPrefix {
        PathPrefix::from_raw((1..=n).map(|l| self.edge(l)).collect())
    }

    fn unrolled(&self, n: usize) -> AdicPath {
        let m = self.prefix.len();
        if n <= m {
            return self.clone();
        }
        let p = self.cycle.len();
        let prefix = (1..=n).map(|l| self.edge(l)).collect();
        let shift = (n - m) % p;
        let mut cycle = self.cycle.clone();
        cycle.rotate_left(shift);
        AdicPath { prefix, cycle }
    }

    fn normalize(&mut self, head: usize) {
        let p = self.cycle.len();
        if let Some(q) = (1..=p).find(|&q| p.is_multiple_of(q) && (0..p).all(|i| self.cycle[i] == self.cycle[i % q])) {
            self.cycle.truncate(q);
        }
        while self.prefix.len() > head && self.prefix.last() == self.cycle.last() {
            self.prefix.pop();
            self.cycle.rotate_right(1);
        }
    }

    pub fn is_max<D: OrderedLevels + ?Sized>(&self, d: &D) -> bool {
        let m = self.prefix.len();
        (1..=m + self.cycle.len()).all(|l| self.edge(l).is_max(d, l))
    }

    pub fn is_min(&self) -> bool {
        self.prefix.iter().chain(&self.cycle).all(EdgeRef::is_min)
    }
}

/// The all-minimal paths, one per periodic point of the minimal-source map.
pub fn minimal_paths<D: StationaryTail + ?Sized>(d: &D) -> Vec<AdicPath> {
    extreme_paths_of(d, false)
}

/// The all-maximal paths, one per periodic point of the maximal-source map.
pub fn maximal_paths<D: StationaryTail + ?Sized>(d: &D) -> Vec<AdicPath> {
    extreme_paths_of(d, true)
}

fn extreme_paths_of<D: StationaryTail + ?Sized>(d: &D, max: bool) -> Vec<AdicPath> {
    let words = d.tail_words();
    let f: Vec<usize> = words
        .iter()
        .map(|w| if max { *w.last().expect("nonempty") } else { w[0] })
        .collect();
    let h = d.head_depth();
    periodic_points(&f)
        .into_iter()
        .map(|c| {
            let mut period = 1;
            let mut x = f[c];
            while x != c {
                x = f[x];
                period += 1;
            }
            // Vertices at levels h+1..=h+period: each is sent by f to the one above.
            let mut vertices = vec![c; period + 1];
            for (i, slot) in vertices.iter_mut().enumerate().skip(1) {
                let mut y = c;
                for _ in 0..period - i {
                    y = f[y];
                }
                *slot = y;
            }
            let cycle = vertices[1..]
                .iter()
                .map(|&a| EdgeRef::new(a, if max { words[a].len() - 1 } else { 0 }))
                .collect();
            let prefix = extreme_into(d, h, c, max).edges;
            let mut path = AdicPath { prefix, cycle };
            path.normalize(h);
            path
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremePaths {
    pub max: AdicPath,
    pub min: AdicPath,
}

/// The unique maximal and minimal paths of a properly ordered diagram.
pub fn extreme_paths<D: StationaryTail + ?Sized>(d: &D) -> Result<ExtremePaths> {
    if d.tail_words().iter().all(|w| w.len() == 1) {
        return Err(Error::DegeneratePathSpace);
    }
    ordered::proper_ordering(d.tail_words()).into_result()?;
    Ok(ExtremePaths {
        max: maximal_paths(d).remove(0),
        min: minimal_paths(d).remove(0),
    })
}

/// The unique minimal path; needs a primitive tail.
pub fn minimal_path<D: StationaryTail + ?Sized>(d: &D) -> Result<AdicPath> {
    ordered::orbit_ready(d.tail_words())?;
    Ok(minimal_paths(d).remove(0))
}

/// One step of the Vershik map.
///
/// A path with a non-maximal edge moves to its lexicographic successor, which
/// only rewrites levels up to the first non-maximal edge. The maximal path is
/// sent to the minimal path; that case needs both to be unique.
pub fn vershik_step<D: StationaryTail + ?Sized>(d: &D, x: &AdicPath) -> Result<AdicPath> {
    let span = x.prefix.len() + x.cycle.len();
    match (1..=span).find(|&l| !x.edge(l).is_max(d, l)) {
        Some(k) => {
            let mut y = x.unrolled(k);
            advance(d, &mut y.prefix[..k]);
            y.normalize(d.head_depth());
            Ok(y)
        }
        None => {
            let max = maximal_paths(d);
            if max.len() != 1 {
                return Err(Error::NotProperlyOrdered(format!("{} maximal paths", max.len())));
            }
            minimal_path(d)
        }
    }
}

/// Inverse of [`vershik_step`].
pub fn vershik_step_back<D: StationaryTail + ?Sized>(d: &D, x: &AdicPath) -> Result<AdicPath> {
    let span = x.prefix.len() + x.cycle.len();
    match (1..=span).find(|&l| !x.edge(l).is_min()) {
        Some(k) => {
            let mut y = x.unrolled(k);
            retreat(d, &mut y.prefix[..k]);
            y.normalize(d.head_depth());
            Ok(y)
        }
        None => {
            let min = minimal_paths(d);
            if min.len() != 1 {
                return Err(Error::NoUniqueMinimalPath(min.len()));
            }
            let max = maximal_paths(d);
            if max.len() != 1 {
                return Err(Error::NotProperlyOrdered(format!("{} maximal paths", max.len())));
            }
            Ok(max.into_iter().next().expect("one path"))
        }
    }
}

/// Whether the two paths agree from some level on.
pub fn is_cofinal(x: &AdicPath, y: &AdicPath) -> bool {
    let n = x.prefix.len().max(y.prefix.len());
    let span = x.cycle.len().lcm(&y.cycle.len());
    (n + 1..=n + span).all(|l| x.edge(l) == y.edge(l))
}

/// Resumable state of an orbit enumeration: the orbit point at `position`
/// agrees with the minimal path below `level`, and `prefix` holds its first
/// `level` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitState {
    pub level: usize,
    pub prefix: Vec<EdgeRef>,
    pub position: u64,
}

/// Forward orbit of the minimal path, enumerated through towers that are
/// deepened (by doubling the level) whenever the current tower is exhausted.
pub struct OrbitStream<'a, D: StationaryTail + ?Sized> {
    d: &'a D,
    x_min: AdicPath,
    state: OrbitState,
}

impl<'a, D: StationaryTail + ?Sized> OrbitStream<'a, D> {
    pub fn new(d: &'a D) -> Result<Self> {
        let x_min = minimal_path(d)?;
        let level = d.head_depth().max(1);
        let state = OrbitState {
            level,
            prefix: x_min.prefix(level).edges,
            position: 0,
        };
        Ok(OrbitStream { d, x_min, state })
    }

    /// Continues an enumeration from a saved state.
    pub fn resume(d: &'a D, state: OrbitState) -> Result<Self> {
        let x_min = minimal_path(d)?;
        if state.prefix.len() != state.level || state.level < d.head_depth() {
            return Err(Error::InvalidPath("orbit state does not match its level".into()));
        }
        let p = PathPrefix::new(d, state.prefix.clone())?;
        if p.end() != Some(x_min.edge(state.level).range) {
            return Err(Error::InvalidPath("orbit state leaves the minimal tail".into()));
        }
        Ok(OrbitStream { d, x_min, state })
    }

    pub fn state(&self) -> &OrbitState {
        &self.state
    }

    /// First `n` edges of the current orbit point.
    pub fn current_prefix(&self, n: usize) -> PathPrefix {
        let mut edges: Vec<EdgeRef> = self.state.prefix.iter().copied().take(n).collect();
        edges.extend((self.state.level + 1..=n).map(|l| self.x_min.edge(l)));
        PathPrefix::from_raw(edges)
    }

    /// Level-1 edge of the current orbit point.
    pub fn current_top_edge(&self) -> EdgeRef {
        self.state.prefix[0]
    }

    pub fn step(&mut self) {
        let d = self.d;
        while !advance(d, &mut self.state.prefix) {
            let deeper = self.state.level * 2;
            let level = self.state.level;
            self.state
                .prefix
                .extend((level + 1..=deeper).map(|l| self.x_min.edge(l)));
            self.state.level = deeper;
        }
        self.state.position += 1;
    }
}

impl<D: StationaryTail + ?Sized> Iterator for OrbitStream<'_, D> {
    type Item = EdgeRef;

    fn next(&mut self) -> Option<EdgeRef> {
        let e = self.current_top_edge();
        self.step();
        Some(e)
    }
}

/// Level-1 vertices visited by `x_min, V(x_min), ..., V^{n-1}(x_min)`.
pub fn orbit_sequence<D: StationaryTail + ?Sized>(d: &D, n: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::Precondition("orbit length must be at least 1".into()));
    }
    Ok(OrbitStream::new(d)?.take(n).map(|e| e.range).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn e(range: usize, ord: usize) -> EdgeRef {
        EdgeRef::new(range, ord)
    }

    #[test]
    fn odometer_successor() {
        let od = fixtures::odometer().to_ordered(2);
        let p = PathPrefix::new(&od, vec![e(0, 1), e(0, 0)]).unwrap();
        let q = successor_in_tower(&od, &p).unwrap();
        assert_eq!(q.edges(), &[e(0, 0), e(0, 1)]);
        let top = PathPrefix::maximal_into(&od, 2, 0);
        assert!(successor_in_tower(&od, &top).is_none());
        let bottom = PathPrefix::minimal_into(&od, 2, 0);
        assert!(predecessor_in_tower(&od, &bottom).is_none());
    }

    #[test]
    fn odometer_towers() {
        let od = fixtures::odometer().to_ordered(3);
        let t = tower(&od, 3, 0).unwrap();
        assert_eq!(t.height(), 8);
        let heights: Vec<String> = (0..=3).map(|l| tower_heights(&od, l)[0].to_string()).collect();
        assert_eq!(heights, ["1", "2", "4", "8"]);
        assert!(tower(&od, 4, 0).is_err());
        assert!(tower(&od, 0, 0).is_err());
    }

    #[test]
    fn fibonacci_heights() {
        // Oracle: h_n = C h_{n-1}, h_1 = top multiplicities (1, 1).
        let sd = fixtures::fibonacci();
        let mut h = (1u64, 1u64);
        for n in 1..=8 {
            let got = tower_heights(&sd, n);
            assert_eq!(got, vec![BigInt::from(h.0), BigInt::from(h.1)]);
            assert_eq!(tower(&sd, n, 0).unwrap().height() as u64, h.0);
            h = (h.0 + h.1, h.0);
        }
    }

    #[test]
    fn single_top_edge_tower_has_height_one() {
        let sd = fixtures::fibonacci();
        assert_eq!(tower(&sd, 1, 1).unwrap().height(), 1);
    }

    #[test]
    fn odometer_extreme_paths_and_carry() {
        let sd = fixtures::odometer();
        let ext = extreme_paths(&sd).unwrap();
        assert!(ext.max.is_max(&sd));
        assert!(ext.min.is_min());
        assert_eq!(vershik_step(&sd, &ext.max).unwrap(), ext.min);
        // 1,1,0,0,... -> 0,0,1,0,...
        let x = AdicPath::new(&sd, vec![e(0, 1), e(0, 1)], vec![e(0, 0)]).unwrap();
        let y = vershik_step(&sd, &x).unwrap();
        let expected = AdicPath::new(&sd, vec![e(0, 0), e(0, 0), e(0, 1)], vec![e(0, 0)]).unwrap();
        assert_eq!(y, expected);
        assert_eq!(vershik_step_back(&sd, &y).unwrap(), x);
        assert!(is_cofinal(&x, &y));
        assert!(!is_cofinal(&ext.max, &ext.min));
        assert!(is_cofinal(&x, &x));
    }

    #[test]
    fn fibonacci_has_two_max_paths() {
        let sd = fixtures::fibonacci();
        let max = maximal_paths(&sd);
        assert_eq!(max.len(), 2);
        assert!(max.iter().all(|p| p.cycle().len() == 2 && p.is_max(&sd)));
        assert!(matches!(extreme_paths(&sd), Err(Error::NotProperlyOrdered(_))));
        assert!(matches!(vershik_step(&sd, &max[0]), Err(Error::NotProperlyOrdered(_))));
        assert_eq!(minimal_paths(&sd).len(), 1);
    }

    #[test]
    fn fibonacci_min_stepped_twice_is_floor_two() {
        let sd = fixtures::fibonacci();
        let x = minimal_path(&sd).unwrap();
        let y = vershik_step(&sd, &vershik_step(&sd, &x).unwrap()).unwrap();
        for n in 3..10 {
            let t = tower(&sd, n, x.edge(n).range).unwrap();
            assert_eq!(y.prefix(n), t.floors[2]);
        }
    }

    #[test]
    fn degenerate_diagram_is_flagged() {
        let sd = crate::ordered::StationaryOrderedDiagram::from_words(&["a"], "a", &[("a", "a")]).unwrap();
        assert_eq!(extreme_paths(&sd), Err(Error::DegeneratePathSpace));
        assert_eq!(orbit_sequence(&sd, 3), Err(Error::DegeneratePathSpace));
    }

    #[test]
    fn orbit_examples() {
        let sd = fixtures::fibonacci();
        let word: String = orbit_sequence(&sd, 8)
            .unwrap()
            .iter()
            .map(|&a| sd.alphabet()[a].as_str())
            .collect();
        assert_eq!(word, "abaababa");
        assert_eq!(orbit_sequence(&sd, 1).unwrap(), vec![0]);
        assert!(orbit_sequence(&sd, 0).is_err());
        assert_eq!(orbit_sequence(&fixtures::odometer(), 5).unwrap(), vec![0; 5]);
    }

    #[test]
    fn orbit_resumes_from_state() {
        let sd = fixtures::sturmian();
        let full = orbit_sequence(&sd, 200).unwrap();
        let mut stream = OrbitStream::new(&sd).unwrap();
        for _ in 0..77 {
            stream.step();
        }
        let resumed = OrbitStream::resume(&sd, stream.state().clone()).unwrap();
        let tail: Vec<usize> = resumed.take(123).map(|e| e.range).collect();
        assert_eq!(tail, full[77..]);
    }

    #[test]
    fn bad_paths_rejected() {
        let sd = fixtures::fibonacci();
        // b at level 1 cannot feed the b-edge of level 2 (σ(b) = a).
        assert!(PathPrefix::new(&sd, vec![e(1, 0), e(1, 0)]).is_err());
        assert!(PathPrefix::new(&sd, vec![e(0, 5)]).is_err());
        assert!(AdicPath::new(&sd, vec![], vec![e(0, 0)]).is_err());
        assert!(AdicPath::new(&sd, vec![e(0, 0)], vec![]).is_err());
    }
}
