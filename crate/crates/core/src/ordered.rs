//! Ordered diagrams, stationary ordered diagrams and substitutions.
//!
//! Matrix convention for stationary data: entry `(i, j)` of the stationary
//! matrix `C` is the number of occurrences of `a_j` in `σ(a_i)`, which is the
//! number of edges from `a_j` into `a_i` between consecutive levels.

use std::collections::HashSet;
use std::fmt;

use crate::diagram::{self, BratteliDiagram, Edge, Simplicity, TelescopeSchedule, VertexId};
use crate::error::{Error, Result};
use crate::matrix::{is_primitive, Primitivity};
use crate::IncidenceMatrix;

/// Level-by-level view of an ordered diagram, finite or not.
///
/// An edge is addressed by its level, its range vertex and its order index
/// inside `r^{-1}(range)`.
pub trait OrderedLevels {
    /// Number of represented edge levels, `None` when every level exists.
    fn depth(&self) -> Option<usize>;
    fn level_size(&self, level: usize) -> usize;
    fn vertex_label(&self, level: usize, v: usize) -> &str;
    fn in_degree(&self, level: usize, v: usize) -> usize;
    /// Source (index at `level - 1`) of the `ord`-th edge into `v`.
    fn in_source(&self, level: usize, v: usize, ord: usize) -> usize;

    fn has_level(&self, level: usize) -> bool {
        self.depth().is_none_or(|d| level <= d)
    }
}

/// Explicit ordered diagram made of the first `depth` edge levels of `d`.
pub fn explicit_truncation<D: OrderedLevels + ?Sized>(d: &D, depth: usize) -> Result<OrderedDiagram> {
    if !d.has_level(depth) {
        return Err(Error::LevelOutOfRange {
            level: depth,
            depth: d.depth().unwrap_or(usize::MAX),
        });
    }
    let levels = (0..=depth)
        .map(|l| (0..d.level_size(l)).map(|v| d.vertex_label(l, v).to_string()).collect())
        .collect();
    let sources = (1..=depth)
        .map(|l| {
            (0..d.level_size(l))
                .map(|v| (0..d.in_degree(l, v)).map(|k| d.in_source(l, v, k)).collect())
                .collect()
        })
        .collect();
    OrderedDiagram::from_ordered_sources(levels, sources)
}

/// Ordered diagram that repeats fixed order data strictly below level
/// `head_depth()`. Vertices at and below that level are the tail symbols.
pub trait StationaryTail: OrderedLevels {
    fn head_depth(&self) -> usize;
    /// Incoming words of the repeating part, over the tail symbols.
    fn tail_words(&self) -> &[Vec<usize>];

    fn tail_size(&self) -> usize {
        self.tail_words().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedDiagram {
    base: BratteliDiagram,
    order: Vec<Vec<usize>>,
    incoming: Vec<Vec<Vec<usize>>>,
}

impl OrderedDiagram {
    /// `order[n-1][p]` is the order index of the edge at position `p` of `E_n`.
    pub fn new(base: BratteliDiagram, order: Vec<Vec<usize>>) -> Result<Self> {
        base.validate().into_result()?;
        if order.len() != base.depth() {
            return Err(Error::InvalidOrder("one order list per edge level required".into()));
        }
        let mut incoming = Vec::with_capacity(base.depth());
        for level in 1..=base.depth() {
            let ord = &order[level - 1];
            if ord.len() != base.edges(level).len() {
                return Err(Error::InvalidOrder(format!("order list of E_{level} has wrong length")));
            }
            let mut per_vertex = Vec::with_capacity(base.level_size(level));
            for v in 0..base.level_size(level) {
                let positions = base.incoming(level, v);
                let mut slots = vec![None; positions.len()];
                for &p in &positions {
                    let k = ord[p];
                    if k >= slots.len() || slots[k].is_some() {
                        return Err(Error::InvalidOrder(format!(
                            "order indices into {} at level {level} are not 0..{}",
                            base.labels(level)[v],
                            positions.len()
                        )));
                    }
                    slots[k] = Some(p);
                }
                per_vertex.push(slots.into_iter().map(|s| s.expect("filled")).collect());
            }
            incoming.push(per_vertex);
        }
        Ok(OrderedDiagram { base, order, incoming })
    }

    /// Orders every `r^{-1}(v)` by edge position.
    pub fn with_storage_order(base: BratteliDiagram) -> Result<Self> {
        let order = (1..=base.depth())
            .map(|level| {
                let mut ord = vec![0; base.edges(level).len()];
                for v in 0..base.level_size(level) {
                    for (k, p) in base.incoming(level, v).into_iter().enumerate() {
                        ord[p] = k;
                    }
                }
                ord
            })
            .collect();
        Self::new(base, order)
    }

    /// Builds a diagram from, for each level `n >= 1` and vertex, the ordered
    /// list of source indices at level `n - 1`.
    pub fn from_ordered_sources(levels: Vec<Vec<String>>, sources: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut order = Vec::new();
        for words in &sources {
            let mut list = Vec::new();
            let mut ord = Vec::new();
            for (v, word) in words.iter().enumerate() {
                for (k, &s) in word.iter().enumerate() {
                    list.push((s, v));
                    ord.push(k);
                }
            }
            edges.push(list);
            order.push(ord);
        }
        Self::new(BratteliDiagram::from_edge_lists(levels, edges)?, order)
    }

    pub fn base(&self) -> &BratteliDiagram {
        &self.base
    }

    pub fn into_base(self) -> BratteliDiagram {
        self.base
    }

    pub fn depth(&self) -> usize {
        self.base.depth()
    }

    pub fn order(&self) -> &[Vec<usize>] {
        &self.order
    }

    pub fn edge_order(&self, level: usize, position: usize) -> usize {
        self.order[level - 1][position]
    }

    /// Edge positions into `v`, in increasing order.
    pub fn ordered_incoming(&self, level: usize, v: usize) -> Vec<usize> {
        self.incoming[level - 1][v].clone()
    }

    /// Ordered source indices of the edges into `v`.
    pub fn incoming_sources(&self, level: usize, v: usize) -> Vec<usize> {
        let edges = self.base.edges(level);
        self.incoming[level - 1][v]
            .iter()
            .map(|&p| edges[p].source.index)
            .collect()
    }

    /// Telescopes and orders composite edges lexicographically, the last
    /// differing coordinate deciding.
    pub fn induced_order_telescope(&self, sched: &TelescopeSchedule) -> Result<OrderedDiagram> {
        sched.check_depth(self.depth())?;
        let order = |level: usize, v: usize| self.ordered_incoming(level, v);
        let (base, ord) = diagram::telescope_with(&self.base, sched, &order);
        OrderedDiagram::new(base, ord)
    }

    /// `(maximal, minimal)` edge of `r^{-1}(v)`.
    pub fn max_min_edges(&self, v: VertexId) -> Result<(Edge, Edge)> {
        if v.level == 0 || v.level > self.depth() {
            return Err(Error::LevelOutOfRange {
                level: v.level,
                depth: self.depth(),
            });
        }
        let into = &self.incoming[v.level - 1][v.index];
        let edges = self.base.edges(v.level);
        Ok((edges[*into.last().expect("nonempty")].clone(), edges[into[0]].clone()))
    }

    /// Appends `extra` levels that copy the last level's labels, the edges
    /// into vertex `a` coming from `words[a]` in order.
    pub fn extend_stationary(&self, extra: usize, words: &[Vec<usize>]) -> Result<OrderedDiagram> {
        let depth = self.depth();
        let labels = self.base.labels(depth).to_vec();
        if words.len() != labels.len() {
            return Err(Error::InvalidDiagram(format!(
                "{} words for {} vertices on the last level",
                words.len(),
                labels.len()
            )));
        }
        let mut levels = self.base.levels().to_vec();
        let mut edges = self.base.edge_levels().to_vec();
        let mut order = self.order.clone();
        for n in depth + 1..=depth + extra {
            let mut list = Vec::new();
            let mut ord = Vec::new();
            for (v, word) in words.iter().enumerate() {
                for (k, &src) in word.iter().enumerate() {
                    list.push(Edge {
                        id: list.len(),
                        source: VertexId::new(n - 1, src),
                        range: VertexId::new(n, v),
                    });
                    ord.push(k);
                }
            }
            levels.push(labels.clone());
            edges.push(list);
            order.push(ord);
        }
        OrderedDiagram::new(BratteliDiagram::new(levels, edges)?, order)
    }

    /// Truncation to the first `depth` edge levels.
    pub fn truncate(&self, depth: usize) -> Result<OrderedDiagram> {
        if depth > self.depth() {
            return Err(Error::LevelOutOfRange {
                level: depth,
                depth: self.depth(),
            });
        }
        let base = BratteliDiagram::new(
            self.base.levels()[..=depth].to_vec(),
            self.base.edge_levels()[..depth].to_vec(),
        )?;
        let order = self.order[..depth].to_vec();
        if depth == 0 {
            return Ok(OrderedDiagram {
                base,
                order,
                incoming: Vec::new(),
            });
        }
        OrderedDiagram::new(base, order)
    }
}

impl OrderedLevels for OrderedDiagram {
    fn depth(&self) -> Option<usize> {
        Some(self.base.depth())
    }

    fn level_size(&self, level: usize) -> usize {
        self.base.level_size(level)
    }

    fn vertex_label(&self, level: usize, v: usize) -> &str {
        &self.base.labels(level)[v]
    }

    fn in_degree(&self, level: usize, v: usize) -> usize {
        self.incoming[level - 1][v].len()
    }

    fn in_source(&self, level: usize, v: usize, ord: usize) -> usize {
        self.base.edges(level)[self.incoming[level - 1][v][ord]].source.index
    }
}

/// Nonempty words over a finite alphabet, one per letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Vec<String>,
    rules: Vec<Vec<usize>>,
}

impl Substitution {
    pub fn new(alphabet: Vec<String>, rules: Vec<Vec<usize>>) -> Result<Self> {
        check_alphabet(&alphabet)?;
        if rules.len() != alphabet.len() {
            return Err(Error::InvalidSubstitution("one rule per letter required".into()));
        }
        for (a, w) in rules.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::InvalidSubstitution(format!("empty word for {}", alphabet[a])));
            }
            if w.iter().any(|&b| b >= alphabet.len()) {
                return Err(Error::InvalidSubstitution(format!(
                    "unknown letter in rule for {}",
                    alphabet[a]
                )));
            }
        }
        Ok(Substitution { alphabet, rules })
    }

    /// Single-character letters; rules written as plain strings.
    pub fn from_strs(alphabet: &[&str], rules: &[(&str, &str)]) -> Result<Self> {
        let alphabet: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
        let mut words = vec![Vec::new(); alphabet.len()];
        for (a, w) in rules {
            let i = index_of(&alphabet, a)?;
            words[i] = parse_word(&alphabet, w)?;
        }
        Self::new(alphabet, words)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn rule(&self, a: usize) -> &[usize] {
        &self.rules[a]
    }

    pub fn rules(&self) -> &[Vec<usize>] {
        &self.rules
    }

    pub fn apply(&self, word: &[usize]) -> Vec<usize> {
        word.iter().flat_map(|&a| self.rules[a].iter().copied()).collect()
    }

    /// Letter-count matrix: entry `(i, j)` counts `a_j` in `σ(a_i)`.
    pub fn abelianization(&self) -> IncidenceMatrix {
        let k = self.alphabet.len();
        let mut m = IncidenceMatrix::zeros(k, k);
        for (i, w) in self.rules.iter().enumerate() {
            for &j in w {
                let next = m.get(i, j) + 1;
                m.set(i, j, next);
            }
        }
        m
    }

    pub fn word_string(&self, word: &[usize]) -> String {
        word.iter().map(|&a| self.alphabet[a].as_str()).collect()
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, w) in self.rules.iter().enumerate() {
            if a > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} -> {}", self.alphabet[a], self.word_string(w))?;
        }
        Ok(())
    }
}

/// A diagram whose order data repeats identically below level 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StationaryOrderedDiagram {
    alphabet: Vec<String>,
    top: Vec<usize>,
    incoming: Vec<Vec<usize>>,
}

/// Label of the root vertex in expansions of stationary data.
pub const ROOT_LABEL: &str = "root";

impl StationaryOrderedDiagram {
    /// `top` lists the ranges of the level-1 edges in order; `incoming[a]`
    /// lists the sources of the edges into `a`, in increasing edge order.
    pub fn new(alphabet: Vec<String>, top: Vec<usize>, incoming: Vec<Vec<usize>>) -> Result<Self> {
        check_alphabet(&alphabet)?;
        let k = alphabet.len();
        if incoming.len() != k {
            return Err(Error::InvalidDiagram("one incoming word per symbol required".into()));
        }
        if top.iter().chain(incoming.iter().flatten()).any(|&a| a >= k) {
            return Err(Error::InvalidDiagram("symbol index out of range".into()));
        }
        for (a, name) in alphabet.iter().enumerate() {
            if !top.contains(&a) {
                return Err(Error::InvalidDiagram(format!(
                    "symbol {name} has no level-1 edge (r^-1(v) empty)"
                )));
            }
            if incoming[a].is_empty() {
                return Err(Error::InvalidDiagram(format!(
                    "symbol {name} has an empty incoming word"
                )));
            }
        }
        let sources: HashSet<usize> = incoming.iter().flatten().copied().collect();
        if let Some(a) = (0..k).find(|a| !sources.contains(a)) {
            return Err(Error::InvalidDiagram(format!(
                "symbol {} is never a source (s^-1(v) empty)",
                alphabet[a]
            )));
        }
        Ok(StationaryOrderedDiagram {
            alphabet,
            top,
            incoming,
        })
    }

    /// Single-character symbols; words written as plain strings.
    pub fn from_words(alphabet: &[&str], top: &str, incoming: &[(&str, &str)]) -> Result<Self> {
        let alphabet: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
        let top = parse_word(&alphabet, top)?;
        let mut words = vec![Vec::new(); alphabet.len()];
        for (a, w) in incoming {
            words[index_of(&alphabet, a)?] = parse_word(&alphabet, w)?;
        }
        Self::new(alphabet, top, words)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn symbol_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn incoming_word(&self, a: usize) -> &[usize] {
        &self.incoming[a]
    }

    pub fn incoming_words(&self) -> &[Vec<usize>] {
        &self.incoming
    }

    /// Stationary matrix `C`, counted from the incoming words.
    pub fn matrix(&self) -> IncidenceMatrix {
        stationary_matrix(&self.incoming)
    }

    /// The `k x 1` matrix of top-edge multiplicities.
    pub fn top_column(&self) -> IncidenceMatrix {
        let mut m = IncidenceMatrix::zeros(self.symbol_count(), 1);
        for &a in &self.top {
            let next = m.get(a, 0) + 1;
            m.set(a, 0, next);
        }
        m
    }

    pub fn max_top_multiplicity(&self) -> usize {
        (0..self.symbol_count())
            .map(|a| self.top.iter().filter(|&&t| t == a).count())
            .max()
            .unwrap_or(0)
    }

    pub fn has_single_top_edges(&self) -> bool {
        self.max_top_multiplicity() == 1
    }

    /// Explicit truncation with `depth` edge levels. Top edges are stored in
    /// top-word order, so the id of a top edge is its position in the word.
    pub fn to_ordered(&self, depth: usize) -> OrderedDiagram {
        let root = OrderedDiagram::new(
            BratteliDiagram::new(vec![vec![ROOT_LABEL.to_string()]], Vec::new()).expect("one level"),
            Vec::new(),
        )
        .expect("root only");
        if depth == 0 {
            return root;
        }
        let mut seen = vec![0; self.symbol_count()];
        let mut list = Vec::with_capacity(self.top.len());
        let mut ord = Vec::with_capacity(self.top.len());
        for &a in &self.top {
            list.push((0, a));
            ord.push(seen[a]);
            seen[a] += 1;
        }
        let base =
            BratteliDiagram::from_edge_lists(vec![vec![ROOT_LABEL.to_string()], self.alphabet.clone()], vec![list])
                .expect("top level");
        OrderedDiagram::new(base, vec![ord])
            .and_then(|head| head.extend_stationary(depth - 1, &self.incoming))
            .expect("stationary data is valid")
    }

    pub fn substitution(&self) -> Substitution {
        Substitution {
            alphabet: self.alphabet.clone(),
            rules: self.incoming.clone(),
        }
    }

    /// Inverse of [`Self::substitution`], with one top edge per symbol in
    /// alphabet order.
    pub fn from_substitution(sigma: &Substitution) -> Result<Self> {
        let top = (0..sigma.alphabet.len()).collect();
        Self::new(sigma.alphabet.clone(), top, sigma.rules.clone())
    }

    /// Periodic telescoping `0 < 1 < 1 + p < 1 + 2p < ...`, again stationary
    /// with incoming words `σ^p(a)`.
    pub fn power(&self, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidSchedule("power must be positive".into()));
        }
        let sigma = self.substitution();
        let words = (0..self.symbol_count())
            .map(|a| {
                let mut w = vec![a];
                for _ in 0..p {
                    w = sigma.apply(&w);
                }
                w
            })
            .collect();
        Self::new(self.alphabet.clone(), self.top.clone(), words)
    }

    pub fn is_primitive(&self) -> Primitivity {
        is_primitive(&self.matrix()).expect("stationary matrix is square")
    }

    /// Exact simplicity answer; a `Yes` witness lists `horizon` cuts.
    pub fn is_simple(&self, horizon: usize) -> Simplicity {
        match self.is_primitive() {
            Primitivity::Yes(k) => {
                Simplicity::Yes(TelescopeSchedule::periodic(1, k, 1 + k * horizon.saturating_sub(1)))
            }
            Primitivity::No => Simplicity::No,
        }
    }

    pub fn max_source_map(&self) -> Vec<usize> {
        self.incoming.iter().map(|w| *w.last().expect("nonempty")).collect()
    }

    pub fn min_source_map(&self) -> Vec<usize> {
        self.incoming.iter().map(|w| w[0]).collect()
    }

    /// `(number of all-maximal paths, number of all-minimal paths)`.
    pub fn count_extreme_paths(&self) -> (usize, usize) {
        (
            periodic_points(&self.max_source_map()).len(),
            periodic_points(&self.min_source_map()).len(),
        )
    }

    /// Finitely many infinite paths: every incoming word has length one.
    pub fn is_degenerate(&self) -> bool {
        self.incoming.iter().all(|w| w.len() == 1)
    }

    pub fn properly_ordered(&self) -> ProperOrdering {
        proper_ordering(&self.incoming)
    }
}

impl OrderedLevels for StationaryOrderedDiagram {
    fn depth(&self) -> Option<usize> {
        None
    }

    fn level_size(&self, level: usize) -> usize {
        if level == 0 {
            1
        } else {
            self.symbol_count()
        }
    }

    fn vertex_label(&self, level: usize, v: usize) -> &str {
        if level == 0 {
            ROOT_LABEL
        } else {
            &self.alphabet[v]
        }
    }

    fn in_degree(&self, level: usize, v: usize) -> usize {
        if level == 1 {
            self.top.iter().filter(|&&t| t == v).count()
        } else {
            self.incoming[v].len()
        }
    }

    fn in_source(&self, level: usize, v: usize, ord: usize) -> usize {
        if level == 1 {
            0
        } else {
            self.incoming[v][ord]
        }
    }
}

impl StationaryTail for StationaryOrderedDiagram {
    fn head_depth(&self) -> usize {
        1
    }

    fn tail_words(&self) -> &[Vec<usize>] {
        &self.incoming
    }
}

/// Why an ordered diagram fails to be properly ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotProper {
    NotSimple,
    MaxPaths(usize),
    MinPaths(usize),
    /// The path space is finite.
    Degenerate,
}

impl fmt::Display for NotProper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotProper::NotSimple => write!(f, "not simple (stationary matrix is not primitive)"),
            NotProper::MaxPaths(n) => write!(f, "{n} maximal paths"),
            NotProper::MinPaths(n) => write!(f, "{n} minimal paths"),
            NotProper::Degenerate => write!(f, "path space is finite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProperOrdering {
    Yes,
    No(NotProper),
}

impl ProperOrdering {
    pub fn is_yes(&self) -> bool {
        matches!(self, ProperOrdering::Yes)
    }

    pub(crate) fn into_result(self) -> Result<()> {
        match self {
            ProperOrdering::Yes => Ok(()),
            ProperOrdering::No(r) => Err(Error::NotProperlyOrdered(r.to_string())),
        }
    }
}

/// Properness of any diagram whose order data is eventually given by
/// `incoming`: the finite head never changes the count of extreme paths,
/// because each periodic tail extends upward along unique extreme edges.
pub(crate) fn proper_ordering(incoming: &[Vec<usize>]) -> ProperOrdering {
    if incoming.iter().all(|w| w.len() == 1) {
        return ProperOrdering::No(NotProper::Degenerate);
    }
    if !is_primitive(&stationary_matrix(incoming)).expect("square").is_yes() {
        return ProperOrdering::No(NotProper::NotSimple);
    }
    let max = periodic_points(
        &incoming
            .iter()
            .map(|w| *w.last().expect("nonempty"))
            .collect::<Vec<_>>(),
    );
    let min = periodic_points(&incoming.iter().map(|w| w[0]).collect::<Vec<_>>());
    if max.len() != 1 {
        return ProperOrdering::No(NotProper::MaxPaths(max.len()));
    }
    if min.len() != 1 {
        return ProperOrdering::No(NotProper::MinPaths(min.len()));
    }
    ProperOrdering::Yes
}

/// Requirement for orbits of the minimal path: primitive tail and a unique
/// minimal path.
pub(crate) fn orbit_ready(incoming: &[Vec<usize>]) -> Result<()> {
    if incoming.iter().all(|w| w.len() == 1) {
        return Err(Error::DegeneratePathSpace);
    }
    if !is_primitive(&stationary_matrix(incoming)).expect("square").is_yes() {
        return Err(Error::NotSimple);
    }
    let min = periodic_points(&incoming.iter().map(|w| w[0]).collect::<Vec<_>>());
    if min.len() != 1 {
        return Err(Error::NoUniqueMinimalPath(min.len()));
    }
    Ok(())
}

pub(crate) fn stationary_matrix(incoming: &[Vec<usize>]) -> IncidenceMatrix {
    let k = incoming.len();
    let mut m = IncidenceMatrix::zeros(k, k);
    for (i, w) in incoming.iter().enumerate() {
        for &j in w {
            let next = m.get(i, j) + 1;
            m.set(i, j, next);
        }
    }
    m
}

/// Points lying on a cycle of the self-map `f`, in increasing order.
pub fn periodic_points(f: &[usize]) -> Vec<usize> {
    let n = f.len();
    (0..n)
        .filter(|&a| {
            let mut x = f[a];
            for _ in 0..n {
                if x == a {
                    return true;
                }
                x = f[x];
            }
            false
        })
        .collect()
}

fn check_alphabet(alphabet: &[String]) -> Result<()> {
    if alphabet.is_empty() {
        return Err(Error::InvalidDiagram("empty alphabet".into()));
    }
    let mut seen = HashSet::new();
    for a in alphabet {
        if a.is_empty() || !seen.insert(a) {
            return Err(Error::InvalidDiagram(format!("symbol {a:?} is empty or repeated")));
        }
    }
    Ok(())
}

pub(crate) fn index_of(alphabet: &[String], symbol: &str) -> Result<usize> {
    alphabet
        .iter()
        .position(|a| a == symbol)
        .ok_or_else(|| Error::InvalidDiagram(format!("unknown symbol {symbol:?}")))
}

/// Splits a plain string into single-character symbols.
pub(crate) fn parse_word(alphabet: &[String], word: &str) -> Result<Vec<usize>> {
    word.chars().map(|c| index_of(alphabet, &c.to_string())).collect()
}
