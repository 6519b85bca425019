//! Dimension groups as inductive limits `Z^{|V_0|} -> Z^{|V_1|} -> ...`.
//!
//! A [`Presentation`] stores the connecting maps of an explicit truncation,
//! optionally followed by a stationary matrix `C` repeated forever. Decisions
//! that depend on stages beyond what is represented come back as
//! `Undetermined`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::diagram::BratteliDiagram;
use crate::error::{Error, Result};
use crate::kr::{diagram_from_nested, KRLevel, NestedKRSequence};
use crate::matrix::{is_primitive, Matrix};
use crate::ordered::{explicit_truncation, stationary_matrix, StationaryTail};
use crate::perron::{vector_sign, PerronEnclosure};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
    Undetermined,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "POS",
            Sign::Negative => "NEG",
            Sign::Zero => "ZERO",
            Sign::Undetermined => "UNDET",
        })
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "EQUAL",
            Decision::No => "DISTINCT",
            Decision::Undetermined => "UNDET",
        })
    }
}

/// Element of stage `stage`, written `stage:[v_1,...,v_k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<T: Scalar> {
    pub stage: usize,
    pub vector: Vec<T>,
}

impl<T: Scalar> Element<T> {
    pub fn new(stage: usize, vector: Vec<T>) -> Self {
        Element { stage, vector }
    }

    pub fn neg(&self) -> Self {
        Element::new(self.stage, self.vector.iter().map(|x| -x.clone()).collect())
    }

    pub fn scale(&self, k: &T) -> Self {
        Element::new(self.stage, self.vector.iter().map(|x| x.clone() * k.clone()).collect())
    }

    pub fn is_zero_vector(&self) -> bool {
        self.vector.iter().all(Zero::is_zero)
    }
}

impl<T: Scalar> fmt::Display for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vector.iter().map(ToString::to_string).collect();
        write!(f, "{}:[{}]", self.stage, parts.join(","))
    }
}

impl<T: Scalar> FromStr for Element<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("expected stage:[v1,...], got {s:?}"));
        let (stage, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let stage = stage.trim().parse().map_err(|_| bad())?;
        let inner = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let vector = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| T::from_str_radix(x.trim(), 10).map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        Ok(Element { stage, vector })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<T: Scalar> {
    dims: Vec<usize>,
    maps: Vec<Matrix<T>>,
    tail: Option<Matrix<T>>,
}

impl<T: Scalar> Presentation<T> {
    /// `maps[n - 1]` is `φ_n: Z^{|V_{n-1}|} -> Z^{|V_n|}`; `tail`, when given,
    /// is used for every later stage.
    pub fn new(maps: Vec<Matrix<T>>, tail: Option<Matrix<T>>) -> Result<Self> {
        let mut dims = vec![1];
        for (i, m) in maps.iter().enumerate() {
            if m.cols() != dims[i] {
                return Err(Error::DimensionMismatch(format!(
                    "φ_{} has {} columns, stage {i} has dimension {}",
                    i + 1,
                    m.cols(),
                    dims[i]
                )));
            }
            if !m.is_nonnegative() {
                return Err(Error::Precondition(format!("φ_{} has negative entries", i + 1)));
            }
            dims.push(m.rows());
        }
        if let Some(c) = &tail {
            let last = *dims.last().expect("stage 0");
            if !c.is_square() || c.rows() != last {
                return Err(Error::DimensionMismatch(format!(
                    "stationary matrix is {}x{}, last stage has dimension {last}",
                    c.rows(),
                    c.cols()
                )));
            }
            if !c.is_nonnegative() {
                return Err(Error::Precondition("stationary matrix has negative entries".into()));
            }
        }
        Ok(Presentation { dims, maps, tail })
    }

    pub fn from_diagram(d: &BratteliDiagram) -> Self {
        let maps = (1..=d.depth())
            .map(|n| d.incidence_matrix_as(n).expect("level in range"))
            .collect();
        Presentation::new(maps, None).expect("diagram matrices chain")
    }

    pub fn from_stationary<D: StationaryTail + ?Sized>(d: &D) -> Self {
        let head = explicit_truncation(d, d.head_depth()).expect("head is represented");
        let maps = (1..=d.head_depth())
            .map(|n| head.base().incidence_matrix_as(n).expect("level in range"))
            .collect();
        let c = stationary_matrix(d.tail_words()).map(|x| T::from_big(x));
        Presentation::new(maps, Some(c)).expect("stationary data chains")
    }

    pub fn head_depth(&self) -> usize {
        self.maps.len()
    }

    pub fn tail(&self) -> Option<&Matrix<T>> {
        self.tail.as_ref()
    }

    /// Last represented stage, `None` for a stationary tail.
    pub fn depth(&self) -> Option<usize> {
        match self.tail {
            Some(_) => None,
            None => Some(self.maps.len()),
        }
    }

    pub fn dim(&self, stage: usize) -> Option<usize> {
        match self.dims.get(stage) {
            Some(&k) => Some(k),
            None => self.tail.as_ref().map(Matrix::rows),
        }
    }

    /// `φ_n` for `n >= 1`.
    pub fn map(&self, n: usize) -> Option<&Matrix<T>> {
        if n == 0 {
            return None;
        }
        self.maps.get(n - 1).or(self.tail.as_ref())
    }

    pub fn element(&self, stage: usize, vector: Vec<T>) -> Result<Element<T>> {
        let g = Element::new(stage, vector);
        self.check(&g)?;
        Ok(g)
    }

    fn check(&self, g: &Element<T>) -> Result<()> {
        match self.dim(g.stage) {
            None => Err(Error::LevelOutOfRange {
                level: g.stage,
                depth: self.maps.len(),
            }),
            Some(k) if k != g.vector.len() => Err(Error::DimensionMismatch(format!(
                "stage {} has dimension {k}, element has {} entries",
                g.stage,
                g.vector.len()
            ))),
            Some(_) => Ok(()),
        }
    }

    /// Class of `1` at stage 0.
    pub fn unit(&self) -> Element<T> {
        Element::new(0, vec![T::one()])
    }

    pub fn zero(&self, stage: usize) -> Result<Element<T>> {
        let k = self.dim(stage).ok_or(Error::LevelOutOfRange {
            level: stage,
            depth: self.maps.len(),
        })?;
        Ok(Element::new(stage, vec![T::zero(); k]))
    }

    pub fn push(&self, g: &Element<T>, m: usize) -> Result<Element<T>> {
        self.check(g)?;
        if m < g.stage {
            return Err(Error::StageOrder {
                stage: g.stage,
                target: m,
            });
        }
        if self.dim(m).is_none() {
            return Err(Error::LevelOutOfRange {
                level: m,
                depth: self.maps.len(),
            });
        }
        let mut v = g.vector.clone();
        for n in g.stage + 1..=m {
            v = self.map(n).expect("stage in range").mul_vec(&v)?;
        }
        Ok(Element::new(m, v))
    }

    fn common(&self, a: &Element<T>, b: &Element<T>) -> Result<(Element<T>, Element<T>)> {
        let s = a.stage.max(b.stage);
        Ok((self.push(a, s)?, self.push(b, s)?))
    }

    pub fn add(&self, a: &Element<T>, b: &Element<T>) -> Result<Element<T>> {
        let (a, b) = self.common(a, b)?;
        Ok(Element::new(
            a.stage,
            a.vector.into_iter().zip(b.vector).map(|(x, y)| x + y).collect(),
        ))
    }

    pub fn sub(&self, a: &Element<T>, b: &Element<T>) -> Result<Element<T>> {
        self.add(a, &b.neg())
    }

    /// Equality in the limit.
    ///
    /// With a stationary tail the difference is pushed into the tail and
    /// tested against the eventual kernel of `C`, which is reached after at
    /// most `dim` applications. Without one, only vanishing within the
    /// represented stages can be observed.
    pub fn equal(&self, a: &Element<T>, b: &Element<T>) -> Result<Decision> {
        let d = self.sub(a, b)?;
        Ok(self.is_zero_class(&d))
    }

    fn is_zero_class(&self, d: &Element<T>) -> Decision {
        match &self.tail {
            Some(c) => {
                let t = d.stage.max(self.maps.len());
                let mut w = self.push(d, t).expect("stage in range").vector;
                for _ in 0..c.rows() {
                    if w.iter().all(Zero::is_zero) {
                        return Decision::Yes;
                    }
                    w = c.mul_vec(&w).expect("square");
                }
                if w.iter().all(Zero::is_zero) {
                    Decision::Yes
                } else {
                    Decision::No
                }
            }
            None => {
                let mut w = d.clone();
                loop {
                    if w.is_zero_vector() {
                        return Decision::Yes;
                    }
                    if w.stage == self.maps.len() {
                        return Decision::Undetermined;
                    }
                    w = self.push(&w, w.stage + 1).expect("stage in range");
                }
            }
        }
    }

    /// Sign of `g` in the limit order.
    ///
    /// Any push with entries of one sign settles the question. In the
    /// primitive stationary case the pushes are replaced by the Perron
    /// enclosure, refined `horizon` times; otherwise `horizon` bounds the
    /// number of single-stage pushes.
    pub fn is_positive(&self, g: &Element<T>, horizon: usize) -> Result<Sign> {
        self.check(g)?;
        match self.is_zero_class(g) {
            Decision::Yes => return Ok(Sign::Zero),
            Decision::No | Decision::Undetermined => {}
        }
        let from_sign = |s: Option<Ordering>| match s {
            Some(Ordering::Greater) => Some(Sign::Positive),
            Some(Ordering::Less) => Some(Sign::Negative),
            _ => None,
        };
        let head_end = match &self.tail {
            Some(_) => g.stage.max(self.maps.len()),
            None => self.maps.len().min(g.stage + horizon),
        };
        let mut w = g.clone();
        loop {
            if let Some(s) = from_sign(vector_sign(&w.vector)) {
                return Ok(s);
            }
            if w.stage >= head_end {
                break;
            }
            w = self.push(&w, w.stage + 1)?;
        }
        let Some(c) = &self.tail else {
            return Ok(Sign::Undetermined);
        };
        if is_primitive(c)?.is_yes() {
            let mut e = PerronEnclosure::new(c)?;
            let v: Vec<BigInt> = w.vector.iter().map(Scalar::to_big).collect();
            for step in 0..=horizon {
                if let Some(s) = from_sign(e.pairing_sign(&v)) {
                    return Ok(s);
                }
                if step < horizon {
                    e.refine();
                }
            }
        } else {
            for _ in 0..horizon {
                w = self.push(&w, w.stage + 1)?;
                if let Some(s) = from_sign(vector_sign(&w.vector)) {
                    return Ok(s);
                }
            }
        }
        Ok(Sign::Undetermined)
    }

    /// Whether `a <= b`: `Some` only when the verdict is certified.
    pub fn le(&self, a: &Element<T>, b: &Element<T>, horizon: usize) -> Result<Option<bool>> {
        Ok(match self.is_positive(&self.sub(b, a)?, horizon)? {
            Sign::Positive | Sign::Zero => Some(true),
            Sign::Negative => Some(false),
            Sign::Undetermined => None,
        })
    }

    /// Some `c` with `a_i <= c <= b_j`, searched among entrywise maxima of
    /// the pushed `a_i` over `horizon` further stages. `None` means the search
    /// gave up, not that no such `c` exists.
    pub fn interpolate(&self, a: [&Element<T>; 2], b: [&Element<T>; 2], horizon: usize) -> Result<Option<Element<T>>> {
        for ai in a {
            for bj in b {
                if self.le(ai, bj, horizon)? != Some(true) {
                    return Err(Error::Precondition(format!("{ai} <= {bj} is not certified")));
                }
            }
        }
        let s = a.iter().chain(&b).map(|g| g.stage).max().expect("four elements");
        let last = match self.depth() {
            Some(depth) => depth.min(s + horizon),
            None => s + horizon,
        };
        for t in s..=last {
            let pa: Vec<Element<T>> = a.iter().map(|g| self.push(g, t)).collect::<Result<_>>()?;
            let pb: Vec<Element<T>> = b.iter().map(|g| self.push(g, t)).collect::<Result<_>>()?;
            let c = Element::new(
                t,
                pa[0]
                    .vector
                    .iter()
                    .zip(&pa[1].vector)
                    .map(|(x, y)| x.max(y).clone())
                    .collect(),
            );
            if pb.iter().all(|bj| bj.vector.iter().zip(&c.vector).all(|(x, y)| x >= y)) {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }
}

/// Integer function on the floors of the towers of one partition level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerFunction<T: Scalar> {
    level: usize,
    values: Vec<Vec<T>>,
}

fn shape(kr: &KRLevel) -> Result<Vec<usize>> {
    kr.heights
        .iter()
        .map(|h| {
            h.to_usize()
                .ok_or_else(|| Error::InvalidTowers(format!("tower of height {h} is too tall to tabulate")))
        })
        .collect()
}

impl<T: Scalar> TowerFunction<T> {
    /// `values[k][j]` is the value on floor `j` of tower `k`.
    pub fn new(kr: &KRLevel, level: usize, values: Vec<Vec<T>>) -> Result<Self> {
        let heights = shape(kr)?;
        if values.len() != heights.len() || values.iter().zip(&heights).any(|(v, &h)| v.len() != h) {
            return Err(Error::DimensionMismatch(
                "tower function does not match the tower heights".into(),
            ));
        }
        Ok(TowerFunction { level, values })
    }

    pub fn constant(kr: &KRLevel, level: usize, c: T) -> Result<Self> {
        let values = shape(kr)?.into_iter().map(|h| vec![c.clone(); h]).collect();
        Ok(TowerFunction { level, values })
    }

    /// Indicator functions of single floors, tower by tower.
    pub fn basis(kr: &KRLevel, level: usize) -> Result<Vec<Self>> {
        let heights = shape(kr)?;
        let mut out = Vec::new();
        for (k, &h) in heights.iter().enumerate() {
            for j in 0..h {
                let mut values: Vec<Vec<T>> = heights.iter().map(|&h| vec![T::zero(); h]).collect();
                values[k][j] = T::one();
                out.push(TowerFunction { level, values });
            }
        }
        Ok(out)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn values(&self) -> &[Vec<T>] {
        &self.values
    }

    /// The same function on the finer partition one level down: each floor
    /// of a level `n + 1` tower inherits the value of the floor it refines.
    pub fn lift(&self, next: &KRLevel) -> Result<Self> {
        let mut values = Vec::with_capacity(next.words.len());
        for word in &next.words {
            let mut floors = Vec::new();
            for &i in word {
                let tower = self
                    .values
                    .get(i)
                    .ok_or_else(|| Error::InvalidTowers(format!("traversal word names missing tower {i}")))?;
                floors.extend(tower.iter().cloned());
            }
            values.push(floors);
        }
        TowerFunction::new(next, self.level + 1, values)
    }
}

/// Tower sums `(γ_n f)_k = Σ_j f(k, j)`.
pub fn gamma<T: Scalar>(f: &TowerFunction<T>) -> Element<T> {
    Element::new(
        f.level,
        f.values
            .iter()
            .map(|t| t.iter().fold(T::zero(), |acc, x| acc + x.clone()))
            .collect(),
    )
}

/// Checks `γ_{n+1}(lift f) = Q_{n+1} γ_n(f)` on the floor basis of level `n`,
/// with `Q_{n+1}` the incidence matrix of the diagram built from `seq`.
pub fn gamma_intertwine_check(seq: &NestedKRSequence, n: usize) -> Result<bool> {
    if n >= seq.depth() {
        return Err(Error::LevelOutOfRange {
            level: n + 1,
            depth: seq.depth(),
        });
    }
    let od = diagram_from_nested(seq)?;
    let q: Matrix<BigInt> = od.base().incidence_matrix(n + 1)?;
    for f in TowerFunction::<BigInt>::basis(&seq.levels[n], n)? {
        let lifted = f.lift(&seq.levels[n + 1])?;
        if gamma(&lifted).vector != q.mul_vec(&gamma(&f).vector)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `γ_n` maps the level-`n` tower functions onto `Z^{|V_n|}` with
/// kernel the null-sum functions: the base floors map to the unit vectors,
/// the matrix of `γ_n` has full row rank, and the differences of floors
/// within a tower (which span the null-sum functions over `Z`) map to zero
/// and are as many as the nullity.
pub fn gamma_identification_check(seq: &NestedKRSequence, n: usize) -> Result<bool> {
    let kr = seq.levels.get(n).ok_or(Error::LevelOutOfRange {
        level: n,
        depth: seq.depth(),
    })?;
    let heights = shape(kr)?;
    let basis = TowerFunction::<BigInt>::basis(kr, n)?;
    let images: Vec<Vec<BigInt>> = basis.iter().map(|f| gamma(f).vector).collect();
    let k = heights.len();
    let g = Matrix::from_fn(k, images.len(), |i, j| images[j][i].clone());
    if g.rank() != k {
        return Ok(false);
    }
    let mut offset = 0;
    let mut null_family = 0;
    for (t, &h) in heights.iter().enumerate() {
        let mut unit = vec![BigInt::zero(); k];
        unit[t] = BigInt::from(1);
        if images[offset] != unit {
            return Ok(false);
        }
        for j in 1..h {
            let diff: Vec<BigInt> = images[offset + j]
                .iter()
                .zip(&images[offset])
                .map(|(x, y)| x - y)
                .collect();
            if diff.iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            null_family += 1;
        }
        offset += h;
    }
    Ok(null_family == images.len() - k)
}

/// For `f` with null tower sums, `g` with `f = g - g∘T` on every floor,
/// `g(k, 0) = 0` and `g(k, j) = -Σ_{i<j} f(k, i)`. Here `T` moves each floor
/// up one step and sends top floors to base floors.
pub fn coboundary_witness<T: Scalar>(f: &TowerFunction<T>) -> Result<TowerFunction<T>> {
    let mut values = Vec::with_capacity(f.values.len());
    for (k, tower) in f.values.iter().enumerate() {
        let mut acc = T::zero();
        let mut g = Vec::with_capacity(tower.len());
        for x in tower {
            g.push(-acc.clone());
            acc = acc + x.clone();
        }
        if !acc.is_zero() {
            return Err(Error::NonzeroTowerSum {
                tower: k,
                sum: acc.to_string(),
            });
        }
        values.push(g);
    }
    Ok(TowerFunction { level: f.level, values })
}

/// Whether `f = g - g∘T` floor by floor, top floors wrapping to a base floor
/// where `g` vanishes.
pub fn is_coboundary_of<T: Scalar>(f: &TowerFunction<T>, g: &TowerFunction<T>) -> bool {
    f.level == g.level
        && f.values.len() == g.values.len()
        && f.values.iter().zip(&g.values).all(|(ft, gt)| {
            ft.len() == gt.len()
                && gt.first().is_none_or(Zero::is_zero)
                && (0..ft.len()).all(|j| {
                    let above = gt.get(j + 1).cloned().unwrap_or_else(T::zero);
                    ft[j] == gt[j].clone() - above
                })
        })
}
