//! Kakutani-Rohlin partitions recorded as tower traversal data.
//!
//! Level `n` of a nested sequence lists the towers of the `n`-th partition by
//! height, and for each tower the ordered list of level `n - 1` towers it
//! crosses on its way up. Towers correspond to vertices and traversal words
//! to ordered incoming edges.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::ordered_isomorphic;
use crate::ordered::{explicit_truncation, OrderedDiagram, OrderedLevels, ROOT_LABEL};
use crate::vershik::{tower_heights, AdicPath, PathPrefix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KRLevel {
    #[serde(with = "big_list")]
    pub heights: Vec<BigInt>,
    pub words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedKRSequence {
    pub levels: Vec<KRLevel>,
}

impl NestedKRSequence {
    pub fn new(levels: Vec<KRLevel>) -> Result<Self> {
        let seq = NestedKRSequence { levels };
        seq.validate()?;
        Ok(seq)
    }

    /// Number of levels below the trivial partition.
    pub fn depth(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTowers(msg));
        let Some(first) = self.levels.first() else {
            return bad("missing level 0".into());
        };
        if first.heights != [BigInt::one()] || first.words != [Vec::<usize>::new()] {
            return bad("level 0 must be a single tower of height 1 with an empty word".into());
        }
        for (n, pair) in self.levels.windows(2).enumerate() {
            let (prev, cur) = (&pair[0], &pair[1]);
            let n = n + 1;
            if cur.heights.len() != cur.words.len() {
                return bad(format!(
                    "level {n}: {} heights for {} words",
                    cur.heights.len(),
                    cur.words.len()
                ));
            }
            if cur.words.is_empty() {
                return bad(format!("level {n} has no towers"));
            }
            let mut seen = vec![false; prev.heights.len()];
            for (k, (h, word)) in cur.heights.iter().zip(&cur.words).enumerate() {
                if word.is_empty() {
                    return bad(format!("level {n}, tower {k}: empty traversal word"));
                }
                let mut sum = BigInt::zero();
                for &i in word {
                    let Some(hi) = prev.heights.get(i) else {
                        return bad(format!("level {n}, tower {k}: no tower {i} at level {}", n - 1));
                    };
                    seen[i] = true;
                    sum += hi;
                }
                if !h.is_positive() || *h != sum {
                    return bad(format!("level {n}, tower {k}: height {h} but traversal sums to {sum}"));
                }
            }
            if let Some(i) = seen.iter().position(|s| !s) {
                return bad(format!("level {}: tower {i} is never traversed", n - 1));
            }
        }
        Ok(())
    }
}

/// Ordered diagram whose level `n` vertices are the towers of `P_n`; the
/// edges into a tower follow its traversal word.
pub fn diagram_from_nested(seq: &NestedKRSequence) -> Result<OrderedDiagram> {
    seq.validate()?;
    let mut levels = vec![vec![ROOT_LABEL.to_string()]];
    levels.extend(
        seq.levels[1..]
            .iter()
            .map(|l| (0..l.words.len()).map(|k| k.to_string()).collect()),
    );
    let sources = seq.levels[1..].iter().map(|l| l.words.clone()).collect();
    OrderedDiagram::from_ordered_sources(levels, sources)
}

/// Canonical tower data of the first `depth` levels of `d`.
pub fn nested_from_diagram<D: OrderedLevels + ?Sized>(d: &D, depth: usize) -> Result<NestedKRSequence> {
    if !d.has_level(depth) {
        return Err(Error::LevelOutOfRange {
            level: depth,
            depth: d.depth().unwrap_or(usize::MAX),
        });
    }
    let mut levels = vec![KRLevel {
        heights: vec![BigInt::one()],
        words: vec![Vec::new()],
    }];
    for n in 1..=depth {
        let words = (0..d.level_size(n))
            .map(|v| (0..d.in_degree(n, v)).map(|k| d.in_source(n, v, k)).collect())
            .collect();
        levels.push(KRLevel {
            heights: tower_heights(d, n),
            words,
        });
    }
    Ok(NestedKRSequence { levels })
}

/// Whether towers to diagram and back recovers `d` up to ordered isomorphism.
pub fn roundtrip_check<D: OrderedLevels + ?Sized>(d: &D, depth: usize) -> bool {
    let (Ok(seq), Ok(trunc)) = (nested_from_diagram(d, depth), explicit_truncation(d, depth)) else {
        return false;
    };
    diagram_from_nested(&seq).is_ok_and(|back| ordered_isomorphic(&back, &trunc))
}

/// Tower and floor of `P_n` containing the path with this prefix.
///
/// The floor is the rank of the prefix among all prefixes into the same
/// vertex: each edge contributes the heights of the towers entered through
/// smaller edges.
pub fn locate_prefix<D: OrderedLevels + ?Sized>(d: &D, p: &PathPrefix) -> (usize, BigInt) {
    let mut floor = BigInt::zero();
    let mut heights = vec![BigInt::one()];
    for (i, e) in p.edges().iter().enumerate() {
        let level = i + 1;
        for k in 0..e.ord {
            floor += &heights[d.in_source(level, e.range, k)];
        }
        if level < p.len() {
            heights = tower_heights_step(d, level, &heights);
        }
    }
    (p.end().unwrap_or(0), floor)
}

fn tower_heights_step<D: OrderedLevels + ?Sized>(d: &D, level: usize, prev: &[BigInt]) -> Vec<BigInt> {
    (0..d.level_size(level))
        .map(|v| (0..d.in_degree(level, v)).fold(BigInt::zero(), |acc, k| acc + &prev[d.in_source(level, v, k)]))
        .collect()
}

pub fn locate<D: OrderedLevels + ?Sized>(d: &D, x: &AdicPath, n: usize) -> Result<(usize, BigInt)> {
    if !d.has_level(n) {
        return Err(Error::LevelOutOfRange {
            level: n,
            depth: d.depth().unwrap_or(usize::MAX),
        });
    }
    Ok(locate_prefix(d, &x.prefix(n)))
}

/// Heights serialize as JSON numbers when they fit in `u64`, else as strings.
mod big_list {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| x.to_u64().map_or_else(|| Repr::Big(x.to_string()), Repr::Small))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Repr::Small(x) => Ok(BigInt::from(x)),
                Repr::Big(s) => s.parse().map_err(|_| D::Error::custom(format!("bad height {s:?}"))),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::vershik::{minimal_path, tower, vershik_step, OrbitStream};

    /// Traversal words read off the enumerated prefix list: walk the floors
    /// of the tower and record the source of the last edge once per block of
    /// that source tower's height.
    fn words_by_grouping<D: OrderedLevels>(d: &D, n: usize) -> Vec<Vec<usize>> {
        (0..d.level_size(n))
            .map(|v| {
                let t = tower(d, n, v).unwrap();
                let mut word = Vec::new();
                let mut i = 0;
                while i < t.height() {
                    let s = t.floors[i].edges()[n - 1].source(d, n);
                    word.push(s);
                    i += if n == 1 {
                        1
                    } else {
                        tower(d, n - 1, s).unwrap().height()
                    };
                }
                word
            })
            .collect()
    }

    #[test]
    fn odometer_towers() {
        let seq = nested_from_diagram(&fixtures::odometer_single_top(), 3).unwrap();
        let heights: Vec<String> = seq.levels.iter().map(|l| l.heights[0].to_string()).collect();
        assert_eq!(heights, ["1", "1", "2", "4"]);
        assert!(seq.levels[2..].iter().all(|l| l.words == [vec![0, 0]]));
        let seq = nested_from_diagram(&fixtures::odometer(), 3).unwrap();
        let heights: Vec<String> = seq.levels.iter().map(|l| l.heights[0].to_string()).collect();
        assert_eq!(heights, ["1", "2", "4", "8"]);
    }

    #[test]
    fn words_match_prefix_grouping() {
        for sd in [fixtures::fibonacci(), fixtures::sturmian(), fixtures::odometer()] {
            let seq = nested_from_diagram(&sd, 5).unwrap();
            for n in 1..=5 {
                assert_eq!(seq.levels[n].words, words_by_grouping(&sd, n));
            }
        }
    }

    #[test]
    fn fibonacci_words_and_roundtrip() {
        let sd = fixtures::fibonacci();
        let seq = nested_from_diagram(&sd, 3).unwrap();
        assert_eq!(seq.levels[2].words, vec![vec![0, 1], vec![0]]);
        assert!(roundtrip_check(&sd, 6));
        assert!(roundtrip_check(&fixtures::odometer(), 6));
        let od = diagram_from_nested(&seq).unwrap();
        assert!(ordered_isomorphic(&od, &sd.to_ordered(3)));
    }

    #[test]
    fn depth_zero() {
        let seq = nested_from_diagram(&fixtures::fibonacci(), 0).unwrap();
        assert_eq!(seq.depth(), 0);
        assert_eq!(diagram_from_nested(&seq).unwrap().depth(), 0);
    }

    #[test]
    fn invalid_sequences() {
        let l0 = KRLevel {
            heights: vec![BigInt::one()],
            words: vec![vec![]],
        };
        let l1 = |h: u32, w: Vec<usize>| KRLevel {
            heights: vec![BigInt::from(h)],
            words: vec![w],
        };
        assert!(NestedKRSequence::new(vec![l0.clone(), l1(2, vec![0, 0])]).is_ok());
        assert!(NestedKRSequence::new(vec![l0.clone(), l1(3, vec![0, 0])]).is_err());
        assert!(NestedKRSequence::new(vec![l0.clone(), l1(1, vec![1])]).is_err());
        assert!(NestedKRSequence::new(vec![l1(2, vec![0, 0])]).is_err());
        let orphan = KRLevel {
            heights: vec![BigInt::from(2), BigInt::from(1)],
            words: vec![vec![0, 0], vec![0]],
        };
        let next = KRLevel {
            heights: vec![BigInt::from(2)],
            words: vec![vec![0]],
        };
        assert!(NestedKRSequence::new(vec![l0, orphan, next]).is_err());
    }

    #[test]
    fn json_shape() {
        let seq = nested_from_diagram(&fixtures::odometer_single_top(), 2).unwrap();
        let text = serde_json::to_string(&seq).unwrap();
        assert_eq!(
            text,
            r#"{"levels":[{"heights":[1],"words":[[]]},{"heights":[1],"words":[[0]]},{"heights":[2],"words":[[0,0]]}]}"#
        );
        let back: NestedKRSequence = serde_json::from_str(&text).unwrap();
        assert_eq!(back, seq);
        let big: KRLevel =
            serde_json::from_str(r#"{"heights":["123456789012345678901234567890"],"words":[[0]]}"#).unwrap();
        assert_eq!(big.heights[0].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn locate_follows_orbit() {
        let sd = fixtures::odometer();
        let x = minimal_path(&sd).unwrap();
        let x2 = vershik_step(&sd, &vershik_step(&sd, &x).unwrap()).unwrap();
        assert_eq!(locate(&sd, &x2, 2).unwrap(), (0, BigInt::from(2)));
        assert_eq!(locate(&sd, &x, 4).unwrap().1, BigInt::zero());

        let sd = fixtures::sturmian();
        let mut stream = OrbitStream::new(&sd).unwrap();
        for _ in 0..300 {
            for n in 1..=5 {
                let p = stream.current_prefix(n);
                let (k, j) = locate_prefix(&sd, &p);
                let t = tower(&sd, n, k).unwrap();
                assert_eq!(t.floors[usize::try_from(j).unwrap()], p);
            }
            stream.step();
        }
    }
}
