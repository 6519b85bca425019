//! Removing multiple top edges from a properly ordered stationary diagram.
//!
//! The diagram is first telescoped to a power `p` of its matrix with every
//! row sum at least the largest top multiplicity. One new vertex `w_t` per
//! top edge `t` is then inserted between consecutive old levels. The word
//! `τ(a) = σ^p(a)` is cut into one block per top edge into `a`, and `w_t`
//! receives the block assigned to `t`; each old vertex `a` receives single
//! edges from the `w_t` with `T[t] = a`. Even levels of the result recover
//! the telescoped diagram and odd levels a stationary diagram over the top
//! edges whose top edges are single.

use crate::diagram::{find_schedule, TelescopeSchedule};
use crate::error::Result;
use crate::iso::ordered_isomorphic;
use crate::ordered::{OrderedDiagram, StationaryOrderedDiagram, ROOT_LABEL};

/// Old levels rendered in the default witness.
pub const WITNESS_STEPS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSplit {
    /// Exponent of the preliminary telescoping.
    pub power: usize,
    /// `blocks[t]` is the part of `τ(T[t])` assigned to top edge `t`.
    pub blocks: Vec<Vec<usize>>,
    pub split: StationaryOrderedDiagram,
    source: StationaryOrderedDiagram,
}

impl SymbolSplit {
    pub fn new(sd: &StationaryOrderedDiagram) -> Result<Self> {
        sd.properly_ordered().into_result()?;
        let m = sd.max_top_multiplicity();
        let mut power = 1;
        let mut tau = sd.power(1)?;
        while tau.incoming_words().iter().any(|w| w.len() < m) {
            power += 1;
            tau = sd.power(power)?;
        }
        let top = sd.top();
        let edges_into: Vec<Vec<usize>> = (0..sd.symbol_count())
            .map(|a| (0..top.len()).filter(|&t| top[t] == a).collect())
            .collect();
        let mut blocks = vec![Vec::new(); top.len()];
        for (a, ts) in edges_into.iter().enumerate() {
            let word = tau.incoming_word(a);
            for (j, &t) in ts.iter().enumerate() {
                blocks[t] = if j + 1 < ts.len() {
                    vec![word[j]]
                } else {
                    word[j..].to_vec()
                };
            }
        }
        let alphabet: Vec<String> = top
            .iter()
            .enumerate()
            .map(|(t, &a)| {
                let j = edges_into[a].iter().position(|&s| s == t).expect("t enters a");
                format!("{}#{}", sd.alphabet()[a], j)
            })
            .collect();
        let incoming = blocks
            .iter()
            .map(|b| b.iter().flat_map(|&s| edges_into[s].iter().copied()).collect())
            .collect();
        let split = StationaryOrderedDiagram::new(alphabet, (0..top.len()).collect(), incoming)?;
        Ok(SymbolSplit {
            power,
            blocks,
            split,
            source: sd.clone(),
        })
    }

    /// Interleaved diagram over `steps` old levels: `2 * steps` edge levels
    /// alternating top-edge vertices (odd levels) and symbols (even levels).
    pub fn witness(&self, steps: usize) -> OrderedDiagram {
        let sd = &self.source;
        let top = sd.top();
        let mut levels = vec![vec![ROOT_LABEL.to_string()]];
        let mut sources: Vec<Vec<Vec<usize>>> = Vec::new();
        let into_symbol: Vec<Vec<usize>> = (0..sd.symbol_count())
            .map(|a| (0..top.len()).filter(|&t| top[t] == a).collect())
            .collect();
        for step in 0..steps {
            levels.push(self.split.alphabet().to_vec());
            sources.push(if step == 0 {
                vec![vec![0]; top.len()]
            } else {
                self.blocks.clone()
            });
            levels.push(sd.alphabet().to_vec());
            sources.push(into_symbol.clone());
        }
        OrderedDiagram::from_ordered_sources(levels, sources).expect("witness is valid")
    }

    /// Checks single top edges, proper ordering and both witness readings.
    pub fn verify(&self, steps: usize) -> bool {
        let w = self.witness(steps);
        let even = self.source.to_ordered(1 + (steps - 1) * self.power);
        let odd = self.split.to_ordered(steps);
        self.split.has_single_top_edges()
            && self.split.properly_ordered().is_yes()
            && crate::diagram::verify_interleaving_witness(odd.base(), even.base(), w.base())
            && verify_ordered_interleaving_witness(&odd, &even, &w)
    }
}

/// Splits multiple top edges; returns the new diagram and a witness with
/// [`WITNESS_STEPS`] old levels.
pub fn symbol_split(sd: &StationaryOrderedDiagram) -> Result<(StationaryOrderedDiagram, OrderedDiagram)> {
    let s = SymbolSplit::new(sd)?;
    let w = s.witness(WITNESS_STEPS);
    Ok((s.split, w))
}

/// Whether `t` is isomorphic, with orders, to an induced-order telescoping of `d`.
pub fn is_ordered_telescoping_of(t: &OrderedDiagram, d: &OrderedDiagram) -> bool {
    find_schedule(t.base(), d.base(), &|sched: &TelescopeSchedule| {
        d.induced_order_telescope(sched)
            .map(|cand| ordered_isomorphic(&cand, t))
            .unwrap_or(false)
    })
    .is_some()
}

/// Ordered version of the interleaving test: the odd and even telescopings
/// of `w`, with induced orders, are ordered telescopings of `d1` and `d2`
/// in either assignment.
pub fn verify_ordered_interleaving_witness(d1: &OrderedDiagram, d2: &OrderedDiagram, w: &OrderedDiagram) -> bool {
    let read = |sched: TelescopeSchedule| w.induced_order_telescope(&sched).ok();
    let (Some(odd), Some(even)) = (
        read(TelescopeSchedule::odd(w.depth())),
        read(TelescopeSchedule::even(w.depth())),
    ) else {
        return false;
    };
    (is_ordered_telescoping_of(&odd, d1) && is_ordered_telescoping_of(&even, d2))
        || (is_ordered_telescoping_of(&odd, d2) && is_ordered_telescoping_of(&even, d1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::verify_interleaving_witness;
    use crate::error::Error;
    use crate::fixtures;
    use crate::vershik::orbit_sequence;

    fn stationary(top: &str, rules: &[(&str, &str)]) -> StationaryOrderedDiagram {
        let alphabet: Vec<&str> = rules.iter().map(|r| r.0).collect();
        StationaryOrderedDiagram::from_words(&alphabet, top, rules).unwrap()
    }

    #[test]
    fn odometer_split() {
        let sd = fixtures::odometer();
        let s = SymbolSplit::new(&sd).unwrap();
        assert_eq!(s.power, 1);
        assert_eq!(s.split.symbol_count(), 2);
        assert!(s.split.has_single_top_edges());
        assert!(s.verify(3));
        let (split, w) = symbol_split(&sd).unwrap();
        assert_eq!(split, s.split);
        assert_eq!(w.depth(), 2 * WITNESS_STEPS);
    }

    #[test]
    fn odometer_triple_top() {
        let sd = stationary("aaa", &[("a", "aa")]);
        let s = SymbolSplit::new(&sd).unwrap();
        assert_eq!(s.power, 2);
        assert_eq!(s.blocks, vec![vec![0], vec![0], vec![0, 0]]);
        assert!(s.verify(3));
    }

    #[test]
    fn single_top_edges_need_no_telescoping() {
        let sd = fixtures::proper_fibonacci();
        let s = SymbolSplit::new(&sd).unwrap();
        assert_eq!(s.power, 1);
        assert_eq!(s.split.incoming_words(), sd.incoming_words());
        assert!(s.verify(3));
    }

    #[test]
    fn sturmian_split_keeps_orbit() {
        // The odd reading starts one step below the even one, so the split
        // orbit is the original orbit read through τ-blocks: compare the
        // original orbit with the images of the split orbit under t -> T[t].
        let sd = fixtures::sturmian();
        let s = SymbolSplit::new(&sd).unwrap();
        assert!(s.verify(3));
        let orig = orbit_sequence(&sd, 1000).unwrap();
        let split: Vec<usize> = orbit_sequence(&s.split, 1000)
            .unwrap()
            .into_iter()
            .map(|t| sd.top()[t])
            .collect();
        assert_eq!(orig, split);
    }

    #[test]
    fn improper_input_rejected() {
        assert!(matches!(
            SymbolSplit::new(&fixtures::fibonacci()),
            Err(Error::NotProperlyOrdered(_))
        ));
        assert!(symbol_split(&fixtures::two_max_paths()).is_err());
    }

    #[test]
    fn unrelated_witness_fails() {
        let s = SymbolSplit::new(&fixtures::odometer()).unwrap();
        let other = fixtures::proper_fibonacci().to_ordered(3);
        let w = s.witness(3);
        assert!(!verify_ordered_interleaving_witness(&other, &s.split.to_ordered(3), &w));
        assert!(!verify_interleaving_witness(
            other.base(),
            s.split.to_ordered(3).base(),
            w.base()
        ));
    }
}
