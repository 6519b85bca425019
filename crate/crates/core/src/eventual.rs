//! Ordered diagrams made of an explicit head followed by a stationary tail.
//!
//! Finite changes of a stationary diagram land here: the first `H` levels are
//! arbitrary and every level below `H` repeats the tail order data.

use crate::error::{Error, Result};
use crate::ordered::{self, OrderedDiagram, OrderedLevels, ProperOrdering, StationaryOrderedDiagram, StationaryTail};
use crate::IncidenceMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventuallyStationary {
    head: OrderedDiagram,
    tail: Vec<Vec<usize>>,
}

impl EventuallyStationary {
    /// `tail[a]` lists the ordered sources of the edges into vertex `a` on
    /// every level below the head; the tail symbols are the head's last level.
    pub fn new(head: OrderedDiagram, tail: Vec<Vec<usize>>) -> Result<Self> {
        let h = head.depth();
        if h == 0 {
            return Err(Error::InvalidDiagram(
                "head must contain at least one edge level".into(),
            ));
        }
        let k = head.base().level_size(h);
        if tail.len() != k {
            return Err(Error::InvalidDiagram(format!(
                "tail has {} words, head ends with {k} vertices",
                tail.len()
            )));
        }
        if tail.iter().any(Vec::is_empty) {
            return Err(Error::InvalidDiagram("empty tail word (r^-1(v) empty)".into()));
        }
        if tail.iter().flatten().any(|&a| a >= k) {
            return Err(Error::InvalidDiagram("tail word refers to an unknown vertex".into()));
        }
        for a in 0..k {
            if !tail.iter().flatten().any(|&b| b == a) {
                return Err(Error::InvalidDiagram(format!(
                    "tail vertex {} is never a source (s^-1(v) empty)",
                    head.base().labels(h)[a]
                )));
            }
        }
        Ok(EventuallyStationary { head, tail })
    }

    pub fn head(&self) -> &OrderedDiagram {
        &self.head
    }

    pub fn tail(&self) -> &[Vec<usize>] {
        &self.tail
    }

    pub fn alphabet(&self) -> &[String] {
        self.head.base().labels(self.head.depth())
    }

    pub fn stationary_matrix(&self) -> IncidenceMatrix {
        ordered::stationary_matrix(&self.tail)
    }

    /// Explicit truncation with `depth` edge levels.
    pub fn to_ordered(&self, depth: usize) -> OrderedDiagram {
        let h = self.head.depth();
        if depth <= h {
            return self.head.truncate(depth).expect("within head");
        }
        self.head
            .extend_stationary(depth - h, &self.tail)
            .expect("head and tail are valid")
    }

    pub fn properly_ordered(&self) -> ProperOrdering {
        ordered::proper_ordering(&self.tail)
    }

    /// Replaces the first `head.depth()` levels, keeping the tail.
    pub(crate) fn with_head(&self, head: OrderedDiagram) -> Result<Self> {
        Self::new(head, self.tail.clone())
    }
}

impl From<&StationaryOrderedDiagram> for EventuallyStationary {
    fn from(sd: &StationaryOrderedDiagram) -> Self {
        EventuallyStationary {
            head: sd.to_ordered(1),
            tail: sd.incoming_words().to_vec(),
        }
    }
}

impl OrderedLevels for EventuallyStationary {
    fn depth(&self) -> Option<usize> {
        None
    }

    fn level_size(&self, level: usize) -> usize {
        if level <= self.head.depth() {
            self.head.base().level_size(level)
        } else {
            self.tail.len()
        }
    }

    fn vertex_label(&self, level: usize, v: usize) -> &str {
        if level <= self.head.depth() {
            &self.head.base().labels(level)[v]
        } else {
            &self.alphabet()[v]
        }
    }

    fn in_degree(&self, level: usize, v: usize) -> usize {
        if level <= self.head.depth() {
            OrderedLevels::in_degree(&self.head, level, v)
        } else {
            self.tail[v].len()
        }
    }

    fn in_source(&self, level: usize, v: usize, ord: usize) -> usize {
        if level <= self.head.depth() {
            OrderedLevels::in_source(&self.head, level, v, ord)
        } else {
            self.tail[v][ord]
        }
    }
}

impl StationaryTail for EventuallyStationary {
    fn head_depth(&self) -> usize {
        self.head.depth()
    }

    fn tail_words(&self) -> &[Vec<usize>] {
        &self.tail
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::ordered_isomorphic;

    #[test]
    fn stationary_conversion_expands_identically() {
        let sd = fixtures::fibonacci();
        let ev = EventuallyStationary::from(&sd);
        assert!(ordered_isomorphic(&ev.to_ordered(5), &sd.to_ordered(5)));
        assert_eq!(ev.to_ordered(5), sd.to_ordered(5));
        assert_eq!(ev.properly_ordered(), sd.properly_ordered());
    }

    #[test]
    fn tail_must_match_head() {
        let head = fixtures::fibonacci().to_ordered(1);
        assert!(EventuallyStationary::new(head.clone(), vec![vec![0]]).is_err());
        assert!(EventuallyStationary::new(head.clone(), vec![vec![0], vec![]]).is_err());
        assert!(EventuallyStationary::new(head, vec![vec![0], vec![0]]).is_err());
    }
}
