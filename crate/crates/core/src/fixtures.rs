//! Small diagrams used across tests and examples.

use crate::diagram::BratteliDiagram;
use crate::ordered::StationaryOrderedDiagram;

fn stationary(alphabet: &[&str], top: &str, incoming: &[(&str, &str)]) -> StationaryOrderedDiagram {
    StationaryOrderedDiagram::from_words(alphabet, top, incoming).expect("fixture is valid")
}

/// Dyadic odometer: one vertex per level, two edges everywhere.
pub fn odometer() -> StationaryOrderedDiagram {
    stationary(&["a"], "aa", &[("a", "aa")])
}

/// Dyadic odometer with a single top edge.
pub fn odometer_single_top() -> StationaryOrderedDiagram {
    stationary(&["a"], "a", &[("a", "aa")])
}

/// Unordered dyadic odometer truncated at `depth`.
pub fn odometer_explicit(depth: usize) -> BratteliDiagram {
    odometer().to_ordered(depth).into_base()
}

/// Fibonacci substitution `a -> ab, b -> a`.
pub fn fibonacci() -> StationaryOrderedDiagram {
    stationary(&["a", "b"], "ab", &[("a", "ab"), ("b", "a")])
}

/// Primitive, with two maximal and two minimal paths.
pub fn two_max_paths() -> StationaryOrderedDiagram {
    stationary(&["a", "b"], "ab", &[("a", "ba"), ("b", "ab")])
}

/// Properly ordered diagram with the Fibonacci-like matrix `[[2,1],[1,1]]`.
pub fn proper_fibonacci() -> StationaryOrderedDiagram {
    stationary(&["a", "b"], "ab", &[("a", "aab"), ("b", "ab")])
}

/// Properly ordered, aperiodic, with a multiple top edge.
pub fn sturmian() -> StationaryOrderedDiagram {
    stationary(&["a", "b"], "aab", &[("a", "aab"), ("b", "ab")])
}
