//! Text formats: diagram and substitution JSON, and DOT rendering.
//!
//! Diagrams are JSON objects tagged by `"kind"`:
//!
//! ```json
//! {"kind": "explicit",
//!  "levels": [["root"], ["a", "b"]],
//!  "edges": [[{"s": "root", "r": "a", "ord": 0}, {"s": "root", "r": "b", "ord": 0}]]}
//! {"kind": "stationary", "alphabet": ["a", "b"], "top": "ab",
//!  "incoming": {"a": "ab", "b": "a"}}
//! ```
//!
//! `ord` is either present on every edge or null on every edge. Words may be
//! strings of single-character symbols or arrays of symbols.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagram::BratteliDiagram;
use crate::error::{Error, Result};
use crate::ordered::{index_of, parse_word, OrderedDiagram, OrderedLevels, StationaryOrderedDiagram, Substitution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedDiagram {
    Explicit(BratteliDiagram),
    Ordered(OrderedDiagram),
    Stationary(StationaryOrderedDiagram),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum DiagramDoc {
    Explicit {
        levels: Vec<Vec<String>>,
        edges: Vec<Vec<EdgeDoc>>,
    },
    Stationary {
        alphabet: Vec<String>,
        top: WordDoc,
        incoming: BTreeMap<String, WordDoc>,
    },
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    s: String,
    r: String,
    #[serde(default)]
    ord: Option<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WordDoc {
    Text(String),
    Symbols(Vec<String>),
}

#[derive(Serialize, Deserialize)]
struct SubstitutionDoc {
    alphabet: Vec<String>,
    rules: BTreeMap<String, WordDoc>,
}

fn json_error(e: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Syntax | Category::Eof => Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        },
        Category::Data | Category::Io => Error::Format(e.to_string()),
    }
}

fn read_word(alphabet: &[String], w: &WordDoc) -> Result<Vec<usize>> {
    match w {
        WordDoc::Text(s) => parse_word(alphabet, s),
        WordDoc::Symbols(v) => v.iter().map(|s| index_of(alphabet, s)).collect(),
    }
}

fn write_word(alphabet: &[String], w: &[usize]) -> WordDoc {
    if alphabet.iter().all(|a| a.chars().count() == 1) {
        WordDoc::Text(w.iter().map(|&a| alphabet[a].as_str()).collect())
    } else {
        WordDoc::Symbols(w.iter().map(|&a| alphabet[a].clone()).collect())
    }
}

pub fn parse_diagram(text: &str) -> Result<ParsedDiagram> {
    match serde_json::from_str::<DiagramDoc>(text).map_err(json_error)? {
        DiagramDoc::Explicit { levels, edges } => parse_explicit(levels, edges),
        DiagramDoc::Stationary {
            alphabet,
            top,
            incoming,
        } => {
            let top = read_word(&alphabet, &top)?;
            let mut words = vec![None; alphabet.len()];
            for (sym, w) in &incoming {
                words[index_of(&alphabet, sym)?] = Some(read_word(&alphabet, w)?);
            }
            let words = words
                .into_iter()
                .enumerate()
                .map(|(a, w)| w.ok_or_else(|| Error::InvalidDiagram(format!("no incoming word for {}", alphabet[a]))))
                .collect::<Result<_>>()?;
            Ok(ParsedDiagram::Stationary(StationaryOrderedDiagram::new(
                alphabet, top, words,
            )?))
        }
    }
}

fn parse_explicit(levels: Vec<Vec<String>>, edges: Vec<Vec<EdgeDoc>>) -> Result<ParsedDiagram> {
    let lookup = |level: usize, label: &str| -> Result<usize> {
        let labels = levels
            .get(level)
            .ok_or_else(|| Error::InvalidDiagram(format!("edges reach missing level {level}")))?;
        let mut hits = labels.iter().enumerate().filter(|(_, l)| *l == label);
        match (hits.next(), hits.next()) {
            (Some((i, _)), None) => Ok(i),
            (None, _) => Err(Error::InvalidDiagram(format!("no vertex {label:?} on level {level}"))),
            (Some(_), Some(_)) => Err(Error::InvalidDiagram(format!(
                "label {label:?} repeated on level {level}"
            ))),
        }
    };
    let with_ord = edges.iter().flatten().filter(|e| e.ord.is_some()).count();
    let total = edges.iter().map(Vec::len).sum::<usize>();
    if with_ord != 0 && with_ord != total {
        return Err(Error::InvalidOrder(
            "either every edge or no edge carries an order index".into(),
        ));
    }
    let mut lists = Vec::with_capacity(edges.len());
    let mut order = Vec::with_capacity(edges.len());
    for (i, level) in edges.iter().enumerate() {
        let mut list = Vec::with_capacity(level.len());
        for e in level {
            list.push((lookup(i, &e.s)?, lookup(i + 1, &e.r)?));
        }
        lists.push(list);
        order.push(level.iter().map(|e| e.ord.unwrap_or(0)).collect::<Vec<_>>());
    }
    let base = BratteliDiagram::from_edge_lists(levels, lists)?;
    base.validate().into_result()?;
    if total > 0 && with_ord == total {
        Ok(ParsedDiagram::Ordered(OrderedDiagram::new(base, order)?))
    } else if total == 0 && !edges.is_empty() {
        Err(Error::InvalidDiagram("edge levels are empty".into()))
    } else {
        Ok(ParsedDiagram::Explicit(base))
    }
}

fn explicit_doc(d: &BratteliDiagram, order: Option<&[Vec<usize>]>) -> DiagramDoc {
    let edges = (1..=d.depth())
        .map(|n| {
            d.edges(n)
                .iter()
                .enumerate()
                .map(|(p, e)| EdgeDoc {
                    s: d.labels(n - 1)[e.source.index].clone(),
                    r: d.labels(n)[e.range.index].clone(),
                    ord: order.map(|o| o[n - 1][p]),
                })
                .collect()
        })
        .collect();
    DiagramDoc::Explicit {
        levels: d.levels().to_vec(),
        edges,
    }
}

pub fn serialize_diagram(d: &ParsedDiagram) -> String {
    let doc = match d {
        ParsedDiagram::Explicit(b) => explicit_doc(b, None),
        ParsedDiagram::Ordered(od) => explicit_doc(od.base(), Some(od.order())),
        ParsedDiagram::Stationary(sd) => DiagramDoc::Stationary {
            alphabet: sd.alphabet().to_vec(),
            top: write_word(sd.alphabet(), sd.top()),
            incoming: (0..sd.symbol_count())
                .map(|a| (sd.alphabet()[a].clone(), write_word(sd.alphabet(), sd.incoming_word(a))))
                .collect(),
        },
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn parse_substitution(text: &str) -> Result<Substitution> {
    let doc: SubstitutionDoc = serde_json::from_str(text).map_err(json_error)?;
    let mut rules = vec![None; doc.alphabet.len()];
    for (sym, w) in &doc.rules {
        rules[index_of(&doc.alphabet, sym)?] = Some(read_word(&doc.alphabet, w)?);
    }
    let rules = rules
        .into_iter()
        .enumerate()
        .map(|(a, w)| w.ok_or_else(|| Error::InvalidSubstitution(format!("no rule for {}", doc.alphabet[a]))))
        .collect::<Result<_>>()?;
    Substitution::new(doc.alphabet, rules)
}

pub fn serialize_substitution(s: &Substitution) -> String {
    let doc = SubstitutionDoc {
        alphabet: s.alphabet().to_vec(),
        rules: (0..s.alphabet().len())
            .map(|a| (s.alphabet()[a].clone(), write_word(s.alphabet(), s.rule(a))))
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_frame(out: &mut String, depth: usize, label: &dyn Fn(usize, usize) -> String, size: &dyn Fn(usize) -> usize) {
    out.push_str("digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n");
    for n in 0..=depth {
        let _ = write!(out, "  {{ rank=same;");
        for v in 0..size(n) {
            let _ = write!(out, " v{n}_{v} [label=\"{}\"];", dot_escape(&label(n, v)));
        }
        out.push_str(" }\n");
    }
}

/// DOT rendering of the first `depth` levels; edges are labelled with their
/// order index and listed per range vertex in increasing order.
pub fn export_dot_ordered<D: OrderedLevels + ?Sized>(d: &D, depth: usize) -> Result<String> {
    if !d.has_level(depth) {
        return Err(Error::LevelOutOfRange {
            level: depth,
            depth: d.depth().unwrap_or(usize::MAX),
        });
    }
    let mut out = String::new();
    dot_frame(&mut out, depth, &|n, v| d.vertex_label(n, v).to_string(), &|n| {
        d.level_size(n)
    });
    for n in 1..=depth {
        for v in 0..d.level_size(n) {
            for k in 0..d.in_degree(n, v) {
                let s = d.in_source(n, v, k);
                let _ = writeln!(out, "  v{}_{s} -> v{n}_{v} [label=\"{k}\"];", n - 1);
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// DOT rendering of an unordered diagram, edges in storage order.
pub fn export_dot(d: &BratteliDiagram, depth: usize) -> Result<String> {
    if depth > d.depth() {
        return Err(Error::LevelOutOfRange {
            level: depth,
            depth: d.depth(),
        });
    }
    let mut out = String::new();
    dot_frame(&mut out, depth, &|n, v| d.labels(n)[v].clone(), &|n| d.level_size(n));
    for n in 1..=depth {
        for e in d.edges(n) {
            let _ = writeln!(out, "  v{}_{} -> v{n}_{};", n - 1, e.source.index, e.range.index);
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Orbit text: the symbols concatenated when every symbol is one character,
/// otherwise one `length:symbol` token per step separated by spaces.
pub fn format_orbit(alphabet: &[String], orbit: &[usize]) -> String {
    if alphabet.iter().all(|a| a.chars().count() == 1) {
        orbit.iter().map(|&a| alphabet[a].as_str()).collect()
    } else {
        let tokens: Vec<String> = orbit
            .iter()
            .map(|&a| format!("{}:{}", alphabet[a].len(), alphabet[a]))
            .collect();
        tokens.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const ODOMETER: &str = r#"{"kind":"stationary","alphabet":["a"],"top":"aa","incoming":{"a":"aa"}}"#;

    #[test]
    fn stationary_literal() {
        let ParsedDiagram::Stationary(sd) = parse_diagram(ODOMETER).unwrap() else {
            panic!("expected stationary");
        };
        assert_eq!(sd, fixtures::odometer());
        assert_eq!(sd.matrix().to_string(), "[[2]]");
    }

    #[test]
    fn explicit_matches_hand_built() {
        let text = r#"{"kind":"explicit","levels":[["root"],["a","b"],["a","b"]],
            "edges":[[{"s":"root","r":"a","ord":0},{"s":"root","r":"b","ord":0}],
                     [{"s":"a","r":"a","ord":0},{"s":"b","r":"a","ord":1},{"s":"a","r":"b","ord":0}]]}"#;
        let ParsedDiagram::Ordered(od) = parse_diagram(text).unwrap() else {
            panic!("expected ordered");
        };
        assert!(crate::iso::ordered_isomorphic(
            &od,
            &fixtures::fibonacci().to_ordered(2)
        ));
        let unordered = text
            .replace("\"ord\":0", "\"ord\":null")
            .replace("\"ord\":1", "\"ord\":null");
        assert!(matches!(parse_diagram(&unordered).unwrap(), ParsedDiagram::Explicit(_)));
    }

    #[test]
    fn semantic_errors() {
        let gap = r#"{"kind":"explicit","levels":[["root"],["a"]],
            "edges":[[{"s":"root","r":"a","ord":0},{"s":"root","r":"a","ord":2}]]}"#;
        assert!(matches!(parse_diagram(gap), Err(Error::InvalidOrder(_))));
        let mixed = r#"{"kind":"explicit","levels":[["root"],["a"]],
            "edges":[[{"s":"root","r":"a","ord":0},{"s":"root","r":"a"}]]}"#;
        assert!(matches!(parse_diagram(mixed), Err(Error::InvalidOrder(_))));
        let unknown = r#"{"kind":"explicit","levels":[["root"],["a"]],"edges":[[{"s":"root","r":"z"}]]}"#;
        assert!(matches!(parse_diagram(unknown), Err(Error::InvalidDiagram(_))));
        let stranded = r#"{"kind":"explicit","levels":[["root"],["a","b"]],"edges":[[{"s":"root","r":"a"}]]}"#;
        assert!(parse_diagram(stranded).is_err());
        let missing = r#"{"kind":"stationary","alphabet":["a","b"],"top":"ab","incoming":{"a":"ab"}}"#;
        assert!(parse_diagram(missing).is_err());
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_diagram("{\n  \"kind\": \"stationary\",\n  oops\n}") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        let cases = [
            ParsedDiagram::Stationary(fixtures::fibonacci()),
            ParsedDiagram::Stationary(
                StationaryOrderedDiagram::new(
                    vec!["x1".into(), "x2".into()],
                    vec![0, 1, 1],
                    vec![vec![0, 1], vec![1, 0, 0]],
                )
                .unwrap(),
            ),
            ParsedDiagram::Ordered(fixtures::sturmian().to_ordered(3)),
            ParsedDiagram::Explicit(fixtures::odometer_explicit(3)),
        ];
        for d in cases {
            assert_eq!(parse_diagram(&serialize_diagram(&d)).unwrap(), d);
        }
        let s = Substitution::from_strs(&["a", "b"], &[("a", "ab"), ("b", "a")]).unwrap();
        let text = serialize_substitution(&s);
        assert!(text.contains("\"ab\""));
        assert_eq!(parse_substitution(&text).unwrap(), s);
    }

    #[test]
    fn dot_output() {
        let od = fixtures::odometer().to_ordered(2);
        let dot = export_dot_ordered(&od, 2).unwrap();
        assert_eq!(dot.matches("rank=same").count(), 3);
        assert!(dot.contains("v0_0 -> v1_0 [label=\"0\"];\n  v0_0 -> v1_0 [label=\"1\"];"));
        assert_eq!(dot, export_dot_ordered(&od, 2).unwrap());
        assert!(export_dot_ordered(&od, 3).is_err());
        // Composite multiplicities: the {0,2} telescoping of the odometer has 4 parallel edges.
        let t = fixtures::odometer_explicit(2)
            .telescope(&crate::diagram::TelescopeSchedule::new(vec![0, 2]).unwrap())
            .unwrap();
        assert_eq!(export_dot(&t, 1).unwrap().matches("v0_0 -> v1_0;").count(), 4);
    }

    #[test]
    fn orbit_text() {
        let a: Vec<String> = vec!["a".into(), "b".into()];
        assert_eq!(format_orbit(&a, &[0, 1, 0]), "aba");
        let long: Vec<String> = vec!["ab".into(), "c".into()];
        assert_eq!(format_orbit(&long, &[0, 1]), "2:ab 1:c");
    }
}
