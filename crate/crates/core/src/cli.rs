//! Command-line surface of the `bratteli` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::diagram::{BratteliDiagram, TelescopeSchedule};
use crate::dimension::{gamma_identification_check, gamma_intertwine_check};
use crate::error::{Error, Result};
use crate::eventual::EventuallyStationary;
use crate::io::{self, ParsedDiagram};
use crate::kakutani::{self, FiniteChange};
use crate::kr::nested_from_diagram;
use crate::matrix::is_primitive;
use crate::ordered::{OrderedDiagram, ProperOrdering, StationaryOrderedDiagram};
use crate::split::{SymbolSplit, WITNESS_STEPS};
use crate::vershik::orbit_sequence;
use crate::{GroupElement, GroupPresentation};

#[derive(Debug, Parser)]
#[command(
    name = "bratteli",
    version,
    about = "Ordered Bratteli diagrams, Vershik maps and dimension groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub source: Source,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Diagram (or substitution) file.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Diagram (or substitution) given inline.
    #[arg(long, global = true)]
    pub literal: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the diagram axioms.
    Validate,
    /// Print an incidence matrix.
    Matrix {
        #[arg(long)]
        level: Option<usize>,
    },
    /// Telescope to the given cut levels (comma separated, starting with 0).
    Telescope {
        #[arg(long, value_delimiter = ',')]
        cuts: Vec<usize>,
    },
    /// Decide proper ordering of a stationary diagram.
    Proper,
    /// Print the substitution read off a stationary diagram, or with
    /// `--to-diagram` the stationary diagram of a substitution.
    Substitution {
        #[arg(long)]
        to_diagram: bool,
    },
    /// Print the first symbols of the orbit of the minimal path.
    Orbit {
        #[arg(long)]
        length: usize,
    },
    /// Print tower data of the first levels.
    Towers {
        #[arg(long)]
        depth: usize,
    },
    /// Print the dimension group presentation.
    K0,
    /// Sign of an element such as `2:[3,-1]`.
    Positive {
        element: String,
        #[arg(long, default_value_t = 16)]
        horizon: usize,
    },
    /// Equality of two elements.
    Equal { a: String, b: String },
    /// Find c with a1, a2 <= c <= b1, b2.
    Interpolate {
        a1: String,
        a2: String,
        b1: String,
        b2: String,
        #[arg(long, default_value_t = 32)]
        horizon: usize,
    },
    /// Check the tower-sum maps on the first levels.
    GammaCheck {
        #[arg(long)]
        depth: usize,
    },
    /// Split multiple top edges of a properly ordered stationary diagram.
    SplitTop {
        /// Print the interleaving witness instead of the new diagram.
        #[arg(long)]
        witness: bool,
    },
    /// Induce on the cylinders of the given top edges.
    Induce {
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Apply a finite change and report the order units.
    Change {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Compare the induced orbit with first returns of the original one.
    FirstReturn {
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        length: usize,
    },
    /// Render the first levels in DOT.
    Dot {
        #[arg(long)]
        depth: usize,
    },
}

fn read_source(src: &Source) -> Result<String> {
    match (&src.input, &src.literal) {
        (Some(path), None) => {
            std::fs::read_to_string(path).map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))
        }
        (None, Some(text)) => Ok(text.clone()),
        _ => Err(Error::Usage("exactly one of --input and --literal is required".into())),
    }
}

fn stationary(d: &ParsedDiagram) -> Result<&StationaryOrderedDiagram> {
    match d {
        ParsedDiagram::Stationary(sd) => Ok(sd),
        _ => Err(Error::Precondition("this command needs a stationary diagram".into())),
    }
}

fn ordered(d: &ParsedDiagram, depth: usize) -> Result<OrderedDiagram> {
    match d {
        ParsedDiagram::Stationary(sd) => Ok(sd.to_ordered(depth)),
        ParsedDiagram::Ordered(od) => od.truncate(depth),
        ParsedDiagram::Explicit(_) => Err(Error::Precondition("this command needs an ordered diagram".into())),
    }
}

fn base(d: &ParsedDiagram, depth: usize) -> Result<BratteliDiagram> {
    match d {
        ParsedDiagram::Explicit(b) => {
            if depth > b.depth() {
                return Err(Error::LevelOutOfRange {
                    level: depth,
                    depth: b.depth(),
                });
            }
            b.telescope(&TelescopeSchedule::identity(depth))
        }
        _ => Ok(ordered(d, depth)?.into_base()),
    }
}

fn presentation(d: &ParsedDiagram) -> GroupPresentation {
    match d {
        ParsedDiagram::Stationary(sd) => GroupPresentation::from_stationary(sd),
        ParsedDiagram::Ordered(od) => GroupPresentation::from_diagram(od.base()),
        ParsedDiagram::Explicit(b) => GroupPresentation::from_diagram(b),
    }
}

fn element(p: &GroupPresentation, s: &str) -> Result<GroupElement> {
    let g: GroupElement = s.parse()?;
    p.element(g.stage, g.vector)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Runs one command; the returned text goes to standard output. A `FAIL`
/// verdict from a check command is reported as an error.
pub fn execute(cli: &Cli) -> Result<String> {
    let text = read_source(&cli.source)?;
    if let Command::Substitution { to_diagram: true } = cli.command {
        let sigma = io::parse_substitution(&text)?;
        let sd = StationaryOrderedDiagram::from_substitution(&sigma)?;
        return Ok(io::serialize_diagram(&ParsedDiagram::Stationary(sd)) + "\n");
    }
    let d = io::parse_diagram(&text)?;
    let mut out = String::new();
    match &cli.command {
        Command::Validate => out.push_str("valid\n"),
        Command::Matrix { level } => {
            let m = match (&d, level) {
                (ParsedDiagram::Stationary(sd), None) => sd.matrix(),
                (_, Some(n)) => base(&d, *n)?.incidence_matrix(*n)?,
                (_, None) => return Err(Error::Usage("--level is required for explicit diagrams".into())),
            };
            let _ = writeln!(out, "{m}");
        }
        Command::Telescope { cuts } => {
            let sched = TelescopeSchedule::new(cuts.clone())?;
            let t = match &d {
                ParsedDiagram::Explicit(b) => ParsedDiagram::Explicit(b.telescope(&sched)?),
                _ => ParsedDiagram::Ordered(ordered(&d, sched.last())?.induced_order_telescope(&sched)?),
            };
            out.push_str(&io::serialize_diagram(&t));
            out.push('\n');
        }
        Command::Proper => match stationary(&d)?.properly_ordered() {
            ProperOrdering::Yes => out.push_str("YES\n"),
            ProperOrdering::No(reason) => {
                let _ = writeln!(out, "NO: {reason}");
            }
        },
        Command::Substitution { .. } => {
            out.push_str(&io::serialize_substitution(&stationary(&d)?.substitution()));
            out.push('\n');
        }
        Command::Orbit { length } => {
            let sd = stationary(&d)?;
            let orbit = orbit_sequence(sd, *length)?;
            out.push_str(&io::format_orbit(sd.alphabet(), &orbit));
            out.push('\n');
        }
        Command::Towers { depth } => {
            let od = ordered(&d, *depth)?;
            out.push_str(&serde_json::to_string(&nested_from_diagram(&od, *depth)?).expect("plain data"));
            out.push('\n');
        }
        Command::K0 => {
            let p = presentation(&d);
            for n in 1..=p.head_depth() {
                let _ = writeln!(out, "phi_{n} = {}", p.map(n).expect("head map"));
            }
            if let Some(c) = p.tail() {
                let prim = match is_primitive(c)? {
                    crate::Primitivity::Yes(k) => format!("primitive, exponent {k}"),
                    crate::Primitivity::No => "not primitive".to_string(),
                };
                let _ = writeln!(out, "phi_n = {c} for n > {} ({prim})", p.head_depth());
            }
            let _ = writeln!(out, "unit = {}", p.unit());
        }
        Command::Positive { element: e, horizon } => {
            let p = presentation(&d);
            let _ = writeln!(out, "{}", p.is_positive(&element(&p, e)?, *horizon)?);
        }
        Command::Equal { a, b } => {
            let p = presentation(&d);
            let _ = writeln!(out, "{}", p.equal(&element(&p, a)?, &element(&p, b)?)?);
        }
        Command::Interpolate {
            a1,
            a2,
            b1,
            b2,
            horizon,
        } => {
            let p = presentation(&d);
            let [a1, a2, b1, b2] = [a1, a2, b1, b2].map(|s| element(&p, s));
            match p.interpolate([&a1?, &a2?], [&b1?, &b2?], *horizon)? {
                Some(c) => {
                    let _ = writeln!(out, "{c}");
                }
                None => out.push_str("UNDET\n"),
            }
        }
        Command::GammaCheck { depth } => {
            let od = ordered(&d, *depth)?;
            let seq = nested_from_diagram(&od, *depth)?;
            let mut all = true;
            for n in 0..=*depth {
                let ident = gamma_identification_check(&seq, n)?;
                let inter = if n < *depth {
                    gamma_intertwine_check(&seq, n)?
                } else {
                    true
                };
                all &= ident && inter;
                let _ = writeln!(
                    out,
                    "level {n}: identification {} intertwining {}",
                    pass(ident),
                    pass(inter)
                );
            }
            if !all {
                return Err(Error::Precondition(format!("tower-sum check failed\n{out}")));
            }
        }
        Command::SplitTop { witness } => {
            let s = SymbolSplit::new(stationary(&d)?)?;
            let result = if *witness {
                ParsedDiagram::Ordered(s.witness(WITNESS_STEPS))
            } else {
                ParsedDiagram::Stationary(s.split)
            };
            out.push_str(&io::serialize_diagram(&result));
            out.push('\n');
        }
        Command::Induce { keep, depth } => {
            let od = match &d {
                ParsedDiagram::Stationary(sd) => {
                    kakutani::induce_on_top_stationary(&EventuallyStationary::from(sd), keep)?.to_ordered(*depth)
                }
                _ => kakutani::induce_on_top(&ordered(&d, *depth)?, keep)?,
            };
            out.push_str(&io::serialize_diagram(&ParsedDiagram::Ordered(od)));
            out.push('\n');
        }
        Command::Change { spec, depth } => {
            let spec_text = std::fs::read_to_string(spec)
                .map_err(|e| Error::Format(format!("cannot read {}: {e}", spec.display())))?;
            let ParsedDiagram::Ordered(head) = io::parse_diagram(&spec_text)? else {
                return Err(Error::Precondition("a change is an ordered explicit diagram".into()));
            };
            let ch = FiniteChange::new(head);
            match &d {
                ParsedDiagram::Stationary(sd) => {
                    let ev = EventuallyStationary::from(sd);
                    let changed = kakutani::apply_finite_change_stationary(&ev, &ch)?;
                    let r = kakutani::unit_change_report(&ev, &ch)?;
                    let _ = writeln!(
                        out,
                        "stage {}: unit {} becomes {}; maps after stage {} {}",
                        r.stage,
                        r.old_unit,
                        r.new_unit,
                        r.stage,
                        if r.tails_agree { "agree" } else { "differ" }
                    );
                    out.push_str(&io::serialize_diagram(&ParsedDiagram::Ordered(
                        changed.to_ordered(*depth),
                    )));
                }
                _ => {
                    let od = ordered(&d, full_depth(&d))?;
                    let changed = kakutani::apply_finite_change(&od, &ch)?;
                    out.push_str(&io::serialize_diagram(&ParsedDiagram::Ordered(changed)));
                }
            }
            out.push('\n');
        }
        Command::FirstReturn { keep, length } => {
            let ev = EventuallyStationary::from(stationary(&d)?);
            let ok = kakutani::first_return_check(&ev, keep, *length)?;
            let _ = writeln!(out, "{}", pass(ok));
            if !ok {
                return Err(Error::Precondition(
                    "first-return orbit differs from the induced orbit".into(),
                ));
            }
        }
        Command::Dot { depth } => match &d {
            ParsedDiagram::Explicit(b) => out.push_str(&io::export_dot(b, *depth)?),
            _ => out.push_str(&io::export_dot_ordered(&ordered(&d, *depth)?, *depth)?),
        },
    }
    Ok(out)
}

fn full_depth(d: &ParsedDiagram) -> usize {
    match d {
        ParsedDiagram::Explicit(b) => b.depth(),
        ParsedDiagram::Ordered(od) => od.depth(),
        ParsedDiagram::Stationary(_) => 0,
    }
}
