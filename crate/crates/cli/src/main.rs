use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use valquiver::annihilator::shortest_annihilator_bfs;
use valquiver::dot::{hasse_dot, quiver_dot, slice_dot};
use valquiver::io::{parse_quiver, parse_representation, parse_sequence, parse_word};
use valquiver::knitting::knit_preprojectives;
use valquiver::sequences::{canonical_form, join, meet, principal_sequence};
use valquiver::translation::{build_slice, principal_hasse};
use valquiver::verify::{run_verify, Limits};
use valquiver::weyl::{cartan_matrix, coxeter_powers_reduced, coxeter_word, is_reduced};
use valquiver::{PrincipalCoordinate, ValuedQuiver, Vertex};

#[derive(Parser)]
#[command(name = "valquiver", version, about = "Admissible sequences, reflection functors and Weyl groups of valued quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of a sequence, layers separated by `|`
    Canon { quiver: PathBuf, seq: String },
    /// Whether two sequences are equivalent
    Equiv { quiver: PathBuf, s: String, t: String },
    /// Greatest lower bound of two sequences
    Meet { quiver: PathBuf, s: String, t: String },
    /// Least upper bound of two sequences
    Join { quiver: PathBuf, s: String, t: String },
    /// The principal sequence of size r generated by x
    Principal { quiver: PathBuf, r: u32, x: Vertex },
    /// Hasse diagram of the principal sequences of size at most R
    Hasse {
        quiver: PathBuf,
        #[arg(long, default_value_t = 3)]
        rmax: u32,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Levels 0..R-1 of the translation quiver
    Slice {
        quiver: PathBuf,
        #[arg(long, default_value_t = 3)]
        rmax: u32,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Dimension vectors of the preprojective component
    Knit {
        quiver: PathBuf,
        #[arg(long, default_value_t = 3)]
        rmax: u32,
    },
    /// Shortest annihilating sequence of a representation
    Sm { quiver: PathBuf, rep: PathBuf },
    /// Apply the reflection functor at a sink or a source
    Reflect { quiver: PathBuf, x: Vertex, rep: PathBuf },
    /// Whether a word in the simple reflections is reduced
    Reduced { quiver: PathBuf, word: String },
    /// Reducedness of the powers of the Coxeter element
    Coxeter {
        quiver: PathBuf,
        #[arg(long, default_value_t = 10)]
        powers: u32,
    },
    /// Run the property suite on a quiver
    Verify {
        quiver: PathBuf,
        #[arg(long, default_value_t = Limits::default().max_seq_len)]
        max_len: usize,
        #[arg(long, default_value_t = Limits::default().r_max)]
        rmax: u32,
        #[arg(long, default_value_t = Limits::default().m_max)]
        powers: u32,
        #[arg(long, default_value_t = Limits::default().seed)]
        seed: u64,
    },
    /// The quiver as a DOT digraph
    Dot {
        quiver: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ValuedQuiver, Failure> {
    parse_quiver(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_dot(text: String, target: Option<PathBuf>) -> Result<(), Failure> {
    match target {
        Some(p) => fs::write(&p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Canon { quiver, seq } => {
            let q = load(&quiver)?;
            println!("{}", canonical_form(&parse_sequence(&q, &seq)?));
        }
        Command::Equiv { quiver, s, t } => {
            let q = load(&quiver)?;
            println!("{}", parse_sequence(&q, &s)?.equivalent(&parse_sequence(&q, &t)?)?);
        }
        Command::Meet { quiver, s, t } => {
            let q = load(&quiver)?;
            println!("{}", meet(&parse_sequence(&q, &s)?, &parse_sequence(&q, &t)?)?);
        }
        Command::Join { quiver, s, t } => {
            let q = load(&quiver)?;
            println!("{}", join(&parse_sequence(&q, &s)?, &parse_sequence(&q, &t)?)?);
        }
        Command::Principal { quiver, r, x } => {
            let q = load(&quiver)?;
            println!("{}", principal_sequence(&q, PrincipalCoordinate::new(r, x)?)?);
        }
        Command::Hasse { quiver, rmax, dot } => {
            let h = principal_hasse(&load(&quiver)?, rmax)?;
            if dot.is_some() {
                emit_dot(hasse_dot(&h), dot)?;
            }
            for (a, b) in h.arrows() {
                println!("{a} -> {b}");
            }
        }
        Command::Slice { quiver, rmax, dot } => {
            let s = build_slice(&load(&quiver)?, rmax.saturating_sub(1));
            if dot.is_some() {
                emit_dot(slice_dot(&s), dot)?;
            }
            for (a, b) in s.arrows() {
                println!("{a} -> {b}");
            }
        }
        Command::Knit { quiver, rmax } => {
            for (tag, d) in knit_preprojectives(&load(&quiver)?, rmax) {
                println!("{} {} {d}", tag.nu, tag.x);
            }
        }
        Command::Sm { quiver, rep } => {
            let q = load(&quiver)?;
            let rep = parse_representation(&q, &read(&rep)?)?;
            println!("{}", shortest_annihilator_bfs(&rep)?);
        }
        Command::Reflect { quiver, x, rep } => {
            let q = load(&quiver)?;
            let rep = parse_representation(&q, &read(&rep)?)?;
            let out = if q.is_sink(x) { rep.reflect_plus(x)? } else { rep.reflect_minus(x)? };
            let arrows: Vec<String> = out.quiver().arrows().iter().map(|(u, v)| format!("{u}->{v}")).collect();
            println!("# arrows: {}", arrows.join(" "));
            print!("{out}");
        }
        Command::Reduced { quiver, word } => {
            let q = load(&quiver)?;
            println!("{}", is_reduced(&cartan_matrix(q.graph()), &parse_word(&word)?)?);
        }
        Command::Coxeter { quiver, powers } => {
            let q = load(&quiver)?;
            println!("word: {}", coxeter_word(&q));
            for (m, reduced) in coxeter_powers_reduced(&cartan_matrix(q.graph()), &q, powers)? {
                println!("{m} {reduced}");
            }
        }
        Command::Verify { quiver, max_len, rmax, powers, seed } => {
            let q = load(&quiver)?;
            let report = run_verify(&q, Limits { max_seq_len: max_len, r_max: rmax, m_max: powers, seed });
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Dot { quiver, dot } => emit_dot(quiver_dot(&load(&quiver)?), dot)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
