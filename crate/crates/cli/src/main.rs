//! `whsg`: decision procedures for word-hyperbolic semigroup structures.
//!
//! Every run prints one JSON report on stdout. Exit status is 0 when the
//! procedure ran, 1 on an input error and 2 when an enumeration cap was
//! exceeded.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use whsg::decide::{self, GreenRel, Limits};
use whsg::structure::{grammar_from_json, load_structure, normalize_generators, save_structure, structure_to_json, validate_necessary};
use whsg::{oracle, Error, FiniteSemigroup, Verdict, WhStructure};

use report::Report;

#[derive(Parser)]
#[command(name = "whsg", version, about = "Decision procedures for word-hyperbolic semigroup structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cap on completely simple species tried.
    #[arg(long, global = true, default_value_t = Limits::default().max_species)]
    max_species: usize,

    /// Largest alphabet for the Clifford species search.
    #[arg(long, global = true, default_value_t = Limits::default().max_alphabet_clifford)]
    max_alphabet_clifford: usize,

    /// Longest defect witness reported.
    #[arg(long, global = true, default_value_t = Limits::default().defect_witness_length)]
    defect_witness_length: usize,

    /// Report format. Only JSON is supported.
    #[arg(long, global = true)]
    json: bool,
}

/// Structure file, given as the first positional argument or with
/// `--structure`, followed by the command's words.
#[derive(Args)]
struct Operands {
    /// Structure file (instead of the first positional argument).
    #[arg(long)]
    structure: Option<PathBuf>,

    /// `[STRUCTURE] WORD...`
    #[arg(value_name = "ARGS")]
    args: Vec<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Rel {
    R,
    L,
    H,
}

#[derive(Subcommand)]
enum Command {
    /// Check decidable necessary conditions for an interpretation.
    Validate {
        #[command(flatten)]
        input: Operands,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Rewrite so every letter is its own representative.
    Normalize {
        #[command(flatten)]
        input: Operands,
        /// Write the normalized structure here instead of into the report.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Shortest-lex representative of the product of two representatives.
    Multiply {
        #[command(flatten)]
        input: Operands,
    },
    /// Whether two words name the same element.
    WordEq {
        #[command(flatten)]
        input: Operands,
    },
    /// A representative of an arbitrary word.
    Represent {
        #[command(flatten)]
        input: Operands,
    },
    IsMonoid {
        #[command(flatten)]
        input: Operands,
    },
    /// Whether two representatives are related by a Green's relation.
    Green {
        #[command(flatten)]
        input: Operands,
        #[arg(long, value_enum, ignore_case = true)]
        rel: Rel,
    },
    IsGroup {
        #[command(flatten)]
        input: Operands,
    },
    IsCommutative {
        #[command(flatten)]
        input: Operands,
    },
    IsCompletelySimple {
        #[command(flatten)]
        input: Operands,
    },
    IsClifford {
        #[command(flatten)]
        input: Operands,
    },
    IsFree {
        #[command(flatten)]
        input: Operands,
    },
    /// Structure of a finite semigroup given by its multiplication table.
    FromTable {
        table: PathBuf,
        /// Write the structure here instead of into the report.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Look for a member `x#2y` with `y ≠ x^rev` in a grammar file.
    DefectCheck { grammar: PathBuf },
}

/// Failure of a run, split by exit status.
enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(m) => Failure::Cap(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl Operands {
    /// Loads the structure and returns it with exactly `words` words.
    fn load(&self, words: usize) -> Result<(WhStructure, Vec<whsg::Word>), Failure> {
        let (path, rest) = match &self.structure {
            Some(p) => (p.clone(), self.args.as_slice()),
            None => match self.args.split_first() {
                Some((p, rest)) => (PathBuf::from(p), rest),
                None => return Err(Failure::Input("missing structure file".into())),
            },
        };
        if rest.len() != words {
            return Err(Failure::Input(format!("expected {words} word(s), got {}", rest.len())));
        }
        let s = load_structure(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let ws = rest.iter().map(|w| s.parse_word(w)).collect::<whsg::Result<Vec<_>>>()?;
        Ok((s, ws))
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn structure_value(s: &WhStructure) -> Value {
    serde_json::from_str(&structure_to_json(s)).expect("structure text is JSON")
}

fn verdict(s: &WhStructure, v: whsg::Result<Verdict>) -> Result<Report, Failure> {
    Ok(Report::verdict(s.symbols(), &v?))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Validate { input, depth } => {
            let (s, _) = input.load(0)?;
            if *depth == 0 {
                return Err(Failure::Input("depth must be at least 1".into()));
            }
            verdict(&s, validate_necessary(&s, *depth))
        }
        Command::Normalize { input, output } => {
            let (s, _) = input.load(0)?;
            let n = normalize_generators(&s);
            let mut r = Report::new("yes", "every letter is its own representative");
            match output {
                Some(path) => {
                    save_structure(&n, path)?;
                    r.reason = format!("normalized structure written to {}", path.display());
                }
                None => r.witness("structure", structure_value(&n)),
            }
            Ok(r)
        }
        Command::Multiply { input } => {
            let (s, ws) = input.load(2)?;
            let p = whsg::multiply(&s, &ws[0], &ws[1])?;
            let mut r = Report::new("yes", "shortest-lex representative of the product");
            r.word(s.symbols(), "product", &p);
            Ok(r)
        }
        Command::WordEq { input } => {
            let (s, ws) = input.load(2)?;
            let eq = whsg::word_eq(&s, &ws[0], &ws[1])?;
            Ok(Report::boolean(eq, if eq { "same element" } else { "different elements" }))
        }
        Command::Represent { input } => {
            let (s, ws) = input.load(1)?;
            let u = whsg::represent(&s, &ws[0])?;
            let mut r = Report::new("yes", "representative of the word");
            r.word(s.symbols(), "representative", &u);
            Ok(r)
        }
        Command::IsMonoid { input } => {
            let (s, _) = input.load(0)?;
            verdict(&s, decide::is_monoid(&s))
        }
        Command::Green { input, rel } => {
            let (s, ws) = input.load(2)?;
            let rel = match rel {
                Rel::R => GreenRel::R,
                Rel::L => GreenRel::L,
                Rel::H => GreenRel::H,
            };
            let b = decide::green_related(&s, &ws[0], &ws[1], rel)?;
            Ok(Report::boolean(b, if b { "related" } else { "not related" }))
        }
        Command::IsGroup { input } => {
            let (s, _) = input.load(0)?;
            verdict(&s, decide::is_group(&s))
        }
        Command::IsCommutative { input } => {
            let (s, _) = input.load(0)?;
            verdict(&s, decide::is_commutative(&s))
        }
        Command::IsCompletelySimple { input } => {
            let (s, _) = input.load(0)?;
            verdict(&s, decide::is_completely_simple(&s, cli.max_species))
        }
        Command::IsClifford { input } => {
            let (s, _) = input.load(0)?;
            verdict(&s, decide::is_clifford(&s, cli.max_alphabet_clifford))
        }
        Command::IsFree { input } => {
            let (s, _) = input.load(0)?;
            verdict(&s, decide::is_free(&s, cli.defect_witness_length))
        }
        Command::FromTable { table, output } => {
            let t = FiniteSemigroup::from_json(&read(table)?)?;
            let s = oracle::structure_from_table(&t)?;
            let mut r = Report::new("yes", format!("structure of a semigroup of order {}", t.order()));
            match output {
                Some(path) => {
                    save_structure(&s, path)?;
                    r.reason = format!("{}; written to {}", r.reason, path.display());
                }
                None => r.witness("structure", structure_value(&s)),
            }
            Ok(r)
        }
        Command::DefectCheck { grammar } => {
            let (symbols, g) = grammar_from_json(&read(grammar)?)?;
            match decide::palindromic_defect(&g, cli.defect_witness_length)? {
                None => Ok(Report::new("no", "every member has the form x#2x^rev")),
                Some(d) => {
                    let mut r = Report::new("yes", d.certificate);
                    if let Some(w) = &d.witness {
                        r.word(&symbols, "defect", w);
                    }
                    Ok(r)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // help and version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.kind().to_string();
            let detail = e.to_string();
            let first = detail.lines().next().unwrap_or(&msg).trim_start_matches("error: ").to_string();
            Report::error(&first).print(start);
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(r) => {
            r.print(start);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(m)) => {
            Report::error(&m).print(start);
            ExitCode::from(1)
        }
        Err(Failure::Cap(m)) => {
            Report::error(&format!("cap exceeded: {m}")).print(start);
            ExitCode::from(2)
        }
    }
}
