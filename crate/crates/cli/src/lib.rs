//! Command-line frontend. [`run`] parses arguments, performs one operation
//! and writes the whole result at the end, so output is byte-for-byte
//! reproducible.
//!
//! Exit codes: 0 on success, 1 on a domain error (for example `GcdNotOne`),
//! 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use numsgp::{
    arithmetic_extensions, build_double, check_agreement, doubles_bounded, enumerate, export_tree,
    is_arithmetic_extension, monoid_hull, smallest_variety, upper_m_sets, AllSemigroups, Double,
    DoubleLabel, Error, MaxDepth, NumericalSemigroup, VarietyPredicate, VarietySet,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A comma-separated list of positive generators: `4,5,11` or `<4,5,11>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators(pub Vec<u64>);

impl FromStr for Generators {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('<').trim_end_matches('>');
        let list = parse_list(inner)?;
        if list.is_empty() {
            return Err("expected at least one generator".into());
        }
        if list.contains(&0) {
            return Err("generators must be positive integers".into());
        }
        Ok(Generators(list))
    }
}

/// A possibly empty comma-separated list of non-negative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntList(pub Vec<u64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_list(s.trim().trim_start_matches('{').trim_end_matches('}')).map(IntList)
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| format!("`{}` is not a non-negative integer", part.trim()))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "numsgp", version, about = "Numerical semigroups and arithmetic varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `dot` is only available for `tree`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of a semigroup.
    Info { semigroup: Generators },
    /// The quotient S/d.
    Quotient { semigroup: Generators, divisor: u64 },
    /// Intersection of one or more semigroups.
    Intersect {
        #[arg(required = true)]
        semigroups: Vec<Generators>,
    },
    /// Fundamental gaps.
    FundamentalGaps { semigroup: Generators },
    /// The proportionally modular semigroup {x | a·x mod b ≤ c·x}.
    Pm { a: u64, b: u64, c: u64 },
    /// All arithmetic extensions of a semigroup.
    Extensions { semigroup: Generators },
    /// The smallest arithmetic variety containing the given semigroups.
    Variety {
        #[arg(required = true)]
        semigroups: Vec<Generators>,
    },
    /// Whether CANDIDATE is an arithmetic extension of BASE.
    IsExtension { base: Generators, candidate: Generators },
    /// Smallest monoid of the variety generated by the given semigroups that
    /// contains --elements.
    Hull {
        #[arg(required = true)]
        semigroups: Vec<Generators>,
        #[arg(long, default_value = "")]
        elements: IntList,
    },
    /// Nonempty upper m-sets for the odd element given by --modulus.
    UpperSets {
        semigroup: Generators,
        #[arg(long)]
        modulus: u64,
    },
    /// The double S(m,H) with m from --modulus and H from --set.
    Double {
        semigroup: Generators,
        #[arg(long)]
        modulus: u64,
        #[arg(long, default_value = "")]
        set: IntList,
    },
    /// All T with T/2 = S and F(T) at most the bound.
    Doubles {
        semigroup: Generators,
        #[arg(long)]
        frobenius_bound: u64,
    },
    /// The tree of semigroups with bounded Frobenius number, optionally of
    /// bounded depth.
    Tree {
        #[arg(long)]
        frobenius_bound: u64,
        #[arg(long)]
        depth: Option<u64>,
    },
    /// Brute-force enumeration of every semigroup with bounded Frobenius number.
    EnumerateAll {
        #[arg(long)]
        frobenius_bound: u64,
        #[arg(long)]
        depth: Option<u64>,
    },
    /// Compare every algorithm with the brute-force oracle.
    OracleCheck {
        #[arg(long)]
        frobenius_bound: u64,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn semigroup(g: &Generators) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::from_generators(&g.0)?)
}

fn semigroups(list: &[Generators]) -> Result<Vec<NumericalSemigroup>, Failure> {
    list.iter().map(semigroup).collect()
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serialisation cannot fail");
    s.push('\n');
    s
}

fn join(list: &[u64]) -> String {
    list.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| format!("{i}\n")).collect()
}

fn info_text(s: &NumericalSemigroup) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{s}");
    let _ = writeln!(out, "frobenius: {}", s.frobenius());
    let _ = writeln!(out, "multiplicity: {}", s.multiplicity());
    let _ = writeln!(out, "genus: {}", s.genus());
    let _ = writeln!(out, "embedding dimension: {}", s.embedding_dimension());
    let _ = writeln!(out, "depth: {}", s.depth());
    let _ = writeln!(out, "gaps: {}", join(s.gaps()));
    out
}

fn double_line(d: &Double) -> String {
    format!("{} = {} F={}", d.label, d.semigroup, d.semigroup.frobenius())
}

fn variety_output(v: &VarietySet, format: Format) -> String {
    match format {
        Format::Json => json(v),
        _ => lines(v.iter()),
    }
}

fn single(s: &NumericalSemigroup, format: Format) -> String {
    match format {
        Format::Json => json(s),
        _ => format!("{s}\n"),
    }
}

fn predicate(depth: Option<u64>) -> Box<dyn VarietyPredicate> {
    match depth {
        Some(q) => Box::new(MaxDepth(q)),
        None => Box::new(AllSemigroups),
    }
}

fn execute(cmd: &Command, format: Format) -> Result<(String, bool), Failure> {
    if format == Format::Dot && !matches!(cmd, Command::Tree { .. }) {
        return Err(Failure::Usage(
            "--format dot is only supported by the `tree` command".into(),
        ));
    }
    let out = match cmd {
        Command::Info { semigroup: g } => {
            let s = semigroup(g)?;
            match format {
                Format::Json => json(&s),
                _ => info_text(&s),
            }
        }
        Command::Quotient { semigroup: g, divisor } => single(&semigroup(g)?.quotient(*divisor)?, format),
        Command::Intersect { semigroups: list } => {
            let all = semigroups(list)?;
            let meet = all[1..].iter().fold(all[0].clone(), |acc, t| acc.intersect(t));
            single(&meet, format)
        }
        Command::FundamentalGaps { semigroup: g } => {
            let fg = semigroup(g)?.fundamental_gaps();
            match format {
                Format::Json => json(&fg),
                _ => format!("{}\n", join(&fg)),
            }
        }
        Command::Pm { a, b, c } => single(&NumericalSemigroup::proportionally_modular(*a, *b, *c)?, format),
        Command::Extensions { semigroup: g } => variety_output(&arithmetic_extensions(&semigroup(g)?), format),
        Command::Variety { semigroups: list } => variety_output(&smallest_variety(&semigroups(list)?), format),
        Command::IsExtension { base, candidate } => {
            let answer = is_arithmetic_extension(&semigroup(base)?, &semigroup(candidate)?);
            match format {
                Format::Json => json(&answer),
                _ => format!("{answer}\n"),
            }
        }
        Command::Hull { semigroups: list, elements } => {
            let v = smallest_variety(&semigroups(list)?);
            single(&monoid_hull(&v, &elements.0), format)
        }
        Command::UpperSets { semigroup: g, modulus } => {
            let sets = upper_m_sets(&semigroup(g)?, *modulus)?;
            match format {
                Format::Json => json(&sets),
                _ => lines(sets.iter().map(|h| format!("{{{}}}", join(h)))),
            }
        }
        Command::Double { semigroup: g, modulus, set } => {
            let s = semigroup(g)?;
            let d = Double {
                semigroup: build_double(&s, *modulus, &set.0)?,
                label: DoubleLabel::new(*modulus, set.0.clone()),
            };
            match format {
                Format::Json => json(&d),
                _ => format!("{}\n", double_line(&d)),
            }
        }
        Command::Doubles { semigroup: g, frobenius_bound } => {
            let all = doubles_bounded(&semigroup(g)?, *frobenius_bound);
            match format {
                Format::Json => json(&all),
                _ => lines(all.iter().map(double_line)),
            }
        }
        Command::Tree { frobenius_bound, depth } => {
            let tree = enumerate(*frobenius_bound, predicate(*depth).as_ref())?;
            let name = match format {
                Format::Text => "text",
                Format::Json => "json",
                Format::Dot => "dot",
            };
            let mut text = export_tree(&tree, name)?;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            text
        }
        Command::EnumerateAll { frobenius_bound, depth } => {
            let mut report = numsgp::all_semigroups_up_to(*frobenius_bound)?;
            if let Some(q) = depth {
                report = report.filtered(|s| s.depth() <= *q);
            }
            match format {
                Format::Json => format!("{}\n", report.to_json()),
                _ => lines(report.semigroups.iter()),
            }
        }
        Command::OracleCheck { frobenius_bound } => {
            let report = check_agreement(*frobenius_bound)?;
            let mut out = String::new();
            for sweep in &report.sweeps {
                let _ = writeln!(out, "{sweep}");
                for d in &sweep.discrepancies {
                    let _ = writeln!(out, "  {d}");
                }
            }
            let verdict = if report.passed() { "all checks passed" } else { "discrepancies found" };
            let _ = writeln!(out, "{verdict} (frobenius bound {frobenius_bound})");
            return Ok((out, report.passed()));
        }
    };
    Ok((out, true))
}

/// Runs one command. Results go to `stdout` (or to `--output`), diagnostics
/// to `stderr`; the return value is the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let result = execute(&cli.command, cli.format).and_then(|(text, ok)| {
        match &cli.output {
            Some(path) => std::fs::write(path, &text)
                .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(e.to_string()))?,
        }
        Ok(ok)
    });

    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_DOMAIN,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_parsing() {
        assert_eq!("4,5,11".parse::<Generators>().unwrap().0, vec![4, 5, 11]);
        assert_eq!("<2, 5>".parse::<Generators>().unwrap().0, vec![2, 5]);
        assert!("4,x".parse::<Generators>().is_err());
        assert!("".parse::<Generators>().is_err());
        assert!("0,1".parse::<Generators>().is_err());
        assert_eq!("".parse::<IntList>().unwrap().0, Vec::<u64>::new());
        assert_eq!("{3,6}".parse::<IntList>().unwrap().0, vec![3, 6]);
    }
}
