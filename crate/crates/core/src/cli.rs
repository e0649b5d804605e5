//! Command-line front end.
//!
//! Machine-readable records (one JSON object per line) go to `--out` or
//! standard output; human-readable summaries go to standard error.
//! Exit codes: 0 success, 1 verification violations, 2 usage or input errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{self, CorpusConfig};
use crate::error::Error;
use crate::group::{Group, Limits, Subgroup};
use crate::perm::Permutation;
use crate::spec::GroupSpec;
use crate::verify::{self, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "supersol", version, about = "Permutation-group structure checks and subnormal-generation sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = Limits::default().order_cap, value_parser = positive)]
    pub order_cap: usize,

    /// Largest subgroup lattice that will be enumerated.
    #[arg(long, global = true, default_value_t = Limits::default().subgroup_cap, value_parser = positive)]
    pub subgroup_cap: usize,

    /// Log verbosity; repeat for more.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the property report of one group.
    Classify(GroupSource),
    /// List every subgroup with normality and subnormal defect.
    Subgroups(GroupSource),
    /// Check one pair of subgroups against the theorem.
    CheckPair {
        #[arg(long)]
        spec: PathBuf,
        /// Generators of A, cycle notation, separated by `;`.
        #[arg(long)]
        a: String,
        /// Generators of B, cycle notation, separated by `;`.
        #[arg(long)]
        b: String,
    },
    /// Check every qualifying pair in the corpus.
    Sweep {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Groups up to this order get every subgroup pair; larger ones get
        /// pairs of cyclic and normal subgroups only.
        #[arg(long, default_value_t = SweepConfig::default().full_pairs_max_order, value_parser = positive)]
        full_pairs_max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the order-144 example.
    #[command(name = "paper-example")]
    Example144,
    /// Subnormal pairs that generate the group without their product being a subgroup.
    DemoProducts,
    /// Search the corpus for nonsupersoluble groups built from supersoluble pieces.
    Hunt {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Write a catalog group as a spec file plus a `.gap` list of generators.
    Export {
        #[arg(long)]
        family: String,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct GroupSource {
    #[arg(long, conflicts_with = "spec")]
    pub family: Option<String>,
    #[arg(long, requires = "family")]
    pub param: Option<usize>,
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long, default_value_t = CorpusConfig::default().max_order, value_parser = positive)]
    pub max_order: usize,
    #[arg(long, default_value_t = CorpusConfig::default().max_degree, value_parser = positive)]
    pub max_degree: usize,
    #[arg(long)]
    pub no_cyclic: bool,
    #[arg(long)]
    pub no_dihedral: bool,
    #[arg(long)]
    pub no_symmetric: bool,
    #[arg(long)]
    pub no_alternating: bool,
    #[arg(long)]
    pub no_heisenberg: bool,
    #[arg(long)]
    pub no_wreath: bool,
    #[arg(long)]
    pub no_order144: bool,
    #[arg(long)]
    pub no_products: bool,
    #[arg(long)]
    pub no_quotients: bool,
}

impl CorpusArgs {
    fn config(&self, limits: Limits) -> CorpusConfig {
        CorpusConfig {
            max_order: self.max_order,
            max_degree: self.max_degree,
            cyclic: !self.no_cyclic,
            dihedral: !self.no_dihedral,
            symmetric: !self.no_symmetric,
            alternating: !self.no_alternating,
            heisenberg: !self.no_heisenberg,
            wreath: !self.no_wreath,
            order144: !self.no_order144,
            products: !self.no_products,
            quotients: !self.no_quotients,
            limits,
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure with the location it refers to, e.g. `file.txt:3`.
#[derive(Debug)]
struct Diagnostic {
    location: String,
    error: Error,
}

impl Diagnostic {
    fn at(location: impl Into<String>) -> impl FnOnce(Error) -> Diagnostic {
        let location = location.into();
        move |error| Diagnostic { location, error }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.error {
            Error::Spec(e) => write!(f, "{}:{}: {}", self.location, e.line, e.message),
            e => write!(f, "{}: {e}", self.location),
        }
    }
}

type CliResult<T> = std::result::Result<T, Diagnostic>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new().filter_level(level).try_init();
    match execute(&cli) {
        Ok(code) => code,
        Err(d) => {
            eprintln!("error: {d}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> CliResult<i32> {
    let limits = Limits { order_cap: cli.order_cap, subgroup_cap: cli.subgroup_cap };
    match &cli.command {
        Command::Classify(src) => {
            let (g, _) = load(src, limits)?;
            let report = g.classify();
            let record = json!({ "record": "classify", "group": g.name(), "report": report });
            emit(None, &format!("{record}\n"))?;
            eprintln!("{} (order {}): {}", g.name(), g.order(), flags(&report));
            Ok(EXIT_OK)
        }
        Command::Subgroups(src) => {
            let (g, loc) = load(src, limits)?;
            let subs = g.all_subgroups().map_err(Diagnostic::at(&loc))?;
            let mut out = String::new();
            for (i, h) in subs.iter().enumerate() {
                let sn = g.is_subnormal(h);
                let record = json!({
                    "record": "subgroup",
                    "index": i,
                    "order": h.order(),
                    "normal": g.is_normal(h),
                    "subnormal": sn.is_subnormal,
                    "defect": sn.defect,
                    "generators": gens(&g, h),
                });
                out.push_str(&format!("{record}\n"));
            }
            emit(None, &out)?;
            eprintln!("{}: {} subgroups", g.name(), subs.len());
            Ok(EXIT_OK)
        }
        Command::CheckPair { spec, a, b } => {
            let loc = spec.display().to_string();
            let g = Group::generate(&read_spec(spec)?, limits).map_err(Diagnostic::at(&loc))?;
            let a = parse_subgroup(&g, a, "--a")?;
            let b = parse_subgroup(&g, b, "--b")?;
            let v = verify::check_pair(&g, &a, &b).map_err(Diagnostic::at(&loc))?;
            emit(None, &format!("{}\n", json_record("verdict", &v)))?;
            match (&v.violation, v.hypotheses_hold) {
                (Some(why), _) => {
                    eprintln!("VIOLATION: {why}");
                    Ok(EXIT_VIOLATION)
                }
                (None, true) => {
                    eprintln!("hypotheses hold; all conclusions verified");
                    Ok(EXIT_OK)
                }
                (None, false) => {
                    eprintln!(
                        "hypotheses fail: A subnormal={} supersoluble={}, B subnormal={} supersoluble={}, generates={}",
                        v.a_subnormal, v.a_supersoluble, v.b_subnormal, v.b_supersoluble, v.generates
                    );
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Sweep { corpus, jobs, full_pairs_max_order, out } => {
            let groups = catalog::build_corpus(&corpus.config(limits)).map_err(Diagnostic::at("corpus"))?;
            let config = SweepConfig { full_pairs_max_order: *full_pairs_max_order, jobs: *jobs };
            let report = verify::sweep(&groups, &config);
            emit(out.as_deref(), &report.to_jsonl())?;
            eprint!("{}", report.summary());
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Example144 => {
            let report = verify::verify_order_144_example().map_err(Diagnostic::at("paper-example"))?;
            emit(None, &format!("{}\n", json_record("example", &report)))?;
            eprint!("{}", report.summary());
            Ok(if report.passed { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::DemoProducts => {
            let report = verify::generation_vs_product_demo().map_err(Diagnostic::at("demo-products"))?;
            let mut text = String::new();
            for d in report.expected_witness.iter().chain(&report.expected_none) {
                text.push_str(&format!("{}\n", json_record("demo", d)));
                match &d.witness {
                    Some(w) => eprintln!(
                        "{}: |X|={} |Y|={} <X,Y>={} but |XY|={} ({} witnesses in {} pairs)",
                        d.group_key, w.x_order, w.y_order, w.join_order, w.product_set_size, d.witnesses_found, d.pairs_scanned
                    ),
                    None => eprintln!("{}: no witness in {} pairs", d.group_key, d.pairs_scanned),
                }
            }
            emit(None, &text)?;
            Ok(if report.passed { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Hunt { corpus, jobs } => {
            let groups = catalog::build_corpus(&corpus.config(limits)).map_err(Diagnostic::at("corpus"))?;
            let found = verify::hunt_witnesses(&groups, *jobs).map_err(Diagnostic::at("hunt"))?;
            let text: String = found.iter().map(|w| format!("{}\n", json_record("witness", w))).collect();
            emit(None, &text)?;
            eprintln!("{} groups searched, {} witnesses", groups.len(), found.len());
            for w in &found {
                eprintln!("  {:?} in {} (|A|={}, |B|={})", w.kind, w.group_key, w.a_order, w.b_order);
            }
            Ok(EXIT_OK)
        }
        Command::Export { family, param, out } => {
            let spec = catalog::family(family, *param).map_err(Diagnostic::at("--family"))?;
            write_file(out, &spec.to_text())?;
            let mut gap = out.clone().into_os_string();
            gap.push(".gap");
            write_file(Path::new(&gap), &format!("{}\n", spec.export_line()))?;
            eprintln!("wrote {} and {}", out.display(), Path::new(&gap).display());
            Ok(EXIT_OK)
        }
    }
}

fn flags(r: &crate::structure::PropertyReport) -> String {
    let pairs = [
        ("abelian", r.abelian),
        ("cyclic", r.cyclic),
        ("nilpotent", r.nilpotent),
        ("soluble", r.soluble),
        ("supersoluble", r.supersoluble),
        ("metanilpotent", r.metanilpotent),
        ("sylow-tower", r.sylow_tower_supersoluble),
        ("abelian-sylows", r.abelian_sylows),
    ];
    pairs.iter().map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(" ")
}

fn json_record(kind: &str, value: &impl Serialize) -> serde_json::Value {
    let mut v = serde_json::to_value(value).expect("report types serialize");
    if let serde_json::Value::Object(m) = &mut v {
        m.insert("record".into(), kind.into());
    }
    v
}

fn gens(g: &Group, h: &Subgroup) -> Vec<String> {
    g.permutations_of(h).iter().map(|p| p.to_string()).collect()
}

fn read_spec(path: &Path) -> CliResult<GroupSpec> {
    let loc = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| Diagnostic {
        location: loc.clone(),
        error: Error::InvalidParameter(format!("cannot read file: {e}")),
    })?;
    GroupSpec::parse(&text).map_err(Diagnostic::at(loc))
}

fn load(src: &GroupSource, limits: Limits) -> CliResult<(Group, String)> {
    let (spec, loc) = match (&src.family, &src.spec) {
        (Some(family), None) => (catalog::family(family, src.param).map_err(Diagnostic::at("--family"))?, family.clone()),
        (None, Some(path)) => (read_spec(path)?, path.display().to_string()),
        _ => {
            return Err(Diagnostic {
                location: "arguments".into(),
                error: Error::InvalidParameter("give exactly one of --family or --spec".into()),
            })
        }
    };
    let g = Group::generate(&spec, limits).map_err(Diagnostic::at(&loc))?;
    Ok((g, loc))
}

fn parse_subgroup(g: &Group, text: &str, flag: &str) -> CliResult<Subgroup> {
    let mut perms = Vec::new();
    for (i, part) in text.split(';').enumerate() {
        let loc = format!("{flag} generator {}", i + 1);
        let p = Permutation::parse(part.trim(), g.degree()).map_err(|e| Diagnostic { location: loc.clone(), error: e.into() })?;
        perms.push(p);
    }
    g.subgroup_from(&perms).map_err(Diagnostic::at(flag))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Diagnostic {
        location: path.display().to_string(),
        error: Error::InvalidParameter(format!("cannot write file: {e}")),
    })
}

fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => write_file(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(|e| Diagnostic {
            location: "stdout".into(),
            error: Error::InvalidParameter(e.to_string()),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        Cli::try_parse_from(["supersol", "classify", "--family", "dihedral", "--param", "8"]).unwrap();
        Cli::try_parse_from(["supersol", "classify", "--spec", "g.txt"]).unwrap();
        Cli::try_parse_from(["supersol", "sweep", "--max-order", "60", "--jobs", "2", "--out", "r.jsonl"]).unwrap();
        Cli::try_parse_from(["supersol", "check-pair", "--spec", "g", "--a", "(1 2)", "--b", "(1 2 3);(1 2)"]).unwrap();
        Cli::try_parse_from(["supersol", "export", "--family", "cyclic", "--param", "4", "--out", "c4"]).unwrap();
        assert!(Cli::try_parse_from(["supersol", "classify"]).is_err());
        assert!(Cli::try_parse_from(["supersol", "classify", "--family", "x", "--spec", "y"]).is_err());
        assert!(Cli::try_parse_from(["supersol", "bogus"]).is_err());
        assert!(Cli::try_parse_from(["supersol", "sweep", "--max-order", "0"]).is_err());
    }

    #[test]
    fn spec_diagnostic_names_line() {
        let d = Diagnostic::at("g.txt")(GroupSpec::parse("name g\ndegree 3\ngen (1 4)\n").unwrap_err());
        assert!(d.to_string().starts_with("g.txt:3:"), "{d}");
    }
}
