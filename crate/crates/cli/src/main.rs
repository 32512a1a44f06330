use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use extdim_core::certificate::{resolution_to_filtration, verify_filtration, FiltrationCertificate};
use extdim_core::corpus::{load_corpus_dir, parse_corpus_entry, CorpusEntry, ENTRY_EXTENSION};
use extdim_core::extdim::{extension_dim_bruteforce, tn_membership_search, DimEstimate, MembershipOutcome, SearchBudget};
use extdim_core::homology::{default_cutoff, simple_dimensions, syzygy};
use extdim_core::parse::{module_literal, parse_job, Job};
use extdim_core::report::{bound_report, check_entry, EntryOutcome, ReportOptions};
use extdim_core::torsion::{thm319_certificate, SimpleSubset, SubsetStrategy};
use extdim_core::{Error, Representation, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "extdim", version, about = "Homological invariants and extension-dimension bounds for bound quiver algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Override the field of the input, e.g. `Q` or `F 3`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Syzygy steps tried before a projective dimension is reported as a lower bound.
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest total dimension built by brute-force searches.
    #[arg(long, global = true, default_value_t = 4)]
    budget_dim: usize,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// CSV table instead of JSON (report only).
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Bound report for one algebra file.
    Report {
        file: PathBuf,
        /// `exhaustive`, `greedy`, `endpoints` or `explicit <list>`.
        #[arg(long, num_args = 1..=2, value_names = ["MODE", "LIST"], default_values = ["exhaustive"])]
        subsets: Vec<String>,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Golden-value corpus.
    Corpus {
        #[arg(long, env = "EXTDIM_CORPUS", default_value = "corpus")]
        dir: PathBuf,
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Build or check filtration certificates.
    Certify {
        #[command(subcommand)]
        action: CertifyAction,
    },
    /// Brute-force searches over small finite fields.
    Search {
        #[command(subcommand)]
        action: SearchAction,
    },
    /// Print Ω^k of a module; negative `k` gives cosyzygies.
    Omega {
        file: PathBuf,
        #[arg(short = 'M', long)]
        module: String,
        #[arg(short, long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    Run,
    List,
    /// Validate an entry and copy it into the corpus.
    Add {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Subcommand)]
enum CertifyAction {
    Make {
        file: PathBuf,
        /// Certificate from the torsion-layer construction.
        #[arg(long, conflicts_with = "lemma33", requires = "module")]
        thm319: bool,
        /// Certificate from a named resolution in the job file.
        #[arg(long, value_name = "RESOLUTION")]
        lemma33: Option<String>,
        /// Simple subset as 1-based vertex labels, e.g. `2,3,4,5`.
        #[arg(short = 'S', long, value_delimiter = ',')]
        subset: Vec<String>,
        /// `simple:v`, `projective:v`, `injective:v`, `regular` or a module name.
        #[arg(short = 'M', long)]
        module: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Verify { file: PathBuf },
}

#[derive(Subcommand)]
enum SearchAction {
    /// Look for a certificate of `M ∈ ⟨T⟩_n`.
    Membership {
        file: PathBuf,
        #[arg(short = 'M', long)]
        module: String,
        /// Generator pieces, comma separated module specs.
        #[arg(short = 'T', long, value_delimiter = ',', default_value = "regular")]
        generator: Vec<String>,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extension dimension of a representation-finite algebra.
    Extdim { file: PathBuf },
}

enum Failure {
    /// Exit 1.
    Mismatch(String),
    /// Exit 2.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Exactness(_) | Error::InconclusiveDecomposition(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_or_print(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_field(text: &str, field: Option<&str>) -> String {
    let Some(f) = field else { return text.to_string() };
    text.lines()
        .map(|l| if l.trim_start().starts_with("field ") { format!("field {f}") } else { l.to_string() })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

fn entry_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "input".into())
}

/// Reads an algebra or job file, with or without a golden block.
fn load(path: &Path, g: &Global) -> CliResult<(CorpusEntry, Job)> {
    let text = with_field(&read(path)?, g.field.as_deref());
    let located = |e: Error| match e {
        Error::Parse { line, col, msg } => Failure::Input(format!("{}:{line}:{col}: {msg}", path.display())),
        other => other.into(),
    };
    let entry = parse_corpus_entry(&entry_name(path), &text).map_err(located)?;
    let job = parse_job(&entry.source).map_err(located)?;
    Ok((entry, job))
}

fn vertex(job: &Job, label: &str) -> CliResult<usize> {
    job.algebra.vertex_index(label.trim()).map_err(Failure::from)
}

fn module_spec(job: &Job, spec: &str) -> CliResult<Representation> {
    let alg = &job.algebra;
    let m = match spec.split_once(':') {
        Some(("simple", v)) => Representation::simple(alg, vertex(job, v)?)?,
        Some(("projective", v)) => Representation::projective(alg, vertex(job, v)?)?,
        Some(("injective", v)) => Representation::injective(alg, vertex(job, v)?)?,
        Some((kind, _)) => return Err(Failure::Input(format!("unknown module kind `{kind}`"))),
        None if spec == "regular" => Representation::regular(alg),
        None => job.module(spec)?.clone(),
    };
    Ok(m)
}

fn strategy(job: &Job, args: &[String]) -> CliResult<SubsetStrategy> {
    match (args[0].as_str(), args.get(1)) {
        ("exhaustive", None) => Ok(SubsetStrategy::Exhaustive),
        ("greedy", None) => Ok(SubsetStrategy::SingletonGreedy),
        ("endpoints", None) => Ok(SubsetStrategy::Endpoints),
        ("explicit", Some(list)) => Ok(SubsetStrategy::Explicit(
            list.split(',').filter(|s| !s.trim().is_empty()).map(|v| vertex(job, v)).collect::<CliResult<_>>()?,
        )),
        ("explicit", None) => Err(Failure::Input("`--subsets explicit` needs a vertex list".into())),
        (mode, _) => Err(Failure::Input(format!("unknown subset mode `{mode}`"))),
    }
}

fn report(g: &Global, file: &Path, subsets: &[String], timing: bool) -> CliResult<()> {
    let (entry, job) = load(file, g)?;
    let opts = ReportOptions { strategy: strategy(&job, subsets)?, cutoff: g.cutoff, seed: g.seed, timing };
    let mut r = bound_report(&entry.name, &job.algebra, &opts)?;
    r.annotations = entry.notes.clone();
    print!("{}", if g.csv { r.to_csv() } else { r.to_json() });
    Ok(())
}

fn corpus_run(g: &Global, dir: &Path) -> CliResult<()> {
    let entries = load_corpus_dir(dir)?;
    let opts = ReportOptions { cutoff: g.cutoff, seed: g.seed, ..Default::default() };
    let outcomes: Vec<Result<EntryOutcome, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = entries.iter().map(|e| s.spawn(|| check_entry(e, &opts))).collect();
        handles.into_iter().map(|h| h.join().expect("corpus worker panicked")).collect()
    });
    let mut failed = 0;
    let mut rows = Vec::new();
    for (e, out) in entries.iter().zip(outcomes) {
        let out = out?;
        if !out.passed() {
            failed += 1;
        }
        if g.json {
            rows.push(json!({
                "name": e.name,
                "passed": out.passed(),
                "checked": out.checked,
                "mismatches": out.mismatches,
                "report": out.report,
            }));
        } else {
            println!("{} {} ({} values)", if out.passed() { "PASS" } else { "FAIL" }, e.name, out.checked);
            for m in &out.mismatches {
                println!("    {m}");
            }
        }
    }
    if g.json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialise"));
    } else {
        println!("{} entries, {failed} failed", entries.len());
    }
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} corpus entries differ from their golden values")));
    }
    Ok(())
}

fn corpus_list(dir: &Path) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    for e in load_corpus_dir(dir)? {
        // stop quietly when the reader goes away (e.g. piped into head)
        if writeln!(
            out,
            "{}\tvertices={}\tdim={}\tgolden={}",
            e.name,
            e.algebra.num_vertices(),
            e.algebra.dim(),
            e.golden.len()
        )
        .is_err()
        {
            break;
        }
    }
    Ok(())
}

fn corpus_add(g: &Global, dir: &Path, file: &Path, name: Option<&str>) -> CliResult<()> {
    load(file, g)?;
    let name = name.map(str::to_string).unwrap_or_else(|| entry_name(file));
    let target = dir.join(format!("{name}.{ENTRY_EXTENSION}"));
    if target.exists() {
        return Err(Failure::Input(format!("{} already exists", target.display())));
    }
    std::fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    write_or_print(Some(&target), &with_field(&read(file)?, g.field.as_deref()))?;
    println!("added {}", target.display());
    Ok(())
}

fn certify_make(
    g: &Global,
    file: &Path,
    lemma33: Option<&str>,
    subset: &[String],
    module: Option<&str>,
    output: Option<&Path>,
) -> CliResult<()> {
    let (_, job) = load(file, g)?;
    let cert = match (lemma33, module) {
        (Some(res), _) => resolution_to_filtration(&job.resolution(res)?)?,
        (None, Some(spec)) => {
            let m = module_spec(&job, spec)?;
            let members: Vec<usize> = subset.iter().map(|v| vertex(&job, v)).collect::<CliResult<_>>()?;
            let cutoff = g.cutoff.unwrap_or_else(|| default_cutoff(&job.algebra));
            let s = SimpleSubset::validated(&job.algebra, &members, &simple_dimensions(&job.algebra, cutoff))?;
            thm319_certificate(&s, &m)?
        }
        (None, None) => return Err(Failure::Input("give --thm319 with -M, or --lemma33".into())),
    };
    write_or_print(output, &cert.to_json_string())
}

fn certify_verify(g: &Global, file: &Path) -> CliResult<()> {
    let cert = FiltrationCertificate::from_json_str(&read(file)?)?;
    let verdict = verify_filtration(&cert, cert.root.module(), cert.claimed_depth)?;
    let gen_dims: Vec<usize> = cert.generator.iter().map(Representation::dim).collect();
    if g.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "valid": verdict.valid,
                "depth": verdict.depth,
                "claimed_depth": cert.claimed_depth,
                "root_dims": cert.root.module().dims(),
                "generator_dims": gen_dims,
                "failure": verdict.failure.as_ref().map(|f| json!({"path": f.path, "reason": f.reason})),
            }))
            .expect("verdict serialises")
        );
    } else if verdict.valid {
        println!("OK depth {} (claimed {})", verdict.depth, cert.claimed_depth);
        println!("root dims {:?}", cert.root.module().dims());
        println!("generator: {} pieces, dimensions {:?}", gen_dims.len(), gen_dims);
    } else if let Some(f) = &verdict.failure {
        println!("FAIL at {}: {}", f.path, f.reason);
    }
    if verdict.valid {
        Ok(())
    } else {
        Err(Failure::Mismatch("certificate rejected".into()))
    }
}

fn search_membership(
    g: &Global,
    file: &Path,
    module: &str,
    generator: &[String],
    n: usize,
    output: Option<&Path>,
) -> CliResult<()> {
    let (_, job) = load(file, g)?;
    let m = module_spec(&job, module)?;
    let t: Vec<Representation> = generator.iter().map(|s| module_spec(&job, s)).collect::<CliResult<_>>()?;
    let budget = SearchBudget::new(g.budget_dim);
    let (status, detail) = match tn_membership_search(&m, &t, n, &budget)? {
        MembershipOutcome::Found(cert) => {
            let verdict = verify_filtration(&cert, &m, n)?;
            if let Some(p) = output {
                write_or_print(Some(p), &cert.to_json_string())?;
            }
            ("found", format!("certificate of depth {} verifies: {}", cert.depth(), verdict.valid))
        }
        MembershipOutcome::NotInAdd => ("not-in-add", "the module is not in add T".to_string()),
        MembershipOutcome::Unknown(why) => ("unknown", why),
    };
    if g.json {
        println!("{}", json!({"status": status, "detail": detail}));
    } else {
        println!("{status}: {detail}");
    }
    Ok(())
}

fn search_extdim(g: &Global, file: &Path) -> CliResult<()> {
    let (_, job) = load(file, g)?;
    let budget = SearchBudget::new(g.budget_dim);
    let r = extension_dim_bruteforce(&job.algebra, g.budget_dim, &budget)?;
    let (kind, value) = match r.estimate {
        DimEstimate::Exactly(v) => ("exactly", v),
        DimEstimate::AtMost(v) => ("at_most", v),
    };
    if g.json {
        let dims: Vec<&[usize]> = r.indecomposables.iter().map(Representation::dims).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "estimate": {"kind": kind, "value": value},
                "indecomposables": dims,
                "modules_enumerated": r.modules_enumerated,
                "explanation": r.explanation,
            }))
            .expect("search result serialises")
        );
    } else {
        println!("extension dimension {} {value}", kind.replace('_', " "));
        println!("{} indecomposables among {} modules", r.indecomposables.len(), r.modules_enumerated);
        if let Some(why) = &r.explanation {
            println!("{why}");
        }
    }
    Ok(())
}

fn omega(g: &Global, file: &Path, module: &str, k: i64) -> CliResult<()> {
    let (_, job) = load(file, g)?;
    let m = module_spec(&job, module)?;
    let name = format!("Omega{}", if k < 0 { format!("m{}", -k) } else { k.to_string() });
    println!("{}", module_literal(&name, &syzygy(&m, k)).trim_end());
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let g = &cli.global;
    match cli.command {
        Command::Report { file, subsets, timing } => report(g, &file, &subsets, timing),
        Command::Corpus { dir, action } => match action {
            CorpusAction::Run => corpus_run(g, &dir),
            CorpusAction::List => corpus_list(&dir),
            CorpusAction::Add { file, name } => corpus_add(g, &dir, &file, name.as_deref()),
        },
        Command::Certify { action } => match action {
            CertifyAction::Make { file, thm319: _, lemma33, subset, module, output } => {
                certify_make(g, &file, lemma33.as_deref(), &subset, module.as_deref(), output.as_deref())
            }
            CertifyAction::Verify { file } => certify_verify(g, &file),
        },
        Command::Search { action } => match action {
            SearchAction::Membership { file, module, generator, n, output } => {
                search_membership(g, &file, &module, &generator, n, output.as_deref())
            }
            SearchAction::Extdim { file } => search_extdim(g, &file),
        },
        Command::Omega { file, module, k } => omega(g, &file, &module, k),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("extdim: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("extdim: {msg}");
            ExitCode::from(2)
        }
    }
}
