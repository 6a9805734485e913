use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sylowizer::catalog::{builtin_catalog, GroupFile};
use sylowizer::classify;
use sylowizer::error::Result;
use sylowizer::harness::{RunConfig, Statement};
use sylowizer::lattice::all_subgroups;
use sylowizer::sigma::{
    complete_hall_sets, is_sigma_full_of_sylow_type, prime_divisors, SigmaPartition, SigmaProfile,
};
use sylowizer::sylowizer::sylowizers;
use sylowizer::{harness, Error};

#[derive(Parser)]
#[command(name = "sylowizer", version, about = "Hall subgroups, sylowizers, and statement verification for small permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print sigma(G), Hall sets, Sylow-type verdict, and classifiers
    Analyze {
        /// Group file
        file: PathBuf,
        /// Sigma partition, e.g. "2|3" or "2,3|5"
        #[arg(long)]
        sigma: String,
    },
    /// List the sigma_i-sylowizers of a subgroup
    Sylowizers {
        /// Group file
        file: PathBuf,
        /// Sigma partition, e.g. "2|3"
        #[arg(long)]
        sigma: String,
        /// Active block index (0-based)
        #[arg(long)]
        block: usize,
        /// Generators of R, comma separated cycle notation
        #[arg(long)]
        subgroup: String,
    },
    /// Verify the statement suite over a group file or a directory of them
    Verify(VerifyArgs),
    /// Catalog utilities
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Group file, or directory of group files
    path: PathBuf,
    /// Comma-separated statement ids (default: all of L2.1..L2.4, T2.5, T2.6)
    #[arg(long)]
    statements: Option<String>,
    /// Maximum number of explicit blocks per sigma partition
    #[arg(long, default_value_t = 3)]
    max_blocks: usize,
    /// Generators of the normal subgroup E for T2.6 (default: the whole group)
    #[arg(long)]
    normal_e: Option<String>,
    /// Emit line-delimited JSON reports instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Generate group files for built-in families
    Gen {
        /// Family spec, e.g. "S3..S5, A4, D8, Q8, S3xC3"
        #[arg(long)]
        families: String,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
}

fn load_group_file(path: &Path) -> Result<GroupFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    GroupFile::parse(&text)
}

fn cmd_analyze(file: &Path, sigma: &str) -> Result<()> {
    let gf = load_group_file(file)?;
    let group = gf.build()?;
    let partition = SigmaPartition::parse(sigma)?;
    let profile = SigmaProfile::new(group.order(), &partition);
    let lattice = all_subgroups(&group)?;

    println!("group: {} (order {}, degree {})", gf.name, group.order(), group.degree());
    let primes: Vec<String> = prime_divisors(group.order()).iter().map(|p| p.to_string()).collect();
    println!("pi(G): {{{}}}", primes.join(", "));
    println!("sigma: {partition}");
    for (i, block) in profile.active_blocks().enumerate() {
        let halls = sylowizer::sigma::hall_subgroups(&lattice, block);
        println!("block {i} = {block}: {} Hall subgroup(s)", halls.len());
        for h in &halls {
            println!("  order {}: {}", h.order(), h.describe());
        }
    }
    let sets = complete_hall_sets(&lattice, &profile);
    println!("complete Hall sigma-sets: {}", sets.len());
    println!(
        "sigma-full of Sylow type: {}",
        is_sigma_full_of_sylow_type(&lattice, &profile)
    );
    let full = lattice.full_group();
    let (supersoluble, _) = classify::is_supersoluble(&group, &lattice);
    println!("cyclic: {}", classify::is_cyclic(full));
    println!("abelian: {}", classify::is_abelian(full));
    println!("nilpotent: {}", classify::is_nilpotent(full));
    println!("supersoluble: {supersoluble}");
    println!("soluble: {}", classify::is_soluble(&group, &lattice));
    Ok(())
}

fn cmd_sylowizers(file: &Path, sigma: &str, block_idx: usize, subgroup: &str) -> Result<()> {
    let gf = load_group_file(file)?;
    let group = gf.build()?;
    let partition = SigmaPartition::parse(sigma)?;
    let profile = SigmaProfile::new(group.order(), &partition);
    let lattice = all_subgroups(&group)?;
    let blocks: Vec<_> = profile.active_blocks().cloned().collect();
    let block = blocks
        .get(block_idx)
        .ok_or_else(|| Error::Invalid(format!("block index {block_idx} out of range (0..{})", blocks.len())))?;
    let r = harness::parse_subgroup(&group, subgroup)?;
    let found = sylowizers(&lattice, &r, block)?;
    println!(
        "R = {} (order {}), block {block}: {} sylowizer(s)",
        r.describe(),
        r.order(),
        found.len()
    );
    for s in &found {
        println!("  order {} (index {}): {}", s.order(), group.order() / s.order(), s.describe());
    }
    Ok(())
}

fn collect_group_files(path: &Path) -> Result<Vec<GroupFile>> {
    if path.is_dir() {
        let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect();
        entries.sort();
        entries.iter().map(|p| load_group_file(p)).collect()
    } else {
        Ok(vec![load_group_file(path)?])
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let catalog = collect_group_files(&args.path)?;
    let statements = match &args.statements {
        None => Statement::ALL.to_vec(),
        Some(text) => text
            .split(',')
            .map(|s| Statement::parse(s.trim()))
            .collect::<Result<Vec<_>>>()?,
    };
    if args.max_blocks == 0 {
        return Err(Error::Invalid("--max-blocks must be at least 1".into()));
    }
    let config = RunConfig {
        max_blocks: args.max_blocks,
        statements,
        normal_e: args.normal_e.clone(),
        ..RunConfig::default()
    };
    let run = harness::run_catalog(&catalog, &config);
    for report in &run.reports {
        if args.json {
            println!("{}", report.to_json_line());
        } else {
            println!("{}", report.to_text_line());
        }
    }
    if !args.json {
        for (statement, by_status) in &run.summary.counts {
            let parts: Vec<String> = by_status.iter().map(|(s, n)| format!("{s}: {n}")).collect();
            println!("summary {statement}: {}", parts.join(", "));
        }
        for s in &run.summary.skipped {
            println!("skipped {s}");
        }
    }
    Ok(run.summary.counterexamples() == 0)
}

fn cmd_catalog_gen(families: &str, out: &Path) -> Result<()> {
    let files = builtin_catalog(families)?;
    std::fs::create_dir_all(out).map_err(|e| Error::Invalid(format!("{}: {e}", out.display())))?;
    for f in &files {
        let path = out.join(format!("{}.group", f.name));
        std::fs::write(&path, f.emit()).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Analyze { file, sigma } => cmd_analyze(file, sigma).map(|_| true),
        Command::Sylowizers {
            file,
            sigma,
            block,
            subgroup,
        } => cmd_sylowizers(file, sigma, *block, subgroup).map(|_| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Catalog {
            command: CatalogCommand::Gen { families, out },
        } => cmd_catalog_gen(families, out).map(|_| true),
    }
}

fn main() -> ExitCode {
    if let Ok(workers) = std::env::var("SYLOWIZER_WORKERS") {
        if let Ok(n) = workers.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
