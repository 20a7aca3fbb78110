use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use k3walls::report::{render_checks, render_cones, render_header, render_walls};
use k3walls::{
    load_annotations, load_run, parse_config, render_halfplane_svg, render_ns_cone_svg, render_report, run_pipeline,
    Annotations, Error, RunConfig, RunReport,
};

/// Walls, chambers and birational cones for moduli of sheaves on a K3
/// surface of Picard rank one.
#[derive(Parser)]
#[command(name = "k3walls", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Walls found along the search rays, with holes and classification.
    Walls,
    /// Orthogonal basis of v-perp and the positive, movable and nef cones.
    Cones,
    /// Full report; written to OUT/report.txt when an output directory is set.
    Report,
    /// Write OUT/halfplane.svg and OUT/ns_cone.svg.
    Figures,
}

#[derive(Args)]
struct Opts {
    /// Run configuration file (key = value).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Degree H^2 of the polarization.
    #[arg(long, global = true)]
    h2: Option<i64>,
    /// Mukai vector as r,c,s.
    #[arg(long, global = true, allow_hyphen_values = true)]
    v: Option<String>,
    /// Largest rank searched for destabilizing classes; 0 skips the search.
    #[arg(long, global = true)]
    rank_bound: Option<u64>,
    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Pixels per unit in the figures.
    #[arg(long, global = true)]
    scale: Option<u64>,
}

/// Config file (if any) with command-line overrides applied, re-validated.
fn load(opts: &Opts) -> k3walls::Result<(RunConfig, Annotations)> {
    let (mut text, base) = match &opts.config {
        Some(path) => {
            let (config, _) = load_run(path)?;
            (config.serialize(), path.parent().map(Path::to_path_buf).unwrap_or_default())
        }
        None => (String::new(), PathBuf::from(".")),
    };
    if let Some(h2) = opts.h2 {
        text.push_str(&format!("h2 = {h2}\n"));
    }
    if let Some(v) = &opts.v {
        text.push_str(&format!("v = {v}\n"));
    }
    if let Some(n) = opts.rank_bound {
        text.push_str(&format!("rank_bound = {n}\n"));
    }
    if let Some(n) = opts.scale {
        text.push_str(&format!("scale = {n}\n"));
    }
    let config = parse_config(&text)?;
    let annotations = load_annotations(&config, &base)?;
    Ok((config, annotations))
}

fn out_dir(opts: &Opts, report: &RunReport) -> Option<PathBuf> {
    opts.out.clone().or_else(|| report.config.out.as_ref().map(PathBuf::from))
}

fn write(path: &Path, contents: &str) -> k3walls::Result<()> {
    let io = |e: std::io::Error| Error::Io { path: path.display().to_string(), message: e.to_string() };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    fs::write(path, contents).map_err(io)
}

fn run(cli: &Cli) -> k3walls::Result<()> {
    let (config, annotations) = load(&cli.opts)?;
    let report = run_pipeline(&config, &annotations)?;
    match cli.command {
        Command::Walls => print!("{}{}", render_header(&report), render_walls(&report)),
        Command::Cones => print!("{}{}{}", render_header(&report), render_cones(&report), render_checks(&report)),
        Command::Report => {
            let text = render_report(&report);
            match out_dir(&cli.opts, &report) {
                Some(dir) => {
                    let path = dir.join("report.txt");
                    write(&path, &text)?;
                    println!("{}", path.display());
                }
                None => print!("{text}"),
            }
        }
        Command::Figures => {
            let dir = out_dir(&cli.opts, &report).unwrap_or_else(|| PathBuf::from("."));
            for (name, svg) in
                [("halfplane.svg", render_halfplane_svg(&report)), ("ns_cone.svg", render_ns_cone_svg(&report))]
            {
                let path = dir.join(name);
                write(&path, &svg)?;
                println!("{}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config_error() { 2 } else { 3 })
        }
    }
}
