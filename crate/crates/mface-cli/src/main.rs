//! Command-line front end: generate the library's spheres as facet-list
//! files, analyze and certify complexes, apply surgery, and run the
//! reproduction suite.
//!
//! Exit codes: 0 for success or an inconclusive certificate, 2 for usage or
//! parse errors, 10 when non-polytopality is certified.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mface::certify::{nonpolytopality_certificate, Verdict};
use mface::complex::{SimplicialComplex, VertexSet};
use mface::family::family_sphere;
use mface::gale::build_qk;
use mface::generators::{cyclic_boundary, gs8, p042, realize_2sphere};
use mface::io::{looks_like_lutz, read_complex, read_lutz, write_complex};
use mface::report::{analyze, render_human, render_machine};
use mface::repro::{run_all, Status};
use mface::transforms::{
    bistellar_flip, complement_ball, delta_sequence, delta_sequence_2k, delta_tail, gamma_sphere,
    sew, FlipMove,
};

#[derive(Parser)]
#[command(name = "mface", version, about = "Missing-face calculus for simplicial spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a complex and write it as a facet-list file.
    Gen(GenArgs),
    /// Report face vectors, predicates, and bound evaluations for a complex.
    Analyze(AnalyzeArgs),
    /// Run the non-polytopality link tests against a sphere.
    Certify(CertifyArgs),
    /// Apply a bistellar flip, a sewing step, or a complement.
    Transform(TransformArgs),
    /// Run the full reproduction suite and print its pass/fail matrix.
    Repro(ReproArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
}

#[derive(Subcommand)]
enum GenKind {
    /// Boundary of the cyclic d-polytope on n vertices.
    Cyclic {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The double-point polygon sphere on 2k+4 vertices, odd k.
    Qk {
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The 20-facet non-polytopal neighborly 3-sphere on 8 vertices.
    Gs8 {
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The 30-facet neighborly 5-polytope boundary on 9 vertices.
    P042 {
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Member i of the flip ladder over the cyclic 5-polytope boundary.
    /// Indices 1..=n-6 stay neighborly; i = n-5 and i = n-4 opt into the
    /// two extra flips past the neighborly regime.
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Member i of the higher flip ladder in ambient dimension 2k.
    Delta2k {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The sewn sphere over ladder member i with ball parameter k.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The sewing-family member with n vertices (k = 2 or odd k).
    Family {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// A 2-sphere with n vertices and a prescribed missing-triangle count.
    Sphere2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m2: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file: a facet list, or a name=[[...]] triangulation document.
    input: PathBuf,
    /// Emit the flat key=value document instead of the human table.
    #[arg(long)]
    machine: bool,
    /// Skip the per-vertex link table.
    #[arg(long)]
    no_links: bool,
    /// Run the homology-manifold sphere check as well.
    #[arg(long)]
    full: bool,
}

#[derive(Args)]
struct CertifyArgs {
    input: PathBuf,
    /// Middle index override; defaults to half the facet size.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct TransformArgs {
    input: PathBuf,
    /// Bistellar flip given as two vertex lists, e.g. "1,3,9/2,4,8".
    #[arg(long)]
    flip: Option<String>,
    /// Sew a fresh vertex over the ball stored in this facet-list file.
    #[arg(long)]
    sew: Option<PathBuf>,
    /// Label for the sewn vertex; defaults to one past the largest label.
    #[arg(long)]
    vertex: Option<u32>,
    /// Complement of the ball stored in this facet-list file.
    #[arg(long)]
    complement: Option<PathBuf>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReproArgs {
    /// Directory with optional census triangulation files.
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen(args) => {
            let (complex, out) = generate(args.kind)?;
            emit(&complex, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze(args) => {
            let complex = load(&args.input)?;
            let analysis = analyze(&complex, args.full, !args.no_links);
            if args.machine {
                print!("{}", render_machine(&analysis));
            } else {
                print!("{}", render_human(&analysis));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify(args) => {
            let complex = load(&args.input)?;
            let certificate = nonpolytopality_certificate(&complex, args.k).map_err(|e| e.to_string())?;
            println!("k={} n={} d={}", certificate.k, certificate.n, certificate.d);
            match certificate.verdict {
                Verdict::NotPolytopal => {
                    println!("verdict=NOT_POLYTOPAL");
                    println!("rule={}", certificate.rule.map(|r| r.id()).unwrap_or("-"));
                    println!("witness_vertex={}", certificate.witness_vertex.unwrap_or(0));
                    println!("observed={}", certificate.observed.unwrap_or(0));
                    println!("expected={}", certificate.expected.unwrap_or(0));
                    Ok(ExitCode::from(10))
                }
                Verdict::Inconclusive => {
                    println!("verdict=INCONCLUSIVE");
                    println!("reason={}", certificate.reason);
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Transform(args) => {
            let complex = load(&args.input)?;
            let modes = [args.flip.is_some(), args.sew.is_some(), args.complement.is_some()];
            if modes.iter().filter(|&&m| m).count() != 1 {
                return Err("choose exactly one of --flip, --sew, --complement".into());
            }
            let result = if let Some(spec) = &args.flip {
                let mv = parse_flip(spec)?;
                bistellar_flip(&complex, &mv).map_err(|e| e.to_string())?
            } else if let Some(ball_path) = &args.sew {
                let ball = load(ball_path)?;
                let vertex = args
                    .vertex
                    .unwrap_or_else(|| complex.vertices().max_label().unwrap_or(0) + 1);
                sew(&complex, &ball, vertex).map_err(|e| e.to_string())?
            } else {
                let ball = load(args.complement.as_ref().expect("mode checked"))?;
                complement_ball(&complex, &ball).map_err(|e| e.to_string())?
            };
            emit(&result, args.out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Repro(args) => {
            let results = run_all(args.data_dir.as_deref());
            let mut failed = false;
            for result in &results {
                println!("{}", result.line());
                failed |= result.status == Status::Fail;
            }
            if failed {
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn generate(kind: GenKind) -> Result<(SimplicialComplex, Option<PathBuf>), String> {
    match kind {
        GenKind::Cyclic { d, n, out } => Ok((cyclic_boundary(d, n).map_err(|e| e.to_string())?, out)),
        GenKind::Qk { k, out } => Ok((build_qk(k).map_err(|e| e.to_string())?.sphere, out)),
        GenKind::Gs8 { out } => Ok((gs8(), out)),
        GenKind::P042 { out } => Ok((p042(), out)),
        GenKind::Delta { n, i, out } => {
            if n >= 8 && i == n - 5 {
                let (first, _) = delta_tail(n).map_err(|e| e.to_string())?;
                return Ok((first, out));
            }
            if n >= 8 && i == n - 4 {
                let (_, last) = delta_tail(n).map_err(|e| e.to_string())?;
                return Ok((last, out));
            }
            let ladder = delta_sequence(n).map_err(|e| e.to_string())?;
            let member = ladder
                .get(i.wrapping_sub(1))
                .ok_or_else(|| format!("ladder index must lie in 1..={}", n - 4))?;
            Ok((member.clone(), out))
        }
        GenKind::Delta2k { k, n, i, out } => {
            let ladder = delta_sequence_2k(k, n).map_err(|e| e.to_string())?;
            let count = ladder.len();
            let member = ladder
                .get(i.wrapping_sub(1))
                .ok_or_else(|| format!("ladder index must lie in 1..={count}"))?;
            Ok((member.clone(), out))
        }
        GenKind::Gamma { n, i, k, out } => Ok((gamma_sphere(n, i, k).map_err(|e| e.to_string())?, out)),
        GenKind::Family { k, n, out } => Ok((family_sphere(k, n).map_err(|e| e.to_string())?, out)),
        GenKind::Sphere2 { n, m2, out } => Ok((realize_2sphere(n, m2).map_err(|e| e.to_string())?, out)),
    }
}

fn parse_flip(spec: &str) -> Result<FlipMove, String> {
    let (a, b) = spec
        .split_once('/')
        .ok_or("flip must be given as A/B, e.g. 1,3,9/2,4,8")?;
    let parse_side = |side: &str| -> Result<VertexSet, String> {
        let labels: Result<Vec<u32>, _> = side.split(',').map(|t| t.trim().parse::<u32>()).collect();
        VertexSet::checked(labels.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
    };
    Ok(FlipMove::new(parse_side(a)?, parse_side(b)?))
}

fn load(path: &Path) -> Result<SimplicialComplex, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if looks_like_lutz(&text) {
        Ok(read_lutz(&text).map_err(|e| e.to_string())?.1)
    } else {
        read_complex(&text).map_err(|e| e.to_string())
    }
}

fn emit(complex: &SimplicialComplex, out: Option<&Path>) -> Result<(), String> {
    let text = write_complex(complex);
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
