mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::render::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "dyck-frames",
    version,
    about = "Frames of Dyck paths and exact lattice-path counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Lift the enumeration caps (Dyck half-length 16, Motzkin length 14,
    /// frame half-length 20).
    #[arg(long, global = true, env = "DYCK_FRAMES_ALLOW_LARGE")]
    allow_large: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dyck paths of length 2n by number of feet at one level.
    FeetTable {
        /// Largest half-length n.
        #[arg(long = "max")]
        max_half_length: usize,
        #[arg(long, default_value_t = 0)]
        level: usize,
    },
    /// Admissibility, cardinality and canonical path of a frame.
    Frame {
        /// Comma-separated foot counts, e.g. 3,4,3,1.
        #[arg(long)]
        frame: String,
    },
    /// Exact path counts.
    Count(CountArgs),
    /// List paths in enumeration order.
    Enumerate(EnumerateArgs),
    /// Check every closed form against brute-force enumeration.
    Verify {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    Dyck,
    Motzkin,
    KMotzkin,
}

#[derive(Debug, Args)]
struct CountArgs {
    kind: CountKind,
    /// Half-length for dyck, length otherwise.
    #[arg(long)]
    n: usize,
    /// Level of the horizontal steps (k-motzkin only).
    #[arg(long)]
    k: Option<usize>,
    /// Horizontal colors per level; a single value r for k-motzkin.
    #[arg(long, value_delimiter = ',')]
    colors_h: Option<Vec<u64>>,
    /// Up-step colors per gap between consecutive levels.
    #[arg(long, value_delimiter = ',')]
    colors_u: Option<Vec<u64>>,
    /// Down-step colors per gap between consecutive levels.
    #[arg(long, value_delimiter = ',')]
    colors_d: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathKind {
    Dyck,
    Motzkin,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    kind: PathKind,
    /// Half-length for dyck, length for motzkin.
    #[arg(long)]
    n: usize,
    /// Keep only Dyck paths with this frame.
    #[arg(long)]
    frame: Option<String>,
    /// Levels allowed to carry horizontal steps (motzkin only).
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    levels: Option<Vec<usize>>,
    /// Print each Dyck path's frame next to it.
    #[arg(long)]
    show_frame: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = if cli.allow_large {
        dyck_frames::Limits::unbounded()
    } else {
        dyck_frames::Limits::default()
    };
    let outcome = match &cli.command {
        Command::FeetTable {
            max_half_length,
            level,
        } => commands::feet_table(*max_half_length, *level, &limits, cli.format),
        Command::Frame { frame } => commands::frame_info(frame, cli.format),
        Command::Count(args) => commands::count(args, &limits, cli.format),
        Command::Enumerate(args) => commands::enumerate(args, &limits, cli.format),
        Command::Verify {
            max_n,
            inject_fault,
        } => commands::verify(*max_n, *inject_fault, limits, cli.format),
    };
    match outcome {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(output.text.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(output.status)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_status())
        }
    }
}
