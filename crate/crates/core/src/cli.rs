//! Command-line surface. [`run`] takes explicit streams so it can be driven
//! in-process by tests.

use std::fs;
use std::io::{Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounded::{delta_k_witness, enumerate_bounded, BoundedContext, EnumSession};
use crate::error::{Error, Result};
use crate::gen::{gen_parallel_paths, gen_random};
use crate::graph::{Graph, Separator};
use crate::hardness::build_gadget;
use crate::important::{important_separators, CutProblem};
use crate::io::{
    parse_gr, parse_set_cover, parse_vertex_list, write_gadget, write_gr, OutputFormat,
    SeparatorWriter,
};
use crate::oracle::{brute_delta, brute_important_separators, brute_minimal_separators};
use crate::takata::{delta_nonempty_witness, enumerate_all, EnumContext, TakataNode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EMPTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "minsep",
    version,
    about = "Enumerate minimal a,b-separators of bounded size"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Terminals {
    /// Input .gr file; stdin when absent or "-".
    pub input: Option<PathBuf>,
    /// First terminal (1-indexed).
    #[arg(long = "a")]
    pub a: usize,
    /// Second terminal (1-indexed).
    #[arg(long = "b")]
    pub b: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Stop after this many separators.
    #[arg(long)]
    pub limit: Option<u64>,
    /// Use the brute-force oracle instead of the fast enumerator.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal a,b-separators with at most k vertices.
    Enum {
        #[command(flatten)]
        terminals: Terminals,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// All minimal a,b-separators.
    EnumAll {
        #[command(flatten)]
        terminals: Terminals,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Important A,B-separators with at most k vertices.
    Important {
        input: Option<PathBuf>,
        /// Source side A (1-indexed list).
        #[arg(long = "from")]
        source: String,
        /// Target side B (1-indexed list).
        #[arg(long = "to")]
        target: String,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide whether some minimal a,b-separator avoids C, contains X and
    /// (with --k) has at most k vertices. Exit 0 with a witness, or 1.
    CheckDelta {
        #[command(flatten)]
        terminals: Terminals,
        /// The set C (1-indexed list, must contain a).
        #[arg(long = "c")]
        inside: String,
        /// The set X (1-indexed list).
        #[arg(long = "x", default_value = "")]
        forced: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        oracle: bool,
    },
    /// Set-cover instance to gadget graph in .gr form.
    Gadget {
        /// Set-cover file; stdin when absent or "-".
        input: Option<PathBuf>,
    },
    /// Brute-force minimal a,b-separators (optionally bounded by k), sorted.
    Oracle {
        #[command(flatten)]
        terminals: Terminals,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// a and b joined by q one-vertex paths and p two-vertex paths.
    ParallelPaths {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Random graph with independent edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Streams for one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Error::invalid(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::invalid(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn terminal(g: &Graph, v: usize, name: &str) -> Result<usize> {
    if v == 0 || v > g.n() {
        return Err(Error::invalid(format!(
            "--{name} {v} outside 1..={}",
            g.n()
        )));
    }
    Ok(v - 1)
}

fn load(t: &Terminals, stdin: &mut dyn Read) -> Result<(Graph, usize, usize)> {
    let g = parse_gr(&read_input(&t.input, stdin)?)?;
    let a = terminal(&g, t.a, "a")?;
    let b = terminal(&g, t.b, "b")?;
    if a == b {
        return Err(Error::invalid("--a and --b must differ"));
    }
    Ok((g, a, b))
}

/// Writes through `writer` until the limit is reached; reports I/O failures.
struct LimitedSink<W: Write> {
    writer: SeparatorWriter<W>,
    limit: Option<u64>,
    error: Option<std::io::Error>,
}

impl<W: Write> LimitedSink<W> {
    fn new(out: W, format: OutputFormat, limit: Option<u64>) -> Self {
        LimitedSink {
            writer: SeparatorWriter::new(out, format),
            limit,
            error: None,
        }
    }

    fn exhausted(&self) -> bool {
        self.limit.is_some_and(|r| self.writer.count() >= r)
    }

    fn accept(&mut self, s: &Separator) -> ControlFlow<()> {
        if self.exhausted() {
            return ControlFlow::Break(());
        }
        if let Err(e) = self.writer.write(s) {
            self.error = Some(e);
            return ControlFlow::Break(());
        }
        if self.exhausted() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }

    fn finish(self, stderr: &mut dyn Write) -> Result<()> {
        if let Some(e) = self.error {
            return Err(Error::invalid(format!("output: {e}")));
        }
        let _ = writeln!(stderr, "{}", self.writer.summary());
        Ok(())
    }
}

fn emit_all<'a>(
    seps: impl IntoIterator<Item = &'a Separator>,
    output: (OutputFormat, Option<u64>),
    io: &mut Io<'_>,
) -> Result<()> {
    let mut sink = LimitedSink::new(&mut *io.stdout, output.0, output.1);
    for s in seps {
        if sink.accept(s).is_break() {
            break;
        }
    }
    sink.finish(io.stderr)
}

/// Executes one command and returns the process exit status.
pub fn run(cli: Cli, io: &mut Io<'_>) -> i32 {
    match dispatch(cli.command, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32> {
    match command {
        Command::Enum {
            terminals,
            k,
            output,
        } => {
            let (g, a, b) = load(&terminals, io.stdin)?;
            if output.oracle {
                let all = brute_minimal_separators(&g, a, b, Some(k))?;
                emit_all(&all, (output.format, output.limit), io)?;
            } else {
                let mut sink = LimitedSink::new(&mut *io.stdout, output.format, output.limit);
                if !sink.exhausted() {
                    let bctx = BoundedContext::new(EnumContext::new(&g, a, b)?, k);
                    enumerate_bounded(bctx, |s| sink.accept(s));
                }
                sink.finish(io.stderr)?;
            }
            Ok(EXIT_OK)
        }
        Command::EnumAll { terminals, output } => {
            let (g, a, b) = load(&terminals, io.stdin)?;
            if output.oracle {
                let all = brute_minimal_separators(&g, a, b, None)?;
                emit_all(&all, (output.format, output.limit), io)?;
            } else {
                let mut sink = LimitedSink::new(&mut *io.stdout, output.format, output.limit);
                if !sink.exhausted() {
                    enumerate_all(&EnumContext::new(&g, a, b)?, |s| sink.accept(s));
                }
                sink.finish(io.stderr)?;
            }
            Ok(EXIT_OK)
        }
        Command::Important {
            input,
            source,
            target,
            k,
            output,
        } => {
            let g = parse_gr(&read_input(&input, io.stdin)?)?;
            let source = parse_vertex_list(&source, g.n())?;
            let target = parse_vertex_list(&target, g.n())?;
            let found: Vec<Separator> = if output.oracle {
                brute_important_separators(&g, &source, &target, k)?
                    .into_iter()
                    .collect()
            } else {
                important_separators(&g, &CutProblem::new(&g, source, target, k)?)
            };
            emit_all(&found, (output.format, output.limit), io)?;
            Ok(EXIT_OK)
        }
        Command::CheckDelta {
            terminals,
            inside,
            forced,
            k,
            oracle,
        } => {
            let (g, a, b) = load(&terminals, io.stdin)?;
            let ctx = EnumContext::new(&g, a, b)?;
            let node = TakataNode::new(
                parse_vertex_list(&inside, g.n())?,
                parse_vertex_list(&forced, g.n())?,
            );
            node.validate(&ctx)?;
            let witness = check_delta(&ctx, &node, k, oracle)?;
            match witness {
                Some(s) => {
                    let mut w = SeparatorWriter::new(&mut *io.stdout, OutputFormat::Lines);
                    w.write(&s)
                        .map_err(|e| Error::invalid(format!("output: {e}")))?;
                    let _ = writeln!(io.stderr, "# nonempty");
                    Ok(EXIT_OK)
                }
                None => {
                    let _ = writeln!(io.stderr, "# empty");
                    Ok(EXIT_EMPTY)
                }
            }
        }
        Command::Gadget { input } => {
            let inst = parse_set_cover(&read_input(&input, io.stdin)?)?;
            let text = write_gadget(&build_gadget(&inst));
            io.stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::invalid(format!("output: {e}")))?;
            Ok(EXIT_OK)
        }
        Command::Oracle {
            terminals,
            k,
            limit,
            format,
        } => {
            let (g, a, b) = load(&terminals, io.stdin)?;
            let all = brute_minimal_separators(&g, a, b, k)?;
            emit_all(&all, (format, limit), io)?;
            Ok(EXIT_OK)
        }
        Command::Gen(gcmd) => {
            let text = match gcmd {
                GenCommand::ParallelPaths { p, q, seed } => {
                    let gen = gen_parallel_paths(p, q, seed);
                    let comments = vec![format!("a {}", gen.a + 1), format!("b {}", gen.b + 1)];
                    write_gr(&gen.graph, &comments)
                }
                GenCommand::Random { n, prob, seed } => {
                    if !(0.0..=1.0).contains(&prob) {
                        return Err(Error::invalid("--prob must lie in [0, 1]"));
                    }
                    write_gr(&gen_random(n, prob, seed), &[])
                }
            };
            io.stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::invalid(format!("output: {e}")))?;
            Ok(EXIT_OK)
        }
    }
}

fn check_delta(
    ctx: &EnumContext<'_>,
    node: &TakataNode,
    k: Option<usize>,
    oracle: bool,
) -> Result<Option<Separator>> {
    if oracle {
        let found = brute_delta(ctx.graph(), k, &node.inside, &node.forced, ctx.a(), ctx.b())?;
        return Ok(found.into_iter().next());
    }
    let Some(k) = k else {
        return Ok(delta_nonempty_witness(ctx, node));
    };
    let mut sink = |_: &Separator| ControlFlow::Continue(());
    let mut session = EnumSession::new(BoundedContext::new(*ctx, k), &mut sink);
    Ok(delta_k_witness(&mut session, node)
        .continue_value()
        .flatten())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, io),
        Err(e) if e.use_stderr() => {
            let _ = write!(io.stderr, "{e}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = write!(io.stdout, "{e}");
            EXIT_OK
        }
    }
}
