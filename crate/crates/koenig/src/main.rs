use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use koenig_core::algebra::{emit_algebra_script, minimal_primes};
use koenig_core::recognition::{
    find_asteroidal_triple, find_weakly_closed_ordering_with_budget, DEFAULT_ORDERING_BUDGET,
};
use koenig_core::{parse_graph6, Graph, InvariantReport};

use koenig::batch::{self, BatchOptions, LineIssue, RecordSink, DEFAULT_CHECKPOINT_EVERY};
use koenig::record::{primes_to_json, GraphRecord, OutputFormat, RecordWriter};
use koenig::scripts::write_scripts;
use koenig::{HarnessError, InputSource};

#[derive(Parser)]
#[command(
    name = "koenig",
    version,
    about = "Binomial edge ideal invariants of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a graph6 stream and write one record per graph.
    Analyze {
        #[command(flatten)]
        run: RunArgs,
        /// Keep only graphs passing these filters.
        #[arg(long, value_enum, value_delimiter = ',')]
        filter: Vec<FilterArg>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Also run the AT-free test.
        #[arg(long)]
        at_free: bool,
        /// Also search for a weakly closed ordering.
        #[arg(long)]
        weakly_closed: bool,
        /// Include witnesses and certificates in JSON output.
        #[arg(long)]
        certificates: bool,
    },
    /// Check every connected AT-free input graph for the König property.
    VerifyConjecture {
        #[command(flatten)]
        run: RunArgs,
        /// Write counterexamples as JSON lines to this file.
        #[arg(long)]
        counterexamples: Option<PathBuf>,
    },
    /// Print the invariant report of one graph.
    Check {
        graph6: String,
        #[arg(long, default_value_t = DEFAULT_ORDERING_BUDGET)]
        ordering_budget: u64,
    },
    /// Print the minimal primes of J(G) as JSON.
    Primes { graph6: String },
    /// Emit Macaulay2 scripts checking the predicted ideal invariants.
    EmitScript {
        /// Print the script for this graph to standard output.
        graph6: Option<String>,
        /// Read graphs from these files instead.
        #[arg(long, conflicts_with = "graph6")]
        input: Vec<PathBuf>,
        #[arg(long, default_value = "scripts")]
        out_dir: PathBuf,
    },
    /// Report an asteroidal triple, or that none exists.
    Atfree { graph6: String },
    /// Search for a weakly closed vertex ordering.
    WeaklyClosed {
        graph6: String,
        #[arg(long, default_value_t = DEFAULT_ORDERING_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
struct RunArgs {
    /// graph6 input files, `.gz` allowed; standard input when omitted.
    #[arg(long, short)]
    input: Vec<PathBuf>,
    /// Worker threads.
    #[arg(long, short, default_value_t = 1)]
    jobs: usize,
    /// Resume from and update this checkpoint file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Input lines between checkpoints.
    #[arg(long, default_value_t = DEFAULT_CHECKPOINT_EVERY)]
    checkpoint_every: usize,
    /// Fail on the first malformed line instead of skipping it.
    #[arg(long)]
    strict: bool,
    #[arg(long, default_value_t = DEFAULT_ORDERING_BUDGET)]
    ordering_budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Connected,
    Atfree,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl RunArgs {
    fn options(&self) -> BatchOptions {
        let input = if self.input.is_empty() || self.input.iter().any(|p| p.as_os_str() == "-") {
            InputSource::Stdin
        } else {
            InputSource::Files(self.input.clone())
        };
        let mut opts = BatchOptions::new(input);
        opts.jobs = self.jobs;
        opts.checkpoint = self.checkpoint.clone();
        opts.checkpoint_every = self.checkpoint_every;
        opts.strict = self.strict;
        opts.ordering_budget = self.ordering_budget;
        opts
    }
}

struct WriterSink<W: Write> {
    writer: RecordWriter<W>,
}

impl<W: Write> RecordSink for WriterSink<W> {
    fn record(&mut self, record: &GraphRecord) -> Result<(), HarnessError> {
        self.writer.write(record)
    }

    fn issue(&mut self, issue: &LineIssue) {
        eprintln!("warning: skipped {issue}");
    }
}

struct WarnSink;

impl RecordSink for WarnSink {
    fn record(&mut self, _: &GraphRecord) -> Result<(), HarnessError> {
        Ok(())
    }

    fn issue(&mut self, issue: &LineIssue) {
        eprintln!("warning: skipped {issue}");
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn graph(text: &str) -> Result<Graph, HarnessError> {
    parse_graph6(text).map_err(|source| HarnessError::Malformed { line: 1, source })
}

fn report(g: &Graph) -> Result<InvariantReport, HarnessError> {
    InvariantReport::compute(g).map_err(|source| HarnessError::Unsupported { line: 1, source })
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    let stdout = io::stdout();
    match cli.command {
        Command::Analyze {
            run,
            filter,
            format,
            at_free,
            weakly_closed,
            certificates,
        } => {
            let mut opts = run.options();
            for f in filter {
                match f {
                    FilterArg::Connected => opts.filters.connected = true,
                    FilterArg::Atfree => opts.filters.at_free = true,
                }
            }
            opts.selection.at_free = at_free;
            opts.selection.weakly_closed = weakly_closed;
            let format = match format {
                FormatArg::Json => OutputFormat::JsonLines,
                FormatArg::Csv => OutputFormat::Csv,
            };
            // a resumed run appends to earlier output, so it gets no header
            let resuming = match &opts.checkpoint {
                Some(path) => koenig::checkpoint::Checkpoint::load(path)?.is_some(),
                None => false,
            };
            let out = BufWriter::new(stdout.lock());
            let mut sink = WriterSink {
                writer: RecordWriter::new(out, format, certificates, !resuming),
            };
            let outcome = batch::analyze_stream(&opts, &mut sink)?;
            sink.writer.flush()?;
            let t = &outcome.tally;
            eprintln!(
                "{} graphs read, {} analysed, {} skipped, {} lines consumed{}{}",
                t.graphs_read,
                t.graphs_filtered,
                t.malformed,
                outcome.lines_consumed,
                if outcome.complete { "" } else { ", incomplete" },
                if outcome.resumed_from > 0 {
                    format!(" (resumed at line {})", outcome.resumed_from + 1)
                } else {
                    String::new()
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyConjecture {
            run,
            counterexamples,
        } => {
            let opts = run.options();
            let summary = batch::verify_conjecture(&opts, &mut WarnSink)?;
            let mut out = stdout.lock();
            serde_json::to_writer_pretty(&mut out, &summary)?;
            writeln!(out)?;
            if let Some(path) = counterexamples {
                let mut f =
                    BufWriter::new(File::create(&path).map_err(|source| HarnessError::Input {
                        path: path.clone(),
                        source,
                    })?);
                for c in &summary.counterexamples {
                    serde_json::to_writer(&mut f, c)?;
                    writeln!(f)?;
                }
                f.flush()?;
            }
            eprintln!("order  connected  at-free  koenig  counterexamples");
            for r in &summary.per_order {
                eprintln!(
                    "{:>5}  {:>9}  {:>7}  {:>6}  {:>15}",
                    r.order, r.connected, r.at_free, r.koenig, r.counterexamples
                );
            }
            eprintln!(
                "{} connected AT-free graphs ({} on three or more vertices), {} counterexamples in {:.1?}",
                summary.at_free_count,
                summary.at_free_count_from_order_3,
                summary.counterexamples.len(),
                summary.elapsed
            );
            Ok(if summary.holds() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Check {
            graph6,
            ordering_budget,
        } => {
            let g = graph(&graph6)?;
            let r = report(&g)?;
            let mut out = stdout.lock();
            writeln!(out, "graph6            {graph6}")?;
            writeln!(out, "vertices          {}", r.order)?;
            writeln!(out, "edges             {}", r.edges)?;
            writeln!(out, "connected         {}", g.is_connected())?;
            writeln!(out, "path cover pi     {}", r.path_cover)?;
            writeln!(out, "scattering sc     {}", r.scattering)?;
            writeln!(out, "sc*               {}", r.unrestricted_scattering)?;
            writeln!(out, "linear forest LF  {}", r.linear_forest_edges)?;
            if let (Some(h), Some(d), Some(u)) = (r.ideal_height, r.quotient_dim, r.unmixed) {
                writeln!(out, "height            {h}")?;
                writeln!(out, "dimension         {d}")?;
                writeln!(out, "unmixed           {u}")?;
            }
            writeln!(out, "minimal primes    {}", r.cut_set_count)?;
            writeln!(out, "koenig type       {}", r.koenig_type)?;
            writeln!(out, "witness set       {}", r.witness_set)?;
            writeln!(out, "witness cover     {:?}", r.witness_cover.paths())?;
            match find_asteroidal_triple(&g) {
                None => writeln!(out, "AT-free           true")?,
                Some(t) => writeln!(out, "AT-free           false, triple {:?}", t.vertices)?,
            }
            match find_weakly_closed_ordering_with_budget(&g, ordering_budget) {
                Ok(Some(o)) => writeln!(out, "weakly closed     true, ordering {:?}", o.ordering)?,
                Ok(None) => writeln!(out, "weakly closed     false")?,
                Err(e) => writeln!(out, "weakly closed     unknown ({e})")?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Primes { graph6 } => {
            let g = graph(&graph6)?;
            let primes = minimal_primes(&g)
                .map_err(|source| HarnessError::Unsupported { line: 1, source })?;
            writeln!(stdout.lock(), "{}", primes_to_json(&primes)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::EmitScript {
            graph6,
            input,
            out_dir,
        } => {
            if let Some(text) = graph6 {
                let g = graph(&text)?;
                let script = emit_algebra_script(&g)
                    .map_err(|source| HarnessError::Unsupported { line: 1, source })?;
                write!(stdout.lock(), "{script}")?;
            } else {
                let source = if input.is_empty() {
                    InputSource::Stdin
                } else {
                    InputSource::Files(input)
                };
                let paths = write_scripts(&source, &out_dir)?;
                eprintln!("wrote {} scripts to {}", paths.len(), out_dir.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Atfree { graph6 } => {
            let g = graph(&graph6)?;
            let mut out = stdout.lock();
            match find_asteroidal_triple(&g) {
                None => writeln!(out, "AT-free")?,
                Some(t) => {
                    writeln!(out, "asteroidal triple {:?}", t.vertices)?;
                    for c in &t.certificates {
                        writeln!(out, "  path {:?} avoids N[{}]", c.path, c.avoided)?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::WeaklyClosed { graph6, budget } => {
            let g = graph(&graph6)?;
            let mut out = stdout.lock();
            match find_weakly_closed_ordering_with_budget(&g, budget) {
                Ok(Some(o)) => writeln!(out, "weakly closed ordering {:?}", o.ordering)?,
                Ok(None) => writeln!(out, "not weakly closed")?,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
