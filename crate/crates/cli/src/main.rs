use std::fs;
use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tcanon::frontend::{parse, StatementKind};
use tcanon::{export, CliError, Flow, Options, Session};
use tcanon_core::TensorError;

#[derive(Parser)]
#[command(name = "tcanon", version, about = "Canonical simplification of indexed tensor expressions")]
struct Cli {
    /// Run statements from FILE instead of the interactive prompt.
    #[arg(long, global = true)]
    script: Option<PathBuf>,
    /// Print each statement before its output.
    #[arg(long)]
    echo: bool,
    /// Largest total number of indices an expression may have.
    #[arg(long, default_value_t = 8, global = true)]
    max_rank: usize,
    /// Store bases with unpacked permutations.
    #[arg(long, global = true)]
    no_packed: bool,
    /// Print the elapsed time after every statement.
    #[arg(long)]
    time: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the basis of a tensor or product, e.g. `ri` or `s2(a3)`,
    /// after running --script to declare it.
    Export {
        #[arg(long)]
        basis: String,
        /// JSON instead of the kbasis listing.
        #[arg(long)]
        json: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Estimated memory for near-complete bases by rank.
    Memtable {
        #[arg(default_value_t = 11)]
        rank: usize,
    },
}

fn report(e: &CliError) {
    match e {
        CliError::Tensor(TensorError::DegreeLimit { .. }) => {
            eprintln!("***** {e} (raise the limit with --max-rank)")
        }
        _ => eprintln!("***** {e}"),
    }
}

fn session(cli: &Cli, echo: bool) -> Session {
    let mut s = Session::new(Options { echo, time: cli.time });
    s.registry_mut().set_max_degree(cli.max_rank);
    if cli.no_packed {
        s.registry_mut().set_packed(false);
    }
    s
}

fn run_script(s: &mut Session, path: &PathBuf, out: &mut dyn Write) -> Result<(), CliError> {
    let src = fs::read_to_string(path)?;
    s.run_source(&src, out, &mut io::stderr())?;
    Ok(())
}

fn repl(s: &mut Session) -> bool {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut out = io::stdout();
    let mut buffer = String::new();
    let mut ok = true;
    loop {
        if interactive {
            print!("{}", if buffer.is_empty() { "> " } else { ". " });
            let _ = out.flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => buffer.push_str(&line),
            Err(e) => {
                eprintln!("***** {e}");
                return false;
            }
        }
        match parse(&buffer) {
            Ok(stmts) => {
                buffer.clear();
                for stmt in &stmts {
                    match s.run(stmt, &mut out, &mut io::stderr()) {
                        Ok(Flow::Ended) => return ok,
                        Ok(Flow::Continue) => {}
                        Err(e) => {
                            report(&e);
                            ok = false;
                            break;
                        }
                    }
                }
            }
            Err(e) if e.incomplete => {}
            Err(e) => {
                report(&e.into());
                buffer.clear();
                ok = false;
            }
        }
    }
    if !buffer.trim().is_empty() {
        if let Err(e) = parse(&buffer) {
            report(&e.into());
        }
        ok = false;
    }
    ok
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Some(Command::Memtable { rank }) => match export::memtable(*rank) {
            Some(table) => {
                print!("{table}");
                Ok(())
            }
            None => {
                eprintln!("***** memtable is limited to rank {}", export::MAX_TABLE_RANK);
                return ExitCode::FAILURE;
            }
        },
        Some(Command::Export { basis, json, output }) => {
            let mut s = session(&cli, false);
            export_basis(&mut s, &cli, basis, *json, output.as_ref())
        }
        None => {
            let mut s = session(&cli, cli.echo);
            match &cli.script {
                Some(path) => run_script(&mut s, path, &mut io::stdout()),
                None => {
                    return if repl(&mut s) { ExitCode::SUCCESS } else { ExitCode::FAILURE };
                }
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            report(&e);
            ExitCode::FAILURE
        }
    }
}

fn export_basis(
    s: &mut Session,
    cli: &Cli,
    spec: &str,
    json: bool,
    output: Option<&PathBuf>,
) -> Result<(), CliError> {
    if let Some(path) = &cli.script {
        run_script(s, path, &mut io::sink())?;
    }
    let stmts = parse(&format!("kbasis {spec};"))?;
    let StatementKind::KBasisQuery(specs) = &stmts[0].kind else {
        unreachable!("kbasis statement");
    };
    let Some((header, basis)) = s.basis(&specs[0])? else {
        return Err(TensorError::NoIndices(specs[0].names[0].clone()).into());
    };
    let text = if json {
        export::to_json(&header, &basis) + "\n"
    } else {
        export::to_text(&header, &basis)
    };
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
