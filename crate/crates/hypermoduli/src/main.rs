use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hypermoduli::codec::Malformed;
use hypermoduli::fixture::load_table;
use hypermoduli::{run_batch, Command, Engine, Report, Request};
use hypermoduli_core::a4::LocusTable;
use serde_json::Value;

/// Exact invariants and moduli of hyperelliptic curves, driven by JSON.
///
/// Without COMMAND the input is a request `{"command": ..., "payload": ...}`;
/// with COMMAND it is the payload alone.
#[derive(Parser, Debug)]
#[command(name = "hypermoduli", version)]
struct Cli {
    /// invariants, classify, vanishing, dihedral, reconstruct, model, recover,
    /// verify-locus or catalogue
    command: Option<String>,

    /// JSON input file, `-` for stdin
    #[arg(long, default_value = "-")]
    input: String,

    /// Output file, `-` for stdout
    #[arg(long, default_value = "-")]
    output: String,

    /// The input is an array of requests (or payloads)
    #[arg(long)]
    batch: bool,

    /// Locus table fixture replacing the built-in table
    #[arg(long)]
    fixture: Option<PathBuf>,

    #[arg(long)]
    pretty: bool,
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn write_output(path: &str, text: &str) -> io::Result<()> {
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.write_all(b"\n")
    } else {
        fs::write(path, format!("{text}\n"))
    }
}

// wraps bare payloads into requests when the command is given on the command line
fn wrap(command: Option<Command>, v: Value) -> Value {
    match command {
        Some(c) => Request {
            command: c,
            payload: v,
        }
        .encode(),
        None => v,
    }
}

fn reports(cli: &Cli, engine: &Engine, command: Option<Command>, text: &str) -> (Value, u8) {
    let parsed: Result<Value, Malformed> = serde_json::from_str(text).map_err(Malformed::from);
    let single = |r: Report| {
        let code = r.exit_code();
        (r.encode(), code)
    };
    match parsed {
        Err(m) => single(engine.reject(m)),
        Ok(v) if cli.batch => {
            let v = match (command, v) {
                (Some(c), Value::Array(items)) => {
                    Value::Array(items.into_iter().map(|i| wrap(Some(c), i)).collect())
                }
                (_, v) => v,
            };
            match run_batch(engine, &v) {
                Ok(rs) => {
                    let code = rs.iter().map(Report::exit_code).max().unwrap_or(0);
                    (Value::Array(rs.iter().map(Report::encode).collect()), code)
                }
                Err(m) => single(engine.reject(m)),
            }
        }
        Ok(v) => match Request::decode(&wrap(command, v), "input") {
            Ok(req) => single(engine.run(&req)),
            Err(m) => single(engine.reject(m)),
        },
    }
}

fn summarize(report: &Value) {
    let items = match report {
        Value::Array(a) => a.iter().collect(),
        v => vec![v],
    };
    for (i, r) in items.into_iter().enumerate() {
        if r["status"] == "error" {
            let e = &r["error"];
            let at = e
                .get("at")
                .and_then(Value::as_str)
                .map(|a| format!(" at {a}"))
                .unwrap_or_default();
            eprintln!(
                "request {i}: {}{at}: {}",
                e["name"].as_str().unwrap_or("error"),
                e["message"].as_str().unwrap_or("")
            );
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command.as_deref().map(|c| (c, Command::from_name(c))) {
        None => None,
        Some((_, Some(c))) => Some(c),
        Some((name, None)) => {
            eprintln!("unknown command {name:?}");
            return ExitCode::from(2);
        }
    };
    let table = match &cli.fixture {
        None => LocusTable::builtin(),
        Some(p) => match load_table(p) {
            Ok(t) => t,
            Err(m) => {
                eprintln!("fixture {}: {m}", p.display());
                return ExitCode::from(2);
            }
        },
    };
    let engine = Engine::new(table);
    let text = match read_input(&cli.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", cli.input);
            return ExitCode::from(2);
        }
    };
    let (report, code) = reports(&cli, &engine, command, &text);
    summarize(&report);
    let rendered = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    };
    if let Err(e) = write_output(&cli.output, &rendered.expect("JSON values serialize")) {
        eprintln!("cannot write {}: {e}", cli.output);
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
