use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use reeskit::poly::MonomialOrder;
use reeskit_cli::{exit, parse, run, Settings};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

/// Run a reeskit session script (from a file, or stdin when omitted).
#[derive(Debug, Parser)]
#[command(name = "reeskit", version)]
struct Args {
    /// Script path; `-` or nothing reads stdin.
    script: Option<PathBuf>,

    /// Default degree bound for rees, gamma, hilbert and verify-theorem-a.
    #[arg(long, env = "REESKIT_MAX_DEGREE", default_value_t = 4)]
    max_degree: u32,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Monomial order for every declared ring.
    #[arg(long, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return code(if usage { exit::USAGE } else { exit::OK });
        }
    };
    let (label, text) = match args.script.as_deref() {
        Some(p) if p.as_os_str() != "-" => match std::fs::read_to_string(p) {
            Ok(t) => (p.display().to_string(), t),
            Err(e) => {
                eprintln!("reeskit: cannot read {}: {}", p.display(), e);
                return code(exit::USAGE);
            }
        },
        _ => {
            let mut t = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut t) {
                eprintln!("reeskit: cannot read stdin: {}", e);
                return code(exit::USAGE);
            }
            ("<stdin>".to_string(), t)
        }
    };
    let script = match parse(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}:{}", label, e);
            return code(exit::PARSE);
        }
    };
    let settings = Settings {
        max_degree: args.max_degree,
        order: match args.order {
            Order::Grevlex => MonomialOrder::Grevlex,
            Order::Lex => MonomialOrder::Lex,
        },
    };
    let report = run(&script, &settings);
    match args.format {
        Format::Text => print!("{}", report.stdout_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    for d in report.diagnostics() {
        eprintln!("{}:{}", label, d);
    }
    code(report.exit_code)
}
