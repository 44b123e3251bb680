use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use superring_cli::output::{CliError, Outcome};
use superring_cli::script::split_commands;
use superring_cli::session::{parse_field_option, Session, Settings};

#[derive(Parser, Debug)]
#[command(
    name = "sra",
    version,
    about = "Computations in supercommutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Mode>,
    /// Emit one JSON object per command.
    #[arg(long, global = true)]
    json: bool,
    /// Default coefficient field: `q` or `fp:<p>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Degree cap for Gröbner computations.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Largest accepted number of odd variables.
    #[arg(long, global = true)]
    max_odd: Option<usize>,
    /// Per-command wall clock limit in seconds.
    #[arg(long, global = true)]
    timeout: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Mode {
    /// Run a session file.
    Run { file: PathBuf },
}

fn emit(out: &Outcome, json: bool) {
    let mut stdout = io::stdout().lock();
    let res = if json {
        writeln!(stdout, "{}", out.to_json())
    } else {
        writeln!(stdout, "{out}")
    };
    if res.is_err() {
        std::process::exit(0);
    }
}

fn report(err: &CliError, json: bool) -> ExitCode {
    if json {
        println!("{}", err.to_json());
    } else {
        eprintln!("error: {err}");
    }
    ExitCode::from(err.exit_code() as u8)
}

fn settings(cli: &Cli) -> Result<Settings, CliError> {
    let mut s = Settings {
        field: parse_field_option(&cli.field)?,
        ..Settings::default()
    };
    if let Some(d) = cli.max_degree {
        s.max_degree = d;
    }
    if let Some(d) = cli.max_odd {
        s.max_odd = d;
    }
    if let Some(t) = cli.timeout {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::User {
                line: 0,
                col: 0,
                message: "timeout must be positive".into(),
            });
        }
        s.timeout = Some(Duration::from_secs_f64(t));
    }
    Ok(s)
}

fn repl(session: &mut Session, json: bool) -> ExitCode {
    let stdin = io::stdin();
    let interactive = std::io::IsTerminal::is_terminal(&stdin);
    let mut pending = String::new();
    loop {
        if interactive {
            print!("{}", if pending.is_empty() { "sra> " } else { "...> " });
            let _ = io::stdout().flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => return report(&CliError::Io(e.to_string()), json),
        }
        pending.push_str(&line);
        let opens = pending.matches(['(', '[']).count();
        let closes = pending.matches([')', ']']).count();
        if opens > closes {
            continue;
        }
        let src = std::mem::take(&mut pending);
        for cmd in split_commands(&src) {
            if matches!(cmd.text.as_str(), "quit" | "exit") {
                return ExitCode::SUCCESS;
            }
            match session.execute(&cmd) {
                Ok(out) => emit(&out, json),
                Err(e) => {
                    if !interactive {
                        return report(&e, json);
                    }
                    report(&e, json);
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let mut session = match settings(&cli) {
        Ok(s) => Session::new(s),
        Err(e) => return report(&e, json),
    };
    match &cli.command {
        Some(Mode::Run { file }) => {
            let src = match std::fs::read_to_string(file) {
                Ok(s) => s,
                Err(e) => return report(&CliError::Io(format!("{}: {e}", file.display())), json),
            };
            match session.run_script(&src, |o| emit(o, json)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => report(&e, json),
            }
        }
        None => repl(&mut session, json),
    }
}
