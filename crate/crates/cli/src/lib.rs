//! Command-line front end for `purepoly`.
//!
//! [`run`] executes a full argument vector in-process and captures its
//! output, which lets the corpus runner drive many cases in parallel.

pub mod args;
pub mod commands;
pub mod corpus;
pub mod render;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use commands::CmdError;

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let json_out = argv.iter().skip(1).any(|a| a == "--json");
            let text = if code == EXIT_USAGE && json_out {
                let rendered = e.to_string();
                let first = rendered.lines().next().unwrap_or_default();
                let message = first.trim_start_matches("error: ");
                format!("{}\n", json!({ "error": "usage", "message": message }))
            } else {
                e.render().to_string()
            };
            return if code == EXIT_OK {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };

    if let Command::Corpus { filter, dir } = &cli.command {
        return corpus::run_command(filter.as_deref(), dir.as_deref(), cli.json);
    }

    match commands::execute(&cli) {
        Ok(value) => Output {
            code: EXIT_OK,
            stdout: render::render(&value, cli.json),
            stderr: String::new(),
        },
        Err(err) => {
            let (code, kind, message) = match &err {
                CmdError::Usage(m) => (EXIT_USAGE, "usage", m.clone()),
                CmdError::Domain(e) => (EXIT_DOMAIN, e.kind(), e.to_string()),
            };
            let mut stderr = if cli.json {
                format!("{}\n", json!({ "error": kind, "message": message }))
            } else {
                format!("error: {message}\n")
            };
            if matches!(err, CmdError::Usage(_)) && !cli.json {
                stderr.push('\n');
                stderr.push_str(purepoly::poly::GRAMMAR);
                if !stderr.ends_with('\n') {
                    stderr.push('\n');
                }
            }
            Output {
                code,
                stdout: String::new(),
                stderr,
            }
        }
    }
}
