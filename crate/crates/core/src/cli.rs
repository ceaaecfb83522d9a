//! The `mcs` command-line front end.
//!
//! Exit codes: `0` success, `1` a verified property is false, `2` usage or
//! precondition error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::enumgraph::build_st_subgraph;
use crate::enumpaths::{count_mcs, enumerate_mcs};
use crate::error::McsError;
use crate::minimality::{check_minimal, Verdict};
use crate::reduce2::reduce_two;
use crate::reducek::reduce_k;
use crate::seq::{longest_common_prefix, Seq};

#[derive(Debug, Parser)]
#[command(name = "mcs", version, about = "Minimal common supersequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one minimal common supersequence of the inputs.
    Reduce {
        /// Starting common supersequence (defaults to the concatenation of the inputs).
        #[arg(long = "super", value_name = "S")]
        supersequence: Option<String>,
        #[arg(required = true, num_args = 1.., value_name = "STR")]
        inputs: Vec<String>,
    },
    /// Print every minimal common supersequence of two strings, one per line.
    Enum {
        /// Stop after N outputs.
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        /// Print only the number of minimal common supersequences.
        #[arg(long)]
        count: bool,
        /// Write the enumeration graph in Graphviz format to FILE.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        a: String,
        b: String,
    },
    /// Check that S is a minimal common supersequence of the remaining strings.
    Verify {
        /// Read S and the inputs from a file, one string per line (S first).
        #[arg(long, value_name = "PATH", conflicts_with = "strings")]
        file: Option<PathBuf>,
        #[arg(value_name = "S STR")]
        strings: Vec<String>,
    },
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    ExitCode::from(run_status(args, out, err))
}

/// [`run`] returning the raw exit status.
pub fn run_status<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Reduce {
            supersequence,
            inputs,
        } => cmd_reduce(supersequence, &inputs, out, err),
        Command::Enum {
            limit,
            count,
            dot,
            a,
            b,
        } => cmd_enum(&a, &b, limit, count, dot, out, err),
        Command::Verify { file, strings } => cmd_verify(file, strings, out, err),
    }
}

fn cmd_reduce(
    supersequence: Option<String>,
    inputs: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let inputs: Vec<Seq> = inputs.iter().map(|s| Seq::from(s.as_str())).collect();
    let sup = supersequence.map_or_else(|| Seq::concat_all(&inputs), Seq::from);
    let result = if let [a, b] = inputs.as_slice() {
        reduce_two(&sup, a, b)
    } else {
        reduce_k(&sup, &inputs)
    };
    match result {
        Ok(s) => {
            let _ = writeln!(out, "{s}");
            0
        }
        Err(McsError::NotCommonSupersequence { input, text }) => {
            let _ = writeln!(
                err,
                "error: input {} ({text:?}) is not a subsequence of {:?}",
                input + 1,
                sup.to_string()
            );
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn cmd_enum(
    a: &str,
    b: &str,
    limit: Option<usize>,
    count: bool,
    dot: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let (a, b) = (Seq::from(a), Seq::from(b));
    if let Some(path) = dot {
        let p = longest_common_prefix(&a, &b);
        let x = a.substring(p + 1, a.len());
        let y = b.substring(p + 1, b.len());
        let text = build_st_subgraph(&x, &y)
            .expect("suffixes share no common prefix")
            .export_dot();
        if let Err(e) = std::fs::write(&path, text) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    if count {
        let _ = writeln!(out, "{}", count_mcs(&a, &b));
        return 0;
    }
    for s in enumerate_mcs(&a, &b).take(limit.unwrap_or(usize::MAX)) {
        if writeln!(out, "{s}").is_err() {
            return 2;
        }
    }
    0
}

fn cmd_verify(
    file: Option<PathBuf>,
    strings: Vec<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let strings = match file {
        Some(path) => match std::fs::read_to_string(&path) {
            Ok(text) => text
                .lines()
                .map(|l| l.strip_suffix('\r').unwrap_or(l).to_string())
                .collect(),
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                return 2;
            }
        },
        None => strings,
    };
    let Some((s, inputs)) = strings.split_first() else {
        let _ = writeln!(
            err,
            "error: expected a supersequence followed by input strings"
        );
        return 2;
    };
    let s = Seq::from(s.as_str());
    let inputs: Vec<Seq> = inputs.iter().map(|x| Seq::from(x.as_str())).collect();
    match check_minimal(&s, &inputs) {
        Verdict::Minimal => {
            let _ = writeln!(out, "minimal");
            0
        }
        Verdict::Deletable { index } => {
            let _ = writeln!(out, "not minimal: index {index} is deletable");
            1
        }
        Verdict::NotSupersequence { input } => {
            let _ = writeln!(
                out,
                "not a supersequence: input {} ({:?}) is missing",
                input + 1,
                inputs[input].to_string()
            );
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mcs").chain(args.iter().copied());
        let code = run_status(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn reduce_commands() {
        assert_eq!(call(&["reduce", "abab", "acbcb"]).1, "abacbcb\n");
        assert_eq!(
            call(&["reduce", "--super", "ababacbcb", "abab", "acbcb"]).1,
            "abacbcb\n"
        );
        assert_eq!(call(&["reduce", "a"]).1, "a\n");
        let (code, _, err) = call(&["reduce", "--super", "abc", "ab", "ca"]);
        assert_eq!(code, 2);
        assert!(err.contains("input 2"), "{err}");
    }

    #[test]
    fn enum_commands() {
        assert_eq!(
            call(&["enum", "a", "b"]),
            (0, "ba\nab\n".into(), String::new())
        );
        assert_eq!(
            call(&["enum", "--limit", "1", "xay", "zaw"])
                .1
                .lines()
                .count(),
            1
        );
        assert_eq!(call(&["enum", "--count", "a", "b"]).1, "2\n");
        assert_eq!(call(&["enum", "--limit", "x", "a", "b"]).0, 2);
        assert_eq!(call(&["enum", "a"]).0, 2);
    }

    #[test]
    fn verify_commands() {
        assert_eq!(call(&["verify", "abacbcb", "abab", "acbcb"]).0, 0);
        let (code, out, _) = call(&["verify", "ababacbcb", "abab", "acbcb"]);
        assert_eq!(code, 1);
        assert!(out.contains("index 1"));
        assert_eq!(call(&["verify", "a", "a"]).0, 0);
        assert_eq!(call(&["verify", "--file", "/nonexistent/mcs-input"]).0, 2);
    }
}
