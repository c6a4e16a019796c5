use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use ajpackets::clans::{self, ClanEntry};
use ajpackets::packets::{self, grid, AJParameter, Validated};
use ajpackets::symgroup::{self, Involution, Permutation};
use ajpackets::Error;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ajpk", version, about = "Clans, involutions and twisted character identities for Adams-Johnson packets")]
struct Cli {
    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Run the full acceptance grid and print a summary table.
    #[arg(long)]
    seed_suite: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Clans for U(p,q).
    #[command(subcommand)]
    Clans(ClansCmd),
    /// Symmetric-group utilities.
    #[command(subcommand)]
    Sym(SymCmd),
    /// Transfer-side expansion of a parameter.
    Expand { param: PathBuf },
    /// GL-side expansion of a parameter.
    Lhs { param: PathBuf },
    /// Compare both sides.
    Verify { param: PathBuf },
    /// Validity, N, infinitesimal character and q(L*).
    Info { param: PathBuf },
}

#[derive(Subcommand)]
enum ClansCmd {
    /// All clans of signature (p,q) with their lengths
    Enum { p: usize, q: usize },
    /// Length of one clan, e.g. "(1+1)"
    Length { clan: String },
    /// Covering edges from the two local rules
    Hasse { p: usize, q: usize },
    /// Clans grouped by underlying involution
    Packets { p: usize, q: usize },
}

#[derive(Subcommand)]
enum SymCmd {
    /// Involutions of S_n with θ-lengths
    Involutions { n: usize },
    /// θ-length of an involution given in one-line form, e.g. [2,1]
    ThetaLength { perm: String },
    /// Descent witnesses for every non-identity involution of S_n
    #[command(name = "verify-lemma65")]
    VerifyLemma65 { n: usize },
}

/// What a command produced: JSON plus whether it counts as success.
struct Outcome {
    value: Value,
    ok: bool,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

fn read_param(path: &PathBuf) -> Result<AJParameter, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?
    };
    AJParameter::from_json(&text)
}

fn load(path: &PathBuf) -> Result<Validated, Error> {
    packets::validated(&read_param(path)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn run_clans(cmd: ClansCmd) -> Result<Outcome, Error> {
    Ok(match cmd {
        ClansCmd::Enum { p, q } => {
            let entries: Vec<ClanEntry> = clans::enumerate_clans(p, q).iter().map(ClanEntry::from).collect();
            to_json(&entries).into()
        }
        ClansCmd::Length { clan } => json!(clans::clan_length(&clans::parse_clan(&clan)?)).into(),
        ClansCmd::Hasse { p, q } => to_json(&clans::hasse_edges(p, q)).into(),
        ClansCmd::Packets { p, q } => {
            let groups: Vec<Value> = clans::packets(p, q)
                .iter()
                .map(|g| json!({"involution": g[0].eta(), "clans": g}))
                .collect();
            Value::Array(groups).into()
        }
    })
}

fn run_sym(cmd: SymCmd) -> Result<Outcome, Error> {
    Ok(match cmd {
        SymCmd::Involutions { n } => {
            let list: Vec<Value> = symgroup::involutions(n)
                .iter()
                .map(|w| json!({"involution": w, "theta_length": w.theta_length()}))
                .collect();
            Value::Array(list).into()
        }
        SymCmd::ThetaLength { perm } => {
            let w: Permutation = perm.parse()?;
            json!(Involution::new(w)?.theta_length()).into()
        }
        SymCmd::VerifyLemma65 { n } => {
            let lemma = symgroup::verify_lemma_6_5(n)?;
            let corollary = symgroup::verify_corollary_6_6(n)?;
            json!({"n": n, "covers": lemma, "upper": corollary}).into()
        }
    })
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Clans(c) => run_clans(c),
        Command::Sym(c) => run_sym(c),
        Command::Expand { param } => Ok(to_json(&packets::composite_expansion(&load(&param)?)?).into()),
        Command::Lhs { param } => Ok(to_json(&packets::lhs_expansion(&load(&param)?)?).into()),
        Command::Verify { param } => {
            let report = packets::verify_main_identity(&load(&param)?)?;
            Ok(Outcome { ok: report.is_match(), value: to_json(&report) })
        }
        Command::Info { param } => {
            let psi = read_param(&param)?;
            let mut out = json!({
                "parameter": psi.to_json(),
                "N": psi.group.big_n(),
            });
            match packets::validate_aj(&psi) {
                Ok(v) => {
                    out["valid"] = json!(true);
                    out["issues"] = json!([]);
                    out["infinitesimal_character"] = to_json(&v.infinitesimal_character());
                    out["arthur"] = to_json(&v.std_compose());
                    out["levi"] = to_json(&packets::levi_quasisplit(&v));
                    out["q_star"] = json!(packets::levi_quasisplit(&v).q_star);
                }
                Err(issues) => {
                    out["valid"] = json!(false);
                    out["issues"] = to_json(&issues);
                }
            }
            Ok(out.into())
        }
    }
}

fn seed_suite() -> Result<Outcome, Error> {
    let lines = grid::seed_suite()?;
    println!("{:<12} {:>10} {:>8} {:>8} result", "grid", "parameters", "matched", "symbols");
    for l in &lines {
        let verdict = if l.passed() { "PASS" } else { "FAIL" };
        println!("{:<12} {:>10} {:>8} {:>8} {verdict}", l.grid, l.parameters, l.matched, l.symbols);
    }
    Ok(Outcome { ok: lines.iter().all(grid::SuiteLine::passed), value: Value::Null })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match (cli.seed_suite, cli.command) {
        (true, _) => seed_suite(),
        (false, Some(cmd)) => run(cmd),
        (false, None) => {
            eprintln!("ajpk: no command given (see --help)");
            return ExitCode::from(2);
        }
    };
    match result {
        Ok(out) => {
            if !out.value.is_null() {
                let text = if cli.pretty {
                    serde_json::to_string_pretty(&out.value)
                } else {
                    serde_json::to_string(&out.value)
                };
                println!("{}", text.expect("values serialize"));
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("ajpk: {e}");
            match e {
                Error::Verification(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
