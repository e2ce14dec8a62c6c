//! `catalattice`: enumerate, convert and compare Catalan objects, export
//! Hasse diagrams, and run the exhaustive verification suite.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid object or domain error,
//! 3 verification failure.

mod object;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use catalattice::orders::{
    self, leq_dyck_relabelling, leq_dyck_tree, leq_tamari_relabelling, leq_tamari_tree,
    MAX_BRUHAT_TABLE_SIZE, MAX_LATTICE_SIZE, MAX_TABLE_SIZE,
};
use catalattice::perm::{
    self, avoids_312, leq_strong_bruhat, leq_strong_bruhat_max, leq_weak_bruhat,
};
use catalattice::spio::{self, MAX_ENUMERATED_SIZE};
use catalattice::tree::dyck_dominates;
use catalattice::verify::{verify, MAX_VERIFY_SIZE};
use catalattice::{hasse, CatalanOrder, DyckPath, Error};
use clap::{Parser, Subcommand, ValueEnum};

use object::{Kind, Object};

#[derive(Debug, Parser)]
#[command(
    name = "catalattice",
    version,
    about = "Catalan lattices on series parallel interval orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every object of size n in canonical text form, sorted.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Convert objects to another kind (inputs as arguments or stdin lines).
    Convert {
        /// Input kind; inferred from the syntax when omitted.
        #[arg(long, value_enum)]
        from: Option<Kind>,
        #[arg(long, value_enum)]
        to: Kind,
        values: Vec<String>,
    },
    /// Compare two objects: prints LT, GT, EQ or INCOMPARABLE.
    Cmp {
        #[arg(long, value_enum)]
        order: OrderArg,
        values: Vec<String>,
    },
    /// Meet and join of two objects, by exhaustive search.
    Lattice {
        #[arg(long, value_enum)]
        order: OrderArg,
        values: Vec<String>,
    },
    /// Hasse diagram of an order on all objects of size n.
    Hasse {
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Check every structural claim by exhaustion up to max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Dyck,
    Tamari,
    Weak,
    Strong,
}

impl From<OrderArg> for CatalanOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Dyck => CatalanOrder::Dyck,
            OrderArg::Tamari => CatalanOrder::Tamari,
            OrderArg::Weak => CatalanOrder::WeakBruhat,
            OrderArg::Strong => CatalanOrder::StrongBruhat,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => {
            eprintln!("error: verification failed");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> CmdResult {
    match command {
        Command::Enumerate { n, kind, format } => enumerate(n, kind, format, out),
        Command::Convert { from, to, values } => {
            for v in inputs(values)? {
                let obj = Object::parse(&v, from)?;
                writeln!(out, "{}", obj.convert(to)?).map_err(io_failure)?;
            }
            Ok(())
        }
        Command::Cmp { order, values } => {
            let (a, b) = two_objects(values)?;
            let verdict = compare(order.into(), &a, &b)?;
            writeln!(out, "{verdict}").map_err(io_failure)
        }
        Command::Lattice { order, values } => {
            let (a, b) = two_objects(values)?;
            if a.size() > MAX_LATTICE_SIZE {
                return Err(Failure::Usage(format!(
                    "lattice operations support sizes up to {MAX_LATTICE_SIZE}"
                )));
            }
            a.require_avoider()?;
            b.require_avoider()?;
            let (sa, sb) = (a.to_spio()?, b.to_spio()?);
            let order = CatalanOrder::from(order);
            let m = Object::from_spio(&orders::meet(order, &sa, &sb)?, a.kind())?;
            let j = Object::from_spio(&orders::join(order, &sa, &sb)?, a.kind())?;
            writeln!(out, "meet: {m}\njoin: {j}").map_err(io_failure)
        }
        Command::Hasse { order, n, format } => {
            let order = CatalanOrder::from(order);
            let max = if order.is_bruhat() {
                MAX_BRUHAT_TABLE_SIZE
            } else {
                MAX_TABLE_SIZE
            };
            if n > max {
                return Err(Failure::Usage(format!(
                    "hasse {order} supports n up to {max}"
                )));
            }
            let doc = match format {
                Format::Dot => hasse(order, n)?.to_dot(),
                Format::Json => hasse(order, n)?.to_json() + "\n",
                Format::Text => return Err(Failure::Usage("hasse output is dot or json".into())),
            };
            out.write_all(doc.as_bytes()).map_err(io_failure)
        }
        Command::Verify { max_n } => {
            if !(1..=MAX_VERIFY_SIZE).contains(&max_n) {
                return Err(Failure::Usage(format!(
                    "--max-n must be in 1..={MAX_VERIFY_SIZE}"
                )));
            }
            let report = verify(max_n)?;
            for line in &report {
                writeln!(out, "{line}").map_err(io_failure)?;
            }
            let failed = report.iter().filter(|r| !r.passed).count();
            writeln!(out, "{} claims, {failed} failed", report.len()).map_err(io_failure)?;
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

/// Positional values, or stdin lines when there are none.
fn inputs(values: Vec<String>) -> Result<Vec<String>, Failure> {
    if !values.is_empty() {
        return Ok(values);
    }
    io::stdin()
        .lock()
        .lines()
        .map(|l| l.map_err(|e| Failure::Usage(format!("reading stdin: {e}"))))
        .filter(|l| !matches!(l, Ok(s) if s.trim().is_empty()))
        .collect()
}

fn two_objects(values: Vec<String>) -> Result<(Object, Object), Failure> {
    let values = inputs(values)?;
    let [a, b] = &values[..] else {
        return Err(Failure::Usage(format!(
            "expected two objects, got {}",
            values.len()
        )));
    };
    let a = Object::parse(a, None)?;
    let b = Object::parse(b, None)?;
    if a.kind() != b.kind() {
        return Err(Failure::Domain(Error::Parse(format!(
            "cannot compare a {} with a {}",
            a.kind(),
            b.kind()
        ))));
    }
    if a.size() != b.size() {
        return Err(Failure::Domain(Error::SupportMismatch {
            left: a.size(),
            right: b.size(),
        }));
    }
    Ok((a, b))
}

fn enumerate(n: usize, kind: Kind, format: Format, out: &mut impl Write) -> CmdResult {
    if n > MAX_ENUMERATED_SIZE {
        return Err(Failure::Usage(format!(
            "--n must be at most {MAX_ENUMERATED_SIZE}"
        )));
    }
    if format == Format::Dot {
        return Err(Failure::Usage("enumerate output is text or json".into()));
    }
    let mut items: Vec<Object> = match kind {
        Kind::Perm => perm::enumerate_av312(n)?
            .into_iter()
            .map(Object::Perm)
            .collect(),
        Kind::Path => DyckPath::enumerate(n)
            .into_iter()
            .map(Object::Path)
            .collect(),
        Kind::Spio | Kind::Tree => spio::enumerate_spios(n)?
            .iter()
            .map(|s| Object::from_spio(s, kind))
            .collect::<Result<_, _>>()?,
    };
    items.sort_by_cached_key(|o| o.to_string());
    let text = match format {
        Format::Json => {
            let doc = serde_json::json!({
                "kind": kind.to_string(),
                "n": n,
                "count": items.len(),
                "items": items.iter().map(Object::to_json).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&doc).expect("plain data") + "\n"
        }
        _ => items.iter().map(|o| format!("{o}\n")).collect(),
    };
    out.write_all(text.as_bytes()).map_err(io_failure)
}

fn compare(order: CatalanOrder, a: &Object, b: &Object) -> Result<&'static str, Failure> {
    let le = |x: &Object, y: &Object| -> Result<bool, Failure> { Ok(leq_objects(order, x, y)?) };
    let verdict = match (le(a, b)?, le(b, a)?) {
        (true, true) => "EQ",
        (true, false) => "LT",
        (false, true) => "GT",
        (false, false) => "INCOMPARABLE",
    };
    Ok(verdict)
}

fn leq_objects(order: CatalanOrder, a: &Object, b: &Object) -> catalattice::Result<bool> {
    match order {
        CatalanOrder::Dyck => match (a, b) {
            (Object::Tree(x), Object::Tree(y)) => leq_dyck_tree(x, y),
            (Object::Path(x), Object::Path(y)) => dyck_dominates(x, y),
            (Object::Spio(x), Object::Spio(y)) => Ok(leq_dyck_relabelling(x, y)?.value),
            _ => orders::leq_dyck(&a.to_spio()?, &b.to_spio()?),
        },
        CatalanOrder::Tamari => match (a, b) {
            (Object::Spio(x), Object::Spio(y)) => Ok(leq_tamari_relabelling(x, y)?.value),
            (Object::Perm(_), Object::Perm(_)) => orders::leq_tamari(&a.to_spio()?, &b.to_spio()?),
            _ => leq_tamari_tree(&a.as_tree()?, &b.as_tree()?),
        },
        CatalanOrder::WeakBruhat => leq_weak_bruhat(&a.as_perm()?, &b.as_perm()?),
        CatalanOrder::StrongBruhat => {
            let (x, y) = (a.as_perm()?, b.as_perm()?);
            if avoids_312(&x) && avoids_312(&y) {
                leq_strong_bruhat_max(&x, &y)
            } else {
                leq_strong_bruhat(&x, &y)
            }
        }
    }
}
