use std::fmt::Display;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use youngfib::chains_growth::{
    boundary_chains, chain_to_tableau, evacuation_steps, evacuation_tableau, growth_diagram,
    tableau_to_chain, ShapeChain,
};
use youngfib::fibokostka::{n_matrix_with, okada_matrix_with, KostkaMatrix, Method};
use youngfib::snakeshape::{lattice_dot, shapes_of_size};
use youngfib::yfinsertion::{fibo_class_with_bound, insert_pq, CLASS_BOUND};
use youngfib::yfposet::{weak_order_sn_with_bound, weak_order_yft_with, POSET_BOUND};
use youngfib::yftableau::{max_cano, min_cano};
use youngfib::youngside::{self, Order, SYT_BOUND};
use youngfib::{fibokostka, verify, Error, Exec, Permutation, RankedPoset, Snakeshape, YfTableau};

const LATTICE_BOUND: usize = 20;
const MATRIX_BOUND: usize = 12;

#[derive(Parser)]
#[command(name = "yfib", version, about = "Young-Fibonacci insertion, growth, posets and Kostka analogues")]
struct Cli {
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Lift the built-in size limits.
    #[arg(long, global = true)]
    unsafe_bound: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertFrom {
    Chain,
    Tableau,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetKind {
    Yft,
    Syt,
    Sn,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Nfib,
    Okada,
    Kostka,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Recurrence,
    Interval,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Chain,
    Weak,
}

#[derive(Subcommand)]
enum Command {
    /// Insertion and recording tableaux of a permutation.
    Insert {
        permutation: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Growth diagram and its boundary chains.
    Growth {
        permutation: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Convert a saturated chain to a tableau or back.
    Convert {
        #[arg(value_enum)]
        from: ConvertFrom,
        value: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evacuation of a standard tableau, step by step.
    Evacuate {
        tableau: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Snakeshapes up to size n.
    Lattice {
        n: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Weak order on tableaux or permutations of size n.
    Poset {
        #[arg(value_enum)]
        kind: PosetKind,
        n: usize,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Transition matrix of size n.
    Matrix {
        #[arg(value_enum)]
        kind: MatrixKind,
        n: usize,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Order used by the interval method for Kostka numbers.
        #[arg(long, value_enum, default_value = "weak")]
        order: OrderArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Permutations inserting to a tableau.
    Class {
        tableau: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run invariant suites up to size n.
    Verify {
        suite: String,
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Ctx {
    exec: Exec,
    unsafe_bound: bool,
}

impl Ctx {
    fn bound(&self, default: usize) -> usize {
        if self.unsafe_bound {
            usize::MAX
        } else {
            default
        }
    }

    fn check(&self, n: usize, default: usize) -> Result<(), Failure> {
        if n > self.bound(default) {
            return Err(Failure::Usage(format!(
                "n = {n} exceeds the limit {default}; pass --unsafe-bound to override"
            )));
        }
        Ok(())
    }
}

fn parse<T>(text: &str) -> Result<T, Failure>
where
    T: std::str::FromStr<Err = Error>,
{
    text.parse().map_err(Failure::from)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn only(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.iter().any(|f| std::mem::discriminant(f) == std::mem::discriminant(&format)) {
        Ok(())
    } else {
        Err(Failure::Usage("output format not supported by this command".into()))
    }
}

fn insert(perm: &str, format: Format) -> Result<String, Failure> {
    only(format, &[Format::Text, Format::Json])?;
    let sigma: Permutation = parse(perm)?;
    let (p, q) = insert_pq(&sigma);
    Ok(match format {
        Format::Json => pretty(&json!({
            "permutation": sigma.to_string(),
            "p": p.to_string(),
            "q": q.to_string(),
            "shape": p.shape().to_string(),
        })),
        _ => format!("P: {p}\nQ: {q}\nshape: {}\n", p.shape()),
    })
}

fn growth(perm: &str, format: Format) -> Result<String, Failure> {
    only(format, &[Format::Text, Format::Json])?;
    let sigma: Permutation = parse(perm)?;
    let d = growth_diagram(&sigma);
    let (p_hat, q_hat) = boundary_chains(&d);
    let p = chain_to_tableau(&p_hat)?;
    let q = chain_to_tableau(&q_hat)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "diagram": d.to_json(),
            "p_hat": p_hat.to_string(),
            "q_hat": q_hat.to_string(),
            "p": p.to_string(),
            "q": q.to_string(),
        })),
        _ => format!(
            "{}P-hat: {p_hat}\nQ-hat: {q_hat}\nP: {p}\nQ: {q}\n",
            d.to_text()
        ),
    })
}

fn convert(from: ConvertFrom, value: &str, format: Format) -> Result<String, Failure> {
    only(format, &[Format::Text, Format::Json])?;
    let (chain, t) = match from {
        ConvertFrom::Chain => {
            let c: ShapeChain = parse(value)?;
            let t = chain_to_tableau(&c)?;
            (c, t)
        }
        ConvertFrom::Tableau => {
            let t: YfTableau = parse(value)?;
            (tableau_to_chain(&t)?, t)
        }
    };
    Ok(match (format, from) {
        (Format::Json, _) => pretty(&json!({ "chain": chain.to_string(), "tableau": t.to_string() })),
        (_, ConvertFrom::Chain) => format!("{t}\n"),
        (_, ConvertFrom::Tableau) => format!("{chain}\n"),
    })
}

fn evacuate(text: &str, format: Format) -> Result<String, Failure> {
    only(format, &[Format::Text, Format::Json])?;
    let t: YfTableau = parse(text)?;
    let steps = evacuation_steps(&t)?;
    let ev = evacuation_tableau(&t)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "tableau": t.to_string(),
            "steps": steps.iter().map(|s| json!({
                "letter": s.letter,
                "after": s.after.to_string(),
                "moved": s.moved,
                "freed": { "column": s.freed.column + 1, "top": s.freed.top },
            })).collect::<Vec<_>>(),
            "evacuation": ev.to_string(),
        })),
        _ => {
            let mut out = format!("start: {t}\n");
            for s in &steps {
                let moved: Vec<String> = s.moved.iter().map(u32::to_string).collect();
                out += &format!(
                    "remove {}: {}  moved [{}]  freed column {} {}\n",
                    s.letter,
                    s.after,
                    moved.join(" "),
                    s.freed.column + 1,
                    if s.freed.top { "top" } else { "bottom" }
                );
            }
            out + &format!("ev: {ev}\n")
        }
    })
}

fn lattice(ctx: &Ctx, n: usize, dot: bool) -> Result<String, Failure> {
    ctx.check(n, LATTICE_BOUND)?;
    if dot {
        return Ok(lattice_dot(n));
    }
    let mut out = String::new();
    for m in 0..=n {
        let shapes: Vec<String> = shapes_of_size(m).iter().map(Snakeshape::to_string).collect();
        out += &format!("{m}: {}\n", shapes.join(" "));
    }
    Ok(out)
}

fn render_poset<T>(p: &RankedPoset<T>, name: &str, dot: bool, json: bool) -> String
where
    T: Display + Clone + Eq + std::hash::Hash,
{
    if dot {
        return p.to_dot(name);
    }
    if json {
        return pretty(&p.to_json());
    }
    let mut out = String::new();
    for (i, x) in p.elements().iter().enumerate() {
        let ups: Vec<String> = p.upper_covers(x).iter().map(|y| y.to_string()).collect();
        out += &format!("{x}\trank {}\t< {}\n", p.ranks()[i], ups.join(", "));
    }
    out
}

fn poset(ctx: &Ctx, kind: PosetKind, n: usize, dot: bool, json: bool) -> Result<String, Failure> {
    Ok(match kind {
        PosetKind::Yft => {
            let p = weak_order_yft_with(n, ctx.bound(POSET_BOUND), ctx.exec)?;
            render_poset(&p, "yft", dot, json)
        }
        PosetKind::Syt => {
            let p = youngside::chain_order_syt_with(n, ctx.bound(SYT_BOUND), ctx.exec)?;
            render_poset(&p, "syt", dot, json)
        }
        PosetKind::Sn => {
            let p = weak_order_sn_with_bound(n, ctx.bound(POSET_BOUND))?;
            render_poset(&p, "sn", dot, json)
        }
    })
}

fn render_matrix<L: Display + Clone + PartialEq>(m: &KostkaMatrix<L>, format: Format) -> Result<String, Failure> {
    only(format, &[Format::Text, Format::Json, Format::Csv])?;
    Ok(match format {
        Format::Csv => m.to_csv(),
        Format::Json => pretty(&m.to_json()),
        _ => m.to_text(),
    })
}

fn compare<L: Display + Clone + PartialEq>(
    a: &KostkaMatrix<L>,
    b: &KostkaMatrix<L>,
    names: (&str, &str),
    format: Format,
) -> Result<String, Failure> {
    let mut out = render_matrix(a, format)?;
    let diff = a.diff(b);
    if diff.is_empty() {
        out += "OK methods agree\n";
        return Ok(out);
    }
    out += &format!("DIFF {} vs {}\n", names.0, names.1);
    for (row, col, x, y) in diff {
        out += &format!("({row}, {col}): {x} vs {y}\n");
    }
    Err(Failure::Verification(out))
}

fn matrix(
    ctx: &Ctx,
    kind: MatrixKind,
    n: usize,
    method: Option<MethodArg>,
    order: OrderArg,
    format: Format,
) -> Result<String, Failure> {
    let order = match order {
        OrderArg::Chain => Order::Chain,
        OrderArg::Weak => Order::Weak,
    };
    let unsupported = |m: &str| Failure::Usage(format!("method {m} is not available for this matrix"));
    match kind {
        MatrixKind::Nfib => {
            ctx.check(n, MATRIX_BOUND)?;
            let rec = n_matrix_with(n, ctx.exec);
            match method.unwrap_or(MethodArg::Recurrence) {
                MethodArg::Recurrence => render_matrix(&rec, format),
                MethodArg::Interval => Err(unsupported("interval")),
                m @ (MethodArg::Brute | MethodArg::Both) => {
                    ctx.check(n, POSET_BOUND)?;
                    let brute = fibokostka::n_matrix_brute(n, ctx.exec);
                    if m == MethodArg::Brute {
                        render_matrix(&brute, format)
                    } else {
                        compare(&rec, &brute, ("recurrence", "brute"), format)
                    }
                }
            }
        }
        MatrixKind::Okada => {
            let bound = ctx.bound(POSET_BOUND);
            match method.unwrap_or(MethodArg::Recurrence) {
                MethodArg::Recurrence => {
                    ctx.check(n, MATRIX_BOUND)?;
                    render_matrix(&okada_matrix_with(n, Method::Recurrence, usize::MAX, ctx.exec)?, format)
                }
                MethodArg::Interval => render_matrix(&okada_matrix_with(n, Method::Interval, bound, ctx.exec)?, format),
                MethodArg::Brute => Err(unsupported("brute")),
                MethodArg::Both => {
                    let a = okada_matrix_with(n, Method::Recurrence, bound, ctx.exec)?;
                    let b = okada_matrix_with(n, Method::Interval, bound, ctx.exec)?;
                    compare(&a, &b, ("recurrence", "interval"), format)
                }
            }
        }
        MatrixKind::Kostka => {
            let bound = ctx.bound(SYT_BOUND);
            match method.unwrap_or(MethodArg::Brute) {
                MethodArg::Brute => {
                    ctx.check(n, MATRIX_BOUND)?;
                    render_matrix(&youngside::kostka_matrix(n), format)
                }
                MethodArg::Interval => {
                    render_matrix(&youngside::kostka_matrix_by_interval(n, order, bound, ctx.exec)?, format)
                }
                MethodArg::Recurrence => Err(unsupported("recurrence")),
                MethodArg::Both => {
                    ctx.check(n, bound)?;
                    let a = youngside::kostka_matrix(n);
                    let b = youngside::kostka_matrix_by_interval(n, order, bound, ctx.exec)?;
                    compare(&a, &b, ("brute", "interval"), format)
                }
            }
        }
    }
}

fn class(ctx: &Ctx, text: &str, format: Format) -> Result<String, Failure> {
    only(format, &[Format::Text, Format::Json])?;
    let t: YfTableau = parse(text)?;
    let perms = fibo_class_with_bound(&t, ctx.bound(CLASS_BOUND))?;
    let (lo, hi) = (min_cano(&t)?, max_cano(&t)?);
    let words: Vec<String> = perms.iter().map(Permutation::to_string).collect();
    Ok(match format {
        Format::Json => pretty(&json!({
            "tableau": t.to_string(),
            "min": lo.to_string(),
            "max": hi.to_string(),
            "size": words.len(),
            "class": words,
        })),
        _ => format!("min: {lo}\nmax: {hi}\nsize: {}\n{}\n", words.len(), words.join("\n")),
    })
}

fn run_verify(ctx: &Ctx, suite: &str, n: usize) -> Result<String, Failure> {
    let checks = verify::run_suite_with(suite, n, ctx.exec, !ctx.unsafe_bound)?;
    let mut out = String::new();
    for c in &checks {
        out += &format!("{c}\n");
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    if failed > 0 {
        out += &format!("{failed} of {} invariants failed\n", checks.len());
        return Err(Failure::Verification(out));
    }
    out += &format!("all {} invariants hold\n", checks.len());
    Ok(out)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let ctx = Ctx {
        exec: if cli.sequential { Exec::Sequential } else { Exec::default() },
        unsafe_bound: cli.unsafe_bound,
    };
    match &cli.command {
        Command::Insert { permutation, format } => insert(permutation, *format),
        Command::Growth { permutation, format } => growth(permutation, *format),
        Command::Convert { from, value, format } => convert(*from, value, *format),
        Command::Evacuate { tableau, format } => evacuate(tableau, *format),
        Command::Lattice { n, dot } => lattice(&ctx, *n, *dot),
        Command::Poset { kind, n, dot, json } => poset(&ctx, *kind, *n, *dot, *json),
        Command::Matrix { kind, n, method, order, format } => {
            matrix(&ctx, *kind, *n, *method, *order, *format)
        }
        Command::Class { tableau, format } => class(&ctx, tableau, *format),
        Command::Verify { suite, n } => run_verify(&ctx, suite, *n),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {path}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Verification(text)) => (text, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = emit(&cli, &text) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
