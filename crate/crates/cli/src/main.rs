use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use spin_kerov::json::{
    character_table_to_json, comparison_to_json, envelope, kerov_to_json, poly_to_json, positivity_to_json,
    rational_to_json,
};
use spin_kerov::kerov::{
    coincidence_report, kerov_for, ordinary_kerov, spin_kerov, sweep_indices, symmetrized_spin_kerov,
    ComparisonReport, PositivityRecord,
};
use spin_kerov::measures::{biane_cumulant, transition_moments};
use spin_kerov::oracle::character_table;
use spin_kerov::spin::{
    spin_character_eval, spin_character_poly, spin_free_cumulant_eval, spin_free_cumulant_poly,
    symmetrized_cumulant_eval, symmetrized_cumulant_poly,
};
use spin_kerov::{characters, GeneratorFamily, KerovPolynomial, Partition, Poly, Rational, StrictPartition};

const CAP_VAR: &str = "SPIN_KEROV_MAX_K";
const DEFAULT_CAP: u32 = 21;

/// Spin characters in spin free cumulants, computed exactly.
#[derive(Parser)]
#[command(name = "spin-kerov", version)]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    /// Spin free cumulants of the double diagram.
    Frak,
    /// Cumulants of the symmetrized double diagram.
    Symmetrized,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Spin,
    Symmetrized,
    Ordinary,
}

impl From<Family> for GeneratorFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Spin => GeneratorFamily::Spin,
            Family::Symmetrized => GeneratorFamily::Symmetrized,
            Family::Ordinary => GeneratorFamily::Ordinary,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    SpinChar,
    SpinCumulant,
    SymmetrizedCumulant,
    OrdinaryChar,
    FreeCumulant,
    Moment,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expansion {
    SpinChar,
    SpinCumulant,
    SymmetrizedCumulant,
}

#[derive(Subcommand)]
enum Command {
    /// Spin Kerov polynomial K^spin_k for odd k.
    SpinKerov {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "frak")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ordinary Kerov polynomial K_k.
    Kerov {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sign and integrality sweep over k.
    Check {
        #[arg(long, value_enum, default_value = "spin")]
        family: Family,
        #[arg(long, default_value_t = 13)]
        max_k: u32,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate a function at a partition, e.g. `--partition 5,4,2,1`.
    Eval {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare K_k with K^spin_k coefficient by coefficient.
    Compare {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Spin character table X^lambda_rho from Schur Q-functions.
    Oracle {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Expansion of a spin function in odd power sums.
    Poly {
        #[arg(long, value_enum)]
        function: Expansion,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<spin_kerov::Error> for Failure {
    fn from(e: spin_kerov::Error) -> Self {
        use spin_kerov::Error as E;
        match e {
            E::InvalidArgument(_) | E::InvalidPartition(_) | E::Parse(_) | E::SizeMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

struct Output {
    body: String,
    /// Exit with 3: the sweep produced evidence against the expected pattern.
    finding: bool,
}

impl Output {
    fn plain(body: String) -> Self {
        Self { body, finding: false }
    }
}

fn k_cap() -> Result<u32, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => {
            let cap = v
                .parse::<u32>()
                .map_err(|_| Failure::Usage(format!("{CAP_VAR} must be a positive integer, got {v:?}")))?;
            if cap > DEFAULT_CAP {
                eprintln!("warning: {CAP_VAR}={cap} raises the k limit above {DEFAULT_CAP}; memory use grows quickly");
            }
            Ok(cap)
        }
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn check_k(k: u32) -> Result<(), Failure> {
    let cap = k_cap()?;
    if k == 0 {
        return Err(Failure::Usage("k must be positive".into()));
    }
    if k > cap {
        return Err(Failure::Usage(format!("k = {k} exceeds the limit {cap}; set {CAP_VAR} to raise it")));
    }
    Ok(())
}

fn check_odd(k: u32) -> Result<(), Failure> {
    if k % 2 == 0 {
        return Err(Failure::Usage(format!("k must be odd, got {k}")));
    }
    check_k(k)
}

fn render_kerov(p: &KerovPolynomial, format: Format, command: &str, params: Value) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Latex => p.to_latex(),
        Format::Json => pretty(&envelope(command, params, kerov_to_json(p))),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn poly_latex(p: &Poly) -> String {
    let text = p.to_string();
    let mut out = String::new();
    for tok in text.split(' ') {
        if !out.is_empty() {
            out.push(' ');
        }
        if let Some(rest) = tok.strip_prefix('p') {
            match rest.split_once('^') {
                Some((s, e)) => write!(out, "p_{{{s}}}^{{{e}}}").unwrap(),
                None => write!(out, "p_{{{rest}}}").unwrap(),
            }
        } else if let Some((n, d)) = tok.split_once('/') {
            write!(out, "\\frac{{{n}}}{{{d}}}").unwrap();
        } else {
            out.push_str(tok);
        }
    }
    out
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::SpinKerov { k, basis, format } => {
            check_odd(*k)?;
            let (p, name) = match basis {
                Basis::Frak => (spin_kerov(*k)?, "frak"),
                Basis::Symmetrized => (symmetrized_spin_kerov(*k)?, "symmetrized"),
            };
            Ok(Output::plain(render_kerov(&p, *format, "spin-kerov", json!({"k": k, "basis": name}))))
        }
        Command::Kerov { k, format } => {
            check_k(*k)?;
            let p = ordinary_kerov(*k)?;
            Ok(Output::plain(render_kerov(&p, *format, "kerov", json!({"k": k}))))
        }
        Command::Check { family, max_k, parallel, format } => check(*family, *max_k, *parallel, *format),
        Command::Eval { function, k, partition, format } => {
            let v = eval(*function, *k, partition)?;
            Ok(Output::plain(match format {
                Format::Json => pretty(&envelope(
                    "eval",
                    json!({"function": function_name(*function), "k": k, "partition": partition}),
                    rational_to_json(&v),
                )),
                _ => v.to_string(),
            }))
        }
        Command::Compare { k, format } => {
            check_odd(*k)?;
            if *k < 3 {
                return Err(Failure::Usage("compare needs k >= 3".into()));
            }
            let r = coincidence_report(*k)?;
            Ok(Output::plain(match format {
                Format::Json => pretty(&envelope("compare", json!({"k": k}), comparison_to_json(&r))),
                _ => comparison_text(&r),
            }))
        }
        Command::Oracle { n, format } => {
            if *n == 0 || *n > 20 {
                return Err(Failure::Usage(format!("n must be between 1 and 20, got {n}")));
            }
            let t = character_table(*n)?;
            Ok(Output::plain(match format {
                Format::Text => {
                    let mut s = String::new();
                    for ((lambda, rho), x) in &t.values {
                        writeln!(s, "{lambda}\t{rho}\t{x}").unwrap();
                    }
                    s.trim_end().to_string()
                }
                _ => pretty(&envelope("oracle", json!({"n": n}), character_table_to_json(&t))),
            }))
        }
        Command::Poly { function, k, format } => {
            check_k(*k)?;
            let (p, name) = match function {
                Expansion::SpinChar => {
                    check_odd(*k)?;
                    (spin_character_poly(*k)?, "spin-char")
                }
                Expansion::SpinCumulant => {
                    if k % 2 == 1 {
                        return Err(Failure::Usage(format!("spin cumulants have even index, got {k}")));
                    }
                    (spin_free_cumulant_poly(*k)?, "spin-cumulant")
                }
                Expansion::SymmetrizedCumulant => (symmetrized_cumulant_poly(*k)?, "symmetrized-cumulant"),
            };
            Ok(Output::plain(match format {
                Format::Text => p.to_string(),
                Format::Latex => poly_latex(&p),
                Format::Json => pretty(&envelope("poly", json!({"function": name, "k": k}), poly_to_json(&p))),
            }))
        }
    }
}

fn function_name(f: Function) -> &'static str {
    match f {
        Function::SpinChar => "spin-char",
        Function::SpinCumulant => "spin-cumulant",
        Function::SymmetrizedCumulant => "symmetrized-cumulant",
        Function::OrdinaryChar => "ordinary-char",
        Function::FreeCumulant => "free-cumulant",
        Function::Moment => "moment",
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse::<Partition>()
        .map_err(|e| Failure::Usage(format!("cannot parse partition {text:?}: {e}")))
}

fn parse_strict(text: &str) -> Result<StrictPartition, Failure> {
    StrictPartition::try_from(parse_partition(text)?)
        .map_err(|e| Failure::Usage(format!("{text:?} is not a strict partition: {e}")))
}

fn eval(function: Function, k: u32, partition: &str) -> Result<Rational, Failure> {
    Ok(match function {
        Function::SpinChar => {
            if k % 2 == 0 {
                return Err(Failure::Usage(format!("spin characters have odd index, got {k}")));
            }
            spin_character_eval(k, &parse_strict(partition)?)?
        }
        Function::SpinCumulant => {
            if k == 0 || k % 2 == 1 {
                return Err(Failure::Usage(format!("spin cumulants have even positive index, got {k}")));
            }
            spin_free_cumulant_eval(k, &parse_strict(partition)?)?
        }
        Function::SymmetrizedCumulant => {
            if k < 2 {
                return Err(Failure::Usage(format!("symmetrized cumulants start at k = 2, got {k}")));
            }
            symmetrized_cumulant_eval(k, &parse_strict(partition)?)?
        }
        Function::OrdinaryChar => characters::ordinary_character_eval(k, &parse_partition(partition)?)?,
        Function::FreeCumulant => biane_cumulant(&parse_partition(partition)?, k)?,
        Function::Moment => {
            let mu = parse_partition(partition)?;
            if k == 0 {
                Rational::from_integer(1.into())
            } else {
                transition_moments(&mu, k as usize).get(k as usize).clone()
            }
        }
    })
}

/// Spin Kerov polynomials with published expansions, in display form.
const KNOWN_SPIN: [(u32, &str); 5] = [
    (1, "R2"),
    (3, "R4 + R2"),
    (5, "R6 + 15 R4 + 10 R2^2 + 8 R2"),
    (7, "R8 + 70 R6 + 168 R4 R2 + 56 R2^3 + 469 R4 + 560 R2^2 + 180 R2"),
    (
        9,
        "R10 + 210 R8 + 600 R6 R2 + 540 R4^2 + 1080 R4 R2^2 + 240 R2^4 + 5985 R6 + 23016 R4 R2 + 9120 R2^3 \
         + 26060 R4 + 41628 R2^2 + 8064 R2",
    ),
];

fn record_line(r: &PositivityRecord, r_family: GeneratorFamily) -> String {
    if r.holds() {
        return "all nonnegative integers".into();
    }
    let terms: Vec<String> = r
        .offending
        .iter()
        .map(|(m, c)| {
            format!("{c} {}", m.render(r_family))
        })
        .collect();
    let kind = match (r.all_nonnegative, r.all_integers) {
        (false, false) => "negative and non-integer coefficients",
        (false, true) => "negative coefficients",
        _ => "non-integer coefficients",
    };
    format!("{kind}: {}", terms.join("; "))
}

fn check(family: Family, max_k: u32, parallel: bool, format: Format) -> Result<Output, Failure> {
    check_k(max_k)?;
    let gf = GeneratorFamily::from(family);
    let indices = sweep_indices(max_k, gf);
    let compute = |k: u32| -> Result<(u32, KerovPolynomial), spin_kerov::Error> {
        let p = kerov_for(gf, k)?;
        eprintln!("k = {k} done");
        Ok((k, p))
    };
    let mut polys: Vec<(u32, KerovPolynomial)> = if parallel {
        indices.par_iter().map(|&k| compute(k)).collect::<Result<_, _>>()?
    } else {
        indices.iter().map(|&k| compute(k)).collect::<Result<_, _>>()?
    };
    polys.sort_by_key(|(k, _)| *k);
    let records: Vec<PositivityRecord> =
        polys.iter().map(|(k, p)| PositivityRecord::from_polynomial(*k, p)).collect();

    let mut lines = Vec::new();
    let mut finding = false;
    for ((k, p), r) in polys.iter().zip(&records) {
        let mut note = String::new();
        match gf {
            GeneratorFamily::Spin => {
                if let Some((_, known)) = KNOWN_SPIN.iter().find(|(j, _)| j == k) {
                    let known = known.split_whitespace().collect::<Vec<_>>().join(" ");
                    if p.to_string() != known {
                        return Err(Failure::Internal(format!("K^spin_{k} = {p} differs from the known expansion")));
                    }
                    note.push_str(" (matches known expansion)");
                } else {
                    note.push_str(" (finding)");
                    finding |= !r.holds();
                }
            }
            GeneratorFamily::Ordinary => {
                if !r.holds() {
                    return Err(Failure::Internal(format!("K_{k} has {}", record_line(r, gf))));
                }
            }
            GeneratorFamily::Symmetrized => {}
        }
        lines.push(format!("k = {k}: {}{note}", record_line(r, gf)));
    }
    let summary = if records.iter().all(PositivityRecord::holds) {
        "all nonnegative integers".to_string()
    } else {
        let bad: Vec<String> = records.iter().filter(|r| !r.holds()).map(|r| r.k.to_string()).collect();
        format!("coefficients outside the nonnegative integers at k = {}", bad.join(", "))
    };
    let body = match format {
        Format::Json => pretty(&envelope(
            "check",
            json!({"family": gf.name(), "maxK": max_k, "parallel": parallel}),
            json!({"records": positivity_to_json(&records), "summary": summary}),
        )),
        _ => {
            lines.push(summary);
            lines.join("\n")
        }
    };
    Ok(Output { body, finding })
}

fn comparison_text(r: &ComparisonReport) -> String {
    let mut s = String::new();
    writeln!(s, "K_{k} against K^spin_{k}", k = r.k).unwrap();
    writeln!(s, "linear terms (ordinary = spin):").unwrap();
    for m in &r.linear_matches {
        let mark = if m.matches { "match" } else { "MISMATCH" };
        writeln!(s, "  R{}: {} = {} {mark}", m.subscript, m.ordinary, m.spin).unwrap();
    }
    writeln!(s, "weight {} terms (spin / ordinary, predicted power of two):", r.k - 1).unwrap();
    for e in &r.top_degree_ratios {
        let ratio = e.ratio.as_ref().map_or("undefined".to_string(), Rational::to_string);
        let mark = if e.matches { "match" } else { "MISMATCH" };
        writeln!(
            s,
            "  {}: {}/{} = {ratio}, predicted {} {mark}",
            e.monomial.render(GeneratorFamily::Spin),
            e.spin,
            e.ordinary,
            e.predicted
        )
        .unwrap();
    }
    s.trim_end().to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = out.body + "\n";
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{body}"),
            }
            if out.finding {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
