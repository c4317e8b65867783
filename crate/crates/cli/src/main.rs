use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use forest_hopf::checks::{self, LawReport, Suite};
use forest_hopf::enumerate::{decorated_count, forests_of_degree};
use forest_hopf::operated::{evaluate, forest_target};
use forest_hopf::text::{
    element_to_json, format_element, format_forest, format_tensor2, forest_to_json, latex_element,
    latex_forest, latex_tensor2, parse_forest, tensor2_to_json, Coefficient, TensorStyle,
};
use forest_hopf::{Decoration, Element, Forest, HopfAlgebra, RatPoly, Specialization, SymbolTable, Tensor2};

const DEFAULT_DEGREE_CAP: usize = 7;

#[derive(Parser)]
#[command(name = "forest-hopf", version, about = "Weighted Hopf algebra of decorated planar rooted forests")]
struct Cli {
    /// Leaf-only labels, comma separated.
    #[arg(long = "x", global = true, default_value = "x,y")]
    x_labels: String,
    /// Grafting labels, comma separated.
    #[arg(long = "omega", global = true, default_value = "a,b,c")]
    omega_labels: String,
    /// Weight values, e.g. `la_a=0,mu_x=1/2`; unassigned weights stay symbolic.
    #[arg(long, global = true)]
    weights: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write tensors as `(F)o(G)` instead of `(F) ⊗ (G)`.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursive,
    Cuts,
}

#[derive(Subcommand)]
enum Command {
    /// Concatenation product of two forests.
    Product { a: String, b: String },
    Coproduct {
        forest: String,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    Counit {
        forest: String,
        /// Use the closed product formula.
        #[arg(long)]
        closed: bool,
    },
    Antipode { forest: String },
    /// Replace every leaf by leaf plus its weight.
    Tilde { forest: String },
    /// List subforests with their quotients.
    Subforests { forest: String },
    /// Evaluate in the forest algebra with renamed X labels.
    Eval {
        forest: String,
        /// Renamings `x=y`, comma separated.
        #[arg(long, default_value = "")]
        rename: String,
    },
    /// Count (and optionally list) forests by degree.
    Enumerate {
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        list: bool,
    },
    /// Run identity checks over all forests up to a degree.
    Check {
        /// all, coassoc, counit, bialgebra, cocycle, antipode, equivalence or homomorphism
        suite: String,
        #[arg(long)]
        max_degree: usize,
        /// Also rerun with this many random rational weight assignments.
        #[arg(long, default_value_t = 0)]
        seed_specializations: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

struct Session {
    symbols: SymbolTable,
    hopf: HopfAlgebra<RatPoly>,
    format: Format,
    style: TensorStyle,
    weights: Option<Specialization>,
}

enum Failure {
    Usage(String),
    Violation,
}

impl From<forest_hopf::Error> for Failure {
    fn from(e: forest_hopf::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn split_labels(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|l| !l.is_empty()).collect()
}

impl Session {
    fn new(cli: &Cli) -> Result<Session, Failure> {
        let symbols = SymbolTable::new(split_labels(&cli.x_labels), split_labels(&cli.omega_labels))?;
        let weights = cli
            .weights
            .as_deref()
            .map(|w| Specialization::parse(w, &symbols))
            .transpose()?;
        let spec = weights.clone().unwrap_or_default();
        let hopf = HopfAlgebra::from_weights(&symbols, |d| spec.weight(d));
        Ok(Session {
            symbols,
            hopf,
            format: cli.format,
            style: if cli.ascii { TensorStyle::Ascii } else { TensorStyle::Unicode },
            weights,
        })
    }

    fn forest(&self, src: &str) -> Result<Forest, Failure> {
        Ok(parse_forest(src, &self.symbols)?)
    }

    fn emit(&self, text: String, latex: String, value: Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Latex => println!("{latex}"),
            Format::Json => {
                let mut out = json!({ "schema": 1 });
                out["result"] = value;
                println!("{out}");
            }
        }
    }

    fn element<C: Coefficient>(&self, e: &Element<C>) {
        self.emit(
            format_element(e, &self.symbols),
            latex_element(e, &self.symbols),
            element_to_json(e, &self.symbols),
        );
    }

    fn tensor<C: Coefficient>(&self, t: &Tensor2<C>) {
        self.emit(
            format_tensor2(t, &self.symbols, self.style),
            latex_tensor2(t, &self.symbols),
            tensor2_to_json(t, &self.symbols),
        );
    }

    fn scalar<C: Coefficient>(&self, c: &C) {
        self.emit(
            c.to_text(&self.symbols),
            c.to_latex(&self.symbols),
            c.to_json(&self.symbols),
        );
    }
}

fn degree_cap() -> Result<usize, Failure> {
    match std::env::var("FOREST_HOPF_MAX_DEGREE") {
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("FOREST_HOPF_MAX_DEGREE is not a number: {v}"))),
    }
}

fn capped(n: usize) -> Result<usize, Failure> {
    let cap = degree_cap()?;
    if n > cap {
        return Err(Failure::Usage(format!(
            "max degree {n} exceeds the limit {cap} (set FOREST_HOPF_MAX_DEGREE to raise it)"
        )));
    }
    Ok(n)
}

fn parse_renaming(src: &str, symbols: &SymbolTable) -> Result<Vec<(Decoration, Decoration)>, Failure> {
    let mut out = Vec::new();
    for pair in split_labels(src) {
        let (a, b) = pair
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected `x=y` in --rename, got `{pair}`")))?;
        let (a, b) = (symbols.lookup(a.trim())?, symbols.lookup(b.trim())?);
        if a.is_omega() || b.is_omega() {
            return Err(Failure::Usage(format!("--rename only maps X labels: `{pair}`")));
        }
        out.push((a, b));
    }
    Ok(out)
}

fn report_json(r: &LawReport) -> Value {
    json!({
        "law": r.law,
        "checked": r.checked,
        "violations": r.violations,
        "counterexample": r.counterexample,
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let s = Session::new(cli)?;
    let sym = &s.symbols;
    match &cli.command {
        Command::Product { a, b } => {
            let f = s.forest(a)?.concat(&s.forest(b)?);
            s.element(&Element::<RatPoly>::forest(f));
        }
        Command::Coproduct { forest, method } => {
            let f = s.forest(forest)?;
            let t = match method {
                Method::Recursive => s.hopf.coproduct_forest(&f),
                Method::Cuts => s.hopf.coproduct_cuts_forest(&f),
            };
            s.tensor(&t);
        }
        Command::Counit { forest, closed } => {
            let f = s.forest(forest)?;
            let c = if *closed { s.hopf.counit_closed(&f) } else { s.hopf.counit_forest(&f) };
            s.scalar(&c);
        }
        Command::Antipode { forest } => s.element(&s.hopf.antipode_forest(&s.forest(forest)?)),
        Command::Tilde { forest } => s.element(&s.hopf.leaf_tilde(&s.forest(forest)?)),
        Command::Subforests { forest } => {
            let f = s.forest(forest)?;
            let rows: Vec<(Forest, Forest, Element<RatPoly>)> = f
                .subforest_pairs()
                .into_iter()
                .map(|(g, q)| {
                    let t = s.hopf.leaf_tilde(&q);
                    (g, q, t)
                })
                .collect();
            let text = rows
                .iter()
                .map(|(g, q, t)| {
                    format!("{} | {} | {}", format_forest(g, sym), format_forest(q, sym), format_element(t, sym))
                })
                .collect::<Vec<_>>()
                .join("\n");
            let latex = rows
                .iter()
                .map(|(g, q, t)| {
                    format!("{} & {} & {} \\\\", latex_forest(g, sym), latex_forest(q, sym), latex_element(t, sym))
                })
                .collect::<Vec<_>>()
                .join("\n");
            let value = rows
                .iter()
                .map(|(g, q, t)| {
                    json!({
                        "subforest": forest_to_json(g, sym),
                        "quotient": forest_to_json(q, sym),
                        "tilde": element_to_json(t, sym),
                    })
                })
                .collect();
            s.emit(text, latex, Value::Array(value));
        }
        Command::Eval { forest, rename } => {
            let f = s.forest(forest)?;
            let map = parse_renaming(rename, sym)?;
            let target = forest_target::<RatPoly>(|d| map.iter().find(|(a, _)| *a == d).map_or(d, |(_, b)| *b));
            s.element(&evaluate(&f, &target, sym)?);
        }
        Command::Enumerate { max_degree, list } => {
            let n = capped(*max_degree)?;
            let (xs, os) = (sym.x_labels().count(), sym.omega_labels().count());
            let mut text = Vec::new();
            let mut latex = Vec::new();
            let mut value = Vec::new();
            for d in 0..=n {
                let count = decorated_count(d, xs, os);
                text.push(format!("degree {d}: {count}"));
                latex.push(format!("{d} & {count} \\\\"));
                let mut entry = json!({ "degree": d, "count": count.to_string() });
                if *list {
                    let forests = forests_of_degree(d, sym);
                    text.extend(forests.iter().map(|f| format!("  {}", format_forest(f, sym))));
                    latex.extend(forests.iter().map(|f| format!("  {}", latex_forest(f, sym))));
                    entry["forests"] = forests.iter().map(|f| forest_to_json(f, sym)).collect();
                }
                value.push(entry);
            }
            s.emit(text.join("\n"), latex.join("\n"), Value::Array(value));
        }
        Command::Check { suite, max_degree, seed_specializations, seed } => {
            let n = capped(*max_degree)?;
            let suite = Suite::parse(suite).ok_or_else(|| Failure::Usage(format!("unknown check `{suite}`")))?;
            let mut reports = checks::run(suite, &s.hopf, sym, n);
            if s.weights.is_none() {
                reports.extend(checks::run_specialized(suite, sym, n, *seed_specializations, *seed));
            }
            let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>();
            s.emit(
                text.join("\n"),
                text.join("\n"),
                Value::Array(reports.iter().map(report_json).collect()),
            );
            if reports.iter().any(|r| !r.is_ok()) {
                return Err(Failure::Violation);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
