//! Command-line runner: ingest Hopf-algebra/module data (builtin name or
//! JSON file), run the selected verification suites, and emit a pass/fail
//! report with exact counterexample witnesses.
//!
//! Exit codes: 0 when every checked identity holds, 1 when any check
//! fails (the report is still emitted), 2 on usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use staraut::builtin::builtin;
use staraut::comonadside::MonoidalComonad;
use staraut::hopf::HopfAlgebra;
use staraut::input::InputDoc;
use staraut::modcat::{star_autonomy_report, validate_module, HModule};
use staraut::monadside::OpmonoidalMonad;
use staraut::vectcat::{check_section1, VMor, VObj};
use staraut::{AxiomReport, FieldSpec, Matrix};

#[derive(Parser)]
#[command(
    name = "staraut",
    version,
    about = "Exact verification of duality structure built from Hopf algebra data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf-algebra axioms and the module axioms of the suite.
    ValidateHopf(RunArgs),
    /// Check monad/comonad coherence and the six duality axioms.
    Axioms(RunArgs),
    /// Check the lifting of duality to coalgebras: coaction laws, the
    /// action/coaction dictionary, and lifted duals.
    Lifting(RunArgs),
    /// Check the ambient identity suite and the full lifted-duality
    /// report on the module suite.
    StarAutonomy(RunArgs),
    /// Run every suite.
    All(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON input file (mutually exclusive with --builtin).
    #[arg(short = 'i', long)]
    input: Option<PathBuf>,
    /// Builtin example: c2, s3, or sweedler (mutually exclusive with -i).
    #[arg(long)]
    builtin: Option<String>,
    /// Ground field for --builtin: q, or gf:<p>. File input declares its
    /// own field.
    #[arg(long, default_value = "q")]
    field: String,
    /// Object dimensions for the dimension-indexed suites.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    dims: Vec<usize>,
    /// Seed for the sampled naturality checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct RunResult {
    command: String,
    field: String,
    hopf: String,
    dims: Vec<usize>,
    seed: u64,
    pass: bool,
    suites: Vec<AxiomReport>,
}

fn load(args: &RunArgs) -> Result<(FieldSpec, HopfAlgebra, Vec<HModule>), String> {
    if args.dims.is_empty() || args.dims.contains(&0) {
        return Err("dims must be a non-empty list of positive integers".into());
    }
    match (&args.input, &args.builtin) {
        (Some(_), Some(_)) => Err("pass exactly one of --input and --builtin, not both".into()),
        (None, None) => Err("pass exactly one of --input and --builtin".into()),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let doc = InputDoc::from_json(&text).map_err(|e| e.to_string())?;
            let p = doc.interpret().map_err(|e| e.to_string())?;
            Ok((p.field, p.hopf, p.modules))
        }
        (None, Some(name)) => {
            let field = FieldSpec::parse(&args.field).map_err(|e| e.to_string())?;
            let (h, mods) = builtin(name, field).map_err(|e| e.to_string())?;
            Ok((field, h, mods))
        }
    }
}

fn validate_suites(hopf: &HopfAlgebra, modules: &[HModule]) -> Vec<AxiomReport> {
    let mut suites = vec![hopf.validate()];
    for m in modules {
        suites.push(validate_module(hopf, m));
    }
    suites
}

fn axiom_suites(hopf: &HopfAlgebra, dims: &[usize], seed: u64) -> Vec<AxiomReport> {
    let t = OpmonoidalMonad::new(hopf);
    let g = MonoidalComonad::new(hopf);
    vec![
        t.check_opmonoidal(dims),
        t.check_star_axioms(dims),
        t.check_nu_naturality_sampled(dims, seed, 3),
        g.check_comonad(dims),
        g.check_axioms(dims),
        g.check_axioms_5_6(dims),
        g.check_nu_star_recovery(dims),
        g.check_gtalg_round_trip(dims),
    ]
}

fn lifting_suites(hopf: &HopfAlgebra, modules: &[HModule]) -> Vec<AxiomReport> {
    let g = MonoidalComonad::new(hopf);
    let mut suites = Vec::new();
    for m in modules {
        let action = VMor {
            dom: g.monad.t_obj(VObj(m.dim)),
            cod: VObj(m.dim),
            mat: m.action.clone(),
        };
        suites.push(g.check_coalgebra(&m.name, &g.coalgebra_of(&action)));
        suites.push(g.check_gtalg_round_trip_on(&m.name, &action));
        suites.push(staraut::modcat::check_dual_consistency(hopf, m));
    }
    suites
}

fn star_autonomy_suites(
    field: FieldSpec,
    hopf: &HopfAlgebra,
    modules: &[HModule],
    dims: &[usize],
) -> Vec<AxiomReport> {
    vec![check_section1(dims, field), star_autonomy_report(hopf, modules)]
}

fn run(command_name: &str, args: &RunArgs) -> Result<RunResult, String> {
    let (field, hopf, modules) = load(args)?;
    let dims = &args.dims;
    let suites = match command_name {
        "validate-hopf" => validate_suites(&hopf, &modules),
        "axioms" => axiom_suites(&hopf, dims, args.seed),
        "lifting" => lifting_suites(&hopf, &modules),
        "star-autonomy" => star_autonomy_suites(field, &hopf, &modules, dims),
        _ => {
            let mut s = validate_suites(&hopf, &modules);
            s.extend(axiom_suites(&hopf, dims, args.seed));
            s.extend(lifting_suites(&hopf, &modules));
            s.extend(star_autonomy_suites(field, &hopf, &modules, dims));
            s
        }
    };
    let field_name = match field {
        FieldSpec::Rational => "q".to_string(),
        FieldSpec::Prime(p) => format!("gf:{p}"),
    };
    let pass = suites.iter().all(AxiomReport::all_pass);
    Ok(RunResult {
        command: command_name.to_string(),
        field: field_name,
        hopf: hopf.name.clone(),
        dims: dims.clone(),
        seed: args.seed,
        pass,
        suites,
    })
}

fn render_matrix(label: &str, m: &Matrix, out: &mut String) {
    out.push_str(&format!("      {label} ({}x{}):\n", m.rows(), m.cols()));
    for row in m.to_dense() {
        let cells: Vec<String> = row.iter().map(|s| s.literal()).collect();
        out.push_str(&format!("        [{}]\n", cells.join(", ")));
    }
}

fn render_text(result: &RunResult) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "staraut {} — {} over {}, dims {:?}, seed {}\n",
        result.command, result.hopf, result.field, result.dims, result.seed
    ));
    for suite in &result.suites {
        out.push_str(&format!("\n== {} ==\n", suite.title));
        for item in &suite.items {
            let verdict = if item.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {verdict}  {} @ {}\n", item.axiom, item.objects));
            if let Some(w) = &item.witness {
                render_matrix("lhs", &w.lhs, &mut out);
                render_matrix("rhs", &w.rhs, &mut out);
                render_matrix("difference", &w.difference, &mut out);
            }
        }
    }
    let total: usize = result.suites.iter().map(|s| s.items.len()).sum();
    let failed: usize = result.suites.iter().map(|s| s.failures().count()).sum();
    out.push_str(&format!(
        "\noverall: {} ({} checks, {} failed)\n",
        if result.pass { "PASS" } else { "FAIL" },
        total,
        failed
    ));
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::ValidateHopf(a) => ("validate-hopf", a),
        Command::Axioms(a) => ("axioms", a),
        Command::Lifting(a) => ("lifting", a),
        Command::StarAutonomy(a) => ("star-autonomy", a),
        Command::All(a) => ("all", a),
    };
    let started = Instant::now();
    match run(name, args) {
        Ok(result) => {
            match args.format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&result).expect("report serializes")
                    );
                }
                Format::Text => {
                    print!("{}", render_text(&result));
                    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
                }
            }
            if result.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
