//! Command-line front end: reproduce element matrices and orbit tables,
//! verify deformation constraints, scan candidates, and export numeric
//! root data.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use clap::{Args, Parser, Subcommand};
use rootdeform::{
    build_theta, check_invariance, export_model, factorize, reduced_root_space, render_orbit_table,
    scan_report, verify_constraints, Error, FactorizedElement, ModelKind, ModelParams, RootSystem,
    SuperscriptStyle,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rootdeform", version, about = "Complex deformations of root systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SystemArgs {
    /// Catalog name: A{n}, D{n}, E6, E7, E8, B2, G2
    #[arg(long, default_value = "E8")]
    system: String,
    /// JSON file with {"cartan": [[...]], "minus": [vertices]} (overrides --system)
    #[arg(long)]
    system_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct ElementArgs {
    /// Minus-colored vertex subset, e.g. 3,5,7
    #[arg(long, value_delimiter = ',')]
    minus: Vec<usize>,
    /// Plus-colored vertex subset, e.g. 2,4,6,8
    #[arg(long, value_delimiter = ',')]
    plus: Vec<usize>,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the action matrix of an element (factorized or by word)
    ShowElement {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        element: ElementArgs,
        /// Arbitrary generator word, e.g. 3,5,7,2,4,6,8 (overrides --minus/--plus)
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the order of an element
    Order {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build and print the deformation matrix
    Theta {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        element: ElementArgs,
        /// Also evaluate numerically at this epsilon
        #[arg(long)]
        epsilon: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify the five deformation constraints symbolically
    Verify {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the reduced orbit table
    Orbits {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        element: ElementArgs,
        /// Seed orbits with gamma_i = c_i alpha_i instead of alpha_i
        #[arg(long)]
        gamma: bool,
        /// Unicode superscripts in the table
        #[arg(long)]
        pretty: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check invariance of the reduced root space under both factors
    Invariance {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        element: ElementArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify every bicolored candidate of the system
    Scan {
        #[command(flatten)]
        system: SystemArgs,
        /// Override the rank guard on the candidate count
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Export numeric deformed-root data for model studies
    Export {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
        /// calogero | toda
        #[arg(long, default_value = "calogero")]
        model: String,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[arg(long, default_value_t = 1.0)]
        coupling: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        /// Sample point for the potential, e.g. 0.3,0.5,...
        #[arg(long, value_delimiter = ',')]
        sample: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn load_system(args: &SystemArgs) -> Result<RootSystem, Error> {
    match &args.system_file {
        Some(path) => RootSystem::load_custom(path),
        None => RootSystem::catalog(&args.system),
    }
}

fn load_element(rs: &RootSystem, el: &ElementArgs) -> Result<FactorizedElement, Error> {
    factorize(rs, &el.minus, &el.plus)
}

fn emit(output: &OutputArgs, text: String) -> Result<(), Error> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{}", text),
    }
    Ok(())
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    let mut s = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>3}", x)).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    // returns Ok(verification_failed)
    match cli.command {
        Command::ShowElement {
            system,
            element,
            word,
            output,
        } => {
            let rs = load_system(&system)?;
            let w = if !word.is_empty() {
                rs.compose(&word)?
            } else {
                load_element(&rs, &element)?.sigma
            };
            let text = if output.json {
                format!("{}\n", serde_json::to_string(&w)?)
            } else {
                matrix_text(&w.matrix)
            };
            emit(&output, text)?;
            Ok(false)
        }
        Command::Order {
            system,
            element,
            word,
            output,
        } => {
            let rs = load_system(&system)?;
            let w = if !word.is_empty() {
                rs.compose(&word)?
            } else {
                load_element(&rs, &element)?.sigma
            };
            let n = w.order()?;
            let text = if output.json {
                format!("{{\"order\":{}}}\n", n)
            } else {
                format!("{}\n", n)
            };
            emit(&output, text)?;
            Ok(false)
        }
        Command::Theta {
            system,
            element,
            epsilon,
            output,
        } => {
            let rs = load_system(&system)?;
            let fe = load_element(&rs, &element)?;
            let theta = build_theta(&fe)?;
            let text = if output.json {
                let mut obj = serde_json::Map::new();
                obj.insert("theta".into(), serde_json::to_value(theta.to_json_rows())?);
                if let Some(eps) = epsilon {
                    obj.insert("epsilon".into(), serde_json::json!(eps));
                    obj.insert(
                        "numeric".into(),
                        serde_json::to_value(theta.eval_pairs(eps))?,
                    );
                }
                format!("{}\n", serde_json::Value::Object(obj))
            } else {
                let mut s = String::new();
                for row in &theta.mat.0 {
                    let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    s.push_str(&cells.join(" | "));
                    s.push('\n');
                }
                if let Some(eps) = epsilon {
                    s.push_str(&format!("\nnumeric at epsilon = {}:\n", eps));
                    for row in theta.eval_pairs(eps) {
                        let cells: Vec<String> = row
                            .iter()
                            .map(|[re, im]| format!("{:.6}{:+.6}i", re, im))
                            .collect();
                        s.push_str(&cells.join("  "));
                        s.push('\n');
                    }
                }
                s
            };
            emit(&output, text)?;
            Ok(false)
        }
        Command::Verify {
            system,
            element,
            output,
        } => {
            let rs = load_system(&system)?;
            let fe = load_element(&rs, &element)?;
            let theta = build_theta(&fe)?;
            let rep = verify_constraints(&theta, &fe);
            let text = if output.json {
                format!("{}\n", serde_json::to_string(&rep)?)
            } else {
                format!(
                    "intertwine_minus: {}\nintertwine_plus: {}\ncommutes_with_sigma: {}\n\
                     antiunitary: {}\ndet: {} (ok: {})\nlimit: {}\nall: {}\n",
                    rep.intertwine_minus,
                    rep.intertwine_plus,
                    rep.commutes_with_sigma,
                    rep.antiunitary,
                    rep.det_value,
                    rep.det_ok,
                    rep.limit_ok,
                    if rep.all_pass() { "PASS" } else { "FAIL" }
                )
            };
            emit(&output, text)?;
            Ok(!rep.all_pass())
        }
        Command::Orbits {
            system,
            element,
            gamma,
            pretty,
            output,
        } => {
            let rs = load_system(&system)?;
            let fe = load_element(&rs, &element)?;
            let space = reduced_root_space(&rs, &fe, gamma);
            let style = if pretty {
                SuperscriptStyle::Unicode
            } else {
                SuperscriptStyle::Plain
            };
            let text = if output.json {
                format!("{}\n", serde_json::to_string(&space)?)
            } else {
                let mut s = render_orbit_table(&space, style)?;
                s.push_str(&format!(
                    "\n{} distinct roots, {} with multiplicity (order {})\n",
                    space.root_set.len(),
                    space.multiset_size(),
                    space.order
                ));
                s
            };
            emit(&output, text)?;
            Ok(false)
        }
        Command::Invariance {
            system,
            element,
            output,
        } => {
            let rs = load_system(&system)?;
            let fe = load_element(&rs, &element)?;
            let space = reduced_root_space(&rs, &fe, false);
            let rep = check_invariance(&rs, &fe, &space);
            let ok = rep.invariant_minus && rep.invariant_plus;
            let text = if output.json {
                format!("{}\n", serde_json::to_string(&rep)?)
            } else {
                let mut s = String::new();
                for (tag, ws) in [("-", &rep.witnesses_minus), ("+", &rep.witnesses_plus)] {
                    for w in ws {
                        s.push_str(&format!("sigma~_{} a{} = {}", tag, w.vertex, w.image));
                        if let Some((n, j)) = w.identity {
                            s.push_str(&format!(" = sigma~^{} a{}", n, j));
                        }
                        s.push('\n');
                    }
                }
                s.push_str(&format!(
                    "invariant_minus: {}\ninvariant_plus: {}\n",
                    rep.invariant_minus, rep.invariant_plus
                ));
                s
            };
            emit(&output, text)?;
            Ok(!ok)
        }
        Command::Scan {
            system,
            force,
            output,
        } => {
            let rs = load_system(&system)?;
            let report = scan_report(&rs, force)?;
            if output.json {
                emit(&output, report)?;
            } else {
                let mut s = String::new();
                s.push_str("minus          plus           order  ansatz  invariant  trivial\n");
                for line in report.lines() {
                    let rec: serde_json::Value = serde_json::from_str(line)?;
                    let fmt_set = |v: &serde_json::Value| -> String {
                        let items: Vec<String> = v
                            .as_array()
                            .unwrap()
                            .iter()
                            .map(|x| x.to_string())
                            .collect();
                        format!("{{{}}}", items.join(","))
                    };
                    let opt = |v: Option<&serde_json::Value>| -> String {
                        v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
                    };
                    s.push_str(&format!(
                        "{:<14} {:<14} {:>5}  {:<6}  {:<9}  {}\n",
                        fmt_set(&rec["v_minus"]),
                        fmt_set(&rec["v_plus"]),
                        rec["order"],
                        rec["ansatz_applicable"],
                        opt(rec.get("invariant")),
                        opt(rec.get("trivial")),
                    ));
                }
                emit(&output, s)?;
            }
            Ok(false)
        }
        Command::Export {
            system,
            element,
            epsilon,
            model,
            omega,
            coupling,
            mass,
            beta,
            sample,
            output,
        } => {
            let rs = load_system(&system)?;
            let fe = load_element(&rs, &element)?;
            let theta = build_theta(&fe)?;
            let space = reduced_root_space(&rs, &fe, false);
            let kind = match model.as_str() {
                "calogero" => ModelKind::Calogero,
                "toda" => ModelKind::Toda,
                other => return Err(Error::Usage(format!("unknown model '{}'", other))),
            };
            let params = ModelParams {
                omega,
                coupling,
                mass,
                beta,
            };
            let sample_point = if sample.is_empty() {
                None
            } else {
                Some(sample)
            };
            let export = export_model(
                &rs,
                &space,
                &theta,
                &element.minus,
                &element.plus,
                epsilon,
                kind,
                params,
                sample_point,
            )?;
            emit(&output, format!("{}\n", serde_json::to_string_pretty(&export)?))?;
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(false) => ExitCode::from(0),
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
