mod error;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use tropreal::groebner::{Ideal, TieBreak};
use tropreal::sos::{reduce_degree, verify_representation, BasisAssertion, RepresentationFile, SosError};
use tropreal::tropical::{
    classify_components, classify_principal, classify_weight, compactness_certificate, compactness_general,
    stability_certificate, universal_gb_squarefree_audit, ClassifyOptions, GeneralOptions,
};
use tropreal::{Polynomial, SignVector, WeightVector};

use error::CliError;
use input::{ComponentsFile, InputFile};
use report::{render, Format, Report};

#[derive(Parser)]
#[command(name = "tropreal", version, about = "Real tropical classification, compactness and stability certificates")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Seed for every randomized search; echoed in the report.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads for per-cone classification (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Random samples per cone when searching for torus zeros.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Tie-break order used for reduced initial ideals.
    #[arg(long, global = true, default_value = "grlex")]
    tiebreak: TieBreak,
    /// Substitute x_i -> π_i x_i in every input polynomial first.
    #[arg(long, global = true, allow_hyphen_values = true)]
    orthant: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced generators of In_w(I).
    Initial {
        #[arg(long, visible_alias = "poly")]
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Per-cone classification of a principal ideal, or of one weight.
    Classify {
        #[arg(long, visible_alias = "ideal")]
        poly: String,
        #[arg(long, conflicts_with = "weight")]
        all_cones: bool,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Accept that a binomial input ideal is real radical.
        #[arg(long)]
        assume_real_radical: bool,
    },
    /// Compactness certificate for the real zero set.
    Compactness {
        #[arg(long, visible_alias = "ideal")]
        poly: String,
        /// Components of In_w(f) for the weight given with --weight.
        #[arg(long)]
        components: Option<String>,
        /// Weights to classify (non-principal ideals), or the weight of the components.
        #[arg(long, allow_hyphen_values = true)]
        weight: Vec<String>,
    },
    /// Stability certificate for sums of squares modulo the ideal.
    Stability {
        #[arg(long, visible_alias = "poly")]
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Vec<String>,
        #[arg(long)]
        assume_real_radical: bool,
    },
    /// Lower the weighted degrees of a sums-of-squares representation.
    SosReduce {
        #[arg(long)]
        rep: String,
        /// Overrides the weight in the representation file.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Assert that the initial forms of the generators form a
        /// quadratic-module basis (required with generators).
        #[arg(long)]
        assert_qm_basis: Option<String>,
        /// Also write the reduced representation file here.
        #[arg(long)]
        output: Option<String>,
    },
    /// Verify and classify user-supplied components of an initial form.
    Components {
        #[arg(long, visible_alias = "ideal")]
        poly: String,
        #[arg(long)]
        components: String,
        /// Target is In_w(f); without it the target is f.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Squarefree-term audit of generators asserted to be a universal Gröbner basis.
    AuditUgb {
        #[arg(long, visible_alias = "poly")]
        ideal: String,
        /// Random weights at which to test the assertion.
        #[arg(long, default_value_t = 0)]
        spot_checks: usize,
    },
}

fn parse_weight(s: &str, n: usize) -> Result<WeightVector, CliError> {
    let w: WeightVector = s.parse().map_err(|e| CliError::Parse(format!("weight `{s}`: {e}")))?;
    if w.dim() != n {
        return Err(CliError::Precondition(format!(
            "weight {w} has {} entries for {n} variables",
            w.dim()
        )));
    }
    Ok(w)
}

fn read_input(path: &str, g: &Global) -> Result<InputFile, CliError> {
    let file = InputFile::read(path)?;
    let pi = match &g.orthant {
        Some(s) => {
            let pi: SignVector = s.parse().map_err(|e| CliError::Parse(format!("orthant `{s}`: {e}")))?;
            if pi.dim() != file.ring.nvars() {
                return Err(CliError::Precondition(format!(
                    "orthant has {} entries for {} variables",
                    pi.dim(),
                    file.ring.nvars()
                )));
            }
            Some(pi)
        }
        None => None,
    };
    file.flip(pi.as_ref())
}

fn principal_generator(ideal: &Ideal) -> Result<Option<Polynomial>, CliError> {
    if ideal.generators().len() == 1 {
        return Ok(Some(ideal.generators()[0].clone()));
    }
    let gb = ideal.grlex_basis()?;
    Ok((gb.len() == 1).then(|| gb.elements()[0].clone()))
}

fn general_options(g: &Global, assume_real_radical: bool) -> GeneralOptions {
    GeneralOptions {
        seed: g.seed,
        samples: g.samples,
        assume_real_radical,
        tiebreak: g.tiebreak,
        ..GeneralOptions::default()
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn run(cli: &Cli, command_line: String) -> Result<String, CliError> {
    let g = &cli.global;
    if g.jobs > 0 {
        // Only fails if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(g.jobs).build_global();
    }
    let out = |result: serde_json::Value| {
        render(
            &Report {
                tool: "tropreal",
                version: env!("CARGO_PKG_VERSION"),
                command: command_line.clone(),
                seed: g.seed,
                samples: g.samples,
                result,
            },
            g.format,
        )
    };
    let classify_opts = ClassifyOptions {
        seed: g.seed,
        samples: g.samples,
    };

    match &cli.command {
        Command::Initial { ideal, weight } => {
            let file = read_input(ideal, g)?;
            let w = parse_weight(weight, file.ring.nvars())?;
            let i = Ideal::new(file.polys.clone())?;
            let forms = i.initial_ideal_with(&w, g.tiebreak)?;
            Ok(out(json!({
                "vars": file.ring.names(),
                "generators": strings(&file.polys),
                "weight": w.to_string(),
                "tiebreak": g.tiebreak.to_string(),
                "initial_ideal": strings(&forms),
            })))
        }
        Command::Classify {
            poly,
            all_cones,
            weight,
            assume_real_radical,
        } => {
            let file = read_input(poly, g)?;
            let i = Ideal::new(file.polys.clone())?;
            match weight {
                Some(ws) => {
                    let w = parse_weight(ws, file.ring.nvars())?;
                    let r = classify_weight(&i, &w, &general_options(g, *assume_real_radical))?;
                    Ok(out(json!({ "generators": strings(&file.polys), "report": value(&r) })))
                }
                None => {
                    if !all_cones {
                        return Err(CliError::Precondition("give --all-cones or --weight".into()));
                    }
                    let f = principal_generator(&i)?.ok_or_else(|| {
                        CliError::Precondition(
                            "--all-cones needs a principal ideal; classify single weights with --weight".into(),
                        )
                    })?;
                    let pc = classify_principal(&f, &classify_opts)?;
                    Ok(out(value(&pc)))
                }
            }
        }
        Command::Compactness {
            poly,
            components,
            weight,
        } => {
            let file = read_input(poly, g)?;
            let n = file.ring.nvars();
            let i = Ideal::new(file.polys.clone())?;
            let weights = weight.iter().map(|w| parse_weight(w, n)).collect::<Result<Vec<_>, _>>()?;
            let cert = match principal_generator(&i)? {
                Some(f) => {
                    let pc = classify_principal(&f, &classify_opts)?;
                    let comps = match components {
                        Some(path) => {
                            let c = ComponentsFile::read(path)?;
                            if c.ring != file.ring {
                                return Err(CliError::Precondition("components use different variables".into()));
                            }
                            let [w] = weights.as_slice() else {
                                return Err(CliError::Precondition("--components needs exactly one --weight".into()));
                            };
                            Some((c.components, w.clone()))
                        }
                        None => None,
                    };
                    compactness_certificate(&pc, comps.as_ref().map(|(c, w)| (c.as_slice(), w)))?
                }
                None => {
                    if weights.is_empty() {
                        return Err(CliError::Precondition(
                            "non-principal ideal: supply weights to classify with --weight".into(),
                        ));
                    }
                    compactness_general(&i, &weights, &general_options(g, false))?
                }
            };
            cert.replay(&i).map_err(|e| CliError::Violation {
                message: format!("certificate failed replay: {e}"),
                report: None,
            })?;
            Ok(out(json!({ "generators": strings(&file.polys), "certificate": value(&cert), "replayed": true })))
        }
        Command::Stability {
            ideal,
            weight,
            assume_real_radical,
        } => {
            let file = read_input(ideal, g)?;
            let n = file.ring.nvars();
            let i = Ideal::new(file.polys.clone())?;
            let weights = weight.iter().map(|w| parse_weight(w, n)).collect::<Result<Vec<_>, _>>()?;
            let cert = stability_certificate(&i, &weights, &general_options(g, *assume_real_radical))?;
            cert.replay(&i).map_err(|e| CliError::Violation {
                message: format!("certificate failed replay: {e}"),
                report: None,
            })?;
            Ok(out(json!({ "generators": strings(&file.polys), "certificate": value(&cert), "replayed": true })))
        }
        Command::SosReduce {
            rep,
            weight,
            assert_qm_basis,
            output,
        } => {
            let text = input::read_text(rep)?;
            let file = RepresentationFile::parse(&text).map_err(|e| CliError::Parse(e.to_string()))?;
            let n = file.ring.nvars();
            let w = match (weight, &file.weight) {
                (Some(s), _) => parse_weight(s, n)?,
                (None, Some(w)) => w.clone(),
                (None, None) => return Err(CliError::Precondition("no weight in the file or on the command line".into())),
            };
            if file.ideal.is_empty() {
                return Err(CliError::Precondition("representation file lists no ideal generators".into()));
            }
            let i = Ideal::new(file.ideal.clone())?;
            let assertion = match assert_qm_basis {
                Some(t) => BasisAssertion::QmBasis { text: t.clone() },
                None => BasisAssertion::RealRadicalInitialIdeal,
            };
            match reduce_degree(&file.f, &file.rep, &i, &w, &assertion) {
                Ok((reduced, trace)) => {
                    let check = verify_representation(&file.f, &reduced, &i).map_err(sos_error)?;
                    let new_file = RepresentationFile {
                        weight: Some(w),
                        rep: reduced.clone(),
                        ..file
                    };
                    if let Some(path) = output {
                        std::fs::write(path, new_file.to_string())
                            .map_err(|e| CliError::Precondition(format!("{path}: {e}")))?;
                    }
                    Ok(out(json!({
                        "representation": value(&reduced),
                        "verification": value(&check),
                        "trace": value(&trace),
                        "file": new_file.to_string(),
                    })))
                }
                Err(e @ SosError::BasisViolation { .. }) => {
                    let report = out(json!({ "assertion": value(&assertion), "falsified": e.to_string() }));
                    Err(CliError::Violation {
                        message: e.to_string(),
                        report: Some(report),
                    })
                }
                Err(e) => Err(sos_error(e)),
            }
        }
        Command::Components {
            poly,
            components,
            weight,
        } => {
            let file = read_input(poly, g)?;
            let [f] = file.polys.as_slice() else {
                return Err(CliError::Precondition("components needs a single polynomial".into()));
            };
            let c = ComponentsFile::read(components)?;
            if c.ring != file.ring {
                return Err(CliError::Precondition("components use different variables".into()));
            }
            let w = weight.as_ref().map(|s| parse_weight(s, file.ring.nvars())).transpose()?;
            let target = match &w {
                Some(w) => f.initial_form(w)?,
                None => f.clone(),
            };
            match classify_components(&target, &c.components, w.as_ref()) {
                Ok(cc) => Ok(out(json!({ "polynomial": f.to_string(), "classification": value(&cc) }))),
                Err(e @ tropreal::tropical::TropicalError::ProductMismatch { .. }) => {
                    let report = out(json!({
                        "polynomial": f.to_string(),
                        "target": target.to_string(),
                        "product_verified": false,
                        "error": e.to_string(),
                    }));
                    Err(CliError::Violation {
                        message: e.to_string(),
                        report: Some(report),
                    })
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::AuditUgb { ideal, spot_checks } => {
            let file = read_input(ideal, g)?;
            let a = universal_gb_squarefree_audit(&file.polys, *spot_checks, g.seed)?;
            Ok(out(json!({ "generators": strings(&file.polys), "audit": value(&a) })))
        }
    }
}

fn sos_error(e: SosError) -> CliError {
    match e {
        SosError::File(m) => CliError::Parse(m),
        SosError::BasisViolation { .. } => CliError::Violation {
            message: e.to_string(),
            report: None,
        },
        e => CliError::Precondition(e.to_string()),
    }
}

fn value<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli, command_line) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Violation { report: Some(r), .. } = &e {
                print!("{r}");
            }
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
