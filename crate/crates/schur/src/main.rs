//! Command-line entry point: root-datum selection, saturated-set
//! construction, and dispatch to the generator, idempotent, verification,
//! character, oracle, and spin subcommands.

use clap::{Args, Parser, Subcommand};
use schur::characters::Engine;
use schur::idealgen::{
    self, BasisChoice, PointSet,
};
use schur::matrixoracle;
use schur::rootdata::{self, RootDatum, Weight};
use schur::spinb;
use schur::weylgroup::{self, SaturatedSet};
use schur::SchurError;
use serde_json::json;

#[derive(Parser)]
#[command(name = "schur", version, about = "Generalized (q-)Schur algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DatumArgs {
    /// Preset family: gl, A, B, C, D, or sc:<family>_<rank>
    #[arg(long = "type")]
    kind: Option<String>,
    /// Rank parameter of the preset
    #[arg(long)]
    n: Option<usize>,
    /// JSON file with an explicit root datum
    #[arg(long)]
    datum: Option<String>,
}

impl DatumArgs {
    fn build(&self) -> Result<RootDatum, SchurError> {
        if let Some(path) = &self.datum {
            let text = std::fs::read_to_string(path)?;
            let config: rootdata::DatumConfig = serde_json::from_str(&text)?;
            return config.build();
        }
        let kind = self
            .kind
            .as_deref()
            .ok_or_else(|| SchurError::UnsupportedPreset("missing --type".into()))?;
        let n = self
            .n
            .ok_or_else(|| SchurError::UnsupportedPreset("missing --n".into()))?;
        rootdata::datum_by_name(kind, n)
    }
}

#[derive(Args, Clone)]
struct PiArgs {
    /// Tensor power of the chosen module whose dominant weights seed pi
    #[arg(long)]
    r: Option<usize>,
    /// Explicit dominant seed weights, e.g. "2,0;1,1"
    #[arg(long)]
    pi: Option<String>,
    /// Module for the tensor-power construction: natural or spin
    #[arg(long, default_value = "natural")]
    module: String,
    /// Highest weight overriding --module, e.g. "1,0"
    #[arg(long)]
    highest: Option<String>,
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight, SchurError> {
    let coords: Result<Vec<i64>, _> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect();
    let coords = coords.map_err(|_| SchurError::Parse(format!("bad weight '{s}'")))?;
    if coords.len() != rank {
        return Err(SchurError::LengthMismatch {
            expected: rank,
            got: coords.len(),
        });
    }
    Ok(Weight(coords))
}

fn parse_weights(s: &str, rank: usize) -> Result<Vec<Weight>, SchurError> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_weight(p, rank))
        .collect()
}

fn module_weight(datum: &RootDatum, args: &PiArgs) -> Result<Weight, SchurError> {
    if let Some(h) = &args.highest {
        return parse_weight(h, datum.rank());
    }
    match args.module.as_str() {
        "natural" => {
            let mut w = vec![0i64; datum.rank()];
            w[0] = 1;
            Ok(Weight(w))
        }
        "spin" => {
            if !datum.label().ends_with("spin") {
                return Err(SchurError::UnsupportedPreset(
                    "spin module requires a type B datum".into(),
                ));
            }
            datum.fundamental_weight(datum.num_simple() - 1)
        }
        other => Err(SchurError::UnsupportedPreset(format!("module '{other}'"))),
    }
}

fn resolve_pi(datum: &RootDatum, args: &PiArgs) -> Result<SaturatedSet, SchurError> {
    if let Some(list) = &args.pi {
        let seeds = parse_weights(list, datum.rank())?;
        return SaturatedSet::closure(datum, &seeds);
    }
    let r = args
        .r
        .ok_or_else(|| SchurError::UnsupportedPreset("need --r or --pi".into()))?;
    let v = module_weight(datum, args)?;
    let engine = Engine::new(datum)?;
    let factors = engine.tensor_power_factors(&v, r)?;
    let piplus = engine.pi_plus(&factors)?;
    SaturatedSet::closure(datum, &piplus)
}

fn parse_basis(s: &str) -> Result<BasisChoice, SchurError> {
    match s {
        "canonical" => Ok(BasisChoice::Canonical),
        "coroot" => Ok(BasisChoice::Coroot),
        "epsilon" => Ok(BasisChoice::Epsilon),
        other => Err(SchurError::BadBasis(other.into())),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Weyl group orbit of a weight
    Orbit {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Saturated closure of dominant seed weights
    Saturate {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long)]
        json: bool,
    },
    /// The orbit set W pi
    Wpi {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long)]
        json: bool,
    },
    /// Point coordinates of P_{W pi}
    Points {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long, default_value = "canonical")]
        basis: String,
        #[arg(long)]
        q: bool,
        #[arg(long)]
        json: bool,
    },
    /// Vanishing-ideal generators
    Gens {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long, default_value = "canonical")]
        basis: String,
        #[arg(long)]
        q: bool,
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
    },
    /// Interpolation idempotents over P_{W pi}
    Idempotents {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long, default_value = "canonical")]
        basis: String,
        #[arg(long)]
        json: bool,
    },
    /// Full presentation report
    Present {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long, default_value = "canonical")]
        basis: String,
        #[arg(long)]
        q: bool,
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
    },
    /// dim S(pi) from the character side
    Dim {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
    },
    /// Dominant weights of the r-th tensor power
    Piplus {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long)]
        json: bool,
    },
    /// Saturation test for the r-th tensor power
    SaturatedModule {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
    },
    /// Saturation scan against the minuscule test
    Conjecture {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long, default_value_t = 4)]
        rmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite on pi
    Verify {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long, default_value = "canonical")]
        basis: String,
        #[arg(long)]
        radius: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Type A matrix oracle: relations, vanishing, closure dimension
    Oracle {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        pi: PiArgs,
        #[arg(long)]
        json: bool,
    },
    /// Spin tensor-power saturation report for type B
    Spin {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        rmax: usize,
        #[arg(long)]
        json: bool,
    },
}

fn weight_json(w: &Weight) -> serde_json::Value {
    json!(w.0)
}

fn run() -> Result<bool, SchurError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Orbit { datum, weight, json } => {
            let d = datum.build()?;
            let w = parse_weight(&weight, d.rank())?;
            let orbit = weylgroup::orbit(&d, &w);
            if json {
                println!("{}", json!(orbit.iter().map(weight_json).collect::<Vec<_>>()));
            } else {
                for w in orbit {
                    println!("{w}");
                }
            }
            Ok(true)
        }
        Command::Saturate { datum, pi, json } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            if json {
                println!(
                    "{}",
                    json!(pi.dominant_weights().iter().map(weight_json).collect::<Vec<_>>())
                );
            } else {
                for w in pi.dominant_weights() {
                    println!("{w}");
                }
            }
            Ok(true)
        }
        Command::Wpi { datum, pi, json } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            let wpi = pi.orbit_union(&d);
            if json {
                println!("{}", json!(wpi.iter().map(weight_json).collect::<Vec<_>>()));
            } else {
                for w in wpi {
                    println!("{w}");
                }
            }
            Ok(true)
        }
        Command::Points {
            datum,
            pi,
            basis,
            q,
            json,
        } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            let wpi = pi.orbit_union(&d);
            let basis = parse_basis(&basis)?;
            let points = if q {
                PointSet::quantized(&d, &wpi, basis)?
            } else {
                PointSet::new(&d, &wpi, basis)?
            };
            if json {
                let list: Vec<serde_json::Value> = points
                    .iter()
                    .map(|(w, e)| json!({"weight": w.0, "exps": e, "scale": points.scale()}))
                    .collect();
                println!("{}", json!(list));
            } else {
                for (w, e) in points.iter() {
                    if points.scale() == 1 {
                        println!("{w} -> {e:?}");
                    } else {
                        println!("{w} -> {e:?} / 2");
                    }
                }
            }
            Ok(true)
        }
        Command::Gens {
            datum,
            pi,
            basis,
            q,
            full,
            json,
        } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            let rep = idealgen::presentation(&d, &pi, q, !full, parse_basis(&basis)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep.extra_generators)?);
            } else {
                for g in &rep.extra_generators {
                    println!("{}", g.display);
                }
            }
            Ok(true)
        }
        Command::Idempotents {
            datum,
            pi,
            basis,
            json,
        } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            let wpi = pi.orbit_union(&d);
            let points = PointSet::quantized(&d, &wpi, parse_basis(&basis)?)?;
            let mut rows = Vec::new();
            for (w, _) in points.iter() {
                let idem = idealgen::idempotent(&points, w)?;
                rows.push((w.clone(), idem));
            }
            if json {
                let list: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(w, idem)| {
                        json!({
                            "weight": w.0,
                            "numerator": idem.num.to_string(),
                            "denominator": idem.den.to_string(),
                        })
                    })
                    .collect();
                println!("{}", json!(list));
            } else {
                for (w, idem) in rows {
                    println!("1_{w} = ({}) / ({})", idem.num, idem.den);
                }
            }
            Ok(true)
        }
        Command::Present {
            datum,
            pi,
            basis,
            q,
            full,
            json,
        } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            let rep = idealgen::presentation(&d, &pi, q, !full, parse_basis(&basis)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!("datum: {}", rep.datum);
                println!("generators: {}", rep.generators.join(", "));
                println!("relations:");
                for r in &rep.relations {
                    println!("  {r}");
                }
                println!("extra ideal generators:");
                for g in &rep.extra_generators {
                    println!("  {}", g.display);
                }
            }
            Ok(true)
        }
        Command::Dim { datum, pi } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            let engine = Engine::new(&d)?;
            println!("{}", engine.dim_schur(&pi)?);
            Ok(true)
        }
        Command::Piplus { datum, pi, json } => {
            let d = datum.build()?;
            let r = pi
                .r
                .ok_or_else(|| SchurError::UnsupportedPreset("need --r".into()))?;
            let v = module_weight(&d, &pi)?;
            let engine = Engine::new(&d)?;
            let factors = engine.tensor_power_factors(&v, r)?;
            let piplus = engine.pi_plus(&factors)?;
            if json {
                println!("{}", json!(piplus.iter().map(weight_json).collect::<Vec<_>>()));
            } else {
                for w in piplus {
                    println!("{w}");
                }
            }
            Ok(true)
        }
        Command::SaturatedModule { datum, pi } => {
            let d = datum.build()?;
            let r = pi
                .r
                .ok_or_else(|| SchurError::UnsupportedPreset("need --r".into()))?;
            let v = module_weight(&d, &pi)?;
            let engine = Engine::new(&d)?;
            let sat = engine.is_saturated_module(&v, r)?;
            println!("{sat}");
            Ok(sat)
        }
        Command::Conjecture {
            datum,
            pi,
            rmax,
            json,
        } => {
            let d = datum.build()?;
            let v = module_weight(&d, &pi)?;
            let engine = Engine::new(&d)?;
            let rep = engine.conjecture_scan(&v, rmax)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!("highest weight: {}", rep.highest_weight);
                println!("minuscule: {}", rep.minuscule);
                for row in &rep.rows {
                    println!("r={}: saturated={}", row.r, row.saturated);
                }
                match rep.witness {
                    Some(r) => println!("non-saturation witness at r={r}"),
                    None => println!("no non-saturation witness up to r={rmax}"),
                }
                println!("consistent with the minuscule test: {}", rep.consistent);
            }
            Ok(true)
        }
        Command::Verify {
            datum,
            pi,
            basis,
            radius,
            json,
        } => {
            let d = datum.build()?;
            let pi = resolve_pi(&d, &pi)?;
            let basis = parse_basis(&basis)?;
            let wpi = pi.orbit_union(&d);
            let points = PointSet::quantized(&d, &wpi, basis)?;
            let n = points.num_vars();
            let family = idealgen::default_h_family(&d, n);

            let mut checks = Vec::new();
            let vanish = idealgen::verify_vanishing(&points, &family, true)?;
            checks.extend(vanish.checks);
            let mut fg = true;
            for h in &family {
                fg &= idealgen::verify_fg_identity(&points, h, true)?;
            }
            checks.push(idealgen::Check {
                name: "monomial-shifted G_h recovers F_h".into(),
                pass: fg,
            });
            let zero_part = idealgen::verify_zero_part_identities(&d, &points, &family)?;
            checks.extend(zero_part.checks);
            for j in 0..d.num_simple() {
                let shift = idealgen::verify_shift_lemma(&d, &wpi, j, basis)?;
                checks.push(idealgen::Check {
                    name: format!("shift lemma along alpha_{}", j + 1),
                    pass: shift.ok(),
                });
            }
            let max_coord = wpi
                .iter()
                .flat_map(|w| w.0.iter().map(|c| c.abs()))
                .max()
                .unwrap_or(0);
            let radius = radius.unwrap_or(2 * max_coord.max(1));
            let zs = idealgen::verify_zero_set(&d, &wpi, radius, basis)?;
            checks.push(idealgen::Check {
                name: format!("zero set equals W pi in the radius-{radius} box"),
                pass: zs.ok,
            });
            for w in pi.dominant_weights() {
                let jac = idealgen::jacobian_spot_check(&points, w)?;
                checks.push(idealgen::Check {
                    name: format!("separating matrix at {w}"),
                    pass: jac.det_is_one && jac.separates,
                });
            }
            let ok = checks.iter().all(|c| c.pass);
            if json {
                println!("{}", serde_json::to_string_pretty(&checks)?);
            } else {
                for c in &checks {
                    println!("[{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name);
                }
            }
            Ok(ok)
        }
        Command::Oracle { datum, pi, json } => {
            let d = datum.build()?;
            if !d.label().starts_with("gl(") {
                return Err(SchurError::Oracle(
                    "matrix oracle supports the gl presets only".into(),
                ));
            }
            let pi = resolve_pi(&d, &pi)?;
            let engine = Engine::new(&d)?;
            let n = d.rank();
            let blocks: Vec<matrixoracle::RepBlock> = pi
                .dominant_weights()
                .iter()
                .map(|w| matrixoracle::build_block(n, &w.0))
                .collect::<Result<_, _>>()?;
            let model = matrixoracle::direct_sum(&blocks)?;
            let wpi: Vec<Vec<i64>> = pi.orbit_union(&d).iter().map(|w| w.0.clone()).collect();
            let mut checks = matrixoracle::check_presentation(&model, &wpi)?;

            let points = PointSet::new(&d, &pi.orbit_union(&d), BasisChoice::Canonical)?;
            let mut vanish_ok = true;
            for h in idealgen::default_h_family(&d, n) {
                let gen = idealgen::classical_generator(&points, &h, true)?;
                vanish_ok &= matrixoracle::ideal_generator_vanishes(&model, &gen.h, &gen.roots);
            }
            checks.push(("classical ideal generators vanish".into(), vanish_ok));

            let closure = matrixoracle::closure_dimension(&model)?;
            let expected = engine.dim_schur(&pi)?;
            checks.push((
                format!("closure dimension {closure} = character count {expected}"),
                closure == expected,
            ));
            let ok = checks.iter().all(|(_, pass)| *pass);
            if json {
                let list: Vec<serde_json::Value> = checks
                    .iter()
                    .map(|(name, pass)| json!({"name": name, "pass": pass}))
                    .collect();
                println!("{}", json!(list));
            } else {
                for (name, pass) in &checks {
                    println!("[{}] {}", if *pass { "pass" } else { "FAIL" }, name);
                }
            }
            Ok(ok)
        }
        Command::Spin { n, rmax, json } => {
            let d = rootdata::preset(rootdata::PresetKind::SpinB, n)?;
            let rep = spinb::check_spin_saturation(&d, rmax)?;
            let ok = rep.ok();
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                for row in &rep.rows {
                    println!(
                        "r={}: saturated={} layers-match={}",
                        row.r, row.saturated, row.matches_layers
                    );
                }
            }
            Ok(ok)
        }
    }
}

fn exit_code_for(err: &SchurError) -> i32 {
    match err {
        SchurError::UnsupportedPreset(_)
        | SchurError::Parse(_)
        | SchurError::BadBasis(_)
        | SchurError::LengthMismatch { .. }
        | SchurError::NotDominant(_)
        | SchurError::EmptyPi
        | SchurError::Io(_)
        | SchurError::Json(_) => 2,
        _ => 1,
    }
}

fn main() {
    match run() {
        Ok(true) => std::process::exit(0),
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code_for(&e));
        }
    }
}
