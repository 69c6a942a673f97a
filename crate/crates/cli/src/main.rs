//! `toricmorph`: batch interface to the toric-morphism library.
//!
//! Exit codes: 0 for success and affirmative verdicts, 1 for refutations
//! (not a morphism, candidates not equal, bound not applicable, validation
//! failures), 2 for input errors, 3 for unknown verdicts (budget exhausted).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use toricmorph_core::fan::{catalog, catalog_names, fan_to_canonical_json, parse_fan, Fan};
use toricmorph_core::grading::{class_group, valid_morphism_degree, MultiDegree};
use toricmorph_core::morphism::{
    parse_morphism, sample, same_morphism, validate_step, verify, morphism_to_json,
    StabilizationStep,
};
use toricmorph_core::primitive::primitive_collections;
use toricmorph_core::stability::{
    filtration_profile, stab_rank_shift, stability_bound, stable_range_from_duality,
    BidegreeProfile,
};
use toricmorph_core::{CollectionStatus, Error, Int, Rat, VerdictStatus};

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "toricmorph", version, about = "exact computations on morphism spaces of smooth compact toric varieties", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct FanSource {
    /// Fan file (JSON), relative to the working directory.
    #[arg(long, value_name = "PATH")]
    fan: Option<PathBuf>,
    /// Built-in fan, `family:parameter` syntax (e.g. projective:2).
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a fan is simplicial, smooth and complete.
    Validate {
        #[command(flatten)]
        source: FanSource,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Primitive collections of the fan and the parameter k.
    Primcols {
        #[command(flatten)]
        source: FanSource,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Divisor class group: rank and projection matrix.
    Classgroup {
        #[command(flatten)]
        source: FanSource,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Morphism-degree condition and divisor class of a degree vector.
    Degree {
        #[command(flatten)]
        source: FanSource,
        /// Comma-separated entries, one per ray.
        #[arg(long, value_name = "CSV")]
        degrees: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify that a polynomial tuple defines a morphism.
    Check {
        #[command(flatten)]
        source: FanSource,
        /// Morphism file (JSON).
        #[arg(long, value_name = "PATH")]
        morphism: PathBuf,
        /// Step budget for the common-zero engine.
        #[arg(long, value_name = "INT", default_value_t = 100_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide whether two candidates present the same morphism.
    Same {
        #[command(flatten)]
        source: FanSource,
        /// Two morphism files (pass the flag twice).
        #[arg(long, value_name = "PATH", num_args = 1, action = clap::ArgAction::Append)]
        morphism: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Homological stability range for morphisms of a given multidegree.
    Bound {
        #[command(flatten)]
        source: FanSource,
        /// Domain dimension (maps from projective m-space).
        #[arg(short, value_name = "INT")]
        m: usize,
        #[arg(long, value_name = "CSV")]
        degrees: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Discriminant-filtration dimensions for a bidegree profile.
    Filtration {
        #[command(flatten)]
        source: FanSource,
        #[arg(short, value_name = "INT")]
        m: usize,
        /// Holomorphic degrees, comma-separated.
        #[arg(long, value_name = "CSV")]
        pbar: String,
        /// Antiholomorphic degrees, comma-separated.
        #[arg(long, value_name = "CSV")]
        qbar: String,
        /// Optional stabilization step; adds the shifted profile and the
        /// Thom rank shift to the report.
        #[arg(long, value_name = "CSV")]
        step: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Draw a random candidate and print it as a morphism file.
    Sample {
        #[command(flatten)]
        source: FanSource,
        #[arg(short, value_name = "INT")]
        m: usize,
        #[arg(long, value_name = "CSV")]
        degrees: String,
        /// Seed for the deterministic generator (required).
        #[arg(long, value_name = "INT")]
        seed: u64,
        /// Coefficient bound B: coefficients are uniform in [-B, B].
        #[arg(long, value_name = "INT", default_value_t = 9)]
        budget: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a catalog fan in canonical file form, or list the catalog.
    Catalog {
        #[command(flatten)]
        source: FanSource,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn load_fan(source: &FanSource) -> Result<Fan, Error> {
    match (&source.fan, &source.catalog) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            parse_fan(&text)
        }
        (None, Some(name)) => catalog(name),
        (None, None) => Err(Error::Input("pass --fan PATH or --catalog NAME".into())),
        (Some(_), Some(_)) => Err(Error::Input("--fan and --catalog are exclusive".into())),
    }
}

fn parse_csv(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer `{part}` in list")))
        })
        .collect()
}

fn rat_str(v: &Rat) -> String {
    use num_traits::One;
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn witness_json(w: &Option<Vec<Rat>>) -> serde_json::Value {
    match w {
        None => serde_json::Value::Null,
        Some(point) => serde_json::Value::Array(
            point
                .iter()
                .map(|c| serde_json::Value::String(rat_str(c)))
                .collect(),
        ),
    }
}

fn emit(format: Format, text: String, json: serde_json::Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("valid json")),
    }
}

fn int_to_i64(v: &Int) -> Result<i64, Error> {
    v.to_i64()
        .ok_or_else(|| Error::Input("value exceeds i64 in report".into()))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Validate { source, format } => {
            let fan = load_fan(&source)?;
            let report = fan.validate();
            let mut lines = vec![format!(
                "simplicial={} smooth={} complete={}",
                report.is_simplicial, report.is_smooth, report.is_complete
            )];
            for (what, why) in &report.failures {
                lines.push(format!("failure: {what}: {why}"));
            }
            let json = serde_json::json!({
                "is_simplicial": report.is_simplicial,
                "is_smooth": report.is_smooth,
                "is_complete": report.is_complete,
                "failures": report.failures,
            });
            emit(format, lines.join("\n"), json);
            Ok(if report.all_good() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Primcols { source, format } => {
            let fan = load_fan(&source)?;
            let y = primitive_collections(&fan)?;
            let strata: Vec<String> = y
                .strata
                .iter()
                .map(|c| {
                    let inner: Vec<String> =
                        c.ray_indices.iter().map(|i| i.to_string()).collect();
                    format!("{{{}}}", inner.join(","))
                })
                .collect();
            let text = format!(
                "{}  k={}\ny_complex_dim={}",
                strata.join(" "),
                y.k,
                y.y_complex_dim
            );
            let json = serde_json::json!({
                "strata": y.strata.iter().map(|c| c.ray_indices.clone()).collect::<Vec<_>>(),
                "k": y.k,
                "y_complex_dim": y.y_complex_dim,
            });
            emit(format, text, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classgroup { source, format } => {
            let fan = load_fan(&source)?;
            let cg = class_group(&fan);
            let mut projection_rows: Vec<Vec<i64>> = Vec::new();
            for i in 0..cg.projection.rows() {
                projection_rows.push(
                    cg.projection
                        .row(i)
                        .iter()
                        .map(int_to_i64)
                        .collect::<Result<_, _>>()?,
                );
            }
            let torsion: Vec<i64> = cg
                .invariant_factors
                .iter()
                .map(int_to_i64)
                .collect::<Result<_, _>>()?;
            let mut lines = vec![if torsion.is_empty() {
                format!("Z^{}", cg.rank)
            } else {
                format!("Z^{} + torsion {torsion:?}", cg.rank)
            }];
            for row in &projection_rows {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                lines.push(format!("[{}]", cells.join(", ")));
            }
            let json = serde_json::json!({
                "rank": cg.rank,
                "invariant_factors": torsion,
                "projection": projection_rows,
            });
            emit(format, lines.join("\n"), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Degree {
            source,
            degrees,
            format,
        } => {
            let fan = load_fan(&source)?;
            let entries = parse_csv(&degrees)?;
            let d = MultiDegree::new(entries.clone());
            let valid = valid_morphism_degree(&fan, &d)?;
            let cg = class_group(&fan);
            let exps: Vec<Int> = entries.iter().map(|&v| Int::from(v)).collect();
            let class: Vec<i64> = cg
                .monomial_degree(&exps)
                .coords
                .iter()
                .map(int_to_i64)
                .collect::<Result<_, _>>()?;
            let text = format!("valid={valid} class={class:?}");
            let json = serde_json::json!({ "valid": valid, "class": class });
            emit(format, text, json);
            Ok(if valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Check {
            source,
            morphism,
            budget,
            format,
        } => {
            let fan_override = match (&source.fan, &source.catalog) {
                (None, None) => None,
                _ => Some(load_fan(&source)?),
            };
            let text = std::fs::read_to_string(&morphism)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", morphism.display())))?;
            let candidate = parse_morphism(&text, fan_override)?;
            let verdict = verify(&candidate, budget)?;
            let status = match verdict.status {
                VerdictStatus::Morphism => "morphism",
                VerdictStatus::NotMorphism => "not_morphism",
                VerdictStatus::Unknown => "unknown",
            };
            let mut lines = vec![format!("status={status}")];
            let mut collections = Vec::new();
            for (collection, cs) in &verdict.per_collection {
                let indices: Vec<String> =
                    collection.ray_indices.iter().map(|i| i.to_string()).collect();
                let (label, witness) = match cs {
                    CollectionStatus::Clear => ("clear", None),
                    CollectionStatus::Violated(w) => ("violated", w.clone()),
                    CollectionStatus::Unknown => ("unknown", None),
                };
                let witness_text = match &witness {
                    Some(point) => format!(
                        " witness=[{}]",
                        point.iter().map(rat_str).collect::<Vec<_>>().join(", ")
                    ),
                    None => String::new(),
                };
                lines.push(format!("collection {{{}}}: {label}{witness_text}", indices.join(",")));
                collections.push(serde_json::json!({
                    "collection": collection.ray_indices,
                    "status": label,
                    "witness": witness_json(&witness),
                }));
            }
            if let Some(w) = &verdict.witness {
                lines.push(format!(
                    "witness=[{}]",
                    w.iter().map(rat_str).collect::<Vec<_>>().join(", ")
                ));
            }
            let json = serde_json::json!({
                "status": status,
                "per_collection": collections,
                "witness": witness_json(&verdict.witness),
            });
            emit(format, lines.join("\n"), json);
            Ok(match verdict.status {
                VerdictStatus::Morphism => ExitCode::SUCCESS,
                VerdictStatus::NotMorphism => ExitCode::from(1),
                VerdictStatus::Unknown => ExitCode::from(3),
            })
        }
        Command::Same {
            source,
            morphism,
            format,
        } => {
            if morphism.len() != 2 {
                return Err(Error::Input(
                    "pass --morphism twice, once per candidate".into(),
                ));
            }
            let fan_override = match (&source.fan, &source.catalog) {
                (None, None) => None,
                _ => Some(load_fan(&source)?),
            };
            let read = |p: &PathBuf| -> Result<String, Error> {
                std::fs::read_to_string(p)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))
            };
            let a = parse_morphism(&read(&morphism[0])?, fan_override.clone())?;
            let b = parse_morphism(&read(&morphism[1])?, fan_override)?;
            let same = same_morphism(&a, &b)?;
            emit(
                format,
                format!("same={same}"),
                serde_json::json!({ "same": same }),
            );
            Ok(if same {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bound {
            source,
            m,
            degrees,
            format,
        } => {
            let fan = load_fan(&source)?;
            let d = MultiDegree::new(parse_csv(&degrees)?);
            let report = stability_bound(&fan, m, &d)?;
            let largest = report.theorem_bound.map(|b| b - 1);
            let mut lines = vec![format!(
                "k={} m={} d_min={} applicable={}",
                report.k, report.m, report.d_min, report.applicable
            )];
            match report.theorem_bound {
                Some(b) if b > 0 => {
                    match report.guest_bound {
                        Some(g) => lines.push(format!("theorem_bound={b} guest_bound={g}")),
                        None => lines.push(format!("theorem_bound={b}")),
                    }
                    lines.push(format!("largest_guaranteed_dim={}", b - 1));
                }
                Some(_) => {
                    // threshold at or below zero: vacuous range, stated as such
                    lines.push("no range guaranteed".into());
                    if let Some(g) = report.guest_bound {
                        lines.push(format!("guest_bound={g}"));
                    }
                }
                None => lines.push("not applicable: m >= k (no bound asserted)".into()),
            }
            let json = serde_json::json!({
                "k": report.k,
                "m": report.m,
                "d_min": report.d_min,
                "applicable": report.applicable,
                "theorem_bound": report.theorem_bound,
                "guest_bound": report.guest_bound,
                "largest_guaranteed_dim": largest,
            });
            emit(format, lines.join("\n"), json);
            Ok(if report.applicable {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Filtration {
            source,
            m,
            pbar,
            qbar,
            step,
            format,
        } => {
            let fan = load_fan(&source)?;
            let profile = BidegreeProfile::new(m, parse_csv(&pbar)?, parse_csv(&qbar)?)?;
            let k = primitive_collections(&fan)?.k;
            if m >= k {
                emit(
                    format,
                    format!("not applicable: m={m} >= k={k}"),
                    serde_json::json!({ "applicable": false, "m": m, "k": k }),
                );
                return Ok(ExitCode::from(1));
            }
            let filtration = filtration_profile(&fan, &profile)?;
            let stable_range = stable_range_from_duality(&filtration);
            let mut lines = vec![format!(
                "N={} r={} m={} k={} p_min={}",
                filtration.n_complex_dim, filtration.r, filtration.m, filtration.k,
                filtration.p_min
            )];
            for stage in &filtration.per_l {
                lines.push(format!(
                    "l={} stratum_real_dim={} config_dim={}",
                    stage.l, stage.stratum_real_dim, stage.config_dim
                ));
            }
            lines.push(format!(
                "truncation_dim={} stable_range={stable_range}",
                filtration.truncation_dim
            ));
            let mut json = serde_json::json!({
                "n_complex_dim": filtration.n_complex_dim,
                "r": filtration.r,
                "m": filtration.m,
                "k": filtration.k,
                "p_min": filtration.p_min,
                "per_l": filtration.per_l,
                "truncation_dim": filtration.truncation_dim,
                "stable_range": stable_range,
            });
            if let Some(step_csv) = step {
                let a = parse_csv(&step_csv)?;
                validate_step(&fan, &StabilizationStep { a: a.clone() })?;
                let shifted = BidegreeProfile::new(
                    m,
                    profile.p.iter().zip(&a).map(|(p, s)| p + s).collect(),
                    profile.q.iter().zip(&a).map(|(q, s)| q + s).collect(),
                )?;
                let shift = stab_rank_shift(&fan, &profile, &shifted)?;
                let after = filtration_profile(&fan, &shifted)?;
                lines.push(format!(
                    "step={a:?} N_after={} rank_shift={shift}",
                    after.n_complex_dim
                ));
                json["step"] = serde_json::json!({
                    "a": a,
                    "n_after": after.n_complex_dim,
                    "rank_shift": shift,
                });
            }
            emit(format, lines.join("\n"), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample {
            source,
            m,
            degrees,
            seed,
            budget,
            format,
        } => {
            let fan = load_fan(&source)?;
            let d = MultiDegree::new(parse_csv(&degrees)?);
            let candidate = sample(&fan, m, &d, budget, seed)?;
            let json = morphism_to_json(&candidate);
            let rendered = serde_json::to_string_pretty(&json).expect("valid json");
            emit(format, rendered.clone(), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { source, format } => {
            if source.fan.is_some() {
                return Err(Error::Input("catalog takes --catalog NAME, not --fan".into()));
            }
            match &source.catalog {
                Some(name) => {
                    let fan = catalog(name)?;
                    let text = fan_to_canonical_json(&fan)?;
                    match format {
                        Format::Text => print!("{text}"),
                        Format::Json => print!("{text}"),
                    }
                }
                None => {
                    let names = catalog_names();
                    match format {
                        Format::Text => {
                            for name in &names {
                                println!("{name}");
                            }
                        }
                        Format::Json => {
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&serde_json::json!(names))
                                    .expect("valid json")
                            );
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
