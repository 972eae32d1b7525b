//! Command-line surface. One thin binary dispatches here; everything it
//! does is a library call plus formatting.
//!
//! Exit codes: 0 success / verdict-true, 1 verdict-false, 2 usage error,
//! 3 internal error.

use crate::eightk::{self, EightKCode};
use crate::formula::{parse_formula, parse_schema, Formula};
use crate::hilbert;
use crate::matrices::{self, MatrixLogic, Valuation};
use crate::registry;
use crate::report::Report;
use crate::translate::{self, Translation};
use crate::{algebra, verify};
use clap::{Arg, ArgAction, ArgMatches, Command};
use serde_json::{json, Value};
use std::time::Instant;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

fn command() -> Command {
    let logic_arg = Arg::new("logic").short('l').long("logic").required(true).help(
        "logic key: a built-in, a <key>.json on MVL_REGISTRY_PATH, or a file path",
    );
    let json_flag = Arg::new("json")
        .long("json")
        .action(ArgAction::SetTrue)
        .global(true)
        .help("emit the machine-readable JSON report");
    Command::new("mvlog")
        .about("finite-matrix workbench for many-valued and paraconsistent logics")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .arg(json_flag)
        .subcommand(
            Command::new("logics")
                .about("list or display the matrix catalog")
                .subcommand_required(true)
                .subcommand(Command::new("list").about("list catalog keys"))
                .subcommand(
                    Command::new("show")
                        .about("print one matrix in full")
                        .arg(Arg::new("key").required(true)),
                ),
        )
        .subcommand(
            Command::new("eval")
                .about("evaluate a formula under a valuation")
                .arg(logic_arg.clone())
                .arg(Arg::new("formula").short('f').long("formula").required(true))
                .arg(
                    Arg::new("valuation")
                        .short('v')
                        .long("valuation")
                        .required(true)
                        .help("comma-separated atom=value pairs, e.g. p=1/2,q=0"),
                ),
        )
        .subcommand(
            Command::new("valid")
                .about("decide truth-functional validity of a schema")
                .arg(logic_arg.clone())
                .arg(Arg::new("formula").short('f').long("formula").required(true)),
        )
        .subcommand(
            Command::new("entails")
                .about("decide entailment by exhaustive valuation")
                .arg(logic_arg.clone())
                .arg(
                    Arg::new("premises")
                        .short('p')
                        .long("premises")
                        .default_value("")
                        .help("semicolon-separated premise formulas"),
                )
                .arg(Arg::new("conclusion").short('c').long("conclusion").required(true)),
        )
        .subcommand(
            Command::new("countermodel")
                .about("find a valuation designating the premises but not the conclusion")
                .arg(logic_arg.clone())
                .arg(Arg::new("premises").short('p').long("premises").default_value(""))
                .arg(Arg::new("conclusion").short('c').long("conclusion").required(true)),
        )
        .subcommand(
            Command::new("soundness")
                .about("check every rule of a system against a matrix")
                .arg(Arg::new("system").short('s').long("system").required(true))
                .arg(logic_arg.clone()),
        )
        .subcommand(
            Command::new("proof")
                .about("check or transform Hilbert-style proofs")
                .subcommand_required(true)
                .subcommand(
                    Command::new("check")
                        .about("check a proof file")
                        .arg(Arg::new("system").short('s').long("system").required(true))
                        .arg(Arg::new("file").required(true)),
                )
                .subcommand(
                    Command::new("deduce")
                        .about("apply the deduction transformation, discharging a premise")
                        .arg(Arg::new("system").short('s').long("system").required(true))
                        .arg(Arg::new("file").required(true))
                        .arg(
                            Arg::new("discharge")
                                .short('A')
                                .long("discharge")
                                .required(true)
                                .help("premise formula to discharge"),
                        ),
                ),
        )
        .subcommand(
            Command::new("census8k")
                .about("census of the 8,192-member three-valued family")
                .arg(
                    Arg::new("parallel")
                        .long("parallel")
                        .value_parser(clap::value_parser!(usize))
                        .help("worker threads (default: all cores)"),
                ),
        )
        .subcommand(
            Command::new("separate")
                .about("smallest schema valid in exactly one of two family members")
                .arg(Arg::new("code1").required(true).value_parser(clap::value_parser!(u32)))
                .arg(Arg::new("code2").required(true).value_parser(clap::value_parser!(u32)))
                .arg(
                    Arg::new("bound")
                        .long("bound")
                        .default_value("7")
                        .value_parser(clap::value_parser!(usize)),
                ),
        )
        .subcommand(
            Command::new("congruences")
                .about("enumerate congruences of a matrix")
                .arg(logic_arg.clone())
                .arg(
                    Arg::new("designated")
                        .long("designated")
                        .action(ArgAction::SetTrue)
                        .help("keep only designation-compatible partitions"),
                ),
        )
        .subcommand(
            Command::new("translate")
                .about("apply a named translation to a formula")
                .arg(Arg::new("translation").short('t').long("translation").required(true))
                .arg(Arg::new("formula").short('f').long("formula").required(true)),
        )
        .subcommand(
            Command::new("conservativity")
                .about("bounded conservativity oracle for a translation")
                .arg(Arg::new("translation").short('t').long("translation").required(true))
                .arg(Arg::new("target").long("target").required(true))
                .arg(Arg::new("source").long("source").help("override the default source matrix"))
                .arg(
                    Arg::new("atoms")
                        .long("atoms")
                        .required(true)
                        .value_parser(clap::value_parser!(usize)),
                )
                .arg(
                    Arg::new("size")
                        .long("size")
                        .required(true)
                        .value_parser(clap::value_parser!(usize)),
                ),
        )
        .subcommand(
            Command::new("clone")
                .about("term-definable truth functions of a matrix")
                .arg(logic_arg)
                .arg(
                    Arg::new("arity")
                        .long("arity")
                        .required(true)
                        .value_parser(clap::value_parser!(u8).range(1..=2)),
                )
                .arg(
                    Arg::new("bound")
                        .long("bound")
                        .value_parser(clap::value_parser!(usize))
                        .help("term-size bound (defaults to the exact clone)"),
                ),
        )
        .subcommand(
            Command::new("verify-paper")
                .about("run the bundled reproduction suite")
                .arg(Arg::new("section").long("section").help("restrict to matching sections")),
        )
}

/// Parse and run; returns the process exit code.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let matches = match command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            // clap uses exit code 2 for usage errors; keep help/version at 0.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_TRUE };
            let _ = e.print();
            return code;
        }
    };
    let json = matches.get_flag("json");
    let started = Instant::now();
    match run(&matches, json) {
        Ok((code, mut report)) => {
            if json {
                report.timing_ms = started.elapsed().as_millis() as u64;
                println!("{}", report.to_json());
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code
        }
    }
}

struct CliError {
    message: String,
    exit_code: i32,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.message.fmt(f)
    }
}

fn usage(msg: impl std::fmt::Display) -> CliError {
    CliError { message: msg.to_string(), exit_code: EXIT_USAGE }
}

fn internal(msg: impl std::fmt::Display) -> CliError {
    CliError { message: msg.to_string(), exit_code: EXIT_INTERNAL }
}

fn logic_of(matches: &ArgMatches) -> Result<MatrixLogic, CliError> {
    let key: &String = matches.get_one("logic").unwrap();
    registry::resolve(key).map_err(usage)
}

fn formula_of(matches: &ArgMatches, name: &str) -> Result<Formula, CliError> {
    let text: &String = matches.get_one(name).unwrap();
    parse_formula(text).map_err(usage)
}

fn premises_of(matches: &ArgMatches) -> Result<Vec<Formula>, CliError> {
    let text: &String = matches.get_one("premises").unwrap();
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_formula(s).map_err(usage))
        .collect()
}

fn valuation_of(logic: &MatrixLogic, text: &str) -> Result<Valuation, CliError> {
    let mut v = Valuation::new();
    for pair in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (atom, label) = pair
            .split_once('=')
            .ok_or_else(|| usage(format!("bad valuation entry {pair}; use atom=value")))?;
        let value = logic
            .value_of_label(label.trim())
            .ok_or_else(|| usage(format!("unknown value label {label} for {}", logic.name())))?;
        v.insert(atom.trim().to_string(), value);
    }
    Ok(v)
}

fn verdict_code(v: bool) -> i32 {
    if v {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn say(json: bool, line: impl std::fmt::Display) {
    if !json {
        println!("{line}");
    }
}

fn run(matches: &ArgMatches, json: bool) -> Result<(i32, Report), CliError> {
    match matches.subcommand() {
        Some(("logics", sub)) => match sub.subcommand() {
            Some(("list", _)) => {
                let mut rows = Vec::new();
                for entry in registry::catalog() {
                    say(json, format!("{:18} {:3} values  {}", entry.key, entry.logic.n(), entry.provenance));
                    rows.push(json!({
                        "key": entry.key,
                        "values": entry.logic.n(),
                        "provenance": entry.provenance,
                    }));
                }
                Ok((EXIT_TRUE, Report::new("logics list", Value::Null).details(Value::Array(rows))))
            }
            Some(("show", show)) => {
                let key: &String = show.get_one("key").unwrap();
                let logic = registry::resolve(key).map_err(usage)?;
                let doc = registry::matrix_to_json(&logic);
                say(json, &doc);
                Ok((
                    EXIT_TRUE,
                    Report::new("logics show", json!({ "key": key }))
                        .details(serde_json::from_str(&doc).unwrap()),
                ))
            }
            _ => unreachable!(),
        },
        Some(("eval", sub)) => {
            let logic = logic_of(sub)?;
            let formula = formula_of(sub, "formula")?;
            let valuation = valuation_of(&logic, sub.get_one::<String>("valuation").unwrap())?;
            let value = matrices::evaluate(&logic, &formula, &valuation).map_err(internal)?;
            say(
                json,
                format!(
                    "{} = {}{}",
                    formula,
                    logic.label(value),
                    if logic.is_designated(value) { "  (designated)" } else { "" }
                ),
            );
            let report = Report::new(
                "eval",
                json!({ "logic": logic.name(), "formula": formula.to_string() }),
            )
            .details(json!({
                "value": logic.label(value),
                "designated": logic.is_designated(value),
            }));
            Ok((EXIT_TRUE, report))
        }
        Some(("valid", sub)) => {
            let logic = logic_of(sub)?;
            let text: &String = sub.get_one("formula").unwrap();
            let schema = parse_schema(text).map_err(usage)?;
            let verdict = matrices::is_valid(&logic, &schema).map_err(internal)?;
            say(json, format!("{} in {}: {}", schema, logic.name(), if verdict { "valid" } else { "invalid" }));
            let report = Report::new(
                "valid",
                json!({ "logic": logic.name(), "schema": schema.to_string() }),
            )
            .verdict(verdict);
            Ok((verdict_code(verdict), report))
        }
        Some(("entails", sub)) => {
            let logic = logic_of(sub)?;
            let premises = premises_of(sub)?;
            let conclusion = formula_of(sub, "conclusion")?;
            let verdict = matrices::entails(&logic, &premises, &conclusion).map_err(internal)?;
            say(json, format!("entailment in {}: {}", logic.name(), verdict));
            let report = Report::new(
                "entails",
                json!({
                    "logic": logic.name(),
                    "premises": premises.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "conclusion": conclusion.to_string(),
                }),
            )
            .verdict(verdict);
            Ok((verdict_code(verdict), report))
        }
        Some(("countermodel", sub)) => {
            let logic = logic_of(sub)?;
            let premises = premises_of(sub)?;
            let conclusion = formula_of(sub, "conclusion")?;
            let cm = matrices::find_countermodel(&logic, &premises, &conclusion)
                .map_err(internal)?;
            let details = match &cm {
                Some(v) => {
                    let pretty = v
                        .iter()
                        .map(|(atom, &val)| format!("{atom}={}", logic.label(val)))
                        .collect::<Vec<_>>()
                        .join(", ");
                    say(json, format!("countermodel: {pretty}"));
                    json!({ "countermodel": v.iter().map(|(a, &x)| (a.clone(), logic.label(x).to_string())).collect::<std::collections::BTreeMap<_, _>>() })
                }
                None => {
                    say(json, "no countermodel: the entailment holds");
                    json!({ "countermodel": null })
                }
            };
            let found = cm.is_some();
            let report = Report::new(
                "countermodel",
                json!({
                    "logic": logic.name(),
                    "premises": premises.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "conclusion": conclusion.to_string(),
                }),
            )
            .verdict(found)
            .details(details);
            Ok((verdict_code(found), report))
        }
        Some(("soundness", sub)) => {
            let logic = logic_of(sub)?;
            let name: &String = sub.get_one("system").unwrap();
            let system = hilbert::system(name).map_err(usage)?;
            let report0 = hilbert::soundness_report(&system, &logic).map_err(internal)?;
            for v in &report0.verdicts {
                say(
                    json,
                    format!(
                        "{:10} {}",
                        v.rule,
                        if v.sound {
                            "sound".to_string()
                        } else {
                            format!(
                                "UNSOUND at {}",
                                v.countermodel
                                    .as_ref()
                                    .unwrap()
                                    .iter()
                                    .map(|(m, l)| format!("{m}={l}"))
                                    .collect::<Vec<_>>()
                                    .join(", ")
                            )
                        }
                    ),
                );
            }
            let verdict = report0.sound();
            say(json, format!("summary: {}", if verdict { "sound" } else { "not sound" }));
            let details = json!({
                "rules": report0.verdicts.iter().map(|v| json!({
                    "rule": v.rule,
                    "sound": v.sound,
                    "countermodel": v.countermodel,
                })).collect::<Vec<_>>(),
            });
            let report = Report::new(
                "soundness",
                json!({ "system": system.name(), "logic": logic.name() }),
            )
            .verdict(verdict)
            .details(details);
            Ok((verdict_code(verdict), report))
        }
        Some(("proof", sub)) => match sub.subcommand() {
            Some(("check", c)) => {
                let name: &String = c.get_one("system").unwrap();
                let system = hilbert::system(name).map_err(usage)?;
                let path: &String = c.get_one("file").unwrap();
                let text = std::fs::read_to_string(path).map_err(internal)?;
                let proof = hilbert::proof_from_json(&text, &system).map_err(usage)?;
                match hilbert::check_proof(&system, &proof) {
                    Ok(()) => {
                        say(
                            json,
                            format!(
                                "ok: {} steps, premises {{{}}}, conclusion {}",
                                proof.steps.len(),
                                proof
                                    .premises()
                                    .iter()
                                    .map(|p| p.to_string())
                                    .collect::<Vec<_>>()
                                    .join(", "),
                                proof.conclusion().map(|c| c.to_string()).unwrap_or_default()
                            ),
                        );
                        let report = Report::new(
                            "proof check",
                            json!({ "system": system.name(), "file": path }),
                        )
                        .verdict(true)
                        .details(json!({
                            "steps": proof.steps.len(),
                            "conclusion": proof.conclusion().map(|c| c.to_string()),
                        }));
                        Ok((EXIT_TRUE, report))
                    }
                    Err(e) => {
                        say(json, format!("proof rejected: {e}"));
                        let report = Report::new(
                            "proof check",
                            json!({ "system": system.name(), "file": path }),
                        )
                        .verdict(false)
                        .details(json!({ "error": e.to_string(), "step": e.step }));
                        Ok((EXIT_FALSE, report))
                    }
                }
            }
            Some(("deduce", c)) => {
                let name: &String = c.get_one("system").unwrap();
                let system = hilbert::system(name).map_err(usage)?;
                let path: &String = c.get_one("file").unwrap();
                let text = std::fs::read_to_string(path).map_err(internal)?;
                let proof = hilbert::proof_from_json(&text, &system).map_err(usage)?;
                let discharge_text: &String = c.get_one("discharge").unwrap();
                let discharge = system.parse_formula(discharge_text).map_err(usage)?;
                let out = hilbert::deduction_transform(&system, &proof, &discharge)
                    .map_err(usage)?;
                let doc = hilbert::proof_to_json(&out);
                say(json, &doc);
                let report = Report::new(
                    "proof deduce",
                    json!({
                        "system": system.name(),
                        "file": path,
                        "discharge": discharge.to_string(),
                    }),
                )
                .verdict(true)
                .details(json!({
                    "steps": out.steps.len(),
                    "conclusion": out.conclusion().map(|f| f.to_string()),
                    "proof": serde_json::from_str::<Value>(&doc).unwrap(),
                }));
                Ok((EXIT_TRUE, report))
            }
            _ => unreachable!(),
        },
        Some(("census8k", sub)) => {
            let census = with_threads(sub.get_one::<usize>("parallel").copied(), eightk::census);
            say(json, format!("total:                 {}", census.total));
            say(json, format!("dc systems:            {}", census.dc_systems));
            say(json, format!("~(A & ~A) defines o:   {}", census.neg_conj_defines_cons));
            say(json, format!("extend cio:            {}", census.extend_cio));
            say(json, format!("extend cilo:           {}", census.extend_cilo));
            say(json, format!("extend cia:            {}", census.extend_cia));
            say(json, format!("tPS invalid:           {}", census.tps_invalid));
            say(json, format!("o -A valid:            {}", census.cons_strong_neg_valid));
            say(json, format!("probe vectors match:   {}", census.probe_vector_matches));
            let details = serde_json::to_value(&census).unwrap();
            Ok((EXIT_TRUE, Report::new("census8k", Value::Null).details(details)))
        }
        Some(("separate", sub)) => {
            let c1 = EightKCode::new(*sub.get_one::<u32>("code1").unwrap()).map_err(usage)?;
            let c2 = EightKCode::new(*sub.get_one::<u32>("code2").unwrap()).map_err(usage)?;
            let bound = *sub.get_one::<usize>("bound").unwrap();
            let sep = eightk::separating_formula(c1, c2, bound).map_err(usage)?;
            say(
                json,
                format!(
                    "{} separates: valid in {} only (size {})",
                    sep.schema,
                    if sep.valid_in_first { c1 } else { c2 },
                    sep.size
                ),
            );
            let report = Report::new(
                "separate",
                json!({ "code1": c1.get(), "code2": c2.get(), "bound": bound }),
            )
            .verdict(true)
            .details(json!({
                "schema": sep.schema.to_string(),
                "valid_in": if sep.valid_in_first { c1.get() } else { c2.get() },
                "size": sep.size,
            }));
            Ok((EXIT_TRUE, report))
        }
        Some(("congruences", sub)) => {
            let logic = logic_of(sub)?;
            let designated = sub.get_flag("designated");
            let congs = algebra::enumerate_congruences(&logic, designated).map_err(internal)?;
            for c in &congs {
                let classes = c
                    .classes()
                    .iter()
                    .map(|cls| {
                        format!(
                            "{{{}}}",
                            cls.iter().map(|&v| logic.label(v)).collect::<Vec<_>>().join(",")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" ");
                say(json, classes);
            }
            say(json, format!("{} congruence(s)", congs.len()));
            let details = json!({
                "count": congs.len(),
                "congruences": congs.iter().map(|c| {
                    c.classes().iter().map(|cls| {
                        cls.iter().map(|&v| logic.label(v).to_string()).collect::<Vec<_>>()
                    }).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            });
            let report = Report::new(
                "congruences",
                json!({ "logic": logic.name(), "designated": designated }),
            )
            .details(details);
            Ok((EXIT_TRUE, report))
        }
        Some(("translate", sub)) => {
            let tname: &String = sub.get_one("translation").unwrap();
            let t = Translation::from_name(tname).ok_or_else(|| {
                usage(format!(
                    "unknown translation {tname}; available: {}",
                    translate::TRANSLATION_NAMES.join(", ")
                ))
            })?;
            let formula = formula_of(sub, "formula")?;
            let image = translate::apply_translation(t, &formula).map_err(usage)?;
            say(json, format!("{image}"));
            let report = Report::new(
                "translate",
                json!({ "translation": t.name(), "formula": formula.to_string() }),
            )
            .details(json!({ "image": image.to_string() }));
            Ok((EXIT_TRUE, report))
        }
        Some(("conservativity", sub)) => {
            let tname: &String = sub.get_one("translation").unwrap();
            let t = Translation::from_name(tname).ok_or_else(|| {
                usage(format!(
                    "unknown translation {tname}; available: {}",
                    translate::TRANSLATION_NAMES.join(", ")
                ))
            })?;
            let target = registry::resolve(sub.get_one::<String>("target").unwrap()).map_err(usage)?;
            let source = match sub.get_one::<String>("source") {
                Some(key) => registry::resolve(key).map_err(usage)?,
                None => t.default_source(),
            };
            let atoms = *sub.get_one::<usize>("atoms").unwrap();
            let size = *sub.get_one::<usize>("size").unwrap();
            let r = translate::conservativity_check(t, &source, &target, atoms, size)
                .map_err(internal)?;
            let verdict = r.holds();
            match &r.counterexample {
                None => say(
                    json,
                    format!(
                        "no violation up to {} atoms, size {} ({} semantic classes)",
                        atoms, size, r.classes
                    ),
                ),
                Some(cx) => say(
                    json,
                    format!(
                        "violation: {{{}}} vs {} (source: {}, target: {})",
                        cx.premises.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("; "),
                        cx.conclusion,
                        cx.holds_in_source,
                        cx.holds_in_target
                    ),
                ),
            }
            let report = Report::new(
                "conservativity",
                json!({
                    "translation": t.name(),
                    "source": source.name(),
                    "target": target.name(),
                    "atoms": atoms,
                    "size": size,
                }),
            )
            .verdict(verdict)
            .details(json!({
                "classes": r.classes,
                "counterexample": r.counterexample.as_ref().map(|cx| json!({
                    "premises": cx.premises.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "conclusion": cx.conclusion.to_string(),
                    "holds_in_source": cx.holds_in_source,
                    "holds_in_target": cx.holds_in_target,
                })),
            }));
            Ok((verdict_code(verdict), report))
        }
        Some(("clone", sub)) => {
            let logic = logic_of(sub)?;
            let arity = *sub.get_one::<u8>("arity").unwrap();
            let set = match sub.get_one::<usize>("bound") {
                Some(&bound) => matrices::bounded_terms(&logic, arity, bound),
                None => matrices::clone_functions_checked(&logic, arity, &logic.connectives())
                    .map_err(internal)?,
            };
            for f in &set.functions {
                let table = f.table.iter().map(|&v| logic.label(v)).collect::<Vec<_>>().join(",");
                say(json, format!("[{}]  {}", table, f.witness));
            }
            say(
                json,
                format!(
                    "{} function(s), {}",
                    set.len(),
                    if set.exact { "exact clone" } else { "term-size-bounded approximation" }
                ),
            );
            let report = Report::new(
                "clone",
                json!({ "logic": logic.name(), "arity": arity, "exact": set.exact }),
            )
            .details(json!({
                "count": set.len(),
                "functions": set.functions.iter().map(|f| json!({
                    "table": f.table.iter().map(|&v| logic.label(v).to_string()).collect::<Vec<_>>(),
                    "witness": f.witness.to_string(),
                })).collect::<Vec<_>>(),
            }));
            Ok((EXIT_TRUE, report))
        }
        Some(("verify-paper", sub)) => {
            let filter = sub.get_one::<String>("section").map(|s| s.as_str());
            let suite = verify::verify_paper(filter);
            for c in &suite.checks {
                say(
                    json,
                    format!(
                        "[{}] {:4} {}  (expected {}, got {})",
                        if c.pass { "pass" } else { "FAIL" },
                        c.section,
                        c.name,
                        c.expected,
                        c.got
                    ),
                );
            }
            say(json, format!("{} passed, {} failed", suite.passed(), suite.failed()));
            let verdict = suite.all_pass();
            let report = Report::new("verify-paper", json!({ "section": filter }))
                .verdict(verdict)
                .details(serde_json::to_value(&suite).unwrap());
            Ok((verdict_code(verdict), report))
        }
        _ => unreachable!("subcommand required"),
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
    }
}
