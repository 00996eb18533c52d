use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use geotype::{
    advisories, check_injectivity, compare_types, format, incidence_matrix, list_words, orbit,
    refine_if_needed, validate, BiCode, BoundaryCodes, ClassReport, Error, GeometricType, Subshift,
    Verdict, DEFAULT_CLASS_CAP, DEFAULT_PERIODIC_BUDGET,
};
use serde_json::{json, Value};

/// Geometric types of Markov partitions: validation, refinement, boundary codes and
/// the equivalence relations on the symbolic model.
#[derive(Debug, Parser)]
#[command(name = "geotype", version)]
struct Cli {
    /// Emit JSON instead of the compact text form.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every axiom and report all violations.
    Validate { file: PathBuf },
    /// Print the binary refinement when the incidence matrix is not binary.
    Refine { file: PathBuf },
    /// Incidence matrix with binary and mixing flags.
    Incidence { file: PathBuf },
    /// Orbit of a boundary label under Γ or Υ, e.g. `s:+1`, `u:-2`.
    Orbit { file: PathBuf, label: String },
    /// All 4n boundary codes and the injectivity verdict.
    BoundaryCodes { file: PathBuf },
    /// Stratum membership of a code, e.g. "(1)* . 1 . (2)* @ 0".
    Classify { file: PathBuf, code: String },
    /// The ~T class of a code.
    Class {
        file: PathBuf,
        code: String,
        #[arg(long, default_value_t = DEFAULT_CLASS_CAP)]
        cap: usize,
    },
    /// Compare the refined types of two files.
    Compare { file: PathBuf, file2: PathBuf },
    /// Number of admissible words of length M.
    Words {
        file: PathBuf,
        m: usize,
        /// Also list the words.
        #[arg(long)]
        list: bool,
        /// Refuse to list more words than this.
        #[arg(long, default_value_t = 10_000)]
        budget: u128,
    },
    /// Purely periodic codes with primitive period at most P.
    Periodic {
        file: PathBuf,
        p: usize,
        #[arg(long, default_value_t = DEFAULT_PERIODIC_BUDGET)]
        budget: u128,
    },
}

/// A failed command: exit status plus a diagnostic.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invalid(_)
            | Error::InvalidLabel(_)
            | Error::Flavor { .. }
            | Error::NotAdmissible(_)
            | Error::Parse(_)
            | Error::Argument(_) => 1,
            Error::NotBinary
            | Error::NotMixing
            | Error::Stratum(_)
            | Error::Periodic
            | Error::AmbiguousPartner
            | Error::Indeterminate { .. } => 2,
            Error::Budget { .. } => 3,
        };
        Failure {
            code,
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

/// Result of a command. A report can still carry a failure, e.g. a validation report
/// listing violations.
struct Output {
    json: Value,
    text: String,
    failure: Option<Failure>,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            failure: None,
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        kind: "io".into(),
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load(path: &Path) -> Result<GeometricType, Failure> {
    Ok(format::parse_type(&read_file(path)?)?)
}

fn parse_code(t: &GeometricType, s: &str) -> Result<BiCode, Failure> {
    let w: BiCode = s.parse()?;
    if w.max_symbol() > t.n() {
        return Err(Error::Argument(format!(
            "code uses symbol {} but n={}",
            w.max_symbol(),
            t.n()
        ))
        .into());
    }
    Ok(w)
}

fn type_json(t: &GeometricType) -> Value {
    serde_json::to_value(format::GeoTypeFile::from_type(t)).expect("serializable")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_validate(file: &Path) -> Result<Output, Failure> {
    let raw = format::read_raw(&read_file(file)?)?;
    let report = validate(&raw);
    if !report.ok {
        let mut text = String::from("valid: no\n");
        for v in &report.violations {
            writeln!(text, "  {v}").unwrap();
        }
        let failure = Failure {
            code: 1,
            kind: "invalid-type".into(),
            message: format!("{} axiom violation(s)", report.violations.len()),
        };
        let json = json!({ "ok": false, "violations": report.violations });
        return Ok(Output {
            json,
            text,
            failure: Some(failure),
        });
    }
    let t = GeometricType::from_raw(&raw)?;
    let a = incidence_matrix(&t);
    let adv = advisories(&t);
    let mut text = format!(
        "valid: yes\nn: {}\nalpha: {}\nbinary: {}\nmixing: {}\n",
        t.n(),
        t.alpha(),
        yes(a.is_binary()),
        yes(a.is_mixing())
    );
    for x in &adv {
        writeln!(text, "advisory: {}", x.describe()).unwrap();
    }
    let json = json!({
        "ok": true,
        "violations": [],
        "n": t.n(),
        "alpha": t.alpha(),
        "binary": a.is_binary(),
        "mixing": a.is_mixing(),
        "advisories": adv,
    });
    Ok(Output::ok(json, text))
}

fn cmd_refine(file: &Path) -> Result<Output, Failure> {
    let t = load(file)?;
    let (b, applied) = refine_if_needed(&t);
    let text = format!("applied: {applied}\n{}", format::to_file_string(&b));
    Ok(Output::ok(
        json!({ "applied": applied, "type": type_json(&b) }),
        text,
    ))
}

fn cmd_incidence(file: &Path) -> Result<Output, Failure> {
    let t = load(file)?;
    let a = incidence_matrix(&t);
    let mut text = String::new();
    for row in a.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(text, "{}", cells.join(" ")).unwrap();
    }
    write!(
        text,
        "binary: {}\nmixing: {}\n",
        yes(a.is_binary()),
        yes(a.is_mixing())
    )
    .unwrap();
    let json =
        json!({ "n": a.n(), "matrix": a.rows(), "binary": a.is_binary(), "mixing": a.is_mixing() });
    Ok(Output::ok(json, text))
}

fn cmd_orbit(file: &Path, label: &str) -> Result<Output, Failure> {
    let t = load(file)?;
    let lbl = format::parse_label(label)?;
    let o = orbit(&t, lbl)?;
    let dir = match lbl.flavor {
        geotype::Flavor::S => geotype::Direction::Positive,
        geotype::Flavor::U => geotype::Direction::Negative,
    };
    let code = o.code(dir);
    let names = |v: &[geotype::BoundaryLabel]| {
        v.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let text = format!(
        "label: {lbl}\ntransient: {}\ncycle: {}\ncode: {code}\n",
        names(&o.transient),
        names(&o.cycle)
    );
    let json = json!({
        "label": lbl,
        "transient": o.transient,
        "cycle": o.cycle,
        "code": code.to_string(),
    });
    Ok(Output::ok(json, text))
}

fn cmd_boundary_codes(file: &Path) -> Result<Output, Failure> {
    let t = load(file)?;
    let codes = BoundaryCodes::new(&t);
    let injective = check_injectivity(&t);
    let mut text = String::new();
    let mut rows = Vec::new();
    for (lbl, c) in codes.s.iter().chain(&codes.u) {
        writeln!(text, "{lbl} {c}").unwrap();
        rows.push(json!({ "label": lbl, "code": c.to_string() }));
    }
    writeln!(text, "injective: {}", yes(injective)).unwrap();
    Ok(Output::ok(
        json!({ "codes": rows, "injective": injective }),
        text,
    ))
}

fn subshift(file: &Path) -> Result<Subshift, Failure> {
    Ok(Subshift::new(&load(file)?)?)
}

fn cmd_classify(file: &Path, code: &str) -> Result<Output, Failure> {
    let sub = subshift(file)?;
    let w = parse_code(sub.geometric_type(), code)?;
    let f = sub.classify(&w)?;
    let stratum = match (f.in_s, f.in_u) {
        (false, false) => "interior",
        (true, false) => "s-leaf",
        (false, true) => "u-leaf",
        (true, true) => "corner",
    };
    let text = format!(
        "code: {w}\nin_s: {}\nin_u: {}\nstratum: {stratum}\n",
        yes(f.in_s),
        yes(f.in_u)
    );
    let json = json!({ "code": w, "in_s": f.in_s, "in_u": f.in_u, "stratum": stratum });
    Ok(Output::ok(json, text))
}

fn class_text(w: &BiCode, r: &ClassReport) -> String {
    let mut text = format!(
        "code: {w}\nsize: {}\ntruncated: {}\n",
        r.members.len(),
        yes(r.truncated)
    );
    for m in &r.members {
        writeln!(text, "member: {m}").unwrap();
    }
    for e in &r.chain {
        let rel = match e.relation {
            geotype::Relation::S => "~s",
            geotype::Relation::U => "~u",
        };
        writeln!(text, "edge: {} {rel} {}", e.from, e.to).unwrap();
    }
    text
}

fn cmd_class(file: &Path, code: &str, cap: usize) -> Result<Output, Failure> {
    if cap == 0 {
        return Err(Error::Argument("--cap must be positive".into()).into());
    }
    let sub = subshift(file)?;
    let w = parse_code(sub.geometric_type(), code)?;
    let r = sub.class_of(&w, cap)?;
    let text = class_text(&w, &r);
    let json = json!({
        "code": w,
        "size": r.members.len(),
        "truncated": r.truncated,
        "members": r.members,
        "chain": r.chain,
    });
    // a truncated class leaves ~T undecided for codes outside it
    let failure = r.truncated.then(|| Failure {
        code: 2,
        kind: "indeterminate".into(),
        message: format!("class closure hit the cap of {cap} members"),
    });
    Ok(Output {
        json,
        text,
        failure,
    })
}

fn cmd_compare(file: &Path, file2: &Path) -> Result<Output, Failure> {
    let a = load(file)?;
    let b = load(file2)?;
    let r = compare_types(&a, &b);
    let verdict = match r.verdict {
        Verdict::SameInvariant => "same-invariant",
        Verdict::InvariantDistinct => "invariant-distinct",
    };
    let text = format!(
        "structurally_equal: {}\nbinary_a: {}\nbinary_b: {}\nrefined_equal: {}\nverdict: {verdict}\n",
        yes(r.structurally_equal),
        yes(r.binary_a),
        yes(r.binary_b),
        yes(r.refined_equal)
    );
    let json = json!({
        "structurally_equal": r.structurally_equal,
        "binary_a": r.binary_a,
        "binary_b": r.binary_b,
        "refined_a": type_json(&r.refined_a),
        "refined_b": type_json(&r.refined_b),
        "refined_equal": r.refined_equal,
        "verdict": r.verdict,
    });
    Ok(Output::ok(json, text))
}

fn word_string(w: &[usize], wide: bool) -> String {
    let parts: Vec<String> = w.iter().map(|s| s.to_string()).collect();
    parts.join(if wide { "," } else { "" })
}

fn cmd_words(file: &Path, m: usize, list: bool, budget: u128) -> Result<Output, Failure> {
    let t = load(file)?;
    let a = incidence_matrix(&t);
    let count = a.word_count(m)?;
    let mut text = format!("m: {m}\ncount: {count}\n");
    let mut json = json!({ "m": m, "count": count.to_string() });
    if list {
        let words = list_words(&a, m, budget)?;
        let strs: Vec<String> = words.iter().map(|w| word_string(w, t.n() > 9)).collect();
        for s in &strs {
            writeln!(text, "{s}").unwrap();
        }
        json["words"] = json!(strs);
    }
    Ok(Output::ok(json, text))
}

fn cmd_periodic(file: &Path, p: usize, budget: u128) -> Result<Output, Failure> {
    let sub = subshift(file)?;
    let codes = sub.enumerate_periodic(p, budget)?;
    let mut text = format!("p: {p}\ncount: {}\n", codes.len());
    for c in &codes {
        writeln!(text, "{c}").unwrap();
    }
    Ok(Output::ok(
        json!({ "p": p, "count": codes.len(), "codes": codes }),
        text,
    ))
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Validate { file } => cmd_validate(file),
        Command::Refine { file } => cmd_refine(file),
        Command::Incidence { file } => cmd_incidence(file),
        Command::Orbit { file, label } => cmd_orbit(file, label),
        Command::BoundaryCodes { file } => cmd_boundary_codes(file),
        Command::Classify { file, code } => cmd_classify(file, code),
        Command::Class { file, code, cap } => cmd_class(file, code, *cap),
        Command::Compare { file, file2 } => cmd_compare(file, file2),
        Command::Words {
            file,
            m,
            list,
            budget,
        } => cmd_words(file, *m, *list, *budget),
        Command::Periodic { file, p, budget } => cmd_periodic(file, *p, *budget),
    }
}

fn report(f: &Failure) -> ExitCode {
    let diag =
        json!({ "level": "error", "kind": f.kind, "message": f.message, "exit_code": f.code });
    eprintln!("{diag}");
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            eprint!("{msg}");
            return report(&Failure {
                code: 1,
                kind: "usage".into(),
                message: first.to_string(),
            });
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            out.failure.as_ref().map_or(ExitCode::SUCCESS, report)
        }
        Err(f) => report(&f),
    }
}
