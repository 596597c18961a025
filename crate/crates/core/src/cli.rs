//! The `picard` command line.
//!
//! Every command prints one JSON report on stdout and a short summary on
//! stderr. Exit status is 0 on success, 1 when a verification fails and 2
//! for unusable input.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::cover::{
    check_certificate, sigma_pieces, standard_sphere_list, verify_covering, CoverCertificate,
};
use crate::error::{Error, Result};
use crate::form::{is_member, GroupElement};
use crate::generators;
use crate::json;
use crate::langlands::decompose;
use crate::stab_words::{stab_word, verify_proof_identities};
use crate::u2_words::{enumerate_u2, u2_word, U2Element, U2Letter, U2Word};
use crate::word::{random_word, Generator};

/// Deep enough for the standard sphere list with room to spare; the full
/// covering closes at depth 4.
pub const DEFAULT_DEPTH: u32 = 8;

#[derive(Debug, Parser)]
#[command(
    name = "picard",
    version,
    about = "Exact checks for the Gauss-Picard modular group"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every stage of the generation proof.
    VerifyTheorem {
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        /// JSON file with the five matrices keyed T1, T2, M1, M2, R.
        #[arg(long)]
        generators: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random words in the round-trip stage.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Also write the covering certificate here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include wall-clock timings (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Langlands parameters of a matrix fixing infinity.
    Decompose { file: PathBuf },
    /// A word in T1, T2, M1, M2 for a stabilizer element, or with `--u2` a
    /// word in U1, U2 for a 2×2 unitary matrix.
    Word {
        #[arg(long)]
        u2: bool,
        file: PathBuf,
    },
    /// Covering certificate for one piece or all nine.
    Cover {
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=9))]
        piece: Option<u64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub verdicts: Vec<Verdict>,
    pub timings: Option<Vec<(String, f64)>>,
    pub certificate_paths: Vec<String>,
    pub result: Option<Value>,
}

impl RunReport {
    fn new(command: &str, digest: String) -> Self {
        RunReport {
            command: command.into(),
            inputs_digest: digest,
            verdicts: Vec::new(),
            timings: None,
            certificate_paths: Vec::new(),
            result: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.verdicts
            .iter()
            .find(|v| !v.pass)
            .map(|v| v.check.as_str())
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("inputs_digest".into(), json!(self.inputs_digest));
        m.insert("pass".into(), json!(self.passed()));
        if let Some(f) = self.first_failure() {
            m.insert("first_failure".into(), json!(f));
        }
        let verdicts: Vec<Value> = self
            .verdicts
            .iter()
            .map(|v| json!({"check": v.check, "pass": v.pass, "detail": v.detail}))
            .collect();
        m.insert("verdicts".into(), Value::Array(verdicts));
        if let Some(t) = &self.timings {
            let t: Map<String, Value> = t.iter().map(|(k, s)| (k.clone(), json!(s))).collect();
            m.insert("timings_seconds".into(), Value::Object(t));
        }
        m.insert("certificate_paths".into(), json!(self.certificate_paths));
        if let Some(r) = &self.result {
            m.insert("result".into(), r.clone());
        }
        Value::Object(m)
    }
}

fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn write_json(path: &Path, v: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v).expect("serializable");
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// The built-in generators as the fixture format.
pub fn generators_to_json() -> Value {
    let m: Map<String, Value> = generators::all()
        .into_iter()
        .map(|(k, g)| (k.to_string(), json::matrix_to_json(&g)))
        .collect();
    Value::Object(m)
}

pub fn generators_from_json(v: &Value, source: &str) -> Result<Vec<(String, GroupElement)>> {
    generators::all()
        .into_iter()
        .map(|(name, _)| {
            let entry = v
                .get(name)
                .ok_or_else(|| Error::Parse(format!("{source}: missing generator {name}")))?;
            Ok((
                name.to_string(),
                json::matrix_from_json(entry, &format!("{source}: {name}"))?,
            ))
        })
        .collect()
}

/// Stage (a): each matrix is an integral J-unitary matrix equal to the
/// built-in one, and the finite-order relations hold.
pub fn stage_generators(gens: &[(String, GroupElement)]) -> Verdict {
    let builtin = generators::all();
    let mut problems = Vec::new();
    for ((name, g), (_, expected)) in gens.iter().zip(&builtin) {
        if !is_member(g) {
            problems.push(json!({"generator": name, "problem": "not an integral J-unitary matrix", "matrix": json::matrix_to_json(g)}));
        } else if g != expected {
            problems.push(json!({"generator": name, "problem": "differs from the built-in matrix", "matrix": json::matrix_to_json(g)}));
        }
    }
    let find = |n: &str| gens.iter().find(|(k, _)| k == n).map(|(_, g)| g.clone());
    let relations = [
        ("R^2 = 1", "R", 2u64),
        ("M1^2 = 1", "M1", 2),
        ("M2^4 = 1", "M2", 4),
    ];
    let mut rel = Map::new();
    for (label, name, k) in relations {
        let holds = find(name).is_some_and(|g| g.pow(k).is_identity());
        rel.insert(label.into(), json!(holds));
        if !holds {
            problems.push(json!({"generator": name, "problem": format!("{label} fails")}));
        }
    }
    Verdict {
        check: "(a) generators".into(),
        pass: problems.is_empty() && gens.len() == builtin.len(),
        detail: json!({"relations": rel, "problems": problems}),
    }
}

/// Stage (b): verbatim identities are reported; only the recomputed ones
/// decide the verdict.
pub fn stage_identities() -> Verdict {
    let report = verify_proof_identities();
    let rows: Vec<Value> = report
        .verdicts
        .iter()
        .map(|v| {
            let mut m = Map::new();
            m.insert("name".into(), json!(v.name));
            m.insert("source".into(), json!(v.source));
            m.insert("statement".into(), json!(v.statement));
            m.insert("holds".into(), json!(v.holds));
            if let Some(d) = &v.discrepancy {
                m.insert("lhs_inv_times_rhs".into(), json::matrix_to_json(d));
            }
            Value::Object(m)
        })
        .collect();
    let verbatim_fail = report
        .verdicts
        .iter()
        .filter(|v| v.source == "verbatim" && !v.holds)
        .count();
    Verdict {
        check: "(b) translation identities".into(),
        pass: report.all_derived_hold(),
        detail: json!({"verbatim_failures": verbatim_fail, "table": rows}),
    }
}

/// Stage (c): U(2; Z[i]) has 32 elements and each has a word.
pub fn stage_u2() -> Verdict {
    let all = enumerate_u2();
    let mut missing = Vec::new();
    for u in &all {
        match u2_word(u) {
            Ok(w) if w.evaluate() == *u => {}
            _ => missing.push(u.to_string()),
        }
    }
    let w = U2Word(vec![U2Letter::U1, U2Letter::U2, U2Letter::U1]);
    let identity =
        w.evaluate() == U2Element::diag(crate::arith::GaussInt::one(), crate::arith::GaussInt::i());
    Verdict {
        check: "(c) U(2; Z[i]) words".into(),
        pass: all.len() == 32 && missing.is_empty() && identity,
        detail: json!({"elements": all.len(), "without_word": missing, "U1·U2·U1 = diag(1,i)": identity}),
    }
}

/// Stage (d): random stabilizer words evaluate, decompose and re-expand to
/// the same matrix.
pub fn stage_roundtrip(seed: u64, samples: usize) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for k in 0..samples {
        let w = random_word(&mut rng, &Generator::STABILIZER, 30);
        let p = w.evaluate();
        let ok = match stab_word(&p) {
            Ok(sw) => {
                sw.scalar_unit.is_one()
                    && sw.word.evaluate() == p
                    && decompose(&p).is_ok_and(|d| d.satisfies_integral_constraints())
            }
            Err(_) => false,
        };
        if !ok && failures.len() < 5 {
            failures.push(json!({"sample": k, "word": w.to_string()}));
        }
    }
    Verdict {
        check: "(d) stabilizer round trip".into(),
        pass: failures.is_empty(),
        detail: json!({"seed": seed, "samples": samples, "failures": failures}),
    }
}

/// Stage (e): the nine pieces against the sphere list, then an independent
/// replay of the certificate.
pub fn stage_covering(depth: u32) -> (Verdict, CoverCertificate) {
    let spheres = standard_sphere_list();
    let cert = verify_covering(&sigma_pieces(), &spheres, depth);
    let audit = if cert.is_complete() {
        check_certificate(&cert, &spheres).err()
    } else {
        None
    };
    let pieces: Vec<Value> = cert
        .pieces
        .iter()
        .map(|p| json!({"piece": p.piece, "complete": p.is_complete(), "leaf_count": p.leaf_count(), "depth": p.depth, "uncovered": p.uncovered.len()}))
        .collect();
    let mut detail = json!({
        "max_depth": depth,
        "depth": cert.depth(),
        "leaf_count": cert.leaf_count(),
        "spheres": spheres.iter().map(|s| s.id.clone()).collect::<Vec<_>>(),
        "pieces": pieces,
    });
    if let Some(a) = &audit {
        detail["audit_error"] = json!(a);
    } else if !cert.is_complete() {
        let (piece, first) = cert.uncovered().next().expect("incomplete has a box");
        detail["depth_exhausted"] =
            json!({"piece": piece, "box": json::region_to_json(&first.region)});
    }
    let verdict = Verdict {
        check: "(e) covering".into(),
        pass: cert.is_complete() && audit.is_none(),
        detail,
    };
    (verdict, cert)
}

fn verify_theorem(
    depth: u32,
    generators_path: Option<&Path>,
    seed: u64,
    samples: usize,
    json_path: Option<&Path>,
    timings: bool,
) -> Result<RunReport> {
    let (gens, source_bytes) = match generators_path {
        Some(p) => {
            let text = read(p)?;
            let v = json::parse_json(&text, &p.display().to_string())?;
            (
                generators_from_json(&v, &p.display().to_string())?,
                text.into_bytes(),
            )
        }
        None => (
            generators::all()
                .into_iter()
                .map(|(k, g)| (k.to_string(), g))
                .collect(),
            generators_to_json().to_string().into_bytes(),
        ),
    };
    let args = format!("depth={depth} seed={seed} samples={samples}");
    let mut report = RunReport::new(
        "verify-theorem",
        digest(&[b"verify-theorem", args.as_bytes(), &source_bytes]),
    );
    let mut times = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |stage: &str| {
        times.push((stage.to_string(), clock.elapsed().as_secs_f64()));
        clock = Instant::now();
    };
    report.verdicts.push(stage_generators(&gens));
    lap("a");
    report.verdicts.push(stage_identities());
    lap("b");
    report.verdicts.push(stage_u2());
    lap("c");
    report.verdicts.push(stage_roundtrip(seed, samples));
    lap("d");
    let (verdict, cert) = stage_covering(depth);
    report.verdicts.push(verdict);
    lap("e");
    if timings {
        report.timings = Some(times);
    }
    if let Some(path) = json_path {
        write_json(path, &json::certificate_to_json(&cert))?;
        report.certificate_paths.push(path.display().to_string());
    }
    Ok(report)
}

fn load_matrix(path: &Path) -> Result<(GroupElement, String)> {
    let text = read(path)?;
    let v = json::parse_json(&text, &path.display().to_string())?;
    Ok((
        json::matrix_from_json(&v, &path.display().to_string())?,
        text,
    ))
}

fn cmd_decompose(path: &Path) -> Result<RunReport> {
    let (g, text) = load_matrix(path)?;
    let mut report = RunReport::new("decompose", digest(&[b"decompose", text.as_bytes()]));
    report.result = Some(json::params_to_json(&decompose(&g)?));
    Ok(report)
}

fn cmd_word(path: &Path, u2: bool) -> Result<RunReport> {
    let text = read(path)?;
    let name = path.display().to_string();
    let v = json::parse_json(&text, &name)?;
    let mut report = RunReport::new("word", digest(&[b"word", &[u2 as u8], text.as_bytes()]));
    if u2 {
        let m = json::mat2_from_json(&v, &name)?;
        let w = u2_word(&U2Element::from_mat2(&m)?)?;
        let letters: Vec<&str> = w.0.iter().map(|l| l.name()).collect();
        report.result = Some(json!({"text": w.to_string(), "letters": letters}));
    } else {
        let g = json::matrix_from_json(&v, &name)?;
        report.result = Some(json::stab_word_to_json(&stab_word(&g)?));
    }
    Ok(report)
}

fn cmd_cover(depth: u32, piece: Option<usize>, json_path: Option<&Path>) -> Result<RunReport> {
    let args = format!("depth={depth} piece={piece:?}");
    let mut report = RunReport::new("cover", digest(&[b"cover", args.as_bytes()]));
    let spheres = standard_sphere_list();
    let all = sigma_pieces();
    let cert = match piece {
        Some(k) => {
            let mut c = verify_covering(&all[k - 1..k], &spheres, depth);
            c.pieces[0].piece = k;
            c
        }
        None => verify_covering(&all, &spheres, depth),
    };
    let audit = if cert.is_complete() {
        check_certificate(&cert, &spheres).err()
    } else {
        None
    };
    let body = match piece {
        Some(_) => json::piece_to_json(&cert.pieces[0]),
        None => json::certificate_to_json(&cert),
    };
    report.verdicts.push(Verdict {
        check: "covering".into(),
        pass: cert.is_complete() && audit.is_none(),
        detail: match &audit {
            Some(a) => json!({"audit_error": a}),
            None => json!({"complete": cert.is_complete(), "leaf_count": cert.leaf_count()}),
        },
    });
    if let Some(path) = json_path {
        write_json(path, &body)?;
        report.certificate_paths.push(path.display().to_string());
    }
    report.result = Some(body);
    Ok(report)
}

fn execute(cli: &Cli) -> Result<RunReport> {
    Ok(match &cli.command {
        Command::VerifyTheorem {
            depth,
            generators,
            seed,
            samples,
            json,
            timings,
        } => verify_theorem(
            *depth,
            generators.as_deref(),
            *seed,
            *samples,
            json.as_deref(),
            *timings,
        )?,
        Command::Decompose { file } => cmd_decompose(file)?,
        Command::Word { u2, file } => cmd_word(file, *u2)?,
        Command::Cover { depth, piece, json } => {
            cmd_cover(*depth, piece.map(|p| p as usize), json.as_deref())?
        }
    })
}

fn summarize(report: &RunReport) {
    for v in &report.verdicts {
        eprintln!("{} {}", if v.pass { "PASS" } else { "FAIL" }, v.check);
    }
    match report.first_failure() {
        Some(f) => eprintln!("{}: failed at {f}", report.command),
        None => eprintln!("{}: ok", report.command),
    }
}

/// Parses arguments, runs the command and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(report) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report.to_json()).expect("serializable")
            );
            summarize(&report);
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            println!("{}", json!({"error": e.to_string()}));
            eprintln!("error: {e}");
            2
        }
    }
}
