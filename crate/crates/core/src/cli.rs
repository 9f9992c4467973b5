//! File formats and the `quadpair` command line.
//!
//! Instance text format: optional `# key: value` metadata lines, then the
//! dimension `n` on its own line, then `n` rows of `Q0` and `n` rows of `Q1`,
//! entries written as integers or `p/q`. Blank lines and other `#` lines are
//! ignored. The JSON form carries the same fields.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ball::PrecisionPolicy;
use crate::error::{Error, Result};
use crate::exact::{evaluate_form, inertia, Matrix, Rat, RatVec, SymMatrix};
use crate::oracle::{ExternalSolver, Oracle, DEFAULT_BUDGET};
use crate::pencil::{check_hypothesis_h, find_balanced_lambda, format_profile, is_real_solvable, member, signature_profile};
use crate::rational_solution::{solve_pair_with, SolutionCertificate, SolveConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INSOLVABLE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PRECISION: i32 = 4;
pub const EXIT_VERIFY_FAIL: i32 = 5;

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::RealInsolvable { .. } => EXIT_INSOLVABLE,
        Error::Oracle(_) => EXIT_BUDGET,
        Error::PrecisionExhausted(_) | Error::Uncertain(_) => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub q0: SymMatrix,
    pub q1: SymMatrix,
    pub meta: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    n: usize,
    q0: Vec<Vec<String>>,
    q1: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    meta: Vec<(String, String)>,
}

fn parse_rat(tok: &str, line: usize, col: usize) -> Result<Rat> {
    let bad = || Error::Parse { line, col, msg: format!("not a rational: {tok:?}") };
    if tok.ends_with("/0") || tok.contains("/-") {
        return Err(bad());
    }
    tok.parse::<Rat>().map_err(|_| bad())
}

fn grid_strings(q: &SymMatrix) -> Vec<Vec<String>> {
    q.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

fn symmetric_or_parse_err(rows: Vec<Vec<Rat>>, line: usize, name: &str) -> Result<SymMatrix> {
    Matrix::symmetric(rows).map_err(|e| Error::Parse { line, col: 1, msg: format!("{name}: {e}") })
}

impl Instance {
    pub fn new(q0: SymMatrix, q1: SymMatrix) -> Self {
        Instance { q0, q1, meta: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.q0.nrows()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(s, "# {k}: {v}");
        }
        let _ = writeln!(s, "{}", self.n());
        for q in [&self.q0, &self.q1] {
            for row in grid_strings(q) {
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        let j = InstanceJson { n: self.n(), q0: grid_strings(&self.q0), q1: grid_strings(&self.q1), meta: self.meta.clone() };
        serde_json::to_string_pretty(&j).unwrap_or_default() + "\n"
    }

    /// Text or JSON, decided by the first non-blank character.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Instance::parse_json(s)
        } else {
            Instance::parse_text(s)
        }
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        let j: InstanceJson = serde_json::from_str(s)
            .map_err(|e| Error::Parse { line: e.line(), col: e.column(), msg: e.to_string() })?;
        let grid = |g: &[Vec<String>], name: &str| -> Result<SymMatrix> {
            if g.len() != j.n || g.iter().any(|r| r.len() != j.n) {
                return Err(Error::Parse { line: 0, col: 0, msg: format!("{name} is not {0}×{0}", j.n) });
            }
            let rows = g
                .iter()
                .enumerate()
                .map(|(i, r)| r.iter().enumerate().map(|(c, t)| parse_rat(t, i + 1, c + 1)).collect())
                .collect::<Result<Vec<Vec<Rat>>>>()?;
            symmetric_or_parse_err(rows, 0, name)
        };
        Ok(Instance { q0: grid(&j.q0, "Q0")?, q1: grid(&j.q1, "Q1")?, meta: j.meta })
    }

    pub fn parse_text(s: &str) -> Result<Self> {
        let mut meta = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let t = raw.trim();
            if let Some(c) = t.strip_prefix('#') {
                if let Some((k, v)) = c.split_once(':') {
                    meta.push((k.trim().to_string(), v.trim().to_string()));
                }
                continue;
            }
            if !t.is_empty() {
                lines.push((i + 1, raw));
            }
        }
        let Some(&(nl, nraw)) = lines.first() else {
            return Err(Error::Parse { line: 1, col: 1, msg: "empty instance".into() });
        };
        let n: usize = nraw
            .trim()
            .parse()
            .map_err(|_| Error::Parse { line: nl, col: 1, msg: format!("expected the dimension, got {:?}", nraw.trim()) })?;
        if n == 0 {
            return Err(Error::Parse { line: nl, col: 1, msg: "dimension must be positive".into() });
        }
        if lines.len() != 1 + 2 * n {
            let (line, _) = lines.last().copied().unwrap_or((nl, ""));
            return Err(Error::Parse { line, col: 1, msg: format!("expected {} matrix rows, found {}", 2 * n, lines.len() - 1) });
        }
        let mut rows = Vec::with_capacity(2 * n);
        for &(ln, raw) in &lines[1..] {
            let mut row = Vec::with_capacity(n);
            let mut pos = 0;
            for tok in raw.split_whitespace() {
                let col = raw[pos..].find(tok).map_or(pos, |o| pos + o) + 1;
                pos = col - 1 + tok.len();
                row.push(parse_rat(tok, ln, col)?);
            }
            if row.len() != n {
                return Err(Error::Parse { line: ln, col: 1, msg: format!("expected {n} entries, found {}", row.len()) });
            }
            rows.push(row);
        }
        let q1_rows = rows.split_off(n);
        let q0 = symmetric_or_parse_err(rows, lines[1].0, "Q0")?;
        let q1 = symmetric_or_parse_err(q1_rows, lines[1 + n].0, "Q1")?;
        Ok(Instance { q0, q1, meta })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Instance::parse(&std::fs::read_to_string(path)?)
    }
}

/// What `solve` writes and `verify` reads.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub n: usize,
    pub x: Vec<String>,
    pub residue0: String,
    pub residue1: String,
    pub seed: u64,
    pub digest: String,
}

impl CertificateFile {
    pub fn from_certificate(c: &SolutionCertificate) -> Self {
        CertificateFile {
            n: c.x.len(),
            x: c.x.iter().map(|v| v.to_string()).collect(),
            residue0: c.residue0.to_string(),
            residue1: c.residue1.to_string(),
            seed: c.seed,
            digest: c.digest(),
        }
    }

    pub fn vector(&self) -> Result<RatVec> {
        self.x.iter().enumerate().map(|(i, t)| parse_rat(t, 0, i + 1)).collect()
    }

    pub fn to_text(&self) -> String {
        format!(
            "n {}\nx {}\nresidue0 {}\nresidue1 {}\nseed {}\ndigest {}\n",
            self.n,
            self.x.join(" "),
            self.residue0,
            self.residue1,
            self.seed,
            self.digest
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap_or_default() + "\n"
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse { line: e.line(), col: e.column(), msg: e.to_string() });
        }
        let mut c = CertificateFile { n: 0, x: Vec::new(), residue0: String::new(), residue1: String::new(), seed: 0, digest: String::new() };
        let mut seen_x = false;
        for (i, raw) in s.lines().enumerate() {
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let (key, rest) = t.split_once(char::is_whitespace).unwrap_or((t, ""));
            let rest = rest.trim();
            let bad = |msg: String| Error::Parse { line: i + 1, col: 1, msg };
            match key {
                "n" => c.n = rest.parse().map_err(|_| bad(format!("bad dimension {rest:?}")))?,
                "x" => {
                    c.x = rest.split_whitespace().map(str::to_string).collect();
                    seen_x = true;
                }
                "residue0" => c.residue0 = rest.to_string(),
                "residue1" => c.residue1 = rest.to_string(),
                "seed" => c.seed = rest.parse().map_err(|_| bad(format!("bad seed {rest:?}")))?,
                "digest" => c.digest = rest.to_string(),
                _ => return Err(bad(format!("unknown key {key:?}"))),
            }
        }
        if !seen_x {
            return Err(Error::Parse { line: 0, col: 0, msg: "certificate has no vector".into() });
        }
        if c.n != c.x.len() {
            return Err(Error::Parse { line: 0, col: 0, msg: format!("n = {} but x has {} entries", c.n, c.x.len()) });
        }
        Ok(c)
    }
}

/// Outcome of an independent exact check.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub pass: bool,
    pub residue0: Rat,
    pub residue1: Rat,
    pub reason: Option<String>,
}

/// Recompute `q0(x)` and `q1(x)` from the instance alone.
pub fn verify_vector(inst: &Instance, x: &[Rat]) -> Result<Verdict> {
    if x.len() != inst.n() {
        return Err(Error::DimensionMismatch { expected: inst.n(), found: x.len() });
    }
    let residue0 = evaluate_form(&inst.q0, x)?;
    let residue1 = evaluate_form(&inst.q1, x)?;
    let reason = if x.iter().all(|v| v.is_zero()) {
        Some("zero vector".to_string())
    } else if !residue0.is_zero() {
        Some(format!("q0(x) = {residue0}"))
    } else if !residue1.is_zero() {
        Some(format!("q1(x) = {residue1}"))
    } else {
        None
    };
    Ok(Verdict { pass: reason.is_none(), residue0, residue1, reason })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub bound: i64,
    pub seed: u64,
    pub require_solvable: bool,
    pub max_attempts: usize,
}

impl GenParams {
    pub fn new(n: usize, bound: i64, seed: u64) -> Self {
        GenParams { n, bound, seed, require_solvable: false, max_attempts: 1000 }
    }
}

/// Random symmetric integer pair with entries in `[−B, B]` satisfying
/// Hypothesis H, optionally also real-solvable. Deterministic per seed.
pub fn generate(p: &GenParams) -> Result<Instance> {
    if p.bound < 1 {
        return Err(Error::Precondition(format!("entry bound must be ≥ 1, got {}", p.bound)));
    }
    if p.n < 2 {
        return Err(Error::Precondition(format!("dimension must be ≥ 2, got {}", p.n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let sym = |rng: &mut ChaCha8Rng| {
        let mut m = Matrix::zeros(p.n, p.n, ());
        for i in 0..p.n {
            for j in i..p.n {
                let v = Rat::from_integer(rng.gen_range(-p.bound..=p.bound).into());
                m[(i, j)] = v.clone();
                m[(j, i)] = v;
            }
        }
        m
    };
    for attempt in 1..=p.max_attempts {
        let q0 = sym(&mut rng);
        let q1 = sym(&mut rng);
        if !check_hypothesis_h(&q0, &q1)?.holds {
            continue;
        }
        if p.require_solvable && !is_real_solvable(&q0, &q1)?.solvable_over_r {
            continue;
        }
        let mut meta = vec![
            ("seed".to_string(), p.seed.to_string()),
            ("bound".to_string(), p.bound.to_string()),
            ("attempts".to_string(), attempt.to_string()),
        ];
        if p.require_solvable {
            meta.push(("require-solvable".to_string(), "true".to_string()));
        }
        return Ok(Instance { q0, q1, meta });
    }
    Err(Error::Precondition(format!("no admissible instance in {} attempts", p.max_attempts)))
}

/// `check` report and whether Hypothesis H holds.
pub fn check_report(inst: &Instance) -> Result<(String, bool)> {
    let h = check_hypothesis_h(&inst.q0, &inst.q1)?;
    let mut s = String::new();
    let deg = h.delta.degree().map_or("-inf".to_string(), |d| d.to_string());
    if let Some(f) = &h.failure {
        let _ = writeln!(s, "H: FAIL {f}");
        let _ = writeln!(s, "deg Δ = {deg}");
        return Ok((s, false));
    }
    let prof = signature_profile(&inst.q0, &inst.q1)?;
    let _ = writeln!(s, "H: OK, n = {}, deg Δ = {deg}, m = {}", inst.n(), prof.m);
    let _ = writeln!(s, "profile: {}", format_profile(&prof));
    let _ = writeln!(s, "{:<18} {:>12}  signature  d", "segment", "sample");
    for seg in &prof.segments {
        let l = seg.left_root.map_or("-inf".to_string(), |i| format!("λ{}", i + 1));
        let r = seg.right_root.map_or("+inf".to_string(), |i| format!("λ{}", i + 1));
        let _ = writeln!(s, "{:<18} {:>12}  {:<9}  {}", format!("({l}, {r})"), seg.sample.to_string(), seg.signature.to_string(), seg.signature.d());
    }
    Ok((s, true))
}

/// `analyze` report and whether the pair is real-solvable.
pub fn analyze_report(inst: &Instance) -> Result<(String, bool)> {
    let rep = is_real_solvable(&inst.q0, &inst.q1)?;
    if let Some(f) = rep.hypothesis_failure {
        return Err(Error::Hypothesis(f));
    }
    let mut s = String::new();
    let solvable = rep.solvable_over_r;
    match &rep.definite_lambda {
        Some(w) => {
            let sig = inertia(&member(&inst.q0, &inst.q1, w));
            let _ = writeln!(s, "REAL-INSOLVABLE, witness λ = {w}, signature {sig}");
        }
        None => {
            let _ = writeln!(s, "REAL-SOLVABLE");
        }
    }
    let bal = find_balanced_lambda(&inst.q0, &inst.q1)?;
    let _ = writeln!(s, "balanced λ = {}, signature {}, dichotomy steps {}", bal.lambda, bal.signature, bal.steps);
    Ok((s, solvable))
}

#[derive(Parser, Debug)]
#[command(name = "quadpair", version, about = "Rational common zeros of two quadratic forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SolveOpts {
    /// Seed of the randomized repair step.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Lattice points the built-in isotropic vector search may evaluate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Cap on the working precision of the real computations.
    #[arg(long, default_value_t = 16384)]
    pub precision_bits: u32,
    /// External solver for single forms, run with `sh -c`.
    #[arg(long)]
    pub oracle_cmd: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hypothesis H diagnostics and the signature profile of the pencil.
    Check { instance: PathBuf },
    /// Real solvability verdict and a balanced member.
    Analyze { instance: PathBuf },
    /// Compute and certify a rational common zero.
    Solve {
        instance: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Output file (stdout when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a certificate against an instance by exact evaluation.
    Verify { instance: PathBuf, certificate: PathBuf },
    /// Emit a random instance satisfying Hypothesis H.
    Generate {
        #[arg(long, default_value_t = 13)]
        n: usize,
        /// Entries are drawn from [−bound, bound].
        #[arg(long, default_value_t = 5)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        require_solvable: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn write_out(path: &Option<PathBuf>, s: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, s)?,
        None => std::io::stdout().write_all(s.as_bytes())?,
    }
    Ok(())
}

fn oracle_for(opts: &SolveOpts) -> Oracle {
    let external = opts.oracle_cmd.as_ref().map(ExternalSolver::from_env);
    Oracle { budget: opts.budget, external }
}

pub fn solve_config(opts: &SolveOpts) -> Result<SolveConfig> {
    let cap = opts.precision_bits;
    let policy = PrecisionPolicy::new(cap.min(64), cap, 2)?;
    Ok(SolveConfig { seed: opts.seed, policy, ..SolveConfig::default() })
}

fn run_command(cmd: &Command) -> Result<i32> {
    match cmd {
        Command::Check { instance } => {
            let (s, ok) = check_report(&Instance::read(instance)?)?;
            print!("{s}");
            Ok(if ok { EXIT_OK } else { EXIT_USAGE })
        }
        Command::Analyze { instance } => {
            let (s, ok) = analyze_report(&Instance::read(instance)?)?;
            print!("{s}");
            Ok(if ok { EXIT_OK } else { EXIT_INSOLVABLE })
        }
        Command::Solve { instance, opts, output, json } => {
            let inst = Instance::read(instance)?;
            let cfg = solve_config(opts)?;
            let cert = solve_pair_with(&inst.q0, &inst.q1, &oracle_for(opts), &cfg)?;
            let file = CertificateFile::from_certificate(&cert);
            write_out(output, &if *json { file.to_json() } else { file.to_text() })?;
            Ok(EXIT_OK)
        }
        Command::Verify { instance, certificate } => {
            let inst = Instance::read(instance)?;
            let cert = CertificateFile::parse(&std::fs::read_to_string(certificate)?)?;
            let v = verify_vector(&inst, &cert.vector()?)?;
            match &v.reason {
                None => {
                    println!("PASS residue0 = 0, residue1 = 0");
                    Ok(EXIT_OK)
                }
                Some(r) => {
                    println!("FAIL {r}");
                    Ok(EXIT_VERIFY_FAIL)
                }
            }
        }
        Command::Generate { n, bound, seed, require_solvable, output, json } => {
            let mut p = GenParams::new(*n, *bound, *seed);
            p.require_solvable = *require_solvable;
            let inst = generate(&p)?;
            write_out(output, &if *json { inst.to_json() } else { inst.to_text() })?;
            Ok(EXIT_OK)
        }
    }
}

/// Run a parsed command line; errors are printed to stderr.
pub fn run(cli: &Cli) -> i32 {
    match run_command(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            match &e {
                Error::RealInsolvable { witness } => {
                    println!("REAL-INSOLVABLE, witness λ = {witness}");
                }
                _ => eprintln!("error: {e}"),
            }
            exit_code(&e)
        }
    }
}

/// Entry point of the binary. Usage errors exit with code 1.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

/// Timeout applied to external solvers started by the CLI.
pub fn oracle_timeout() -> Duration {
    ExternalSolver::from_env("").timeout
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, int_vec, rat};

    fn small() -> Instance {
        let q0 = Matrix::symmetric(vec![vec![rat(1, 2), int(0)], vec![int(0), int(-3)]]).unwrap();
        let q1 = Matrix::diagonal(&int_vec(&[2, 5]));
        Instance { q0, q1, meta: vec![("seed".into(), "7".into())] }
    }

    #[test]
    fn text_round_trip() {
        let i = small();
        let t = i.to_text();
        assert_eq!(t, "# seed: 7\n2\n1/2 0\n0 -3\n2 0\n0 5\n");
        assert_eq!(Instance::parse(&t).unwrap(), i);
        assert_eq!(Instance::parse(&i.to_json()).unwrap(), i);
    }

    #[test]
    fn parse_errors_have_positions() {
        match Instance::parse("2\n1 0\n0 x\n1 0\n0 1\n") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (3, 3)),
            other => panic!("{other:?}"),
        }
        match Instance::parse("2\n1 2\n0 1\n1 0\n0 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Instance::parse("2\n1 0\n0 1/0\n1 0\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Instance::parse("2\n1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Instance::parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn certificate_round_trip() {
        let c = CertificateFile {
            n: 2,
            x: vec!["1".into(), "-1".into()],
            residue0: "0".into(),
            residue1: "0".into(),
            seed: 3,
            digest: "ab".into(),
        };
        assert_eq!(CertificateFile::parse(&c.to_text()).unwrap(), c);
        assert_eq!(CertificateFile::parse(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn verdicts() {
        let inst = Instance::new(Matrix::diagonal(&int_vec(&[1, -1])), Matrix::diagonal(&int_vec(&[2, -2])));
        assert!(verify_vector(&inst, &int_vec(&[3, 3])).unwrap().pass);
        assert!(!verify_vector(&inst, &int_vec(&[3, 2])).unwrap().pass);
        assert!(!verify_vector(&inst, &int_vec(&[0, 0])).unwrap().pass);
        assert!(verify_vector(&inst, &int_vec(&[1])).is_err());
    }

    #[test]
    fn generator_is_deterministic() {
        let p = GenParams::new(5, 3, 11);
        let a = generate(&p).unwrap();
        assert_eq!(a.to_text(), generate(&p).unwrap().to_text());
        assert!(check_hypothesis_h(&a.q0, &a.q1).unwrap().holds);
        assert!(generate(&GenParams::new(5, 0, 1)).is_err());
        let mut p = GenParams::new(5, 3, 2);
        p.require_solvable = true;
        let b = generate(&p).unwrap();
        assert!(is_real_solvable(&b.q0, &b.q1).unwrap().solvable_over_r);
    }

    #[test]
    fn reports() {
        let inst = Instance::new(Matrix::diagonal(&int_vec(&[1, 1, -1])), Matrix::diagonal(&int_vec(&[1, 2, 5])));
        let (s, ok) = check_report(&inst).unwrap();
        assert!(ok && s.starts_with("H: OK"));
        let (s, ok) = analyze_report(&inst).unwrap();
        assert!(!ok && s.starts_with("REAL-INSOLVABLE"));
        let sing = Instance::new(Matrix::diagonal(&int_vec(&[1, 0, 1])), Matrix::diagonal(&int_vec(&[1, 2, 5])));
        let (s, ok) = check_report(&sing).unwrap();
        assert!(!ok && s.starts_with("H: FAIL det(Q0)=0"));
        let dbl = Instance::new(Matrix::diagonal(&int_vec(&[1, 1, -1])), Matrix::diagonal(&int_vec(&[1, 1, 5])));
        assert!(check_report(&dbl).unwrap().0.starts_with("H: FAIL Δ not squarefree"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::RealInsolvable { witness: int(0) }), 2);
        assert_eq!(exit_code(&Error::Oracle(crate::oracle::OracleError::BudgetExhausted { budget: 1, radius: 1 })), 3);
        assert_eq!(exit_code(&Error::PrecisionExhausted(64)), 4);
        assert_eq!(exit_code(&Error::Parse { line: 1, col: 1, msg: String::new() }), 1);
        assert_eq!(main_with_args(["quadpair", "frobnicate"]), 1);
    }
}
