//! Delegation to an external solver process.
//!
//! Request on stdin: a line `n`, then `n` lines of `n` rationals `p/q`.
//! Response on stdout: one line of `n` rationals, or `FAIL`.

use std::io::{Read, Write};
use std::process::{Command, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use super::{normalize, verify_isotropic, OracleError};
use crate::exact::{Rat, RatVec, SymMatrix};

pub const TIMEOUT_ENV: &str = "ORACLE_TIMEOUT_SECS";
pub const DEFAULT_TIMEOUT_SECS: u64 = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalSolver {
    /// Shell command line, run with `sh -c`.
    pub cmd: String,
    pub timeout: Duration,
}

impl ExternalSolver {
    pub fn new(cmd: impl Into<String>, timeout: Duration) -> Self {
        ExternalSolver { cmd: cmd.into(), timeout }
    }

    /// Timeout from `ORACLE_TIMEOUT_SECS`, 60 s when unset or unparsable.
    pub fn from_env(cmd: impl Into<String>) -> Self {
        let secs = std::env::var(TIMEOUT_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .unwrap_or(DEFAULT_TIMEOUT_SECS);
        ExternalSolver::new(cmd, Duration::from_secs(secs))
    }

    /// `Ok(None)` on a `FAIL` answer. Returned vectors are normalized and
    /// verified exactly.
    pub fn solve(&self, q: &SymMatrix) -> Result<Option<RatVec>, OracleError> {
        let out = self.run(&encode_request(q))?;
        let Some(y) = parse_response(&out, q.nrows())? else {
            return Ok(None);
        };
        verify_isotropic(q, &y)?;
        Ok(Some(normalize(&y)))
    }

    fn run(&self, input: &str) -> Result<String, OracleError> {
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(&self.cmd)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| OracleError::Spawn(e.to_string()))?;
        let mut stdin = child.stdin.take().expect("piped");
        let input = input.to_owned();
        // a solver that exits without reading stdin gives a broken pipe
        let writer = thread::spawn(move || {
            let _ = stdin.write_all(input.as_bytes());
        });
        let mut stdout = child.stdout.take().expect("piped");
        let mut stderr = child.stderr.take().expect("piped");
        let out_reader = thread::spawn(move || {
            let mut s = String::new();
            let _ = stdout.read_to_string(&mut s);
            s
        });
        let err_reader = thread::spawn(move || {
            let mut s = String::new();
            let _ = stderr.read_to_string(&mut s);
            s
        });
        let start = Instant::now();
        let status = loop {
            match child.try_wait() {
                Ok(Some(st)) => break st,
                Ok(None) if start.elapsed() >= self.timeout => {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Err(OracleError::Timeout { secs: self.timeout.as_secs() });
                }
                Ok(None) => thread::sleep(Duration::from_millis(5)),
                Err(e) => return Err(OracleError::Spawn(e.to_string())),
            }
        };
        let _ = writer.join();
        let out = out_reader.join().unwrap_or_default();
        let err = err_reader.join().unwrap_or_default();
        if !status.success() {
            return Err(OracleError::External { code: status.code(), stderr: err.trim().to_owned() });
        }
        Ok(out)
    }
}

pub fn encode_request(q: &SymMatrix) -> String {
    let n = q.nrows();
    let mut s = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = q.row(i).iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// `None` for `FAIL`.
pub fn parse_response(out: &str, n: usize) -> Result<Option<RatVec>, OracleError> {
    let line = out.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if line == "FAIL" {
        return Ok(None);
    }
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != n {
        return Err(OracleError::Malformed(format!("expected {n} entries, got {}", toks.len())));
    }
    toks.iter()
        .map(|t| t.parse::<Rat>().map_err(|_| OracleError::Malformed(format!("not a rational: {t:?}"))))
        .collect::<Result<RatVec, _>>()
        .map(Some)
}
