//! The worked-example corpus: TOML files of CLI invocations with expected
//! JSON output.
//!
//! ```toml
//! [[case]]
//! id = "x4p4-factor"
//! kind = "reference"
//! description = "x^4 + 4 splits into two quadratics"
//! args = ["factor", "x^4+4"]
//! exit = 0
//!
//! [case.expect]
//! count = 2
//! ```
//!
//! `expect` is matched as a subset of the JSON the command prints: object
//! keys are compared recursively, arrays must have equal length and match
//! element by element. For a nonzero `exit` the error object is matched.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::{render, Output, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    /// Values printed in the source text.
    Reference,
    /// Values computed independently.
    Derived,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub id: String,
    pub kind: CaseKind,
    pub description: String,
    pub args: Vec<String>,
    #[serde(default)]
    pub exit: i32,
    #[serde(default)]
    pub expect: Option<toml::Value>,
}

#[derive(Debug, Deserialize)]
struct CorpusFile {
    #[serde(default)]
    case: Vec<Case>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub file: String,
    pub kind: CaseKind,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diff: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub results: Vec<CaseResult>,
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Loads every `*.toml` file in `dir`, in file-name order.
pub fn load(dir: &Path) -> Result<Vec<(String, Case)>, String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    files.sort();
    let mut cases = Vec::new();
    for path in files {
        let text =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let parsed: CorpusFile =
            toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        cases.extend(parsed.case.into_iter().map(|c| (name.clone(), c)));
    }
    let mut ids: Vec<&str> = cases.iter().map(|(_, c)| c.id.as_str()).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(format!("duplicate case id {:?}", w[0]));
    }
    Ok(cases)
}

/// Recursive subset comparison; mismatches are appended to `diff`.
pub fn matches(expected: &Value, actual: &Value, path: &str, diff: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let p = format!("{path}.{k}");
                match a.get(k) {
                    Some(av) => matches(ev, av, &p, diff),
                    None => diff.push(format!("{p}: missing, expected {ev}")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                diff.push(format!(
                    "{path}: length {} != expected {}",
                    a.len(),
                    e.len()
                ));
                return;
            }
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                matches(ev, av, &format!("{path}[{i}]"), diff);
            }
        }
        (Value::Number(e), Value::Number(a)) => {
            let same = match (e.as_i64(), a.as_i64()) {
                (Some(x), Some(y)) => x == y,
                _ => e == a || e.as_f64() == a.as_f64(),
            };
            if !same {
                diff.push(format!("{path}: {a} != expected {e}"));
            }
        }
        (e, a) if e == a => {}
        (e, a) => diff.push(format!("{path}: {a} != expected {e}")),
    }
}

pub fn run_case(file: &str, case: &Case) -> CaseResult {
    let mut argv = vec!["purepoly".to_string(), "--json".to_string()];
    argv.extend(case.args.iter().cloned());
    let out: Output = crate::run(argv);
    let mut diff = Vec::new();
    if out.code != case.exit {
        diff.push(format!("exit code {} != expected {}", out.code, case.exit));
        let stream = if out.code == EXIT_OK {
            &out.stdout
        } else {
            &out.stderr
        };
        if let Some(line) = stream.lines().next() {
            diff.push(format!("output: {line}"));
        }
    } else if let Some(expect) = &case.expect {
        let stream = if out.code == EXIT_OK {
            &out.stdout
        } else {
            &out.stderr
        };
        let expected = serde_json::to_value(expect).expect("toml values map to json");
        match serde_json::from_str::<Value>(stream) {
            Ok(actual) => matches(&expected, &actual, "$", &mut diff),
            Err(e) => diff.push(format!("output is not JSON ({e}): {stream}")),
        }
    }
    CaseResult {
        id: case.id.clone(),
        file: file.to_string(),
        kind: case.kind,
        passed: diff.is_empty(),
        diff,
    }
}

/// Runs all cases whose id contains `filter`, in parallel.
pub fn run_all(cases: &[(String, Case)], filter: Option<&str>) -> Summary {
    let mut results: Vec<CaseResult> = cases
        .par_iter()
        .filter(|(_, c)| filter.is_none_or(|f| c.id.contains(f)))
        .map(|(file, c)| run_case(file, c))
        .collect();
    results.sort_by(|a, b| (&a.file, &a.id).cmp(&(&b.file, &b.id)));
    let passed = results.iter().filter(|r| r.passed).count();
    Summary {
        total: results.len(),
        passed,
        failed: results.len() - passed,
        results,
    }
}

pub fn run_command(filter: Option<&str>, dir: Option<&str>, json_out: bool) -> Output {
    let dir = dir.map(PathBuf::from).unwrap_or_else(default_dir);
    let cases = match load(&dir) {
        Ok(c) => c,
        Err(message) => {
            let stderr = if json_out {
                format!("{}\n", json!({ "error": "corpus", "message": message }))
            } else {
                format!("error: {message}\n")
            };
            return Output {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr,
            };
        }
    };
    let summary = run_all(&cases, filter);
    let code = if summary.failed == 0 {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    };
    let stdout = if json_out {
        render::render(&serde_json::to_value(&summary).expect("serializable"), true)
    } else {
        let mut s = String::new();
        for r in &summary.results {
            let mark = if r.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "{mark} {} ({})", r.id, r.file);
            for d in &r.diff {
                let _ = writeln!(s, "       {d}");
            }
        }
        let _ = writeln!(
            s,
            "{} cases, {} passed, {} failed",
            summary.total, summary.passed, summary.failed
        );
        s
    };
    Output {
        code,
        stdout,
        stderr: String::new(),
    }
}
