//! Suite results and their two renderings.

use std::fmt::Write as _;
use std::time::Duration;

use super::suites::SuiteId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub params: String,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    /// Free-form observations, e.g. counts or conjecture evidence.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    /// Fixed-layout human-readable report.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite      {}", self.suite);
        let _ = writeln!(s, "params     {}", self.params);
        let _ = writeln!(s, "instances  {}", self.instances);
        let _ = writeln!(s, "passed     {}", self.passed);
        let _ = writeln!(s, "failed     {}", self.failures.len());
        let _ = writeln!(s, "elapsed    {:.3}s", self.elapsed.as_secs_f64());
        let _ = writeln!(s, "status     {}", if self.is_success() { "PASS" } else { "FAIL" });
        for f in &self.failures {
            let _ = writeln!(s, "FAIL {} expected={} got={}", f.instance, f.expected, f.got);
        }
        for n in &self.notes {
            let _ = writeln!(s, "note {n}");
        }
        s
    }

    /// Line-oriented `key=value` dump.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite={}", self.suite);
        let _ = writeln!(s, "params={}", self.params);
        let _ = writeln!(s, "instances={}", self.instances);
        let _ = writeln!(s, "passed={}", self.passed);
        let _ = writeln!(s, "failed={}", self.failures.len());
        let _ = writeln!(s, "elapsed_ms={}", self.elapsed.as_millis());
        let _ = writeln!(s, "status={}", if self.is_success() { "pass" } else { "fail" });
        for (i, f) in self.failures.iter().enumerate() {
            let _ = writeln!(s, "failure.{i}.instance={}", f.instance);
            let _ = writeln!(s, "failure.{i}.expected={}", f.expected);
            let _ = writeln!(s, "failure.{i}.got={}", f.got);
        }
        for (i, n) in self.notes.iter().enumerate() {
            let _ = writeln!(s, "note.{i}={n}");
        }
        s
    }
}
