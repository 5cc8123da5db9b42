use serde::Serialize;
use serde_json::Value;
use workbench_core::report::CheckRecord;

pub const SCHEMA_ID: &str = "workbench-report/1";

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: Value,
    pub result: Value,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub status: &'static str,
}

impl ReportDoc {
    pub fn new(command: String, config: Value, result: Value, mut checks: Vec<CheckRecord>, timings: bool) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        if !timings {
            for c in &mut checks {
                c.timing_ms = 0;
            }
        }
        let passed = checks.iter().filter(|c| c.passed()).count();
        let summary = Summary { total: checks.len(), passed, failed: checks.len() - passed };
        let status = if summary.failed == 0 { "pass" } else { "fail" };
        ReportDoc {
            schema: SCHEMA_ID,
            tool: "workbench",
            version: env!("CARGO_PKG_VERSION"),
            command,
            config,
            result,
            checks,
            summary,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}
