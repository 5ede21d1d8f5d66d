//! The JSON envelope around every report.

use std::time::Instant;

use serde::Serialize;

use crate::Global;

#[derive(Debug, Serialize)]
pub struct ReportEnvelope<'a, C: Serialize, R: Serialize, V: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub global: &'a Global,
    pub config: &'a C,
    pub result: R,
    /// Milliseconds; `null` unless `--timing` is given.
    pub timing_ms: Option<u128>,
    pub verdicts: V,
}

impl<'a, C: Serialize, R: Serialize, V: Serialize> ReportEnvelope<'a, C, R, V> {
    pub fn new(
        command: &'static str,
        global: &'a Global,
        config: &'a C,
        result: R,
        verdicts: V,
        started: Instant,
    ) -> Self {
        ReportEnvelope {
            tool: "gspkit",
            version: env!("CARGO_PKG_VERSION"),
            command,
            global,
            config,
            result,
            timing_ms: global.timing.then(|| started.elapsed().as_millis()),
            verdicts,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Elements of a mask as 1-based labels, e.g. `{1,3,4}`.
pub fn set_label(mask: u64) -> String {
    gspkit::bits::display(mask)
}
