use serde::Serialize;

/// Version stamped into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of a lemma check or of the polynomial identity suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub schema_version: u32,
    pub lemma: String,
    /// Human-readable description of the parameter grid.
    pub grid: String,
    pub instances: usize,
    /// One line per failed instance; empty when the lemma holds on the grid.
    pub violations: Vec<String>,
    /// Largest deviation observed where the lemma asserts an equality (or,
    /// for bounds that are attained, between the bound and the best graph).
    pub max_equality_gap: f64,
    /// Smallest margin observed where the lemma asserts a strict inequality.
    pub min_strict_margin: Option<f64>,
}

impl LemmaReport {
    pub(crate) fn new(lemma: &str, grid: String) -> Self {
        LemmaReport {
            schema_version: SCHEMA_VERSION,
            lemma: lemma.to_string(),
            grid,
            instances: 0,
            violations: Vec::new(),
            max_equality_gap: 0.0,
            min_strict_margin: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn equality(&mut self, gap: f64) {
        self.max_equality_gap = self.max_equality_gap.max(gap.abs());
    }

    pub(crate) fn strict(&mut self, margin: f64) {
        self.min_strict_margin = Some(self.min_strict_margin.map_or(margin, |m| m.min(margin)));
    }

    pub(crate) fn fail(&mut self, msg: String) {
        self.violations.push(msg);
    }

    pub fn csv_header() -> &'static str {
        "lemma,instances,violations,max_equality_gap,min_strict_margin"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:e},{}",
            self.lemma,
            self.instances,
            self.violations.len(),
            self.max_equality_gap,
            self.min_strict_margin.map(|m| format!("{m:e}")).unwrap_or_default()
        )
    }
}
