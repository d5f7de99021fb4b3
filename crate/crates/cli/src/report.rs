use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Outcome of a verification suite. Wall time is reported on stderr only so
/// that the JSON stays byte-identical for a fixed seed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str, seed: u64, trials: usize) -> Self {
        Self { suite: suite.to_owned(), seed, trials, checks: Vec::new(), pass: true }
    }

    pub fn push(&mut self, name: &str, residual: f64, tolerance: f64) {
        // NaN residuals fail
        let pass = residual <= tolerance;
        self.pass &= pass;
        self.checks.push(Check { name: name.to_owned(), residual, tolerance, pass });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(5);
        let mut out = format!(
            "suite {} (seed {}, trials {})\n{:<width$}  {:>12}  {:>9}  result\n",
            self.suite, self.seed, self.trials, "check", "residual", "tolerance"
        );
        for c in &self.checks {
            out.push_str(&format!(
                "{:<width$}  {:>12.3e}  {:>9.0e}  {}\n",
                c.name,
                c.residual,
                c.tolerance,
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(if self.pass { "all checks passed\n" } else { "some checks FAILED\n" });
        out
    }
}
