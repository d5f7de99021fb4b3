//! Verification suites and calculators behind the `hyperpauli` binary.

pub mod commands;
pub mod identities;
pub mod report;

/// Exit code for a run whose checks all passed.
pub const EXIT_PASS: i32 = 0;
/// Exit code when at least one check failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for invalid arguments.
pub const EXIT_USAGE: i32 = 2;

pub fn parse_floats(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(|| format!("'{t}' is not a finite number"))
        })
        .collect()
}

pub fn parse_four(s: &str) -> Result<[f64; 4], String> {
    let v = parse_floats(s)?;
    v.try_into().map_err(|v: Vec<f64>| format!("expected 4 comma-separated values, got {}", v.len()))
}

pub fn parse_three(s: &str) -> Result<[f64; 3], String> {
    let v = parse_floats(s)?;
    v.try_into().map_err(|v: Vec<f64>| format!("expected 3 comma-separated values, got {}", v.len()))
}

/// `"64x64"` or `"8x8x8x8"`.
pub fn parse_grid(s: &str) -> Result<Vec<usize>, String> {
    s.split(['x', 'X']).map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad grid size '{t}'"))).collect()
}
