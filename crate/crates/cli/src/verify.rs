//! The `verify` suites. Each check records expected against actual; a
//! guard violation aborts the suite before any enumeration starts.

use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use polyhull::constructions::{construct, extremal_max};
use polyhull::enumeration::{
    classify_extremal_shape, contains_forbidden_pattern, count_extremal_via_shapes,
    extremal_polyominoes, size_guard, volume_spectrum,
};
use polyhull::formulas::{
    attainable_set_2d, attainable_superset_d, c2_closed, c2_gf_coeffs, max_volume_d,
};
use polyhull::hexgrid::{check_hex_conjecture, HexReport, HEX_GUARD};
use polyhull::hull::hull_volume;
use polyhull::rational::{fmt_exact, Rational};
use polyhull::{Error, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Formulas,
    Spectrum,
    Extremal,
    Ddim,
    Hex,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Formulas,
        Suite::Spectrum,
        Suite::Extremal,
        Suite::Ddim,
        Suite::Hex,
    ];

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Formulas => 64,
            Suite::Spectrum => 10,
            Suite::Extremal => 12,
            Suite::Ddim => 5,
            Suite::Hex => 6,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("named").get_name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub n: usize,
    pub d: usize,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Default)]
pub struct SuiteRun {
    pub checks: Vec<Check>,
    pub hex: Vec<HexReport>,
}

impl SuiteRun {
    fn record(&mut self, suite: Suite, check: &str, n: usize, d: usize, expected: String, actual: String) {
        let pass = expected == actual;
        self.push(suite, check, n, d, expected, actual, pass);
    }

    #[allow(clippy::too_many_arguments)]
    fn push(&mut self, suite: Suite, check: &str, n: usize, d: usize, expected: String, actual: String, pass: bool) {
        self.checks.push(Check {
            suite: suite.to_string(),
            check: check.to_string(),
            n,
            d,
            expected,
            actual,
            pass,
        });
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }
}

fn set_string(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(fmt_exact).collect();
    format!("{{{}}}", parts.join(", "))
}

fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::ResourceLimit { what, value, limit });
    }
    Ok(())
}

pub fn run(suite: Suite, n_max: usize, d_max: usize, workers: usize) -> Result<SuiteRun> {
    if !(2..=4).contains(&d_max) {
        return Err(Error::UnsupportedDimension(d_max));
    }
    let mut run = SuiteRun::default();
    match suite {
        Suite::Formulas => formulas(&mut run, n_max, d_max)?,
        Suite::Spectrum => spectrum(&mut run, n_max, workers)?,
        Suite::Extremal => extremal(&mut run, n_max, workers)?,
        Suite::Ddim => ddim(&mut run, n_max, d_max, workers)?,
        Suite::Hex => hex(&mut run, n_max, workers)?,
        Suite::All => unreachable!("expanded by the caller"),
    }
    Ok(run)
}

fn formulas(run: &mut SuiteRun, n_max: usize, d_max: usize) -> Result<()> {
    let gf = c2_gf_coeffs(n_max)?;
    for n in 1..=n_max {
        let closed = c2_closed(n as u64);
        run.record(Suite::Formulas, "c2 closed vs series", n, 2, gf[n - 1].to_string(), closed.to_string());
    }
    for d in 2..=d_max {
        for n in 1..=n_max {
            let witness = extremal_max(n as u64, d)?;
            run.record(
                Suite::Formulas,
                "max volume attained",
                n,
                d,
                fmt_exact(&max_volume_d(n as u64, d)),
                fmt_exact(&hull_volume(&witness)?),
            );
        }
    }
    for n in 1..=n_max {
        let set = attainable_set_2d(n as u64)?;
        let mut built = Vec::new();
        for m in set.m_values() {
            built.push(construct(n as u64, m)?.area);
        }
        run.record(
            Suite::Formulas,
            "constructions cover attainable areas",
            n,
            2,
            set.values().len().to_string(),
            built.iter().filter(|a| set.contains(a)).count().to_string(),
        );
    }
    Ok(())
}

fn spectrum(run: &mut SuiteRun, n_max: usize, workers: usize) -> Result<()> {
    guard("n_max", n_max, size_guard(2).unwrap_or(0))?;
    for n in 1..=n_max {
        let report = volume_spectrum(n, 2, workers)?;
        report.validate()?;
        let set = attainable_set_2d(n as u64)?;
        run.record(
            Suite::Spectrum,
            "area spectrum",
            n,
            2,
            set_string(set.values()),
            set_string(&report.values()),
        );
    }
    Ok(())
}

fn extremal(run: &mut SuiteRun, n_max: usize, workers: usize) -> Result<()> {
    guard("n_max", n_max, size_guard(2).unwrap_or(0))?;
    for n in 1..=n_max {
        let found = extremal_polyominoes(n, workers)?;
        let closed = c2_closed(n as u64).to_string();
        run.record(Suite::Extremal, "count by enumeration", n, 2, closed.clone(), found.len().to_string());
        run.record(
            Suite::Extremal,
            "count by shapes",
            n,
            2,
            closed,
            count_extremal_via_shapes(n as u64).to_string(),
        );
        let clean = found
            .iter()
            .filter(|p| !contains_forbidden_pattern(p) && classify_extremal_shape(p).is_ok())
            .count();
        run.record(
            Suite::Extremal,
            "shape classification",
            n,
            2,
            found.len().to_string(),
            clean.to_string(),
        );
    }
    Ok(())
}

fn ddim(run: &mut SuiteRun, n_max: usize, d_max: usize, workers: usize) -> Result<()> {
    for d in 3..=d_max {
        guard("n_max", n_max, size_guard(d).unwrap_or(0))?;
    }
    for d in 3..=d_max {
        for n in 1..=n_max {
            let report = volume_spectrum(n, d, workers)?;
            report.validate()?;
            let values = report.values();
            let max = values.last().copied().expect("nonempty");
            run.record(
                Suite::Ddim,
                "maximum hull volume",
                n,
                d,
                fmt_exact(&max_volume_d(n as u64, d)),
                fmt_exact(&max),
            );
            let superset = attainable_superset_d(n as u64, d)?;
            let outside: BTreeSet<String> = values
                .iter()
                .filter(|v| !superset.contains(v))
                .map(fmt_exact)
                .collect();
            run.record(
                Suite::Ddim,
                "volumes on the 1/d! grid",
                n,
                d,
                "{}".to_string(),
                format!("{{{}}}", outside.into_iter().collect::<Vec<_>>().join(", ")),
            );
        }
    }
    Ok(())
}

fn hex(run: &mut SuiteRun, n_max: usize, workers: usize) -> Result<()> {
    guard("n_max", n_max, HEX_GUARD)?;
    for n in 1..=n_max {
        let r = check_hex_conjecture(n, workers)?;
        let mut actual = fmt_exact(&r.max_area);
        if r.equality() {
            actual.push_str(" (equality)");
        } else if !r.holds() {
            actual.push_str(" (COUNTEREXAMPLE)");
        }
        let expected = format!("<= {}", fmt_exact(&r.bound));
        run.push(Suite::Hex, "max hull within bound", n, 2, expected, actual, r.holds());
        run.hex.push(r);
    }
    Ok(())
}

pub fn checks_csv(checks: &[Check]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for c in checks {
        w.serialize(c)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
