//! Hull-volume spectra over all free polyominoes of one size.

use serde::Serialize;

use super::{EnumerationTask, Mode};
use crate::error::{Error, Result};
use crate::hull::hull_volume;
use crate::lattice::Polyomino;
use crate::rational::{fmt_exact, Rational};

/// One attained value with its multiplicity and first witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub volume: Rational,
    /// Number of free polyominoes with this hull volume.
    pub count: u64,
    pub witness: Polyomino,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    n: usize,
    d: usize,
    mode: Mode,
    entries: Vec<SpectrumEntry>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    area_num: i64,
    area_den: i64,
    count: u64,
    witness_cells: &'a str,
}

#[derive(Serialize)]
struct JsonEntry {
    volume: String,
    count: u64,
    witness: Vec<Vec<i32>>,
}

#[derive(Serialize)]
struct JsonReport {
    n: usize,
    d: usize,
    mode: String,
    total: u64,
    entries: Vec<JsonEntry>,
}

/// `x,y;x,y;...`
fn compact_cells(p: &Polyomino) -> String {
    p.cells()
        .iter()
        .map(|c| {
            c.coords()
                .iter()
                .map(i32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

impl SpectrumReport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Entries by increasing volume.
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn values(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.volume).collect()
    }

    /// Number of polyominoes seen.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.count).sum()
    }

    /// Rechecks every witness.
    pub fn validate(&self) -> Result<()> {
        for e in &self.entries {
            if e.count == 0 || e.witness.size() != self.n || hull_volume(&e.witness)? != e.volume {
                return Err(Error::Postcondition(format!(
                    "bad spectrum entry {}",
                    fmt_exact(&e.volume)
                )));
            }
        }
        Ok(())
    }

    /// Columns `area_num, area_den, count, witness_cells`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for e in &self.entries {
            let cells = compact_cells(&e.witness);
            w.serialize(CsvRow {
                area_num: *e.volume.numer(),
                area_den: *e.volume.denom(),
                count: e.count,
                witness_cells: &cells,
            })
            .map_err(|err| Error::Argument(err.to_string()))?;
        }
        let bytes = w
            .into_inner()
            .map_err(|err| Error::Argument(err.to_string()))?;
        Ok(String::from_utf8(bytes).expect("ascii"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let report = JsonReport {
            n: self.n,
            d: self.d,
            mode: self.mode.to_string(),
            total: self.total(),
            entries: self
                .entries
                .iter()
                .map(|e| JsonEntry {
                    volume: fmt_exact(&e.volume),
                    count: e.count,
                    witness: e.witness.cells().iter().map(|c| c.coords().to_vec()).collect(),
                })
                .collect(),
        };
        serde_json::to_value(report).expect("serializable")
    }
}

fn merge(into: &mut Vec<SpectrumEntry>, part: Vec<SpectrumEntry>) {
    for e in part {
        match into.binary_search_by(|x| x.volume.cmp(&e.volume)) {
            Ok(i) => into[i].count += e.count,
            Err(i) => into.insert(i, e),
        }
    }
}

/// Hull volumes of every free polyomino with `n` cells in dimension `d`.
pub fn volume_spectrum(n: usize, d: usize, workers: usize) -> Result<SpectrumReport> {
    Ok(spectrum_of(&EnumerationTask::new(n, d, Mode::Free)?.with_workers(workers)))
}

/// Spectrum over whatever `task` enumerates; fixed mode counts translates
/// of distinct orientations separately.
pub fn spectrum_of(task: &EnumerationTask) -> SpectrumReport {
    let parts = task.fold(Vec::new, |acc: &mut Vec<SpectrumEntry>, p| {
        let v = hull_volume(&p).expect("supported dimension");
        match acc.binary_search_by(|x| x.volume.cmp(&v)) {
            Ok(i) => acc[i].count += 1,
            Err(i) => acc.insert(
                i,
                SpectrumEntry {
                    volume: v,
                    count: 1,
                    witness: p,
                },
            ),
        }
    });
    // earlier units win the witness slot
    let mut entries = Vec::new();
    for part in parts {
        merge(&mut entries, part);
    }
    SpectrumReport {
        n: task.n(),
        d: task.d(),
        mode: task.mode(),
        entries,
    }
}

/// Planar hull areas of every free n-omino.
pub fn area_spectrum(n: usize, workers: usize) -> Result<SpectrumReport> {
    volume_spectrum(n, 2, workers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn small_spectra() {
        assert_eq!(area_spectrum(1, 1).unwrap().values(), [int(1)]);
        assert_eq!(area_spectrum(3, 1).unwrap().values(), [int(3), frac(7, 2)]);
        let four = area_spectrum(4, 1).unwrap();
        assert_eq!(four.values(), [int(4), int(5)]);
        assert_eq!(four.total(), 5);
        four.validate().unwrap();
    }

    #[test]
    fn fixed_mode_counts_orientations() {
        let task = EnumerationTask::new(3, 2, Mode::Fixed).unwrap();
        let r = spectrum_of(&task);
        assert_eq!(r.mode(), Mode::Fixed);
        let counts: Vec<u64> = r.entries().iter().map(|e| e.count).collect();
        assert_eq!(counts, [2, 4]);
        assert_eq!(r.to_json()["mode"], "fixed");
    }

    #[test]
    fn csv_and_json() {
        let r = area_spectrum(3, 1).unwrap();
        let csv = r.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("area_num,area_den,count,witness_cells"));
        assert_eq!(lines.next(), Some("3,1,1,\"0,0;0,1;0,2\""));
        assert_eq!(lines.next(), Some("7,2,1,\"0,0;0,1;1,0\""));
        let j = r.to_json();
        assert_eq!(j["entries"][1]["volume"], "7/2");
        assert_eq!(j["total"], 2);
    }

    #[test]
    fn parallel_report_is_identical() {
        assert_eq!(area_spectrum(8, 1).unwrap(), area_spectrum(8, 4).unwrap());
    }
}
