//! CSV/JSON emitters and the tabulated-curve reader.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use minkcurves::{CurveSpec, FrenetSample, InvariantReport, Vec3M};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Opens `path` for writing, `-` meaning stdout.
pub fn sink(path: &Path) -> Result<Box<dyn Write>, CliError> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        let f = File::create(path).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", path.display())))?;
        Ok(Box::new(BufWriter::new(f)))
    }
}

fn source(path: &Path) -> Result<Box<dyn Read>, CliError> {
    if path.as_os_str() == "-" {
        Ok(Box::new(io::stdin().lock()))
    } else {
        let f = File::open(path).map_err(|e| CliError::Input(format!("cannot open {}: {e}", path.display())))?;
        Ok(Box::new(f))
    }
}

/// 17 significant digits: round-trips exactly at double precision.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_writer(out: Box<dyn Write>) -> csv::Writer<Box<dyn Write>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

#[derive(Debug, Serialize, Deserialize)]
struct PointRow {
    t: f64,
    x1: f64,
    x2: f64,
    x3: f64,
}

pub fn write_points(out: Box<dyn Write>, json: bool, rows: &[(f64, Vec3M)]) -> Result<(), CliError> {
    if json {
        let rows: Vec<PointRow> = rows.iter().map(|(t, x)| PointRow { t: *t, x1: x.x1(), x2: x.x2(), x3: x.x3() }).collect();
        return write_json(out, &rows);
    }
    let mut w = csv_writer(out);
    w.write_record(["t", "x1", "x2", "x3"])?;
    for (t, x) in rows {
        w.write_record([num(*t), num(x.x1()), num(x.x2()), num(x.x3())])?;
    }
    w.flush()?;
    Ok(())
}

pub const FRENET_HEADER: [&str; 14] =
    ["t", "s", "speed", "kappa", "tau", "T1", "T2", "T3", "N1", "N2", "N3", "B1", "B2", "B3"];

pub fn write_frenet(out: Box<dyn Write>, json: bool, rows: &[FrenetSample]) -> Result<(), CliError> {
    if json {
        return write_json(out, &rows);
    }
    let mut w = csv_writer(out);
    w.write_record(FRENET_HEADER)?;
    for r in rows {
        let f = r.frame;
        let mut rec = vec![num(r.t), num(r.arclength), num(r.speed), num(r.kappa), num(r.tau)];
        for v in [f.tangent, f.normal, f.binormal] {
            rec.extend(v.to_array().map(num));
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// JSON summary row of a report.
#[derive(Debug, Serialize)]
pub struct ReportRow<'a> {
    pub name: &'a str,
    pub grid_size: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

pub fn write_reports(mut out: Box<dyn Write>, json: bool, reports: &[InvariantReport]) -> Result<(), CliError> {
    if json {
        let rows: Vec<ReportRow> = reports
            .iter()
            .map(|r| ReportRow {
                name: &r.name,
                grid_size: r.grid.len(),
                max_residual: r.max_residual,
                tolerance: r.tolerance,
                passed: r.passed,
                value: r.value,
            })
            .collect();
        return write_json(out, &rows);
    }
    for r in reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        write!(out, "{verdict} {}: max residual {:e} (tolerance {:e})", r.name, r.max_residual, r.tolerance)?;
        if let Some(v) = r.value {
            write!(out, ", value {v}")?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

fn write_json<T: Serialize + ?Sized>(mut out: Box<dyn Write>, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

/// Reads `t,x1,x2,x3` rows into a tabulated curve.
pub fn read_tabulated(path: &Path) -> Result<CurveSpec, CliError> {
    let mut r = csv::Reader::from_reader(source(path)?);
    let mut samples = Vec::new();
    for row in r.deserialize() {
        let row: PointRow = row?;
        samples.push((row.t, Vec3M::try_new(row.x1, row.x2, row.x3)?));
    }
    Ok(CurveSpec::tabulated(samples)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn num_round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn reads_points_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let mut body = String::from("t,x1,x2,x3\n");
        for i in 0..6 {
            let t = f64::from(i) * 0.1;
            body.push_str(&format!("{t},{},{},0\n", 2.0 * t, t));
        }
        std::fs::write(&path, body).unwrap();
        let c = read_tabulated(&path).unwrap();
        assert!((c.position(0.25).unwrap() - Vec3M::new(0.5, 0.25, 0.0)).max_abs() < 1e-12);
        std::fs::write(&path, "t,x1,x2\n0,1,2\n").unwrap();
        assert!(matches!(read_tabulated(&path), Err(CliError::Input(_))));
    }
}
