use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::{SearchError, SearchRecord};

/// JSON Lines, one record per line.
pub fn write_records_to<W: Write>(records: &[SearchRecord], mut w: W) -> Result<(), SearchError> {
    for r in records {
        serde_json::to_writer(&mut w, r).map_err(std::io::Error::from)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_records(records: &[SearchRecord], path: impl AsRef<Path>) -> Result<(), SearchError> {
    write_records_to(records, BufWriter::new(File::create(path)?))
}

/// Blank lines are skipped; any other line must hold a whole record.
pub fn read_records_from<R: Read>(r: R) -> Result<Vec<SearchRecord>, SearchError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(r).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|e| SearchError::MalformedRecord {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(record);
    }
    Ok(out)
}

pub fn read_records(path: impl AsRef<Path>) -> Result<Vec<SearchRecord>, SearchError> {
    read_records_from(File::open(path)?)
}

/// Flat CSV with the phase split into `phase_re` and `phase_im`.
pub fn write_records_csv<W: Write>(records: &[SearchRecord], w: W) -> Result<(), SearchError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record([
        "graph6",
        "n",
        "model",
        "source",
        "target",
        "t0",
        "phase_re",
        "phase_im",
        "D",
        "M",
        "l",
        "integral_spectrum",
        "bipartite",
        "regular",
        "max_degree",
    ])?;
    for r in records {
        out.write_record([
            r.graph6.clone(),
            r.n.to_string(),
            r.model.to_string(),
            r.source.to_string(),
            r.target.to_string(),
            r.t0.to_string(),
            r.transfer_phase.re.to_string(),
            r.transfer_phase.im.to_string(),
            r.distance.to_string(),
            r.supported.to_string(),
            r.zeros.to_string(),
            r.integral_spectrum.to_string(),
            r.bipartite.to_string(),
            r.regular.to_string(),
            r.max_degree.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
