use std::fmt::Write as _;

use crate::error::CliError;

/// Output encoding selected by the global `--format` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Md,
    Csv,
    Json,
}

fn csv_string(records: &[[&str; 2]]) -> Result<String, CliError> {
    let mut w =
        csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    for r in records {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

/// Two-column rows under `header`. Text is space-aligned.
pub fn render_rows(
    header: &[&str; 2],
    rows: &[(String, String)],
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Csv => {
            let mut records = vec![*header];
            records.extend(rows.iter().map(|(a, b)| [a.as_str(), b.as_str()]));
            csv_string(&records)
        }
        Format::Md => {
            let mut s = format!("| {} | {} |\n|---|---|\n", header[0], header[1]);
            for (a, b) in rows {
                writeln!(s, "| {a} | {b} |").unwrap();
            }
            Ok(s)
        }
        Format::Text | Format::Json => {
            let width =
                rows.iter().map(|(a, _)| a.len()).chain([header[0].len()]).max().unwrap_or(0);
            let mut s = format!("{:<width$}  {}\n", header[0], header[1]);
            for (a, b) in rows {
                writeln!(s, "{a:<width$}  {b}").unwrap();
            }
            Ok(s)
        }
    }
}

/// Key/value report: `key: value` lines in text, a two-column table otherwise.
pub fn render_pairs(pairs: &[(String, String)], format: Format) -> Result<String, CliError> {
    match format {
        Format::Text | Format::Json => {
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0) + 1;
            let mut s = String::new();
            for (k, v) in pairs {
                writeln!(s, "{:<width$} {v}", format!("{k}:")).unwrap();
            }
            Ok(s)
        }
        _ => render_rows(&["field", "value"], pairs, format),
    }
}
