use clap::ValueEnum;
use serde_json::Value;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Everything a command produced, ready to render in any format.
pub struct Outcome {
    pub pass: bool,
    /// Always printed in plain mode.
    pub summary: Vec<String>,
    /// Printed in plain mode with `-v`.
    pub detail: Vec<String>,
    pub json: Value,
    /// Header row first.
    pub csv: Vec<Vec<String>>,
}

impl Outcome {
    pub fn render(&self, format: Format, verbose: u8) -> Result<String, String> {
        match format {
            Format::Plain => {
                let mut out = String::new();
                for line in &self.summary {
                    out.push_str(line);
                    out.push('\n');
                }
                if verbose > 0 {
                    for line in &self.detail {
                        out.push_str(line);
                        out.push('\n');
                    }
                }
                Ok(out)
            }
            Format::Json => serde_json::to_string_pretty(&self.json)
                .map(|s| s + "\n")
                .map_err(|e| e.to_string()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

pub fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}
