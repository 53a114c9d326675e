//! Curve tables and their CSV form.
//!
//! CSV contract: header row, comma separators, `.` decimal point, floats at
//! 17 significant digits (so re-reading reproduces the table bit-exactly),
//! and an empty cell wherever a value is missing or outside its validity
//! window. Non-finite values are never emitted.

use crate::CliError;

/// A named column of optional values; `None` renders as an empty CSV cell.
#[derive(Clone, Debug, PartialEq)]
pub struct Column {
    pub name: String,
    pub cells: Vec<Option<f64>>,
}

/// Sampled curves over a strictly increasing abscissa.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveTable {
    pub abscissa_name: String,
    pub abscissa: Vec<f64>,
    pub columns: Vec<Column>,
}

/// 17 significant digits; enough to round-trip any f64 exactly.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

impl CurveTable {
    pub fn new(abscissa_name: impl Into<String>, abscissa: Vec<f64>) -> Self {
        assert!(
            abscissa.windows(2).all(|w| w[0] < w[1]),
            "abscissa must be strictly increasing"
        );
        CurveTable {
            abscissa_name: abscissa_name.into(),
            abscissa,
            columns: Vec::new(),
        }
    }

    /// Adds a column, mapping non-finite entries to empty cells.
    pub fn push_column(&mut self, name: impl Into<String>, cells: Vec<Option<f64>>) {
        assert_eq!(
            cells.len(),
            self.abscissa.len(),
            "column length must match the abscissa"
        );
        let cells = cells
            .into_iter()
            .map(|c| c.filter(|v| v.is_finite()))
            .collect();
        self.columns.push(Column {
            name: name.into(),
            cells,
        });
    }

    pub fn rows(&self) -> usize {
        self.abscissa.len()
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.abscissa_name);
        for c in &self.columns {
            out.push(',');
            out.push_str(&c.name);
        }
        out.push('\n');
        for (i, x) in self.abscissa.iter().enumerate() {
            out.push_str(&format_float(*x));
            for c in &self.columns {
                out.push(',');
                if let Some(v) = c.cells[i] {
                    out.push_str(&format_float(v));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, CliError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| CliError::Usage("empty CSV".into()))?;
        let names: Vec<&str> = header.split(',').collect();
        if names.is_empty() {
            return Err(CliError::Usage("CSV header has no columns".into()));
        }
        let mut abscissa = Vec::new();
        let mut columns: Vec<Column> = names[1..]
            .iter()
            .map(|n| Column {
                name: (*n).to_string(),
                cells: Vec::new(),
            })
            .collect();
        for (lineno, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != names.len() {
                return Err(CliError::Usage(format!(
                    "CSV row {} has {} fields, expected {}",
                    lineno + 2,
                    fields.len(),
                    names.len()
                )));
            }
            let x: f64 = fields[0]
                .parse()
                .map_err(|e| CliError::Usage(format!("bad abscissa on row {}: {e}", lineno + 2)))?;
            abscissa.push(x);
            for (c, field) in columns.iter_mut().zip(&fields[1..]) {
                if field.is_empty() {
                    c.cells.push(None);
                } else {
                    let v: f64 = field.parse().map_err(|e| {
                        CliError::Usage(format!("bad value on row {}: {e}", lineno + 2))
                    })?;
                    c.cells.push(Some(v));
                }
            }
        }
        Ok(CurveTable {
            abscissa_name: names[0].to_string(),
            abscissa,
            columns,
        })
    }

    pub fn write_csv(&self, path: &std::path::Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_csv())?;
        Ok(())
    }
}
