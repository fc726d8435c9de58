use crate::Format;
use gcdmat::{FunctionTable, IntMatrix};

/// Render a function table. CSV is one value per line, so the output can be
/// fed back in through `--g custom:PATH`.
pub fn table_text(table: &FunctionTable, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for v in table.values() {
                out.push_str(&v.to_string());
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let dto = serde_json::json!({
                "g": table.name(),
                "n": table.len(),
                "values": table.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            format!("{dto}\n")
        }
        Format::Latex => {
            let row: Vec<String> = table.values().iter().map(|v| v.to_string()).collect();
            format!("{} \\\\\n", row.join(" & "))
        }
    }
}

/// Render a matrix. CSV is row-major base-10 with no header; LaTeX is a bare
/// tabular body with no preamble.
pub fn matrix_text(matrix: &IntMatrix, format: Format) -> String {
    match format {
        Format::Csv => matrix.to_csv(),
        Format::Json => {
            let rows: Vec<Vec<String>> = matrix
                .rows()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect();
            let dto = serde_json::json!({
                "n_rows": matrix.n_rows(),
                "n_cols": matrix.n_cols(),
                "rows": rows,
            });
            format!("{dto}\n")
        }
        Format::Latex => {
            let mut out = String::new();
            for row in matrix.rows() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&cells.join(" & "));
                out.push_str(" \\\\\n");
            }
            out
        }
    }
}
