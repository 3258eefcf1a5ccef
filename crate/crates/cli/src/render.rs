use crate::Format;

pub struct Table {
    pub title: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// Renders a table as CSV, a JSON array of objects, or aligned markdown.
/// Output is a pure function of the table, so repeated runs are
/// byte-identical.
pub fn render_table(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => render_csv(table),
        Format::Json => render_json(table),
        Format::Md => render_md(table),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(
        &table
            .columns
            .iter()
            .map(|c| csv_field(c))
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    for row in &table.rows {
        out.push_str(
            &row.iter()
                .map(|f| csv_field(f))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    out
}

fn render_json(table: &Table) -> String {
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: serde_json::Map<String, serde_json::Value> = table
                .columns
                .iter()
                .zip(row)
                .map(|(c, f)| {
                    let value = f
                        .parse::<i64>()
                        .map(serde_json::Value::from)
                        .unwrap_or_else(|_| serde_json::Value::from(f.as_str()));
                    (c.to_string(), value)
                })
                .collect();
            serde_json::Value::Object(obj)
        })
        .collect();
    let doc = serde_json::json!({ "table": table.title, "rows": rows });
    let mut s = serde_json::to_string_pretty(&doc).expect("tables serialize");
    s.push('\n');
    s
}

fn render_md(table: &Table) -> String {
    let mut widths: Vec<usize> = table.columns.iter().map(|c| c.len()).collect();
    for row in &table.rows {
        for (i, f) in row.iter().enumerate() {
            widths[i] = widths[i].max(f.len());
        }
    }
    let fmt_row = |cells: Vec<&str>| {
        let mut line = String::from("|");
        for (i, c) in cells.iter().enumerate() {
            line.push_str(&format!(" {:<width$} |", c, width = widths[i]));
        }
        line.push('\n');
        line
    };
    let mut out = format!("# {}\n", table.title);
    out.push_str(&fmt_row(table.columns.to_vec()));
    let mut sep = String::from("|");
    for w in &widths {
        sep.push_str(&format!("{:-<width$}|", "", width = w + 2));
    }
    sep.push('\n');
    out.push_str(&sep);
    for row in &table.rows {
        out.push_str(&fmt_row(row.iter().map(String::as_str).collect()));
    }
    out
}
