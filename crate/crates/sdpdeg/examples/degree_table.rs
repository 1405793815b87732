//! Tabulate delta over every valid (m, r) pair for one matrix size.
//!
//!     cargo run --example degree_table

use sdpdeg::report::{render_table, OutputFormat, TableReport, TableRow};
use sdpdeg::{rank_rows, Specialization};

fn main() -> Result<(), sdpdeg::Error> {
    let n = 6;
    let spec = Specialization::sequential(n);
    let mut rows = Vec::new();
    for r in 1..=n {
        // one batched pass per rank shares the per-subset work across all m
        for (triple, value) in rank_rows(n, r, &spec)? {
            rows.push(TableRow::new(&triple, &value));
        }
    }
    print!(
        "{}",
        render_table(&TableReport { n, rows }, OutputFormat::Text)
    );
    Ok(())
}
