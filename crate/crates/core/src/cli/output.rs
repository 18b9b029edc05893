use std::fmt::Write;

use crate::exactnum::Scalar;
use crate::liecore::LieSeries;

/// Left-aligned columns with a two-space indent.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::from(" ");
        for (cell, w) in cells.zip(&widths) {
            let _ = write!(s, " {cell:<w$}");
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut headers.iter().copied());
    for r in rows {
        line(&mut r.iter().map(String::as_str));
    }
    out
}

/// A titled table of `(basis, monomial, coeff)` rows, sorted by basis degree
/// and then monomial.
pub fn series_block<S: Scalar>(title: &str, s: &LieSeries<S>) -> String {
    let rows: Vec<Vec<String>> = s.rows().into_iter().map(Vec::from).collect();
    let noun = if rows.len() == 1 { "term" } else { "terms" };
    let mut out = format!("{title} ({} {noun})\n", rows.len());
    if rows.is_empty() {
        out.push_str("  0\n");
    } else {
        out.push_str(&table(&["basis", "monomial", "coeff"], &rows));
    }
    out
}
