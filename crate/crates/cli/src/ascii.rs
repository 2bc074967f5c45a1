//! Plain-text AR-quiver strips: one row per τ-orbit as in the usual
//! pictures, twist increasing leftward, marked objects as '*'.

use std::collections::BTreeSet;
use std::fmt::Write;

use ctforge_core::diagram::Quiver;

pub fn emit(quiver: &Quiver, window: i64, marked: &BTreeSet<(usize, i64)>) -> String {
    let width = window.saturating_sub(1).to_string().len().max(1);
    let label_width = format!("O_{}", quiver.rank()).len();
    let mut out = String::new();
    write!(out, "{:label_width$}", "tau").unwrap();
    for l in (0..window).rev() {
        write!(out, " {l:>width$}").unwrap();
    }
    out.push('\n');
    for v in 1..=quiver.rank() {
        write!(out, "{:label_width$}", format!("O_{v}")).unwrap();
        for l in (0..window).rev() {
            let c = if marked.contains(&(v, l)) { '*' } else { 'o' };
            write!(out, " {c:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}
