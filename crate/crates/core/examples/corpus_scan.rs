// Scan a corpus of graph6 lines and print the CSV report and the summary.

use graph_boundary::generators::{connected_graphs_up_to, grid, path};
use graph_boundary::io::scan::{corpus_lines, scan_corpus, write_csv, ScanOptions};
use graph_boundary::io::to_graph6;

fn main() {
    let mut text = String::new();
    for g in connected_graphs_up_to(5).into_iter().chain([path(12), grid(5, 5)]) {
        text += &to_graph6(&g);
        text.push('\n');
    }
    text += "A?\n";
    let options = ScanOptions {
        workers: Some(4),
        ..ScanOptions::default()
    };
    let report = scan_corpus(&corpus_lines("inline", &text), &options).unwrap();
    write_csv(&report.records[..5], std::io::stdout()).unwrap();
    let s = &report.summary;
    println!(
        "{} records, {} disconnected skipped, {} violations, hot spots violated in {} ({:.3})",
        s.records,
        s.disconnected,
        s.violations.len(),
        s.hotspots_violated,
        s.hotspots_violation_rate
    );
}
