//! The `survey` command: enumerate every word up to a length bound and
//! tabulate its polynomial, class count, and whether the two traces cancel.
//!
//! Output is a flat tab-separated table (identical in text and machine
//! mode), one word per line, in a fixed enumeration order. The `cancels`
//! column makes it cheap to see for which words the report collapses to 1.

use loopbraid::corpus::{words_up_to_length, WordAlphabet};
use loopbraid::{lefschetz_report, VarNames};

use crate::CliError;

pub fn run(n: usize, max_len: usize) -> Result<String, CliError> {
    let mut out = Vec::new();
    out.push("word\tm\tpolynomial\tclasses\tcancels\tconformance".to_string());
    for word in words_up_to_length(n, max_len, WordAlphabet::Full) {
        let report = lefschetz_report(&word).map_err(CliError::Dynamics)?;
        let rendered = if word.is_empty() {
            "-".to_string()
        } else {
            word.render()
        };
        out.push(format!(
            "{rendered}\t{}\t{}\t{}\t{}\t{}",
            report.cycles.m(),
            report.polynomial.render(&VarNames::Indexed("t")),
            report.nielsen_lower_bound,
            if report.polynomial.is_one() {
                "yes"
            } else {
                "no"
            },
            report.paper_conformance.render()
        ));
    }
    Ok(out.join("\n"))
}
