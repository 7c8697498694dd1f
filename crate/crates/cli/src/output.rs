//! Human-readable text rendering for each command.

use loopbraid::dynamics::render_class_row;
use loopbraid::rep::cycle_projection;
use loopbraid::{
    burau, rep_of_word, s_matrix, BraidWord, CycleDecomposition, LefschetzReport, PeriodicBound,
    RepKind, VarNames,
};

fn word_line(word: &BraidWord) -> String {
    if word.is_empty() {
        "word: (empty)".to_string()
    } else {
        format!("word: {}", word.render())
    }
}

fn cycles_line(cd: &CycleDecomposition) -> String {
    let parts: Vec<String> = cd
        .cycles()
        .iter()
        .enumerate()
        .map(|(j, cycle)| {
            let members = cycle
                .iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("t{} = {{{members}}}", j + 1)
        })
        .collect();
    format!("cycles: {}", parts.join("; "))
}

pub fn lefschetz_text(report: &LefschetzReport) -> String {
    let mut out = Vec::new();
    out.push(format!("n: {}", report.word.n()));
    out.push(word_line(&report.word));
    out.push(format!("mu: {}", report.mu.render_cycles()));
    out.push(cycles_line(&report.cycles));
    out.push(format!(
        "polynomial: {}",
        report.polynomial.render(&VarNames::Indexed("t"))
    ));
    out.push(format!(
        "nielsen lower bound: {}",
        report.nielsen_lower_bound
    ));
    out.push("classes (class, linking, index, sub-links):".to_string());
    for entry in &report.classes {
        out.push(format!("  {}", render_class_row(entry, &report.cycles)));
    }
    out.push(format!(
        "paper conformance: {}",
        report.paper_conformance.render()
    ));
    out.join("\n")
}

pub fn periodic_text(report: &LefschetzReport, bound: &PeriodicBound) -> String {
    let mut out = vec![lefschetz_text(report)];
    out.push(format!("period p: {}", bound.p));
    out.push(format!(
        "trace polynomial: {}",
        bound.trace_poly.render(&VarNames::Indexed("t"))
    ));
    out.push(format!(
        "M (terms with gcd(p, |linking|) = 1): {}",
        bound.m_count
    ));
    out.push(format!(
        "n_p (circles with period dividing p): {}",
        bound.n_p
    ));
    out.push(format!(
        "bound: p*(M - n_p) = {} (clamped: {})",
        bound.raw_bound, bound.clamped_bound
    ));
    out.join("\n")
}

pub fn matrix_text(word: &BraidWord) -> String {
    let cd = word.induced_permutation().cycle_decomposition();
    let proj = cycle_projection(&cd);
    let a_names = VarNames::Indexed("a");
    let t_names = VarNames::Indexed("t");
    let r = rep_of_word(RepKind::R, word);
    let rbar = rep_of_word(RepKind::Rbar, word);
    let s = s_matrix(word);
    let mut out = Vec::new();
    out.push(format!("n: {}", word.n()));
    out.push(word_line(word));
    out.push(format!(
        "mu: {}",
        word.induced_permutation().render_cycles()
    ));
    out.push(cycles_line(&cd));
    for (label, m) in [("R", &r), ("Rbar", &rbar), ("S = Rbar - R", &s)] {
        out.push(format!("{label}:"));
        out.push(m.render(&a_names));
    }
    for (label, m) in [("R^pi_mu", &r), ("Rbar^pi_mu", &rbar), ("S^pi_mu", &s)] {
        out.push(format!("{label}:"));
        out.push(m.map_variables(&proj).render(&t_names));
    }
    out.join("\n")
}

pub fn burau_text(word: &BraidWord) -> String {
    let mut out = Vec::new();
    out.push(format!("n: {}", word.n()));
    out.push(word_line(word));
    out.push("burau:".to_string());
    out.push(burau(word).render(&VarNames::Plain("t")));
    out.join("\n")
}

pub fn perm_text(word: &BraidWord) -> String {
    let mu = word.induced_permutation();
    let cd = mu.cycle_decomposition();
    let mut out = Vec::new();
    out.push(format!("n: {}", word.n()));
    out.push(word_line(word));
    out.push(format!("mu: {}", mu.render_cycles()));
    out.push(format!(
        "images: {}",
        mu.images()
            .iter()
            .enumerate()
            .map(|(i, &img)| format!("{}->{}", i + 1, img + 1))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    out.push(cycles_line(&cd));
    out.push(format!(
        "periods: {}",
        loopbraid::circle_periods(word)
            .iter()
            .map(|(circle, p)| format!("circle {circle}: {p}"))
            .collect::<Vec<_>>()
            .join("; ")
    ));
    out.join("\n")
}
