//! Machine-readable JSON output with stable keys and deterministic
//! ordering: struct fields serialize in declaration order, polynomial terms
//! in the canonical term order, and coefficients as exact JSON integers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Number;

use loopbraid::rep::cycle_projection;
use loopbraid::{
    burau, rep_of_word, s_matrix, BraidWord, CycleDecomposition, LaurentPolynomial,
    LefschetzReport, PeriodicBound, RepKind, VarNames,
};

fn bigint_number(b: &BigInt) -> Number {
    match b.to_i64() {
        Some(i) => Number::from(i),
        None => b
            .to_string()
            .parse()
            .expect("decimal integer parses as an exact JSON number"),
    }
}

fn one_based_cycles(cd: &CycleDecomposition) -> Vec<Vec<usize>> {
    cd.cycles()
        .iter()
        .map(|c| c.iter().map(|i| i + 1).collect())
        .collect()
}

#[derive(Serialize)]
struct TermJson {
    coeff: Number,
    exp: Vec<i64>,
}

fn poly_terms(poly: &LaurentPolynomial) -> Vec<TermJson> {
    poly.terms()
        .map(|(e, c)| TermJson {
            coeff: bigint_number(c),
            exp: e.exps().to_vec(),
        })
        .collect()
}

#[derive(Serialize)]
struct ClassJson {
    linking: Vec<i64>,
    index: Number,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct PeriodicJson {
    p: u32,
    M: usize,
    n_p: usize,
    raw_bound: i64,
    clamped_bound: u64,
}

#[derive(Serialize)]
struct ReportJson {
    n: usize,
    word: String,
    mu_cycles: Vec<Vec<usize>>,
    polynomial: Vec<TermJson>,
    classes: Vec<ClassJson>,
    nielsen_lower_bound: usize,
    paper_conformance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    periodic: Option<PeriodicJson>,
}

pub fn lefschetz_json(report: &LefschetzReport, bound: Option<&PeriodicBound>) -> String {
    let json = ReportJson {
        n: report.word.n(),
        word: report.word.render(),
        mu_cycles: one_based_cycles(&report.cycles),
        polynomial: poly_terms(&report.polynomial),
        classes: report
            .classes
            .iter()
            .map(|c| ClassJson {
                linking: c.linking.exps().to_vec(),
                index: bigint_number(&c.index),
            })
            .collect(),
        nielsen_lower_bound: report.nielsen_lower_bound,
        paper_conformance: report.paper_conformance.render(),
        periodic: bound.map(|b| PeriodicJson {
            p: b.p,
            M: b.m_count,
            n_p: b.n_p,
            raw_bound: b.raw_bound,
            clamped_bound: b.clamped_bound,
        }),
    };
    serde_json::to_string(&json).expect("report serializes")
}

fn matrix_strings(m: &loopbraid::PolyMatrix, names: &VarNames) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.get(r, c).render(names)).collect())
        .collect()
}

#[derive(Serialize)]
struct MatricesJson {
    #[serde(rename = "R")]
    r: Vec<Vec<String>>,
    #[serde(rename = "Rbar")]
    rbar: Vec<Vec<String>>,
    #[serde(rename = "S")]
    s: Vec<Vec<String>>,
    #[serde(rename = "R_pi_mu")]
    r_proj: Vec<Vec<String>>,
    #[serde(rename = "Rbar_pi_mu")]
    rbar_proj: Vec<Vec<String>>,
    #[serde(rename = "S_pi_mu")]
    s_proj: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct MatrixJson {
    n: usize,
    word: String,
    mu_cycles: Vec<Vec<usize>>,
    matrices: MatricesJson,
}

pub fn matrix_json(word: &BraidWord) -> String {
    let cd = word.induced_permutation().cycle_decomposition();
    let proj = cycle_projection(&cd);
    let a = VarNames::Indexed("a");
    let t = VarNames::Indexed("t");
    let r = rep_of_word(RepKind::R, word);
    let rbar = rep_of_word(RepKind::Rbar, word);
    let s = s_matrix(word);
    let json = MatrixJson {
        n: word.n(),
        word: word.render(),
        mu_cycles: one_based_cycles(&cd),
        matrices: MatricesJson {
            r: matrix_strings(&r, &a),
            rbar: matrix_strings(&rbar, &a),
            s: matrix_strings(&s, &a),
            r_proj: matrix_strings(&r.map_variables(&proj), &t),
            rbar_proj: matrix_strings(&rbar.map_variables(&proj), &t),
            s_proj: matrix_strings(&s.map_variables(&proj), &t),
        },
    };
    serde_json::to_string(&json).expect("matrices serialize")
}

#[derive(Serialize)]
struct BurauJson {
    n: usize,
    word: String,
    burau: Vec<Vec<String>>,
}

pub fn burau_json(word: &BraidWord) -> String {
    let json = BurauJson {
        n: word.n(),
        word: word.render(),
        burau: matrix_strings(&burau(word), &VarNames::Plain("t")),
    };
    serde_json::to_string(&json).expect("matrix serializes")
}

#[derive(Serialize)]
struct PermJson {
    n: usize,
    word: String,
    mu: Vec<usize>,
    mu_cycles: Vec<Vec<usize>>,
    periods: Vec<usize>,
}

pub fn perm_json(word: &BraidWord) -> String {
    let mu = word.induced_permutation();
    let cd = mu.cycle_decomposition();
    let json = PermJson {
        n: word.n(),
        word: word.render(),
        mu: mu.images().iter().map(|&i| i + 1).collect(),
        mu_cycles: one_based_cycles(&cd),
        periods: loopbraid::circle_periods(word)
            .into_iter()
            .map(|(_, p)| p)
            .collect(),
    };
    serde_json::to_string(&json).expect("permutation serializes")
}
