//! The defining relations of the loop braid group, as pairs of words.
//!
//! Eight families: the braid relations among the `s` generators (I, II),
//! the symmetric-group relations among the `r` generators (III, IV, V), and
//! the mixed relations (VI, VII, VIII). Any representation implemented in
//! this crate is checked against every instance of every family.

use std::fmt;

use crate::braidword::{BraidWord, Generator};

/// Relation family labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationFamily {
    /// s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    BraidSigma,
    /// s_i s_j = s_j s_i for |i-j| > 1
    CommuteSigma,
    /// r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1}
    BraidRho,
    /// r_i r_j = r_j r_i for |i-j| > 1
    CommuteRho,
    /// r_i r_i = 1
    RhoInvolution,
    /// s_i r_j = r_j s_i for |i-j| > 1
    CommuteMixed,
    /// s_i r_{i+1} r_i = r_{i+1} r_i s_{i+1}
    MixedSigmaRho,
    /// r_i s_{i+1} s_i = s_{i+1} s_i r_{i+1}
    MixedRhoSigma,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 8] = [
        RelationFamily::BraidSigma,
        RelationFamily::CommuteSigma,
        RelationFamily::BraidRho,
        RelationFamily::CommuteRho,
        RelationFamily::RhoInvolution,
        RelationFamily::CommuteMixed,
        RelationFamily::MixedSigmaRho,
        RelationFamily::MixedRhoSigma,
    ];

    /// Roman-numeral label, matching the usual presentation order.
    pub fn numeral(self) -> &'static str {
        match self {
            RelationFamily::BraidSigma => "I",
            RelationFamily::CommuteSigma => "II",
            RelationFamily::BraidRho => "III",
            RelationFamily::CommuteRho => "IV",
            RelationFamily::RhoInvolution => "V",
            RelationFamily::CommuteMixed => "VI",
            RelationFamily::MixedSigmaRho => "VII",
            RelationFamily::MixedRhoSigma => "VIII",
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.numeral())
    }
}

/// One relation instance: two words that must represent the same element.
#[derive(Debug, Clone)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub n: usize,
    pub indices: Vec<usize>,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl RelationInstance {
    pub fn label(&self) -> String {
        let idx = self
            .indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("{}({idx}) n={}", self.family, self.n)
    }
}

fn word(n: usize, gens: Vec<Generator>) -> BraidWord {
    BraidWord::new(n, gens).expect("relation indices are in range")
}

/// Every instance of the eight relation families at the given strand count,
/// ordered by family then indices.
pub fn relation_instances(n: usize) -> Vec<RelationInstance> {
    use Generator as G;
    assert!(n >= 2);
    let mut out = Vec::new();
    let max = n - 1;

    for i in 1..max {
        out.push(RelationInstance {
            family: RelationFamily::BraidSigma,
            n,
            indices: vec![i],
            lhs: word(n, vec![G::sigma(i), G::sigma(i + 1), G::sigma(i)]),
            rhs: word(n, vec![G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)]),
        });
    }
    for i in 1..=max {
        for j in 1..=max {
            if i.abs_diff(j) > 1 {
                out.push(RelationInstance {
                    family: RelationFamily::CommuteSigma,
                    n,
                    indices: vec![i, j],
                    lhs: word(n, vec![G::sigma(i), G::sigma(j)]),
                    rhs: word(n, vec![G::sigma(j), G::sigma(i)]),
                });
            }
        }
    }
    for i in 1..max {
        out.push(RelationInstance {
            family: RelationFamily::BraidRho,
            n,
            indices: vec![i],
            lhs: word(n, vec![G::rho(i), G::rho(i + 1), G::rho(i)]),
            rhs: word(n, vec![G::rho(i + 1), G::rho(i), G::rho(i + 1)]),
        });
    }
    for i in 1..=max {
        for j in 1..=max {
            if i.abs_diff(j) > 1 {
                out.push(RelationInstance {
                    family: RelationFamily::CommuteRho,
                    n,
                    indices: vec![i, j],
                    lhs: word(n, vec![G::rho(i), G::rho(j)]),
                    rhs: word(n, vec![G::rho(j), G::rho(i)]),
                });
            }
        }
    }
    for i in 1..=max {
        out.push(RelationInstance {
            family: RelationFamily::RhoInvolution,
            n,
            indices: vec![i],
            lhs: word(n, vec![G::rho(i), G::rho(i)]),
            rhs: BraidWord::identity(n),
        });
    }
    for i in 1..=max {
        for j in 1..=max {
            if i.abs_diff(j) > 1 {
                out.push(RelationInstance {
                    family: RelationFamily::CommuteMixed,
                    n,
                    indices: vec![i, j],
                    lhs: word(n, vec![G::sigma(i), G::rho(j)]),
                    rhs: word(n, vec![G::rho(j), G::sigma(i)]),
                });
            }
        }
    }
    for i in 1..max {
        out.push(RelationInstance {
            family: RelationFamily::MixedSigmaRho,
            n,
            indices: vec![i],
            lhs: word(n, vec![G::sigma(i), G::rho(i + 1), G::rho(i)]),
            rhs: word(n, vec![G::rho(i + 1), G::rho(i), G::sigma(i + 1)]),
        });
    }
    for i in 1..max {
        out.push(RelationInstance {
            family: RelationFamily::MixedRhoSigma,
            n,
            indices: vec![i],
            lhs: word(n, vec![G::rho(i), G::sigma(i + 1), G::sigma(i)]),
            rhs: word(n, vec![G::sigma(i + 1), G::sigma(i), G::rho(i + 1)]),
        });
    }
    out
}

/// Outcome of checking one relation instance under one representation.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub label: String,
    pub representation: &'static str,
    pub pass: bool,
}

/// Aggregated results of a relation-verification run.
#[derive(Debug, Clone, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(&mut self, other: RelationReport) {
        self.checks.extend(other.checks);
    }
}
