//! Matrix engine over the Laurent ring: the two twisted representations of
//! loop braid words, their difference matrix, the cycle projection, and the
//! unreduced Burau representation.
//!
//! A generator is assigned an n×n matrix over `Z[a1^{±1},..,an^{±1}]` with a
//! 2×2 block at its index inside an identity frame. Words are evaluated by
//! the twisted rule
//!
//! ```text
//! M(w·g) = M(w)^{nu(g)} · M(g)
//! ```
//!
//! where `nu(g)` permutes the variables `a_i <-> a_{i+1}` before the
//! ordinary product. Neither map is a plain homomorphism over the full
//! variable ring; only the fold above is meaningful, and the relation suite
//! pins the convention down.

use thiserror::Error;

use crate::braidword::{BraidWord, CycleDecomposition, GenKind, Generator, Perm, Sign};
use crate::laurent::{LaurentPolynomial, VarNames, VariableMap};
use crate::presentation::{relation_instances, RelationCheck, RelationReport};

/// Which of the two twisted representations to use.
///
/// `R` records the action on loops around the circles, `Rbar` the action on
/// the spheres surrounding them; their difference drives the fixed-point
/// report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    R,
    Rbar,
}

impl RepKind {
    pub fn label(self) -> &'static str {
        match self {
            RepKind::R => "R",
            RepKind::Rbar => "Rbar",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// A square matrix over the Laurent ring; all entries share one variable
/// count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    k: usize,
    entries: Vec<LaurentPolynomial>,
}

impl PolyMatrix {
    pub fn identity(dim: usize, k: usize) -> Self {
        Self::build(dim, k, |r, c| {
            if r == c {
                LaurentPolynomial::one(k)
            } else {
                LaurentPolynomial::zero(k)
            }
        })
    }

    pub fn zero(dim: usize, k: usize) -> Self {
        Self::build(dim, k, |_, _| LaurentPolynomial::zero(k))
    }

    pub fn build(
        dim: usize,
        k: usize,
        mut entry: impl FnMut(usize, usize) -> LaurentPolynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                let e = entry(r, c);
                assert_eq!(e.var_count(), k, "uniform variable count");
                entries.push(e);
            }
        }
        Self { dim, k, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPolynomial>>) -> Self {
        let dim = rows.len();
        assert!(dim > 0);
        let k = rows[0][0].var_count();
        Self::build(dim, k, |r, c| rows[r][c].clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn var_count(&self) -> usize {
        self.k
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPolynomial {
        &self.entries[r * self.dim + c]
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.dim, self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, RepError> {
        if self.dim != other.dim {
            return Err(RepError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.k != other.k {
            return Err(RepError::VariableMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(Self::build(self.dim, self.k, |r, c| {
            let mut acc = LaurentPolynomial::zero(self.k);
            for t in 0..self.dim {
                acc = &acc + &(self.get(r, t) * other.get(t, c));
            }
            acc
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RepError> {
        if self.dim != other.dim {
            return Err(RepError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.k != other.k {
            return Err(RepError::VariableMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(Self::build(self.dim, self.k, |r, c| {
            self.get(r, c) - other.get(r, c)
        }))
    }

    /// Applies a variable map to every entry.
    pub fn map_variables(&self, m: &VariableMap) -> Self {
        Self::build(self.dim, m.target_k(), |r, c| {
            self.get(r, c)
                .map_variables(m)
                .expect("uniform variable count")
        })
    }

    pub fn transpose(&self) -> Self {
        Self::build(self.dim, self.k, |r, c| self.get(c, r).clone())
    }

    /// Conjugation by the order-reversing permutation matrix of the
    /// transpose: entry (r, c) becomes entry (dim-1-c, dim-1-r).
    pub fn reversed_transpose(&self) -> Self {
        Self::build(self.dim, self.k, |r, c| {
            self.get(self.dim - 1 - c, self.dim - 1 - r).clone()
        })
    }

    /// Ordinary matrix power (no twisting).
    pub fn pow(&self, p: u32) -> Self {
        let mut acc = Self::identity(self.dim, self.k);
        for _ in 0..p {
            acc = acc.mul(self).expect("same dimensions");
        }
        acc
    }

    pub fn trace(&self) -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::zero(self.k);
        for i in 0..self.dim {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Row-major rendering, one bracketed row per line.
    pub fn render(&self, names: &VarNames) -> String {
        (0..self.dim)
            .map(|r| {
                let row = (0..self.dim)
                    .map(|c| self.get(r, c).render(names))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("[{row}]")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn sigma_block(kind: RepKind, i: usize, n: usize) -> [LaurentPolynomial; 4] {
    let one = LaurentPolynomial::one(n);
    let a_i = LaurentPolynomial::variable(n, i);
    let a_next = LaurentPolynomial::variable(n, i + 1);
    let zero = LaurentPolynomial::zero(n);
    match kind {
        // [[1 - a_{i+1}, a_i], [1, 0]]
        RepKind::R => [&one - &a_next, a_i, one, zero],
        // [[0, a_i], [1, 1 - a_i]]
        RepKind::Rbar => [zero, a_i.clone(), one.clone(), &one - &a_i],
    }
}

/// Places a 2×2 block at rows/columns (i-1, i) of an identity matrix.
fn embed_block(n: usize, i: usize, block: [LaurentPolynomial; 4]) -> PolyMatrix {
    let mut m = PolyMatrix::identity(n, n);
    let base = i - 1;
    let [b00, b01, b10, b11] = block;
    m.entries[base * n + base] = b00;
    m.entries[base * n + base + 1] = b01;
    m.entries[(base + 1) * n + base] = b10;
    m.entries[(base + 1) * n + base + 1] = b11;
    m
}

/// The variable transposition `a_i <-> a_{i+1}` attached to a generator;
/// kind- and sign-independent.
pub fn nu_of_generator(g: Generator, n: usize) -> VariableMap {
    let mut images: Vec<usize> = (0..n).collect();
    images.swap(g.index - 1, g.index);
    VariableMap::from_images(&images)
}

/// The variable permutation of a whole word: `a_i -> a_{mu(i)}`.
pub fn nu_of_word(w: &BraidWord) -> VariableMap {
    nu_of_perm(&w.induced_permutation())
}

pub fn nu_of_perm(mu: &Perm) -> VariableMap {
    VariableMap::from_images(mu.images())
}

/// Inverts a 2×2 block whose determinant is a unit monomial, via the
/// adjugate.
fn invert_unit_block(block: [LaurentPolynomial; 4]) -> [LaurentPolynomial; 4] {
    let [a, b, c, d] = block;
    let det = &(&a * &d) - &(&b * &c);
    let inv_det = det
        .monomial_inverse()
        .expect("generator block determinant is a unit monomial");
    [
        &d * &inv_det,
        &b.negated() * &inv_det,
        &c.negated() * &inv_det,
        &a * &inv_det,
    ]
}

/// The matrix of a single signed generator.
///
/// For an inverse `s` generator the block is the symbolic inverse of the
/// nu-twisted positive block, which is exactly what makes
/// `rep_of_word` send `s<i> s<i>'` to the identity.
pub fn gen_matrix(kind: RepKind, g: Generator, n: usize) -> Result<PolyMatrix, RepError> {
    if g.index >= n {
        return Err(RepError::IndexOutOfRange { index: g.index, n });
    }
    let i = g.index;
    match g.kind {
        GenKind::Rho => {
            let one = LaurentPolynomial::one(n);
            let zero = LaurentPolynomial::zero(n);
            Ok(embed_block(n, i, [zero.clone(), one.clone(), one, zero]))
        }
        GenKind::Sigma => {
            let block = sigma_block(kind, i, n);
            match g.sign {
                Sign::Pos => Ok(embed_block(n, i, block)),
                Sign::Neg => {
                    let nu = nu_of_generator(Generator::sigma(i), n);
                    let twisted: Vec<LaurentPolynomial> = block
                        .into_iter()
                        .map(|e| e.map_variables(&nu).expect("same variable count"))
                        .collect();
                    let twisted: [LaurentPolynomial; 4] =
                        twisted.try_into().expect("four block entries");
                    Ok(embed_block(n, i, invert_unit_block(twisted)))
                }
            }
        }
    }
}

/// One twisted step: permutes the variables of `a` by `nu_right` and then
/// multiplies by `b`.
pub fn twisted_product(
    a: &PolyMatrix,
    b: &PolyMatrix,
    nu_right: &VariableMap,
) -> Result<PolyMatrix, RepError> {
    if a.dim() != b.dim() {
        return Err(RepError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if a.var_count() != b.var_count() || nu_right.source_k() != a.var_count() {
        return Err(RepError::VariableMismatch {
            left: a.var_count(),
            right: b.var_count(),
        });
    }
    a.map_variables(nu_right).mul(b)
}

/// Evaluates a word under the chosen representation by the twisted fold;
/// the empty word maps to the identity matrix.
pub fn rep_of_word(kind: RepKind, w: &BraidWord) -> PolyMatrix {
    let n = w.n();
    let mut acc = PolyMatrix::identity(n, n);
    for &g in w.gens() {
        let gm = gen_matrix(kind, g, n).expect("word generators are validated");
        let nu = nu_of_generator(g, n);
        acc = twisted_product(&acc, &gm, &nu).expect("dimensions agree along the fold");
    }
    acc
}

/// The difference matrix `Rbar(w) - R(w)`.
pub fn s_matrix(w: &BraidWord) -> PolyMatrix {
    rep_of_word(RepKind::Rbar, w)
        .sub(&rep_of_word(RepKind::R, w))
        .expect("same shape")
}

/// Collapses `a_i` to the cycle variable `t_j` of the cycle containing
/// circle i.
pub fn cycle_projection(cd: &CycleDecomposition) -> VariableMap {
    VariableMap::from_images_with_target(
        cd.n(),
        cd.m(),
        &(0..cd.n()).map(|i| cd.cycle_of(i)).collect::<Vec<_>>(),
    )
}

/// Entrywise cycle projection of a matrix over the full variable ring.
pub fn project_mu(m: &PolyMatrix, cd: &CycleDecomposition) -> PolyMatrix {
    m.map_variables(&cycle_projection(cd))
}

/// The unreduced Burau matrix: every variable of `R(w)` collapsed to the
/// single variable `t`. After the collapse the assignment is an ordinary
/// homomorphism.
pub fn burau(w: &BraidWord) -> PolyMatrix {
    rep_of_word(RepKind::R, w).map_variables(&VariableMap::collapse_all(w.n()))
}

/// Checks every relation instance at strand count `n` under the given
/// representations, by evaluating both sides with the twisted fold.
pub fn verify_relations(n: usize, kinds: &[RepKind]) -> RelationReport {
    let mut report = RelationReport::default();
    for inst in relation_instances(n) {
        for &kind in kinds {
            let lhs = rep_of_word(kind, &inst.lhs);
            let rhs = rep_of_word(kind, &inst.rhs);
            report.checks.push(RelationCheck {
                label: inst.label(),
                representation: kind.label(),
                pass: lhs == rhs,
            });
        }
    }
    report
}
