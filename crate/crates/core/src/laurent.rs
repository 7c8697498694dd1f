//! Sparse Laurent polynomials with exact integer coefficients.
//!
//! A polynomial lives in `Z[v1^{±1}, ..., vk^{±1}]` for a fixed variable
//! count `k`. Terms are kept in a canonical order so that two polynomials
//! are equal iff their term maps are equal, and rendering is deterministic.
//! Coefficients are arbitrary-precision integers: twisted products of long
//! words grow coefficients without bound, and a silent overflow would
//! corrupt exact results.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from Laurent-ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("not a unit monomial: {reason}")]
    NonUnit { reason: String },
    #[error("variable map expects {expected} source variables, polynomial has {found}")]
    MapSourceMismatch { expected: usize, found: usize },
    #[error("variable maps do not compose: first targets {left}, second expects {right}")]
    MapCompositionMismatch { left: usize, right: usize },
}

/// Exponent vector of a single monomial, one entry per variable.
///
/// The ordering compares the last variable first, so for example with two
/// variables the constant comes first, then all pure powers of the first
/// variable, then terms involving the second. This is the canonical term
/// order used for equality, iteration, and rendering; it puts `1 + t1 - t2`
/// in exactly that sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    exps: Vec<i64>,
}

impl ExponentVector {
    pub fn new(exps: Vec<i64>) -> Self {
        Self { exps }
    }

    pub fn zero(k: usize) -> Self {
        Self { exps: vec![0; k] }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn negate(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|e| -e).collect(),
        }
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Where a source variable goes under a [`VariableMap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarTarget {
    /// `v_src -> w_target` (0-based target index).
    Var(usize),
    /// `v_src -> 1`.
    One,
}

/// A ring homomorphism `Z[v1^{±1},..] -> Z[w1^{±1},..]` sending each source
/// variable to a target variable or to the constant 1.
///
/// This one type carries every substitution the calculator needs: variable
/// permutations, the cycle projection onto `t_j` variables, the collapse of
/// all variables to a single `t`, and evaluation at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableMap {
    source_k: usize,
    target_k: usize,
    image: Vec<VarTarget>,
}

impl VariableMap {
    pub fn new(source_k: usize, target_k: usize, image: Vec<VarTarget>) -> Self {
        assert_eq!(
            image.len(),
            source_k,
            "image must cover every source variable"
        );
        for t in &image {
            if let VarTarget::Var(j) = t {
                assert!(*j < target_k, "target index {j} out of range");
            }
        }
        Self {
            source_k,
            target_k,
            image,
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::new(k, k, (0..k).map(VarTarget::Var).collect())
    }

    /// `v_i -> v_{perm[i]}` for a permutation given as 0-based images.
    pub fn from_images(images: &[usize]) -> Self {
        let k = images.len();
        Self::new(k, k, images.iter().map(|&j| VarTarget::Var(j)).collect())
    }

    /// `v_i -> w_{images[i]}` with an explicit target count; the images
    /// need not be a permutation.
    pub fn from_images_with_target(source_k: usize, target_k: usize, images: &[usize]) -> Self {
        assert_eq!(images.len(), source_k);
        Self::new(
            source_k,
            target_k,
            images.iter().map(|&j| VarTarget::Var(j)).collect(),
        )
    }

    /// All variables to a single one (`v_i -> w_1`).
    pub fn collapse_all(k: usize) -> Self {
        Self::new(k, 1, vec![VarTarget::Var(0); k])
    }

    /// Evaluation at 1: every variable to the constant.
    pub fn eval_at_one(k: usize) -> Self {
        Self::new(k, 0, vec![VarTarget::One; k])
    }

    pub fn source_k(&self) -> usize {
        self.source_k
    }

    pub fn target_k(&self) -> usize {
        self.target_k
    }

    pub fn image(&self) -> &[VarTarget] {
        &self.image
    }

    /// Composition: apply `self` first, then `next`.
    pub fn then(&self, next: &VariableMap) -> Result<VariableMap, LaurentError> {
        if self.target_k != next.source_k {
            return Err(LaurentError::MapCompositionMismatch {
                left: self.target_k,
                right: next.source_k,
            });
        }
        let image = self
            .image
            .iter()
            .map(|t| match t {
                VarTarget::One => VarTarget::One,
                VarTarget::Var(j) => next.image[*j],
            })
            .collect();
        Ok(VariableMap::new(self.source_k, next.target_k, image))
    }
}

/// How variables of a polynomial are written out.
#[derive(Debug, Clone)]
pub enum VarNames {
    /// `a1, a2, ...` for prefix `"a"`.
    Indexed(&'static str),
    /// A single unindexed name; only valid for one-variable polynomials.
    Plain(&'static str),
}

impl VarNames {
    fn name(&self, idx: usize) -> String {
        match self {
            VarNames::Indexed(prefix) => format!("{prefix}{}", idx + 1),
            VarNames::Plain(name) => (*name).to_string(),
        }
    }
}

/// A sparse Laurent polynomial in `k` commuting invertible variables.
///
/// Invariants: no stored coefficient is zero, and every key has length `k`.
/// The zero polynomial is the empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    k: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::constant(k, BigInt::one())
    }

    pub fn constant(k: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::zero(k), c);
        }
        Self { k, terms }
    }

    /// The variable `v_i` (1-based index).
    pub fn variable(k: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= k, "variable index {i} out of range 1..={k}");
        let mut exps = vec![0; k];
        exps[i - 1] = 1;
        Self::monomial(k, 1, exps)
    }

    pub fn monomial(k: usize, coeff: impl Into<BigInt>, exps: Vec<i64>) -> Self {
        assert_eq!(exps.len(), k);
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::new(exps), c);
        }
        Self { k, terms }
    }

    /// Builds a polynomial from (coefficient, exponents) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms<C: Into<BigInt>>(
        k: usize,
        terms: impl IntoIterator<Item = (C, Vec<i64>)>,
    ) -> Self {
        let mut map: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (c, exps) in terms {
            assert_eq!(exps.len(), k, "exponent vector length must equal k");
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            let key = ExponentVector::new(exps);
            let entry = map.entry(key).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { k, terms: map }
    }

    pub fn var_count(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.is_zero() && c.is_one())
                .unwrap_or(false)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms
            .get(&ExponentVector::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn check_same_k(&self, other: &Self) -> Result<(), LaurentError> {
        if self.k != other.k {
            return Err(LaurentError::VariableCountMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    /// Termwise sum in canonical form.
    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_same_k(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { k: self.k, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&other.negated())
    }

    /// Distributive product; exponent vectors add componentwise.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_same_k(other)?;
        let mut terms: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { k: self.k, terms })
    }

    pub fn negated(&self) -> Self {
        Self {
            k: self.k,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Inverse of a unit monomial (single term, coefficient ±1).
    pub fn monomial_inverse(&self) -> Result<Self, LaurentError> {
        if self.terms.len() != 1 {
            return Err(LaurentError::NonUnit {
                reason: format!("{} terms, expected exactly one", self.terms.len()),
            });
        }
        let (e, c) = self.terms.iter().next().expect("one term");
        if !c.is_one() && !(-c).is_one() {
            return Err(LaurentError::NonUnit {
                reason: format!("coefficient {c} is not ±1"),
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(e.negate(), c.clone());
        Ok(Self { k: self.k, terms })
    }

    /// Applies a variable map as a ring homomorphism. Sources mapping to the
    /// same target add their exponents; sources mapping to 1 are dropped.
    pub fn map_variables(&self, m: &VariableMap) -> Result<Self, LaurentError> {
        if self.k != m.source_k {
            return Err(LaurentError::MapSourceMismatch {
                expected: m.source_k,
                found: self.k,
            });
        }
        let mut terms: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut out = vec![0i64; m.target_k];
            for (src, exp) in e.exps().iter().enumerate() {
                if *exp == 0 {
                    continue;
                }
                match m.image[src] {
                    VarTarget::Var(dst) => out[dst] += exp,
                    VarTarget::One => {}
                }
            }
            let entry = terms
                .entry(ExponentVector::new(out))
                .or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self {
            k: m.target_k,
            terms,
        })
    }

    /// Coefficient sum, i.e. the value at every variable = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Renders in the textual grammar: canonical term order, `^` for
    /// exponents, `*` between factors, explicit `1` for the empty monomial.
    pub fn render(&self, names: &VarNames) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (idx, exp) in e.exps().iter().enumerate() {
                if *exp == 0 {
                    continue;
                }
                if *exp == 1 {
                    factors.push(names.name(idx));
                } else {
                    factors.push(format!("{}^{}", names.name(idx), exp));
                }
            }
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl std::ops::Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_add(rhs).expect("variable counts must match")
    }
}

impl std::ops::Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_sub(rhs).expect("variable counts must match")
    }
}

impl std::ops::Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("variable counts must match")
    }
}

impl std::ops::Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.negated()
    }
}
