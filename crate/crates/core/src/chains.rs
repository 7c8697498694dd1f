//! Independent oracle over the integral group ring of the free group.
//!
//! Everything the matrix engine computes over the Laurent ring is recomputed
//! here one level up: words act on the free group `F_n = <x1,..,xn>` as
//! conjugating automorphisms, chain matrices over `ZF_n` are folded with the
//! full automorphism twist, and only at the very end does abelianization
//! collapse the results into Laurent polynomials. Agreement between the two
//! routes is the correctness gate for the whole pipeline.
//!
//! The chain-level fold twists by the complete automorphism of each factor,
//! not merely its index permutation; the two folds agree after
//! abelianization exactly because conjugation dies in homology. That
//! asymmetry is deliberate.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braidword::{BraidWord, GenKind, Generator, Perm, Sign};
use crate::laurent::LaurentPolynomial;
use crate::presentation::{relation_instances, RelationCheck, RelationReport};

/// One letter of a free-group word: a generator index (0-based) and an
/// exponent of ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        assert!(exp == 1 || exp == -1);
        Self { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            exp: -self.exp,
        }
    }
}

/// A freely reduced word in `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    n: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// The generator `x_i` (1-based index).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        Self {
            n,
            letters: vec![Letter::new(i - 1, 1)],
        }
    }

    pub fn generator_inv(n: usize, i: usize) -> Self {
        Self::generator(n, i).inverse()
    }

    /// Builds a word from raw letters, freely reducing. Reduction by
    /// adjacent cancellation is confluent, so the result does not depend on
    /// the order cancellations are found in.
    pub fn from_letters(n: usize, raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            assert!(l.gen < n, "letter references generator out of rank");
            match letters.last() {
                Some(top) if top.gen == l.gen && top.exp == -l.exp => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        Self { n, letters }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation with cancellation at the junction.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ranks must match");
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            match letters.last() {
                Some(top) if top.gen == l.gen && top.exp == -l.exp => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        Self { n: self.n, letters }
    }

    /// Strips conjugating pairs from the two ends until none remain.
    pub fn cyclically_reduced_core(&self) -> Self {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 {
            let first = letters[0];
            let last = *letters.last().unwrap();
            if first.gen == last.gen && first.exp == -last.exp {
                letters.remove(0);
                letters.pop();
            } else {
                break;
            }
        }
        Self { n: self.n, letters }
    }

    /// Exponent sum of each generator; the image under abelianization.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.n];
        for l in &self.letters {
            sums[l.gen] += l.exp as i64;
        }
        sums
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    format!("x{}", l.gen + 1)
                } else {
                    format!("x{}^-1", l.gen + 1)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An exact element of the group ring `ZF_n`: an integer combination of
/// freely reduced words. Words stay reduced at every step, so equality is
/// syntactic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    n: usize,
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_word(FreeWord::identity(n))
    }

    pub fn from_word(w: FreeWord) -> Self {
        let n = w.rank();
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        Self { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (FreeWord, BigInt)>) -> Self {
        let mut map: BTreeMap<FreeWord, BigInt> = BTreeMap::new();
        for (w, c) in terms {
            assert_eq!(w.rank(), n);
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(w).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { n, terms: map }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { n: self.n, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms: BTreeMap<FreeWord, BigInt> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let w = wa.mul(wb);
                let entry = terms.entry(w).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { n: self.n, terms }
    }

    pub fn mul_word(&self, w: &FreeWord) -> Self {
        self.mul(&Self::from_word(w.clone()))
    }

    /// Sends each word to the monomial of its exponent sums.
    pub fn abelianize(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.n,
            self.terms
                .iter()
                .map(|(w, c)| (c.clone(), w.exponent_sums())),
        )
    }

    /// Renders terms for test goldens, e.g. `1 - x1 x2 x1^-1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
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
            if mag.is_one() {
                out.push_str(&w.to_string());
            } else if w.is_identity() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{mag} {w}"));
            }
        }
        out
    }
}

/// An automorphism of `F_n` sending each generator to a conjugate of a
/// generator: `x_i -> W_i x_{perm(i)} W_i^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjAutomorphism {
    n: usize,
    images: Vec<FreeWord>,
    perm: Perm,
}

impl ConjAutomorphism {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            images: (1..=n).map(|i| FreeWord::generator(n, i)).collect(),
            perm: Perm::identity(n),
        }
    }

    pub fn new(images: Vec<FreeWord>, perm: Perm) -> Self {
        let n = perm.n();
        assert_eq!(images.len(), n);
        let a = Self { n, images, perm };
        assert!(
            a.is_conjugating_form(),
            "images must be conjugates of permuted generators"
        );
        a
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Image of `x_i` (1-based).
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    /// Normal-form test: the cyclically reduced core of each image must be
    /// the single positive letter `x_{perm(i)}`.
    pub fn is_conjugating_form(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| {
            let core = w.cyclically_reduced_core();
            core.letters() == [Letter::new(self.perm.apply(i), 1)]
        })
    }

    /// Applies the automorphism to a word by substituting images.
    pub fn apply_word(&self, w: &FreeWord) -> FreeWord {
        assert_eq!(w.rank(), self.n);
        let mut letters: Vec<Letter> = Vec::new();
        for l in w.letters() {
            let image = &self.images[l.gen];
            if l.exp == 1 {
                for &il in image.letters() {
                    push_reduced(&mut letters, il);
                }
            } else {
                for &il in image.inverse().letters() {
                    push_reduced(&mut letters, il);
                }
            }
        }
        FreeWord { n: self.n, letters }
    }

    /// Linear extension to the group ring.
    pub fn apply_ring(&self, e: &GroupRingElement) -> GroupRingElement {
        GroupRingElement::from_terms(
            self.n,
            e.terms.iter().map(|(w, c)| (self.apply_word(w), c.clone())),
        )
    }

    /// Composition: apply `self` first, then `next`.
    pub fn then(&self, next: &ConjAutomorphism) -> ConjAutomorphism {
        assert_eq!(self.n, next.n);
        let images = self.images.iter().map(|w| next.apply_word(w)).collect();
        let perm = self.perm.then(&next.perm);
        ConjAutomorphism {
            n: self.n,
            images,
            perm,
        }
    }

    /// Entry (i, j) is the Fox derivative of the i-th image by `x_j`.
    pub fn fox_jacobian(&self) -> ChainMatrix {
        let n = self.n;
        ChainMatrix::build(n, n, |r, c| fox_derivative(&self.images[r], c + 1))
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    match letters.last() {
        Some(top) if top.gen == l.gen && top.exp == -l.exp => {
            letters.pop();
        }
        _ => letters.push(l),
    }
}

/// The conjugating automorphism of one signed generator.
pub fn aut_of_generator(g: Generator, n: usize) -> ConjAutomorphism {
    assert!(g.index < n, "generator index out of range");
    let i = g.index; // 1-based
    let mut images: Vec<FreeWord> = (1..=n).map(|j| FreeWord::generator(n, j)).collect();
    let mut perm_images: Vec<usize> = (0..n).collect();
    perm_images.swap(i - 1, i);
    match (g.kind, g.sign) {
        (GenKind::Rho, _) => {
            images[i - 1] = FreeWord::generator(n, i + 1);
            images[i] = FreeWord::generator(n, i);
        }
        (GenKind::Sigma, Sign::Pos) => {
            // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            images[i - 1] = FreeWord::from_letters(
                n,
                [
                    Letter::new(i - 1, 1),
                    Letter::new(i, 1),
                    Letter::new(i - 1, -1),
                ],
            );
            images[i] = FreeWord::generator(n, i);
        }
        (GenKind::Sigma, Sign::Neg) => {
            // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            images[i - 1] = FreeWord::generator(n, i + 1);
            images[i] = FreeWord::from_letters(
                n,
                [Letter::new(i, -1), Letter::new(i - 1, 1), Letter::new(i, 1)],
            );
        }
    }
    ConjAutomorphism::new(images, Perm::from_images(perm_images))
}

/// The automorphism of a whole word, folded left to right.
pub fn aut_of_word(w: &BraidWord) -> ConjAutomorphism {
    let mut acc = ConjAutomorphism::identity(w.n());
    for &g in w.gens() {
        acc = acc.then(&aut_of_generator(g, w.n()));
    }
    acc
}

/// Fox derivative by `x_i` (1-based): the linear map with
/// `d(x_j)/d(x_i) = delta_ij`, `d(x_j^-1)/d(x_i) = -delta_ij x_j^-1` and
/// `d(uv) = du + u dv`.
pub fn fox_derivative(u: &FreeWord, i: usize) -> GroupRingElement {
    let n = u.rank();
    assert!(i >= 1 && i <= n);
    let target = i - 1;
    let mut terms: Vec<(FreeWord, BigInt)> = Vec::new();
    let mut prefix: Vec<Letter> = Vec::new();
    for &l in u.letters() {
        if l.gen == target {
            if l.exp == 1 {
                terms.push((
                    FreeWord {
                        n,
                        letters: prefix.clone(),
                    },
                    BigInt::one(),
                ));
            } else {
                let mut w = prefix.clone();
                w.push(l);
                terms.push((FreeWord { n, letters: w }, -BigInt::one()));
            }
        }
        // The prefix of a reduced word is reduced; no cancellation occurs.
        prefix.push(l);
    }
    GroupRingElement::from_terms(n, terms)
}

/// Which chain level a matrix acts on: `One` for the loop cells, `Two` for
/// the sphere cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainLevel {
    One,
    Two,
}

impl ChainLevel {
    pub fn label(self) -> &'static str {
        match self {
            ChainLevel::One => "A1",
            ChainLevel::Two => "A2",
        }
    }
}

/// A square matrix over the group ring `ZF_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMatrix {
    dim: usize,
    n: usize,
    entries: Vec<GroupRingElement>,
}

impl ChainMatrix {
    pub fn identity(dim: usize, n: usize) -> Self {
        Self::build(dim, n, |r, c| {
            if r == c {
                GroupRingElement::one(n)
            } else {
                GroupRingElement::zero(n)
            }
        })
    }

    pub fn build(
        dim: usize,
        n: usize,
        mut entry: impl FnMut(usize, usize) -> GroupRingElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                let e = entry(r, c);
                assert_eq!(e.rank(), n);
                entries.push(e);
            }
        }
        Self { dim, n, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &GroupRingElement {
        &self.entries[r * self.dim + c]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.n, other.n);
        Self::build(self.dim, self.n, |r, c| {
            let mut acc = GroupRingElement::zero(self.n);
            for t in 0..self.dim {
                acc = acc.add(&self.get(r, t).mul(other.get(t, c)));
            }
            acc
        })
    }

    /// Applies an automorphism to every entry.
    pub fn apply_aut(&self, a: &ConjAutomorphism) -> Self {
        Self::build(self.dim, self.n, |r, c| a.apply_ring(self.get(r, c)))
    }

    pub fn trace(&self) -> GroupRingElement {
        let mut acc = GroupRingElement::zero(self.n);
        for i in 0..self.dim {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Entrywise abelianization into a matrix over the Laurent ring.
    pub fn abelianize(&self) -> crate::rep::PolyMatrix {
        crate::rep::PolyMatrix::build(self.dim, self.n, |r, c| self.get(r, c).abelianize())
    }
}

fn embed_chain_block(n: usize, i: usize, block: [GroupRingElement; 4]) -> ChainMatrix {
    let mut m = ChainMatrix::identity(n, n);
    let base = i - 1;
    let [b00, b01, b10, b11] = block;
    m.entries[base * n + base] = b00;
    m.entries[base * n + base + 1] = b01;
    m.entries[(base + 1) * n + base] = b10;
    m.entries[(base + 1) * n + base + 1] = b11;
    m
}

/// The chain matrix of a single signed generator.
///
/// The positive blocks are the Fox Jacobians of the generator
/// automorphisms; the inverse `s` blocks are their symbolic 2×2 inverses
/// over `ZF_n` (the off-diagonal entries are single group words, hence
/// units), twisted so that `s<i> s<i>'` folds to the identity.
pub fn chain_gen_matrix(level: ChainLevel, g: Generator, n: usize) -> ChainMatrix {
    assert!(g.index < n, "generator index out of range");
    let i = g.index;
    let one = || GroupRingElement::one(n);
    let zero = || GroupRingElement::zero(n);
    let word = |letters: &[Letter]| {
        GroupRingElement::from_word(FreeWord::from_letters(n, letters.iter().copied()))
    };
    let xi = Letter::new(i - 1, 1);
    let xi_inv = Letter::new(i - 1, -1);
    let xnext = Letter::new(i, 1);
    let xnext_inv = Letter::new(i, -1);

    let block = match (g.kind, level, g.sign) {
        (GenKind::Rho, _, _) => [zero(), one(), one(), zero()],
        // [[1 - x_i x_{i+1} x_i^-1, x_i], [1, 0]]
        (GenKind::Sigma, ChainLevel::One, Sign::Pos) => [
            one().sub(&word(&[xi, xnext, xi_inv])),
            word(&[xi]),
            one(),
            zero(),
        ],
        // [[0, x_{i+1}], [1, 0]]^-1-style block: inverse of the twisted
        // positive block [[1 - x_i, x_{i+1}], [1, 0]], namely
        // [[0, 1], [x_{i+1}^-1, x_{i+1}^-1 x_i - x_{i+1}^-1]]
        (GenKind::Sigma, ChainLevel::One, Sign::Neg) => [
            zero(),
            one(),
            word(&[xnext_inv]),
            word(&[xnext_inv, xi]).sub(&word(&[xnext_inv])),
        ],
        // [[0, x_i], [1, 1 - x_i]]
        (GenKind::Sigma, ChainLevel::Two, Sign::Pos) => {
            [zero(), word(&[xi]), one(), one().sub(&word(&[xi]))]
        }
        // Inverse of the twisted block [[0, x_{i+1}], [1, 1 - x_{i+1}]]:
        // [[1 - x_{i+1}^-1, 1], [x_{i+1}^-1, 0]]
        (GenKind::Sigma, ChainLevel::Two, Sign::Neg) => [
            one().sub(&word(&[xnext_inv])),
            one(),
            word(&[xnext_inv]),
            zero(),
        ],
    };
    embed_chain_block(n, i, block)
}

/// Folds a word at the chain level. Each step applies the full conjugating
/// automorphism of the incoming generator to every entry before the
/// ordinary product:
///
/// ```text
/// M(w·g) = M(w)^{aut(g)} · A(g)
/// ```
pub fn chain_matrix_of_word(level: ChainLevel, w: &BraidWord) -> ChainMatrix {
    let n = w.n();
    let mut acc = ChainMatrix::identity(n, n);
    for &g in w.gens() {
        let aut = aut_of_generator(g, n);
        acc = acc.apply_aut(&aut).mul(&chain_gen_matrix(level, g, n));
    }
    acc
}

/// Checks every relation instance at strand count `n` for the chain-level
/// matrices, with exact equality over `ZF_n`.
pub fn verify_chain_relations(n: usize, levels: &[ChainLevel]) -> RelationReport {
    let mut report = RelationReport::default();
    for inst in relation_instances(n) {
        for &level in levels {
            let lhs = chain_matrix_of_word(level, &inst.lhs);
            let rhs = chain_matrix_of_word(level, &inst.rhs);
            report.checks.push(RelationCheck {
                label: inst.label(),
                representation: level.label(),
                pass: lhs == rhs,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{random_word, WordAlphabet};
    use crate::laurent::VariableMap;
    use crate::rep::{nu_of_perm, rep_of_word, RepKind};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fw(n: usize, letters: &[(usize, i8)]) -> FreeWord {
        FreeWord::from_letters(n, letters.iter().map(|&(g, e)| Letter::new(g - 1, e)))
    }

    fn random_free_word(rng: &mut StdRng, n: usize, max_len: usize) -> FreeWord {
        let len = rng.random_range(0..=max_len);
        FreeWord::from_letters(
            n,
            (0..len).map(|_| {
                Letter::new(
                    rng.random_range(0..n),
                    if rng.random_range(0..2) == 0 { 1 } else { -1 },
                )
            }),
        )
    }

    #[test]
    fn free_reduction_examples() {
        // x1 x2 x2^-1 x1 -> x1 x1
        assert_eq!(
            fw(2, &[(1, 1), (2, 1), (2, -1), (1, 1)]),
            fw(2, &[(1, 1), (1, 1)])
        );
        assert!(fw(2, &[(1, 1), (1, -1)]).is_identity());
        // Cascading reduction: x1 x2 x1^-1 x1 x2^-1 -> x1
        assert_eq!(
            fw(2, &[(1, 1), (2, 1), (1, -1), (1, 1), (2, -1)]),
            fw(2, &[(1, 1)])
        );
    }

    #[test]
    fn aut_of_generator_images() {
        let a = aut_of_generator(Generator::sigma(1), 2);
        assert_eq!(a.image(1), &fw(2, &[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(a.image(2), &fw(2, &[(1, 1)]));

        let a = aut_of_generator(Generator::rho(1), 2);
        assert_eq!(a.image(1), &fw(2, &[(2, 1)]));
        assert_eq!(a.image(2), &fw(2, &[(1, 1)]));
    }

    #[test]
    fn sigma_inverse_composes_to_identity() {
        for n in 2..=4 {
            for i in 1..n {
                let fwd = aut_of_generator(Generator::sigma(i), n);
                let bwd = aut_of_generator(Generator::sigma_inv(i), n);
                assert_eq!(fwd.then(&bwd), ConjAutomorphism::identity(n));
                assert_eq!(bwd.then(&fwd), ConjAutomorphism::identity(n));
            }
        }
    }

    #[test]
    fn compose_examples() {
        let s1 = aut_of_generator(Generator::sigma(1), 2);
        let twice = s1.then(&s1);
        assert_eq!(
            twice.image(1),
            &fw(2, &[(1, 1), (2, 1), (1, 1), (2, -1), (1, -1)])
        );
        assert_eq!(twice.image(2), &fw(2, &[(1, 1), (2, 1), (1, -1)]));

        assert_eq!(s1.then(&ConjAutomorphism::identity(2)), s1);
        let r1 = aut_of_generator(Generator::rho(1), 2);
        assert_eq!(r1.then(&r1), ConjAutomorphism::identity(2));
    }

    #[test]
    fn fox_derivative_examples() {
        let u = fw(2, &[(1, 1), (2, 1), (1, -1)]);
        let d1 = fox_derivative(&u, 1);
        assert_eq!(
            d1,
            GroupRingElement::one(2).sub(&GroupRingElement::from_word(u.clone()))
        );
        assert_eq!(d1.render(), "1 - x1 x2 x1^-1");
        let d2 = fox_derivative(&u, 2);
        assert_eq!(d2, GroupRingElement::from_word(fw(2, &[(1, 1)])));
        assert!(fox_derivative(&FreeWord::identity(2), 1).is_zero());
    }

    #[test]
    fn fundamental_fox_identity() {
        // u - 1 = sum_i (du/dx_i)(x_i - 1) in ZF_n.
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..200 {
            let n = rng.random_range(1..=4);
            let u = random_free_word(&mut rng, n, 8);
            let lhs = GroupRingElement::from_word(u.clone()).sub(&GroupRingElement::one(n));
            let mut rhs = GroupRingElement::zero(n);
            for i in 1..=n {
                let xi = GroupRingElement::from_word(FreeWord::generator(n, i))
                    .sub(&GroupRingElement::one(n));
                rhs = rhs.add(&fox_derivative(&u, i).mul(&xi));
            }
            assert_eq!(lhs, rhs, "u = {u}");
        }
    }

    #[test]
    fn chain_gen_matrix_displays() {
        let m = chain_gen_matrix(ChainLevel::One, Generator::sigma(1), 2);
        assert_eq!(m.get(0, 0).render(), "1 - x1 x2 x1^-1");
        assert_eq!(m.get(0, 1).render(), "x1");
        assert_eq!(m.get(1, 0).render(), "1");
        assert_eq!(m.get(1, 1).render(), "0");

        let m = chain_gen_matrix(ChainLevel::Two, Generator::sigma(1), 2);
        assert_eq!(m.get(0, 0).render(), "0");
        assert_eq!(m.get(0, 1).render(), "x1");
        assert_eq!(m.get(1, 0).render(), "1");
        assert_eq!(m.get(1, 1).render(), "1 - x1");

        let m = chain_gen_matrix(ChainLevel::One, Generator::rho(1), 2);
        assert_eq!(m.get(0, 0).render(), "0");
        assert_eq!(m.get(0, 1).render(), "1");
        assert_eq!(m.get(1, 0).render(), "1");
        assert_eq!(m.get(1, 1).render(), "0");
    }

    #[test]
    fn chain_fold_examples() {
        // s1 s1 in LB2.
        let m = chain_matrix_of_word(ChainLevel::One, &BraidWord::parse("s1 s1", 2).unwrap());
        assert_eq!(m.get(0, 0).render(), "1 + x1 x2 - x1 x2 x1 x2^-1 x1^-1");
        assert_eq!(m.get(1, 1).render(), "x1");

        for level in [ChainLevel::One, ChainLevel::Two] {
            assert_eq!(
                chain_matrix_of_word(level, &BraidWord::identity(3)),
                ChainMatrix::identity(3, 3)
            );
            assert_eq!(
                chain_matrix_of_word(level, &BraidWord::parse("r1 r1", 2).unwrap()),
                ChainMatrix::identity(2, 2)
            );
        }
    }

    #[test]
    fn chain_inverse_generators_cancel() {
        for level in [ChainLevel::One, ChainLevel::Two] {
            for text in ["s1 s1'", "s1' s1", "s2 s2'", "s2' s2"] {
                let w = BraidWord::parse(text, 3).unwrap();
                assert_eq!(
                    chain_matrix_of_word(level, &w),
                    ChainMatrix::identity(3, 3),
                    "{text}"
                );
            }
        }
    }

    #[test]
    fn abelianize_examples() {
        let w = fw(2, &[(1, 1), (2, 1), (1, 1), (2, -1), (1, -1)]);
        assert_eq!(
            GroupRingElement::from_word(w).abelianize(),
            LaurentPolynomial::variable(2, 1)
        );
        let e = GroupRingElement::one(2).sub(&GroupRingElement::from_word(fw(
            2,
            &[(1, 1), (2, 1), (1, -1)],
        )));
        assert_eq!(
            e.abelianize(),
            &LaurentPolynomial::one(2) - &LaurentPolynomial::variable(2, 2)
        );
        assert!(GroupRingElement::zero(2).abelianize().is_zero());
    }

    #[test]
    fn fox_jacobian_matches_chain_generator() {
        for n in 2..=4 {
            for i in 1..n {
                assert_eq!(
                    aut_of_generator(Generator::sigma(i), n).fox_jacobian(),
                    chain_gen_matrix(ChainLevel::One, Generator::sigma(i), n)
                );
                assert_eq!(
                    aut_of_generator(Generator::rho(i), n).fox_jacobian(),
                    chain_gen_matrix(ChainLevel::One, Generator::rho(i), n)
                );
            }
        }
        assert_eq!(
            ConjAutomorphism::identity(3).fox_jacobian(),
            ChainMatrix::identity(3, 3)
        );
    }

    #[test]
    fn conjugating_form_closed_under_composition() {
        let mut rng = StdRng::seed_from_u64(32);
        for _ in 0..100 {
            let n = rng.random_range(2..=4);
            let u = random_word(&mut rng, n, 5, WordAlphabet::Full);
            let v = random_word(&mut rng, n, 5, WordAlphabet::Full);
            let composite = aut_of_word(&u).then(&aut_of_word(&v));
            assert!(composite.is_conjugating_form());
            assert_eq!(
                composite.perm(),
                &u.concat(&v).unwrap().induced_permutation()
            );
        }
    }

    #[test]
    fn oracle_matches_rep_small_corpus() {
        let mut rng = StdRng::seed_from_u64(33);
        for _ in 0..60 {
            let n = rng.random_range(2..=4);
            let w = random_word(&mut rng, n, 5, WordAlphabet::Full);
            assert_eq!(
                chain_matrix_of_word(ChainLevel::One, &w).abelianize(),
                rep_of_word(RepKind::R, &w),
                "word {}",
                w.render()
            );
            assert_eq!(
                chain_matrix_of_word(ChainLevel::Two, &w).abelianize(),
                rep_of_word(RepKind::Rbar, &w),
                "word {}",
                w.render()
            );
        }
    }

    #[test]
    fn fox_chain_rule_consistency() {
        let mut rng = StdRng::seed_from_u64(34);
        for _ in 0..60 {
            let n = rng.random_range(2..=3);
            let w = random_word(&mut rng, n, 4, WordAlphabet::Full);
            assert_eq!(
                aut_of_word(&w).fox_jacobian().abelianize(),
                rep_of_word(RepKind::R, &w),
                "word {}",
                w.render()
            );
        }
    }

    #[test]
    fn abelianization_intertwines_automorphism_and_permutation() {
        let mut rng = StdRng::seed_from_u64(35);
        for _ in 0..100 {
            let n = rng.random_range(2..=4);
            let w = random_word(&mut rng, n, 5, WordAlphabet::Full);
            let aut = aut_of_word(&w);
            let nu = nu_of_perm(aut.perm());
            let e = GroupRingElement::from_terms(
                n,
                (0..4).map(|_| {
                    (
                        random_free_word(&mut rng, n, 5),
                        BigInt::from(rng.random_range(-3..=3i64)),
                    )
                }),
            );
            assert_eq!(
                aut.apply_ring(&e).abelianize(),
                e.abelianize().map_variables(&nu).unwrap()
            );
        }
    }

    #[test]
    fn chain_relations_hold_small() {
        for n in 2..=4 {
            let report = verify_chain_relations(n, &[ChainLevel::One, ChainLevel::Two]);
            assert!(
                report.all_pass(),
                "failures: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn render_free_words() {
        assert_eq!(fw(2, &[(1, 1), (2, 1), (1, -1)]).to_string(), "x1 x2 x1^-1");
        assert_eq!(FreeWord::identity(2).to_string(), "1");
    }

    #[test]
    fn variable_map_identity_check() {
        // nu for the identity permutation leaves polynomials alone.
        let nu = nu_of_perm(&Perm::identity(3));
        assert_eq!(nu, VariableMap::identity(3));
    }
}
