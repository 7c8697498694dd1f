//! Loop braid words: parsing, validation, induced permutations and their
//! cycle decompositions.
//!
//! A word is a sequence of signed generators of the loop braid group on `n`
//! circles: `s<i>` passes circle i through circle i+1, `r<i>` swaps them
//! around each other. The grammar accepts ASCII (`s1`, `r2`) and Unicode
//! (`σ1`, `ρ2`) names, an apostrophe or `^-1` for inverses, and integer
//! powers as sugar (`s1^-2` is `s1' s1'`). Since each `r` generator is an
//! involution, its inverses are normalized away at parse time.
//!
//! Concatenation is read left to right: the leftmost generator acts first.
//! Every fold in this crate (permutations, conjugating automorphisms,
//! twisted matrix products) uses this one convention.

use std::fmt;

use thiserror::Error;

/// Generator kind: `Sigma` (pass-through) or `Rho` (swap).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenKind {
    Sigma,
    Rho,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One signed generator. `index` is 1-based; a generator with index `i`
/// acts on circles `i` and `i+1`. Rho generators always carry `Sign::Pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
    pub sign: Sign,
}

impl Generator {
    pub fn new(kind: GenKind, index: usize, sign: Sign) -> Self {
        assert!(index >= 1, "generator index is 1-based");
        let sign = match kind {
            GenKind::Rho => Sign::Pos,
            GenKind::Sigma => sign,
        };
        Self { kind, index, sign }
    }

    pub fn sigma(index: usize) -> Self {
        Self::new(GenKind::Sigma, index, Sign::Pos)
    }

    pub fn sigma_inv(index: usize) -> Self {
        Self::new(GenKind::Sigma, index, Sign::Neg)
    }

    pub fn rho(index: usize) -> Self {
        Self::new(GenKind::Rho, index, Sign::Pos)
    }

    pub fn inverse(self) -> Self {
        Self::new(self.kind, self.index, self.sign.flip())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            GenKind::Sigma => 's',
            GenKind::Rho => 'r',
        };
        write!(f, "{letter}{}", self.index)?;
        if self.sign == Sign::Neg {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// Errors from parsing or validating a word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {position}: {message} (near `{token}`)")]
    Syntax {
        position: usize,
        token: String,
        message: String,
    },
    #[error("index out of range at position {position}: token `{token}` has index {index}, valid range is 1..={max} for n = {n}")]
    IndexOutOfRange {
        position: usize,
        token: String,
        index: usize,
        n: usize,
        max: usize,
    },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
}

/// A validated word in the loop braid group on `n` circles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    gens: Vec<Generator>,
}

impl BraidWord {
    /// The empty (identity) word.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            n,
            gens: Vec::new(),
        }
    }

    pub fn new(n: usize, gens: Vec<Generator>) -> Result<Self, WordError> {
        assert!(n >= 1);
        for g in &gens {
            if g.index >= n {
                return Err(WordError::IndexOutOfRange {
                    position: 0,
                    token: g.to_string(),
                    index: g.index,
                    n,
                    max: n.saturating_sub(1),
                });
            }
        }
        Ok(Self { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Parses the word grammar. See the module docs for the syntax.
    pub fn parse(text: &str, n: usize) -> Result<Self, WordError> {
        assert!(n >= 1, "strand count must be at least 1");
        let mut gens = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0usize;
        while pos < chars.len() {
            if chars[pos].is_whitespace() {
                pos += 1;
                continue;
            }
            let start = pos;
            let kind = match chars[pos] {
                's' | 'σ' => GenKind::Sigma,
                'r' | 'ρ' => GenKind::Rho,
                other => {
                    return Err(WordError::Syntax {
                        position: start + 1,
                        token: other.to_string(),
                        message: "expected generator letter s, r, σ or ρ".to_string(),
                    })
                }
            };
            pos += 1;
            let digits_start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits_start {
                let token: String = chars[start..(pos + 1).min(chars.len())].iter().collect();
                return Err(WordError::Syntax {
                    position: start + 1,
                    token,
                    message: "expected generator index after letter".to_string(),
                });
            }
            let index: usize = chars[digits_start..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| WordError::Syntax {
                    position: start + 1,
                    token: chars[start..pos].iter().collect(),
                    message: "generator index does not fit in a machine integer".to_string(),
                })?;

            // Optional suffix: `'` or `^<signed integer>`.
            let mut power: i64 = 1;
            if pos < chars.len() && chars[pos] == '\'' {
                power = -1;
                pos += 1;
            } else if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let sign_start = pos;
                if pos < chars.len() && (chars[pos] == '-' || chars[pos] == '+') {
                    pos += 1;
                }
                let num_start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == num_start {
                    let token: String = chars[start..(pos + 1).min(chars.len())].iter().collect();
                    return Err(WordError::Syntax {
                        position: start + 1,
                        token,
                        message: "expected integer exponent after `^`".to_string(),
                    });
                }
                power = chars[sign_start..pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| WordError::Syntax {
                        position: start + 1,
                        token: chars[start..pos].iter().collect(),
                        message: "exponent does not fit in a machine integer".to_string(),
                    })?;
            }

            let token: String = chars[start..pos].iter().collect();
            if index == 0 || index >= n {
                return Err(WordError::IndexOutOfRange {
                    position: start + 1,
                    token,
                    index,
                    n,
                    max: n.saturating_sub(1),
                });
            }
            let sign = if power < 0 { Sign::Neg } else { Sign::Pos };
            for _ in 0..power.unsigned_abs() {
                gens.push(Generator::new(kind, index, sign));
            }
        }
        Ok(Self { n, gens })
    }

    /// Canonical ASCII rendering; `parse(render(w), n) == w`.
    pub fn render(&self) -> String {
        self.gens
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The formal inverse: reversed order with inverted signs.
    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            gens: self.gens.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self, WordError> {
        if self.n != other.n {
            return Err(WordError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(Self { n: self.n, gens })
    }

    pub fn repeat(&self, times: usize) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * times);
        for _ in 0..times {
            gens.extend_from_slice(&self.gens);
        }
        Self { n: self.n, gens }
    }

    /// Reverses the generator order and replaces each index i by n - i,
    /// keeping kinds and signs.
    pub fn mirror_reverse(&self) -> Self {
        Self {
            n: self.n,
            gens: self
                .gens
                .iter()
                .rev()
                .map(|g| Generator::new(g.kind, self.n - g.index, g.sign))
                .collect(),
        }
    }

    /// The permutation induced on the circles: each generator contributes
    /// the transposition (i, i+1) regardless of kind and sign, applied in
    /// word order (leftmost first).
    pub fn induced_permutation(&self) -> Perm {
        let mut images: Vec<usize> = (0..self.n).collect();
        for g in &self.gens {
            let (a, b) = (g.index - 1, g.index);
            for img in images.iter_mut() {
                if *img == a {
                    *img = b;
                } else if *img == b {
                    *img = a;
                }
            }
        }
        Perm { images }
    }
}

/// A permutation of `{0, .., n-1}` (circles are displayed 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            assert!(img < n && !seen[img], "images must form a bijection");
            seen[img] = true;
        }
        Self { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Perm { images }
    }

    /// Composition: apply `self` first, then `next`.
    pub fn then(&self, next: &Perm) -> Perm {
        assert_eq!(self.n(), next.n());
        Perm {
            images: self.images.iter().map(|&i| next.images[i]).collect(),
        }
    }

    /// Canonical cycle decomposition: every cycle starts at its minimum
    /// element and cycles are sorted by that minimum. The j-th cycle
    /// defines the variable `t_{j+1}` of the projected polynomial ring.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        // Scanning from 0 upward already yields min-first rotation and
        // min-sorted cycle order.
        let mut cycle_of = vec![0; n];
        for (j, cycle) in cycles.iter().enumerate() {
            for &i in cycle {
                cycle_of[i] = j;
            }
        }
        CycleDecomposition {
            n,
            cycles,
            cycle_of,
        }
    }

    /// Cycle notation with 1-based entries, e.g. `(1 2)(3 4)`; the identity
    /// renders as `()`.
    pub fn render_cycles(&self) -> String {
        let cd = self.cycle_decomposition();
        let nontrivial: Vec<String> = cd
            .cycles()
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner = c
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                format!("({inner})")
            })
            .collect();
        if nontrivial.is_empty() {
            "()".to_string()
        } else {
            nontrivial.join("")
        }
    }
}

/// The cycles of a permutation, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
    cycle_of: Vec<usize>,
}

impl CycleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cycles, i.e. the number of variables after projection.
    pub fn m(&self) -> usize {
        self.cycles.len()
    }

    /// Cycles with 0-based members.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// 0-based index of the cycle containing circle `i` (0-based).
    pub fn cycle_of(&self, i: usize) -> usize {
        self.cycle_of[i]
    }

    /// Length of the cycle containing circle `i` (0-based); this is the
    /// minimal period of that circle.
    pub fn period_of(&self, i: usize) -> usize {
        self.cycles[self.cycle_of[i]].len()
    }
}
