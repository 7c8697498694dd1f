//! Deterministic word corpora for verification runs, tests and benches:
//! seeded random words and exhaustive enumeration by length.

use rand::Rng;

use crate::braidword::{BraidWord, Generator};

/// Which generators a corpus draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordAlphabet {
    /// All of `s<i>`, `s<i>'`, `r<i>`.
    Full,
    /// Only `r<i>` generators.
    RhoOnly,
    /// Only `s<i>` and `s<i>'` generators.
    SigmaOnly,
}

fn alphabet(n: usize, which: WordAlphabet) -> Vec<Generator> {
    let mut letters = Vec::new();
    for i in 1..n {
        match which {
            WordAlphabet::Full => {
                letters.push(Generator::sigma(i));
                letters.push(Generator::sigma_inv(i));
                letters.push(Generator::rho(i));
            }
            WordAlphabet::RhoOnly => letters.push(Generator::rho(i)),
            WordAlphabet::SigmaOnly => {
                letters.push(Generator::sigma(i));
                letters.push(Generator::sigma_inv(i));
            }
        }
    }
    letters
}

/// A random word of length uniform in `0..=max_len`. For `n == 1` the only
/// word is the identity.
pub fn random_word<R: Rng>(
    rng: &mut R,
    n: usize,
    max_len: usize,
    which: WordAlphabet,
) -> BraidWord {
    let letters = alphabet(n, which);
    if letters.is_empty() {
        return BraidWord::identity(n);
    }
    let len = rng.random_range(0..=max_len);
    let gens = (0..len)
        .map(|_| letters[rng.random_range(0..letters.len())])
        .collect();
    BraidWord::new(n, gens).expect("alphabet letters are in range")
}

/// A random nonempty word (length uniform in `1..=max_len`).
pub fn random_nonempty_word<R: Rng>(
    rng: &mut R,
    n: usize,
    max_len: usize,
    which: WordAlphabet,
) -> BraidWord {
    let letters = alphabet(n, which);
    if letters.is_empty() {
        return BraidWord::identity(n);
    }
    let len = rng.random_range(1..=max_len.max(1));
    let gens = (0..len)
        .map(|_| letters[rng.random_range(0..letters.len())])
        .collect();
    BraidWord::new(n, gens).expect("alphabet letters are in range")
}

/// A random word whose induced permutation is a single n-cycle, found by
/// rejection sampling.
pub fn random_single_cycle_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    assert!(n >= 2, "a single n-cycle needs at least two circles");
    loop {
        let w = random_nonempty_word(rng, n, max_len, WordAlphabet::Full);
        if w.induced_permutation().cycle_decomposition().m() == 1 {
            return w;
        }
    }
}

/// All words of exactly the given length, in a fixed enumeration order
/// (per index: `s<i>`, `s<i>'`, `r<i>`).
pub fn words_of_length(n: usize, len: usize, which: WordAlphabet) -> Vec<BraidWord> {
    let letters = alphabet(n, which);
    if len == 0 {
        return vec![BraidWord::identity(n)];
    }
    if letters.is_empty() {
        return Vec::new();
    }
    let mut words = Vec::with_capacity(letters.len().pow(len as u32));
    let mut indices = vec![0usize; len];
    loop {
        let gens: Vec<Generator> = indices.iter().map(|&i| letters[i]).collect();
        words.push(BraidWord::new(n, gens).expect("alphabet letters are in range"));
        // Odometer increment.
        let mut pos = len;
        loop {
            if pos == 0 {
                return words;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < letters.len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

/// All words of length `0..=max_len`, shortest first.
pub fn words_up_to_length(n: usize, max_len: usize, which: WordAlphabet) -> Vec<BraidWord> {
    let mut words = Vec::new();
    for len in 0..=max_len {
        words.extend(words_of_length(n, len, which));
    }
    words
}
