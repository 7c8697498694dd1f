//! Shared fixtures for the benchmarks: deterministic words that exercise
//! the heavy paths (coefficient growth under the twisted fold, group-ring
//! products, report assembly).

use loopbraid::BraidWord;

/// A fixed word cycling through all generator kinds, of the given length.
pub fn mixed_word(n: usize, len: usize) -> BraidWord {
    assert!(n >= 3);
    let pattern = ["s1", "s2'", "r1", "s1", "r2", "s2"];
    let text = (0..len)
        .map(|i| pattern[i % pattern.len()])
        .collect::<Vec<_>>()
        .join(" ");
    BraidWord::parse(&text, n).expect("fixture parses")
}

/// A positive power of the full twist-like word `s1 s2 .. s(n-1)`.
pub fn coil_word(n: usize, repeats: usize) -> BraidWord {
    let text = (1..n)
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ");
    BraidWord::parse(&text, n)
        .expect("fixture parses")
        .repeat(repeats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_lengths() {
        assert_eq!(mixed_word(4, 12).len(), 12);
        assert_eq!(coil_word(5, 4).len(), 16);
        assert!(loopbraid::lefschetz_report(&mixed_word(3, 6)).is_ok());
    }
}
