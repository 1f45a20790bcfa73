//! Braid words on a fixed number of strands.
//!
//! A word is a sequence of nonzero letters: letter `i > 0` is the positive
//! generator crossing strand `i` over strand `i+1`, and `-i` is its
//! inverse. Strands are numbered from 1, so a word on `n` strands uses
//! letters with absolute value at most `n - 1`.
//!
//! The text syntax accepts whitespace-separated terms like `s1`, `s2^-1`,
//! `-2`, or `1^3`: a generator is written `s<k>` or as the signed integer
//! `<k>` directly, with an optional `^<exp>` power. [`BraidWord`] prints in
//! the same syntax with consecutive equal letters compressed to a power, so
//! parsing its own output round-trips.

use thiserror::Error;

/// Largest allowed magnitude for a `^` exponent in the text syntax. Guards
/// against accidentally materializing enormous words.
const MAX_EXPONENT: i64 = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator index {idx} out of range for {strands} strands")]
    Index { idx: i64, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates that every letter fits the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::Index { idx: 0, strands });
        }
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > strands.saturating_sub(1) {
                return Err(BraidError::Index { idx: l as i64, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    pub fn parse(strands: usize, src: &str) -> Result<Self, BraidError> {
        let bytes = src.as_bytes();
        let mut i = 0usize;
        let mut letters = Vec::new();
        let read_int = |bytes: &[u8], mut j: usize| -> Result<(i64, usize), BraidError> {
            let start = j;
            let neg = j < bytes.len() && bytes[j] == b'-';
            if neg {
                j += 1;
            }
            let digits_start = j;
            let mut value: i64 = 0;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((bytes[j] - b'0') as i64))
                    .ok_or(BraidError::Syntax { pos: start, msg: "number too large".into() })?;
                j += 1;
            }
            if j == digits_start {
                return Err(BraidError::Syntax { pos: j, msg: "expected a number".into() });
            }
            Ok((if neg { -value } else { value }, j))
        };
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            // Generator: either `s<index>` or a signed index.
            let gen: i64;
            if bytes[i] == b's' {
                let (v, j) = read_int(bytes, i + 1)?;
                if v < 0 {
                    return Err(BraidError::Syntax {
                        pos: i + 1,
                        msg: "use -s<k> spelled as -<k>, or s<k>^-1".into(),
                    });
                }
                gen = v;
                i = j;
            } else {
                let (v, j) = read_int(bytes, i)?;
                gen = v;
                i = j;
            }
            let idx = gen.unsigned_abs() as i64;
            if idx == 0 || idx as usize > strands.saturating_sub(1) {
                return Err(BraidError::Index { idx: gen, strands });
            }
            let mut exp: i64 = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                let (v, j) = read_int(bytes, i + 1)?;
                if v.abs() > MAX_EXPONENT {
                    return Err(BraidError::Syntax { pos: i + 1, msg: "exponent too large".into() });
                }
                exp = v;
                i = j;
            }
            if i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                return Err(BraidError::Syntax {
                    pos: i,
                    msg: format!("unexpected character {:?}", bytes[i] as char),
                });
            }
            let letter = if exp < 0 { -(gen as i32) } else { gen as i32 };
            for _ in 0..exp.unsigned_abs() {
                letters.push(letter);
            }
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().is_some_and(|&top| top == -l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The conjugate `g · self · g⁻¹`.
    pub fn conjugate(&self, g: &Self) -> Result<Self, BraidError> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Markov stabilization: embeds into one more strand and appends the
    /// new top generator with the given sign.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let top = self.strands as i32;
        letters.push(if positive { top } else { -top });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Where each strand position ends up after running the word top to
    /// bottom: `perm[i]` is the final position of the strand starting at
    /// position `i` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            // The sign does not matter for the underlying permutation.
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }

    /// Number of components of the closed-up braid: cycles of the strand
    /// permutation.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let idx = l.unsigned_abs();
            match (l > 0, run) {
                (true, 1) => write!(f, "s{}", idx)?,
                (true, _) => write!(f, "s{}^{}", idx, run)?,
                (false, 1) => write!(f, "s{}^-1", idx)?,
                (false, _) => write!(f, "s{}^-{}", idx, run)?,
            }
            i += run;
        }
        if first {
            // The empty word still needs a spelling; parse accepts "".
            f.write_str("")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_accepts_both_generator_spellings() {
        let a = BraidWord::parse(3, "s1 s2^-1 s1").unwrap();
        let b = BraidWord::parse(3, "1 -2 1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.letters(), &[1, -2, 1]);
    }

    #[test]
    fn parse_powers_expand() {
        let w = BraidWord::parse(2, "s1^3").unwrap();
        assert_eq!(w.letters(), &[1, 1, 1]);
        let w = BraidWord::parse(2, "s1^-2").unwrap();
        assert_eq!(w.letters(), &[-1, -1]);
        let w = BraidWord::parse(2, "-1^-2").unwrap();
        assert_eq!(w.letters(), &[1, 1]);
        let w = BraidWord::parse(2, "s1^0").unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn parse_reports_positions() {
        match BraidWord::parse(3, "s1 sx") {
            Err(BraidError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        assert_eq!(
            BraidWord::parse(2, "s2"),
            Err(BraidError::Index { idx: 2, strands: 2 })
        );
        assert_eq!(
            BraidWord::parse(3, "0"),
            Err(BraidError::Index { idx: 0, strands: 3 })
        );
    }

    #[test]
    fn display_compresses_runs() {
        let w = BraidWord::new(3, vec![1, 1, 1, -2, -2, 1]).unwrap();
        assert_eq!(w.to_string(), "s1^3 s2^-2 s1");
        assert_eq!(BraidWord::identity(4).to_string(), "");
    }

    #[test]
    fn free_reduce_cancels_pairs() {
        let w = BraidWord::new(3, vec![1, 2, -2, -1, 2]).unwrap();
        assert_eq!(w.free_reduce().letters(), &[2]);
        let w = BraidWord::new(2, vec![1, -1]).unwrap();
        assert!(w.free_reduce().is_empty());
    }

    #[test]
    fn closure_component_counts() {
        // Trefoil: one component. Hopf link: two.
        assert_eq!(BraidWord::parse(2, "s1^3").unwrap().closure_components(), 1);
        assert_eq!(BraidWord::parse(2, "s1^2").unwrap().closure_components(), 2);
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
    }

    #[test]
    fn conjugate_and_stabilize_shapes() {
        let w = BraidWord::parse(3, "s1 s2").unwrap();
        let g = BraidWord::parse(3, "s2").unwrap();
        let c = w.conjugate(&g).unwrap();
        assert_eq!(c.letters(), &[2, 1, 2, -2]);
        let s = w.stabilize(false);
        assert_eq!(s.strands(), 4);
        assert_eq!(s.letters(), &[1, 2, -3]);
    }

    #[test]
    fn permutation_tracks_strand_positions() {
        let w = BraidWord::parse(3, "s1 s2").unwrap();
        // Strand at position 0 crosses to 1, then to 2.
        assert_eq!(w.permutation(), vec![2, 0, 1]);
    }

    fn arb_word() -> impl Strategy<Value = BraidWord> {
        (2usize..5).prop_flat_map(|n| {
            let letter = (1i32..n as i32).prop_flat_map(|i| {
                prop_oneof![Just(i), Just(-i)]
            });
            proptest::collection::vec(letter, 0..12)
                .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trips(w in arb_word()) {
            let printed = w.to_string();
            let back = BraidWord::parse(w.strands(), &printed).unwrap();
            prop_assert_eq!(back, w);
        }

        #[test]
        fn free_reduce_preserves_closure_data(w in arb_word()) {
            let r = w.free_reduce();
            prop_assert_eq!(r.permutation(), w.permutation());
            prop_assert_eq!(r.writhe(), w.writhe());
            prop_assert_eq!(&r.free_reduce(), &r);
        }

        #[test]
        fn inverse_reduces_to_identity(w in arb_word()) {
            let prod = w.concat(&w.inverse()).unwrap();
            prop_assert!(prod.free_reduce().is_empty());
        }
    }
}
