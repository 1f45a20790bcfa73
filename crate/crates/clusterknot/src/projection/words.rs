//! Jones normal-form words: the Catalan-indexed basis of the projection algebra.
//!
//! A basis word is a product of descending runs `e_i e_{i-1} ... e_j` whose run
//! tops and run bottoms are both strictly increasing. The empty product is the
//! identity. For generators `e_1 ... e_{n-1}` these words number exactly the
//! n-th Catalan number.

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// A product of descending generator runs in normal form.
///
/// Each run `(top, bottom)` with `bottom <= top` stands for the factor
/// `e_top e_{top-1} ... e_bottom`. Run tops and run bottoms are strictly
/// increasing across the word; an empty run list is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    pub(super) runs: Vec<(u8, u8)>,
}

impl ReducedWord {
    /// The empty product.
    pub fn identity() -> Self {
        ReducedWord { runs: Vec::new() }
    }

    /// Builds a word from explicit runs, validating the normal-form shape.
    pub fn from_runs(runs: Vec<(u8, u8)>) -> Result<Self, AlgebraError> {
        for &(top, bottom) in &runs {
            if bottom == 0 || bottom > top {
                return Err(AlgebraError::InvalidRuns(format!(
                    "run ({top}, {bottom}) is not a descending run with positive indices"
                )));
            }
        }
        for pair in runs.windows(2) {
            let ((t0, b0), (t1, b1)) = (pair[0], pair[1]);
            if t1 <= t0 || b1 <= b0 {
                return Err(AlgebraError::InvalidRuns(format!(
                    "runs ({t0}, {b0}) and ({t1}, {b1}) violate strictly increasing tops and bottoms"
                )));
            }
        }
        Ok(ReducedWord { runs })
    }

    /// The descending runs of the word.
    pub fn runs(&self) -> &[(u8, u8)] {
        &self.runs
    }

    /// The generator indices of the word, run by run.
    pub fn letters(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len());
        for &(top, bottom) in &self.runs {
            for i in (bottom..=top).rev() {
                out.push(i);
            }
        }
        out
    }

    /// Total number of generator letters.
    pub fn len(&self) -> usize {
        self.runs
            .iter()
            .map(|&(top, bottom)| (top - bottom) as usize + 1)
            .sum()
    }

    /// True for the identity word.
    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// True for the identity word.
    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Largest generator index used, or 0 for the identity.
    pub fn max_generator(&self) -> u8 {
        self.runs.last().map_or(0, |&(top, _)| top)
    }

    /// JSON form `{"runs": [[top, bottom], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "runs": self.runs })
    }

    /// Parses the JSON form produced by [`ReducedWord::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<Self, AlgebraError> {
        let parsed: ReducedWord = serde_json::from_value(value.clone())
            .map_err(|e| AlgebraError::InvalidRuns(e.to_string()))?;
        Self::from_runs(parsed.runs)
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.runs.cmp(&other.runs))
    }
}

impl std::fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "1");
        }
        for (idx, &(top, bottom)) in self.runs.iter().enumerate() {
            if idx > 0 {
                write!(f, "\u{b7}")?;
            }
            for i in (bottom..=top).rev() {
                write!(f, "e{i}")?;
            }
        }
        Ok(())
    }
}

/// The n-th Catalan number.
pub fn catalan(n: usize) -> u128 {
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for m in 1..=n {
        for i in 0..m {
            c[m] += c[i] * c[m - 1 - i];
        }
    }
    c[n]
}

/// All normal-form words over generators `e_1 ... e_{n-1}`, sorted by
/// (length, runs). The count is the n-th Catalan number.
pub fn reduced_words(n: usize) -> Vec<ReducedWord> {
    assert!(n >= 1, "generator bound must be at least 1");
    let max = (n - 1) as u8;
    let mut out = Vec::new();
    let mut acc: Vec<(u8, u8)> = Vec::new();
    enumerate_runs(max, 1, 1, &mut acc, &mut out);
    out.sort();
    out
}

fn enumerate_runs(
    max: u8,
    min_top: u8,
    min_bottom: u8,
    acc: &mut Vec<(u8, u8)>,
    out: &mut Vec<ReducedWord>,
) {
    out.push(ReducedWord { runs: acc.clone() });
    for top in min_top..=max {
        for bottom in min_bottom..=top {
            acc.push((top, bottom));
            enumerate_runs(max, top + 1, bottom + 1, acc, out);
            acc.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let got: Vec<u128> = (1..=8).map(catalan).collect();
        assert_eq!(got, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn enumeration_matches_catalan() {
        for n in 1..=6 {
            assert_eq!(reduced_words(n).len() as u128, catalan(n), "n = {n}");
        }
    }

    #[test]
    fn basis_order_for_three_strands() {
        let words: Vec<String> = reduced_words(3).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["1", "e1", "e2", "e1\u{b7}e2", "e2e1"]);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        for n in 1..=6 {
            let words = reduced_words(n);
            for pair in words.windows(2) {
                assert!(pair[0] < pair[1]);
            }
        }
    }

    #[test]
    fn display_joins_runs() {
        let w = ReducedWord::from_runs(vec![(3, 1), (5, 4)]).unwrap();
        assert_eq!(w.to_string(), "e3e2e1\u{b7}e5e4");
        assert_eq!(ReducedWord::identity().to_string(), "1");
    }

    #[test]
    fn letters_expand_runs() {
        let w = ReducedWord::from_runs(vec![(2, 1), (3, 3)]).unwrap();
        assert_eq!(w.letters(), vec![2, 1, 3]);
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn from_runs_rejects_bad_shapes() {
        assert!(ReducedWord::from_runs(vec![(1, 2)]).is_err());
        assert!(ReducedWord::from_runs(vec![(2, 0)]).is_err());
        assert!(ReducedWord::from_runs(vec![(2, 1), (3, 1)]).is_err());
        assert!(ReducedWord::from_runs(vec![(3, 1), (2, 2)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let w = ReducedWord::from_runs(vec![(2, 1), (4, 3)]).unwrap();
        let back = ReducedWord::from_json(&w.to_json()).unwrap();
        assert_eq!(w, back);
        assert_eq!(w.to_json().to_string(), "{\"runs\":[[2,1],[4,3]]}");
    }
}
