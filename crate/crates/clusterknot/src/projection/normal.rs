//! Rewriting of free generator words into scaled normal-form words.
//!
//! The relations are far commutation `e_i e_j = e_j e_i` for `|i-j| >= 2`,
//! the square rule `e_i e_i = alpha e_i`, and the sandwich rule
//! `e_i e_{i+-1} e_i = beta e_i`. Both scalar rules shorten the word, so
//! rewriting terminates; the scalars themselves are preset data, and this
//! engine only counts how often each rule fired.

use super::words::ReducedWord;

/// Rewrites a free word into `(squares, sandwiches, normal form)`.
///
/// The caller owes the result a scalar of `alpha^squares * beta^sandwiches`.
pub(super) fn reduce_word(letters: &[u8]) -> (u64, u64, ReducedWord) {
    let mut word: Vec<u8> = letters.to_vec();
    let mut squares = 0u64;
    let mut sandwiches = 0u64;
    'rewrite: loop {
        for p in 0..word.len() {
            let gen = word[p];
            let Some(offset) = word[p + 1..].iter().position(|&c| c == gen) else {
                continue;
            };
            let q = p + 1 + offset;
            let blockers: Vec<usize> = (p + 1..q)
                .filter(|&k| word[k].abs_diff(gen) == 1)
                .collect();
            match blockers.as_slice() {
                [] => {
                    // Everything between the pair commutes with e_gen, so the
                    // pair meets and collapses: remove the first copy.
                    squares += 1;
                    word.remove(p);
                    continue 'rewrite;
                }
                [mid] => {
                    // Exactly one neighbor letter sits between the pair; the
                    // rest commutes out, leaving e_i e_j e_i = beta e_i.
                    sandwiches += 1;
                    word.remove(q);
                    word.remove(*mid);
                    continue 'rewrite;
                }
                _ => {}
            }
        }
        break;
    }
    let linear = lex_min_linearization(&word);
    let runs = parse_runs(&linear);
    validate_runs(&runs, letters);
    (squares, sandwiches, ReducedWord { runs })
}

fn commutes(a: u8, b: u8) -> bool {
    a.abs_diff(b) >= 2
}

/// The lexicographically smallest word reachable by far commutation alone.
fn lex_min_linearization(word: &[u8]) -> Vec<u8> {
    let mut rest = word.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<(u8, usize)> = None;
        'candidates: for k in 0..rest.len() {
            let c = rest[k];
            for &b in &rest[..k] {
                if !commutes(b, c) {
                    continue 'candidates;
                }
            }
            if best.map_or(true, |(letter, _)| c < letter) {
                best = Some((c, k));
            }
        }
        let (_, k) = best.expect("a front letter is always available");
        out.push(rest.remove(k));
    }
    out
}

/// Greedy parse into descending runs: a run keeps absorbing letters while
/// each is one below the previous.
fn parse_runs(linear: &[u8]) -> Vec<(u8, u8)> {
    let mut runs = Vec::new();
    let mut idx = 0;
    while idx < linear.len() {
        let top = linear[idx];
        let mut bottom = top;
        idx += 1;
        while idx < linear.len() && linear[idx] + 1 == bottom {
            bottom = linear[idx];
            idx += 1;
        }
        runs.push((top, bottom));
    }
    runs
}

fn validate_runs(runs: &[(u8, u8)], input: &[u8]) {
    let well_formed = runs
        .windows(2)
        .all(|pair| pair[0].0 < pair[1].0 && pair[0].1 < pair[1].1);
    assert!(
        well_formed,
        "irreducible word {input:?} did not linearize to a normal-form word; runs {runs:?}"
    );
}
