//! Skein recursion for Jones and Homfly values of braid closures.
//!
//! The engine walks the closure of a braid, component by component from
//! the smallest top column, and looks for the first crossing whose first
//! visit passes over the other strand. A closure with no such crossing is
//! descending and unknots to an unlink, which has a known value. Anywhere
//! else the crossing is resolved two ways, switch and smooth, and the
//! exchange relation of the chosen invariant combines the child values.
//! Jones values live in the variable `s` with `s^2 = t`; Homfly values in
//! `l` and `m`.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::laurent::LaurentPoly;

mod bracket;

pub use bracket::{jones_via_bracket, kauffman_bracket};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SkeinError {
    #[error("braid word has {len} crossings after reduction, over the limit {limit}")]
    LimitExceeded { len: usize, limit: usize },
    #[error("exponent {0} of the bracket variable is odd, so the value has no expansion in s")]
    NonHalfIntegerPower(i64),
}

/// Tunables for the recursion. `limit` caps the crossing count of the
/// reduced input word; the environment variable `CK_LIMIT` overrides the
/// default of 16.
#[derive(Clone, Copy, Debug)]
pub struct SkeinOptions {
    pub limit: usize,
}

impl Default for SkeinOptions {
    fn default() -> Self {
        let limit = std::env::var("CK_LIMIT")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(16);
        SkeinOptions { limit }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flavor {
    Jones,
    Homfly,
}

fn mono(coeff: i64, powers: &[(&str, i64)]) -> LaurentPoly {
    LaurentPoly::monomial(BigRational::from_integer(coeff.into()), powers)
}

impl Flavor {
    /// Exchange coefficients `(switch, smooth)` for a crossing of the
    /// given sign.
    fn resolve_coeffs(self, positive: bool) -> (LaurentPoly, LaurentPoly) {
        match (self, positive) {
            (Flavor::Jones, true) => (
                mono(1, &[("s", -4)]),
                &mono(1, &[("s", -3)]) - &mono(1, &[("s", -1)]),
            ),
            (Flavor::Jones, false) => (
                mono(1, &[("s", 4)]),
                &mono(1, &[("s", 3)]) - &mono(1, &[("s", 1)]),
            ),
            (Flavor::Homfly, true) => (
                mono(-1, &[("l", 2)]),
                mono(-1, &[("l", 1), ("m", 1)]),
            ),
            (Flavor::Homfly, false) => (
                mono(-1, &[("l", -2)]),
                mono(-1, &[("l", -1), ("m", 1)]),
            ),
        }
    }

    /// Value of one extra unknotted, unlinked component.
    fn unlink_factor(self) -> LaurentPoly {
        match self {
            Flavor::Jones => &mono(-1, &[("s", 1)]) + &mono(-1, &[("s", -1)]),
            Flavor::Homfly => {
                &mono(-1, &[("l", 1), ("m", -1)]) + &mono(-1, &[("l", -1), ("m", -1)])
            }
        }
    }
}

/// Finds the first crossing, in closure traversal order, whose first
/// visit runs over the other strand. Components are walked from their
/// smallest top column downwards; the closure returns each bottom
/// position to the same top position.
fn first_bad_crossing(strands: usize, letters: &[i32]) -> Option<usize> {
    let mut seen = vec![false; letters.len()];
    let mut started = vec![false; strands + 1];
    for component_start in 1..=strands {
        if started[component_start] {
            continue;
        }
        let mut pos = component_start;
        loop {
            started[pos] = true;
            for (idx, &letter) in letters.iter().enumerate() {
                let i = letter.unsigned_abs() as usize;
                if pos != i && pos != i + 1 {
                    continue;
                }
                let over = (letter > 0) == (pos == i);
                if !seen[idx] {
                    seen[idx] = true;
                    if over {
                        return Some(idx);
                    }
                }
                pos = if pos == i { i + 1 } else { i };
            }
            if pos == component_start {
                break;
            }
        }
    }
    None
}

struct Engine {
    flavor: Flavor,
    memo: HashMap<(usize, Vec<i32>), LaurentPoly>,
}

impl Engine {
    fn new(flavor: Flavor) -> Self {
        Engine {
            flavor,
            memo: HashMap::new(),
        }
    }

    fn value(&mut self, braid: &BraidWord) -> LaurentPoly {
        let key = (braid.strands(), braid.letters().to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let value = match first_bad_crossing(braid.strands(), braid.letters()) {
            None => {
                let extra = braid.closure_components() - 1;
                self.flavor.unlink_factor().pow(extra as u32)
            }
            Some(idx) => {
                let letters = braid.letters();
                let positive = letters[idx] > 0;
                let mut switched = letters.to_vec();
                switched[idx] = -switched[idx];
                let mut smoothed = letters.to_vec();
                smoothed.remove(idx);
                let switched = BraidWord::new(braid.strands(), switched)
                    .expect("letters stay in range")
                    .free_reduce();
                let smoothed = BraidWord::new(braid.strands(), smoothed)
                    .expect("letters stay in range")
                    .free_reduce();
                let switch_value = self.value(&switched);
                let smooth_value = self.value(&smoothed);
                let (switch_coeff, smooth_coeff) = self.flavor.resolve_coeffs(positive);
                &(&switch_coeff * &switch_value) + &(&smooth_coeff * &smooth_value)
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

fn run(flavor: Flavor, braid: &BraidWord, options: &SkeinOptions) -> Result<LaurentPoly, SkeinError> {
    let reduced = braid.free_reduce();
    if reduced.len() > options.limit {
        return Err(SkeinError::LimitExceeded {
            len: reduced.len(),
            limit: options.limit,
        });
    }
    Ok(Engine::new(flavor).value(&reduced))
}

/// Jones value of the closure of `braid`, as a polynomial in `s` where
/// `s^2 = t`. The unknot has value 1.
pub fn jones_skein(braid: &BraidWord, options: &SkeinOptions) -> Result<LaurentPoly, SkeinError> {
    run(Flavor::Jones, braid, options)
}

/// Homfly value of the closure of `braid`, in the variables `l` and `m`.
/// The unknot has value 1.
pub fn homfly_skein(braid: &BraidWord, options: &SkeinOptions) -> Result<LaurentPoly, SkeinError> {
    run(Flavor::Homfly, braid, options)
}

/// Prints a Jones value, a polynomial in `s` with `s^2 = t`, in the
/// variable `t` with half-integer exponents where needed.
pub fn jones_in_t(poly: &LaurentPoly) -> String {
    render_in_t(poly, false)
}

/// Like [`jones_in_t`] with braced LaTeX exponents.
pub fn jones_in_t_latex(poly: &LaurentPoly) -> String {
    render_in_t(poly, true)
}

fn render_in_t(poly: &LaurentPoly, latex: bool) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    debug_assert!(
        poly.vars().iter().all(|v| v == "s"),
        "Jones values are univariate in s"
    );
    let mut out = String::new();
    for (i, (exps, coeff)) in poly.sorted_terms().into_iter().enumerate() {
        let neg = coeff.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = coeff.abs();
        let e = exps.first().copied().unwrap_or(0);
        let power = t_power(e, latex);
        if power.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&power);
        }
    }
    out
}

/// Renders `t^(e/2)` for an `s`-exponent `e`.
fn t_power(e: i64, latex: bool) -> String {
    if e == 0 {
        return String::new();
    }
    if e == 2 {
        return "t".to_string();
    }
    match (e % 2 == 0, latex) {
        (true, false) => format!("t^{}", e / 2),
        (true, true) => format!("t^{{{}}}", e / 2),
        (false, false) => format!("t^{e}/2"),
        (false, true) => format!("t^{{{e}/2}}"),
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn braid(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    fn jones(strands: usize, letters: &[i32]) -> LaurentPoly {
        jones_skein(&braid(strands, letters), &SkeinOptions::default()).unwrap()
    }

    fn homfly(strands: usize, letters: &[i32]) -> LaurentPoly {
        homfly_skein(&braid(strands, letters), &SkeinOptions::default()).unwrap()
    }

    fn s_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        terms
            .iter()
            .fold(LaurentPoly::zero(), |acc, &(c, e)| &acc + &mono(c, &[("s", e)]))
    }

    #[test]
    fn unknots_and_unlinks() {
        assert!(jones(1, &[]).is_one());
        assert!(jones(2, &[1]).is_one());
        assert!(jones(2, &[-1]).is_one());
        assert_eq!(jones(2, &[]), s_poly(&[(-1, 1), (-1, -1)]));
        assert_eq!(jones(3, &[]), s_poly(&[(-1, 1), (-1, -1)]).pow(2));
        assert!(homfly(1, &[]).is_one());
        assert_eq!(
            homfly(2, &[]),
            &mono(-1, &[("l", 1), ("m", -1)]) + &mono(-1, &[("l", -1), ("m", -1)])
        );
    }

    #[test]
    fn trefoil_jones_value() {
        let value = jones(2, &[1, 1, 1]);
        assert_eq!(value, s_poly(&[(-1, -8), (1, -6), (1, -2)]));
        assert_eq!(jones_in_t(&value), "-t^-4 + t^-3 + t^-1");
    }

    #[test]
    fn mirror_trefoil_reflects_exponents() {
        assert_eq!(jones(2, &[-1, -1, -1]), s_poly(&[(-1, 8), (1, 6), (1, 2)]));
    }

    #[test]
    fn hopf_link_jones_value() {
        assert_eq!(jones(2, &[1, 1]), s_poly(&[(-1, -5), (-1, -1)]));
    }

    #[test]
    fn figure_eight_jones_value() {
        // sigma1 sigma2^-1 sigma1 sigma2^-1 closes to the figure-eight
        // knot, whose value is symmetric under t -> 1/t.
        let value = jones(3, &[1, -2, 1, -2]);
        assert_eq!(
            value,
            s_poly(&[(1, -4), (-1, -2), (1, 0), (-1, 2), (1, 4)])
        );
    }

    #[test]
    fn trefoil_homfly_value() {
        let value = homfly(2, &[1, 1, 1]);
        let expected = &(&mono(-1, &[("l", 4)]) - &mono(2, &[("l", 2)]))
            + &mono(1, &[("l", 2), ("m", 2)]);
        assert_eq!(value, expected);
    }

    #[test]
    fn connected_sum_multiplies_jones() {
        // Granny knot: trefoil on strands 1-2 then trefoil on strands 2-3.
        let granny = jones(3, &[1, 1, 1, 2, 2, 2]);
        let trefoil = jones(2, &[1, 1, 1]);
        assert_eq!(granny, &trefoil * &trefoil);
    }

    #[test]
    fn limit_is_enforced_and_overridable() {
        let long = braid(2, &[1; 17]);
        assert_eq!(
            jones_skein(&long, &SkeinOptions { limit: 16 }),
            Err(SkeinError::LimitExceeded { len: 17, limit: 16 })
        );
        assert!(jones_skein(&long, &SkeinOptions { limit: 17 }).is_ok());
        // free reduction applies before the limit check
        let reducible = braid(2, &[1, -1, 1, -1]);
        assert!(jones_skein(&reducible, &SkeinOptions { limit: 0 }).is_ok());
    }

    #[test]
    fn half_integer_rendering() {
        assert_eq!(jones_in_t(&s_poly(&[(-1, -5), (-1, -1)])), "-t^-5/2 - t^-1/2");
        assert_eq!(jones_in_t(&s_poly(&[(3, 2), (1, 0)])), "1 + 3t");
        assert_eq!(jones_in_t_latex(&s_poly(&[(-1, -5)])), "-t^{-5/2}");
        assert_eq!(jones_in_t_latex(&s_poly(&[(1, -8)])), "t^{-4}");
        assert_eq!(jones_in_t(&LaurentPoly::zero()), "0");
    }

    proptest! {
        #[test]
        fn markov_moves_preserve_jones(letters in proptest::collection::vec(-2i32..=2, 0..6)) {
            let letters: Vec<i32> = letters.into_iter().filter(|&l| l != 0).collect();
            let b = braid(3, &letters);
            let opts = SkeinOptions::default();
            let base = jones_skein(&b, &opts).unwrap();

            let conj = b.conjugate(&braid(3, &[2])).unwrap();
            prop_assert_eq!(&jones_skein(&conj, &opts).unwrap(), &base);

            let stab = b.stabilize(true);
            prop_assert_eq!(&jones_skein(&stab, &opts).unwrap(), &base);
            let stab = b.stabilize(false);
            prop_assert_eq!(&jones_skein(&stab, &opts).unwrap(), &base);
        }

        #[test]
        fn homfly_markov_moves(letters in proptest::collection::vec(-2i32..=2, 0..5)) {
            let letters: Vec<i32> = letters.into_iter().filter(|&l| l != 0).collect();
            let b = braid(3, &letters);
            let opts = SkeinOptions::default();
            let base = homfly_skein(&b, &opts).unwrap();
            let conj = b.conjugate(&braid(3, &[1])).unwrap();
            prop_assert_eq!(&homfly_skein(&conj, &opts).unwrap(), &base);
            let stab = b.stabilize(true);
            prop_assert_eq!(&homfly_skein(&stab, &opts).unwrap(), &base);
        }
    }
}
