//! Kauffman bracket state sum over planar matchings.
//!
//! Each crossing opens two branches, vertical strands or a cup-cap pair,
//! weighted `A` and `1/A` for a positive letter and the reverse for a
//! negative one. Partial states are planar matchings of the strand
//! endpoints with integer weights bucketed by `A`-exponent; sealing a
//! loop multiplies by `delta = -A^2 - A^-2`. [`jones_via_bracket`]
//! corrects the closed-up sum by the writhe and substitutes `A = t^(1/4)`,
//! giving a route to the Jones value independent of the skein recursion.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::braid::BraidWord;
use crate::laurent::LaurentPoly;
use crate::projection::diagram::{compose, Matching};

use super::SkeinError;

type Weights = BTreeMap<i64, BigInt>;

fn shift(weights: &Weights, by: i64) -> Weights {
    weights.iter().map(|(&e, c)| (e + by, c.clone())).collect()
}

fn delta_mul(weights: &Weights) -> Weights {
    let mut out = Weights::new();
    for (&e, c) in weights {
        *out.entry(e + 2).or_default() -= c;
        *out.entry(e - 2).or_default() -= c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn add_into(target: &mut HashMap<Matching, Weights>, matching: Matching, weights: Weights) {
    let slot = target.entry(matching).or_default();
    for (e, c) in weights {
        let v = slot.entry(e).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            slot.remove(&e);
        }
    }
}

/// Bracket of the closure of `braid`, as a polynomial in `A`, normalized
/// so the unknot has bracket 1.
pub fn kauffman_bracket(braid: &BraidWord) -> LaurentPoly {
    let n = braid.strands();
    let mut states: HashMap<Matching, Weights> = HashMap::new();
    states.insert(
        Matching::identity(n),
        Weights::from([(0, BigInt::one())]),
    );

    for &letter in braid.letters() {
        let i = letter.unsigned_abs() as usize;
        let sign: i64 = if letter > 0 { 1 } else { -1 };
        let generator = Matching::generator(n, i);
        let mut next: HashMap<Matching, Weights> = HashMap::new();
        for (matching, weights) in &states {
            add_into(&mut next, matching.clone(), shift(weights, sign));
            let (sealed, composed) = compose(matching, &generator);
            let mut w = shift(weights, -sign);
            for _ in 0..sealed {
                w = delta_mul(&w);
            }
            add_into(&mut next, composed, w);
        }
        states = next;
    }

    let mut total = Weights::new();
    for (matching, weights) in &states {
        let mut w = weights.clone();
        for _ in 1..matching.closure_loops() {
            w = delta_mul(&w);
        }
        for (e, c) in w {
            let v = total.entry(e).or_insert_with(BigInt::zero);
            *v += c;
            if v.is_zero() {
                total.remove(&e);
            }
        }
    }

    LaurentPoly::from_terms(
        vec!["A".to_string()],
        total
            .into_iter()
            .map(|(e, c)| (vec![e], BigRational::from_integer(c)))
            .collect(),
    )
}

/// Jones value through the bracket: multiplies by `(-A)^(-3w)` for the
/// writhe `w` and rewrites `A`-exponents as `s`-exponents via
/// `A = t^(1/4)`, `s = t^(1/2)`. Comparable directly with the skein
/// recursion output.
pub fn jones_via_bracket(braid: &BraidWord) -> Result<LaurentPoly, SkeinError> {
    let bracket = kauffman_bracket(braid);
    let w = braid.writhe();
    let flip = w.rem_euclid(2) == 1;
    let mut terms = Vec::new();
    for (exps, coeff) in bracket.sorted_terms() {
        let e = exps.first().copied().unwrap_or(0) - 3 * w;
        if e.rem_euclid(2) != 0 {
            return Err(SkeinError::NonHalfIntegerPower(e));
        }
        let c = if flip { -coeff } else { coeff.clone() };
        terms.push((vec![e / 2], c));
    }
    Ok(LaurentPoly::from_terms(vec!["s".to_string()], terms))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::super::{jones_skein, SkeinOptions};
    use super::*;

    fn braid(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    fn a_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            vec!["A".to_string()],
            terms
                .iter()
                .map(|&(c, e)| (vec![e], BigRational::from_integer(c.into())))
                .collect(),
        )
    }

    #[test]
    fn single_crossing_brackets() {
        assert_eq!(kauffman_bracket(&braid(2, &[1])), a_poly(&[(-1, 3)]));
        assert_eq!(kauffman_bracket(&braid(2, &[-1])), a_poly(&[(-1, -3)]));
    }

    #[test]
    fn hopf_and_trefoil_brackets() {
        assert_eq!(kauffman_bracket(&braid(2, &[1, 1])), a_poly(&[(-1, 4), (-1, -4)]));
        assert_eq!(
            kauffman_bracket(&braid(2, &[1, 1, 1])),
            a_poly(&[(-1, 5), (-1, -3), (1, -7)])
        );
    }

    #[test]
    fn unlink_brackets() {
        assert!(kauffman_bracket(&braid(1, &[])).is_one());
        assert_eq!(kauffman_bracket(&braid(2, &[])), a_poly(&[(-1, 2), (-1, -2)]));
    }

    #[test]
    fn writhe_correction_gives_trefoil_jones() {
        let value = jones_via_bracket(&braid(2, &[1, 1, 1])).unwrap();
        let skein = jones_skein(&braid(2, &[1, 1, 1]), &SkeinOptions::default()).unwrap();
        assert_eq!(value, skein);
        assert_eq!(super::super::jones_in_t(&value), "-t^-4 + t^-3 + t^-1");
    }

    proptest! {
        #[test]
        fn bracket_route_matches_skein_route(
            letters in proptest::collection::vec(-2i32..=2, 0..7),
        ) {
            let letters: Vec<i32> = letters.into_iter().filter(|&l| l != 0).collect();
            let b = braid(3, &letters);
            let via_bracket = jones_via_bracket(&b).unwrap();
            let via_skein = jones_skein(&b, &SkeinOptions::default()).unwrap();
            prop_assert_eq!(via_bracket, via_skein);
        }

        #[test]
        fn conjugation_fixes_the_bracket(
            letters in proptest::collection::vec(-2i32..=2, 0..5),
            by in prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)],
        ) {
            let letters: Vec<i32> = letters.into_iter().filter(|&l| l != 0).collect();
            let b = braid(3, &letters);
            let conj = b.conjugate(&braid(3, &[by])).unwrap();
            prop_assert_eq!(kauffman_bracket(&conj), kauffman_bracket(&b));
        }

        #[test]
        fn stabilization_fixed_after_writhe_correction(
            letters in proptest::collection::vec(-2i32..=2, 0..5),
            positive in proptest::bool::ANY,
        ) {
            let letters: Vec<i32> = letters.into_iter().filter(|&l| l != 0).collect();
            let b = braid(3, &letters);
            let stab = b.stabilize(positive);
            prop_assert_eq!(
                jones_via_bracket(&stab).unwrap(),
                jones_via_bracket(&b).unwrap()
            );
        }
    }
}
