//! Polynomial gcd and exact division, used to keep rational functions
//! reduced.
//!
//! Everything here works on ordinary polynomials: every exponent is
//! nonnegative. The gcd uses the primitive Euclidean remainder sequence.
//! Contents are pulled out one variable at a time, pseudo-division keeps
//! coefficients integral, and the result is the primitive gcd with a
//! positive leading coefficient under the graded order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{graded_lex, LaurentPoly};

/// Exact quotient `a / b`. Panics if `b` does not divide `a`; callers only
/// divide by known factors (contents and gcds).
pub(crate) fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    let (vars, ta, tb) = a.align_with(b);
    let (eb, cb) = tb
        .iter()
        .max_by(|x, y| graded_lex(x.0, y.0))
        .map(|(e, c)| (e.clone(), c.clone()))
        .expect("nonzero divisor");
    let mut rem = ta;
    let mut quot = std::collections::BTreeMap::new();
    while !rem.is_empty() {
        let (er, cr) = rem
            .iter()
            .max_by(|x, y| graded_lex(x.0, y.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonempty remainder");
        let qe: Vec<i64> = er.iter().zip(&eb).map(|(x, y)| x - y).collect();
        assert!(qe.iter().all(|&e| e >= 0), "exact division failed");
        let qc = &cr / &cb;
        for (e, c) in &tb {
            let ne: Vec<i64> = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
            *rem.entry(ne).or_insert_with(BigRational::zero) -= &qc * c;
        }
        rem.retain(|_, c| !c.is_zero());
        quot.insert(qe, qc);
    }
    let mut q = LaurentPoly { vars, terms: quot };
    q.normalize();
    q
}

/// Gcd of two ordinary polynomials with rational coefficients, returned as
/// the integer-primitive gcd with positive leading coefficient. Constant
/// factors are units here, so `poly_gcd(2x, 4x)` is `x` up to the integer
/// content convention (the primitive gcd of the primitive parts times the
/// gcd of the integer contents).
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ia = integer_scaled(a);
    let ib = integer_scaled(b);
    positive_leading(&gcd_rec(&ia, &ib))
}

/// Clears denominators, leaving an integer multiple of the input.
fn integer_scaled(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let lcm = p
        .terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.scale(&BigRational::from_integer(lcm))
}

/// Flips the sign so the graded-lex leading coefficient is positive.
fn positive_leading(p: &LaurentPoly) -> LaurentPoly {
    match p.terms.iter().max_by(|x, y| graded_lex(x.0, y.0)) {
        Some((_, c)) if c.is_negative() => -p,
        _ => p.clone(),
    }
}

/// Degree in the named variable; zero when the variable does not occur.
fn main_degree(p: &LaurentPoly, mv: &str) -> i64 {
    match p.vars.iter().position(|v| v == mv) {
        Some(i) => p.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        None => 0,
    }
}

/// Coefficient of `mv^d`, as a polynomial without `mv`.
fn main_coeff(p: &LaurentPoly, mv: &str, d: i64) -> LaurentPoly {
    let terms: Vec<(Vec<i64>, BigRational)> = match p.vars.iter().position(|v| v == mv) {
        Some(i) => p
            .terms
            .iter()
            .filter(|(e, _)| e[i] == d)
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] = 0;
                (ne, c.clone())
            })
            .collect(),
        None => {
            if d == 0 {
                p.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect()
            } else {
                Vec::new()
            }
        }
    };
    LaurentPoly::from_terms(p.vars.clone(), terms)
}

/// Content with respect to the named variable: the recursive gcd of all
/// its coefficient polynomials.
fn content_wrt(p: &LaurentPoly, mv: &str) -> LaurentPoly {
    let degrees: std::collections::BTreeSet<i64> = match p.vars.iter().position(|v| v == mv) {
        Some(i) => p.terms.keys().map(|e| e[i]).collect(),
        None => std::iter::once(0).collect(),
    };
    let mut c = LaurentPoly::zero();
    for d in degrees {
        c = gcd_rec(&c, &main_coeff(p, mv, d));
        if c.is_one() {
            break;
        }
    }
    c
}

/// Pseudo-remainder of `a` by `b` in the named variable: repeatedly scales
/// by the leading coefficient of `b` and cancels the top term, so all
/// arithmetic stays in integer polynomials.
fn prem(a: &LaurentPoly, b: &LaurentPoly, mv: &str) -> LaurentPoly {
    let db = main_degree(b, mv);
    let lb = main_coeff(b, mv, db);
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = main_degree(&r, mv);
        if dr < db {
            return r;
        }
        let lr = main_coeff(&r, mv, dr);
        let shift = LaurentPoly::monomial(BigRational::one(), &[(mv, dr - db)]);
        r = &(&r * &lb) - &(&(&shift * b) * &lr);
    }
}

fn gcd_rec(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return positive_leading(b);
    }
    if b.is_zero() {
        return positive_leading(a);
    }
    let mut vars: Vec<&String> = a.vars.iter().chain(&b.vars).collect();
    vars.sort();
    vars.dedup();
    let Some(&mv) = vars.last() else {
        // Both constants with integer values.
        let ca = a.as_constant().expect("constant");
        let cb = b.as_constant().expect("constant");
        debug_assert!(ca.is_integer() && cb.is_integer());
        let g = ca.numer().gcd(cb.numer());
        return LaurentPoly::constant(BigRational::from_integer(g));
    };
    let mv = mv.clone();
    let ca = content_wrt(a, &mv);
    let cb = content_wrt(b, &mv);
    let pa = exact_div(a, &ca);
    let pb = exact_div(b, &cb);
    let cg = gcd_rec(&ca, &cb);
    let (mut u, mut v) = if main_degree(&pa, &mv) >= main_degree(&pb, &mv) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !v.is_zero() {
        let r = prem(&u, &v, &mv);
        let next = if r.is_zero() { LaurentPoly::zero() } else { exact_div(&r, &content_wrt(&r, &mv)) };
        u = v;
        v = next;
    }
    &positive_leading(&u) * &cg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::var("x")
    }

    fn y() -> LaurentPoly {
        LaurentPoly::var("y")
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn exact_division_univariate() {
        let p = &x().pow(2) - &one();
        let q = &x() - &one();
        assert_eq!(exact_div(&p, &q), &x() + &one());
    }

    #[test]
    fn exact_division_multivariate() {
        let p = &(&x() + &y()) * &(&x().pow(2) + &(&y() * &x()));
        let q = &x() + &y();
        assert_eq!(exact_div(&p, &q), &x().pow(2) + &(&x() * &y()));
    }

    #[test]
    fn gcd_univariate_common_factor() {
        let a = &(&x().pow(2) - &one()) * &(&x() + &LaurentPoly::from_int(2));
        let b = &(&x() - &one()) * &(&x() + &LaurentPoly::from_int(3));
        assert_eq!(poly_gcd(&a, &b), &x() - &one());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = &x() + &one();
        let b = &x() - &one();
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_multivariate() {
        let g = &x() + &y();
        let a = &g * &(&x() - &y());
        let b = &g * &(&x() * &y());
        assert_eq!(poly_gcd(&a, &b), g);
    }

    #[test]
    fn gcd_ignores_rational_scalars() {
        let half = LaurentPoly::monomial(BigRational::new(1.into(), 2.into()), &[("x", 1)]);
        let a = &half * &(&x() + &one());
        let b = &x() * &(&x() + &one());
        // 1/2 x (x+1) and x (x+1): primitive gcd is x(x+1).
        assert_eq!(poly_gcd(&a, &b), &x() * &(&x() + &one()));
    }

    #[test]
    fn gcd_with_zero() {
        let a = &(-&x()) * &(&x() + &one());
        let g = poly_gcd(&a, &LaurentPoly::zero());
        // Sign normalizes to a positive leading coefficient.
        assert_eq!(g, &x() * &(&x() + &one()));
    }

    #[test]
    fn gcd_of_constants() {
        let a = LaurentPoly::from_int(6);
        let b = LaurentPoly::from_int(-4);
        assert_eq!(poly_gcd(&a, &b), LaurentPoly::from_int(2));
    }
}
