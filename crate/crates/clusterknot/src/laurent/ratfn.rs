//! Reduced rational functions.
//!
//! A [`RationalFn`] is a quotient of two Laurent polynomials kept in a
//! unique canonical form, so the derived equality is mathematical equality.
//! The form is: numerator and denominator share no polynomial factor, the
//! denominator is an ordinary polynomial (minimum exponent zero in every
//! variable) carrying no monomial factor, and it is integer-primitive with
//! a positive leading coefficient. Units of the Laurent ring, which are the
//! rational multiples of monomials, all live in the numerator.
//!
//! A quotient whose canonical denominator is `1` is a Laurent polynomial;
//! [`RationalFn::is_laurent`] tests exactly that.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::{exact_div, poly_gcd};
use super::{graded_lex, LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Puts `num / den` into canonical form. `den` must be nonzero.
fn reduce(num: LaurentPoly, den: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return (LaurentPoly::zero(), LaurentPoly::one());
    }
    if den.num_terms() == 1 {
        // A monomial denominator is a unit: fold its inverse into the
        // numerator directly and skip the gcd.
        let (exps, c) = den.terms.iter().next().expect("single term");
        let pairs: Vec<(&str, i64)> =
            den.vars.iter().map(|v| v.as_str()).zip(exps.iter().map(|&e| -e)).collect();
        let inv = LaurentPoly::monomial(c.recip(), &pairs);
        return (&num * &inv, LaurentPoly::one());
    }

    // Split off monomial factors so the gcd sees ordinary polynomials.
    let shift = |p: &LaurentPoly| -> (Vec<(String, i64)>, LaurentPoly) {
        let mins = p.min_exponents().expect("nonzero");
        let factor: Vec<(String, i64)> =
            p.vars.iter().cloned().zip(mins.iter().copied()).collect();
        let pairs: Vec<(&str, i64)> =
            factor.iter().map(|(v, e)| (v.as_str(), -e)).collect();
        let stripped = p * &LaurentPoly::monomial(BigRational::one(), &pairs);
        (factor, stripped)
    };
    let (mn, n0) = shift(&num);
    let (md, d0) = shift(&den);

    let g = poly_gcd(&n0, &d0);
    let (mut n1, mut d1) = if g.is_one() {
        (n0, d0)
    } else {
        (exact_div(&n0, &g), exact_div(&d0, &g))
    };

    // Normalize the denominator to integer-primitive with positive leading
    // coefficient, absorbing the scalar into the numerator.
    let lcm = d1.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let gcd_num = d1
        .terms
        .values()
        .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &lcm / c.denom())));
    let mut scalar = BigRational::new(gcd_num, lcm);
    let lead_neg = d1
        .terms
        .iter()
        .max_by(|x, y| graded_lex(x.0, y.0))
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false);
    if lead_neg {
        scalar = -scalar;
    }
    let inv = scalar.recip();
    d1 = d1.scale(&inv);
    n1 = n1.scale(&inv);

    // Fold the monomial quotient back into the numerator.
    let mut mono: BTreeMap<String, i64> = BTreeMap::new();
    for (v, e) in mn {
        *mono.entry(v).or_insert(0) += e;
    }
    for (v, e) in md {
        *mono.entry(v).or_insert(0) -= e;
    }
    let pairs: Vec<(&str, i64)> = mono.iter().map(|(v, &e)| (v.as_str(), e)).collect();
    let n_final = &n1 * &LaurentPoly::monomial(BigRational::one(), &pairs);
    (n_final, d1)
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RationalFn { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFn { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RationalFn { num: LaurentPoly::from_int(n), den: LaurentPoly::one() }
    }

    pub fn var(name: &str) -> Self {
        RationalFn { num: LaurentPoly::var(name), den: LaurentPoly::one() }
    }

    /// A Laurent polynomial viewed as a rational function. Already in
    /// canonical form, so no reduction happens.
    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        let (num, den) = reduce(num, den);
        Ok(RationalFn { num, den })
    }

    fn make(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "division by zero rational function");
        let (num, den) = reduce(num, den);
        RationalFn { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical denominator is `1`, i.e. the value is a
    /// Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.is_laurent() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_laurent() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self::make(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.recip() } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    pub fn eval(&self, bindings: &BTreeMap<String, BigRational>) -> Result<BigRational, LaurentError> {
        let d = self.den.eval(bindings)?;
        if d.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(self.num.eval(bindings)? / d)
    }

    /// Substitutes rational functions for variables in both numerator and
    /// denominator. Variables not in the map are left alone.
    pub fn substitute(&self, subs: &BTreeMap<String, RationalFn>) -> Result<RationalFn, LaurentError> {
        let n = self.num.substitute(subs)?;
        let d = self.den.substitute(subs)?;
        if d.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(&n / &d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, LaurentError> {
        let num = v.get("num").ok_or_else(|| LaurentError::Parse("missing num".into()))?;
        let den = v.get("den").ok_or_else(|| LaurentError::Parse("missing den".into()))?;
        Self::new(LaurentPoly::from_json(num)?, LaurentPoly::from_json(den)?)
    }

    pub fn to_latex(&self) -> String {
        if self.is_laurent() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }
}

impl LaurentPoly {
    /// Substitutes rational functions for variables. Variables absent from
    /// the map stay as themselves, so partial substitution is fine.
    pub fn substitute(&self, subs: &BTreeMap<String, RationalFn>) -> Result<RationalFn, LaurentError> {
        let mut acc = RationalFn::zero();
        for (exps, c) in &self.terms {
            let mut t = RationalFn::constant(c.clone());
            for (v, &e) in self.vars.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                let base = match subs.get(v) {
                    Some(r) => r.clone(),
                    None => RationalFn::var(v),
                };
                if base.is_zero() && e < 0 {
                    return Err(LaurentError::BindingToZero(v.clone()));
                }
                t = &t * &base.pow(e);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl std::ops::Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::make(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::make(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::make(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFn::make(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl std::ops::Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl std::ops::Add for RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: RationalFn) -> RationalFn {
        &self + &rhs
    }
}

impl std::ops::Sub for RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: RationalFn) -> RationalFn {
        &self - &rhs
    }
}

impl std::ops::Mul for RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: RationalFn) -> RationalFn {
        &self * &rhs
    }
}

impl std::ops::Div for RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: RationalFn) -> RationalFn {
        &self / &rhs
    }
}

impl std::ops::Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}
