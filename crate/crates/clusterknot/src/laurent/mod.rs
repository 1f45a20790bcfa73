//! Multivariate Laurent polynomials and rational functions over exact
//! rationals.
//!
//! [`LaurentPoly`] keeps a sorted variable list and a map from exponent
//! vectors to nonzero [`BigRational`] coefficients. Two polynomials compare
//! equal exactly when they are mathematically equal: constructors sort the
//! variable list, drop variables that only occur with exponent zero, and
//! prune zero coefficients.
//!
//! Printing uses one canonical order everywhere: terms are sorted by total
//! degree with ties broken lexicographically on the exponent vector, both
//! ascending, so the trefoil invariant reads `-t^-4 + t^-3 + t^-1`.
//! Coefficients glue directly onto the monomial (`2t^3`, `1/2t^-1`) and
//! variables within a monomial are juxtaposed (`l^2m^2`).
//!
//! [`RationalFn`] is a reduced quotient of two Laurent polynomials. Its
//! canonical form is unique, so derived equality is semantic equality; see
//! the module docs in `ratfn`.

mod gcd;
mod ratfn;

pub use ratfn::RationalFn;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from evaluation, substitution and deserialization of polynomials
/// and rational functions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("denominator evaluates to zero")]
    ZeroDenominator,
    #[error("negative power of zero while binding {0}")]
    BindingToZero(String),
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("malformed polynomial data: {0}")]
    Parse(String),
}

/// Compares exponent vectors by total degree, then lexicographically.
/// This is the order used for printing and for leading-term selection.
pub(crate) fn graded_lex(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// A Laurent polynomial in finitely many named variables with exact
/// rational coefficients. Exponents may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    pub(crate) vars: Vec<String>,
    pub(crate) terms: BTreeMap<Vec<i64>, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    coeff: String,
    exps: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct PolyDto {
    vars: Vec<String>,
    terms: Vec<TermDto>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        LaurentPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// The polynomial consisting of a single variable.
    pub fn var(name: &str) -> Self {
        Self::monomial(BigRational::one(), &[(name, 1)])
    }

    /// A single term `coeff * prod(name^exp)`. Repeated names have their
    /// exponents added.
    pub fn monomial(coeff: BigRational, powers: &[(&str, i64)]) -> Self {
        let mut by_name: BTreeMap<&str, i64> = BTreeMap::new();
        for (name, e) in powers {
            *by_name.entry(name).or_insert(0) += e;
        }
        let vars: Vec<String> = by_name.keys().map(|s| s.to_string()).collect();
        let exps: Vec<i64> = by_name.values().copied().collect();
        let mut terms = BTreeMap::new();
        terms.insert(exps, coeff);
        let mut p = LaurentPoly { vars, terms };
        p.normalize();
        p
    }

    /// A polynomial in one variable from `(exponent, coefficient)` pairs.
    pub fn univar(name: &str, pairs: &[(i64, i64)]) -> Self {
        let terms = pairs
            .iter()
            .map(|&(e, c)| (vec![e], BigRational::from_integer(c.into())))
            .collect();
        Self::from_terms(vec![name.to_string()], terms)
    }

    /// Builds a polynomial from a variable list and raw terms. Variables
    /// need not be sorted; duplicate exponent vectors are summed.
    ///
    /// Panics on duplicate variable names or mismatched exponent lengths,
    /// both of which indicate a caller bug. Deserialization goes through
    /// [`LaurentPoly::from_json`], which reports such problems as errors.
    pub fn from_terms(vars: Vec<String>, terms: Vec<(Vec<i64>, BigRational)>) -> Self {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&i, &j| vars[i].cmp(&vars[j]));
        let sorted_vars: Vec<String> = order.iter().map(|&i| vars[i].clone()).collect();
        for w in sorted_vars.windows(2) {
            assert!(w[0] != w[1], "duplicate variable {}", w[0]);
        }
        let mut map: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            let sorted_exps: Vec<i64> = order.iter().map(|&i| exps[i]).collect();
            *map.entry(sorted_exps).or_insert_with(BigRational::zero) += c;
        }
        let mut p = LaurentPoly { vars: sorted_vars, terms: map };
        p.normalize();
        p
    }

    /// Drops zero coefficients and variables that no term uses.
    pub(crate) fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.vars.clear();
            return;
        }
        let n = self.vars.len();
        let mut used = vec![false; n];
        for exps in self.terms.keys() {
            for (u, &e) in used.iter_mut().zip(exps) {
                *u |= e != 0;
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms: BTreeMap<Vec<i64>, BigRational> = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(exps, c)| {
                let kept: Vec<i64> =
                    exps.iter().zip(&used).filter(|(_, &u)| u).map(|(&e, _)| e).collect();
                (kept, c)
            })
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    /// Rewrites both polynomials over the union of their variable lists.
    pub(crate) fn align_with(
        &self,
        other: &Self,
    ) -> (Vec<String>, BTreeMap<Vec<i64>, BigRational>, BTreeMap<Vec<i64>, BigRational>) {
        if self.vars == other.vars {
            return (self.vars.clone(), self.terms.clone(), other.terms.clone());
        }
        let mut vars: Vec<String> = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        let remap = |p: &LaurentPoly| -> BTreeMap<Vec<i64>, BigRational> {
            let idx: Vec<usize> =
                p.vars.iter().map(|v| vars.binary_search(v).expect("aligned var")).collect();
            p.terms
                .iter()
                .map(|(exps, c)| {
                    let mut ne = vec![0i64; vars.len()];
                    for (&i, &e) in idx.iter().zip(exps) {
                        ne[i] = e;
                    }
                    (ne, c.clone())
                })
                .collect()
        };
        let ta = remap(self);
        let tb = remap(other);
        (vars, ta, tb)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Returns the value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.vars.is_empty() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Terms in canonical order: total degree ascending, ties by ascending
    /// lexicographic comparison of exponent vectors.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i64>, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_lex(a.0, b.0));
        v
    }

    /// Componentwise minimum of all exponent vectors, or `None` for zero.
    pub(crate) fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, e| {
            for (a, &x) in acc.iter_mut().zip(e) {
                if x < *a {
                    *a = x;
                }
            }
            acc
        }))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at rational points. Every variable must be bound, and a
    /// variable with a negative exponent must not be bound to zero.
    pub fn eval(&self, bindings: &BTreeMap<String, BigRational>) -> Result<BigRational, LaurentError> {
        let vals: Vec<&BigRational> = self
            .vars
            .iter()
            .map(|v| bindings.get(v).ok_or_else(|| LaurentError::UnboundVariable(v.clone())))
            .collect::<Result<_, _>>()?;
        let mut acc = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for ((v, &e), name) in vals.iter().zip(exps).zip(&self.vars) {
                if e == 0 {
                    continue;
                }
                if v.is_zero() {
                    if e < 0 {
                        return Err(LaurentError::BindingToZero(name.clone()));
                    }
                    t = BigRational::zero();
                    break;
                }
                t *= rat_pow(v, e);
            }
            acc += t;
        }
        Ok(acc)
    }

    fn monomial_string(&self, exps: &[i64], latex: bool) -> String {
        let mut s = String::new();
        for (v, &e) in self.vars.iter().zip(exps) {
            if e == 0 {
                continue;
            }
            s.push_str(v);
            if e != 1 {
                if latex {
                    s.push_str(&format!("^{{{}}}", e));
                } else {
                    s.push_str(&format!("^{}", e));
                }
            }
        }
        s
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = coeff.abs();
            let mono = self.monomial_string(exps, true);
            let coeff_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            };
            if mono.is_empty() {
                out.push_str(&coeff_str);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff_str);
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dto = PolyDto {
            vars: self.vars.clone(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| TermDto { coeff: c.to_string(), exps: e.clone() })
                .collect(),
        };
        serde_json::to_value(dto).expect("polynomial serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, LaurentError> {
        use std::str::FromStr;
        let dto: PolyDto =
            serde_json::from_value(v.clone()).map_err(|e| LaurentError::Parse(e.to_string()))?;
        let mut names = dto.vars.clone();
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(LaurentError::Parse(format!("duplicate variable {}", w[0])));
            }
        }
        let mut terms = Vec::with_capacity(dto.terms.len());
        for t in dto.terms {
            if t.exps.len() != dto.vars.len() {
                return Err(LaurentError::Parse("exponent vector length mismatch".into()));
            }
            let c = BigRational::from_str(&t.coeff)
                .map_err(|e| LaurentError::Parse(format!("bad coefficient {:?}: {}", t.coeff, e)))?;
            terms.push((t.exps, c));
        }
        Ok(Self::from_terms(dto.vars, terms))
    }
}

pub(crate) fn rat_pow(base: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        k >>= 1;
        if k > 0 {
            b = &b * &b;
        }
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = coeff.abs();
            let mono = self.monomial_string(exps, false);
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (vars, mut ta, tb) = self.align_with(rhs);
        for (e, c) in tb {
            *ta.entry(e).or_insert_with(BigRational::zero) += c;
        }
        let mut p = LaurentPoly { vars, terms: ta };
        p.normalize();
        p
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (vars, mut ta, tb) = self.align_with(rhs);
        for (e, c) in tb {
            *ta.entry(e).or_insert_with(BigRational::zero) -= c;
        }
        let mut p = LaurentPoly { vars, terms: ta };
        p.normalize();
        p
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (vars, ta, tb) = self.align_with(rhs);
        let mut terms: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
        for (ea, ca) in &ta {
            for (eb, cb) in &tb {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        let mut p = LaurentPoly { vars, terms };
        p.normalize();
        p
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl std::ops::Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl std::ops::Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn display_orders_by_total_degree_ascending() {
        let p = LaurentPoly::univar("t", &[(-1, 1), (-4, -1), (-3, 1)]);
        assert_eq!(p.to_string(), "-t^-4 + t^-3 + t^-1");
    }

    #[test]
    fn display_constants_and_rational_coeffs() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_int(-3).to_string(), "-3");
        let half = LaurentPoly::monomial(rat(1, 2), &[("t", -1)]);
        assert_eq!(half.to_string(), "1/2t^-1");
        let m = LaurentPoly::monomial(rat(1, 1), &[("l", 2), ("m", 2)]);
        assert_eq!(m.to_string(), "l^2m^2");
        let p = &LaurentPoly::var("x").pow(2) + &LaurentPoly::one();
        assert_eq!(p.to_string(), "1 + x^2");
    }

    #[test]
    fn display_breaks_degree_ties_lexicographically() {
        let x = LaurentPoly::var("x");
        let y = LaurentPoly::var("y");
        let p = &(&x * &x) + &(&x * &y);
        assert_eq!(p.to_string(), "xy + x^2");
    }

    #[test]
    fn zero_exponent_variables_are_pruned() {
        let p = LaurentPoly::from_terms(
            vec!["x".into(), "y".into()],
            vec![(vec![0, 1], BigRational::one())],
        );
        assert_eq!(p, LaurentPoly::var("y"));
        assert_eq!(p.vars(), ["y".to_string()]);
    }

    #[test]
    fn arithmetic_basics() {
        let x = LaurentPoly::var("x");
        let one = LaurentPoly::one();
        let prod = &(&x + &one) * &(&x - &one);
        let expect = &x.pow(2) - &one;
        assert_eq!(prod, expect);
        assert_eq!((&x - &x), LaurentPoly::zero());
    }

    #[test]
    fn addition_aligns_distinct_variables() {
        let p = &LaurentPoly::var("y") + &LaurentPoly::var("x");
        assert_eq!(p.vars(), ["x".to_string(), "y".to_string()]);
        // Equal total degree, so the tie-break is lexicographic on the
        // exponent vectors: (0,1) sorts before (1,0).
        assert_eq!(p.to_string(), "y + x");
    }

    #[test]
    fn negative_exponent_product_cancels() {
        let t = LaurentPoly::var("t");
        let tinv = LaurentPoly::monomial(BigRational::one(), &[("t", -1)]);
        assert!((&t * &tinv).is_one());
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::from_terms(
            vec!["l".into(), "m".into()],
            vec![(vec![2, -1], rat(-3, 2)), (vec![0, 4], rat(7, 1))],
        );
        let back = LaurentPoly::from_json(&p.to_json()).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn json_rejects_bad_input() {
        let v = serde_json::json!({"vars": ["x", "x"], "terms": []});
        assert!(matches!(LaurentPoly::from_json(&v), Err(LaurentError::Parse(_))));
        let v = serde_json::json!({"vars": ["x"], "terms": [{"coeff": "1", "exps": [1, 2]}]});
        assert!(matches!(LaurentPoly::from_json(&v), Err(LaurentError::Parse(_))));
    }

    #[test]
    fn eval_handles_negative_exponents() {
        let p = LaurentPoly::monomial(BigRational::one(), &[("t", -2)]);
        let mut b = BTreeMap::new();
        b.insert("t".to_string(), rat(1, 2));
        assert_eq!(p.eval(&b).unwrap(), rat(4, 1));
        b.insert("t".to_string(), BigRational::zero());
        assert_eq!(p.eval(&b), Err(LaurentError::BindingToZero("t".into())));
        assert_eq!(
            LaurentPoly::var("u").eval(&b),
            Err(LaurentError::UnboundVariable("u".into()))
        );
    }

    #[test]
    fn latex_uses_braced_exponents() {
        let p = LaurentPoly::univar("t", &[(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(p.to_latex(), "-t^{-4} + t^{-3} + t^{-1}");
        let half = LaurentPoly::monomial(rat(-1, 2), &[("x", 1)]);
        assert_eq!(half.to_latex(), "-\\frac{1}{2}x");
    }
}
