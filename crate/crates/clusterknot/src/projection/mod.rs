//! The projection algebra on generators `e_1 ... e_{n-1}`.
//!
//! The relations come in preset families sharing far commutation
//! `e_i e_j = e_j e_i` for `|i-j| >= 2`: the `Paper` preset (`e^2 = e`,
//! `e_i e_{i+-1} e_i = -2 e_i`), its symbolic-parameter generalization, and
//! the Temperley-Lieb family (`e^2 = delta e`, `e_i e_{i+-1} e_i = e_i`).
//! Every family shares the Catalan-indexed normal-form basis, so elements
//! are linear combinations of [`ReducedWord`]s with rational-function
//! coefficients. On top of the algebra live the braid representation
//! `sigma_i -> a e_i + b` and the diagrammatic Markov trace.

pub(crate) mod diagram;
mod normal;
mod words;

pub use words::{catalan, reduced_words, ReducedWord};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::laurent::{LaurentPoly, RationalFn};

/// Largest strand count an [`Algebra`] accepts by default; the basis is
/// Catalan-sized, so this caps memory.
pub const DEFAULT_STRAND_LIMIT: usize = 9;

/// Errors from algebra construction and operations.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("{strands} strands exceed the configured limit of {limit}")]
    StrandLimitExceeded { strands: usize, limit: usize },
    #[error("{operation} requires the {required} preset, not {got}")]
    PresetMismatch {
        operation: &'static str,
        required: &'static str,
        got: String,
    },
    #[error("generator index {index} is out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("braid on {braid} strands does not fit an algebra on {algebra} strands")]
    StrandMismatch { braid: usize, algebra: usize },
    #[error("the generator image is not invertible under these relations")]
    NotInvertible,
    #[error("invalid reduced-word runs: {0}")]
    InvalidRuns(String),
}

/// A relation family: the scalar for `e_i e_i` and for `e_i e_{i+-1} e_i`.
#[derive(Clone, Debug, PartialEq)]
pub enum RelationPreset {
    /// `e^2 = e`, `e_i e_{i+-1} e_i = -2 e_i`; braids map by `sigma_i -> e_i + 1`.
    Paper,
    /// `e^2 = e`, `e_i e_{i+-1} e_i = -((a+b)b/a^2) e_i` with symbolic `a`, `b`;
    /// braids map by `sigma_i -> a e_i + b`.
    Parametric,
    /// `e^2 = delta e`, `e_i e_{i+-1} e_i = e_i` with symbolic `delta`;
    /// braids map by `sigma_i -> e_i + 1`.
    TemperleyLieb,
    /// Arbitrary square and sandwich scalars; braids map by `sigma_i -> e_i + 1`.
    Custom { alpha: RationalFn, beta: RationalFn },
}

impl RelationPreset {
    /// Short lowercase identifier used in messages and reports.
    pub fn name(&self) -> &'static str {
        match self {
            RelationPreset::Paper => "paper",
            RelationPreset::Parametric => "parametric",
            RelationPreset::TemperleyLieb => "temperley_lieb",
            RelationPreset::Custom { .. } => "custom",
        }
    }

    fn alpha(&self) -> RationalFn {
        match self {
            RelationPreset::Paper | RelationPreset::Parametric => RationalFn::one(),
            RelationPreset::TemperleyLieb => RationalFn::var("delta"),
            RelationPreset::Custom { alpha, .. } => alpha.clone(),
        }
    }

    fn beta(&self) -> RationalFn {
        match self {
            RelationPreset::Paper => RationalFn::from_int(-2),
            RelationPreset::Parametric => {
                let a = RationalFn::var("a");
                let b = RationalFn::var("b");
                -(&(&a + &b) * &b) / (&a * &a)
            }
            RelationPreset::TemperleyLieb => RationalFn::one(),
            RelationPreset::Custom { beta, .. } => beta.clone(),
        }
    }

    /// The pair `(a, b)` with `sigma_i -> a e_i + b`.
    fn sigma_image(&self) -> (RationalFn, RationalFn) {
        match self {
            RelationPreset::Parametric => (RationalFn::var("a"), RationalFn::var("b")),
            _ => (RationalFn::one(), RationalFn::one()),
        }
    }

    /// The pair `(c, d)` with `sigma_i^{-1} -> c e_i + d`, when it exists.
    fn sigma_inverse_image(&self) -> Result<(RationalFn, RationalFn), AlgebraError> {
        match self {
            RelationPreset::Parametric => {
                // (a e + b)(c e + d) = 1 with e^2 = e forces d = 1/b and
                // c = -a / ((a+b) b).
                let a = RationalFn::var("a");
                let b = RationalFn::var("b");
                let c = -&a / (&(&a + &b) * &b);
                Ok((c, b.recip()))
            }
            _ => {
                // (e + 1)(c e + 1) = 1 with e^2 = alpha e forces
                // c = -1 / (alpha + 1).
                let denom = &self.alpha() + &RationalFn::one();
                if denom.is_zero() {
                    return Err(AlgebraError::NotInvertible);
                }
                Ok((-denom.recip(), RationalFn::one()))
            }
        }
    }
}

/// A finite linear combination of normal-form words.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    strands: usize,
    terms: BTreeMap<ReducedWord, RationalFn>,
}

impl AlgebraElement {
    /// The zero element.
    pub fn zero(strands: usize) -> Self {
        AlgebraElement {
            strands,
            terms: BTreeMap::new(),
        }
    }

    /// A single scaled word.
    pub fn from_word(strands: usize, word: ReducedWord, coeff: RationalFn) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        AlgebraElement { strands, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Words and coefficients in canonical basis order.
    pub fn terms(&self) -> &BTreeMap<ReducedWord, RationalFn> {
        &self.terms
    }

    /// The coefficient of a basis word (zero if absent).
    pub fn coefficient(&self, word: &ReducedWord) -> RationalFn {
        self.terms.get(word).cloned().unwrap_or_else(RationalFn::zero)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RationalFn) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            for (w, q) in &self.terms {
                terms.insert(w.clone(), q * c);
            }
        }
        AlgebraElement {
            strands: self.strands,
            terms,
        }
    }

    /// JSON form: strand count plus a list of scaled words.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                serde_json::json!({
                    "word": w.to_json(),
                    "display": w.to_string(),
                    "coeff": c.to_json(),
                })
            })
            .collect();
        serde_json::json!({ "strands": self.strands, "terms": terms })
    }

    fn insert_scaled(&mut self, word: ReducedWord, coeff: RationalFn) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.strands, rhs.strands, "elements live in different algebras");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert_scaled(w.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.strands, rhs.strands, "elements live in different algebras");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert_scaled(w.clone(), -c);
        }
        out
    }
}

enum CoeffKind {
    /// A plain rational number: glues flush against a word ("3e1").
    Constant,
    /// A single monomial with variables: printed as "(2a)e1".
    Monomial,
    /// Anything else: printed parenthesized with the sign kept inside,
    /// except that a single-term numerator surrenders its sign.
    Composite,
}

fn monomial_magnitude(lp: &LaurentPoly) -> (bool, String) {
    let terms = lp.sorted_terms();
    let (exps, q) = terms[0];
    let powers: Vec<(&str, i64)> = lp
        .vars()
        .iter()
        .map(String::as_str)
        .zip(exps.iter().copied())
        .collect();
    (q.is_negative(), LaurentPoly::monomial(q.abs(), &powers).to_string())
}

/// Splits a coefficient for printing into (negative sign, body, kind).
fn coeff_pieces(c: &RationalFn) -> (bool, String, CoeffKind) {
    if let Some(q) = c.as_constant() {
        return (q.is_negative(), q.abs().to_string(), CoeffKind::Constant);
    }
    if let Some(lp) = c.as_laurent() {
        if lp.num_terms() == 1 {
            let (neg, magnitude) = monomial_magnitude(lp);
            return (neg, magnitude, CoeffKind::Monomial);
        }
        return (false, lp.to_string(), CoeffKind::Composite);
    }
    if c.num().num_terms() == 1 {
        let (neg, magnitude) = monomial_magnitude(c.num());
        let body = format!("({})/({})", magnitude, c.den());
        return (neg, body, CoeffKind::Composite);
    }
    (false, c.to_string(), CoeffKind::Composite)
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (word, coeff)) in self.terms.iter().enumerate() {
            let (neg, body, kind) = coeff_pieces(coeff);
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (word.is_identity(), kind) {
                (true, CoeffKind::Constant | CoeffKind::Monomial) => write!(f, "{body}")?,
                (true, CoeffKind::Composite) => write!(f, "({body})")?,
                (false, CoeffKind::Constant) => {
                    if body == "1" {
                        write!(f, "{word}")?;
                    } else {
                        write!(f, "{body}{word}")?;
                    }
                }
                (false, _) => write!(f, "({body}){word}")?,
            }
        }
        Ok(())
    }
}

/// The projection algebra on a fixed strand count with a fixed preset.
pub struct Algebra {
    strands: usize,
    preset: RelationPreset,
    alpha: RationalFn,
    beta: RationalFn,
    memo: Mutex<HashMap<Vec<u8>, (u64, u64, ReducedWord)>>,
}

impl Algebra {
    pub fn new(strands: usize, preset: RelationPreset) -> Result<Self, AlgebraError> {
        Self::with_strand_limit(strands, preset, DEFAULT_STRAND_LIMIT)
    }

    pub fn with_strand_limit(
        strands: usize,
        preset: RelationPreset,
        limit: usize,
    ) -> Result<Self, AlgebraError> {
        assert!(strands >= 1, "an algebra needs at least one strand");
        if strands > limit {
            return Err(AlgebraError::StrandLimitExceeded { strands, limit });
        }
        Ok(Algebra {
            strands,
            alpha: preset.alpha(),
            beta: preset.beta(),
            preset,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn preset(&self) -> &RelationPreset {
        &self.preset
    }

    /// The normal-form basis in canonical order.
    pub fn basis(&self) -> Vec<ReducedWord> {
        reduced_words(self.strands)
    }

    /// The multiplicative identity.
    pub fn identity(&self) -> AlgebraElement {
        AlgebraElement::from_word(self.strands, ReducedWord::identity(), RationalFn::one())
    }

    /// The generator `e_i`.
    pub fn generator(&self, i: usize) -> Result<AlgebraElement, AlgebraError> {
        if i == 0 || i >= self.strands {
            return Err(AlgebraError::GeneratorOutOfRange {
                index: i,
                strands: self.strands,
            });
        }
        let word = ReducedWord::from_runs(vec![(i as u8, i as u8)]).expect("single run");
        Ok(AlgebraElement::from_word(self.strands, word, RationalFn::one()))
    }

    fn reduce(&self, letters: &[u8]) -> (u64, u64, ReducedWord) {
        if let Some(hit) = self.memo.lock().unwrap().get(letters) {
            return hit.clone();
        }
        let computed = normal::reduce_word(letters);
        self.memo
            .lock()
            .unwrap()
            .insert(letters.to_vec(), computed.clone());
        computed
    }

    fn scaled_word(&self, squares: u64, sandwiches: u64, word: ReducedWord) -> AlgebraElement {
        let coeff = self.alpha.pow(squares as i64) * self.beta.pow(sandwiches as i64);
        AlgebraElement::from_word(self.strands, word, coeff)
    }

    /// Rewrites a free generator word into the basis.
    pub fn normal_form(&self, letters: &[u8]) -> Result<AlgebraElement, AlgebraError> {
        for &l in letters {
            if l == 0 || l as usize >= self.strands {
                return Err(AlgebraError::GeneratorOutOfRange {
                    index: l as usize,
                    strands: self.strands,
                });
            }
        }
        let (s, t, w) = self.reduce(letters);
        Ok(self.scaled_word(s, t, w))
    }

    /// The product in this algebra's relations.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        assert_eq!(x.strands, self.strands, "element from a different algebra");
        assert_eq!(y.strands, self.strands, "element from a different algebra");
        let mut out = AlgebraElement::zero(self.strands);
        for (w1, c1) in &x.terms {
            let mut letters = w1.letters();
            let base = letters.len();
            for (w2, c2) in &y.terms {
                letters.truncate(base);
                letters.extend(w2.letters());
                let (s, t, w) = self.reduce(&letters);
                let scalar = self.alpha.pow(s as i64) * self.beta.pow(t as i64);
                out.insert_scaled(w, &(c1 * c2) * &scalar);
            }
        }
        out
    }

    /// The braid representation: positive letters map to `a e_i + b`,
    /// negative letters to the inverse image.
    pub fn rho(&self, b: &BraidWord) -> Result<AlgebraElement, AlgebraError> {
        if b.strands() != self.strands {
            return Err(AlgebraError::StrandMismatch {
                braid: b.strands(),
                algebra: self.strands,
            });
        }
        let (pa, pb) = self.preset.sigma_image();
        let mut inverse: Option<(RationalFn, RationalFn)> = None;
        let mut acc = self.identity();
        for &letter in b.letters() {
            let i = letter.unsigned_abs() as usize;
            let (ca, cb) = if letter > 0 {
                (pa.clone(), pb.clone())
            } else {
                if inverse.is_none() {
                    inverse = Some(self.preset.sigma_inverse_image()?);
                }
                inverse.clone().unwrap()
            };
            let mut image = self.generator(i)?.scale(&ca);
            image.insert_scaled(ReducedWord::identity(), cb);
            acc = self.mul(&acc, &image);
        }
        Ok(acc)
    }

    /// The integer coefficient vector of `rho(b)` over the full basis, with
    /// the cleared denominator returned alongside.
    pub fn rho_class(&self, b: &BraidWord) -> Result<(Vec<BigInt>, BigInt), AlgebraError> {
        if self.preset != RelationPreset::Paper {
            return Err(AlgebraError::PresetMismatch {
                operation: "rho_class",
                required: "paper",
                got: self.preset.name().to_string(),
            });
        }
        let elem = self.rho(b)?;
        let coeffs: Vec<BigRational> = self
            .basis()
            .iter()
            .map(|w| {
                elem.coefficient(w)
                    .as_constant()
                    .expect("paper-preset coefficients are rational constants")
            })
            .collect();
        let scale = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let entries = coeffs
            .iter()
            .map(|c| (c * BigRational::from(scale.clone())).to_integer())
            .collect();
        Ok((entries, scale))
    }

    /// The Markov trace on the Temperley-Lieb preset: each basis word is
    /// closed up as a planar diagram and contributes `delta^(loops - n)`.
    pub fn markov_trace(&self, x: &AlgebraElement) -> Result<RationalFn, AlgebraError> {
        if self.preset != RelationPreset::TemperleyLieb {
            return Err(AlgebraError::PresetMismatch {
                operation: "markov_trace",
                required: "temperley_lieb",
                got: self.preset.name().to_string(),
            });
        }
        if x.strands != self.strands {
            return Err(AlgebraError::StrandMismatch {
                braid: x.strands,
                algebra: self.strands,
            });
        }
        let delta = RationalFn::var("delta");
        let n = self.strands;
        let mut total = RationalFn::zero();
        for (word, coeff) in &x.terms {
            let (sealed, matching) = diagram::diagram_of(n, &word.letters());
            assert_eq!(sealed, 0, "normal-form words compose without loops");
            let loops = matching.closure_loops() as i64;
            total = &total + &(coeff * &delta.pow(loops - n as i64));
        }
        Ok(total)
    }

    /// Checks both braid relations on the sigma images of this preset.
    pub fn braid_relation_check(&self) -> bool {
        let (a, b) = self.preset.sigma_image();
        let image = |i: usize| {
            let mut u = self.generator(i).expect("index in range").scale(&a);
            u.insert_scaled(ReducedWord::identity(), b.clone());
            u
        };
        let n = self.strands;
        for i in 1..n.saturating_sub(1) {
            let (ui, uj) = (image(i), image(i + 1));
            let lhs = self.mul(&self.mul(&ui, &uj), &ui);
            let rhs = self.mul(&self.mul(&uj, &ui), &uj);
            if lhs != rhs {
                return false;
            }
        }
        for i in 1..n {
            for j in i + 2..n {
                let (ui, uj) = (image(i), image(j));
                if self.mul(&ui, &uj) != self.mul(&uj, &ui) {
                    return false;
                }
            }
        }
        true
    }
}

/// Checks the braid relations for the given strand count and preset.
pub fn braid_relation_check(n: usize, preset: RelationPreset) -> Result<bool, AlgebraError> {
    Ok(Algebra::new(n, preset)?.braid_relation_check())
}
