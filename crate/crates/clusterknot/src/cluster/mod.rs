//! Cluster seeds and mutation.
//!
//! A [`Seed`] bundles a skew-symmetric exchange matrix, a cluster of
//! rational functions in the initial variables `x1..xn`, and a tuple of
//! coefficients drawn from a semifield. Mutation in a direction rewrites
//! all three by the exchange relations and is an involution. The headline
//! experiment is [`check_laurent_phenomenon`], which walks mutation
//! sequences and confirms that every cluster variable produced along the
//! way stays a Laurent polynomial in the initial cluster.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::laurent::{LaurentPoly, RationalFn};

mod graph;

pub use graph::{mutation_graph, BratteliDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClusterError {
    #[error("direction {index} is frozen")]
    FrozenDirection { index: usize },
    #[error("direction {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("matrix entry ({row}, {col}) breaks skew-symmetry")]
    NotSkewSymmetric { row: usize, col: usize },
    #[error("invalid matrix description: {0}")]
    InvalidMatrix(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}

/// A square integer matrix with `b[i][j] = -b[j][i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(ClusterError::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in i..n {
                if entries[i][j] != -entries[j][i] {
                    return Err(ClusterError::NotSkewSymmetric {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(ExchangeMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Matrix mutation in direction `k` (0-based): negate row and column
    /// `k`, and add the sign-split product through `k` elsewhere.
    fn mutate(&self, k: usize) -> ExchangeMatrix {
        let n = self.rank();
        let mut out = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -self.entries[i][j]
                } else {
                    self.entries[i][j]
                        + (self.entries[i][k].abs() * self.entries[k][j]
                            + self.entries[i][k] * self.entries[k][j].abs())
                            / 2
                };
            }
        }
        ExchangeMatrix { entries: out }
    }
}

/// Where the coefficients of a seed live.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientMode {
    /// Formal coefficients `c1..cn` in the universal semifield, where the
    /// sum is ordinary addition of subtraction-free rational functions.
    Universal,
    /// Principal coefficients: `ci` starts as the tropical generator `yi`
    /// and the sum takes componentwise minima of exponents.
    Tropical,
    /// No coefficients: every `ci` is 1 (the rank-zero tropical semifield).
    Trivial,
}

impl CoefficientMode {
    pub fn name(self) -> &'static str {
        match self {
            CoefficientMode::Universal => "universal",
            CoefficientMode::Tropical => "tropical",
            CoefficientMode::Trivial => "trivial",
        }
    }
}

/// A coefficient: a subtraction-free rational function in the universal
/// semifield, or an exponent vector over the tropical generators `y1..ym`
/// where multiplication adds exponents and the sum takes componentwise
/// minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemifieldElement {
    Universal(RationalFn),
    Tropical(Vec<i64>),
}

impl SemifieldElement {
    pub fn is_one(&self) -> bool {
        match self {
            SemifieldElement::Universal(f) => f.is_one(),
            SemifieldElement::Tropical(v) => v.iter().all(|&e| e == 0),
        }
    }

    pub fn mul(&self, other: &SemifieldElement) -> SemifieldElement {
        match (self, other) {
            (SemifieldElement::Universal(a), SemifieldElement::Universal(b)) => {
                SemifieldElement::Universal(a * b)
            }
            (SemifieldElement::Tropical(a), SemifieldElement::Tropical(b)) => {
                assert_eq!(a.len(), b.len(), "tropical ranks differ");
                SemifieldElement::Tropical(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => panic!("cannot mix universal and tropical coefficients"),
        }
    }

    pub fn recip(&self) -> SemifieldElement {
        match self {
            SemifieldElement::Universal(f) => SemifieldElement::Universal(f.recip()),
            SemifieldElement::Tropical(v) => {
                SemifieldElement::Tropical(v.iter().map(|&e| -e).collect())
            }
        }
    }

    pub fn pow(&self, e: i64) -> SemifieldElement {
        match self {
            SemifieldElement::Universal(f) => SemifieldElement::Universal(f.pow(e)),
            SemifieldElement::Tropical(v) => {
                SemifieldElement::Tropical(v.iter().map(|&x| x * e).collect())
            }
        }
    }

    /// The semifield sum with 1, the only addition mutation needs.
    pub fn oplus_one(&self) -> SemifieldElement {
        match self {
            SemifieldElement::Universal(f) => {
                SemifieldElement::Universal(f + &RationalFn::one())
            }
            SemifieldElement::Tropical(v) => {
                SemifieldElement::Tropical(v.iter().map(|&e| e.min(0)).collect())
            }
        }
    }

    /// Image in the ambient field of rational functions. A tropical
    /// exponent vector maps to the monomial `y1^e1 ... ym^em`.
    pub fn to_ratfn(&self) -> RationalFn {
        match self {
            SemifieldElement::Universal(f) => f.clone(),
            SemifieldElement::Tropical(v) => {
                let names: Vec<String> =
                    (0..v.len()).map(|i| format!("y{}", i + 1)).collect();
                let powers: Vec<(&str, i64)> = names
                    .iter()
                    .map(String::as_str)
                    .zip(v.iter().copied())
                    .collect();
                RationalFn::from_poly(LaurentPoly::monomial(BigRational::one(), &powers))
            }
        }
    }
}

impl fmt::Display for SemifieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfn())
    }
}

/// An exchange matrix together with a cluster and coefficient tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    matrix: ExchangeMatrix,
    cluster: Vec<RationalFn>,
    coeffs: Vec<SemifieldElement>,
    mode: CoefficientMode,
    frozen: BTreeSet<usize>,
}

#[derive(Deserialize)]
struct MatrixFile {
    n: usize,
    entries: Vec<Vec<i64>>,
    #[serde(default)]
    frozen: Vec<serde_json::Value>,
}

impl Seed {
    /// The initial seed on `matrix`: cluster `x1..xn` and the coefficient
    /// tuple dictated by `mode`.
    pub fn new(matrix: ExchangeMatrix, mode: CoefficientMode) -> Self {
        Self::with_frozen(matrix, mode, &[]).expect("no frozen directions to validate")
    }

    /// Like [`Seed::new`] with the listed directions (1-based) frozen:
    /// they keep their cluster entries and refuse mutation.
    pub fn with_frozen(
        matrix: ExchangeMatrix,
        mode: CoefficientMode,
        frozen: &[usize],
    ) -> Result<Self, ClusterError> {
        let n = matrix.rank();
        let mut fz = BTreeSet::new();
        for &f in frozen {
            if f == 0 || f > n {
                return Err(ClusterError::IndexOutOfRange { index: f, rank: n });
            }
            fz.insert(f - 1);
        }
        let cluster = (0..n)
            .map(|i| RationalFn::var(&format!("x{}", i + 1)))
            .collect();
        let coeffs = (0..n)
            .map(|i| match mode {
                CoefficientMode::Universal => {
                    SemifieldElement::Universal(RationalFn::var(&format!("c{}", i + 1)))
                }
                CoefficientMode::Tropical => {
                    SemifieldElement::Tropical((0..n).map(|j| i64::from(j == i)).collect())
                }
                CoefficientMode::Trivial => SemifieldElement::Tropical(Vec::new()),
            })
            .collect();
        Ok(Seed {
            matrix,
            cluster,
            coeffs,
            mode,
            frozen: fz,
        })
    }

    /// A named starting matrix: `S02` is the 2x2 matrix with entry 2,
    /// `S11` the cyclic 3x3 matrix with entries 2. Both have every
    /// direction mutable.
    pub fn preset(name: &str, mode: CoefficientMode) -> Result<Self, ClusterError> {
        let entries = match name.to_ascii_uppercase().as_str() {
            "S02" => vec![vec![0, 2], vec![-2, 0]],
            "S11" => vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]],
            _ => return Err(ClusterError::UnknownPreset(name.to_string())),
        };
        let matrix = ExchangeMatrix::new(entries).expect("presets are skew-symmetric");
        Ok(Self::new(matrix, mode))
    }

    /// Reads a seed from a JSON object `{"n", "entries", "frozen"}` where
    /// `frozen` entries are 1-based indices or names like `"x2"`.
    pub fn from_matrix_json(text: &str, mode: CoefficientMode) -> Result<Self, ClusterError> {
        let file: MatrixFile =
            serde_json::from_str(text).map_err(|e| ClusterError::InvalidMatrix(e.to_string()))?;
        if file.entries.len() != file.n {
            return Err(ClusterError::InvalidMatrix(format!(
                "declared n = {} but entries have {} rows",
                file.n,
                file.entries.len()
            )));
        }
        let matrix = ExchangeMatrix::new(file.entries)?;
        let mut frozen = Vec::new();
        for v in &file.frozen {
            let idx = match v {
                serde_json::Value::Number(num) => num.as_u64().map(|u| u as usize),
                serde_json::Value::String(s) => s
                    .strip_prefix('x')
                    .and_then(|t| t.parse().ok())
                    .or_else(|| s.parse().ok()),
                _ => None,
            }
            .ok_or_else(|| ClusterError::InvalidMatrix(format!("bad frozen entry {v}")))?;
            frozen.push(idx);
        }
        Self::with_frozen(matrix, mode, &frozen)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    pub fn cluster(&self) -> &[RationalFn] {
        &self.cluster
    }

    pub fn coeffs(&self) -> &[SemifieldElement] {
        &self.coeffs
    }

    pub fn mode(&self) -> CoefficientMode {
        self.mode
    }

    /// Frozen directions, 1-based.
    pub fn frozen_directions(&self) -> Vec<usize> {
        self.frozen.iter().map(|&i| i + 1).collect()
    }

    /// Mutable directions, 1-based.
    pub fn mutable_directions(&self) -> Vec<usize> {
        (1..=self.rank())
            .filter(|d| !self.frozen.contains(&(d - 1)))
            .collect()
    }

    pub(crate) fn frozen_set(&self) -> &BTreeSet<usize> {
        &self.frozen
    }

    /// Mutates the seed in `direction` (1-based), exchanging the cluster
    /// variable, rewriting the coefficient tuple through the semifield,
    /// and mutating the matrix.
    pub fn mutate_seed(&self, direction: usize) -> Result<Seed, ClusterError> {
        let n = self.rank();
        if direction == 0 || direction > n {
            return Err(ClusterError::IndexOutOfRange {
                index: direction,
                rank: n,
            });
        }
        let k = direction - 1;
        if self.frozen.contains(&k) {
            return Err(ClusterError::FrozenDirection { index: direction });
        }

        let ck = &self.coeffs[k];
        let ck_plus = ck.oplus_one();

        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            if j == k {
                coeffs.push(ck.recip());
            } else {
                let e = self.matrix.get(k, j);
                let mut c = self.coeffs[j].clone();
                if e > 0 {
                    c = c.mul(&ck.pow(e));
                }
                coeffs.push(c.mul(&ck_plus.pow(-e)));
            }
        }

        let mut plus = RationalFn::one();
        let mut minus = RationalFn::one();
        for i in 0..n {
            let e = self.matrix.get(i, k);
            if e > 0 {
                plus = &plus * &self.cluster[i].pow(e);
            } else if e < 0 {
                minus = &minus * &self.cluster[i].pow(-e);
            }
        }
        let numerator = &(&ck.to_ratfn() * &plus) + &minus;
        let denominator = &ck_plus.to_ratfn() * &self.cluster[k];
        let mut cluster = self.cluster.clone();
        cluster[k] = &numerator / &denominator;

        Ok(Seed {
            matrix: self.matrix.mutate(k),
            cluster,
            coeffs,
            mode: self.mode,
            frozen: self.frozen.clone(),
        })
    }

    /// Checks that mutating twice in each mutable direction returns the
    /// seed unchanged.
    pub fn involutivity_check(&self) -> Result<bool, ClusterError> {
        for direction in self.mutable_directions() {
            let twice = self.mutate_seed(direction)?.mutate_seed(direction)?;
            if &twice != self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "rank": self.rank(),
            "mode": self.mode.name(),
            "matrix": self.matrix.entries(),
            "cluster": self.cluster.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "frozen": self.frozen_directions(),
        })
    }
}

/// Outcome of a Laurent phenomenon sweep.
#[derive(Clone, Debug, Serialize)]
pub struct LaurentReport {
    pub mode: String,
    pub depth: usize,
    pub mutations: u64,
    pub violations: Vec<LaurentViolation>,
}

/// A cluster variable that failed the Laurent shape test, keyed by the
/// mutation sequence that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct LaurentViolation {
    pub directions: Vec<usize>,
    pub value: String,
}

impl LaurentReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Walks every mutation sequence of length at most `depth` (skipping
/// immediate back-mutations, which only undo) and records each produced
/// cluster variable that is not Laurent over the initial cluster: with
/// trivial or tropical coefficients the variable must be a Laurent
/// polynomial with integer coefficients, polynomial in the tropical
/// generators; with universal coefficients the denominator must involve
/// the coefficient variables only.
pub fn check_laurent_phenomenon(seed: &Seed, depth: usize) -> Result<LaurentReport, ClusterError> {
    let mut report = LaurentReport {
        mode: seed.mode().name().to_string(),
        depth,
        mutations: 0,
        violations: Vec::new(),
    };
    let mut path = Vec::new();
    walk(seed, None, depth, &mut path, &mut report)?;
    Ok(report)
}

fn walk(
    seed: &Seed,
    last: Option<usize>,
    depth_left: usize,
    path: &mut Vec<usize>,
    report: &mut LaurentReport,
) -> Result<(), ClusterError> {
    if depth_left == 0 {
        return Ok(());
    }
    for direction in seed.mutable_directions() {
        if last == Some(direction) {
            continue;
        }
        let child = seed.mutate_seed(direction)?;
        path.push(direction);
        report.mutations += 1;
        let value = &child.cluster()[direction - 1];
        if !laurent_shape_ok(seed.mode(), value) {
            report.violations.push(LaurentViolation {
                directions: path.clone(),
                value: value.to_string(),
            });
        }
        walk(&child, Some(direction), depth_left - 1, path, report)?;
        path.pop();
    }
    Ok(())
}

fn laurent_shape_ok(mode: CoefficientMode, value: &RationalFn) -> bool {
    match mode {
        CoefficientMode::Trivial | CoefficientMode::Tropical => match value.as_laurent() {
            Some(lp) => lp.has_integer_coeffs() && min_exponent_of_prefix(lp, 'y') >= 0,
            None => false,
        },
        CoefficientMode::Universal => value.den().vars().iter().all(|v| !v.starts_with('x')),
    }
}

fn min_exponent_of_prefix(lp: &LaurentPoly, prefix: char) -> i64 {
    let mut min = 0;
    for (pos, name) in lp.vars().iter().enumerate() {
        if !name.starts_with(prefix) {
            continue;
        }
        for (exps, _) in lp.sorted_terms() {
            min = min.min(exps[pos]);
        }
    }
    min
}
