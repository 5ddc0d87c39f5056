//! The type-`C_n` root system and the symplectic Chevalley group over the
//! rationals: generator matrices `x_a(t) = 1 + t X_a`, the derived elements
//! `w_a(t)` and `h_a(t)`, relation checks at the matrix level, and membership
//! tests for the congruence subgroups `I` and `J` inside `Sp_2n(Z_2)`.
//!
//! Matrices are `2n x 2n` in the symplectic basis `e_1..e_n, f_1..f_n`, in
//! block form `[[a, b], [c, d]]`.

use crate::cyclotomic::Rat;
use crate::dyadic::{pow_rat, valuation, Valuation};
use crate::matrix::RatMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// A root of the type-`C_n` system, `Phi = {±l_i ± l_j : i != j} u {±2l_i}`.
/// Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// `l_i - l_j`, `i != j`; positive iff `i < j`.
    Diff { i: usize, j: usize },
    /// `±(l_i + l_j)`, `i < j`.
    Sum { i: usize, j: usize, neg: bool },
    /// `±2 l_i` (the long roots).
    Long { i: usize, neg: bool },
}

impl Root {
    pub fn negate(self) -> Root {
        match self {
            Root::Diff { i, j } => Root::Diff { i: j, j: i },
            Root::Sum { i, j, neg } => Root::Sum { i, j, neg: !neg },
            Root::Long { i, neg } => Root::Long { i, neg: !neg },
        }
    }

    pub fn is_positive(self) -> bool {
        match self {
            Root::Diff { i, j } => i < j,
            Root::Sum { neg, .. } | Root::Long { neg, .. } => !neg,
        }
    }

    pub fn is_long(self) -> bool {
        matches!(self, Root::Long { .. })
    }

    fn max_index(self) -> usize {
        match self {
            Root::Diff { i, j } | Root::Sum { i, j, .. } => i.max(j),
            Root::Long { i, .. } => i,
        }
    }

    pub fn assert_rank(self, n: usize) {
        assert!(
            self.max_index() <= n && self.max_index() >= 1,
            "root {self:?} outside rank {n}"
        );
        if let Root::Diff { i, j } | Root::Sum { i, j, .. } = self {
            assert_ne!(i, j, "degenerate short root");
        }
        if let Root::Sum { i, j, .. } = self {
            assert!(i < j, "sum roots are stored with i < j");
        }
    }

    /// All `2 n^2` roots, positive ones first.
    pub fn all(n: usize) -> Vec<Root> {
        let mut pos = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                pos.push(Root::Diff { i, j });
                pos.push(Root::Sum { i, j, neg: false });
            }
            pos.push(Root::Long { i, neg: false });
        }
        let neg: Vec<Root> = pos.iter().map(|r| r.negate()).collect();
        pos.into_iter().chain(neg).collect()
    }

    /// The simple roots `a_1 .. a_n`: differences, then the long `2 l_n`.
    pub fn simple(n: usize) -> Vec<Root> {
        let mut out: Vec<Root> = (1..n).map(|i| Root::Diff { i, j: i + 1 }).collect();
        out.push(Root::Long { i: n, neg: false });
        out
    }

    /// The highest root `2 l_1`.
    pub fn highest(_n: usize) -> Root {
        Root::Long { i: 1, neg: false }
    }

    /// Value of the root on a coordinate vector.
    pub fn pairing(self, mu: &[Rat]) -> Rat {
        match self {
            Root::Diff { i, j } => &mu[i - 1] - &mu[j - 1],
            Root::Sum { i, j, neg } => {
                let s = &mu[i - 1] + &mu[j - 1];
                if neg {
                    -s
                } else {
                    s
                }
            }
            Root::Long { i, neg } => {
                let s = &mu[i - 1] + &mu[i - 1];
                if neg {
                    -s
                } else {
                    s
                }
            }
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Diff { i, j } => write!(f, "l{i}-l{j}"),
            Root::Sum { i, j, neg: false } => write!(f, "l{i}+l{j}"),
            Root::Sum { i, j, neg: true } => write!(f, "-l{i}-l{j}"),
            Root::Long { i, neg: false } => write!(f, "2l{i}"),
            Root::Long { i, neg: true } => write!(f, "-2l{i}"),
        }
    }
}

impl std::str::FromStr for Root {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let parse_idx = |t: &str| -> Result<usize, String> {
            t.strip_prefix('l')
                .ok_or_else(|| format!("bad root component {t:?}"))?
                .parse::<usize>()
                .map_err(|e| e.to_string())
        };
        if let Some(rest) = body.strip_prefix("2l") {
            let i: usize = rest
                .parse()
                .map_err(|e: std::num::ParseIntError| e.to_string())?;
            return Ok(Root::Long { i, neg });
        }
        if let Some((a, b)) = body.split_once('+') {
            let (i, j) = (parse_idx(a)?, parse_idx(b)?);
            let (i, j) = (i.min(j), i.max(j));
            return Ok(Root::Sum { i, j, neg });
        }
        if let Some((a, b)) = body.split_once('-') {
            let (i, j) = (parse_idx(a)?, parse_idx(b)?);
            // a leading minus distributes over both terms: "-l1-l2" is the
            // negative sum root, not a negated difference
            return Ok(if neg {
                Root::Sum {
                    i: i.min(j),
                    j: i.max(j),
                    neg: true,
                }
            } else {
                Root::Diff { i, j }
            });
        }
        Err(format!("unrecognised root {s:?}"))
    }
}

/// An affine root `a + m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub root: Root,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(root: Root, level: i64) -> Self {
        AffineRoot { root, level }
    }

    /// The simple affine root `a_0 = 1 - 2 l_1`.
    pub fn zero_node(n: usize) -> Self {
        AffineRoot::new(Root::highest(n).negate(), 1)
    }
}

/// One letter `x_a(t)` of a word in the Chevalley generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Letter {
    pub root: Root,
    pub t: Rat,
}

/// Word in the generators `x_a(t)`; the group element is the product of the
/// letters from left to right.
pub type GroupWord = Vec<Letter>;

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Letter", 2)?;
        s.serialize_field("root", &self.root.to_string())?;
        s.serialize_field("t", &self.t.to_string())?;
        s.end()
    }
}

/// Parse a word from its serialized form `[{"root":"2l1","t":"2"},...]`.
pub fn parse_word(json: &serde_json::Value) -> Result<GroupWord, String> {
    let arr = json.as_array().ok_or("word must be an array")?;
    arr.iter()
        .map(|item| {
            let root: Root = item["root"].as_str().ok_or("missing root")?.parse()?;
            let t: Rat = item["t"]
                .as_str()
                .ok_or("missing t")?
                .parse()
                .map_err(|e| format!("{e:?}"))?;
            Ok(Letter { root, t })
        })
        .collect()
}

/// Inverse word: reversed letters with negated parameters.
pub fn invert_word(word: &GroupWord) -> GroupWord {
    word.iter()
        .rev()
        .map(|l| Letter {
            root: l.root,
            t: -l.t.clone(),
        })
        .collect()
}

/// `w_a(t) = x_a(t) x_{-a}(-1/t) x_a(t)` as a word.
pub fn w_word(root: Root, t: &Rat) -> GroupWord {
    assert!(!t.is_zero(), "w_a(t) needs t != 0");
    let inv = -(Rat::one() / t);
    vec![
        Letter {
            root,
            t: t.clone(),
        },
        Letter {
            root: root.negate(),
            t: inv,
        },
        Letter {
            root,
            t: t.clone(),
        },
    ]
}

/// `h_a(t) = w_a(t) w_a(-1)` as a word.
pub fn h_word(root: Root, t: &Rat) -> GroupWord {
    let mut word = w_word(root, t);
    word.extend(w_word(root, &-Rat::one()));
    word
}

/// The long-Weyl representative `w = prod_i w_{2l_i}(1)` as a word.
pub fn long_weyl_word(n: usize) -> GroupWord {
    let mut word = GroupWord::new();
    for i in 1..=n {
        word.extend(w_word(Root::Long { i, neg: false }, &Rat::one()));
    }
    word
}

/// The nilpotent root-space matrix `X_a`.
pub fn root_space_matrix(root: Root, n: usize) -> RatMatrix {
    root.assert_rank(n);
    let mut m = RatMatrix::zero(2 * n, 2 * n);
    let one = Rat::one();
    match root {
        Root::Diff { i, j } => {
            // block a = E_ij, block d = -E_ji
            m[(i - 1, j - 1)] = one.clone();
            m[(n + j - 1, n + i - 1)] = -one;
        }
        Root::Sum { i, j, neg: false } => {
            m[(i - 1, n + j - 1)] = one.clone();
            m[(j - 1, n + i - 1)] = one;
        }
        Root::Sum { i, j, neg: true } => {
            m[(n + j - 1, i - 1)] = one.clone();
            m[(n + i - 1, j - 1)] = one;
        }
        Root::Long { i, neg: false } => {
            m[(i - 1, n + i - 1)] = one;
        }
        Root::Long { i, neg: true } => {
            m[(n + i - 1, i - 1)] = one;
        }
    }
    m
}

/// `x_a(t) = 1 + t X_a`.
pub fn chevalley_matrix(root: Root, t: &Rat, n: usize) -> RatMatrix {
    RatMatrix::identity(2 * n).add(&root_space_matrix(root, n).scale(t))
}

/// `(w_a(t), h_a(t))` as matrices; `t` must be nonzero.
pub fn derived_elements(root: Root, t: &Rat, n: usize) -> (RatMatrix, RatMatrix) {
    let w = matrix_of_word(&w_word(root, t), n);
    let h = matrix_of_word(&h_word(root, t), n);
    (w, h)
}

/// Product of the letters of a word.
pub fn matrix_of_word(word: &GroupWord, n: usize) -> RatMatrix {
    let mut m = RatMatrix::identity(2 * n);
    for letter in word {
        m = &m * &chevalley_matrix(letter.root, &letter.t, n);
    }
    m
}

/// The standard symplectic form matrix `[[0, 1], [-1, 0]]`.
pub fn symplectic_form(n: usize) -> RatMatrix {
    let mut omega = RatMatrix::zero(2 * n, 2 * n);
    for i in 0..n {
        omega[(i, n + i)] = Rat::one();
        omega[(n + i, i)] = -Rat::one();
    }
    omega
}

/// `M^T Omega M = Omega`, exactly.
pub fn is_symplectic(m: &RatMatrix) -> bool {
    let n = m.rows() / 2;
    let omega = symplectic_form(n);
    &(&m.transpose() * &omega) * m == omega
}

/// Steinberg relations checked at the matrix level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    R1,
    R2,
    R3,
    R4,
    R5,
}

/// Evaluate one Steinberg relation on concrete arguments. `beta` is only
/// used by R2. R2 verifies that the commutator lies in the span of the
/// positive-combination root groups by solving for the structure constants
/// per instance.
pub fn steinberg_check(
    relation: Relation,
    alpha: Root,
    beta: Option<Root>,
    t: &Rat,
    u: &Rat,
    n: usize,
) -> bool {
    match relation {
        Relation::R1 => {
            let lhs = &chevalley_matrix(alpha, t, n) * &chevalley_matrix(alpha, u, n);
            lhs == chevalley_matrix(alpha, &(t + u), n)
        }
        Relation::R2 => {
            let beta = beta.expect("R2 needs a second root");
            assert!(beta != alpha.negate(), "R2 excludes beta = -alpha");
            let xa = chevalley_matrix(alpha, t, n);
            let xb = chevalley_matrix(beta, u, n);
            let comm = &(&(&xa * &xb) * &xa.inverse().expect("unipotent"))
                * &xb.inverse().expect("unipotent");
            // candidate roots i*alpha + j*beta, i,j >= 1, ordered by i + j
            let mut remainder = comm;
            for (i, j) in [(1usize, 1usize), (2, 1), (1, 2)] {
                let Some(gamma) = integral_combination(alpha, beta, i, j, n) else {
                    continue;
                };
                // peel the gamma component off at its defining coordinate
                let xg = root_space_matrix(gamma, n);
                let (r, c) = first_nonzero(&xg);
                let coeff = &remainder[(r, c)] / &xg[(r, c)];
                let peel = chevalley_matrix(gamma, &-coeff, n);
                remainder = &peel * &remainder;
            }
            remainder.is_identity()
        }
        Relation::R3 => {
            let (w, _) = derived_elements(alpha, t, n);
            let w_inv = derived_elements(alpha, &-t.clone(), n).0;
            let lhs = &(&w * &chevalley_matrix(alpha, u, n)) * &w_inv;
            let arg = -(Rat::one() / (t * t)) * u;
            lhs == chevalley_matrix(alpha.negate(), &arg, n)
        }
        Relation::R4 => {
            let (_, h) = derived_elements(alpha, t, n);
            let h_inv = h.inverse().expect("torus element");
            let lhs = &(&h * &chevalley_matrix(alpha, u, n)) * &h_inv;
            lhs == chevalley_matrix(alpha, &(t * t * u), n)
        }
        Relation::R5 => {
            let (_, ht) = derived_elements(alpha, t, n);
            let (_, hu) = derived_elements(alpha, u, n);
            let (_, htu) = derived_elements(alpha, &(t * u), n);
            &ht * &hu == htu
        }
    }
}

/// `i*alpha + j*beta` if it is a root of `C_n`.
fn integral_combination(alpha: Root, beta: Root, i: usize, j: usize, n: usize) -> Option<Root> {
    let mut coords = vec![0i64; n];
    let add = |coords: &mut [i64], r: Root, times: i64| match r {
        Root::Diff { i, j } => {
            coords[i - 1] += times;
            coords[j - 1] -= times;
        }
        Root::Sum { i, j, neg } => {
            let s = if neg { -times } else { times };
            coords[i - 1] += s;
            coords[j - 1] += s;
        }
        Root::Long { i, neg } => {
            let s = if neg { -times } else { times };
            coords[i - 1] += 2 * s;
        }
    };
    add(&mut coords, alpha, i as i64);
    add(&mut coords, beta, j as i64);
    root_from_coords(&coords)
}

fn root_from_coords(coords: &[i64]) -> Option<Root> {
    let nonzero: Vec<(usize, i64)> = coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i + 1, c))
        .collect();
    match nonzero.as_slice() {
        [(i, 2)] => Some(Root::Long { i: *i, neg: false }),
        [(i, -2)] => Some(Root::Long { i: *i, neg: true }),
        [(i, 1), (j, -1)] => Some(Root::Diff { i: *i, j: *j }),
        [(i, -1), (j, 1)] => Some(Root::Diff { i: *j, j: *i }),
        [(i, 1), (j, 1)] => Some(Root::Sum {
            i: *i,
            j: *j,
            neg: false,
        }),
        [(i, -1), (j, -1)] => Some(Root::Sum {
            i: *i,
            j: *j,
            neg: true,
        }),
        _ => None,
    }
}

fn first_nonzero(m: &RatMatrix) -> (usize, usize) {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m[(r, c)].is_zero() {
                return (r, c);
            }
        }
    }
    panic!("zero matrix has no nonzero entry");
}

/// The congruence subgroups of `Sp_2n(Z_2)` the minimal type is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// `Sp_2n(Z_2)` itself.
    K,
    /// Iwahori: integral with mod-2 reduction in the Borel of `Sp_2n(F_2)`.
    I,
    /// Inverse image of the Borel of `O_2n(F_2)`: the Iwahori pattern with
    /// the long-root directions pushed into `2 Z_2`.
    J,
}

fn entry_is_even(x: &Rat) -> bool {
    // x is assumed 2-integral
    debug_assert!(valuation(x, 2).at_least(0));
    match valuation(x, 2) {
        Valuation::Finite(v) => v >= 1,
        Valuation::Infinite => true,
    }
}

/// Membership by entry-valuation patterns; non-integral matrices are simply
/// not members.
pub fn in_subgroup(m: &RatMatrix, which: Subgroup) -> bool {
    let two_n = m.rows();
    assert_eq!(m.cols(), two_n, "square matrices only");
    assert_eq!(two_n % 2, 0, "even size");
    let n = two_n / 2;
    if !m.is_p_integral(2) {
        return false;
    }
    if which == Subgroup::K {
        return true;
    }
    // block c must vanish mod 2 and block a must be upper triangular mod 2
    for r in 0..n {
        for c in 0..n {
            if !entry_is_even(&m[(n + r, c)]) {
                return false;
            }
            if r > c && !entry_is_even(&m[(r, c)]) {
                return false;
            }
        }
    }
    if which == Subgroup::I {
        return true;
    }
    // J additionally kills the long positive-root directions: the diagonal of
    // b^T d must vanish mod 2, which is exactly invariance of the quadratic
    // form sum x_i y_i over F_2
    for k in 0..n {
        let mut acc = Rat::zero();
        for r in 0..n {
            acc += &m[(r, n + k)] * &m[(n + r, n + k)];
        }
        if !entry_is_even(&acc) {
            return false;
        }
    }
    true
}

/// The letter `x_gamma(t) = x_a(2^m t)` of an affine root group element;
/// `t` must be 2-integral.
pub fn affine_root_letter(gamma: AffineRoot, t: &Rat) -> Letter {
    assert!(
        valuation(t, 2).at_least(0),
        "affine root group parameter must lie in Z_2"
    );
    Letter {
        root: gamma.root,
        t: t * pow_rat(2, gamma.level),
    }
}

/// Parity reduction of an integral matrix, as row-major bits; used to bridge
/// to the finite-group computations.
pub fn reduction_mod_2(m: &RatMatrix) -> Vec<bool> {
    assert!(m.is_p_integral(2), "reduction of a non-integral matrix");
    m.entries()
        .iter()
        .map(|x| {
            let two = BigInt::from(2);
            x.numer().mod_floor(&two).is_one()
        })
        .collect()
}
