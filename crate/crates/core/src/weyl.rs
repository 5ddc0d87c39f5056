//! The affine Weyl group of type `C~_n` as exact affine transformations of
//! the coordinate space: canonical forms, lengths by wall counting, reduced
//! words by descent walks, and bounded enumeration.
//!
//! Elements are pairs (signed permutation, integer translation); equality is
//! componentwise, so there is no word problem anywhere. The fundamental
//! alcove is `1/2 > mu_1 > ... > mu_n > 0`, with generic interior base point
//! `p0_i = (n + 1 - i) / (2n + 2)`.

use crate::chevalley::Root;
use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::HashSet;

/// Affine map `mu -> A mu + v` with `A` a signed permutation and `v` an
/// integer vector; the canonical form of an affine Weyl group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    /// `(A mu)_i = sign[i] * mu[perm[i]]` (0-based).
    perm: Vec<u8>,
    signs: Vec<bool>,
    trans: Vec<i64>,
}

/// Word in the simple generators `s_0 .. s_n`, by index.
pub type CoxeterWord = Vec<usize>;

impl AffineWeylElement {
    pub fn identity(n: usize) -> Self {
        AffineWeylElement {
            perm: (0..n as u8).collect(),
            signs: vec![false; n],
            trans: vec![0; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self == &AffineWeylElement::identity(self.rank())
    }

    /// Apply to a rational point.
    pub fn apply(&self, mu: &[Rational64]) -> Vec<Rational64> {
        assert_eq!(mu.len(), self.rank(), "rank mismatch");
        (0..self.rank())
            .map(|i| {
                let v = mu[self.perm[i] as usize];
                let signed = if self.signs[i] { -v } else { v };
                signed + Rational64::from_integer(self.trans[i])
            })
            .collect()
    }

    pub fn multiply(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let n = self.rank();
        assert_eq!(other.rank(), n, "rank mismatch");
        let mut perm = vec![0u8; n];
        let mut signs = vec![false; n];
        let mut trans = vec![0i64; n];
        for i in 0..n {
            let j = self.perm[i] as usize;
            perm[i] = other.perm[j];
            signs[i] = self.signs[i] ^ other.signs[j];
            let moved = if self.signs[i] {
                -other.trans[j]
            } else {
                other.trans[j]
            };
            trans[i] = moved + self.trans[i];
        }
        AffineWeylElement { perm, signs, trans }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let n = self.rank();
        let mut perm = vec![0u8; n];
        let mut signs = vec![false; n];
        let mut trans = vec![0i64; n];
        for i in 0..n {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            signs[j] = self.signs[i];
            trans[j] = if self.signs[i] {
                self.trans[i]
            } else {
                -self.trans[i]
            };
        }
        AffineWeylElement { perm, signs, trans }
    }
}

impl Serialize for AffineWeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // signed 1-based source indices, negative when the sign flips
        let perm: Vec<i64> = self
            .perm
            .iter()
            .zip(self.signs.iter())
            .map(|(&p, &s)| {
                let idx = p as i64 + 1;
                if s {
                    -idx
                } else {
                    idx
                }
            })
            .collect();
        let trans: Vec<String> = self.trans.iter().map(|t| t.to_string()).collect();
        let mut st = serializer.serialize_struct("AffineWeylElement", 2)?;
        st.serialize_field("perm", &perm)?;
        st.serialize_field("trans", &trans)?;
        st.end()
    }
}

/// The simple reflection `s_i`, `0 <= i <= n`: `s_0` maps `mu_1` to
/// `1 - mu_1`, middle generators swap adjacent coordinates, `s_n` negates
/// the last coordinate.
pub fn simple_reflection(i: usize, n: usize) -> AffineWeylElement {
    assert!(i <= n, "generator index out of range");
    let mut e = AffineWeylElement::identity(n);
    if i == 0 {
        e.signs[0] = true;
        e.trans[0] = 1;
    } else if i == n {
        e.signs[n - 1] = true;
    } else {
        e.perm.swap(i - 1, i);
    }
    e
}

/// Product of the generators of a word.
pub fn from_word(word: &[usize], n: usize) -> AffineWeylElement {
    let mut acc = AffineWeylElement::identity(n);
    for &i in word {
        acc = acc.multiply(&simple_reflection(i, n));
    }
    acc
}

/// Generic interior point of the fundamental alcove.
pub fn base_point(n: usize) -> Vec<Rational64> {
    (1..=n)
        .map(|i| Rational64::new((n + 1 - i) as i64, (2 * n + 2) as i64))
        .collect()
}

fn pairing(root: Root, mu: &[Rational64]) -> Rational64 {
    match root {
        Root::Diff { i, j } => mu[i - 1] - mu[j - 1],
        Root::Sum { i, j, neg } => {
            let s = mu[i - 1] + mu[j - 1];
            if neg {
                -s
            } else {
                s
            }
        }
        Root::Long { i, neg } => {
            let s = mu[i - 1] * 2;
            if neg {
                -s
            } else {
                s
            }
        }
    }
}

fn integers_strictly_between(a: Rational64, b: Rational64) -> i64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    debug_assert!(!lo.is_integer() && !hi.is_integer(), "generic point hit a wall");
    hi.floor().to_integer() - lo.floor().to_integer()
}

/// Coxeter length: the number of affine walls separating the fundamental
/// alcove from its image.
pub fn length(w: &AffineWeylElement) -> usize {
    let n = w.rank();
    let p0 = base_point(n);
    let image = w.apply(&p0);
    let mut count = 0i64;
    for root in Root::all(n) {
        if !root.is_positive() {
            continue;
        }
        // walls for this root sit at every integer level, m = 0 included
        count += integers_strictly_between(pairing(root, &p0), pairing(root, &image));
    }
    count as usize
}

/// Indices `i` with `length(s_i w) < length(w)`: the affine simple roots
/// negative on the image alcove.
pub fn left_descents(w: &AffineWeylElement) -> Vec<usize> {
    let n = w.rank();
    let image = w.apply(&base_point(n));
    let mut out = Vec::new();
    let zero = Rational64::from_integer(0);
    let one = Rational64::from_integer(1);
    // a_0 = 1 - 2 mu_1
    if one - image[0] * 2 < zero {
        out.push(0);
    }
    for (k, root) in Root::simple(n).into_iter().enumerate() {
        if pairing(root, &image) < zero {
            out.push(k + 1);
        }
    }
    out
}

/// Canonical reduced word: repeatedly strip the lowest-index left descent.
pub fn reduced_word(w: &AffineWeylElement) -> CoxeterWord {
    let n = w.rank();
    let mut word = Vec::new();
    let mut cur = w.clone();
    while !cur.is_identity() {
        let i = *left_descents(&cur)
            .first()
            .expect("non-identity element has a descent");
        word.push(i);
        cur = simple_reflection(i, n).multiply(&cur);
    }
    word
}

/// A valid reduced word with descent choices drawn from `rng`; same length
/// as the canonical one.
pub fn reduced_word_randomized(w: &AffineWeylElement, rng: &mut impl rand::Rng) -> CoxeterWord {
    let n = w.rank();
    let mut word = Vec::new();
    let mut cur = w.clone();
    while !cur.is_identity() {
        let descents = left_descents(&cur);
        let i = descents[rng.random_range(0..descents.len())];
        word.push(i);
        cur = simple_reflection(i, n).multiply(&cur);
    }
    word
}

/// All elements of length at most `max_len`, grouped by length; deterministic
/// order within each layer.
pub fn enumerate_up_to_length(max_len: usize, n: usize) -> Vec<Vec<AffineWeylElement>> {
    let budget = 200_000usize;
    let mut seen: HashSet<AffineWeylElement> = HashSet::new();
    let identity = AffineWeylElement::identity(n);
    seen.insert(identity.clone());
    let mut layers = vec![vec![identity]];
    for _ in 0..max_len {
        let last = layers.last().expect("nonempty");
        let mut next = Vec::new();
        for w in last {
            for i in 0..=n {
                let cand = simple_reflection(i, n).multiply(w);
                if seen.insert(cand.clone()) {
                    next.push(cand);
                }
            }
        }
        assert!(seen.len() <= budget, "enumeration budget exceeded");
        next.sort_unstable();
        layers.push(next);
    }
    layers
}

/// The Coxeter matrix entry `m(i, j)` of the `C~_n` diagram, or `None` for
/// the unbounded rank-1 pair.
pub fn coxeter_order(i: usize, j: usize, n: usize) -> Option<usize> {
    assert!(i <= n && j <= n);
    if i == j {
        return Some(1);
    }
    let (a, b) = (i.min(j), i.max(j));
    if n == 1 {
        return None; // infinite dihedral
    }
    if b - a > 1 {
        return Some(2);
    }
    if (a, b) == (0, 1) || (a, b) == (n - 1, n) {
        Some(4)
    } else {
        Some(3)
    }
}

/// Multiplicative order of an element, or `None` if it exceeds the cap.
pub fn order_up_to(w: &AffineWeylElement, cap: usize) -> Option<usize> {
    let mut acc = w.clone();
    for k in 1..=cap {
        if acc.is_identity() {
            return Some(k);
        }
        acc = acc.multiply(w);
    }
    None
}
