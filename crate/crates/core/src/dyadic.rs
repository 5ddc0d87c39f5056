//! Rational numbers viewed inside `Q_p`: valuations, fractional parts,
//! coset enumeration, and the additive characters `psi_a`.
//!
//! Every `Q_p` element that occurs in the suites is rational, so all of this
//! is exact; no truncated p-adic expansions are ever needed.

use crate::cyclotomic::{Cyclotomic, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DyadicError {
    #[error("constancy exponent {n} below support exponent {m}")]
    BadLatticePair { m: i64, n: i64 },
    #[error("coset enumeration of size {0} exceeds the budget")]
    EnumerationBudget(u128),
}

/// p-adic valuation; `Infinite` is the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, _) => Ordering::Greater,
            (_, Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

fn int_valuation(n: &BigInt, p: u32) -> i64 {
    debug_assert!(!n.is_zero());
    if p == 2 {
        return n.trailing_zeros().expect("nonzero") as i64;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// `val_p(x)`, with `val_p(0) = Infinite`.
pub fn valuation(x: &Rat, p: u32) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let num = int_valuation(x.numer(), p);
    let den = int_valuation(x.denom(), p);
    Valuation::Finite(num - den)
}

/// Least valuation over a slice, `Infinite` for all-zero input.
pub fn min_valuation(xs: &[Rat], p: u32) -> Valuation {
    xs.iter()
        .map(|x| valuation(x, p))
        .min()
        .unwrap_or(Valuation::Infinite)
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> BigInt {
    let e = a.extended_gcd(modulus);
    assert!(e.gcd.is_one(), "inverse of non-unit");
    e.x.mod_floor(modulus)
}

/// The unique `r = m / p^k` in `[0, 1)` with `x - r` in `Z_p`.
pub fn frac_part(x: &Rat, p: u32) -> Rat {
    let k = match valuation(x, p) {
        Valuation::Finite(v) if v < 0 => (-v) as u32,
        _ => return Rat::zero(),
    };
    let pk = BigInt::from(p).pow(k);
    // x = a / (p^k * b) with b a p-adic unit
    let b = x.denom() / &pk;
    let m = (x.numer() * mod_inverse(&b, &pk)).mod_floor(&pk);
    Rat::new(m, pk)
}

/// The additive character `psi_a(x) = psi_1(a x)` of `Q_p`, of conductor
/// `c = -val(a)`: trivial on `p^c Z_p` and nontrivial on `p^{c-1} Z_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveCharacter {
    prime: u32,
    shift: Rat,
}

impl AdditiveCharacter {
    pub fn new(prime: u32, shift: Rat) -> Self {
        assert!(prime >= 2, "prime must be at least 2");
        assert!(!shift.is_zero(), "trivial character is excluded");
        AdditiveCharacter { prime, shift }
    }

    /// The character the suites fix: conductor 1 at p = 2 (`a = 1/2`), and
    /// the self-dual conductor-0 character (`a = 1`) at odd p.
    pub fn standard(prime: u32) -> Self {
        if prime == 2 {
            AdditiveCharacter::new(2, Rat::new(BigInt::one(), BigInt::from(2)))
        } else {
            AdditiveCharacter::new(prime, Rat::one())
        }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    pub fn conductor(&self) -> i64 {
        -valuation(&self.shift, self.prime)
            .finite()
            .expect("shift is nonzero")
    }

    /// `psi_a(x)` as an exact root of unity.
    pub fn eval(&self, x: &Rat) -> Cyclotomic {
        Cyclotomic::root_of_unity(&frac_part(&(&self.shift * x), self.prime))
    }
}

impl Serialize for AdditiveCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AdditiveCharacter", 2)?;
        s.serialize_field("p", &self.prime)?;
        s.serialize_field("a", &self.shift.to_string())?;
        s.end()
    }
}

/// Representatives of `p^m Z_p^n / p^N Z_p^n`, each of the form
/// `sum_{m <= j < N} d_j p^j` per coordinate. The enumeration order is the
/// mixed-radix counter with the first coordinate slowest.
pub fn coset_representatives(
    m: i64,
    n_exp: i64,
    p: u32,
    dims: usize,
) -> Result<Vec<Vec<Rat>>, DyadicError> {
    if n_exp < m {
        return Err(DyadicError::BadLatticePair { m, n: n_exp });
    }
    let per_coord = (p as u128).pow((n_exp - m) as u32);
    let total = per_coord.checked_pow(dims as u32).filter(|&t| t <= 1 << 24);
    let Some(total) = total else {
        return Err(DyadicError::EnumerationBudget(per_coord));
    };
    let scale = pow_rat(p, m);
    let coord_reps: Vec<Rat> = (0..per_coord)
        .map(|k| Rat::from_integer(BigInt::from(k)) * &scale)
        .collect();
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0u128; dims];
    loop {
        out.push(idx.iter().map(|&k| coord_reps[k as usize].clone()).collect());
        // increment with the last coordinate fastest
        let mut pos = dims;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < per_coord {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `p^k` as an exact rational, for any integer `k`.
pub fn pow_rat(p: u32, k: i64) -> Rat {
    let mag = BigInt::from(p).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rat::from_integer(mag)
    } else {
        Rat::new(BigInt::one(), mag)
    }
}

/// Canonical representative of `x` modulo `p^N Z_p`, assuming `val(x) >= m`;
/// lands in the digit set used by [`coset_representatives`].
pub fn coset_rep(x: &Rat, m: i64, n_exp: i64, p: u32) -> Rat {
    debug_assert!(valuation(x, p).at_least(m));
    if valuation(x, p).at_least(n_exp) {
        return Rat::zero();
    }
    if let Some(r) = coset_rep_small(x, m, n_exp, p) {
        return r;
    }
    let scaled = x / pow_rat(p, m); // in Z_p
    let pk = BigInt::from(p).pow((n_exp - m) as u32);
    let den = scaled.denom();
    let k = (scaled.numer() * mod_inverse(den, &pk)).mod_floor(&pk);
    Rat::from_integer(k) * pow_rat(p, m)
}

/// Machine-word path for the common case of small numerators, denominators,
/// and moduli.
fn coset_rep_small(x: &Rat, m: i64, n_exp: i64, p: u32) -> Option<Rat> {
    let k = (n_exp - m) as u32;
    let pk = (p as i128).checked_pow(k)?;
    if pk > 1 << 62 {
        return None;
    }
    let num = x.numer().to_i128()?;
    let den = x.denom().to_i128()?;
    // strip the p-parts: x = p^(va - vb) * (num' / den')
    let strip = |mut v: i128| -> (i128, u32) {
        let mut e = 0;
        while v % p as i128 == 0 {
            v /= p as i128;
            e += 1;
        }
        (v, e)
    };
    let (num_u, va) = strip(num);
    let (den_u, vb) = strip(den);
    let e = va as i64 - vb as i64 - m;
    debug_assert!(e >= 0);
    if e >= k as i64 {
        return Some(Rat::zero());
    }
    let pe = (p as i128).checked_pow(e as u32)?;
    let unit = mul_mod(num_u.rem_euclid(pk), inv_mod(den_u, pk)?, pk);
    let digits = mul_mod(pe.rem_euclid(pk), unit, pk);
    // digits * p^m as an exact rational
    let value = if m >= 0 {
        Rat::from_integer(BigInt::from(digits) * BigInt::from(p).pow(m as u32))
    } else {
        Rat::new(BigInt::from(digits), BigInt::from(p).pow((-m) as u32))
    };
    Some(value)
}

fn mul_mod(a: i128, b: i128, m: i128) -> i128 {
    debug_assert!(a >= 0 && b >= 0 && m > 0);
    (a * b).rem_euclid(m)
}

/// Inverse of `a` modulo `m` by extended Euclid on machine words; `a` must
/// be a unit.
fn inv_mod(a: i128, m: i128) -> Option<i128> {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&rat(4), 2), Valuation::Finite(2));
        assert_eq!(valuation(&ratio(3, 2), 2), Valuation::Finite(-1));
        assert_eq!(valuation(&rat(0), 2), Valuation::Infinite);
        assert_eq!(valuation(&ratio(5, 9), 3), Valuation::Finite(-2));
    }

    #[test]
    fn frac_part_examples() {
        assert_eq!(frac_part(&ratio(5, 4), 2), ratio(1, 4));
        assert_eq!(frac_part(&rat(7), 2), rat(0));
        // 1/6 - 1/2 = -1/3 is a 2-adic integer
        assert_eq!(frac_part(&ratio(1, 6), 2), ratio(1, 2));
        assert_eq!(frac_part(&ratio(-1, 4), 2), ratio(3, 4));
    }

    #[test]
    fn standard_character_values() {
        let psi = AdditiveCharacter::standard(2);
        assert_eq!(psi.conductor(), 1);
        assert!(psi.eval(&rat(2)).is_one());
        assert_eq!(psi.eval(&rat(1)), Cyclotomic::from_int(-1));
        // psi(-1/2) = e^{2 pi i 3/4} = -zeta_4
        let minus_i = Cyclotomic::root_of_unity(&ratio(1, 4)).neg();
        assert_eq!(psi.eval(&ratio(-1, 2)), minus_i);
    }

    #[test]
    fn conductor_law() {
        let cases: &[(u32, Rat)] = &[
            (2, ratio(1, 2)),
            (2, rat(1)),
            (2, rat(2)),
            (2, ratio(1, 4)),
            (3, rat(1)),
            (3, ratio(1, 3)),
        ];
        for (p, a) in cases {
            let psi = AdditiveCharacter::new(*p, a.clone());
            let c = psi.conductor();
            // trivial on p^c Z_p (sample a few lattice points)
            for k in [1i64, 2, 3, 5] {
                let x = pow_rat(*p, c) * rat(k);
                assert!(psi.eval(&x).is_one(), "psi_{a} not trivial on p^c Z_p");
            }
            // nontrivial on p^{c-1} Z_p
            let x = pow_rat(*p, c - 1);
            assert!(!psi.eval(&x).is_one(), "psi_{a} trivial below conductor");
        }
    }

    #[test]
    fn coset_representative_examples() {
        let reps = coset_representatives(0, 1, 2, 1).unwrap();
        assert_eq!(reps, vec![vec![rat(0)], vec![rat(1)]]);

        let reps = coset_representatives(-1, 1, 2, 1).unwrap();
        let values: Vec<Rat> = reps.into_iter().map(|mut v| v.pop().unwrap()).collect();
        assert_eq!(values, vec![rat(0), ratio(1, 2), rat(1), ratio(3, 2)]);

        assert_eq!(coset_representatives(0, 0, 2, 1).unwrap(), vec![vec![rat(0)]]);
        assert!(coset_representatives(1, 0, 2, 1).is_err());

        let reps = coset_representatives(0, 1, 2, 2).unwrap();
        assert_eq!(reps.len(), 4);
        assert_eq!(reps[1], vec![rat(0), rat(1)]);
    }

    #[test]
    fn coset_rep_reduces_consistently() {
        let r = coset_rep(&ratio(7, 2), -1, 2, 2);
        // 7/2 = 1/2 + 1 + 2, digits below 2^2: 1/2 + 1 + 2 = 7/2 itself
        assert_eq!(r, ratio(7, 2));
        let r = coset_rep(&ratio(9, 2), -1, 2, 2);
        // 9/2 - 1/2 = 4 in 4 Z_2
        assert_eq!(r, ratio(1, 2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn character_is_additive(
            a in -32i64..32, qa in 1u32..=6, b in -32i64..32, qb in 1u32..=6, p in prop::sample::select(vec![2u32, 3]),
        ) {
            let x = ratio(a, 1) / pow_rat(p, qa as i64 / 2);
            let y = ratio(b, 1) / pow_rat(p, qb as i64 / 2);
            let psi = AdditiveCharacter::standard(p);
            prop_assert_eq!(psi.eval(&(&x + &y)), psi.eval(&x).mul(&psi.eval(&y)));
        }

        #[test]
        fn frac_part_is_integral_shift(a in -64i64..64, q in 1i64..=48, p in prop::sample::select(vec![2u32, 3, 5])) {
            let x = ratio(a, q);
            let r = frac_part(&x, p);
            prop_assert!(valuation(&(&x - &r), p).at_least(0));
            prop_assert!(r >= rat(0) && r < rat(1));
        }
    }
}
